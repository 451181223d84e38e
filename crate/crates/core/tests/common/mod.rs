use num_bigint::BigInt;
use num_rational::BigRational;

use hypercover::cliques::CliqueParams;
use hypercover::Instance;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Instance A: the 4-cycle on {0,1,2,3} with r = 2.
pub fn instance_a() -> Instance {
    Instance::from_edge_lists(
        4,
        2,
        &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        rat(2, 1),
    )
    .unwrap()
}

/// Instance B: the clique hypergraph (5, 3, 2) with r = 2.
pub fn instance_b() -> Instance {
    CliqueParams::new(5, 3, 2)
        .unwrap()
        .build_instance(rat(2, 1))
        .unwrap()
}
