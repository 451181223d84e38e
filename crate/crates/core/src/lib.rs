//! Numerical toolkit for randomized covers of hypergraph upsets.
//!
//! The library models uniform weighted hypergraphs (`d` edges of size `k`,
//! each of weight `1/r`), their upsets and expectation-threshold weights,
//! and provides:
//!
//! * brute-force oracles on small ground sets (upset membership, minimal
//!   elements, cover checks),
//! * seeded Monte Carlo for the randomized union cover construction,
//! * log-space checkers for the two sufficient conditions on overlap laws,
//!   plus the explicit two-part cover they certify,
//! * exact clique-hypergraph overlap laws, hypergeometric tail bounds and
//!   regime scanners.
//!
//! Heavy loops (subset enumeration, Monte Carlo trials, pair enumeration,
//! grid scans) run on rayon when the default `parallel` feature is enabled
//! and fall back to sequential iteration without it. Results are identical
//! in both modes.

pub mod cliques;
pub mod conditions;
pub mod cover;
mod error;
pub mod model;
pub mod numerics;

pub use error::{Error, Result};
pub use model::{GroundSet, Instance, Subset, SubsetFamily, UpsetSummary};
pub use numerics::LogReal;
