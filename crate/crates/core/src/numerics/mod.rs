//! Exact and log-space combinatorial primitives shared by every checker.

pub mod big;
pub mod hypergeom;
pub mod interval;
pub mod logreal;

pub use big::{binomial, factorial, falling_factorial, ln_biguint, log_binomial};
pub use hypergeom::HypergeomLaw;
pub use interval::{euler_e, kth_root, RatInterval};
pub use logreal::{logsumexp, LogReal};
