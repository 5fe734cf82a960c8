//! Verification and exhaustive search for covers of `ℤ` by residue classes and
//! of finite abelian groups by cosets.
//!
//! The library computes the Mycielski function `f(n) = Σ ord_p(n)(p − 1)`, the
//! indices `N_a` attached to points covered exactly `m` times, checks the
//! bounds `N_a ≤ 2^{k−m}` and `k ≥ m + f(N_a)` on concrete systems, decides
//! exactly when an integer divides a product `∏ (1 − ζ_s)` of cyclotomic
//! elements, and confirms everything by brute force on small instances.

pub mod abgroup;
pub mod arith;
pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod io;
pub mod report;
pub mod search;
pub mod zcover;

pub use error::{Error, Result};
pub use report::{BoundReport, Verdict, Witness};
