//! Divisibility of products `∏ (1 − ζ_s)` by a rational integer.
//!
//! For a root of unity `ζ` of order `d > 1` and any prime `p`, the normalized
//! `p`-adic valuation of `1 − ζ` is `1/φ(d)` when `d` is a power of `p` and
//! `0` otherwise. Hence `n | ∏ (1 − ζ_s)` among algebraic integers exactly when,
//! for every prime `p | n`,
//!
//! ```text
//!     Σ_{s : d_s is a power of p} 1/φ(d_s)  ≥  ord_p(n).
//! ```
//!
//! The criterion depends only on the multiset of orders `d_s`, which is all
//! this module stores.

use std::fmt;

use num_traits::Zero;

use crate::arith::{factorize, mycielski_of, phi_of, ratio, rational_from_int, Rational};
use crate::error::{domain, precondition, Result};

/// Multiset of root-of-unity orders, each at least 2. Kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderMultiset {
    orders: Vec<u64>,
}

impl OrderMultiset {
    pub fn new(mut orders: Vec<u64>) -> Result<Self> {
        if let Some(bad) = orders.iter().find(|&&d| d < 2) {
            return domain(format!("root of unity order must be at least 2, got {bad}"));
        }
        orders.sort_unstable();
        Ok(OrderMultiset { orders })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Number of entries equal to `d`.
    pub fn count(&self, d: u64) -> usize {
        self.orders.iter().filter(|&&x| x == d).count()
    }
}

impl fmt::Display for OrderMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The valuation sum for one prime `p | n` against the required `ord_p(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeCriterion {
    pub p: u64,
    pub sum: Rational,
    pub required: u32,
}

impl PrimeCriterion {
    pub fn holds(&self) -> bool {
        self.sum >= rational_from_int(self.required)
    }
}

impl fmt::Display for PrimeCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.holds() { ">=" } else { "<" };
        write!(f, "p={}: {} {} {}", self.p, self.sum, rel, self.required)
    }
}

/// `Σ 1/φ(d)` over the entries of `orders` that are powers of `p`.
pub fn valuation_sum(p: u64, orders: &OrderMultiset) -> Result<Rational> {
    let mut sum = Rational::zero();
    for &d in &orders.orders {
        let fac = factorize(d)?;
        if matches!(fac.as_prime_power(), Some((q, _)) if q == p) {
            sum += ratio(1, phi_of(&fac) as i64);
        }
    }
    Ok(sum)
}

/// Per-prime breakdown of the criterion for every prime dividing `n`.
pub fn criterion(n: u64, orders: &OrderMultiset) -> Result<Vec<PrimeCriterion>> {
    let fac = factorize(n)?;
    fac.factors()
        .iter()
        .map(|&(p, e)| {
            Ok(PrimeCriterion {
                p,
                sum: valuation_sum(p, orders)?,
                required: e,
            })
        })
        .collect()
}

/// Whether `n` divides `∏ (1 − ζ_s)` for roots of unity with the given orders.
pub fn divides_product(n: u64, orders: &OrderMultiset) -> Result<bool> {
    Ok(criterion(n, orders)?.iter().all(PrimeCriterion::holds))
}

/// The least number of non-trivial roots of unity whose `∏ (1 − ζ)` is
/// divisible by `n`, with the canonical certificate: `ord_p(n)·(p − 1)` roots
/// of order `p` for each prime `p | n`.
pub fn minimal_k(n: u64) -> Result<(u64, OrderMultiset)> {
    if n < 2 {
        return domain(format!("minimal_k needs n >= 2, got {n}"));
    }
    let fac = factorize(n)?;
    let mut orders = Vec::new();
    for &(p, e) in fac.factors() {
        let copies = u64::from(e) * (p - 1);
        orders.extend(std::iter::repeat_n(p, copies as usize));
    }
    let cert = OrderMultiset::new(orders)?;
    debug_assert_eq!(cert.len() as u64, mycielski_of(&fac));
    Ok((mycielski_of(&fac), cert))
}

/// For a multiset of exactly `f(n)` orders, decides whether it achieves the
/// divisibility. Computes both the valuation criterion and the structural
/// description (exactly `ord_p(n)(p − 1)` entries equal to `p`, nothing else)
/// and asserts they agree.
pub fn is_tight_configuration(n: u64, orders: &OrderMultiset) -> Result<bool> {
    let fac = factorize(n)?;
    let f = mycielski_of(&fac);
    if orders.len() as u64 != f {
        return precondition(format!(
            "configuration has {} entries but f({n}) = {f}",
            orders.len()
        ));
    }
    let by_valuation = divides_product(n, orders)?;
    let by_structure = fac
        .factors()
        .iter()
        .all(|&(p, e)| orders.count(p) as u64 == u64::from(e) * (p - 1));
    assert_eq!(
        by_valuation, by_structure,
        "valuation and structural characterizations disagree for n = {n}, orders = {orders}"
    );
    Ok(by_valuation)
}
