//! Finite systems of residue classes `a(n) = a + nℤ` and their covering
//! properties.
//!
//! All cover predicates work on one full period `[0, L)` where `L` is the lcm
//! of the moduli; the covering function is `L`-periodic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::abgroup::{AbelianGroup, Coset, CosetSystem};
use crate::arith::{factorize, lcm_all, mycielski_f, pow2, ratio, Rational};
use crate::error::{capacity, domain, precondition, Result};
use crate::report::{BoundReport, Witness};

/// Largest period `lcm(n_1, …, n_k)` the cover predicates will enumerate.
pub const PERIOD_LIMIT: u64 = 1_000_000;
/// Largest `|J|` for the subset sums of [`znam_sums`].
pub const ZNAM_SUBSET_LIMIT: usize = 20;
/// Tolerance for the floating-point exponential-sum identity.
pub const ZNAM_TOLERANCE: f64 = 1e-9;

/// The residue class `a + nℤ`, stored with `0 ≤ a < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueClass {
    a: u64,
    n: u64,
}

impl ResidueClass {
    pub fn new(a: i64, n: u64) -> Result<Self> {
        if n == 0 || n > i64::MAX as u64 {
            return domain(format!("modulus must be in 1..=i64::MAX, got {n}"));
        }
        let a = i128::from(a).rem_euclid(i128::from(n)) as u64;
        Ok(ResidueClass { a, n })
    }

    pub fn residue(&self) -> u64 {
        self.a
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn contains(&self, x: i64) -> bool {
        i128::from(x).rem_euclid(i128::from(self.n)) as u64 == self.a
    }

    /// `(a_s − x) mod n_s` in `[0, n_s)`.
    fn offset_from(&self, x: i64) -> u64 {
        (i128::from(self.a) - i128::from(x)).rem_euclid(i128::from(self.n)) as u64
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.a, self.n)
    }
}

/// An indexed family of residue classes; duplicates are allowed and indices
/// are list positions (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZCoverSystem {
    classes: Vec<ResidueClass>,
}

impl ZCoverSystem {
    pub fn new(classes: Vec<ResidueClass>) -> Result<Self> {
        if classes.is_empty() {
            return domain("a system needs at least one residue class");
        }
        Ok(ZCoverSystem { classes })
    }

    /// Builds a system from `(a, n)` pairs.
    pub fn from_pairs(pairs: &[(i64, u64)]) -> Result<Self> {
        let classes = pairs
            .iter()
            .map(|&(a, n)| ResidueClass::new(a, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(classes)
    }

    pub fn classes(&self) -> &[ResidueClass] {
        &self.classes
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// `lcm` of all moduli, guarded by [`PERIOD_LIMIT`].
    pub fn period(&self) -> Result<u64> {
        let moduli: Vec<u64> = self.classes.iter().map(|c| c.n).collect();
        match lcm_all(&moduli) {
            Ok(l) if l <= PERIOD_LIMIT => Ok(l),
            Ok(l) => capacity(format!("period {l} exceeds {PERIOD_LIMIT}")),
            Err(_) => capacity(format!("period of {moduli:?} overflows")),
        }
    }

    /// The covering function `w(x)`.
    pub fn multiplicity(&self, x: i64) -> usize {
        self.classes.iter().filter(|c| c.contains(x)).count()
    }

    /// `w(x)` for `x = 0, 1, …, L − 1`.
    pub fn multiplicity_table(&self) -> Result<Vec<u32>> {
        let period = self.period()?;
        let mut table = vec![0u32; period as usize];
        for c in &self.classes {
            let mut x = c.a;
            while x < period {
                table[x as usize] += 1;
                x += c.n;
            }
        }
        Ok(table)
    }

    pub fn is_m_cover(&self, m: u32) -> Result<bool> {
        check_m(m)?;
        Ok(self.multiplicity_table()?.iter().all(|&w| w >= m))
    }

    pub fn is_exact_m_cover(&self, m: u32) -> Result<bool> {
        check_m(m)?;
        Ok(self.multiplicity_table()?.iter().all(|&w| w == m))
    }

    /// An m-cover none of whose proper subsystems is one. Being an m-cover is
    /// monotone under adding classes, so it suffices to drop one class at a time.
    pub fn is_minimal_m_cover(&self, m: u32) -> Result<bool> {
        if !self.is_m_cover(m)? {
            return Ok(false);
        }
        Ok(self.irredundant_indices(m)?.len() == self.k())
    }

    /// Indices `t` such that the system without class `t` is not an m-cover.
    pub fn irredundant_indices(&self, m: u32) -> Result<Vec<usize>> {
        check_m(m)?;
        let table = self.multiplicity_table()?;
        let period = table.len() as u64;
        let mut out = Vec::new();
        for (t, c) in self.classes.iter().enumerate() {
            let outside_fails = table
                .iter()
                .enumerate()
                .any(|(x, &w)| x as u64 % c.n != c.a && w < m);
            let inside_fails = (c.a..period)
                .step_by(c.n as usize)
                .any(|x| table[x as usize] - 1 < m);
            if outside_fails || inside_fails {
                out.push(t);
            }
        }
        Ok(out)
    }

    /// Indices of the classes containing `a`.
    pub fn containing(&self, a: i64) -> Vec<usize> {
        (0..self.k()).filter(|&s| self.classes[s].contains(a)).collect()
    }

    /// `N_a = lcm{ n_s : a ∈ a_s(n_s) }`, which is 1 when no class contains `a`.
    pub fn n_a(&self, a: i64) -> Result<u64> {
        let moduli: Vec<u64> = self.containing(a).iter().map(|&s| self.classes[s].n).collect();
        lcm_all(&moduli)
    }

    fn require_base_point(&self, m: u32, a: i64) -> Result<()> {
        if !self.is_m_cover(m)? {
            return precondition(format!("system is not an {m}-cover of Z"));
        }
        let w = self.multiplicity(a);
        if w != m as usize {
            return precondition(format!("w({a}) = {w}, expected exactly m = {m}"));
        }
        Ok(())
    }
}

impl fmt::Display for ZCoverSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.classes.iter().map(ResidueClass::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        return domain("cover multiplicity m must be at least 1");
    }
    Ok(())
}

/// The refinement at one prime `p | N_a`: the index set
/// `I(p) = { s : n_s / p^{ord_p(n_s)} | a_s − a, n_s ∤ a_s − a }` and the chain
/// `|I(p)| ≥ Σ_{s ∈ I(p)} p^{-(ord_p(n_s) − ord_p(a_s − a) − 1)} ≥ ord_p(N_a)(p − 1)`.
#[derive(Debug, Clone, Serialize)]
pub struct PrimeRefinement {
    pub p: u64,
    pub members: Vec<usize>,
    #[serde(serialize_with = "ser_rational")]
    pub middle: Rational,
    pub rhs: u64,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidueBoundReport {
    pub k: usize,
    pub m: u32,
    pub a: i64,
    pub n_a: u64,
    pub f_n_a: u64,
    pub primes: Vec<PrimeRefinement>,
    pub report: BoundReport,
}

impl ResidueBoundReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Checks `k ≥ m + f(N_a)`, `N_a ≤ 2^{k−m}` and the per-prime refinement for an
/// m-cover and a point `a` covered exactly `m` times.
pub fn check_residue_cover_bounds(system: &ZCoverSystem, m: u32, a: i64) -> Result<ResidueBoundReport> {
    system.require_base_point(m, a)?;
    let k = system.k();
    let slack = (k - m as usize) as u64;
    let n_a = system.n_a(a)?;
    let fac = factorize(n_a)?;
    let f_n_a = crate::arith::mycielski_of(&fac);

    let subject = format!("a={a}");
    let mut report = BoundReport::new("residue cover bounds");
    report.push(Witness::new(&subject, "k - m >= f(N_a)", int(slack), int(f_n_a)));
    if let Some(bound) = pow2(slack) {
        report.push(Witness::new(&subject, "2^(k-m) >= N_a", int(bound), int(n_a)));
    }

    let mut primes = Vec::new();
    for &(p, e) in fac.factors() {
        let mut members = Vec::new();
        let mut middle = Rational::from_integer(0.into());
        for (s, c) in system.classes.iter().enumerate() {
            let ord_n = exponent_of(c.n, p);
            let cofactor = c.n / p.pow(ord_n);
            let d = c.offset_from(a);
            // d ≡ a_s − a (mod n_s); both divisibility tests only depend on d mod n_s.
            if d % cofactor != 0 || d == 0 {
                continue;
            }
            let ord_d = exponent_of(d, p);
            assert!(
                ord_d < ord_n,
                "ord_p(a_s - a) must be below ord_p(n_s) inside I(p)"
            );
            members.push(s);
            let shift = ord_n - ord_d - 1;
            middle += ratio(1, p.pow(shift) as i64);
        }
        let rhs = u64::from(e) * (p - 1);
        let subj = format!("a={a}, p={p}");
        report.push(Witness::new(
            &subj,
            "|I(p)| >= sum 1/p^(ord_p(n_s)-ord_p(a_s-a)-1)",
            int(members.len() as u64),
            middle.clone(),
        ));
        report.push(Witness::new(
            &subj,
            "sum 1/p^(ord_p(n_s)-ord_p(a_s-a)-1) >= ord_p(N_a)(p-1)",
            middle.clone(),
            int(rhs),
        ));
        primes.push(PrimeRefinement {
            p,
            members,
            middle,
            rhs,
        });
    }
    Ok(ResidueBoundReport {
        k,
        m,
        a,
        n_a,
        f_n_a,
        primes,
        report,
    })
}

fn exponent_of(mut n: u64, p: u64) -> u32 {
    debug_assert!(n > 0);
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// Parameters of the exponential sums `C_r(α)`: base point `a`, an integer
/// multiplier `m_s` for each class not containing `a`, and `α ∈ [0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZnamSumSpec {
    pub a: i64,
    pub multipliers: BTreeMap<usize, i64>,
    pub alpha: Rational,
}

/// Subset sums grouped by the realized `α`: for each `α`, the vector
/// `C_0(α), …, C_{N_a − 1}(α)`.
#[derive(Debug, Clone)]
pub struct ZnamTable {
    pub n_a: u64,
    pub sums: BTreeMap<Rational, Vec<Complex64>>,
}

impl ZnamTable {
    /// `max_α max_r |C_r(α) − C_0(α)|`.
    pub fn max_residual(&self) -> f64 {
        self.sums
            .values()
            .flat_map(|row| row.iter().map(move |c| (c - row[0]).norm()))
            .fold(0.0, f64::max)
    }
}

/// Indices `s` with `a ∉ a_s(n_s)`.
pub fn uncovered_indices(system: &ZCoverSystem, a: i64) -> Vec<usize> {
    (0..system.k()).filter(|&s| !system.classes[s].contains(a)).collect()
}

/// Computes every `C_r(α)` at once by enumerating the subsets `I ⊆ J`.
///
/// The fractional part `{Σ_{s∈I} m_s/n_s}` and the exponent
/// `Σ_{s∈I} (a_s − a) m_s / n_s` are tracked exactly as residues modulo the lcm
/// of the moduli in `J`; only the final exponentials are floating point.
pub fn znam_table(system: &ZCoverSystem, a: i64, multipliers: &BTreeMap<usize, i64>) -> Result<ZnamTable> {
    let j = uncovered_indices(system, a);
    let keys: Vec<usize> = multipliers.keys().copied().collect();
    if keys != j {
        return domain(format!(
            "multipliers must be given exactly for the classes not containing a: expected {j:?}, got {keys:?}"
        ));
    }
    if multipliers.values().any(|&m| m == 0) {
        return domain("multipliers must be nonzero");
    }
    if j.len() > ZNAM_SUBSET_LIMIT {
        return capacity(format!("|J| = {} exceeds {ZNAM_SUBSET_LIMIT}", j.len()));
    }
    let n_a = system.n_a(a)?;
    let moduli: Vec<u64> = j.iter().map(|&s| system.classes[s].n).collect();
    let l = lcm_all(&moduli)?;
    if l > PERIOD_LIMIT {
        return capacity(format!("lcm of moduli in J is {l}, above {PERIOD_LIMIT}"));
    }
    let l128 = i128::from(l);
    // Per class: (m_s/n_s mod 1, (a_s − a) m_s / n_s mod 1), both scaled by l.
    let steps: Vec<(i128, i128)> = j
        .iter()
        .map(|&s| {
            let c = &system.classes[s];
            let n = i128::from(c.n);
            let ms = i128::from(multipliers[&s]);
            let scale = l128 / n;
            let frac = ms.rem_euclid(n) * scale;
            let phase = (i128::from(c.offset_from(a)) * ms).rem_euclid(n) * scale;
            (frac, phase)
        })
        .collect();

    // (alpha numerator over l) -> r -> (signed count per phase residue).
    let mut buckets: BTreeMap<u64, BTreeMap<u64, BTreeMap<u64, i64>>> = BTreeMap::new();
    let n_a128 = i128::from(n_a);
    let mut frac = 0i128;
    let mut phase = 0i128;
    let mut in_set = vec![false; j.len()];
    let total: u64 = 1 << j.len();
    for step in 0..total {
        if step > 0 {
            // Gray code: flip the lowest set bit position of `step`.
            let bit = step.trailing_zeros() as usize;
            let (df, dp) = steps[bit];
            if in_set[bit] {
                frac -= df;
                phase -= dp;
            } else {
                frac += df;
                phase += dp;
            }
            in_set[bit] = !in_set[bit];
            frac = frac.rem_euclid(l128);
            phase = phase.rem_euclid(l128);
        }
        let size = in_set.iter().filter(|&&b| b).count();
        let sign = if size % 2 == 0 { 1 } else { -1 };
        let scaled = n_a128 * frac;
        let r = (scaled / l128) as u64;
        let alpha_num = (scaled % l128) as u64;
        *buckets
            .entry(alpha_num)
            .or_default()
            .entry(r)
            .or_default()
            .entry(phase as u64)
            .or_default() += sign;
    }

    let mut sums = BTreeMap::new();
    for (alpha_num, rows) in buckets {
        let mut row = vec![Complex64::new(0.0, 0.0); n_a as usize];
        for (r, phases) in rows {
            row[r as usize] = phases
                .into_iter()
                .map(|(u, count)| count as f64 * unit(u, l))
                .sum();
        }
        sums.insert(ratio(alpha_num as i64, l as i64), row);
    }
    Ok(ZnamTable { n_a, sums })
}

fn unit(u: u64, l: u64) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU * u as f64 / l as f64)
}

/// `C_0(α), …, C_{N_a − 1}(α)` for the given parameters. When `α` is not
/// realized by any subset every entry is zero.
pub fn znam_sums(system: &ZCoverSystem, spec: &ZnamSumSpec) -> Result<Vec<Complex64>> {
    let zero = Rational::from_integer(0.into());
    if spec.alpha < zero || spec.alpha >= Rational::from_integer(1.into()) {
        return domain(format!("alpha must lie in [0, 1), got {}", spec.alpha));
    }
    let table = znam_table(system, spec.a, &spec.multipliers)?;
    Ok(table
        .sums
        .get(&spec.alpha)
        .cloned()
        .unwrap_or_else(|| vec![Complex64::new(0.0, 0.0); table.n_a as usize]))
}

/// For an m-cover and `a` with `w(a) = m`, the largest deviation
/// `|C_r(α) − C_0(α)|` over all realized `α` and all `r`.
pub fn znam_identity_residual(
    system: &ZCoverSystem,
    m: u32,
    a: i64,
    multipliers: &BTreeMap<usize, i64>,
) -> Result<f64> {
    system.require_base_point(m, a)?;
    Ok(znam_table(system, a, multipliers)?.max_residual())
}

/// Multipliers `m_s = 1` for every class not containing `a`.
pub fn unit_multipliers(system: &ZCoverSystem, a: i64) -> BTreeMap<usize, i64> {
    uncovered_indices(system, a).into_iter().map(|s| (s, 1)).collect()
}

/// Whether `m_s` makes `e^{2πi(a_s − a)m_s/n_s}` a non-trivial root of unity,
/// i.e. `n_s / gcd(n_s, a_s − a)` does not divide `m_s`.
pub fn is_valid_multiplier(class: &ResidueClass, a: i64, m_s: i64) -> bool {
    let d = class.offset_from(a);
    let q = class.n / class.n.gcd(&d);
    q > 1 && i128::from(m_s).rem_euclid(i128::from(q)) != 0
}

/// The same system read as cosets `a + ⟨n⟩` of the cyclic group of order
/// `period()`. Covering multiplicities and every `N_a` carry over unchanged.
pub fn as_cyclic_cosets(system: &ZCoverSystem) -> Result<CosetSystem> {
    let period = system.period()?;
    let group = AbelianGroup::cyclic(period)?;
    let cosets = system
        .classes
        .iter()
        .map(|c| {
            let rep = group.element(&[c.a as i64])?;
            let gen = group.element(&[c.n as i64])?;
            Coset::from_generators(&group, &rep, &[gen])
        })
        .collect::<Result<Vec<_>>>()?;
    CosetSystem::new(group, cosets)
}

/// `m − 1` copies of `0(1)` followed by `1(2), 2(4), …, 2^{j−1}(2^j), 0(2^j)`
/// with `j = k − m`: an exact m-cover with `k = m + f(2^{k−m})` in which the
/// last class is irredundant.
pub fn build_extremal_zcover(k: u32, m: u32) -> Result<ZCoverSystem> {
    if m == 0 || k <= m {
        return domain(format!("need k > m >= 1, got k = {k}, m = {m}"));
    }
    let j = k - m;
    if j > 30 {
        return capacity(format!("k - m = {j} exceeds 30"));
    }
    let mut classes = Vec::with_capacity(k as usize);
    for _ in 1..m {
        classes.push(ResidueClass::new(0, 1)?);
    }
    for i in 1..=j {
        classes.push(ResidueClass::new(1i64 << (i - 1), 1u64 << i)?);
    }
    classes.push(ResidueClass::new(0, 1u64 << j)?);
    debug_assert_eq!(classes.len() as u64, u64::from(m) + mycielski_f(1 << j).unwrap_or(0));
    ZCoverSystem::new(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(pairs: &[(i64, u64)]) -> ZCoverSystem {
        ZCoverSystem::from_pairs(pairs).unwrap()
    }

    fn znam_example() -> ZCoverSystem {
        sys(&[(0, 2), (1, 4), (3, 8), (7, 8)])
    }

    #[test]
    fn residue_class_normalizes() {
        let c = ResidueClass::new(-3, 8).unwrap();
        assert_eq!(c.residue(), 5);
        assert!(c.contains(13) && c.contains(-3) && !c.contains(3));
        assert!(ResidueClass::new(0, 0).is_err());
        assert!(ZCoverSystem::new(vec![]).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(sys(&[(0, 2), (1, 2)]).multiplicity(5), 1);
        assert_eq!(sys(&[(0, 1), (0, 1)]).multiplicity(7), 2);
        assert_eq!(znam_example().multiplicity(3), 1);
    }

    #[test]
    fn cover_predicates() {
        let s = znam_example();
        assert!(s.is_m_cover(1).unwrap());
        assert!(s.is_exact_m_cover(1).unwrap());
        assert!(s.is_minimal_m_cover(1).unwrap());
        assert!(!sys(&[(0, 2), (1, 4)]).is_m_cover(1).unwrap());
        assert!(!sys(&[(0, 1)]).is_m_cover(2).unwrap());
        assert!(!sys(&[(0, 2), (0, 2)]).is_exact_m_cover(1).unwrap());
        assert!(sys(&[(0, 1), (1, 2), (2, 4), (0, 4)]).is_exact_m_cover(2).unwrap());
        assert!(!sys(&[(0, 2), (1, 2), (0, 4)]).is_minimal_m_cover(1).unwrap());
        assert!(sys(&[(0, 1)]).is_minimal_m_cover(1).unwrap());
        assert!(s.is_m_cover(0).is_err());
    }

    #[test]
    fn irredundant_examples() {
        assert_eq!(znam_example().irredundant_indices(1).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(sys(&[(0, 2), (1, 2), (0, 4)]).irredundant_indices(1).unwrap(), vec![0, 1]);
        assert!(sys(&[(0, 1), (0, 1)]).irredundant_indices(1).unwrap().is_empty());
    }

    #[test]
    fn period_guard() {
        let s = sys(&[(0, 1_000_003), (0, 2)]);
        assert!(matches!(s.is_m_cover(1), Err(crate::Error::Capacity(_))));
    }

    #[test]
    fn n_a_examples() {
        assert_eq!(sys(&[(0, 2), (1, 2), (1, 4)]).n_a(0).unwrap(), 2);
        assert_eq!(znam_example().n_a(7).unwrap(), 8);
        assert_eq!(sys(&[(1, 2)]).n_a(0).unwrap(), 1);
    }

    #[test]
    fn residue_bounds_examples() {
        let r = check_residue_cover_bounds(&znam_example(), 1, 0).unwrap();
        assert!(r.passed());
        assert_eq!((r.n_a, r.f_n_a, r.k), (2, 1, 4));

        // a = 7 lies in 7(8): N_7 = 8 and k - m = 3 = f(8).
        let r = check_residue_cover_bounds(&znam_example(), 1, 7).unwrap();
        assert!(r.passed());
        assert_eq!((r.n_a, r.f_n_a), (8, 3));
        assert_eq!(r.primes[0].members, vec![0, 1, 2]);
        assert_eq!(r.primes[0].middle, ratio(3, 1));

        let r = check_residue_cover_bounds(&sys(&[(0, 1)]), 1, 0).unwrap();
        assert!(r.passed());
        assert_eq!((r.n_a, r.f_n_a), (1, 0));
        assert!(r.primes.is_empty());

        let s = sys(&[(0, 1), (1, 2), (2, 4), (0, 4)]);
        let r = check_residue_cover_bounds(&s, 2, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.n_a, 4);
        assert_eq!(r.k as u64, 2 + r.f_n_a);
    }

    #[test]
    fn residue_bounds_preconditions() {
        let err = check_residue_cover_bounds(&sys(&[(0, 2), (1, 4)]), 1, 0).unwrap_err();
        assert!(matches!(err, crate::Error::Precondition(_)));
        let err = check_residue_cover_bounds(&sys(&[(0, 1), (0, 2)]), 1, 0).unwrap_err();
        assert!(matches!(err, crate::Error::Precondition(_)));
    }

    #[test]
    fn znam_empty_j() {
        let s = sys(&[(0, 1)]);
        let spec = ZnamSumSpec {
            a: 0,
            multipliers: BTreeMap::new(),
            alpha: ratio(0, 1),
        };
        let c = znam_sums(&s, &spec).unwrap();
        assert_eq!(c.len(), 1);
        assert!((c[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let spec = ZnamSumSpec { alpha: ratio(1, 3), ..spec };
        assert!(znam_sums(&s, &spec).unwrap()[0].norm() < 1e-12);
    }

    #[test]
    fn znam_identity_on_dyadic_cover() {
        let s = znam_example();
        let ms = unit_multipliers(&s, 0);
        let residual = znam_identity_residual(&s, 1, 0, &ms).unwrap();
        assert!(residual < ZNAM_TOLERANCE, "residual {residual}");
    }

    #[test]
    fn znam_rejects_bad_multipliers() {
        let s = znam_example();
        let mut ms = unit_multipliers(&s, 0);
        ms.insert(0, 1);
        assert!(znam_table(&s, 0, &ms).is_err());
        let mut ms = unit_multipliers(&s, 0);
        ms.insert(1, 0);
        assert!(znam_table(&s, 0, &ms).is_err());
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(build_extremal_zcover(2, 1).unwrap(), sys(&[(1, 2), (0, 2)]));
        assert_eq!(build_extremal_zcover(4, 2).unwrap(), sys(&[(0, 1), (1, 2), (2, 4), (0, 4)]));
        assert_eq!(build_extremal_zcover(4, 1).unwrap(), sys(&[(1, 2), (2, 4), (4, 8), (0, 8)]));
        assert!(build_extremal_zcover(2, 2).is_err());
        assert!(build_extremal_zcover(40, 2).is_err());
    }
}
