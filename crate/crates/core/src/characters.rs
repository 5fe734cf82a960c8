//! Characters of finite abelian groups and the character-sum argument showing
//! that `N_a` divides `∏_{j∈J} (1 − ζ_j)`.
//!
//! A character of `C_{d_1} × ⋯ × C_{d_r}` is an exponent tuple `t` acting by
//! `χ_t(x) = exp(2πi Σ t_i x_i / d_i)`. Phases are kept as exact residues
//! modulo the group exponent `L = lcm(d_i)`; complex numbers only appear when a
//! residual norm is measured.
//!
//! For an m-cover `{a_s + G_s}` and a point `a` covered exactly `m` times, let
//! `J` be the indices of cosets missing `a`. For each `j ∈ J` pick
//! `χ_j ∈ G_j^⊥` with `ζ_j = χ_j(a_j − a) ≠ 1`, and put
//! `Ψ(x) = ∏_{j∈J} (χ_j(x) − ζ_j) = Σ_ψ c(ψ) ψ(x)`. Then `Ψ` vanishes off
//! `H_a`, `c` is constant on cosets of `H_a^⊥`, and
//! `∏ (1 − ζ_j) = Ψ(0) = Σ_ψ c(ψ) = N_a · Σ_r c(ψ_r)`.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::abgroup::{AbelianGroup, CosetSystem, GroupElement, Subgroup, SUBGROUP_LIMIT};
use crate::arith::{lcm_all, mycielski_f, Rational};
use crate::cyclotomic::{criterion, OrderMultiset};
use crate::error::{capacity, domain, Error, Result};
use crate::report::{BoundReport, Witness};

/// Largest `|J|` for the subset expansion of `Ψ`.
pub const SUBSET_LIMIT: usize = 24;
/// Tolerance for every complex residual.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// `e^{2πi·num/den}` with `0 ≤ num < den` in lowest terms; `den` is the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitRootPhase {
    num: u64,
    den: u64,
}

impl UnitRootPhase {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return domain("phase denominator must be positive");
        }
        let num = num % den;
        let g = num.gcd(&den);
        Ok(UnitRootPhase {
            num: num / g,
            den: den / g,
        })
    }

    pub fn one() -> Self {
        UnitRootPhase { num: 0, den: 1 }
    }

    /// The phase as a rational in `[0, 1)`.
    pub fn phase(&self) -> Rational {
        Rational::new(self.num.into(), self.den.into())
    }

    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::TAU * self.num as f64 / self.den as f64)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let den = self.den.lcm(&other.den);
        let num = (self.num * (den / self.den) + other.num * (den / other.den)) % den;
        UnitRootPhase::new(num, den).expect("positive denominator")
    }
}

impl fmt::Display for UnitRootPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e(2pi i {}/{})", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    group: AbelianGroup,
    exponents: Vec<u64>,
}

impl Character {
    pub fn new(group: &AbelianGroup, exponents: &[i64]) -> Result<Self> {
        let reduced = group.element(exponents)?;
        Ok(Character {
            group: group.clone(),
            exponents: reduced.coords().to_vec(),
        })
    }

    pub fn trivial(group: &AbelianGroup) -> Self {
        Character {
            group: group.clone(),
            exponents: vec![0; group.rank()],
        }
    }

    fn from_idx(group: &AbelianGroup, idx: usize) -> Self {
        Character {
            group: group.clone(),
            exponents: group.element_at(idx).coords().to_vec(),
        }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    /// Position of this character in [`all_characters`].
    pub fn index(&self) -> usize {
        let as_elem = self.group.element(&self.exponents.iter().map(|&t| t as i64).collect::<Vec<_>>());
        self.group.index_of(&as_elem.expect("exponents are reduced"))
    }

    /// The pointwise product `χψ`.
    pub fn mul(&self, other: &Character) -> Result<Character> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("characters of different groups".into()));
        }
        let idx = self.group.add_idx(self.index(), other.index());
        Ok(Character::from_idx(&self.group, idx))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(u64::to_string).collect();
        write!(f, "chi[{}]", parts.join(","))
    }
}

/// Exact phase arithmetic modulo the group exponent.
struct PhaseTable {
    group: AbelianGroup,
    exponent: u64,
    scales: Vec<u64>,
}

impl PhaseTable {
    fn new(group: &AbelianGroup) -> Self {
        let exponent = lcm_all(group.orders()).expect("orders are positive and small");
        let scales = group.orders().iter().map(|d| exponent / d).collect();
        PhaseTable {
            group: group.clone(),
            exponent,
            scales,
        }
    }

    /// `χ_t(x)` as a residue modulo the exponent, both given by index.
    fn eval(&self, chi: usize, x: usize) -> u64 {
        let t = self.group.element_at(chi);
        let x = self.group.element_at(x);
        t.coords()
            .iter()
            .zip(x.coords())
            .zip(&self.scales)
            .map(|((&ti, &xi), &s)| ti * xi % self.exponent * s)
            .sum::<u64>()
            % self.exponent
    }

    fn unit(&self, u: u64) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::TAU * u as f64 / self.exponent as f64)
    }

    fn phase(&self, u: u64) -> UnitRootPhase {
        UnitRootPhase::new(u, self.exponent).expect("positive exponent")
    }
}

pub fn evaluate(chi: &Character, x: &GroupElement) -> Result<UnitRootPhase> {
    if !chi.group.contains(x) {
        return Err(Error::GroupMismatch(format!("{x} is not in {}", chi.group)));
    }
    let table = PhaseTable::new(&chi.group);
    Ok(table.phase(table.eval(chi.index(), chi.group.index_of(x))))
}

/// All `|G|` characters, ordered lexicographically by exponent tuple.
pub fn all_characters(group: &AbelianGroup) -> Result<Vec<Character>> {
    guard(group)?;
    Ok((0..group.size()).map(|i| Character::from_idx(group, i)).collect())
}

fn guard(group: &AbelianGroup) -> Result<()> {
    if group.order() > SUBGROUP_LIMIT {
        return capacity(format!(
            "character enumeration needs |G| <= {SUBGROUP_LIMIT}, got {}",
            group.order()
        ));
    }
    Ok(())
}

fn annihilator_indices(table: &PhaseTable, h: &Subgroup) -> Vec<usize> {
    let gens: Vec<usize> = h
        .generating_set()
        .iter()
        .map(|g| table.group.index_of(g))
        .collect();
    (0..table.group.size())
        .filter(|&chi| gens.iter().all(|&g| table.eval(chi, g) == 0))
        .collect()
}

/// `H^⊥`: the characters trivial on `H`. It has `[G : H]` elements.
pub fn annihilator(h: &Subgroup) -> Result<Vec<Character>> {
    guard(h.parent())?;
    let table = PhaseTable::new(h.parent());
    Ok(annihilator_indices(&table, h)
        .into_iter()
        .map(|i| Character::from_idx(h.parent(), i))
        .collect())
}

fn separating_idx(table: &PhaseTable, h: &Subgroup, a: usize) -> Option<usize> {
    annihilator_indices(table, h)
        .into_iter()
        .find(|&chi| table.eval(chi, a) != 0)
}

/// The lexicographically least `χ ∈ H^⊥` with `χ(a) ≠ 1`.
pub fn separating_character(h: &Subgroup, a: &GroupElement) -> Result<Character> {
    let g = h.parent();
    guard(g)?;
    if !g.contains(a) {
        return Err(Error::GroupMismatch(format!("{a} is not in {g}")));
    }
    if h.contains(a) {
        return domain(format!("{a} lies in the subgroup; no character separates it"));
    }
    let table = PhaseTable::new(g);
    let idx = separating_idx(&table, h, g.index_of(a)).expect("characters separate points outside H");
    Ok(Character::from_idx(g, idx))
}

/// Choices made for one base point: the indices `J`, the characters `χ_j` and
/// the roots `ζ_j = χ_j(a_j − a)`.
#[derive(Debug, Clone)]
pub struct SeparatingData {
    pub j: Vec<usize>,
    pub characters: Vec<Character>,
    pub zetas: Vec<UnitRootPhase>,
    pub h_a: Subgroup,
    pub n_a: u64,
}

struct Setup {
    table: PhaseTable,
    data: SeparatingData,
    chi_idx: Vec<usize>,
    zeta_res: Vec<u64>,
}

fn setup(system: &CosetSystem, m: u32, a: &GroupElement) -> Result<Setup> {
    let g = system.group();
    guard(g)?;
    system.require_base_point(m, a)?;
    let table = PhaseTable::new(g);
    let a_idx = g.index_of(a);
    let j: Vec<usize> = (0..system.k()).filter(|&s| !system.cosets()[s].contains_idx(a_idx)).collect();
    if j.len() > SUBSET_LIMIT {
        return capacity(format!("|J| = {} exceeds {SUBSET_LIMIT}", j.len()));
    }
    let mut chi_idx = Vec::new();
    let mut zeta_res = Vec::new();
    for &s in &j {
        let c = &system.cosets()[s];
        let shift = g.sub_idx(c.rep_idx(), a_idx);
        let chi = separating_idx(&table, c.subgroup(), shift).expect("a_j - a lies outside G_j");
        chi_idx.push(chi);
        zeta_res.push(table.eval(chi, shift));
    }
    let h_a = system.stabilizing_subgroup(a);
    let n_a = h_a.index();
    let data = SeparatingData {
        characters: chi_idx.iter().map(|&i| Character::from_idx(g, i)).collect(),
        zetas: zeta_res.iter().map(|&u| table.phase(u)).collect(),
        j,
        h_a,
        n_a,
    };
    Ok(Setup {
        table,
        data,
        chi_idx,
        zeta_res,
    })
}

/// The separating characters and roots used for base point `a`.
pub fn separating_data(system: &CosetSystem, m: u32, a: &GroupElement) -> Result<SeparatingData> {
    Ok(setup(system, m, a)?.data)
}

fn psi_from_setup(s: &Setup) -> Vec<Complex64> {
    let g = &s.table.group;
    (0..g.size())
        .map(|x| {
            s.chi_idx
                .iter()
                .zip(&s.zeta_res)
                .map(|(&chi, &z)| s.table.unit(s.table.eval(chi, x)) - s.table.unit(z))
                .product()
        })
        .collect()
}

/// `Ψ(x) = ∏_{j∈J} (χ_j(x) − ζ_j)` for every element, indexed like the group.
pub fn psi_values(system: &CosetSystem, m: u32, a: &GroupElement) -> Result<Vec<Complex64>> {
    Ok(psi_from_setup(&setup(system, m, a)?))
}

/// Fourier coefficients of `Ψ`, each an exact element of `ℤ[ζ_L]` stored as
/// signed multiplicities of the powers `ζ_L^u`, `L` the group exponent.
#[derive(Debug, Clone)]
pub struct FourierCoefficients {
    exponent: u64,
    /// `counts[ψ * exponent + u]` is the coefficient of `ζ_L^u` in `c(ψ)`.
    counts: Vec<i64>,
}

impl FourierCoefficients {
    pub fn len(&self) -> usize {
        self.counts.len() / self.exponent as usize
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// The exact integer vector of `c(ψ)` over the powers of `ζ_L`.
    pub fn exact(&self, psi: usize) -> &[i64] {
        let l = self.exponent as usize;
        &self.counts[psi * l..(psi + 1) * l]
    }

    pub fn value(&self, psi: usize) -> Complex64 {
        self.exact(psi)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(u, &c)| {
                c as f64 * Complex64::from_polar(1.0, std::f64::consts::TAU * u as f64 / self.exponent as f64)
            })
            .sum()
    }

    pub fn values(&self) -> Vec<Complex64> {
        (0..self.len()).map(|i| self.value(i)).collect()
    }
}

fn coefficients_from_setup(s: &Setup) -> FourierCoefficients {
    let g = &s.table.group;
    let l = s.table.exponent;
    let mut counts = vec![0i64; g.size() * l as usize];
    let n = s.chi_idx.len();
    // Start from I = ∅: character 1, coefficient ∏_{j∈J} (−ζ_j).
    let mut chi = 0usize;
    let mut phase = s.zeta_res.iter().sum::<u64>() % l;
    let mut in_set = vec![false; n];
    let mut outside = n;
    for step in 0u64..(1u64 << n) {
        if step > 0 {
            let bit = step.trailing_zeros() as usize;
            if in_set[bit] {
                chi = g.sub_idx(chi, s.chi_idx[bit]);
                phase = (phase + s.zeta_res[bit]) % l;
                outside += 1;
            } else {
                chi = g.add_idx(chi, s.chi_idx[bit]);
                phase = (phase + l - s.zeta_res[bit]) % l;
                outside -= 1;
            }
            in_set[bit] = !in_set[bit];
        }
        let sign = if outside.is_multiple_of(2) { 1 } else { -1 };
        counts[chi * l as usize + phase as usize] += sign;
    }
    FourierCoefficients { exponent: l, counts }
}

/// `c(ψ) = Σ_{I ⊆ J, ∏_{j∈I} χ_j = ψ} ∏_{j∈J∖I} (−ζ_j)`, indexed like
/// [`all_characters`].
pub fn fourier_coefficients(system: &CosetSystem, m: u32, a: &GroupElement) -> Result<FourierCoefficients> {
    Ok(coefficients_from_setup(&setup(system, m, a)?))
}

/// Largest residuals of the identities behind the divisibility argument.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Residuals {
    /// `max |Ψ(x)|` over `x ∉ H_a`.
    #[serde(serialize_with = "sci")]
    pub vanishing: f64,
    /// `max |Ψ(x)χ(x) − Ψ(x)|` over `χ ∈ H_a^⊥`.
    #[serde(serialize_with = "sci")]
    pub invariance: f64,
    /// `max |Σ_ψ c(ψ)ψ(x) − Ψ(x)|`.
    #[serde(serialize_with = "sci")]
    pub reconstruction: f64,
    /// `max |c(ψχ) − c(ψ)|` over `χ ∈ H_a^⊥`.
    #[serde(serialize_with = "sci")]
    pub constancy: f64,
    /// `|Σ_ψ c(ψ) − ∏ (1 − ζ_j)|`.
    #[serde(serialize_with = "sci")]
    pub coefficient_sum: f64,
    /// `|Σ_ψ c(ψ) − N_a Σ_r c(ψ_r)|` over coset representatives `ψ_r` of `H_a^⊥`.
    #[serde(serialize_with = "sci")]
    pub coset_sum: f64,
}

fn sci<S: serde::Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{v:.3e}"))
}

impl Residuals {
    pub fn max(&self) -> f64 {
        [
            self.vanishing,
            self.invariance,
            self.reconstruction,
            self.constancy,
            self.coefficient_sum,
            self.coset_sum,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    fn named(&self) -> [(&'static str, f64); 6] {
        [
            ("psi vanishes off H_a", self.vanishing),
            ("psi is invariant under H_a-perp", self.invariance),
            ("coefficients reconstruct psi", self.reconstruction),
            ("c is constant on H_a-perp cosets", self.constancy),
            ("sum of c equals prod (1 - zeta_j)", self.coefficient_sum),
            ("sum of c equals N_a times coset-representative sum", self.coset_sum),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DivisibilityReport {
    pub a: String,
    pub n_a: u64,
    pub orders: Vec<u64>,
    pub residuals: Residuals,
    pub report: BoundReport,
}

impl DivisibilityReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Runs the full character-sum argument for base point `a` and confirms
/// `N_a | ∏_{j∈J} (1 − ζ_j)` with the exact valuation criterion.
pub fn verify_divisibility(system: &CosetSystem, m: u32, a: &GroupElement) -> Result<DivisibilityReport> {
    let s = setup(system, m, a)?;
    let g = &s.table.group;
    let size = g.size();
    let psi = psi_from_setup(&s);
    let coeffs = coefficients_from_setup(&s);
    let c = coeffs.values();
    let perp = annihilator_indices(&s.table, &s.data.h_a);
    debug_assert_eq!(perp.len() as u64, s.data.n_a);

    let mut res = Residuals::default();
    for x in 0..size {
        if !s.data.h_a.contains_idx(x) {
            res.vanishing = res.vanishing.max(psi[x].norm());
        }
        for &chi in &perp {
            let moved = psi[x] * s.table.unit(s.table.eval(chi, x));
            res.invariance = res.invariance.max((moved - psi[x]).norm());
        }
        let rebuilt: Complex64 = (0..size).map(|p| c[p] * s.table.unit(s.table.eval(p, x))).sum();
        res.reconstruction = res.reconstruction.max((rebuilt - psi[x]).norm());
    }
    for p in 0..size {
        for &chi in &perp {
            let q = g.add_idx(p, chi);
            res.constancy = res.constancy.max((c[q] - c[p]).norm());
        }
    }
    let total: Complex64 = c.iter().sum();
    let product: Complex64 = s
        .zeta_res
        .iter()
        .map(|&z| Complex64::new(1.0, 0.0) - s.table.unit(z))
        .product();
    res.coefficient_sum = (total - product).norm();
    let mut seen = vec![false; size];
    let mut rep_sum = Complex64::new(0.0, 0.0);
    for p in 0..size {
        if seen[p] {
            continue;
        }
        for &chi in &perp {
            seen[g.add_idx(p, chi)] = true;
        }
        rep_sum += c[p];
    }
    res.coset_sum = (total - rep_sum * s.data.n_a as f64).norm();

    let subject = format!("a={a}");
    let mut report = BoundReport::new("character-sum divisibility");
    for (name, value) in res.named() {
        if value.is_nan() || value >= RESIDUAL_TOLERANCE {
            report.fail(format!("{name}: residual {value:.3e} exceeds {RESIDUAL_TOLERANCE:e}"));
        }
    }
    let orders: Vec<u64> = s.data.zetas.iter().map(UnitRootPhase::order).collect();
    let multiset = OrderMultiset::new(orders.clone())?;
    for pc in criterion(s.data.n_a, &multiset)? {
        report.push(Witness::new(
            format!("{subject}, p={}", pc.p),
            "sum over p-power orders of 1/phi(ord zeta_j) >= ord_p(N_a)",
            pc.sum.clone(),
            Rational::from_integer(pc.required.into()),
        ));
    }
    report.push(Witness::new(
        &subject,
        "|J| = k - m >= f(N_a)",
        Rational::from_integer(s.data.j.len().into()),
        Rational::from_integer(mycielski_f(s.data.n_a)?.into()),
    ));
    Ok(DivisibilityReport {
        a: a.to_string(),
        n_a: s.data.n_a,
        orders,
        residuals: res,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{build_cp_cp_cover, partition_cover, subgroup_from_generators};
    use crate::arith::ratio;

    #[test]
    fn evaluate_examples() {
        let c4 = AbelianGroup::cyclic(4).unwrap();
        let x = c4.element(&[2]).unwrap();
        assert!(evaluate(&Character::trivial(&c4), &x).unwrap().is_one());
        let chi = Character::new(&c4, &[1]).unwrap();
        let v = evaluate(&chi, &x).unwrap();
        assert_eq!(v.phase(), ratio(1, 2));
        assert!((v.value() + Complex64::new(1.0, 0.0)).norm() < 1e-12);

        let v4 = AbelianGroup::new(vec![2, 2]).unwrap();
        let chi = Character::new(&v4, &[1, 1]).unwrap();
        assert!(evaluate(&chi, &v4.element(&[1, 1]).unwrap()).unwrap().is_one());
        assert!(evaluate(&chi, &x).is_err());
    }

    #[test]
    fn characters_are_homomorphisms() {
        let g = AbelianGroup::new(vec![2, 6]).unwrap();
        for chi in all_characters(&g).unwrap() {
            for x in g.elements() {
                for y in g.elements() {
                    let lhs = evaluate(&chi, &g.add(&x, &y)).unwrap();
                    let rhs = evaluate(&chi, &x).unwrap().mul(&evaluate(&chi, &y).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn annihilator_examples() {
        let c4 = AbelianGroup::cyclic(4).unwrap();
        assert_eq!(annihilator(&Subgroup::whole(&c4)).unwrap(), vec![Character::trivial(&c4)]);
        assert_eq!(annihilator(&Subgroup::trivial(&c4)).unwrap().len(), 4);
        let h = subgroup_from_generators(&c4, &[c4.element(&[2]).unwrap()]).unwrap();
        let exps: Vec<u64> = annihilator(&h).unwrap().iter().map(|c| c.exponents()[0]).collect();
        assert_eq!(exps, vec![0, 2]);
    }

    #[test]
    fn separating_examples() {
        let c4 = AbelianGroup::cyclic(4).unwrap();
        let h = subgroup_from_generators(&c4, &[c4.element(&[2]).unwrap()]).unwrap();
        let chi = separating_character(&h, &c4.element(&[1]).unwrap()).unwrap();
        assert_eq!(chi.exponents(), &[2]);
        assert_eq!(evaluate(&chi, &c4.element(&[1]).unwrap()).unwrap().phase(), ratio(1, 2));
        assert!(separating_character(&h, &c4.element(&[2]).unwrap()).is_err());

        let v4 = AbelianGroup::new(vec![2, 2]).unwrap();
        let h = subgroup_from_generators(&v4, &[v4.element(&[1, 0]).unwrap()]).unwrap();
        let chi = separating_character(&h, &v4.element(&[0, 1]).unwrap()).unwrap();
        assert_eq!(chi.exponents(), &[0, 1]);
    }

    #[test]
    fn phase_reduction() {
        let z = UnitRootPhase::new(6, 8).unwrap();
        assert_eq!(z.order(), 4);
        assert_eq!(z.mul(&UnitRootPhase::new(1, 4).unwrap()), UnitRootPhase::one());
    }

    #[test]
    fn cp_cp_divisibility() {
        let sys = build_cp_cp_cover(2).unwrap();
        let a = sys.group().element(&[1, 0]).unwrap();
        let r = verify_divisibility(&sys, 1, &a).unwrap();
        assert!(r.passed(), "{}", r.report);
        assert_eq!(r.n_a, 2);
        assert_eq!(r.orders, vec![2, 2]);
    }

    #[test]
    fn partition_psi_at_identity() {
        let g = AbelianGroup::cyclic(8).unwrap();
        let h = subgroup_from_generators(&g, &[g.element(&[4]).unwrap()]).unwrap();
        let sys = partition_cover(&h).unwrap();
        let e = g.identity();
        let r = verify_divisibility(&sys, 1, &e).unwrap();
        assert!(r.passed(), "{}", r.report);
        assert_eq!(r.n_a, 4);
        // Ψ(0) = ∏ over the three cosets missing 0 of (1 − ζ_j).
        let data = separating_data(&sys, 1, &e).unwrap();
        assert_eq!(data.j.len(), 3);
        let expected: Complex64 = data
            .zetas
            .iter()
            .map(|z| Complex64::new(1.0, 0.0) - z.value())
            .product();
        let psi = psi_values(&sys, 1, &e).unwrap();
        assert!((psi[0] - expected).norm() < 1e-9);
    }

    #[test]
    fn empty_j_coefficients() {
        let g = AbelianGroup::cyclic(3).unwrap();
        let sys = partition_cover(&Subgroup::whole(&g)).unwrap();
        let c = fourier_coefficients(&sys, 1, &g.identity()).unwrap();
        assert_eq!(c.exact(0)[0], 1);
        assert!(c.values()[1..].iter().all(|v| v.norm() < 1e-12));
    }

    #[test]
    fn preconditions() {
        let sys = build_cp_cp_cover(2).unwrap();
        assert!(matches!(
            verify_divisibility(&sys, 1, &sys.group().identity()),
            Err(Error::Precondition(_))
        ));
    }
}
