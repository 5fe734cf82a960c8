//! Exhaustive enumeration of small coset systems and brute-force minima.
//!
//! Groups are limited to order 64 so that a set of elements fits in one
//! machine word ([`CoverBitmask`]).

use std::collections::HashMap;

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::abgroup::{all_subgroups, check_coset_cover_bounds, cosets_of, AbelianGroup, Coset, CosetSystem};
use crate::arith::{factorize, mycielski_f, rational_from_int, Rational};
use crate::cyclotomic::{divides_product, valuation_sum, OrderMultiset};
use crate::error::{capacity, domain, Result};
use crate::io::coset_to_json;

pub const SEARCH_ORDER_LIMIT: u64 = 64;
pub const MAX_K_LIMIT: usize = 6;
/// Candidate limit for the proper-coset cover search, counted after
/// discarding cosets strictly contained in another proper coset.
pub const PROPER_COSET_LIMIT: usize = 40;
pub const DIVISIBILITY_SEARCH_LIMIT: u64 = 30;
/// How many tight systems a report keeps verbatim.
pub const TIGHT_WITNESS_LIMIT: usize = 16;

/// A set of group elements as bits of a `u64`, bit `i` for element index `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CoverBitmask(pub u64);

impl CoverBitmask {
    pub fn full(size: usize) -> Self {
        CoverBitmask(if size == 64 { u64::MAX } else { (1u64 << size) - 1 })
    }

    pub fn from_coset(coset: &Coset) -> Self {
        CoverBitmask(coset.element_indices().iter().fold(0, |acc, &i| acc | (1u64 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn count(self) -> u32 {
        self.0.count_ones()
    }

    pub fn union(self, other: Self) -> Self {
        CoverBitmask(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        CoverBitmask(self.0 & other.0)
    }
}

/// Bit-sliced saturating counters: `levels[i]` holds the elements covered at
/// least `i + 1` times, up to `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverLevels {
    levels: Vec<u64>,
}

impl CoverLevels {
    pub fn new(m: u32) -> Self {
        CoverLevels {
            levels: vec![0; m as usize],
        }
    }

    pub fn add(&mut self, mask: CoverBitmask) {
        for i in (0..self.levels.len()).rev() {
            let below = if i == 0 { u64::MAX } else { self.levels[i - 1] };
            self.levels[i] |= below & mask.0;
        }
    }

    pub fn covered_m_times(&self) -> CoverBitmask {
        CoverBitmask(*self.levels.last().unwrap_or(&u64::MAX))
    }
}

/// Whether the masks cover every one of the `size` elements at least `m` times.
pub fn bitmask_is_m_cover(masks: &[CoverBitmask], m: u32, size: usize) -> bool {
    let mut levels = CoverLevels::new(m);
    for &mask in masks {
        levels.add(mask);
    }
    let full = CoverBitmask::full(size);
    levels.covered_m_times().intersection(full) == full
}

fn search_guard(group: &AbelianGroup) -> Result<()> {
    if group.order() > SEARCH_ORDER_LIMIT {
        return capacity(format!(
            "search needs |G| <= {SEARCH_ORDER_LIMIT}, got {}",
            group.order()
        ));
    }
    Ok(())
}

/// All cosets of all subgroups, optionally only those missing the identity.
/// Ordered by subgroup (as in `all_subgroups`) and then by representative.
pub fn enumerate_cosets(group: &AbelianGroup, proper_only: bool) -> Result<Vec<Coset>> {
    search_guard(group)?;
    Ok(all_subgroups(group)?
        .iter()
        .flat_map(cosets_of)
        .filter(|c| !proper_only || c.is_proper())
        .collect())
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub group: AbelianGroup,
    pub max_k: usize,
    pub m: u32,
    pub proper_cosets_only: bool,
    /// Count only one system per orbit under the maps `x ↦ ±x + g`
    /// (only `x ↦ ±x` when restricted to proper cosets).
    pub dedup_by_symmetry: bool,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
}

impl SearchConfig {
    pub fn new(group: AbelianGroup, max_k: usize, m: u32) -> Self {
        SearchConfig {
            group,
            max_k,
            m,
            proper_cosets_only: false,
            dedup_by_symmetry: false,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ExhaustiveReport {
    pub group: Vec<u64>,
    pub m: u32,
    pub max_k: usize,
    pub systems_examined: u64,
    pub covers_found: u64,
    pub counterexamples: u64,
    /// Covers attaining `k = m + f(N_a)` or `k = m + f([G:G_t])` somewhere.
    pub tight_systems: u64,
    pub tight_witnesses: Vec<serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexample_systems: Vec<serde_json::Value>,
}

impl ExhaustiveReport {
    fn absorb(&mut self, other: ExhaustiveReport) {
        self.systems_examined += other.systems_examined;
        self.covers_found += other.covers_found;
        self.counterexamples += other.counterexamples;
        self.tight_systems += other.tight_systems;
        self.tight_witnesses.extend(other.tight_witnesses);
        self.tight_witnesses.truncate(TIGHT_WITNESS_LIMIT);
        self.counterexample_systems.extend(other.counterexample_systems);
        self.counterexample_systems.truncate(TIGHT_WITNESS_LIMIT);
    }
}

struct Enumerator<'a> {
    config: &'a SearchConfig,
    cosets: &'a [Coset],
    masks: &'a [CoverBitmask],
    /// `images[map][c]`: index of the image of coset `c` under a symmetry.
    images: &'a [Vec<usize>],
    full: CoverBitmask,
}

impl Enumerator<'_> {
    fn is_canonical(&self, chosen: &[usize]) -> bool {
        let mut image = Vec::with_capacity(chosen.len());
        self.images.iter().all(|map| {
            image.clear();
            image.extend(chosen.iter().map(|&c| map[c]));
            image.sort_unstable();
            image.as_slice() >= chosen
        })
    }

    fn visit(&self, chosen: &mut Vec<usize>, levels: &CoverLevels, out: &mut ExhaustiveReport) -> Result<()> {
        let canonical = !self.config.dedup_by_symmetry || self.is_canonical(chosen);
        if canonical {
            out.systems_examined += 1;
            if levels.covered_m_times().intersection(self.full) == self.full {
                out.covers_found += 1;
                self.check(chosen, out)?;
            }
        }
        if chosen.len() == self.config.max_k {
            return Ok(());
        }
        let start = *chosen.last().expect("visit starts with one coset");
        for c in start..self.cosets.len() {
            let mut next = levels.clone();
            next.add(self.masks[c]);
            chosen.push(c);
            self.visit(chosen, &next, out)?;
            chosen.pop();
        }
        Ok(())
    }

    fn check(&self, chosen: &[usize], out: &mut ExhaustiveReport) -> Result<()> {
        let cosets: Vec<Coset> = chosen.iter().map(|&c| self.cosets[c].clone()).collect();
        let system = CosetSystem::new(self.config.group.clone(), cosets)?;
        let report = check_coset_cover_bounds(&system, self.config.m)?;
        if !report.passed() {
            out.counterexamples += 1;
            if out.counterexample_systems.len() < TIGHT_WITNESS_LIMIT {
                out.counterexample_systems.push(system_json(&system, self.config.m));
            }
            return Ok(());
        }
        let tight = report
            .witnesses
            .iter()
            .any(|w| w.inequality.starts_with("k - m >= f(") && w.lhs == w.rhs);
        if tight {
            out.tight_systems += 1;
            if out.tight_witnesses.len() < TIGHT_WITNESS_LIMIT {
                out.tight_witnesses.push(system_json(&system, self.config.m));
            }
        }
        Ok(())
    }
}

fn system_json(system: &CosetSystem, m: u32) -> serde_json::Value {
    serde_json::json!({
        "type": "abelian",
        "orders": system.group().orders(),
        "m": m,
        "cosets": system.cosets().iter().map(coset_to_json).collect::<Vec<_>>(),
    })
}

/// Symmetries `x ↦ εx + g` as permutations of the coset list; the identity map
/// is omitted.
fn symmetry_images(group: &AbelianGroup, cosets: &[Coset], translations: bool) -> Vec<Vec<usize>> {
    let lookup: HashMap<(Vec<usize>, usize), usize> = cosets
        .iter()
        .enumerate()
        .map(|(i, c)| ((c.subgroup().element_indices().to_vec(), c.rep_idx()), i))
        .collect();
    let shifts: Vec<usize> = if translations { (0..group.size()).collect() } else { vec![0] };
    let mut maps = Vec::new();
    for negate in [false, true] {
        for &g in &shifts {
            if !negate && g == 0 {
                continue;
            }
            let map: Option<Vec<usize>> = cosets
                .iter()
                .map(|c| {
                    let r = if negate { group.neg_idx(c.rep_idx()) } else { c.rep_idx() };
                    let image = Coset::from_idx(c.subgroup(), group.add_idx(r, g));
                    lookup
                        .get(&(image.subgroup().element_indices().to_vec(), image.rep_idx()))
                        .copied()
                })
                .collect();
            if let Some(map) = map {
                maps.push(map);
            }
        }
    }
    maps
}

/// Runs the coset-cover bound checker on every multiset of at most `max_k`
/// cosets that forms an m-cover.
pub fn verify_bounds_exhaustively(config: &SearchConfig) -> Result<ExhaustiveReport> {
    search_guard(&config.group)?;
    if config.max_k == 0 || config.max_k > MAX_K_LIMIT {
        return capacity(format!("max_k must be in 1..={MAX_K_LIMIT}, got {}", config.max_k));
    }
    if config.m == 0 {
        return domain("cover multiplicity m must be at least 1");
    }
    let cosets = enumerate_cosets(&config.group, config.proper_cosets_only)?;
    let masks: Vec<CoverBitmask> = cosets.iter().map(CoverBitmask::from_coset).collect();
    let images = if config.dedup_by_symmetry {
        symmetry_images(&config.group, &cosets, !config.proper_cosets_only)
    } else {
        Vec::new()
    };
    let enumerator = Enumerator {
        config,
        cosets: &cosets,
        masks: &masks,
        images: &images,
        full: CoverBitmask::full(config.group.size()),
    };
    let root = |first: usize| -> Result<ExhaustiveReport> {
        let mut out = ExhaustiveReport::default();
        let mut levels = CoverLevels::new(config.m);
        levels.add(masks[first]);
        enumerator.visit(&mut vec![first], &levels, &mut out)?;
        Ok(out)
    };
    let parts: Vec<Result<ExhaustiveReport>> = if config.jobs <= 1 {
        (0..cosets.len()).map(root).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| crate::Error::Capacity(format!("thread pool: {e}")))?;
        pool.install(|| (0..cosets.len()).into_par_iter().map(root).collect())
    };
    let mut total = ExhaustiveReport {
        group: config.group.orders().to_vec(),
        m: config.m,
        max_k: config.max_k,
        ..Default::default()
    };
    for part in parts {
        total.absorb(part?);
    }
    Ok(total)
}

/// Result of the proper-coset cover search.
#[derive(Debug, Clone)]
pub struct ProperCover {
    pub k_min: usize,
    pub witness: Vec<Coset>,
    pub f_order: u64,
    pub nodes: u64,
}

/// Smallest number of proper cosets whose union is `G ∖ {e}`, by
/// iterative-deepening branch and bound over the maximal proper cosets.
pub fn min_proper_coset_cover(group: &AbelianGroup) -> Result<ProperCover> {
    search_guard(group)?;
    let f_order = mycielski_f(group.order())?;
    let proper = enumerate_cosets(group, true)?;
    let masks: Vec<CoverBitmask> = proper.iter().map(CoverBitmask::from_coset).collect();
    // A cover may always trade a coset for a proper coset containing it.
    let maximal: Vec<usize> = (0..proper.len())
        .filter(|&i| {
            !(0..proper.len()).any(|j| j != i && masks[i].0 & !masks[j].0 == 0 && masks[i] != masks[j])
        })
        .collect();
    if maximal.len() > PROPER_COSET_LIMIT {
        return capacity(format!(
            "{} maximal proper cosets exceed {PROPER_COSET_LIMIT}",
            maximal.len()
        ));
    }
    let target = CoverBitmask(CoverBitmask::full(group.size()).0 & !1);
    if target.0 == 0 {
        return Ok(ProperCover {
            k_min: 0,
            witness: Vec::new(),
            f_order,
            nodes: 0,
        });
    }
    let cand: Vec<CoverBitmask> = maximal.iter().map(|&i| masks[i]).collect();
    let max_size = cand.iter().map(|m| m.count()).max().unwrap_or(1);
    let mut by_element: Vec<Vec<usize>> = vec![Vec::new(); group.size()];
    for (c, mask) in cand.iter().enumerate() {
        for (x, list) in by_element.iter_mut().enumerate() {
            if mask.contains(x) {
                list.push(c);
            }
        }
    }

    struct Bnb<'a> {
        cand: &'a [CoverBitmask],
        by_element: &'a [Vec<usize>],
        target: CoverBitmask,
        max_size: u32,
        nodes: u64,
    }
    impl Bnb<'_> {
        fn dfs(&mut self, covered: CoverBitmask, slots: u32, chosen: &mut Vec<usize>) -> bool {
            self.nodes += 1;
            let missing = CoverBitmask(self.target.0 & !covered.0);
            if missing.0 == 0 {
                return true;
            }
            if slots * self.max_size < missing.count() {
                return false;
            }
            let u = missing.0.trailing_zeros() as usize;
            for &c in &self.by_element[u] {
                chosen.push(c);
                if self.dfs(covered.union(self.cand[c]), slots - 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
    }
    let mut bnb = Bnb {
        cand: &cand,
        by_element: &by_element,
        target,
        max_size,
        nodes: 0,
    };
    let lower = target.count().div_ceil(max_size);
    for k in lower..=target.count() {
        let mut chosen = Vec::new();
        if bnb.dfs(CoverBitmask(0), k, &mut chosen) {
            return Ok(ProperCover {
                k_min: k as usize,
                witness: chosen.iter().map(|&c| proper[maximal[c]].clone()).collect(),
                f_order,
                nodes: bnb.nodes,
            });
        }
    }
    unreachable!("the singletons of G minus the identity always cover it")
}

/// Smallest size of a multiset of root-of-unity orders (prime powers up to
/// `2n`) for which `n | ∏ (1 − ζ)`.
///
/// Multisets are enumerated by size in nondecreasing order and each one of the
/// current size is decided by [`divides_product`]. A branch is cut when even
/// filling every remaining slot with the best single order for some prime
/// cannot close that prime's deficit.
pub fn min_multiset_for_divisibility(n: u64) -> Result<u64> {
    if n == 0 {
        return domain("n must be positive");
    }
    if n > DIVISIBILITY_SEARCH_LIMIT {
        return capacity(format!("n = {n} exceeds {DIVISIBILITY_SEARCH_LIMIT}"));
    }
    let fac = factorize(n)?;
    let candidates: Vec<u64> = (2..=2 * n)
        .filter(|&d| factorize(d).map(|f| f.as_prime_power().is_some()).unwrap_or(false))
        .collect();
    // gain[c][i]: what one root of order candidates[c] adds to the sum for the i-th prime.
    let mut gain = Vec::with_capacity(candidates.len());
    for &d in &candidates {
        let single = OrderMultiset::new(vec![d])?;
        gain.push(
            fac.factors()
                .iter()
                .map(|&(p, _)| valuation_sum(p, &single))
                .collect::<Result<Vec<Rational>>>()?,
        );
    }
    let best: Vec<Rational> = (0..fac.factors().len())
        .map(|i| gain.iter().map(|g| g[i].clone()).max().unwrap_or_default())
        .collect();
    let need: Vec<Rational> = fac.factors().iter().map(|&(_, e)| rational_from_int(e)).collect();

    struct Dfs<'a> {
        n: u64,
        candidates: &'a [u64],
        gain: &'a [Vec<Rational>],
        best: &'a [Rational],
        nodes: u64,
    }
    impl Dfs<'_> {
        fn reachable(&self, deficit: &[Rational], slots: usize) -> bool {
            deficit
                .iter()
                .zip(self.best)
                .all(|(r, b)| !r.is_positive() || rational_from_int(slots as u64) * b >= *r)
        }

        fn run(&mut self, start: usize, slots: usize, deficit: &[Rational], chosen: &mut Vec<u64>) -> Result<bool> {
            self.nodes += 1;
            if slots == 0 {
                return divides_product(self.n, &OrderMultiset::new(chosen.clone())?);
            }
            if !self.reachable(deficit, slots) {
                return Ok(false);
            }
            for c in start..self.candidates.len() {
                let next: Vec<Rational> = deficit.iter().zip(&self.gain[c]).map(|(r, g)| r - g).collect();
                chosen.push(self.candidates[c]);
                let found = self.run(c, slots - 1, &next, chosen)?;
                chosen.pop();
                if found {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }

    let mut dfs = Dfs {
        n,
        candidates: &candidates,
        gain: &gain,
        best: &best,
        nodes: 0,
    };
    for k in 0.. {
        if dfs.run(0, k, &need, &mut Vec::new())? {
            return Ok(k as u64);
        }
    }
    unreachable!("the loop only exits by returning")
}

/// Exhaustive bound checks over every presentation of every abelian group of
/// order up to `max_order`, for `m = 1..=max_m`.
pub fn sweep(max_order: u64, max_k: usize, max_m: u32, jobs: usize) -> Result<Vec<ExhaustiveReport>> {
    let mut out = Vec::new();
    for group in sweep_groups(max_order)? {
        for m in 1..=max_m {
            let mut config = SearchConfig::new(group.clone(), max_k, m);
            config.jobs = jobs;
            out.push(verify_bounds_exhaustively(&config)?);
        }
    }
    Ok(out)
}

/// Isomorphism representatives and all ordered presentations of each order,
/// plus a presentation padded with a trivial factor.
pub fn sweep_groups(max_order: u64) -> Result<Vec<AbelianGroup>> {
    let mut out: Vec<AbelianGroup> = Vec::new();
    for n in 1..=max_order {
        let mut add = |g: AbelianGroup| {
            if !out.contains(&g) {
                out.push(g);
            }
        };
        for g in AbelianGroup::isomorphism_classes(n)? {
            add(g);
        }
        for g in AbelianGroup::presentations(n)? {
            add(g);
        }
        add(AbelianGroup::new(vec![1, n])?);
    }
    Ok(out)
}
