//! Finite abelian groups `C_{d_1} × ⋯ × C_{d_r}` with explicit subgroups,
//! cosets and coset systems.
//!
//! Elements are coordinate vectors; internally they are also addressed by a
//! mixed-radix index (first coordinate most significant), so index order is
//! lexicographic order. Subgroups and cosets are stored extensionally as sorted
//! index sets.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{factorize, is_prime, mycielski_f, pow2, Rational};
use crate::error::{capacity, domain, precondition, Error, Result};
use crate::report::{BoundReport, Witness};

/// Largest group order for element-level operations.
pub const ELEMENT_LIMIT: u64 = 1_000_000;
/// Largest group order for enumerating all subgroups or characters.
pub const SUBGROUP_LIMIT: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    orders: Vec<u64>,
    order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        let parts: Vec<String> = self.coords.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl AbelianGroup {
    /// `C_{d_1} × ⋯ × C_{d_r}`; factors equal to 1 are allowed.
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.is_empty() {
            return domain("a group needs at least one cyclic factor");
        }
        if orders.contains(&0) {
            return domain("cyclic factor orders must be positive");
        }
        let mut order: u64 = 1;
        for &d in &orders {
            order = match order.checked_mul(d) {
                Some(o) if o <= ELEMENT_LIMIT => o,
                _ => return capacity(format!("group order of {orders:?} exceeds {ELEMENT_LIMIT}")),
            };
        }
        Ok(AbelianGroup { orders, order })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn size(&self) -> usize {
        self.order as usize
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// The element with the given coordinates, reduced modulo each `d_i`.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.orders.len() {
            return Err(Error::GroupMismatch(format!(
                "element has {} coordinates, group has rank {}",
                coords.len(),
                self.orders.len()
            )));
        }
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &d)| i128::from(c).rem_euclid(i128::from(d)) as u64)
                .collect(),
        })
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.orders.len()],
        }
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.coords.len() == self.orders.len() && x.coords.iter().zip(&self.orders).all(|(c, d)| c < d)
    }

    fn check(&self, x: &GroupElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{x} is not an element of {self}")))
        }
    }

    pub fn index_of(&self, x: &GroupElement) -> usize {
        let mut idx = 0u64;
        for (c, d) in x.coords.iter().zip(&self.orders) {
            idx = idx * d + c;
        }
        idx as usize
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut coords = vec![0; self.orders.len()];
        for (c, &d) in coords.iter_mut().zip(&self.orders).rev() {
            *c = idx as u64 % d;
            idx /= d as usize;
        }
        GroupElement { coords }
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.size()).map(|i| self.element_at(i))
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        GroupElement {
            coords: x
                .coords
                .iter()
                .zip(&y.coords)
                .zip(&self.orders)
                .map(|((a, b), d)| (a + b) % d)
                .collect(),
        }
    }

    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        GroupElement {
            coords: x.coords.iter().zip(&self.orders).map(|(a, d)| (d - a) % d).collect(),
        }
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.add(x, &self.neg(y))
    }

    /// Sum of two elements given by index.
    pub fn add_idx(&self, mut x: usize, mut y: usize) -> usize {
        let mut out = 0usize;
        let mut place = 1usize;
        for &d in self.orders.iter().rev() {
            let d = d as usize;
            out += ((x % d + y % d) % d) * place;
            place *= d;
            x /= d;
            y /= d;
        }
        out
    }

    pub fn neg_idx(&self, mut x: usize) -> usize {
        let mut out = 0usize;
        let mut place = 1usize;
        for &d in self.orders.iter().rev() {
            let d = d as usize;
            out += ((d - x % d) % d) * place;
            place *= d;
            x /= d;
        }
        out
    }

    pub fn sub_idx(&self, x: usize, y: usize) -> usize {
        self.add_idx(x, self.neg_idx(y))
    }

    /// Order of `x`: the lcm over coordinates of `d_i / gcd(d_i, x_i)`.
    pub fn element_order(&self, x: &GroupElement) -> u64 {
        x.coords
            .iter()
            .zip(&self.orders)
            .map(|(&c, &d)| d / d.gcd(&c))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// One representative per isomorphism class of abelian groups of order
    /// `n`, in invariant-factor form `d_1 | d_2 | ⋯`.
    pub fn isomorphism_classes(n: u64) -> Result<Vec<AbelianGroup>> {
        let fac = factorize(n)?;
        // One partition of the exponent per prime, parts in decreasing order.
        let mut families: Vec<Vec<(u64, Vec<u32>)>> = vec![Vec::new()];
        for &(p, e) in fac.factors() {
            families = families
                .iter()
                .flat_map(|fam| {
                    partitions(e).into_iter().map(move |part| {
                        let mut next = fam.clone();
                        next.push((p, part));
                        next
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for fam in families {
            let len = fam.iter().map(|(_, part)| part.len()).max().unwrap_or(0).max(1);
            // The i-th largest invariant factor takes the i-th largest part of every prime.
            let mut factors: Vec<u64> = (0..len)
                .map(|i| {
                    fam.iter()
                        .map(|(p, part)| p.pow(part.get(i).copied().unwrap_or(0)))
                        .product()
                })
                .collect();
            factors.reverse();
            out.push(AbelianGroup::new(factors)?);
        }
        out.sort_by(|a, b| a.orders.cmp(&b.orders));
        Ok(out)
    }

    /// Every ordered factorization of `n` into factors `≥ 2` (just `[1]` for
    /// `n = 1`): redundant presentations of the same isomorphism types.
    pub fn presentations(n: u64) -> Result<Vec<AbelianGroup>> {
        fn go(rest: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if rest == 1 {
                out.push(prefix.clone());
                return;
            }
            for d in 2..=rest {
                if rest.is_multiple_of(d) {
                    prefix.push(d);
                    go(rest / d, prefix, out);
                    prefix.pop();
                }
            }
        }
        if n == 0 {
            return domain("group order must be positive");
        }
        let mut out = Vec::new();
        if n == 1 {
            out.push(vec![1]);
        } else {
            go(n, &mut Vec::new(), &mut out);
        }
        out.into_iter().map(AbelianGroup::new).collect()
    }
}

fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(e, e, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|d| format!("C{d}")).collect();
        f.write_str(&parts.join("x"))
    }
}

/// A subgroup stored as the sorted set of its element indices.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: AbelianGroup,
    elements: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.elements.hash(state);
    }
}

impl Subgroup {
    /// Wraps a sorted, closed index set.
    pub(crate) fn from_sorted(parent: AbelianGroup, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.first() == Some(&0));
        Subgroup { parent, elements }
    }

    pub fn trivial(parent: &AbelianGroup) -> Self {
        Subgroup::from_sorted(parent.clone(), vec![0])
    }

    pub fn whole(parent: &AbelianGroup) -> Self {
        Subgroup::from_sorted(parent.clone(), (0..parent.size()).collect())
    }

    pub fn parent(&self) -> &AbelianGroup {
        &self.parent
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn element_indices(&self) -> &[usize] {
        &self.elements
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.elements.iter().map(|&i| self.parent.element_at(i)).collect()
    }

    pub fn contains_idx(&self, idx: usize) -> bool {
        self.elements.binary_search(&idx).is_ok()
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.parent.contains(x) && self.contains_idx(self.parent.index_of(x))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.elements.iter().all(|&i| other.contains_idx(i))
    }

    /// `[G : H]`.
    pub fn index(&self) -> u64 {
        self.parent.order() / self.order()
    }

    /// A small generating set, built greedily in index order.
    pub fn generating_set(&self) -> Vec<GroupElement> {
        let mut span = vec![0usize];
        let mut gens = Vec::new();
        for &x in &self.elements {
            if span.binary_search(&x).is_err() {
                span = join(&self.parent, &span, x);
                gens.push(self.parent.element_at(x));
            }
        }
        gens
    }

    fn check_parent(&self, other: &Subgroup) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::GroupMismatch(format!(
                "subgroups of {} and {}",
                self.parent, other.parent
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generating_set().iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// `H + ⟨g⟩` for a sorted closed index set `h`.
fn join(group: &AbelianGroup, h: &[usize], g: usize) -> Vec<usize> {
    let in_h = |x: usize| h.binary_search(&x).is_ok();
    let mut out: Vec<usize> = h.to_vec();
    let mut multiple = g;
    while !in_h(multiple) {
        out.extend(h.iter().map(|&x| group.add_idx(x, multiple)));
        multiple = group.add_idx(multiple, g);
    }
    out.sort_unstable();
    out
}

/// The smallest subgroup containing `gens`.
pub fn subgroup_from_generators(group: &AbelianGroup, gens: &[GroupElement]) -> Result<Subgroup> {
    let mut span = vec![0usize];
    for g in gens {
        group.check(g)?;
        let idx = group.index_of(g);
        if span.binary_search(&idx).is_err() {
            span = join(group, &span, idx);
        }
    }
    Ok(Subgroup::from_sorted(group.clone(), span))
}

/// Every subgroup exactly once, sorted by order and then by element set.
pub fn all_subgroups(group: &AbelianGroup) -> Result<Vec<Subgroup>> {
    if group.order() > SUBGROUP_LIMIT {
        return capacity(format!(
            "subgroup enumeration needs |G| <= {SUBGROUP_LIMIT}, got {}",
            group.order()
        ));
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![vec![0usize]];
    seen.insert(vec![0]);
    while let Some(h) = frontier.pop() {
        for g in 0..group.size() {
            if h.binary_search(&g).is_ok() {
                continue;
            }
            let joined = join(group, &h, g);
            if seen.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    let mut subs: Vec<Vec<usize>> = seen.into_iter().collect();
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(subs
        .into_iter()
        .map(|e| Subgroup::from_sorted(group.clone(), e))
        .collect())
}

pub fn intersect(h1: &Subgroup, h2: &Subgroup) -> Result<Subgroup> {
    h1.check_parent(h2)?;
    let elements = h1
        .elements
        .iter()
        .copied()
        .filter(|&i| h2.contains_idx(i))
        .collect();
    Ok(Subgroup::from_sorted(h1.parent.clone(), elements))
}

/// `[G : H]`.
pub fn index(group: &AbelianGroup, h: &Subgroup) -> Result<u64> {
    if &h.parent != group {
        return Err(Error::GroupMismatch(format!("subgroup of {} used in {group}", h.parent)));
    }
    Ok(h.index())
}

/// The coset `rep + H`, with `rep` normalized to the lexicographically least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coset {
    rep: usize,
    subgroup: Subgroup,
}

impl Coset {
    pub fn new(rep: &GroupElement, subgroup: &Subgroup) -> Result<Self> {
        subgroup.parent.check(rep)?;
        Ok(Self::from_idx(subgroup, subgroup.parent.index_of(rep)))
    }

    pub(crate) fn from_idx(subgroup: &Subgroup, rep: usize) -> Self {
        let g = &subgroup.parent;
        let least = subgroup
            .elements
            .iter()
            .map(|&h| g.add_idx(rep, h))
            .min()
            .expect("subgroups are nonempty");
        Coset {
            rep: least,
            subgroup: subgroup.clone(),
        }
    }

    /// `rep + ⟨gens⟩`.
    pub fn from_generators(group: &AbelianGroup, rep: &GroupElement, gens: &[GroupElement]) -> Result<Self> {
        Coset::new(rep, &subgroup_from_generators(group, gens)?)
    }

    pub fn rep(&self) -> GroupElement {
        self.subgroup.parent.element_at(self.rep)
    }

    pub fn rep_idx(&self) -> usize {
        self.rep
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.subgroup.parent
    }

    pub fn contains_idx(&self, x: usize) -> bool {
        self.subgroup.contains_idx(self.group().sub_idx(x, self.rep))
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.group().contains(x) && self.contains_idx(self.group().index_of(x))
    }

    /// A coset is proper when it misses the identity.
    pub fn is_proper(&self) -> bool {
        !self.contains_idx(0)
    }

    /// Sorted member indices.
    pub fn element_indices(&self) -> Vec<usize> {
        let g = self.group();
        let mut out: Vec<usize> = self.subgroup.elements.iter().map(|&h| g.add_idx(self.rep, h)).collect();
        out.sort_unstable();
        out
    }

    pub fn size(&self) -> usize {
        self.subgroup.elements.len()
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.rep(), self.subgroup)
    }
}

/// All cosets of `h`, ordered by representative.
pub fn cosets_of(h: &Subgroup) -> Vec<Coset> {
    let g = &h.parent;
    let mut seen = vec![false; g.size()];
    let mut out = Vec::new();
    for x in 0..g.size() {
        if seen[x] {
            continue;
        }
        let c = Coset::from_idx(h, x);
        for y in c.element_indices() {
            seen[y] = true;
        }
        out.push(c);
    }
    out
}

/// An indexed family `{a_s + G_s}` of cosets in one group; indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSystem {
    group: AbelianGroup,
    cosets: Vec<Coset>,
}

impl CosetSystem {
    pub fn new(group: AbelianGroup, cosets: Vec<Coset>) -> Result<Self> {
        if cosets.is_empty() {
            return domain("a coset system needs at least one coset");
        }
        if let Some(c) = cosets.iter().find(|c| c.group() != &group) {
            return Err(Error::GroupMismatch(format!("coset {c} does not live in {group}")));
        }
        Ok(CosetSystem { group, cosets })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn k(&self) -> usize {
        self.cosets.len()
    }

    /// The covering function `w(x)`.
    pub fn multiplicity(&self, x: &GroupElement) -> usize {
        self.cosets.iter().filter(|c| c.contains(x)).count()
    }

    /// `w` at every element, indexed like the group.
    pub fn multiplicity_table(&self) -> Vec<u32> {
        let mut table = vec![0u32; self.group.size()];
        for c in &self.cosets {
            for x in c.element_indices() {
                table[x] += 1;
            }
        }
        table
    }

    pub fn is_m_cover(&self, m: u32) -> Result<bool> {
        check_m(m)?;
        Ok(self.multiplicity_table().iter().all(|&w| w >= m))
    }

    pub fn is_exact_m_cover(&self, m: u32) -> Result<bool> {
        check_m(m)?;
        Ok(self.multiplicity_table().iter().all(|&w| w == m))
    }

    pub fn is_minimal_m_cover(&self, m: u32) -> Result<bool> {
        if !self.is_m_cover(m)? {
            return Ok(false);
        }
        Ok(self.irredundant_indices(m)?.len() == self.k())
    }

    /// Indices `t` such that dropping coset `t` leaves no m-cover.
    pub fn irredundant_indices(&self, m: u32) -> Result<Vec<usize>> {
        check_m(m)?;
        let table = self.multiplicity_table();
        Ok((0..self.k())
            .filter(|&t| {
                let c = &self.cosets[t];
                table
                    .iter()
                    .enumerate()
                    .any(|(x, &w)| w - u32::from(c.contains_idx(x)) < m)
            })
            .collect())
    }

    /// Indices of the cosets containing `a`.
    pub fn containing(&self, a: &GroupElement) -> Vec<usize> {
        (0..self.k()).filter(|&s| self.cosets[s].contains(a)).collect()
    }

    /// `H_a`: the intersection of the `G_s` whose cosets contain `a` (all of `G`
    /// when there are none).
    pub fn stabilizing_subgroup(&self, a: &GroupElement) -> Subgroup {
        let mut h = Subgroup::whole(&self.group);
        for s in self.containing(a) {
            h = intersect(&h, &self.cosets[s].subgroup).expect("same parent");
        }
        h
    }

    /// `N_a = [G : H_a]`.
    pub fn n_a(&self, a: &GroupElement) -> Result<u64> {
        self.group.check(a)?;
        Ok(self.stabilizing_subgroup(a).index())
    }

    /// `H = ⋂_s G_s`.
    pub fn common_subgroup(&self) -> Subgroup {
        self.cosets
            .iter()
            .skip(1)
            .fold(self.cosets[0].subgroup.clone(), |h, c| {
                intersect(&h, &c.subgroup).expect("same parent")
            })
    }

    pub(crate) fn require_base_point(&self, m: u32, a: &GroupElement) -> Result<()> {
        self.group.check(a)?;
        if !self.is_m_cover(m)? {
            return precondition(format!("system is not an {m}-cover of {}", self.group));
        }
        let w = self.multiplicity(a);
        if w != m as usize {
            return precondition(format!("w({a}) = {w}, expected exactly m = {m}"));
        }
        Ok(())
    }

    /// The same system read in `G/H` for `H = ⋂ G_s`. Indices `[G : G_s]` and
    /// all covering multiplicities are preserved.
    pub fn quotient_by_common_subgroup(&self) -> Result<(CosetSystem, Quotient)> {
        let q = Quotient::new(&self.common_subgroup())?;
        let cosets = self
            .cosets
            .iter()
            .map(|c| {
                let image: BTreeSet<usize> = c.subgroup.elements.iter().map(|&x| q.map[x]).collect();
                let sub = Subgroup::from_sorted(q.group.clone(), image.into_iter().collect());
                Coset::from_idx(&sub, q.map[c.rep])
            })
            .collect();
        Ok((CosetSystem::new(q.group.clone(), cosets)?, q))
    }
}

impl fmt::Display for CosetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cosets.iter().map(Coset::to_string).collect();
        write!(f, "{} in {}", format_args!("{{{}}}", parts.join(", ")), self.group)
    }
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        return domain("cover multiplicity m must be at least 1");
    }
    Ok(())
}

/// The quotient `G/H` presented as a product of cyclic groups, with the
/// projection as an index map.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: AbelianGroup,
    /// `map[x]` is the index in `group` of the image of element index `x`.
    pub map: Vec<usize>,
}

impl Quotient {
    /// Decomposes `G/H` greedily: at each step pick an element of largest order
    /// in the quotient by the span so far that has the same order in `G/H`;
    /// such a lift always exists, and the chosen elements form a basis.
    pub fn new(h: &Subgroup) -> Result<Self> {
        let g = &h.parent;
        let n = g.size();
        // Label cosets of H by first appearance.
        let mut label = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if label[x] != usize::MAX {
                continue;
            }
            let l = reps.len();
            for &y in &h.elements {
                label[g.add_idx(x, y)] = l;
            }
            reps.push(x);
        }
        let nq = reps.len();
        let add = |a: usize, b: usize| label[g.add_idx(reps[a], reps[b])];

        let mut in_span = vec![false; nq];
        in_span[0] = true;
        let mut span_size = 1usize;
        let mut basis: Vec<(usize, u64)> = Vec::new();
        while span_size < nq {
            let order_mod = |x: usize, span: &[bool]| {
                let mut y = x;
                let mut j = 1u64;
                while !span[y] {
                    y = add(y, x);
                    j += 1;
                }
                (j, y)
            };
            let mut best: Option<(u64, usize)> = None;
            let mut max_order = 0;
            for x in 0..nq {
                let (o, _) = order_mod(x, &in_span);
                max_order = max_order.max(o);
            }
            for x in 0..nq {
                let (o, y) = order_mod(x, &in_span);
                if o == max_order && y == 0 {
                    best = Some((o, x));
                    break;
                }
            }
            let (o, x) = best.expect("an order-preserving lift exists");
            let current: Vec<usize> = (0..nq).filter(|&y| in_span[y]).collect();
            let mut multiple = x;
            for _ in 1..o {
                for &y in &current {
                    let z = add(y, multiple);
                    debug_assert!(!in_span[z]);
                    in_span[z] = true;
                }
                multiple = add(multiple, x);
            }
            span_size *= o as usize;
            basis.push((x, o));
        }
        if basis.is_empty() {
            basis.push((0, 1));
        }
        let group = AbelianGroup::new(basis.iter().map(|&(_, o)| o).collect())?;
        // coords -> label, then invert.
        let mut to_q = vec![usize::MAX; nq];
        for qi in 0..group.size() {
            let coords = group.element_at(qi);
            let mut acc = 0usize;
            for (&(b, _), &c) in basis.iter().zip(&coords.coords) {
                for _ in 0..c {
                    acc = add(acc, b);
                }
            }
            assert_eq!(to_q[acc], usize::MAX, "quotient basis is not independent");
            to_q[acc] = qi;
        }
        let map = (0..n).map(|x| to_q[label[x]]).collect();
        Ok(Quotient { group, map })
    }
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// For an m-cover: for every `a` with `w(a) = m`, `N_a ≤ 2^{k−m}` and
/// `k ≥ m + f(N_a)`; for every irredundant `t`, `[G:G_t] ≤ 2^{k−m}` and
/// `k ≥ m + f([G:G_t])`.
pub fn check_coset_cover_bounds(system: &CosetSystem, m: u32) -> Result<BoundReport> {
    if !system.is_m_cover(m)? {
        return precondition(format!("system is not an {m}-cover of {}", system.group));
    }
    let k = system.k();
    let slack = (k - m as usize) as u64;
    let bound = pow2(slack);
    let table = system.multiplicity_table();
    let mut report = BoundReport::new("coset cover bounds");
    for (x, &w) in table.iter().enumerate() {
        if w != m {
            continue;
        }
        let a = system.group.element_at(x);
        let n_a = system.n_a(&a)?;
        let subject = format!("a={a}");
        if let Some(b) = bound {
            report.push(Witness::new(&subject, "2^(k-m) >= N_a", int(b), int(n_a)));
        }
        report.push(Witness::new(&subject, "k - m >= f(N_a)", int(slack), int(mycielski_f(n_a)?)));
    }
    for t in system.irredundant_indices(m)? {
        let idx = system.cosets[t].subgroup.index();
        let subject = format!("t={t}");
        if let Some(b) = bound {
            report.push(Witness::new(&subject, "2^(k-m) >= [G:G_t]", int(b), int(idx)));
        }
        report.push(Witness::new(&subject, "k - m >= f([G:G_t])", int(slack), int(mycielski_f(idx)?)));
    }
    Ok(report)
}

/// Restriction of an m-cover to a subgroup `K`:
/// `k − m ≥ |{s : a ∉ a_sG_s, K ⊄ G_s}| ≥ f([K : K ∩ H_a])`, and for each
/// irredundant `t` with `K ⊄ G_t`, `|{s : K ⊄ G_s}| ≥ 1 + f([K : G_t ∩ K])`.
pub fn check_subgroup_restriction(
    system: &CosetSystem,
    m: u32,
    a: &GroupElement,
    k_sub: &Subgroup,
) -> Result<BoundReport> {
    if k_sub.parent != system.group {
        return Err(Error::GroupMismatch(format!(
            "K is a subgroup of {}, system lives in {}",
            k_sub.parent, system.group
        )));
    }
    system.require_base_point(m, a)?;
    let k = system.k();
    let slack = (k - m as usize) as u64;
    let not_containing_k = |s: usize| !k_sub.is_subgroup_of(&system.cosets[s].subgroup);

    let mut report = BoundReport::new("subgroup restriction bounds");
    let subject = format!("a={a}");
    let count = (0..k)
        .filter(|&s| !system.cosets[s].contains(a) && not_containing_k(s))
        .count() as u64;
    let h_a = system.stabilizing_subgroup(a);
    let k_index = k_sub.order() / intersect(k_sub, &h_a)?.order();
    report.push(Witness::new(
        &subject,
        "k - m >= |{s : a not in a_sG_s, K not in G_s}|",
        int(slack),
        int(count),
    ));
    report.push(Witness::new(
        &subject,
        "|{s : a not in a_sG_s, K not in G_s}| >= f([K : K meet H_a])",
        int(count),
        int(mycielski_f(k_index)?),
    ));

    let total = (0..k).filter(|&s| not_containing_k(s)).count() as u64;
    for t in system.irredundant_indices(m)? {
        let g_t = &system.cosets[t].subgroup;
        if k_sub.is_subgroup_of(g_t) {
            report.note(format!("t={t}: K is contained in G_t, irredundant-coset bound not applicable"));
            continue;
        }
        let idx = k_sub.order() / intersect(g_t, k_sub)?.order();
        report.push(Witness::new(
            format!("t={t}"),
            "|{s : K not in G_s}| >= 1 + f([K : G_t meet K])",
            int(total),
            int(1 + mycielski_f(idx)?),
        ));
    }
    Ok(report)
}

/// The `p + 1` subgroups of order `p` of `C_p × C_p`, generated by `(1,0)`,
/// `(0,1)`, `(1,1)`, …, `(1,p−1)`, each taken as a coset of itself.
pub fn build_cp_cp_cover(p: u64) -> Result<CosetSystem> {
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    if p * p > SUBGROUP_LIMIT {
        return capacity(format!("p^2 = {} exceeds {SUBGROUP_LIMIT}", p * p));
    }
    let g = AbelianGroup::new(vec![p, p])?;
    let e = g.identity();
    let mut gens = vec![g.element(&[1, 0])?, g.element(&[0, 1])?];
    for j in 1..p as i64 {
        gens.push(g.element(&[1, j])?);
    }
    let cosets = gens
        .iter()
        .map(|x| Coset::from_generators(&g, &e, std::slice::from_ref(x)))
        .collect::<Result<Vec<_>>>()?;
    CosetSystem::new(g, cosets)
}

/// All `[G : H]` cosets of `h`: an exact 1-cover of its parent.
pub fn partition_cover(h: &Subgroup) -> Result<CosetSystem> {
    CosetSystem::new(h.parent.clone(), cosets_of(h))
}

/// Given proper cosets whose union is `G ∖ {e}`, checks `k ≥ f(|G|)`.
pub fn check_gao_geroldinger(group: &AbelianGroup, cosets: &[Coset]) -> Result<BoundReport> {
    let mut covered = vec![false; group.size()];
    for c in cosets {
        if c.group() != group {
            return Err(Error::GroupMismatch(format!("coset {c} does not live in {group}")));
        }
        if !c.is_proper() {
            return precondition(format!("coset {c} contains the identity"));
        }
        for x in c.element_indices() {
            covered[x] = true;
        }
    }
    if let Some(x) = (1..group.size()).find(|&x| !covered[x]) {
        return precondition(format!(
            "{} is not covered; the union is not G minus the identity",
            group.element_at(x)
        ));
    }
    let mut report = BoundReport::new("proper coset cover of G minus identity");
    report.push(Witness::new(
        format!("|G|={}", group.order()),
        "k >= f(|G|)",
        int(cosets.len() as u64),
        int(mycielski_f(group.order())?),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: &AbelianGroup, c: &[i64]) -> GroupElement {
        g.element(c).unwrap()
    }

    #[test]
    fn index_round_trip() {
        let g = AbelianGroup::new(vec![2, 3, 4]).unwrap();
        for i in 0..g.size() {
            assert_eq!(g.index_of(&g.element_at(i)), i);
        }
        let x = el(&g, &[1, 2, 3]);
        let y = el(&g, &[1, 2, 2]);
        assert_eq!(g.index_of(&g.add(&x, &y)), g.add_idx(g.index_of(&x), g.index_of(&y)));
        assert_eq!(g.element_order(&x), 12);
    }

    #[test]
    fn generated_subgroups() {
        let c4 = AbelianGroup::cyclic(4).unwrap();
        let h = subgroup_from_generators(&c4, &[el(&c4, &[2])]).unwrap();
        assert_eq!(h.element_indices(), &[0, 2]);

        let v4 = AbelianGroup::new(vec![2, 2]).unwrap();
        let h = subgroup_from_generators(&v4, &[el(&v4, &[1, 0])]).unwrap();
        assert_eq!(h.elements(), vec![el(&v4, &[0, 0]), el(&v4, &[1, 0])]);

        let c6 = AbelianGroup::cyclic(6).unwrap();
        let h = subgroup_from_generators(&c6, &[el(&c6, &[2]), el(&c6, &[3])]).unwrap();
        assert_eq!(h.order(), 6);

        let bad = subgroup_from_generators(&c6, &[el(&v4, &[1, 1])]);
        assert!(bad.is_err());
    }

    #[test]
    fn subgroup_counts() {
        let count = |o: Vec<u64>| all_subgroups(&AbelianGroup::new(o).unwrap()).unwrap().len();
        assert_eq!(count(vec![5]), 2);
        assert_eq!(count(vec![2, 2]), 5);
        assert_eq!(count(vec![4]), 3);
        assert_eq!(count(vec![12]), 6);
        assert_eq!(count(vec![2, 2, 2]), 16);
        assert_eq!(count(vec![3, 3]), 6);
        assert!(all_subgroups(&AbelianGroup::cyclic(1024).unwrap()).is_err());
    }

    #[test]
    fn intersections_and_index() {
        let g = AbelianGroup::new(vec![3, 3]).unwrap();
        let subs = all_subgroups(&g).unwrap();
        let order3: Vec<_> = subs.iter().filter(|h| h.order() == 3).collect();
        assert_eq!(order3.len(), 4);
        for (i, a) in order3.iter().enumerate() {
            assert_eq!(&intersect(a, a).unwrap(), *a);
            assert_eq!(index(&g, a).unwrap(), 3);
            for b in &order3[i + 1..] {
                assert_eq!(intersect(a, b).unwrap().order(), 1);
            }
        }
        let whole = Subgroup::whole(&g);
        assert_eq!(&intersect(order3[0], &whole).unwrap(), order3[0]);
        assert_eq!(index(&g, &whole).unwrap(), 1);

        let c12 = AbelianGroup::cyclic(12).unwrap();
        let h = subgroup_from_generators(&c12, &[el(&c12, &[6])]).unwrap();
        assert_eq!(index(&c12, &h).unwrap(), 6);
        assert!(intersect(&h, &whole).is_err());
    }

    #[test]
    fn coset_normalization() {
        let g = AbelianGroup::cyclic(6).unwrap();
        let h = subgroup_from_generators(&g, &[el(&g, &[2])]).unwrap();
        let c = Coset::new(&el(&g, &[5]), &h).unwrap();
        assert_eq!(c.rep(), el(&g, &[1]));
        assert_eq!(c, Coset::new(&el(&g, &[3]), &h).unwrap());
        assert!(c.is_proper());
        assert_eq!(cosets_of(&h).len(), 2);
    }

    #[test]
    fn cp_cp_cover_for_two() {
        let sys = build_cp_cp_cover(2).unwrap();
        let g = sys.group().clone();
        assert_eq!(sys.k(), 3);
        assert_eq!(sys.multiplicity(&g.identity()), 3);
        for x in g.elements().skip(1) {
            assert_eq!(sys.multiplicity(&x), 1);
        }
        assert!(sys.is_minimal_m_cover(1).unwrap());
        assert_eq!(sys.n_a(&el(&g, &[1, 0])).unwrap(), 2);
        assert_eq!(sys.n_a(&g.identity()).unwrap(), 4);
        let r = check_coset_cover_bounds(&sys, 1).unwrap();
        assert!(r.passed());
        assert_eq!(sys.irredundant_indices(1).unwrap(), vec![0, 1, 2]);
        assert!(build_cp_cp_cover(4).is_err());
        assert!(build_cp_cp_cover(23).is_err());
    }

    #[test]
    fn single_coset_system() {
        let g = AbelianGroup::new(vec![2, 4]).unwrap();
        let h = subgroup_from_generators(&g, &[el(&g, &[0, 1])]).unwrap();
        let sys = CosetSystem::new(g.clone(), vec![Coset::new(&g.identity(), &h).unwrap()]).unwrap();
        assert_eq!(sys.n_a(&g.identity()).unwrap(), 2);
        assert_eq!(sys.multiplicity(&el(&g, &[1, 0])), 0);
        assert_eq!(sys.n_a(&el(&g, &[1, 0])).unwrap(), 1);
    }

    #[test]
    fn partition_is_exact_and_irredundant() {
        let g = AbelianGroup::new(vec![2, 6]).unwrap();
        for h in all_subgroups(&g).unwrap() {
            let sys = partition_cover(&h).unwrap();
            assert_eq!(sys.k() as u64, h.index());
            assert!(sys.is_exact_m_cover(1).unwrap());
            assert_eq!(sys.irredundant_indices(1).unwrap().len(), sys.k());
        }
    }

    #[test]
    fn singleton_partition_of_c8() {
        let g = AbelianGroup::cyclic(8).unwrap();
        let sys = partition_cover(&Subgroup::trivial(&g)).unwrap();
        let r = check_coset_cover_bounds(&sys, 1).unwrap();
        assert!(r.passed());
        assert!(r
            .witnesses
            .iter()
            .any(|w| w.inequality == "k - m >= f(N_a)" && w.lhs == int(7u64) && w.rhs == int(3u64)));
    }

    #[test]
    fn bounds_require_cover() {
        let g = AbelianGroup::cyclic(4).unwrap();
        let h = Subgroup::trivial(&g);
        let sys = CosetSystem::new(g.clone(), vec![Coset::new(&g.identity(), &h).unwrap()]).unwrap();
        assert!(matches!(check_coset_cover_bounds(&sys, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn restriction_examples() {
        let sys = build_cp_cp_cover(2).unwrap();
        let g = sys.group().clone();
        let a = el(&g, &[1, 0]);
        let r = check_subgroup_restriction(&sys, 1, &a, &Subgroup::trivial(&g)).unwrap();
        assert!(r.passed());
        let r = check_subgroup_restriction(&sys, 1, &a, &Subgroup::whole(&g)).unwrap();
        assert!(r.passed());
        // K = G_0 is contained in G_0 itself: that irredundant index is skipped.
        let k0 = sys.cosets()[0].subgroup().clone();
        let r = check_subgroup_restriction(&sys, 1, &a, &k0).unwrap();
        assert!(r.passed());
        assert!(r.notes.iter().any(|n| n.starts_with("t=0")));
        assert!(check_subgroup_restriction(&sys, 1, &g.identity(), &k0).is_err());
    }

    #[test]
    fn gao_geroldinger_examples() {
        let v4 = AbelianGroup::new(vec![2, 2]).unwrap();
        let x = el(&v4, &[1, 0]);
        let y = el(&v4, &[0, 1]);
        let xy = el(&v4, &[1, 1]);
        // {y, xy} = y + <x> and {x, xy} = x + <y>.
        let c1 = Coset::from_generators(&v4, &y, std::slice::from_ref(&x)).unwrap();
        let c2 = Coset::from_generators(&v4, &x, std::slice::from_ref(&y)).unwrap();
        assert!(c1.contains(&xy) && c2.contains(&xy));
        assert!(check_gao_geroldinger(&v4, &[c1.clone(), c2]).unwrap().passed());
        // A single proper coset cannot reach all three non-identity elements.
        assert!(matches!(check_gao_geroldinger(&v4, &[c1]), Err(Error::Precondition(_))));

        let c4 = AbelianGroup::cyclic(4).unwrap();
        let two = subgroup_from_generators(&c4, &[el(&c4, &[2])]).unwrap();
        let odd = Coset::new(&el(&c4, &[1]), &two).unwrap();
        let single = Coset::new(&el(&c4, &[2]), &Subgroup::trivial(&c4)).unwrap();
        let r = check_gao_geroldinger(&c4, &[odd, single]).unwrap();
        assert!(r.passed());
        assert_eq!(r.witnesses[0].rhs, int(2u64));

        let g = AbelianGroup::new(vec![3, 3]).unwrap();
        let singles: Vec<Coset> = (1..g.size())
            .map(|i| Coset::from_idx(&Subgroup::trivial(&g), i))
            .collect();
        assert!(check_gao_geroldinger(&g, &singles).unwrap().passed());
        let with_e = Coset::from_idx(&Subgroup::trivial(&g), 0);
        assert!(check_gao_geroldinger(&g, &[with_e]).is_err());
    }

    #[test]
    fn isomorphism_class_counts() {
        let names = |n| {
            AbelianGroup::isomorphism_classes(n)
                .unwrap()
                .into_iter()
                .map(|g| g.orders().to_vec())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(1), vec![vec![1]]);
        assert_eq!(names(12), vec![vec![2, 6], vec![12]]);
        assert_eq!(names(8), vec![vec![2, 2, 2], vec![2, 4], vec![8]]);
        assert_eq!(names(16).len(), 5);
        assert_eq!(names(36), vec![vec![2, 18], vec![3, 12], vec![6, 6], vec![36]]);
    }

    #[test]
    fn presentations_of_twelve() {
        let p = AbelianGroup::presentations(12).unwrap();
        assert_eq!(p.len(), 8);
        assert!(p.iter().all(|g| g.order() == 12));
    }

    #[test]
    fn quotient_preserves_indices() {
        let g = AbelianGroup::new(vec![2, 4]).unwrap();
        let h = subgroup_from_generators(&g, &[el(&g, &[1, 2])]).unwrap();
        let q = Quotient::new(&h).unwrap();
        assert_eq!(q.group.order(), 4);
        assert_eq!(q.group.orders(), &[4]);
        // The projection is a homomorphism with kernel H.
        for x in 0..g.size() {
            for y in 0..g.size() {
                assert_eq!(q.map[g.add_idx(x, y)], q.group.add_idx(q.map[x], q.map[y]));
            }
            assert_eq!(q.map[x] == 0, h.contains_idx(x));
        }
    }
}
