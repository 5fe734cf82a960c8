#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use coset_covers::abgroup::{all_subgroups, AbelianGroup, Coset, CosetSystem, Subgroup};
use coset_covers::zcover::{ResidueClass, ZCoverSystem};

/// Adds random cosets through under-covered points until every element is
/// covered at least `m` times, after `start` fully random cosets.
pub fn random_group_cover(rng: &mut StdRng, group: &AbelianGroup, start: usize, m: u32) -> CosetSystem {
    let subgroups: Vec<Subgroup> = all_subgroups(group).expect("small group");
    let mut cosets: Vec<Coset> = Vec::new();
    let mut counts = vec![0u32; group.size()];
    let push = |c: Coset, counts: &mut Vec<u32>, cosets: &mut Vec<Coset>| {
        for x in c.element_indices() {
            counts[x] += 1;
        }
        cosets.push(c);
    };
    for _ in 0..start {
        let h = subgroups.choose(rng).unwrap();
        let x = rng.gen_range(0..group.size());
        push(Coset::new(&group.element_at(x), h).unwrap(), &mut counts, &mut cosets);
    }
    while let Some(x) = (0..group.size()).find(|&x| counts[x] < m) {
        let h = subgroups.choose(rng).unwrap();
        push(Coset::new(&group.element_at(x), h).unwrap(), &mut counts, &mut cosets);
    }
    CosetSystem::new(group.clone(), cosets).unwrap()
}

/// Random residue classes with moduli up to `max_n`, topped up with classes
/// through under-covered residues until the system is an m-cover.
pub fn random_z_cover(rng: &mut StdRng, start: usize, max_n: u64, m: u32) -> ZCoverSystem {
    let mut classes: Vec<ResidueClass> = (0..start)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            ResidueClass::new(rng.gen_range(0..n as i64), n).unwrap()
        })
        .collect();
    loop {
        let period = if classes.is_empty() {
            1
        } else {
            ZCoverSystem::new(classes.clone()).unwrap().period().unwrap()
        };
        let weak = (0..period as i64).find(|&x| classes.iter().filter(|c| c.contains(x)).count() < m as usize);
        match weak {
            None => return ZCoverSystem::new(classes).unwrap(),
            Some(x) => {
                let n = rng.gen_range(1..=max_n);
                classes.push(ResidueClass::new(x, n).unwrap());
            }
        }
    }
}

/// Smallest positive `t` with `a + t` in every class containing `a`, i.e. the
/// modulus of their intersection, found by walking.
pub fn walked_n_a(system: &ZCoverSystem, a: i64) -> u64 {
    let containing: Vec<&ResidueClass> = system.classes().iter().filter(|c| c.contains(a)).collect();
    (1..)
        .find(|&t| containing.iter().all(|c| c.contains(a + t)))
        .unwrap() as u64
}

/// Classical and constructed covers of the integers.
pub fn classic_z_covers() -> Vec<(ZCoverSystem, u32)> {
    let pairs: Vec<(Vec<(i64, u64)>, u32)> = vec![
        (vec![(0, 1)], 1),
        (vec![(0, 2), (1, 2)], 1),
        (vec![(0, 2), (1, 4), (3, 4)], 1),
        (vec![(0, 3), (1, 3), (2, 3)], 1),
        (vec![(0, 2), (0, 3), (1, 4), (5, 6), (7, 12)], 1),
        (vec![(0, 2), (1, 4), (3, 8), (7, 8)], 1),
        (vec![(0, 2), (0, 3), (1, 4), (3, 8), (7, 12), (23, 24)], 1),
        (vec![(0, 1), (0, 2), (1, 2)], 2),
        (vec![(0, 2), (1, 2), (0, 3), (1, 3), (2, 3)], 2),
        (vec![(0, 2), (1, 4), (3, 4), (0, 3), (1, 3), (2, 3)], 2),
        (vec![(0, 6), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6)], 1),
        (vec![(0, 5), (1, 5), (2, 5), (3, 5), (4, 5), (0, 1)], 2),
    ];
    pairs
        .into_iter()
        .map(|(p, m)| (ZCoverSystem::from_pairs(&p).unwrap(), m))
        .collect()
}
