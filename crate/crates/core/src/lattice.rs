//! Enumeration of graded ideals and submodules.
//!
//! A graded subobject is generated by homogeneous elements, so the lattice is
//! reached from the zero subobject by repeatedly adding cyclic spans of
//! homogeneous generators.

use std::collections::{HashSet, VecDeque};

use crate::algebra::{additive_closure, closure, Carrier, ElementSet};
use crate::grading::{GradedModule, GradedRing};

/// All subsets of `c` closed under addition and the `scalars` action that are
/// generated by elements of `pool`, sorted by size then lexicographically.
///
/// With `max_generators = Some(k)` only subobjects needing at most `k`
/// cyclic generators are returned.
pub fn lattice<C: Carrier + ?Sized>(
    c: &C,
    scalars: &[usize],
    pool: &[usize],
    max_generators: Option<usize>,
) -> Vec<ElementSet> {
    let zero = closure(c, scalars, std::iter::empty());
    let mut cyclic: Vec<ElementSet> = pool.iter().map(|&x| closure(c, scalars, [x])).collect();
    cyclic.sort();
    cyclic.dedup();
    let mut found: HashSet<ElementSet> = HashSet::new();
    let mut queue = VecDeque::new();
    found.insert(zero.clone());
    queue.push_back((zero, 0usize));
    while let Some((s, depth)) = queue.pop_front() {
        if max_generators.is_some_and(|k| depth >= k) {
            continue;
        }
        for cyc in &cyclic {
            if cyc.is_subset(&s) {
                continue;
            }
            let joined = additive_closure(c, s.iter().chain(cyc.iter()));
            if !found.contains(&joined) {
                found.insert(joined.clone());
                queue.push_back((joined, depth + 1));
            }
        }
    }
    let mut out: Vec<ElementSet> = found.into_iter().collect();
    out.sort();
    out
}

pub fn graded_submodules(m: &GradedModule) -> Vec<ElementSet> {
    let scalars: Vec<usize> = m.ring().elements().collect();
    let pool: Vec<usize> = m.homogeneous().iter().collect();
    lattice(&**m.module(), &scalars, &pool, None)
}

pub fn graded_ideals(r: &GradedRing) -> Vec<ElementSet> {
    let scalars: Vec<usize> = r.ring().elements().collect();
    let pool: Vec<usize> = r.homogeneous().iter().collect();
    lattice(&**r.ring(), &scalars, &pool, None)
}

/// `R_e`-submodules of the component `M_g`.
pub fn component_submodules(m: &GradedModule, g: usize) -> Vec<ElementSet> {
    let scalars: Vec<usize> = m.graded_ring().base().iter().collect();
    let pool: Vec<usize> = m.component(g).iter().collect();
    lattice(&**m.module(), &scalars, &pool, None)
}

/// Ideals of the base ring `R_e`.
pub fn base_ideals(r: &GradedRing) -> Vec<ElementSet> {
    let base: Vec<usize> = r.base().iter().collect();
    lattice(&**r.ring(), &base, &base, None)
}
