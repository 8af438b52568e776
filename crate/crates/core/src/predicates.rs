//! Exhaustive decision procedures for the prime-like submodule families.
//!
//! Each procedure scans pairs `(r, m)` in index order and stops at the first
//! violating pair, so witnesses are the lexicographically smallest.

use std::fmt;

use crate::algebra::{closure, colon_scalars, product_set, AlgebraicSubset, Carrier, ElementSet, SubsetKind};
use crate::error::{GradingError, PredicateError};
use crate::grading::{GradedModule, GradedRing};
use crate::lattice;

/// An element together with its degree (`None` for zero or non-homogeneous).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub index: usize,
    pub degree: Option<usize>,
}

/// Which defining condition a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Location {
    GradedPrime,
    GradedWeaklyPrime,
    GradedIePrime,
    GPrime { degree: usize },
    GIePrime { degree: usize },
    EIePrimeIdeal,
    NotMultiplication { scope: Scope },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::GradedPrime => f.write_str("graded-prime"),
            Location::GradedWeaklyPrime => f.write_str("graded-weakly-prime"),
            Location::GradedIePrime => f.write_str("graded-ie-prime"),
            Location::GPrime { degree } => write!(f, "g-prime[{degree}]"),
            Location::GIePrime { degree } => write!(f, "g-ie-prime[{degree}]"),
            Location::EIePrimeIdeal => f.write_str("e-ie-prime-ideal"),
            Location::NotMultiplication { scope } => write!(f, "multiplication[{scope}]"),
        }
    }
}

/// A concrete violating pair. For ideal predicates `vector` is the second
/// ring element; for multiplication checks it is the generator of a cyclic
/// subobject `K` with `K ≠ (K : M)M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub location: Location,
    pub scalar: Option<Point>,
    pub vector: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: bool,
    /// Set when the premise can never fire (nothing lies in the qualifying set).
    pub vacuous: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn holds(vacuous: bool) -> Self {
        Verdict {
            value: true,
            vacuous,
            witness: None,
        }
    }

    fn fails(witness: Witness) -> Self {
        Verdict {
            value: false,
            vacuous: false,
            witness: Some(witness),
        }
    }
}

/// Where a multiplication check is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scope {
    Whole,
    /// The component `M_g` as an `R_e`-module.
    Component(usize),
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Whole => f.write_str("whole"),
            Scope::Component(g) => write!(f, "component {g}"),
        }
    }
}

type DegreeOf<'a> = dyn Fn(usize) -> Option<usize> + 'a;

/// Shared scan: `r·m ∈ N − excluded` must force `m ∈ N` or `r ∈ colon`.
#[allow(clippy::too_many_arguments)]
fn scan<C: Carrier + ?Sized>(
    c: &C,
    scalars: &[usize],
    vectors: &[usize],
    n: &ElementSet,
    excluded: &ElementSet,
    colon: &ElementSet,
    location: Location,
    degrees: (&DegreeOf, &DegreeOf),
) -> Verdict {
    let qualifying = n.difference(excluded);
    if qualifying.is_empty() {
        return Verdict::holds(true);
    }
    for &r in scalars {
        if colon.contains(r) {
            continue;
        }
        for &m in vectors {
            if !n.contains(m) && qualifying.contains(c.act(r, m)) {
                return Verdict::fails(Witness {
                    location,
                    scalar: Some(Point {
                        index: r,
                        degree: (degrees.0)(r),
                    }),
                    vector: Point {
                        index: m,
                        degree: (degrees.1)(m),
                    },
                });
            }
        }
    }
    Verdict::holds(false)
}

fn check_submodule(module: &GradedModule, n: &AlgebraicSubset) -> Result<(), PredicateError> {
    let m = &**module.module();
    if n.kind() != SubsetKind::Submodule || !n.belongs_to(m) {
        return Err(crate::error::AlgebraError::CarrierMismatch.into());
    }
    if let Some(witness) = module.grading().graded_witness(n) {
        return Err(GradingError::NotGraded { witness }.into());
    }
    Ok(())
}

fn check_ideal(ring: &GradedRing, i: &AlgebraicSubset) -> Result<(), PredicateError> {
    if i.kind() != SubsetKind::Ideal {
        return Err(PredicateError::NotAnIdeal);
    }
    if !i.belongs_to(&**ring.ring()) {
        return Err(crate::error::AlgebraError::CarrierMismatch.into());
    }
    if let Some(witness) = ring.grading().graded_witness(i) {
        return Err(GradingError::NotGraded { witness }.into());
    }
    Ok(())
}

fn check_degree(module: &GradedModule, g: usize) -> Result<(), PredicateError> {
    if g >= module.group().size() {
        return Err(PredicateError::BadDegree(g));
    }
    Ok(())
}

/// `I_e = I ∩ R_e`.
pub fn identity_part(ring: &GradedRing, i: &ElementSet) -> ElementSet {
    i.intersection(ring.base())
}

/// `I_e·X`: additive span of `{a·x : a ∈ I_e, x ∈ X}`.
pub fn ie_times(module: &GradedModule, i: &ElementSet, x: &ElementSet) -> ElementSet {
    product_set(&**module.module(), &identity_part(module.graded_ring(), i), x)
}

/// `(N :_R M)`.
pub fn colon_whole(module: &GradedModule, n: &ElementSet) -> ElementSet {
    let m = &**module.module();
    colon_scalars(m, module.ring().elements(), &ElementSet::full(m.size()), n)
}

/// `(N_g :_{R_e} M_g)`, a subset of `R_e`.
pub fn colon_component(module: &GradedModule, n_g: &ElementSet, g: usize) -> ElementSet {
    colon_scalars(
        &**module.module(),
        module.graded_ring().base().iter(),
        module.component(g),
        n_g,
    )
}

/// Graded prime scan of `N` with an arbitrary excluded set: the premise only
/// fires for products landing in `N − excluded`.
pub fn is_graded_prime_relative(
    module: &GradedModule,
    n: &AlgebraicSubset,
    excluded: &ElementSet,
    location: Location,
) -> Result<Verdict, PredicateError> {
    check_submodule(module, n)?;
    if n.is_full() {
        return Err(PredicateError::ImproperSubmodule);
    }
    let ring = module.graded_ring();
    let scalars: Vec<usize> = ring.homogeneous().iter().collect();
    let vectors: Vec<usize> = module.homogeneous().iter().collect();
    let colon = colon_whole(module, n);
    let rd = |r: usize| ring.grading().degree_of(r);
    let md = |m: usize| module.grading().degree_of(m);
    Ok(scan(
        &**module.module(),
        &scalars,
        &vectors,
        n,
        excluded,
        &colon,
        location,
        (&rd, &md),
    ))
}

pub fn is_graded_prime(module: &GradedModule, n: &AlgebraicSubset) -> Result<Verdict, PredicateError> {
    let empty = ElementSet::empty(module.size());
    is_graded_prime_relative(module, n, &empty, Location::GradedPrime)
}

pub fn is_graded_weakly_prime(module: &GradedModule, n: &AlgebraicSubset) -> Result<Verdict, PredicateError> {
    let zero = ElementSet::new(module.size(), [module.module().zero()]);
    is_graded_prime_relative(module, n, &zero, Location::GradedWeaklyPrime)
}

pub fn is_graded_ie_prime(
    module: &GradedModule,
    n: &AlgebraicSubset,
    i: &AlgebraicSubset,
) -> Result<Verdict, PredicateError> {
    check_ideal(module.graded_ring(), i)?;
    check_submodule(module, n)?;
    let excluded = ie_times(module, i, n);
    is_graded_prime_relative(module, n, &excluded, Location::GradedIePrime)
}

/// Component scan on `M_g` over `R_e` with an arbitrary excluded set.
pub fn is_g_prime_relative(
    module: &GradedModule,
    n: &AlgebraicSubset,
    g: usize,
    excluded: &ElementSet,
    location: Location,
) -> Result<Verdict, PredicateError> {
    check_submodule(module, n)?;
    check_degree(module, g)?;
    let n_g = module.grading().component_of(n, g);
    if n_g == *module.component(g) {
        return Err(PredicateError::ImproperComponent { degree: g });
    }
    let ring = module.graded_ring();
    let scalars: Vec<usize> = ring.base().iter().collect();
    let vectors: Vec<usize> = module.component(g).iter().collect();
    let colon = colon_component(module, &n_g, g);
    let rd = |r: usize| ring.grading().degree_of(r);
    let md = |m: usize| module.grading().degree_of(m);
    Ok(scan(
        &**module.module(),
        &scalars,
        &vectors,
        &n_g,
        excluded,
        &colon,
        location,
        (&rd, &md),
    ))
}

pub fn is_g_prime(module: &GradedModule, n: &AlgebraicSubset, g: usize) -> Result<Verdict, PredicateError> {
    let empty = ElementSet::empty(module.size());
    is_g_prime_relative(module, n, g, &empty, Location::GPrime { degree: g })
}

pub fn is_g_ie_prime(
    module: &GradedModule,
    n: &AlgebraicSubset,
    i: &AlgebraicSubset,
    g: usize,
) -> Result<Verdict, PredicateError> {
    check_ideal(module.graded_ring(), i)?;
    check_submodule(module, n)?;
    check_degree(module, g)?;
    let n_g = module.grading().component_of(n, g);
    let excluded = ie_times(module, i, &n_g);
    is_g_prime_relative(module, n, g, &excluded, Location::GIePrime { degree: g })
}

/// Ideal-level scan inside `R_e` with an arbitrary excluded set.
pub fn is_e_prime_relative(ring: &GradedRing, j_e: &ElementSet, excluded: &ElementSet) -> Result<Verdict, PredicateError> {
    if j_e == ring.base() {
        return Err(PredicateError::ImproperIdeal);
    }
    let r = &**ring.ring();
    let base: Vec<usize> = ring.base().iter().collect();
    let rd = |x: usize| ring.grading().degree_of(x);
    Ok(scan(
        r,
        &base,
        &base,
        j_e,
        excluded,
        j_e,
        Location::EIePrimeIdeal,
        (&rd, &rd),
    ))
}

/// Whether `J_e` is an `e`-`I_e`-prime ideal of `R_e`.
pub fn is_e_ie_prime_ideal(ring: &GradedRing, j: &AlgebraicSubset, i: &AlgebraicSubset) -> Result<Verdict, PredicateError> {
    check_ideal(ring, j)?;
    check_ideal(ring, i)?;
    let j_e = identity_part(ring, j);
    let i_e = identity_part(ring, i);
    let excluded = product_set(&**ring.ring(), &i_e, &j_e);
    is_e_prime_relative(ring, &j_e, &excluded)
}

/// Every graded submodule (or every `R_e`-submodule of `M_g`) `K` satisfies
/// `K = (K : M)M`.
pub fn is_multiplication(module: &GradedModule, scope: Scope) -> Result<Verdict, PredicateError> {
    let m = &**module.module();
    let ring = module.graded_ring();
    let (subobjects, scalars, pool, whole) = match scope {
        Scope::Whole => (
            lattice::graded_submodules(module),
            ring.ring().elements().collect::<Vec<_>>(),
            module.homogeneous().iter().collect::<Vec<_>>(),
            ElementSet::full(m.size()),
        ),
        Scope::Component(g) => {
            check_degree(module, g)?;
            (
                lattice::component_submodules(module, g),
                ring.base().iter().collect(),
                module.component(g).iter().collect(),
                module.component(g).clone(),
            )
        }
    };
    let regenerated = |k: &ElementSet| {
        let colon = colon_scalars(m, scalars.iter().copied(), &whole, k);
        product_set(m, &colon, &whole)
    };
    if subobjects.iter().all(|k| regenerated(k) == *k) {
        return Ok(Verdict::holds(false));
    }
    // a failing subobject implies a failing cyclic one
    let generator = pool
        .iter()
        .copied()
        .find(|&x| {
            let k = closure(m, &scalars, [x]);
            regenerated(&k) != k
        })
        .expect("some cyclic subobject fails");
    Ok(Verdict::fails(Witness {
        location: Location::NotMultiplication { scope },
        scalar: None,
        vector: Point {
            index: generator,
            degree: module.grading().degree_of(generator),
        },
    }))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{build_module, build_ring, span, ModuleSpec, RingSpec};
    use crate::grading::{GradingGroup, GradingSpec};

    fn z2() -> GradingGroup {
        GradingGroup::new(vec![2]).unwrap()
    }

    fn setting(ring: RingSpec, rg: GradingSpec, module: ModuleSpec, mg: GradingSpec) -> GradedModule {
        let r = Arc::new(build_ring(&ring).unwrap());
        let gr = Arc::new(GradedRing::from_spec(r.clone(), &z2(), &rg).unwrap());
        let m = Arc::new(build_module(&module, &r).unwrap());
        GradedModule::from_spec(gr, m, &mg).unwrap()
    }

    fn z(n: usize) -> GradedModule {
        setting(RingSpec::Cyclic(n), GradingSpec::Trivial, ModuleSpec::Ring, GradingSpec::Inherit)
    }

    fn sub(m: &GradedModule, gens: &[usize]) -> AlgebraicSubset {
        span(&**m.module(), gens).unwrap()
    }

    fn ideal(m: &GradedModule, gens: &[usize]) -> AlgebraicSubset {
        span(m.ring(), gens).unwrap()
    }

    fn pair(v: &Verdict) -> (usize, usize) {
        let w = v.witness.as_ref().unwrap();
        (w.scalar.unwrap().index, w.vector.index)
    }

    #[test]
    fn four_in_z12() {
        let m = z(12);
        let n = sub(&m, &[4]);
        let prime = is_graded_prime(&m, &n).unwrap();
        assert!(!prime.value);
        assert_eq!(pair(&prime), (2, 2));
        let weak = is_graded_weakly_prime(&m, &n).unwrap();
        assert_eq!(pair(&weak), (2, 2));
        let ie = is_graded_ie_prime(&m, &n, &ideal(&m, &[4])).unwrap();
        assert!(ie.value && ie.vacuous);
        let ie6 = is_graded_ie_prime(&m, &n, &ideal(&m, &[6])).unwrap();
        assert_eq!(pair(&ie6), (2, 2));
        let ie_r = is_graded_ie_prime(&m, &n, &ideal(&m, &[1])).unwrap();
        assert!(ie_r.value && ie_r.vacuous);
    }

    #[test]
    fn three_in_z12_is_prime() {
        let m = z(12);
        let n = sub(&m, &[3]);
        assert!(is_graded_prime(&m, &n).unwrap().value);
        assert!(is_graded_weakly_prime(&m, &n).unwrap().value);
        assert!(is_g_prime(&m, &n, 0).unwrap().value);
        assert!(is_g_ie_prime(&m, &n, &ideal(&m, &[0]), 0).unwrap().value);
    }

    #[test]
    fn component_predicates() {
        let m = z(12);
        let n = sub(&m, &[4]);
        assert_eq!(pair(&is_g_prime(&m, &n, 0).unwrap()), (2, 2));
        let v = is_g_ie_prime(&m, &n, &ideal(&m, &[4]), 0).unwrap();
        assert!(v.value && v.vacuous);
        assert_eq!(pair(&is_g_ie_prime(&m, &n, &ideal(&m, &[6]), 0).unwrap()), (2, 2));
        assert_eq!(
            is_g_prime(&m, &n, 1).unwrap_err(),
            PredicateError::ImproperComponent { degree: 1 }
        );
    }

    #[test]
    fn improper_submodule_is_an_error() {
        let m = z(12);
        assert_eq!(is_graded_prime(&m, &m.whole()).unwrap_err(), PredicateError::ImproperSubmodule);
    }

    #[test]
    fn weakly_prime_zero_is_vacuous() {
        for n in [4, 9, 12] {
            let m = z(n);
            let v = is_graded_weakly_prime(&m, &m.zero_submodule()).unwrap();
            assert!(v.value && v.vacuous);
        }
    }

    #[test]
    fn group_ring_zero_submodule_is_prime() {
        let m = setting(
            RingSpec::GroupRing {
                coefficients: Box::new(RingSpec::Cyclic(3)),
                group: vec![2],
            },
            GradingSpec::Natural,
            ModuleSpec::Ring,
            GradingSpec::Inherit,
        );
        assert!(is_graded_prime(&m, &m.zero_submodule()).unwrap().value);
    }

    #[test]
    fn e_ie_prime_ideals() {
        let m = z(12);
        let r = m.graded_ring();
        let j = ideal(&m, &[4]);
        let v = is_e_ie_prime_ideal(r, &j, &ideal(&m, &[2])).unwrap();
        assert!(v.value && v.vacuous);
        assert_eq!(pair(&is_e_ie_prime_ideal(r, &j, &ideal(&m, &[3])).unwrap()), (2, 2));
        let zero = ideal(&m, &[]);
        let v = is_e_ie_prime_ideal(r, &zero, &zero).unwrap();
        assert!(v.value && v.vacuous);
        assert_eq!(
            is_e_ie_prime_ideal(r, &ideal(&m, &[1]), &zero).unwrap_err(),
            PredicateError::ImproperIdeal
        );
    }

    #[test]
    fn multiplication_modules() {
        let m = z(12);
        assert!(is_multiplication(&m, Scope::Whole).unwrap().value);
        assert!(is_multiplication(&m, Scope::Component(0)).unwrap().value);
        let v2 = setting(
            RingSpec::Cyclic(2),
            GradingSpec::Trivial,
            ModuleSpec::Product(vec![ModuleSpec::Ring, ModuleSpec::Ring]),
            GradingSpec::Trivial,
        );
        let v = is_multiplication(&v2, Scope::Component(0)).unwrap();
        assert!(!v.value);
        assert_eq!(v.witness.unwrap().vector.index, 1);
        let axis = setting(
            RingSpec::Cyclic(2),
            GradingSpec::Trivial,
            ModuleSpec::Product(vec![ModuleSpec::Ring, ModuleSpec::Ring]),
            GradingSpec::Axis,
        );
        assert!(is_multiplication(&axis, Scope::Component(0)).unwrap().value);
        assert!(!is_multiplication(&axis, Scope::Whole).unwrap().value);
    }

    #[test]
    fn size_one_module_is_multiplication() {
        let r = Arc::new(build_ring(&RingSpec::Cyclic(2)).unwrap());
        let gr = Arc::new(GradedRing::from_spec(r.clone(), &z2(), &GradingSpec::Trivial).unwrap());
        let tables = crate::algebra::ModuleTables {
            add: vec![vec![0]],
            action: vec![vec![0], vec![0]],
            zero: 0,
        };
        let m = Arc::new(build_module(&ModuleSpec::Explicit(tables), &r).unwrap());
        let gm = GradedModule::from_spec(gr, m, &GradingSpec::Trivial).unwrap();
        assert!(is_multiplication(&gm, Scope::Whole).unwrap().value);
    }
}
