use crate::algebra::{AlgebraicSubset, ElementSet, FiniteRing, SubsetKind};
use crate::error::{GradingError, PredicateError};
use crate::lattice;
use crate::predicates;

use super::{GradedModule, GradedRing};

/// Whether some power `x^n`, `n ≥ 1`, lands in `target`. Stops once the power
/// sequence revisits a value.
pub(crate) fn some_power_in(ring: &FiniteRing, x: usize, target: &ElementSet) -> bool {
    let mut seen = vec![false; ring.size()];
    let mut p = x;
    loop {
        if target.contains(p) {
            return true;
        }
        if seen[p] {
            return false;
        }
        seen[p] = true;
        p = ring.mul(p, x);
    }
}

/// `Gr(I)`: elements whose homogeneous components each have a power in `I`.
pub fn graded_radical_ideal(ring: &GradedRing, ideal: &AlgebraicSubset) -> Result<AlgebraicSubset, GradingError> {
    let r = &**ring.ring();
    if ideal.kind() != SubsetKind::Ideal || !ideal.belongs_to(r) {
        return Err(crate::error::AlgebraError::CarrierMismatch.into());
    }
    let grading = ring.grading();
    if let Some(witness) = grading.graded_witness(ideal) {
        return Err(GradingError::NotGraded { witness });
    }
    let good: Vec<bool> = r
        .elements()
        .map(|x| grading.homogeneous().contains(x) && some_power_in(r, x, ideal))
        .collect();
    let set = ElementSet::new(
        r.size(),
        r.elements().filter(|&x| grading.parts(x).iter().all(|&p| good[p])),
    );
    let closed = set.iter().all(|a| {
        set.iter().all(|b| set.contains(r.add(a, b))) && r.elements().all(|s| set.contains(r.mul(s, a)))
    });
    if !closed {
        return Err(GradingError::RadicalNotIdeal);
    }
    Ok(AlgebraicSubset::trusted(r, set))
}

/// Radical of an ideal of the base ring `R_e`: `{r ∈ R_e : r^n ∈ J}`.
pub fn radical_in_base(ring: &GradedRing, ideal: &ElementSet) -> ElementSet {
    let r = &**ring.ring();
    ElementSet::new(r.size(), ring.base().iter().filter(|&x| some_power_in(r, x, ideal)))
}

/// `Gr_M(N)`: intersection of the graded prime submodules containing `N`, or
/// `M` when there are none.
pub fn graded_radical_submodule(
    module: &GradedModule,
    n: &AlgebraicSubset,
) -> Result<AlgebraicSubset, PredicateError> {
    let m = &**module.module();
    if !n.belongs_to(m) {
        return Err(crate::error::AlgebraError::CarrierMismatch.into());
    }
    if let Some(witness) = module.grading().graded_witness(n) {
        return Err(GradingError::NotGraded { witness }.into());
    }
    let mut acc = ElementSet::full(m.size());
    for candidate in lattice::graded_submodules(module) {
        if candidate.is_full() || !n.is_subset(&candidate) {
            continue;
        }
        let sub = AlgebraicSubset::trusted(m, candidate);
        if predicates::is_graded_prime(module, &sub)?.value {
            acc = acc.intersection(&sub);
        }
    }
    Ok(AlgebraicSubset::trusted(m, acc))
}

/// `G-Zdv(M)`: homogeneous ring elements killing some nonzero homogeneous element.
pub fn graded_zero_divisors(module: &GradedModule) -> ElementSet {
    let m = &**module.module();
    let ring = module.graded_ring();
    let targets: Vec<usize> = module.homogeneous().iter().filter(|&x| x != m.zero()).collect();
    ElementSet::new(
        ring.ring().size(),
        ring.homogeneous()
            .iter()
            .filter(|&r| targets.iter().any(|&x| m.act(r, x) == m.zero())),
    )
}
