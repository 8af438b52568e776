use std::sync::Arc;

use crate::algebra::{AlgebraicSubset, ElementSet, FiniteModule, ModuleTables, SubsetKind};
use crate::error::{ConstructionError, GradingError};
use crate::grading::GradedModule;

/// `M/K` with its projection. Classes are numbered in order of their smallest
/// member, which serves as the representative.
#[derive(Debug, Clone)]
pub struct Quotient {
    module: Arc<GradedModule>,
    projection: Vec<usize>,
    representatives: Vec<usize>,
}

impl Quotient {
    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    pub fn project_set(&self, xs: &ElementSet) -> ElementSet {
        ElementSet::new(self.representatives.len(), xs.iter().map(|x| self.projection[x]))
    }

    pub fn representative(&self, class: usize) -> usize {
        self.representatives[class]
    }

    pub fn size(&self) -> usize {
        self.representatives.len()
    }
}

/// Graded quotient with `(M/K)_g = (M_g + K)/K`.
pub fn quotient_module(module: &GradedModule, k: &AlgebraicSubset) -> Result<Quotient, ConstructionError> {
    let m = &**module.module();
    if k.kind() != SubsetKind::Submodule || !k.belongs_to(m) {
        return Err(crate::error::AlgebraError::CarrierMismatch.into());
    }
    if let Some(witness) = module.grading().graded_witness(k) {
        return Err(GradingError::NotGraded { witness }.into());
    }
    let unset = usize::MAX;
    let mut projection = vec![unset; m.size()];
    let mut representatives = Vec::new();
    for x in m.elements() {
        if projection[x] != unset {
            continue;
        }
        let class = representatives.len();
        representatives.push(x);
        for y in k.iter() {
            projection[m.add(x, y)] = class;
        }
    }
    let size = representatives.len();
    let ring = m.ring();
    let tables = ModuleTables {
        add: representatives
            .iter()
            .map(|&a| representatives.iter().map(|&b| projection[m.add(a, b)]).collect())
            .collect(),
        action: ring
            .elements()
            .map(|r| representatives.iter().map(|&a| projection[m.act(r, a)]).collect())
            .collect(),
        zero: projection[m.zero()],
    };
    let quotient = FiniteModule::from_tables(ring, &tables)?;
    let components = module
        .grading()
        .components()
        .iter()
        .map(|c| ElementSet::new(size, c.iter().map(|x| projection[x])))
        .collect();
    let graded = GradedModule::new(module.graded_ring().clone(), Arc::new(quotient), components)?;
    Ok(Quotient {
        module: Arc::new(graded),
        projection,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_module, build_ring, span, ModuleSpec, RingSpec};
    use crate::grading::{GradedRing, GradingGroup, GradingSpec};

    fn z12() -> GradedModule {
        let g = GradingGroup::new(vec![2]).unwrap();
        let r = Arc::new(build_ring(&RingSpec::Cyclic(12)).unwrap());
        let gr = Arc::new(GradedRing::from_spec(r.clone(), &g, &GradingSpec::Trivial).unwrap());
        let m = Arc::new(build_module(&ModuleSpec::Ring, &r).unwrap());
        GradedModule::from_spec(gr, m, &GradingSpec::Inherit).unwrap()
    }

    #[test]
    fn z12_mod_four_acts_like_z4() {
        let m = z12();
        let q = quotient_module(&m, &span(&**m.module(), &[4]).unwrap()).unwrap();
        assert_eq!(q.size(), 4);
        let qm = q.module().module();
        qm.check_axioms().unwrap();
        for r in 0..12 {
            for a in 0..4 {
                assert_eq!(qm.act(r, a), (r * a) % 4);
            }
        }
        assert_eq!(q.project(7), 3);
        assert_eq!(q.representative(3), 3);
    }

    #[test]
    fn trivial_quotients() {
        let m = z12();
        let by_zero = quotient_module(&m, &m.zero_submodule()).unwrap();
        assert_eq!(by_zero.size(), 12);
        assert!((0..12).all(|x| by_zero.project(x) == x));
        let by_all = quotient_module(&m, &m.whole()).unwrap();
        assert_eq!(by_all.size(), 1);
    }

    #[test]
    fn non_graded_kernel_is_rejected() {
        let g = GradingGroup::new(vec![2]).unwrap();
        let spec = RingSpec::GroupRing {
            coefficients: Box::new(RingSpec::Cyclic(3)),
            group: vec![2],
        };
        let r = Arc::new(build_ring(&spec).unwrap());
        let gr = Arc::new(GradedRing::from_spec(r.clone(), &g, &GradingSpec::Natural).unwrap());
        let m = Arc::new(build_module(&ModuleSpec::Ring, &r).unwrap());
        let gm = GradedModule::from_spec(gr, m.clone(), &GradingSpec::Inherit).unwrap();
        let k = span(&*m, &[4]).unwrap();
        assert!(matches!(
            quotient_module(&gm, &k),
            Err(ConstructionError::Grading(GradingError::NotGraded { witness: 4 }))
        ));
    }
}
