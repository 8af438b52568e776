use std::sync::Arc;

use crate::algebra::{closure, colon_scalars, module_product, product_set, AlgebraicSubset, ElementSet};
use crate::error::ConstructionError;
use crate::grading::GradedModule;
use crate::lattice;
use crate::predicates::{is_multiplication, Scope};

/// `M1 × M2` with `(M1 × M2)_g = M1_g × M2_g`. The pair `(a, b)` sits at
/// `a + |M1|·b`.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    module: Arc<GradedModule>,
    left_size: usize,
    right_size: usize,
}

impl DirectProduct {
    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    pub fn pair(&self, a: usize, b: usize) -> usize {
        a + self.left_size * b
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        (x % self.left_size, x / self.left_size)
    }

    /// `N1 × N2` as a subset of the product.
    pub fn embed(&self, n1: &ElementSet, n2: &ElementSet) -> AlgebraicSubset {
        let set = ElementSet::new(
            self.left_size * self.right_size,
            n2.iter().flat_map(|b| n1.iter().map(move |a| (a, b))).map(|(a, b)| self.pair(a, b)),
        );
        AlgebraicSubset::trusted(&**self.module.module(), set)
    }
}

pub fn direct_product(m1: &GradedModule, m2: &GradedModule) -> Result<DirectProduct, ConstructionError> {
    if m1.graded_ring() != m2.graded_ring() {
        return Err(ConstructionError::RingMismatch);
    }
    let module = module_product(&[(**m1.module()).clone(), (**m2.module()).clone()])?;
    let sizes = [m1.size(), m2.size()];
    let comps: Vec<Vec<Vec<usize>>> = [m1, m2]
        .iter()
        .map(|m| m.grading().components().iter().map(|c| c.as_slice().to_vec()).collect())
        .collect();
    let components = crate::grading::product_components(&comps, &sizes, m1.group().size())
        .into_iter()
        .map(|c| ElementSet::new(module.size(), c))
        .collect();
    let graded = GradedModule::new(m1.graded_ring().clone(), Arc::new(module), components)?;
    Ok(DirectProduct {
        module: Arc::new(graded),
        left_size: sizes[0],
        right_size: sizes[1],
    })
}

fn scope_data(module: &GradedModule, scope: Scope) -> (Vec<usize>, ElementSet) {
    match scope {
        Scope::Whole => (module.ring().elements().collect(), ElementSet::full(module.size())),
        Scope::Component(g) => (
            module.graded_ring().base().iter().collect(),
            module.component(g).clone(),
        ),
    }
}

/// `(N : M)(K : M)M`, or `(N_g : M_g)(K_g : M_g)M_g` over `R_e` for a component
/// scope. Assumes the scope is a multiplication module.
pub fn colon_product(module: &GradedModule, n: &ElementSet, k: &ElementSet, scope: Scope) -> ElementSet {
    let m = &**module.module();
    let (scalars, whole) = scope_data(module, scope);
    let (n, k) = match scope {
        Scope::Whole => (n.clone(), k.clone()),
        Scope::Component(_) => (n.intersection(&whole), k.intersection(&whole)),
    };
    let a = colon_scalars(m, scalars.iter().copied(), &whole, &n);
    let b = colon_scalars(m, scalars.iter().copied(), &whole, &k);
    let ideal = product_set(&**module.graded_ring().ring(), &a, &b);
    product_set(m, &ideal, &whole)
}

/// Product of two submodules of a multiplication module.
pub fn submodule_product(
    module: &GradedModule,
    n: &AlgebraicSubset,
    k: &AlgebraicSubset,
    scope: Scope,
) -> Result<ElementSet, ConstructionError> {
    let m = &**module.module();
    if !n.belongs_to(m) || !k.belongs_to(m) {
        return Err(crate::error::AlgebraError::CarrierMismatch.into());
    }
    let verdict = is_multiplication(module, scope)?;
    if !verdict.value {
        return Err(ConstructionError::NotMultiplication(scope.to_string()));
    }
    Ok(colon_product(module, n, k, scope))
}

/// `m1·m2 = (R_e m1)(R_e m2)` inside the component `M_g`.
pub fn element_product(module: &GradedModule, m1: usize, m2: usize, g: usize) -> Result<ElementSet, ConstructionError> {
    let m = &**module.module();
    let comp = module.component(g);
    if !comp.contains(m1) || !comp.contains(m2) {
        return Err(crate::error::AlgebraError::Malformed(format!("elements must lie in the component of degree {g}")).into());
    }
    let base: Vec<usize> = module.graded_ring().base().iter().collect();
    let a = AlgebraicSubset::trusted(m, closure(m, &base, [m1]));
    let b = AlgebraicSubset::trusted(m, closure(m, &base, [m2]));
    submodule_product(module, &a, &b, Scope::Component(g))
}

/// Looks for graded ideals `I1`, `I2` with `I1·M = N`, `I2·M = K` and
/// `I1·I2·M` different from the colon-presented product.
pub fn presentation_mismatch(module: &GradedModule, n: &ElementSet, k: &ElementSet) -> Option<(ElementSet, ElementSet)> {
    let m = &**module.module();
    let whole = ElementSet::full(m.size());
    let canonical = colon_product(module, n, k, Scope::Whole);
    let ideals = lattice::graded_ideals(module.graded_ring());
    let presenting = |target: &ElementSet| -> Vec<&ElementSet> {
        ideals.iter().filter(|i| product_set(m, i, &whole) == *target).collect()
    };
    let ring = &**module.graded_ring().ring();
    for i1 in presenting(n) {
        for i2 in presenting(k) {
            if product_set(m, &product_set(ring, i1, i2), &whole) != canonical {
                return Some((i1.clone(), i2.clone()));
            }
        }
    }
    None
}
