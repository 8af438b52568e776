//! Degree decompositions of finite rings and modules.

mod group;
mod radical;

pub use group::GradingGroup;
pub use radical::{graded_radical_ideal, graded_radical_submodule, graded_zero_divisors, radical_in_base};

use std::sync::Arc;

use crate::algebra::{
    join_index, split_index, AlgebraicSubset, Carrier, ElementSet, FiniteModule, FiniteRing, ModuleSpec,
    RingSpec, Shape,
};
use crate::error::GradingError;

/// A validated internal direct-sum decomposition of a carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    group: GradingGroup,
    components: Vec<ElementSet>,
    homogeneous: ElementSet,
    degree: Vec<Option<usize>>,
    parts: Vec<Vec<usize>>,
}

impl Grading {
    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn component(&self, g: usize) -> &ElementSet {
        &self.components[g]
    }

    pub fn components(&self) -> &[ElementSet] {
        &self.components
    }

    /// `h(X)`, the union of all components.
    pub fn homogeneous(&self) -> &ElementSet {
        &self.homogeneous
    }

    /// Degree of a nonzero homogeneous element; `None` for zero and for
    /// non-homogeneous elements.
    pub fn degree_of(&self, x: usize) -> Option<usize> {
        self.degree[x]
    }

    /// Homogeneous components of `x`, one per group element.
    pub fn parts(&self, x: usize) -> &[usize] {
        &self.parts[x]
    }

    /// `X ∩ component(g)`.
    pub fn component_of(&self, subset: &ElementSet, g: usize) -> ElementSet {
        subset.intersection(&self.components[g])
    }

    /// Whether `subset = ⊕_g (subset ∩ X_g)`; on failure, the smallest element
    /// with a homogeneous part outside the subset.
    pub fn graded_witness(&self, subset: &ElementSet) -> Option<usize> {
        subset
            .iter()
            .find(|&x| self.parts[x].iter().any(|&p| !subset.contains(p)))
    }

    pub fn is_graded(&self, subset: &ElementSet) -> bool {
        self.graded_witness(subset).is_none()
    }
}

/// Checks that `components` form an internal direct sum of additive subgroups.
pub fn validate_grading<C: Carrier + ?Sized>(
    carrier: &C,
    group: &GradingGroup,
    components: Vec<ElementSet>,
) -> Result<Grading, GradingError> {
    if components.len() != group.size() {
        return Err(GradingError::ComponentCount {
            expected: group.size(),
            found: components.len(),
        });
    }
    let size = carrier.size();
    let zero = carrier.zero();
    for (g, comp) in components.iter().enumerate() {
        if !comp.contains(zero) {
            return Err(GradingError::MissingZero { degree: g });
        }
        for a in comp {
            for b in comp {
                if !comp.contains(carrier.add(a, b)) {
                    return Err(GradingError::NotSubgroup { degree: g, a, b });
                }
            }
        }
    }
    let product: usize = components.iter().map(ElementSet::len).product();
    let sizes: Vec<usize> = components.iter().map(ElementSet::len).collect();
    let mut parts: Vec<Option<Vec<usize>>> = vec![None; size];
    let mut reached = vec![false; size];
    let mut collision = false;
    // odometer over one choice per component, capped so a wildly oversized
    // decomposition does not enumerate forever
    let limit = product.min(size * 4 + 1);
    for k in 0..limit {
        let choice = split_index(k, &sizes);
        let picked: Vec<usize> = choice
            .iter()
            .enumerate()
            .map(|(g, &i)| components[g].as_slice()[i])
            .collect();
        let sum = picked.iter().fold(zero, |acc, &x| carrier.add(acc, x));
        if reached[sum] {
            collision = true;
        } else {
            reached[sum] = true;
            parts[sum] = Some(picked);
        }
    }
    if product != size || collision {
        return Err(GradingError::DirectSum {
            product,
            size,
            missing: reached.iter().position(|&r| !r),
        });
    }
    let parts: Vec<Vec<usize>> = parts.into_iter().map(|p| p.expect("bijective")).collect();
    let mut degree = vec![None; size];
    for (g, comp) in components.iter().enumerate() {
        for x in comp {
            if x != zero {
                degree[x] = Some(g);
            }
        }
    }
    let homogeneous = components
        .iter()
        .fold(ElementSet::empty(size), |acc, c| acc.union(c));
    Ok(Grading {
        group: group.clone(),
        components,
        homogeneous,
        degree,
        parts,
    })
}

/// A finite ring with a validated grading: `R_g R_h ⊆ R_{gh}` and `1 ∈ R_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing {
    ring: Arc<FiniteRing>,
    grading: Grading,
}

impl GradedRing {
    pub fn new(ring: Arc<FiniteRing>, group: &GradingGroup, components: Vec<ElementSet>) -> Result<Self, GradingError> {
        let grading = validate_grading(&*ring, group, components)?;
        if !grading.component(group.identity()).contains(ring.one()) {
            return Err(GradingError::IdentityNotInBase);
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.op(g, h);
                for a in grading.component(g) {
                    for b in grading.component(h) {
                        if !grading.component(gh).contains(ring.mul(a, b)) {
                            return Err(GradingError::Compatibility { g, h, gh, a, b });
                        }
                    }
                }
            }
        }
        Ok(GradedRing { ring, grading })
    }

    pub fn from_spec(ring: Arc<FiniteRing>, group: &GradingGroup, spec: &GradingSpec) -> Result<Self, GradingError> {
        let comps = ring_components(&ring, group, spec)?;
        Self::new(ring, group, comps)
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn group(&self) -> &GradingGroup {
        self.grading.group()
    }

    /// `R_e`.
    pub fn base(&self) -> &ElementSet {
        self.grading.component(self.group().identity())
    }

    pub fn homogeneous(&self) -> &ElementSet {
        self.grading.homogeneous()
    }
}

/// A finite module with a validated grading compatible with its graded ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModule {
    ring: Arc<GradedRing>,
    module: Arc<FiniteModule>,
    grading: Grading,
}

impl GradedModule {
    pub fn new(ring: Arc<GradedRing>, module: Arc<FiniteModule>, components: Vec<ElementSet>) -> Result<Self, GradingError> {
        if module.ring().fingerprint() != ring.ring().fingerprint() {
            return Err(GradingError::Algebra(crate::error::AlgebraError::CarrierMismatch));
        }
        let group = ring.group().clone();
        let grading = validate_grading(&*module, &group, components)?;
        let rg = ring.grading();
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.op(g, h);
                for a in rg.component(g) {
                    for m in grading.component(h) {
                        if !grading.component(gh).contains(module.act(a, m)) {
                            return Err(GradingError::Compatibility { g, h, gh, a, b: m });
                        }
                    }
                }
            }
        }
        Ok(GradedModule { ring, module, grading })
    }

    pub fn from_spec(ring: Arc<GradedRing>, module: Arc<FiniteModule>, spec: &GradingSpec) -> Result<Self, GradingError> {
        let comps = module_components(&module, ring.grading(), spec)?;
        Self::new(ring, module, comps)
    }

    pub fn graded_ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn ring(&self) -> &FiniteRing {
        self.ring.ring()
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn group(&self) -> &GradingGroup {
        self.grading.group()
    }

    pub fn homogeneous(&self) -> &ElementSet {
        self.grading.homogeneous()
    }

    pub fn component(&self, g: usize) -> &ElementSet {
        self.grading.component(g)
    }

    pub fn size(&self) -> usize {
        self.module.size()
    }

    /// The whole module as a submodule.
    pub fn whole(&self) -> AlgebraicSubset {
        AlgebraicSubset::trusted(&*self.module, ElementSet::full(self.module.size()))
    }

    pub fn zero_submodule(&self) -> AlgebraicSubset {
        AlgebraicSubset::trusted(&*self.module, ElementSet::new(self.module.size(), [self.module.zero()]))
    }
}

/// How to produce the components of a grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingSpec {
    /// Everything in degree `e`.
    Trivial,
    /// Group ring `C[G]`: degree `g` holds the multiples of `g`.
    Natural,
    /// Ring as module, or products of such: componentwise from the ring grading.
    Inherit,
    /// Product module whose `k`-th factor sits entirely in degree `k`.
    Axis,
    /// Per-degree element lists; degrees not listed hold only zero.
    Explicit(Vec<(usize, Vec<usize>)>),
}

fn trivial_components(size: usize, zero: usize, group: &GradingGroup) -> Vec<ElementSet> {
    group
        .elements()
        .map(|g| {
            if g == group.identity() {
                ElementSet::full(size)
            } else {
                ElementSet::new(size, [zero])
            }
        })
        .collect()
}

fn explicit_components(
    size: usize,
    zero: usize,
    group: &GradingGroup,
    lists: &[(usize, Vec<usize>)],
) -> Result<Vec<ElementSet>, GradingError> {
    let mut comps: Vec<Vec<usize>> = vec![vec![zero]; group.size()];
    for (g, elems) in lists {
        if *g >= group.size() {
            return Err(GradingError::Unsupported(format!("degree {g} is not a group element")));
        }
        if let Some(&bad) = elems.iter().find(|&&x| x >= size) {
            return Err(crate::error::AlgebraError::OutOfRange { index: bad, size }.into());
        }
        comps[*g].extend(elems.iter().copied());
    }
    Ok(comps.into_iter().map(|c| ElementSet::new(size, c)).collect())
}

pub fn ring_components(ring: &FiniteRing, group: &GradingGroup, spec: &GradingSpec) -> Result<Vec<ElementSet>, GradingError> {
    let size = ring.size();
    match spec {
        GradingSpec::Trivial => Ok(trivial_components(size, ring.zero(), group)),
        GradingSpec::Explicit(lists) => explicit_components(size, ring.zero(), group, lists),
        GradingSpec::Natural => match ring.spec() {
            Some(RingSpec::GroupRing { coefficients, group: orders }) if orders == group.orders() => {
                let coeffs = crate::algebra::build_ring(coefficients)?;
                let sizes = vec![coeffs.size(); group.size()];
                Ok(group
                    .elements()
                    .map(|g| {
                        ElementSet::new(
                            size,
                            ring.elements().filter(|&x| {
                                split_index(x, &sizes)
                                    .iter()
                                    .enumerate()
                                    .all(|(k, &c)| k == g || c == coeffs.zero())
                            }),
                        )
                    })
                    .collect())
            }
            _ => Err(GradingError::Unsupported(
                "natural grading needs a group ring over the grading group".into(),
            )),
        },
        GradingSpec::Inherit | GradingSpec::Axis => Err(GradingError::Unsupported(
            "inherit and axis gradings apply to modules".into(),
        )),
    }
}

pub fn module_components(
    module: &FiniteModule,
    ring_grading: &Grading,
    spec: &GradingSpec,
) -> Result<Vec<ElementSet>, GradingError> {
    let group = ring_grading.group();
    let size = module.size();
    match spec {
        GradingSpec::Trivial => Ok(trivial_components(size, module.zero(), group)),
        GradingSpec::Explicit(lists) => explicit_components(size, module.zero(), group, lists),
        GradingSpec::Natural => Err(GradingError::Unsupported("natural grading applies to group rings".into())),
        GradingSpec::Inherit => {
            let spec = module
                .spec()
                .ok_or_else(|| GradingError::Unsupported("module has no construction to inherit from".into()))?;
            let lists = inherited(spec, module.shape(), ring_grading)?;
            Ok(lists.into_iter().map(|c| ElementSet::new(size, c)).collect())
        }
        GradingSpec::Axis => match (module.spec(), module.shape()) {
            (Some(ModuleSpec::Product(factors)), Shape::Tuple(parts)) if factors.len() <= group.size() => {
                let sizes: Vec<usize> = parts.iter().map(Shape::size).collect();
                let zeros = split_index(module.zero(), &sizes);
                Ok(group
                    .elements()
                    .map(|g| {
                        ElementSet::new(
                            size,
                            module.elements().filter(|&x| {
                                split_index(x, &sizes).iter().enumerate().all(|(k, &c)| k == g || c == zeros[k])
                            }),
                        )
                    })
                    .collect())
            }
            _ => Err(GradingError::Unsupported(
                "axis grading needs a product module with at most |G| factors".into(),
            )),
        },
    }
}

fn inherited(spec: &ModuleSpec, shape: &Shape, ring_grading: &Grading) -> Result<Vec<Vec<usize>>, GradingError> {
    match (spec, shape) {
        (ModuleSpec::Ring, _) => Ok(ring_grading.components().iter().map(|c| c.as_slice().to_vec()).collect()),
        (ModuleSpec::Product(factors), Shape::Tuple(parts)) => {
            let sizes: Vec<usize> = parts.iter().map(Shape::size).collect();
            let factor_comps = factors
                .iter()
                .zip(parts)
                .map(|(f, p)| inherited(f, p, ring_grading))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(product_components(&factor_comps, &sizes, ring_grading.group().size()))
        }
        _ => Err(GradingError::Unsupported(
            "only ring-as-module factors can inherit the ring grading".into(),
        )),
    }
}

/// `(M1 × … × Mk)_g = M1_g × … × Mk_g`, little-endian indices.
pub(crate) fn product_components(factor_comps: &[Vec<Vec<usize>>], sizes: &[usize], degrees: usize) -> Vec<Vec<usize>> {
    (0..degrees)
        .map(|g| {
            let lists: Vec<&Vec<usize>> = factor_comps.iter().map(|fc| &fc[g]).collect();
            let lens: Vec<usize> = lists.iter().map(|l| l.len()).collect();
            let total: usize = lens.iter().product();
            let mut out: Vec<usize> = (0..total)
                .map(|k| {
                    let pick = split_index(k, &lens);
                    let coords: Vec<usize> = pick.iter().enumerate().map(|(f, &i)| lists[f][i]).collect();
                    join_index(&coords, sizes)
                })
                .collect();
            out.sort_unstable();
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_module, build_ring, span};

    fn z2() -> GradingGroup {
        GradingGroup::new(vec![2]).unwrap()
    }

    fn z12_trivial() -> Arc<GradedRing> {
        let r = Arc::new(build_ring(&RingSpec::Cyclic(12)).unwrap());
        Arc::new(GradedRing::from_spec(r, &z2(), &GradingSpec::Trivial).unwrap())
    }

    fn z3_z2() -> Arc<GradedRing> {
        let r = Arc::new(
            build_ring(&RingSpec::GroupRing {
                coefficients: Box::new(RingSpec::Cyclic(3)),
                group: vec![2],
            })
            .unwrap(),
        );
        Arc::new(GradedRing::from_spec(r, &z2(), &GradingSpec::Natural).unwrap())
    }

    #[test]
    fn trivial_grading_of_z12() {
        let r = z12_trivial();
        assert_eq!(r.homogeneous().len(), 12);
        assert_eq!(r.grading().component(1).as_slice(), &[0]);
    }

    #[test]
    fn natural_grading_of_z3_z2() {
        let r = z3_z2();
        assert_eq!(r.base().as_slice(), &[0, 1, 2]);
        assert_eq!(r.grading().component(1).as_slice(), &[0, 3, 6]);
        assert_eq!(r.homogeneous().as_slice(), &[0, 1, 2, 3, 6]);
        assert_eq!(r.grading().degree_of(3), Some(1));
        assert_eq!(r.grading().degree_of(4), None);
        assert_eq!(r.grading().parts(4), &[1, 3]);
    }

    #[test]
    fn direct_sum_failure_is_reported() {
        let r = Arc::new(build_ring(&RingSpec::Cyclic(12)).unwrap());
        let comps = vec![ElementSet::new(12, [0, 4, 8]), ElementSet::new(12, [0, 6])];
        let err = GradedRing::new(r, &z2(), comps).unwrap_err();
        assert!(matches!(err, GradingError::DirectSum { product: 6, size: 12, missing: Some(1) }));
    }

    #[test]
    fn identity_outside_base_is_reported() {
        let r = Arc::new(build_ring(&RingSpec::Cyclic(2)).unwrap());
        let comps = vec![ElementSet::new(2, [0]), ElementSet::new(2, [0, 1])];
        assert_eq!(GradedRing::new(r, &z2(), comps), Err(GradingError::IdentityNotInBase));
    }

    #[test]
    fn incompatible_ring_grading_is_reported() {
        // Z2 x Z2 with the axes as components: (0,1)^2 = (0,1) is not in degree 0
        let r = Arc::new(build_ring(&RingSpec::Product(vec![RingSpec::Cyclic(2), RingSpec::Cyclic(2)])).unwrap());
        let comps = vec![ElementSet::new(4, [0, 1]), ElementSet::new(4, [0, 2])];
        assert!(matches!(GradedRing::new(r, &z2(), comps), Err(GradingError::IdentityNotInBase)));
        let comps = vec![ElementSet::new(4, [0, 3]), ElementSet::new(4, [0, 1])];
        assert!(matches!(
            GradedRing::new(
                Arc::new(build_ring(&RingSpec::Product(vec![RingSpec::Cyclic(2), RingSpec::Cyclic(2)])).unwrap()),
                &z2(),
                comps
            ),
            Err(GradingError::Compatibility { .. })
        ));
    }

    #[test]
    fn axis_grading_of_z12_squared() {
        let r = z12_trivial();
        let m = Arc::new(build_module(&ModuleSpec::Product(vec![ModuleSpec::Ring, ModuleSpec::Ring]), r.ring()).unwrap());
        let gm = GradedModule::from_spec(r, m, &GradingSpec::Axis).unwrap();
        assert_eq!(gm.homogeneous().len(), 23);
        assert_eq!(gm.component(0).len(), 12);
        assert_eq!(gm.component(1).as_slice()[1], 12);
    }

    #[test]
    fn inherited_grading_of_group_ring_module() {
        let r = z3_z2();
        let m = Arc::new(build_module(&ModuleSpec::Ring, r.ring()).unwrap());
        let gm = GradedModule::from_spec(r.clone(), m, &GradingSpec::Inherit).unwrap();
        assert_eq!(gm.grading(), r.grading());
    }

    #[test]
    fn gradedness_of_subsets() {
        let r = z3_z2();
        let span_1v = span(&**r.ring(), &[4]).unwrap();
        assert_eq!(span_1v.as_slice(), &[0, 4, 8]);
        assert_eq!(r.grading().graded_witness(&span_1v), Some(4));
        assert!(r.grading().is_graded(&ElementSet::full(9)));
        let z = z12_trivial();
        let four = span(&**z.ring(), &[4]).unwrap();
        assert!(z.grading().is_graded(&four));
        assert_eq!(z.grading().component_of(&four, 0), *four.set());
        assert_eq!(z.grading().component_of(&four, 1).as_slice(), &[0]);
    }
}
