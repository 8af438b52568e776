use std::sync::Arc;

use crate::algebra::{Construction, ElementSet, FiniteModule, FiniteRing, ModuleTables, RingTables};
use crate::error::ConstructionError;
use crate::grading::{GradedModule, GradedRing};

/// A multiplicatively closed set of homogeneous elements containing one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicativeSet {
    elements: ElementSet,
}

impl MultiplicativeSet {
    /// Smallest multiplicative set containing `generators`.
    pub fn generated(ring: &GradedRing, generators: &[usize]) -> Result<Self, ConstructionError> {
        let r = &**ring.ring();
        if let Some(&bad) = generators.iter().find(|&&x| x >= r.size()) {
            return Err(crate::error::AlgebraError::OutOfRange {
                index: bad,
                size: r.size(),
            }
            .into());
        }
        if let Some(&bad) = generators.iter().find(|&&x| !ring.homogeneous().contains(x)) {
            return Err(ConstructionError::NotHomogeneous(bad));
        }
        let mut members = vec![r.one()];
        let mut i = 0;
        let mut seen = vec![false; r.size()];
        seen[r.one()] = true;
        for &x in generators {
            if !seen[x] {
                seen[x] = true;
                members.push(x);
            }
        }
        while i < members.len() {
            let x = members[i];
            for j in 0..=i {
                let p = r.mul(x, members[j]);
                if !seen[p] {
                    seen[p] = true;
                    members.push(p);
                }
            }
            i += 1;
        }
        Self::from_elements(ring, members)
    }

    /// Checks an explicit set: contains one, homogeneous, closed under products.
    pub fn from_elements(ring: &GradedRing, elements: impl IntoIterator<Item = usize>) -> Result<Self, ConstructionError> {
        let r = &**ring.ring();
        let elements: Vec<usize> = elements.into_iter().collect();
        if let Some(&bad) = elements.iter().find(|&&x| x >= r.size()) {
            return Err(crate::error::AlgebraError::OutOfRange {
                index: bad,
                size: r.size(),
            }
            .into());
        }
        let elements = ElementSet::new(r.size(), elements);
        if !elements.contains(r.one()) {
            return Err(ConstructionError::MissingOne);
        }
        if let Some(bad) = elements.iter().find(|&x| !ring.homogeneous().contains(x)) {
            return Err(ConstructionError::NotHomogeneous(bad));
        }
        for a in &elements {
            for b in &elements {
                let product = r.mul(a, b);
                if !elements.contains(product) {
                    return Err(ConstructionError::NotClosed { a, b, product });
                }
            }
        }
        Ok(MultiplicativeSet { elements })
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn meets(&self, other: &ElementSet) -> bool {
        self.elements.iter().any(|x| other.contains(x))
    }
}

/// `S⁻¹R` and `S⁻¹M` as fraction classes.
///
/// `r/s ~ r'/s'` iff `t(rs' − r's) = 0` for some `t ∈ S`. In a finite ring
/// every `s ∈ S` has some `u` with `su/1 = 1`, so every class contains a
/// fraction `x/1`; classes are numbered by their smallest such `x`.
#[derive(Debug, Clone)]
pub struct Localization {
    set: MultiplicativeSet,
    base: Arc<GradedModule>,
    ring: Arc<GradedRing>,
    module: Arc<GradedModule>,
    ring_map: Vec<usize>,
    module_map: Vec<usize>,
    /// `inverse[s]` is some `u ∈ R` with `su/1 = 1`; only meaningful for `s ∈ S`.
    inverse: Vec<usize>,
}

fn classes(size: usize, killed: &ElementSet, add: impl Fn(usize, usize) -> usize) -> (Vec<usize>, Vec<usize>) {
    let unset = usize::MAX;
    let mut map = vec![unset; size];
    let mut reps = Vec::new();
    for x in 0..size {
        if map[x] != unset {
            continue;
        }
        let class = reps.len();
        reps.push(x);
        for k in killed {
            map[add(x, k)] = class;
        }
    }
    (map, reps)
}

pub fn localize(module: &Arc<GradedModule>, set: &MultiplicativeSet) -> Result<Localization, ConstructionError> {
    let graded_ring = module.graded_ring();
    let r = &**graded_ring.ring();
    let m = &**module.module();
    let s_elems: Vec<usize> = set.elements().iter().collect();
    if s_elems.iter().any(|&x| x >= r.size()) || !set.contains(r.one()) {
        return Err(crate::error::AlgebraError::CarrierMismatch.into());
    }
    let killed_by_s = |x: usize, mul: &dyn Fn(usize, usize) -> usize, zero: usize| s_elems.iter().any(|&t| mul(t, x) == zero);
    let ring_kernel = ElementSet::new(
        r.size(),
        r.elements().filter(|&x| killed_by_s(x, &|a, b| r.mul(a, b), r.zero())),
    );
    let module_kernel = ElementSet::new(
        m.size(),
        m.elements().filter(|&x| killed_by_s(x, &|a, b| m.act(a, b), m.zero())),
    );
    let (ring_map, ring_reps) = classes(r.size(), &ring_kernel, |a, b| r.add(a, b));
    let (module_map, module_reps) = classes(m.size(), &module_kernel, |a, b| m.add(a, b));

    let mut inverse = vec![r.zero(); r.size()];
    for &s in &s_elems {
        let mut u = r.one();
        // powers of s eventually reach an inverse modulo the kernel
        let found = (0..=r.size()).any(|_| {
            if ring_map[r.mul(s, u)] == ring_map[r.one()] {
                return true;
            }
            u = r.mul(u, s);
            false
        });
        debug_assert!(found, "no inverse for {s}");
        inverse[s] = u;
    }

    let tables = RingTables {
        add: ring_reps.iter().map(|&a| ring_reps.iter().map(|&b| ring_map[r.add(a, b)]).collect()).collect(),
        mul: ring_reps.iter().map(|&a| ring_reps.iter().map(|&b| ring_map[r.mul(a, b)]).collect()).collect(),
        zero: ring_map[r.zero()],
        one: ring_map[r.one()],
    };
    let loc_ring = FiniteRing::from_tables(&tables, Construction::Localized)?;
    loc_ring.check_axioms()?;
    let loc_ring = Arc::new(loc_ring);

    let group = graded_ring.group();
    let ring_grading = graded_ring.grading();
    let mut ring_comps: Vec<Vec<usize>> = vec![vec![tables.zero]; group.size()];
    for x in ring_grading.homogeneous() {
        let Some(dx) = ring_grading.degree_of(x) else { continue };
        for &s in &s_elems {
            let Some(ds) = ring_grading.degree_of(s) else { continue };
            ring_comps[group.quotient(dx, ds)].push(ring_map[r.mul(x, inverse[s])]);
        }
    }
    let ring_comps = ring_comps
        .into_iter()
        .map(|c| ElementSet::new(ring_reps.len(), c))
        .collect();
    let loc_graded_ring = Arc::new(GradedRing::new(loc_ring.clone(), group, ring_comps)?);

    let mtables = ModuleTables {
        add: module_reps
            .iter()
            .map(|&a| module_reps.iter().map(|&b| module_map[m.add(a, b)]).collect())
            .collect(),
        action: ring_reps
            .iter()
            .map(|&x| module_reps.iter().map(|&a| module_map[m.act(x, a)]).collect())
            .collect(),
        zero: module_map[m.zero()],
    };
    let loc_module = FiniteModule::from_tables(&loc_ring, &mtables)?;
    loc_module.check_axioms()?;
    let module_grading = module.grading();
    let mut module_comps: Vec<Vec<usize>> = vec![vec![mtables.zero]; group.size()];
    for x in module_grading.homogeneous() {
        let Some(dx) = module_grading.degree_of(x) else { continue };
        for &s in &s_elems {
            let Some(ds) = ring_grading.degree_of(s) else { continue };
            module_comps[group.quotient(dx, ds)].push(module_map[m.act(inverse[s], x)]);
        }
    }
    let module_comps = module_comps
        .into_iter()
        .map(|c| ElementSet::new(module_reps.len(), c))
        .collect();
    let loc_graded_module = GradedModule::new(loc_graded_ring.clone(), Arc::new(loc_module), module_comps)?;

    Ok(Localization {
        set: set.clone(),
        base: module.clone(),
        ring: loc_graded_ring,
        module: Arc::new(loc_graded_module),
        ring_map,
        module_map,
        inverse,
    })
}

impl Localization {
    pub fn set(&self) -> &MultiplicativeSet {
        &self.set
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    /// Class of `x/1` in `S⁻¹R`.
    pub fn ring_map(&self, x: usize) -> usize {
        self.ring_map[x]
    }

    /// Class of `m/1` in `S⁻¹M`.
    pub fn module_map(&self, m: usize) -> usize {
        self.module_map[m]
    }

    /// Class of the fraction `r/s`; `s` must lie in `S`.
    pub fn ring_fraction(&self, r: usize, s: usize) -> usize {
        debug_assert!(self.set.contains(s));
        self.ring_map[self.base.ring().mul(r, self.inverse[s])]
    }

    /// Class of the fraction `m/s`; `s` must lie in `S`.
    pub fn module_fraction(&self, m: usize, s: usize) -> usize {
        debug_assert!(self.set.contains(s));
        self.module_map[self.base.module().act(self.inverse[s], m)]
    }

    pub fn base(&self) -> &Arc<GradedModule> {
        &self.base
    }

    /// `S⁻¹N = {m/s : m ∈ N, s ∈ S}`.
    pub fn transport(&self, n: &ElementSet) -> ElementSet {
        let s: Vec<usize> = self.set.elements().iter().collect();
        ElementSet::new(
            self.module.size(),
            n.iter().flat_map(|m| s.iter().map(move |&t| (m, t))).map(|(m, t)| self.module_fraction(m, t)),
        )
    }

    /// `S⁻¹I = {x/s : x ∈ I, s ∈ S}` inside `S⁻¹R`.
    pub fn transport_ideal(&self, i: &ElementSet) -> ElementSet {
        let s: Vec<usize> = self.set.elements().iter().collect();
        ElementSet::new(
            self.ring.ring().size(),
            i.iter().flat_map(|x| s.iter().map(move |&t| (x, t))).map(|(x, t)| self.ring_fraction(x, t)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_module, build_ring, span, ModuleSpec, RingSpec};
    use crate::grading::{GradingGroup, GradingSpec};
    use crate::predicates::colon_whole;

    fn z(n: usize) -> Arc<GradedModule> {
        let g = GradingGroup::new(vec![2]).unwrap();
        let r = Arc::new(build_ring(&RingSpec::Cyclic(n)).unwrap());
        let gr = Arc::new(GradedRing::from_spec(r.clone(), &g, &GradingSpec::Trivial).unwrap());
        let m = Arc::new(build_module(&ModuleSpec::Ring, &r).unwrap());
        Arc::new(GradedModule::from_spec(gr, m, &GradingSpec::Inherit).unwrap())
    }

    // classes of R x S under the raw fraction relation, by brute force
    fn naive_fraction_classes(r: &FiniteRing, s: &[usize]) -> usize {
        let pairs: Vec<(usize, usize)> = r.elements().flat_map(|x| s.iter().map(move |&t| (x, t))).collect();
        let equiv = |(a, s1): (usize, usize), (b, s2): (usize, usize)| {
            let diff = r.sub(r.mul(a, s2), r.mul(b, s1));
            s.iter().any(|&t| r.mul(t, diff) == r.zero())
        };
        let mut reps: Vec<(usize, usize)> = Vec::new();
        for p in pairs {
            if !reps.iter().any(|&q| equiv(p, q)) {
                reps.push(p);
            }
        }
        reps.len()
    }

    #[test]
    fn localizing_at_units_is_bijective() {
        let m = z(12);
        let s = MultiplicativeSet::from_elements(m.graded_ring(), [1, 5, 7, 11]).unwrap();
        let loc = localize(&m, &s).unwrap();
        assert_eq!(loc.ring().ring().size(), 12);
        let image: Vec<usize> = (0..12).map(|x| loc.ring_map(x)).collect();
        assert_eq!(image, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn localizing_at_powers_of_two_collapses_to_z3() {
        let m = z(12);
        let s = MultiplicativeSet::generated(m.graded_ring(), &[2]).unwrap();
        assert_eq!(s.elements().as_slice(), &[1, 2, 4, 8]);
        let loc = localize(&m, &s).unwrap();
        assert_eq!(loc.ring().ring().size(), 3);
        assert_eq!(naive_fraction_classes(m.ring(), &[1, 2, 4, 8]), 3);
        // the kernel is the 2-power torsion {0, 3, 6, 9}
        for x in [3, 6, 9] {
            assert_eq!(loc.ring_map(x), loc.ring_map(0));
        }
        assert_eq!(loc.ring_map(4), loc.ring_map(1));
        // 1/2 = 2/4 = 2 in Z3
        assert_eq!(loc.ring_fraction(1, 2), loc.ring_fraction(2, 4));
        assert_eq!(loc.ring().ring().mul(loc.ring_fraction(1, 2), loc.ring_map(2)), loc.ring().ring().one());
        let n = span(&**m.module(), &[4]).unwrap();
        assert!(s.meets(&colon_whole(&m, &n)));
        assert!(loc.transport(&n).is_full());
    }

    #[test]
    fn fraction_classes_match_brute_force() {
        for n in [4, 6, 8, 9, 10, 12] {
            let m = z(n);
            for a in 0..n {
                let s = MultiplicativeSet::generated(m.graded_ring(), &[a]).unwrap();
                let loc = localize(&m, &s).unwrap();
                let s_elems: Vec<usize> = s.elements().iter().collect();
                assert_eq!(loc.ring().ring().size(), naive_fraction_classes(m.ring(), &s_elems), "Z{n} at {a}");
                assert_eq!(loc.module().size(), loc.ring().ring().size());
            }
        }
    }

    #[test]
    fn zero_in_the_set_gives_the_zero_ring() {
        let m = z(6);
        let s = MultiplicativeSet::generated(m.graded_ring(), &[0]).unwrap();
        let loc = localize(&m, &s).unwrap();
        assert_eq!(loc.ring().ring().size(), 1);
        assert_eq!(loc.module().size(), 1);
    }

    #[test]
    fn bad_sets_are_rejected() {
        let m = z(12);
        let r = m.graded_ring();
        assert_eq!(MultiplicativeSet::from_elements(r, [5]), Err(ConstructionError::MissingOne));
        assert_eq!(
            MultiplicativeSet::from_elements(r, [1, 2]),
            Err(ConstructionError::NotClosed { a: 2, b: 2, product: 4 })
        );
        let g = GradingGroup::new(vec![2]).unwrap();
        let spec = RingSpec::GroupRing {
            coefficients: Box::new(RingSpec::Cyclic(3)),
            group: vec![2],
        };
        let gr = GradedRing::from_spec(Arc::new(build_ring(&spec).unwrap()), &g, &GradingSpec::Natural).unwrap();
        assert_eq!(MultiplicativeSet::generated(&gr, &[4]), Err(ConstructionError::NotHomogeneous(4)));
    }

    #[test]
    fn group_ring_localization_keeps_degrees() {
        let g = GradingGroup::new(vec![2]).unwrap();
        let spec = RingSpec::GroupRing {
            coefficients: Box::new(RingSpec::Cyclic(3)),
            group: vec![2],
        };
        let r = Arc::new(build_ring(&spec).unwrap());
        let gr = Arc::new(GradedRing::from_spec(r.clone(), &g, &GradingSpec::Natural).unwrap());
        let m = Arc::new(build_module(&ModuleSpec::Ring, &r).unwrap());
        let gm = Arc::new(GradedModule::from_spec(gr.clone(), m, &GradingSpec::Inherit).unwrap());
        let s = MultiplicativeSet::generated(&gr, &[3]).unwrap();
        assert_eq!(s.elements().as_slice(), &[1, 3]);
        let loc = localize(&gm, &s).unwrap();
        assert_eq!(loc.ring().ring().size(), 9);
        // 1/v has degree 1
        assert_eq!(loc.ring().grading().degree_of(loc.ring_fraction(1, 3)), Some(1));
    }
}
