//! Pointwise re-checks of claim witnesses.
//!
//! Everything here is recomputed from ring and module operations directly; the
//! decision procedures in `predicates` are not consulted.

use std::sync::Arc;

use crate::algebra::{additive_closure, closure, ElementSet, FiniteModule, FiniteRing};
use crate::constructions::{direct_product, localize, quotient_module};
use crate::grading::GradedModule;
use crate::predicates::{Location, Point};

use super::claims::{ClaimReport, Finding, Frame, LocalizedIdeal, WitnessPart};
use super::instance::Instance;

/// The module, submodule and excluded `I_e`-product a witness part is read in.
struct View {
    module: Arc<GradedModule>,
    n: ElementSet,
    ie_n: ElementSet,
}

fn ie_span(module: &GradedModule, ideal: &ElementSet, n: &ElementSet) -> ElementSet {
    let m = &**module.module();
    let base = module.graded_ring().base();
    let products: Vec<usize> = ideal
        .iter()
        .filter(|&a| base.contains(a))
        .flat_map(|a| n.iter().map(move |y| m.act(a, y)))
        .collect();
    additive_closure(m, products)
}

fn view(inst: &Instance, frame: Frame, variant: Option<LocalizedIdeal>) -> Option<View> {
    let module = inst.module().clone();
    let n = inst.submodule.clone();
    match frame {
        Frame::Base => {
            let ie_n = ie_span(&module, &inst.ideal, &n);
            Some(View { module, n, ie_n })
        }
        Frame::Quotient => {
            let kernel = ie_span(&module, &inst.ideal, &n);
            let q = quotient_module(&module, &crate::algebra::AlgebraicSubset::trusted(&**module.module(), kernel)).ok()?;
            let image = q.project_set(&n);
            let zero = ElementSet::new(q.size(), [q.module().module().zero()]);
            Some(View {
                module: q.module().clone(),
                n: image,
                ie_n: zero,
            })
        }
        Frame::ProductLeft | Frame::ProductRight => {
            let second = inst.extras.second_module.as_ref()?;
            let p = direct_product(&module, second).ok()?;
            let sub = if frame == Frame::ProductLeft {
                p.embed(&n, &ElementSet::full(second.size()))
            } else {
                p.embed(&ElementSet::full(module.size()), &n)
            };
            let ie_n = ie_span(p.module(), &inst.ideal, sub.set());
            Some(View {
                module: p.module().clone(),
                n: sub.into_set(),
                ie_n,
            })
        }
        Frame::Localized => {
            let set = inst.extras.mult_set.as_ref()?;
            let loc = &localize(&module, set).ok()?;
            let lm = &**loc.module().module();
            let s: Vec<usize> = set.elements().iter().collect();
            let s_n = ElementSet::new(
                lm.size(),
                n.iter().flat_map(|x| s.iter().map(move |&t| loc.module_fraction(x, t))),
            );
            let lbase = loc.ring().base();
            let scalars: Vec<usize> = match variant? {
                LocalizedIdeal::Base => {
                    let base = module.graded_ring().base();
                    inst.ideal.iter().filter(|&a| base.contains(a)).map(|a| loc.ring_map(a)).collect()
                }
                LocalizedIdeal::Localized => {
                    let mut fr: Vec<usize> = inst
                        .ideal
                        .iter()
                        .flat_map(|a| s.iter().map(move |&t| loc.ring_fraction(a, t)))
                        .filter(|&x| lbase.contains(x))
                        .collect();
                    fr.sort_unstable();
                    fr.dedup();
                    fr
                }
            };
            let products: Vec<usize> = scalars.iter().flat_map(|&a| s_n.iter().map(move |y| lm.act(a, y))).collect();
            let ie_n = additive_closure(lm, products);
            Some(View {
                module: loc.module().clone(),
                n: s_n,
                ie_n,
            })
        }
    }
}

fn in_range(p: Option<Point>, size: usize) -> Option<usize> {
    p.map(|p| p.index).filter(|&x| x < size)
}

/// `r·M ⊄ N` over `domain`.
fn escapes(m: &FiniteModule, r: usize, domain: &ElementSet, n: &ElementSet) -> bool {
    domain.iter().any(|x| !n.contains(m.act(r, x)))
}

/// `r·m ∈ N − excluded`, `m ∉ N`, `r·domain ⊄ N`.
fn prime_pair(m: &FiniteModule, r: usize, x: usize, n: &ElementSet, excluded: &ElementSet, domain: &ElementSet) -> bool {
    let rx = m.act(r, x);
    n.contains(rx) && !excluded.contains(rx) && !n.contains(x) && escapes(m, r, domain, n)
}

fn ring_span_products(ring: &FiniteRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    additive_closure(ring, a.iter().flat_map(|x| b.iter().map(move |y| ring.mul(x, y))).collect::<Vec<_>>())
}

/// Everything a degree finding needs, recomputed.
struct ComponentData {
    m_g: ElementSet,
    n_g: ElementSet,
    ie_n: ElementSet,
    /// `{s ∈ R_e : s·M_g ⊆ target}`.
    base: Vec<usize>,
}

impl ComponentData {
    fn new(inst: &Instance, g: usize) -> Option<Self> {
        let module = inst.module();
        if g >= module.group().size() {
            return None;
        }
        let m_g = module.component(g).clone();
        let n_g = inst.submodule.intersection(&m_g);
        Some(ComponentData {
            ie_n: ie_span(module, &inst.ideal, &n_g),
            base: module.graded_ring().base().iter().collect(),
            m_g,
            n_g,
        })
    }

    fn colon(&self, m: &FiniteModule, target: &ElementSet) -> ElementSet {
        ElementSet::new(
            m.ring().size(),
            self.base.iter().copied().filter(|&s| self.m_g.iter().all(|x| target.contains(m.act(s, x)))),
        )
    }

    fn is_submodule(&self, m: &FiniteModule, k: &ElementSet) -> bool {
        k.universe() == m.size()
            && k.is_subset(&self.m_g)
            && k.contains(m.zero())
            && k.iter().all(|a| k.iter().all(|b| k.contains(m.add(a, b))))
            && k.iter().all(|a| self.base.iter().all(|&s| k.contains(m.act(s, a))))
    }

    /// `(K : M_g)(L : M_g)M_g`.
    fn pair_product(&self, m: &FiniteModule, k: &ElementSet, l: &ElementSet) -> ElementSet {
        let ring = &**m.ring();
        let a = self.colon(m, k);
        let b = self.colon(m, l);
        let ab = ring_span_products(ring, &a, &b);
        additive_closure(m, ab.iter().flat_map(|s| self.m_g.iter().map(move |x| m.act(s, x))).collect::<Vec<_>>())
    }

    fn pair_violated(&self, m: &FiniteModule, k: &ElementSet, l: &ElementSet) -> bool {
        let p = self.pair_product(m, k, l);
        p.is_subset(&self.n_g) && !p.is_subset(&self.ie_n) && !k.is_subset(&self.n_g) && !l.is_subset(&self.n_g)
    }
}

fn ring_of(inst: &Instance) -> &FiniteRing {
    inst.ring().ring()
}

fn is_graded_ideal(inst: &Instance, k: &ElementSet) -> bool {
    let ring = ring_of(inst);
    let grading = inst.ring().grading();
    k.universe() == ring.size()
        && k.contains(ring.zero())
        && k.iter().all(|a| k.iter().all(|b| k.contains(ring.add(a, b))))
        && k.iter().all(|a| ring.elements().all(|s| k.contains(ring.mul(s, a))))
        && k.iter().all(|a| grading.parts(a).iter().all(|&p| k.contains(p)))
}

fn is_graded_submodule(inst: &Instance, k: &ElementSet) -> bool {
    let module = inst.module();
    let m = &**module.module();
    k.universe() == m.size()
        && k.contains(m.zero())
        && k.iter().all(|a| k.iter().all(|b| k.contains(m.add(a, b))))
        && k.iter().all(|a| m.ring().elements().all(|s| k.contains(m.act(s, a))))
        && k.iter().all(|a| module.grading().parts(a).iter().all(|&p| k.contains(p)))
}

/// Ideal-level data: `J_e`, `I_eJ_e` and `R_e`.
fn ideal_data(inst: &Instance) -> Option<(ElementSet, ElementSet, Vec<usize>)> {
    let j = inst.extras.ideal_j.as_ref()?;
    let base = inst.ring().base();
    let j_e = j.intersection(base);
    let i_e = inst.ideal.intersection(base);
    let ij = ring_span_products(ring_of(inst), &i_e, &j_e);
    Some((j_e, ij, base.iter().collect()))
}

fn check_part(inst: &Instance, part: &WitnessPart, variant: Option<LocalizedIdeal>) -> Option<bool> {
    let module = inst.module();
    let m = &**module.module();
    let ring = ring_of(inst);
    let base_set = inst.ring().base();
    match part.finding {
        Finding::Predicate(location) => {
            if location == Location::EIePrimeIdeal {
                let (j_e, ij, _) = ideal_data(inst)?;
                let r = in_range(part.scalar, ring.size())?;
                let s = in_range(part.vector, ring.size())?;
                let rs = ring.mul(r, s);
                return Some(
                    base_set.contains(r)
                        && base_set.contains(s)
                        && j_e.contains(rs)
                        && !ij.contains(rs)
                        && !j_e.contains(r)
                        && !j_e.contains(s),
                );
            }
            let v = view(inst, part.frame, variant)?;
            let vm = &**v.module.module();
            let r = in_range(part.scalar, vm.ring().size())?;
            let x = in_range(part.vector, vm.size())?;
            let rgrading = v.module.graded_ring().grading();
            let mgrading = v.module.grading();
            match location {
                Location::GradedPrime | Location::GradedWeaklyPrime | Location::GradedIePrime => {
                    let excluded = match location {
                        Location::GradedPrime => ElementSet::empty(vm.size()),
                        Location::GradedWeaklyPrime => ElementSet::new(vm.size(), [vm.zero()]),
                        _ => v.ie_n.clone(),
                    };
                    Some(
                        rgrading.homogeneous().contains(r)
                            && mgrading.homogeneous().contains(x)
                            && prime_pair(vm, r, x, &v.n, &excluded, &ElementSet::full(vm.size())),
                    )
                }
                Location::GPrime { degree } | Location::GIePrime { degree } => {
                    let c = ComponentData::new(inst, degree)?;
                    let excluded = match location {
                        Location::GPrime { .. } => ElementSet::empty(vm.size()),
                        _ => c.ie_n.clone(),
                    };
                    Some(
                        base_set.contains(r)
                            && c.m_g.contains(x)
                            && prime_pair(vm, r, x, &c.n_g, &excluded, &c.m_g),
                    )
                }
                _ => Some(false),
            }
        }
        Finding::ColonTimesSubmodule { degree } => {
            let c = ComponentData::new(inst, degree)?;
            let s = in_range(part.scalar, ring.size())?;
            let l = in_range(part.vector, m.size())?;
            Some(
                base_set.contains(s)
                    && !escapes(m, s, &c.m_g, &c.n_g)
                    && c.n_g.contains(l)
                    && !c.ie_n.contains(m.act(s, l)),
            )
        }
        Finding::ColonSquare { degree } => {
            let c = ComponentData::new(inst, degree)?;
            let s1 = in_range(part.scalar, ring.size())?;
            let s2 = in_range(part.extra.first().copied(), ring.size())?;
            let x = in_range(part.vector, m.size())?;
            let in_colon = |s: usize| base_set.contains(s) && !escapes(m, s, &c.m_g, &c.n_g);
            Some(in_colon(s1) && in_colon(s2) && c.m_g.contains(x) && !c.ie_n.contains(m.act(s1, m.act(s2, x))))
        }
        Finding::ColonUnion { degree } => {
            let c = ComponentData::new(inst, degree)?;
            let r = in_range(part.scalar, ring.size())?;
            let x = in_range(part.vector, m.size())?;
            let rx = m.act(r, x);
            Some(
                base_set.contains(r)
                    && escapes(m, r, &c.m_g, &c.n_g)
                    && c.m_g.contains(x)
                    && c.n_g.contains(rx) != (c.n_g.contains(x) || c.ie_n.contains(rx)),
            )
        }
        Finding::ColonBranch { degree } => {
            let c = ComponentData::new(inst, degree)?;
            let r = in_range(part.scalar, ring.size())?;
            let x1 = in_range(part.vector, m.size())?;
            let x2 = in_range(part.extra.first().copied(), m.size())?;
            Some(
                base_set.contains(r)
                    && escapes(m, r, &c.m_g, &c.n_g)
                    && c.m_g.contains(x1)
                    && c.m_g.contains(x2)
                    && c.n_g.contains(m.act(r, x1))
                    && !c.n_g.contains(x1)
                    && c.n_g.contains(m.act(r, x2))
                    && !c.ie_n.contains(m.act(r, x2)),
            )
        }
        Finding::RadicalExcess { degree } | Finding::RadicalShortfall { degree } => {
            let c = ComponentData::new(inst, degree)?;
            let a = c.colon(m, &c.ie_n);
            let in_radical = |x: usize| {
                let mut p = x;
                (0..ring.size()).any(|_| {
                    let hit = a.contains(p);
                    p = ring.mul(p, x);
                    hit
                })
            };
            if let Finding::RadicalExcess { .. } = part.finding {
                let s = in_range(part.scalar, ring.size())?;
                let l = in_range(part.vector, m.size())?;
                Some(base_set.contains(s) && in_radical(s) && c.n_g.contains(l) && !c.ie_n.contains(m.act(s, l)))
            } else {
                let x = in_range(part.vector, m.size())?;
                let rad: Vec<usize> = c.base.iter().copied().filter(|&s| in_radical(s)).collect();
                let lhs = additive_closure(
                    m,
                    rad.iter().flat_map(|&s| c.n_g.iter().map(move |l| m.act(s, l))).collect::<Vec<_>>(),
                );
                Some(c.ie_n.contains(x) && !lhs.contains(x))
            }
        }
        Finding::ColonIdeal { degree } => {
            let c = ComponentData::new(inst, degree)?;
            let colon = c.colon(m, &c.n_g);
            let i_e = inst.ideal.intersection(base_set);
            let excluded = ring_span_products(ring, &i_e, &colon);
            let r = in_range(part.scalar, ring.size())?;
            let s = in_range(part.vector, ring.size())?;
            let rs = ring.mul(r, s);
            Some(
                base_set.contains(r)
                    && base_set.contains(s)
                    && colon.contains(rs)
                    && !excluded.contains(rs)
                    && !colon.contains(r)
                    && !colon.contains(s),
            )
        }
        Finding::IdealColonUnion => {
            let (j_e, ij, _) = ideal_data(inst)?;
            let r = in_range(part.scalar, ring.size())?;
            let s = in_range(part.vector, ring.size())?;
            let rs = ring.mul(r, s);
            Some(
                base_set.contains(r)
                    && base_set.contains(s)
                    && !j_e.contains(r)
                    && j_e.contains(rs) != (j_e.contains(s) || ij.contains(rs)),
            )
        }
        Finding::IdealColonBranch => {
            let (j_e, ij, _) = ideal_data(inst)?;
            let r = in_range(part.scalar, ring.size())?;
            let s1 = in_range(part.vector, ring.size())?;
            let s2 = in_range(part.extra.first().copied(), ring.size())?;
            Some(
                [r, s1, s2].iter().all(|&x| base_set.contains(x))
                    && !j_e.contains(r)
                    && j_e.contains(ring.mul(r, s1))
                    && !j_e.contains(s1)
                    && j_e.contains(ring.mul(r, s2))
                    && !ij.contains(ring.mul(r, s2)),
            )
        }
        Finding::IdealPair => {
            let (j_e, ij, _) = ideal_data(inst)?;
            let [k, l] = part.sets.as_slice() else {
                return Some(false);
            };
            if !is_graded_ideal(inst, k) || !is_graded_ideal(inst, l) {
                return Some(false);
            }
            let k_e = k.intersection(base_set);
            let l_e = l.intersection(base_set);
            let p = ring_span_products(ring, &k_e, &l_e);
            Some(p.is_subset(&j_e) && !p.is_subset(&ij) && !k_e.is_subset(&j_e) && !l_e.is_subset(&j_e))
        }
        Finding::ComponentPair { degree } => {
            let c = ComponentData::new(inst, degree)?;
            let [k, l] = part.sets.as_slice() else {
                return Some(false);
            };
            Some(c.is_submodule(m, k) && c.is_submodule(m, l) && c.pair_violated(m, k, l))
        }
        Finding::ElementPair { degree } => {
            let c = ComponentData::new(inst, degree)?;
            let x1 = in_range(part.vector, m.size())?;
            let x2 = in_range(part.extra.first().copied(), m.size())?;
            if !c.m_g.contains(x1) || !c.m_g.contains(x2) {
                return Some(false);
            }
            let k = closure(m, &c.base, [x1]);
            let l = closure(m, &c.base, [x2]);
            Some(!c.n_g.contains(x1) && !c.n_g.contains(x2) && c.pair_violated(m, &k, &l))
        }
        Finding::Translate { degree } => {
            let [k] = part.sets.as_slice() else {
                return Some(false);
            };
            if !is_graded_submodule(inst, k) || degree >= module.group().size() {
                return Some(false);
            }
            let n = &inst.submodule;
            let ie_n = ie_span(module, &inst.ideal, n);
            let k_h = k.intersection(module.component(degree));
            let r = in_range(part.scalar, ring.size())?;
            let x = in_range(part.vector, m.size())?;
            let off = in_range(part.extra.first().copied(), m.size())?;
            Some(
                inst.ring().homogeneous().contains(r)
                    && k_h.iter().all(|y| n.contains(m.act(r, y)))
                    && k_h.contains(x)
                    && !ie_n.contains(m.act(r, x))
                    && k_h.contains(off)
                    && !n.contains(off)
                    && escapes(m, r, &ElementSet::full(m.size()), n),
            )
        }
    }
}

/// Whether every part of the report's witness reproduces on `instance`.
/// Reports without a witness never verify.
pub fn verify_witness(instance: &Instance, report: &ClaimReport) -> bool {
    match &report.witness {
        Some(w) if !w.parts.is_empty() && report.instance_id == instance.id => w
            .parts
            .iter()
            .all(|p| check_part(instance, p, report.variant).unwrap_or(false)),
        _ => false,
    }
}
