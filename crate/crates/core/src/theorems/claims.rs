use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{closure, colon_scalars, product_set, AlgebraicSubset, ElementSet};
use crate::constructions::{colon_product, direct_product, quotient_module};
use crate::error::ClaimError;
use crate::grading::{graded_zero_divisors, radical_in_base, GradedModule, GradedRing};
use crate::predicates::{
    colon_component, colon_whole, identity_part, ie_times, is_e_prime_relative, is_g_ie_prime, is_g_prime,
    is_graded_ie_prime, is_graded_prime, is_graded_prime_relative, is_graded_weakly_prime, Location, Point, Scope,
    Verdict, Witness,
};

use super::instance::Instance;

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    T2_4,
    C2_5,
    C2_6,
    T2_7,
    T2_8,
    L2_9,
    T2_10,
    T2_11,
    T2_12,
    C2_13,
    T2_14,
    T2_15,
    T2_16i,
    T2_16ii,
    PrimeImpliesIe,
}

/// What an instance must carry for a claim to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `(I, N)` only.
    Base,
    /// `(I, N, g)`.
    Degree,
    /// `(I, J)` with `J` a graded ideal and `M = R`.
    IdealLevel,
    /// `(I, N, M2)`.
    Paired,
    /// `(I, N, S)`.
    Localized,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::T2_4,
        ClaimId::C2_5,
        ClaimId::C2_6,
        ClaimId::T2_7,
        ClaimId::T2_8,
        ClaimId::L2_9,
        ClaimId::T2_10,
        ClaimId::T2_11,
        ClaimId::T2_12,
        ClaimId::C2_13,
        ClaimId::T2_14,
        ClaimId::T2_15,
        ClaimId::T2_16i,
        ClaimId::T2_16ii,
        ClaimId::PrimeImpliesIe,
    ];

    pub const REQUIRED: [ClaimId; 12] = [
        ClaimId::T2_4,
        ClaimId::C2_5,
        ClaimId::C2_6,
        ClaimId::T2_7,
        ClaimId::T2_8,
        ClaimId::L2_9,
        ClaimId::T2_10,
        ClaimId::T2_11,
        ClaimId::T2_12,
        ClaimId::C2_13,
        ClaimId::T2_15,
        ClaimId::PrimeImpliesIe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::T2_4 => "T2_4",
            ClaimId::C2_5 => "C2_5",
            ClaimId::C2_6 => "C2_6",
            ClaimId::T2_7 => "T2_7",
            ClaimId::T2_8 => "T2_8",
            ClaimId::L2_9 => "L2_9",
            ClaimId::T2_10 => "T2_10",
            ClaimId::T2_11 => "T2_11",
            ClaimId::T2_12 => "T2_12",
            ClaimId::C2_13 => "C2_13",
            ClaimId::T2_14 => "T2_14",
            ClaimId::T2_15 => "T2_15",
            ClaimId::T2_16i => "T2_16i",
            ClaimId::T2_16ii => "T2_16ii",
            ClaimId::PrimeImpliesIe => "PRIME_IMPLIES_IE",
        }
    }

    pub fn shape(self) -> Shape {
        match self {
            ClaimId::T2_4
            | ClaimId::C2_5
            | ClaimId::C2_6
            | ClaimId::T2_7
            | ClaimId::L2_9
            | ClaimId::T2_10
            | ClaimId::T2_12
            | ClaimId::C2_13 => Shape::Degree,
            ClaimId::T2_8 | ClaimId::T2_15 | ClaimId::PrimeImpliesIe => Shape::Base,
            ClaimId::T2_11 => Shape::IdealLevel,
            ClaimId::T2_14 => Shape::Paired,
            ClaimId::T2_16i | ClaimId::T2_16ii => Shape::Localized,
        }
    }

    /// Whether the suite should evaluate this claim on `instance`.
    pub fn applies(self, instance: &Instance) -> bool {
        let e = &instance.extras;
        let shape = match (e.degree, &e.ideal_j, &e.second_module, &e.mult_set) {
            (None, None, None, None) => Shape::Base,
            (Some(_), None, None, None) => Shape::Degree,
            (None, Some(_), None, None) => Shape::IdealLevel,
            (None, None, Some(_), None) => Shape::Paired,
            (None, None, None, Some(_)) => Shape::Localized,
            _ => return false,
        };
        shape == self.shape() && (self != ClaimId::C2_5 || instance.ideal.len() == 1)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown claim {s:?}"))
    }
}

/// How the excluded set `I_e·S⁻¹N` is read after localizing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocalizedIdeal {
    /// The span of `(i/1)·y` for `i ∈ I_e`, `y ∈ S⁻¹N`.
    Base,
    /// `(S⁻¹I)_e · S⁻¹N`.
    Localized,
}

impl LocalizedIdeal {
    pub const BOTH: [LocalizedIdeal; 2] = [LocalizedIdeal::Base, LocalizedIdeal::Localized];

    pub fn name(self) -> &'static str {
        match self {
            LocalizedIdeal::Base => "base",
            LocalizedIdeal::Localized => "localized",
        }
    }
}

impl fmt::Display for LocalizedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LocalizedIdeal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "base" => Ok(LocalizedIdeal::Base),
            "localized" => Ok(LocalizedIdeal::Localized),
            _ => Err(format!("unknown localized-ideal variant {s:?}")),
        }
    }
}

/// The module a witness lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Frame {
    Base,
    /// `M / I_eN` with `N` replaced by its image.
    Quotient,
    /// `M × M2` with `N × M2`.
    ProductLeft,
    /// `M × M2` with `M × N`.
    ProductRight,
    /// `S⁻¹M` with `S⁻¹N`.
    Localized,
}

impl Frame {
    pub fn name(self) -> &'static str {
        match self {
            Frame::Base => "base",
            Frame::Quotient => "quotient",
            Frame::ProductLeft => "product-left",
            Frame::ProductRight => "product-right",
            Frame::Localized => "localized",
        }
    }
}

/// The condition a witness part violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Finding {
    Predicate(Location),
    /// `s ∈ (N_g : M_g)`, `l ∈ N_g`, `s·l ∉ I_eN_g`.
    ColonTimesSubmodule { degree: usize },
    /// `s1, s2 ∈ (N_g : M_g)`, `m ∈ M_g`, `s1·s2·m ∉ I_eN_g`.
    ColonSquare { degree: usize },
    /// `(N_g :_{M_g} r) ≠ N_g ∪ (I_eN_g :_{M_g} r)` at `m`.
    ColonUnion { degree: usize },
    /// `(N_g :_{M_g} r)` equals neither `N_g` (`m1`) nor `(I_eN_g :_{M_g} r)` (`m2`).
    ColonBranch { degree: usize },
    /// `a ∈ Gr((I_eN_g : M_g))`, `l ∈ N_g`, `a·l ∉ I_eN_g`.
    RadicalExcess { degree: usize },
    /// `x ∈ I_eN_g` outside `Gr((I_eN_g : M_g))·N_g`.
    RadicalShortfall { degree: usize },
    /// `(N_g : M_g)` fails the `e`-`I_e`-prime condition at `(r, s)`.
    ColonIdeal { degree: usize },
    IdealColonUnion,
    IdealColonBranch,
    /// Graded ideals `K`, `L` with `K_eL_e ⊆ J_e`, `K_eL_e ⊄ I_eJ_e`, neither in `J_e`.
    IdealPair,
    /// `R_e`-submodules `K`, `L` of `M_g` with `KL ⊆ N_g`, `KL ⊄ I_eN_g`, neither in `N_g`.
    ComponentPair { degree: usize },
    /// Elements `m1`, `m2` of `M_g` violating the element form of the pair condition.
    ElementPair { degree: usize },
    /// A graded submodule `K` and homogeneous `r` with `rK_h ⊆ N`, `rK_h ⊄ I_eN`,
    /// `K_h ⊄ N` and `rM ⊄ N`.
    Translate { degree: usize },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::Predicate(l) => write!(f, "{l}"),
            Finding::ColonTimesSubmodule { degree } => write!(f, "colon-times-submodule[{degree}]"),
            Finding::ColonSquare { degree } => write!(f, "colon-square[{degree}]"),
            Finding::ColonUnion { degree } => write!(f, "colon-union[{degree}]"),
            Finding::ColonBranch { degree } => write!(f, "colon-branch[{degree}]"),
            Finding::RadicalExcess { degree } => write!(f, "radical-excess[{degree}]"),
            Finding::RadicalShortfall { degree } => write!(f, "radical-shortfall[{degree}]"),
            Finding::ColonIdeal { degree } => write!(f, "colon-ideal[{degree}]"),
            Finding::IdealColonUnion => f.write_str("ideal-colon-union"),
            Finding::IdealColonBranch => f.write_str("ideal-colon-branch"),
            Finding::IdealPair => f.write_str("ideal-pair"),
            Finding::ComponentPair { degree } => write!(f, "component-pair[{degree}]"),
            Finding::ElementPair { degree } => write!(f, "element-pair[{degree}]"),
            Finding::Translate { degree } => write!(f, "translate[{degree}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPart {
    pub finding: Finding,
    pub frame: Frame,
    pub scalar: Option<Point>,
    pub vector: Option<Point>,
    pub extra: Vec<Point>,
    pub sets: Vec<ElementSet>,
}

impl WitnessPart {
    fn new(finding: Finding, frame: Frame) -> Self {
        WitnessPart {
            finding,
            frame,
            scalar: None,
            vector: None,
            extra: Vec::new(),
            sets: Vec::new(),
        }
    }

    fn from_predicate(w: &Witness, frame: Frame) -> Self {
        WitnessPart {
            scalar: w.scalar,
            vector: Some(w.vector),
            ..WitnessPart::new(Finding::Predicate(w.location), frame)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimWitness {
    /// For equivalences, the failing implication such as `i=>ii`.
    pub direction: Option<String>,
    pub parts: Vec<WitnessPart>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub instance_id: String,
    pub label: String,
    pub variant: Option<LocalizedIdeal>,
    pub hypotheses_met: bool,
    /// `None` when the hypotheses fail.
    pub conclusion_holds: Option<bool>,
    pub witness: Option<ClaimWitness>,
}

impl ClaimReport {
    pub fn falsified(&self) -> bool {
        self.conclusion_holds == Some(false)
    }
}

struct Outcome {
    hypotheses_met: bool,
    conclusion_holds: Option<bool>,
    witness: Option<ClaimWitness>,
}

impl Outcome {
    fn filtered() -> Self {
        Outcome {
            hypotheses_met: false,
            conclusion_holds: None,
            witness: None,
        }
    }

    fn held() -> Self {
        Outcome {
            hypotheses_met: true,
            conclusion_holds: Some(true),
            witness: None,
        }
    }

    fn falsified(direction: Option<String>, parts: Vec<WitnessPart>) -> Self {
        Outcome {
            hypotheses_met: true,
            conclusion_holds: Some(false),
            witness: Some(ClaimWitness { direction, parts }),
        }
    }
}

/// A statement's truth value with the parts explaining its failure.
type Statement = (bool, Vec<WitnessPart>);

fn from_verdict(v: &Verdict, frame: Frame) -> Statement {
    (v.value, v.witness.iter().map(|w| WitnessPart::from_predicate(w, frame)).collect())
}

/// All statements must agree; reports the first `X => Y` with `X` true and `Y` false.
fn equivalence(names: &[&str], statements: Vec<Statement>) -> Outcome {
    for (i, a) in statements.iter().enumerate() {
        for (j, b) in statements.iter().enumerate() {
            if i != j && a.0 && !b.0 {
                return Outcome::falsified(Some(format!("{}=>{}", names[i], names[j])), b.1.clone());
            }
        }
    }
    Outcome::held()
}

fn mpoint(module: &GradedModule, x: usize) -> Point {
    Point {
        index: x,
        degree: module.grading().degree_of(x),
    }
}

fn rpoint(ring: &GradedRing, x: usize) -> Point {
    Point {
        index: x,
        degree: ring.grading().degree_of(x),
    }
}

fn missing(claim: ClaimId, component: &'static str) -> ClaimError {
    ClaimError::MissingExtra {
        claim: claim.to_string(),
        component,
    }
}

/// Data for one component `M_g`.
struct Component<'a> {
    inst: &'a Instance,
    g: usize,
    m_g: ElementSet,
    n_g: ElementSet,
    ie_n: ElementSet,
    colon: ElementSet,
    i_e: ElementSet,
    base: Vec<usize>,
}

impl<'a> Component<'a> {
    fn new(inst: &'a Instance, g: usize) -> Self {
        let module = inst.module();
        let m_g = module.component(g).clone();
        let n_g = inst.submodule.intersection(&m_g);
        Component {
            ie_n: ie_times(module, &inst.ideal, &n_g),
            colon: colon_component(module, &n_g, g),
            i_e: identity_part(inst.ring(), &inst.ideal),
            base: inst.ring().base().iter().collect(),
            inst,
            g,
            m_g,
            n_g,
        }
    }

    fn module(&self) -> &GradedModule {
        self.inst.module()
    }

    fn act(&self, r: usize, x: usize) -> usize {
        self.module().module().act(r, x)
    }

    fn n(&self) -> AlgebraicSubset {
        AlgebraicSubset::trusted(&**self.module().module(), self.inst.submodule.clone())
    }

    fn i(&self) -> AlgebraicSubset {
        AlgebraicSubset::trusted(&**self.inst.ring().ring(), self.inst.ideal.clone())
    }

    fn ie_prime(&self) -> Result<Verdict, ClaimError> {
        Ok(is_g_ie_prime(self.module(), &self.n(), &self.i(), self.g)?)
    }

    fn prime(&self) -> Result<Verdict, ClaimError> {
        Ok(is_g_prime(self.module(), &self.n(), self.g)?)
    }

    fn multiplication(&self) -> bool {
        self.inst.setting.is_multiplication(Scope::Component(self.g))
    }

    /// `(I_eN_g :_{R_e} M_g) = I_e·(N_g :_{R_e} M_g)`.
    fn side_condition(&self) -> bool {
        let m = &**self.module().module();
        let lhs = colon_scalars(m, self.base.iter().copied(), &self.m_g, &self.ie_n);
        lhs == product_set(&**self.inst.ring().ring(), &self.i_e, &self.colon)
    }

    fn proper(&self) -> bool {
        self.n_g != self.m_g
    }

    /// First `s ∈ (N_g : M_g)`, `l ∈ N_g` with `s·l ∉ I_eN_g`.
    fn colon_times_n(&self) -> Option<(usize, usize)> {
        self.colon
            .iter()
            .flat_map(|s| self.n_g.iter().map(move |l| (s, l)))
            .find(|&(s, l)| !self.ie_n.contains(self.act(s, l)))
    }

    /// `(K :_{R_e} M_g)(L :_{R_e} M_g)M_g`.
    fn pair_product(&self, k: &ElementSet, l: &ElementSet) -> ElementSet {
        colon_product(self.module(), k, l, Scope::Component(self.g))
    }

    /// The pair condition fails for `K`, `L`.
    fn pair_violated(&self, k: &ElementSet, l: &ElementSet) -> bool {
        let p = self.pair_product(k, l);
        p.is_subset(&self.n_g) && !p.is_subset(&self.ie_n) && !k.is_subset(&self.n_g) && !l.is_subset(&self.n_g)
    }
}

pub fn check_claim(claim: ClaimId, inst: &Instance, variant: LocalizedIdeal) -> Result<ClaimReport, ClaimError> {
    let outcome = match claim.shape() {
        Shape::Degree => {
            let g = inst.extras.degree.ok_or_else(|| missing(claim, "a degree"))?;
            if g >= inst.setting.group().size() {
                return Err(crate::error::PredicateError::BadDegree(g).into());
            }
            let c = Component::new(inst, g);
            if !c.proper() {
                Outcome::filtered()
            } else {
                match claim {
                    ClaimId::T2_4 => ie_dichotomy(&c)?,
                    ClaimId::C2_5 => zero_ideal_case(&c)?,
                    ClaimId::C2_6 => square_bound(&c)?,
                    ClaimId::T2_7 => colon_equivalence(&c)?,
                    ClaimId::L2_9 => radical_product(&c)?,
                    ClaimId::T2_10 => colon_ideal(&c)?,
                    ClaimId::T2_12 => component_pairs(&c)?,
                    ClaimId::C2_13 => element_pairs(&c)?,
                    _ => unreachable!("degree-shaped claims"),
                }
            }
        }
        Shape::Base => match claim {
            ClaimId::T2_8 => quotient_equivalence(inst)?,
            ClaimId::T2_15 => translate_equivalence(inst)?,
            ClaimId::PrimeImpliesIe => prime_implies_ie(inst)?,
            _ => unreachable!("base-shaped claims"),
        },
        Shape::IdealLevel => ideal_equivalence(inst)?,
        Shape::Paired => product_claim(inst)?,
        Shape::Localized => match claim {
            ClaimId::T2_16i => localization_up(inst, variant)?,
            _ => localization_down(inst, variant)?,
        },
    };
    Ok(ClaimReport {
        claim,
        instance_id: inst.id.clone(),
        label: inst.label.clone(),
        variant: (claim.shape() == Shape::Localized).then_some(variant),
        hypotheses_met: outcome.hypotheses_met,
        conclusion_holds: outcome.conclusion_holds,
        witness: outcome.witness,
    })
}

fn n_subset(inst: &Instance) -> AlgebraicSubset {
    AlgebraicSubset::trusted(&**inst.module().module(), inst.submodule.clone())
}

fn i_subset(inst: &Instance) -> AlgebraicSubset {
    AlgebraicSubset::trusted(&**inst.ring().ring(), inst.ideal.clone())
}

fn colon_part(c: &Component, s: usize, l: usize) -> WitnessPart {
    WitnessPart {
        scalar: Some(rpoint(c.inst.ring(), s)),
        vector: Some(mpoint(c.module(), l)),
        ..WitnessPart::new(Finding::ColonTimesSubmodule { degree: c.g }, Frame::Base)
    }
}

/// g-`I_e`-prime forces g-prime or `(N_g : M_g)N_g ⊆ I_eN_g`.
fn ie_dichotomy(c: &Component) -> Result<Outcome, ClaimError> {
    if !c.ie_prime()?.value {
        return Ok(Outcome::filtered());
    }
    let prime = c.prime()?;
    if prime.value {
        return Ok(Outcome::held());
    }
    Ok(match c.colon_times_n() {
        None => Outcome::held(),
        Some((s, l)) => {
            let mut parts = from_verdict(&prime, Frame::Base).1;
            parts.push(colon_part(c, s, l));
            Outcome::falsified(None, parts)
        }
    })
}

/// With `I = 0`: g-weakly prime and `(N_g : M_g)N_g ≠ 0` force g-prime.
fn zero_ideal_case(c: &Component) -> Result<Outcome, ClaimError> {
    if c.inst.ideal.len() != 1 || !c.ie_prime()?.value {
        return Ok(Outcome::filtered());
    }
    let zero = c.module().module().zero();
    let nonzero = c.colon.iter().any(|s| c.n_g.iter().any(|l| c.act(s, l) != zero));
    if !nonzero {
        return Ok(Outcome::filtered());
    }
    let prime = c.prime()?;
    Ok(if prime.value {
        Outcome::held()
    } else {
        Outcome::falsified(None, from_verdict(&prime, Frame::Base).1)
    })
}

/// Multiplication `M_g`, g-`I_e`-prime and not g-prime force `N_g² ⊆ I_eN_g`.
fn square_bound(c: &Component) -> Result<Outcome, ClaimError> {
    if !c.multiplication() || !c.ie_prime()?.value || c.prime()?.value {
        return Ok(Outcome::filtered());
    }
    let ring = &**c.inst.ring().ring();
    for s1 in c.colon.iter() {
        for s2 in c.colon.iter() {
            let s = ring.mul(s1, s2);
            if let Some(m) = c.m_g.iter().find(|&m| !c.ie_n.contains(c.act(s, m))) {
                let part = WitnessPart {
                    scalar: Some(rpoint(c.inst.ring(), s1)),
                    vector: Some(mpoint(c.module(), m)),
                    extra: vec![rpoint(c.inst.ring(), s2)],
                    ..WitnessPart::new(Finding::ColonSquare { degree: c.g }, Frame::Base)
                };
                return Ok(Outcome::falsified(None, vec![part]));
            }
        }
    }
    Ok(Outcome::held())
}

fn outside_colon(c: &Component) -> Vec<usize> {
    c.base.iter().copied().filter(|&r| !c.colon.contains(r)).collect()
}

/// g-`I_e`-prime, the union form and the two-branch form of `(N_g :_{M_g} r)` agree.
fn colon_equivalence(c: &Component) -> Result<Outcome, ClaimError> {
    let first = from_verdict(&c.ie_prime()?, Frame::Base);
    let rs = outside_colon(c);
    let mut union: Statement = (true, Vec::new());
    'union: for &r in &rs {
        for m in c.m_g.iter() {
            let rm = c.act(r, m);
            if c.n_g.contains(rm) != (c.n_g.contains(m) || c.ie_n.contains(rm)) {
                let part = WitnessPart {
                    scalar: Some(rpoint(c.inst.ring(), r)),
                    vector: Some(mpoint(c.module(), m)),
                    ..WitnessPart::new(Finding::ColonUnion { degree: c.g }, Frame::Base)
                };
                union = (false, vec![part]);
                break 'union;
            }
        }
    }
    let mut branch: Statement = (true, Vec::new());
    for &r in &rs {
        let a: Vec<usize> = c.m_g.iter().filter(|&m| c.n_g.contains(c.act(r, m))).collect();
        let off_n = a.iter().copied().find(|&m| !c.n_g.contains(m));
        let off_ie = a.iter().copied().find(|&m| !c.ie_n.contains(c.act(r, m)));
        if let (Some(m1), Some(m2)) = (off_n, off_ie) {
            let part = WitnessPart {
                scalar: Some(rpoint(c.inst.ring(), r)),
                vector: Some(mpoint(c.module(), m1)),
                extra: vec![mpoint(c.module(), m2)],
                ..WitnessPart::new(Finding::ColonBranch { degree: c.g }, Frame::Base)
            };
            branch = (false, vec![part]);
            break;
        }
    }
    Ok(equivalence(&["i", "ii", "iii"], vec![first, union, branch]))
}

/// Multiplication `M_g`, g-`I_e`-prime and `(N_g : M_g) ⊆ I_e` give
/// `Gr((I_eN_g : M_g))·N_g = I_eN_g`.
fn radical_product(c: &Component) -> Result<Outcome, ClaimError> {
    if !c.multiplication() || !c.colon.is_subset(&c.i_e) || !c.ie_prime()?.value {
        return Ok(Outcome::filtered());
    }
    let m = &**c.module().module();
    let a = colon_scalars(m, c.base.iter().copied(), &c.m_g, &c.ie_n);
    let rad = radical_in_base(c.inst.ring(), &a);
    for s in rad.iter() {
        if let Some(l) = c.n_g.iter().find(|&l| !c.ie_n.contains(c.act(s, l))) {
            let part = WitnessPart {
                scalar: Some(rpoint(c.inst.ring(), s)),
                vector: Some(mpoint(c.module(), l)),
                ..WitnessPart::new(Finding::RadicalExcess { degree: c.g }, Frame::Base)
            };
            return Ok(Outcome::falsified(None, vec![part]));
        }
    }
    let lhs = product_set(m, &rad, &c.n_g);
    Ok(match c.ie_n.iter().find(|&x| !lhs.contains(x)) {
        None => Outcome::held(),
        Some(x) => {
            let part = WitnessPart {
                vector: Some(mpoint(c.module(), x)),
                ..WitnessPart::new(Finding::RadicalShortfall { degree: c.g }, Frame::Base)
            };
            Outcome::falsified(None, vec![part])
        }
    })
}

/// Under the side condition, g-`I_e`-prime makes `(N_g : M_g)` an
/// `e`-`I_e`-prime ideal of `R_e`.
fn colon_ideal(c: &Component) -> Result<Outcome, ClaimError> {
    if !c.side_condition() || !c.ie_prime()?.value {
        return Ok(Outcome::filtered());
    }
    let ring = c.inst.ring();
    let excluded = product_set(&**ring.ring(), &c.i_e, &c.colon);
    let v = is_e_prime_relative(ring, &c.colon, &excluded)?;
    Ok(match v.witness {
        None => Outcome::held(),
        Some(w) => {
            let part = WitnessPart {
                scalar: w.scalar,
                vector: Some(w.vector),
                ..WitnessPart::new(Finding::ColonIdeal { degree: c.g }, Frame::Base)
            };
            Outcome::falsified(None, vec![part])
        }
    })
}

fn pair_hypotheses(c: &Component) -> Result<bool, ClaimError> {
    Ok(c.multiplication() && c.side_condition() && c.ie_prime()?.value)
}

/// Pair condition over all `R_e`-submodules of `M_g`.
fn component_pairs(c: &Component) -> Result<Outcome, ClaimError> {
    if !pair_hypotheses(c)? {
        return Ok(Outcome::filtered());
    }
    let subs = c.inst.setting.component_submodules(c.g);
    for k in subs {
        for l in subs {
            if c.pair_violated(k, l) {
                let part = WitnessPart {
                    sets: vec![k.clone(), l.clone()],
                    ..WitnessPart::new(Finding::ComponentPair { degree: c.g }, Frame::Base)
                };
                return Ok(Outcome::falsified(None, vec![part]));
            }
        }
    }
    Ok(Outcome::held())
}

/// Pair condition for cyclic `R_e`-submodules, by element.
fn element_pairs(c: &Component) -> Result<Outcome, ClaimError> {
    if !pair_hypotheses(c)? {
        return Ok(Outcome::filtered());
    }
    let m = &**c.module().module();
    let spans: HashMap<usize, ElementSet> = c.m_g.iter().map(|x| (x, closure(m, &c.base, [x]))).collect();
    let mut memo: HashMap<(&ElementSet, &ElementSet), bool> = HashMap::new();
    for m1 in c.m_g.iter() {
        if c.n_g.contains(m1) {
            continue;
        }
        for m2 in c.m_g.iter() {
            if c.n_g.contains(m2) {
                continue;
            }
            let key = (&spans[&m1], &spans[&m2]);
            let violated = *memo.entry(key).or_insert_with(|| c.pair_violated(key.0, key.1));
            if violated {
                let part = WitnessPart {
                    vector: Some(mpoint(c.module(), m1)),
                    extra: vec![mpoint(c.module(), m2)],
                    ..WitnessPart::new(Finding::ElementPair { degree: c.g }, Frame::Base)
                };
                return Ok(Outcome::falsified(None, vec![part]));
            }
        }
    }
    Ok(Outcome::held())
}

/// Graded `I_e`-prime in `M` iff the image of `N` is graded weakly prime in `M / I_eN`.
fn quotient_equivalence(inst: &Instance) -> Result<Outcome, ClaimError> {
    let module = inst.module();
    let first = from_verdict(&is_graded_ie_prime(module, &n_subset(inst), &i_subset(inst))?, Frame::Base);
    let kernel = ie_times(module, &inst.ideal, &inst.submodule);
    let q = quotient_module(module, &AlgebraicSubset::trusted(&**module.module(), kernel))?;
    let image = AlgebraicSubset::trusted(&**q.module().module(), q.project_set(&inst.submodule));
    let second = from_verdict(&is_graded_weakly_prime(q.module(), &image)?, Frame::Quotient);
    Ok(equivalence(&["i", "ii"], vec![first, second]))
}

/// `I_e`-prime iff every graded `K` satisfies the translate condition.
fn translate_equivalence(inst: &Instance) -> Result<Outcome, ClaimError> {
    let module = inst.module();
    let m = &**module.module();
    let first = from_verdict(&is_graded_ie_prime(module, &n_subset(inst), &i_subset(inst))?, Frame::Base);
    let n = &inst.submodule;
    let ie_n = ie_times(module, &inst.ideal, n);
    let colon = colon_whole(module, n);
    let scalars: Vec<usize> = inst.ring().homogeneous().iter().filter(|&r| !colon.contains(r)).collect();
    let mut second: Statement = (true, Vec::new());
    'search: for k in inst.setting.graded_submodules() {
        for h in module.group().elements() {
            let k_h = k.intersection(module.component(h));
            let Some(k_off) = k_h.iter().find(|&x| !n.contains(x)) else {
                continue;
            };
            for &r in &scalars {
                if !k_h.iter().all(|x| n.contains(m.act(r, x))) {
                    continue;
                }
                if let Some(x) = k_h.iter().find(|&x| !ie_n.contains(m.act(r, x))) {
                    let part = WitnessPart {
                        scalar: Some(rpoint(inst.ring(), r)),
                        vector: Some(mpoint(module, x)),
                        extra: vec![mpoint(module, k_off)],
                        sets: vec![k.clone()],
                        ..WitnessPart::new(Finding::Translate { degree: h }, Frame::Base)
                    };
                    second = (false, vec![part]);
                    break 'search;
                }
            }
        }
    }
    Ok(equivalence(&["i", "ii"], vec![first, second]))
}

fn prime_implies_ie(inst: &Instance) -> Result<Outcome, ClaimError> {
    let n = n_subset(inst);
    if !is_graded_prime(inst.module(), &n)?.value {
        return Ok(Outcome::filtered());
    }
    let v = is_graded_ie_prime(inst.module(), &n, &i_subset(inst))?;
    Ok(if v.value {
        Outcome::held()
    } else {
        Outcome::falsified(None, from_verdict(&v, Frame::Base).1)
    })
}

/// Four descriptions of an `e`-`I_e`-prime ideal `J_e` agree.
fn ideal_equivalence(inst: &Instance) -> Result<Outcome, ClaimError> {
    let j = inst
        .extras
        .ideal_j
        .as_ref()
        .ok_or_else(|| missing(ClaimId::T2_11, "a second ideal"))?;
    let ring = inst.ring();
    let r = &**ring.ring();
    let base: Vec<usize> = ring.base().iter().collect();
    let j_e = identity_part(ring, j);
    if j_e == *ring.base() {
        return Ok(Outcome::filtered());
    }
    let i_e = identity_part(ring, &inst.ideal);
    let ij = product_set(r, &i_e, &j_e);
    let first = from_verdict(&is_e_prime_relative(ring, &j_e, &ij)?, Frame::Base);
    let rs: Vec<usize> = base.iter().copied().filter(|&x| !j_e.contains(x)).collect();
    let pair_part = |finding, a: usize, b: usize, extra: Option<usize>| WitnessPart {
        scalar: Some(rpoint(ring, a)),
        vector: Some(rpoint(ring, b)),
        extra: extra.map(|e| rpoint(ring, e)).into_iter().collect(),
        ..WitnessPart::new(finding, Frame::Base)
    };
    let union: Statement = rs
        .iter()
        .flat_map(|&a| base.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| {
            let ab = r.mul(a, b);
            j_e.contains(ab) != (j_e.contains(b) || ij.contains(ab))
        })
        .map_or((true, Vec::new()), |(a, b)| (false, vec![pair_part(Finding::IdealColonUnion, a, b, None)]));
    let branch: Statement = rs
        .iter()
        .find_map(|&a| {
            let colon: Vec<usize> = base.iter().copied().filter(|&b| j_e.contains(r.mul(a, b))).collect();
            let off_j = colon.iter().copied().find(|&b| !j_e.contains(b))?;
            let off_ij = colon.iter().copied().find(|&b| !ij.contains(r.mul(a, b)))?;
            Some(pair_part(Finding::IdealColonBranch, a, off_j, Some(off_ij)))
        })
        .map_or((true, Vec::new()), |p| (false, vec![p]));
    let ideals = inst.setting.graded_ideals();
    let mut pairs: Statement = (true, Vec::new());
    'pairs: for k in ideals {
        let k_e = identity_part(ring, k);
        for l in ideals {
            let l_e = identity_part(ring, l);
            let p = product_set(r, &k_e, &l_e);
            if p.is_subset(&j_e) && !p.is_subset(&ij) && !k_e.is_subset(&j_e) && !l_e.is_subset(&j_e) {
                let part = WitnessPart {
                    sets: vec![k.clone(), l.clone()],
                    ..WitnessPart::new(Finding::IdealPair, Frame::Base)
                };
                pairs = (false, vec![part]);
                break 'pairs;
            }
        }
    }
    Ok(equivalence(&["i", "ii", "iii", "iv"], vec![first, union, branch, pairs]))
}

/// `N` graded `I_e`-prime in `M` makes `N × M2` and `M × N` graded `I_e`-prime.
fn product_claim(inst: &Instance) -> Result<Outcome, ClaimError> {
    let second = inst
        .extras
        .second_module
        .as_ref()
        .ok_or_else(|| missing(ClaimId::T2_14, "a second module"))?;
    let module = inst.module();
    let i = i_subset(inst);
    if !is_graded_ie_prime(module, &n_subset(inst), &i)?.value {
        return Ok(Outcome::filtered());
    }
    let product = direct_product(module, second)?;
    let full1 = ElementSet::full(module.size());
    let full2 = ElementSet::full(second.size());
    let left = product.embed(&inst.submodule, &full2);
    let right = product.embed(&full1, &inst.submodule);
    let mut parts = Vec::new();
    for (sub, frame) in [(left, Frame::ProductLeft), (right, Frame::ProductRight)] {
        parts.extend(from_verdict(&is_graded_ie_prime(product.module(), &sub, &i)?, frame).1);
    }
    Ok(if parts.is_empty() {
        Outcome::held()
    } else {
        Outcome::falsified(None, parts)
    })
}

/// The excluded set for `S⁻¹N` under `variant`.
pub fn localized_excluded(
    loc: &crate::constructions::Localization,
    ideal: &ElementSet,
    s_n: &ElementSet,
    variant: LocalizedIdeal,
) -> ElementSet {
    let lm = &**loc.module().module();
    match variant {
        LocalizedIdeal::Base => {
            let i_e = identity_part(loc.base().graded_ring(), ideal);
            let scalars = ElementSet::new(loc.ring().ring().size(), i_e.iter().map(|x| loc.ring_map(x)));
            product_set(lm, &scalars, s_n)
        }
        LocalizedIdeal::Localized => {
            let s_i = loc.transport_ideal(ideal);
            product_set(lm, &identity_part(loc.ring(), &s_i), s_n)
        }
    }
}

fn localized_verdict(inst: &Instance, variant: LocalizedIdeal, claim: ClaimId) -> Result<Option<Verdict>, ClaimError> {
    let set = inst
        .extras
        .mult_set
        .as_ref()
        .ok_or_else(|| missing(claim, "a multiplicative set"))?;
    let loc = inst.setting.localization(set)?;
    let s_n = loc.transport(&inst.submodule);
    if s_n.is_full() {
        return Ok(None);
    }
    let excluded = localized_excluded(&loc, &inst.ideal, &s_n, variant);
    let sub = AlgebraicSubset::trusted(&**loc.module().module(), s_n);
    Ok(Some(is_graded_prime_relative(loc.module(), &sub, &excluded, Location::GradedIePrime)?))
}

/// `N` graded `I_e`-prime with `(N : M) ∩ S = ∅` makes `S⁻¹N` graded `I_e`-prime.
fn localization_up(inst: &Instance, variant: LocalizedIdeal) -> Result<Outcome, ClaimError> {
    let set = inst
        .extras
        .mult_set
        .as_ref()
        .ok_or_else(|| missing(ClaimId::T2_16i, "a multiplicative set"))?;
    let module = inst.module();
    if set.meets(&colon_whole(module, &inst.submodule))
        || !is_graded_ie_prime(module, &n_subset(inst), &i_subset(inst))?.value
    {
        return Ok(Outcome::filtered());
    }
    let verdict = localized_verdict(inst, variant, ClaimId::T2_16i)?
        .ok_or_else(|| missing(ClaimId::T2_16i, "a proper localized submodule"))?;
    Ok(if verdict.value {
        Outcome::held()
    } else {
        Outcome::falsified(None, from_verdict(&verdict, Frame::Localized).1)
    })
}

/// `S⁻¹N` graded `I_e`-prime with `S ∩ G-Zdv(M/N) = ∅` makes `N` graded `I_e`-prime.
fn localization_down(inst: &Instance, variant: LocalizedIdeal) -> Result<Outcome, ClaimError> {
    let set = inst
        .extras
        .mult_set
        .as_ref()
        .ok_or_else(|| missing(ClaimId::T2_16ii, "a multiplicative set"))?;
    let module = inst.module();
    let q = quotient_module(module, &n_subset(inst))?;
    if set.meets(&graded_zero_divisors(q.module())) {
        return Ok(Outcome::filtered());
    }
    match localized_verdict(inst, variant, ClaimId::T2_16ii)? {
        Some(v) if v.value => {}
        _ => return Ok(Outcome::filtered()),
    }
    let v = is_graded_ie_prime(module, &n_subset(inst), &i_subset(inst))?;
    Ok(if v.value {
        Outcome::held()
    } else {
        Outcome::falsified(None, from_verdict(&v, Frame::Base).1)
    })
}
