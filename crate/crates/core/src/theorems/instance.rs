use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use sha2::{Digest, Sha256};

use crate::algebra::{build_module, build_ring, closure, Carrier, ElementSet, ModuleSpec, RingSpec};
use crate::constructions::{localize, Localization, MultiplicativeSet};
use crate::error::{ConstructionError, GradingError};
use crate::grading::{GradedModule, GradedRing, GradingGroup, GradingSpec};
use crate::lattice;
use crate::predicates::{is_multiplication, Scope};

/// Families the default corpus is built from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SettingSpec {
    /// `Z_n` over itself, trivially `Z2`-graded.
    Cyclic(usize),
    /// `Z_c[G]` over itself with its natural `G`-grading.
    GroupRing { coefficients: usize, group: Vec<usize> },
    /// Trivially graded `Z_n` acting on `Z_n × Z_n`, the factors in degrees 0 and 1.
    AxisProduct(usize),
}

impl SettingSpec {
    pub fn build(&self) -> Result<Setting, GradingError> {
        let z2 = GradingGroup::new(vec![2])?;
        let (group, ring_spec, ring_grading, module_spec, module_grading, label) = match self {
            SettingSpec::Cyclic(n) => (
                z2,
                RingSpec::Cyclic(*n),
                GradingSpec::Trivial,
                ModuleSpec::Ring,
                GradingSpec::Inherit,
                format!("Z{n}"),
            ),
            SettingSpec::GroupRing { coefficients, group } => {
                let g = GradingGroup::new(group.clone())?;
                let spec = RingSpec::GroupRing {
                    coefficients: Box::new(RingSpec::Cyclic(*coefficients)),
                    group: group.clone(),
                };
                let label = build_ring(&spec)?.construction().to_string();
                (g, spec, GradingSpec::Natural, ModuleSpec::Ring, GradingSpec::Inherit, label)
            }
            SettingSpec::AxisProduct(n) => (
                z2,
                RingSpec::Cyclic(*n),
                GradingSpec::Trivial,
                ModuleSpec::Product(vec![ModuleSpec::Ring, ModuleSpec::Ring]),
                GradingSpec::Axis,
                format!("Z{n} on Z{n}xZ{n}"),
            ),
        };
        let ring = Arc::new(build_ring(&ring_spec)?);
        let graded_ring = Arc::new(GradedRing::from_spec(ring.clone(), &group, &ring_grading)?);
        let module = Arc::new(build_module(&module_spec, &ring)?);
        let graded = GradedModule::from_spec(graded_ring, module, &module_grading)?;
        Ok(Setting::new(label, Arc::new(graded)))
    }
}

#[derive(Debug, Default)]
struct Lattices {
    submodules: OnceLock<Vec<ElementSet>>,
    ideals: OnceLock<Vec<ElementSet>>,
    components: OnceLock<Vec<Vec<ElementSet>>>,
    multiplication: OnceLock<Vec<bool>>,
    mult_sets: OnceLock<Vec<MultiplicativeSet>>,
}

/// A graded ring with a graded module, plus lazily computed lattices shared by
/// every instance over it.
#[derive(Debug)]
pub struct Setting {
    label: String,
    module: Arc<GradedModule>,
    lattices: Lattices,
    localizations: Mutex<HashMap<ElementSet, Arc<Localization>>>,
}

impl Setting {
    pub fn new(label: impl Into<String>, module: Arc<GradedModule>) -> Self {
        Setting {
            label: label.into(),
            module,
            lattices: Lattices::default(),
            localizations: Mutex::new(HashMap::new()),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.module.graded_ring()
    }

    pub fn group(&self) -> &GradingGroup {
        self.module.group()
    }

    /// Whether the module is the ring acting on itself.
    pub fn module_is_ring(&self) -> bool {
        matches!(self.module.module().spec(), Some(ModuleSpec::Ring))
    }

    pub fn graded_submodules(&self) -> &[ElementSet] {
        self.lattices
            .submodules
            .get_or_init(|| lattice::graded_submodules(&self.module))
    }

    pub fn graded_ideals(&self) -> &[ElementSet] {
        self.lattices.ideals.get_or_init(|| lattice::graded_ideals(self.ring()))
    }

    /// `R_e`-submodules of `M_g`.
    pub fn component_submodules(&self, g: usize) -> &[ElementSet] {
        &self.lattices.components.get_or_init(|| {
            self.group()
                .elements()
                .map(|g| lattice::component_submodules(&self.module, g))
                .collect()
        })[g]
    }

    pub fn is_multiplication(&self, scope: Scope) -> bool {
        let flags = self.lattices.multiplication.get_or_init(|| {
            std::iter::once(Scope::Whole)
                .chain(self.group().elements().map(Scope::Component))
                .map(|s| is_multiplication(&self.module, s).map(|v| v.value).unwrap_or(false))
                .collect()
        });
        match scope {
            Scope::Whole => flags[0],
            Scope::Component(g) => flags[1 + g],
        }
    }

    /// The sets generated by the homogeneous units together with one
    /// homogeneous element, deduplicated and sorted.
    pub fn multiplicative_sets(&self) -> &[MultiplicativeSet] {
        self.lattices.mult_sets.get_or_init(|| {
            let ring = self.ring();
            let units: Vec<usize> = ring
                .homogeneous()
                .iter()
                .filter(|&x| ring.ring().is_unit(x))
                .collect();
            let mut sets: Vec<MultiplicativeSet> = ring
                .homogeneous()
                .iter()
                .filter_map(|a| {
                    let mut gens = units.clone();
                    gens.push(a);
                    MultiplicativeSet::generated(ring, &gens).ok()
                })
                .collect();
            sets.sort_by(|a, b| a.elements().cmp(b.elements()));
            sets.dedup();
            sets
        })
    }

    pub fn localization(&self, set: &MultiplicativeSet) -> Result<Arc<Localization>, ConstructionError> {
        if let Some(hit) = self.localizations.lock().expect("cache lock").get(set.elements()) {
            return Ok(hit.clone());
        }
        let loc = Arc::new(localize(&self.module, set)?);
        self.localizations
            .lock()
            .expect("cache lock")
            .insert(set.elements().clone(), loc.clone());
        Ok(loc)
    }

    fn canonical(&self, out: &mut String) {
        let ring = self.ring();
        let _ = write!(
            out,
            "group={:?};ring={:016x};module={:016x};",
            self.group().orders(),
            ring.ring().fingerprint().0,
            self.module.module().fingerprint().0
        );
        for c in ring.grading().components() {
            let _ = write!(out, "R{:?}", c.as_slice());
        }
        for c in self.module.grading().components() {
            let _ = write!(out, "M{:?}", c.as_slice());
        }
    }
}

/// Optional parts some claims need.
#[derive(Debug, Clone, Default)]
pub struct Extras {
    /// A second graded ideal `J` (ideal-level claims; equals `N` there).
    pub ideal_j: Option<ElementSet>,
    /// A second graded module over the same ring.
    pub second_module: Option<Arc<GradedModule>>,
    pub mult_set: Option<MultiplicativeSet>,
    pub degree: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub id: String,
    pub label: String,
    pub setting: Arc<Setting>,
    /// The graded ideal `I`.
    pub ideal: ElementSet,
    /// The graded submodule `N`.
    pub submodule: ElementSet,
    pub extras: Extras,
}

/// Smallest generators, greedily by index, of a subset closed under `scalars`.
pub fn generators<C: Carrier + ?Sized>(c: &C, scalars: &[usize], set: &ElementSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = closure(c, scalars, std::iter::empty());
    for x in set {
        if !reached.contains(x) {
            gens.push(x);
            reached = closure(c, scalars, gens.iter().copied());
        }
    }
    gens
}

fn angle(gens: &[usize]) -> String {
    let inner: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("<{}>", inner.join(","))
}

impl Instance {
    pub fn new(setting: Arc<Setting>, ideal: ElementSet, submodule: ElementSet, extras: Extras) -> Self {
        let mut canon = String::new();
        setting.canonical(&mut canon);
        let _ = write!(canon, "I{:?};N{:?};", ideal.as_slice(), submodule.as_slice());
        if let Some(j) = &extras.ideal_j {
            let _ = write!(canon, "J{:?};", j.as_slice());
        }
        if let Some(m2) = &extras.second_module {
            let _ = write!(canon, "M2={:016x};", m2.module().fingerprint().0);
            for c in m2.grading().components() {
                let _ = write!(canon, "M2{:?}", c.as_slice());
            }
        }
        if let Some(s) = &extras.mult_set {
            let _ = write!(canon, "S{:?};", s.elements().as_slice());
        }
        if let Some(g) = extras.degree {
            let _ = write!(canon, "g={g};");
        }
        let digest = Sha256::digest(canon.as_bytes());
        let id: String = digest[..8].iter().map(|b| format!("{b:02x}")).collect();

        let ring = setting.ring();
        let scalars: Vec<usize> = ring.ring().elements().collect();
        let i_gens = generators(&**ring.ring(), &scalars, &ideal);
        let n_gens = generators(&**setting.module().module(), &scalars, &submodule);
        let mut label = format!("{} I={} N={}", setting.label(), angle(&i_gens), angle(&n_gens));
        if extras.second_module.is_some() {
            label.push_str(" x copy");
        }
        if let Some(s) = &extras.mult_set {
            let items: Vec<String> = s.elements().iter().map(|x| x.to_string()).collect();
            let _ = write!(label, " S={{{}}}", items.join(","));
        }
        if let Some(g) = extras.degree {
            let _ = write!(label, " g={g}");
        }
        Instance {
            id,
            label,
            setting,
            ideal,
            submodule,
            extras,
        }
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        self.setting.module()
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.setting.ring()
    }
}
