//! The TOML instance format.
//!
//! ```toml
//! label = "Z12"
//! [group]
//! cyclic_orders = [2]
//! [ring]
//! kind = "cyclic"
//! n = 12
//! grading = "trivial"
//! [module]
//! kind = "ring"
//! grading = "inherit"
//! [ideals]
//! I = [4]
//! [submodules]
//! N = [4]
//! ```
//!
//! Elements are indices or, for product carriers, coordinate arrays.
//! Degrees are group indices or residue arrays.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use gradedie::algebra::{
    build_module, build_ring, span, Carrier, ElementSet, ElementValue, FiniteModule, FiniteRing, ModuleSpec,
    ModuleTables, RingSpec, RingTables, Shape,
};
use gradedie::constructions::MultiplicativeSet;
use gradedie::grading::{GradedModule, GradedRing, GradingGroup, GradingSpec};
use gradedie::theorems::{generators, Extras, Instance, Setting};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Elem {
    Index(usize),
    Tuple(Vec<Elem>),
}

impl Elem {
    fn value(&self) -> ElementValue {
        match self {
            Elem::Index(i) => ElementValue::Index(*i),
            Elem::Tuple(xs) => ElementValue::Tuple(xs.iter().map(Elem::value).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Degree {
    Index(usize),
    Residues(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GradingField {
    /// `trivial`, `natural`, `inherit` or `axis`.
    Named(String),
    /// Element lists indexed by degree.
    Lists(Vec<Vec<Elem>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    pub cyclic_orders: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingKind {
    Cyclic {
        n: usize,
    },
    /// Product of cyclic rings.
    Product {
        factors: Vec<usize>,
    },
    GroupRing {
        coefficients: usize,
        group: Vec<usize>,
    },
    Explicit {
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSection {
    #[serde(flatten)]
    pub kind: RingKind,
    pub grading: GradingField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleKind {
    Ring,
    /// `factors` copies of the ring.
    Product {
        factors: usize,
    },
    Explicit {
        add: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
        zero: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSection {
    #[serde(flatten)]
    pub kind: ModuleKind,
    pub grading: GradingField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub group: GroupSection,
    pub ring: RingSection,
    pub module: ModuleSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module2: Option<ModuleSection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, Vec<Elem>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub submodules: BTreeMap<String, Vec<Elem>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub mult_sets: BTreeMap<String, Vec<Elem>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub degrees: BTreeMap<String, Degree>,
}

impl InstanceFile {
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::parse(origin, text, &e))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("instance files always serialize")
    }
}

/// A validated instance file.
#[derive(Debug)]
pub struct Loaded {
    pub label: String,
    pub setting: Arc<Setting>,
    pub second: Option<Arc<GradedModule>>,
    pub ideals: BTreeMap<String, ElementSet>,
    pub submodules: BTreeMap<String, ElementSet>,
    pub mult_sets: BTreeMap<String, MultiplicativeSet>,
    pub degrees: BTreeMap<String, usize>,
}

fn encode(shape: &Shape, e: &Elem, section: &str) -> Result<usize, CliError> {
    shape
        .encode(&e.value())
        .ok_or_else(|| CliError::invalid(section, format!("element {} does not fit the carrier", e.value())))
}

fn encode_all(shape: &Shape, es: &[Elem], section: &str) -> Result<Vec<usize>, CliError> {
    es.iter().map(|e| encode(shape, e, section)).collect()
}

fn grading_spec(field: &GradingField, shape: &Shape, section: &str) -> Result<GradingSpec, CliError> {
    match field {
        GradingField::Named(name) => match name.as_str() {
            "trivial" => Ok(GradingSpec::Trivial),
            "natural" => Ok(GradingSpec::Natural),
            "inherit" => Ok(GradingSpec::Inherit),
            "axis" => Ok(GradingSpec::Axis),
            other => Err(CliError::invalid(section, format!("unknown grading {other:?}"))),
        },
        GradingField::Lists(lists) => Ok(GradingSpec::Explicit(
            lists
                .iter()
                .enumerate()
                .map(|(g, es)| Ok((g, encode_all(shape, es, section)?)))
                .collect::<Result<_, CliError>>()?,
        )),
    }
}

fn ring_spec(kind: &RingKind) -> RingSpec {
    match kind {
        RingKind::Cyclic { n } => RingSpec::Cyclic(*n),
        RingKind::Product { factors } => RingSpec::Product(factors.iter().map(|&n| RingSpec::Cyclic(n)).collect()),
        RingKind::GroupRing { coefficients, group } => RingSpec::GroupRing {
            coefficients: Box::new(RingSpec::Cyclic(*coefficients)),
            group: group.clone(),
        },
        RingKind::Explicit { add, mul, zero, one } => RingSpec::Explicit(RingTables {
            add: add.clone(),
            mul: mul.clone(),
            zero: *zero,
            one: *one,
        }),
    }
}

fn module_spec(kind: &ModuleKind) -> ModuleSpec {
    match kind {
        ModuleKind::Ring => ModuleSpec::Ring,
        ModuleKind::Product { factors } => ModuleSpec::Product(vec![ModuleSpec::Ring; *factors]),
        ModuleKind::Explicit { add, action, zero } => ModuleSpec::Explicit(ModuleTables {
            add: add.clone(),
            action: action.clone(),
            zero: *zero,
        }),
    }
}

fn build_graded_module(
    section: &ModuleSection,
    name: &str,
    ring: &Arc<FiniteRing>,
    graded_ring: &Arc<GradedRing>,
) -> Result<Arc<GradedModule>, CliError> {
    let module = Arc::new(build_module(&module_spec(&section.kind), ring).map_err(|e| CliError::invalid(name, e))?);
    let spec = grading_spec(&section.grading, module.shape(), &format!("{name}.grading"))?;
    let graded = GradedModule::from_spec(graded_ring.clone(), module, &spec)
        .map_err(|e| CliError::invalid(format!("{name}.grading"), e))?;
    Ok(Arc::new(graded))
}

/// Span of named generator lists, required to be graded.
fn named_spans<C: Carrier + ?Sized>(
    c: &C,
    shape: &Shape,
    graded: impl Fn(&ElementSet) -> Option<usize>,
    lists: &BTreeMap<String, Vec<Elem>>,
    section: &str,
) -> Result<BTreeMap<String, ElementSet>, CliError> {
    lists
        .iter()
        .map(|(name, gens)| {
            let at = format!("{section}.{name}");
            let gens = encode_all(shape, gens, &at)?;
            let set = span(c, &gens).map_err(|e| CliError::invalid(&at, e))?.into_set();
            if let Some(w) = graded(&set) {
                return Err(CliError::invalid(
                    &at,
                    format!("not graded: homogeneous part of element {w} is missing"),
                ));
            }
            Ok((name.clone(), set))
        })
        .collect()
}

impl Loaded {
    pub fn from_file(file: &InstanceFile) -> Result<Self, CliError> {
        let group = GradingGroup::new(file.group.cyclic_orders.clone()).map_err(|e| CliError::invalid("group", e))?;
        let ring = Arc::new(build_ring(&ring_spec(&file.ring.kind)).map_err(|e| CliError::invalid("ring", e))?);
        let rspec = grading_spec(&file.ring.grading, ring.shape(), "ring.grading")?;
        let graded_ring = Arc::new(
            GradedRing::from_spec(ring.clone(), &group, &rspec).map_err(|e| CliError::invalid("ring.grading", e))?,
        );
        let module = build_graded_module(&file.module, "module", &ring, &graded_ring)?;
        let second = file
            .module2
            .as_ref()
            .map(|s| build_graded_module(s, "module2", &ring, &graded_ring))
            .transpose()?;
        let ideals = named_spans(
            &*ring,
            ring.shape(),
            |s| graded_ring.grading().graded_witness(s),
            &file.ideals,
            "ideals",
        )?;
        let submodules = named_spans(
            &**module.module(),
            module.module().shape(),
            |s| module.grading().graded_witness(s),
            &file.submodules,
            "submodules",
        )?;
        let mult_sets = file
            .mult_sets
            .iter()
            .map(|(name, gens)| {
                let at = format!("mult_sets.{name}");
                let gens = encode_all(ring.shape(), gens, &at)?;
                let set = MultiplicativeSet::generated(&graded_ring, &gens).map_err(|e| CliError::invalid(&at, e))?;
                Ok((name.clone(), set))
            })
            .collect::<Result<_, CliError>>()?;
        let degrees = file
            .degrees
            .iter()
            .map(|(name, d)| {
                let g = match d {
                    Degree::Index(g) => (*g < group.size()).then_some(*g),
                    Degree::Residues(r) => group.from_residues(r),
                };
                g.map(|g| (name.clone(), g))
                    .ok_or_else(|| CliError::invalid(format!("degrees.{name}"), "not an element of the grading group"))
            })
            .collect::<Result<_, CliError>>()?;
        let label = file.label.clone().unwrap_or_else(|| ring.construction().to_string());
        Ok(Loaded {
            setting: Arc::new(Setting::new(label.clone(), module)),
            label,
            second,
            ideals,
            submodules,
            mult_sets,
            degrees,
        })
    }

    pub fn from_str(text: &str, origin: &str) -> Result<Self, CliError> {
        Self::from_file(&InstanceFile::parse(text, origin)?)
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_str(&text, &path.display().to_string())
    }

    pub fn ideal(&self, name: &str) -> Result<&ElementSet, CliError> {
        self.ideals.get(name).ok_or_else(|| CliError::UnknownName {
            kind: "ideal",
            name: name.to_string(),
        })
    }

    pub fn submodule(&self, name: &str) -> Result<&ElementSet, CliError> {
        self.submodules.get(name).ok_or_else(|| CliError::UnknownName {
            kind: "submodule",
            name: name.to_string(),
        })
    }

    fn extras(&self) -> Result<Extras, CliError> {
        Ok(Extras {
            ideal_j: self.ideals.get("J").cloned(),
            second_module: self.second.clone(),
            mult_set: self.mult_sets.get("S").cloned(),
            degree: self.degrees.get("g").copied(),
        })
    }

    /// The instance `(I, N)` with every extra the file names: ideal `J`,
    /// `module2`, multiplicative set `S` and degree `g`.
    pub fn instance(&self) -> Result<Instance, CliError> {
        Ok(Instance::new(
            self.setting.clone(),
            self.ideal("I")?.clone(),
            self.submodule("N")?.clone(),
            self.extras()?,
        ))
    }

    /// `(I, N)` on its own plus one instance per extra; every degree when `g`
    /// is not named.
    pub fn suite_instances(&self) -> Result<Vec<Instance>, CliError> {
        let i = self.ideal("I")?;
        let n = self.submodule("N")?;
        let all = self.extras()?;
        let make = |extras: Extras| Instance::new(self.setting.clone(), i.clone(), n.clone(), extras);
        let mut out = vec![make(Extras::default())];
        let degrees: Vec<usize> = match all.degree {
            Some(g) => vec![g],
            None => self.setting.group().elements().collect(),
        };
        for g in degrees {
            out.push(make(Extras {
                degree: Some(g),
                ..Extras::default()
            }));
        }
        if let Some(j) = all.ideal_j {
            out.push(Instance::new(
                self.setting.clone(),
                i.clone(),
                j.clone(),
                Extras {
                    ideal_j: Some(j),
                    ..Extras::default()
                },
            ));
        }
        if let Some(m2) = all.second_module {
            out.push(make(Extras {
                second_module: Some(m2),
                ..Extras::default()
            }));
        }
        if let Some(s) = all.mult_set {
            out.push(make(Extras {
                mult_set: Some(s),
                ..Extras::default()
            }));
        }
        Ok(out)
    }
}

fn index_list(xs: impl IntoIterator<Item = usize>) -> Vec<Elem> {
    xs.into_iter().map(Elem::Index).collect()
}

fn grading_lists(components: &[ElementSet]) -> GradingField {
    GradingField::Lists(components.iter().map(|c| index_list(c.iter())).collect())
}

fn ring_kind(ring: &FiniteRing) -> RingKind {
    let cyclic = |s: &RingSpec| match s {
        RingSpec::Cyclic(n) => Some(*n),
        _ => None,
    };
    match ring.spec() {
        Some(RingSpec::Cyclic(n)) => RingKind::Cyclic { n: *n },
        Some(RingSpec::Product(fs)) if fs.iter().all(|f| cyclic(f).is_some()) => RingKind::Product {
            factors: fs.iter().filter_map(cyclic).collect(),
        },
        Some(RingSpec::GroupRing { coefficients, group }) if cyclic(coefficients).is_some() => RingKind::GroupRing {
            coefficients: cyclic(coefficients).unwrap_or_default(),
            group: group.clone(),
        },
        _ => {
            let t = ring.tables();
            RingKind::Explicit {
                add: t.add,
                mul: t.mul,
                zero: t.zero,
                one: t.one,
            }
        }
    }
}

fn module_kind(module: &FiniteModule) -> ModuleKind {
    match module.spec() {
        Some(ModuleSpec::Ring) => ModuleKind::Ring,
        Some(ModuleSpec::Product(fs)) if fs.iter().all(|f| *f == ModuleSpec::Ring) => {
            ModuleKind::Product { factors: fs.len() }
        }
        _ => {
            let t = module.tables();
            ModuleKind::Explicit {
                add: t.add,
                action: t.action,
                zero: t.zero,
            }
        }
    }
}

fn module_section(m: &GradedModule) -> ModuleSection {
    ModuleSection {
        kind: module_kind(m.module()),
        grading: grading_lists(m.grading().components()),
    }
}

/// The file whose [`Loaded::instance`] reproduces `inst`.
pub fn serialize_instance(inst: &Instance) -> InstanceFile {
    let ring = inst.ring();
    let module = inst.module();
    let scalars: Vec<usize> = ring.ring().elements().collect();
    let ring_gens = |set: &ElementSet| index_list(generators(&**ring.ring(), &scalars, set));
    let mut ideals = BTreeMap::from([("I".to_string(), ring_gens(&inst.ideal))]);
    if let Some(j) = &inst.extras.ideal_j {
        ideals.insert("J".to_string(), ring_gens(j));
    }
    let submodules = BTreeMap::from([(
        "N".to_string(),
        index_list(generators(&**module.module(), &scalars, &inst.submodule)),
    )]);
    let mult_sets = inst
        .extras
        .mult_set
        .iter()
        .map(|s| ("S".to_string(), index_list(s.elements().iter())))
        .collect();
    let degrees = inst
        .extras
        .degree
        .iter()
        .map(|&g| ("g".to_string(), Degree::Residues(inst.setting.group().residues(g))))
        .collect();
    InstanceFile {
        label: Some(inst.setting.label().to_string()),
        group: GroupSection {
            cyclic_orders: inst.setting.group().orders().to_vec(),
        },
        ring: RingSection {
            kind: ring_kind(ring.ring()),
            grading: grading_lists(ring.grading().components()),
        },
        module: module_section(module),
        module2: inst.extras.second_module.as_deref().map(module_section),
        ideals,
        submodules,
        mult_sets,
        degrees,
    }
}
