use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::MAX_CARRIER_SIZE;
use crate::error::GradingError;

use super::instance::{Extras, Instance, Setting, SettingSpec};

/// Cyclic rings `Z2..Z16`, `Z3[Z2]` and `Z2[Z2]`, and `Z_n` on `Z_n × Z_n` for `n ≤ 6`.
pub fn default_settings() -> Vec<SettingSpec> {
    let mut specs: Vec<SettingSpec> = (2..=16).map(SettingSpec::Cyclic).collect();
    specs.push(SettingSpec::GroupRing {
        coefficients: 3,
        group: vec![2],
    });
    specs.push(SettingSpec::GroupRing {
        coefficients: 2,
        group: vec![2],
    });
    specs.extend((2..=6).map(SettingSpec::AxisProduct));
    specs
}

/// Every instance shape over one setting:
/// `(I, N)`, `(I, N, g)`, `(I, J)` when `M = R`, `(I, N, copy of M)` when
/// `|M|² ≤ 256`, and `(I, N, S)` for each corpus multiplicative set.
pub fn instances_for(setting: &Arc<Setting>) -> Vec<Instance> {
    let module = setting.module();
    let ideals = setting.graded_ideals();
    let proper: Vec<_> = setting.graded_submodules().iter().filter(|n| !n.is_full()).collect();
    let paired = module.size() * module.size() <= MAX_CARRIER_SIZE;
    let mut out = Vec::new();
    for i in ideals {
        for &n in &proper {
            let base = |extras: Extras| Instance::new(setting.clone(), i.clone(), n.clone(), extras);
            out.push(base(Extras::default()));
            for g in setting.group().elements() {
                out.push(base(Extras {
                    degree: Some(g),
                    ..Extras::default()
                }));
            }
            if paired {
                out.push(base(Extras {
                    second_module: Some(module.clone()),
                    ..Extras::default()
                }));
            }
            for s in setting.multiplicative_sets() {
                out.push(base(Extras {
                    mult_set: Some(s.clone()),
                    ..Extras::default()
                }));
            }
        }
        if setting.module_is_ring() {
            for j in ideals.iter().filter(|j| !j.is_full()) {
                out.push(Instance::new(
                    setting.clone(),
                    i.clone(),
                    j.clone(),
                    Extras {
                        ideal_j: Some(j.clone()),
                        ..Extras::default()
                    },
                ));
            }
        }
    }
    out
}

pub fn build_settings(specs: &[SettingSpec]) -> Result<Vec<Arc<Setting>>, GradingError> {
    specs.par_iter().map(|s| s.build().map(Arc::new)).collect()
}

/// All instances over `settings`, sorted by id.
pub fn corpus(settings: &[Arc<Setting>]) -> Vec<Instance> {
    let mut all: Vec<Instance> = settings.par_iter().flat_map_iter(instances_for).collect();
    all.sort_by(|a, b| a.id.cmp(&b.id));
    all
}
