use std::sync::{Arc, OnceLock};

use gradedie::theorems::{build_settings, corpus, Instance, SettingSpec};
use gradedie_cli::file::{serialize_instance, Loaded};
use proptest::prelude::*;

fn instances() -> &'static [Instance] {
    static CELL: OnceLock<Vec<Instance>> = OnceLock::new();
    CELL.get_or_init(|| {
        let specs = [
            SettingSpec::Cyclic(8),
            SettingSpec::Cyclic(12),
            SettingSpec::GroupRing {
                coefficients: 3,
                group: vec![2],
            },
            SettingSpec::AxisProduct(3),
        ];
        let settings: Vec<Arc<_>> = build_settings(&specs).unwrap();
        corpus(&settings)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parse_of_serialize_keeps_the_id(k in any::<prop::sample::Index>()) {
        let all = instances();
        let inst = &all[k.index(all.len())];
        let text = serialize_instance(inst).to_toml();
        let back = Loaded::from_str(&text, "roundtrip").unwrap().instance().unwrap();
        prop_assert_eq!(&back.id, &inst.id, "{}", text);
        prop_assert_eq!(&back.label, &inst.label);
    }
}

#[test]
fn every_shape_round_trips() {
    for inst in instances() {
        let text = serialize_instance(inst).to_toml();
        let back = Loaded::from_str(&text, "roundtrip").unwrap().instance().unwrap();
        assert_eq!(back.id, inst.id, "{text}");
    }
}
