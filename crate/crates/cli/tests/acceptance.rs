//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero when a criterion fails in a way not recorded in `KNOWN_RED`.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::Model;
use gradedie::algebra::{AlgebraicSubset, ElementSet};
use gradedie::constructions::{localize, quotient_module, MultiplicativeSet};
use gradedie::grading::GradedModule;
use gradedie::predicates::{
    ie_times, is_e_ie_prime_ideal, is_g_ie_prime, is_g_prime, is_graded_ie_prime, is_graded_prime,
    is_graded_weakly_prime, is_multiplication, Scope, Verdict,
};
use gradedie::theorems::{
    build_settings, corpus, default_settings, run_suite, verify_witness, ClaimId, Instance, Setting, SuiteConfig,
    SuiteReport,
};
use gradedie_cli::commands::{classify, suite, SuiteOptions};
use gradedie_cli::file::Loaded;
use gradedie_cli::report::to_json;

/// Wall-clock bound for classifying `<4>` in `Z12`.
const CLASSIFY_LIMIT: Duration = Duration::from_secs(1);
/// Wall-clock bound for the prime-implies-ie scan over the full corpus.
const CORPUS_LIMIT: Duration = Duration::from_secs(120);
/// Hypothesis-passing instances each required claim must reach.
const MIN_HYPOTHESES_MET: usize = 10;
/// Largest module checked against the naive oracle.
const ORACLE_MAX_MODULE: usize = 16;

/// Criteria expected to fail, with the reason checked by the criterion itself.
const KNOWN_RED: &[(u8, &str)] = &[(
    6,
    "L2_9 is falsified: Gr((I_eN_g : M_g))N_g can be strictly smaller than I_eN_g (Z4, I = R, N = <2>)",
)];

struct Outcome {
    pass: bool,
    detail: String,
    /// For a failing criterion: whether the failure matches its `KNOWN_RED` analysis.
    understood: bool,
}

fn check(ok: bool, detail: String) -> Outcome {
    Outcome {
        pass: ok,
        detail,
        understood: false,
    }
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn settings() -> Vec<Arc<Setting>> {
    build_settings(&default_settings()).expect("default corpus builds")
}

fn base_instances(instances: &[Instance]) -> impl Iterator<Item = &Instance> {
    instances.iter().filter(|i| {
        let e = &i.extras;
        e.ideal_j.is_none() && e.second_module.is_none() && e.mult_set.is_none() && e.degree.is_none()
    })
}

fn proper_submodules(s: &Setting) -> impl Iterator<Item = &ElementSet> {
    s.graded_submodules().iter().filter(|n| !n.is_full())
}

fn sub(m: &GradedModule, set: &ElementSet) -> AlgebraicSubset {
    AlgebraicSubset::trusted(&**m.module(), set.clone())
}

fn ideal(m: &GradedModule, set: &ElementSet) -> AlgebraicSubset {
    AlgebraicSubset::trusted(m.ring(), set.clone())
}

fn run(config: SuiteConfig) -> SuiteReport {
    run_suite(&config).expect("suite runs without integrity errors")
}

fn all_witnesses_verify(report: &SuiteReport) -> bool {
    report.reports.iter().filter(|r| r.falsified()).all(|r| {
        let inst = report.corpus.iter().find(|i| i.id == r.instance_id).expect("instance present");
        verify_witness(inst, r)
    })
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let loaded = Loaded::from_path(&fixture("z12_four.toml")).expect("fixture loads");
    let report = classify(&loaded, &["N".into()], "I").expect("classify runs");
    let elapsed = start.elapsed();
    let entry = |p: &str| report.entries.iter().find(|e| e.predicate == p).expect("entry present");
    let prime = entry("graded-prime");
    let ie = entry("graded-ie-prime");
    let w = prime.witness.as_ref();
    let pair = w.and_then(|w| Some((w.scalar.as_ref()?.index, w.vector.as_ref()?.index)));
    // raw arithmetic mod 12 with N = {0, 4, 8}
    let in_n = |x: usize| x.is_multiple_of(4);
    let raw = pair.is_some_and(|(r, m)| in_n(r * m % 12) && !in_n(m) && (0..12).any(|x| !in_n(r * x % 12)));
    let ok = prime.value == Some(false)
        && pair == Some((2, 2))
        && prime.verified == Some(true)
        && raw
        && ie.value == Some(true)
        && ie.vacuous
        && elapsed < CLASSIFY_LIMIT;
    check(
        ok,
        format!(
            "prime={:?} witness={pair:?} verified={:?} ie-prime={:?} vacuous={} in {elapsed:?} (limit {CLASSIFY_LIMIT:?})",
            prime.value, prime.verified, ie.value, ie.vacuous
        ),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let report = run(SuiteConfig {
        claims: vec![ClaimId::PrimeImpliesIe],
        required: vec![ClaimId::PrimeImpliesIe],
        ..SuiteConfig::default()
    });
    let elapsed = start.elapsed();
    let s = report.summary_for(ClaimId::PrimeImpliesIe).expect("summary");
    check(
        s.falsified == 0 && s.held > 0 && elapsed < CORPUS_LIMIT,
        format!(
            "{} instances, {} evaluated, {} with a graded prime N, {} violations in {elapsed:?} (limit {CORPUS_LIMIT:?})",
            report.instances, s.evaluated, s.held, s.falsified
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let mut mismatches = 0;
    for s in settings() {
        let m = s.module();
        let zero = ideal(m, &ElementSet::new(m.ring().size(), [m.ring().zero()]));
        for n in proper_submodules(&s) {
            let n = sub(m, n);
            let ie = is_graded_ie_prime(m, &n, &zero).expect("predicate").value;
            let weak = is_graded_weakly_prime(m, &n).expect("predicate").value;
            checked += 1;
            mismatches += usize::from(ie != weak);
        }
    }
    check(
        mismatches == 0 && checked > 0,
        format!("{checked} submodules, {mismatches} mismatches"),
    )
}

fn criterion_4() -> Outcome {
    let report = run(SuiteConfig {
        claims: vec![ClaimId::T2_8],
        required: vec![ClaimId::T2_8],
        ..SuiteConfig::default()
    });
    let s = report.summary_for(ClaimId::T2_8).expect("summary");
    let mut checked = 0;
    let mut mismatches = 0;
    let instances = corpus(&settings());
    for inst in base_instances(&instances) {
        let m = inst.module();
        let n = sub(m, &inst.submodule);
        let left = is_graded_ie_prime(m, &n, &ideal(m, &inst.ideal)).expect("predicate").value;
        let ien = ie_times(m, &inst.ideal, &inst.submodule);
        let q = quotient_module(m, &sub(m, &ien)).expect("quotient");
        let image = q.project_set(&inst.submodule);
        let right = is_graded_weakly_prime(q.module(), &sub(q.module(), &image))
            .expect("predicate")
            .value;
        checked += 1;
        mismatches += usize::from(left != right);
    }
    check(
        mismatches == 0 && s.falsified == 0 && checked > 0,
        format!(
            "{checked} instances recomputed with {mismatches} mismatches; suite: {} evaluated, {} falsified",
            s.evaluated, s.falsified
        ),
    )
}

fn criterion_5() -> Outcome {
    let claims = [ClaimId::T2_7, ClaimId::T2_11];
    let report = run(SuiteConfig {
        claims: claims.to_vec(),
        required: claims.to_vec(),
        ..SuiteConfig::default()
    });
    let parts: Vec<String> = report
        .summary
        .iter()
        .map(|s| format!("{} {} evaluated/{} falsified", s.claim, s.evaluated, s.falsified))
        .collect();
    let ok = report.summary.len() == 2 && report.summary.iter().all(|s| s.falsified == 0 && s.held > 0);
    check(ok, parts.join(", "))
}

/// `Gr((I_eN : M))·N = I_eN` recomputed by hand in `Z4` with `I = R`, `N = {0, 2}`.
fn z4_radical_product_fails() -> bool {
    let n = [0usize, 2];
    let ien: BTreeSet<usize> = (0..4).flat_map(|a| n.iter().map(move |&x| a * x % 4)).collect();
    let colon: Vec<usize> = (0..4).filter(|&r| (0..4).all(|x| ien.contains(&(r * x % 4)))).collect();
    let radical: Vec<usize> = (0..4)
        .filter(|&r: &usize| (1..=4u32).any(|k| colon.contains(&(r.pow(k) % 4))))
        .collect();
    let product: BTreeSet<usize> = radical.iter().flat_map(|&a| n.iter().map(move |&x| a * x % 4)).collect();
    product != ien
}

fn criterion_6() -> Outcome {
    let claims = [
        ClaimId::T2_4,
        ClaimId::C2_5,
        ClaimId::C2_6,
        ClaimId::L2_9,
        ClaimId::T2_10,
        ClaimId::T2_12,
        ClaimId::C2_13,
        ClaimId::T2_15,
    ];
    let report = run(SuiteConfig {
        claims: claims.to_vec(),
        required: claims.to_vec(),
        ..SuiteConfig::default()
    });
    let enough = report
        .summary
        .iter()
        .all(|s| s.evaluated - s.filtered >= MIN_HYPOTHESES_MET);
    let exit_status = if report.passed() { 0 } else { 1 };
    let counts: Vec<String> = report
        .summary
        .iter()
        .map(|s| format!("{} {}/{}/{}", s.claim, s.evaluated, s.evaluated - s.filtered, s.falsified))
        .collect();
    let falsified: BTreeSet<ClaimId> = report.required_falsifications().map(|r| r.claim).collect();
    let understood = falsified == BTreeSet::from([ClaimId::L2_9])
        && enough
        && all_witnesses_verify(&report)
        && z4_radical_product_fails();
    Outcome {
        pass: exit_status == 0 && enough,
        detail: format!(
            "exit status {exit_status}; evaluated/hypotheses met/falsified: {}",
            counts.join(", ")
        ),
        understood,
    }
}

fn criterion_7() -> Outcome {
    let claims = [ClaimId::T2_14, ClaimId::T2_16i];
    let mut config = SuiteConfig {
        claims: claims.to_vec(),
        required: Vec::new(),
        ..SuiteConfig::default()
    };
    let loaded = Loaded::from_path(&fixture("t2_14_z12.toml")).expect("fixture loads");
    let target = loaded.instance().expect("instance");
    config.extra.push(target.clone());
    let report = run(config);
    let sound = all_witnesses_verify(&report);
    let t214 = report
        .reports
        .iter()
        .find(|r| r.claim == ClaimId::T2_14 && r.instance_id == target.id);
    let opts = SuiteOptions {
        config: Some(fixture("t2_14_suite.toml")),
        ..SuiteOptions::default()
    };
    let produced = to_json(&suite(&opts).expect("suite runs")).expect("json");
    let golden_path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/t2_14_z12.json");
    let golden = std::fs::read_to_string(&golden_path).unwrap_or_default();
    let counts: Vec<String> = report
        .summary
        .iter()
        .map(|s| format!("{} {} evaluated/{} falsified", s.claim, s.evaluated, s.falsified))
        .collect();
    check(
        sound && t214.is_some() && produced == golden,
        format!(
            "{}; witnesses verify: {sound}; Z12 <4>,<4> instance: {}; golden match: {}",
            counts.join(", "),
            t214.map_or("missing", |r| if r.falsified() { "falsified" } else { "not falsified" }),
            produced == golden
        ),
    )
}

fn agree(engine: &Verdict, naive: (bool, bool)) -> bool {
    (engine.value, engine.vacuous) == naive
}

fn criterion_8() -> Outcome {
    let mut comparisons = 0usize;
    let mut disagreements = Vec::new();
    for s in settings() {
        let m = s.module();
        if m.size() > ORACLE_MAX_MODULE {
            continue;
        }
        let model = Model::new(m);
        let mut note = |ok: bool, what: String| {
            comparisons += 1;
            if !ok {
                disagreements.push(format!("{}: {what}", s.label()));
            }
        };
        let naive_subs = model.graded_submodules();
        let engine_subs: Vec<Vec<usize>> = {
            let mut v: Vec<Vec<usize>> = s.graded_submodules().iter().map(|x| x.iter().collect()).collect();
            v.sort();
            v
        };
        note(naive_subs == engine_subs, "graded submodule lattice".into());
        note(
            is_multiplication(m, Scope::Whole).unwrap().value == model.is_multiplication(None),
            "multiplication".into(),
        );
        for g in s.group().elements() {
            note(
                is_multiplication(m, Scope::Component(g)).unwrap().value == model.is_multiplication(Some(g)),
                format!("multiplication[{g}]"),
            );
        }
        let mask = |set: &ElementSet, size: usize| (0..size).map(|x| set.contains(x)).collect::<Vec<bool>>();
        for n in proper_submodules(&s) {
            let nb = mask(n, m.size());
            let na = sub(m, n);
            note(agree(&is_graded_prime(m, &na).unwrap(), model.graded_prime(&nb)), format!("prime {n:?}"));
            note(
                agree(&is_graded_weakly_prime(m, &na).unwrap(), model.graded_weakly_prime(&nb)),
                format!("weakly prime {n:?}"),
            );
            for g in s.group().elements() {
                let e = is_g_prime(m, &na, g).ok();
                note(
                    e.map(|v| (v.value, v.vacuous)) == model.g_prime(&nb, g),
                    format!("g-prime[{g}] {n:?}"),
                );
            }
            for i in s.graded_ideals() {
                let ib = mask(i, m.ring().size());
                let ia = ideal(m, i);
                note(
                    agree(&is_graded_ie_prime(m, &na, &ia).unwrap(), model.graded_ie_prime(&nb, &ib)),
                    format!("ie-prime {n:?} {i:?}"),
                );
                for g in s.group().elements() {
                    let e = is_g_ie_prime(m, &na, &ia, g).ok();
                    note(
                        e.map(|v| (v.value, v.vacuous)) == model.g_ie_prime(&nb, &ib, g),
                        format!("g-ie-prime[{g}] {n:?} {i:?}"),
                    );
                }
            }
        }
        for j in s.graded_ideals() {
            let jb = mask(j, m.ring().size());
            for i in s.graded_ideals() {
                let ib = mask(i, m.ring().size());
                let e = is_e_ie_prime_ideal(s.ring(), &ideal(m, j), &ideal(m, i)).ok();
                note(
                    e.map(|v| (v.value, v.vacuous)) == model.e_ie_prime_ideal(&jb, &ib),
                    format!("e-ie-prime ideal {j:?} {i:?}"),
                );
            }
        }
    }
    let shown: Vec<&String> = disagreements.iter().take(3).collect();
    check(
        disagreements.is_empty() && comparisons > 0,
        format!(
            "{comparisons} comparisons on modules with at most {ORACLE_MAX_MODULE} elements, {} disagreements {shown:?}",
            disagreements.len()
        ),
    )
}

fn verdict_kinds(m: &GradedModule, n: &ElementSet, i: &ElementSet) -> Vec<Option<bool>> {
    let na = sub(m, n);
    let ia = ideal(m, i);
    let mut out = vec![
        is_graded_prime(m, &na).ok().map(|v| v.value),
        is_graded_weakly_prime(m, &na).ok().map(|v| v.value),
        is_graded_ie_prime(m, &na, &ia).ok().map(|v| v.value),
    ];
    for g in m.group().elements() {
        out.push(is_g_prime(m, &na, g).ok().map(|v| v.value));
        out.push(is_g_ie_prime(m, &na, &ia, g).ok().map(|v| v.value));
    }
    out
}

fn criterion_9() -> Outcome {
    let mut law_checks = 0;
    let mut law_failures = 0;
    let mut unit_checks = 0;
    let mut unit_failures = 0;
    for s in settings() {
        let m = s.module();
        let mm = &**m.module();
        for set in s.multiplicative_sets() {
            let loc = s.localization(set).expect("localization");
            for n in proper_submodules(&s) {
                let colon: Vec<usize> = mm.ring().elements().filter(|&r| mm.elements().all(|x| n.contains(mm.act(r, x)))).collect();
                let proper = loc.transport(n).len() < loc.module().size();
                let misses = colon.iter().all(|&r| !set.contains(r));
                law_checks += 1;
                law_failures += usize::from(proper != misses);
            }
        }
        let ring = s.ring();
        let units: Vec<usize> = ring.homogeneous().iter().filter(|&x| ring.ring().is_unit(x)).collect();
        let set = MultiplicativeSet::generated(ring, &units).expect("units form a multiplicative set");
        let loc = localize(m, &set).expect("localization at units");
        let lm = loc.module();
        for n in proper_submodules(&s) {
            for i in s.graded_ideals() {
                let before = verdict_kinds(m, n, i);
                let after = verdict_kinds(lm, &loc.transport(n), &loc.transport_ideal(i));
                unit_checks += 1;
                unit_failures += usize::from(before != after);
            }
        }
    }
    check(
        law_failures == 0 && unit_failures == 0 && law_checks > 0 && unit_checks > 0,
        format!(
            "properness law: {law_checks} checks, {law_failures} failures; units: {unit_checks} (N, I) pairs, {unit_failures} changed verdicts"
        ),
    )
}

fn criterion_10() -> Outcome {
    let opts = SuiteOptions::default();
    let first = to_json(&suite(&opts).expect("suite runs")).expect("json");
    let second = to_json(&suite(&opts).expect("suite runs")).expect("json");
    let threaded = to_json(
        &suite(&SuiteOptions {
            jobs: Some(2),
            ..SuiteOptions::default()
        })
        .expect("suite runs"),
    )
    .expect("json");
    check(
        first == second && first == threaded,
        format!(
            "{} bytes; repeat identical: {}; 2 workers identical: {}",
            first.len(),
            first == second,
            first == threaded
        ),
    )
}

type Criterion = (u8, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "Z12 <4> classification", criterion_1),
        (2, "prime implies I_e-prime", criterion_2),
        (3, "zero-ideal bridge", criterion_3),
        (4, "T2_8 biconditional", criterion_4),
        (5, "T2_7 and T2_11 equivalences", criterion_5),
        (6, "required-claim suite", criterion_6),
        (7, "exploratory claims", criterion_7),
        (8, "naive oracle agreement", criterion_8),
        (9, "localization laws", criterion_9),
        (10, "determinism", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (n, name, f) in criteria {
        let o = f();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {n:>2} ({name}): {}", o.detail);
        if !o.pass {
            match KNOWN_RED.iter().find(|(k, _)| *k == n) {
                Some((_, why)) if o.understood => println!("     known red: {why}"),
                _ => unexpected.push(n),
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
