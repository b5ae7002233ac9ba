use serde_json::Value;

use critsets::io::report::{analyze, AnalysisReport, AnalyzeOptions, Method};
use critsets::io::{fixture, fixture_names, generate, parse_graph, render_graph, GraphKind};
use critsets::oracle::OracleBounds;
use critsets::verify::battery::{BatteryOptions, Status};
use critsets::verify::run_battery;

fn opts(method: Method) -> AnalyzeOptions {
    AnalyzeOptions {
        method,
        bounds: OracleBounds::default(),
        timing: false,
        ..AnalyzeOptions::default()
    }
}

fn report(name: &str) -> AnalysisReport {
    analyze(&fixture(name).unwrap(), &opts(Method::Auto)).unwrap()
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn every_fixture_round_trips() {
    for name in fixture_names() {
        let doc = fixture(name).unwrap();
        assert_eq!(parse_graph(&render_graph(&doc)).unwrap(), doc, "{name}");
    }
    assert_eq!(fixture_names().count(), 10);
}

#[test]
fn auto_and_oracle_methods_agree() {
    for name in fixture_names() {
        let auto = report(name);
        let exact = analyze(&fixture(name).unwrap(), &opts(Method::Oracle)).unwrap();
        assert_eq!(auto.invariants, exact.invariants, "{name}");
        assert_eq!(auto.sets, exact.sets, "{name}");
    }
}

#[test]
fn fig2_values() {
    let r = report("fig2");
    let i = &r.invariants;
    assert_eq!((i.delta0_a, i.delta0_b, i.dc, i.alpha, i.mu), (Some(1), Some(2), 3, 8, 5));
    let s = r.sets.sides.unwrap();
    assert_eq!(s.ker_a, strs(&["a1", "a2"]));
    assert_eq!(s.ker_b, strs(&["b5", "b6", "b7"]));
    assert_eq!(s.diadem_a, strs(&["a1", "a2", "a3", "a4", "a5"]));
    assert_eq!(s.diadem_b, strs(&["b2", "b3", "b4", "b5", "b6", "b7"]));
}

#[test]
fn ker_equals_core_examples() {
    let r = report("fig14-g1");
    assert_eq!(r.sets.ker, strs(&["x", "y"]));
    assert_eq!(r.sets.core, r.sets.ker);
    assert!(r.invariants.konig_egervary);
    let r = report("fig14-g2");
    assert_eq!(r.sets.ker, strs(&["a", "b"]));
    assert_eq!(r.sets.core, r.sets.ker);
    assert!(!r.invariants.konig_egervary);
}

#[test]
fn diadem_versus_corona_examples() {
    let r = report("fig17888-g1");
    assert!(!r.bipartite && r.invariants.konig_egervary);
    assert_eq!(r.sets.ker, r.sets.core);
    assert_eq!(r.sets.diadem, r.sets.corona);

    let r = report("fig17888-g2");
    assert!(!r.invariants.konig_egervary);
    assert_eq!(r.sets.ker, strs(&["x", "y"]));
    assert_eq!(r.sets.core, r.sets.ker);
    let mut joined = r.sets.diadem.clone();
    joined.extend(strs(&["z", "t", "v", "w"]));
    joined.sort();
    let mut corona = r.sets.corona.clone();
    corona.sort();
    assert_eq!(joined, corona);

    let r = report("fig1777");
    let s = &r.sets;
    assert!(s.diadem.len() < s.corona.len() && s.ker.len() < s.core.len());
}

#[test]
fn fig1_g1_diadem_discrepancy_is_documented() {
    let r = report("fig1-g1");
    assert_eq!(r.sets.diadem, strs(&["x", "y", "z", "u", "v"]));
    assert!(critsets::io::fixture_text("fig1-g1").unwrap().contains("{u, v, x, y, z}"));
}

#[test]
fn battery_on_fixtures() {
    let battery = BatteryOptions::default();
    let run = |name: &str| {
        let doc = fixture(name).unwrap();
        let g = doc.graph();
        let bp = doc.declared_bipartition(&g).map(Result::unwrap);
        run_battery(&g, name, bp.as_ref(), doc.names.as_deref(), &battery)
    };

    let r = run("fig2");
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(r.skipped(), 0);

    let r = run("fig1777");
    match &r.get("ke-corona-core-sum").unwrap().status {
        Status::Fail { witness } => {
            assert!(witness.contains("13"), "{witness}");
            assert!(witness.contains("12"), "{witness}");
            assert!(witness.contains("not König-Egerváry"), "{witness}");
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(r.get("conjecture-chain").unwrap().status, Status::Pass { .. }));

    let r = run("fig222-g1");
    assert!(r.all_passed());
    match &r.get("ker-within-core").unwrap().status {
        Status::Pass { detail } => assert!(detail.as_deref().unwrap_or("").contains("strict"), "{detail:?}"),
        other => panic!("{other:?}"),
    }

    for name in ["fig14-g1", "fig222-g2", "fig17888-g1", "fig1-g1"] {
        let r = run(name);
        assert!(r.all_passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn generator_golden_file() {
    let doc = generate(&GraphKind::Bipartite { n_a: 12, n_b: 12, p: 0.3 }, 7, 0).unwrap();
    assert_eq!(render_graph(&doc), include_str!("golden/bip-12x12-p0.3-s7.graph"));
}

#[test]
fn analysis_golden_files() {
    let o = AnalyzeOptions {
        verify: true,
        oracle: true,
        ..opts(Method::Auto)
    };
    let r = analyze(&fixture("fig2").unwrap(), &o).unwrap();
    assert_eq!(r.to_json() + "\n", include_str!("golden/fig2-analysis.json"));
    assert_eq!(r.to_text(), include_str!("golden/fig2-analysis.txt"));
}

/// Every scalar and set in the JSON rendering appears on the matching text line.
#[test]
fn json_and_text_carry_the_same_values() {
    let o = AnalyzeOptions {
        oracle: true,
        ..opts(Method::Auto)
    };
    for name in fixture_names() {
        let o = AnalyzeOptions {
            oracle: fixture(name).unwrap().side_a.is_some(),
            ..o.clone()
        };
        let r = analyze(&fixture(name).unwrap(), &o).unwrap();
        let json: Value = serde_json::from_str(&r.to_json()).unwrap();
        let text = r.to_text();
        let line = |key: &str| {
            text.lines()
                .find_map(|l| l.strip_prefix(&format!("{key}: ")))
                .unwrap_or_else(|| panic!("{name}: no text line for {key}"))
                .to_string()
        };
        let render = |v: &Value| match v {
            Value::Array(items) => format!(
                "{{{}}}",
                items.iter().map(|i| i.as_str().unwrap().to_string()).collect::<Vec<_>>().join(", ")
            ),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        for key in ["graph", "n", "m", "bipartite", "method"] {
            assert_eq!(line(key), render(&json[key]), "{name}: {key}");
        }
        for section in ["invariants", "sets"] {
            for (key, value) in json[section].as_object().unwrap() {
                if key == "sides" {
                    for (k, v) in value.as_object().unwrap() {
                        assert_eq!(line(k), render(v), "{name}: {k}");
                    }
                } else {
                    assert_eq!(line(key), render(value), "{name}: {key}");
                }
            }
        }
        assert_eq!(json["schema"], 1);
    }
}
