//! Golden files under `corpus/`: each case runs the CLI with `--json`, checks the
//! output against the subcommand's schema, and compares it with the expected
//! fragment. Files tagged `oracle` are produced by `regenerate` from the
//! independent oracles, never from the main implementation.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use gl11::cli::{run_with, EXIT_OK};
use gl11::corpus::oracle::{oracle_decompose, oracle_pages};
use gl11::corpus::{build, indecomposables, q2_bridge_expr};
use gl11::expr::module;
use gl11::linalg::rational::{fmt_rational, half, int};
use gl11::pages::{closed_form_d_rank, closed_form_page_dims, Order};
use gl11::supermod::{IndecompId, IndecompKind};

const GENERATED: &[&str] = &["indecomposable_pages", "q2_bridge", "tensor_rules", "ds_and_filtrations"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Origin {
    ClosedForm,
    Oracle,
}

#[derive(Debug, Serialize, Deserialize)]
struct GoldenCase {
    name: String,
    args: Vec<String>,
    expected: Value,
    origin: Origin,
}

#[derive(Debug, Serialize, Deserialize)]
struct GoldenFile {
    topic: String,
    cases: Vec<GoldenCase>,
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn load_all() -> BTreeMap<String, GoldenFile> {
    let mut out = BTreeMap::new();
    for entry in fs::read_dir(corpus_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let name = path.file_stem().unwrap().to_string_lossy().into_owned();
            let file: GoldenFile = serde_json::from_str(&fs::read_to_string(&path).unwrap())
                .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            out.insert(name, file);
        }
    }
    out
}

fn run_json(args: &[String]) -> (i32, Value) {
    let mut argv = vec!["gl11".to_string(), "--json".to_string()];
    argv.extend(args.iter().cloned());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(&argv, &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    let value = serde_json::from_str(&text)
        .unwrap_or_else(|e| panic!("{args:?}: not JSON ({e}): {text} {}", String::from_utf8_lossy(&err)));
    (code, value)
}

/// `actual` contains `expected`: objects by key, arrays elementwise with equal length.
fn contains(actual: &Value, expected: &Value) -> bool {
    match (actual, expected) {
        (Value::Object(a), Value::Object(e)) => e.iter().all(|(k, v)| a.get(k).is_some_and(|x| contains(x, v))),
        (Value::Array(a), Value::Array(e)) => a.len() == e.len() && a.iter().zip(e).all(|(x, v)| contains(x, v)),
        _ => actual == expected,
    }
}

fn schema_for(cmd: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{cmd}.json"));
    let schema: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn golden_cases_match() {
    let files = load_all();
    assert!(files.len() >= 7, "corpus has {} files", files.len());
    let mut validators = BTreeMap::new();
    let mut failures = Vec::new();
    let mut seen_cmds = std::collections::BTreeSet::new();
    for (file, g) in &files {
        assert!(!g.cases.is_empty(), "{file} has no cases");
        for c in &g.cases {
            let cmd = c.args[0].clone();
            seen_cmds.insert(cmd.clone());
            let v = validators.entry(cmd.clone()).or_insert_with(|| schema_for(&cmd));
            let (code, out) = run_json(&c.args);
            if code != EXIT_OK {
                failures.push(format!("{file}/{}: exit {code}", c.name));
            }
            if let Err(e) = v.validate(&out) {
                failures.push(format!("{file}/{}: schema: {e}", c.name));
            }
            if !contains(&out, &c.expected) {
                failures.push(format!("{file}/{}: expected {} got {}", c.name, c.expected, out));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    for cmd in ["pages", "ds", "decompose", "ss", "filtration", "bifilt", "homs", "arc", "qmult", "lr", "verify"] {
        assert!(seen_cmds.contains(cmd), "no golden case exercises {cmd}");
    }
}

#[test]
fn generated_files_are_current() {
    let files = load_all();
    for name in GENERATED {
        let on_disk = files.get(*name).unwrap_or_else(|| panic!("missing corpus/{name}.json"));
        let fresh = generate(name);
        assert_eq!(serde_json::to_value(on_disk).unwrap(), serde_json::to_value(&fresh).unwrap(), "{name}");
    }
}

#[test]
#[ignore = "rewrites corpus/*.json"]
fn regenerate() {
    for name in GENERATED {
        let text = serde_json::to_string_pretty(&generate(name)).unwrap() + "\n";
        fs::write(corpus_dir().join(format!("{name}.json")), text).unwrap();
    }
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn order_name(o: Order) -> &'static str {
    match o {
        Order::Xy => "xy",
        Order::Yx => "yx",
    }
}

fn generate(name: &str) -> GoldenFile {
    match name {
        "indecomposable_pages" => indecomposable_pages(),
        "q2_bridge" => q2_bridge(),
        "tensor_rules" => tensor_rules(),
        "ds_and_filtrations" => ds_and_filtrations(),
        _ => unreachable!(),
    }
}

fn fds_ids() -> Vec<IndecompId> {
    let mut ids = indecomposables(3);
    ids.push(IndecompId::new(IndecompKind::X(2)).twisted(half(1)).shifted());
    ids.push(IndecompId::new(IndecompKind::Y(3)).twisted(int(-1)));
    ids.push(IndecompId::new(IndecompKind::W(-2)).twisted(half(-1)).shifted());
    ids.push(IndecompId::new(IndecompKind::P).twisted(half(3)));
    ids
}

fn indecomposable_pages() -> GoldenFile {
    let mut cases = Vec::new();
    for id in fds_ids() {
        for o in Order::BOTH {
            let last = 4;
            let pages: Vec<Value> = (0..=last)
                .map(|r| {
                    let dims = closed_form_page_dims(&id, r, o).unwrap();
                    // d_0 is the first operator itself, outside the closed form
                    if r == 0 {
                        json!({ "r": r, "dims": dims })
                    } else {
                        json!({ "r": r, "dims": dims, "d_rank": closed_form_d_rank(&id, r, o) })
                    }
                })
                .collect();
            cases.push(GoldenCase {
                name: format!("{id} {}", order_name(o)),
                args: strs(&["pages", &id.to_string(), "--order", order_name(o), "--max-page", &last.to_string()]),
                expected: json!({ "schema": "gl11.pages/v1", "order": order_name(o), "pages": pages }),
                origin: Origin::ClosedForm,
            });
        }
    }
    GoldenFile { topic: "page tables of indecomposables".into(), cases }
}

fn q2_bridge() -> GoldenFile {
    let mut cases = Vec::new();
    for n in 1..=4 {
        let expr = q2_bridge_expr(n);
        let m = module(&expr).unwrap();
        for o in Order::BOTH {
            let last = n as usize + 1;
            let pages: Vec<Value> =
                (0..=last).map(|r| json!({ "r": r, "dims": oracle_pages(&m, r, o).unwrap() })).collect();
            cases.push(GoldenCase {
                name: format!("n{n} {}", order_name(o)),
                args: strs(&["pages", &expr, "--order", order_name(o), "--max-page", &last.to_string()]),
                expected: json!({ "order": order_name(o), "pages": pages }),
                origin: Origin::Oracle,
            });
        }
    }
    GoldenFile { topic: "restriction of q(2) simples to gl(1|1)".into(), cases }
}

fn tensor_rules() -> GoldenFile {
    let exprs = [
        "W(1)(x)W(1)",
        "W(1)(x)W(-1)",
        "W(2)(x)W(-1)",
        "W(1)(x)X(1)",
        "W(-1)(x)X(2)",
        "W(1)(x)Y(2)",
        "X(1)(x)X(1)",
        "X(1)(x)X(2)",
        "Y(1)(x)Y(2)",
        "X(1)(x)Y(1)",
        "X(2)(x)Y(1)",
        "P(x)W(1)",
        "W(1)_{1/2}(x)Pi W(-1)",
    ];
    let cases = exprs
        .iter()
        .map(|e| {
            let summands = oracle_decompose(&module(e).unwrap()).unwrap();
            GoldenCase {
                name: e.to_string(),
                args: strs(&["decompose", e]),
                expected: json!({ "schema": "gl11.decompose/v1", "summands": summands, "certified": true }),
                origin: Origin::Oracle,
            }
        })
        .collect();
    GoldenFile { topic: "tensor products of indecomposables".into(), cases }
}

fn ds_and_filtrations() -> GoldenFile {
    let mut cases = Vec::new();
    for m in -2..=2i64 {
        let s = half(1);
        let id = IndecompId::new(IndecompKind::W(m)).twisted(s.clone());
        let expr = id.to_string();
        for (dir, o) in [("x", Order::Xy), ("y", Order::Yx)] {
            let dims = closed_form_page_dims(&id, 1, o).unwrap();
            cases.push(GoldenCase {
                name: format!("ds_{dir} {expr}"),
                args: strs(&["ds", &expr, "--direction", dir]),
                expected: json!({ "schema": "gl11.ds/v1", "even": 1, "odd": 0, "dims": dims }),
                origin: Origin::ClosedForm,
            });
        }
        cases.push(GoldenCase {
            name: format!("ds_x+y {expr}"),
            args: strs(&["ds", &expr, "--direction", "x+y"]),
            expected: json!({ "even": 1, "odd": 0 }),
            origin: Origin::ClosedForm,
        });
        for o in Order::BOTH {
            let w = if o == Order::Xy { &s + int(m) } else { &s - int(m) };
            cases.push(GoldenCase {
                name: format!("filtration {expr} {}", order_name(o)),
                args: strs(&["filtration", &expr, "--order", order_name(o)]),
                expected: json!({
                    "schema": "gl11.filtration/v1",
                    "jumps": [m],
                    "lines": [{ "degree": m, "weight": fmt_rational(&w), "parity": "even" }],
                }),
                origin: Origin::ClosedForm,
            });
            cases.push(GoldenCase {
                name: format!("ss {expr} {}", order_name(o)),
                args: strs(&["ss", &expr, "--order", order_name(o)]),
                expected: json!({
                    "schema": "gl11.ss/v1",
                    "pieces": [{ "degree": m, "weight": fmt_rational(&w), "even_dim": 1, "odd_dim": 0 }],
                }),
                origin: Origin::ClosedForm,
            });
        }
        cases.push(GoldenCase {
            name: format!("bifilt {expr}"),
            args: strs(&["bifilt", &expr]),
            expected: json!({
                "schema": "gl11.bifilt/v1",
                "dim": 1,
                "summands": [{ "n": m, "r": fmt_rational(&s), "parity": "even", "multiplicity": 1 }],
                "error": null,
            }),
            origin: Origin::ClosedForm,
        });
    }
    for id in fds_ids() {
        let expr = id.to_string();
        // an indecomposable is its own decomposition
        let one = build(&id);
        assert!(one.dim() > 0);
        cases.push(GoldenCase {
            name: format!("decompose {expr}"),
            args: strs(&["decompose", &expr]),
            expected: json!({ "summands": [expr], "certified": true }),
            origin: Origin::ClosedForm,
        });
    }
    GoldenFile { topic: "DS functors, filtrations and indecomposables".into(), cases }
}
