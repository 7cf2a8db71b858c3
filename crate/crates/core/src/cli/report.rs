use serde_json::{json, Value};
use std::fmt::Write;

use super::Output;
use crate::decompose::DecompositionReport;
use crate::filtration::{BiFiltered, FilteredHModule, GradedSS};
use crate::homspace::HomBasis;
use crate::linalg::rational::fmt_rational;
use crate::pages::{DsSpace, Order, PageSequence};
use crate::qn::{ArcDiagram, HalfIntWeight, Multiplicity, Partition};
use crate::supermod::Parity;
use crate::verify::CriterionReport;

fn schema(name: &str) -> String {
    format!("gl11.{name}/v1")
}

fn done(json: Value, text: String) -> Output {
    Output { json, text, ok: true }
}

pub(super) fn pages(expr: &str, seq: &PageSequence, max_page: Option<usize>) -> Output {
    let last = max_page.unwrap_or(seq.stable_from);
    let mut rows = Vec::new();
    let mut text = format!("{expr}, order {}\n", seq.order);
    for r in 0..=last {
        let p = seq.page(r);
        let (e, o) = p.dim_table().sdims();
        writeln!(text, "E_{r}: ({e}|{o})  {}  rank d_{r} = {}", p.dim_table(), p.d_rank()).unwrap();
        rows.push(json!({ "r": r, "dims": p.dim_table(), "even": e, "odd": o, "d_rank": p.d_rank() }));
    }
    writeln!(text, "stable from r = {} (certified by r = {})", seq.stable_from, seq.certified_bound).unwrap();
    let json = json!({
        "schema": schema("pages"),
        "expr": expr,
        "order": seq.order,
        "stable_from": seq.stable_from,
        "certified_bound": seq.certified_bound,
        "pages": rows,
    });
    done(json, text)
}

pub(super) fn ds(expr: &str, d: &DsSpace) -> Output {
    let (e, o) = d.sdims();
    let table = d.dim_table();
    let mut text = format!("DS_{} {expr} = ({e}|{o})\n", d.direction);
    if let Some(t) = &table {
        writeln!(text, "  {t}").unwrap();
    }
    let json = json!({
        "schema": schema("ds"),
        "expr": expr,
        "direction": d.direction,
        "even": e,
        "odd": o,
        "dims": table,
    });
    done(json, text)
}

pub(super) fn decomposition(expr: &str, rep: &DecompositionReport) -> Output {
    let mut text = format!("{expr} = {}\n", rep.summands);
    writeln!(
        text,
        "certified: {} (dims {}, pages {}{})",
        rep.certified,
        rep.dims_match,
        rep.pages_match,
        if rep.page_equations { ", page equations used" } else { "" }
    )
    .unwrap();
    let mut json = serde_json::to_value(rep).expect("report serializes");
    json["schema"] = json!(schema("decompose"));
    json["expr"] = json!(expr);
    Output { json, text, ok: rep.certified }
}

fn graded_text(g: &GradedSS) -> String {
    let mut text = String::new();
    for (n, piece) in &g.pieces {
        writeln!(text, "  piece {n}: {piece}").unwrap();
    }
    if g.is_zero() {
        text.push_str("  0\n");
    }
    text
}

pub(super) fn ss(expr: &str, order: Order, g: &GradedSS) -> Output {
    let text = format!("semisimplification of {expr}, order {order}\n{}", graded_text(g));
    let json = json!({ "schema": schema("ss"), "expr": expr, "order": order, "pieces": g });
    done(json, text)
}

pub(super) fn filtration(expr: &str, order: Order, f: &FilteredHModule) -> Output {
    let mut text = format!("filtration on the limit page of {expr}, order {order}\n");
    for l in f.lines() {
        writeln!(text, "  F_{}: weight {} {}", l.degree, fmt_rational(&l.weight), l.parity).unwrap();
    }
    let json = json!({
        "schema": schema("filtration"),
        "expr": expr,
        "order": order,
        "jumps": f.jumps(),
        "lines": f.lines(),
    });
    done(json, text)
}

pub(super) fn bifilt(expr: &str, bf: &BiFiltered) -> Output {
    let mut text = format!("DS_(x+y) {expr}: dimension {}\n", bf.dim());
    let mut grid = Vec::new();
    for b in bf.grid.keys() {
        let s = bf.at(b);
        let (mut e, mut o) = (0, 0);
        for v in s.basis() {
            // grid subspaces are spanned by homogeneous vectors
            let i = v.iter().position(|c| !num_traits::Zero::is_zero(c)).expect("nonzero basis vector");
            match bf.parities[i] {
                Parity::Even => e += 1,
                Parity::Odd => o += 1,
            }
        }
        writeln!(text, "  V^({}, {}) = ({e}|{o})", b.0, fmt_rational(&b.1)).unwrap();
        grid.push(json!({ "n": b.0, "r": fmt_rational(&b.1), "even": e, "odd": o }));
    }
    let (summands, ok, error) = match bf.summands() {
        Ok(s) => (s, true, None),
        Err(e) => (Vec::new(), false, Some(e)),
    };
    for s in &summands {
        writeln!(text, "  C_({}, {}) {} x{}", s.n, fmt_rational(&s.r), s.parity, s.multiplicity).unwrap();
    }
    if let Some(e) = &error {
        writeln!(text, "  not a sum of C_v: {e}").unwrap();
    }
    let json = json!({
        "schema": schema("bifilt"),
        "expr": expr,
        "dim": bf.dim(),
        "grid": grid,
        "summands": summands,
        "error": error,
    });
    Output { json, text, ok }
}

pub(super) fn homs(source: &str, target: &str, h: &HomBasis) -> Output {
    let mut text = format!("Hom({source}, {target}): dimension {}\n", h.dim());
    let mut maps = Vec::new();
    for (i, m) in h.maps.iter().enumerate() {
        let shift = fmt_rational(&h.shifts[i]);
        writeln!(text, "  map {i}: {} parity, weight shift {shift}", h.parities[i]).unwrap();
        let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(fmt_rational).collect()).collect();
        maps.push(json!({ "parity": h.parities[i], "shift": shift, "matrix": rows }));
    }
    let json = json!({
        "schema": schema("homs"),
        "source": source,
        "target": target,
        "equivariance": h.equivariance,
        "parity": h.parity,
        "dim": h.dim(),
        "maps": maps,
    });
    done(json, text)
}

pub(super) fn arc(lambda: &HalfIntWeight, ad: &ArcDiagram) -> Output {
    let text = format!("{lambda}\n{}\n", ad.render());
    let len = (ad.extent() + 1) / 2;
    let json = json!({
        "schema": schema("arc"),
        "weight": lambda,
        "diagram": ad.diagram.ascii(len.max(1)),
        "symbols": ad.diagram,
        "arcs": ad.arcs,
        "maximal_arcs": ad.maximal_arcs(),
        "render": ad.render(),
    });
    done(json, text)
}

pub(super) fn qmult(lambda: &HalfIntWeight, mu: &HalfIntWeight, k: usize, m: Multiplicity) -> Output {
    let shown = match m {
        Multiplicity::Zero => "0",
        Multiplicity::OneOne => "(1|1)",
    };
    let text = format!("[DS^{k} L{lambda} : L{mu}] = {shown}\n");
    let json = json!({ "schema": schema("qmult"), "lambda": lambda, "mu": mu, "k": k, "multiplicity": m });
    done(json, text)
}

pub(super) fn lr(l: &Partition, m: &Partition, g: &Partition, c: u64) -> Output {
    let text = format!("c^{g}_{{{l},{m}}} = {c}\n");
    let json = json!({ "schema": schema("lr"), "lambda": l, "mu": m, "gamma": g, "coefficient": c });
    done(json, text)
}

pub(super) fn verify(seed: u64, reports: &[CriterionReport]) -> Output {
    let mut text = format!("seed {seed}\n");
    for r in reports {
        writeln!(text, "{}", r.line()).unwrap();
    }
    let ok = reports.iter().all(|r| r.passed());
    let json = json!({ "schema": schema("verify"), "seed": seed, "passed": ok, "criteria": reports });
    Output { json, text, ok }
}
