//! JSON shapes written by `compute`, `bounds` and `bench`.

use closeness_core::bounds::{BoundReport, BoundSide, GraphParameters, Measure};
use closeness_core::harness::bench::BenchRow;
use closeness_core::io::{GraphDocument, GraphSource};
use closeness_core::json::{format_real, real};
use closeness_core::{Alpha, DistanceSummary, InvariantSet, StructuralFlags};
use serde_json::{json, Map, Value};

fn alpha_key(a: Alpha) -> String {
    format_real(a.get()).expect("alpha is finite")
}

fn flags(f: &StructuralFlags) -> Value {
    json!({
        "is_tree": f.is_tree,
        "triangle_free": f.triangle_free,
        "quadrangle_free": f.quadrangle_free,
        "girth_ge_7": f.girth_ge_7,
        "is_moore_diam2": f.is_moore_diam2,
    })
}

fn distribution(s: &DistanceSummary) -> Value {
    let mut out = Map::new();
    for (k, count) in s.distribution() {
        out.insert(k.to_string(), json!(count));
    }
    Value::Object(out)
}

fn header(doc: &GraphDocument, out: &mut Map<String, Value>) {
    out.insert("label".into(), json!(doc.label));
    let source = match &doc.source {
        GraphSource::File(path) => json!({ "file": path, "format": doc.format.to_string() }),
        GraphSource::Stdin => json!({ "stdin": true, "format": doc.format.to_string() }),
        GraphSource::Family(spec) => json!({ "family": spec }),
    };
    out.insert("source".into(), source);
    if let Some(labels) = &doc.vertex_labels {
        out.insert("vertex_labels".into(), json!(labels));
    }
}

pub fn invariants(doc: &GraphDocument, inv: &InvariantSet) -> Value {
    let mut out = Map::new();
    header(doc, &mut out);
    out.insert("n".into(), json!(inv.n));
    out.insert("m".into(), json!(inv.m));
    out.insert("connected".into(), json!(inv.connected()));
    if !inv.connected() {
        out.insert("convention".into(), json!("alpha_inf_zero"));
    }
    out.insert("closeness".into(), real(inv.closeness));
    let mut gc = Map::new();
    for &(a, v) in &inv.gc_alpha {
        gc.insert(alpha_key(a), real(v));
    }
    out.insert("gc_alpha".into(), Value::Object(gc));
    out.insert("m1".into(), json!(inv.m1));
    out.insert("m2".into(), json!(inv.m2));
    out.insert("rm2".into(), json!(inv.rm2));
    out.insert("wiener_polarity".into(), json!(inv.wiener_polarity));
    out.insert("girth".into(), json!(inv.girth));
    out.insert("radius".into(), json!(inv.summary.radius));
    out.insert("diameter".into(), json!(inv.summary.diameter));
    out.insert("distance_distribution".into(), distribution(&inv.summary));
    out.insert("flags".into(), flags(&inv.flags));
    Value::Object(out)
}

fn side(s: Option<BoundSide>) -> Value {
    match s {
        None => Value::Null,
        Some(BoundSide::Lower) => json!("lower"),
        Some(BoundSide::Upper) => json!("upper"),
        Some(BoundSide::Both) => json!("both"),
    }
}

fn report(r: &BoundReport, truth: f64, tolerance: f64) -> Value {
    let holds = !r.applicable || r.contains(truth, tolerance);
    json!({
        "bound_id": r.id.code(),
        "lower": r.lower.map_or(Value::Null, real),
        "upper": r.upper.map_or(Value::Null, real),
        "applicable": r.applicable,
        "equality_expected": r.equality_expected(),
        "equality_side": side(r.equality),
        "holds": holds,
        "attained": r.equality_expected() && r.attained(truth, tolerance),
    })
}

pub fn bounds(
    doc: &GraphDocument,
    params: &GraphParameters,
    summary: &DistanceSummary,
    measures: &[(Measure, Vec<BoundReport>)],
    tolerance: f64,
) -> Value {
    let mut out = Map::new();
    header(doc, &mut out);
    out.insert("n".into(), json!(params.n));
    out.insert("m".into(), json!(params.m));
    out.insert("m1".into(), json!(params.m1));
    out.insert("m2".into(), json!(params.m2));
    out.insert("radius".into(), json!(params.radius));
    out.insert("diameter".into(), json!(params.diameter));
    out.insert("flags".into(), flags(&params.flags));
    if let Some(spec) = &params.tnd {
        out.insert("tnd".into(), json!(spec.pendants()));
    }
    let measures: Vec<Value> = measures
        .iter()
        .map(|(measure, reports)| {
            let truth = measure.evaluate(summary);
            json!({
                "measure": measure.name(),
                "alpha": measure.alpha().map_or(Value::Null, |a| real(a.get())),
                "truth": real(truth),
                "reports": reports.iter().map(|r| report(r, truth, tolerance)).collect::<Vec<_>>(),
            })
        })
        .collect();
    out.insert("measures".into(), Value::Array(measures));
    Value::Object(out)
}

pub fn bench(rows: &[BenchRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "family": r.family.name(),
                "n": r.n,
                "bfs_value": real(r.bfs_value),
                "formula_value": real(r.formula_value),
                "values_equal": r.values_equal,
                "bfs_seconds": real(r.bfs_seconds),
                "formula_seconds": real(r.formula_seconds),
            })
        })
        .collect();
    json!({ "rows": rows })
}
