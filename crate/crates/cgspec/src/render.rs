//! JSON, plain-text and DOT renderings of spectra, invariant reports and
//! graphs. All output is deterministic: maps are key-sorted and every list
//! follows element order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cgspec_core::invariants::{Entry, InvariantReport, Value};
use cgspec_core::spectrum::{EigenBasis, Eigenvalue, SpectrumAnalysis, SpectrumReport};
use cgspec_core::{CommutingGraph, GroupTable, Subset};
use serde_json::{json, Value as Json};

pub const SCHEMA_VERSION: u64 = 1;

fn names(g: &GroupTable, s: &Subset) -> Vec<String> {
    s.iter().map(|v| g.name(v).to_string()).collect()
}

fn eigenvalue_json(e: Eigenvalue) -> Json {
    match e {
        Eigenvalue::Exact(v) => json!(v),
        Eigenvalue::Approx(x) => json!(x),
    }
}

fn pairs_json(r: &SpectrumReport) -> Json {
    Json::Array(
        r.pairs
            .iter()
            .map(|&(e, m)| json!([eigenvalue_json(e), m]))
            .collect(),
    )
}

fn bases_json(bases: &[&EigenBasis]) -> Json {
    let map: BTreeMap<String, &Vec<Vec<i64>>> = bases
        .iter()
        .map(|b| (b.eigenvalue.to_string(), &b.vectors))
        .collect();
    json!(map)
}

fn group_json(g: &GroupTable) -> Json {
    let cz = cgspec_core::Centralizers::of(g);
    json!({
        "order": g.order(),
        "center": names(g, cz.center()),
        "abelian": cz.is_abelian(),
        "trichotomy": cz.is_abelian() || cz.con_check().holds,
    })
}

fn pairs_text(pairs: impl IntoIterator<Item = (String, String)>) -> String {
    pairs
        .into_iter()
        .map(|(v, m)| format!("{v}^{m}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The primary spectrum is the closed form when it applies and the
/// certificate lower bounds otherwise; the numeric multiset and the verdict
/// follow.
pub fn spectrum_json(g: &GroupTable, a: &SpectrumAnalysis) -> Json {
    let mut out = json!({
        "schema": SCHEMA_VERSION,
        "group": group_json(g),
        "verdict": a.verdict.as_str(),
        "bases_sound": a.bases_sound,
    });
    let obj = out.as_object_mut().expect("object literal");
    match (&a.closed_form, &a.certificates) {
        (Ok(cf), _) => {
            obj.insert("source".into(), json!("closed_form"));
            obj.insert("pairs".into(), pairs_json(&cf.report));
            obj.insert(
                "bases".into(),
                bases_json(&cf.bases.iter().collect::<Vec<_>>()),
            );
        }
        (Err(e), certs) => {
            obj.insert(
                "closed_form".into(),
                json!({"status": "not_applicable", "reason": e.to_string()}),
            );
            if let Some(set) = certs {
                obj.insert("source".into(), json!("certificate"));
                let pairs: Vec<Json> = set
                    .certificates
                    .iter()
                    .map(|c| json!([c.eigenvalue, c.min_multiplicity]))
                    .collect();
                obj.insert("pairs".into(), Json::Array(pairs));
                obj.insert(
                    "bases".into(),
                    bases_json(
                        &set.certificates
                            .iter()
                            .map(|c| &c.basis)
                            .collect::<Vec<_>>(),
                    ),
                );
                obj.insert(
                    "inconclusive".into(),
                    json!(set
                        .inconclusive
                        .iter()
                        .map(|&u| g.name(u))
                        .collect::<Vec<_>>()),
                );
            }
        }
    }
    let numeric = match (&a.numeric, &a.numeric_values) {
        (Ok(r), Ok(values)) => {
            json!({"source": "numeric", "pairs": pairs_json(r), "values": values})
        }
        (Err(e), _) | (_, Err(e)) => json!({"status": "error", "reason": e.to_string()}),
    };
    obj.insert("numeric".into(), numeric);
    out
}

pub fn spectrum_text(g: &GroupTable, a: &SpectrumAnalysis) -> String {
    let mut s = String::new();
    let cz = cgspec_core::Centralizers::of(g);
    let _ = writeln!(
        s,
        "order {}, center {{{}}}",
        g.order(),
        names(g, cz.center()).join(", ")
    );
    match (&a.closed_form, &a.certificates) {
        (Ok(cf), _) => {
            let pairs = cf
                .report
                .pairs
                .iter()
                .map(|(e, m)| (e.to_string(), m.to_string()));
            let _ = writeln!(s, "closed form: {}", pairs_text(pairs));
        }
        (Err(e), certs) => {
            let _ = writeln!(s, "closed form: not applicable ({e})");
            if let Some(set) = certs {
                let pairs = set.certificates.iter().map(|c| {
                    (
                        c.eigenvalue.to_string(),
                        format!(">={}", c.min_multiplicity),
                    )
                });
                let _ = writeln!(s, "certificates: {}", pairs_text(pairs));
            }
        }
    }
    match &a.numeric {
        Ok(r) => {
            let _ = writeln!(
                s,
                "numeric: {}",
                pairs_text(r.pairs.iter().map(|(e, m)| (e.to_string(), m.to_string())))
            );
        }
        Err(e) => {
            let _ = writeln!(s, "numeric: failed ({e})");
        }
    }
    let _ = writeln!(
        s,
        "bases: {}",
        if a.bases_sound { "sound" } else { "UNSOUND" }
    );
    let _ = writeln!(s, "verdict: {}", a.verdict.as_str());
    s
}

fn value_json(v: Value) -> Json {
    match v {
        Value::Int(k) => json!(k),
        Value::Approx(x) => json!(x),
        Value::Ratio(_) | Value::Sqrt(_) => json!(v.to_string()),
    }
}

fn entry_json(g: &GroupTable, e: &Entry) -> Json {
    json!({
        "exact": e.exact.map(value_json),
        "formula": e.formula.map(value_json),
        "bounds": e.bounds.map(|(lo, hi)| json!([value_json(lo), value_json(hi)])),
        "witness": e.witness.as_ref().map(|w| names(g, w)),
        "status": e.status.as_str(),
    })
}

pub fn invariants_json(g: &GroupTable, r: &InvariantReport) -> Json {
    let entries: BTreeMap<&str, Json> = r
        .entries
        .iter()
        .map(|e| (e.name, entry_json(g, e)))
        .collect();
    let claims: Vec<Json> = r
        .claims
        .iter()
        .map(|c| json!({"name": c.name, "status": c.status.as_str()}))
        .collect();
    json!({
        "schema": SCHEMA_VERSION,
        "group": group_json(g),
        "big_c": names(g, &r.big_c),
        "invariants": entries,
        "claims": claims,
        "all_pass": r.all_pass(),
    })
}

pub fn invariants_text(g: &GroupTable, r: &InvariantReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "order {}, center {{{}}}, {}",
        r.order,
        names(g, &r.center).join(", "),
        if r.abelian {
            "abelian"
        } else if r.trichotomy {
            "centralizer trichotomy holds"
        } else {
            "centralizer trichotomy fails"
        }
    );
    for e in &r.entries {
        let mut line = format!("{:<24}", e.name);
        let show = |v: Option<Value>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        let _ = write!(
            line,
            " exact {:<8} formula {:<8}",
            show(e.exact),
            show(e.formula)
        );
        if let Some((lo, hi)) = e.bounds {
            let _ = write!(line, " bounds [{lo}, {hi}]");
        }
        let _ = writeln!(s, "{}  {}", line.trim_end(), e.status.as_str());
    }
    for c in &r.claims {
        let _ = writeln!(s, "claim {:<46} {}", c.name, c.status.as_str());
    }
    let _ = writeln!(s, "{}", if r.all_pass() { "all pass" } else { "FAILURES" });
    s
}

pub fn graph_json(g: &CommutingGraph) -> Json {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    let components: Vec<Vec<usize>> = g.components().iter().map(Subset::to_vec).collect();
    json!({
        "schema": SCHEMA_VERSION,
        "n": g.order(),
        "names": g.names(),
        "edges": edges,
        "center": g.center().to_vec(),
        "components": components,
    })
}

/// Undirected DOT; central vertices are filled.
pub fn graph_dot(g: &CommutingGraph) -> String {
    let mut s = String::from("graph commuting {\n");
    for (v, name) in g.names().iter().enumerate() {
        let label = name.replace('\\', "\\\\").replace('"', "\\\"");
        let style = if g.center().contains(v) {
            ", style=filled"
        } else {
            ""
        };
        let _ = writeln!(s, "  v{v} [label=\"{label}\"{style}];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  v{u} -- v{v};");
    }
    s.push_str("}\n");
    s
}

pub fn graph_text(g: &CommutingGraph) -> String {
    let mut s = String::new();
    for (u, name) in g.names().iter().enumerate() {
        let nbrs: Vec<&str> = g
            .neighbors(u)
            .iter()
            .map(|v| g.names()[v].as_str())
            .collect();
        let _ = writeln!(s, "{name}: {}", nbrs.join(", "));
    }
    s
}
