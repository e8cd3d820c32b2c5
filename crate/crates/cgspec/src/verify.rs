//! The built-in verification checklist: both spectrum routes, eigenbasis
//! soundness and every invariant claim over a fixed catalog.

use std::fmt::Write as _;

use cgspec_core::invariants::{full_report_for_graph, ReportOptions, Status};
use cgspec_core::spectrum::analyze_spectrum;
use cgspec_core::{catalog, CommutingGraph};
use serde_json::{json, Value as Json};

use crate::render::SCHEMA_VERSION;

pub const VERIFY_CATALOG: &[&str] = &[
    "cyclic:1",
    "cyclic:2",
    "cyclic:7",
    "cyclic:12",
    "elementary_abelian:2^3",
    "symmetric:3",
    "dihedral:8",
    "quaternion:8",
    "dihedral:10",
    "dihedral:12",
    "dihedral:16",
    "product:cyclic:2xsymmetric:3",
    "symmetric:4",
];

/// Report entries and claims that need an exhaustive search.
const EXHAUSTIVE: &[&str] = &[
    "clique_number",
    "independence_number",
    "isoperimetric_number",
    "bipartition_width",
    "independence_within_third_eigenvalue_bound",
    "isoperimetric_at_most_smallest_component_ratio",
    "boundary_formula_matches_count",
    "boundary_ratio_at_least_center_order",
    "subset_ratio_within_bounds",
];

/// Group whose graph gets an extra edge when fault injection is on.
const FAULT_TARGET: &str = "dihedral:8";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub checks: Vec<Check>,
}

impl VerifySummary {
    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }

    pub fn to_json(&self) -> Json {
        let checks: Vec<Json> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "status": c.status.as_str(), "detail": c.detail}))
            .collect();
        json!({
            "schema": SCHEMA_VERSION,
            "checks": checks,
            "passed": self.count(CheckStatus::Pass),
            "failed": self.count(CheckStatus::Fail),
            "skipped": self.count(CheckStatus::Skipped),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = write!(s, "{:<8} {}", c.status.as_str().to_uppercase(), c.name);
            if let Some(d) = &c.detail {
                let _ = write!(s, " ({d})");
            }
            s.push('\n');
        }
        let _ = writeln!(
            s,
            "{} passed, {} failed, {} skipped",
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Skipped)
        );
        s
    }
}

fn check(name: String, ok: bool, detail: Option<String>) -> Check {
    let status = if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    Check {
        name,
        status,
        detail: if ok { None } else { detail },
    }
}

pub fn run_verify(cap: usize, tolerance: f64, inject_fault: bool) -> VerifySummary {
    let mut checks = Vec::new();
    for &spec in VERIFY_CATALOG {
        let g = catalog(spec).expect("built-in catalog specs are valid");
        let mut graph = CommutingGraph::build(&g);
        if inject_fault && spec == FAULT_TARGET {
            let (x, y) = (
                g.index_of("x").expect("rotation"),
                g.index_of("y").expect("reflection"),
            );
            graph.corrupt_edge(x, y);
        }

        let a = analyze_spectrum(&g, &graph, tolerance);
        checks.push(check(
            format!("{spec}: spectrum"),
            a.verdict.is_ok(),
            Some(format!("verdict {}", a.verdict.as_str())),
        ));
        checks.push(check(
            format!("{spec}: eigenbases"),
            a.bases_sound,
            Some("basis vector fails L·y = λ·y".into()),
        ));

        let report = full_report_for_graph(
            &g,
            &graph,
            ReportOptions {
                cap,
                strict_iso: false,
                tolerance,
            },
        );
        let failed = report.failures();
        let (exhaustive, direct): (Vec<&str>, Vec<&str>) =
            failed.iter().partition(|n| EXHAUSTIVE.contains(n));
        checks.push(check(
            format!("{spec}: invariants"),
            direct.is_empty(),
            Some(direct.join(", ")),
        ));
        if g.order() > cap {
            let capped = report
                .entries
                .iter()
                .any(|e| e.status == Status::CapExceeded);
            checks.push(Check {
                name: format!("{spec}: exhaustive"),
                status: CheckStatus::Skipped,
                detail: capped.then(|| format!("order {} exceeds cap {cap}", g.order())),
            });
        } else {
            checks.push(check(
                format!("{spec}: exhaustive"),
                exhaustive.is_empty(),
                Some(exhaustive.join(", ")),
            ));
        }
    }
    VerifySummary { checks }
}
