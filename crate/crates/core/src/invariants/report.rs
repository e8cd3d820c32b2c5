use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::{
    adjacency_masks, big_c_set, bipartition_lower_bound, bipartition_width, check_cap,
    clique_formula, clique_number, edge_boundary, gray_scan, independence_bounds,
    independence_number, isoperimetric_bounds, isoperimetric_exact, isoperimetric_theorem,
    mean_distance, smallest_component, third_eigenvalue_bound, InvariantError, IsoperimetricClaim,
    ScanOptions, DEFAULT_EXHAUSTIVE_CAP,
};
use crate::graph::CommutingGraph;
use crate::group::{Centralizers, GroupTable};
use crate::spectrum::{
    cluster_multiplicities, laplacian, numeric_spectrum, Eigenvalue, DEFAULT_CLUSTER_GAP,
    DEFAULT_TOLERANCE,
};
use crate::subset::Subset;
use crate::Ratio;

/// Largest order for which the report runs the numeric eigensolver.
const NUMERIC_ORDER_LIMIT: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportOptions {
    pub cap: usize,
    pub strict_iso: bool,
    /// Off-diagonal tolerance of the numeric eigensolver.
    pub tolerance: f64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_EXHAUSTIVE_CAP,
            strict_iso: false,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// A non-negative number as it appears in a report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Int(u64),
    Ratio(Ratio),
    /// `√n`.
    Sqrt(u64),
    /// A numeric value not within clustering distance of an integer.
    Approx(f64),
}

impl Value {
    /// `(p, q)` with `value² = p / q`, for the exact variants.
    fn square(self) -> Option<(u128, u128)> {
        match self {
            Value::Int(k) => Some((k as u128 * k as u128, 1)),
            Value::Ratio(r) => Some((
                *r.numer() as u128 * *r.numer() as u128,
                *r.denom() as u128 * *r.denom() as u128,
            )),
            Value::Sqrt(n) => Some((n as u128, 1)),
            Value::Approx(_) => None,
        }
    }

    fn as_f64(self) -> f64 {
        match self {
            Value::Int(k) => k as f64,
            Value::Ratio(r) => *r.numer() as f64 / *r.denom() as f64,
            Value::Sqrt(n) => libm::sqrt(n as f64),
            Value::Approx(x) => x,
        }
    }

    pub fn compare(self, other: Value) -> Option<Ordering> {
        match (self.square(), other.square()) {
            (Some((a, b)), Some((c, d))) => Some((a * d).cmp(&(c * b))),
            _ => self.as_f64().partial_cmp(&other.as_f64()),
        }
    }

    fn same(self, other: Value) -> bool {
        match (self, other) {
            (Value::Approx(_), _) | (_, Value::Approx(_)) => false,
            _ => self.compare(other) == Some(Ordering::Equal),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(k) => write!(f, "{k}"),
            Value::Ratio(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Value::Ratio(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Value::Sqrt(n) => write!(f, "sqrt({n})"),
            Value::Approx(x) => write!(f, "{x:.9}"),
        }
    }
}

impl From<Eigenvalue> for Value {
    fn from(e: Eigenvalue) -> Self {
        match e {
            Eigenvalue::Exact(v) => Value::Int(v),
            Eigenvalue::Approx(x) => Value::Approx(x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    CapExceeded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not_applicable",
            Status::CapExceeded => "cap_exceeded",
        }
    }
}

/// One invariant: the searched or directly computed value, the value a
/// formula predicts, and an interval it must lie in.
#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub name: &'static str,
    pub exact: Option<Value>,
    pub formula: Option<Value>,
    pub bounds: Option<(Value, Value)>,
    pub witness: Option<Subset>,
    pub status: Status,
}

impl Entry {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            exact: None,
            formula: None,
            bounds: None,
            witness: None,
            status: Status::NotApplicable,
        }
    }

    /// Sets `status` from the values present; `capped` marks an exact value
    /// that was skipped because of the search cap.
    fn judged(mut self, capped: bool) -> Self {
        self.status = match self.exact {
            None if capped => Status::CapExceeded,
            None => Status::NotApplicable,
            Some(x) => {
                let mut checks = Vec::new();
                if let Some(f) = self.formula {
                    checks.push(x.same(f));
                }
                if let Some((lo, hi)) = self.bounds {
                    checks.push(
                        lo.compare(x).is_some_and(Ordering::is_le)
                            && x.compare(hi).is_some_and(Ordering::is_le),
                    );
                }
                if checks.is_empty() {
                    Status::NotApplicable
                } else if checks.iter().all(|&c| c) {
                    Status::Pass
                } else {
                    Status::Fail
                }
            }
        };
        self
    }
}

/// A statement checked for this group beyond the per-invariant entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub name: &'static str,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub order: usize,
    pub center: Subset,
    pub abelian: bool,
    /// Whether the centralizer trichotomy holds (vacuously for abelian groups).
    pub trichotomy: bool,
    /// Vertices of degree above `|Z|`.
    pub big_c: Subset,
    pub entries: Vec<Entry>,
    pub claims: Vec<Claim>,
}

impl InvariantReport {
    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn claim(&self, name: &str) -> Option<Status> {
        self.claims
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.status)
    }

    /// Names of failed entries and claims.
    pub fn failures(&self) -> Vec<&'static str> {
        let entries = self
            .entries
            .iter()
            .filter(|e| e.status == Status::Fail)
            .map(|e| e.name);
        entries
            .chain(
                self.claims
                    .iter()
                    .filter(|c| c.status == Status::Fail)
                    .map(|c| c.name),
            )
            .collect()
    }

    pub fn all_pass(&self) -> bool {
        self.failures().is_empty()
    }
}

pub fn full_report(g: &GroupTable, options: ReportOptions) -> InvariantReport {
    full_report_for_graph(g, &CommutingGraph::build(g), options)
}

/// Like [`full_report`], with searches and direct counts run on `graph`
/// while formulas come from the group. Used to check that a tampered graph
/// is caught.
pub fn full_report_for_graph(
    g: &GroupTable,
    graph: &CommutingGraph,
    options: ReportOptions,
) -> InvariantReport {
    let cz = Centralizers::of(g);
    let n = g.order();
    let abelian = cz.is_abelian();
    let con = abelian || cz.con_check().holds;
    let nonabelian_con = con && !abelian;
    let z = cz.center().len() as u64;
    let cap = options.cap;
    let mut entries = Vec::new();
    let mut claims = Vec::new();

    let mut e = Entry::new("diameter");
    e.exact = Some(Value::Int(graph.diameter() as u64));
    e.formula = match (abelian, con) {
        (true, _) => Some(Value::Int(u64::from(n >= 2))),
        (false, true) => Some(Value::Int(2)),
        _ => None,
    };
    entries.push(e.judged(false));

    let md = mean_distance(graph, &cz);
    let mut e = Entry::new("mean_distance");
    e.exact = Some(Value::Ratio(md.direct));
    e.formula = md.formula.map(Value::Ratio);
    entries.push(e.judged(false));

    let mut e = Entry::new("clique_number");
    let found = clique_number(graph, cap);
    if let Ok((w, s)) = &found {
        e.exact = Some(Value::Int(*w as u64));
        e.witness = Some(s.clone());
    }
    e.formula = clique_formula(&cz).map(Value::Int);
    entries.push(e.judged(capped(&found)));

    let mut e = Entry::new("independence_number");
    let found = independence_number(graph, cap);
    if let Ok((a, s)) = &found {
        e.exact = Some(Value::Int(*a as u64));
        e.witness = Some(s.clone());
    }
    let (lo, hi) = independence_bounds(&cz);
    e.bounds = Some((Value::Int(lo), Value::Int(hi)));
    entries.push(e.judged(capped(&found)));
    let alpha = found.ok().map(|(a, _)| a as u64);

    let mut e = Entry::new("isoperimetric_number");
    let iso = isoperimetric_exact(
        graph,
        ScanOptions {
            cap,
            strict: options.strict_iso,
        },
    );
    if let Ok(r) = &iso {
        e.exact = Some(Value::Ratio(r.ratio));
        e.witness = Some(r.witness.clone());
    }
    if let IsoperimetricClaim::Exact { value, .. } = isoperimetric_theorem(&cz) {
        e.formula = Some(Value::Ratio(value));
    }
    e.bounds = isoperimetric_bounds(&cz).map(|(lo, hi2)| (Value::Ratio(lo), Value::Sqrt(hi2)));
    entries.push(e.judged(capped(&iso)));

    let mut e = Entry::new("bipartition_width");
    let bw = bipartition_width(graph, cap);
    if let Ok((w, s)) = &bw {
        e.exact = Some(Value::Int(*w as u64));
        e.witness = Some(s.clone());
    }
    let (half, rest) = (n as u64 / 2, n as u64 - n as u64 / 2);
    e.bounds = bipartition_lower_bound(&cz).map(|lb| (Value::Ratio(lb), Value::Int(half * rest)));
    entries.push(e.judged(capped(&bw)));

    let mut e = Entry::new("algebraic_connectivity");
    let mut numeric_capped = false;
    if n >= 2 {
        if n > NUMERIC_ORDER_LIMIT {
            numeric_capped = true;
        } else {
            match numeric_algebraic_connectivity(graph, options.tolerance) {
                Some(v) => e.exact = Some(v),
                None => e.status = Status::Fail,
            }
        }
        if con {
            e.formula = Some(Value::Int(z));
        }
    }
    if e.status == Status::Fail {
        entries.push(e);
    } else {
        entries.push(e.judged(numeric_capped));
    }

    let mut e = Entry::new("min_centralizer_order");
    let min_degree = (0..n).map(|v| graph.degree(v)).min().unwrap_or(0);
    e.exact = Some(Value::Int(min_degree as u64 + 1));
    let lambda3 = third_eigenvalue_bound(&cz);
    e.formula = lambda3.map(Value::Int);
    entries.push(e.judged(false));

    if let (Some(l3), Some(a)) = (lambda3, alpha) {
        claims.push(Claim {
            name: "independence_within_third_eigenvalue_bound",
            status: pass_if(a <= n as u64 - l3 + 1),
        });
    }

    if nonabelian_con {
        let f0 = smallest_component(&cz).expect("trichotomy holds");
        let ratio = edge_boundary(graph, &f0).map(|b| b.ratio);
        claims.push(Claim {
            name: "smallest_component_ratio_equals_center_order",
            status: pass_if(ratio == Ok(Ratio::from_integer(z))),
        });
        let status = match (&iso, ratio) {
            (Ok(r), Ok(f)) => pass_if(r.ratio <= f),
            (Err(InvariantError::SizeCapExceeded { .. }), _) => Status::CapExceeded,
            _ => Status::Fail,
        };
        claims.push(Claim {
            name: "isoperimetric_at_most_smallest_component_ratio",
            status,
        });
    }

    if !abelian {
        let scan = exhaustive_subset_claims(graph, &cz, nonabelian_con, cap);
        let statuses = match scan {
            Ok(s) => s.map(pass_if),
            Err(_) => [Status::CapExceeded; 3],
        };
        claims.push(Claim {
            name: "boundary_formula_matches_count",
            status: statuses[0],
        });
        claims.push(Claim {
            name: "boundary_ratio_at_least_center_order",
            status: statuses[1],
        });
        if nonabelian_con {
            claims.push(Claim {
                name: "subset_ratio_within_bounds",
                status: statuses[2],
            });
        }
    }

    InvariantReport {
        order: n,
        center: cz.center().clone(),
        abelian,
        trichotomy: con,
        big_c: big_c_set(&cz),
        entries,
        claims,
    }
}

fn capped<T>(r: &Result<T, InvariantError>) -> bool {
    matches!(r, Err(InvariantError::SizeCapExceeded { .. }))
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn numeric_algebraic_connectivity(graph: &CommutingGraph, tolerance: f64) -> Option<Value> {
    let values = numeric_spectrum(&laplacian(graph), tolerance).ok()?;
    let report = cluster_multiplicities(&values, DEFAULT_CLUSTER_GAP).ok()?;
    report.algebraic_connectivity().map(Value::from)
}

/// One pass over every nonempty proper subset, checking the exact boundary
/// formula, the lower bound `|∂S| ≥ |Z||S|` under its hypotheses, and (for
/// trichotomy groups) `|Z||S||Sᶜ| ≤ n|∂S| ≤ n|S||Sᶜ|`.
fn exhaustive_subset_claims(
    graph: &CommutingGraph,
    cz: &Centralizers,
    ratio_bounds: bool,
    cap: usize,
) -> Result<[bool; 3], InvariantError> {
    let n = graph.order();
    check_cap(n, cap)?;
    let adj = adjacency_masks(graph);
    let full = (1u64 << n) - 1;
    let zmask = cz.center().to_mask().expect("at most 64 elements");
    let zlen = zmask.count_ones() as i64;
    let blocks: Vec<u64> = (0..n)
        .map(|u| cz.component_of(u).to_mask().expect("at most 64 elements"))
        .collect();
    let mut ok = [true; 3];
    gray_scan(&adj, |mask, size, boundary| {
        if mask == full {
            return;
        }
        let (s, b, nn) = (size as i64, boundary as i64, n as i64);
        let meet = (mask & zmask).count_ones() as i64;
        let missed = zlen - meet;
        if meet > 0 && missed > 0 {
            let mut tail = 0i64;
            let mut rest = mask & !zmask;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                tail += (blocks[u] & !mask).count_ones() as i64;
                rest &= rest - 1;
            }
            ok[0] &= b == s * zlen + meet * (nn - 2 * s - missed) + tail;
        } else if meet == 0 || meet == s || 2 * s <= nn {
            ok[1] &= b >= zlen * s;
        }
        if ratio_bounds {
            let product = s * (nn - s);
            ok[2] &= zlen * product <= nn * b && b <= product;
        }
    });
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use alloc::string::ToString;

    fn report(spec: &str) -> InvariantReport {
        full_report(&catalog(spec).unwrap(), ReportOptions::default())
    }

    fn exact(r: &InvariantReport, name: &str) -> Value {
        r.entry(name).unwrap().exact.unwrap()
    }

    #[test]
    fn dihedral8_passes_everything() {
        let r = report("dihedral:8");
        assert!(r.all_pass(), "{:?}", r.failures());
        assert_eq!(
            exact(&r, "isoperimetric_number"),
            Value::Ratio(Ratio::from_integer(2))
        );
        assert_eq!(exact(&r, "clique_number"), Value::Int(4));
        assert_eq!(exact(&r, "diameter"), Value::Int(2));
        assert_eq!(exact(&r, "mean_distance"), Value::Ratio(Ratio::new(5, 4)));
        assert!(
            r.entries.iter().all(|e| e.status == Status::Pass),
            "{:?}",
            r.entries
        );
        assert_eq!(r.claims.len(), 6);
        assert!(r.claims.iter().all(|c| c.status == Status::Pass));
    }

    #[test]
    fn cyclic_groups() {
        let r = report("cyclic:4");
        assert!(r.all_pass());
        assert_eq!(exact(&r, "diameter"), Value::Int(1));
        assert_eq!(exact(&r, "clique_number"), Value::Int(4));
        assert_eq!(exact(&r, "independence_number"), Value::Int(1));
        assert_eq!(
            exact(&r, "isoperimetric_number"),
            Value::Ratio(Ratio::from_integer(2))
        );
        let r = report("cyclic:10");
        assert!(r.all_pass());
        assert_eq!(
            exact(&r, "isoperimetric_number"),
            Value::Ratio(Ratio::from_integer(5))
        );
        let r = report("cyclic:1");
        assert!(r.all_pass());
        assert_eq!(
            r.entry("isoperimetric_number").unwrap().status,
            Status::NotApplicable
        );
    }

    #[test]
    fn s4_marks_formulas_not_applicable() {
        let r = full_report(
            &catalog("symmetric:4").unwrap(),
            ReportOptions {
                cap: 8,
                ..Default::default()
            },
        );
        assert!(r.all_pass());
        assert!(!r.trichotomy);
        assert_eq!(
            r.entry("isoperimetric_number").unwrap().status,
            Status::CapExceeded
        );
        assert_eq!(
            r.entry("mean_distance").unwrap().status,
            Status::NotApplicable
        );
        assert!(r.entry("mean_distance").unwrap().exact.is_some());
        assert_eq!(
            r.claim("boundary_formula_matches_count"),
            Some(Status::CapExceeded)
        );
    }

    #[test]
    fn corrupted_graph_is_caught() {
        let g = catalog("dihedral:8").unwrap();
        let mut graph = CommutingGraph::build(&g);
        graph.corrupt_edge(g.index_of("x").unwrap(), g.index_of("y").unwrap());
        let r = full_report_for_graph(&g, &graph, ReportOptions::default());
        assert!(!r.all_pass());
        assert!(r.failures().contains(&"mean_distance"));
    }

    #[test]
    fn strict_convention_is_reported_against_the_theorem() {
        let r = full_report(
            &catalog("cyclic:4").unwrap(),
            ReportOptions {
                strict_iso: true,
                ..Default::default()
            },
        );
        assert_eq!(
            r.entry("isoperimetric_number").unwrap().status,
            Status::Fail
        );
    }

    #[test]
    fn value_ordering_mixes_kinds() {
        assert_eq!(Value::Int(3).compare(Value::Sqrt(9)), Some(Ordering::Equal));
        assert_eq!(
            Value::Ratio(Ratio::new(7, 2)).compare(Value::Sqrt(12)),
            Some(Ordering::Greater)
        );
        assert_eq!(
            Value::Ratio(Ratio::new(7, 2)).compare(Value::Sqrt(13)),
            Some(Ordering::Less)
        );
        assert!(!Value::Approx(2.0).same(Value::Int(2)));
        assert_eq!(Value::Ratio(Ratio::new(35, 24)).to_string(), "35/24");
        assert_eq!(Value::Ratio(Ratio::from_integer(2)).to_string(), "2");
    }
}
