use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_order, keyed_unicyclic, EnumerationError};
use crate::canon::canonical_form;
use crate::families::{ga_sn3_closed, identify_family, make_family, FamilySpec};
use crate::graph::Graph;
use crate::index::ga_index;
use crate::structure::{classify_in, find_cycle, is_unicyclic, pendant_tree_in};
use crate::transform::{
    arc_transform, finish_one_neighbor_deg2, finish_two_neighbors_deg2, relocate_min,
    star_transform, TransformError,
};

/// A graph whose GA falls outside `[GA(S_{n;3}), n]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundViolation {
    pub graph: Graph,
    pub ga: f64,
}

/// Brute-force check of the GA bounds over every unicyclic graph of order `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub count: usize,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub min_ga: f64,
    pub max_ga: f64,
    /// Canonical keys (hex) of the graphs within tolerance of the minimum.
    pub min_witnesses: Vec<String>,
    /// Canonical keys (hex) of the graphs within tolerance of the maximum.
    pub max_witnesses: Vec<String>,
    pub sn3_attains_min: bool,
    pub min_unique: bool,
    pub cycle_attains_max: bool,
    pub max_unique: bool,
    pub violations: Vec<BoundViolation>,
}

impl BoundReport {
    /// True when no graph breaks the bounds and both extremal graphs are
    /// where they should be.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.sn3_attains_min && self.cycle_attains_max && self.max_unique
    }

    pub fn table_header() -> String {
        format!(
            "{:>3}  {:>6}  {:>12}  {:>12}  {:>12}  {:>12}  {:>8}  {:>10}  {:>10}",
            "n", "count", "lower", "min GA", "max GA", "upper", "min wit", "min unique", "violations"
        )
    }

    pub fn table_row(&self) -> String {
        format!(
            "{:>3}  {:>6}  {:>12.9}  {:>12.9}  {:>12.9}  {:>12.9}  {:>8}  {:>10}  {:>10}",
            self.n,
            self.count,
            self.lower_bound,
            self.min_ga,
            self.max_ga,
            self.upper_bound,
            self.min_witnesses.len(),
            if self.min_unique { "yes" } else { "no" },
            self.violations.len()
        )
    }

    /// Human-readable table for several orders.
    pub fn to_table(reports: &[BoundReport]) -> String {
        let mut out = Self::table_header();
        out.push('\n');
        for r in reports {
            out.push_str(&r.table_row());
            out.push('\n');
        }
        out
    }
}

/// Enumerates order `n` and checks every graph against the GA bounds.
///
/// ```
/// use unicyclic_ga::enumerate::verify_bounds;
///
/// let r = verify_bounds(5, 1e-9).unwrap();
/// assert_eq!(r.count, 5);
/// assert!(r.passed());
/// ```
pub fn verify_bounds(n: usize, tol: f64) -> Result<BoundReport, EnumerationError> {
    check_order(n)?;
    let graphs = keyed_unicyclic(n);
    let lower = ga_sn3_closed(n).expect("n >= 3");
    let upper = n as f64;
    let scored: Vec<(String, f64, &Graph)> = graphs
        .par_iter()
        .map(|(k, g)| (k.to_hex(), ga_index(g).expect("unicyclic graphs have edges"), g))
        .collect();

    let min_ga = scored.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
    let max_ga = scored.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max);
    let near = |x: f64| scored.iter().filter(move |s| (s.1 - x).abs() <= tol);
    let min_witnesses: Vec<String> = near(min_ga).map(|s| s.0.clone()).collect();
    let max_witnesses: Vec<String> = near(max_ga).map(|s| s.0.clone()).collect();

    let sn3 = make_family(FamilySpec::Sn3 { n }).expect("n >= 3");
    let cycle = Graph::cycle(n).expect("n >= 3");
    let (sn3_key, cycle_key) = (canonical_form(&sn3).to_hex(), canonical_form(&cycle).to_hex());

    let violations = scored
        .iter()
        .filter(|s| s.1 < lower - tol || s.1 > upper + tol)
        .map(|s| BoundViolation {
            graph: s.2.clone(),
            ga: s.1,
        })
        .collect();

    Ok(BoundReport {
        n,
        count: scored.len(),
        lower_bound: lower,
        upper_bound: upper,
        min_ga,
        max_ga,
        sn3_attains_min: min_witnesses.contains(&sn3_key) && (min_ga - lower).abs() <= tol,
        min_unique: min_witnesses.len() == 1,
        cycle_attains_max: max_witnesses.contains(&cycle_key) && (max_ga - upper).abs() <= tol,
        max_unique: max_witnesses.len() == 1,
        min_witnesses,
        max_witnesses,
        violations,
    })
}

/// Application counts for one operator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorStats {
    pub operator: String,
    pub applications: usize,
    pub violations: usize,
    /// Largest observed `GA(after) - GA(before)`; never positive when the
    /// operator is monotone.
    pub worst_slack: f64,
}

/// An application that raised GA or broke the output shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorViolation {
    pub operator: String,
    pub arguments: String,
    pub graph: Graph,
    pub ga_before: f64,
    pub ga_after: Option<f64>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub n: usize,
    pub graphs: usize,
    pub operators: Vec<OperatorStats>,
    pub violations: Vec<OperatorViolation>,
}

impl MonotonicityReport {
    pub fn total_applications(&self) -> usize {
        self.operators.iter().map(|o| o.applications).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

const OPERATORS: [&str; 5] = [
    "star_transform",
    "relocate_min",
    "arc_transform",
    "finish_two_neighbors_deg2",
    "finish_one_neighbor_deg2",
];

#[derive(Default)]
struct Tally {
    applications: [usize; 5],
    violations: Vec<OperatorViolation>,
    worst: [f64; 5],
}

impl Tally {
    fn new() -> Self {
        Tally {
            worst: [f64::NEG_INFINITY; 5],
            ..Default::default()
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..5 {
            self.applications[i] += other.applications[i];
            self.worst[i] = self.worst[i].max(other.worst[i]);
        }
        self.violations.extend(other.violations);
        self
    }

    /// Records one application whose preconditions were established by the
    /// caller; precondition errors therefore count as violations too.
    fn record(
        &mut self,
        op: usize,
        arguments: String,
        g: &Graph,
        before: f64,
        result: Result<Graph, TransformError>,
        expect_family: bool,
    ) {
        self.applications[op] += 1;
        let fail = |ga_after: Option<f64>, reason: String| OperatorViolation {
            operator: OPERATORS[op].to_string(),
            arguments: arguments.clone(),
            graph: g.clone(),
            ga_before: before,
            ga_after,
            reason,
        };
        let h = match result {
            Ok(h) => h,
            Err(TransformError::MonotonicityViolation { after, .. }) => {
                self.worst[op] = self.worst[op].max(after - before);
                self.violations.push(fail(Some(after), "GA increased".into()));
                return;
            }
            Err(e) => {
                self.violations.push(fail(None, e.to_string()));
                return;
            }
        };
        let after = ga_index(&h).expect("edges survive");
        self.worst[op] = self.worst[op].max(after - before);
        if after > before + crate::transform::MONOTONE_TOL {
            self.violations.push(fail(Some(after), "GA increased".into()));
        } else if h.order() != g.order() || !is_unicyclic(&h) {
            self.violations.push(fail(Some(after), "output is not unicyclic of the same order".into()));
        } else if expect_family && identify_family(&h).is_none() {
            self.violations.push(fail(Some(after), "output is not an extremal family member".into()));
        }
    }
}

/// Applies every operator with every argument choice that meets its
/// preconditions, over all unicyclic graphs of order `n`, and checks that
/// GA never increases and outputs stay unicyclic of order `n`.
pub fn verify_monotonicity(n: usize) -> Result<MonotonicityReport, EnumerationError> {
    check_order(n)?;
    let graphs: Vec<Graph> = keyed_unicyclic(n).into_values().collect();
    let tally = graphs
        .par_iter()
        .map(sweep_graph)
        .reduce(Tally::new, Tally::merge);
    let operators = OPERATORS
        .iter()
        .enumerate()
        .map(|(i, name)| OperatorStats {
            operator: name.to_string(),
            applications: tally.applications[i],
            violations: tally.violations.iter().filter(|v| v.operator == *name).count(),
            worst_slack: if tally.applications[i] == 0 { 0.0 } else { tally.worst[i] },
        })
        .collect();
    Ok(MonotonicityReport {
        n,
        graphs: graphs.len(),
        operators,
        violations: tally.violations,
    })
}

fn sweep_graph(g: &Graph) -> Tally {
    let mut t = Tally::new();
    let cycle = find_cycle(g).expect("enumerated graphs are unicyclic");
    let before = ga_index(g).expect("edges");
    let cv = cycle.vertices();
    let class = |v| classify_in(g, &cycle, v).expect("cycle vertex");
    let is_star = |v| pendant_tree_in(g, &cycle, v).expect("cycle vertex").is_star();
    let max_deg = cv.iter().map(|&w| g.degree(w)).max().unwrap_or(0);

    for &v in cv {
        if !class(v).local_max {
            continue;
        }
        t.record(0, format!("v={v}"), g, before, star_transform(g, v), false);
        if !is_star(v) {
            continue;
        }
        for &u in cv {
            if u != v && class(u).local_min {
                t.record(1, format!("u={u} v={v}"), g, before, relocate_min(g, u, v), false);
            }
            if u == v || cycle.are_adjacent(u, v) {
                continue;
            }
            let (a, b) = cycle.neighbors(v).expect("cycle vertex");
            for nb in [a, b] {
                let e = (v, nb);
                let arc = cycle.arc_containing(u, e, v).expect("cycle edge");
                let (du, dv) = (g.degree(u), g.degree(v));
                let ordered = arc[1..arc.len() - 1]
                    .iter()
                    .all(|&w| (du..=dv).contains(&g.degree(w)));
                if ordered {
                    let args = format!("u={u} e=({},{}) v={v}", e.0, e.1);
                    t.record(2, args, g, before, arc_transform(g, u, e, v), false);
                }
            }
        }
        if g.degree(v) != max_deg {
            continue;
        }
        let (a, b) = cycle.neighbors(v).expect("cycle vertex");
        let (da, db) = (g.degree(a), g.degree(b));
        if cycle.girth() >= 4 && da == 2 && db == 2 {
            let r = finish_two_neighbors_deg2(g, v);
            t.record(3, format!("v={v}"), g, before, r, true);
        }
        for (u, other_deg) in [(a, db), (b, da)] {
            if g.degree(u) != 2 || other_deg == 2 {
                continue;
            }
            let lone = cv.iter().all(|&w| w == u || !class(w).local_min);
            if lone {
                let r = finish_one_neighbor_deg2(g, v, u);
                t.record(4, format!("v={v} u={u}"), g, before, r, true);
            }
        }
    }
    t
}

impl MonotonicityReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n = {}: {} graphs, {} applications", self.n, self.graphs, self.total_applications()).unwrap();
        for o in &self.operators {
            writeln!(
                out,
                "  {:<27} {:>7} applications  {:>3} violations  worst slack {:+.3e}",
                o.operator, o.applications, o.violations, o.worst_slack
            )
            .unwrap();
        }
        out
    }
}
