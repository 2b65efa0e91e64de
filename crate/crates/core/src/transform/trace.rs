use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{FinishCase, MONOTONE_TOL};
use crate::families::{identify_family, FamilySpec};
use crate::graph::{Edge, Graph};
use crate::index::ga_index;
use crate::structure::is_unicyclic;

/// One operator application, with the arguments it was called with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "operator", rename_all = "snake_case")]
pub enum Step {
    StarTransform { v: usize },
    RelocateMin { u: usize, v: usize },
    ArcTransform { u: usize, e: Edge, v: usize },
    FinishTwoNeighborsDeg2 { v: usize },
    FinishOneNeighborDeg2 { v: usize, u: usize, case: FinishCase },
}

impl Step {
    pub fn operator(&self) -> &'static str {
        match self {
            Step::StarTransform { .. } => "star_transform",
            Step::RelocateMin { .. } => "relocate_min",
            Step::ArcTransform { .. } => "arc_transform",
            Step::FinishTwoNeighborsDeg2 { .. } => "finish_two_neighbors_deg2",
            Step::FinishOneNeighborDeg2 { .. } => "finish_one_neighbor_deg2",
        }
    }

    fn arguments(&self) -> String {
        match *self {
            Step::StarTransform { v } => format!("v={v}"),
            Step::RelocateMin { u, v } => format!("u={u} v={v}"),
            Step::ArcTransform { u, e, v } => format!("u={u} e=({},{}) v={v}", e.0, e.1),
            Step::FinishTwoNeighborsDeg2 { v } => format!("v={v}"),
            Step::FinishOneNeighborDeg2 { v, u, case } => {
                let case = match case {
                    FinishCase::Triangle => "triangle",
                    FinishCase::Square => "square",
                };
                format!("v={v} u={u} case={case}")
            }
        }
    }
}

// serialized GA values carry nine decimals
const ROUNDING_SLACK: f64 = 1e-9;

fn round9(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

fn ser_ga<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round9(*x))
}

fn de_ga<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    f64::deserialize(d)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    #[serde(flatten)]
    pub step: Step,
    #[serde(serialize_with = "ser_ga", deserialize_with = "de_ga")]
    pub ga_before: f64,
    #[serde(serialize_with = "ser_ga", deserialize_with = "de_ga")]
    pub ga_after: f64,
    /// The graph after this step.
    pub graph: Graph,
}

/// The full record of a reduction. GA values are written to JSON rounded
/// to nine decimals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformTrace {
    pub input: Graph,
    #[serde(serialize_with = "ser_ga", deserialize_with = "de_ga")]
    pub input_ga: f64,
    pub steps: Vec<TraceStep>,
    pub terminal: FamilySpec,
    #[serde(serialize_with = "ser_ga", deserialize_with = "de_ga")]
    pub terminal_ga: f64,
}

impl TransformTrace {
    /// The graph the reduction ended in.
    pub fn terminal_graph(&self) -> &Graph {
        self.steps.last().map_or(&self.input, |s| &s.graph)
    }

    /// Checks the invariants every trace must satisfy: each step is
    /// GA-non-increasing and consistent with the graphs it records, the
    /// order never changes, every intermediate graph is unicyclic, and the
    /// terminal graph is the recorded family member.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.input.order();
        let tol = 1e-6;
        let mut prev_ga = self.input_ga;
        if (ga_index(&self.input).map_err(|e| e.to_string())? - self.input_ga).abs() > tol {
            return Err("input GA does not match the input graph".into());
        }
        for (i, s) in self.steps.iter().enumerate() {
            let idx = i + 1;
            if s.graph.order() != n || !is_unicyclic(&s.graph) {
                return Err(format!("step {idx}: graph is not unicyclic of order {n}"));
            }
            if (s.ga_before - prev_ga).abs() > tol {
                return Err(format!("step {idx}: GA before does not chain"));
            }
            let actual = ga_index(&s.graph).map_err(|e| e.to_string())?;
            if (actual - s.ga_after).abs() > tol {
                return Err(format!("step {idx}: recorded GA {} but graph has {actual}", s.ga_after));
            }
            if s.ga_after > s.ga_before + ROUNDING_SLACK + MONOTONE_TOL {
                return Err(format!(
                    "step {idx}: {} increased GA from {} to {}",
                    s.step.operator(),
                    s.ga_before,
                    s.ga_after
                ));
            }
            prev_ga = s.ga_after;
        }
        if (prev_ga - self.terminal_ga).abs() > tol {
            return Err("terminal GA does not match the last step".into());
        }
        if identify_family(self.terminal_graph()) != Some(self.terminal) {
            return Err(format!("terminal graph is not {}", self.terminal));
        }
        Ok(())
    }

    /// One line per step; with `verbose`, each line is followed by the edge list.
    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "input: n={} m={} GA {:.9}",
            self.input.order(),
            self.input.size(),
            self.input_ga
        )
        .unwrap();
        if verbose {
            writeln!(out, "  edges: {}", edge_list(&self.input)).unwrap();
        }
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(
                out,
                "step {}: {} {} GA {:.9} -> {:.9}",
                i + 1,
                s.step.operator(),
                s.step.arguments(),
                s.ga_before,
                s.ga_after
            )
            .unwrap();
            if verbose {
                writeln!(out, "  edges: {}", edge_list(&s.graph)).unwrap();
            }
        }
        writeln!(out, "terminal: {} GA {:.9}", self.terminal, self.terminal_ga).unwrap();
        out
    }
}

fn edge_list(g: &Graph) -> String {
    g.edges()
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}
