//! GA-decreasing rewrites of unicyclic graphs and the reduction pipeline.
//!
//! Every operator takes a graph and returns a new one; vertex ids are
//! stable, so a result can be compared with its input edge by edge. Each
//! operator checks its own preconditions and, in debug builds, also checks
//! that the GA index did not increase.

mod ops;
mod pipeline;
mod trace;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::GraphError;

pub use ops::{
    arc_transform, finish_one_neighbor_deg2, finish_two_neighbors_deg2, relocate_min,
    star_transform, FinishCase,
};
pub use pipeline::reduction_pipeline;
pub use trace::{Step, TraceStep, TransformTrace};

/// Slack allowed when comparing GA before and after a rewrite.
pub const MONOTONE_TOL: f64 = 1e-9;

/// Unicyclic graphs with fewer than five vertices, settled by inspection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SmallOrderCase {
    /// The only unicyclic graph on three vertices.
    C3,
    /// The upper extremal graph on four vertices.
    C4,
    /// The triangle with one pendant, the lower extremal graph on four vertices.
    Paw,
}

impl SmallOrderCase {
    pub fn description(self) -> &'static str {
        match self {
            SmallOrderCase::C3 => "C_3, the unique unicyclic graph on 3 vertices (GA = 3)",
            SmallOrderCase::C4 => "C_4, the maximum among unicyclic graphs on 4 vertices (GA = 4)",
            SmallOrderCase::Paw => {
                "the paw S_{4;3}, the minimum among unicyclic graphs on 4 vertices"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {v} (degree {degree}) is not a local maximum on the cycle")]
    NotLocalMax { v: usize, degree: usize },
    #[error("vertex {v} has degree {degree}, but the maximal cycle degree is {max}")]
    NotMaxDegree { v: usize, degree: usize, max: usize },
    #[error("the pendant tree at {v} is not a star centered at {v}")]
    NotStar { v: usize },
    #[error("vertex {u} (degree {degree}) is not a local minimum on the cycle")]
    NotLocalMin { u: usize, degree: usize },
    #[error("the two vertices must differ, got {v} twice")]
    SameVertex { v: usize },
    #[error("cycle vertices {u} and {v} are adjacent")]
    AdjacentVertices { u: usize, v: usize },
    #[error("({0}, {1}) is not a cycle edge")]
    NotCycleEdge(usize, usize),
    #[error("arc vertex {w} has degree {dw}, outside [d({u}) = {du}, d({v}) = {dv}]")]
    DegreeOrder {
        u: usize,
        w: usize,
        v: usize,
        du: usize,
        dw: usize,
        dv: usize,
    },
    #[error("girth is 3; with a star at the maximal vertex the graph is already S_{{n;3}}")]
    GirthThree,
    #[error("{u} is not a cycle neighbor of {v}")]
    NotCycleNeighbor { v: usize, u: usize },
    #[error("cycle neighbor {w} of {v} has degree {degree}; expected {expected}")]
    NeighborDegree {
        v: usize,
        w: usize,
        degree: usize,
        expected: &'static str,
    },
    #[error("cycle vertex {w} is a second local minimum")]
    ExtraLocalMin { w: usize },
    #[error("order below 5 is settled by inspection: {}", .0.description())]
    SmallOrder(SmallOrderCase),
    #[error("{operator} increased GA from {before} to {after}")]
    MonotonicityViolation {
        operator: &'static str,
        before: f64,
        after: f64,
    },
    #[error("reduction ended in a graph outside the extremal families")]
    UnrecognizedTerminal,
}
