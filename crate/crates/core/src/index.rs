//! Geometric-arithmetic and arithmetic-geometric indices.
//!
//! The contribution of an edge `uv` with `d(u) <= d(v)` is
//! `2·sqrt(d(u)·d(v)) / (d(u) + d(v))`, which equals `f(d(v)/d(u))` for
//! `f(x) = 2·sqrt(x) / (1 + x)`. Since `f` is decreasing on `[1, ∞)`, a
//! larger degree ratio always means a smaller contribution.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{normalize, Edge, Graph};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("the graph has no edges")]
    EmptyEdgeSet,
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotFound(usize, usize),
    #[error("{function}({x}) is outside the domain x >= {min}")]
    Domain {
        function: &'static str,
        x: f64,
        min: f64,
    },
}

/// One edge's share of the GA index.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeContribution {
    pub edge: Edge,
    /// Smaller endpoint degree.
    pub du: usize,
    /// Larger endpoint degree.
    pub dv: usize,
    /// Degree ratio `dv / du`, always at least 1.
    pub rd: f64,
    pub ga: f64,
}

impl EdgeContribution {
    fn from_degrees(edge: Edge, a: usize, b: usize) -> Self {
        let (du, dv) = if a <= b { (a, b) } else { (b, a) };
        EdgeContribution {
            edge,
            du,
            dv,
            rd: dv as f64 / du as f64,
            ga: ga_term(du, dv),
        }
    }
}

#[inline]
fn ga_term(a: usize, b: usize) -> f64 {
    let (a, b) = (a as f64, b as f64);
    2.0 * (a * b).sqrt() / (a + b)
}

#[inline]
fn ag_term(a: usize, b: usize) -> f64 {
    let (a, b) = (a as f64, b as f64);
    (a + b) / (2.0 * (a * b).sqrt())
}

pub fn edge_contribution(g: &Graph, e: Edge) -> Result<EdgeContribution, IndexError> {
    let (u, v) = normalize(e);
    if !g.has_edge(u, v) {
        return Err(IndexError::EdgeNotFound(e.0, e.1));
    }
    Ok(EdgeContribution::from_degrees((u, v), g.degree(u), g.degree(v)))
}

/// All edge contributions in edge order.
pub fn edge_contributions(g: &Graph) -> Vec<EdgeContribution> {
    g.edges()
        .iter()
        .map(|&(u, v)| EdgeContribution::from_degrees((u, v), g.degree(u), g.degree(v)))
        .collect()
}

/// The geometric-arithmetic index.
///
/// ```
/// use unicyclic_ga::{ga_index, Graph};
///
/// let c7 = Graph::cycle(7).unwrap();
/// assert!((ga_index(&c7).unwrap() - 7.0).abs() < 1e-12);
/// ```
pub fn ga_index(g: &Graph) -> Result<f64, IndexError> {
    if g.size() == 0 {
        return Err(IndexError::EmptyEdgeSet);
    }
    Ok(g
        .edges()
        .iter()
        .map(|&(u, v)| ga_term(g.degree(u), g.degree(v)))
        .sum())
}

/// The arithmetic-geometric index.
pub fn ag_index(g: &Graph) -> Result<f64, IndexError> {
    if g.size() == 0 {
        return Err(IndexError::EmptyEdgeSet);
    }
    Ok(g
        .edges()
        .iter()
        .map(|&(u, v)| ag_term(g.degree(u), g.degree(v)))
        .sum())
}

/// `f(x) = 2·sqrt(x)/(x+1)` for `x >= 1`.
pub fn f_eval(x: f64) -> Result<f64, IndexError> {
    if !x.is_finite() || x < 1.0 {
        return Err(IndexError::Domain {
            function: "f",
            x,
            min: 1.0,
        });
    }
    Ok(f_unchecked(x))
}

/// `g(x) = 2·sqrt(2)·sqrt(x)/(x+2)` for `x >= 2`.
pub fn g_eval(x: f64) -> Result<f64, IndexError> {
    if !x.is_finite() || x < 2.0 {
        return Err(IndexError::Domain {
            function: "g",
            x,
            min: 2.0,
        });
    }
    Ok(g_unchecked(x))
}

#[inline]
pub(crate) fn f_unchecked(x: f64) -> f64 {
    2.0 * x.sqrt() / (x + 1.0)
}

#[inline]
pub(crate) fn g_unchecked(x: f64) -> f64 {
    2.0 * std::f64::consts::SQRT_2 * x.sqrt() / (x + 2.0)
}
