//! The extremal unicyclic families and their closed-form GA values.
//!
//! * `C_n`: the cycle, the upper extremal graph (`GA = n`).
//! * `S_{n;3}`: a triangle with `n-3` pendants on one vertex, the lower
//!   extremal graph.
//! * `S_{p,q;4}`: a 4-cycle with `p` and `q` pendants on two opposite vertices.
//! * `S_{r,k;3}`: a triangle with `r` and `k` pendants on two of its vertices.
//!
//! The comparison functions `A, B` (for `S_{p,q;4}`) and `C, D` (for
//! `S_{r,k;3}`) split the GA gap to `S_{n;3}` into two parts:
//! `GA(S_{p,q;4}) - GA(S_{n;3}) = A + B - 1` and
//! `GA(S_{r,k;3}) - GA(S_{n;3}) = C + D - 1`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::index::{f_unchecked as f, g_unchecked as g};
use crate::structure::{find_cycle, pendant_tree_in};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs n >= 3, got n = {n}")]
    OrderTooSmall { family: &'static str, n: usize },
    #[error("{function} requires {requirement}, got ({a}, {b})")]
    ParameterOrder {
        function: &'static str,
        requirement: &'static str,
        a: usize,
        b: usize,
    },
}

/// Identifies one member of an extremal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Cycle { n: usize },
    Sn3 { n: usize },
    Spq4 { p: usize, q: usize },
    Srk3 { r: usize, k: usize },
}

impl FamilySpec {
    /// Puts the larger pendant count first (`p >= q`, `r >= k`).
    pub fn normalized(self) -> Self {
        match self {
            FamilySpec::Spq4 { p, q } => FamilySpec::Spq4 {
                p: p.max(q),
                q: p.min(q),
            },
            FamilySpec::Srk3 { r, k } => FamilySpec::Srk3 {
                r: r.max(k),
                k: r.min(k),
            },
            other => other,
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Cycle { n } | FamilySpec::Sn3 { n } => n,
            FamilySpec::Spq4 { p, q } => p + q + 4,
            FamilySpec::Srk3 { r, k } => r + k + 3,
        }
    }

    pub fn girth(&self) -> usize {
        match *self {
            FamilySpec::Cycle { n } => n,
            FamilySpec::Spq4 { .. } => 4,
            FamilySpec::Sn3 { .. } | FamilySpec::Srk3 { .. } => 3,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Sn3 { .. } => "sn3",
            FamilySpec::Spq4 { .. } => "spq4",
            FamilySpec::Srk3 { .. } => "srk3",
        }
    }

    /// GA value from the family's closed form.
    pub fn closed_form_ga(&self) -> Result<f64, FamilyError> {
        match *self {
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return Err(FamilyError::OrderTooSmall { family: "cycle", n });
                }
                Ok(n as f64)
            }
            FamilySpec::Sn3 { n } => ga_sn3_closed(n),
            FamilySpec::Spq4 { p, q } => Ok(ga_spq4_closed(p, q)),
            FamilySpec::Srk3 { r, k } => Ok(ga_srk3_closed(r, k)),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Cycle { n } => write!(out, "C_{n}"),
            FamilySpec::Sn3 { n } => write!(out, "S_{{{n};3}}"),
            FamilySpec::Spq4 { p, q } => write!(out, "S_{{{p},{q};4}}"),
            FamilySpec::Srk3 { r, k } => write!(out, "S_{{{r},{k};3}}"),
        }
    }
}

/// Builds a family member.
///
/// Cycle vertices come first in cyclic order, then the pendants grouped by
/// attachment vertex. `S_{p,q;4}` hangs `p` pendants on vertex 0 and `q` on
/// vertex 2; `S_{r,k;3}` hangs `r` on vertex 0 and `k` on vertex 1;
/// `S_{n;3}` hangs all pendants on vertex 0.
pub fn make_family(spec: FamilySpec) -> Result<Graph, FamilyError> {
    let spec = spec.normalized();
    let (girth, pendants): (usize, Vec<(usize, usize)>) = match spec {
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(FamilyError::OrderTooSmall { family: "cycle", n });
            }
            (n, vec![])
        }
        FamilySpec::Sn3 { n } => {
            if n < 3 {
                return Err(FamilyError::OrderTooSmall { family: "sn3", n });
            }
            (3, vec![(0, n - 3)])
        }
        FamilySpec::Spq4 { p, q } => (4, vec![(0, p), (2, q)]),
        FamilySpec::Srk3 { r, k } => (3, vec![(0, r), (1, k)]),
    };
    let mut edges: Vec<(usize, usize)> = (0..girth).map(|i| (i, (i + 1) % girth)).collect();
    let mut next = girth;
    for (anchor, count) in pendants {
        for _ in 0..count {
            edges.push((anchor, next));
            next += 1;
        }
    }
    Ok(Graph::new(next, edges).expect("family construction is a simple graph"))
}

/// Recognizes a graph isomorphic to one of the families.
///
/// `C_3` and `C_4` are reported as cycles and `S_{r,0;3}` as `S_{n;3}`.
pub fn identify_family(g: &Graph) -> Option<FamilySpec> {
    let cycle = find_cycle(g).ok()?;
    let n = g.order();
    let mut loads = Vec::with_capacity(cycle.girth());
    for &v in cycle.vertices() {
        let tree = pendant_tree_in(g, &cycle, v).ok()?;
        if !tree.is_star() {
            return None;
        }
        loads.push(tree.edge_count());
    }
    let loaded: Vec<usize> = (0..loads.len()).filter(|&i| loads[i] > 0).collect();
    match (cycle.girth(), loaded.as_slice()) {
        (girth, []) if girth == n => Some(FamilySpec::Cycle { n }),
        (3, [_]) => Some(FamilySpec::Sn3 { n }),
        (3, [a, b]) => Some(FamilySpec::Srk3 {
            r: loads[*a],
            k: loads[*b],
        }
        .normalized()),
        (4, [a]) => Some(FamilySpec::Spq4 { p: loads[*a], q: 0 }),
        (4, [a, b]) if b - a == 2 => Some(
            FamilySpec::Spq4 {
                p: loads[*a],
                q: loads[*b],
            }
            .normalized(),
        ),
        _ => None,
    }
}

/// `GA(S_{n;3}) = 1 + (2n² + 4(√2 − 1)n − 6)·√(n−1) / (n(n+1))`.
///
/// ```
/// use unicyclic_ga::families::ga_sn3_closed;
///
/// assert!((ga_sn3_closed(3).unwrap() - 3.0).abs() < 1e-12);
/// assert!((ga_sn3_closed(5).unwrap() - 4.485618083).abs() < 1e-9);
/// ```
pub fn ga_sn3_closed(n: usize) -> Result<f64, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderTooSmall { family: "sn3", n });
    }
    let x = n as f64;
    let poly = 2.0 * x * x + 4.0 * (std::f64::consts::SQRT_2 - 1.0) * x - 6.0;
    Ok(1.0 + poly * (x - 1.0).sqrt() / (x * (x + 1.0)))
}

/// `GA(S_{p,q;4}) = p·f(p+2) + 2g(p+2) + 2g(q+2) + q·f(q+2)`.
pub fn ga_spq4_closed(p: usize, q: usize) -> f64 {
    let (p, q) = (p as f64, q as f64);
    p * f(p + 2.0) + 2.0 * g(p + 2.0) + 2.0 * g(q + 2.0) + q * f(q + 2.0)
}

/// `GA(S_{r,k;3}) = r·f(r+2) + g(r+2) + g(k+2) + k·f(k+2) + 2√(r+2)√(k+2)/(r+k+4)`.
pub fn ga_srk3_closed(r: usize, k: usize) -> f64 {
    let (r, k) = (r as f64, k as f64);
    r * f(r + 2.0)
        + g(r + 2.0)
        + g(k + 2.0)
        + k * f(k + 2.0)
        + 2.0 * (r + 2.0).sqrt() * (k + 2.0).sqrt() / (r + k + 4.0)
}

pub(crate) fn a_real(p: f64, q: f64) -> f64 {
    let top = f(p + q + 3.0);
    p * (f(p + 2.0) - top) + q * (f(q + 2.0) - top)
}

pub(crate) fn b_real(p: f64, q: f64) -> f64 {
    let m = p + q + 3.0;
    2.0 * g(p + 2.0) + 2.0 * g(q + 2.0) - 2.0 * g(m) - f(m)
}

pub(crate) fn c_real(r: f64, k: f64) -> f64 {
    let top = f(r + k + 2.0);
    r * (f(r + 2.0) - top) + k * (f(k + 2.0) - top)
}

pub(crate) fn d_real(r: f64, k: f64) -> f64 {
    g(r + 2.0) + g(k + 2.0) - 2.0 * g(r + k + 2.0)
        + 2.0 * (r + 2.0).sqrt() * (k + 2.0).sqrt() / (r + k + 4.0)
}

/// `(A(p, q), B(p, q))` for `p >= q >= 0`.
pub fn compare_ab(p: usize, q: usize) -> Result<(f64, f64), FamilyError> {
    if p < q {
        return Err(FamilyError::ParameterOrder {
            function: "compare_ab",
            requirement: "p >= q >= 0",
            a: p,
            b: q,
        });
    }
    let (p, q) = (p as f64, q as f64);
    Ok((a_real(p, q), b_real(p, q)))
}

/// `(C(r, k), D(r, k))` for `r >= k >= 1`.
pub fn compare_cd(r: usize, k: usize) -> Result<(f64, f64), FamilyError> {
    if r < k || k < 1 {
        return Err(FamilyError::ParameterOrder {
            function: "compare_cd",
            requirement: "r >= k >= 1",
            a: r,
            b: k,
        });
    }
    let (r, k) = (r as f64, k as f64);
    Ok((c_real(r, k), d_real(r, k)))
}

/// `(GA(S_{n;3}), n)`: the sharp bounds on GA over unicyclic graphs of order `n`.
pub fn bound_interval(n: usize) -> Result<(f64, f64), FamilyError> {
    Ok((ga_sn3_closed(n)?, n as f64))
}

/// `∂A/∂p` in closed form.
pub fn a_partial_p(p: f64, q: f64) -> f64 {
    let s = p + q;
    (p * p + 9.0 * p + 12.0) / ((p + 3.0).powi(2) * (p + 2.0).sqrt())
        - (s * s + 12.0 * s + 24.0) / ((s + 4.0).powi(2) * (s + 3.0).sqrt())
}

/// `∂C/∂r` in closed form.
pub fn c_partial_r(r: f64, k: f64) -> f64 {
    let s = r + k;
    (r * r + 9.0 * r + 12.0) / ((r + 3.0).powi(2) * (r + 2.0).sqrt())
        - (s * s + 9.0 * s + 12.0) / ((s + 3.0).powi(2) * (s + 2.0).sqrt())
}

/// Coefficients (ascending degree) of
/// `(p²+9p+12)²(p+6)⁴(p+5) − ((p+2)²+12(p+2)+24)²(p+3)⁴(p+2)`, the
/// squared and cross-multiplied form of the lower bound on `∂A/∂p` at
/// `q = 2`. Every coefficient is positive, so the bound is positive for
/// all `p >= 0`.
pub const A_PARTIAL_NUMERATOR: [u64; 9] = [
    495072, 1135728, 1036800, 492168, 133366, 21007, 1837, 77, 1,
];

/// Evaluates [`A_PARTIAL_NUMERATOR`] at `p` (coefficients in ascending degree).
pub fn a_partial_numerator(p: f64) -> f64 {
    A_PARTIAL_NUMERATOR
        .iter()
        .rev()
        .fold(0.0, |acc, &c| acc * p + c as f64)
}

/// `2g(3) − f(5)`, the lower bound on `B(p, 1)`.
pub fn b_q1_lower_bound() -> f64 {
    2.0 * g(3.0) - f(5.0)
}

/// `2√6/5`, the lower bound on `D(r, 1)`.
pub fn d_k1_lower_bound() -> f64 {
    2.0 * 6f64.sqrt() / 5.0
}

/// `q(q+1)² / ((q+2)²·√(2q+3))`, a lower bound on `A(q, q)`.
pub fn a_diagonal_lower_bound(q: usize) -> f64 {
    let q = q as f64;
    q * (q + 1.0).powi(2) / ((q + 2.0).powi(2) * (2.0 * q + 3.0).sqrt())
}

/// `2k²(2k+1) / ((2k+3)²·√(2k+2))`, a lower bound on `C(k, k)`.
pub fn c_diagonal_lower_bound(k: usize) -> f64 {
    let k = k as f64;
    2.0 * k * k * (2.0 * k + 1.0) / ((2.0 * k + 3.0).powi(2) * (2.0 * k + 2.0).sqrt())
}
