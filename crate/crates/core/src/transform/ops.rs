use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{TransformError, MONOTONE_TOL};
use crate::graph::{normalize, Edge, Graph};
use crate::index::ga_index;
use crate::structure::{classify_in, find_cycle, pendant_tree_in, CycleStructure};

/// Which branch the one-neighbor finishing move took.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FinishCase {
    /// No child of the far triangle vertex outweighs it; ends in `S_{r,k;3}`.
    Triangle,
    /// A heavier child takes over the far vertex's cycle edge; ends in `S_{p,q;4}`.
    Square,
}

/// Removes `remove`, then adds `add`.
fn rewire(g: &Graph, remove: &[Edge], add: &[Edge]) -> Graph {
    let mut edges: BTreeSet<Edge> = g.edges().iter().copied().collect();
    for &e in remove {
        let present = edges.remove(&normalize(e));
        debug_assert!(present, "removing missing edge {e:?}");
    }
    for &e in add {
        let fresh = edges.insert(normalize(e));
        debug_assert!(fresh, "adding existing edge {e:?}");
    }
    Graph::new(g.order(), edges).expect("rewiring keeps the graph simple")
}

/// Turns every `(parent, child)` edge into the pendant edge `(center, child)`.
fn relocate(g: &Graph, moved: &[Edge], center: usize) -> Graph {
    let moved: Vec<Edge> = moved.iter().copied().filter(|&(p, _)| p != center).collect();
    let added: Vec<Edge> = moved.iter().map(|&(_, c)| (center, c)).collect();
    rewire(g, &moved, &added)
}

fn checked(operator: &'static str, before: &Graph, after: Graph) -> Result<Graph, TransformError> {
    if cfg!(debug_assertions) {
        let (b, a) = (ga_index(before), ga_index(&after));
        if let (Ok(b), Ok(a)) = (b, a) {
            if a > b + MONOTONE_TOL {
                return Err(TransformError::MonotonicityViolation {
                    operator,
                    before: b,
                    after: a,
                });
            }
        }
    }
    Ok(after)
}

fn require_cycle_vertex(cycle: &CycleStructure, v: usize) -> Result<(), TransformError> {
    if cycle.contains(v) {
        Ok(())
    } else {
        Err(crate::graph::GraphError::NotCycleVertex { v }.into())
    }
}

fn require_local_max(g: &Graph, cycle: &CycleStructure, v: usize) -> Result<(), TransformError> {
    if classify_in(g, cycle, v)?.local_max {
        Ok(())
    } else {
        Err(TransformError::NotLocalMax {
            v,
            degree: g.degree(v),
        })
    }
}

fn require_star(g: &Graph, cycle: &CycleStructure, v: usize) -> Result<(), TransformError> {
    if pendant_tree_in(g, cycle, v)?.is_star() {
        Ok(())
    } else {
        Err(TransformError::NotStar { v })
    }
}

fn require_max_degree(g: &Graph, cycle: &CycleStructure, v: usize) -> Result<(), TransformError> {
    let max = cycle.vertices().iter().map(|&w| g.degree(w)).max().unwrap_or(0);
    if g.degree(v) == max {
        Ok(())
    } else {
        Err(TransformError::NotMaxDegree {
            v,
            degree: g.degree(v),
            max,
        })
    }
}

/// Rearranges the pendant tree `T_v` into a star centered at `v`.
///
/// `v` must be a local maximum on the cycle (a maximal-degree cycle vertex
/// always is). The number of edges in `T_v` is unchanged.
///
/// ```
/// use unicyclic_ga::{ga_index, transform::star_transform, Graph};
///
/// // triangle with the path 0-3-4 hanging from vertex 0
/// let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
/// let h = star_transform(&g, 0).unwrap();
/// assert!(h.has_edge(0, 4) && !h.has_edge(3, 4));
/// assert!(ga_index(&h).unwrap() < ga_index(&g).unwrap());
/// ```
pub fn star_transform(g: &Graph, v: usize) -> Result<Graph, TransformError> {
    let cycle = find_cycle(g)?;
    require_cycle_vertex(&cycle, v)?;
    require_local_max(g, &cycle, v)?;
    checked("star_transform", g, star_unchecked(g, &cycle, v))
}

fn star_unchecked(g: &Graph, cycle: &CycleStructure, v: usize) -> Graph {
    let tree = pendant_tree_in(g, cycle, v).expect("v is a cycle vertex");
    relocate(g, tree.edges(), v)
}

/// Moves every edge of `T_u` to a pendant edge at `v`, leaving `u` with degree 2.
///
/// Requires `v` to be a local maximum whose pendant tree is a star, and `u`
/// to be a different cycle vertex that is a local minimum.
pub fn relocate_min(g: &Graph, u: usize, v: usize) -> Result<Graph, TransformError> {
    let cycle = find_cycle(g)?;
    require_cycle_vertex(&cycle, u)?;
    require_cycle_vertex(&cycle, v)?;
    if u == v {
        return Err(TransformError::SameVertex { v });
    }
    require_local_max(g, &cycle, v)?;
    require_star(g, &cycle, v)?;
    if !classify_in(g, &cycle, u)?.local_min {
        return Err(TransformError::NotLocalMin {
            u,
            degree: g.degree(u),
        });
    }
    let tree = pendant_tree_in(g, &cycle, u)?;
    checked("relocate_min", g, relocate(g, tree.edges(), v))
}

/// The arc transformation that shortens the cycle toward `v`.
///
/// Let `u = a0, a1, ..., ak = v` be the `(u, v)`-arc containing the cycle
/// edge `e`. The pendant trees of the interior vertices `a1..a(k-1)` and
/// the arc edges other than `u·a1` become pendant edges at `v`, and `v`
/// takes the place of `a1` next to `u`. The id `a1` survives as one of the
/// new pendants, so the order is preserved and the girth drops by `k - 1`.
///
/// Preconditions: `u` and `v` are non-adjacent cycle vertices, `v` is a
/// local maximum with a star pendant tree, and every interior arc vertex
/// `w` satisfies `d(u) <= d(w) <= d(v)`.
pub fn arc_transform(g: &Graph, u: usize, e: Edge, v: usize) -> Result<Graph, TransformError> {
    let cycle = find_cycle(g)?;
    require_cycle_vertex(&cycle, u)?;
    require_cycle_vertex(&cycle, v)?;
    if u == v {
        return Err(TransformError::SameVertex { v });
    }
    if cycle.are_adjacent(u, v) {
        return Err(TransformError::AdjacentVertices { u, v });
    }
    if !cycle.is_cycle_edge(e) {
        return Err(TransformError::NotCycleEdge(e.0, e.1));
    }
    let arc = cycle
        .arc_containing(u, e, v)
        .expect("a cycle edge lies on one of the two arcs");
    require_local_max(g, &cycle, v)?;
    require_star(g, &cycle, v)?;
    let (du, dv) = (g.degree(u), g.degree(v));
    for &w in &arc[1..arc.len() - 1] {
        let dw = g.degree(w);
        if dw < du || dw > dv {
            return Err(TransformError::DegreeOrder {
                u,
                w,
                v,
                du,
                dw,
                dv,
            });
        }
    }
    checked("arc_transform", g, arc_unchecked(g, &cycle, &arc))
}

/// Applies the arc transformation along `arc = [u, a1, ..., v]` without
/// checking degree preconditions.
fn arc_unchecked(g: &Graph, cycle: &CycleStructure, arc: &[usize]) -> Graph {
    let (u, v) = (arc[0], arc[arc.len() - 1]);
    let interior = &arc[1..arc.len() - 1];
    let mut remove: Vec<Edge> = arc.windows(2).map(|w| (w[0], w[1])).collect();
    let mut add: Vec<Edge> = vec![(u, v)];
    for &w in interior {
        add.push((v, w));
        for &(p, c) in pendant_tree_in(g, cycle, w).expect("arc vertex").edges() {
            remove.push((p, c));
            add.push((v, c));
        }
    }
    rewire(g, &remove, &add)
}

fn max_degree_vertex(g: &Graph, candidates: &[usize]) -> usize {
    *candidates
        .iter()
        .min_by_key(|&&w| (std::cmp::Reverse(g.degree(w)), w))
        .expect("non-empty candidate list")
}

/// Finishing move when both cycle neighbors of the maximal vertex `v` have
/// degree 2 and the girth is at least 4. Ends in `S_{p,q;4}`.
///
/// With `u` the smaller-id neighbor of `v` and `ū` the other, the remaining
/// cycle vertices `v1..vt` run from `u` to `ū`. The heaviest of them, `v̄`
/// (smallest id on ties), is made a star and then pulled next to both `u`
/// and `ū` by one or two arc transformations.
pub fn finish_two_neighbors_deg2(g: &Graph, v: usize) -> Result<Graph, TransformError> {
    let cycle = find_cycle(g)?;
    require_cycle_vertex(&cycle, v)?;
    if cycle.girth() == 3 {
        return Err(TransformError::GirthThree);
    }
    require_max_degree(g, &cycle, v)?;
    require_star(g, &cycle, v)?;
    let (a, b) = cycle.neighbors(v).expect("cycle vertex");
    for w in [a, b] {
        if g.degree(w) != 2 {
            return Err(TransformError::NeighborDegree {
                v,
                w,
                degree: g.degree(w),
                expected: "2",
            });
        }
    }
    let (u, u_bar) = (a.min(b), a.max(b));
    let walk = cycle.walk_from(v, u).expect("u neighbors v");
    let rest = &walk[2..walk.len() - 1];
    let v_bar = max_degree_vertex(g, rest);
    let i = rest.iter().position(|&w| w == v_bar).expect("chosen from rest");

    let mut h = star_unchecked(g, &cycle, v_bar);
    if rest.len() > 1 {
        if i > 0 {
            let arc: Vec<usize> = std::iter::once(u).chain(rest[..=i].iter().copied()).collect();
            let c = find_cycle(&h)?;
            h = arc_unchecked(&h, &c, &arc);
        }
        if i + 1 < rest.len() {
            let arc: Vec<usize> = std::iter::once(u_bar)
                .chain(rest[i..].iter().rev().copied())
                .collect();
            let c = find_cycle(&h)?;
            h = arc_unchecked(&h, &c, &arc);
        }
    }
    let c = find_cycle(&h)?;
    let h = star_unchecked(&h, &c, v_bar);
    checked("finish_two_neighbors_deg2", g, h)
}

/// Finishing move when the maximal vertex `v` has exactly one degree-2
/// cycle neighbor `u` and no other local minimum exists.
///
/// With the cycle read as `v, u, v1, ..., vt`, an arc transformation along
/// `u, v1, ..., vt` brings the girth to 3. Then either every child of `vt`
/// has degree at most `d(vt)`, and the deeper edges of `T_vt` move to `v`
/// (ending in `S_{r,k;3}`), or the heaviest child `w` with `d(w) > d(vt)`
/// replaces `vt` as `u`'s neighbor, `T_w` becomes a star at `w` and the rest
/// of `T_vt` moves to `v` (ending in `S_{p,q;4}`).
pub fn finish_one_neighbor_deg2(g: &Graph, v: usize, u: usize) -> Result<Graph, TransformError> {
    finish_one_with_case(g, v, u).map(|(h, _)| h)
}

pub(crate) fn finish_one_with_case(
    g: &Graph,
    v: usize,
    u: usize,
) -> Result<(Graph, FinishCase), TransformError> {
    let cycle = find_cycle(g)?;
    require_cycle_vertex(&cycle, v)?;
    require_cycle_vertex(&cycle, u)?;
    require_max_degree(g, &cycle, v)?;
    require_star(g, &cycle, v)?;
    let (a, b) = cycle.neighbors(v).expect("cycle vertex");
    let other = if u == a && u != b {
        b
    } else if u == b {
        a
    } else {
        return Err(TransformError::NotCycleNeighbor { v, u });
    };
    if g.degree(u) != 2 {
        return Err(TransformError::NeighborDegree {
            v,
            w: u,
            degree: g.degree(u),
            expected: "2",
        });
    }
    if g.degree(other) == 2 {
        return Err(TransformError::NeighborDegree {
            v,
            w: other,
            degree: 2,
            expected: "more than 2",
        });
    }
    for &w in cycle.vertices() {
        if w != u && classify_in(g, &cycle, w)?.local_min {
            return Err(TransformError::ExtraLocalMin { w });
        }
    }

    let walk = cycle.walk_from(v, u).expect("u neighbors v");
    let far = *walk.last().expect("girth at least 3");
    let mut h = g.clone();
    if walk.len() > 3 {
        h = arc_unchecked(g, &cycle, &walk[1..]);
    }
    let c = find_cycle(&h)?;
    let tree = pendant_tree_in(&h, &c, far)?;
    let heavy: Vec<usize> = tree
        .edges()
        .iter()
        .filter(|&&(p, ch)| p == far && h.degree(ch) > h.degree(far))
        .map(|&(_, ch)| ch)
        .collect();

    if heavy.is_empty() {
        let deep: Vec<Edge> = tree.edges().iter().copied().filter(|&(p, _)| p != far).collect();
        let out = relocate(&h, &deep, v);
        return checked("finish_one_neighbor_deg2", g, out).map(|out| (out, FinishCase::Triangle));
    }

    let w = max_degree_vertex(&h, &heavy);
    let mut in_w = vec![false; h.order()];
    in_w[w] = true;
    let mut sub_w = Vec::new();
    let mut rest = Vec::new();
    // tree edges are in breadth-first order, so parents are marked first
    for &(p, ch) in tree.edges() {
        if p == far && ch == w {
            continue;
        }
        if in_w[p] {
            in_w[ch] = true;
            sub_w.push((p, ch));
        } else {
            rest.push((p, ch));
        }
    }
    let mut remove = vec![(far, u)];
    let mut add = vec![(w, u)];
    for &(p, ch) in &rest {
        remove.push((p, ch));
        add.push((v, ch));
    }
    for &(p, ch) in sub_w.iter().filter(|&&(p, _)| p != w) {
        remove.push((p, ch));
        add.push((w, ch));
    }
    let out = rewire(&h, &remove, &add);
    checked("finish_one_neighbor_deg2", g, out).map(|out| (out, FinishCase::Square))
}
