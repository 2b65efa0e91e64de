//! Unicyclic structure: the cycle, pendant trees and local extrema on the cycle.

use crate::graph::{normalize, Edge, Graph, GraphError};

/// True iff `g` is connected with exactly one cycle, i.e. connected and `|E| = |V|`.
pub fn is_unicyclic(g: &Graph) -> bool {
    g.size() == g.order() && g.is_connected()
}

/// The unique cycle of a unicyclic graph.
///
/// Vertices are listed starting at the smallest cycle vertex id and
/// proceeding toward its smaller-id cycle neighbor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    vertices: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl CycleStructure {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn girth(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.position(v).is_some()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.position.get(v).copied().flatten()
    }

    /// The two cycle neighbors of `v` as (predecessor, successor) in cycle order.
    pub fn neighbors(&self, v: usize) -> Option<(usize, usize)> {
        let i = self.position(v)?;
        let g = self.girth();
        Some((self.vertices[(i + g - 1) % g], self.vertices[(i + 1) % g]))
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        matches!(self.neighbors(u), Some((a, b)) if a == v || b == v)
    }

    /// Cycle edges, normalized.
    pub fn edges(&self) -> Vec<Edge> {
        let g = self.girth();
        (0..g)
            .map(|i| normalize((self.vertices[i], self.vertices[(i + 1) % g])))
            .collect()
    }

    pub fn is_cycle_edge(&self, e: Edge) -> bool {
        match (self.position(e.0), self.position(e.1)) {
            (Some(i), Some(j)) => {
                let g = self.girth();
                (i + 1) % g == j || (j + 1) % g == i
            }
            _ => false,
        }
    }

    /// The cycle walked from `start` with `next` as the second vertex.
    ///
    /// Returns `None` if `next` is not a cycle neighbor of `start`.
    pub fn walk_from(&self, start: usize, next: usize) -> Option<Vec<usize>> {
        let i = self.position(start)?;
        let g = self.girth();
        let (pred, succ) = self.neighbors(start)?;
        if succ == next {
            Some((0..g).map(|s| self.vertices[(i + s) % g]).collect())
        } else if pred == next {
            Some((0..g).map(|s| self.vertices[(i + g - s) % g]).collect())
        } else {
            None
        }
    }

    /// The `(u, v)`-arc that contains cycle edge `e`, listed from `u` to `v`.
    ///
    /// Returns `None` if `u`, `v` are not distinct cycle vertices or `e` is
    /// not a cycle edge.
    pub fn arc_containing(&self, u: usize, e: Edge, v: usize) -> Option<Vec<usize>> {
        if u == v || !self.contains(u) || !self.contains(v) || !self.is_cycle_edge(e) {
            return None;
        }
        let (pred, succ) = self.neighbors(u)?;
        for first in [succ, pred] {
            let walk = self.walk_from(u, first)?;
            let end = walk.iter().position(|&x| x == v)?;
            let arc = &walk[..=end];
            let hit = arc
                .windows(2)
                .any(|w| normalize((w[0], w[1])) == normalize(e));
            if hit {
                return Some(arc.to_vec());
            }
        }
        None
    }
}

/// Finds the unique cycle by repeatedly stripping leaves.
pub fn find_cycle(g: &Graph) -> Result<CycleStructure, GraphError> {
    if !is_unicyclic(g) {
        return Err(GraphError::NotUnicyclic {
            n: g.order(),
            m: g.size(),
            connected: g.is_connected(),
        });
    }
    let n = g.order();
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(a) = leaves.pop() {
        removed[a] = true;
        for &b in g.neighbors(a) {
            if !removed[b] {
                degree[b] -= 1;
                if degree[b] == 1 {
                    leaves.push(b);
                }
            }
        }
    }
    let start = (0..n).find(|&v| !removed[v]).expect("unicyclic graph has a cycle");
    let on_cycle = |v: usize| !removed[v];
    let first = *g
        .neighbors(start)
        .iter()
        .filter(|&&w| on_cycle(w))
        .min()
        .expect("cycle vertex has two cycle neighbors");
    let mut vertices = vec![start];
    let (mut prev, mut cur) = (start, first);
    while cur != start {
        vertices.push(cur);
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| on_cycle(w) && w != prev)
            .expect("cycle vertex has two cycle neighbors");
        prev = cur;
        cur = next;
    }
    let mut position = vec![None; n];
    for (i, &v) in vertices.iter().enumerate() {
        position[v] = Some(i);
    }
    Ok(CycleStructure { vertices, position })
}

/// The pendant tree `T_root` hanging from a cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantTree {
    root: usize,
    vertices: Vec<usize>,
    edges: Vec<Edge>,
}

impl PendantTree {
    pub fn root(&self) -> usize {
        self.root
    }

    /// Vertices of the tree in ascending order, including the root.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Tree edges as `(parent, child)` pairs oriented away from the root,
    /// in breadth-first order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True when every tree edge is incident to the root.
    pub fn is_star(&self) -> bool {
        self.edges.iter().all(|&(p, _)| p == self.root)
    }
}

/// Builds `T_v` for the cycle vertex `v`.
pub fn pendant_tree(g: &Graph, v: usize) -> Result<PendantTree, GraphError> {
    let cycle = find_cycle(g)?;
    pendant_tree_in(g, &cycle, v)
}

pub(crate) fn pendant_tree_in(
    g: &Graph,
    cycle: &CycleStructure,
    v: usize,
) -> Result<PendantTree, GraphError> {
    if !cycle.contains(v) {
        return Err(GraphError::NotCycleVertex { v });
    }
    let mut seen = vec![false; g.order()];
    seen[v] = true;
    let mut vertices = vec![v];
    let mut edges = Vec::new();
    let mut head = 0;
    while head < vertices.len() {
        let a = vertices[head];
        head += 1;
        for &b in g.neighbors(a) {
            if seen[b] || cycle.contains(b) {
                continue;
            }
            seen[b] = true;
            vertices.push(b);
            edges.push((a, b));
        }
    }
    vertices.sort_unstable();
    Ok(PendantTree {
        root: v,
        vertices,
        edges,
    })
}

/// Whether a cycle vertex is a local maximum and/or local minimum of the
/// degree along the cycle. Both can hold at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleVertexClass {
    pub local_max: bool,
    pub local_min: bool,
}

pub fn classify_cycle_vertex(g: &Graph, v: usize) -> Result<CycleVertexClass, GraphError> {
    let cycle = find_cycle(g)?;
    classify_in(g, &cycle, v)
}

pub(crate) fn classify_in(
    g: &Graph,
    cycle: &CycleStructure,
    v: usize,
) -> Result<CycleVertexClass, GraphError> {
    let (a, b) = cycle
        .neighbors(v)
        .ok_or(GraphError::NotCycleVertex { v })?;
    let d = g.degree(v);
    let (da, db) = (g.degree(a), g.degree(b));
    Ok(CycleVertexClass {
        local_max: d >= da.max(db),
        local_min: d <= da.min(db),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    // S_{n;3}: triangle 0,1,2 with n-3 pendants on 0.
    fn sn3(n: usize) -> Graph {
        Graph::new(n, [(0, 1), (1, 2), (0, 2)].into_iter().chain((3..n).map(|i| (0, i)))).unwrap()
    }

    #[test]
    fn unicyclic_recognition() {
        assert!(is_unicyclic(&Graph::cycle(5).unwrap()));
        assert!(!is_unicyclic(&Graph::path(4).unwrap()));
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(two_triangles.size(), two_triangles.order());
        assert!(!is_unicyclic(&two_triangles));
        assert!(matches!(
            find_cycle(&two_triangles),
            Err(GraphError::NotUnicyclic { connected: false, .. })
        ));
    }

    #[test]
    fn cycle_of_paw() {
        let c = find_cycle(&paw()).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2]);
        assert_eq!(c.girth(), 3);
        assert_eq!(find_cycle(&Graph::cycle(6).unwrap()).unwrap().girth(), 6);
    }

    #[test]
    fn cycle_order_convention() {
        // cycle 5-3-7-1 with tail 0-5; smallest cycle vertex is 1, whose
        // cycle neighbors are 5 and 7.
        let g = Graph::new(8, [(5, 3), (3, 7), (7, 1), (1, 5), (0, 5), (2, 0), (4, 2), (6, 4)])
            .unwrap();
        let c = find_cycle(&g).unwrap();
        assert_eq!(c.vertices(), &[1, 5, 3, 7]);
        assert_eq!(c.neighbors(1), Some((7, 5)));
    }

    #[test]
    fn pendant_trees() {
        let t = pendant_tree(&paw(), 0).unwrap();
        assert_eq!(t.edge_count(), 1);
        assert_eq!(t.vertices(), &[0, 3]);
        let c5 = Graph::cycle(5).unwrap();
        for v in 0..5 {
            let t = pendant_tree(&c5, v).unwrap();
            assert_eq!(t.edge_count(), 0);
            assert!(t.is_star());
        }
        let t = pendant_tree(&sn3(7), 0).unwrap();
        assert_eq!(t.edge_count(), 4);
        assert!(t.is_star());
        assert_eq!(
            pendant_tree(&paw(), 3),
            Err(GraphError::NotCycleVertex { v: 3 })
        );
    }

    #[test]
    fn deep_pendant_tree_is_not_star() {
        // triangle with path 0-3-4
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)]).unwrap();
        let t = pendant_tree(&g, 0).unwrap();
        assert_eq!(t.edges(), &[(0, 3), (3, 4)]);
        assert!(!t.is_star());
    }

    #[test]
    fn local_extrema() {
        let c = Graph::cycle(6).unwrap();
        for v in 0..6 {
            let k = classify_cycle_vertex(&c, v).unwrap();
            assert!(k.local_max && k.local_min);
        }
        let s = sn3(6);
        let center = classify_cycle_vertex(&s, 0).unwrap();
        assert!(center.local_max && !center.local_min);
        for v in [1, 2] {
            let k = classify_cycle_vertex(&s, v).unwrap();
            assert!(!k.local_max && k.local_min);
        }
        assert!(classify_cycle_vertex(&s, 4).is_err());
    }

    #[test]
    fn arcs() {
        let c6 = Graph::cycle(6).unwrap();
        let c = find_cycle(&c6).unwrap();
        assert_eq!(c.arc_containing(0, (0, 1), 3), Some(vec![0, 1, 2, 3]));
        assert_eq!(c.arc_containing(0, (4, 3), 3), Some(vec![0, 5, 4, 3]));
        assert_eq!(c.arc_containing(0, (0, 2), 3), None);
        assert_eq!(c.walk_from(2, 1), Some(vec![2, 1, 0, 5, 4, 3]));
    }
}
