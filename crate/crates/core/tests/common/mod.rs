#![allow(dead_code)]

use proptest::prelude::*;
use unicyclic_ga::Graph;

/// A random unicyclic graph: a cycle of length `girth`, then each further
/// vertex hung from a uniformly chosen earlier one, then relabeled by `perm`.
pub fn build_unicyclic(girth: usize, parents: &[usize], perm: &[usize]) -> Graph {
    let n = girth + parents.len();
    let mut edges: Vec<(usize, usize)> = (0..girth).map(|i| (i, (i + 1) % girth)).collect();
    for (i, &p) in parents.iter().enumerate() {
        let v = girth + i;
        edges.push((p % v, v));
    }
    let g = Graph::new(n, edges).unwrap();
    g.relabel(perm)
}

prop_compose! {
    pub fn unicyclic(max_n: usize)(n in 3..=max_n)(
        girth in 3..=n,
        parents in proptest::collection::vec(any::<usize>(), n),
        perm in Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
    ) -> Graph {
        build_unicyclic(girth, &parents[..perm.len() - girth], &perm)
    }
}

pub fn ga_by_summation(g: &Graph) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.degree(u) as f64, g.degree(v) as f64);
            2.0 * (a * b).sqrt() / (a + b)
        })
        .sum()
}
