//! Exhaustive generation of unicyclic graphs and brute-force checks over them.
//!
//! The main generator picks a girth `g`, distributes the remaining `n - g`
//! vertices over the cycle as rooted trees, and keeps one graph per
//! canonical key. [`enumerate_by_augmentation`] builds the same set by
//! adding leaves to the graphs of order `n - 1`, and serves as a cross-check.

mod trees;
mod verify;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canon::{canonical_form, CanonicalKey};
use crate::graph::Graph;

pub use trees::{rooted_trees_up_to, RootedTree};
pub use verify::{
    verify_bounds, verify_monotonicity, BoundReport, BoundViolation, MonotonicityReport,
    OperatorStats, OperatorViolation,
};

/// Smallest order that has a unicyclic graph.
pub const MIN_ORDER: usize = 3;
/// Largest order the enumerators accept.
pub const MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {n} is outside the supported range {MIN_ORDER}..={MAX_ORDER}")]
    OrderOutOfRange { n: usize },
}

fn check_order(n: usize) -> Result<(), EnumerationError> {
    if (MIN_ORDER..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(EnumerationError::OrderOutOfRange { n })
    }
}

/// One representative of every isomorphism class of unicyclic graphs on
/// `n` vertices, sorted by canonical key.
///
/// ```
/// use unicyclic_ga::enumerate::enumerate_unicyclic;
///
/// let counts: Vec<usize> = (3..=7).map(|n| enumerate_unicyclic(n).unwrap().len()).collect();
/// assert_eq!(counts, [1, 2, 5, 13, 33]);
/// ```
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check_order(n)?;
    Ok(keyed_unicyclic(n).into_values().collect())
}

/// The same classes as [`enumerate_unicyclic`], keyed by canonical form.
pub fn keyed_unicyclic(n: usize) -> BTreeMap<CanonicalKey, Graph> {
    let trees = rooted_trees_up_to(n.saturating_sub(2).max(1));
    let mut out = BTreeMap::new();
    for girth in 3..=n {
        for comp in cycle_compositions(n - girth, girth) {
            let mut choice = vec![0usize; girth];
            loop {
                let g = assemble(&trees, &comp, &choice);
                out.entry(canonical_form(&g)).or_insert(g);
                if !advance(&mut choice, &comp, &trees) {
                    break;
                }
            }
        }
    }
    out
}

/// Odometer over the tree choices at each cycle vertex.
fn advance(choice: &mut [usize], comp: &[usize], trees: &[Vec<RootedTree>]) -> bool {
    for i in (0..choice.len()).rev() {
        choice[i] += 1;
        if choice[i] < trees[comp[i]].len() {
            return true;
        }
        choice[i] = 0;
    }
    false
}

/// Cycle vertices `0..g`, then each tree's non-root vertices in turn.
fn assemble(trees: &[Vec<RootedTree>], comp: &[usize], choice: &[usize]) -> Graph {
    let g = comp.len();
    let n = g + comp.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    let mut next = g;
    for (root, (&extra, &pick)) in comp.iter().zip(choice).enumerate() {
        let tree = &trees[extra][pick];
        let id = |t: usize| if t == 0 { root } else { next + t - 1 };
        edges.extend(tree.edges().map(|(p, c)| (id(p), id(c))));
        next += extra;
    }
    Graph::new(n, edges).expect("assembled graphs are simple")
}

/// Compositions of `total` into `parts` non-negative parts, one per
/// dihedral orbit (the lexicographically largest rotation or reflection).
fn cycle_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; parts];
    fill(total, 0, &mut cur, &mut out);
    out
}

fn fill(left: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i + 1 == cur.len() {
        cur[i] = left;
        if is_dihedral_max(cur) {
            out.push(cur.clone());
        }
        return;
    }
    for x in (0..=left).rev() {
        cur[i] = x;
        fill(left - x, i + 1, cur, out);
    }
}

fn is_dihedral_max(c: &[usize]) -> bool {
    let g = c.len();
    (0..g).all(|s| {
        let rot = (0..g).map(|i| c[(i + s) % g]);
        let refl = (0..g).map(|i| c[(s + g - i) % g]);
        rot.cmp(c.iter().copied()).is_le() && refl.cmp(c.iter().copied()).is_le()
    })
}

/// Independent generator: `C_n` together with every graph of order `n - 1`
/// plus one leaf, deduplicated by canonical key.
pub fn enumerate_by_augmentation(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check_order(n)?;
    let mut level: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    let c3 = Graph::cycle(3).expect("valid order");
    level.insert(canonical_form(&c3), c3);
    for m in 4..=n {
        let mut next = BTreeMap::new();
        let cycle = Graph::cycle(m).expect("valid order");
        next.insert(canonical_form(&cycle), cycle);
        for g in level.values() {
            for v in 0..g.order() {
                let h = g.with_leaf(v);
                next.entry(canonical_form(&h)).or_insert(h);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::is_unicyclic;

    #[test]
    fn compositions_are_orbit_representatives() {
        assert_eq!(cycle_compositions(0, 4), vec![vec![0, 0, 0, 0]]);
        assert_eq!(cycle_compositions(2, 3), vec![vec![2, 0, 0], vec![1, 1, 0]]);
        // (3,0,0,0), (2,1,0,0), (2,0,1,0), (1,1,1,0)
        assert_eq!(cycle_compositions(3, 4).len(), 4);
    }

    #[test]
    fn small_orders() {
        assert_eq!(enumerate_unicyclic(3).unwrap(), vec![Graph::cycle(3).unwrap()]);
        assert_eq!(enumerate_unicyclic(4).unwrap().len(), 2);
        assert_eq!(
            enumerate_unicyclic(2),
            Err(EnumerationError::OrderOutOfRange { n: 2 })
        );
        assert!(enumerate_unicyclic(13).is_err());
    }

    #[test]
    fn every_graph_is_unicyclic_and_sorted() {
        let gs = enumerate_unicyclic(7).unwrap();
        assert!(gs.iter().all(|g| is_unicyclic(g) && g.order() == 7));
        let keys: Vec<_> = gs.iter().map(canonical_form).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn generators_agree() {
        for n in 3..=8 {
            let a: Vec<_> = enumerate_unicyclic(n).unwrap().iter().map(canonical_form).collect();
            let b: Vec<_> = enumerate_by_augmentation(n).unwrap().iter().map(canonical_form).collect();
            assert_eq!(a, b, "n = {n}");
        }
    }
}
