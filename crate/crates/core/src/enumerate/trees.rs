//! Unlabeled rooted trees, grown one leaf at a time and deduplicated by
//! their AHU encoding.

use std::collections::BTreeMap;

/// A rooted tree as a parent array; vertex 0 is the root and every other
/// vertex has a smaller-id parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<usize>,
}

impl RootedTree {
    pub fn single() -> Self {
        RootedTree { parent: vec![0] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(parent, child)` pairs for every non-root vertex.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent.iter().enumerate().skip(1).map(|(c, &p)| (p, c))
    }

    fn with_leaf(&self, at: usize) -> Self {
        let mut parent = self.parent.clone();
        parent.push(at);
        RootedTree { parent }
    }

    /// AHU encoding: equal strings iff the rooted trees are isomorphic.
    pub fn encoding(&self) -> String {
        let n = self.len();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (p, c) in self.edges() {
            children[p].push(c);
        }
        let mut code: Vec<String> = vec![String::new(); n];
        // parents precede children, so a reverse sweep is post-order
        for v in (0..n).rev() {
            let mut parts: Vec<&str> = children[v].iter().map(|&c| code[c].as_str()).collect();
            parts.sort_unstable();
            code[v] = format!("({})", parts.concat());
        }
        std::mem::take(&mut code[0])
    }
}

/// Rooted trees on `1..=max` vertices, indexed by size minus one.
pub fn rooted_trees_up_to(max: usize) -> Vec<Vec<RootedTree>> {
    let mut levels = vec![vec![RootedTree::single()]];
    while levels.len() < max {
        let mut next: BTreeMap<String, RootedTree> = BTreeMap::new();
        for t in levels.last().expect("non-empty") {
            for at in 0..t.len() {
                let grown = t.with_leaf(at);
                next.entry(grown.encoding()).or_insert(grown);
            }
        }
        levels.push(next.into_values().collect());
    }
    levels.truncate(max);
    levels
}
