//! Canonical labeling by equitable refinement and individualization.
//!
//! The search tree individualizes one vertex of the first non-singleton
//! cell at a time and refines to an equitable partition. Every discrete
//! leaf yields a labeling whose relabeled adjacency matrix is a
//! certificate; the lexicographically smallest certificate wins. Leaves
//! with equal certificates expose automorphisms, which prune sibling
//! branches lying in the same orbit of the pointwise stabilizer of the
//! current prefix.

use std::fmt;

use crate::graph::Graph;

/// Isomorphism-invariant key: equal for two graphs iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// Computes the canonical key of `g`.
///
/// ```
/// use unicyclic_ga::{canonical_form, Graph};
///
/// let a = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
/// let b = Graph::new(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
/// assert_eq!(canonical_form(&a), canonical_form(&b));
/// ```
pub fn canonical_form(g: &Graph) -> CanonicalKey {
    let (cert, _) = canonical_labeling_with_cert(g);
    let mut key = Vec::with_capacity(4 + cert.len());
    key.extend_from_slice(&(g.order() as u32).to_le_bytes());
    key.extend_from_slice(&cert);
    CanonicalKey(key)
}

/// A canonical labeling: `labeling[v]` is the canonical position of `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical_labeling_with_cert(g).1
}

fn canonical_labeling_with_cert(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let cells = vec![(0..g.order()).collect::<Vec<_>>()];
    let mut prefix = Vec::new();
    search.descend(cells, &mut prefix);
    let (cert, labeling, _) = search.best.expect("search reaches at least one leaf");
    (cert, labeling)
}

/// Certificate, labeling and the individualized prefix that produced them.
type Leaf = (Vec<u8>, Vec<usize>, Vec<usize>);

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Returns `Some(level)` when an automorphism shows that everything
    /// below depth `level` of the current path is already covered.
    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let depth = prefix.len();
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !tried.is_empty() {
                let orbits = self.stabilizer_orbits(prefix);
                let rw = orbits.find(w);
                if tried.iter().any(|&t| orbits.find(t) == rw) {
                    continue;
                }
            }
            tried.push(w);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..target].iter().cloned());
            next.push(vec![w]);
            next.push(candidates.iter().copied().filter(|&x| x != w).collect());
            next.extend(cells[target + 1..].iter().cloned());
            prefix.push(w);
            let jump = self.descend(next, prefix);
            prefix.pop();
            match jump {
                Some(level) if level < depth => return Some(level),
                _ => {}
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], prefix: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let mut labeling = vec![0; n];
        for (i, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = i;
        }
        let cert = certificate(self.g, &labeling);
        let mut jump = None;
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == cert {
                let mut inverse = vec![0; n];
                for (v, &l) in known.1.iter().enumerate() {
                    inverse[l] = v;
                }
                let gamma: Vec<usize> = labeling.iter().map(|&l| inverse[l]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
                jump = Some(common_prefix(prefix, &known.2));
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), labeling.clone(), prefix.to_vec()));
        }
        match &self.best {
            Some((b, _, _)) if *b <= cert => {}
            _ => self.best = Some((cert, labeling, prefix.to_vec())),
        }
        jump
    }

    fn stabilizer_orbits(&self, prefix: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.g.order());
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                for (v, &w) in gamma.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Split cells are ordered by their neighbor-count signatures, so the result
/// depends only on the graph structure and the input partition.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut cell_of = vec![0; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut signed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            signed.sort();
            let mut start = 0;
            for i in 1..=signed.len() {
                if i == signed.len() || signed[i].0 != signed[start].0 {
                    next.push(signed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn certificate(g: &Graph, labeling: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut adjacency = vec![false; n * n];
    for &(u, v) in g.edges() {
        let (a, b) = (labeling[u], labeling[v]);
        adjacency[a * n + b] = true;
        adjacency[b * n + a] = true;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; bits.div_ceil(8)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adjacency[i * n + j] {
                out[k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
