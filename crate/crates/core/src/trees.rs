//! Trees with labeled endpoints, their matroid decompositions of `Δ(2, n)`,
//! and the boundary combinatorics of stable `n`-pointed rational curves.
//!
//! Vertices `0..n` are the leaves (leaf `i` carries label `i + 1` in text
//! form); internal vertices are numbered from `n` upwards.

use std::collections::{BTreeMap, BTreeSet};

use crate::combin::Subset;
use crate::error::{Error, Result};
use crate::hypersimplex::{
    is_matroid_decomposition, DecompositionChecker, MatroidDecomposition, MatroidPolytope,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Leaf(usize),
    Internal(usize),
}

#[derive(Debug, Clone)]
pub struct LabeledTree {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl LabeledTree {
    /// Builds and validates a tree from an edge list. Internal ids may be
    /// arbitrary; they are renumbered in increasing order.
    pub fn from_edges(n: usize, edges: &[(Node, Node)]) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewLeaves(3));
        }
        let internal_ids: BTreeSet<usize> = edges
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .filter_map(|x| match x {
                Node::Internal(j) => Some(j),
                Node::Leaf(_) => None,
            })
            .collect();
        let id_of: BTreeMap<usize, usize> = internal_ids
            .iter()
            .enumerate()
            .map(|(pos, &j)| (j, n + pos))
            .collect();
        let total = n + internal_ids.len();
        let mut adj = vec![Vec::new(); total];
        for &(a, b) in edges {
            let resolve = |x: Node| -> Result<usize> {
                match x {
                    Node::Leaf(i) if i < n => Ok(i),
                    Node::Leaf(i) => Err(Error::InvalidTree(format!("leaf L{} beyond n = {n}", i + 1))),
                    Node::Internal(j) => Ok(id_of[&j]),
                }
            };
            let (u, v) = (resolve(a)?, resolve(b)?);
            if u == v || adj[u].contains(&v) {
                return Err(Error::InvalidTree("loop or repeated edge".into()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let t = LabeledTree { n, adj };
        t.validate()?;
        Ok(t)
    }

    fn from_adjacency(n: usize, adj: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = Vec::new();
        for (u, nb) in adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    edges.push((Self::node_of(n, u), Self::node_of(n, v)));
                }
            }
        }
        Self::from_edges(n, &edges)
    }

    fn node_of(n: usize, v: usize) -> Node {
        if v < n {
            Node::Leaf(v)
        } else {
            Node::Internal(v - n)
        }
    }

    fn validate(&self) -> Result<()> {
        let total = self.adj.len();
        let edge_count: usize = self.adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        if edge_count + 1 != total {
            return Err(Error::InvalidTree("edge count does not match a tree".into()));
        }
        // connectivity
        let mut seen = vec![false; total];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidTree("not connected".into()));
        }
        for v in 0..total {
            let val = self.adj[v].len();
            if v < self.n && val != 1 {
                return Err(Error::InvalidTree(format!("leaf L{} has valence {val}", v + 1)));
            }
            if v >= self.n && val < 3 {
                return Err(Error::InvalidTree(format!("internal vertex of valence {val}")));
            }
        }
        Ok(())
    }

    /// The tree with a single internal vertex.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<(Node, Node)> = (0..n).map(|i| (Node::Leaf(i), Node::Internal(0))).collect();
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn internal_vertices(&self) -> std::ops::Range<usize> {
        self.n..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn valence(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn node(&self, v: usize) -> Node {
        Self::node_of(self.n, v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn leaves_beyond(&self, from: usize, start: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(start, from)];
        while let Some((u, parent)) = stack.pop() {
            if u < self.n {
                out.push(u);
            }
            for &w in &self.adj[u] {
                if w != parent {
                    stack.push((w, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Leaves grouped by the component of the tree minus `v`.
    pub fn vertex_relation(&self, v: usize) -> Result<VertexRelation> {
        if v < self.n || v >= self.adj.len() {
            return Err(Error::NotInternal(v));
        }
        let mut blocks: Vec<Subset> = self.adj[v].iter().map(|&u| self.leaves_beyond(v, u)).collect();
        blocks.sort();
        Ok(VertexRelation { blocks })
    }

    /// Nontrivial splits, each given by its side not containing leaf `0`.
    pub fn splits(&self) -> BTreeSet<Subset> {
        let mut out = BTreeSet::new();
        for (u, v) in self.edges() {
            if u < self.n || v < self.n {
                continue;
            }
            let side = self.leaves_beyond(u, v);
            let side = if side.contains(&0) {
                (0..self.n).filter(|x| !side.contains(x)).collect()
            } else {
                side
            };
            out.insert(side);
        }
        out
    }

    /// Signature of the tree rooted at the neighbour of leaf `0`, children
    /// sorted; equal exactly for isomorphic trees with the same labels.
    pub fn canonical_form(&self) -> String {
        let root = self.adj[0][0];
        self.signature(root, usize::MAX)
    }

    fn signature(&self, v: usize, parent: usize) -> String {
        if v < self.n {
            return format!("L{}", v + 1);
        }
        let mut parts: Vec<String> = self.adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| self.signature(w, v))
            .collect();
        parts.sort();
        format!("({})", parts.join(","))
    }

    /// Validity already forces every internal vertex to have valence `>= 3`.
    pub fn is_stable_tree(&self) -> bool {
        self.internal_vertices().all(|v| self.valence(v) >= 3)
    }

    /// Dimension of the boundary stratum, `sum (valence - 3)`.
    pub fn stratum_dimension(&self) -> usize {
        self.internal_vertices().map(|v| self.valence(v) - 3).sum()
    }

    /// Removes leaf `i`, suppresses a resulting valence-2 vertex, and closes
    /// the gap in leaf labels.
    pub fn forget_point(&self, i: usize) -> Result<LabeledTree> {
        if self.n < 4 {
            return Err(Error::TooFewLeaves(4));
        }
        if i >= self.n {
            return Err(Error::IndexOutOfRange(format!("leaf {} of {}", i + 1, self.n)));
        }
        let mut adj = self.adj.clone();
        let u = adj[i][0];
        adj[u].retain(|&w| w != i);
        adj[i].clear();
        let mut removed = vec![i];
        if adj[u].len() == 2 {
            let (a, b) = (adj[u][0], adj[u][1]);
            adj[a].retain(|&w| w != u);
            adj[b].retain(|&w| w != u);
            adj[a].push(b);
            adj[b].push(a);
            adj[u].clear();
            removed.push(u);
        }
        // new numbering: leaves first, then the surviving internal vertices
        let keep: Vec<usize> = (0..adj.len()).filter(|v| !removed.contains(v)).collect();
        let mut new_id = vec![usize::MAX; adj.len()];
        for (pos, &v) in keep.iter().enumerate() {
            new_id[v] = pos;
        }
        let new_adj: Vec<Vec<usize>> = keep
            .iter()
            .map(|&v| adj[v].iter().map(|&w| new_id[w]).collect())
            .collect();
        Self::from_adjacency(self.n - 1, new_adj)
    }
}

impl PartialEq for LabeledTree {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }
}

impl Eq for LabeledTree {}

/// The partition of the leaves cut out by an internal vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRelation {
    pub blocks: Vec<Subset>,
}

impl VertexRelation {
    /// Pairs of leaves in different blocks.
    pub fn cross_pairs(&self) -> BTreeSet<Subset> {
        let mut out = BTreeSet::new();
        for (a, ba) in self.blocks.iter().enumerate() {
            for bb in &self.blocks[a + 1..] {
                for &x in ba {
                    for &y in bb {
                        out.insert(if x < y { vec![x, y] } else { vec![y, x] });
                    }
                }
            }
        }
        out
    }
}

/// One piece per internal vertex: the pairs whose connecting path passes
/// through it.
pub fn tree_to_decomposition(t: &LabeledTree) -> MatroidDecomposition {
    let pieces = t
        .internal_vertices()
        .map(|v| {
            let rel = t.vertex_relation(v).expect("internal vertex");
            MatroidPolytope::new(2, t.n, rel.cross_pairs()).expect("pairs of leaves")
        })
        .collect();
    MatroidDecomposition::new(2, t.n, pieces).expect("pieces live in Δ(2, n)")
}

pub fn decomposition_to_tree(d: &MatroidDecomposition) -> Result<LabeledTree> {
    if d.k != 2 || !is_matroid_decomposition(d) {
        return Err(Error::NotADecomposition);
    }
    tree_from_valid_decomposition(d)
}

/// Like [`decomposition_to_tree`], validating with a shared checker.
pub fn decomposition_to_tree_with(
    d: &MatroidDecomposition,
    checker: &DecompositionChecker,
) -> Result<LabeledTree> {
    if d.k != 2 || !checker.check(d) {
        return Err(Error::NotADecomposition);
    }
    tree_from_valid_decomposition(d)
}

/// Blocks of a piece of `Δ(2, n)`: `i ~ j` iff `e_i + e_j` is not a vertex.
fn piece_blocks(n: usize, piece: &MatroidPolytope) -> Result<Vec<Subset>> {
    let mut block_of: Vec<usize> = (0..n).collect();
    fn find(b: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while b[r] != r {
            r = b[r];
        }
        b[x] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if !piece.vertices.contains(&vec![i, j]) {
                let (a, b) = (find(&mut block_of, i), find(&mut block_of, j));
                block_of[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Subset> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut block_of, i);
        groups.entry(r).or_default().push(i);
    }
    let mut blocks: Vec<Subset> = groups.into_values().collect();
    blocks.sort();
    if blocks.len() < 3 || (VertexRelation { blocks: blocks.clone() }).cross_pairs() != piece.vertices {
        return Err(Error::NotADecomposition);
    }
    Ok(blocks)
}

fn tree_from_valid_decomposition(d: &MatroidDecomposition) -> Result<LabeledTree> {
    let n = d.n;
    let blocks: Vec<Vec<Subset>> = d
        .pieces
        .iter()
        .map(|p| piece_blocks(n, p))
        .collect::<Result<_>>()?;
    let mut edges = Vec::new();
    for (a, ba) in blocks.iter().enumerate() {
        for (b, bb) in blocks.iter().enumerate().skip(a + 1) {
            // adjacent iff they share a facet: complementary blocks
            let shares = ba.iter().any(|x| {
                bb.iter()
                    .any(|y| x.len() + y.len() == n && x.iter().all(|e| !y.contains(e)))
            });
            if shares {
                edges.push((Node::Internal(a), Node::Internal(b)));
            }
        }
    }
    for leaf in 0..n {
        let owners: Vec<usize> = blocks
            .iter()
            .enumerate()
            .filter(|(_, bs)| bs.iter().any(|b| b.as_slice() == [leaf]))
            .map(|(p, _)| p)
            .collect();
        if owners.len() != 1 {
            return Err(Error::NotADecomposition);
        }
        edges.push((Node::Leaf(leaf), Node::Internal(owners[0])));
    }
    LabeledTree::from_edges(n, &edges).map_err(|_| Error::NotADecomposition)
}

/// All trees with `n` labeled leaves up to label-preserving isomorphism,
/// sorted by canonical form.
pub fn enumerate_trees(n: usize) -> Result<Vec<LabeledTree>> {
    if n < 3 {
        return Err(Error::TooFewLeaves(3));
    }
    let mut level: BTreeMap<String, LabeledTree> = BTreeMap::new();
    let star = LabeledTree::star(3)?;
    level.insert(star.canonical_form(), star);
    for m in 3..n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for grown in attach_leaf(t, m)? {
                next.entry(grown.canonical_form()).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Trees on `m + 1` leaves obtained by hanging leaf `m` off an internal
/// vertex or off the midpoint of an edge.
fn attach_leaf(t: &LabeledTree, m: usize) -> Result<Vec<LabeledTree>> {
    let base: Vec<(Node, Node)> = t
        .edges()
        .into_iter()
        .map(|(u, v)| (t.node(u), t.node(v)))
        .collect();
    let fresh = Node::Internal(t.num_vertices());
    let mut out = Vec::new();
    for v in t.internal_vertices() {
        let mut e = base.clone();
        e.push((Node::Leaf(m), t.node(v)));
        out.push(LabeledTree::from_edges(m + 1, &e)?);
    }
    for (idx, &(a, b)) in base.iter().enumerate() {
        let mut e = base.clone();
        e.remove(idx);
        e.push((a, fresh));
        e.push((fresh, b));
        e.push((Node::Leaf(m), fresh));
        out.push(LabeledTree::from_edges(m + 1, &e)?);
    }
    Ok(out)
}
