//! Trees, their colour classes, the parameters `(a, k, A₀, B₀, b)`, and
//! vertex splitting.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree with its bipartition; `class_a` is never larger than `class_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
    class_a: Vec<usize>,
    class_b: Vec<usize>,
}

impl Tree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn class_a(&self) -> &[usize] {
        &self.class_a
    }

    pub fn class_b(&self) -> &[usize] {
        &self.class_b
    }

    pub fn in_a(&self, v: usize) -> bool {
        self.class_a.binary_search(&v).is_ok()
    }

    /// The opposite orientation; only allowed when both classes have equal size.
    pub fn swapped(&self) -> Result<Tree> {
        if self.class_a.len() != self.class_b.len() {
            return Err(Error::Infeasible(
                "orientation can only be swapped when |A| = |B|".into(),
            ));
        }
        Ok(Tree {
            graph: self.graph.clone(),
            class_a: self.class_b.clone(),
            class_b: self.class_a.clone(),
        })
    }
}

/// Validates `g` as a tree on at least two vertices and 2-colours it.
/// On a tie `A` is the class containing vertex 0.
pub fn analyze_tree(g: &Graph) -> Result<Tree> {
    let n = g.order();
    if n < 2 {
        return Err(Error::NotATree(format!("need at least 2 vertices, got {n}")));
    }
    if g.edge_count() != n - 1 {
        return Err(Error::NotATree(format!(
            "{} edges on {n} vertices",
            g.edge_count()
        )));
    }
    if !g.is_connected() {
        return Err(Error::NotATree("disconnected".into()));
    }
    let mut colour = vec![usize::MAX; n];
    colour[0] = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if colour[w] == usize::MAX {
                colour[w] = 1 - colour[u];
                stack.push(w);
            }
        }
    }
    let c0: Vec<usize> = (0..n).filter(|&v| colour[v] == 0).collect();
    let c1: Vec<usize> = (0..n).filter(|&v| colour[v] == 1).collect();
    let (class_a, class_b) = if c1.len() < c0.len() { (c1, c0) } else { (c0, c1) };
    Ok(Tree {
        graph: g.clone(),
        class_a,
        class_b,
    })
}

/// `a = |A|`, `k = δ(A)`, `A₀`, `B₀`, and `b = δ(B₀) − 2` (absent when `B₀ = ∅`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeParams {
    pub a: usize,
    pub k: usize,
    pub a0: Vec<usize>,
    pub b0: Vec<usize>,
    pub b: Option<usize>,
}

impl fmt::Display for TreeParams {
    /// Fixed-field record: `a=2 k=2 a0=2 b0=1 b=0` (`b=none` when B₀ is empty).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} k={} a0={} b0={} b=",
            self.a,
            self.k,
            self.a0.len(),
            self.b0.len()
        )?;
        match self.b {
            Some(b) => write!(f, "{b}"),
            None => write!(f, "none"),
        }
    }
}

pub fn extract_params(t: &Tree) -> TreeParams {
    let g = &t.graph;
    let k = g
        .min_degree_of(&t.class_a)
        .expect("trees on >= 2 vertices have non-empty classes");
    let a0: Vec<usize> = t.class_a.iter().copied().filter(|&x| g.degree(x) == k).collect();
    let b0: Vec<usize> = t
        .class_b
        .iter()
        .copied()
        .filter(|&y| g.neighbors(y).filter(|w| a0.binary_search(w).is_ok()).count() >= 2)
        .collect();
    // every B₀ vertex has degree >= 2, so the subtraction cannot underflow
    let b = g.min_degree_of(&b0).map(|d| d - 2);
    TreeParams {
        a: t.class_a.len(),
        k,
        a0,
        b0,
        b,
    }
}

/// Replaces `v` by `d(v)` independent vertices, one per former neighbour.
///
/// The copy attached to the smallest neighbour keeps index `v`; the others are
/// appended in neighbour order, so all other vertex indices are unchanged.
pub fn split_vertex(g: &Graph, v: usize) -> Result<Graph> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    if nbrs.is_empty() {
        return Err(Error::IsolatedVertex(v));
    }
    let mut h = Graph::new(n + nbrs.len() - 1)?;
    for (x, y) in g.edges() {
        if x != v && y != v {
            h.add_edge(x, y);
        }
    }
    h.add_edge(v, nbrs[0]);
    for (i, &w) in nbrs.iter().enumerate().skip(1) {
        h.add_edge(n + i - 1, w);
    }
    Ok(h)
}

/// Splits every vertex of `set`, ascending.
pub fn split_set(g: &Graph, set: &[usize]) -> Result<Graph> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut h = g.clone();
    for v in sorted {
        h = split_vertex(&h, v)?;
    }
    Ok(h)
}

/// A hub `0` joined to arm centres `1..=r`; arm `i` carries `leaves[i]`
/// further leaves, numbered after the centres.
pub fn star_of_stars(leaves: &[usize]) -> Graph {
    let r = leaves.len();
    let mut edges: Vec<(usize, usize)> = (1..=r).map(|c| (0, c)).collect();
    let mut next = r + 1;
    for (i, &l) in leaves.iter().enumerate() {
        for _ in 0..l {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    Graph::from_edges(next, &edges).expect("order is leaves + r + 1")
}

/// Default member cap for [`splitting_family`].
pub const DEFAULT_FAMILY_CAP: usize = 100_000;

/// All graphs obtained by splitting some subset of `restrict` (default: every
/// vertex), up to isomorphism. Members are returned in canonical form, sorted
/// by key; `g` itself is always included.
pub fn splitting_family(
    g: &Graph,
    restrict: Option<&[usize]>,
    cap: usize,
) -> Result<Vec<Graph>> {
    let pool: Vec<usize> = match restrict {
        Some(r) => r.to_vec(),
        None => (0..g.order()).collect(),
    };
    for &v in &pool {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    // splitting a vertex of degree <= 1 is a relabeling
    let mut pool: Vec<usize> = pool.into_iter().filter(|&v| g.degree(v) >= 2).collect();
    pool.sort_unstable();
    pool.dedup();
    if pool.len() >= 40 {
        return Err(Error::FamilyCapExceeded { cap });
    }
    let total = 1u64 << pool.len();
    let mut members: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    const CHUNK: u64 = 1 << 12;
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK).min(total);
        let batch: Vec<(CanonicalForm, Graph)> = (start..end)
            .into_par_iter()
            .map(|mask| {
                let set: Vec<usize> = pool
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let h = split_set(g, &set)?;
                let (key, lab) = canonical_labeling(&h);
                let mut pos = vec![0; h.order()];
                for (i, &v) in lab.iter().enumerate() {
                    pos[v] = i;
                }
                Ok((key, h.relabel(&pos)))
            })
            .collect::<Result<_>>()?;
        for (key, h) in batch {
            members.entry(key).or_insert(h);
        }
        if members.len() > cap {
            return Err(Error::FamilyCapExceeded { cap });
        }
        start = end;
    }
    Ok(members.into_values().collect())
}
