//! Labeled simple graphs on dense vertex sets `0..n` with bitset adjacency rows.
//!
//! Every row is `words(n)` machine words wide, so neighbourhood unions and
//! intersections are word-parallel. The vertex count is bounded by
//! [`MAX_VERTICES`]; operations that would grow a graph past it fail with
//! [`Error::CapacityExceeded`].

use std::fmt;

use crate::error::{Error, Result};

/// Vertex capacity of a [`Graph`].
#[cfg(not(feature = "capacity-1024"))]
pub const MAX_VERTICES: usize = 512;
#[cfg(feature = "capacity-1024")]
pub const MAX_VERTICES: usize = 1024;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterator over the set bits of a word slice, ascending.
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn popcount_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], i: usize) {
    words[i / 64] |= 1u64 << (i % 64);
}

#[inline]
pub(crate) fn clear_bit(words: &mut [u64], i: usize) {
    words[i / 64] &= !(1u64 << (i % 64));
}

#[inline]
pub(crate) fn test_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::CapacityExceeded {
            requested: n,
            capacity: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        check_capacity(n)?;
        let stride = words_for(n);
        Ok(Graph {
            n,
            stride,
            adj: vec![0; n * stride],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of words in each adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        test_bit(self.row(u), v)
    }

    /// Adds the edge `uv`.
    ///
    /// # Panics
    /// If either endpoint is out of range or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let s = self.stride;
        set_bit(&mut self.adj[u * s..(u + 1) * s], v);
        set_bit(&mut self.adj[v * s..(v + 1) * s], u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let s = self.stride;
        clear_bit(&mut self.adj[u * s..(u + 1) * s], v);
        clear_bit(&mut self.adj[v * s..(v + 1) * s], u);
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        popcount(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// δ_G(X), or `None` for an empty set.
    pub fn min_degree_of(&self, set: &[usize]) -> Option<usize> {
        set.iter().map(|&v| self.degree(v)).min()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len()).expect("subgraph fits");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// The graph with `v` deleted; higher indices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Drops isolated vertices, keeping the relative order of the rest.
    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels vertex `v` as `new_of_old[v]`. `new_of_old` must be a permutation.
    pub fn relabel(&self, new_of_old: &[usize]) -> Graph {
        debug_assert_eq!(new_of_old.len(), self.n);
        let mut g = Graph::new(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.add_edge(new_of_old[u], new_of_old[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("same order");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Adjacency symmetric, irreflexive, and no bits past `n`.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u)
                && self.neighbors(u).all(|v| v < self.n && self.has_edge(v, u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// `g1 ∨ g2`: vertices of `g1` come first, every cross pair is adjacent.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.order();
    let mut g = Graph::new(n1 + g2.order())?;
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(n1 + u, n1 + v);
    }
    for u in 0..n1 {
        for v in 0..g2.order() {
            g.add_edge(u, n1 + v);
        }
    }
    Ok(g)
}

/// Disjoint union with indices concatenated in input order.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    let total = gs.iter().map(Graph::order).sum();
    let mut g = Graph::new(total)?;
    let mut offset = 0;
    for h in gs {
        for (u, v) in h.edges() {
            g.add_edge(offset + u, offset + v);
        }
        offset += h.order();
    }
    Ok(g)
}

/// Small named graphs. These panic above [`MAX_VERTICES`].
pub mod named {
    use super::Graph;

    pub fn empty(n: usize) -> Graph {
        Graph::new(n).expect("within capacity")
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Path on `n` vertices `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// `K_{1,t}` with centre 0.
    pub fn star(t: usize) -> Graph {
        let mut g = empty(t + 1);
        for v in 1..=t {
            g.add_edge(0, v);
        }
        g
    }

    pub fn complete_bipartite(s: usize, t: usize) -> Graph {
        let mut g = empty(s + t);
        for u in 0..s {
            for v in s..s + t {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `tK_2` with edges `(2i, 2i+1)`.
    pub fn matching(t: usize) -> Graph {
        let mut g = empty(2 * t);
        for i in 0..t {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    /// `2K_{1,t}`: centres 0 and `t+1`.
    pub fn double_star_forest(t: usize) -> Graph {
        let mut g = empty(2 * t + 2);
        for v in 1..=t {
            g.add_edge(0, v);
            g.add_edge(t + 1, t + 1 + v);
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut g = empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }
}
