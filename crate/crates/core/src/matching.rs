//! Maximum matchings (Edmonds' blossom search), bipartite matchings with
//! König covers and Hall violators, exact independence numbers, and the
//! Gallai–Edmonds decomposition.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingWitness {
    pub edges: Vec<(usize, usize)>,
}

impl MatchingWitness {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    fn from_mate(mate: &[usize]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        MatchingWitness { edges }
    }

    /// Edges exist in `g` and no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        self.edges.iter().all(|&(u, v)| {
            let ok = u < g.order() && v < g.order() && g.has_edge(u, v) && !used[u] && !used[v];
            if ok {
                used[u] = true;
                used[v] = true;
            }
            ok
        })
    }

    pub fn covers(&self, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }
}

/// Blossom-contracting augmenting path search over a fixed matching.
struct Edmonds<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Edmonds<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Edmonds {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.g.order() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(w) = self.g.neighbors(v).find(|&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from the exposed vertex `root`,
    /// ignoring vertices with `blocked[v]`. Returns the far endpoint.
    fn find_path(&mut self, root: usize, blocked: Option<&[bool]>) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        let is_blocked = |v: usize| blocked.is_some_and(|b| b[v]);
        while let Some(v) = self.queue.pop_front() {
            let nbrs: Vec<usize> = self.g.neighbors(v).collect();
            for to in nbrs {
                if is_blocked(to) || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn maximize(&mut self) {
        self.greedy();
        for v in 0..self.g.order() {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v, None) {
                    self.augment(end);
                }
            }
        }
    }
}

/// A maximum matching of `g`.
pub fn max_matching(g: &Graph) -> MatchingWitness {
    let mut e = Edmonds::new(g);
    e.maximize();
    MatchingWitness::from_mate(&e.mate)
}

/// ν(G).
pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).size()
}

/// Vertices missed by at least one maximum matching (the set D).
fn exposable_vertices(g: &Graph) -> (Vec<bool>, Vec<usize>) {
    let n = g.order();
    let mut e = Edmonds::new(g);
    e.maximize();
    let mate = e.mate.clone();
    let mut in_d = vec![false; n];
    let mut blocked = vec![false; n];
    for v in 0..n {
        let u = mate[v];
        if u == NONE {
            in_d[v] = true;
            continue;
        }
        // ν(G − v) = ν(G) iff, after dropping uv, u can be re-matched avoiding v.
        e.mate.copy_from_slice(&mate);
        e.mate[v] = NONE;
        e.mate[u] = NONE;
        blocked[v] = true;
        in_d[v] = e.find_path(u, Some(&blocked)).is_some();
        blocked[v] = false;
    }
    (in_d, mate)
}

/// Gallai–Edmonds decomposition of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiEdmondsRecord {
    /// The set A(G) = N(D) \ D, sorted.
    pub s: Vec<usize>,
    pub odd_components: Vec<Vec<usize>>,
    pub even_components: Vec<Vec<usize>>,
    pub nu: usize,
    pub matching: MatchingWitness,
}

impl GallaiEdmondsRecord {
    /// ν = (|V| + |S| − o(G − S)) / 2.
    pub fn deficiency_identity_holds(&self, order: usize) -> bool {
        2 * self.nu + self.odd_components.len() == order + self.s.len()
    }
}

pub fn gallai_edmonds(g: &Graph) -> GallaiEdmondsRecord {
    let n = g.order();
    let (in_d, mate) = exposable_vertices(g);
    let mut in_s = vec![false; n];
    for v in (0..n).filter(|&v| in_d[v]) {
        for w in g.neighbors(v) {
            if !in_d[w] {
                in_s[w] = true;
            }
        }
    }
    let s: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| !in_s[v]).collect();
    let sub = g.induced_subgraph(&rest);
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for comp in sub.components() {
        let comp: Vec<usize> = comp.into_iter().map(|i| rest[i]).collect();
        if comp.len() % 2 == 1 {
            odd.push(comp);
        } else {
            even.push(comp);
        }
    }
    let matching = MatchingWitness::from_mate(&mate);
    GallaiEdmondsRecord {
        s,
        odd_components: odd,
        even_components: even,
        nu: matching.size(),
        matching,
    }
}

/// A set `S ⊆ X` with `|N(S)| < |S|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallViolator {
    pub set: Vec<usize>,
    pub neighborhood: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteCover {
    pub matching: MatchingWitness,
    /// Minimum vertex cover; same size as `matching`.
    pub cover: Vec<usize>,
    /// Present iff the matching does not saturate X.
    pub hall_violator: Option<HallViolator>,
}

/// Maximum matching, König cover and (if X is not saturated) a Hall violator
/// for the bipartite graph with sides `side_x` and its complement.
pub fn bipartite_cover(g: &Graph, side_x: &[usize]) -> Result<BipartiteCover> {
    let n = g.order();
    let mut in_x = vec![false; n];
    for &x in side_x {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, order: n });
        }
        in_x[x] = true;
    }
    if g.edges().any(|(u, v)| in_x[u] == in_x[v]) {
        return Err(Error::NotBipartite);
    }
    let xs: Vec<usize> = (0..n).filter(|&v| in_x[v]).collect();
    let mut mate = vec![NONE; n];

    fn try_kuhn(g: &Graph, x: usize, seen: &mut [bool], mate: &mut [usize]) -> bool {
        for y in g.neighbors(x) {
            if seen[y] {
                continue;
            }
            seen[y] = true;
            if mate[y] == NONE || try_kuhn(g, mate[y], seen, mate) {
                mate[y] = x;
                mate[x] = y;
                return true;
            }
        }
        false
    }

    for &x in &xs {
        let mut seen = vec![false; n];
        try_kuhn(g, x, &mut seen, &mut mate);
    }

    // alternating reachability: X→Y along non-matching edges, Y→X along matching edges
    let reach = |roots: &[usize]| -> Vec<bool> {
        let mut z = vec![false; n];
        let mut stack: Vec<usize> = roots.to_vec();
        for &r in roots {
            z[r] = true;
        }
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if z[y] || mate[x] == y {
                    continue;
                }
                z[y] = true;
                let m = mate[y];
                if m != NONE && !z[m] {
                    z[m] = true;
                    stack.push(m);
                }
            }
        }
        z
    };

    let free_x: Vec<usize> = xs.iter().copied().filter(|&x| mate[x] == NONE).collect();
    let z = reach(&free_x);
    let cover: Vec<usize> = (0..n)
        .filter(|&v| (in_x[v] && !z[v]) || (!in_x[v] && z[v]))
        .collect();
    // |S| - |N(S)| equals the number of unsaturated X vertices
    let hall_violator = (!free_x.is_empty()).then(|| HallViolator {
        set: (0..n).filter(|&v| in_x[v] && z[v]).collect(),
        neighborhood: (0..n).filter(|&v| !in_x[v] && z[v]).collect(),
    });
    Ok(BipartiteCover {
        matching: MatchingWitness::from_mate(&mate),
        cover,
        hall_violator,
    })
}

/// Default order bound for [`independence_number`].
pub const DEFAULT_EXACT_BOUND: usize = 40;

/// α(G) by branch-and-bound maximum clique on the complement with a greedy
/// colouring bound. Refuses graphs above `bound` (and above 64) vertices.
pub fn independence_number(g: &Graph, bound: usize) -> Result<usize> {
    let n = g.order();
    if n > bound.min(64) {
        return Err(Error::SizeBoundExceeded {
            order: n,
            bound: bound.min(64),
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let comp: Vec<u64> = (0..n)
        .map(|v| !g.row(v)[0] & full & !(1u64 << v))
        .collect();
    let mut best = 0;
    clique_expand(&comp, full, 0, &mut best);
    Ok(best)
}

fn colour_order(adj: &[u64], mut cand: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.count_ones() as usize);
    let mut colour = 0;
    while cand != 0 {
        colour += 1;
        let mut avail = cand;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1u64 << v);
            avail &= !adj[v];
            cand &= !(1u64 << v);
            out.push((v, colour));
        }
    }
    out
}

fn clique_expand(adj: &[u64], mut cand: u64, size: usize, best: &mut usize) {
    let order = colour_order(adj, cand);
    for &(v, colour) in order.iter().rev() {
        if size + colour <= *best {
            return;
        }
        let next = cand & adj[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            clique_expand(adj, next, size + 1, best);
        }
        cand &= !(1u64 << v);
    }
}

/// β(G) through Gallai's identity α + β = |V|.
pub fn vertex_cover_number(g: &Graph, bound: usize) -> Result<usize> {
    Ok(g.order() - independence_number(g, bound)?)
}
