//! Canonical forms by partition refinement and individualization.
//!
//! The search tree follows the usual scheme: refine the ordered partition to
//! an equitable one, pick the first smallest non-singleton cell, and branch on
//! each of its vertices. A discrete partition is a leaf; its certificate is the
//! adjacency matrix relabeled by leaf position, and the canonical form is the
//! least certificate over all leaves. Automorphisms discovered at equivalent
//! leaves prune siblings in the same orbit and let the search jump back to
//! where the current path left the first path.

use std::cmp::Ordering;

use crate::graph::{popcount_and, set_bit, words_for, Graph, Ones};

/// Isomorphism-invariant key: two graphs have equal keys iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u32,
    cert: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// The canonically labeled graph this form encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let stride = words_for(n);
        let mut g = Graph::new(n).expect("forms come from valid graphs");
        for u in 0..n {
            let row = &self.cert[u * stride..(u + 1) * stride];
            for v in Ones::new(row).filter(|&v| v > u) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Byte encoding whose lexicographic order agrees with `Ord`.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + 8 * self.cert.len());
        out.extend_from_slice(&self.order.to_be_bytes());
        for w in &self.cert {
            out.extend_from_slice(&w.to_be_bytes());
        }
        out
    }
}

/// Ordered partition of the vertex set: `lab` lists vertices, `starts` the
/// first position of each cell.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    starts: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition {
            lab: (0..n).collect(),
            starts: if n == 0 { vec![] } else { vec![0] },
        }
    }

    #[inline]
    fn cell(&self, i: usize) -> (usize, usize) {
        let end = self.starts.get(i + 1).copied().unwrap_or(self.lab.len());
        (self.starts[i], end)
    }

    fn is_discrete(&self) -> bool {
        self.starts.len() == self.lab.len()
    }

    fn refine(&mut self, g: &Graph, counts: &mut [usize]) {
        let stride = words_for(g.order());
        let mut mask = vec![0u64; stride];
        'outer: loop {
            for wi in 0..self.starts.len() {
                let (ws, we) = self.cell(wi);
                mask.iter_mut().for_each(|w| *w = 0);
                for &v in &self.lab[ws..we] {
                    set_bit(&mut mask, v);
                }
                let mut split = false;
                let mut ci = 0;
                while ci < self.starts.len() {
                    let (cs, ce) = self.cell(ci);
                    if ce - cs < 2 {
                        ci += 1;
                        continue;
                    }
                    let mut uniform = true;
                    let first = popcount_and(g.row(self.lab[cs]), &mask);
                    for &v in &self.lab[cs..ce] {
                        counts[v] = popcount_and(g.row(v), &mask);
                        uniform &= counts[v] == first;
                    }
                    if uniform {
                        ci += 1;
                        continue;
                    }
                    self.lab[cs..ce].sort_by_key(|&v| counts[v]);
                    let mut new_starts = Vec::new();
                    for p in cs + 1..ce {
                        if counts[self.lab[p]] != counts[self.lab[p - 1]] {
                            new_starts.push(p);
                        }
                    }
                    let added = new_starts.len();
                    self.starts.splice(ci + 1..ci + 1, new_starts);
                    ci += added + 1;
                    split = true;
                }
                if split {
                    continue 'outer;
                }
            }
            break;
        }
    }

    /// Moves `v` to the front of its cell and makes it a singleton.
    fn individualize(&mut self, v: usize) {
        let pos = self.lab.iter().position(|&x| x == v).expect("vertex present");
        let ci = match self.starts.binary_search(&pos) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let (cs, ce) = self.cell(ci);
        if ce - cs < 2 {
            return;
        }
        self.lab.swap(cs, pos);
        self.starts.insert(ci + 1, cs + 1);
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<(usize, usize)> {
        (0..self.starts.len())
            .map(|i| self.cell(i))
            .filter(|(s, e)| e - s > 1)
            .min_by_key(|(s, e)| e - s)
    }
}

fn certificate(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = g.order();
    let stride = words_for(n);
    let mut pos = vec![0; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    let mut cert = vec![0u64; n * stride];
    for (i, &v) in lab.iter().enumerate() {
        let row = &mut cert[i * stride..(i + 1) * stride];
        for w in g.neighbors(v) {
            set_bit(row, pos[w]);
        }
    }
    cert
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    counts: Vec<usize>,
    first: Option<Leaf>,
    first_seq: Vec<usize>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Search {
            g,
            counts: vec![0; g.order()],
            first: None,
            first_seq: Vec::new(),
            best: None,
            autos: Vec::new(),
        }
    }

    /// Explores the subtree at `part`; returns a depth to jump back to.
    fn visit(&mut self, part: &Partition, seq: &mut Vec<usize>) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(&part.lab, seq);
        }
        let (cs, ce) = part.target_cell().expect("non-discrete partition");
        let mut children: Vec<usize> = part.lab[cs..ce].to_vec();
        children.sort_unstable();
        let depth = seq.len();
        let mut explored: Vec<usize> = Vec::new();
        for w in children {
            if !explored.is_empty() && self.same_orbit(w, &explored, seq) {
                continue;
            }
            explored.push(w);
            let mut child = part.clone();
            child.individualize(w);
            child.refine(self.g, &mut self.counts);
            seq.push(w);
            let jump = self.visit(&child, seq);
            seq.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, lab: &[usize], seq: &[usize]) -> Option<usize> {
        let cert = certificate(self.g, lab);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                cert: cert.clone(),
                lab: lab.to_vec(),
            });
            self.best = Some(Leaf {
                cert,
                lab: lab.to_vec(),
            });
            self.first_seq = seq.to_vec();
            return None;
        };
        if cert == first.cert {
            let aut = automorphism(&first.lab, lab);
            self.autos.push(aut);
            let common = seq
                .iter()
                .zip(&self.first_seq)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let best = self.best.as_mut().expect("best set with first");
        match cert.cmp(&best.cert) {
            Ordering::Equal => {
                let aut = automorphism(&best.lab, lab);
                self.autos.push(aut);
            }
            Ordering::Less => {
                best.cert = cert;
                best.lab = lab.to_vec();
            }
            Ordering::Greater => {}
        }
        None
    }

    fn same_orbit(&self, w: usize, explored: &[usize], seq: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.g.order());
        let mut any = false;
        for aut in &self.autos {
            if seq.iter().all(|&v| aut[v] == v) {
                any = true;
                for (i, &j) in aut.iter().enumerate() {
                    uf.union(i, j);
                }
            }
        }
        if !any {
            return false;
        }
        let rw = uf.find(w);
        explored.iter().any(|&u| uf.find(u) == rw)
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut aut = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        aut[a] = b;
    }
    aut
}

/// Canonical form and the labeling that realises it: `lab[i]` is the vertex
/// placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (
            CanonicalForm {
                order: 0,
                cert: Vec::new(),
            },
            Vec::new(),
        );
    }
    let mut search = Search::new(g);
    let mut root = Partition::unit(n);
    root.refine(g, &mut search.counts);
    let mut seq = Vec::new();
    search.visit(&root, &mut seq);
    let best = search.best.expect("at least one leaf");
    (
        CanonicalForm {
            order: n as u32,
            cert: best.cert,
        },
        best.lab,
    )
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// The canonically relabeled copy of `g`; isomorphic inputs give identical graphs.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, lab) = canonical_labeling(g);
    let mut pos = vec![0; g.order()];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    g.relabel(&pos)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_form(g) == canonical_form(h)
}

/// Exhaustive key for tiny graphs: least certificate over all `n!` orderings.
/// Slow; kept as an independent reference for the refinement search.
pub fn canonical_form_exhaustive(g: &Graph) -> CanonicalForm {
    let n = g.order();
    assert!(n <= 9, "exhaustive canonical form is for n <= 9");
    let mut lab: Vec<usize> = (0..n).collect();
    let mut best = certificate(g, &lab);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                lab.swap(0, i);
            } else {
                lab.swap(c[i], i);
            }
            let cert = certificate(g, &lab);
            if cert < best {
                best = cert;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    CanonicalForm {
        order: n as u32,
        cert: best,
    }
}
