//! Turán graphs, almost-regular graphs, the `L`/`H` extremal constructions,
//! edge blow-ups and the embedding witness into `ℓP₂ ∨ K(2(p−1)ℓ; p−1)`.

use std::fmt;
use std::str::FromStr;

use crate::containment::verify_embedding;
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, join, named, Graph};
use crate::tree::Tree;

/// Part sizes of `T_{n,r}`, largest first.
pub fn turan_parts(n: usize, r: usize) -> Vec<usize> {
    assert!(r >= 1, "Turán graph needs at least one part");
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// Vertices are numbered part by part.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n = parts.iter().sum();
    let mut g = Graph::new(n)?;
    let mut starts = Vec::with_capacity(parts.len());
    let mut s = 0;
    for &p in parts {
        starts.push(s);
        s += p;
    }
    for (&si, &pi) in starts.iter().zip(parts) {
        for u in si..si + pi {
            for v in si + pi..n {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    complete_multipartite(&turan_parts(n, r))
}

/// `R(n, d)`: circulant on offsets `1..=⌊d/2⌋`, plus a near-antipodal matching for odd `d`.
/// When `n·d` is odd, vertex `n−1` is the one of degree `d−1`.
pub fn almost_regular(n: usize, d: usize) -> Result<Graph> {
    if d >= n {
        return Err(Error::Infeasible(format!("R({n}, {d}) needs d < n")));
    }
    let mut g = Graph::new(n)?;
    for i in 0..n {
        for off in 1..=d / 2 {
            g.add_edge(i, (i + off) % n);
        }
    }
    if d % 2 == 1 {
        let half = n / 2;
        for i in 0..half {
            // n even: antipodal; n odd: pairs i, i+(n-1)/2 leaving n-1 short
            g.add_edge(i, i + half);
        }
    }
    Ok(g)
}

/// Adds `payload` on the lowest-indexed vertices of class `class` (0-based).
pub fn embed_in_class(parts: &[usize], class: usize, payload: &Graph) -> Result<Graph> {
    let mut g = complete_multipartite(parts)?;
    let size = *parts
        .get(class)
        .ok_or_else(|| Error::InvalidSpec(format!("class {class} out of {}", parts.len())))?;
    if payload.order() > size {
        return Err(Error::PayloadTooLarge {
            payload: payload.order(),
            class: size,
        });
    }
    let off: usize = parts[..class].iter().sum();
    for (u, v) in payload.edges() {
        g.add_edge(off + u, off + v);
    }
    Ok(g)
}

/// `R(2k−1, k−1)`.
pub fn payload_l1(k: usize) -> Result<Graph> {
    almost_regular(2 * k - 1, k - 1)
}

/// `R(k+1, k−1) ∪ K_{k−1}` for even `k`, `2K_k` for odd `k`.
pub fn payload_l2(k: usize) -> Result<Graph> {
    if k % 2 == 0 {
        disjoint_union(&[almost_regular(k + 1, k - 1)?, named::complete(k - 1)])
    } else {
        disjoint_union(&[named::complete(k), named::complete(k)])
    }
}

/// One-line description of a construction; parses from and prints as e.g.
/// `H1 n=20 p=3 a=2 k=2`. `class=` (0-based) is printed only when nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionSpec {
    Turan { n: usize, r: usize },
    AlmostRegular { n: usize, d: usize },
    CompleteMultipartite { parts: Vec<usize> },
    L1 { n: usize, p: usize, k: usize, class: usize },
    L2 { n: usize, p: usize, k: usize, class: usize },
    H1 { n: usize, p: usize, a: usize, k: usize, class: usize },
    H2 { n: usize, p: usize, a: usize, k: usize, class: usize },
    H2Rd { n: usize, p: usize, a: usize, d: usize, k: usize, class: usize },
}

impl ConstructionSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            ConstructionSpec::Turan { .. } => "TURAN",
            ConstructionSpec::AlmostRegular { .. } => "ALMOST_REGULAR",
            ConstructionSpec::CompleteMultipartite { .. } => "COMPLETE_MULTIPARTITE",
            ConstructionSpec::L1 { .. } => "L1",
            ConstructionSpec::L2 { .. } => "L2",
            ConstructionSpec::H1 { .. } => "H1",
            ConstructionSpec::H2 { .. } => "H2",
            ConstructionSpec::H2Rd { .. } => "H2_RD",
        }
    }

    /// Same construction with the payload in another class.
    pub fn with_class(&self, c: usize) -> ConstructionSpec {
        let mut s = self.clone();
        match &mut s {
            ConstructionSpec::L1 { class, .. }
            | ConstructionSpec::L2 { class, .. }
            | ConstructionSpec::H1 { class, .. }
            | ConstructionSpec::H2 { class, .. }
            | ConstructionSpec::H2Rd { class, .. } => *class = c,
            _ => {}
        }
        s
    }

    /// `(order of the multipartite part, p, payload order, class)` for payload kinds.
    fn payload_layout(&self) -> Option<(usize, usize, usize, usize)> {
        let l1 = |k: usize| (2 * k).saturating_sub(1);
        let l2 = |k: usize| 2 * k;
        match *self {
            ConstructionSpec::L1 { n, p, k, class } => Some((n, p, l1(k), class)),
            ConstructionSpec::L2 { n, p, k, class } => Some((n, p, l2(k), class)),
            ConstructionSpec::H1 { n, p, a, k, class } => {
                Some((n.saturating_sub(a.saturating_sub(1)), p, l1(k), class))
            }
            ConstructionSpec::H2 { n, p, a, k, class }
            | ConstructionSpec::H2Rd { n, p, a, k, class, .. } => {
                Some((n.saturating_sub(a.saturating_sub(1)), p, l2(k), class))
            }
            _ => None,
        }
    }

    /// Parameter-range and payload-fit checks, without building anything.
    pub fn check_feasible(&self) -> Result<()> {
        match *self {
            ConstructionSpec::Turan { r: 0, .. } => {
                return Err(Error::InvalidSpec("TURAN needs r >= 1".into()))
            }
            ConstructionSpec::AlmostRegular { n, d } if d >= n => {
                return Err(Error::Infeasible(format!("R({n}, {d}) needs d < n")))
            }
            ConstructionSpec::L1 { p, k, .. } | ConstructionSpec::L2 { p, k, .. }
                if p == 0 || k == 0 =>
            {
                return Err(Error::InvalidSpec("need p >= 1 and k >= 1".into()))
            }
            ConstructionSpec::H1 { n, p, a, k, .. } | ConstructionSpec::H2 { n, p, a, k, .. }
                if p == 0 || k == 0 || a == 0 || n < a =>
            {
                return Err(Error::InvalidSpec("need p, k, a >= 1 and n >= a".into()))
            }
            ConstructionSpec::H2Rd { n, p, a, d, k, .. } => {
                if p == 0 || k == 0 || a == 0 || n < a {
                    return Err(Error::InvalidSpec("need p, k, a >= 1 and n >= a".into()));
                }
                if d >= a - 1 && a > 1 || a == 1 && d > 0 {
                    return Err(Error::Infeasible(format!("R({}, {d}) needs d < {}", a - 1, a - 1)));
                }
            }
            _ => {}
        }
        if let Some((m, p, need, class)) = self.payload_layout() {
            if class >= p {
                return Err(Error::InvalidSpec(format!("class {class} out of {p}")));
            }
            let size = turan_parts(m, p)[class];
            if need > size {
                return Err(Error::PayloadTooLarge {
                    payload: need,
                    class: size,
                });
            }
        }
        Ok(())
    }

    /// Smallest `n` for which the payload fits, keeping every other parameter.
    pub fn min_feasible_n(&self) -> Option<usize> {
        let (_, p, need, class) = self.payload_layout()?;
        if class >= p {
            return None;
        }
        let base = match *self {
            ConstructionSpec::H1 { a, .. }
            | ConstructionSpec::H2 { a, .. }
            | ConstructionSpec::H2Rd { a, .. } => a.saturating_sub(1),
            _ => 0,
        };
        let mut m = need;
        while turan_parts(m, p)[class] < need {
            m += 1;
        }
        Some(base + m)
    }

    pub fn build(&self) -> Result<Graph> {
        self.check_feasible()?;
        match self {
            ConstructionSpec::Turan { n, r } => turan_graph(*n, *r),
            ConstructionSpec::AlmostRegular { n, d } => almost_regular(*n, *d),
            ConstructionSpec::CompleteMultipartite { parts } => complete_multipartite(parts),
            &ConstructionSpec::L1 { n, p, k, class } => {
                embed_in_class(&turan_parts(n, p), class, &payload_l1(k)?)
            }
            &ConstructionSpec::L2 { n, p, k, class } => {
                embed_in_class(&turan_parts(n, p), class, &payload_l2(k)?)
            }
            &ConstructionSpec::H1 { n, p, a, k, class } => {
                let l = ConstructionSpec::L1 { n: n - a + 1, p, k, class }.build()?;
                join(&named::complete(a - 1), &l)
            }
            &ConstructionSpec::H2 { n, p, a, k, class } => {
                let l = ConstructionSpec::L2 { n: n - a + 1, p, k, class }.build()?;
                join(&named::complete(a - 1), &l)
            }
            &ConstructionSpec::H2Rd { n, p, a, d, k, class } => {
                let l = ConstructionSpec::L2 { n: n - a + 1, p, k, class }.build()?;
                let r = if a == 1 { named::empty(0) } else { almost_regular(a - 1, d)? };
                join(&r, &l)
            }
        }
    }
}

/// Builds the graph described by `spec`.
pub fn build(spec: &ConstructionSpec) -> Result<Graph> {
    spec.build()
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind())?;
        let class = match *self {
            ConstructionSpec::Turan { n, r } => return write!(f, " n={n} r={r}"),
            ConstructionSpec::AlmostRegular { n, d } => return write!(f, " n={n} d={d}"),
            ConstructionSpec::CompleteMultipartite { ref parts } => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                return write!(f, " parts={}", s.join(","));
            }
            ConstructionSpec::L1 { n, p, k, class } | ConstructionSpec::L2 { n, p, k, class } => {
                write!(f, " n={n} p={p} k={k}")?;
                class
            }
            ConstructionSpec::H1 { n, p, a, k, class }
            | ConstructionSpec::H2 { n, p, a, k, class } => {
                write!(f, " n={n} p={p} a={a} k={k}")?;
                class
            }
            ConstructionSpec::H2Rd { n, p, a, d, k, class } => {
                write!(f, " n={n} p={p} a={a} d={d} k={k}")?;
                class
            }
        };
        if class != 0 {
            write!(f, " class={class}")?;
        }
        Ok(())
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let kind = words
            .next()
            .ok_or_else(|| Error::InvalidSpec("empty spec".into()))?
            .to_ascii_uppercase();
        let mut fields: Vec<(&str, &str)> = Vec::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| Error::InvalidSpec(format!("expected key=value, got {w:?}")))?;
            if fields.iter().any(|(seen, _)| *seen == k) {
                return Err(Error::InvalidSpec(format!("duplicate key {k:?}")));
            }
            fields.push((k, v));
        }
        let mut take = |key: &str, default: Option<usize>| -> Result<usize> {
            match fields.iter().position(|(k, _)| *k == key) {
                Some(i) => {
                    let (_, v) = fields.remove(i);
                    v.parse()
                        .map_err(|_| Error::InvalidSpec(format!("{key}={v:?} is not an integer")))
                }
                None => default
                    .ok_or_else(|| Error::InvalidSpec(format!("{kind} needs {key}="))),
            }
        };
        let spec = match kind.as_str() {
            "TURAN" => ConstructionSpec::Turan { n: take("n", None)?, r: take("r", None)? },
            "ALMOST_REGULAR" => {
                ConstructionSpec::AlmostRegular { n: take("n", None)?, d: take("d", None)? }
            }
            "COMPLETE_MULTIPARTITE" => {
                let i = fields.iter().position(|(k, _)| *k == "parts").ok_or_else(|| {
                    Error::InvalidSpec("COMPLETE_MULTIPARTITE needs parts=".into())
                })?;
                let (_, v) = fields.remove(i);
                let parts = v
                    .split(',')
                    .filter(|x| !x.is_empty())
                    .map(|x| {
                        x.parse()
                            .map_err(|_| Error::InvalidSpec(format!("bad part size {x:?}")))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                ConstructionSpec::CompleteMultipartite { parts }
            }
            "L1" => ConstructionSpec::L1 {
                n: take("n", None)?,
                p: take("p", None)?,
                k: take("k", None)?,
                class: take("class", Some(0))?,
            },
            "L2" => ConstructionSpec::L2 {
                n: take("n", None)?,
                p: take("p", None)?,
                k: take("k", None)?,
                class: take("class", Some(0))?,
            },
            "H1" => ConstructionSpec::H1 {
                n: take("n", None)?,
                p: take("p", None)?,
                a: take("a", None)?,
                k: take("k", None)?,
                class: take("class", Some(0))?,
            },
            "H2" => ConstructionSpec::H2 {
                n: take("n", None)?,
                p: take("p", None)?,
                a: take("a", None)?,
                k: take("k", None)?,
                class: take("class", Some(0))?,
            },
            "H2_RD" => ConstructionSpec::H2Rd {
                n: take("n", None)?,
                p: take("p", None)?,
                a: take("a", None)?,
                d: take("d", None)?,
                k: take("k", None)?,
                class: take("class", Some(0))?,
            },
            other => return Err(Error::InvalidSpec(format!("unknown construction {other:?}"))),
        };
        if let Some((k, _)) = fields.first() {
            return Err(Error::InvalidSpec(format!("unexpected key {k:?} for {kind}")));
        }
        Ok(spec)
    }
}

/// `F^{q}`: every edge of `f` becomes a `K_q` on its endpoints plus `q−2` new
/// vertices. New vertices follow the originals, edge by edge in
/// lexicographic order.
pub fn edge_blowup(f: &Graph, q: usize) -> Result<Graph> {
    if q < 2 {
        return Err(Error::Infeasible(format!("clique size q = {q} must be >= 2")));
    }
    let edges: Vec<(usize, usize)> = f.edges().collect();
    let n = f.order();
    let mut g = Graph::new(n + edges.len() * (q - 2))?;
    for (i, &(u, v)) in edges.iter().enumerate() {
        let mut clique = vec![u, v];
        clique.extend((0..q - 2).map(|j| n + i * (q - 2) + j));
        for (x, &s) in clique.iter().enumerate() {
            for &t in &clique[x + 1..] {
                g.add_edge(s, t);
            }
        }
    }
    Ok(g)
}

/// An embedding of `T^{p+1}` into `ℓP₂ ∨ K(2(p−1)ℓ; p−1)`, `ℓ = |V(T^{p+1})|`.
#[derive(Clone, Debug)]
pub struct Lemma21Witness {
    pub pattern: Graph,
    pub host: Graph,
    /// `map[v]` is the host image of pattern vertex `v`.
    pub map: Vec<usize>,
    pub ell: usize,
}

impl Lemma21Witness {
    pub fn verify(&self) -> bool {
        verify_embedding(&self.host, &self.pattern, &self.map)
    }
}

/// Host layout: the matching `ℓP₂` on `0..2ℓ` (pairs `2i, 2i+1`), then
/// classes `S₁, …, S_{p−1}` of size `2ℓ` each.
pub fn lemma21_host(ell: usize, p: usize) -> Result<Graph> {
    let mut parts = vec![2 * ell; p - 1];
    parts.insert(0, 2 * ell);
    let mut g = complete_multipartite(&parts)?;
    for i in 0..ell {
        g.add_edge(2 * i, 2 * i + 1);
    }
    Ok(g)
}

/// The constructive embedding: `A → S₁`, `B → S₂`, and edge `eᵢ` of `T` gets
/// `S₃[i], …, S_{p−1}[i]` plus the matching edge `{2i, 2i+1}`.
pub fn lemma21_witness(t: &Tree, p: usize) -> Result<Lemma21Witness> {
    if p < 3 {
        return Err(Error::Infeasible(format!("p = {p}: witness needs p >= 3")));
    }
    let f = t.graph();
    let pattern = edge_blowup(f, p + 1)?;
    let ell = pattern.order();
    let host = lemma21_host(ell, p)?;
    let class_start = |c: usize| 2 * ell * c; // c = 1 is S₁
    let n = f.order();
    let mut map = vec![usize::MAX; ell];
    for v in 0..n {
        map[v] = if t.in_a(v) { class_start(1) + v } else { class_start(2) + v };
    }
    for i in 0..f.edge_count() {
        let base = n + i * (p - 1);
        for j in 0..p - 3 {
            map[base + j] = class_start(3 + j) + i;
        }
        map[base + p - 3] = 2 * i;
        map[base + p - 2] = 2 * i + 1;
    }
    Ok(Lemma21Witness {
        pattern,
        host,
        map,
        ell,
    })
}
