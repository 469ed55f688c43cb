//! Subgraph (not induced) search and forbidden-family checks.
//!
//! [`find_subgraph`] runs cheap refutations first (order, size, degree
//! sequence, matching number), then fast paths for stars, matchings and
//! `2K_{1,t}`, then a backtracking search. The backtracking search maps
//! pattern vertices in a connectivity-first, degree-descending order and
//! intersects host neighbourhood bitsets to get candidates. Host twins
//! (`N(x)∖{y} = N(y)∖{x}`) are interchangeable, so only the lowest unused
//! member of a twin class is tried; pattern twins are mapped to host twin
//! classes in nondecreasing order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{named, popcount_and, test_bit, words_for, Graph, Ones};
use crate::graph6;
use crate::matching::{matching_number, max_matching};
use crate::tree::splitting_family;

/// Default node-expansion budget for one pattern search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// `map[v]` is the host image of pattern vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl fmt::Display for Embedding {
    /// `0->3 1->5 ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}->{x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Embedding),
    NotFound,
    BudgetExceeded,
}

/// Checks that `map` is injective and sends every pattern edge to a host edge.
pub fn verify_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.order() {
        return false;
    }
    let mut seen = vec![false; host.order()];
    for &x in map {
        if x >= host.order() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    pattern.edges().all(|(u, v)| host.has_edge(map[u], map[v]))
}

/// Twin-class index per vertex; classes are numbered by their smallest vertex.
pub fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    let mut a = vec![0u64; g.stride()];
    let mut b = vec![0u64; g.stride()];
    for v in 0..n {
        for (c, &r) in reps.iter().enumerate() {
            if g.degree(r) != g.degree(v) {
                continue;
            }
            a.copy_from_slice(g.row(v));
            b.copy_from_slice(g.row(r));
            a[r / 64] &= !(1 << (r % 64));
            b[v / 64] &= !(1 << (v % 64));
            if a == b {
                class[v] = c;
                break;
            }
        }
        if class[v] == usize::MAX {
            class[v] = reps.len();
            reps.push(v);
        }
    }
    class
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Star(usize),
    Matching(usize),
    DoubleStar(usize),
    General,
}

/// Shape of the graph induced on its non-isolated vertices.
fn shape(core: &Graph) -> Shape {
    let n = core.order();
    let e = core.edge_count();
    let deg = core.degrees();
    if n == 0 {
        return Shape::General;
    }
    if deg.iter().all(|&d| d == 1) {
        return Shape::Matching(e);
    }
    let big: Vec<usize> = (0..n).filter(|&v| deg[v] > 1).collect();
    let leaves_ok = |centres: &[usize]| {
        (0..n).all(|v| centres.contains(&v) || deg[v] == 1)
            && core.edges().all(|(u, v)| centres.contains(&u) ^ centres.contains(&v))
    };
    if big.len() == 1 && n == e + 1 && leaves_ok(&big) {
        return Shape::Star(e);
    }
    if big.len() == 2 && deg[big[0]] == deg[big[1]] && n == e + 2 && leaves_ok(&big) {
        return Shape::DoubleStar(deg[big[0]]);
    }
    Shape::General
}

fn star_embedding(host: &Graph, t: usize) -> Option<Vec<usize>> {
    let c = (0..host.order()).find(|&v| host.degree(v) >= t)?;
    let mut m = vec![c];
    m.extend(host.neighbors(c).take(t));
    Some(m)
}

/// Two vertex-disjoint stars `K_{1,t}`: centres then leaves, in the pattern's
/// component order.
fn double_star_embedding(host: &Graph, t: usize) -> Option<(usize, usize, Vec<usize>, Vec<usize>)> {
    let n = host.order();
    let stride = host.stride();
    let mut union = vec![0u64; stride];
    for u in 0..n {
        if host.degree(u) < t {
            continue;
        }
        for v in u + 1..n {
            let dv = host.degree(v);
            let adj = host.has_edge(u, v) as usize;
            if host.degree(u) - adj < t || dv - adj < t {
                continue;
            }
            for (w, (a, b)) in union.iter_mut().zip(host.row(u).iter().zip(host.row(v))) {
                *w = a | b;
            }
            let mut size: usize = union.iter().map(|w| w.count_ones() as usize).sum();
            size -= test_bit(&union, u) as usize + test_bit(&union, v) as usize;
            if size < 2 * t {
                continue;
            }
            let nu: Vec<usize> = host.neighbors(u).filter(|&x| x != v).collect();
            let nv: Vec<usize> = host.neighbors(v).filter(|&x| x != u).collect();
            let shared = |x: &usize| host.has_edge(*x, u) && host.has_edge(*x, v);
            let mut lu: Vec<usize> = nu.iter().copied().filter(|x| !shared(x)).take(t).collect();
            let mut lv: Vec<usize> = nv.iter().copied().filter(|x| !shared(x)).take(t).collect();
            let mut common = nu.iter().copied().filter(shared);
            while lu.len() < t {
                lu.push(common.next().expect("counted above"));
            }
            while lv.len() < t {
                lv.push(common.next().expect("counted above"));
            }
            return Some((u, v, lu, lv));
        }
    }
    None
}

struct Matcher<'a> {
    host: &'a Graph,
    order: Vec<usize>,
    earlier: Vec<Vec<usize>>,
    /// position in `order` of the previous pattern twin, if any
    twin_prev: Vec<Option<usize>>,
    pdeg: Vec<usize>,
    hdeg: Vec<usize>,
    hclass: Vec<usize>,
    members: Vec<Vec<u64>>,
    map: Vec<usize>,
    used: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &Graph, core: &[usize], budget: u64) -> Self {
        let pn = pattern.order();
        let pdeg = pattern.degrees();
        // connectivity-first, then degree, then index
        let mut order = Vec::with_capacity(core.len());
        let mut placed = vec![false; pn];
        let mut links = vec![0usize; pn];
        while order.len() < core.len() {
            let next = core
                .iter()
                .copied()
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (links[v], pdeg[v], std::cmp::Reverse(v)))
                .expect("unplaced vertex");
            placed[next] = true;
            order.push(next);
            for w in pattern.neighbors(next) {
                links[w] += 1;
            }
        }
        let mut pos = vec![usize::MAX; pn];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let earlier = order
            .iter()
            .enumerate()
            .map(|(i, &v)| pattern.neighbors(v).filter(|&w| pos[w] < i).collect())
            .collect();
        let pclass = twin_classes(pattern);
        let mut last_in_class: Vec<Option<usize>> = vec![None; pn];
        let mut twin_prev = Vec::with_capacity(order.len());
        for (i, &v) in order.iter().enumerate() {
            twin_prev.push(last_in_class[pclass[v]]);
            last_in_class[pclass[v]] = Some(i);
        }
        let hclass = twin_classes(host);
        let nclasses = hclass.iter().max().map_or(0, |c| c + 1);
        let stride = words_for(host.order());
        let mut members = vec![vec![0u64; stride]; nclasses];
        for (x, &c) in hclass.iter().enumerate() {
            members[c][x / 64] |= 1 << (x % 64);
        }
        Matcher {
            host,
            order,
            earlier,
            twin_prev,
            pdeg,
            hdeg: host.degrees(),
            hclass,
            members,
            map: vec![usize::MAX; pn],
            used: vec![0u64; stride],
            nodes: 0,
            budget,
        }
    }

    fn lowest_unused(&self, c: usize) -> Option<usize> {
        self.members[c]
            .iter()
            .zip(&self.used)
            .enumerate()
            .find_map(|(i, (&m, &u))| {
                let free = m & !u;
                (free != 0).then(|| i * 64 + free.trailing_zeros() as usize)
            })
    }

    /// `Some(true)` on success, `None` when the budget runs out.
    fn search(&mut self, i: usize) -> Option<bool> {
        if i == self.order.len() {
            return Some(true);
        }
        let u = self.order[i];
        let n = self.host.order();
        let mut cand: Vec<u64> = match self.earlier[i].first() {
            Some(&w) => self.host.row(self.map[w]).to_vec(),
            None => {
                let mut all = vec![!0u64; words_for(n)];
                if n % 64 != 0 {
                    *all.last_mut().expect("n > 0") = (1u64 << (n % 64)) - 1;
                }
                all
            }
        };
        for &w in self.earlier[i].iter().skip(1) {
            for (c, r) in cand.iter_mut().zip(self.host.row(self.map[w])) {
                *c &= r;
            }
        }
        for (c, &us) in cand.iter_mut().zip(&self.used) {
            *c &= !us;
        }
        let min_class = self.twin_prev[i].map(|j| self.hclass[self.map[self.order[j]]]);
        let need_free = self.pdeg[u] - self.earlier[i].len();
        let cands: Vec<usize> = Ones::new(&cand).collect();
        for x in cands {
            if self.hdeg[x] < self.pdeg[u] {
                continue;
            }
            let c = self.hclass[x];
            if min_class.is_some_and(|m| c < m) || self.lowest_unused(c) != Some(x) {
                continue;
            }
            let free_nbrs = self.hdeg[x] - popcount_and(self.host.row(x), &self.used);
            if free_nbrs < need_free {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.map[u] = x;
            self.used[x / 64] |= 1 << (x % 64);
            let r = self.search(i + 1);
            self.used[x / 64] &= !(1 << (x % 64));
            match r {
                Some(false) => {}
                other => return other,
            }
        }
        self.map[u] = usize::MAX;
        Some(false)
    }
}

/// Decides whether `pattern` is a (not necessarily induced) subgraph of `host`.
///
/// `budget` bounds the number of backtracking node expansions; a budget of 0
/// always yields [`SearchOutcome::BudgetExceeded`].
pub fn find_subgraph(host: &Graph, pattern: &Graph, budget: u64) -> SearchOutcome {
    if budget == 0 {
        return SearchOutcome::BudgetExceeded;
    }
    let (hn, pn) = (host.order(), pattern.order());
    if pn > hn || pattern.edge_count() > host.edge_count() {
        return SearchOutcome::NotFound;
    }
    let mut hd = host.degrees();
    let mut pd = pattern.degrees();
    hd.sort_unstable_by(|a, b| b.cmp(a));
    pd.sort_unstable_by(|a, b| b.cmp(a));
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return SearchOutcome::NotFound;
    }
    let core: Vec<usize> = (0..pn).filter(|&v| pattern.degree(v) > 0).collect();
    let core_graph = pattern.induced_subgraph(&core);
    let core_map: Option<Vec<usize>> = match shape(&core_graph) {
        Shape::Star(t) => star_embedding(host, t).map(|imgs| {
            let centre = (0..core.len())
                .max_by_key(|&v| core_graph.degree(v))
                .expect("non-empty");
            let mut m = vec![usize::MAX; core.len()];
            m[centre] = imgs[0];
            for (leaf, &img) in (0..core.len()).filter(|&v| v != centre).zip(&imgs[1..]) {
                m[leaf] = img;
            }
            m
        }),
        Shape::Matching(t) => {
            let mm = max_matching(host);
            (mm.size() >= t).then(|| {
                let mut m = vec![usize::MAX; core.len()];
                for ((a, b), &(x, y)) in core_graph.edges().zip(&mm.edges) {
                    m[a] = x;
                    m[b] = y;
                }
                m
            })
        }
        Shape::DoubleStar(t) => double_star_embedding(host, t).map(|(u, v, lu, lv)| {
            let mut m = vec![usize::MAX; core.len()];
            let comps = core_graph.components();
            for (comp, (c, leaves)) in comps.iter().zip([(u, lu), (v, lv)]) {
                let centre = *comp.iter().find(|&&x| core_graph.degree(x) > 1).expect("centre");
                m[centre] = c;
                for (&leaf, &img) in comp.iter().filter(|&&x| x != centre).zip(&leaves) {
                    m[leaf] = img;
                }
            }
            m
        }),
        Shape::General => {
            if matching_number(&core_graph) > matching_number(host) {
                return SearchOutcome::NotFound;
            }
            let core_ids: Vec<usize> = (0..core.len()).collect();
            let mut m = Matcher::new(host, &core_graph, &core_ids, budget);
            match m.search(0) {
                None => return SearchOutcome::BudgetExceeded,
                Some(false) => None,
                Some(true) => Some(m.map),
            }
        }
    };
    let Some(core_map) = core_map else {
        return SearchOutcome::NotFound;
    };
    let mut map = vec![usize::MAX; pn];
    let mut taken = vec![false; hn];
    for (i, &v) in core.iter().enumerate() {
        map[v] = core_map[i];
        taken[core_map[i]] = true;
    }
    let mut spare = (0..hn).filter(|&x| !taken[x]);
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = spare.next().expect("order checked");
    }
    debug_assert!(verify_embedding(host, pattern, &map));
    SearchOutcome::Found(Embedding { map })
}

/// A named list of forbidden patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenFamily {
    name: String,
    patterns: Vec<Graph>,
}

impl ForbiddenFamily {
    pub fn new(name: impl Into<String>, patterns: Vec<Graph>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidFamily("empty family".into()));
        }
        if let Some(i) = patterns.iter().position(|p| p.edge_count() == 0) {
            return Err(Error::InvalidFamily(format!("pattern {i} has no edges")));
        }
        Ok(ForbiddenFamily {
            name: name.into(),
            patterns,
        })
    }

    /// `{K_{1,k}, kK₂, 2K_{1,k−1}}`.
    pub fn aux(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidFamily("aux family needs k >= 2".into()));
        }
        Self::new(
            format!("{{K_1,{k}, {k}K_2, 2K_1,{}}}", k - 1),
            vec![named::star(k), named::matching(k), named::double_star_forest(k - 1)],
        )
    }

    /// `{K_{1,k}, kK₂}`.
    pub fn ahs(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidFamily("ahs family needs k >= 1".into()));
        }
        Self::new(
            format!("{{K_1,{k}, {k}K_2}}"),
            vec![named::star(k), named::matching(k)],
        )
    }

    /// `{K_{1,Δ+1}, (ν+1)K₂}`: graphs with matching number ≤ ν and maximum degree ≤ Δ.
    pub fn ch(nu: usize, delta: usize) -> Result<Self> {
        Self::new(
            format!("{{K_1,{}, {}K_2}}", delta + 1, nu + 1),
            vec![named::star(delta + 1), named::matching(nu + 1)],
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn patterns(&self) -> &[Graph] {
        &self.patterns
    }

    /// Maximum degree forced by a star pattern `K_{1,t}`: `t − 1`.
    pub fn delta_cap(&self) -> Option<usize> {
        self.patterns
            .iter()
            .filter_map(|p| match shape(&p.without_isolated()) {
                Shape::Star(t) => Some(t - 1),
                Shape::Matching(1) => Some(0),
                _ => None,
            })
            .min()
    }

    /// Matching number forced by a matching pattern `tK₂`: `t − 1`.
    pub fn nu_cap(&self) -> Option<usize> {
        self.patterns
            .iter()
            .filter_map(|p| match shape(&p.without_isolated()) {
                Shape::Matching(t) => Some(t - 1),
                _ => None,
            })
            .min()
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FromStr for ForbiddenFamily {
    type Err = Error;

    /// `aux:k=K`, `ahs:k=K`, `ch:nu=N,delta=D`, or `g6:<graph6>,<graph6>,...`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamily(format!("expected kind:args, got {s:?}")))?;
        let kv = |key: &str| -> Result<usize> {
            rest.split(',')
                .filter_map(|p| p.split_once('='))
                .find(|(k, _)| k.trim() == key)
                .ok_or_else(|| Error::InvalidFamily(format!("{kind} needs {key}=")))?
                .1
                .trim()
                .parse()
                .map_err(|_| Error::InvalidFamily(format!("{key} is not an integer")))
        };
        match kind {
            "aux" => Self::aux(kv("k")?),
            "ahs" => Self::ahs(kv("k")?),
            "ch" => Self::ch(kv("nu")?, kv("delta")?),
            "g6" => {
                let gs = rest
                    .split(',')
                    .filter(|x| !x.is_empty())
                    .map(graph6::decode)
                    .collect::<Result<Vec<_>>>()?;
                Self::new(format!("g6:{rest}"), gs)
            }
            other => Err(Error::InvalidFamily(format!("unknown family kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeOutcome {
    Free,
    /// `pattern` indexes the family's pattern list.
    NotFree { pattern: usize, embedding: Embedding },
    /// Patterns whose search ran out of budget, in family order.
    Unknown { patterns: Vec<usize> },
}

impl FreeOutcome {
    pub fn is_free(&self) -> bool {
        matches!(self, FreeOutcome::Free)
    }
}

/// Tries patterns in ascending edge count (then family order) with `budget`
/// per pattern; the first embedding found wins.
pub fn is_free(host: &Graph, family: &ForbiddenFamily, budget: u64) -> FreeOutcome {
    is_free_among(host, family.patterns(), budget)
}

fn is_free_among(host: &Graph, patterns: &[Graph], budget: u64) -> FreeOutcome {
    let mut idx: Vec<usize> = (0..patterns.len()).collect();
    idx.sort_by_key(|&i| (patterns[i].edge_count(), i));
    let mut unknown = Vec::new();
    for i in idx {
        match find_subgraph(host, &patterns[i], budget) {
            SearchOutcome::Found(embedding) => {
                return FreeOutcome::NotFree {
                    pattern: i,
                    embedding,
                }
            }
            SearchOutcome::NotFound => {}
            SearchOutcome::BudgetExceeded => unknown.push(i),
        }
    }
    if unknown.is_empty() {
        FreeOutcome::Free
    } else {
        unknown.sort_unstable();
        FreeOutcome::Unknown { patterns: unknown }
    }
}

/// Freeness against every member of the splitting family of `t`.
/// Members whose matching number exceeds the host's are refuted without search.
pub fn is_splitfamily_free(host: &Graph, t: &Graph, budget: u64, cap: usize) -> Result<FreeOutcome> {
    let family = splitting_family(t, None, cap)?;
    Ok(is_free_among(host, &family, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{edge_blowup, ConstructionSpec};
    use crate::graph::{disjoint_union, join, named::*};
    use proptest::prelude::*;

    /// Tries every injective map.
    fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
        fn go(h: &Graph, p: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let v = map.len();
            if v == p.order() {
                return true;
            }
            for x in 0..h.order() {
                if used[x] || (0..v).any(|u| p.has_edge(u, v) && !h.has_edge(map[u], x)) {
                    continue;
                }
                used[x] = true;
                map.push(x);
                if go(h, p, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
            false
        }
        go(host, pattern, &mut Vec::new(), &mut vec![false; host.order()])
    }

    fn random_graph(n: usize, seed: u64, dens: u64) -> Graph {
        let mut g = empty(n);
        let mut x = seed | 1;
        for u in 0..n {
            for v in u + 1..n {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                if x % 100 < dens {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn found(o: &SearchOutcome) -> bool {
        matches!(o, SearchOutcome::Found(_))
    }

    #[test]
    fn basic_examples() {
        let k3 = complete(3);
        assert_eq!(
            find_subgraph(&k3, &k3, 10),
            SearchOutcome::Found(Embedding { map: vec![0, 1, 2] })
        );
        assert_eq!(find_subgraph(&cycle(5), &k3, 1000), SearchOutcome::NotFound);
        assert_eq!(find_subgraph(&k3, &k3, 0), SearchOutcome::BudgetExceeded);
    }

    #[test]
    fn h1_is_free_of_p5_blowup() {
        let host = "H1 n=24 p=3 a=2 k=2".parse::<ConstructionSpec>().unwrap().build().unwrap();
        let pat = edge_blowup(&path(5), 4).unwrap();
        assert_eq!(find_subgraph(&host, &pat, DEFAULT_BUDGET), SearchOutcome::NotFound);
        let mut more = host.clone();
        // a second edge in the payload class creates the blow-up
        more.add_edge(2, 3);
        assert!(found(&find_subgraph(&more, &pat, DEFAULT_BUDGET)));
    }

    #[test]
    fn fast_paths_produce_valid_witnesses() {
        let host = random_graph(12, 99, 40);
        for p in [star(3), matching(3), double_star_forest(2), double_star_forest(3)] {
            let o = find_subgraph(&host, &p, 1000);
            assert_eq!(found(&o), brute_contains(&host, &p));
            if let SearchOutcome::Found(e) = o {
                assert!(verify_embedding(&host, &p, &e.map));
            }
        }
    }

    #[test]
    fn isolated_pattern_vertices() {
        let p = disjoint_union(&[complete(3), empty(2)]).unwrap();
        assert!(found(&find_subgraph(&complete(5), &p, 100)));
        assert_eq!(find_subgraph(&complete(4), &p, 100), SearchOutcome::NotFound);
    }

    #[test]
    fn twin_classes_examples() {
        assert_eq!(twin_classes(&complete(4)), vec![0, 0, 0, 0]);
        assert_eq!(twin_classes(&complete_bipartite(2, 3)), vec![0, 0, 1, 1, 1]);
        let p4 = twin_classes(&path(4));
        assert_eq!(p4, vec![0, 1, 2, 3]);
        assert_eq!(twin_classes(&matching(2)), vec![0, 0, 1, 1]);
    }

    #[test]
    fn family_examples() {
        let aux3 = ForbiddenFamily::aux(3).unwrap();
        let two_k3 = disjoint_union(&[complete(3), complete(3)]).unwrap();
        assert!(matches!(
            is_free(&two_k3, &aux3, 1000),
            FreeOutcome::NotFree { pattern: 2, .. }
        ));
        let r52 = crate::construct::almost_regular(5, 2).unwrap();
        assert_eq!(is_free(&r52, &aux3, 1000), FreeOutcome::Free);
        let fam = ForbiddenFamily::new("3K2", vec![matching(3)]).unwrap();
        assert!(!is_free(&matching(3), &fam, 10).is_free());
        assert!(matches!(is_free(&r52, &aux3, 0), FreeOutcome::Unknown { .. }));
    }

    #[test]
    fn family_parsing_and_caps() {
        let f: ForbiddenFamily = "aux:k=4".parse().unwrap();
        assert_eq!((f.delta_cap(), f.nu_cap()), (Some(3), Some(3)));
        let f: ForbiddenFamily = "ch:nu=2,delta=3".parse().unwrap();
        assert_eq!((f.delta_cap(), f.nu_cap()), (Some(3), Some(2)));
        let f: ForbiddenFamily = "g6:Bw".parse().unwrap();
        assert_eq!((f.delta_cap(), f.nu_cap()), (None, None));
        assert!("aux:k=1".parse::<ForbiddenFamily>().is_err());
        assert!("g6:@".parse::<ForbiddenFamily>().is_err());
        assert!("zzz:k=1".parse::<ForbiddenFamily>().is_err());
    }

    #[test]
    fn split_family_examples() {
        let t = path(5);
        assert!(!is_splitfamily_free(&t, &t, 1000, 1000).unwrap().is_free());
        // K_{a-1} ∨ empty(m) with a = 2
        for m in 1..=20 {
            let host = join(&complete(1), &empty(m)).unwrap();
            assert!(is_splitfamily_free(&host, &t, 10_000, 1000).unwrap().is_free());
        }
        // K_{a-1} ∨ R(3,1) is the C_1 part of H1 for a=2, k=2
        let c1 = join(&complete(1), &crate::construct::almost_regular(3, 1).unwrap()).unwrap();
        assert!(is_splitfamily_free(&c1, &t, 10_000, 1000).unwrap().is_free());
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(
            hn in 1usize..=8, pn in 1usize..=6,
            hs in any::<u64>(), ps in any::<u64>(),
            hd in 20u64..90, pd in 10u64..70,
        ) {
            let host = random_graph(hn, hs, hd);
            let pat = random_graph(pn, ps, pd);
            let o = find_subgraph(&host, &pat, DEFAULT_BUDGET);
            prop_assert_eq!(found(&o), brute_contains(&host, &pat));
            if let SearchOutcome::Found(e) = o {
                prop_assert!(verify_embedding(&host, &pat, &e.map));
            }
        }

        #[test]
        fn adding_edges_keeps_containment(
            hn in 2usize..=9, pn in 1usize..=6, hs in any::<u64>(), ps in any::<u64>(),
            u in 0usize..9, v in 0usize..9,
        ) {
            let mut host = random_graph(hn, hs, 50);
            let pat = random_graph(pn, ps, 40);
            let before = found(&find_subgraph(&host, &pat, DEFAULT_BUDGET));
            let (u, v) = (u % hn, v % hn);
            if u != v {
                host.add_edge(u, v);
            }
            let after = found(&find_subgraph(&host, &pat, DEFAULT_BUDGET));
            prop_assert!(!before || after);
        }

        #[test]
        fn prefilters_are_sound(hn in 1usize..=8, pn in 1usize..=6, hs in any::<u64>(), ps in any::<u64>()) {
            let host = random_graph(hn, hs, 35);
            let pat = random_graph(pn, ps, 50);
            if matching_number(&pat) > matching_number(&host)
                || pat.max_degree() > host.max_degree()
            {
                prop_assert!(!brute_contains(&host, &pat));
                prop_assert_eq!(find_subgraph(&host, &pat, DEFAULT_BUDGET), SearchOutcome::NotFound);
            }
        }
    }
}
