//! Census results against labeled-enumeration oracles.

use std::collections::{BTreeMap, BTreeSet};

use turan_blowup::canon::{canonical_form, canonical_form_exhaustive, is_isomorphic};
use turan_blowup::construct::almost_regular;
use turan_blowup::containment::{is_free, ForbiddenFamily, DEFAULT_BUDGET};
use turan_blowup::graph::{disjoint_union, named};
use turan_blowup::search::{generate_free_graphs, max_edges_free, CensusMode, CensusQuery};
use turan_blowup::{CanonicalForm, Graph};

fn has_triangle(g: &Graph) -> bool {
    let n = g.order();
    (0..n).any(|u| {
        (u + 1..n).any(|v| g.has_edge(u, v) && (v + 1..n).any(|w| g.has_edge(u, w) && g.has_edge(v, w)))
    })
}

/// Triangle-free classes on exactly `n` vertices, bucketed by edge count.
/// Triangle-freeness survives edge deletion, so extending edge sets in index
/// order visits every labeled triangle-free graph once. Labeled graphs are
/// grouped by refinement certificate; one representative per group is then
/// keyed by the permutation-exhaustive form, which must not collide.
fn triangle_free_oracle(n: usize) -> BTreeMap<usize, BTreeSet<CanonicalForm>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    fn go(g: &mut Graph, pairs: &[(usize, usize)], from: usize, reps: &mut BTreeMap<CanonicalForm, Graph>) {
        reps.entry(canonical_form(g)).or_insert_with(|| g.clone());
        for j in from..pairs.len() {
            let (u, v) = pairs[j];
            g.add_edge(u, v);
            if !has_triangle(g) {
                go(g, pairs, j + 1, reps);
            }
            g.remove_edge(u, v);
        }
    }
    let mut reps = BTreeMap::new();
    go(&mut Graph::new(n).unwrap(), &pairs, 0, &mut reps);
    let mut out: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
    for g in reps.values() {
        let fresh = out
            .entry(g.edge_count())
            .or_default()
            .insert(canonical_form_exhaustive(g));
        assert!(fresh, "refinement certificate split an isomorphism class");
    }
    out
}

fn pad(g: &Graph, n: usize) -> Graph {
    disjoint_union(&[g.clone(), named::empty(n - g.order())]).unwrap()
}

#[test]
fn triangle_free_census_matches_labeled_oracle() {
    let k3 = ForbiddenFamily::new("K3", vec![named::complete(3)]).unwrap();
    for n in 1..=7 {
        let graphs = generate_free_graphs(&CensusQuery::new(k3.clone(), n)).unwrap();
        let mut census: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
        for g in &graphs {
            assert!(g.order() <= n);
            census
                .entry(g.edge_count())
                .or_default()
                .insert(canonical_form_exhaustive(&pad(g, n)));
        }
        let total: usize = census.values().map(BTreeSet::len).sum();
        assert_eq!(total, graphs.len(), "duplicate classes at n={n}");
        assert_eq!(census, triangle_free_oracle(n), "n={n}");
    }
}

#[test]
fn triangle_free_class_counts() {
    // unlabeled triangle-free graphs on n vertices
    let expected = [1, 2, 3, 7, 14, 38, 107];
    let k3 = ForbiddenFamily::new("K3", vec![named::complete(3)]).unwrap();
    for (i, &want) in expected.iter().enumerate() {
        let got = generate_free_graphs(&CensusQuery::new(k3.clone(), i + 1)).unwrap().len();
        assert_eq!(got, want, "n={}", i + 1);
    }
}

#[test]
fn extremal_graphs_are_free() {
    for family in ["aux:k=3", "aux:k=4", "ahs:k=3", "ch:nu=2,delta=3", "g6:Ch"] {
        let f: ForbiddenFamily = family.parse().unwrap();
        let r = max_edges_free(&CensusQuery::new(f.clone(), 14)).unwrap();
        assert!(r.complete, "{family}");
        assert!(!r.extremal_graphs.is_empty());
        for g in &r.extremal_graphs {
            assert_eq!(g.edge_count(), r.best_edges);
            assert!(is_free(g, &f, DEFAULT_BUDGET).is_free(), "{family}");
        }
    }
}

#[test]
fn star_matching_family_extremals() {
    // k = 2: R(3,1) with t = 0
    let r = max_edges_free(&CensusQuery::new(ForbiddenFamily::ahs(2).unwrap(), 12)).unwrap();
    assert_eq!(r.best_edges, 1);
    let r31 = almost_regular(3, 1).unwrap().without_isolated();
    assert!(r.extremal_graphs.iter().any(|g| is_isomorphic(&g.without_isolated(), &r31)));

    // k = 3: 2K_3
    let r = max_edges_free(&CensusQuery::new(ForbiddenFamily::ahs(3).unwrap(), 12)).unwrap();
    assert_eq!(r.best_edges, 6);
    let two_k3 = disjoint_union(&[named::complete(3), named::complete(3)]).unwrap();
    assert!(r.extremal_graphs.iter().any(|g| is_isomorphic(g, &two_k3)));

    // k = 4: R(7−2t, 3) ∪ tK_{1,3} for t ∈ {0, 1}, and R(5,3) ∪ K_3
    let r = max_edges_free(&CensusQuery::new(ForbiddenFamily::ahs(4).unwrap(), 24)).unwrap();
    assert_eq!(r.best_edges, 10);
    let named_graphs = [
        almost_regular(7, 3).unwrap(),
        disjoint_union(&[almost_regular(5, 3).unwrap(), named::star(3)]).unwrap(),
        disjoint_union(&[almost_regular(5, 3).unwrap(), named::complete(3)]).unwrap(),
    ];
    for h in &named_graphs {
        assert!(
            r.extremal_graphs.iter().any(|g| is_isomorphic(g, h)),
            "missing {}",
            turan_blowup::graph6::encode(h)
        );
    }
}

#[test]
fn parallel_and_sequential_agree() {
    for family in ["aux:k=4", "ch:nu=3,delta=2", "g6:Ch"] {
        let f: ForbiddenFamily = family.parse().unwrap();
        let mut q = CensusQuery::new(f, 12);
        let par = max_edges_free(&q).unwrap();
        q.parallel = false;
        assert_eq!(par, max_edges_free(&q).unwrap(), "{family}");
        q.mode = CensusMode::MaxEdges;
        assert_eq!(max_edges_free(&q).unwrap().best_edges, par.best_edges);
    }
}
