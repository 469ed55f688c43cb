//! Blossom matching, Gallai–Edmonds decomposition and König covers.
//!
//! `cargo run --example matching [GRAPH6]`

use turan_blowup::graph::{disjoint_union, named};
use turan_blowup::graph6;
use turan_blowup::matching::{bipartite_cover, gallai_edmonds, max_matching};
use turan_blowup::tree::{analyze_tree, star_of_stars};

fn main() -> turan_blowup::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(code) => graph6::decode(&code)?,
        // odd components, an even part and a nonempty S
        None => disjoint_union(&[named::star(3), named::cycle(5), named::path(4)])?,
    };
    let m = max_matching(&g);
    println!("graph {} on {} vertices: nu = {}", graph6::encode(&g), g.order(), m.size());
    println!("matching {:?}", m.edges);

    let ge = gallai_edmonds(&g);
    println!("S = {:?}", ge.s);
    println!("odd components  {:?}", ge.odd_components);
    println!("even components {:?}", ge.even_components);
    println!(
        "nu = (n + |S| - odd) / 2 = ({} + {} - {}) / 2: {}",
        g.order(),
        ge.s.len(),
        ge.odd_components.len(),
        ge.deficiency_identity_holds(g.order())
    );

    let t = star_of_stars(&[2, 2, 2]);
    let tree = analyze_tree(&t)?;
    let kc = bipartite_cover(&t, tree.class_a())?;
    println!(
        "tree S(2,2,2): |A| = {}, nu = {}, cover {:?}, Hall violator {:?}",
        tree.class_a().len(),
        kc.matching.size(),
        kc.cover,
        kc.hall_violator
    );
    let claw = named::star(3);
    let kc = bipartite_cover(&claw, &[1, 2, 3])?;
    println!("claw with leaves as X: Hall violator {:?}", kc.hall_violator);
    Ok(())
}
