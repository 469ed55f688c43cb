//! graph6 round trips and canonical forms.
//!
//! `cargo run --example graph6_canon [GRAPH6...]`

use turan_blowup::canon::{canonical_graph, is_isomorphic};
use turan_blowup::graph::named;
use turan_blowup::graph6;
use turan_blowup::tree::star_of_stars;

fn main() -> turan_blowup::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let graphs = if args.is_empty() {
        vec![
            ("P3", named::path(3)),
            ("P5", named::path(5)),
            ("P7", named::path(7)),
            ("K1,3", named::star(3)),
            ("K1,4", named::star(4)),
            ("S(2,2)", star_of_stars(&[2, 2])),
            ("S(2,3)", star_of_stars(&[2, 3])),
            ("S(2,2,2)", star_of_stars(&[2, 2, 2])),
            ("S(4,4,4)", star_of_stars(&[4, 4, 4])),
            ("Petersen", named::petersen()),
        ]
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect()
    } else {
        args.iter()
            .map(|s| Ok((s.clone(), graph6::decode(s)?)))
            .collect::<turan_blowup::Result<Vec<_>>>()?
    };
    for (name, g) in graphs {
        let code = graph6::encode(&g);
        let back = graph6::decode(&code)?;
        let canon = canonical_graph(&g);
        println!(
            "{name:<10} n={:<3} e={:<3} graph6={code:<12} canonical={:<12} round_trip={}",
            g.order(),
            g.edge_count(),
            graph6::encode(&canon),
            back == g && is_isomorphic(&canon, &g)
        );
    }
    Ok(())
}
