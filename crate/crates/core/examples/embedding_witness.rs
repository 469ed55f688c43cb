//! The explicit embedding of T^{p+1} into a matching joined with a complete
//! multipartite graph.
//!
//! `cargo run --example embedding_witness [GRAPH6 [P]]`

use turan_blowup::construct::lemma21_witness;
use turan_blowup::graph6;
use turan_blowup::tree::{analyze_tree, star_of_stars};

fn main() -> turan_blowup::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let t = match args.first() {
        Some(code) => graph6::decode(code)?,
        None => star_of_stars(&[2, 2]),
    };
    let p: usize = args.get(1).map_or(3, |s| s.parse().expect("integer p"));
    let w = lemma21_witness(&analyze_tree(&t)?, p)?;
    println!(
        "T^{} on {} vertices into a host on {} vertices / {} edges (ell = {})",
        p + 1,
        w.pattern.order(),
        w.host.order(),
        w.host.edge_count(),
        w.ell
    );
    println!("verified: {}", w.verify());
    for (v, x) in w.map.iter().enumerate().take(t.order()) {
        println!("    tree vertex {v} -> host {x}");
    }
    Ok(())
}
