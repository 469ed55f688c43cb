//! Exhaustive censuses of family-free graphs.
//!
//! `cargo run --release --example census [FAMILY MAX_N]`, e.g. `aux:k=4 18`.

use std::time::Instant;

use turan_blowup::containment::ForbiddenFamily;
use turan_blowup::graph6;
use turan_blowup::search::{max_edges_free, CensusQuery};

fn main() -> turan_blowup::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let jobs: Vec<(String, usize)> = match &args[..] {
        [fam, n] => vec![(fam.clone(), n.parse().expect("integer MAX_N"))],
        _ => ["aux:k=2", "aux:k=3", "aux:k=4", "ahs:k=2", "ahs:k=3"]
            .iter()
            .map(|f| (f.to_string(), 18))
            .collect(),
    };
    for (fam, max_n) in jobs {
        let family: ForbiddenFamily = fam.parse()?;
        let start = Instant::now();
        let r = max_edges_free(&CensusQuery::new(family, max_n))?;
        println!(
            "{fam}: max edges {} over {} extremal classes, {} nodes, complete={} ({:.2?})",
            r.best_edges,
            r.extremal_graphs.len(),
            r.nodes_explored,
            r.complete,
            start.elapsed()
        );
        for g in &r.extremal_graphs {
            let mut comps: Vec<usize> = g.components().iter().map(Vec::len).collect();
            comps.sort_unstable_by(|a, b| b.cmp(a));
            println!("    {:<12} components {comps:?}", graph6::encode(g));
        }
    }
    Ok(())
}
