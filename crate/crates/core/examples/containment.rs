//! Subgraph search: a construction avoids the blow-up, one extra edge does not.
//!
//! `cargo run --release --example containment`

use turan_blowup::construct::{edge_blowup, ConstructionSpec};
use turan_blowup::containment::{find_subgraph, verify_embedding, SearchOutcome, DEFAULT_BUDGET};
use turan_blowup::graph::named;

fn main() -> turan_blowup::Result<()> {
    let p = 3;
    let pattern = edge_blowup(&named::path(5), p + 1)?;
    let spec: ConstructionSpec = "H1 n=24 p=3 a=2 k=2".parse()?;
    let host = spec.build()?;
    println!(
        "pattern P5^{} has {} vertices, {} edges; host {spec} has {} edges",
        p + 1,
        pattern.order(),
        pattern.edge_count(),
        host.edge_count()
    );
    report("host", find_subgraph(&host, &pattern, DEFAULT_BUDGET), &host, &pattern);

    // vertex 0 is the K_{a-1}; 2 and 3 share the payload class
    let mut more = host.clone();
    more.add_edge(2, 3);
    report("host + {2,3}", find_subgraph(&more, &pattern, DEFAULT_BUDGET), &more, &pattern);

    report("budget 10", find_subgraph(&more, &pattern, 10), &more, &pattern);
    Ok(())
}

fn report(label: &str, o: SearchOutcome, host: &turan_blowup::Graph, pattern: &turan_blowup::Graph) {
    match o {
        SearchOutcome::Found(e) => println!(
            "{label}: contains it, embedding verified = {}\n    {e}",
            verify_embedding(host, pattern, &e.map)
        ),
        SearchOutcome::NotFound => println!("{label}: free"),
        SearchOutcome::BudgetExceeded => println!("{label}: unknown (budget exhausted)"),
    }
}
