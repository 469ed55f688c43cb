//! Vertex splits and splitting families, with their cover numbers.
//!
//! `cargo run --example splitting_family [GRAPH6]`

use turan_blowup::graph6;
use turan_blowup::matching::matching_number;
use turan_blowup::tree::{analyze_tree, splitting_family, star_of_stars, DEFAULT_FAMILY_CAP};

fn main() -> turan_blowup::Result<()> {
    let t = match std::env::args().nth(1) {
        Some(code) => graph6::decode(&code)?,
        None => star_of_stars(&[2, 2]),
    };
    let tree = analyze_tree(&t)?;
    let a = tree.class_a().len();
    let family = splitting_family(&t, None, DEFAULT_FAMILY_CAP)?;
    println!("tree {} with |A| = {a}: {} members", graph6::encode(&t), family.len());
    for h in &family {
        // forests are bipartite, so the cover number equals the matching number
        let beta = matching_number(h);
        println!(
            "    {:<12} components={:<2} beta={beta}{}",
            graph6::encode(h),
            h.components().len(),
            if beta < a { "  below |A|" } else { "" }
        );
    }
    Ok(())
}
