//! Tree parameters and the branch of the extremal theorem they select.
//!
//! `cargo run --example dispatch [GRAPH6 [P [N]]]`

use turan_blowup::formulas::{boundary, dispatch};
use turan_blowup::graph::named;
use turan_blowup::graph6;
use turan_blowup::tree::{analyze_tree, extract_params, star_of_stars};

fn main() -> turan_blowup::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p: u64 = args.get(1).map_or(3, |s| s.parse().expect("integer p"));
    let n: u64 = args.get(2).map_or(40, |s| s.parse().expect("integer n"));
    let trees = match args.first() {
        Some(code) => vec![(code.clone(), graph6::decode(code)?)],
        None => vec![
            ("P5".to_string(), named::path(5)),
            ("K1,3".to_string(), named::star(3)),
            ("S(2,2)".to_string(), star_of_stars(&[2, 2])),
            ("S(2,2,2)".to_string(), star_of_stars(&[2, 2, 2])),
            ("S(4,4,4)".to_string(), star_of_stars(&[4, 4, 4])),
        ],
    };
    for (name, g) in trees {
        let params = extract_params(&analyze_tree(&g)?);
        let edge = boundary(params.a as u64, params.k as u64)
            .map_or("-".to_string(), |b| b.to_string());
        print!("{name:<9} {params} boundary={edge:<3} ");
        match dispatch(&params, n, p) {
            Ok(case) => {
                let specs: Vec<String> = case.extremal.iter().map(|s| s.to_string()).collect();
                println!("{} ex={} via {}", case.tag, case.value, specs.join(" | "));
            }
            Err(e) => println!("{e}"),
        }
    }
    Ok(())
}
