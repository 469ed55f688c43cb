//! Checks the constructions named for a tree over a range of n, optionally
//! adding single edges to each.
//!
//! `cargo run --release --example verify [GRAPH6 [P [N_FROM [N_TO [MODE]]]]]`

use turan_blowup::containment::DEFAULT_BUDGET;
use turan_blowup::graph::named;
use turan_blowup::graph6;
use turan_blowup::search::{verify_theorem, CheckStatus, VerifyMode};
use turan_blowup::tree::analyze_tree;

fn main() -> turan_blowup::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let t = match args.first() {
        Some(code) => graph6::decode(code)?,
        None => named::path(5),
    };
    let num = |i: usize, d: usize| args.get(i).map_or(d, |s| s.parse().expect("integer"));
    let (p, from, to) = (num(1, 3), num(2, 20), num(3, 22));
    let mode: VerifyMode = args.get(4).map_or("perturb", String::as_str).parse()?;
    let r = verify_theorem(&analyze_tree(&t)?, p, from, to, mode, DEFAULT_BUDGET)?;
    for line in &r.lines {
        println!("{line}");
    }
    println!(
        "pass={} fail={} unknown={}",
        r.count(CheckStatus::Pass),
        r.count(CheckStatus::Fail),
        r.count(CheckStatus::Unknown)
    );
    Ok(())
}
