//! Largest graphs with bounded matching number and maximum degree: census
//! against the closed form.
//!
//! `cargo run --release --example chvatal_hanson [MAX]`

use turan_blowup::formulas::chvatal_hanson;
use turan_blowup::search::max_edges_nu_delta;

fn main() -> turan_blowup::Result<()> {
    let max: usize = std::env::args().nth(1).map_or(3, |s| s.parse().expect("integer"));
    println!("nu delta census formula");
    for nu in 1..=max {
        for delta in 1..=max {
            let census = max_edges_nu_delta(nu, delta, 64)?;
            let formula = chvatal_hanson(nu as u64, delta as u64);
            let mark = if census as u64 == formula { "" } else { "  MISMATCH" };
            println!("{nu:>2} {delta:>5} {census:>6} {formula:>7}{mark}");
        }
    }
    Ok(())
}
