//! Builds the extremal constructions and compares edge counts with the
//! closed forms.
//!
//! `cargo run --example constructions [N P A K]`

use turan_blowup::construct::ConstructionSpec;
use turan_blowup::formulas::{g, g1, g2, g_d};

fn main() -> turan_blowup::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer argument"))
        .collect();
    let (n, p, a, k) = match args[..] {
        [n, p, a, k] => (n, p, a, k),
        _ => (30, 3, 3, 3),
    };
    let (nn, pp, aa, kk) = (n as u64, p as u64, a as u64, k as u64);
    let mut rows: Vec<(ConstructionSpec, Option<u64>)> = vec![
        (ConstructionSpec::Turan { n, r: p }, None),
        (ConstructionSpec::L1 { n, p, k, class: 0 }, None),
        (ConstructionSpec::L2 { n, p, k, class: 0 }, None),
        (ConstructionSpec::H1 { n, p, a, k, class: 0 }, Some(g(nn, pp, aa)? + g1(kk))),
        (ConstructionSpec::H2 { n, p, a, k, class: 0 }, Some(g(nn, pp, aa)? + g2(kk))),
    ];
    for d in 0..a.saturating_sub(1) {
        rows.push((
            ConstructionSpec::H2Rd { n, p, a, d, k, class: 0 },
            Some(g_d(nn, pp, aa, d as u64)? + g2(kk)),
        ));
    }
    for (spec, formula) in rows {
        match spec.build() {
            Ok(h) => {
                let f = formula.map_or("-".to_string(), |v| v.to_string());
                println!("{spec:<32} vertices={:<4} edges={:<6} formula={f}", h.order(), h.edge_count());
            }
            Err(e) => {
                let hint = spec.min_feasible_n().map_or(String::new(), |m| format!(" (needs n >= {m})"));
                println!("{spec:<32} {e}{hint}");
            }
        }
    }
    Ok(())
}
