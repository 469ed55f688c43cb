//! Runs a campaign config through the library and prints the report.
//!
//! `cargo run --release --example campaign [CONFIG]` (default: the shipped config)

use std::path::PathBuf;

use turan_blowup::cli::{run_campaign, CampaignConfig};

fn main() -> turan_blowup::Result<()> {
    let path = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/campaign/default.conf")
    });
    let text = std::fs::read_to_string(&path)?;
    let cfg = CampaignConfig::parse(&text, path.parent().unwrap_or(&PathBuf::from(".")))?;
    let report = run_campaign(&cfg)?;
    for line in report.lines.iter().filter(|l| !l.starts_with("PASS")) {
        println!("{line}");
    }
    println!("{}", report.summary());
    Ok(())
}
