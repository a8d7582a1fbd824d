//! Samples a general member of each family with a coordinate-change plan,
//! normalizes it and compares the surviving monomials with the tables.
//!
//! `cargo run --release --example normalize -- [seed]`

use std::collections::BTreeSet;
use std::time::Instant;

use wfano::symalg::{golden_table, normalized_member, PLAN_NUMBERS};

fn main() -> wfano::Result<()> {
    let seed: u64 = std::env::args().nth(1).map(|s| s.parse().expect("numeric seed")).unwrap_or(0);
    for n in PLAN_NUMBERS {
        let start = Instant::now();
        let m = normalized_member(n, seed)?;
        let got: BTreeSet<String> = m.normalized.polynomial.terms().keys().map(ToString::to_string).collect();
        let table: BTreeSet<String> = golden_table(n).expect("table").iter().map(|s| s.to_string()).collect();
        let extra: Vec<_> = got.difference(&table).collect();
        let missing: Vec<_> = table.difference(&got).collect();
        println!(
            "family {n}: {} terms after {} draw(s), {} substitutions, {:.2?}",
            got.len(),
            m.attempts,
            m.normalized.substitutions.len(),
            start.elapsed()
        );
        if extra.is_empty() && missing.is_empty() {
            println!("  support equals the table");
        } else {
            println!("  not in the table: {extra:?}");
            println!("  table only:       {missing:?}");
        }
        for s in m.normalized.substitutions.iter().filter(|s| !s.is_identity()) {
            println!("  {s}");
        }
    }
    Ok(())
}
