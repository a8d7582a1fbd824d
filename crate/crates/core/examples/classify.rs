//! Runs the bounded search and prints the resulting families by index.
//!
//! `cargo run --release --example classify -- [max_weight] [max_degree] [jobs]`

use std::collections::BTreeMap;

use wfano::catalog::{classify_with_jobs, projection_exceptional, SearchBounds};

fn main() -> wfano::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let mut bounds = SearchBounds::default();
    if let Some(&m) = args.first() {
        bounds.max_weight = m;
    }
    if let Some(&d) = args.get(1) {
        bounds.max_degree = d;
    }
    let jobs = args.get(2).copied().unwrap_or(4) as usize;
    let records = classify_with_jobs(&bounds, jobs)?;
    let mut by_index: BTreeMap<i64, usize> = BTreeMap::new();
    for r in &records {
        *by_index.entry(r.index()).or_default() += 1;
    }
    println!("{} families", records.len());
    for (i, n) in &by_index {
        println!("  I = {i}: {n}");
    }
    for r in records.iter().filter(|r| r.index() >= 11) {
        println!("  large index: {}", r.ws);
    }
    for r in projection_exceptional(&records) {
        println!("  I = 1, d >= 3 a5, not exceptional: {}", r.ws);
    }
    Ok(())
}
