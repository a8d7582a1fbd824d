//! Degree of irrationality over the whole catalog, grouped by outcome.
//!
//! `cargo run --release --example verdict`

use std::collections::BTreeMap;

use wfano::catalog::{classify, SearchBounds};
use wfano::irrational::decide;

fn main() -> wfano::Result<()> {
    let records = classify(&SearchBounds::default());
    let mut groups: BTreeMap<(i64, String), Vec<String>> = BTreeMap::new();
    for r in &records {
        let v = decide(r)?;
        let key = (r.index().min(2), v.values_string());
        groups.entry(key).or_default().push(r.ws.to_string());
    }
    for ((i, values), members) in &groups {
        let label = if *i == 1 { "I = 1" } else { "I >= 2" };
        println!("{label}, d(X) in {values}: {} families", members.len());
        if members.len() <= 10 {
            for m in members {
                println!("  {m}");
            }
        }
    }
    Ok(())
}
