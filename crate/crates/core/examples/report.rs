//! Writes the catalog as JSON, reads it back, and prints the markdown table.
//!
//! `cargo run --release --example report -- [catalog.json]`

use std::path::PathBuf;

use wfano::catalog::{classify, load_catalog, markdown_verdicts, save_catalog, SearchBounds};

fn main() -> wfano::Result<()> {
    let path =
        std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("wfano-catalog.json"));
    let records = classify(&SearchBounds::default());
    save_catalog(&records, &path)?;
    let back = load_catalog(&path)?;
    assert_eq!(back, records);
    eprintln!("{} records written to {}", records.len(), path.display());
    print!("{}", markdown_verdicts(&back));
    Ok(())
}
