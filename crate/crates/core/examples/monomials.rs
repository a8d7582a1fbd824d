//! Lists the monomials of a weighted degree and checks the count against
//! the Hilbert series coefficient.
//!
//! `cargo run --example monomials -- 1,2,3,3,4 12`

use wfano::wspace::{count_monomials, enumerate_monomials, parse_uint_list};
use wfano::WeightSystem;

fn main() -> wfano::Result<()> {
    let mut args = std::env::args().skip(1);
    let weights = parse_uint_list(&args.next().unwrap_or_else(|| "1,2,3,3,4".into()))?;
    let degree: u32 = args.next().map(|s| s.parse().expect("numeric degree")).unwrap_or(12);
    let ws = WeightSystem::sorted(weights.try_into().expect("five weights"), degree)?;
    let list = enumerate_monomials(&ws, degree);
    println!("P{:?}, degree {degree}: {} monomials", ws.weights(), list.len());
    assert_eq!(list.len() as u64, count_monomials(&ws, degree));
    for m in &list {
        println!("  {m}");
    }
    Ok(())
}
