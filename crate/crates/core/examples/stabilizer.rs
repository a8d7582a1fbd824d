//! Fractional-linear maps permuting a finite subset of the projective line.
//!
//! `cargo run --example stabilizer -- 0,1,-1,inf`

use wfano::symmetry::{pgl2_set_stabilizer, PointSetOnLine};

fn main() -> wfano::Result<()> {
    let sets: Vec<String> = match std::env::args().nth(1) {
        Some(s) => vec![s],
        None => ["0,1,inf", "0,1,-1,inf", "0,1,inf,2,-1/2", "0,1,inf,3,-5/7"].map(String::from).to_vec(),
    };
    for s in sets {
        let set = PointSetOnLine::parse(&s)?;
        let group = pgl2_set_stabilizer(&set)?;
        println!("{set}: order {}", group.len());
        for g in &group {
            println!("  {g}");
        }
    }
    Ok(())
}
