//! Singular points of a general member and the Reid–Tai test for each, with
//! the test repeated for every admissible generator of the cyclic group.
//!
//! `cargo run --example basket -- [a1,...,a5,d]`

use wfano::singular::{reid_tai_terminal, singular_points_general};
use wfano::wspace::parse_uint_list;
use wfano::WeightSystem;

fn main() -> wfano::Result<()> {
    let s = std::env::args().nth(1).unwrap_or_else(|| "1,5,6,22,33,66".into());
    let ws = WeightSystem::from_septuple(&parse_uint_list(&s)?)?;
    let basket = singular_points_general(&ws)?;
    println!("{ws}: {} singular points", basket.total_points());
    for p in &basket.points {
        let q = p.singularity;
        let invariant = (1..q.order())
            .filter(|c| num_integer::gcd(*c, q.order()) == 1)
            .all(|c| reid_tai_terminal(&q.regenerate(c)));
        println!(
            "  {} on {}: terminal {}, all generators {}",
            p.basket_string(),
            p.stratum,
            reid_tai_terminal(&q),
            invariant
        );
    }
    for s in &basket.non_isolated {
        println!("  non-isolated along {s}");
    }
    Ok(())
}
