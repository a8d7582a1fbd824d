//! Automorphism certificates: normalized member, diagonal group of its
//! support and, where needed, the stabilizer of a point set on the line.
//!
//! `cargo run --release --example automorphisms -- [seed]`

use wfano::symalg::PLAN_NUMBERS;
use wfano::symmetry::{certify_trivial_automorphisms, format_signs, has_diagonal_involution, tau_template_support};
use wfano::WeightSystem;

fn main() -> wfano::Result<()> {
    let seed: u64 = std::env::args().nth(1).map(|s| s.parse().expect("numeric seed")).unwrap_or(0);
    for n in PLAN_NUMBERS {
        let c = certify_trivial_automorphisms(n, seed)?;
        println!("family {n} {}: trivial {}", c.weights, c.trivial);
        println!(
            "  {} monomials, diagonal free rank {}, torsion {:?}",
            c.support.len(),
            c.diagonal.free_rank,
            c.diagonal.torsion
        );
        for p in &c.point_sets {
            println!(
                "  {} points [{}], stabilizer order {}",
                p.forms.join(" * "),
                p.points.join(", "),
                p.stabilizer.len()
            );
        }
    }
    // A quartic with the involution (x:y:z:-t:-w) for contrast.
    let p4 = WeightSystem::new([1; 5], 4)?;
    let r = has_diagonal_involution(&tau_template_support(), &p4)?;
    println!("quartic even in (t,w): involution {}", r.witness.map(|w| format_signs(&w)).unwrap_or_default());
    Ok(())
}
