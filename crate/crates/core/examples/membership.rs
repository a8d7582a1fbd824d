//! Runs the well-formedness, quasismoothness and terminality predicates on a
//! few septuples, including ones that fail.
//!
//! `cargo run --example membership -- [a1,...,a5,d]`

use wfano::catalog::evaluate;
use wfano::membership::membership_report;
use wfano::singular::terminal_general;
use wfano::wspace::parse_uint_list;
use wfano::WeightSystem;

fn main() -> wfano::Result<()> {
    let inputs: Vec<String> = match std::env::args().nth(1) {
        Some(s) => vec![s],
        None => ["1,1,1,1,1,4", "1,2,3,3,4,12", "1,1,1,1,2,5", "1,1,2,2,2,4", "1,1,1,1,1,5"].map(String::from).to_vec(),
    };
    for s in inputs {
        let ws = WeightSystem::from_septuple(&parse_uint_list(&s)?)?;
        let m = membership_report(&ws);
        println!("{ws}");
        println!("  wps well-formed {}, hypersurface well-formed {}", m.wps_well_formed, m.hypersurface_well_formed);
        println!("  linear cone {}, quasismooth {}", m.linear_cone, m.quasismooth_general);
        for f in &m.failing_strata {
            println!("  fails on {}: {}", f.stratum, f.reason);
        }
        if m.accepted() {
            println!("  terminal {}", terminal_general(&ws)?);
        }
        println!("  in the catalog: {}", evaluate(&ws).is_some_and(|r| r.accepted()));
    }
    Ok(())
}
