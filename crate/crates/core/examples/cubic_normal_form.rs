//! For the families with d = 3 a5 and a4 = a5: moves the roots of the
//! (t,w) cubic to three coordinate points and checks that each is a
//! quotient singularity of the expected type on the member.
//!
//! `cargo run --release --example cubic_normal_form -- [seed]`

use wfano::catalog::septuple_of;
use wfano::membership::StratumSelector;
use wfano::singular::local_type_at_point;
use wfano::symalg::{cubic_normal_form, sample_general_member, Coeff, CubicNormalForm, SamplingOptions};

fn main() -> wfano::Result<()> {
    let seed: u64 = std::env::args().nth(1).map(|s| s.parse().expect("numeric seed")).unwrap_or(0);
    for n in [9, 17, 27] {
        let ws = septuple_of(n).expect("named family");
        let sample = sample_general_member(&ws, seed, &SamplingOptions::default_for(&ws)?)?;
        let nf = cubic_normal_form(&sample.polynomial)?;
        println!("family {n} {ws}");
        println!("  (t,w) part: {}", nf.cubic_part());
        println!("  w^2 f: {}", nf.pieces.f_a5);
        println!("  t^2 g: {}", nf.pieces.g_a5);
        let on_x = CubicNormalForm::base_points().iter().all(|p| nf.polynomial.eval(p).vanishes());
        println!("  base points on X: {on_x}");
        println!("  local type along (t,w): {:?}", local_type_at_point(&ws, StratumSelector::from_vars(&[3, 4])?)?);
    }
    Ok(())
}
