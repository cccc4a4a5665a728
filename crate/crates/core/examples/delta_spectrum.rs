//! The evaluation set Δ and how lines and conics meet it.
//!
//! `cargo run --release --example delta_spectrum -- 8`

use conic_codes::geometry::{delta_window_integers, line_delta_count_closed_form, DeltaSet, Line};
use conic_codes::spectrum::{spectrum, Family};
use conic_codes::Gf2h;

fn main() -> conic_codes::Result<()> {
    let q: u64 = std::env::args().nth(1).map_or(8, |s| s.parse().expect("q must be an integer"));
    let f = Gf2h::new(q)?;
    let delta = DeltaSet::new(&f, false);
    println!("|Δ| = {} for q = {q}; first points:", delta.len());
    let mut csv = Vec::new();
    delta.write_csv(&mut csv)?;
    String::from_utf8_lossy(&csv).lines().take(6).for_each(|l| println!("  {l}"));

    println!("\nlines whose count differs from the closed form:");
    for l in Line::all(&f) {
        let n = delta.count_on_line(&l) as u64;
        let stated = line_delta_count_closed_form(&l, q);
        if n != stated.delta {
            let (m, _, b) = l.coefficients();
            println!("  {:?} m = {m}, b = {b}: {n} points, stated {}", stated.case, stated.delta);
        }
    }

    println!("\nwindow for non-exceptional conics: {:?}", delta_window_integers(q));
    for family in [Family::Lines, Family::Parabolas, Family::AllConics] {
        let r = spectrum(&f, family, false)?;
        println!("\n{family} ({} members)", r.members);
        for row in &r.rows {
            println!("  {:>3} points: {:>7}  {:?}", row.count, row.members, row.annotations);
        }
    }
    Ok(())
}
