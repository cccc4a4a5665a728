//! The net of conics spanned by a Frobenius triangle, and the code it gives.
//!
//! `cargo run --release --example frobenius_net -- 8 1 100` (q, seed, samples)

use std::time::Instant;

use conic_codes::codes::DEFAULT_BUDGET;
use conic_codes::constructions::{
    construction1_survey, find_lambda_point, summarize_net, LambdaSearch, NetContext,
};
use conic_codes::geometry::DeltaSet;
use conic_codes::{Extension, Gf2h};

fn main() -> conic_codes::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer argument"));
    let q = args.next().unwrap_or(8);
    let seed = args.next().unwrap_or(1);
    let samples = args.next().unwrap_or(100) as usize;

    let f = Gf2h::new(q)?;
    let ext = Extension::<3>::new(&f);
    let p = find_lambda_point(&ext, LambdaSearch::Seeded(seed));
    let ctx = NetContext::new(&f, &ext, &p)?;
    let summary = summarize_net(&ctx);
    println!("P = {:?}", summary.point);
    println!(
        "{} members, {} Frobenius-fixed, {} degenerate, {} without XY and Y^2",
        summary.members, summary.frobenius_fixed, summary.degenerate, summary.parabola_shaped
    );

    let start = Instant::now();
    let delta = DeltaSet::new(&f, false);
    let survey = construction1_survey(&f, &ext, &delta, seed, samples, DEFAULT_BUDGET)?;
    println!("{samples} samples in {:.2?}", start.elapsed());
    println!("minimum distances: {:?}", survey.distance_histogram);
    println!("dual distances:    {:?}", survey.dual_distance_histogram);
    for c in &survey.claims {
        println!("[{}] {:?} {}: expected {}, observed {}", if c.holds { "ok" } else { "no" }, c.kind, c.statement, c.expected, c.observed);
    }
    Ok(())
}
