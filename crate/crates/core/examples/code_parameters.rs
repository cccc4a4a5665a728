//! Parameters and weight distributions of the line, parabola and conic codes.
//!
//! `cargo run --release --example code_parameters -- 16`

use std::time::Instant;

use conic_codes::codes::DEFAULT_BUDGET;
use conic_codes::constructions::{construction2_code, full_conic_code, line_code};
use conic_codes::geometry::DeltaSet;
use conic_codes::Gf2h;

fn main() -> conic_codes::Result<()> {
    let q: u64 = std::env::args().nth(1).map_or(8, |s| s.parse().expect("q must be an integer"));
    let f = Gf2h::new(q)?;
    let delta = DeltaSet::new(&f, false);
    for build in [line_code, construction2_code, full_conic_code] {
        let start = Instant::now();
        let report = build(&f, &delta, DEFAULT_BUDGET)?;
        println!("{:<10} {}  ({:.2?})", report.system, report.parameters(), start.elapsed());
        println!("  weights {:?}", report.weight_distribution.pairs());
        for c in report.claims.iter().filter(|c| !c.holds) {
            println!("  {:?} fails: {} (expected {}, observed {})", c.kind, c.statement, c.expected, c.observed);
        }
    }
    Ok(())
}
