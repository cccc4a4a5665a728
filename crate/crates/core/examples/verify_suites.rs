//! Runs the verification suites and prints each statement with its outcome.
//!
//! `cargo run --release --example verify_suites -- 8`

use conic_codes::verify::{run, Suite, VerifyOptions};
use conic_codes::Gf2h;

fn main() -> conic_codes::Result<()> {
    let q: u64 = std::env::args().nth(1).map_or(4, |s| s.parse().expect("q must be an integer"));
    let f = Gf2h::new(q)?;
    let report = run(&f, Suite::All, VerifyOptions::default(), &|msg| eprintln!("{msg}"))?;
    for suite in &report.suites {
        println!("[{}]", suite.suite);
        for c in &suite.claims {
            let mark = if c.holds { "ok  " } else { "FAIL" };
            println!("  {mark} {:?} {} ({})", c.kind, c.statement, c.observed);
        }
        for x in suite.counterexamples.iter().take(3) {
            println!("       e.g. {} {}", x.subject, x.detail);
        }
    }
    println!("all asserted statements hold: {}", report.holds());
    Ok(())
}
