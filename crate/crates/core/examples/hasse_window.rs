//! Point counts of the cubic attached to each conic against those of G and
//! the Hasse-type windows.
//!
//! `cargo run --release --example hasse_window -- 8`

use std::collections::BTreeMap;

use conic_codes::curves::{cubic_windows, hasse_applicable, hasse_window_check, CurveContext};
use conic_codes::geometry::{conic_classes, Conic};
use conic_codes::Gf2h;

fn main() -> conic_codes::Result<()> {
    let q: u64 = std::env::args().nth(1).map_or(8, |s| s.parse().expect("q must be an integer"));
    let f = Gf2h::new(q)?;
    let ctx = CurveContext::new(&f);
    let ((lo, hi), (rlo, rhi)) = cubic_windows(q);
    println!("windows [{lo:.2}, {hi:.2}] and [{rlo}, {rhi}]");

    // (tangent in GF(q), N(H) - N(G), N(H) in window) -> classes
    let mut seen: BTreeMap<(bool, i64, bool), u64> = BTreeMap::new();
    for raw in conic_classes(q).iter() {
        let c = Conic::new(raw)?;
        if !hasse_applicable(&f, &c) {
            continue;
        }
        let h = hasse_window_check(&ctx, &c)?;
        *seen.entry((h.tangent_in_base, h.n_h as i64 - h.n_g as i64, h.in_window)).or_default() += 1;
    }
    println!("tangent in GF(q)  N(H) - N(G)  in window  classes");
    for ((base, diff, inside), n) in seen {
        println!("{base:<17} {diff:>11}  {inside:<9}  {n}");
    }
    Ok(())
}
