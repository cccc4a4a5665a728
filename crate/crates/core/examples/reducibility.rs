//! Degeneracy of a conic against the linear components of its cubic.
//!
//! `cargo run --example reducibility -- 4`

use conic_codes::curves::{recover_linear_factors, reducibility_case, reducibility_conditions, CurveContext};
use conic_codes::geometry::{conic_classes, Conic};
use conic_codes::{Field, Gf2h};

fn main() -> conic_codes::Result<()> {
    let q: u64 = std::env::args().nth(1).map_or(4, |s| s.parse().expect("q must be an integer"));
    let f = Gf2h::new(q)?;
    let ctx = CurveContext::new(&f);
    let e = ctx.ext();

    let (mut agree, mut total, mut shown) = (0u64, 0u64, 0);
    for raw in conic_classes(q).iter() {
        let c = Conic::new(raw)?;
        if reducibility_case(&c).is_none() {
            continue;
        }
        let verdict = reducibility_conditions(&ctx, &c)?;
        total += 1;
        agree += u64::from(verdict.reducible() == c.is_degenerate(&f));
        if verdict.reducible() && shown < 4 {
            shown += 1;
            let factors = recover_linear_factors(&ctx, &c)?;
            let lines: Vec<String> =
                factors.lines.iter().map(|l| format!("{}·X + {}·V + {}", e.hex(l[0]), e.hex(l[1]), e.hex(l[2]))).collect();
            println!("{c} {:?}: {}; cofactor of degree {:?}", verdict.case, lines.join(" | "), factors.cofactor.degree());
        }
    }
    println!("\ncriteria agree with degeneracy for {agree} of {total} classes with (a12, a22) != 0");
    Ok(())
}
