//! Minimum distance of the dual codes, by searching for small sets of
//! dependent columns of the generator matrix.
//!
//! `cargo run --release --example dual_distance -- 8 1`

use conic_codes::codes::{dual_distance_upto, evaluate_system, MAX_DUAL_SEARCH};
use conic_codes::constructions::{find_lambda_point, line_basis, parabola_basis, LambdaSearch, NetContext};
use conic_codes::geometry::DeltaSet;
use conic_codes::{Extension, Gf2h};

fn main() -> conic_codes::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer argument"));
    let q = args.next().unwrap_or(8);
    let seed = args.next().unwrap_or(1);
    let f = Gf2h::new(q)?;
    let ext = Extension::<3>::new(&f);
    let delta = DeltaSet::new(&f, false);

    let net = NetContext::new(&f, &ext, &find_lambda_point(&ext, LambdaSearch::Seeded(seed)))?;
    for basis in [line_basis(), parabola_basis(), net.basis()?] {
        let g = evaluate_system(&basis, &delta);
        let d = dual_distance_upto(&f, &g, MAX_DUAL_SEARCH);
        let shown = d.map_or(format!("> {MAX_DUAL_SEARCH}"), |d| d.to_string());
        println!("{:<10} [{}, {}]  dual distance {shown}", basis.name, g.n(), g.n() - g.rank());
    }
    Ok(())
}
