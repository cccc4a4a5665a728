//! The curves attached to one conic and the point-count identities between
//! them and the conic's intersection with Δ ∪ {O}.
//!
//! `cargo run --example curve_counts -- 8 0x1,0x1,0x1,0x0,0x1,0x2`

use conic_codes::curves::{
    lemma_case, relation_row, verify_count_relations, verify_lemma_delta, CurveContext, CurveFamily, FamilyCounts,
};
use conic_codes::geometry::{Conic, DeltaSet};
use conic_codes::Gf2h;

fn main() -> conic_codes::Result<()> {
    let mut args = std::env::args().skip(1);
    let q: u64 = args.next().map_or(8, |s| s.parse().expect("q must be an integer"));
    let f = Gf2h::new(q)?;
    let conic = Conic::parse_hex(&f, &args.next().unwrap_or_else(|| "0x1,0x1,0x1,0x0,0x1,0x2".into()))?;
    let ctx = CurveContext::new(&f);

    let fam = CurveFamily::build(&ctx, &conic)?;
    println!("conic {conic} over GF({q}), split multiplicity s = {}", fam.s);
    for (name, poly) in [("F", &fam.f), ("F^(s)", &fam.f_s), ("G", &fam.g), ("G^(s)", &fam.g_s)] {
        let terms: Vec<String> = poly.dump(&f).iter().map(|t| format!("{}·{}^{}{}^{}", t.coeff, poly.vars().0, t.i, poly.vars().1, t.j)).collect();
        println!("  {name:<6} = {}", terms.join(" + "));
    }
    println!("  {:?}", FamilyCounts::of(&ctx, &fam));

    let delta_bar = DeltaSet::new(&f, true);
    println!("\ncase {:?}", lemma_case(&f, &conic));
    let lemma = verify_lemma_delta(&ctx, &delta_bar, &conic)?;
    println!("|(Δ ∪ {{O}}) ∩ C| = {}, N(F^(s)) = {}, identity holds: {}", lemma.delta_bar_count, lemma.curve_count, lemma.holds);
    if let Some(row) = relation_row(&f, &conic) {
        let r = verify_count_relations(&ctx, &conic)?;
        println!("table row {row:?}: N(F^(s)) = {}, N(G^(s)) = {}, holds: {}", r.n_f_s, r.n_g_s, r.holds);
    }
    Ok(())
}
