//! Arithmetic in GF(2^h) and its cubic extension: products, trace,
//! Artin-Schreier roots, square roots and the Frobenius.
//!
//! `cargo run --example field_arithmetic -- 16`

use conic_codes::{Extension, Fe, Field, Gf2h};

fn main() -> conic_codes::Result<()> {
    let q: u64 = std::env::args().nth(1).map_or(16, |s| s.parse().expect("q must be an integer"));
    let f = Gf2h::new(q)?;
    println!("GF({q}) with modulus {:#x}, generator {}", f.modulus(), f.generator());

    let (a, b) = (Fe(3), Fe(q as u32 - 1));
    println!("{a} * {b} = {}", f.mul(a, b));
    println!("{a}^-1 = {}", f.inv(a)?);
    println!("sqrt({b}) = {}", f.sqrt(b));

    println!("\n v     Tr(v)  roots of t^2 + t = v");
    for v in f.iter().step_by((q as usize / 8).max(1)).take(8) {
        let roots = f.solve_artin_schreier(v).map_or("none".to_string(), |(t0, t1)| format!("{t0}, {t1}"));
        println!(" {v:<5} {:<6} {roots}", f.trace(v));
    }

    let cubic = Extension::<3>::new(&f);
    let z = cubic.generator();
    let orbit = [z, cubic.frobenius(z), cubic.frobenius(cubic.frobenius(z))];
    println!("\nGF({}) = GF({q})[z] / (z^3 + {:?})", cubic.order(), cubic.modulus_tail());
    println!("Frobenius orbit of z: {}", orbit.map(|x| cubic.hex(x)).join(" -> "));
    let fixed = cubic.elements().filter(|&x| cubic.frobenius(x) == x).count();
    println!("elements fixed by Frobenius: {fixed}");
    Ok(())
}
