//! Degeneracy by the coefficient invariant against a search for singular
//! points of the projective closure over GF(q^2).

use conic_codes::geometry::{conic_classes, Conic, ProjectivePoint};
use conic_codes::{Extension, Fe, Field, Gf2h};
use rayon::prelude::*;

/// `F`, `dF/dX`, `dF/dY`, `dF/dZ` all vanish at some point of PG(2, q^2).
fn has_singular_point(e: &Extension<2>, c: &Conic) -> bool {
    let a = c.coeffs().map(|x| e.embed(x));
    let [a11, a12, a22, a13, a23, a33] = a;
    let m = |x, y| e.mul(x, y);
    ProjectivePoint::all(e).any(|p| {
        let [x, y, z] = p.coords();
        let dx = e.add(m(a12, y), m(a13, z));
        let dy = e.add(m(a12, x), m(a23, z));
        let dz = e.add(m(a13, x), m(a23, y));
        if !(e.is_zero(dx) && e.is_zero(dy) && e.is_zero(dz)) {
            return false;
        }
        let terms = [m(a11, m(x, x)), m(a12, m(x, y)), m(a22, m(y, y)), m(a13, m(x, z)), m(a23, m(y, z)), m(a33, m(z, z))];
        e.is_zero(terms.into_iter().fold(e.zero(), |s, t| e.add(s, t)))
    })
}

fn check(q: u64) {
    let f = Gf2h::new(q).unwrap();
    let e = Extension::<2>::new(&f);
    let classes = conic_classes(q);
    let mismatches: Vec<Conic> = (0..classes.len())
        .into_par_iter()
        .filter_map(|i| {
            let c = Conic::new(classes.nth(i)).unwrap();
            (c.is_degenerate(&f) != has_singular_point(&e, &c)).then_some(c)
        })
        .collect();
    assert!(mismatches.is_empty(), "q = {q}: {} mismatches, first {}", mismatches.len(), mismatches[0]);
}

#[test]
fn invariant_matches_singular_points_at_four() {
    check(4);
}

#[test]
fn invariant_matches_singular_points_at_eight() {
    check(8);
}

#[test]
fn double_lines_are_degenerate() {
    let f = Gf2h::new(8).unwrap();
    let c = Conic::new([Fe(1), Fe(0), Fe(3), Fe(0), Fe(0), Fe(5)]).unwrap();
    assert!(c.is_degenerate(&f));
}
