//! Randomized invariants over GF(2^h), 2 <= h <= 6.

use conic_codes::codes::{evaluate_system, weight_distribution, GeneratorMatrix, DEFAULT_BUDGET};
use conic_codes::constructions::{line_basis, parabola_basis};
use conic_codes::geometry::{AffinePoint, Conic, DeltaSet};
use conic_codes::{Fe, Gf2h};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Gf2h> {
    (2u32..=6).prop_map(|h| Gf2h::new(1 << h).unwrap())
}

fn with_elements(n: usize) -> impl Strategy<Value = (Gf2h, Vec<Fe>)> {
    field().prop_flat_map(move |f| {
        let q = f.q();
        (Just(f), prop::collection::vec((0..q).prop_map(Fe), n))
    })
}

proptest! {
    #[test]
    fn field_axioms((f, v) in with_elements(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        }
    }

    #[test]
    fn trace_is_linear((f, v) in with_elements(2)) {
        prop_assert_eq!(f.trace(v[0] + v[1]), f.trace(v[0]) ^ f.trace(v[1]));
        prop_assert_eq!(f.trace(f.square(v[0])), f.trace(v[0]));
    }

    #[test]
    fn artin_schreier_dichotomy((f, v) in with_elements(1)) {
        match f.solve_artin_schreier(v[0]) {
            Some((t, u)) => {
                prop_assert_eq!(f.trace(v[0]), 0);
                prop_assert_eq!(f.square(t) + t, v[0]);
                prop_assert_eq!(u, t + Fe::ONE);
            }
            None => prop_assert_eq!(f.trace(v[0]), 1),
        }
    }

    #[test]
    fn normalization_is_idempotent((f, v) in with_elements(7)) {
        let raw = [v[0], v[1], v[2], v[3], v[4], v[5]];
        prop_assume!(raw.iter().any(|x| !x.is_zero()));
        prop_assume!(!v[6].is_zero());
        let c = Conic::new(raw).unwrap();
        let n = c.normalized(&f);
        prop_assert_eq!(n.normalized(&f), n);
        prop_assert_eq!(c.scaled(&f, v[6]).normalized(&f), n);
    }

    #[test]
    fn weights_ignore_column_scaling_and_order(h in 2u32..=4, seed in any::<u64>(), parabolas in any::<bool>()) {
        let f = Gf2h::new(1 << h).unwrap();
        let delta = DeltaSet::new(&f, false);
        let basis = if parabolas { parabola_basis() } else { line_basis() };
        let g = evaluate_system(&basis, &delta);
        let base = weight_distribution(&f, &g, DEFAULT_BUDGET).unwrap();

        let mut state = seed | 1;
        let mut next = move || { state ^= state << 13; state ^= state >> 7; state ^= state << 17; state };
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, (next() % (i as u64 + 1)) as usize);
        }
        let scales: Vec<Fe> = (0..n).map(|_| Fe(1 + (next() % (f.q() as u64 - 1)) as u32)).collect();
        let rows = g.rows().iter().map(|r| order.iter().map(|&j| f.mul(scales[j], r[j])).collect()).collect();
        let moved = weight_distribution(&f, &GeneratorMatrix::from_rows(&f, rows), DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(base, moved);
    }

    #[test]
    fn delta_points_have_trace_zero_slope(f in field()) {
        let delta = DeltaSet::new(&f, false);
        prop_assert_eq!(delta.len() as u32, f.q() * (f.q() - 1) / 2);
        for &AffinePoint { x, y } in delta.points() {
            prop_assert!(!x.is_zero());
            prop_assert_eq!(f.trace(f.div(y, f.square(x)).unwrap()), 0);
        }
    }
}
