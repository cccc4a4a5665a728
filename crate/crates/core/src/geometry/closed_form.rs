//! Closed-form intersection sizes for conics without `XY` and `Y^2` terms,
//! and the general window for `|Δ ∩ C|`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Gf2h;

use super::Conic;

/// Predicted `|Δ ∩ C|` or, with `with_origin`, `|(Δ ∪ {O}) ∩ C|` for a conic
/// with `a12 = a22 = 0`.
///
/// Covered patterns: every non-degenerate conic of this shape, plus the
/// degenerate ones with `a23 = 0` (pairs of vertical lines, double lines,
/// single vertical lines). Lines with `a23 != 0` and nonzero constants
/// are rejected.
pub fn parabola_count_closed_form(f: &Gf2h, c: &Conic, with_origin: bool) -> Result<u64> {
    if !c.a12().is_zero() || !c.a22().is_zero() {
        return Err(Error::Uncovered(format!("{c} has an XY or Y^2 term")));
    }
    let q = f.q() as u64;
    let half = q / 2;
    let origin_on_c = c.a33().is_zero();

    if !c.a23().is_zero() {
        let s = f.inv(c.a23())?;
        let (a11, a13, a33) = (f.mul(s, c.a11()), f.mul(s, c.a13()), f.mul(s, c.a33()));
        if a11.is_zero() {
            return Err(Error::Uncovered(format!("{c} is a slanted line")));
        }
        let t = f.trace(a11);
        let bar = if a33 == f.square(a13) {
            match (a33.is_zero(), t) {
                (true, 0) => q,
                (true, _) => 1,
                (false, 0) => q - 1,
                (false, _) => 0,
            }
        } else {
            match (a33.is_zero(), t) {
                (false, 0) => half - 1,
                (false, _) => half,
                (true, 0) => half,
                (true, _) => half + 1,
            }
        };
        return Ok(if with_origin || !origin_on_c { bar } else { bar - 1 });
    }

    // a23 = 0: an equation in X alone
    let (a11, a13, a33) = (c.a11(), c.a13(), c.a33());
    let on_delta = match (a11.is_zero(), a13.is_zero(), a33.is_zero()) {
        (true, true, _) => return Err(Error::Uncovered(format!("{c} is a nonzero constant"))),
        // a single vertical line, or the double line X = sqrt(a33/a11)
        (true, false, false) | (false, true, false) => half,
        (true, false, true) | (false, true, true) => 0,
        // X (a11 X + a13)
        (false, false, true) => half,
        (false, false, false) => {
            let b = f.div(f.mul(a11, a33), f.square(a13))?;
            if f.trace(b) == 0 {
                q
            } else {
                0
            }
        }
    };
    Ok(on_delta + u64::from(with_origin && origin_on_c))
}

/// One of the coefficient families excluded from the general window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExceptionalFamily {
    /// `a12 = a22 = 0`, `a23 != 0`, `Tr(a11/a23) = 0`, and the normalized
    /// `(a13, a33)` is `(0, 0)` or satisfies `a33 = a13^2 != 0`; `q - 1` points.
    TangentHyperbolic,
    /// As above with `Tr(a11/a23) = 1`; no points.
    TangentElliptic,
    /// `a12 = a22 = a23 = 0`, `a11 a13 a33 != 0`, `Tr(a11 a33 / a13^2) = 0`;
    /// `q` points.
    VerticalPairSplit,
    /// As above with trace 1; no points.
    VerticalPairConjugate,
}

impl ExceptionalFamily {
    pub fn predicted(&self, q: u64) -> u64 {
        match self {
            Self::TangentHyperbolic => q - 1,
            Self::VerticalPairSplit => q,
            Self::TangentElliptic | Self::VerticalPairConjugate => 0,
        }
    }

    pub fn of(f: &Gf2h, c: &Conic) -> Option<Self> {
        if !c.a12().is_zero() || !c.a22().is_zero() {
            return None;
        }
        if !c.a23().is_zero() {
            let s = f.inv(c.a23()).ok()?;
            let (a11, a13, a33) = (f.mul(s, c.a11()), f.mul(s, c.a13()), f.mul(s, c.a33()));
            if a33 != f.square(a13) {
                return None;
            }
            return Some(if f.trace(a11) == 0 { Self::TangentHyperbolic } else { Self::TangentElliptic });
        }
        let (a11, a13, a33) = (c.a11(), c.a13(), c.a33());
        if a11.is_zero() || a13.is_zero() || a33.is_zero() {
            return None;
        }
        let b = f.div(f.mul(a11, a33), f.square(a13)).ok()?;
        Some(if f.trace(b) == 0 { Self::VerticalPairSplit } else { Self::VerticalPairConjugate })
    }
}

/// `[(q - 2 sqrt q - 2) / 2, (q + 2 sqrt q - 1) / 2]`.
pub fn delta_window(q: u64) -> (f64, f64) {
    let (qf, r) = (q as f64, (q as f64).sqrt());
    ((qf - 2.0 * r - 2.0) / 2.0, (qf + 2.0 * r - 1.0) / 2.0)
}

/// Integer counts admitted by [`delta_window`].
pub fn delta_window_integers(q: u64) -> std::ops::RangeInclusive<u64> {
    let (lo, hi) = delta_window(q);
    (lo.max(0.0).ceil() as u64)..=(hi.floor() as u64)
}

/// Outcome of checking one non-degenerate conic against the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum WindowClass {
    InWindow { count: u64 },
    Exceptional { family: ExceptionalFamily, count: u64 },
    /// Neither in the window nor in a listed family.
    OutsideWindow { count: u64 },
}

impl WindowClass {
    pub fn is_explained(&self, q: u64) -> bool {
        match *self {
            Self::InWindow { .. } => true,
            Self::Exceptional { family, count } => family.predicted(q) == count,
            Self::OutsideWindow { .. } => false,
        }
    }
}

/// Classifies a non-degenerate conic given its count on `Δ`.
pub fn classify_window(f: &Gf2h, c: &Conic, count_on_delta: u64) -> Result<WindowClass> {
    if c.is_degenerate(f) {
        return Err(Error::DegenerateConic(c.to_string()));
    }
    if let Some(family) = ExceptionalFamily::of(f, c) {
        return Ok(WindowClass::Exceptional { family, count: count_on_delta });
    }
    Ok(if delta_window_integers(f.q() as u64).contains(&count_on_delta) {
        WindowClass::InWindow { count: count_on_delta }
    } else {
        WindowClass::OutsideWindow { count: count_on_delta }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fe;
    use crate::geometry::DeltaSet;

    fn conic(c: [u32; 6]) -> Conic {
        Conic::new(c.map(Fe)).unwrap()
    }

    #[test]
    fn window_at_eight() {
        let (lo, hi) = delta_window(8);
        assert!((lo - 0.1716).abs() < 1e-3 && (hi - 6.3284).abs() < 1e-3);
        assert_eq!(delta_window_integers(8), 1..=6);
        assert_eq!(delta_window_integers(4), 0..=3);
    }

    #[test]
    fn stated_examples() {
        let f = Gf2h::new(8).unwrap();
        let t1 = f.iter().find(|&c| f.trace(c) == 1).unwrap().0;
        let t0 = f.nonzero().find(|&c| f.trace(c) == 0).unwrap().0;
        // Tr(a11) = 1, a33 = a13^2 != 0
        let c = conic([t1, 0, 0, 3, 1, f.square(Fe(3)).0]);
        assert_eq!(parabola_count_closed_form(&f, &c, true).unwrap(), 0);
        // Tr(a11) = 0, a13 = a33 = 0
        let c = conic([t0, 0, 0, 0, 1, 0]);
        assert_eq!(parabola_count_closed_form(&f, &c, true).unwrap(), 8);
        assert_eq!(
            classify_window(&f, &c, 7).unwrap(),
            WindowClass::Exceptional { family: ExceptionalFamily::TangentHyperbolic, count: 7 }
        );
        // a23 = 0 with Tr(a11 a33 / a13^2) = 0
        let c = conic([1, 0, 0, 1, 0, t0]);
        assert_eq!(parabola_count_closed_form(&f, &c, false).unwrap(), 8);
    }

    #[test]
    fn rejects_uncovered_patterns() {
        let f = Gf2h::new(8).unwrap();
        assert!(parabola_count_closed_form(&f, &conic([0, 0, 0, 0, 0, 1]), false).is_err());
        assert!(parabola_count_closed_form(&f, &conic([0, 0, 0, 1, 1, 0]), false).is_err());
        assert!(parabola_count_closed_form(&f, &conic([0, 1, 0, 0, 0, 1]), false).is_err());
        assert!(classify_window(&f, &conic([1, 0, 0, 0, 0, 1]), 0).is_err());
    }

    #[test]
    fn closed_form_matches_brute_force_at_sixteen() {
        let f = Gf2h::new(16).unwrap();
        let (d, dbar) = (DeltaSet::new(&f, false), DeltaSet::new(&f, true));
        for a11 in f.iter() {
            for a13 in f.iter() {
                for a23 in [Fe::ZERO, Fe::ONE] {
                    for a33 in f.iter() {
                        let Ok(c) = Conic::new([a11, Fe(0), Fe(0), a13, a23, a33]) else { continue };
                        if let Ok(p) = parabola_count_closed_form(&f, &c, false) {
                            assert_eq!(p, d.count_on(&c) as u64, "{c}");
                            let pb = parabola_count_closed_form(&f, &c, true).unwrap();
                            assert_eq!(pb, dbar.count_on(&c) as u64, "{c}");
                        }
                    }
                }
            }
        }
    }
}
