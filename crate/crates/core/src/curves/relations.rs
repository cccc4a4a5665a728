//! Point-count identities between a conic's intersection with `Δ ∪ {O}`
//! and its auxiliary curves.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Fe, Gf2h};
use crate::geometry::{Conic, DeltaSet};

use super::family::{Cubic, CurveContext, CurveFamily};

/// The triples `(a11,a12,a22)`, `(a11,a13,a33)`, `(a11,a22,a23)`,
/// `(a12,a13,a23)`, `(a22,a23,a33)` are all nonzero. The count identities
/// are stated under this hypothesis.
pub fn standing_hypothesis(c: &Conic) -> bool {
    let [a11, a12, a22, a13, a23, a33] = c.coeffs().map(|x| !x.is_zero());
    (a11 || a12 || a22) && (a11 || a13 || a33) && (a11 || a22 || a23) && (a12 || a13 || a23) && (a22 || a23 || a33)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaCase {
    /// `a33 != 0`: `N(F) / 2`.
    ConstantTerm,
    /// `a33 = 0, a13 != 0`: `1 + N(F^(1)) / 2`.
    LinearTerm,
    /// `a33 = a13 = 0` with `a23 = 0` or `Tr(a11/a23) = 1`: `1 + N(F^(2)) / 2`.
    QuadraticOffAxis,
    /// `a33 = a13 = 0`, `a23 != 0`, `Tr(a11/a23) = 0`: `N(F^(2)) / 2`.
    QuadraticOnAxis,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub conic: Conic,
    pub case: LemmaCase,
    pub delta_bar_count: u64,
    pub curve_count: u64,
    pub holds: bool,
}

/// Which case applies and whether the `+1` for the origin is present.
pub fn lemma_case(f: &Gf2h, c: &Conic) -> Option<(LemmaCase, bool)> {
    Some(match super::family::split_multiplicity(c)? {
        0 => (LemmaCase::ConstantTerm, false),
        1 => (LemmaCase::LinearTerm, true),
        _ => {
            if c.a23().is_zero() || f.trace(f.div(c.a11(), c.a23()).ok()?) == 1 {
                (LemmaCase::QuadraticOffAxis, true)
            } else {
                (LemmaCase::QuadraticOnAxis, false)
            }
        }
    })
}

/// Compares `|(Δ ∪ {O}) ∩ C|` with the count predicted from `F^(s)`.
pub fn verify_lemma_delta(ctx: &CurveContext, delta_bar: &DeltaSet, c: &Conic) -> Result<LemmaCheck> {
    assert!(delta_bar.includes_origin(), "the identity is about Δ with the origin");
    let f = ctx.base();
    let (case, plus_one) =
        lemma_case(f, c).ok_or_else(|| Error::Uncovered(format!("{c} has a11 = a13 = a33 = 0")))?;
    let fam = CurveFamily::build(ctx, c)?;
    let curve_count = fam.count_f_s(ctx);
    let delta_bar_count = delta_bar.count_on(c) as u64;
    // 2 |Δ̄ ∩ C| = N + 2 [plus_one]
    let holds = 2 * delta_bar_count == curve_count + 2 * u64::from(plus_one);
    Ok(LemmaCheck { conic: *c, case, delta_bar_count, curve_count, holds })
}

/// A row of the tables relating `N(F^(s))` and `N(G^(s))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RelationRow {
    pub s: u32,
    /// Position of the row within its table, from 1.
    pub row: u32,
    /// Predicted `N(F^(s)) - N(G^(s))`.
    pub offset: i64,
}

/// The applicable table row. For `s = 2` the first row is read as
/// "`a23 = 0`, or `Tr(a11/a23) = 1` and `a22 = 0`".
pub fn relation_row(f: &Gf2h, c: &Conic) -> Option<RelationRow> {
    let (a11, a22, a23, a33) = (c.a11(), c.a22(), c.a23(), c.a33());
    let s = super::family::split_multiplicity(c)?;
    let (row, offset) = match s {
        0 => match (a22.is_zero(), a23.is_zero()) {
            (false, false) => {
                let b = f.div(f.mul(a22, a33), f.square(a23)).ok()?;
                if f.trace(b) == 1 {
                    (1, 0)
                } else {
                    (4, -2)
                }
            }
            (true, true) => (2, 0),
            _ => (3, -1),
        },
        1 => {
            if a23.is_zero() || a22.is_zero() {
                (1, -1)
            } else {
                (2, -2)
            }
        }
        _ => {
            if a23.is_zero() {
                (1, -1)
            } else {
                let t = f.trace(f.div(a11, a23).ok()?);
                match (t, a22.is_zero()) {
                    (1, true) => (1, -1),
                    (0, true) => (2, 1),
                    (1, false) => (3, -2),
                    _ => (4, 0),
                }
            }
        }
    };
    Some(RelationRow { s, row, offset })
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub conic: Conic,
    pub row: RelationRow,
    pub n_f_s: u64,
    pub n_g_s: u64,
    pub holds: bool,
}

pub fn verify_count_relations(ctx: &CurveContext, c: &Conic) -> Result<RelationCheck> {
    let row = relation_row(ctx.base(), c)
        .ok_or_else(|| Error::Uncovered(format!("no relation row for {c}")))?;
    let fam = CurveFamily::build(ctx, c)?;
    let (n_f_s, n_g_s) = (fam.count_f_s(ctx), fam.count_g_s(ctx));
    let holds = n_f_s as i64 == n_g_s as i64 + row.offset;
    Ok(RelationCheck { conic: *c, row, n_f_s, n_g_s, holds })
}

/// `[q - 2 sqrt q - 2, q + 2 sqrt q - 1]` and `[q - 3, q]`.
pub fn cubic_windows(q: u64) -> ((f64, f64), (u64, u64)) {
    let (qf, r) = (q as f64, (q as f64).sqrt());
    ((qf - 2.0 * r - 2.0, qf + 2.0 * r - 1.0), (q - 3, q))
}

pub fn in_cubic_windows(q: u64, n: u64) -> bool {
    let ((lo, hi), (rlo, rhi)) = cubic_windows(q);
    (lo <= n as f64 && n as f64 <= hi) || (rlo..=rhi).contains(&n)
}

/// Non-degenerate, `(a12, a22) != (0, 0)`, and the standing hypothesis.
pub fn hasse_applicable(f: &Gf2h, c: &Conic) -> bool {
    !c.is_degenerate(f) && !(c.a12().is_zero() && c.a22().is_zero()) && standing_hypothesis(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct HasseCheck {
    pub conic: Conic,
    pub tangent_in_base: bool,
    pub n_g: u64,
    pub n_h: u64,
    pub in_window: bool,
    pub counts_equal: bool,
}

impl HasseCheck {
    pub fn holds(&self) -> bool {
        self.in_window && self.counts_equal
    }
}

pub fn hasse_window_check(ctx: &CurveContext, c: &Conic) -> Result<HasseCheck> {
    let f = ctx.base();
    if c.is_degenerate(f) {
        return Err(Error::DegenerateConic(c.to_string()));
    }
    let cubic = Cubic::build(ctx, c)?;
    let n_h = cubic.count(ctx);
    let n_g = super::poly::count_affine_points(f, &super::family::transformed(f, c, 0));
    Ok(HasseCheck {
        conic: *c,
        tangent_in_base: cubic.tangent.in_base,
        n_g,
        n_h,
        in_window: in_cubic_windows(f.q() as u64, n_h),
        counts_equal: n_g == n_h,
    })
}

/// Points `(x, t)` of `F` with `x != 0` whose image `(x, (t^2+t) x^2)` is
/// off `C`, off `Δ`, or has a fiber other than `{t, t+1}`.
pub fn psi_fiber_violations(f: &Gf2h, c: &Conic) -> Vec<(Fe, Fe)> {
    let pulled = super::family::pullback(f, c);
    let mut bad = Vec::new();
    for x in f.nonzero() {
        let x2 = f.square(x);
        for t in f.iter() {
            if !pulled.eval(f, x, t).is_zero() {
                continue;
            }
            let a = f.square(t) + t;
            let y = f.mul(a, x2);
            let in_delta = f.trace(a) == 0;
            let fiber: Vec<Fe> = f.iter().filter(|&u| f.mul(f.square(u) + u, x2) == y).collect();
            let mut expected = vec![t, t + Fe::ONE];
            expected.sort();
            if !c.eval(f, x, y).is_zero() || !in_delta || fiber != expected {
                bad.push((x, t));
            }
        }
    }
    bad
}
