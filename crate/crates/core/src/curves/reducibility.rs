//! Linear components of the cubic, decided by closed-form conditions on the
//! conic's coefficients and the tangent parameter.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::Conic;

use super::family::{Cubic, CurveContext, QuadElem};
use super::poly::BivariatePoly;

/// The elimination resultants, for coefficients `a = [a11, a12, a22, a13,
/// a23, a33]` and any `v`. They are plain polynomials, so they make sense
/// whether or not `v` is a root of `a11 + a12 v + a22 v^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Resultants<E> {
    /// Line `X = const` through `(1:0:0)`.
    pub u12: E,
    pub z12: E,
    pub z13: E,
    /// Line through `(a22:a12:0)`, written in the `(V, W)` chart.
    pub q12: E,
    pub q13: E,
    /// Line `V = const` through `(0:1:0)`.
    pub r12: E,
    pub r13: E,
    /// Line `X = const` when `a22 = 0`.
    pub s12: E,
}

fn monomial<F: Field>(f: &F, factors: &[F::Elem]) -> F::Elem {
    factors.iter().fold(f.one(), |acc, &x| f.mul(acc, x))
}

fn sum<F: Field>(f: &F, terms: &[F::Elem]) -> F::Elem {
    terms.iter().fold(f.zero(), |acc, &x| f.add(acc, x))
}

impl<E: Copy + Eq> Resultants<E> {
    pub fn compute<F: Field<Elem = E>>(f: &F, a: [E; 6], v: E) -> Self {
        let [_, a12, a22, a13, a23, a33] = a;
        let p = |xs: &[E]| monomial(f, xs);
        let u12 = sum(f, &[p(&[v, v, a22, a23, a23]), p(&[v, a12, a23, a23]), p(&[a12, a12, a33]), p(&[a12, a13, a23]), p(&[a22, a13, a13])]);
        let z12 = u12;
        let z13 = f.mul(f.add(f.mul(v, a23), a13), z12);
        let a22_3 = p(&[a22, a22, a22]);
        let a22_4 = f.mul(a22_3, a22);
        let a12_3 = p(&[a12, a12, a12]);
        let q12 = sum(f, &[p(&[v, v, a12, a22_3]), p(&[v, a22_3, a23]), p(&[a12_3, a22]), p(&[a12, a22, a22, a23]), p(&[a22_3, a13])]);
        let q13 = sum(
            f,
            &[
                p(&[v, v, v, a22_4, a23]),
                p(&[v, v, a12_3, a22, a22]),
                p(&[v, v, a22_4, a13]),
                p(&[a12_3, a12, a12]),
                p(&[a12_3, a22, a23]),
                p(&[a12, a22_3, a33]),
            ],
        );
        let r12 = sum(f, &[p(&[v, v, a12, a22, a22]), p(&[v, a22, a22, a23]), a12_3, p(&[a12, a22, a23]), p(&[a22, a22, a13])]);
        let r13 = sum(
            f,
            &[p(&[v, v, v, a22, a22, a23]), p(&[v, v, a22, a22, a13]), p(&[v, a12, a12, a23]), p(&[a12, a22, a33]), p(&[a12, a12, a13])],
        );
        let s12 = sum(f, &[f.mul(a12, a33), p(&[a23, a23, v]), f.mul(a13, a23)]);
        Self { u12, z12, z13, q12, q13, r12, r13, s12 }
    }
}

/// Which of the three coefficient regimes applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReducibilityCase {
    /// `a12 != 0`, `a22 != 0`.
    General,
    /// `a12 = 0`, `a22 != 0`.
    NoMixedTerm,
    /// `a22 = 0`, `a12 != 0`.
    NoSquareTerm,
}

/// Outcome of the criteria for one conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibilityVerdict {
    pub case: ReducibilityCase,
    /// A line through `(1:0:0)` is a component.
    pub line_v: bool,
    /// A line through `(a22:a12:0)` is a component (general case only).
    pub line_q: bool,
    /// A line through `(0:1:0)` is a component.
    pub line_x: bool,
}

impl ReducibilityVerdict {
    pub fn reducible(&self) -> bool {
        self.line_v || self.line_q || self.line_x
    }
}

pub fn reducibility_case(c: &Conic) -> Option<ReducibilityCase> {
    match (c.a12().is_zero(), c.a22().is_zero()) {
        (false, false) => Some(ReducibilityCase::General),
        (true, false) => Some(ReducibilityCase::NoMixedTerm),
        (false, true) => Some(ReducibilityCase::NoSquareTerm),
        (true, true) => None,
    }
}

/// Evaluates the criteria; the cubic has a linear component iff the
/// verdict is reducible.
pub fn reducibility_conditions(ctx: &CurveContext, c: &Conic) -> Result<ReducibilityVerdict> {
    let case = reducibility_case(c).ok_or_else(|| Error::Uncovered(format!("{c} has a12 = a22 = 0")))?;
    let e = ctx.ext();
    let v = super::family::tangent_parameter(ctx, c)?.value;
    let a = c.coeffs().map(|x| e.embed(x));
    let r = Resultants::compute(e, a, v);
    let zero = e.zero();
    let vt = e.add(e.mul(v, a[4]), a[3]);
    Ok(match case {
        ReducibilityCase::General => ReducibilityVerdict {
            case,
            line_v: r.u12 == zero,
            line_q: r.z12 == zero && r.z13 == zero,
            line_x: r.r12 == zero && r.r13 == zero,
        },
        ReducibilityCase::NoMixedTerm => {
            ReducibilityVerdict { case, line_v: vt == zero, line_q: false, line_x: vt == zero }
        }
        ReducibilityCase::NoSquareTerm => {
            ReducibilityVerdict { case, line_v: r.s12 == zero, line_q: false, line_x: false }
        }
    })
}

/// A line `a X + b V + c = 0` over the quadratic extension.
pub type QuadLine = [QuadElem; 3];

/// The linear components recovered by exact division, and the cofactor
/// left over (a nonzero constant when the cubic splits into lines).
#[derive(Clone, Debug)]
pub struct LinearFactors {
    pub lines: Vec<QuadLine>,
    pub cofactor: BivariatePoly<QuadElem>,
}

impl LinearFactors {
    pub fn splits_completely(&self) -> bool {
        self.cofactor.degree() == Some(0)
    }
}

/// Roots in the quadratic extension of `a Z^2 + b Z + c`, `a != 0`.
fn quadratic_roots(ctx: &CurveContext, a: QuadElem, b: QuadElem, c: QuadElem) -> Result<Vec<QuadElem>> {
    let e = ctx.ext();
    if b == e.zero() {
        // one double root, the square root of c / a
        let r = e.div(c, a)?;
        let sqrt = e.pow(r, e.order() / 2);
        return Ok(vec![sqrt]);
    }
    // Z = (b/a) u with u^2 + u = a c / b^2
    let ratio = e.div(b, a)?;
    let rhs = e.div(e.mul(a, c), e.square(b))?;
    Ok(match e.solve_artin_schreier(rhs)? {
        Some((u0, u1)) => vec![e.mul(ratio, u0), e.mul(ratio, u1)],
        None => Vec::new(),
    })
}

/// Splits off the linear components predicted by the criteria: `X = xi`
/// through `(1:0:0)`, `V = nu` through `(0:1:0)`; whatever linear factor
/// remains is the line through `(a22:a12:0)`.
pub fn recover_linear_factors(ctx: &CurveContext, c: &Conic) -> Result<LinearFactors> {
    let e = ctx.ext();
    let cubic = Cubic::build(ctx, c)?;
    let v = cubic.tangent.value;
    let [_, a12, a22, a13, a23, a33] = c.coeffs().map(|x| e.embed(x));
    let vt = e.add(e.mul(v, a23), a13);
    let (zero, one) = (e.zero(), e.one());

    let mut candidates: Vec<QuadLine> = Vec::new();
    if a12 != zero {
        candidates.push([one, zero, e.div(vt, a12)?]);
    } else if a22 != zero {
        for xi in quadratic_roots(ctx, a22, a23, a33)? {
            candidates.push([one, zero, xi]);
        }
    }
    if a22 != zero {
        candidates.push([zero, one, e.div(a12, a22)?]);
    }

    let mut lines = Vec::new();
    let mut rest = cubic.poly;
    for line in candidates {
        if let Some(quotient) = rest.divide_linear(e, line) {
            lines.push(line);
            rest = quotient;
        }
    }
    if !lines.is_empty() && rest.degree() == Some(1) {
        lines.push([rest.coeff(e, 1, 0), rest.coeff(e, 0, 1), rest.coeff(e, 0, 0)]);
        rest = BivariatePoly::from_terms(e, rest.vars(), [((0, 0), one)]);
    }
    Ok(LinearFactors { lines, cofactor: rest })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fe, Gf2h};
    use crate::geometry::conic_classes;

    #[test]
    fn resultant_identities_hold_for_any_v() {
        let f = Gf2h::new(16).unwrap();
        let mut seed = 0x1234_5678u32;
        let mut next = || {
            seed = seed.wrapping_mul(1_103_515_245).wrapping_add(12345);
            Fe((seed >> 16) & 15)
        };
        for _ in 0..500 {
            let a = [next(), next(), next(), next(), next(), next()];
            let r = Resultants::compute(&f, a, next());
            let (a12, a22) = (a[1], a[2]);
            assert_eq!(r.q12, f.mul(a22, r.r12));
            let rhs = f.add(f.mul(f.square(a22), r.r13), f.mul(f.square(a12), r.r12));
            assert_eq!(r.q13, rhs);
        }
    }

    #[test]
    fn line_pair_through_origin_leaves_a_conic() {
        // X^2 + XY + Y^2 is two conjugate lines, yet the cubic is X times
        // an irreducible conic
        let f = Gf2h::new(4).unwrap();
        let ctx = CurveContext::new(&f);
        let c = Conic::new([Fe(1), Fe(1), Fe(1), Fe(0), Fe(0), Fe(0)]).unwrap();
        let factors = recover_linear_factors(&ctx, &c).unwrap();
        assert_eq!(factors.lines.len(), 1);
        assert_eq!(factors.cofactor.degree(), Some(2));
    }

    #[test]
    fn criteria_match_degeneracy_and_factors_divide() {
        for q in [4u64, 8] {
            let f = Gf2h::new(q).unwrap();
            let ctx = CurveContext::new(&f);
            let e = ctx.ext();
            for raw in conic_classes(q).iter() {
                let c = Conic::new(raw).unwrap();
                if reducibility_case(&c).is_none() {
                    continue;
                }
                let verdict = reducibility_conditions(&ctx, &c).unwrap();
                assert_eq!(verdict.reducible(), c.is_degenerate(&f), "{c} {verdict:?}");
                if q == 4 && verdict.reducible() {
                    let factors = recover_linear_factors(&ctx, &c).unwrap();
                    assert!(!factors.lines.is_empty(), "{c}");
                    let cubic = Cubic::build(&ctx, &c).unwrap().poly;
                    let product = factors.lines.iter().fold(factors.cofactor.clone(), |acc, l| {
                        let lp = BivariatePoly::from_terms(e, acc.vars(), [((1, 0), l[0]), ((0, 1), l[1]), ((0, 0), l[2])]);
                        acc.mul(e, &lp)
                    });
                    assert_eq!(product, cubic, "{c}");
                }
            }
        }
    }
}
