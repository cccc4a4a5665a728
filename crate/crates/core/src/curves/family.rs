use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{ExtElem, Extension, Fe, Field, Gf2h};
use crate::geometry::Conic;

use super::poly::{count_affine_points, BivariatePoly};

pub type QuadElem = ExtElem<2>;

/// A base field together with its quadratic extension, where the tangent
/// parameter and the cubic curve live when they are not defined over the
/// base field.
#[derive(Clone, Debug)]
pub struct CurveContext {
    base: Gf2h,
    ext: Extension<2>,
}

impl CurveContext {
    pub fn new(base: &Gf2h) -> Self {
        Self { base: base.clone(), ext: Extension::<2>::new(base) }
    }

    pub fn base(&self) -> &Gf2h {
        &self.base
    }

    pub fn ext(&self) -> &Extension<2> {
        &self.ext
    }
}

/// A root `v` of `a11 + a12 v + a22 v^2 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TangentParameter {
    pub value: QuadElem,
    /// Whether `value` lies in the base field.
    pub in_base: bool,
}

/// The curves attached to a conic:
/// - `f`: `F(X,T)`, the pullback along `(X,T) -> (X, (T^2+T) X^2)`;
/// - `f_s`: `F / X^s`, with `s` the multiplicity of the component `X = 0`;
/// - `g`, `g_s`: the images under `(X,T) -> (X, XT)`;
/// - `h`: the cubic obtained from `g` by the quadratic transformation
///   based at the tangent parameter, when `(a12, a22) != (0, 0)`.
#[derive(Clone, Debug)]
pub struct CurveFamily {
    pub source: Conic,
    pub s: u32,
    pub f: BivariatePoly<Fe>,
    pub f_s: BivariatePoly<Fe>,
    pub g: BivariatePoly<Fe>,
    pub g_s: BivariatePoly<Fe>,
    pub tangent: Option<TangentParameter>,
    pub h: Option<BivariatePoly<QuadElem>>,
}

const XT: (&str, &str) = ("X", "T");
const XV: (&str, &str) = ("X", "V");

/// `0` if `a33 != 0`, `1` if only `a33` vanishes, `2` if `a33 = a13 = 0`
/// and `a11 != 0`; `None` when `a11 = a13 = a33 = 0`.
pub fn split_multiplicity(c: &Conic) -> Option<u32> {
    if !c.a33().is_zero() {
        Some(0)
    } else if !c.a13().is_zero() {
        Some(1)
    } else if !c.a11().is_zero() {
        Some(2)
    } else {
        None
    }
}

/// The pullback `F(X,T)`.
pub fn pullback(f: &Gf2h, c: &Conic) -> BivariatePoly<Fe> {
    // T^2 + T and T^4 + T^2 expanded
    let [a11, a12, a22, a13, a23, a33] = c.coeffs();
    BivariatePoly::from_terms(
        f,
        XT,
        [
            ((2, 0), a11),
            ((3, 2), a12),
            ((3, 1), a12),
            ((4, 4), a22),
            ((4, 2), a22),
            ((1, 0), a13),
            ((2, 2), a23),
            ((2, 1), a23),
            ((0, 0), a33),
        ],
    )
}

/// `G(X,V)`; with the `a13` and `a33` terms dropped as `s` requires.
pub fn transformed(f: &Gf2h, c: &Conic, s: u32) -> BivariatePoly<Fe> {
    let [a11, a12, a22, a13, a23, a33] = c.coeffs();
    let mut terms = vec![
        ((2, 0), a11),
        ((1, 2), a12),
        ((2, 1), a12),
        ((0, 4), a22),
        ((2, 2), a22),
        ((0, 2), a23),
        ((1, 1), a23),
    ];
    if s < 2 {
        terms.push(((1, 0), a13));
    }
    if s < 1 {
        terms.push(((0, 0), a33));
    }
    BivariatePoly::from_terms(f, XV, terms)
}

/// A root of `a11 + a12 v + a22 v^2`, in the base field whenever one exists
/// there (the smaller encoding of the two), otherwise in the extension.
pub fn tangent_parameter(ctx: &CurveContext, c: &Conic) -> Result<TangentParameter> {
    let (f, e) = (ctx.base(), ctx.ext());
    let (a11, a12, a22) = (c.a11(), c.a12(), c.a22());
    let base = |v: Fe| TangentParameter { value: e.embed(v), in_base: true };
    match (a12.is_zero(), a22.is_zero()) {
        (true, true) => Err(Error::Uncovered(format!("{c} has a12 = a22 = 0"))),
        (false, true) => Ok(base(f.div(a11, a12)?)),
        (true, false) => Ok(base(f.sqrt(f.div(a11, a22)?))),
        (false, false) => {
            // v = (a12 / a22) u with u^2 + u = a11 a22 / a12^2
            let ratio = f.div(a12, a22)?;
            let rhs = f.div(f.mul(a11, a22), f.square(a12))?;
            if let Some((u, _)) = f.solve_artin_schreier(rhs) {
                let (u0, u1) = (f.mul(ratio, u), f.mul(ratio, u + Fe::ONE));
                return Ok(base(u0.min(u1)));
            }
            let (u, _) = e.solve_artin_schreier(e.embed(rhs))?.expect("every base element is a trace-zero extension element");
            Ok(TangentParameter { value: e.scale(ratio, u), in_base: false })
        }
    }
}

fn quad_poly(e: &Extension<2>, terms: Vec<((u32, u32), QuadElem)>) -> BivariatePoly<QuadElem> {
    BivariatePoly::from_terms(e, XV, terms)
}

/// The cubic, ordered by powers of `X`.
pub fn cubic_by_x(e: &Extension<2>, c: &Conic, v: QuadElem) -> BivariatePoly<QuadElem> {
    let [_, a12, a22, a13, a23, a33] = c.coeffs().map(|x| e.embed(x));
    let m = |a, b| e.mul(a, b);
    let v2 = e.square(v);
    let v3 = m(v2, v);
    let vt = e.add(m(v, a23), a13);
    quad_poly(
        e,
        vec![
            ((2, 1), a22),
            ((2, 0), a12),
            ((1, 2), a12),
            ((1, 1), a23),
            ((1, 0), e.add(m(v2, a12), vt)),
            ((0, 2), vt),
            ((0, 1), a33),
            ((0, 0), e.add(m(v3, a23), m(v2, a13))),
        ],
    )
}

/// The same cubic, ordered by powers of `V`.
pub fn cubic_by_v(e: &Extension<2>, c: &Conic, v: QuadElem) -> BivariatePoly<QuadElem> {
    let [_, a12, a22, a13, a23, a33] = c.coeffs().map(|x| e.embed(x));
    let vt = e.add(e.mul(v, a23), a13);
    let lin = quad_poly(e, vec![((1, 0), a12), ((0, 0), vt)]);
    let v2 = e.square(v);
    let mut out = lin.mul(e, &quad_poly(e, vec![((0, 2), e.one())]));
    out = out.add(e, &quad_poly(e, vec![((2, 1), a22), ((1, 1), a23), ((0, 1), a33)]));
    out.add(e, &lin.mul(e, &quad_poly(e, vec![((1, 0), e.one()), ((0, 0), v2)])))
}

/// The cubic on its own, defined whenever `(a12, a22) != (0, 0)`.
#[derive(Clone, Debug)]
pub struct Cubic {
    pub tangent: TangentParameter,
    pub poly: BivariatePoly<QuadElem>,
}

impl Cubic {
    /// Builds both orderings and checks that they agree.
    pub fn build(ctx: &CurveContext, c: &Conic) -> Result<Self> {
        let tangent = tangent_parameter(ctx, c)?;
        let by_x = cubic_by_x(ctx.ext(), c, tangent.value);
        let by_v = cubic_by_v(ctx.ext(), c, tangent.value);
        if by_x != by_v {
            return Err(Error::Construction(format!("the two orderings of the cubic differ for {c}")));
        }
        Ok(Self { tangent, poly: by_x })
    }

    pub fn count(&self, ctx: &CurveContext) -> u64 {
        count_affine_points(ctx.ext(), &self.poly)
    }
}

impl CurveFamily {
    /// Builds every member; the cubic only when `(a12, a22) != (0, 0)`.
    pub fn build(ctx: &CurveContext, c: &Conic) -> Result<Self> {
        let f = ctx.base();
        let s = split_multiplicity(c)
            .ok_or_else(|| Error::Uncovered(format!("{c} has a11 = a13 = a33 = 0")))?;
        let full = pullback(f, c);
        let f_s = full.divide_by_first_power(s).ok_or_else(|| {
            Error::Construction(format!("X^{s} does not divide the pullback of {c}"))
        })?;
        let g = transformed(f, c, 0);
        let g_s = transformed(f, c, s);

        let (tangent, h) = if c.a12().is_zero() && c.a22().is_zero() {
            (None, None)
        } else {
            let cubic = Cubic::build(ctx, c)?;
            (Some(cubic.tangent), Some(cubic.poly))
        };
        Ok(Self { source: *c, s, f: full, f_s, g, g_s, tangent, h })
    }

    pub fn count_f(&self, ctx: &CurveContext) -> u64 {
        count_affine_points(ctx.base(), &self.f)
    }

    pub fn count_f_s(&self, ctx: &CurveContext) -> u64 {
        count_affine_points(ctx.base(), &self.f_s)
    }

    pub fn count_g(&self, ctx: &CurveContext) -> u64 {
        count_affine_points(ctx.base(), &self.g)
    }

    pub fn count_g_s(&self, ctx: &CurveContext) -> u64 {
        count_affine_points(ctx.base(), &self.g_s)
    }

    pub fn count_h(&self, ctx: &CurveContext) -> Option<u64> {
        self.h.as_ref().map(|h| count_affine_points(ctx.ext(), h))
    }

    /// Points at infinity of the cubic: `(1:0:0)`, `(0:1:0)` and
    /// `(a22:a12:0)` in coordinates `(V:X:Z)`.
    pub fn cubic_points_at_infinity(&self) -> Option<[[Fe; 3]; 3]> {
        self.h.as_ref()?;
        let c = &self.source;
        Some([[Fe::ONE, Fe::ZERO, Fe::ZERO], [Fe::ZERO, Fe::ONE, Fe::ZERO], [c.a22(), c.a12(), Fe::ZERO]])
    }
}

/// Points of `G^(s)` on the line `X = 0`, i.e. roots in the base field of
/// `a22 V^4 + a23 V^2 + a33`, by the trace rule; `None` if all three
/// coefficients vanish.
pub fn g_axis_points_closed_form(f: &Gf2h, c: &Conic) -> Option<u64> {
    let (a22, a23, a33) = (c.a22(), c.a23(), c.a33());
    match (a22.is_zero(), a23.is_zero()) {
        (true, true) => (!a33.is_zero()).then_some(0),
        (true, false) | (false, true) => Some(1),
        (false, false) => {
            let b = f.div(f.mul(a22, a33), f.square(a23)).expect("a23 != 0");
            Some(if f.trace(b) == 0 { 2 } else { 0 })
        }
    }
}

/// Summary of the member point counts, for reports.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyCounts {
    pub s: u32,
    pub n_f: u64,
    pub n_f_s: u64,
    pub n_g: u64,
    pub n_g_s: u64,
    pub n_h: Option<u64>,
}

impl FamilyCounts {
    pub fn of(ctx: &CurveContext, fam: &CurveFamily) -> Self {
        Self {
            s: fam.s,
            n_f: fam.count_f(ctx),
            n_f_s: fam.count_f_s(ctx),
            n_g: fam.count_g(ctx),
            n_g_s: fam.count_g_s(ctx),
            n_h: fam.count_h(ctx),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conic(c: [u32; 6]) -> Conic {
        Conic::new(c.map(Fe)).unwrap()
    }

    #[test]
    fn pullback_of_a_parabola() {
        let f = Gf2h::new(8).unwrap();
        let ctx = CurveContext::new(&f);
        // Y + X^2 + 1
        let fam = CurveFamily::build(&ctx, &conic([1, 0, 0, 0, 1, 1])).unwrap();
        assert_eq!(fam.s, 0);
        let expected = BivariatePoly::from_terms(
            &f,
            XT,
            [((2, 0), Fe::ONE), ((2, 2), Fe::ONE), ((2, 1), Fe::ONE), ((0, 0), Fe::ONE)],
        );
        assert_eq!(fam.f, expected);
        assert!(fam.h.is_none());
    }

    #[test]
    fn split_component_factors_out() {
        let f = Gf2h::new(8).unwrap();
        let ctx = CurveContext::new(&f);
        let c = conic([3, 1, 5, 2, 7, 0]);
        let fam = CurveFamily::build(&ctx, &c).unwrap();
        assert_eq!(fam.s, 1);
        let x = BivariatePoly::from_terms(&f, XT, [((1, 0), Fe::ONE)]);
        assert_eq!(fam.f_s.mul(&f, &x), fam.f);
        assert_eq!(fam.g_s, fam.g);
    }

    #[test]
    fn cubic_has_degree_three_and_a_valid_tangent() {
        let f = Gf2h::new(8).unwrap();
        let ctx = CurveContext::new(&f);
        let e = ctx.ext();
        for raw in [[1, 1, 1, 1, 1, 1], [3, 0, 5, 1, 2, 6], [4, 7, 0, 0, 1, 2], [1, 2, 3, 4, 5, 6]] {
            let c = conic(raw);
            let fam = CurveFamily::build(&ctx, &c).unwrap();
            let t = fam.tangent.unwrap();
            let [a11, a12, a22, ..] = c.coeffs().map(|x| e.embed(x));
            let q = e.add(e.add(a11, e.mul(a12, t.value)), e.mul(a22, e.square(t.value)));
            assert_eq!(q, e.zero());
            assert_eq!(t.in_base, e.to_base(t.value).is_some());
            let h = fam.h.clone().unwrap();
            assert_eq!(h.degree(), Some(3));
            // the cubic form vanishes at the three stated directions
            let top = h.top_form();
            for [v, x, _] in fam.cubic_points_at_infinity().unwrap() {
                assert_eq!(top.eval(e, e.embed(x), e.embed(v)), e.zero(), "{c}");
            }
        }
    }

    #[test]
    fn axis_points_match_evaluation() {
        let f = Gf2h::new(8).unwrap();
        for a22 in f.iter() {
            for a23 in f.iter() {
                for a33 in [Fe(0), Fe(1), Fe(5)] {
                    let Ok(c) = Conic::new([Fe(1), Fe(0), a22, Fe(0), a23, a33]) else { continue };
                    let g = transformed(&f, &c, 0);
                    let direct = f.iter().filter(|&v| g.eval(&f, Fe::ZERO, v).is_zero()).count() as u64;
                    match g_axis_points_closed_form(&f, &c) {
                        Some(n) => assert_eq!(n, direct, "{c}"),
                        None => assert_eq!(direct, 8),
                    }
                }
            }
        }
    }
}
