//! A net of conics over GF(q) with no degenerate member, obtained from a
//! triangle of Frobenius-conjugate points of the plane over GF(q^3).

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{dual_distance_upto, LinearSystemBasis, MAX_DUAL_SEARCH};
use crate::error::{Error, Result};
use crate::field::{ExtElem, Extension, Fe, Field, Gf2h};
use crate::geometry::{cross, det3, Conic, DeltaSet, ProjectiveClasses, ProjectivePoint};
use crate::report::{set_string, Claim};

use super::systems::{CodeReport, DualDistance, EvaluatedCode};

pub type CubicElem = ExtElem<3>;
pub type CubicPoint = ProjectivePoint<CubicElem>;

/// How a point of `Λ` is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaSearch {
    /// The first point of `Λ` in canonical order.
    Scan,
    /// Uniform draws from a ChaCha8 stream until one lies in `Λ`.
    Seeded(u64),
}

/// `P` is in `Λ` when it and its two Frobenius conjugates are not collinear.
pub fn in_lambda(ext: &Extension<3>, p: &CubicPoint) -> bool {
    let p0 = p.coords();
    let p1 = p0.map(|c| ext.frobenius(c));
    let p2 = p1.map(|c| ext.frobenius(c));
    p0 != p1 && !ext.is_zero(det3(ext, p0, p1, p2))
}

fn random_point(ext: &Extension<3>, rng: &mut ChaCha8Rng) -> CubicPoint {
    loop {
        let coords = [(); 3].map(|_| ext.from_index(rng.gen_range(0..ext.order())));
        if let Some(p) = ProjectivePoint::new(ext, coords) {
            return p;
        }
    }
}

pub fn find_lambda_point(ext: &Extension<3>, search: LambdaSearch) -> CubicPoint {
    match search {
        LambdaSearch::Scan => {
            ProjectivePoint::all(ext).find(|p| in_lambda(ext, p)).expect("Λ is nonempty")
        }
        LambdaSearch::Seeded(seed) => sample_lambda_points(ext, seed, 1).remove(0),
    }
}

/// `count` points of `Λ` drawn in sequence from one seeded stream.
pub fn sample_lambda_points(ext: &Extension<3>, seed: u64, count: usize) -> Vec<CubicPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = random_point(ext, &mut rng);
        if in_lambda(ext, &p) {
            out.push(p);
        }
    }
    out
}

/// `|Λ|` by a scan of the whole plane over GF(q^3).
pub fn lambda_count(ext: &Extension<3>) -> u64 {
    let n = ext.order();
    let total = n * n + n + 1;
    let all: Vec<CubicPoint> = ProjectivePoint::all(ext).collect();
    debug_assert_eq!(all.len() as u64, total);
    all.par_iter().filter(|p| in_lambda(ext, p)).count() as u64
}

/// `q^6 - q^5 - q^4 + q^3`.
pub fn lambda_count_formula(q: u64) -> u64 {
    q.pow(6) - q.pow(5) - q.pow(4) + q.pow(3)
}

/// The triangle `P, P^q, P^{q^2}` and its sides.
#[derive(Clone, Debug)]
pub struct NetContext {
    base: Gf2h,
    ext: Extension<3>,
    vertices: [[CubicElem; 3]; 3],
    /// `P P1`, `P1 P2`, `P2 P`.
    sides: [[CubicElem; 3]; 3],
}

fn serialize_ext(ext: &Extension<3>, v: &[CubicElem]) -> Vec<String> {
    v.iter().map(|&x| ext.hex(x)).collect()
}

impl NetContext {
    pub fn new(base: &Gf2h, ext: &Extension<3>, p: &CubicPoint) -> Result<Self> {
        if !in_lambda(ext, p) {
            return Err(Error::Construction("the point is not in Λ".into()));
        }
        let p0 = p.coords();
        let p1 = p0.map(|c| ext.frobenius(c));
        let p2 = p1.map(|c| ext.frobenius(c));
        let sides = [cross(ext, p0, p1), cross(ext, p1, p2), cross(ext, p2, p0)];
        Ok(Self { base: base.clone(), ext: ext.clone(), vertices: [p0, p1, p2], sides })
    }

    pub fn base(&self) -> &Gf2h {
        &self.base
    }

    pub fn ext(&self) -> &Extension<3> {
        &self.ext
    }

    pub fn vertices(&self) -> [[CubicElem; 3]; 3] {
        self.vertices
    }

    pub fn sides(&self) -> [[CubicElem; 3]; 3] {
        self.sides
    }

    /// Coordinates of `P` as hex indices of GF(q^3) elements.
    pub fn point_hex(&self) -> Vec<String> {
        serialize_ext(&self.ext, &self.vertices[0])
    }

    /// Coefficients over GF(q^3) of `λ l1 l2 + λ^q l2 l3 + λ^{q^2} l3 l1`
    /// in the order `X^2, XY, Y^2, XZ, YZ, Z^2`.
    pub fn raw_coefficients(&self, lambda: CubicElem) -> [CubicElem; 6] {
        let e = &self.ext;
        let l1 = e.frobenius(lambda);
        let l2 = e.frobenius(l1);
        let [s1, s2, s3] = self.sides;
        let mut out = [e.zero(); 6];
        for (scale, u, v) in [(lambda, s1, s2), (l1, s2, s3), (l2, s3, s1)] {
            for (o, c) in out.iter_mut().zip(quadratic_product(e, u, v)) {
                *o = e.add(*o, e.mul(scale, c));
            }
        }
        out
    }

    /// `C_λ` over GF(q), unnormalized, or an error when some coefficient is
    /// not fixed by Frobenius.
    pub fn conic(&self, lambda: CubicElem) -> Result<Conic> {
        let raw = self.raw_coefficients(lambda);
        let mut coeffs = [Fe::ZERO; 6];
        for (c, r) in coeffs.iter_mut().zip(raw) {
            *c = self.ext.to_base(r).ok_or_else(|| {
                Error::Construction(format!("a coefficient of the member for λ = {} is not in GF(q)", self.ext.hex(lambda)))
            })?;
        }
        Conic::new(coeffs)
    }

    /// The members `C_1, C_β, C_{β^2}` with `β` the class of `z`.
    pub fn basis(&self) -> Result<LinearSystemBasis> {
        let polys = (0..3).map(|i| self.conic(self.ext.monomial(i))).collect::<Result<Vec<_>>>()?;
        Ok(LinearSystemBasis::new("net", polys))
    }

    /// One entry per class of `λ` modulo nonzero scalars of GF(q), with the
    /// checks recorded rather than enforced.
    pub fn members(&self) -> Vec<NetMember> {
        let q = self.base.q() as u64;
        ProjectiveClasses::<3>::new(q)
            .iter()
            .map(|digits| {
                let lambda = ExtElem(digits);
                let raw = self.raw_coefficients(lambda);
                let fixed = raw.iter().all(|&c| self.ext.frobenius(c) == c);
                let conic = raw.map(|c| self.ext.to_base(c).unwrap_or(Fe::ZERO));
                let conic = Conic::new(conic).ok().map(|c| c.normalized(&self.base));
                let degenerate = conic.is_none_or(|c| c.is_degenerate(&self.base));
                NetMember { lambda: digits, conic, frobenius_fixed: fixed, degenerate }
            })
            .collect()
    }
}

/// Product of two linear forms in `X, Y, Z`.
fn quadratic_product<F: Field>(f: &F, u: [F::Elem; 3], v: [F::Elem; 3]) -> [F::Elem; 6] {
    let m = |a, b| f.mul(a, b);
    [
        m(u[0], v[0]),
        f.add(m(u[0], v[1]), m(u[1], v[0])),
        m(u[1], v[1]),
        f.add(m(u[0], v[2]), m(u[2], v[0])),
        f.add(m(u[1], v[2]), m(u[2], v[1])),
        m(u[2], v[2]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NetMember {
    /// `λ = c0 + c1 β + c2 β^2`.
    pub lambda: [Fe; 3],
    /// The normalized conic, when all coefficients lie in GF(q).
    pub conic: Option<Conic>,
    pub frobenius_fixed: bool,
    pub degenerate: bool,
}

impl NetMember {
    /// No `XY` and no `Y^2` term.
    pub fn is_parabola_shape(&self) -> bool {
        self.conic.is_some_and(|c| c.a12().is_zero() && c.a22().is_zero())
    }
}

/// The validated net: every member over GF(q) and non-degenerate.
pub fn build_net(ctx: &NetContext) -> Result<Vec<Conic>> {
    ctx.members()
        .into_iter()
        .map(|m| match (m.conic, m.frobenius_fixed, m.degenerate) {
            (Some(c), true, false) => Ok(c),
            _ => Err(Error::Construction(format!(
                "member for λ = {} is {}",
                set_string(m.lambda),
                if m.frobenius_fixed { "degenerate" } else { "not defined over GF(q)" }
            ))),
        })
        .collect()
}

/// Counts over the members, for reports.
#[derive(Clone, Debug, Serialize)]
pub struct NetSummary {
    pub q: u64,
    pub point: Vec<String>,
    pub members: usize,
    pub distinct_members: usize,
    pub frobenius_fixed: usize,
    pub degenerate: usize,
    pub parabola_shaped: usize,
    pub claims: Vec<Claim>,
}

pub fn summarize_net(ctx: &NetContext) -> NetSummary {
    let q = ctx.base.q() as u64;
    let members = ctx.members();
    let distinct: std::collections::BTreeSet<String> =
        members.iter().filter_map(|m| m.conic.map(|c| c.to_hex())).collect();
    let fixed = members.iter().filter(|m| m.frobenius_fixed).count();
    let degenerate = members.iter().filter(|m| m.degenerate).count();
    let parabola = members.iter().filter(|m| m.is_parabola_shape()).count();
    let expected = (q * q + q + 1) as usize;
    let claims = vec![
        Claim::equal("the net has q^2+q+1 members", expected, members.len()),
        Claim::equal("members are pairwise distinct", expected, distinct.len()),
        Claim::equal("every coefficient is fixed by Frobenius", expected, fixed),
        Claim::equal("no member is degenerate", 0, degenerate),
        Claim::equal("exactly one member has no XY and no Y^2 term", 1, parabola),
    ];
    NetSummary {
        q,
        point: ctx.point_hex(),
        members: members.len(),
        distinct_members: distinct.len(),
        frobenius_fixed: fixed,
        degenerate,
        parabola_shaped: parabola,
        claims,
    }
}

/// `(q^2 - 2q - 2 sqrt q + 1) / 2`.
pub fn distance_lower_bound(q: u64) -> f64 {
    let qf = q as f64;
    (qf * qf - 2.0 * qf - 2.0 * qf.sqrt() + 1.0) / 2.0
}

/// `[(q - 2 sqrt q - 2) / 2, (q + 2 sqrt q - 1) / 2]`.
pub fn intersection_window(q: u64) -> (f64, f64) {
    let (qf, r) = (q as f64, (q as f64).sqrt());
    ((qf - 2.0 * r - 2.0) / 2.0, (qf + 2.0 * r - 1.0) / 2.0)
}

/// The code of the net on `Δ`, with the dual distance searched up to 4.
pub fn construction1_code(ctx: &NetContext, delta: &DeltaSet, budget: u128) -> Result<CodeReport> {
    let q = ctx.base.q() as u64;
    let code = EvaluatedCode::new(ctx.basis()?, delta, budget)?;
    let mut report = code.report(q);
    let dual = dual_distance_upto(&ctx.base, &code.matrix, MAX_DUAL_SEARCH);
    report.dual_distance = Some(DualDistance { searched_upto: MAX_DUAL_SEARCH, found: dual });
    report.claims = construction1_claims(&report, q);
    Ok(report)
}

fn construction1_claims(report: &CodeReport, q: u64) -> Vec<Claim> {
    let n = (q * (q - 1) / 2) as usize;
    let d_shown = report.d.map_or("-".to_string(), |d| d.to_string());
    let mut claims = vec![
        Claim::equal("length is q(q-1)/2", n, report.n),
        Claim::equal("dimension is 3", 3, report.k),
    ];
    if q == 8 {
        let holds = matches!(report.d, Some(21 | 22));
        claims.push(Claim::asserted("minimum distance is 21 or 22", "{21, 22}", &d_shown, holds));
    }
    let bound = distance_lower_bound(q);
    claims.push(Claim::probe(
        "minimum distance is at least (q^2-2q-2 sqrt q+1)/2",
        format!(">= {bound:.2}"),
        &d_shown,
        report.d.is_some_and(|d| d as f64 >= bound),
    ));
    let (lo, hi) = intersection_window(q);
    let weights = report.weight_distribution.weights();
    let literal = weights.iter().all(|&w| lo <= w as f64 && w as f64 <= hi);
    claims.push(Claim::probe(
        "every nonzero weight lies in [(q-2 sqrt q-2)/2, (q+2 sqrt q-1)/2]",
        format!("[{lo:.2}, {hi:.2}]"),
        set_string(&weights),
        literal,
    ));
    let zeros: Vec<usize> = weights.iter().map(|&w| report.n - w).collect();
    let as_intersections = zeros.iter().all(|&z| lo <= z as f64 && z as f64 <= hi);
    claims.push(Claim::probe(
        "every n - w (points of Δ on a member) lies in [(q-2 sqrt q-2)/2, (q+2 sqrt q-1)/2]",
        format!("[{lo:.2}, {hi:.2}]"),
        set_string(&zeros),
        as_intersections,
    ));
    claims
}

/// Outcome for one sampled point.
#[derive(Clone, Debug, Serialize)]
pub struct NetSample {
    pub point: Vec<String>,
    pub d: Option<usize>,
    pub dual_distance: Option<usize>,
    pub weights: Vec<(usize, u64)>,
}

/// Construction 1 over many seeded points of `Λ`.
#[derive(Clone, Debug, Serialize)]
pub struct NetSurvey {
    pub q: u64,
    pub seed: u64,
    pub samples: Vec<NetSample>,
    pub distance_histogram: BTreeMap<usize, usize>,
    pub dual_distance_histogram: BTreeMap<String, usize>,
    pub claims: Vec<Claim>,
}

impl NetSurvey {
    pub fn holds(&self) -> bool {
        crate::report::all_hold(&self.claims)
    }
}

pub fn construction1_survey(
    base: &Gf2h,
    ext: &Extension<3>,
    delta: &DeltaSet,
    seed: u64,
    count: usize,
    budget: u128,
) -> Result<NetSurvey> {
    let q = base.q() as u64;
    let points = sample_lambda_points(ext, seed, count);
    let reports: Vec<(Vec<String>, CodeReport)> = points
        .par_iter()
        .map(|p| {
            let ctx = NetContext::new(base, ext, p)?;
            Ok((ctx.point_hex(), construction1_code(&ctx, delta, budget)?))
        })
        .collect::<Result<_>>()?;

    let mut distance_histogram = BTreeMap::new();
    let mut dual_distance_histogram = BTreeMap::new();
    let mut samples = Vec::with_capacity(count);
    let mut claims = Vec::new();
    let mut failing: BTreeMap<String, usize> = BTreeMap::new();
    let n = (q * (q - 1) / 2) as usize;
    let mut shaped = 0;
    for (point, r) in reports {
        shaped += usize::from(r.n == n && r.k == 3);
        *distance_histogram.entry(r.d.unwrap_or(0)).or_insert(0) += 1;
        let dual = r.dual_distance.and_then(|x| x.found);
        let key = dual.map_or(format!(">{MAX_DUAL_SEARCH}"), |x| x.to_string());
        *dual_distance_histogram.entry(key).or_insert(0) += 1;
        for c in r.claims.iter().filter(|c| !c.holds) {
            *failing.entry(format!("{:?}: {}", c.kind, c.statement)).or_insert(0) += 1;
        }
        samples.push(NetSample { point, d: r.d, dual_distance: dual, weights: r.weight_distribution.pairs() });
    }
    claims.push(Claim::asserted(
        format!("every sampled code is [{n}, 3]"),
        format!("{count} samples"),
        format!("{shaped} samples"),
        shaped == count,
    ));
    for (statement, times) in &failing {
        let asserted = statement.starts_with("Asserted");
        let text = format!("{} (per sample)", statement.split_once(": ").map_or(statement.as_str(), |x| x.1));
        let expected = format!("all {count} samples");
        let observed = format!("{times} of {count} samples fail");
        claims.push(if asserted {
            Claim::asserted(text, expected, observed, false)
        } else {
            Claim::probe(text, expected, observed, false)
        });
    }
    if q == 8 {
        let threes = samples.iter().filter(|s| s.dual_distance == Some(3)).count();
        claims.push(Claim::asserted(
            "some sampled code has dual distance 3",
            ">= 1 sample",
            format!("{threes} samples"),
            threes > 0,
        ));
    }
    Ok(NetSurvey { q, seed, samples, distance_histogram, dual_distance_histogram, claims })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn context(q: u64) -> NetContext {
        let f = Gf2h::new(q).unwrap();
        let ext = Extension::<3>::new(&f);
        let p = find_lambda_point(&ext, LambdaSearch::Scan);
        NetContext::new(&f, &ext, &p).unwrap()
    }

    #[test]
    fn rational_points_are_rejected() {
        let f = Gf2h::new(4).unwrap();
        let ext = Extension::<3>::new(&f);
        let p = ProjectivePoint::new(&ext, [ext.one(), ext.embed(Fe(2)), ext.embed(Fe(3))]).unwrap();
        assert!(!in_lambda(&ext, &p));
    }

    #[test]
    fn sides_cycle_under_frobenius() {
        let ctx = context(4);
        let e = ctx.ext();
        let [s1, s2, s3] = ctx.sides();
        assert_eq!(s1.map(|c| e.frobenius(c)), s2);
        assert_eq!(s2.map(|c| e.frobenius(c)), s3);
        assert_eq!(s3.map(|c| e.frobenius(c)), s1);
    }

    #[test]
    fn net_at_four() {
        let ctx = context(4);
        let net = build_net(&ctx).unwrap();
        assert_eq!(net.len(), 21);
        let summary = summarize_net(&ctx);
        assert!(crate::report::all_hold(&summary.claims), "{:?}", summary.claims);
    }

    #[test]
    fn member_map_is_linear() {
        let ctx = context(8);
        let (f, e) = (ctx.base().clone(), ctx.ext().clone());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = e.from_index(rng.gen_range(1..512));
            let b = e.from_index(rng.gen_range(1..512));
            let s = Fe(rng.gen_range(1..8));
            let (ca, cb) = (ctx.conic(a).unwrap(), ctx.conic(b).unwrap());
            if let Ok(sum) = ctx.conic(e.add(a, b)) {
                let expected: Vec<Fe> = ca.coeffs().iter().zip(cb.coeffs()).map(|(&x, y)| x + y).collect();
                assert_eq!(sum.coeffs().to_vec(), expected);
            }
            assert_eq!(ctx.conic(e.scale(s, a)).unwrap(), ca.scaled(&f, s));
        }
    }

    #[test]
    fn lambda_count_at_four() {
        let f = Gf2h::new(4).unwrap();
        let ext = Extension::<3>::new(&f);
        assert_eq!(lambda_count(&ext), 2880);
        assert_eq!(lambda_count_formula(4), 2880);
    }

    #[test]
    fn seeded_search_is_deterministic() {
        let f = Gf2h::new(8).unwrap();
        let ext = Extension::<3>::new(&f);
        let a = sample_lambda_points(&ext, 1, 5);
        assert_eq!(a, sample_lambda_points(&ext, 1, 5));
        assert_eq!(a[0], find_lambda_point(&ext, LambdaSearch::Seeded(1)));
    }
}
