use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curves::{
    g_axis_points_closed_form, hasse_applicable, hasse_window_check, psi_fiber_violations, recover_linear_factors,
    reducibility_case, reducibility_conditions, standing_hypothesis, verify_count_relations, verify_lemma_delta,
    BivariatePoly, Cubic, CurveContext, CurveFamily, Resultants,
};
use crate::error::{Error, Result};
use crate::field::{Fe, Gf2h};
use crate::geometry::{conic_classes, Conic, DeltaSet};

use super::{par_indexed, Suite, SuiteReport, Sweep, VerifyOptions};

/// Fibers of the parametrization and explicit factorizations are checked up
/// to this order.
const SMALL_Q: u64 = 8;
const IDENTITY_SAMPLES: usize = 4096;

/// Runs `check` over every conic class in parallel, in class order.
fn over_classes<T: Send>(f: &Gf2h, check: impl Fn(Conic) -> T + Sync + Send) -> Vec<T> {
    let classes = conic_classes(f.q() as u64);
    par_indexed(classes.len(), |i| check(Conic::new(classes.nth(i)).expect("nonzero class")))
}

/// `Ok(None)` for patterns a statement does not cover; other errors abort.
fn covered<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::Uncovered(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub(super) fn lemma(f: &Gf2h, opts: VerifyOptions) -> Result<SuiteReport> {
    let q = f.q() as u64;
    let mut report = SuiteReport::new(Suite::Lemma, q);
    if !opts.class_sweeps_allowed(q) {
        report.skip("intersection with Δ ∪ {O} from the transformed curve", q);
        return Ok(report);
    }
    let ctx = CurveContext::new(f);
    let delta_bar = DeltaSet::new(f, true);
    let rows = over_classes(f, |c| covered(verify_lemma_delta(&ctx, &delta_bar, &c)));
    let mut sweep = Sweep::new("|(Δ ∪ {O}) ∩ C| equals the case formula in N(F^(s)) for every conic with (a11, a13, a33) != 0");
    for row in rows {
        match row? {
            None => report.tally("classes with a11 = a13 = a33 = 0 (not covered)", 1),
            Some(check) => {
                report.tally(format!("case {:?}", check.case), 1);
                sweep.record(check.holds, || {
                    (check.conic.to_string(), format!("{:?}: |Δ̄ ∩ C| = {}, N = {}", check.case, check.delta_bar_count, check.curve_count))
                });
            }
        }
    }
    report.push_sweep(sweep);

    if q <= SMALL_Q {
        let rows = over_classes(f, |c| (c, psi_fiber_violations(f, &c)));
        let mut fibers = Sweep::new("each affine point of F with x != 0 maps onto C ∩ Δ with fiber {t, t + 1}");
        for (c, bad) in rows {
            fibers.record(bad.is_empty(), || (c.to_string(), format!("{} bad points, first {:?}", bad.len(), bad[0])));
        }
        report.push_sweep(fibers);
    } else {
        report.skipped.push(format!("fibers of the parametrization: not run above q = {SMALL_Q}"));
    }
    Ok(report)
}

/// `G^(s)` on `X = 0`, counted directly.
fn g_axis_points(f: &Gf2h, g: &BivariatePoly<Fe>) -> u64 {
    f.iter().filter(|&v| g.eval(f, Fe::ZERO, v).is_zero()).count() as u64
}

pub(super) fn relations(f: &Gf2h, opts: VerifyOptions) -> Result<SuiteReport> {
    let q = f.q() as u64;
    let mut report = SuiteReport::new(Suite::Relations, q);
    if !opts.class_sweeps_allowed(q) {
        report.skip("count relations between F^(s) and G^(s)", q);
        return Ok(report);
    }
    let ctx = CurveContext::new(f);
    let rows = over_classes(f, |c| -> Result<Option<_>> {
        if !standing_hypothesis(&c) {
            return Ok(None);
        }
        let Some(check) = covered(verify_count_relations(&ctx, &c))? else { return Ok(None) };
        let fam = CurveFamily::build(&ctx, &c)?;
        let axis = (g_axis_points_closed_form(f, &c), g_axis_points(f, &fam.g_s));
        Ok(Some((check, axis)))
    });
    let mut sweep = Sweep::new("N(F^(s)) - N(G^(s)) equals the tabulated offset for every conic satisfying the standing hypothesis");
    let mut axis = Sweep::new("G^(s) meets X = 0 in the number of points given by the trace rule");
    for row in rows {
        let Some((check, (stated, counted))) = row? else {
            report.tally("classes outside the standing hypothesis or with a11 = a13 = a33 = 0", 1);
            continue;
        };
        report.tally(format!("s = {} row {}", check.row.s, check.row.row), 1);
        sweep.record(check.holds, || {
            (check.conic.to_string(), format!("N(F^(s)) = {}, N(G^(s)) = {}, offset {}", check.n_f_s, check.n_g_s, check.row.offset))
        });
        if let Some(stated) = stated {
            axis.record(stated == counted, || (check.conic.to_string(), format!("{counted} points, stated {stated}")));
        }
    }
    report.push_sweep(sweep);
    report.push_sweep(axis);
    Ok(report)
}

pub(super) fn reducibility(f: &Gf2h, opts: VerifyOptions) -> Result<SuiteReport> {
    let q = f.q() as u64;
    let mut report = SuiteReport::new(Suite::Reducibility, q);

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut identities = Sweep::new("Q12 = a22 R12 and Q13 = a22^2 R13 + a12^2 R12 as polynomials");
    for _ in 0..IDENTITY_SAMPLES {
        let a = [(); 6].map(|_| Fe(rng.gen_range(0..f.q())));
        let v = Fe(rng.gen_range(0..f.q()));
        let r = Resultants::compute(f, a, v);
        let (a12, a22) = (a[1], a[2]);
        let ok = r.q12 == f.mul(a22, r.r12) && r.q13 == f.mul(f.square(a22), r.r13) + f.mul(f.square(a12), r.r12);
        identities.record(ok, || (format!("{a:?}, v = {v}"), "identity fails".into()));
    }
    report.push_sweep(identities);

    if !opts.class_sweeps_allowed(q) {
        report.skip("degeneracy against the linear-component criteria", q);
        return Ok(report);
    }
    let ctx = CurveContext::new(f);
    let e = ctx.ext();
    let rows = over_classes(f, |c| -> Result<Option<_>> {
        if reducibility_case(&c).is_none() {
            return Ok(None);
        }
        let verdict = reducibility_conditions(&ctx, &c)?;
        let degenerate = c.is_degenerate(f);
        let factors = if q <= SMALL_Q && degenerate {
            let factors = recover_linear_factors(&ctx, &c)?;
            let cubic = Cubic::build(&ctx, &c)?.poly;
            let product = factors.lines.iter().fold(factors.cofactor.clone(), |acc, l| {
                let lp = BivariatePoly::from_terms(e, acc.vars(), [((1, 0), l[0]), ((0, 1), l[1]), ((0, 0), l[2])]);
                acc.mul(e, &lp)
            });
            Some((factors.lines.len(), factors.splits_completely(), product == cubic))
        } else {
            None
        };
        Ok(Some((c, verdict, degenerate, factors)))
    });
    let mut sweep = Sweep::new("a conic with (a12, a22) != 0 is degenerate iff its cubic has a linear component by the stated criteria");
    let mut product = Sweep::new("the recovered linear components times the cofactor give back the cubic");
    let mut split = Sweep::new("the cubic of a degenerate conic splits into three lines");
    for row in rows {
        let Some((c, verdict, degenerate, factors)) = row? else { continue };
        report.tally(format!("{:?} {}", verdict.case, if degenerate { "degenerate" } else { "non-degenerate" }), 1);
        sweep.record(verdict.reducible() == degenerate, || {
            (c.to_string(), format!("degenerate {degenerate}, criteria {verdict:?}"))
        });
        if let Some((lines, splits, reproduced)) = factors {
            product.record(reproduced && lines > 0, || (c.to_string(), format!("{lines} lines recovered")));
            split.record(splits, || (c.to_string(), format!("{lines} linear components, the rest irreducible")));
        }
    }
    report.push_sweep(sweep);
    if q <= SMALL_Q {
        report.push_sweep(product);
        report.push_probe(split);
    }
    Ok(report)
}

pub(super) fn hasse(f: &Gf2h, opts: VerifyOptions) -> Result<SuiteReport> {
    let q = f.q() as u64;
    let mut report = SuiteReport::new(Suite::Hasse, q);
    if !opts.class_sweeps_allowed(q) {
        report.skip("point counts of the cubic", q);
        return Ok(report);
    }
    let ctx = CurveContext::new(f);
    let rows = over_classes(f, |c| hasse_applicable(f, &c).then(|| hasse_window_check(&ctx, &c)).transpose());
    // H is defined over GF(q) only when the tangent parameter is; the other
    // classes are probed with the same statements.
    let sweeps = |field: &str| {
        (
            Sweep::new(format!("N(H) = N(G) for every applicable non-degenerate conic with tangent parameter in {field}")),
            Sweep::new(format!(
                "N(H) lies in [q - 2 sqrt q - 2, q + 2 sqrt q - 1] or in [q - 3, q] when the tangent parameter is in {field}"
            )),
        )
    };
    let (mut equal, mut window) = sweeps("GF(q)");
    let (mut equal_ext, mut window_ext) = sweeps("GF(q^2) only");
    for row in rows {
        let Some(check) = row? else { continue };
        let (equal, window, label) = if check.tangent_in_base {
            (&mut equal, &mut window, "GF(q)")
        } else {
            (&mut equal_ext, &mut window_ext, "GF(q^2) only")
        };
        report.tally(format!("tangent parameter in {label}"), 1);
        equal.record(check.counts_equal, || (check.conic.to_string(), format!("N(H) = {}, N(G) = {}", check.n_h, check.n_g)));
        window.record(check.in_window, || (check.conic.to_string(), format!("N(H) = {}", check.n_h)));
        if !check.counts_equal {
            let diff = check.n_h as i64 - check.n_g as i64;
            report.tally(format!("tangent parameter in {label}: N(H) - N(G) = {diff}"), 1);
        }
        if !check.in_window {
            report.tally(format!("tangent parameter in {label}: N(H) = {} outside both windows", check.n_h), 1);
        }
    }
    report.push_sweep(equal);
    report.push_sweep(window);
    report.push_probe(equal_ext);
    report.push_probe(window_ext);
    Ok(report)
}
