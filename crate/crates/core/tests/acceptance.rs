//! Fifteen acceptance criteria, each printed as one PASS or FAIL line with
//! its elapsed time against a pinned limit.
//!
//! Every criterion is checked literally. Four of them fail because the
//! statements they check are false (brute force gives counterexamples); the
//! test pins exactly that set, so it fails if one of them starts passing or if
//! any other criterion turns red.

use std::collections::{BTreeSet, HashSet};
use std::io::Write;
use std::time::{Duration, Instant};

use conic_codes::codes::{evaluate_system, weight_distribution, GeneratorMatrix, DEFAULT_BUDGET};
use conic_codes::constructions::{
    construction1_survey, construction2_code, find_lambda_point, full_conic_code, lambda_count, lambda_count_formula,
    line_basis, line_code, parabola_basis, summarize_net, LambdaSearch, NetContext,
};
use conic_codes::geometry::{
    conic_classes, line_delta_count_closed_form, parabola_count_closed_form, pi_map, Conic, DeltaSet, Line, LineCase,
    ProjectiveClasses,
};
use conic_codes::report::Claim;
use conic_codes::verify::{run_one, Suite, SuiteReport, VerifyOptions};
use conic_codes::{Extension, Fe, Gf2h};
use rayon::prelude::*;

/// Criteria that fail on their literal reading, with counterexamples.
const KNOWN_RED: [u32; 4] = [3, 6, 9, 10];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn field(q: u64) -> Gf2h {
    Gf2h::new(q).unwrap()
}

fn out(line: &str) {
    // written past the test harness capture so the lines land in the log
    let mut s = std::io::stdout().lock();
    writeln!(s, "{line}").unwrap();
    s.flush().unwrap();
}

fn suite(q: u64, which: Suite) -> SuiteReport {
    run_one(&field(q), which, VerifyOptions::default()).unwrap()
}

fn claim<'a>(r: &'a SuiteReport, prefix: &str) -> &'a Claim {
    r.claims.iter().find(|c| c.statement.starts_with(prefix)).unwrap_or_else(|| panic!("no claim {prefix:?}"))
}

fn failures(claims: &[Claim]) -> Vec<String> {
    claims.iter().filter(|c| c.is_violation()).map(|c| format!("{} (observed {})", c.statement, c.observed)).collect()
}

fn delta_size() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16, 32, 64] {
        let n = DeltaSet::new(&field(q), false).len() as u64;
        pass &= n == q * (q - 1) / 2;
        notes.push(format!("q={q}: {n}"));
    }
    outcome(pass, notes.join(", "))
}

fn pi_image() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16] {
        let f = field(q);
        let image: BTreeSet<(u32, u32)> = f
            .iter()
            .flat_map(|a| f.iter().filter(move |&b| b != a).map(move |b| (a, b)))
            .map(|(a, b)| pi_map(&f, a, b))
            .map(|p| (p.x.0, p.y.0))
            .collect();
        let delta: BTreeSet<(u32, u32)> = DeltaSet::new(&f, false).points().iter().map(|p| (p.x.0, p.y.0)).collect();
        pass &= image == delta;
        notes.push(format!("q={q}: image {} = Δ {}", image.len(), delta.len()));
    }
    outcome(pass, notes.join(", "))
}

fn line_spectra() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16, 32] {
        let f = field(q);
        let (delta, delta_bar) = (DeltaSet::new(&f, false), DeltaSet::new(&f, true));
        let mut bad = Vec::new();
        let mut flagged = BTreeSet::new();
        let mut lines = 0;
        for l in Line::all(&f) {
            lines += 1;
            let pred = line_delta_count_closed_form(&l, q);
            let (plain, bar) = (delta.count_on_line(&l) as u64, delta_bar.count_on_line(&l) as u64);
            if pred.case == LineCase::ThroughOrigin {
                let lhs = pred.delta_bar_alternative.unwrap_or(pred.delta_bar);
                let which = match (bar == lhs, bar == pred.delta_bar) {
                    (true, _) => "(q-2)/2 + 1",
                    (_, true) => "q/2 - 2",
                    _ => "neither",
                };
                flagged.insert(format!("Y = mX: |Δ| = {plain}, |Δ ∪ O| = {bar} matches {which}"));
                pass &= plain == pred.delta && which != "neither";
            } else if plain != pred.delta || bar != pred.delta_bar {
                let (m, _, b) = l.coefficients();
                bad.push(format!("{:?} m={m} b={b}: {plain}/{bar} vs {}/{}", pred.case, pred.delta, pred.delta_bar));
            }
        }
        pass &= bad.is_empty() && lines == q * q + q;
        let first = bad.first().cloned().unwrap_or_default();
        notes.push(format!("q={q}: {} of {lines} disagree {first}; flagged {flagged:?}", bad.len()));
    }
    outcome(pass, notes.join("; "))
}

fn line_codes() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16, 32] {
        let f = field(q);
        let r = line_code(&f, &DeltaSet::new(&f, false), DEFAULT_BUDGET).unwrap();
        let d = ((q - 1) * (q - 2) / 2) as usize;
        let mut weights = vec![d, (q * (q - 2) / 2) as usize, ((q * q - 2 * q + 2) / 2) as usize, (q * (q - 1) / 2) as usize];
        weights.sort_unstable();
        weights.dedup();
        let ok = r.n == (q * (q - 1) / 2) as usize && r.k == 3 && r.d == Some(d) && r.weight_distribution.weights() == weights;
        pass &= ok && r.holds();
        notes.push(format!("q={q}: [{}, {}, {:?}] weights {:?}", r.n, r.k, r.d, r.weight_distribution.weights()));
    }
    outcome(pass, notes.join("; "))
}

fn parabola_spectra() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16, 32] {
        let f = field(q);
        let (delta, delta_bar) = (DeltaSet::new(&f, false), DeltaSet::new(&f, true));
        let classes = ProjectiveClasses::<4>::new(q);
        let rows: Vec<Option<bool>> = (0..classes.len())
            .into_par_iter()
            .map(|i| {
                let [a11, a13, a23, a33] = classes.nth(i);
                let c = Conic::new([a11, Fe::ZERO, Fe::ZERO, a13, a23, a33]).unwrap();
                let plain = parabola_count_closed_form(&f, &c, false).ok()?;
                let bar = parabola_count_closed_form(&f, &c, true).ok()?;
                Some(plain == delta.count_on(&c) as u64 && bar == delta_bar.count_on(&c) as u64)
            })
            .collect();
        let covered = rows.iter().flatten().count();
        let wrong = rows.iter().flatten().filter(|&&ok| !ok).count();
        pass &= wrong == 0;
        notes.push(format!("q={q}: {wrong} of {covered} wrong, {} lines/constants outside", rows.len() - covered));
    }
    outcome(pass, notes.join("; "))
}

fn window() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16] {
        let r = suite(q, Suite::Geometry);
        let w = claim(&r, "every non-degenerate conic meets Δ");
        let fam = claim(&r, "each listed exceptional family");
        pass &= w.holds && fam.holds;
        notes.push(format!("q={q}: {}, families {}", w.observed, fam.observed));
    }
    outcome(pass, notes.join("; "))
}

fn lemma_and_relations() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8] {
        for which in [Suite::Lemma, Suite::Relations] {
            let r = suite(q, which);
            pass &= r.holds() && r.skipped.is_empty();
            let observed: Vec<&str> = r.claims.iter().map(|c| c.observed.as_str()).collect();
            notes.push(format!("q={q} {which}: {observed:?}"));
        }
    }
    outcome(pass, notes.join("; "))
}

fn reducibility() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16] {
        let r = suite(q, Suite::Reducibility);
        let c = claim(&r, "a conic with (a12, a22) != 0 is degenerate iff");
        pass &= c.holds;
        notes.push(format!("q={q}: {}", c.observed));
    }
    outcome(pass, notes.join("; "))
}

fn hasse() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16] {
        let r = suite(q, Suite::Hasse);
        let all: Vec<&Claim> = r.claims.iter().filter(|c| c.statement.starts_with("N(H)")).collect();
        pass &= all.iter().all(|c| c.holds);
        let shown: Vec<String> = all.iter().map(|c| c.observed.clone()).collect();
        notes.push(format!("q={q}: equal/window in GF(q), equal/window GF(q^2) only: {shown:?}"));
    }
    outcome(pass, notes.join("; "))
}

fn full_conic_codes() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for (q, params) in [(8u64, (28, 6, 20)), (16, (120, 6, 104))] {
        let f = field(q);
        let r = full_conic_code(&f, &DeltaSet::new(&f, false), DEFAULT_BUDGET).unwrap();
        pass &= (r.n, r.k, r.d) == (params.0, params.1, Some(params.2));
        notes.push(format!("q={q}: [{}, {}, {:?}] expected {params:?}", r.n, r.k, r.d));
    }
    outcome(pass, notes.join("; "))
}

fn construction2() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [8u64, 16, 32] {
        let f = field(q);
        let r = construction2_code(&f, &DeltaSet::new(&f, false), DEFAULT_BUDGET).unwrap();
        let weights = r.weight_distribution.weights();
        let expected = [q * (q - 3) / 2, (q * q - 3 * q + 2) / 2, q * q / 2 - q, q * q / 2 - q + 1, q * (q - 1) / 2];
        let ok = r.n == (q * (q - 1) / 2) as usize
            && r.k == 4
            && r.d == Some(expected[0] as usize)
            && weights.iter().map(|&w| w as u64).collect::<Vec<_>>() == expected;
        pass &= ok && r.holds();
        notes.push(format!("q={q}: [{}, {}, {:?}] weights {weights:?}", r.n, r.k, r.d));
    }
    outcome(pass, notes.join("; "))
}

fn construction1() -> Outcome {
    let f = field(8);
    let ext = Extension::<3>::new(&f);
    let s = construction1_survey(&f, &ext, &DeltaSet::new(&f, false), 1, 100, DEFAULT_BUDGET).unwrap();
    let shaped = s.samples.len() >= 100 && s.samples.iter().all(|x| matches!(x.d, Some(21 | 22)));
    let threes = s.samples.iter().filter(|x| x.dual_distance == Some(3)).count();
    let probes: Vec<String> = s
        .claims
        .iter()
        .filter(|c| !c.is_violation() && !c.holds)
        .map(|c| format!("probe {} ({})", c.statement, c.observed))
        .collect();
    outcome(
        shaped && threes > 0 && s.holds(),
        format!("{} samples, d {:?}, dual {:?}; {probes:?}", s.samples.len(), s.distance_histogram, s.dual_distance_histogram),
    )
}

fn lambda_size() -> Outcome {
    let ext = Extension::<3>::new(&field(4));
    let n = lambda_count(&ext);
    outcome(n == 2880 && n == lambda_count_formula(4), format!("{n} points accepted"))
}

fn net_structure() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16] {
        let f = field(q);
        let ext = Extension::<3>::new(&f);
        let p = find_lambda_point(&ext, LambdaSearch::Seeded(1));
        let s = summarize_net(&NetContext::new(&f, &ext, &p).unwrap());
        pass &= s.members as u64 == q * q + q + 1
            && s.frobenius_fixed == s.members
            && s.degenerate == 0
            && s.parabola_shaped == 1
            && failures(&s.claims).is_empty();
        notes.push(format!(
            "q={q}: {} members, {} fixed, {} degenerate, {} without XY and Y^2",
            s.members, s.frobenius_fixed, s.degenerate, s.parabola_shaped
        ));
    }
    outcome(pass, notes.join("; "))
}

/// The weight distribution is unchanged by scaling any one column by a
/// generator of GF(q)^* and by swapping any two adjacent columns. These
/// generate the monomial group, so invariance under it follows.
fn monomial_invariance(f: &Gf2h, g: &GeneratorMatrix) -> bool {
    let base = weight_distribution(f, g, DEFAULT_BUDGET).unwrap();
    let gen = f.generator();
    let n = g.n();
    let scaled = (0..n).into_par_iter().all(|j| {
        let mut rows = g.rows().to_vec();
        rows.iter_mut().for_each(|r| r[j] = f.mul(gen, r[j]));
        weight_distribution(f, &GeneratorMatrix::from_rows(f, rows), DEFAULT_BUDGET).unwrap() == base
    });
    let swapped = (1..n).into_par_iter().all(|j| {
        let mut rows = g.rows().to_vec();
        rows.iter_mut().for_each(|r| r.swap(j - 1, j));
        weight_distribution(f, &GeneratorMatrix::from_rows(f, rows), DEFAULT_BUDGET).unwrap() == base
    });
    scaled && swapped
}

fn properties() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for q in [4u64, 8, 16] {
        let f = field(q);
        let field_report = suite(q, Suite::Field);
        let field_ok = field_report.holds();

        let elems: Vec<Fe> = f.iter().collect();
        let trace_ok = elems.iter().all(|&a| elems.iter().all(|&b| f.trace(a + b) == f.trace(a) ^ f.trace(b)));
        let as_ok = elems.iter().all(|&v| match f.solve_artin_schreier(v) {
            Some((t, u)) => f.trace(v) == 0 && f.square(t) + t == v && u == t + Fe::ONE,
            None => f.trace(v) == 1 && elems.iter().all(|&x| f.square(x) + x != v),
        });

        let classes = conic_classes(q);
        let norm_ok = (0..classes.len()).into_par_iter().all(|i| {
            let c = Conic::new(classes.nth(i)).unwrap();
            c.normalized(&f) == c && f.nonzero().all(|s| c.scaled(&f, s).normalized(&f) == c)
        });
        let distinct: HashSet<String> = (0..classes.len()).map(|i| Conic::new(classes.nth(i)).unwrap().to_hex()).collect();
        let classes_ok = distinct.len() as u64 == classes.len() && classes.len() == (q.pow(6) - 1) / (q - 1);

        let delta = DeltaSet::new(&f, false);
        let mut weights_ok = monomial_invariance(&f, &evaluate_system(&line_basis(), &delta));
        if q <= 8 {
            weights_ok &= monomial_invariance(&f, &evaluate_system(&parabola_basis(), &delta));
        }

        let all = [field_ok, trace_ok, as_ok, norm_ok && classes_ok, weights_ok];
        pass &= all.iter().all(|&x| x);
        notes.push(format!(
            "q={q}: field {field_ok}, trace {trace_ok}, artin-schreier {as_ok}, normalization {}, weights {weights_ok}",
            norm_ok && classes_ok
        ));
    }
    outcome(pass, notes.join("; "))
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, Duration, fn() -> Outcome);
    let secs = Duration::from_secs;
    let criteria: [Criterion; 15] = [
        (1, "size of Δ", secs(1), delta_size),
        (2, "π image equals Δ", secs(5), pi_image),
        (3, "line intersection closed forms", secs(10), line_spectra),
        (4, "line code parameters and weights", secs(30), line_codes),
        (5, "closed forms without XY and Y^2 terms", secs(60), parabola_spectra),
        (6, "intersection window for non-degenerate conics", secs(600), window),
        (7, "case formula and count relations", secs(300), lemma_and_relations),
        (8, "degeneracy iff linear component", secs(600), reducibility),
        (9, "Hasse window for the cubic", secs(600), hasse),
        (10, "full conic code parameters", secs(300), full_conic_codes),
        (11, "parabola code weights", secs(120), construction2),
        (12, "net codes at q = 8", secs(120), construction1),
        (13, "size of Λ at q = 4", secs(10), lambda_size),
        (14, "net structure", secs(60), net_structure),
        (15, "property suites", secs(120), properties),
    ];
    let mut red = Vec::new();
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let o = check();
        let elapsed = start.elapsed();
        let pass = o.pass && elapsed <= limit;
        if !pass {
            red.push(id);
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        out(&format!("{verdict} {id:>2} {name} [{:.2}s, limit {}s]: {}", elapsed.as_secs_f64(), limit.as_secs(), o.detail));
    }
    out(&format!("acceptance: {} of 15 pass; red {red:?}", 15 - red.len()));
    assert_eq!(red, KNOWN_RED, "red criteria differ from the known counterexamples");
}
