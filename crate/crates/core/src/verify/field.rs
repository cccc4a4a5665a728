use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::{gf2poly, Extension, Fe, Field, Gf2h};

use super::{Suite, SuiteReport, Sweep, VerifyOptions};

/// Triples are enumerated exhaustively up to this order, sampled above.
const TRIPLE_Q: u64 = 16;
/// Pairs are enumerated exhaustively up to this order.
const PAIR_Q: u64 = 256;
/// Extension elements are enumerated exhaustively up to this many.
const EXT_ELEMENTS: u64 = 1 << 18;
const SAMPLES: usize = 1 << 16;

fn tuples<const N: usize>(q: u64, exhaustive: bool, rng: &mut ChaCha8Rng) -> Vec<[Fe; N]> {
    if exhaustive {
        let total = q.pow(N as u32);
        (0..total)
            .map(|mut i| {
                [(); N].map(|_| {
                    let x = Fe((i % q) as u32);
                    i /= q;
                    x
                })
            })
            .collect()
    } else {
        (0..SAMPLES).map(|_| [(); N].map(|_| Fe(rng.gen_range(0..q as u32)))).collect()
    }
}

fn show(xs: &[Fe]) -> String {
    xs.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(", ")
}

pub(super) fn run(f: &Gf2h, opts: VerifyOptions) -> Result<SuiteReport> {
    let q = f.q() as u64;
    let mut report = SuiteReport::new(Suite::Field, q);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let m = f.modulus() as u64;

    let mut axioms = Sweep::new("addition and multiplication are associative, commutative and distributive");
    for [a, b, c] in tuples::<3>(q, q <= TRIPLE_Q, &mut rng) {
        let ok = f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            && (a + b) + c == a + (b + c)
            && f.mul(a, b) == f.mul(b, a)
            && f.mul(a, b + c) == f.mul(a, b) + f.mul(a, c);
        axioms.record(ok, || (show(&[a, b, c]), "an axiom fails".into()));
    }
    report.push_sweep(axioms);

    let mut product = Sweep::new("multiplication equals the carry-less product reduced by the modulus");
    for [a, b] in tuples::<2>(q, q <= PAIR_Q, &mut rng) {
        let expected = Fe(gf2poly::rem(gf2poly::clmul(a.0, b.0), m) as u32);
        let got = f.mul(a, b);
        product.record(got == expected, || (show(&[a, b]), format!("{got} vs {expected}")));
    }
    report.push_sweep(product);

    let mut inverses = Sweep::new("every nonzero element has a multiplicative inverse");
    for a in f.nonzero() {
        let ok = f.inv(a).map(|b| f.mul(a, b) == Fe::ONE).unwrap_or(false);
        inverses.record(ok, || (format!("{a}"), "no inverse".into()));
    }
    report.push_sweep(inverses);
    report.claims.push(crate::report::Claim::equal("the inverse of zero is an error", true, f.inv(Fe::ZERO).is_err()));

    let mut identity = Sweep::new("x^q = x for every element");
    for a in f.iter() {
        identity.record(f.pow(a, q) == a, || (format!("{a}"), "x^q != x".into()));
    }
    report.push_sweep(identity);

    let trace_zero = f.iter().filter(|&a| f.trace(a) == 0).count() as u64;
    report.claims.push(crate::report::Claim::equal("exactly q/2 elements have trace 0", q / 2, trace_zero));

    let mut trace_sum = Sweep::new("trace equals x + x^2 + ... + x^(q/2)");
    for a in f.iter() {
        let (mut x, mut acc) = (a, Fe::ZERO);
        for _ in 0..f.h() {
            acc += x;
            x = f.square(x);
        }
        let ok = acc == Fe(f.trace(a));
        trace_sum.record(ok, || (format!("{a}"), format!("sum {acc}, trace {}", f.trace(a))));
    }
    report.push_sweep(trace_sum);

    let mut linear = Sweep::new("trace is additive");
    for [a, b] in tuples::<2>(q, q <= PAIR_Q, &mut rng) {
        linear.record(f.trace(a + b) == f.trace(a) ^ f.trace(b), || (show(&[a, b]), "Tr(a+b) != Tr a + Tr b".into()));
    }
    report.push_sweep(linear);

    let mut as_base = Sweep::new("t^2 + t = v is solvable iff Tr(v) = 0, with roots t and t + 1");
    for v in f.iter() {
        let ok = match f.solve_artin_schreier(v) {
            Some((t, u)) => f.trace(v) == 0 && u == t + Fe::ONE && f.square(t) + t == v,
            None => f.trace(v) == 1,
        };
        as_base.record(ok, || (format!("{v}"), format!("trace {}", f.trace(v))));
    }
    report.push_sweep(as_base);

    let mut roots = Sweep::new("the square root squares back");
    for a in f.iter() {
        roots.record(f.square(f.sqrt(a)) == a, || (format!("{a}"), "sqrt(a)^2 != a".into()));
    }
    report.push_sweep(roots);

    report.push_sweep(extension_sweep(f, &Extension::<2>::new(f), &mut rng));
    report.push_sweep(extension_sweep(f, &Extension::<3>::new(f), &mut rng));
    Ok(report)
}

/// Frobenius fixes exactly the embedded base field, has order `D`, and the
/// embedding respects both operations.
fn extension_sweep<const D: usize>(f: &Gf2h, e: &Extension<D>, rng: &mut ChaCha8Rng) -> Sweep {
    let mut sweep = Sweep::new(format!(
        "Frobenius on GF(q^{D}) has order {D} and fixes exactly GF(q), which embeds as a subfield"
    ));
    let n = e.order();
    let indices: Vec<u64> =
        if n <= EXT_ELEMENTS { (0..n).collect() } else { (0..SAMPLES).map(|_| rng.gen_range(0..n)).collect() };
    let mut fixed = 0u64;
    for i in indices.iter().copied() {
        let a = e.from_index(i);
        let mut b = a;
        for _ in 0..D {
            b = e.frobenius(b);
        }
        let is_fixed = e.frobenius(a) == a;
        fixed += u64::from(is_fixed);
        let ok = b == a && is_fixed == e.to_base(a).is_some() && e.frobenius(a) == e.pow(a, f.q() as u64);
        sweep.record(ok, || (e.hex(a), "Frobenius misbehaves".into()));
    }
    if n <= EXT_ELEMENTS {
        sweep.record(fixed == f.q() as u64, || ("fixed points".into(), format!("{fixed} fixed, expected {}", f.q())));
    }
    for [a, b] in tuples::<2>(f.q() as u64, f.q() as u64 <= TRIPLE_Q, rng) {
        let ok = e.embed(a + b) == e.add(e.embed(a), e.embed(b)) && e.embed(f.mul(a, b)) == e.mul(e.embed(a), e.embed(b));
        sweep.record(ok, || (show(&[a, b]), "embedding is not a homomorphism".into()));
    }
    sweep
}
