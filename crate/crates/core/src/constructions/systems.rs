use serde::Serialize;

use crate::codes::{
    evaluate_system, weight_distribution, CodeParameters, GeneratorMatrix, LinearSystemBasis, WeightDistribution,
};
use crate::error::Result;
use crate::field::{Fe, Gf2h};
use crate::geometry::{Conic, DeltaSet};
use crate::report::{set_string, Claim};

/// Parameters, weights and checked statements for one code.
#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub q: u64,
    pub system: String,
    pub n: usize,
    /// Achieved dimension, the rank of the generator matrix.
    pub k: usize,
    /// Number of basis polynomials evaluated.
    pub rows: usize,
    pub d: Option<usize>,
    pub weight_distribution: WeightDistribution,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_distance: Option<DualDistance>,
    pub claims: Vec<Claim>,
}

/// Outcome of the dual-distance search up to `searched_upto`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualDistance {
    pub searched_upto: usize,
    pub found: Option<usize>,
}

impl CodeReport {
    pub fn parameters(&self) -> CodeParameters {
        CodeParameters { n: self.n, k: self.k, d: self.d }
    }

    pub fn holds(&self) -> bool {
        crate::report::all_hold(&self.claims)
    }
}

/// A generator matrix together with its exact weight distribution.
#[derive(Clone, Debug)]
pub struct EvaluatedCode {
    pub basis: LinearSystemBasis,
    pub matrix: GeneratorMatrix,
    pub weights: WeightDistribution,
}

impl EvaluatedCode {
    pub fn new(basis: LinearSystemBasis, delta: &DeltaSet, budget: u128) -> Result<Self> {
        let matrix = evaluate_system(&basis, delta);
        let weights = weight_distribution(delta.field(), &matrix, budget)?;
        Ok(Self { basis, matrix, weights })
    }

    /// The report without any claims.
    pub fn report(&self, q: u64) -> CodeReport {
        CodeReport {
            q,
            system: self.basis.name.clone(),
            n: self.matrix.n(),
            k: self.matrix.rank(),
            rows: self.matrix.k_rows(),
            d: self.weights.min_distance(),
            weight_distribution: self.weights.clone(),
            dual_distance: None,
            claims: Vec::new(),
        }
    }
}

fn monomial_basis(name: &str, which: &[usize]) -> LinearSystemBasis {
    let polys = which
        .iter()
        .map(|&i| {
            let mut c = [Fe::ZERO; 6];
            c[i] = Fe::ONE;
            Conic::new(c).expect("nonzero")
        })
        .collect();
    LinearSystemBasis::new(name, polys)
}

/// `{Y, X, 1}`.
pub fn line_basis() -> LinearSystemBasis {
    monomial_basis("lines", &[4, 3, 5])
}

/// `{X^2, X, Y, 1}`.
pub fn parabola_basis() -> LinearSystemBasis {
    monomial_basis("parabolas", &[0, 3, 4, 5])
}

/// `{X^2, XY, Y^2, X, Y, 1}`.
pub fn conic_basis() -> LinearSystemBasis {
    monomial_basis("conics", &[0, 1, 2, 3, 4, 5])
}

fn length_claims(report: &CodeReport, q: u64) -> Vec<Claim> {
    vec![Claim::equal("length is q(q-1)/2", (q * (q - 1) / 2) as usize, report.n)]
}

fn weight_set_claim(report: &CodeReport, expected: Vec<usize>) -> Claim {
    let observed = report.weight_distribution.weights();
    let holds = observed == expected;
    Claim::asserted("set of nonzero weights", set_string(expected), set_string(observed), holds)
}

fn distance_claim(statement: &str, expected: usize, observed: Option<usize>) -> Claim {
    let shown = observed.map_or("-".to_string(), |d| d.to_string());
    Claim::asserted(statement, expected, shown, observed == Some(expected))
}

fn singleton_claim(report: &CodeReport) -> Claim {
    let p = report.parameters();
    Claim::asserted("Singleton bound k + d <= n + 1", "holds", p, p.satisfies_singleton())
}

/// The code of all lines: `[q(q-1)/2, 3, (q-1)(q-2)/2]` with weights
/// `(q-1)(q-2)/2, q(q-2)/2, (q^2-2q+2)/2, q(q-1)/2`.
pub fn line_code(f: &Gf2h, delta: &DeltaSet, budget: u128) -> Result<CodeReport> {
    let q = f.q() as u64;
    let code = EvaluatedCode::new(line_basis(), delta, budget)?;
    let mut report = code.report(q);
    let d = ((q - 1) * (q - 2) / 2) as usize;
    let mut claims = length_claims(&report, q);
    claims.push(Claim::equal("dimension is 3", 3, report.k));
    claims.push(distance_claim("minimum distance is (q-1)(q-2)/2", d, report.d));
    let mut expected = vec![d, (q * (q - 2) / 2) as usize, ((q * q - 2 * q + 2) / 2) as usize, (q * (q - 1) / 2) as usize];
    expected.sort_unstable();
    expected.dedup();
    claims.push(weight_set_claim(&report, expected));
    claims.push(Claim::asserted(
        "the unreduced code on all distinguished points has minimum distance (q-1)(q-2) = 2d",
        (q - 1) * (q - 2),
        report.d.map_or(0, |d| 2 * d as u64),
        report.d == Some(d),
    ));
    claims.push(singleton_claim(&report));
    report.claims = claims;
    Ok(report)
}

/// The parabola code: `[q(q-1)/2, 4, q(q-3)/2]` with five weights.
pub fn construction2_code(f: &Gf2h, delta: &DeltaSet, budget: u128) -> Result<CodeReport> {
    let q = f.q() as u64;
    let code = EvaluatedCode::new(parabola_basis(), delta, budget)?;
    let mut report = code.report(q);
    let d = (q * (q - 3) / 2) as usize;
    let mut expected = vec![
        d,
        ((q * q - 3 * q + 2) / 2) as usize,
        (q * q / 2 - q) as usize,
        (q * q / 2 - q + 1) as usize,
        (q * (q - 1) / 2) as usize,
    ];
    expected.sort_unstable();
    expected.dedup();
    let mut claims = length_claims(&report, q);
    claims.push(Claim::equal("dimension is 4", 4, report.k));
    if q >= 8 {
        claims.push(distance_claim("minimum distance is q(q-3)/2", d, report.d));
        claims.push(weight_set_claim(&report, expected));
    } else {
        let observed = report.weight_distribution.weights();
        let holds = observed.iter().all(|w| expected.contains(w));
        claims.push(Claim::asserted(
            "nonzero weights are drawn from the five-value set",
            set_string(expected),
            set_string(observed),
            holds,
        ));
    }
    claims.push(singleton_claim(&report));
    report.claims = claims;
    Ok(report)
}

/// The code of all conics: `[q(q-1)/2, 6, q(q-3)/2]` asserted for `q >= 8`;
/// at `q = 4` the achieved values are reported only.
pub fn full_conic_code(f: &Gf2h, delta: &DeltaSet, budget: u128) -> Result<CodeReport> {
    let q = f.q() as u64;
    let code = EvaluatedCode::new(conic_basis(), delta, budget)?;
    let mut report = code.report(q);
    let d = (q * (q - 3) / 2) as usize;
    let mut claims = length_claims(&report, q);
    if q >= 8 {
        claims.push(Claim::equal("dimension is 6", 6, report.k));
        claims.push(distance_claim("minimum distance is q(q-3)/2", d, report.d));
    } else {
        claims.push(Claim::probe("dimension is 6", 6, report.k, report.k == 6));
        let observed = report.d.map_or("-".into(), |x| x.to_string());
        claims.push(Claim::probe("minimum distance is q(q-3)/2", d, observed, report.d == Some(d)));
    }
    claims.push(singleton_claim(&report));
    report.claims = claims;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DEFAULT_BUDGET;

    #[test]
    fn line_code_small_fields() {
        for (q, params, weights) in [(4u64, (6, 3, 3), vec![3, 4, 5, 6]), (8, (28, 3, 21), vec![21, 24, 25, 28])] {
            let f = Gf2h::new(q).unwrap();
            let delta = DeltaSet::new(&f, false);
            let r = line_code(&f, &delta, DEFAULT_BUDGET).unwrap();
            assert_eq!((r.n, r.k, r.d.unwrap()), params);
            assert_eq!(r.weight_distribution.weights(), weights);
            assert!(r.holds(), "{:?}", r.claims);
        }
    }

    #[test]
    fn parabola_code_at_eight() {
        let f = Gf2h::new(8).unwrap();
        let delta = DeltaSet::new(&f, false);
        let r = construction2_code(&f, &delta, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.n, r.k, r.d), (28, 4, Some(20)));
        assert_eq!(r.weight_distribution.weights(), vec![20, 21, 24, 25, 28]);
        assert!(r.holds());
    }
}
