use std::collections::BTreeMap;
use std::ops::BitXorAssign;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Fe, Gf2h};
use crate::geometry::{Conic, DeltaSet};

use super::matrix::{GeneratorMatrix, LinearSystemBasis};

/// Largest number of messages enumerated without `--big`.
pub const DEFAULT_BUDGET: u128 = 1 << 28;
/// Largest number of messages enumerated with `--big`.
pub const BIG_BUDGET: u128 = 1 << 32;

/// Number of codewords of each weight.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: BTreeMap<usize, u64>,
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.counts.iter())
    }
}

impl WeightDistribution {
    pub fn from_histogram(hist: &[u64]) -> Self {
        let counts = hist.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c)).collect();
        Self { counts }
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    /// Sorted `(weight, count)` pairs.
    pub fn pairs(&self) -> Vec<(usize, u64)> {
        self.counts.iter().map(|(&w, &c)| (w, c)).collect()
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| u128::from(c)).sum()
    }

    /// The nonzero weights that occur.
    pub fn weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.weights().first().copied()
    }

    /// Sums to `q^k`, has `q^(k - rank)` zero words, and every other count
    /// is a multiple of `q - 1`.
    pub fn is_consistent(&self, q: u64, k: usize, rank: usize) -> bool {
        let q = u128::from(q);
        self.total() == q.pow(k as u32)
            && u128::from(self.count(0)) == q.pow((k - rank) as u32)
            && self.counts.iter().all(|(&w, &c)| w == 0 || u128::from(c) % (q - 1) == 0)
    }
}

/// `q^k`.
pub fn message_count(q: u64, k: usize) -> u128 {
    u128::from(q).pow(k as u32)
}

fn check_budget(needed: u128, limit: u128) -> Result<()> {
    if needed > limit {
        return Err(Error::Budget { needed, limit });
    }
    Ok(())
}

trait Symbol: Copy + Default + PartialEq + BitXorAssign + Send + Sync {
    fn from_fe(x: Fe) -> Self;
}

impl Symbol for u8 {
    fn from_fe(x: Fe) -> Self {
        x.0 as u8
    }
}

impl Symbol for u16 {
    fn from_fe(x: Fe) -> Self {
        x.0 as u16
    }
}

impl Symbol for u32 {
    fn from_fe(x: Fe) -> Self {
        x.0
    }
}

/// Exact distribution over all `q^k` messages.
///
/// The message space is split by the value of the first coordinate; within
/// a part the remaining `(k-1) h` message bits run through a Gray code, so
/// each step adds one scaled row.
pub fn weight_distribution(f: &Gf2h, g: &GeneratorMatrix, budget: u128) -> Result<WeightDistribution> {
    let k = g.k_rows();
    check_budget(message_count(f.q() as u64, k), budget)?;
    if k == 0 {
        return Ok(WeightDistribution::from_histogram(&[1]));
    }
    match f.h() {
        0..=8 => Ok(enumerate::<u8>(f, g)),
        9..=16 => Ok(enumerate::<u16>(f, g)),
        _ => Ok(enumerate::<u32>(f, g)),
    }
}

fn enumerate<T: Symbol>(f: &Gf2h, g: &GeneratorMatrix) -> WeightDistribution {
    let (n, h) = (g.n(), f.h());
    let scaled = |row: &[Fe], s: Fe| -> Vec<T> { row.iter().map(|&v| T::from_fe(f.mul(s, v))).collect() };
    // one generator per message bit of rows 1..k
    let steps: Vec<Vec<T>> = g.rows()[1..]
        .iter()
        .flat_map(|row| (0..h).map(move |b| scaled(row, Fe(1 << b))))
        .collect();
    let bits = steps.len() as u32;
    let hist = f
        .iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|m0| {
            let mut word = scaled(&g.rows()[0], m0);
            let mut hist = vec![0u64; n + 1];
            let weight = |w: &[T]| w.iter().filter(|&&x| x != T::default()).count();
            hist[weight(&word)] += 1;
            for i in 1u64..(1u64 << bits) {
                let step = &steps[i.trailing_zeros() as usize];
                for (x, &s) in word.iter_mut().zip(step) {
                    *x ^= s;
                }
                hist[weight(&word)] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    WeightDistribution::from_histogram(&hist)
}

/// The `idx`-th projective class of messages of length `k`, leading entry 1.
fn projective_message(q: u64, k: usize, mut idx: u64) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; k];
    for lead in 0..k {
        let block = q.pow((k - lead - 1) as u32);
        if idx < block {
            out[lead] = Fe::ONE;
            for slot in out[lead + 1..].iter_mut().rev() {
                *slot = Fe((idx % q) as u32);
                idx /= q;
            }
            return out;
        }
        idx -= block;
    }
    panic!("class index out of range");
}

/// The same distribution computed from the polynomials: each projective
/// class of messages contributes `q - 1` words of weight `n - |Δ ∩ Z(f)|`.
pub fn weight_distribution_by_classes(
    basis: &LinearSystemBasis,
    delta: &DeltaSet,
    budget: u128,
) -> Result<WeightDistribution> {
    let f = delta.field();
    let (q, k, n) = (f.q() as u64, basis.len(), delta.len());
    check_budget(message_count(q, k), budget)?;
    let classes = (message_count(q, k) - 1) as u64 / (q - 1);
    let mut hist = (0..classes)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut hist, idx| {
                let m = projective_message(q, k, idx);
                let w = basis.combination(f, &m).map_or(0, |c| weight_of_polynomial(&c, delta));
                hist[w] += q - 1;
                hist
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    hist[0] += 1;
    Ok(WeightDistribution::from_histogram(&hist))
}

/// `|Δ| - |Δ ∩ Z(c)|`.
pub fn weight_of_polynomial(c: &Conic, delta: &DeltaSet) -> usize {
    delta.len() - delta.count_on(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::evaluate_system;

    fn line_basis(f: &Gf2h) -> LinearSystemBasis {
        let raw = [[0, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]];
        LinearSystemBasis::new("lines", raw.iter().map(|r| Conic::from_encodings(f, *r).unwrap()).collect())
    }

    #[test]
    fn line_code_at_eight() {
        let f = Gf2h::new(8).unwrap();
        let delta = DeltaSet::new(&f, false);
        let b = line_basis(&f);
        let g = evaluate_system(&b, &delta);
        let dist = weight_distribution(&f, &g, DEFAULT_BUDGET).unwrap();
        assert_eq!(dist.weights(), vec![21, 24, 25, 28]);
        assert_eq!(dist.count(0), 1);
        assert!(dist.is_consistent(8, 3, 3));
        assert_eq!(weight_distribution_by_classes(&b, &delta, DEFAULT_BUDGET).unwrap(), dist);
    }

    #[test]
    fn weight_of_a_line() {
        let f = Gf2h::new(8).unwrap();
        let delta = DeltaSet::new(&f, false);
        let y = Conic::from_encodings(&f, [0, 0, 0, 0, 1, 0]).unwrap();
        let one = Conic::from_encodings(&f, [0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(weight_of_polynomial(&y, &delta), 21);
        assert_eq!(weight_of_polynomial(&one, &delta), 28);
    }

    #[test]
    fn budget_is_enforced() {
        let f = Gf2h::new(8).unwrap();
        let delta = DeltaSet::new(&f, false);
        let g = evaluate_system(&line_basis(&f), &delta);
        assert!(matches!(weight_distribution(&f, &g, 511), Err(Error::Budget { needed: 512, limit: 511 })));
    }

    #[test]
    fn projective_messages_are_distinct() {
        let all: std::collections::BTreeSet<Vec<Fe>> = (0..21).map(|i| projective_message(4, 3, i)).collect();
        assert_eq!(all.len(), 21);
    }
}
