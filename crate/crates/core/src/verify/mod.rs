//! Exhaustive and sampled checks of the published formulas, grouped into
//! suites. Each suite returns the statements it checked, their outcomes and
//! the first few counterexamples per statement.

mod curves;
mod field;
mod geometry;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Gf2h;
use crate::report::{all_hold, Claim};

pub use sweep::{Counterexample, Sweep, KEPT_EXAMPLES};

/// Largest `q` for which class sweeps run without `--big`.
pub const CLASS_SWEEP_Q: u64 = 16;
/// Largest `q` for which class sweeps run with `--big`.
pub const BIG_CLASS_SWEEP_Q: u64 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Field,
    Geometry,
    Lemma,
    Relations,
    Reducibility,
    Hasse,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Field, Suite::Geometry, Suite::Lemma, Suite::Relations, Suite::Reducibility, Suite::Hasse];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Field => "field",
            Suite::Geometry => "geometry",
            Suite::Lemma => "lemma",
            Suite::Relations => "relations",
            Suite::Reducibility => "reducibility",
            Suite::Hasse => "hasse",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

/// Sweep settings shared by all suites.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Seed for the sampled checks used when exhaustive ones are too large.
    pub seed: u64,
    /// Allow class sweeps up to [`BIG_CLASS_SWEEP_Q`].
    pub big: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { seed: 1, big: false }
    }
}

impl VerifyOptions {
    pub fn class_sweeps_allowed(&self, q: u64) -> bool {
        q <= if self.big { BIG_CLASS_SWEEP_Q } else { CLASS_SWEEP_Q }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub q: u64,
    pub claims: Vec<Claim>,
    /// Named counts gathered along the way, e.g. observed exceptional families.
    pub tallies: BTreeMap<String, u64>,
    /// Sweeps left out at this `q`, with the reason.
    pub skipped: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    fn new(suite: Suite, q: u64) -> Self {
        Self { suite, q, claims: Vec::new(), tallies: BTreeMap::new(), skipped: Vec::new(), counterexamples: Vec::new() }
    }

    pub fn holds(&self) -> bool {
        all_hold(&self.claims)
    }

    fn push_sweep(&mut self, sweep: Sweep) {
        self.claims.push(sweep.claim());
        self.counterexamples.extend(sweep.into_examples());
    }

    fn push_probe(&mut self, sweep: Sweep) {
        self.claims.push(sweep.probe());
        self.counterexamples.extend(sweep.into_examples());
    }

    fn tally(&mut self, key: impl Into<String>, by: u64) {
        *self.tallies.entry(key.into()).or_default() += by;
    }

    fn skip(&mut self, what: &str, q: u64) {
        self.skipped.push(format!("{what}: class sweep not run at q = {q} (raise with --big up to q = {BIG_CLASS_SWEEP_Q})"));
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub q: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn holds(&self) -> bool {
        self.suites.iter().all(SuiteReport::holds)
    }
}

/// Runs one suite, or every suite for [`Suite::All`], in a fixed order.
pub fn run(f: &Gf2h, suite: Suite, opts: VerifyOptions, progress: &(dyn Fn(&str) + Sync)) -> Result<VerifyReport> {
    let which: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut suites = Vec::new();
    for s in which {
        progress(&format!("suite {s} at q = {}", f.q()));
        suites.push(run_one(f, s, opts)?);
    }
    Ok(VerifyReport { q: f.q() as u64, suites })
}

pub fn run_one(f: &Gf2h, suite: Suite, opts: VerifyOptions) -> Result<SuiteReport> {
    match suite {
        Suite::Field => field::run(f, opts),
        Suite::Geometry => geometry::run(f, opts),
        Suite::Lemma => curves::lemma(f, opts),
        Suite::Relations => curves::relations(f, opts),
        Suite::Reducibility => curves::reducibility(f, opts),
        Suite::Hasse => curves::hasse(f, opts),
        Suite::All => Err(Error::Usage("run_one takes a single suite".into())),
    }
}

/// Maps `0..n` in parallel, returning results in index order.
pub fn par_indexed<T: Send>(n: u64, f: impl Fn(u64) -> T + Sync + Send) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn violations_at_four_are_the_known_ones() {
        let f = Gf2h::new(4).unwrap();
        let r = run(&f, Suite::All, VerifyOptions::default(), &|_| {}).unwrap();
        let failing: Vec<(Suite, &str)> = r
            .suites
            .iter()
            .flat_map(|s| s.claims.iter().filter(|c| c.is_violation()).map(move |c| (s.suite, c.statement.as_str())))
            .collect();
        let prefixes: Vec<(Suite, &str)> = failing.iter().map(|&(s, c)| (s, &c[..20])).collect();
        assert_eq!(
            prefixes,
            vec![
                (Suite::Geometry, "lines not through th"),
                (Suite::Geometry, "every non-degenerate"),
                (Suite::Hasse, "N(H) = N(G) for ever"),
            ]
        );
        assert!(!r.holds());
    }
}
