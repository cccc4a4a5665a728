use serde::Serialize;

use crate::report::Claim;

/// How many failing subjects are kept per statement.
pub const KEPT_EXAMPLES: usize = 5;

/// A failing subject, e.g. a conic and the two sides that differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub statement: String,
    pub subject: String,
    pub detail: String,
}

/// Running tally of one universally quantified statement.
#[derive(Clone, Debug)]
pub struct Sweep {
    statement: String,
    checked: u64,
    violations: u64,
    examples: Vec<Counterexample>,
}

impl Sweep {
    pub fn new(statement: impl Into<String>) -> Self {
        Self { statement: statement.into(), checked: 0, violations: 0, examples: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, subject: impl FnOnce() -> (String, String)) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.examples.len() < KEPT_EXAMPLES {
                let (subject, detail) = subject();
                self.examples.push(Counterexample { statement: self.statement.clone(), subject, detail });
            }
        }
    }

    pub fn checked(&self) -> u64 {
        self.checked
    }

    pub fn violations(&self) -> u64 {
        self.violations
    }

    fn parts(&self) -> (String, String, bool) {
        (format!("0 of {} fail", self.checked), format!("{} of {} fail", self.violations, self.checked), self.violations == 0)
    }

    pub fn claim(&self) -> Claim {
        let (e, o, h) = self.parts();
        Claim::asserted(self.statement.clone(), e, o, h)
    }

    pub fn probe(&self) -> Claim {
        let (e, o, h) = self.parts();
        Claim::probe(self.statement.clone(), e, o, h)
    }

    pub fn into_examples(self) -> Vec<Counterexample> {
        self.examples
    }
}
