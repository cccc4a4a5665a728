//! Checked statements and their outcomes, shared by every report.

use std::fmt::Display;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    /// A failure makes the run fail.
    Asserted,
    /// Recorded with its outcome; never fails the run.
    Probe,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub statement: String,
    pub kind: ClaimKind,
    pub expected: String,
    pub observed: String,
    pub holds: bool,
}

impl Claim {
    pub fn asserted(statement: impl Into<String>, expected: impl Display, observed: impl Display, holds: bool) -> Self {
        Self::new(ClaimKind::Asserted, statement, expected, observed, holds)
    }

    pub fn probe(statement: impl Into<String>, expected: impl Display, observed: impl Display, holds: bool) -> Self {
        Self::new(ClaimKind::Probe, statement, expected, observed, holds)
    }

    /// Asserted equality.
    pub fn equal<T: Display + PartialEq>(statement: impl Into<String>, expected: T, observed: T) -> Self {
        let holds = expected == observed;
        Self::asserted(statement, expected, observed, holds)
    }

    fn new(kind: ClaimKind, statement: impl Into<String>, expected: impl Display, observed: impl Display, holds: bool) -> Self {
        Self { statement: statement.into(), kind, expected: expected.to_string(), observed: observed.to_string(), holds }
    }

    pub fn is_violation(&self) -> bool {
        self.kind == ClaimKind::Asserted && !self.holds
    }
}

pub fn all_hold(claims: &[Claim]) -> bool {
    claims.iter().all(|c| !c.is_violation())
}

/// `{a, b, c}`.
pub fn set_string<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}
