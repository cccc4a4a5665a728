use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Fe, Gf2h};

/// The line `a X + b Y + c = 0`, scaled so that `b = 1` when `b != 0` and
/// `a = 1` otherwise. `X` is the first and `Y` the second coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    a: Fe,
    b: Fe,
    c: Fe,
}

impl Line {
    pub fn new(f: &Gf2h, a: Fe, b: Fe, c: Fe) -> Result<Self> {
        let lead = if !b.is_zero() {
            b
        } else if !a.is_zero() {
            a
        } else {
            return Err(Error::ZeroLine);
        };
        let s = f.inv(lead)?;
        Ok(Self { a: f.mul(s, a), b: f.mul(s, b), c: f.mul(s, c) })
    }

    /// `Y = m X + b`.
    pub fn slanted(m: Fe, b: Fe) -> Self {
        Self { a: m, b: Fe::ONE, c: b }
    }

    /// `X = b`.
    pub fn vertical(b: Fe) -> Self {
        Self { a: Fe::ONE, b: Fe::ZERO, c: b }
    }

    pub fn coefficients(&self) -> (Fe, Fe, Fe) {
        (self.a, self.b, self.c)
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    pub fn contains(&self, f: &Gf2h, x: Fe, y: Fe) -> bool {
        (f.mul(self.a, x) + f.mul(self.b, y) + self.c).is_zero()
    }

    /// All `q^2 + q` lines: the slanted ones by `(m, b)`, then the vertical.
    pub fn all(f: &Gf2h) -> impl Iterator<Item = Line> + '_ {
        let slanted = f.iter().flat_map(move |m| f.iter().map(move |b| Line::slanted(m, b)));
        slanted.chain(f.iter().map(Line::vertical))
    }

    pub fn case(&self) -> LineCase {
        let (m, b) = (self.a, self.c);
        match (self.is_vertical(), m.is_zero(), b.is_zero()) {
            (false, true, true) => LineCase::Axis,
            (false, _, false) => LineCase::Slanted,
            (false, false, true) => LineCase::ThroughOrigin,
            (true, _, false) => LineCase::Vertical,
            (true, _, true) => LineCase::VerticalAxis,
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*X + {}*Y + {}", self.a, self.b, self.c)
    }
}

/// The classes of lines distinguished by the closed-form counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LineCase {
    /// `Y = 0`.
    Axis,
    /// `Y = m X + b`, `b != 0`.
    Slanted,
    /// `Y = m X`, `m != 0`.
    ThroughOrigin,
    /// `X = b`, `b != 0`.
    Vertical,
    /// `X = 0`.
    VerticalAxis,
}

/// The published closed-form intersection sizes for one line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinePrediction {
    pub case: LineCase,
    /// Stated size of the intersection with `Δ ∪ {O}`.
    pub delta_bar: u64,
    /// Stated size of the intersection with `Δ`.
    pub delta: u64,
    /// For lines through the origin the two sides of the stated chain
    /// `(q-2)/2 + 1 = q/2 - 2` differ; this holds the left-hand side while
    /// `delta_bar` holds the right-hand side.
    pub delta_bar_alternative: Option<u64>,
}

/// The closed-form counts of a line against `Δ ∪ {O}` and `Δ`.
pub fn line_delta_count_closed_form(l: &Line, q: u64) -> LinePrediction {
    let half = q / 2;
    let (delta_bar, delta, alt) = match l.case() {
        LineCase::Axis => (q, q - 1, None),
        LineCase::Slanted => (half - 1, half - 1, None),
        LineCase::ThroughOrigin => (half.saturating_sub(2), half - 1, Some(half)),
        LineCase::Vertical => (half, half, None),
        LineCase::VerticalAxis => (1, 0, None),
    };
    LinePrediction { case: l.case(), delta_bar, delta, delta_bar_alternative: alt }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_count() {
        let f = Gf2h::new(8).unwrap();
        assert_eq!(Line::all(&f).count(), 72);
        let l = Line::new(&f, Fe(3), Fe(5), Fe(7)).unwrap();
        assert_eq!(l.coefficients().1, Fe::ONE);
        let v = Line::new(&f, Fe(6), Fe::ZERO, Fe(2)).unwrap();
        assert_eq!(v.coefficients().0, Fe::ONE);
        assert!(v.is_vertical());
        assert!(Line::new(&f, Fe::ZERO, Fe::ZERO, Fe::ONE).is_err());
    }

    #[test]
    fn closed_form_examples_at_eight() {
        let p = |l: Line| line_delta_count_closed_form(&l, 8);
        assert_eq!(p(Line::slanted(Fe::ZERO, Fe::ZERO)).delta_bar, 8);
        assert_eq!(p(Line::vertical(Fe(3))).delta_bar, 4);
        assert_eq!(p(Line::vertical(Fe::ZERO)).delta_bar, 1);
        let through = p(Line::slanted(Fe(2), Fe::ZERO));
        assert_eq!((through.delta_bar, through.delta_bar_alternative, through.delta), (2, Some(4), 3));
    }
}
