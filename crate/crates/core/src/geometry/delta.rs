use std::io::Write;

use crate::error::Result;
use crate::field::{Fe, Gf2h};

use super::{AffinePoint, Conic, Line};

/// The evaluation set `Δ = {(x, a x^2) : x != 0, Tr(a) = 0}`, optionally
/// with the origin adjoined.
///
/// Points are ordered by the encoding of `x`, then by the encoding of `a`;
/// the origin, when present, comes first.
#[derive(Clone, Debug)]
pub struct DeltaSet {
    field: Gf2h,
    points: Vec<AffinePoint>,
    /// `[x^2, xy, y^2, x, y]` per point.
    monomials: Vec<[Fe; 5]>,
    includes_origin: bool,
}

impl DeltaSet {
    pub fn new(f: &Gf2h, include_origin: bool) -> Self {
        let slopes = f.trace_zero();
        let mut points = Vec::with_capacity(f.q() as usize * (f.q() as usize - 1) / 2 + 1);
        if include_origin {
            points.push(AffinePoint::ORIGIN);
        }
        for x in f.nonzero() {
            let x2 = f.square(x);
            points.extend(slopes.iter().map(|&a| AffinePoint::new(x, f.mul(a, x2))));
        }
        Self::from_points(f, points, include_origin)
    }

    /// A set with the given points in the given order, e.g. a permuted `Δ`.
    pub fn from_points(f: &Gf2h, points: Vec<AffinePoint>, includes_origin: bool) -> Self {
        let monomials = points
            .iter()
            .map(|p| [f.square(p.x), f.mul(p.x, p.y), f.square(p.y), p.x, p.y])
            .collect();
        Self { field: f.clone(), points, monomials, includes_origin }
    }

    pub fn field(&self) -> &Gf2h {
        &self.field
    }

    pub fn points(&self) -> &[AffinePoint] {
        &self.points
    }

    pub fn monomials(&self) -> &[[Fe; 5]] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn includes_origin(&self) -> bool {
        self.includes_origin
    }

    /// Number of points on the conic, by direct evaluation.
    pub fn count_on(&self, c: &Conic) -> usize {
        let f = &self.field;
        self.monomials.iter().filter(|m| c.eval_monomials(f, m).is_zero()).count()
    }

    pub fn count_on_line(&self, l: &Line) -> usize {
        self.points.iter().filter(|p| l.contains(&self.field, p.x, p.y)).count()
    }

    /// CSV rows `x,y` in hex, with a header.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["x", "y"])?;
        for p in &self.points {
            w.write_record([format!("{:#x}", p.x.0), format!("{:#x}", p.y.0)])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for q in [4u64, 8, 16, 32] {
            let f = Gf2h::new(q).unwrap();
            assert_eq!(DeltaSet::new(&f, false).len() as u64, q * (q - 1) / 2);
            let bar = DeltaSet::new(&f, true);
            assert_eq!(bar.len() as u64, q * (q - 1) / 2 + 1);
            assert_eq!(bar.points()[0], AffinePoint::ORIGIN);
        }
    }

    #[test]
    fn membership_condition() {
        let f = Gf2h::new(16).unwrap();
        let d = DeltaSet::new(&f, false);
        assert!(d.points().contains(&AffinePoint::new(Fe::ONE, Fe::ZERO)));
        for p in d.points() {
            assert!(!p.x.is_zero());
            assert_eq!(f.trace(f.div(p.y, f.square(p.x)).unwrap()), 0);
        }
    }

    #[test]
    fn parabola_counts_at_eight() {
        let f = Gf2h::new(8).unwrap();
        let d = DeltaSet::new(&f, false);
        let g = f.generator();
        assert_eq!(f.trace(g), 0);
        // Y + g X^2 and Y + c X^2 with Tr(c) = 1
        let on = Conic::new([g, Fe(0), Fe(0), Fe(0), Fe::ONE, Fe(0)]).unwrap();
        assert_eq!(d.count_on(&on), 7);
        let c = f.iter().find(|&c| f.trace(c) == 1).unwrap();
        let off = Conic::new([c, Fe(0), Fe(0), Fe(0), Fe::ONE, Fe(0)]).unwrap();
        assert_eq!(d.count_on(&off), 0);
    }

    #[test]
    fn csv_dump() {
        let f = Gf2h::new(4).unwrap();
        let mut buf = Vec::new();
        DeltaSet::new(&f, false).write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 7);
        assert_eq!(text.lines().nth(1), Some("0x1,0x0"));
    }
}
