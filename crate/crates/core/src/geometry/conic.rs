use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{gf2poly, Fe, Gf2h};

/// `a11 X^2 + a12 XY + a22 Y^2 + a13 X + a23 Y + a33`, stored in that
/// coefficient order. Not all coefficients are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Conic([Fe; 6]);

impl Conic {
    pub fn new(coeffs: [Fe; 6]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroConic);
        }
        Ok(Self(coeffs))
    }

    /// Builds from raw integer encodings, validating them against `f`.
    pub fn from_encodings(f: &Gf2h, raw: [u64; 6]) -> Result<Self> {
        let mut c = [Fe::ZERO; 6];
        for (slot, v) in c.iter_mut().zip(raw) {
            *slot = f.element(v)?;
        }
        Self::new(c)
    }

    pub fn coeffs(&self) -> [Fe; 6] {
        self.0
    }
    pub fn a11(&self) -> Fe {
        self.0[0]
    }
    pub fn a12(&self) -> Fe {
        self.0[1]
    }
    pub fn a22(&self) -> Fe {
        self.0[2]
    }
    pub fn a13(&self) -> Fe {
        self.0[3]
    }
    pub fn a23(&self) -> Fe {
        self.0[4]
    }
    pub fn a33(&self) -> Fe {
        self.0[5]
    }

    #[inline]
    pub fn eval(&self, f: &Gf2h, x: Fe, y: Fe) -> Fe {
        let [a11, a12, a22, a13, a23, a33] = self.0;
        f.mul(a11, f.square(x))
            + f.mul(a12, f.mul(x, y))
            + f.mul(a22, f.square(y))
            + f.mul(a13, x)
            + f.mul(a23, y)
            + a33
    }

    /// Evaluation against precomputed monomials `[x^2, xy, y^2, x, y]`.
    #[inline]
    pub fn eval_monomials(&self, f: &Gf2h, m: &[Fe; 5]) -> Fe {
        let mut acc = self.0[5];
        for (&a, &x) in self.0.iter().zip(m) {
            acc += f.mul(a, x);
        }
        acc
    }

    /// Scaled so the first nonzero coefficient is 1.
    pub fn normalized(&self, f: &Gf2h) -> Self {
        let lead = *self.0.iter().find(|c| !c.is_zero()).expect("nonzero conic");
        self.scaled(f, f.inv(lead).expect("nonzero"))
    }

    /// `s` times the equation; `s` must be nonzero.
    pub fn scaled(&self, f: &Gf2h, s: Fe) -> Self {
        assert!(!s.is_zero(), "scaling by zero");
        Self(self.0.map(|c| f.mul(s, c)))
    }

    /// `a11 a23^2 + a12 a23 a13 + a22 a13^2 + a33 a12^2`, which vanishes
    /// exactly when the projective closure has a singular point.
    pub fn degeneracy_invariant(&self, f: &Gf2h) -> Fe {
        let [a11, a12, a22, a13, a23, a33] = self.0;
        f.mul(a11, f.square(a23))
            + f.mul(a12, f.mul(a23, a13))
            + f.mul(a22, f.square(a13))
            + f.mul(a33, f.square(a12))
    }

    pub fn is_degenerate(&self, f: &Gf2h) -> bool {
        self.degeneracy_invariant(f).is_zero()
    }

    /// Six hex-encoded coefficients separated by commas.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|c| format!("{:#x}", c.0)).collect::<Vec<_>>().join(",")
    }

    /// Parses six comma-separated hex coefficients.
    pub fn parse_hex(f: &Gf2h, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::Usage(format!("expected six coefficients, got {:?}", text)));
        }
        let mut raw = [0u64; 6];
        for (slot, p) in raw.iter_mut().zip(&parts) {
            *slot = gf2poly::parse_modulus(p)? as u64;
        }
        Self::from_encodings(f, raw)
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_hex())
    }
}

impl Serialize for Conic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| format!("{:#x}", c.0)))
    }
}

impl<'de> Deserialize<'de> for Conic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let parts: Vec<String> = Vec::deserialize(d)?;
        if parts.len() != 6 {
            return Err(D::Error::custom("a conic has six coefficients"));
        }
        let mut c = [Fe::ZERO; 6];
        for (slot, p) in c.iter_mut().zip(&parts) {
            *slot = Fe(gf2poly::parse_modulus(p).map_err(D::Error::custom)?);
        }
        Conic::new(c).map_err(D::Error::custom)
    }
}

/// Projective classes of nonzero vectors of length `N` over GF(q), each
/// represented with its first nonzero entry equal to 1.
///
/// Classes are ordered by the position of the leading 1 (earliest first),
/// then by the trailing entries read as a base-q number.
#[derive(Clone, Copy, Debug)]
pub struct ProjectiveClasses<const N: usize> {
    q: u64,
}

impl<const N: usize> ProjectiveClasses<N> {
    pub fn new(q: u64) -> Self {
        Self { q }
    }

    /// `(q^N - 1) / (q - 1)`.
    pub fn len(&self) -> u64 {
        (0..N as u32).map(|i| self.q.pow(i)).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nth(&self, mut i: u64) -> [Fe; N] {
        let mut out = [Fe::ZERO; N];
        for lead in 0..N {
            let tail_len = (N - lead - 1) as u32;
            let block = self.q.pow(tail_len);
            if i < block {
                out[lead] = Fe::ONE;
                for slot in out[lead + 1..].iter_mut().rev() {
                    *slot = Fe((i % self.q) as u32);
                    i /= self.q;
                }
                return out;
            }
            i -= block;
        }
        panic!("class index out of range");
    }

    pub fn iter(&self) -> impl Iterator<Item = [Fe; N]> + '_ {
        (0..self.len()).map(move |i| self.nth(i))
    }
}

/// Classes of all conics.
pub fn conic_classes(q: u64) -> ProjectiveClasses<6> {
    ProjectiveClasses::new(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conic(c: [u32; 6]) -> Conic {
        Conic::new(c.map(Fe)).unwrap()
    }

    #[test]
    fn degeneracy_examples() {
        let f = Gf2h::new(8).unwrap();
        // X^2 + 1 = (X + 1)^2
        assert!(conic([1, 0, 0, 0, 0, 1]).is_degenerate(&f));
        // Y + X^2
        let parabola = conic([1, 0, 0, 0, 1, 0]);
        assert_eq!(parabola.degeneracy_invariant(&f), Fe::ONE);
        // XY = 0
        assert!(conic([0, 1, 0, 0, 0, 0]).is_degenerate(&f));
        // XY + 1
        assert!(!conic([0, 1, 0, 0, 0, 1]).is_degenerate(&f));
        assert!(Conic::new([Fe::ZERO; 6]).is_err());
    }

    #[test]
    fn normalization_is_projective() {
        let f = Gf2h::new(16).unwrap();
        let c = conic([0, 7, 3, 0, 9, 1]);
        let n = c.normalized(&f);
        assert_eq!(n.a12(), Fe::ONE);
        assert_eq!(n.normalized(&f), n);
        for s in f.nonzero() {
            assert_eq!(c.scaled(&f, s).normalized(&f), n);
        }
    }

    #[test]
    fn class_enumeration_is_a_bijection() {
        let classes = ProjectiveClasses::<3>::new(4);
        assert_eq!(classes.len(), 21);
        let all: std::collections::BTreeSet<_> = classes.iter().collect();
        assert_eq!(all.len(), 21);
        assert_eq!(conic_classes(8).len(), (8u64.pow(6) - 1) / 7);
        let first = classes.nth(0);
        assert_eq!(first, [Fe::ONE, Fe::ZERO, Fe::ZERO]);
        assert_eq!(classes.nth(20), [Fe::ZERO, Fe::ZERO, Fe::ONE]);
    }

    #[test]
    fn hex_roundtrip() {
        let f = Gf2h::new(8).unwrap();
        let c = conic([1, 0, 5, 7, 0, 2]);
        assert_eq!(Conic::parse_hex(&f, &c.to_hex()).unwrap(), c);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<Conic>(&json).unwrap(), c);
        assert!(Conic::parse_hex(&f, "0x8,0,0,0,0,0").is_err());
    }
}
