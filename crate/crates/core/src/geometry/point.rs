use serde::{Deserialize, Serialize};

use crate::field::{Fe, Field};

/// A point `(x, y)` of the affine plane over the base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AffinePoint {
    pub x: Fe,
    pub y: Fe,
}

impl AffinePoint {
    pub const ORIGIN: AffinePoint = AffinePoint { x: Fe::ZERO, y: Fe::ZERO };

    pub fn new(x: Fe, y: Fe) -> Self {
        Self { x, y }
    }
}

/// The symmetric map `(x1, x2) -> (x1 + x2, x1 x2)`.
pub fn pi_map<F: Field<Elem = Fe>>(f: &F, x1: Fe, x2: Fe) -> AffinePoint {
    AffinePoint::new(x1 + x2, f.mul(x1, x2))
}

/// A point of the projective plane over `F`, scaled so that its first
/// nonzero coordinate is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint<E> {
    coords: [E; 3],
}

impl<E: Copy + Eq> ProjectivePoint<E> {
    /// `None` for the zero triple.
    pub fn new<F: Field<Elem = E>>(f: &F, coords: [E; 3]) -> Option<Self> {
        let lead = *coords.iter().find(|&&c| c != f.zero())?;
        let s = f.inv(lead).expect("nonzero");
        Some(Self { coords: coords.map(|c| f.mul(s, c)) })
    }

    pub fn coords(&self) -> [E; 3] {
        self.coords
    }

    /// All `|F|^2 + |F| + 1` points in canonical order:
    /// `(1:y:z)`, then `(0:1:z)`, then `(0:0:1)`.
    pub fn all<'a, F: Field<Elem = E>>(f: &'a F) -> impl Iterator<Item = Self> + 'a
    where
        E: 'a,
    {
        let n = f.order();
        let (zero, one) = (f.zero(), f.one());
        let affine = (0..n * n).map(move |i| Self {
            coords: [one, f.from_index(i / n), f.from_index(i % n)],
        });
        let at_infinity = (0..n).map(move |i| Self { coords: [zero, one, f.from_index(i)] });
        affine.chain(at_infinity).chain(std::iter::once(Self { coords: [zero, zero, one] }))
    }
}

/// `u x v` for coordinate triples.
pub fn cross<F: Field>(f: &F, u: [F::Elem; 3], v: [F::Elem; 3]) -> [F::Elem; 3] {
    [
        f.add(f.mul(u[1], v[2]), f.mul(u[2], v[1])),
        f.add(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
        f.add(f.mul(u[0], v[1]), f.mul(u[1], v[0])),
    ]
}

/// `det(u, v, w)`.
pub fn det3<F: Field>(f: &F, u: [F::Elem; 3], v: [F::Elem; 3], w: [F::Elem; 3]) -> F::Elem {
    let c = cross(f, v, w);
    f.add(f.add(f.mul(u[0], c[0]), f.mul(u[1], c[1])), f.mul(u[2], c[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf2h;

    #[test]
    fn pi_examples() {
        let f = Gf2h::new(8).unwrap();
        assert_eq!(pi_map(&f, Fe::ZERO, Fe::ONE), AffinePoint::new(Fe::ONE, Fe::ZERO));
        for t in f.iter() {
            assert_eq!(pi_map(&f, t, t), AffinePoint::new(Fe::ZERO, f.square(t)));
        }
    }

    #[test]
    fn projective_normalization_is_canonical() {
        let f = Gf2h::new(4).unwrap();
        let p = ProjectivePoint::new(&f, [Fe(0), Fe(2), Fe(3)]).unwrap();
        for s in f.nonzero() {
            let scaled = p.coords().map(|c| f.mul(s, c));
            assert_eq!(ProjectivePoint::new(&f, scaled).unwrap(), p);
        }
        assert_eq!(p.coords()[1], Fe::ONE);
        assert!(ProjectivePoint::new(&f, [Fe::ZERO; 3]).is_none());
        assert_eq!(ProjectivePoint::all(&f).count(), 21);
    }

    #[test]
    fn cross_product_is_orthogonal() {
        let f = Gf2h::new(8).unwrap();
        let u = [Fe(1), Fe(5), Fe(7)];
        let v = [Fe(3), Fe(0), Fe(6)];
        let c = cross(&f, u, v);
        assert!(det3(&f, u, u, v).is_zero());
        let dot = |a: [Fe; 3]| f.mul(a[0], c[0]) + f.mul(a[1], c[1]) + f.mul(a[2], c[2]);
        assert!(dot(u).is_zero() && dot(v).is_zero());
    }
}
