use std::fmt;
use std::sync::Arc;

use super::xor_basis::XorBasis;
use super::{Fe, Field, Gf2h};
use crate::error::FieldError;

/// An element `c_0 + c_1 z + ... + c_{D-1} z^{D-1}` of `F_q[z]/(m(z))`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElem<const D: usize>(pub [Fe; D]);

impl<const D: usize> fmt::Debug for ExtElem<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, "]")
    }
}

struct Inner<const D: usize> {
    base: Gf2h,
    /// Low coefficients of the monic modulus, so `z^D = sum tail[i] z^i`.
    tail: [Fe; D],
    /// `(z^i)^q` for each `i`.
    frobenius_images: [ExtElem<D>; D],
    artin_schreier: Option<XorBasis>,
}

/// The degree-`D` extension of a base field, `D` in {2, 3}.
///
/// The modulus is the monic polynomial of degree `D` without roots in the
/// base field whose low coefficients have the smallest packed encoding.
#[derive(Clone)]
pub struct Extension<const D: usize>(Arc<Inner<D>>);

impl<const D: usize> fmt::Debug for Extension<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}^{} mod z^{} + {:?}", self.0.base, D, D, self.0.tail)
    }
}

impl<const D: usize> Extension<D> {
    pub fn new(base: &Gf2h) -> Self {
        assert!(D == 2 || D == 3, "only quadratic and cubic extensions are supported");
        let q = base.q() as u64;
        let tail = (0..q.pow(D as u32))
            .map(|i| unpack_digits::<D>(i, q))
            .find(|tail| !has_root(base, tail))
            .expect("irreducible polynomials of every degree exist");

        let mut ext = Self(Arc::new(Inner {
            base: base.clone(),
            tail,
            frobenius_images: [ExtElem([Fe::ZERO; D]); D],
            artin_schreier: None,
        }));

        let mut images = [ExtElem([Fe::ZERO; D]); D];
        for (i, img) in images.iter_mut().enumerate() {
            *img = ext.pow(ext.monomial(i), q);
        }
        let packable = (D as u32) * base.h() <= 64;
        let solver = packable.then(|| {
            XorBasis::from_images((0..D as u32 * base.h()).map(|bit| {
                let t = ext.unpack(1u64 << bit);
                ext.pack(ext.add(ext.mul(t, t), t))
            }))
        });
        let inner = Arc::get_mut(&mut ext.0).expect("not yet shared");
        inner.frobenius_images = images;
        inner.artin_schreier = solver;
        ext
    }

    pub fn degree(&self) -> usize {
        D
    }

    /// Low coefficients of the defining modulus.
    pub fn modulus_tail(&self) -> [Fe; D] {
        self.0.tail
    }

    /// `z^i` for `i < D`.
    pub fn monomial(&self, i: usize) -> ExtElem<D> {
        let mut c = [Fe::ZERO; D];
        c[i] = Fe::ONE;
        ExtElem(c)
    }

    /// The class of `z`; `{1, z, ..., z^{D-1}}` is a base-field basis.
    pub fn generator(&self) -> ExtElem<D> {
        self.monomial(1)
    }

    /// `x -> x^q`.
    pub fn frobenius(&self, a: ExtElem<D>) -> ExtElem<D> {
        let f = &self.0.base;
        let mut out = [Fe::ZERO; D];
        for (i, &c) in a.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &img) in out.iter_mut().zip(self.0.frobenius_images[i].0.iter()) {
                *o += f.mul(c, img);
            }
        }
        ExtElem(out)
    }

    /// Scalar multiplication by a base-field element.
    pub fn scale(&self, c: Fe, a: ExtElem<D>) -> ExtElem<D> {
        let f = &self.0.base;
        ExtElem(a.0.map(|x| f.mul(c, x)))
    }

    /// Coefficients packed into `D * h` bits.
    pub fn pack(&self, a: ExtElem<D>) -> u64 {
        let h = self.0.base.h();
        a.0.iter().enumerate().fold(0u64, |acc, (i, c)| acc | (c.0 as u64) << (i as u32 * h))
    }

    pub fn unpack(&self, bits: u64) -> ExtElem<D> {
        let h = self.0.base.h();
        let mask = (1u64 << h) - 1;
        let mut c = [Fe::ZERO; D];
        for (i, x) in c.iter_mut().enumerate() {
            *x = Fe(((bits >> (i as u32 * h)) & mask) as u32);
        }
        ExtElem(c)
    }

    /// Both roots of `t^2 + t = v` in the extension, or `None`.
    pub fn solve_artin_schreier(&self, v: ExtElem<D>) -> Result<Option<(ExtElem<D>, ExtElem<D>)>, FieldError> {
        let solver = self.0.artin_schreier.as_ref().ok_or(FieldError::ExtensionTooLarge {
            degree: D,
            q: self.0.base.q() as u64,
        })?;
        Ok(solver.solve(self.pack(v)).map(|bits| {
            let t = self.unpack(bits);
            let t1 = self.add(t, self.one());
            if t <= t1 {
                (t, t1)
            } else {
                (t1, t)
            }
        }))
    }
}

fn unpack_digits<const D: usize>(mut i: u64, q: u64) -> [Fe; D] {
    let mut c = [Fe::ZERO; D];
    for x in c.iter_mut() {
        *x = Fe((i % q) as u32);
        i /= q;
    }
    c
}

/// Whether `z^D + sum tail[i] z^i` has a root in the base field; for
/// degree 2 and 3 that is the same as being reducible.
fn has_root<const D: usize>(f: &Gf2h, tail: &[Fe; D]) -> bool {
    f.iter().any(|x| {
        // Horner from the leading 1
        let mut acc = Fe::ONE;
        for &c in tail.iter().rev() {
            acc = f.mul(acc, x) + c;
        }
        acc.is_zero()
    })
}

impl<const D: usize> Field for Extension<D> {
    type Elem = ExtElem<D>;

    fn zero(&self) -> ExtElem<D> {
        ExtElem([Fe::ZERO; D])
    }

    fn one(&self) -> ExtElem<D> {
        self.monomial(0)
    }

    #[inline]
    fn add(&self, a: ExtElem<D>, b: ExtElem<D>) -> ExtElem<D> {
        let mut c = a.0;
        for (x, y) in c.iter_mut().zip(b.0) {
            *x += y;
        }
        ExtElem(c)
    }

    fn mul(&self, a: ExtElem<D>, b: ExtElem<D>) -> ExtElem<D> {
        let f = &self.0.base;
        let mut prod = [Fe::ZERO; 5];
        for (i, &x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] += f.mul(x, y);
            }
        }
        for k in (D..2 * D - 1).rev() {
            let top = prod[k];
            if top.is_zero() {
                continue;
            }
            prod[k] = Fe::ZERO;
            for (i, &t) in self.0.tail.iter().enumerate() {
                prod[k - D + i] += f.mul(top, t);
            }
        }
        let mut out = [Fe::ZERO; D];
        out.copy_from_slice(&prod[..D]);
        ExtElem(out)
    }

    fn inv(&self, a: ExtElem<D>) -> Result<ExtElem<D>, FieldError> {
        if a == self.zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    fn order(&self) -> u64 {
        (self.0.base.q() as u64).pow(D as u32)
    }

    fn from_index(&self, i: u64) -> ExtElem<D> {
        ExtElem(unpack_digits::<D>(i, self.0.base.q() as u64))
    }

    fn index(&self, a: ExtElem<D>) -> u64 {
        let q = self.0.base.q() as u64;
        a.0.iter().rev().fold(0u64, |acc, c| acc * q + c.0 as u64)
    }

    fn base(&self) -> &Gf2h {
        &self.0.base
    }

    fn embed(&self, c: Fe) -> ExtElem<D> {
        let mut e = [Fe::ZERO; D];
        e[0] = c;
        ExtElem(e)
    }

    fn to_base(&self, a: ExtElem<D>) -> Option<Fe> {
        a.0[1..].iter().all(|c| c.is_zero()).then_some(a.0[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_modulus_is_artin_schreier_type() {
        let f = Gf2h::new(8).unwrap();
        let e = Extension::<2>::new(&f);
        let tail = e.modulus_tail();
        assert_eq!(tail[1], Fe::ONE);
        assert_eq!(f.trace(tail[0]), 1);
    }

    #[test]
    fn frobenius_fixes_exactly_the_base_field() {
        let f = Gf2h::new(4).unwrap();
        let e3 = Extension::<3>::new(&f);
        let mut fixed = 0;
        for a in e3.elements() {
            let fa = e3.frobenius(a);
            assert_eq!(fa, e3.pow(a, 4));
            assert_eq!(e3.frobenius(e3.frobenius(fa)), a);
            if fa == a {
                fixed += 1;
                assert!(e3.to_base(a).is_some());
            }
        }
        assert_eq!(fixed, 4);
        assert_ne!(e3.frobenius(e3.generator()), e3.generator());
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let f = Gf2h::new(8).unwrap();
        let e = Extension::<2>::new(&f);
        for a in f.iter() {
            for b in f.iter() {
                assert_eq!(e.mul(e.embed(a), e.embed(b)), e.embed(f.mul(a, b)));
                assert_eq!(e.add(e.embed(a), e.embed(b)), e.embed(a + b));
            }
        }
    }

    #[test]
    fn extension_inverse_and_index_roundtrip() {
        let f = Gf2h::new(4).unwrap();
        let e = Extension::<3>::new(&f);
        for i in 1..e.order() {
            let a = e.from_index(i);
            assert_eq!(e.index(a), i);
            assert_eq!(e.mul(a, e.inv(a).unwrap()), e.one());
        }
    }

    #[test]
    fn every_base_equation_is_solvable_in_the_quadratic_extension() {
        let f = Gf2h::new(16).unwrap();
        let e = Extension::<2>::new(&f);
        for v in f.iter() {
            let (t0, t1) = e.solve_artin_schreier(e.embed(v)).unwrap().expect("solvable");
            for t in [t0, t1] {
                assert_eq!(e.add(e.square(t), t), e.embed(v));
            }
            assert_eq!(e.to_base(t0).is_some(), f.trace(v) == 0);
        }
    }
}
