//! Arithmetic in GF(2^h) and in its quadratic and cubic extensions.
//!
//! Elements are plain values ([`Fe`] for the base field, [`ExtElem`] for
//! extensions); all operations go through the owning context, which is
//! immutable and cheap to clone.

mod ext;
pub mod gf2poly;
mod xor_basis;

use std::fmt;
use std::sync::Arc;

use crate::error::FieldError;
use xor_basis::XorBasis;

pub use ext::{ExtElem, Extension};

/// Largest supported field degree.
pub const MAX_DEGREE: u32 = 20;
/// Log/antilog tables are built up to this degree.
const TABLE_DEGREE: u32 = 16;

/// An element of GF(2^h) in the polynomial basis; bit `i` is the
/// coefficient of `g^i`, where `g` is the class of `x`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::ops::Add for Fe {
    type Output = Fe;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Fe) -> Fe {
        Fe(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for Fe {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Fe) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl serde::Serialize for Fe {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{:#x}", self.0))
    }
}

impl<'de> serde::Deserialize<'de> for Fe {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        gf2poly::parse_modulus(&text).map(Fe).map_err(serde::de::Error::custom)
    }
}

/// Operations shared by the base field and its extensions, so that points,
/// lines and polynomials can be written once.
pub trait Field: Clone + Send + Sync {
    type Elem: Copy + Eq + Ord + std::hash::Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem, FieldError>;
    /// Number of elements.
    fn order(&self) -> u64;
    /// The element with integer encoding `i < order()`.
    #[allow(clippy::wrong_self_convention)]
    fn from_index(&self, i: u64) -> Self::Elem;
    fn index(&self, a: Self::Elem) -> u64;
    fn base(&self) -> &Gf2h;
    fn embed(&self, c: Fe) -> Self::Elem;
    /// `Some(c)` when `a` lies in the embedded base field.
    fn to_base(&self, a: Self::Elem) -> Option<Fe>;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn square(&self, a: Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: Self::Elem, mut e: u64) -> Self::Elem {
        let (mut base, mut acc) = (a, self.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.from_index(i)))
    }

    fn hex(&self, a: Self::Elem) -> String {
        format!("{:#x}", self.index(a))
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    h: u32,
    modulus: u32,
    tables: Option<Tables>,
    trace_mask: u32,
    artin_schreier: XorBasis,
}

/// The field GF(2^h), 2 <= h <= 20.
#[derive(Clone)]
pub struct Gf2h(Arc<Inner>);

impl fmt::Debug for Gf2h {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}; {:#x})", self.h(), self.modulus())
    }
}

impl PartialEq for Gf2h {
    fn eq(&self, other: &Self) -> bool {
        self.h() == other.h() && self.modulus() == other.modulus()
    }
}

impl Eq for Gf2h {}

fn slow_mul(a: u32, b: u32, modulus: u32) -> u32 {
    gf2poly::rem(gf2poly::clmul(a, b), modulus as u64) as u32
}

impl Gf2h {
    /// The field of order `q` with the default modulus.
    pub fn new(q: u64) -> Result<Self, FieldError> {
        let h = log2_order(q)?;
        Self::with_modulus(h, gf2poly::default_modulus(h))
    }

    /// The field of order `q`, optionally with an explicit modulus.
    pub fn with_order(q: u64, modulus: Option<u32>) -> Result<Self, FieldError> {
        let h = log2_order(q)?;
        match modulus {
            Some(m) => Self::with_modulus(h, m),
            None => Self::with_modulus(h, gf2poly::default_modulus(h)),
        }
    }

    pub fn with_modulus(h: u32, modulus: u32) -> Result<Self, FieldError> {
        if !(2..=MAX_DEGREE).contains(&h) {
            return Err(FieldError::UnsupportedDegree(h));
        }
        if gf2poly::degree(modulus as u64) != Some(h) {
            return Err(FieldError::ModulusDegree { modulus, degree: h });
        }
        if !gf2poly::is_irreducible(modulus as u64) {
            return Err(FieldError::ReducibleModulus(modulus));
        }
        let q = 1u32 << h;
        let tables = (h <= TABLE_DEGREE).then(|| build_tables(q, modulus));

        let mut trace_mask = 0u32;
        for i in 0..h {
            let mut x = 1u32 << i;
            let mut t = 0u32;
            for _ in 0..h {
                t ^= x;
                x = slow_mul(x, x, modulus);
            }
            debug_assert!(t <= 1);
            trace_mask |= t << i;
        }

        let artin_schreier = XorBasis::from_images(
            (0..h).map(|i| (slow_mul(1 << i, 1 << i, modulus) ^ (1 << i)) as u64),
        );

        Ok(Self(Arc::new(Inner { h, modulus, tables, trace_mask, artin_schreier })))
    }

    pub fn h(&self) -> u32 {
        self.0.h
    }

    pub fn q(&self) -> u32 {
        1 << self.0.h
    }

    pub fn modulus(&self) -> u32 {
        self.0.modulus
    }

    /// Checked conversion from an integer encoding.
    pub fn element(&self, value: u64) -> Result<Fe, FieldError> {
        if value < self.q() as u64 {
            Ok(Fe(value as u32))
        } else {
            Err(FieldError::ElementOutOfRange { value, order: self.q() as u64 })
        }
    }

    /// Confirms that `a` is an element of this field.
    pub fn check(&self, a: Fe) -> Result<Fe, FieldError> {
        self.element(a.0 as u64)
    }

    /// The class of `x` in the polynomial basis.
    pub fn generator(&self) -> Fe {
        Fe(2)
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        match &self.0.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    Fe(0)
                } else {
                    Fe(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
                }
            }
            None => Fe(slow_mul(a.0, b.0, self.0.modulus)),
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::ZeroInverse);
        }
        match &self.0.tables {
            Some(t) => {
                let n = self.q() - 1;
                Ok(Fe(t.exp[((n - t.log[a.0 as usize]) % n) as usize]))
            }
            None => Ok(Field::pow(self, a, self.q() as u64 - 2)),
        }
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    #[inline]
    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        Field::pow(self, a, e)
    }

    /// Absolute trace `x + x^2 + ... + x^(2^(h-1))`, as 0 or 1.
    #[inline]
    pub fn trace(&self, a: Fe) -> u32 {
        (a.0 & self.0.trace_mask).count_ones() & 1
    }

    /// The unique square root, `x^(2^(h-1))`.
    pub fn sqrt(&self, a: Fe) -> Fe {
        let mut x = a;
        for _ in 1..self.h() {
            x = self.square(x);
        }
        x
    }

    /// Both roots of `t^2 + t = v`, smaller encoding first, or `None` when
    /// `trace(v) = 1`.
    pub fn solve_artin_schreier(&self, v: Fe) -> Option<(Fe, Fe)> {
        let t = self.0.artin_schreier.solve(v.0 as u64)? as u32;
        let (a, b) = (Fe(t), Fe(t ^ 1));
        Some(if a <= b { (a, b) } else { (b, a) })
    }

    /// Elements in encoding order.
    pub fn iter(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q()).map(Fe)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.q()).map(Fe)
    }

    /// Trace-zero elements in encoding order.
    pub fn trace_zero(&self) -> Vec<Fe> {
        self.iter().filter(|&a| self.trace(a) == 0).collect()
    }
}

impl Field for Gf2h {
    type Elem = Fe;

    fn zero(&self) -> Fe {
        Fe::ZERO
    }
    fn one(&self) -> Fe {
        Fe::ONE
    }
    #[inline]
    fn add(&self, a: Fe, b: Fe) -> Fe {
        a + b
    }
    #[inline]
    fn mul(&self, a: Fe, b: Fe) -> Fe {
        Gf2h::mul(self, a, b)
    }
    fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        Gf2h::inv(self, a)
    }
    fn order(&self) -> u64 {
        self.q() as u64
    }
    fn from_index(&self, i: u64) -> Fe {
        Fe(i as u32)
    }
    fn index(&self, a: Fe) -> u64 {
        a.0 as u64
    }
    fn base(&self) -> &Gf2h {
        self
    }
    fn embed(&self, c: Fe) -> Fe {
        c
    }
    fn to_base(&self, a: Fe) -> Option<Fe> {
        Some(a)
    }
}

/// `h` with `q = 2^h`, validating the supported range.
pub fn log2_order(q: u64) -> Result<u32, FieldError> {
    if !q.is_power_of_two() || !(4..=1 << MAX_DEGREE).contains(&q) {
        return Err(FieldError::InvalidOrder(q));
    }
    Ok(q.trailing_zeros())
}

fn build_tables(q: u32, modulus: u32) -> Tables {
    let n = (q - 1) as usize;
    // the modulus need not be primitive, so search for a generator
    for g in 2..q {
        let mut exp = Vec::with_capacity(2 * n);
        let mut x = 1u32;
        let mut cycled = false;
        for i in 0..n {
            if i > 0 && x == 1 {
                cycled = true;
                break;
            }
            exp.push(x);
            x = slow_mul(x, g, modulus);
        }
        if cycled || x != 1 {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        exp.extend_from_within(..);
        return Tables { exp, log };
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}
