//! Polynomials over GF(2) packed into machine words (bit `i` is the
//! coefficient of `x^i`).

use crate::error::FieldError;

/// Degree of a packed polynomial, `None` for the zero polynomial.
pub fn degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Carry-less product of two polynomials of degree < 32.
pub fn clmul(a: u32, b: u32) -> u64 {
    let mut acc = 0u64;
    let mut b = b;
    let a = a as u64;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub fn rem(mut a: u64, m: u64) -> u64 {
    let dm = degree(m).expect("modulus must be nonzero");
    while let Some(da) = degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// Irreducibility over GF(2) by trial division with every polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(m: u64) -> bool {
    let Some(d) = degree(m) else { return false };
    if d == 0 {
        return false;
    }
    for dd in 1..=d / 2 {
        for low in 0..(1u64 << dd) {
            let divisor = (1u64 << dd) | low;
            if rem(m, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

/// The numerically smallest irreducible polynomial of degree `h`.
pub fn default_modulus(h: u32) -> u32 {
    let lead = 1u32 << h;
    (0..lead)
        .map(|low| lead | low)
        .find(|&m| is_irreducible(m as u64))
        .expect("irreducible polynomials exist in every degree")
}

/// Parses a modulus written as a hexadecimal bit string that includes the
/// leading term, e.g. `0xB` for `x^3 + x + 1`.
pub fn parse_modulus(text: &str) -> Result<u32, FieldError> {
    let trimmed = text.trim();
    let digits = trimmed
        .strip_prefix("0x")
        .or_else(|| trimmed.strip_prefix("0X"))
        .unwrap_or(trimmed);
    u32::from_str_radix(digits, 16).map_err(|_| FieldError::BadModulusSyntax(text.to_string()))
}
