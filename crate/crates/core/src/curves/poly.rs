use std::collections::BTreeMap;

use serde::Serialize;

use crate::field::{Fe, Field};

/// A polynomial in two variables with sparse coefficients; the key `(i, j)`
/// stands for `U^i W^j` where `(U, W)` are the labels in `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly<E> {
    terms: BTreeMap<(u32, u32), E>,
    vars: (&'static str, &'static str),
}

/// One serialized term: exponents and hex coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermDump {
    pub i: u32,
    pub j: u32,
    pub coeff: String,
}

impl<E: Copy + Eq> BivariatePoly<E> {
    pub fn zero(vars: (&'static str, &'static str)) -> Self {
        Self { terms: BTreeMap::new(), vars }
    }

    pub fn from_terms<F: Field<Elem = E>>(
        f: &F,
        vars: (&'static str, &'static str),
        terms: impl IntoIterator<Item = ((u32, u32), E)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (k, c) in terms {
            p.add_term(f, k, c);
        }
        p
    }

    pub fn vars(&self) -> (&'static str, &'static str) {
        self.vars
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, f: &F, key: (u32, u32), c: E) {
        let sum = f.add(self.terms.get(&key).copied().unwrap_or(f.zero()), c);
        if sum == f.zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn coeff<F: Field<Elem = E>>(&self, f: &F, i: u32, j: u32) -> E {
        self.terms.get(&(i, j)).copied().unwrap_or(f.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), E)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_in_second(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(f, k, c);
        }
        out
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut out = Self::zero(self.vars);
        for ((i, j), a) in self.terms() {
            for ((k, l), b) in other.terms() {
                out.add_term(f, (i + k, j + l), f.mul(a, b));
            }
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: E) -> Self {
        Self::from_terms(f, self.vars, self.terms().map(|(k, c)| (k, f.mul(s, c))))
    }

    pub fn eval<F: Field<Elem = E>>(&self, f: &F, u: E, w: E) -> E {
        self.terms().fold(f.zero(), |acc, ((i, j), c)| {
            f.add(acc, f.mul(c, f.mul(f.pow(u, i as u64), f.pow(w, j as u64))))
        })
    }

    /// The quotient by `U^s`, or `None` if some term has a lower power.
    pub fn divide_by_first_power(&self, s: u32) -> Option<Self> {
        if self.terms.keys().any(|&(i, _)| i < s) {
            return None;
        }
        Some(Self { terms: self.terms.iter().map(|(&(i, j), &c)| ((i - s, j), c)).collect(), vars: self.vars })
    }

    /// The homogeneous part of top degree.
    pub fn top_form(&self) -> Self {
        let d = self.degree();
        Self {
            terms: self.terms.iter().filter(|(&(i, j), _)| Some(i + j) == d).map(|(&k, &c)| (k, c)).collect(),
            vars: self.vars,
        }
    }

    /// Exact division by the linear polynomial `a U + b W + c`, `(a, b) != 0`.
    pub fn divide_linear<F: Field<Elem = E>>(&self, f: &F, line: [E; 3]) -> Option<Self> {
        let [a, b, c] = line;
        let swap = b == f.zero();
        let (lead, other) = if swap { (a, b) } else { (b, a) };
        if lead == f.zero() {
            return None;
        }
        // write the dividend as a polynomial in the leading variable over
        // the ring of the other one, and divide by (var - r)
        let inv = f.inv(lead).ok()?;
        let r = (f.mul(other, inv), f.mul(c, inv));
        let mut rows: BTreeMap<u32, BTreeMap<u32, E>> = BTreeMap::new();
        for ((i, j), coef) in self.terms() {
            let (main, rest) = if swap { (i, j) } else { (j, i) };
            rows.entry(main).or_default().insert(rest, coef);
        }
        let top = *rows.keys().next_back()?;
        let mut quotient_rows: Vec<BTreeMap<u32, E>> = vec![BTreeMap::new(); top as usize + 1];
        let mut carry: BTreeMap<u32, E> = BTreeMap::new();
        for k in (0..=top).rev() {
            // current = row_k + r * carry
            let mut current = rows.get(&k).cloned().unwrap_or_default();
            for (&e, &v) in &carry {
                for (shift, rc) in [(1u32, r.0), (0u32, r.1)] {
                    if rc == f.zero() {
                        continue;
                    }
                    let entry = current.entry(e + shift).or_insert(f.zero());
                    *entry = f.add(*entry, f.mul(rc, v));
                }
            }
            current.retain(|_, v| *v != f.zero());
            if k == 0 {
                if !current.is_empty() {
                    return None;
                }
            } else {
                quotient_rows[k as usize - 1] = current.clone();
            }
            carry = current;
        }
        let mut out = Self::zero(self.vars);
        for (main, row) in quotient_rows.into_iter().enumerate() {
            for (rest, v) in row {
                let key = if swap { (main as u32, rest) } else { (rest, main as u32) };
                out.add_term(f, key, f.mul(v, inv));
            }
        }
        Some(out)
    }

    pub fn dump<F: Field<Elem = E>>(&self, f: &F) -> Vec<TermDump> {
        self.terms().map(|((i, j), c)| TermDump { i, j, coeff: f.hex(c) }).collect()
    }

    /// Rewrites over another field, e.g. the embedding into an extension.
    pub fn map<G: Copy + Eq>(&self, g: impl Fn(E) -> G) -> BivariatePoly<G> {
        BivariatePoly { terms: self.terms.iter().map(|(&k, &c)| (k, g(c))).collect(), vars: self.vars }
    }
}

/// Number of zeros `(u, w)` with both coordinates in the base field.
///
/// Every point is evaluated; per value of `u` the polynomial collapses to a
/// univariate one in `w`, evaluated by Horner's rule.
pub fn count_affine_points<F: Field>(f: &F, p: &BivariatePoly<F::Elem>) -> u64 {
    let base = f.base();
    let Some(dw) = p.degree_in_second() else {
        return base.q() as u64 * base.q() as u64;
    };
    let terms: Vec<((u32, u32), F::Elem)> = p.terms().collect();
    let points: Vec<F::Elem> = base.iter().map(|x| f.embed(x)).collect();
    let mut row = vec![f.zero(); dw as usize + 1];
    let mut count = 0u64;
    for &u in &points {
        row.iter_mut().for_each(|r| *r = f.zero());
        for &((i, j), c) in &terms {
            row[j as usize] = f.add(row[j as usize], f.mul(c, f.pow(u, i as u64)));
        }
        for &w in &points {
            let v = row.iter().rev().fold(f.zero(), |acc, &r| f.add(f.mul(acc, w), r));
            if v == f.zero() {
                count += 1;
            }
        }
    }
    count
}

/// Base-field polynomial lifted into an extension.
pub fn lift<F: Field>(f: &F, p: &BivariatePoly<Fe>) -> BivariatePoly<F::Elem> {
    p.map(|c| f.embed(c))
}
