use std::collections::HashMap;

use crate::field::{Fe, Gf2h};

use super::matrix::GeneratorMatrix;

/// Largest dependent-set size searched.
pub const MAX_DUAL_SEARCH: usize = 4;

fn normalize(f: &Gf2h, v: &[Fe]) -> Option<Vec<Fe>> {
    let lead = *v.iter().find(|x| !x.is_zero())?;
    let s = f.inv(lead).ok()?;
    Some(v.iter().map(|&x| f.mul(s, x)).collect())
}

fn combine(f: &Gf2h, cols: &[&[Fe]], coeffs: &[Fe]) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; cols[0].len()];
    for (col, &c) in cols.iter().zip(coeffs) {
        for (o, &x) in out.iter_mut().zip(col.iter()) {
            *o += f.mul(c, x);
        }
    }
    out
}

/// The least number of linearly dependent columns, which is the minimum
/// distance of the dual code, if it is at most `w_max` (capped at 4).
///
/// Sizes are tried in increasing order, so a set found at size `w` has all
/// `w` coefficients nonzero, and it is enough to look up the projective
/// class of `-(Σ c_i col_i)` among the remaining columns.
pub fn dual_distance_upto(f: &Gf2h, g: &GeneratorMatrix, w_max: usize) -> Option<usize> {
    let w_max = w_max.min(MAX_DUAL_SEARCH);
    let n = g.n();
    let cols: Vec<Vec<Fe>> = (0..n).map(|j| g.column(j)).collect();
    if w_max >= 1 && cols.iter().any(|c| c.iter().all(|x| x.is_zero())) {
        return Some(1);
    }
    let mut classes: HashMap<Vec<Fe>, usize> = HashMap::new();
    for c in &cols {
        let key = normalize(f, c).expect("no zero column");
        if w_max >= 2 && classes.contains_key(&key) {
            return Some(2);
        }
        classes.insert(key, 0);
    }
    let index: HashMap<Vec<Fe>, usize> =
        cols.iter().enumerate().map(|(j, c)| (normalize(f, c).expect("nonzero"), j)).collect();
    let scalars: Vec<Fe> = f.nonzero().collect();
    if w_max >= 3 {
        for i in 0..n {
            for j in i + 1..n {
                for &a in &scalars {
                    let v = combine(f, &[&cols[i], &cols[j]], &[Fe::ONE, a]);
                    if let Some(&l) = normalize(f, &v).as_ref().and_then(|k| index.get(k)) {
                        if l != i && l != j {
                            return Some(3);
                        }
                    }
                }
            }
        }
    }
    if w_max >= 4 {
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    for &a in &scalars {
                        for &b in &scalars {
                            let v = combine(f, &[&cols[i], &cols[j], &cols[l]], &[Fe::ONE, a, b]);
                            if let Some(&m) = normalize(f, &v).as_ref().and_then(|k| index.get(k)) {
                                if m != i && m != j && m != l {
                                    return Some(4);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
