//! Histograms of `|Δ ∩ C|` over the lines, the conics without `XY` and `Y^2`
//! terms, or all conic classes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Fe, Gf2h};
use crate::geometry::{
    classify_window, conic_classes, delta_window, line_delta_count_closed_form, parabola_count_closed_form, Conic,
    DeltaSet, Line, ProjectiveClasses, WindowClass,
};
use crate::report::{set_string, Claim};
use crate::verify::{par_indexed, BIG_CLASS_SWEEP_Q, CLASS_SWEEP_Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Lines,
    Parabolas,
    AllConics,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Lines => "lines",
            Family::Parabolas => "parabolas",
            Family::AllConics => "all-conics",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Family::Lines, Family::Parabolas, Family::AllConics]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown family {s:?}")))
    }
}

/// Members meeting `Δ` in exactly `count` points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SpectrumRow {
    pub count: u64,
    pub members: u64,
    /// Members by case or exceptional family.
    pub annotations: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub q: u64,
    pub family: Family,
    pub members: u64,
    /// `[(q - 2 sqrt q - 2)/2, (q + 2 sqrt q - 1)/2]`.
    pub window: (f64, f64),
    pub rows: Vec<SpectrumRow>,
    pub claims: Vec<Claim>,
}

impl SpectrumReport {
    pub fn holds(&self) -> bool {
        crate::report::all_hold(&self.claims)
    }
}

#[derive(Default)]
struct Histogram(BTreeMap<u64, SpectrumRow>);

impl Histogram {
    fn add(&mut self, count: u64, note: impl Into<String>) {
        let row = self.0.entry(count).or_insert_with(|| SpectrumRow { count, ..Default::default() });
        row.members += 1;
        *row.annotations.entry(note.into()).or_default() += 1;
    }

    fn rows(self) -> Vec<SpectrumRow> {
        self.0.into_values().collect()
    }
}

/// Sweeps the family; all conic classes are allowed up to `q = 16`, or up
/// to `q = 32` with `big`.
pub fn spectrum(f: &Gf2h, family: Family, big: bool) -> Result<SpectrumReport> {
    let q = f.q() as u64;
    let delta = DeltaSet::new(f, false);
    let (rows, claims) = match family {
        Family::Lines => lines(f, &delta),
        Family::Parabolas => parabolas(f, &delta),
        Family::AllConics => {
            let limit = if big { BIG_CLASS_SWEEP_Q } else { CLASS_SWEEP_Q };
            if q > limit {
                return Err(Error::Budget { needed: conic_classes(q).len() as u128, limit: conic_classes(limit).len() as u128 });
            }
            all_conics(f, &delta)
        }
    };
    let members = rows.iter().map(|r| r.members).sum();
    Ok(SpectrumReport { q, family, members, window: delta_window(q), rows, claims })
}

fn lines(f: &Gf2h, delta: &DeltaSet) -> (Vec<SpectrumRow>, Vec<Claim>) {
    let q = f.q() as u64;
    let mut h = Histogram::default();
    let mut matches = 0u64;
    let mut total = 0u64;
    for l in Line::all(f) {
        let n = delta.count_on_line(&l) as u64;
        let pred = line_delta_count_closed_form(&l, q);
        h.add(n, format!("{:?}", pred.case));
        matches += u64::from(pred.delta == n);
        total += 1;
    }
    let rows = h.rows();
    let mut allowed = vec![0, q / 2 - 1, q / 2, q - 1];
    allowed.sort_unstable();
    allowed.dedup();
    let seen: Vec<u64> = rows.iter().map(|r| r.count).collect();
    let claims = vec![
        Claim::equal("number of lines is q^2 + q", q * q + q, total),
        Claim::asserted(
            "line counts are drawn from {0, q/2 - 1, q/2, q - 1}",
            set_string(&allowed),
            set_string(&seen),
            seen.iter().all(|n| allowed.contains(n)),
        ),
        Claim::probe("each line meets Δ in the closed-form value of its case", total, matches, matches == total),
    ];
    (rows, claims)
}

fn parabolas(f: &Gf2h, delta: &DeltaSet) -> (Vec<SpectrumRow>, Vec<Claim>) {
    let classes = ProjectiveClasses::<4>::new(f.q() as u64);
    let counted = par_indexed(classes.len(), |i| {
        let [a11, a13, a23, a33] = classes.nth(i);
        let c = Conic::new([a11, Fe::ZERO, Fe::ZERO, a13, a23, a33]).expect("nonzero class");
        (delta.count_on(&c) as u64, parabola_count_closed_form(f, &c, false).ok(), c.is_degenerate(f))
    });
    let mut h = Histogram::default();
    let mut stated: BTreeMap<u64, u64> = BTreeMap::new();
    let mut observed: BTreeMap<u64, u64> = BTreeMap::new();
    for (n, closed, degenerate) in counted {
        let note = match (closed, degenerate) {
            (None, _) => "outside the closed forms",
            (Some(_), true) => "degenerate",
            (Some(_), false) => "non-degenerate",
        };
        h.add(n, note);
        if let Some(s) = closed {
            *stated.entry(s).or_default() += 1;
            *observed.entry(n).or_default() += 1;
        }
    }
    let show = |m: &BTreeMap<u64, u64>| set_string(m.iter().map(|(k, v)| format!("{k}: {v}")));
    let claims = vec![Claim::asserted(
        "the histogram over covered conics without XY and Y^2 terms equals the closed-form histogram",
        show(&stated),
        show(&observed),
        stated == observed,
    )];
    (h.rows(), claims)
}

fn all_conics(f: &Gf2h, delta: &DeltaSet) -> (Vec<SpectrumRow>, Vec<Claim>) {
    let q = f.q() as u64;
    let classes = conic_classes(q);
    let counted = par_indexed(classes.len(), |i| {
        let c = Conic::new(classes.nth(i)).expect("nonzero class");
        let n = delta.count_on(&c) as u64;
        let class = (!c.is_degenerate(f)).then(|| classify_window(f, &c, n).expect("non-degenerate"));
        (n, class)
    });
    let mut h = Histogram::default();
    let (mut outside, mut unexplained) = (0u64, 0u64);
    for (n, class) in counted {
        let note = match class {
            None => "degenerate".to_string(),
            Some(WindowClass::InWindow { .. }) => "in window".to_string(),
            Some(c @ WindowClass::Exceptional { family, .. }) => {
                unexplained += u64::from(!c.is_explained(q));
                format!("exceptional {family:?}")
            }
            Some(WindowClass::OutsideWindow { .. }) => {
                outside += 1;
                "outside window".to_string()
            }
        };
        h.add(n, note);
    }
    let claims = vec![
        Claim::asserted(
            "every non-degenerate conic outside the listed exceptional families meets Δ inside the window",
            0,
            outside,
            outside == 0,
        ),
        Claim::asserted("each exceptional family meets Δ in its stated number of points", 0, unexplained, unexplained == 0),
    ];
    (h.rows(), claims)
}
