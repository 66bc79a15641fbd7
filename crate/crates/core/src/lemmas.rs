//! Exhaustive checks of the closed forms and structural identities over all
//! valid parameters up to a given order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::formulas::{
    diff_qst_vs_q1, diff_qst_vs_q1_factored, diff_star_vs_u1, diff_star_vs_u1_factored,
    diff_star_vs_u1_triangle, diff_u1_vs_q1, diff_u1_vs_q1_factored, q1_charpoly, q1_charpoly_spanning,
    qst_charpoly, qst_septic, qst_spanning_septic, qst_spanning_sextic, star_charpoly, u1_charpoly,
};
use crate::graph::SignedCompleteGraph;
use crate::poly::IntPolynomial;
use crate::quotient::{char_poly_via_quotient, family_partition, qst_partition, quotient_matrix};
use crate::spectra::char_poly;

/// Largest order accepted by [`verify_lemma`].
pub const MAX_LEMMA_ORDER: usize = 16;

/// Largest order for which the switching check runs over all `2^n` sets.
pub const MAX_SWITCHING_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaName {
    Star,
    Q1,
    Qst,
    U1,
    Quotient,
    Switching,
    DiffQst,
    DiffU1,
    DiffStar,
}

impl LemmaName {
    pub const ALL: [LemmaName; 9] = [
        LemmaName::Star,
        LemmaName::Q1,
        LemmaName::Qst,
        LemmaName::U1,
        LemmaName::Quotient,
        LemmaName::Switching,
        LemmaName::DiffQst,
        LemmaName::DiffU1,
        LemmaName::DiffStar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaName::Star => "star",
            LemmaName::Q1 => "q1",
            LemmaName::Qst => "qst",
            LemmaName::U1 => "u1",
            LemmaName::Quotient => "quotient",
            LemmaName::Switching => "switching",
            LemmaName::DiffQst => "diff-qst",
            LemmaName::DiffU1 => "diff-u1",
            LemmaName::DiffStar => "diff-star",
        }
    }
}

impl fmt::Display for LemmaName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LemmaName::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown lemma {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub name: String,
    pub n_max: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn expect_eq(&mut self, what: impl FnOnce() -> String, a: &IntPolynomial, b: &IntPolynomial) {
        self.checked += 1;
        if a != b {
            self.failures.push(what());
        }
    }
}

fn direct(n: usize, spec: FamilySpec) -> Result<IntPolynomial> {
    Ok(char_poly(&SignedCompleteGraph::new(n, &spec.build()?)?))
}

fn plus_one_times(p: &IntPolynomial, e: usize) -> IntPolynomial {
    &IntPolynomial::linear_power(-1, e) * p
}

/// Runs the named check for every valid parameter set with `n <= n_max`.
pub fn verify_lemma(name: LemmaName, n_max: usize) -> Result<LemmaReport> {
    if n_max > MAX_LEMMA_ORDER {
        return Err(Error::Capacity {
            what: "lemma order",
            limit: MAX_LEMMA_ORDER,
            got: n_max,
        });
    }
    let mut t = Tally {
        checked: 0,
        failures: Vec::new(),
    };
    match name {
        LemmaName::Star => {
            for n in 2..=n_max {
                for k in 1..n {
                    let f = star_charpoly(n, k)?;
                    t.expect_eq(|| format!("star n={n} k={k}"), &f, &direct(n, FamilySpec::Star { k })?);
                }
            }
        }
        LemmaName::Q1 => {
            for n in 5..=n_max {
                for k in 4..=n {
                    let f = q1_charpoly(n, k)?;
                    t.expect_eq(|| format!("q1 n={n} k={k}"), &f, &direct(n, FamilySpec::Q1 { k })?);
                    let partner = if k < n {
                        FamilySpec::DoubleStar { s: n - k, t: 2 }
                    } else {
                        FamilySpec::Star { k: 3 }
                    };
                    t.expect_eq(|| format!("q1 switching partner n={n} k={k}"), &f, &direct(n, partner)?);
                }
                let spanning = q1_charpoly_spanning(n)?;
                t.expect_eq(|| format!("q1 spanning branch n={n}"), &q1_charpoly(n, n)?, &spanning);
            }
        }
        LemmaName::Qst => {
            for n in 7..=n_max {
                for k in 6..=n {
                    for s in 1..=k - 5 {
                        let tt = k - 4 - s;
                        let f = qst_charpoly(n, k, s, tt)?;
                        let g = direct(n, FamilySpec::Qst { s, t: tt })?;
                        t.expect_eq(|| format!("qst n={n} k={k} s={s} t={tt}"), &f, &g);
                        let swapped = qst_charpoly(n, k, tt, s)?;
                        t.expect_eq(|| format!("qst symmetry n={n} s={s} t={tt}"), &f, &swapped);
                    }
                }
                for s in 1..=n - 5 {
                    let st = s * (n - 4 - s);
                    let septic = qst_septic(n, n, s, n - 4 - s);
                    t.expect_eq(|| format!("qst spanning septic n={n} s={s}"), &septic, &qst_spanning_septic(n, st));
                    let sextic = plus_one_times(&qst_spanning_sextic(n, st), 1);
                    t.expect_eq(|| format!("qst spanning sextic n={n} s={s}"), &septic, &sextic);
                }
            }
        }
        LemmaName::U1 => {
            for n in 5..=n_max {
                for k in 3..=n {
                    let f = u1_charpoly(n, k)?;
                    t.expect_eq(|| format!("u1 n={n} k={k}"), &f, &direct(n, FamilySpec::U1 { k })?);
                }
            }
        }
        LemmaName::Quotient => {
            for n in 2..=n_max {
                let mut specs = Vec::new();
                specs.extend((1..n).map(|k| FamilySpec::Star { k }));
                specs.extend((4..=n).map(|k| FamilySpec::Q1 { k }));
                specs.extend((3..=n).map(|k| FamilySpec::U1 { k }));
                for spec in specs {
                    let (g, part) = family_partition(spec, n)?;
                    let via = char_poly_via_quotient(&part, &g)?;
                    t.expect_eq(|| format!("quotient {spec} n={n}"), &via, &char_poly(&g));
                }
                for k in 6..=n {
                    for s in 1..=k - 5 {
                        let tt = k - 4 - s;
                        let (g, part) = qst_partition(n, s, tt)?;
                        let via = char_poly_via_quotient(&part, &g)?;
                        t.expect_eq(|| format!("quotient qst:{s},{tt} n={n}"), &via, &char_poly(&g));
                        let phi_b = quotient_matrix(&part, &g).char_poly()?;
                        let expected = if k < n {
                            qst_septic(n, k, s, tt)
                        } else {
                            qst_spanning_sextic(n, s * tt)
                        };
                        t.expect_eq(|| format!("quotient matrix qst:{s},{tt} n={n}"), &phi_b, &expected);
                    }
                }
            }
        }
        LemmaName::Switching => {
            for n in 1..=n_max.min(MAX_SWITCHING_ORDER) {
                let mut graphs = vec![SignedCompleteGraph::all_positive(n)?];
                if n >= 2 {
                    graphs.push(SignedCompleteGraph::new(n, &FamilySpec::Star { k: n - 1 }.build()?)?);
                }
                if n >= 4 {
                    graphs.push(SignedCompleteGraph::new(n, &FamilySpec::Q1 { k: n }.build()?)?);
                }
                if n >= 5 {
                    graphs.push(SignedCompleteGraph::new(n, &FamilySpec::U1 { k: n - 1 }.build()?)?);
                }
                for g in graphs {
                    let base = char_poly(&g);
                    for mask in 0u32..(1 << n) {
                        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                        let switched = char_poly(&g.switch(&set)?);
                        t.expect_eq(|| format!("switching n={n} set={set:?}"), &switched, &base);
                    }
                }
            }
        }
        LemmaName::DiffQst => {
            for n in 7..=n_max {
                for k in 6..=n {
                    for s in 1..=k - 5 {
                        let tt = k - 4 - s;
                        t.expect_eq(
                            || format!("diff-qst n={n} k={k} s={s} t={tt}"),
                            &diff_qst_vs_q1(n, k, s, tt)?,
                            &diff_qst_vs_q1_factored(n, k, s, tt)?,
                        );
                    }
                }
            }
        }
        LemmaName::DiffU1 => {
            for n in 5..=n_max {
                for k in 4..=n {
                    t.expect_eq(
                        || format!("diff-u1 n={n} k={k}"),
                        &diff_u1_vs_q1(n, k)?,
                        &diff_u1_vs_q1_factored(n, k)?,
                    );
                }
            }
        }
        LemmaName::DiffStar => {
            for n in 5..=n_max {
                for k in 3..n {
                    let d = diff_star_vs_u1(n, k)?;
                    t.expect_eq(|| format!("diff-star n={n} k={k}"), &d, &diff_star_vs_u1_factored(n, k)?);
                    if k == 3 {
                        t.expect_eq(|| format!("diff-star triangle n={n}"), &d, &diff_star_vs_u1_triangle(n)?);
                    }
                }
            }
        }
    }
    Ok(LemmaReport {
        name: name.to_string(),
        n_max,
        checked: t.checked,
        failures: t.failures,
    })
}
