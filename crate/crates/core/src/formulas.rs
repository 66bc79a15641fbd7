//! Closed-form characteristic polynomials of `(K_n, H^-)` for the families
//! `K_{1,k}`, `Q_1`, `Q(s,t)` and `U_1`, and the differences between them.
//!
//! Throughout, `k` is the number of negative edges and `u = n - k`. Every
//! evaluator refuses parameters outside the range where its closed form is
//! stated instead of extrapolating.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::SignedCompleteGraph;
use crate::poly::IntPolynomial;
use crate::spectra::char_poly;

fn invalid(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

/// Builds a polynomial from coefficients listed highest degree first.
fn descending(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::new(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
}

fn plus_one_pow(e: usize) -> IntPolynomial {
    IntPolynomial::linear_power(-1, e)
}

fn to_i64(x: usize) -> i64 {
    i64::try_from(x).expect("parameter fits in i64")
}

/// `φ(K_n, K_{1,k}^-) = (λ+1)^{n-3} (λ³ + (3-n)λ² + (3-2n)λ + 4k(n-k-1) + 1 - n)`
/// for `1 <= k <= n - 1`. Orders below 3 fall back to the direct computation.
pub fn star_charpoly(n: usize, k: usize) -> Result<IntPolynomial> {
    if k < 1 || k + 1 > n {
        return Err(invalid(format!("star needs 1 <= k <= n - 1 (n = {n}, k = {k})")));
    }
    if n < 3 {
        let h = FamilySpec::Star { k }.build()?;
        return Ok(char_poly(&SignedCompleteGraph::new(n, &h)?));
    }
    let (n, k) = (to_i64(n), to_i64(k));
    let cubic = descending(&[1, 3 - n, 3 - 2 * n, 4 * k * (n - k - 1) + 1 - n]);
    Ok(&plus_one_pow((n - 3) as usize) * &cubic)
}

fn q1_quintic(n: i64, k: i64) -> IntPolynomial {
    let u = n - k;
    descending(&[
        1,
        5 - n,
        10 - 4 * n,
        12 * k - 6 * n + 4 * k * u - 38,
        24 * k - 4 * n + 8 * k * u - 91,
        127 * n - 116 * k - 28 * k * u - 47,
    ])
}

/// `φ(K_n, Q_1^-) = (λ+1)^{n-5} · quintic(n, k, u)` for `4 <= k <= n`, `n >= 5`.
pub fn q1_charpoly(n: usize, k: usize) -> Result<IntPolynomial> {
    if n < 5 || k < 4 || k > n {
        return Err(invalid(format!("q1 needs n >= 5 and 4 <= k <= n (n = {n}, k = {k})")));
    }
    Ok(&plus_one_pow(n - 5) * &q1_quintic(to_i64(n), to_i64(k)))
}

/// The `k = n` form `(λ+1)^{n-3} (λ³ + (3-n)λ² + (3-2n)λ + 11n - 47)`.
pub fn q1_charpoly_spanning(n: usize) -> Result<IntPolynomial> {
    if n < 5 {
        return Err(invalid(format!("q1 needs n >= 5 (n = {n})")));
    }
    let m = to_i64(n);
    let cubic = descending(&[1, 3 - m, 3 - 2 * m, 11 * m - 47]);
    Ok(&plus_one_pow(n - 3) * &cubic)
}

fn check_qst(n: usize, k: usize, s: usize, t: usize) -> Result<()> {
    if s < 1 || t < 1 {
        return Err(invalid(format!("qst needs s, t >= 1 (s = {s}, t = {t})")));
    }
    if k != s + t + 4 {
        return Err(invalid(format!("qst needs k = s + t + 4 (k = {k}, s = {s}, t = {t})")));
    }
    if k > n || n < 7 {
        return Err(invalid(format!("qst needs n >= 7 and k <= n (n = {n}, k = {k})")));
    }
    Ok(())
}

/// The degree-seven factor of `φ(K_n, Q(s,t)^-)`, i.e. `φ(B, λ)` for the
/// seven-block quotient.
pub fn qst_septic(n: usize, k: usize, s: usize, t: usize) -> IntPolynomial {
    let (n, k) = (to_i64(n), to_i64(k));
    let st = to_i64(s * t);
    let u = n - k;
    descending(&[
        1,
        7 - n,
        21 - 6 * n,
        12 * k - 15 * n + 4 * k * u + 8 * st - 13,
        48 * k - 20 * n + 16 * k * u + 32 * st - 157,
        113 * n - 56 * k - 8 * k * u - 16 * st * (u - 1) - 267,
        250 * n - 208 * k - 48 * k * u - 32 * st * (u + 1) - 185,
        127 * n - 116 * k - 28 * k * u + 24 * st * (2 * u - 1) - 47,
    ])
}

/// `φ(K_n, Q(s,t)^-) = (λ+1)^{n-7} · septic(n, k, s, t, u)`.
pub fn qst_charpoly(n: usize, k: usize, s: usize, t: usize) -> Result<IntPolynomial> {
    check_qst(n, k, s, t)?;
    Ok(&plus_one_pow(n - 7) * &qst_septic(n, k, s, t))
}

/// The `k = n` sextic factor: `φ(K_n, Q(s,t)^-) = (λ+1)^{n-6} · sextic`.
pub fn qst_spanning_sextic(n: usize, st: usize) -> IntPolynomial {
    let (n, st) = (to_i64(n), to_i64(st));
    descending(&[
        1,
        6 - n,
        15 - 5 * n,
        2 * n + 8 * st - 28,
        26 * n + 24 * st - 129,
        31 * n - 8 * st - 138,
        11 * n - 24 * st - 47,
    ])
}

/// The `k = n` septic written directly in `n` and `st`.
pub fn qst_spanning_septic(n: usize, st: usize) -> IntPolynomial {
    let (n, st) = (to_i64(n), to_i64(st));
    descending(&[
        1,
        7 - n,
        21 - 6 * n,
        -3 * n + 8 * st - 13,
        28 * n + 32 * st - 157,
        57 * n + 16 * st - 267,
        42 * n - 32 * st - 185,
        11 * n - 24 * st - 47,
    ])
}

/// `φ(K_n, U_1^-) = (λ+1)^{n-5} (λ-1) · quartic(n, k, u)` for `3 <= k <= n`, `n >= 5`.
pub fn u1_charpoly(n: usize, k: usize) -> Result<IntPolynomial> {
    if n < 5 || k < 3 || k > n {
        return Err(invalid(format!("u1 needs n >= 5 and 3 <= k <= n (n = {n}, k = {k})")));
    }
    let (m, k) = (to_i64(n), to_i64(k));
    let u = m - k;
    let quartic = descending(&[
        1,
        6 - m,
        16 - 5 * m,
        4 * k - 11 * m + 4 * k * u + 18,
        28 * k - 31 * m + 12 * k * u + 7,
    ]);
    Ok(&(&plus_one_pow(n - 5) * &IntPolynomial::linear(1)) * &quartic)
}

/// `φ(K_n, Q_1^-) - φ(K_n, Q(s,t)^-)`, computed from the two closed forms.
pub fn diff_qst_vs_q1(n: usize, k: usize, s: usize, t: usize) -> Result<IntPolynomial> {
    check_qst(n, k, s, t)?;
    Ok(&q1_charpoly(n, k)? - &qst_charpoly(n, k, s, t)?)
}

/// `-8st (λ+1)^{n-7} (λ⁴ + 4λ³ - 2(n-k-1)λ² - 4(n-k+1)λ + 3(2n-2k-1))`.
pub fn diff_qst_vs_q1_factored(n: usize, k: usize, s: usize, t: usize) -> Result<IntPolynomial> {
    check_qst(n, k, s, t)?;
    let (m, k) = (to_i64(n), to_i64(k));
    let st = to_i64(s * t);
    let quartic = descending(&[1, 4, -2 * (m - k - 1), -4 * (m - k + 1), 3 * (2 * m - 2 * k - 1)]);
    Ok((&plus_one_pow(n - 7) * &quartic).scale(&BigInt::from(-8 * st)))
}

fn check_u1_q1(n: usize, k: usize) -> Result<()> {
    if n < 5 || k < 4 || k > n {
        return Err(invalid(format!("needs n >= 5 and 4 <= k <= n (n = {n}, k = {k})")));
    }
    Ok(())
}

/// `φ(K_n, U_1^-) - φ(K_n, Q_1^-)` from the closed forms.
pub fn diff_u1_vs_q1(n: usize, k: usize) -> Result<IntPolynomial> {
    check_u1_q1(n, k)?;
    Ok(&u1_charpoly(n, k)? - &q1_charpoly(n, k)?)
}

/// `-8 (λ+1)^{n-5} ((k-5)λ² + 2(n-5)λ + 12n - 11k - 2k(n-k) - 5)`.
pub fn diff_u1_vs_q1_factored(n: usize, k: usize) -> Result<IntPolynomial> {
    check_u1_q1(n, k)?;
    let (m, k) = (to_i64(n), to_i64(k));
    let quad = descending(&[k - 5, 2 * (m - 5), 12 * m - 11 * k - 2 * k * (m - k) - 5]);
    Ok((&plus_one_pow(n - 5) * &quad).scale(&BigInt::from(-8)))
}

fn check_star_u1(n: usize, k: usize) -> Result<()> {
    if n < 5 || k < 3 || k + 1 > n {
        return Err(invalid(format!("needs n >= 5 and 3 <= k <= n - 1 (n = {n}, k = {k})")));
    }
    Ok(())
}

/// `φ(K_n, K_{1,k}^-) - φ(K_n, U_1^-)` from the closed forms.
pub fn diff_star_vs_u1(n: usize, k: usize) -> Result<IntPolynomial> {
    check_star_u1(n, k)?;
    Ok(&star_charpoly(n, k)? - &u1_charpoly(n, k)?)
}

/// `-8 (λ+1)^{n-5} ((k-1)λ² - 2(n-2k+1)λ + 4n - 3k - 2k(n-k) - 1)`.
pub fn diff_star_vs_u1_factored(n: usize, k: usize) -> Result<IntPolynomial> {
    check_star_u1(n, k)?;
    let (m, k) = (to_i64(n), to_i64(k));
    let quad = descending(&[k - 1, -2 * (m - 2 * k + 1), 4 * m - 3 * k - 2 * k * (m - k) - 1]);
    Ok((&plus_one_pow(n - 5) * &quad).scale(&BigInt::from(-8)))
}

/// The `k = 3` form `-16 (λ+1)^{n-4} (λ - n + 4)`.
pub fn diff_star_vs_u1_triangle(n: usize) -> Result<IntPolynomial> {
    check_star_u1(n, 3)?;
    let lin = IntPolynomial::linear(to_i64(n) - 4);
    Ok((&plus_one_pow(n - 4) * &lin).scale(&BigInt::from(-16)))
}

/// Named closed form, as exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaName {
    Star,
    Q1,
    Qst,
    U1,
}

impl std::str::FromStr for FormulaName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(FormulaName::Star),
            "q1" => Ok(FormulaName::Q1),
            "qst" => Ok(FormulaName::Qst),
            "u1" => Ok(FormulaName::U1),
            _ => Err(Error::Parse(format!("unknown formula {s:?}"))),
        }
    }
}

/// Evaluates a named closed form; `s` and `t` are required for `qst` only.
pub fn evaluate(name: FormulaName, n: usize, k: usize, s: Option<usize>, t: Option<usize>) -> Result<IntPolynomial> {
    match name {
        FormulaName::Star => star_charpoly(n, k),
        FormulaName::Q1 => q1_charpoly(n, k),
        FormulaName::U1 => u1_charpoly(n, k),
        FormulaName::Qst => {
            let (Some(s), Some(t)) = (s, t) else {
                return Err(invalid("qst needs --s and --t".to_string()));
            };
            qst_charpoly(n, k, s, t)
        }
    }
}
