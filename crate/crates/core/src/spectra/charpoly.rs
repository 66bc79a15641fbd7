//! `det(λI - A)` by evaluation at `λ = 0..=n` and Newton interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::SignedCompleteGraph;
use crate::poly::IntPolynomial;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Characteristic polynomial of a square integer matrix.
pub fn char_poly_of_matrix(a: &[Vec<i64>]) -> IntPolynomial {
    let n = a.len();
    let values: Vec<BigInt> = (0..=n)
        .map(|x| {
            let m = a
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, &v)| {
                            let diag = if i == j { x as i64 } else { 0 };
                            BigInt::from(diag - v)
                        })
                        .collect()
                })
                .collect();
            bareiss_determinant(m)
        })
        .collect();
    interpolate_consecutive(&values)
}

/// The unique polynomial of degree `< values.len()` taking `values[x]` at
/// `x = 0, 1, ...`, built from forward differences.
pub fn interpolate_consecutive(values: &[BigInt]) -> IntPolynomial {
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(values.len());
    for len in (1..=values.len()).rev() {
        leading.push(diffs[0].clone());
        for i in 0..len - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    // sum_j Δ^j f(0) * binom(x, j)
    let mut acc = vec![BigRational::zero(); values.len()];
    let mut falling = vec![BigRational::one()];
    let mut factorial = BigInt::one();
    for (j, d) in leading.iter().enumerate() {
        if j > 0 {
            factorial *= BigInt::from(j);
            let shift = BigRational::from_integer(BigInt::from(j - 1));
            let mut next = vec![BigRational::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &shift;
            }
            falling = next;
        }
        let scale = BigRational::new(d.clone(), factorial.clone());
        for (i, c) in falling.iter().enumerate() {
            acc[i] += c * &scale;
        }
    }
    IntPolynomial::new(
        acc.into_iter()
            .map(|c| {
                assert!(c.is_integer(), "integer-valued interpolation produced {c}");
                c.to_integer()
            })
            .collect(),
    )
}

/// `φ(Γ, λ)`, the characteristic polynomial of the signed adjacency matrix.
pub fn char_poly(g: &SignedCompleteGraph) -> IntPolynomial {
    char_poly_of_matrix(&g.adjacency_matrix())
}
