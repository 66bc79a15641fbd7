//! Equitable sign partitions and quotient matrices.
//!
//! A sign partition splits `V(K_n)` into blocks `X_1..X_{p+q}` such that the
//! first `p` blocks induce `(K_{n_i}, +)`, the remaining `q` induce
//! `(K_{n_i}, -)`, and all edges between two blocks share one sign. Then
//!
//! ```text
//! φ(Γ, λ) = (λ + 1)^(m1 - p) · (λ - 1)^(m2 - q) · φ(B, λ)
//! ```
//!
//! where `B` is the matrix of block-average row sums and `m1`, `m2` are the
//! total sizes of the positive and negative blocks. Singletons are sign-free
//! and may sit on either side; builders here always place them with the
//! positive blocks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{GraphDocument, Sign, SignedCompleteGraph};
use crate::poly::IntPolynomial;
use crate::spectra::char_poly_of_matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPartition {
    order: usize,
    blocks: Vec<Vec<usize>>,
    p: usize,
}

impl SignPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.blocks.len() - self.p
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn m1(&self) -> usize {
        self.blocks[..self.p].iter().map(Vec::len).sum()
    }

    pub fn m2(&self) -> usize {
        self.blocks[self.p..].iter().map(Vec::len).sum()
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

fn violation(msg: String) -> Error {
    Error::Partition(msg)
}

/// Checks that `blocks` (first `p` positive, rest negative) is a sign
/// partition of `g`.
pub fn validate_partition(
    g: &SignedCompleteGraph,
    blocks: &[Vec<usize>],
    p: usize,
) -> Result<SignPartition> {
    let n = g.order();
    if p > blocks.len() {
        return Err(violation(format!("p = {p} exceeds the {} blocks", blocks.len())));
    }
    let mut owner = vec![usize::MAX; n];
    for (i, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(violation(format!("block X_{} is empty", i + 1)));
        }
        for &v in block {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if owner[v] != usize::MAX {
                return Err(violation(format!(
                    "vertex {v} lies in both X_{} and X_{}",
                    owner[v] + 1,
                    i + 1
                )));
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(violation(format!("vertex {v} is not covered")));
    }

    for (i, block) in blocks.iter().enumerate() {
        let want = if i < p { Sign::Positive } else { Sign::Negative };
        for (a, &u) in block.iter().enumerate() {
            for &v in &block[a + 1..] {
                if g.sign(u, v)? != want {
                    return Err(violation(format!(
                        "block X_{} should be internally {want} but edge {}{} is not",
                        i + 1,
                        u.min(v),
                        u.max(v)
                    )));
                }
            }
        }
    }
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let first = g.sign(blocks[i][0], blocks[j][0])?;
            for &u in &blocks[i] {
                for &v in &blocks[j] {
                    if g.sign(u, v)? != first {
                        return Err(violation(format!(
                            "edges between X_{} and X_{} have mixed signs",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
    }
    let mut blocks = blocks.to_vec();
    for b in &mut blocks {
        b.sort_unstable();
    }
    Ok(SignPartition { order: n, blocks, p })
}

/// Orders `blocks` as positive-type first (singletons included), then
/// negative, keeping relative order, and validates the result.
pub fn classify_partition(g: &SignedCompleteGraph, blocks: &[Vec<usize>]) -> Result<SignPartition> {
    let is_negative = |b: &Vec<usize>| -> Result<bool> {
        Ok(b.len() >= 2 && g.sign(b[0], b[1])? == Sign::Negative)
    };
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for b in blocks {
        if is_negative(b)? {
            negative.push(b.clone());
        } else {
            positive.push(b.clone());
        }
    }
    let p = positive.len();
    positive.extend(negative);
    validate_partition(g, &positive, p)
}

/// Matrix of block-average row sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl QuotientMatrix {
    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Entries as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<Vec<i64>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
                    .collect()
            })
            .collect()
    }

    /// `φ(B, λ)`.
    pub fn char_poly(&self) -> Result<IntPolynomial> {
        let ints = self.to_integers().ok_or_else(|| {
            violation("quotient matrix has non-integer entries".to_string())
        })?;
        Ok(char_poly_of_matrix(&ints))
    }
}

pub fn quotient_matrix(partition: &SignPartition, g: &SignedCompleteGraph) -> QuotientMatrix {
    let a = g.adjacency_matrix();
    let entries = partition
        .blocks
        .iter()
        .map(|xi| {
            partition
                .blocks
                .iter()
                .map(|xj| {
                    let total: i64 = xi.iter().map(|&r| xj.iter().map(|&c| a[r][c]).sum::<i64>()).sum();
                    BigRational::new(BigInt::from(total), BigInt::from(xi.len()))
                })
                .collect()
        })
        .collect();
    QuotientMatrix { entries }
}

/// `(λ + 1)^(m1 - p) (λ - 1)^(m2 - q) φ(B, λ)`.
pub fn char_poly_via_quotient(partition: &SignPartition, g: &SignedCompleteGraph) -> Result<IntPolynomial> {
    if partition.order != g.order() {
        return Err(violation(format!(
            "partition covers {} vertices but the graph has {}",
            partition.order,
            g.order()
        )));
    }
    let revalidated = validate_partition(g, &partition.blocks, partition.p)?;
    let b = quotient_matrix(&revalidated, g);
    let phi_b = b.char_poly()?;
    let plus = IntPolynomial::linear_power(-1, revalidated.m1() - revalidated.p());
    let minus = IntPolynomial::linear_power(1, revalidated.m2() - revalidated.q());
    Ok(&(&plus * &minus) * &phi_b)
}

fn range(from: usize, len: usize) -> Vec<usize> {
    (from..from + len).collect()
}

fn push_rest(blocks: &mut Vec<Vec<usize>>, used: usize, n: usize) {
    if used < n {
        blocks.push(range(used, n - used));
    }
}

/// The partition used for `(K_n, Q(s,t)^-)` with the labelling of
/// [`FamilySpec::Qst`]: `X_1..X_4 = {v_1}..{v_4}`,
/// `X_5 = N(v_1) \ {v_2, v_4}`, `X_6 = N(v_2) \ {v_1, v_3}`, and
/// `X_7 = V(K_n) \ V(Q(s,t))` when `k < n` (six blocks when `k = n`).
pub fn qst_partition(n: usize, s: usize, t: usize) -> Result<(SignedCompleteGraph, SignPartition)> {
    let spec = FamilySpec::Qst { s, t };
    let g = SignedCompleteGraph::new(n, &spec.build()?)?;
    let mut blocks = vec![vec![0], vec![1], vec![2], vec![3], range(4, s), range(4 + s, t)];
    push_rest(&mut blocks, spec.order(), n);
    let p = blocks.len();
    let partition = validate_partition(&g, &blocks, p)?;
    Ok((g, partition))
}

/// Sign partition for a named family embedded in `K_n`:
///
/// * `star`: `{centre}, {leaves}, rest`
/// * `q1`: `{v_1}, {v_2, v_4}, {v_3}, {pendants}, rest`
/// * `qst`: see [`qst_partition`]
/// * `u1`: `{v_1}, {pendants}, rest` positive, then `{v_2, v_3}` negative
///
/// Empty blocks are dropped.
pub fn family_partition(spec: FamilySpec, n: usize) -> Result<(SignedCompleteGraph, SignPartition)> {
    if let FamilySpec::Qst { s, t } = spec {
        return qst_partition(n, s, t);
    }
    let g = SignedCompleteGraph::new(n, &spec.build()?)?;
    let order = spec.order();
    let (mut positive, negative): (Vec<Vec<usize>>, Vec<Vec<usize>>) = match spec {
        FamilySpec::Star { k } => (vec![vec![0], range(1, k)], vec![]),
        FamilySpec::Q1 { k } => (vec![vec![0], vec![1, 3], vec![2], range(4, k - 4)], vec![]),
        FamilySpec::U1 { k } => (vec![vec![0], range(3, k - 3)], vec![vec![1, 2]]),
        other => {
            return Err(Error::InvalidParameters(format!(
                "no named sign partition for {other}"
            )))
        }
    };
    push_rest(&mut positive, order, n);
    positive.retain(|b| !b.is_empty());
    let p = positive.len();
    positive.extend(negative);
    let partition = validate_partition(&g, &positive, p)?;
    Ok((g, partition))
}

/// Interchange form: a graph document plus `blocks` and `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDocument {
    #[serde(flatten)]
    pub graph: GraphDocument,
    pub blocks: Vec<Vec<usize>>,
    pub p: usize,
}

impl PartitionDocument {
    pub fn load(&self) -> Result<(SignedCompleteGraph, SignPartition)> {
        let g = SignedCompleteGraph::try_from(&self.graph)?;
        let partition = validate_partition(&g, &self.blocks, self.p)?;
        Ok((g, partition))
    }
}
