//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's characteristic polynomial, canonical form or enumerators.
#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use signix_core::{IntPolynomial, SignedCompleteGraph};

/// Characteristic polynomial by Faddeev–LeVerrier over the integers.
/// Ascending coefficients.
pub fn faddeev_leverrier(a: &[Vec<i64>]) -> IntPolynomial {
    let n = a.len();
    let a: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mul = |x: &Vec<Vec<BigInt>>, y: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigInt::zero(), |s, l| s + &x[i][l] * &y[l][j]))
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for k in 1..=n {
        let am = mul(&a, &m);
        let trace = (0..n).fold(BigInt::zero(), |s, i| s + &am[i][i]);
        let c = -trace / BigInt::from(k);
        coeffs[n - k] = c.clone();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    IntPolynomial::new(coeffs)
}

pub fn oracle_char_poly(g: &SignedCompleteGraph) -> IntPolynomial {
    faddeev_leverrier(&g.adjacency_matrix())
}

/// Product of `(λ - r)^e` factors times an integer.
pub fn product(scale: i64, factors: &[(i64, usize)]) -> IntPolynomial {
    let mut p = IntPolynomial::from_i64s(&[scale]);
    for &(r, e) in factors {
        for _ in 0..e {
            p = &p * &IntPolynomial::from_i64s(&[-r, 1]);
        }
    }
    p
}

/// Polynomial from coefficients listed highest degree first.
pub fn desc(coeffs: &[i64]) -> IntPolynomial {
    let asc: Vec<i64> = coeffs.iter().rev().copied().collect();
    IntPolynomial::from_i64s(&asc)
}

/// `(λ+1)^e`.
pub fn plus_one(e: usize) -> IntPolynomial {
    product(1, &[(-1, e)])
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            parts -= 1;
        }
    }
    parts == 1
}

fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            go(k - 1, a, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut (0..n).collect(), &mut out);
    out
}

/// Number of simple cycles, by brute force over vertex sequences.
fn simple_cycle_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    // count cycles whose smallest vertex is `start`, each found twice (two directions)
    fn dfs(adj: &[Vec<bool>], start: usize, v: usize, seen: &mut Vec<bool>, len: usize, count: &mut usize) {
        for w in 0..adj.len() {
            if !adj[v][w] {
                continue;
            }
            if w == start && len >= 3 {
                *count += 1;
            } else if w > start && !seen[w] {
                seen[w] = true;
                dfs(adj, start, w, seen, len + 1, count);
                seen[w] = false;
            }
        }
    }
    let mut count = 0;
    for start in 0..n {
        let mut seen = vec![false; n];
        seen[start] = true;
        dfs(&adj, start, start, &mut seen, 1, &mut count);
    }
    count / 2
}

/// Counts isomorphism classes of connected labelled graphs on `order`
/// vertices with `size` edges accepted by `keep`, by orbit marking under all
/// vertex permutations.
fn count_classes(order: usize, size: usize, keep: impl Fn(&[(usize, usize)]) -> bool) -> usize {
    let pairs = all_pairs(order);
    let perms = heap_permutations(order);
    let mut seen: HashSet<u64> = HashSet::new();
    let mut classes = 0;
    for choice in subsets(pairs.len(), size) {
        let edges: Vec<(usize, usize)> = choice.iter().map(|&i| pairs[i]).collect();
        let mask = choice.iter().fold(0u64, |m, &i| m | 1 << i);
        if seen.contains(&mask) || !connected(order, &edges) || !keep(&edges) {
            continue;
        }
        classes += 1;
        for p in &perms {
            let image = edges.iter().fold(0u64, |m, &(a, b)| m | 1 << pair_index(order, p[a], p[b]));
            seen.insert(image);
        }
    }
    classes
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    go(0, n, r, &mut cur, &mut out);
    out
}

/// Unicyclic graphs of order `k` up to isomorphism, from labelled graphs.
pub fn oracle_unicyclic_count(k: usize) -> usize {
    count_classes(k, k, |_| true)
}

/// Cacti with `k` edges and `t` cycles up to isomorphism: connected graphs
/// whose number of simple cycles equals their cycle rank.
pub fn oracle_cactus_count(k: usize, t: usize) -> usize {
    let order = k + 1 - t;
    count_classes(order, k, |edges| simple_cycle_count(order, edges) == t)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> SignedCompleteGraph {
    let edges: Vec<(usize, usize)> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(density)).collect();
    SignedCompleteGraph::from_negative_edges(n, edges).unwrap()
}

/// A signed complete graph assembled from a random partition of `0..n`
/// into at most `max_blocks` blocks with random block and inter-block signs.
/// Returns the graph, the blocks with positive ones first, and `p`.
pub fn random_partitioned<R: Rng>(rng: &mut R, n: usize, max_blocks: usize) -> (SignedCompleteGraph, Vec<Vec<usize>>, usize) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let b = rng.gen_range(1..=max_blocks.min(n));
    let mut label: Vec<usize> = (0..n).map(|i| if i < b { i } else { rng.gen_range(0..b) }).collect();
    label.shuffle(rng);
    let mut blocks = vec![Vec::new(); b];
    for (v, &l) in order.iter().zip(&label) {
        blocks[l].push(*v);
    }
    let internal_negative: Vec<bool> = blocks.iter().map(|bl| bl.len() > 1 && rng.gen_bool(0.5)).collect();
    let between: Vec<Vec<bool>> = (0..b).map(|_| (0..b).map(|_| rng.gen_bool(0.5)).collect()).collect();
    assemble(n, blocks, &internal_negative, |i, j| between[i.min(j)][i.max(j)])
}

/// Every valid sign partition of `0..n` into at most `max_blocks` blocks,
/// each with its graph.
pub fn all_partitioned(n: usize, max_blocks: usize) -> Vec<(SignedCompleteGraph, Vec<Vec<usize>>, usize)> {
    let mut out = Vec::new();
    for labels in set_partitions(n, max_blocks) {
        let b = labels.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); b];
        for (v, &l) in labels.iter().enumerate() {
            blocks[l].push(v);
        }
        let big: Vec<usize> = (0..b).filter(|&i| blocks[i].len() > 1).collect();
        let pairs = all_pairs(b);
        for inner in 0u32..(1 << big.len()) {
            let internal: Vec<bool> = (0..b)
                .map(|i| big.iter().position(|&x| x == i).is_some_and(|pos| inner >> pos & 1 == 1))
                .collect();
            for outer in 0u64..(1 << pairs.len()) {
                let sign = |i: usize, j: usize| outer >> pair_index(b, i, j) & 1 == 1;
                out.push(assemble(n, blocks.clone(), &internal, sign));
            }
        }
    }
    out
}

fn set_partitions(n: usize, max_blocks: usize) -> Vec<Vec<usize>> {
    // restricted growth strings
    let mut out = Vec::new();
    fn go(i: usize, n: usize, max_blocks: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        let used = cur.iter().max().map_or(0, |m| m + 1);
        for l in 0..=used.min(max_blocks - 1) {
            cur.push(l);
            go(i + 1, n, max_blocks, cur, out);
            cur.pop();
        }
    }
    go(0, n, max_blocks, &mut Vec::new(), &mut out);
    out
}

fn assemble(
    n: usize,
    blocks: Vec<Vec<usize>>,
    internal_negative: &[bool],
    between_negative: impl Fn(usize, usize) -> bool,
) -> (SignedCompleteGraph, Vec<Vec<usize>>, usize) {
    let mut block_of = vec![0; n];
    for (i, bl) in blocks.iter().enumerate() {
        for &v in bl {
            block_of[v] = i;
        }
    }
    let edges: Vec<(usize, usize)> = all_pairs(n)
        .into_iter()
        .filter(|&(a, b)| {
            let (x, y) = (block_of[a], block_of[b]);
            if x == y {
                internal_negative[x]
            } else {
                between_negative(x, y)
            }
        })
        .collect();
    let g = SignedCompleteGraph::from_negative_edges(n, edges).unwrap();
    let (mut ordered, negative): (Vec<_>, Vec<_>) = blocks
        .into_iter()
        .enumerate()
        .partition(|(i, _)| !internal_negative[*i]);
    let p = ordered.len();
    ordered.extend(negative);
    (g, ordered.into_iter().map(|(_, b)| b).collect(), p)
}
