//! Extremal index search over classes of negative subgraphs, and checkers
//! for the extremal theorem, its corollaries, relocation, interlacing and
//! the cactus conjecture.
//!
//! Every decision about indices is made with [`compare_roots`]; floats are
//! only used to sample relocation triples.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_form, CanonicalForm};
use crate::enumerate::{enumerate_cacti, enumerate_unicyclic};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{SignedCompleteGraph, SimpleGraph, FORMAT_VERSION};
use crate::poly::IntPolynomial;
use crate::spectra::{
    char_poly, compare_roots, eigenvalue_brackets, index_of_poly, numeric_spectrum, RootInterval,
    SturmSequence,
};

/// Largest ambient order accepted by the searches.
pub const MAX_SEARCH_ORDER: usize = 10;

/// Largest order accepted by [`check_interlacing`].
pub const MAX_INTERLACING_ORDER: usize = 8;

/// Margin on the eigenvector entries when testing relocation hypotheses.
pub const HYPOTHESIS_MARGIN: f64 = 1e-9;

/// Width of the index brackets stored in reports.
pub fn report_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 32)
}

/// Width used for interlacing brackets (below `1e-10`).
pub fn interlacing_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(10)))
}

/// A candidate negative subgraph embedded in `K_n`, with its certified index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub canonical: CanonicalForm,
    pub index: RootInterval,
}

impl Evaluation {
    pub fn char_poly(&self) -> &IntPolynomial {
        self.index.poly()
    }
}

/// Source of evaluations. Implementations must return the same bracket for
/// the same `(canonical, n)` so that reports do not depend on where values
/// came from.
pub trait Evaluator: Sync {
    fn evaluate(&self, canonical: CanonicalForm, n: usize) -> Result<Evaluation>;
}

/// Computes everything from scratch.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactEvaluator;

/// Embeds the canonical representative on vertices `0..order` of `K_n`.
pub fn embed(canonical: CanonicalForm, n: usize) -> Result<SignedCompleteGraph> {
    if canonical.order() > n {
        return Err(Error::InvalidParameters(format!(
            "candidate of order {} does not fit in K_{n}",
            canonical.order()
        )));
    }
    SignedCompleteGraph::new(n, &canonical.graph())
}

/// Evaluation of `canonical` in `K_n` from scratch.
pub fn evaluate_exact(canonical: CanonicalForm, n: usize) -> Result<Evaluation> {
    let g = embed(canonical, n)?;
    let poly = char_poly(&g);
    let index = index_of_poly(&poly, n, &report_width());
    Ok(Evaluation { canonical, index })
}

impl Evaluator for ExactEvaluator {
    fn evaluate(&self, canonical: CanonicalForm, n: usize) -> Result<Evaluation> {
        evaluate_exact(canonical, n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchClass {
    Unicyclic,
    Cactus { cycles: usize },
    Custom,
}

impl fmt::Display for SearchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchClass::Unicyclic => f.write_str("unicyclic"),
            SearchClass::Cactus { .. } => f.write_str("cactus"),
            SearchClass::Custom => f.write_str("custom"),
        }
    }
}

/// Outcome of an exhaustive search. Candidates are sorted by canonical form;
/// `maximizers` index into `candidates`.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub class: SearchClass,
    pub n: usize,
    pub k: usize,
    pub candidates: Vec<Evaluation>,
    pub maximizers: Vec<usize>,
    pub runner_up: Option<usize>,
}

impl SearchReport {
    pub fn maximizer_forms(&self) -> Vec<CanonicalForm> {
        self.maximizers.iter().map(|&i| self.candidates[i].canonical).collect()
    }

    pub fn is_maximizer(&self, g: &SimpleGraph) -> Result<bool> {
        let c = canonical_form(g)?;
        Ok(self.maximizer_forms().contains(&c))
    }

    pub fn unique(&self) -> bool {
        self.maximizers.len() == 1
    }

    /// Exact sign of `λ₁(maximizer) - λ₁(runner-up)`; `None` if every
    /// candidate is a maximizer.
    pub fn runner_up_gap(&self) -> Option<Ordering> {
        let r = self.runner_up?;
        Some(compare_roots(&self.candidates[self.maximizers[0]].index, &self.candidates[r].index))
    }

    /// Re-checks the report: maximizers pairwise equal, strictly above every
    /// other candidate.
    pub fn is_consistent(&self) -> bool {
        if self.maximizers.is_empty() {
            return false;
        }
        let best = &self.candidates[self.maximizers[0]].index;
        let tied = self
            .maximizers
            .iter()
            .all(|&i| compare_roots(&self.candidates[i].index, best) == Ordering::Equal);
        let above = (0..self.candidates.len())
            .filter(|i| !self.maximizers.contains(i))
            .all(|i| compare_roots(best, &self.candidates[i].index) == Ordering::Greater);
        tied && above
    }

    pub fn to_document(&self) -> ReportDocument {
        let entry = |e: &Evaluation| IndexEntry {
            canonical: e.canonical.to_string(),
            index_lo: e.index.lo().to_string(),
            index_hi: e.index.hi().to_string(),
        };
        ReportDocument {
            format_version: FORMAT_VERSION,
            class: self.class.to_string(),
            n: self.n,
            k: self.k,
            t: match self.class {
                SearchClass::Cactus { cycles } => Some(cycles),
                _ => None,
            },
            candidates: self.candidates.len(),
            maximizers: self.maximizers.iter().map(|&i| entry(&self.candidates[i])).collect(),
            unique: self.unique(),
            runner_up: self.runner_up.map(|i| entry(&self.candidates[i])),
            table: self
                .candidates
                .iter()
                .map(|e| TableRow {
                    canonical: e.canonical.to_string(),
                    index_mid: e.index.midpoint().to_string(),
                })
                .collect(),
            verdict: None,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub canonical: String,
    pub index_lo: String,
    pub index_hi: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub canonical: String,
    pub index_mid: String,
}

/// Serialized [`SearchReport`]; all numbers are exact decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format_version: u32,
    pub class: String,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<usize>,
    pub candidates: usize,
    pub maximizers: Vec<IndexEntry>,
    pub unique: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runner_up: Option<IndexEntry>,
    pub table: Vec<TableRow>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

/// Finds every index maximizer among `candidates` embedded in `K_n`.
/// Isomorphic duplicates are merged; ties are all reported.
pub fn find_maximizer<E: Evaluator + ?Sized>(
    n: usize,
    candidates: &[SimpleGraph],
    class: SearchClass,
    k: usize,
    evaluator: &E,
) -> Result<SearchReport> {
    if candidates.is_empty() {
        return Err(Error::InvalidParameters("no candidates".to_string()));
    }
    if let Some(h) = candidates.iter().find(|h| h.order() > n) {
        return Err(Error::InvalidParameters(format!(
            "candidate of order {} does not fit in K_{n}",
            h.order()
        )));
    }
    let mut forms = candidates.iter().map(canonical_form).collect::<Result<Vec<_>>>()?;
    forms.sort();
    forms.dedup();
    let evaluated = forms
        .par_iter()
        .map(|&c| evaluator.evaluate(c, n))
        .collect::<Result<Vec<_>>>()?;

    let mut maximizers = vec![0];
    let mut runner_up: Option<usize> = None;
    for i in 1..evaluated.len() {
        let best = &evaluated[maximizers[0]].index;
        match compare_roots(&evaluated[i].index, best) {
            Ordering::Greater => {
                runner_up = Some(maximizers[0]);
                maximizers = vec![i];
            }
            Ordering::Equal => maximizers.push(i),
            Ordering::Less => {
                let better = match runner_up {
                    None => true,
                    Some(r) => compare_roots(&evaluated[i].index, &evaluated[r].index) == Ordering::Greater,
                };
                if better {
                    runner_up = Some(i);
                }
            }
        }
    }
    // a runner-up found before the current maximizer set may have been
    // overtaken by candidates that were compared only against the maximum
    if runner_up.is_some() {
        runner_up = (0..evaluated.len())
            .filter(|i| !maximizers.contains(i))
            .reduce(|a, b| {
                if compare_roots(&evaluated[b].index, &evaluated[a].index) == Ordering::Greater {
                    b
                } else {
                    a
                }
            });
    }
    Ok(SearchReport {
        class,
        n,
        k,
        candidates: evaluated,
        maximizers,
        runner_up,
    })
}

fn check_ambient(n: usize) -> Result<()> {
    if n > MAX_SEARCH_ORDER {
        return Err(Error::Capacity {
            what: "ambient order",
            limit: MAX_SEARCH_ORDER,
            got: n,
        });
    }
    Ok(())
}

/// [`find_maximizer`] over all unicyclic graphs of order `k` in `K_n`.
pub fn search_unicyclic<E: Evaluator + ?Sized>(n: usize, k: usize, evaluator: &E) -> Result<SearchReport> {
    check_ambient(n)?;
    if k > n {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    let class = enumerate_unicyclic(k)?;
    find_maximizer(n, &class, SearchClass::Unicyclic, k, evaluator)
}

/// [`find_maximizer`] over all cacti with `k` edges and `t` cycles in `K_n`.
pub fn search_cacti<E: Evaluator + ?Sized>(n: usize, k: usize, t: usize, evaluator: &E) -> Result<SearchReport> {
    check_ambient(n)?;
    if k + 1 > n + t {
        return Err(Error::InvalidParameters(format!(
            "cacti with {k} edges and {t} cycles need k - t < n (n = {n})"
        )));
    }
    let class = enumerate_cacti(k, t)?;
    if class.is_empty() {
        return Err(Error::InvalidParameters(format!("no cactus with {k} edges and {t} cycles")));
    }
    find_maximizer(n, &class, SearchClass::Cactus { cycles: t }, k, evaluator)
}

/// One `(n, k)` cell of the extremal theorem check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRow {
    pub n: usize,
    pub k: usize,
    pub candidates: usize,
    pub u1_is_maximizer: bool,
    pub unique: bool,
    pub maximizers: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub rows: Vec<TheoremRow>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.u1_is_maximizer)
    }

    /// Cells where `U_1` shares the maximum with another graph.
    pub fn ties(&self) -> Vec<&TheoremRow> {
        self.rows.iter().filter(|r| r.u1_is_maximizer && !r.unique).collect()
    }
}

/// Checks that `U_1(k)` maximizes the index over unicyclic graphs of order
/// `k` in `K_n`, for every `n` in the range and every `3 <= k <= n`.
pub fn verify_theorem_main<E: Evaluator + ?Sized>(
    ns: std::ops::RangeInclusive<usize>,
    evaluator: &E,
) -> Result<TheoremReport> {
    let mut rows = Vec::new();
    for n in ns {
        for k in 3..=n.min(crate::enumerate::MAX_UNICYCLIC_ORDER) {
            rows.push(theorem_row(n, k, evaluator)?);
        }
    }
    Ok(TheoremReport { rows })
}

pub fn theorem_row<E: Evaluator + ?Sized>(n: usize, k: usize, evaluator: &E) -> Result<TheoremRow> {
    let report = search_unicyclic(n, k, evaluator)?;
    let u1 = FamilySpec::U1 { k }.build()?;
    Ok(TheoremRow {
        n,
        k,
        candidates: report.candidates.len(),
        u1_is_maximizer: report.is_maximizer(&u1)?,
        unique: report.unique(),
        maximizers: report.maximizer_forms().iter().map(ToString::to_string).collect(),
    })
}

/// A strict comparison that failed, with the observed ordering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonFailure {
    pub n: usize,
    pub smaller: String,
    pub larger: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub comparisons: usize,
    pub failures: Vec<ComparisonFailure>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn expect_less<E: Evaluator + ?Sized>(
    n: usize,
    smaller: &SimpleGraph,
    larger: &SimpleGraph,
    evaluator: &E,
    report: &mut CorollaryReport,
) -> Result<()> {
    let a = evaluator.evaluate(canonical_form(smaller)?, n)?;
    let b = evaluator.evaluate(canonical_form(larger)?, n)?;
    report.comparisons += 1;
    let ord = compare_roots(&a.index, &b.index);
    if ord != Ordering::Less {
        report.failures.push(ComparisonFailure {
            n,
            smaller: a.canonical.to_string(),
            larger: b.canonical.to_string(),
            observed: format!("{ord:?}"),
        });
    }
    Ok(())
}

/// Every unicyclic `U` of order `k < n` has `λ₁(K_n, U^-) < λ₁(K_n, K_{1,k}^-)`.
pub fn verify_corollary_star<E: Evaluator + ?Sized>(
    ns: std::ops::RangeInclusive<usize>,
    evaluator: &E,
) -> Result<CorollaryReport> {
    let mut report = CorollaryReport {
        comparisons: 0,
        failures: Vec::new(),
    };
    for n in ns {
        check_ambient(n)?;
        for k in 3..n {
            let star = FamilySpec::Star { k }.build()?;
            for u in enumerate_unicyclic(k)? {
                expect_less(n, &u, &star, evaluator, &mut report)?;
            }
        }
    }
    Ok(report)
}

/// Every `Q(s,t)` with `k = s + t + 4 <= n` has a smaller index than `Q_1(k)`.
pub fn verify_corollary_qst<E: Evaluator + ?Sized>(
    ns: std::ops::RangeInclusive<usize>,
    evaluator: &E,
) -> Result<CorollaryReport> {
    let mut report = CorollaryReport {
        comparisons: 0,
        failures: Vec::new(),
    };
    for n in ns {
        check_ambient(n)?;
        for k in 6..=n {
            let q1 = FamilySpec::Q1 { k }.build()?;
            for s in 1..=k - 5 {
                let qst = FamilySpec::Qst { s, t: k - 4 - s }.build()?;
                expect_less(n, &qst, &q1, evaluator, &mut report)?;
            }
        }
    }
    Ok(report)
}

/// Result of one relocation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationReport {
    /// Triples with `σ(uv) = +` and `σ(uw) = -`.
    pub sign_admissible: usize,
    /// Triples whose eigenvector hypothesis held with margin and were checked.
    pub checked: usize,
    /// Checked triples whose relocation decreased the index.
    pub failures: Vec<[usize; 3]>,
}

impl RotationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Whether the relocation hypothesis holds for `(u, v, w)` with margin.
pub fn rotation_hypothesis(x: &[f64], u: usize, v: usize, w: usize) -> bool {
    let m = HYPOTHESIS_MARGIN;
    (x[u] >= m && x[w] - x[v] >= m) || (x[u] <= -m && x[v] - x[w] >= m)
}

/// Samples up to `trials` triples satisfying the relocation hypothesis for
/// the top eigenvector of `g` and checks that `R(u, v, w)` does not lower the
/// index.
pub fn check_rotation_lemma<R: Rng + ?Sized>(
    g: &SignedCompleteGraph,
    trials: usize,
    rng: &mut R,
) -> Result<RotationReport> {
    let n = g.order();
    check_ambient(n)?;
    let spectrum = numeric_spectrum(g)?;
    let x = &spectrum.eigenvectors[0];
    let mut admissible = Vec::new();
    let mut sign_admissible = 0;
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                if u == v || v == w || u == w {
                    continue;
                }
                if g.sign(u, v)?.value() > 0 && g.sign(u, w)?.value() < 0 {
                    sign_admissible += 1;
                    if rotation_hypothesis(x, u, v, w) {
                        admissible.push([u, v, w]);
                    }
                }
            }
        }
    }
    admissible.shuffle(rng);
    admissible.truncate(trials);
    let width = report_width();
    let base = index_of_poly(&char_poly(g), n, &width);
    let mut failures = Vec::new();
    for &[u, v, w] in &admissible {
        let moved = g.relocate(u, v, w)?;
        let after = index_of_poly(&char_poly(&moved), n, &width);
        if compare_roots(&base, &after) == Ordering::Greater {
            failures.push([u, v, w]);
        }
    }
    Ok(RotationReport {
        sign_admissible,
        checked: admissible.len(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterlacingReport {
    pub subsets: usize,
    /// Vertex subsets whose induced spectrum failed to interlace.
    pub violations: Vec<Vec<usize>>,
}

impl InterlacingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exact interlacing check for one induced subgraph `Γ[X]`.
pub fn interlaces(g: &SignedCompleteGraph, subset: &[usize]) -> Result<bool> {
    let n = g.order();
    if n > MAX_INTERLACING_ORDER {
        return Err(Error::Capacity {
            what: "interlacing order",
            limit: MAX_INTERLACING_ORDER,
            got: n,
        });
    }
    let h = g.induced(subset)?;
    let m = h.order();
    let width = interlacing_width();
    let lambda = eigenvalue_brackets(&char_poly(g), &width);
    let mu = eigenvalue_brackets(&char_poly(&h), &width);
    if lambda.len() != n || mu.len() != m {
        return Ok(false);
    }
    // brackets are half-open (lo, hi]; a violation must be certain
    Ok((0..m).all(|i| mu[i].lo < lambda[i].hi && lambda[n - m + i].lo < mu[i].hi))
}

/// Checks interlacing on `trials` random nonempty vertex subsets.
pub fn check_interlacing<R: Rng + ?Sized>(
    g: &SignedCompleteGraph,
    trials: usize,
    rng: &mut R,
) -> Result<InterlacingReport> {
    let n = g.order();
    let mut violations = Vec::new();
    for _ in 0..trials {
        let size = rng.gen_range(1..=n);
        let mut subset: Vec<usize> = rand::seq::index::sample(rng, n, size).into_vec();
        subset.sort_unstable();
        if !interlaces(g, &subset)? {
            violations.push(subset);
        }
    }
    Ok(InterlacingReport {
        subsets: trials,
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Consistent,
    Counterexample,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Consistent => f.write_str("CONSISTENT"),
            Verdict::Counterexample => f.write_str("COUNTEREXAMPLE"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub search: SearchReport,
    pub verdict: Verdict,
    /// A maximizer other than `G_t` when the verdict is a counterexample.
    pub witness: Option<CanonicalForm>,
}

impl ConjectureReport {
    pub fn to_document(&self) -> ReportDocument {
        let mut doc = self.search.to_document();
        doc.verdict = Some(self.verdict.to_string());
        doc.witness = self.witness.map(|w| w.to_string());
        doc
    }
}

/// Tests whether `G_t` maximizes the index over cacti with `k` edges and `t`
/// cycles in `K_n`. The verdict is reported, never assumed.
pub fn check_conjecture_cactus<E: Evaluator + ?Sized>(
    n: usize,
    k: usize,
    t: usize,
    evaluator: &E,
) -> Result<ConjectureReport> {
    if k < 3 * t {
        return Err(Error::InvalidParameters(format!("G_t needs k >= 3t (k = {k}, t = {t})")));
    }
    let search = search_cacti(n, k, t, evaluator)?;
    let gt = canonical_form(&FamilySpec::Gt { k, t }.build()?)?;
    let maximizers = search.maximizer_forms();
    let (verdict, witness) = if maximizers.contains(&gt) {
        (Verdict::Consistent, None)
    } else {
        (Verdict::Counterexample, maximizers.first().copied())
    };
    Ok(ConjectureReport {
        search,
        verdict,
        witness,
    })
}

/// Certifies `n - order <= λ₁ <= n - 1` for an order-`order` negative
/// subgraph (the lower bound is only claimed when `0 < order < n`).
pub fn index_bounds_hold(index: &RootInterval, n: usize, order: usize) -> bool {
    let upper = BigRational::from_integer(BigInt::from(n as i64 - 1));
    let bound = BigRational::from_integer(BigInt::from(n as i64));
    let sturm = SturmSequence::new(index.poly());
    let below_upper = index.poly().sign_at(&bound) != Ordering::Equal && sturm.count(&upper, &bound) == 0;
    if order == 0 || order >= n {
        return below_upper;
    }
    below_upper && index.at_least(&BigRational::from_integer(BigInt::from((n - order) as i64)))
}
