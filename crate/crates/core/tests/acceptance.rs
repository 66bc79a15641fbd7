//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Pinned tolerances: every polynomial identity and index comparison is
//! exact. Report brackets have width 2^-32, interlacing brackets 1e-10, and
//! relocation hypotheses use an eigenvector margin of 1e-9.

mod common;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Mutex;
use std::time::Instant;

use common::{all_partitioned, desc, oracle_char_poly, oracle_unicyclic_count, plus_one, random_graph, random_partitioned};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signix_core::formulas::{diff_qst_vs_q1, diff_star_vs_u1, diff_u1_vs_q1, q1_charpoly, qst_charpoly, star_charpoly, u1_charpoly};
use signix_core::search::{
    evaluate_exact, index_bounds_hold, interlaces, search_cacti, search_unicyclic, verify_corollary_star, verify_theorem_main,
    Evaluation, Evaluator, Verdict,
};
use signix_core::{
    canonical_form, char_poly, char_poly_via_quotient, check_conjecture_cactus, check_rotation_lemma, compare_indices,
    enumerate_unicyclic, validate_partition, CanonicalForm, FamilySpec, IntPolynomial, SignedCompleteGraph,
};

type Outcome = Result<String, String>;

/// Memoizing evaluator that cross-checks every characteristic polynomial
/// against Faddeev–LeVerrier and every index against its trivial bounds.
#[derive(Default)]
struct CheckedEvaluator {
    memo: Mutex<HashMap<(CanonicalForm, usize), Evaluation>>,
    mismatches: AtomicUsize,
    checked: AtomicUsize,
}

impl Evaluator for CheckedEvaluator {
    fn evaluate(&self, canonical: CanonicalForm, n: usize) -> signix_core::Result<Evaluation> {
        if let Some(e) = self.memo.lock().unwrap().get(&(canonical, n)) {
            return Ok(e.clone());
        }
        let e = evaluate_exact(canonical, n)?;
        let g = SignedCompleteGraph::new(n, &canonical.graph())?;
        self.checked.fetch_add(1, AtomicOrdering::Relaxed);
        if oracle_char_poly(&g) != *e.char_poly() || !index_bounds_hold(&e.index, n, canonical.order()) {
            self.mismatches.fetch_add(1, AtomicOrdering::Relaxed);
        }
        self.memo.lock().unwrap().insert((canonical, n), e.clone());
        Ok(e)
    }
}

impl CheckedEvaluator {
    fn healthy(&self) -> Result<usize, String> {
        match self.mismatches.load(AtomicOrdering::Relaxed) {
            0 => Ok(self.checked.load(AtomicOrdering::Relaxed)),
            m => Err(format!("{m} evaluations disagreed with the oracle or index bounds")),
        }
    }
}

fn graph(n: usize, spec: FamilySpec) -> SignedCompleteGraph {
    SignedCompleteGraph::new(n, &spec.build().unwrap()).unwrap()
}

fn checked_char_poly(g: &SignedCompleteGraph) -> Result<IntPolynomial, String> {
    let p = char_poly(g);
    if p != oracle_char_poly(g) {
        return Err(format!("char_poly disagrees with oracle on {:?}", g.to_document()));
    }
    Ok(p)
}

fn closed_forms() -> Outcome {
    let mut count = 0;
    let mut check = |what: String, formula: IntPolynomial, g: SignedCompleteGraph| -> Result<(), String> {
        count += 1;
        if formula != checked_char_poly(&g)? {
            return Err(format!("{what} differs from the direct computation"));
        }
        Ok(())
    };
    for n in 2..=12 {
        for k in 1..n {
            check(format!("star n={n} k={k}"), star_charpoly(n, k).unwrap(), graph(n, FamilySpec::Star { k }))?;
        }
    }
    for n in 5..=12 {
        for k in 4..=n {
            check(format!("q1 n={n} k={k}"), q1_charpoly(n, k).unwrap(), graph(n, FamilySpec::Q1 { k }))?;
        }
        for k in 3..=n {
            check(format!("u1 n={n} k={k}"), u1_charpoly(n, k).unwrap(), graph(n, FamilySpec::U1 { k }))?;
        }
        // k = n branch of the Q_1 formula
        let cubic = desc(&[1, 3 - n as i64, 3 - 2 * n as i64, 11 * n as i64 - 47]);
        check(format!("q1 cubic n={n}"), &plus_one(n - 3) * &cubic, graph(n, FamilySpec::Q1 { k: n }))?;
    }
    for n in 7..=12 {
        for k in 6..=n {
            for s in 1..=k - 5 {
                let t = k - 4 - s;
                check(format!("qst n={n} s={s} t={t}"), qst_charpoly(n, k, s, t).unwrap(), graph(n, FamilySpec::Qst { s, t }))?;
            }
        }
    }
    Ok(format!("{count} closed forms equal the direct and oracle polynomials, n <= 12"))
}

fn quotient_factorization() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=6 {
        for (g, blocks, p) in all_partitioned(n, 4) {
            let part = validate_partition(&g, &blocks, p).map_err(|e| format!("valid partition rejected: {e}"))?;
            if char_poly_via_quotient(&part, &g).unwrap() != char_poly(&g) {
                return Err(format!("factorization fails for {blocks:?} on {:?}", g.to_document()));
            }
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5157);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let max_blocks = rng.gen_range(1..=n);
        let (g, blocks, p) = random_partitioned(&mut rng, n, max_blocks);
        let part = validate_partition(&g, &blocks, p).map_err(|e| format!("valid partition rejected: {e}"))?;
        if char_poly_via_quotient(&part, &g).unwrap() != checked_char_poly(&g)? {
            return Err(format!("factorization fails for {blocks:?} on {:?}", g.to_document()));
        }
    }
    Ok(format!("{exhaustive} exhaustive partitions (n <= 6, <= 4 blocks) and 1000 random (n <= 10)"))
}

fn difference_identities() -> Outcome {
    let i = |x: usize| x as i64;
    let mut count = 0;
    let mut check = |what: String, computed: IntPolynomial, printed: IntPolynomial| -> Result<(), String> {
        count += 1;
        if computed != printed {
            return Err(format!("{what}: difference does not match the printed product"));
        }
        Ok(())
    };
    for n in 7..=12 {
        for k in 6..=n {
            for s in 1..=k - 5 {
                let t = k - 4 - s;
                let u = i(n) - i(k);
                let quartic = desc(&[1, 4, -2 * (u - 1), -4 * (u + 1), 3 * (2 * u - 1)]);
                let printed = (&plus_one(n - 7) * &quartic).scale(&BigInt::from(-8 * i(s * t)));
                check(format!("qst n={n} s={s} t={t}"), diff_qst_vs_q1(n, k, s, t).unwrap(), printed)?;
            }
        }
    }
    for n in 5..=12 {
        for k in 4..=n {
            let (n, k) = (i(n), i(k));
            let quad = desc(&[k - 5, 2 * (n - 5), 12 * n - 11 * k - 2 * k * (n - k) - 5]);
            let printed = (&plus_one(n as usize - 5) * &quad).scale(&BigInt::from(-8));
            check(format!("u1 n={n} k={k}"), diff_u1_vs_q1(n as usize, k as usize).unwrap(), printed)?;
        }
        for k in 3..n {
            let (n, k) = (i(n), i(k));
            let quad = desc(&[k - 1, -2 * (n - 2 * k + 1), 4 * n - 3 * k - 2 * k * (n - k) - 1]);
            let printed = (&plus_one(n as usize - 5) * &quad).scale(&BigInt::from(-8));
            let diff = diff_star_vs_u1(n as usize, k as usize).unwrap();
            check(format!("star n={n} k={k}"), diff.clone(), printed)?;
            if k == 3 {
                let triangle = (&plus_one(n as usize - 4) * &desc(&[1, 4 - n])).scale(&BigInt::from(-16));
                check(format!("star triangle n={n}"), diff, triangle)?;
            }
        }
    }
    Ok(format!("{count} difference identities hold exactly, n <= 12"))
}

fn main_theorem(eval: &CheckedEvaluator) -> Outcome {
    let report = verify_theorem_main(6..=9, eval).map_err(|e| e.to_string())?;
    let failing: Vec<_> = report.rows.iter().filter(|r| !r.u1_is_maximizer).map(|r| (r.n, r.k)).collect();
    if !failing.is_empty() {
        return Err(format!("U_1 is not a maximizer at (n, k) = {failing:?}"));
    }
    let checked = eval.healthy()?;
    let candidates: usize = report.rows.iter().map(|r| r.candidates).sum();
    let ties: Vec<_> = report.ties().iter().map(|r| (r.n, r.k)).collect();
    Ok(format!(
        "U_1 maximizes in all {} cells, n in 6..=9 ({candidates} candidates, {checked} oracle-checked evaluations, ties at {ties:?})",
        report.rows.len()
    ))
}

fn exceptional_cases(eval: &CheckedEvaluator) -> Outcome {
    let u1 = FamilySpec::U1 { k: 4 }.build().unwrap();
    let c4 = FamilySpec::Cycle { g: 4 }.build().unwrap();
    for n in [4, 5] {
        let r = search_unicyclic(n, 4, eval).map_err(|e| e.to_string())?;
        if !r.is_maximizer(&c4).unwrap() || r.is_maximizer(&u1).unwrap() {
            return Err(format!("n={n}, k=4: expected C_4 alone to beat U_1"));
        }
        if compare_indices(&SignedCompleteGraph::new(n, &u1).unwrap(), &SignedCompleteGraph::new(n, &c4).unwrap()) != Ordering::Less {
            return Err(format!("n={n}: λ1(U_1) < λ1(C_4) not confirmed"));
        }
    }
    let r = search_unicyclic(5, 5, eval).map_err(|e| e.to_string())?;
    let q1 = FamilySpec::Q1 { k: 5 }.build().unwrap();
    let u15 = FamilySpec::U1 { k: 5 }.build().unwrap();
    if !(r.is_maximizer(&q1).unwrap() && r.is_maximizer(&u15).unwrap()) {
        return Err("n=k=5: Q_1 and U_1 are not both maximizers".into());
    }
    if compare_indices(&graph(5, FamilySpec::Q1 { k: 5 }), &graph(5, FamilySpec::U1 { k: 5 })) != Ordering::Equal {
        return Err("n=k=5: indices of Q_1 and U_1 differ".into());
    }
    eval.healthy()?;
    Ok("C_4 beats U_1 for n = 4, 5 (k = 4); Q_1 and U_1 tie at n = k = 5".into())
}

fn star_corollary(eval: &CheckedEvaluator) -> Outcome {
    let report = verify_corollary_star(4..=9, eval).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(format!("{} comparisons not strictly Less: {:?}", report.failures.len(), report.failures));
    }
    eval.healthy()?;
    Ok(format!("{} unicyclic graphs strictly below the star, n in 4..=9", report.comparisons))
}

fn switching_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5717);
    let mut switchings = 0;
    for _ in 0..20 {
        let n = rng.gen_range(1..=7);
        let density = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, density);
        let base = checked_char_poly(&g)?;
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if char_poly(&g.switch(&set).unwrap()) != base {
                return Err(format!("switching {set:?} changed the spectrum of {:?}", g.to_document()));
            }
            switchings += 1;
        }
    }
    Ok(format!("{switchings} switchings of 20 random graphs (n <= 7) preserve the polynomial"))
}

fn interlacing_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a7e);
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, density);
        let size = rng.gen_range(1..=n);
        let mut x = rand::seq::index::sample(&mut rng, n, size).into_vec();
        x.sort_unstable();
        if !interlaces(&g, &x).map_err(|e| e.to_string())? {
            return Err(format!("interlacing fails for X = {x:?} in {:?}", g.to_document()));
        }
    }
    Ok("500 random (graph, subset) pairs interlace, n <= 8".into())
}

fn rotation_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2074);
    let (mut graphs, mut triples, mut drawn) = (0, 0, 0);
    while graphs < 20 {
        drawn += 1;
        if drawn > 10_000 {
            return Err("could not find 20 graphs with 10 admissible triples".into());
        }
        let n = rng.gen_range(4..=8);
        let density = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, density);
        let report = check_rotation_lemma(&g, 10, &mut rng).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(format!("relocations {:?} lowered the index of {:?}", report.failures, g.to_document()));
        }
        if report.checked == 10 {
            graphs += 1;
            triples += report.checked;
        }
    }
    Ok(format!("{triples} admissible triples across {graphs} graphs (n <= 8) never lower the index"))
}

fn enumeration_oracle() -> Outcome {
    let expected = [1, 2, 5, 13, 33];
    let mut seen = Vec::new();
    for (k, &want) in (3..=7).zip(&expected) {
        let fast = enumerate_unicyclic(k).map_err(|e| e.to_string())?.len();
        let oracle = oracle_unicyclic_count(k);
        if fast != oracle || fast != want {
            return Err(format!("k={k}: enumerator {fast}, oracle {oracle}, expected {want}"));
        }
        seen.push(fast);
    }
    Ok(format!("unicyclic counts for k = 3..7 are {seen:?} from both methods"))
}

fn conjecture_exploration(eval: &CheckedEvaluator) -> Outcome {
    let mut runs = 0;
    for n in 6..=9 {
        for k in 3..n {
            let r = check_conjecture_cactus(n, k, 0, eval).map_err(|e| e.to_string())?;
            let star = canonical_form(&FamilySpec::Star { k }.build().unwrap()).unwrap();
            if r.verdict != Verdict::Consistent || r.search.maximizer_forms() != vec![star] {
                return Err(format!("t=0, n={n}, k={k}: star is not the unique maximizer"));
            }
            runs += 1;
        }
        for k in 3..=n {
            let r = check_conjecture_cactus(n, k, 1, eval).map_err(|e| e.to_string())?;
            let unicyclic = search_unicyclic(n, k, eval).map_err(|e| e.to_string())?;
            if r.verdict != Verdict::Consistent || r.search.maximizer_forms() != unicyclic.maximizer_forms() {
                return Err(format!("t=1, n={n}, k={k}: maximizers differ from the unicyclic search"));
            }
            runs += 1;
        }
    }
    let mut findings = Vec::new();
    for n in 6..=9 {
        for k in 6..=8 {
            if k - 2 >= n {
                continue;
            }
            let r = check_conjecture_cactus(n, k, 2, eval).map_err(|e| e.to_string())?;
            if !r.search.is_consistent() {
                return Err(format!("t=2, n={n}, k={k}: inconsistent report"));
            }
            findings.push(format!("({n},{k})={}", r.verdict));
        }
    }
    // the cactus class with t = 1 is exactly the unicyclic class
    let same = search_cacti(7, 5, 1, eval).map_err(|e| e.to_string())?.candidates.len() == enumerate_unicyclic(5).unwrap().len();
    if !same {
        return Err("t=1 cactus class differs from the unicyclic class".into());
    }
    eval.healthy()?;
    Ok(format!("{runs} runs with t <= 1 CONSISTENT; t=2 verdicts {}", findings.join(" ")))
}

fn main() {
    let eval = CheckedEvaluator::default();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("closed-form fidelity", Box::new(closed_forms)),
        ("quotient factorization", Box::new(quotient_factorization)),
        ("difference identities", Box::new(difference_identities)),
        ("extremal unicyclic theorem", Box::new(|| main_theorem(&eval))),
        ("exceptional small cases", Box::new(|| exceptional_cases(&eval))),
        ("star corollary", Box::new(|| star_corollary(&eval))),
        ("switching invariance", Box::new(switching_invariance)),
        ("interlacing", Box::new(interlacing_suite)),
        ("relocation", Box::new(rotation_suite)),
        ("enumeration oracle", Box::new(enumeration_oracle)),
        ("cactus conjecture exploration", Box::new(|| conjecture_exploration(&eval))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
