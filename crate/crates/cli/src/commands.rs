use std::io::Write;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use signix_core::formulas::{evaluate as evaluate_formula, FormulaName};
use signix_core::poly::parse_rational;
use signix_core::search::{search_cacti, search_unicyclic, Evaluator, ExactEvaluator};
use signix_core::{
    char_poly, char_poly_via_quotient, check_conjecture_cactus, check_interlacing, check_rotation_lemma,
    compare_indices, index, quotient_matrix, verify_corollary_qst, verify_corollary_star, verify_lemma,
    verify_theorem_main, IntPolynomial, LemmaName, PartitionDocument, FORMAT_VERSION,
};

use crate::cache::CachedEvaluator;
use crate::error::CliError;
use crate::input::{parse_operand, read_json};
use crate::{ClassArg, Command, CorollaryArg, FormulaArg, LemmaArg};

#[derive(Serialize)]
struct Versioned<T: Serialize> {
    format_version: u32,
    #[serde(flatten)]
    body: T,
}

fn emit<T: Serialize>(body: T) {
    let doc = Versioned {
        format_version: FORMAT_VERSION,
        body,
    };
    print_line(&serde_json::to_string_pretty(&doc).expect("serializable"));
}

/// For documents that already carry `format_version`.
fn emit_document<T: Serialize>(doc: T) {
    print_line(&serde_json::to_string_pretty(&doc).expect("serializable"));
}

/// Prints to stdout, ignoring a closed pipe.
fn print_line(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn coefficients(p: &IntPolynomial) -> Vec<String> {
    p.coefficients().iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
struct PolynomialOut {
    n: usize,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct IndexOut {
    n: usize,
    index_lo: String,
    index_hi: String,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct FormulaOut {
    name: &'static str,
    n: usize,
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct QuotientOut {
    n: usize,
    p: usize,
    q: usize,
    m1: usize,
    m2: usize,
    quotient: Vec<Vec<String>>,
    quotient_charpoly: Vec<String>,
    coefficients: Vec<String>,
    matches_direct: bool,
}

/// Runs `f` against either a fresh evaluator or the cache at `path`, which
/// is rewritten afterwards.
fn with_evaluator<T>(
    path: Option<&Path>,
    f: impl FnOnce(&dyn Evaluator) -> Result<T, CliError>,
) -> Result<T, CliError> {
    match path {
        None => f(&ExactEvaluator),
        Some(path) => {
            let cache = CachedEvaluator::load(path)?;
            let out = f(&cache)?;
            log::info!("{} new evaluations, {} cached in total", cache.fresh(), cache.len());
            cache.store()?;
            Ok(out)
        }
    }
}

fn lemma(name: LemmaArg) -> LemmaName {
    match name {
        LemmaArg::Star => LemmaName::Star,
        LemmaArg::Q1 => LemmaName::Q1,
        LemmaArg::Qst => LemmaName::Qst,
        LemmaArg::U1 => LemmaName::U1,
        LemmaArg::Quotient => LemmaName::Quotient,
        LemmaArg::Switching => LemmaName::Switching,
        LemmaArg::DiffQst => LemmaName::DiffQst,
        LemmaArg::DiffU1 => LemmaName::DiffU1,
        LemmaArg::DiffStar => LemmaName::DiffStar,
    }
}

/// Executes one subcommand. `Ok(false)` means a check ran and failed.
pub fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Charpoly { input } => {
            let g = input.resolve()?;
            emit(PolynomialOut {
                n: g.order(),
                coefficients: coefficients(&char_poly(&g)),
            });
            Ok(true)
        }
        Command::Index { input, width } => {
            let g = input.resolve()?;
            let width = parse_rational(&width)?;
            if width <= num_rational::BigRational::from_integer(0.into()) {
                return Err(CliError::Usage("--width must be positive".into()));
            }
            let i = index(&g, &width);
            emit(IndexOut {
                n: g.order(),
                index_lo: i.lo().to_string(),
                index_hi: i.hi().to_string(),
                coefficients: coefficients(i.poly()),
            });
            Ok(true)
        }
        Command::Compare { a, b } => {
            let (a, b) = (parse_operand(&a)?, parse_operand(&b)?);
            print_line(&format!("{:?}", compare_indices(&a, &b)));
            Ok(true)
        }
        Command::Formula { name, n, k, s, t } => {
            let (formula, label) = match name {
                FormulaArg::Star => (FormulaName::Star, "star"),
                FormulaArg::Q1 => (FormulaName::Q1, "q1"),
                FormulaArg::Qst => (FormulaName::Qst, "qst"),
                FormulaArg::U1 => (FormulaName::U1, "u1"),
            };
            let p = evaluate_formula(formula, n, k, s, t)?;
            emit(FormulaOut {
                name: label,
                n,
                k,
                s,
                t,
                coefficients: coefficients(&p),
            });
            Ok(true)
        }
        Command::VerifyLemma { name, n_max } => {
            let report = verify_lemma(lemma(name), n_max)?;
            let passed = report.passed();
            emit(report);
            Ok(passed)
        }
        Command::SearchMax {
            n,
            k,
            class,
            cycles,
            cache,
        } => with_evaluator(cache.as_deref(), |eval| {
            let report = match class {
                ClassArg::Unicyclic => search_unicyclic(n, k, eval)?,
                ClassArg::Cactus => search_cacti(n, k, cycles, eval)?,
            };
            emit_document(report.to_document());
            Ok(true)
        }),
        Command::VerifyTheorem { n_min, n_max, cache } => with_evaluator(cache.as_deref(), |eval| {
            let report = verify_theorem_main(n_min..=n_max, eval)?;
            for row in report.ties() {
                log::warn!("U_1 ties with another maximizer at n = {}, k = {}", row.n, row.k);
            }
            let passed = report.passed();
            emit(report);
            Ok(passed)
        }),
        Command::VerifyCorollary {
            which,
            n_min,
            n_max,
            cache,
        } => with_evaluator(cache.as_deref(), |eval| {
            let report = match which {
                CorollaryArg::Star => verify_corollary_star(n_min.unwrap_or(4)..=n_max, eval)?,
                CorollaryArg::Qst => verify_corollary_qst(n_min.unwrap_or(7)..=n_max, eval)?,
            };
            let passed = report.passed();
            emit(report);
            Ok(passed)
        }),
        Command::CheckConjecture { n, k, cycles, cache } => with_evaluator(cache.as_deref(), |eval| {
            let report = check_conjecture_cactus(n, k, cycles, eval)?;
            emit_document(report.to_document());
            Ok(true)
        }),
        Command::CheckRotation { input, trials, seed } => {
            let g = input.resolve()?;
            let report = check_rotation_lemma(&g, trials, &mut ChaCha8Rng::seed_from_u64(seed))?;
            let passed = report.passed();
            emit(report);
            Ok(passed)
        }
        Command::CheckInterlacing { input, trials, seed } => {
            let g = input.resolve()?;
            let report = check_interlacing(&g, trials, &mut ChaCha8Rng::seed_from_u64(seed))?;
            let passed = report.passed();
            emit(report);
            Ok(passed)
        }
        Command::Quotient { partition } => {
            let doc: PartitionDocument = read_json(&partition)?;
            let (g, part) = doc.load()?;
            let b = quotient_matrix(&part, &g);
            let product = char_poly_via_quotient(&part, &g)?;
            let direct = char_poly(&g);
            let matches_direct = product == direct;
            emit(QuotientOut {
                n: g.order(),
                p: part.p(),
                q: part.q(),
                m1: part.m1(),
                m2: part.m2(),
                quotient: b
                    .entries()
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect(),
                quotient_charpoly: coefficients(&b.char_poly()?),
                coefficients: coefficients(&product),
                matches_direct,
            });
            Ok(matches_direct)
        }
    }
}
