//! Exact spectral toolkit for signed complete graphs `(K_n, H^-)`.
//!
//! The crate computes characteristic polynomials with integer arithmetic,
//! brackets and compares indices exactly with Sturm sequences, factors
//! characteristic polynomials through equitable sign partitions, and runs
//! exhaustive extremal searches over unicyclic and cactus negative subgraphs.

pub mod canonical;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod lemmas;
pub mod poly;
pub mod quotient;
pub mod search;
pub mod spectra;

pub use canonical::{canonical_form, CanonicalForm, MAX_CANONICAL_ORDER};
pub use error::{Error, Result};
pub use graph::{Edge, GraphDocument, Sign, SignedCompleteGraph, SimpleGraph, FORMAT_VERSION};
pub use poly::{parse_rational, IntPolynomial, PolynomialDocument};
pub use spectra::{char_poly, compare_indices, index, numeric_spectrum, FloatSpectrum, RootInterval};
pub use enumerate::{enumerate_cacti, enumerate_trees, enumerate_unicyclic, is_cactus};
pub use families::FamilySpec;
pub use formulas::{q1_charpoly, qst_charpoly, star_charpoly, u1_charpoly, FormulaName};
pub use lemmas::{verify_lemma, LemmaName, LemmaReport};
pub use quotient::{
    char_poly_via_quotient, quotient_matrix, validate_partition, PartitionDocument, QuotientMatrix, SignPartition,
};
pub use search::{
    check_conjecture_cactus, check_interlacing, check_rotation_lemma, find_maximizer, verify_corollary_qst,
    verify_corollary_star, verify_theorem_main, Evaluation, Evaluator, ExactEvaluator, ReportDocument, SearchClass,
    SearchReport, Verdict,
};
