//! Exact characteristic polynomials, Sturm root isolation, exact index
//! comparison, and a floating-point eigensolver.

mod charpoly;
mod jacobi;
mod roots;
mod sturm;

pub use charpoly::{bareiss_determinant, char_poly, char_poly_of_matrix, interpolate_consecutive};
pub use jacobi::{numeric_spectrum, symmetric_eigen, FloatSpectrum, MAX_SWEEPS, OFF_DIAGONAL_TOLERANCE};
pub use roots::{
    compare_indices, compare_roots, eigenvalue_brackets, equality_threshold, index, index_of_poly,
    isolate_real_roots, IsolatedRoot, RootInterval,
};
pub use sturm::{sturm_root_count, SturmSequence};
