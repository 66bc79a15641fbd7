//! Certified brackets for real roots, the index of a signed complete graph,
//! and exact index comparison.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::charpoly::char_poly;
use super::sturm::SturmSequence;
use crate::graph::SignedCompleteGraph;
use crate::poly::IntPolynomial;

/// Refinement width below which [`compare_roots`] falls back to the gcd test.
pub fn equality_threshold() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 64)
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / two()
}

/// Bracket `(lo, hi]` around the largest real root of `poly`: exactly one
/// distinct root inside, none above `hi`.
#[derive(Debug, Clone)]
pub struct RootInterval {
    poly: IntPolynomial,
    sturm: Arc<SturmSequence>,
    lo: BigRational,
    hi: BigRational,
}

impl PartialEq for RootInterval {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.lo == other.lo && self.hi == other.hi
    }
}

impl Eq for RootInterval {}

impl RootInterval {
    /// Brackets the largest real root of `poly` starting from `(lo, hi]`,
    /// which must contain it with no root above `hi`. Returns `None` when
    /// `(lo, hi]` contains no root.
    pub fn largest_root_in(
        poly: &IntPolynomial,
        lo: BigRational,
        hi: BigRational,
        width: &BigRational,
    ) -> Option<Self> {
        let sturm = Arc::new(SturmSequence::new(poly));
        if sturm.count(&lo, &hi) == 0 {
            return None;
        }
        let mut r = RootInterval {
            poly: poly.clone(),
            sturm,
            lo,
            hi,
        };
        r.refine(width);
        Some(r)
    }

    /// Largest real root of `poly` using its Cauchy bound.
    pub fn largest_root(poly: &IntPolynomial, width: &BigRational) -> Option<Self> {
        let b = BigRational::from_integer(poly.root_bound());
        Self::largest_root_in(poly, -b.clone(), b, width)
    }

    /// Rebuilds a bracket from stored endpoints, verifying the Sturm
    /// conditions. `bound` must exceed every root.
    pub fn verified(
        poly: &IntPolynomial,
        lo: BigRational,
        hi: BigRational,
        bound: &BigRational,
    ) -> Option<Self> {
        if poly.is_zero() || lo >= hi || &hi >= bound {
            return None;
        }
        let sturm = Arc::new(SturmSequence::new(poly));
        if sturm.count(&lo, &hi) != 1 || sturm.count(&hi, bound) != 0 {
            return None;
        }
        Some(RootInterval {
            poly: poly.clone(),
            sturm,
            lo,
            hi,
        })
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        midpoint(&self.lo, &self.hi)
    }

    /// Bisects until the width is at most `width` and exactly one distinct
    /// root remains inside.
    pub fn refine(&mut self, width: &BigRational) {
        while &self.width() > width || self.sturm.count(&self.lo, &self.hi) > 1 {
            self.bisect();
        }
    }

    fn bisect(&mut self) {
        let mid = self.midpoint();
        if self.sturm.count(&mid, &self.hi) > 0 {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Whether the root is at least `x`.
    pub fn at_least(&self, x: &BigRational) -> bool {
        if x <= &self.lo {
            return true;
        }
        if x > &self.hi {
            return false;
        }
        // the root is the only one in (lo, hi]; it is >= x iff some root lies in [x, hi]
        self.poly.sign_at(x) == Ordering::Equal
            || (x < &self.hi && self.sturm.count(x, &self.hi) > 0)
    }

    /// Whether the root is at most `x`.
    pub fn at_most(&self, x: &BigRational) -> bool {
        if x >= &self.hi {
            return true;
        }
        if x <= &self.lo {
            return false;
        }
        self.sturm.count(&self.lo, x) > 0
    }
}

/// `λ₁(Γ)` bracketed to at most `width`. All eigenvalues of an order-`n`
/// signed graph lie in `(-n, n)`.
pub fn index(g: &SignedCompleteGraph, width: &BigRational) -> RootInterval {
    index_of_poly(&char_poly(g), g.order(), width)
}

/// Same as [`index`] for an already computed characteristic polynomial.
pub fn index_of_poly(poly: &IntPolynomial, n: usize, width: &BigRational) -> RootInterval {
    let bound = BigRational::from_integer(BigInt::from(n));
    RootInterval::largest_root_in(poly, -bound.clone(), bound, width)
        .expect("characteristic polynomial of a symmetric matrix has a real root")
}

/// Exact trichotomy on the largest roots of two brackets.
pub fn compare_roots(a: &RootInterval, b: &RootInterval) -> Ordering {
    if a.poly == b.poly {
        return Ordering::Equal;
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let threshold = equality_threshold();
    let mut common: Option<Option<Arc<SturmSequence>>> = None;
    loop {
        // roots lie in (lo, hi]
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if a.width() < threshold && b.width() < threshold {
            let gcd = common.get_or_insert_with(|| {
                let g = a.poly.gcd(&b.poly);
                (g.degree().unwrap_or(0) > 0).then(|| Arc::new(SturmSequence::new(&g)))
            });
            if let Some(g) = gcd {
                let lo = (&a.lo).max(&b.lo).clone();
                let hi = (&a.hi).min(&b.hi).clone();
                if g.count(&lo, &hi) > 0 {
                    return Ordering::Equal;
                }
            }
        }
        if a.width() >= b.width() {
            a.bisect();
        } else {
            b.bisect();
        }
    }
}

/// Exact comparison of `λ₁(Γ1)` and `λ₁(Γ2)`.
pub fn compare_indices(g1: &SignedCompleteGraph, g2: &SignedCompleteGraph) -> Ordering {
    let coarse = BigRational::new(BigInt::one(), BigInt::from(1 << 10));
    compare_roots(&index(g1, &coarse), &index(g2, &coarse))
}

/// One distinct real root with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

/// Brackets every distinct real root of `poly` in `(lo, hi]` with width at
/// most `width`, ascending, with multiplicities.
pub fn isolate_real_roots(poly: &IntPolynomial, width: &BigRational) -> Vec<IsolatedRoot> {
    if poly.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sturm = SturmSequence::new(poly);
    let b = BigRational::from_integer(poly.root_bound());
    let mut pending = vec![(-b.clone(), b)];
    let mut found = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 if &(&hi - &lo) <= width => found.push((lo, hi)),
            _ => {
                let mid = midpoint(&lo, &hi);
                pending.push((lo, mid.clone()));
                pending.push((mid, hi));
            }
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));

    // derivative chain gcds: a root has multiplicity > j iff it is a root of
    // the j-th iterated gcd(p, p')
    let mut gcds = Vec::new();
    let mut g = poly.clone();
    loop {
        g = g.gcd(&g.derivative());
        if g.degree().unwrap_or(0) == 0 {
            break;
        }
        gcds.push(SturmSequence::new(&g));
    }
    found
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = 1 + gcds.iter().take_while(|s| s.count(&lo, &hi) > 0).count();
            IsolatedRoot { lo, hi, multiplicity }
        })
        .collect()
}

/// All eigenvalues (with repetition) as brackets, in descending order.
pub fn eigenvalue_brackets(poly: &IntPolynomial, width: &BigRational) -> Vec<IsolatedRoot> {
    let mut out = Vec::new();
    for r in isolate_real_roots(poly, width).into_iter().rev() {
        for _ in 0..r.multiplicity {
            out.push(IsolatedRoot {
                multiplicity: 1,
                ..r.clone()
            });
        }
    }
    out
}
