use num_rational::BigRational;
use std::cmp::Ordering;

use crate::poly::IntPolynomial;

/// Sturm chain of the square-free part of a polynomial, each remainder
/// reduced to its primitive part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmSequence {
    chain: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let base = p.square_free_part();
        let mut chain = vec![base.clone()];
        let d = base.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = chain[n - 2].sign_preserving_prem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(-r.primitive_part());
            }
        }
        SturmSequence { chain }
    }

    /// The square-free polynomial the chain starts from.
    pub fn base(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a < b, "empty interval");
        self.variations(a) - self.variations(b)
    }
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn sturm_root_count(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> usize {
    SturmSequence::new(p).count(a, b)
}
