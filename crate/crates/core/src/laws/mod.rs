//! Coefficient laws for the quadrant-I distributions: boundary
//! coefficients, level-set counts and their polynomial families
//! `p_k, q_k, r_k, s_k`, reference closed forms, and unimodality.
//!
//! Indexing here follows the level-set statements: `A_{2n}`, `B_{2n+1}`,
//! `C_{2n}`, `D_{2n+1}`. See [`section_index`] for the map to table indices.

pub mod boundary;
pub mod closed_forms;
pub mod levels;
pub mod unimodal;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{BigRational, NPolynomial};
use crate::dist::Family;

pub use boundary::{highest_coefficient_check, lowest_coefficient_check, max_position_check};
pub use closed_forms::{closed_form_check, ClosedForm, CLOSED_FORMS};
pub use levels::{
    interpolate, level_base, level_law_check, level_scale, level_set, polynomiality_check, q_variant_check,
    seed_check, LevelPolynomials, LevelSetCount, QRecursionVariant, Sequence,
};
pub use unimodal::{unimodality, unimodality_check, Unimodality};

/// `m!!`, with `0!! = (-1)!! = 1`.
///
/// # Panics
/// If `m < -1`.
pub fn double_factorial(m: i64) -> BigInt {
    assert!(m >= -1, "double factorial of {m}");
    let mut acc = BigInt::one();
    let mut i = m;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

/// Values that admit `(x)↓_j = x(x-1)⋯(x-j+1)`.
pub trait FallingFactorial: Sized {
    fn falling(&self, j: usize) -> Self;
}

impl FallingFactorial for BigRational {
    fn falling(&self, j: usize) -> Self {
        (0..j).fold(BigRational::one(), |acc, i| acc * (self - BigRational::from_integer(i.into())))
    }
}

impl FallingFactorial for NPolynomial {
    fn falling(&self, j: usize) -> Self {
        let mut acc = NPolynomial::one();
        for i in 0..j {
            let factor = self - &NPolynomial::constant(BigRational::from_integer(i.into()));
            acc = &acc * &factor;
        }
        acc
    }
}

/// `(x)↓_j`; `(x)↓_0 = 1`.
pub fn falling_factorial<T: FallingFactorial>(x: &T, j: usize) -> T {
    x.falling(j)
}

/// Table index of the family member named `A_{2n}`, `B_{2n+1}`, `C_{2n}`
/// or `D_{2n+1}` in the level-set statements.
pub fn section_index(family: Family, n: usize) -> usize {
    if family.even() {
        n
    } else {
        n + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{integer, rational};

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(7), BigInt::from(105));
        assert_eq!(double_factorial(0), BigInt::one());
        assert_eq!(double_factorial(-1), BigInt::one());
        assert_eq!(double_factorial(8), BigInt::from(384));
    }

    #[test]
    fn falling_factorials_agree_across_kinds() {
        let n = NPolynomial::var();
        assert_eq!(falling_factorial(&n, 0), NPolynomial::one());
        assert_eq!(falling_factorial(&integer(5), 0), integer(1));
        assert_eq!(falling_factorial(&integer(5), 3), integer(60));
        assert_eq!(falling_factorial(&rational(1, 2), 2), rational(-1, 4));
        let sym = falling_factorial(&n, 4);
        for v in -3..9 {
            assert_eq!(sym.eval_int(v), falling_factorial(&integer(v), 4));
        }
    }

    #[test]
    fn section_indices() {
        assert_eq!(section_index(Family::A, 3), 3);
        assert_eq!(section_index(Family::B, 3), 4);
        assert_eq!(Family::B.length(section_index(Family::B, 3)), 7);
        assert_eq!(Family::D.length(section_index(Family::D, 2)), 5);
    }
}
