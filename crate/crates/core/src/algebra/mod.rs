//! Exact rational arithmetic: polynomials in a marker variable and
//! truncated exponential generating functions with polynomial coefficients.

mod egf;
mod parse;
mod poly;
mod zigzag;

pub use egf::{
    cos_series, sec_power_series, sec_series, solve_linear_ode, tan_series, tan_series_unscaled, EgfSeries,
};
pub use poly::{NPolynomial, Polynomial, Variable, XPolynomial, N, X};
pub use zigzag::{secant_number, tangent_number, zigzag_numbers};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::One;

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

pub fn integer(value: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(value.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        for n in 0..20 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), factorial(n) / (factorial(k) * factorial(n - k)));
            }
        }
    }
}
