use num_rational::BigRational;
use num_traits::One;

use super::poly::XPolynomial;
use super::zigzag::zigzag_numbers;
use super::{binomial, integer};
use crate::error::{Error, Result};

/// Truncated exponential generating function `Σ_{n≤N} c_n(x) t^n/n!`.
///
/// Exactly `N + 1` coefficients are stored. Binary operations require equal
/// orders; mixing orders is an error rather than a silent truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<XPolynomial>,
}

impl EgfSeries {
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<XPolynomial>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the t^0 coefficient");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![XPolynomial::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, XPolynomial::one())
    }

    pub fn constant(order: usize, c: XPolynomial) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n/n!`. Panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &XPolynomial {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&XPolynomial> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[XPolynomial] {
        &self.coeffs
    }

    fn same_order(&self, other: &Self, op: &str) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::Usage(format!(
                "{op} of series with orders {} and {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other, "sum")?;
        Ok(Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other, "difference")?;
        Ok(Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect()))
    }

    /// Binomial convolution: `c_n = Σ_k binom(n,k) f_k g_{n-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other, "product")?;
        let coeffs = (0..=self.order())
            .map(|n| {
                let mut acc = XPolynomial::zero();
                for k in 0..=n {
                    let (f, g) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if !f.is_zero() && !g.is_zero() {
                        acc += &(f * g).scale_int(&binomial(n, k));
                    }
                }
                acc
            })
            .collect();
        Ok(Self::new(coeffs))
    }

    /// Multiplies every coefficient by a polynomial in `x`.
    pub fn scale(&self, p: &XPolynomial) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * p).collect())
    }

    /// `∂/∂t`: shifts coefficients left, dropping the order by one.
    pub fn differentiate(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::Usage("derivative of an order-0 series is undetermined".into()));
        }
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    /// `∫_0^t`: shifts coefficients right with `c_0 = 0`. The result is
    /// exact to order `N + 1`; use [`EgfSeries::truncate`] to cap it.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(XPolynomial::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::Usage(format!(
                "cannot extend a series of order {} to order {order}",
                self.order()
            )));
        }
        Ok(Self::new(self.coeffs[..=order].to_vec()))
    }

    /// Coefficients with `x` specialized to a value.
    pub fn at_x(&self, x: &BigRational) -> Vec<BigRational> {
        self.coeffs.iter().map(|c| c.eval(x)).collect()
    }
}

/// Solves `Y' = f·Y + g`, `Y(0) = y0` to order `order`, term by term:
/// `c_{n+1} = Σ_k binom(n,k) f_k c_{n-k} + g_n`.
pub fn solve_linear_ode(f: &EgfSeries, g: &EgfSeries, y0: &XPolynomial, order: usize) -> Result<EgfSeries> {
    let need = order.saturating_sub(1);
    if order > 0 && (f.order() < need || g.order() < need) {
        return Err(Error::Usage(format!(
            "ODE coefficients of orders {} and {} cannot determine order {order}",
            f.order(),
            g.order()
        )));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(y0.clone());
    for n in 0..order {
        let mut next = g.coeff(n).clone();
        for k in 0..=n {
            let fk = f.coeff(k);
            if !fk.is_zero() && !coeffs[n - k].is_zero() {
                next += &(fk * &coeffs[n - k]).scale_int(&binomial(n, k));
            }
        }
        coeffs.push(next);
    }
    Ok(EgfSeries::new(coeffs))
}

fn graded(
    order: usize,
    keep: impl Fn(usize) -> bool,
    sign: impl Fn(usize) -> i64,
    scaled: bool,
) -> EgfSeries {
    let zigzag = zigzag_numbers(order);
    let coeffs = (0..=order)
        .map(|n| {
            if !keep(n) {
                return XPolynomial::zero();
            }
            let c = integer(zigzag[n].clone()) * integer(sign(n));
            XPolynomial::monomial(c, if scaled { n } else { 0 })
        })
        .collect();
    EgfSeries::new(coeffs)
}

/// `tan(xt)`: coefficient `E_n x^n` at odd `n`.
pub fn tan_series(order: usize) -> EgfSeries {
    graded(order, |n| n % 2 == 1, |_| 1, true)
}

/// `sec(xt)`: coefficient `E_n x^n` at even `n`.
pub fn sec_series(order: usize) -> EgfSeries {
    graded(order, |n| n % 2 == 0, |_| 1, true)
}

/// `tan(t)`, with `x`-free coefficients.
pub fn tan_series_unscaled(order: usize) -> EgfSeries {
    graded(order, |n| n % 2 == 1, |_| 1, false)
}

/// `cos(xt)`: coefficient `(-1)^{n/2} x^n` at even `n`.
pub fn cos_series(order: usize) -> EgfSeries {
    let coeffs = (0..=order)
        .map(|n| {
            if n % 2 == 1 {
                XPolynomial::zero()
            } else {
                let sign = if n % 4 == 0 { BigRational::one() } else { -BigRational::one() };
                XPolynomial::monomial(sign, n)
            }
        })
        .collect();
    EgfSeries::new(coeffs)
}

/// `sec(xt)^α` as the solution of `Y' = (α·x)·tan(xt)·Y`, `Y(0) = 1`.
/// Takes the product `α·x` so it stays a polynomial for `α = ±1/x, 1+1/x`.
pub fn sec_power_series(alpha_times_x: &XPolynomial, order: usize) -> EgfSeries {
    let f = tan_series(order).scale(alpha_times_x);
    solve_linear_ode(&f, &EgfSeries::zero(order), &XPolynomial::one(), order)
        .expect("orders agree by construction")
}
