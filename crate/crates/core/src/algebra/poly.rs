use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Names the indeterminate of a [`Polynomial`].
pub trait Variable: Copy + Default + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    const NAME: char;
}

/// The marker variable of the distribution polynomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct X;

/// The half-length variable of the level-set polynomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct N;

impl Variable for X {
    const NAME: char = 'x';
}

impl Variable for N {
    const NAME: char = 'n';
}

/// Dense univariate polynomial with rational coefficients, ascending powers.
/// Trailing zeros are always trimmed; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<V> {
    coeffs: Vec<BigRational>,
    var: PhantomData<V>,
}

pub type XPolynomial = Polynomial<X>;
pub type NPolynomial = Polynomial<N>;

impl<V: Variable> Polynomial<V> {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs, var: PhantomData }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `c · v^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient of `v^k`; zero beyond the degree.
    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_int(&self, at: i64) -> BigRational {
        self.eval(&BigRational::from_integer(at.into()))
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Renders a rational coefficient the way [`fmt::Display`] does.
    pub(crate) fn write_terms(coeffs: &[BigRational], f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if c.is_negative() {
                f.write_char('-')?;
            } else if !first {
                f.write_char('+')?;
            }
            first = false;
            let unit = magnitude.is_one();
            match (k, unit, magnitude.is_integer()) {
                (0, _, _) => write!(f, "{magnitude}")?,
                (_, true, _) => {}
                (_, false, true) => write!(f, "{magnitude}")?,
                (_, false, false) => write!(f, "({magnitude})")?,
            }
            match k {
                0 => {}
                1 => f.write_char(V::NAME)?,
                _ => write!(f, "{}^{k}", V::NAME)?,
            }
        }
        if first {
            f.write_char('0')?;
        }
        Ok(())
    }
}

impl<V: Variable> Default for Polynomial<V> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Expanded ascending form, e.g. `3x^2+2x^3`; parses back via `FromStr`.
impl<V: Variable> fmt::Display for Polynomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Self::write_terms(&self.coeffs, f)
    }
}

impl<V: Variable> fmt::Debug for Polynomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<V: Variable> Add for &Polynomial<V> {
    type Output = Polynomial<V>;

    fn add(self, rhs: Self) -> Polynomial<V> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<V: Variable> Add for Polynomial<V> {
    type Output = Polynomial<V>;

    fn add(self, rhs: Self) -> Polynomial<V> {
        &self + &rhs
    }
}

impl<V: Variable> AddAssign<&Polynomial<V>> for Polynomial<V> {
    fn add_assign(&mut self, rhs: &Polynomial<V>) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl<V: Variable> Neg for &Polynomial<V> {
    type Output = Polynomial<V>;

    fn neg(self) -> Polynomial<V> {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<V: Variable> Sub for &Polynomial<V> {
    type Output = Polynomial<V>;

    fn sub(self, rhs: Self) -> Polynomial<V> {
        self + &(-rhs)
    }
}

impl<V: Variable> Sub for Polynomial<V> {
    type Output = Polynomial<V>;

    fn sub(self, rhs: Self) -> Polynomial<V> {
        &self - &rhs
    }
}

impl<V: Variable> Mul for &Polynomial<V> {
    type Output = Polynomial<V>;

    fn mul(self, rhs: Self) -> Polynomial<V> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<V: Variable> Mul for Polynomial<V> {
    type Output = Polynomial<V>;

    fn mul(self, rhs: Self) -> Polynomial<V> {
        &self * &rhs
    }
}
