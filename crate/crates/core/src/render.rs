//! Text renderings of distribution polynomials: the tables' factored form,
//! LaTeX, and CSV coefficient lists.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{BigRational, Polynomial, Variable, XPolynomial};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Latex,
    #[default]
    Plain,
}

/// Splits `p = g·x^m·q` with `g` the positive content of an integer
/// polynomial and `m` the lowest exponent. `None` if some coefficient is
/// not an integer or `p` is zero.
fn factor_out(p: &XPolynomial) -> Option<(BigInt, usize, Vec<BigRational>)> {
    let ints = p.integer_coeffs()?;
    let low = p.lowest_degree()?;
    let mut g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if p.leading_coefficient().is_negative() {
        g = -g;
    }
    let rest = ints[low..].iter().map(|c| BigRational::from_integer(c / &g)).collect();
    Some((g, low, rest))
}

fn power(var: char, k: usize, latex: bool) -> String {
    match (k, latex) {
        (0, _) => String::new(),
        (1, _) => var.to_string(),
        (_, true) => format!("{var}^{{{k}}}"),
        (_, false) => format!("{var}^{k}"),
    }
}

/// The tables' notation: content and lowest power factored out, e.g.
/// `16x^3(3+8x+6x^2)`, `2x`, `1`.
pub fn factored(p: &XPolynomial) -> String {
    let Some((g, low, rest)) = factor_out(p) else {
        return p.to_string();
    };
    let mut prefix = String::new();
    if g == -BigInt::one() {
        prefix.push('-');
    } else if !g.is_one() || low == 0 {
        prefix.push_str(&g.to_string());
    }
    prefix.push_str(&power('x', low, false));
    if rest.len() == 1 {
        return prefix;
    }
    let mut inner = String::new();
    XPolynomial::write_terms(&rest, &mut inner).expect("string write");
    if prefix == "1" {
        prefix.clear();
    }
    format!("{prefix}({inner})")
}

/// Factored form in LaTeX math, e.g. `x^{2} \left(3+2 x\right)`.
pub fn latex(p: &XPolynomial) -> String {
    let Some((g, low, rest)) = factor_out(p) else {
        return p.to_string();
    };
    let mut prefix = String::new();
    if g == -BigInt::one() {
        prefix.push('-');
    } else if !g.is_one() || low == 0 {
        prefix.push_str(&g.to_string());
    }
    let xpow = power('x', low, true);
    if !xpow.is_empty() && !prefix.is_empty() && prefix != "-" {
        prefix.push(' ');
    }
    prefix.push_str(&xpow);
    if rest.len() == 1 {
        return prefix;
    }
    let terms: Vec<String> = rest
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let pw = power('x', k, true);
            match (k, c.abs().is_one()) {
                (0, _) => c.to_string(),
                (_, true) if c.is_negative() => format!("-{pw}"),
                (_, true) => pw,
                _ => format!("{c} {pw}"),
            }
        })
        .collect();
    let mut inner = terms[0].clone();
    for t in &terms[1..] {
        if !t.starts_with('-') {
            inner.push('+');
        }
        inner.push_str(t);
    }
    if prefix == "1" {
        prefix.clear();
    }
    if prefix.is_empty() {
        inner
    } else {
        format!("{prefix} \\left({inner}\\right)")
    }
}

/// Space-separated ascending coefficients, `"0 0 3 2"`; the zero
/// polynomial is `"0"`.
pub fn coeff_list<V: Variable>(p: &Polynomial<V>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_coeff_list<V: Variable>(text: &str) -> Result<Polynomial<V>> {
    let coeffs = text
        .split_whitespace()
        .map(|c| c.parse::<BigRational>().map_err(|e| Error::Parse(format!("coefficient {c:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_coeffs(coeffs))
}
