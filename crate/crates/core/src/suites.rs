//! Named verification suites. Each returns a [`Report`]; hard assertions
//! are `pass`/`FAIL` rows, adjudications and conjecture checks are
//! `discrepancy` when they disagree.

use num_bigint::BigInt;

use crate::algebra::{integer, secant_number, tangent_number, zigzag_numbers, BigRational, EgfSeries};
use crate::dist::brute::{brute_table, BruteOptions};
use crate::dist::generating::{
    a_closed_form, b_closed_form, c_closed_form, d_closed_form, egf_family, egf_table, sec_power_identity,
    InnerExponent,
};
use crate::dist::recursion::recursion_table;
use crate::dist::symmetry::symmetry_suite;
use crate::dist::tables::nontrivial_rows;
use crate::dist::Family;
use crate::error::Result;
use crate::laws::{
    closed_form_check, highest_coefficient_check, level_law_check, lowest_coefficient_check,
    max_position_check, polynomiality_check, q_variant_check, seed_check, unimodality_check,
    LevelPolynomials, QRecursionVariant,
};
use crate::report::{Report, ReportRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Tables,
    Symmetry,
    Oracle,
    Egf,
    CoeffLaws,
    ClosedForms,
    Unimodal,
    All,
}

/// Bounds shared by the suites. `None` means the suite's own default.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub max_length: Option<usize>,
    pub max_index: Option<usize>,
    pub brute: BruteOptions,
}

pub const DEFAULT_SYMMETRY_LENGTH: usize = 8;
pub const DEFAULT_ORACLE_LENGTH: usize = 10;
pub const DEFAULT_LAW_LENGTH: usize = 10;
pub const DEFAULT_UNIMODAL_INDEX: usize = 8;

pub fn run(suite: Suite, opts: &SuiteOptions) -> Result<Report> {
    match suite {
        Suite::Tables => Ok(tables()),
        Suite::Symmetry => symmetry_suite(opts.max_length.unwrap_or(DEFAULT_SYMMETRY_LENGTH), &opts.brute),
        Suite::Oracle => oracle(opts.max_length.unwrap_or(DEFAULT_ORACLE_LENGTH), &opts.brute),
        Suite::Egf => egf(&opts.brute),
        Suite::CoeffLaws => coeff_laws(opts.max_length.unwrap_or(DEFAULT_LAW_LENGTH), &opts.brute),
        Suite::ClosedForms => Ok(closed_forms()),
        Suite::Unimodal => Ok(unimodal(opts.max_index.unwrap_or(DEFAULT_UNIMODAL_INDEX))),
        Suite::All => {
            let mut report = Report::new();
            for s in [
                Suite::Tables,
                Suite::Symmetry,
                Suite::Oracle,
                Suite::Egf,
                Suite::CoeffLaws,
                Suite::ClosedForms,
                Suite::Unimodal,
            ] {
                report.extend(run(s, opts)?);
            }
            Ok(report)
        }
    }
}

/// The 26 reference rows against the recursion.
pub fn tables() -> Report {
    let computed = recursion_table(7);
    let mut report = Report::new();
    for (family, index, expected) in nontrivial_rows() {
        let actual = computed.get(family, index).cloned().unwrap_or_default();
        report.push(ReportRow::compare("table-row", expected, actual).family(family).n(index));
    }
    report
}

/// Brute force, recursion and series agree for every length up to `max_length`.
pub fn oracle(max_length: usize, opts: &BruteOptions) -> Result<Report> {
    let brute = brute_table(max_length, opts)?;
    let max_index = max_length / 2 + 1;
    let rec = recursion_table(max_index);
    let egf = egf_table(max_index);
    let mut report = Report::new();
    for length in 1..=max_length {
        for family in Family::ALL {
            let Some(index) = family.index_for_length(length) else { continue };
            let b = brute.require(family, index)?;
            let r = rec.require(family, index)?;
            let e = egf.require(family, index)?;
            let actual = if r == b && e == b { b.to_string() } else { format!("recursion {r}; egf {e}") };
            report.push(ReportRow::compare("oracle", b, actual).family(family).n(index));
        }
    }
    Ok(report)
}

fn compare_series(check: &str, expected: &EgfSeries, actual: &EgfSeries, family: Family) -> ReportRow {
    let mismatch = (0..=expected.order()).find(|&m| expected.coeff(m) != actual.coeff(m));
    let order = expected.order();
    match mismatch {
        None => ReportRow::judged(
            check,
            true,
            format!("agree through t^{order}"),
            format!("agree through t^{order}"),
        ),
        Some(m) => ReportRow::judged(check, false, expected.coeff(m), actual.coeff(m)).n(m),
    }
    .family(family)
}

/// Specializations at `x = 1`, parity, the `(sec t)^x` identity and the
/// closed forms of the generating functions.
pub fn egf(opts: &BruteOptions) -> Result<Report> {
    const ORDER: usize = 14;
    let one = integer(1);
    let mut report = Report::new();

    for (family, numbers) in [
        (Family::A, secant_number as fn(usize) -> BigInt),
        (Family::C, secant_number),
        (Family::B, tangent_number),
        (Family::D, tangent_number),
    ] {
        let values = egf_family(family, ORDER).at_x(&one);
        for index in family.min_index()..=6 {
            let actual = &values[family.length(index)];
            report.push(ReportRow::compare("at-x-1", numbers(index), actual).family(family).n(index));
        }
    }
    let zigzag = zigzag_numbers(ORDER);
    let a = egf_family(Family::A, ORDER).at_x(&one);
    let b = egf_family(Family::B, ORDER).at_x(&one);
    for m in 0..=ORDER {
        let sum: BigRational = &a[m] + &b[m];
        report.push(ReportRow::compare("zigzag", &zigzag[m], sum).n(m));
    }

    for family in Family::ALL {
        let series = egf_family(family, ORDER);
        let wrong =
            (0..=ORDER).filter(|m| (m % 2 == 0) != family.even()).find(|&m| !series.coeff(m).is_zero());
        let actual = wrong.map_or("zero".to_string(), |m| format!("nonzero at t^{m}"));
        report.push(ReportRow::compare("parity", "zero", actual).family(family));
    }

    report.extend(sec_power_identity(5, opts)?);

    report.push(compare_series(
        "closed-form-gf",
        &egf_family(Family::A, ORDER),
        &a_closed_form(ORDER),
        Family::A,
    ));
    report.push(compare_series(
        "closed-form-gf",
        &egf_family(Family::B, ORDER),
        &b_closed_form(ORDER)?,
        Family::B,
    ));
    report.push(compare_series(
        "closed-form-gf",
        &egf_family(Family::D, ORDER),
        &d_closed_form(ORDER),
        Family::D,
    ));
    report.extend(c_inner_exponent(ORDER)?);
    Ok(report)
}

/// Both signs of the inner exponent in the closed form of `C`, against the
/// differential-equation series. The final row names the sign that agrees.
pub fn c_inner_exponent(order: usize) -> Result<Report> {
    let reference = egf_family(Family::C, order);
    let mut report = Report::new();
    let mut confirmed = Vec::new();
    for inner in [InnerExponent::Negative, InnerExponent::Positive] {
        let row = compare_series("c-inner-exponent", &reference, &c_closed_form(order, inner)?, Family::C)
            .variant(inner.label())
            .informational();
        if row.verdict == crate::report::Verdict::Pass {
            confirmed.push(inner.label());
        }
        report.push(row);
    }
    let actual = if confirmed.is_empty() { "none".to_string() } else { confirmed.join(", ") };
    report.push(
        ReportRow::compare("c-inner-exponent-adjudication", InnerExponent::Negative.label(), actual)
            .family(Family::C),
    );
    Ok(report)
}

/// Boundary coefficients, level-set laws, seeds, the `q_k` recursion
/// reading, polynomiality, and the position of the maximum.
pub fn coeff_laws(brute_length: usize, opts: &BruteOptions) -> Result<Report> {
    const BOUNDARY_N: usize = 10;
    const RECURSION_INDEX: usize = 15;
    let rec = recursion_table(RECURSION_INDEX);
    let mut report = Report::new();
    for family in Family::ALL {
        for n in 1..=BOUNDARY_N {
            report.push(lowest_coefficient_check(&rec, family, n)?);
            report.push(highest_coefficient_check(&rec, family, n)?);
        }
    }

    let polys = LevelPolynomials::new(5, RECURSION_INDEX, QRecursionVariant::Statement);
    let brute = brute_table(brute_length, opts)?;
    for table in [&brute, &rec] {
        for family in Family::ALL {
            for k in 0..=3 {
                report.extend(level_law_check(table, family, k, RECURSION_INDEX, &polys)?);
            }
        }
    }
    report.extend(seed_check(&rec, 5, &polys)?);
    report.extend(q_variant_check(&rec, 3, 12)?);
    report.extend(polynomiality_check(&polys, 3));
    for n in 1..=5 {
        report.push(max_position_check(n));
    }
    Ok(report)
}

pub fn closed_forms() -> Report {
    let polys = LevelPolynomials::new(3, 12, QRecursionVariant::Statement);
    closed_form_check(&polys, 12)
}

pub fn unimodal(max_index: usize) -> Report {
    unimodality_check(&recursion_table(max_index), max_index)
}
