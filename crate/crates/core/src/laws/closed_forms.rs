//! Reference closed forms for `p_k, q_k, r_k, s_k` (`k <= 3`), kept as
//! literal fixtures and compared against the recursion values.

use super::levels::{LevelPolynomials, Sequence};
use crate::algebra::{integer, BigRational, NPolynomial};
use crate::report::{Report, ReportRow, Verdict};

#[derive(Clone, Copy, Debug)]
pub struct ClosedForm {
    pub sequence: Sequence,
    pub k: usize,
    /// The form as written, for reports.
    pub text: &'static str,
    pub numerator: &'static str,
    pub denominator: i64,
    /// Whether agreement with the recursion is expected.
    pub expected_pass: bool,
}

impl ClosedForm {
    pub fn polynomial(&self) -> NPolynomial {
        let num: NPolynomial = self.numerator.parse().expect("fixture parses");
        num.scale(&BigRational::new(1.into(), self.denominator.into()))
    }

    pub fn label(&self) -> String {
        format!("{}_{}", self.sequence, self.k)
    }
}

const fn form(
    sequence: Sequence,
    k: usize,
    text: &'static str,
    numerator: &'static str,
    denominator: i64,
    expected_pass: bool,
) -> ClosedForm {
    ClosedForm { sequence, k, text, numerator, denominator, expected_pass }
}

use Sequence::{P, Q, R, S};

pub const CLOSED_FORMS: [ClosedForm; 16] = [
    form(P, 0, "1", "1", 1, true),
    form(P, 1, "2/3 binom(n,2)", "n(n-1)", 3, true),
    form(P, 2, "n(2+7n-14n^2+5n^3)/90", "n(2+7n-14n^2+5n^3)", 90, true),
    form(
        P,
        3,
        "n(192-478n+213n^2+227n^3-198n^4+35n^5)/5670",
        "n(192-478n+213n^2+227n^3-198n^4+35n^5)",
        5670,
        true,
    ),
    form(Q, 0, "1", "1", 1, true),
    form(Q, 1, "(n^2-1)/3", "n^2-1", 3, true),
    form(Q, 2, "(n-2)(n-1)(5n^2+n-3)/90", "(n-2)(n-1)(5n^2+n-3)", 90, true),
    form(
        Q,
        3,
        "(35n^6-84n^5-193n^4+345n^3+140n^2-81n+198)/5670",
        "35n^6-84n^5-193n^4+345n^3+140n^2-81n+198",
        5670,
        false,
    ),
    form(R, 0, "1", "1", 1, true),
    form(R, 1, "(2n^2+2n-3)/6", "2n^2+2n-3", 6, true),
    form(R, 2, "(20n^4+24n^3-128n^2-12n+45)/360", "20n^4+24n^3-128n^2-12n+45", 360, false),
    form(
        R,
        3,
        "(280n^6+168n^5-4820n^4+3168n^3+8734n^2-6702n+2835)/45360",
        "280n^6+168n^5-4820n^4+3168n^3+8734n^2-6702n+2835",
        45360,
        false,
    ),
    form(S, 0, "1", "1", 1, true),
    form(S, 1, "n(n+2)/3", "n(n+2)", 3, true),
    form(S, 2, "n(5n^3+16n^2-68n+47)/90", "n(5n^3+16n^2-68n+47)", 90, true),
    form(
        S,
        3,
        "n(35n^5+126n^4-340n^3-417n^2+656n-60)/5760",
        "n(35n^5+126n^4-340n^3-417n^2+656n-60)",
        5760,
        false,
    ),
];

/// Evaluates every fixture for `n` in `k+1..=n_max` against the recursion.
/// One row per value plus one `closed-form-summary` row per fixture; all
/// verdicts are informational.
pub fn closed_form_check(polys: &LevelPolynomials, n_max: usize) -> Report {
    let mut report = Report::new();
    for cf in &CLOSED_FORMS {
        let poly = cf.polynomial();
        let set = if cf.expected_pass { "expected-pass" } else { "recorded" };
        let mut disagreements = Vec::new();
        let mut checked = 0;
        for n in cf.k + 1..=n_max {
            let Some(value) = polys.value(cf.sequence, cf.k, n) else { break };
            let closed = poly.eval(&integer(n as i64));
            if closed != value {
                disagreements.push(n);
            }
            checked += 1;
            report.push(
                ReportRow::compare("closed-form", closed, value)
                    .family(cf.sequence)
                    .k(cf.k)
                    .n(n)
                    .variant(set)
                    .informational(),
            );
        }
        let actual = match disagreements.first() {
            None => format!("agrees for n = {}..{}", cf.k + 1, cf.k + checked),
            Some(n) => format!("disagrees at {} of {checked} values, first n = {n}", disagreements.len()),
        };
        report.push(
            ReportRow::judged("closed-form-summary", disagreements.is_empty(), cf.text, actual)
                .family(cf.sequence)
                .k(cf.k)
                .variant(set)
                .informational(),
        );
    }
    report
}

/// Fixtures whose summary verdict is pass, keyed by label.
pub fn agreeing(report: &Report) -> Vec<String> {
    report
        .rows_for("closed-form-summary")
        .filter(|r| r.verdict == Verdict::Pass)
        .map(|r| format!("{}_{}", r.family.as_deref().unwrap_or("?"), r.k.unwrap_or(-1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::QRecursionVariant;

    #[test]
    fn fixtures_parse_with_expected_degrees() {
        for cf in &CLOSED_FORMS {
            assert_eq!(cf.polynomial().degree().unwrap_or(0), 2 * cf.k, "{}", cf.label());
        }
    }

    #[test]
    fn low_order_forms_agree() {
        let polys = LevelPolynomials::new(3, 12, QRecursionVariant::Statement);
        let report = closed_form_check(&polys, 12);
        let ok = agreeing(&report);
        for label in ["p_0", "p_1", "p_2", "q_0", "q_1", "r_0", "r_1", "s_0", "s_1"] {
            assert!(ok.contains(&label.to_string()), "{label}");
        }
        assert!(report.passed());
    }

    #[test]
    fn fixture_spot_values() {
        let p1 = CLOSED_FORMS[1].polynomial();
        assert_eq!(p1.eval_int(2), BigRational::new(2.into(), 3.into()));
        let r1 = CLOSED_FORMS[9].polynomial();
        assert_eq!(r1.eval_int(2), BigRational::new(3.into(), 2.into()));
    }
}
