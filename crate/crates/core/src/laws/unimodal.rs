//! Unimodality of the family polynomials (conjectured for all indices).

use crate::algebra::XPolynomial;
use crate::dist::{Family, FamilyTable};
use crate::render::coeff_list;
use crate::report::{Report, ReportRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unimodality {
    /// Exponent of the first largest coefficient.
    Unimodal {
        mode: usize,
    },
    NotUnimodal,
}

/// Coefficients from the lowest to the highest nonzero one must rise
/// weakly and then fall weakly.
pub fn unimodality(p: &XPolynomial) -> Unimodality {
    let (Some(low), Some(high)) = (p.lowest_degree(), p.degree()) else {
        return Unimodality::Unimodal { mode: 0 };
    };
    let run = &p.coeffs()[low..=high];
    let mut i = 0;
    while i + 1 < run.len() && run[i + 1] >= run[i] {
        i += 1;
    }
    let mut mode = i;
    while mode > 0 && run[mode - 1] == run[i] {
        mode -= 1;
    }
    let falling = run[i..].windows(2).all(|w| w[1] <= w[0]);
    if falling {
        Unimodality::Unimodal { mode: low + mode }
    } else {
        Unimodality::NotUnimodal
    }
}

/// Every family member from the smallest index through `max_index`.
/// A counterexample is a discrepancy, not a failure.
pub fn unimodality_check(table: &FamilyTable, max_index: usize) -> Report {
    let mut report = Report::new();
    for family in Family::ALL {
        for index in family.min_index()..=max_index {
            let Some(poly) = table.get(family, index) else { continue };
            let row = match unimodality(poly) {
                Unimodality::Unimodal { mode } => {
                    ReportRow::judged("unimodal", true, "unimodal", format!("mode x^{mode}"))
                }
                Unimodality::NotUnimodal => ReportRow::judged(
                    "unimodal",
                    false,
                    "unimodal",
                    format!("counterexample: {}", coeff_list(poly)),
                ),
            };
            report.push(row.family(family).n(index).informational());
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::recursion::recursion_table;

    fn xp(s: &str) -> XPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn modes() {
        assert_eq!(unimodality(&xp("x^4(105+420x+588x^2+272x^3)")), Unimodality::Unimodal { mode: 6 });
        assert_eq!(unimodality(&xp("x")), Unimodality::Unimodal { mode: 1 });
        assert_eq!(unimodality(&xp("1+x+x^2")), Unimodality::Unimodal { mode: 0 });
        assert_eq!(unimodality(&xp("1+3x+3x^2+x^3")), Unimodality::Unimodal { mode: 1 });
        assert_eq!(unimodality(&xp("2+x+2x^2")), Unimodality::NotUnimodal);
        assert_eq!(unimodality(&xp("1+x^2")), Unimodality::NotUnimodal);
    }

    #[test]
    fn families_are_unimodal_through_index_eight() {
        let report = unimodality_check(&recursion_table(8), 8);
        assert_eq!(report.rows.len(), 9 + 8 + 9 + 8);
        assert!(report.strictly_passed());
    }
}
