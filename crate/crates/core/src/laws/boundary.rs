//! Lowest and highest coefficients of the family polynomials, and the
//! position of the maximum at the lowest level.

use num_bigint::BigInt;

use super::levels::{level_base, level_scale};
use super::section_index;
use crate::algebra::zigzag_numbers;
use crate::alternating::{AlternatingClass, AlternatingPermutations};
use crate::dist::{Family, FamilyTable};
use crate::error::{Error, Result};
use crate::pattern::{mmp_count_small, QuadrantSpec};
use crate::report::ReportRow;

/// Zero below `x^{base}` and the double factorial at it.
pub fn lowest_coefficient_check(table: &FamilyTable, family: Family, n: usize) -> Result<ReportRow> {
    if n == 0 {
        return Err(Error::Domain("boundary laws start at n = 1".into()));
    }
    let poly = table.require(family, section_index(family, n))?;
    let expected = format!("x^{}: {}", level_base(family, n), level_scale(family, n));
    let actual = match poly.lowest_degree() {
        Some(low) => format!("x^{low}: {}", poly.coefficient(low)),
        None => "0".to_string(),
    };
    Ok(ReportRow::compare("lowest-coefficient", expected, actual).family(family).n(n))
}

/// Degree and leading coefficient, in terms of zigzag numbers `E_m`:
/// `A_{2n}`: `E_{2n-1} x^{2n-1}`; `B_{2n+1}`: `2n E_{2n-1} x^{2n-1}`;
/// `C_{2n}`: `(2n-1) E_{2n-2} x^{2n-2}`; `D_{2n+1}`: `E_{2n} x^{2n}`.
pub fn highest_coefficient_check(table: &FamilyTable, family: Family, n: usize) -> Result<ReportRow> {
    if n == 0 {
        return Err(Error::Domain("boundary laws start at n = 1".into()));
    }
    let e = zigzag_numbers(2 * n);
    let (degree, lead): (usize, BigInt) = match family {
        Family::A => (2 * n - 1, e[2 * n - 1].clone()),
        Family::B => (2 * n - 1, &e[2 * n - 1] * (2 * n)),
        Family::C => (2 * n - 2, &e[2 * n - 2] * (2 * n - 1)),
        Family::D => (2 * n, e[2 * n].clone()),
    };
    let poly = table.require(family, section_index(family, n))?;
    let actual = match poly.degree() {
        Some(d) => format!("x^{d}: {}", poly.leading_coefficient()),
        None => "0".to_string(),
    };
    Ok(ReportRow::compare("highest-coefficient", format!("x^{degree}: {lead}"), actual).family(family).n(n))
}

/// Every `σ ∈ UD_{2n}` with the minimum possible `n` quadrant-I matches
/// has `σ_2 = 2n`, and there are `(2n-1)!!` of them.
pub fn max_position_check(n: usize) -> ReportRow {
    let length = 2 * n;
    let spec = QuadrantSpec::unit(1);
    let mut at_floor = 0u64;
    let mut with_max_second = 0u64;
    let mut perms = AlternatingPermutations::new(length, AlternatingClass::UpDown, &[]);
    while let Some(values) = perms.next_slice() {
        if mmp_count_small(values, &spec) == n {
            at_floor += 1;
            if values[1] as usize == length {
                with_max_second += 1;
            }
        }
    }
    let expected = level_scale(Family::A, n);
    let ok = BigInt::from(at_floor) == expected && with_max_second == at_floor;
    ReportRow::judged(
        "max-position",
        ok,
        format!("{expected} with sigma_2 = {length}"),
        format!("{at_floor} with sigma_2 = {length} in {with_max_second}"),
    )
    .family(Family::A)
    .n(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::recursion::recursion_table;

    #[test]
    fn spot_boundaries() {
        let t = recursion_table(8);
        let row = lowest_coefficient_check(&t, Family::A, 4).unwrap();
        assert_eq!(row.actual, "x^4: 105");
        let row = lowest_coefficient_check(&t, Family::B, 3).unwrap();
        assert_eq!(row.actual, "x^3: 48");
        let row = lowest_coefficient_check(&t, Family::C, 1).unwrap();
        assert_eq!(row.actual, "x^0: 1");
        let row = highest_coefficient_check(&t, Family::A, 5).unwrap();
        assert_eq!(row.actual, "x^9: 7936");
        let row = highest_coefficient_check(&t, Family::B, 6).unwrap();
        assert_eq!(row.actual, "x^11: 4245504");
        let row = highest_coefficient_check(&t, Family::D, 1).unwrap();
        assert_eq!(row.actual, "x^2: 1");
        for family in Family::ALL {
            for n in 1..=7 {
                assert!(
                    lowest_coefficient_check(&t, family, n).unwrap().verdict == crate::report::Verdict::Pass
                );
                assert!(
                    highest_coefficient_check(&t, family, n).unwrap().verdict == crate::report::Verdict::Pass
                );
            }
        }
        assert!(lowest_coefficient_check(&t, Family::A, 0).is_err());
    }

    #[test]
    fn maximum_sits_second_at_the_floor() {
        for n in 1..=4 {
            assert_eq!(max_position_check(n).verdict, crate::report::Verdict::Pass);
        }
    }
}
