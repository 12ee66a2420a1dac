//! Level-set laws: the recursions for p_k, q_k, r_k, s_k, their
//! interpolating polynomials, and the reference closed forms.

use meshlab::dist::recursion::recursion_table;
use meshlab::laws::{
    closed_form_check, double_factorial, level_set, LevelPolynomials, QRecursionVariant, Sequence,
};
use meshlab::report::Verdict;
use meshlab::Family;

fn main() -> meshlab::Result<()> {
    let polys = LevelPolynomials::new(3, 12, QRecursionVariant::Statement);
    for seq in Sequence::ALL {
        for k in 0..=3 {
            let poly = polys.polynomial(seq, k).expect("in range");
            println!("{seq}_{k}(n) = {poly}");
        }
    }

    let table = recursion_table(6);
    let count = level_set(&table, Family::A, 3, 1)?;
    let predicted = polys.p(1, 3).expect("in range") * meshlab::algebra::integer(double_factorial(5));
    println!("\nA_6 at level n+1: {} = p_1(3)*5!! = {predicted}", count.count);

    println!("\nreference closed forms:");
    let report = closed_form_check(&polys, 12);
    for row in report.rows_for("closed-form-summary") {
        let mark = if row.verdict == Verdict::Pass { "ok " } else { "BAD" };
        println!("  {mark} {}_{}: {}", row.family.as_deref().unwrap_or(""), row.k.unwrap_or(0), row.actual);
    }
    Ok(())
}
