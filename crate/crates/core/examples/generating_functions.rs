//! Expands the generating functions and checks the secant-power closed
//! forms against the differential equations.

use meshlab::algebra::rational;
use meshlab::dist::generating::{a_closed_form, c_closed_form, egf_family, sec_to_the_x, InnerExponent};
use meshlab::render::factored;
use meshlab::Family;

fn main() -> meshlab::Result<()> {
    const ORDER: usize = 8;
    for family in Family::ALL {
        let s = egf_family(family, ORDER);
        let terms: Vec<String> = (0..=ORDER).map(|m| factored(s.coeff(m))).collect();
        println!("{family}(t,x): {}", terms.join(", "));
    }

    println!("\nA(t,x) = sec(xt)^(1/x): {}", a_closed_form(ORDER) == egf_family(Family::A, ORDER));
    for inner in [InnerExponent::Negative, InnerExponent::Positive] {
        let same = c_closed_form(ORDER, inner)? == egf_family(Family::C, ORDER);
        println!("C(t,x) with {}: {same}", inner.label());
    }

    let s = sec_to_the_x(ORDER);
    println!("\n(sec t)^x: {}", (0..=ORDER).map(|m| factored(s.coeff(m))).collect::<Vec<_>>().join(", "));
    let at_one = s.at_x(&rational(1, 1));
    println!("at x = 1 (secant numbers): {:?}", at_one.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    Ok(())
}
