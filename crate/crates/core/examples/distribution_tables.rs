//! Prints the four family tables from the recursions, in the factored
//! notation and as LaTeX rows.
//!
//!     cargo run --example distribution_tables -- 7

use meshlab::dist::recursion::recursion_table;
use meshlab::render::{factored, latex};
use meshlab::Family;

fn main() {
    let max_index = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let table = recursion_table(max_index);
    for family in Family::ALL {
        println!("{family}:");
        for index in family.min_index()..=max_index {
            let p = table.get(family, index).expect("computed");
            println!("  {family}_{}(x) = {}", family.length(index), factored(p));
        }
    }
    println!();
    let a6 = table.get(Family::A, 3).expect("computed");
    println!("A_6 in LaTeX: {}", latex(a6));
}
