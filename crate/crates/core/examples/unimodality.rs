//! Unimodality of the family polynomials with the position of the mode.
//!
//!     cargo run --example unimodality -- 12

use meshlab::dist::recursion::recursion_table;
use meshlab::laws::{unimodality, Unimodality};
use meshlab::Family;

fn main() {
    let max_index = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let table = recursion_table(max_index);
    for family in Family::ALL {
        let modes: Vec<String> = (family.min_index()..=max_index)
            .map(|i| match unimodality(table.get(family, i).expect("computed")) {
                Unimodality::Unimodal { mode } => mode.to_string(),
                Unimodality::NotUnimodal => "NOT UNIMODAL".into(),
            })
            .collect();
        println!("{family}: modes {}", modes.join(" "));
    }
}
