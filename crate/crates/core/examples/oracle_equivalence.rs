//! Brute force, recursion and generating functions side by side.
//!
//!     cargo run --release --example oracle_equivalence -- 11

use std::time::Instant;

use meshlab::dist::brute::{brute_table, BruteOptions};
use meshlab::dist::generating::egf_table;
use meshlab::dist::recursion::recursion_table;
use meshlab::Family;

fn main() -> meshlab::Result<()> {
    let max_length: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let start = Instant::now();
    let brute = brute_table(max_length, &BruteOptions::default())?;
    let enumerated = start.elapsed();
    let rec = recursion_table(max_length / 2 + 1);
    let egf = egf_table(max_length / 2 + 1);

    for length in 1..=max_length {
        for family in Family::ALL {
            let Some(index) = family.index_for_length(length) else { continue };
            let b = brute.require(family, index)?;
            let same = b == rec.require(family, index)? && b == egf.require(family, index)?;
            println!("{family}_{length:<2} {}  {b}", if same { "agree" } else { "DIFFER" });
        }
    }
    println!("enumeration took {enumerated:.2?}");
    Ok(())
}
