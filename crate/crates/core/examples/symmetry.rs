//! The reverse and complement maps carry the quadrant-I statistic to the
//! other quadrants; this prints each chain's distributions.

use meshlab::dist::brute::{distribution, BruteOptions};
use meshlab::dist::symmetry::CHAINS;
use meshlab::QuadrantSpec;

fn main() -> meshlab::Result<()> {
    let opts = BruteOptions::default();
    for length in [5, 6] {
        for chain in CHAINS.iter().filter(|c| c.family.even() == (length % 2 == 0)) {
            println!("{} at length {length}:", chain.label);
            for (class, q) in chain.members {
                let spec = QuadrantSpec::unit(q);
                let p = distribution(length, class, &spec, &opts)?.polynomial();
                println!("  {} {:<14} {p}", class.short_name().to_uppercase(), spec.notation());
            }
        }
    }
    Ok(())
}
