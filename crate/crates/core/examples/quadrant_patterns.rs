//! Quadrant counts and mesh-pattern matches around each point of a
//! permutation.
//!
//!     cargo run --example quadrant_patterns -- 471569283 "1,0,e,0"

use meshlab::pattern::{matches, mmp_count, quadrant_counts};
use meshlab::{Permutation, QuadrantSpec};

fn main() -> meshlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let perm: Permutation = args.next().as_deref().unwrap_or("471569283").parse()?;
    let spec: QuadrantSpec = args.next().as_deref().unwrap_or("1,0,e,0").parse()?;

    println!("{perm}, pattern {}", spec.notation());
    println!("pos  value  I  II  III  IV  match");
    for pos in 1..=perm.len() {
        let c = quadrant_counts(&perm, pos)?;
        let hit = if matches(&perm, pos, &spec)? { "*" } else { "" };
        println!("{pos:>3}  {:>5}  {:>1}  {:>2}  {:>3}  {:>2}  {hit}", perm.at(pos)?, c.q1, c.q2, c.q3, c.q4);
    }
    println!("mmp = {}", mmp_count(&perm, &spec));
    Ok(())
}
