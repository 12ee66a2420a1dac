//! Lists up-down and down-up permutations and checks the counts against
//! the zigzag numbers.

use meshlab::algebra::zigzag_numbers;
use meshlab::{enumerate_alternating, AlternatingClass};

fn main() {
    for class in AlternatingClass::ALL {
        let perms: Vec<String> = enumerate_alternating(5, class).map(|p| p.to_string()).collect();
        println!("{} of length 5 ({}): {}", class.short_name().to_uppercase(), perms.len(), perms.join(" "));
    }

    let zigzag = zigzag_numbers(12);
    println!("\n n  |UD_n|  E_n");
    for n in 1..=12 {
        let count = enumerate_alternating(n, AlternatingClass::UpDown).count();
        println!("{n:>2}  {count:>7}  {}", zigzag[n]);
        assert_eq!(zigzag[n], count.into());
    }
}
