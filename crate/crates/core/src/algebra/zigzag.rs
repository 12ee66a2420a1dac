use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `E_0, ..., E_N`, the number of up-down permutations of each length,
/// via the Seidel–Entringer boustrophedon triangle.
pub fn zigzag_numbers(order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for n in 1..=order {
        let mut next = Vec::with_capacity(n + 1);
        next.push(BigInt::zero());
        for k in 1..=n {
            let value = &next[k - 1] + &row[n - k];
            next.push(value);
        }
        out.push(next[n].clone());
        row = next;
    }
    out
}

/// `B_{2k-1}(1) = E_{2k-1}` for `k ≥ 1`.
pub fn tangent_number(k: usize) -> BigInt {
    assert!(k >= 1, "tangent numbers start at k = 1");
    zigzag_numbers(2 * k - 1).pop().expect("non-empty")
}

/// `A_{2k}(1) = E_{2k}`.
pub fn secant_number(k: usize) -> BigInt {
    zigzag_numbers(2 * k).pop().expect("non-empty")
}
