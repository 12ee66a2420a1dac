//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Checks that `values` is a rearrangement of `1..=n`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::Domain(format!("value {v} is outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Domain(format!("value {v} repeated")));
            }
        }
        Ok(Self { values })
    }

    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self { values }
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `σ_i` for a 1-based position.
    pub fn at(&self, position: usize) -> Result<usize> {
        self.check_position(position)?;
        Ok(self.values[position - 1])
    }

    pub(crate) fn check_position(&self, position: usize) -> Result<()> {
        if position == 0 || position > self.len() {
            return Err(Error::Position { position, length: self.len() });
        }
        Ok(())
    }

    /// `σ_n σ_{n-1} ... σ_1`.
    pub fn reverse(&self) -> Self {
        Self { values: self.values.iter().rev().copied().collect() }
    }

    /// `(n+1-σ_1) ... (n+1-σ_n)`.
    pub fn complement(&self) -> Self {
        let n = self.len();
        Self { values: self.values.iter().map(|&v| n + 1 - v).collect() }
    }

    /// Standardizes a window of distinct values: the i-th smallest entry
    /// becomes `i`.
    pub fn reduce<T: Ord>(window: &[T]) -> Result<Self> {
        let mut order: Vec<usize> = (0..window.len()).collect();
        order.sort_by(|&a, &b| window[a].cmp(&window[b]));
        if order.windows(2).any(|w| window[w[0]] == window[w[1]]) {
            return Err(Error::Domain("reduce requires distinct entries".into()));
        }
        let mut values = vec![0; window.len()];
        for (rank, &idx) in order.iter().enumerate() {
            values[idx] = rank + 1;
        }
        Ok(Self { values })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Accepts either a digit string (`"471569283"`, lengths up to 9) or a
/// comma separated list.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{part:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("unexpected character {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reverse_and_complement() {
        assert_eq!(p("471569283").reverse(), p("382965174"));
        assert_eq!(p("12").complement(), p("21"));
        assert_eq!(p("1423").complement().complement(), p("1423"));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!("12a".parse::<Permutation>().is_err());
    }

    #[test]
    fn reduce_ranks_entries() {
        assert_eq!(Permutation::reduce(&[5, 9, 2]).unwrap(), p("231"));
        assert_eq!(Permutation::reduce(&[1, 2, 3]).unwrap(), p("123"));
        assert!(matches!(Permutation::reduce(&[4, 4]), Err(Error::Domain(_))));
    }

    #[test]
    fn long_permutations_use_commas() {
        let id = Permutation::identity(10);
        assert_eq!(id.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(id.to_string().parse::<Permutation>().unwrap(), id);
    }

    #[test]
    fn positions_are_one_based() {
        let s = p("471569283");
        assert_eq!(s.at(4).unwrap(), 5);
        assert!(matches!(s.at(0), Err(Error::Position { .. })));
        assert!(matches!(s.at(10), Err(Error::Position { .. })));
    }
}
