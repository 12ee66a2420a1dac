//! Up-down and down-up permutations: classification and exhaustive
//! generation.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlternatingClass {
    /// `σ_1 < σ_2 > σ_3 < ...`
    UpDown,
    /// `σ_1 > σ_2 < σ_3 > ...`
    DownUp,
}

impl AlternatingClass {
    pub const ALL: [AlternatingClass; 2] = [AlternatingClass::UpDown, AlternatingClass::DownUp];

    /// Whether the step into 0-based index `pos` (from `pos - 1`) must rise.
    fn ascent_into(self, pos: usize) -> bool {
        (pos % 2 == 1) == (self == AlternatingClass::UpDown)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Self::UpDown => "ud",
            Self::DownUp => "du",
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Self::UpDown => Self::DownUp,
            Self::DownUp => Self::UpDown,
        }
    }
}

impl std::str::FromStr for AlternatingClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ud" | "up-down" | "updown" => Ok(Self::UpDown),
            "du" | "down-up" | "downup" => Ok(Self::DownUp),
            other => Err(Error::Parse(format!("unknown class {other:?} (expected ud or du)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    UpDown,
    DownUp,
    Neither,
}

/// Tri-state classification. A length-1 permutation belongs to both classes
/// and is reported as `UpDown`; use [`is_alternating`] for membership.
pub fn classify(p: &Permutation) -> Result<Classification> {
    if p.is_empty() {
        return Err(Error::Domain("cannot classify the empty permutation".into()));
    }
    Ok(if is_alternating(p, AlternatingClass::UpDown) {
        Classification::UpDown
    } else if is_alternating(p, AlternatingClass::DownUp) {
        Classification::DownUp
    } else {
        Classification::Neither
    })
}

/// Membership in `UD_n` or `DU_n`. Length-1 permutations are in both.
pub fn is_alternating(p: &Permutation, class: AlternatingClass) -> bool {
    let v = p.values();
    !v.is_empty() && (1..v.len()).all(|pos| (v[pos] > v[pos - 1]) == class.ascent_into(pos))
}

/// All permutations of `class` and length `n` in lexicographic order.
/// Empty for `n == 0`.
pub fn enumerate_alternating(n: usize, class: AlternatingClass) -> AlternatingPermutations {
    AlternatingPermutations::new(n, class, &[])
}

/// Valid first entries (one for `n == 1`, two otherwise), in lexicographic
/// order. Enumerating each prefix separately partitions the class.
pub fn alternating_prefixes(n: usize, class: AlternatingClass) -> Vec<Vec<u8>> {
    match n {
        0 => Vec::new(),
        1 => vec![vec![1]],
        _ => {
            let mut out = Vec::new();
            for a in 1..=n as u8 {
                for b in 1..=n as u8 {
                    if a != b && (b > a) == class.ascent_into(1) {
                        out.push(vec![a, b]);
                    }
                }
            }
            out
        }
    }
}

/// Backtracking generator over `UD_n` / `DU_n`, optionally restricted to a
/// fixed prefix.
#[derive(Clone, Debug)]
pub struct AlternatingPermutations {
    n: usize,
    class: AlternatingClass,
    fixed: usize,
    current: Vec<u8>,
    used: u64,
    started: bool,
    exhausted: bool,
}

impl AlternatingPermutations {
    /// Panics if `n >= 64` or the prefix is not a valid alternating prefix.
    pub fn new(n: usize, class: AlternatingClass, prefix: &[u8]) -> Self {
        assert!(n < 64, "enumeration supports lengths below 64");
        assert!(prefix.len() <= n, "prefix longer than permutation");
        let mut used = 0u64;
        for (pos, &v) in prefix.iter().enumerate() {
            assert!(v >= 1 && (v as usize) <= n && used & (1 << v) == 0, "invalid prefix");
            if pos > 0 {
                assert_eq!(v > prefix[pos - 1], class.ascent_into(pos), "prefix breaks alternation");
            }
            used |= 1 << v;
        }
        Self {
            n,
            class,
            fixed: prefix.len(),
            current: prefix.to_vec(),
            used,
            started: false,
            exhausted: n == 0,
        }
    }

    fn pop(&mut self) -> u8 {
        let v = self.current.pop().expect("non-empty");
        self.used &= !(1 << v);
        v
    }

    /// Advances to the next permutation and returns it as a slice of values.
    pub fn next_slice(&mut self) -> Option<&[u8]> {
        if self.exhausted {
            return None;
        }
        let mut resume = None;
        if self.started {
            if self.current.len() == self.fixed {
                self.exhausted = true;
                return None;
            }
            resume = Some(self.pop());
        }
        self.started = true;
        if self.current.len() == self.n {
            return Some(&self.current);
        }
        loop {
            let pos = self.current.len();
            let start = resume.map_or(1, |v| v + 1);
            let candidate = (start..=self.n as u8).find(|&c| {
                self.used & (1 << c) == 0
                    && (pos == 0 || (c > self.current[pos - 1]) == self.class.ascent_into(pos))
            });
            match candidate {
                Some(c) => {
                    self.current.push(c);
                    self.used |= 1 << c;
                    resume = None;
                    if self.current.len() == self.n {
                        return Some(&self.current);
                    }
                }
                None => {
                    if pos == self.fixed {
                        self.exhausted = true;
                        return None;
                    }
                    resume = Some(self.pop());
                }
            }
        }
    }
}

impl Iterator for AlternatingPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.next_slice().map(|s| Permutation::from_values_unchecked(s.iter().map(|&v| v as usize).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{mmp_count, QuadrantSpec};
    use AlternatingClass::{DownUp, UpDown};

    fn strings(n: usize, class: AlternatingClass) -> Vec<String> {
        enumerate_alternating(n, class).map(|p| p.to_string()).collect()
    }

    /// Filters all `n!` permutations; independent of the backtracking walker.
    fn by_filtering(n: usize, class: AlternatingClass) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Permutation>) {
            if prefix.len() == n {
                out.push(Permutation::new(prefix.clone()).unwrap());
                return;
            }
            for v in 1..=n {
                if !prefix.contains(&v) {
                    prefix.push(v);
                    rec(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut all = Vec::new();
        rec(&mut Vec::new(), n, &mut all);
        all.into_iter().filter(|p| is_alternating(p, class)).collect()
    }

    #[test]
    fn small_classes() {
        assert_eq!(strings(2, UpDown), ["12"]);
        assert_eq!(strings(4, UpDown), ["1324", "1423", "2314", "2413", "3412"]);
        assert_eq!(strings(3, DownUp), ["213", "312"]);
        assert_eq!(strings(1, UpDown), ["1"]);
        assert_eq!(strings(1, DownUp), ["1"]);
        assert!(strings(0, UpDown).is_empty());
    }

    #[test]
    fn classification() {
        let c = |s: &str| classify(&s.parse().unwrap()).unwrap();
        assert_eq!(c("1423"), Classification::UpDown);
        assert_eq!(c("3142"), Classification::DownUp);
        assert_eq!(c("1234"), Classification::Neither);
        assert_eq!(c("1"), Classification::UpDown);
        assert!(is_alternating(&"1".parse().unwrap(), DownUp));
        assert!(classify(&Permutation::identity(0)).is_err());
    }

    #[test]
    fn walker_matches_filtering_in_lex_order() {
        for n in 1..=8 {
            for class in AlternatingClass::ALL {
                let walked: Vec<Permutation> = enumerate_alternating(n, class).collect();
                assert_eq!(walked, by_filtering(n, class), "n={n} {class:?}");
            }
        }
    }

    #[test]
    fn prefixes_partition_the_class() {
        for n in 1..=9 {
            for class in AlternatingClass::ALL {
                let joined: Vec<Permutation> = alternating_prefixes(n, class)
                    .iter()
                    .flat_map(|pre| AlternatingPermutations::new(n, class, pre))
                    .collect();
                let direct: Vec<Permutation> = enumerate_alternating(n, class).collect();
                assert_eq!(joined, direct);
            }
        }
    }

    #[test]
    fn classes_have_equal_size_and_complement_swaps_them() {
        for n in 1..=10 {
            let ud: Vec<Permutation> = enumerate_alternating(n, UpDown).collect();
            let du: Vec<Permutation> = enumerate_alternating(n, DownUp).collect();
            assert_eq!(ud.len(), du.len());
            let mut image: Vec<Permutation> = ud.iter().map(Permutation::complement).collect();
            image.sort();
            assert_eq!(image, du);
        }
    }

    #[test]
    fn reverse_swaps_classes_at_even_length() {
        for n in [2, 4, 6, 8, 10] {
            let mut image: Vec<Permutation> = enumerate_alternating(n, UpDown).map(|p| p.reverse()).collect();
            image.sort();
            assert_eq!(image, enumerate_alternating(n, DownUp).collect::<Vec<_>>());
        }
    }

    #[test]
    fn odd_positions_of_even_up_down_match_quadrant_one() {
        let spec = QuadrantSpec::unit(1);
        for n in [2, 4, 6, 8] {
            for sigma in enumerate_alternating(n, UpDown) {
                for i in (1..=n).step_by(2) {
                    assert!(crate::pattern::matches(&sigma, i, &spec).unwrap());
                }
                assert!(mmp_count(&sigma, &spec) >= n / 2);
            }
        }
    }
}
