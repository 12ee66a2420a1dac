//! Quadrant marked mesh patterns `MMP(a,b,c,d)`.
//!
//! For a point `(i, σ_i)` the quadrants are counted around that point:
//! I is right and above, II left and above, III left and below, IV right
//! and below.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Condition on the number of points in one quadrant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadrantRequirement {
    /// At least `k` points. `AtLeast(0)` imposes nothing.
    AtLeast(usize),
    /// No points at all (the `∅` entry).
    Empty,
}

impl QuadrantRequirement {
    pub fn admits(self, count: usize) -> bool {
        match self {
            Self::AtLeast(k) => count >= k,
            Self::Empty => count == 0,
        }
    }
}

impl fmt::Display for QuadrantRequirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AtLeast(k) => write!(f, "{k}"),
            Self::Empty => f.write_str("e"),
        }
    }
}

impl FromStr for QuadrantRequirement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "e" | "E" | "∅" | "empty" => Ok(Self::Empty),
            other => other
                .parse()
                .map(Self::AtLeast)
                .map_err(|_| Error::Parse(format!("bad quadrant entry {other:?}"))),
        }
    }
}

/// The four quadrant requirements of `MMP(a,b,c,d)`, quadrants I to IV.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadrantSpec {
    pub quadrants: [QuadrantRequirement; 4],
}

impl QuadrantSpec {
    pub const fn new(quadrants: [QuadrantRequirement; 4]) -> Self {
        Self { quadrants }
    }

    /// `MMP(a,b,c,d)` with every entry an "at least" bound.
    pub const fn at_least(a: usize, b: usize, c: usize, d: usize) -> Self {
        use QuadrantRequirement::AtLeast;
        Self::new([AtLeast(a), AtLeast(b), AtLeast(c), AtLeast(d)])
    }

    /// The unit pattern with a 1 in quadrant `q` (1..=4) and 0 elsewhere.
    pub fn unit(q: usize) -> Self {
        assert!((1..=4).contains(&q), "quadrant index {q} out of range");
        let mut entries = [0; 4];
        entries[q - 1] = 1;
        Self::at_least(entries[0], entries[1], entries[2], entries[3])
    }

    pub fn admits(&self, counts: QuadrantCounts) -> bool {
        self.quadrants.iter().zip(counts.as_array()).all(|(req, c)| req.admits(c))
    }

    /// Mesh-pattern notation, e.g. `MMP(1,0,∅,0)`.
    pub fn notation(&self) -> String {
        let parts: Vec<String> = self
            .quadrants
            .iter()
            .map(|q| match q {
                QuadrantRequirement::AtLeast(k) => k.to_string(),
                QuadrantRequirement::Empty => "∅".to_string(),
            })
            .collect();
        format!("MMP({})", parts.join(","))
    }
}

/// `a,b,c,d` with `e` for an empty quadrant.
impl fmt::Display for QuadrantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.quadrants;
        write!(f, "{a},{b},{c},{d}")
    }
}

impl FromStr for QuadrantSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s.strip_prefix("MMP(").and_then(|rest| rest.strip_suffix(')')).unwrap_or(s);
        let entries = inner.split(',').map(str::parse).collect::<Result<Vec<QuadrantRequirement>>>()?;
        let quadrants: [QuadrantRequirement; 4] = entries
            .try_into()
            .map_err(|_| Error::Parse(format!("pattern {s:?} needs exactly four entries")))?;
        Ok(Self::new(quadrants))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct QuadrantCounts {
    pub q1: usize,
    pub q2: usize,
    pub q3: usize,
    pub q4: usize,
}

impl QuadrantCounts {
    pub fn as_array(self) -> [usize; 4] {
        [self.q1, self.q2, self.q3, self.q4]
    }

    pub fn total(self) -> usize {
        self.q1 + self.q2 + self.q3 + self.q4
    }
}

/// Counts the points of the graph in each quadrant around `(i, σ_i)`.
pub fn quadrant_counts(p: &Permutation, position: usize) -> Result<QuadrantCounts> {
    p.check_position(position)?;
    let values = p.values();
    let i = position - 1;
    let pivot = values[i];
    let mut counts = QuadrantCounts::default();
    for (j, &v) in values.iter().enumerate() {
        match (j.cmp(&i), v > pivot) {
            (std::cmp::Ordering::Equal, _) => {}
            (std::cmp::Ordering::Greater, true) => counts.q1 += 1,
            (std::cmp::Ordering::Less, true) => counts.q2 += 1,
            (std::cmp::Ordering::Less, false) => counts.q3 += 1,
            (std::cmp::Ordering::Greater, false) => counts.q4 += 1,
        }
    }
    Ok(counts)
}

/// Whether `σ_i` matches `spec` in `p`.
pub fn matches(p: &Permutation, position: usize, spec: &QuadrantSpec) -> Result<bool> {
    Ok(spec.admits(quadrant_counts(p, position)?))
}

/// The statistic `mmp^{(a,b,c,d)}(σ)`: number of positions matching `spec`.
pub fn mmp_count(p: &Permutation, spec: &QuadrantSpec) -> usize {
    if p.len() < 64 {
        let small: Vec<u8> = p.values().iter().map(|&v| v as u8).collect();
        mmp_count_small(&small, spec)
    } else {
        (1..=p.len()).filter(|&i| matches(p, i, spec).expect("position in range")).count()
    }
}

/// Single right-to-left sweep with a bitmask of the values seen so far.
/// Values must be a permutation of `1..=n` with `n < 64`.
pub(crate) fn mmp_count_small(values: &[u8], spec: &QuadrantSpec) -> usize {
    let n = values.len();
    let mut right: u64 = 0;
    let mut total = 0;
    for &v in values.iter().rev() {
        let v = v as u32;
        let below_mask = (1u64 << v) - 2;
        let q4 = (right & below_mask).count_ones() as usize;
        let q1 = (right >> (v + 1)).count_ones() as usize;
        let above = n - v as usize;
        let counts = QuadrantCounts { q1, q2: above - q1, q3: (v as usize - 1) - q4, q4 };
        if spec.admits(counts) {
            total += 1;
        }
        right |= 1u64 << v;
    }
    total
}
