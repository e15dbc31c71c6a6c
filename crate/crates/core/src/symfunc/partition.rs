use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, trailing zeros dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts).unwrap()
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The partition `(k)`.
    pub fn row(k: u32) -> Self {
        Self::new(vec![k]).unwrap()
    }

    /// The partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    /// `rows` parts all equal to `cols`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    /// The hook `(m - k + 1, 1^{k-1})`, for `1 <= k <= m`.
    pub fn hook(m: u32, k: u32) -> Self {
        assert!(k >= 1 && k <= m);
        let mut v = vec![m - k + 1];
        v.extend(std::iter::repeat(1).take((k - 1) as usize));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The parts padded with zeros to length `m` (`m >= len`).
    pub fn padded(&self, m: usize) -> Vec<u32> {
        assert!(m >= self.len(), "partition longer than {m}");
        let mut v = self.0.clone();
        v.resize(m, 0);
        v
    }

    pub fn transpose(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Containment of Young diagrams, `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Subtracts `c` from each of the `m` padded parts; `None` if some part is below `c`.
    pub fn subtract_columns(&self, m: usize, c: u32) -> Option<Partition> {
        let p = self.padded(m);
        if p.iter().any(|&x| x < c) {
            return None;
        }
        Some(Partition::new(p.into_iter().map(|x| x - c).collect()).unwrap())
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        Self::bounded(n, usize::MAX, n)
    }

    /// Partitions of `n` with at most `max_len` parts, each at most `max_part`.
    pub fn bounded(n: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        fn rec(
            n: u32,
            max_len: usize,
            max_part: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if max_len == 0 {
                return;
            }
            for p in (1..=max_part.min(n)).rev() {
                cur.push(p);
                rec(n - p, max_len - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_len, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self` (including empty and `self`).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == outer.len() || cap == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            for p in 0..=outer[i].min(cap) {
                cur.push(p);
                if p == 0 {
                    out.push(Partition::new(cur.clone()).unwrap());
                } else {
                    rec(outer, i + 1, p, cur, out);
                }
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, u32::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Complement in the `rows x cols` rectangle, rotated by 180 degrees.
    pub fn rotated_complement(&self, rows: usize, cols: u32) -> Result<Partition> {
        if self.len() > rows || self.0.first().copied().unwrap_or(0) > cols {
            return Err(Error::InvalidPartition(format!(
                "{self} does not fit in {rows}x{cols}"
            )));
        }
        let p = self.padded(rows);
        Partition::new((0..rows).map(|i| cols - p[rows - 1 - i]).collect())
    }

    /// Dominance order `self >= other`; sizes must agree.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(
                self.size() as usize,
                other.size() as usize,
            ));
        }
        let len = self.len().max(other.len());
        let (a, b) = (self.padded(len), other.padded(len));
        let mut sa = 0;
        let mut sb = 0;
        for i in 0..len {
            sa += a[i];
            sb += b[i];
            if sa < sb {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Index<usize> for Partition {
    type Output = u32;
    /// Zero beyond the last part.
    fn index(&self, i: usize) -> &u32 {
        self.0.get(i).unwrap_or(&0)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Shorthand for building partitions in tests and fixtures.
pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(part(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[3, 1])[5], 0);
    }

    #[test]
    fn transpose_involution() {
        for n in 0..8 {
            for p in Partition::all_of(n) {
                assert_eq!(p.transpose().transpose(), p);
            }
        }
        assert_eq!(part(&[3, 1]).transpose(), part(&[2, 1, 1]));
    }

    #[test]
    fn counts_and_hooks() {
        assert_eq!(Partition::all_of(5).len(), 7);
        assert_eq!(Partition::all_of(6).len(), 11);
        assert_eq!(Partition::hook(4, 2), part(&[3, 1]));
        assert_eq!(Partition::hook(3, 3), part(&[1, 1, 1]));
        assert_eq!(part(&[2, 1]).subpartitions().len(), 5);
    }

    #[test]
    fn dominance() {
        assert!(part(&[2, 2]).dominates(&part(&[2, 2])).unwrap());
        assert!(part(&[3, 1]).dominates(&part(&[2, 2])).unwrap());
        assert!(!part(&[1, 1, 1, 1]).dominates(&part(&[2, 2])).unwrap());
        assert!(part(&[3]).dominates(&part(&[2, 2])).is_err());
    }

    #[test]
    fn rotated_complement() {
        assert_eq!(part(&[1]).rotated_complement(1, 2).unwrap(), part(&[1]));
        assert_eq!(
            part(&[2]).rotated_complement(1, 2).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            part(&[2, 1]).rotated_complement(2, 3).unwrap(),
            part(&[2, 1])
        );
        assert_eq!(
            Partition::empty().rotated_complement(2, 2).unwrap(),
            part(&[2, 2])
        );
    }

    #[test]
    fn json_form() {
        let p = part(&[3, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
