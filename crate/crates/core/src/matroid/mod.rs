//! Matroids on ground sets of at most 16 elements, stored by bitmask bases.
//!
//! Elements are 0-indexed internally; the JSON form is 1-indexed.

pub mod catalog;
mod matrix;
mod polytope;
mod tutte;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symfunc::Partition;

pub use matrix::RationalMatrix;
pub use polytope::{polytope_vertices, subdivision_check, PolytopeCell};
pub use tutte::TuttePolynomial;

pub const MAX_GROUND: usize = 16;

/// Elements of a bitmask, ascending.
pub fn elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Bitmask of a list of elements.
pub fn mask_of(elems: &[usize]) -> u32 {
    elems.iter().fold(0, |m, &e| m | 1 << e)
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A matroid on `{0, …, n-1}`.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<u32>,
    rank_table: Vec<u8>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.n.hash(h);
        self.bases.hash(h);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bases: Vec<Vec<usize>> = self.bases.iter().map(|&b| elements(b)).collect();
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &bases)
            .finish()
    }
}

impl Matroid {
    /// Validates cardinalities and the basis-exchange axiom.
    pub fn from_bases(n: usize, rank: usize, bases: &[u32]) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::InvalidMatroid(format!(
                "ground set of size {n} exceeds {MAX_GROUND}"
            )));
        }
        if bases.is_empty() {
            return Err(Error::InvalidMatroid("empty basis collection".into()));
        }
        let set: BTreeSet<u32> = bases.iter().copied().collect();
        for &b in &set {
            if b & !full(n) != 0 {
                return Err(Error::InvalidMatroid(format!(
                    "basis {:?} outside the ground set",
                    elements(b)
                )));
            }
            if b.count_ones() as usize != rank {
                return Err(Error::InvalidMatroid(format!(
                    "mixed cardinality: basis {:?} has size {} but rank is {rank}",
                    elements(b),
                    b.count_ones()
                )));
            }
        }
        for &b1 in &set {
            for &b2 in &set {
                for x in elements(b1 & !b2) {
                    let ok = elements(b2 & !b1)
                        .into_iter()
                        .any(|y| set.contains(&(b1 & !(1 << x) | 1 << y)));
                    if !ok {
                        return Err(Error::ExchangeAxiom(elements(b1), elements(b2)));
                    }
                }
            }
        }
        Ok(Self::build(n, rank, set.into_iter().collect()))
    }

    /// Builds from 1-indexed basis lists, inferring the rank.
    pub fn from_basis_lists(n: usize, bases: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::new();
        for b in bases {
            if b.iter().any(|&e| e == 0 || e > n) {
                return Err(Error::InvalidMatroid(format!("basis {b:?} outside 1..{n}")));
            }
            masks.push(b.iter().fold(0u32, |m, &e| m | 1 << (e - 1)));
        }
        let rank = masks.first().map_or(0, |m| m.count_ones() as usize);
        Self::from_bases(n, rank, &masks)
    }

    /// Trusted constructor: `bases` must already be a valid, sorted basis family.
    fn build(n: usize, rank: usize, mut bases: Vec<u32>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        let size = 1usize << n;
        let mut indep = vec![false; size];
        for &b in &bases {
            indep[b as usize] = true;
        }
        for s in (0..size).rev() {
            if indep[s] {
                let mut rest = s;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    indep[s & !bit] = true;
                    rest &= rest - 1;
                }
            }
        }
        let mut rank_table = vec![0u8; size];
        for s in 1..size {
            rank_table[s] = if indep[s] {
                (s as u32).count_ones() as u8
            } else {
                let mut best = 0;
                let mut rest = s;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(rank_table[s & !bit]);
                    rest &= rest - 1;
                }
                best
            };
        }
        Matroid {
            n,
            rank,
            bases,
            rank_table,
        }
    }

    /// The column matroid of a rational matrix.
    pub fn from_matrix(v: &RationalMatrix) -> Result<Self> {
        let n = v.cols();
        if n > MAX_GROUND {
            return Err(Error::InvalidMatroid(format!(
                "{n} columns exceed {MAX_GROUND}"
            )));
        }
        let rank = v.rank();
        let mut bases = Vec::new();
        for s in 0..(1u32 << n) {
            if s.count_ones() as usize == rank && v.select_columns(&elements(s)).rank() == rank {
                bases.push(s);
            }
        }
        Ok(Self::build(n, rank, bases))
    }

    pub fn uniform(rank: usize, n: usize) -> Self {
        let bases = (0..(1u32 << n))
            .filter(|s| s.count_ones() as usize == rank)
            .collect();
        Self::build(n, rank, bases)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[u32] {
        &self.bases
    }

    pub fn ground(&self) -> u32 {
        full(self.n)
    }

    pub fn rank_of(&self, s: u32) -> usize {
        self.rank_table[(s & self.ground()) as usize] as usize
    }

    pub fn is_independent(&self, s: u32) -> bool {
        self.rank_of(s) == s.count_ones() as usize
    }

    pub fn is_basis(&self, s: u32) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.rank_of(1 << e) == 0).collect()
    }

    pub fn coloops(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&e| self.bases.iter().all(|b| b >> e & 1 == 1))
            .collect()
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    pub fn dual(&self) -> Self {
        let g = self.ground();
        Self::build(
            self.n,
            self.n - self.rank,
            self.bases.iter().map(|b| g & !b).collect(),
        )
    }

    /// `M|S`, relabeled onto `0..|S|` in increasing order.
    pub fn restrict(&self, s: u32) -> Self {
        let s = s & self.ground();
        let keep = elements(s);
        let rk = self.rank_of(s);
        let bases: BTreeSet<u32> = self
            .bases
            .iter()
            .map(|b| b & s)
            .filter(|b| b.count_ones() as usize == rk)
            .map(|b| compress(b, &keep))
            .collect();
        Self::build(keep.len(), rk, bases.into_iter().collect())
    }

    /// `M \ S`, relabeled.
    pub fn delete(&self, s: u32) -> Self {
        self.restrict(self.ground() & !s)
    }

    /// `M / S`, relabeled onto the complement of `S`.
    pub fn contract(&self, s: u32) -> Self {
        let s = s & self.ground();
        let rest = self.ground() & !s;
        let keep = elements(rest);
        let rs = self.rank_of(s);
        let bases: BTreeSet<u32> = self
            .bases
            .iter()
            .filter(|b| (*b & s).count_ones() as usize == rs)
            .map(|b| compress(b & rest, &keep))
            .collect();
        Self::build(keep.len(), self.rank - rs, bases.into_iter().collect())
    }

    /// Ground set of `other` placed after that of `self`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.n + other.n > MAX_GROUND {
            return Err(Error::InvalidMatroid(
                "direct sum exceeds the ground-set limit".into(),
            ));
        }
        let mut bases = Vec::new();
        for &a in &self.bases {
            for &b in &other.bases {
                bases.push(a | b << self.n);
            }
        }
        Ok(Self::build(self.n + other.n, self.rank + other.rank, bases))
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let bases = self
            .bases
            .iter()
            .map(|&b| elements(b).iter().fold(0u32, |m, &e| m | 1 << perm[e]))
            .collect();
        Self::build(self.n, self.rank, bases)
    }

    /// Connected components as bitmasks, ordered by smallest element.
    pub fn connected_components(&self) -> Vec<u32> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &b in &self.bases {
            for e in elements(b) {
                for f in elements(self.ground() & !b) {
                    if self.is_basis(b & !(1 << e) | 1 << f) {
                        let (x, y) = (find(&mut parent, e), find(&mut parent, f));
                        parent[x] = y;
                    }
                }
            }
        }
        let mut comps: Vec<u32> = Vec::new();
        let mut root_of = vec![usize::MAX; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            if root_of[r] == usize::MAX {
                root_of[r] = comps.len();
                comps.push(0);
            }
            comps[root_of[r]] |= 1 << e;
        }
        comps
    }

    /// Bases are the independent `k`-sets.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k > self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: k,
            });
        }
        let bases = (0..(1u32 << self.n))
            .filter(|&s| s.count_ones() as usize == k && self.is_independent(s))
            .collect();
        Ok(Self::build(self.n, k, bases))
    }

    /// The rank partition: `k`-th partial sum is `min_A |E \ A| + k·rk(A)`.
    pub fn rank_partition(&self) -> Partition {
        let mut parts = Vec::new();
        let mut prev = 0usize;
        for k in 1..=self.n.max(1) {
            let pk = (0..(1u32 << self.n))
                .map(|a| (self.n - a.count_ones() as usize) + k * self.rank_of(a))
                .min()
                .unwrap();
            let part = pk - prev;
            if part == 0 {
                break;
            }
            parts.push(part as u32);
            prev = pk;
        }
        Partition::new(parts).expect("union ranks are concave")
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> Vec<u32> {
        (1..(1u32 << self.n))
            .filter(|&s| {
                !self.is_independent(s)
                    && elements(s)
                        .iter()
                        .all(|&e| self.is_independent(s & !(1 << e)))
            })
            .collect()
    }

    /// Circuits minus their smallest element under `order` (a list of all
    /// elements from smallest to largest).
    pub fn broken_circuits(&self, order: &[usize]) -> Vec<u32> {
        let pos = order_positions(order, self.n);
        let mut out: Vec<u32> = self
            .circuits()
            .into_iter()
            .map(|c| {
                let min = elements(c).into_iter().min_by_key(|&e| pos[e]).unwrap();
                c & !(1 << min)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Sets containing no broken circuit.
    pub fn nbc_sets(&self, order: &[usize]) -> Vec<u32> {
        let bcs = self.broken_circuits(order);
        (0..(1u32 << self.n))
            .filter(|&s| bcs.iter().all(|&b| b & s != b))
            .collect()
    }

    /// Number of nbc bases of the rank-`k` truncation in the natural order.
    pub fn nbc_bases_of_truncation(&self, k: usize) -> Result<usize> {
        let order: Vec<usize> = (0..self.n).collect();
        self.nbc_bases_of_truncation_in(k, &order)
    }

    /// For `k = 0` the empty set counts once when `M` is loopless, although
    /// every element of the rank-zero truncation is a loop.
    pub fn nbc_bases_of_truncation_in(&self, k: usize, order: &[usize]) -> Result<usize> {
        if k == 0 {
            return Ok(usize::from(self.is_loopless()));
        }
        let t = self.truncate(k)?;
        Ok(t.nbc_sets(order)
            .into_iter()
            .filter(|s| s.count_ones() as usize == k)
            .count())
    }

    /// Classes of mutually parallel non-loop elements, ordered by smallest element.
    pub fn parallel_classes(&self) -> Vec<u32> {
        let mut classes: Vec<u32> = Vec::new();
        for e in 0..self.n {
            if self.rank_of(1 << e) == 0 {
                continue;
            }
            match classes.iter_mut().find(|c| self.rank_of(**c | 1 << e) == 1) {
                Some(c) => *c |= 1 << e,
                None => classes.push(1 << e),
            }
        }
        classes
    }

    /// Sizes of rank-one flats of a loopless rank-2 matroid, decreasing.
    pub fn parallelism_partition(&self) -> Result<Partition> {
        if self.rank != 2 {
            return Err(Error::RankMismatch {
                expected: 2,
                found: self.rank,
            });
        }
        if !self.is_loopless() {
            return Err(Error::LoopsPresent);
        }
        Ok(Partition::from_unsorted(
            self.parallel_classes()
                .iter()
                .map(|c| c.count_ones())
                .collect(),
        ))
    }

    /// The face of the base polytope cut out by a flag `S_1 ⊂ … ⊂ S_k`:
    /// bases meeting every `S_i` in a basis of it.  Stays on the same ground set.
    pub fn face_matroid(&self, flag: &[u32]) -> Result<Self> {
        for (i, &s) in flag.iter().enumerate() {
            if s & !self.ground() != 0 {
                return Err(Error::MalformedFlag(format!(
                    "{:?} leaves the ground set",
                    elements(s)
                )));
            }
            if i > 0 && (flag[i - 1] & !s != 0 || flag[i - 1] == s) {
                return Err(Error::MalformedFlag("flag is not strictly nested".into()));
            }
        }
        let ranks: Vec<usize> = flag.iter().map(|&s| self.rank_of(s)).collect();
        let bases: Vec<u32> = self
            .bases
            .iter()
            .copied()
            .filter(|b| {
                flag.iter()
                    .zip(&ranks)
                    .all(|(&s, &r)| (b & s).count_ones() as usize == r)
            })
            .collect();
        Ok(Self::build(self.n, self.rank, bases))
    }

    /// The matroid of `v_β`: element `i` repeated `β_i` times (dropped when 0).
    pub fn expand(&self, beta: &[u32]) -> Result<Self> {
        if beta.len() != self.n {
            return Err(Error::SizeMismatch(beta.len(), self.n));
        }
        let orig: Vec<usize> = beta
            .iter()
            .enumerate()
            .flat_map(|(i, &b)| std::iter::repeat(i).take(b as usize))
            .collect();
        let m = orig.len();
        if m > MAX_GROUND {
            return Err(Error::InvalidMatroid(
                "expanded ground set too large".into(),
            ));
        }
        let support = beta
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .fold(0u32, |s, (i, _)| s | 1 << i);
        let rk = self.rank_of(support);
        let mut bases = Vec::new();
        for s in 0..(1u32 << m) {
            if s.count_ones() as usize != rk {
                continue;
            }
            let image = elements(s).iter().fold(0u32, |acc, &e| acc | 1 << orig[e]);
            if image.count_ones() as usize == rk && self.is_independent(image) {
                bases.push(s);
            }
        }
        Ok(Self::build(m, rk, bases))
    }

    /// Lexicographically least relabeled basis list over all permutations.
    pub fn canonical_form(&self) -> (usize, usize, Vec<u32>) {
        let mut best: Option<Vec<u32>> = None;
        let mut perm: Vec<usize> = (0..self.n).collect();
        loop {
            let mut img: Vec<u32> = self
                .bases
                .iter()
                .map(|&b| elements(b).iter().fold(0u32, |m, &e| m | 1 << perm[e]))
                .collect();
            img.sort_unstable();
            if best.as_ref().map_or(true, |b| img < *b) {
                best = Some(img);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        (self.n, self.rank, best.unwrap_or_default())
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n == other.n
            && self.rank == other.rank
            && self.bases.len() == other.bases.len()
            && self.canonical_form() == other.canonical_form()
    }

    /// Corank–nullity expansion of the Tutte polynomial.
    pub fn tutte(&self) -> TuttePolynomial {
        tutte::deletion_contraction(self)
    }
}

/// Advances to the next permutation in lexicographic order.
pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn order_positions(order: &[usize], n: usize) -> Vec<usize> {
    assert_eq!(order.len(), n, "order must list every element");
    let mut pos = vec![0; n];
    for (k, &e) in order.iter().enumerate() {
        pos[e] = k;
    }
    pos
}

fn compress(mask: u32, keep: &[usize]) -> u32 {
    keep.iter()
        .enumerate()
        .filter(|(_, &e)| mask >> e & 1 == 1)
        .fold(0, |m, (k, _)| m | 1 << k)
}

/// Dominance `μ ≥ λ`; sizes must match.
pub fn dominance_geq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    mu.dominates(lambda)
}

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    n: usize,
    rank: usize,
    bases: Vec<Vec<usize>>,
}

impl Serialize for Matroid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatroidJson {
            n: self.n,
            rank: self.rank,
            bases: self
                .bases
                .iter()
                .map(|&b| elements(b).into_iter().map(|e| e + 1).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matroid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = MatroidJson::deserialize(d)?;
        let m = Matroid::from_basis_lists(j.n, &j.bases).map_err(D::Error::custom)?;
        if m.rank != j.rank {
            return Err(D::Error::custom(format!(
                "declared rank {} but bases have size {}",
                j.rank, m.rank
            )));
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::part;

    fn pairs_except(n: usize, skip: &[u32]) -> Matroid {
        let bases: Vec<u32> = (0..(1u32 << n))
            .filter(|s| s.count_ones() == 2 && !skip.contains(s))
            .collect();
        Matroid::from_bases(n, 2, &bases).unwrap()
    }

    #[test]
    fn from_matrix_examples() {
        let u24 = Matroid::from_matrix(&RationalMatrix::from_i64(&[
            vec![1, 0, 1, 1],
            vec![0, 1, 1, 2],
        ]))
        .unwrap();
        assert_eq!(u24, Matroid::uniform(2, 4));
        let par =
            Matroid::from_matrix(&RationalMatrix::from_i64(&[vec![1, 1], vec![0, 0]])).unwrap();
        assert_eq!(par.rank(), 1);
        assert_eq!(par.bases(), &[0b01, 0b10]);
        let zero = Matroid::from_matrix(&RationalMatrix::zeros(2, 3)).unwrap();
        assert_eq!((zero.rank(), zero.bases()), (0, &[0u32][..]));
    }

    #[test]
    fn from_bases_validation() {
        assert!(Matroid::from_bases(4, 2, &[0b0101, 0b0110, 0b1001, 0b1010, 0b1100]).is_ok());
        assert!(matches!(
            Matroid::from_bases(3, 2, &[0b011, 0b100]),
            Err(Error::InvalidMatroid(_))
        ));
        let lp = Matroid::from_bases(2, 1, &[0b01]).unwrap();
        assert_eq!(lp.loops(), vec![1]);
        assert!(matches!(
            Matroid::from_bases(4, 2, &[0b0011, 0b1100]),
            Err(Error::ExchangeAxiom(..))
        ));
    }

    #[test]
    fn minors_and_sums() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(u24.dual(), u24);
        let m12 = pairs_except(4, &[0b0011, 0b1100]);
        assert_eq!(m12.connected_components(), vec![0b0011, 0b1100]);
        assert_eq!(u24.truncate(1).unwrap(), Matroid::uniform(1, 4));
        assert!(u24.truncate(3).is_err());
        let u12 = Matroid::uniform(1, 2);
        assert_eq!(u12.direct_sum(&u12).unwrap(), m12);
        assert_eq!(u24.contract(0b0001), Matroid::uniform(1, 3));
        assert_eq!(u24.delete(0b0001), Matroid::uniform(2, 3));
    }

    #[test]
    fn rank_partitions() {
        assert_eq!(Matroid::uniform(2, 4).rank_partition(), part(&[2, 2]));
        assert_eq!(Matroid::uniform(1, 3).rank_partition(), part(&[1, 1, 1]));
        assert_eq!(Matroid::uniform(3, 3).rank_partition(), part(&[3]));
        assert_eq!(Matroid::uniform(2, 5).rank_partition(), part(&[2, 2, 1]));
    }

    #[test]
    fn nbc_examples() {
        let u24 = Matroid::uniform(2, 4);
        let natural: Vec<usize> = (0..4).collect();
        assert_eq!(u24.broken_circuits(&natural), vec![0b0110, 0b1010, 0b1100]);
        let nbc2: Vec<u32> = u24
            .nbc_sets(&natural)
            .into_iter()
            .filter(|s| s.count_ones() == 2)
            .collect();
        assert_eq!(nbc2, vec![0b0011, 0b0101, 0b1001]);
        assert_eq!(u24.nbc_bases_of_truncation(1).unwrap(), 1);
        assert_eq!(u24.nbc_bases_of_truncation(2).unwrap(), 3);
        assert_eq!(u24.nbc_bases_of_truncation(0).unwrap(), 1);
    }

    #[test]
    fn parallelism() {
        assert_eq!(
            Matroid::uniform(2, 4).parallelism_partition().unwrap(),
            part(&[1, 1, 1, 1])
        );
        assert_eq!(
            pairs_except(4, &[0b0011]).parallelism_partition().unwrap(),
            part(&[2, 1, 1])
        );
        assert_eq!(
            pairs_except(4, &[0b0011, 0b1100])
                .parallelism_partition()
                .unwrap(),
            part(&[2, 2])
        );
        assert!(Matroid::uniform(1, 3).parallelism_partition().is_err());
    }

    #[test]
    fn faces() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(u24.face_matroid(&[]).unwrap(), u24);
        assert_eq!(u24.face_matroid(&[0b0011]).unwrap().bases(), &[0b0011]);
        assert_eq!(u24.face_matroid(&[0b1111]).unwrap(), u24);
        assert!(u24.face_matroid(&[0b0011, 0b0001]).is_err());
    }

    #[test]
    fn expansion_by_multiplicities() {
        let u24 = Matroid::uniform(2, 4);
        let e = u24.expand(&[2, 1, 0, 1]).unwrap();
        assert_eq!(e.n(), 4);
        assert_eq!(e.parallelism_partition().unwrap(), part(&[2, 1, 1]));
    }

    #[test]
    fn json_form() {
        let js = serde_json::to_string(&Matroid::uniform(1, 2)).unwrap();
        assert_eq!(js, r#"{"n":2,"rank":1,"bases":[[1],[2]]}"#);
        let back: Matroid = serde_json::from_str(&js).unwrap();
        assert_eq!(back, Matroid::uniform(1, 2));
    }
}
