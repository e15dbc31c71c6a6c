//! Expansions `Σ c_{λ,a} s_λ(u) t^a` in the Schur basis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::schur::{lr_product, ssyt_weights};
use crate::error::{Error, Result};
use crate::exactpoly::{LaurentPoly, Ring};

/// A finite Schur-basis expansion with polynomial coefficients in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurExpansion {
    r: usize,
    n: usize,
    terms: BTreeMap<(Partition, Vec<i32>), BigInt>,
}

impl SchurExpansion {
    pub fn zero(r: usize, n: usize) -> Self {
        SchurExpansion {
            r,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize, n: usize) -> Self {
        let mut e = Self::zero(r, n);
        e.add_term(Partition::empty(), vec![0; n], BigInt::one());
        e
    }

    /// A single term `c · s_λ(u) t^a`.
    pub fn term(r: usize, n: usize, lambda: Partition, t: Vec<i32>, c: BigInt) -> Self {
        let mut e = Self::zero(r, n);
        e.add_term(lambda, t, c);
        e
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Vec<i32>, &BigInt)> {
        self.terms.iter().map(|((l, a), c)| (l, a, c))
    }

    pub fn coeff(&self, lambda: &Partition, t: &[i32]) -> BigInt {
        self.terms
            .get(&(lambda.clone(), t.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Adds `c · s_λ t^a`; partitions longer than `r` vanish and are dropped.
    pub fn add_term(&mut self, lambda: Partition, t: Vec<i32>, c: BigInt) {
        assert_eq!(t.len(), self.n, "t-exponent width");
        if c.is_zero() || lambda.len() > self.r {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((lambda, t)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.n != other.n {
            return Err(Error::ArityMismatch(
                format!("(r={}, n={})", self.r, self.n),
                format!("(r={}, n={})", other.r, other.n),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for ((l, a), c) in &other.terms {
            out.add_term(l.clone(), a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for ((l, a), c) in &other.terms {
            out.add_term(l.clone(), a.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for ((l, a), x) in &self.terms {
            out.add_term(l.clone(), a.clone(), x * c);
        }
        out
    }

    /// Multiplies by `t^shift`.
    pub fn shift_t(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.n);
        let mut out = Self::zero(self.r, self.n);
        for ((l, a), c) in &self.terms {
            let b = a.iter().zip(shift).map(|(x, y)| x + y).collect();
            out.add_term(l.clone(), b, c.clone());
        }
        out
    }

    /// Moves `t_j` to `t_{map[j]}` (0-indexed) in a ring with `new_n` t-variables.
    pub fn relabel_t(&self, new_n: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.n);
        let mut out = Self::zero(self.r, new_n);
        for ((l, a), c) in &self.terms {
            let mut b = vec![0; new_n];
            for (j, &to) in map.iter().enumerate() {
                b[to] += a[j];
            }
            out.add_term(l.clone(), b, c.clone());
        }
        out
    }

    /// Appends `extra` unused t-variables.
    pub fn extend_t(&self, extra: usize) -> Self {
        let map: Vec<usize> = (0..self.n).collect();
        self.relabel_t(self.n + extra, &map)
    }

    /// The same terms viewed with `r` u-variables, dropping partitions that no longer fit.
    pub fn with_r(&self, r: usize) -> Self {
        let mut out = Self::zero(r, self.n);
        for ((l, a), c) in &self.terms {
            out.add_term(l.clone(), a.clone(), c.clone());
        }
        out
    }

    /// Terms with `t^a` for which `keep(a)` holds.
    pub fn filter_t<F: Fn(&[i32]) -> bool>(&self, keep: F) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for ((l, a), c) in &self.terms {
            if keep(a) {
                out.add_term(l.clone(), a.clone(), c.clone());
            }
        }
        out
    }

    /// The coefficient of `t^a` as a t-free expansion.
    pub fn t_coefficient(&self, a: &[i32]) -> Self {
        let mut out = Self::zero(self.r, 0);
        for ((l, b), c) in &self.terms {
            if b.as_slice() == a {
                out.add_term(l.clone(), Vec::new(), c.clone());
            }
        }
        out
    }

    /// Coefficients of a t-free expansion, keyed by partition.
    pub fn t_free_coefficients(&self) -> BTreeMap<Partition, BigInt> {
        let mut out = BTreeMap::new();
        for ((l, a), c) in &self.terms {
            if a.iter().all(|&x| x == 0) {
                out.insert(l.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_squarefree_in_t(&self) -> bool {
        self.terms
            .keys()
            .all(|(_, a)| a.iter().all(|&x| x == 0 || x == 1))
    }

    /// Monomial form in the ring `(r, n)`.
    pub fn to_poly(&self) -> LaurentPoly {
        let ring = Ring::new(self.r, self.n);
        let mut p = LaurentPoly::zero(ring);
        for ((l, a), c) in &self.terms {
            for (w, k) in ssyt_weights(l, self.r).iter() {
                let mut e: Vec<i32> = w.iter().map(|&x| x as i32).collect();
                e.extend_from_slice(a);
                e.push(0);
                p.add_term(e, c * BigInt::from(*k));
            }
        }
        p
    }

    /// Value at `u = (1,…,1)` for a t-free expansion (the dimension of a character).
    pub fn dimension(&self) -> BigInt {
        self.terms
            .iter()
            .map(|((l, _), c)| c * super::schur::schur_at_ones(l, self.r))
            .sum()
    }

    /// Each `s_λ ↦ s_{λ'}`; `r` grows to fit the longest transposed partition.
    pub fn omega_transpose(&self) -> Self {
        let r = self
            .terms
            .keys()
            .map(|(l, _)| l.transpose().len())
            .max()
            .unwrap_or(0)
            .max(self.r);
        let mut out = Self::zero(r, self.n);
        for ((l, a), c) in &self.terms {
            out.add_term(l.transpose(), a.clone(), c.clone());
        }
        out
    }

    /// Product in the Schur basis; partitions longer than `r` are dropped.
    pub fn schur_product(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.r, self.n);
        for ((l1, a1), c1) in &self.terms {
            for ((l2, a2), c2) in &other.terms {
                let a: Vec<i32> = a1.iter().zip(a2).map(|(x, y)| x + y).collect();
                let c = c1 * c2;
                for (nu, k) in lr_product(l1, l2, self.r).iter() {
                    out.add_term(nu.clone(), a.clone(), &c * BigInt::from(*k));
                }
            }
        }
        Ok(out)
    }
}

/// Expands a polynomial symmetric in `u_1..u_r` as `Σ c_{λ,a} s_λ(u) t^a`.
pub fn schur_expand(f: &LaurentPoly) -> Result<SchurExpansion> {
    let ring = f.ring();
    let (r, n) = (ring.r, ring.n);
    if !f.is_symmetric_in_u() {
        return Err(Error::NotSymmetric);
    }
    let mut groups: BTreeMap<Vec<i32>, BTreeMap<Vec<i32>, BigInt>> = BTreeMap::new();
    for (e, c) in f.terms() {
        if e[ring.q_slot()] != 0 {
            return Err(Error::Hypothesis(
                "q-dependent polynomial has no Schur expansion".into(),
            ));
        }
        if e[..r].iter().any(|&x| x < 0) {
            return Err(Error::NegativeExponent);
        }
        groups
            .entry(e[r..r + n].to_vec())
            .or_default()
            .insert(e[..r].to_vec(), c.clone());
    }
    let mut out = SchurExpansion::zero(r, n);
    for (a, mut rest) in groups {
        while let Some((lead, c)) = rest.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if lead.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NotSymmetric);
            }
            let lambda = Partition::new(lead.iter().map(|&x| x as u32).collect())?;
            for (w, k) in ssyt_weights(&lambda, r).iter() {
                let key: Vec<i32> = w.iter().map(|&x| x as i32).collect();
                let entry = rest.entry(key.clone()).or_insert_with(BigInt::zero);
                *entry -= &c * BigInt::from(*k);
                if entry.is_zero() {
                    rest.remove(&key);
                }
            }
            out.add_term(lambda, a.clone(), c);
        }
    }
    Ok(out)
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((l, a), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{} * s{}", c, l)?;
            for (j, &k) in a.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, " t{}", j + 1)?,
                    _ => write!(f, " t{}^{}", j + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

/// One serialized term `{"lambda":[...],"t":[...],"coeff":"..."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTerm {
    pub lambda: Partition,
    pub t: Vec<i32>,
    pub coeff: String,
}

/// Serialized expansion: ambient arity plus the term list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurExpansionJson {
    pub r: usize,
    pub n: usize,
    pub terms: Vec<SchurTerm>,
}

impl SchurExpansion {
    pub fn to_json_terms(&self) -> Vec<SchurTerm> {
        self.terms
            .iter()
            .map(|((l, a), c)| SchurTerm {
                lambda: l.clone(),
                t: a.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(r: usize, n: usize, terms: &[SchurTerm]) -> Result<Self> {
        let mut out = Self::zero(r, n);
        for t in terms {
            if t.t.len() != n {
                return Err(Error::Parse(format!(
                    "t-exponent of length {} in a ring with n={n}",
                    t.t.len()
                )));
            }
            if t.lambda.len() > r {
                return Err(Error::Parse(format!(
                    "partition {} longer than r={r}",
                    t.lambda
                )));
            }
            let c = BigInt::from_str(&t.coeff).map_err(|e| Error::Parse(e.to_string()))?;
            out.add_term(t.lambda.clone(), t.t.clone(), c);
        }
        Ok(out)
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SchurExpansionJson {
            r: self.r,
            n: self.n,
            terms: self.to_json_terms(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = SchurExpansionJson::deserialize(d)?;
        SchurExpansion::from_json_terms(j.r, j.n, &j.terms).map_err(D::Error::custom)
    }
}
