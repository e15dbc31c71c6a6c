//! Sparse Laurent polynomials with big-integer coefficients.
//!
//! Variables are laid out densely as `u1..ur, t1..tn, q`; the `q` slot is
//! always present in the exponent vector and must stay zero unless the ring
//! carries the auxiliary variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Variable arity of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ring {
    pub r: usize,
    pub n: usize,
    pub q: bool,
}

impl Ring {
    pub fn new(r: usize, n: usize) -> Self {
        Ring { r, n, q: false }
    }

    pub fn with_q(r: usize, n: usize) -> Self {
        Ring { r, n, q: true }
    }

    /// Length of an exponent vector.
    pub fn width(&self) -> usize {
        self.r + self.n + 1
    }

    /// Slot of `u_i` (1-indexed).
    pub fn u(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.r);
        i - 1
    }

    /// Slot of `t_j` (1-indexed).
    pub fn t(&self, j: usize) -> usize {
        debug_assert!(j >= 1 && j <= self.n);
        self.r + j - 1
    }

    pub fn q_slot(&self) -> usize {
        self.r + self.n
    }

    fn name(&self, slot: usize) -> String {
        if slot < self.r {
            format!("u{}", slot + 1)
        } else if slot < self.r + self.n {
            format!("t{}", slot - self.r + 1)
        } else {
            "q".to_string()
        }
    }

    fn slot_of(&self, name: &str) -> Option<usize> {
        if name == "q" {
            return self.q.then_some(self.q_slot());
        }
        let (head, idx) = name.split_at(1);
        let idx: usize = idx.parse().ok()?;
        match head {
            "u" if idx >= 1 && idx <= self.r => Some(self.u(idx)),
            "t" if idx >= 1 && idx <= self.n => Some(self.t(idx)),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, n={}, q={})", self.r, self.n, self.q)
    }
}

/// An exact sparse Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ring: Ring,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(ring: Ring) -> Self {
        LaurentPoly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, BigInt::one())
    }

    pub fn constant(ring: Ring, c: BigInt) -> Self {
        Self::monomial(ring, vec![0; ring.width()], c)
    }

    /// `c * x^exp`; panics if `exp` has the wrong width.
    pub fn monomial(ring: Ring, exp: Vec<i32>, c: BigInt) -> Self {
        assert_eq!(exp.len(), ring.width(), "exponent width");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    fn var(ring: Ring, slot: usize) -> Self {
        let mut e = vec![0; ring.width()];
        e[slot] = 1;
        Self::monomial(ring, e, BigInt::one())
    }

    pub fn u(ring: Ring, i: usize) -> Self {
        Self::var(ring, ring.u(i))
    }

    pub fn t(ring: Ring, j: usize) -> Self {
        Self::var(ring, ring.t(j))
    }

    pub fn q(ring: Ring) -> Self {
        assert!(ring.q, "ring has no q");
        Self::var(ring, ring.q_slot())
    }

    /// Builds a polynomial from raw terms, pruning zeros and merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Vec<i32>, BigInt)>>(ring: Ring, terms: I) -> Self {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.len(), ring.width(), "exponent width");
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Vec<i32>, BigInt> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Adds `c * x^e` in place.
    pub fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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
        if self.ring != other.ring {
            return Err(Error::ArityMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring);
        }
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.ring.width());
        LaurentPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.ring);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `f / g`, failing when no Laurent-polynomial quotient exists.
    ///
    /// Per-variable degree bounds of the quotient are known in advance, so the
    /// lex-leading-term division runs inside a finite box.
    pub fn exact_divide(&self, g: &Self) -> Result<Self> {
        self.check(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.ring));
        }
        let w = self.ring.width();
        let (fmin, fmax) = self.degree_box();
        let (gmin, gmax) = g.degree_box();
        let lo: Vec<i32> = (0..w).map(|v| fmin[v] - gmin[v]).collect();
        let hi: Vec<i32> = (0..w).map(|v| fmax[v] - gmax[v]).collect();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::NotDivisible);
        }
        let (glead, gcoef) = g
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quo = Self::zero(self.ring);
        while let Some((lead, coef)) = rem
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            let m: Vec<i32> = lead.iter().zip(&glead).map(|(a, b)| a - b).collect();
            if (0..w).any(|v| m[v] < lo[v] || m[v] > hi[v]) {
                return Err(Error::NotDivisible);
            }
            let (c, rest) = coef.div_rem(&gcoef);
            if !rest.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (e, x) in &g.terms {
                let shifted: Vec<i32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                rem.add_term(shifted, -(x * &c));
            }
            quo.add_term(m, c);
        }
        Ok(quo)
    }

    /// Per-variable minimum and maximum exponents; panics on zero.
    pub fn degree_box(&self) -> (Vec<i32>, Vec<i32>) {
        let w = self.ring.width();
        let mut lo = vec![i32::MAX; w];
        let mut hi = vec![i32::MIN; w];
        for e in self.terms.keys() {
            for v in 0..w {
                lo[v] = lo[v].min(e[v]);
                hi[v] = hi[v].max(e[v]);
            }
        }
        (lo, hi)
    }

    /// Total degree of a term in the u- and t-variables (q is not counted).
    pub fn ut_degree(&self, e: &[i32]) -> i32 {
        e[..self.ring.r + self.ring.n].iter().sum()
    }

    /// Terms whose u,t-degree equals `d`.
    pub fn homogeneous_part(&self, d: i32) -> Self {
        LaurentPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.ut_degree(e) == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Smallest u,t-degree among the terms, `None` for zero.
    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| self.ut_degree(e)).min()
    }

    /// Replaces every `u_i` by `1 - u_i` and every `t_j` by `1 - t_j`.
    pub fn substitute_affine(&self) -> Result<Self> {
        self.substitute_affine_upto(i32::MAX)
    }

    /// As [`substitute_affine`](Self::substitute_affine), keeping only output
    /// terms of u,t-degree at most `max_degree`.
    pub fn substitute_affine_upto(&self, max_degree: i32) -> Result<Self> {
        let nvars = self.ring.r + self.ring.n;
        let mut out = Self::zero(self.ring);
        for (e, c) in &self.terms {
            if e[..nvars].iter().any(|&x| x < 0) {
                return Err(Error::NegativeExponent);
            }
            // Expand prod_v (1 - x_v)^{e_v} one variable at a time.
            let mut partial: Vec<(Vec<i32>, BigInt)> =
                vec![(vec![0; self.ring.width()], c.clone())];
            for v in 0..nvars {
                let ev = e[v];
                if ev == 0 {
                    continue;
                }
                let binoms = binomial_row(ev as u32);
                let mut next = Vec::with_capacity(partial.len() * (ev as usize + 1));
                for (pe, pc) in &partial {
                    let deg: i32 = pe[..nvars].iter().sum();
                    for k in 0..=ev {
                        if deg + k > max_degree {
                            break;
                        }
                        let mut ne = pe.clone();
                        ne[v] = k;
                        let mut nc = pc * &binoms[k as usize];
                        if k % 2 == 1 {
                            nc = -nc;
                        }
                        next.push((ne, nc));
                    }
                }
                partial = next;
            }
            let qs = self.ring.q_slot();
            for (mut pe, pc) in partial {
                pe[qs] = e[qs];
                out.add_term(pe, pc);
            }
        }
        Ok(out)
    }

    /// Drops terms whose t-exponents exceed `bound` anywhere.
    pub fn truncate_t(&self, bound: &[i32]) -> Self {
        assert_eq!(bound.len(), self.ring.n);
        let r = self.ring.r;
        LaurentPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| (0..bound.len()).all(|j| e[r + j] <= bound[j]))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reduces modulo the squares of all t-variables.
    pub fn squarefree_t(&self) -> Self {
        self.truncate_t(&vec![1; self.ring.n])
    }

    /// Exchanges two variable slots.
    pub fn swap_slots(&self, a: usize, b: usize) -> Self {
        LaurentPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(a, b);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Moves every variable into a new ring: u-slot `i` goes to u-slot
    /// `u_map[i]`, t-slot `j` to t-slot `t_map[j]` (0-indexed); q is carried.
    pub fn relabel(&self, target: Ring, u_map: &[usize], t_map: &[usize]) -> Self {
        assert_eq!(u_map.len(), self.ring.r);
        assert_eq!(t_map.len(), self.ring.n);
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.width()];
            for (i, &to) in u_map.iter().enumerate() {
                ne[to] += e[i];
            }
            for (j, &to) in t_map.iter().enumerate() {
                ne[target.r + to] += e[self.ring.r + j];
            }
            ne[target.q_slot()] = e[self.ring.q_slot()];
            out.add_term(ne, c.clone());
        }
        out
    }

    /// True when invariant under every permutation of the u-variables.
    pub fn is_symmetric_in_u(&self) -> bool {
        (1..self.ring.r).all(|i| self.swap_slots(i - 1, i) == *self)
    }

    /// Evaluates at a rational point given for every slot (length `r+n+1`).
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        assert_eq!(point.len(), self.ring.width());
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if k < 0 && point[v].is_zero() {
                    return Err(Error::DivisionByZero);
                }
                term *= pow_rational(&point[v], k);
            }
            acc += term;
        }
        Ok(acc)
    }
}

pub(crate) fn pow_rational(x: &BigRational, k: i32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        out *= x;
    }
    if k < 0 {
        out.recip()
    } else {
        out
    }
}

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 1..=n {
        let prev = row[(k - 1) as usize].clone();
        row.push(prev * BigInt::from(n - k + 1) / BigInt::from(k));
    }
    row
}

/// `f + g`, failing on arity mismatch.
pub fn add(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    f.checked_add(g)
}

/// `f * g`, failing on arity mismatch.
pub fn mul(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    f.checked_mul(g)
}

/// Exact quotient `f / g`.
pub fn exact_divide(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    f.exact_divide(g)
}

/// Replaces `u_i -> 1 - u_i`, `t_j -> 1 - t_j`.
pub fn substitute_affine(f: &LaurentPoly) -> Result<LaurentPoly> {
    f.substitute_affine()
}

/// `prod_{i<=r, j<=n} sum_{d=0}^{bound_j} (u_i t_j)^d`, truncated to t-degree
/// `bound_j` in each `t_j`.
pub fn truncated_geometric_product(r: usize, bound: &[i64]) -> Result<LaurentPoly> {
    if bound.iter().any(|&b| b < 0) {
        return Err(Error::Hypothesis("negative bound entry".into()));
    }
    let ring = Ring::new(r, bound.len());
    let tb: Vec<i32> = bound.iter().map(|&b| b as i32).collect();
    let mut out = LaurentPoly::one(ring);
    for (j, &b) in tb.iter().enumerate() {
        for i in 1..=r {
            let mut factor = LaurentPoly::zero(ring);
            for d in 0..=b {
                let mut e = vec![0; ring.width()];
                e[ring.u(i)] = d;
                e[ring.t(j + 1)] = d;
                factor.add_term(e, BigInt::one());
            }
            out = (&out * &factor).truncate_t(&tb);
        }
    }
    Ok(out)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        self.checked_add(rhs).expect("arity mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        self.checked_sub(rhs).expect("arity mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        self.checked_mul(rhs).expect("arity mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        self.ring.name(v)
                    } else {
                        format!("{}^{}", self.ring.name(v), k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{} * {}", c, vars.join(" "))?;
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    /// Parses the textual rendering produced by `Display` in a given ring.
    pub fn parse(ring: Ring, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut p = Self::zero(ring);
        if s == "0" {
            return Ok(p);
        }
        for chunk in s.split(" + ") {
            let (coef, mono) = match chunk.split_once(" * ") {
                Some((c, m)) => (c, m),
                None => (chunk, ""),
            };
            let c =
                BigInt::from_str(coef.trim()).map_err(|e| Error::Parse(format!("{coef}: {e}")))?;
            let mut e = vec![0; ring.width()];
            for var in mono.split_whitespace() {
                let (name, k) = match var.split_once('^') {
                    Some((n, k)) => (
                        n,
                        k.parse::<i32>()
                            .map_err(|err| Error::Parse(format!("{var}: {err}")))?,
                    ),
                    None => (var, 1),
                };
                let slot = ring
                    .slot_of(name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                e[slot] += k;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: Vec<i32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    r: usize,
    n: usize,
    q: bool,
    terms: Vec<JsonTerm>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            r: self.ring.r,
            n: self.ring.n,
            q: self.ring.q,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| JsonTerm {
                    exp: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = JsonPoly::deserialize(d)?;
        let ring = Ring {
            r: j.r,
            n: j.n,
            q: j.q,
        };
        let mut p = LaurentPoly::zero(ring);
        for t in j.terms {
            if t.exp.len() != ring.width() {
                return Err(D::Error::custom("exponent width"));
            }
            let c = BigInt::from_str(&t.coeff).map_err(D::Error::custom)?;
            p.add_term(t.exp, c);
        }
        Ok(p)
    }
}

/// Integer value of a rational, if it is one.
pub fn rational_to_integer(x: &BigRational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

/// Renders a rational as `p` or `p/q`.
pub fn rational_to_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = |_| Error::Parse(format!("bad rational {s}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let q = BigInt::from_str(q.trim()).map_err(bad)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s}")));
            }
            Ok(BigRational::new(
                BigInt::from_str(p.trim()).map_err(bad)?,
                q,
            ))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(bad)?)),
    }
}

/// Serde adapter writing integers as decimal strings.
pub mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        use serde::de::Error as _;
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(2, 4)
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(ring(), s).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((&p("1 * u1") + &p("-1 * u1")).is_zero());
        assert_eq!(&p("1") + &p("1 * t1"), p("1 + 1 * t1"));
        assert_eq!(&p("1 + -1 * u1 t1") + &p("1 * u1 t1"), p("1"));
    }

    #[test]
    fn products() {
        assert_eq!(
            &p("1 + -1 * u1 t1") * &p("1 + 1 * u1 t1"),
            p("1 + -1 * u1^2 t1^2")
        );
        assert_eq!(
            &p("1 * t1 + -1 * t2") * &p("1 * t1 + 1 * t2"),
            p("1 * t1^2 + -1 * t2^2")
        );
        let f = p("3 * u1 t2 + -2 * t4^3");
        assert_eq!(&f * &LaurentPoly::one(ring()), f);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = LaurentPoly::one(Ring::new(1, 1));
        let b = LaurentPoly::one(Ring::new(2, 1));
        assert!(matches!(add(&a, &b), Err(Error::ArityMismatch(..))));
        assert!(matches!(mul(&a, &b), Err(Error::ArityMismatch(..))));
    }

    #[test]
    fn exact_division() {
        let d = p("1 * t1 + -1 * t2");
        assert_eq!(
            p("1 * t1^2 + -1 * t2^2").exact_divide(&d).unwrap(),
            p("1 * t1 + 1 * t2")
        );
        assert_eq!(d.exact_divide(&d).unwrap(), p("1"));
        assert_eq!(p("1 * t1 t2").exact_divide(&d), Err(Error::NotDivisible));
        assert_eq!(
            d.exact_divide(&LaurentPoly::zero(ring())),
            Err(Error::DivisionByZero)
        );
        // Laurent quotients are allowed.
        assert_eq!(
            p("1 * t1").exact_divide(&p("1 * t1^2")).unwrap(),
            p("1 * t1^-1")
        );
    }

    #[test]
    fn affine_substitution() {
        assert_eq!(
            p("1 + -1 * u1 t1").substitute_affine().unwrap(),
            p("1 * u1 + 1 * t1 + -1 * u1 t1")
        );
        assert_eq!(p("1").substitute_affine().unwrap(), p("1"));
        let f = p("1 * u1 u2 t1 t2");
        let expect =
            &(&(&p("1 + -1 * u1") * &p("1 + -1 * u2")) * &p("1 + -1 * t1")) * &p("1 + -1 * t2");
        assert_eq!(f.substitute_affine().unwrap(), expect);
        assert_eq!(
            p("1 * u1^-1").substitute_affine(),
            Err(Error::NegativeExponent)
        );
    }

    #[test]
    fn truncated_substitution_keeps_low_degrees() {
        let f = p("1 + -1 * u1^2 u2^2 t1 t2 t3 t4");
        let full = f.substitute_affine().unwrap();
        let low = f.substitute_affine_upto(1).unwrap();
        for d in 0..=1 {
            assert_eq!(full.homogeneous_part(d), low.homogeneous_part(d));
        }
        assert!(low.homogeneous_part(2).is_zero());
    }

    #[test]
    fn geometric_product() {
        let g = truncated_geometric_product(1, &[1]).unwrap();
        assert_eq!(
            g,
            LaurentPoly::parse(Ring::new(1, 1), "1 + 1 * u1 t1").unwrap()
        );
        let g = truncated_geometric_product(2, &[1]).unwrap();
        let r = Ring::new(2, 1);
        let lin: LaurentPoly = g
            .terms()
            .filter(|(e, _)| e[2] == 1)
            .map(|(e, c)| (e.clone(), c.clone()))
            .fold(LaurentPoly::zero(r), |mut acc, (e, c)| {
                acc.add_term(e, c);
                acc
            });
        assert_eq!(lin, LaurentPoly::parse(r, "1 * u1 t1 + 1 * u2 t1").unwrap());
        assert_eq!(
            truncated_geometric_product(3, &[0, 0]).unwrap(),
            LaurentPoly::one(Ring::new(3, 2))
        );
        assert!(truncated_geometric_product(1, &[-1]).is_err());
    }

    #[test]
    fn text_and_json_round_trip() {
        let r = Ring::with_q(2, 4);
        let f = LaurentPoly::parse(r, "-1 * u1^2 u2^2 t1 t2 t3 t4 + 3 * q^-1 t2 + 1").unwrap();
        assert_eq!(LaurentPoly::parse(r, &f.to_string()).unwrap(), f);
        let js = serde_json::to_string(&f).unwrap();
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
        assert_eq!(
            p("-1 * u1^2 u2^2 t1 t2 t3 t4").to_string(),
            "-1 * u1^2 u2^2 t1 t2 t3 t4"
        );
    }

    #[test]
    fn rationals_parse() {
        let x = parse_rational("-3/6").unwrap();
        assert_eq!(rational_to_string(&x), "-1/2");
        assert!(parse_rational("1/0").is_err());
    }
}
