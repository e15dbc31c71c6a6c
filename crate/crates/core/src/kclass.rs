//! Equivariant K-classes of orbit closures: the rank-2 engine built from the
//! uniform class, zero columns and Demazure duplication; direct sums;
//! stabilization; Hilbert coefficients; and hook enumerators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{LaurentPoly, Ring};
use crate::matroid::{elements, Matroid, RationalMatrix};
use crate::symfunc::{demazure, rho, rho_power, schur_expand, Partition, SchurExpansion};

/// A rank-2 column configuration up to the data the K-class depends on:
/// each column is zero (`None`) or lies in a parallel class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank2Config {
    classes: Vec<Option<usize>>,
}

impl Rank2Config {
    /// Class labels are renumbered by first appearance.
    pub fn new(assignment: &[Option<usize>]) -> Result<Self> {
        let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
        let mut classes = Vec::with_capacity(assignment.len());
        for a in assignment {
            classes.push(a.map(|c| {
                let next = relabel.len();
                *relabel.entry(c).or_insert(next)
            }));
        }
        if relabel.len() < 2 {
            return Err(Error::RankMismatch {
                expected: 2,
                found: relabel.len().min(1),
            });
        }
        Ok(Rank2Config { classes })
    }

    /// Loops become zero columns and parallel classes become classes.
    pub fn from_matroid(m: &Matroid) -> Result<Self> {
        if m.rank() != 2 {
            return Err(Error::RankMismatch {
                expected: 2,
                found: m.rank(),
            });
        }
        let mut assignment = vec![None; m.n()];
        for (c, class) in m.parallel_classes().into_iter().enumerate() {
            for e in elements(class) {
                assignment[e] = Some(c);
            }
        }
        Self::new(&assignment)
    }

    pub fn from_matrix(v: &RationalMatrix) -> Result<Self> {
        Self::from_matroid(&Matroid::from_matrix(v)?)
    }

    /// Parallel classes given by 1-indexed column lists; other columns are zero.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut assignment = vec![None; n];
        for (c, cols) in classes.iter().enumerate() {
            for &j in cols {
                if j == 0 || j > n || assignment[j - 1].is_some() {
                    return Err(Error::InvalidMatroid(format!(
                        "bad column {j} in parallel classes"
                    )));
                }
                assignment[j - 1] = Some(c);
            }
        }
        Self::new(&assignment)
    }

    pub fn n(&self) -> usize {
        self.classes.len()
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.iter().flatten().max().map_or(0, |&c| c + 1)
    }

    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&j| self.classes[j].is_none())
            .collect()
    }

    /// First column of each class, by class.
    pub fn representatives(&self) -> Vec<usize> {
        (0..self.class_count())
            .map(|c| self.classes.iter().position(|&x| x == Some(c)).unwrap())
            .collect()
    }

    /// Non-zero columns that are not class representatives, in column order.
    pub fn duplicates(&self) -> Vec<usize> {
        let reps = self.representatives();
        (0..self.n())
            .filter(|j| self.classes[*j].is_some() && !reps.contains(j))
            .collect()
    }

    /// Class sizes, decreasing.
    pub fn parallelism_partition(&self) -> Partition {
        let mut sizes = vec![0u32; self.class_count()];
        for c in self.classes.iter().flatten() {
            sizes[*c] += 1;
        }
        Partition::from_unsorted(sizes)
    }

    pub fn matroid(&self) -> Matroid {
        let n = self.n();
        let bases: Vec<u32> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| matches!((self.classes[a], self.classes[b]), (Some(x), Some(y)) if x != y))
            .map(|(a, b)| 1u32 << a | 1 << b)
            .collect();
        Matroid::from_bases(n, 2, &bases).expect("rank-2 configurations give matroids")
    }
}

fn elementary_t(n: usize, m: usize) -> Vec<Vec<i32>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == m)
        .map(|s| (0..n).map(|j| (s >> j & 1) as i32).collect())
        .collect()
}

/// The class of a generic `2 × n` matrix:
/// `1 − Σ_{2 ≤ λ_2, λ_1 + λ_2 ≤ n} (−1)^{|λ|} (λ_1 − λ_2 + 1) s_λ(u) e_{|λ|}(t)`.
pub fn k_uniform_rank2(n: usize) -> Result<SchurExpansion> {
    if n < 2 {
        return Err(Error::Hypothesis(format!(
            "uniform rank-2 class needs n >= 2, got {n}"
        )));
    }
    let mut out = SchurExpansion::one(2, n);
    for l2 in 2..=n as u32 / 2 {
        for l1 in l2..=n as u32 - l2 {
            let size = (l1 + l2) as usize;
            let sign = if size % 2 == 0 { -1 } else { 1 };
            let c = BigInt::from(sign * i64::from(l1 - l2 + 1));
            let lambda = Partition::new(vec![l1, l2])?;
            for a in elementary_t(n, size) {
                out.add_term(lambda.clone(), a, c.clone());
            }
        }
    }
    Ok(out)
}

/// Appends a zero column: multiplies by `∏_i (1 − u_i t_{n+1})`.
pub fn add_zero_column(e: &SchurExpansion) -> Result<SchurExpansion> {
    let (r, n) = (e.r(), e.n());
    let mut factor = SchurExpansion::zero(r, n + 1);
    for k in 0..=r {
        let mut a = vec![0; n + 1];
        a[n] = k as i32;
        factor.add_term(
            Partition::column(k),
            a,
            BigInt::from(if k % 2 == 0 { 1 } else { -1 }),
        );
    }
    e.extend_t(1).schur_product(&factor)
}

/// Turns a zero last column into a copy of the one before it: `δ_{n−1}`
/// on the monomial form, expanded again in Schur polynomials.
pub fn duplicate_last_column(e: &SchurExpansion) -> Result<SchurExpansion> {
    let n = e.n();
    if n < 2 {
        return Err(Error::Hypothesis(
            "duplication needs at least two columns".into(),
        ));
    }
    schur_expand(&demazure(n - 1, &e.to_poly())?)
}

/// The rank-2 class, inserting duplicates in column order.
pub fn k_rank2(cfg: &Rank2Config) -> Result<SchurExpansion> {
    k_rank2_with_order(cfg, &cfg.duplicates())
}

/// The rank-2 class, inserting duplicate columns in the given order
/// (0-indexed, a permutation of `cfg.duplicates()`).
pub fn k_rank2_with_order(cfg: &Rank2Config, order: &[usize]) -> Result<SchurExpansion> {
    let mut expected = cfg.duplicates();
    let mut given = order.to_vec();
    expected.sort_unstable();
    given.sort_unstable();
    if expected != given {
        return Err(Error::Hypothesis(
            "insertion order must list each duplicate column once".into(),
        ));
    }
    let reps = cfg.representatives();
    let mut e = k_uniform_rank2(reps.len())?;
    // cols[slot] = original column carried by t-slot `slot`.
    let mut cols = reps.clone();
    for &d in order {
        let class = cfg.classes[d].unwrap();
        let p = cols
            .iter()
            .position(|&j| cfg.classes[j] == Some(class))
            .unwrap();
        let last = cols.len() - 1;
        let mut map: Vec<usize> = (0..cols.len()).collect();
        map.swap(p, last);
        e = e.relabel_t(cols.len(), &map);
        cols.swap(p, last);
        e = duplicate_last_column(&add_zero_column(&e)?)?;
        cols.push(d);
    }
    for z in cfg.zero_columns() {
        e = add_zero_column(&e)?;
        cols.push(z);
    }
    Ok(e.relabel_t(cfg.n(), &cols))
}

/// A coefficient where an as-printed formula and the normative computation differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub beta: Vec<u32>,
    pub k: usize,
    #[serde(with = "crate::exactpoly::bigint_string")]
    pub printed: BigInt,
    #[serde(with = "crate::exactpoly::bigint_string")]
    pub normative: BigInt,
}

fn beta_vec(mask: u32, n: usize) -> Vec<u32> {
    (0..n).map(|j| mask >> j & 1).collect()
}

fn beta_exp(mask: u32, n: usize) -> Vec<i32> {
    (0..n).map(|j| (mask >> j & 1) as i32).collect()
}

/// Closed-form coefficients `d_{k,β}` of `s_{(|β|−k, k)} t^β`, transcribed
/// literally (cases for `k = 0`, `k = 1` and `k ≥ 2`), together with every
/// coefficient where they differ from [`k_rank2`].
pub fn k_rank2_closed_form_as_printed(
    cfg: &Rank2Config,
) -> Result<(SchurExpansion, Vec<Discrepancy>)> {
    if !cfg.zero_columns().is_empty() {
        return Err(Error::Hypothesis(
            "closed form assumes no zero columns".into(),
        ));
    }
    let n = cfg.n();
    let mut out = SchurExpansion::zero(2, n);
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        let mut sizes: BTreeMap<usize, u32> = BTreeMap::new();
        for j in elements(mask) {
            *sizes.entry(cfg.classes[j].unwrap()).or_default() += 1;
        }
        let mu = Partition::from_unsorted(sizes.values().copied().collect());
        let sign = if size % 2 == 1 { 1i64 } else { -1 };
        for k in 0..=size / 2 {
            let d: i64 = match k {
                0 => i64::from(mask == 0),
                1 => {
                    if mu.len() == 1 {
                        sign
                    } else {
                        0
                    }
                }
                _ => {
                    let conj = mu.transpose();
                    let partial: i64 = (0..k - 1).map(|i| i64::from(conj[i])).sum();
                    let need = 2 * k as i64 - 1;
                    if mu.len() >= 4 && partial >= need {
                        sign * (partial - need)
                    } else {
                        0
                    }
                }
            };
            if d != 0 {
                let lambda = Partition::new(vec![(size - k) as u32, k as u32])?;
                out.add_term(lambda, beta_exp(mask, n), BigInt::from(d));
            }
        }
    }
    let normative = k_rank2(cfg)?;
    let mut report = Vec::new();
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        for k in 0..=size / 2 {
            let lambda = Partition::new(vec![(size - k) as u32, k as u32])?;
            let a = beta_exp(mask, n);
            let (p, q) = (out.coeff(&lambda, &a), normative.coeff(&lambda, &a));
            if p != q {
                report.push(Discrepancy {
                    beta: beta_vec(mask, n),
                    k,
                    printed: p,
                    normative: q,
                });
            }
        }
    }
    Ok((out, report))
}

/// `ρ^{r_2} E_1 · ρ^{r_1} E_2`, with the columns of the second factor placed after the first.
pub fn k_direct_sum(e1: &SchurExpansion, e2: &SchurExpansion) -> Result<SchurExpansion> {
    let (n1, n2) = (e1.n(), e2.n());
    let a = rho_power(e1, e2.r())?.extend_t(n2);
    let map: Vec<usize> = (n1..n1 + n2).collect();
    let b = rho_power(e2, e1.r())?.relabel_t(n1 + n2, &map);
    a.schur_product(&b)
}

/// The class after appending a row of zeros.
pub fn k_stabilize(e: &SchurExpansion) -> Result<SchurExpansion> {
    rho(e)
}

/// The coefficient of `t^β` in `E · ∏_{i,j} Σ_{d ≤ β_j} (u_i t_j)^d`, as a t-free expansion.
///
/// Uses that the `t_j^m` coefficient of `∏_i 1/(1 − u_i t_j)` is `h_m(u)`.
pub fn hilbert_coefficient(e: &SchurExpansion, beta: &[u32]) -> Result<SchurExpansion> {
    if beta.len() != e.n() {
        return Err(Error::SizeMismatch(beta.len(), e.n()));
    }
    let r = e.r();
    let mut out = SchurExpansion::zero(r, 0);
    for (lambda, a, c) in e.terms() {
        if a.iter().zip(beta).any(|(&x, &b)| x < 0 || x as u32 > b) {
            continue;
        }
        let mut acc = SchurExpansion::term(r, 0, lambda.clone(), vec![], c.clone());
        for (&x, &b) in a.iter().zip(beta) {
            let h = b - x as u32;
            if h > 0 {
                acc = acc.schur_product(&SchurExpansion::term(
                    r,
                    0,
                    Partition::row(h),
                    vec![],
                    BigInt::one(),
                ))?;
            }
        }
        out = out.checked_add(&acc)?;
    }
    Ok(out)
}

/// The coefficient of `s_{(|β|−k+1, 1^{k−1})}(u) t^β`.
pub fn hook_coefficient(e: &SchurExpansion, k: usize, beta: &[u32]) -> Result<BigInt> {
    if beta.len() != e.n() {
        return Err(Error::SizeMismatch(beta.len(), e.n()));
    }
    if k == 0 {
        return Err(Error::Hypothesis("hook index starts at 1".into()));
    }
    let size: u32 = beta.iter().sum();
    if k as u32 > size {
        return Ok(BigInt::zero());
    }
    let a: Vec<i32> = beta.iter().map(|&b| b as i32).collect();
    Ok(e.coeff(&Partition::hook(size, k as u32), &a))
}

/// `∏_j (1 − q t_j) · Σ_β (−1)^{rk(β)+|β|} q^{rk(β)} t^β`, reduced modulo every `t_j²`.
pub fn hook_enumerator_fakedep(m: &Matroid) -> LaurentPoly {
    let n = m.n();
    let ring = Ring::with_q(0, n);
    let z = LaurentPoly::from_terms(
        ring,
        (0u32..1 << n).map(|b| {
            let rk = m.rank_of(b);
            let mut e = vec![0i32; ring.width()];
            for j in elements(b) {
                e[ring.t(j + 1)] = 1;
            }
            e[ring.q_slot()] = rk as i32;
            let sign = if (rk + b.count_ones() as usize) % 2 == 0 {
                1
            } else {
                -1
            };
            (e, BigInt::from(sign))
        }),
    );
    let mut out = z;
    for j in 1..=n {
        let factor = &LaurentPoly::one(ring) - &(&LaurentPoly::q(ring) * &LaurentPoly::t(ring, j));
        out = (&out * &factor).squarefree_t();
    }
    out
}

/// `1 + Σ_{β dependent} (−1)^{rk β} q^{rk β − 1} (q + 1) t^β`, transcribed literally.
pub fn dep_polynomial_as_printed(m: &Matroid) -> LaurentPoly {
    let n = m.n();
    let ring = Ring::with_q(0, n);
    let mut out = LaurentPoly::one(ring);
    for b in 0u32..1 << n {
        if m.is_independent(b) {
            continue;
        }
        let rk = m.rank_of(b) as i32;
        let mut e = vec![0i32; ring.width()];
        for j in elements(b) {
            e[ring.t(j + 1)] = 1;
        }
        let sign = BigInt::from(if rk % 2 == 0 { 1 } else { -1 });
        for shift in [rk - 1, rk] {
            e[ring.q_slot()] = shift;
            out.add_term(e.clone(), sign.clone());
        }
    }
    out
}

/// Hook table of an enumerator: for each non-empty `β` (bitmask), the `t^β`
/// coefficient divided exactly by `q + 1`, read as `Σ_k c_k q^{k−1}`.
/// Returns `(β, k) ↦ c_k` for non-zero `c_k`.
pub fn hooks_from_enumerator(p: &LaurentPoly) -> Result<BTreeMap<(u32, usize), BigInt>> {
    let ring = p.ring();
    let n = ring.n;
    let qring = Ring::with_q(0, 0);
    let mut by_beta: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mask = (0..n)
            .filter(|&j| e[ring.t(j + 1)] != 0)
            .fold(0u32, |m, j| m | 1 << j);
        let mut qe = vec![0i32; qring.width()];
        qe[qring.q_slot()] = e[ring.q_slot()];
        by_beta
            .entry(mask)
            .or_insert_with(|| LaurentPoly::zero(qring))
            .add_term(qe, c.clone());
    }
    let q_plus_one = &LaurentPoly::q(qring) + &LaurentPoly::one(qring);
    let mut out = BTreeMap::new();
    for (mask, coeff) in by_beta {
        if mask == 0 || coeff.is_zero() {
            continue;
        }
        let quotient = coeff.exact_divide(&q_plus_one)?;
        for (e, c) in quotient.terms() {
            let power = e[qring.q_slot()];
            if power < 0 {
                return Err(Error::NegativeExponent);
            }
            out.insert((mask, power as usize + 1), c.clone());
        }
    }
    Ok(out)
}

/// Hook coefficients predicted by the enumerator for `k ≤ max_k`.
pub fn fakedep_hooks(m: &Matroid, max_k: usize) -> Result<BTreeMap<(u32, usize), BigInt>> {
    let mut table = hooks_from_enumerator(&hook_enumerator_fakedep(m))?;
    table.retain(|&(_, k), _| k <= max_k);
    Ok(table)
}

/// The hook statement read literally: `(−1)^k` when `β` is dependent of rank `k − 1`, else 0.
pub fn hook_theorem_as_printed(m: &Matroid, k: usize, beta: u32) -> BigInt {
    if k >= 1 && !m.is_independent(beta) && m.rank_of(beta) == k - 1 {
        BigInt::from(if k % 2 == 0 { 1 } else { -1 })
    } else {
        BigInt::zero()
    }
}

/// Per-`(β, k)` comparison of the literal hook statement against the
/// enumerator, for `1 ≤ k ≤ max_k`.
pub fn hook_theorem_report(m: &Matroid, max_k: usize) -> Result<Vec<Discrepancy>> {
    let normative = fakedep_hooks(m, max_k)?;
    let mut out = Vec::new();
    for beta in 1u32..1 << m.n() {
        for k in 1..=max_k.min(beta.count_ones() as usize) {
            let printed = hook_theorem_as_printed(m, k, beta);
            let norm = normative.get(&(beta, k)).cloned().unwrap_or_default();
            if printed != norm {
                out.push(Discrepancy {
                    beta: beta_vec(beta, m.n()),
                    k,
                    printed,
                    normative: norm,
                });
            }
        }
    }
    Ok(out)
}

/// Per-`(β, k)` comparison of the literal dependency polynomial against the enumerator.
pub fn dep_polynomial_report(m: &Matroid) -> Result<Vec<Discrepancy>> {
    let printed = hooks_from_enumerator(&dep_polynomial_as_printed(m));
    let normative = hooks_from_enumerator(&hook_enumerator_fakedep(m))?;
    let printed = match printed {
        Ok(p) => p,
        Err(Error::NegativeExponent) => {
            // Rank-zero dependent sets give q^{-1}; compare raw coefficients instead.
            return Ok(raw_dep_report(m));
        }
        Err(e) => return Err(e),
    };
    let mut keys: Vec<(u32, usize)> = printed.keys().chain(normative.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    Ok(keys
        .into_iter()
        .filter_map(|key| {
            let p = printed.get(&key).cloned().unwrap_or_default();
            let q = normative.get(&key).cloned().unwrap_or_default();
            (p != q).then(|| Discrepancy {
                beta: beta_vec(key.0, m.n()),
                k: key.1,
                printed: p,
                normative: q,
            })
        })
        .collect())
}

fn raw_dep_report(m: &Matroid) -> Vec<Discrepancy> {
    let n = m.n();
    let ring = Ring::with_q(0, n);
    let printed = dep_polynomial_as_printed(m);
    let normative = hook_enumerator_fakedep(m);
    let mut exps: Vec<Vec<i32>> = printed
        .terms()
        .chain(normative.terms())
        .map(|(e, _)| e.clone())
        .collect();
    exps.sort();
    exps.dedup();
    exps.into_iter()
        .filter_map(|e| {
            let (p, q) = (printed.coeff(&e), normative.coeff(&e));
            let mask = (0..n)
                .filter(|&j| e[ring.t(j + 1)] != 0)
                .fold(0u32, |acc, j| acc | 1 << j);
            // k is reported as the q-exponent plus one.
            let k = (e[ring.q_slot()] + 1).max(0) as usize;
            (p != q).then(|| Discrepancy {
                beta: beta_vec(mask, n),
                k,
                printed: p,
                normative: q,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::truncated_geometric_product;
    use crate::symfunc::part;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn parse(r: usize, n: usize, terms: &[(&[u32], &[i32], i64)]) -> SchurExpansion {
        let mut e = SchurExpansion::zero(r, n);
        for (l, a, c) in terms {
            e.add_term(part(l), a.to_vec(), big(*c));
        }
        e
    }

    #[test]
    fn uniform_small() {
        assert_eq!(k_uniform_rank2(3).unwrap(), SchurExpansion::one(2, 3));
        assert_eq!(
            k_uniform_rank2(4).unwrap(),
            parse(
                2,
                4,
                &[(&[], &[0, 0, 0, 0], 1), (&[2, 2], &[1, 1, 1, 1], -1)]
            )
        );
        let u5 = k_uniform_rank2(5).unwrap();
        assert_eq!(u5.coeff(&part(&[3, 2]), &[1, 1, 1, 1, 1]), big(2));
        assert_eq!(u5.coeff(&part(&[2, 2]), &[0, 1, 1, 1, 1]), big(-1));
        assert!(k_uniform_rank2(1).is_err());
    }

    #[test]
    fn zero_column() {
        assert_eq!(
            add_zero_column(&SchurExpansion::one(2, 0)).unwrap(),
            parse(
                2,
                1,
                &[(&[], &[0], 1), (&[1], &[1], -1), (&[1, 1], &[2], 1)]
            )
        );
        assert_eq!(
            add_zero_column(&SchurExpansion::one(1, 1)).unwrap(),
            parse(1, 2, &[(&[], &[0, 0], 1), (&[1], &[0, 1], -1)])
        );
    }

    #[test]
    fn duplication() {
        let e =
            duplicate_last_column(&add_zero_column(&k_uniform_rank2(3).unwrap()).unwrap()).unwrap();
        assert_eq!(
            e,
            parse(
                2,
                4,
                &[(&[], &[0, 0, 0, 0], 1), (&[1, 1], &[0, 0, 1, 1], -1)]
            )
        );
        let one =
            duplicate_last_column(&add_zero_column(&SchurExpansion::one(1, 1)).unwrap()).unwrap();
        assert_eq!(one, SchurExpansion::one(1, 2));
    }

    #[test]
    fn rank2_examples() {
        let cfg = Rank2Config::from_classes(4, &[vec![1, 2], vec![3], vec![4]]).unwrap();
        assert_eq!(
            k_rank2(&cfg).unwrap(),
            parse(
                2,
                4,
                &[(&[], &[0, 0, 0, 0], 1), (&[1, 1], &[1, 1, 0, 0], -1)]
            )
        );
        let cfg = Rank2Config::from_classes(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let expect = parse(
            2,
            4,
            &[
                (&[], &[0, 0, 0, 0], 1),
                (&[1, 1], &[1, 1, 0, 0], -1),
                (&[1, 1], &[0, 0, 1, 1], -1),
                (&[2, 2], &[1, 1, 1, 1], 1),
            ],
        );
        assert_eq!(k_rank2(&cfg).unwrap(), expect);
        assert_eq!(k_rank2_with_order(&cfg, &[3, 1]).unwrap(), expect);
        let u12 = SchurExpansion::term(1, 2, Partition::empty(), vec![0, 0], big(1));
        assert_eq!(k_direct_sum(&u12, &u12).unwrap(), expect);
    }

    #[test]
    fn closed_form_report() {
        let cfg = Rank2Config::from_classes(4, &[vec![1], vec![2], vec![3], vec![4]]).unwrap();
        let (e, report) = k_rank2_closed_form_as_printed(&cfg).unwrap();
        assert_eq!(e, k_uniform_rank2(4).unwrap());
        assert!(report.is_empty());
        let cfg = Rank2Config::from_classes(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let (_, report) = k_rank2_closed_form_as_printed(&cfg).unwrap();
        assert_eq!(
            report,
            vec![Discrepancy {
                beta: vec![1, 1, 1, 1],
                k: 2,
                printed: big(0),
                normative: big(1)
            }]
        );
    }

    #[test]
    fn stabilize_minors() {
        let three = Rank2Config::new(&[Some(0), Some(0), Some(0), Some(1)]).unwrap();
        assert_eq!(three.parallelism_partition(), part(&[3, 1]));
        let e = k_stabilize(&SchurExpansion::one(1, 2)).unwrap();
        assert_eq!(e, parse(2, 2, &[(&[], &[0, 0], 1), (&[1, 1], &[1, 1], -1)]));
        assert!(k_stabilize(&SchurExpansion::zero(1, 2)).unwrap().is_zero());
    }

    #[test]
    fn hilbert_against_geometric_product() {
        let e = k_uniform_rank2(4).unwrap();
        let h = hilbert_coefficient(&e, &[1, 1, 1, 1]).unwrap();
        assert_eq!(
            h,
            parse(
                2,
                0,
                &[(&[4], &[], 1), (&[3, 1], &[], 3), (&[2, 2], &[], 1)]
            )
        );
        assert_eq!(
            hilbert_coefficient(&e, &[0, 0, 0, 0]).unwrap(),
            SchurExpansion::one(2, 0)
        );
        for beta in [[1u32, 2, 0, 1], [2, 1, 1, 1]] {
            let bound: Vec<i64> = beta.iter().map(|&b| i64::from(b)).collect();
            let prod = (&e.to_poly() * &truncated_geometric_product(2, &bound).unwrap())
                .truncate_t(&beta.map(|b| b as i32));
            let full = schur_expand(&prod).unwrap();
            let a: Vec<i32> = beta.iter().map(|&b| b as i32).collect();
            assert_eq!(
                hilbert_coefficient(&e, &beta).unwrap(),
                full.t_coefficient(&a)
            );
        }
    }

    #[test]
    fn fakedep_examples() {
        let u12 = Matroid::uniform(1, 2);
        let ring = Ring::with_q(0, 2);
        let f = hook_enumerator_fakedep(&u12);
        assert_eq!(
            f,
            LaurentPoly::parse(ring, "1 + -1 * t1 t2 q + -1 * t1 t2 q^2").unwrap()
        );
        assert_eq!(
            hook_enumerator_fakedep(&Matroid::uniform(1, 1)),
            LaurentPoly::one(Ring::with_q(0, 1))
        );
        let u24 = hook_enumerator_fakedep(&Matroid::uniform(2, 4));
        let hooks = hooks_from_enumerator(&u24).unwrap();
        assert_eq!(hooks.get(&(0b1111, 3)), Some(&big(1)));
        assert_eq!(hooks.get(&(0b1111, 4)), Some(&big(3)));
        assert_eq!(hooks.len(), 2 + 4);
        let dep = dep_polynomial_as_printed(&u12);
        assert_eq!(
            dep,
            LaurentPoly::parse(ring, "1 + -1 * t1 t2 + -1 * t1 t2 q").unwrap()
        );
        assert!(!dep_polynomial_report(&u12).unwrap().is_empty());
    }

    #[test]
    fn hook_coefficients() {
        let cfg = Rank2Config::from_classes(4, &[vec![1, 2], vec![3], vec![4]]).unwrap();
        let e = k_rank2(&cfg).unwrap();
        assert_eq!(hook_coefficient(&e, 2, &[1, 1, 0, 0]).unwrap(), big(-1));
        assert_eq!(hook_coefficient(&e, 2, &[1, 0, 1, 0]).unwrap(), big(0));
        let m = cfg.matroid();
        assert_eq!(
            fakedep_hooks(&m, 2).unwrap().get(&(0b0011, 2)),
            Some(&big(-1))
        );
        assert_eq!(hook_theorem_as_printed(&m, 2, 0b0011), big(1));
    }
}
