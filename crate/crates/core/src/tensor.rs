//! Characters of tensor modules, their hook multiplicities, and an explicit
//! symmetric-group oracle acting on `(k^r)^{⊗n}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{rational_to_integer, rational_to_string};
use crate::matroid::{Matroid, RationalMatrix};
use crate::symfunc::{Partition, SchurExpansion};

/// `s_{(n)} + Σ_{1 ≤ ℓ ≤ n/2} (n − 2ℓ + 1) s_{(n−ℓ, ℓ)}`.
pub fn char_uniform_rank2(n: usize) -> Result<SchurExpansion> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("needs n >= 2, got {n}")));
    }
    let mut out = SchurExpansion::term(2, 0, Partition::row(n as u32), vec![], BigInt::one());
    for l in 1..=n / 2 {
        let lambda = Partition::new(vec![(n - l) as u32, l as u32])?;
        out.add_term(lambda, vec![], BigInt::from(n - 2 * l + 1));
    }
    Ok(out)
}

/// `s_{(n)} + Σ_k max(μ'_1 + … + μ'_k − 2k + 1, 0) s_{(n−k, k)}` for a
/// parallelism partition `μ` of `n` with at least two parts.
pub fn char_rank2(mu: &Partition) -> Result<SchurExpansion> {
    if mu.len() < 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            found: mu.len().min(1),
        });
    }
    let n = mu.size() as usize;
    let conj = mu.transpose();
    let mut out = SchurExpansion::term(2, 0, Partition::row(n as u32), vec![], BigInt::one());
    let mut partial = 0i64;
    for k in 1..=n / 2 {
        partial += i64::from(conj[k - 1]);
        let c = partial - 2 * k as i64 + 1;
        if c > 0 {
            out.add_term(
                Partition::new(vec![(n - k) as u32, k as u32])?,
                vec![],
                BigInt::from(c),
            );
        }
    }
    Ok(out)
}

/// Multiplicity of the hook `(n − k + 1, 1^{k−1})`: nbc bases of the rank-`k` truncation.
pub fn hook_multiplicity_nbc(m: &Matroid, k: usize) -> Result<usize> {
    if !m.is_loopless() {
        return Err(Error::LoopsPresent);
    }
    if k == 0 {
        return Err(Error::Hypothesis("hook index starts at 1".into()));
    }
    if k > m.rank() {
        return Ok(0);
    }
    m.nbc_bases_of_truncation(k)
}

/// `Σ_k hook_k q^{k−1}(q + 1)` against `q^{rk} T(1 + 1/q, 0)`, as
/// coefficient lists in `q` (lowest degree first).
pub fn hook_generating_identity(m: &Matroid) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    if !m.is_loopless() {
        return Err(Error::LoopsPresent);
    }
    let rank = m.rank();
    let mut lhs = vec![BigInt::zero(); rank + 1];
    for k in 1..=rank {
        let h = BigInt::from(hook_multiplicity_nbc(m, k)?);
        lhs[k - 1] += &h;
        lhs[k] += &h;
    }
    Ok((lhs, m.tutte().hook_specialization(rank)))
}

/// Whether `μ` dominates the transpose of the rank partition.
pub fn support_test(m: &Matroid, mu: &Partition) -> Result<bool> {
    if !m.is_loopless() {
        return Err(Error::LoopsPresent);
    }
    if mu.size() as usize != m.n() {
        return Err(Error::SizeMismatch(mu.size() as usize, m.n()));
    }
    mu.dominates(&m.rank_partition().transpose())
}

fn mn_cache() -> &'static RwLock<HashMap<(Partition, Partition), i64>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The irreducible character `χ_λ` at the class of cycle type `ρ`, by removing rim hooks.
pub fn mn_character(lambda: &Partition, class: &Partition) -> Result<i64> {
    if lambda.size() != class.size() {
        return Err(Error::SizeMismatch(
            lambda.size() as usize,
            class.size() as usize,
        ));
    }
    Ok(mn(lambda, class))
}

fn mn(lambda: &Partition, class: &Partition) -> i64 {
    if class.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), class.clone());
    if let Some(&v) = mn_cache().read().unwrap().get(&key) {
        return v;
    }
    let k = class[0];
    let rest = Partition::new(class.parts()[1..].to_vec()).unwrap();
    let len = lambda.len();
    // Beta-set: λ_i + (len − 1 − i), strictly decreasing.
    let beta: Vec<i64> = (0..len)
        .map(|i| i64::from(lambda[i]) + (len - 1 - i) as i64)
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - i64::from(k);
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (len - 1 - i) as i64) as u32)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&Partition::new(parts).unwrap(), &rest);
    }
    mn_cache().write().unwrap().insert(key, total);
    total
}

/// Size of the conjugacy class centralizer for cycle type `ρ`.
pub fn centralizer_order(class: &Partition) -> BigInt {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in class.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.iter().fold(BigInt::one(), |acc, (&i, &m)| {
        let fact: BigInt = (1..=m).map(BigInt::from).product();
        acc * BigInt::from(i).pow(m) * fact
    })
}

pub const MAX_ORACLE_N: usize = 7;

/// The cyclic `S_n`-submodule of `(k^r)^{⊗n}` generated by `v_1 ⊗ … ⊗ v_n`.
#[derive(Clone, Debug)]
pub struct SnModule {
    pub n: usize,
    pub r: usize,
    /// Reduced echelon basis; `pivots[i]` is the leading coordinate of `basis[i]`.
    pub basis: Vec<Vec<BigRational>>,
    pub pivots: Vec<usize>,
    /// Trace of a representative of each cycle type.
    pub class_traces: BTreeMap<Partition, BigInt>,
}

impl SnModule {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Serialize, Deserialize)]
struct SnModuleJson {
    n: usize,
    r: usize,
    dimension: usize,
    class_traces: Vec<(Partition, String)>,
}

impl Serialize for SnModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SnModuleJson {
            n: self.n,
            r: self.r,
            dimension: self.dimension(),
            class_traces: self
                .class_traces
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

/// Coordinates of `(k^r)^{⊗n}` are base-`r` digit strings, position 0 most significant.
fn digits(mut idx: usize, r: usize, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for k in (0..n).rev() {
        d[k] = idx % r;
        idx /= r;
    }
    d
}

fn index_of(d: &[usize], r: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * r + x)
}

/// `σ` moves tensor factor `k` to position `σ(k)`.
fn act(sigma: &[usize], x: &[BigRational], r: usize) -> Vec<BigRational> {
    let n = sigma.len();
    let mut out = vec![BigRational::zero(); x.len()];
    for (idx, v) in x.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let d = digits(idx, r, n);
        let mut e = vec![0; n];
        for k in 0..n {
            e[sigma[k]] = d[k];
        }
        out[index_of(&e, r)] = v.clone();
    }
    out
}

fn permutation_of_type(class: &Partition) -> Vec<usize> {
    let n = class.size() as usize;
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in class.parts() {
        let len = len as usize;
        for k in 0..len {
            sigma[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    sigma
}

/// Inserts `x` into a reduced echelon basis; returns false if dependent.
fn insert_reduced(
    basis: &mut Vec<Vec<BigRational>>,
    pivots: &mut Vec<usize>,
    mut x: Vec<BigRational>,
) -> bool {
    for (b, &p) in basis.iter().zip(pivots.iter()) {
        if !x[p].is_zero() {
            let f = x[p].clone();
            for (xi, bi) in x.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *xi -= &f * bi;
                }
            }
        }
    }
    let Some(p) = x.iter().position(|v| !v.is_zero()) else {
        return false;
    };
    let inv = x[p].recip();
    for v in x.iter_mut() {
        *v *= &inv;
    }
    for b in basis.iter_mut() {
        if !b[p].is_zero() {
            let f = b[p].clone();
            for (bi, xi) in b.iter_mut().zip(&x) {
                if !xi.is_zero() {
                    *bi -= &f * xi;
                }
            }
        }
    }
    basis.push(x);
    pivots.push(p);
    true
}

pub fn schur_weyl_module(v: &RationalMatrix) -> Result<SnModule> {
    let (r, n) = (v.rows(), v.cols());
    if n > MAX_ORACLE_N {
        return Err(Error::ResourceLimit(format!(
            "tensor oracle limited to n <= {MAX_ORACLE_N}, got {n}"
        )));
    }
    let dim = r.pow(n as u32);
    let mut generator = vec![BigRational::zero(); dim];
    for (idx, slot) in generator.iter_mut().enumerate() {
        let d = digits(idx, r, n);
        let mut acc = BigRational::one();
        for k in 0..n {
            acc *= v.get(d[k], k);
            if acc.is_zero() {
                break;
            }
        }
        *slot = acc;
    }
    let mut basis = Vec::new();
    let mut pivots = Vec::new();
    let mut sigma: Vec<usize> = (0..n).collect();
    loop {
        insert_reduced(&mut basis, &mut pivots, act(&sigma, &generator, r));
        if !crate::matroid::next_permutation(&mut sigma) {
            break;
        }
    }
    let mut class_traces = BTreeMap::new();
    for class in Partition::all_of(n as u32) {
        let s = permutation_of_type(&class);
        let mut tr = BigRational::zero();
        for (b, &p) in basis.iter().zip(&pivots) {
            tr += &act(&s, b, r)[p];
        }
        let tr =
            rational_to_integer(&tr).ok_or_else(|| Error::NonInteger(rational_to_string(&tr)))?;
        class_traces.insert(class, tr);
    }
    Ok(SnModule {
        n,
        r,
        basis,
        pivots,
        class_traces,
    })
}

/// `m_λ = Σ_ρ χ_λ(ρ) tr(ρ) / z_ρ` for every `λ ⊢ n`; zero multiplicities omitted.
pub fn sn_multiplicities(module: &SnModule) -> Result<BTreeMap<Partition, BigInt>> {
    let mut out = BTreeMap::new();
    for lambda in Partition::all_of(module.n as u32) {
        let mut acc = BigRational::zero();
        for (class, tr) in &module.class_traces {
            let chi = BigInt::from(mn(&lambda, class));
            acc += BigRational::new(chi * tr, centralizer_order(class));
        }
        let m =
            rational_to_integer(&acc).ok_or_else(|| Error::NonInteger(rational_to_string(&acc)))?;
        if !m.is_zero() {
            out.insert(lambda, m);
        }
    }
    Ok(out)
}

/// Degree of the irreducible character `χ_λ`.
pub fn specht_dimension(lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let ones = Partition::new(vec![1; n as usize]).unwrap();
    BigInt::from(mn(lambda, &ones))
}

/// Dimension of the Schur–Weyl dual `GL_r`-module: `Σ m_λ s_λ(1^r)`.
pub fn dual_gl_dimension(module: &SnModule) -> Result<BigInt> {
    Ok(sn_multiplicities(module)?
        .iter()
        .map(|(l, m)| m * crate::symfunc::schur_at_ones(l, module.r))
        .sum())
}

/// `Σ m_λ f^λ`; equals the dimension of the module itself.
pub fn specht_weighted_dimension(mult: &BTreeMap<Partition, BigInt>) -> BigInt {
    mult.iter().map(|(l, m)| m * specht_dimension(l)).sum()
}

/// A t-free expansion as a partition-to-coefficient map.
pub fn expansion_coefficients(e: &SchurExpansion) -> BTreeMap<Partition, BigInt> {
    e.t_free_coefficients()
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Whether `m_λ` is integral for every λ (it always is for a genuine module).
pub fn multiplicities_integral(module: &SnModule) -> bool {
    Partition::all_of(module.n as u32).iter().all(|lambda| {
        let num: BigInt = module
            .class_traces
            .iter()
            .map(|(class, tr)| {
                let z = centralizer_order(class);
                let fact: BigInt = (1..=module.n).map(BigInt::from).product();
                BigInt::from(mn(lambda, class)) * tr * (fact / z)
            })
            .sum();
        let fact: BigInt = (1..=module.n).map(BigInt::from).product();
        num.is_multiple_of(&fact)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::part;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn uniform_characters() {
        let c4 = char_uniform_rank2(4).unwrap();
        assert_eq!(
            expansion_coefficients(&c4),
            BTreeMap::from([
                (part(&[4]), big(1)),
                (part(&[3, 1]), big(3)),
                (part(&[2, 2]), big(1))
            ])
        );
        for n in 2..9usize {
            let d = char_uniform_rank2(n).unwrap().dimension();
            assert_eq!(d, BigInt::from((n.pow(3) + 5 * n + 6) / 6));
        }
        assert_eq!(char_rank2(&part(&[1, 1, 1, 1])).unwrap(), c4);
        let c22 = char_rank2(&part(&[2, 2])).unwrap();
        assert_eq!(
            expansion_coefficients(&c22),
            BTreeMap::from([
                (part(&[4]), big(1)),
                (part(&[3, 1]), big(1)),
                (part(&[2, 2]), big(1))
            ])
        );
        let c31 = char_rank2(&part(&[3, 1])).unwrap();
        assert_eq!(
            expansion_coefficients(&c31),
            BTreeMap::from([(part(&[4]), big(1)), (part(&[3, 1]), big(1))])
        );
        assert!(char_rank2(&part(&[4])).is_err());
    }

    #[test]
    fn characters() {
        assert_eq!(mn_character(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&part(&[1, 1, 1]), &part(&[2, 1])).unwrap(), -1);
        assert_eq!(mn_character(&part(&[3]), &part(&[3])).unwrap(), 1);
        assert_eq!(mn_character(&part(&[2, 2]), &part(&[3, 1])).unwrap(), -1);
        assert!(mn_character(&part(&[2]), &part(&[1])).is_err());
        assert_eq!(specht_dimension(&part(&[3, 2])), big(5));
        assert_eq!(centralizer_order(&part(&[2, 1, 1])), big(4));
    }

    #[test]
    fn hooks_and_identity() {
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(hook_multiplicity_nbc(&u24, 1).unwrap(), 1);
        assert_eq!(hook_multiplicity_nbc(&u24, 2).unwrap(), 3);
        assert_eq!(hook_multiplicity_nbc(&u24, 3).unwrap(), 0);
        assert_eq!(
            hook_multiplicity_nbc(&Matroid::uniform(1, 3), 1).unwrap(),
            1
        );
        let (l, r) = hook_generating_identity(&u24).unwrap();
        assert_eq!(l, vec![big(1), big(4), big(3)]);
        assert_eq!(l, r);
        let (l, r) = hook_generating_identity(&Matroid::uniform(1, 1)).unwrap();
        assert_eq!((l.clone(), r), (vec![big(1), big(1)], vec![big(1), big(1)]));
        assert!(hook_generating_identity(&Matroid::uniform(0, 1)).is_err());
    }

    #[test]
    fn support() {
        let u24 = Matroid::uniform(2, 4);
        assert!(support_test(&u24, &part(&[3, 1])).unwrap());
        assert!(!support_test(&u24, &part(&[2, 1, 1])).unwrap());
        assert!(support_test(&u24, &part(&[2, 2])).unwrap());
    }

    #[test]
    fn schur_weyl_oracle() {
        let v = RationalMatrix::from_i64(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]);
        let module = schur_weyl_module(&v).unwrap();
        let mult = sn_multiplicities(&module).unwrap();
        assert_eq!(
            mult,
            BTreeMap::from([
                (part(&[4]), big(1)),
                (part(&[3, 1]), big(3)),
                (part(&[2, 2]), big(1))
            ])
        );
        assert_eq!(module.dimension(), 12);
        assert_eq!(specht_weighted_dimension(&mult), big(12));
        assert_eq!(dual_gl_dimension(&module).unwrap(), big(15));
        let same =
            schur_weyl_module(&RationalMatrix::from_i64(&[vec![1, 1, 1], vec![2, 2, 2]])).unwrap();
        assert_eq!(same.dimension(), 1);
        assert_eq!(
            sn_multiplicities(&same).unwrap(),
            BTreeMap::from([(part(&[3]), big(1))])
        );
        let pairs = schur_weyl_module(&RationalMatrix::from_i64(&[
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1],
        ]))
        .unwrap();
        assert_eq!(pairs.dimension(), 6);
        let mult = sn_multiplicities(&pairs).unwrap();
        assert_eq!(
            mult,
            expansion_coefficients(&char_rank2(&part(&[2, 2])).unwrap())
        );
        assert!(multiplicities_integral(&pairs));
    }
}
