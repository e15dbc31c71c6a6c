//! Schur polynomials, straightening and Littlewood–Richardson coefficients.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::exactpoly::{LaurentPoly, Ring};

type WeightTable = Arc<Vec<(Vec<u32>, u64)>>;

fn weight_cache() -> &'static RwLock<HashMap<(Partition, usize), WeightTable>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, usize), WeightTable>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Monomial expansion of `s_λ(x_1..x_m)`: each content vector with its Kostka number.
pub fn ssyt_weights(lambda: &Partition, m: usize) -> WeightTable {
    let key = (lambda.clone(), m);
    if let Some(hit) = weight_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let table = Arc::new(enumerate_ssyt(lambda, m));
    weight_cache().write().unwrap().insert(key, table.clone());
    table
}

fn enumerate_ssyt(lambda: &Partition, m: usize) -> Vec<(Vec<u32>, u64)> {
    if lambda.len() > m {
        return Vec::new();
    }
    let shape = lambda.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut content = vec![0u32; m];
    let mut acc: BTreeMap<Vec<u32>, u64> = BTreeMap::new();

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        m: usize,
        acc: &mut BTreeMap<Vec<u32>, u64>,
    ) {
        if k == cells.len() {
            *acc.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(grid[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(grid[i - 1][j] + 1);
        }
        for v in lo..=m as u32 {
            grid[i][j] = v;
            content[(v - 1) as usize] += 1;
            rec(k + 1, cells, grid, content, m, acc);
            content[(v - 1) as usize] -= 1;
        }
    }
    rec(0, &cells, &mut grid, &mut content, m, &mut acc);
    acc.into_iter().collect()
}

/// `s_λ(u_1..u_m)` as a polynomial in the ring with `m` u-variables and no t.
pub fn schur_poly(lambda: &Partition, m: usize) -> LaurentPoly {
    let ring = Ring::new(m, 0);
    schur_poly_in(lambda, ring, &(0..m).collect::<Vec<_>>())
}

/// `s_λ` in the listed variable slots of `ring`.
pub fn schur_poly_in(lambda: &Partition, ring: Ring, slots: &[usize]) -> LaurentPoly {
    let mut p = LaurentPoly::zero(ring);
    for (w, c) in ssyt_weights(lambda, slots.len()).iter() {
        let mut e = vec![0; ring.width()];
        for (k, &s) in slots.iter().enumerate() {
            e[s] += w[k] as i32;
        }
        p.add_term(e, BigInt::from(*c));
    }
    p
}

/// Straightens `det(x_i^{a_j + m - j}) / det(x_i^{m - j})` for `m = seq.len()`.
///
/// Returns `None` when two shifted exponents coincide, otherwise the sign of the
/// sorting permutation together with the normalized partition.
pub fn schur_straighten(seq: &[i64]) -> Result<Option<(i32, Partition)>> {
    let m = seq.len() as i64;
    let mut shifted: Vec<i64> = seq
        .iter()
        .enumerate()
        .map(|(j, &a)| a + m - 1 - j as i64)
        .collect();
    // Selection-style bubble sort, counting transpositions.
    let mut sign = 1;
    for i in 0..shifted.len() {
        for j in 0..shifted.len() - 1 - i {
            if shifted[j] < shifted[j + 1] {
                shifted.swap(j, j + 1);
                sign = -sign;
            } else if shifted[j] == shifted[j + 1] {
                return Ok(None);
            }
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    let parts: Vec<i64> = shifted
        .iter()
        .enumerate()
        .map(|(j, &a)| a - (m - 1 - j as i64))
        .collect();
    if parts.iter().any(|&p| p < 0) {
        return Err(Error::InvalidPartition(format!(
            "straightening {seq:?} leaves negative parts"
        )));
    }
    Ok(Some((
        sign,
        Partition::new(parts.into_iter().map(|p| p as u32).collect())?,
    )))
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The Littlewood–Richardson coefficient `c^ν_{λμ}`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&hit) = lr_cache().read().unwrap().get(&key) {
        return hit;
    }
    let value = count_lr_tableaux(lambda, mu, nu);
    lr_cache().write().unwrap().insert(key, value);
    value
}

/// Counts semistandard fillings of `ν/λ` with content `μ` whose reverse
/// reading word is a lattice word.
fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let rows = nu.len();
    // Reading order: rows top to bottom, each row right to left.
    let mut cells = Vec::new();
    for i in 0..rows {
        for j in (lambda[i] as usize..nu[i] as usize).rev() {
            cells.push((i, j));
        }
    }
    let mut grid: Vec<Vec<u32>> = (0..rows).map(|i| vec![0; nu[i] as usize]).collect();
    let mut count = vec![0u32; mu.len() + 1];

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        count: &mut Vec<u32>,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if i > 0 && j >= lambda[i - 1] as usize {
            lo = grid[i - 1][j] + 1;
        }
        let mut hi = mu.len() as u32;
        if j + 1 < nu[i] as usize {
            hi = hi.min(grid[i][j + 1]);
        }
        let mut total = 0;
        for v in lo..=hi {
            let vi = v as usize;
            if count[vi] >= mu[vi - 1] {
                continue;
            }
            if vi > 1 && count[vi] + 1 > count[vi - 1] {
                continue;
            }
            grid[i][j] = v;
            count[vi] += 1;
            total += rec(k + 1, cells, grid, count, lambda, mu, nu);
            count[vi] -= 1;
        }
        total
    }
    rec(0, &cells, &mut grid, &mut count, lambda, mu, nu)
}

type ProductKey = (Partition, Partition, usize);

fn product_cache() -> &'static RwLock<HashMap<ProductKey, Arc<Vec<(Partition, u64)>>>> {
    static CACHE: OnceLock<RwLock<HashMap<ProductKey, Arc<Vec<(Partition, u64)>>>>> =
        OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s_λ s_μ = Σ_ν c^ν_{λμ} s_ν`, keeping only `ν` with at most `max_len` parts.
pub fn lr_product(
    lambda: &Partition,
    mu: &Partition,
    max_len: usize,
) -> Arc<Vec<(Partition, u64)>> {
    let (a, b) = if lambda <= mu {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let max_len = max_len.min(a.len() + b.len());
    let key = (a.clone(), b.clone(), max_len);
    if let Some(hit) = product_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let total = a.size() + b.size();
    let mut out = Vec::new();
    for nu in containing(a, b, total, max_len) {
        let c = lr_coeff(a, b, &nu);
        if c != 0 {
            out.push((nu, c));
        }
    }
    let out = Arc::new(out);
    product_cache().write().unwrap().insert(key, out.clone());
    out
}

/// Partitions of `total` with at most `max_len` parts containing both `a` and `b`.
fn containing(a: &Partition, b: &Partition, total: u32, max_len: usize) -> Vec<Partition> {
    let cap = a[0] + b[0];
    let mut out = Vec::new();
    fn rec(
        i: usize,
        left: u32,
        prev: u32,
        a: &Partition,
        b: &Partition,
        max_len: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if left == 0 {
            if i >= a.len() && i >= b.len() {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        if i == max_len {
            return;
        }
        let lo = a[i].max(b[i]).max(1);
        for p in (lo..=prev.min(left)).rev() {
            cur.push(p);
            rec(i + 1, left - p, p, a, b, max_len, cur, out);
            cur.pop();
        }
    }
    rec(0, total, cap, a, b, max_len, &mut Vec::new(), &mut out);
    out
}

/// `s_ν(X_1 ∪ … ∪ X_k) = Σ Π_i s_{λ^i}(X_i)` with LR multiplicities.
///
/// `sizes[i]` bounds the number of variables in the i-th alphabet
/// (`None` for an unbounded alphabet); terms that would vanish are dropped.
pub fn schur_of_union(nu: &Partition, sizes: &[Option<usize>]) -> BTreeMap<Vec<Partition>, BigInt> {
    let mut out = BTreeMap::new();
    if sizes.is_empty() {
        if nu.is_empty() {
            out.insert(Vec::new(), BigInt::from(1));
        }
        return out;
    }
    let fits = |p: &Partition, s: Option<usize>| s.map_or(true, |s| p.len() <= s);
    if sizes.len() == 1 {
        if fits(nu, sizes[0]) {
            out.insert(vec![nu.clone()], BigInt::from(1));
        }
        return out;
    }
    for lam in nu.subpartitions() {
        if !fits(&lam, sizes[0]) {
            continue;
        }
        let rest_size = nu.size() - lam.size();
        for mu in Partition::all_of(rest_size) {
            let c = lr_coeff(&lam, &mu, nu);
            if c == 0 {
                continue;
            }
            for (tail, k) in schur_of_union(&mu, &sizes[1..]) {
                let mut key = vec![lam.clone()];
                key.extend(tail);
                *out.entry(key).or_insert_with(BigInt::default) += k * BigInt::from(c);
            }
        }
    }
    out
}

/// Number of SSYT of shape `λ` with entries at most `m`, i.e. `s_λ(1^m)`,
/// by the hook-content formula.
pub fn schur_at_ones(lambda: &Partition, m: usize) -> BigInt {
    use num_rational::BigRational;
    if lambda.len() > m {
        return BigInt::from(0);
    }
    let conj = lambda.transpose();
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = m as i64 + j as i64 - i as i64;
            let hook = (row as i64 - j as i64) + (conj[j] as i64 - i as i64) - 1;
            acc *= BigRational::new(BigInt::from(content), BigInt::from(hook));
        }
    }
    acc.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::partition::part;

    #[test]
    fn schur_polys_small() {
        let r2 = Ring::new(2, 0);
        assert_eq!(
            schur_poly(&part(&[1]), 2),
            LaurentPoly::parse(r2, "1 * u1 + 1 * u2").unwrap()
        );
        assert!(schur_poly(&part(&[1, 1, 1]), 2).is_zero());
        assert_eq!(
            schur_poly(&part(&[2, 1]), 2),
            LaurentPoly::parse(r2, "1 * u1^2 u2 + 1 * u1 u2^2").unwrap()
        );
        assert_eq!(
            schur_poly(&Partition::empty(), 3),
            LaurentPoly::one(Ring::new(3, 0))
        );
    }

    #[test]
    fn straightening() {
        assert_eq!(
            schur_straighten(&[0, 0]).unwrap(),
            Some((1, Partition::empty()))
        );
        assert_eq!(schur_straighten(&[0, 1]).unwrap(), None);
        assert_eq!(
            schur_straighten(&[0, 2]).unwrap(),
            Some((-1, part(&[1, 1])))
        );
        assert_eq!(
            schur_straighten(&[0, 0, 3]).unwrap(),
            Some((1, part(&[1, 1, 1])))
        );
        assert_eq!(schur_straighten(&[2, 1]).unwrap(), Some((1, part(&[2, 1]))));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&part(&[1]), &part(&[1]), &part(&[2])), 1);
        assert_eq!(lr_coeff(&part(&[1, 1]), &part(&[1]), &part(&[2, 1])), 1);
        assert_eq!(lr_coeff(&part(&[1, 1]), &part(&[1]), &part(&[3])), 0);
        assert_eq!(
            lr_coeff(&part(&[2, 1]), &part(&[2, 1]), &part(&[3, 2, 1])),
            2
        );
    }

    #[test]
    fn union_expansions() {
        let u = schur_of_union(&part(&[1]), &[Some(2), Some(4)]);
        assert_eq!(u.len(), 2);
        let two = schur_of_union(&part(&[2]), &[None, None]);
        assert_eq!(two.len(), 3);
        assert_eq!(two[&vec![part(&[1]), part(&[1])]], BigInt::from(1));
        let three = schur_of_union(&part(&[1]), &[Some(2), Some(2), Some(4)]);
        assert_eq!(three.len(), 3);
        assert!(three.values().all(|c| *c == BigInt::from(1)));
    }

    #[test]
    fn hook_content() {
        assert_eq!(schur_at_ones(&part(&[2]), 2), BigInt::from(3));
        assert_eq!(schur_at_ones(&part(&[2, 2]), 2), BigInt::from(1));
        assert_eq!(schur_at_ones(&part(&[2, 1]), 3), BigInt::from(8));
        for lam in Partition::all_of(4) {
            let direct: u64 = ssyt_weights(&lam, 3).iter().map(|(_, c)| c).sum();
            assert_eq!(schur_at_ones(&lam, 3), BigInt::from(direct));
        }
    }
}
