//! Equivariant cohomology: multidegrees, the class of a uniform torus orbit
//! closure, fixed-point localizations and the GKM edge conditions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{rational_to_integer, LaurentPoly, Ring};
use crate::matroid::{elements, Matroid, RationalMatrix};
use crate::rng;
use crate::symfunc::{
    lr_coeff, lr_product, mul_elementary_t, schur_at_ones, schur_expand, schur_of_union,
    schur_straighten, ssyt_weights, Partition, SchurExpansion,
};

/// The degree-`codim` part of `E(1 − u, 1 − t)`, expanded in Schur polynomials.
/// Lower-degree terms signal a wrong codimension and are an error.
pub fn multidegree(e: &SchurExpansion, codim: usize) -> Result<SchurExpansion> {
    let p = e.to_poly().substitute_affine_upto(codim as i32)?;
    if let Some(d) = p.min_degree() {
        if d < codim as i32 {
            return Err(Error::BelowCodim(codim));
        }
    }
    schur_expand(&p.homogeneous_part(codim as i32))
}

/// `rn − (r² + n − c)` where `c` counts connected components (loops included).
pub fn codim_matrix_orbit(m: &Matroid, r: usize) -> Result<usize> {
    if m.rank() != r {
        return Err(Error::RankMismatch {
            expected: r,
            found: m.rank(),
        });
    }
    let (n, c) = (m.n(), m.connected_components().len());
    Ok(r * n + c - r * r - n)
}

/// Codimension of the torus orbit closure in the Grassmannian: `r(n − r) − (n − c)`.
pub fn codim_grassmannian_orbit(m: &Matroid) -> usize {
    let (r, n, c) = (m.rank(), m.n(), m.connected_components().len());
    r * (n - r) + c - n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bundle {
    /// Dual of the tautological subbundle.
    SubDual,
    Quotient,
}

/// `s_λ` of the Chern roots of a tautological bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagBundleSymbol {
    pub bundle: Bundle,
    pub lambda: Partition,
}

/// `Σ_λ s_λ(S^∨) s_{λ̃'}(Q)` (quotient factor stored already transposed) together with its image in `(u, t)` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformClass {
    pub r: usize,
    pub n: usize,
    pub grassmannian: Vec<(FlagBundleSymbol, FlagBundleSymbol)>,
    pub ut_form: SchurExpansion,
    /// `ut_form` rewritten with every `λ_1 ≤ n − r`.
    pub section_form: SchurExpansion,
}

fn check_rn(r: usize, n: usize) -> Result<()> {
    if r < 2 || r >= n {
        return Err(Error::Hypothesis(format!(
            "need 2 <= r < n, got r={r}, n={n}"
        )));
    }
    Ok(())
}

/// Pairs `(λ, λ̃)` with `λ` in the `(r−1) × (n−r−1)` box and `λ̃` its rotated complement.
pub fn complement_pairs(r: usize, n: usize) -> Result<Vec<(Partition, Partition)>> {
    check_rn(r, n)?;
    let (rows, cols) = (r - 1, (n - r - 1) as u32);
    Partition::rectangle(rows, cols)
        .subpartitions()
        .into_iter()
        .map(|l| {
            let c = l.rotated_complement(rows, cols)?;
            Ok((l, c))
        })
        .collect()
}

/// Adds `c · s_λ(u) · s_κ(t_1..t_n)` to `out`, expanding the t-factor in monomials.
fn add_with_t_schur(out: &mut SchurExpansion, lambda: &Partition, kappa: &Partition, c: &BigInt) {
    let n = out.n();
    for (w, k) in ssyt_weights(kappa, n).iter() {
        let a: Vec<i32> = w.iter().map(|&x| x as i32).collect();
        out.add_term(lambda.clone(), a, c * BigInt::from(*k));
    }
}

/// `Σ_{λ, μ, ν} c^{λ̃}_{μν} s_λ(u) s_{μ'}(t) s_ν(u)`.
pub fn uniform_class_ut(r: usize, n: usize) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::zero(r, n);
    for (lambda, tilde) in complement_pairs(r, n)? {
        for mu in tilde.subpartitions() {
            for nu in Partition::all_of(tilde.size() - mu.size()) {
                let c = lr_coeff(&mu, &nu, &tilde);
                if c == 0 {
                    continue;
                }
                for (kappa, k) in lr_product(&lambda, &nu, r).iter() {
                    add_with_t_schur(&mut out, kappa, &mu.transpose(), &BigInt::from(c * k));
                }
            }
        }
    }
    Ok(out)
}

/// `ω(s_{(r−1)^{n−r−1}}(u, u, t))` with `ω` acting on the two u-alphabets:
/// expand over the three alphabets and transpose the u-factors only.
/// Transposing the t-factor as well gives a different (wrong) class from `n = 5` on.
pub fn uniform_class_omega(r: usize, n: usize) -> Result<SchurExpansion> {
    check_rn(r, n)?;
    let nu = Partition::rectangle(n - r - 1, (r - 1) as u32);
    let mut out = SchurExpansion::zero(r, n);
    for (parts, c) in schur_of_union(&nu, &[None, None, None]) {
        let (a, b, t) = (parts[0].transpose(), parts[1].transpose(), parts[2].clone());
        for (kappa, k) in lr_product(&a, &b, r).iter() {
            add_with_t_schur(&mut out, kappa, &t, &(&c * BigInt::from(*k)));
        }
    }
    Ok(out)
}

pub fn uniform_class_grassmannian(r: usize, n: usize) -> Result<UniformClass> {
    let grassmannian = complement_pairs(r, n)?
        .into_iter()
        .map(|(l, c)| {
            (
                FlagBundleSymbol {
                    bundle: Bundle::SubDual,
                    lambda: l,
                },
                FlagBundleSymbol {
                    bundle: Bundle::Quotient,
                    lambda: c.transpose(),
                },
            )
        })
        .collect();
    let ut_form = uniform_class_ut(r, n)?;
    let section_form = reduce_to_box(&ut_form, (n - r) as u32)?;
    Ok(UniformClass {
        r,
        n,
        grassmannian,
        ut_form,
        section_form,
    })
}

/// The uniform class with every Schur term inside the `r × (n − r)` box.
///
/// Agrees with `uniform_class_ut` unless `r ≥ 3` and `n − r ≥ 3`; there the
/// (u,t) display also carries classes supported on rank-deficient matrices.
pub fn uniform_class_section(r: usize, n: usize) -> Result<SchurExpansion> {
    reduce_to_box(&uniform_class_ut(r, n)?, (n - r) as u32)
}

/// Rewrites `e` so every `s_λ(u)` has `λ_1 ≤ cols`, modulo the relations
/// `c_m(Q) = Σ_j h_{m−j}(u) e_j(t) = 0` for `m > cols`.
///
/// The first Jacobi–Trudi row of an offending `s_κ` is replaced termwise,
/// giving `s_κ ≡ −Σ_{l ≥ 1} e_l(t) s_{(κ_1 − l, κ_2, …)}`; u-degree drops each round.
/// Restrictions to the Grassmannian fixed points are unchanged.
pub fn reduce_to_box(e: &SchurExpansion, cols: u32) -> Result<SchurExpansion> {
    let (r, n) = (e.r(), e.n());
    let mut out = SchurExpansion::zero(r, n);
    let mut pending = e.clone();
    while !pending.is_zero() {
        let mut next = SchurExpansion::zero(r, n);
        for (kappa, a, c) in pending.terms() {
            if kappa.parts().first().map_or(true, |&k| k <= cols) {
                out.add_term(kappa.clone(), a.clone(), c.clone());
                continue;
            }
            let base: Vec<i64> = kappa.padded(r).iter().map(|&x| i64::from(x)).collect();
            for l in 1..=n {
                let mut seq = base.clone();
                seq[0] -= l as i64;
                // A negative last part after sorting is a zero row of the determinant.
                let Ok(Some((sign, p))) = schur_straighten(&seq) else {
                    continue;
                };
                let term = SchurExpansion::term(r, n, p, a.clone(), -c * BigInt::from(sign));
                next = next.checked_add(&mul_elementary_t(&term, l))?;
            }
        }
        pending = next;
    }
    Ok(out)
}

/// `Σ_λ s_λ(1^r) s_λ̃(1^r)`.
pub fn degree_uniform(r: usize, n: usize) -> Result<BigInt> {
    Ok(complement_pairs(r, n)?
        .iter()
        .map(|(l, c)| schur_at_ones(l, r) * schur_at_ones(c, r))
        .sum())
}

/// Specializes a class at `u = (1, …, 1)`, `t = 0`.
pub fn degree_of_class(c: &SchurExpansion) -> BigInt {
    c.t_free_coefficients()
        .iter()
        .map(|(l, k)| k * schur_at_ones(l, c.r()))
        .sum()
}

/// Restrictions to the torus-fixed points of the Grassmannian, keyed by the
/// bitmask of an `r`-subset; absent keys mean zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization {
    pub r: usize,
    pub n: usize,
    pub entries: BTreeMap<u32, LaurentPoly>,
}

impl Localization {
    pub fn get(&self, b: u32) -> LaurentPoly {
        self.entries
            .get(&b)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(Ring::new(0, self.n)))
    }

    pub fn subsets(&self) -> Vec<u32> {
        (0u32..1 << self.n)
            .filter(|b| b.count_ones() as usize == self.r)
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .subsets()
            .into_iter()
            .map(|b| {
                serde_json::json!({
                    "B": elements(b).iter().map(|e| e + 1).collect::<Vec<_>>(),
                    "value": self.get(b).to_string(),
                })
            })
            .collect();
        serde_json::json!({"r": self.r, "n": self.n, "entries": rows})
    }
}

/// `s_λ(−t_i : i ∈ B) · s_κ(t_j : j ∉ B)` as a polynomial in `t_1..t_n`.
fn schur_pair_at(lambda: &Partition, kappa: &Partition, b: u32, n: usize) -> LaurentPoly {
    let ring = Ring::new(0, n);
    let inside = elements(b);
    let outside = elements(!b & ((1u32 << n) - 1));
    let sign = BigInt::from(if lambda.size() % 2 == 0 { 1 } else { -1 });
    let embed = |slots: &[usize], p: &Partition| {
        LaurentPoly::from_terms(
            ring,
            ssyt_weights(p, slots.len()).iter().map(|(w, k)| {
                let mut e = vec![0i32; ring.width()];
                for (pos, &x) in w.iter().enumerate() {
                    e[ring.t(slots[pos] + 1)] = x as i32;
                }
                (e, BigInt::from(*k))
            }),
        )
    };
    (&embed(&inside, lambda) * &embed(&outside, kappa)).scale(&sign)
}

/// `f_B = Σ_λ s_λ(−t_B) s_{λ̃'}(t_{B^c})` for every `r`-subset `B`.
///
/// The quotient factor is indexed by the transposed complement; with `λ̃`
/// itself the restrictions disagree with the orbit sums from `n − r ≥ 3` on.
pub fn localize_uniform_grassmannian(r: usize, n: usize) -> Result<Localization> {
    let pairs = complement_pairs(r, n)?;
    let mut entries = BTreeMap::new();
    for b in (0u32..1 << n).filter(|b| b.count_ones() as usize == r) {
        let mut f = LaurentPoly::zero(Ring::new(0, n));
        for (l, c) in &pairs {
            f = &f + &schur_pair_at(l, &c.transpose(), b, n);
        }
        entries.insert(b, f);
    }
    Ok(Localization { r, n, entries })
}

/// Substitutes `u_k ↦ −t_{B_k}` in a `(u, t)` class.
pub fn localize_ut_form(e: &SchurExpansion, b: u32) -> Result<LaurentPoly> {
    let (r, n) = (e.r(), e.n());
    let bs = elements(b);
    if bs.len() != r || b >> n != 0 {
        return Err(Error::SizeMismatch(bs.len(), r));
    }
    let ring = Ring::new(0, n);
    let mut out = LaurentPoly::zero(ring);
    for (ex, c) in e.to_poly().terms() {
        let mut ne = vec![0i32; ring.width()];
        let mut sign = 1;
        for (k, &i) in bs.iter().enumerate() {
            ne[ring.t(i + 1)] += ex[k];
            if ex[k] % 2 != 0 {
                sign = -sign;
            }
        }
        for j in 0..n {
            ne[ring.t(j + 1)] += ex[r + j];
        }
        out.add_term(ne, c * BigInt::from(sign));
    }
    Ok(out)
}

pub fn localize_ut_class(e: &SchurExpansion) -> Result<Localization> {
    let (r, n) = (e.r(), e.n());
    let mut entries = BTreeMap::new();
    for b in (0u32..1 << n).filter(|b| b.count_ones() as usize == r) {
        entries.insert(b, localize_ut_form(e, b)?);
    }
    Ok(Localization { r, n, entries })
}

fn check_point(t: &[BigRational], n: usize) -> Result<()> {
    if t.len() != n {
        return Err(Error::SizeMismatch(t.len(), n));
    }
    for i in 0..n {
        for j in i + 1..n {
            if t[i] == t[j] {
                return Err(Error::DegeneratePoint);
            }
        }
    }
    Ok(())
}

fn prefactor(b: u32, t: &[BigRational], k_theory: bool) -> BigRational {
    let n = t.len();
    let mut acc = BigRational::one();
    for i in elements(b) {
        for j in (0..n).filter(|j| b >> j & 1 == 0) {
            acc *= if k_theory {
                BigRational::one() - &t[j] / &t[i]
            } else {
                &t[j] - &t[i]
            };
        }
    }
    acc
}

/// The grouped form of the fixed-point restriction for a uniform matroid:
/// `∏_{i∈B, j∉B}(t_j − t_i) · Σ_{a∈B} ∏_{i∈B∖a} 1/(t_a − t_i) · ∏_{j∉B} 1/(t_j − t_a)`.
pub fn localize_uniform_closed(
    b: &[usize],
    r: usize,
    n: usize,
    t: &[BigRational],
) -> Result<BigRational> {
    check_point(t, n)?;
    if b.len() != r || b.iter().any(|&i| i >= n) {
        return Err(Error::SizeMismatch(b.len(), r));
    }
    let mask = b.iter().fold(0u32, |m, &i| m | 1 << i);
    let mut sum = BigRational::zero();
    for &a in b {
        let mut term = BigRational::one();
        for &i in b.iter().filter(|&&i| i != a) {
            term /= &t[a] - &t[i];
        }
        for j in (0..n).filter(|j| mask >> j & 1 == 0) {
            term /= &t[j] - &t[a];
        }
        sum += term;
    }
    Ok(prefactor(mask, t, false) * sum)
}

pub const MAX_PERMUTATION_N: usize = 9;

/// Sums `1 / ∏_s step(i_s, i_{s+1})` over orderings of `[n]` whose greedy
/// (lex-first) basis is `B`.
fn ordered_sum<F: Fn(usize, usize) -> BigRational>(
    m: &Matroid,
    b: u32,
    step: F,
) -> Result<BigRational> {
    let n = m.n();
    if n > MAX_PERMUTATION_N {
        return Err(Error::ResourceLimit(format!(
            "permutation sum over {n} elements"
        )));
    }
    if n == 0 {
        return Ok(BigRational::one());
    }
    fn rec<F: Fn(usize, usize) -> BigRational>(
        m: &Matroid,
        b: u32,
        step: &F,
        last: usize,
        used: u32,
        basis: u32,
        denom: BigRational,
        acc: &mut BigRational,
    ) {
        if used == m.ground() {
            if basis == b {
                *acc += denom.recip();
            }
            return;
        }
        for e in 0..m.n() {
            if used >> e & 1 == 1 {
                continue;
            }
            let mut nb = basis;
            if m.is_independent(basis | 1 << e) {
                if b >> e & 1 == 0 {
                    continue;
                }
                nb |= 1 << e;
            }
            rec(
                m,
                b,
                step,
                e,
                used | 1 << e,
                nb,
                &denom * step(last, e),
                acc,
            );
        }
    }
    let mut acc = BigRational::zero();
    for first in 0..n {
        let basis = if m.is_independent(1 << first) {
            1u32 << first
        } else {
            0
        };
        if basis & !b != 0 {
            continue;
        }
        rec(
            m,
            b,
            &step,
            first,
            1 << first,
            basis,
            BigRational::one(),
            &mut acc,
        );
    }
    Ok(acc)
}

/// Restriction of the torus orbit closure class at `x_B`, summing over orderings
/// with lex-first basis `B` and consecutive differences `t_{i_{s+1}} − t_{i_s}`.
///
/// The sum has degree `r(n − r) − (n − 1)`, the codimension of an orbit of a
/// connected matroid; for disconnected matroids other than `n = r` it vanishes.
pub fn localize_orbit_via_permutations(
    m: &Matroid,
    b: u32,
    t: &[BigRational],
) -> Result<BigRational> {
    check_point(t, m.n())?;
    if !m.is_basis(b) {
        return Ok(BigRational::zero());
    }
    // The Grassmannian is a point; the sum below only sees orbits of dimension n − 1.
    if m.n() == m.rank() {
        return Ok(BigRational::one());
    }
    let sum = ordered_sum(m, b, |a, c| &t[c] - &t[a])?;
    Ok(prefactor(b, t, false) * sum)
}

/// The K-theoretic restriction at `x_B`:
/// `∏_{i∈B, j∉B}(1 − t_j/t_i) · Σ 1/∏_s(1 − t_{i_{s+1}}/t_{i_s})`.
pub fn klocalize_orbit(m: &Matroid, b: u32, t: &[BigRational]) -> Result<BigRational> {
    check_point(t, m.n())?;
    if t.iter().any(|x| x.is_zero()) {
        return Err(Error::DegeneratePoint);
    }
    if !m.is_basis(b) {
        return Ok(BigRational::zero());
    }
    let sum = ordered_sum(m, b, |a, c| BigRational::one() - &t[c] / &t[a])?;
    Ok(prefactor(b, t, true) * sum)
}

/// `klocalize_orbit` at `t_i = 1 − ε τ_i`, divided by `ε^{r(n−r) − (n−1)}`.
/// As `ε → 0` this tends to the cohomological restriction at `τ`.
pub fn klocalize_scaled(
    m: &Matroid,
    b: u32,
    tau: &[BigRational],
    eps: &BigRational,
) -> Result<BigRational> {
    let t: Vec<BigRational> = tau.iter().map(|x| BigRational::one() - eps * x).collect();
    let value = klocalize_orbit(m, b, &t)?;
    let (r, n) = (m.rank() as i32, m.n() as i32);
    let order = r * (n - r) - (n - 1);
    Ok(value / crate::exactpoly::pow_rational(eps, order))
}

/// Exact interpolation of a polynomial in `t_1..t_n` of degree at most
/// `degree` from values at seeded random points. Coefficients must be integers.
pub fn interpolate<F: FnMut(&[BigRational]) -> Result<BigRational>>(
    n: usize,
    degree: usize,
    seed: u64,
    mut f: F,
) -> Result<LaurentPoly> {
    let ring = Ring::new(0, n);
    let monos = monomials(n, degree);
    let m = monos.len();
    let rows = m + 4;
    let mut gen = rng::seeded(seed);
    let mut entries = Vec::with_capacity(rows * (m + 1));
    for _ in 0..rows {
        let pt = rng::distinct_point(&mut gen, n);
        for mono in &monos {
            let mut v = BigRational::one();
            for (x, &k) in pt.iter().zip(mono) {
                v *= crate::exactpoly::pow_rational(x, k);
            }
            entries.push(v);
        }
        entries.push(f(&pt)?);
    }
    let aug = RationalMatrix::new(rows, m + 1, entries)?;
    let (red, pivots) = aug.rref();
    if pivots.contains(&m) {
        return Err(Error::Interpolation(format!(
            "values are not a polynomial of degree <= {degree}"
        )));
    }
    if pivots.len() < m {
        return Err(Error::Interpolation("insufficient points".into()));
    }
    let mut out = LaurentPoly::zero(ring);
    for (row, &col) in pivots.iter().enumerate() {
        let c = red.get(row, m);
        let c = rational_to_integer(c)
            .ok_or_else(|| Error::NonInteger(crate::exactpoly::rational_to_string(c)))?;
        let mut e = monos[col].clone();
        e.push(0);
        out.add_term(e, c);
    }
    Ok(out)
}

fn monomials(n: usize, degree: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    fn rec(i: usize, left: i32, cur: &mut Vec<i32>, n: usize, out: &mut Vec<Vec<i32>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(i + 1, left - k, cur, n, out);
            cur.pop();
        }
    }
    rec(0, degree as i32, &mut Vec::new(), n, &mut out);
    out
}

/// Reconstructs the orbit-closure localization of a matroid from the
/// permutation sums, with degree bound equal to the orbit codimension.
pub fn interpolate_orbit_localization(m: &Matroid, seed: u64) -> Result<Localization> {
    let (r, n) = (m.rank(), m.n());
    let degree = codim_grassmannian_orbit(m);
    let mut entries = BTreeMap::new();
    for b in (0u32..1 << n).filter(|b| b.count_ones() as usize == r) {
        if !m.is_basis(b) {
            continue;
        }
        let f = interpolate(n, degree, seed ^ u64::from(b), |t| {
            localize_orbit_via_permutations(m, b, t)
        })?;
        entries.insert(b, f);
    }
    Ok(Localization { r, n, entries })
}

/// Every edge condition `f_B − f_{B ∪ j ∖ i} ∈ ⟨t_j − t_i⟩`.
pub fn gkm_check(l: &Localization) -> bool {
    gkm_failures(l).is_empty()
}

/// Edges `(B, B ∪ j ∖ i)` violating the divisibility condition.
pub fn gkm_failures(l: &Localization) -> Vec<(u32, u32)> {
    let ring = Ring::new(0, l.n);
    let mut bad = Vec::new();
    for b in l.subsets() {
        for i in elements(b) {
            for j in (0..l.n).filter(|j| b >> j & 1 == 0) {
                let other = b & !(1 << i) | 1 << j;
                if other < b {
                    continue;
                }
                let diff = &l.get(b) - &l.get(other);
                let edge = &LaurentPoly::t(ring, j + 1) - &LaurentPoly::t(ring, i + 1);
                if diff.exact_divide(&edge).is_err() {
                    bad.push((b, other));
                }
            }
        }
    }
    bad
}

/// `|a − b| / |b|`, or `|a|` when `b = 0`.
pub fn relative_error(a: &BigRational, b: &BigRational) -> BigRational {
    if b.is_zero() {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::part;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn multidegree_examples() {
        let mut e = SchurExpansion::one(2, 4);
        e.add_term(part(&[2, 2]), vec![1, 1, 1, 1], BigInt::from(-1));
        let c = multidegree(&e, 1).unwrap();
        let mut expect = SchurExpansion::term(2, 4, part(&[1]), vec![0, 0, 0, 0], BigInt::from(2));
        for j in 0..4 {
            let mut a = vec![0; 4];
            a[j] = 1;
            expect.add_term(Partition::empty(), a, BigInt::one());
        }
        assert_eq!(c, expect);
        assert_eq!(c, uniform_class_ut(2, 4).unwrap());
        assert_eq!(
            multidegree(&SchurExpansion::one(2, 3), 0).unwrap(),
            SchurExpansion::one(2, 3)
        );
        assert!(matches!(multidegree(&e, 2), Err(Error::BelowCodim(2))));
    }

    #[test]
    fn codims() {
        assert_eq!(codim_matrix_orbit(&Matroid::uniform(2, 4), 2).unwrap(), 1);
        assert_eq!(codim_matrix_orbit(&Matroid::uniform(2, 3), 2).unwrap(), 0);
        let m12 = Matroid::uniform(1, 2)
            .direct_sum(&Matroid::uniform(1, 2))
            .unwrap();
        assert_eq!(codim_matrix_orbit(&m12, 2).unwrap(), 2);
        assert!(codim_matrix_orbit(&m12, 3).is_err());
    }

    #[test]
    fn uniform_forms_agree() {
        assert_eq!(uniform_class_ut(2, 3).unwrap(), SchurExpansion::one(2, 3));
        for (r, n) in [(2, 4), (2, 5), (3, 5), (3, 6), (2, 6)] {
            assert_eq!(
                uniform_class_ut(r, n).unwrap(),
                uniform_class_omega(r, n).unwrap(),
                "r={r} n={n}"
            );
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(degree_uniform(2, 4).unwrap(), BigInt::from(4));
        assert_eq!(degree_uniform(2, 3).unwrap(), BigInt::from(1));
        assert_eq!(degree_uniform(2, 5).unwrap(), BigInt::from(10));
        assert_eq!(
            degree_of_class(&uniform_class_ut(2, 5).unwrap()),
            BigInt::from(10)
        );
    }

    #[test]
    fn localization_values() {
        let t = vec![q(1), q(2), q(3), q(4)];
        assert_eq!(localize_uniform_closed(&[0, 1], 2, 4, &t).unwrap(), q(4));
        let u24 = Matroid::uniform(2, 4);
        assert_eq!(
            localize_orbit_via_permutations(&u24, 0b0011, &t).unwrap(),
            q(4)
        );
        assert_eq!(
            localize_uniform_closed(&[0, 1], 2, 3, &t[..3]).unwrap(),
            q(1)
        );
        let m1 = Matroid::from_bases(4, 2, &[0b0101, 0b0110, 0b1001, 0b1010, 0b1100]).unwrap();
        assert!(localize_orbit_via_permutations(&m1, 0b0011, &t)
            .unwrap()
            .is_zero());
        assert!(klocalize_orbit(&m1, 0b0011, &t).unwrap().is_zero());
        let point = Matroid::uniform(2, 2);
        assert_eq!(
            localize_orbit_via_permutations(&point, 0b11, &t[..2]).unwrap(),
            q(1)
        );
        assert_eq!(klocalize_orbit(&point, 0b11, &t[..2]).unwrap(), q(1));
        assert!(matches!(
            localize_uniform_closed(&[0, 1], 2, 4, &[q(1), q(1), q(2), q(3)]),
            Err(Error::DegeneratePoint)
        ));
    }

    #[test]
    fn grassmannian_localization() {
        let l = localize_uniform_grassmannian(2, 4).unwrap();
        let ring = Ring::new(0, 4);
        assert_eq!(
            l.get(0b0011),
            LaurentPoly::parse(ring, "-1 * t1 + -1 * t2 + 1 * t3 + 1 * t4").unwrap()
        );
        assert_eq!(
            l,
            localize_ut_class(&uniform_class_ut(2, 4).unwrap()).unwrap()
        );
        assert!(gkm_check(&l));
        let mut bad = l.clone();
        bad.entries.insert(0b0011, LaurentPoly::t(ring, 1));
        assert!(!gkm_check(&bad));
    }

    #[test]
    fn interpolated_matches_symbolic() {
        let l = interpolate_orbit_localization(&Matroid::uniform(2, 4), 11).unwrap();
        assert_eq!(l, localize_uniform_grassmannian(2, 4).unwrap());
    }

    #[test]
    fn k_theoretic_limit() {
        let m = Matroid::uniform(2, 4);
        let tau = vec![q(1), q(3), q(4), q(7)];
        let target = localize_orbit_via_permutations(&m, 0b0101, &tau).unwrap();
        let e6 = BigRational::new(BigInt::one(), BigInt::from(1_000_000));
        let e7 = BigRational::new(BigInt::one(), BigInt::from(10_000_000));
        let err6 = relative_error(&klocalize_scaled(&m, 0b0101, &tau, &e6).unwrap(), &target);
        let err7 = relative_error(&klocalize_scaled(&m, 0b0101, &tau, &e7).unwrap(), &target);
        assert!(err6 < BigRational::new(BigInt::one(), BigInt::from(1000)));
        assert!(err7 < err6);
    }

    #[test]
    fn section_form_matches_display_inside_the_box() {
        for (r, n) in [(2, 4), (2, 5), (2, 6), (3, 5), (4, 6)] {
            assert_eq!(
                uniform_class_section(r, n).unwrap(),
                uniform_class_ut(r, n).unwrap(),
                "({r},{n})"
            );
        }
    }

    #[test]
    fn section_form_drops_the_rank_deficient_class() {
        let (ut, sec) = (
            uniform_class_ut(3, 6).unwrap(),
            uniform_class_section(3, 6).unwrap(),
        );
        // c_4(Q) = Σ_j h_{4−j}(u) e_j(t), the class of 3x6 matrices of rank at most 2.
        let mut c4 = SchurExpansion::zero(3, 6);
        for j in 0..=4usize {
            let h = SchurExpansion::term(
                3,
                6,
                Partition::row(4 - j as u32),
                vec![0; 6],
                BigInt::one(),
            );
            c4 = c4.checked_add(&mul_elementary_t(&h, j)).unwrap();
        }
        assert_eq!(ut.checked_sub(&sec).unwrap(), c4);
        assert!(sec
            .terms()
            .all(|(l, _, _)| l.parts().first().map_or(true, |&k| k <= 3)));
        assert_eq!(degree_of_class(&sec), BigInt::from(90));
        assert_eq!(degree_uniform(3, 6).unwrap(), BigInt::from(105));
        assert_eq!(
            localize_ut_class(&sec).unwrap(),
            localize_uniform_grassmannian(3, 6).unwrap()
        );
    }

    #[test]
    fn box_reduction_kills_relations() {
        // h_3(u) + e_1(t) h_2(u) + e_2(t) h_1(u) + e_3(t) vanishes for r = 2, n = 4.
        let mut rel = SchurExpansion::zero(2, 4);
        for j in 0..=3usize {
            let h = SchurExpansion::term(
                2,
                4,
                Partition::row(3 - j as u32),
                vec![0; 4],
                BigInt::one(),
            );
            rel = rel.checked_add(&mul_elementary_t(&h, j)).unwrap();
        }
        assert!(reduce_to_box(&rel, 2).unwrap().is_zero());
    }
}
