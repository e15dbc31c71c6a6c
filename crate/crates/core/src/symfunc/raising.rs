//! The Demazure operator and the raising operators that add a row of matrix entries.

use num_bigint::BigInt;

use super::expansion::SchurExpansion;
use super::schur::schur_straighten;
use crate::error::{Error, Result};
use crate::exactpoly::LaurentPoly;

/// `δ_i f = (t_i f − t_{i+1} σ_i f) / (t_i − t_{i+1})`, for `1 <= i < n`.
pub fn demazure(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let ring = f.ring();
    if i == 0 || i >= ring.n {
        return Err(Error::Hypothesis(format!(
            "demazure index {i} outside 1..{}",
            ring.n
        )));
    }
    let ti = LaurentPoly::t(ring, i);
    let tj = LaurentPoly::t(ring, i + 1);
    let swapped = f.swap_slots(ring.t(i), ring.t(i + 1));
    let num = &(&ti * f) - &(&tj * &swapped);
    num.exact_divide(&(&ti - &tj))
}

/// Multiplies by the elementary symmetric polynomial `e_k(t_1..t_n)`.
pub fn mul_elementary_t(e: &SchurExpansion, k: usize) -> SchurExpansion {
    let n = e.n();
    let mut out = SchurExpansion::zero(e.r(), n);
    if k > n {
        return out;
    }
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let shift: Vec<i32> = (0..n).map(|j| ((mask >> j) & 1) as i32).collect();
        for (l, a, c) in e.shift_t(&shift).terms() {
            out.add_term(l.clone(), a.clone(), c.clone());
        }
    }
    out
}

/// `ρ_k s_λ(u_1..u_r) = s_{(λ_1,…,λ_r,k)}(u_1..u_{r+1})`, straightened termwise.
pub fn rho_k(k: u32, e: &SchurExpansion) -> Result<SchurExpansion> {
    let r = e.r();
    let mut out = SchurExpansion::zero(r + 1, e.n());
    for (l, a, c) in e.terms() {
        let mut seq: Vec<i64> = l.padded(r).into_iter().map(i64::from).collect();
        seq.push(i64::from(k));
        if let Some((sign, p)) = schur_straighten(&seq)? {
            out.add_term(p, a.clone(), c * BigInt::from(sign));
        }
    }
    Ok(out)
}

/// `ρ = Σ_{k=0}^n (−1)^k e_k(t) ρ_k`.
pub fn rho(e: &SchurExpansion) -> Result<SchurExpansion> {
    let n = e.n();
    let mut out = SchurExpansion::zero(e.r() + 1, n);
    for k in 0..=n {
        let mut term = mul_elementary_t(&rho_k(k as u32, e)?, k);
        if k % 2 == 1 {
            term = term.scale(&BigInt::from(-1));
        }
        out = out.checked_add(&term)?;
    }
    Ok(out)
}

/// `ρ` applied `times` times.
pub fn rho_power(e: &SchurExpansion, times: usize) -> Result<SchurExpansion> {
    let mut out = e.clone();
    for _ in 0..times {
        out = rho(&out)?;
    }
    Ok(out)
}

/// The cohomological raising operator
/// `(−1)^{cr} e_{r+c}(u)^{−c} Σ e_{k_1}(t)…e_{k_c}(t) ρ_{n+c−k_c}…ρ_{n+c−k_1}`.
pub fn rho_h(c: usize, e: &SchurExpansion) -> Result<SchurExpansion> {
    if c == 0 {
        return Err(Error::Hypothesis("rho_H needs c >= 1".into()));
    }
    let (r, n) = (e.r(), e.n());
    let mut sum = SchurExpansion::zero(r + c, n);
    let mut ks = vec![0usize; c];
    loop {
        let mut cur = e.clone();
        for &k in &ks {
            cur = rho_k((n + c - k) as u32, &cur)?;
        }
        for &k in &ks {
            cur = mul_elementary_t(&cur, k);
        }
        sum = sum.checked_add(&cur)?;
        // Next tuple in [0, n]^c.
        let mut pos = 0;
        while pos < c && ks[pos] == n {
            ks[pos] = 0;
            pos += 1;
        }
        if pos == c {
            break;
        }
        ks[pos] += 1;
    }
    let sign = if (c * r) % 2 == 1 { -1 } else { 1 };
    let mut out = SchurExpansion::zero(r + c, n);
    for (l, a, x) in sum.terms() {
        let reduced = l
            .subtract_columns(r + c, c as u32)
            .ok_or(Error::RaisingDivision(r + c))?;
        out.add_term(reduced, a.clone(), x * BigInt::from(sign));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Ring;
    use crate::symfunc::partition::{part, Partition};

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn demazure_examples() {
        // n = 3 here: δ_2 acting on t_2, t_3.
        let ring = Ring::new(2, 3);
        let f = LaurentPoly::parse(ring, "1 + -1 * u1 t3 + -1 * u2 t3 + 1 * u1 u2 t3^2").unwrap();
        assert_eq!(
            demazure(2, &f).unwrap(),
            LaurentPoly::parse(ring, "1 + -1 * u1 u2 t2 t3").unwrap()
        );
        let g = &LaurentPoly::t(ring, 2) * &f;
        assert_eq!(
            demazure(2, &g).unwrap(),
            LaurentPoly::parse(ring, "1 * t2 + 1 * t3 + -1 * u1 t2 t3 + -1 * u2 t2 t3").unwrap()
        );
        assert_eq!(
            demazure(1, &LaurentPoly::one(ring)).unwrap(),
            LaurentPoly::one(ring)
        );
        assert!(demazure(3, &f).is_err());
    }

    #[test]
    fn rho_k_examples() {
        let one = SchurExpansion::one(1, 0);
        assert!(rho_k(1, &one).unwrap().is_zero());
        assert_eq!(
            rho_k(2, &one).unwrap(),
            SchurExpansion::term(2, 0, part(&[1, 1]), vec![], big(-1))
        );
        let e = SchurExpansion::term(2, 0, part(&[3, 1]), vec![], big(1));
        assert_eq!(
            rho_k(0, &e).unwrap(),
            SchurExpansion::term(3, 0, part(&[3, 1]), vec![], big(1))
        );
    }

    #[test]
    fn rho_examples() {
        let e = rho(&SchurExpansion::one(1, 2)).unwrap();
        let mut expect = SchurExpansion::one(2, 2);
        expect.add_term(part(&[1, 1]), vec![1, 1], big(-1));
        assert_eq!(e, expect);
        assert!(rho(&SchurExpansion::zero(2, 3)).unwrap().is_zero());
    }

    #[test]
    fn rho_h_of_one() {
        let c = rho_h(1, &SchurExpansion::one(1, 2)).unwrap();
        let mut expect = SchurExpansion::term(2, 2, part(&[1]), vec![0, 0], big(1));
        expect.add_term(Partition::empty(), vec![1, 0], big(1));
        expect.add_term(Partition::empty(), vec![0, 1], big(1));
        assert_eq!(c, expect);
        assert!(rho_h(1, &SchurExpansion::zero(2, 3)).unwrap().is_zero());
    }
}
