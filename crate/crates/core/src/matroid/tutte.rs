use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{elements, Matroid};
use crate::exactpoly::{LaurentPoly, Ring};

/// A polynomial in `x, y` with integer coefficients, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TuttePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl TuttePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, BigInt::one())
    }

    pub fn monomial(i: u32, j: u32, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &other.terms {
                out.add_term(i + k, j + l, c * d);
            }
        }
        out
    }

    /// Coefficients in `q` of `q^rank · T(1 + 1/q, 0)`, lowest degree first.
    pub fn hook_specialization(&self, rank: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); rank + 1];
        for (&(i, j), c) in &self.terms {
            if j != 0 {
                continue;
            }
            // (1 + 1/q)^i q^rank = Σ_a C(i,a) q^{rank-a}
            let mut binom = BigInt::one();
            for a in 0..=i as usize {
                out[rank - a] += c * &binom;
                binom = binom * BigInt::from(i as usize - a) / BigInt::from(a + 1);
            }
        }
        out
    }

    /// As an element of `Z[x, y]`, with `x = u1`, `y = u2`.
    pub fn to_poly(&self) -> LaurentPoly {
        let ring = Ring::new(2, 0);
        LaurentPoly::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(&(i, j), c)| (vec![i as i32, j as i32, 0], c.clone())),
        )
    }
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            match i {
                0 => {}
                1 => mono.push("x".to_string()),
                _ => mono.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => mono.push("y".to_string()),
                _ => mono.push(format!("y^{j}")),
            }
            let body = mono.join("*");
            parts.push(if body.is_empty() {
                c.to_string()
            } else if c.is_one() {
                body
            } else {
                format!("{c}*{body}")
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

pub(super) fn deletion_contraction(m: &Matroid) -> TuttePolynomial {
    let mut memo = HashMap::new();
    dc(m, &mut memo)
}

fn dc(m: &Matroid, memo: &mut HashMap<(usize, Vec<u32>), TuttePolynomial>) -> TuttePolynomial {
    if m.n() == 0 {
        return TuttePolynomial::one();
    }
    let key = (m.n(), m.bases().to_vec());
    if let Some(t) = memo.get(&key) {
        return t.clone();
    }
    let e = m.n() - 1;
    let bit = 1u32 << e;
    let out = if m.rank_of(bit) == 0 {
        TuttePolynomial::y().mul(&dc(&m.delete(bit), memo))
    } else if m.bases().iter().all(|b| b & bit != 0) {
        TuttePolynomial::x().mul(&dc(&m.contract(bit), memo))
    } else {
        dc(&m.delete(bit), memo).add(&dc(&m.contract(bit), memo))
    };
    memo.insert(key, out.clone());
    out
}

/// `Σ_{A ⊆ E} (x−1)^{r − rk A} (y−1)^{|A| − rk A}`.
pub fn corank_nullity(m: &Matroid) -> TuttePolynomial {
    let x1 = TuttePolynomial::x().add(&TuttePolynomial::monomial(0, 0, BigInt::from(-1)));
    let y1 = TuttePolynomial::y().add(&TuttePolynomial::monomial(0, 0, BigInt::from(-1)));
    let mut out = TuttePolynomial::zero();
    for a in 0..(1u32 << m.n()) {
        let rk = m.rank_of(a);
        let mut term = TuttePolynomial::one();
        for _ in 0..m.rank() - rk {
            term = term.mul(&x1);
        }
        for _ in 0..a.count_ones() as usize - rk {
            term = term.mul(&y1);
        }
        out = out.add(&term);
    }
    out
}

impl Matroid {
    pub fn tutte_corank_nullity(&self) -> TuttePolynomial {
        corank_nullity(self)
    }

    /// `Σ_{b ∈ {0,1}^n} q^{−rk(M|b)} t^b`, in the ring with `r = 0` and a `q` slot.
    pub fn multivariate_tutte(&self) -> LaurentPoly {
        let ring = Ring::with_q(0, self.n());
        LaurentPoly::from_terms(
            ring,
            (0..(1u32 << self.n())).map(|b| {
                let mut e = vec![0i32; ring.width()];
                for j in elements(b) {
                    e[ring.t(j + 1)] = 1;
                }
                e[ring.q_slot()] = -(self.rank_of(b) as i32);
                (e, BigInt::one())
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloop() -> Matroid {
        Matroid::uniform(1, 1)
    }

    #[test]
    fn base_cases() {
        assert_eq!(coloop().tutte(), TuttePolynomial::x());
        assert_eq!(Matroid::uniform(0, 1).tutte(), TuttePolynomial::y());
    }

    #[test]
    fn u24_tutte() {
        let t = Matroid::uniform(2, 4).tutte();
        assert_eq!(t.to_string(), "x^2 + 2*x + y^2 + 2*y");
        assert_eq!(t, Matroid::uniform(2, 4).tutte_corank_nullity());
        assert_eq!(
            t.hook_specialization(2),
            vec![BigInt::from(1), BigInt::from(4), BigInt::from(3)]
        );
    }

    #[test]
    fn multivariate() {
        let ring = Ring::with_q(0, 2);
        let z = Matroid::uniform(1, 2).multivariate_tutte();
        assert_eq!(
            z,
            LaurentPoly::parse(ring, "1 + 1 * t1 q^-1 + 1 * t2 q^-1 + 1 * t1 t2 q^-1").unwrap()
        );
        let l = Matroid::uniform(0, 1).multivariate_tutte();
        assert_eq!(
            l,
            LaurentPoly::parse(Ring::with_q(0, 1), "1 + 1 * t1").unwrap()
        );
    }
}
