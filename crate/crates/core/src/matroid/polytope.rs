use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{elements, Matroid};
use crate::error::{Error, Result};

/// One signed term `sign · [P(M)]` of an indicator-function identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeCell {
    pub matroid: Matroid,
    pub sign: i64,
}

/// Indicator vectors of the bases.
pub fn polytope_vertices(m: &Matroid) -> Vec<Vec<u8>> {
    m.bases()
        .iter()
        .map(|&b| (0..m.n()).map(|i| (b >> i & 1) as u8).collect())
        .collect()
}

impl Matroid {
    /// Membership in the base polytope via `Σ_{i∈S} x_i ≤ rk(S)`, `Σ x_i = rk(E)`, `x ≥ 0`.
    pub fn polytope_contains(&self, x: &[BigRational]) -> Result<bool> {
        if x.len() != self.n() {
            return Err(Error::SizeMismatch(x.len(), self.n()));
        }
        if x.iter().any(|v| v < &BigRational::zero()) {
            return Ok(false);
        }
        let total: BigRational = x.iter().sum();
        if total != BigRational::from_integer(BigInt::from(self.rank())) {
            return Ok(false);
        }
        for s in 1..(1u32 << self.n()) {
            let sum: BigRational = elements(s).iter().map(|&i| &x[i]).sum();
            if sum > BigRational::from_integer(BigInt::from(self.rank_of(s))) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

const RANDOM_POINTS: usize = 200;

/// Tests `[P(parent)] = Σ sign·[P(cell)]` pointwise on the grid `{0, 1/2, 1}^n`
/// and on random rational points of the parent polytope. This is a sampling
/// check: a `true` answer is evidence, not proof.
pub fn subdivision_check(parent: &Matroid, cells: &[PolytopeCell]) -> Result<bool> {
    for c in cells {
        if c.matroid.n() != parent.n() || c.matroid.rank() != parent.rank() {
            return Err(Error::DimensionMismatch(format!(
                "cell on ({}, {}) against parent on ({}, {})",
                c.matroid.n(),
                c.matroid.rank(),
                parent.n(),
                parent.rank()
            )));
        }
    }
    let n = parent.n();
    let balanced = |x: &[BigRational]| -> Result<bool> {
        let lhs = i64::from(parent.polytope_contains(x)?);
        let mut rhs = 0i64;
        for c in cells {
            if c.matroid.polytope_contains(x)? {
                rhs += c.sign;
            }
        }
        Ok(lhs == rhs)
    };

    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let grid = [BigRational::zero(), half, BigRational::one()];
    let mut idx = vec![0usize; n];
    loop {
        let x: Vec<BigRational> = idx.iter().map(|&k| grid[k].clone()).collect();
        if !balanced(&x)? {
            return Ok(false);
        }
        let mut pos = 0;
        while pos < n && idx[pos] == 2 {
            idx[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
        idx[pos] += 1;
    }

    let verts = polytope_vertices(parent);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_POINTS {
        let k = rng.gen_range(2..=4);
        let mut x = vec![BigRational::zero(); n];
        let mut total = 0i64;
        let picks: Vec<(usize, i64)> = (0..k)
            .map(|_| (rng.gen_range(0..verts.len()), rng.gen_range(1..=20)))
            .collect();
        for &(v, w) in &picks {
            total += w;
            for i in 0..n {
                x[i] += BigRational::from_integer(BigInt::from(w * i64::from(verts[v][i])));
            }
        }
        let d = BigRational::from_integer(BigInt::from(total));
        let x: Vec<BigRational> = x.into_iter().map(|v| v / &d).collect();
        if !balanced(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs_except(skip: &[u32]) -> Matroid {
        let bases: Vec<u32> = (0..16u32)
            .filter(|s| s.count_ones() == 2 && !skip.contains(s))
            .collect();
        Matroid::from_bases(4, 2, &bases).unwrap()
    }

    fn cell(m: Matroid, sign: i64) -> PolytopeCell {
        PolytopeCell { matroid: m, sign }
    }

    #[test]
    fn octahedron_split() {
        let u24 = Matroid::uniform(2, 4);
        let m1 = pairs_except(&[0b0011]);
        let m2 = pairs_except(&[0b1100]);
        let m12 = pairs_except(&[0b0011, 0b1100]);
        let cells = vec![cell(m1.clone(), 1), cell(m2, 1), cell(m12, -1)];
        assert!(subdivision_check(&u24, &cells).unwrap());
        assert!(subdivision_check(&u24, &[cell(u24.clone(), 1)]).unwrap());
        assert!(!subdivision_check(&u24, &[cell(m1, 1)]).unwrap());
        assert!(subdivision_check(&u24, &[cell(Matroid::uniform(1, 4), 1)]).is_err());
    }

    #[test]
    fn vertices() {
        assert_eq!(
            polytope_vertices(&Matroid::uniform(1, 2)),
            vec![vec![1, 0], vec![0, 1]]
        );
    }
}
