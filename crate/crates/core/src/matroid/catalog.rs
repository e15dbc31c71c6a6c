//! Small realizable matroids, one entry per isomorphism class.
//!
//! Built breadth-first: every class on `n + 1` elements is reached by
//! appending a column to a stored realization of a class on `n` elements.
//! Columns range over the zero vector and the primitive vectors of
//! `{-2..2}^3` up to sign, and a few realizations per class are kept so
//! that extensions are not limited by one choice of coordinates.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use super::{Matroid, RationalMatrix};

pub const CATALOG_MAX_N: usize = 6;
const REPS_PER_CLASS: usize = 4;

type Col = [i64; 3];

/// A catalog matroid with a full-row-rank realization.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub matroid: Matroid,
    pub matrix: RationalMatrix,
}

fn cross(a: &Col, b: &Col) -> Col {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: &Col, b: &Col) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn int_rank(cols: &[Col]) -> usize {
    let nonzero: Vec<&Col> = cols.iter().filter(|c| **c != [0, 0, 0]).collect();
    if nonzero.is_empty() {
        return 0;
    }
    let mut best = 1;
    for (i, a) in nonzero.iter().enumerate() {
        for b in &nonzero[i + 1..] {
            let x = cross(a, b);
            if x != [0, 0, 0] {
                best = 2;
                if nonzero.iter().any(|c| dot(&x, c) != 0) {
                    return 3;
                }
            }
        }
    }
    best
}

fn matroid_of(cols: &[Col]) -> Matroid {
    let n = cols.len();
    let rank = int_rank(cols);
    let bases: Vec<u32> = (0..(1u32 << n))
        .filter(|&s| {
            s.count_ones() as usize == rank && {
                let sub: Vec<Col> = super::elements(s).iter().map(|&i| cols[i]).collect();
                int_rank(&sub) == rank
            }
        })
        .collect();
    Matroid::build(n, rank, bases)
}

fn candidate_columns() -> Vec<Col> {
    let mut out = vec![[0, 0, 0]];
    for a in -2..=2i64 {
        for b in -2..=2i64 {
            for c in -2..=2i64 {
                let v = [a, b, c];
                if v == [0, 0, 0] {
                    continue;
                }
                let g = v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
                let first = *v.iter().find(|&&x| x != 0).unwrap();
                if g == 1 && first > 0 {
                    out.push(v);
                }
            }
        }
    }
    out
}

fn to_matrix(cols: &[Col]) -> RationalMatrix {
    let rows: Vec<Vec<i64>> = (0..3)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect();
    let full = if cols.is_empty() {
        RationalMatrix::zeros(3, 0)
    } else {
        RationalMatrix::from_i64(&rows)
    };
    full.row_space_basis()
}

fn build_catalog() -> Vec<Vec<CatalogEntry>> {
    let columns = candidate_columns();
    let mut levels: Vec<Vec<CatalogEntry>> = Vec::new();
    // Class representatives at the current size, keyed by canonical form.
    let mut frontier: BTreeMap<(usize, usize, Vec<u32>), Vec<Vec<Col>>> = BTreeMap::new();
    frontier.insert(
        Matroid::build(0, 0, vec![0]).canonical_form(),
        vec![Vec::new()],
    );
    levels.push(vec![CatalogEntry {
        matroid: Matroid::build(0, 0, vec![0]),
        matrix: RationalMatrix::zeros(0, 0),
    }]);
    for _ in 1..=CATALOG_MAX_N {
        let mut next: BTreeMap<(usize, usize, Vec<u32>), Vec<Vec<Col>>> = BTreeMap::new();
        let mut seen: HashSet<Matroid> = HashSet::new();
        for reps in frontier.values() {
            for rep in reps {
                for c in &columns {
                    let mut cols = rep.clone();
                    cols.push(*c);
                    let m = matroid_of(&cols);
                    if !seen.insert(m.clone()) {
                        continue;
                    }
                    let slot = next.entry(m.canonical_form()).or_default();
                    if slot.len() < REPS_PER_CLASS {
                        slot.push(cols);
                    }
                }
            }
        }
        levels.push(
            next.values()
                .map(|reps| CatalogEntry {
                    matroid: matroid_of(&reps[0]),
                    matrix: to_matrix(&reps[0]),
                })
                .collect(),
        );
        frontier = next;
    }
    levels
}

fn levels() -> &'static Vec<Vec<CatalogEntry>> {
    static CATALOG: OnceLock<Vec<Vec<CatalogEntry>>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Isomorphism classes of rank ≤ 3 matroids on exactly `n` elements realized
/// by integer matrices with entries in `{-2..2}`; `n ≤ 6`.
pub fn catalog_of_size(n: usize) -> &'static [CatalogEntry] {
    assert!(
        n <= CATALOG_MAX_N,
        "catalog stops at {CATALOG_MAX_N} elements"
    );
    &levels()[n]
}

/// All catalog entries on `1..=max_n` elements.
pub fn catalog(max_n: usize) -> Vec<&'static CatalogEntry> {
    (1..=max_n.min(CATALOG_MAX_N))
        .flat_map(|n| catalog_of_size(n).iter())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_count() {
        assert_eq!(candidate_columns().len(), 50);
    }

    #[test]
    fn small_sizes() {
        let counts: Vec<usize> = (0..=4).map(|n| catalog_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn realizations_match() {
        for e in catalog(4) {
            assert_eq!(e.matrix.rows(), e.matroid.rank());
            assert_eq!(Matroid::from_matrix(&e.matrix).unwrap(), e.matroid);
        }
    }
}
