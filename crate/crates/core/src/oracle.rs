//! Ground truth from explicit equations: Gale duals, the tensor-minor ideals
//! of an orbit closure, a Buchberger engine in grevlex order, K-numerators
//! and dimensions of quotients, and the linear-algebra membership test.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{rational_to_string, LaurentPoly, Ring};
use crate::matroid::{elements, Matroid, RationalMatrix};
use crate::symfunc::{schur_expand, SchurExpansion};

pub const DEFAULT_STEP_CAP: usize = 50_000;

/// Largest `r·n` accepted by the ideal constructors.
pub const MAX_ORACLE_VARS: usize = 18;

/// Exponents of `x_{ij}`, row-major: `x_11, …, x_1n, x_21, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn var(vars: usize, k: usize) -> Self {
        let mut e = vec![0; vars];
        e[k] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient(&self, other: &Self) -> Self {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self : other`, the colon of principal monomial ideals.
    pub fn colon(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn support(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (k, _)| m | (1 << k))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in the entries `x_{ij}` of an `r × n` matrix of variables,
/// graded by `deg x_{ij} = a_i + b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    r: usize,
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl GradedPoly {
    pub fn zero(r: usize, n: usize) -> Self {
        GradedPoly {
            r,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(r: usize, n: usize, m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(r, n);
        p.add_term(m, c);
        p
    }

    /// `x_{ij}`, 0-indexed.
    pub fn var(r: usize, n: usize, i: usize, j: usize) -> Self {
        Self::term(r, n, Monomial::var(r * n, i * n + j), BigRational::one())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(m.clone())
            .or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.r, self.n);
        }
        GradedPoly {
            r: self.r,
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `self − c·m·g`.
    fn sub_shifted(&mut self, g: &Self, m: &Monomial, c: &BigRational) {
        for (gm, gc) in &g.terms {
            let key = gm.mul(m);
            let v = self
                .terms
                .entry(key.clone())
                .or_insert_with(BigRational::zero);
            *v -= c * gc;
            if v.is_zero() {
                self.terms.remove(&key);
            }
        }
    }

    fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// `(u-degree, t-degree)` of a monomial: row sums and column sums.
    pub fn multidegree(&self, m: &Monomial) -> (Vec<u32>, Vec<u32>) {
        let mut a = vec![0; self.r];
        let mut b = vec![0; self.n];
        for i in 0..self.r {
            for j in 0..self.n {
                let e = u32::from(m.0[i * self.n + j]);
                a[i] += e;
                b[j] += e;
            }
        }
        (a, b)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| self.multidegree(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn evaluate(&self, x: &RationalMatrix) -> Result<BigRational> {
        if x.rows() != self.r || x.cols() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "point is {}x{}, polynomial lives on {}x{}",
                x.rows(),
                x.cols(),
                self.r,
                self.n
            )));
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow(x.get(k / self.n, k % self.n).clone(), usize::from(e));
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Renames `x_{ij}` to `x_{row_map[i], col_map[j]}`.
    pub fn permute(&self, row_map: &[usize], col_map: &[usize]) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.r * self.n];
            for i in 0..self.r {
                for j in 0..self.n {
                    e[row_map[i] * self.n + col_map[j]] = m.0[i * self.n + j];
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn to_json_terms(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| PolyTerm {
                exponents: (0..self.r)
                    .map(|i| m.0[i * self.n..(i + 1) * self.n].to_vec())
                    .collect(),
                coeff: rational_to_string(c),
            })
            .collect()
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let s = rational_to_string(c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(k, &e)| {
                        let name = format!("x{}{}", k / self.n + 1, k % self.n + 1);
                        if e == 1 {
                            name
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
            match (mag.as_str(), vars.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                ("1", false) => write!(f, "{}", vars.join("*"))?,
                _ => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    /// `exponents[i][j]` is the power of `x_{i+1, j+1}`.
    pub exponents: Vec<Vec<u16>>,
    pub coeff: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    /// Minors of the tensors `x_J ⊗ v_J^⊥` over dependent `J`.
    TensorMinors,
    /// Size-4 minors of the `4 × n` matrix with columns `x_j ⊗ v_j`.
    RankTwoMinors,
    /// Minors of a generic matrix.
    Minors,
    Custom,
}

#[derive(Clone, Debug)]
pub struct IdealPresentation {
    r: usize,
    n: usize,
    pub kind: IdealKind,
    generators: Vec<GradedPoly>,
}

impl IdealPresentation {
    /// Drops zero generators and scalar duplicates; rejects inhomogeneous ones.
    pub fn new(r: usize, n: usize, kind: IdealKind, generators: Vec<GradedPoly>) -> Result<Self> {
        let mut gens: Vec<GradedPoly> = Vec::new();
        for g in generators {
            if g.r != r || g.n != n {
                return Err(Error::DimensionMismatch(format!(
                    "generator on {}x{} in a {r}x{n} ideal",
                    g.r, g.n
                )));
            }
            if !g.is_homogeneous() {
                return Err(Error::Hypothesis(format!(
                    "generator {g} is not multihomogeneous"
                )));
            }
            if g.is_zero() {
                continue;
            }
            let g = g.monic();
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(IdealPresentation {
            r,
            n,
            kind,
            generators: gens,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[GradedPoly] {
        &self.generators
    }

    pub fn permute(&self, row_map: &[usize], col_map: &[usize]) -> Self {
        IdealPresentation {
            r: self.r,
            n: self.n,
            kind: self.kind,
            generators: self
                .generators
                .iter()
                .map(|g| g.permute(row_map, col_map))
                .collect(),
        }
    }
}

/// Rows span the right kernel of `v`.
pub fn gale_dual(v: &RationalMatrix) -> RationalMatrix {
    if v.rows() == 0 {
        return RationalMatrix::identity(v.cols());
    }
    v.kernel()
}

/// Determinant of a square matrix of polynomials, by expansion along columns.
fn poly_det(entries: &[Vec<GradedPoly>], r: usize, n: usize) -> GradedPoly {
    let size = entries.len();
    let mut memo: HashMap<u32, GradedPoly> = HashMap::new();
    fn rec(
        col: usize,
        used: u32,
        e: &[Vec<GradedPoly>],
        memo: &mut HashMap<u32, GradedPoly>,
        r: usize,
        n: usize,
    ) -> GradedPoly {
        let size = e.len();
        if col == size {
            return GradedPoly::term(r, n, Monomial::one(r * n), BigRational::one());
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut out = GradedPoly::zero(r, n);
        let mut sign = 1i32;
        for row in 0..size {
            if used & (1 << row) != 0 {
                continue;
            }
            if !e[row][col].is_zero() {
                let sub = rec(col + 1, used | (1 << row), e, memo, r, n);
                let prod = e[row][col].mul(&sub);
                out = out.add(&if sign > 0 {
                    prod
                } else {
                    prod.scale(&-BigRational::one())
                });
            }
            sign = -sign;
        }
        memo.insert(used, out.clone());
        out
    }
    debug_assert!(entries.iter().all(|row| row.len() == size));
    rec(0, 0, entries, &mut memo, r, n)
}

fn subsets_of_size(m: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << m))
        .filter(|s| s.count_ones() as usize == k)
        .map(elements)
        .collect()
}

/// All maximal minors of a tall polynomial matrix given by columns.
fn maximal_minors(columns: &[Vec<GradedPoly>], r: usize, n: usize) -> Vec<GradedPoly> {
    let k = columns.len();
    let height = columns.first().map_or(0, Vec::len);
    if height < k {
        return Vec::new();
    }
    subsets_of_size(height, k)
        .into_iter()
        .map(|rows| {
            let m: Vec<Vec<GradedPoly>> = rows
                .iter()
                .map(|&i| columns.iter().map(|c| c[i].clone()).collect())
                .collect();
            poly_det(&m, r, n)
        })
        .collect()
}

/// Column `j` of `x` tensored with a constant vector: entry `(a, b) ↦ x_{a j}·w_b`.
fn tensor_column(r: usize, n: usize, j: usize, w: &[BigRational]) -> Vec<GradedPoly> {
    let mut col = Vec::with_capacity(r * w.len());
    for a in 0..r {
        for c in w {
            col.push(GradedPoly::var(r, n, a, j).scale(c));
        }
    }
    col
}

/// For every dependent `J`, the size-`|J|` minors of the matrix whose
/// columns are `x_{j_i} ⊗ (v_J^⊥)_i`; independent `J` contribute nothing.
pub fn iprime_generators(v: &RationalMatrix) -> Result<IdealPresentation> {
    let (r, n) = (v.rows(), v.cols());
    if r * n > MAX_ORACLE_VARS {
        return Err(Error::ResourceLimit(format!(
            "{r}x{n} exceeds {MAX_ORACLE_VARS} variables"
        )));
    }
    let mut gens = Vec::new();
    for mask in 1u32..(1 << n) {
        let cols = elements(mask);
        let vj = v.select_columns(&cols);
        if vj.rank() == cols.len() {
            continue;
        }
        let dual = gale_dual(&vj);
        let columns: Vec<Vec<GradedPoly>> = cols
            .iter()
            .enumerate()
            .map(|(i, &j)| tensor_column(r, n, j, &dual.column(i)))
            .collect();
        gens.extend(maximal_minors(&columns, r, n));
    }
    IdealPresentation::new(r, n, IdealKind::TensorMinors, gens)
}

/// Size-4 minors of the `4 × n` matrix with columns `(x_{1j}, x_{2j}) ⊗ v_j`,
/// for `v` realizing a uniform rank-2 matroid.
pub fn idoubleprime_generators(v: &RationalMatrix) -> Result<IdealPresentation> {
    let (r, n) = (v.rows(), v.cols());
    let m = Matroid::from_matrix(v)?;
    if r != 2 || m.rank() != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            found: m.rank(),
        });
    }
    if m != Matroid::uniform(2, n) {
        return Err(Error::Hypothesis(
            "columns must be pairwise independent".into(),
        ));
    }
    let columns: Vec<Vec<GradedPoly>> = (0..n)
        .map(|j| tensor_column(r, n, j, &v.column(j)))
        .collect();
    let gens = subsets_of_size(n, 4)
        .into_iter()
        .map(|js| {
            let sub: Vec<Vec<GradedPoly>> = js.iter().map(|&j| columns[j].clone()).collect();
            maximal_minors(&sub, r, n).pop().unwrap()
        })
        .collect();
    IdealPresentation::new(r, n, IdealKind::RankTwoMinors, gens)
}

/// The `size × size` minors of the generic `r × n` matrix.
pub fn minors_ideal(r: usize, n: usize, size: usize) -> Result<IdealPresentation> {
    let mut gens = Vec::new();
    for rows in subsets_of_size(r, size) {
        for cols in subsets_of_size(n, size) {
            let m: Vec<Vec<GradedPoly>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| GradedPoly::var(r, n, i, j)).collect())
                .collect();
            gens.push(poly_det(&m, r, n));
        }
    }
    IdealPresentation::new(r, n, IdealKind::Minors, gens)
}

/// `g · v · diag(t)`.
pub fn translate(
    v: &RationalMatrix,
    g: &RationalMatrix,
    t: &[BigRational],
) -> Result<RationalMatrix> {
    if t.len() != v.cols() {
        return Err(Error::SizeMismatch(t.len(), v.cols()));
    }
    Ok(g.mul(v)?.scale_columns(t))
}

/// A reduced Gröbner basis in grevlex order, sorted by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    r: usize,
    n: usize,
    polys: Vec<GradedPoly>,
    pub steps: usize,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[GradedPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading().unwrap().0.clone())
            .collect()
    }

    pub fn reduce(&self, f: &GradedPoly) -> GradedPoly {
        normal_form(f, &self.polys)
    }

    pub fn contains(&self, f: &GradedPoly) -> bool {
        self.reduce(f).is_zero()
    }

    /// A square-free initial ideal forces the ideal to be radical.
    pub fn initial_is_squarefree(&self) -> bool {
        self.leading_monomials().iter().all(Monomial::is_squarefree)
    }

    /// Numerator of the multigraded Hilbert series of the quotient, over `∏(1 − u_i t_j)`.
    pub fn hilbert_numerator(&self) -> LaurentPoly {
        monomial_ideal_numerator(&self.leading_monomials(), self.r, self.n)
    }

    pub fn k_polynomial(&self) -> Result<SchurExpansion> {
        schur_expand(&self.hilbert_numerator())
    }

    /// Krull dimension: the largest set of variables containing no initial-term support.
    pub fn dimension(&self) -> usize {
        let vars = self.r * self.n;
        let supports: Vec<u32> = self
            .leading_monomials()
            .iter()
            .map(Monomial::support)
            .collect();
        let full: u32 = if vars == 32 {
            u32::MAX
        } else {
            (1 << vars) - 1
        };
        let mut best = 0;
        for s in 0..=full {
            let size = s.count_ones() as usize;
            if size > best && supports.iter().all(|&m| m & !s != 0) {
                best = size;
            }
        }
        best
    }

    /// Degree under the standard grading `deg x_{ij} = 1`.
    pub fn degree(&self) -> BigInt {
        let num = self.hilbert_numerator();
        let r = self.r;
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in num.terms() {
            let d = e[..r].iter().sum::<i32>() as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += c;
        }
        let codim = self.r * self.n - self.dimension();
        for _ in 0..codim {
            // Divide by (1 − z): running prefix sums.
            let mut acc = BigInt::zero();
            for c in coeffs.iter_mut() {
                acc += &*c;
                *c = acc.clone();
            }
            while coeffs.last().is_some_and(Zero::is_zero) {
                coeffs.pop();
            }
        }
        coeffs.iter().sum()
    }
}

fn normal_form(f: &GradedPoly, basis: &[GradedPoly]) -> GradedPoly {
    let mut p = f.clone();
    let mut rem = GradedPoly::zero(f.r, f.n);
    while let Some((lm, lc)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        match basis.iter().find(|g| g.leading().unwrap().0.divides(&lm)) {
            Some(g) => {
                let (gm, gc) = g.leading().unwrap();
                p.sub_shifted(g, &gm.quotient(&lm), &(&lc / gc));
            }
            None => {
                p.terms.remove(&lm);
                rem.terms.insert(lm, lc);
            }
        }
    }
    rem
}

fn s_polynomial(f: &GradedPoly, g: &GradedPoly) -> GradedPoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let mut out = GradedPoly::zero(f.r, f.n);
    out.sub_shifted(f, &fm.quotient(&l), &-fc.recip());
    out.sub_shifted(g, &gm.quotient(&l), &gc.recip());
    out
}

/// Buchberger's algorithm with the coprime and chain criteria, followed by
/// interreduction. `cap` bounds the number of S-pair reductions.
pub fn buchberger(ideal: &IdealPresentation, cap: usize) -> Result<GroebnerBasis> {
    let (r, n) = (ideal.r, ideal.n);
    let mut basis: Vec<GradedPoly> = Vec::new();
    for g in &ideal.generators {
        let h = normal_form(g, &basis);
        if !h.is_zero() {
            basis.push(h.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();
    let mut steps = 0;
    while !pairs.is_empty() {
        let lcm_of = |&(i, j): &(usize, usize), b: &[GradedPoly]| {
            b[i].leading().unwrap().0.lcm(b[j].leading().unwrap().0)
        };
        let pos = (0..pairs.len())
            .min_by(|&a, &b| lcm_of(&pairs[a], &basis).cmp(&lcm_of(&pairs[b], &basis)))
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        done.insert((i, j));
        let (mi, mj) = (
            basis[i].leading().unwrap().0.clone(),
            basis[j].leading().unwrap().0.clone(),
        );
        if mi.coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading().unwrap().0.divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        steps += 1;
        if steps > cap {
            return Err(Error::ResourceLimit(format!(
                "Buchberger exceeded {cap} reductions"
            )));
        }
        let h = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !h.is_zero() {
            let k = basis.len();
            basis.push(h.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // Minimal, then reduced.
    let mut minimal: Vec<GradedPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = h.leading().unwrap().0;
            l != k && hm.divides(lm) && (hm != lm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let (lm, _) = minimal[k].leading().unwrap();
        let mut tail = minimal[k].clone();
        tail.terms.remove(lm);
        let others: Vec<GradedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = normal_form(&tail, &others);
        g.terms.insert(lm.clone(), BigRational::one());
        reduced.push(g);
    }
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    Ok(GroebnerBasis {
        r,
        n,
        polys: reduced,
        steps,
    })
}

fn weight(m: &Monomial, r: usize, n: usize) -> Vec<i32> {
    let mut e = vec![0i32; r + n + 1];
    for i in 0..r {
        for j in 0..n {
            let x = i32::from(m.0[i * n + j]);
            e[i] += x;
            e[r + j] += x;
        }
    }
    e
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Hilbert numerator of `S / ⟨gens⟩` by pivoting on a shared variable:
/// `N(I) = N(I + x) + w(x)·N(I : x)`.
pub fn monomial_ideal_numerator(gens: &[Monomial], r: usize, n: usize) -> LaurentPoly {
    let mut memo = HashMap::new();
    numerator_rec(minimalize(gens.to_vec()), r, n, &mut memo)
}

fn numerator_rec(
    gens: Vec<Monomial>,
    r: usize,
    n: usize,
    memo: &mut HashMap<Vec<Monomial>, LaurentPoly>,
) -> LaurentPoly {
    let ring = Ring::new(r, n);
    if let Some(p) = memo.get(&gens) {
        return p.clone();
    }
    let vars = r * n;
    let mut counts = vec![0usize; vars];
    for g in &gens {
        for (k, &e) in g.0.iter().enumerate() {
            if e > 0 {
                counts[k] += 1;
            }
        }
    }
    let result = match (0..vars)
        .filter(|&k| counts[k] >= 2)
        .max_by_key(|&k| counts[k])
    {
        None => {
            let mut p = LaurentPoly::one(ring);
            for g in &gens {
                let factor = &LaurentPoly::one(ring)
                    - &LaurentPoly::monomial(ring, weight(g, r, n), BigInt::one());
                p = &p * &factor;
            }
            p
        }
        Some(k) => {
            let x = Monomial::var(vars, k);
            let mut plus = gens.clone();
            plus.push(x.clone());
            let colon: Vec<Monomial> = gens.iter().map(|g| g.colon(&x)).collect();
            let a = numerator_rec(minimalize(plus), r, n, memo);
            let b = numerator_rec(minimalize(colon), r, n, memo);
            &a + &b.shift(&weight(&x, r, n))
        }
    };
    memo.insert(gens, result.clone());
    result
}

pub fn k_polynomial_of_quotient(ideal: &IdealPresentation) -> Result<SchurExpansion> {
    buchberger(ideal, DEFAULT_STEP_CAP)?.k_polynomial()
}

pub fn dimension_of_quotient(ideal: &IdealPresentation) -> Result<usize> {
    Ok(buchberger(ideal, DEFAULT_STEP_CAP)?.dimension())
}

pub fn oracle_degree(ideal: &IdealPresentation) -> Result<BigInt> {
    Ok(buchberger(ideal, DEFAULT_STEP_CAP)?.degree())
}

/// `w ∈ X_v` iff for every dependent `J` the vectors `w_{j_i} ⊗ (v_J^⊥)_i`
/// are linearly dependent.
pub fn membership_test(w: &RationalMatrix, v: &RationalMatrix) -> Result<bool> {
    if w.rows() != v.rows() || w.cols() != v.cols() {
        return Err(Error::DimensionMismatch(format!(
            "w is {}x{}, v is {}x{}",
            w.rows(),
            w.cols(),
            v.rows(),
            v.cols()
        )));
    }
    let (r, n) = (v.rows(), v.cols());
    if n > 20 {
        return Err(Error::ResourceLimit(format!("{n} columns")));
    }
    for mask in 1u32..(1 << n) {
        let cols = elements(mask);
        let vj = v.select_columns(&cols);
        if vj.rank() == cols.len() {
            continue;
        }
        let dual = gale_dual(&vj);
        let vectors: Vec<Vec<BigRational>> = cols
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                let wj = w.column(j);
                let d = dual.column(i);
                wj.iter()
                    .flat_map(|a| d.iter().map(move |b| a * b))
                    .collect()
            })
            .collect();
        let height = r * dual.rows();
        if height == 0 {
            continue;
        }
        if RationalMatrix::from_columns(height, &vectors).rank() == cols.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Summary of an ideal computation.
#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub kind: IdealKind,
    pub generators: Vec<Vec<PolyTerm>>,
    pub groebner_size: usize,
    pub k_polynomial: SchurExpansion,
    pub dimension: usize,
    pub codimension: usize,
    #[serde(with = "crate::exactpoly::bigint_string")]
    pub degree: BigInt,
    pub initial_squarefree: bool,
}

pub fn ideal_report(ideal: &IdealPresentation, cap: usize) -> Result<IdealReport> {
    let gb = buchberger(ideal, cap)?;
    let dimension = gb.dimension();
    Ok(IdealReport {
        kind: ideal.kind,
        generators: ideal
            .generators
            .iter()
            .map(GradedPoly::to_json_terms)
            .collect(),
        groebner_size: gb.len(),
        k_polynomial: gb.k_polynomial()?,
        dimension,
        codimension: ideal.r * ideal.n - dimension,
        degree: gb.degree(),
        initial_squarefree: gb.initial_is_squarefree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::part;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn one_minus(r: usize, n: usize, lambda: &[u32], t: Vec<i32>) -> SchurExpansion {
        let mut e = SchurExpansion::one(r, n);
        e.add_term(part(lambda), t, BigInt::from(-1));
        e
    }

    fn u24() -> RationalMatrix {
        RationalMatrix::from_i64(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2]])
    }

    #[test]
    fn grevlex() {
        let x = |k| Monomial::var(4, k);
        // x11*x22 < x12*x21: the former involves the last variable.
        assert!(x(0).mul(&x(3)) < x(1).mul(&x(2)));
        assert!(x(3).mul(&x(3)) > x(0));
        assert!(x(0) > x(1));
    }

    #[test]
    fn gale() {
        let v = RationalMatrix::from_i64(&[vec![1, 0, 1], vec![0, 1, 1]]);
        let d = gale_dual(&v);
        assert_eq!(d.rows(), 1);
        assert!(v.mul(&d.transpose()).unwrap().rank() == 0);
        assert_eq!(gale_dual(&RationalMatrix::identity(2)).rows(), 0);
        assert_eq!(gale_dual(&RationalMatrix::zeros(1, 2)).rank(), 2);
    }

    #[test]
    fn generators() {
        let ip = iprime_generators(&u24()).unwrap();
        assert_eq!(ip.generators().len(), 1);
        assert_eq!(ip.generators()[0].total_degree(), Some(4));
        assert!(iprime_generators(&RationalMatrix::identity(2))
            .unwrap()
            .generators()
            .is_empty());
        let ipp = idoubleprime_generators(&u24()).unwrap();
        assert_eq!(ipp.generators().len(), 1);
        let g = &ipp.generators()[0];
        let (m, _) = g.leading().unwrap();
        assert_eq!(g.multidegree(m), (vec![2, 2], vec![1, 1, 1, 1]));
        assert!(idoubleprime_generators(&RationalMatrix::from_i64(&[
            vec![1, 1, 0, 1],
            vec![0, 0, 1, 1]
        ]))
        .is_err());
    }

    #[test]
    fn groebner_small() {
        let det = minors_ideal(2, 2, 2).unwrap();
        let gb = buchberger(&det, 100).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(
            gb.k_polynomial().unwrap(),
            one_minus(2, 2, &[1, 1], vec![1, 1])
        );
        let m23 = minors_ideal(2, 3, 2).unwrap();
        let gb = buchberger(&m23, 100).unwrap();
        assert_eq!(gb.len(), 3);
        let k = gb.k_polynomial().unwrap();
        assert_eq!(k.coeff(&part(&[1, 1]), &[1, 1, 0]), BigInt::from(-1));
        assert_eq!(k.coeff(&part(&[2, 1]), &[1, 1, 1]), BigInt::from(1));
        assert_eq!(k.len(), 1 + 3 + 1);
        assert_eq!(gb.dimension(), 4);
        assert_eq!(gb.degree(), BigInt::from(3));
    }

    #[test]
    fn trivial_ideals() {
        let zero = IdealPresentation::new(2, 2, IdealKind::Custom, vec![]).unwrap();
        assert_eq!(dimension_of_quotient(&zero).unwrap(), 4);
        let all: Vec<GradedPoly> = (0..2)
            .flat_map(|i| (0..2).map(move |j| GradedPoly::var(2, 2, i, j)))
            .collect();
        let all = IdealPresentation::new(2, 2, IdealKind::Custom, all).unwrap();
        assert_eq!(dimension_of_quotient(&all).unwrap(), 0);
        let inhomog = GradedPoly::var(2, 2, 0, 0).add(&GradedPoly::var(2, 2, 0, 1));
        assert!(IdealPresentation::new(2, 2, IdealKind::Custom, vec![inhomog]).is_err());
    }

    #[test]
    fn uniform_rank_two_oracle() {
        let ipp = idoubleprime_generators(&u24()).unwrap();
        let gb = buchberger(&ipp, 1000).unwrap();
        assert_eq!(
            gb.k_polynomial().unwrap(),
            one_minus(2, 4, &[2, 2], vec![1, 1, 1, 1])
        );
        assert_eq!(gb.dimension(), 7);
        assert_eq!(gb.degree(), BigInt::from(4));
    }

    #[test]
    fn membership() {
        let v = RationalMatrix::from_i64(&[
            vec![1, 0, 0, 1, 1],
            vec![0, 1, 0, 1, 1],
            vec![0, 0, 1, 0, 1],
        ]);
        let w = RationalMatrix::from_i64(&[
            vec![1, 0, 0, 1, 1],
            vec![0, 1, 0, 1, 2],
            vec![0, 0, 0, 0, 0],
        ]);
        assert!(membership_test(&w, &v).unwrap());
        let g = RationalMatrix::from_i64(&[vec![2, 1], vec![1, 1]]);
        let w = translate(&u24(), &g, &[q(3), q(-1), q(5), q(7)]).unwrap();
        assert!(membership_test(&w, &u24()).unwrap());
        let other = RationalMatrix::from_i64(&[vec![1, 0, 1, 1], vec![0, 1, 1, 3]]);
        assert!(!membership_test(&other, &u24()).unwrap());
        let gen = &idoubleprime_generators(&u24()).unwrap().generators()[0].clone();
        assert!(gen.evaluate(&w).unwrap().is_zero());
        assert!(!gen.evaluate(&other).unwrap().is_zero());
    }
}
