//! The acceptance battery: twelve cross-checks between closed forms,
//! engines and oracles, each producing a pass/fail report.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::{
    codim_matrix_orbit, degree_uniform, gkm_check, localize_orbit_via_permutations,
    localize_uniform_closed, localize_uniform_grassmannian, localize_ut_class, multidegree,
    uniform_class_omega, uniform_class_section, uniform_class_ut,
};
use crate::error::{Error, Result};
use crate::exactpoly::LaurentPoly;
use crate::kclass::{
    dep_polynomial_as_printed, dep_polynomial_report, fakedep_hooks, hilbert_coefficient,
    hook_coefficient, hook_enumerator_fakedep, hook_theorem_report, k_direct_sum, k_rank2,
    k_rank2_closed_form_as_printed, k_uniform_rank2, Rank2Config,
};
use crate::matroid::catalog::catalog;
use crate::matroid::{elements, subdivision_check, Matroid, PolytopeCell, RationalMatrix};
use crate::oracle::{
    buchberger, idoubleprime_generators, iprime_generators, membership_test, minors_ideal,
    translate, DEFAULT_STEP_CAP,
};
use crate::rng::{distinct_coordinates, distinct_point, seeded};
use crate::symfunc::{part, rho, rho_h, rho_k, Partition, SchurExpansion};
use crate::tensor::{
    char_rank2, char_uniform_rank2, dual_gl_dimension, expansion_coefficients,
    hook_generating_identity, schur_weyl_module, sn_multiplicities,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// Rank-2 battery up to five columns.
    Fast,
    /// Everything, including six-column catalogs and rank-3 localizations.
    Full,
}

impl std::str::FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            other => Err(Error::Parse(format!("unknown level {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Documented disagreements with printed statements; informational, never failures.
    pub deviations: Vec<Value>,
    pub elapsed_ms: u128,
}

struct Outcome {
    passed: bool,
    detail: String,
    deviations: Vec<Value>,
}

/// Accumulates named checks; the criterion passes iff all of them do.
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
    deviations: Vec<Value>,
}

impl Checks {
    fn new() -> Self {
        Checks {
            failures: Vec::new(),
            notes: Vec::new(),
            deviations: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn budget(&mut self, start: Instant, limit: Duration) {
        let spent = start.elapsed();
        self.note(format!(
            "{:.2}s of {}s budget",
            spent.as_secs_f64(),
            limit.as_secs()
        ));
        self.check(
            spent <= limit,
            format!("exceeded {}s budget", limit.as_secs()),
        );
    }

    fn finish(self) -> Outcome {
        let mut detail = self.notes.join("; ");
        if !self.failures.is_empty() {
            detail = format!("FAILED: {}; {detail}", self.failures.join("; "));
        }
        Outcome {
            passed: self.failures.is_empty(),
            detail,
            deviations: self.deviations,
        }
    }
}

pub const CRITERIA: [(u32, &str); 12] = [
    (
        1,
        "uniform 2x4 class: formula, Demazure engine and Groebner oracle",
    ),
    (2, "tensor characters of U(2,n), n = 4, 5, 6"),
    (3, "matroid invariance across inequivalent realizations"),
    (4, "hook web on the rank-2 catalog and nbc/Tutte identity"),
    (5, "documented deviations reproduce with exact values"),
    (6, "valuativity on the octahedron split"),
    (7, "stabilization by a row of zeros"),
    (8, "uniform cohomology class: GKM and localizations"),
    (9, "cohomological raising operator consistency"),
    (10, "degrees of uniform classes against the oracle"),
    (11, "membership test"),
    (12, "codimension against oracle dimension"),
];

pub fn run_criterion(id: u32, seed: u64, level: Level) -> CriterionReport {
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map_or("unknown criterion", |(_, n)| n);
    let start = Instant::now();
    let result = match id {
        1 => criterion_1(),
        2 => criterion_2(level),
        3 => criterion_3(seed, level),
        4 => criterion_4(level),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(seed, level),
        9 => criterion_9(level),
        10 => criterion_10(),
        11 => criterion_11(seed),
        12 => criterion_12(),
        _ => Err(Error::Hypothesis(format!("no criterion {id}"))),
    };
    let elapsed_ms = start.elapsed().as_millis();
    match result {
        Ok(o) => CriterionReport {
            id,
            name,
            passed: o.passed,
            detail: o.detail,
            deviations: o.deviations,
            elapsed_ms,
        },
        Err(e) => CriterionReport {
            id,
            name,
            passed: false,
            detail: format!("error: {e}"),
            deviations: Vec::new(),
            elapsed_ms,
        },
    }
}

pub fn run_all(seed: u64, level: Level) -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(id, seed, level))
        .collect()
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `1 + c·s_λ t^a`.
fn one_plus(r: usize, n: usize, lambda: &[u32], a: Vec<i32>, c: i64) -> SchurExpansion {
    let mut e = SchurExpansion::one(r, n);
    e.add_term(part(lambda), a, BigInt::from(c));
    e
}

fn generic_rank2(n: usize) -> RationalMatrix {
    let top: Vec<i64> = (0..n).map(|j| if j == 1 { 0 } else { 1 }).collect();
    let bottom: Vec<i64> = (0..n)
        .map(|j| {
            if j == 0 {
                0
            } else {
                j as i64 - 1 + i64::from(j == 1)
            }
        })
        .collect();
    RationalMatrix::from_i64(&[top, bottom])
}

/// Columns `k·(1, s_c)` for the `k`-th member of class `c`; zero columns for `None`.
fn rank2_realization(assignment: &[Option<usize>], slopes: &[i64]) -> RationalMatrix {
    let mut seen = vec![0i64; slopes.len()];
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for a in assignment {
        match a {
            Some(c) => {
                seen[*c] += 1;
                top.push(seen[*c]);
                bottom.push(seen[*c] * slopes[*c]);
            }
            None => {
                top.push(0);
                bottom.push(0);
            }
        }
    }
    RationalMatrix::from_i64(&[top, bottom])
}

fn assignment_of(mu: &[u32], zeros: usize) -> Vec<Option<usize>> {
    let mut out: Vec<Option<usize>> = mu
        .iter()
        .enumerate()
        .flat_map(|(c, &m)| std::iter::repeat(Some(c)).take(m as usize))
        .collect();
    out.extend(std::iter::repeat(None).take(zeros));
    out
}

/// `x_{ij} = (j + 1)^i`: every maximal minor is a nonzero Vandermonde determinant.
fn vandermonde(r: usize, n: usize) -> RationalMatrix {
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..n).map(|j| (j as i64 + 1).pow(i as u32)).collect())
        .collect();
    RationalMatrix::from_i64(&rows)
}

fn cross_ratio(a: i64, b: i64, c: i64, d: i64) -> BigRational {
    BigRational::new(
        BigInt::from((a - c) * (b - d)),
        BigInt::from((a - d) * (b - c)),
    )
}

/// Parallelism partitions with at least two parts and at most `max_n` elements,
/// optionally padded with zero columns.
fn rank2_battery(max_n: usize, with_zeros: bool) -> Vec<Vec<Option<usize>>> {
    let mut out = Vec::new();
    for m in 2..=max_n {
        for mu in Partition::all_of(m as u32) {
            if mu.len() < 2 {
                continue;
            }
            let zmax = if with_zeros { max_n - m } else { 0 };
            for z in 0..=zmax {
                out.push(assignment_of(mu.parts(), z));
            }
        }
    }
    out
}

fn criterion_1() -> Result<Outcome> {
    let start = Instant::now();
    let mut c = Checks::new();
    let v = generic_rank2(4);
    let expected = one_plus(2, 4, &[2, 2], vec![1, 1, 1, 1], -1);
    let formula = k_uniform_rank2(4)?;
    let engine = k_rank2(&Rank2Config::from_matrix(&v)?)?;
    let oracle = buchberger(&idoubleprime_generators(&v)?, DEFAULT_STEP_CAP)?.k_polynomial()?;
    c.check(formula == expected, format!("formula gave {formula}"));
    c.check(engine == expected, format!("engine gave {engine}"));
    c.check(oracle == expected, format!("oracle gave {oracle}"));
    c.note(format!("all equal {expected}"));
    c.budget(start, Duration::from_secs(1));
    Ok(c.finish())
}

fn criterion_2(level: Level) -> Result<Outcome> {
    let start = Instant::now();
    let mut c = Checks::new();
    for (n, dim) in [(4usize, 15i64), (5, 26), (6, 42)] {
        let v = generic_rank2(n);
        let e = k_rank2(&Rank2Config::from_matrix(&v)?)?;
        let beta = vec![1u32; n];
        let hilb = hilbert_coefficient(&e, &beta)?;
        let formula = char_uniform_rank2(n)?;
        c.check(
            hilb == formula,
            format!("n={n}: Hilbert coefficient {hilb} vs {formula}"),
        );
        let d = formula.dimension();
        c.check(d == BigInt::from(dim), format!("n={n}: dimension {d}"));
        c.check(
            d * 6 == BigInt::from(n.pow(3) + 5 * n + 6),
            format!("n={n}: cubic dimension formula"),
        );
        let oracle_n = if level == Level::Full { 5 } else { 4 };
        if n <= oracle_n {
            let module = schur_weyl_module(&v)?;
            let mult = sn_multiplicities(&module)?;
            c.check(
                mult == expansion_coefficients(&formula),
                format!("n={n}: Schur-Weyl multiplicities {mult:?}"),
            );
            c.check(
                dual_gl_dimension(&module)? == BigInt::from(dim),
                format!("n={n}: dual module dimension"),
            );
            c.note(format!(
                "n={n}: oracle agrees, symmetric-group module dimension {}",
                module.dimension()
            ));
        }
    }
    c.budget(start, Duration::from_secs(30));
    Ok(c.finish())
}

fn criterion_3(seed: u64, level: Level) -> Result<Outcome> {
    let mut c = Checks::new();
    let mut rng = seeded(seed);
    let shapes: Vec<(Vec<u32>, usize)> = vec![
        (vec![1, 1, 1, 1], 0),
        (vec![2, 1, 1, 1], 0),
        (vec![1, 1, 1, 1, 1], 0),
        (vec![2, 2, 1, 1], 0),
        (vec![3, 1, 1, 1], 0),
        (vec![2, 1, 1, 1, 1], 0),
        (vec![1, 1, 1, 1, 1, 1], 0),
        (vec![1, 1, 1, 1], 1),
        (vec![2, 1, 1, 1], 1),
        (vec![1, 1, 1, 1, 1], 1),
    ];
    let oracle_max = if level == Level::Full { 6 } else { 5 };
    let mut pairs = 0;
    for (mu, zeros) in shapes {
        let assignment = assignment_of(&mu, zeros);
        let n = assignment.len();
        let s1 = distinct_coordinates(&mut rng, mu.len());
        let s2 = distinct_coordinates(&mut rng, mu.len());
        let (v1, v2) = (
            rank2_realization(&assignment, &s1),
            rank2_realization(&assignment, &s2),
        );
        let label = format!("mu={mu:?}+{zeros}");
        c.check(
            cross_ratio(s1[0], s1[1], s1[2], s1[3]) != cross_ratio(s2[0], s2[1], s2[2], s2[3]),
            format!("{label}: cross-ratios coincide"),
        );
        c.check(
            Matroid::from_matrix(&v1)? == Matroid::from_matrix(&v2)?,
            format!("{label}: matroids differ"),
        );
        let k1 = k_rank2(&Rank2Config::from_matrix(&v1)?)?;
        let k2 = k_rank2(&Rank2Config::from_matrix(&v2)?)?;
        c.check(k1 == k2, format!("{label}: classes differ"));
        if n <= oracle_max {
            let m1 = sn_multiplicities(&schur_weyl_module(&v1)?)?;
            let m2 = sn_multiplicities(&schur_weyl_module(&v2)?)?;
            c.check(m1 == m2, format!("{label}: multiplicities differ"));
            if zeros == 0 {
                let ch = expansion_coefficients(&char_rank2(&Partition::new(mu.clone())?)?);
                c.check(
                    m1 == ch,
                    format!("{label}: multiplicities {m1:?} vs character {ch:?}"),
                );
            }
        }
        pairs += 1;
    }
    c.note(format!(
        "{pairs} realization pairs with distinct cross-ratios"
    ));
    c.check(pairs >= 10, "fewer than 10 pairs");
    Ok(c.finish())
}

/// Coefficients of `t^β` in an enumerator, as `q`-polynomials, for square-free β.
fn per_beta(p: &LaurentPoly, n: usize) -> std::collections::BTreeMap<u32, Vec<BigInt>> {
    let mut out: std::collections::BTreeMap<u32, Vec<BigInt>> = std::collections::BTreeMap::new();
    let ring = p.ring();
    for (e, coef) in p.terms() {
        let mask = (0..n)
            .filter(|&j| e[ring.t(j + 1)] != 0)
            .fold(0u32, |m, j| m | 1 << j);
        let d = e[ring.q_slot()] as usize;
        let v = out.entry(mask).or_default();
        if v.len() <= d {
            v.resize(d + 1, BigInt::zero());
        }
        v[d] += coef;
    }
    out
}

fn criterion_4(level: Level) -> Result<Outcome> {
    let start = Instant::now();
    let mut c = Checks::new();
    let max_n = if level == Level::Full { 6 } else { 5 };
    let battery = rank2_battery(max_n, false);
    let mut coefficients = 0;
    for assignment in &battery {
        let cfg = Rank2Config::new(assignment)?;
        let m = cfg.matroid();
        let n = m.n();
        let e = k_rank2(&cfg)?;
        let table = fakedep_hooks(&m, 2)?;
        for beta in 1u32..1 << n {
            let bv: Vec<u32> = (0..n).map(|j| beta >> j & 1).collect();
            for k in 1..=2usize.min(beta.count_ones() as usize) {
                let got = hook_coefficient(&e, k, &bv)?;
                let want = table.get(&(beta, k)).cloned().unwrap_or_default();
                c.check(
                    got == want,
                    format!("{assignment:?} beta={bv:?} k={k}: class {got} vs enumerator {want}"),
                );
                coefficients += 1;
            }
        }
        for (beta, poly) in per_beta(&hook_enumerator_fakedep(&m), n) {
            if beta == 0 {
                continue;
            }
            let at_minus_one: BigInt = poly
                .iter()
                .enumerate()
                .map(|(d, x)| if d % 2 == 0 { x.clone() } else { -x })
                .sum();
            if m.is_independent(beta) {
                c.check(
                    poly.iter().all(Zero::is_zero),
                    format!("{assignment:?}: nonzero on independent {beta:b}"),
                );
            } else {
                c.check(
                    at_minus_one.is_zero(),
                    format!("{assignment:?}: not divisible by q+1 at {beta:b}"),
                );
            }
        }
    }
    c.note(format!(
        "{} rank-2 configurations, {coefficients} hook coefficients",
        battery.len()
    ));
    let mut checked = 0;
    for entry in catalog(max_n) {
        if !entry.matroid.is_loopless() {
            continue;
        }
        let (lhs, rhs) = hook_generating_identity(&entry.matroid)?;
        c.check(
            lhs == rhs,
            format!("nbc/Tutte identity fails on {:?}", entry.matroid.bases()),
        );
        checked += 1;
    }
    c.note(format!(
        "nbc/Tutte identity on {checked} loopless catalog matroids (n <= {max_n})"
    ));
    c.budget(start, Duration::from_secs(60));
    Ok(c.finish())
}

fn criterion_5() -> Result<Outcome> {
    let mut c = Checks::new();
    let u12 = Matroid::uniform(1, 2);

    // (a) Dependency polynomial exponent.
    let printed = dep_polynomial_as_printed(&u12);
    let fake = hook_enumerator_fakedep(&u12);
    let report = dep_polynomial_report(&u12)?;
    c.check(
        printed != fake,
        "dependency polynomial agrees with the enumerator",
    );
    c.check(!report.is_empty(), "no dependency-polynomial discrepancy");
    c.deviations.push(json!({
        "item": "a",
        "what": "dependency polynomial exponent q^(rk-1) vs q^rk on U(1,2)",
        "printed": printed.to_string(),
        "normative": fake.to_string(),
        "coefficients": report,
    }));

    // (b) Hook statement sign and magnitude; confirmed by oracle K-polynomials.
    let det = buchberger(&minors_ideal(2, 2, 2)?, DEFAULT_STEP_CAP)?.k_polynomial()?;
    let det_hook = hook_coefficient(&det, 2, &[1, 1])?;
    let sign_report = hook_theorem_report(&u12, 2)?;
    let sign = sign_report
        .iter()
        .find(|d| d.beta == vec![1, 1] && d.k == 2);
    c.check(
        sign.is_some_and(|d| d.printed == BigInt::one() && d.normative == BigInt::from(-1)),
        format!("U(1,2) sign report {sign_report:?}"),
    );
    c.check(
        det_hook == BigInt::from(-1),
        format!("oracle hook coefficient {det_hook} on U(1,2)"),
    );
    let p3 = Matroid::uniform(1, 3);
    let mag_report = hook_theorem_report(&p3, 3)?;
    let mag = mag_report
        .iter()
        .find(|d| d.beta == vec![1, 1, 1] && d.k == 3);
    let minors33 = buchberger(&minors_ideal(3, 3, 2)?, DEFAULT_STEP_CAP)?.k_polynomial()?;
    let oracle_mag = hook_coefficient(&minors33, 3, &[1, 1, 1])?;
    c.check(
        mag.is_some_and(|d| d.normative == BigInt::from(2)),
        format!("3-parallel report {mag_report:?}"),
    );
    c.check(
        oracle_mag == BigInt::from(2),
        format!("oracle k=3 coefficient {oracle_mag}"),
    );
    c.deviations.push(json!({
        "item": "b",
        "what": "hook statement: sign on U(1,2), magnitude at the 3-parallel k=3 coefficient",
        "sign": sign,
        "magnitude": mag,
        "note": "the statement allows only 0 or +-1; the literal reading gives 0 at k=3",
        "oracle": {"u12_k2": det_hook.to_string(), "parallel3_k3": oracle_mag.to_string()},
    }));

    // (c) Closed form for the (2,2) configuration; confirmed by a direct sum.
    let cfg = Rank2Config::from_classes(4, &[vec![1, 2], vec![3, 4]])?;
    let (_, closed_report) = k_rank2_closed_form_as_printed(&cfg)?;
    let normative = k_rank2(&cfg)?;
    let point = SchurExpansion::one(1, 2);
    let sum = k_direct_sum(&point, &point)?;
    let hit = closed_report
        .iter()
        .find(|d| d.beta == vec![1, 1, 1, 1] && d.k == 2);
    c.check(
        hit.is_some_and(|d| d.printed.is_zero() && d.normative == BigInt::one()),
        format!("closed-form report {closed_report:?}"),
    );
    c.check(normative == sum, "engine and direct sum disagree on (2,2)");
    c.check(
        normative.coeff(&part(&[2, 2]), &[1, 1, 1, 1]) == BigInt::one(),
        "missing s22 e4 coefficient",
    );
    c.deviations.push(json!({
        "item": "c",
        "what": "rank-2 closed form on parallelism (2,2) misses +s(2,2) t1t2t3t4",
        "coefficients": closed_report,
    }));

    // (d) Index shift in the raising-operator example.
    let mut shifts = Vec::new();
    for r in 1..=2usize {
        let one = SchurExpansion::one(r, 0);
        let at_r = rho_k(r as u32, &one)?;
        let at_r1 = rho_k(r as u32 + 1, &one)?;
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let claimed = SchurExpansion::term(
            r + 1,
            0,
            Partition::column(r + 1),
            vec![],
            BigInt::from(sign),
        );
        c.check(at_r.is_zero(), format!("rho_{r}(1) = {at_r} at r={r}"));
        c.check(
            at_r1 == claimed,
            format!("rho_{}(1) = {at_r1} at r={r}", r + 1),
        );
        shifts.push(json!({"r": r, "printed_index": r, "printed_value": claimed.to_string(), "value_at_printed_index": at_r.to_string(), "value_at_next_index": at_r1.to_string()}));
    }
    let stabilized = rho(&SchurExpansion::one(1, 2))?;
    c.check(
        stabilized == det,
        "rho(1) disagrees with the determinant oracle",
    );
    c.deviations.push(
        json!({"item": "d", "what": "raising-operator example index shift", "cases": shifts}),
    );
    c.note("four deviations emitted, normative values confirmed by oracle or direct sum");
    Ok(c.finish())
}

fn criterion_6() -> Result<Outcome> {
    let mut c = Checks::new();
    let u24 = Rank2Config::from_classes(4, &[vec![1], vec![2], vec![3], vec![4]])?;
    let m1 = Rank2Config::from_classes(4, &[vec![1, 2], vec![3], vec![4]])?;
    let m2 = Rank2Config::from_classes(4, &[vec![1], vec![2], vec![3, 4]])?;
    let m12 = Rank2Config::from_classes(4, &[vec![1, 2], vec![3, 4]])?;
    let lhs = k_rank2(&u24)?;
    let rhs = k_rank2(&m1)?
        .checked_add(&k_rank2(&m2)?)?
        .checked_sub(&k_rank2(&m12)?)?;
    c.check(lhs == rhs, format!("{lhs} vs {rhs}"));
    let cells = vec![
        PolytopeCell {
            matroid: m1.matroid(),
            sign: 1,
        },
        PolytopeCell {
            matroid: m2.matroid(),
            sign: 1,
        },
        PolytopeCell {
            matroid: m12.matroid(),
            sign: -1,
        },
    ];
    c.check(
        subdivision_check(&u24.matroid(), &cells)?,
        "indicator identity fails",
    );
    let mut wrong = cells.clone();
    wrong[2].sign = 1;
    c.check(
        !subdivision_check(&u24.matroid(), &wrong)?,
        "negative control passed",
    );
    c.note(format!(
        "K(U24) = {lhs}; octahedron = two pyramids glued along a square"
    ));
    Ok(c.finish())
}

fn criterion_7() -> Result<Outcome> {
    let mut c = Checks::new();
    let parallel3 = rho(&SchurExpansion::one(1, 3))?;
    let v = RationalMatrix::from_i64(&[vec![1, 2, 3], vec![0, 0, 0]]);
    let from_equations = buchberger(&iprime_generators(&v)?, DEFAULT_STEP_CAP)?.k_polynomial()?;
    c.check(
        parallel3 == from_equations,
        format!("3-parallel 2x3: {parallel3} vs {from_equations}"),
    );
    let raised = rho(&parallel3)?;
    let oracle = buchberger(&minors_ideal(3, 3, 2)?, DEFAULT_STEP_CAP)?.k_polynomial()?;
    c.check(raised == oracle, format!("{raised} vs {oracle}"));
    let two = raised.coeff(&part(&[1, 1, 1]), &[1, 1, 1]);
    c.check(
        two == BigInt::from(2),
        format!("coefficient on s(1,1,1) t1t2t3 is {two}"),
    );
    let small = rho(&SchurExpansion::one(1, 2))?;
    let det = buchberger(&minors_ideal(2, 2, 2)?, DEFAULT_STEP_CAP)?.k_polynomial()?;
    c.check(
        small == one_plus(2, 2, &[1, 1], vec![1, 1], -1),
        format!("rho(1) = {small}"),
    );
    c.check(small == det, "rho(1) vs determinant oracle");
    c.note(format!("rho of the 3-parallel class: {raised}"));
    Ok(c.finish())
}

fn criterion_8(seed: u64, level: Level) -> Result<Outcome> {
    let start = Instant::now();
    let mut c = Checks::new();
    let mut cases = vec![(2usize, 4usize), (2, 5)];
    if level == Level::Full {
        cases.extend([(3, 5), (3, 6)]);
    }
    let mut rng = seeded(seed);
    for &(r, n) in &cases {
        let grass = localize_uniform_grassmannian(r, n)?;
        c.check(gkm_check(&grass), format!("({r},{n}): GKM fails"));
        let ut = uniform_class_ut(r, n)?;
        let section = uniform_class_section(r, n)?;
        c.check(
            localize_ut_class(&ut)? == grass,
            format!("({r},{n}): (u,t) form localizes differently"),
        );
        c.check(
            localize_ut_class(&section)? == grass,
            format!("({r},{n}): reduced form localizes differently"),
        );
        c.check(
            uniform_class_omega(r, n)? == ut,
            format!("({r},{n}): omega form differs"),
        );
        c.check(
            section.terms().all(|(l, _, _)| l[0] as usize <= n - r),
            format!("({r},{n}): reduced part exceeds n-r"),
        );
        if ut == section {
            c.check(
                ut.terms().all(|(l, _, _)| l[0] as usize <= n - r),
                format!("({r},{n}): part exceeds n-r"),
            );
        } else {
            // Only beyond the listed cases: the display picks up rank-deficient classes.
            let oracle = buchberger(&iprime_generators(&vandermonde(r, n))?, DEFAULT_STEP_CAP)?;
            let codim = codim_matrix_orbit(&Matroid::uniform(r, n), r)?;
            let from_oracle = multidegree(&oracle.k_polynomial()?, codim)?;
            c.check(
                from_oracle == section,
                format!("({r},{n}): reduced form differs from the oracle multidegree"),
            );
            let excess = ut.checked_sub(&section)?;
            c.deviations.push(json!({
                "item": "e",
                "what": "uniform (u,t) display leaves the r x (n-r) box; it equals the oracle class plus a class supported on rank-deficient matrices",
                "r": r,
                "n": n,
                "excess": excess.to_string(),
                "printed_degree": degree_uniform(r, n)?.to_string(),
                "oracle_degree": oracle.degree().to_string(),
            }));
        }
        let m = Matroid::uniform(r, n);
        for _ in 0..20 {
            let t = distinct_point(&mut rng, n);
            let mut full = t.clone();
            full.push(BigRational::zero());
            for b in grass.subsets() {
                let sym = grass.get(b).evaluate(&full)?;
                let closed = localize_uniform_closed(&elements(b), r, n, &t)?;
                let perm = localize_orbit_via_permutations(&m, b, &t)?;
                c.check(
                    sym == closed && sym == perm,
                    format!("({r},{n}) at B={b:b}: {sym} / {closed} / {perm}"),
                );
            }
        }
        let mut corrupted = grass.clone();
        let first = corrupted.subsets()[0];
        let bumped = &corrupted.get(first) + &LaurentPoly::t(corrupted.get(first).ring(), 1);
        corrupted.entries.insert(first, bumped);
        c.check(
            !gkm_check(&corrupted),
            format!("({r},{n}): corrupted localization passes GKM"),
        );
    }
    c.note(format!("cases {cases:?}, 20 seeded points each"));
    c.budget(start, Duration::from_secs(120));
    Ok(c.finish())
}

fn criterion_9(level: Level) -> Result<Outcome> {
    let mut c = Checks::new();
    let max_n = if level == Level::Full { 6 } else { 5 };
    let battery = rank2_battery(max_n, true);
    for assignment in &battery {
        let cfg = Rank2Config::new(assignment)?;
        let m = cfg.matroid();
        let n = m.n();
        let e = k_rank2(&cfg)?;
        let codim = codim_matrix_orbit(&m, 2)?;
        let lhs = multidegree(&rho(&e)?, codim + n - 2)?;
        let rhs = rho_h(1, &multidegree(&e, codim)?)?;
        c.check(lhs == rhs, format!("{assignment:?}: {lhs} vs {rhs}"));
    }
    for n in 2..=max_n {
        let one = SchurExpansion::one(1, n);
        let lhs = multidegree(&rho(&one)?, n - 1)?;
        let rhs = rho_h(1, &one)?;
        c.check(lhs == rhs, format!("r=1, n={n}: {lhs} vs {rhs}"));
    }
    c.note(format!(
        "{} rank-2 classes (zero columns included) and the unit class at r=1",
        battery.len()
    ));
    Ok(c.finish())
}

fn criterion_10() -> Result<Outcome> {
    let mut c = Checks::new();
    let d4 = degree_uniform(2, 4)?;
    let quartic = idoubleprime_generators(&generic_rank2(4))?;
    let gen_degree = quartic
        .generators()
        .iter()
        .map(|g| g.total_degree().unwrap_or(0))
        .collect::<Vec<_>>();
    c.check(
        d4 == BigInt::from(4) && gen_degree == vec![4],
        format!("degree {d4}, generator degrees {gen_degree:?}"),
    );
    let d5 = degree_uniform(2, 5)?;
    let oracle = buchberger(
        &idoubleprime_generators(&generic_rank2(5))?,
        DEFAULT_STEP_CAP,
    )?
    .degree();
    c.check(
        d5 == BigInt::from(10) && oracle == d5,
        format!("degree {d5} vs oracle {oracle}"),
    );
    c.note(format!("2x4: {d4}; 2x5: {d5}"));
    Ok(c.finish())
}

fn random_invertible(rng: &mut rand_chacha::ChaCha8Rng, r: usize) -> Result<RationalMatrix> {
    use rand::Rng;
    loop {
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..r).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        let g = RationalMatrix::from_i64(&rows);
        if !g.determinant()?.is_zero() {
            return Ok(g);
        }
    }
}

fn random_torus(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Vec<BigRational> {
    use rand::Rng;
    distinct_coordinates(rng, n)
        .into_iter()
        .map(|x| q(if rng.gen_bool(0.5) { x } else { -x }))
        .collect()
}

fn criterion_11(seed: u64) -> Result<Outcome> {
    let mut c = Checks::new();
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
    c.check(membership_test(&w, &v)?, "degenerate example rejected");
    let mut rng = seeded(seed);
    let u24 = generic_rank2(4);
    let mut translates = 0;
    for base in [&v, &u24] {
        for _ in 0..100 {
            let g = random_invertible(&mut rng, base.rows())?;
            let t = random_torus(&mut rng, base.cols());
            let moved = translate(base, &g, &t)?;
            c.check(membership_test(&moved, base)?, "translate rejected");
            translates += 1;
        }
    }
    let quartic = idoubleprime_generators(&u24)?.generators()[0].clone();
    let mut negatives = 0;
    for delta in 1..=20i64 {
        // Moving the last slope changes the cross-ratio of the four columns.
        let w = RationalMatrix::from_i64(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2 + delta]]);
        c.check(
            !membership_test(&w, &u24)?,
            format!("perturbation {delta} accepted"),
        );
        c.check(
            !quartic.evaluate(&w)?.is_zero(),
            format!("quartic vanishes at perturbation {delta}"),
        );
        negatives += 1;
    }
    c.note(format!(
        "{translates} translates accepted, {negatives} perturbed configurations rejected"
    ));
    Ok(c.finish())
}

fn criterion_12() -> Result<Outcome> {
    let mut c = Checks::new();
    for (n, want) in [(4usize, 1usize), (5, 2)] {
        let v = generic_rank2(n);
        let codim = codim_matrix_orbit(&Matroid::from_matrix(&v)?, 2)?;
        let dim = buchberger(&idoubleprime_generators(&v)?, DEFAULT_STEP_CAP)?.dimension();
        c.check(
            codim == want && 2 * n - dim == want,
            format!("2x{n}: codim {codim}, oracle dimension {dim}"),
        );
        c.note(format!("2x{n}: codim {codim}, dimension {dim}"));
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers() {
        let v = generic_rank2(5);
        assert_eq!(Matroid::from_matrix(&v).unwrap(), Matroid::uniform(2, 5));
        let a = assignment_of(&[2, 1], 1);
        assert_eq!(a, vec![Some(0), Some(0), Some(1), None]);
        let w = rank2_realization(&a, &[3, 5]);
        assert_eq!(
            Rank2Config::from_matrix(&w).unwrap(),
            Rank2Config::new(&a).unwrap()
        );
        assert_eq!(rank2_battery(4, false).len(), 7);
    }

    #[test]
    fn level_parse() {
        assert_eq!("fast".parse::<Level>().unwrap(), Level::Fast);
        assert!("slow".parse::<Level>().is_err());
    }
}
