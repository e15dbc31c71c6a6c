use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use orbitclass::cohomology::{
    codim_matrix_orbit, gkm_check, localize_orbit_via_permutations, localize_ut_class, multidegree,
};
use orbitclass::exactpoly::{LaurentPoly, Ring};
use orbitclass::kclass::{hilbert_coefficient, k_rank2, k_rank2_with_order, Rank2Config};
use orbitclass::matroid::catalog::catalog;
use orbitclass::matroid::{elements, next_permutation, RationalMatrix};
use orbitclass::oracle::{
    buchberger, idoubleprime_generators, iprime_generators, membership_test, translate,
    DEFAULT_STEP_CAP,
};
use orbitclass::symfunc::{lr_coeff, schur_expand, Partition};
use orbitclass::tensor::{
    expansion_coefficients, schur_weyl_module, sn_multiplicities, specht_weighted_dimension,
};

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Columns `k·(1, s_c)` for the `k`-th member of class `c`, zero for `None`.
fn realize(assignment: &[Option<usize>], slopes: &[i64]) -> RationalMatrix {
    let mut seen = vec![0i64; slopes.len()];
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
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

fn rank2_assignment(max_n: usize) -> impl Strategy<Value = Vec<Option<usize>>> {
    prop::collection::vec(
        prop_oneof![4 => (0usize..3).prop_map(Some), 1 => Just(None)],
        2..=max_n,
    )
    .prop_filter("rank 2", |a| {
        let classes: std::collections::BTreeSet<_> = a.iter().flatten().collect();
        classes.len() >= 2
    })
}

fn invertible_2x2() -> impl Strategy<Value = RationalMatrix> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
        .prop_filter("invertible", |(a, b, c, d)| a * d - b * c != 0)
        .prop_map(|(a, b, c, d)| RationalMatrix::from_i64(&[vec![a, b], vec![c, d]]))
}

fn torus(n: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec(prop_oneof![(1i64..=4), (-4i64..=-1)], n)
        .prop_map(|v| v.into_iter().map(rat).collect())
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (j, &c) in p.iter().enumerate() {
        inv[c] = j;
    }
    inv
}

#[test]
fn dual_is_an_involution_and_swaps_restriction_with_contraction() {
    for e in catalog(5) {
        let m = &e.matroid;
        assert_eq!(m.dual().dual(), *m);
        let ground = m.ground();
        for j in 0..=ground {
            if j & !ground != 0 {
                continue;
            }
            assert_eq!(
                m.restrict(j).dual(),
                m.dual().contract(ground & !j),
                "J={j:b}"
            );
        }
    }
}

#[test]
fn tutte_of_dual_swaps_variables() {
    for e in catalog(6) {
        let (t, td) = (e.matroid.tutte(), e.matroid.dual().tutte());
        for (&(i, j), c) in t.terms() {
            assert_eq!(td.coeff(j, i), *c);
        }
        assert_eq!(t.terms().count(), td.terms().count());
    }
}

#[test]
fn orbit_class_localizes_to_permutation_sums() {
    let t: Vec<BigRational> = [2, 7, -3, 5, 11].iter().map(|&x| rat(x)).collect();
    for e in catalog(5) {
        let m = &e.matroid;
        if m.rank() != 2 || !m.is_loopless() || m.connected_components().len() != 1 {
            continue;
        }
        let n = m.n();
        let k = k_rank2(&Rank2Config::from_matroid(m).unwrap()).unwrap();
        let class = multidegree(&k, codim_matrix_orbit(m, 2).unwrap()).unwrap();
        let loc = localize_ut_class(&class).unwrap();
        assert!(gkm_check(&loc), "{m:?}");
        let mut point = t[..n].to_vec();
        point.push(BigRational::zero());
        for b in loc.subsets() {
            let sum = localize_orbit_via_permutations(m, b, &t[..n]).unwrap();
            assert_eq!(
                loc.get(b).evaluate(&point).unwrap(),
                sum,
                "{m:?} at {:?}",
                elements(b)
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn insertion_order_does_not_matter(a in rank2_assignment(6), seed in any::<u64>()) {
        let cfg = Rank2Config::new(&a).unwrap();
        let base = k_rank2(&cfg).unwrap();
        let mut order = cfg.duplicates();
        let shift = if order.is_empty() { 0 } else { (seed as usize) % order.len() };
        order.rotate_left(shift);
        order.reverse();
        prop_assert_eq!(k_rank2_with_order(&cfg, &order).unwrap(), base);
    }

    #[test]
    fn column_permutation_relabels_t(a in rank2_assignment(5), seed in any::<u64>()) {
        let n = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        for _ in 0..(seed % 24) {
            if !next_permutation(&mut perm) {
                perm.sort_unstable();
            }
        }
        let permuted: Vec<Option<usize>> = perm.iter().map(|&p| a[p]).collect();
        let lhs = k_rank2(&Rank2Config::new(&permuted).unwrap()).unwrap();
        let rhs = k_rank2(&Rank2Config::new(&a).unwrap()).unwrap().relabel_t(n, &inverse(&perm));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn engine_matches_ideal_of_orbit_equations(a in rank2_assignment(4), s in prop::collection::vec(-5i64..=5, 3)) {
        prop_assume!(s[0] != s[1] && s[1] != s[2] && s[0] != s[2]);
        let v = realize(&a, &s);
        let engine = k_rank2(&Rank2Config::new(&a).unwrap()).unwrap();
        let oracle = buchberger(&iprime_generators(&v).unwrap(), DEFAULT_STEP_CAP).unwrap().k_polynomial().unwrap();
        prop_assert_eq!(engine, oracle);
    }

    #[test]
    fn tensor_multiplicities_are_orbit_invariants(
        a in rank2_assignment(4),
        g in invertible_2x2(),
        t in torus(4),
    ) {
        let v = realize(&a, &[0, 1, -2]);
        let moved = translate(&v, &g, &t[..v.cols()]).unwrap();
        let module = schur_weyl_module(&v).unwrap();
        let mult = sn_multiplicities(&module).unwrap();
        prop_assert_eq!(&sn_multiplicities(&schur_weyl_module(&moved).unwrap()).unwrap(), &mult);
        prop_assert_eq!(specht_weighted_dimension(&mult), BigInt::from(module.dimension()));
        let k = k_rank2(&Rank2Config::new(&a).unwrap()).unwrap();
        let ones = vec![1u32; v.cols()];
        prop_assert_eq!(expansion_coefficients(&hilbert_coefficient(&k, &ones).unwrap()), mult);
    }

    #[test]
    fn orbit_equations_vanish_on_translates(
        a in rank2_assignment(5),
        g in invertible_2x2(),
        t in torus(5),
    ) {
        let v = realize(&a, &[1, -1, 3]);
        let moved = translate(&v, &g, &t[..v.cols()]).unwrap();
        for f in iprime_generators(&v).unwrap().generators() {
            prop_assert!(f.evaluate(&moved).unwrap().is_zero());
        }
        prop_assert!(membership_test(&moved, &v).unwrap());
    }

    #[test]
    fn schur_expansion_round_trips(a in rank2_assignment(4)) {
        let k = k_rank2(&Rank2Config::new(&a).unwrap()).unwrap();
        prop_assert_eq!(schur_expand(&k.to_poly()).unwrap(), k);
    }

    #[test]
    fn laurent_division_inverts_multiplication(
        f in prop::collection::vec((prop::collection::vec(-2i32..=2, 4), -4i64..=4), 1..5),
        g in prop::collection::vec((prop::collection::vec(0i32..=2, 4), -3i64..=3), 1..4),
    ) {
        let ring = Ring::new(1, 2);
        let f = LaurentPoly::from_terms(ring, f.into_iter().map(|(e, c)| (e, BigInt::from(c))));
        let g = LaurentPoly::from_terms(ring, g.into_iter().map(|(e, c)| (e, BigInt::from(c))));
        prop_assume!(!g.is_zero());
        let product = f.checked_mul(&g).unwrap();
        prop_assert_eq!(product.exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn partition_involutions(parts in prop::collection::vec(0u32..=4, 0..=3)) {
        let p = Partition::from_unsorted(parts);
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        let c = p.rotated_complement(3, 4).unwrap();
        prop_assert_eq!(c.rotated_complement(3, 4).unwrap(), p.clone());
        prop_assert_eq!(c.size() + p.size(), 12);
    }

    #[test]
    fn littlewood_richardson_is_symmetric(
        l in prop::collection::vec(0u32..=3, 0..=3),
        m in prop::collection::vec(0u32..=3, 0..=3),
        nu in prop::collection::vec(0u32..=4, 0..=4),
    ) {
        let (l, m, nu) = (Partition::from_unsorted(l), Partition::from_unsorted(m), Partition::from_unsorted(nu));
        prop_assert_eq!(lr_coeff(&l, &m, &nu), lr_coeff(&m, &l, &nu));
        prop_assert_eq!(lr_coeff(&l, &m, &nu), lr_coeff(&l.transpose(), &m.transpose(), &nu.transpose()));
    }
}

#[test]
fn rank2_closure_contains_tensor_equations() {
    for s in [[0, 1, 3, -2], [2, -1, 5, 7]] {
        let v = realize(&[Some(0), Some(1), Some(2), Some(3)], &s);
        let outer = buchberger(&iprime_generators(&v).unwrap(), DEFAULT_STEP_CAP).unwrap();
        for f in idoubleprime_generators(&v).unwrap().generators() {
            assert!(outer.contains(f));
        }
    }
}
