mod common;

use std::collections::BTreeMap;

use alexandria::cycmod::{CycModule, Primary};
use alexandria::laurent::{cyclotomic, factor_cyclotomic};
use alexandria::{Matrix, Poly, Rational};
use common::oracles::{cyclotomic_by_division, t_pow_minus_one, tensor_oracle, totient_by_count};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    (prop::collection::vec((-5i64..=5, 1i64..=3), 0..6), -3i64..=3).prop_map(|(c, s)| {
        Poly::new(c.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect(), s)
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Cyclotomic primaries `(q, e)` with small `q`.
fn cyclotomic_module() -> impl Strategy<Value = CycModule> {
    prop::collection::vec((1u64..=12, 1u32..=3), 0..4).prop_map(|v| {
        CycModule::new(0, v.into_iter().map(|(q, e)| Primary::cyclotomic(q, e).unwrap()).collect())
    })
}

fn semisimple_module() -> impl Strategy<Value = CycModule> {
    prop::collection::vec(1u64..=15, 0..4)
        .prop_map(|v| CycModule::new(0, v.into_iter().map(|q| Primary::cyclotomic(q, 1).unwrap()).collect()))
}

#[test]
fn sixth_cyclotomic_tensor_square() {
    let m6 = CycModule::new(0, vec![Primary::cyclotomic(6, 1).unwrap()]);
    let sq = m6.tensor_semisimple(&m6).unwrap();
    let expected = CycModule::new(
        0,
        vec![Primary::cyclotomic(1, 1).unwrap(), Primary::cyclotomic(1, 1).unwrap(), Primary::cyclotomic(3, 1).unwrap()],
    );
    assert_eq!(sq, expected);
    assert_eq!(tensor_oracle(&m6, &m6), BTreeMap::from([(1, 2), (3, 2)]));
}

#[test]
fn cyclotomic_polynomials_match_division_oracle() {
    let mut cache = BTreeMap::new();
    for q in 1..=120 {
        assert_eq!(cyclotomic::<Rational>(q).unwrap(), cyclotomic_by_division(q, &mut cache), "q={q}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a);
    }

    #[test]
    fn division_with_remainder(a in poly(), d in nonzero_poly()) {
        let (q, r) = a.div_rem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.is_zero() || r.span() < d.span() || d.span() == 0);
    }

    #[test]
    fn gcd_divides_and_is_maximal(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
        let gc = (&a * &c).gcd(&(&b * &c)).unwrap();
        prop_assert!(gc.is_associate(&(&g * &c)));
    }

    #[test]
    fn text_and_triples_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a.clone());
        prop_assert_eq!(Poly::from_triples(&a.to_triples().unwrap()).unwrap(), a);
    }

    #[test]
    fn canonical_forms_represent_unit_orbits(a in nonzero_poly(), k in -4i64..=4, c in 1i64..=7, neg: bool) {
        let sign = Rational::from_integer(if neg { -1 } else { 1 }.into());
        let u = a.shifted(k).scale(&sign);
        prop_assert_eq!(u.canonicalize(), a.canonicalize());
        prop_assert!(a.canonicalize().is_canonical());
        prop_assert!(a.same_orbit(&u));
        let v = u.scale(&Rational::new(c.into(), 3.into()));
        prop_assert_eq!(v.monic(), a.monic());
        prop_assert!(v.is_associate(&a));
    }

    #[test]
    fn cyclotomic_factorization_reconstructs(qs in prop::collection::vec(1u64..=30, 0..4), rest in nonzero_poly()) {
        let f = qs.iter().fold(rest.clone(), |acc, &q| &acc * &cyclotomic::<Rational>(q).unwrap());
        let fac = factor_cyclotomic(&f).unwrap();
        prop_assert!(fac.reconstruct().is_associate(&f));
        for q in &qs {
            prop_assert!(fac.factors.contains_key(q));
        }
    }

    #[test]
    fn tensor_matches_eigenvalue_products(a in semisimple_module(), b in semisimple_module()) {
        let t = a.tensor_semisimple(&b).unwrap();
        let lib: BTreeMap<u64, u64> = t
            .cyclotomic_multiplicities()
            .unwrap()
            .into_iter()
            .map(|(q, m)| (q, m as u64 * totient_by_count(q)))
            .collect();
        prop_assert_eq!(lib, tensor_oracle(&a, &b));
        prop_assert_eq!(t.dimension(), Some(a.dimension().unwrap() * b.dimension().unwrap()));
    }

    #[test]
    fn order_is_multiplicative(a in cyclotomic_module(), b in cyclotomic_module()) {
        let s = a.direct_sum(&b);
        prop_assert_eq!(s.order().unwrap(), (&a.order().unwrap() * &b.order().unwrap()).monic());
        prop_assert_eq!(s.dimension().unwrap(), a.dimension().unwrap() + b.dimension().unwrap());
    }

    #[test]
    fn covariants_are_a_quotient(m in cyclotomic_module(), d in 1u64..=12) {
        let cov = m.covariants_mod(&t_pow_minus_one(d)).unwrap();
        prop_assert!(cov.dimension().unwrap() <= m.dimension().unwrap());
        prop_assert!(cov.order().unwrap().divides(&m.order().unwrap()).unwrap());
        for p in cov.primaries() {
            prop_assert!(p.annihilator().divides(&t_pow_minus_one(d)).unwrap());
        }
        prop_assert!(cov.is_semisimple());
    }

    #[test]
    fn module_json_round_trips(m in cyclotomic_module(), r in 0usize..3) {
        let m = m.direct_sum(&CycModule::free(r));
        let text = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<CycModule>(&text).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    /// Invertible row and column operations do not change the cokernel.
    #[test]
    fn cokernel_invariant_under_unimodular_changes(
        diag in prop::collection::vec((1u64..=8, 0u32..=2), 1..=3),
        ops in prop::collection::vec((0usize..3, 0usize..3, poly(), any::<bool>()), 0..6),
    ) {
        let n = diag.len();
        let entries: Vec<Poly> = diag.iter().map(|&(q, e)| cyclotomic::<Rational>(q).unwrap().pow(e)).collect();
        let base = Matrix::diagonal(entries);
        let mut left = Matrix::identity(n);
        let mut right = Matrix::identity(n);
        for (i, j, c, rows) in ops {
            let (i, j) = (i % n, j % n);
            if i == j {
                continue;
            }
            let mut e = Matrix::identity(n);
            e.set(i, j, c);
            if rows { left = &e * &left } else { right = &right * &e }
        }
        let moved = &(&left * &base) * &right;
        prop_assert_eq!(
            CycModule::from_presentation(&moved).unwrap(),
            CycModule::from_presentation(&base).unwrap()
        );
    }
}
