use poisson_kit::algebra::{LaurentScalar, Rational};
use poisson_kit::quantum::{parse_nc, NCPolynomial, NCWord, QuantumMatrixRing};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = NCWord> {
    proptest::collection::vec(0..(n * n) as u16, 0..=max_len).prop_map(NCWord)
}

fn scalar() -> impl Strategy<Value = LaurentScalar> {
    proptest::collection::vec((-2i32..=2, -3i64..=3), 1..3)
        .prop_map(|t| LaurentScalar::from_terms(t.into_iter().map(|(k, c)| (k, Rational::from_integer(c.into())))))
}

fn element(n: usize, max_len: usize) -> impl Strategy<Value = NCPolynomial> {
    proptest::collection::vec((word(n, max_len), scalar()), 0..3).prop_map(move |terms| {
        let mut p = NCPolynomial::zero(n);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn confluence_under_random_orders(w1 in word(3, 3), w2 in word(3, 2), seed in any::<u64>()) {
        let ring = QuantumMatrixRing::new(3);
        let one = LaurentScalar::one();
        let left = ring.normal_form(&NCPolynomial::term(3, w1.clone(), one.clone()));
        let memo = ring.normal_form(&left.concat_product(&NCPolynomial::term(3, w2.clone(), one.clone())));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let direct = NCPolynomial::term(3, w1.concat(&w2), one);
        prop_assert_eq!(ring.normal_form_random_order(&direct, &mut rng), memo.clone());
        prop_assert_eq!(ring.normal_form_random_order(&direct, &mut rng), memo);
    }

    #[test]
    fn associativity(a in element(3, 2), b in element(3, 2), c in element(3, 2)) {
        let ring = QuantumMatrixRing::new(3);
        let ab_c = ring.mul(&ring.mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = ring.mul(&a, &ring.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn normal_form_is_idempotent_and_normal(a in element(2, 5)) {
        let ring = QuantumMatrixRing::new(2);
        let nf = ring.normal_form(&a);
        prop_assert!(nf.is_normal());
        prop_assert_eq!(ring.normal_form(&nf), nf.clone());
        prop_assert_eq!(nf.specialize_at_one(), a.specialize_at_one());
    }

    #[test]
    fn print_then_parse(a in element(3, 4)) {
        prop_assert_eq!(parse_nc(&a.to_string(), 3).unwrap(), a);
    }

    #[test]
    fn commutators_vanish_at_one(a in element(3, 2), b in element(3, 2)) {
        let ring = QuantumMatrixRing::new(3);
        let c = ring.commutator(&a, &b).unwrap();
        prop_assert!(c.specialize_at_one().is_zero());
        prop_assert!(c.terms().all(|(_, k)| k.div_t_minus_one().is_some()));
    }
}

#[test]
fn defining_relations_hold() {
    let ring = QuantumMatrixRing::new(3);
    let t = LaurentScalar::t_pow(1);
    let x = |i, j| NCPolynomial::x(3, i, j);
    let mul = |a: &NCPolynomial, b: &NCPolynomial| ring.mul(a, b).unwrap();
    for (i, j) in (1..=3).flat_map(|i| (1..=3).map(move |j| (i, j))) {
        for (k, l) in (1..=3).flat_map(|k| (1..=3).map(move |l| (k, l))) {
            let (a, b) = (x(i, j), x(k, l));
            let lhs = mul(&a, &b);
            let rhs = if (i == k && j < l) || (j == l && i < k) {
                mul(&b, &a).scale(&t)
            } else if i < k && j > l {
                mul(&b, &a)
            } else if i < k && j < l {
                let extra = mul(&x(i, l), &x(k, j)).scale(&LaurentScalar::t_minus_t_inv());
                &mul(&b, &a) + &extra
            } else {
                continue;
            };
            assert_eq!(lhs, rhs, "x[{i},{j}] x[{k},{l}]");
        }
    }
}
