mod common;

use common::{polynomial, rational};
use num_traits::Zero;
use poisson_kit::algebra::{parse_polynomial, Context, LaurentScalar, Polynomial};
use poisson_kit::linalg::{echelon, integer_rows, rank_rational};
use poisson_kit::algebra::Rational;
use proptest::prelude::*;

const M2: Context = Context::Matrix { n: 2 };

proptest! {
    #[test]
    fn ring_axioms(a in polynomial(M2, 4, 3), b in polynomial(M2, 4, 3), c in polynomial(M2, 3, 2)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn degree_is_additive(a in polynomial(M2, 4, 3), b in polynomial(M2, 4, 3)) {
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn print_then_parse(a in polynomial(Context::Matrix { n: 3 }, 6, 4)) {
        let back = parse_polynomial(&a.to_string(), a.context()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn print_then_parse_other_rosters(a in polynomial(Context::MatrixT { n: 2 }, 5, 3), b in polynomial(Context::Diagonal { n: 3 }, 5, 3)) {
        prop_assert_eq!(parse_polynomial(&a.to_string(), a.context()).unwrap(), a);
        prop_assert_eq!(parse_polynomial(&b.to_string(), b.context()).unwrap(), b);
    }

    #[test]
    fn mixed_partials_commute(a in polynomial(M2, 5, 4), u in 0usize..4, v in 0usize..4) {
        prop_assert_eq!(a.partial(u).partial(v), a.partial(v).partial(u));
    }

    #[test]
    fn product_rule(a in polynomial(M2, 4, 3), b in polynomial(M2, 4, 3), v in 0usize..4) {
        prop_assert_eq!((&a * &b).partial(v), &(&a.partial(v) * &b) + &(&a * &b.partial(v)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in polynomial(M2, 4, 3), b in polynomial(M2, 4, 3), p in proptest::collection::vec(rational(), 4)) {
        prop_assert_eq!((&a * &b).eval(&p), a.eval(&p) * b.eval(&p));
        prop_assert_eq!((&a + &b).eval(&p), a.eval(&p) + b.eval(&p));
    }

    #[test]
    fn laurent_division_exact_iff_root(terms in proptest::collection::vec((-4i32..=4, rational()), 0..6)) {
        let f = LaurentScalar::from_terms(terms);
        let q = f.div_t_minus_one();
        prop_assert_eq!(q.is_some(), f.eval_at_one().is_zero());
        if let Some(q) = q {
            let t_minus_one = LaurentScalar::from_terms([(1, Rational::from_integer(1.into())), (0, Rational::from_integer((-1).into()))]);
            prop_assert_eq!(&q * &t_minus_one, f);
        }
    }

    #[test]
    fn bareiss_matches_rational_elimination(rows in proptest::collection::vec(proptest::collection::vec(rational(), 5), 0..6)) {
        prop_assert_eq!(rank_rational(&rows, 5), oracle_rank(rows.clone(), 5));
        let ech = echelon(integer_rows(&rows), 5);
        for v in ech.nullspace() {
            for row in &rows {
                let dot = row.iter().zip(&v).fold(Rational::zero(), |acc, (a, b)| acc + a * Rational::from_integer(b.clone()));
                prop_assert!(dot.is_zero());
            }
        }
        prop_assert_eq!(ech.nullspace().len(), 5 - ech.rank());
    }
}

/// Plain Gauss-Jordan over the rationals.
fn oracle_rank(mut rows: Vec<Vec<Rational>>, ncols: usize) -> usize {
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        let prow: Vec<Rational> = rows[rank].iter().map(|v| v / &pivot).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        rows[rank] = prow;
        rank += 1;
    }
    rank
}

#[test]
fn spec_examples() {
    let p = |s: &str| parse_polynomial(s, M2).unwrap();
    assert_eq!((p("x[1,1] + x[2,2]").pow(2)).to_string(), "x[1,1]^2 + 2*x[1,1]*x[2,2] + x[2,2]^2");
    assert_eq!((p("x[1,1] - x[2,2]") * p("x[1,1] + x[2,2]")).to_string(), "x[1,1]^2 - x[2,2]^2");
    assert!(Polynomial::zero(M2).to_string() == "0");
}
