mod common;

use common::{monomial, polynomial};
use poisson_kit::algebra::{Context, Polynomial};
use poisson_kit::invariants::{char_coeff, char_coeff_via_charpoly, elementary_symmetric};
use poisson_kit::poisson::{bracket, delta_phi, gamma, jacobi_defect, phi, BracketTable, HamiltonianField};
use proptest::prelude::*;

const M2: Context = Context::Matrix { n: 2 };
const M3: Context = Context::Matrix { n: 3 };

fn tables(n: usize) -> Vec<BracketTable> {
    vec![BracketTable::semiclassical(n), BracketTable::kks(n), BracketTable::gr(n).unwrap()]
}

proptest! {
    #[test]
    fn antisymmetry_and_leibniz(f in polynomial(M3, 3, 2), g in polynomial(M3, 3, 2), h in polynomial(M3, 3, 2)) {
        for t in tables(3) {
            let fg = bracket(&f, &g, &t).unwrap();
            prop_assert_eq!(&fg, &-bracket(&g, &f, &t).unwrap());
            let lhs = bracket(&f, &(&g * &h), &t).unwrap();
            let rhs = &(&fg * &h) + &(&g * &bracket(&f, &h, &t).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn jacobi_on_random_triples(f in polynomial(M2, 3, 2), g in polynomial(M2, 3, 2), h in polynomial(M2, 3, 2)) {
        for t in tables(2) {
            prop_assert!(jacobi_defect(&f, &g, &h, &t).unwrap().is_zero());
        }
    }

    #[test]
    fn brackets_are_graded(f in monomial(M3, 3), g in monomial(M3, 3)) {
        let (p, q) = (f.degree().unwrap(), g.degree().unwrap());
        let s = bracket(&f, &g, &BracketTable::semiclassical(3)).unwrap();
        prop_assert!(s.is_zero() || (s.is_homogeneous() && s.degree() == Some(p + q)));
        let k = bracket(&f, &g, &BracketTable::kks(3)).unwrap();
        prop_assert!(k.is_zero() || (k.is_homogeneous() && k.degree() == Some(p + q - 1)));
    }

    #[test]
    fn hamiltonian_field_agrees(f in polynomial(M3, 3, 2), g in polynomial(M3, 4, 3)) {
        let t = BracketTable::semiclassical(3);
        prop_assert_eq!(HamiltonianField::new(&f, &t).unwrap().apply(&g), bracket(&f, &g, &t).unwrap());
    }

    #[test]
    fn phi_is_poisson(f in polynomial(M3, 3, 2), g in polynomial(M3, 3, 2)) {
        let src = BracketTable::semiclassical(3);
        let dst = BracketTable::semiclassical_central_t(2);
        let lhs = phi(&bracket(&f, &g, &src).unwrap()).unwrap();
        let rhs = bracket(&phi(&f).unwrap(), &phi(&g).unwrap(), &dst).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_is_an_antimap(f in polynomial(M3, 3, 2), g in polynomial(M3, 3, 2)) {
        let t = BracketTable::semiclassical(3);
        let lhs = bracket(&gamma(&f).unwrap(), &gamma(&g).unwrap(), &t).unwrap();
        prop_assert_eq!(lhs, -gamma(&bracket(&f, &g, &t).unwrap()).unwrap());
    }

    #[test]
    fn gr_is_the_top_filtration_component(f in monomial(M3, 3), g in monomial(M3, 3)) {
        let x11 = M3.x(1, 1).unwrap();
        let (p, q) = (f.degree_in(x11).unwrap(), g.degree_in(x11).unwrap());
        let full = bracket(&f, &g, &BracketTable::semiclassical(3)).unwrap();
        prop_assert!(full.degree_in(x11).map_or(true, |e| e <= p + q));
        let gr = bracket(&f, &g, &BracketTable::gr(3).unwrap()).unwrap();
        prop_assert_eq!(gr, full.component_in(x11, p + q));
    }
}

#[test]
fn charpoly_oracle_agrees() {
    for n in 1..=4 {
        for i in 1..=n {
            assert_eq!(char_coeff(n, i).unwrap(), char_coeff_via_charpoly(n, i).unwrap(), "n={n} i={i}");
        }
    }
}

#[test]
fn delta_phi_sends_c_to_e() {
    for n in 1..=4 {
        for i in 1..=n {
            assert_eq!(delta_phi(&char_coeff(n, i).unwrap()).unwrap(), elementary_symmetric(n, i).unwrap());
        }
    }
}

#[test]
fn generator_table_values() {
    let t = BracketTable::semiclassical(2);
    let x = |i, j| Polynomial::x(M2, i, j);
    assert_eq!(bracket(&x(1, 1), &x(2, 2), &t).unwrap().to_string(), "2*x[1,2]*x[2,1]");
    assert_eq!(bracket(&x(1, 1), &x(1, 2), &t).unwrap().to_string(), "x[1,1]*x[1,2]");
    assert!(bracket(&x(1, 2), &x(2, 1), &t).unwrap().is_zero());
    assert!(bracket(&x(1, 1), &x(2, 2), &BracketTable::kks(2)).unwrap().is_zero());
    assert!(bracket(&x(1, 1), &x(2, 2), &BracketTable::gr(2).unwrap()).unwrap().is_zero());
}
