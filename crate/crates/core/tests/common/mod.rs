#![allow(dead_code)]

use poisson_kit::algebra::{Context, Monomial, Polynomial, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

/// Sparse polynomial in `ctx` with up to `terms` terms of degree `<= max_deg`.
pub fn polynomial(ctx: Context, terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let nv = ctx.num_vars();
    proptest::collection::vec((proptest::collection::vec(0..=max_deg, nv), rational()), 0..=terms).prop_map(
        move |raw| {
            Polynomial::from_terms(
                ctx,
                raw.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= max_deg).map(|(e, c)| (Monomial::from_dense(&e), c)),
            )
        },
    )
}

/// Single monomial with coefficient 1 and total degree `<= max_deg`.
pub fn monomial(ctx: Context, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let nv = ctx.num_vars();
    proptest::collection::vec(0..nv, 0..=max_deg as usize).prop_map(move |vars| {
        Polynomial::monomial(ctx, Monomial::from_pairs(vars.into_iter().map(|v| (v, 1))), Rational::from_integer(1.into()))
    })
}
