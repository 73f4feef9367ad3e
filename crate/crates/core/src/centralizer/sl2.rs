//! `O(SL_2)` in the monomial basis `a^i b^k c^l`, `b^k c^l d^j`, `b^k c^l`
//! obtained from `ad = 1 + bc`, with `a, b, c, d = x[1,1], x[1,2], x[2,1], x[2,2]`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{Context, Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::linalg::{echelon, integer_rows};
use crate::poisson::{bracket, BracketTable};

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

fn ctx() -> Context {
    Context::matrix(2)
}

fn int(k: u64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn mono(a: u32, b: u32, c: u32, d: u32) -> Monomial {
    Monomial::from_dense(&[a, b, c, d])
}

fn poly(m: Monomial) -> Polynomial {
    Polynomial::monomial(ctx(), m, int(1))
}

/// Element of `O(SL_2)` stored in reduced form: no monomial has both `a` and `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Element(Polynomial);

impl Sl2Element {
    pub fn polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl std::fmt::Display for Sl2Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn binomial(m: u32, r: u32) -> u64 {
    (0..r as u64).fold(1, |acc, k| acc * (m as u64 - k) / (k + 1))
}

/// Rewrites `a^i d^j -> a^(i-s) d^(j-s) (1 + bc)^s` with `s = min(i, j)`.
pub fn sl2_reduce(f: &Polynomial) -> Result<Sl2Element> {
    if f.context() != ctx() {
        return Err(Error::InvalidArgument(format!("expected a polynomial in O(M_2), got {}", f.context())));
    }
    let mut out = Polynomial::zero(ctx());
    for (m, coeff) in f.terms() {
        let e = m.to_dense(4);
        let s = e[A].min(e[D]);
        for r in 0..=s {
            let reduced = mono(e[A] - s, e[B] + r, e[C] + r, e[D] - s);
            out.add_term(reduced, coeff * int(binomial(s, r)));
        }
    }
    Ok(Sl2Element(out))
}

/// `{a + d, e}` reduced to the basis.
pub fn sl2_ad_trace(e: &Sl2Element) -> Sl2Element {
    let tr = poly(mono(1, 0, 0, 0)) + poly(mono(0, 0, 0, 1));
    let value = bracket(&tr, &e.0, &BracketTable::semiclassical(2)).expect("O(M_2)");
    sl2_reduce(&value).expect("O(M_2)")
}

/// Splits `p(b, c)` into homogeneous components `(m, p_m)`.
fn components(p: &Polynomial) -> Result<BTreeMap<u32, Polynomial>> {
    let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
    for (m, c) in p.terms() {
        if m.exponent(A) > 0 || m.exponent(D) > 0 {
            return Err(Error::InvalidArgument(format!("{p} is not a polynomial in b, c")));
        }
        out.entry(m.degree()).or_insert_with(|| Polynomial::zero(ctx())).add_term(m.clone(), c.clone());
    }
    Ok(out)
}

/// `a^(i+1) sum m p_m - a^(i-1) sum ((2i + m) bc + m) p_m`, for `i >= 1`.
pub fn sl2_eq1(i: u32, p: &Polynomial) -> Result<Polynomial> {
    let up = mono(i + 1, 0, 0, 0);
    let down = mono(i - 1, 0, 0, 0);
    let bc = mono(0, 1, 1, 0);
    let mut out = Polynomial::zero(ctx());
    for (m, pm) in components(p)? {
        out = out + pm.mul_monomial(&up, &int(m as u64));
        out = out - pm.mul_monomial(&down.mul(&bc), &int((2 * i + m) as u64));
        out = out - pm.mul_monomial(&down, &int(m as u64));
    }
    Ok(out)
}

/// `-d^(j+1) sum m p_m + d^(j-1) sum ((m + 2j) bc + m) p_m`, for `j >= 1`.
pub fn sl2_eq2(j: u32, p: &Polynomial) -> Result<Polynomial> {
    let up = mono(0, 0, 0, j + 1);
    let down = mono(0, 0, 0, j - 1);
    let bc = mono(0, 1, 1, 0);
    let mut out = Polynomial::zero(ctx());
    for (m, pm) in components(p)? {
        out = out - pm.mul_monomial(&up, &int(m as u64));
        out = out + pm.mul_monomial(&down.mul(&bc), &int((m + 2 * j) as u64));
        out = out + pm.mul_monomial(&down, &int(m as u64));
    }
    Ok(out)
}

/// `(a - d) sum m p_m`.
pub fn sl2_eq3(p: &Polynomial) -> Result<Polynomial> {
    let mut out = Polynomial::zero(ctx());
    for (m, pm) in components(p)? {
        out = out + pm.mul_monomial(&mono(1, 0, 0, 0), &int(m as u64));
        out = out - pm.mul_monomial(&mono(0, 0, 0, 1), &int(m as u64));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct Sl2EquationReport {
    pub max_exponent: u32,
    pub cases: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Compares [`sl2_ad_trace`] with the three closed forms on `a^i b^k c^l`,
/// `b^k c^l d^j` and `b^k c^l` for exponents up to `max_exponent`, and on
/// one inhomogeneous `p(b, c)` per shape.
pub fn sl2_equation_sweep(max_exponent: u32) -> Sl2EquationReport {
    let mut cases = 0;
    let mut failures = Vec::new();
    let mut check = |label: String, lhs: Polynomial, rhs: Polynomial| {
        cases += 1;
        if lhs != rhs {
            failures.push(format!("{label}: ad = {lhs}, closed form = {rhs}"));
        }
    };
    let ad = |f: &Polynomial| sl2_ad_trace(&sl2_reduce(f).expect("O(M_2)")).0;
    let mut ps: Vec<Polynomial> = Vec::new();
    for k in 0..=max_exponent {
        for l in 0..=max_exponent {
            ps.push(poly(mono(0, k, l, 0)));
        }
    }
    ps.push(ps.iter().enumerate().fold(Polynomial::zero(ctx()), |acc, (idx, p)| acc + p.scale(&int(idx as u64 + 1))));
    for p in &ps {
        for e in 1..=max_exponent {
            let left = p.mul_monomial(&mono(e, 0, 0, 0), &int(1));
            check(format!("a^{e}*({p})"), ad(&left), sl2_eq1(e, p).expect("p in b, c"));
            let right = p.mul_monomial(&mono(0, 0, 0, e), &int(1));
            check(format!("({p})*d^{e}"), ad(&right), sl2_eq2(e, p).expect("p in b, c"));
        }
        check(format!("{p}"), ad(p), sl2_eq3(p).expect("p in b, c"));
    }
    Sl2EquationReport { max_exponent, cases, pass: failures.is_empty(), failures }
}

/// Basis monomials of total degree `<= d`.
pub fn sl2_basis(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for total in 0..=d {
        for a in 0..=total {
            for b in 0..=total - a {
                for c in 0..=total - a - b {
                    let dd = total - a - b - c;
                    if a == 0 || dd == 0 {
                        out.push(mono(a, b, c, dd));
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Sl2CentralizerReport {
    pub degree: u32,
    pub basis_size: usize,
    pub nullspace_dim: usize,
    pub expected_dim: usize,
    /// Every `tr^k`, `k <= d`, is annihilated by `{tr, .}`.
    pub trace_powers_central: bool,
    pub pass: bool,
}

/// Solves `{tr, f} = 0` over the basis elements of degree `<= d`.
pub fn sl2_centralizer_dimension(d: u32) -> Sl2CentralizerReport {
    let basis = sl2_basis(d);
    let images: Vec<Polynomial> = basis.iter().map(|m| sl2_ad_trace(&Sl2Element(poly(m.clone()))).0).collect();
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for img in &images {
        for (m, _) in img.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut rows = vec![vec![int(0); basis.len()]; index.len()];
    for (col, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            rows[index[m]][col] = c.clone();
        }
    }
    let nullspace_dim = echelon(integer_rows(&rows), basis.len()).nullity();
    let tr = poly(mono(1, 0, 0, 0)) + poly(mono(0, 0, 0, 1));
    let trace_powers_central =
        (0..=d).all(|k| sl2_ad_trace(&sl2_reduce(&tr.pow(k)).expect("O(M_2)")).is_zero());
    let expected_dim = d as usize + 1;
    Sl2CentralizerReport {
        degree: d,
        basis_size: basis.len(),
        nullspace_dim,
        expected_dim,
        trace_powers_central,
        pass: nullspace_dim == expected_dim && trace_powers_central,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn p(text: &str) -> Polynomial {
        parse_polynomial(text, ctx()).unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(sl2_reduce(&p("x[1,1]*x[2,2]")).unwrap().to_string(), "x[1,2]*x[2,1] + 1");
        assert_eq!(sl2_reduce(&p("x[1,1]^2*x[2,2]")).unwrap().to_string(), "x[1,1]*x[1,2]*x[2,1] + x[1,1]");
        let fixed = p("x[1,2]^2*x[2,1]");
        assert_eq!(sl2_reduce(&fixed).unwrap().polynomial(), &fixed);
        assert!(sl2_reduce(&parse_polynomial("x[1,1]", Context::matrix(3)).unwrap()).is_err());
    }

    #[test]
    fn ad_trace_examples() {
        let bc = sl2_reduce(&p("x[1,2]*x[2,1]")).unwrap();
        assert_eq!(sl2_ad_trace(&bc).polynomial(), &p("2*x[1,1]*x[1,2]*x[2,1] - 2*x[1,2]*x[2,1]*x[2,2]"));
        let a = sl2_reduce(&p("x[1,1]")).unwrap();
        assert_eq!(sl2_ad_trace(&a).to_string(), "-2*x[1,2]*x[2,1]");
    }

    #[test]
    fn closed_forms() {
        let r = sl2_equation_sweep(2);
        assert!(r.pass, "{:?}", r.failures);
        assert!(sl2_eq3(&p("x[1,1]")).is_err());
    }

    #[test]
    fn centralizer_dims() {
        for d in [0, 2, 4] {
            let r = sl2_centralizer_dimension(d);
            assert_eq!(r.nullspace_dim, d as usize + 1);
            assert!(r.pass);
        }
    }
}
