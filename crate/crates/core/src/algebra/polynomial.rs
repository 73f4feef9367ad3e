use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Context, Monomial, Rational};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by graded-lex monomial order; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: Context,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ctx: Context) -> Self {
        Polynomial { ctx, terms: BTreeMap::new() }
    }

    pub fn one(ctx: Context) -> Self {
        Polynomial::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: Context, c: Rational) -> Self {
        Polynomial::monomial(ctx, Monomial::one(), c)
    }

    pub fn monomial(ctx: Context, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ctx, terms }
    }

    /// The variable with dense index `v`.
    pub fn var(ctx: Context, v: usize) -> Self {
        assert!(v < ctx.num_vars(), "variable {v} outside {ctx}");
        Polynomial::monomial(ctx, Monomial::var(v), Rational::one())
    }

    /// `x[i,j]` in a matrix context.
    pub fn x(ctx: Context, i: usize, j: usize) -> Self {
        let v = ctx.x(i, j).unwrap_or_else(|| panic!("x[{i},{j}] not in {ctx}"));
        Polynomial::var(ctx, v)
    }

    pub fn from_terms(ctx: Context, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(ctx);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn context(&self) -> Context {
        self.ctx
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

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Degree in a single variable; `None` for the zero polynomial.
    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// Part of `self` whose exponent in `v` equals `e`.
    pub fn component_in(&self, v: usize, e: u32) -> Polynomial {
        Polynomial {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == e)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch { left: self.ctx, right: other.ctx })
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ctx(other)?;
        let mut out = Polynomial::zero(self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ctx);
        }
        Polynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ctx);
        }
        Polynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// `self += c * m * other`, the accumulation kernel of the bracket engines.
    pub fn add_scaled_product(&mut self, c: &Rational, m: &Monomial, other: &Polynomial) {
        for (k, a) in &other.terms {
            self.add_term(k.mul(m), a * c);
        }
    }

    /// Partial derivative with respect to the variable with index `v`.
    pub fn partial(&self, v: usize) -> Polynomial {
        assert!(v < self.ctx.num_vars(), "variable {v} outside {}", self.ctx);
        let mut out = Polynomial::zero(self.ctx);
        for (m, c) in &self.terms {
            if let Some((e, q)) = m.derive(v) {
                out.add_term(q, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    pub fn try_partial(&self, v: usize) -> Result<Polynomial, AlgebraError> {
        if v >= self.ctx.num_vars() {
            return Err(AlgebraError::UnknownVariable { index: v, context: self.ctx });
        }
        Ok(self.partial(v))
    }

    /// Ring homomorphism sending each variable of `self` through `f`
    /// into `target`; `None` sends the variable to zero.
    pub fn substitute_vars(&self, target: Context, mut f: impl FnMut(usize) -> Option<usize>) -> Polynomial {
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            if let Some(image) = m.map_vars(&mut f) {
                out.add_term(image, c.clone());
            }
        }
        out
    }

    /// Evaluates at a point given as one rational per variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ctx.num_vars());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.iter() {
                term *= num_traits::pow(point[v].clone(), e as usize);
            }
            total += term;
        }
        total
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (v, e) in m.iter() {
                let name = self.ctx.name(v);
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different contexts.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ctx2() -> Context {
        Context::matrix(2)
    }

    #[test]
    fn binomial_square() {
        let c = ctx2();
        let s = Polynomial::x(c, 1, 1) + Polynomial::x(c, 2, 2);
        let sq = s.pow(2);
        assert_eq!(sq.to_string(), "x[1,1]^2 + 2*x[1,1]*x[2,2] + x[2,2]^2");
    }

    #[test]
    fn annihilator_and_difference_of_squares() {
        let c = ctx2();
        let (a, d) = (Polynomial::x(c, 1, 1), Polynomial::x(c, 2, 2));
        assert!((&a * &Polynomial::zero(c)).is_zero());
        let p = (&a - &d) * (&a + &d);
        assert_eq!(p.to_string(), "x[1,1]^2 - x[2,2]^2");
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = Polynomial::x(ctx2(), 1, 1);
        let b = Polynomial::x(Context::matrix(3), 1, 1);
        assert!(matches!(a.try_add(&b), Err(AlgebraError::ContextMismatch { .. })));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn partial_derivatives() {
        let c = ctx2();
        let x11 = Polynomial::x(c, 1, 1);
        let x12 = Polynomial::x(c, 1, 2);
        let f = x11.pow(2) * &x12;
        let v11 = c.x(1, 1).unwrap();
        assert_eq!(f.partial(v11), (&x11 * &x12).scale(&rat(2, 1)));
        assert!(Polynomial::x(c, 2, 2).partial(v11).is_zero());
        let det = &x11 * &Polynomial::x(c, 2, 2) - &x12 * &Polynomial::x(c, 2, 1);
        assert_eq!(det.partial(v11), Polynomial::x(c, 2, 2));
        assert!(det.try_partial(4).is_err());
    }

    #[test]
    fn eval_at_point() {
        let c = ctx2();
        let det = Polynomial::x(c, 1, 1) * Polynomial::x(c, 2, 2)
            - Polynomial::x(c, 1, 2) * Polynomial::x(c, 2, 1);
        let pt = [rat(1, 1), rat(2, 1), rat(3, 1), rat(4, 1)];
        assert_eq!(det.eval(&pt), rat(-2, 1));
    }

    #[test]
    fn printing_coefficients() {
        let c = ctx2();
        let v = c.x(1, 2).unwrap();
        let p = Polynomial::monomial(c, Monomial::var_pow(v, 2), rat(3, 2))
            - Polynomial::one(c)
            - Polynomial::x(c, 2, 1);
        assert_eq!(p.to_string(), "3/2*x[1,2]^2 - x[2,1] - 1");
        assert_eq!(Polynomial::zero(c).to_string(), "0");
        assert_eq!((-Polynomial::x(c, 1, 1)).to_string(), "-x[1,1]");
    }
}
