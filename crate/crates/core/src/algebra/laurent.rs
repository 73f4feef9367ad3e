use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Element of `Q[t, t^-1]`, stored as exponent -> coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        LaurentScalar::default()
    }

    pub fn one() -> Self {
        LaurentScalar::monomial(0, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentScalar::monomial(0, c)
    }

    /// `c * t^k`.
    pub fn monomial(k: i32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentScalar { terms }
    }

    /// `t^k`.
    pub fn t_pow(k: i32) -> Self {
        LaurentScalar::monomial(k, Rational::one())
    }

    /// `t - t^-1`, the structure constant of the quantum matrix relations.
    pub fn t_minus_t_inv() -> Self {
        LaurentScalar::t_pow(1) - LaurentScalar::t_pow(-1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, Rational)>) -> Self {
        let mut s = LaurentScalar::zero();
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, k: i32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, k: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i32) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> LaurentScalar {
        if c.is_zero() {
            return LaurentScalar::zero();
        }
        LaurentScalar { terms: self.terms.iter().map(|(&e, a)| (e, a * c)).collect() }
    }

    /// Specialization `t -> 1`: the coefficient sum.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Exact quotient by `t - 1`, or `None` if `t - 1` does not divide.
    ///
    /// Writes `self = t^lo * P(t)` and performs synthetic division of `P`
    /// by `t - 1`; the remainder is `P(1)`.
    pub fn div_t_minus_one(&self) -> Option<LaurentScalar> {
        let (Some((&lo, _)), Some((&hi, _))) = (self.terms.first_key_value(), self.terms.last_key_value()) else {
            return Some(LaurentScalar::zero());
        };
        // Synthetic division from the top coefficient down.
        let mut quotient = LaurentScalar::zero();
        let mut carry = Rational::zero();
        for k in (lo..=hi).rev() {
            carry += self.coeff(k);
            if k > lo {
                quotient.add_term(k - 1, carry.clone());
            }
        }
        if carry.is_zero() {
            Some(quotient)
        } else {
            None
        }
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&k, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let power = match k {
                0 => None,
                1 => Some("t".to_string()),
                _ => Some(format!("t^{k}")),
            };
            match power {
                None => write!(f, "{abs}")?,
                Some(p) if abs.is_one() => write!(f, "{p}")?,
                Some(p) => write!(f, "{abs}*{p}")?,
            }
        }
        Ok(())
    }
}

impl Add<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl Sub<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect() }
    }
}

macro_rules! by_value {
    ($trait:ident, $method:ident) => {
        impl $trait<LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $method(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$method(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn t(k: i32) -> LaurentScalar {
        LaurentScalar::t_pow(k)
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(LaurentScalar::t_minus_t_inv().eval_at_one(), rat(0, 1));
        assert_eq!((t(0) + t(-1)).eval_at_one(), rat(2, 1));
        assert_eq!(LaurentScalar::one().eval_at_one(), rat(1, 1));
    }

    #[test]
    fn division_by_t_minus_one() {
        let q = LaurentScalar::t_minus_t_inv().div_t_minus_one().unwrap();
        assert_eq!(q, t(0) + t(-1));
        assert_eq!(q.to_string(), "1 + t^-1");
        assert!(LaurentScalar::one().div_t_minus_one().is_none());
        assert!(t(-3).div_t_minus_one().is_none());
        assert_eq!(LaurentScalar::zero().div_t_minus_one(), Some(LaurentScalar::zero()));
        // (t - 1)(t^2 - 3 t^-2) round trip.
        let f = t(2) - LaurentScalar::monomial(-2, rat(3, 1));
        let g = &(t(1) - t(0)) * &f;
        assert_eq!(g.div_t_minus_one(), Some(f));
    }

    #[test]
    fn display() {
        let s = LaurentScalar::monomial(3, rat(-1, 1)) + LaurentScalar::monomial(-1, rat(2, 3));
        assert_eq!(s.to_string(), "-t^3 + 2/3*t^-1");
        assert_eq!(LaurentScalar::t_minus_t_inv().to_string(), "t - t^-1");
    }
}
