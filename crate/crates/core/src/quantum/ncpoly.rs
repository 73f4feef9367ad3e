use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::algebra::{Context, LaurentScalar, Monomial, Polynomial, Rational};

/// Word in the generators `x[i,j]`, letters stored as row-major indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NCWord(pub Vec<u16>);

impl NCWord {
    pub fn empty() -> Self {
        NCWord(Vec::new())
    }

    pub fn letter(v: usize) -> Self {
        NCWord(vec![v as u16])
    }

    /// Normal means letters nondecreasing in row-major order.
    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &NCWord) -> NCWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        NCWord(v)
    }

    /// Commutative image in `O(M_n)`.
    pub fn to_monomial(&self) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&v| (v as usize, 1)))
    }
}

impl Ord for NCWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NCWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of `O_t(M_n)`: words with Laurent coefficients. Not necessarily
/// in normal form; see [`super::QuantumMatrixRing::normal_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPolynomial {
    n: usize,
    terms: BTreeMap<NCWord, LaurentScalar>,
}

impl NCPolynomial {
    pub fn zero(n: usize) -> Self {
        NCPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        NCPolynomial::term(n, NCWord::empty(), LaurentScalar::one())
    }

    pub fn term(n: usize, w: NCWord, c: LaurentScalar) -> Self {
        let mut p = NCPolynomial::zero(n);
        p.add_term(w, c);
        p
    }

    pub fn scalar(n: usize, c: LaurentScalar) -> Self {
        NCPolynomial::term(n, NCWord::empty(), c)
    }

    /// The generator `x[i,j]`.
    pub fn x(n: usize, i: usize, j: usize) -> Self {
        assert!((1..=n).contains(&i) && (1..=n).contains(&j), "x[{i},{j}] outside n = {n}");
        NCPolynomial::term(n, NCWord::letter((i - 1) * n + (j - 1)), LaurentScalar::one())
    }

    /// Product of the listed generators in the given order.
    pub fn word(n: usize, letters: &[(usize, usize)]) -> Self {
        let w = letters.iter().map(|&(i, j)| ((i - 1) * n + (j - 1)) as u16).collect();
        NCPolynomial::term(n, NCWord(w), LaurentScalar::one())
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(NCWord::is_normal)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NCWord, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &NCWord) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: NCWord, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> NCPolynomial {
        let mut out = NCPolynomial::zero(self.n);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    /// Free product: concatenates words without rewriting.
    pub fn concat_product(&self, other: &NCPolynomial) -> NCPolynomial {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let mut out = NCPolynomial::zero(self.n);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    /// Image under `t -> 1` in `O(M_n)`.
    pub fn specialize_at_one(&self) -> Polynomial {
        let ctx = Context::matrix(self.n);
        let mut out = Polynomial::zero(ctx);
        for (w, c) in &self.terms {
            out.add_term(w.to_monomial(), c.eval_at_one());
        }
        out
    }

    fn word_string(&self, w: &NCWord) -> String {
        w.0.iter()
            .map(|&v| {
                let v = v as usize;
                format!("x[{},{}]", v / self.n + 1, v % self.n + 1)
            })
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn single_term(c: &LaurentScalar) -> Option<(i32, Rational)> {
    let mut it = c.terms();
    let first = it.next()?;
    it.next().is_none().then(|| (first.0, first.1.clone()))
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let word = self.word_string(w);
            // Monomial coefficients carry their sign into the separator.
            let (negative, coeff) = match single_term(c) {
                Some((k, a)) if a < Rational::zero() => (true, LaurentScalar::monomial(k, -a)),
                _ => (false, c.clone()),
            };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff_str = if single_term(&coeff).is_some() { coeff.to_string() } else { format!("({coeff})") };
            match (coeff.is_one(), w.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{word}")?,
                (false, true) => write!(f, "{coeff_str}")?,
                (false, false) => write!(f, "{coeff_str}*{word}")?,
            }
        }
        Ok(())
    }
}

impl Add<&NCPolynomial> for &NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&NCPolynomial> for &NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: &NCPolynomial) -> NCPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        NCPolynomial { n: self.n, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Add for NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, rhs: NCPolynomial) -> NCPolynomial {
        &self + &rhs
    }
}

impl Sub for NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: NCPolynomial) -> NCPolynomial {
        &self - &rhs
    }
}
