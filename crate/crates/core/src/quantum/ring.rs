use std::collections::HashMap;
use std::sync::RwLock;

use rand::Rng;
use thiserror::Error;

use crate::algebra::{Context, LaurentScalar, Polynomial, Rational};
use crate::perm::{inversions, permutations, subsets};

use super::{NCPolynomial, NCWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantumError {
    #[error("coefficient {coeff} of word {word} is not divisible by t - 1")]
    InexactDivision { word: String, coeff: String },
    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index {i} outside 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
}

/// Coefficient convention for principal quantum minors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinorConvention {
    /// `(-t)^l(s)`, matching the quantum determinant.
    Standard,
    /// `t^-l(s)` without signs.
    AsPrinted,
}

type Terms = Vec<(NCWord, LaurentScalar)>;

/// `O_t(M_n)` with a memoized PBW straightening of words into
/// nondecreasing row-major order.
pub struct QuantumMatrixRing {
    n: usize,
    /// `(normal word u, letter x) -> normal form of u.x`.
    memo: RwLock<HashMap<(Vec<u16>, u16), Terms>>,
}

impl QuantumMatrixRing {
    pub fn new(n: usize) -> Self {
        QuantumMatrixRing { n, memo: RwLock::new(HashMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn pos(&self, v: u16) -> (usize, usize) {
        let v = v as usize;
        (v / self.n + 1, v % self.n + 1)
    }

    fn letter(&self, i: usize, j: usize) -> u16 {
        ((i - 1) * self.n + (j - 1)) as u16
    }

    /// Rewrite of the out-of-order product `y.x` (`x < y`) as a combination
    /// of normal two-letter words.
    pub fn straighten_pair(&self, y: u16, x: u16) -> Vec<(LaurentScalar, [u16; 2])> {
        debug_assert!(x < y);
        let (k, l) = self.pos(y);
        let (i, j) = self.pos(x);
        if i < k && j < l {
            vec![
                (LaurentScalar::one(), [x, y]),
                (-LaurentScalar::t_minus_t_inv(), [self.letter(i, l), self.letter(k, j)]),
            ]
        } else if i == k || j == l {
            vec![(LaurentScalar::t_pow(-1), [x, y])]
        } else {
            vec![(LaurentScalar::one(), [x, y])]
        }
    }

    fn check(&self, p: &NCPolynomial) -> Result<(), QuantumError> {
        if p.n() == self.n {
            Ok(())
        } else {
            Err(QuantumError::SizeMismatch(p.n(), self.n))
        }
    }

    /// Normal form of `u.x` for a normal word `u`.
    fn insert(&self, u: &[u16], x: u16) -> Terms {
        match u.last() {
            None => return vec![(NCWord(vec![x]), LaurentScalar::one())],
            Some(&y) if y <= x => {
                let mut w = u.to_vec();
                w.push(x);
                return vec![(NCWord(w), LaurentScalar::one())];
            }
            _ => {}
        }
        let key = (u.to_vec(), x);
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let (prefix, y) = (&u[..u.len() - 1], u[u.len() - 1]);
        let mut acc = NCPolynomial::zero(self.n);
        for (c, [a, b]) in self.straighten_pair(y, x) {
            for (w1, c1) in self.insert(prefix, a) {
                for (w2, c2) in self.insert(&w1.0, b) {
                    acc.add_term(w2, &(&c * &c1) * &c2);
                }
            }
        }
        let terms: Terms = acc.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        self.memo.write().expect("memo lock").insert(key, terms.clone());
        terms
    }

    fn normalize_word(&self, w: &NCWord) -> Terms {
        let mut current: Terms = vec![(NCWord::empty(), LaurentScalar::one())];
        for &x in &w.0 {
            let mut next = NCPolynomial::zero(self.n);
            for (u, c) in &current {
                for (v, d) in self.insert(&u.0, x) {
                    next.add_term(v, c * &d);
                }
            }
            current = next.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        }
        current
    }

    /// Rewrites every word into nondecreasing row-major order.
    pub fn normal_form(&self, p: &NCPolynomial) -> NCPolynomial {
        assert_eq!(p.n(), self.n, "matrix size mismatch");
        let mut out = NCPolynomial::zero(self.n);
        for (w, c) in p.terms() {
            if w.is_normal() {
                out.add_term(w.clone(), c.clone());
                continue;
            }
            for (v, d) in self.normalize_word(w) {
                out.add_term(v, c * &d);
            }
        }
        out
    }

    /// Product in `O_t(M_n)`, returned in normal form.
    pub fn mul(&self, a: &NCPolynomial, b: &NCPolynomial) -> Result<NCPolynomial, QuantumError> {
        self.check(a)?;
        self.check(b)?;
        let a = self.normal_form(a);
        let mut out = NCPolynomial::zero(self.n);
        for (wb, cb) in b.terms() {
            for (wa, ca) in a.terms() {
                let mut current: Terms = vec![(wa.clone(), ca * cb)];
                for &x in &wb.0 {
                    let mut next = NCPolynomial::zero(self.n);
                    for (u, c) in &current {
                        for (v, d) in self.insert(&u.0, x) {
                            next.add_term(v, c * &d);
                        }
                    }
                    current = next.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
                }
                for (w, c) in current {
                    out.add_term(w, c);
                }
            }
        }
        Ok(out)
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &NCPolynomial, b: &NCPolynomial) -> Result<NCPolynomial, QuantumError> {
        Ok(&self.mul(a, b)? - &self.mul(b, a)?)
    }

    /// `det_t = sum_s (-t)^l(s) x[1,s(1)] ... x[n,s(n)]`.
    pub fn quantum_det(&self) -> NCPolynomial {
        let rows: Vec<usize> = (1..=self.n).collect();
        self.principal_minor(&rows, MinorConvention::Standard)
    }

    /// Principal quantum minor on the index set `rows` (1-based, increasing).
    pub fn principal_minor(&self, rows: &[usize], convention: MinorConvention) -> NCPolynomial {
        let mut out = NCPolynomial::zero(self.n);
        for s in permutations(rows.len()) {
            let len = inversions(&s) as i32;
            let coeff = match convention {
                MinorConvention::Standard => {
                    let sign = if len % 2 == 0 { 1 } else { -1 };
                    LaurentScalar::monomial(len, Rational::from_integer(sign.into()))
                }
                MinorConvention::AsPrinted => LaurentScalar::t_pow(-len),
            };
            let word = s.iter().enumerate().map(|(a, &sa)| self.letter(rows[a], rows[sa])).collect();
            out.add_term(NCWord(word), coeff);
        }
        out
    }

    /// `sigma_i`: sum of the principal `i x i` quantum minors.
    pub fn quantum_minor_sum(&self, i: usize, convention: MinorConvention) -> Result<NCPolynomial, QuantumError> {
        if !(1..=self.n).contains(&i) {
            return Err(QuantumError::IndexOutOfRange { i, n: self.n });
        }
        let mut out = NCPolynomial::zero(self.n);
        for rows in subsets(self.n, i) {
            out = &out + &self.principal_minor(&rows, convention);
        }
        Ok(self.normal_form(&out))
    }

    /// `{a, b}` at `t = 1` computed as `(ab - ba) / (t - 1)` in the PBW basis.
    pub fn semiclassical_limit_pair(&self, a: &NCPolynomial, b: &NCPolynomial) -> Result<Polynomial, QuantumError> {
        let comm = self.commutator(a, b)?;
        let mut out = Polynomial::zero(Context::matrix(self.n));
        for (w, c) in comm.terms() {
            let q = c.div_t_minus_one().ok_or_else(|| QuantumError::InexactDivision {
                word: NCPolynomial::term(self.n, w.clone(), LaurentScalar::one()).to_string(),
                coeff: c.to_string(),
            })?;
            out.add_term(w.to_monomial(), q.eval_at_one());
        }
        Ok(out)
    }

    /// Normal form reached by rewriting a randomly chosen out-of-order
    /// adjacent pair at every step, without memoization.
    pub fn normal_form_random_order<R: Rng>(&self, p: &NCPolynomial, rng: &mut R) -> NCPolynomial {
        let mut pending: Vec<(NCWord, LaurentScalar)> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = NCPolynomial::zero(self.n);
        while let Some((w, c)) = pending.pop() {
            let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&k| w.0[k] > w.0[k + 1]).collect();
            if descents.is_empty() {
                out.add_term(w, c);
                continue;
            }
            let k = descents[rng.gen_range(0..descents.len())];
            for (d, [a, b]) in self.straighten_pair(w.0[k], w.0[k + 1]) {
                let mut v = w.0.clone();
                v[k] = a;
                v[k + 1] = b;
                pending.push((NCWord(v), &c * &d));
            }
        }
        out
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
    fn pair_rewrites() {
        let q = QuantumMatrixRing::new(2);
        let nf = q.normal_form(&NCPolynomial::word(2, &[(2, 2), (1, 1)]));
        let mut expected = NCPolynomial::word(2, &[(1, 1), (2, 2)]);
        expected.add_term(NCWord(vec![1, 2]), -LaurentScalar::t_minus_t_inv());
        assert_eq!(nf, expected);
        assert_eq!(
            q.normal_form(&NCPolynomial::word(2, &[(1, 2), (1, 1)])),
            NCPolynomial::term(2, NCWord(vec![0, 1]), t(-1))
        );
        assert_eq!(q.normal_form(&NCPolynomial::word(2, &[(2, 1), (1, 2)])), NCPolynomial::word(2, &[(1, 2), (2, 1)]));
    }

    #[test]
    fn products() {
        let q = QuantumMatrixRing::new(2);
        let x = |i, j| NCPolynomial::x(2, i, j);
        assert_eq!(q.mul(&x(1, 1), &x(2, 2)).unwrap(), NCPolynomial::word(2, &[(1, 1), (2, 2)]));
        // x22 x12 = t^-1 x12 x22 (same column), then x11 x12 x22.
        let p = q.mul(&NCPolynomial::word(2, &[(1, 1), (2, 2)]), &x(1, 2)).unwrap();
        assert_eq!(p, NCPolynomial::term(2, NCWord(vec![0, 1, 3]), t(-1)));
        let f = NCPolynomial::word(2, &[(2, 1), (1, 1)]);
        assert_eq!(q.mul(&NCPolynomial::one(2), &f).unwrap(), q.normal_form(&f));
        assert!(q.mul(&NCPolynomial::one(3), &f).is_err());
    }

    #[test]
    fn quantum_determinants() {
        let q2 = QuantumMatrixRing::new(2);
        let mut det2 = NCPolynomial::word(2, &[(1, 1), (2, 2)]);
        det2.add_term(NCWord(vec![1, 2]), LaurentScalar::monomial(1, rat(-1, 1)));
        assert_eq!(q2.quantum_det(), det2);
        assert_eq!(QuantumMatrixRing::new(1).quantum_det(), NCPolynomial::x(1, 1, 1));
        let d3 = QuantumMatrixRing::new(3).quantum_det();
        assert_eq!(d3.len(), 6);
        let w = NCPolynomial::word(3, &[(1, 3), (2, 2), (3, 1)]);
        let (word, _) = w.terms().next().unwrap();
        assert_eq!(d3.coeff(word), LaurentScalar::monomial(3, rat(-1, 1)));
    }

    #[test]
    fn commutator_examples() {
        let q = QuantumMatrixRing::new(2);
        let c = q.commutator(&NCPolynomial::x(2, 1, 1), &NCPolynomial::x(2, 1, 2)).unwrap();
        assert_eq!(c, NCPolynomial::term(2, NCWord(vec![0, 1]), t(0) - t(-1)));
        let a = NCPolynomial::word(2, &[(2, 1), (1, 2)]);
        assert!(q.commutator(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn limit_examples() {
        let q = QuantumMatrixRing::new(2);
        let x = |i, j| NCPolynomial::x(2, i, j);
        assert_eq!(q.semiclassical_limit_pair(&x(1, 1), &x(2, 2)).unwrap().to_string(), "2*x[1,2]*x[2,1]");
        assert_eq!(q.semiclassical_limit_pair(&x(1, 1), &x(1, 2)).unwrap().to_string(), "x[1,1]*x[1,2]");
    }
}
