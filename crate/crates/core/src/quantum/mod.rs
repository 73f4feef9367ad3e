//! The quantized coordinate ring `O_t(M_n)` over `Q[t, t^-1]`.
//!
//! Elements are combinations of words in the `x[i,j]`. The normal form
//! sorts every word into nondecreasing row-major order using the
//! quantum-matrix commutation relations.

pub mod checks;
mod ncpoly;
mod ring;

pub use ncpoly::{NCPolynomial, NCWord};
pub use ring::{MinorConvention, QuantumError, QuantumMatrixRing};

use num_traits::One;

use crate::algebra::parse::{syntax, Cursor, Token};
use crate::algebra::{AlgebraError, LaurentScalar, Rational, VarName};

/// Parses noncommutative text such as `x[1,1].x[2,2] - t*x[1,2].x[2,1]`.
///
/// `.` and `*` both multiply, without rewriting; parentheses group and
/// `t` may carry a negative exponent. The result is not normalized.
pub fn parse_nc(text: &str, n: usize) -> Result<NCPolynomial, AlgebraError> {
    let mut cur = Cursor::new(text)?;
    if cur.at_end() {
        return Err(syntax(0, "empty input"));
    }
    let p = nc_expr(&mut cur, n)?;
    if !cur.at_end() {
        return Err(syntax(cur.pos(), "unexpected token"));
    }
    Ok(p)
}

fn nc_expr(cur: &mut Cursor, n: usize) -> Result<NCPolynomial, AlgebraError> {
    let mut total = NCPolynomial::zero(n);
    let mut first = true;
    loop {
        let negative = if cur.eat(&Token::Minus) {
            true
        } else if cur.eat(&Token::Plus) {
            false
        } else if first {
            false
        } else {
            return Ok(total);
        };
        first = false;
        let term = nc_term(cur, n)?;
        total = if negative { &total - &term } else { &total + &term };
        if !matches!(cur.peek(), Some(Token::Plus | Token::Minus)) {
            return Ok(total);
        }
    }
}

fn nc_term(cur: &mut Cursor, n: usize) -> Result<NCPolynomial, AlgebraError> {
    let mut acc = nc_factor(cur, n)?;
    while cur.eat(&Token::Star) || cur.eat(&Token::Dot) {
        acc = acc.concat_product(&nc_factor(cur, n)?);
    }
    Ok(acc)
}

fn nc_factor(cur: &mut Cursor, n: usize) -> Result<NCPolynomial, AlgebraError> {
    let pos = cur.pos();
    match cur.next() {
        Some(Token::Int(p)) => {
            let c = cur.finish_rational(p)?;
            Ok(NCPolynomial::scalar(n, LaurentScalar::constant(c)))
        }
        Some(Token::Var(VarName::T)) => {
            let k = if cur.eat(&Token::Caret) {
                let negative = cur.eat(&Token::Minus);
                let pos = cur.pos();
                let k: i32 = match cur.next() {
                    Some(Token::Int(k)) => i32::try_from(k).map_err(|_| syntax(pos, "exponent too large"))?,
                    _ => return Err(syntax(pos, "expected exponent")),
                };
                if negative {
                    -k
                } else {
                    k
                }
            } else {
                1
            };
            Ok(NCPolynomial::scalar(n, LaurentScalar::monomial(k, Rational::one())))
        }
        Some(Token::Var(VarName::X(i, j))) => {
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(AlgebraError::VariableOutsideRoster {
                    name: VarName::X(i, j).to_string(),
                    context: crate::algebra::Context::matrix(n),
                });
            }
            let w = NCPolynomial::x(n, i, j);
            let e = cur.exponent()?;
            Ok((1..e).fold(w.clone(), |acc, _| acc.concat_product(&w)))
        }
        Some(Token::LParen) => {
            let inner = nc_expr(cur, n)?;
            let pos = cur.pos();
            if !cur.eat(&Token::RParen) {
                return Err(syntax(pos, "expected ')'"));
            }
            Ok(inner)
        }
        _ => Err(syntax(pos, "expected a number, t, a generator or '('")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let q = QuantumMatrixRing::new(2);
        let det = q.quantum_det();
        assert_eq!(parse_nc(&det.to_string(), 2).unwrap(), det);
        let p = parse_nc("x[2,2].x[1,1]", 2).unwrap();
        assert_eq!(q.normal_form(&p).to_string(), "x[1,1].x[2,2] + (-t + t^-1)*x[1,2].x[2,1]");
        let r = parse_nc("(t - t^-1)*x[1,2] + 3/2", 2).unwrap();
        assert_eq!(r.to_string(), "3/2 + (t - t^-1)*x[1,2]");
        assert_eq!(parse_nc("x[1,1]^2", 2).unwrap(), NCPolynomial::word(2, &[(1, 1), (1, 1)]));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_nc("x[3,1]", 2).is_err());
        assert!(parse_nc("(x[1,1]", 2).is_err());
        assert!(parse_nc("x[1,1] x[1,2]", 2).is_err());
        assert!(parse_nc("", 2).is_err());
    }
}
