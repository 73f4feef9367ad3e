//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | var ['^' k]
//! var    := 'x[' i ',' j ']' | 't_' i | 't'
//! ```
//!
//! Whitespace is insignificant. The lexer is shared with the
//! noncommutative format, which adds parentheses, `.` and negative
//! exponents of `t`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AlgebraError, Context, Monomial, Polynomial, Rational, VarName};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    Int(BigInt),
    Var(VarName),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Dot,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub token: Token,
    pub pos: usize,
}

pub(crate) fn syntax(pos: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Syntax { pos, message: message.into() }
}

fn read_uint(bytes: &[u8], pos: &mut usize) -> Option<usize> {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    std::str::from_utf8(&bytes[start..*pos]).ok()?.parse().ok()
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn expect(bytes: &[u8], pos: &mut usize, ch: u8) -> Result<(), AlgebraError> {
    skip_ws(bytes, pos);
    if bytes.get(*pos) == Some(&ch) {
        *pos += 1;
        Ok(())
    } else {
        Err(syntax(*pos, format!("expected '{}'", ch as char)))
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, AlgebraError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    loop {
        skip_ws(bytes, &mut pos);
        let Some(&ch) = bytes.get(pos) else { break };
        let start = pos;
        let token = match ch {
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'.' => Token::Dot,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                let digits_end = bytes[pos..].iter().position(|b| !b.is_ascii_digit()).map_or(bytes.len(), |k| pos + k);
                let value: BigInt = text[pos..digits_end].parse().map_err(|_| syntax(pos, "bad integer"))?;
                out.push(Spanned { token: Token::Int(value), pos: start });
                pos = digits_end;
                continue;
            }
            b'x' => {
                pos += 1;
                expect(bytes, &mut pos, b'[')?;
                skip_ws(bytes, &mut pos);
                let i = read_uint(bytes, &mut pos).ok_or_else(|| syntax(pos, "expected row index"))?;
                expect(bytes, &mut pos, b',')?;
                skip_ws(bytes, &mut pos);
                let j = read_uint(bytes, &mut pos).ok_or_else(|| syntax(pos, "expected column index"))?;
                expect(bytes, &mut pos, b']')?;
                out.push(Spanned { token: Token::Var(VarName::X(i, j)), pos: start });
                continue;
            }
            b't' => {
                pos += 1;
                if bytes.get(pos) == Some(&b'_') {
                    pos += 1;
                    let i = read_uint(bytes, &mut pos).ok_or_else(|| syntax(pos, "expected index after 't_'"))?;
                    out.push(Spanned { token: Token::Var(VarName::Ti(i)), pos: start });
                } else {
                    out.push(Spanned { token: Token::Var(VarName::T), pos: start });
                }
                continue;
            }
            other => return Err(syntax(pos, format!("unexpected character '{}'", other as char))),
        };
        out.push(Spanned { token, pos: start });
        pos += 1;
    }
    Ok(out)
}

/// Cursor over a token stream.
pub(crate) struct Cursor {
    tokens: Vec<Spanned>,
    idx: usize,
    end: usize,
}

impl Cursor {
    pub fn new(text: &str) -> Result<Self, AlgebraError> {
        Ok(Cursor { tokens: tokenize(text)?, idx: 0, end: text.len() })
    }

    pub fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|s| &s.token)
    }

    pub fn pos(&self) -> usize {
        self.tokens.get(self.idx).map_or(self.end, |s| s.pos)
    }

    pub fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).map(|s| s.token.clone());
        self.idx += 1;
        t
    }

    pub fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    pub fn at_end(&self) -> bool {
        self.idx >= self.tokens.len()
    }

    /// `p` or `p/q` after the leading integer token was consumed.
    pub fn finish_rational(&mut self, p: BigInt) -> Result<Rational, AlgebraError> {
        if self.eat(&Token::Slash) {
            let pos = self.pos();
            match self.next() {
                Some(Token::Int(q)) if !q.is_zero() => Ok(Rational::new(p, q)),
                Some(Token::Int(_)) => Err(syntax(pos, "zero denominator")),
                _ => Err(syntax(pos, "expected denominator")),
            }
        } else {
            Ok(Rational::from_integer(p))
        }
    }

    /// Optional `'^' k` with `k >= 0`.
    pub fn exponent(&mut self) -> Result<u32, AlgebraError> {
        if !self.eat(&Token::Caret) {
            return Ok(1);
        }
        let pos = self.pos();
        match self.next() {
            Some(Token::Int(k)) => u32::try_from(k).map_err(|_| syntax(pos, "exponent too large")),
            _ => Err(syntax(pos, "expected exponent")),
        }
    }
}

/// Parses `text` in the variable roster `ctx`.
pub fn parse_polynomial(text: &str, ctx: Context) -> Result<Polynomial, AlgebraError> {
    let mut cur = Cursor::new(text)?;
    if cur.at_end() {
        return Err(syntax(0, "empty input"));
    }
    let mut total = Polynomial::zero(ctx);
    let mut first = true;
    loop {
        let negative = if cur.eat(&Token::Minus) {
            true
        } else if cur.eat(&Token::Plus) {
            false
        } else if first {
            false
        } else if cur.at_end() {
            break;
        } else {
            return Err(syntax(cur.pos(), "expected '+' or '-'"));
        };
        first = false;
        let (m, mut c) = parse_term(&mut cur, ctx)?;
        if negative {
            c = -c;
        }
        total.add_term(m, c);
        if cur.at_end() {
            break;
        }
    }
    Ok(total)
}

fn parse_term(cur: &mut Cursor, ctx: Context) -> Result<(Monomial, Rational), AlgebraError> {
    let mut coeff = Rational::one();
    let mut mono = Monomial::one();
    loop {
        let pos = cur.pos();
        match cur.next() {
            Some(Token::Int(p)) => coeff *= cur.finish_rational(p)?,
            Some(Token::Var(name)) => {
                let v = ctx
                    .index_of(name)
                    .ok_or_else(|| AlgebraError::VariableOutsideRoster { name: name.to_string(), context: ctx })?;
                let e = cur.exponent()?;
                mono = mono.mul(&Monomial::var_pow(v, e));
            }
            _ => return Err(syntax(pos, "expected a number or a variable")),
        }
        if !cur.eat(&Token::Star) {
            return Ok((mono, coeff));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn determinant_text() {
        let ctx = Context::matrix(2);
        let p = parse_polynomial("x[1,1]*x[2,2] - x[1,2]*x[2,1]", ctx).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
    }

    #[test]
    fn zero_and_rational_coefficient() {
        let ctx = Context::matrix(2);
        assert!(parse_polynomial("0", ctx).unwrap().is_zero());
        let p = parse_polynomial("3/2*x[1,2]^2", ctx).unwrap();
        assert_eq!(p.len(), 1);
        let (m, c) = p.terms().next().unwrap();
        assert_eq!(*c, rat(3, 2));
        assert_eq!(m.exponent(ctx.x(1, 2).unwrap()), 2);
        assert_eq!(m.degree(), 2);
    }

    #[test]
    fn whitespace_and_signs() {
        let ctx = Context::matrix(2);
        let p = parse_polynomial("  - x[ 1 , 1 ] +2 * x[2,2]*x[2,2]-  1/3 ", ctx).unwrap();
        assert_eq!(p.to_string(), "2*x[2,2]^2 - x[1,1] - 1/3");
    }

    #[test]
    fn other_rosters() {
        let d = Context::Diagonal { n: 3 };
        assert_eq!(parse_polynomial("t_2^2 + t_1*t_3", d).unwrap().to_string(), "t_1*t_3 + t_2^2");
        let b = Context::MatrixT { n: 1 };
        assert_eq!(parse_polynomial("t^2*x[1,1]", b).unwrap().to_string(), "t^2*x[1,1]");
    }

    #[test]
    fn errors() {
        let ctx = Context::matrix(2);
        assert!(matches!(parse_polynomial("x[3,1]", ctx), Err(AlgebraError::VariableOutsideRoster { .. })));
        assert!(matches!(parse_polynomial("t_1", ctx), Err(AlgebraError::VariableOutsideRoster { .. })));
        match parse_polynomial("x[1,1] + * x[2,2]", ctx) {
            Err(AlgebraError::Syntax { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial("x[1,1] x[1,2]", ctx), Err(AlgebraError::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/0", ctx), Err(AlgebraError::Syntax { .. })));
        assert!(matches!(parse_polynomial("", ctx), Err(AlgebraError::Syntax { .. })));
        assert!(matches!(parse_polynomial("x[1,1", ctx), Err(AlgebraError::Syntax { .. })));
    }
}
