//! Structural maps between the matrix coordinate rings.
//!
//! * `phi`: `A_n -> B_{2,n} = A_n / (x[1,j], x[i,1] : i,j >= 2)`, presented
//!   as `A_{n-1}[t]` via `x[1,1] -> t`, `x[i,j] -> x[i-1,j-1]`.
//! * `delta`: `A_{n-1}[t] -> Q[t_1..t_n]`, `t -> t_1`, `x[i,i] -> t_{i+1}`,
//!   off-diagonal variables to zero.
//! * `gamma`: the flip `x[i,j] -> x[n+1-i, n+1-j]` of `A_n`, a Poisson antimap.

use crate::algebra::{Context, Polynomial, VarName};
use crate::error::{Error, Result};

fn matrix_n(f: &Polynomial) -> Result<usize> {
    match f.context() {
        Context::Matrix { n } if n >= 1 => Ok(n),
        other => Err(Error::InvalidArgument(format!("expected a polynomial in O(M_n), got {other}"))),
    }
}

pub fn phi(f: &Polynomial) -> Result<Polynomial> {
    let n = matrix_n(f)?;
    let src = f.context();
    let dst = Context::MatrixT { n: n - 1 };
    Ok(f.substitute_vars(dst, |v| match src.name(v) {
        VarName::X(1, 1) => dst.t(),
        VarName::X(i, j) if i >= 2 && j >= 2 => dst.x(i - 1, j - 1),
        _ => None,
    }))
}

pub fn delta(f: &Polynomial) -> Result<Polynomial> {
    let Context::MatrixT { n: m } = f.context() else {
        return Err(Error::InvalidArgument(format!("expected a polynomial in O(M_k)[t], got {}", f.context())));
    };
    let src = f.context();
    let dst = Context::Diagonal { n: m + 1 };
    Ok(f.substitute_vars(dst, |v| match src.name(v) {
        VarName::T => dst.ti(1),
        VarName::X(i, j) if i == j => dst.ti(i + 1),
        _ => None,
    }))
}

/// `delta(phi(f))`.
pub fn delta_phi(f: &Polynomial) -> Result<Polynomial> {
    delta(&phi(f)?)
}

pub fn gamma(f: &Polynomial) -> Result<Polynomial> {
    let n = matrix_n(f)?;
    let ctx = f.context();
    Ok(f.substitute_vars(ctx, |v| {
        let (i, j) = ctx.position(v).expect("matrix variable");
        ctx.x(n + 1 - i, n + 1 - j)
    }))
}

/// `t_i -> t_{n+1-i}` on `Q[t_1..t_n]`.
pub fn gamma_diagonal(f: &Polynomial) -> Result<Polynomial> {
    let Context::Diagonal { n } = f.context() else {
        return Err(Error::InvalidArgument(format!("expected a polynomial in Q[t_1..t_n], got {}", f.context())));
    };
    let ctx = f.context();
    Ok(f.substitute_vars(ctx, |v| ctx.ti(n - v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn p(s: &str, ctx: Context) -> Polynomial {
        parse_polynomial(s, ctx).unwrap()
    }

    #[test]
    fn phi_examples() {
        let a2 = Context::matrix(2);
        let b = Context::MatrixT { n: 1 };
        assert!(phi(&p("x[1,2]", a2)).unwrap().is_zero());
        assert_eq!(phi(&p("x[1,1] + x[2,2]", a2)).unwrap(), p("t + x[1,1]", b));
        assert_eq!(phi(&p("x[1,1]*x[2,2] - x[1,2]*x[2,1]", a2)).unwrap(), p("t*x[1,1]", b));
        let a3 = Context::matrix(3);
        assert_eq!(phi(&p("x[2,3]*x[3,1] + x[3,2]", a3)).unwrap(), p("x[2,1]", Context::MatrixT { n: 2 }));
    }

    #[test]
    fn delta_examples() {
        let b = Context::MatrixT { n: 2 };
        assert!(delta(&p("x[1,2]*t*x[1,1]", b)).unwrap().is_zero());
        assert_eq!(delta(&p("t + x[1,1] + x[2,2]", b)).unwrap(), p("t_1 + t_2 + t_3", Context::Diagonal { n: 3 }));
        let a2 = Context::matrix(2);
        assert_eq!(
            delta_phi(&p("x[1,1]*x[2,2] - x[1,2]*x[2,1]", a2)).unwrap(),
            p("t_1*t_2", Context::Diagonal { n: 2 })
        );
    }

    #[test]
    fn gamma_is_an_involution() {
        let a3 = Context::matrix(3);
        let f = p("x[1,2]*x[3,3] - 2*x[2,1]", a3);
        assert_eq!(gamma(&f).unwrap(), p("x[3,2]*x[1,1] - 2*x[2,3]", a3));
        assert_eq!(gamma(&gamma(&f).unwrap()).unwrap(), f);
        let d = Context::Diagonal { n: 3 };
        assert_eq!(gamma_diagonal(&p("t_1^2*t_2", d)).unwrap(), p("t_3^2*t_2", d));
    }

    #[test]
    fn wrong_contexts() {
        let d = Context::Diagonal { n: 2 };
        assert!(phi(&p("t_1", d)).is_err());
        assert!(delta(&p("t_1", d)).is_err());
    }
}
