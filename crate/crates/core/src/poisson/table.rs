use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Context, Polynomial, Rational};
use crate::error::{Error, Result};

/// Which Poisson structure a table encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Structure {
    /// Semiclassical limit of the quantum matrix algebra.
    Semiclassical,
    /// Kirillov-Kostant-Souriau bracket of `gl_n`.
    Kks,
    /// Associated graded of the semiclassical bracket for the `x[1,1]`-degree filtration.
    Gr,
}

impl Structure {
    pub const ALL: [Structure; 3] = [Structure::Semiclassical, Structure::Kks, Structure::Gr];

    pub fn table(self, n: usize) -> Result<BracketTable> {
        match self {
            Structure::Semiclassical => Ok(BracketTable::semiclassical(n)),
            Structure::Kks => Ok(BracketTable::kks(n)),
            Structure::Gr => BracketTable::gr(n),
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Structure::Semiclassical => "semiclassical",
            Structure::Kks => "kks",
            Structure::Gr => "gr",
        })
    }
}

impl FromStr for Structure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "semiclassical" => Ok(Structure::Semiclassical),
            "kks" => Ok(Structure::Kks),
            "gr" => Ok(Structure::Gr),
            other => Err(Error::InvalidArgument(format!(
                "unknown structure '{other}' (expected semiclassical, kks or gr)"
            ))),
        }
    }
}

/// Brackets of pairs of generators, stored for ordered pairs `a < b` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    ctx: Context,
    structure: Structure,
    entries: BTreeMap<(usize, usize), Polynomial>,
}

/// Semiclassical value of `{x[i,j], x[k,l]}` for `(i,j) < (k,l)` row-major.
fn semiclassical_entry(ctx: Context, (i, j): (usize, usize), (k, l): (usize, usize)) -> Polynomial {
    if i < k && j < l {
        (Polynomial::x(ctx, i, l) * Polynomial::x(ctx, k, j)).scale(&Rational::from_integer(2.into()))
    } else if (i == k && j < l) || (j == l && i < k) {
        Polynomial::x(ctx, i, j) * Polynomial::x(ctx, k, l)
    } else {
        Polynomial::zero(ctx)
    }
}

impl BracketTable {
    fn build(ctx: Context, structure: Structure, rule: impl Fn((usize, usize), (usize, usize)) -> Polynomial) -> Self {
        let mut entries = BTreeMap::new();
        let vars: Vec<(usize, (usize, usize))> =
            (0..ctx.num_vars()).filter_map(|v| ctx.position(v).map(|p| (v, p))).collect();
        for (ia, &(a, pa)) in vars.iter().enumerate() {
            for &(b, pb) in &vars[ia + 1..] {
                let value = rule(pa, pb);
                if !value.is_zero() {
                    entries.insert((a, b), value);
                }
            }
        }
        BracketTable { ctx, structure, entries }
    }

    /// `{x[i,j], x[k,l]}`: `2 x[i,l] x[k,j]` if `i<k, j<l`; `x[i,j] x[k,l]`
    /// on a shared row or column; zero otherwise.
    pub fn semiclassical(n: usize) -> Self {
        let ctx = Context::matrix(n);
        Self::build(ctx, Structure::Semiclassical, |p, q| semiclassical_entry(ctx, p, q))
    }

    /// The semiclassical bracket of `O(M_n)` on `O(M_n)[t]` with `t` central.
    pub fn semiclassical_central_t(n: usize) -> Self {
        let ctx = Context::MatrixT { n };
        Self::build(ctx, Structure::Semiclassical, |p, q| semiclassical_entry(ctx, p, q))
    }

    /// Coordinates of `[E_ij, E_kl] = d_jk E_il - d_li E_kj`.
    pub fn kks(n: usize) -> Self {
        let ctx = Context::matrix(n);
        Self::build(ctx, Structure::Kks, |(i, j), (k, l)| {
            let mut value = Polynomial::zero(ctx);
            if j == k {
                value = value + Polynomial::x(ctx, i, l);
            }
            if l == i {
                value = value - Polynomial::x(ctx, k, j);
            }
            value
        })
    }

    /// Semiclassical table with `{x[1,1], x[i,j]}` set to zero for `i, j >= 2`.
    pub fn gr(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("gr table needs n >= 2, got {n}")));
        }
        let ctx = Context::matrix(n);
        Ok(Self::build(ctx, Structure::Gr, |p, q| {
            if p == (1, 1) && q.0 >= 2 && q.1 >= 2 {
                Polynomial::zero(ctx)
            } else {
                semiclassical_entry(ctx, p, q)
            }
        }))
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    /// `{x_a, x_b}` for any ordered pair, antisymmetrized from the stored half.
    pub fn entry(&self, a: usize, b: usize) -> Polynomial {
        use std::cmp::Ordering;
        match a.cmp(&b) {
            Ordering::Equal => Polynomial::zero(self.ctx),
            Ordering::Less => self.entries.get(&(a, b)).cloned().unwrap_or_else(|| Polynomial::zero(self.ctx)),
            Ordering::Greater => self.entries.get(&(b, a)).map(|p| -p).unwrap_or_else(|| Polynomial::zero(self.ctx)),
        }
    }

    /// Nonzero stored entries `(a, b, {x_a, x_b})` with `a < b`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.entries.iter().map(|(&(a, b), p)| (a, b, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn entry(t: &BracketTable, a: (usize, usize), b: (usize, usize)) -> String {
        let ctx = t.context();
        t.entry(ctx.x(a.0, a.1).unwrap(), ctx.x(b.0, b.1).unwrap()).to_string()
    }

    #[test]
    fn semiclassical_examples() {
        let t = BracketTable::semiclassical(2);
        assert_eq!(entry(&t, (1, 1), (2, 2)), "2*x[1,2]*x[2,1]");
        assert_eq!(entry(&t, (1, 1), (1, 2)), "x[1,1]*x[1,2]");
        assert_eq!(entry(&t, (1, 2), (2, 1)), "0");
        assert_eq!(entry(&t, (2, 2), (1, 1)), "-2*x[1,2]*x[2,1]");
    }

    #[test]
    fn kks_examples() {
        let t = BracketTable::kks(2);
        assert_eq!(entry(&t, (1, 1), (1, 2)), "x[1,2]");
        assert_eq!(entry(&t, (1, 1), (2, 2)), "0");
        assert_eq!(entry(&t, (1, 2), (2, 1)), "x[1,1] - x[2,2]");
    }

    #[test]
    fn gr_examples() {
        let t2 = BracketTable::gr(2).unwrap();
        assert_eq!(entry(&t2, (1, 1), (2, 2)), "0");
        assert_eq!(entry(&t2, (1, 1), (1, 2)), "x[1,1]*x[1,2]");
        assert_eq!(entry(&t2, (1, 1), (2, 1)), "x[1,1]*x[2,1]");
        let t3 = BracketTable::gr(3).unwrap();
        assert_eq!(entry(&t3, (2, 2), (3, 3)), "2*x[2,3]*x[3,2]");
        assert!(BracketTable::gr(1).is_err());
    }

    #[test]
    fn entries_are_homogeneous_of_the_right_degree() {
        for n in 1..=3 {
            for (_, _, p) in BracketTable::semiclassical(n).nonzero_entries() {
                assert!(p.is_homogeneous() && p.degree() == Some(2));
            }
            for (_, _, p) in BracketTable::kks(n).nonzero_entries() {
                assert!(p.is_homogeneous() && p.degree() == Some(1));
            }
        }
    }

    #[test]
    fn central_t_extension() {
        let t = BracketTable::semiclassical_central_t(2);
        let ctx = t.context();
        let tv = ctx.t().unwrap();
        for v in 0..ctx.num_vars() {
            assert!(t.entry(tv, v).is_zero());
        }
        let expected = parse_polynomial("2*x[1,2]*x[2,1]", ctx).unwrap();
        assert_eq!(t.entry(ctx.x(1, 1).unwrap(), ctx.x(2, 2).unwrap()), expected);
    }

    #[test]
    fn structure_names() {
        for s in Structure::ALL {
            assert_eq!(s.to_string().parse::<Structure>().unwrap(), s);
        }
        assert!("poisson".parse::<Structure>().is_err());
    }
}
