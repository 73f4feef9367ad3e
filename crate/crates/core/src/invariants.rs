//! Matrix minors, characteristic-polynomial coefficients `c_i`, elementary
//! symmetric polynomials, and the involutivity check `{c_i, c_j} = 0`.

use serde::Serialize;

use crate::algebra::{Context, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::perm::{permutations, sign, subsets};
use crate::poisson::{bracket, BracketTable, Structure};

/// Strictly increasing row or column indices in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) || indices.first() == Some(&0) {
            return Err(Error::InvalidArgument(format!("index set {indices:?} is not strictly increasing in 1..")));
        }
        Ok(IndexSet(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `[I|J] = sum_s sgn(s) x[i_1, j_s(1)] ... x[i_k, j_s(k)]`.
pub fn minor(rows: &IndexSet, cols: &IndexSet, n: usize) -> Result<Polynomial> {
    if rows.len() != cols.len() {
        return Err(Error::InvalidArgument(format!("minor of a {}x{} block", rows.len(), cols.len())));
    }
    if rows.0.iter().chain(&cols.0).any(|&i| i > n) {
        return Err(Error::InvalidArgument(format!("minor indices exceed n = {n}")));
    }
    let ctx = Context::matrix(n);
    let mut out = Polynomial::zero(ctx);
    for s in permutations(rows.len()) {
        let mut term = Polynomial::constant(ctx, Rational::from_integer(sign(&s).into()));
        for (a, &sa) in s.iter().enumerate() {
            term = term * Polynomial::x(ctx, rows.0[a], cols.0[sa]);
        }
        out = out + term;
    }
    Ok(out)
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("coefficient index {i} outside 1..={n}")))
    }
}

/// `c_i = sum_{|I| = i} [I|I]`, subsets in lexicographic order.
pub fn char_coeff(n: usize, i: usize) -> Result<Polynomial> {
    check_index(n, i)?;
    let mut out = Polynomial::zero(Context::matrix(n));
    for subset in subsets(n, i) {
        let set = IndexSet(subset);
        out = out + minor(&set, &set, n)?;
    }
    Ok(out)
}

/// `c_1, ..., c_n`.
pub fn char_coeffs(n: usize) -> Vec<Polynomial> {
    (1..=n).map(|i| char_coeff(n, i).expect("index in range")).collect()
}

/// Polynomial in an auxiliary variable `lambda`, coefficients in `O(M_n)`.
type LambdaPoly = Vec<Polynomial>;

fn lp_mul(a: &LambdaPoly, b: &LambdaPoly, ctx: Context) -> LambdaPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Polynomial::zero(ctx); a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(p * q);
        }
    }
    out
}

fn lp_add_assign(acc: &mut LambdaPoly, other: &LambdaPoly, negate: bool, ctx: Context) {
    if acc.len() < other.len() {
        acc.resize(other.len(), Polynomial::zero(ctx));
    }
    for (k, q) in other.iter().enumerate() {
        acc[k] = if negate { &acc[k] - q } else { &acc[k] + q };
    }
}

/// Cofactor expansion along the first row.
fn lp_det(m: &[Vec<LambdaPoly>], ctx: Context) -> LambdaPoly {
    let size = m.len();
    if size == 0 {
        return vec![Polynomial::one(ctx)];
    }
    let mut total: LambdaPoly = Vec::new();
    for col in 0..size {
        if m[0][col].iter().all(Polynomial::is_zero) {
            continue;
        }
        let sub: Vec<Vec<LambdaPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = lp_mul(&m[0][col], &lp_det(&sub, ctx), ctx);
        lp_add_assign(&mut total, &term, col % 2 == 1, ctx);
    }
    total
}

/// `c_i` read off `det(A - lambda Id) = sum_i (-1)^(n-i) c_i lambda^(n-i)`,
/// expanded by cofactors. Independent of [`char_coeff`].
pub fn char_coeff_via_charpoly(n: usize, i: usize) -> Result<Polynomial> {
    check_index(n, i)?;
    let ctx = Context::matrix(n);
    let m: Vec<Vec<LambdaPoly>> = (1..=n)
        .map(|r| {
            (1..=n)
                .map(|c| {
                    let x = Polynomial::x(ctx, r, c);
                    if r == c {
                        vec![x, -Polynomial::one(ctx)]
                    } else {
                        vec![x]
                    }
                })
                .collect()
        })
        .collect();
    let charpoly = lp_det(&m, ctx);
    let coeff = charpoly.get(n - i).cloned().unwrap_or_else(|| Polynomial::zero(ctx));
    Ok(if (n - i) % 2 == 1 { -coeff } else { coeff })
}

/// `e_i(t_1, ..., t_n)`.
pub fn elementary_symmetric(n: usize, i: usize) -> Result<Polynomial> {
    check_index(n, i)?;
    let ctx = Context::Diagonal { n };
    let mut out = Polynomial::zero(ctx);
    for subset in subsets(n, i) {
        let term = subset
            .iter()
            .fold(Polynomial::one(ctx), |acc, &j| acc * Polynomial::var(ctx, ctx.ti(j).expect("in range")));
        out = out + term;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PairBracket {
    pub i: usize,
    pub j: usize,
    /// Printed value of `{c_i, c_j}`.
    pub value: String,
    pub zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutivityReport {
    pub n: usize,
    pub structure: Structure,
    pub pairs: Vec<PairBracket>,
    pub pass: bool,
}

/// Computes `{c_i, c_j}` for all `1 <= i < j <= n`.
pub fn involutivity_check(n: usize, table: &BracketTable) -> Result<InvolutivityReport> {
    use rayon::prelude::*;
    if table.context() != Context::matrix(n) {
        return Err(Error::InvalidArgument(format!("table is over {}, expected O(M_{n})", table.context())));
    }
    let cs = char_coeffs(n);
    let index_pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let pairs: Vec<PairBracket> = index_pairs
        .par_iter()
        .map(|&(i, j)| {
            let value = bracket(&cs[i - 1], &cs[j - 1], table).expect("shared context");
            PairBracket { i, j, zero: value.is_zero(), value: value.to_string() }
        })
        .collect();
    let pass = pairs.iter().all(|p| p.zero);
    Ok(InvolutivityReport { n, structure: table.structure(), pairs, pass })
}
