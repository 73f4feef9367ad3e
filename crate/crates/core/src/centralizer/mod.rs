//! Degree-by-degree Poisson centralizer of the trace `c_1` in `O(M_n)`,
//! compared against the subalgebra `Q[c_1, ..., c_n]`, plus the explicit
//! `O(SL_2)` computation.
//!
//! `ad c_1` preserves the torus weight `rows(m) - cols(m)` of a monomial,
//! so the linear map splits into independent weight blocks.

mod sl2;

pub use sl2::{
    sl2_ad_trace, sl2_basis, sl2_centralizer_dimension, sl2_eq1, sl2_eq2, sl2_eq3, sl2_equation_sweep, sl2_reduce,
    Sl2CentralizerReport, Sl2Element, Sl2EquationReport,
};

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{Context, Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::invariants::{char_coeff, char_coeffs};
use crate::linalg::{echelon, integer_rows, rank_rational};
use crate::poisson::{bracket, delta_phi, BracketTable, HamiltonianField, Structure};

pub const DEFAULT_MAX_AMBIENT: usize = 20_000;

/// Rough cost of one stored matrix entry during elimination.
const BYTES_PER_ENTRY: u64 = 64;

/// All monomials of one total degree, in descending graded-lex order.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub n: usize,
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

fn compositions(parts: usize, total: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if cur.len() + 1 == parts {
        cur.push(total);
        out.push(Monomial::from_dense(cur));
        cur.pop();
        return;
    }
    for e in (0..=total).rev() {
        cur.push(e);
        compositions(parts, total - e, cur, out);
        cur.pop();
    }
}

/// Monomials of degree `d` in `nvars` variables, descending.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    compositions(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

pub fn graded_monomials(n: usize, d: u32) -> GradedBasis {
    GradedBasis { n, degree: d, monomials: monomials_of_degree(n * n, d) }
}

/// `C(n^2 + d - 1, d)` without enumerating.
pub fn ambient_dimension(n: usize, d: u32) -> u128 {
    let v = (n * n) as u128;
    let mut acc: u128 = 1;
    for k in 1..=d as u128 {
        acc = acc * (v + k - 1) / k;
    }
    acc
}

/// Partitions of `d` into parts of size at most `n`.
pub fn expected_dimension(n: usize, d: u32) -> u64 {
    let d = d as usize;
    let mut ways = vec![0u64; d + 1];
    ways[0] = 1;
    for part in 1..=n {
        for s in part..=d {
            ways[s] += ways[s - part];
        }
    }
    ways[d]
}

/// Torus weight of a monomial in `O(M_n)`: row counts minus column counts.
fn weight(m: &Monomial, n: usize) -> Vec<i32> {
    let mut w = vec![0i32; n];
    for (v, e) in m.iter() {
        w[v / n] += e as i32;
        w[v % n] -= e as i32;
    }
    w
}

/// `c(m)`: total exponent of the `x[1,j]` and `x[i,1]` with `i, j >= 2`.
pub fn gr_centralizer_weight(m: &Monomial, n: usize) -> u32 {
    m.iter()
        .filter(|&(v, _)| {
            let (i, j) = (v / n, v % n);
            (i == 0) != (j == 0)
        })
        .map(|(_, e)| e)
        .sum()
}

#[derive(Clone, Debug)]
pub struct CentralizerConfig {
    /// Largest degree-`d` monomial space accepted without `force`.
    pub max_ambient: usize,
    /// Bound on the estimated elimination memory, in MiB.
    pub memory_cap_mb: Option<u64>,
    pub force: bool,
    /// Keep printed kernel vectors in the report.
    pub with_basis: bool,
}

impl Default for CentralizerConfig {
    fn default() -> Self {
        CentralizerConfig { max_ambient: DEFAULT_MAX_AMBIENT, memory_cap_mb: None, force: false, with_basis: false }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanCheck {
    pub count: usize,
    pub rank: usize,
    pub all_centralize: bool,
    pub expected: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralizerReport {
    pub n: usize,
    pub degree: u32,
    pub structure: Structure,
    pub ambient_dim: usize,
    pub weight_blocks: usize,
    pub largest_block: (usize, usize),
    pub nullspace_dim: usize,
    pub expected_dim: u64,
    pub span: SpanCheck,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    /// Kernel vectors as polynomials, one per free column.
    #[serde(skip)]
    pub kernel: Vec<Polynomial>,
}

struct Block {
    cols: Vec<usize>,
    rows: Vec<Monomial>,
}

/// Nullspace of `m -> {c_1, m}` on the degree-`d` piece, via Bareiss
/// elimination on each weight block.
pub fn centralizer_dimension(
    n: usize,
    d: u32,
    table: &BracketTable,
    config: &CentralizerConfig,
) -> Result<CentralizerReport> {
    use rayon::prelude::*;
    let ctx = Context::matrix(n);
    if table.context() != ctx {
        return Err(Error::InvalidArgument(format!("table is over {}, expected {ctx}", table.context())));
    }
    let ambient = ambient_dimension(n, d);
    if !config.force && ambient > config.max_ambient as u128 {
        return Err(Error::ResourceLimit(format!(
            "degree-{d} space of O(M_{n}) has dimension {ambient}, above the cap {}",
            config.max_ambient
        )));
    }
    let basis = graded_monomials(n, d);
    let c1 = char_coeff(n, 1)?;
    let field = HamiltonianField::new(&c1, table)?;
    let images: Vec<Polynomial> = basis.monomials.par_iter().map(|m| field.on_monomial(m)).collect();

    let mut by_weight: BTreeMap<Vec<i32>, Vec<usize>> = BTreeMap::new();
    for (k, m) in basis.monomials.iter().enumerate() {
        by_weight.entry(weight(m, n)).or_default().push(k);
    }
    let blocks: Vec<Block> = by_weight
        .into_values()
        .map(|cols| {
            let mut rows: Vec<Monomial> = cols.iter().flat_map(|&k| images[k].terms().map(|(m, _)| m.clone())).collect();
            rows.sort_by(|a, b| b.cmp(a));
            rows.dedup();
            Block { cols, rows }
        })
        .collect();
    let largest = blocks.iter().map(|b| (b.rows.len(), b.cols.len())).max_by_key(|&(r, c)| r * c).unwrap_or((0, 0));
    if let Some(cap) = config.memory_cap_mb {
        let bytes = largest.0 as u64 * largest.1 as u64 * BYTES_PER_ENTRY;
        if !config.force && bytes > cap * 1024 * 1024 {
            return Err(Error::ResourceLimit(format!(
                "elimination block {}x{} needs about {} MiB, above the cap {cap} MiB",
                largest.0,
                largest.1,
                bytes / (1024 * 1024)
            )));
        }
    }

    let kernels: Vec<Vec<Polynomial>> = blocks
        .par_iter()
        .map(|block| {
            let row_index: HashMap<&Monomial, usize> = block.rows.iter().enumerate().map(|(r, m)| (m, r)).collect();
            let mut rows = vec![vec![Rational::from_integer(0.into()); block.cols.len()]; block.rows.len()];
            for (c, &k) in block.cols.iter().enumerate() {
                for (m, coeff) in images[k].terms() {
                    debug_assert_eq!(weight(m, n), weight(&basis.monomials[k], n));
                    rows[row_index[m]][c] = coeff.clone();
                }
            }
            let ech = echelon(integer_rows(&rows), block.cols.len());
            ech.nullspace()
                .into_iter()
                .map(|v| kernel_polynomial(ctx, &v, &block.cols, &basis.monomials))
                .collect()
        })
        .collect();
    let kernel: Vec<Polynomial> = kernels.into_iter().flatten().collect();

    let expected = expected_dimension(n, d);
    let span = c_monomial_span_check(n, d)?;
    let nullspace_dim = kernel.len();
    Ok(CentralizerReport {
        n,
        degree: d,
        structure: table.structure(),
        ambient_dim: basis.len(),
        weight_blocks: blocks.len(),
        largest_block: largest,
        nullspace_dim,
        expected_dim: expected,
        pass: nullspace_dim as u64 == expected && span.pass,
        span,
        basis: config.with_basis.then(|| kernel.iter().map(Polynomial::to_string).collect()),
        kernel,
    })
}

fn kernel_polynomial(ctx: Context, v: &[BigInt], cols: &[usize], monomials: &[Monomial]) -> Polynomial {
    Polynomial::from_terms(
        ctx,
        v.iter().zip(cols).map(|(c, &k)| (monomials[k].clone(), Rational::from_integer(c.clone()))),
    )
}

/// Exponent tuples `(a_1..a_n)` with `sum i a_i = d`.
pub fn weighted_exponents(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(part: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if part == 0 {
            if left == 0 {
                let mut v = cur.clone();
                v.reverse();
                out.push(v);
            }
            return;
        }
        for a in (0..=left / part as u32).rev() {
            cur.push(a);
            rec(part - 1, left - a * part as u32, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Products `c_1^a_1 ... c_n^a_n` of weighted degree `d`.
pub fn c_monomials(n: usize, d: u32) -> Vec<Polynomial> {
    let cs = char_coeffs(n);
    let ctx = Context::matrix(n);
    weighted_exponents(n, d)
        .into_iter()
        .map(|a| a.iter().zip(&cs).fold(Polynomial::one(ctx), |acc, (&e, c)| &acc * &c.pow(e)))
        .collect()
}

/// Checks that the `c`-monomials of degree `d` are independent, lie in the
/// centralizer of `c_1`, and are as many as [`expected_dimension`].
pub fn c_monomial_span_check(n: usize, d: u32) -> Result<SpanCheck> {
    use rayon::prelude::*;
    let table = BracketTable::semiclassical(n);
    let c1 = char_coeff(n, 1)?;
    let products = c_monomials(n, d);
    let all_centralize = products.par_iter().all(|p| bracket(&c1, p, &table).expect("same context").is_zero());
    let rank = coefficient_rank(&products);
    let expected = expected_dimension(n, d);
    Ok(SpanCheck {
        count: products.len(),
        rank,
        all_centralize,
        expected,
        pass: all_centralize && rank == products.len() && products.len() as u64 == expected,
    })
}

/// Rank of the coefficient matrix of a list of polynomials.
pub fn coefficient_rank(polys: &[Polynomial]) -> usize {
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m).or_insert(next);
        }
    }
    let rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::from_integer(0.into()); index.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    rank_rational(&rows, index.len())
}

/// Leading `x[1,1]`-components of the kernel vectors that fail to
/// gr-commute with `x[1,1]`. Empty means `C(c_1)` sits inside `C^gr(x[1,1])`.
pub fn gr_containment_failures(report: &CentralizerReport) -> Result<Vec<String>> {
    let n = report.n;
    let ctx = Context::matrix(n);
    let gr = BracketTable::gr(n)?;
    let x11 = Polynomial::x(ctx, 1, 1);
    let v = ctx.x(1, 1).expect("n >= 1");
    let mut failures = Vec::new();
    for f in &report.kernel {
        let Some(top) = f.degree_in(v) else { continue };
        let lead = f.component_in(v, top);
        if !bracket(&x11, &lead, &gr)?.is_zero() {
            failures.push(lead.to_string());
        }
    }
    Ok(failures)
}

/// Rank of `delta . phi` on the kernel; equal to the nullspace dimension
/// when the map is injective there.
pub fn delta_phi_kernel_rank(report: &CentralizerReport) -> Result<usize> {
    let images = report.kernel.iter().map(delta_phi).collect::<Result<Vec<_>>>()?;
    Ok(coefficient_rank(&images))
}

#[derive(Clone, Debug, Serialize)]
pub struct GrWeightReport {
    pub n: usize,
    pub max_degree: u32,
    pub monomials_checked: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// `{x[1,1], m}_gr = c(m) x[1,1] m` for every monomial of degree `<= max_degree`.
pub fn gr_weight_sweep(n: usize, max_degree: u32) -> Result<GrWeightReport> {
    use rayon::prelude::*;
    let ctx = Context::matrix(n);
    let gr = BracketTable::gr(n)?;
    let x11 = Polynomial::x(ctx, 1, 1);
    let v = ctx.x(1, 1).expect("n >= 1");
    let monomials: Vec<Monomial> = (0..=max_degree).flat_map(|d| monomials_of_degree(n * n, d)).collect();
    let failures: Vec<String> = monomials
        .par_iter()
        .filter_map(|m| {
            let lhs = bracket(&x11, &Polynomial::monomial(ctx, m.clone(), Rational::from_integer(1.into())), &gr)
                .expect("same context");
            let c = Rational::from_integer(gr_centralizer_weight(m, n).into());
            let rhs = Polynomial::monomial(ctx, m.mul(&Monomial::var(v)), c);
            (lhs != rhs).then(|| format!("{}", Polynomial::monomial(ctx, m.clone(), Rational::from_integer(1.into()))))
        })
        .collect();
    Ok(GrWeightReport { n, max_degree, monomials_checked: monomials.len(), pass: failures.is_empty(), failures })
}
