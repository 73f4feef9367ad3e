//! Rank of the semiclassical Poisson structure at sampled rational points,
//! the leaf-dimension formula over `S_n x S_n`, and the dimension count for
//! complete integrable systems.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Context, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::linalg::rank_rational;
use crate::perm::{compose, cycle_count, inverse, inversions, permutations};
use crate::poisson::{bracket, generators, BracketTable, Structure};

pub const DEFAULT_WEYL_CAP: usize = 5;

/// Permutation of `1..=n`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermWord(Vec<usize>);

impl PermWord {
    /// From the one-line notation `w(1) .. w(n)`.
    pub fn new(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidArgument(format!("{one_line:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(PermWord(one_line.iter().map(|v| v - 1).collect()))
    }

    pub fn identity(n: usize) -> Self {
        PermWord((0..n).collect())
    }

    /// The longest element `n n-1 .. 1`.
    pub fn longest(n: usize) -> Self {
        PermWord((0..n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    pub fn length(&self) -> usize {
        inversions(&self.0)
    }

    pub fn compose(&self, other: &PermWord) -> PermWord {
        PermWord(compose(&self.0, &other.0))
    }

    pub fn inverse(&self) -> PermWord {
        PermWord(inverse(&self.0))
    }
}

impl fmt::Display for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Fewest transpositions whose product is `w`: `n - #cycles`.
pub fn min_transpositions(w: &PermWord) -> usize {
    w.n() - cycle_count(&w.0)
}

/// `l(w+) + l(w-) + min_transpositions(w+ w-^-1)`.
pub fn leaf_dimension(w_plus: &PermWord, w_minus: &PermWord) -> Result<usize> {
    if w_plus.n() != w_minus.n() {
        return Err(Error::InvalidArgument(format!("permutations of {} and {} letters", w_plus.n(), w_minus.n())));
    }
    Ok(w_plus.length() + w_minus.length() + min_transpositions(&w_plus.compose(&w_minus.inverse())))
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylReport {
    pub n: usize,
    pub pairs: usize,
    pub max_leaf_dimension: usize,
    pub expected: usize,
    /// The maximum is reached at `(w0, w0)`.
    pub attained_at_longest: bool,
    pub maximizers: usize,
    /// `leaf_dimension <= l(w+) + l(w-) + l(w+ w-^-1)` on every pair.
    pub bound_holds: bool,
    pub bound_max: usize,
    pub pass: bool,
}

/// Exhaustive maximum of [`leaf_dimension`] over `S_n x S_n`.
pub fn max_leaf_dimension(n: usize, cap: usize) -> Result<WeylReport> {
    use rayon::prelude::*;
    if n > cap {
        return Err(Error::ResourceLimit(format!("S_{n} x S_{n} enumeration is above the cap n <= {cap}")));
    }
    let perms: Vec<PermWord> = permutations(n).into_iter().map(PermWord).collect();
    let stats: Vec<(usize, usize)> = perms
        .par_iter()
        .flat_map_iter(|wp| {
            perms.iter().map(move |wm| {
                let dim = leaf_dimension(wp, wm).expect("same n");
                let bound = wp.length() + wm.length() + wp.compose(&wm.inverse()).length();
                (dim, bound)
            })
        })
        .collect();
    let max = stats.iter().map(|s| s.0).max().unwrap_or(0);
    let bound_max = stats.iter().map(|s| s.1).max().unwrap_or(0);
    let w0 = PermWord::longest(n);
    let expected = n * n.saturating_sub(1);
    let attained_at_longest = leaf_dimension(&w0, &w0)? == max;
    let bound_holds = stats.iter().all(|&(d, b)| d <= b);
    Ok(WeylReport {
        n,
        pairs: stats.len(),
        max_leaf_dimension: max,
        expected,
        attained_at_longest,
        maximizers: stats.iter().filter(|s| s.0 == max).count(),
        bound_holds,
        bound_max,
        pass: max == expected && attained_at_longest && bound_holds && bound_max == expected,
    })
}

/// Which variety the sample points lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    M,
    GL,
    SL,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::M => "m",
            Space::GL => "gl",
            Space::SL => "sl",
        })
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Space::M),
            "gl" => Ok(Space::GL),
            "sl" => Ok(Space::SL),
            other => Err(Error::InvalidArgument(format!("unknown space '{other}' (expected m, gl or sl)"))),
        }
    }
}

impl Space {
    pub fn dimension(self, n: usize) -> usize {
        match self {
            Space::M | Space::GL => n * n,
            Space::SL => n * n - 1,
        }
    }

    /// The claimed generic rank: `n(n-1) + 1` on `M_n`,
    /// `GL_n` and `n(n-1)` on `SL_n`.
    pub fn claimed_rank(self, n: usize) -> usize {
        match self {
            Space::M | Space::GL => n * (n - 1) + 1,
            Space::SL => n * (n - 1),
        }
    }

    /// Generic rank of the coordinate bracket matrix, `n(n-1)` on all three.
    /// The matrix is antisymmetric, so its rank is even everywhere.
    pub fn expected_rank(self, n: usize) -> usize {
        n * (n - 1)
    }

    /// Dimension of the subalgebra generated by the `c_i`.
    pub fn invariant_count(self, n: usize) -> usize {
        match self {
            Space::M | Space::GL => n,
            Space::SL => n.saturating_sub(1),
        }
    }
}

/// `({x_a, x_b})_{a,b}` over the generators in row-major order.
pub fn bracket_matrix(table: &BracketTable) -> Vec<Vec<Polynomial>> {
    let gens = generators(table.context());
    gens.iter().map(|f| gens.iter().map(|g| bracket(f, g, table).expect("same context")).collect()).collect()
}

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

fn flatten(m: Vec<Vec<Rational>>) -> Vec<Rational> {
    m.into_iter().flatten().collect()
}

/// Seeded rational point of the space, as a row-major `n^2` vector.
pub fn sample_point<R: Rng>(space: Space, n: usize, rng: &mut R) -> Vec<Rational> {
    let small = |rng: &mut R| int(rng.gen_range(-5..=5));
    match space {
        Space::M => (0..n * n).map(|_| small(rng)).collect(),
        Space::GL => loop {
            let p: Vec<Rational> = (0..n * n).map(|_| small(rng)).collect();
            let rows: Vec<Vec<Rational>> = p.chunks(n).map(<[Rational]>::to_vec).collect();
            if rank_rational(&rows, n) == n {
                break p;
            }
        },
        Space::SL => {
            let mut lower = vec![vec![Rational::zero(); n]; n];
            let mut diag = vec![vec![Rational::zero(); n]; n];
            let mut upper = vec![vec![Rational::zero(); n]; n];
            let mut product = Rational::one();
            for i in 0..n {
                lower[i][i] = Rational::one();
                upper[i][i] = Rational::one();
                for j in 0..i {
                    lower[i][j] = small(rng);
                }
                for j in i + 1..n {
                    upper[i][j] = small(rng);
                }
                if i + 1 < n {
                    let d = loop {
                        let d = small(rng);
                        if !d.is_zero() {
                            break d;
                        }
                    };
                    product *= &d;
                    diag[i][i] = d;
                }
            }
            diag[n - 1][n - 1] = product.recip();
            flatten(mat_mul(&mat_mul(&lower, &diag), &upper))
        }
    }
}

/// Exact rank of the bracket matrix evaluated at `point`.
pub fn rank_at(matrix: &[Vec<Polynomial>], point: &[Rational]) -> usize {
    let rows: Vec<Vec<Rational>> = matrix.iter().map(|row| row.iter().map(|p| p.eval(point)).collect()).collect();
    rank_rational(&rows, matrix.len())
}

#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub space: Space,
    pub n: usize,
    pub structure: Structure,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub max_rank: usize,
    /// First sample (1-based) reaching `max_rank`.
    pub first_max_at: usize,
    pub expected_rank: usize,
    pub claimed_rank: usize,
    pub all_even: bool,
    pub pass: bool,
}

/// Ranks at explicit points.
pub fn rank_at_points(space: Space, table: &BracketTable, points: &[Vec<Rational>]) -> Result<RankReport> {
    use rayon::prelude::*;
    let Context::Matrix { n } = table.context() else {
        return Err(Error::InvalidArgument(format!("rank needs a table over O(M_n), got {}", table.context())));
    };
    if points.is_empty() {
        return Err(Error::InvalidArgument("at least one sample point is required".into()));
    }
    if let Some(p) = points.iter().find(|p| p.len() != n * n) {
        return Err(Error::InvalidArgument(format!("point with {} coordinates, expected {}", p.len(), n * n)));
    }
    let matrix = bracket_matrix(table);
    let ranks: Vec<usize> = points.par_iter().map(|p| rank_at(&matrix, p)).collect();
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    let expected_rank = space.expected_rank(n);
    Ok(RankReport {
        space,
        n,
        structure: table.structure(),
        samples: points.len(),
        seed: None,
        max_rank,
        first_max_at: ranks.iter().position(|&r| r == max_rank).map_or(0, |k| k + 1),
        expected_rank,
        claimed_rank: space.claimed_rank(n),
        all_even: ranks.iter().all(|r| r % 2 == 0),
        pass: max_rank == expected_rank,
    })
}

/// Maximum exact rank over `samples` seeded points of the space.
pub fn sampled_rank(space: Space, table: &BracketTable, samples: usize, seed: u64) -> Result<RankReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let n = table.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<Rational>> = (0..samples).map(|_| sample_point(space, n, &mut rng)).collect();
    let mut report = rank_at_points(space, table, &points)?;
    report.seed = Some(seed);
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct IntegrabilityReport {
    pub space: Space,
    pub n: usize,
    pub dimension: usize,
    pub rank: usize,
    /// `dimension - rank / 2`, printed as an exact rational.
    pub required: String,
    pub claimed_rank: usize,
    pub required_with_claimed_rank: String,
    pub invariant_count: usize,
    pub integrable: bool,
}

/// Dimension a complete integrable system on the space must have,
/// compared with the number of independent `c_i`.
pub fn integrability_gap(n: usize, space: Space) -> Result<IntegrabilityReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let dimension = space.dimension(n);
    let required = |rank: usize| int(dimension as i64) - int(rank as i64) / int(2);
    let rank = space.expected_rank(n);
    let claimed_rank = space.claimed_rank(n);
    let invariant_count = space.invariant_count(n);
    let req = required(rank);
    Ok(IntegrabilityReport {
        space,
        n,
        dimension,
        rank,
        integrable: req == int(invariant_count as i64),
        required: req.to_string(),
        claimed_rank,
        required_with_claimed_rank: required(claimed_rank).to_string(),
        invariant_count,
    })
}
