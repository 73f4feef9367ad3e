use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Polynomial;
use crate::invariants::char_coeff;
use crate::poisson::{bracket, BracketTable};

use super::{MinorConvention, NCPolynomial, NCWord, QuantumMatrixRing};

#[derive(Clone, Debug, Serialize)]
pub struct QuantumCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: String, pass: bool, detail: String) -> QuantumCheck {
    QuantumCheck { name, pass, detail }
}

/// `[sigma_i, sigma_j]` for all `i < j`.
pub fn sigma_commutation(ring: &QuantumMatrixRing, convention: MinorConvention) -> Vec<QuantumCheck> {
    use rayon::prelude::*;
    let n = ring.n();
    let sigmas: Vec<NCPolynomial> =
        (1..=n).map(|i| ring.quantum_minor_sum(i, convention).expect("index in range")).collect();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let c = ring.commutator(&sigmas[i - 1], &sigmas[j - 1]).expect("same n");
            let detail = if c.is_zero() { "0".to_string() } else { format!("{} terms, e.g. {}", c.len(), first_term(&c)) };
            check(format!("[sigma_{i}, sigma_{j}]"), c.is_zero(), detail)
        })
        .collect()
}

fn first_term(p: &NCPolynomial) -> String {
    p.terms()
        .next()
        .map(|(w, c)| NCPolynomial::term(p.n(), w.clone(), c.clone()).to_string())
        .unwrap_or_else(|| "0".into())
}

/// `[det_t, x[i,j]]` for every generator.
pub fn det_centrality(ring: &QuantumMatrixRing) -> Vec<QuantumCheck> {
    use rayon::prelude::*;
    let n = ring.n();
    let det = ring.quantum_det();
    let gens: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    gens.par_iter()
        .map(|&(i, j)| {
            let c = ring.commutator(&det, &NCPolynomial::x(n, i, j)).expect("same n");
            check(format!("[det_t, x[{i},{j}]]"), c.is_zero(), if c.is_zero() { "0".into() } else { first_term(&c) })
        })
        .collect()
}

/// `sigma_i` at `t = 1` against `c_i`.
pub fn sigma_specialization(ring: &QuantumMatrixRing, convention: MinorConvention) -> Vec<QuantumCheck> {
    let n = ring.n();
    (1..=n)
        .map(|i| {
            let s = ring.quantum_minor_sum(i, convention).expect("index in range").specialize_at_one();
            let c = char_coeff(n, i).expect("index in range");
            let pass = s == c;
            let detail = if pass { format!("{} terms", c.len()) } else { format!("sigma_{i}(1) = {s}") };
            check(format!("sigma_{i} at t=1 = c_{i}"), pass, detail)
        })
        .collect()
}

/// `sigma_n` against `det_t` under the given coefficient convention.
pub fn sigma_top_vs_det(ring: &QuantumMatrixRing, convention: MinorConvention) -> QuantumCheck {
    let n = ring.n();
    let top = ring.quantum_minor_sum(n, convention).expect("n >= 1");
    let det = ring.normal_form(&ring.quantum_det());
    let pass = top == det;
    let detail = if pass { "equal".to_string() } else { format!("sigma_{n} = {top}; det_t = {det}") };
    check(format!("sigma_{n} = det_t"), pass, detail)
}

fn limit_check(ring: &QuantumMatrixRing, table: &BracketTable, a: &NCPolynomial, b: &NCPolynomial) -> QuantumCheck {
    let name = format!("lim [{a}, {b}]");
    let direct = bracket(&a.specialize_at_one(), &b.specialize_at_one(), table).expect("same context");
    match ring.semiclassical_limit_pair(a, b) {
        Ok(limit) => {
            let pass = limit == direct;
            let detail = if pass { limit.to_string() } else { format!("limit {limit}, bracket {direct}") };
            check(name, pass, detail)
        }
        Err(e) => check(name, false, e.to_string()),
    }
}

/// Every ordered generator pair.
pub fn limit_generator_pairs(ring: &QuantumMatrixRing) -> Vec<QuantumCheck> {
    let n = ring.n();
    let table = BracketTable::semiclassical(n);
    let gens: Vec<NCPolynomial> = (1..=n).flat_map(|i| (1..=n).map(move |j| NCPolynomial::x(n, i, j))).collect();
    let mut out = Vec::new();
    for a in &gens {
        for b in &gens {
            out.push(limit_check(ring, &table, a, b));
        }
    }
    out
}

fn random_word<R: Rng>(n: usize, max_len: usize, rng: &mut R) -> NCPolynomial {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| rng.gen_range(0..n * n) as u16).collect();
    NCPolynomial::term(n, NCWord(letters), crate::algebra::LaurentScalar::one())
}

/// Seeded pairs of random words of length `<= 2`.
pub fn limit_random_pairs(ring: &QuantumMatrixRing, pairs: usize, seed: u64) -> Vec<QuantumCheck> {
    let n = ring.n();
    let table = BracketTable::semiclassical(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..pairs)
        .map(|_| {
            let a = random_word(n, 2, &mut rng);
            let b = random_word(n, 2, &mut rng);
            limit_check(ring, &table, &a, &b)
        })
        .collect()
}

/// `{a, b}` as a polynomial for printing in reports.
pub fn limit_table(ring: &QuantumMatrixRing) -> Vec<(String, String, Polynomial)> {
    let n = ring.n();
    let mut out = Vec::new();
    for v in 0..n * n {
        for u in v + 1..n * n {
            let a = NCPolynomial::term(n, NCWord::letter(v), crate::algebra::LaurentScalar::one());
            let b = NCPolynomial::term(n, NCWord::letter(u), crate::algebra::LaurentScalar::one());
            let p = ring.semiclassical_limit_pair(&a, &b).expect("commutators are divisible by t - 1");
            out.push((a.to_string(), b.to_string(), p));
        }
    }
    out
}
