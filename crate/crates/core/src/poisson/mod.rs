//! Poisson bracket engines on matrix coordinate rings: bracket tables for
//! the semiclassical, KKS and associated-graded structures, the
//! bivector-formula bracket, and the maps `phi`, `delta`, `gamma`.

mod bracket;
mod maps;
mod table;

pub use bracket::{bracket, jacobi_defect, HamiltonianField};
pub use maps::{delta, delta_phi, gamma, gamma_diagonal, phi};
pub use table::{BracketTable, Structure};

use crate::algebra::{Context, Polynomial};

/// Generators of a matrix context, in variable order.
pub fn generators(ctx: Context) -> Vec<Polynomial> {
    (0..ctx.num_vars()).map(|v| Polynomial::var(ctx, v)).collect()
}

/// Jacobi defects of all generator triples `a < b < c`; returns the
/// number of triples checked and the nonzero defects found.
pub fn jacobi_generator_sweep(table: &BracketTable) -> (usize, Vec<((usize, usize, usize), Polynomial)>) {
    use rayon::prelude::*;
    let gens = generators(table.context());
    let nv = gens.len();
    let triples: Vec<(usize, usize, usize)> = (0..nv)
        .flat_map(|a| ((a + 1)..nv).flat_map(move |b| ((b + 1)..nv).map(move |c| (a, b, c))))
        .collect();
    let failures: Vec<_> = triples
        .par_iter()
        .filter_map(|&(a, b, c)| {
            let d = jacobi_defect(&gens[a], &gens[b], &gens[c], table).expect("shared context");
            (!d.is_zero()).then_some(((a, b, c), d))
        })
        .collect();
    (triples.len(), failures)
}
