use crate::algebra::{AlgebraError, Monomial, Polynomial, Rational};

use super::BracketTable;

fn check(table: &BracketTable, p: &Polynomial) -> Result<(), AlgebraError> {
    if p.context() == table.context() {
        Ok(())
    } else {
        Err(AlgebraError::ContextMismatch { left: p.context(), right: table.context() })
    }
}

/// `{f, g} = sum_{a<b} {x_a, x_b} (df/dx_a dg/dx_b - df/dx_b dg/dx_a)`.
pub fn bracket(f: &Polynomial, g: &Polynomial, table: &BracketTable) -> Result<Polynomial, AlgebraError> {
    check(table, f)?;
    check(table, g)?;
    let ctx = table.context();
    let nv = ctx.num_vars();
    let df: Vec<Polynomial> = (0..nv).map(|v| f.partial(v)).collect();
    let dg: Vec<Polynomial> = (0..nv).map(|v| g.partial(v)).collect();
    let mut out = Polynomial::zero(ctx);
    for (a, b, value) in table.nonzero_entries() {
        if (df[a].is_zero() || dg[b].is_zero()) && (df[b].is_zero() || dg[a].is_zero()) {
            continue;
        }
        let cross = &df[a] * &dg[b] - &df[b] * &dg[a];
        if !cross.is_zero() {
            out = out + value * &cross;
        }
    }
    Ok(out)
}

/// `{f, {g, h}} + {g, {h, f}} + {h, {f, g}}`.
pub fn jacobi_defect(
    f: &Polynomial,
    g: &Polynomial,
    h: &Polynomial,
    table: &BracketTable,
) -> Result<Polynomial, AlgebraError> {
    let a = bracket(f, &bracket(g, h, table)?, table)?;
    let b = bracket(g, &bracket(h, f, table)?, table)?;
    let c = bracket(h, &bracket(f, g, table)?, table)?;
    Ok(a + b + c)
}

/// The derivation `{f, .}`, cached as its values `{f, x_a}` on generators.
///
/// Evaluating on a monomial costs one multiplication per variable it
/// contains, which is what the centralizer assembly needs.
#[derive(Clone, Debug)]
pub struct HamiltonianField {
    images: Vec<Polynomial>,
}

impl HamiltonianField {
    pub fn new(f: &Polynomial, table: &BracketTable) -> Result<Self, AlgebraError> {
        check(table, f)?;
        let ctx = table.context();
        let mut images = vec![Polynomial::zero(ctx); ctx.num_vars()];
        for (a, b, value) in table.nonzero_entries() {
            // {f, x_b} gains df/dx_a {x_a, x_b}; {f, x_a} gains df/dx_b {x_b, x_a}.
            let da = f.partial(a);
            if !da.is_zero() {
                images[b] = &images[b] + &(&da * value);
            }
            let db = f.partial(b);
            if !db.is_zero() {
                images[a] = &images[a] - &(&db * value);
            }
        }
        Ok(HamiltonianField { images })
    }

    /// `{f, x_v}`.
    pub fn on_var(&self, v: usize) -> &Polynomial {
        &self.images[v]
    }

    /// `{f, m}` for a monomial `m`.
    pub fn on_monomial(&self, m: &Monomial) -> Polynomial {
        let ctx = self.images.first().map(Polynomial::context).expect("empty roster");
        let mut out = Polynomial::zero(ctx);
        for (v, _) in m.iter() {
            let (e, rest) = m.derive(v).expect("variable present");
            if !self.images[v].is_zero() {
                out.add_scaled_product(&Rational::from_integer(e.into()), &rest, &self.images[v]);
            }
        }
        out
    }

    /// `{f, g}`.
    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        let ctx = g.context();
        let mut out = Polynomial::zero(ctx);
        for (m, c) in g.terms() {
            for (v, _) in m.iter() {
                let (e, rest) = m.derive(v).expect("variable present");
                if !self.images[v].is_zero() {
                    out.add_scaled_product(&(c * Rational::from_integer(e.into())), &rest, &self.images[v]);
                }
            }
        }
        out
    }
}
