use std::cmp::Ordering;

/// Sparse exponent vector: `(variable, exponent)` pairs sorted by variable,
/// with no zero exponents stored.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the lowest-indexed variable where the two differ (larger exponent wins).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: usize) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial { exps: vec![(v as u32, e)], degree: e }
    }

    /// Builds from a dense exponent slice indexed by variable.
    pub fn from_dense(dense: &[u32]) -> Self {
        let exps: Vec<(u32, u32)> = dense
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v as u32, e))
            .collect();
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    /// Builds from arbitrary `(variable, exponent)` pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Vec<(u32, u32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.binary_search_by_key(&(v as u32), |&(w, _)| w) {
                Ok(pos) => exps[pos].1 += e,
                Err(pos) => exps.insert(pos, (v as u32, e)),
            }
        }
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    pub fn to_dense(&self, num_vars: usize) -> Vec<u32> {
        let mut dense = vec![0; num_vars];
        for &(v, e) in &self.exps {
            dense[v as usize] = e;
        }
        dense
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.exps
            .binary_search_by_key(&(v as u32), |&(w, _)| w)
            .map(|pos| self.exps[pos].1)
            .unwrap_or(0)
    }

    /// `(variable, exponent)` pairs in increasing variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        exps.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        exps.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        exps.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    exps.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    exps.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
            degree: self.degree * k,
        }
    }

    /// Divides by one power of `v`; returns the previous exponent and the quotient.
    pub fn derive(&self, v: usize) -> Option<(u32, Monomial)> {
        let pos = self.exps.binary_search_by_key(&(v as u32), |&(w, _)| w).ok()?;
        let e = self.exps[pos].1;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(pos);
        } else {
            exps[pos].1 -= 1;
        }
        Some((e, Monomial { exps, degree: self.degree - 1 }))
    }

    /// Applies `f` to each variable; `None` kills the monomial.
    pub fn map_vars(&self, mut f: impl FnMut(usize) -> Option<usize>) -> Option<Monomial> {
        let mut pairs = Vec::with_capacity(self.exps.len());
        for (v, e) in self.iter() {
            pairs.push((f(v)?, e));
        }
        Some(Monomial::from_pairs(pairs))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (&(va, ea), &(vb, eb)) in self.exps.iter().zip(other.exps.iter()) {
                if va != vb {
                    // The side holding the lower variable has the larger exponent there.
                    return if va < vb { Ordering::Greater } else { Ordering::Less };
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
            self.exps.len().cmp(&other.exps.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
