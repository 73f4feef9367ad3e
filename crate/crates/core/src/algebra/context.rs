use std::fmt;

use serde::{Deserialize, Serialize};

/// Variable roster of a commutative polynomial ring.
///
/// Variables are addressed by a dense index; the index order is the
/// variable order used by the monomial ordering and the printer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Context {
    /// `x[i,j]` for `1 <= i, j <= n`, row-major.
    Matrix { n: usize },
    /// `t` followed by `x[i,j]` for `1 <= i, j <= n`: the ring `O(M_n)[t]`.
    MatrixT { n: usize },
    /// `t_1, ..., t_n`.
    Diagonal { n: usize },
}

/// A decoded variable name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarName {
    X(usize, usize),
    T,
    Ti(usize),
}

impl Context {
    pub fn matrix(n: usize) -> Self {
        Context::Matrix { n }
    }

    /// Matrix size `n` of the `x` part (the number of `t_i` for `Diagonal`).
    pub fn n(&self) -> usize {
        match *self {
            Context::Matrix { n } | Context::MatrixT { n } | Context::Diagonal { n } => n,
        }
    }

    pub fn num_vars(&self) -> usize {
        match *self {
            Context::Matrix { n } => n * n,
            Context::MatrixT { n } => n * n + 1,
            Context::Diagonal { n } => n,
        }
    }

    /// Index of `x[i,j]` (1-based entries), if the context has it.
    pub fn x(&self, i: usize, j: usize) -> Option<usize> {
        match *self {
            Context::Matrix { n } if (1..=n).contains(&i) && (1..=n).contains(&j) => {
                Some((i - 1) * n + (j - 1))
            }
            Context::MatrixT { n } if (1..=n).contains(&i) && (1..=n).contains(&j) => {
                Some(1 + (i - 1) * n + (j - 1))
            }
            _ => None,
        }
    }

    /// Index of the central variable `t` in `MatrixT`.
    pub fn t(&self) -> Option<usize> {
        match self {
            Context::MatrixT { .. } => Some(0),
            _ => None,
        }
    }

    /// Index of `t_i` (1-based) in `Diagonal`.
    pub fn ti(&self, i: usize) -> Option<usize> {
        match *self {
            Context::Diagonal { n } if (1..=n).contains(&i) => Some(i - 1),
            _ => None,
        }
    }

    pub fn index_of(&self, name: VarName) -> Option<usize> {
        match name {
            VarName::X(i, j) => self.x(i, j),
            VarName::T => self.t(),
            VarName::Ti(i) => self.ti(i),
        }
    }

    pub fn name(&self, var: usize) -> VarName {
        assert!(var < self.num_vars(), "variable {var} outside {self}");
        match *self {
            Context::Matrix { n } => VarName::X(var / n + 1, var % n + 1),
            Context::MatrixT { n } => {
                if var == 0 {
                    VarName::T
                } else {
                    VarName::X((var - 1) / n + 1, (var - 1) % n + 1)
                }
            }
            Context::Diagonal { .. } => VarName::Ti(var + 1),
        }
    }

    /// Matrix position of a variable, when it is an `x` variable.
    pub fn position(&self, var: usize) -> Option<(usize, usize)> {
        match self.name(var) {
            VarName::X(i, j) => Some((i, j)),
            _ => None,
        }
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarName::X(i, j) => write!(f, "x[{i},{j}]"),
            VarName::T => write!(f, "t"),
            VarName::Ti(i) => write!(f, "t_{i}"),
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::Matrix { n } => write!(f, "O(M_{n})"),
            Context::MatrixT { n } => write!(f, "O(M_{n})[t]"),
            Context::Diagonal { n } => write!(f, "Q[t_1..t_{n}]"),
        }
    }
}
