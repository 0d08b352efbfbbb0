//! Weight functions: additive maps from monomials to `N^n`, compared
//! lexicographically.

use std::cmp::Ordering;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Rows are weight components, columns are variables (dependent first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightMatrix {
    rows: Vec<Vec<u64>>,
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let ncols = rows
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::Input("weight matrix has no rows".into()))?;
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::Dimension {
                expected: ncols,
                got: bad.len(),
            });
        }
        Ok(WeightMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn nvars(&self) -> usize {
        self.rows[0].len()
    }

    pub(crate) fn signed_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect()
    }

    /// Weight vector of variable `var`.
    pub fn column(&self, var: usize) -> Vec<u64> {
        self.rows.iter().map(|r| r[var]).collect()
    }

    pub fn of_monomial(&self, m: &Monomial) -> Vec<u64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(m.exps()).map(|(w, e)| w * *e as u64).sum())
            .collect()
    }

    /// The lexicographically largest weight among the terms of `f`.
    pub fn of_poly<F: Field>(&self, f: &Poly<F>) -> Result<Vec<u64>> {
        f.terms()
            .iter()
            .map(|(m, _)| self.of_monomial(m))
            .max()
            .ok_or(Error::UndefinedWeight)
    }

    /// Build a matrix from per-variable weight vectors.
    pub fn from_columns(columns: &[Vec<u64>]) -> Result<Self> {
        let nrows = columns
            .first()
            .map(|c| c.len())
            .ok_or_else(|| Error::Input("no variables".into()))?;
        if let Some(bad) = columns.iter().find(|c| c.len() != nrows) {
            return Err(Error::Dimension {
                expected: nrows,
                got: bad.len(),
            });
        }
        let rows = (0..nrows)
            .map(|i| columns.iter().map(|c| c[i]).collect())
            .collect();
        WeightMatrix::new(rows)
    }
}

/// Outcome of checking whether a relation admits the given weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightVerdict {
    Accepted,
    /// The maximal-weight monomials of the relation, which do not have the
    /// required shape.
    Rejected { offending: Vec<Monomial> },
}

/// Accept iff the maximal-weight monomials of `f` are exactly `y^d` and one
/// monomial in the independent variables alone.
///
/// `f` must be monic of degree `d` in the single dependent variable.
pub fn validate_weight_function<F: Field>(
    ring: &Ring<F>,
    f: &Poly<F>,
    w: &WeightMatrix,
) -> Result<WeightVerdict> {
    if ring.ndep() != 1 {
        return Err(Error::Input(format!(
            "expected exactly one dependent variable, found {}",
            ring.ndep()
        )));
    }
    if w.nvars() != ring.nvars() {
        return Err(Error::Dimension {
            expected: ring.nvars(),
            got: w.nvars(),
        });
    }
    let d = dependent_degree_monic(ring, f)?;
    let top = w.of_poly(f)?;
    let maximal: Vec<Monomial> = f
        .terms()
        .iter()
        .filter(|(m, _)| w.of_monomial(m).cmp(&top) == Ordering::Equal)
        .map(|(m, _)| m.clone())
        .collect();
    let pure_power = Monomial::var(ring.nvars(), 0, d);
    let ok = maximal.len() == 2
        && maximal.contains(&pure_power)
        && maximal.iter().any(|m| *m != pure_power && m.is_independent(1));
    Ok(if ok {
        WeightVerdict::Accepted
    } else {
        WeightVerdict::Rejected { offending: maximal }
    })
}

/// Degree `d` of `f` in the dependent variable, checking that `y^d` has
/// coefficient 1 and is the only monomial of `y`-degree `d` or more.
pub fn dependent_degree_monic<F: Field>(ring: &Ring<F>, f: &Poly<F>) -> Result<u32> {
    let field = ring.field();
    let d = f
        .terms()
        .iter()
        .map(|(m, _)| m.exp(0))
        .max()
        .ok_or_else(|| Error::Input("relation is zero".into()))?;
    let top: Vec<_> = f.terms().iter().filter(|(m, _)| m.exp(0) == d).collect();
    let pure = Monomial::var(ring.nvars(), 0, d);
    if d == 0 || top.len() != 1 || top[0].0 != pure || !field.is_one(&top[0].1) {
        return Err(Error::Input(format!(
            "relation {} is not monic in {}",
            ring.display(f),
            ring.names()[0]
        )));
    }
    Ok(d)
}
