//! Monomial orders given by nonsingular integer matrices.
//!
//! Two monomials are compared by the lexicographic order of the vectors
//! `rows · exponents`. Every constructor here returns a square matrix of full
//! rank, so distinct monomials never compare equal.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::monomial::Monomial;
use super::weight::WeightMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    /// Weight rows on top, grevlex tie-breaks below. Used for input rings.
    WeightOverGrevlex,
    /// Dependent-degree and dependent grevlex rows on top, weight rows
    /// below. Used for closure presentations.
    GrevlexOverWeight,
    /// A grevlex block on the dependent variables over a grevlex block on
    /// the independent ones; modules compare position first.
    PositionUpBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderMatrix {
    kind: OrderKind,
    rows: Vec<Vec<i64>>,
    block_split: Option<usize>,
}

/// Grevlex rows restricted to the variables `start..end` of `nvars`:
/// the block's total degree, then negated unit vectors from the last
/// variable of the block backwards.
fn grevlex_rows(nvars: usize, start: usize, end: usize) -> Vec<Vec<i64>> {
    let mut rows = Vec::new();
    if start >= end {
        return rows;
    }
    let mut ones = vec![0; nvars];
    ones[start..end].iter_mut().for_each(|v| *v = 1);
    rows.push(ones);
    for v in (start + 1..end).rev() {
        let mut r = vec![0; nvars];
        r[v] = -1;
        rows.push(r);
    }
    rows
}

/// Rank of an integer matrix, by elimination over Q.
pub fn matrix_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let factor = &m[i][col] * &inv;
                for j in col..ncols {
                    let delta = &factor * &m[rank][j];
                    m[i][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Keep `primary` rows in order while they raise the rank, then top up from
/// `fallback`. A row that is a combination of earlier rows never decides a
/// comparison, so dropping it leaves the order unchanged.
pub(crate) fn select_rows(nvars: usize, primary: Vec<Vec<i64>>, fallback: Vec<Vec<i64>>) -> Result<Vec<Vec<i64>>> {
    let mut chosen: Vec<Vec<i64>> = Vec::with_capacity(nvars);
    for row in primary.into_iter().chain(fallback) {
        if chosen.len() == nvars {
            break;
        }
        if row.iter().all(|&v| v == 0) {
            continue;
        }
        chosen.push(row);
        if matrix_rank(&chosen) < chosen.len() {
            chosen.pop();
        }
    }
    if chosen.len() < nvars {
        return Err(Error::OrderConstruction(format!(
            "only rank {} reachable for {} variables",
            chosen.len(),
            nvars
        )));
    }
    Ok(chosen)
}

impl OrderMatrix {
    /// An order from explicit rows; must be square and nonsingular, and the
    /// first nonzero entry of every column must be positive (a well-order).
    pub fn from_rows(kind: OrderKind, rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                got: bad.len(),
            });
        }
        if matrix_rank(&rows) != n {
            return Err(Error::OrderConstruction("matrix is singular".into()));
        }
        for col in 0..n {
            let first = rows.iter().map(|r| r[col]).find(|&v| v != 0);
            if first.map_or(true, |v| v < 0) {
                return Err(Error::OrderConstruction(format!(
                    "column {col} does not start with a positive entry"
                )));
            }
        }
        Ok(OrderMatrix {
            kind,
            rows,
            block_split: None,
        })
    }

    pub fn grevlex(nvars: usize) -> Self {
        OrderMatrix {
            kind: OrderKind::Grevlex,
            rows: grevlex_rows(nvars, 0, nvars),
            block_split: None,
        }
    }

    /// The weight rows replace the top rows of the grevlex matrix.
    pub fn weight_over_grevlex(w: &WeightMatrix) -> Result<Self> {
        let m = w.nvars();
        let base = grevlex_rows(m, 0, m);
        let mut primary = w.signed_rows();
        primary.extend(base.iter().skip(w.nrows()).cloned());
        let rows = select_rows(m, primary, base)?;
        Ok(OrderMatrix {
            kind: OrderKind::WeightOverGrevlex,
            rows,
            block_split: None,
        })
    }

    /// Dependent total degree first, then dependent grevlex ties, then the
    /// weight rows, then grevlex ties among the independent variables.
    /// Every product of two dependent variables therefore exceeds every
    /// term that is at most linear in them.
    pub fn grevlex_over_weight(ndep: usize, w: &WeightMatrix) -> Result<Self> {
        let m = w.nvars();
        if ndep > m {
            return Err(Error::Dimension { expected: m, got: ndep });
        }
        let mut primary = grevlex_rows(m, 0, ndep);
        primary.extend(w.signed_rows());
        let indep = grevlex_rows(m, ndep, m);
        primary.extend(indep.iter().skip(1).cloned());
        let mut fallback = indep;
        fallback.extend(grevlex_rows(m, 0, m));
        let rows = select_rows(m, primary, fallback)?;
        Ok(OrderMatrix {
            kind: OrderKind::GrevlexOverWeight,
            rows,
            block_split: Some(ndep),
        })
    }

    /// Grevlex on `0..ndep` over grevlex on `ndep..nvars`.
    pub fn block(ndep: usize, nvars: usize) -> Self {
        let mut rows = grevlex_rows(nvars, 0, ndep);
        rows.extend(grevlex_rows(nvars, ndep, nvars));
        OrderMatrix {
            kind: OrderKind::PositionUpBlock,
            rows,
            block_split: Some(ndep),
        }
    }

    /// Construct an order of the given kind for a ring with `ndep`
    /// dependent variables and weight matrix `w`.
    pub fn build(kind: OrderKind, w: &WeightMatrix, ndep: usize) -> Result<Self> {
        match kind {
            OrderKind::Grevlex => Ok(Self::grevlex(w.nvars())),
            OrderKind::WeightOverGrevlex => Self::weight_over_grevlex(w),
            OrderKind::GrevlexOverWeight => Self::grevlex_over_weight(ndep, w),
            OrderKind::PositionUpBlock => Ok(Self::block(ndep, w.nvars())),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn block_split(&self) -> Option<usize> {
        self.block_split
    }

    pub fn nvars(&self) -> usize {
        self.rows.len()
    }

    /// Compare two monomials with matching lengths.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exps(), b.exps());
        for row in &self.rows {
            let mut s: i64 = 0;
            for ((w, x), y) in row.iter().zip(ea).zip(eb) {
                if *w != 0 {
                    s += w * (*x as i64 - *y as i64);
                }
            }
            match s.cmp(&0) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.len() != self.nvars() {
                return Err(Error::Dimension {
                    expected: self.nvars(),
                    got: m.len(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// The vector `rows · exponents`.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(m.exps()).map(|(w, e)| w * *e as i64).sum())
            .collect()
    }
}

/// Whether every column's first nonzero entry is positive.
pub fn is_well_order(rows: &[Vec<i64>]) -> bool {
    let n = rows.first().map_or(0, |r| r.len());
    (0..n).all(|c| {
        rows.iter()
            .map(|r| r[c])
            .find(|&v| v != 0)
            .is_some_and(|v| v > 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    /// Textbook grevlex: total degree, then the smaller exponent in the
    /// last variable where the vectors differ wins.
    fn grevlex_oracle(a: &[u32], b: &[u32]) -> Ordering {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    }

    fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..nvars {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=deg).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        out.retain(|v| v.iter().sum::<u32>() <= deg);
        out
    }

    #[test]
    fn grevlex_matches_textbook_definition() {
        for nvars in [2, 3] {
            let ord = OrderMatrix::grevlex(nvars);
            let ms = monomials_up_to(nvars, 6);
            for a in &ms {
                for b in &ms {
                    assert_eq!(ord.cmp(&mono(a), &mono(b)), grevlex_oracle(a, b), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn identity_is_equal() {
        let ord = OrderMatrix::grevlex(2);
        assert_eq!(ord.cmp(&mono(&[2, 1]), &mono(&[2, 1])), Ordering::Equal);
        assert!(ord.try_cmp(&mono(&[1]), &mono(&[1, 2])).is_err());
    }

    #[test]
    fn weight_ties_broken_toward_dependent_power() {
        let w = WeightMatrix::new(vec![vec![11, 6]]).unwrap();
        let ord = OrderMatrix::weight_over_grevlex(&w).unwrap();
        assert_eq!(ord.rows(), &[vec![11, 6], vec![0, -1]]);
        assert_eq!(ord.cmp(&mono(&[6, 0]), &mono(&[0, 11])), Ordering::Greater);
    }

    #[test]
    fn grevlex_over_weight_for_closure_ring() {
        let w = WeightMatrix::new(vec![vec![25, 21, 20, 11, 10, 6]]).unwrap();
        let ord = OrderMatrix::grevlex_over_weight(5, &w).unwrap();
        assert_eq!(ord.nvars(), 6);
        assert_eq!(ord.rows()[0], vec![1, 1, 1, 1, 1, 0]);
        assert_eq!(ord.rows()[5], vec![25, 21, 20, 11, 10, 6]);
        // any quadratic in the dependent block beats any linear term
        let quad = mono(&[0, 0, 0, 0, 2, 0]);
        let lin = mono(&[1, 0, 0, 0, 0, 30]);
        assert_eq!(ord.cmp(&quad, &lin), Ordering::Greater);
        assert!(is_well_order(ord.rows()));
    }

    #[test]
    fn vector_weights_complete_to_full_rank() {
        // x dependent; wt(x)=(3,2), wt(y)=(6,6), wt(z)=(6,0)
        let w = WeightMatrix::new(vec![vec![3, 6, 6], vec![2, 6, 0]]).unwrap();
        let ord = OrderMatrix::weight_over_grevlex(&w).unwrap();
        assert_eq!(matrix_rank(ord.rows()), 3);
        // rank-deficient weights are topped up from grevlex
        let w = WeightMatrix::new(vec![vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        let ord = OrderMatrix::weight_over_grevlex(&w).unwrap();
        assert_eq!(matrix_rank(ord.rows()), 3);
    }

    #[test]
    fn from_rows_rejects_singular() {
        assert!(OrderMatrix::from_rows(OrderKind::Grevlex, vec![vec![1, 1], vec![2, 2]]).is_err());
        assert!(OrderMatrix::from_rows(OrderKind::Grevlex, vec![vec![1, 1], vec![0, -1]]).is_ok());
        assert!(OrderMatrix::from_rows(OrderKind::Grevlex, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn block_order_eliminates_dependent() {
        let ord = OrderMatrix::block(1, 3);
        assert_eq!(ord.cmp(&mono(&[1, 0, 0]), &mono(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&mono(&[0, 2, 0]), &mono(&[0, 1, 1])), Ordering::Greater);
    }
}
