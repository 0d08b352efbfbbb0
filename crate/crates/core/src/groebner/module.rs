//! Submodules of free modules `R^K`, handled by adjoining one variable per
//! basis vector and never multiplying two of them together.

use super::buchberger::{buchberger_impl, minimal_reduced};
use super::reduce::normal_form;
use crate::error::{Error, Result};
use crate::polycore::{select_rows, Field, Monomial, OrderKind, OrderMatrix, Poly, Ring};

/// An element of `R^K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector<F: Field> {
    pub coords: Vec<Poly<F>>,
}

impl<F: Field> ModuleVector<F> {
    pub fn new(coords: Vec<Poly<F>>) -> Self {
        ModuleVector { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Position of the leading term: the highest nonzero component.
    pub fn lead_position(&self) -> Option<usize> {
        self.coords.iter().rposition(|c| !c.is_zero())
    }
}

/// Ring with `K` position variables appended and the position-up order:
/// the component index decides first, then the order of `ring`.
fn position_ring<F: Field>(ring: &Ring<F>, k: usize) -> Result<Ring<F>> {
    let n = ring.nvars();
    let total = n + k;
    let mut position = vec![0i64; total];
    for (i, v) in position[n..].iter_mut().enumerate() {
        *v = i as i64;
    }
    let mut primary = vec![position];
    for row in ring.order().rows() {
        let mut r = row.clone();
        r.resize(total, 0);
        primary.push(r);
    }
    let fallback = (0..k)
        .map(|i| {
            let mut r = vec![0i64; total];
            r[n + i] = 1;
            r
        })
        .collect();
    let rows = select_rows(total, primary, fallback)?;
    let order = OrderMatrix::from_rows(OrderKind::PositionUpBlock, rows)?;
    let mut names = ring.names().to_vec();
    names.extend((0..k).map(|i| format!("e#{i}")));
    Ring::new(ring.field().clone(), names, ring.ndep(), order)
}

fn embed<F: Field>(ring: &Ring<F>, pr: &Ring<F>, v: &ModuleVector<F>) -> Poly<F> {
    let n = ring.nvars();
    let mut terms = Vec::new();
    for (k, c) in v.coords.iter().enumerate() {
        for (m, a) in c.terms() {
            let mut e = Monomial::one(pr.nvars());
            for (i, &x) in m.exps().iter().enumerate() {
                e.set_exp(i, x);
            }
            e.set_exp(n + k, 1);
            terms.push((e, a.clone()));
        }
    }
    pr.from_terms(terms)
}

fn extract<F: Field>(ring: &Ring<F>, k: usize, p: &Poly<F>) -> ModuleVector<F> {
    let n = ring.nvars();
    let mut coords: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); k];
    for (m, a) in p.terms() {
        let pos = (0..k).find(|&i| m.exp(n + i) > 0).expect("linear in positions");
        coords[pos].push((Monomial::new(m.exps()[..n].iter().copied()), a.clone()));
    }
    ModuleVector::new(coords.into_iter().map(|t| ring.from_terms(t)).collect())
}

/// A reduced Gröbner basis of a submodule of `R^K`.
#[derive(Clone, Debug)]
pub struct ModuleBasis<F: Field> {
    ring: Ring<F>,
    positions: Ring<F>,
    rank: usize,
    gens: Vec<Poly<F>>,
}

impl<F: Field> ModuleBasis<F> {
    pub fn new(ring: &Ring<F>, columns: &[ModuleVector<F>]) -> Result<Self> {
        let Some(k) = columns.first().map(|c| c.rank()) else {
            return Err(Error::Input("no columns".into()));
        };
        if let Some(bad) = columns.iter().find(|c| c.rank() != k) {
            return Err(Error::Dimension {
                expected: k,
                got: bad.rank(),
            });
        }
        let pr = position_ring(ring, k)?;
        let gens: Vec<Poly<F>> = columns.iter().map(|c| embed(ring, &pr, c)).collect();
        let n = ring.nvars();
        let gb = minimal_reduced(&buchberger_impl(&pr, &gens, Some(n..n + k)));
        Ok(ModuleBasis {
            ring: ring.clone(),
            positions: pr,
            rank: k,
            gens: gb.into_gens(),
        })
    }

    /// Generators sorted ascending by leading term.
    pub fn columns(&self) -> Vec<ModuleVector<F>> {
        self.gens
            .iter()
            .rev()
            .map(|p| extract(&self.ring, self.rank, p))
            .collect()
    }

    pub fn normal_form(&self, v: &ModuleVector<F>) -> ModuleVector<F> {
        let p = embed(&self.ring, &self.positions, v);
        extract(&self.ring, self.rank, &normal_form(&self.positions, &p, &self.gens))
    }

    pub fn contains(&self, v: &ModuleVector<F>) -> bool {
        self.normal_form(v).is_zero()
    }
}

/// A reduced Gröbner basis of the submodule spanned by `columns`, under
/// position-up over the order of `ring`, sorted ascending by leading term.
pub fn module_gb<F: Field>(ring: &Ring<F>, columns: &[ModuleVector<F>]) -> Result<Vec<ModuleVector<F>>> {
    if columns.is_empty() {
        return Ok(Vec::new());
    }
    Ok(ModuleBasis::new(ring, columns)?.columns())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{matrix_rank, Rationals};

    #[test]
    fn single_column_made_monic() {
        let r = Ring::new(Rationals, vec!["y".into(), "x".into()], 1, OrderMatrix::block(1, 2)).unwrap();
        let v = ModuleVector::new(vec![r.parse("2*y").unwrap(), r.parse("4*x + 2").unwrap()]);
        let gb = module_gb(&r, &[v]).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].coords[1], r.parse("x + 1/2").unwrap());
        assert_eq!(gb[0].coords[0], r.parse("1/2*y").unwrap());
    }

    #[test]
    fn constant_matrices_have_gaussian_rank() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let field = Rationals;
        let r = Ring::new(field, vec!["y".into(), "x".into()], 1, OrderMatrix::block(1, 2)).unwrap();
        for _ in 0..30 {
            let k = rng.gen_range(1..5);
            let ncols = rng.gen_range(1..6);
            let mut rows = vec![vec![0i64; ncols]; k];
            let cols: Vec<ModuleVector<Rationals>> = (0..ncols)
                .map(|j| {
                    ModuleVector::new(
                        (0..k)
                            .map(|i| {
                                let v: i64 = if rng.gen_bool(0.4) { 0 } else { rng.gen_range(-3..4) };
                                rows[i][j] = v;
                                r.constant(field.from_i64(v))
                            })
                            .collect(),
                    )
                })
                .collect();
            let gb = module_gb(&r, &cols).unwrap();
            let nonzero = gb.iter().filter(|v| !v.is_zero()).count();
            assert_eq!(nonzero, matrix_rank(&rows), "{rows:?}");
            let leads: Vec<_> = gb.iter().map(|v| v.lead_position()).collect();
            let mut dedup = leads.clone();
            dedup.dedup();
            assert_eq!(leads, dedup);
            assert!(gb.iter().all(|v| v.coords.iter().all(|c| c.is_constant())));
        }
    }
}
