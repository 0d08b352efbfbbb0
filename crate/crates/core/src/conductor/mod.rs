//! A canonical monic conductor element read off the column-reduced
//! extended Jacobian.

use crate::error::{Error, Result};
use crate::groebner::{module_gb, poly_gcd, ModuleVector};
use crate::polycore::{Field, OrderMatrix, Poly, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct ConductorResult<F: Field> {
    /// Monic, in the independent variables only.
    pub delta: Poly<F>,
    /// One gcd per row that contributed, bottom row first.
    pub row_gcds: Vec<Poly<F>>,
}

/// Columns of `transpose(jacobian(B)) | B ⊗ identity`: for each variable,
/// the column of partial derivatives of the generators; then for each
/// generator `b_j` and each row `c`, the column with `b_j` in row `c`.
pub fn extended_jacobian<F: Field>(ring: &Ring<F>, gens: &[Poly<F>]) -> Result<Vec<ModuleVector<F>>> {
    if gens.is_empty() {
        return Err(Error::Input("no generators".into()));
    }
    let k = gens.len();
    let mut cols: Vec<ModuleVector<F>> = (0..ring.nvars())
        .map(|v| ModuleVector::new(gens.iter().map(|b| ring.derivative(b, v)).collect()))
        .collect();
    for b in gens {
        for c in 0..k {
            let mut coords = vec![ring.zero(); k];
            coords[c] = b.clone();
            cols.push(ModuleVector::new(coords));
        }
    }
    Ok(cols)
}

/// Column-reduce the extended Jacobian under position-up over a
/// dependent-over-independent block order, then scan every row from the
/// right: skip entries outside the independent subring, take the gcd of
/// the next run of entries inside it, and multiply the row gcds.
pub fn canonical_conductor<F: Field>(ring: &Ring<F>, gens: &[Poly<F>]) -> Result<ConductorResult<F>> {
    let block = ring.with_order(OrderMatrix::block(ring.ndep(), ring.nvars()))?;
    let gens: Vec<Poly<F>> = gens.iter().map(|g| block.resort(g.clone())).collect();
    let cols = module_gb(&block, &extended_jacobian(&block, &gens)?)?;
    let nrows = gens.len();
    let ndep = block.ndep();
    let entry = |i: usize, j: usize| -> &Poly<F> { &cols[j].coords[i] };
    let in_p = |p: &Poly<F>| !p.is_zero() && p.is_independent(ndep);

    let mut delta = block.one();
    let mut row_gcds = Vec::new();
    let mut i = nrows as isize - 1;
    let mut j = cols.len() as isize - 1;
    while i >= 0 && j >= 0 {
        while i >= 0 && j >= 0 && !in_p(entry(i as usize, j as usize)) {
            j -= 1;
        }
        let mut row = block.zero();
        while i >= 0 && j >= 0 && in_p(entry(i as usize, j as usize)) {
            row = poly_gcd(&block, &row, entry(i as usize, j as usize));
            j -= 1;
        }
        if !row.is_zero() {
            delta = block.mul(&delta, &row);
            row_gcds.push(ring.resort(row));
        }
        i -= 1;
    }
    if row_gcds.is_empty() {
        return Err(Error::Degenerate(
            "the Jacobian has no entries in the independent subring; the extension is not reduced".into(),
        ));
    }
    Ok(ConductorResult {
        delta: ring.monic(&ring.resort(delta)),
        row_gcds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{PrimeField, Rationals, WeightMatrix};

    fn ring(names: [&str; 2], w: [u64; 2]) -> Ring<Rationals> {
        let w = WeightMatrix::new(vec![w.to_vec()]).unwrap();
        Ring::new(
            Rationals,
            names.iter().map(|s| s.to_string()).collect(),
            1,
            OrderMatrix::weight_over_grevlex(&w).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn jacobian_columns() {
        let r = ring(["y", "x"], [1, 2]);
        let f = r.parse("y^2 - x").unwrap();
        let cols = extended_jacobian(&r, &[f.clone()]).unwrap();
        assert_eq!(cols.len(), 3);
        assert_eq!(cols[0].coords, vec![r.parse("2*y").unwrap()]);
        assert_eq!(cols[1].coords, vec![r.parse("-1").unwrap()]);
        assert_eq!(cols[2].coords, vec![f]);
        assert!(extended_jacobian(&r, &[]).is_err());
    }

    #[test]
    fn two_generators_give_square_blocks() {
        let r = ring(["y", "x"], [1, 2]);
        let gens = [r.parse("y^2 - x").unwrap(), r.parse("y*x").unwrap()];
        let cols = extended_jacobian(&r, &gens).unwrap();
        assert_eq!(cols.len(), 2 + 4);
        assert_eq!(cols[3].coords, vec![r.zero(), gens[0].clone()]);
        assert_eq!(cols[4].coords, vec![gens[1].clone(), r.zero()]);
    }

    #[test]
    fn cusp_over_the_rationals() {
        let r = ring(["y", "x"], [3, 2]);
        let f = r.parse("y^2 - 3/2*x^3 + 24/7*x^2 - 96/49*x").unwrap();
        let c = canonical_conductor(&r, &[f]).unwrap();
        assert_eq!(c.delta, r.parse("x - 8/7").unwrap());
    }

    #[test]
    fn non_reduced_is_degenerate() {
        let r = ring(["y", "x"], [1, 2]).with_field(PrimeField::new(13).unwrap());
        let f = r.parse("y^2").unwrap();
        assert!(matches!(canonical_conductor(&r, &[f]), Err(Error::Degenerate(_))));
    }
}
