use std::fmt::Write;

use super::field::{Field, PrimeField, Rationals};
use super::order::OrderMatrix;
use super::poly::Poly;
use super::ring::Ring;
use super::weight::{dependent_degree_monic, validate_weight_function, WeightMatrix, WeightVerdict};
use crate::error::{Error, Result};

/// An integral extension `S = F[y; x_n..x_1] / <f>` with `f` monic in the
/// single dependent variable `y`, a weight function, and the induced
/// weight-over-grevlex order.
#[derive(Clone, Debug, PartialEq)]
pub struct Extension<F: Field> {
    ring: Ring<F>,
    weights: WeightMatrix,
    relation: Poly<F>,
    degree: u32,
}

impl<F: Field> Extension<F> {
    /// Build the ring for `depvar; indvars`, parse the relation and check
    /// the weight function.
    pub fn new(field: F, indvars: &[&str], depvar: &str, weights: WeightMatrix, relation: &str) -> Result<Self> {
        let mut names = vec![depvar.to_string()];
        names.extend(indvars.iter().map(|s| s.to_string()));
        if weights.nvars() != names.len() {
            return Err(Error::Dimension {
                expected: names.len(),
                got: weights.nvars(),
            });
        }
        let order = OrderMatrix::weight_over_grevlex(&weights)?;
        let ring = Ring::new(field, names, 1, order)?;
        let relation = ring.parse(relation)?;
        Self::from_parts(ring, weights, relation)
    }

    pub fn from_parts(ring: Ring<F>, weights: WeightMatrix, relation: Poly<F>) -> Result<Self> {
        if let WeightVerdict::Rejected { offending } = validate_weight_function(&ring, &relation, &weights)? {
            let mut list = String::new();
            for (i, m) in offending.iter().enumerate() {
                if i > 0 {
                    list.push_str(", ");
                }
                let _ = write!(list, "{}", ring.format_monomial(m));
            }
            return Err(Error::Input(format!(
                "the weights do not define a weight function for {}: maximal-weight monomials {{{list}}}",
                ring.display(&relation)
            )));
        }
        let degree = dependent_degree_monic(&ring, &relation)?;
        Ok(Extension {
            ring,
            weights,
            relation,
            degree,
        })
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn weights(&self) -> &WeightMatrix {
        &self.weights
    }

    pub fn relation(&self) -> &Poly<F> {
        &self.relation
    }

    /// Degree `d` of the relation in `y`; `S` is free of rank `d` over `P`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.field().characteristic()
    }
}

impl Extension<Rationals> {
    /// The coefficientwise image modulo `q`, when every denominator is a
    /// unit there. The weight function is not re-validated.
    pub fn reduce_mod(&self, q: &PrimeField) -> Result<Extension<PrimeField>> {
        let ring = self.ring.with_field(q.clone());
        let relation = self.ring.map_coefficients(&self.relation, &ring, |c| q.from_rational(c))?;
        let degree = dependent_degree_monic(&ring, &relation)?;
        Ok(Extension {
            ring,
            weights: self.weights.clone(),
            relation,
            degree,
        })
    }
}
