use std::fmt;
use std::hash::{Hash, Hasher};

use super::field::Field;
use super::monomial::Monomial;

/// A sparse polynomial: nonzero terms, strictly descending under the order
/// of the ring that built it. The zero polynomial has no terms.
///
/// A polynomial does not know its ring; operations that need the order or
/// the field go through [`Ring`](super::Ring).
pub struct Poly<F: Field> {
    pub(crate) terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    /// Wrap terms that are already sorted, combined and nonzero.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, F::Elem)>) -> Self {
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lc(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn lt(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }

    /// Whether every monomial avoids the first `ndep` variables.
    pub fn is_independent(&self, ndep: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.is_independent(ndep))
    }

    pub fn max_exp(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }
}

impl<F: Field> Clone for Poly<F> {
    fn clone(&self) -> Self {
        Poly {
            terms: self.terms.clone(),
        }
    }
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> Hash for Poly<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Poly::zero()
    }
}
