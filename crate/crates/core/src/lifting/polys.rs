use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::arith::{crt, mod_n, rat_recon};
use crate::error::{Error, Result};
use crate::polycore::{Field, Monomial, Poly, PrimeField, Rationals, Ring};

/// A polynomial with balanced integer coefficients modulo `N`, terms in
/// descending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    pub terms: Vec<(Monomial, BigInt)>,
    pub modulus: BigInt,
}

impl ModPoly {
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// The coefficients as integers, for display in `ring`.
    pub fn to_integer_poly(&self, ring: &Ring<Rationals>) -> Poly<Rationals> {
        ring.from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone())))
                .collect(),
        )
    }

    pub fn display(&self, ring: &Ring<Rationals>) -> String {
        ring.display(&self.to_integer_poly(ring))
    }
}

/// Coefficientwise Chinese remaindering over the union of supports, with
/// missing coefficients read as zero. All inputs must share a leading
/// monomial; `ring` supplies the term order.
pub fn crt_poly<F: Field>(ring: &Ring<F>, parts: &[(&Poly<PrimeField>, u64)]) -> Result<ModPoly> {
    let Some(((first, _), rest)) = parts.split_first() else {
        return Err(Error::Input("no polynomials to reconcile".into()));
    };
    for (p, q) in rest {
        if p.lm() != first.lm() {
            return Err(Error::Compatibility(format!(
                "leading monomials differ at q = {q}: {:?} vs {:?}",
                p.lm().map(|m| m.exps().to_vec()),
                first.lm().map(|m| m.exps().to_vec())
            )));
        }
    }
    let mut support: BTreeMap<Vec<u32>, Monomial> = BTreeMap::new();
    for (p, _) in parts {
        for (m, _) in p.terms() {
            support.entry(m.exps().to_vec()).or_insert_with(|| m.clone());
        }
    }
    let mut terms = Vec::new();
    let modulus: BigInt = parts.iter().map(|(_, q)| BigInt::from(*q)).product();
    for m in support.into_values() {
        let values: Vec<(BigInt, u64)> = parts
            .iter()
            .map(|(p, q)| (BigInt::from(p.coefficient(&m).copied().unwrap_or(0)), *q))
            .collect();
        let (c, _) = crt(&values)?;
        if !c.is_zero() {
            terms.push((m, c));
        }
    }
    terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
    Ok(ModPoly { terms, modulus })
}

/// Rational reconstruction of every coefficient.
pub fn lift_poly(ring: &Ring<Rationals>, p: &ModPoly) -> Result<Poly<Rationals>> {
    let terms = p
        .terms
        .iter()
        .map(|(m, c)| Ok((m.clone(), rat_recon(c, &p.modulus)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ring.from_terms(terms))
}

/// `mu_q` applied coefficientwise.
pub fn reduce_poly(f: &Poly<Rationals>, source: &Ring<Rationals>, target: &Ring<PrimeField>) -> Result<Poly<PrimeField>> {
    let field = *target.field();
    source.map_coefficients(f, target, |c| field.from_rational(c))
}

/// `mu_N` applied coefficientwise.
pub fn reduce_poly_mod_n(f: &Poly<Rationals>, n: &BigInt) -> Result<ModPoly> {
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        let r = mod_n(c, n)?;
        if !r.is_zero() {
            terms.push((m.clone(), r));
        }
    }
    Ok(ModPoly {
        terms,
        modulus: n.clone(),
    })
}
