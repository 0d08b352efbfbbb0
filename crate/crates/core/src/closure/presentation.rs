use super::dense::XPoly;
use super::{Context, FractionSet};
use crate::error::{Error, Result};
use crate::groebner::reduced_basis;
use crate::polycore::{Extension, Field, Monomial, OrderMatrix, Poly, PrimeField, Ring, WeightMatrix};

/// The closure as a strict affine algebra: variables `ybar_J, ..., ybar_1`
/// followed by the independent variables, quadratic relations, and the
/// image of `y`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosurePresentation<F: Field> {
    ring: Ring<F>,
    weights: WeightMatrix,
    relations: Vec<Poly<F>>,
    psi_y: Poly<F>,
    fractions: FractionSet<F>,
}

impl<F: Field> ClosurePresentation<F> {
    pub fn from_parts(
        ring: Ring<F>,
        weights: WeightMatrix,
        relations: Vec<Poly<F>>,
        psi_y: Poly<F>,
        fractions: FractionSet<F>,
    ) -> Self {
        ClosurePresentation {
            ring,
            weights,
            relations,
            psi_y,
            fractions,
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    /// Induced weights: one column per variable of [`ring`](Self::ring).
    pub fn weights(&self) -> &WeightMatrix {
        &self.weights
    }

    pub fn relations(&self) -> &[Poly<F>] {
        &self.relations
    }

    /// The image of `y`.
    pub fn psi_y(&self) -> &Poly<F> {
        &self.psi_y
    }

    pub fn fractions(&self) -> &FractionSet<F> {
        &self.fractions
    }

    /// Number of new variables `J`.
    pub fn nbar(&self) -> usize {
        self.ring.ndep()
    }

    /// Weight vectors of the new variables, `ybar_J` first.
    pub fn induced_weights(&self) -> Vec<Vec<u64>> {
        (0..self.nbar()).map(|v| self.weights.column(v)).collect()
    }
}

/// Names `ybar` (one new variable) or `ybar{J}, ..., ybar1`.
pub fn bar_names(count: usize) -> Vec<String> {
    if count == 1 {
        vec!["ybar".to_string()]
    } else {
        (1..=count).rev().map(|j| format!("ybar{j}")).collect()
    }
}

/// The ring of the presentation: new variables in the order of the
/// numerators, then the independent variables of `source`.
pub fn presentation_ring<F: Field>(
    source: &Ring<F>,
    source_weights: &WeightMatrix,
    induced: &[Vec<u64>],
) -> Result<(Ring<F>, WeightMatrix)> {
    let j = induced.len();
    let mut names = bar_names(j);
    names.extend(source.names()[source.ndep()..].iter().cloned());
    let mut columns = induced.to_vec();
    columns.extend((source.ndep()..source.nvars()).map(|v| source_weights.column(v)));
    let weights = WeightMatrix::from_columns(&columns)?;
    let order = OrderMatrix::grevlex_over_weight(j, &weights)?;
    Ok((Ring::new(source.field().clone(), names, j, order)?, weights))
}

/// Total degree of every term in the new variables is at most two, and a
/// quadratic leading term has only linear or constant trailing terms.
pub fn is_strict_shape<F: Field>(ring: &Ring<F>, relation: &Poly<F>) -> bool {
    let nd = ring.ndep();
    let Some(lm) = relation.lm() else {
        return true;
    };
    let lead = lm.dependent_degree(nd);
    let tail_max = relation.terms()[1..]
        .iter()
        .map(|(m, _)| m.dependent_degree(nd))
        .max()
        .unwrap_or(0);
    lead <= 2 && tail_max <= 2 && (lead < 2 || tail_max <= 1)
}

/// The leading term has the same weight as the heaviest trailing term.
pub fn is_weight_balanced<F: Field>(weights: &WeightMatrix, relation: &Poly<F>) -> bool {
    let Some(lm) = relation.lm() else {
        return true;
    };
    match relation.terms()[1..].iter().map(|(m, _)| weights.of_monomial(m)).max() {
        None => true,
        Some(tail) => tail == weights.of_monomial(lm),
    }
}

/// Build the presentation of a fixpoint set: for every pair `i <= j`,
/// `ybar_i ybar_j - sum c_k ybar_k - c_0` from
/// `NF(g_i g_j) = sum c_k Δ g_k`, and `psi(y)` from `y Δ = sum c_k g_k`.
pub fn induce_presentation(
    ext: &Extension<PrimeField>,
    set: &FractionSet<PrimeField>,
) -> Result<ClosurePresentation<PrimeField>> {
    if !set.has_canonical_denominator() {
        return Err(Error::Inconsistent(
            "the denominator is not among the generators".into(),
        ));
    }
    let induced = set.induced_weights(ext.weights())?;
    let (rbar, wbar) = presentation_ring(ext.ring(), ext.weights(), &induced)?;
    let j = induced.len();

    let cx = Context::new(ext)?;
    let alg = &cx.alg;
    let basis = cx.basis(set)?;
    let delta = cx.delta(set);
    let nums: Vec<_> = set.numerators().into_iter().map(|g| alg.from_poly(g)).collect();
    let mut var_of_pos: Vec<Option<usize>> = vec![None; alg.d];
    for (v, g) in nums.iter().enumerate() {
        var_of_pos[alg.lm(g).unwrap().0] = Some(v);
    }

    let xvar = j;
    let linear = |quotients: &[XPoly]| -> Vec<(Monomial, u64)> {
        let mut terms = Vec::new();
        for (pos, c) in quotients.iter().enumerate() {
            for (a, &coef) in c.iter().enumerate() {
                if coef == 0 {
                    continue;
                }
                let mut m = Monomial::var(rbar.nvars(), xvar, a as u32);
                if let Some(v) = var_of_pos[pos] {
                    m.set_exp(v, 1);
                }
                terms.push((m, coef));
            }
        }
        terms
    };

    let scaled = basis.scaled(alg, &delta);
    let field = rbar.field();
    let mut relations = Vec::new();
    for a in 0..j {
        for b in a..j {
            let product = alg.mul(&nums[a], &nums[b]);
            let (rem, quotients) = scaled.reduce_tracked(alg, &product);
            if !rem.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "the product of numerators {} and {} is not in the module",
                    a, b
                )));
            }
            let mut m = Monomial::one(rbar.nvars());
            m.set_exp(a, 1);
            m.set_exp(b, if a == b { 2 } else { 1 });
            let mut terms = vec![(m, field.one())];
            terms.extend(linear(&quotients).into_iter().map(|(m, c)| (m, field.neg(&c))));
            relations.push(rbar.from_terms(terms));
        }
    }

    let y_delta = alg.mul_x(&delta, &alg.y_power(1));
    let (rem, quotients) = basis.reduce_tracked(alg, &y_delta);
    if !rem.is_zero() {
        return Err(Error::Inconsistent("y is not in the module".into()));
    }
    let psi_y = rbar.from_terms(linear(&quotients));

    let relations = reduced_basis(&rbar, &relations).into_gens();
    Ok(ClosurePresentation {
        ring: rbar,
        weights: wbar,
        relations,
        psi_y,
        fractions: set.clone(),
    })
}
