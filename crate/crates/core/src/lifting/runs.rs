use std::fmt;

use super::arith::{divides_denominator, divides_numerator};
use super::polys::reduce_poly;
use crate::closure::{induce_presentation, minimize_denominator, qth_closure, ClosurePresentation};
use crate::conductor::canonical_conductor;
use crate::error::{Error, Result};
use crate::polycore::{Extension, Poly, PrimeField, Rationals, WeightMatrix};

/// Why a prime was not used.
#[derive(Clone, Debug, PartialEq)]
pub enum SkipReason {
    /// `q` divides a denominator of the relation or of `Δ^(0)`.
    Denominator,
    /// `q` divides a coefficient numerator of the relation.
    Numerator,
    /// The conductor modulo `q` differs from the image of `Δ^(0)`.
    Conductor { expected: String, found: String },
    /// The closure computation failed modulo `q`.
    Failed(String),
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::Denominator => write!(f, "divides a denominator"),
            SkipReason::Numerator => write!(f, "divides a coefficient numerator"),
            SkipReason::Conductor { expected, found } => {
                write!(f, "conductor {found} differs from the image {expected}")
            }
            SkipReason::Failed(msg) => write!(f, "closure failed: {msg}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Usability {
    Usable,
    Skipped(SkipReason),
}

/// The reduction of the problem modulo `q` with its conductor, if `q`
/// passes the usability filter.
pub(crate) fn usable_reduction(
    q: u64,
    ext0: &Extension<Rationals>,
    delta0: &Poly<Rationals>,
) -> std::result::Result<(Extension<PrimeField>, Poly<PrimeField>), SkipReason> {
    let coeffs = ext0.relation().terms().iter().map(|(_, c)| c);
    let delta_coeffs = delta0.terms().iter().map(|(_, c)| c);
    if coeffs.clone().chain(delta_coeffs).any(|c| divides_denominator(q, c)) {
        return Err(SkipReason::Denominator);
    }
    if coeffs.clone().any(|c| divides_numerator(q, c)) {
        return Err(SkipReason::Numerator);
    }
    let field = PrimeField::new(q).map_err(|e| SkipReason::Failed(e.to_string()))?;
    let ext = ext0.reduce_mod(&field).map_err(|e| SkipReason::Failed(e.to_string()))?;
    let ring = ext.ring();
    let expected = reduce_poly(delta0, ext0.ring(), ring).map_err(|e| SkipReason::Failed(e.to_string()))?;
    let found = match canonical_conductor(ring, std::slice::from_ref(ext.relation())) {
        Ok(c) => c.delta,
        Err(e) => return Err(SkipReason::Failed(e.to_string())),
    };
    if found != expected {
        return Err(SkipReason::Conductor {
            expected: ring.display(&expected),
            found: ring.display(&found),
        });
    }
    Ok((ext, found))
}

/// Checks (a) denominators, (b) coefficient numerators and (c) agreement
/// of the conductor modulo `q` with `mu_q(Δ^(0))`.
pub fn is_prime_usable(q: u64, ext0: &Extension<Rationals>, delta0: &Poly<Rationals>) -> Usability {
    match usable_reduction(q, ext0, delta0) {
        Ok(_) => Usability::Usable,
        Err(reason) => Usability::Skipped(reason),
    }
}

/// Conductor, closure with minimized denominator and presentation of an
/// extension over `Z_q`.
pub fn closure_mod_q(
    ext: &Extension<PrimeField>,
    max_iter: usize,
) -> Result<(Poly<PrimeField>, ClosurePresentation<PrimeField>)> {
    let delta = canonical_conductor(ext.ring(), std::slice::from_ref(ext.relation()))?.delta;
    let set = qth_closure(ext, &delta, max_iter)?;
    let set = minimize_denominator(ext, &set)?;
    Ok((delta, induce_presentation(ext, &set)?))
}

/// Leading data that must agree across primes before reconciling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunSignature {
    pub generators: Vec<Vec<u32>>,
    pub variables: Vec<String>,
    pub weights: WeightMatrix,
    pub relations: Vec<Vec<u32>>,
    pub psi: Option<Vec<u32>>,
}

#[derive(Clone, Debug)]
pub struct PrimeData {
    /// The canonical conductor `Δ^(q)`.
    pub conductor: Poly<PrimeField>,
    pub presentation: ClosurePresentation<PrimeField>,
}

impl PrimeData {
    pub fn signature(&self) -> RunSignature {
        let p = &self.presentation;
        RunSignature {
            generators: p.fractions().leading_monomials(),
            variables: p.ring().names().to_vec(),
            weights: p.weights().clone(),
            relations: p.relations().iter().map(|r| r.lm().unwrap().exps().to_vec()).collect(),
            psi: p.psi_y().lm().map(|m| m.exps().to_vec()),
        }
    }
}

/// The outcome for one prime.
#[derive(Clone, Debug)]
pub struct PrimeRun {
    pub q: u64,
    pub outcome: std::result::Result<PrimeData, SkipReason>,
}

impl PrimeRun {
    /// Filter `q`, then compute its closure.
    pub fn compute(q: u64, ext0: &Extension<Rationals>, delta0: &Poly<Rationals>, max_iter: usize) -> Self {
        let outcome = usable_reduction(q, ext0, delta0).and_then(|(ext, _)| {
            closure_mod_q(&ext, max_iter)
                .map(|(conductor, presentation)| PrimeData { conductor, presentation })
                .map_err(|e| SkipReason::Failed(e.to_string()))
        });
        PrimeRun { q, outcome }
    }

    /// Compute the closure modulo `q` without the usability filter.
    pub fn unchecked(q: u64, ext0: &Extension<Rationals>, max_iter: usize) -> Result<Self> {
        let ext = ext0.reduce_mod(&PrimeField::new(q)?)?;
        let (conductor, presentation) = closure_mod_q(&ext, max_iter)?;
        Ok(PrimeRun {
            q,
            outcome: Ok(PrimeData { conductor, presentation }),
        })
    }

    pub fn data(&self) -> Option<&PrimeData> {
        self.outcome.as_ref().ok()
    }

    pub fn usability(&self) -> Usability {
        match &self.outcome {
            Ok(_) => Usability::Usable,
            Err(r) => Usability::Skipped(r.clone()),
        }
    }
}

/// Whether all runs are usable and share their leading data.
pub fn compatibility_check(runs: &[&PrimeRun]) -> bool {
    let mut sigs = runs.iter().map(|r| r.data().map(PrimeData::signature));
    match sigs.next() {
        Some(Some(first)) => sigs.all(|s| s.as_ref() == Some(&first)),
        _ => false,
    }
}

pub(crate) fn require_compatible(runs: &[&PrimeRun]) -> Result<()> {
    if compatibility_check(runs) {
        Ok(())
    } else {
        Err(Error::Compatibility(format!(
            "runs at q = {:?} differ in their leading data",
            runs.iter().map(|r| r.q).collect::<Vec<_>>()
        )))
    }
}
