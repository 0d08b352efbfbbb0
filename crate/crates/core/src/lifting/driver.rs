use num_bigint::BigInt;
use rayon::prelude::*;

use super::polys::{crt_poly, lift_poly, reduce_poly, ModPoly};
use super::runs::{require_compatible, PrimeData, PrimeRun, RunSignature};
use crate::closure::{ClosurePresentation, FractionSet, DEFAULT_MAX_ITER};
use crate::conductor::canonical_conductor;
use crate::error::{Error, Result};
use crate::groebner::{is_minimal_reduced_gb, normal_form};
use crate::polycore::{primes_from, Extension, Poly, PrimeField, Rationals, Ring};

/// Which primes to try.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeSchedule {
    Explicit(Vec<u64>),
    Ascending { start: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftConfig {
    pub primes: PrimeSchedule,
    /// Upper bound on the number of primes tried.
    pub max_primes: usize,
    pub max_iter: usize,
}

impl Default for LiftConfig {
    fn default() -> Self {
        LiftConfig {
            primes: PrimeSchedule::Ascending { start: 5 },
            max_primes: 25,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

impl LiftConfig {
    fn candidates(&self) -> Vec<u64> {
        match &self.primes {
            PrimeSchedule::Explicit(list) => list.iter().copied().take(self.max_primes).collect(),
            PrimeSchedule::Ascending { start } => primes_from(*start).take(self.max_primes).collect(),
        }
    }
}

/// Reconciled data modulo `N`, aligned with the per-prime presentations.
#[derive(Clone, Debug, PartialEq)]
pub struct Reconciled {
    pub delta: ModPoly,
    pub generators: Vec<ModPoly>,
    pub relations: Vec<ModPoly>,
    pub psi_y: ModPoly,
}

/// Reconciled and lifted data for a set of compatible primes.
#[derive(Clone, Debug)]
pub struct LiftState {
    pub primes: Vec<u64>,
    pub modulus: BigInt,
    pub reconciled: Reconciled,
    /// The rational reconstruction, unless some coefficient had none.
    pub candidate: Result<ClosurePresentation<Rationals>>,
}

impl LiftState {
    /// Reconcile compatible runs and lift the result to the rationals.
    pub fn from_runs(ext0: &Extension<Rationals>, runs: &[&PrimeRun]) -> Result<Self> {
        require_compatible(runs)?;
        let data: Vec<(&PrimeData, u64)> = runs.iter().map(|r| (r.data().unwrap(), r.q)).collect();
        let first = &data[0].0.presentation;
        let source = ext0.ring();
        let rbar: Ring<Rationals> = first.ring().with_field(Rationals);

        let across = |pick: &dyn Fn(&ClosurePresentation<PrimeField>) -> &Poly<PrimeField>,
                      ring: &Ring<Rationals>|
         -> Result<ModPoly> {
            let parts: Vec<(&Poly<PrimeField>, u64)> = data.iter().map(|(d, q)| (pick(&d.presentation), *q)).collect();
            crt_poly(ring, &parts)
        };
        let delta = across(&|p| p.fractions().delta(), source)?;
        let generators = (0..first.fractions().generators().len())
            .map(|k| across(&|p| &p.fractions().generators()[k], source))
            .collect::<Result<Vec<_>>>()?;
        let relations = (0..first.relations().len())
            .map(|k| across(&|p| &p.relations()[k], &rbar))
            .collect::<Result<Vec<_>>>()?;
        let psi_y = across(&|p| p.psi_y(), &rbar)?;
        let reconciled = Reconciled {
            delta,
            generators,
            relations,
            psi_y,
        };
        let modulus = reconciled.delta.modulus.clone();

        let candidate = (|| {
            let delta = lift_poly(source, &reconciled.delta)?;
            let gens = reconciled
                .generators
                .iter()
                .map(|g| lift_poly(source, g))
                .collect::<Result<Vec<_>>>()?;
            let relations = reconciled
                .relations
                .iter()
                .map(|g| lift_poly(&rbar, g))
                .collect::<Result<Vec<_>>>()?;
            let psi = lift_poly(&rbar, &reconciled.psi_y)?;
            let fractions = FractionSet::from_parts(source.clone(), delta, gens)?;
            Ok(ClosurePresentation::from_parts(
                rbar.clone(),
                first.weights().clone(),
                relations,
                psi,
                fractions,
            ))
        })();

        Ok(LiftState {
            primes: runs.iter().map(|r| r.q).collect(),
            modulus,
            reconciled,
            candidate,
        })
    }
}

/// The outcome of checking a lifted candidate.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    /// The relations form a minimal reduced Gröbner basis.
    pub gb_check: bool,
    /// Every relation of the input maps into the candidate ideal under `psi`.
    pub containment_check: bool,
    /// The lifted numerators satisfy the lifted relations and `psi`.
    pub numerator_check: bool,
    /// Whether the candidate reduces to each prime's data.
    pub per_prime_specialization: Vec<(u64, bool)>,
    pub accepted: bool,
    /// Nonzero normal forms of the images of the input relations.
    pub residuals: Vec<Poly<Rationals>>,
}

/// `psi(f)` for `f` over the source ring: `y -> psi(y)`, independent
/// variables to themselves.
pub fn psi_image(candidate: &ClosurePresentation<Rationals>, source: &Ring<Rationals>, f: &Poly<Rationals>) -> Result<Poly<Rationals>> {
    let rbar = candidate.ring();
    let j = rbar.ndep();
    let mut images = vec![candidate.psi_y().clone()];
    images.extend((1..source.nvars()).map(|v| rbar.var(j + v - 1)));
    source.substitute(f, rbar, &images)
}

/// Evaluate `p` at `ybar_j = g_j / Δ` and clear denominators by `Δ^top`.
fn cleared_value(
    candidate: &ClosurePresentation<Rationals>,
    ext0: &Extension<Rationals>,
    p: &Poly<Rationals>,
    top: u32,
) -> Result<Poly<Rationals>> {
    let rbar = candidate.ring();
    let src = ext0.ring();
    let j = rbar.ndep();
    let fr = candidate.fractions();
    let nums = fr.numerators();
    let mut images: Vec<Poly<Rationals>> = nums.iter().map(|g| (*g).clone()).collect();
    images.extend((1..src.nvars()).map(|v| src.var(v)));
    let mut acc = src.zero();
    for (m, c) in p.terms() {
        let deg = m.dependent_degree(j) as u32;
        if deg > top {
            return Err(Error::Input("relation exceeds the clearing degree".into()));
        }
        let term = rbar.term(m.clone(), c.clone());
        let value = rbar.substitute(&term, src, &images)?;
        acc = src.add(&acc, &src.mul(&value, &src.pow(fr.delta(), top - deg)));
    }
    Ok(normal_form(src, &acc, std::slice::from_ref(ext0.relation())))
}

fn numerators_consistent(candidate: &ClosurePresentation<Rationals>, ext0: &Extension<Rationals>) -> Result<bool> {
    let fr = candidate.fractions();
    if !fr.has_canonical_denominator() || fr.numerators().len() != candidate.ring().ndep() {
        return Ok(false);
    }
    for rel in candidate.relations() {
        let top = rel.lm().map_or(0, |m| m.dependent_degree(candidate.ring().ndep()) as u32);
        if !cleared_value(candidate, ext0, rel, top)?.is_zero() {
            return Ok(false);
        }
    }
    let src = ext0.ring();
    let psi = cleared_value(candidate, ext0, candidate.psi_y(), 1)?;
    let y_delta = normal_form(src, &src.mul(&src.var(0), fr.delta()), std::slice::from_ref(ext0.relation()));
    Ok(psi == y_delta)
}

/// Check a lifted candidate against the input relation.
pub fn verify_candidate(candidate: &ClosurePresentation<Rationals>, ext0: &Extension<Rationals>) -> Result<Certificate> {
    let rbar = candidate.ring();
    let gb_check = is_minimal_reduced_gb(rbar, candidate.relations());
    let image = psi_image(candidate, ext0.ring(), ext0.relation())?;
    let residual = normal_form(rbar, &image, candidate.relations());
    let containment_check = residual.is_zero();
    let numerator_check = numerators_consistent(candidate, ext0)?;
    Ok(Certificate {
        gb_check,
        containment_check,
        numerator_check,
        per_prime_specialization: Vec::new(),
        accepted: gb_check && containment_check && numerator_check,
        residuals: if containment_check { Vec::new() } else { vec![residual] },
    })
}

/// Whether `mu_q` of the candidate equals the data computed modulo `q`.
pub fn specializes_to(candidate: &ClosurePresentation<Rationals>, ext0: &Extension<Rationals>, run: &PrimeData, q: u64) -> bool {
    let Ok(field) = PrimeField::new(q) else {
        return false;
    };
    let src = ext0.ring();
    let src_q = src.with_field(field);
    let rbar = candidate.ring();
    let rbar_q = rbar.with_field(field);
    let p = &run.presentation;
    let same = |a: &Poly<Rationals>, from: &Ring<Rationals>, to: &Ring<PrimeField>, b: &Poly<PrimeField>| {
        reduce_poly(a, from, to).is_ok_and(|r| r == *b)
    };
    let fr = candidate.fractions();
    fr.generators().len() == p.fractions().generators().len()
        && same(fr.delta(), src, &src_q, p.fractions().delta())
        && fr
            .generators()
            .iter()
            .zip(p.fractions().generators())
            .all(|(a, b)| same(a, src, &src_q, b))
        && candidate.relations().len() == p.relations().len()
        && candidate
            .relations()
            .iter()
            .zip(p.relations())
            .all(|(a, b)| same(a, rbar, &rbar_q, b))
        && same(candidate.psi_y(), rbar, &rbar_q, p.psi_y())
}

/// Everything produced by a multi-modular run.
#[derive(Clone, Debug)]
pub struct Algorithm1Outcome {
    pub delta0: Poly<Rationals>,
    pub runs: Vec<PrimeRun>,
    /// The last reconciled state, accepted or not.
    pub state: Option<LiftState>,
    pub certificate: Option<Certificate>,
    pub log: Vec<String>,
}

impl Algorithm1Outcome {
    pub fn accepted(&self) -> bool {
        self.certificate.as_ref().is_some_and(|c| c.accepted)
    }

    pub fn presentation(&self) -> Option<&ClosurePresentation<Rationals>> {
        self.state.as_ref().and_then(|s| s.candidate.as_ref().ok())
    }
}

fn signature_text(sig: &RunSignature) -> String {
    let fmt = |v: &[Vec<u32>]| v.iter().map(|e| format!("{e:?}")).collect::<Vec<_>>().join(",");
    format!("gens[{}] rels[{}]", fmt(&sig.generators), fmt(&sig.relations))
}

/// Conductor over the rationals, closures at successive usable primes,
/// reconciliation of each compatible group, and verification after every
/// new prime until a candidate is accepted.
pub fn run_algorithm1(ext0: &Extension<Rationals>, config: &LiftConfig) -> Result<Algorithm1Outcome> {
    if config.max_primes == 0 {
        return Err(Error::Input("at least one prime is required".into()));
    }
    let src = ext0.ring();
    let delta0 = canonical_conductor(src, std::slice::from_ref(ext0.relation()))?.delta;
    let mut outcome = Algorithm1Outcome {
        delta0: delta0.clone(),
        runs: Vec::new(),
        state: None,
        certificate: None,
        log: vec![format!("delta0: {}", src.display(&delta0))],
    };
    let candidates = config.candidates();
    let batch = rayon::current_num_threads().max(1);
    let mut groups: Vec<(RunSignature, Vec<usize>)> = Vec::new();

    for chunk in candidates.chunks(batch) {
        let computed: Vec<PrimeRun> = chunk
            .par_iter()
            .map(|&q| PrimeRun::compute(q, ext0, &delta0, config.max_iter))
            .collect();
        for run in computed {
            let idx = outcome.runs.len();
            let q = run.q;
            let sig = match &run.outcome {
                Err(reason) => {
                    outcome.log.push(format!("prime {q}: skipped ({reason})"));
                    outcome.runs.push(run);
                    continue;
                }
                Ok(data) => data.signature(),
            };
            {
                let data = run.data().unwrap();
                let rq = data.presentation.fractions().ring();
                outcome.log.push(format!(
                    "prime {q}: usable, conductor {}, denominator {}, {}",
                    rq.display(&data.conductor),
                    rq.display(data.presentation.fractions().delta()),
                    signature_text(&sig)
                ));
            }
            outcome.runs.push(run);
            let members = match groups.iter_mut().find(|(s, _)| *s == sig) {
                Some((_, members)) => {
                    members.push(idx);
                    members.clone()
                }
                None => {
                    groups.push((sig, vec![idx]));
                    vec![idx]
                }
            };
            if groups.len() > 1 {
                outcome.log.push(format!(
                    "prime {q}: {} incompatible groups, lifting the group of size {}",
                    groups.len(),
                    members.len()
                ));
            }
            let group: Vec<&PrimeRun> = members.iter().map(|&i| &outcome.runs[i]).collect();
            let state = LiftState::from_runs(ext0, &group)?;
            let certificate = match &state.candidate {
                Err(e) => {
                    outcome.log.push(format!("N = {}: lift failed ({e})", state.modulus));
                    None
                }
                Ok(candidate) => {
                    let mut cert = verify_candidate(candidate, ext0)?;
                    cert.per_prime_specialization = group
                        .iter()
                        .map(|r| (r.q, specializes_to(candidate, ext0, r.data().unwrap(), r.q)))
                        .collect();
                    outcome.log.push(format!(
                        "N = {}: gb {}, containment {}, numerators {}, accepted {}",
                        state.modulus, cert.gb_check, cert.containment_check, cert.numerator_check, cert.accepted
                    ));
                    Some(cert)
                }
            };
            outcome.state = Some(state);
            outcome.certificate = certificate;
            if outcome.accepted() {
                return Ok(outcome);
            }
        }
    }
    outcome.log.push(format!(
        "no candidate accepted after {} primes",
        outcome.runs.len()
    ));
    Ok(outcome)
}
