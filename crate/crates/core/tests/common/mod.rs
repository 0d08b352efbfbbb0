//! Exhaustive check of one Qth-power step over tiny prime fields: enumerate
//! the quotient `U / ΔS`, keep the classes whose Frobenius image lands in
//! `Δ^(q-1) U`, and compare the module they generate with the step output.

use std::collections::HashSet;

use qthpower::closure::{qth_power_step, FractionSet};
use qthpower::groebner::{normal_form, ModuleBasis, ModuleVector};
use qthpower::polycore::{Extension, Monomial, OrderMatrix, Poly, PrimeField, Ring, WeightMatrix};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const MAX_ENUMERATION: usize = 6000;

pub fn random_extension(rng: &mut StdRng, q: u64) -> Extension<PrimeField> {
    let d = rng.gen_range(2..=3u64);
    let k = rng.gen_range(2..=5u64);
    let mut text = format!("y^{d} + {}*x^{k}", rng.gen_range(1..q));
    for i in 0..d {
        for a in 0..k {
            if i * k + a * d < d * k && rng.gen_bool(0.35) {
                let c = rng.gen_range(1..q);
                text.push_str(&format!(" + {c}*y^{i}*x^{a}"));
            }
        }
    }
    Extension::new(
        PrimeField::new(q).unwrap(),
        &["x"],
        "y",
        WeightMatrix::new(vec![vec![k, d]]).unwrap(),
        &text,
    )
    .unwrap()
}

pub fn random_delta(rng: &mut StdRng, ring: &Ring<PrimeField>, q: u64) -> Poly<PrimeField> {
    let deg = rng.gen_range(1..=4u32);
    let mut terms = vec![(Monomial::var(2, 1, deg), 1u64)];
    for a in 0..deg {
        terms.push((Monomial::var(2, 1, a), rng.gen_range(0..q)));
    }
    ring.from_terms(terms)
}

/// Coefficients of `y^0..y^(d-1)` as polynomials in `x` alone.
pub fn to_vector(pring: &Ring<PrimeField>, d: usize, g: &Poly<PrimeField>) -> ModuleVector<PrimeField> {
    let mut coords = vec![Vec::new(); d];
    for (m, c) in g.terms() {
        coords[m.exp(0) as usize].push((Monomial::new([m.exp(1)]), *c));
    }
    ModuleVector::new(coords.into_iter().map(|t| pring.from_terms(t)).collect())
}

fn x_degree(g: &Poly<PrimeField>) -> u32 {
    g.max_exp(1)
}

/// Returns `None` when the enumeration would be too large.
pub fn oracle_step(
    ext: &Extension<PrimeField>,
    pring: &Ring<PrimeField>,
    set: &FractionSet<PrimeField>,
) -> Option<ModuleBasis<PrimeField>> {
    let r = ext.ring();
    let field = r.field();
    let q = field.modulus();
    let d = ext.degree() as usize;
    let delta = set.delta();
    let ddeg = x_degree(delta);

    let mut domain = Vec::new();
    for g in set.generators() {
        let t = g.lm().unwrap().exp(1);
        for k in 0..ddeg.saturating_sub(t) {
            domain.push(r.mul(&r.monomial(Monomial::var(2, 1, k)), g));
        }
    }
    let size = (q as usize).checked_pow(domain.len() as u32)?;
    if size > MAX_ENUMERATION {
        return None;
    }

    let scale = r.pow(delta, (q - 1) as u32);
    let target_cols: Vec<_> = set
        .generators()
        .iter()
        .map(|g| to_vector(pring, d, &r.mul(&scale, g)))
        .collect();
    let target = ModuleBasis::new(pring, &target_cols).unwrap();

    let mut kernel: Vec<Vec<u64>> = Vec::new();
    let mut coeffs = vec![0u64; domain.len()];
    for _ in 0..size {
        let mut g = r.zero();
        for (c, e) in coeffs.iter().zip(&domain) {
            if *c != 0 {
                g = r.add(&g, &r.scale(c, e));
            }
        }
        let image = normal_form(r, &r.pow(&g, q as u32), std::slice::from_ref(ext.relation()));
        if target.contains(&to_vector(pring, d, &image)) {
            kernel.push(coeffs.clone());
        }
        for c in coeffs.iter_mut() {
            *c += 1;
            if *c < q {
                break;
            }
            *c = 0;
        }
    }
    let count = kernel.len();

    // extract an F_q-basis of the kernel by growing its span
    let mut span: HashSet<Vec<u64>> = HashSet::from([vec![0u64; domain.len()]]);
    let mut basis = Vec::new();
    for v in kernel {
        if span.contains(&v) {
            continue;
        }
        let old: Vec<Vec<u64>> = span.iter().cloned().collect();
        for s in old {
            for c in 1..q {
                let w: Vec<u64> = s.iter().zip(&v).map(|(a, b)| (a + c * b) % q).collect();
                span.insert(w);
            }
        }
        basis.push(v);
    }
    assert_eq!(span.len(), count, "the kernel is a vector space");

    let mut cols: Vec<_> = (0..d)
        .map(|i| to_vector(pring, d, &r.mul(delta, &r.monomial(Monomial::var(2, 0, i as u32)))))
        .collect();
    for v in basis {
        let mut g = r.zero();
        for (c, e) in v.iter().zip(&domain) {
            g = r.add(&g, &r.scale(c, e));
        }
        cols.push(to_vector(pring, d, &g));
    }
    Some(ModuleBasis::new(pring, &cols).unwrap())
}

/// Compare `qth_power_step` with the oracle on random instances until
/// `wanted` comparisons were made; returns `(checked, shrinking)` or the
/// first mismatch.
pub fn compare_steps(seed: u64, wanted: usize) -> Result<(usize, usize), String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checked = 0;
    let mut shrinking = 0;
    let mut attempts = 0;
    while checked < wanted {
        attempts += 1;
        if attempts >= 400 {
            return Err(format!("only {checked} small instances in {attempts} attempts"));
        }
        let q = if attempts % 2 == 0 { 2 } else { 3 };
        let ext = random_extension(&mut rng, q);
        let field = PrimeField::new(q).unwrap();
        let pring = Ring::new(field, vec!["x".into()], 0, OrderMatrix::grevlex(1)).unwrap();
        let delta = random_delta(&mut rng, ext.ring(), q);
        let d = ext.degree() as usize;
        let mut set = FractionSet::initial(&ext, &delta).unwrap();
        for _ in 0..2 {
            let Some(oracle) = oracle_step(&ext, &pring, &set) else {
                break;
            };
            let next = qth_power_step(&ext, &set).map_err(|e| e.to_string())?;
            let cols: Vec<_> = next.generators().iter().map(|g| to_vector(&pring, d, g)).collect();
            let ours = ModuleBasis::new(&pring, &cols).unwrap();
            if ours.columns() != oracle.columns() {
                return Err(format!(
                    "q = {q}, f = {}, delta = {}",
                    ext.ring().display(ext.relation()),
                    ext.ring().display(&delta)
                ));
            }
            checked += 1;
            if next == set {
                break;
            }
            shrinking += 1;
            set = next;
        }
    }
    Ok((checked, shrinking))
}
