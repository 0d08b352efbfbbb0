//! The Qth-power algorithm in characteristic `q`: the fixpoint module of
//! fractions `g/Δ` integral over `P`, its canonical interreduced
//! generators, and the induced strict presentation of the closure.

mod dense;
mod presentation;

use dense::{nullspace, xdeg, xdivrem, xgcd, Algebra, Basis, Elem, Frobenius, XPoly};
use crate::error::{Error, Result};
use crate::polycore::{Extension, Field, Poly, PrimeField, Ring, WeightMatrix};

pub use presentation::{
    bar_names, induce_presentation, is_strict_shape, is_weight_balanced, presentation_ring, ClosurePresentation,
};

/// Default bound on the number of Qth-power steps.
pub const DEFAULT_MAX_ITER: usize = 64;

/// A `P`-module of numerators over the common denominator `Δ`: one
/// generator per leading position `y^j`, each monic, interreduced and
/// listed in descending order of leading monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionSet<F: Field> {
    ring: Ring<F>,
    delta: Poly<F>,
    gens: Vec<Poly<F>>,
}

impl<F: Field> FractionSet<F> {
    /// Assemble a set from its parts; the generators are sorted but not
    /// otherwise normalised.
    pub fn from_parts(ring: Ring<F>, delta: Poly<F>, mut gens: Vec<Poly<F>>) -> Result<Self> {
        if delta.is_zero() || !delta.is_independent(ring.ndep()) {
            return Err(Error::Input(format!(
                "the denominator {} must be a nonzero polynomial in the independent variables",
                ring.display(&delta)
            )));
        }
        if gens.iter().any(|g| g.is_zero()) {
            return Err(Error::Input("zero numerator".into()));
        }
        gens.sort_by(|a, b| ring.cmp(b.lm().unwrap(), a.lm().unwrap()));
        Ok(FractionSet { ring, delta, gens })
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn delta(&self) -> &Poly<F> {
        &self.delta
    }

    /// All module generators, including the one in position `y^0`.
    pub fn generators(&self) -> &[Poly<F>] {
        &self.gens
    }

    /// The generators `g_J, ..., g_1` whose leading monomial involves `y`.
    pub fn numerators(&self) -> Vec<&Poly<F>> {
        self.gens.iter().filter(|g| g.lm().unwrap().exp(0) > 0).collect()
    }

    /// Number of numerators `J`.
    pub fn len(&self) -> usize {
        self.numerators().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the generator in position `y^0` is `Δ` itself.
    pub fn has_canonical_denominator(&self) -> bool {
        self.gens
            .iter()
            .find(|g| g.lm().unwrap().exp(0) == 0)
            .is_some_and(|g| *g == self.delta)
    }

    /// `wt(g_j) - wt(Δ)` for each numerator, in the order of
    /// [`numerators`](Self::numerators).
    pub fn induced_weights(&self, weights: &WeightMatrix) -> Result<Vec<Vec<u64>>> {
        let base = weights.of_monomial(self.delta.lm().unwrap());
        self.numerators()
            .into_iter()
            .map(|g| {
                let w = weights.of_monomial(g.lm().unwrap());
                w.iter()
                    .zip(&base)
                    .map(|(a, b)| a.checked_sub(*b))
                    .collect::<Option<Vec<u64>>>()
                    .ok_or_else(|| {
                        Error::Inconsistent(format!(
                            "numerator {} has smaller weight than the denominator",
                            self.ring.display(g)
                        ))
                    })
            })
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|g| g.lm().unwrap().exps().to_vec()).collect()
    }
}

impl FractionSet<PrimeField> {
    /// `U_0 = S`: the numerators of `(1/Δ) S`, generated by `1, y, ..., y^(d-1)`.
    pub fn initial(ext: &Extension<PrimeField>, delta: &Poly<PrimeField>) -> Result<Self> {
        let ring = ext.ring();
        let gens = (0..ext.degree()).map(|i| ring.monomial(crate::polycore::Monomial::var(2, 0, i))).collect();
        FractionSet::from_parts(ring.clone(), ring.monic(delta), gens)
    }
}

struct Context {
    alg: Algebra,
    frob: Frobenius,
}

impl Context {
    fn new(ext: &Extension<PrimeField>) -> Result<Self> {
        let alg = Algebra::new(ext)?;
        let frob = Frobenius::new(&alg);
        Ok(Context { alg, frob })
    }

    fn delta(&self, set: &FractionSet<PrimeField>) -> XPoly {
        self.alg.poly_to_xpoly(&set.delta, 1)
    }

    fn basis(&self, set: &FractionSet<PrimeField>) -> Result<Basis> {
        let mut basis = Basis::empty(self.alg.d);
        for g in &set.gens {
            let e = self.alg.from_poly(g);
            let (i, a) = self.alg.lm(&e).ok_or_else(|| Error::Input("numerator vanishes in S".into()))?;
            if basis.slots[i].is_some() {
                return Err(Error::Input(format!(
                    "two numerators lead in position y^{i}; the generators must have distinct positions"
                )));
            }
            basis.slots[i] = Some(self.alg.monic(&e));
            basis.lead[i] = a;
        }
        if !basis.is_full() {
            return Err(Error::Input(format!(
                "expected one numerator per power of y below {}",
                self.alg.d
            )));
        }
        Ok(basis)
    }

    fn fraction_set(&self, ring: &Ring<PrimeField>, delta: &XPoly, basis: &Basis) -> FractionSet<PrimeField> {
        let gens = basis.elements().map(|e| self.alg.to_poly(ring, e)).collect();
        FractionSet::from_parts(ring.clone(), self.alg.xpoly_to_poly(ring, delta, 1), gens)
            .expect("nonzero denominator and numerators")
    }

    /// One step: `{ g in U : NF(g^q) in Δ^(q-1) U }`.
    fn step(&self, delta: &XPoly, u: &Basis) -> Basis {
        let alg = &self.alg;
        let field = &alg.field;
        let q = field.modulus();
        let ddeg = xdeg(delta).expect("nonzero denominator");
        let target = u.scaled(alg, &dense::xpow(field, delta, q - 1));

        // coordinates of the target quotient V: y^i x^a with a < lead
        let offsets: Vec<usize> = target
            .lead
            .iter()
            .scan(0, |acc, &l| {
                let o = *acc;
                *acc += l;
                Some(o)
            })
            .collect();
        let vdim: usize = target.lead.iter().sum();
        let to_vector = |e: &Elem| -> Vec<u64> {
            let mut v = vec![0u64; vdim];
            for (i, p) in e.c.iter().enumerate() {
                for (a, &c) in p.iter().enumerate() {
                    v[offsets[i] + a] = c;
                }
            }
            v
        };

        let xq: XPoly = {
            let mut p = vec![0; q as usize + 1];
            p[q as usize] = 1;
            p
        };
        let mut columns = Vec::new();
        let mut domain = Vec::new();
        for (j, g) in u.slots.iter().enumerate() {
            let g = g.as_ref().expect("full basis");
            let count = ddeg.saturating_sub(u.lead[j]);
            let mut image = target.reduce(alg, &self.frob.apply(alg, g));
            for k in 0..count {
                if k > 0 {
                    image = target.reduce(alg, &alg.mul_x(&xq, &image));
                }
                columns.push(to_vector(&image));
                domain.push((j, k));
            }
        }

        let mut next = Basis::empty(alg.d);
        for i in 0..alg.d {
            next.insert(alg, alg.mul_x(delta, &alg.y_power(i)));
        }
        for v in nullspace(field, &columns, vdim) {
            let mut e = Elem::zero(alg.d);
            for (&c, &(j, k)) in v.iter().zip(&domain) {
                if c != 0 {
                    alg.axpy(&mut e, c, k, u.slots[j].as_ref().unwrap());
                }
            }
            next.insert(alg, e);
        }
        next.interreduce(alg);
        next
    }
}

/// `NF(g^q)` modulo the relation, by Frobenius expansion.
pub fn frobenius_nf(ext: &Extension<PrimeField>, g: &Poly<PrimeField>, q: u64) -> Result<Poly<PrimeField>> {
    if q != ext.characteristic() {
        return Err(Error::Characteristic {
            ring: ext.characteristic(),
            requested: q,
        });
    }
    let cx = Context::new(ext)?;
    let img = cx.frob.apply(&cx.alg, &cx.alg.from_poly(g));
    Ok(cx.alg.to_poly(ext.ring(), &img))
}

/// Reduce `h` by the generators of `scale * U` using only multiples by
/// independent variables. Returns the remainder and the coefficients `c_j`
/// (aligned with [`FractionSet::generators`]) with
/// `h = remainder + sum c_j * scale * g_j`.
pub fn module_reduce(
    ext: &Extension<PrimeField>,
    h: &Poly<PrimeField>,
    set: &FractionSet<PrimeField>,
    scale: &Poly<PrimeField>,
) -> Result<(Poly<PrimeField>, Vec<Poly<PrimeField>>)> {
    let cx = Context::new(ext)?;
    let alg = &cx.alg;
    let s = alg.poly_to_xpoly(&ext.ring().monic(scale), 1);
    if s.is_empty() || !scale.is_independent(1) {
        return Err(Error::Input("the scale must be a nonzero polynomial in the independent variable".into()));
    }
    let basis = cx.basis(set)?;
    let (rem, quotients) = basis.scaled(alg, &s).reduce_tracked(alg, &alg.from_poly(h));
    let inv = alg.field.inv(scale.lc().unwrap())?;
    let ring = ext.ring();
    let coeffs = set
        .gens
        .iter()
        .map(|g| {
            let (i, _) = alg.lm(&alg.from_poly(g)).unwrap();
            let c = alg.xpoly_to_poly(ring, &quotients[i], 1);
            ring.scale(&inv, &c)
        })
        .collect();
    Ok((alg.to_poly(ring, &rem), coeffs))
}

/// One Qth-power step `U_i -> U_(i+1)`.
pub fn qth_power_step(ext: &Extension<PrimeField>, set: &FractionSet<PrimeField>) -> Result<FractionSet<PrimeField>> {
    let cx = Context::new(ext)?;
    let delta = cx.delta(set);
    let next = cx.step(&delta, &cx.basis(set)?);
    Ok(cx.fraction_set(ext.ring(), &delta, &next))
}

/// Iterate Qth-power steps from `U_0 = S` until the generators repeat.
pub fn qth_closure(
    ext: &Extension<PrimeField>,
    delta: &Poly<PrimeField>,
    max_iter: usize,
) -> Result<FractionSet<PrimeField>> {
    let initial = FractionSet::initial(ext, delta)?;
    let cx = Context::new(ext)?;
    let delta = cx.delta(&initial);
    let mut current = cx.basis(&initial)?;
    for _ in 0..max_iter {
        let next = cx.step(&delta, &current);
        if next == current {
            let set = cx.fraction_set(ext.ring(), &delta, &next);
            if !set.has_canonical_denominator() {
                return Err(Error::Inconsistent(
                    "the fixpoint module has no generator equal to the denominator".into(),
                ));
            }
            return Ok(set);
        }
        current = next;
    }
    Err(Error::NonTermination(max_iter))
}

/// Divide `Δ` and every numerator by the monic gcd of `Δ` and the
/// `P`-contents of the numerators, then re-reduce.
pub fn minimize_denominator(
    ext: &Extension<PrimeField>,
    set: &FractionSet<PrimeField>,
) -> Result<FractionSet<PrimeField>> {
    let cx = Context::new(ext)?;
    let alg = &cx.alg;
    let field = &alg.field;
    let delta = cx.delta(set);
    let basis = cx.basis(set)?;
    let mut c = delta.clone();
    for g in basis.elements() {
        for p in &g.c {
            c = xgcd(field, &c, p);
        }
    }
    if c.len() <= 1 {
        return Ok(set.clone());
    }
    let divide = |p: &XPoly| -> XPoly {
        let (quot, rem) = xdivrem(field, p, &c);
        debug_assert!(rem.is_empty());
        quot
    };
    let reduced_delta = divide(&delta);
    let mut next = Basis::empty(alg.d);
    for g in basis.elements() {
        next.insert(alg, Elem { c: g.c.iter().map(divide).collect() });
    }
    next.interreduce(alg);
    Ok(cx.fraction_set(ext.ring(), &reduced_delta, &next))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conductor::canonical_conductor;

    fn ext(q: u64, rel: &str, w: [u64; 2]) -> Extension<PrimeField> {
        Extension::new(
            PrimeField::new(q).unwrap(),
            &["x"],
            "y",
            WeightMatrix::new(vec![w.to_vec()]).unwrap(),
            rel,
        )
        .unwrap()
    }

    fn closure(e: &Extension<PrimeField>) -> FractionSet<PrimeField> {
        let delta = canonical_conductor(e.ring(), &[e.relation().clone()]).unwrap().delta;
        qth_closure(e, &delta, DEFAULT_MAX_ITER).unwrap()
    }

    #[test]
    fn cusp_mod_five() {
        let e = ext(5, "y^2 - 3/2*x^3 + 24/7*x^2 - 96/49*x", [3, 2]);
        let set = closure(&e);
        let r = e.ring();
        assert_eq!(set.delta(), &r.parse("x + 1").unwrap());
        assert_eq!(set.numerators(), vec![&r.parse("y").unwrap()]);
        assert!(set.has_canonical_denominator());
    }

    #[test]
    fn weighted_cubic_mod_seven() {
        let e = ext(7, "y^3 + x^7 + 8*y*x", [7, 3]);
        let set = closure(&e);
        let w = e.weights();
        let weights = set.induced_weights(w).unwrap();
        assert_eq!(weights, vec![vec![11], vec![7]]);
    }

    #[test]
    fn closed_input_is_a_fixpoint() {
        let e = ext(5, "y^2 - x", [1, 2]);
        let set = closure(&e);
        assert_eq!(set.delta(), &e.ring().one());
        assert_eq!(set.len(), 1);
        assert_eq!(qth_power_step(&e, &set).unwrap(), set);
    }

    #[test]
    fn frobenius_checks_characteristic() {
        let e = ext(3, "y^3 + x^7 + 8*y*x", [7, 3]);
        let y = e.ring().parse("y").unwrap();
        assert!(matches!(frobenius_nf(&e, &y, 5), Err(Error::Characteristic { .. })));
        assert_eq!(frobenius_nf(&e, &y, 3).unwrap(), e.ring().parse("-x^7 + y*x").unwrap());
        let x = e.ring().parse("x").unwrap();
        assert_eq!(frobenius_nf(&e, &x, 3).unwrap(), e.ring().parse("x^3").unwrap());
        assert_eq!(frobenius_nf(&e, &e.ring().one(), 3).unwrap(), e.ring().one());
    }

    #[test]
    fn module_reduce_cases() {
        let e = ext(7, "y^3 + x^7 + 8*y*x", [7, 3]);
        let set = closure(&e);
        let r = e.ring();
        let (rem, comb) = module_reduce(&e, &r.zero(), &set, set.delta()).unwrap();
        assert!(rem.is_zero() && comb.iter().all(|c| c.is_zero()));
        let g = &set.generators()[1];
        let h = r.mul(g, set.delta());
        let (rem, comb) = module_reduce(&e, &h, &set, set.delta()).unwrap();
        assert!(rem.is_zero());
        assert_eq!(comb[1], r.one());
        assert!(comb[0].is_zero() && comb[2].is_zero());
    }

    #[test]
    fn module_reduce_leaves_unreachable_terms() {
        let e = ext(5, "y^2 - x^3", [3, 2]);
        let r = e.ring();
        let set = FractionSet::from_parts(r.clone(), r.one(), vec![r.parse("y*x").unwrap(), r.one()]).unwrap();
        let (rem, _) = module_reduce(&e, &r.parse("y").unwrap(), &set, &r.one()).unwrap();
        assert_eq!(rem, r.parse("y").unwrap());
    }
}
