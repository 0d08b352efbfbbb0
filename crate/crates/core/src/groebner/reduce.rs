use crate::polycore::{Field, Monomial, Poly, Ring};

/// Fully reduce `f` by `gens`.
///
/// Terms are visited from the top down; each reducible term is cancelled
/// with the first generator (in list order) whose leading monomial divides
/// it. Zero generators are ignored.
pub fn normal_form<F: Field>(ring: &Ring<F>, f: &Poly<F>, gens: &[Poly<F>]) -> Poly<F> {
    let leads: Vec<(&Monomial, &F::Elem, &Poly<F>)> = gens
        .iter()
        .filter_map(|g| g.lt().map(|(m, c)| (m, c, g)))
        .collect();
    if leads.is_empty() {
        return f.clone();
    }
    let field = ring.field();
    let mut rem = Vec::new();
    let mut p = f.clone().into_terms();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        match leads.iter().find(|(lm, _, _)| lm.divides(m)) {
            Some((lm, lc, g)) => {
                let q = m.div(lm).expect("divisible");
                let coef = field.div(c, lc).expect("leading coefficient is a unit");
                p = ring.sub_mul_slice(&p[start..], &coef, &q, g).into_terms();
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    ring.from_terms(rem)
}

/// Division of `f` by `gens` returning quotients and remainder, with
/// `f = sum(q_i * g_i) + r`.
pub fn divide<F: Field>(ring: &Ring<F>, f: &Poly<F>, gens: &[Poly<F>]) -> (Vec<Poly<F>>, Poly<F>) {
    let field = ring.field();
    let mut quotients: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); gens.len()];
    let mut rem = Vec::new();
    let mut p = f.clone().into_terms();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        let hit = gens
            .iter()
            .enumerate()
            .find(|(_, g)| g.lm().is_some_and(|lm| lm.divides(m)));
        match hit {
            Some((i, g)) => {
                let q = m.div(g.lm().unwrap()).unwrap();
                let coef = field.div(c, g.lc().unwrap()).expect("unit");
                p = ring.sub_mul_slice(&p[start..], &coef, &q, g).into_terms();
                quotients[i].push((q, coef));
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    (
        quotients.into_iter().map(|t| ring.from_terms(t)).collect(),
        ring.from_terms(rem),
    )
}

/// `f / g` when the division is exact.
pub fn exact_quotient<F: Field>(ring: &Ring<F>, f: &Poly<F>, g: &Poly<F>) -> Option<Poly<F>> {
    let (q, r) = divide(ring, f, std::slice::from_ref(g));
    r.is_zero().then(|| q.into_iter().next().unwrap())
}

/// The S-polynomial `lcm/LT(f) * f - lcm/LT(g) * g`.
pub fn spoly<F: Field>(ring: &Ring<F>, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    let (mf, cf) = f.lt().expect("nonzero");
    let (mg, cg) = g.lt().expect("nonzero");
    let l = mf.lcm(mg);
    let field = ring.field();
    let a = ring.mul_term(f, &field.inv(cf).expect("unit"), &l.div(mf).unwrap());
    let ig = field.inv(cg).expect("unit");
    ring.sub_mul_term(&a, &ig, &l.div(mg).unwrap(), g)
}
