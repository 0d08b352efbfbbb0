use std::cmp::Ordering;
use std::collections::HashSet;
use std::ops::Range;

use super::reduce::{normal_form, spoly};
use crate::polycore::{Field, Monomial, Poly, Ring};

/// A Gröbner basis together with the ring (and hence the order) it is a
/// basis for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    gens: Vec<Poly<F>>,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Poly<F>> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Minimal and reduced: monic, interreduced, sorted descending by LM.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        normal_form(&self.ring, f, &self.gens)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Wrap generators that the caller vouches for.
    pub fn from_trusted(ring: Ring<F>, gens: Vec<Poly<F>>) -> Self {
        GroebnerBasis {
            ring,
            gens,
            reduced: false,
        }
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().filter_map(|g| g.lm().cloned()).collect()
    }
}

/// A Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<F: Field>(ring: &Ring<F>, gens: &[Poly<F>]) -> GroebnerBasis<F> {
    buchberger_impl(ring, gens, None)
}

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime and chain criteria.
///
/// When `positions` is given, those variables are module basis vectors:
/// every input is linear in them and pairs in different positions are
/// never formed.
pub(crate) fn buchberger_impl<F: Field>(
    ring: &Ring<F>,
    gens: &[Poly<F>],
    positions: Option<Range<usize>>,
) -> GroebnerBasis<F> {
    let mut basis: Vec<Poly<F>> = Vec::new();
    for g in gens {
        let h = normal_form(ring, g, &basis);
        if !h.is_zero() {
            basis.push(ring.monic(&h));
        }
    }
    let position_of = |m: &Monomial| -> Option<usize> {
        positions
            .as_ref()
            .and_then(|r| r.clone().find(|&v| m.exp(v) > 0))
    };
    let mut pending: Vec<(usize, usize, Monomial)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let add_pairs = |basis: &Vec<Poly<F>>, k: usize, pending: &mut Vec<_>, set: &mut HashSet<_>| {
        let mk = basis[k].lm().unwrap();
        for i in 0..k {
            let mi = basis[i].lm().unwrap();
            if positions.is_some() && position_of(mi) != position_of(mk) {
                continue;
            }
            pending.push((i, k, mi.lcm(mk)));
            set.insert((i, k));
        }
    };
    for k in 0..basis.len() {
        add_pairs(&basis, k, &mut pending, &mut pending_set);
    }
    while !pending.is_empty() {
        let best = (0..pending.len())
            .min_by(|&a, &b| match ring.cmp(&pending[a].2, &pending[b].2) {
                Ordering::Equal => (pending[a].1, pending[a].0).cmp(&(pending[b].1, pending[b].0)),
                o => o,
            })
            .unwrap();
        let (i, j, lcm) = pending.swap_remove(best);
        pending_set.remove(&(i, j));
        let (mi, mj) = (basis[i].lm().unwrap(), basis[j].lm().unwrap());
        if mi.is_coprime(mj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().unwrap().divides(&lcm)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spoly(ring, &basis[i], &basis[j]);
        let h = normal_form(ring, &s, &basis);
        if !h.is_zero() {
            basis.push(ring.monic(&h));
            let k = basis.len() - 1;
            add_pairs(&basis, k, &mut pending, &mut pending_set);
        }
    }
    GroebnerBasis {
        ring: ring.clone(),
        gens: basis,
        reduced: false,
    }
}

/// The unique minimal reduced Gröbner basis of the ideal of `gb`, sorted
/// descending by leading monomial.
pub fn minimal_reduced<F: Field>(gb: &GroebnerBasis<F>) -> GroebnerBasis<F> {
    let ring = &gb.ring;
    let mut sorted: Vec<&Poly<F>> = gb.gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by(|a, b| ring.cmp(a.lm().unwrap(), b.lm().unwrap()));
    let mut minimal: Vec<Poly<F>> = Vec::new();
    for g in sorted {
        let lm = g.lm().unwrap();
        if !minimal.iter().any(|h| h.lm().unwrap().divides(lm)) {
            minimal.push(ring.monic(g));
        }
    }
    let mut reduced: Vec<Poly<F>> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly<F>> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, h)| h.clone())
                .collect();
            let g = &minimal[i];
            let lead = ring.from_terms(vec![g.lt().unwrap().clone()]);
            let tail = ring.sub(g, &lead);
            ring.add(&lead, &normal_form(ring, &tail, &others))
        })
        .collect();
    reduced.sort_by(|a, b| ring.cmp(b.lm().unwrap(), a.lm().unwrap()));
    GroebnerBasis {
        ring: ring.clone(),
        gens: reduced,
        reduced: true,
    }
}

/// Buchberger followed by minimal reduction.
pub fn reduced_basis<F: Field>(ring: &Ring<F>, gens: &[Poly<F>]) -> GroebnerBasis<F> {
    minimal_reduced(&buchberger(ring, gens))
}

/// Whether every S-polynomial of `gens` reduces to zero.
pub fn is_groebner_basis<F: Field>(ring: &Ring<F>, gens: &[Poly<F>]) -> bool {
    if gens.iter().any(|g| g.is_zero()) {
        return false;
    }
    for j in 0..gens.len() {
        for i in 0..j {
            let (mi, mj) = (gens[i].lm().unwrap(), gens[j].lm().unwrap());
            if mi.is_coprime(mj) {
                continue;
            }
            if !normal_form(ring, &spoly(ring, &gens[i], &gens[j]), gens).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Monic, no monomial of any generator divisible by the leading monomial
/// of another, and a Gröbner basis.
pub fn is_minimal_reduced_gb<F: Field>(ring: &Ring<F>, gens: &[Poly<F>]) -> bool {
    if gens.iter().any(|g| !ring.is_monic(g)) {
        return false;
    }
    for (i, g) in gens.iter().enumerate() {
        for (k, h) in gens.iter().enumerate() {
            let lm = h.lm().unwrap();
            if i != k && g.monomials().any(|m| lm.divides(m)) {
                return false;
            }
        }
    }
    is_groebner_basis(ring, gens)
}

pub fn ideal_contains<F: Field>(gb: &GroebnerBasis<F>, f: &Poly<F>) -> bool {
    gb.contains(f)
}
