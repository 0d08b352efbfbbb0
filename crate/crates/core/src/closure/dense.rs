//! Dense arithmetic in `S = F_q[x][y] / <f>` for one independent variable:
//! an element is the vector of its `y^i` coefficients, `i < d`, each a
//! dense polynomial in `x`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polycore::{Extension, Field, Monomial, Poly, PrimeField, Ring};

/// Dense polynomial in `x`, index = degree, no trailing zeros.
pub(crate) type XPoly = Vec<u64>;

pub(crate) fn trim(p: &mut XPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub(crate) fn xdeg(p: &XPoly) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn xmul(field: &PrimeField, a: &XPoly, b: &XPoly) -> XPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let q = field.modulus() as u128;
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai as u128 * bj as u128) % q;
        }
    }
    let mut p: XPoly = out.into_iter().map(|v| v as u64).collect();
    trim(&mut p);
    p
}

pub(crate) fn xpow(field: &PrimeField, a: &XPoly, mut e: u64) -> XPoly {
    let mut acc = vec![1u64];
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = xmul(field, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = xmul(field, &base, &base);
        }
    }
    acc
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn xdivrem(field: &PrimeField, a: &XPoly, b: &XPoly) -> (XPoly, XPoly) {
    let db = b.len() - 1;
    let inv = field.inv(&b[db]).expect("nonzero leading coefficient");
    let mut r = a.clone();
    let mut quot = vec![0u64; a.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = field.mul(r.last().unwrap(), &inv);
        quot[k] = c;
        xaxpy(field, &mut r, field.neg(&c), k, b);
    }
    trim(&mut quot);
    (quot, r)
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn xgcd(field: &PrimeField, a: &XPoly, b: &XPoly) -> XPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = xdivrem(field, &a, &b);
        a = std::mem::replace(&mut b, r);
    }
    if let Some(&lc) = a.last() {
        let inv = field.inv(&lc).unwrap();
        a.iter_mut().for_each(|c| *c = field.mul(c, &inv));
    }
    a
}

/// `dst += c * x^shift * src`.
fn xaxpy(field: &PrimeField, dst: &mut XPoly, c: u64, shift: usize, src: &XPoly) {
    if c == 0 || src.is_empty() {
        return;
    }
    if dst.len() < src.len() + shift {
        dst.resize(src.len() + shift, 0);
    }
    for (k, &s) in src.iter().enumerate() {
        if s != 0 {
            let t = field.mul(&c, &s);
            dst[k + shift] = field.add(&dst[k + shift], &t);
        }
    }
    trim(dst);
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Elem {
    pub c: Vec<XPoly>,
}

impl Elem {
    pub fn zero(d: usize) -> Self {
        Elem { c: vec![Vec::new(); d] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|p| p.is_empty())
    }
}

/// The algebra `S` with its term order on `y^i x^a`.
#[derive(Clone, Debug)]
pub(crate) struct Algebra {
    pub field: PrimeField,
    pub d: usize,
    /// `y^d = sum tail[i] y^i` in `S`.
    tail: Vec<XPoly>,
    rows: Vec<[i64; 2]>,
}

impl Algebra {
    pub fn new(ext: &Extension<PrimeField>) -> Result<Self> {
        let ring = ext.ring();
        if ring.nvars() != 2 {
            return Err(Error::Unsupported(format!(
                "the qth-power iteration needs exactly one independent variable, found {}",
                ring.nvars() - 1
            )));
        }
        let field = ring.field().clone();
        let d = ext.degree() as usize;
        let mut tail = vec![Vec::new(); d];
        for (m, c) in ext.relation().terms() {
            let (i, a) = (m.exp(0) as usize, m.exp(1) as usize);
            if i == d {
                continue;
            }
            let p: &mut XPoly = &mut tail[i];
            if p.len() <= a {
                p.resize(a + 1, 0);
            }
            p[a] = field.neg(c);
        }
        tail.iter_mut().for_each(trim);
        let rows = ring.order().rows().iter().map(|r| [r[0], r[1]]).collect();
        Ok(Algebra { field, d, tail, rows })
    }

    /// Compare `y^i x^a` with `y^j x^b`.
    pub fn cmp_term(&self, (i, a): (usize, usize), (j, b): (usize, usize)) -> Ordering {
        let (di, da) = (i as i64 - j as i64, a as i64 - b as i64);
        for r in &self.rows {
            match (r[0] * di + r[1] * da).cmp(&0) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Leading term `(position, degree)`.
    pub fn lm(&self, e: &Elem) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (i, p) in e.c.iter().enumerate() {
            if let Some(a) = xdeg(p) {
                if best.map_or(true, |b| self.cmp_term((i, a), b) == Ordering::Greater) {
                    best = Some((i, a));
                }
            }
        }
        best
    }

    pub fn lc(&self, e: &Elem) -> Option<u64> {
        self.lm(e).map(|(i, a)| e.c[i][a])
    }

    pub fn monic(&self, e: &Elem) -> Elem {
        match self.lc(e) {
            None | Some(1) => e.clone(),
            Some(c) => self.scale(self.field.inv(&c).expect("nonzero"), e),
        }
    }

    pub fn scale(&self, c: u64, e: &Elem) -> Elem {
        let mut out = Elem::zero(self.d);
        for (i, p) in e.c.iter().enumerate() {
            xaxpy(&self.field, &mut out.c[i], c, 0, p);
        }
        out
    }

    /// `e += c * x^shift * g`.
    pub fn axpy(&self, e: &mut Elem, c: u64, shift: usize, g: &Elem) {
        for (dst, src) in e.c.iter_mut().zip(&g.c) {
            xaxpy(&self.field, dst, c, shift, src);
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = a.clone();
        self.axpy(&mut out, 1, 0, b);
        out
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = a.clone();
        self.axpy(&mut out, self.field.modulus() - 1, 0, b);
        out
    }

    /// Reduce a coefficient vector of any length modulo the relation.
    pub fn reduce_y(&self, mut coeffs: Vec<XPoly>) -> Elem {
        let d = self.d;
        for k in (d..coeffs.len()).rev() {
            let top = std::mem::take(&mut coeffs[k]);
            if top.is_empty() {
                continue;
            }
            for i in 0..d {
                let prod = xmul(&self.field, &top, &self.tail[i]);
                xaxpy(&self.field, &mut coeffs[k - d + i], 1, 0, &prod);
            }
        }
        coeffs.resize(d, Vec::new());
        Elem { c: coeffs }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut coeffs = vec![Vec::new(); 2 * self.d - 1];
        for (i, pa) in a.c.iter().enumerate() {
            for (j, pb) in b.c.iter().enumerate() {
                let prod = xmul(&self.field, pa, pb);
                xaxpy(&self.field, &mut coeffs[i + j], 1, 0, &prod);
            }
        }
        self.reduce_y(coeffs)
    }

    pub fn mul_x(&self, p: &XPoly, e: &Elem) -> Elem {
        Elem {
            c: e.c.iter().map(|c| xmul(&self.field, p, c)).collect(),
        }
    }

    pub fn y_power(&self, k: usize) -> Elem {
        let mut coeffs = vec![Vec::new(); k.max(self.d - 1) + 1];
        coeffs[k] = vec![1];
        self.reduce_y(coeffs)
    }

    /// Normal form of a polynomial of `ring` (variables `y, x`).
    pub fn from_poly(&self, p: &Poly<PrimeField>) -> Elem {
        let top = p.max_exp(0) as usize;
        let mut coeffs = vec![Vec::new(); top.max(self.d - 1) + 1];
        for (m, c) in p.terms() {
            let (i, a) = (m.exp(0) as usize, m.exp(1) as usize);
            let slot: &mut XPoly = &mut coeffs[i];
            if slot.len() <= a {
                slot.resize(a + 1, 0);
            }
            slot[a] = *c;
        }
        coeffs.iter_mut().for_each(trim);
        self.reduce_y(coeffs)
    }

    pub fn to_poly(&self, ring: &Ring<PrimeField>, e: &Elem) -> Poly<PrimeField> {
        let mut terms = Vec::new();
        for (i, p) in e.c.iter().enumerate() {
            for (a, &c) in p.iter().enumerate() {
                if c != 0 {
                    terms.push((Monomial::new([i as u32, a as u32]), c));
                }
            }
        }
        ring.from_terms(terms)
    }

    pub fn xpoly_to_poly(&self, ring: &Ring<PrimeField>, p: &XPoly, var: usize) -> Poly<PrimeField> {
        let terms = p
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(a, &c)| (Monomial::var(ring.nvars(), var, a as u32), c))
            .collect();
        ring.from_terms(terms)
    }

    pub fn poly_to_xpoly(&self, p: &Poly<PrimeField>, var: usize) -> XPoly {
        let mut out: XPoly = Vec::new();
        for (m, c) in p.terms() {
            let a = m.exp(var) as usize;
            if out.len() <= a {
                out.resize(a + 1, 0);
            }
            out[a] = *c;
        }
        trim(&mut out);
        out
    }
}

/// The Frobenius map `g -> g^q` on `S`, with the images of `y^i` cached.
#[derive(Clone, Debug)]
pub(crate) struct Frobenius {
    q: usize,
    images: Vec<Elem>,
}

impl Frobenius {
    pub fn new(alg: &Algebra) -> Self {
        let q = alg.field.modulus() as usize;
        let mut images = Vec::with_capacity(alg.d);
        let mut current = alg.y_power(0);
        let y_q = alg.y_power(q);
        for _ in 0..alg.d {
            images.push(current.clone());
            current = alg.mul(&current, &y_q);
        }
        Frobenius { q, images }
    }

    /// `g^q = sum_i (sum_a c_ia x^(qa)) * (y^q)^i`; coefficients are fixed by
    /// Frobenius on the prime field.
    pub fn apply(&self, alg: &Algebra, g: &Elem) -> Elem {
        let mut out = Elem::zero(alg.d);
        for (i, p) in g.c.iter().enumerate() {
            for (a, &c) in p.iter().enumerate() {
                if c != 0 {
                    alg.axpy(&mut out, c, self.q * a, &self.images[i]);
                }
            }
        }
        out
    }
}

/// A P-submodule basis with at most one element per position, each monic
/// with its leading term in its own position. Such a set is a Gröbner
/// basis of the module it spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Basis {
    pub slots: Vec<Option<Elem>>,
    pub lead: Vec<usize>,
}

impl Basis {
    pub fn empty(d: usize) -> Self {
        Basis {
            slots: vec![None; d],
            lead: vec![0; d],
        }
    }

    pub fn is_full(&self) -> bool {
        self.slots.iter().all(|s| s.is_some())
    }

    fn best_reducible(&self, alg: &Algebra, e: &Elem) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (i, slot) in self.slots.iter().enumerate() {
            if slot.is_none() {
                continue;
            }
            if let Some(a) = xdeg(&e.c[i]) {
                if a >= self.lead[i] && best.map_or(true, |b| alg.cmp_term((i, a), b) == Ordering::Greater) {
                    best = Some((i, a));
                }
            }
        }
        best
    }

    /// Full reduction, also returning the P-coefficient of each slot.
    pub fn reduce_tracked(&self, alg: &Algebra, e: &Elem) -> (Elem, Vec<XPoly>) {
        let mut r = e.clone();
        let mut quotients: Vec<XPoly> = vec![Vec::new(); alg.d];
        while let Some((i, a)) = self.best_reducible(alg, &r) {
            let g = self.slots[i].as_ref().unwrap();
            let shift = a - self.lead[i];
            let c = r.c[i][a];
            let qi: &mut XPoly = &mut quotients[i];
            if qi.len() <= shift {
                qi.resize(shift + 1, 0);
            }
            qi[shift] = alg.field.add(&qi[shift], &c);
            alg.axpy(&mut r, alg.field.neg(&c), shift, g);
        }
        quotients.iter_mut().for_each(trim);
        (r, quotients)
    }

    pub fn reduce(&self, alg: &Algebra, e: &Elem) -> Elem {
        let mut r = e.clone();
        while let Some((i, a)) = self.best_reducible(alg, &r) {
            let g = self.slots[i].as_ref().unwrap();
            let c = r.c[i][a];
            alg.axpy(&mut r, alg.field.neg(&c), a - self.lead[i], g);
        }
        r
    }

    /// Add `e` to the spanned module, keeping one element per position by
    /// Euclid-style exchange.
    pub fn insert(&mut self, alg: &Algebra, e: Elem) {
        let mut pending = Some(e);
        while let Some(e) = pending.take() {
            let r = self.reduce(alg, &e);
            let Some((i, a)) = alg.lm(&r) else {
                continue;
            };
            let r = alg.monic(&r);
            match self.slots[i].take() {
                None => {
                    self.slots[i] = Some(r);
                    self.lead[i] = a;
                }
                Some(old) => {
                    debug_assert!(a < self.lead[i]);
                    self.slots[i] = Some(r);
                    self.lead[i] = a;
                    pending = Some(old);
                }
            }
        }
    }

    /// Reduce every tail by the other elements.
    pub fn interreduce(&mut self, alg: &Algebra) {
        for i in 0..self.slots.len() {
            let Some(g) = self.slots[i].take() else {
                continue;
            };
            let lead = self.lead[i];
            let mut head = Elem::zero(alg.d);
            head.c[i] = vec![0; lead + 1];
            head.c[i][lead] = g.c[i][lead];
            let tail = alg.sub(&g, &head);
            let reduced = alg.add(&head, &self.reduce(alg, &tail));
            self.slots[i] = Some(reduced);
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = &Elem> {
        self.slots.iter().flatten()
    }

    /// The basis of `s * M`.
    pub fn scaled(&self, alg: &Algebra, s: &XPoly) -> Basis {
        let shift = s.len() - 1;
        Basis {
            slots: self
                .slots
                .iter()
                .map(|g| g.as_ref().map(|g| alg.monic(&alg.mul_x(s, g))))
                .collect(),
            lead: self.lead.iter().map(|t| t + shift).collect(),
        }
    }
}

/// Basis of the null space of the `m x n` matrix whose columns are given.
pub(crate) fn nullspace(field: &PrimeField, columns: &[Vec<u64>], m: usize) -> Vec<Vec<u64>> {
    let n = columns.len();
    let mut a: Vec<Vec<u64>> = (0..m).map(|r| columns.iter().map(|c| c[r]).collect()).collect();
    a.retain(|row| row.iter().any(|&v| v != 0));
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = field.inv(&a[rank][col]).unwrap();
        for v in a[rank].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    if pv != 0 {
                        *x = field.sub(x, &field.mul(&f, &pv));
                    }
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(&a[r][free]);
        }
        basis.push(v);
    }
    basis
}
