use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write;

use super::field::{signed_parts, Field};
use super::monomial::Monomial;
use super::order::OrderMatrix;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::polycore::coefficient::write_rational;

/// A polynomial ring `F[dependent; independent]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring<F: Field> {
    field: F,
    names: Vec<String>,
    ndep: usize,
    order: OrderMatrix,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, names: Vec<String>, ndep: usize, order: OrderMatrix) -> Result<Self> {
        if names.len() != order.nvars() {
            return Err(Error::Dimension {
                expected: order.nvars(),
                got: names.len(),
            });
        }
        if ndep > names.len() {
            return Err(Error::Input(format!(
                "{ndep} dependent variables in a ring with {} variables",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::Input(format!("bad or duplicate variable name {n:?}")));
            }
        }
        Ok(Ring {
            field,
            names,
            ndep,
            order,
        })
    }

    /// The same variables and order over another field.
    pub fn with_field<G: Field>(&self, field: G) -> Ring<G> {
        Ring {
            field,
            names: self.names.clone(),
            ndep: self.ndep,
            order: self.order.clone(),
        }
    }

    /// The same variables and field under another order.
    pub fn with_order(&self, order: OrderMatrix) -> Result<Ring<F>> {
        Ring::new(self.field.clone(), self.names.clone(), self.ndep, order)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn ndep(&self) -> usize {
        self.ndep
    }

    pub fn order(&self) -> &OrderMatrix {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn zero(&self) -> Poly<F> {
        Poly::zero()
    }

    pub fn one(&self) -> Poly<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        self.term(self.one_monomial(), c)
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly::from_sorted(vec![(m, c)])
        }
    }

    pub fn monomial(&self, m: Monomial) -> Poly<F> {
        self.term(m, self.field.one())
    }

    pub fn var(&self, i: usize) -> Poly<F> {
        self.monomial(Monomial::var(self.nvars(), i, 1))
    }

    /// Sort, combine equal monomials, and drop zero coefficients.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Poly<F> {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if self.field.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|(_, c)| self.field.is_zero(c)) {
            out.pop();
        }
        Poly::from_sorted(out)
    }

    pub fn is_sorted(&self, f: &Poly<F>) -> bool {
        f.terms().windows(2).all(|w| self.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
            && f.terms().iter().all(|(_, c)| !self.field.is_zero(c))
    }

    /// Re-sort under this ring's order (for polynomials built elsewhere).
    pub fn resort(&self, f: Poly<F>) -> Poly<F> {
        self.from_terms(f.into_terms())
    }

    fn merge(&self, a: &[(Monomial, F::Elem)], b: impl Iterator<Item = (Monomial, F::Elem)>) -> Poly<F> {
        let mut out = Vec::with_capacity(a.len() + 4);
        let mut ia = a.iter().peekable();
        let mut ib = b.peekable();
        loop {
            match (ia.peek(), ib.peek()) {
                (Some((ma, _)), Some((mb, _))) => match self.cmp(ma, mb) {
                    Ordering::Greater => out.push(ia.next().unwrap().clone()),
                    Ordering::Less => out.push(ib.next().unwrap()),
                    Ordering::Equal => {
                        let (m, ca) = ia.next().unwrap();
                        let (_, cb) = ib.next().unwrap();
                        let c = self.field.add(ca, &cb);
                        if !self.field.is_zero(&c) {
                            out.push((m.clone(), c));
                        }
                    }
                },
                (Some(_), None) => {
                    out.extend(ia.cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(ib);
                    break;
                }
                (None, None) => break,
            }
        }
        Poly::from_sorted(out)
    }

    pub fn add(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        self.merge(f.terms(), g.terms().iter().cloned())
    }

    pub fn neg(&self, f: &Poly<F>) -> Poly<F> {
        Poly::from_sorted(
            f.terms()
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        )
    }

    pub fn sub(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        let field = &self.field;
        self.merge(f.terms(), g.terms().iter().map(|(m, c)| (m.clone(), field.neg(c))))
    }

    pub fn scale(&self, c: &F::Elem, f: &Poly<F>) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly::from_sorted(
            f.terms()
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(c, a)))
                .collect(),
        )
    }

    /// `c * m * f`; the order is multiplicative, so no re-sorting is needed.
    pub fn mul_term(&self, f: &Poly<F>, c: &F::Elem, m: &Monomial) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly::from_sorted(
            f.terms()
                .iter()
                .map(|(t, a)| (t.mul(m), self.field.mul(c, a)))
                .collect(),
        )
    }

    /// `p - c * m * g` in one merge.
    pub fn sub_mul_term(&self, p: &Poly<F>, c: &F::Elem, m: &Monomial, g: &Poly<F>) -> Poly<F> {
        let field = &self.field;
        let nc = field.neg(c);
        self.merge(
            p.terms(),
            g.terms().iter().map(|(t, a)| (t.mul(m), field.mul(&nc, a))),
        )
    }

    /// `p - c * m * g` where `p` is given by a sorted slice of terms.
    pub(crate) fn sub_mul_slice(
        &self,
        p: &[(Monomial, F::Elem)],
        c: &F::Elem,
        m: &Monomial,
        g: &Poly<F>,
    ) -> Poly<F> {
        let field = &self.field;
        let nc = field.neg(c);
        self.merge(p, g.terms().iter().map(|(t, a)| (t.mul(m), field.mul(&nc, a))))
    }

    pub fn mul(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        if f.is_zero() || g.is_zero() {
            return Poly::zero();
        }
        if f.len() == 1 {
            let (m, c) = &f.terms()[0];
            return self.mul_term(g, c, m);
        }
        if g.len() == 1 {
            let (m, c) = &g.terms()[0];
            return self.mul_term(f, c, m);
        }
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(f.len() * g.len() / 2 + 1);
        for (mf, cf) in f.terms() {
            for (mg, cg) in g.terms() {
                let c = self.field.mul(cf, cg);
                acc.entry(mf.mul(mg))
                    .and_modify(|e| *e = self.field.add(e, &c))
                    .or_insert(c);
            }
        }
        let terms: Vec<_> = acc.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect();
        self.from_terms(terms)
    }

    pub fn pow(&self, f: &Poly<F>, mut k: u32) -> Poly<F> {
        let mut base = f.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self, f: &Poly<F>) -> Poly<F> {
        match f.lc() {
            None => Poly::zero(),
            Some(c) if self.field.is_one(c) => f.clone(),
            Some(c) => {
                let inv = self.field.inv(c).expect("leading coefficient is nonzero");
                self.scale(&inv, f)
            }
        }
    }

    pub fn is_monic(&self, f: &Poly<F>) -> bool {
        f.lc().is_some_and(|c| self.field.is_one(c))
    }

    pub fn exact_divide_by_scalar(&self, f: &Poly<F>, c: &F::Elem) -> Result<Poly<F>> {
        let inv = self.field.inv(c)?;
        Ok(self.scale(&inv, f))
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, f: &Poly<F>, var: usize) -> Poly<F> {
        let terms = f
            .terms()
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|(m, c)| {
                let e = m.exp(var);
                let mut dm = m.clone();
                dm.set_exp(var, e - 1);
                (dm, self.field.mul(c, &self.field.from_i64(e as i64)))
            })
            .filter(|(_, c)| !self.field.is_zero(c))
            .collect();
        self.from_terms(terms)
    }

    /// Substitute `images[i]` (polynomials of `target`) for variable `i`.
    pub fn substitute(&self, f: &Poly<F>, target: &Ring<F>, images: &[Poly<F>]) -> Result<Poly<F>> {
        if images.len() != self.nvars() {
            return Err(Error::Dimension {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let mut powers: Vec<Vec<Poly<F>>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut acc = target.zero();
        for (m, c) in f.terms() {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = target.mul(powers[i].last().unwrap(), &images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = target.mul(&t, &powers[i][e]);
                }
            }
            acc = target.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Move a polynomial between rings whose variables are a relabelling:
    /// variable `i` of `self` becomes variable `map[i]` of `target`.
    pub fn relabel(&self, f: &Poly<F>, target: &Ring<F>, map: &[usize]) -> Poly<F> {
        let n = target.nvars();
        let terms = f
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut t = Monomial::one(n);
                for (i, &e) in m.exps().iter().enumerate() {
                    t.set_exp(map[i], t.exp(map[i]) + e);
                }
                (t, c.clone())
            })
            .collect();
        target.from_terms(terms)
    }

    /// Map coefficients into another field over the same variables.
    pub fn map_coefficients<G: Field>(
        &self,
        f: &Poly<F>,
        target: &Ring<G>,
        map: impl Fn(&F::Elem) -> Result<G::Elem>,
    ) -> Result<Poly<G>> {
        let terms = f
            .terms()
            .iter()
            .map(|(m, c)| Ok((m.clone(), map(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(target.from_terms(terms))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&self.names[i]);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Text form, e.g. `3/4*y^2*x - 15/17*x^4 + 1`.
    pub fn display(&self, f: &Poly<F>) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in f.terms().iter().enumerate() {
            let (negative, mag) = signed_parts(&self.field, c);
            match (i, negative) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let unit = mag == num_rational::BigRational::from_integer(1.into());
            if m.is_one() {
                let _ = write_rational(&mut s, &mag);
            } else if unit {
                s.push_str(&self.format_monomial(m));
            } else {
                let _ = write_rational(&mut s, &mag);
                s.push('*');
                s.push_str(&self.format_monomial(m));
            }
        }
        s
    }

    pub fn parse(&self, text: &str) -> Result<Poly<F>> {
        super::parse::parse_poly(self, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn qring() -> Ring<Rationals> {
        Ring::new(
            Rationals,
            vec!["y".into(), "x".into()],
            1,
            OrderMatrix::grevlex(2),
        )
        .unwrap()
    }

    #[test]
    fn add_zero_is_identity() {
        let r = qring();
        let f = r.parse("3/4*y^2*x - 15/17*x^4 + 1").unwrap();
        assert_eq!(r.add(&f, &r.zero()), f);
        assert_eq!(r.sub(&f, &f), r.zero());
    }

    #[test]
    fn display_round_trip() {
        let r = qring();
        for text in ["3/4*y^2*x - 15/17*x^4 + 1", "-y + 2", "0", "x^11", "-1/2*y*x"] {
            let f = r.parse(text).unwrap();
            assert_eq!(r.parse(&r.display(&f)).unwrap(), f);
        }
        let f = r.parse("1 + x^4*(-15/17) + 3/4*x*y^2").unwrap();
        assert_eq!(r.display(&f), "-15/17*x^4 + 3/4*y^2*x + 1");
    }

    #[test]
    fn cube_expansion() {
        // (y^2 - 3/4y - 15/17x)^3 has leading term y^6 under grevlex
        let r = qring();
        let g = r.parse("y^2 - 3/4*y - 15/17*x").unwrap();
        let c = r.pow(&g, 3);
        assert_eq!(c, r.mul(&g, &r.mul(&g, &g)));
        assert_eq!(r.display(&r.from_terms(vec![c.lt().unwrap().clone()])), "y^6");
        assert_eq!(c.coefficient(&Monomial::new([0, 3])), Some(&BigRational::new((-3375).into(), 4913.into())));
    }

    #[test]
    fn derivative_and_substitution() {
        let r = qring();
        let f = r.parse("y^2 - x").unwrap();
        assert_eq!(r.derivative(&f, 0), r.parse("2*y").unwrap());
        assert_eq!(r.derivative(&f, 1), r.parse("-1").unwrap());
        let img = [r.parse("x + 1").unwrap(), r.parse("y").unwrap()];
        let s = r.substitute(&f, &r, &img).unwrap();
        assert_eq!(s, r.parse("x^2 + 2*x + 1 - y").unwrap());
    }

    #[test]
    fn modular_display_is_balanced() {
        let r = qring().with_field(PrimeField::new(11).unwrap());
        let f = r.parse("y^2 + 7*x").unwrap();
        assert_eq!(r.display(&f), "y^2 - 4*x");
        assert_eq!(r.parse("y^2 - 4*x").unwrap(), f);
    }
}
