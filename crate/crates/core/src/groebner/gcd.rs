//! Greatest common divisors of polynomials over a field.

use std::collections::BTreeMap;

use super::buchberger::reduced_basis;
use super::reduce::{exact_quotient, normal_form};
use crate::polycore::{Field, Monomial, OrderKind, OrderMatrix, Poly, Ring};

fn support_vars<F: Field>(f: &Poly<F>, nvars: usize) -> Vec<usize> {
    (0..nvars).filter(|&v| f.max_exp(v) > 0).collect()
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn poly_gcd<F: Field>(ring: &Ring<F>, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_zero() {
        return ring.monic(b);
    }
    if b.is_zero() {
        return ring.monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return ring.one();
    }
    let mut vars = support_vars(a, ring.nvars());
    vars.extend(support_vars(b, ring.nvars()));
    vars.sort_unstable();
    vars.dedup();
    if vars.len() == 1 {
        euclid(ring, a, b)
    } else {
        gcd_by_elimination(ring, a, b)
    }
}

/// Euclid for polynomials in a single variable; in one variable every
/// monomial order is the degree order, so the normal form is the remainder.
fn euclid<F: Field>(ring: &Ring<F>, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let (mut a, mut b) = (ring.monic(a), ring.monic(b));
    while !b.is_zero() {
        let r = normal_form(ring, &a, std::slice::from_ref(&b));
        a = b;
        b = ring.monic(&r);
    }
    a
}

/// `gcd = a*b / lcm`, with `<lcm> = <t*a, (1-t)*b>` intersected with the
/// original ring.
fn gcd_by_elimination<F: Field>(ring: &Ring<F>, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let n = ring.nvars();
    let mut rows = vec![{
        let mut r = vec![0i64; n + 1];
        r[0] = 1;
        r
    }];
    for row in ring.order().rows() {
        let mut r = vec![0i64];
        r.extend(row);
        rows.push(r);
    }
    let order = OrderMatrix::from_rows(OrderKind::Grevlex, rows).expect("block order is nonsingular");
    let mut names = vec!["t#".to_string()];
    names.extend(ring.names().iter().cloned());
    let er = Ring::new(ring.field().clone(), names, ring.ndep() + 1, order).expect("valid names");
    let shift: Vec<usize> = (1..=n).collect();
    let (ea, eb) = (ring.relabel(a, &er, &shift), ring.relabel(b, &er, &shift));
    let t = er.var(0);
    let one_minus_t = er.sub(&er.one(), &t);
    let gb = reduced_basis(&er, &[er.mul(&t, &ea), er.mul(&one_minus_t, &eb)]);
    let lcm_ext = gb
        .gens()
        .iter()
        .find(|g| g.max_exp(0) == 0)
        .expect("the intersection of principal ideals is nonzero");
    let back: Vec<(Monomial, F::Elem)> = lcm_ext
        .terms()
        .iter()
        .map(|(m, c)| (Monomial::new(m.exps()[1..].iter().copied()), c.clone()))
        .collect();
    let lcm = ring.from_terms(back);
    let q = exact_quotient(ring, &ring.mul(a, b), &lcm).expect("lcm divides the product");
    ring.monic(&q)
}

pub fn gcd_all<F: Field>(ring: &Ring<F>, polys: &[Poly<F>]) -> Poly<F> {
    polys
        .iter()
        .fold(ring.zero(), |acc, p| if acc.is_constant() && !acc.is_zero() { acc } else { poly_gcd(ring, &acc, p) })
}

/// Write `g` as a polynomial in the dependent variables with coefficients
/// in the independent ones.
pub fn dependent_coefficients<F: Field>(ring: &Ring<F>, g: &Poly<F>) -> BTreeMap<Vec<u32>, Poly<F>> {
    let nd = ring.ndep();
    let mut groups: BTreeMap<Vec<u32>, Vec<(Monomial, F::Elem)>> = BTreeMap::new();
    for (m, c) in g.terms() {
        let key = m.exps()[..nd].to_vec();
        let mut rest = m.clone();
        for v in 0..nd {
            rest.set_exp(v, 0);
        }
        groups.entry(key).or_default().push((rest, c.clone()));
    }
    groups.into_iter().map(|(k, t)| (k, ring.from_terms(t))).collect()
}

/// Monic gcd of the coefficients of `g` viewed over the independent
/// variables.
pub fn p_content<F: Field>(ring: &Ring<F>, g: &Poly<F>) -> Poly<F> {
    let coeffs: Vec<Poly<F>> = dependent_coefficients(ring, g).into_values().collect();
    gcd_all(ring, &coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{PrimeField, Rationals};

    fn ring(names: &[&str]) -> Ring<Rationals> {
        Ring::new(
            Rationals,
            names.iter().map(|s| s.to_string()).collect(),
            1,
            OrderMatrix::block(1, names.len()),
        )
        .unwrap()
    }

    #[test]
    fn univariate() {
        let r = ring(&["y", "x"]);
        let a = r.parse("x^4 - 1").unwrap();
        let b = r.parse("2*x^3 + 2*x^2 - 2*x - 2").unwrap();
        assert_eq!(poly_gcd(&r, &a, &b), r.parse("x^2 - 1").unwrap());
        assert_eq!(poly_gcd(&r, &a, &r.zero()), a);
        assert_eq!(poly_gcd(&r, &a, &r.parse("x^2 + 1/3").unwrap()), r.one());
    }

    #[test]
    fn multivariate() {
        let r = ring(&["y", "u", "v"]);
        let c = r.parse("u*v - 2*v + 1").unwrap();
        let a = r.mul(&c, &r.parse("u^2 + v").unwrap());
        let b = r.mul(&c, &r.parse("u - v^3").unwrap());
        assert_eq!(poly_gcd(&r, &a, &b), r.monic(&c));
    }

    #[test]
    fn content_over_independent() {
        let r = ring(&["y", "x"]).with_field(PrimeField::new(5).unwrap());
        let g = r.parse("y^2*x^3 - 3*y*x^3 + 2*x^4").unwrap();
        assert_eq!(p_content(&r, &g), r.parse("x^3").unwrap());
        let coeffs = dependent_coefficients(&r, &g);
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[&vec![0]], r.parse("2*x^4").unwrap());
    }
}
