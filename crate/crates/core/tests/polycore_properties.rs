use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;
use qthpower::polycore::{Monomial, OrderMatrix, Poly, PrimeField, Rationals, Ring, WeightMatrix};

fn monomial(nvars: usize, max: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max, nvars).prop_map(Monomial::new)
}

fn orders() -> Vec<OrderMatrix> {
    let w = WeightMatrix::new(vec![vec![3, 2, 5]]).unwrap();
    vec![
        OrderMatrix::grevlex(3),
        OrderMatrix::weight_over_grevlex(&w).unwrap(),
        OrderMatrix::grevlex_over_weight(1, &w).unwrap(),
        OrderMatrix::grevlex_over_weight(2, &w).unwrap(),
        OrderMatrix::block(1, 3),
    ]
}

fn rational_ring() -> Ring<Rationals> {
    Ring::new(Rationals, vec!["y".into(), "x2".into(), "x1".into()], 1, OrderMatrix::grevlex(3)).unwrap()
}

fn rational_poly() -> impl Strategy<Value = Poly<Rationals>> {
    proptest::collection::vec((monomial(3, 5), -50i64..50, 1i64..30), 0..7).prop_map(|terms| {
        rational_ring().from_terms(
            terms
                .into_iter()
                .map(|(m, a, b)| (m, BigRational::new(a.into(), b.into())))
                .collect(),
        )
    })
}

/// Terms of a single weight `target` under weights `(3, 2, 5)`.
fn homogeneous(target: u32) -> impl Strategy<Value = Poly<PrimeField>> {
    proptest::collection::vec((0..=target / 3, 0..=target / 2, 1u64..101), 1..5).prop_map(move |parts| {
        let ring = Ring::new(
            PrimeField::new(101).unwrap(),
            vec!["y".into(), "x2".into(), "x1".into()],
            1,
            OrderMatrix::grevlex(3),
        )
        .unwrap();
        let mut terms = Vec::new();
        for (a, b, c) in parts {
            let used = 3 * a + 2 * b;
            if used <= target && (target - used) % 5 == 0 {
                terms.push((Monomial::new([a, b, (target - used) / 5]), c));
            }
        }
        if terms.is_empty() && target % 5 == 0 {
            terms.push((Monomial::new([0, 0, target / 5]), 1));
        }
        ring.from_terms(terms)
    })
}

proptest! {
    #[test]
    fn orders_are_total(a in monomial(3, 8), b in monomial(3, 8)) {
        for order in orders() {
            prop_assert_eq!(order.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
        }
    }

    #[test]
    fn orders_are_multiplicative(a in monomial(3, 8), b in monomial(3, 8), c in monomial(3, 8)) {
        for order in orders() {
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&c), &b.mul(&c)));
        }
    }

    #[test]
    fn one_is_least(a in monomial(3, 8)) {
        for order in orders() {
            prop_assert_ne!(order.cmp(&Monomial::one(3), &a), Ordering::Greater);
        }
    }

    #[test]
    fn weights_add(f in homogeneous(30), g in homogeneous(20)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let w = WeightMatrix::new(vec![vec![3, 2, 5]]).unwrap();
        let ring = Ring::new(
            PrimeField::new(101).unwrap(),
            vec!["y".into(), "x2".into(), "x1".into()],
            1,
            OrderMatrix::grevlex(3),
        )
        .unwrap();
        let fg = ring.mul(&f, &g);
        prop_assert!(!fg.is_zero());
        prop_assert_eq!(w.of_poly(&fg).unwrap(), vec![50]);
    }

    #[test]
    fn rationals_are_normalised(f in rational_poly(), g in rational_poly()) {
        let r = rational_ring();
        for p in [r.add(&f, &g), r.mul(&f, &g), r.sub(&f, &g)] {
            prop_assert!(r.is_sorted(&p));
            for (_, c) in p.terms() {
                prop_assert!(c.denom().is_positive());
                prop_assert!(num_integer::Integer::gcd(c.numer(), c.denom()).is_one());
                prop_assert!(!num_traits::Zero::is_zero(c));
            }
        }
    }

    #[test]
    fn residues_stay_in_range(a in proptest::collection::vec((monomial(3, 4), any::<u64>()), 0..6)) {
        let r = rational_ring().with_field(PrimeField::new(13).unwrap());
        let f = r.from_terms(a.into_iter().map(|(m, c)| (m, c % 13)).collect());
        for p in [r.mul(&f, &f), r.sub(&f, &r.scale(&5, &f))] {
            prop_assert!(p.terms().iter().all(|(_, c)| *c > 0 && *c < 13));
        }
    }

    #[test]
    fn print_then_parse(f in rational_poly()) {
        let r = rational_ring();
        prop_assert_eq!(r.parse(&r.display(&f)).unwrap(), f);
    }
}
