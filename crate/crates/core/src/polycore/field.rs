//! Coefficient fields the algorithms run over: the rationals and prime fields.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::coefficient::Domain;
use super::primes::{is_prime, pow_mod};
use crate::error::{Error, Result};

/// Exact field arithmetic over an element type.
///
/// Implementations are cheap to clone; polynomials do not carry their field,
/// so every operation is routed through a field value.
pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn domain(&self) -> Domain;
    /// 0 for the rationals, `q` for `Z_q`.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Image of a rational number; fails when the denominator is not a unit.
    fn from_rational(&self, r: &BigRational) -> Result<Self::Elem>;

    /// A rational representative: the value itself over Q, the balanced
    /// residue in `(-q/2, q/2]` over `Z_q`.
    fn to_rational(&self, a: &Self::Elem) -> BigRational;
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn domain(&self) -> Domain {
        Domain::Rat
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(&self, r: &BigRational) -> Result<BigRational> {
        Ok(r.clone())
    }
    fn to_rational(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
}

/// The prime field `Z_q` with `q` a machine-word prime; residues live in `[0, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn reduce_u64(&self, n: u64) -> u64 {
        n % self.q
    }

    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.q))
            .to_u64()
            .expect("residue fits in u64")
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.q)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn domain(&self) -> Domain {
        Domain::ModP(self.q)
    }
    fn characteristic(&self) -> u64 {
        self.q
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.q
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let (s, carry) = a.overflowing_add(*b);
        if carry || s >= self.q {
            s.wrapping_sub(self.q)
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.q - (b - a)
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.q - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.q as u128) as u64
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(pow_mod(*a, self.q - 2, self.q))
    }
    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.q as i128) as u64
    }
    fn from_rational(&self, r: &BigRational) -> Result<u64> {
        let den = self.reduce_bigint(r.denom());
        if den == 0 {
            return Err(Error::NotInvertible {
                value: r.to_string(),
                modulus: self.q.to_string(),
            });
        }
        let num = self.reduce_bigint(r.numer());
        self.div(&num, &den)
    }
    fn to_rational(&self, a: &u64) -> BigRational {
        let v = if *a > self.q / 2 {
            BigInt::from(*a) - BigInt::from(self.q)
        } else {
            BigInt::from(*a)
        };
        BigRational::from_integer(v)
    }
}

/// Sign and magnitude of an element's rational representative.
pub(crate) fn signed_parts<F: Field>(field: &F, a: &F::Elem) -> (bool, BigRational) {
    let r = field.to_rational(a);
    (r.is_negative(), r.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn prime_field_rejects_composites() {
        assert_eq!(PrimeField::new(55), Err(Error::NotPrime(55)));
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn residues_stay_in_range() {
        let f = PrimeField::new(13).unwrap();
        for a in 0..13 {
            for b in 0..13 {
                for v in [f.add(&a, &b), f.sub(&a, &b), f.mul(&a, &b), f.neg(&a)] {
                    assert!(v < 13);
                }
                if b != 0 {
                    assert_eq!(f.mul(&f.div(&a, &b).unwrap(), &b), a);
                }
            }
        }
        assert_eq!(f.inv(&0), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_images() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.to_rational(&f5.from_rational(&rat(8, 7)).unwrap()), rat(-1, 1));
        assert_eq!(f5.from_rational(&rat(1, 3)).unwrap(), 2);
        let f2 = PrimeField::new(2).unwrap();
        assert!(f2.from_rational(&rat(13, 22)).is_err());
        assert_eq!(Rationals.inv(&rat(0, 1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn large_prime_arithmetic() {
        let q = 18_446_744_073_709_551_557u64;
        let f = PrimeField::new(q).unwrap();
        assert_eq!(f.add(&(q - 1), &(q - 1)), q - 2);
        assert_eq!(f.mul(&f.inv(&12345).unwrap(), &12345), 1);
    }
}
