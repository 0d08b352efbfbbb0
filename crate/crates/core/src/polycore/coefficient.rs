//! Tagged exact scalars: integers, rationals, and prime-field residues.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::primes::is_prime;
use crate::error::{Error, Result};

/// The coefficient domain of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Int,
    Rat,
    ModP(u64),
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Int => write!(f, "ZZ"),
            Domain::Rat => write!(f, "QQ"),
            Domain::ModP(q) => write!(f, "ZZ/{q}"),
        }
    }
}

/// A scalar tagged with its domain. Rationals are always reduced with a
/// positive denominator; residues always lie in `[0, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Int(BigInt),
    Rat(BigRational),
    ModP { value: u64, q: u64 },
}

impl Coefficient {
    pub fn int(n: impl Into<BigInt>) -> Self {
        Coefficient::Int(n.into())
    }

    /// `num/den` in lowest terms.
    pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Coefficient::Rat(BigRational::new(num.into(), den)))
    }

    pub fn modp(value: impl Into<BigInt>, q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        let v = value.into().mod_floor(&BigInt::from(q));
        Ok(Coefficient::ModP {
            value: v.to_u64().expect("residue below q"),
            q,
        })
    }

    pub fn domain(&self) -> Domain {
        match self {
            Coefficient::Int(_) => Domain::Int,
            Coefficient::Rat(_) => Domain::Rat,
            Coefficient::ModP { q, .. } => Domain::ModP(*q),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Int(n) => n.is_zero(),
            Coefficient::Rat(r) => r.is_zero(),
            Coefficient::ModP { value, .. } => *value == 0,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.domain() != other.domain() {
            return Err(Error::DomainMismatch(format!(
                "{} vs {}",
                self.domain(),
                other.domain()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Coefficient::Int(a), Coefficient::Int(b)) => Coefficient::Int(a + b),
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Coefficient::Rat(a + b),
            (Coefficient::ModP { value: a, q }, Coefficient::ModP { value: b, .. }) => {
                Coefficient::ModP {
                    value: ((*a as u128 + *b as u128) % *q as u128) as u64,
                    q: *q,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Self {
        match self {
            Coefficient::Int(a) => Coefficient::Int(-a),
            Coefficient::Rat(a) => Coefficient::Rat(-a),
            Coefficient::ModP { value, q } => Coefficient::ModP {
                value: if *value == 0 { 0 } else { q - value },
                q: *q,
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Coefficient::Int(a), Coefficient::Int(b)) => Coefficient::Int(a * b),
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Coefficient::Rat(a * b),
            (Coefficient::ModP { value: a, q }, Coefficient::ModP { value: b, .. }) => {
                Coefficient::ModP {
                    value: ((*a as u128 * *b as u128) % *q as u128) as u64,
                    q: *q,
                }
            }
            _ => unreachable!(),
        })
    }

    /// Exact division. Over the integers the quotient must be exact.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, other) {
            (Coefficient::Int(a), Coefficient::Int(b)) => {
                let (quo, rem) = a.div_rem(b);
                if !rem.is_zero() {
                    return Err(Error::Input(format!("{a} is not divisible by {b}")));
                }
                Ok(Coefficient::Int(quo))
            }
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Ok(Coefficient::Rat(a / b)),
            (Coefficient::ModP { value: a, q }, Coefficient::ModP { value: b, .. }) => {
                let inv = super::primes::pow_mod(*b, q - 2, *q);
                Ok(Coefficient::ModP {
                    value: ((*a as u128 * inv as u128) % *q as u128) as u64,
                    q: *q,
                })
            }
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Int(n) => write!(f, "{n}"),
            Coefficient::Rat(r) => write_rational(f, r),
            Coefficient::ModP { value, .. } => write!(f, "{value}"),
        }
    }
}

/// `a` for integers, `a/b` otherwise; `b > 0` always.
pub(crate) fn write_rational(f: &mut impl fmt::Write, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Parse `a` or `a/b` (optionally signed) into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse {
        offset: 0,
        message: format!("not a rational number: {text:?}"),
    };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let r = BigRational::new(num, den);
    debug_assert!(r.denom().is_positive());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let c = Coefficient::rat(6, -8).unwrap();
        match &c {
            Coefficient::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(4));
            }
            _ => panic!(),
        }
        assert_eq!(c.to_string(), "-3/4");
        assert_eq!(Coefficient::rat(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn residues_in_range() {
        let c = Coefficient::modp(-1, 7).unwrap();
        assert_eq!(c, Coefficient::ModP { value: 6, q: 7 });
        assert!(Coefficient::modp(3, 8).is_err());
        let d = c.mul(&Coefficient::modp(3, 7).unwrap()).unwrap();
        assert_eq!(d, Coefficient::ModP { value: 4, q: 7 });
        let e = d.div(&Coefficient::modp(3, 7).unwrap()).unwrap();
        assert_eq!(e, c);
    }

    #[test]
    fn mismatch_and_zero_division() {
        let a = Coefficient::int(3);
        let b = Coefficient::rat(1, 2).unwrap();
        assert!(matches!(a.add(&b), Err(Error::DomainMismatch(_))));
        assert_eq!(a.div(&Coefficient::int(0)), Err(Error::DivisionByZero));
        assert!(a.div(&Coefficient::int(2)).is_err());
        assert_eq!(
            Coefficient::modp(2, 5).unwrap().div(&Coefficient::modp(0, 5).unwrap()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            Coefficient::rat(1, 3).unwrap().sub(&Coefficient::rat(1, 3).unwrap()).unwrap(),
            Coefficient::rat(0, 1).unwrap()
        );
    }

    #[test]
    fn parse_rational_literals() {
        assert_eq!(parse_rational("-15/17").unwrap(), BigRational::new((-15).into(), 17.into()));
        assert_eq!(parse_rational("4/-6").unwrap(), BigRational::new((-2).into(), 3.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
