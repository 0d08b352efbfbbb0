//! Integer and rational maps between `Q` and `Z/N`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The representative of `c` modulo `n` in `(-n/2, n/2]`.
pub fn balanced(c: &BigInt, n: &BigInt) -> BigInt {
    let r = c.mod_floor(n);
    if &r * 2 > *n {
        r - n
    } else {
        r
    }
}

/// Inverse of `a` modulo `n`, when `gcd(a, n) = 1`.
pub fn inverse_mod(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(n).extended_gcd(n);
    e.gcd.is_one().then(|| e.x.mod_floor(n))
}

/// `mu_N(a/b)`: the balanced `c` with `c b = a (mod N)`.
pub fn mod_n(r: &BigRational, n: &BigInt) -> Result<BigInt> {
    let inv = inverse_mod(r.denom(), n).ok_or_else(|| Error::NotInvertible {
        value: r.to_string(),
        modulus: n.to_string(),
    })?;
    Ok(balanced(&(r.numer() * inv), n))
}

/// Rational reconstruction `E_N(c)`: among the remainder/cofactor pairs
/// `(r_i, u_i)` of the extended Euclidean algorithm on `(N, c mod N)` with
/// `r_i != 0` and `u_i` a unit modulo `N`, the one with least
/// `r_i^2 + u_i^2` (earliest on ties), returned as `(-1)^i r_i / u_i`.
pub fn rat_recon(c: &BigInt, n: &BigInt) -> Result<BigRational> {
    let c0 = c.mod_floor(n);
    if c0.is_zero() {
        return Ok(BigRational::zero());
    }
    let (mut r_prev, mut r) = (n.clone(), c0);
    let (mut u_prev, mut u) = (BigInt::zero(), BigInt::one());
    let mut best: Option<(BigInt, usize, BigInt, BigInt)> = None;
    let mut i = 0usize;
    loop {
        let size = &r * &r + &u * &u;
        if u.gcd(n).is_one() && best.as_ref().is_none_or(|b| size < b.0) {
            best = Some((size, i, r.clone(), u.clone()));
        }
        let (quot, rem) = r_prev.div_rem(&r);
        if rem.is_zero() {
            break;
        }
        let u_next = &quot * &u + &u_prev;
        r_prev = std::mem::replace(&mut r, rem);
        u_prev = std::mem::replace(&mut u, u_next);
        i += 1;
    }
    let Some((_, i, r, u)) = best else {
        return Err(Error::Reconstruction {
            residue: c.to_string(),
            modulus: n.to_string(),
        });
    };
    let num = if i % 2 == 0 { r } else { -r };
    Ok(BigRational::new(num, u))
}

/// Chinese remaindering of `(residue, prime)` pairs to the balanced residue
/// modulo the product, which is returned alongside.
pub fn crt(values: &[(BigInt, u64)]) -> Result<(BigInt, BigInt)> {
    let mut seen = std::collections::HashSet::new();
    let mut acc = BigInt::zero();
    let mut modulus = BigInt::one();
    for (c, q) in values {
        if !seen.insert(*q) {
            return Err(Error::DuplicateModulus(*q));
        }
        let qb = BigInt::from(*q);
        // acc + modulus * t = c (mod q)
        let inv = inverse_mod(&modulus, &qb).ok_or_else(|| Error::NotInvertible {
            value: modulus.to_string(),
            modulus: q.to_string(),
        })?;
        let t = ((c - &acc) * inv).mod_floor(&qb);
        acc += &modulus * t;
        modulus *= qb;
    }
    Ok((balanced(&acc, &modulus), modulus))
}

/// Whether `q` divides the rational `r` (as a nonzero numerator) or its
/// denominator.
pub(crate) fn divides_numerator(q: u64, r: &BigRational) -> bool {
    !r.is_zero() && (r.numer().abs() % BigInt::from(q)).is_zero()
}

pub(crate) fn divides_denominator(q: u64, r: &BigRational) -> bool {
    (r.denom() % BigInt::from(q)).is_zero()
}
