use std::fmt;

use smallvec::SmallVec;

/// An exponent vector; dependent variables first, then independent ones.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial(exps.into_iter().collect())
    }

    /// `x_var^e` in a ring with `nvars` variables.
    pub fn var(nvars: usize, var: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[var] = e;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when every component difference is non-negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = SmallVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// True when the first `ndep` exponents vanish.
    pub fn is_independent(&self, ndep: usize) -> bool {
        self.0[..ndep].iter().all(|&e| e == 0)
    }

    pub fn dependent_degree(&self, ndep: usize) -> u64 {
        self.0[..ndep].iter().map(|&e| e as u64).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
