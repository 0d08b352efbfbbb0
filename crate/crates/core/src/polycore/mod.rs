//! Exact coefficient domains, monomials, sparse polynomials, matrix monomial
//! orders and weight functions.

mod coefficient;
mod extension;
mod field;
mod monomial;
mod order;
mod parse;
mod poly;
mod primes;
mod ring;
mod weight;

pub use coefficient::{parse_rational, Coefficient, Domain};
pub use extension::Extension;
pub use field::{Field, PrimeField, Rationals};
pub use monomial::Monomial;
pub use order::{is_well_order, matrix_rank, OrderKind, OrderMatrix};
pub(crate) use order::select_rows;
pub use poly::Poly;
pub use primes::{is_prime, next_prime, primes_from};
pub use ring::Ring;
pub use weight::{dependent_degree_monic, validate_weight_function, WeightMatrix, WeightVerdict};
