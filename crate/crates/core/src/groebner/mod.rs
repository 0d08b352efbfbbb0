//! Normal forms, Buchberger's algorithm, reduced bases, module bases and
//! polynomial gcds.

mod buchberger;
mod gcd;
mod module;
mod reduce;

pub use buchberger::{
    buchberger, ideal_contains, is_groebner_basis, is_minimal_reduced_gb, minimal_reduced, reduced_basis,
    GroebnerBasis,
};
pub use gcd::{dependent_coefficients, gcd_all, p_content, poly_gcd};
pub use module::{module_gb, ModuleBasis, ModuleVector};
pub use reduce::{divide, exact_quotient, normal_form, spoly};
