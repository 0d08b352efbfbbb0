//! Multi-modular reconstruction of the closure over the rationals.

mod arith;
mod driver;
mod polys;
mod runs;

pub use arith::{balanced, crt, inverse_mod, mod_n, rat_recon};
pub use driver::{
    psi_image, run_algorithm1, specializes_to, verify_candidate, Algorithm1Outcome, Certificate, LiftConfig,
    LiftState, PrimeSchedule, Reconciled,
};
pub use polys::{crt_poly, lift_poly, reduce_poly, reduce_poly_mod_n, ModPoly};
pub use runs::{
    closure_mod_q, compatibility_check, is_prime_usable, PrimeData, PrimeRun, RunSignature, SkipReason, Usability,
};
