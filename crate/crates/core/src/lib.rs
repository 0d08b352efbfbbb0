//! Integral closures of integral extensions `S = P[y]/<f>` computed by the
//! Qth-power algorithm in positive characteristic and lifted to the
//! rationals by Chinese remaindering and rational reconstruction.

pub mod error;
pub mod cli;
pub mod closure;
pub mod conductor;
pub mod groebner;
pub mod lifting;
pub mod polycore;

pub use error::{Error, Result};
