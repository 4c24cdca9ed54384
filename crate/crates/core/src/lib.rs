//! Padé approximants for a Riccati equation and free subgroup numbers of the
//! lifts of the modular group and the Hecke group of order 4, reduced modulo
//! prime powers.

pub mod arith;
pub mod emit;
pub mod error;
pub mod groups;
pub mod modular;
pub mod pade;
pub mod period;
pub mod poly;
pub mod riccati;
pub mod ring;
pub mod valuation;

pub use error::{Error, Result};
