pub mod error;
pub mod harness;
pub mod hasse_engine;
pub mod li_keiper;
pub mod precision_core;
pub mod quadrature;
pub mod stieltjes;
pub mod zeta_suite;

pub use error::{Error, Result};
pub use precision_core::ExtReal;
pub use rug::{Integer, Rational};
