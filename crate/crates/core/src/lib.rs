//! Exact-arithmetic engine for closure operations on ideals and submodules
//! over finitely presented rings, with a sheaf layer over Spec R built from
//! distinguished open covers.
//!
//! The crate is organized bottom-up: [`algebra`] carries sparse polynomials
//! over F_p and Q; [`groebner`] is a Buchberger engine with division
//! certificates; [`ring`] handles presented rings and localization at an
//! element; [`closure`] is the pluggable closure-oracle framework with its
//! property checkers; [`tightclosure`] is the characteristic-p machinery;
//! [`sheaf`] glues chart-level verdicts over covers of Spec R.

pub mod algebra;
pub mod error;

pub use error::{EngineError, Result};
