//! Exact engine for cluster algebras with tropical coefficients.
//!
//! * [`algebra`]: sparse Laurent polynomials over ℤ and tropical monomials.
//! * [`seed`]: exchange matrices, seeds, mutation and canonical forms.
//! * [`explore`]: bounded exchange-graph search and Laurent audits.
//! * [`locality`]: acyclicity, freezing, isolated covers and the
//!   membership tests for the cluster algebra and its upper cluster algebra.
//! * [`cli`]: seed files, element parsing and report rendering.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod explore;
pub mod locality;
pub mod seed;

pub use algebra::{LaurentPoly, Monomial, Registry, TropMonomial, VarId, VarKind};
pub use error::{Error, Result};
pub use seed::{ExchangeMatrix, MutationWord, Seed};
