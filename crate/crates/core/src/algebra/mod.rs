//! Exact arithmetic: sparse Laurent polynomials over ℤ and tropical monomials.

mod laurent;
mod monomial;
mod registry;
mod tropical;

pub use laurent::LaurentPoly;
pub use monomial::Monomial;
pub use registry::{Registry, VarId, VarInfo, VarKind};
pub use tropical::TropMonomial;

