//! Tropical semifield over the frozen variables.
//!
//! Elements are Laurent monomials in the frozen variables. Multiplication
//! adds exponents; the auxiliary addition `⊕` takes the componentwise
//! minimum, with absent variables treated as exponent 0.

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::registry::{Registry, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct TropMonomial(Monomial);

impl TropMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(m: Monomial) -> Self {
        Self(m)
    }

    pub fn var_pow(id: VarId, exp: i32) -> Self {
        Self(Monomial::var_pow(id, exp))
    }

    pub fn as_monomial(&self) -> &Monomial {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn exponent(&self, id: VarId) -> i32 {
        self.0.exponent(id)
    }

    pub fn oplus(&self, other: &Self) -> Self {
        Self(self.0.gcd_min(&other.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    pub fn inv(&self) -> Self {
        Self(self.0.inv())
    }

    pub fn pow(&self, k: i32) -> Self {
        Self(self.0.pow(k))
    }

    /// The coefficient-ring element with the same exponents.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.0.clone())
    }

    pub fn format(&self, reg: &Registry) -> String {
        self.0.format(reg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const U: VarId = VarId(0);
    const V: VarId = VarId(1);

    fn reg() -> Registry {
        Registry::with_names(&[] as &[&str], &["u", "v"]).unwrap()
    }

    #[test]
    fn oplus_examples() {
        let u = TropMonomial::var_pow(U, 1);
        let one = TropMonomial::one();
        assert_eq!(u.oplus(&one), one);
        let uinv = TropMonomial::var_pow(U, -1);
        assert_eq!(uinv.oplus(&one), uinv);
        assert_eq!(u.oplus(&u), u);
    }

    #[test]
    fn group_examples() {
        let u = TropMonomial::var_pow(U, 1);
        assert!(u.mul(&u.inv()).is_one());
        assert_eq!(TropMonomial::one().mul(&u), u);
        let p = TropMonomial::var_pow(U, 2).mul(&TropMonomial::var_pow(V, 1));
        assert_eq!(p.format(&reg()), "u^2*v");
    }

    #[test]
    fn to_laurent_examples() {
        let r = reg();
        assert!(TropMonomial::one().to_laurent().is_one());
        assert_eq!(TropMonomial::var_pow(U, 2).to_laurent().format(&r), "u^2");
        let t = TropMonomial::var_pow(U, -1).mul(&TropMonomial::var_pow(V, 1));
        assert_eq!(t.to_laurent().format(&r), "u^-1*v");
    }
}
