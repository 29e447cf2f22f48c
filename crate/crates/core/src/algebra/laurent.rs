use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::registry::{Registry, VarId};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in a map ordered by the graded lexicographic monomial
/// order; no zero coefficient is ever stored, so structural equality is
/// mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(id: VarId) -> Self {
        Self::monomial(Monomial::var(id))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The single monomial if this polynomial is `1·m`.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    /// The variable if this polynomial is exactly one variable.
    pub fn as_variable(&self) -> Option<VarId> {
        let m = self.as_monomial()?;
        let mut it = m.iter();
        match (it.next(), it.next()) {
            (Some((v, 1)), None) => Some(v),
            _ => None,
        }
    }

    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Componentwise minimum exponent over all terms (absent variables count as 0).
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut acc = first.clone();
        for m in it {
            acc = acc.gcd_min(m);
        }
        acc
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|(_, e)| e > 0))
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        Self { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        Self { terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, mut k: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient in the Laurent polynomial ring.
    ///
    /// The extremal monomial of the denominator is factored out, the
    /// numerator is shifted to an ordinary polynomial, and graded-lex long
    /// division must leave no remainder.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let fail = || Error::NotDivisible { numerator_terms: self.len(), denominator_terms: den.len() };
        if den.is_zero() {
            return Err(fail());
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let den_shift = den.min_monomial();
        let num_shift = self.min_monomial();
        let d0 = den.mul_monomial(&den_shift.inv());
        let n0 = self.mul_monomial(&num_shift.inv());
        let q0 = poly_long_div(&n0, &d0).ok_or_else(fail)?;
        Ok(q0.mul_monomial(&num_shift.div(&den_shift)))
    }

    /// True iff `self` divides `num` in the Laurent ring. Zero is divisible
    /// by every nonzero element; nothing divides into a zero denominator.
    pub fn divides(&self, num: &LaurentPoly) -> bool {
        num.exact_div(self).is_ok()
    }

    /// Groups terms by their monomial in the variables selected by `outer`;
    /// each coefficient is a Laurent polynomial in the remaining variables.
    pub fn coefficients_by(&self, mut outer: impl FnMut(VarId) -> bool) -> BTreeMap<Monomial, LaurentPoly> {
        let mut out: BTreeMap<Monomial, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (o, inner) = m.split(&mut outer);
            out.entry(o).or_default().add_term(inner, c.clone());
        }
        out
    }

    /// Ring homomorphism substituting `images[v]` for each listed variable.
    ///
    /// Negative powers of substituted variables are handled by clearing
    /// them into a single denominator and dividing exactly; fails with
    /// `NotDivisible` when the image is not a Laurent polynomial.
    pub fn substitute(&self, images: &HashMap<VarId, LaurentPoly>) -> Result<LaurentPoly> {
        let (numerator, denominator) = self.substitute_parts(images);
        if denominator.is_one() {
            Ok(numerator)
        } else {
            numerator.exact_div(&denominator)
        }
    }

    /// The substitution as an unreduced fraction `(numerator, denominator)`,
    /// where the denominator is a product of powers of the images.
    pub fn substitute_parts(&self, images: &HashMap<VarId, LaurentPoly>) -> (LaurentPoly, LaurentPoly) {
        let mut floor: HashMap<VarId, i32> = HashMap::new();
        for m in self.terms.keys() {
            for (v, e) in m.iter() {
                if images.contains_key(&v) {
                    let f = floor.entry(v).or_insert(0);
                    *f = (*f).min(e);
                }
            }
        }
        let mut powers: HashMap<(VarId, u32), LaurentPoly> = HashMap::new();
        let mut power = |v: VarId, k: u32| -> LaurentPoly {
            powers.entry((v, k)).or_insert_with(|| images[&v].pow(k)).clone()
        };
        let mut numerator = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let (subst, keep) = m.split(|v| images.contains_key(&v));
            let mut t = LaurentPoly::term(c.clone(), keep);
            let mut vars: Vec<VarId> = floor.keys().copied().collect();
            vars.sort();
            for v in vars {
                let k = subst.exponent(v) - floor[&v];
                if k > 0 {
                    t = &t * &power(v, k as u32);
                }
            }
            numerator = &numerator + &t;
        }
        let mut vars: Vec<VarId> = floor.keys().copied().collect();
        vars.sort();
        let mut denominator = LaurentPoly::one();
        for v in vars {
            let k = -floor[&v];
            if k > 0 {
                denominator = &denominator * &power(v, k as u32);
            }
        }
        (numerator, denominator)
    }

    /// Canonical text form, e.g. `x1*x2^-1 + x2^-1`. Zero prints as `0`.
    pub fn format(&self, reg: &Registry) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mag = c.abs();
            if m.is_one() {
                let _ = write!(s, "{mag}");
            } else if mag.is_one() {
                s.push_str(&m.format(reg));
            } else {
                let _ = write!(s, "{mag}*{}", m.format(reg));
            }
        }
        s
    }

    pub fn display<'a>(&'a self, reg: &'a Registry) -> impl fmt::Display + 'a {
        Displayed(self, reg)
    }
}

struct Displayed<'a>(&'a LaurentPoly, &'a Registry);

impl fmt::Display for Displayed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format(self.1))
    }
}

/// Long division of ordinary polynomials; `None` if the remainder is nonzero.
fn poly_long_div(num: &LaurentPoly, den: &LaurentPoly) -> Option<LaurentPoly> {
    let (lead_m, lead_c) = den.leading_term()?;
    let (lead_m, lead_c) = (lead_m.clone(), lead_c.clone());
    let mut rem = num.clone();
    let mut quot = LaurentPoly::zero();
    while let Some((rm, rc)) = rem.leading_term() {
        if !lead_m.divides(rm) {
            return None;
        }
        let (c, r) = rc.div_rem(&lead_c);
        if !r.is_zero() {
            return None;
        }
        let t = rm.div(&lead_m);
        for (dm, dc) in &den.terms {
            rem.add_term(dm.mul(&t), -(dc * &c));
        }
        quot.add_term(t, c);
    }
    Some(quot)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg() -> Registry {
        Registry::with_names(&["x1", "x2"], &["u"]).unwrap()
    }

    fn x(i: u32) -> LaurentPoly {
        LaurentPoly::var(VarId(i))
    }

    fn c(k: i64) -> LaurentPoly {
        LaurentPoly::constant(k)
    }

    fn inv(i: u32) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::var_pow(VarId(i), -1))
    }

    #[test]
    fn add_examples() {
        let r = reg();
        assert_eq!(&(&x(0) + &c(1)) + &c(-1), x(0));
        let p = &x(1) + &c(1);
        assert_eq!(&LaurentPoly::zero() + &p, p);
        let s = &(&x(1) + &c(1)) + &(&x(0) + &x(1));
        assert_eq!(s.format(&r), "x1 + 2*x2 + 1");
    }

    #[test]
    fn mul_examples() {
        let r = reg();
        let p = &(&x(1) + &c(1)) * &(&x(0) + &x(1));
        assert_eq!(p.format(&r), "x1*x2 + x2^2 + x1 + x2");
        assert_eq!(&p * &LaurentPoly::one(), p);
        assert!((&inv(0) * &x(0)).is_one());
    }

    #[test]
    fn exact_div_examples() {
        let r = reg();
        let num = &(&x(1) + &c(1)) * &(&x(0) + &x(1));
        assert_eq!(num.exact_div(&(&x(1) + &c(1))).unwrap(), &x(0) + &x(1));
        let q = (&x(0) + &c(1)).exact_div(&x(1)).unwrap();
        assert_eq!(q.format(&r), "x1*x2^-1 + x2^-1");
        assert!(matches!((&x(0) + &c(1)).exact_div(&(&x(0) + &c(2))), Err(Error::NotDivisible { .. })));
        assert!(x(0).exact_div(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn divides_examples() {
        let d = &x(1) + &c(1);
        assert!(d.divides(&d.pow(2)));
        assert!(!c(2).divides(&c(3)));
        assert!(d.divides(&LaurentPoly::zero()));
        assert!(c(-1).divides(&d));
    }

    #[test]
    fn divides_with_laurent_shifts() {
        // (x1 + x2^-1) / (x1*x2 + 1) = x2^-1
        let num = &x(0) + &inv(1);
        let den = &(&x(0) * &x(1)) + &c(1);
        assert_eq!(num.exact_div(&den).unwrap(), inv(1));
        // x1^-2 (x1 + 1)^2 / (1 + x1^-1) = 1 + x1^-1
        let num = &inv(0).pow(2) * &(&x(0) + &c(1)).pow(2);
        let den = &c(1) + &inv(0);
        assert_eq!(num.exact_div(&den).unwrap(), &c(1) + &inv(0));
    }

    #[test]
    fn formatting_signs_and_zero() {
        let r = reg();
        assert_eq!(LaurentPoly::zero().format(&r), "0");
        assert_eq!(LaurentPoly::one().format(&r), "1");
        let p = &(&c(-3) * &x(0)) - &c(1);
        assert_eq!(p.format(&r), "-3*x1 - 1");
        let q = &(&x(2) * &inv(0)) - &x(1);
        assert_eq!(q.format(&r), "-x2 + x1^-1*u");
    }

    #[test]
    fn substitute_with_inverses() {
        // x1^-1 with x1 -> (x2 + 1)/x1  gives x1/(x2+1): not Laurent
        let image = (&x(1) + &c(1)).exact_div(&x(0)).unwrap();
        let images = HashMap::from([(VarId(0), image.clone())]);
        assert!(inv(0).substitute(&images).is_err());
        // (x2 + 1) x1^-1 -> x1
        let a = &(&x(1) + &c(1)) * &inv(0);
        assert_eq!(a.substitute(&images).unwrap(), x(0));
        // plain polynomial substitution
        let b = &x(0).pow(2) + &x(1);
        assert_eq!(b.substitute(&images).unwrap(), &image.pow(2) + &x(1));
    }

    #[test]
    fn coefficients_by_groups_outer_monomials() {
        // x1^-1 * (u + 1) + x1*u
        let p = &(&inv(0) * &(&x(2) + &c(1))) + &(&x(0) * &x(2));
        let groups = p.coefficients_by(|v| v == VarId(0));
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[&Monomial::var_pow(VarId(0), -1)], &x(2) + &c(1));
        assert_eq!(groups[&Monomial::var(VarId(0))], x(2));
    }

    #[test]
    fn as_variable_detects_bare_variables() {
        assert_eq!(x(1).as_variable(), Some(VarId(1)));
        assert_eq!(inv(1).as_variable(), None);
        assert_eq!((&x(1) * &c(2)).as_variable(), None);
        assert_eq!((&x(1) + &c(1)).as_variable(), None);
    }
}
