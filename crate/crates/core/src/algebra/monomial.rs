use std::cmp::Ordering;
use std::fmt::{self, Write as _};

use super::registry::{Registry, VarId};

/// A Laurent monomial: a sparse exponent map, sorted by variable, with no
/// zero exponents stored.
///
/// `Ord` is graded lexicographic: total degree first, then the exponent of
/// the earliest-declared variable where the two differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, i32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(id: VarId) -> Self {
        Self { exps: vec![(id, 1)] }
    }

    pub fn var_pow(id: VarId, exp: i32) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            Self { exps: vec![(id, exp)] }
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// summing repeats and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, i32)>) -> Self {
        let mut exps: Vec<(VarId, i32)> = pairs.into_iter().collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(VarId, i32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Self { exps: out }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, id: VarId) -> i32 {
        self.exps
            .binary_search_by_key(&id, |&(v, _)| v)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a - b)
    }

    pub fn inv(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect() }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect() }
    }

    /// Componentwise minimum, treating absent variables as exponent 0.
    pub fn gcd_min(&self, other: &Monomial) -> Monomial {
        self.merge(other, i32::min)
    }

    /// Componentwise maximum, treating absent variables as exponent 0.
    pub fn lcm_max(&self, other: &Monomial) -> Monomial {
        self.merge(other, i32::max)
    }

    /// True when `self` divides `other` as ordinary (nonnegative) monomials.
    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).exps.iter().all(|&(_, e)| e >= 0)
    }

    /// Splits into the part on variables accepted by `keep` and the rest.
    pub fn split(&self, mut keep: impl FnMut(VarId) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.exps.iter().partition(|&&(v, _)| keep(v));
        (Monomial { exps: a }, Monomial { exps: b })
    }

    fn merge(&self, other: &Monomial, op: impl Fn(i32, i32) -> i32) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, e) = match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, op(ea, eb))
                    }
                    Ordering::Less => {
                        i += 1;
                        (va, op(ea, 0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, op(0, eb))
                    }
                },
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, op(ea, 0))
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, op(0, eb))
                }
                (None, None) => unreachable!(),
            };
            if e != 0 {
                out.push((v, e));
            }
        }
        Monomial { exps: out }
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                },
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
            }
        }
    }

    /// Canonical text, e.g. `x1*x2^-1`; the unit monomial is `1`.
    pub fn format(&self, reg: &Registry) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                s.push('*');
            }
            s.push_str(reg.name(v));
            if e != 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    pub fn display<'a>(&'a self, reg: &'a Registry) -> impl fmt::Display + 'a {
        DisplayWith(self, reg)
    }
}

struct DisplayWith<'a>(&'a Monomial, &'a Registry);

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format(self.1))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
