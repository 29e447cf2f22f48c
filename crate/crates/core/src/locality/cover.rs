use serde::Serialize;

use super::acyclic::is_acyclic;
use super::freeze::{freeze, FrozenSeed};
use crate::algebra::{LaurentPoly, TropMonomial};
use crate::error::{Error, Result};
use crate::seed::{mutate_cluster, ExchangeMatrix, Seed};

/// One isolated piece of a cover: the freezing of the initial seed at `S`,
/// whose exchange matrix is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverLeaf {
    pub frozen: FrozenSeed,
    /// `P_i` with `x_i · x_i' = P_i`, indexed by position in the frozen seed.
    pub exchange_constants: Vec<LaurentPoly>,
}

impl CoverLeaf {
    pub fn set(&self) -> &[usize] {
        self.frozen.frozen()
    }

    pub fn label(&self) -> String {
        self.frozen.label()
    }

    pub fn report(&self) -> LeafReport {
        let reg = self.frozen.seed().registry();
        LeafReport {
            label: self.label(),
            frozen: self.frozen.frozen_names(),
            mutable: self.frozen.seed().cluster_strings(),
            exchange_constants: self.exchange_constants.iter().map(|p| p.format(reg)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafReport {
    pub label: String,
    pub frozen: Vec<String>,
    pub mutable: Vec<String>,
    pub exchange_constants: Vec<String>,
}

/// `P_i = (y_i + 1) / (y_i ⊕ 1)` for every index of an isolated seed.
pub fn isolated_exchange_constants(seed: &Seed) -> Result<Vec<LaurentPoly>> {
    if !seed.matrix().is_zero() {
        return Err(Error::NotIsolated);
    }
    seed.coeffs()
        .iter()
        .map(|y| {
            let num = &y.to_laurent() + &LaurentPoly::one();
            num.exact_div(&y.oplus(&TropMonomial::one()).to_laurent())
        })
        .collect()
}

/// Cover of an acyclic initial seed by isolated freezings.
///
/// If the exchange matrix is zero the seed is its own leaf. Otherwise take
/// the smallest sink `i` that has an arrow into it, the smallest `j` with
/// `B_ji < 0`, and recurse
/// on the freezings at `i` and at `j`; since `x_i` and `x_j` generate the
/// unit ideal, the two freezings cover.
pub fn build_isolated_cover(seed: &Seed) -> Result<Vec<CoverLeaf>> {
    if !seed.is_initial() {
        return Err(Error::NotInitialSeed);
    }
    if !is_acyclic(seed.matrix()) {
        return Err(Error::NotAcyclic);
    }
    let mut leaves: Vec<CoverLeaf> = Vec::new();
    cover_rec(seed, Vec::new(), &mut leaves)?;
    Ok(leaves)
}

fn cover_rec(base: &Seed, set: Vec<usize>, out: &mut Vec<CoverLeaf>) -> Result<()> {
    let f = freeze(base, &set)?;
    let b = f.seed().matrix();
    if b.is_zero() {
        if out.iter().all(|l| l.set() != f.frozen()) {
            let exchange_constants = isolated_exchange_constants(f.seed())?;
            out.push(CoverLeaf { frozen: f, exchange_constants });
        }
        return Ok(());
    }
    let i = split_sink(b).ok_or(Error::NotAcyclic)?;
    let j = (0..b.rank()).find(|&j| b.get(j, i) < 0).expect("split sink has an incoming arrow");
    for pick in [i, j] {
        let mut next = set.clone();
        next.push(f.kept()[pick]);
        cover_rec(base, next, out)?;
    }
    Ok(())
}

/// Smallest sink `i` with some `B_ji < 0`. Following arrows from any arrow of
/// a nonzero acyclic matrix ends at such a sink, so one exists unless `B = 0`
/// or `B` has a cycle.
fn split_sink(b: &ExchangeMatrix) -> Option<usize> {
    let n = b.rank();
    (0..n).find(|&i| (0..n).all(|j| b.get(j, i) <= 0) && (0..n).any(|j| b.get(j, i) < 0))
}

/// Verifies `1 = ((y_i ⊕ 1)/y_i)·x_i'·x_i − y_i⁻¹·∏_{B_ki<0} x_k^{−B_ki}` at a sink `i`.
pub fn exchange_identity_check(seed: &Seed, i: usize) -> Result<bool> {
    let b = seed.matrix();
    if i >= seed.rank() {
        return Err(Error::IndexOutOfRange { index: i + 1, rank: seed.rank() });
    }
    if (0..b.rank()).any(|j| b.get(j, i) > 0) {
        return Err(Error::InvalidSeed(format!("index {} is not a sink", i + 1)));
    }
    let y = &seed.coeffs()[i];
    let x = &seed.cluster()[i];
    let x_new = mutate_cluster(seed, i)?;
    let mut product = LaurentPoly::one();
    for (k, xk) in seed.cluster().iter().enumerate() {
        let bki = b.get(k, i);
        if bki < 0 {
            product = &product * &xk.pow((-bki) as u32);
        }
    }
    let scale = y.oplus(&TropMonomial::one()).mul(&y.inv()).to_laurent();
    let rhs = &(&(&scale * &x_new) * x) - &(&y.inv().to_laurent() * &product);
    Ok(rhs.is_one())
}
