use std::sync::Arc;

use crate::algebra::{TropMonomial, VarId, VarKind};
use crate::error::{Error, Result};
use crate::seed::Seed;

/// A seed with some cluster variables moved into the coefficients.
///
/// The frozen variables keep their [`VarId`] and become
/// [`VarKind::FrozenCluster`]; each remaining coefficient picks up
/// `y_i† = y_i · ∏_{s∈S} x_s^{B_si}` and the exchange matrix loses the
/// rows and columns in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrozenSeed {
    base: Seed,
    /// Frozen indices of `base`, ascending.
    frozen: Vec<usize>,
    /// `kept[p]` is the `base` index of position `p` in `seed`.
    kept: Vec<usize>,
    seed: Seed,
}

impl FrozenSeed {
    pub fn base(&self) -> &Seed {
        &self.base
    }

    pub fn frozen(&self) -> &[usize] {
        &self.frozen
    }

    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    /// The reduced seed of rank `n − |S|`.
    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    pub fn into_seed(self) -> Seed {
        self.seed
    }

    /// Position in the reduced seed of a `base` index, if it was not frozen.
    pub fn position_of(&self, base_index: usize) -> Option<usize> {
        self.kept.iter().position(|&k| k == base_index)
    }

    pub fn frozen_vars(&self) -> Vec<VarId> {
        self.frozen.iter().map(|&i| self.base.cluster()[i].as_variable().expect("checked at freeze")).collect()
    }

    pub fn frozen_names(&self) -> Vec<String> {
        self.frozen_vars().into_iter().map(|v| self.base.registry().name(v).to_string()).collect()
    }

    /// `freeze{x1,x3}` style label.
    pub fn label(&self) -> String {
        format!("freeze{{{}}}", self.frozen_names().join(","))
    }
}

/// Freezes the indices `set` of `seed`, one at a time in increasing order.
pub fn freeze(seed: &Seed, set: &[usize]) -> Result<FrozenSeed> {
    let mut order = set.to_vec();
    order.sort_unstable();
    order.dedup();
    freeze_in_order(seed, &order)
}

/// Freezes the listed `seed` indices in the given order. The result does
/// not depend on the order.
pub fn freeze_in_order(seed: &Seed, order: &[usize]) -> Result<FrozenSeed> {
    let mut kept: Vec<usize> = (0..seed.rank()).collect();
    let mut current = seed.clone();
    for &base_index in order {
        let pos = kept.iter().position(|&k| k == base_index).ok_or(Error::IndexOutOfRange {
            index: base_index + 1,
            rank: seed.rank(),
        })?;
        current = freeze_one(&current, pos)?;
        kept.remove(pos);
    }
    let mut frozen = order.to_vec();
    frozen.sort_unstable();
    Ok(FrozenSeed { base: seed.clone(), frozen, kept, seed: current })
}

fn freeze_one(seed: &Seed, k: usize) -> Result<Seed> {
    let entry = &seed.cluster()[k];
    let v = match entry.as_variable() {
        Some(v) if seed.registry().kind(v) == VarKind::Mutable => v,
        _ => return Err(Error::FreezeNonInitial { index: k + 1, entry: entry.format(seed.registry()) }),
    };
    let registry = Arc::new(seed.registry().with_frozen(&[v]));
    let b = seed.matrix();
    let keep: Vec<usize> = (0..seed.rank()).filter(|&i| i != k).collect();
    let cluster = keep.iter().map(|&i| seed.cluster()[i].clone()).collect();
    let coeffs = keep
        .iter()
        .map(|&i| seed.coeffs()[i].mul(&TropMonomial::var_pow(v, b.get(k, i) as i32)))
        .collect();
    Seed::from_matrix(registry, cluster, coeffs, b.submatrix(&keep))
}

/// Checks that freezing `j` after mutating at `i` equals mutating at `i`
/// after freezing `j`.
pub fn freezing_commutes_check(seed: &Seed, i: usize, j: usize) -> Result<bool> {
    assert_ne!(i, j, "mutation and freezing indices must differ");
    let left = freeze(&seed.mutate(i)?, &[j])?;
    let frozen = freeze(seed, &[j])?;
    let pos = frozen.position_of(i).expect("i is not frozen");
    let right = frozen.seed().mutate(pos)?;
    Ok(left.seed() == &right)
}
