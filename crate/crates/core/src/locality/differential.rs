use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::membership::{CoverTest, UpperTest};
use crate::algebra::{LaurentPoly, Monomial, VarId};
use crate::error::{Error, Result};
use crate::explore::{explore_exchange_graph, DEFAULT_MAX_DEPTH, DEFAULT_MAX_SEEDS};
use crate::seed::Seed;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub sample: usize,
    pub element: String,
    pub in_a: bool,
    pub in_u: bool,
}

/// Outcome of comparing the cover test for `A` against the exhaustive test
/// for `U` on random elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuReport {
    pub samples: usize,
    pub agreements: usize,
    pub members: usize,
    pub non_members: usize,
    pub clusters: usize,
    pub leaves: usize,
    pub disagreements: Vec<Disagreement>,
}

impl AuReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "{}/{} agree ({} in A=U, {} outside; {} clusters, {} leaves)\n",
            self.agreements, self.samples, self.members, self.non_members, self.clusters, self.leaves
        );
        for d in &self.disagreements {
            out.push_str(&format!("disagreement at sample {}: {} (A: {}, U: {})\n", d.sample, d.element, d.in_a, d.in_u));
        }
        out
    }
}

/// Samples elements and checks `A`-membership against `U`-membership.
///
/// Each sample is one of: an integer combination of products of cluster
/// variables (with unit coefficients from the frozen variables), such a
/// combination plus a random Laurent monomial, or such a combination times a
/// random Laurent monomial in the mutable variables. The first kind always
/// lies in `A`; the others usually do not.
pub fn au_differential(seed: &Seed, samples: usize, rng_seed: u64) -> Result<AuReport> {
    let cover = CoverTest::new(seed)?;
    let graph = explore_exchange_graph(seed, DEFAULT_MAX_DEPTH, DEFAULT_MAX_SEEDS)?;
    if !graph.closed {
        return Err(Error::NotFiniteType(graph.node_count()));
    }
    let upper = UpperTest::new(seed, graph.depth_reached)?;
    debug_assert!(upper.is_exhaustive());
    let vars = graph.collect_cluster_variables().polys();
    let reg = seed.registry();
    let mutable: Vec<VarId> = seed.cluster().iter().filter_map(LaurentPoly::as_variable).collect();
    let frozen: Vec<VarId> = reg.ids().filter(|&v| reg.kind(v).is_frozen()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut report = AuReport {
        samples,
        agreements: 0,
        members: 0,
        non_members: 0,
        clusters: upper.cluster_count(),
        leaves: cover.leaves().len(),
        disagreements: Vec::new(),
    };
    for sample in 0..samples {
        let base = random_combination(&mut rng, &vars, &frozen);
        let a = match rng.gen_range(0..3) {
            0 => base,
            1 => {
                let c = nonzero(&mut rng, 3);
                &base + &LaurentPoly::term(c, random_monomial(&mut rng, &mutable, 2))
            }
            _ => base.mul_monomial(&random_monomial(&mut rng, &mutable, 1)),
        };
        let in_a = cover.check(&a)?.member;
        let in_u = upper.check(&a)?.member;
        if in_u {
            report.members += 1;
        } else {
            report.non_members += 1;
        }
        if in_a == in_u {
            report.agreements += 1;
        } else {
            report.disagreements.push(Disagreement { sample, element: a.format(reg), in_a, in_u });
        }
    }
    Ok(report)
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let c = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -c
    } else {
        c
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, vars: &[VarId], bound: i32) -> Monomial {
    Monomial::from_pairs(vars.iter().map(|&v| (v, rng.gen_range(-bound..=bound))))
}

fn random_combination(rng: &mut ChaCha8Rng, vars: &[LaurentPoly], frozen: &[VarId]) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut t = LaurentPoly::constant(nonzero(rng, 4));
        for _ in 0..rng.gen_range(0..=2) {
            t = &t * &vars[rng.gen_range(0..vars.len())];
        }
        if !frozen.is_empty() {
            t = t.mul_monomial(&random_monomial(rng, frozen, 1));
        }
        total = &total + &t;
    }
    total
}
