//! Membership in the cluster algebra `A` (through an isolated cover) and in
//! the upper cluster algebra `U` (through Laurent re-expansion in every
//! reachable cluster).
//!
//! Elements are always given as Laurent polynomials in the initial cluster
//! of the seed they are tested against.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::cover::{build_isolated_cover, isolated_exchange_constants, CoverLeaf};
use super::freeze::FrozenSeed;
use crate::algebra::{LaurentPoly, Monomial, Registry, VarId};
use crate::error::{Error, Result};
use crate::explore::{explore_exchange_graph, ExchangeGraph, DEFAULT_MAX_SEEDS};
use crate::seed::{MutationWord, Seed};

/// A coefficient `λ_α` of the monomial `x^α` that is not divisible by the
/// required product of exchange constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafWitness {
    /// Frozen set of the rejecting leaf (indices of the initial seed).
    pub leaf: Vec<usize>,
    pub leaf_label: String,
    pub alpha: Monomial,
    pub coefficient: LaurentPoly,
    pub divisor: LaurentPoly,
}

/// A cluster in which the element is not Laurent: `numerator / denominator`
/// is its expansion in that cluster and the division is not exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterWitness {
    pub word: MutationWord,
    pub cluster: Vec<String>,
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Leaf(LeafWitness),
    Cluster(ClusterWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    /// For `U`: every cluster of the algebra was checked. Always true for `A`.
    pub exhaustive: bool,
    /// Number of leaves or clusters examined.
    pub checked: usize,
    pub witness: Option<Witness>,
}

impl MembershipVerdict {
    fn accept(checked: usize, exhaustive: bool) -> Self {
        Self { member: true, exhaustive, checked, witness: None }
    }

    /// Re-checks a rejection witness with an independent divisibility test.
    pub fn witness_confirms(&self) -> bool {
        match &self.witness {
            None => self.member,
            Some(Witness::Leaf(w)) => !w.divisor.divides(&w.coefficient),
            Some(Witness::Cluster(w)) => !w.denominator.divides(&w.numerator),
        }
    }

    pub fn report(&self, reg: &Registry) -> VerdictReport {
        let witness = self.witness.as_ref().map(|w| match w {
            Witness::Leaf(w) => WitnessReport::Leaf {
                leaf: w.leaf_label.clone(),
                monomial: w.alpha.format(reg),
                coefficient: w.coefficient.format(reg),
                divisor: w.divisor.format(reg),
            },
            Witness::Cluster(w) => WitnessReport::Cluster {
                word: w.word.to_string(),
                cluster: w.cluster.clone(),
                numerator: w.numerator.format(reg),
                denominator: w.denominator.format(reg),
            },
        });
        VerdictReport { member: self.member, exhaustive: self.exhaustive, checked: self.checked, witness }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub member: bool,
    pub exhaustive: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WitnessReport {
    Leaf { leaf: String, monomial: String, coefficient: String, divisor: String },
    Cluster { word: String, cluster: Vec<String>, numerator: String, denominator: String },
}

/// Membership in an isolated cluster algebra.
///
/// Writing `a = Σ λ_α x^α` over the mutable variables, `a ∈ A` iff every
/// `λ_α` is divisible in the coefficient ring by `∏_{α_i<0} P_i^{−α_i}`.
pub fn isolated_membership(frozen: &FrozenSeed, a: &LaurentPoly) -> Result<MembershipVerdict> {
    let constants = isolated_exchange_constants(frozen.seed())?;
    match isolated_rejection(frozen.seed(), &constants, a)? {
        None => Ok(MembershipVerdict::accept(1, true)),
        Some((alpha, coefficient, divisor)) => Ok(MembershipVerdict {
            member: false,
            exhaustive: true,
            checked: 1,
            witness: Some(Witness::Leaf(LeafWitness {
                leaf: frozen.frozen().to_vec(),
                leaf_label: frozen.label(),
                alpha,
                coefficient,
                divisor,
            })),
        }),
    }
}

fn mutable_vars(seed: &Seed) -> Result<Vec<VarId>> {
    if !seed.is_initial() {
        return Err(Error::NotInitialSeed);
    }
    Ok(seed.cluster().iter().map(|x| x.as_variable().expect("initial seed")).collect())
}

type Rejection = (Monomial, LaurentPoly, LaurentPoly);

fn isolated_rejection(seed: &Seed, constants: &[LaurentPoly], a: &LaurentPoly) -> Result<Option<Rejection>> {
    let vars = mutable_vars(seed)?;
    let groups = a.coefficients_by(|v| vars.contains(&v));
    let mut powers: HashMap<(usize, u32), LaurentPoly> = HashMap::new();
    for (alpha, lambda) in groups.iter().rev() {
        let mut divisor = LaurentPoly::one();
        for (i, &v) in vars.iter().enumerate() {
            let e = alpha.exponent(v);
            if e < 0 {
                let k = (-e) as u32;
                let p = powers.entry((i, k)).or_insert_with(|| constants[i].pow(k));
                divisor = &divisor * p;
            }
        }
        if !divisor.divides(lambda) {
            return Ok(Some((alpha.clone(), lambda.clone(), divisor)));
        }
    }
    Ok(None)
}

/// The expansion `a = Σ γ_α ∏_{α_i≥0} x_i^{α_i} ∏_{α_i<0} x_i'^{−α_i}`
/// certifying membership in an isolated algebra, as `(α, γ_α)` pairs.
/// `None` if `a` is not a member.
pub fn isolated_certificate(seed: &Seed, a: &LaurentPoly) -> Result<Option<Vec<(Monomial, LaurentPoly)>>> {
    let constants = isolated_exchange_constants(seed)?;
    let vars = mutable_vars(seed)?;
    let mut out = Vec::new();
    for (alpha, lambda) in a.coefficients_by(|v| vars.contains(&v)).into_iter().rev() {
        let mut divisor = LaurentPoly::one();
        for (i, &v) in vars.iter().enumerate() {
            let e = alpha.exponent(v);
            if e < 0 {
                divisor = &divisor * &constants[i].pow((-e) as u32);
            }
        }
        match lambda.exact_div(&divisor) {
            Ok(gamma) => out.push((alpha, gamma)),
            Err(_) => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// Membership test for the cluster algebra of an acyclic initial seed,
/// built once and reused across elements.
#[derive(Debug, Clone)]
pub struct CoverTest {
    leaves: Vec<CoverLeaf>,
}

impl CoverTest {
    pub fn new(seed: &Seed) -> Result<Self> {
        Ok(Self { leaves: build_isolated_cover(seed)? })
    }

    pub fn leaves(&self) -> &[CoverLeaf] {
        &self.leaves
    }

    /// Accepts iff every leaf accepts; the first rejecting leaf (in cover
    /// order) supplies the witness.
    pub fn check(&self, a: &LaurentPoly) -> Result<MembershipVerdict> {
        for leaf in &self.leaves {
            if let Some((alpha, coefficient, divisor)) =
                isolated_rejection(leaf.frozen.seed(), &leaf.exchange_constants, a)?
            {
                return Ok(MembershipVerdict {
                    member: false,
                    exhaustive: true,
                    checked: self.leaves.len(),
                    witness: Some(Witness::Leaf(LeafWitness {
                        leaf: leaf.set().to_vec(),
                        leaf_label: leaf.label(),
                        alpha,
                        coefficient,
                        divisor,
                    })),
                });
            }
        }
        Ok(MembershipVerdict::accept(self.leaves.len(), true))
    }
}

pub fn acyclic_a_membership(seed: &Seed, a: &LaurentPoly) -> Result<MembershipVerdict> {
    CoverTest::new(seed)?.check(a)
}

/// `a ∈ A[(∏_{s∈S} x_s)⁻¹]`, decided by trying `(∏ x_s)^N · a ∈ A` for
/// `N = 0..=max_power`. A `false` answer only means no such `N` was found.
pub fn localized_a_membership(seed: &Seed, set: &[usize], a: &LaurentPoly, max_power: u32) -> Result<bool> {
    let test = CoverTest::new(seed)?;
    let mut unit = LaurentPoly::one();
    for &s in set {
        unit = &unit * &seed.cluster()[s];
    }
    let mut current = a.clone();
    for _ in 0..=max_power {
        if test.check(&current)?.member {
            return Ok(true);
        }
        current = &current * &unit;
    }
    Ok(false)
}

struct Chart {
    word: MutationWord,
    cluster: Vec<String>,
    /// Initial variable ↦ its expansion in this chart's cluster.
    images: HashMap<VarId, LaurentPoly>,
}

/// Upper cluster algebra test over every cluster within a mutation
/// distance, built once and reused across elements.
pub struct UpperTest {
    charts: Vec<Chart>,
    exhaustive: bool,
}

impl UpperTest {
    pub fn new(seed: &Seed, max_depth: usize) -> Result<Self> {
        let vars = mutable_vars(seed)?;
        let graph = explore_exchange_graph(seed, max_depth, DEFAULT_MAX_SEEDS)?;
        Self::from_graph(seed, &vars, &graph)
    }

    fn from_graph(seed: &Seed, vars: &[VarId], graph: &ExchangeGraph) -> Result<Self> {
        let mut charts = Vec::with_capacity(graph.node_count());
        for node in &graph.nodes {
            // Relabel the node's cluster with the initial symbols and mutate
            // back: the result expresses each initial variable in the node's
            // cluster.
            let formal = node.raw.with_cluster(seed.cluster().to_vec());
            let back = formal.mutate_word(&node.word.reversed())?;
            let images = vars.iter().copied().zip(back.cluster().iter().cloned()).collect();
            charts.push(Chart { word: node.word.clone(), cluster: node.raw.cluster_strings(), images });
        }
        Ok(Self { charts, exhaustive: graph.closed })
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn cluster_count(&self) -> usize {
        self.charts.len()
    }

    /// Accepts iff `a` is Laurent in every chart; the first failing chart
    /// in exploration order supplies the witness.
    pub fn check(&self, a: &LaurentPoly) -> Result<MembershipVerdict> {
        for chart in &self.charts {
            let (numerator, denominator) = a.substitute_parts(&chart.images);
            if !denominator.divides(&numerator) {
                return Ok(MembershipVerdict {
                    member: false,
                    exhaustive: self.exhaustive,
                    checked: self.charts.len(),
                    witness: Some(Witness::Cluster(ClusterWitness {
                        word: chart.word.clone(),
                        cluster: chart.cluster.clone(),
                        numerator,
                        denominator,
                    })),
                });
            }
        }
        Ok(MembershipVerdict::accept(self.charts.len(), self.exhaustive))
    }
}

/// Membership in `U_d`, the intersection of the Laurent rings of all
/// clusters within distance `max_depth`. Exact (and reported exhaustive)
/// when the exchange graph closes within that distance.
pub fn upper_membership_bounded(seed: &Seed, a: &LaurentPoly, max_depth: usize) -> Result<MembershipVerdict> {
    UpperTest::new(seed, max_depth)?.check(a)
}

/// Set of frozen index sets, for callers that want leaves without polynomials.
pub fn cover_sets(seed: &Seed) -> Result<BTreeSet<Vec<usize>>> {
    Ok(build_isolated_cover(seed)?.iter().map(|l| l.set().to_vec()).collect())
}
