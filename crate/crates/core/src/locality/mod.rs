//! Acyclicity, freezing, isolated covers and membership tests.

mod acyclic;
mod cover;
mod differential;
mod freeze;
mod membership;

pub use acyclic::{find_sink, is_acyclic, MutationDigraph};
pub use cover::{build_isolated_cover, exchange_identity_check, isolated_exchange_constants, CoverLeaf, LeafReport};
pub use differential::{au_differential, AuReport, Disagreement};
pub use freeze::{freeze, freeze_in_order, freezing_commutes_check, FrozenSeed};
pub use membership::{
    acyclic_a_membership, cover_sets, isolated_certificate, isolated_membership, localized_a_membership,
    upper_membership_bounded, ClusterWitness, CoverTest, LeafWitness, MembershipVerdict, UpperTest, VerdictReport,
    Witness, WitnessReport,
};
