//! Bounded breadth-first exploration of the exchange graph, up to
//! permutation of indices.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::seed::{MutationWord, Seed};

pub const DEFAULT_MAX_DEPTH: usize = 16;
pub const DEFAULT_MAX_SEEDS: usize = 10_000;

#[derive(Debug, Clone)]
pub struct ExchangeNode {
    pub key: String,
    /// The seed in canonical index order.
    pub seed: Seed,
    /// `μ_word(start)` without relabeling; `seed` is a permutation of it.
    pub raw: Seed,
    /// `seed` position `p` holds `raw` index `perm[p]`.
    pub perm: Vec<usize>,
    pub word: MutationWord,
    pub depth: usize,
}

/// Directed edge: mutating `from` at canonical index `from_index` yields
/// `to`, in which the new variable sits at `to_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExchangeEdge {
    pub from: usize,
    pub from_index: usize,
    pub to: usize,
    pub to_index: usize,
}

impl ExchangeEdge {
    pub fn reversed(self) -> Self {
        Self { from: self.to, from_index: self.to_index, to: self.from, to_index: self.from_index }
    }
}

#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    pub nodes: Vec<ExchangeNode>,
    index: HashMap<String, usize>,
    /// Both orientations of every mutation edge between discovered nodes.
    pub edges: BTreeSet<ExchangeEdge>,
    pub depth_reached: usize,
    /// The frontier emptied before any bound was hit.
    pub closed: bool,
}

impl ExchangeGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len() / 2
    }

    pub fn node(&self, key: &str) -> Option<&ExchangeNode> {
        self.index.get(key).map(|&i| &self.nodes[i])
    }

    pub fn collect_cluster_variables(&self) -> VariableInventory {
        let mut vars = BTreeMap::new();
        for node in &self.nodes {
            for x in node.seed.cluster() {
                vars.entry(x.format(node.seed.registry())).or_insert_with(|| x.clone());
            }
        }
        VariableInventory { vars }
    }

    pub fn report(&self) -> GraphReport {
        GraphReport {
            closed: self.closed,
            seeds: self.node_count(),
            edges: self.edge_count(),
            depth_reached: self.depth_reached,
            variables: self.collect_cluster_variables().names(),
        }
    }
}

/// Cluster variables seen during exploration, keyed and ordered by their
/// canonical text form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VariableInventory {
    vars: BTreeMap<String, LaurentPoly>,
}

impl VariableInventory {
    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn contains(&self, text: &str) -> bool {
        self.vars.contains_key(text)
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.keys().cloned().collect()
    }

    pub fn polys(&self) -> Vec<LaurentPoly> {
        self.vars.values().cloned().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub closed: bool,
    pub seeds: usize,
    pub edges: usize,
    pub depth_reached: usize,
    pub variables: Vec<String>,
}

/// Breadth-first search from `canonical_form(seed)`, mutating every node at
/// every index. Nodes at depth `max_depth` are not expanded, but any unseen
/// neighbor of theirs marks the graph as not closed. Within a level, nodes
/// are expanded in canonical-key order.
pub fn explore_exchange_graph(seed: &Seed, max_depth: usize, max_seeds: usize) -> Result<ExchangeGraph> {
    let start = seed.canonical_form();
    let mut g = ExchangeGraph {
        nodes: Vec::new(),
        index: HashMap::new(),
        edges: BTreeSet::new(),
        depth_reached: 0,
        closed: true,
    };
    if max_seeds == 0 {
        g.closed = false;
        return Ok(g);
    }
    g.index.insert(start.key.clone(), 0);
    g.nodes.push(ExchangeNode {
        key: start.key,
        seed: start.seed,
        raw: seed.clone(),
        perm: start.perm,
        word: MutationWord::empty(),
        depth: 0,
    });

    let mut level = vec![0usize];
    while !level.is_empty() {
        level.sort_by(|&a, &b| g.nodes[a].key.cmp(&g.nodes[b].key));
        let mut next = Vec::new();
        for &id in &level {
            let node = g.nodes[id].clone();
            for k in 0..node.seed.rank() {
                let r = node.perm[k];
                let child_raw = node.raw.mutate(r).map_err(|e| annotate(e, &node.word.push(r)))?;
                let child = child_raw.canonical_form();
                let to_index = child.perm.iter().position(|&p| p == r).expect("perm is a bijection");
                let target = match g.index.get(&child.key) {
                    Some(&t) => t,
                    None if node.depth >= max_depth || g.nodes.len() >= max_seeds => {
                        g.closed = false;
                        continue;
                    }
                    None => {
                        let t = g.nodes.len();
                        g.index.insert(child.key.clone(), t);
                        g.nodes.push(ExchangeNode {
                            key: child.key,
                            seed: child.seed,
                            raw: child_raw,
                            perm: child.perm,
                            word: node.word.push(r),
                            depth: node.depth + 1,
                        });
                        g.depth_reached = g.depth_reached.max(node.depth + 1);
                        next.push(t);
                        t
                    }
                };
                let e = ExchangeEdge { from: id, from_index: k, to: target, to_index };
                g.edges.insert(e);
                g.edges.insert(e.reversed());
            }
        }
        level = next;
    }
    Ok(g)
}

fn annotate(e: Error, word: &MutationWord) -> Error {
    match e {
        Error::LaurentViolation { detail, .. } => {
            Error::LaurentViolation { word: word.to_string(), step: word.len(), detail }
        }
        other => other,
    }
}

pub fn collect_cluster_variables(g: &ExchangeGraph) -> VariableInventory {
    g.collect_cluster_variables()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FiniteType {
    Finite,
    Unknown,
}

/// `Finite` iff the unbounded-depth search closes within `max_seeds`.
pub fn is_finite_type(seed: &Seed, max_seeds: usize) -> Result<FiniteType> {
    let g = explore_exchange_graph(seed, usize::MAX, max_seeds)?;
    Ok(if g.closed { FiniteType::Finite } else { FiniteType::Unknown })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub word: String,
    pub depth: usize,
    /// Largest term count among the cluster expressions reached.
    pub max_terms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub words: usize,
    pub max_depth: usize,
    pub max_terms: usize,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    fn from_entries(entries: Vec<AuditEntry>) -> Self {
        Self {
            words: entries.len(),
            max_depth: entries.iter().map(|e| e.depth).max().unwrap_or(0),
            max_terms: entries.iter().map(|e| e.max_terms).max().unwrap_or(0),
            entries,
        }
    }
}

fn max_terms(seed: &Seed) -> usize {
    seed.cluster().iter().map(LaurentPoly::len).max().unwrap_or(0)
}

/// Applies every word, failing with `LaurentViolation` (carrying the word
/// and step) if any exact division fails.
pub fn laurent_audit(seed: &Seed, words: &[MutationWord]) -> Result<AuditReport> {
    let mut entries = Vec::with_capacity(words.len());
    for w in words {
        let t = seed.mutate_word(w)?;
        entries.push(AuditEntry { word: w.to_string(), depth: w.len(), max_terms: max_terms(&t) });
    }
    Ok(AuditReport::from_entries(entries))
}

/// Audits every word of length `0..=max_len`, sharing work between words
/// with a common prefix. Entries are in depth-first lexicographic order.
pub fn laurent_audit_all(seed: &Seed, max_len: usize) -> Result<AuditReport> {
    fn walk(seed: &Seed, word: &MutationWord, left: usize, out: &mut Vec<AuditEntry>) -> Result<()> {
        out.push(AuditEntry { word: word.to_string(), depth: word.len(), max_terms: max_terms(seed) });
        if left == 0 {
            return Ok(());
        }
        for k in 0..seed.rank() {
            let w = word.push(k);
            let next = seed.mutate(k).map_err(|e| annotate(e, &w))?;
            walk(&next, &w, left - 1, out)?;
        }
        Ok(())
    }
    let mut entries = Vec::new();
    walk(seed, &MutationWord::empty(), max_len, &mut entries)?;
    Ok(AuditReport::from_entries(entries))
}

/// `count` uniformly random words with lengths in `0..=max_len`.
pub fn random_words(rank: usize, count: usize, max_len: usize, rng_seed: u64) -> Vec<MutationWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    if rank == 0 {
        return vec![MutationWord::empty(); count];
    }
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            MutationWord((0..len).map(|_| rng.gen_range(0..rank)).collect())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seed(rows: &[Vec<i64>]) -> Seed {
        Seed::with_trivial_coefficients(rows).unwrap()
    }

    #[test]
    fn a2_closes_with_five_seeds() {
        let g = explore_exchange_graph(&seed(&[vec![0, -1], vec![1, 0]]), 10, 100).unwrap();
        assert!(g.closed);
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.edge_count(), 5);
        let vars = g.collect_cluster_variables();
        assert_eq!(
            vars.names(),
            vec![
                "x1",
                "x1*x2^-1 + x2^-1",
                "x1^-1*x2 + x1^-1",
                "x2",
                "x2^-1 + x1^-1 + x1^-1*x2^-1",
            ]
        );
    }

    #[test]
    fn edges_are_symmetric() {
        let g = explore_exchange_graph(&seed(&[vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]), 20, 100)
            .unwrap();
        assert_eq!(g.edge_count(), 21);
        for e in &g.edges {
            assert!(g.edges.contains(&e.reversed()));
        }
    }

    #[test]
    fn bounds_stop_the_search() {
        let kron = seed(&[vec![0, 2], vec![-2, 0]]);
        let g = explore_exchange_graph(&kron, 6, 100).unwrap();
        assert!(!g.closed);
        assert_eq!(g.depth_reached, 6);
        let g = explore_exchange_graph(&kron, 100, 4).unwrap();
        assert!(!g.closed);
        assert_eq!(g.node_count(), 4);
        let g = explore_exchange_graph(&kron, 0, 100).unwrap();
        assert_eq!(g.node_count(), 1);
        assert!(!g.closed);
    }

    #[test]
    fn rank_zero_is_trivially_closed() {
        let s = seed(&[]);
        let g = explore_exchange_graph(&s, 5, 10).unwrap();
        assert!(g.closed);
        assert_eq!(g.node_count(), 1);
        assert!(g.collect_cluster_variables().is_empty());
        assert_eq!(is_finite_type(&s, 10).unwrap(), FiniteType::Finite);
    }

    #[test]
    fn finite_type_detection() {
        assert_eq!(is_finite_type(&seed(&[vec![0, -1], vec![1, 0]]), 100).unwrap(), FiniteType::Finite);
        assert_eq!(is_finite_type(&seed(&[vec![0, 2], vec![-2, 0]]), 50).unwrap(), FiniteType::Unknown);
    }

    #[test]
    fn audit_examples() {
        let a2 = seed(&[vec![0, -1], vec![1, 0]]);
        let r = laurent_audit_all(&a2, 5).unwrap();
        assert_eq!(r.words, 63);
        assert_eq!(r.max_depth, 5);
        let r = laurent_audit(&a2, &[MutationWord::empty()]).unwrap();
        assert_eq!(r.entries[0], AuditEntry { word: String::new(), depth: 0, max_terms: 1 });
        let kron = seed(&[vec![0, 2], vec![-2, 0]]);
        let words = random_words(2, 20, 8, 7);
        assert_eq!(laurent_audit(&kron, &words).unwrap().words, 20);
    }

    #[test]
    fn random_words_are_deterministic() {
        assert_eq!(random_words(3, 10, 5, 1), random_words(3, 10, 5, 1));
        assert!(random_words(3, 50, 5, 1).iter().all(|w| w.len() <= 5 && w.check_rank(3).is_ok()));
    }
}
