use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::element::parse_element;
use crate::algebra::VarKind;
use crate::error::{Error, Result};
use crate::explore::{explore_exchange_graph, laurent_audit, laurent_audit_all, random_words};
use crate::locality::{
    acyclic_a_membership, au_differential, build_isolated_cover, freeze, upper_membership_bounded, MutationDigraph,
    WitnessReport,
};
use crate::seed::{MutationWord, Seed};

/// Whether a command's answer was affirmative; maps to the exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Yes,
    No,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub outcome: Outcome,
}

impl Report {
    fn yes(text: String, json: Value) -> Self {
        Self { text, json, outcome: Outcome::Yes }
    }

    /// The report in the requested format, newline-terminated.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn seed_json(seed: &Seed) -> Value {
    json!({
        "cluster": seed.cluster_strings(),
        "coefficients": seed.coeff_strings(),
        "B": seed.matrix().rows(),
    })
}

pub fn validate(seed: &Seed) -> Report {
    let reg = seed.registry();
    let frozen = reg.ids().filter(|&v| reg.kind(v).is_frozen()).count();
    let d = seed.matrix().symmetrizer().to_vec();
    let text = format!(
        "valid seed: rank {}, {} frozen, symmetrizer [{}]\n",
        seed.rank(),
        frozen,
        d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    );
    Report::yes(text, json!({ "valid": true, "rank": seed.rank(), "frozen": frozen, "symmetrizer": d }))
}

pub fn mutate(seed: &Seed, word: &MutationWord) -> Result<Report> {
    word.check_rank(seed.rank())?;
    let t = seed.mutate_word(word)?;
    let text = format!("word: [{word}]\n{t}\n");
    let mut j = seed_json(&t);
    j["word"] = json!(word.to_string());
    Ok(Report::yes(text, j))
}

pub fn explore(seed: &Seed, max_depth: usize, max_seeds: usize) -> Result<Report> {
    let g = explore_exchange_graph(seed, max_depth, max_seeds)?;
    let r = g.report();
    let mut text = format!(
        "{}, {} seeds, {} variables\n",
        if r.closed { "closed" } else { "not closed" },
        r.seeds,
        r.variables.len()
    );
    let _ = writeln!(text, "edges: {}, depth: {}", r.edges, r.depth_reached);
    Ok(Report::yes(text, to_json(&r)))
}

pub fn vars(seed: &Seed, max_depth: usize, max_seeds: usize) -> Result<Report> {
    let g = explore_exchange_graph(seed, max_depth, max_seeds)?;
    let names = g.collect_cluster_variables().names();
    let mut text: String = names.iter().map(|v| format!("{v}\n")).collect();
    if !g.closed {
        text.push_str("(exploration not closed; list may be incomplete)\n");
    }
    Ok(Report::yes(text, json!({ "closed": g.closed, "variables": names })))
}

pub fn is_acyclic(seed: &Seed) -> Report {
    match MutationDigraph::new(seed.matrix()).find_cycle() {
        None => Report::yes("acyclic\n".into(), json!({ "acyclic": true })),
        Some(cycle) => {
            let mut path: Vec<usize> = cycle.iter().map(|i| i + 1).collect();
            path.push(path[0]);
            let shown = path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" -> ");
            Report {
                text: format!("not acyclic: cycle {shown}\n"),
                json: json!({ "acyclic": false, "cycle": path }),
                outcome: Outcome::No,
            }
        }
    }
}

/// Indices of the named initial cluster variables.
pub fn resolve_names(seed: &Seed, names: &[String]) -> Result<Vec<usize>> {
    names
        .iter()
        .map(|name| {
            let v = seed.registry().lookup(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            if seed.registry().kind(v) != VarKind::Mutable {
                return Err(Error::InvalidSeed(format!("`{name}` is not a mutable variable")));
            }
            seed.cluster()
                .iter()
                .position(|x| x.as_variable() == Some(v))
                .ok_or_else(|| Error::InvalidSeed(format!("`{name}` is not in the current cluster")))
        })
        .collect()
}

pub fn freeze_names(seed: &Seed, names: &[String]) -> Result<Report> {
    let f = freeze(seed, &resolve_names(seed, names)?)?;
    let text = format!("{}\n{}\n", f.label(), f.seed());
    let mut j = seed_json(f.seed());
    j["label"] = json!(f.label());
    j["frozen"] = json!(f.frozen_names());
    Ok(Report::yes(text, j))
}

pub fn cover(seed: &Seed) -> Result<Report> {
    let leaves = build_isolated_cover(seed)?;
    let reports: Vec<_> = leaves.iter().map(|l| l.report()).collect();
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(
            text,
            "{}: mutable [{}], exchange constants [{}]",
            r.label,
            r.mutable.join(", "),
            r.exchange_constants.join(", ")
        );
    }
    Ok(Report::yes(text, json!({ "leaves": reports })))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    A,
    U,
}

pub fn member(seed: &Seed, element: &str, target: Target, depth: usize) -> Result<Report> {
    let a = parse_element(element, seed.registry())?;
    let verdict = match target {
        Target::A => acyclic_a_membership(seed, &a)?,
        Target::U => upper_membership_bounded(seed, &a, depth)?,
    };
    let report = verdict.report(seed.registry());
    let name = match target {
        Target::A => "A",
        Target::U => "U",
    };
    let mut text = format!(
        "{} {} {}\n",
        a.format(seed.registry()),
        if verdict.member { "is in" } else { "is not in" },
        name
    );
    if target == Target::U {
        let _ = writeln!(
            text,
            "checked {} clusters ({})",
            verdict.checked,
            if verdict.exhaustive { "exhaustive" } else { "not exhaustive" }
        );
    }
    if let Some(w) = &report.witness {
        match w {
            WitnessReport::Leaf { leaf, monomial, coefficient, divisor } => {
                let _ = writeln!(
                    text,
                    "witness: leaf {leaf}, coefficient of {monomial} is {coefficient}, not divisible by {divisor}"
                );
            }
            WitnessReport::Cluster { word, cluster, numerator, denominator } => {
                let _ = writeln!(
                    text,
                    "witness: cluster [{}] (word [{word}]): ({numerator}) / ({denominator}) is not Laurent",
                    cluster.join(", ")
                );
            }
        }
    }
    let mut j = to_json(&report);
    j["target"] = json!(name);
    j["element"] = json!(a.format(seed.registry()));
    Ok(Report { text, json: j, outcome: if verdict.member { Outcome::Yes } else { Outcome::No } })
}

pub fn check_au(seed: &Seed, samples: usize, rng_seed: u64) -> Result<Report> {
    let r = au_differential(seed, samples, rng_seed)?;
    let outcome = if r.all_agree() { Outcome::Yes } else { Outcome::No };
    Ok(Report { text: r.render(), json: to_json(&r), outcome })
}

/// Audits every word up to `depth`, or `random` (count, rng seed) random
/// words up to that length.
pub fn audit(seed: &Seed, depth: usize, random: Option<(usize, u64)>) -> Result<Report> {
    let r = match random {
        None => laurent_audit_all(seed, depth)?,
        Some((count, rng)) => laurent_audit(seed, &random_words(seed.rank(), count, depth, rng))?,
    };
    let text = format!(
        "{} words up to length {}: all Laurent (largest expression {} terms)\n",
        r.words, r.max_depth, r.max_terms
    );
    Ok(Report::yes(
        text,
        json!({ "words": r.words, "max_depth": r.max_depth, "max_terms": r.max_terms, "failures": 0 }),
    ))
}
