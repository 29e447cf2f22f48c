//! Browser bindings. Each operation takes the JSON seed text from the page
//! and returns the plain-text report shown to the user.

use cluster_core::cli::{self, Target};
use cluster_core::{MutationWord, Seed};
use wasm_bindgen::prelude::*;

fn load(seed_json: &str) -> Result<Seed, String> {
    cli::parse_seed_str(seed_json).map_err(|e| e.to_string())
}

pub fn mutate_text(seed_json: &str, word: &str) -> Result<String, String> {
    let seed = load(seed_json)?;
    let word: MutationWord = word.parse().map_err(|e: cluster_core::Error| e.to_string())?;
    cli::mutate(&seed, &word).map(|r| r.text).map_err(|e| e.to_string())
}

pub fn explore_text(seed_json: &str, max_depth: usize) -> Result<String, String> {
    let seed = load(seed_json)?;
    let summary = cli::explore(&seed, max_depth, 2000).map_err(|e| e.to_string())?;
    let vars = cli::vars(&seed, max_depth, 2000).map_err(|e| e.to_string())?;
    Ok(format!("{}\ncluster variables:\n{}", summary.text, vars.text))
}

pub fn member_text(seed_json: &str, element: &str, target: &str, depth: usize) -> Result<String, String> {
    let seed = load(seed_json)?;
    let target = match target {
        "A" => Target::A,
        "U" => Target::U,
        other => return Err(format!("unknown target `{other}`, expected A or U")),
    };
    cli::member(&seed, element, target, depth).map(|r| r.text).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn mutate(seed_json: &str, word: &str) -> Result<String, JsValue> {
    mutate_text(seed_json, word).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn explore(seed_json: &str, max_depth: usize) -> Result<String, JsValue> {
    explore_text(seed_json, max_depth).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn member(seed_json: &str, element: &str, target: &str, depth: usize) -> Result<String, JsValue> {
    member_text(seed_json, element, target, depth).map_err(|e| JsValue::from_str(&e))
}
