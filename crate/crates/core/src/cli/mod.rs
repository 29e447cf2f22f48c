//! Seed files, element expressions and the command layer shared by the
//! command-line tool and the browser demo.

mod commands;
mod element;
mod seed_file;

pub use commands::{
    audit, check_au, cover, explore, freeze_names, is_acyclic, member, mutate, resolve_names, validate, vars, Outcome,
    Report, Target,
};
pub use element::parse_element;
pub use seed_file::{parse_seed_file, parse_seed_str, SeedFile};
