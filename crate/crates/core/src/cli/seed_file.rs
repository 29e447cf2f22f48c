use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, Registry, TropMonomial, VarId};
use crate::error::{Error, Result};
use crate::seed::Seed;

/// JSON seed description.
///
/// `coeff_exponents` has one row per frozen variable: `y_j = ∏ u_i^{c_ij}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedFile {
    #[serde(default)]
    pub name: String,
    pub mutable: Vec<String>,
    #[serde(default)]
    pub frozen: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(default)]
    pub coeff_exponents: Vec<Vec<i64>>,
}

impl SeedFile {
    pub fn to_seed(&self) -> Result<Seed> {
        let n = self.mutable.len();
        let m = self.frozen.len();
        check_shape("B", &self.b, n, n)?;
        check_shape("coeff_exponents", &self.coeff_exponents, m, n)?;
        let registry = Registry::with_names(&self.mutable, &self.frozen).map_err(|e| Error::parse("names", e))?;
        let coeffs = (0..n)
            .map(|j| {
                let pairs = self.coeff_exponents.iter().enumerate().map(|(i, row)| {
                    let e = i32::try_from(row[j]).map_err(|_| {
                        Error::parse(format!("coeff_exponents[{i}][{j}]"), "exponent out of range")
                    })?;
                    Ok((VarId((n + i) as u32), e))
                });
                Ok(TropMonomial::new(Monomial::from_pairs(pairs.collect::<Result<Vec<_>>>()?)))
            })
            .collect::<Result<Vec<_>>>()?;
        Seed::initial(registry, coeffs, &self.b)
    }

    /// The seed file describing an initial seed.
    pub fn from_seed(name: &str, seed: &Seed) -> Result<Self> {
        if !seed.is_initial() {
            return Err(Error::NotInitialSeed);
        }
        let reg = seed.registry();
        let mutable: Vec<VarId> = seed.cluster().iter().map(|x| x.as_variable().expect("initial")).collect();
        let frozen: Vec<VarId> = reg.ids().filter(|&v| reg.kind(v).is_frozen()).collect();
        Ok(Self {
            name: name.to_string(),
            mutable: mutable.iter().map(|&v| reg.name(v).to_string()).collect(),
            frozen: frozen.iter().map(|&v| reg.name(v).to_string()).collect(),
            b: seed.matrix().rows(),
            coeff_exponents: frozen
                .iter()
                .map(|&u| seed.coeffs().iter().map(|y| i64::from(y.exponent(u))).collect())
                .collect(),
        })
    }
}

fn check_shape(field: &str, rows: &[Vec<i64>], n_rows: usize, n_cols: usize) -> Result<()> {
    if rows.len() != n_rows {
        return Err(Error::parse(field, format!("expected {n_rows} rows, found {}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n_cols {
            return Err(Error::parse(format!("{field}[{i}]"), format!("expected {n_cols} entries, found {}", row.len())));
        }
    }
    Ok(())
}

pub fn parse_seed_str(text: &str) -> Result<Seed> {
    let file: SeedFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    file.to_seed()
}

pub fn parse_seed_file(path: impl AsRef<Path>) -> Result<Seed> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    parse_seed_str(&text)
}
