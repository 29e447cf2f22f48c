use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A sequence of mutation indices, stored 0-based and written 1-based
/// (`"1,2,1"`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct MutationWord(pub Vec<usize>);

impl MutationWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn push(&self, k: usize) -> Self {
        let mut w = self.0.clone();
        w.push(k);
        Self(w)
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&k| k >= rank) {
            Some(&k) => Err(Error::IndexOutOfRange { index: k + 1, rank }),
            None => Ok(()),
        }
    }

    /// Every word of exactly `len` letters over `0..rank`, in lexicographic order.
    pub fn all_of_length(rank: usize, len: usize) -> Vec<MutationWord> {
        let mut out = vec![MutationWord::empty()];
        for _ in 0..len {
            out = out.iter().flat_map(|w| (0..rank).map(move |k| w.push(k))).collect();
        }
        if rank == 0 && len > 0 {
            out.clear();
        }
        out
    }
}

impl fmt::Display for MutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| (k + 1).to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MutationWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        s.split(',')
            .map(|part| {
                let k: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse("mutation word", format!("`{part}` is not an index")))?;
                if k == 0 {
                    return Err(Error::parse("mutation word", "indices are 1-based"));
                }
                Ok(k - 1)
            })
            .collect::<Result<Vec<_>>>()
            .map(MutationWord)
    }
}
