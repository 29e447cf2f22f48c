use std::fmt;

use serde::Serialize;

/// Index of a variable in a [`Registry`]. Declaration order is the order
/// used by the global term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VarId(pub u32);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VarKind {
    Mutable,
    /// Generator of the tropical coefficient semifield.
    FrozenCoefficient,
    /// A cluster variable that has been moved into the coefficients by freezing.
    FrozenCluster,
}

impl VarKind {
    pub fn is_frozen(self) -> bool {
        !matches!(self, VarKind::Mutable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarInfo {
    pub name: String,
    pub kind: VarKind,
}

/// Ordered, named variable set shared by every polynomial of one algebra.
///
/// Freezing never edits a registry in place: it builds a new one in which
/// the frozen variables carry [`VarKind::FrozenCluster`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Registry {
    vars: Vec<VarInfo>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a registry with `mutable` names followed by frozen coefficient names.
    pub fn with_names<S: AsRef<str>>(mutable: &[S], frozen: &[S]) -> Result<Self, String> {
        let mut reg = Registry::new();
        for name in mutable {
            reg.declare(name.as_ref(), VarKind::Mutable)?;
        }
        for name in frozen {
            reg.declare(name.as_ref(), VarKind::FrozenCoefficient)?;
        }
        Ok(reg)
    }

    pub fn declare(&mut self, name: &str, kind: VarKind) -> Result<VarId, String> {
        if !is_identifier(name) {
            return Err(format!("`{name}` is not a valid variable name"));
        }
        if self.lookup(name).is_some() {
            return Err(format!("duplicate variable name `{name}`"));
        }
        self.vars.push(VarInfo { name: name.to_string(), kind });
        Ok(VarId(self.vars.len() as u32 - 1))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.vars.iter().position(|v| v.name == name).map(|i| VarId(i as u32))
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.vars[id.index()].name
    }

    pub fn kind(&self, id: VarId) -> VarKind {
        self.vars[id.index()].kind
    }

    pub fn ids(&self) -> impl Iterator<Item = VarId> + '_ {
        (0..self.vars.len()).map(|i| VarId(i as u32))
    }

    pub fn ids_of_kind(&self, kind: VarKind) -> impl Iterator<Item = VarId> + '_ {
        self.ids().filter(move |&id| self.kind(id) == kind)
    }

    /// Returns a copy with the given variables demoted to frozen cluster variables.
    pub fn with_frozen(&self, ids: &[VarId]) -> Registry {
        let mut out = self.clone();
        for id in ids {
            out.vars[id.index()].kind = VarKind::FrozenCluster;
        }
        out
    }
}

impl fmt::Display for Registry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|v| v.name.as_str()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
