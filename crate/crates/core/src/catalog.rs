//! Named diagrams. Entries come from a plain text table, one per line:
//! a name, a code (possibly empty), and an optional free-form note after
//! the code, separated by runs of spaces. `vsigma-<n>` names the closure of
//! vσ^{2n} for any n ≥ 1.

use std::path::Path;

use crate::diagram::VirtualLinkDiagram;
use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("../data/catalog.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub code: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<Entry>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::bundled()
    }
}

impl Catalog {
    pub fn bundled() -> Self {
        Catalog::parse(BUNDLED).expect("bundled catalog is valid")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = vec![];
        for line in text.lines() {
            if line.trim_start().starts_with('#') || line.trim().is_empty() {
                continue;
            }
            let mut fields = line.splitn(2, char::is_whitespace);
            let name = fields.next().unwrap_or_default().to_string();
            let rest = fields.next().unwrap_or_default().trim();
            let (code, note) = match rest.find("   ") {
                Some(k) => (rest[..k].trim(), rest[k..].trim()),
                None => (rest, ""),
            };
            VirtualLinkDiagram::parse(code)?;
            entries.push(Entry { name, code: code.to_string(), note: note.to_string() });
        }
        Ok(Catalog { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("{}: {e}", path.display())))?;
        Catalog::parse(&text)
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Result<VirtualLinkDiagram> {
        if let Some(n) = name.strip_prefix("vsigma-") {
            let n: usize = n.parse().map_err(|_| Error::UnknownEntry(name.to_string()))?;
            if n == 0 {
                return Err(Error::UnknownEntry(name.to_string()));
            }
            return Ok(vsigma_closure(n).with_name(name));
        }
        let e = self
            .entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
        Ok(VirtualLinkDiagram::parse(&e.code)?.with_name(name))
    }

    /// Every named diagram, plus `vsigma-1` and `vsigma-2`.
    pub fn diagrams(&self) -> Vec<VirtualLinkDiagram> {
        let mut out: Vec<_> = self.entries.iter().map(|e| self.get(&e.name).unwrap()).collect();
        out.push(self.get("vsigma-1").unwrap());
        out.push(self.get("vsigma-2").unwrap());
        out
    }
}

/// Closure of vσ^{2n}: the two strands cross 2n times positively, with a
/// virtual crossing closing them into one component.
pub fn vsigma_closure(n: usize) -> VirtualLinkDiagram {
    let m = 2 * n;
    let mut code = String::new();
    for k in 1..=m {
        code += &format!("{}{k}+", if k % 2 == 1 { 'O' } else { 'U' });
    }
    for k in 1..=m {
        code += &format!("{}{k}+", if k % 2 == 1 { 'U' } else { 'O' });
    }
    code.parse().expect("vσ closures are valid codes")
}
