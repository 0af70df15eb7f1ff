//! JSON file formats and a name-indexed workspace of loaded algebras.
//!
//! Every table is a nested array of element indices and element 0 is the
//! zero. Files written here re-serialize to identical bytes after parsing.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::actions::ActionTriple;
use crate::algebra::{FiniteGwa, GwaMorphism};
use crate::error::{Error, Result};
use crate::ideals::SubsetMask;
use crate::semidirect::SplitExtension;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub act: Vec<Vec<usize>>,
}

impl AlgebraFile {
    pub fn from_algebra(g: &FiniteGwa) -> Self {
        AlgebraFile {
            name: g.name().to_owned(),
            order: g.order(),
            add: g.group().add_rows(),
            neg: g.group().neg_vec().to_vec(),
            act: g.act_rows(),
        }
    }

    /// Structural checks only; the laws are left to the validators.
    pub fn into_algebra(self) -> Result<FiniteGwa> {
        if self.order != self.add.len() {
            return Err(Error::Dimension {
                what: "add".into(),
                expected: self.order,
                found: self.add.len(),
            });
        }
        FiniteGwa::new(self.name, self.add, self.neg, self.act)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetFile {
    pub algebra: String,
    pub members: Vec<usize>,
}

impl SubsetFile {
    pub fn from_subset(s: &SubsetMask) -> Self {
        SubsetFile {
            algebra: s.parent().name().to_owned(),
            members: s.indices(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub actor: String,
    pub target: String,
    pub dot: Vec<Vec<usize>>,
    pub star: Vec<Vec<usize>>,
    pub dual: Vec<Vec<usize>>,
}

impl ActionFile {
    pub fn from_triple(t: &ActionTriple) -> Self {
        ActionFile {
            actor: t.actor().name().to_owned(),
            target: t.target().name().to_owned(),
            dot: t.dot_rows(),
            star: t.star_rows(),
            dual: t.dual_rows(),
        }
    }
}

/// `A --i--> E --p--> B` with section `j`, by algebra name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionFile {
    pub a: String,
    pub e: String,
    pub b: String,
    pub i: Vec<usize>,
    pub p: Vec<usize>,
    pub j: Vec<usize>,
}

impl ExtensionFile {
    pub fn from_extension(x: &SplitExtension) -> Self {
        ExtensionFile {
            a: x.a.name().to_owned(),
            e: x.e.name().to_owned(),
            b: x.b.name().to_owned(),
            i: x.i.map.clone(),
            p: x.p.map.clone(),
            j: x.j.map.clone(),
        }
    }
}

/// Indented JSON with arrays of scalars on one line, so each table row
/// takes one line.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("plain data serializes");
    let mut s = String::new();
    write_value(&mut s, &v, 0);
    s.push('\n');
    s
}

fn write_value(s: &mut String, v: &Value, depth: usize) {
    let pad = |s: &mut String, d: usize| s.extend(std::iter::repeat_n("  ", d));
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            s.push('[');
            for (k, x) in items.iter().enumerate() {
                if k > 0 {
                    s.push_str(", ");
                }
                s.push_str(&x.to_string());
            }
            s.push(']');
        }
        Value::Array(items) => {
            s.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                pad(s, depth + 1);
                write_value(s, x, depth + 1);
                s.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(s, depth);
            s.push(']');
        }
        Value::Object(map) if map.is_empty() => s.push_str("{}"),
        Value::Object(map) => {
            s.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                pad(s, depth + 1);
                s.push_str(&Value::String(key.clone()).to_string());
                s.push_str(": ");
                write_value(s, x, depth + 1);
                s.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(s, depth);
            s.push('}');
        }
        scalar => s.push_str(&scalar.to_string()),
    }
}

pub fn from_json<T: DeserializeOwned>(source: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json {
        path: source.to_owned(),
        source: e,
    })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    from_json(&path.display().to_string(), &text)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json(value)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })
}

pub fn read_algebra(path: &Path) -> Result<FiniteGwa> {
    read_json::<AlgebraFile>(path)?.into_algebra()
}

pub fn write_algebra(path: &Path, g: &FiniteGwa) -> Result<()> {
    write_json(path, &AlgebraFile::from_algebra(g))
}

/// Algebras by name. References in subset, action and extension files are
/// resolved against it.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    algebras: BTreeMap<String, Arc<FiniteGwa>>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, g: FiniteGwa) -> Result<Arc<FiniteGwa>> {
        if self.algebras.contains_key(g.name()) {
            return Err(Error::DuplicateAlgebra(g.name().to_owned()));
        }
        let g = Arc::new(g);
        self.algebras.insert(g.name().to_owned(), g.clone());
        Ok(g)
    }

    /// Loads an algebra file. Loading the same algebra twice returns the
    /// existing entry; a different algebra under a taken name is an error.
    pub fn load(&mut self, path: &Path) -> Result<Arc<FiniteGwa>> {
        let g = read_algebra(path)?;
        match self.algebras.get(g.name()) {
            Some(old) if **old == g => Ok(old.clone()),
            _ => self.insert(g),
        }
    }

    pub fn get(&self, name: &str) -> Result<&Arc<FiniteGwa>> {
        self.algebras
            .get(name)
            .ok_or_else(|| Error::UnknownAlgebra(name.to_owned()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.algebras.keys().map(String::as_str)
    }

    pub fn subset(&self, f: &SubsetFile) -> Result<SubsetMask> {
        SubsetMask::from_indices(self.get(&f.algebra)?.clone(), &f.members)
    }

    pub fn triple(&self, f: &ActionFile) -> Result<ActionTriple> {
        let actor = self.get(&f.actor)?.clone();
        let target = self.get(&f.target)?.clone();
        ActionTriple::new(actor, target, f.dot.clone(), f.star.clone(), f.dual.clone())
    }

    pub fn extension(&self, f: &ExtensionFile) -> Result<SplitExtension> {
        let (a, e, b) = (self.get(&f.a)?, self.get(&f.e)?, self.get(&f.b)?);
        let i = GwaMorphism::new(a.clone(), e.clone(), f.i.clone())?;
        let p = GwaMorphism::new(e.clone(), b.clone(), f.p.clone())?;
        let j = GwaMorphism::new(b.clone(), e.clone(), f.j.clone())?;
        SplitExtension::new(i, p, j)
    }
}
