//! Named registry of fixtures backed by a directory of `<name>.json` files.
//!
//! Every file is resolved at load, so a dangling or cyclic reference is an
//! input error before any command runs. Built-in fixtures are available under
//! fixed names and may be shadowed by files.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use matchrb::deformation::{MdaDeformation, MrrbaDeformation};
use matchrb::dendriform::MatchingDendriform;
use matchrb::homotopy::{HomotopyMda, HomotopyMrrba};
use matchrb::io::Document;
use matchrb::operad::OperadElement;
use matchrb::operators::RMatrixFamily;
use matchrb::{fixtures, Algebra, Bimodule, LabelSet, LinearMap, OperatorFamily, Vector};

use crate::error::CliError;

#[derive(Clone, Debug)]
pub enum Object {
    Algebra(Arc<Algebra>),
    Bimodule(Arc<Bimodule>),
    Family(OperatorFamily),
    RMatrix(RMatrixFamily),
    Dendriform(MatchingDendriform),
    Map(LinearMap),
    Elements(LabelSet, Vec<Vector>),
    Deformation(MrrbaDeformation),
    MdaDeformation(MdaDeformation),
    Operad(OperadElement),
    HomotopyMda(HomotopyMda),
    HomotopyMrrba(HomotopyMrrba),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::Bimodule(_) => "bimodule",
            Object::Family(_) => "operator-family",
            Object::RMatrix(_) => "r-matrix",
            Object::Dendriform(_) => "dendriform",
            Object::Map(_) => "linear-map",
            Object::Elements(..) => "elements",
            Object::Deformation(_) => "deformation",
            Object::MdaDeformation(_) => "mda-deformation",
            Object::Operad(_) => "operad-element",
            Object::HomotopyMda(_) => "homotopy-mda",
            Object::HomotopyMrrba(_) => "homotopy-mrrba",
        }
    }
}

pub fn builtins() -> Vec<(&'static str, Object)> {
    vec![
        ("p1", Object::Family(fixtures::p1())),
        ("upper-triangular", Object::Algebra(Arc::new(fixtures::upper_triangular()))),
        ("upper-triangular-rb", Object::Family(fixtures::upper_triangular_rb())),
        ("idempotent-line", Object::Algebra(Arc::new(fixtures::idempotent_line()))),
        ("zero-context", Object::Family(fixtures::zero_context(1, 1, 2))),
        ("aybe-solution", Object::RMatrix(fixtures::aybe_solution())),
    ]
}

pub struct Workspace {
    dir: PathBuf,
    objects: BTreeMap<String, Object>,
}

impl Workspace {
    /// Loads every `*.json` file of `dir`; a missing directory is empty.
    pub fn load(dir: &Path) -> Result<Self, CliError> {
        let mut docs = BTreeMap::new();
        if dir.is_dir() {
            for entry in fs::read_dir(dir)? {
                let path = entry?.path();
                if path.extension().and_then(|e| e.to_str()) != Some("json") {
                    continue;
                }
                let Some(name) = path.file_stem().and_then(|s| s.to_str()) else { continue };
                if name.starts_with('.') {
                    continue;
                }
                let text = fs::read_to_string(&path)?;
                let doc: Document = serde_json::from_str(&text).map_err(|e| CliError::Parse { file: path.clone(), source: e })?;
                docs.insert(name.to_string(), doc);
            }
        }
        let mut ws = Workspace { dir: dir.to_path_buf(), objects: BTreeMap::new() };
        for (name, obj) in builtins() {
            if !docs.contains_key(name) {
                ws.objects.insert(name.to_string(), obj);
            }
        }
        let names: Vec<String> = docs.keys().cloned().collect();
        for name in names {
            ws.resolve(&name, &docs, &mut HashSet::new())?;
        }
        Ok(ws)
    }

    fn resolve(&mut self, name: &str, docs: &BTreeMap<String, Document>, active: &mut HashSet<String>) -> Result<(), CliError> {
        if self.objects.contains_key(name) {
            return Ok(());
        }
        let doc = docs.get(name).ok_or_else(|| CliError::UnknownTarget(name.to_string()))?;
        if !active.insert(name.to_string()) {
            return Err(CliError::Cycle(name.to_string()));
        }
        for dep in doc.references() {
            self.resolve(dep, docs, active)?;
        }
        active.remove(name);
        let obj = match doc {
            Document::Algebra(d) => Object::Algebra(Arc::new(d.build()?)),
            Document::Bimodule(d) => Object::Bimodule(Arc::new(d.build(self.algebra(&d.algebra)?)?)),
            Document::OperatorFamily(d) => Object::Family(d.build(self.bimodule(&d.module)?)?),
            Document::RMatrix(d) => Object::RMatrix(d.build(self.algebra(&d.algebra)?)?),
            Document::Dendriform(d) => Object::Dendriform(d.build()?),
            Document::LinearMap(d) => Object::Map(d.build()?),
            Document::Elements(d) => {
                let (labels, elems) = d.build()?;
                Object::Elements(labels, elems)
            }
            Document::Deformation(d) => Object::Deformation(d.build(self.family(&d.base)?)?),
            Document::MdaDeformation(d) => Object::MdaDeformation(d.build(self.dendriform(&d.base)?)?),
            Document::OperadElement(d) => Object::Operad(d.build()?),
            Document::HomotopyMda(d) => Object::HomotopyMda(d.build()?),
            Document::HomotopyMrrba(d) => Object::HomotopyMrrba(d.build()?),
        };
        self.objects.insert(name.to_string(), obj);
        Ok(())
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn get(&self, name: &str) -> Result<&Object, CliError> {
        self.objects.get(name).ok_or_else(|| CliError::UnknownTarget(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.objects.keys()
    }

    fn wrong(&self, name: &str, expected: &'static str) -> CliError {
        let found = self.objects.get(name).map_or("nothing", Object::kind);
        CliError::WrongKind { name: name.to_string(), expected, found }
    }

    /// An algebra, or the algebra underlying a bimodule or family.
    pub fn algebra(&self, name: &str) -> Result<Arc<Algebra>, CliError> {
        match self.get(name)? {
            Object::Algebra(a) => Ok(a.clone()),
            Object::Bimodule(m) => Ok(m.algebra.clone()),
            Object::Family(f) => Ok(f.algebra().clone()),
            Object::RMatrix(r) => Ok(r.algebra.clone()),
            _ => Err(self.wrong(name, "algebra")),
        }
    }

    /// A bimodule, or the bimodule of a family.
    pub fn bimodule(&self, name: &str) -> Result<Arc<Bimodule>, CliError> {
        match self.get(name)? {
            Object::Bimodule(m) => Ok(m.clone()),
            Object::Family(f) => Ok(f.module.clone()),
            _ => Err(self.wrong(name, "bimodule")),
        }
    }

    pub fn family(&self, name: &str) -> Result<OperatorFamily, CliError> {
        match self.get(name)? {
            Object::Family(f) => Ok(f.clone()),
            _ => Err(self.wrong(name, "operator-family")),
        }
    }

    pub fn rmatrix(&self, name: &str) -> Result<RMatrixFamily, CliError> {
        match self.get(name)? {
            Object::RMatrix(r) => Ok(r.clone()),
            _ => Err(self.wrong(name, "r-matrix")),
        }
    }

    pub fn dendriform(&self, name: &str) -> Result<MatchingDendriform, CliError> {
        match self.get(name)? {
            Object::Dendriform(d) => Ok(d.clone()),
            _ => Err(self.wrong(name, "dendriform")),
        }
    }

    pub fn map(&self, name: &str) -> Result<LinearMap, CliError> {
        match self.get(name)? {
            Object::Map(m) => Ok(m.clone()),
            _ => Err(self.wrong(name, "linear-map")),
        }
    }

    pub fn elements(&self, name: &str) -> Result<(LabelSet, Vec<Vector>), CliError> {
        match self.get(name)? {
            Object::Elements(l, e) => Ok((l.clone(), e.clone())),
            _ => Err(self.wrong(name, "elements")),
        }
    }

    pub fn homotopy_mda(&self, name: &str) -> Result<HomotopyMda, CliError> {
        match self.get(name)? {
            Object::HomotopyMda(h) => Ok(h.clone()),
            Object::Dendriform(d) => Ok(HomotopyMda::from_dendriform(d)),
            _ => Err(self.wrong(name, "homotopy-mda")),
        }
    }

    pub fn homotopy_mrrba(&self, name: &str) -> Result<HomotopyMrrba, CliError> {
        match self.get(name)? {
            Object::HomotopyMrrba(h) => Ok(h.clone()),
            Object::Family(f) => Ok(HomotopyMrrba::from_family(f)),
            _ => Err(self.wrong(name, "homotopy-mrrba")),
        }
    }
}

/// Writes `<dir>/<name>.json` through a temporary file and a rename, so
/// readers never see a partial document.
pub fn write_atomic(dir: &Path, name: &str, doc: &Document) -> Result<PathBuf, CliError> {
    if name.is_empty() || name.starts_with('.') || name.contains(['/', '\\']) {
        return Err(CliError::Usage(format!("invalid fixture name {name:?}")));
    }
    fs::create_dir_all(dir)?;
    let target = dir.join(format!("{name}.json"));
    let tmp = dir.join(format!(".{name}.json.tmp"));
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    fs::write(&tmp, text)?;
    fs::rename(&tmp, &target)?;
    Ok(target)
}
