//! JSON file formats, DOT output and the fixture directory.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::complex::{PrimeComplex, PrimeGraph, PrimeSimplex, Spectrum};
use crate::error::{Error, Result};

/// Environment variable naming the fixture directory.
pub const FIXTURES_ENV: &str = "PSC_FIXTURES";

/// Serializes a big natural as a decimal string.
pub fn serialize_decimal<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_str_radix(10))
}

pub fn serialize_decimal_list<S: Serializer>(
    ns: &[BigUint],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ns.iter().map(|n| n.to_str_radix(10)))
}

/// On-disk element-order list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumFile {
    pub name: String,
    pub orders: Vec<u64>,
    #[serde(default)]
    pub source: String,
}

impl SpectrumFile {
    /// Canonical file for `spectrum`: orders are the full divisor-closed set, ascending.
    pub fn new(name: impl Into<String>, spectrum: &Spectrum, source: impl Into<String>) -> Self {
        SpectrumFile {
            name: name.into(),
            orders: spectrum.orders().iter().copied().collect(),
            source: source.into(),
        }
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        if self.orders.is_empty() {
            return Err(Error::parse(format!("spectrum `{}`", self.name), "field `orders` is empty"));
        }
        Spectrum::new(self.orders.iter().copied())
            .map_err(|e| Error::parse(format!("spectrum `{}`", self.name), format!("field `orders`: {e}")))
    }

    /// Same file with `orders` replaced by the divisor closure.
    pub fn canonical(&self) -> Result<SpectrumFile> {
        Ok(SpectrumFile::new(self.name.clone(), &self.spectrum()?, self.source.clone()))
    }
}

/// On-disk complex: vertices and maximal simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: Vec<u64>,
    pub maximal: Vec<Vec<u64>>,
}

impl From<&PrimeComplex> for ComplexFile {
    fn from(c: &PrimeComplex) -> Self {
        ComplexFile {
            vertices: c.vertices().to_vec(),
            maximal: c.maximal().into_iter().map(Vec::from).collect(),
        }
    }
}

impl ComplexFile {
    /// Validates the file. The flag reports whether non-maximal simplices were dropped.
    pub fn to_complex(&self) -> Result<(PrimeComplex, bool)> {
        let faces = self
            .maximal
            .iter()
            .map(|f| {
                let mut sorted = f.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != f.len() {
                    return Err(Error::InvariantViolation(format!("simplex {f:?} repeats a prime")));
                }
                PrimeSimplex::new(sorted)
            })
            .collect::<Result<Vec<_>>>()?;
        PrimeComplex::from_parts(self.vertices.clone(), faces)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}

pub fn read_spectrum_file(path: &Path) -> Result<SpectrumFile> {
    let file: SpectrumFile = parse_json(path, &read(path)?)?;
    file.spectrum()
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    Ok(file)
}

pub fn load_spectrum(path: &Path) -> Result<Spectrum> {
    read_spectrum_file(path)?.spectrum()
}

/// Canonical spectrum JSON, newline terminated.
pub fn spectrum_json(file: &SpectrumFile) -> Result<String> {
    let canonical = file.canonical()?;
    Ok(serde_json::to_string(&canonical).expect("plain data serializes") + "\n")
}

pub fn save_spectrum(path: &Path, file: &SpectrumFile) -> Result<()> {
    write(path, &spectrum_json(file)?)
}

/// Loads a complex; the flag reports whether the maximal list had to be reduced.
pub fn load_complex_checked(path: &Path) -> Result<(PrimeComplex, bool)> {
    let file: ComplexFile = parse_json(path, &read(path)?)?;
    file.to_complex()
}

/// Loads either a complex file or a spectrum file (recognised by its `orders` field).
pub fn load_complex_or_spectrum(path: &Path) -> Result<(PrimeComplex, bool)> {
    let text = read(path)?;
    let value: serde_json::Value = parse_json(path, &text)?;
    if value.get("orders").is_some() {
        let file: SpectrumFile = parse_json(path, &text)?;
        let spectrum = file
            .spectrum()
            .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
        Ok((PrimeComplex::from_spectrum(&spectrum)?, false))
    } else {
        parse_json::<ComplexFile>(path, &text)?.to_complex()
    }
}

pub fn load_complex(path: &Path) -> Result<PrimeComplex> {
    Ok(load_complex_checked(path)?.0)
}

/// Canonical complex JSON, newline terminated.
pub fn complex_json(c: &PrimeComplex) -> String {
    serde_json::to_string(&ComplexFile::from(c)).expect("plain data serializes") + "\n"
}

pub fn save_complex(path: &Path, c: &PrimeComplex) -> Result<()> {
    write(path, &complex_json(c))
}

pub fn emit_dot(g: &PrimeGraph, name: &str) -> String {
    g.to_dot(name)
}

/// A directory of spectrum files, looked up by their `name` field.
#[derive(Clone, Debug)]
pub struct Fixtures {
    dir: PathBuf,
}

impl Fixtures {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Fixtures { dir: dir.into() }
    }

    /// Directory shipped with the crate.
    pub fn bundled() -> Self {
        Fixtures::new(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
    }

    /// `PSC_FIXTURES` when set, the bundled directory otherwise.
    pub fn from_env() -> Self {
        match std::env::var_os(FIXTURES_ENV) {
            Some(dir) if !dir.is_empty() => Fixtures::new(dir),
            _ => Fixtures::bundled(),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// All spectrum files in the directory keyed by name.
    pub fn all(&self) -> Result<BTreeMap<String, SpectrumFile>> {
        let entries = fs::read_dir(&self.dir).map_err(|source| Error::Io {
            path: self.dir.clone(),
            source,
        })?;
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let mut out = BTreeMap::new();
        for path in paths {
            let file = read_spectrum_file(&path)?;
            if out.contains_key(&file.name) {
                return Err(Error::parse(
                    path.display().to_string(),
                    format!("duplicate fixture name `{}`", file.name),
                ));
            }
            out.insert(file.name.clone(), file);
        }
        Ok(out)
    }

    pub fn names(&self) -> Result<Vec<String>> {
        Ok(self.all()?.into_keys().collect())
    }

    pub fn get(&self, name: &str) -> Result<SpectrumFile> {
        self.all()?
            .remove(name)
            .ok_or_else(|| Error::MissingFixture(name.to_string()))
    }

    pub fn spectrum(&self, name: &str) -> Result<Spectrum> {
        self.get(name)?.spectrum()
    }
}
