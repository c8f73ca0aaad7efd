//! Catalog of reference bodies.
//!
//! Catalog files are UTF-8 text with one `name,a_x,a_y,a_z` record per line
//! (kilometres). Blank lines and anything after `#` are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::ellipsoid::{EllipsoidError, TriaxialEllipsoid};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: body `{name}` must satisfy a_x > a_y > a_z > 0 ({source})")]
    Ordering {
        line: usize,
        name: String,
        #[source]
        source: EllipsoidError,
    },
    #[error("line {line}: body `{name}` is defined twice")]
    Duplicate { line: usize, name: String },
    #[error("unknown body `{0}`")]
    NotFound(String),
    #[error("reading catalog {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BodySource {
    Builtin,
    User,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BodyRecord {
    pub name: String,
    pub ellipsoid: TriaxialEllipsoid,
    pub source: BodySource,
}

/// Semiaxes in km, as published decimal strings.
const BUILTIN: [(&str, &str, &str, &str); 10] = [
    ("Ariel", "581.1", "577.9", "577.7"),
    ("Earth", "6378.173435", "6378.1039", "6356.7544"),
    ("Enceladus", "256.6", "251.4", "248.3"),
    ("Europa", "1564.13", "1561.23", "1560.93"),
    ("Io", "1829.4", "1819.3", "1815.7"),
    ("Mars", "3394.6", "3393.3", "3376.3"),
    ("Mimas", "207.4", "196.8", "190.6"),
    ("Miranda", "240.4", "234.2", "232.9"),
    ("Moon", "1735.55", "1735.324", "1734.898"),
    ("Tethys", "535.6", "528.2", "525.8"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    bodies: Vec<BodyRecord>,
}

impl Catalog {
    pub fn builtin() -> Self {
        let bodies = BUILTIN
            .iter()
            .map(|&(name, ax, ay, az)| {
                let parse = |s: &str| s.parse::<f64>().expect("builtin semiaxis literal");
                BodyRecord {
                    name: name.to_string(),
                    ellipsoid: TriaxialEllipsoid::new(parse(ax), parse(ay), parse(az)).expect("builtin body ordering"),
                    source: BodySource::Builtin,
                }
            })
            .collect();
        Self { bodies }
    }

    /// Builtin bodies overlaid with the records of `path`; user records
    /// replace builtins of the same name.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, CatalogError> {
        let path = path.as_ref();
        let text =
            fs::read_to_string(path).map_err(|source| CatalogError::Io { path: path.display().to_string(), source })?;
        let mut catalog = Self::builtin();
        catalog.merge(parse_records(&text)?);
        Ok(catalog)
    }

    pub fn merge(&mut self, records: Vec<BodyRecord>) {
        for record in records {
            match self.bodies.iter_mut().find(|b| b.name == record.name) {
                Some(existing) => *existing = record,
                None => self.bodies.push(record),
            }
        }
    }

    pub fn get(&self, name: &str) -> Result<&BodyRecord, CatalogError> {
        self.bodies.iter().find(|b| b.name == name).ok_or_else(|| CatalogError::NotFound(name.to_string()))
    }

    pub fn bodies(&self) -> &[BodyRecord] {
        &self.bodies
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    /// Catalog file text; `f64` values are written in shortest round-trip form.
    pub fn serialize(&self) -> String {
        let mut out = String::from("# name,a_x,a_y,a_z (km)\n");
        for b in &self.bodies {
            let e = &b.ellipsoid;
            writeln!(out, "{},{},{},{}", b.name, e.ax(), e.ay(), e.az()).unwrap();
        }
        out
    }
}

pub fn builtin_catalog() -> Catalog {
    Catalog::builtin()
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
    Catalog::load(path)
}

/// Records of a catalog file, in file order, all marked [`BodySource::User`].
pub fn parse_records(text: &str) -> Result<Vec<BodyRecord>, CatalogError> {
    let mut records: Vec<BodyRecord> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(CatalogError::Parse {
                line,
                message: format!("expected 4 fields `name,a_x,a_y,a_z`, found {}", fields.len()),
            });
        }
        let name = fields[0];
        if name.is_empty() {
            return Err(CatalogError::Parse { line, message: "empty body name".to_string() });
        }
        let mut axes = [0.0; 3];
        for (slot, (label, text)) in axes.iter_mut().zip(["a_x", "a_y", "a_z"].iter().zip(&fields[1..])) {
            *slot = text.parse().map_err(|_| CatalogError::Parse {
                line,
                message: format!("field {label} of `{name}`: `{text}` is not a number"),
            })?;
        }
        let ellipsoid = TriaxialEllipsoid::new(axes[0], axes[1], axes[2]).map_err(|source| CatalogError::Ordering {
            line,
            name: name.to_string(),
            source,
        })?;
        if records.iter().any(|r| r.name == name) {
            return Err(CatalogError::Duplicate { line, name: name.to_string() });
        }
        records.push(BodyRecord { name: name.to_string(), ellipsoid, source: BodySource::User });
    }
    Ok(records)
}
