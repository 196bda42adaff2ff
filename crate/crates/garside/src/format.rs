//! The germ file format: a JSON document with a fixed key order so that
//! parse-then-serialize is byte-stable.
//!
//! ```json
//! {
//!   "objects": ["*"],
//!   "elements": [
//!     { "id": 0, "name": "1", "source": "*", "target": "*" }
//!   ],
//!   "identities": { "*": 0 },
//!   "products": [[0, 0, 0]]
//! }
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::germ::{ElementId, GermTable, ObjectId, StructuralError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub id: u32,
    pub name: String,
    pub source: String,
    pub target: String,
}

/// On-disk shape of a germ. One file holds one germ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermFile {
    pub objects: Vec<String>,
    pub elements: Vec<ElementRecord>,
    pub identities: BTreeMap<String, u32>,
    pub products: Vec<[u32; 3]>,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("element {id} declared out of order (expected dense ids 0, 1, ...)")]
    NonDenseIds { id: u32 },
    #[error("element {name} references unknown object {object}")]
    UnknownObject { name: String, object: String },
    #[error("identity entry references unknown object {object}")]
    UnknownIdentityObject { object: String },
    #[error(transparent)]
    Structural(#[from] StructuralError),
}

impl GermFile {
    pub fn to_table(&self) -> Result<GermTable, FormatError> {
        let object_index = |name: &str| -> Option<ObjectId> {
            self.objects
                .iter()
                .position(|o| o == name)
                .map(|i| ObjectId(i as u32))
        };
        let mut elements = Vec::with_capacity(self.elements.len());
        for (i, rec) in self.elements.iter().enumerate() {
            if rec.id as usize != i {
                return Err(FormatError::NonDenseIds { id: rec.id });
            }
            let src = object_index(&rec.source).ok_or_else(|| FormatError::UnknownObject {
                name: rec.name.clone(),
                object: rec.source.clone(),
            })?;
            let tgt = object_index(&rec.target).ok_or_else(|| FormatError::UnknownObject {
                name: rec.name.clone(),
                object: rec.target.clone(),
            })?;
            elements.push((rec.name.clone(), src, tgt));
        }
        let mut identities = Vec::new();
        for (obj, &el) in &self.identities {
            let ob = object_index(obj).ok_or_else(|| FormatError::UnknownIdentityObject {
                object: obj.clone(),
            })?;
            identities.push((ob, ElementId(el)));
        }
        let products = self
            .products
            .iter()
            .map(|&[f, g, h]| (ElementId(f), ElementId(g), ElementId(h)))
            .collect();
        Ok(GermTable::new(
            self.objects.clone(),
            elements,
            identities,
            products,
        )?)
    }

    pub fn from_table(t: &GermTable) -> GermFile {
        let elements = t
            .elements()
            .map(|e| ElementRecord {
                id: e.0,
                name: t.element_name(e).to_string(),
                source: t.object_name(t.source(e)).to_string(),
                target: t.object_name(t.target(e)).to_string(),
            })
            .collect();
        let identities = t
            .objects()
            .map(|x| (t.object_name(x).to_string(), t.identity(x).0))
            .collect();
        let mut products: Vec<[u32; 3]> = t
            .defined_products()
            .map(|(f, g, h)| [f.0, g.0, h.0])
            .collect();
        products.sort_unstable();
        GermFile {
            objects: (0..t.num_objects() as u32)
                .map(|i| t.object_name(ObjectId(i)).to_string())
                .collect(),
            elements,
            identities,
            products,
        }
    }

    /// Canonical serialization: pretty JSON, fields in declaration order,
    /// products sorted.
    pub fn to_canonical_string(&self) -> String {
        let mut copy = self.clone();
        copy.products.sort_unstable();
        serde_json::to_string_pretty(&copy).expect("GermFile serializes") + "\n"
    }

    pub fn parse_str(s: &str) -> Result<GermFile, FormatError> {
        Ok(serde_json::from_str(s)?)
    }
}

pub fn read_germ_file(path: &Path) -> Result<GermTable, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    GermFile::parse_str(&text)?.to_table()
}

pub fn write_germ_file(path: &Path, t: &GermTable) -> Result<(), FormatError> {
    let file = GermFile::from_table(t);
    std::fs::write(path, file.to_canonical_string()).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}
