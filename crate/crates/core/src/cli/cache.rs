use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};

use super::document::{Document, SCHEMA_VERSION};
use crate::error::Result;

pub const CACHE_ENV: &str = "BK_CACHE_DIR";

/// File-backed store of command results, one JSON document per
/// `(command, parameters)` under a directory per schema and code version.
#[derive(Clone, Debug)]
pub struct ResultCache {
    root: PathBuf,
}

impl ResultCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        ResultCache { root: root.into() }
    }

    /// `$BK_CACHE_DIR`, else the platform cache directory under
    /// `boolean-kerov/`.
    pub fn from_env() -> Option<Self> {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => Some(Self::new(dir)),
            _ => dirs::cache_dir().map(|d| Self::new(d.join("boolean-kerov"))),
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn version_dir(&self) -> PathBuf {
        self.root
            .join(format!("v{SCHEMA_VERSION}-{}", env!("CARGO_PKG_VERSION")))
    }

    pub fn path_for(&self, command: &str, params: &Map<String, Value>) -> PathBuf {
        let mut name = sanitize(command);
        for (k, v) in params {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            name.push('_');
            name.push_str(&sanitize(&format!("{k}={v}")));
        }
        name.push_str(".json");
        self.version_dir().join(name)
    }

    /// A cached document, if present and written by this schema and code
    /// version.
    pub fn load(&self, command: &str, params: &Map<String, Value>) -> Option<Document> {
        let bytes = fs::read(self.path_for(command, params)).ok()?;
        let doc: Document = serde_json::from_slice(&bytes).ok()?;
        (doc.schema_version == SCHEMA_VERSION
            && doc.code_version == env!("CARGO_PKG_VERSION")
            && doc.command == command
            && &doc.params == params)
            .then_some(doc)
    }

    /// Writes to a temporary file in the target directory, then renames.
    pub fn store(&self, doc: &Document) -> Result<PathBuf> {
        let path = self.path_for(&doc.command, &doc.params);
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(
            ".{}.{}.tmp",
            path.file_name().and_then(|n| n.to_str()).unwrap_or("entry"),
            std::process::id()
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&serde_json::to_vec(doc)?)?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(path)
    }
}

fn sanitize(s: &str) -> String {
    s.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '=' {
                c
            } else {
                '-'
            }
        })
        .collect()
}
