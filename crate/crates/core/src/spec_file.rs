//! The JSON group spec file: `{"name": ..., "construct": <node>}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structured::GroupExpr;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub name: String,
    pub construct: GroupExpr,
}

impl GroupSpecFile {
    pub fn new(name: impl Into<String>, construct: GroupExpr) -> Self {
        Self { name: name.into(), construct }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical form: pretty JSON in declaration order, newline-terminated.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec files always serialize");
        s.push('\n');
        s
    }
}
