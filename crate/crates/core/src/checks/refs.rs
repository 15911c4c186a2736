//! Bibliographic records behind the reference tags of failed checks.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{DrgError, Result};

/// A bibliographic record. Absent fields are unknown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefEntry {
    /// `(surname, given names)`
    pub authors: Vec<(String, Vec<String>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub journal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fjournal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub number: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pages: Option<(u32, u32)>,
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub volume: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub year: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub publisher: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

const DATA: &str = include_str!("../../data/references.json");

/// All records, keyed by tag.
pub fn references() -> &'static BTreeMap<String, RefEntry> {
    static REFS: OnceLock<BTreeMap<String, RefEntry>> = OnceLock::new();
    REFS.get_or_init(|| serde_json::from_str(DATA).expect("bundled reference data is valid"))
}

pub fn lookup(tag: &str) -> Result<&'static RefEntry> {
    references()
        .get(tag)
        .ok_or_else(|| DrgError::Parse(format!("unknown reference tag {tag:?}")))
}
