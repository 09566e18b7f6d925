//! JSON documents for ipomsets, languages, precubical sets and HDA.
//!
//! Serialization is deterministic: cells are sorted by `(dimension, id)`,
//! generators and relation pairs are sorted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hda::{Hda, HdaError, Span};
use crate::ipomset::{validate, Ipomset, IpomsetError, RawIpomset};
use crate::precubical::{PrecubicalError, PrecubicalMap, PrecubicalSet, RawCell};
use crate::Language;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ipomset(#[from] IpomsetError),
    #[error(transparent)]
    Precubical(#[from] PrecubicalError),
    #[error(transparent)]
    Hda(#[from] HdaError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct IpomsetDoc {
    pub events: Vec<String>,
    #[serde(default)]
    pub precedence: Vec<[usize; 2]>,
    #[serde(default)]
    pub event_order: Vec<[usize; 2]>,
    #[serde(default)]
    pub sources: Vec<usize>,
    #[serde(default)]
    pub targets: Vec<usize>,
}

impl IpomsetDoc {
    pub fn to_raw(&self) -> RawIpomset {
        RawIpomset {
            labels: self.events.clone(),
            precedence: self.precedence.iter().map(|&[x, y]| (x, y)).collect(),
            event_order: self.event_order.iter().map(|&[x, y]| (x, y)).collect(),
            sources: self.sources.clone(),
            targets: self.targets.clone(),
        }
    }

    pub fn to_ipomset(&self) -> Result<Ipomset, IpomsetError> {
        validate(&self.to_raw())
    }
}

impl From<&Ipomset> for IpomsetDoc {
    fn from(p: &Ipomset) -> Self {
        IpomsetDoc {
            events: p.labels().iter().map(|l| l.to_string()).collect(),
            precedence: p.precedence_pairs().map(|(x, y)| [x, y]).collect(),
            event_order: p.event_order_pairs().map(|(x, y)| [x, y]).collect(),
            sources: p.sources().collect(),
            targets: p.targets().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct LanguageDoc {
    pub generators: Vec<IpomsetDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub event_bound: Option<usize>,
}

impl LanguageDoc {
    pub fn to_language(&self) -> Result<Language, IpomsetError> {
        let generators = self
            .generators
            .iter()
            .map(IpomsetDoc::to_ipomset)
            .collect::<Result<Vec<_>, _>>()?;
        let language = Language::normalize(generators);
        Ok(match self.event_bound {
            Some(b) => language.with_event_bound(b),
            None => language,
        })
    }
}

impl From<&Language> for LanguageDoc {
    fn from(l: &Language) -> Self {
        LanguageDoc {
            generators: l.generators().iter().map(IpomsetDoc::from).collect(),
            event_bound: l.event_bound(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrecubicalDoc {
    pub cells: Vec<RawCell>,
}

impl From<&PrecubicalSet> for PrecubicalDoc {
    fn from(x: &PrecubicalSet) -> Self {
        PrecubicalDoc { cells: x.to_raw() }
    }
}

/// A precubical document with markings; both lists default to empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HdaDoc {
    pub cells: Vec<RawCell>,
    #[serde(default)]
    pub start: Vec<String>,
    #[serde(default)]
    pub accept: Vec<String>,
}

impl HdaDoc {
    pub fn to_hda(&self) -> Result<Hda, FormatError> {
        let carrier = PrecubicalSet::from_raw(&self.cells)?;
        Ok(Hda::from_ids(carrier, &self.start, &self.accept)?)
    }
}

impl From<&Hda> for HdaDoc {
    fn from(h: &Hda) -> Self {
        HdaDoc {
            cells: h.carrier().to_raw(),
            start: h.start_ids(),
            accept: h.accept_ids(),
        }
    }
}

/// `left ← apex → right` with maps given as id tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SpanDoc {
    pub apex: HdaDoc,
    pub left: HdaDoc,
    pub right: HdaDoc,
    pub left_map: BTreeMap<String, String>,
    pub right_map: BTreeMap<String, String>,
}

impl SpanDoc {
    pub fn to_span(&self) -> Result<Span, FormatError> {
        let apex = self.apex.to_hda()?;
        let left = self.left.to_hda()?;
        let right = self.right.to_hda()?;
        let left_map = PrecubicalMap::from_ids(&self.left_map, apex.carrier(), left.carrier())?;
        let right_map = PrecubicalMap::from_ids(&self.right_map, apex.carrier(), right.carrier())?;
        Ok(Span {
            apex,
            left,
            right,
            left_map,
            right_map,
        })
    }
}

impl From<&Span> for SpanDoc {
    fn from(s: &Span) -> Self {
        SpanDoc {
            apex: HdaDoc::from(&s.apex),
            left: HdaDoc::from(&s.left),
            right: HdaDoc::from(&s.right),
            left_map: s.left_map.to_ids(s.apex.carrier(), s.left.carrier()),
            right_map: s.right_map.to_ids(s.apex.carrier(), s.right.carrier()),
        }
    }
}

pub fn parse_ipomset(text: &str) -> Result<Ipomset, FormatError> {
    Ok(serde_json::from_str::<IpomsetDoc>(text)?.to_ipomset()?)
}

pub fn parse_language(text: &str) -> Result<Language, FormatError> {
    Ok(serde_json::from_str::<LanguageDoc>(text)?.to_language()?)
}

pub fn parse_hda(text: &str) -> Result<Hda, FormatError> {
    serde_json::from_str::<HdaDoc>(text)?.to_hda()
}

pub fn parse_span(text: &str) -> Result<Span, FormatError> {
    serde_json::from_str::<SpanDoc>(text)?.to_span()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}
