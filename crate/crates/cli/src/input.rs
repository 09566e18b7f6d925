//! Reading and classifying input documents.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use hda_core::format::{FormatError, HdaDoc, IpomsetDoc, LanguageDoc, SpanDoc};
use hda_core::hda::{Hda, Span};
use hda_core::{Ipomset, Language};
use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::commands::CliError;

/// A parsed and validated input.
#[derive(Debug)]
pub enum Document {
    Ipomset(Ipomset),
    Language(Language),
    Hda(Hda),
    Span(Box<Span>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Ipomset(_) => "ipomset",
            Document::Language(_) => "language",
            Document::Hda(_) => "hda",
            Document::Span(_) => "span",
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn shape<T: DeserializeOwned>(value: Value, path: &Path) -> Result<T, CliError> {
    serde_json::from_value(value).map_err(|e| CliError::Usage(format!("{}: malformed document: {e}", path.display())))
}

/// Parse errors are usage errors; validation failures are domain errors.
pub fn load(path: &Path) -> Result<Document, CliError> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: not a JSON document: {e}", path.display())))?;
    let has = |key: &str| value.get(key).is_some();
    let invalid = |e: FormatError| CliError::invalid(path, e);
    if has("events") {
        let doc: IpomsetDoc = shape(value, path)?;
        Ok(Document::Ipomset(doc.to_ipomset().map_err(|e| invalid(e.into()))?))
    } else if has("generators") {
        let doc: LanguageDoc = shape(value, path)?;
        Ok(Document::Language(doc.to_language().map_err(|e| invalid(e.into()))?))
    } else if has("apex") {
        let doc: SpanDoc = shape(value, path)?;
        Ok(Document::Span(Box::new(doc.to_span().map_err(invalid)?)))
    } else if has("cells") {
        let doc: HdaDoc = shape(value, path)?;
        Ok(Document::Hda(doc.to_hda().map_err(invalid)?))
    } else {
        Err(CliError::Usage(format!(
            "{}: unknown document kind (expected one of events, generators, cells, apex)",
            path.display()
        )))
    }
}
