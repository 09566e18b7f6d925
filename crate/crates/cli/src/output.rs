//! Rendering results as JSON documents, plain text or DOT.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use hda_core::format::{to_json, HdaDoc, IpomsetDoc, LanguageDoc};
use hda_core::hda::{Chain, Hda};
use hda_core::{Ipomset, Language};
use serde::Serialize;
use serde_json::Value;

use crate::commands::CliError;
use crate::Format;

pub enum Artifact {
    Ipomset(Ipomset),
    Language(Language),
    Members(BTreeSet<Ipomset>),
    Hda(Hda),
    Chain(Chain),
    Record(Value),
}

impl Artifact {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Text => Ok(self.to_text()),
            Format::Dot => match self {
                Artifact::Hda(h) => Ok(h.to_dot()),
                _ => Err(CliError::Usage("--format dot needs an HDA result".into())),
            },
        }
    }

    fn to_json(&self) -> String {
        match self {
            Artifact::Ipomset(p) => to_json(&IpomsetDoc::from(p)),
            Artifact::Language(l) => to_json(&LanguageDoc::from(l)),
            Artifact::Members(ps) => to_json(&ps.iter().map(IpomsetDoc::from).collect::<Vec<_>>()),
            Artifact::Hda(h) => to_json(&HdaDoc::from(h)),
            Artifact::Chain(c) => {
                let maps = c
                    .maps
                    .iter()
                    .enumerate()
                    .map(|(k, f)| f.to_ids(c.stages[k].carrier(), c.stages[k + 1].carrier()))
                    .collect();
                to_json(&ChainDoc {
                    stages: c.stages.iter().map(HdaDoc::from).collect(),
                    maps,
                })
            }
            Artifact::Record(v) => to_json(v),
        }
    }

    fn to_text(&self) -> String {
        match self {
            Artifact::Ipomset(p) => format!("{p}\n"),
            Artifact::Language(l) => l.generators().iter().map(|p| format!("{p}\n")).collect(),
            Artifact::Members(ps) => ps.iter().map(|p| format!("{p}\n")).collect(),
            Artifact::Hda(h) => hda_text(h),
            Artifact::Chain(c) => c
                .stages
                .iter()
                .enumerate()
                .map(|(k, h)| format!("# stage {}\n{}", k + 1, hda_text(h)))
                .collect(),
            Artifact::Record(v) => to_json(v),
        }
    }
}

/// Chain stages and the maps between consecutive stages as id tables.
#[derive(Serialize)]
struct ChainDoc {
    stages: Vec<HdaDoc>,
    maps: Vec<BTreeMap<String, String>>,
}

/// One line per cell, then the markings.
fn hda_text(h: &Hda) -> String {
    let x = h.carrier();
    let mut out = String::new();
    for c in x.cells() {
        let word: String = c.word().iter().map(|s| s.as_str()).collect();
        let faces: Vec<String> = c
            .faces()
            .iter()
            .map(|[lo, hi]| format!("{}/{}", x.cell(*lo).id(), x.cell(*hi).id()))
            .collect();
        let _ = writeln!(out, "{} ({word}) {}", c.id(), faces.join(" "));
    }
    let _ = writeln!(out, "start: {}", h.start_ids().join(" "));
    let _ = writeln!(out, "accept: {}", h.accept_ids().join(" "));
    out
}
