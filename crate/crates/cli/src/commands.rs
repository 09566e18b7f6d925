//! Verb dispatch.

use std::path::Path;

use hda_core::format::FormatError;
use hda_core::hda::{language, replicate, replication_chain_prefix, Hda, HdaError};
use hda_core::{Ipomset, IpomsetError};
use serde_json::{json, Value};

use crate::input::{load, Document};
use crate::output::Artifact;
use crate::{Cli, Format, Verb};

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation or unreadable input; exit status 2.
    Usage(String),
    /// A well-formed request the domain rejects; exit status 1 with this
    /// record on standard output.
    Domain(Value),
}

impl CliError {
    fn domain(kind: &str, message: impl ToString, details: Value) -> Self {
        let mut error = json!({ "kind": kind, "message": message.to_string() });
        if let (Value::Object(e), Value::Object(d)) = (&mut error, details) {
            e.extend(d);
        }
        CliError::Domain(json!({ "error": error }))
    }

    pub fn invalid(path: &Path, e: FormatError) -> Self {
        let input = json!({ "input": path.display().to_string() });
        match &e {
            FormatError::Ipomset(inner) => CliError::domain("invalid_ipomset", inner, input),
            FormatError::Precubical(hda_core::precubical::PrecubicalError::Invalid(v)) => {
                let violations: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                let mut details = input;
                details["violations"] = json!(violations);
                CliError::domain("invalid_precubical_set", &e, details)
            }
            FormatError::Precubical(_) => CliError::domain("invalid_precubical_set", &e, input),
            FormatError::Hda(_) => CliError::domain("invalid_hda", &e, input),
            FormatError::Json(_) => CliError::Usage(format!("{}: {e}", path.display())),
        }
    }
}

impl From<HdaError> for CliError {
    fn from(e: HdaError) -> Self {
        let kind = match e {
            HdaError::Unsupported(_) => "unsupported",
            HdaError::InvalidMap(_) => "invalid_map",
            _ => "invalid_hda",
        };
        CliError::domain(kind, e, json!({}))
    }
}

impl From<IpomsetError> for CliError {
    fn from(e: IpomsetError) -> Self {
        let kind = match e {
            IpomsetError::SequentialMismatch { .. } => "interface_mismatch",
            IpomsetError::TooManyEvents(_) => "too_many_events",
            _ => "invalid_ipomset",
        };
        CliError::domain(kind, e, json!({}))
    }
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    check_flags(cli)?;
    let docs = cli
        .inputs
        .iter()
        .map(|p| load(p))
        .collect::<Result<Vec<_>, _>>()?;
    if cli.verb == Verb::Dot {
        let [Document::Hda(h)] = docs.as_slice() else {
            return Err(arity(cli, "one HDA"));
        };
        return Ok(h.to_dot());
    }
    execute(cli, docs)?.render(cli.format)
}

fn check_flags(cli: &Cli) -> Result<(), CliError> {
    use Verb::*;
    let (events, n) = match cli.verb {
        Language | Expand | Par => (true, false),
        Replicate | Chain | Closure => (false, true),
        _ => (false, false),
    };
    if cli.max_events.is_some() && !events {
        return Err(CliError::Usage(format!("--max-events does not apply to {:?}", cli.verb).to_lowercase()));
    }
    if cli.n.is_some() && !n {
        return Err(CliError::Usage(format!("--n does not apply to {:?}", cli.verb).to_lowercase()));
    }
    let automaton = matches!(cli.verb, Tensor | Coproduct | Pushout | Replicate | Dot);
    if cli.format == Format::Dot && !automaton {
        return Err(CliError::Usage(format!("--format dot does not apply to {:?}", cli.verb).to_lowercase()));
    }
    if cli.verb == Dot && cli.format == Format::Text {
        return Err(CliError::Usage("dot only writes DOT".into()));
    }
    Ok(())
}

fn arity(cli: &Cli, expected: &str) -> CliError {
    CliError::Usage(format!("{:?} expects {expected}", cli.verb).to_lowercase())
}

fn required(value: Option<usize>, flag: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{flag} is required")))
}

fn hdas(cli: &Cli, docs: Vec<Document>) -> Result<Vec<Hda>, CliError> {
    docs.into_iter()
        .map(|d| match d {
            Document::Hda(h) => Ok(h),
            other => Err(CliError::Usage(format!(
                "{:?} expects HDA documents, got {}",
                cli.verb,
                other.kind()
            )
            .to_lowercase())),
        })
        .collect()
}

fn single(cli: &Cli, docs: Vec<Document>, expected: &str) -> Result<Document, CliError> {
    let mut docs = docs;
    if docs.len() != 1 {
        return Err(arity(cli, expected));
    }
    Ok(docs.remove(0))
}

fn execute(cli: &Cli, docs: Vec<Document>) -> Result<Artifact, CliError> {
    match cli.verb {
        Verb::Validate => validate(cli, docs),
        Verb::Language => {
            let k = required(cli.max_events, "--max-events")?;
            let [h] = <[Hda; 1]>::try_from(hdas(cli, docs)?).map_err(|_| arity(cli, "one HDA"))?;
            Ok(Artifact::Language(language(&h, k)))
        }
        Verb::Expand => {
            let (l, k) = match single(cli, docs, "one language or HDA")? {
                Document::Language(l) => {
                    let k = cli
                        .max_events
                        .or(l.event_bound())
                        .ok_or_else(|| CliError::Usage("--max-events is required for unbounded languages".into()))?;
                    (l, k)
                }
                Document::Hda(h) => {
                    let k = required(cli.max_events, "--max-events")?;
                    (language(&h, k), k)
                }
                other => return Err(CliError::Usage(format!("expand expects a language or HDA, got {}", other.kind()))),
            };
            Ok(Artifact::Members(l.expand(k)))
        }
        Verb::Tensor => {
            let hs = hdas(cli, docs)?;
            let mut acc = hs[0].clone();
            for h in &hs[1..] {
                acc = acc.tensor(h);
            }
            Ok(Artifact::Hda(acc))
        }
        Verb::Coproduct => {
            let hs = hdas(cli, docs)?;
            Ok(Artifact::Hda(Hda::coproduct(&hs.iter().collect::<Vec<_>>()).0))
        }
        Verb::Pushout => match single(cli, docs, "one span")? {
            Document::Span(s) => Ok(Artifact::Hda(Hda::pushout(&s)?.0)),
            other => Err(CliError::Usage(format!("pushout expects a span, got {}", other.kind()))),
        },
        Verb::Replicate => {
            let n = required(cli.n, "--n")?;
            let [h] = <[Hda; 1]>::try_from(hdas(cli, docs)?).map_err(|_| arity(cli, "one HDA"))?;
            Ok(Artifact::Hda(replicate(&h, n)))
        }
        Verb::Chain => {
            let n = required(cli.n, "--n")?;
            let [h] = <[Hda; 1]>::try_from(hdas(cli, docs)?).map_err(|_| arity(cli, "one HDA"))?;
            let base = match h.start() {
                [b] if h.carrier().cell(*b).dimension() == 0 => *b,
                _ => {
                    return Err(CliError::domain(
                        "unsupported",
                        "chain needs exactly one start cell, and it must be a vertex",
                        json!({}),
                    ))
                }
            };
            Ok(Artifact::Chain(replication_chain_prefix(&h, base, n)?))
        }
        Verb::Glue | Verb::Par => binary(cli, docs),
        Verb::Closure => {
            let n = required(cli.n, "--n")?;
            match single(cli, docs, "one language")? {
                Document::Language(l) => Ok(Artifact::Language(l.par_closure_bounded(n))),
                other => Err(CliError::Usage(format!("closure expects a language, got {}", other.kind()))),
            }
        }
        Verb::Subsume => {
            let (p, q) = two_ipomsets(cli, docs)?;
            Ok(Artifact::Record(match p.subsumed_by(&q) {
                Some(f) => json!({ "subsumed": true, "witness": f }),
                None => json!({ "subsumed": false }),
            }))
        }
        Verb::Interval => match single(cli, docs, "one ipomset")? {
            Document::Ipomset(p) => match p.interval_representation() {
                Ok(rep) => Ok(Artifact::Record(json!({ "interval": true, "begin": rep.begin, "end": rep.end }))),
                Err(w) => Err(CliError::domain(
                    "not_interval",
                    "the precedence order contains an induced 2+2",
                    json!({ "witness": { "lower": [w.lower.0, w.lower.1], "upper": [w.upper.0, w.upper.1] } }),
                )),
            },
            other => Err(CliError::Usage(format!("interval expects an ipomset, got {}", other.kind()))),
        },
        Verb::Dot => unreachable!("handled before execution"),
    }
}

fn validate(cli: &Cli, docs: Vec<Document>) -> Result<Artifact, CliError> {
    let doc = single(cli, docs, "one document")?;
    let mut record = json!({ "valid": true, "kind": doc.kind() });
    match &doc {
        Document::Ipomset(p) => {
            record["events"] = json!(p.len());
            record["interval"] = json!(p.is_interval());
        }
        Document::Language(l) => {
            record["generators"] = json!(l.generators().len());
        }
        Document::Hda(h) => {
            record["cells"] = json!(h.carrier().len());
            record["dimension"] = json!(h.carrier().dimension());
            record["start"] = json!(h.start_ids());
            record["accept"] = json!(h.accept_ids());
        }
        Document::Span(s) => {
            for (name, f, target) in [("left", &s.left_map, &s.left), ("right", &s.right_map, &s.right)] {
                hda_core::hda::validate_hda_map(f, &s.apex, target).map_err(|e| {
                    CliError::domain("invalid_map", e, json!({ "leg": name }))
                })?;
            }
        }
    }
    Ok(Artifact::Record(record))
}

fn two_ipomsets(cli: &Cli, docs: Vec<Document>) -> Result<(Ipomset, Ipomset), CliError> {
    match <[Document; 2]>::try_from(docs) {
        Ok([Document::Ipomset(p), Document::Ipomset(q)]) => Ok((p, q)),
        _ => Err(arity(cli, "two ipomsets")),
    }
}

fn binary(cli: &Cli, docs: Vec<Document>) -> Result<Artifact, CliError> {
    let glue = cli.verb == Verb::Glue;
    match <[Document; 2]>::try_from(docs) {
        Ok([Document::Ipomset(p), Document::Ipomset(q)]) => {
            if glue {
                Ok(Artifact::Ipomset(p.glue(&q)?))
            } else {
                if p.len() + q.len() > hda_core::ipomset::MAX_EVENTS {
                    return Err(IpomsetError::TooManyEvents(p.len() + q.len()).into());
                }
                Ok(Artifact::Ipomset(p.parallel(&q)))
            }
        }
        Ok([Document::Language(l), Document::Language(m)]) => Ok(Artifact::Language(if glue {
            l.seq_compose(&m)
        } else {
            match cli.max_events {
                Some(k) => l.par_compose_bounded(&m, k),
                None => l.par_compose(&m),
            }
        })),
        _ => Err(arity(cli, "two ipomsets or two languages")),
    }
}

