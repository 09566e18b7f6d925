//! Higher-dimensional automata: precubical sets with start and accept cells.

mod dot;
mod path;
mod replicate;

use thiserror::Error;

use crate::precubical::{finite_colimit, Arrow, Diagram, PrecubicalError, PrecubicalMap, PrecubicalSet};

pub use path::{accepted_labels, enumerate_accepting_paths, ev_label, language, Path, Step};
pub use replicate::{replicate, replication_chain_prefix, Chain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HdaError {
    #[error(transparent)]
    Precubical(#[from] PrecubicalError),
    #[error("map is not an HDA map: {0}")]
    InvalidMap(String),
    #[error("invalid path at step {step}: {reason}")]
    InvalidPath { step: usize, reason: String },
    #[error("{0}")]
    Unsupported(String),
}

/// An HDA. Markings are sorted, deduplicated cell indices of the carrier.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hda {
    carrier: PrecubicalSet,
    start: Vec<usize>,
    accept: Vec<usize>,
}

impl Hda {
    pub fn new(carrier: PrecubicalSet, start: Vec<usize>, accept: Vec<usize>) -> Result<Self, HdaError> {
        for &x in start.iter().chain(&accept) {
            if x >= carrier.len() {
                return Err(PrecubicalError::UnknownCell(format!("#{x}")).into());
            }
        }
        Ok(Hda {
            carrier,
            start: sorted(start),
            accept: sorted(accept),
        })
    }

    pub fn from_ids<S: AsRef<str>>(carrier: PrecubicalSet, start: &[S], accept: &[S]) -> Result<Self, HdaError> {
        let resolve = |ids: &[S]| {
            ids.iter()
                .map(|id| carrier.lookup(id.as_ref()))
                .collect::<Result<Vec<_>, _>>()
        };
        let (start, accept) = (resolve(start)?, resolve(accept)?);
        Hda::new(carrier, start, accept)
    }

    /// The monoidal unit: one vertex, starting and accepting.
    pub fn unit() -> Self {
        Hda {
            carrier: PrecubicalSet::unit(),
            start: vec![0],
            accept: vec![0],
        }
    }

    pub fn carrier(&self) -> &PrecubicalSet {
        &self.carrier
    }

    pub fn start(&self) -> &[usize] {
        &self.start
    }

    pub fn accept(&self) -> &[usize] {
        &self.accept
    }

    pub fn start_ids(&self) -> Vec<String> {
        self.start.iter().map(|&x| self.carrier.cell(x).id().to_string()).collect()
    }

    pub fn accept_ids(&self) -> Vec<String> {
        self.accept.iter().map(|&x| self.carrier.cell(x).id().to_string()).collect()
    }

    pub fn is_start(&self, x: usize) -> bool {
        self.start.binary_search(&x).is_ok()
    }

    pub fn is_accept(&self, x: usize) -> bool {
        self.accept.binary_search(&x).is_ok()
    }

    /// Same carrier, markings replaced.
    pub fn with_markings(&self, start: Vec<usize>, accept: Vec<usize>) -> Result<Hda, HdaError> {
        Hda::new(self.carrier.clone(), start, accept)
    }

    /// `X^ε`: same carrier, no markings.
    pub fn unmarked(&self) -> Hda {
        Hda {
            carrier: self.carrier.clone(),
            start: Vec::new(),
            accept: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), HdaError> {
        self.carrier.validate()?;
        Ok(())
    }

    pub fn start_cell_count(&self) -> usize {
        self.start.len()
    }

    /// Number of cells one dimension up having `x` as a face.
    pub fn branching_degree(&self, x: usize) -> Result<usize, HdaError> {
        if x >= self.carrier.len() {
            return Err(PrecubicalError::UnknownCell(format!("#{x}")).into());
        }
        Ok(self.carrier.cofaces(x).len())
    }

    /// Tensor product; markings are the pairs of markings.
    pub fn tensor(&self, other: &Hda) -> Hda {
        let (carrier, table) = self.carrier.tensor_indexed(&other.carrier);
        let m = other.carrier.len();
        let pairs = |a: &[usize], b: &[usize]| -> Vec<usize> {
            a.iter()
                .flat_map(|&x| b.iter().map(move |&y| x * m + y))
                .map(|k| table[k])
                .collect()
        };
        Hda {
            start: sorted(pairs(&self.start, &other.start)),
            accept: sorted(pairs(&self.accept, &other.accept)),
            carrier,
        }
    }

    /// Disjoint union with its injections.
    pub fn coproduct(parts: &[&Hda]) -> (Hda, Vec<PrecubicalMap>) {
        let carriers: Vec<&PrecubicalSet> = parts.iter().map(|h| &h.carrier).collect();
        let (carrier, injections) = PrecubicalSet::coproduct(&carriers);
        let mark = |pick: fn(&Hda) -> &[usize]| {
            sorted(
                parts
                    .iter()
                    .zip(&injections)
                    .flat_map(|(h, f)| pick(h).iter().map(|&x| f.apply(x)))
                    .collect(),
            )
        };
        let hda = Hda {
            start: mark(|h| &h.start),
            accept: mark(|h| &h.accept),
            carrier,
        };
        (hda, injections)
    }

    /// Colimit of a finite diagram of HDA along HDA maps; markings are the
    /// images of all component markings.
    pub fn colimit(objects: &[Hda], arrows: &[Arrow]) -> Result<(Hda, Vec<PrecubicalMap>), HdaError> {
        for a in arrows {
            if let (Some(x), Some(y)) = (objects.get(a.from), objects.get(a.to)) {
                validate_hda_map(&a.map, x, y)?;
            }
        }
        let diagram = Diagram {
            objects: objects.iter().map(|h| h.carrier.clone()).collect(),
            arrows: arrows.to_vec(),
        };
        let colimit = finite_colimit(&diagram)?;
        let mark = |pick: fn(&Hda) -> &[usize]| {
            sorted(
                objects
                    .iter()
                    .zip(&colimit.cocone)
                    .flat_map(|(h, f)| pick(h).iter().map(|&x| f.apply(x)))
                    .collect(),
            )
        };
        let hda = Hda {
            start: mark(|h| &h.start),
            accept: mark(|h| &h.accept),
            carrier: colimit.set,
        };
        Ok((hda, colimit.cocone))
    }

    /// Pushout of `left ← apex → right`. The cocone is returned in the
    /// order apex, left, right.
    pub fn pushout(span: &Span) -> Result<(Hda, Vec<PrecubicalMap>), HdaError> {
        Hda::colimit(
            &[span.apex.clone(), span.left.clone(), span.right.clone()],
            &[
                Arrow {
                    from: 0,
                    to: 1,
                    map: span.left_map.clone(),
                },
                Arrow {
                    from: 0,
                    to: 2,
                    map: span.right_map.clone(),
                },
            ],
        )
    }
}

/// A span `left ← apex → right` of HDA maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    pub apex: Hda,
    pub left: Hda,
    pub right: Hda,
    pub left_map: PrecubicalMap,
    pub right_map: PrecubicalMap,
}

/// Naturality plus preservation of start and accept cells.
pub fn validate_hda_map(f: &PrecubicalMap, source: &Hda, target: &Hda) -> Result<(), HdaError> {
    if let Some(v) = f.violations(&source.carrier, &target.carrier).first() {
        return Err(HdaError::InvalidMap(v.to_string()));
    }
    for &x in &source.start {
        if !target.is_start(f.apply(x)) {
            return Err(HdaError::InvalidMap(format!(
                "start cell {} is not sent to a start cell",
                source.carrier.cell(x).id()
            )));
        }
    }
    for &x in &source.accept {
        if !target.is_accept(f.apply(x)) {
            return Err(HdaError::InvalidMap(format!(
                "accept cell {} is not sent to an accept cell",
                source.carrier.cell(x).id()
            )));
        }
    }
    Ok(())
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}
