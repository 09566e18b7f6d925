//! Maps of precubical sets.

use std::collections::BTreeMap;

use thiserror::Error;

use super::{PrecubicalError, PrecubicalSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapViolation {
    #[error("map has {found} entries for {expected} source cells")]
    Arity { expected: usize, found: usize },
    #[error("image of source cell {0} is out of range")]
    OutOfRange(usize),
    #[error("cell {cell:?} is sent to {image:?} of a different shape")]
    Shape { cell: String, image: String },
    #[error("map does not commute with δ^{orientation}_{position} at {cell:?}")]
    Naturality {
        cell: String,
        position: usize,
        orientation: u8,
    },
}

/// A shape-preserving function on cells, given by the index of each image.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrecubicalMap {
    image: Vec<usize>,
}

impl PrecubicalMap {
    pub fn new(image: Vec<usize>) -> Self {
        PrecubicalMap { image }
    }

    pub fn identity(x: &PrecubicalSet) -> Self {
        PrecubicalMap::new((0..x.len()).collect())
    }

    /// Builds a map from an id-to-id table; every source cell must be listed.
    pub fn from_ids(
        table: &BTreeMap<String, String>,
        source: &PrecubicalSet,
        target: &PrecubicalSet,
    ) -> Result<Self, PrecubicalError> {
        let mut image = Vec::with_capacity(source.len());
        for c in source.cells() {
            let to = table
                .get(c.id())
                .ok_or_else(|| PrecubicalError::UnknownCell(c.id().to_string()))?;
            image.push(target.lookup(to)?);
        }
        Ok(PrecubicalMap { image })
    }

    pub fn to_ids(&self, source: &PrecubicalSet, target: &PrecubicalSet) -> BTreeMap<String, String> {
        source
            .cells()
            .iter()
            .zip(&self.image)
            .map(|(c, &y)| (c.id().to_string(), target.cell(y).id().to_string()))
            .collect()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PrecubicalMap) -> PrecubicalMap {
        PrecubicalMap::new(inner.image.iter().map(|&y| self.image[y]).collect())
    }

    pub fn violations(&self, source: &PrecubicalSet, target: &PrecubicalSet) -> Vec<MapViolation> {
        if self.image.len() != source.len() {
            return vec![MapViolation::Arity {
                expected: source.len(),
                found: self.image.len(),
            }];
        }
        let mut out = Vec::new();
        for (x, c) in source.cells().iter().enumerate() {
            let y = self.image[x];
            if y >= target.len() {
                out.push(MapViolation::OutOfRange(x));
                continue;
            }
            let d = target.cell(y);
            if d.word() != c.word() {
                out.push(MapViolation::Shape {
                    cell: c.id().to_string(),
                    image: d.id().to_string(),
                });
                continue;
            }
            for (i, pair) in c.faces().iter().enumerate() {
                for (nu, &f) in pair.iter().enumerate() {
                    if self.image.get(f) != Some(&d.faces()[i][nu]) {
                        out.push(MapViolation::Naturality {
                            cell: c.id().to_string(),
                            position: i,
                            orientation: nu as u8,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self, source: &PrecubicalSet, target: &PrecubicalSet) -> bool {
        self.violations(source, target).is_empty()
    }
}
