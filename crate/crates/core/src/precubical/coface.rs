//! Lo-sets and coface maps of the labelled precube category.

use std::fmt;

use thiserror::Error;

use crate::Symbol;

/// A finite linearly ordered labelled set, stored as its word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LoSet(Vec<Symbol>);

impl LoSet {
    pub fn new<I, S>(word: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Symbol>,
    {
        LoSet(word.into_iter().map(Into::into).collect())
    }

    pub fn empty() -> Self {
        LoSet(Vec::new())
    }

    pub fn word(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `U ⊛ V`.
    pub fn tensor(&self, other: &LoSet) -> LoSet {
        LoSet(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// The word with the given positions deleted.
    pub fn without(&self, positions: &[usize]) -> LoSet {
        LoSet(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, s)| s.clone())
                .collect(),
        )
    }
}

impl From<Vec<Symbol>> for LoSet {
    fn from(word: Vec<Symbol>) -> Self {
        LoSet(word)
    }
}

impl fmt::Debug for LoSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoSet({self})")
    }
}

impl fmt::Display for LoSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for s in &self.0 {
            f.write_str(s.as_str())?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CofaceError {
    #[error("target {outer} of the inner map does not match source {inner} of the outer map")]
    ShapeMismatch { inner: LoSet, outer: LoSet },
    #[error("image has {found} positions for a source of length {expected}")]
    ImageLength { expected: usize, found: usize },
    #[error("image is not strictly increasing inside the target")]
    ImageNotIncreasing,
    #[error("image position {0} carries a different label than its preimage")]
    LabelMismatch(usize),
    #[error("position {0} is not covered exactly once by image, A and B")]
    NotAPartition(usize),
}

/// A coface map `d = (f, A, B): source → target`. `A` holds the positions
/// not yet started, `B` the terminated ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CofaceMap {
    source: LoSet,
    target: LoSet,
    image: Vec<usize>,
    part_a: Vec<usize>,
    part_b: Vec<usize>,
}

impl CofaceMap {
    pub fn new(
        source: LoSet,
        target: LoSet,
        image: Vec<usize>,
        mut part_a: Vec<usize>,
        mut part_b: Vec<usize>,
    ) -> Result<Self, CofaceError> {
        if image.len() != source.len() {
            return Err(CofaceError::ImageLength {
                expected: source.len(),
                found: image.len(),
            });
        }
        if image.windows(2).any(|w| w[0] >= w[1]) || image.last().is_some_and(|&p| p >= target.len())
        {
            return Err(CofaceError::ImageNotIncreasing);
        }
        if let Some(p) = (0..image.len()).find(|&i| source.0[i] != target.0[image[i]]) {
            return Err(CofaceError::LabelMismatch(image[p]));
        }
        let mut cover = vec![0u8; target.len()];
        for &p in image.iter().chain(&part_a).chain(&part_b) {
            match cover.get_mut(p) {
                Some(c) => *c += 1,
                None => return Err(CofaceError::NotAPartition(p)),
            }
        }
        if let Some(p) = cover.iter().position(|&c| c != 1) {
            return Err(CofaceError::NotAPartition(p));
        }
        part_a.sort_unstable();
        part_b.sort_unstable();
        Ok(CofaceMap {
            source,
            target,
            image,
            part_a,
            part_b,
        })
    }

    /// `(id, ∅, ∅)`.
    pub fn identity(u: &LoSet) -> Self {
        CofaceMap {
            source: u.clone(),
            target: u.clone(),
            image: (0..u.len()).collect(),
            part_a: Vec::new(),
            part_b: Vec::new(),
        }
    }

    /// The elementary coface `d^ν_i` into `target`: position `i` goes to `A`
    /// when `upper` is false, to `B` otherwise.
    pub fn elementary(target: &LoSet, position: usize, upper: bool) -> Self {
        assert!(position < target.len(), "position out of range");
        let (part_a, part_b) = if upper {
            (vec![], vec![position])
        } else {
            (vec![position], vec![])
        };
        CofaceMap {
            source: target.without(&[position]),
            target: target.clone(),
            image: (0..target.len()).filter(|&p| p != position).collect(),
            part_a,
            part_b,
        }
    }

    pub fn source(&self) -> &LoSet {
        &self.source
    }

    pub fn target(&self) -> &LoSet {
        &self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn part_a(&self) -> &[usize] {
        &self.part_a
    }

    pub fn part_b(&self) -> &[usize] {
        &self.part_b
    }

    /// `self ∘ inner = (self.f ∘ inner.f, self.f(inner.A) ∪ self.A, self.f(inner.B) ∪ self.B)`.
    pub fn compose(&self, inner: &CofaceMap) -> Result<CofaceMap, CofaceError> {
        if inner.target != self.source {
            return Err(CofaceError::ShapeMismatch {
                inner: inner.target.clone(),
                outer: self.source.clone(),
            });
        }
        let f = |p: &usize| self.image[*p];
        let mut part_a: Vec<usize> = inner.part_a.iter().map(f).chain(self.part_a.iter().copied()).collect();
        let mut part_b: Vec<usize> = inner.part_b.iter().map(f).chain(self.part_b.iter().copied()).collect();
        part_a.sort_unstable();
        part_b.sort_unstable();
        Ok(CofaceMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            image: inner.image.iter().map(f).collect(),
            part_a,
            part_b,
        })
    }

    /// `d ⊛ e`: acts as `d` on the left block and as `e` on the right one.
    pub fn tensor(&self, other: &CofaceMap) -> CofaceMap {
        let shift = self.target.len();
        let moved = |v: &[usize]| v.iter().map(|p| p + shift).collect::<Vec<_>>();
        CofaceMap {
            source: self.source.tensor(&other.source),
            target: self.target.tensor(&other.target),
            image: self.image.iter().copied().chain(moved(&other.image)).collect(),
            part_a: self.part_a.iter().copied().chain(moved(&other.part_a)).collect(),
            part_b: self.part_b.iter().copied().chain(moved(&other.part_b)).collect(),
        }
    }

    /// Every coface map `source → target`.
    pub fn all(source: &LoSet, target: &LoSet) -> Vec<CofaceMap> {
        let mut out = Vec::new();
        let mut image = Vec::with_capacity(source.len());
        embeddings(source, target, 0, &mut image, &mut |image| {
            let rest: Vec<usize> = (0..target.len()).filter(|p| !image.contains(p)).collect();
            for mask in 0u64..(1 << rest.len()) {
                let mut a = Vec::new();
                let mut b = Vec::new();
                for (k, &p) in rest.iter().enumerate() {
                    if mask >> k & 1 == 0 {
                        a.push(p);
                    } else {
                        b.push(p);
                    }
                }
                out.push(CofaceMap {
                    source: source.clone(),
                    target: target.clone(),
                    image: image.to_vec(),
                    part_a: a,
                    part_b: b,
                });
            }
        });
        out
    }
}

fn embeddings(
    source: &LoSet,
    target: &LoSet,
    from: usize,
    image: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let k = image.len();
    if k == source.len() {
        emit(image);
        return;
    }
    let remaining = source.len() - k;
    for p in from..=target.len().saturating_sub(remaining) {
        if p < target.len() && target.0[p] == source.0[k] {
            image.push(p);
            embeddings(source, target, p + 1, image, emit);
            image.pop();
        }
    }
}
