//! Finite precubical sets over the labelled precube category.
//!
//! A cell has a shape (a word) and, for each position `i` and orientation
//! `ν`, an elementary face `δ^ν_i` whose shape deletes letter `i`. Positions
//! are 0-based. Cells are kept sorted by `(dimension, id)`.

mod coface;
mod colimit;
mod map;
mod ops;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::Symbol;

pub use coface::{CofaceError, CofaceMap, LoSet};
pub use colimit::{finite_colimit, Arrow, Colimit, Diagram};
pub use map::{MapViolation, PrecubicalMap};

/// One problem found while validating a precubical set.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("duplicate cell id {0:?}")]
    DuplicateId(String),
    #[error("cell {cell:?} has an empty symbol in its word")]
    EmptySymbol { cell: String },
    #[error("cell {cell:?} of dimension {expected} lists {found} face pairs")]
    FaceCount {
        cell: String,
        expected: usize,
        found: usize,
    },
    #[error("face δ^{orientation}_{position} of {cell:?} refers to unknown cell {target:?}")]
    UnknownFace {
        cell: String,
        position: usize,
        orientation: u8,
        target: String,
    },
    #[error("face δ^{orientation}_{position} of {cell:?} has the wrong shape")]
    FaceShape {
        cell: String,
        position: usize,
        orientation: u8,
    },
    #[error("cell {cell:?} breaks δ^{nu}_{i} δ^{mu}_{j} = δ^{mu}_{j_minus_one} δ^{nu}_{i}")]
    CubicalIdentity {
        cell: String,
        i: usize,
        j: usize,
        j_minus_one: usize,
        nu: u8,
        mu: u8,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrecubicalError {
    #[error("invalid precubical set: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown cell {0:?}")]
    UnknownCell(String),
    #[error("position {position} out of range for cell {cell:?} of dimension {dimension}")]
    PositionOutOfRange {
        cell: String,
        position: usize,
        dimension: usize,
    },
    #[error("position {position} is in both face sets")]
    OverlappingParts { position: usize },
    #[error("ill-formed diagram: {0}")]
    IllFormedDiagram(String),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// Serialized form of a cell: `faces[i] = [δ^0_i, δ^1_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCell {
    pub id: String,
    pub word: Vec<String>,
    #[serde(default)]
    pub faces: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cell {
    pub(crate) id: String,
    pub(crate) word: Vec<Symbol>,
    pub(crate) faces: Vec<[usize; 2]>,
}

impl Cell {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn word(&self) -> &[Symbol] {
        &self.word
    }

    pub fn dimension(&self) -> usize {
        self.word.len()
    }

    /// `(δ^0_i, δ^1_i)` as cell indices.
    pub fn faces(&self) -> &[[usize; 2]] {
        &self.faces
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PrecubicalSet {
    cells: Vec<Cell>,
    index: HashMap<String, usize>,
}

impl PrecubicalSet {
    pub fn empty() -> Self {
        PrecubicalSet::default()
    }

    /// Parses and fully validates, reporting every violation found.
    pub fn from_raw(raw: &[RawCell]) -> Result<Self, PrecubicalError> {
        let mut violations = Vec::new();
        let mut index = HashMap::new();
        for (k, c) in raw.iter().enumerate() {
            if index.insert(c.id.clone(), k).is_some() {
                violations.push(Violation::DuplicateId(c.id.clone()));
            }
            if c.word.iter().any(|s| s.is_empty()) {
                violations.push(Violation::EmptySymbol { cell: c.id.clone() });
            }
        }
        let mut cells = Vec::with_capacity(raw.len());
        for c in raw {
            if c.faces.len() != c.word.len() {
                violations.push(Violation::FaceCount {
                    cell: c.id.clone(),
                    expected: c.word.len(),
                    found: c.faces.len(),
                });
            }
            let mut faces = Vec::with_capacity(c.faces.len());
            for (position, pair) in c.faces.iter().enumerate() {
                let mut resolved = [usize::MAX; 2];
                for (nu, target) in pair.iter().enumerate() {
                    match index.get(target) {
                        Some(&t) => resolved[nu] = t,
                        None => violations.push(Violation::UnknownFace {
                            cell: c.id.clone(),
                            position,
                            orientation: nu as u8,
                            target: target.clone(),
                        }),
                    }
                }
                faces.push(resolved);
            }
            cells.push(Cell {
                id: c.id.clone(),
                word: c.word.iter().map(Symbol::from).collect(),
                faces,
            });
        }
        if !violations.is_empty() {
            return Err(PrecubicalError::Invalid(violations));
        }
        let set = PrecubicalSet::from_cells(cells);
        let violations = set.violations();
        if violations.is_empty() {
            Ok(set)
        } else {
            Err(PrecubicalError::Invalid(violations))
        }
    }

    /// Sorts cells by `(dimension, id)` and remaps face indices. Faces must
    /// refer to positions in `cells`.
    pub(crate) fn from_cells(cells: Vec<Cell>) -> Self {
        PrecubicalSet::from_cells_indexed(cells).0
    }

    /// Like [`PrecubicalSet::from_cells`], also returning `old -> new` indices.
    pub(crate) fn from_cells_indexed(mut cells: Vec<Cell>) -> (Self, Vec<usize>) {
        let mut order: Vec<usize> = (0..cells.len()).collect();
        order.sort_by(|&x, &y| {
            (cells[x].dimension(), &cells[x].id).cmp(&(cells[y].dimension(), &cells[y].id))
        });
        let inverse = crate::bits::invert(&order);
        for c in &mut cells {
            for pair in &mut c.faces {
                for f in pair.iter_mut() {
                    *f = inverse[*f];
                }
            }
        }
        let mut slots: Vec<Option<Cell>> = cells.into_iter().map(Some).collect();
        let cells: Vec<Cell> = order.iter().map(|&o| slots[o].take().unwrap()).collect();
        let index = cells
            .iter()
            .enumerate()
            .map(|(k, c)| (c.id.clone(), k))
            .collect();
        (PrecubicalSet { cells, index }, inverse)
    }

    pub fn to_raw(&self) -> Vec<RawCell> {
        self.cells
            .iter()
            .map(|c| RawCell {
                id: c.id.clone(),
                word: c.word.iter().map(|s| s.to_string()).collect(),
                faces: c
                    .faces
                    .iter()
                    .map(|[lo, hi]| [self.cells[*lo].id.clone(), self.cells[*hi].id.clone()])
                    .collect(),
            })
            .collect()
    }

    /// Every invariant violation; empty iff the set is valid.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for c in &self.cells {
            if c.faces.len() != c.word.len() {
                out.push(Violation::FaceCount {
                    cell: c.id.clone(),
                    expected: c.word.len(),
                    found: c.faces.len(),
                });
                continue;
            }
            let mut shapes_ok = true;
            for (i, pair) in c.faces.iter().enumerate() {
                for (nu, &f) in pair.iter().enumerate() {
                    let face = &self.cells[f];
                    let expected = c.word[..i].iter().chain(&c.word[i + 1..]);
                    if face.word.len() + 1 != c.word.len() || !face.word.iter().eq(expected) {
                        shapes_ok = false;
                        out.push(Violation::FaceShape {
                            cell: c.id.clone(),
                            position: i,
                            orientation: nu as u8,
                        });
                    }
                }
            }
            if !shapes_ok {
                continue;
            }
            let n = c.word.len();
            for j in 0..n {
                for i in 0..j {
                    for nu in 0..2 {
                        for mu in 0..2 {
                            let left = self.cells[c.faces[j][mu]].faces[i][nu];
                            let right = self.cells[c.faces[i][nu]].faces[j - 1][mu];
                            if left != right {
                                out.push(Violation::CubicalIdentity {
                                    cell: c.id.clone(),
                                    i,
                                    j,
                                    j_minus_one: j - 1,
                                    nu: nu as u8,
                                    mu: mu as u8,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), PrecubicalError> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(PrecubicalError::Invalid(v))
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, x: usize) -> &Cell {
        &self.cells[x]
    }

    pub fn find(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn lookup(&self, id: &str) -> Result<usize, PrecubicalError> {
        self.find(id)
            .ok_or_else(|| PrecubicalError::UnknownCell(id.to_string()))
    }

    pub fn dimension(&self) -> usize {
        self.cells.iter().map(Cell::dimension).max().unwrap_or(0)
    }

    /// Elementary face `δ^ν_i(x)`, `upper` selecting `ν = 1`.
    #[inline]
    pub fn face(&self, x: usize, position: usize, upper: bool) -> usize {
        self.cells[x].faces[position][upper as usize]
    }

    /// `δ_{A,B}(x)` with `A`, `B` given as position bitsets; deletes in
    /// descending position order.
    pub(crate) fn face_masks(&self, mut x: usize, a: u64, b: u64) -> usize {
        let mut both = a | b;
        while both != 0 {
            let p = 63 - both.leading_zeros() as usize;
            both &= !(1 << p);
            x = self.face(x, p, b >> p & 1 == 1);
        }
        x
    }

    /// `δ_{A,B}(x)`.
    pub fn apply_face(&self, x: usize, a: &[usize], b: &[usize]) -> Result<usize, PrecubicalError> {
        let cell = self
            .cells
            .get(x)
            .ok_or_else(|| PrecubicalError::UnknownCell(format!("#{x}")))?;
        let n = cell.dimension();
        let mut ma = 0u64;
        let mut mb = 0u64;
        for (set, mask) in [(a, &mut ma), (b, &mut mb)] {
            for &p in set {
                if p >= n {
                    return Err(PrecubicalError::PositionOutOfRange {
                        cell: cell.id.clone(),
                        position: p,
                        dimension: n,
                    });
                }
                *mask |= 1 << p;
            }
        }
        if ma & mb != 0 {
            return Err(PrecubicalError::OverlappingParts {
                position: (ma & mb).trailing_zeros() as usize,
            });
        }
        Ok(self.face_masks(x, ma, mb))
    }

    /// The presheaf action `X[d](x)` of a coface map `d` on a cell of shape
    /// `d.target()`.
    pub fn act(&self, d: &CofaceMap, x: usize) -> Result<usize, PrecubicalError> {
        if self.cells[x].word != d.target().word() {
            return Err(PrecubicalError::UnknownCell(format!(
                "{} has shape other than {}",
                self.cells[x].id,
                d.target()
            )));
        }
        self.apply_face(x, d.part_a(), d.part_b())
    }

    /// Number of cells of each shape.
    pub fn shape_counts(&self) -> BTreeMap<Vec<Symbol>, usize> {
        let mut out = BTreeMap::new();
        for c in &self.cells {
            *out.entry(c.word.clone()).or_default() += 1;
        }
        out
    }

    /// Cells one dimension up having `x` as an elementary face.
    pub fn cofaces(&self, x: usize) -> Vec<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.faces.iter().any(|pair| pair.contains(&x)))
            .map(|(y, _)| y)
            .collect()
    }
}

impl fmt::Debug for PrecubicalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for c in &self.cells {
            let faces: Vec<_> = c
                .faces
                .iter()
                .map(|[lo, hi]| (&self.cells[*lo].id, &self.cells[*hi].id))
                .collect();
            let word: String = c.word.iter().map(|s| s.as_str()).collect();
            list.entry(&format_args!("{} ({}) {:?}", c.id, word, faces));
        }
        list.finish()
    }
}

/// Escapes `\` and `,` so that pair ids stay unambiguous.
pub(crate) fn escape(id: &str) -> String {
    let mut out = String::with_capacity(id.len());
    for ch in id.chars() {
        if ch == '\\' || ch == ',' {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}
