//! Paths, their ipomset labels and bounded language extraction.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::{Hda, HdaError};
use crate::bits::{self, bit};
use crate::precubical::PrecubicalSet;
use crate::{Ipomset, Language};

/// One step of a path. `Up(A)` enters a cell `y` from `δ^0_A(y)`;
/// `Down(B)` leaves a cell `x` for `δ^1_B(x)`. Positions refer to the
/// higher-dimensional cell of the step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Step {
    Up(Vec<usize>),
    Down(Vec<usize>),
}

/// `x_0, φ_1, x_1, …, φ_n, x_n` with `cells = [x_0, …, x_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub cells: Vec<usize>,
    pub steps: Vec<Step>,
}

impl Path {
    /// The path of length 0 at `x`.
    pub fn at(x: usize) -> Self {
        Path {
            cells: vec![x],
            steps: Vec::new(),
        }
    }

    pub fn up(mut self, a: Vec<usize>, to: usize) -> Self {
        self.steps.push(Step::Up(a));
        self.cells.push(to);
        self
    }

    pub fn down(mut self, b: Vec<usize>, to: usize) -> Self {
        self.steps.push(Step::Down(b));
        self.cells.push(to);
        self
    }

    pub fn first(&self) -> usize {
        self.cells[0]
    }

    pub fn last(&self) -> usize {
        *self.cells.last().expect("paths are non-empty")
    }

    /// `self * other`, if `other` starts where `self` ends.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.last() != other.first() {
            return None;
        }
        Some(Path {
            cells: self.cells.iter().chain(&other.cells[1..]).copied().collect(),
            steps: self.steps.iter().chain(&other.steps).cloned().collect(),
        })
    }

    /// Checks every step against the face maps of `x`.
    pub fn validate(&self, x: &PrecubicalSet) -> Result<(), HdaError> {
        let fail = |step: usize, reason: String| Err(HdaError::InvalidPath { step, reason });
        if self.cells.len() != self.steps.len() + 1 {
            return fail(0, "cell and step counts do not match".into());
        }
        if let Some(&c) = self.cells.iter().find(|&&c| c >= x.len()) {
            return fail(0, format!("unknown cell #{c}"));
        }
        for (k, step) in self.steps.iter().enumerate() {
            let (before, after) = (self.cells[k], self.cells[k + 1]);
            let (high, positions) = match step {
                Step::Up(a) => (after, a),
                Step::Down(b) => (before, b),
            };
            let dim = x.cell(high).dimension();
            let Some(mask) = mask_of(positions, dim) else {
                return fail(k + 1, "position out of range or repeated".into());
            };
            let ok = match step {
                Step::Up(_) => x.face_masks(after, mask, 0) == before,
                Step::Down(_) => x.face_masks(before, 0, mask) == after,
            };
            if !ok {
                return fail(k + 1, "cells are not related by the stated face".into());
            }
        }
        Ok(())
    }

    /// Dimension of the first cell plus all positions entered by up-steps.
    pub fn event_count(&self, x: &PrecubicalSet) -> usize {
        let entered: usize = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Up(a) => a.len(),
                Step::Down(_) => 0,
            })
            .sum();
        x.cell(self.first()).dimension() + entered
    }
}

fn mask_of(positions: &[usize], dim: usize) -> Option<u64> {
    let mut mask = 0u64;
    for &p in positions {
        if p >= dim || mask & bit(p) != 0 {
            return None;
        }
        mask |= bit(p);
    }
    Some(mask)
}

fn cell_label(x: &PrecubicalSet, c: usize, sources: u64, targets: u64) -> Ipomset {
    Ipomset::discrete(x.cell(c).word(), sources, targets)
}

fn identity_label(x: &PrecubicalSet, c: usize) -> Ipomset {
    let all = bits::full(x.cell(c).dimension());
    cell_label(x, c, all, all)
}

fn up_label(x: &PrecubicalSet, y: usize, a: u64) -> Ipomset {
    let all = bits::full(x.cell(y).dimension());
    cell_label(x, y, all & !a, all)
}

fn down_label(x: &PrecubicalSet, c: usize, b: u64) -> Ipomset {
    let all = bits::full(x.cell(c).dimension());
    cell_label(x, c, all, all & !b)
}

/// The label `ev(α)`: the gluing of the labels of its steps.
pub fn ev_label(x: &PrecubicalSet, path: &Path) -> Result<Ipomset, HdaError> {
    path.validate(x)?;
    let mut label = identity_label(x, path.first());
    for (k, step) in path.steps.iter().enumerate() {
        let dim = |c: usize| x.cell(c).dimension();
        let next = match step {
            Step::Up(a) => up_label(x, path.cells[k + 1], mask_of(a, dim(path.cells[k + 1])).unwrap_or(0)),
            Step::Down(b) => down_label(x, path.cells[k], mask_of(b, dim(path.cells[k])).unwrap_or(0)),
        };
        label = label
            .glue(&next)
            .expect("consecutive step labels of a valid path match");
    }
    Ok(label)
}

/// For each cell `x`, every `(y, A)` with `A ≠ ∅` and `δ^0_A(y) = x`.
fn up_index(x: &PrecubicalSet) -> Vec<Vec<(usize, u64)>> {
    let mut ups = vec![Vec::new(); x.len()];
    for y in 0..x.len() {
        let all = bits::full(x.cell(y).dimension());
        for a in subsets(all) {
            ups[x.face_masks(y, a, 0)].push((y, a));
        }
    }
    ups
}

/// Non-empty subsets of `full(n)`, which are exactly `1..=full(n)`.
fn subsets(all: u64) -> impl Iterator<Item = u64> {
    1..=all
}

/// Every accepting path with non-trivial steps and at most `max_events`
/// events.
pub fn enumerate_accepting_paths(h: &Hda, max_events: usize) -> Vec<Path> {
    let x = h.carrier();
    let ups = up_index(x);
    let mut out = Vec::new();
    for &s in h.start() {
        let events = x.cell(s).dimension();
        if events <= max_events {
            walk(h, &ups, Path::at(s), events, max_events, &mut out);
        }
    }
    out
}

fn walk(h: &Hda, ups: &[Vec<(usize, u64)>], path: Path, events: usize, max: usize, out: &mut Vec<Path>) {
    let x = h.carrier();
    let c = path.last();
    if h.is_accept(c) {
        out.push(path.clone());
    }
    for &(y, a) in &ups[c] {
        let added = a.count_ones() as usize;
        if events + added <= max {
            let next = path.clone().up(bits::ones(a).collect(), y);
            walk(h, ups, next, events + added, max, out);
        }
    }
    for b in subsets(bits::full(x.cell(c).dimension())) {
        let next = path.clone().down(bits::ones(b).collect(), x.face_masks(c, 0, b));
        walk(h, ups, next, events, max, out);
    }
}

/// Labels of all accepting paths with at most `max_events` events.
///
/// Explores pairs (cell, label so far); the label after a step depends only
/// on that pair, so each is expanded once.
pub fn accepted_labels(h: &Hda, max_events: usize) -> BTreeSet<Ipomset> {
    let x = h.carrier();
    let ups = up_index(x);
    let mut seen: HashSet<(usize, Ipomset)> = HashSet::new();
    let mut queue = VecDeque::new();
    for &s in h.start() {
        if x.cell(s).dimension() <= max_events {
            let state = (s, identity_label(x, s));
            if seen.insert(state.clone()) {
                queue.push_back(state);
            }
        }
    }
    let mut out = BTreeSet::new();
    while let Some((c, label)) = queue.pop_front() {
        if h.is_accept(c) {
            out.insert(label.clone());
        }
        let mut push = |y: usize, next: Ipomset| {
            let state = (y, next);
            if !seen.contains(&state) {
                seen.insert(state.clone());
                queue.push_back(state);
            }
        };
        for &(y, a) in &ups[c] {
            if label.len() + a.count_ones() as usize <= max_events {
                let next = label.glue(&up_label(x, y, a)).expect("up-step labels match");
                push(y, next);
            }
        }
        for b in subsets(bits::full(x.cell(c).dimension())) {
            let next = label.glue(&down_label(x, c, b)).expect("down-step labels match");
            push(x.face_masks(c, 0, b), next);
        }
    }
    out
}

/// The language of `h` restricted to at most `max_events` events.
pub fn language(h: &Hda, max_events: usize) -> Language {
    Language::normalize(accepted_labels(h, max_events)).with_event_bound(max_events)
}
