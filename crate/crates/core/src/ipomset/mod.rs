//! Interval ipomsets: labelled posets with interfaces.
//!
//! An [`Ipomset`] carries a precedence order `<`, an event order `⋖`, a
//! source interface `S` and a target interface `T`. The event order is kept
//! in *essential* form: it only relates `<`-incomparable pairs, exactly one
//! direction per pair. Two ipomsets that differ only in `⋖` on comparable
//! pairs subsume each other, so this quotient turns `⊑` into a partial order
//! on values.
//!
//! Values are always canonical. Whenever `≺ = < ∪ ⋖` is acyclic (the common
//! case) events are numbered along `≺`, so `i ≺ j` iff `i < j` as integers.
//! Gluing can produce labels where `≺` has a cycle (an event overlapping two
//! sequential events in opposite positional order); those are numbered by a
//! separate isomorphism-invariant rule, see [`Ipomset::total_order_is_linear`].
//! Either way structural equality is isomorphism.

mod canon;
mod compose;
mod extend;
mod interval;
mod subsume;

use std::fmt;

use thiserror::Error;

use crate::bits::{self, bit, has, ones};
use crate::Symbol;

pub use interval::{IntervalRepresentation, TwoPlusTwo};
pub use subsume::subsumes;

/// Events are stored in `u64` bitsets.
pub const MAX_EVENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IpomsetError {
    #[error("precedence contains a cycle through event {0}")]
    CycleInPrecedence(usize),
    #[error("events {0} and {1} are incomparable but not related by the event order")]
    EventOrderIncomplete(usize, usize),
    #[error("event order contains a cycle through event {0}")]
    EventOrderCycle(usize),
    #[error("source event {0} has a predecessor")]
    SourceNotMinimal(usize),
    #[error("target event {0} has a successor")]
    TargetNotMaximal(usize),
    #[error("event {0} has an empty label")]
    LabelMissing(usize),
    #[error("event index {index} out of range for {len} events")]
    UnknownEvent { index: usize, len: usize },
    #[error("{0} events exceed the supported maximum of {MAX_EVENTS}")]
    TooManyEvents(usize),
    #[error("target interface {left:?} does not match source interface {right:?}")]
    SequentialMismatch {
        left: Vec<Symbol>,
        right: Vec<Symbol>,
    },
    #[error("glued order is not antisymmetric")]
    InternalOrderCycle,
}

/// Uncanonicalized ipomset data with events identified by index.
///
/// Precedence is closed transitively on validation; event-order pairs on
/// comparable events are accepted and dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawIpomset {
    pub labels: Vec<String>,
    pub precedence: Vec<(usize, usize)>,
    pub event_order: Vec<(usize, usize)>,
    pub sources: Vec<usize>,
    pub targets: Vec<usize>,
}

impl RawIpomset {
    pub fn new<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        RawIpomset {
            labels: labels.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }

    pub fn precede(mut self, x: usize, y: usize) -> Self {
        self.precedence.push((x, y));
        self
    }

    pub fn order(mut self, x: usize, y: usize) -> Self {
        self.event_order.push((x, y));
        self
    }

    pub fn source(mut self, x: usize) -> Self {
        self.sources.push(x);
        self
    }

    pub fn target(mut self, x: usize) -> Self {
        self.targets.push(x);
        self
    }
}

/// A canonical interval-or-not ipomset. See the module docs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ipomset {
    labels: Vec<Symbol>,
    /// `prec[i]` has bit `j` iff `i < j`.
    prec: Vec<u64>,
    /// `order[i]` has bit `j` iff `i ⋖ j` and the pair is `<`-incomparable.
    order: Vec<u64>,
    sources: u64,
    targets: u64,
}

/// Relations under construction, before closure and canonical renumbering.
#[derive(Debug, Clone)]
pub(crate) struct Relations {
    pub labels: Vec<Symbol>,
    pub prec: Vec<u64>,
    pub order: Vec<u64>,
    pub sources: u64,
    pub targets: u64,
}

impl Relations {
    /// Closes both relations, checks every invariant and canonicalizes.
    /// Returns the ipomset and the map old index -> new index.
    pub(crate) fn finish(mut self) -> Result<(Ipomset, Vec<usize>), IpomsetError> {
        let n = self.labels.len();
        if n > MAX_EVENTS {
            return Err(IpomsetError::TooManyEvents(n));
        }
        bits::close(&mut self.prec);
        if let Some(i) = (0..n).find(|&i| has(self.prec[i], i)) {
            return Err(IpomsetError::CycleInPrecedence(i));
        }
        bits::close(&mut self.order);
        if let Some(i) = (0..n).find(|&i| has(self.order[i], i)) {
            return Err(IpomsetError::EventOrderCycle(i));
        }
        let pred = bits::transpose(&self.prec);
        let all = bits::full(n);
        for (i, (order, &below)) in self.order.iter_mut().zip(&pred).enumerate() {
            *order &= all & !(self.prec[i] | below | bit(i));
        }
        for (i, &below) in pred.iter().enumerate() {
            let incomparable = all & !(self.prec[i] | below | bit(i));
            for j in ones(incomparable).filter(|&j| j > i) {
                if !has(self.order[i], j) && !has(self.order[j], i) {
                    return Err(IpomsetError::EventOrderIncomplete(i, j));
                }
            }
        }
        if let Some(s) = ones(self.sources).find(|&s| pred[s] != 0) {
            return Err(IpomsetError::SourceNotMinimal(s));
        }
        if let Some(t) = ones(self.targets).find(|&t| self.prec[t] != 0) {
            return Err(IpomsetError::TargetNotMaximal(t));
        }
        let raw = Ipomset {
            labels: self.labels,
            prec: self.prec,
            order: self.order,
            sources: self.sources,
            targets: self.targets,
        };
        let order = canon::canonical_order(&raw);
        let inverse = bits::invert(&order);
        Ok((raw.permuted(&order, &inverse), inverse))
    }
}

/// Validates raw data and returns the canonical ipomset.
pub fn validate(raw: &RawIpomset) -> Result<Ipomset, IpomsetError> {
    canonicalize(raw).map(|(p, _)| p)
}

/// Like [`validate`], also returning the renumbering `old index -> new index`.
pub fn canonicalize(raw: &RawIpomset) -> Result<(Ipomset, Vec<usize>), IpomsetError> {
    let n = raw.labels.len();
    if n > MAX_EVENTS {
        return Err(IpomsetError::TooManyEvents(n));
    }
    if let Some(i) = raw.labels.iter().position(|l| l.is_empty()) {
        return Err(IpomsetError::LabelMissing(i));
    }
    let check = |index: usize| {
        if index < n {
            Ok(index)
        } else {
            Err(IpomsetError::UnknownEvent { index, len: n })
        }
    };
    let mut prec = vec![0u64; n];
    for &(x, y) in &raw.precedence {
        prec[check(x)?] |= bit(check(y)?);
    }
    let mut order = vec![0u64; n];
    for &(x, y) in &raw.event_order {
        order[check(x)?] |= bit(check(y)?);
    }
    let mut sources = 0;
    for &s in &raw.sources {
        sources |= bit(check(s)?);
    }
    let mut targets = 0;
    for &t in &raw.targets {
        targets |= bit(check(t)?);
    }
    Relations {
        labels: raw.labels.iter().map(Symbol::from).collect(),
        prec,
        order,
        sources,
        targets,
    }
    .finish()
}

impl Ipomset {
    /// The empty ipomset `ε`.
    pub fn empty() -> Self {
        Ipomset {
            labels: Vec::new(),
            prec: Vec::new(),
            order: Vec::new(),
            sources: 0,
            targets: 0,
        }
    }

    /// A single event without interfaces.
    pub fn singleton(label: impl Into<Symbol>) -> Self {
        Ipomset::discrete(&[label.into()], 0, 0)
    }

    /// The label of a cube of shape `word`: no precedence, event order by
    /// position, interfaces given as position bitsets.
    pub fn discrete(word: &[Symbol], sources: u64, targets: u64) -> Self {
        let n = word.len();
        assert!(n <= MAX_EVENTS, "word too long");
        Ipomset {
            labels: word.to_vec(),
            prec: vec![0; n],
            order: (0..n).map(|i| bits::full(n) & !bits::full(i + 1)).collect(),
            sources,
            targets,
        }
    }

    /// `n` concurrent copies of one event, `(a)^{∥n}`.
    pub fn parallel_power(label: impl Into<Symbol>, n: usize) -> Self {
        let label = label.into();
        Ipomset::discrete(&vec![label; n], 0, 0)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &Symbol {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[Symbol] {
        &self.labels
    }

    /// `i < j` in the precedence order.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        has(self.prec[i], j)
    }

    /// `i ⋖ j` on a `<`-incomparable pair.
    pub fn event_order(&self, i: usize, j: usize) -> bool {
        has(self.order[i], j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.precedes(i, j) || self.precedes(j, i)
    }

    pub fn is_source(&self, i: usize) -> bool {
        has(self.sources, i)
    }

    pub fn is_target(&self, i: usize) -> bool {
        has(self.targets, i)
    }

    pub fn sources(&self) -> impl Iterator<Item = usize> + '_ {
        ones(self.sources)
    }

    pub fn targets(&self) -> impl Iterator<Item = usize> + '_ {
        ones(self.targets)
    }

    pub fn precedence_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |i| ones(self.prec[i]).map(move |j| (i, j)))
    }

    pub fn event_order_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |i| ones(self.order[i]).map(move |j| (i, j)))
    }

    /// True when `<` together with the essential event order is a strict
    /// total order. Events are then numbered along it.
    pub fn total_order_is_linear(&self) -> bool {
        (0..self.len()).all(|i| {
            let later = self.prec[i] | self.order[i];
            later == bits::full(self.len()) & !bits::full(i + 1)
        })
    }

    /// Sorted labels of the interface, ordered by `⋖`.
    pub fn source_word(&self) -> Vec<Symbol> {
        self.interface_word(self.sources)
    }

    pub fn target_word(&self) -> Vec<Symbol> {
        self.interface_word(self.targets)
    }

    /// Interface events sorted by the event order (interfaces are antichains).
    pub(crate) fn interface_events(&self, set: u64) -> Vec<usize> {
        let mut events: Vec<usize> = ones(set).collect();
        events.sort_by_key(|&i| std::cmp::Reverse((self.order[i] & set).count_ones()));
        events
    }

    fn interface_word(&self, set: u64) -> Vec<Symbol> {
        self.interface_events(set)
            .into_iter()
            .map(|i| self.labels[i].clone())
            .collect()
    }

    pub fn to_raw(&self) -> RawIpomset {
        RawIpomset {
            labels: self.labels.iter().map(|l| l.to_string()).collect(),
            precedence: self.precedence_pairs().collect(),
            event_order: self.event_order_pairs().collect(),
            sources: self.sources().collect(),
            targets: self.targets().collect(),
        }
    }

    /// Renumbers events: `order[p]` is the old index placed at `p`.
    pub(crate) fn permuted(&self, order: &[usize], inverse: &[usize]) -> Ipomset {
        Ipomset {
            labels: order.iter().map(|&o| self.labels[o].clone()).collect(),
            prec: bits::permute_rows(&self.prec, order, inverse),
            order: bits::permute_rows(&self.order, order, inverse),
            sources: bits::permute_set(self.sources, inverse),
            targets: bits::permute_set(self.targets, inverse),
        }
    }

    /// Size, sorted labels and interface sizes; preserved by `⊑`.
    pub(crate) fn signature(&self) -> (usize, Vec<Symbol>, u32, u32) {
        let mut labels = self.labels.clone();
        labels.sort();
        (
            self.len(),
            labels,
            self.sources.count_ones(),
            self.targets.count_ones(),
        )
    }
}

impl fmt::Debug for Ipomset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ipomset({self})")
    }
}

/// Compact notation, e.g. `[a b c | 0<2 1<2 | 0⋖1 | S{} T{2}]`.
impl fmt::Display for Ipomset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(" ");
        write!(
            f,
            "[{} | {} | {} | S{{{}}} T{{{}}}]",
            join(self.labels.iter().map(|l| l.to_string()).collect()),
            join(self.precedence_pairs().map(|(i, j)| format!("{i}<{j}")).collect()),
            join(self.event_order_pairs().map(|(i, j)| format!("{i}⋖{j}")).collect()),
            join(self.sources().map(|i| i.to_string()).collect()),
            join(self.targets().map(|i| i.to_string()).collect()),
        )
    }
}
