//! Down-closed languages of interval ipomsets, represented by the antichain
//! of their `⊑`-maximal generators.
//!
//! Subsumption preserves the number of events, so restricting a language to
//! at most `k` events is a filter on generators, and two languages are equal
//! iff their generator antichains are.

use std::collections::{BTreeMap, BTreeSet};

use crate::ipomset::Ipomset;

/// A down-closed set of interval ipomsets.
///
/// `event_bound`, when present, records that the language is only known to
/// be exact for members with at most that many events (bounded extraction
/// from an automaton).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Language {
    generators: Vec<Ipomset>,
    event_bound: Option<usize>,
}

impl Language {
    /// The empty language.
    pub fn empty() -> Self {
        Language::default()
    }

    /// `{ε}`, the unit of parallel composition.
    pub fn unit() -> Self {
        Language::normalize([Ipomset::empty()])
    }

    /// Down-closure of a finite set. Non-interval elements contribute the
    /// maximal interval ipomsets below them.
    pub fn normalize<I: IntoIterator<Item = Ipomset>>(items: I) -> Self {
        let mut distinct = BTreeSet::new();
        for p in items {
            if p.is_interval() {
                distinct.insert(p);
            } else {
                distinct.extend(p.interval_down_set());
            }
        }
        Language {
            generators: maximal(distinct),
            event_bound: None,
        }
    }

    /// Down-closure of a single ipomset.
    pub fn principal(p: Ipomset) -> Self {
        Language::normalize([p])
    }

    pub fn with_event_bound(mut self, bound: usize) -> Self {
        self.event_bound = Some(bound);
        self
    }

    pub fn generators(&self) -> &[Ipomset] {
        &self.generators
    }

    pub fn event_bound(&self) -> Option<usize> {
        self.event_bound
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Membership in the down-closure.
    pub fn contains(&self, p: &Ipomset) -> bool {
        p.is_interval() && self.generators.iter().any(|q| p.subsumed_by(q).is_some())
    }

    /// Members with at most `max_events` events.
    pub fn restrict(&self, max_events: usize) -> Language {
        Language {
            generators: self
                .generators
                .iter()
                .filter(|p| p.len() <= max_events)
                .cloned()
                .collect(),
            event_bound: Some(self.event_bound.map_or(max_events, |b| b.min(max_events))),
        }
    }

    /// Every member with at most `max_events` events.
    pub fn expand(&self, max_events: usize) -> BTreeSet<Ipomset> {
        self.generators
            .iter()
            .filter(|p| p.len() <= max_events)
            .flat_map(|p| p.interval_down_set())
            .collect()
    }

    /// Sequential composition: down-closure of all defined gluings.
    pub fn seq_compose(&self, other: &Language) -> Language {
        let glued = self.generators.iter().flat_map(|p| {
            other
                .generators
                .iter()
                .filter_map(move |q| p.glue(q).ok())
        });
        Language {
            event_bound: min_bound(self.event_bound, other.event_bound),
            ..Language::normalize(glued)
        }
    }

    /// Parallel composition: down-closure of all `P ∥ Q`.
    pub fn par_compose(&self, other: &Language) -> Language {
        let composed = self
            .generators
            .iter()
            .flat_map(|p| other.generators.iter().map(move |q| p.parallel(q)));
        Language {
            event_bound: min_bound(self.event_bound, other.event_bound),
            ..Language::normalize(composed)
        }
    }

    /// Members of `self ∥ other` with at most `max_events` events, without
    /// forming the larger products.
    pub fn par_compose_bounded(&self, other: &Language, max_events: usize) -> Language {
        let composed = self.generators.iter().flat_map(|p| {
            other
                .generators
                .iter()
                .filter(move |q| p.len() + q.len() <= max_events)
                .map(move |q| p.parallel(q))
        });
        let bound = min_bound(self.event_bound, other.event_bound).map_or(max_events, |b| b.min(max_events));
        Language::normalize(composed).with_event_bound(bound)
    }

    /// `⋃_{n ≤ max_power} L^{∥n}` with `L^{∥0} = {ε}`.
    pub fn par_closure_bounded(&self, max_power: usize) -> Language {
        let mut power = Language::unit();
        let mut acc = Language::unit();
        for _ in 0..max_power {
            power = self.par_compose(&power);
            if power.is_empty() {
                break;
            }
            acc = acc.union(&power);
        }
        acc.event_bound = self.event_bound;
        acc
    }

    pub fn union(&self, other: &Language) -> Language {
        Language {
            event_bound: min_bound(self.event_bound, other.event_bound),
            ..Language::normalize(
                self.generators
                    .iter()
                    .chain(other.generators.iter())
                    .cloned(),
            )
        }
    }

    pub fn is_subset(&self, other: &Language) -> bool {
        self.generators.iter().all(|p| other.contains(p))
    }

    /// Equality of the denoted sets; event bounds are not compared.
    pub fn is_equal(&self, other: &Language) -> bool {
        self.generators == other.generators
    }
}

fn min_bound(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Drops every element strictly below another. Comparisons only happen
/// within a signature class, since `⊑` preserves it.
fn maximal(items: BTreeSet<Ipomset>) -> Vec<Ipomset> {
    let mut classes: BTreeMap<_, Vec<Ipomset>> = BTreeMap::new();
    for p in items {
        classes.entry(p.signature()).or_default().push(p);
    }
    let mut out = Vec::new();
    for class in classes.into_values() {
        for (i, p) in class.iter().enumerate() {
            let dominated = class
                .iter()
                .enumerate()
                .any(|(j, q)| i != j && p.subsumed_by(q).is_some());
            if !dominated {
                out.push(p.clone());
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ipomset::{validate, RawIpomset};
    use crate::Symbol;

    fn seq(a: &str, b: &str) -> Ipomset {
        validate(&RawIpomset::new([a, b]).precede(0, 1)).unwrap()
    }

    fn par(a: &str, b: &str) -> Ipomset {
        validate(&RawIpomset::new([a, b]).order(0, 1)).unwrap()
    }

    #[test]
    fn contains_down_closure() {
        let l = Language::principal(par("a", "b"));
        assert!(l.contains(&seq("a", "b")));
        assert!(l.contains(&seq("b", "a")));
        assert!(l.contains(&par("a", "b")));
        assert!(!l.contains(&par("a", "a")));
    }

    #[test]
    fn normalize_drops_dominated() {
        let l = Language::normalize([seq("a", "b"), par("a", "b")]);
        assert_eq!(l.generators(), &[par("a", "b")]);
        assert!(Language::normalize([]).is_empty());
        let p = par("a", "b");
        assert_eq!(Language::normalize([p.clone(), p.clone()]).generators(), &[p]);
    }

    #[test]
    fn sequential_composition() {
        let a = Language::principal(Ipomset::singleton("a"));
        let c = Language::principal(Ipomset::singleton("c"));
        assert!(Language::unit().seq_compose(&a).is_equal(&a));
        assert_eq!(a.seq_compose(&c).generators(), &[seq("a", "c")]);

        let a_out = Language::principal(Ipomset::discrete(&[Symbol::from("a")], 0, 1));
        let b = Language::principal(Ipomset::singleton("b"));
        assert!(a_out.seq_compose(&b).is_empty());
    }

    #[test]
    fn parallel_composition_and_closure() {
        let a = Language::principal(Ipomset::singleton("a"));
        assert!(Language::unit().par_compose(&a).is_equal(&a));
        assert_eq!(a.par_compose(&a).generators(), &[Ipomset::parallel_power("a", 2)]);

        assert!(a.par_closure_bounded(0).is_equal(&Language::unit()));
        let two = a.par_closure_bounded(2);
        let expected: Vec<_> = (0..=2).map(|n| Ipomset::parallel_power("a", n)).collect();
        let mut got = two.generators().to_vec();
        got.sort_by_key(|p| p.len());
        assert_eq!(got, expected);
        assert!(Language::empty().par_closure_bounded(3).is_equal(&Language::unit()));
    }

    #[test]
    fn expand_concurrent_pair() {
        let l = Language::principal(par("a", "b"));
        let e = l.expand(2);
        let expected: BTreeSet<_> = [par("a", "b"), seq("a", "b"), seq("b", "a")].into();
        assert_eq!(e, expected);
        assert!(l.expand(0).is_empty());
        assert_eq!(Language::unit().expand(0).len(), 1);
    }

    #[test]
    fn subset_and_equality() {
        let lo = Language::principal(seq("a", "b"));
        let hi = Language::principal(par("a", "b"));
        assert!(lo.is_subset(&lo));
        assert!(lo.is_subset(&hi));
        assert!(!hi.is_subset(&lo));
        assert!(lo.union(&hi).is_equal(&hi));
    }

    #[test]
    fn bounded_parallel_composition_is_a_restriction() {
        let l = Language::normalize([seq("a", "b"), Ipomset::singleton("a")]);
        let m = Language::normalize([par("a", "b"), Ipomset::empty()]);
        for k in 0..=5 {
            assert!(l.par_compose_bounded(&m, k).is_equal(&l.par_compose(&m).restrict(k)));
        }
    }

    #[test]
    fn restriction_filters_generators() {
        let l = Language::principal(Ipomset::singleton("a")).par_closure_bounded(3);
        assert_eq!(l.restrict(1).generators().len(), 2);
        assert_eq!(l.restrict(1).event_bound(), Some(1));
    }
}
