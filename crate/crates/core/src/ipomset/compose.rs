//! Gluing and parallel composition.

use super::{Ipomset, IpomsetError, Relations};
use crate::bits::{self, has, ones};

impl Ipomset {
    /// Gluing composition `self * other`.
    ///
    /// The targets of `self` are identified with the sources of `other`
    /// along the unique label- and order-preserving bijection. Every
    /// non-target of `self` precedes every non-source of `other`.
    pub fn glue(&self, other: &Ipomset) -> Result<Ipomset, IpomsetError> {
        let left = self.interface_events(self.targets);
        let right = other.interface_events(other.sources);
        let left_word: Vec<_> = left.iter().map(|&i| self.labels[i].clone()).collect();
        let right_word: Vec<_> = right.iter().map(|&i| other.labels[i].clone()).collect();
        if left_word != right_word {
            return Err(IpomsetError::SequentialMismatch {
                left: left_word,
                right: right_word,
            });
        }

        let p = self.len();
        // Position of each event of `other` in the glued carrier.
        let mut place = vec![usize::MAX; other.len()];
        for (&t, &s) in left.iter().zip(&right) {
            place[s] = t;
        }
        let mut next = p;
        for (y, slot) in place.iter_mut().enumerate() {
            if !has(other.sources, y) {
                *slot = next;
                next += 1;
            }
        }
        let n = next;
        if n > super::MAX_EVENTS {
            return Err(IpomsetError::TooManyEvents(n));
        }
        let moved = |set: u64| bits::permute_set(set, &place);

        let mut labels = self.labels.clone();
        labels.extend(
            (0..other.len())
                .filter(|&y| !has(other.sources, y))
                .map(|y| other.labels[y].clone()),
        );
        let mut prec = self.prec.clone();
        prec.resize(n, 0);
        let mut order = self.order.clone();
        order.resize(n, 0);
        for y in 0..other.len() {
            prec[place[y]] |= moved(other.prec[y]);
            order[place[y]] |= moved(other.order[y]);
        }
        let fresh = bits::full(n) & !bits::full(p);
        for x in ones(bits::full(p) & !self.targets) {
            prec[x] |= fresh;
        }
        let glued = Relations {
            labels,
            prec,
            order,
            sources: self.sources,
            targets: moved(other.targets),
        };
        glued.finish().map(|(q, _)| q).map_err(|e| match e {
            IpomsetError::CycleInPrecedence(_) | IpomsetError::EventOrderCycle(_) => {
                IpomsetError::InternalOrderCycle
            }
            other => other,
        })
    }

    /// Parallel composition `self ∥ other`: disjoint union, all events of
    /// `self` before all events of `other` in the event order.
    pub fn parallel(&self, other: &Ipomset) -> Ipomset {
        let p = self.len();
        let n = p + other.len();
        assert!(n <= super::MAX_EVENTS, "parallel composition exceeds {} events", super::MAX_EVENTS);
        let shift = |set: u64| set << p;
        let right = bits::full(n) & !bits::full(p);
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let prec = self
            .prec
            .iter()
            .copied()
            .chain(other.prec.iter().map(|&r| shift(r)))
            .collect();
        let order = self
            .order
            .iter()
            .map(|&r| r | right)
            .chain(other.order.iter().map(|&r| shift(r)))
            .collect();
        Relations {
            labels,
            prec,
            order,
            sources: self.sources | shift(other.sources),
            targets: self.targets | shift(other.targets),
        }
        .finish()
        .expect("parallel composition of valid ipomsets is valid")
        .0
    }

    /// Whether `self * other` is defined.
    pub fn matches_sequentially(&self, other: &Ipomset) -> bool {
        self.target_word() == other.source_word()
    }
}
