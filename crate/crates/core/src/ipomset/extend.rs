//! Enumeration of everything below an ipomset in the subsumption order.

use std::collections::BTreeSet;

use super::{Ipomset, Relations};
use crate::bits::{self, bit, has};

impl Ipomset {
    /// Every canonical ipomset `P` with `P ⊑ self`, interval or not.
    ///
    /// Each one is isomorphic to a strict-order extension of `<` on the same
    /// carrier that keeps sources minimal and targets maximal, with the event
    /// order inherited on pairs that stay concurrent.
    pub fn down_set(&self) -> BTreeSet<Ipomset> {
        let n = self.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.comparable(i, j))
            .collect();
        let mut out = BTreeSet::new();
        let mut walk = Walk {
            base: self,
            pairs: &pairs,
            out: &mut out,
        };
        walk.extend(self.prec.clone(), 0, vec![0; n]);
        out
    }

    /// The interval members of [`Ipomset::down_set`].
    pub fn interval_down_set(&self) -> BTreeSet<Ipomset> {
        self.down_set().into_iter().filter(|p| p.is_interval()).collect()
    }
}

struct Walk<'a> {
    base: &'a Ipomset,
    pairs: &'a [(usize, usize)],
    out: &'a mut BTreeSet<Ipomset>,
}

impl Walk<'_> {
    /// `kept[i]` has bit `j` when the pair was decided to stay concurrent.
    fn extend(&mut self, prec: Vec<u64>, next: usize, kept: Vec<u64>) {
        let open = self.pairs[next..]
            .iter()
            .position(|&(i, j)| !has(prec[i], j) && !has(prec[j], i) && !has(kept[i], j))
            .map(|k| k + next);
        let Some(k) = open else {
            self.emit(prec);
            return;
        };
        let (i, j) = self.pairs[k];

        let mut keep = kept.clone();
        keep[i] |= bit(j);
        self.extend(prec.clone(), k + 1, keep);

        for (x, y) in [(i, j), (j, i)] {
            if let Some(closed) = self.add(&prec, x, y, &kept) {
                self.extend(closed, k + 1, kept.clone());
            }
        }
    }

    /// Adds `x < y` and closes; `None` if an interface or a kept pair breaks.
    fn add(&self, prec: &[u64], x: usize, y: usize, kept: &[u64]) -> Option<Vec<u64>> {
        let n = prec.len();
        let below_x = (0..n)
            .filter(|&z| z == x || has(prec[z], x))
            .fold(0u64, |acc, z| acc | bit(z));
        let above_y = prec[y] | bit(y);
        if below_x & !self.base.targets != below_x || above_y & self.base.sources != 0 {
            return None;
        }
        let mut closed = prec.to_vec();
        for z in bits::ones(below_x) {
            closed[z] |= above_y;
        }
        for (a, row) in kept.iter().enumerate() {
            for b in bits::ones(*row) {
                if has(closed[a], b) || has(closed[b], a) {
                    return None;
                }
            }
        }
        Some(closed)
    }

    fn emit(&mut self, prec: Vec<u64>) {
        let n = prec.len();
        let pred = bits::transpose(&prec);
        let order = (0..n)
            .map(|i| self.base.order[i] & !(prec[i] | pred[i]))
            .collect();
        let p = Relations {
            labels: self.base.labels.clone(),
            prec,
            order,
            sources: self.base.sources,
            targets: self.base.targets,
        }
        .finish()
        .expect("extensions of a valid ipomset are valid")
        .0;
        self.out.insert(p);
    }
}
