//! Subsumption `P ⊑ Q`: `P` is at least as sequential as `Q`.

use super::Ipomset;
use crate::bits::{self, has};

impl Ipomset {
    /// Decides `self ⊑ other`. Returns a witness bijection `f` (`f[x]` is the
    /// image of event `x`) with `f(S) = S`, `f(T) = T`, labels preserved,
    /// precedence reflected and the event order preserved on concurrent pairs.
    pub fn subsumed_by(&self, other: &Ipomset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len()
            || self.sources.count_ones() != other.sources.count_ones()
            || self.targets.count_ones() != other.targets.count_ones()
        {
            return None;
        }
        let prec_count = |p: &Ipomset| p.prec.iter().map(|r| r.count_ones()).sum::<u32>();
        if prec_count(other) > prec_count(self) {
            return None;
        }

        // Candidate images per event. Precedence is reflected, so an image
        // has at most as many successors and predecessors and at least as
        // many concurrent events.
        let degrees = |p: &Ipomset| -> Vec<(u32, u32)> {
            let pred = bits::transpose(&p.prec);
            (0..n).map(|x| (p.prec[x].count_ones(), pred[x].count_ones())).collect()
        };
        let (mine, theirs) = (degrees(self), degrees(other));
        let candidates: Vec<u64> = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| {
                        self.labels[x] == other.labels[y]
                            && has(self.sources, x) == has(other.sources, y)
                            && has(self.targets, x) == has(other.targets, y)
                            && theirs[y].0 <= mine[x].0
                            && theirs[y].1 <= mine[x].1
                    })
                    .fold(0, |acc, y| acc | bits::bit(y))
            })
            .collect();
        if candidates.contains(&0) {
            return None;
        }
        let mut image = vec![usize::MAX; n];
        if assign(self, other, &candidates, 0, 0, &mut image) {
            Some(image)
        } else {
            None
        }
    }

    /// Checks that `f` is a subsumption witness for `self ⊑ other`.
    pub fn is_subsumption_witness(&self, other: &Ipomset, f: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || f.len() != n {
            return false;
        }
        let mut seen = 0u64;
        for &y in f {
            if y >= n || has(seen, y) {
                return false;
            }
            seen |= bits::bit(y);
        }
        (0..n).all(|x| {
            self.labels[x] == other.labels[f[x]]
                && has(self.sources, x) == has(other.sources, f[x])
                && has(self.targets, x) == has(other.targets, f[x])
                && (0..n).all(|y| compatible(self, other, x, f[x], y, f[y]))
        })
    }
}

/// Pairwise conditions for mapping `x -> fx` and `y -> fy`.
#[inline]
fn compatible(p: &Ipomset, q: &Ipomset, x: usize, fx: usize, y: usize, fy: usize) -> bool {
    if has(q.prec[fx], fy) && !has(p.prec[x], y) {
        return false;
    }
    if has(p.order[x], y) && !has(q.order[fx], fy) {
        return false;
    }
    true
}

fn assign(
    p: &Ipomset,
    q: &Ipomset,
    candidates: &[u64],
    x: usize,
    used: u64,
    image: &mut [usize],
) -> bool {
    if x == p.len() {
        return true;
    }
    let mut free = candidates[x] & !used;
    while free != 0 {
        let fx = free.trailing_zeros() as usize;
        free &= free - 1;
        let ok = (0..x).all(|y| {
            let fy = image[y];
            compatible(p, q, x, fx, y, fy) && compatible(p, q, y, fy, x, fx)
        });
        if ok {
            image[x] = fx;
            if assign(p, q, candidates, x + 1, used | bits::bit(fx), image) {
                return true;
            }
        }
    }
    image[x] = usize::MAX;
    false
}

/// `p ⊑ q` as a free function.
pub fn subsumes(p: &Ipomset, q: &Ipomset) -> Option<Vec<usize>> {
    p.subsumed_by(q)
}
