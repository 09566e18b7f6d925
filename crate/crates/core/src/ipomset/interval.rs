use serde::{Deserialize, Serialize};

use super::Ipomset;
use crate::bits::{self, has};

/// Integer interval endpoints with `x < y` iff `end[x] < begin[y]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRepresentation {
    pub begin: Vec<i64>,
    pub end: Vec<i64>,
}

impl IntervalRepresentation {
    /// Checks `begin <= end` and the precedence biconditional on every pair.
    pub fn represents(&self, p: &Ipomset) -> bool {
        let n = p.len();
        if self.begin.len() != n || self.end.len() != n {
            return false;
        }
        (0..n).all(|x| self.begin[x] <= self.end[x])
            && (0..n).all(|x| (0..n).all(|y| p.precedes(x, y) == (self.end[x] < self.begin[y])))
    }
}

/// An induced 2+2: `lower.0 < upper.0`, `lower.1 < upper.1`, every other
/// pair among the four events incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPlusTwo {
    pub lower: (usize, usize),
    pub upper: (usize, usize),
}

impl TwoPlusTwo {
    pub fn events(&self) -> [usize; 4] {
        [self.lower.0, self.upper.0, self.lower.1, self.upper.1]
    }

    /// True iff exactly the two stated comparabilities hold in `p`.
    pub fn holds_in(&self, p: &Ipomset) -> bool {
        let ev = self.events();
        let expected = |x: usize, y: usize| {
            (x == self.lower.0 && y == self.upper.0) || (x == self.lower.1 && y == self.upper.1)
        };
        let distinct = (0..4).all(|i| (0..4).all(|j| i == j || ev[i] != ev[j]));
        distinct
            && ev.iter().all(|&x| x < p.len())
            && ev
                .iter()
                .all(|&x| ev.iter().all(|&y| p.precedes(x, y) == expected(x, y)))
    }
}

impl Ipomset {
    /// Interval orders are exactly those whose strict predecessor sets form
    /// a chain under inclusion. Endpoints are positions in that chain.
    pub fn interval_representation(&self) -> Result<IntervalRepresentation, TwoPlusTwo> {
        let n = self.len();
        let pred = bits::transpose(&self.prec);
        let mut chain: Vec<u64> = pred.clone();
        chain.sort_by_key(|d| (d.count_ones(), *d));
        chain.dedup();
        let is_chain = chain.windows(2).all(|w| w[0] & !w[1] == 0);
        if !is_chain {
            return Err(self.two_plus_two(&pred));
        }
        let begin: Vec<i64> = pred
            .iter()
            .map(|d| chain.binary_search_by_key(&(d.count_ones(), *d), |c| (c.count_ones(), *c)).unwrap() as i64)
            .collect();
        let end: Vec<i64> = (0..n)
            .map(|x| chain.iter().take_while(|&&d| !has(d, x)).count() as i64 - 1)
            .collect();
        Ok(IntervalRepresentation { begin, end })
    }

    pub fn is_interval(&self) -> bool {
        self.interval_representation().is_ok()
    }

    fn two_plus_two(&self, pred: &[u64]) -> TwoPlusTwo {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let only_x = pred[x] & !pred[y];
                let only_y = pred[y] & !pred[x];
                if only_x != 0 && only_y != 0 {
                    let a = only_x.trailing_zeros() as usize;
                    let c = only_y.trailing_zeros() as usize;
                    return TwoPlusTwo {
                        lower: (a, c),
                        upper: (x, y),
                    };
                }
            }
        }
        unreachable!("predecessor sets are not a chain, so two of them are incomparable")
    }
}
