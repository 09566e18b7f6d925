//! Canonical event numbering.

use super::Ipomset;
use crate::bits::{self, ones};

/// Returns `order` with `order[p]` the event placed at canonical position `p`.
///
/// `p` must be closed and its event order essential.
pub(super) fn canonical_order(p: &Ipomset) -> Vec<usize> {
    if let Some(order) = along_total_order(p) {
        return order;
    }
    if let Some(order) = along_interval_chain(p) {
        return order;
    }
    minimal_encoding(p)
}

/// `<` ∪ `⋖` relates every pair exactly once, so it is a tournament; it is
/// transitive iff all out-degrees are distinct.
fn along_total_order(p: &Ipomset) -> Option<Vec<usize>> {
    let n = p.len();
    let mut by_rank = vec![usize::MAX; n];
    for i in 0..n {
        let later = (p.prec[i] | p.order[i]).count_ones() as usize;
        let rank = n - 1 - later;
        if by_rank[rank] != usize::MAX {
            return None;
        }
        by_rank[rank] = i;
    }
    Some(by_rank)
}

/// Sorts by interval endpoints; events with equal endpoints have identical
/// neighbourhoods, are pairwise concurrent and are ordered by `⋖`.
fn along_interval_chain(p: &Ipomset) -> Option<Vec<usize>> {
    let rep = p.interval_representation().ok()?;
    let mut keys: Vec<(i64, i64, u32, usize)> = (0..p.len())
        .map(|x| {
            let twins = (0..p.len())
                .filter(|&y| rep.begin[y] == rep.begin[x] && rep.end[y] == rep.end[x])
                .fold(0u64, |acc, y| acc | bits::bit(y));
            let before = (0..p.len())
                .filter(|&y| bits::has(twins, y) && bits::has(p.order[y], x))
                .count() as u32;
            (rep.begin[x], rep.end[x], before, x)
        })
        .collect();
    keys.sort();
    Some(keys.into_iter().map(|k| k.3).collect())
}

/// Smallest encoding over all renumberings that respect an invariant
/// partition of the events. Only reached for non-interval ipomsets with a
/// cyclic total order.
fn minimal_encoding(p: &Ipomset) -> Vec<usize> {
    let n = p.len();
    let pred = bits::transpose(&p.prec);
    let order_pred = bits::transpose(&p.order);
    let key = |i: usize| {
        (
            p.labels[i].clone(),
            pred[i].count_ones(),
            p.prec[i].count_ones(),
            order_pred[i].count_ones(),
            p.order[i].count_ones(),
            bits::has(p.sources, i),
            bits::has(p.targets, i),
        )
    };
    let mut events: Vec<usize> = (0..n).collect();
    events.sort_by_key(|&i| key(i));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in events {
        match groups.last_mut() {
            Some(g) if key(g[0]) == key(i) => g.push(i),
            _ => groups.push(vec![i]),
        }
    }

    let mut best: Option<(Ipomset, Vec<usize>)> = None;
    let mut current = Vec::with_capacity(n);
    search(p, &groups, 0, 0, &mut current, &mut best);
    best.expect("at least one renumbering").1
}

fn search(
    p: &Ipomset,
    groups: &[Vec<usize>],
    group: usize,
    used: u64,
    current: &mut Vec<usize>,
    best: &mut Option<(Ipomset, Vec<usize>)>,
) {
    if group == groups.len() {
        let inverse = bits::invert(current);
        let candidate = p.permuted(current, &inverse);
        if best.as_ref().is_none_or(|(b, _)| candidate < *b) {
            *best = Some((candidate, current.clone()));
        }
        return;
    }
    let members = &groups[group];
    let group_mask = bits::from_indices(members.iter().copied());
    let remaining = group_mask & !used;
    if remaining == 0 {
        search(p, groups, group + 1, used, current, best);
        return;
    }
    for i in ones(remaining) {
        current.push(i);
        search(p, groups, group, used | bits::bit(i), current, best);
        current.pop();
    }
}
