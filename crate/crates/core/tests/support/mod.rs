//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

use hda_core::hda::Hda;
use hda_core::ipomset::{validate, Ipomset, RawIpomset};
use hda_core::precubical::{PrecubicalSet, RawCell};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every canonical ipomset with at most `max_events` events over `alphabet`.
///
/// Any precedence order has a linear extension, so it is enough to take
/// closed relations contained in index order. The event order is then any
/// orientation of the incomparable pairs whose closure stays acyclic.
pub fn universe(max_events: usize, alphabet: &[&str]) -> BTreeSet<Ipomset> {
    let mut out = BTreeSet::new();
    for n in 0..=max_events {
        let forward: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut orders = BTreeSet::new();
        for mask in 0u32..(1 << forward.len()) {
            let mut rel = vec![vec![false; n]; n];
            for (k, &(i, j)) in forward.iter().enumerate() {
                rel[i][j] = mask >> k & 1 == 1;
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if rel[i][k] && rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
            orders.insert(rel);
        }
        for rel in orders {
            let concurrent: Vec<(usize, usize)> = forward.iter().copied().filter(|&(i, j)| !rel[i][j]).collect();
            let minimal: Vec<usize> = (0..n).filter(|&j| (0..n).all(|i| !rel[i][j])).collect();
            let maximal: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| !rel[i][j])).collect();
            for orient in 0u32..(1 << concurrent.len()) {
                for labels in 0..alphabet.len().pow(n as u32) {
                    let word: Vec<&str> = (0..n)
                        .map(|k| alphabet[labels / alphabet.len().pow(k as u32) % alphabet.len()])
                        .collect();
                    for s in 0u32..(1 << minimal.len()) {
                        for t in 0u32..(1 << maximal.len()) {
                            let mut raw = RawIpomset::new(word.iter().copied());
                            for i in 0..n {
                                for j in 0..n {
                                    if rel[i][j] {
                                        raw = raw.precede(i, j);
                                    }
                                }
                            }
                            for (k, &(i, j)) in concurrent.iter().enumerate() {
                                raw = if orient >> k & 1 == 0 { raw.order(i, j) } else { raw.order(j, i) };
                            }
                            for (k, &m) in minimal.iter().enumerate() {
                                if s >> k & 1 == 1 {
                                    raw = raw.source(m);
                                }
                            }
                            for (k, &m) in maximal.iter().enumerate() {
                                if t >> k & 1 == 1 {
                                    raw = raw.target(m);
                                }
                            }
                            if let Ok(p) = validate(&raw) {
                                out.insert(p);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Groups by `(size, sorted labels, |S|, |T|)`, which `⊑` preserves.
pub fn buckets(items: &BTreeSet<Ipomset>) -> BTreeMap<(usize, Vec<String>, usize, usize), Vec<Ipomset>> {
    let mut out: BTreeMap<_, Vec<Ipomset>> = BTreeMap::new();
    for p in items {
        let mut labels: Vec<String> = p.labels().iter().map(|l| l.to_string()).collect();
        labels.sort();
        out.entry((p.len(), labels, p.sources().count(), p.targets().count()))
            .or_default()
            .push(p.clone());
    }
    out
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for k in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(k, n - 1);
            out.push(p);
        }
    }
    out
}

/// `p ⊑ q` straight from the definition, trying every bijection.
pub fn subsumes_by_definition(p: &Ipomset, q: &Ipomset, perms: &[Vec<usize>]) -> bool {
    let n = p.len();
    if q.len() != n {
        return false;
    }
    perms.iter().any(|f| {
        (0..n).all(|x| {
            p.label(x) == q.label(f[x])
                && p.is_source(x) == q.is_source(f[x])
                && p.is_target(x) == q.is_target(f[x])
                && (0..n).all(|y| {
                    let reflects = !q.precedes(f[x], f[y]) || p.precedes(x, y);
                    let concurrent = x == y || p.comparable(x, y);
                    let keeps_order = concurrent || (p.event_order(x, y) == q.event_order(f[x], f[y]));
                    reflects && keeps_order
                })
        })
    })
}

/// Induced 2+2 search over all quadruples.
pub fn has_two_plus_two(p: &Ipomset) -> bool {
    let n = p.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if p.precedes(a, b)
                        && p.precedes(c, d)
                        && !p.comparable(a, d)
                        && !p.comparable(c, b)
                        && a != c
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Renumbers the events of `p` by `perm` and revalidates.
pub fn renumbered(p: &Ipomset, perm: &[usize]) -> Ipomset {
    let raw = p.to_raw();
    let mut labels = vec![String::new(); p.len()];
    for (old, &new) in perm.iter().enumerate() {
        labels[new] = raw.labels[old].clone();
    }
    let mut out = RawIpomset::new(labels);
    for (x, y) in raw.precedence {
        out = out.precede(perm[x], perm[y]);
    }
    for (x, y) in raw.event_order {
        out = out.order(perm[x], perm[y]);
    }
    for s in raw.sources {
        out = out.source(perm[s]);
    }
    for t in raw.targets {
        out = out.target(perm[t]);
    }
    validate(&out).expect("renumbering keeps validity")
}

/// A random interval ipomset from random intervals on a small time line.
pub fn random_interval_ipomset(rng: &mut StdRng, max_events: usize, alphabet: &[&str]) -> Ipomset {
    let n = rng.gen_range(0..=max_events);
    let spans: Vec<(u32, u32)> = (0..n)
        .map(|_| {
            let b = rng.gen_range(0..6);
            (b, b + rng.gen_range(0..4))
        })
        .collect();
    let lo = spans.iter().map(|s| s.0).min().unwrap_or(0);
    let hi = spans.iter().map(|s| s.1).max().unwrap_or(0);
    let mut raw = RawIpomset::new((0..n).map(|_| *alphabet.choose(rng).unwrap()));
    for i in 0..n {
        for j in 0..n {
            if spans[i].1 < spans[j].0 {
                raw = raw.precede(i, j);
            } else if i < j && spans[j].1 >= spans[i].0 {
                raw = raw.order(i, j);
            }
        }
        if spans[i].0 == lo && rng.gen_bool(0.3) {
            raw = raw.source(i);
        }
        if spans[i].1 == hi && rng.gen_bool(0.3) {
            raw = raw.target(i);
        }
    }
    validate(&raw).expect("interval construction is valid")
}

fn cell(id: String, word: Vec<String>, faces: Vec<[String; 2]>) -> RawCell {
    RawCell { id, word, faces }
}

/// A random valid HDA of dimension at most 2 with at most `per_dim` cells
/// in each dimension. Squares are only added over compatible edges.
pub fn random_hda(rng: &mut StdRng, per_dim: usize, alphabet: &[&str]) -> Hda {
    let vertices = rng.gen_range(1..=per_dim);
    let mut cells: Vec<RawCell> = (0..vertices)
        .map(|k| cell(format!("v{k}"), vec![], vec![]))
        .collect();
    let edge_count = rng.gen_range(0..=per_dim);
    let mut edges: Vec<(String, String, usize, usize)> = Vec::new();
    for k in 0..edge_count {
        let label = alphabet.choose(rng).unwrap().to_string();
        let (s, t) = (rng.gen_range(0..vertices), rng.gen_range(0..vertices));
        edges.push((format!("e{k}"), label, s, t));
        cells.push(cell(
            format!("e{k}"),
            vec![edges[k].1.clone()],
            vec![[format!("v{s}"), format!("v{t}")]],
        ));
    }
    // A square of shape (xy) needs y-edges f0: p→q, f1: r→s and x-edges
    // g0: p→r, g1: q→s; then δ_0 = (f0, f1) and δ_1 = (g0, g1).
    let mut candidates = Vec::new();
    for g0 in &edges {
        for g1 in &edges {
            for f0 in &edges {
                for f1 in &edges {
                    let (p, r) = (g0.2, g0.3);
                    let (q, s) = (g1.2, g1.3);
                    if g0.1 == g1.1 && f0.1 == f1.1 && (f0.2, f0.3) == (p, q) && (f1.2, f1.3) == (r, s) {
                        candidates.push((g0.clone(), g1.clone(), f0.clone(), f1.clone()));
                    }
                }
            }
        }
    }
    candidates.shuffle(rng);
    let squares = rng.gen_range(0..=per_dim).min(candidates.len());
    for (k, (g0, g1, f0, f1)) in candidates.into_iter().take(squares).enumerate() {
        cells.push(cell(
            format!("q{k}"),
            vec![g0.1.clone(), f0.1.clone()],
            vec![[f0.0.clone(), f1.0.clone()], [g0.0.clone(), g1.0.clone()]],
        ));
    }
    let carrier = PrecubicalSet::from_raw(&cells).expect("random construction is valid");
    let mut pick = |p: f64| -> Vec<usize> {
        let mut v: Vec<usize> = (0..carrier.len()).filter(|_| rng.gen_bool(p)).collect();
        if v.is_empty() {
            v.push(rng.gen_range(0..carrier.len()));
        }
        v
    };
    let start = pick(0.25);
    let accept = pick(0.35);
    Hda::new(carrier, start, accept).expect("markings exist")
}

/// Interval ipomsets below `p`, by trying every way of ordering or keeping
/// each concurrent pair and keeping the relations that are already strict
/// orders respecting the interfaces.
pub fn all_extensions(p: &Ipomset) -> BTreeSet<Ipomset> {
    let n = p.len();
    let open: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !p.comparable(i, j))
        .collect();
    let mut out = BTreeSet::new();
    for code in 0..3usize.pow(open.len() as u32) {
        let mut rel: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| p.precedes(i, j)).collect()).collect();
        let mut c = code;
        for &(i, j) in &open {
            match c % 3 {
                1 => rel[i][j] = true,
                2 => rel[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(rel[i][j] && rel[j][k]) || rel[i][k])));
        let irreflexive = (0..n).all(|i| !rel[i][i]);
        let interfaces = (0..n).all(|i| {
            (0..n).all(|j| !rel[i][j] || (!p.is_source(j) && !p.is_target(i)))
        });
        if !(transitive && irreflexive && interfaces) {
            continue;
        }
        let mut raw = RawIpomset::new(p.labels().iter().map(|l| l.to_string()));
        for i in 0..n {
            for j in 0..n {
                if rel[i][j] {
                    raw = raw.precede(i, j);
                } else if !rel[j][i] && p.event_order(i, j) {
                    raw = raw.order(i, j);
                }
            }
            if p.is_source(i) {
                raw = raw.source(i);
            }
            if p.is_target(i) {
                raw = raw.target(i);
            }
        }
        let q = validate(&raw).expect("extension is valid");
        if q.is_interval() {
            out.insert(q);
        }
    }
    out
}
