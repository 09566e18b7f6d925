//! Deterministic inputs shared by the benchmarks.

use hda_core::fixtures;
use hda_core::hda::Hda;
use hda_core::ipomset::{validate, RawIpomset};
use hda_core::Ipomset;

/// The product of `n` single-edge automata with labels cycling through
/// `a`, `b`, `c`: an `n`-cube.
pub fn cube(n: usize) -> Hda {
    (0..n).fold(Hda::unit(), |acc, k| {
        acc.tensor(&fixtures::single_edge(["a", "b", "c"][k % 3]))
    })
}

/// `n` events where `x < y` iff `y ≥ x + 2`: a wide interval order.
pub fn staircase(n: usize) -> Ipomset {
    let labels = (0..n).map(|k| if k % 2 == 0 { "a" } else { "b" });
    let mut raw = RawIpomset::new(labels);
    for x in 0..n {
        for y in x + 1..n {
            raw = if y >= x + 2 { raw.precede(x, y) } else { raw.order(x, y) };
        }
    }
    validate(&raw).expect("staircase is a valid ipomset")
}

/// The same order as [`staircase`] with events listed back to front.
pub fn staircase_reversed(n: usize) -> RawIpomset {
    let labels: Vec<&str> = (0..n).rev().map(|k| if k % 2 == 0 { "a" } else { "b" }).collect();
    let at = |k: usize| n - 1 - k;
    let mut raw = RawIpomset::new(labels);
    for x in 0..n {
        for y in x + 1..n {
            raw = if y >= x + 2 { raw.precede(at(x), at(y)) } else { raw.order(at(x), at(y)) };
        }
    }
    raw
}
