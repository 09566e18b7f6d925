//! Named example inputs.

use std::collections::BTreeMap;

use crate::hda::{Hda, Span};
use crate::ipomset::{validate, Ipomset, RawIpomset};
use crate::precubical::{PrecubicalMap, PrecubicalSet, RawCell};

fn vertex(id: &str) -> RawCell {
    RawCell {
        id: id.into(),
        word: Vec::new(),
        faces: Vec::new(),
    }
}

fn edge(id: &str, label: &str, from: &str, to: &str) -> RawCell {
    RawCell {
        id: id.into(),
        word: vec![label.into()],
        faces: vec![[from.into(), to.into()]],
    }
}

fn square(id: &str, word: [&str; 2], first: [&str; 2], second: [&str; 2]) -> RawCell {
    RawCell {
        id: id.into(),
        word: word.iter().map(|s| s.to_string()).collect(),
        faces: vec![first.map(String::from), second.map(String::from)],
    }
}

fn build(cells: &[RawCell], start: &[&str], accept: &[&str]) -> Hda {
    let carrier = PrecubicalSet::from_raw(cells).expect("fixture is a valid precubical set");
    Hda::from_ids(carrier, start, accept).expect("fixture markings exist")
}

/// The 3×3 grid with two filled squares: `a` concurrent with `b` and with
/// `d`, `c` in conflict with both.
///
/// Vertices, bottom row `A D F`, middle row `B C E`, top row `G H I`.
/// Start `A`, accept `H` and `I`.
pub fn concurrent_grid() -> Hda {
    let cells = [
        vertex("A"),
        vertex("B"),
        vertex("C"),
        vertex("D"),
        vertex("E"),
        vertex("F"),
        vertex("G"),
        vertex("H"),
        vertex("I"),
        edge("AB", "a", "A", "B"),
        edge("DC", "a", "D", "C"),
        edge("FE", "a", "F", "E"),
        edge("AD", "b", "A", "D"),
        edge("BC", "b", "B", "C"),
        edge("GH", "b", "G", "H"),
        edge("BG", "c", "B", "G"),
        edge("CH", "c", "C", "H"),
        edge("EI", "c", "E", "I"),
        edge("DF", "d", "D", "F"),
        edge("CE", "d", "C", "E"),
        square("ABCD", ["a", "b"], ["AD", "BC"], ["AB", "DC"]),
        square("DCEF", ["a", "d"], ["DF", "CE"], ["DC", "FE"]),
    ];
    build(&cells, &["A"], &["H", "I"])
}

/// One `label`-edge from a start vertex `s` to an accept vertex `t`.
pub fn single_edge(label: &str) -> Hda {
    build(&[vertex("s"), vertex("t"), edge("e", label, "s", "t")], &["s"], &["t"])
}

/// The span `(•→a∘) ← ∘ → (∘→c•)`: both corners accept nothing on their
/// own, the pushout accepts `a → c`.
pub fn pushout_counterexample() -> Span {
    let apex = build(&[vertex("m")], &[], &[]);
    let left = build(&[vertex("s"), vertex("m"), edge("a", "a", "s", "m")], &["s"], &[]);
    let right = build(&[vertex("m"), vertex("t"), edge("c", "c", "m", "t")], &[], &["t"]);
    let table = BTreeMap::from([("m".to_string(), "m".to_string())]);
    let left_map = PrecubicalMap::from_ids(&table, apex.carrier(), left.carrier()).expect("cells exist");
    let right_map = PrecubicalMap::from_ids(&table, apex.carrier(), right.carrier()).expect("cells exist");
    Span {
        apex,
        left,
        right,
        left_map,
        right_map,
    }
}

/// `a < b`, `c < d`, all other pairs concurrent.
pub fn two_plus_two() -> Ipomset {
    validate(
        &RawIpomset::new(["a", "b", "c", "d"])
            .precede(0, 1)
            .precede(2, 3)
            .order(0, 2)
            .order(0, 3)
            .order(1, 2)
            .order(1, 3),
    )
    .expect("2+2 is a valid ipomset")
}

/// An HDA with one vertex that is neither starting nor accepting.
pub fn empty_language() -> Hda {
    build(&[vertex("v")], &[], &[])
}
