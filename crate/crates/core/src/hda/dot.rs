//! Graphviz output for HDA of dimension at most 2.

use std::fmt::Write;

use super::Hda;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl Hda {
    /// Vertices as circles (accepting ones doubled), edges as labelled
    /// arrows, squares as filled boxes tied to their corners. Start cells get
    /// an inbound arrow from an invisible point. Cells of dimension above 2
    /// are listed as comments.
    pub fn to_dot(&self) -> String {
        let x = self.carrier();
        let mut out = String::from("digraph hda {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n");
        let mut starts = 0;
        for (k, c) in x.cells().iter().enumerate() {
            let id = quote(c.id());
            let word: String = c.word().iter().map(|s| s.as_str()).collect();
            match c.dimension() {
                0 => {
                    let shape = if self.is_accept(k) { "doublecircle" } else { "circle" };
                    let _ = writeln!(out, "  {id} [shape={shape}];");
                }
                1 => {
                    let [lo, hi] = c.faces()[0];
                    let style = if self.is_accept(k) { ", penwidth=2" } else { "" };
                    let _ = writeln!(
                        out,
                        "  {} -> {} [label={}, id={id}{style}];",
                        quote(x.cell(lo).id()),
                        quote(x.cell(hi).id()),
                        quote(&word)
                    );
                }
                2 => {
                    let low = x.apply_face(k, &[0, 1], &[]).expect("square corner");
                    let high = x.apply_face(k, &[], &[0, 1]).expect("square corner");
                    let peripheries = if self.is_accept(k) { 2 } else { 1 };
                    let _ = writeln!(
                        out,
                        "  {id} [shape=box, style=filled, fillcolor=lightblue, label={}, peripheries={peripheries}];",
                        quote(&word)
                    );
                    let _ = writeln!(out, "  {} -> {id} [style=dotted, arrowhead=none];", quote(x.cell(low).id()));
                    let _ = writeln!(out, "  {id} -> {} [style=dotted, arrowhead=none];", quote(x.cell(high).id()));
                }
                _ => {
                    let _ = writeln!(out, "  // cell {} of shape ({word})", c.id().replace('\n', " "));
                }
            }
            if self.is_start(k) && c.dimension() <= 2 {
                let _ = writeln!(out, "  __start{starts} [shape=point, style=invis];");
                let target = match c.dimension() {
                    1 => quote(x.cell(c.faces()[0][0]).id()),
                    _ => id.clone(),
                };
                let _ = writeln!(out, "  __start{starts} -> {target};");
                starts += 1;
            }
        }
        out.push_str("}\n");
        out
    }
}
