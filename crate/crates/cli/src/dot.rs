use std::fmt::Write;

use normlattice::{Group, NormalizerReport, SubgroupLattice};

/// Hasse diagram of the covering relation, smallest subgroups at the bottom.
pub fn render(
    group: &Group,
    lattice: &SubgroupLattice,
    report: &NormalizerReport,
    color_normalizers: bool,
) -> String {
    let mut out = String::new();
    writeln!(out, "digraph lattice {{").unwrap();
    writeln!(out, "  label=\"{}\";", escape(group.label())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (i, s) in lattice.subgroups().iter().enumerate() {
        let style = if color_normalizers && report.is_normalizer(i) {
            ", style=filled, fillcolor=lightblue"
        } else {
            ""
        };
        writeln!(out, "  n{i} [label=\"{}\"{style}];", s.size()).unwrap();
    }
    for (h, k) in lattice.cover_edges() {
        writeln!(out, "  n{h} -> n{k};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}
