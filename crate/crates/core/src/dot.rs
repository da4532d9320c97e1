//! Graphviz output for basis graphs.

use std::fmt::Write;

use crate::matroid::{BasisGraph, EdgeCycle};

const PALETTE: [&str; 6] = ["red", "blue", "darkgreen", "orange", "purple", "brown"];

/// DOT text for `bg`. Nodes are labelled with their bases. Edges of the `i`th
/// highlighted cycle are drawn in the `i`th palette colour; an edge on several
/// cycles takes the first.
pub fn export_dot(bg: &BasisGraph, highlights: &[EdgeCycle]) -> String {
    let mut out = String::from("graph BG {\n  node [shape=box, fontsize=10];\n");
    for (i, b) in bg.vertices().iter().enumerate() {
        let elems: Vec<String> = b.elements().iter().map(|x| x.to_string()).collect();
        writeln!(out, "  {i} [label=\"{i}: {{{}}}\"];", elems.join(",")).unwrap();
    }
    for (u, v) in bg.edges() {
        match highlights.iter().position(|c| c.contains_edge(u, v)) {
            Some(k) => writeln!(out, "  {u} -- {v} [color={}, penwidth=2.5];", PALETTE[k % PALETTE.len()]).unwrap(),
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphic::{GraphicMatroid, Multigraph};
    use crate::uniform::{UniformMatroid, UniformSpec};

    #[test]
    fn triangle() {
        let m = GraphicMatroid::new(Multigraph::cycle(3).unwrap()).unwrap();
        let dot = export_dot(m.basis_graph(), &[]);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.starts_with("graph BG {"));
        assert_eq!(dot, export_dot(m.basis_graph(), &[]));
    }

    #[test]
    fn octahedron_highlights() {
        let m = UniformMatroid::new(UniformSpec::new(2, 4).unwrap());
        let cycles: Vec<EdgeCycle> = m.good_cycles(0, 1).unwrap().iter().map(|c| c.edge_cycle()).collect();
        assert_eq!(cycles.len(), 3);
        let dot = export_dot(m.basis_graph(), &cycles);
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert!(dot.contains("color=red"));
        assert!(dot.contains("color=blue"));
    }
}
