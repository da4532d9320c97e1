use std::collections::BTreeSet;

use super::Multigraph;
use crate::error::{Error, Result};
use crate::matroid::{dedup_good_cycles, Basis, BasisGraph, Element, GoodCycle};

/// Vertex partition induced by two tree edges `e` and `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XyzPartition {
    pub x: BTreeSet<usize>,
    pub y: BTreeSet<usize>,
    pub z: BTreeSet<usize>,
}

impl XyzPartition {
    fn part(&self, v: usize) -> char {
        if self.x.contains(&v) {
            'X'
        } else if self.z.contains(&v) {
            'Z'
        } else {
            'Y'
        }
    }

    /// Edge ids of `g` with one end in part `a` and the other in part `b`.
    /// Parts are named by the characters `X`, `Y`, `Z`; a two-letter string
    /// such as `"XY"` names a union.
    pub fn between(&self, g: &Multigraph, a: &str, b: &str) -> Vec<Element> {
        g.edges()
            .iter()
            .filter(|ed| {
                let (pu, pv) = (self.part(ed.u), self.part(ed.v));
                (a.contains(pu) && b.contains(pv)) || (a.contains(pv) && b.contains(pu))
            })
            .map(|ed| ed.id)
            .collect()
    }
}

/// `X` is the component of `B1 - e` with no end of `f`, `Z` the component of
/// `B1 - f` with no end of `e`, and `Y` the remaining vertices.
pub fn xyz_partition(g: &Multigraph, b1: &Basis, e: Element, f: Element) -> Result<XyzPartition> {
    for x in [e, f] {
        if !b1.contains(x) {
            return Err(Error::NotTreeEdge(x));
        }
    }
    if e == f {
        return Err(Error::InvalidExchange("e and f must differ".into()));
    }
    if !g.is_spanning_tree(b1.elements()) {
        return Err(Error::NotSpanningTree);
    }
    let (ee, fe) = (g.edge(e)?, g.edge(f)?);
    let far_side = |cut: Element, other_u: usize| -> BTreeSet<usize> {
        let comp = g.components_of(b1.without(cut).elements());
        let avoid = comp[other_u];
        (0..g.vertex_count()).filter(|&v| comp[v] != avoid).collect()
    };
    // f's ends lie in one component of B1 - e, so either end identifies it.
    let x = far_side(e, fe.u);
    let z = far_side(f, ee.u);
    let y: BTreeSet<usize> = (0..g.vertex_count())
        .filter(|v| !x.contains(v) && !z.contains(v))
        .collect();
    if x.is_empty() {
        return Err(Error::EmptyPart("X"));
    }
    if z.is_empty() {
        return Err(Error::EmptyPart("Z"));
    }
    if y.is_empty() {
        return Err(Error::EmptyPart("Y"));
    }
    Ok(XyzPartition { x, y, z })
}

/// Good cycles for `b1 b2` in which `f` leaves `B1`, built from the four
/// tree-structure templates.
pub fn good_cycles_at(g: &Multigraph, bg: &BasisGraph, b1: usize, b2: usize, f: Element) -> Result<Vec<GoodCycle>> {
    let (e, gg) = bg.exchange(b1, b2)?;
    let fam = bg.family();
    let base1 = fam.basis(b1);
    let base2 = fam.basis(b2);
    if f == e || !base1.contains(f) {
        return Err(Error::InvalidExchange(format!("f={f} is not in B1 - e")));
    }
    let part = xyz_partition(g, base1, e, f)?;
    let circ = g.fundamental_cycle(base1, gg)?;
    let mut out = Vec::new();
    if !circ.contains(f) {
        for w in part.between(g, "XY", "Z").into_iter().filter(|&w| w != f) {
            out.push(GoodCycle::from_bases(bg, b1, b2, &base2.exchange(f, w), &base1.exchange(f, w))?);
        }
    } else {
        for l in part.between(g, "Y", "Z").into_iter().filter(|&l| l != f) {
            out.push(GoodCycle::from_bases(bg, b1, b2, &base2.exchange(f, l), &base1.exchange(f, l))?);
            out.push(GoodCycle::from_bases(bg, b1, b2, &base2.exchange(f, l), &base1.exchange(f, gg))?);
        }
        for h in part.between(g, "X", "Y").into_iter().filter(|&h| h != e) {
            out.push(GoodCycle::from_bases(bg, b1, b2, &base2.exchange(f, h), &base1.exchange(f, gg))?);
        }
        for j in part.between(g, "X", "Z").into_iter().filter(|&j| j != gg) {
            out.push(GoodCycle::from_bases(bg, b1, b2, &base2.exchange(gg, j), &base1.exchange(f, j))?);
        }
    }
    Ok(dedup_good_cycles(out))
}

/// Union of [`good_cycles_at`] over every `f` in `B1 - e`.
pub fn good_cycles_graphic(g: &Multigraph, bg: &BasisGraph, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
    let (e, _) = bg.exchange(b1, b2)?;
    let mut out = Vec::new();
    for &f in bg.family().basis(b1).elements() {
        if f != e {
            out.extend(good_cycles_at(g, bg, b1, b2, f)?);
        }
    }
    Ok(dedup_good_cycles(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exceptional {
    /// The cycle `C_n`.
    Cycle,
    /// A digon glued at one vertex to `C_{n-1}`.
    TwoSum,
    Neither,
}

fn is_cycle_graph(g: &Multigraph) -> bool {
    g.vertex_count() >= 2
        && g.edge_count() == g.vertex_count()
        && (0..g.vertex_count()).all(|v| g.degree(v) == 2)
        && g.is_connected()
}

/// Classifies `g` against the two graphs whose basis graphs have an edge in
/// fewer than two good cycles.
pub fn recognize_exceptional(g: &Multigraph) -> Exceptional {
    let n = g.vertex_count();
    if is_cycle_graph(g) {
        return Exceptional::Cycle;
    }
    if g.edge_count() != n + 1 || n < 3 {
        return Exceptional::Neither;
    }
    for v in 0..n {
        if g.degree(v) != 2 {
            continue;
        }
        let inc: Vec<_> = g.edges().iter().filter(|e| e.u == v || e.v == v).collect();
        let other = |e: &super::Edge| if e.u == v { e.v } else { e.u };
        if other(inc[0]) != other(inc[1]) {
            continue;
        }
        let rest: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|e| e.u != v && e.v != v)
            .map(|e| {
                let s = |x: usize| if x > v { x - 1 } else { x };
                (s(e.u), s(e.v))
            })
            .collect();
        if let Ok(h) = Multigraph::new(n - 1, &rest) {
            if is_cycle_graph(&h) {
                return Exceptional::TwoSum;
            }
        }
    }
    Exceptional::Neither
}

/// The cycle matroid of a multigraph with its basis graph.
#[derive(Clone, Debug)]
pub struct GraphicMatroid {
    graph: Multigraph,
    bg: BasisGraph,
}

impl GraphicMatroid {
    pub fn new(graph: Multigraph) -> Result<Self> {
        let fam = graph.enumerate_spanning_trees()?;
        Ok(GraphicMatroid {
            graph,
            bg: BasisGraph::build(fam),
        })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn basis_graph(&self) -> &BasisGraph {
        &self.bg
    }

    pub fn good_cycles(&self, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
        good_cycles_graphic(&self.graph, &self.bg, b1, b2)
    }
}
