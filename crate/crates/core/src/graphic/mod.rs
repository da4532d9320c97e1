//! Loop-free multigraphs and their cycle matroids.

mod good;
pub mod pool;

pub use good::{
    good_cycles_at, good_cycles_graphic, recognize_exceptional, xyz_partition, Exceptional,
    GraphicMatroid, XyzPartition,
};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{Basis, BasisFamily, Element};

/// An edge with a stable id; parallel edges have different ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub id: Element,
    pub u: usize,
    pub v: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct MultigraphJson {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl Multigraph {
    /// Edges get ids `0..edges.len()` in the given order.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_ids(
            n,
            edges
                .iter()
                .enumerate()
                .map(|(id, &(u, v))| Edge { id, u, v })
                .collect(),
        )
    }

    pub fn with_ids(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_by_key(|e| e.id);
        if let Some(w) = edges.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::Parse(format!("edge id {} used twice", w[0].id)));
        }
        for e in &edges {
            if e.u >= n || e.v >= n {
                return Err(Error::NoSuchVertex(e.u.max(e.v)));
            }
            if e.u == e.v {
                return Err(Error::LoopEdge(e.id));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: Element) -> Result<Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .map(|i| self.edges[i])
            .map_err(|_| Error::NoSuchEdge(id))
    }

    /// One past the largest edge id.
    pub fn ground_size(&self) -> usize {
        self.edges.last().map_or(0, |e| e.id + 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    /// Number of edges between `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| (e.u == u && e.v == v) || (e.u == v && e.v == u))
            .count()
    }

    pub fn is_connected(&self) -> bool {
        self.components_of(&self.edges.iter().map(|e| e.id).collect::<Vec<_>>())
            .iter()
            .all(|&c| c == 0)
    }

    /// Component label per vertex in the spanning subgraph on `edge_ids`.
    pub fn components_of(&self, edge_ids: &[Element]) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n);
        for &id in edge_ids {
            if let Ok(e) = self.edge(id) {
                uf.union(e.u, e.v);
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut out = vec![0; self.n];
        for (v, slot) in out.iter_mut().enumerate() {
            let r = uf.find(v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            *slot = label[r];
        }
        out
    }

    /// Edge ids whose removal disconnects the graph.
    pub fn bridges(&self) -> Vec<Element> {
        self.edges
            .iter()
            .filter(|e| {
                let rest: Vec<Element> = self.edges.iter().map(|f| f.id).filter(|&id| id != e.id).collect();
                let comp = self.components_of(&rest);
                comp[e.u] != comp[e.v]
            })
            .map(|e| e.id)
            .collect()
    }

    /// Ground-set permutations induced by vertex automorphisms, together with
    /// swaps within each parallel class. Together they generate the edge
    /// permutations that preserve the graph.
    pub fn automorphisms(&self) -> Vec<Vec<Element>> {
        let size = self.ground_size();
        let mut classes: std::collections::BTreeMap<(usize, usize), Vec<Element>> = Default::default();
        for e in &self.edges {
            classes.entry((e.u.min(e.v), e.u.max(e.v))).or_default().push(e.id);
        }
        let mut out = Vec::new();
        for p in (0..self.n).permutations(self.n) {
            let mut perm: Vec<Element> = (0..size).collect();
            let ok = classes.iter().all(|(&(a, b), ids)| {
                let key = (p[a].min(p[b]), p[a].max(p[b]));
                match classes.get(&key) {
                    Some(img) if img.len() == ids.len() => {
                        for (&x, &y) in ids.iter().zip(img) {
                            perm[x] = y;
                        }
                        true
                    }
                    _ => false,
                }
            });
            if ok {
                out.push(perm);
            }
        }
        for ids in classes.values().filter(|ids| ids.len() > 1) {
            let mut swap: Vec<Element> = (0..size).collect();
            swap.swap(ids[0], ids[1]);
            out.push(swap);
            let mut rot: Vec<Element> = (0..size).collect();
            for (i, &x) in ids.iter().enumerate() {
                rot[x] = ids[(i + 1) % ids.len()];
            }
            out.push(rot);
        }
        out
    }

    /// `G / e`: merges the ends of `e`, drops resulting loops, keeps ids.
    pub fn contract_edge(&self, id: Element) -> Result<Multigraph> {
        let e = self.edge(id)?;
        let (keep, gone) = (e.u.min(e.v), e.u.max(e.v));
        let relabel = |x: usize| {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .map(|f| Edge {
                id: f.id,
                u: relabel(f.u),
                v: relabel(f.v),
            })
            .filter(|f| f.u != f.v)
            .collect();
        Multigraph::with_ids(self.n - 1, edges)
    }

    /// `G \ e`.
    pub fn delete_edge(&self, id: Element) -> Result<Multigraph> {
        self.edge(id)?;
        let edges = self.edges.iter().copied().filter(|f| f.id != id).collect();
        Multigraph::with_ids(self.n, edges)
    }

    pub fn is_spanning_tree(&self, ids: &[Element]) -> bool {
        if ids.len() + 1 != self.n {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        ids.iter().all(|&id| match self.edge(id) {
            Ok(e) => uf.union(e.u, e.v),
            Err(_) => false,
        })
    }

    /// Bases of the cycle matroid: every spanning tree as a set of edge ids.
    pub fn enumerate_spanning_trees(&self) -> Result<BasisFamily> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let ids: Vec<Element> = self.edges.iter().map(|e| e.id).collect();
        let trees: Vec<Basis> = ids
            .iter()
            .copied()
            .combinations(self.n - 1)
            .filter(|c| self.is_spanning_tree(c))
            .map(Basis::from_sorted_unchecked)
            .collect();
        BasisFamily::new(self.ground_size().max(1), self.n - 1, trees)
    }

    /// Minimum number of edges whose removal disconnects the graph, via unit
    /// capacity max-flow from vertex 0. Returns 0 when disconnected or when
    /// there is a single vertex.
    pub fn edge_connectivity(&self) -> usize {
        if self.n < 2 || !self.is_connected() {
            return 0;
        }
        (1..self.n).map(|t| self.max_flow(0, t)).min().unwrap_or(0)
    }

    fn max_flow(&self, s: usize, t: usize) -> usize {
        let n = self.n;
        let mut cap = vec![vec![0i64; n]; n];
        for e in &self.edges {
            cap[e.u][e.v] += 1;
            cap[e.v][e.u] += 1;
        }
        let mut flow = 0;
        loop {
            let mut prev = vec![usize::MAX; n];
            prev[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in 0..n {
                    if prev[y] == usize::MAX && cap[x][y] > 0 {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[t] == usize::MAX {
                return flow;
            }
            let mut y = t;
            while y != s {
                let x = prev[y];
                cap[x][y] -= 1;
                cap[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
    }

    /// The unique cycle of `tree + chord`, as a set of edge ids.
    pub fn fundamental_cycle(&self, tree: &Basis, chord: Element) -> Result<FundamentalCycle> {
        if tree.contains(chord) {
            return Err(Error::ChordInTree(chord));
        }
        if !self.is_spanning_tree(tree.elements()) {
            return Err(Error::NotSpanningTree);
        }
        let c = self.edge(chord)?;
        let path = self.tree_path(tree, c.u, c.v);
        let mut edges: BTreeSet<Element> = path.into_iter().collect();
        edges.insert(chord);
        Ok(FundamentalCycle { chord, edges })
    }

    /// Edge ids on the tree path between two vertices.
    fn tree_path(&self, tree: &Basis, from: usize, to: usize) -> Vec<Element> {
        let mut via: Vec<Option<(usize, Element)>> = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &id in tree.elements() {
                let e = self.edge(id).expect("tree edge");
                let y = if e.u == x {
                    e.v
                } else if e.v == x {
                    e.u
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some((x, id));
                    queue.push_back(y);
                }
            }
        }
        let mut out = Vec::new();
        let mut y = to;
        while y != from {
            let (x, id) = via[y].expect("tree spans");
            out.push(id);
            y = x;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MultigraphJson {
            n: self.n,
            edges: self.edges.iter().map(|e| [e.id, e.u, e.v]).collect(),
        })
        .expect("multigraph serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: MultigraphJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Multigraph::with_ids(
            raw.n,
            raw.edges
                .into_iter()
                .map(|[id, u, v]| Edge { id, u, v })
                .collect(),
        )
    }

    // Named generators.

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadParams("cycle needs n >= 2".into()));
        }
        Multigraph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    /// `C_2` glued at one vertex to `C_{n-1}`: a cycle on `0..n-1` plus a
    /// digon between vertex 0 and vertex `n-1`.
    pub fn k2_sum_cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParams("k2_sum_cycle needs n >= 3".into()));
        }
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, (i + 1) % (n - 1))).collect();
        edges.push((0, n - 1));
        edges.push((0, n - 1));
        Multigraph::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadParams("complete needs n >= 1".into()));
        }
        Multigraph::new(n, &(0..n).tuple_combinations().collect::<Vec<_>>())
    }

    /// Three internally disjoint paths of lengths `a`, `b`, `c` between
    /// vertex 0 and vertex 1.
    pub fn theta(a: usize, b: usize, c: usize) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::BadParams("theta path lengths must be >= 1".into()));
        }
        let mut n = 2;
        let mut edges = Vec::new();
        for len in [a, b, c] {
            let mut prev = 0;
            for _ in 1..len {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, 1));
        }
        Multigraph::new(n, &edges)
    }

    /// The circular ladder `C_n x K_2` on `2n` vertices.
    pub fn prism(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParams("prism needs n >= 3".into()));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((n + i, n + (i + 1) % n));
            edges.push((i, n + i));
        }
        Multigraph::new(2 * n, &edges)
    }

    /// `n` parallel edges between two vertices.
    pub fn bond(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::BadParams("bond needs m >= 1".into()));
        }
        Multigraph::new(2, &vec![(0, 1); m])
    }

    /// The wheel: hub 0 joined to a rim cycle on `1..=n`.
    pub fn wheel(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParams("wheel needs n >= 3".into()));
        }
        let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
        edges.extend((1..=n).map(|i| (i, i % n + 1)));
        Multigraph::new(n + 1, &edges)
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}:{}-{}", e.id, e.u, e.v)?;
        }
        write!(f, "]")
    }
}

/// A named generator such as `cycle(5)` or `theta(1,2,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub name: String,
    pub args: Vec<usize>,
}

impl GraphSpec {
    pub fn build(&self) -> Result<Multigraph> {
        let want = |k: usize| -> Result<()> {
            if self.args.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!("{} takes {k} argument(s)", self.name)))
            }
        };
        match self.name.as_str() {
            "cycle" => want(1).and_then(|_| Multigraph::cycle(self.args[0])),
            "k2_sum_cycle" => want(1).and_then(|_| Multigraph::k2_sum_cycle(self.args[0])),
            "complete" => want(1).and_then(|_| Multigraph::complete(self.args[0])),
            "theta" => want(3).and_then(|_| Multigraph::theta(self.args[0], self.args[1], self.args[2])),
            "prism" => want(1).and_then(|_| Multigraph::prism(self.args[0])),
            "bond" => want(1).and_then(|_| Multigraph::bond(self.args[0])),
            "wheel" => want(1).and_then(|_| Multigraph::wheel(self.args[0])),
            other => Err(Error::BadParams(format!(
                "unknown graph generator `{other}` (expected cycle, k2_sum_cycle, complete, theta, prism, bond, wheel)"
            ))),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let open = s
            .find('(')
            .ok_or_else(|| Error::Parse(format!("expected name(args) in `{s}`")))?;
        if !s.ends_with(')') {
            return Err(Error::Parse(format!("missing `)` in `{s}`")));
        }
        let name = s[..open].trim().to_string();
        let args = s[open + 1..s.len() - 1]
            .split(',')
            .map(|a| {
                a.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad argument `{a}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GraphSpec { name, args })
    }
}

/// The cycle of `tree + chord`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCycle {
    pub chord: Element,
    pub edges: BTreeSet<Element>,
}

impl FundamentalCycle {
    pub fn contains(&self, id: Element) -> bool {
        self.edges.contains(&id)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn automorphisms_preserve_trees() {
        for g in [Multigraph::complete(4).unwrap(), Multigraph::k2_sum_cycle(4).unwrap(), Multigraph::theta(1, 2, 2).unwrap()] {
            let trees = g.enumerate_spanning_trees().unwrap();
            let auts = g.automorphisms();
            assert!(!auts.is_empty());
            for p in &auts {
                for t in trees.bases() {
                    let img = Basis::new(t.elements().iter().map(|&x| p[x]).collect()).unwrap();
                    assert!(trees.index_of(&img).is_some());
                }
            }
        }
        assert_eq!(Multigraph::complete(4).unwrap().automorphisms().len(), 24);
    }

    #[test]
    fn tree_counts() {
        assert_eq!(Multigraph::cycle(3).unwrap().enumerate_spanning_trees().unwrap().len(), 3);
        assert_eq!(Multigraph::complete(4).unwrap().enumerate_spanning_trees().unwrap().len(), 16);
        assert_eq!(Multigraph::bond(3).unwrap().enumerate_spanning_trees().unwrap().len(), 3);
        for g in [Multigraph::prism(3).unwrap(), Multigraph::wheel(4).unwrap(), Multigraph::theta(1, 2, 3).unwrap()] {
            assert_eq!(g.enumerate_spanning_trees().unwrap().len() as i128, oracle::kirchhoff_tree_count(&g));
        }
    }

    #[test]
    fn disconnected_has_no_trees() {
        let g = Multigraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.enumerate_spanning_trees().unwrap_err(), Error::Disconnected);
        assert_eq!(g.edge_connectivity(), 0);
    }

    #[test]
    fn loops_rejected() {
        assert_eq!(Multigraph::new(2, &[(1, 1)]).unwrap_err(), Error::LoopEdge(0));
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(Multigraph::cycle(5).unwrap().edge_connectivity(), 2);
        assert_eq!(Multigraph::complete(4).unwrap().edge_connectivity(), 3);
        let g = Multigraph::k2_sum_cycle(5).unwrap();
        assert_eq!(g.edge_connectivity(), 2);
        assert_eq!(oracle::edge_connectivity_bruteforce(&g), 2);
        let k4e = Multigraph::complete(4).unwrap().delete_edge(0).unwrap();
        assert_eq!(k4e.vertex_count(), 4);
        assert_eq!(k4e.edge_count(), 5);
        assert_eq!(k4e.edge_connectivity(), 2);
    }

    #[test]
    fn contraction_rules() {
        let c3 = Multigraph::cycle(3).unwrap().contract_edge(0).unwrap();
        assert_eq!(c3.vertex_count(), 2);
        assert_eq!(c3.edge_count(), 2);
        assert_eq!(c3.multiplicity(0, 1), 2);
        let digon = Multigraph::bond(2).unwrap().contract_edge(0).unwrap();
        assert_eq!(digon.vertex_count(), 1);
        assert_eq!(digon.edge_count(), 0);
        // surviving ids are kept
        let k4 = Multigraph::complete(4).unwrap().contract_edge(2).unwrap();
        assert!(k4.edge(2).is_err());
        assert!(k4.edge(5).is_ok());
        assert_eq!(Multigraph::cycle(3).unwrap().contract_edge(9).unwrap_err(), Error::NoSuchEdge(9));
        assert_eq!(Multigraph::cycle(3).unwrap().delete_edge(9).unwrap_err(), Error::NoSuchEdge(9));
    }

    #[test]
    fn fundamental_cycles() {
        // K4 ids: 0:01 1:02 2:03 3:12 4:13 5:23
        let k4 = Multigraph::complete(4).unwrap();
        let star = Basis::new(vec![0, 1, 2]).unwrap();
        let fc = k4.fundamental_cycle(&star, 3).unwrap();
        assert_eq!(fc.edges, BTreeSet::from([0, 1, 3]));
        assert_eq!(k4.fundamental_cycle(&star, 0).unwrap_err(), Error::ChordInTree(0));

        let digon = Multigraph::bond(2).unwrap();
        let fc = digon.fundamental_cycle(&Basis::new(vec![0]).unwrap(), 1).unwrap();
        assert_eq!(fc.edges, BTreeSet::from([0, 1]));

        let c4 = Multigraph::cycle(4).unwrap();
        let path = Basis::new(vec![0, 1, 2]).unwrap();
        assert_eq!(c4.fundamental_cycle(&path, 3).unwrap().len(), 4);
    }

    #[test]
    fn generator_parsing() {
        let s: GraphSpec = "theta(1, 2,2)".parse().unwrap();
        assert_eq!(s.args, vec![1, 2, 2]);
        assert_eq!(s.build().unwrap().edge_count(), 5);
        assert!("cycle".parse::<GraphSpec>().is_err());
        assert!("blob(3)".parse::<GraphSpec>().unwrap().build().is_err());
        assert!("cycle(3,4)".parse::<GraphSpec>().unwrap().build().is_err());
    }

    #[test]
    fn json_roundtrip() {
        let g = Multigraph::k2_sum_cycle(4).unwrap().contract_edge(1).unwrap();
        assert_eq!(Multigraph::from_json(&g.to_json()).unwrap(), g);
    }
}
