//! Family-agnostic matroid machinery over explicit basis families.
//!
//! A matroid is given by its list of bases. Elements are 0-based integers;
//! when a ground set is written 1-based elsewhere (e.g. `[m+r]` for lattice
//! paths) the offset is exactly one.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Element = usize;

/// A basis, stored as a strictly increasing list of elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Basis(Vec<Element>);

impl Basis {
    pub fn new(mut elements: Vec<Element>) -> Result<Self> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedElement(elements));
        }
        Ok(Basis(elements))
    }

    /// Builds a basis from elements already known to be distinct.
    pub(crate) fn from_sorted_unchecked(elements: Vec<Element>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Basis(elements)
    }

    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn without(&self, x: Element) -> Basis {
        Basis(self.0.iter().copied().filter(|&y| y != x).collect())
    }

    pub fn with(&self, x: Element) -> Basis {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&x) {
            v.insert(pos, x);
        }
        Basis(v)
    }

    /// `self - out + inn`.
    pub fn exchange(&self, out: Element, inn: Element) -> Basis {
        self.without(out).with(inn)
    }

    /// Elements of `self` not in `other`.
    pub fn minus(&self, other: &Basis) -> Vec<Element> {
        self.0.iter().copied().filter(|&x| !other.contains(x)).collect()
    }

    pub fn symmetric_difference_len(&self, other: &Basis) -> usize {
        self.minus(other).len() + other.minus(self).len()
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// The bases of a matroid in lexicographic order.
#[derive(Clone, Debug)]
pub struct BasisFamily {
    ground_size: usize,
    rank: usize,
    bases: Vec<Basis>,
    index: HashMap<Basis, usize>,
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    ground_size: usize,
    rank: usize,
    bases: Vec<Vec<Element>>,
}

impl BasisFamily {
    pub fn new(ground_size: usize, rank: usize, bases: Vec<Basis>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for b in &bases {
            if b.len() != rank {
                return Err(Error::RankMismatch {
                    basis: b.0.clone(),
                    rank,
                    found: b.len(),
                });
            }
            if let Some(&x) = b.0.iter().find(|&&x| x >= ground_size) {
                return Err(Error::ElementOutOfRange {
                    element: x,
                    ground_size,
                });
            }
        }
        let mut bases = bases;
        bases.sort();
        if let Some(w) = bases.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateBasis(w[0].0.clone()));
        }
        let index = bases
            .iter()
            .enumerate()
            .map(|(i, b)| (b.clone(), i))
            .collect();
        Ok(BasisFamily {
            ground_size,
            rank,
            bases,
            index,
        })
    }

    /// Convenience constructor from raw element lists.
    pub fn from_lists(ground_size: usize, rank: usize, lists: Vec<Vec<Element>>) -> Result<Self> {
        let bases = lists.into_iter().map(Basis::new).collect::<Result<Vec<_>>>()?;
        BasisFamily::new(ground_size, rank, bases)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Basis] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn basis(&self, i: usize) -> &Basis {
        &self.bases[i]
    }

    pub fn index_of(&self, b: &Basis) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn is_loop(&self, e: Element) -> bool {
        self.bases.iter().all(|b| !b.contains(e))
    }

    pub fn is_isthmus(&self, e: Element) -> bool {
        self.bases.iter().all(|b| b.contains(e))
    }

    /// Checks the basis exchange axiom on every ordered pair of bases.
    pub fn check_basis_axiom(&self) -> std::result::Result<(), AxiomViolation> {
        for b1 in &self.bases {
            for b2 in &self.bases {
                for e in b1.minus(b2) {
                    let ok = b2
                        .minus(b1)
                        .into_iter()
                        .any(|g| self.index.contains_key(&b1.exchange(e, g)));
                    if !ok {
                        return Err(AxiomViolation {
                            b1: b1.clone(),
                            b2: b2.clone(),
                            e,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn satisfies_basis_axiom(&self) -> bool {
        self.check_basis_axiom().is_ok()
    }

    /// Bases of the dual matroid (complements).
    pub fn dual(&self) -> BasisFamily {
        let bases = self
            .bases
            .iter()
            .map(|b| {
                Basis::from_sorted_unchecked(
                    (0..self.ground_size).filter(|&x| !b.contains(x)).collect(),
                )
            })
            .collect();
        BasisFamily::new(self.ground_size, self.ground_size - self.rank, bases)
            .expect("complements of a valid family form a valid family")
    }

    /// Applies an injective element relabeling to every basis.
    pub fn relabel(&self, ground_size: usize, map: impl Fn(Element) -> Element) -> Result<BasisFamily> {
        let bases = self
            .bases
            .iter()
            .map(|b| Basis::new(b.0.iter().map(|&x| map(x)).collect()))
            .collect::<Result<Vec<_>>>()?;
        BasisFamily::new(ground_size, self.rank, bases)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(FamilyJson {
            ground_size: self.ground_size,
            rank: self.rank,
            bases: self.bases.iter().map(|b| b.0.clone()).collect(),
        })
        .expect("family serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: FamilyJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        BasisFamily::from_lists(raw.ground_size, raw.rank, raw.bases)
    }
}

impl PartialEq for BasisFamily {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for BasisFamily {}

/// A witness that the exchange axiom fails: no `g` in `b2 - b1` makes
/// `b1 - e + g` a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub b1: Basis,
    pub b2: Basis,
    pub e: Element,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B1={} B2={} e={}", self.b1, self.b2, self.e)
    }
}

/// Basis graph: bases adjacent iff their symmetric difference has two elements.
#[derive(Clone, Debug)]
pub struct BasisGraph {
    family: BasisFamily,
    adj: Vec<Vec<usize>>,
}

impl BasisGraph {
    pub fn build(family: BasisFamily) -> BasisGraph {
        let mut adj = vec![Vec::new(); family.len()];
        for (i, b) in family.bases.iter().enumerate() {
            for &x in b.elements() {
                let rest = b.without(x);
                for y in (0..family.ground_size).filter(|&y| !b.contains(y)) {
                    if let Some(j) = family.index_of(&rest.with(y)) {
                        adj[i].push(j);
                    }
                }
            }
            adj[i].sort_unstable();
        }
        BasisGraph { family, adj }
    }

    pub fn family(&self) -> &BasisFamily {
        &self.family
    }

    pub fn vertices(&self) -> &[Basis] {
        self.family.bases()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// For an edge `b1 b2`, returns `(e, g)` with `B2 = B1 - e + g`.
    pub fn exchange(&self, b1: usize, b2: usize) -> Result<(Element, Element)> {
        if b1 >= self.adj.len() {
            return Err(Error::NoSuchVertex(b1));
        }
        if b2 >= self.adj.len() {
            return Err(Error::NoSuchVertex(b2));
        }
        if !self.has_edge(b1, b2) {
            return Err(Error::NotAnEdge(b1, b2));
        }
        let (x, y) = (self.family.basis(b1), self.family.basis(b2));
        Ok((x.minus(y)[0], y.minus(x)[0]))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.adj.len();
        self.adj.iter().all(|ns| ns.len() + 1 == n)
    }

    /// Adjacency of the subgraph induced by `vertices`, indexed by their
    /// position in `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let pos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = self.adj[v].iter().filter_map(|w| pos.get(w).copied()).collect();
                ns.sort_unstable();
                ns
            })
            .collect()
    }
}

/// A cycle in a graph stored as a set of undirected edges `(min, max)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeCycle(BTreeSet<(usize, usize)>);

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl EdgeCycle {
    /// The closed walk `order[0] order[1] ... order[last] order[0]`.
    pub fn from_vertex_order(order: &[usize]) -> EdgeCycle {
        let k = order.len();
        let mut edges = BTreeSet::new();
        for i in 0..k {
            edges.insert(norm(order[i], order[(i + 1) % k]));
        }
        EdgeCycle(edges)
    }

    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> EdgeCycle {
        EdgeCycle(edges.into_iter().map(|(u, v)| norm(u, v)).collect())
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.0.contains(&norm(u, v))
    }

    pub fn symmetric_difference(&self, other: &EdgeCycle) -> EdgeCycle {
        EdgeCycle(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> EdgeCycle {
        EdgeCycle(self.0.iter().map(|&(u, v)| norm(f(u), f(v))).collect())
    }

    /// Walks the cycle starting at `start` and leaving through `next`.
    /// Returns `None` if the edge set is not a single cycle through that edge.
    pub fn vertex_order(&self, start: usize, next: usize) -> Option<Vec<usize>> {
        if !self.contains_edge(start, next) {
            return None;
        }
        let mut nbrs: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(u, v) in &self.0 {
            nbrs.entry(u).or_default().push(v);
            nbrs.entry(v).or_default().push(u);
        }
        if nbrs.values().any(|ns| ns.len() != 2) {
            return None;
        }
        let mut order = vec![start];
        let (mut prev, mut cur) = (start, next);
        while cur != start {
            order.push(cur);
            let ns = &nbrs[&cur];
            let nxt = if ns[0] == prev { ns[1] } else { ns[0] };
            prev = cur;
            cur = nxt;
            if order.len() > self.0.len() {
                return None;
            }
        }
        (order.len() == self.0.len()).then_some(order)
    }

    /// Checks that this edge set is a Hamiltonian cycle of the graph.
    pub fn check_hamiltonian(&self, adj: &[Vec<usize>]) -> std::result::Result<(), String> {
        let n = adj.len();
        if self.0.len() != n || n < 3 {
            return Err(format!("{} edges for {} vertices", self.0.len(), n));
        }
        for &(u, v) in &self.0 {
            if v >= n || adj[u].binary_search(&v).is_err() {
                return Err(format!("({u},{v}) is not a graph edge"));
            }
        }
        let &(s, t) = self.0.iter().next().expect("nonempty");
        match self.vertex_order(s, t) {
            Some(order) if order.len() == n => Ok(()),
            _ => Err("edge set is not a single spanning cycle".into()),
        }
    }

    pub fn is_hamiltonian(&self, adj: &[Vec<usize>]) -> bool {
        self.check_hamiltonian(adj).is_ok()
    }
}

/// A 4-cycle `b1 b2 b3 b4` of a basis graph with `e` in `B1, B4` and not in
/// `B2, B3`, where `B2 = B1 - e + g`. `f` and `w` record the second exchange
/// (the element leaving `B1` and the element entering `B4`).
///
/// Identity (equality, hashing) is the vertex tuple only: the distinguished
/// edge `b1 b2` plus the membership pattern of `e` fixes which of the other
/// two vertices is `b3`.
#[derive(Clone, Copy, Debug)]
pub struct GoodCycle {
    pub b1: usize,
    pub b2: usize,
    pub b3: usize,
    pub b4: usize,
    pub e: Element,
    pub g: Element,
    pub f: Element,
    pub w: Element,
}

impl GoodCycle {
    pub fn key(&self) -> (usize, usize, usize, usize) {
        (self.b1, self.b2, self.b3, self.b4)
    }

    pub fn vertices(&self) -> [usize; 4] {
        [self.b1, self.b2, self.b3, self.b4]
    }

    pub fn edge_cycle(&self) -> EdgeCycle {
        EdgeCycle::from_vertex_order(&self.vertices())
    }

    /// Builds the cycle `b1 b2 B3 B4` from the two new bases and validates it.
    pub fn from_bases(bg: &BasisGraph, b1: usize, b2: usize, b3: &Basis, b4: &Basis) -> Result<GoodCycle> {
        let fam = bg.family();
        let find = |b: &Basis| {
            fam.index_of(b)
                .ok_or_else(|| Error::InvalidTemplate(format!("{b} is not a basis")))
        };
        let (i3, i4) = (find(b3)?, find(b4)?);
        let (e, g) = bg.exchange(b1, b2)?;
        let base1 = fam.basis(b1);
        let (f, w) = match (base1.minus(b4).first(), b4.minus(base1).first()) {
            (Some(&f), Some(&w)) => (f, w),
            _ => return Err(Error::InvalidTemplate(format!("B4 = {b4} equals B1"))),
        };
        let cyc = GoodCycle {
            b1,
            b2,
            b3: i3,
            b4: i4,
            e,
            g,
            f,
            w,
        };
        cyc.validate(bg)?;
        Ok(cyc)
    }

    pub fn validate(&self, bg: &BasisGraph) -> Result<()> {
        let v = self.vertices();
        if let Some(&x) = v.iter().find(|&&x| x >= bg.vertex_count()) {
            return Err(Error::NoSuchVertex(x));
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if v[i] == v[j] {
                    return Err(Error::InvalidTemplate(format!("repeated vertex in {v:?}")));
                }
            }
        }
        for i in 0..4 {
            let (a, b) = (v[i], v[(i + 1) % 4]);
            if !bg.has_edge(a, b) {
                return Err(Error::InvalidTemplate(format!("{a}-{b} missing in {v:?}")));
            }
        }
        let fam = bg.family();
        let has = |x: usize| fam.basis(x).contains(self.e);
        if !(has(self.b1) && has(self.b4) && !has(self.b2) && !has(self.b3)) {
            return Err(Error::InvalidTemplate(format!("e-pattern broken in {v:?}")));
        }
        if fam.basis(self.b1).exchange(self.e, self.g) != *fam.basis(self.b2) {
            return Err(Error::InvalidTemplate(format!("B2 != B1 - e + g in {v:?}")));
        }
        Ok(())
    }
}

impl PartialEq for GoodCycle {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for GoodCycle {}

impl std::hash::Hash for GoodCycle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for GoodCycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoodCycle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// Sorts and removes cycles with the same vertex tuple.
pub fn dedup_good_cycles(mut cycles: Vec<GoodCycle>) -> Vec<GoodCycle> {
    cycles.sort();
    cycles.dedup();
    cycles
}

/// All good cycles for the edge `b1 b2`, straight from the definition.
pub fn good_cycles_bruteforce(bg: &BasisGraph, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
    let (e, g) = bg.exchange(b1, b2)?;
    let fam = bg.family();
    let mut out = Vec::new();
    for &b4 in bg.neighbors(b1) {
        if b4 == b2 || !fam.basis(b4).contains(e) {
            continue;
        }
        for &b3 in bg.neighbors(b4) {
            if fam.basis(b3).contains(e) || !bg.has_edge(b2, b3) {
                continue;
            }
            let (f, w) = {
                let (x, y) = (fam.basis(b1), fam.basis(b4));
                (x.minus(y)[0], y.minus(x)[0])
            };
            out.push(GoodCycle {
                b1,
                b2,
                b3,
                b4,
                e,
                g,
                f,
                w,
            });
        }
    }
    Ok(dedup_good_cycles(out))
}

/// Which side of an element split a parent basis falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Contract(usize),
    Delete(usize),
}

/// The bases of `M / e` (as `B - e`) and `M \ e`, with index maps back to the
/// parent family. Element ids are the parent's.
#[derive(Clone, Debug)]
pub struct ElementSplit {
    pub element: Element,
    pub contract: BasisFamily,
    pub delete: BasisFamily,
    pub contract_to_parent: Vec<usize>,
    pub delete_to_parent: Vec<usize>,
    sides: Vec<Side>,
}

impl ElementSplit {
    pub fn side(&self, parent: usize) -> Side {
        self.sides[parent]
    }
}

pub fn split_by_element(family: &BasisFamily, e: Element) -> Result<ElementSplit> {
    let (with_e, without_e): (Vec<usize>, Vec<usize>) =
        (0..family.len()).partition(|&i| family.basis(i).contains(e));
    if with_e.is_empty() || without_e.is_empty() {
        return Err(Error::LoopOrIsthmus(e));
    }
    // Both sides inherit lexicographic order from the parent, so the index
    // maps below line up with the sorted minor families.
    let contract = BasisFamily::new(
        family.ground_size(),
        family.rank() - 1,
        with_e.iter().map(|&i| family.basis(i).without(e)).collect(),
    )?;
    let delete = BasisFamily::new(
        family.ground_size(),
        family.rank(),
        without_e.iter().map(|&i| family.basis(i).clone()).collect(),
    )?;
    let contract_to_parent: Vec<usize> = contract
        .bases()
        .iter()
        .map(|b| family.index_of(&b.with(e)).expect("lifted basis exists"))
        .collect();
    let delete_to_parent: Vec<usize> = delete
        .bases()
        .iter()
        .map(|b| family.index_of(b).expect("basis exists"))
        .collect();
    let mut sides = vec![Side::Delete(0); family.len()];
    for (i, &p) in contract_to_parent.iter().enumerate() {
        sides[p] = Side::Contract(i);
    }
    for (i, &p) in delete_to_parent.iter().enumerate() {
        sides[p] = Side::Delete(i);
    }
    Ok(ElementSplit {
        element: e,
        contract,
        delete,
        contract_to_parent,
        delete_to_parent,
        sides,
    })
}

/// Glues a Hamiltonian cycle of the contract side through `b1 b4`, the good
/// cycle, and a Hamiltonian cycle of the delete side through `b2 b3` into a
/// Hamiltonian cycle of the whole basis graph through `b1 b2`.
///
/// A side whose basis graph is a single edge passes `None`; that edge must be
/// the one the good cycle uses on that side. Cycles are given in the side's
/// own vertex indices (as in `split.contract` / `split.delete`).
pub fn glue_hamiltonian(
    bg: &BasisGraph,
    split: &ElementSplit,
    hc_x: Option<&EdgeCycle>,
    good: &GoodCycle,
    hc_y: Option<&EdgeCycle>,
) -> Result<EdgeCycle> {
    if good.e != split.element {
        return Err(Error::InvalidExchange(format!(
            "good cycle exchanges {} but split is on {}",
            good.e, split.element
        )));
    }
    let (x1, x4) = match (split.side(good.b1), split.side(good.b4)) {
        (Side::Contract(a), Side::Contract(b)) => (a, b),
        _ => return Err(Error::InvalidExchange("b1, b4 must contain e".into())),
    };
    let (y2, y3) = match (split.side(good.b2), split.side(good.b3)) {
        (Side::Delete(a), Side::Delete(b)) => (a, b),
        _ => return Err(Error::InvalidExchange("b2, b3 must avoid e".into())),
    };
    let square = good.edge_cycle();
    let mut glued = square.clone();
    match hc_x {
        Some(c) => {
            if !c.contains_edge(x1, x4) {
                return Err(Error::EdgeNotOnCycle(format!("b1b4 = ({x1},{x4}) on contract side")));
            }
            glued = glued.symmetric_difference(&c.map(|v| split.contract_to_parent[v]));
        }
        None => {
            if split.contract.len() != 2 {
                return Err(Error::EdgeNotOnCycle("contract side is not a single edge".into()));
            }
        }
    }
    match hc_y {
        Some(c) => {
            if !c.contains_edge(y2, y3) {
                return Err(Error::EdgeNotOnCycle(format!("b2b3 = ({y2},{y3}) on delete side")));
            }
            glued = glued.symmetric_difference(&c.map(|v| split.delete_to_parent[v]));
        }
        None => {
            if split.delete.len() != 2 {
                return Err(Error::EdgeNotOnCycle("delete side is not a single edge".into()));
            }
        }
    }
    // A side given as a single edge contributes that edge, which the square
    // already holds; the symmetric difference above leaves it in place.
    glued
        .check_hamiltonian(bg.adjacency())
        .map_err(Error::GlueNotHamiltonian)?;
    if !glued.contains_edge(good.b1, good.b2) {
        return Err(Error::GlueNotHamiltonian("b1b2 missing".into()));
    }
    Ok(glued)
}
