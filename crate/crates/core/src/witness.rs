//! Explicit families of distinct Hamiltonian cycles through one edge.
//!
//! Closed-form constructions cover complete and prism basis graphs. The
//! recursive generator glues witnesses of the two minors of an element split
//! across good cycles, in the minors' own coordinates.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graphic::{good_cycles_graphic, GraphicMatroid, Multigraph};
use crate::hamiltonian::enumerate_hc_cycles;
use crate::latticepath::{good_cycles_gencat_min, CatalanMatroid};
use crate::matroid::{glue_hamiltonian, split_by_element, Basis, BasisGraph, EdgeCycle, Element, ElementSplit, GoodCycle};
use crate::uniform::{UniformMatroid, UniformSpec};

pub const WITNESS_SCHEMA: &str = "basis-hc/witness-set/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WitnessMethod {
    Complete,
    Prism,
    Exhaustive,
    Glued,
}

/// Distinct Hamiltonian cycles through `edge`, each validated.
#[derive(Clone, Debug)]
pub struct WitnessSet {
    pub edge: (usize, usize),
    pub cycles: Vec<EdgeCycle>,
    pub method: WitnessMethod,
    /// Glued cycles that duplicated one already in the set.
    pub collisions: usize,
}

impl WitnessSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn validate(&self, bg: &BasisGraph) -> Result<()> {
        let (a, b) = self.edge;
        let mut seen = BTreeSet::new();
        for c in &self.cycles {
            c.check_hamiltonian(bg.adjacency()).map_err(Error::GlueNotHamiltonian)?;
            if !c.contains_edge(a, b) {
                return Err(Error::EdgeNotOnCycle(format!("({a},{b})")));
            }
            if !seen.insert(c) {
                return Err(Error::GlueNotHamiltonian("duplicate cycle".into()));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let (a, b) = self.edge;
        let cycles: Vec<Vec<usize>> = self
            .cycles
            .iter()
            .map(|c| c.vertex_order(a, b).expect("cycle holds its edge"))
            .collect();
        json!({
            "schema": WITNESS_SCHEMA,
            "edge": [a, b],
            "method": format!("{:?}", self.method).to_lowercase(),
            "collisions": self.collisions,
            "cycles": cycles,
        })
    }

    /// Reads an exported set and re-checks every cycle against `bg`.
    pub fn from_json(bg: &BasisGraph, value: &Value) -> Result<WitnessSet> {
        let bad = |m: &str| Error::Parse(format!("witness JSON: {m}"));
        if value.get("schema").and_then(Value::as_str) != Some(WITNESS_SCHEMA) {
            return Err(bad("missing or unknown schema"));
        }
        let nums = |v: &Value| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| bad("expected an array"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("expected an index")))
                .collect()
        };
        let edge = nums(value.get("edge").ok_or_else(|| bad("missing edge"))?)?;
        if edge.len() != 2 {
            return Err(bad("edge needs two endpoints"));
        }
        let cycles = value
            .get("cycles")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing cycles"))?
            .iter()
            .map(|c| nums(c).map(|order| EdgeCycle::from_vertex_order(&order)))
            .collect::<Result<Vec<_>>>()?;
        let set = WitnessSet {
            edge: (edge[0], edge[1]),
            cycles,
            method: WitnessMethod::Exhaustive,
            collisions: 0,
        };
        set.validate(bg)?;
        Ok(set)
    }
}

fn cycles_of_clique(verts: &[usize], a: usize, b: usize, limit: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = verts.iter().copied().filter(|&x| x != a && x != b).collect();
    let k = rest.len();
    rest.into_iter()
        .permutations(k)
        .take(limit)
        .map(|p| {
            let mut order = vec![a, b];
            order.extend(p);
            order
        })
        .collect()
}

/// `(n-2)!` cycles of `K_n` on `0..n` through `edge`: `a b` followed by every
/// ordering of the rest. At most `limit` are produced.
pub fn witnesses_complete(n: usize, edge: (usize, usize), limit: Option<usize>) -> Result<WitnessSet> {
    let (a, b) = edge;
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if a >= n || b >= n || a == b {
        return Err(Error::NotAnEdge(a, b));
    }
    let verts: Vec<usize> = (0..n).collect();
    let cycles = cycles_of_clique(&verts, a, b, limit.unwrap_or(usize::MAX))
        .iter()
        .map(|o| EdgeCycle::from_vertex_order(o))
        .collect();
    Ok(WitnessSet { edge, cycles, method: WitnessMethod::Complete, collisions: 0 })
}

/// Vertex `c * (n-1) + i` of `K_2 □ K_{n-1}` is copy `c`, position `i`.
pub fn prism_vertex(n: usize, copy: usize, i: usize) -> usize {
    copy * (n - 1) + i
}

pub fn prism_adjacency(n: usize) -> Vec<Vec<usize>> {
    let m = n - 1;
    (0..2 * m)
        .map(|v| {
            let (c, i) = (v / m, v % m);
            let mut nb: Vec<usize> = (0..m).filter(|&j| j != i).map(|j| prism_vertex(n, c, j)).collect();
            nb.push(prism_vertex(n, 1 - c, i));
            nb.sort_unstable();
            nb
        })
        .collect()
}

/// `(n-2)!(n-3)!` cycles of `K_2 □ K_{n-1}` through `edge`, gluing a cycle
/// of each copy across a square. Vertex labels follow [`prism_vertex`].
pub fn witnesses_prism(n: usize, edge: (usize, usize), limit: Option<usize>) -> Result<WitnessSet> {
    if n < 3 {
        return Err(Error::TooSmall(2 * n.saturating_sub(1)));
    }
    let m = n - 1;
    let (a, b) = edge;
    let adj = prism_adjacency(n);
    if a >= 2 * m || b >= 2 * m || !adj[a].contains(&b) {
        return Err(Error::NotAnEdge(a, b));
    }
    let limit = limit.unwrap_or(usize::MAX);
    let mut cycles = Vec::new();
    if m == 2 {
        cycles.push(EdgeCycle::from_vertex_order(&[0, 1, 3, 2]));
        return Ok(WitnessSet { edge, cycles, method: WitnessMethod::Prism, collisions: 0 });
    }
    let pos: Vec<usize> = (0..m).collect();
    let lift = |c: usize, o: &[usize]| EdgeCycle::from_vertex_order(&o.iter().map(|&i| prism_vertex(n, c, i)).collect::<Vec<_>>());
    let square = |i: usize, j: usize| {
        EdgeCycle::from_vertex_order(&[prism_vertex(n, 0, i), prism_vertex(n, 0, j), prism_vertex(n, 1, j), prism_vertex(n, 1, i)])
    };
    let mut push = |c: EdgeCycle| {
        cycles.push(c);
        cycles.len() < limit
    };
    'outer: {
        if a / m == b / m {
            let (c, i, j) = (a / m, a % m, b % m);
            for o1 in cycles_of_clique(&pos, i, j, usize::MAX) {
                let k = o1.len();
                for t in 0..k {
                    let (x, y) = (o1[t], o1[(t + 1) % k]);
                    if (x, y) == (i, j) || (x, y) == (j, i) {
                        continue;
                    }
                    for o2 in cycles_of_clique(&pos, x, y, usize::MAX) {
                        let glued = lift(c, &o1).symmetric_difference(&square(x, y)).symmetric_difference(&lift(1 - c, &o2));
                        if !push(glued) {
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            let i = a % m;
            for j in (0..m).filter(|&j| j != i) {
                for o1 in cycles_of_clique(&pos, i, j, usize::MAX) {
                    for o2 in cycles_of_clique(&pos, i, j, usize::MAX) {
                        let glued = lift(0, &o1).symmetric_difference(&square(i, j)).symmetric_difference(&lift(1, &o2));
                        if !push(glued) {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    Ok(WitnessSet { edge, cycles, method: WitnessMethod::Prism, collisions: 0 })
}

/// If `bg` is `K_2 □ K_{n-1}` with `n >= 4`, the basis index of each prism
/// label (see [`prism_vertex`]).
pub fn detect_prism(bg: &BasisGraph) -> Option<(usize, Vec<usize>)> {
    let v = bg.vertex_count();
    if v < 6 || v % 2 == 1 {
        return None;
    }
    let m = v / 2;
    if (0..v).any(|x| bg.degree(x) != m) {
        return None;
    }
    let common = |x: usize, y: usize| bg.neighbors(x).iter().filter(|z| bg.has_edge(y, **z)).count();
    let cross = |x: usize| -> Option<usize> {
        let mut it = bg.neighbors(x).iter().copied().filter(|&y| common(x, y) == 0);
        let c = it.next()?;
        it.next().is_none().then_some(c)
    };
    let c0 = cross(0)?;
    let copy0: Vec<usize> = std::iter::once(0).chain(bg.neighbors(0).iter().copied().filter(|&y| y != c0)).collect();
    let mut label = copy0.clone();
    for &x in &copy0 {
        label.push(cross(x)?);
    }
    let mut hit = vec![false; v];
    if label.iter().any(|&x| std::mem::replace(&mut hit[x], true)) {
        return None;
    }
    let n = m + 1;
    let adj = prism_adjacency(n);
    let ok = (0..v).all(|p| (0..v).all(|q| adj[p].contains(&q) == bg.has_edge(label[p], label[q])));
    ok.then_some((n, label))
}

/// A matroid the recursive generator can split.
pub trait WitnessMatroid: Sized {
    fn basis_graph(&self) -> &BasisGraph;

    fn good_cycles(&self, b1: usize, b2: usize) -> Result<Vec<GoodCycle>>;

    /// `M / e` or `M \ e`, possibly simplified further. A child basis `B`
    /// corresponds to the parent-side basis `element_map[B] + extra`.
    fn minor(&self, e: Element, side: MinorSide) -> Result<LiftedMinor<Self>>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorSide {
    Contract,
    Delete,
}

pub struct LiftedMinor<M> {
    pub matroid: M,
    pub element_map: Vec<Element>,
    pub extra: Vec<Element>,
}

impl WitnessMatroid for GraphicMatroid {
    fn basis_graph(&self) -> &BasisGraph {
        GraphicMatroid::basis_graph(self)
    }

    fn good_cycles(&self, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
        good_cycles_graphic(self.graph(), GraphicMatroid::basis_graph(self), b1, b2)
    }

    fn minor(&self, e: Element, side: MinorSide) -> Result<LiftedMinor<Self>> {
        let mut g: Multigraph = match side {
            MinorSide::Contract => self.graph().contract_edge(e)?,
            MinorSide::Delete => self.graph().delete_edge(e)?,
        };
        // bridges are isthmuses: contracting them leaves the bases unchanged
        let extra = g.bridges();
        for &b in &extra {
            g = g.contract_edge(b)?;
        }
        let element_map = (0..self.graph().ground_size()).collect();
        Ok(LiftedMinor { matroid: GraphicMatroid::new(g)?, element_map, extra })
    }
}

impl WitnessMatroid for CatalanMatroid {
    fn basis_graph(&self) -> &BasisGraph {
        CatalanMatroid::basis_graph(self)
    }

    fn good_cycles(&self, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
        good_cycles_gencat_min(self.gen_catalan(), CatalanMatroid::basis_graph(self), b1, b2)
    }

    fn minor(&self, e: Element, side: MinorSide) -> Result<LiftedMinor<Self>> {
        let (m, map) = match side {
            MinorSide::Contract => self.gen_catalan().contract_element(e)?,
            MinorSide::Delete => self.gen_catalan().delete_element(e)?,
        };
        let (s, smap, isth) = m.simplify();
        Ok(LiftedMinor {
            matroid: CatalanMatroid::new(s),
            element_map: smap.iter().map(|&j| map[j]).collect(),
            extra: isth.iter().map(|&j| map[j]).collect(),
        })
    }
}

impl WitnessMatroid for UniformMatroid {
    fn basis_graph(&self) -> &BasisGraph {
        UniformMatroid::basis_graph(self)
    }

    fn good_cycles(&self, b1: usize, b2: usize) -> Result<Vec<GoodCycle>> {
        UniformMatroid::good_cycles(self, b1, b2)
    }

    fn minor(&self, e: Element, side: MinorSide) -> Result<LiftedMinor<Self>> {
        let UniformSpec { r, n } = self.spec();
        let spec = match side {
            MinorSide::Contract => UniformSpec::new(r - 1, n - 1)?,
            MinorSide::Delete => UniformSpec::new(r, n - 1)?,
        };
        Ok(LiftedMinor {
            matroid: UniformMatroid::new(spec),
            element_map: (0..n - 1).map(|j| if j < e { j } else { j + 1 }).collect(),
            extra: Vec::new(),
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct WitnessPolicy {
    /// How many distinct cycles to aim for.
    pub target: usize,
    /// Basis graphs with at most this many vertices are enumerated outright.
    pub exhaustive_cutoff: usize,
    /// Retries with doubled child targets when a level falls short.
    pub max_rounds: usize,
}

impl WitnessPolicy {
    pub fn new(target: usize) -> Self {
        WitnessPolicy { target, exhaustive_cutoff: 5, max_rounds: 8 }
    }
}

struct Found {
    cycles: Vec<EdgeCycle>,
    method: WitnessMethod,
    collisions: usize,
    // fewer than requested means nothing more can be produced
    exhausted: bool,
}

struct Child<M> {
    matroid: M,
    to_side: Vec<usize>,
    from_side: Vec<usize>,
}

struct Level<M> {
    split: ElementSplit,
    contract: Child<M>,
    delete: Child<M>,
}

fn lift_child<M: WitnessMatroid>(side_family: &crate::matroid::BasisFamily, lm: LiftedMinor<M>) -> Result<Child<M>> {
    let fam = lm.matroid.basis_graph().family();
    if fam.len() != side_family.len() {
        return Err(Error::MinorMismatch(format!("{} child bases vs {} on the split side", fam.len(), side_family.len())));
    }
    let mut to_side = Vec::with_capacity(fam.len());
    let mut from_side = vec![usize::MAX; fam.len()];
    for (i, b) in fam.bases().iter().enumerate() {
        let lifted = Basis::new(b.elements().iter().map(|&x| lm.element_map[x]).chain(lm.extra.iter().copied()).collect())?;
        let j = side_family
            .index_of(&lifted)
            .ok_or_else(|| Error::MinorMismatch(format!("child basis {:?} lifts outside the split", b.elements())))?;
        to_side.push(j);
        from_side[j] = i;
    }
    if from_side.contains(&usize::MAX) {
        return Err(Error::MinorMismatch("child bases do not cover the split side".into()));
    }
    Ok(Child { matroid: lm.matroid, to_side, from_side })
}

fn level<M: WitnessMatroid>(m: &M, e: Element) -> Result<Level<M>> {
    let split = split_by_element(m.basis_graph().family(), e)?;
    let contract = lift_child(&split.contract, m.minor(e, MinorSide::Contract)?)?;
    let delete = lift_child(&split.delete, m.minor(e, MinorSide::Delete)?)?;
    Ok(Level { split, contract, delete })
}

fn base_case<M: WitnessMatroid>(m: &M, edge: (usize, usize), limit: usize, policy: &WitnessPolicy) -> Result<Option<Found>> {
    let bg = m.basis_graph();
    let n = bg.vertex_count();
    let done = |cycles: Vec<EdgeCycle>, method| Found { exhausted: cycles.len() < limit, cycles, method, collisions: 0 };
    if bg.is_complete() {
        return Ok(Some(done(witnesses_complete(n, edge, Some(limit))?.cycles, WitnessMethod::Complete)));
    }
    if let Some((k, label)) = detect_prism(bg) {
        let mut inv = vec![0; n];
        for (p, &x) in label.iter().enumerate() {
            inv[x] = p;
        }
        let w = witnesses_prism(k, (inv[edge.0], inv[edge.1]), Some(limit))?;
        let cycles = w.cycles.iter().map(|c| c.map(|p| label[p])).collect();
        return Ok(Some(done(cycles, WitnessMethod::Prism)));
    }
    if n <= policy.exhaustive_cutoff {
        let cycles = enumerate_hc_cycles(bg.adjacency(), edge.0, edge.1, Some(limit))?;
        return Ok(Some(done(cycles, WitnessMethod::Exhaustive)));
    }
    Ok(None)
}

type Memo = HashMap<(Element, MinorSide, usize, usize), Found>;

fn child_witnesses<'a, M: WitnessMatroid>(
    memo: &'a mut Memo,
    key: (Element, MinorSide),
    child: &Child<M>,
    side_edge: (usize, usize),
    target: usize,
    policy: &WitnessPolicy,
) -> Result<&'a Found> {
    let (a, b) = (child.from_side[side_edge.0], child.from_side[side_edge.1]);
    let k = (key.0, key.1, a.min(b), a.max(b));
    let fresh = match memo.get(&k) {
        Some(f) => !(f.exhausted || f.cycles.len() >= target),
        None => true,
    };
    if fresh {
        let mut f = recurse(&child.matroid, (a, b), target, policy)?;
        f.cycles = f.cycles.iter().map(|c| c.map(|v| child.to_side[v])).collect();
        memo.insert(k, f);
    }
    Ok(&memo[&k])
}

fn recurse<M: WitnessMatroid>(m: &M, edge: (usize, usize), target: usize, policy: &WitnessPolicy) -> Result<Found> {
    let bg = m.basis_graph();
    let (b1, b2) = edge;
    let n = bg.vertex_count();
    if b1 >= n || b2 >= n {
        return Err(Error::NoSuchVertex(b1.max(b2)));
    }
    if !bg.has_edge(b1, b2) {
        return Err(Error::NotAnEdge(b1, b2));
    }
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let target = target.max(1);
    if let Some(f) = base_case(m, edge, target, policy)? {
        return Ok(f);
    }
    let goods = m.good_cycles(b1, b2)?;
    if goods.is_empty() {
        return Err(Error::NoGoodCycle(b1, b2));
    }
    let mut levels: BTreeMap<Element, Level<M>> = BTreeMap::new();
    for c in &goods {
        if let std::collections::btree_map::Entry::Vacant(e) = levels.entry(c.e) {
            e.insert(level(m, c.e)?);
        }
    }
    let mut memo = Memo::new();
    let per_good = target.div_ceil(goods.len());
    let mut best = Found { cycles: Vec::new(), method: WitnessMethod::Glued, collisions: 0, exhausted: false };
    for round in 0..policy.max_rounds {
        let (tx, ty) = (per_good << round, 1usize << round);
        let mut out = BTreeSet::new();
        let mut collisions = 0;
        let mut exhausted = true;
        'goods: for c in &goods {
            let lv = &levels[&c.e];
            let side_x = |v: usize| match lv.split.side(v) {
                crate::matroid::Side::Contract(i) => i,
                crate::matroid::Side::Delete(i) => i,
            };
            let hx: Vec<Option<EdgeCycle>> = if lv.split.contract.len() == 2 {
                vec![None]
            } else {
                let f = child_witnesses(&mut memo, (c.e, MinorSide::Contract), &lv.contract, (side_x(c.b1), side_x(c.b4)), tx, policy)?;
                exhausted &= f.exhausted;
                f.cycles.iter().cloned().map(Some).collect()
            };
            let hy: Vec<Option<EdgeCycle>> = if lv.split.delete.len() == 2 {
                vec![None]
            } else {
                let f = child_witnesses(&mut memo, (c.e, MinorSide::Delete), &lv.delete, (side_x(c.b2), side_x(c.b3)), ty, policy)?;
                exhausted &= f.exhausted;
                f.cycles.iter().cloned().map(Some).collect()
            };
            for x in &hx {
                for y in &hy {
                    let glued = glue_hamiltonian(bg, &lv.split, x.as_ref(), c, y.as_ref())?;
                    if !out.insert(glued) {
                        collisions += 1;
                    }
                    if out.len() >= target {
                        break 'goods;
                    }
                }
            }
        }
        let done = out.len() >= target || exhausted;
        best = Found {
            exhausted: out.len() < target,
            cycles: out.into_iter().collect(),
            method: WitnessMethod::Glued,
            collisions,
        };
        if done {
            break;
        }
    }
    Ok(best)
}

/// Witnesses for `edge` by gluing across good cycles, stopping once
/// `policy.target` distinct cycles are found. Complete and prism basis graphs
/// and those below the cutoff are handled directly.
pub fn witnesses_recursive<M: WitnessMatroid>(m: &M, edge: (usize, usize), policy: &WitnessPolicy) -> Result<WitnessSet> {
    let f = recurse(m, edge, policy.target, policy)?;
    let set = WitnessSet { edge, cycles: f.cycles, method: f.method, collisions: f.collisions };
    set.validate(m.basis_graph())?;
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{bound_prism, catalan_lower, uniform_lower};
    use crate::hamiltonian::count_hc_dp;
    use crate::latticepath::GenCatalan;

    #[test]
    fn complete_counts() {
        for (n, want) in [(3, 1), (4, 2), (5, 6), (6, 24)] {
            let w = witnesses_complete(n, (0, 1), None).unwrap();
            let adj: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| j != i).collect()).collect();
            assert_eq!(w.len(), want);
            assert!(w.cycles.iter().all(|c| c.is_hamiltonian(&adj) && c.contains_edge(0, 1)));
            assert_eq!(w.cycles.iter().collect::<BTreeSet<_>>().len(), want);
        }
    }

    #[test]
    fn prism_counts_and_both_orbits() {
        for n in 3..=6usize {
            let adj = prism_adjacency(n);
            let want: usize = bound_prism(n).unwrap().try_into().unwrap();
            let m = n - 1;
            for edge in [(0, 1), (0, m)] {
                if n == 3 && edge == (0, 1) {
                    continue;
                }
                let w = witnesses_prism(n, edge, None).unwrap();
                assert_eq!(w.len(), want, "n={n} edge={edge:?}");
                assert!(w.cycles.iter().all(|c| c.is_hamiltonian(&adj) && c.contains_edge(edge.0, edge.1)));
                assert_eq!(w.cycles.iter().collect::<BTreeSet<_>>().len(), want);
            }
        }
        assert_eq!(count_hc_dp(&prism_adjacency(4), 0, 1).unwrap().value, 2);
    }

    #[test]
    fn prism_detection() {
        let g = Multigraph::k2_sum_cycle(4).unwrap();
        let m = GraphicMatroid::new(g).unwrap();
        let (n, label) = detect_prism(m.basis_graph()).expect("prism");
        assert_eq!(n, 4);
        assert_eq!(label.len(), 6);
        let k4 = GraphicMatroid::new(Multigraph::complete(4).unwrap()).unwrap();
        assert!(detect_prism(k4.basis_graph()).is_none());
    }

    #[test]
    fn recursive_uniform() {
        for (r, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
            let m = UniformMatroid::new(UniformSpec::new(r, n).unwrap());
            let bound = uniform_lower(r, n).unwrap().as_u64().unwrap() as usize;
            let (a, b) = m.basis_graph().edges()[0];
            let w = witnesses_recursive(&m, (a, b), &WitnessPolicy::new(bound)).unwrap();
            assert!(w.len() >= bound, "U_{{{r},{n}}}: {} < {bound}", w.len());
        }
    }

    #[test]
    fn recursive_catalan() {
        for k in 2..=3 {
            let m = CatalanMatroid::new(GenCatalan::catalan(k).unwrap());
            let bound = catalan_lower(k).unwrap().as_u64().unwrap() as usize;
            for (a, b) in m.basis_graph().edges() {
                let w = witnesses_recursive(&m, (a, b), &WitnessPolicy::new(bound)).unwrap();
                assert!(w.len() >= bound);
            }
        }
    }

    #[test]
    fn recursive_graphic_k4() {
        let m = GraphicMatroid::new(Multigraph::complete(4).unwrap()).unwrap();
        for (a, b) in m.basis_graph().edges() {
            let w = witnesses_recursive(&m, (a, b), &WitnessPolicy::new(2)).unwrap();
            assert!(w.len() >= 2);
        }
    }

    #[test]
    fn json_round_trip() {
        let m = UniformMatroid::new(UniformSpec::new(2, 4).unwrap());
        let w = witnesses_recursive(&m, (0, 1), &WitnessPolicy::new(5)).unwrap();
        let back = WitnessSet::from_json(m.basis_graph(), &w.to_json()).unwrap();
        assert_eq!(back.cycles.iter().collect::<BTreeSet<_>>(), w.cycles.iter().collect::<BTreeSet<_>>());
        let mut v = w.to_json();
        v["cycles"][0] = json!([0, 1, 2, 3, 4, 5]);
        assert!(WitnessSet::from_json(m.basis_graph(), &v).is_err());
    }
}
