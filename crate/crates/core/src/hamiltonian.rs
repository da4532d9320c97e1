//! Counting and enumerating Hamiltonian cycles through a fixed edge.
//!
//! Three engines: a pruned depth-first search that can stop at a cap, an
//! exact subset dynamic program for graphs with at most [`DP_MAX_VERTICES`]
//! vertices, and a memoized search for up to [`MEMO_MAX_VERTICES`] vertices
//! which only visits reachable states. The DP rooted at `u` yields the count
//! for every edge at `u`; the memoized counter shares its table across them.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphic::UnionFind;
use crate::matroid::{BasisGraph, EdgeCycle};

pub const DP_MAX_VERTICES: usize = 20;
pub const MEMO_MAX_VERTICES: usize = 64;
/// Table entries kept by [`RootedCounter`]; states beyond it are recounted.
const MEMO_LIMIT: usize = 1 << 24;
/// Only states with at most this many unvisited vertices are tabled.
const MEMO_DEPTH: u32 = 12;

/// A Hamiltonian cycle count. When `capped` is set the search stopped early
/// and `value` equals the cap, so the true count is at least `value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HcCount {
    pub value: u64,
    pub capped: bool,
}

impl HcCount {
    pub fn exact(value: u64) -> Self {
        HcCount { value, capped: false }
    }

    /// `min(count, cap)` without regard to how it was computed.
    pub fn truncated(&self, cap: u64) -> u64 {
        self.value.min(cap)
    }

    pub fn at_least(&self, bound: u64) -> bool {
        self.value >= bound
    }
}

fn check_edge(adj: &[Vec<usize>], u: usize, v: usize) -> Result<()> {
    let n = adj.len();
    if u >= n {
        return Err(Error::NoSuchVertex(u));
    }
    if v >= n {
        return Err(Error::NoSuchVertex(v));
    }
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if !adj[u].contains(&v) {
        return Err(Error::NotAnEdge(u, v));
    }
    Ok(())
}

struct Search<'a, F: FnMut(&[usize]) -> bool> {
    adj: &'a [Vec<usize>],
    root: usize,
    visited: Vec<bool>,
    // neighbours that are not interior path vertices
    avail: Vec<u32>,
    path: Vec<usize>,
    found: u64,
    stop: bool,
    emit: F,
}

impl<F: FnMut(&[usize]) -> bool> Search<'_, F> {
    fn go(&mut self) {
        let n = self.adj.len();
        let cur = *self.path.last().expect("path starts with two vertices");
        if self.path.len() == n {
            if self.adj[cur].contains(&self.root) {
                self.found += 1;
                if !(self.emit)(&self.path) {
                    self.stop = true;
                }
            }
            return;
        }
        for &z in &self.adj[cur] {
            self.avail[z] -= 1;
        }
        if let Some(cands) = self.candidates(cur) {
            self.visited[cur] = true;
            for next in cands {
                self.visited[next] = true;
                self.path.push(next);
                self.go();
                self.path.pop();
                self.visited[next] = false;
                if self.stop {
                    break;
                }
            }
        }
        for &z in &self.adj[cur] {
            self.avail[z] += 1;
        }
    }

    /// Moves allowed once `cur` is interior, or `None` if the path is dead.
    fn candidates(&self, cur: usize) -> Option<Vec<usize>> {
        if self.avail[self.root] == 0 {
            return None;
        }
        let mut forced = None;
        let mut open = Vec::new();
        for &z in &self.adj[cur] {
            if self.visited[z] {
                continue;
            }
            match self.avail[z] {
                0 => return None,
                1
                    // z can only be entered from cur
                    if forced.replace(z).is_some_and(|f| f != z) => {
                        return None;
                    }
                _ => {}
            }
            open.push(z);
        }
        if let Some(z) = forced {
            return Some(vec![z]);
        }
        open.sort_by_key(|&z| self.avail[z]);
        open.dedup();
        Some(open)
    }
}

fn search<F: FnMut(&[usize]) -> bool>(adj: &[Vec<usize>], u: usize, v: usize, emit: F) -> (u64, bool) {
    let n = adj.len();
    let mut s = Search {
        adj,
        root: u,
        visited: vec![false; n],
        avail: adj.iter().map(|a| a.len() as u32).collect(),
        path: vec![u, v],
        found: 0,
        stop: false,
        emit,
    };
    s.visited[u] = true;
    s.visited[v] = true;
    s.go();
    (s.found, s.stop)
}

/// Depth-first count of Hamiltonian cycles through `u v`, stopping once `cap`
/// cycles are found.
pub fn count_hc_dfs(adj: &[Vec<usize>], u: usize, v: usize, cap: Option<u64>) -> Result<HcCount> {
    check_edge(adj, u, v)?;
    if cap == Some(0) {
        return Ok(HcCount { value: 0, capped: true });
    }
    let mut seen = 0u64;
    let (found, stopped) = search(adj, u, v, |_| {
        seen += 1;
        cap.is_none_or(|c| seen < c)
    });
    Ok(HcCount { value: found, capped: stopped })
}

/// Exact counts of Hamiltonian cycles through every edge `root x`, by dynamic
/// programming over vertex subsets. Counts saturate at `u64::MAX`.
pub fn count_hc_dp_rooted(adj: &[Vec<usize>], root: usize) -> Result<BTreeMap<usize, u64>> {
    let n = adj.len();
    if root >= n {
        return Err(Error::NoSuchVertex(root));
    }
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if n > DP_MAX_VERTICES {
        return Err(Error::ScaleExceeded(format!("subset DP limited to {DP_MAX_VERTICES} vertices, got {n}")));
    }
    let m = n - 1;
    let idx = |x: usize| if x < root { x } else { x - 1 };
    let nbr: Vec<u32> = (0..n)
        .filter(|&x| x != root)
        .map(|x| {
            adj[x]
                .iter()
                .filter(|&&y| y != root)
                .fold(0u32, |acc, &y| acc | 1 << idx(y))
        })
        .collect();
    let full = (1usize << m) - 1;
    let mut dp = vec![0u64; (full + 1) * m];
    for &y in &adj[root] {
        dp[(1 << idx(y)) * m + idx(y)] = 1;
    }
    for mask in 1..=full {
        for x in 0..m {
            let c = dp[mask * m + x];
            if c == 0 {
                continue;
            }
            let mut next = nbr[x] & !(mask as u32);
            while next != 0 {
                let y = next.trailing_zeros() as usize;
                next &= next - 1;
                let slot = &mut dp[(mask | 1 << y) * m + y];
                *slot = slot.saturating_add(c);
            }
        }
    }
    Ok(adj[root]
        .iter()
        .map(|&x| (x, dp[full * m + idx(x)]))
        .collect())
}

/// Counts Hamiltonian cycles through edges `root x`, sharing a table keyed by
/// (current vertex, unvisited set) across calls.
pub struct RootedCounter {
    root: usize,
    nbr: Vec<u64>,
    memo: FxHashMap<(u64, u8), u64>,
    found: u64,
    cap: u64,
}

impl RootedCounter {
    pub fn new(adj: &[Vec<usize>], root: usize) -> Result<Self> {
        let n = adj.len();
        if root >= n {
            return Err(Error::NoSuchVertex(root));
        }
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        if n > MEMO_MAX_VERTICES {
            return Err(Error::ScaleExceeded(format!("memoized search limited to {MEMO_MAX_VERTICES} vertices, got {n}")));
        }
        let nbr = adj.iter().map(|ns| ns.iter().fold(0u64, |acc, &y| acc | 1 << y)).collect();
        Ok(RootedCounter { root, nbr, memo: FxHashMap::default(), found: 0, cap: u64::MAX })
    }

    /// Cycles through `root x`, stopping once `cap` are found.
    pub fn count(&mut self, x: usize, cap: Option<u64>) -> Result<HcCount> {
        let n = self.nbr.len();
        if x >= n {
            return Err(Error::NoSuchVertex(x));
        }
        if self.nbr[self.root] >> x & 1 == 0 {
            return Err(Error::NotAnEdge(self.root, x));
        }
        if cap == Some(0) {
            return Ok(HcCount { value: 0, capped: true });
        }
        self.found = 0;
        self.cap = cap.unwrap_or(u64::MAX);
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let unvisited = all & !(1 << self.root) & !(1 << x);
        match self.paths(x, unvisited) {
            Some(c) if c < self.cap => Ok(HcCount::exact(c)),
            _ => Ok(HcCount { value: self.cap, capped: true }),
        }
    }

    /// Paths from `cur` through all of `unvisited` ending next to the root;
    /// `None` once the cap is reached.
    fn paths(&mut self, cur: usize, unvisited: u64) -> Option<u64> {
        if self.found >= self.cap {
            return None;
        }
        if unvisited == 0 {
            let c = self.nbr[cur] >> self.root & 1;
            self.found += c;
            return Some(c);
        }
        let key = (unvisited, cur as u8);
        let memoize = unvisited.count_ones() <= MEMO_DEPTH;
        if memoize {
            if let Some(&c) = self.memo.get(&key) {
                self.found = self.found.saturating_add(c);
                return Some(c);
            }
        }
        // every unvisited vertex needs two path neighbours among the rest
        let open = unvisited | 1 << cur | 1 << self.root;
        let mut rest = unvisited;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.nbr[w] & open).count_ones() < 2 {
                return Some(0);
            }
        }
        let mut total = 0u64;
        let mut next = self.nbr[cur] & unvisited;
        while next != 0 {
            let y = next.trailing_zeros() as usize;
            next &= next - 1;
            total = total.saturating_add(self.paths(y, unvisited & !(1 << y))?);
        }
        if memoize && self.memo.len() < MEMO_LIMIT {
            self.memo.insert(key, total);
        }
        Some(total)
    }
}

/// Memoized count of Hamiltonian cycles through `u v`, stopping at `cap`.
pub fn count_hc_memo(adj: &[Vec<usize>], u: usize, v: usize, cap: Option<u64>) -> Result<HcCount> {
    check_edge(adj, u, v)?;
    RootedCounter::new(adj, u)?.count(v, cap)
}

pub fn count_hc_dp(adj: &[Vec<usize>], u: usize, v: usize) -> Result<HcCount> {
    check_edge(adj, u, v)?;
    Ok(HcCount::exact(count_hc_dp_rooted(adj, u)?[&v]))
}

/// Hamiltonian cycles through `u v`: exact by DP on small graphs, otherwise by
/// search stopping at `cap`.
pub fn count_hc_through_edge(bg: &BasisGraph, u: usize, v: usize, cap: Option<u64>) -> Result<HcCount> {
    let adj = bg.adjacency();
    match adj.len() {
        n if n <= DP_MAX_VERTICES => count_hc_dp(adj, u, v),
        n if n <= MEMO_MAX_VERTICES => count_hc_memo(adj, u, v, cap),
        _ => count_hc_dfs(adj, u, v, cap),
    }
}

/// Up to `limit` Hamiltonian cycles through `u v`, each as a vertex order
/// starting `u, v`.
pub fn enumerate_hc_through_edge(adj: &[Vec<usize>], u: usize, v: usize, limit: Option<usize>) -> Result<Vec<Vec<usize>>> {
    check_edge(adj, u, v)?;
    let mut out = Vec::new();
    if limit == Some(0) {
        return Ok(out);
    }
    search(adj, u, v, |p| {
        out.push(p.to_vec());
        limit.is_none_or(|l| out.len() < l)
    });
    Ok(out)
}

pub fn enumerate_hc_cycles(adj: &[Vec<usize>], u: usize, v: usize, limit: Option<usize>) -> Result<Vec<EdgeCycle>> {
    Ok(enumerate_hc_through_edge(adj, u, v, limit)?
        .iter()
        .map(|p| EdgeCycle::from_vertex_order(p))
        .collect())
}

/// Generators of a group of basis-graph automorphisms, each checked on
/// construction.
#[derive(Clone, Debug)]
pub struct SymmetryCertificate {
    generators: Vec<Vec<usize>>,
}

impl SymmetryCertificate {
    pub fn new(bg: &BasisGraph, generators: Vec<Vec<usize>>) -> Result<Self> {
        let n = bg.vertex_count();
        for (i, p) in generators.iter().enumerate() {
            let mut hit = vec![false; n];
            if p.len() != n || p.iter().any(|&x| x >= n || std::mem::replace(&mut hit[x], true)) {
                return Err(Error::NotAutomorphism(format!("generator {i} is not a permutation")));
            }
            if let Some((a, b)) = bg.edges().into_iter().find(|&(a, b)| !bg.has_edge(p[a], p[b])) {
                return Err(Error::NotAutomorphism(format!("generator {i} breaks edge ({a},{b})")));
            }
        }
        Ok(SymmetryCertificate { generators })
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// One representative edge per orbit, with the orbit sizes.
    pub fn edge_orbits(&self, bg: &BasisGraph) -> Vec<((usize, usize), usize)> {
        let edges = bg.edges();
        let pos: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut uf = UnionFind::new(edges.len());
        for p in &self.generators {
            for (i, &(a, b)) in edges.iter().enumerate() {
                let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                uf.union(i, pos[&(x, y)]);
            }
        }
        let mut orbits: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for i in 0..edges.len() {
            let o = orbits.entry(uf.find(i)).or_insert((i, 0));
            o.1 += 1;
        }
        let mut reps: Vec<_> = orbits.values().map(|&(i, size)| (edges[i], size)).collect();
        reps.sort();
        reps
    }
}

/// Automorphisms of a basis graph induced by permutations of the ground set.
pub fn induced_symmetry(bg: &BasisGraph, element_perms: &[Vec<usize>]) -> Result<SymmetryCertificate> {
    let fam = bg.family();
    let mut gens = Vec::new();
    for (i, perm) in element_perms.iter().enumerate() {
        let mut img = Vec::with_capacity(fam.len());
        for b in fam.bases() {
            let mapped = crate::matroid::Basis::new(b.elements().iter().map(|&x| perm[x]).collect())?;
            match fam.index_of(&mapped) {
                Some(j) => img.push(j),
                None => return Err(Error::NotAutomorphism(format!("element permutation {i} does not preserve bases"))),
            }
        }
        gens.push(img);
    }
    SymmetryCertificate::new(bg, gens)
}

/// Groups edges by a greedy vertex cover so that one rooted DP serves each
/// group; the count through an edge does not depend on which end is the root.
fn root_cover(edges: &[(usize, usize)]) -> BTreeMap<usize, Vec<usize>> {
    let mut left: Vec<(usize, usize)> = edges.to_vec();
    let mut out = BTreeMap::new();
    while !left.is_empty() {
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        for &(a, b) in &left {
            *deg.entry(a).or_default() += 1;
            *deg.entry(b).or_default() += 1;
        }
        let (&root, _) = deg.iter().max_by_key(|&(v, d)| (*d, std::cmp::Reverse(*v))).unwrap();
        let (hit, rest): (Vec<_>, Vec<_>) = left.into_iter().partition(|&(a, b)| a == root || b == root);
        out.insert(root, hit.into_iter().map(|(a, b)| if a == root { b } else { a }).collect::<Vec<_>>());
        left = rest;
    }
    out
}

/// A later edge only has to be counted up to the smallest exact count so far.
fn tighter(cap: Option<u64>, best: Option<HcCount>) -> Option<u64> {
    match best {
        Some(b) if !b.capped => Some(cap.map_or(b.value, |c| c.min(b.value))),
        _ => cap,
    }
}

/// `HC*`: the minimum over edges of the Hamiltonian cycle count through that
/// edge. With a certificate, only one edge per orbit is counted. With a cap,
/// the result is `min(HC*, cap)` and is marked capped when every counted edge
/// reached the cap.
pub fn hc_star(bg: &BasisGraph, cap: Option<u64>, symmetry: Option<&SymmetryCertificate>) -> Result<HcCount> {
    let n = bg.vertex_count();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let reps: Vec<(usize, usize)> = match symmetry {
        Some(s) => s.edge_orbits(bg).into_iter().map(|(e, _)| e).collect(),
        None => bg.edges(),
    };
    if reps.is_empty() {
        return Err(Error::NotAnEdge(0, 0));
    }
    let adj = bg.adjacency();
    let mut best: Option<HcCount> = None;
    let improve = |best: &mut Option<HcCount>, c: HcCount| {
        if best.is_none_or(|b| c.value < b.value || (c.value == b.value && !c.capped)) {
            *best = Some(c);
        }
    };
    if n <= DP_MAX_VERTICES {
        let by_root = root_cover(&reps);
        for (root, others) in by_root {
            let counts = count_hc_dp_rooted(adj, root)?;
            for b in others {
                improve(&mut best, HcCount::exact(counts[&b]));
            }
        }
    } else if n <= MEMO_MAX_VERTICES {
        'roots: for (root, others) in root_cover(&reps) {
            let mut counter = RootedCounter::new(adj, root)?;
            for b in others {
                let c = counter.count(b, tighter(cap, best))?;
                improve(&mut best, c);
                if c.value == 0 {
                    break 'roots;
                }
            }
        }
    } else {
        for &(a, b) in &reps {
            let c = count_hc_dfs(adj, a, b, tighter(cap, best))?;
            improve(&mut best, c);
            if c.value == 0 {
                break;
            }
        }
    }
    Ok(best.expect("at least one edge"))
}

/// Per-edge counts for every edge, exact by DP or capped by search.
pub fn hc_per_edge(bg: &BasisGraph, cap: Option<u64>) -> Result<Vec<((usize, usize), HcCount)>> {
    let n = bg.vertex_count();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let adj = bg.adjacency();
    let mut out = Vec::new();
    if n <= DP_MAX_VERTICES {
        let mut cache: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        for (a, b) in bg.edges() {
            let counts = match cache.get(&a) {
                Some(c) => c,
                None => cache.entry(a).or_insert(count_hc_dp_rooted(adj, a)?),
            };
            out.push(((a, b), HcCount::exact(counts[&b])));
        }
    } else if n <= MEMO_MAX_VERTICES {
        let mut counters: BTreeMap<usize, RootedCounter> = BTreeMap::new();
        for (a, b) in bg.edges() {
            let counter = match counters.entry(a) {
                std::collections::btree_map::Entry::Occupied(o) => o.into_mut(),
                std::collections::btree_map::Entry::Vacant(slot) => slot.insert(RootedCounter::new(adj, a)?),
            };
            out.push(((a, b), counter.count(b, cap)?));
        }
    } else {
        for (a, b) in bg.edges() {
            out.push(((a, b), count_hc_dfs(adj, a, b, cap)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::all_hamiltonian_cycles_through;

    fn complete(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).filter(|&j| j != i).collect()).collect()
    }

    fn petersen() -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); 10];
        let mut add = |a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for i in 0..5 {
            add(i, (i + 1) % 5);
            add(i, i + 5);
            add(i + 5, (i + 2) % 5 + 5);
        }
        adj
    }

    #[test]
    fn complete_graph_counts() {
        // (n-2)! cycles through an edge of K_n
        let fact = [1u64, 1, 2, 6, 24, 120, 720];
        for n in 3..=8 {
            let adj = complete(n);
            assert_eq!(count_hc_dfs(&adj, 0, 1, None).unwrap().value, fact[n - 2]);
            assert_eq!(count_hc_dp(&adj, 0, 1).unwrap().value, fact[n - 2]);
        }
    }

    #[test]
    fn petersen_has_none() {
        let adj = petersen();
        assert_eq!(count_hc_dfs(&adj, 0, 1, None).unwrap(), HcCount::exact(0));
        assert_eq!(count_hc_dp(&adj, 0, 1).unwrap().value, 0);
    }

    #[test]
    fn engines_agree_with_plain_search() {
        let adj = vec![
            vec![1, 2, 3, 5],
            vec![0, 2, 4],
            vec![0, 1, 3, 4, 5],
            vec![0, 2, 4],
            vec![1, 2, 3, 5],
            vec![0, 2, 4],
        ];
        for u in 0..6 {
            for &v in &adj[u] {
                let plain = all_hamiltonian_cycles_through(&adj, u, v).len() as u64;
                assert_eq!(count_hc_dfs(&adj, u, v, None).unwrap().value, plain);
                assert_eq!(count_hc_dp(&adj, u, v).unwrap().value, plain);
                assert_eq!(count_hc_memo(&adj, u, v, None).unwrap(), HcCount::exact(plain));
                let listed = enumerate_hc_cycles(&adj, u, v, None).unwrap();
                assert_eq!(listed.len() as u64, plain);
                assert!(listed.iter().all(|c| c.is_hamiltonian(&adj) && c.contains_edge(u, v)));
            }
        }
    }

    #[test]
    fn cap_stops_early() {
        let adj = complete(7);
        let c = count_hc_dfs(&adj, 0, 1, Some(10)).unwrap();
        assert_eq!(c, HcCount { value: 10, capped: true });
        let c = count_hc_dfs(&adj, 0, 1, Some(1000)).unwrap();
        assert_eq!(c, HcCount::exact(120));
        assert_eq!(enumerate_hc_through_edge(&adj, 0, 1, Some(3)).unwrap().len(), 3);
        assert_eq!(count_hc_memo(&adj, 0, 1, Some(10)).unwrap(), HcCount { value: 10, capped: true });
        assert_eq!(count_hc_memo(&adj, 0, 1, Some(121)).unwrap(), HcCount::exact(120));
        assert_eq!(count_hc_memo(&adj, 0, 1, Some(120)).unwrap(), HcCount { value: 120, capped: true });
    }

    #[test]
    fn memo_shares_table_across_edges() {
        let adj = complete(9);
        let mut counter = RootedCounter::new(&adj, 0).unwrap();
        for x in 1..9 {
            assert_eq!(counter.count(x, Some(100)).unwrap(), HcCount { value: 100, capped: true });
            assert_eq!(counter.count(x, None).unwrap(), HcCount::exact(5040));
        }
        let big = complete(30);
        let c = count_hc_memo(&big, 0, 1, Some(1 << 40)).unwrap();
        assert_eq!(c, HcCount { value: 1 << 40, capped: true });
        assert_eq!(count_hc_memo(&petersen(), 0, 1, None).unwrap(), HcCount::exact(0));
    }

    #[test]
    fn rejects_bad_input() {
        let adj = complete(2);
        assert_eq!(count_hc_dfs(&adj, 0, 1, None), Err(Error::TooSmall(2)));
        let adj = petersen();
        assert_eq!(count_hc_dfs(&adj, 0, 2, None), Err(Error::NotAnEdge(0, 2)));
        assert!(matches!(count_hc_dp_rooted(&complete(21), 0), Err(Error::ScaleExceeded(_))));
    }
}
