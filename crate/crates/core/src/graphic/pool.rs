//! Exhaustive small multigraph pools, one representative per isomorphism class.

use std::collections::BTreeSet;

use itertools::Itertools;

use super::Multigraph;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

/// Lexicographically least multiplicity vector over all vertex relabelings.
fn canonical(n: usize, mult: &[usize], pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<usize> {
    let mut pos = vec![vec![0; n]; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        pos[a][b] = i;
        pos[b][a] = i;
    }
    let mut best: Option<Vec<usize>> = None;
    let mut out = vec![0; mult.len()];
    for p in perms {
        for (i, &(a, b)) in pairs.iter().enumerate() {
            out[pos[p[a]][p[b]]] = mult[i];
        }
        if best.as_ref().is_none_or(|bst| out < *bst) {
            best = Some(out.clone());
        }
    }
    best.unwrap_or_default()
}

fn for_each_vector(parts: usize, budget: usize, cur: &mut Vec<usize>, out: &mut dyn FnMut(&[usize])) {
    if cur.len() == parts {
        out(cur);
        return;
    }
    for k in 0..=budget {
        cur.push(k);
        for_each_vector(parts, budget - k, cur, out);
        cur.pop();
    }
}

/// Every connected loop-free multigraph with `n` vertices and at most
/// `m_max` edges, up to isomorphism, in a fixed order.
pub fn connected_multigraphs(n: usize, m_max: usize) -> Vec<Multigraph> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Multigraph::new(1, &[]).expect("single vertex")];
    }
    let ps = pairs(n);
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut seen = BTreeSet::new();
    let mut found: Vec<(usize, Vec<usize>)> = Vec::new();
    for_each_vector(ps.len(), m_max, &mut Vec::new(), &mut |mult| {
        let m: usize = mult.iter().sum();
        if m + 1 < n {
            return;
        }
        let c = canonical(n, mult, &ps, &perms);
        if seen.contains(&c) {
            return;
        }
        let g = build(n, &c, &ps);
        if g.is_connected() {
            found.push((m, c.clone()));
        }
        seen.insert(c);
    });
    found.sort();
    found.into_iter().map(|(_, c)| build(n, &c, &ps)).collect()
}

fn build(n: usize, mult: &[usize], ps: &[(usize, usize)]) -> Multigraph {
    let edges: Vec<(usize, usize)> = ps
        .iter()
        .zip(mult)
        .flat_map(|(&p, &k)| std::iter::repeat_n(p, k))
        .collect();
    Multigraph::new(n, &edges).expect("pairs are loop-free")
}

/// An isomorphism invariant that separates non-isomorphic multigraphs: the
/// vertex count and the least multiplicity vector over all relabelings.
pub fn canonical_form(g: &Multigraph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let pairs = pairs(n);
    let mult: Vec<usize> = pairs.iter().map(|&(a, b)| g.multiplicity(a, b)).collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    (n, canonical(n, &mult, &pairs, &perms))
}

/// The union of [`connected_multigraphs`] for `n_min..=n_max`.
pub fn pool(n_min: usize, n_max: usize, m_max: usize) -> Vec<Multigraph> {
    (n_min..=n_max).flat_map(|n| connected_multigraphs(n, m_max)).collect()
}

/// Pool members with edge-connectivity at least `k`.
pub fn k_edge_connected_pool(n_min: usize, n_max: usize, m_max: usize, k: usize) -> Vec<Multigraph> {
    pool(n_min, n_max, m_max)
        .into_iter()
        .filter(|g| g.edge_connectivity() >= k)
        .collect()
}
