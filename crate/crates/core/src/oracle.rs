//! Independent brute-force references used to cross-check the fast paths.

use itertools::Itertools;

use crate::graphic::Multigraph;
use crate::matroid::{Basis, BasisFamily, Element};

/// Number of spanning trees by the matrix-tree theorem (Bareiss elimination on
/// a reduced Laplacian).
pub fn kirchhoff_tree_count(g: &Multigraph) -> i128 {
    let n = g.vertex_count();
    if n <= 1 {
        return 1;
    }
    let mut lap = vec![vec![0i128; n]; n];
    for e in g.edges() {
        lap[e.u][e.u] += 1;
        lap[e.v][e.v] += 1;
        lap[e.u][e.v] -= 1;
        lap[e.v][e.u] -= 1;
    }
    let mut a: Vec<Vec<i128>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
    let k = n - 1;
    let mut sign = 1i128;
    let mut prev = 1i128;
    for i in 0..k {
        if a[i][i] == 0 {
            match (i + 1..k).find(|&r| a[r][i] != 0) {
                Some(r) => {
                    a.swap(i, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            }
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    sign * a[k - 1][k - 1]
}

/// Global minimum edge cut by trying every vertex bipartition.
pub fn edge_connectivity_bruteforce(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    let mut best = usize::MAX;
    // vertex 0 is fixed on one side
    for mask in 1u64..(1u64 << (n - 1)) {
        let side = |v: usize| v != 0 && (mask >> (v - 1)) & 1 == 1;
        let cut = g.edges().iter().filter(|e| side(e.u) != side(e.v)).count();
        best = best.min(cut);
    }
    best
}

/// Bases of the transversal matroid of `sets`: the `r`-subsets that admit a
/// system of distinct representatives, found by bipartite matching.
pub fn transversal_bases(ground_size: usize, sets: &[Vec<Element>]) -> Vec<Basis> {
    let r = sets.len();
    (0..ground_size)
        .combinations(r)
        .filter(|cand| perfect_matching(cand, sets))
        .map(|c| Basis::new(c).expect("combination has distinct elements"))
        .collect()
}

fn perfect_matching(elements: &[Element], sets: &[Vec<Element>]) -> bool {
    let mut owner: Vec<Option<usize>> = vec![None; elements.len()];
    fn augment(
        i: usize,
        elements: &[Element],
        sets: &[Vec<Element>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for (j, x) in elements.iter().enumerate() {
            if seen[j] || !sets[i].contains(x) {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|o| augment(o, elements, sets, seen, owner)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    (0..sets.len()).all(|i| augment(i, elements, sets, &mut vec![false; elements.len()], &mut owner))
}

pub fn transversal_family(ground_size: usize, sets: &[Vec<Element>]) -> Option<BasisFamily> {
    BasisFamily::new(ground_size, sets.len(), transversal_bases(ground_size, sets)).ok()
}

/// Every Hamiltonian cycle through `u v`, by plain exhaustive search with no
/// pruning. Only for tiny graphs.
pub fn all_hamiltonian_cycles_through(adj: &[Vec<usize>], u: usize, v: usize) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut path = vec![u, v];
    let mut used = vec![false; n];
    used[u] = true;
    used[v] = true;
    fn go(adj: &[Vec<usize>], path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = adj.len();
        let last = *path.last().expect("nonempty");
        if path.len() == n {
            if adj[last].contains(&path[0]) {
                out.push(path.clone());
            }
            return;
        }
        for &x in &adj[last] {
            if !used[x] {
                used[x] = true;
                path.push(x);
                go(adj, path, used, out);
                path.pop();
                used[x] = false;
            }
        }
    }
    if n >= 3 && adj[u].contains(&v) {
        go(adj, &mut path, &mut used, &mut out);
    }
    out
}
