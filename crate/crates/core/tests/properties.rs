use std::collections::BTreeSet;

use proptest::prelude::*;

use basis_hc::bounds::{bound_2conn, hc_closed_form, hc_recurrence};
use basis_hc::graphic::{good_cycles_graphic, GraphicMatroid, Multigraph};
use basis_hc::hamiltonian::{count_hc_dfs, count_hc_dp, count_hc_dp_rooted, count_hc_memo, hc_per_edge, HcCount};
use basis_hc::latticepath::{CatalanMatroid, GenCatalan, Step, StepWord};
use basis_hc::oracle::{all_hamiltonian_cycles_through, kirchhoff_tree_count, transversal_bases};
use basis_hc::uniform::{good_cycles_uniform, uniform_bases, UniformSpec};
use basis_hc::witness::{witnesses_recursive, WitnessPolicy, WitnessSet};
use basis_hc::{good_cycles_bruteforce, split_by_element, BasisGraph};

fn multigraph(n_max: usize, m_max: usize) -> impl Strategy<Value = Multigraph> {
    (2..=n_max).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 1..=m_max).prop_filter_map("connected, loop-free", move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(a, b)| a != b).collect();
            let g = Multigraph::new(n, &edges).ok()?;
            g.is_connected().then_some(g)
        })
    })
}

fn simple_graph(n_min: usize, n_max: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    (n_min..=n_max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.6), n * (n - 1) / 2).prop_map(move |bits| {
            let mut adj = vec![Vec::new(); n];
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        adj[a].push(b);
                        adj[b].push(a);
                    }
                    k += 1;
                }
            }
            adj
        })
    })
}

fn word(len_min: usize, len_max: usize) -> impl Strategy<Value = GenCatalan> {
    proptest::collection::vec(any::<bool>(), len_min..=len_max)
        .prop_map(|bits| GenCatalan::new(StepWord::new(bits.into_iter().map(|b| if b { Step::N } else { Step::E }).collect())))
}

fn graphic_bg(g: &Multigraph) -> BasisGraph {
    GraphicMatroid::new(g.clone()).unwrap().basis_graph().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spanning_trees_match_matrix_tree(g in multigraph(5, 8)) {
        let trees = g.enumerate_spanning_trees().unwrap();
        prop_assert_eq!(trees.len() as i128, kirchhoff_tree_count(&g));
        prop_assert!(trees.satisfies_basis_axiom());
    }

    #[test]
    fn dual_is_an_involution(g in multigraph(5, 7)) {
        let trees = g.enumerate_spanning_trees().unwrap();
        let dual = trees.dual();
        prop_assert!(dual.satisfies_basis_axiom());
        prop_assert_eq!(dual.dual(), trees);
    }

    #[test]
    fn basis_graph_edges_are_single_exchanges(g in multigraph(4, 7)) {
        let bg = graphic_bg(&g);
        let vs = bg.vertices();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                prop_assert_eq!(bg.has_edge(a, b), vs[a].symmetric_difference_len(&vs[b]) == 2);
            }
        }
    }

    #[test]
    fn counting_engines_agree(adj in simple_graph(3, 9)) {
        for u in 0..adj.len() {
            for &v in &adj[u] {
                let truth = all_hamiltonian_cycles_through(&adj, u, v).len() as u64;
                prop_assert_eq!(count_hc_dfs(&adj, u, v, None).unwrap(), HcCount::exact(truth));
                prop_assert_eq!(count_hc_dp(&adj, u, v).unwrap(), HcCount::exact(truth));
                prop_assert_eq!(count_hc_memo(&adj, u, v, None).unwrap(), HcCount::exact(truth));
                // the count does not depend on orientation
                prop_assert_eq!(count_hc_dp(&adj, v, u).unwrap(), HcCount::exact(truth));
            }
        }
    }

    #[test]
    fn capped_counts_are_truncations(adj in simple_graph(4, 9), cap in 1u64..40) {
        for u in 0..adj.len() {
            for &v in &adj[u] {
                let exact = count_hc_dp(&adj, u, v).unwrap().value;
                for c in [count_hc_dfs(&adj, u, v, Some(cap)).unwrap(), count_hc_memo(&adj, u, v, Some(cap)).unwrap()] {
                    prop_assert_eq!(c.value, exact.min(cap));
                    prop_assert_eq!(c.capped, exact >= cap);
                }
            }
        }
    }

    #[test]
    fn edge_counts_sum_to_cycles_times_length(adj in simple_graph(3, 10)) {
        let n = adj.len() as u64;
        let mut sum = 0u64;
        for u in 0..adj.len() {
            for (v, c) in count_hc_dp_rooted(&adj, u).unwrap() {
                if u < v {
                    sum += c;
                }
            }
        }
        // every cycle passes through vertex 0 on exactly two of its edges
        let through_zero: u64 = count_hc_dp_rooted(&adj, 0).unwrap().values().sum();
        prop_assert_eq!(through_zero % 2, 0);
        prop_assert_eq!(sum, n * (through_zero / 2));
    }

    #[test]
    fn graphic_templates_are_good_cycles(g in multigraph(5, 7)) {
        let bg = graphic_bg(&g);
        for (a, b) in bg.edges() {
            for (x, y) in [(a, b), (b, a)] {
                let brute: BTreeSet<_> = good_cycles_bruteforce(&bg, x, y).unwrap().into_iter().map(|c| c.key()).collect();
                for c in good_cycles_graphic(&g, &bg, x, y).unwrap() {
                    prop_assert!(c.validate(&bg).is_ok());
                    prop_assert!(brute.contains(&c.key()));
                }
            }
        }
    }

    #[test]
    fn witnesses_are_distinct_hamiltonian_cycles(g in multigraph(5, 7), target in 1usize..12) {
        let bg = graphic_bg(&g);
        prop_assume!(g.vertex_count() >= 3 && bg.vertex_count() >= 3 && g.edge_connectivity() >= 2);
        let bound = u64::try_from(bound_2conn(g.vertex_count()).unwrap()).unwrap() as usize;
        for edge in bg.edges() {
            let w = witnesses_recursive(&GraphicMatroid::new(g.clone()).unwrap(), edge, &WitnessPolicy::new(target)).unwrap();
            prop_assert!(w.validate(&bg).is_ok());
            prop_assert!(w.len() >= target.min(bound));
            let at_most = count_hc_memo(bg.adjacency(), edge.0, edge.1, Some(w.len() as u64)).unwrap();
            prop_assert_eq!(at_most.value, w.len() as u64);
            let back = WitnessSet::from_json(&bg, &w.to_json()).unwrap();
            prop_assert_eq!(back.cycles, w.cycles);
        }
    }

    #[test]
    fn lattice_path_bases_match_transversal_oracle(m in word(1, 9)) {
        let fam = m.bases();
        let lpm = m.lpm();
        prop_assert_eq!(lpm.path_counts().0, fam.len() as u128);
        let sets: Vec<Vec<usize>> = lpm.standard_presentation().iter().map(|&(a, b)| (a..=b).collect()).collect();
        let oracle: BTreeSet<_> = transversal_bases(m.len(), &sets).into_iter().collect();
        let ours: BTreeSet<_> = fam.bases().iter().cloned().collect();
        prop_assert_eq!(oracle, ours);
        prop_assert!(fam.satisfies_basis_axiom());
    }

    #[test]
    fn lattice_path_minors_match_split(m in word(2, 8)) {
        let parent = m.bases();
        let lpm = m.lpm();
        for e in 0..m.len() {
            // loops and isthmuses have no split
            let Ok(split) = split_by_element(&parent, e) else { continue };
            let (d, map) = lpm.delete_element(e).unwrap();
            prop_assert_eq!(d.enumerate_bases().relabel(parent.ground_size(), |j| map[j]).unwrap(), split.delete.clone());
            let (c, map) = lpm.contract_element(e).unwrap();
            prop_assert_eq!(c.enumerate_bases().relabel(parent.ground_size(), |j| map[j]).unwrap(), split.contract.clone());
        }
    }

    #[test]
    fn dualizing_a_word_twice_is_the_identity(m in word(1, 10)) {
        let twice = m.dualize().dualize();
        prop_assert_eq!(twice.q(), m.q());
        prop_assert_eq!(m.dualize().bases().len(), m.bases().len());
    }

    #[test]
    fn gencat_templates_meet_the_bound(m in word(4, 9)) {
        prop_assume!(m.is_simple_form() && m.lpm().path_counts().0 <= 60);
        let need = m.rank().min(m.corank()).saturating_sub(1);
        let cm = CatalanMatroid::new(m);
        let bg = cm.basis_graph();
        for (a, b) in bg.edges() {
            let t = cm.good_cycles(a, b).unwrap();
            prop_assert!(t.len() >= need);
            for c in &t {
                prop_assert!(good_cycles_bruteforce(bg, c.b1, c.b2).unwrap().contains(c));
            }
        }
    }

    #[test]
    fn closed_form_matches_recurrence(n in 4usize..10, k in 4usize..10) {
        prop_assert_eq!(hc_closed_form(n, k).unwrap(), hc_recurrence(n, k).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn uniform_templates_meet_the_bound(r in 1usize..4, extra in 1usize..4) {
        let spec = UniformSpec::new(r, r + extra).unwrap();
        let bg = BasisGraph::build(uniform_bases(spec));
        for (a, b) in bg.edges() {
            let t = good_cycles_uniform(spec, &bg, a, b).unwrap();
            prop_assert!(t.len() >= spec.good_cycle_bound());
            let brute = good_cycles_bruteforce(&bg, a, b).unwrap();
            prop_assert!(t.iter().all(|c| brute.contains(c)));
        }
    }

    #[test]
    fn per_edge_counts_are_symmetric_under_relabeling(adj in simple_graph(4, 8), seed in any::<u64>()) {
        let n = adj.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut image = vec![Vec::new(); n];
        for (a, ns) in adj.iter().enumerate() {
            image[perm[a]] = ns.iter().map(|&b| perm[b]).collect();
        }
        for a in 0..n {
            for &b in &adj[a] {
                prop_assert_eq!(count_hc_dp(&adj, a, b).unwrap(), count_hc_dp(&image, perm[a], perm[b]).unwrap());
            }
        }
    }
}

#[test]
fn per_edge_sums_on_named_graphs() {
    // K_4: 3 cycles of length 4; octahedron: 16 cycles of length 6
    let k4 = GraphicMatroid::new(Multigraph::cycle(4).unwrap()).unwrap();
    let octa = BasisGraph::build(uniform_bases(UniformSpec::new(2, 4).unwrap()));
    for (bg, cycles) in [(k4.basis_graph().clone(), 3u64), (octa, 16)] {
        let sum: u64 = hc_per_edge(&bg, None).unwrap().iter().map(|(_, c)| c.value).sum();
        assert_eq!(sum, cycles * bg.vertex_count() as u64);
    }
}
