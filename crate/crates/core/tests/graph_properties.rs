mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rayon::prelude::*;

use hyperstrata::graph::{Graph, NumberedGraph};
use hyperstrata::pushforward::{admissible_cover_graph, pushforward};
use hyperstrata::strata::{annotate, enumerate_trees, factorial, stratum_classes};

/// Connected graph description: a spanning tree on `k` vertices, extra edges
/// (loops allowed) and leaves, with at most `max_flags` flags.
#[derive(Debug, Clone)]
struct Shape {
    parents: Vec<usize>,
    extra: Vec<(usize, usize)>,
    leaves: Vec<usize>,
    genus: Vec<u32>,
}

fn shape(max_flags: usize) -> impl Strategy<Value = Shape> {
    (1usize..=4).prop_flat_map(move |k| {
        let tree_flags = 2 * (k - 1);
        let room = max_flags - tree_flags;
        (
            (0..k - 1).map(|i| 0..=i).collect::<Vec<_>>(),
            prop::collection::vec((0..k, 0..k), 0..=room / 2),
            prop::collection::vec(0..k, 0..=room),
            prop::collection::vec(0u32..3, k),
        )
            .prop_map(move |(parents, extra, leaves, genus)| {
                let mut s = Shape { parents, extra, leaves, genus };
                while 2 * (k - 1) + 2 * s.extra.len() + s.leaves.len() > max_flags {
                    if s.leaves.pop().is_none() {
                        s.extra.pop();
                    }
                }
                if k == 1 && s.extra.is_empty() && s.leaves.is_empty() {
                    s.leaves.push(0);
                }
                s
            })
    })
}

fn build(s: &Shape) -> Graph {
    let mut vertices = vec![Vec::new(); s.genus.len()];
    let mut edges = Vec::new();
    let mut next = 0;
    let mut edge = |a: usize, b: usize, vertices: &mut Vec<Vec<usize>>, next: &mut usize| {
        vertices[a].push(*next);
        vertices[b].push(*next + 1);
        edges.push((*next, *next + 1));
        *next += 2;
    };
    for (i, &p) in s.parents.iter().enumerate() {
        edge(i + 1, p, &mut vertices, &mut next);
    }
    for &(a, b) in &s.extra {
        edge(a, b, &mut vertices, &mut next);
    }
    for &v in &s.leaves {
        vertices[v].push(next);
        next += 1;
    }
    Graph::new(vertices, s.genus.clone(), &edges).expect("shape builds a connected graph")
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn relabelled(s: Shape) -> impl Strategy<Value = (Graph, Vec<usize>, Vec<usize>)> {
    let g = build(&s);
    (perm(g.flag_count()), perm(g.vertex_count())).prop_map(move |(f, v)| (g.clone(), f, v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_ignores_labels((g, fp, vp) in shape(8).prop_flat_map(relabelled)) {
        let h = g.permuted(&fp, &vp);
        prop_assert_eq!(h.canonical_form(), g.canonical_form());
        prop_assert_eq!(h.automorphism_count(), g.automorphism_count());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn contraction_preserves_genus(s in shape(12)) {
        let g = build(&s);
        prop_assume!(g.is_stable() && g.edge_count() <= 4);
        let genus = g.genus().unwrap();
        let edges = g.edges();
        for mask in 0u32..(1 << edges.len()) {
            let chosen: Vec<usize> = edges.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, e)| e.0).collect();
            let c = g.contract_edges(&chosen).unwrap();
            prop_assert_eq!(c.genus().unwrap(), genus);
            prop_assert_eq!(c.leaf_count(), g.leaf_count());
            prop_assert_eq!(c.edge_count(), g.edge_count() - chosen.len());
            prop_assert!(g.leq(&c).unwrap());
        }
    }

    #[test]
    fn stabilization(s in shape(10)) {
        let g = build(&s);
        if let Ok(st) = g.stabilize() {
            prop_assert!(st.is_stable());
            prop_assert_eq!(st.genus().unwrap(), g.genus().unwrap());
            prop_assert_eq!(st.leaf_count(), g.leaf_count());
            prop_assert_eq!(st.stabilize().unwrap().canonical_form(), st.canonical_form());
            let numbered = NumberedGraph::in_flag_order(g.clone());
            let ns = numbered.stabilize().unwrap();
            let before: BTreeSet<u32> = numbered.numbering().iter().map(|p| p.1).collect();
            let after: BTreeSet<u32> = ns.numbering().iter().map(|p| p.1).collect();
            prop_assert_eq!(before, after);
        } else {
            let (h, n) = (g.genus().unwrap(), g.leaf_count());
            prop_assert!(2 * h as usize + n < 3, "type ({h},{n}) should stabilize");
        }
    }

    #[test]
    fn renumbering_moves_within_an_orbit(n in 4usize..=7, pick in any::<prop::sample::Index>(), p in perm(7)) {
        let trees = enumerate_trees(n, None).unwrap();
        let t = &trees[pick.index(trees.len())];
        let relabel: Vec<u32> = p.iter().filter(|&&i| i < n).map(|&i| i as u32 + 1).collect();
        let u = t.renumbered(&relabel);
        prop_assert_eq!(u.graph().canonical_form(), t.graph().canonical_form());
        let key = u.canonical_form();
        prop_assert!(trees.iter().any(|x| x.canonical_form() == key));
    }
}

#[test]
fn enumerated_trees_are_trees() {
    for n in 3..=8 {
        for t in enumerate_trees(n, None).unwrap() {
            let g = t.graph();
            assert_eq!(g.betti1().unwrap(), 0);
            assert!(g.is_stable() && g.is_tree());
            assert_eq!(g.leaf_count(), n);
        }
    }
}

#[test]
fn splitting_generator_agrees_by_edge_count() {
    for n in 3..=7 {
        let lib = common::library_trees(n);
        let split = common::trees_by_splitting(n);
        for e in 0..=n - 3 {
            assert_eq!(lib.get(&e), split.get(&e), "n = {n}, {e} edges");
        }
        assert_eq!(lib.len(), n - 2);
    }
}

/// Leaf numbers on the `h` side of the edge `(f, h)`.
fn side(t: &NumberedGraph, f: usize, h: usize) -> BTreeSet<u32> {
    let g = t.graph();
    let mut seen = vec![false; g.vertex_count()];
    seen[g.vertex_of(f)] = true;
    seen[g.vertex_of(h)] = true;
    let mut stack = vec![g.vertex_of(h)];
    let mut out = BTreeSet::new();
    while let Some(v) = stack.pop() {
        for &x in g.vertex_flags(v) {
            if let Some(k) = t.number(x) {
                out.insert(k);
            } else if x != h {
                let w = g.vertex_of(g.sigma(x));
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    out
}

/// Leaf bipartitions of a numbered tree, each given by the side without leaf 1.
fn splits(t: &NumberedGraph) -> BTreeSet<BTreeSet<u32>> {
    t.graph()
        .edges()
        .into_iter()
        .map(|(f, h)| {
            let s = side(t, f, h);
            if s.contains(&1) {
                side(t, h, f)
            } else {
                s
            }
        })
        .collect()
}

#[test]
fn leq_on_six_leaves() {
    let trees = enumerate_trees(6, None).unwrap();
    assert_eq!(trees.len(), 236);
    let cuts: Vec<_> = trees.iter().map(splits).collect();
    let rel: Vec<Vec<bool>> = trees
        .par_iter()
        .map(|a| trees.iter().map(|b| a.leq(b).unwrap()).collect())
        .collect();
    for i in 0..trees.len() {
        assert!(rel[i][i]);
        for j in 0..trees.len() {
            // contracting edges forgets splits
            assert_eq!(rel[i][j], cuts[j].is_subset(&cuts[i]), "{i} <= {j}");
            if rel[i][j] {
                for k in 0..trees.len() {
                    if rel[j][k] {
                        assert!(rel[i][k]);
                    }
                }
            }
        }
    }
}

#[test]
fn annotation_invariants() {
    for n in [4, 6, 8] {
        for t in enumerate_trees(n, None).unwrap() {
            let a = annotate(&t).unwrap();
            let g = a.graph();
            let rho_sum: usize = a.rhos().iter().sum();
            assert_eq!(rho_sum, n + 2 * a.odd_edge_count());
            assert!(a.rhos().iter().all(|r| r % 2 == 0));
            for (f, h) in g.edges() {
                let (x, y) = (side(&t, f, h).len(), side(&t, h, f).len());
                assert_eq!(x + y, n);
                assert_eq!(x % 2, y % 2);
                assert_eq!(a.is_odd(f), x % 2 == 1);
                assert_eq!(a.is_odd(h), a.is_odd(f));
            }
        }
    }
    for n in [3, 5, 7] {
        let t = &enumerate_trees(n, Some(0)).unwrap()[0];
        assert!(annotate(t).is_err());
    }
}

#[test]
fn orbit_sizes_divide_factorial() {
    for n in 3..=10 {
        let classes = stratum_classes(n, None).unwrap();
        for c in &classes {
            assert_eq!(factorial(n) % c.orbit_size as u128, 0);
        }
    }
}

#[test]
fn pushforward_structure() {
    for g in 2..=4u32 {
        for c in stratum_classes(2 * g as usize + 2, None).unwrap() {
            let t = c.annotated().unwrap();
            let cover = admissible_cover_graph(&t);
            for v in 0..t.graph().vertex_count() {
                if t.rho(v) > 0 {
                    let w = cover.cover_of[v][0];
                    assert_eq!(cover.graph.genus_label(w) as usize, (t.rho(v) - 2) / 2);
                } else {
                    assert_eq!(cover.cover_of[v].len(), 2);
                }
            }
            let spliced = (0..cover.graph.vertex_count())
                .filter(|&w| cover.graph.genus_label(w) == 0 && cover.graph.vertex_flags(w).len() == 2)
                .count();
            let p = pushforward(&t).unwrap();
            assert!(p.is_stable());
            assert_eq!(p.edge_count(), t.odd_edge_count() + 2 * t.even_edge_count() - spliced);
            assert!(p.edge_count() >= c.edge_count);
        }
    }
}
