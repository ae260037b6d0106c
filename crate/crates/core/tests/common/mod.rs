#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use hyperstrata::canon::CanonicalForm;
use hyperstrata::graph::{Graph, NumberedGraph};

/// Numbered genus-0 trees with `n` leaves, grown from the numbered corolla by
/// splitting vertices, deduplicated by canonical form. Keyed by edge count.
pub fn trees_by_splitting(n: usize) -> HashMap<usize, BTreeSet<CanonicalForm>> {
    let corolla = Graph::corolla(0, n);
    let numbering: Vec<(usize, u32)> = (0..n).map(|f| (f, f as u32 + 1)).collect();
    let root = NumberedGraph::new(corolla, &numbering).expect("corolla numbering");
    let mut out = HashMap::new();
    let mut level = vec![root];
    let mut edges = 0;
    while !level.is_empty() {
        out.insert(edges, level.iter().map(NumberedGraph::canonical_form).collect());
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for s in splits(t) {
                if seen.insert(s.canonical_form()) {
                    next.push(s);
                }
            }
        }
        level = next;
        edges += 1;
    }
    out
}

fn splits(t: &NumberedGraph) -> Vec<NumberedGraph> {
    let g = t.graph();
    let fresh = g.flag_count();
    let old_edges = g.edges();
    let mut out = Vec::new();
    for (v, flags) in g.vertices().iter().enumerate() {
        let k = flags.len();
        if k < 4 {
            continue;
        }
        for mask in 0u32..(1 << k) {
            let size = mask.count_ones() as usize;
            if size < 2 || size > k - 2 {
                continue;
            }
            let mut moved = vec![fresh + 1];
            let mut kept = vec![fresh];
            for (i, &f) in flags.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    moved.push(f);
                } else {
                    kept.push(f);
                }
            }
            let mut vertices = g.vertices().to_vec();
            vertices[v] = kept;
            vertices.push(moved);
            let mut edges = old_edges.clone();
            edges.push((fresh, fresh + 1));
            let genus = vec![0; vertices.len()];
            let h = Graph::new(vertices, genus, &edges).expect("split graph");
            out.push(NumberedGraph::new(h, &t.numbering()).expect("numbering survives"));
        }
    }
    out
}

/// Numbered canonical forms from the library enumerator, keyed by edge count.
pub fn library_trees(n: usize) -> HashMap<usize, BTreeSet<CanonicalForm>> {
    let mut out: HashMap<usize, BTreeSet<CanonicalForm>> = HashMap::new();
    for t in hyperstrata::strata::enumerate_trees(n, None).expect("enumeration") {
        out.entry(t.graph().edge_count()).or_default().insert(t.canonical_form());
    }
    out
}
