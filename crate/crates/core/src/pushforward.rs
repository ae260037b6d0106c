//! Dual graphs of admissible double covers: from a tree of type (0,2g+2) to a
//! stable graph of type (g,0).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::CanonicalForm;
use crate::error::StrataError;
use crate::graph::Graph;
use crate::strata::{stratum_classes, AnnotatedTree, StratumClass};

/// The cover graph before stabilization.
#[derive(Debug, Clone)]
pub struct CoverGraph {
    pub graph: Graph,
    /// Cover vertices over each tree vertex.
    pub cover_of: Vec<Vec<usize>>,
    pub trace: Vec<String>,
}

pub fn admissible_cover_graph(t: &AnnotatedTree) -> CoverGraph {
    let tree = t.graph();
    let mut trace = Vec::new();
    let mut cover_of = Vec::with_capacity(tree.vertex_count());
    let mut genus = Vec::new();
    for v in 0..tree.vertex_count() {
        let rho = t.rho(v);
        if rho == 0 {
            cover_of.push(vec![genus.len(), genus.len() + 1]);
            genus.extend([0, 0]);
            trace.push(format!("vertex {v}: rho = 0, two genus-0 covers"));
        } else {
            let h = (rho as u32 - 2) / 2;
            cover_of.push(vec![genus.len()]);
            genus.push(h);
            trace.push(format!("vertex {v}: rho = {rho}, one cover of genus {h}"));
        }
    }
    let mut vertices = vec![Vec::new(); genus.len()];
    let mut sigma = Vec::new();
    let mut join = |a: usize, b: usize, vertices: &mut Vec<Vec<usize>>| {
        let f = sigma.len();
        sigma.extend([f + 1, f]);
        vertices[a].push(f);
        vertices[b].push(f + 1);
    };
    for (f, h) in tree.edges() {
        let (cu, cw) = (&cover_of[tree.vertex_of(f)], &cover_of[tree.vertex_of(h)]);
        if t.is_odd(f) {
            join(cu[0], cw[0], &mut vertices);
            trace.push(format!("odd edge {f}-{h}: one edge"));
        } else {
            for i in 0..2 {
                join(cu[i % cu.len()], cw[i % cw.len()], &mut vertices);
            }
            trace.push(format!("even edge {f}-{h}: two edges"));
        }
    }
    let graph = Graph::from_parts(sigma, vertices, genus).expect("cover graph is well formed");
    CoverGraph { graph, cover_of, trace }
}

/// Stabilized cover graph with the full rule trace.
pub fn pushforward_traced(t: &AnnotatedTree) -> Result<(Graph, Vec<String>), StrataError> {
    let mut cover = admissible_cover_graph(t);
    let s = cover
        .graph
        .stabilize_tracked(Some(&mut cover.trace))
        .map_err(|_| StrataError::UnstableCover(t.leaf_count()))?;
    Ok((s.graph, cover.trace))
}

/// Fails only for 4 leaves, where the cover is an unmarked genus-1 curve.
pub fn pushforward(t: &AnnotatedTree) -> Result<Graph, StrataError> {
    admissible_cover_graph(t)
        .graph
        .stabilize()
        .map_err(|_| StrataError::UnstableCover(t.leaf_count()))
}

/// `2·#{ρ = 0} + #{internal, ρ = 2}`.
pub fn rational_component_count(t: &AnnotatedTree) -> usize {
    (0..t.graph().vertex_count())
        .map(|v| match t.rho(v) {
            0 => 2,
            2 if t.is_internal(v) => 1,
            _ => 0,
        })
        .sum()
}

pub fn in_filtration(t: &AnnotatedTree, k: usize) -> bool {
    rational_component_count(t) <= k
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeBoundReport {
    pub g: u32,
    pub k: usize,
    pub bound: usize,
    /// edge count -> (classes, numbered trees) in the filtration
    pub per_edge: BTreeMap<usize, (usize, u64)>,
    pub max_edges: Option<usize>,
    pub violations: Vec<String>,
}

impl NodeBoundReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

fn classes_for(g: u32, max_g: u32) -> Result<Vec<StratumClass>, StrataError> {
    if !(2..=max_g).contains(&g) {
        return Err(StrataError::OutOfRange {
            what: "g",
            value: g as i64,
            range: if max_g == 4 { "2..=4" } else { "2..=5" },
        });
    }
    stratum_classes(2 * g as usize + 2, None)
}

/// Exhaustive check over Γ(0,2g+2) that trees in filtration `k` have at most
/// `g + k - 1` edges and that the pushforward never has fewer edges.
pub fn node_bound_report(g: u32, k: usize) -> Result<NodeBoundReport, StrataError> {
    let classes = classes_for(g, 4)?;
    let bound = g as usize + k - 1;
    let rows: Vec<_> = classes
        .par_iter()
        .map(|c| {
            let t = c.annotated()?;
            let inside = in_filtration(&t, k);
            let pe = pushforward(&t)?.edge_count();
            Ok((c.edge_count, c.orbit_size, inside, pe))
        })
        .collect::<Result<_, StrataError>>()?;
    let mut report = NodeBoundReport {
        g,
        k,
        bound,
        per_edge: BTreeMap::new(),
        max_edges: None,
        violations: Vec::new(),
    };
    for (i, (e, orbit, inside, pe)) in rows.into_iter().enumerate() {
        if pe < e {
            report
                .violations
                .push(format!("class {i}: pushforward has {pe} edges, tree has {e}"));
        }
        if !inside {
            continue;
        }
        let slot = report.per_edge.entry(e).or_insert((0, 0));
        slot.0 += 1;
        slot.1 += orbit;
        report.max_edges = report.max_edges.max(Some(e));
        if e > bound {
            report.violations.push(format!("class {i}: {e} edges exceeds {bound}"));
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct InjectivityReport {
    pub g: u32,
    pub classes: usize,
    pub distinct_images: usize,
    /// Pairs of class indices with isomorphic pushforwards.
    pub collisions: Vec<(usize, usize)>,
}

impl InjectivityReport {
    pub fn injective(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Compares pushforward canonical forms across all orbit classes of
/// Γ(0,2g+2). The acceptance range is g ≤ 3; g = 4, 5 are reported as well.
pub fn verify_injectivity(g: u32) -> Result<InjectivityReport, StrataError> {
    let classes = classes_for(g, 5)?;
    let images: Vec<CanonicalForm> = classes
        .par_iter()
        .map(|c| Ok(pushforward(&c.annotated()?)?.canonical_form()))
        .collect::<Result<_, StrataError>>()?;
    let mut first: BTreeMap<&CanonicalForm, usize> = BTreeMap::new();
    let mut collisions = Vec::new();
    for (i, key) in images.iter().enumerate() {
        match first.get(key) {
            Some(&j) => collisions.push((j, i)),
            None => {
                first.insert(key, i);
            }
        }
    }
    Ok(InjectivityReport {
        g,
        classes: classes.len(),
        distinct_images: first.len(),
        collisions,
    })
}
