//! Stable graphs: flags, an involution pairing flags into edges, a vertex
//! partition and genus labels.
//!
//! Flags are dense indices `0..flag_count()`. Their order carries no meaning;
//! identity of graphs is decided by [`Graph::canonical_form`].

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::{self, CanonicalForm};
use crate::error::GraphError;

/// Genus and number of leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphType {
    pub genus: u32,
    pub leaf_count: usize,
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.genus, self.leaf_count)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    sigma: Vec<usize>,
    vertex_of: Vec<usize>,
    vertices: Vec<Vec<usize>>,
    genus: Vec<u32>,
}

impl Graph {
    /// Builds a graph from its vertex partition, genus labels and edge list.
    /// Flags not mentioned in `edges` are leaves.
    pub fn new(vertices: Vec<Vec<usize>>, genus: Vec<u32>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n: usize = vertices.iter().map(Vec::len).sum();
        let mut sigma: Vec<usize> = (0..n).collect();
        let mut paired = vec![false; n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b || paired[a] || paired[b] {
                return Err(GraphError::Malformed(format!("bad edge ({a},{b})")));
            }
            sigma[a] = b;
            sigma[b] = a;
            paired[a] = true;
            paired[b] = true;
        }
        Self::from_parts(sigma, vertices, genus)
    }

    /// Builds a graph from an explicit involution on `0..n`.
    pub fn from_parts(sigma: Vec<usize>, mut vertices: Vec<Vec<usize>>, genus: Vec<u32>) -> Result<Self, GraphError> {
        let n = sigma.len();
        if genus.len() != vertices.len() {
            return Err(GraphError::Malformed("genus labels not aligned with vertices".into()));
        }
        for (f, &s) in sigma.iter().enumerate() {
            if s >= n || sigma[s] != f {
                return Err(GraphError::Malformed(format!("involution fails at flag {f}")));
            }
        }
        let mut vertex_of = vec![usize::MAX; n];
        for (v, flags) in vertices.iter_mut().enumerate() {
            // only a lone vertex (a smooth curve without markings) may be bare
            if flags.is_empty() && n > 0 {
                return Err(GraphError::Malformed(format!("vertex {v} has no flags")));
            }
            flags.sort_unstable();
            for &f in flags.iter() {
                if f >= n || vertex_of[f] != usize::MAX {
                    return Err(GraphError::Malformed(format!("flag {f} is not in exactly one vertex")));
                }
                vertex_of[f] = v;
            }
        }
        if let Some(f) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(GraphError::Malformed(format!("flag {f} has no vertex")));
        }
        Ok(Graph {
            sigma,
            vertex_of,
            vertices,
            genus,
        })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts_trusted(sigma: Vec<usize>, mut vertices: Vec<Vec<usize>>, genus: Vec<u32>) -> Self {
        let mut vertex_of = vec![0; sigma.len()];
        for (v, flags) in vertices.iter_mut().enumerate() {
            flags.sort_unstable();
            for &f in flags.iter() {
                vertex_of[f] = v;
            }
        }
        Graph {
            sigma,
            vertex_of,
            vertices,
            genus,
        }
    }

    /// A single vertex of genus `g` with `n` leaves.
    pub fn corolla(g: u32, n: usize) -> Self {
        Graph {
            sigma: (0..n).collect(),
            vertex_of: vec![0; n],
            vertices: vec![(0..n).collect()],
            genus: vec![g],
        }
    }

    pub fn flag_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.iter().enumerate().filter(|&(f, &s)| f < s).count()
    }

    pub fn sigma(&self, f: usize) -> usize {
        self.sigma[f]
    }

    pub fn involution(&self) -> &[usize] {
        &self.sigma
    }

    pub fn vertex_of(&self, f: usize) -> usize {
        self.vertex_of[f]
    }

    pub fn vertex_flags(&self, v: usize) -> &[usize] {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn genus_label(&self, v: usize) -> u32 {
        self.genus[v]
    }

    pub fn genus_labels(&self) -> &[u32] {
        &self.genus
    }

    pub fn is_leaf(&self, f: usize) -> bool {
        self.sigma[f] == f
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.flag_count()).filter(|&f| self.is_leaf(f)).collect()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.flag_count()).filter(|&f| self.is_leaf(f)).count()
    }

    /// Edges as `(f, σ(f))` with `f < σ(f)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.sigma
            .iter()
            .enumerate()
            .filter(|&(f, &s)| f < s)
            .map(|(f, &s)| (f, s))
            .collect()
    }

    /// Vertices adjacent to `v` through edges, with multiplicity.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.vertices[v]
            .iter()
            .filter(move |&&f| !self.is_leaf(f))
            .map(move |&f| self.vertex_of[self.sigma[f]])
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertex_count()
    }

    /// `|V| - |E| + 1` for a connected graph.
    pub fn betti1(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::DisconnectedGraph);
        }
        Ok(self.edge_count() + 1 - self.vertex_count())
    }

    pub fn genus(&self) -> Result<u32, GraphError> {
        let b1 = self.betti1()?;
        Ok(self.genus.iter().sum::<u32>() + b1 as u32)
    }

    pub fn graph_type(&self) -> Result<GraphType, GraphError> {
        Ok(GraphType {
            genus: self.genus()?,
            leaf_count: self.leaf_count(),
        })
    }

    pub fn is_vertex_stable(&self, v: usize) -> bool {
        2 * self.genus[v] as i64 - 2 + self.vertices[v].len() as i64 > 0
    }

    pub fn is_stable(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.is_vertex_stable(v))
    }

    pub fn is_tree(&self) -> bool {
        self.betti1() == Ok(0)
    }

    pub fn stabilize(&self) -> Result<Graph, GraphError> {
        self.stabilize_tracked(None).map(|s| s.graph)
    }

    /// Stabilization keeping track of where leaves end up, optionally
    /// recording one line per deletion.
    pub fn stabilize_tracked(&self, mut trace: Option<&mut Vec<String>>) -> Result<Stabilized, GraphError> {
        let ty = self.graph_type()?;
        if 2 * ty.genus as i64 - 2 + ty.leaf_count as i64 <= 0 {
            return Err(GraphError::Unstabilizable);
        }
        let n = self.flag_count();
        let mut sigma = self.sigma.clone();
        let mut flag_alive = vec![true; n];
        let mut vflags = self.vertices.clone();
        let mut valive = vec![true; self.vertex_count()];
        let vertex_of = &self.vertex_of;
        // current leaf flag -> original leaf flag
        let mut origin: Vec<Option<usize>> = (0..n).map(|f| self.is_leaf(f).then_some(f)).collect();

        while let Some(v) = (0..vflags.len()).find(|&v| valive[v] && self.genus[v] == 0 && vflags[v].len() <= 2) {
            let fl = vflags[v].clone();
            match fl.as_slice() {
                [f] => {
                    let h = sigma[*f];
                    if h == *f {
                        return Err(GraphError::Unstabilizable);
                    }
                    let u = vertex_of[h];
                    vflags[u].retain(|&x| x != h);
                    flag_alive[*f] = false;
                    flag_alive[h] = false;
                    if let Some(t) = trace.as_deref_mut() {
                        t.push(format!("delete genus-0 vertex {v} with one flag {f}; drop partner flag {h} at vertex {u}"));
                    }
                }
                [f1, f2] => {
                    let (f1, f2) = (*f1, *f2);
                    let (h1, h2) = (sigma[f1], sigma[f2]);
                    if h1 == f2 || (h1 == f1 && h2 == f2) {
                        return Err(GraphError::Unstabilizable);
                    }
                    if h1 == f1 || h2 == f2 {
                        let (leaf, h) = if h1 == f1 { (f1, h2) } else { (f2, h1) };
                        sigma[h] = h;
                        origin[h] = origin[leaf];
                        if let Some(t) = trace.as_deref_mut() {
                            t.push(format!("delete genus-0 vertex {v} with flags {f1},{f2}; flag {h} becomes a leaf"));
                        }
                    } else {
                        sigma[h1] = h2;
                        sigma[h2] = h1;
                        if let Some(t) = trace.as_deref_mut() {
                            let kind = if vertex_of[h1] == vertex_of[h2] { "loop" } else { "edge" };
                            t.push(format!("delete genus-0 vertex {v} with flags {f1},{f2}; splice {h1}-{h2} into one {kind}"));
                        }
                    }
                    flag_alive[f1] = false;
                    flag_alive[f2] = false;
                }
                _ => return Err(GraphError::Unstabilizable),
            }
            vflags[v].clear();
            valive[v] = false;
        }

        let mut new_index = vec![usize::MAX; n];
        let mut next = 0;
        for f in 0..n {
            if flag_alive[f] {
                new_index[f] = next;
                next += 1;
            }
        }
        let new_sigma: Vec<usize> = (0..n).filter(|&f| flag_alive[f]).map(|f| new_index[sigma[f]]).collect();
        let mut vertices = Vec::new();
        let mut genus = Vec::new();
        for v in 0..vflags.len() {
            if valive[v] {
                vertices.push(vflags[v].iter().map(|&f| new_index[f]).collect());
                genus.push(self.genus[v]);
            }
        }
        if vertices.is_empty() {
            return Err(GraphError::Unstabilizable);
        }
        let mut leaf_map = Vec::new();
        for f in 0..n {
            if flag_alive[f] && sigma[f] == f {
                if let Some(o) = origin[f] {
                    leaf_map.push((o, new_index[f]));
                }
            }
        }
        leaf_map.sort_unstable();
        Ok(Stabilized {
            graph: Graph::from_parts(new_sigma, vertices, genus)?,
            leaf_map,
        })
    }

    /// Contracts the edges containing the given flags (either flag of an edge
    /// may be used). Each contracted cluster becomes one vertex whose genus is
    /// the genus of the cluster.
    pub fn contract_edges(&self, edge_flags: &[usize]) -> Result<Graph, GraphError> {
        self.contract_tracked(edge_flags).map(|(g, _)| g)
    }

    /// Contraction together with the old-flag to new-flag map of surviving flags.
    pub fn contract_tracked(&self, edge_flags: &[usize]) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        let n = self.flag_count();
        let mut chosen = vec![false; n];
        for &f in edge_flags {
            if f >= n || self.is_leaf(f) {
                return Err(GraphError::UnknownEdge(f));
            }
            chosen[f] = true;
            chosen[self.sigma[f]] = true;
        }
        let nv = self.vertex_count();
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut internal_edges = vec![0u32; nv];
        for f in 0..n {
            if chosen[f] && f < self.sigma[f] {
                let a = find(&mut parent, self.vertex_of[f]);
                let b = find(&mut parent, self.vertex_of[self.sigma[f]]);
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut cluster_id = vec![usize::MAX; nv];
        let mut clusters = 0;
        let mut cluster_vertices = Vec::new();
        for v in 0..nv {
            let r = find(&mut parent, v);
            if cluster_id[r] == usize::MAX {
                cluster_id[r] = clusters;
                clusters += 1;
                cluster_vertices.push(0u32);
            }
            cluster_id[v] = cluster_id[r];
            cluster_vertices[cluster_id[v]] += 1;
        }
        for f in 0..n {
            if chosen[f] && f < self.sigma[f] {
                internal_edges[cluster_id[self.vertex_of[f]]] += 1;
            }
        }
        let mut genus = vec![0u32; clusters];
        for v in 0..nv {
            genus[cluster_id[v]] += self.genus[v];
        }
        for c in 0..clusters {
            genus[c] += internal_edges[c] + 1 - cluster_vertices[c];
        }
        let mut map = vec![None; n];
        let mut next = 0;
        for f in 0..n {
            if !chosen[f] {
                map[f] = Some(next);
                next += 1;
            }
        }
        let sigma = (0..n).filter(|&f| !chosen[f]).map(|f| map[self.sigma[f]].unwrap()).collect();
        let mut vertices = vec![Vec::new(); clusters];
        for f in 0..n {
            if let Some(nf) = map[f] {
                vertices[cluster_id[self.vertex_of[f]]].push(nf);
            }
        }
        Ok((Graph::from_parts(sigma, vertices, genus)?, map))
    }

    /// Relabels flags and vertices: flag `f` becomes `flag_perm[f]`, vertex `v`
    /// becomes `vertex_perm[v]`.
    pub fn permuted(&self, flag_perm: &[usize], vertex_perm: &[usize]) -> Graph {
        let n = self.flag_count();
        let mut sigma = vec![0; n];
        for f in 0..n {
            sigma[flag_perm[f]] = flag_perm[self.sigma[f]];
        }
        let mut vertices = vec![Vec::new(); self.vertex_count()];
        let mut genus = vec![0; self.vertex_count()];
        for v in 0..self.vertex_count() {
            vertices[vertex_perm[v]] = self.vertices[v].iter().map(|&f| flag_perm[f]).collect();
            genus[vertex_perm[v]] = self.genus[v];
        }
        Graph::from_parts(sigma, vertices, genus).expect("permutation of a valid graph")
    }

    /// Canonical form with leaves indistinguishable.
    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical(self, &vec![0; self.flag_count()]).0
    }

    /// Order of the automorphism group with leaves unlabeled.
    pub fn automorphism_count(&self) -> u128 {
        canon::canonical(self, &vec![0; self.flag_count()]).1
    }

    /// Order of the automorphism group fixing each flag of `roots`.
    pub fn automorphism_count_rooted(&self, roots: &[usize]) -> u128 {
        let mut labels = vec![0u32; self.flag_count()];
        for (i, &r) in roots.iter().enumerate() {
            labels[r] = i as u32 + 1;
        }
        canon::canonical(self, &labels).1
    }

    /// Whether `other` is obtained from a graph isomorphic to `self` by
    /// contracting edges.
    pub fn leq(&self, other: &Graph) -> Result<bool, GraphError> {
        let (t1, t2) = (self.graph_type()?, other.graph_type()?);
        if t1 != t2 {
            return Err(GraphError::TypeMismatch(t1, t2));
        }
        Ok(leq_search(
            self.clone(),
            other.canonical_form(),
            self.edge_count() as isize - other.edge_count() as isize,
            |g: &Graph| g.edges().into_iter().map(|e| e.0).collect(),
            |g, f| g.contract_edges(&[f]).expect("edge flag"),
            Graph::canonical_form,
        ))
    }
}

fn leq_search<T>(
    start: T,
    target: CanonicalForm,
    steps: isize,
    edges: impl Fn(&T) -> Vec<usize>,
    contract: impl Fn(&T, usize) -> T,
    canon: impl Fn(&T) -> CanonicalForm,
) -> bool {
    if steps < 0 {
        return false;
    }
    let mut level = vec![start];
    for _ in 0..steps {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for f in edges(g) {
                let h = contract(g, f);
                if seen.insert(canon(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level.iter().any(|g| canon(g) == target)
}

/// Result of [`Graph::stabilize_tracked`].
#[derive(Debug, Clone)]
pub struct Stabilized {
    pub graph: Graph,
    /// `(original leaf flag, leaf flag in the stabilized graph)`, sorted.
    pub leaf_map: Vec<(usize, usize)>,
}

/// A graph whose leaves carry the numbers `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberedGraph {
    graph: Graph,
    // per flag; 0 on non-leaf flags
    labels: Vec<u32>,
}

impl NumberedGraph {
    /// `numbering` lists `(leaf flag, number)`.
    pub fn new(graph: Graph, numbering: &[(usize, u32)]) -> Result<Self, GraphError> {
        let n = graph.leaf_count();
        let mut labels = vec![0u32; graph.flag_count()];
        let mut used = vec![false; n + 1];
        for &(f, k) in numbering {
            if f >= graph.flag_count() || !graph.is_leaf(f) {
                return Err(GraphError::Malformed(format!("flag {f} is not a leaf")));
            }
            if k == 0 || k as usize > n || used[k as usize] || labels[f] != 0 {
                return Err(GraphError::Malformed(format!("numbering is not a bijection onto 1..={n}")));
            }
            used[k as usize] = true;
            labels[f] = k;
        }
        if numbering.len() != n {
            return Err(GraphError::Malformed(format!("numbering is not a bijection onto 1..={n}")));
        }
        Ok(NumberedGraph { graph, labels })
    }

    /// Numbers the leaves `1..=n` in increasing flag order.
    pub fn in_flag_order(graph: Graph) -> Self {
        let mut labels = vec![0u32; graph.flag_count()];
        let mut k = 0;
        for f in 0..graph.flag_count() {
            if graph.is_leaf(f) {
                k += 1;
                labels[f] = k;
            }
        }
        NumberedGraph { graph, labels }
    }

    pub(crate) fn from_raw(graph: Graph, labels: Vec<u32>) -> Self {
        debug_assert_eq!(graph.flag_count(), labels.len());
        NumberedGraph { graph, labels }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Number of leaf `f`, if `f` is a leaf.
    pub fn number(&self, f: usize) -> Option<u32> {
        (self.labels[f] != 0).then_some(self.labels[f])
    }

    pub fn leaf_with_number(&self, k: u32) -> Option<usize> {
        self.labels.iter().position(|&x| x == k && k != 0)
    }

    /// `(leaf flag, number)` pairs sorted by flag.
    pub fn numbering(&self) -> Vec<(usize, u32)> {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(_, &k)| k != 0)
            .map(|(f, &k)| (f, k))
            .collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.graph.leaf_count()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical(&self.graph, &self.labels).0
    }

    pub fn automorphism_count(&self) -> u128 {
        canon::canonical(&self.graph, &self.labels).1
    }

    pub fn stabilize(&self) -> Result<NumberedGraph, GraphError> {
        let s = self.graph.stabilize_tracked(None)?;
        let mut labels = vec![0; s.graph.flag_count()];
        for (old, new) in s.leaf_map {
            labels[new] = self.labels[old];
        }
        Ok(NumberedGraph::from_raw(s.graph, labels))
    }

    pub fn contract_edges(&self, edge_flags: &[usize]) -> Result<NumberedGraph, GraphError> {
        let (g, map) = self.graph.contract_tracked(edge_flags)?;
        let mut labels = vec![0; g.flag_count()];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = new {
                labels[*new] = self.labels[old];
            }
        }
        Ok(NumberedGraph::from_raw(g, labels))
    }

    /// Applies a permutation of leaf numbers: number `k` becomes `perm[k-1]`.
    pub fn renumbered(&self, perm: &[u32]) -> NumberedGraph {
        let labels = self
            .labels
            .iter()
            .map(|&k| if k == 0 { 0 } else { perm[k as usize - 1] })
            .collect();
        NumberedGraph::from_raw(self.graph.clone(), labels)
    }

    /// Relabels flags and vertices, carrying the numbering along.
    pub fn permuted(&self, flag_perm: &[usize], vertex_perm: &[usize]) -> NumberedGraph {
        let graph = self.graph.permuted(flag_perm, vertex_perm);
        let mut labels = vec![0; graph.flag_count()];
        for (f, &k) in self.labels.iter().enumerate() {
            labels[flag_perm[f]] = k;
        }
        NumberedGraph::from_raw(graph, labels)
    }

    pub fn leq(&self, other: &NumberedGraph) -> Result<bool, GraphError> {
        let (t1, t2) = (self.graph.graph_type()?, other.graph.graph_type()?);
        if t1 != t2 {
            return Err(GraphError::TypeMismatch(t1, t2));
        }
        Ok(leq_search(
            self.clone(),
            other.canonical_form(),
            self.graph.edge_count() as isize - other.graph.edge_count() as isize,
            |g: &NumberedGraph| g.graph.edges().into_iter().map(|e| e.0).collect(),
            |g, f| g.contract_edges(&[f]).expect("edge flag"),
            NumberedGraph::canonical_form,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn figure_one() -> Graph {
        // flags 1..9 shifted to 0..8
        Graph::new(
            vec![vec![0, 3, 5, 7], vec![1, 2, 4, 6, 8]],
            vec![0, 0],
            &[(3, 4), (5, 6), (7, 8)],
        )
        .unwrap()
    }

    #[test]
    fn figure_one_invariants() {
        let g = figure_one();
        assert_eq!(g.betti1(), Ok(2));
        assert_eq!(g.genus(), Ok(2));
        assert!(g.is_stable());
        assert_eq!(g.graph_type().unwrap(), GraphType { genus: 2, leaf_count: 3 });
    }

    #[test]
    fn trivial_betti() {
        assert_eq!(Graph::corolla(0, 3).betti1(), Ok(0));
        let loop1 = Graph::new(vec![vec![0, 1]], vec![0], &[(0, 1)]).unwrap();
        assert_eq!(loop1.betti1(), Ok(1));
        let loops = Graph::new(vec![(0..6).collect()], vec![0], &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(loops.genus(), Ok(3));
        assert_eq!(Graph::corolla(5, 0).genus(), Ok(5));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(vec![vec![0, 1, 2], vec![3, 4, 5]], vec![0, 0], &[]).unwrap();
        assert_eq!(g.betti1(), Err(GraphError::DisconnectedGraph));
        assert_eq!(g.genus(), Err(GraphError::DisconnectedGraph));
    }

    #[test]
    fn stability_inequality() {
        let two = Graph::new(vec![vec![0, 1], vec![2, 3, 4, 5]], vec![0, 0], &[(1, 2)]).unwrap();
        assert!(!two.is_vertex_stable(0));
        assert!(Graph::corolla(1, 1).is_stable());
    }

    #[test]
    fn stabilize_fixpoint_and_splice() {
        let g = figure_one();
        assert_eq!(g.stabilize().unwrap(), g);
        // v1(3 leaves) - v2(genus 0, two edge flags) - v3(3 leaves)
        let path = Graph::new(
            vec![vec![0, 1, 2, 3], vec![4, 5], vec![6, 7, 8, 9]],
            vec![0, 0, 0],
            &[(3, 4), (5, 6)],
        )
        .unwrap();
        let s = path.stabilize().unwrap();
        assert_eq!(s.vertex_count(), 2);
        assert_eq!(s.edge_count(), 1);
        assert_eq!(s.leaf_count(), 6);
    }

    #[test]
    fn stabilize_parallel_edges_into_loop() {
        // genus-0 vertex with two parallel edges to a genus-1 vertex
        let g = Graph::new(vec![vec![0, 1], vec![2, 3]], vec![0, 1], &[(0, 2), (1, 3)]).unwrap();
        let s = g.stabilize().unwrap();
        assert_eq!(s.vertex_count(), 1);
        assert_eq!(s.edge_count(), 1);
        assert_eq!(s.genus(), Ok(2));
        assert_eq!(s.sigma(0), 1);
    }

    #[test]
    fn stabilize_leaf_through_keeps_number() {
        // leaf 1 hangs off a genus-0 bivalent vertex
        let g = Graph::new(vec![vec![0, 1], vec![2, 3, 4]], vec![0, 0], &[(1, 2)]).unwrap();
        let ng = NumberedGraph::new(g, &[(0, 1), (3, 2), (4, 3)]).unwrap();
        let s = ng.stabilize().unwrap();
        assert_eq!(s.graph().vertex_count(), 1);
        let mut nums: Vec<u32> = s.numbering().into_iter().map(|x| x.1).collect();
        nums.sort();
        assert_eq!(nums, vec![1, 2, 3]);
    }

    #[test]
    fn unstabilizable() {
        let g = Graph::new(vec![vec![0, 1]], vec![0], &[]).unwrap();
        assert_eq!(g.stabilize(), Err(GraphError::Unstabilizable));
        let torus = Graph::new(vec![vec![0, 1]], vec![0], &[(0, 1)]).unwrap();
        assert_eq!(torus.stabilize(), Err(GraphError::Unstabilizable));
    }

    #[test]
    fn contraction_figure_one() {
        let g = figure_one();
        assert_eq!(g.contract_edges(&[]).unwrap().canonical_form(), g.canonical_form());
        let c = g.contract_edges(&[3]).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.genus_label(0), 0);
        assert_eq!(c.edge_count(), 2);
        assert_eq!(c.genus(), Ok(2));
        let all = g.contract_edges(&[3, 5, 7]).unwrap();
        assert_eq!(all.vertex_count(), 1);
        assert_eq!(all.genus_label(0), 2);
        assert_eq!(g.contract_edges(&[0]), Err(GraphError::UnknownEdge(0)));
    }

    #[test]
    fn leq_basics() {
        let g = figure_one();
        assert!(g.leq(&g).unwrap());
        let smooth = Graph::corolla(2, 3);
        assert!(g.leq(&smooth).unwrap());
        assert!(!smooth.leq(&g).unwrap());
        assert!(matches!(g.leq(&Graph::corolla(0, 3)), Err(GraphError::TypeMismatch(..))));
    }

    #[test]
    fn one_edge_five_leaf_splits_incomparable() {
        let split = |a: &[u32], b: &[u32]| {
            let na = a.len();
            let mut verts = vec![(0..=na).collect::<Vec<_>>(), (na + 1..na + 2 + b.len()).collect()];
            verts[0].rotate_left(0);
            let g = Graph::new(verts, vec![0, 0], &[(na, na + 1)]).unwrap();
            let mut numbering: Vec<(usize, u32)> = a.iter().enumerate().map(|(i, &k)| (i, k)).collect();
            numbering.extend(b.iter().enumerate().map(|(i, &k)| (na + 2 + i, k)));
            NumberedGraph::new(g, &numbering).unwrap()
        };
        let x = split(&[1, 2], &[3, 4, 5]);
        let y = split(&[1, 3], &[2, 4, 5]);
        assert!(!x.leq(&y).unwrap());
        assert!(!y.leq(&x).unwrap());
        let smooth = NumberedGraph::in_flag_order(Graph::corolla(0, 5));
        assert!(x.leq(&smooth).unwrap());
    }
}
