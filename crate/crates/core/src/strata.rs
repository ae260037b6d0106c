//! Stable numbered trees of type (0,n), their S_n-orbits, and the parity
//! annotation used by the double-cover construction.

use std::collections::{BTreeMap, HashSet};

use crate::canon::CanonicalForm;
use crate::error::{out_of_range, StrataError};
use crate::graph::{Graph, NumberedGraph};

pub const MAX_LEAVES: usize = 12;

#[derive(Clone)]
struct RawTree {
    sigma: Vec<usize>,
    vertices: Vec<Vec<usize>>,
    labels: Vec<u32>,
    edges: usize,
}

impl RawTree {
    fn tripod() -> Self {
        RawTree {
            sigma: vec![0, 1, 2],
            vertices: vec![vec![0, 1, 2]],
            labels: vec![1, 2, 3],
            edges: 0,
        }
    }

    fn to_numbered(&self) -> NumberedGraph {
        let genus = vec![0; self.vertices.len()];
        NumberedGraph::from_raw(
            Graph::from_parts_trusted(self.sigma.clone(), self.vertices.clone(), genus),
            self.labels.clone(),
        )
    }

    fn push_flag(&mut self, label: u32) -> usize {
        let f = self.sigma.len();
        self.sigma.push(f);
        self.labels.push(label);
        f
    }

    fn join(&mut self, a: usize, b: usize) {
        self.sigma[a] = b;
        self.sigma[b] = a;
    }

    fn vertex_of(&self, f: usize) -> usize {
        self.vertices.iter().position(|fl| fl.contains(&f)).expect("flag placed")
    }

    /// Every way of adding leaf `k`, each stable tree with leaves `1..=k`
    /// arising from exactly one parent and one move.
    fn children(&self, k: u32) -> Vec<RawTree> {
        let mut out = Vec::new();
        for v in 0..self.vertices.len() {
            let mut t = self.clone();
            let z = t.push_flag(k);
            t.vertices[v].push(z);
            out.push(t);
        }
        for f in 0..self.sigma.len() {
            let h = self.sigma[f];
            if h > f {
                // subdivide the edge f-h
                let mut t = self.clone();
                let x = t.push_flag(0);
                let y = t.push_flag(0);
                let z = t.push_flag(k);
                t.join(f, x);
                t.join(h, y);
                t.vertices.push(vec![x, y, z]);
                t.edges += 1;
                out.push(t);
            } else if h == f {
                // subdivide the leg of leaf f
                let mut t = self.clone();
                let v = t.vertex_of(f);
                let x = t.push_flag(0);
                let y = t.push_flag(0);
                let z = t.push_flag(k);
                t.join(x, y);
                t.vertices[v].retain(|&q| q != f);
                t.vertices[v].push(x);
                t.vertices.push(vec![f, y, z]);
                t.edges += 1;
                out.push(t);
            }
        }
        out
    }

    fn child_count(&self) -> u64 {
        let leaves = self.sigma.iter().enumerate().filter(|&(f, &s)| f == s).count();
        (self.vertices.len() + self.edges + leaves) as u64
    }
}

fn check_n(n: usize) -> Result<(), StrataError> {
    if !(3..=MAX_LEAVES).contains(&n) {
        return Err(out_of_range("n", n as i64, "3..=12"));
    }
    Ok(())
}

/// Calls `visit` once for every stable numbered tree of type (0,n) with
/// `edges` edges (all edge counts when `None`), in generation order.
pub fn for_each_tree(n: usize, edges: Option<usize>, mut visit: impl FnMut(&NumberedGraph)) -> Result<(), StrataError> {
    check_n(n)?;
    fn walk(t: &RawTree, k: u32, n: u32, edges: Option<usize>, visit: &mut dyn FnMut(&NumberedGraph)) {
        let remaining = (n + 1 - k) as usize;
        if let Some(e) = edges {
            if t.edges > e || t.edges + remaining < e {
                return;
            }
        }
        if k > n {
            visit(&t.to_numbered());
            return;
        }
        for c in t.children(k) {
            walk(&c, k + 1, n, edges, visit);
        }
    }
    walk(&RawTree::tripod(), 4, n as u32, edges, &mut visit);
    Ok(())
}

/// `|Γ(0,n)|` without building the trees of the last level.
pub fn count_trees(n: usize) -> Result<u64, StrataError> {
    check_n(n)?;
    if n == 3 {
        return Ok(1);
    }
    fn walk(t: &RawTree, k: u32, n: u32) -> u64 {
        if k == n {
            return t.child_count();
        }
        t.children(k).iter().map(|c| walk(c, k + 1, n)).sum()
    }
    Ok(walk(&RawTree::tripod(), 4, n as u32))
}

/// One representative per isomorphism class of stable numbered trees of type
/// (0,n), sorted by canonical form.
pub fn enumerate_trees(n: usize, edge_count: Option<usize>) -> Result<Vec<NumberedGraph>, StrataError> {
    check_n(n)?;
    if let Some(e) = edge_count {
        if e > n - 3 {
            return Err(out_of_range("edge_count", e as i64, "0..=n-3"));
        }
    }
    let mut keyed = Vec::new();
    for_each_tree(n, edge_count, |t| keyed.push((t.canonical_form(), t.clone())))?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

/// An S_n-orbit of numbered trees.
#[derive(Debug, Clone)]
pub struct StratumClass {
    /// Leaves numbered in flag order.
    pub representative: NumberedGraph,
    pub edge_count: usize,
    /// Number of numbered trees in the orbit.
    pub orbit_size: u64,
    /// Canonical form with the numbering forgotten.
    pub canonical_key: CanonicalForm,
}

impl StratumClass {
    fn from_graph(g: Graph, key: CanonicalForm) -> Self {
        let n = g.leaf_count();
        let aut = g.automorphism_count();
        StratumClass {
            edge_count: g.edge_count(),
            orbit_size: (factorial(n) / aut) as u64,
            canonical_key: key,
            representative: NumberedGraph::in_flag_order(g),
        }
    }

    pub fn annotated(&self) -> Result<AnnotatedTree, StrataError> {
        annotate(&self.representative)
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Groups numbered trees by their unnumbered isomorphism type.
pub fn orbit_representatives(trees: &[NumberedGraph]) -> Vec<StratumClass> {
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for t in trees {
        let key = t.graph().canonical_form();
        classes.entry(key).or_insert_with(|| t.graph().clone());
    }
    classes.into_iter().map(|(k, g)| StratumClass::from_graph(g, k)).collect()
}

/// Splits vertex `v`: flags in `part` move to a new vertex joined to `v` by a
/// new edge.
fn split_vertex(g: &Graph, v: usize, part: &[usize]) -> Graph {
    let n = g.flag_count();
    let mut sigma = g.involution().to_vec();
    let (x, y) = (n, n + 1);
    sigma.push(y);
    sigma.push(x);
    let mut vertices = g.vertices().to_vec();
    vertices[v].retain(|f| !part.contains(f));
    vertices[v].push(x);
    let mut w = part.to_vec();
    w.push(y);
    vertices.push(w);
    let genus = vec![0; vertices.len()];
    Graph::from_parts_trusted(sigma, vertices, genus)
}

/// Unnumbered stable trees obtained from `g` by one vertex split.
fn unnumbered_splits(g: &Graph) -> Vec<Graph> {
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        let flags = g.vertex_flags(v);
        if flags.len() < 4 {
            continue;
        }
        let leaves: Vec<usize> = flags.iter().copied().filter(|&f| g.is_leaf(f)).collect();
        let inner: Vec<usize> = flags.iter().copied().filter(|&f| !g.is_leaf(f)).collect();
        for mask in 0u32..(1 << inner.len()) {
            for j in 0..=leaves.len() {
                let mut part: Vec<usize> = leaves[..j].to_vec();
                part.extend((0..inner.len()).filter(|i| mask >> i & 1 == 1).map(|i| inner[i]));
                if part.len() >= 2 && flags.len() - part.len() >= 2 {
                    out.push(split_vertex(g, v, &part));
                }
            }
        }
    }
    out
}

/// The S_n-orbit classes of Γ(0,n), grown by vertex splitting with canonical
/// deduplication, sorted by (edge count, canonical key).
pub fn stratum_classes(n: usize, edge_count: Option<usize>) -> Result<Vec<StratumClass>, StrataError> {
    check_n(n)?;
    let max_edges = edge_count.unwrap_or(n - 3);
    if max_edges > n - 3 {
        return Err(out_of_range("edge_count", max_edges as i64, "0..=n-3"));
    }
    let start = Graph::corolla(0, n);
    let mut level = vec![(start.canonical_form(), start)];
    let mut out = Vec::new();
    for e in 0..=max_edges {
        if edge_count.is_none() || edge_count == Some(e) {
            out.extend(level.iter().map(|(k, g)| StratumClass::from_graph(g.clone(), k.clone())));
        }
        if e == max_edges {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (_, g) in &level {
            for h in unnumbered_splits(g) {
                let key = h.canonical_form();
                if seen.insert(key.clone()) {
                    next.push((key, h));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next;
    }
    Ok(out)
}

/// A genus-0 tree with an even number of leaves, with flag parities,
/// ramification numbers ρ and edge-valences ν.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedTree {
    tree: NumberedGraph,
    odd: Vec<bool>,
    rho: Vec<usize>,
    nu: Vec<usize>,
}

impl AnnotatedTree {
    pub fn tree(&self) -> &NumberedGraph {
        &self.tree
    }

    pub fn graph(&self) -> &Graph {
        self.tree.graph()
    }

    pub fn is_odd(&self, f: usize) -> bool {
        self.odd[f]
    }

    /// Parity per flag, 1 for odd.
    pub fn parity(&self) -> Vec<u8> {
        self.odd.iter().map(|&o| o as u8).collect()
    }

    pub fn rho(&self, v: usize) -> usize {
        self.rho[v]
    }

    pub fn rhos(&self) -> &[usize] {
        &self.rho
    }

    pub fn nu(&self, v: usize) -> usize {
        self.nu[v]
    }

    pub fn nus(&self) -> &[usize] {
        &self.nu
    }

    pub fn is_internal(&self, v: usize) -> bool {
        self.nu[v] > 1
    }

    pub fn leaf_count(&self) -> usize {
        self.tree.leaf_count()
    }

    /// `g` with `n = 2g + 2` leaves.
    pub fn cover_genus(&self) -> u32 {
        (self.leaf_count() as u32 - 2) / 2
    }

    pub fn odd_edge_count(&self) -> usize {
        self.graph().edges().iter().filter(|e| self.odd[e.0]).count()
    }

    pub fn even_edge_count(&self) -> usize {
        self.graph().edge_count() - self.odd_edge_count()
    }

    /// Every internal vertex has ρ ≥ 4.
    pub fn is_good(&self) -> bool {
        (0..self.rho.len()).all(|v| !self.is_internal(v) || self.rho[v] >= 4)
    }
}

pub fn annotate(t: &NumberedGraph) -> Result<AnnotatedTree, StrataError> {
    let g = t.graph();
    if !g.is_tree() || g.genus_labels().iter().any(|&x| x != 0) {
        return Err(StrataError::NotATree);
    }
    let n = g.leaf_count();
    if n % 2 == 1 {
        return Err(StrataError::OddLeafTotal(n));
    }
    // leaves below each vertex, rooted at vertex 0
    let nv = g.vertex_count();
    let mut order = vec![0usize];
    let mut up_flag = vec![usize::MAX; nv];
    let mut seen = vec![false; nv];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &f in g.vertex_flags(v) {
            let s = g.sigma(f);
            if s != f && !seen[g.vertex_of(s)] {
                let w = g.vertex_of(s);
                seen[w] = true;
                up_flag[w] = s;
                order.push(w);
            }
        }
    }
    let mut below = vec![0usize; nv];
    for &v in order.iter().rev() {
        below[v] += g.vertex_flags(v).iter().filter(|&&f| g.is_leaf(f)).count();
        if up_flag[v] != usize::MAX {
            let parent = g.vertex_of(g.sigma(up_flag[v]));
            below[parent] += below[v];
        }
    }
    let mut odd = vec![false; g.flag_count()];
    for f in 0..g.flag_count() {
        if g.is_leaf(f) {
            odd[f] = true;
        }
    }
    for v in 1..nv {
        let f = up_flag[v];
        let o = below[v] % 2 == 1;
        odd[f] = o;
        odd[g.sigma(f)] = o;
    }
    let rho = (0..nv).map(|v| g.vertex_flags(v).iter().filter(|&&f| odd[f]).count()).collect();
    let nu = (0..nv)
        .map(|v| g.vertex_flags(v).iter().filter(|&&f| !g.is_leaf(f)).count())
        .collect();
    Ok(AnnotatedTree {
        tree: t.clone(),
        odd,
        rho,
        nu,
    })
}

/// Dimension `n - 3 - r` of the open stratum of a stable tree with `r` edges.
pub fn stratum_dimension(t: &Graph) -> usize {
    t.leaf_count() - 3 - t.edge_count()
}

/// The star tree T_{l,g}: a centre with leaves `2l+1..=2g+2` and `l` spokes,
/// spoke `i` carrying leaves `2i-1, 2i`.
pub fn build_t_lg(l: u32, g: u32) -> Result<AnnotatedTree, StrataError> {
    if !(1..=12).contains(&g) {
        return Err(out_of_range("g", g, "1..=12"));
    }
    if l > g {
        return Err(out_of_range("l", l, "0..=g"));
    }
    let centre_leaves = (2 * g - 2 * l + 2) as usize;
    let l = l as usize;
    let mut vertices = vec![(0..centre_leaves + l).collect::<Vec<_>>()];
    let mut numbering: Vec<(usize, u32)> = (0..centre_leaves).map(|f| (f, (2 * l + 1 + f) as u32)).collect();
    let mut edges = Vec::new();
    let mut next = centre_leaves + l;
    for i in 1..=l {
        let spoke = centre_leaves + i - 1;
        vertices.push(vec![next, next + 1, next + 2]);
        edges.push((spoke, next));
        numbering.push((next + 1, 2 * i as u32 - 1));
        numbering.push((next + 2, 2 * i as u32));
        next += 3;
    }
    let genus = vec![0; vertices.len()];
    let graph = Graph::new(vertices, genus, &edges)?;
    annotate(&NumberedGraph::new(graph, &numbering)?)
}

/// Automorphisms of the unnumbered tree fixing the leaf numbered `n`, the
/// root of T_{l,g}.
pub fn rooted_automorphism_count(t: &NumberedGraph) -> u128 {
    let n = t.leaf_count() as u32;
    let root = t.leaf_with_number(n).expect("leaf n exists");
    t.graph().automorphism_count_rooted(&[root])
}

/// Largest edge count of a good tree of type (0,n), n even, computed by
/// dynamic programming over planted subtrees without enumerating trees.
pub fn max_good_tree_edges(n: usize) -> Result<usize, StrataError> {
    if n < 4 || n % 2 == 1 || n > 64 {
        return Err(out_of_range("n", n as i64, "even, 4..=64"));
    }
    // reach[l][e][m][o]: a multiset of planted children with l leaves, e edges
    // (the edges to the children included), min(m,2) children and min(o,4)
    // odd children
    let idx = |l: usize, e: usize, m: usize, o: usize| ((l * n + e) * 3 + m) * 5 + o;
    let mut reach = vec![false; (n + 1) * n * 3 * 5];
    reach[idx(0, 0, 0, 0)] = true;
    let mut best = 0;
    for total in 2..=n {
        // vertices whose planted subtree (or whole tree at total = n) has
        // `total` leaves, from children with fewer leaves
        let mut fresh = Vec::new();
        for k in 0..=total {
            let lc = total - k;
            for e in 0..n {
                for m in 0..3 {
                    for o in 0..5 {
                        if !reach[idx(lc, e, m, o)] {
                            continue;
                        }
                        if total == n {
                            let good = m < 2 || k + o >= 4;
                            if k + m >= 3 && good {
                                best = best.max(e);
                            }
                        } else {
                            let up_odd = total % 2;
                            let good = m == 0 || k + o + up_odd >= 4;
                            if k + m + 1 >= 3 && good {
                                fresh.push(e);
                            }
                        }
                    }
                }
            }
        }
        if total == n || total > n - 2 {
            continue;
        }
        fresh.sort_unstable();
        fresh.dedup();
        let odd = total % 2;
        for &ec in &fresh {
            for l in 0..=n - total {
                for e in 0..n {
                    for m in 0..3 {
                        for o in 0..5 {
                            if reach[idx(l, e, m, o)] && e + ec + 1 < n {
                                let t = idx(l + total, e + ec + 1, (m + 1).min(2), (o + odd).min(4));
                                reach[t] = true;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(best)
}
