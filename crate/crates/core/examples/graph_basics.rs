//! Flags, genus, stabilization, contraction and canonical forms.

use hyperstrata::graph::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // two vertices joined by three edges, four legs
    let g = Graph::new(
        vec![vec![0, 3, 5, 7], vec![1, 2, 4, 6, 8]],
        vec![0, 0],
        &[(3, 4), (5, 6), (7, 8)],
    )?;
    println!("type {}  b1 = {}  stable = {}", g.graph_type()?, g.betti1()?, g.is_stable());
    println!("|Aut| = {}", g.automorphism_count());

    let c = g.contract_edges(&[3])?;
    println!("after contracting one edge: type {}, {} vertices", c.graph_type()?, c.vertex_count());
    println!("original <= contraction: {}, contraction <= original: {}", g.leq(&c)?, c.leq(&g)?);

    // a genus-0 vertex with two flags is spliced away
    let unstable = Graph::new(vec![vec![0, 1, 2], vec![3, 4], vec![5, 6, 7]], vec![0, 0, 0], &[(2, 3), (4, 5)])?;
    let s = unstable.stabilize()?;
    println!("stabilized: {} vertices, {} edges, type {}", s.vertex_count(), s.edge_count(), s.graph_type()?);

    let relabelled = g.permuted(&[1, 0, 2, 4, 3, 6, 5, 8, 7], &[1, 0]);
    println!("canonical form is label independent: {}", relabelled.canonical_form() == g.canonical_form());
    println!("canonical form {}", g.canonical_form().to_hex());
    Ok(())
}
