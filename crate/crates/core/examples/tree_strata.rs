//! Numbered trees of type (0,n) and their S_n-orbit classes.

use hyperstrata::strata::{count_trees, enumerate_trees, stratum_classes, stratum_dimension};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 4..=9 {
        let classes = stratum_classes(n, None)?;
        let total: u64 = classes.iter().map(|c| c.orbit_size).sum();
        println!("n = {n}: {} numbered trees, {} classes", count_trees(n)?, classes.len());
        assert_eq!(total, count_trees(n)?);
    }

    for t in enumerate_trees(5, Some(1))?.iter().take(4) {
        let g = t.graph();
        let sides: Vec<Vec<u32>> = g
            .vertices()
            .iter()
            .map(|flags| flags.iter().filter_map(|&f| t.number(f)).collect())
            .collect();
        println!("{} edge, stratum dimension {}: leaves split {:?}", g.edge_count(), stratum_dimension(g), sides);
    }

    for c in stratum_classes(6, None)? {
        println!(
            "class with {} edges, vertex valences {:?}, orbit {}",
            c.edge_count,
            c.representative.graph().vertices().iter().map(Vec::len).collect::<Vec<_>>(),
            c.orbit_size
        );
    }
    Ok(())
}
