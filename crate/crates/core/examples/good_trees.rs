//! Good trees and the filtration by rational components.

use hyperstrata::pushforward::{in_filtration, node_bound_report};
use hyperstrata::strata::{max_good_tree_edges, stratum_classes};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for g in 2..=4u32 {
        let n = 2 * g as usize + 2;
        let mut good = 0;
        let mut agree = true;
        for c in stratum_classes(n, None)? {
            let t = c.annotated()?;
            good += t.is_good() as usize;
            agree &= t.is_good() == in_filtration(&t, 0);
        }
        let report = node_bound_report(g, 0)?;
        println!(
            "g = {g}: {good} good classes, good <=> no rational components: {agree}, max edges {:?} (bound {})",
            report.max_edges, report.bound
        );
    }
    for g in [5, 8, 12, 20] {
        println!("g = {g}: good trees have at most {} edges", max_good_tree_edges(2 * g + 2)?);
    }
    Ok(())
}
