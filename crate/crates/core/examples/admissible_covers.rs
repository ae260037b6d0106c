//! Dual graphs of admissible double covers of the star trees T_{l,g}.

use hyperstrata::pushforward::{pushforward_traced, rational_component_count, verify_injectivity};
use hyperstrata::strata::build_t_lg;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = 4;
    for l in 0..=g {
        let t = build_t_lg(l, g)?;
        let (image, trace) = pushforward_traced(&t)?;
        println!(
            "T_{{{l},{g}}}: rho {:?} -> {} vertices of genus {:?}, {} edges, total genus {}, rational components {}",
            t.rhos(),
            image.vertex_count(),
            image.genus_labels(),
            image.edge_count(),
            image.genus()?,
            rational_component_count(&t)
        );
        if l == 2 {
            for line in trace {
                println!("    {line}");
            }
        }
    }
    for g in 2..=4 {
        let r = verify_injectivity(g)?;
        println!("g = {g}: {} classes, {} distinct images", r.classes, r.distinct_images);
    }
    Ok(())
}
