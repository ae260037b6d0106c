//! d₁ on the spaces V_{l,g} and its leading terms on ω_g.

use hyperstrata::spectral::LieComplex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cx = LieComplex::new();
    for g in 2..=8 {
        let w = cx.omega(g)?;
        let d = cx.d1(&w)?;
        println!("g = {g}: d1({}) = {}", w.format(), d.format());
        let lt = cx.verify_leading_terms(g)?;
        println!("       leading ({}, {}), expected {:?}: {}", lt.a3b, lt.a2bab, lt.expected, lt.holds);
    }
    for g in 2..=5 {
        let dims: Vec<usize> = (0..=g).map(|l| cx.dimension(l, g)).collect::<Result<_, _>>()?;
        let closed = (2..=g).all(|l| cx.d1_squared_vanishes(l, g).unwrap_or(false));
        println!("g = {g}: dim V_l = {dims:?}, d1^2 = 0: {closed}");
    }
    Ok(())
}
