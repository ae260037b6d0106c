//! E₁ and F₁ dimension tables and the E-polynomial of M̄_{0,m}.

use hyperstrata::spectral::{betti_m0n, e1_table, f1_table, stratification_epoly_check};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 4..=7 {
        println!("Betti numbers of M_0,{n}: {:?}", betti_m0n(n)?);
    }
    print!("E1 for m = 5\n{}", e1_table(5)?.to_csv());
    let f = f1_table(3)?;
    print!("F1 for g = 3\n{}", f.to_csv());
    println!("cells outside the vanishing bounds: {:?}", f.bound_violations());
    for m in 4..=8 {
        let r = stratification_epoly_check(m)?;
        println!("m = {m}: {}  (palindromic {}, rows agree {})", r.show(), r.palindromic, r.rows_match);
    }
    Ok(())
}
