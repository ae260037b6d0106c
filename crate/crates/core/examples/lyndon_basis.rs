//! Lyndon bases of free Lie superalgebras against the brute-force oracle.

use hyperstrata::lie::{multidegrees, oracle_component, FreeLie, GradedAlphabet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = GradedAlphabet::parse("a:odd,b:even")?;
    let lie = FreeLie::new(alpha.clone());
    for md in [[3, 2], [2, 2], [4, 0], [1, 4]] {
        let keys: Vec<String> = lie.basis(&md).iter().map(|k| k.show(&alpha)).collect();
        println!("{md:?}: {}", keys.join(" "));
    }
    for total in 1..=6 {
        for md in multidegrees(2, total) {
            let oracle = oracle_component(&alpha, &md)?;
            assert_eq!(oracle.dimension, lie.dimension(&md));
        }
    }
    println!("Lyndon dimensions agree with the oracle up to degree 6");
    for n in 1..=7 {
        let odd = FreeLie::new(GradedAlphabet::odd_letters(n));
        println!("multilinear, {n} odd letters: {}", odd.dimension(&vec![1; n]));
    }
    Ok(())
}
