//! Rewriting bracket expressions into the Lyndon basis.

use hyperstrata::lie::{BracketExpr, FreeLie, GradedAlphabet, LieVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = GradedAlphabet::parse("a:odd,b:even")?;
    let lie = FreeLie::new(alpha.clone());
    for s in ["[b,a]", "[a,a]", "[a,[a,a]]", "[[a,a],[a,b]]", "[[a,b],[a,b]]", "[[a,[a,b]],[b,[a,a]]]"] {
        let v = lie.normalize(&BracketExpr::parse(s, &alpha)?)?;
        println!("{s:>24} = {}", v.format(&alpha));
    }
    let x = LieVector::parse("1·aab", &alpha)?;
    let y = LieVector::parse("1·ab", &alpha)?;
    println!("[aab, ab] = {}", lie.bracket(&x, &y)?.format(&alpha));
    Ok(())
}
