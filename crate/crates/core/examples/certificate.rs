//! The nonvanishing certificate with its log and JSON form.

use hyperstrata::spectral::certify_nonvanishing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let cert = certify_nonvanishing(g)?;
    print!("{}", cert.log());
    println!("{}", serde_json::to_string_pretty(&cert.to_json())?);
    for g in 2..=10 {
        let ok = certify_nonvanishing(g).is_ok();
        println!("g = {g}: {}", if ok { "certified" } else { "failed" });
    }
    Ok(())
}
