//! Factoring over F_p and certifying irreducibility over Q.
//!
//! Run with `cargo run --example factor_mod_p`.

use recipmono::arith::{factor_int, is_squarefree_int, Effort};
use recipmono::modp::{factor_mod_p, factor_pattern, irreducibility_certificate, reduce_mod};
use recipmono::IntPoly;

fn main() -> recipmono::Result<()> {
    let effort = Effort::default();
    let f: IntPoly = "x^10+x^9+x^8+x^7+7x^6+13x^5+7x^4+x^3+x^2+x+1".parse()?;
    for p in [2, 3, 5, 7, 11] {
        let fac = factor_mod_p(&reduce_mod(&f, p)?)?;
        let parts: Vec<String> = fac.factors.iter().map(|(g, e)| format!("({g})^{e}")).collect();
        println!("mod {p:<2}: {}", parts.join(" "));
    }
    let pat = factor_pattern(&f, 13)?;
    println!("degrees mod 13: {:?}", pat.degrees());

    let cert = irreducibility_certificate(&f, &effort)?;
    println!("\nirreducibility: {}", serde_json::to_string(&cert).unwrap());
    let cert = irreducibility_certificate(&"x^4+1".parse()?, &effort)?;
    println!("x^4+1: {} (reducible modulo every prime)", cert.label());

    let n = num_bigint::BigInt::from(2934361u64) * 27;
    println!("\n{n} = {}", serde_json::to_string(&factor_int(&n, &effort)).unwrap());
    println!("squarefree: {}", is_squarefree_int(&n, &effort).label());
    Ok(())
}
