//! Galois groups of quintics from factorization patterns modulo primes.
//!
//! Run with `cargo run --example quintic_galois`.

use recipmono::arith::Effort;
use recipmono::galois::{quintic_galois, Conclusion};
use recipmono::modp::{factor_mod_p, reduce_mod};
use recipmono::IntPoly;

fn main() -> recipmono::Result<()> {
    let effort = Effort::default();
    for s in [
        "x^5-x-1",
        "x^5+20x+16",
        "x^5+x^4-4x^3-3x^2+3x+1",
        "x^5+x^4-4x^3-3x^2+13x+21",
    ] {
        let g: IntPoly = s.parse()?;
        let ev = quintic_galois(&g, &effort)?;
        let verdict = match &ev.conclusion {
            Conclusion::ProvenGroup(name) => name.clone(),
            Conclusion::Constraint(c) => format!("constrained: {}", c.join("; ")),
            Conclusion::Inconclusive => "inconclusive".into(),
        };
        println!("{g}\n  disc {} -> {verdict}", ev.disc);
        println!("  cycle types seen: {:?}", ev.cycle_types());
    }

    let g: IntPoly = "x^5+x^4-4x^3-3x^2+13x+21".parse()?;
    let fac = factor_mod_p(&reduce_mod(&g, 3)?)?;
    let parts: Vec<String> = fac.factors.iter().map(|(h, e)| format!("({h})^{e}")).collect();
    println!("\n{g} mod 3 = {}", parts.join(" "));
    Ok(())
}
