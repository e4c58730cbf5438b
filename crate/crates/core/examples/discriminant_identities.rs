//! Discriminants of reciprocal polynomials in terms of their companions.
//!
//! Run with `cargo run --example discriminant_identities`.

use recipmono::arith::Effort;
use recipmono::disc::{
    conjecture_disc_identity, discriminant, discriminant_report, lemma_disc_identity, resultant,
};
use recipmono::IntPoly;

fn main() -> recipmono::Result<()> {
    let f: IntPoly = "x^4+3x^3+5x^2+3x+1".parse()?;
    println!("Res(f, f') = {}", resultant(&f, &f.derivative())?);
    println!("disc(f) = {}", discriminant(&f)?);

    let rep = discriminant_report(&f, &Effort::default())?;
    println!("factorization: {}", serde_json::to_string(&rep.factorization).unwrap());

    let c = lemma_disc_identity(&f)?;
    println!("\ndisc(f) = {} and f(1)f(-1)disc(g)^2 = {}: {}", c.lhs, c.rhs, c.holds);

    println!("\nperturbed cyclotomics, closed-form discriminant:");
    for (q, a, r, t) in [(3, 0, 1, 2), (5, 1, 2, -1), (7, 0, 3, 4), (11, 1, 1, -5)] {
        let c = conjecture_disc_identity(q, a, r, t)?;
        println!("  q={q} a={a} r={r} t={t}: holds={} disc={}", c.holds, c.lhs);
    }
    Ok(())
}
