//! Perturbed cyclotomic polynomials Φ_N(x) + 4rq^2 t x^(φ(N)/2).
//!
//! Run with `cargo run --example jones_family`.

use recipmono::arith::Effort;
use recipmono::families::{jones_companion, jones_sweep, perturbed_cyclotomic, FamilyParams, SweepOptions};
use recipmono::poly::cyclotomic_2aqb;

fn main() -> recipmono::Result<()> {
    println!("Φ_10 = {}", cyclotomic_2aqb(5, 1, 1)?);
    let params = FamilyParams::new(5, 0, 1, 2, 1)?;
    println!("F = {}", perturbed_cyclotomic(&params)?);
    println!("g = {}\n", jones_companion(5, 0, 2, 1)?);

    let rows = jones_sweep(5, 0, 1, 2, (-5, 5), &Effort::default(), &SweepOptions::default())?;
    for r in rows {
        println!(
            "t={:>2}  f(1)f(-1)={:<8} {:<15} identity={:<5} {:?}",
            r.t,
            r.f_one_times_f_minus_one,
            r.squarefree.label(),
            r.identity.map(|c| c.holds).unwrap_or(false),
            r.verdict
        );
    }
    Ok(())
}
