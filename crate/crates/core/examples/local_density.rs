//! Local densities ρ(r^2) and obstructions to squarefree values.
//!
//! Run with `cargo run --release --example local_density -- 100`.

use recipmono::families::{decic_disc_poly, local_obstruction_scan, rho_f_r2, sextic_disc_poly};
use recipmono::IntPoly;

fn main() -> recipmono::Result<()> {
    let bound: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100);

    for (name, f) in [("h", decic_disc_poly()), ("H", sextic_disc_poly())] {
        let rep = local_obstruction_scan(&f, bound)?;
        println!("{name}(x) = {f}");
        for e in rep.rho_values.iter().filter(|e| e.rho > 0) {
            println!("  r={:<3} rho={:<3} witness z={:?}", e.r, e.rho, e.witness);
        }
        println!(
            "  obstructions: {:?}, product over r <= {bound} ~ {:.6}\n",
            rep.obstruction_primes, rep.partial_product_approx
        );
    }

    let blocked = IntPoly::from_i64s(&[0, -1, 0, 1]);
    println!("x^3-x at r=2: rho = {} of 2 units", rho_f_r2(&blocked, 2)?);
    Ok(())
}
