//! Reciprocal polynomials and their half-degree companions.
//!
//! Run with `cargo run --example reciprocal_transform`.

use recipmono::poly::{chebyshev_c, half_to_reciprocal, reciprocal_to_half};
use recipmono::IntPoly;

fn main() -> recipmono::Result<()> {
    for j in 0..5 {
        println!("C_{j}(u) = {}", chebyshev_c(j));
    }

    let f: IntPoly = "x^4+3x^3+5x^2+3x+1".parse()?;
    let g = reciprocal_to_half(&f)?;
    println!("\nf = {f}\ng = {g}");
    let back = half_to_reciprocal(&g, 2)?;
    println!("round trip gives {back} (equal: {})", back == f);

    let f: IntPoly = "x^6+3x^3+1".parse()?;
    println!("\n{f} -> {}", reciprocal_to_half(&f)?);

    let g: IntPoly = "x^3+x^2-2x-1".parse()?;
    let f = half_to_reciprocal(&g, 3)?;
    println!("{g} -> {f} (reciprocal: {})", f.is_reciprocal());

    println!("\ncoefficient-array form: {}", f.to_json());
    println!("f(x^3) = {}", f.compose_power(3));
    Ok(())
}
