//! Whether a prime divides the index `[Z_K : Z[θ]]`, decided two ways.
//!
//! Run with `cargo run --example index_criterion`.

use recipmono::arith::Effort;
use recipmono::monogenic::{
    dedekind_index_detail, ideal_square_membership, ideal_square_witnesses, is_monogenic,
    power_compositional_check, sufficient_reciprocal_monogenic,
};
use recipmono::poly::half_to_reciprocal;
use recipmono::IntPoly;

fn main() -> recipmono::Result<()> {
    let effort = Effort::default();

    let f: IntPoly = "x^10+7x^8+16x^6+2x^5+16x^4+7x^2+1".parse()?;
    let t = dedekind_index_detail(&f, 5)?;
    println!("{f}\n  p=5: {:?}, gcd = {}", t.verdict, t.common_factor);
    let m = ideal_square_membership(&f, 5, &"x-1".parse()?)?;
    println!("  in <5, x-1>^2: {}", m.member);

    let f: IntPoly = "x^10+26x^8+73x^6+21x^5+73x^4+26x^2+1".parse()?;
    for w in ideal_square_witnesses(&f, 29)? {
        println!("{f}\n  in <29, {}>^2 (verified: {})", w.h, w.verify(&f));
    }

    let g: IntPoly = "x^4+x^3-3x^2+26x+57".parse()?;
    let f = half_to_reciprocal(&g, 4)?;
    println!("\nf = {f}: 11 divides the index: {}", dedekind_index_detail(&f, 11)?.verdict.divides());

    let f: IntPoly = "x^6+x^5+3x^4+5x^3+3x^2+x+1".parse()?;
    let rep = is_monogenic(&f, &effort)?;
    println!("\n{f}: disc {} -> {:?}", rep.disc, rep.verdict);

    let f: IntPoly = "x^6+3x^3+1".parse()?;
    let s = sufficient_reciprocal_monogenic(&f, &effort)?;
    println!("{f}: {:?}", s.verdict);

    let f: IntPoly = "x^4+3x^3+5x^2+3x+1".parse()?;
    for k in [3, 9] {
        let r = power_compositional_check(&f, k, &effort)?;
        println!("f(x^{k}) with f = {f}: {:?}", r.verdict);
    }
    Ok(())
}
