//! The degree-10 family: primes p with h(p) squarefree, and the verdicts for
//! the decic and its quintic companion.
//!
//! Run with `cargo run --release --example decic_primes -- 100`.

use num_bigint::BigInt;
use recipmono::arith::Effort;
use recipmono::families::{decic_family, decic_prime_scan, SweepOptions};

fn main() -> recipmono::Result<()> {
    let pmax: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100);

    let m = decic_family(&BigInt::from(3));
    println!("f_3 = {}\ng_3 = {}\nh(3) = {}\n", m.f, m.g, m.h_value);

    let rows = decic_prime_scan(pmax, &Effort::default(), &SweepOptions::default())?;
    for r in &rows {
        println!(
            "p={:<4} h(p) {:<15} f:{:?} g:{:?} {}",
            r.p,
            r.h_squarefree.label(),
            r.f_verdict,
            r.g_verdict,
            r.g_galois.as_deref().unwrap_or("")
        );
    }
    let listed: Vec<u64> = rows.iter().filter(|r| r.listed).map(|r| r.p).collect();
    println!("\nprimes <= {pmax} with h(p) squarefree: {listed:?}");
    Ok(())
}
