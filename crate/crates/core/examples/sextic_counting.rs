//! Counting sextic family members with H(a) squarefree.
//!
//! Run with `cargo run --release --example sextic_counting -- 1000`.

use num_bigint::BigInt;
use recipmono::arith::Effort;
use recipmono::families::{
    count_lf, count_mh, count_nh, sextic_disc_poly, sextic_family, LfMode, LfRange, SweepOptions,
};

fn main() -> recipmono::Result<()> {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);
    let effort = Effort::default();
    let opts = SweepOptions::default();

    for a in -1..=1 {
        let m = sextic_family(&BigInt::from(a));
        println!("a={a}: f = {}, g = {}, H(a) = {}", m.f, m.g, m.h_value);
    }

    let lemma = count_lf(n, LfMode::Lemma, LfRange::Symmetric, &effort, &opts)?;
    let floor = n as f64 / (n as f64).ln();
    println!("\nL_f({n}) by squarefree H(a): {} (N/log N = {floor:.1})", lemma.count);
    let full = count_lf(n.min(200), LfMode::Full, LfRange::Symmetric, &effort, &opts)?;
    println!("L_f({}) by full decision: {}", n.min(200), full.count);

    let h = sextic_disc_poly();
    let mh = count_mh(n, &h, &effort, &opts)?;
    let nh = count_nh(n, &h, &effort, &opts)?;
    println!("M_H({n}) = {}, N_H({n}) = {}", mh.count, nh.count);
    Ok(())
}
