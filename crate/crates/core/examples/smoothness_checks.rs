//! Quasi-smoothness and nondegeneracy verdicts, with witnesses.

use std::sync::Arc;

use toric_hodge::fan::{standard, Fan};
use toric_hodge::ring::{parse_polynomial, RingSpec};
use toric_hodge::smoothness::{nondegenerate_check, quasi_smooth_check};

fn report(label: &str, fan: &Fan, texts: &[&str]) {
    let ring = Arc::new(RingSpec::cox(fan, None).unwrap());
    let fs: Vec<_> = texts
        .iter()
        .map(|t| parse_polynomial(&ring, t).unwrap())
        .collect();
    println!("{label}");
    println!("  {:?}", quasi_smooth_check(fan, &fs).unwrap());
    println!("  {:?}", nondegenerate_check(fan, &fs).unwrap());
}

fn main() {
    report(
        "Fermat cubic curve",
        &standard::projective_space(2),
        &["x1^3 + x2^3 + x3^3"],
    );
    report(
        "quadric cone in P^3",
        &standard::projective_space(3),
        &["x1^2 + x2^2 + x3^2"],
    );
    report(
        "conic through a fixed point",
        &standard::projective_space(2),
        &["x1^2 + x2^2 + x2*x3"],
    );
    report(
        "two quadrics, one through [0:0:0:1]",
        &standard::projective_space(3),
        &["x1^2 + x2^2 + x3^2 + x4^2", "x1^2 + 2*x2^2 + 3*x3^2"],
    );
}
