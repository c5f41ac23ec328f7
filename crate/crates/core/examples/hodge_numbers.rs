//! End to end: hypotheses, variable table and diamond of a cubic surface
//! and of an elliptic curve cut out by two quadrics.

use std::sync::Arc;

use toric_hodge::cli::diamond_table;
use toric_hodge::fan::{standard, Fan};
use toric_hodge::hodge::{compute_hodge, HodgeOptions};
use toric_hodge::ring::{parse_polynomial, RingSpec};

fn show(fan: &Fan, texts: &[&str]) {
    let ring = Arc::new(RingSpec::cox(fan, None).unwrap());
    let fs: Vec<_> = texts
        .iter()
        .map(|t| parse_polynomial(&ring, t).unwrap())
        .collect();
    let r = compute_hodge(fan, &fs, &[], &HodgeOptions::default()).unwrap();
    println!("{texts:?} via {:?}: {:?}", r.method, r.table.values());
    if let Some(d) = &r.diamond {
        print!("{}", diamond_table(d));
    }
    println!("chi = {:?}\n", r.euler_characteristic);
}

fn main() {
    let p3 = standard::projective_space(3);
    show(&p3, &["x1^3 + x2^3 + x3^3 + x4^3"]);
    show(
        &p3,
        &[
            "x1^2 + x2^2 + x3^2 + x4^2",
            "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2",
        ],
    );
}
