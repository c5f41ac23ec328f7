//! The Cayley ring, polynomial and fan of two quadrics in P^3.

use std::sync::Arc;

use toric_hodge::cayley::build_cayley;
use toric_hodge::fan::{standard, toric_betti};
use toric_hodge::ring::{parse_polynomial, RingSpec};

fn main() {
    let fan = standard::projective_space(3);
    let ring = Arc::new(RingSpec::cox(&fan, None).unwrap());
    let fs: Vec<_> = [
        "x1^2 + x2^2 + x3^2 + x4^2",
        "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2",
    ]
    .iter()
    .map(|t| parse_polynomial(&ring, t).unwrap())
    .collect();
    let setup = build_cayley(&fan, &fs).unwrap();
    println!("F = {}", setup.polynomial());
    println!("beta = {}, beta0 = {}", setup.beta(), setup.beta0());
    for p in setup.codim()..=setup.dim() {
        println!("gamma_{p} = {}", setup.gamma(p));
    }
    let cf = setup.cayley_fan().expect("two bundles give a Cayley fan");
    println!(
        "Cayley fan: {} rays, {} cones, betti {:?}",
        cf.num_rays(),
        cf.max_cones().len(),
        toric_betti(cf)
    );
}
