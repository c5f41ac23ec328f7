//! Parsing polynomials in a Cox ring and counting graded pieces.

use std::sync::Arc;

use toric_hodge::fan::standard;
use toric_hodge::ring::{degree_of, monomials_of_degree, parse_polynomial, RingSpec};

fn main() {
    let fan = standard::product_of_lines(2);
    let ring = Arc::new(RingSpec::cox(&fan, None).unwrap());
    let f = parse_polynomial(&ring, "x1*x3 - 2*x2*x4 + 1/3*x1*x4").unwrap();
    println!("f = {f}");
    println!("deg f = {}", degree_of(&f).unwrap());
    println!("df/dx1 = {}", f.partial_derivative(0));

    for a in 0..3 {
        for b in 0..3 {
            let g = ring.group().element(vec![a, b], vec![]);
            let n = monomials_of_degree(&ring, &g).unwrap().len();
            print!("{n:>3}");
        }
        println!();
    }

    let g = parse_polynomial(&ring, "x1^2 + x3").unwrap();
    println!("deg({g}): {}", degree_of(&g).unwrap_err());
}
