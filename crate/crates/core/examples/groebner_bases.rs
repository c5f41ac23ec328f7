//! Reduced Groebner bases and radical membership.

use toric_hodge::groebner::{buchberger, plain_ring, radical_membership, MonomialOrder};
use toric_hodge::ring::parse_polynomial;

fn main() {
    let r = plain_ring(&["x", "y", "z"]);
    let gens: Vec<_> = ["x^2 + y^2 + z^2 - 1", "x - y", "z^2 - x"]
        .iter()
        .map(|t| parse_polynomial(&r, t).unwrap())
        .collect();
    for (name, order) in [
        ("grevlex", MonomialOrder::grevlex(3)),
        ("lex", MonomialOrder::lex(3)),
    ] {
        let gb = buchberger(&gens, &order);
        println!("{name}:");
        for g in &gb.elements {
            println!("  {g}");
        }
    }
    let x = parse_polynomial(&r, "x").unwrap();
    let sq = [parse_polynomial(&r, "x^3").unwrap()];
    println!("x in rad<x^3>: {}", radical_membership(&x, &sq).unwrap());
}
