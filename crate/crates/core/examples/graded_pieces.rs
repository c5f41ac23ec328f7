//! Graded pieces of Jacobian and colon rings of the Fermat quintic.

use std::sync::Arc;

use toric_hodge::cayley::build_cayley;
use toric_hodge::fan::standard;
use toric_hodge::ideal::{ambient_dim, colon_ring_dim, graded_ideal_dim, jacobian_ring_dim};
use toric_hodge::ring::{parse_polynomial, RingSpec};

fn main() {
    let fan = standard::projective_space(4);
    let ring = Arc::new(RingSpec::cox(&fan, None).unwrap());
    let f = parse_polynomial(&ring, "x1^5 + x2^5 + x3^5 + x4^5 + x5^5").unwrap();
    let partials: Vec<_> = (0..5).map(|i| f.partial_derivative(i)).collect();
    for k in [4, 5, 10, 15, 16] {
        let g = ring.group().element(vec![k], vec![]);
        println!("dim J_{k} = {}", graded_ideal_dim(&partials, &g).unwrap());
    }

    let setup = build_cayley(&fan, &[f]).unwrap();
    for p in 1..=4 {
        let g = setup.gamma(p);
        println!(
            "p = {p}: ambient {}, jacobian {}, colon {}",
            ambient_dim(&setup, &g).unwrap(),
            jacobian_ring_dim(&setup, &g).unwrap(),
            colon_ring_dim(&setup, &g).unwrap()
        );
    }
}
