//! Standalone check of the classical Jacobian ring of a quintic threefold,
//! `dim (S/J)_5 = dim (S/J)_10 = 101`, and of the Cayley Jacobian ring of two
//! (1,1,1) forms on (P^1)^3 in degree `3β - β₀`.

mod common;

use common::oracles::{cayley_polynomial, jacobian_quotient_dim, residues};
use toric_hodge::cayley::build_cayley;
use toric_hodge::ideal::jacobian_ring_dim;

#[test]
fn quintic_jacobian_ring_pieces() {
    for name in ["quintic_fermat", "quintic_sparse"] {
        let p = common::load(name);
        let f = residues(&p.polynomials[0]);
        let degrees = vec![vec![1]; 5];
        let r5 = jacobian_quotient_dim(&degrees, &f, &[5], 10);
        let r10 = jacobian_quotient_dim(&degrees, &f, &[10], 10);
        assert_eq!((r5, r10), (101, 101), "{name}");

        // the Cayley ring of a hypersurface reproduces the classical pieces
        let setup = build_cayley(&p.fan, &p.polynomials).unwrap();
        assert_eq!(
            jacobian_ring_dim(&setup, &setup.gamma(3)).unwrap(),
            r5,
            "{name}"
        );
        assert_eq!(
            jacobian_ring_dim(&setup, &setup.gamma(2)).unwrap(),
            r10,
            "{name}"
        );
    }
}

#[test]
fn three_lines_cayley_piece() {
    let p = common::load("p1p1p1_two_forms");
    let fs: Vec<_> = p.polynomials.iter().map(residues).collect();
    let f = cayley_polynomial(&fs);
    // x_{2k-1}, x_{2k} have degree e_k; y_j has degree (-1, -1, -1; 1)
    let mut degrees: Vec<Vec<i64>> = (0..6)
        .map(|i| (0..4).map(|k| i64::from(k == i / 2)).collect())
        .collect();
    degrees.extend([vec![-1, -1, -1, 1], vec![-1, -1, -1, 1]]);
    // β = (0; 1) and β₀ = (0; 2), so 3β - β₀ = (0; 1)
    let dim = jacobian_quotient_dim(&degrees, &f, &[0, 0, 0, 1], 2);
    assert_eq!(dim, 3);
    let setup = build_cayley(&p.fan, &p.polynomials).unwrap();
    assert_eq!(jacobian_ring_dim(&setup, &setup.gamma(2)).unwrap(), dim);
}
