//! Graded pieces of the Jacobian ring `R(F)` and of the colon ring
//! `R₁(F)`, by ranks of monomial-multiple matrices.

use std::collections::HashMap;

use crate::abelian::GroupElement;
use crate::cayley::CayleySetup;
use crate::error::Result;
use crate::linalg::{rank, SparseMatrix};
use crate::ring::{degree_of, monomials_of_degree, mul_exponents, Exponent, MultiPoly};

/// Rows `m·g` for every generator `g` and monomial `m` of degree
/// `γ - deg g`, written in the monomial basis of degree `γ`.
pub fn ideal_matrix(
    gens: &[MultiPoly],
    gamma: &GroupElement,
) -> Result<(SparseMatrix, Vec<Exponent>)> {
    let gens: Vec<&MultiPoly> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = gens.first() else {
        return Ok((SparseMatrix::new(0), Vec::new()));
    };
    let ring = first.ring();
    let group = ring.group();
    let basis = monomials_of_degree(ring, gamma)?;
    let index: HashMap<&Exponent, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut m = SparseMatrix::new(basis.len());
    for g in gens {
        let dg = degree_of(g)?;
        for mult in monomials_of_degree(ring, &group.sub(gamma, &dg))? {
            let row = g
                .terms()
                .iter()
                .map(|(e, c)| (index[&mul_exponents(e, &mult)], c.clone()))
                .collect();
            m.push_row(row);
        }
    }
    Ok((m, basis))
}

/// `dim ⟨gens⟩_γ`.
pub fn graded_ideal_dim(gens: &[MultiPoly], gamma: &GroupElement) -> Result<usize> {
    let (m, _) = ideal_matrix(gens, gamma)?;
    Ok(rank(&m))
}

/// All `n + s` partial derivatives of `F`.
pub fn jacobian_generators(setup: &CayleySetup) -> Vec<MultiPoly> {
    let f = setup.polynomial();
    (0..setup.ring().arity())
        .map(|k| f.partial_derivative(k))
        .collect()
}

/// `z_k ∂F/∂z_k` for every variable of `R`.
pub fn log_jacobian_generators(setup: &CayleySetup) -> Vec<MultiPoly> {
    let ring = setup.ring();
    let f = setup.polynomial();
    (0..ring.arity())
        .map(|k| &MultiPoly::variable(ring, k) * &f.partial_derivative(k))
        .collect()
}

/// `dim R_γ`.
pub fn ambient_dim(setup: &CayleySetup, gamma: &GroupElement) -> Result<usize> {
    Ok(monomials_of_degree(setup.ring(), gamma)?.len())
}

/// `dim R(F)_γ`.
pub fn jacobian_ring_dim(setup: &CayleySetup, gamma: &GroupElement) -> Result<usize> {
    let total = ambient_dim(setup, gamma)?;
    if total == 0 {
        return Ok(0);
    }
    Ok(total - graded_ideal_dim(&jacobian_generators(setup), gamma)?)
}

/// `dim R₁(F)_γ` with `J₁(F) = ⟨z_k ∂F/∂z_k⟩ : z_1⋯z_{n+s}`.
///
/// Multiplication by `Π z_k` identifies `R_γ` with the span of the degree
/// `γ + β₀` monomials divisible by every variable, so `dim (J₁)_γ` is the
/// dimension of the ideal piece in degree `γ + β₀` meeting that coordinate
/// subspace: `rank(M) - rank(M restricted to the other columns)`.
pub fn colon_ring_dim(setup: &CayleySetup, gamma: &GroupElement) -> Result<usize> {
    let total = ambient_dim(setup, gamma)?;
    if total == 0 {
        return Ok(0);
    }
    let group = setup.ring().group();
    let shifted = group.add(gamma, setup.beta0());
    let (m, basis) = ideal_matrix(&log_jacobian_generators(setup), &shifted)?;
    let keep: Vec<bool> = basis.iter().map(|e| e.iter().any(|&x| x == 0)).collect();
    let full = rank(&m);
    let outside = rank(&m.restrict_columns(&keep));
    Ok(total - (full - outside))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cayley::build_cayley;
    use crate::fan::standard;
    use crate::ring::{parse_polynomial, RingSpec};

    fn setup(fan: &crate::fan::Fan, polys: &[&str]) -> CayleySetup {
        let ring = Arc::new(RingSpec::cox(fan, None).unwrap());
        let fs: Vec<MultiPoly> = polys
            .iter()
            .map(|p| parse_polynomial(&ring, p).unwrap())
            .collect();
        build_cayley(fan, &fs).unwrap()
    }

    #[test]
    fn trivial_ideals() {
        let fan = standard::projective_space(2);
        let ring = Arc::new(RingSpec::cox(&fan, None).unwrap());
        let x1 = parse_polynomial(&ring, "x1").unwrap();
        let one = ring.group().element(vec![1], vec![]);
        assert_eq!(graded_ideal_dim(&[x1], &one).unwrap(), 1);
        assert_eq!(graded_ideal_dim(&[], &one).unwrap(), 0);
    }

    #[test]
    fn fermat_quintic_pieces() {
        let c = setup(
            &standard::projective_space(4),
            &["x1^5 + x2^5 + x3^5 + x4^5 + x5^5"],
        );
        let g = c.ring().group();
        let two = g.sub(&g.scale(2, c.beta()), c.beta0());
        let three = g.sub(&g.scale(3, c.beta()), c.beta0());
        let one = g.sub(c.beta(), c.beta0());
        assert_eq!(ambient_dim(&c, &two).unwrap(), 126);
        assert_eq!(
            graded_ideal_dim(&jacobian_generators(&c), &two).unwrap(),
            25
        );
        assert_eq!(ambient_dim(&c, &three).unwrap(), 1001);
        assert_eq!(
            graded_ideal_dim(&jacobian_generators(&c), &three).unwrap(),
            900
        );
        assert_eq!(jacobian_ring_dim(&c, &one).unwrap(), 1);
        assert_eq!(jacobian_ring_dim(&c, &two).unwrap(), 101);
        assert_eq!(colon_ring_dim(&c, &two).unwrap(), 101);
        assert_eq!(colon_ring_dim(&c, &one).unwrap(), 1);
        let empty = g.scale(-1, c.beta0());
        assert_eq!(colon_ring_dim(&c, &g.sub(&empty, c.beta())).unwrap(), 0);
    }

    #[test]
    fn quadric_pair_pieces() {
        let c = setup(
            &standard::projective_space(3),
            &["x1^2 + x2^2 + x3^2 + x4^2", "x1^2 + 2*x2^2 + 3*x3^2"],
        );
        assert_eq!(jacobian_ring_dim(&c, &c.gamma(3)).unwrap(), 1);
        assert_eq!(colon_ring_dim(&c, &c.gamma(3)).unwrap(), 1);
        assert_eq!(jacobian_ring_dim(&c, &c.gamma(2)).unwrap(), 1);
    }
}
