mod common;

use std::sync::Arc;

use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_hodge::cayley::build_cayley;
use toric_hodge::fan::{standard, toric_betti, validate_fan, Fan};
use toric_hodge::groebner::plain_ring;
use toric_hodge::ring::{degree_of, monomials_of_degree, MultiPoly, RingSpec};

fn poly_strategy() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), -6i64..=6), 0..5)
}

fn build(terms: &[(Vec<u32>, i64)]) -> MultiPoly {
    let ring = plain_ring(&["x", "y", "z"]);
    MultiPoly::from_terms(
        &ring,
        terms
            .iter()
            .map(|(e, c)| (e.clone(), BigRational::from_integer((*c).into()))),
    )
}

proptest! {
    #[test]
    fn leibniz_rule(f in poly_strategy(), g in poly_strategy(), v in 0usize..3) {
        let (f, g) = (build(&f), build(&g));
        let lhs = (&f * &g).partial_derivative(v);
        let rhs = &(&f.partial_derivative(v) * &g) + &(&f * &g.partial_derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_axioms(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
        let (f, g, h) = (build(&f), build(&g), build(&h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn betti_numbers_are_palindromic(a in 1usize..4, b in 0usize..3, which in 0usize..3) {
        let fan = match which {
            0 => standard::projective_space(a),
            1 => standard::product_of_lines(a + b),
            _ => product(&standard::projective_space(a), &standard::projective_space(b.max(1))),
        };
        prop_assert!(validate_fan(&fan).is_valid());
        let betti = toric_betti(&fan);
        let rev: Vec<u64> = betti.iter().rev().copied().collect();
        prop_assert_eq!(&betti, &rev);
        prop_assert!(betti.iter().skip(1).step_by(2).all(|&x| x == 0));
        // Euler characteristic of a complete simplicial toric variety
        prop_assert_eq!(betti.iter().sum::<u64>() as usize, fan.max_cones().len());
    }
}

fn product(a: &Fan, b: &Fan) -> Fan {
    let (da, db) = (a.dim(), b.dim());
    let mut rays: Vec<Vec<i64>> = a
        .rays()
        .iter()
        .map(|r| {
            r.iter()
                .copied()
                .chain(std::iter::repeat(0).take(db))
                .collect()
        })
        .collect();
    rays.extend(b.rays().iter().map(|r| {
        std::iter::repeat(0)
            .take(da)
            .chain(r.iter().copied())
            .collect::<Vec<i64>>()
    }));
    let na = a.num_rays();
    let mut cones = Vec::new();
    for ca in a.max_cones() {
        for cb in b.max_cones() {
            cones.push(
                ca.iter()
                    .copied()
                    .chain(cb.iter().map(|i| i + na))
                    .collect(),
            );
        }
    }
    Fan::new(da + db, rays, cones).unwrap()
}

/// The Cayley fan grading and the formal grading by `A ⊕ Z` give the same
/// graded dimensions, degree by degree.
#[test]
fn formal_and_fan_gradings_agree() {
    for name in ["quadric_pair_diagonal", "p1p1p1_two_forms"] {
        let p = common::load(name);
        let setup = build_cayley(&p.fan, &p.polynomials).unwrap();
        assert!(setup.cayley_fan().is_some());
        let ring = setup.ring();
        let formal = Arc::new(
            RingSpec::new(
                ring.names().to_vec(),
                setup.formal_degrees().to_vec(),
                setup.split_group().clone(),
            )
            .unwrap(),
        );
        let beta = setup.split(setup.beta());
        assert_eq!(
            beta.free.last(),
            Some(&1),
            "{name}: beta must split as (0, 1)"
        );
        assert!(beta.free[..beta.free.len() - 1].iter().all(|&x| x == 0));
        assert_eq!(&degree_of(setup.polynomial()).unwrap(), setup.beta());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let e: Vec<u32> = (0..ring.arity()).map(|_| rng.gen_range(0..3)).collect();
            let g = ring.monomial_degree(&e);
            let a = monomials_of_degree(ring, &g).unwrap().len();
            let b = monomials_of_degree(&formal, &setup.split(&g))
                .unwrap()
                .len();
            assert_eq!(a, b, "{name}: degree {g}");
        }
    }
}
