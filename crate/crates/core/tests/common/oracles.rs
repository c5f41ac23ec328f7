//! Independent oracles shared by the test suites and the acceptance run.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use toric_hodge::abelian::{smith_normal_form, IntMatrix};
use toric_hodge::fan::{standard, Fan};
use toric_hodge::groebner::{buchberger, plain_ring, MonomialOrder};
use toric_hodge::ring::MultiPoly;
use toric_hodge::ring::{monomials_of_degree, RingSpec};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn minor(a: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> i128 {
    if rows.len() == 1 {
        return a[rows[0]][cols[0]] as i128;
    }
    let mut acc = 0i128;
    for (j, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a[rows[0]][c] as i128 * minor(a, &rows[1..], &rest);
        acc += if j % 2 == 0 { term } else { -term };
    }
    acc
}

fn invariant_factors(a: &[Vec<i64>]) -> Vec<i128> {
    let (m, n) = (a.len(), a[0].len());
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=m.min(n) {
        let mut g = 0i128;
        for rows in subsets(m, k) {
            for cols in subsets(n, k) {
                g = g.gcd(&minor(a, &rows, &cols));
            }
        }
        if g == 0 {
            out.extend(std::iter::repeat(0).take(m.min(n) - k + 1));
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// Smith normal form against determinantal divisors on 200 random matrices:
/// the k-th invariant factor is `d_k / d_{k-1}`, where `d_k` is the gcd of
/// all k×k minors.
pub fn snf_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..200 {
        let m = rng.gen_range(1..=5);
        let n = rng.gen_range(1..=5);
        let sparse = rng.gen_bool(0.3);
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if sparse && rng.gen_bool(0.5) {
                            0
                        } else {
                            rng.gen_range(-9..=9)
                        }
                    })
                    .collect()
            })
            .collect();
        let a = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s, "case {case}: U A V != S");
        assert!(snf.s.is_diagonal(), "case {case}");
        assert_eq!(
            snf.u.determinant().abs(),
            BigInt::from(1),
            "case {case}: U not unimodular"
        );
        assert_eq!(
            snf.v.determinant().abs(),
            BigInt::from(1),
            "case {case}: V not unimodular"
        );
        assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(m), "case {case}");
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            assert!(w[0] >= BigInt::zero());
            assert!(
                w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])),
                "case {case}: chain {diag:?}"
            );
        }
        let expected: Vec<BigInt> = invariant_factors(&rows)
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(diag, expected, "case {case}: {rows:?}");
    }
}

const BOX: u32 = 6;

fn fans() -> Vec<(&'static str, Fan)> {
    vec![
        ("P2", standard::projective_space(2)),
        ("P3", standard::projective_space(3)),
        ("P1xP1", standard::product_of_lines(2)),
        ("F1", standard::hirzebruch_one()),
        ("P(1,2,1)", standard::weighted_plane_112()),
        // P^2 / μ_3: Chow group Z ⊕ Z/3
        (
            "P2/mu3",
            Fan::new(
                2,
                vec![vec![2, -1], vec![-1, 2], vec![-1, -1]],
                vec![vec![0, 1], vec![1, 2], vec![0, 2]],
            )
            .unwrap(),
        ),
    ]
}

fn brute_force(ring: &RingSpec, gamma: &toric_hodge::abelian::GroupElement) -> Vec<Vec<u32>> {
    let n = ring.arity();
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        if ring.monomial_degree(&e) == *gamma {
            out.push(e.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if e[i] < BOX {
                e[i] += 1;
                break;
            }
            e[i] = 0;
        }
    }
}

/// Monomials of 50 random degrees against a brute-force scan of a box.
pub fn enumeration_suite() {
    let fans = fans();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut torsion_seen = false;
    for case in 0..50 {
        let (name, fan) = &fans[case % fans.len()];
        let ring = Arc::new(RingSpec::cox(fan, None).unwrap());
        // weights are at most 2 here, so every monomial of these degrees fits in the box
        let seed: Vec<u32> = (0..ring.arity()).map(|_| rng.gen_range(0..=1)).collect();
        let mut gamma = ring.monomial_degree(&seed);
        if rng.gen_bool(0.2) {
            let i = rng.gen_range(0..ring.arity());
            gamma = ring.group().sub(&gamma, &ring.degrees()[i]);
        }
        torsion_seen |= !gamma.torsion.is_empty() && gamma.torsion.iter().any(|&t| t != 0);
        let got = monomials_of_degree(&ring, &gamma).unwrap();
        assert_eq!(
            got,
            brute_force(&ring, &gamma),
            "case {case} on {name}, degree {gamma}"
        );
    }
    assert!(torsion_seen, "no case exercised a torsion degree");
}

fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: &std::sync::Arc<toric_hodge::ring::RingSpec>,
) -> MultiPoly {
    let terms = (0..rng.gen_range(1..=3)).map(|_| {
        let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
        let c = BigRational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into());
        (e, c)
    });
    MultiPoly::from_terms(ring, terms)
}

/// Reduced Gröbner bases of 20 random ideals must not depend on the order
/// or redundancy of the generators.
pub fn groebner_suite() {
    let ring = plain_ring(&["x", "y", "z"]);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut nontrivial = 0;
    for case in 0..20 {
        let gens: Vec<MultiPoly> = (0..rng.gen_range(2..=3))
            .map(|_| random_poly(&mut rng, &ring))
            .collect();
        for order in [MonomialOrder::grevlex(3), MonomialOrder::lex(3)] {
            let gb = buchberger(&gens, &order);
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut rng);
            assert_eq!(
                buchberger(&shuffled, &order),
                gb,
                "case {case}: permutation changed the basis"
            );
            // adding a redundant combination changes nothing either
            let extra = &(&gens[0] * &gens[1]) + &gens[0];
            shuffled.push(extra);
            assert_eq!(
                buchberger(&shuffled, &order),
                gb,
                "case {case}: redundant generator"
            );
            for g in &gens {
                assert!(gb.contains(g), "case {case}: {g} not reduced to zero");
            }
            if !gb.is_unit() && !gb.is_zero_ideal() {
                nontrivial += 1;
            }
        }
    }
    assert!(nontrivial >= 10, "only {nontrivial} proper ideals");
}

const P: u64 = 2_147_483_647;

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % P;
        }
        a = a * a % P;
        e >>= 1;
    }
    r
}

fn residue(x: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r: BigInt = ((x % &p) + &p) % &p;
    u64::try_from(r).unwrap()
}

/// Terms of `f` with coefficients reduced modulo a 31-bit prime.
pub fn residues(f: &MultiPoly) -> Vec<(Vec<u32>, u64)> {
    f.terms()
        .iter()
        .map(|(e, c)| {
            (
                e.clone(),
                residue(c.numer()) * pow_mod(residue(c.denom()), P - 2) % P,
            )
        })
        .collect()
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize) -> usize {
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = pow_mod(rows[rank][c], P - 2);
        let pivot: Vec<u64> = rows[rank].iter().map(|&x| x * inv % P).collect();
        for r in rank + 1..rows.len() {
            let f = rows[r][c];
            if f != 0 {
                for k in c..ncols {
                    rows[r][k] = (rows[r][k] + P - f * pivot[k] % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exponent vectors in `[0, bound]^n` whose degree `Σ e_i·degrees[i]` is `delta`.
fn box_monomials(degrees: &[Vec<i64>], delta: &[i64], bound: u32) -> Vec<Vec<u32>> {
    let n = degrees.len();
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        let deg: Vec<i64> = (0..delta.len())
            .map(|k| (0..n).map(|i| e[i] as i64 * degrees[i][k]).sum())
            .collect();
        if deg == delta {
            out.push(e.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if e[i] < bound {
                e[i] += 1;
                break;
            }
            e[i] = 0;
        }
    }
}

/// `dim (S/J)_δ` where `J` is generated by the partials of `f`, for the
/// polynomial ring graded by the explicit variable degrees. Monomials are
/// found by scanning `[0, bound]^n`, which must contain every monomial of
/// the degrees involved.
pub fn jacobian_quotient_dim(
    degrees: &[Vec<i64>],
    f: &[(Vec<u32>, u64)],
    delta: &[i64],
    bound: u32,
) -> usize {
    let n = degrees.len();
    let cols = box_monomials(degrees, delta, bound);
    let index: std::collections::HashMap<&Vec<u32>, usize> =
        cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for v in 0..n {
        let partial: Vec<(Vec<u32>, u64)> = f
            .iter()
            .filter(|(e, _)| e[v] > 0)
            .map(|(e, c)| {
                let mut d = e.clone();
                d[v] -= 1;
                (d, c * e[v] as u64 % P)
            })
            .collect();
        let Some((e0, _)) = partial.first() else {
            continue;
        };
        let dp: Vec<i64> = (0..delta.len())
            .map(|k| (0..n).map(|i| e0[i] as i64 * degrees[i][k]).sum())
            .collect();
        let rest: Vec<i64> = delta.iter().zip(&dp).map(|(a, b)| a - b).collect();
        for m in box_monomials(degrees, &rest, bound) {
            let mut row = vec![0u64; cols.len()];
            for (e, c) in &partial {
                let prod: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                let j = index[&prod];
                row[j] = (row[j] + c) % P;
            }
            rows.push(row);
        }
    }
    cols.len() - rank_mod_p(rows, cols.len())
}

/// `y_1 f_1 + … + y_s f_s` with the `y` variables appended.
pub fn cayley_polynomial(fs: &[Vec<(Vec<u32>, u64)>]) -> Vec<(Vec<u32>, u64)> {
    let s = fs.len();
    let mut out = Vec::new();
    for (j, f) in fs.iter().enumerate() {
        for (e, c) in f {
            let mut e = e.clone();
            e.extend((0..s).map(|k| u32::from(k == j)));
            out.push((e, *c));
        }
    }
    out
}
