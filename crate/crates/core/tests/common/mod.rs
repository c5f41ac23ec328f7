#![allow(dead_code)]

pub mod oracles;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use toric_hodge::fan::Fan;
use toric_hodge::problem::{Problem, ProblemFile};
use toric_hodge::ring::{parse_polynomial, MultiPoly, RingSpec};

pub fn problems_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems")
}

pub fn problem_path(name: &str) -> String {
    problems_dir()
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

pub fn load(name: &str) -> Problem {
    ProblemFile::load(&problems_dir().join(format!("{name}.json")))
        .and_then(|f| f.resolve())
        .unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn polys(fan: &Fan, texts: &[&str]) -> Vec<MultiPoly> {
    let ring = Arc::new(RingSpec::cox(fan, None).unwrap());
    texts
        .iter()
        .map(|t| parse_polynomial(&ring, t).unwrap())
        .collect()
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Solves `x * a = b` for the rational row vector `x`, with `a` square and
/// invertible; `None` if singular.
fn solve_rows(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let n = a.len();
    // columns of the augmented system a^T x = b
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..n).map(|j| q(a[j][i])).collect();
            row.push(q(b[i]));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..=n {
                    let v = &m[c][k] * &f;
                    m[r][k] = &m[r][k] - v;
                }
            }
        }
    }
    Some(m.iter().map(|row| row[n].clone()).collect())
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Brute-force search for a lattice automorphism carrying the rays and cones
/// of `a` onto those of `b`: send the rays of the first cone of `a` to every
/// ordered cone of `b`, and test the induced linear map.
pub fn lattice_isomorphic(a: &Fan, b: &Fan) -> bool {
    let d = a.dim();
    if d != b.dim() || a.num_rays() != b.num_rays() || a.max_cones().len() != b.max_cones().len() {
        return false;
    }
    let src: Vec<Vec<i64>> = a.max_cones()[0]
        .iter()
        .map(|&i| a.rays()[i].clone())
        .collect();
    let b_cones: BTreeSet<BTreeSet<usize>> = b
        .max_cones()
        .iter()
        .map(|c| c.iter().copied().collect())
        .collect();
    for cone in b.max_cones() {
        for order in permutations(cone) {
            // rows of the map: image of e_k is Σ_i x_ik * target_i where src^T x = e_k
            let target: Vec<Vec<i64>> = order.iter().map(|&i| b.rays()[i].clone()).collect();
            let mut map = vec![vec![BigRational::zero(); d]; d];
            let mut ok = true;
            for k in 0..d {
                let mut e = vec![0; d];
                e[k] = 1;
                let Some(x) = solve_rows(&src, &e) else {
                    ok = false;
                    break;
                };
                for j in 0..d {
                    map[k][j] = (0..d)
                        .map(|i| &x[i] * q(target[i][j]))
                        .fold(BigRational::zero(), |s, t| s + t);
                }
            }
            if !ok || map.iter().flatten().any(|x| !x.is_integer()) {
                continue;
            }
            let image = |v: &[i64]| -> Vec<i64> {
                (0..d)
                    .map(|j| {
                        let s = (0..d)
                            .map(|k| &map[k][j] * q(v[k]))
                            .fold(BigRational::zero(), |s, t| s + t);
                        s.to_integer().try_into().unwrap()
                    })
                    .collect()
            };
            let ray_map: Option<Vec<usize>> = a
                .rays()
                .iter()
                .map(|r| b.rays().iter().position(|t| *t == image(r)))
                .collect();
            let Some(ray_map) = ray_map else { continue };
            let mapped: BTreeSet<BTreeSet<usize>> = a
                .max_cones()
                .iter()
                .map(|c| c.iter().map(|&i| ray_map[i]).collect())
                .collect();
            let inverse_exists = {
                // determinant ±1 via the images of a lattice basis
                let m: Vec<Vec<BigRational>> = map.clone();
                det(&m).abs().is_one()
            };
            if mapped == b_cones && inverse_exists {
                return true;
            }
        }
    }
    false
}

fn det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = BigRational::one();
    let mut acc = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(c, p);
            sign = -sign;
        }
        acc = acc * &a[c][c];
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &a[c][k] * &f;
                a[r][k] = &a[r][k] - v;
            }
        }
    }
    sign * acc
}
