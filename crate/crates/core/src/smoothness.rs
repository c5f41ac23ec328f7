//! Decision procedures for quasi-smoothness and nondegeneracy.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{irrelevant_generators, Fan};
use crate::groebner::{is_unit_ideal, radical_membership};
use crate::ring::{degree_of, MultiPoly, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum QuasiSmoothVerdict {
    QuasiSmooth,
    /// `V(f_1, …, f_s)` lies inside the irrelevant locus.
    QuasiSmoothEmpty,
    /// The singular locus is not contained in `Z(Σ)`: this generator of
    /// `B(Σ)` is not in the radical.
    NotQuasiSmooth {
        generator: String,
    },
}

impl QuasiSmoothVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, QuasiSmoothVerdict::NotQuasiSmooth { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum NondegenerateVerdict {
    /// `empty_strata` counts the (cone, subset) pairs whose stratum
    /// intersection is empty; those pass.
    Nondegenerate {
        strata_checked: usize,
        empty_strata: usize,
    },
    Degenerate {
        cone: Vec<usize>,
        subset: Vec<usize>,
    },
}

impl NondegenerateVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, NondegenerateVerdict::Nondegenerate { .. })
    }
}

fn check_inputs(fan: &Fan, fs: &[MultiPoly]) -> Result<Arc<RingSpec>> {
    let first = fs.first().ok_or(Error::EmptySystem)?;
    let ring = Arc::clone(first.ring());
    if ring.arity() != fan.num_rays() {
        return Err(Error::Malformed(format!(
            "ring has {} variables but the fan has {} rays",
            ring.arity(),
            fan.num_rays()
        )));
    }
    for f in fs {
        degree_of(f)?;
    }
    Ok(ring)
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
fn poly_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(m[0][0].ring());
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &poly_det(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Nonzero, pairwise distinct maximal minors of the Jacobian of `fs` with
/// respect to `vars`.
pub fn jacobian_minors(fs: &[MultiPoly], vars: &[usize]) -> Vec<MultiPoly> {
    let k = fs.len();
    let jac: Vec<Vec<MultiPoly>> = fs
        .iter()
        .map(|f| vars.iter().map(|&v| f.partial_derivative(v)).collect())
        .collect();
    let mut out: Vec<MultiPoly> = Vec::new();
    for cols in subsets(&(0..vars.len()).collect::<Vec<_>>(), k) {
        let m: Vec<Vec<MultiPoly>> = jac
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        let d = poly_det(&m);
        if !d.is_zero() && !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

fn monomial_of(ring: &Arc<RingSpec>, vars: &[usize]) -> MultiPoly {
    let mut p = MultiPoly::one(ring);
    for &v in vars {
        p = &p * &MultiPoly::variable(ring, v);
    }
    p
}

/// Quasi-smooth iff every generator `x̂_σ` of `B(Σ)` lies in the radical of
/// `⟨f_j⟩ + ⟨s×s minors of the Jacobian⟩`.
///
/// The group `G` acts on the coordinates outside a simplicial cone `σ`
/// through a surjection onto their torus, so every point with `x̂_σ ≠ 0`
/// can be moved to one with those coordinates equal to 1. The radical test
/// for `x̂_σ` is therefore the unit-ideal test after that substitution.
pub fn quasi_smooth_check(fan: &Fan, fs: &[MultiPoly]) -> Result<QuasiSmoothVerdict> {
    let ring = check_inputs(fan, fs)?;
    let vars: Vec<usize> = (0..ring.arity()).collect();
    let mut ideal: Vec<MultiPoly> = fs.to_vec();
    ideal.extend(jacobian_minors(fs, &vars));
    let b = irrelevant_generators(fan);
    let chart = |gens: &[MultiPoly], outside: &[usize]| -> bool {
        let local: Vec<MultiPoly> = gens.iter().map(|g| g.substitute_one(outside)).collect();
        is_unit_ideal(&local)
    };
    let singular: Vec<bool> = b.generators.par_iter().map(|g| !chart(&ideal, g)).collect();
    if let Some(k) = singular.iter().position(|&x| x) {
        return Ok(QuasiSmoothVerdict::NotQuasiSmooth {
            generator: monomial_of(&ring, &b.generators[k]).to_string(),
        });
    }
    let empty: Vec<bool> = b.generators.par_iter().map(|g| chart(fs, g)).collect();
    if empty.iter().all(|&x| x) {
        return Ok(QuasiSmoothVerdict::QuasiSmoothEmpty);
    }
    Ok(QuasiSmoothVerdict::QuasiSmooth)
}

/// One stratum test: on the torus orbit of `cone`, the equations indexed by
/// `subset` cut out a smooth subvariety of codimension `|subset|` or
/// nothing. `chart` is a maximal cone containing `cone`; coordinates outside
/// it are set to 1 as in [`quasi_smooth_check`]. Returns `(passes, empty)`.
fn stratum_ok(
    ring: &Arc<RingSpec>,
    fs: &[MultiPoly],
    cone: &[usize],
    chart: &[usize],
    subset: &[usize],
) -> Result<(bool, bool)> {
    let survivors: Vec<usize> = (0..ring.arity()).filter(|i| !cone.contains(i)).collect();
    let outside: Vec<usize> = (0..ring.arity()).filter(|i| !chart.contains(i)).collect();
    let torus_vars: Vec<usize> = chart
        .iter()
        .copied()
        .filter(|i| !cone.contains(i))
        .collect();
    let restricted: Vec<MultiPoly> = subset
        .iter()
        .map(|&j| fs[j].substitute_zero(cone))
        .collect();
    let mut system = restricted.clone();
    system.extend(jacobian_minors(&restricted, &survivors));
    let local = |gens: &[MultiPoly]| -> Vec<MultiPoly> {
        gens.iter().map(|g| g.substitute_one(&outside)).collect()
    };
    let avoids_torus = |gens: Vec<MultiPoly>| -> Result<bool> {
        if torus_vars.is_empty() {
            Ok(is_unit_ideal(&gens))
        } else {
            radical_membership(&monomial_of(ring, &torus_vars), &gens)
        }
    };
    if !avoids_torus(local(&system))? {
        return Ok((false, false));
    }
    Ok((true, avoids_torus(local(&restricted))?))
}

/// Checks every cone `τ` (the zero cone included) against every nonempty
/// subset `J`, in the order cones by dimension then lexicographically,
/// subsets by size then lexicographically. Reports the first failure.
pub fn nondegenerate_check(fan: &Fan, fs: &[MultiPoly]) -> Result<NondegenerateVerdict> {
    let ring = check_inputs(fan, fs)?;
    let s = fs.len();
    let all: Vec<usize> = (0..s).collect();
    let mut tasks: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> = Vec::new();
    for cone in fan.all_cones() {
        let chart = fan
            .max_cones()
            .iter()
            .find(|m| cone.iter().all(|i| m.contains(i)))
            .expect("faces lie in a maximal cone");
        for k in 1..=s {
            for subset in subsets(&all, k) {
                tasks.push((cone.clone(), chart.clone(), subset));
            }
        }
    }
    let results: Vec<(bool, bool)> = tasks
        .par_iter()
        .map(|(cone, chart, subset)| stratum_ok(&ring, fs, cone, chart, subset))
        .collect::<Result<_>>()?;
    if let Some(k) = results.iter().position(|(ok, _)| !ok) {
        let (cone, _, subset) = tasks[k].clone();
        return Ok(NondegenerateVerdict::Degenerate { cone, subset });
    }
    Ok(NondegenerateVerdict::Nondegenerate {
        strata_checked: tasks.len(),
        empty_strata: results.iter().filter(|(_, empty)| *empty).count(),
    })
}
