//! Complete simplicial fans: validation, the Chow-group grading of the Cox
//! ring, the irrelevant ideal, Cartier data and ampleness, Betti numbers,
//! and the fan of a projectivized sum of line bundles.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::abelian::{self, AbelianGroup, Cokernel, GroupElement, IntMatrix};
use crate::error::{Error, Result};
use crate::linalg::solve_square;
use crate::lp::{self, Constraint, Relation};

/// A rational fan given by primitive ray generators and its maximal cones
/// (sets of ray indices). Matches the JSON schema
/// `{"lattice_rank": d, "rays": [[..]..], "max_cones": [[..]..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    lattice_rank: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Structural construction only: ray lengths and index ranges. Call
    /// [`validate_fan`] for the geometric checks.
    pub fn new(
        lattice_rank: usize,
        rays: Vec<Vec<i64>>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Fan> {
        if lattice_rank == 0 {
            return Err(Error::Malformed("lattice rank must be positive".into()));
        }
        if let Some((i, _)) = rays
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != lattice_rank)
        {
            return Err(Error::Malformed(format!(
                "ray {i} does not have {lattice_rank} entries"
            )));
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (k, cone) in max_cones.into_iter().enumerate() {
            let set: BTreeSet<usize> = cone.iter().copied().collect();
            if set.len() != cone.len() {
                return Err(Error::Malformed(format!("cone {k} repeats a ray")));
            }
            if let Some(bad) = set.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::Malformed(format!(
                    "cone {k} refers to missing ray {bad}"
                )));
            }
            cones.push(set.into_iter().collect());
        }
        if cones.is_empty() {
            return Err(Error::Malformed("fan has no cones".into()));
        }
        Ok(Fan {
            lattice_rank,
            rays,
            max_cones: cones,
        })
    }

    pub fn from_json(text: &str) -> Result<Fan> {
        let raw: Fan = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        Fan::new(raw.lattice_rank, raw.rays, raw.max_cones)
    }

    pub fn dim(&self) -> usize {
        self.lattice_rank
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// Every cone of the fan (faces of maximal cones, the zero cone
    /// included), sorted by dimension and then lexicographically.
    pub fn all_cones(&self) -> Vec<Vec<usize>> {
        let mut set: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for cone in &self.max_cones {
            let k = cone.len();
            for mask in 0u64..(1u64 << k) {
                let face: Vec<usize> = (0..k)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| cone[b])
                    .collect();
                set.insert((face.len(), face));
            }
        }
        set.into_iter().map(|(_, c)| c).collect()
    }

    /// Integer matrix whose rows are the rays: the pairing `m ↦ (⟨m, e_i⟩)_i`.
    pub fn pairing_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rays)
    }

    fn contains_ray(&self, cone: usize, ray: usize) -> bool {
        self.max_cones[cone].binary_search(&ray).is_ok()
    }
}

fn gcd_of(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

fn q(x: i64) -> BigRational {
    lp::int(x)
}

/// Outcome of [`validate_fan`]: every failed property, in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<Error>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.failures.into_iter().next() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }
}

/// Certifies that the fan is simplicial, complete and an honest fan.
///
/// Completeness is checked by facet pairing (each codimension-one face lies
/// in exactly two maximal cones), connectivity of the facet-adjacency graph,
/// and the face-intersection property of every pair of maximal cones. The
/// last uses an exact LP for a separating hyperplane.
pub fn validate_fan(fan: &Fan) -> ValidationReport {
    let d = fan.lattice_rank;
    let mut failures = Vec::new();
    for (i, r) in fan.rays.iter().enumerate() {
        let g = gcd_of(r);
        if g != 1 {
            failures.push(Error::RaysNotPrimitive { ray: i, gcd: g });
        }
    }
    let mut simplicial = true;
    for (k, cone) in fan.max_cones.iter().enumerate() {
        if cone.len() != d {
            failures.push(Error::NotSimplicial {
                cone: k,
                reason: format!("has {} rays in a rank-{d} lattice", cone.len()),
            });
            simplicial = false;
            continue;
        }
        let m = IntMatrix::from_rows(
            &cone
                .iter()
                .map(|&i| fan.rays[i].clone())
                .collect::<Vec<_>>(),
        );
        if m.determinant().is_zero() {
            failures.push(Error::NotSimplicial {
                cone: k,
                reason: "rays are linearly dependent".into(),
            });
            simplicial = false;
        }
    }
    if !simplicial {
        return ValidationReport { failures };
    }

    // facet -> maximal cones containing it
    let mut facets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (k, cone) in fan.max_cones.iter().enumerate() {
        for skip in 0..cone.len() {
            let facet: Vec<usize> = cone
                .iter()
                .enumerate()
                .filter(|(b, _)| *b != skip)
                .map(|(_, &r)| r)
                .collect();
            facets.entry(facet).or_default().push(k);
        }
    }
    for (facet, owners) in &facets {
        match owners.len() {
            2 => {}
            1 => failures.push(Error::NotComplete(format!(
                "facet {facet:?} of cone {} lies in no other maximal cone",
                owners[0]
            ))),
            _ => failures.push(Error::NotAFan {
                first: owners[0],
                second: owners[2],
            }),
        }
    }

    let n = fan.max_cones.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(k) = stack.pop() {
        for owners in facets.values().filter(|o| o.contains(&k)) {
            for &o in owners {
                if !seen[o] {
                    seen[o] = true;
                    stack.push(o);
                }
            }
        }
    }
    if let Some(lost) = seen.iter().position(|s| !s) {
        failures.push(Error::NotComplete(format!(
            "cone {lost} is not connected to cone 0 through shared facets"
        )));
    }

    for a in 0..n {
        for b in a + 1..n {
            if !meet_in_common_face(fan, a, b) {
                failures.push(Error::NotAFan {
                    first: a,
                    second: b,
                });
            }
        }
    }
    ValidationReport { failures }
}

/// Looks for `m` with `⟨m, e⟩ = 0` on the shared rays, `≥ 1` on the rest of
/// cone `a` and `≤ -1` on the rest of cone `b`.
fn meet_in_common_face(fan: &Fan, a: usize, b: usize) -> bool {
    let d = fan.lattice_rank;
    let mut cs = Vec::new();
    for &i in &fan.max_cones[a] {
        let row = fan.rays[i].iter().map(|&x| q(x)).collect();
        if fan.contains_ray(b, i) {
            cs.push(Constraint::new(row, Relation::Eq, q(0)));
        } else {
            cs.push(Constraint::new(row, Relation::Ge, q(1)));
        }
    }
    for &i in &fan.max_cones[b] {
        if !fan.contains_ray(a, i) {
            let row = fan.rays[i].iter().map(|&x| q(x)).collect();
            cs.push(Constraint::new(row, Relation::Le, q(-1)));
        }
    }
    lp::find_feasible(d, &cs).is_some()
}

/// The Chow group `A_{d-1}` with the class of each torus-invariant divisor.
#[derive(Clone, Debug)]
pub struct ChowGrading {
    pub cokernel: Cokernel,
    pub degrees: Vec<GroupElement>,
}

impl ChowGrading {
    pub fn group(&self) -> &AbelianGroup {
        self.cokernel.group()
    }

    /// Class of the divisor `Σ a_i D_i`.
    pub fn class_of(&self, a: &[i64]) -> GroupElement {
        self.cokernel.project(a)
    }
}

/// `A_{d-1} = coker(M → Z^n, m ↦ (⟨m, e_i⟩)_i)`, with the free coordinates
/// chosen so that the degree matrix is in Hermite form.
pub fn chow_degree_map(fan: &Fan) -> ChowGrading {
    let mut cokernel = abelian::cokernel_presentation(&fan.pairing_matrix());
    let n = fan.num_rays();
    let unit = |i: usize| {
        let mut e = vec![0i64; n];
        e[i] = 1;
        e
    };
    let degrees: Vec<GroupElement> = (0..n).map(|i| cokernel.project(&unit(i))).collect();
    cokernel.normalize_free_basis(&degrees);
    let degrees = (0..n).map(|i| cokernel.project(&unit(i))).collect();
    ChowGrading { cokernel, degrees }
}

/// The irrelevant ideal `B(Σ)`, generated by `∏_{e_i ∉ σ} x_i` for each
/// maximal cone; generators are stored as sorted variable-index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrelevantIdeal {
    pub num_vars: usize,
    pub generators: Vec<Vec<usize>>,
}

impl IrrelevantIdeal {
    pub fn exponent(&self, k: usize) -> Vec<u32> {
        let mut e = vec![0u32; self.num_vars];
        for &i in &self.generators[k] {
            e[i] = 1;
        }
        e
    }
}

pub fn irrelevant_generators(fan: &Fan) -> IrrelevantIdeal {
    let n = fan.num_rays();
    let mut seen = HashSet::new();
    let mut generators = Vec::new();
    for cone in &fan.max_cones {
        let complement: Vec<usize> = (0..n).filter(|i| cone.binary_search(i).is_err()).collect();
        if seen.insert(complement.clone()) {
            generators.push(complement);
        }
    }
    IrrelevantIdeal {
        num_vars: n,
        generators,
    }
}

/// Local data of a Cartier divisor `Σ a_i D_i`: an integral form `m_σ` on
/// each maximal cone with `⟨m_σ, e_i⟩ = -a_i` for the rays of `σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartierData {
    pub coefficients: Vec<i64>,
    pub forms: Vec<Vec<i64>>,
}

impl CartierData {
    /// Value of the support function on ray `i`, read off any maximal cone
    /// containing it.
    pub fn support_value(&self, fan: &Fan, ray: usize) -> i64 {
        let k = fan
            .max_cones
            .iter()
            .position(|c| c.binary_search(&ray).is_ok())
            .expect("every ray of a complete fan lies in a maximal cone");
        dot(&self.forms[k], &fan.rays[ray])
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn cartier_data(fan: &Fan, a: &[i64]) -> Result<CartierData> {
    if a.len() != fan.num_rays() {
        return Err(Error::Malformed(format!(
            "divisor has {} coefficients, fan has {} rays",
            a.len(),
            fan.num_rays()
        )));
    }
    let mut forms = Vec::with_capacity(fan.max_cones.len());
    for (k, cone) in fan.max_cones.iter().enumerate() {
        let rows: Vec<Vec<BigRational>> = cone
            .iter()
            .map(|&i| fan.rays[i].iter().map(|&x| q(x)).collect())
            .collect();
        let rhs: Vec<BigRational> = cone.iter().map(|&i| q(-a[i])).collect();
        let m = solve_square(&rows, &rhs).ok_or_else(|| Error::NotSimplicial {
            cone: k,
            reason: "rays are linearly dependent".into(),
        })?;
        let mut form = Vec::with_capacity(m.len());
        for x in m {
            if !x.is_integer() {
                return Err(Error::NotCartier { cone: k });
            }
            form.push(
                x.to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::Internal("Cartier form overflow".into()))?,
            );
        }
        forms.push(form);
    }
    // forms agree on shared faces because each is pinned by the a_i on its rays
    for (i, ray) in fan.rays.iter().enumerate() {
        for (k, cone) in fan.max_cones.iter().enumerate() {
            if cone.binary_search(&i).is_ok() && dot(&forms[k], ray) != -a[i] {
                return Err(Error::Internal(format!(
                    "Cartier form on cone {k} disagrees at ray {i}"
                )));
            }
        }
    }
    Ok(CartierData {
        coefficients: a.to_vec(),
        forms,
    })
}

/// Strict convexity: `⟨m_σ, e_i⟩ > -a_i` for every maximal `σ` and every
/// ray `e_i` outside it.
pub fn is_ample(fan: &Fan, cd: &CartierData) -> bool {
    fan.max_cones.iter().enumerate().all(|(k, cone)| {
        (0..fan.num_rays())
            .filter(|i| cone.binary_search(i).is_err())
            .all(|i| dot(&cd.forms[k], &fan.rays[i]) > -cd.coefficients[i])
    })
}

/// Fan of `P(L_1 ⊕ … ⊕ L_s)` over the base fan, in `N ⊕ Z^{s-1}` with basis
/// `n_2, …, n_s` appended after the base coordinates and
/// `n_1 = -n_2 - … - n_s`. Rays are `ẽ_1..ẽ_n` then `ñ_1..ñ_s`; maximal
/// cones are `σ̃ + σ'_i` where `σ'_i` omits `ñ_i`.
pub fn cayley_fan(fan: &Fan, cds: &[CartierData]) -> Result<Fan> {
    let s = cds.len();
    if s < 2 {
        return Err(Error::DegenerateCayley(s));
    }
    let d = fan.lattice_rank;
    let n = fan.num_rays();
    let dim = d + s - 1;
    let mut rays = Vec::with_capacity(n + s);
    for i in 0..n {
        let h: Vec<i64> = cds.iter().map(|cd| cd.support_value(fan, i)).collect();
        let mut r = fan.rays[i].clone();
        // -Σ_j h_j n_j with n_1 = -Σ_{k≥2} n_k gives coefficient h_1 - h_j on n_j
        r.extend((1..s).map(|j| h[0] - h[j]));
        rays.push(r);
    }
    let mut n1 = vec![0i64; dim];
    for x in n1.iter_mut().skip(d) {
        *x = -1;
    }
    rays.push(n1);
    for j in 1..s {
        let mut r = vec![0i64; dim];
        r[d + j - 1] = 1;
        rays.push(r);
    }
    let mut cones = Vec::with_capacity(fan.max_cones.len() * s);
    for cone in &fan.max_cones {
        for omit in 0..s {
            let mut c = cone.clone();
            c.extend((0..s).filter(|&j| j != omit).map(|j| n + j));
            cones.push(c);
        }
    }
    Fan::new(dim, rays, cones)
}

/// Betti numbers `b_0, …, b_{2d}` of the toric variety; odd ones vanish and
/// `b_{2k} = Σ_{i≥k} (-1)^{i-k} C(i,k) f_{d-i}` with `f_j` the number of
/// `j`-dimensional cones.
pub fn toric_betti(fan: &Fan) -> Vec<u64> {
    let d = fan.lattice_rank;
    let mut f = vec![0i128; d + 1];
    for cone in fan.all_cones() {
        f[cone.len()] += 1;
    }
    let binom = |n: usize, k: usize| -> i128 {
        (0..k).fold(1i128, |acc, t| acc * (n - t) as i128 / (t + 1) as i128)
    };
    let mut out = vec![0u64; 2 * d + 1];
    for k in 0..=d {
        let b: i128 = (k..=d)
            .map(|i| {
                let sign = if (i - k) % 2 == 0 { 1 } else { -1 };
                sign * binom(i, k) * f[d - i]
            })
            .sum();
        out[2 * k] =
            u64::try_from(b).expect("Betti numbers of a complete simplicial fan are nonnegative");
    }
    out
}

/// Common test and example fans.
pub mod standard {
    use super::Fan;

    /// `P^d` with rays `e_1, …, e_d, -Σ e_i`.
    pub fn projective_space(d: usize) -> Fan {
        let mut rays: Vec<Vec<i64>> = (0..d)
            .map(|i| {
                let mut r = vec![0; d];
                r[i] = 1;
                r
            })
            .collect();
        rays.push(vec![-1; d]);
        let cones = (0..=d)
            .map(|skip| (0..=d).filter(|&i| i != skip).collect())
            .collect();
        Fan::new(d, rays, cones).expect("well-formed")
    }

    /// `(P^1)^k` with rays `e_1, -e_1, e_2, -e_2, …`.
    pub fn product_of_lines(k: usize) -> Fan {
        let mut rays = Vec::new();
        for i in 0..k {
            for sign in [1, -1] {
                let mut r = vec![0; k];
                r[i] = sign;
                rays.push(r);
            }
        }
        let cones = (0..1usize << k)
            .map(|mask| (0..k).map(|i| 2 * i + (mask >> i & 1)).collect())
            .collect();
        Fan::new(k, rays, cones).expect("well-formed")
    }

    /// Weighted projective plane `P(1,1,2)`; the middle ray has weight 2.
    pub fn weighted_plane_112() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -2]],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .expect("well-formed")
    }

    /// Hirzebruch surface `F_1` with rays `(1,0), (0,1), (-1,1), (0,-1)`.
    pub fn hirzebruch_one() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, 1], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .expect("well-formed")
    }
}
