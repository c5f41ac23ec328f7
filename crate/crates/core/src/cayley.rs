//! The Cayley trick: `f_1, …, f_s` on `P` become the single polynomial
//! `F = Σ y_j f_j` on `P(L_1 ⊕ … ⊕ L_s)`.

use std::sync::Arc;

use crate::abelian::{AbelianGroup, GroupElement};
use crate::error::{Error, Result};
use crate::fan::{cartier_data, cayley_fan, chow_degree_map, CartierData, ChowGrading, Fan};
use crate::ring::{degree_of, MultiPoly, RingSpec};

/// Everything needed to evaluate graded pieces of the Cayley ring.
#[derive(Clone, Debug)]
pub struct CayleySetup {
    base_fan: Fan,
    base_grading: ChowGrading,
    base_ring: Arc<RingSpec>,
    fs: Vec<MultiPoly>,
    cartier: Vec<CartierData>,
    alphas: Vec<GroupElement>,
    /// `None` for `s = 1`, where `R` is graded by `A_{d-1}(P) ⊕ Z` directly.
    cayley_fan: Option<Fan>,
    cayley_grading: Option<ChowGrading>,
    ring: Arc<RingSpec>,
    f: MultiPoly,
    beta: GroupElement,
    beta0: GroupElement,
    split_group: AbelianGroup,
    formal: Vec<GroupElement>,
}

fn y_prefix(taken: &[String], s: usize) -> String {
    for prefix in ["y", "u", "v", "w", "z"] {
        let names = RingSpec::default_names(prefix, s);
        if names.iter().all(|n| !taken.contains(n)) {
            return prefix.to_string();
        }
    }
    let mut prefix = "y_".to_string();
    while RingSpec::default_names(&prefix, s)
        .iter()
        .any(|n| taken.contains(n))
    {
        prefix.push('_');
    }
    prefix
}

/// Degrees `x_i ↦ ([D_i], 0)` and `y_j ↦ (-α_j, 1)` in `A_{d-1}(P) ⊕ Z`.
pub fn formal_degrees(
    base: &ChowGrading,
    alphas: &[GroupElement],
) -> (AbelianGroup, Vec<GroupElement>) {
    let group = base.group().with_extra_free(1);
    let lift = |g: &GroupElement, k: i64| {
        let mut free = g.free.clone();
        free.push(k);
        group.element(free, g.torsion.clone())
    };
    let mut degrees: Vec<GroupElement> = base.degrees.iter().map(|g| lift(g, 0)).collect();
    degrees.extend(alphas.iter().map(|a| lift(&base.group().neg(a), 1)));
    (group, degrees)
}

pub fn build_cayley(fan: &Fan, fs: &[MultiPoly]) -> Result<CayleySetup> {
    let s = fs.len();
    if s == 0 {
        return Err(Error::EmptySystem);
    }
    let n = fan.num_rays();
    let base_ring = Arc::clone(fs[0].ring());
    if base_ring.arity() != n || fs.iter().any(|f| **f.ring() != *base_ring) {
        return Err(Error::Malformed(
            "hypersurfaces must live in the Cox ring of the fan".into(),
        ));
    }
    let base_grading = chow_degree_map(fan);
    if base_ring.group() != base_grading.group()
        || base_ring.degrees() != base_grading.degrees.as_slice()
    {
        return Err(Error::Malformed(
            "ring grading does not match the fan's Chow grading".into(),
        ));
    }
    let mut alphas = Vec::with_capacity(s);
    let mut cartier = Vec::with_capacity(s);
    for f in fs {
        alphas.push(degree_of(f)?);
        let rep: Vec<i64> = f
            .terms()
            .keys()
            .next()
            .expect("nonzero")
            .iter()
            .map(|&x| x as i64)
            .collect();
        cartier.push(cartier_data(fan, &rep)?);
    }

    let mut names = base_ring.names().to_vec();
    let prefix = y_prefix(&names, s);
    names.extend(RingSpec::default_names(&prefix, s));
    let (split_group, formal) = formal_degrees(&base_grading, &alphas);

    let (cfan, cgrading, ring) = if s == 1 {
        (
            None,
            None,
            RingSpec::new(names, formal.clone(), split_group.clone())?,
        )
    } else {
        let cf = cayley_fan(fan, &cartier)?;
        let cg = chow_degree_map(&cf);
        let ring = RingSpec::new(names, cg.degrees.clone(), cg.group().clone())?;
        (Some(cf), Some(cg), ring)
    };
    let ring = Arc::new(ring);
    let embed: Vec<usize> = (0..n).collect();
    let mut f = MultiPoly::zero(&ring);
    for (j, fj) in fs.iter().enumerate() {
        let yj = MultiPoly::variable(&ring, n + j);
        f = &f + &(&yj * &fj.embed(&ring, &embed));
    }
    let beta = degree_of(&f).map_err(|e| Error::Internal(format!("F is not homogeneous: {e}")))?;
    let beta0 = ring.group().combination(&vec![1; n + s], ring.degrees());

    let setup = CayleySetup {
        base_fan: fan.clone(),
        base_grading,
        base_ring,
        fs: fs.to_vec(),
        cartier,
        alphas,
        cayley_fan: cfan,
        cayley_grading: cgrading,
        ring,
        f,
        beta,
        beta0,
        split_group,
        formal,
    };
    setup.verify_splitting()?;
    Ok(setup)
}

impl CayleySetup {
    pub fn base_fan(&self) -> &Fan {
        &self.base_fan
    }

    pub fn base_grading(&self) -> &ChowGrading {
        &self.base_grading
    }

    pub fn base_ring(&self) -> &Arc<RingSpec> {
        &self.base_ring
    }

    pub fn hypersurfaces(&self) -> &[MultiPoly] {
        &self.fs
    }

    pub fn cartier(&self) -> &[CartierData] {
        &self.cartier
    }

    pub fn alphas(&self) -> &[GroupElement] {
        &self.alphas
    }

    pub fn cayley_fan(&self) -> Option<&Fan> {
        self.cayley_fan.as_ref()
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn polynomial(&self) -> &MultiPoly {
        &self.f
    }

    pub fn beta(&self) -> &GroupElement {
        &self.beta
    }

    pub fn beta0(&self) -> &GroupElement {
        &self.beta0
    }

    /// `d`, the dimension of the base.
    pub fn dim(&self) -> usize {
        self.base_fan.dim()
    }

    pub fn codim(&self) -> usize {
        self.fs.len()
    }

    /// Degrees of the variables of `R` pushed into `A_{d-1}(P) ⊕ Z`.
    pub fn formal_degrees(&self) -> &[GroupElement] {
        &self.formal
    }

    /// `A_{d-1}(P) ⊕ Z`.
    pub fn split_group(&self) -> &AbelianGroup {
        &self.split_group
    }

    /// Image of a degree of `R` in `A_{d-1}(P) ⊕ Z`.
    pub fn split(&self, g: &GroupElement) -> GroupElement {
        match &self.cayley_grading {
            None => g.clone(),
            Some(cg) => {
                let v = cg.cokernel.lift(g);
                self.phi(&v)
            }
        }
    }

    fn phi(&self, v: &[i64]) -> GroupElement {
        self.split_group.combination(v, &self.formal)
    }

    pub fn split_degree(&self, g: &GroupElement) -> (GroupElement, i64) {
        let x = self.split(g);
        let r = self.base_grading.group().free_rank();
        let a = self
            .base_grading
            .group()
            .element(x.free[..r].to_vec(), x.torsion.clone());
        (a, x.free[r])
    }

    /// Inverse of [`split_degree`](Self::split_degree): `k·β` plus the
    /// class of an x-monomial lift of `a`.
    pub fn section(&self, a: &GroupElement, k: i64) -> GroupElement {
        let group = self.ring.group();
        let mut v = self.base_grading.cokernel.lift(a);
        v.extend(std::iter::repeat(0).take(self.codim()));
        let ax = match &self.cayley_grading {
            None => self.split_group.combination(&v, self.ring.degrees()),
            Some(cg) => cg.cokernel.project(&v),
        };
        group.add(&group.scale(k, &self.beta), &ax)
    }

    /// `γ_p = (d + s - p)·β - β₀`, the degree computing `h^{p-s, d-p}`.
    pub fn gamma(&self, p: usize) -> GroupElement {
        let group = self.ring.group();
        let k = (self.dim() + self.codim()) as i64 - p as i64;
        group.sub(&group.scale(k, &self.beta), &self.beta0)
    }

    fn verify_splitting(&self) -> Result<()> {
        let n = self.base_fan.num_rays();
        let s = self.codim();
        if let (Some(cf), Some(cg)) = (&self.cayley_fan, &self.cayley_grading) {
            let p = cf.pairing_matrix();
            for c in 0..p.cols() {
                let col: Vec<i64> = p
                    .column(c)
                    .iter()
                    .map(|x| num_traits::ToPrimitive::to_i64(x).expect("small pairing entry"))
                    .collect();
                if !self.split_group.is_zero(&self.phi(&col)) {
                    return Err(Error::Internal(format!(
                        "splitting does not kill relation {c}"
                    )));
                }
            }
            for i in 0..n + s {
                let mut e = vec![0; n + s];
                e[i] = 1;
                if self.split(&cg.degrees[i]) != self.phi(&e) {
                    return Err(Error::Internal(format!(
                        "splitting disagrees on variable {i}"
                    )));
                }
            }
        }
        let unit = self.split_group.element(
            {
                let mut v = vec![0; self.split_group.free_rank()];
                *v.last_mut().expect("extra Z factor") = 1;
                v
            },
            vec![0; self.split_group.torsion().len()],
        );
        if self.split(&self.beta) != unit {
            return Err(Error::Internal(format!(
                "β splits to {} instead of (0, 1)",
                self.split(&self.beta)
            )));
        }
        Ok(())
    }
}
