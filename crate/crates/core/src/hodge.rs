//! Variable Hodge tables, full Hodge diamonds, and the hypothesis report.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cayley::{build_cayley, CayleySetup};
use crate::error::{Error, Result};
use crate::fan::{cartier_data, irrelevant_generators, is_ample, toric_betti, validate_fan, Fan};
use crate::ideal::{ambient_dim, colon_ring_dim, jacobian_ring_dim};
use crate::ring::{in_irrelevant_ideal, MultiPoly};
use crate::smoothness::{
    nondegenerate_check, quasi_smooth_check, NondegenerateVerdict, QuasiSmoothVerdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Jacobian,
    Colon,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    #[default]
    Auto,
    Jacobian,
    Colon,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Checks {
    #[default]
    Full,
    SkipSmoothness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeEntry {
    pub p: usize,
    /// `(p - s, d - p)`.
    pub bidegree: (usize, usize),
    pub ring_dim: usize,
    pub ambient_dim: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MiddleCorrection {
    pub p: usize,
    /// `b_{d+s-1}(P) - b_{d-s-1}(P)`.
    pub value: i64,
}

/// `h_var^{p-s, d-p}` for `s ≤ p ≤ d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VarHodgeTable {
    pub d: usize,
    pub s: usize,
    pub method: Method,
    pub entries: Vec<HodgeEntry>,
    pub middle_correction: Option<MiddleCorrection>,
}

impl VarHodgeTable {
    pub fn entry(&self, p: usize) -> Option<usize> {
        self.entries.iter().find(|e| e.p == p).map(|e| e.value)
    }

    pub fn values(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.value).collect()
    }

    /// `entry(p) = entry(d + s - p)`.
    pub fn is_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|e| self.entry(self.d + self.s - e.p) == Some(e.value))
    }
}

fn betti_at(betti: &[u64], k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    betti.get(k as usize).map_or(0, |&b| b as i64)
}

pub fn variable_hodge(setup: &CayleySetup, method: Method) -> Result<VarHodgeTable> {
    let d = setup.dim();
    let s = setup.codim();
    let betti = toric_betti(setup.base_fan());
    let middle = if (d + s - 1) % 2 == 0 {
        Some((d + s - 1) / 2)
    } else {
        None
    };
    let ps: Vec<usize> = (s..=d).collect();
    let computed: Vec<(usize, usize)> = ps
        .par_iter()
        .map(|&p| {
            let gamma = setup.gamma(p);
            let ring = match method {
                Method::Jacobian => jacobian_ring_dim(setup, &gamma)?,
                Method::Colon => colon_ring_dim(setup, &gamma)?,
            };
            Ok((ring, ambient_dim(setup, &gamma)?))
        })
        .collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(ps.len());
    let mut middle_correction = None;
    for (&p, &(ring_dim, ambient)) in ps.iter().zip(&computed) {
        let mut value = ring_dim as i64;
        if method == Method::Jacobian && middle == Some(p) {
            let c =
                betti_at(&betti, (d + s - 1) as i64) - betti_at(&betti, d as i64 - s as i64 - 1);
            value -= c;
            middle_correction = Some(MiddleCorrection { p, value: c });
        }
        if value < 0 {
            return Err(Error::NegativeEntry { p, value });
        }
        entries.push(HodgeEntry {
            p,
            bidegree: (p - s, d - p),
            ring_dim,
            ambient_dim: ambient,
            value: value as usize,
        });
    }
    Ok(VarHodgeTable {
        d,
        s,
        method,
        entries,
        middle_correction,
    })
}

/// `h^{p,q}` of `X`, `0 ≤ p, q ≤ d - s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeDiamond {
    pub dim: usize,
    pub h: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.h[p][q]
    }

    /// Rows of the diamond by total degree `k = p + q`, each listed from
    /// `h^{k,0}` down to `h^{0,k}`.
    pub fn rows(&self) -> Vec<Vec<u64>> {
        let m = self.dim;
        (0..=2 * m)
            .map(|k| {
                let lo = k.saturating_sub(m);
                let hi = k.min(m);
                (lo..=hi).rev().map(|p| self.h[p][k - p]).collect()
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let m = self.dim;
        (0..=m).all(|p| {
            (0..=m).all(|q| self.h[p][q] == self.h[q][p] && self.h[p][q] == self.h[m - p][m - q])
        })
    }
}

/// Lefschetz-type assembly: the ambient Betti numbers below the middle
/// row, variable plus ambient classes in it, and duality above it.
pub fn hodge_diamond(fan: &Fan, fs: &[MultiPoly], table: &VarHodgeTable) -> Result<HodgeDiamond> {
    let d = fan.dim();
    let s = fs.len();
    if s >= d {
        return Err(Error::HypothesisViolated(format!(
            "diamond assembly needs s < d, got s = {s}, d = {d}"
        )));
    }
    let b = irrelevant_generators(fan);
    if let Some(j) = fs.iter().position(|f| !in_irrelevant_ideal(f, &b)) {
        return Err(Error::HypothesisViolated(format!(
            "f{} is not in the irrelevant ideal",
            j + 1
        )));
    }
    if table.d != d || table.s != s {
        return Err(Error::Malformed(
            "variable table does not match the system".into(),
        ));
    }
    let betti = toric_betti(fan);
    let m = d - s;
    let mut h = vec![vec![0u64; m + 1]; m + 1];
    for p in 0..=m {
        for q in 0..=m {
            let k = p + q;
            h[p][q] = if k < m {
                if p == q {
                    betti[2 * p]
                } else {
                    0
                }
            } else if k == m {
                // bidegree (p, q) = (P - s, d - P)
                let var = table.entry(p + s).expect("table covers s..=d") as u64;
                var + if p == q { betti[m] } else { 0 }
            } else {
                0
            };
        }
    }
    for p in 0..=m {
        for q in 0..=m {
            if p + q > m {
                h[p][q] = h[m - p][m - q];
            }
        }
    }
    Ok(HodgeDiamond { dim: m, h })
}

pub fn euler_characteristic(dia: &HodgeDiamond) -> i64 {
    let mut chi = 0i64;
    for (p, row) in dia.h.iter().enumerate() {
        for (q, &x) in row.iter().enumerate() {
            chi += if (p + q) % 2 == 0 {
                x as i64
            } else {
                -(x as i64)
            };
        }
    }
    chi
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypersurfaceFacts {
    pub name: String,
    pub in_irrelevant_ideal: bool,
    /// `None` when the degree is not Cartier.
    pub ample: Option<bool>,
}

/// Which hypotheses hold, and what follows from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub d: usize,
    pub s: usize,
    pub hypersurfaces: Vec<HypersurfaceFacts>,
    pub quasi_smooth: Option<QuasiSmoothVerdict>,
    pub nondegenerate: Option<NondegenerateVerdict>,
    pub jacobian_theorem_applies: bool,
    pub colon_theorem_applies: bool,
    pub lefschetz_applies: bool,
    pub connected: bool,
    pub log: Vec<String>,
}

impl Report {
    pub fn all_ample(&self) -> bool {
        self.hypersurfaces.iter().all(|h| h.ample == Some(true))
    }

    pub fn all_in_irrelevant(&self) -> bool {
        self.hypersurfaces.iter().all(|h| h.in_irrelevant_ideal)
    }
}

/// Runs the membership, ampleness and (optionally) smoothness checks.
pub fn structural_report(
    fan: &Fan,
    fs: &[MultiPoly],
    names: &[String],
    checks: Checks,
) -> Result<Report> {
    let d = fan.dim();
    let s = fs.len();
    let b = irrelevant_generators(fan);
    let mut log = Vec::new();
    let mut hypersurfaces = Vec::with_capacity(s);
    for (j, f) in fs.iter().enumerate() {
        let name = names
            .get(j)
            .cloned()
            .unwrap_or_else(|| format!("f{}", j + 1));
        let rep: Vec<i64> = f
            .terms()
            .keys()
            .next()
            .ok_or(Error::ZeroPolynomial)?
            .iter()
            .map(|&x| x as i64)
            .collect();
        let ample = cartier_data(fan, &rep).ok().map(|cd| is_ample(fan, &cd));
        let member = in_irrelevant_ideal(f, &b);
        match ample {
            None => log.push(format!("{name}: degree is not Cartier")),
            Some(false) => log.push(format!("{name}: degree is not ample")),
            Some(true) => {}
        }
        if !member {
            log.push(format!("{name}: not in the irrelevant ideal"));
        }
        hypersurfaces.push(HypersurfaceFacts {
            name,
            in_irrelevant_ideal: member,
            ample,
        });
    }
    let (quasi_smooth, nondegenerate) = match checks {
        Checks::Full => (
            Some(quasi_smooth_check(fan, fs)?),
            Some(nondegenerate_check(fan, fs)?),
        ),
        Checks::SkipSmoothness => {
            log.push("smoothness checks skipped".into());
            (None, None)
        }
    };
    let all_ample = hypersurfaces.iter().all(|h| h.ample == Some(true));
    let all_in_b = hypersurfaces.iter().all(|h| h.in_irrelevant_ideal);
    let qs = matches!(quasi_smooth, Some(QuasiSmoothVerdict::QuasiSmooth));
    let nd = nondegenerate
        .as_ref()
        .is_some_and(NondegenerateVerdict::holds);
    if nd && quasi_smooth.as_ref().is_some_and(|v| !v.holds()) {
        return Err(Error::Internal(
            "nondegenerate system reported as not quasi-smooth".into(),
        ));
    }
    let connected = s < d && all_in_b;
    if all_in_b {
        log.push(format!("X has pure dimension {}", d as i64 - s as i64));
    }
    if connected {
        log.push("X is connected".into());
    } else if s >= d {
        log.push("connectedness not asserted: s >= d".into());
    }
    if let Some(QuasiSmoothVerdict::QuasiSmoothEmpty) = quasi_smooth {
        log.push("X is empty".into());
    }
    Ok(Report {
        d,
        s,
        hypersurfaces,
        quasi_smooth,
        nondegenerate,
        jacobian_theorem_applies: all_ample && qs,
        colon_theorem_applies: all_ample && nd,
        lefschetz_applies: all_in_b && s < d,
        connected,
        log,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HodgeOptions {
    pub method: MethodChoice,
    pub checks: Checks,
    pub assume_hypotheses: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HodgeResult {
    pub certified: bool,
    pub method: Method,
    pub report: Report,
    pub table: VarHodgeTable,
    pub diamond: Option<HodgeDiamond>,
    pub euler_characteristic: Option<i64>,
}

/// Validation, hypothesis checks, variable table and diamond in one call.
pub fn compute_hodge(
    fan: &Fan,
    fs: &[MultiPoly],
    names: &[String],
    options: &HodgeOptions,
) -> Result<HodgeResult> {
    validate_fan(fan).into_result()?;
    if fs.is_empty() {
        return Err(Error::EmptySystem);
    }
    let report = structural_report(fan, fs, names, options.checks)?;
    let nondegenerate = report
        .nondegenerate
        .as_ref()
        .is_some_and(NondegenerateVerdict::holds);
    let method = match options.method {
        MethodChoice::Jacobian => Method::Jacobian,
        MethodChoice::Colon => Method::Colon,
        MethodChoice::Auto if nondegenerate => Method::Colon,
        MethodChoice::Auto => Method::Jacobian,
    };
    let mut problems = Vec::new();
    if !report.all_ample() {
        problems.push("some degree is not ample".to_string());
    }
    match (&report.quasi_smooth, method) {
        (None, _) => problems.push("smoothness not checked".into()),
        (Some(QuasiSmoothVerdict::NotQuasiSmooth { generator }), _) => problems.push(format!(
            "not quasi-smooth: {generator} is not in the radical"
        )),
        (Some(QuasiSmoothVerdict::QuasiSmoothEmpty), _) => {
            problems.push("the intersection is empty".into())
        }
        (Some(QuasiSmoothVerdict::QuasiSmooth), _) => {}
    }
    if method == Method::Colon {
        if let Some(NondegenerateVerdict::Degenerate { cone, subset }) = &report.nondegenerate {
            problems.push(format!(
                "degenerate on the orbit of cone {cone:?} for equations {subset:?}"
            ));
        }
    }
    let checked_failures: Vec<&String> = problems
        .iter()
        .filter(|p| *p != "smoothness not checked")
        .collect();
    if !checked_failures.is_empty() && !options.assume_hypotheses {
        return Err(Error::HypothesisViolated(
            checked_failures
                .iter()
                .map(|s| s.as_str())
                .collect::<Vec<_>>()
                .join("; "),
        ));
    }
    let certified = problems.is_empty();

    let setup = build_cayley(fan, fs)?;
    let table = variable_hodge(&setup, method)?;
    if certified && !table.is_symmetric() {
        return Err(Error::Internal(format!(
            "variable table {:?} is not conjugation symmetric",
            table.values()
        )));
    }
    let (diamond, euler) = if report.lefschetz_applies {
        let dia = hodge_diamond(fan, fs, &table)?;
        if report.connected && dia.get(0, 0) != 1 {
            return Err(Error::Internal(format!(
                "h^{{0,0}} = {} for a connected X",
                dia.get(0, 0)
            )));
        }
        let chi = euler_characteristic(&dia);
        (Some(dia), Some(chi))
    } else {
        (None, None)
    };
    Ok(HodgeResult {
        certified,
        method,
        report,
        table,
        diamond,
        euler_characteristic: euler,
    })
}
