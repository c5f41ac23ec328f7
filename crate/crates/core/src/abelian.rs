//! Exact integer linear algebra: Smith and Hermite normal forms, finitely
//! generated abelian groups given as cokernels, and solving linear equations
//! whose right-hand side lives in such a group.
//!
//! Matrix entries are arbitrary precision. Group elements use `i64`
//! coordinates; every group that appears in practice is a Chow group of a
//! small fan, and all arithmetic on elements is overflow-checked.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `i64` rows. All rows must have length `cols`.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must equal rows*cols"
        );
        IntMatrix {
            rows,
            cols,
            data: entries.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::from_i64(rows.len(), cols, &flat)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[source * self.cols + j] * factor;
            self.data[target * self.cols + j] += v;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + source] * factor;
            self.data[i * self.cols + target] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `u * a * v == s` with `u`, `v` unimodular and `s` diagonal with each
/// diagonal entry dividing the next. `u_inv` is kept alongside `u`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Row and column operations applied to `s` while mirroring them on the
/// transformation matrices.
struct SnfState {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.s.add_row_multiple(target, source, factor);
        self.u.add_row_multiple(target, source, factor);
        self.u_inv.add_col_multiple(source, target, &-factor);
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.s.add_col_multiple(target, source, factor);
        self.v.add_col_multiple(target, source, factor);
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }
}

/// Smallest nonzero absolute value among the given positions; ties go to the
/// lowest (row, col) because positions are visited in that order.
fn smallest_entry(
    s: &IntMatrix,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in positions {
        let x = s.get(i, j);
        if x.is_zero() {
            continue;
        }
        let a = x.abs();
        if best.as_ref().map_or(true, |(_, b)| a < *b) {
            best = Some(((i, j), a));
        }
    }
    best.map(|(p, _)| p)
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut st = SnfState {
        s: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
    };
    for t in 0..m.min(n) {
        let block = (t..m).flat_map(|i| (t..n).map(move |j| (i, j)));
        let Some((pi, pj)) = smallest_entry(&st.s, block) else {
            break;
        };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if st.s.get(i, t).is_zero() {
                    continue;
                }
                let q = st.s.get(i, t).div_floor(st.s.get(t, t));
                st.add_row(i, t, &-q);
                clean &= st.s.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if st.s.get(t, j).is_zero() {
                    continue;
                }
                let q = st.s.get(t, j).div_floor(st.s.get(t, t));
                st.add_col(j, t, &-q);
                clean &= st.s.get(t, j).is_zero();
            }
            if !clean {
                let cross = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                let (pi, pj) = smallest_entry(&st.s, cross).expect("pivot is nonzero");
                st.swap_rows(t, pi);
                st.swap_cols(t, pj);
                continue;
            }
            let pivot = st.s.get(t, t).clone();
            let offender = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !st.s.get(i, j).is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => st.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if st.s.get(t, t).is_negative() {
            st.negate_row(t);
        }
    }
    SmithForm {
        u: st.u,
        s: st.s,
        v: st.v,
        u_inv: st.u_inv,
    }
}

/// Row-style Hermite normal form of the lattice spanned by `vectors`:
/// echelon rows with positive pivots, entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(width) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<BigInt>> = vectors.to_vec();
    let mut cur = 0;
    for c in 0..width {
        if cur == rows.len() {
            break;
        }
        loop {
            let best = (cur..rows.len())
                .filter(|&r| !rows[r][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(b) = best else { break };
            rows.swap(cur, b);
            let mut done = true;
            for r in cur + 1..rows.len() {
                if rows[r][c].is_zero() {
                    continue;
                }
                let q = rows[r][c].div_floor(&rows[cur][c]);
                let pivot_row = rows[cur].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                done &= rows[r][c].is_zero();
            }
            if done {
                break;
            }
        }
        if cur < rows.len() && !rows[cur][c].is_zero() {
            if rows[cur][c].is_negative() {
                for x in rows[cur].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let pivot_row = rows[cur].clone();
            for r in 0..cur {
                let q = rows[r][c].div_floor(&pivot_row[c]);
                if !q.is_zero() {
                    for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                        *x -= &q * p;
                    }
                }
            }
            cur += 1;
        }
    }
    rows.truncate(cur);
    rows
}

/// Finitely generated abelian group `Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` with
/// `t_1 | t_2 | … | t_k` and every `t_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<i64>,
}

/// Element of an [`AbelianGroup`]; torsion residues are kept in `[0, t_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free: Vec<String> = self.free.iter().map(i64::to_string).collect();
        write!(f, "({})", free.join(", "))?;
        if !self.torsion.is_empty() {
            let tors: Vec<String> = self.torsion.iter().map(i64::to_string).collect();
            write!(f, " + torsion ({})", tors.join(", "))?;
        }
        Ok(())
    }
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("group element coordinate overflowed i64")
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<i64>) -> Result<Self> {
        if torsion.iter().any(|&t| t < 2) {
            return Err(Error::Malformed("torsion invariants must be >= 2".into()));
        }
        if torsion.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Malformed(
                "torsion invariants must form a divisibility chain".into(),
            ));
        }
        Ok(AbelianGroup { free_rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Builds an element, reducing torsion residues into canonical range.
    pub fn element(&self, free: Vec<i64>, torsion: Vec<i64>) -> GroupElement {
        assert_eq!(free.len(), self.free_rank, "free part has wrong length");
        assert_eq!(
            torsion.len(),
            self.torsion.len(),
            "torsion part has wrong length"
        );
        let torsion = torsion
            .iter()
            .zip(&self.torsion)
            .map(|(r, t)| r.rem_euclid(*t))
            .collect();
        GroupElement { free, torsion }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            free: vec![0; self.free_rank],
            torsion: vec![0; self.torsion.len()],
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.free.len() == self.free_rank
            && g.torsion.len() == self.torsion.len()
            && g.torsion
                .iter()
                .zip(&self.torsion)
                .all(|(r, t)| (0..*t).contains(r))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let free = a
            .free
            .iter()
            .zip(&b.free)
            .map(|(x, y)| checked(x.checked_add(*y)))
            .collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .map(|(x, y)| x + y)
            .collect();
        self.element(free, torsion)
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let free = a.free.iter().map(|x| -x).collect();
        let torsion = a.torsion.iter().map(|x| -x).collect();
        self.element(free, torsion)
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: i64, a: &GroupElement) -> GroupElement {
        let free = a.free.iter().map(|x| checked(x.checked_mul(k))).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&self.torsion)
            .map(|(x, t)| (x * (k.rem_euclid(*t))) % t)
            .collect();
        self.element(free, torsion)
    }

    /// `Σ coeffs[i] * elems[i]`.
    pub fn combination(&self, coeffs: &[i64], elems: &[GroupElement]) -> GroupElement {
        assert_eq!(coeffs.len(), elems.len());
        let mut acc = self.zero();
        for (c, e) in coeffs.iter().zip(elems) {
            if *c != 0 {
                acc = self.add(&acc, &self.scale(*c, e));
            }
        }
        acc
    }

    pub fn is_zero(&self, a: &GroupElement) -> bool {
        a.free.iter().all(|&x| x == 0) && a.torsion.iter().all(|&x| x == 0)
    }

    /// `self ⊕ Z^extra`, with the new free coordinates appended last.
    pub fn with_extra_free(&self, extra: usize) -> AbelianGroup {
        AbelianGroup {
            free_rank: self.free_rank + extra,
            torsion: self.torsion.clone(),
        }
    }
}

/// A cokernel `Z^n / column_space(A)` together with the quotient map and a
/// set-theoretic section of it.
#[derive(Clone, Debug)]
pub struct Cokernel {
    group: AbelianGroup,
    ambient: usize,
    /// One row per group coordinate (torsion coordinates first, then free).
    projection: Vec<Vec<i64>>,
    /// For each group coordinate, an integer vector mapping to its unit.
    lifts: Vec<Vec<i64>>,
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("transformation entry exceeds i64")
}

/// Presents `Z^rows / column_space(a)` as `Z^r ⊕ ⊕ Z/t_i`.
pub fn cokernel_presentation(a: &IntMatrix) -> Cokernel {
    let n = a.rows;
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let mut torsion_rows = Vec::new();
    let mut torsion = Vec::new();
    let mut free_rows = Vec::new();
    for k in 0..n {
        let d = diag.get(k).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            free_rows.push(k);
        } else if !d.is_one() {
            torsion_rows.push(k);
            torsion.push(to_i64(&d));
        }
    }
    let order: Vec<usize> = torsion_rows.iter().chain(&free_rows).copied().collect();
    let projection = order
        .iter()
        .map(|&k| snf.u.row(k).iter().map(to_i64).collect())
        .collect();
    let lifts = order
        .iter()
        .map(|&k| snf.u_inv.column(k).iter().map(to_i64).collect())
        .collect();
    let group = AbelianGroup::new(free_rows.len(), torsion).expect("Smith invariants form a chain");
    Cokernel {
        group,
        ambient: n,
        projection,
        lifts,
    }
}

impl Cokernel {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn project(&self, v: &[i64]) -> GroupElement {
        assert_eq!(
            v.len(),
            self.ambient,
            "vector length must match the cokernel ambient"
        );
        let coords: Vec<i64> = self
            .projection
            .iter()
            .map(|row| {
                row.iter().zip(v).fold(0i64, |acc, (a, b)| {
                    checked(acc.checked_add(checked(a.checked_mul(*b))))
                })
            })
            .collect();
        let t = self.group.torsion.len();
        self.group
            .element(coords[t..].to_vec(), coords[..t].to_vec())
    }

    /// Changes the free coordinates by the unimodular matrix that puts the
    /// free parts of `gens` (which must generate the free quotient) into
    /// row Hermite form. Torsion coordinates are untouched.
    pub fn normalize_free_basis(&mut self, gens: &[GroupElement]) {
        let r = self.group.free_rank;
        if r == 0 || gens.is_empty() {
            return;
        }
        let n = gens.len();
        let d: Vec<Vec<BigInt>> = (0..r)
            .map(|i| gens.iter().map(|g| BigInt::from(g.free[i])).collect())
            .collect();
        let h = hermite_rows(&d);
        assert_eq!(h.len(), r, "generators must span the free quotient");
        let pivots: Vec<usize> = h
            .iter()
            .map(|row| {
                (0..n)
                    .find(|&c| !row[c].is_zero())
                    .expect("Hermite rows are nonzero")
            })
            .collect();
        // G * D = H, and D restricted to the pivot columns is invertible
        let dp = IntMatrix {
            rows: r,
            cols: r,
            data: (0..r)
                .flat_map(|i| pivots.iter().map(|&c| d[i][c].clone()).collect::<Vec<_>>())
                .collect(),
        };
        let hp = IntMatrix {
            rows: r,
            cols: r,
            data: (0..r)
                .flat_map(|i| pivots.iter().map(|&c| h[i][c].clone()).collect::<Vec<_>>())
                .collect(),
        };
        let g = hp.mul(&adjugate(&dp));
        let det = dp.determinant();
        let g = IntMatrix {
            rows: r,
            cols: r,
            data: g.data.iter().map(|x| exact_div(x, &det)).collect(),
        };
        let det_g = g.determinant();
        assert!(
            det_g.is_one() || (-det_g).is_one(),
            "free basis change must be unimodular"
        );
        let g_inv = {
            let adj = adjugate(&g);
            let det = g.determinant();
            IntMatrix {
                rows: r,
                cols: r,
                data: adj.data.iter().map(|x| exact_div(x, &det)).collect(),
            }
        };
        let t = self.group.torsion.len();
        let old_proj: Vec<Vec<i64>> = self.projection[t..].to_vec();
        let old_lifts: Vec<Vec<i64>> = self.lifts[t..].to_vec();
        for i in 0..r {
            self.projection[t + i] =
                (0..self.ambient)
                    .map(|c| {
                        (0..r).fold(0i64, |acc, j| {
                            checked(acc.checked_add(checked(
                                to_i64(g.get(i, j)).checked_mul(old_proj[j][c]),
                            )))
                        })
                    })
                    .collect();
            self.lifts[t + i] = (0..self.ambient)
                .map(|c| {
                    (0..r).fold(0i64, |acc, j| {
                        checked(acc.checked_add(checked(
                            to_i64(g_inv.get(j, i)).checked_mul(old_lifts[j][c]),
                        )))
                    })
                })
                .collect();
        }
    }

    /// An integer vector whose class is `g`.
    pub fn lift(&self, g: &GroupElement) -> Vec<i64> {
        let coords = g.torsion.iter().chain(&g.free);
        let mut out = vec![0i64; self.ambient];
        for (c, lift) in coords.zip(&self.lifts) {
            for (o, l) in out.iter_mut().zip(lift) {
                *o = checked(o.checked_add(checked(c.checked_mul(*l))));
            }
        }
        out
    }
}

fn exact_div(x: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = x.div_rem(d);
    assert!(r.is_zero(), "inexact division in basis change");
    q
}

/// Classical adjugate, so that `m * adj(m) = det(m) * I`.
fn adjugate(m: &IntMatrix) -> IntMatrix {
    let n = m.rows;
    if n == 1 {
        return IntMatrix::identity(1);
    }
    let mut out = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut minor = IntMatrix::zeros(n - 1, n - 1);
            for (a, r) in (0..n).filter(|&r| r != i).enumerate() {
                for (b, c) in (0..n).filter(|&c| c != j).enumerate() {
                    minor.set(a, b, m.get(r, c).clone());
                }
            }
            let cof = minor.determinant();
            out.set(j, i, if (i + j) % 2 == 0 { cof } else { -cof });
        }
    }
    out
}

/// Solution set of `Σ a_i * degrees[i] = target`: one particular solution and
/// a lattice basis of the homogeneous solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSolution {
    pub particular: Vec<i64>,
    pub kernel_basis: Vec<Vec<i64>>,
}

/// Solves `Σ a_i * degrees[i] = target` over the integers.
///
/// The kernel basis is returned in Hermite form computed on the reversed
/// coordinates, and the particular solution is reduced against it, so the
/// output is canonical: the trailing pivot coordinates of the particular
/// solution are as small as possible.
pub fn solve_over_group(
    group: &AbelianGroup,
    degrees: &[GroupElement],
    target: &GroupElement,
) -> Result<GroupSolution> {
    let n = degrees.len();
    let r = group.free_rank;
    let t = group.torsion.len();
    let mut m = IntMatrix::zeros(r + t, n + t);
    for (j, g) in degrees.iter().enumerate() {
        for (i, x) in g.free.iter().chain(&g.torsion).enumerate() {
            m.set(i, j, BigInt::from(*x));
        }
    }
    for (k, tk) in group.torsion.iter().enumerate() {
        m.set(r + k, n + k, BigInt::from(*tk));
    }
    let rhs: Vec<BigInt> = target
        .free
        .iter()
        .chain(&target.torsion)
        .map(|&x| BigInt::from(x))
        .collect();
    let snf = smith_normal_form(&m);
    let c = snf.u.mul_vec(&rhs);
    let diag = snf.diagonal();
    let rank = snf.rank();
    let mut w = vec![BigInt::zero(); n + t];
    for k in 0..c.len() {
        if k < rank {
            let (q, rem) = c[k].div_rem(&diag[k]);
            if !rem.is_zero() {
                return Err(Error::NoSolution);
            }
            w[k] = q;
        } else if !c[k].is_zero() {
            return Err(Error::NoSolution);
        }
    }
    let x = snf.v.mul_vec(&w);
    let mut particular: Vec<BigInt> = x[..n].to_vec();

    let kernel: Vec<Vec<BigInt>> = (rank..n + t)
        .map(|k| snf.v.column(k)[..n].iter().rev().cloned().collect())
        .collect();
    let hermite = hermite_rows(&kernel);
    let mut basis = Vec::with_capacity(hermite.len());
    for row in hermite {
        let row: Vec<BigInt> = row.into_iter().rev().collect();
        let pivot_col = (0..n)
            .rev()
            .find(|&c| !row[c].is_zero())
            .expect("Hermite rows are nonzero");
        let q = particular[pivot_col].div_floor(&row[pivot_col]);
        for (p, x) in particular.iter_mut().zip(&row) {
            *p -= &q * x;
        }
        basis.push(row.iter().map(to_i64).collect());
    }
    Ok(GroupSolution {
        particular: particular.iter().map(to_i64).collect(),
        kernel_basis: basis,
    })
}
