//! Rank computations over the rationals.
//!
//! Graded pieces of Jacobian-type ideals give large, very sparse matrices
//! whose rows are monomial multiples of a few generators. They are split
//! into connected blocks (rows sharing columns) first. Blocks small enough
//! are ranked exactly by fraction-free Bareiss elimination over the
//! integers. Larger blocks are ranked by sparse elimination modulo two
//! 61/62-bit primes; rank modulo a prime never exceeds the rational rank, so
//! the larger of the two is used.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

/// Blocks whose estimated elimination work (rows * cols * min(rows, cols))
/// stays below this are ranked exactly.
pub const EXACT_WORK_LIMIT: u128 = 4_000_000;

pub(crate) const PRIMES: [u64; 3] = [
    2305843009213693951,
    4611686018427387847,
    2305843009213693921,
];

/// A sparse matrix with rational entries, stored by rows.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<Vec<(usize, BigRational)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Appends a row. Zero entries are dropped; column indices must be
    /// distinct and below `ncols`.
    pub fn push_row(&mut self, mut entries: Vec<(usize, BigRational)>) {
        entries.retain(|(_, v)| !v.is_zero());
        entries.sort_by_key(|(c, _)| *c);
        debug_assert!(
            entries.windows(2).all(|w| w[0].0 < w[1].0),
            "duplicate column in row"
        );
        debug_assert!(entries.iter().all(|(c, _)| *c < self.ncols));
        self.rows.push(entries);
    }

    pub fn rows(&self) -> &[Vec<(usize, BigRational)>] {
        &self.rows
    }

    /// Same rows, keeping only the columns flagged in `keep` (renumbered).
    pub fn restrict_columns(&self, keep: &[bool]) -> SparseMatrix {
        assert_eq!(keep.len(), self.ncols);
        let mut map = vec![usize::MAX; self.ncols];
        let mut next = 0;
        for (c, k) in keep.iter().enumerate() {
            if *k {
                map[c] = next;
                next += 1;
            }
        }
        let mut out = SparseMatrix::new(next);
        for row in &self.rows {
            out.push_row(
                row.iter()
                    .filter(|(c, _)| keep[*c])
                    .map(|(c, v)| (map[*c], v.clone()))
                    .collect(),
            );
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![BigRational::zero(); self.ncols];
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Splits the matrix into blocks with disjoint column supports.
fn blocks(m: &SparseMatrix) -> Vec<SparseMatrix> {
    let mut uf = UnionFind((0..m.ncols).collect());
    for row in &m.rows {
        if let Some((first, _)) = row.first() {
            for (c, _) in &row[1..] {
                uf.union(*first, *c);
            }
        }
    }
    let mut block_of_root: HashMap<usize, usize> = HashMap::new();
    let mut col_index = vec![0usize; m.ncols];
    let mut sizes: Vec<usize> = Vec::new();
    for c in 0..m.ncols {
        let root = uf.find(c);
        let b = *block_of_root.entry(root).or_insert_with(|| {
            sizes.push(0);
            sizes.len() - 1
        });
        col_index[c] = sizes[b];
        sizes[b] += 1;
    }
    let mut out: Vec<SparseMatrix> = sizes.iter().map(|&n| SparseMatrix::new(n)).collect();
    for row in &m.rows {
        let Some((first, _)) = row.first() else {
            continue;
        };
        let b = block_of_root[&uf.find(*first)];
        out[b].rows.push(
            row.iter()
                .map(|(c, v)| (col_index[*c], v.clone()))
                .collect(),
        );
    }
    out.retain(|b| !b.rows.is_empty());
    out
}

/// Rank over the rationals.
pub fn rank(m: &SparseMatrix) -> usize {
    blocks(m).par_iter().map(block_rank).sum()
}

fn block_rank(b: &SparseMatrix) -> usize {
    let (r, c) = (b.rows.len() as u128, b.ncols as u128);
    if r * c * r.min(c) <= EXACT_WORK_LIMIT {
        bareiss_rank(integer_rows(b))
    } else {
        modular_rank(b)
    }
}

/// Clears denominators row by row.
fn integer_rows(b: &SparseMatrix) -> Vec<Vec<BigInt>> {
    b.rows
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            let mut dense = vec![BigInt::zero(); b.ncols];
            for (c, v) in row {
                dense[*c] = v.numer() * (&l / v.denom());
            }
            dense
        })
        .collect()
}

/// Rank of a dense integer matrix by fraction-free elimination. Pivots are
/// the first nonzero entry in column order.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce_int(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Image of a rational modulo `p`, or `None` when `p` divides the denominator.
pub(crate) fn reduce_rational(x: &BigRational, p: u64) -> Option<u64> {
    let d = reduce_int(x.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul_mod(reduce_int(x.numer(), p), inv_mod(d, p), p))
}

fn modular_rank(b: &SparseMatrix) -> usize {
    PRIMES
        .iter()
        .filter_map(|&p| rank_mod_p(b, p))
        .take(2)
        .max()
        .expect("at least one prime avoids every denominator")
}

/// Rank modulo `p`; `None` if some denominator vanishes modulo `p`.
fn rank_mod_p(b: &SparseMatrix, p: u64) -> Option<usize> {
    let mut rows: Vec<Vec<(usize, u64)>> = Vec::with_capacity(b.rows.len());
    for row in &b.rows {
        let mut r = Vec::with_capacity(row.len());
        for (c, v) in row {
            let x = reduce_rational(v, p)?;
            if x != 0 {
                r.push((*c, x));
            }
        }
        if !r.is_empty() {
            rows.push(r);
        }
    }
    rows.sort_by_key(|r| (r.len(), r[0].0));

    let n = b.ncols;
    let mut pivots: Vec<Option<Vec<(usize, u64)>>> = vec![None; n];
    let mut buf = vec![0u64; n];
    let mut queued = vec![false; n];
    let mut heap: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
    let mut rank = 0;
    for row in rows {
        for (c, v) in &row {
            buf[*c] = *v;
            queued[*c] = true;
            heap.push(Reverse(*c));
        }
        while let Some(Reverse(c)) = heap.pop() {
            queued[c] = false;
            let x = buf[c];
            if x == 0 {
                continue;
            }
            match &pivots[c] {
                Some(prow) => {
                    let f = p - x;
                    buf[c] = 0;
                    for (pc, pv) in &prow[1..] {
                        buf[*pc] = (buf[*pc] + mul_mod(f, *pv, p)) % p;
                        if !queued[*pc] {
                            queued[*pc] = true;
                            heap.push(Reverse(*pc));
                        }
                    }
                }
                None => {
                    let inv = inv_mod(x, p);
                    let mut new_row = vec![(c, 1u64)];
                    buf[c] = 0;
                    while let Some(Reverse(k)) = heap.pop() {
                        queued[k] = false;
                        if buf[k] != 0 {
                            new_row.push((k, mul_mod(buf[k], inv, p)));
                            buf[k] = 0;
                        }
                    }
                    pivots[c] = Some(new_row);
                    rank += 1;
                }
            }
        }
    }
    Some(rank)
}

/// Solves a square rational system; `None` if singular.
pub fn solve_square(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        let pivot = m[k][k].clone();
        for x in m[k].iter_mut() {
            *x /= &pivot;
        }
        let prow = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != k && !row[k].is_zero() {
                let f = row[k].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(
        m.into_iter()
            .map(|mut r| r.pop().expect("augmented column"))
            .collect(),
    )
}

/// Rank of a small dense rational matrix.
pub fn dense_rank(rows: &[Vec<BigRational>]) -> usize {
    let int_rows = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
        })
        .collect();
    bareiss_rank(int_rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        let mut m = SparseMatrix::new(3);
        m.push_row(vec![(0, q(1, 1)), (1, q(2, 1))]);
        m.push_row(vec![(0, q(1, 2)), (1, q(1, 1))]);
        m.push_row(vec![(2, q(3, 1))]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&SparseMatrix::new(4)), 0);
    }

    #[test]
    fn modular_agrees_with_exact() {
        // deterministic pseudo-random matrix with a planted dependency
        let mut state = 12345u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        let mut m = SparseMatrix::new(12);
        let mut rows = Vec::new();
        for _ in 0..10 {
            let row: Vec<i64> = (0..12).map(|_| next()).collect();
            rows.push(row);
        }
        let combo: Vec<i64> = (0..12).map(|j| rows[0][j] * 2 - rows[3][j]).collect();
        rows.push(combo);
        for r in &rows {
            m.push_row(r.iter().enumerate().map(|(c, &v)| (c, q(v, 1))).collect());
        }
        let exact = bareiss_rank(integer_rows(&m));
        assert_eq!(modular_rank(&m), exact);
        assert_eq!(exact, 10);
    }

    #[test]
    fn blocks_split_disjoint_supports() {
        let mut m = SparseMatrix::new(5);
        m.push_row(vec![(0, q(1, 1)), (3, q(1, 1))]);
        m.push_row(vec![(1, q(1, 1))]);
        m.push_row(vec![(3, q(2, 1)), (0, q(2, 1))]);
        m.push_row(vec![(2, q(1, 1)), (4, q(-1, 1))]);
        let bs = blocks(&m);
        assert_eq!(bs.len(), 3);
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn solve_square_system() {
        let a = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(3, 1)]];
        let x = solve_square(&a, &[q(3, 1), q(5, 1)]).unwrap();
        assert_eq!(x, vec![q(4, 5), q(7, 5)]);
        let singular = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(solve_square(&singular, &[q(1, 1), q(1, 1)]).is_none());
    }
}
