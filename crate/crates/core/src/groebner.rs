//! Buchberger's algorithm over the rationals, used only for the radical and
//! unit-ideal decisions behind the smoothness checks.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::linalg;
use crate::ring::{divides, mul_exponents, Exponent, MultiPoly, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Grevlex,
    Lex,
}

/// A monomial order together with a variable permutation: `perm[0]` is the
/// most significant variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            perm: (0..n).collect(),
        }
    }

    pub fn lex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            perm: (0..n).collect(),
        }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.perm {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &i in self.perm.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Coefficient field for the Buchberger core: the rationals, or a prime
/// field for the modular unit-ideal test.
trait Field: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn inv(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Residue modulo the prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Fp {
    v: u64,
    p: u64,
}

impl Field for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    fn inv(&self) -> Self {
        Fp {
            v: linalg::inv_mod(self.v, self.p),
            p: self.p,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        Fp {
            v: linalg::mul_mod(self.v, other.v, self.p),
            p: self.p,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        let v = if self.v >= other.v {
            self.v - other.v
        } else {
            self.p - (other.v - self.v)
        };
        Fp { v, p: self.p }
    }
    fn neg(&self) -> Self {
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }
}

/// Terms sorted by decreasing monomial order.
type Poly<C = BigRational> = Vec<(Exponent, C)>;

fn to_poly(p: &MultiPoly, order: &MonomialOrder) -> Poly {
    let mut v: Poly = p
        .terms()
        .iter()
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();
    v.sort_by(|a, b| order.cmp(&b.0, &a.0));
    v
}

/// Image modulo `p`; `None` when `p` divides a denominator or a numerator,
/// since either would change the support.
fn to_poly_mod(p: &MultiPoly, prime: u64, order: &MonomialOrder) -> Option<Poly<Fp>> {
    let mut v = Vec::with_capacity(p.num_terms());
    for (e, c) in p.terms() {
        let r = linalg::reduce_rational(c, prime)?;
        if r == 0 {
            return None;
        }
        v.push((e.clone(), Fp { v: r, p: prime }));
    }
    v.sort_by(|a, b| order.cmp(&b.0, &a.0));
    Some(v)
}

fn make_monic<C: Field>(p: &mut Poly<C>) {
    if let Some((_, lc)) = p.first() {
        if !lc.is_one() {
            let inv = lc.inv();
            for (_, c) in p.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }
}

/// `p - c * x^m * g`, merging two sorted term lists.
fn sub_multiple<C: Field>(
    p: &Poly<C>,
    c: &C,
    m: &[u32],
    g: &Poly<C>,
    order: &MonomialOrder,
) -> Poly<C> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut shifted = g
        .iter()
        .map(|(e, x)| (mul_exponents(e, m), x.mul(c)))
        .peekable();
    while i < p.len() || shifted.peek().is_some() {
        let take_p = match (p.get(i), shifted.peek()) {
            (Some(a), Some(b)) => order.cmp(&a.0, &b.0),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match take_p {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (e, x) = shifted.next().expect("peeked");
                out.push((e, x.neg()));
            }
            Ordering::Equal => {
                let (e, x) = shifted.next().expect("peeked");
                let v = p[i].1.sub(&x);
                if !v.is_zero() {
                    out.push((e, v));
                }
                i += 1;
            }
        }
    }
    out
}

/// Full reduction of `p` by monic `basis`.
fn reduce<C: Field>(p: Poly<C>, basis: &[Poly<C>], order: &MonomialOrder) -> Poly<C> {
    let mut rem: Poly<C> = Vec::new();
    let mut p = p;
    while !p.is_empty() {
        let (lm, lc) = p[0].clone();
        match basis.iter().find(|g| divides(&g[0].0, &lm)) {
            Some(g) => {
                let m: Exponent = lm.iter().zip(&g[0].0).map(|(a, b)| a - b).collect();
                p = sub_multiple(&p, &lc, &m, g, order);
            }
            None => {
                rem.push(p.remove(0));
            }
        }
    }
    rem
}

fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn is_constant<C>(p: &Poly<C>) -> bool {
    p.len() == 1 && p[0].0.iter().all(|&x| x == 0)
}

fn s_polynomial<C: Field>(f: &Poly<C>, g: &Poly<C>, order: &MonomialOrder) -> Poly<C> {
    let l = lcm(&f[0].0, &g[0].0);
    let mf: Exponent = l.iter().zip(&f[0].0).map(|(a, b)| a - b).collect();
    let mg: Exponent = l.iter().zip(&g[0].0).map(|(a, b)| a - b).collect();
    // both inputs are monic
    let one = f[0].1.clone();
    let a = sub_multiple(&Vec::new(), &one.neg(), &mf, f, order);
    sub_multiple(&a, &one, &mg, g, order)
}

/// Buchberger with the product and chain criteria. Stops early with `{1}`
/// as soon as a constant appears.
fn buchberger_raw<C: Field>(gens: Vec<Poly<C>>, order: &MonomialOrder) -> Vec<Poly<C>> {
    let mut basis: Vec<Poly<C>> = Vec::new();
    for mut g in gens.into_iter().filter(|g| !g.is_empty()) {
        make_monic(&mut g);
        if is_constant(&g) {
            return vec![g];
        }
        basis.push(g);
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    loop {
        let next = pairs.iter().copied().min_by(|&(a, b), &(c, d)| {
            let l1 = lcm(&basis[a][0].0, &basis[b][0].0);
            let l2 = lcm(&basis[c][0].0, &basis[d][0].0);
            order.cmp(&l1, &l2).then((a, b).cmp(&(c, d)))
        });
        let Some((i, j)) = next else { break };
        pairs.remove(&(i, j));
        let li = &basis[i][0].0;
        let lj = &basis[j][0].0;
        let l = lcm(li, lj);
        // coprime leading monomials
        if li.iter().zip(lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k][0].0, &l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let mut r = reduce(s, &basis, order);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        if is_constant(&r) {
            return vec![r];
        }
        let k = basis.len();
        basis.push(r);
        for i in 0..k {
            pairs.insert((i, k));
        }
    }
    interreduce(basis, order)
}

fn interreduce<C: Field>(basis: Vec<Poly<C>>, order: &MonomialOrder) -> Vec<Poly<C>> {
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Poly<C>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(m, h)| m != k && divides(&h[0].0, &g[0].0) && (h[0].0 != g[0].0 || m < k));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let head = minimal[k][0].clone();
        let others: Vec<Poly<C>> = minimal
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != k)
            .map(|(_, g)| g.clone())
            .collect();
        let tail = reduce(minimal[k][1..].to_vec(), &others, order);
        let mut g = vec![head];
        g.extend(tail);
        out.push(g);
    }
    out.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    out
}

/// A reduced Gröbner basis: monic, interreduced, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && {
            let p = &self.elements[0];
            p.num_terms() == 1
                && p.terms()
                    .keys()
                    .next()
                    .expect("one term")
                    .iter()
                    .all(|&x| x == 0)
        }
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// Normal form of `p` modulo the basis.
    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        let basis: Vec<Poly> = self
            .elements
            .iter()
            .map(|g| to_poly(g, &self.order))
            .collect();
        let r = reduce(to_poly(p, &self.order), &basis, &self.order);
        MultiPoly::from_terms(p.ring(), r)
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.normal_form(p).is_zero()
    }
}

pub fn buchberger(gens: &[MultiPoly], order: &MonomialOrder) -> GroebnerBasis {
    let Some(first) = gens.first() else {
        return GroebnerBasis {
            order: order.clone(),
            elements: Vec::new(),
        };
    };
    let ring = Arc::clone(first.ring());
    assert_eq!(order.perm.len(), ring.arity(), "order arity");
    let polys = gens.iter().map(|g| to_poly(g, order)).collect();
    let elements = buchberger_raw(polys, order)
        .into_iter()
        .map(|p| MultiPoly::from_terms(&ring, p))
        .collect();
    GroebnerBasis {
        order: order.clone(),
        elements,
    }
}

/// Unit-ideal test modulo `prime`; `None` when the prime is unusable.
fn unit_mod_p(gens: &[MultiPoly], prime: u64) -> Option<bool> {
    let order = MonomialOrder::grevlex(gens[0].ring().arity());
    let polys = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_poly_mod(g, prime, &order))
        .collect::<Option<Vec<_>>>()?;
    let gb = buchberger_raw(polys, &order);
    Some(gb.len() == 1 && is_constant(&gb[0]))
}

/// Whether `gens` generate the unit ideal.
///
/// Runs Buchberger modulo two 61-bit primes that leave every coefficient
/// nonzero; when they agree that answer is returned, otherwise the basis is
/// computed over the rationals.
pub fn is_unit_ideal(gens: &[MultiPoly]) -> bool {
    let Some(g) = gens.first() else {
        return false;
    };
    let answers: Vec<bool> = linalg::PRIMES
        .iter()
        .filter_map(|&p| unit_mod_p(gens, p))
        .take(2)
        .collect();
    match answers.as_slice() {
        [a, b] if a == b => *a,
        _ => buchberger(gens, &MonomialOrder::grevlex(g.ring().arity())).is_unit(),
    }
}

/// Rabinowitsch: `g ∈ √⟨gens⟩` iff `gens ∪ {1 - t·g}` is the unit ideal,
/// with `t` appended as the last variable under grevlex.
pub fn radical_membership(g: &MultiPoly, gens: &[MultiPoly]) -> Result<bool> {
    let ring = g.ring();
    let mut t_name = "t".to_string();
    while ring.index_of(&t_name).is_some() {
        t_name.push('_');
    }
    let extended = Arc::new(ring.with_extra_variables(&[t_name])?);
    let n = ring.arity();
    let map: Vec<usize> = (0..n).collect();
    let mut system: Vec<MultiPoly> = gens.iter().map(|f| f.embed(&extended, &map)).collect();
    let t = MultiPoly::variable(&extended, n);
    let one = MultiPoly::one(&extended);
    system.push(&one - &(&t * &g.embed(&extended, &map)));
    Ok(is_unit_ideal(&system))
}

/// Ungraded ring `x1, …, xn` for quick tests and examples.
pub fn plain_ring(names: &[&str]) -> Arc<RingSpec> {
    Arc::new(
        RingSpec::ungraded(names.iter().map(|s| s.to_string()).collect()).expect("valid names"),
    )
}
