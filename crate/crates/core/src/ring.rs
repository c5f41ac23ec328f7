//! Multigraded polynomial rings with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::abelian::{AbelianGroup, GroupElement};
use crate::error::{Error, Result};
use crate::fan::IrrelevantIdeal;
use crate::lp::{self, Constraint, Relation};

pub type Exponent = Vec<u32>;

/// Variable names with their degrees in a grading group.
#[derive(Debug)]
pub struct RingSpec {
    names: Vec<String>,
    degrees: Vec<GroupElement>,
    group: AbelianGroup,
    weights: OnceLock<Result<PositiveGrading>>,
}

/// A functional `λ` on the free part of the grading group that is at least
/// one on every variable degree, scaled to be integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveGrading {
    pub functional: Vec<i64>,
    pub weights: Vec<i64>,
}

impl PositiveGrading {
    pub fn weight_of(&self, g: &GroupElement) -> i64 {
        dot(&self.functional, &g.free)
    }
}

impl Clone for RingSpec {
    fn clone(&self) -> Self {
        RingSpec::new(self.names.clone(), self.degrees.clone(), self.group.clone())
            .expect("already validated")
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.degrees == other.degrees && self.group == other.group
    }
}

impl Eq for RingSpec {}

impl RingSpec {
    pub fn new(
        names: Vec<String>,
        degrees: Vec<GroupElement>,
        group: AbelianGroup,
    ) -> Result<RingSpec> {
        if names.len() != degrees.len() {
            return Err(Error::Malformed(format!(
                "{} variable names but {} degrees",
                names.len(),
                degrees.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::Malformed(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::Malformed(format!("variable `{name}` appears twice")));
            }
        }
        if let Some(bad) = degrees.iter().find(|g| !group.contains(g)) {
            return Err(Error::Malformed(format!(
                "degree {bad} is not in the grading group"
            )));
        }
        Ok(RingSpec {
            names,
            degrees,
            group,
            weights: OnceLock::new(),
        })
    }

    /// The Cox ring of a fan, graded by its Chow group. Names default to
    /// `x1, …, xn`.
    pub fn cox(fan: &crate::fan::Fan, names: Option<Vec<String>>) -> Result<RingSpec> {
        let g = crate::fan::chow_degree_map(fan);
        let names = names.unwrap_or_else(|| RingSpec::default_names("x", fan.num_rays()));
        if names.len() != fan.num_rays() {
            return Err(Error::Malformed(format!(
                "{} variable names for a fan with {} rays",
                names.len(),
                fan.num_rays()
            )));
        }
        RingSpec::new(names, g.degrees.clone(), g.group().clone())
    }

    /// A ring graded by the trivial group.
    pub fn ungraded(names: Vec<String>) -> Result<RingSpec> {
        let group = AbelianGroup::free(0);
        let degrees = vec![group.zero(); names.len()];
        RingSpec::new(names, degrees, group)
    }

    /// Variables `x1, …, xn`.
    pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables plus `extra` appended, all of degree zero.
    pub fn with_extra_variables(&self, extra: &[String]) -> Result<RingSpec> {
        let mut names = self.names.clone();
        names.extend(extra.iter().cloned());
        let mut degrees = self.degrees.clone();
        degrees.extend(extra.iter().map(|_| self.group.zero()));
        RingSpec::new(names, degrees, self.group.clone())
    }

    pub fn monomial_degree(&self, e: &[u32]) -> GroupElement {
        let coeffs: Vec<i64> = e.iter().map(|&x| x as i64).collect();
        self.group.combination(&coeffs, &self.degrees)
    }

    /// Integer weights `w_i = ⟨λ, deg x_i⟩ ≥ 1`. Such a `λ` exists iff every
    /// graded piece is finite.
    pub fn positive_grading(&self) -> Result<&PositiveGrading> {
        self.weights
            .get_or_init(|| self.compute_weights())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_weights(&self) -> Result<PositiveGrading> {
        let r = self.group.free_rank();
        let cs: Vec<Constraint> = self
            .degrees
            .iter()
            .map(|g| Constraint::from_ints(&g.free, Relation::Ge, 1))
            .collect();
        let lambda = lp::find_feasible(r, &cs).ok_or(Error::UnboundedFiber)?;
        let lcm = lambda
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let lambda: Vec<i64> = lambda
            .iter()
            .map(|x| {
                (x * BigRational::from_integer(lcm.clone()))
                    .to_integer()
                    .to_i64()
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Internal("grading functional overflow".into()))?;
        let weights = self.degrees.iter().map(|g| dot(&lambda, &g.free)).collect();
        Ok(PositiveGrading {
            functional: lambda,
            weights,
        })
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Polynomial with nonzero rational coefficients keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    ring: Arc<RingSpec>,
    terms: BTreeMap<Exponent, BigRational>,
}

impl MultiPoly {
    pub fn zero(ring: &Arc<RingSpec>) -> MultiPoly {
        MultiPoly {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<RingSpec>, c: BigRational) -> MultiPoly {
        MultiPoly::monomial(ring, vec![0; ring.arity()], c)
    }

    pub fn one(ring: &Arc<RingSpec>) -> MultiPoly {
        MultiPoly::constant(ring, BigRational::one())
    }

    pub fn monomial(ring: &Arc<RingSpec>, exponent: Exponent, c: BigRational) -> MultiPoly {
        assert_eq!(exponent.len(), ring.arity(), "exponent arity");
        let mut p = MultiPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(exponent, c);
        }
        p
    }

    pub fn variable(ring: &Arc<RingSpec>, i: usize) -> MultiPoly {
        let mut e = vec![0; ring.arity()];
        e[i] = 1;
        MultiPoly::monomial(ring, e, BigRational::one())
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(
        ring: &Arc<RingSpec>,
        terms: impl IntoIterator<Item = (Exponent, BigRational)>,
    ) -> MultiPoly {
        let mut p = MultiPoly::zero(ring);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        assert_eq!(e.len(), self.ring.arity(), "exponent arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigRational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Product with the monomial `c * z^e`.
    pub fn mul_monomial(&self, e: &[u32], c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, x)| (mul_exponents(t, e), x * c))
            .collect();
        MultiPoly {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }

    pub fn partial_derivative(&self, var: usize) -> MultiPoly {
        assert!(var < self.ring.arity(), "variable index out of range");
        let mut p = MultiPoly::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut f = e.clone();
                f[var] -= 1;
                p.terms
                    .insert(f, c * BigRational::from_integer(BigInt::from(e[var])));
            }
        }
        p
    }

    /// Sets the listed variables to zero.
    pub fn substitute_zero(&self, vars: &[usize]) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| vars.iter().all(|&v| e[v] == 0))
            .map(|(e, c)| (e.clone(), c.clone()));
        MultiPoly {
            ring: Arc::clone(&self.ring),
            terms: terms.collect(),
        }
    }

    /// Sets the listed variables to one.
    pub fn substitute_one(&self, vars: &[usize]) -> MultiPoly {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            for &v in vars {
                e[v] = 0;
            }
            (e, c.clone())
        });
        MultiPoly::from_terms(&self.ring, terms)
    }

    /// Moves the polynomial into `ring`, sending variable `i` to `map[i]`.
    pub fn embed(&self, ring: &Arc<RingSpec>, map: &[usize]) -> MultiPoly {
        assert_eq!(map.len(), self.ring.arity(), "embedding arity");
        let terms = self.terms.iter().map(|(e, c)| {
            let mut f = vec![0; ring.arity()];
            for (i, &x) in e.iter().enumerate() {
                f[map[i]] += x;
            }
            (f, c.clone())
        });
        MultiPoly::from_terms(ring, terms)
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }
}

pub fn mul_exponents(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), -c.clone());
        }
        p
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut p = MultiPoly::zero(&self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                p.add_term(mul_exponents(a, b), x * y);
            }
        }
        p
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-BigRational::one())
    }
}

pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(names: &[String], e: &[u32]) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                names[i].clone()
            } else {
                format!("{}^{k}", names[i])
            }
        })
        .collect();
    factors.join("*")
}

fn format_term(names: &[String], e: &[u32], c: &BigRational) -> String {
    let mono = format_monomial(names, e);
    if mono.is_empty() {
        format_rational(c)
    } else if c.is_one() {
        mono
    } else if (-c).is_one() {
        format!("-{mono}")
    } else {
        format!("{}*{mono}", format_rational(c))
    }
}

/// Terms are printed in decreasing lexicographic order of exponents.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let body = format_term(&self.ring.names, e, &c.abs());
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
            } else {
                write!(f, " {} {body}", if c.is_negative() { '-' } else { '+' })?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn identifier(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.text.len()
            && (self.text[self.pos].is_ascii_alphanumeric() || self.text[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos]).expect("ascii identifier")
    }

    fn term(&mut self, ring: &RingSpec) -> Result<(Exponent, BigRational)> {
        let mut e = vec![0u32; ring.arity()];
        let mut c = BigRational::one();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.number()?;
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let den = self.number()?;
                        if den.is_zero() {
                            return self.error("zero denominator");
                        }
                        c *= BigRational::new(num, den);
                    } else {
                        c *= BigRational::from_integer(num);
                    }
                }
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let name = self.identifier();
                    let i = ring
                        .index_of(name)
                        .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                    let k = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.number()?.to_u32().ok_or(Error::Syntax {
                            pos: self.pos,
                            message: "exponent too large".into(),
                        })?
                    } else {
                        1
                    };
                    e[i] += k;
                }
                Some(_) => return self.error("expected a coefficient or a variable"),
                None => return self.error("unexpected end of input"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((e, c));
            }
        }
    }
}

/// Parses `coeff*x1^2*y3 - 1/2*x2 + …`.
pub fn parse_polynomial(ring: &Arc<RingSpec>, text: &str) -> Result<MultiPoly> {
    let mut parser = Parser {
        text: text.as_bytes(),
        pos: 0,
    };
    let mut p = MultiPoly::zero(ring);
    let mut first = true;
    loop {
        let mut negative = false;
        match parser.peek() {
            None if first => return parser.error("empty polynomial"),
            None => break,
            Some(b'+') | Some(b'-') => {
                negative = parser.text[parser.pos] == b'-';
                parser.pos += 1;
            }
            Some(_) if first => {}
            Some(_) => return parser.error("expected `+` or `-`"),
        }
        first = false;
        let (e, c) = parser.term(ring)?;
        p.add_term(e, if negative { -c } else { c });
    }
    Ok(p)
}

/// The common degree of all terms.
pub fn degree_of(p: &MultiPoly) -> Result<GroupElement> {
    let mut iter = p.terms.iter();
    let (e0, c0) = iter.next().ok_or(Error::ZeroPolynomial)?;
    let d0 = p.ring.monomial_degree(e0);
    for (e, c) in iter {
        if p.ring.monomial_degree(e) != d0 {
            return Err(Error::NotHomogeneous {
                first: format_term(&p.ring.names, e0, c0),
                second: format_term(&p.ring.names, e, c),
            });
        }
    }
    Ok(d0)
}

pub fn partial_derivative(p: &MultiPoly, var: usize) -> MultiPoly {
    p.partial_derivative(var)
}

/// Every exponent vector of degree `gamma`, in lexicographic order.
///
/// Variables are split into a block of independent "solved" variables and
/// the rest; the rest are enumerated under the weight budget of a positive
/// grading and the solved block is recovered by an exact integer solve.
pub fn monomials_of_degree(ring: &RingSpec, gamma: &GroupElement) -> Result<Vec<Exponent>> {
    let n = ring.arity();
    if !ring.group.contains(gamma) {
        return Err(Error::Malformed(format!(
            "degree {gamma} is not in the grading group"
        )));
    }
    if n == 0 {
        return Ok(if ring.group.is_zero(gamma) {
            vec![vec![]]
        } else {
            vec![]
        });
    }
    let pg = ring.positive_grading()?;
    let budget = pg.weight_of(gamma);
    if budget < 0 {
        return Ok(Vec::new());
    }
    let free =
        |i: usize| -> Vec<i128> { ring.degrees[i].free.iter().map(|&x| x as i128).collect() };
    let r = ring.group.free_rank();

    // solved columns, chosen greedily from the last variable backwards
    let mut echelon: Vec<Vec<BigRational>> = Vec::new();
    let mut solved: Vec<usize> = Vec::new();
    for i in (0..n).rev() {
        let mut v: Vec<BigRational> = free(i)
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        for row in &echelon {
            let p = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero echelon row");
            if !v[p].is_zero() {
                let f = &v[p] / &row[p];
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= &f * b;
                }
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            echelon.push(v);
            solved.push(i);
            if solved.len() == r {
                break;
            }
        }
    }
    solved.sort_unstable();
    let rho = solved.len();
    // independent rows of the r × rho block
    let mut rows: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    for k in 0..r {
        let v: Vec<BigRational> = solved
            .iter()
            .map(|&i| BigRational::from_integer(BigInt::from(ring.degrees[i].free[k])))
            .collect();
        let mut cand = basis.clone();
        cand.push(v);
        if crate::linalg::dense_rank(&cand) == cand.len() {
            basis = cand;
            rows.push(k);
        }
        if rows.len() == rho {
            break;
        }
    }
    let block: Vec<Vec<i128>> = rows
        .iter()
        .map(|&k| {
            solved
                .iter()
                .map(|&i| ring.degrees[i].free[k] as i128)
                .collect()
        })
        .collect();
    let (det, adj) = det_and_adjugate(&block);
    let others: Vec<usize> = (0..n).filter(|i| !solved.contains(i)).collect();
    let target: Vec<i128> = rows.iter().map(|&k| gamma.free[k] as i128).collect();

    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    let ctx = Search {
        ring,
        gamma,
        weights: &pg.weights,
        others: &others,
        solved: &solved,
        rows: &rows,
        det,
        adj: &adj,
    };
    ctx.dfs(0, budget, target, &mut current, &mut out);
    out.sort_unstable();
    Ok(out)
}

struct Search<'a> {
    ring: &'a RingSpec,
    gamma: &'a GroupElement,
    weights: &'a [i64],
    others: &'a [usize],
    solved: &'a [usize],
    rows: &'a [usize],
    det: i128,
    adj: &'a [Vec<i128>],
}

impl Search<'_> {
    fn dfs(
        &self,
        level: usize,
        budget: i64,
        rhs: Vec<i128>,
        current: &mut Exponent,
        out: &mut Vec<Exponent>,
    ) {
        if level == self.others.len() {
            self.finish(&rhs, current, out);
            return;
        }
        let i = self.others[level];
        let w = self.weights[i];
        let mut rhs = rhs;
        let mut k = 0u32;
        loop {
            current[i] = k;
            self.dfs(level + 1, budget - w * k as i64, rhs.clone(), current, out);
            if budget - w * (k as i64 + 1) < 0 {
                break;
            }
            k += 1;
            for (x, &row) in rhs.iter_mut().zip(self.rows) {
                *x -= self.ring.degrees[i].free[row] as i128;
            }
        }
        current[i] = 0;
    }

    fn finish(&self, rhs: &[i128], current: &mut Exponent, out: &mut Vec<Exponent>) {
        for (j, &var) in self.solved.iter().enumerate() {
            let num: i128 = self.adj[j].iter().zip(rhs).map(|(a, b)| a * b).sum();
            if num % self.det != 0 {
                return clear(current, self.solved);
            }
            let v = num / self.det;
            if v < 0 {
                return clear(current, self.solved);
            }
            current[var] = v as u32;
        }
        if self.ring.monomial_degree(current) == *self.gamma {
            out.push(current.clone());
        }
        clear(current, self.solved);
    }
}

fn clear(current: &mut [u32], vars: &[usize]) {
    for &v in vars {
        current[v] = 0;
    }
}

/// Determinant and adjugate of a small integer matrix, with
/// `adj * m = det * I`.
fn det_and_adjugate(m: &[Vec<i128>]) -> (i128, Vec<Vec<i128>>) {
    let n = m.len();
    if n == 0 {
        return (1, Vec::new());
    }
    let det = |a: &[Vec<i128>]| -> i128 {
        let mat = crate::abelian::IntMatrix::from_rows(
            &a.iter()
                .map(|r| r.iter().map(|&x| x as i64).collect())
                .collect::<Vec<_>>(),
        );
        mat.determinant().to_i128().expect("small determinant")
    };
    let d = det(m);
    if n == 1 {
        return (d, vec![vec![1]]);
    }
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c]).collect())
                .collect();
            let cof = det(&minor);
            adj[j][i] = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    (d, adj)
}

/// True iff every term is divisible by some generator of `b`. The ideal's
/// variables are the first `b.num_vars` variables of the ring.
pub fn in_irrelevant_ideal(p: &MultiPoly, b: &IrrelevantIdeal) -> bool {
    p.terms
        .keys()
        .all(|e| b.generators.iter().any(|g| g.iter().all(|&i| e[i] > 0)))
}
