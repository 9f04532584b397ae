//! Edge variables, monomials, and exact-rational polynomials in them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde_json::{json, Value};

use crate::perm::Permutation;
use crate::rat::{format_rat, parse_rat, Rat};
use crate::{Error, Result};

/// The variable `w[i,j]` with `i < j`; `w[i,j] = w[j,i]` is enforced by
/// always storing the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeVar {
    i: usize,
    j: usize,
}

impl EdgeVar {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::LoopVariable(a));
        }
        if a == 0 || b == 0 {
            return Err(Error::VertexRange(0, usize::MAX));
        }
        Ok(EdgeVar {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

impl fmt::Display for EdgeVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w({},{})", self.i, self.j)
    }
}

/// A monomial: a sorted list of `(variable, exponent >= 1)` pairs.
/// Two equal monomials are structurally identical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    factors: Vec<(EdgeVar, u32)>,
}

impl Monomial {
    /// The empty monomial, i.e. the constant 1.
    pub fn unit() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn from_vars<I: IntoIterator<Item = EdgeVar>>(vars: I) -> Self {
        let mut counts: BTreeMap<EdgeVar, u32> = BTreeMap::new();
        for v in vars {
            *counts.entry(v).or_insert(0) += 1;
        }
        Monomial {
            factors: counts.into_iter().collect(),
        }
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let vars: Vec<EdgeVar> = pairs
            .iter()
            .map(|&(a, b)| EdgeVar::new(a, b))
            .collect::<Result<_>>()?;
        Ok(Monomial::from_vars(vars))
    }

    pub fn var(v: EdgeVar) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    pub fn factors(&self) -> &[(EdgeVar, u32)] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total degree.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn exponent(&self, v: EdgeVar) -> u32 {
        self.factors
            .binary_search_by_key(&v, |&(u, _)| u)
            .map(|k| self.factors[k].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut counts: BTreeMap<EdgeVar, u32> = self.factors.iter().copied().collect();
        for &(v, e) in &other.factors {
            *counts.entry(v).or_insert(0) += e;
        }
        Monomial {
            factors: counts.into_iter().collect(),
        }
    }

    /// Divide by one power of `v`, or `None` if `v` does not occur.
    pub fn without_one(&self, v: EdgeVar) -> Option<Monomial> {
        let k = self.factors.binary_search_by_key(&v, |&(u, _)| u).ok()?;
        let mut factors = self.factors.clone();
        if factors[k].1 == 1 {
            factors.remove(k);
        } else {
            factors[k].1 -= 1;
        }
        Some(Monomial { factors })
    }

    /// The distinct vertex indices touched by the monomial, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|&(v, _)| [v.i(), v.j()])
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn max_vertex(&self) -> usize {
        self.factors.iter().map(|&(v, _)| v.j()).max().unwrap_or(0)
    }

    pub fn touches(&self, vertex: usize) -> bool {
        self.factors
            .iter()
            .any(|&(v, _)| v.i() == vertex || v.j() == vertex)
    }

    /// Apply a relabeling of the vertex indices.
    pub fn relabeled(&self, map: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_vars(self.factors.iter().flat_map(|&(v, e)| {
            std::iter::repeat_n(
                EdgeVar::new(map(v.i()), map(v.j())).expect("relabel keeps i != j"),
                e as usize,
            )
        }))
    }

    /// Each variable repeated by its exponent, ascending.
    pub fn edge_instances(&self) -> Vec<EdgeVar> {
        self.factors
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize))
            .collect()
    }

    /// Text key in the shared edge-list format, e.g. `"1-2;1-2;2-3"`;
    /// the unit monomial is the empty string.
    pub fn edges_string(&self) -> String {
        self.edge_instances()
            .iter()
            .map(|v| format!("{}-{}", v.i(), v.j()))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parse the output of [`Monomial::edges_string`].
    pub fn parse_edges(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Monomial::unit());
        }
        let mut vars = Vec::new();
        for piece in s.split(';') {
            let (a, b) = piece
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge {piece:?}")))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad endpoint in {piece:?}")))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad endpoint in {piece:?}")))?;
            vars.push(EdgeVar::new(a, b)?);
        }
        Ok(Monomial::from_vars(vars))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in the `w[i,j]` with `j <= n`, with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPolynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl WPolynomial {
    pub fn zero(n: usize) -> Self {
        WPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        let mut p = WPolynomial::zero(n);
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn one(n: usize) -> Self {
        WPolynomial::constant(n, Rat::from_integer(1.into()))
    }

    pub fn var(n: usize, v: EdgeVar) -> Result<Self> {
        if v.j() > n {
            return Err(Error::VertexRange(v.j(), n));
        }
        let mut p = WPolynomial::zero(n);
        p.add_term(Monomial::var(v), Rat::from_integer(1.into()));
        Ok(p)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(n: usize, terms: I) -> Result<Self> {
        let mut p = WPolynomial::zero(n);
        for (m, c) in terms {
            if m.max_vertex() > n {
                return Err(Error::VertexRange(m.max_vertex(), n));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Ambient size: variables range over pairs inside `{1..n}`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Add `c * m` in place, dropping the entry if the sum vanishes.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.max_vertex() <= self.n);
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> WPolynomial {
        if c.is_zero() {
            return WPolynomial::zero(self.n);
        }
        WPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> WPolynomial {
        let mut acc = WPolynomial::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Total degree of the highest term; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn homogeneous_part(&self, d: usize) -> WPolynomial {
        WPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute `w[i,j] = 1` for all variables.
    pub fn eval_ones(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    /// Evaluate at an arbitrary assignment.
    pub fn eval(&self, assign: &dyn Fn(EdgeVar) -> Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let val = assign(v);
                for _ in 0..e {
                    t *= val.clone();
                }
            }
            acc += t;
        }
        acc
    }

    /// Drop every monomial touching vertex `n`; the result lives in
    /// ambient size `n - 1`.
    pub fn project(&self) -> WPolynomial {
        assert!(self.n >= 2, "projection needs n >= 2");
        WPolynomial {
            n: self.n - 1,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.touches(self.n))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The action of a permutation of `{1..n}` on variable indices.
    pub fn relabeled(&self, p: &Permutation) -> WPolynomial {
        assert_eq!(p.n(), self.n);
        let mut out = WPolynomial::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.relabeled(|v| p.apply(v)), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "terms": self
                .terms
                .iter()
                .map(|(m, c)| json!({ "monomial": m.edges_string(), "coeff": format_rat(c) }))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing field n".into()))? as usize;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing field terms".into()))?;
        let mut p = WPolynomial::zero(n);
        for t in terms {
            let m = t
                .get("monomial")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("missing monomial".into()))?;
            let c = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("missing coeff".into()))?;
            let m = Monomial::parse_edges(m)?;
            if m.max_vertex() > n {
                return Err(Error::VertexRange(m.max_vertex(), n));
            }
            p.add_term(m, parse_rat(c)?);
        }
        Ok(p)
    }
}

impl fmt::Display for WPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{}", format_rat(c))?;
            } else if c == &Rat::from_integer(1.into()) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} {m}", format_rat(c))?;
            }
        }
        Ok(())
    }
}

impl Add for &WPolynomial {
    type Output = WPolynomial;
    fn add(self, rhs: &WPolynomial) -> WPolynomial {
        assert_eq!(self.n, rhs.n, "ambient size mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &WPolynomial {
    type Output = WPolynomial;
    fn sub(self, rhs: &WPolynomial) -> WPolynomial {
        assert_eq!(self.n, rhs.n, "ambient size mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &WPolynomial {
    type Output = WPolynomial;
    fn neg(self) -> WPolynomial {
        WPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &WPolynomial {
    type Output = WPolynomial;
    fn mul(self, rhs: &WPolynomial) -> WPolynomial {
        assert_eq!(self.n, rhs.n, "ambient size mismatch");
        let mut out = WPolynomial::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}
