//! Symmetric-group arithmetic: permutations of `{1..n}`, transpositions,
//! cycle types, and cycle-notation parsing/printing.
//!
//! Indices are one-based throughout, and products are read right to left:
//! `a.compose(&b)` applies `b` first, then `a`.

use std::fmt;

use num_bigint::BigInt;

use crate::rat::factorial;
use crate::{Error, Result};

/// A permutation of `{1..n}`, stored as the image vector:
/// `images[i-1]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Build from an image vector, checking that it is a bijection of `{1..n}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotBijection(n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i j)` inside `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::DegenerateTransposition);
        }
        for &v in &[i, j] {
            if v < 1 || v > n {
                return Err(Error::VertexRange(v, n));
            }
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a point (one-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let images = (1..=self.n()).map(|i| self.apply(other.apply(i))).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Cycle decomposition including fixed points, each cycle led by its
    /// smallest element, cycles sorted by leading element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        parts.sort_unstable();
        CycleType { parts }
    }

    /// True iff the permutation is a single n-cycle.
    pub fn is_n_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Parse cycle notation such as `"(1 2 3)(4 5)"`; omitted points are
    /// fixed. `"()"` and the empty string denote the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n];
        let body = s.trim();
        if body.is_empty() || body == "()" {
            return Ok(Permutation { images });
        }
        let mut rest = body;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!("garbage in cycle notation {s:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed '(' in {s:?}")))?;
            let inner = &rest[open + 1..close];
            rest = &rest[close + 1..];
            let pts: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?;
            for &p in &pts {
                if p < 1 || p > n {
                    return Err(Error::VertexRange(p, n));
                }
                if used[p - 1] {
                    return Err(Error::Parse(format!("point {p} repeated in {s:?}")));
                }
                used[p - 1] = true;
            }
            for k in 0..pts.len() {
                images[pts[k] - 1] = pts[(k + 1) % pts.len()];
            }
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<usize>> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A transposition `(i j)` with `i < j`, kept separate from [`Permutation`]
/// because it is the unit the enumeration and the edge variables speak.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    i: usize,
    j: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateTransposition);
        }
        if a == 0 || b == 0 {
            return Err(Error::VertexRange(0, usize::MAX));
        }
        Ok(Transposition {
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

    pub fn as_permutation(&self, n: usize) -> Result<Permutation> {
        Permutation::transposition(n, self.i, self.j)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.i, self.j)
    }
}

/// A partition of `n`: nondecreasing positive parts, fixed points included,
/// so the parts always sum to the ambient degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::BadCycleType("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::BadCycleType("zero part".into()));
        }
        parts.sort_unstable();
        Ok(CycleType { parts })
    }

    pub fn single(n: usize) -> Self {
        CycleType { parts: vec![n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Number of part-preserving permutations of the parts:
    /// the product of the factorials of the multiplicities.
    pub fn aut_count(&self) -> BigInt {
        let mut acc = num_traits::One::one();
        let mut run = 1usize;
        for k in 1..=self.parts.len() {
            if k < self.parts.len() && self.parts[k] == self.parts[k - 1] {
                run += 1;
            } else {
                acc *= factorial(run);
                run = 1;
            }
        }
        acc
    }

    /// All partitions of `n`, each as a nondecreasing part list.
    pub fn all_of(n: usize) -> Vec<CycleType> {
        fn rec(remaining: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<CycleType>) {
            if remaining == 0 {
                let mut parts = stack.clone();
                parts.reverse();
                out.push(CycleType { parts });
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                stack.push(next);
                rec(remaining - next, next, stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Parse a comma list such as `"2,1,1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::BadCycleType(format!("bad part {t:?}")))
            })
            .collect::<Result<_>>()?;
        CycleType::new(parts)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in self.parts.iter().rev() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(n: usize, i: usize, j: usize) -> Permutation {
        Permutation::transposition(n, i, j).unwrap()
    }

    #[test]
    fn compose_is_right_to_left() {
        let t12 = tau(3, 1, 2);
        let t23 = tau(3, 2, 3);
        // An involution squares to the identity.
        assert!(t12.compose(&t12).unwrap().is_identity());
        // Apply (23) first, then (12): 1->2, 2->3, 3->1.
        let p = t12.compose(&t23).unwrap();
        assert_eq!(p, Permutation::from_images(vec![2, 3, 1]).unwrap());
        // Identity is neutral.
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&id).unwrap(), p);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(
            Permutation::identity(3).cycle_type(),
            CycleType::new(vec![1, 1, 1]).unwrap()
        );
        let c3 = Permutation::from_images(vec![2, 3, 1]).unwrap();
        assert_eq!(c3.cycle_type(), CycleType::single(3));
        // (13)(12)(13)(12), read right to left, is the 3-cycle (1 3 2).
        let t12 = tau(3, 1, 2);
        let t13 = tau(3, 1, 3);
        let p = t13
            .compose(&t12.compose(&t13.compose(&t12).unwrap()).unwrap())
            .unwrap();
        assert_eq!(p, Permutation::from_images(vec![3, 1, 2]).unwrap());
        assert_eq!(p.cycle_type(), CycleType::single(3));
    }

    #[test]
    fn n_cycle_predicate() {
        let c3 = Permutation::from_images(vec![2, 3, 1]).unwrap();
        assert!(c3.is_n_cycle());
        assert!(!Permutation::identity(2).is_n_cycle());
        assert!(!tau(4, 1, 2).is_n_cycle());
        assert!(Permutation::identity(1).is_n_cycle());
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = Permutation::parse_cycles(5, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p, Permutation::from_images(vec![2, 3, 1, 5, 4]).unwrap());
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        let q = Permutation::parse_cycles(5, &p.to_string()).unwrap();
        assert_eq!(p, q);
        assert_eq!(Permutation::parse_cycles(3, "()").unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::parse_cycles(3, "(1 1)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
    }

    #[test]
    fn bijection_validation() {
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_images(vec![2, 3]).is_err());
    }

    #[test]
    fn cycle_type_aut_counts() {
        let t = CycleType::new(vec![1, 1, 2, 2, 2, 5]).unwrap();
        assert_eq!(t.aut_count(), BigInt::from(12)); // 2! * 3! * 1!
        assert_eq!(CycleType::single(4).aut_count(), BigInt::from(1));
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(CycleType::all_of(4).len(), 5);
        assert_eq!(CycleType::all_of(6).len(), 11);
        for t in CycleType::all_of(5) {
            assert_eq!(t.n(), 5);
        }
    }

    #[test]
    fn transposition_normalizes_order() {
        let t = Transposition::new(4, 2).unwrap();
        assert_eq!((t.i(), t.j()), (2, 4));
        assert!(Transposition::new(3, 3).is_err());
    }
}
