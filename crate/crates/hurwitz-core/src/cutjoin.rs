//! The truncated generating function of all class factorization counts in
//! auxiliary variables `p_1, p_2, ...` and the cut-and-join differential
//! equation it satisfies.
//!
//! The series is stored blockwise by (p-weight, w-degree): the equation
//! preserves the p-weight and lowers the w-degree by exactly one on the
//! derivative side, so each block can be compared independently and a
//! failure localizes.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::oracle;
use crate::perm::CycleType;
use crate::rat::{factorial_rat, format_rat, rat, rat_int, Rat};
use crate::wring::{Monomial, WPolynomial};
use crate::{Error, Result};

/// A truncated series: exact rational coefficients indexed by a partition
/// (the `p`-monomial) and a `w`-monomial. Bounds: the partition weight is
/// at most `n_max`, the `w`-degree at most `m_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PSeries {
    n_max: usize,
    m_max: usize,
    terms: BTreeMap<(CycleType, Monomial), Rat>,
}

impl PSeries {
    pub fn new(n_max: usize, m_max: usize) -> Self {
        PSeries {
            n_max,
            m_max,
            terms: BTreeMap::new(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn add_term(&mut self, lambda: CycleType, mono: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert!(lambda.n() <= self.n_max);
        debug_assert!(mono.degree() <= self.m_max);
        let key = (lambda, mono);
        let entry = self.terms.entry(key);
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

    pub fn coeff(&self, lambda: &CycleType, mono: &Monomial) -> Rat {
        self.terms
            .get(&(lambda.clone(), mono.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(CycleType, Monomial), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Drop every term of `w`-degree above `m_max`.
    pub fn truncated_w(&self, m_max: usize) -> PSeries {
        PSeries {
            n_max: self.n_max,
            m_max,
            terms: self
                .terms
                .iter()
                .filter(|((_, mono), _)| mono.degree() <= m_max)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// The `w`-polynomial sitting in the `(lambda, w-degree m)` block, in
    /// ambient size `|lambda|`.
    pub fn block_poly(&self, lambda: &CycleType, m: usize) -> WPolynomial {
        let n = lambda.n();
        let mut out = WPolynomial::zero(n);
        for ((l, mono), c) in &self.terms {
            if l == lambda && mono.degree() == m {
                out.add_term(mono.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((lambda, mono), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} {mono} p[{lambda}]", format_rat(c))?;
        }
        Ok(())
    }
}

/// Build the truncated generating function: for every partition of weight
/// up to `n_max` and every admissible factor count `m` up to `m_max`, the
/// enumerated class polynomial contributes its monomials with coefficient
/// `1 / (m! n!)` against the partition's `p`-monomial.
///
/// Tuple lengths satisfy `m = n + 2g - 2 + s`, so `m` and `n + s` share
/// parity; `g` ranges over every integer (negative included) keeping
/// `m >= 0`.
pub fn build_h(n_max: usize, m_max: usize, budget: u128) -> Result<PSeries> {
    let mut h = PSeries::new(n_max, m_max);
    for n in 1..=n_max {
        for lambda in CycleType::all_of(n) {
            let s = lambda.num_parts();
            for m in 0..=m_max {
                if (m + n + s) % 2 != 0 {
                    continue;
                }
                let g = (m as i64 - n as i64 - s as i64 + 2) / 2;
                let p = oracle::hurwitz_poly_lambda(&lambda, g, budget)?;
                let norm = (factorial_rat(m) * factorial_rat(n)).recip();
                for (mono, c) in p.terms() {
                    h.add_term(lambda.clone(), mono.clone(), c * &norm);
                }
            }
        }
    }
    Ok(h)
}

fn remove_part(parts: &[usize], value: usize) -> Vec<usize> {
    let mut out = parts.to_vec();
    let k = out.iter().position(|&p| p == value).expect("part present");
    out.remove(k);
    out
}

/// Apply the cut-and-join operator
/// `L = 1/2 sum_{k,l>=1} ((k+l) p_k p_l d/dp_{k+l} + k l p_{k+l} d^2/(dp_k dp_l))`
/// to the series. The `p`-weight of every term is conserved.
pub fn apply_l(s: &PSeries) -> PSeries {
    let mut out = PSeries::new(s.n_max(), s.m_max());
    let half = rat(1, 2);
    for ((lambda, mono), c) in s.terms() {
        let parts = lambda.parts();
        let mut distinct: Vec<(usize, usize)> = Vec::new(); // (part, multiplicity)
        for &p in parts {
            match distinct.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => distinct.push((p, 1)),
            }
        }
        // Cut: d/dp_{k+l} replaces one part j = k + l by k and l, over
        // ordered pairs (k, l).
        for &(j, mult) in &distinct {
            if j < 2 {
                continue;
            }
            let base = remove_part(parts, j);
            for k in 1..j {
                let l = j - k;
                let mut new_parts = base.clone();
                new_parts.push(k);
                new_parts.push(l);
                let coeff =
                    half.clone() * rat_int(j as i64) * rat_int(mult as i64) * c.clone();
                out.add_term(
                    CycleType::new(new_parts).expect("parts stay positive"),
                    mono.clone(),
                    coeff,
                );
            }
        }
        // Join: d^2/(dp_k dp_l) replaces parts k and l by k + l, over
        // ordered pairs (k, l).
        for &(k, mult_k) in &distinct {
            for &(l, mult_l) in &distinct {
                let pairs = if k == l {
                    mult_k * (mult_k - 1)
                } else {
                    mult_k * mult_l
                };
                if pairs == 0 {
                    continue;
                }
                let mut new_parts = remove_part(&remove_part(parts, k), l);
                new_parts.push(k + l);
                let coeff = half.clone()
                    * rat_int((k * l) as i64)
                    * rat_int(pairs as i64)
                    * c.clone();
                out.add_term(
                    CycleType::new(new_parts).expect("parts stay positive"),
                    mono.clone(),
                    coeff,
                );
            }
        }
    }
    out
}

/// The sum over all variable pairs of the partial `w`-derivatives; the
/// result is complete up to `w`-degree `m_max - 1`.
pub fn d_dw(s: &PSeries) -> PSeries {
    let mut out = PSeries::new(s.n_max(), s.m_max().saturating_sub(1));
    for ((lambda, mono), c) in s.terms() {
        for &(var, e) in mono.factors() {
            let reduced = mono.without_one(var).expect("factor present");
            out.add_term(lambda.clone(), reduced, c * rat_int(e as i64));
        }
    }
    out
}

/// Outcome of the cut-and-join comparison.
#[derive(Debug, Clone)]
pub struct CutJoinReport {
    pub n_max: usize,
    pub m_max: usize,
    pub equal: bool,
    /// First differing coefficient: partition, monomial, derivative side,
    /// operator side.
    pub first_diff: Option<(CycleType, Monomial, Rat, Rat)>,
}

/// Verify the cut-and-join equation on the truncation: the summed
/// `w`-derivative of the series equals the operator applied to it, block
/// by block up to `w`-degree `m_max - 1`.
pub fn verify_cutjoin(n_max: usize, m_max: usize, budget: u128) -> Result<CutJoinReport> {
    if m_max == 0 {
        return Err(Error::InvalidTask("m_max must be at least 1".into()));
    }
    let h = build_h(n_max, m_max, budget)?;
    let lhs = d_dw(&h);
    let rhs = apply_l(&h).truncated_w(m_max - 1);
    let mut first_diff = None;
    let mut keys: Vec<(CycleType, Monomial)> = lhs
        .terms()
        .chain(rhs.terms())
        .map(|(k, _)| k.clone())
        .collect();
    keys.sort();
    keys.dedup();
    for (lambda, mono) in keys {
        let a = lhs.coeff(&lambda, &mono);
        let b = rhs.coeff(&lambda, &mono);
        if a != b {
            first_diff = Some((lambda, mono, a, b));
            break;
        }
    }
    Ok(CutJoinReport {
        n_max,
        m_max,
        equal: first_diff.is_none(),
        first_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_BUDGET;

    fn lam(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    fn single(lambda: &CycleType) -> PSeries {
        let mut s = PSeries::new(lambda.n(), 0);
        s.add_term(lambda.clone(), Monomial::unit(), rat_int(1));
        s
    }

    #[test]
    fn operator_on_single_terms() {
        // L p_2 = p_1^2 (cut only).
        let out = apply_l(&single(&lam(&[2])));
        assert_eq!(out.coeff(&lam(&[1, 1]), &Monomial::unit()), rat_int(1));
        assert_eq!(out.num_terms(), 1);
        // L p_1^2 = p_2 (join only).
        let out = apply_l(&single(&lam(&[1, 1])));
        assert_eq!(out.coeff(&lam(&[2]), &Monomial::unit()), rat_int(1));
        assert_eq!(out.num_terms(), 1);
        // L p_1 = 0.
        assert_eq!(apply_l(&single(&lam(&[1]))).num_terms(), 0);
        // L (p_2 p_1) = p_1^3 + 2 p_3.
        let out = apply_l(&single(&lam(&[2, 1])));
        assert_eq!(out.coeff(&lam(&[1, 1, 1]), &Monomial::unit()), rat_int(1));
        assert_eq!(out.coeff(&lam(&[3]), &Monomial::unit()), rat_int(2));
        assert_eq!(out.num_terms(), 2);
    }

    #[test]
    fn operator_preserves_weight() {
        let h = build_h(3, 3, DEFAULT_BUDGET).unwrap();
        for ((lambda, _), _) in apply_l(&h).terms() {
            assert!(lambda.n() <= 3);
        }
        // Single-term weight conservation, exact.
        for lambda in CycleType::all_of(4) {
            for ((out_lambda, _), _) in apply_l(&single(&lambda)).terms() {
                assert_eq!(out_lambda.n(), 4);
            }
        }
    }

    #[test]
    fn low_degree_blocks_by_hand() {
        let h = build_h(2, 3, DEFAULT_BUDGET).unwrap();
        let w = Monomial::from_pairs(&[(1, 2)]).unwrap();
        let w3 = Monomial::from_pairs(&[(1, 2), (1, 2), (1, 2)]).unwrap();
        // Empty-product blocks: the all-ones partition of each weight.
        assert_eq!(h.coeff(&lam(&[1]), &Monomial::unit()), rat_int(1));
        assert_eq!(h.coeff(&lam(&[1, 1]), &Monomial::unit()), rat(1, 2));
        // One factor in degree 2: w p_2 / 2.
        assert_eq!(h.coeff(&lam(&[2]), &w), rat(1, 2));
        // Three factors in degree 2: w^3 p_2 / 12.
        assert_eq!(h.coeff(&lam(&[2]), &w3), rat(1, 12));
    }

    #[test]
    fn generating_function_recovers_class_polynomials() {
        // n! m! times a block recovers the enumerated polynomial.
        let h = build_h(3, 4, DEFAULT_BUDGET).unwrap();
        for lambda in CycleType::all_of(3) {
            for m in 0..=4usize {
                if (m + 3 + lambda.num_parts()) % 2 != 0 {
                    continue;
                }
                let g = (m as i64 - 3 - lambda.num_parts() as i64 + 2) / 2;
                let direct = oracle::hurwitz_poly_lambda(&lambda, g, DEFAULT_BUDGET).unwrap();
                let block = h
                    .block_poly(&lambda, m)
                    .scale(&(factorial_rat(m) * factorial_rat(3)));
                assert_eq!(block, direct, "block ({lambda}, {m})");
            }
        }
    }

    #[test]
    fn equation_holds_on_small_truncations() {
        for (n_max, m_max) in [(2, 4), (3, 4)] {
            let report = verify_cutjoin(n_max, m_max, DEFAULT_BUDGET).unwrap();
            assert!(
                report.equal,
                "cut-and-join failed at ({n_max},{m_max}): {:?}",
                report.first_diff
            );
        }
    }

    #[test]
    fn all_ones_substitution_matches_weighted_counts() {
        // Substituting 1 for every w leaves the classical coefficients
        // h_{g,lambda} / m! per p-monomial block.
        let h = build_h(3, 3, DEFAULT_BUDGET).unwrap();
        for lambda in CycleType::all_of(3) {
            for m in 0..=3usize {
                if (m + 3 + lambda.num_parts()) % 2 != 0 {
                    continue;
                }
                let g = (m as i64 - 3 - lambda.num_parts() as i64 + 2) / 2;
                let number = oracle::hurwitz_number_lambda(&lambda, g, DEFAULT_BUDGET).unwrap();
                assert_eq!(
                    h.block_poly(&lambda, m).eval_ones(),
                    number / factorial_rat(m)
                );
            }
        }
    }
}
