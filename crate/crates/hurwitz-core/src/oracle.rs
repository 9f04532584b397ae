//! Brute-force ground truth: enumerate every ordered tuple of
//! transpositions and sum the edge monomials of the tuples whose
//! right-to-left product hits the target.
//!
//! Nothing is pruned before the leaf; the target is checked only once the
//! tuple is complete, so the counts can be audited against the definitions
//! directly. The enumeration splits over the first transposition and runs
//! the branches in parallel; the merge is exact addition, so the result is
//! independent of the split.

use rayon::prelude::*;

use std::collections::BTreeMap;

use crate::perm::{CycleType, Permutation, Transposition};
use crate::rat::{factorial_rat, Rat};
use crate::wring::{EdgeVar, Monomial, WPolynomial};
use crate::{Error, Result};

/// Default cap on leaf visits.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// What the product of the tuple must be.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorTarget {
    /// A single n-cycle.
    NCycle,
    /// Any permutation of the given cycle type.
    Class(CycleType),
}

/// A fully specified enumeration: degree, target, tuple length.
#[derive(Debug, Clone)]
pub struct FactorizationTask {
    pub n: usize,
    pub target: FactorTarget,
    pub m: usize,
}

impl FactorizationTask {
    /// Factorizations of an n-cycle into `n + 2g - 1` transpositions.
    pub fn n_cycle(n: usize, g: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTask("degree must be positive".into()));
        }
        Ok(FactorizationTask {
            n,
            target: FactorTarget::NCycle,
            m: n + 2 * g as usize - 1,
        })
    }

    /// Factorizations landing in the conjugacy class of `lambda` using
    /// `n + 2g - 2 + s` transpositions. Negative `g` is meaningful here
    /// (disconnected covers), as long as the tuple length is nonnegative.
    pub fn class(lambda: &CycleType, g: i64) -> Result<Self> {
        let n = lambda.n();
        let s = lambda.num_parts();
        let m = n as i64 + 2 * g - 2 + s as i64;
        if m < 0 {
            return Err(Error::InvalidTask(format!(
                "tuple length n + 2g - 2 + s = {m} is negative"
            )));
        }
        Ok(FactorizationTask {
            n,
            target: FactorTarget::Class(lambda.clone()),
            m: m as usize,
        })
    }

    /// Number of leaves the enumeration will visit: `C(n,2)^m`.
    pub fn leaf_count(&self) -> u128 {
        let t = (self.n * (self.n - 1) / 2) as u128;
        let mut acc: u128 = 1;
        for _ in 0..self.m {
            acc = acc.saturating_mul(t);
        }
        acc
    }

    fn matches(&self, p: &Permutation) -> bool {
        match &self.target {
            FactorTarget::NCycle => p.is_n_cycle(),
            FactorTarget::Class(lambda) => &p.cycle_type() == lambda,
        }
    }
}

/// All transpositions of `S_n` with their edge variables.
fn transpositions(n: usize) -> Vec<(Permutation, EdgeVar)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            let t = Transposition::new(i, j).unwrap();
            out.push((
                t.as_permutation(n).unwrap(),
                EdgeVar::new(i, j).unwrap(),
            ));
        }
    }
    out
}

fn dfs(
    task: &FactorizationTask,
    gens: &[(Permutation, EdgeVar)],
    level: usize,
    product: &Permutation,
    path: &mut Vec<EdgeVar>,
    acc: &mut BTreeMap<Monomial, u64>,
) {
    if level == task.m {
        if task.matches(product) {
            *acc.entry(Monomial::from_vars(path.iter().copied())).or_insert(0) += 1;
        }
        return;
    }
    for (t, var) in gens {
        let next = t.compose(product).expect("generators share the degree");
        path.push(*var);
        dfs(task, gens, level + 1, &next, path, acc);
        path.pop();
    }
}

/// Run the enumeration and return the exact sum of edge monomials.
pub fn enumerate(task: &FactorizationTask, budget: u128) -> Result<WPolynomial> {
    let needed = task.leaf_count();
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let gens = transpositions(task.n);
    let id = Permutation::identity(task.n);

    let counts: BTreeMap<Monomial, u64> = if task.m == 0 {
        let mut acc = BTreeMap::new();
        if task.matches(&id) {
            acc.insert(Monomial::unit(), 1);
        }
        acc
    } else {
        gens.par_iter()
            .map(|(t, var)| {
                let mut acc = BTreeMap::new();
                let product = t.compose(&id).unwrap();
                let mut path = vec![*var];
                dfs(task, &gens, 1, &product, &mut path, &mut acc);
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (m, c) in b {
                    *a.entry(m).or_insert(0) += c;
                }
                a
            })
    };

    WPolynomial::from_terms(
        task.n,
        counts
            .into_iter()
            .map(|(m, c)| (m, Rat::from_integer(c.into()))),
    )
}

/// The polynomial of genus-g factorizations of an n-cycle: the sum over
/// all ordered tuples of `n + 2g - 1` transpositions whose right-to-left
/// product is an n-cycle of the product of their edge variables.
///
/// ```
/// use hurwitz_core::oracle::{hurwitz_poly, DEFAULT_BUDGET};
/// use hurwitz_core::rat::rat_int;
///
/// // 54 of the 81 quadruples of transpositions in S_3 multiply to a 3-cycle.
/// let p = hurwitz_poly(3, 1, DEFAULT_BUDGET)?;
/// assert_eq!(p.eval_ones(), rat_int(54));
/// # Ok::<(), hurwitz_core::Error>(())
/// ```
pub fn hurwitz_poly(n: usize, g: u32, budget: u128) -> Result<WPolynomial> {
    enumerate(&FactorizationTask::n_cycle(n, g)?, budget)
}

/// Same with target conjugacy class `lambda` and `n + 2g - 2 + s` factors.
pub fn hurwitz_poly_lambda(lambda: &CycleType, g: i64, budget: u128) -> Result<WPolynomial> {
    enumerate(&FactorizationTask::class(lambda, g)?, budget)
}

/// The factorization count weighted by symmetry: the polynomial evaluated
/// at all variables 1, divided by n factorial.
pub fn hurwitz_number(n: usize, g: u32, budget: u128) -> Result<Rat> {
    Ok(hurwitz_poly(n, g, budget)?.eval_ones() / factorial_rat(n))
}

/// Class version of [`hurwitz_number`].
pub fn hurwitz_number_lambda(lambda: &CycleType, g: i64, budget: u128) -> Result<Rat> {
    Ok(hurwitz_poly_lambda(lambda, g, budget)?.eval_ones() / factorial_rat(lambda.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn degree_two_powers() {
        // Only one transposition exists, so the polynomial is a pure power.
        for g in 0..=3u32 {
            let p = hurwitz_poly(2, g, DEFAULT_BUDGET).unwrap();
            let expected = Monomial::from_pairs(&vec![(1, 2); 2 * g as usize + 1]).unwrap();
            assert_eq!(p.num_terms(), 1);
            assert_eq!(p.coeff(&expected), rat_int(1));
            assert_eq!(hurwitz_number(2, g, DEFAULT_BUDGET).unwrap(), rat(1, 2));
        }
    }

    #[test]
    fn genus_zero_matches_twice_the_triangle_trees() {
        // Degree 3, genus 0: twice the sum over the three trees on {1,2,3}.
        let p = hurwitz_poly(3, 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.num_terms(), 3);
        for pair in [[(1, 2), (1, 3)], [(1, 2), (2, 3)], [(1, 3), (2, 3)]] {
            assert_eq!(p.coeff(&Monomial::from_pairs(&pair).unwrap()), rat_int(2));
        }
    }

    #[test]
    fn degree_three_genus_one_count() {
        let p = hurwitz_poly(3, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.eval_ones(), rat_int(54));
        assert_eq!(hurwitz_number(3, 1, DEFAULT_BUDGET).unwrap(), rat_int(9));
        // Every monomial has degree m = 4.
        assert!(p.is_homogeneous_of(4));
    }

    #[test]
    fn degree_one_edge_cases() {
        assert_eq!(hurwitz_poly(1, 0, DEFAULT_BUDGET).unwrap(), WPolynomial::one(1));
        assert!(hurwitz_poly(1, 1, DEFAULT_BUDGET).unwrap().is_zero());
    }

    #[test]
    fn class_targets() {
        // lambda = (n) coincides with the n-cycle task.
        let a = hurwitz_poly(3, 1, DEFAULT_BUDGET).unwrap();
        let b = hurwitz_poly_lambda(&CycleType::single(3), 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
        // lambda = (1,1), g = 0: two factors multiplying to the identity.
        let p = hurwitz_poly_lambda(&CycleType::new(vec![1, 1]).unwrap(), 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coeff(&Monomial::from_pairs(&[(1, 2), (1, 2)]).unwrap()), rat_int(1));
        // The empty product is the identity: contributes iff lambda is all ones.
        let id2 = hurwitz_poly_lambda(&CycleType::new(vec![1, 1]).unwrap(), -1, DEFAULT_BUDGET).unwrap();
        assert_eq!(id2, WPolynomial::one(2));
        let one = hurwitz_poly_lambda(&CycleType::new(vec![1]).unwrap(), 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(one, WPolynomial::one(1));
    }

    #[test]
    fn identity_class_in_s3() {
        // lambda = (1,1,1), g = 0: tuple length m = 3 + 0 - 2 + 3 = 4,
        // product must be the identity. Brute count over 3^4 = 81 tuples.
        let p = hurwitz_poly_lambda(
            &CycleType::new(vec![1, 1, 1]).unwrap(),
            0,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(p.is_homogeneous_of(4));
        // (ab)(ab)(cd)(cd) patterns and the two cyclic-product families:
        // evaluated at 1 this counts tuples with identity product.
        let mut brute = 0u64;
        let gens = super::transpositions(3);
        for a in &gens {
            for b in &gens {
                for c in &gens {
                    for d in &gens {
                        let p = d.0.compose(&c.0).unwrap();
                        let p = p.compose(&b.0).unwrap();
                        let p = p.compose(&a.0).unwrap();
                        if p.is_identity() {
                            brute += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(p.eval_ones(), rat_int(brute as i64));
    }

    #[test]
    fn budget_refusal_reports_the_estimate() {
        let err = hurwitz_poly(9, 3, DEFAULT_BUDGET).unwrap_err();
        match err {
            Error::BudgetExceeded { needed, budget } => {
                assert_eq!(budget, DEFAULT_BUDGET);
                assert_eq!(needed, (36u128).pow(14));
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn tuple_count_conservation() {
        // Bucketing all m-tuples by the class of their product must account
        // for exactly C(n,2)^m tuples.
        let n = 3;
        let m = 4;
        let mut total = rat_int(0);
        for lambda in CycleType::all_of(n) {
            let s = lambda.num_parts() as i64;
            let two_g = m - n as i64 + 2 - s;
            if two_g % 2 != 0 {
                continue;
            }
            let p = hurwitz_poly_lambda(&lambda, two_g / 2, DEFAULT_BUDGET).unwrap();
            total += p.eval_ones();
        }
        assert_eq!(total, rat_int(81));
    }

    #[test]
    fn parity_mismatch_gives_zero() {
        // m = n + 2g - 2 + s has fixed parity; a hand-built task with the
        // wrong length must enumerate to zero.
        let task = FactorizationTask {
            n: 3,
            target: FactorTarget::Class(CycleType::new(vec![1, 1, 1]).unwrap()),
            m: 3,
        };
        assert!(enumerate(&task, DEFAULT_BUDGET).unwrap().is_zero());
    }
}
