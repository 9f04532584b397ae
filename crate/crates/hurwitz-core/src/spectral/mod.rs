//! The closed-form side: the symbolic graph Laplacian, tree polynomials by
//! matrix-tree and by Prüfer enumeration, the even families `r` and `R`
//! attached to `ln phi` and `det phi` of the Laplacian, the factorization
//! product formula, the closed Hurwitz-number corollary, and a floating
//! point eigenvalue cross-check of the signed-sum formula.

mod jacobi;
mod series;

pub use jacobi::symmetric_eigenvalues;
pub use series::{bernoulli, ln_phi, phi, UniSeries};

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::oracle;
use crate::perm::CycleType;
use crate::rat::{factorial_rat, rat_int, Rat};
use crate::wring::{EdgeVar, Monomial, WPolynomial};
use crate::{Error, Result};

/// An `n x n` matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    n: usize,
    entries: Vec<WPolynomial>,
}

impl SymbolicMatrix {
    /// The weighted Laplacian: diagonal `sum_j w[i,j]`, off-diagonal
    /// `-w[i,j]`. Rows and columns sum to zero.
    pub fn laplacian(n: usize) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    let mut d = WPolynomial::zero(n);
                    for k in 1..=n {
                        if k != i {
                            let v = EdgeVar::new(i, k).unwrap();
                            d.add_term(Monomial::var(v), rat_int(1));
                        }
                    }
                    entries.push(d);
                } else {
                    let v = EdgeVar::new(i, j).unwrap();
                    let mut e = WPolynomial::zero(n);
                    e.add_term(Monomial::var(v), rat_int(-1));
                    entries.push(e);
                }
            }
        }
        SymbolicMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &WPolynomial {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &SymbolicMatrix) -> SymbolicMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = WPolynomial::zero(n);
                for k in 0..n {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                entries.push(acc);
            }
        }
        SymbolicMatrix { n, entries }
    }

    pub fn trace(&self) -> WPolynomial {
        let mut acc = WPolynomial::zero(self.n);
        for i in 0..self.n {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Determinant of the matrix with the first row and column deleted,
    /// by cofactor expansion with minors memoized on the column subset.
    pub fn reduced_det(&self) -> WPolynomial {
        let size = self.n - 1;
        let mut memo: HashMap<u64, WPolynomial> = HashMap::new();
        // Row r (0-based within the reduced matrix), columns = bit set.
        fn rec(
            m: &SymbolicMatrix,
            size: usize,
            cols: u64,
            memo: &mut HashMap<u64, WPolynomial>,
        ) -> WPolynomial {
            if cols == 0 {
                return WPolynomial::one(m.n);
            }
            if let Some(hit) = memo.get(&cols) {
                return hit.clone();
            }
            let row = size - cols.count_ones() as usize;
            let mut acc = WPolynomial::zero(m.n);
            let mut sign = 1i64;
            for c in 0..size {
                if cols & (1 << c) == 0 {
                    continue;
                }
                let sub = rec(m, size, cols & !(1 << c), memo);
                let term = &(m.get(row + 1, c + 1) * &sub).scale(&rat_int(sign));
                acc = &acc + term;
                sign = -sign;
            }
            memo.insert(cols, acc.clone());
            acc
        }
        rec(self, size, (1u64 << size) - 1, &mut memo)
    }

    /// Evaluate every entry at an assignment of the edge variables.
    pub fn eval_f64(&self, assign: &dyn Fn(EdgeVar) -> Rat) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        self.get(i, j)
                            .eval(assign)
                            .to_f64()
                            .expect("rational fits in f64")
                    })
                    .collect()
            })
            .collect()
    }
}

/// `Tr A^k` for the Laplacian of size `n`; homogeneous of degree `k`.
pub fn trace_power(n: usize, k: usize) -> WPolynomial {
    assert!(k >= 1);
    let a = SymbolicMatrix::laplacian(n);
    let mut p = a.clone();
    for _ in 1..k {
        p = p.mul(&a);
    }
    p.trace()
}

/// Decode a Prüfer sequence over `{1..len+2}` into the edge list of the
/// labeled tree it encodes.
pub fn pruefer_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (1..=n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Which route computes the tree polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeMethod {
    /// Reduced determinant of the Laplacian (matrix-tree); used up to
    /// n = 7, beyond that it falls back to the Prüfer route.
    Kirchhoff,
    /// Explicit sum over the `n^(n-2)` labeled trees.
    Pruefer,
}

/// The sum over all labeled trees on `{1..n}` of their edge monomials.
/// `T_1 = 1` by convention.
pub fn tree_poly(n: usize, method: TreeMethod) -> WPolynomial {
    assert!(n >= 1);
    if n == 1 {
        return WPolynomial::one(1);
    }
    match method {
        TreeMethod::Kirchhoff if n <= 7 => SymbolicMatrix::laplacian(n).reduced_det(),
        _ => {
            let mut acc = WPolynomial::zero(n);
            let mut seq = vec![1usize; n.saturating_sub(2)];
            loop {
                let edges = pruefer_decode(&seq);
                acc.add_term(
                    Monomial::from_pairs(&edges).expect("tree edges are loopless"),
                    rat_int(1),
                );
                // Odometer over sequences in {1..n}^(n-2).
                let mut k = 0;
                loop {
                    if k == seq.len() {
                        return acc;
                    }
                    if seq[k] < n {
                        seq[k] += 1;
                        break;
                    }
                    seq[k] = 1;
                    k += 1;
                }
            }
        }
    }
}

/// Degree-2g homogeneous part of `Tr ln phi(A_n)`: a single trace term
/// `B_2g / ((2g)! 2g) Tr A^(2g)`. Vanishes for `g = 0`.
pub fn r_part(g: usize, n: usize) -> WPolynomial {
    if g == 0 {
        return WPolynomial::zero(n);
    }
    let c = bernoulli(2 * g) / (factorial_rat(2 * g) * rat_int(2 * g as i64));
    trace_power(n, 2 * g).scale(&c)
}

/// Degree-2g homogeneous part of `exp(sum_h r_h) = det phi(A_n)`:
/// the sum over partitions of `g` of the product of the matching `r`
/// parts, divided by the multiplicity factorials.
pub fn exp_r_part(g: usize, n: usize) -> WPolynomial {
    if g == 0 {
        return WPolynomial::one(n);
    }
    let mut cache: BTreeMap<usize, WPolynomial> = BTreeMap::new();
    let mut acc = WPolynomial::zero(n);
    for partition in CycleType::all_of(g) {
        let mut term = WPolynomial::one(n);
        for &h in partition.parts() {
            let rp = cache.entry(h).or_insert_with(|| r_part(h, n)).clone();
            term = &term * &rp;
        }
        let norm = Rat::from_integer(partition.aut_count());
        acc = &acc + &term.scale(&norm.recip());
    }
    acc
}

/// Result of the exact product-formula comparison.
#[derive(Debug, Clone)]
pub struct DivCheck {
    pub n: usize,
    pub g: u32,
    pub equal: bool,
    pub enumerated: WPolynomial,
    pub closed: WPolynomial,
    /// `enumerated - closed`; zero exactly when the check passes.
    pub difference: WPolynomial,
}

/// Check `P_{g,n} = (n + 2g - 1)! T_n R_{g,n}` coefficient for
/// coefficient, with the left side enumerated from scratch.
///
/// ```
/// let check = hurwitz_core::spectral::verify_div(3, 1, 1 << 20)?;
/// assert!(check.equal);
/// # Ok::<(), hurwitz_core::Error>(())
/// ```
pub fn verify_div(n: usize, g: u32, budget: u128) -> Result<DivCheck> {
    let enumerated = oracle::hurwitz_poly(n, g, budget)?;
    let m = n + 2 * g as usize - 1;
    let closed = (&tree_poly(n, TreeMethod::Kirchhoff) * &exp_r_part(g as usize, n))
        .scale(&factorial_rat(m));
    let difference = &enumerated - &closed;
    Ok(DivCheck {
        n,
        g,
        equal: difference.is_zero(),
        enumerated,
        closed,
        difference,
    })
}

/// Coefficient of `w^(2g)` in `(phi(n w))^(n-1)`.
pub fn rho(g: u32, n: usize) -> Rat {
    let trunc = 2 * g as usize;
    phi(trunc)
        .scale_var(&rat_int(n as i64))
        .pow(n - 1)
        .coeff(trunc)
}

/// Closed form for the weighted factorization count:
/// `(n + 2g - 1)! / n! * n^(n-2) * rho(g, n)`.
pub fn hurwitz_closed(g: u32, n: usize) -> Rat {
    assert!(n >= 1);
    let m = n + 2 * g as usize - 1;
    let n_pow = if n >= 2 {
        Rat::from_integer(BigInt::from(n).pow(n as u32 - 2))
    } else {
        rat_int(1)
    };
    factorial_rat(m) / factorial_rat(n) * n_pow * rho(g, n)
}

/// Outcome of the numeric signed-sum evaluation.
#[derive(Debug, Clone)]
pub struct SumSignReport {
    /// The signed eigenvalue sum.
    pub value: f64,
    /// The exact polynomial evaluated at the same point.
    pub exact: f64,
    pub rel_err: f64,
    /// Product of the nonzero eigenvalues.
    pub sigma_product: f64,
    /// `n * T_n(w)` at the same point.
    pub n_times_tree: f64,
    pub kirchhoff_rel_err: f64,
    /// Set when two eigenvalues nearly coincide (harmless, informative).
    pub multiplicity_warning: bool,
}

fn rel_err(a: f64, b: f64) -> f64 {
    let scale = 1.0f64.max(a.abs()).max(b.abs());
    (a - b).abs() / scale
}

/// Evaluate the signed eigenvalue formula
/// `(1/n) sum_eps eps_1..eps_(n-1) (eps_1 s_1/2 + ... )^(n+2g-1)`
/// at a numeric positive assignment of the edge variables, and compare it
/// against the exact evaluation of `exact_poly` and the product identity
/// `s_1 ... s_(n-1) = n T_n(w)`.
///
/// The zero eigenvalue of the Laplacian (the all-ones kernel) is the one
/// closest to zero and is removed before the formula is applied.
pub fn eval_sumsign(
    n: usize,
    g: u32,
    assign: &BTreeMap<EdgeVar, Rat>,
    exact_poly: &WPolynomial,
    tree: &WPolynomial,
) -> Result<SumSignReport> {
    for i in 1..n {
        for j in i + 1..=n {
            let v = EdgeVar::new(i, j).unwrap();
            match assign.get(&v) {
                Some(x) if x.is_positive() => {}
                Some(_) => {
                    return Err(Error::Numeric(format!("assignment for {v} must be positive")))
                }
                None => return Err(Error::Numeric(format!("missing assignment for {v}"))),
            }
        }
    }
    let lookup = |v: EdgeVar| assign[&v].clone();
    let a = SymbolicMatrix::laplacian(n).eval_f64(&lookup);
    let mut eigs = symmetric_eigenvalues(&a, 1e-12)?;
    // Remove the kernel eigenvalue.
    let zero_pos = (0..eigs.len())
        .min_by(|&x, &y| eigs[x].abs().partial_cmp(&eigs[y].abs()).unwrap())
        .unwrap();
    eigs.remove(zero_pos);
    let multiplicity_warning = eigs.windows(2).any(|w| (w[0] - w[1]).abs() < 1e-9);

    let m = (n + 2 * g as usize - 1) as i32;
    let mut value = 0.0f64;
    for mask in 0u32..(1 << (n - 1)) {
        let mut sign = 1.0;
        let mut arg = 0.0;
        for (k, s) in eigs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                sign = -sign;
                arg -= s / 2.0;
            } else {
                arg += s / 2.0;
            }
        }
        value += sign * arg.powi(m);
    }
    value /= n as f64;

    let exact = exact_poly
        .eval(&lookup)
        .to_f64()
        .ok_or_else(|| Error::Numeric("exact value does not fit in f64".into()))?;
    let sigma_product: f64 = eigs.iter().product();
    let n_times_tree = n as f64
        * tree
            .eval(&lookup)
            .to_f64()
            .ok_or_else(|| Error::Numeric("tree value does not fit in f64".into()))?;
    Ok(SumSignReport {
        value,
        exact,
        rel_err: rel_err(value, exact),
        sigma_product,
        n_times_tree,
        kirchhoff_rel_err: rel_err(sigma_product, n_times_tree),
        multiplicity_warning,
    })
}
