//! Bernoulli numbers and truncated univariate power series over the
//! rationals. All operations are exact; truncation order is fixed at
//! construction time.

use num_traits::{One, Zero};

use crate::rat::{binomial, factorial_rat, rat, rat_int, Rat};

/// Exact Bernoulli number `B_k` via the defining recurrence
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`. `B_1 = -1/2`; odd indices above 1
/// vanish.
pub fn bernoulli(k: usize) -> Rat {
    let mut b: Vec<Rat> = Vec::with_capacity(k + 1);
    b.push(Rat::one());
    for m in 1..=k {
        let mut acc = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rat::from_integer(binomial(m + 1, j)) * bj;
        }
        b.push(-acc / rat_int((m + 1) as i64));
    }
    b[k].clone()
}

/// A univariate power series truncated after degree `trunc`, with exact
/// rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniSeries {
    trunc: usize,
    coeffs: Vec<Rat>,
}

impl UniSeries {
    pub fn zero(trunc: usize) -> Self {
        UniSeries {
            trunc,
            coeffs: vec![Rat::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = UniSeries::zero(trunc);
        s.coeffs[0] = Rat::one();
        s
    }

    pub fn from_coeffs(trunc: usize, coeffs: Vec<(usize, Rat)>) -> Self {
        let mut s = UniSeries::zero(trunc);
        for (k, c) in coeffs {
            if k <= trunc {
                s.coeffs[k] = c;
            }
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// True when every odd coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    pub fn add(&self, other: &UniSeries) -> UniSeries {
        let trunc = self.trunc.min(other.trunc);
        UniSeries {
            trunc,
            coeffs: (0..=trunc).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        }
    }

    pub fn mul(&self, other: &UniSeries) -> UniSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs = vec![Rat::zero(); trunc + 1];
        for i in 0..=trunc {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..=trunc - i {
                let prod = self.coeff(i) * other.coeff(j);
                coeffs[i + j] += prod;
            }
        }
        UniSeries { trunc, coeffs }
    }

    pub fn pow(&self, e: usize) -> UniSeries {
        let mut acc = UniSeries::one(self.trunc);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute `t -> a * t`.
    pub fn scale_var(&self, a: &Rat) -> UniSeries {
        let mut coeffs = Vec::with_capacity(self.trunc + 1);
        let mut power = Rat::one();
        for k in 0..=self.trunc {
            coeffs.push(self.coeff(k) * power.clone());
            power *= a.clone();
        }
        UniSeries {
            trunc: self.trunc,
            coeffs,
        }
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> UniSeries {
        assert!(self.coeff(0).is_zero(), "exp needs zero constant term");
        let mut acc = UniSeries::one(self.trunc);
        let mut term = UniSeries::one(self.trunc);
        for k in 1..=self.trunc {
            term = term.mul(self);
            acc = acc.add(&term.scale(&factorial_rat(k).recip()));
        }
        acc
    }

    /// Logarithm of a series with constant term one.
    pub fn ln(&self) -> UniSeries {
        assert!(self.coeff(0).is_one(), "ln needs constant term one");
        let mut x = self.clone();
        x.coeffs[0] = Rat::zero(); // x = self - 1
        let mut acc = UniSeries::zero(self.trunc);
        let mut term = UniSeries::one(self.trunc);
        for k in 1..=self.trunc {
            term = term.mul(&x);
            let c = rat(if k % 2 == 1 { 1 } else { -1 }, k as i64);
            acc = acc.add(&term.scale(&c));
        }
        acc
    }

    fn scale(&self, c: &Rat) -> UniSeries {
        UniSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// The even series `sinh(t/2) / (t/2) = sum_p t^(2p) / (4^p (2p+1)!)`.
pub fn phi(trunc: usize) -> UniSeries {
    let mut s = UniSeries::zero(trunc);
    let mut p = 0;
    while 2 * p <= trunc {
        let denom = factorial_rat(2 * p + 1) * Rat::from_integer(num_bigint::BigInt::from(4).pow(p as u32));
        s.coeffs[2 * p] = denom.recip();
        p += 1;
    }
    s
}

/// Its logarithm `sum_{g >= 1} B_{2g} / ((2g)! (2g)) t^(2g)`.
pub fn ln_phi(trunc: usize) -> UniSeries {
    let mut s = UniSeries::zero(trunc);
    let mut g = 1;
    while 2 * g <= trunc {
        s.coeffs[2 * g] =
            bernoulli(2 * g) / (factorial_rat(2 * g) * rat_int(2 * g as i64));
        g += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat_int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn phi_and_its_log_are_inverse() {
        let trunc = 10;
        let p = phi(trunc);
        let l = ln_phi(trunc);
        assert!(p.is_even());
        assert!(l.is_even());
        assert_eq!(l.exp(), p);
        assert_eq!(p.ln(), l);
    }

    #[test]
    fn phi_first_coefficients() {
        let p = phi(4);
        assert_eq!(p.coeff(0), rat_int(1));
        assert_eq!(p.coeff(2), rat(1, 24));
        assert_eq!(p.coeff(4), rat(1, 1920));
    }

    #[test]
    fn series_algebra() {
        let s = UniSeries::from_coeffs(4, vec![(1, rat_int(1))]); // t
        let sq = s.pow(2);
        assert_eq!(sq.coeff(2), rat_int(1));
        let scaled = s.scale_var(&rat_int(3));
        assert_eq!(scaled.coeff(1), rat_int(3));
        // exp(ln(1 + t)) recovers 1 + t.
        let one_plus_t = UniSeries::from_coeffs(6, vec![(0, rat_int(1)), (1, rat_int(1))]);
        assert_eq!(one_plus_t.ln().exp(), one_plus_t);
    }
}
