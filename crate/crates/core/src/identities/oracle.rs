use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::triangle::line_index;
use crate::{make_params, KNomialParams, Result};

/// A polynomial with integer coefficients, indexed by degree.
///
/// The leading stored coefficient is never zero; the zero polynomial has no
/// stored coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DensePolynomial {
    coefficients: Vec<BigInt>,
}

impl DensePolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self {
            coefficients: vec![BigInt::one()],
        }
    }

    /// `1 + x + ... + x^(k-1)`.
    pub fn knomial(params: &KNomialParams) -> Self {
        Self {
            coefficients: vec![BigInt::one(); params.k()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `x^h`, zero for any `h` past either end.
    pub fn coefficient(&self, h: i64) -> BigInt {
        usize::try_from(h)
            .ok()
            .and_then(|h| self.coefficients.get(h))
            .cloned()
            .unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn is_positive(&self) -> bool {
        self.coefficients.iter().all(Signed::is_positive)
    }
}

impl Mul for &DensePolynomial {
    type Output = DensePolynomial;

    /// Schoolbook product.
    fn mul(self, rhs: &DensePolynomial) -> DensePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePolynomial::new(out)
    }
}

impl Mul for DensePolynomial {
    type Output = DensePolynomial;

    fn mul(self, rhs: DensePolynomial) -> DensePolynomial {
        &self * &rhs
    }
}

/// Powers `P(x)^0, P(x)^1, ...` of the k-nomial, one schoolbook product at a
/// time.
#[derive(Debug, Clone)]
pub struct OraclePowers {
    base: DensePolynomial,
    next: DensePolynomial,
}

impl OraclePowers {
    pub fn new(params: &KNomialParams) -> Self {
        Self {
            base: DensePolynomial::knomial(params),
            next: DensePolynomial::one(),
        }
    }
}

impl Iterator for OraclePowers {
    type Item = DensePolynomial;

    fn next(&mut self) -> Option<DensePolynomial> {
        let following = &self.next * &self.base;
        Some(std::mem::replace(&mut self.next, following))
    }
}

/// `P(x)^n` by `n` successive schoolbook products with `P(x)`.
///
/// Deliberately naive: this is the ground truth the window-sum rows are
/// checked against.
pub fn expand_power(params: &KNomialParams, n: usize) -> DensePolynomial {
    let base = DensePolynomial::knomial(params);
    let mut power = DensePolynomial::one();
    for _ in 0..n {
        power = &power * &base;
    }
    power
}

/// [`expand_power`] for unvalidated input.
pub fn expand_power_oracle(k: i64, n: i64) -> Result<DensePolynomial> {
    let params = make_params(k)?;
    Ok(expand_power(&params, line_index(n)?))
}
