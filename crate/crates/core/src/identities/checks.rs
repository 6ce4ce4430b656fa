//! One check per property of the triangle, each recomputing its expectation
//! without going through the window-sum code where it can be avoided.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use super::closed_form::closed_form_coefficient;
use super::oracle::{DensePolynomial, OraclePowers};
use crate::{coefficient, row_width, CoefficientQuery, KNomialParams, Parity, Row, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyId {
    /// Line `n` has `(k-1)n + 1` entries.
    P1,
    /// Each entry is the sum of the `k` entries ending at it on the line above.
    P2,
    /// Lines read the same from both ends.
    P3,
    /// Lines start with `1, n`.
    P4,
    /// Line `n` lists the coefficients of `P(x)^n`.
    P5,
    /// Line `n` sums to `k^n`.
    P6,
    /// Alternating sum of line `n`.
    P7,
    /// `sum_i Ck_n^i Ck_m^(h-i) = Ck_(n+m)^h`.
    P8,
    /// Sum of squares of line `n` is the center of line `2n`.
    P9,
    /// The oracle expansion has the right shape and agrees with coefficient queries.
    Oracle,
    /// The inclusion-exclusion formula agrees with the lines.
    ClosedForm,
}

impl PropertyId {
    pub const ALL: [PropertyId; 11] = [
        Self::P1,
        Self::P2,
        Self::P3,
        Self::P4,
        Self::P5,
        Self::P6,
        Self::P7,
        Self::P8,
        Self::P9,
        Self::Oracle,
        Self::ClosedForm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::P1 => "P1",
            Self::P2 => "P2",
            Self::P3 => "P3",
            Self::P4 => "P4",
            Self::P5 => "P5",
            Self::P6 => "P6",
            Self::P7 => "P7",
            Self::P8 => "P8",
            Self::P9 => "P9",
            Self::Oracle => "ORACLE",
            Self::ClosedForm => "CLOSED_FORM",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Self::P1 => "line width (k-1)n+1",
            Self::P2 => "k-term recurrence with zero convention",
            Self::P3 => "symmetry about the central element",
            Self::P4 => "first elements 1 and n",
            Self::P5 => "line n equals expansion of P(x)^n",
            Self::P6 => "line sum equals k^n",
            Self::P7 => "alternating sum equals P(-1)^n",
            Self::P8 => "convolution of lines n and m gives line n+m",
            Self::P9 => "sum of squares equals center of line 2n",
            Self::Oracle => "oracle degree, positivity and coefficient queries",
            Self::ClosedForm => "inclusion-exclusion closed form",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownProperty(pub String);

impl fmt::Display for UnknownProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown property `{}`", self.0)
    }
}

impl std::error::Error for UnknownProperty {}

impl FromStr for PropertyId {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownProperty(s.to_owned()))
    }
}

/// What a failed comparison was measuring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Coefficient,
    Width,
    OracleDegree,
    RowSum,
    AlternatingSum,
    SumOfSquares,
    /// `sum_i Ck_n^i Ck_m^(h-i)`, compared with `Ck_(n+m)^h`.
    Convolution {
        n: usize,
        m: usize,
    },
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Coefficient => f.write_str("coefficient"),
            Self::Width => f.write_str("line width"),
            Self::OracleDegree => f.write_str("oracle degree"),
            Self::RowSum => f.write_str("line sum"),
            Self::AlternatingSum => f.write_str("alternating sum"),
            Self::SumOfSquares => f.write_str("sum of squares"),
            Self::Convolution { n, m } => write!(f, "convolution of lines {n} and {m}"),
        }
    }
}

/// First mismatch found by a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub property: PropertyId,
    pub quantity: Quantity,
    /// Where the mismatch was observed. For whole-line quantities `h` is 0.
    pub query: CoefficientQuery,
    pub expected: BigInt,
    pub actual: BigInt,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at k={} line {} h={}: expected {}, got {}",
            self.quantity, self.query.k, self.query.n, self.query.h, self.expected, self.actual
        )
    }
}

pub type CheckOutcome = Result<(), Counterexample>;

/// Lines and oracle expansions shared by a batch of checks.
pub(crate) struct Tables {
    params: KNomialParams,
    rows: Vec<Row>,
    oracle: Vec<DensePolynomial>,
    skew: Option<PropertyId>,
}

impl Tables {
    pub(crate) fn new(params: KNomialParams, row_max: usize, oracle_max: usize) -> Self {
        let rows = Triangle::new(params, row_max).collect();
        let oracle = OraclePowers::new(&params).take(oracle_max + 1).collect();
        Self {
            params,
            rows,
            oracle,
            skew: None,
        }
    }

    /// Offsets every expectation of `property` by one.
    pub(crate) fn with_skew(mut self, property: Option<PropertyId>) -> Self {
        self.skew = property;
        self
    }

    fn query(&self, n: usize, h: i64) -> CoefficientQuery {
        CoefficientQuery::new(self.params.k() as i64, n as i64, h)
    }

    fn expect(
        &self,
        property: PropertyId,
        quantity: Quantity,
        query: CoefficientQuery,
        expected: impl Into<BigInt>,
        actual: impl Into<BigInt>,
    ) -> CheckOutcome {
        let mut expected = expected.into();
        if self.skew == Some(property) {
            expected += 1;
        }
        let actual = actual.into();
        if expected == actual {
            Ok(())
        } else {
            Err(Counterexample {
                property,
                quantity,
                query,
                expected,
                actual,
            })
        }
    }

    pub(crate) fn width(&self, n: usize) -> CheckOutcome {
        let row = &self.rows[n];
        let q = self.query(n, 0);
        let formula = row_width(&self.params, n);
        self.expect(PropertyId::P1, Quantity::Width, q, formula, row.len())?;
        if self.params.parity() == Parity::Odd {
            let two_pn = 2 * self.params.half_width() * n + 1;
            self.expect(PropertyId::P1, Quantity::Width, q, two_pn, row.len())?;
        }
        if let Some(oracle) = self.oracle.get(n) {
            let from_oracle = oracle.degree().map_or(0, |d| d + 1);
            self.expect(PropertyId::P1, Quantity::Width, q, from_oracle, row.len())?;
        }
        Ok(())
    }

    pub(crate) fn recurrence(&self, n: usize) -> CheckOutcome {
        let row = &self.rows[n];
        let k = self.params.k() as i64;
        if n == 0 {
            return self.expect(
                PropertyId::P2,
                Quantity::Width,
                self.query(0, 0),
                1,
                row.len(),
            );
        }
        let above = &self.rows[n - 1];
        for h in -k..=row.last_index() as i64 + k {
            let naive: BigUint = (0..k).map(|i| above.get(h - i)).sum();
            self.expect(
                PropertyId::P2,
                Quantity::Coefficient,
                self.query(n, h),
                naive,
                row.get(h),
            )?;
        }
        Ok(())
    }

    /// Lines are generated by mirroring their left half, so the mirror image
    /// is taken from the oracle expansion whenever one is available.
    pub(crate) fn symmetry(&self, n: usize) -> CheckOutcome {
        let row = &self.rows[n];
        let last = row.last_index() as i64;
        for (h, c) in row.coefficients().iter().enumerate() {
            let h = h as i64;
            let mirror = match self.oracle.get(n) {
                Some(oracle) => oracle.coefficient(last - h),
                None => row.get(last - h).into(),
            };
            self.expect(
                PropertyId::P3,
                Quantity::Coefficient,
                self.query(n, h),
                mirror,
                c.clone(),
            )?;
        }
        Ok(())
    }

    pub(crate) fn first_elements(&self, n: usize) -> CheckOutcome {
        let row = &self.rows[n];
        self.expect(
            PropertyId::P4,
            Quantity::Coefficient,
            self.query(n, 0),
            1,
            row.get(0),
        )?;
        if n >= 1 {
            self.expect(
                PropertyId::P4,
                Quantity::Coefficient,
                self.query(n, 1),
                n,
                row.get(1),
            )?;
        }
        Ok(())
    }

    pub(crate) fn oracle_equivalence(&self, n: usize) -> CheckOutcome {
        let row = &self.rows[n];
        let oracle = &self.oracle[n];
        let top = row.len().max(oracle.coefficients().len()) as i64;
        for h in -1..=top {
            self.expect(
                PropertyId::P5,
                Quantity::Coefficient,
                self.query(n, h),
                oracle.coefficient(h),
                row.get(h),
            )?;
        }
        Ok(())
    }

    pub(crate) fn row_sum(&self, n: usize) -> CheckOutcome {
        let total: BigUint = self.rows[n].coefficients().iter().sum();
        let power = Pow::pow(BigUint::from(self.params.k()), n);
        self.expect(
            PropertyId::P6,
            Quantity::RowSum,
            self.query(n, 0),
            power,
            total,
        )
    }

    pub(crate) fn alternating_sum(&self, n: usize) -> CheckOutcome {
        let mut total = BigInt::zero();
        for (h, c) in self.rows[n].coefficients().iter().enumerate() {
            if h % 2 == 0 {
                total += BigInt::from(c.clone());
            } else {
                total -= BigInt::from(c.clone());
            }
        }
        let expected = match self.params.parity() {
            Parity::Odd => 1,
            Parity::Even if n == 0 => 1,
            Parity::Even => 0,
        };
        self.expect(
            PropertyId::P7,
            Quantity::AlternatingSum,
            self.query(n, 0),
            expected,
            total,
        )
    }

    /// Checks every `h` from one below the combined line to one past it.
    pub(crate) fn vandermonde_all(&self, n: usize, m: usize) -> CheckOutcome {
        let top = (self.params.degree() * (n + m)) as i64;
        (-1..=top + 1).try_for_each(|h| self.vandermonde(n, m, h))
    }

    pub(crate) fn vandermonde(&self, n: usize, m: usize, h: i64) -> CheckOutcome {
        let left = &self.rows[n];
        let right = &self.rows[m];
        let mut total = BigUint::zero();
        for i in 0..=h.min(left.last_index() as i64) {
            if let (Some(a), Some(b)) = (left.entry(i), right.entry(h - i)) {
                total += a * b;
            }
        }
        self.expect(
            PropertyId::P8,
            Quantity::Convolution { n, m },
            self.query(n + m, h),
            self.rows[n + m].get(h),
            total,
        )
    }

    pub(crate) fn sum_of_squares(&self, n: usize) -> CheckOutcome {
        let squares: BigUint = self.rows[n].coefficients().iter().map(|c| c * c).sum();
        let center = self.params.degree() * n;
        let doubled = &self.rows[2 * n];
        debug_assert_eq!(doubled.last_index(), 2 * center);
        self.expect(
            PropertyId::P9,
            Quantity::SumOfSquares,
            self.query(2 * n, center as i64),
            doubled.get(center as i64),
            squares,
        )
    }

    pub(crate) fn oracle_shape(&self, n: usize) -> CheckOutcome {
        let oracle = &self.oracle[n];
        let q = self.query(n, 0);
        let degree = self.params.degree() * n;
        let actual_degree = oracle.degree().map_or(-1, |d| d as i64);
        self.expect(
            PropertyId::Oracle,
            Quantity::OracleDegree,
            q,
            degree,
            actual_degree,
        )?;
        for (h, c) in oracle.coefficients().iter().enumerate() {
            if !num_traits::Signed::is_positive(c) {
                // A non-positive entry is reported against the smallest
                // admissible value.
                return Err(Counterexample {
                    property: PropertyId::Oracle,
                    quantity: Quantity::Coefficient,
                    query: self.query(n, h as i64),
                    expected: BigInt::one(),
                    actual: c.clone(),
                });
            }
        }
        for h in -1..=degree as i64 + 1 {
            let query = self.query(n, h);
            let value = coefficient(query).expect("tables hold validated params");
            self.expect(
                PropertyId::Oracle,
                Quantity::Coefficient,
                query,
                oracle.coefficient(h),
                value,
            )?;
        }
        Ok(())
    }

    pub(crate) fn closed_form(&self, n: usize) -> CheckOutcome {
        let row = &self.rows[n];
        for (h, c) in row.coefficients().iter().enumerate() {
            let h = h as i64;
            let formula = closed_form_coefficient(&self.params, n, h).expect("h lies on the line");
            self.expect(
                PropertyId::ClosedForm,
                Quantity::Coefficient,
                self.query(n, h),
                formula,
                c.clone(),
            )?;
        }
        Ok(())
    }

    /// Runs the single-line check for `property` on line `n`. Vandermonde is
    /// handled by [`Tables::vandermonde_all`].
    pub(crate) fn run(&self, property: PropertyId, n: usize) -> CheckOutcome {
        match property {
            PropertyId::P1 => self.width(n),
            PropertyId::P2 => self.recurrence(n),
            PropertyId::P3 => self.symmetry(n),
            PropertyId::P4 => self.first_elements(n),
            PropertyId::P5 => self.oracle_equivalence(n),
            PropertyId::P6 => self.row_sum(n),
            PropertyId::P7 => self.alternating_sum(n),
            PropertyId::P8 => self.vandermonde_all(n, n),
            PropertyId::P9 => self.sum_of_squares(n),
            PropertyId::Oracle => self.oracle_shape(n),
            PropertyId::ClosedForm => self.closed_form(n),
        }
    }
}

/// Line `n` agrees with the expansion of `P(x)^n`.
pub fn check_oracle_equivalence(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, n, n).oracle_equivalence(n)
}

/// Line `n` sums to `k^n`.
pub fn check_row_sum(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, n, 0).row_sum(n)
}

/// The alternating sum of line `n` (even `h` counted positive) is 1 for odd
/// `k`, and `0^n` for even `k`.
pub fn check_alternating_sum(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, n, 0).alternating_sum(n)
}

/// Convolving lines `n` and `m` gives entry `h` of line `n + m`. Holds for
/// every `h`, both sides being 0 off the line.
pub fn check_vandermonde(params: &KNomialParams, n: usize, m: usize, h: i64) -> CheckOutcome {
    Tables::new(*params, n + m, 0).vandermonde(n, m, h)
}

/// Squares of line `n` sum to the central entry of line `2n`.
pub fn check_sum_of_squares(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, 2 * n, 0).sum_of_squares(n)
}

/// Line `n` read backwards against the oracle expansion.
pub fn check_symmetry(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, n, n).symmetry(n)
}

/// Line `n` starts `1, n`. Line 0 only has its leading 1.
pub fn check_first_elements(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, n, 0).first_elements(n)
}

/// Width of line `n` against the formula and the oracle degree.
pub fn check_width(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, n, n).width(n)
}

/// Every entry of line `n`, and the zeros just past its ends, equal a naive
/// `k`-fold sum over line `n - 1`. Line 0 must be the single entry 1.
pub fn check_recurrence(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, n, 0).recurrence(n)
}

/// Degree and positivity of the oracle expansion, plus agreement with
/// [`coefficient`] on and just off the line.
pub fn check_oracle(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, n, n).oracle_shape(n)
}

/// The closed form against every entry of line `n`.
pub fn check_closed_form(params: &KNomialParams, n: usize) -> CheckOutcome {
    Tables::new(*params, n, 0).closed_form(n)
}
