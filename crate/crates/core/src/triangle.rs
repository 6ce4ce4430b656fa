use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{make_params, Error, KNomialParams, Result};

/// One line of the triangle of order `k`: the coefficients of `P(x)^n`
/// for `h = 0 ..= (k-1)n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Row {
    k: usize,
    n: usize,
    coefficients: Vec<BigUint>,
}

impl Row {
    /// Line 0, the single entry 1.
    pub fn first(params: &KNomialParams) -> Self {
        Self {
            k: params.k(),
            n: 0,
            coefficients: vec![BigUint::one()],
        }
    }

    /// Line `n`, built by iterating [`next_row`] from line 0.
    ///
    /// Only two coefficient buffers are alive at a time, and the older one is
    /// overwritten in place so its limb storage is reused.
    pub fn generate(params: &KNomialParams, n: usize) -> Self {
        let mut current = vec![BigUint::one()];
        let mut spare = Vec::new();
        for line in 1..=n {
            debug_assert_eq!(current.len() + params.degree(), row_width(params, line));
            window_sum_into(params.k(), &current, &mut spare);
            std::mem::swap(&mut current, &mut spare);
        }
        Self {
            k: params.k(),
            n,
            coefficients: current,
        }
    }

    #[cfg(test)]
    pub(crate) fn from_parts_unchecked(k: usize, n: usize, coefficients: Vec<BigUint>) -> Self {
        Self { k, n, coefficients }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Line index.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<BigUint> {
        self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    /// Always false: every line holds at least one entry.
    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Entry `h`, with anything outside the line read as 0.
    pub fn get(&self, h: i64) -> BigUint {
        self.entry(h).cloned().unwrap_or_default()
    }

    pub fn entry(&self, h: i64) -> Option<&BigUint> {
        usize::try_from(h)
            .ok()
            .and_then(|h| self.coefficients.get(h))
    }

    /// Largest valid index, `(k-1)n`.
    pub fn last_index(&self) -> usize {
        self.coefficients.len() - 1
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Addresses the coefficient of `x^h` in `P(x)^n` for order `k`.
///
/// Any `h` is allowed; positions outside the line resolve to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoefficientQuery {
    pub k: i64,
    pub n: i64,
    pub h: i64,
}

impl CoefficientQuery {
    pub fn new(k: i64, n: i64, h: i64) -> Self {
        Self { k, n, h }
    }
}

impl fmt::Display for CoefficientQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}_{}^{}", self.k, self.n, self.h)
    }
}

/// Number of entries on line `n`: `(k-1)n + 1`.
pub fn row_width(params: &KNomialParams, n: usize) -> usize {
    params.degree() * n + 1
}

/// Computes line `n+1` from line `n`.
///
/// Entry `h` of the new line is the sum of entries `h-(k-1) ..= h` of the
/// current one. The window is carried as a running sum, so each entry of the
/// left half costs one addition and one subtraction regardless of `k`; the
/// right half is copied from the left.
pub fn next_row(params: &KNomialParams, current: &Row) -> Row {
    debug_assert_eq!(params.k(), current.k);
    let mut coefficients = Vec::with_capacity(current.len() + params.degree());
    window_sum_into(params.k(), &current.coefficients, &mut coefficients);
    Row {
        k: params.k(),
        n: current.n + 1,
        coefficients,
    }
}

/// Writes the line after `old` into `out`, overwriting (and reusing the
/// allocations of) whatever `out` held.
///
/// Only the left half goes through the window; the right half is its mirror
/// image, since every line is a palindrome.
fn window_sum_into(k: usize, old: &[BigUint], out: &mut Vec<BigUint>) {
    let width = old.len() + k - 1;
    let half = width.div_ceil(2);
    window_prefix_into(k, old, half, out);
    for h in half..width {
        let mirrored = width - 1 - h;
        if h < out.len() {
            let (left, right) = out.split_at_mut(h);
            right[0].clone_from(&left[mirrored]);
        } else {
            let value = out[mirrored].clone();
            out.push(value);
        }
    }
    out.truncate(width);
}

/// Writes the first `width` entries of the line after `old` into
/// `out[..width]`, leaving anything past them in place.
fn window_prefix_into(k: usize, old: &[BigUint], width: usize, out: &mut Vec<BigUint>) {
    let reusable = out.len();
    let mut window = BigUint::zero();
    for h in 0..width {
        if let Some(entering) = old.get(h) {
            window += entering;
        }
        if h >= k {
            // Everything that leaves was added k steps earlier.
            window -= &old[h - k];
        }
        if h < reusable {
            out[h].clone_from(&window);
        } else {
            out.push(window.clone());
        }
    }
}

/// Line `n` of the triangle of order `k`.
pub fn row(k: i64, n: i64) -> Result<Row> {
    let params = make_params(k)?;
    let n = line_index(n)?;
    Ok(Row::generate(&params, n))
}

/// The coefficient `Ck_n^h`, zero for `h` outside `0 ..= (k-1)n`.
pub fn coefficient(query: CoefficientQuery) -> Result<BigUint> {
    let params = make_params(query.k)?;
    let n = line_index(query.n)?;
    let last = params.degree() * n;
    let h = match usize::try_from(query.h) {
        Ok(h) if h <= last => h,
        _ => return Ok(BigUint::zero()),
    };
    Ok(prefix_entry(&params, n, h))
}

/// Entry `h` of line `n` computed from truncated lines: entry `h` only ever
/// depends on entries `0 ..= h` of the lines above it.
fn prefix_entry(params: &KNomialParams, n: usize, h: usize) -> BigUint {
    let mut prefix = vec![BigUint::one()];
    let mut spare = Vec::new();
    for line in 1..=n {
        let width = row_width(params, line).min(h + 1);
        window_prefix_into(params.k(), &prefix, width, &mut spare);
        spare.truncate(width);
        std::mem::swap(&mut prefix, &mut spare);
    }
    prefix.swap_remove(h)
}

pub(crate) fn line_index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::NegativeLine(n))
}

/// Lines `0 ..= n_max` of the triangle of order `k`, produced lazily.
pub fn triangle(k: i64, n_max: i64) -> Result<Triangle> {
    let params = make_params(k)?;
    let n_max = line_index(n_max)?;
    Ok(Triangle::new(params, n_max))
}

/// Streaming iterator over the lines of a triangle.
///
/// At most two lines are alive at once: the one handed out and its successor.
#[derive(Debug, Clone)]
pub struct Triangle {
    params: KNomialParams,
    n_max: usize,
    pending: Option<Row>,
}

impl Triangle {
    pub fn new(params: KNomialParams, n_max: usize) -> Self {
        Self {
            pending: Some(Row::first(&params)),
            params,
            n_max,
        }
    }

    pub fn params(&self) -> &KNomialParams {
        &self.params
    }
}

impl Iterator for Triangle {
    type Item = Row;

    fn next(&mut self) -> Option<Row> {
        let out = self.pending.take()?;
        if out.n < self.n_max {
            self.pending = Some(next_row(&self.params, &out));
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.pending.as_ref().map_or(0, |r| self.n_max - r.n + 1);
        (left, Some(left))
    }
}

impl ExactSizeIterator for Triangle {}
