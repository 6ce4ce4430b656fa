use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::{Error, KNomialParams, Result};

/// `Ck_n^h` by inclusion-exclusion over compositions:
///
/// `sum_j (-1)^j * C(n, j) * C(n - 1 + h - k*j, n - 1)`
///
/// Shares no code with the recurrence or the polynomial oracle, which makes
/// it a third independent route to the same numbers. Only defined on the
/// line itself, `0 <= h <= (k-1)n`.
pub fn closed_form_coefficient(params: &KNomialParams, n: usize, h: i64) -> Result<BigUint> {
    let last = params.degree() * n;
    let h = match usize::try_from(h) {
        Ok(h) if h <= last => h,
        _ => {
            return Err(Error::IndexOutOfRange {
                k: params.k(),
                n,
                h,
                max: last,
            })
        }
    };
    // Line 0 holds a single 1; the sum's binomials are undefined there.
    if n == 0 {
        return Ok(BigUint::one());
    }

    let k = params.k();
    let mut total = BigInt::zero();
    for j in 0..=n.min(h / k) {
        let term = BigInt::from(binomial(BigUint::from(n), BigUint::from(j)))
            * BigInt::from(binomial(
                BigUint::from(n - 1 + h - k * j),
                BigUint::from(n - 1),
            ));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total
        .to_biguint()
        .expect("inclusion-exclusion sum is a count"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::make_params;

    fn cf(k: i64, n: usize, h: i64) -> Result<BigUint> {
        closed_form_coefficient(&make_params(k).unwrap(), n, h)
    }

    #[test]
    fn worked_example() {
        assert_eq!(cf(5, 3, 7).unwrap(), BigUint::from(18u32));
    }

    #[test]
    fn first_entry_is_one() {
        for k in 2..8 {
            for n in 0..10 {
                assert_eq!(cf(k, n, 0).unwrap(), BigUint::one());
            }
        }
    }

    #[test]
    fn trinomial_line_four_center() {
        assert_eq!(cf(3, 4, 4).unwrap(), BigUint::from(19u32));
    }

    #[test]
    fn binomial_rows() {
        let row: Vec<_> = (0..=6).map(|h| cf(2, 6, h).unwrap()).collect();
        let expected: Vec<BigUint> = [1u32, 6, 15, 20, 15, 6, 1]
            .into_iter()
            .map(BigUint::from)
            .collect();
        assert_eq!(row, expected);
    }

    #[test]
    fn outside_the_line_is_an_error() {
        assert!(matches!(cf(5, 3, -1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(
            cf(5, 3, 13),
            Err(Error::IndexOutOfRange { max: 12, .. })
        ));
        assert!(cf(5, 0, 1).is_err());
    }
}
