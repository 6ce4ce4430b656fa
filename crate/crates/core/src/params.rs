use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `k = 2p + 1`: each new entry sits directly below one of the line above.
    Odd,
    /// `k = 2p`: new entries sit between the entries of the line above.
    Even,
}

/// A validated order `k` together with its half width `p = k / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KNomialParams {
    k: usize,
    half_width: usize,
    parity: Parity,
}

impl KNomialParams {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidOrder(k as i64));
        }
        let parity = if k % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        };
        Ok(Self {
            k,
            half_width: k / 2,
            parity,
        })
    }

    /// Number of monomials in `1 + x + ... + x^(k-1)`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Degree of the k-nomial, i.e. how much each line grows.
    pub fn degree(&self) -> usize {
        self.k - 1
    }
}

/// Validates an order read from user input.
pub fn make_params(k: i64) -> Result<KNomialParams> {
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    let k = usize::try_from(k).map_err(|_| Error::InvalidOrder(k))?;
    KNomialParams::new(k)
}
