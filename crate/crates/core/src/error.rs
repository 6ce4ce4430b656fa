use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order k must be at least 2, got {0}")]
    InvalidOrder(i64),
    #[error("line index must be non-negative, got {0}")]
    NegativeLine(i64),
    #[error("index h = {h} lies outside line {n} of order {k} (0..={max})")]
    IndexOutOfRange {
        k: usize,
        n: usize,
        h: i64,
        max: usize,
    },
}
