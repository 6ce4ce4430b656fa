//! Independent checks of the triangle's properties.
//!
//! Expected values come from routes that do not share the window-sum code:
//! a schoolbook polynomial expansion of `P(x)^n`, an inclusion-exclusion
//! closed form, naive `k`-fold sums and direct big-integer powers.

mod checks;
mod closed_form;
mod oracle;
mod report;

pub use checks::{
    check_alternating_sum, check_closed_form, check_first_elements, check_oracle,
    check_oracle_equivalence, check_recurrence, check_row_sum, check_sum_of_squares,
    check_symmetry, check_vandermonde, check_width, CheckOutcome, Counterexample, PropertyId,
    Quantity, UnknownProperty,
};
pub use closed_form::closed_form_coefficient;
pub use oracle::{expand_power, expand_power_oracle, DensePolynomial, OraclePowers};
pub use report::{verify, verify_all, Outcome, VerificationReport, VerifyConfig};

pub use crate::par::Strategy;
