//! Exact coefficient rings: arbitrary-precision rationals and sparse
//! multivariate weight polynomials in the symbols `a_n^(k)`.

mod json;
mod monomial;
mod poly;
mod ring;
mod table;
mod variable;

pub use json::{
    parse_rational, rational_string, ring_element_from_json, ring_element_to_json,
    table_from_json, table_to_json, weight_poly_from_json, weight_poly_to_json,
};
pub use monomial::Monomial;
pub use poly::WeightPoly;
pub use ring::{CoeffMode, RingElement};
pub use table::{CoeffTable, TableShape};
pub use variable::VariableId;

/// Exact rational number: reduced, positive denominator, canonical zero.
pub type BigRational = num_rational::BigRational;
