//! Exact-arithmetic kernels for weighted Lukasiewicz lattice paths and the
//! vector continued fractions attached to banded Hessenberg operators.
//!
//! The crate is organized around five layers:
//!
//! - [`algebra`]: arbitrary-precision rationals, sparse weight polynomials
//!   in the symbols `a_n^(k)`, and coefficient tables;
//! - [`paths`]: modelling, enumeration, weighting, counting, and reflection
//!   of the lattice-path families;
//! - [`series`]: truncated Laurent series in `1/z` with explicit validity
//!   tracking, inversion, and the vector division operation;
//! - [`operators`]: banded Hessenberg operators (one-sided, reflected,
//!   two-sided), their moments, characteristic polynomials, and the
//!   simultaneous rational-approximation order check;
//! - [`vcf`]: the Jacobi-Perron vector continued fraction, its finite
//!   evaluation, and the machine-checked identity suites.
//!
//! Everything is immutable and pure; all values are exact (big integers,
//! big rationals, or integer-coefficient polynomials). Truncated series
//! track the range of exponents they are trusted on, and comparisons
//! outside that range are errors rather than silent passes.

pub mod algebra;
pub mod error;
pub mod operators;
pub mod paths;
pub mod series;
pub mod vcf;

pub use algebra::{
    BigRational, CoeffMode, CoeffTable, Monomial, RingElement, TableShape, VariableId, WeightPoly,
};
pub use error::{CoreError, Result};
pub use operators::{CharPolyPair, OperatorKind};
pub use paths::{Family, FamilySpec, LatticePath, PathCount, Step};
pub use series::{LaurentSeries, SeriesFamily, SeriesVector, ZPoly};
pub use vcf::{CfTerm, IdentityReport, ReportStatus, TailVector};
