//! Truncated Laurent series in `1/z` over the exact coefficient rings,
//! with explicit validity tracking, inversion by coefficient recursion,
//! rational-function expansion, and the vector division operation.

mod family;
mod laurent;
mod vector;
mod zpoly;

pub use family::{series_from_family, SeriesFamily};
pub use laurent::{common_range, mismatches, LaurentSeries, VALID_INF};
pub use vector::{vector_divide, SeriesVector};
pub use zpoly::{rational_to_series, ZPoly};
