use crate::error::{CoreError, Result};
use crate::series::laurent::LaurentSeries;

/// Fixed-length vector of Laurent series, the ambient object of the
/// vector continued fraction.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesVector {
    components: Vec<LaurentSeries>,
}

impl SeriesVector {
    pub fn new(components: Vec<LaurentSeries>) -> Result<Self> {
        if components.is_empty() {
            return Err(CoreError::domain("series vector must have length >= 1"));
        }
        let mode = components[0].mode();
        if components.iter().any(|c| c.mode() != mode) {
            return Err(CoreError::RingMismatch);
        }
        Ok(SeriesVector { components })
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, i: usize) -> &LaurentSeries {
        &self.components[i]
    }

    pub fn components(&self) -> &[LaurentSeries] {
        &self.components
    }

    pub fn into_components(self) -> Vec<LaurentSeries> {
        self.components
    }

    pub fn add(&self, other: &SeriesVector) -> Result<SeriesVector> {
        if self.len() != other.len() {
            return Err(CoreError::domain("series vector lengths differ"));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        SeriesVector::new(components)
    }

    /// Component-wise product.
    pub fn hadamard(&self, other: &SeriesVector) -> Result<SeriesVector> {
        if self.len() != other.len() {
            return Err(CoreError::domain("series vector lengths differ"));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<Vec<_>>>()?;
        SeriesVector::new(components)
    }
}

/// The Jacobi-Perron division
/// `(f_1, ..., f_p) / (g_1, ..., g_p) = (f_1/g_p, f_2 g_1/g_p, ..., f_p g_{p-1}/g_p)`.
///
/// The last denominator component must be invertible; its inverse is
/// computed through exponent `n_target`, and validity flows through the
/// component products from there.
pub fn vector_divide(f: &SeriesVector, g: &SeriesVector, n_target: i64) -> Result<SeriesVector> {
    if f.len() != g.len() {
        return Err(CoreError::domain("series vector lengths differ"));
    }
    let p = f.len();
    let g_last_inv = g.component(p - 1).invert(n_target)?;
    let mut components = Vec::with_capacity(p);
    components.push(f.component(0).mul(&g_last_inv)?);
    for i in 1..p {
        components.push(f.component(i).mul(g.component(i - 1))?.mul(&g_last_inv)?);
    }
    SeriesVector::new(components)
}
