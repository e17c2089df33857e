use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Univariate power series truncated after `t^truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    truncation: usize,
    coeffs: Vec<Scalar>,
}

impl PowerSeries {
    pub fn zero(field: &Field, truncation: usize) -> Self {
        PowerSeries { truncation, coeffs: vec![field.zero(); truncation + 1] }
    }

    /// Truncates (or zero-pads) ascending polynomial coefficients.
    pub fn from_coefficients(field: &Field, coeffs: &[Scalar], truncation: usize) -> Self {
        let mut s = Self::zero(field, truncation);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        assert_eq!(self.truncation, other.truncation);
        PowerSeries {
            truncation: self.truncation,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> PowerSeries {
        PowerSeries { truncation: self.truncation, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        assert_eq!(self.truncation, other.truncation);
        let n = self.truncation;
        let mut coeffs: Vec<Scalar> = self.coeffs.to_vec();
        for (k, slot) in coeffs.iter_mut().enumerate() {
            let mut acc = &self.coeffs[0] * &other.coeffs[k];
            for i in 1..=k {
                acc = &acc + &(&self.coeffs[i] * &other.coeffs[k - i]);
            }
            *slot = acc;
        }
        debug_assert_eq!(coeffs.len(), n + 1);
        PowerSeries { truncation: n, coeffs }
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<PowerSeries> {
        let c0_inv = self.coeffs[0].inv().map_err(|_| Error::DivisionByZero)?;
        let mut out = Vec::with_capacity(self.truncation + 1);
        out.push(c0_inv.clone());
        for k in 1..=self.truncation {
            let mut acc = &self.coeffs[1] * &out[k - 1];
            for i in 2..=k {
                acc = &acc + &(&self.coeffs[i] * &out[k - i]);
            }
            out.push(-&(&acc * &c0_inv));
        }
        Ok(PowerSeries { truncation: self.truncation, coeffs: out })
    }
}
