//! Ordered eigenvalue lists and prescribed norm sequences.

use serde::Serialize;

use crate::error::{Error, Result};

/// Slack allowed when checking monotonicity and nonnegativity of computed spectra.
const ORDER_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Decreasing,
    Increasing,
}

/// A nonnegative vector carrying a declared monotone ordering.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    order: Order,
}

impl Spectrum {
    /// Validates that `values` is finite, nonnegative and already sorted decreasingly.
    pub fn decreasing(values: Vec<f64>) -> Result<Self> {
        Self::checked(values, Order::Decreasing)
    }

    pub fn increasing(values: Vec<f64>) -> Result<Self> {
        Self::checked(values, Order::Increasing)
    }

    /// Sorts `values` into the requested order. Tiny negative entries
    /// (eigensolver noise) are clamped to zero.
    pub fn sorted(mut values: Vec<f64>, order: Order) -> Result<Self> {
        let scale = scale_of(&values);
        for v in values.iter_mut() {
            if *v < 0.0 && *v >= -ORDER_TOL * scale {
                *v = 0.0;
            }
        }
        match order {
            Order::Decreasing => values.sort_by(|a, b| b.total_cmp(a)),
            Order::Increasing => values.sort_by(|a, b| a.total_cmp(b)),
        }
        Self::checked(values, order)
    }

    fn checked(values: Vec<f64>, order: Order) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput("spectrum must be nonempty".into()));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite spectral value {v}")));
        }
        let scale = scale_of(&values);
        if let Some(v) = values.iter().find(|&&v| v < -ORDER_TOL * scale) {
            return Err(Error::InvalidInput(format!("negative spectral value {v}")));
        }
        let monotone = values.windows(2).all(|w| match order {
            Order::Decreasing => w[0] >= w[1] - ORDER_TOL * scale,
            Order::Increasing => w[0] <= w[1] + ORDER_TOL * scale,
        });
        if !monotone {
            return Err(Error::InvalidInput(format!(
                "spectrum {values:?} is not {}",
                match order {
                    Order::Decreasing => "decreasing",
                    Order::Increasing => "increasing",
                }
            )));
        }
        Ok(Self { values, order })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Number of entries above `tol * max(1, max entry)`.
    pub fn rank(&self, tol: f64) -> usize {
        let scale = scale_of(&self.values);
        self.values.iter().filter(|&&v| v > tol * scale).count()
    }
}

/// Strictly positive prescribed squared norms, stored decreasingly.
///
/// `original_order[i]` is the caller's index of `values[i]`, so results can be
/// reported in the order the caller supplied.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormSeq {
    values: Vec<f64>,
    original_order: Vec<usize>,
}

impl NormSeq {
    pub fn new(norms: &[f64]) -> Result<Self> {
        if norms.is_empty() {
            return Err(Error::InvalidInput("norm list must be nonempty".into()));
        }
        if let Some(a) = norms.iter().find(|a| !(a.is_finite() && **a > 0.0)) {
            return Err(Error::InvalidInput(format!(
                "prescribed squared norms must be finite and strictly positive, got {a}"
            )));
        }
        let mut original_order: Vec<usize> = (0..norms.len()).collect();
        // stable: equal norms keep their caller order
        original_order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));
        let values = original_order.iter().map(|&i| norms[i]).collect();
        Ok(Self { values, original_order })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn original_order(&self) -> &[usize] {
        &self.original_order
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    /// The norms in the caller's original order.
    pub fn as_given(&self) -> Vec<f64> {
        self.restore_order(self.values.clone())
    }

    /// Maps items indexed in canonical (decreasing) order back to caller order.
    pub fn restore_order<T>(&self, items: Vec<T>) -> Vec<T> {
        assert_eq!(items.len(), self.len());
        let mut slots: Vec<Option<T>> = (0..items.len()).map(|_| None).collect();
        for (item, &orig) in items.into_iter().zip(&self.original_order) {
            slots[orig] = Some(item);
        }
        slots.into_iter().map(|s| s.expect("permutation")).collect()
    }
}

pub(crate) fn scale_of(values: &[f64]) -> f64 {
    values.iter().fold(1.0_f64, |m, v| m.max(v.abs()))
}
