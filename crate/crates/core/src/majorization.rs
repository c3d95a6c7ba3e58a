//! Vector (sub)majorization via prefix sums of decreasing rearrangements.
//!
//! `x` is submajorized by `y` when every prefix sum of `x` sorted decreasingly
//! is bounded by the matching prefix sum of `y`; it is majorized by `y` when
//! additionally the traces agree. Comparisons use an absolute slack of
//! [`TOL`] scaled by `max(1, |tr y|)`.

use crate::error::{Error, Result};

/// Base comparison tolerance.
pub const TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MajorizationOrder {
    /// `x ≺ y` and the rearrangements differ.
    Less,
    Greater,
    Equal,
    Incomparable,
}

pub fn sort_desc(v: &[f64]) -> Vec<f64> {
    let mut out = v.to_vec();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

pub fn sort_asc(v: &[f64]) -> Vec<f64> {
    let mut out = v.to_vec();
    out.sort_by(|a, b| a.total_cmp(b));
    out
}

fn tolerance(y: &[f64]) -> f64 {
    TOL * y.iter().sum::<f64>().abs().max(1.0)
}

/// `y_t - x_t` for every prefix length `t = 1..=n` of the decreasing rearrangements.
pub fn prefix_slacks(x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let (xs, ys) = (sort_desc(x), sort_desc(y));
    let (mut sx, mut sy) = (0.0, 0.0);
    Ok(xs
        .iter()
        .zip(&ys)
        .map(|(a, b)| {
            sx += a;
            sy += b;
            sy - sx
        })
        .collect())
}

/// True iff `x ≺_w y`.
pub fn submajorized(x: &[f64], y: &[f64]) -> Result<bool> {
    let tol = tolerance(y);
    Ok(prefix_slacks(x, y)?.iter().all(|&s| s >= -tol))
}

/// Zero-extends the shorter of the two vectors.
pub fn pad_pair(x: &[f64], y: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = x.len().max(y.len());
    let mut xp = x.to_vec();
    let mut yp = y.to_vec();
    xp.resize(n, 0.0);
    yp.resize(n, 0.0);
    (xp, yp)
}

/// True iff `x ≺ y`. With `pad`, the shorter vector is zero-extended first.
pub fn majorized(x: &[f64], y: &[f64], pad: bool) -> Result<bool> {
    let (x, y) = if pad { pad_pair(x, y) } else { (x.to_vec(), y.to_vec()) };
    if !submajorized(&x, &y)? {
        return Ok(false);
    }
    let (tx, ty): (f64, f64) = (x.iter().sum(), y.iter().sum());
    Ok((tx - ty).abs() <= tolerance(&y))
}

/// Index (0-based) of the first prefix where `x ≺_w y` fails, if any.
pub fn first_violation(x: &[f64], y: &[f64], pad: bool) -> Result<Option<usize>> {
    let (x, y) = if pad { pad_pair(x, y) } else { (x.to_vec(), y.to_vec()) };
    let tol = tolerance(&y);
    Ok(prefix_slacks(&x, &y)?.iter().position(|&s| s < -tol))
}

/// Compares `x` and `y` in the majorization preorder. Both must have the same
/// length and trace.
pub fn prec_compare(x: &[f64], y: &[f64]) -> Result<MajorizationOrder> {
    let (tx, ty): (f64, f64) = (x.iter().sum(), y.iter().sum());
    let tol = tolerance(y).max(tolerance(x));
    if (tx - ty).abs() > tol {
        return Err(Error::TraceMismatch { left: tx, right: ty });
    }
    let slacks = prefix_slacks(x, y)?;
    let x_below = slacks.iter().all(|&s| s >= -tol);
    let y_below = slacks.iter().all(|&s| s <= tol);
    let same = sort_desc(x).iter().zip(sort_desc(y)).all(|(a, b)| (a - b).abs() <= tol);
    Ok(match (same, x_below, y_below) {
        (true, _, _) => MajorizationOrder::Equal,
        (false, true, _) => MajorizationOrder::Less,
        (false, _, true) => MajorizationOrder::Greater,
        _ => MajorizationOrder::Incomparable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use MajorizationOrder::*;

    #[test]
    fn sorting() {
        assert_eq!(sort_desc(&[2.0, 1.0, 3.0]), vec![3.0, 2.0, 1.0]);
        assert_eq!(sort_asc(&[1.0, 1.0, 1.0]), vec![1.0, 1.0, 1.0]);
        assert_eq!(sort_desc(&[0.0, 0.0, 0.0, 2.0, 3.5]), vec![3.5, 2.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn submajorization_examples() {
        assert!(submajorized(&[1.0, 1.0], &[2.0, 1.0]).unwrap());
        assert!(!submajorized(&[2.0, 0.0], &[1.0, 1.0]).unwrap());
        assert!(!submajorized(&[3.5, 2.0, 0.0, 0.0, 0.0], &[3.25, 2.25, 0.0, 0.0, 0.0]).unwrap());
        assert!(submajorized(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn majorization_examples() {
        assert!(majorized(&[3.5, 2.0], &[0.0, 0.0, 0.0, 2.0, 3.5], true).unwrap());
        assert!(majorized(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0], false).unwrap());
        assert!(!majorized(&[3.5, 2.0], &[0.0, 0.0, 0.0, 2.25, 3.25], true).unwrap());
        // trace must agree
        assert!(!majorized(&[1.0, 1.0], &[2.0, 1.0], false).unwrap());
    }

    #[test]
    fn first_violation_reports_prefix() {
        let v = first_violation(&[3.5, 2.0], &[0.0, 0.0, 0.0, 2.25, 3.25], true).unwrap();
        assert_eq!(v, Some(0));
        assert_eq!(first_violation(&[1.0, 1.0], &[1.0, 1.0], true).unwrap(), None);
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(prec_compare(&[2.0, 2.0], &[3.0, 1.0]).unwrap(), Less);
        assert_eq!(prec_compare(&[3.0, 1.0], &[2.0, 2.0]).unwrap(), Greater);
        assert_eq!(prec_compare(&[4.0, 1.0, 1.0], &[3.0, 3.0, 0.0]).unwrap(), Incomparable);
        assert_eq!(
            prec_compare(&[9.0, 5.0, 4.5, 4.0, 4.0], &[9.0, 6.5, 5.0, 4.0, 2.0]).unwrap(),
            Less
        );
        assert_eq!(prec_compare(&[1.0, 2.0], &[2.0, 1.0]).unwrap(), Equal);
        assert!(matches!(
            prec_compare(&[1.0, 1.0], &[1.0, 2.0]),
            Err(Error::TraceMismatch { .. })
        ));
    }
}
