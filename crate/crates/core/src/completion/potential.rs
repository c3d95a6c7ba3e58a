use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Strictly convex `f` on `[0, ∞)`, evaluated spectrally as `Σ f(ν_i)`.
#[derive(Clone)]
pub enum Potential {
    /// `f(x) = x²`.
    FramePotential,
    /// `f(x) = 1/x`, with `f(0) = +∞`.
    Mse,
    /// `f(x) = x^p` for `p > 1`.
    Power(f64),
    Custom(CustomPotential),
}

/// A user-supplied rule. Convexity is attested by the caller, not checked.
#[derive(Clone)]
pub struct CustomPotential {
    name: String,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl Potential {
    pub fn power(p: f64) -> Result<Self> {
        if !(p.is_finite() && p > 1.0) {
            return Err(Error::InvalidInput(format!("power exponent must exceed 1, got {p}")));
        }
        Ok(Self::Power(p))
    }

    /// Registers `f`. `strictly_convex` must be `true`: the solver's
    /// optimality guarantees only cover strictly convex functions.
    pub fn custom(
        name: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        strictly_convex: bool,
    ) -> Result<Self> {
        let name = name.into();
        if !strictly_convex {
            return Err(Error::InvalidInput(format!(
                "potential {name:?} is not attested strictly convex"
            )));
        }
        Ok(Self::Custom(CustomPotential { name, f: Arc::new(f) }))
    }

    pub fn f(&self, x: f64) -> f64 {
        match self {
            Self::FramePotential => x * x,
            Self::Mse => {
                if x > 0.0 {
                    1.0 / x
                } else {
                    f64::INFINITY
                }
            }
            Self::Power(p) => x.max(0.0).powf(*p),
            Self::Custom(c) => (c.f)(x),
        }
    }

    /// `Σ f(ν_i)`; may be `+∞`.
    pub fn evaluate(&self, nu: &[f64]) -> f64 {
        nu.iter().map(|&x| self.f(x)).sum()
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FramePotential => write!(f, "fp"),
            Self::Mse => write!(f, "mse"),
            Self::Power(p) => write!(f, "power:{p}"),
            Self::Custom(c) => write!(f, "custom:{}", c.name),
        }
    }
}

impl fmt::Debug for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Potential({self})")
    }
}

impl FromStr for Potential {
    type Err = Error;

    /// Accepts `fp`, `mse` and `power:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fp" => Ok(Self::FramePotential),
            "mse" => Ok(Self::Mse),
            _ => match s.strip_prefix("power:") {
                Some(p) => {
                    let p: f64 = p
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad exponent in {s:?}")))?;
                    Self::power(p)
                }
                None => Err(Error::InvalidInput(format!(
                    "unknown potential {s:?}, expected fp, mse or power:<p>"
                ))),
            },
        }
    }
}
