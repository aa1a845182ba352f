//! Lamé parameters and the quantities derived from them.

use serde::Serialize;

use crate::error::{Error, Result};

/// How strictly the Lamé parameters are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Admissibility {
    /// `mu > 0` and `d*lambda + 2*mu > 0`.
    #[default]
    Standard,
    /// `mu > 0` and `lambda + mu > 0`, i.e. `alpha` anywhere in `(0, 1)`.
    Extended,
}

/// Boundary condition on the whole boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Bc {
    /// Clamped: `u = 0`.
    Dir,
    /// Traction free: `T u = 0`.
    Free,
}

impl Bc {
    pub fn as_str(self) -> &'static str {
        match self {
            Bc::Dir => "dir",
            Bc::Free => "free",
        }
    }
}

impl std::fmt::Display for Bc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Bc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dir" => Ok(Bc::Dir),
            "free" => Ok(Bc::Free),
            other => Err(Error::InvalidArgument(format!("unknown boundary condition '{other}'"))),
        }
    }
}

/// A homogeneous isotropic elastic medium in dimension `dim`.
///
/// Immutable once built; `alpha = mu / (lambda + 2 mu)` is cached.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Material {
    lambda: f64,
    mu: f64,
    dim: usize,
    alpha: f64,
}

impl Material {
    /// Validated construction in standard mode.
    pub fn new(lambda: f64, mu: f64, dim: usize) -> Result<Self> {
        Self::with_mode(lambda, mu, dim, Admissibility::Standard)
    }

    pub fn extended(lambda: f64, mu: f64, dim: usize) -> Result<Self> {
        Self::with_mode(lambda, mu, dim, Admissibility::Extended)
    }

    pub fn with_mode(lambda: f64, mu: f64, dim: usize, mode: Admissibility) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidMaterial(format!("dimension must be >= 2, got {dim}")));
        }
        if !lambda.is_finite() || !mu.is_finite() {
            return Err(Error::InvalidMaterial("Lamé parameters must be finite".into()));
        }
        if mu <= 0.0 {
            return Err(Error::InvalidMaterial(format!("mu must be positive, got {mu}")));
        }
        match mode {
            Admissibility::Standard => {
                let bound = dim as f64 * lambda + 2.0 * mu;
                if bound <= 0.0 {
                    return Err(Error::InvalidMaterial(format!(
                        "d*lambda + 2*mu = {bound} must be positive"
                    )));
                }
            }
            Admissibility::Extended => {
                if lambda + mu <= 0.0 {
                    return Err(Error::InvalidMaterial(format!(
                        "alpha = {} lies outside (0, 1)",
                        mu / (lambda + 2.0 * mu)
                    )));
                }
            }
        }
        let alpha = mu / (lambda + 2.0 * mu);
        debug_assert!(alpha > 0.0 && alpha < 1.0);
        Ok(Self { lambda, mu, dim, alpha })
    }

    /// Material with `mu` given and `lambda` chosen so that `mu/(lambda+2mu) = alpha`.
    ///
    /// Uses extended admissibility since any `alpha` in `(0, 1)` is meaningful
    /// for the coefficient formulas.
    pub fn from_alpha(alpha: f64, mu: f64, dim: usize) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidMaterial(format!("alpha = {alpha} lies outside (0, 1)")));
        }
        Self::extended(mu / alpha - 2.0 * mu, mu, dim)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `lambda + 2 mu`, the longitudinal modulus.
    pub fn p_modulus(&self) -> f64 {
        self.lambda + 2.0 * self.mu
    }

    /// Same medium in another dimension.
    pub fn with_dim(&self, dim: usize) -> Result<Self> {
        Self::extended(self.lambda, self.mu, dim)
    }

    /// Longitudinal and transverse wave speeds `(c_p, c_s)`.
    pub fn wave_speeds(&self) -> (f64, f64) {
        (self.p_modulus().sqrt(), self.mu.sqrt())
    }

    /// Upper bound on `alpha` implied by standard admissibility.
    pub fn standard_alpha_bound(dim: usize) -> f64 {
        dim as f64 / (2.0 * (dim as f64 - 1.0))
    }
}
