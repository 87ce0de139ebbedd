//! Sampling models `F` for the maxima recursion.
//!
//! Every model exposes the cdf, the tail `1 - F` computed *directly* from the
//! analytic form (never as `1 - cdf(x)`, which loses all precision exactly
//! where the norming machinery needs `1 - F(theta_n) ~ 1/n` resolved to many
//! digits), the left-continuous quantile `F^<-(u) = inf{y : F(y) >= u}`, and a
//! tail-side quantile `upper_quantile(q) = F^<-(1 - q)` that takes the tail
//! probability as its argument so that `theta_n` can be computed without
//! forming `1 - 1/n`.

use crate::error::{Error, Result};
use rand::distributions::Open01;
use rand::Rng;
use std::fmt;

/// Which of the three max-stable laws attracts the model's maxima.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainOfAttraction {
    /// Gumbel class (exponential-like upper tails).
    Type1,
    /// Frechet class, polynomial tail with exponent `alpha`.
    Type2 { alpha: f64 },
    /// Weibull class, finite endpoint with power behavior `alpha`.
    Type3 { alpha: f64 },
}

/// A distribution model with analytic tail-side primitives.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    /// Rate-1 exponential: `F(x) = 1 - e^(-x)` on `[0, inf)`.
    Exponential,
    /// Standard normal.
    StandardNormal,
    /// `F(x) = 1 - x^(-alpha)` on `[1, inf)`.
    Pareto { alpha: f64 },
    /// `F(x) = x` on `[0, 1]`.
    Uniform01,
    /// `F(x) = 1 - (1 - x)^alpha` on `[0, 1]`.
    BoundedPower { alpha: f64 },
    /// Support truncation: `F_delta(x) = F(x) * 1{x >= delta}`. The mass `F`
    /// puts below `delta` becomes an atom at `delta`.
    Truncated { base: Box<Model>, delta: f64 },
}

fn check_alpha(alpha: f64) -> Result<f64> {
    if alpha.is_finite() && alpha > 0.0 {
        Ok(alpha)
    } else {
        Err(Error::Domain(format!(
            "shape parameter must be positive and finite, got {alpha}"
        )))
    }
}

impl Model {
    pub fn pareto(alpha: f64) -> Result<Model> {
        Ok(Model::Pareto {
            alpha: check_alpha(alpha)?,
        })
    }

    pub fn bounded_power(alpha: f64) -> Result<Model> {
        Ok(Model::BoundedPower {
            alpha: check_alpha(alpha)?,
        })
    }

    /// Truncate the support at `delta` (`F_delta(x) = F(x) 1{x >= delta}`).
    pub fn truncated(self, delta: f64) -> Result<Model> {
        if !delta.is_finite() {
            return Err(Error::Domain(format!(
                "truncation point must be finite, got {delta}"
            )));
        }
        if delta >= self.right_endpoint() {
            return Err(Error::Domain(format!(
                "truncation point {delta} is not below the right endpoint {}",
                self.right_endpoint()
            )));
        }
        Ok(Model::Truncated {
            base: Box::new(self),
            delta,
        })
    }

    /// Parse a model string: `exponential`, `normal`, `pareto:ALPHA`,
    /// `uniform01`, `boundedpower:ALPHA`, optionally suffixed `+trunc:DELTA`.
    pub fn parse(spec: &str) -> Result<Model> {
        let (head, trunc) = match spec.split_once("+trunc:") {
            Some((h, d)) => {
                let delta: f64 = d.parse().map_err(|_| {
                    Error::Domain(format!("bad truncation point {d:?} in model spec {spec:?}"))
                })?;
                (h, Some(delta))
            }
            None => (spec, None),
        };
        let base = match head.split_once(':') {
            None => match head {
                "exponential" => Model::Exponential,
                "normal" => Model::StandardNormal,
                "uniform01" => Model::Uniform01,
                _ => {
                    return Err(Error::Domain(format!("unknown model {head:?}")));
                }
            },
            Some((name, param)) => {
                let alpha: f64 = param.parse().map_err(|_| {
                    Error::Domain(format!("bad parameter {param:?} in model spec {spec:?}"))
                })?;
                match name {
                    "pareto" => Model::pareto(alpha)?,
                    "boundedpower" => Model::bounded_power(alpha)?,
                    _ => {
                        return Err(Error::Domain(format!("unknown model {name:?}")));
                    }
                }
            }
        };
        match trunc {
            Some(delta) => base.truncated(delta),
            None => Ok(base),
        }
    }

    /// `F(x)`.
    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            Model::Exponential => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-x).exp_m1()
                }
            }
            Model::StandardNormal => normal_cdf(x),
            Model::Pareto { alpha } => {
                if x <= 1.0 {
                    0.0
                } else {
                    1.0 - x.powf(-alpha)
                }
            }
            Model::Uniform01 => x.clamp(0.0, 1.0),
            Model::BoundedPower { alpha } => {
                if x <= 0.0 {
                    0.0
                } else if x >= 1.0 {
                    1.0
                } else {
                    1.0 - (1.0 - x).powf(*alpha)
                }
            }
            Model::Truncated { base, delta } => {
                if x < *delta {
                    0.0
                } else {
                    base.cdf(x)
                }
            }
        }
    }

    /// `1 - F(x)`, computed from the analytic tail form.
    pub fn tail(&self, x: f64) -> f64 {
        match self {
            Model::Exponential => {
                if x <= 0.0 {
                    1.0
                } else {
                    (-x).exp()
                }
            }
            Model::StandardNormal => normal_tail(x),
            Model::Pareto { alpha } => {
                if x <= 1.0 {
                    1.0
                } else {
                    x.powf(-alpha)
                }
            }
            Model::Uniform01 => (1.0 - x).clamp(0.0, 1.0),
            Model::BoundedPower { alpha } => {
                if x <= 0.0 {
                    1.0
                } else if x >= 1.0 {
                    0.0
                } else {
                    (1.0 - x).powf(*alpha)
                }
            }
            Model::Truncated { base, delta } => {
                if x < *delta {
                    1.0
                } else {
                    base.tail(x)
                }
            }
        }
    }

    /// Left-continuous inverse `F^<-(u) = inf{y : F(y) >= u}` for `u` in
    /// `(0, 1]`. `u = 1` returns the right endpoint when finite.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u <= 1.0) {
            return Err(Error::Domain(format!("quantile argument {u} not in (0, 1]")));
        }
        if u == 1.0 {
            let xf = self.right_endpoint();
            return if xf.is_finite() {
                Ok(xf)
            } else {
                Err(Error::Unbounded)
            };
        }
        Ok(match self {
            Model::Exponential => -(-u).ln_1p(),
            Model::StandardNormal => {
                if u == 0.5 {
                    0.0
                } else if u < 0.5 {
                    -normal_tail_inverse(u)
                } else {
                    normal_tail_inverse(1.0 - u)
                }
            }
            Model::Pareto { alpha } => (-(-u).ln_1p() / alpha).exp(),
            Model::Uniform01 => u,
            Model::BoundedPower { alpha } => -((-u).ln_1p() / alpha).exp_m1(),
            Model::Truncated { base, delta } => {
                if u <= base.cdf(*delta) {
                    *delta
                } else {
                    base.quantile(u)?
                }
            }
        })
    }

    /// `F^<-(1 - q)` computed from the tail probability `q` in `[0, 1)`,
    /// avoiding the rounding of `1 - q`. `q = 0` returns the right endpoint
    /// when finite.
    pub fn upper_quantile(&self, q: f64) -> Result<f64> {
        if !(q >= 0.0 && q < 1.0) {
            return Err(Error::Domain(format!(
                "upper quantile argument {q} not in [0, 1)"
            )));
        }
        if q == 0.0 {
            let xf = self.right_endpoint();
            return if xf.is_finite() {
                Ok(xf)
            } else {
                Err(Error::Unbounded)
            };
        }
        Ok(match self {
            Model::Exponential => -q.ln(),
            Model::StandardNormal => {
                if q == 0.5 {
                    0.0
                } else if q > 0.5 {
                    -normal_tail_inverse(1.0 - q)
                } else {
                    normal_tail_inverse(q)
                }
            }
            Model::Pareto { alpha } => (-q.ln() / alpha).exp(),
            Model::Uniform01 => 1.0 - q,
            Model::BoundedPower { alpha } => 1.0 - (q.ln() / alpha).exp(),
            Model::Truncated { base, delta } => {
                if q >= base.tail(*delta) {
                    *delta
                } else {
                    base.upper_quantile(q)?
                }
            }
        })
    }

    /// Right endpoint `x_F = sup{x : F(x) < 1}` (may be `+inf`).
    pub fn right_endpoint(&self) -> f64 {
        match self {
            Model::Exponential | Model::StandardNormal | Model::Pareto { .. } => f64::INFINITY,
            Model::Uniform01 | Model::BoundedPower { .. } => 1.0,
            Model::Truncated { base, .. } => base.right_endpoint(),
        }
    }

    /// Infimum of the support (may be `-inf`).
    pub fn support_inf(&self) -> f64 {
        match self {
            Model::Exponential | Model::Uniform01 | Model::BoundedPower { .. } => 0.0,
            Model::StandardNormal => f64::NEG_INFINITY,
            Model::Pareto { .. } => 1.0,
            Model::Truncated { base, delta } => delta.max(base.support_inf()),
        }
    }

    pub fn doa(&self) -> DomainOfAttraction {
        match self {
            Model::Exponential | Model::StandardNormal => DomainOfAttraction::Type1,
            Model::Pareto { alpha } => DomainOfAttraction::Type2 { alpha: *alpha },
            Model::Uniform01 => DomainOfAttraction::Type3 { alpha: 1.0 },
            Model::BoundedPower { alpha } => DomainOfAttraction::Type3 { alpha: *alpha },
            Model::Truncated { base, .. } => base.doa(),
        }
    }

    /// Auxiliary scale function of Gumbel-class models, where known
    /// analytically; `None` for models outside that class.
    pub fn aux_g(&self, x: f64) -> Option<f64> {
        match self {
            Model::Exponential => Some(1.0),
            // Asymptotic auxiliary function of the normal upper tail.
            Model::StandardNormal => Some(1.0 / x),
            Model::Truncated { base, .. } => base.aux_g(x),
            _ => None,
        }
    }

    /// Inversion sampler: `quantile(U)` with `U` uniform on the open unit
    /// interval.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u: f64 = rng.sample(Open01);
        self.quantile(u)
            .expect("open-interval uniform is a valid quantile argument")
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Exponential => write!(f, "exponential"),
            Model::StandardNormal => write!(f, "normal"),
            Model::Pareto { alpha } => write!(f, "pareto:{alpha}"),
            Model::Uniform01 => write!(f, "uniform01"),
            Model::BoundedPower { alpha } => write!(f, "boundedpower:{alpha}"),
            Model::Truncated { base, delta } => write!(f, "{base}+trunc:{delta}"),
        }
    }
}

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Standard normal cdf via the complementary error function.
fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

/// Standard normal upper tail, accurate for large `x` (no cancellation).
fn normal_tail(x: f64) -> f64 {
    0.5 * libm::erfc(x * FRAC_1_SQRT_2)
}

fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Solve `normal_tail(x) = q` for `q` in `(0, 0.5]`: bisection bracket on
/// `[0, 40]` followed by Newton polish to ~1e-12 relative in `x`.
fn normal_tail_inverse(q: f64) -> f64 {
    debug_assert!(q > 0.0 && q <= 0.5);
    let (mut lo, mut hi) = (0.0_f64, 40.0_f64);
    // Coarse bisection to a safe Newton basin.
    for _ in 0..20 {
        let mid = 0.5 * (lo + hi);
        if normal_tail(mid) > q {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..8 {
        let step = (normal_tail(x) - q) / normal_pdf(x);
        x += step;
        if step.abs() <= 1e-13 * (1.0 + x.abs()) {
            break;
        }
    }
    x
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_model() -> impl Strategy<Value = Model> {
        prop_oneof![
            Just(Model::Exponential),
            Just(Model::StandardNormal),
            (0.5f64..5.0).prop_map(|a| Model::Pareto { alpha: a }),
            Just(Model::Uniform01),
            (0.5f64..5.0).prop_map(|a| Model::BoundedPower { alpha: a }),
        ]
    }

    proptest! {
        #[test]
        fn tail_plus_cdf_is_one(model in arb_model(), x in -50.0f64..50.0) {
            let s = model.tail(x) + model.cdf(x);
            prop_assert!((s - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn cdf_of_quantile_dominates_u(model in arb_model(), u in 1e-6f64..0.999999) {
            let x = model.quantile(u).unwrap();
            prop_assert!(model.cdf(x) >= u - 1e-11);
        }

        #[test]
        fn tail_vanishes_past_endpoint(model in arb_model(), x in 0.0f64..10.0) {
            let xf = model.right_endpoint();
            if xf.is_finite() {
                prop_assert_eq!(model.tail(xf + x + 1e-9), 0.0);
            }
            prop_assert!(model.tail(model.support_inf().max(-1e6) - 1.0) > 0.0);
        }
    }
}
