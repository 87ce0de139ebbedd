//! Simulation toolkit for renormalized running maxima of i.i.d. sequences and
//! the limiting jump Markov process they converge to.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`distributions`] — sampling models `F` with direct tail evaluation and
//!   left-continuous quantiles;
//! * [`norming`] — centering/scaling sequences `(a_n, b_n)` together with the
//!   derived quantities `theta_n`, `gamma_n`, `Gamma_n`, `rho_n`, `beta_n`;
//! * [`evt`] — the three max-stable limit laws, their hazard-like function
//!   `tau`, jump density `phi`, and stationary law `nu`;
//! * [`scheme`] — the decreasing-step recursion for `X_n = (M_n - b_n)/a_n`
//!   and its step-process time change;
//! * [`pdmp`] — exact simulation of the limiting piecewise-deterministic
//!   process and quadrature evaluation of its generator;
//! * [`stats`] — Kolmogorov–Smirnov distances, tail ratios, generator
//!   residuals and invariance integrals used to certify convergence.
//!
//! Supporting modules: [`quad`] (adaptive Gauss–Kronrod integration),
//! [`dd`] (double-double compensated arithmetic), [`streams`] (reproducible
//! per-path RNG streams and deterministic reductions).

pub mod dd;
pub mod distributions;
pub mod error;
pub mod evt;
pub mod norming;
pub mod pdmp;
pub mod quad;
pub mod scheme;
pub mod stats;
pub mod streams;

pub use distributions::{DomainOfAttraction, Model};
pub use error::{Error, Result};
pub use evt::ExtremeType;
pub use norming::NormingSequence;
pub use pdmp::PdmpPath;
pub use scheme::SchemePath;
pub use stats::TestFunction;
