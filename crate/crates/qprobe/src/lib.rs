//! Spectral toolkit for boundary probing of the Schrödinger operator
//! `Δ + q` on the unit ball with an unknown embedded obstacle.
//!
//! The crate has four legs:
//!
//! - [`kernel_poly`]: exact big-rational algebra for the derivative
//!   polynomials of `1/sqrt(s^2+t^2)` and their combinatorial identities;
//! - [`sphere`] / [`potential`] / [`dtn`]: spherical-harmonic fields, the
//!   layer and volume potential operators of the unit sphere as per-degree
//!   multipliers, and a radial forward solver producing the
//!   Dirichlet-to-Neumann map;
//! - [`model_integrals`]: direct quadrature of the cylinder model integrals
//!   whose `ln j` growth drives the blow-up argument;
//! - [`expansion`] / [`probe`]: the recursive boundary-layer expansion of
//!   point-source solutions, and the probing algorithm that classifies
//!   boundary derivative orders of `q` as matching or differing from local
//!   Cauchy data, with a calibrated estimate of the order-zero gap.
//!
//! The `qprobe` binary exposes the experiment drivers (`identities`,
//! `asymptotics`, `forward`, `expansion`, `probe`, `recover`); see the
//! repository README.

pub mod cli;
pub mod dtn;
pub mod error;
pub mod expansion;
pub mod kernel_poly;
pub mod model_integrals;
pub mod oracles;
pub mod potential;
pub mod probe;
pub mod slope;
pub mod sphere;

pub use error::{Error, Result};
