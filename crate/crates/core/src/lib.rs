//! Exact tensor calculus on homogeneous frame manifolds.
//!
//! A manifold is described by constant structure constants, a constant
//! metric and an almost contact structure `(phi, xi, eta)` on a global
//! frame. From that data the crate computes the Levi-Civita connection,
//! curvature, Ricci and `*`-Ricci tensors, classifies the contact structure
//! up to Sasakian, and solves the `*`-conformal eta-Ricci soliton equation,
//! all in exact rational arithmetic.

#![allow(clippy::needless_range_loop)]

pub mod builtins;
pub mod cli;
pub mod curvature;
pub mod derived;
pub mod kernel;
pub mod manifold;
pub mod report;
pub mod soliton;

pub use curvature::{levi_civita, Connection, CurvaturePack};
pub use kernel::{Rat, Slot, Tensor};
pub use manifold::{parse_manifold, FrameManifold, ManifoldError};
