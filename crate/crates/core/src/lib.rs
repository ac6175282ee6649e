//! Iterative non-rigid point-set and surface registration built on Gaussian
//! process deformation priors.
//!
//! A registration run pairs two exchangeable ingredients:
//!
//! * a **deformation prior** — a Gaussian process over displacement fields of a
//!   reference shape, described by a [`kernels::Kernel`] and discretized into a
//!   low-rank [`gpmm::LowRankGp`], and
//! * a **correspondence estimator** — anything that proposes per-point target
//!   positions with per-point noise ([`correspondence`]): filtered closest
//!   points, soft Gaussian-mixture assignment, or the similarity-transform
//!   aware variant.
//!
//! Each iteration regresses the estimated correspondences through the prior in
//! closed form and either takes the posterior mean (deterministic mode) or
//! treats the posterior as a Metropolis-Hastings proposal (probabilistic
//! mode). Classic algorithms fall out as presets: see
//! [`registration::AlgorithmPreset`].

pub mod correspondence;
pub mod geometry;
pub mod gpmm;
pub mod kernels;
pub mod metrics;
pub mod registration;
pub mod synthetic;

pub use geometry::{
    DeformationField, Geometry, Landmark, PointSet, SimilarityTransform, TriangleMesh,
};
pub use gpmm::LowRankGp;
pub use kernels::Kernel;
