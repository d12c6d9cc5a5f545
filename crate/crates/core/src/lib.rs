//! Stochastic-geometry analysis of target sensing in cooperative air-ground
//! ISAC networks.
//!
//! Base stations form a homogeneous PPP on the ground and sense aerial
//! targets at a fixed altitude. Cooperating stations are silenced inside a
//! guard radius, which tempers the otherwise heavy-tailed interference.
//! The crate provides closed forms and numerical inversions for the
//! interference law, the CFAR detection threshold it induces, and the
//! average radar detection coverage probability (ARDCP), together with a
//! seeded Monte Carlo engine that reproduces each of them.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ardcp;
pub mod cfar;
pub mod cli;
pub mod error;
pub mod interference;
pub mod inversion;
pub mod mc;
pub mod params;
pub mod point_field;
pub mod quadrature;
pub mod rng;
pub mod specials;
pub mod validation;

pub use ardcp::{ardcp, ardcp_with_guard, CoverageMode};
pub use cfar::{resolve_cfar, CfarResult};
pub use error::{Error, Result};
pub use interference::InterferenceModel;
pub use inversion::InversionConfig;
pub use mc::{GuardMode, McConfig, McEstimate};
pub use params::NetworkParams;
