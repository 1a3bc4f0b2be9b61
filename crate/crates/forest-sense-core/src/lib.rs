//! Coverage and detection analysis for sensor networks deployed uniformly at
//! random inside a disk-shaped region.
//!
//! The deployment is a finite homogeneous Poisson process on the disk; each
//! sensor senses a fixed disk around itself, so the sensed region is a finite
//! Boolean model. Events start at a uniformly random point in the region and
//! grow as disks at constant speed. The crate provides
//!
//! * [`geometry`] — circle–circle intersection (lens) areas together with the
//!   rectangle upper bound and inscribed-circle lower bound used by the
//!   analytic integrands,
//! * [`analytic`] — the contact-distance CDF of the deployment, closed-form
//!   bounds on it, asymptotic limits, and the event-sensing probability
//!   (the capacity functional of the sensed region),
//! * [`montecarlo`] — a seeded, shardable simulator used as ground truth for
//!   every analytic expression,
//! * [`experiments`] — curve tables pairing analytic values with Monte Carlo
//!   estimates, plus named presets,
//! * [`table`] — the rectangular curve-table carrier shared by the above,
//! * [`quad`] — adaptive Gauss–Legendre quadrature for the CDF integrals.
//!
//! The library is `no_std` (it only needs `alloc`); file formats, IO and the
//! command line live in the companion `forest-sense-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analytic;
pub mod experiments;
pub mod geometry;
pub mod montecarlo;
pub mod quad;
pub mod table;

pub use analytic::{EventModel, ModelError, NetworkModel};
pub use quad::{QuadratureError, QuadratureSpec};
pub use table::CurveTable;
