//! Exact combinatorics of non-crossing geometric graphs on small point sets.
//!
//! The crate has three layers:
//!
//! * exact planar geometry over arbitrary-precision rationals
//!   ([`geometry`]) and the point-set constructions built on top of it
//!   ([`constructions`]),
//! * exhaustive enumeration and counting of non-crossing graph classes,
//!   including extremal-weight multiplicities and convex-position tours
//!   ([`enumeration`], [`weighted`], [`convex_tour`]),
//! * entropy-based growth-rate objectives and a deterministic multi-start
//!   optimizer that recovers the exponential bases associated with those
//!   counts ([`bounds`]).
//!
//! Everything is deterministic: enumeration streams are canonically ordered,
//! weights are fixed-precision decimals derived from exact squared lengths,
//! and the optimizer is seeded.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line live in the companion `multiplicity-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod combinat;
pub mod constructions;
pub mod convex_tour;
pub mod decimal;
pub mod enumeration;
pub mod geometry;
pub mod sampling;
pub mod weighted;

pub use combinat::{binomial, catalan};
