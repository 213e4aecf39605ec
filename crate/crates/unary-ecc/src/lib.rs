//! Unary-family integer codes and their single-error correction
//! behavior on a binary symmetric channel.
//!
//! The crate has six parts:
//!
//! * [`bits`]: the [`Bitstring`] word type, printed leftmost-first.
//! * [`codec`]: unary (both terminator conventions), fixed-length
//!   thermometer, space and Golomb codes, each with a strict decoder,
//!   plus expected-code-length versus entropy statistics.
//! * [`channel`]: a seeded binary symmetric channel, deterministic
//!   error patterns, and exhaustive weight-t pattern enumeration.
//! * [`decoder`]: minimum-distance decoding over the thermometer
//!   codebook with pluggable tie policies, and the exhaustive census of
//!   correctable error patterns. At weight 1 the census total is
//!   (n-1)^2 for every complete tie policy.
//! * [`capacity`]: the matching closed forms, their maximum at
//!   p = 1/n, curve CSV generation, and a Monte Carlo cross-check.
//! * [`cc4`]: the CC4 corner-classification network, whose radius of
//!   generalization is the neural-network use of these codes.
//!
//! The `unary-ecc` binary (see [`cli`]) exposes all of it from the
//! command line with reproducible, seed-deterministic output.

pub mod bits;
pub mod capacity;
pub mod cc4;
pub mod channel;
pub mod cli;
pub mod codec;
pub mod decoder;
pub mod error;

pub use bits::Bitstring;
pub use error::{Error, Result};
