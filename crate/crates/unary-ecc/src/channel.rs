//! A binary symmetric channel plus its deterministic counterpart.
//!
//! `Bsc` flips each transmitted bit independently with probability p,
//! driven by a generator seeded from the caller's `ChannelParams`, so a
//! fixed (seed, input, p) triple always reproduces the same output.
//! `ErrorPattern` applies a chosen set of flips instead, and
//! `enumerate_patterns` walks every weight-t flip set once. The
//! exhaustive census and the simulation both stand on these.

use itertools::Itertools;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::Bitstring;
use crate::error::{Error, Result};

/// Bit error probability and generator seed for a `Bsc`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    pub p: f64,
    pub seed: u64,
}

impl ChannelParams {
    pub fn new(p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Range(format!(
                "bit error probability {p} outside [0, 1]"
            )));
        }
        Ok(Self { p, seed })
    }
}

/// A binary symmetric channel with caller-owned generator state.
///
/// Distinct channels may transmit concurrently; a single channel
/// advances its generator on every bit, so outputs depend on the
/// sequence of calls since construction.
#[derive(Debug, Clone)]
pub struct Bsc {
    p: f64,
    rng: ChaCha8Rng,
}

impl Bsc {
    pub fn new(params: ChannelParams) -> Self {
        Self {
            p: params.p,
            rng: ChaCha8Rng::seed_from_u64(params.seed),
        }
    }

    /// Transmits `bits`, flipping each independently with probability p.
    pub fn transmit(&mut self, bits: &Bitstring) -> Bitstring {
        transmit_with(bits, self.p, &mut self.rng)
    }
}

/// `Bsc::transmit` over an external generator, for callers that manage
/// their own streams.
pub fn transmit_with<R: Rng>(bits: &Bitstring, p: f64, rng: &mut R) -> Bitstring {
    bits.iter().map(|b| b != rng.random_bool(p)).collect()
}

/// A set of distinct 1-based flip positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ErrorPattern {
    positions: Vec<usize>,
}

impl ErrorPattern {
    /// Builds a pattern from 1-based positions; duplicates collapse.
    pub fn new(mut positions: Vec<usize>) -> Result<Self> {
        if positions.contains(&0) {
            return Err(Error::Range("error-pattern positions are 1-based".into()));
        }
        positions.sort_unstable();
        positions.dedup();
        Ok(Self { positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn weight(&self) -> usize {
        self.positions.len()
    }

    /// Flips exactly the bits at this pattern's positions.
    pub fn apply(&self, bits: &Bitstring) -> Result<Bitstring> {
        let mut out = bits.clone();
        for &pos in &self.positions {
            if pos > bits.len() {
                return Err(Error::OutOfRange { position: pos, length: bits.len() });
            }
            out.toggle(pos - 1);
        }
        Ok(out)
    }
}

/// All C(length, t) weight-t patterns, in lexicographic position order.
pub fn enumerate_patterns(length: usize, t: usize) -> Result<Vec<ErrorPattern>> {
    if t > length {
        return Err(Error::Range(format!(
            "pattern weight {t} exceeds word length {length}"
        )));
    }
    Ok((1..=length)
        .combinations(t)
        .map(|positions| ErrorPattern { positions })
        .collect())
}
