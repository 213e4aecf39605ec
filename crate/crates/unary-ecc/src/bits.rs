//! Bit strings printed and compared leftmost-position first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered sequence of binary symbols.
///
/// Position 1 is the leftmost symbol, matching the printed form:
/// `"1110".parse::<Bitstring>()` holds ones in positions 1 through 3 and a
/// zero in position 4. Ordering and hashing follow the printed string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bitstring {
    bits: Vec<bool>,
}

impl Bitstring {
    pub fn new() -> Self {
        Self { bits: Vec::new() }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// `count` copies of `bit`.
    pub fn repeat(bit: bool, count: usize) -> Self {
        Self { bits: vec![bit; count] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of one symbols.
    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Number of zero symbols.
    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    /// Flip the bit at `index` (0-based).
    ///
    /// Panics if `index` is out of bounds; callers that take 1-based
    /// positions from outside validate first.
    pub fn toggle(&mut self, index: usize) {
        self.bits[index] = !self.bits[index];
    }

    /// Bitwise complement.
    pub fn complement(&self) -> Self {
        self.bits.iter().map(|b| !b).collect()
    }

    /// Number of positions at which `self` and `other` differ.
    ///
    /// Panics if the lengths differ.
    pub fn hamming_distance(&self, other: &Self) -> usize {
        assert_eq!(
            self.len(),
            other.len(),
            "hamming distance requires equal lengths"
        );
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }
}

impl FromIterator<bool> for Bitstring {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self { bits: iter.into_iter().collect() }
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bitstring(\"{self}\")")
    }
}

impl FromStr for Bitstring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidBitstring(format!(
                    "unexpected character {other:?} in {s:?}"
                ))),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> Bitstring {
        s.parse().unwrap()
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["", "0", "1", "1110", "00111", "10101"] {
            assert_eq!(bs(s).to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_other_characters() {
        assert!(matches!(
            "01x1".parse::<Bitstring>(),
            Err(Error::InvalidBitstring(_))
        ));
    }

    #[test]
    fn counts_and_complement() {
        let w = bs("00111");
        assert_eq!(w.len(), 5);
        assert_eq!(w.ones(), 3);
        assert_eq!(w.zeros(), 2);
        assert_eq!(w.complement(), bs("11000"));
    }

    #[test]
    fn hamming_distance_counts_differing_positions() {
        assert_eq!(bs("00111").hamming_distance(&bs("00111")), 0);
        assert_eq!(bs("00111").hamming_distance(&bs("11000")), 5);
        assert_eq!(bs("00010").hamming_distance(&bs("00000")), 1);
    }

    #[test]
    fn ordering_matches_printed_string() {
        assert!(bs("00001") < bs("00010"));
        assert!(bs("01111") < bs("10000"));
    }
}
