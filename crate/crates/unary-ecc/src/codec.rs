//! Codecs for four integer representations over the binary alphabet:
//!
//! * unary, in both terminator conventions;
//! * fixed-length thermometer words (the codebook the decoder searches);
//! * space coding, a mark position counted from the right;
//! * Golomb codes, a unary quotient followed by a binary remainder.
//!
//! Every encoder has a strict inverse: decoders accept exactly the
//! encoder's output and report anything else as an error rather than
//! guessing. Code-length statistics against entropy live here too.

use crate::bits::Bitstring;
use crate::error::{Error, Result};

/// Terminator convention for the unary code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryVariant {
    /// v ones followed by a single zero.
    OnesThenZero,
    /// v zeros followed by a single one.
    ZerosThenOne,
}

impl std::fmt::Display for UnaryVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            UnaryVariant::OnesThenZero => "ones-then-zero",
            UnaryVariant::ZerosThenOne => "zeros-then-one",
        })
    }
}

/// Encodes `v` in unary: `v` repeated symbols, then one terminator.
/// Output length is always `v + 1`.
pub fn encode_unary(v: u64, variant: UnaryVariant) -> Bitstring {
    let (body, terminator) = match variant {
        UnaryVariant::OnesThenZero => (true, false),
        UnaryVariant::ZerosThenOne => (false, true),
    };
    let mut out = Bitstring::repeat(body, v as usize);
    out.push(terminator);
    out
}

/// Decodes a whole unary codeword.
///
/// The terminator must be present and must be the final symbol; anything
/// else is `MalformedCodeword`.
pub fn decode_unary(bits: &Bitstring, variant: UnaryVariant) -> Result<u64> {
    let body = match variant {
        UnaryVariant::OnesThenZero => true,
        UnaryVariant::ZerosThenOne => false,
    };
    let mut symbols = bits.iter();
    let v = symbols.by_ref().take_while(|&b| b == body).count();
    // take_while consumed the terminator; only trailing symbols remain.
    if v == bits.len() {
        return Err(Error::MalformedCodeword(format!(
            "unary codeword {bits} has no terminator"
        )));
    }
    if symbols.next().is_some() {
        return Err(Error::MalformedCodeword(format!(
            "unary codeword {bits} continues past its terminator"
        )));
    }
    Ok(v as u64)
}

/// Encodes `v` as `n - v` zeros followed by `v` ones.
pub fn encode_thermometer(v: usize, n: usize) -> Result<Bitstring> {
    if n == 0 {
        return Err(Error::Range("thermometer length n must be positive".into()));
    }
    if v > n {
        return Err(Error::Range(format!(
            "thermometer value {v} exceeds code length {n}"
        )));
    }
    let mut out = Bitstring::repeat(false, n - v);
    for _ in 0..v {
        out.push(true);
    }
    Ok(out)
}

/// Decodes a thermometer codeword, accepting only words of the exact
/// form `0^(n-v) 1^v` and returning `v`.
pub fn decode_thermometer_strict(bits: &Bitstring) -> Result<usize> {
    if bits.is_empty() {
        return Err(Error::NotACodeword("empty word".into()));
    }
    let mut seen_one = false;
    for b in bits.iter() {
        if b {
            seen_one = true;
        } else if seen_one {
            return Err(Error::NotACodeword(format!(
                "{bits} has a 1 left of a 0"
            )));
        }
    }
    Ok(bits.ones())
}

/// Encodes `v` as a mark in slot `v` counted from the right: every
/// position left of the mark (inclusive) is 1, every position right of
/// it is 0. Equivalently `slots - v + 1` ones then `v - 1` zeros.
/// There is no representation for 0; the domain starts at 1.
pub fn encode_space(v: usize, slots: usize) -> Result<Bitstring> {
    if v < 1 || v > slots {
        return Err(Error::Range(format!(
            "space value {v} outside [1, {slots}]"
        )));
    }
    let mut out = Bitstring::repeat(true, slots - v + 1);
    for _ in 0..v - 1 {
        out.push(false);
    }
    Ok(out)
}

/// Decodes a space codeword of the form `1^a 0^b` with `a >= 1`,
/// returning `v = b + 1` (the slot count is `bits.len()`).
pub fn decode_space(bits: &Bitstring) -> Result<usize> {
    if bits.is_empty() || !bits.bits()[0] {
        return Err(Error::MalformedCodeword(format!(
            "space codeword {bits} must start with 1"
        )));
    }
    let mut seen_zero = false;
    for b in bits.iter() {
        if !b {
            seen_zero = true;
        } else if seen_zero {
            return Err(Error::MalformedCodeword(format!(
                "space codeword {bits} has a 1 right of a 0"
            )));
        }
    }
    Ok(bits.zeros() + 1)
}

/// Quotient/remainder split of `n` for Golomb group size `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GolombParams {
    pub m: u64,
    pub q: u64,
    pub r: u64,
}

/// Computes `q = floor(n/m)` and `r = n - q*m`.
pub fn golomb_params(n: u64, m: u64) -> Result<GolombParams> {
    if m == 0 {
        return Err(Error::Range("golomb group size m must be positive".into()));
    }
    Ok(GolombParams { m, q: n / m, r: n % m })
}

/// Smallest b with 2^b >= m; bit width of the remainder field.
fn ceil_log2(m: u64) -> u32 {
    m.next_power_of_two().trailing_zeros()
}

fn push_binary(out: &mut Bitstring, value: u64, width: u32) {
    for shift in (0..width).rev() {
        out.push(value >> shift & 1 == 1);
    }
}

/// Encodes `n` as a Golomb codeword: the quotient in unary with the
/// given variant, then the remainder in binary.
///
/// For power-of-two `m` the remainder is plain binary in log2(m) bits.
/// Otherwise it is truncated binary with b = ceil(log2(m)): remainders
/// below 2^b - m take b-1 bits, the rest take b bits offset by 2^b - m.
/// For m = 1 the remainder field is empty and the code is pure unary.
pub fn encode_golomb_with(n: u64, m: u64, variant: UnaryVariant) -> Result<Bitstring> {
    let p = golomb_params(n, m)?;
    let mut out = encode_unary(p.q, variant);
    let b = ceil_log2(m);
    if b == 0 {
        return Ok(out);
    }
    let threshold = (1 << b) - m;
    if p.r < threshold {
        push_binary(&mut out, p.r, b - 1);
    } else {
        push_binary(&mut out, p.r + threshold, b);
    }
    Ok(out)
}

/// `encode_golomb_with` in the ones-then-zero quotient convention
/// (quotient q prints as q ones and a terminating zero).
pub fn encode_golomb(n: u64, m: u64) -> Result<Bitstring> {
    encode_golomb_with(n, m, UnaryVariant::OnesThenZero)
}

/// Decodes a whole Golomb codeword; inverse of `encode_golomb_with`.
///
/// Truncated unary prefixes, short remainder fields and trailing
/// symbols are all `MalformedCodeword`.
pub fn decode_golomb_with(bits: &Bitstring, m: u64, variant: UnaryVariant) -> Result<u64> {
    if m == 0 {
        return Err(Error::Range("golomb group size m must be positive".into()));
    }
    let body = match variant {
        UnaryVariant::OnesThenZero => true,
        UnaryVariant::ZerosThenOne => false,
    };
    let symbols = bits.bits();
    let q = symbols.iter().take_while(|&&b| b == body).count();
    if q == symbols.len() {
        return Err(Error::MalformedCodeword(format!(
            "golomb codeword {bits} has an unterminated quotient"
        )));
    }
    let mut pos = q + 1;
    let b = ceil_log2(m);
    let r = if b == 0 {
        0
    } else {
        let threshold = (1 << b) - m;
        let mut head = 0u64;
        for _ in 0..b - 1 {
            let Some(&bit) = symbols.get(pos) else {
                return Err(Error::MalformedCodeword(format!(
                    "golomb codeword {bits} ends inside its remainder field"
                )));
            };
            head = head << 1 | bit as u64;
            pos += 1;
        }
        if head < threshold {
            head
        } else {
            let Some(&bit) = symbols.get(pos) else {
                return Err(Error::MalformedCodeword(format!(
                    "golomb codeword {bits} ends inside its remainder field"
                )));
            };
            pos += 1;
            (head << 1 | bit as u64) - threshold
        }
    };
    if pos != symbols.len() {
        return Err(Error::MalformedCodeword(format!(
            "golomb codeword {bits} continues past its remainder field"
        )));
    }
    Ok(q as u64 * m + r)
}

/// `decode_golomb_with` in the ones-then-zero quotient convention.
pub fn decode_golomb(bits: &Bitstring, m: u64) -> Result<u64> {
    decode_golomb_with(bits, m, UnaryVariant::OnesThenZero)
}

/// Tolerance for a probability mass summing to one.
pub const DISTRIBUTION_TOLERANCE: f64 = 1e-9;

/// A finite distribution over positive integer values, each carrying a
/// positive integer codeword length.
///
/// Entries are kept sorted by value. Truncations of infinite-support
/// distributions report their residual mass to the caller and are never
/// silently renormalized, so a cutoff must already leave the sum within
/// `DISTRIBUTION_TOLERANCE` of one.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    entries: Vec<(u64, f64, u64)>,
}

impl Distribution {
    /// Builds a distribution from `(value, probability)` pairs and the
    /// matching codeword lengths.
    pub fn new(probs: Vec<(u64, f64)>, lengths: Vec<u64>) -> Result<Self> {
        if probs.len() != lengths.len() {
            return Err(Error::LengthMismatch {
                expected: probs.len(),
                actual: lengths.len(),
            });
        }
        let mut entries: Vec<(u64, f64, u64)> = Vec::with_capacity(probs.len());
        let mut sum = 0.0;
        for ((value, p), len) in probs.into_iter().zip(lengths) {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidDistribution(format!(
                    "p({value}) = {p} outside [0, 1]"
                )));
            }
            if len == 0 {
                return Err(Error::InvalidDistribution(format!(
                    "value {value} has zero code length"
                )));
            }
            sum += p;
            entries.push((value, p, len));
        }
        if (sum - 1.0).abs() > DISTRIBUTION_TOLERANCE {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {sum}, not 1"
            )));
        }
        entries.sort_by_key(|&(value, _, _)| value);
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidDistribution("duplicate value".into()));
        }
        Ok(Self { entries })
    }

    /// The geometric distribution p(i) = 2^(-i) with unary lengths
    /// λ_i = i, truncated at `cutoff`. Returns the distribution and the
    /// residual mass 2^(-cutoff) dropped by the truncation.
    pub fn geometric_halving(cutoff: u32) -> Result<(Self, f64)> {
        let probs = (1..=cutoff)
            .map(|i| (i as u64, (-(i as f64)).exp2()))
            .collect();
        let lengths = (1..=cutoff).map(|i| i as u64).collect();
        let residual = (-(cutoff as f64)).exp2();
        Ok((Self::new(probs, lengths)?, residual))
    }

    pub fn entries(&self) -> impl Iterator<Item = (u64, f64, u64)> + '_ {
        self.entries.iter().copied()
    }
}

/// Code-length statistics of a distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionStats {
    /// Σ p(i)·λ_i.
    pub expected_length: f64,
    /// Σ p(i)·log2(1/p(i)), with 0·log(1/0) taken as 0.
    pub entropy: f64,
    /// True iff probabilities never increase and lengths never decrease
    /// as the value grows: the regime where a unary-style code is apt.
    pub monotone: bool,
}

/// Expected codeword length, entropy, and the monotonicity check.
pub fn distribution_stats(dist: &Distribution) -> DistributionStats {
    let mut expected_length = 0.0;
    let mut entropy = 0.0;
    for (_, p, len) in dist.entries() {
        expected_length += p * len as f64;
        if p > 0.0 {
            entropy += p * (1.0 / p).log2();
        }
    }
    let monotone = dist
        .entries
        .windows(2)
        .all(|w| w[0].1 >= w[1].1 && w[0].2 <= w[1].2);
    DistributionStats { expected_length, entropy, monotone }
}
