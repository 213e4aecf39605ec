//! Corner-classification network, fourth variant: a feedforward binary
//! classifier trained instantaneously by direct weight assignment, one
//! hidden unit per training sample.
//!
//! A unit trained on pattern x_j sees net input r + 1 - d on an input
//! at Hamming distance d from x_j, so it fires exactly when d <= r:
//! r is a radius of generalization around each memorized corner of the
//! hypercube. Both layers use a strict > 0 step. An output sum of 0
//! (for instance when no unit fires, or firing units cancel) maps to
//! class 0.

use crate::bits::Bitstring;
use crate::error::{Error, Result};

/// One trained hidden unit.
///
/// `weights[i]` is +1 where the training pattern has a 1 and -1 where
/// it has a 0; `bias_weight` is r - s + 1 for a pattern with s ones.
/// The bias input is fixed at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiddenUnit {
    pub weights: Vec<i64>,
    pub bias_weight: i64,
}

impl HiddenUnit {
    fn train(pattern: &Bitstring, r: usize) -> Self {
        let weights = pattern.iter().map(|b| if b { 1 } else { -1 }).collect();
        let s = pattern.ones();
        Self {
            weights,
            bias_weight: r as i64 - s as i64 + 1,
        }
    }

    /// The pattern this unit memorized, recovered from its weights.
    pub fn training_pattern(&self) -> Bitstring {
        self.weights.iter().map(|&w| w > 0).collect()
    }

    /// Weighted sum of the input plus the bias term; equals
    /// r + 1 - d(x, training pattern).
    pub fn net_input(&self, x: &Bitstring) -> i64 {
        assert_eq!(self.weights.len(), x.len(), "input length mismatch");
        let dot: i64 = self
            .weights
            .iter()
            .zip(x.iter())
            .map(|(&w, b)| if b { w } else { 0 })
            .sum();
        dot + self.bias_weight
    }

    /// Binary step at strict zero: fires iff net input > 0.
    pub fn fires(&self, x: &Bitstring) -> bool {
        self.net_input(x) > 0
    }
}

/// A trained network: hidden layer of memorized corners, output layer
/// of +/-1 label weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cc4Network {
    input_len: usize,
    radius: usize,
    hidden: Vec<HiddenUnit>,
    output_weights: Vec<i64>,
}

/// Builds the network from labeled patterns in one pass; no iteration.
///
/// Duplicate patterns with conflicting labels are kept as written and
/// produce canceling hidden units.
pub fn train(samples: &[(Bitstring, bool)], r: usize) -> Result<Cc4Network> {
    let Some((first, _)) = samples.first() else {
        return Err(Error::EmptyTrainingSet);
    };
    let input_len = first.len();
    if input_len == 0 {
        return Err(Error::Range("training patterns must be non-empty".into()));
    }
    let mut hidden = Vec::with_capacity(samples.len());
    let mut output_weights = Vec::with_capacity(samples.len());
    for (pattern, label) in samples {
        if pattern.len() != input_len {
            return Err(Error::LengthMismatch {
                expected: input_len,
                actual: pattern.len(),
            });
        }
        hidden.push(HiddenUnit::train(pattern, r));
        output_weights.push(if *label { 1 } else { -1 });
    }
    Ok(Cc4Network { input_len, radius: r, hidden, output_weights })
}

impl Cc4Network {
    pub fn input_len(&self) -> usize {
        self.input_len
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn hidden(&self) -> &[HiddenUnit] {
        &self.hidden
    }

    pub fn output_weights(&self) -> &[i64] {
        &self.output_weights
    }

    fn check_len(&self, x: &Bitstring) -> Result<()> {
        if x.len() != self.input_len {
            return Err(Error::LengthMismatch {
                expected: self.input_len,
                actual: x.len(),
            });
        }
        Ok(())
    }

    /// Firing state of each hidden unit on input `x`.
    pub fn hidden_activations(&self, x: &Bitstring) -> Result<Vec<bool>> {
        self.check_len(x)?;
        Ok(self.hidden.iter().map(|unit| unit.fires(x)).collect())
    }

    /// Class of `x`: 1 iff the output weights of the firing units sum
    /// to a strictly positive value.
    pub fn predict(&self, x: &Bitstring) -> Result<bool> {
        self.check_len(x)?;
        let sum: i64 = self
            .hidden
            .iter()
            .zip(&self.output_weights)
            .filter(|(unit, _)| unit.fires(x))
            .map(|(_, &w)| w)
            .sum();
        Ok(sum > 0)
    }
}

/// Parses one training-set line of the form `bitstring,label` with a
/// 0/1 label.
pub fn parse_training_line(line: &str) -> Result<(Bitstring, bool)> {
    let bad = || Error::InvalidTrainingData(format!("expected `bitstring,label`, got {line:?}"));
    let (pattern, label) = line.split_once(',').ok_or_else(bad)?;
    let pattern: Bitstring = pattern
        .trim()
        .parse()
        .map_err(|_| bad())?;
    let label = match label.trim() {
        "0" => false,
        "1" => true,
        _ => return Err(bad()),
    };
    Ok((pattern, label))
}
