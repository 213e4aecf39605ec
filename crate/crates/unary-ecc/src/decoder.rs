//! Minimum-distance decoding over the fixed-length thermometer code,
//! with a configurable tie rule, plus the exhaustive correction census:
//! for each codeword, which weight-t corruptions decode back to it.
//!
//! The census is the brute-force oracle for the closed-form capacity
//! expressions. Its total is policy-independent for any complete
//! policy: each word at distance exactly t from the code is credited to
//! exactly one codeword, so the total always equals the size of that
//! distance-t shell, however ties are assigned.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::Bitstring;
use crate::channel::enumerate_patterns;
use crate::codec::encode_thermometer;
use crate::error::{Error, Result};

/// Largest n for which the exhaustive census is allowed to run.
pub const CENSUS_MAX_N: usize = 20;

/// The n+1 thermometer codewords of length n, in value order.
///
/// Adjacent codewords differ in exactly one bit, so the code has
/// minimum distance 1 and correction is only ever partial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    n: usize,
    codewords: Vec<Bitstring>,
}

impl Codebook {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Range("codebook length n must be positive".into()));
        }
        let codewords = (0..=n)
            .map(|v| encode_thermometer(v, n))
            .collect::<Result<_>>()?;
        Ok(Self { n, codewords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Codeword for value v; index equals value.
    pub fn codewords(&self) -> &[Bitstring] {
        &self.codewords
    }
}

/// Rule for choosing among several equidistant codewords.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TiePolicy {
    /// Refuse to decode on any tie.
    RejectTies,
    /// Smallest tied value wins.
    LowestValue,
    /// Largest tied value wins.
    HighestValue,
    /// For a tie between exactly {k, k+2}: k when k is even, k+2 when k
    /// is odd. Any other tie shape falls back to the lowest value.
    PaperParity,
}

/// Every policy that always produces a value.
pub const COMPLETE_POLICIES: [TiePolicy; 3] = [
    TiePolicy::LowestValue,
    TiePolicy::HighestValue,
    TiePolicy::PaperParity,
];

impl fmt::Display for TiePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TiePolicy::RejectTies => "reject-ties",
            TiePolicy::LowestValue => "lowest-value",
            TiePolicy::HighestValue => "highest-value",
            TiePolicy::PaperParity => "paper-parity",
        })
    }
}

/// Result of decoding one received word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeOutcome {
    Decoded {
        value: usize,
        /// Hamming distance from the received word to the chosen codeword,
        /// minimal over the codebook.
        distance: usize,
        /// True when the nearest set had two or more members.
        ambiguous: bool,
    },
    Rejected {
        distance: usize,
    },
}

/// Minimum distance from `w` to the code and every value achieving it,
/// ascending.
pub fn nearest_set(w: &Bitstring, cb: &Codebook) -> Result<(usize, Vec<usize>)> {
    if w.len() != cb.n {
        return Err(Error::LengthMismatch { expected: cb.n, actual: w.len() });
    }
    let mut d_min = usize::MAX;
    let mut values = Vec::new();
    for (v, c) in cb.codewords.iter().enumerate() {
        let d = w.hamming_distance(c);
        if d < d_min {
            d_min = d;
            values.clear();
        }
        if d == d_min {
            values.push(v);
        }
    }
    Ok((d_min, values))
}

/// Resolves a tie over the ascending nearest set; None rejects.
fn resolve_tie(policy: TiePolicy, values: &[usize]) -> Option<usize> {
    match policy {
        TiePolicy::RejectTies => None,
        TiePolicy::LowestValue => Some(values[0]),
        TiePolicy::HighestValue => Some(*values.last().unwrap()),
        TiePolicy::PaperParity => {
            if values.len() == 2 && values[1] == values[0] + 2 {
                Some(if values[0].is_multiple_of(2) { values[0] } else { values[1] })
            } else {
                Some(values[0])
            }
        }
    }
}

/// Decodes `w` to its nearest codeword, applying `policy` on ties.
pub fn decode(w: &Bitstring, cb: &Codebook, policy: TiePolicy) -> Result<DecodeOutcome> {
    let (distance, values) = nearest_set(w, cb)?;
    if values.len() == 1 {
        return Ok(DecodeOutcome::Decoded { value: values[0], distance, ambiguous: false });
    }
    Ok(match resolve_tie(policy, &values) {
        Some(value) => DecodeOutcome::Decoded { value, distance, ambiguous: true },
        None => DecodeOutcome::Rejected { distance },
    })
}

/// Weight-t corruptions of codeword `v` that decode back to `v`, in
/// pattern-enumeration order.
fn corrected_words(
    cb: &Codebook,
    v: usize,
    t: usize,
    policy: TiePolicy,
) -> Result<Vec<Bitstring>> {
    if v > cb.n {
        return Err(Error::Range(format!(
            "value {v} outside codebook range [0, {}]",
            cb.n
        )));
    }
    if t > cb.n {
        return Err(Error::Range(format!(
            "error weight {t} exceeds word length {}",
            cb.n
        )));
    }
    let codeword = &cb.codewords[v];
    let mut corrected = Vec::new();
    for pattern in enumerate_patterns(cb.n, t)? {
        let received = pattern.apply(codeword)?;
        if matches!(
            decode(&received, cb, policy)?,
            DecodeOutcome::Decoded { value, .. } if value == v
        ) {
            corrected.push(received);
        }
    }
    Ok(corrected)
}

/// Received words that decode back to value `v` after a weight-t error.
pub fn correctable_set(
    v: usize,
    t: usize,
    cb: &Codebook,
    policy: TiePolicy,
) -> Result<BTreeSet<Bitstring>> {
    Ok(corrected_words(cb, v, t, policy)?.into_iter().collect())
}

/// Exhaustive correction counts for every codeword at error weight t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionCensus {
    pub n: usize,
    pub t: usize,
    pub policy: TiePolicy,
    /// (value, corrected pattern count), in value order.
    pub per_codeword: Vec<(usize, usize)>,
    pub total: usize,
}

impl CorrectionCensus {
    pub fn counts(&self) -> Vec<usize> {
        self.per_codeword.iter().map(|&(_, c)| c).collect()
    }
}

fn check_feasible(n: usize) -> Result<()> {
    if n > CENSUS_MAX_N {
        return Err(Error::Infeasible { n, bound: CENSUS_MAX_N });
    }
    Ok(())
}

/// Counts, for each codeword, the weight-t error patterns the decoder
/// corrects. Exhaustive over all (n+1)·C(n,t) transmission events.
pub fn correction_census(n: usize, t: usize, policy: TiePolicy) -> Result<CorrectionCensus> {
    check_feasible(n)?;
    let cb = Codebook::new(n)?;
    if t > n {
        return Err(Error::Range(format!(
            "error weight {t} exceeds word length {n}"
        )));
    }
    let mut per_codeword = Vec::with_capacity(n + 1);
    let mut total = 0;
    for v in 0..=n {
        let count = corrected_words(&cb, v, t, policy)?.len();
        per_codeword.push((v, count));
        total += count;
    }
    Ok(CorrectionCensus { n, t, policy, per_codeword, total })
}

fn join_words(words: &[Bitstring]) -> String {
    words
        .iter()
        .map(Bitstring::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders the census as a text table: codeword, every weight-t
/// corruption, the corrected subset, and its count, one row per value,
/// with a grand-total footer.
pub fn census_table(n: usize, t: usize, policy: TiePolicy) -> Result<String> {
    check_feasible(n)?;
    let cb = Codebook::new(n)?;
    if t > n {
        return Err(Error::Range(format!(
            "error weight {t} exceeds word length {n}"
        )));
    }
    let patterns = enumerate_patterns(n, t)?;
    let mut rows = Vec::with_capacity(n + 1);
    let mut total = 0;
    for (v, codeword) in cb.codewords().iter().enumerate() {
        let corruptions: Vec<Bitstring> = patterns
            .iter()
            .map(|pattern| pattern.apply(codeword))
            .collect::<Result<_>>()?;
        let corrected = corrected_words(&cb, v, t, policy)?;
        total += corrected.len();
        rows.push([
            codeword.to_string(),
            join_words(&corruptions),
            join_words(&corrected),
            corrected.len().to_string(),
        ]);
    }
    let header = [
        "codeword".to_string(),
        format!("corruptions (t={t})"),
        "corrected".to_string(),
        "count".to_string(),
    ];
    let mut widths = [0usize; 4];
    for row in std::iter::once(&header).chain(&rows) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let render = |row: &[String; 4]| {
        let cells: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        cells.join(" | ").trim_end().to_string()
    };
    let mut out = String::new();
    out.push_str(&render(&header));
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(rule.join("-|-").trim_end());
    out.push('\n');
    for row in &rows {
        out.push_str(&render(row));
        out.push('\n');
    }
    let events = (n + 1) * patterns.len();
    out.push_str(&format!(
        "total: {total} of {events} weight-{t} events corrected (policy {policy})\n"
    ));
    Ok(out)
}

/// Renders a census as CSV with columns `value,count,total`; the total
/// column repeats the grand total on every row.
pub fn census_csv(census: &CorrectionCensus) -> String {
    let mut out = String::from("value,count,total\n");
    for &(value, count) in &census.per_codeword {
        out.push_str(&format!("{value},{count},{}\n", census.total));
    }
    out
}
