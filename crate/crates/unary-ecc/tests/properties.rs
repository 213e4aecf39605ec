//! Property tests and exhaustive structural checks that go beyond the
//! per-module unit tests: randomized round trips, prefix-freeness,
//! policy invariance over whole hypercubes, and distribution laws.

use std::collections::BTreeSet;

use proptest::prelude::*;

use unary_ecc::bits::Bitstring;
use unary_ecc::capacity::{
    capacity_curve, double_correction_capacity, monte_carlo_estimate,
    single_correction_probability,
};
use unary_ecc::cc4;
use unary_ecc::channel::{enumerate_patterns, Bsc, ChannelParams, ErrorPattern};
use unary_ecc::codec::{
    decode_golomb_with, decode_space, decode_thermometer_strict, decode_unary,
    distribution_stats, encode_golomb, encode_golomb_with, encode_space, encode_thermometer,
    encode_unary, Distribution, UnaryVariant,
};
use unary_ecc::decoder::{
    correction_census, decode, nearest_set, Codebook, DecodeOutcome, TiePolicy,
    COMPLETE_POLICIES,
};

fn word_from_mask(mask: u64, n: usize) -> Bitstring {
    (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect()
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k.min(n - k.min(n))).fold(1u128, |acc, i| {
        acc * (n - i) as u128 / (i + 1) as u128
    })
}

proptest! {
    #[test]
    fn unary_round_trips(v in 0u64..50_000, ones_first in any::<bool>()) {
        let variant = if ones_first {
            UnaryVariant::OnesThenZero
        } else {
            UnaryVariant::ZerosThenOne
        };
        prop_assert_eq!(decode_unary(&encode_unary(v, variant), variant), Ok(v));
    }

    #[test]
    fn golomb_round_trips(n in 0u64..100_000, m in 1u64..=64, ones_first in any::<bool>()) {
        let variant = if ones_first {
            UnaryVariant::OnesThenZero
        } else {
            UnaryVariant::ZerosThenOne
        };
        let word = encode_golomb_with(n, m, variant).unwrap();
        prop_assert_eq!(decode_golomb_with(&word, m, variant), Ok(n));
    }

    #[test]
    fn thermometer_round_trips_and_nests(
        (n, a, b) in (1usize..=64).prop_flat_map(|n| (Just(n), 0..=n, 0..=n)),
    ) {
        let word_a = encode_thermometer(a, n).unwrap();
        let word_b = encode_thermometer(b, n).unwrap();
        prop_assert_eq!(decode_thermometer_strict(&word_a), Ok(a));
        let (lo, hi) = if a <= b { (&word_a, &word_b) } else { (&word_b, &word_a) };
        let nested = lo
            .iter()
            .zip(hi.iter())
            .all(|(low_bit, high_bit)| !low_bit || high_bit);
        prop_assert!(nested, "ones of the smaller value must nest in the larger");
    }

    #[test]
    fn space_round_trips(
        (slots, v) in (1usize..=64).prop_flat_map(|s| (Just(s), 1..=s)),
    ) {
        let word = encode_space(v, slots).unwrap();
        prop_assert_eq!(word.len(), slots);
        prop_assert_eq!(decode_space(&word), Ok(v));
    }

    #[test]
    fn golomb_length_is_quotient_plus_log_group(
        n in 0u64..50_000,
        log_m in 0u32..=6,
    ) {
        let m = 1u64 << log_m;
        let word = encode_golomb(n, m).unwrap();
        prop_assert_eq!(word.len() as u64, n / m + 1 + log_m as u64);
    }

    #[test]
    fn error_patterns_are_involutions(
        bits in prop::collection::vec(any::<bool>(), 1..=32),
        mask in any::<u32>(),
    ) {
        let word = Bitstring::from_bits(bits);
        let positions: Vec<usize> = (0..word.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        let pattern = ErrorPattern::new(positions).unwrap();
        let once = pattern.apply(&word).unwrap();
        prop_assert_eq!(pattern.apply(&once).unwrap(), word);
    }

    #[test]
    fn degenerate_channels_are_identity_and_complement(
        bits in prop::collection::vec(any::<bool>(), 1..=64),
        seed in any::<u64>(),
    ) {
        let word = Bitstring::from_bits(bits);
        let mut quiet = Bsc::new(ChannelParams::new(0.0, seed).unwrap());
        prop_assert_eq!(quiet.transmit(&word), word.clone());
        let mut loud = Bsc::new(ChannelParams::new(1.0, seed).unwrap());
        prop_assert_eq!(loud.transmit(&word), word.complement());
    }

    #[test]
    fn expected_length_dominates_entropy_under_kraft(
        lengths in prop::collection::vec(3u64..=14, 1..=8),
        weights in prop::collection::vec(1u64..=1000, 8),
    ) {
        // Kraft's inequality, checked exactly in integers scaled by 2^14.
        let kraft: u64 = lengths.iter().map(|&l| 1u64 << (14 - l)).sum();
        prop_assume!(kraft <= 1 << 14);
        let total: u64 = weights.iter().take(lengths.len()).sum();
        let probs: Vec<(u64, f64)> = (1..)
            .zip(&weights)
            .take(lengths.len())
            .map(|(value, &w)| (value, w as f64 / total as f64))
            .collect();
        let dist = Distribution::new(probs, lengths).unwrap();
        let stats = distribution_stats(&dist);
        prop_assert!(
            stats.expected_length >= stats.entropy - 1e-9,
            "E = {} < H = {}",
            stats.expected_length,
            stats.entropy
        );
    }

    #[test]
    fn cc4_recalls_distinct_training_sets_exactly_at_radius_zero(
        n in 1usize..=8,
        masks in prop::collection::btree_set(0u32..256, 1..=8),
        label_bits in any::<u8>(),
    ) {
        let patterns: BTreeSet<u32> = masks.iter().map(|m| m & ((1 << n) - 1)).collect();
        let samples: Vec<(Bitstring, bool)> = patterns
            .iter()
            .enumerate()
            .map(|(i, &m)| (word_from_mask(m as u64, n), label_bits >> (i % 8) & 1 == 1))
            .collect();
        let net = cc4::train(&samples, 0).unwrap();
        for (pattern, label) in &samples {
            prop_assert_eq!(net.predict(pattern).unwrap(), *label);
        }
    }
}

#[test]
fn pattern_counts_match_binomial_coefficients() {
    for length in 1..=16u64 {
        for t in 0..=length {
            let count = enumerate_patterns(length as usize, t as usize)
                .unwrap()
                .len();
            assert_eq!(count as u128, binomial(length, t), "L={length} t={t}");
        }
    }
}

#[test]
fn empirical_flip_rate_within_four_standard_deviations() {
    let p = 0.3;
    let bits = 1_000_000usize;
    let word = Bitstring::repeat(false, bits);
    let mut channel = Bsc::new(ChannelParams::new(p, 5).unwrap());
    let rate = channel.transmit(&word).ones() as f64 / bits as f64;
    let sd = (p * (1.0 - p) / bits as f64).sqrt();
    assert!(
        (rate - p).abs() < 4.0 * sd,
        "rate {rate} outside 4 standard deviations of {p}"
    );
}

#[test]
fn golomb_codewords_are_prefix_free() {
    // Sorting makes any prefix adjacent to a word it prefixes, so
    // checking neighbors covers all pairs.
    for m in [1, 2, 4, 8, 16, 5, 7] {
        let mut words: Vec<String> = (0..=1000)
            .map(|n| encode_golomb(n, m).unwrap().to_string())
            .collect();
        words.sort();
        for pair in words.windows(2) {
            assert!(
                !pair[1].starts_with(&pair[0]),
                "m={m}: {} is a prefix of {}",
                pair[0],
                pair[1]
            );
        }
    }
}

/// Complete policies only move ties between codewords; they never
/// change how many words get corrected. The census total must equal
/// the size of the distance-t shell around the code, computed here by
/// raw distance enumeration over the whole hypercube.
#[test]
fn census_totals_are_policy_invariant_shell_sizes() {
    let shell_count = |cb: &Codebook, t: usize| -> usize {
        let n = cb.n();
        (0u64..1 << n)
            .filter(|&mask| {
                let word = word_from_mask(mask, n);
                let d_min = cb
                    .codewords()
                    .iter()
                    .map(|c| word.hamming_distance(c))
                    .min()
                    .unwrap();
                d_min == t
            })
            .count()
    };
    for n in 1..=11 {
        let cb = Codebook::new(n).unwrap();
        for t in 0..=n {
            let shell = shell_count(&cb, t);
            for policy in COMPLETE_POLICIES {
                let census = correction_census(n, t, policy).unwrap();
                assert_eq!(census.total, shell, "n={n} t={t} policy={policy}");
            }
        }
    }
    // Larger lengths, low weights only: the shells above weight 3 are
    // empty or tiny and the full sweep just burns time.
    for n in 12..=14 {
        let cb = Codebook::new(n).unwrap();
        for t in 1..=3 {
            let shell = shell_count(&cb, t);
            for policy in COMPLETE_POLICIES {
                let census = correction_census(n, t, policy).unwrap();
                assert_eq!(census.total, shell, "n={n} t={t} policy={policy}");
            }
        }
    }
}

/// Single-error correction counts per codeword under the parity tie
/// rule. For odd n the two extremes correct n-1 each and every middle
/// corrects n-3. Even n cannot realize that shape (the even-parity tie
/// chain is one tie short), so the top two values keep n-2 each.
#[test]
fn parity_census_per_codeword_structure() {
    for n in (3..=13usize).step_by(2) {
        let counts = correction_census(n, 1, TiePolicy::PaperParity)
            .unwrap()
            .counts();
        let mut expected = vec![n - 1];
        expected.extend(std::iter::repeat_n(n - 3, n - 1));
        expected.push(n - 1);
        assert_eq!(counts, expected, "n={n}");
    }
    assert_eq!(
        correction_census(2, 1, TiePolicy::PaperParity).unwrap().counts(),
        [1, 0, 0]
    );
    for n in (4..=14usize).step_by(2) {
        let counts = correction_census(n, 1, TiePolicy::PaperParity)
            .unwrap()
            .counts();
        let mut expected = vec![n - 1];
        expected.extend(std::iter::repeat_n(n - 3, n - 2));
        expected.extend([n - 2, n - 2]);
        assert_eq!(counts, expected, "n={n}");
    }
}

#[test]
fn decode_always_picks_from_the_nearest_set() {
    let policies = [
        TiePolicy::RejectTies,
        TiePolicy::LowestValue,
        TiePolicy::HighestValue,
        TiePolicy::PaperParity,
    ];
    for n in 1..=10 {
        let cb = Codebook::new(n).unwrap();
        for mask in 0u64..1 << n {
            let word = word_from_mask(mask, n);
            let (d_min, values) = nearest_set(&word, &cb).unwrap();
            for policy in policies {
                match decode(&word, &cb, policy).unwrap() {
                    DecodeOutcome::Decoded { value, distance, ambiguous } => {
                        assert!(values.contains(&value));
                        assert_eq!(distance, d_min);
                        assert_eq!(ambiguous, values.len() > 1);
                    }
                    DecodeOutcome::Rejected { distance } => {
                        assert_eq!(policy, TiePolicy::RejectTies);
                        assert!(values.len() > 1);
                        assert_eq!(distance, d_min);
                    }
                }
            }
        }
    }
}

#[test]
fn boundary_flips_land_on_neighboring_codewords() {
    for n in 1..=12usize {
        let cb = Codebook::new(n).unwrap();
        for v in 0..=n {
            let codeword = &cb.codewords()[v];
            if v >= 1 {
                // Clearing the leftmost 1 yields the codeword below.
                let mut word = codeword.clone();
                word.toggle(n - v);
                let outcome = decode(&word, &cb, TiePolicy::PaperParity).unwrap();
                assert_eq!(
                    outcome,
                    DecodeOutcome::Decoded { value: v - 1, distance: 0, ambiguous: false }
                );
            }
            if v < n {
                // Setting the rightmost 0 yields the codeword above.
                let mut word = codeword.clone();
                word.toggle(n - v - 1);
                let outcome = decode(&word, &cb, TiePolicy::PaperParity).unwrap();
                assert_eq!(
                    outcome,
                    DecodeOutcome::Decoded { value: v + 1, distance: 0, ambiguous: false }
                );
            }
        }
    }
}

#[test]
fn closed_form_coefficient_equals_census_total() {
    let p = 0.37;
    for n in 1..=14usize {
        let census = correction_census(n, 1, TiePolicy::PaperParity).unwrap();
        let coefficient =
            single_correction_probability(n, p).unwrap() / (p * (1.0 - p).powi(n as i32 - 1));
        assert!(
            (coefficient - census.total as f64).abs() < 1e-6,
            "n={n}: coefficient {coefficient} vs census {}",
            census.total
        );
    }
}

#[test]
fn double_capacity_matches_the_published_n5_form() {
    for k in 0..=1000u32 {
        let p = (k as f64 * 1e-3).min(1.0);
        let lhs = double_correction_capacity(5, p, 10).unwrap();
        let rhs = 10.0 / 6.0 * p * p * (1.0 - p).powi(3);
        assert!((lhs - rhs).abs() < 1e-12, "p={p}");
    }
}

#[test]
fn curve_maximum_tracks_one_over_n() {
    let grid: Vec<f64> = (0..=100).map(|k| k as f64 / 100.0).collect();
    for n in 2..=12usize {
        let points = capacity_curve(n, &grid, None).unwrap();
        let best = points
            .iter()
            .max_by(|a, b| a.single_correction.total_cmp(&b.single_correction))
            .unwrap();
        assert!(
            (best.p - 1.0 / n as f64).abs() <= 0.005 + 1e-12,
            "n={n}: curve max at {}",
            best.p
        );
    }
}

#[test]
fn monte_carlo_standard_error_shrinks_with_trials() {
    let small = monte_carlo_estimate(5, 0.2, 100_000, 1, TiePolicy::PaperParity).unwrap();
    let large = monte_carlo_estimate(5, 0.2, 200_000, 1, TiePolicy::PaperParity).unwrap();
    let ratio = small.standard_error / large.standard_error;
    assert!(ratio >= 1.3, "doubling trials only improved SE by {ratio}");
}
