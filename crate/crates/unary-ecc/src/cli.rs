//! Command-line front end: codecs, census tables, capacity curves,
//! Monte Carlo simulation, and a CC4 demo.
//!
//! Grammar is `unary-ecc <subcommand> [flags]`. Defaults reproduce the
//! published tables with zero flags. Identical argv (seed included)
//! produces byte-identical standard output. Text tables always go to
//! standard output; `--out` redirects CSV to a file. Exit statuses:
//! 0 success, 2 usage error, 1 runtime error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};

use crate::bits::Bitstring;
use crate::capacity::{capacity_curve, curve_csv, monte_carlo_estimate_streams};
use crate::cc4;
use crate::codec::{
    decode_golomb_with, decode_space, decode_thermometer_strict, decode_unary,
    encode_golomb_with, encode_space, encode_thermometer, encode_unary, UnaryVariant,
};
use crate::decoder::{census_csv, census_table, correction_census, TiePolicy, CENSUS_MAX_N};
use crate::error::Result;

/// Which codec an encode/decode invocation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeFamily {
    Unary,
    Thermometer,
    Space,
}

fn parse_code(s: &str) -> std::result::Result<CodeFamily, String> {
    match s {
        "unary" => Ok(CodeFamily::Unary),
        "thermometer" => Ok(CodeFamily::Thermometer),
        "space" => Ok(CodeFamily::Space),
        _ => Err(format!(
            "unknown code {s:?} (expected unary, thermometer or space)"
        )),
    }
}

fn parse_variant(s: &str) -> std::result::Result<UnaryVariant, String> {
    match s {
        "ones-then-zero" => Ok(UnaryVariant::OnesThenZero),
        "zeros-then-one" => Ok(UnaryVariant::ZerosThenOne),
        _ => Err(format!(
            "unknown variant {s:?} (expected ones-then-zero or zeros-then-one)"
        )),
    }
}

fn parse_policy(s: &str) -> std::result::Result<TiePolicy, String> {
    match s {
        "reject-ties" => Ok(TiePolicy::RejectTies),
        "lowest-value" => Ok(TiePolicy::LowestValue),
        "highest-value" => Ok(TiePolicy::HighestValue),
        "paper-parity" => Ok(TiePolicy::PaperParity),
        _ => Err(format!(
            "unknown policy {s:?} (expected reject-ties, lowest-value, \
             highest-value or paper-parity)"
        )),
    }
}

fn parse_bitstring(s: &str) -> std::result::Result<Bitstring, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Parser)]
#[command(
    name = "unary-ecc",
    version,
    about = "Unary-family codecs, minimum-distance correction censuses, \
             capacity curves, and a CC4 classifier demo"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A parsed and validated invocation.
#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Encode a value with the unary, thermometer or space code.
    Encode {
        /// Code family: unary, thermometer or space.
        #[arg(long, default_value = "unary", value_parser = parse_code)]
        code: CodeFamily,
        /// Value to encode.
        #[arg(long)]
        value: u64,
        /// Unary terminator convention (unary code only).
        #[arg(long, default_value = "ones-then-zero", value_parser = parse_variant)]
        variant: UnaryVariant,
        /// Thermometer code length (thermometer only).
        #[arg(long)]
        n: Option<usize>,
        /// Slot count (space code only).
        #[arg(long)]
        slots: Option<usize>,
    },
    /// Decode a codeword of the unary, thermometer or space code.
    Decode {
        /// Code family: unary, thermometer or space.
        #[arg(long, default_value = "unary", value_parser = parse_code)]
        code: CodeFamily,
        /// Codeword as a 0/1 string.
        #[arg(long, value_parser = parse_bitstring)]
        bits: Bitstring,
        /// Unary terminator convention (unary code only).
        #[arg(long, default_value = "ones-then-zero", value_parser = parse_variant)]
        variant: UnaryVariant,
    },
    /// Encode or decode Golomb codewords.
    Golomb {
        #[command(subcommand)]
        action: GolombAction,
    },
    /// Exhaustive correction census of the length-n thermometer code.
    Census {
        /// Code length.
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Error-pattern weight.
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Tie policy: reject-ties, lowest-value, highest-value or
        /// paper-parity.
        #[arg(long, default_value = "paper-parity", value_parser = parse_policy)]
        policy: TiePolicy,
        /// Write the census CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Correction probability and capacity curves over p, as CSV.
    Curve {
        /// Code length.
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Grid step over p in (0, 1].
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo single-error correction rate over the noisy channel.
    Simulate {
        /// Code length.
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Bit error probability.
        #[arg(long, default_value_t = 0.2)]
        p: f64,
        /// Number of transmissions.
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        /// Generator seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Independent generator streams (results are deterministic per
        /// seed and stream count).
        #[arg(long, default_value_t = 1)]
        streams: u64,
        /// Tie policy for the decoder.
        #[arg(long, default_value = "paper-parity", value_parser = parse_policy)]
        policy: TiePolicy,
    },
    /// Train a CC4 classifier from a file and classify inputs.
    Cc4Demo {
        /// Training-set file: one `bitstring,label` line per sample;
        /// blank lines and lines starting with # are skipped.
        #[arg(long)]
        train: PathBuf,
        /// Radius of generalization.
        #[arg(long, default_value_t = 0)]
        r: usize,
        /// Input to classify; repeat the flag for several.
        #[arg(long, value_parser = parse_bitstring)]
        classify: Vec<Bitstring>,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum GolombAction {
    /// Encode a value.
    Encode {
        /// Value to encode.
        #[arg(long)]
        value: u64,
        /// Group size.
        #[arg(long)]
        m: u64,
        /// Quotient terminator convention.
        #[arg(long, default_value = "ones-then-zero", value_parser = parse_variant)]
        variant: UnaryVariant,
    },
    /// Decode a codeword.
    Decode {
        /// Codeword as a 0/1 string.
        #[arg(long, value_parser = parse_bitstring)]
        bits: Bitstring,
        /// Group size.
        #[arg(long)]
        m: u64,
        /// Quotient terminator convention.
        #[arg(long, default_value = "ones-then-zero", value_parser = parse_variant)]
        variant: UnaryVariant,
    },
}

/// Checks module preconditions that clap's per-flag parsers cannot see,
/// so violations surface as usage errors before any computation runs.
fn validate(command: &Command) -> std::result::Result<(), String> {
    match command {
        Command::Encode { code, value, n, slots, .. } => {
            if n.is_some() && *code != CodeFamily::Thermometer {
                return Err("--n only applies to --code thermometer".into());
            }
            if slots.is_some() && *code != CodeFamily::Space {
                return Err("--slots only applies to --code space".into());
            }
            match code {
                CodeFamily::Unary => {}
                CodeFamily::Thermometer => {
                    let n = n.ok_or("--code thermometer requires --n")?;
                    if n < 1 {
                        return Err("--n must be at least 1".into());
                    }
                    if *value > n as u64 {
                        return Err(format!("--value {value} exceeds --n {n}"));
                    }
                }
                CodeFamily::Space => {
                    let slots = slots.ok_or("--code space requires --slots")?;
                    if *value < 1 || *value > slots as u64 {
                        return Err(format!(
                            "--value {value} outside [1, {slots}] for --slots {slots}"
                        ));
                    }
                }
            }
        }
        Command::Decode { .. } => {}
        Command::Golomb { action } => {
            let m = match action {
                GolombAction::Encode { m, .. } | GolombAction::Decode { m, .. } => *m,
            };
            if m < 1 {
                return Err("--m must be at least 1".into());
            }
        }
        Command::Census { n, t, .. } => {
            if *n < 1 {
                return Err("--n must be at least 1".into());
            }
            if *n > CENSUS_MAX_N {
                return Err(format!(
                    "--n {n} exceeds the exhaustive census bound {CENSUS_MAX_N}"
                ));
            }
            if t > n {
                return Err(format!("--t {t} exceeds --n {n}"));
            }
        }
        Command::Curve { n, step, .. } => {
            if *n < 1 {
                return Err("--n must be at least 1".into());
            }
            if !(*step > 0.0 && *step <= 1.0) {
                return Err(format!("--step {step} outside (0, 1]"));
            }
        }
        Command::Simulate { n, p, trials, streams, .. } => {
            if *n < 1 {
                return Err("--n must be at least 1".into());
            }
            if !(0.0..=1.0).contains(p) {
                return Err(format!("--p {p} outside [0, 1]"));
            }
            if *trials < 1 {
                return Err("--trials must be at least 1".into());
            }
            if *streams < 1 {
                return Err("--streams must be at least 1".into());
            }
        }
        Command::Cc4Demo { .. } => {}
    }
    Ok(())
}

/// Parses and validates a full argv (program name first). Errors are
/// clap errors: usage problems exit 2, help and version requests exit 0.
pub fn parse_args<I, T>(argv: I) -> std::result::Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    if let Err(message) = validate(&cli.command) {
        return Err(Cli::command().error(ErrorKind::ValueValidation, message));
    }
    Ok(cli.command)
}

/// The p grid 0, step, 2·step, ..., 1 (the final point is always 1).
fn step_grid(step: f64) -> Vec<f64> {
    let mut grid = Vec::new();
    let mut k = 0u64;
    loop {
        let p = k as f64 * step;
        if p >= 1.0 {
            break;
        }
        grid.push(p);
        k += 1;
    }
    grid.push(1.0);
    grid
}

/// Runs a validated command and returns what belongs on standard output.
pub fn execute(command: &Command) -> Result<String> {
    match command {
        Command::Encode { code, value, variant, n, slots } => {
            let word = match code {
                CodeFamily::Unary => encode_unary(*value, *variant),
                CodeFamily::Thermometer => {
                    encode_thermometer(*value as usize, n.expect("validated"))?
                }
                CodeFamily::Space => encode_space(*value as usize, slots.expect("validated"))?,
            };
            Ok(format!("{word}\n"))
        }
        Command::Decode { code, bits, variant } => {
            let value = match code {
                CodeFamily::Unary => decode_unary(bits, *variant)?,
                CodeFamily::Thermometer => decode_thermometer_strict(bits)? as u64,
                CodeFamily::Space => decode_space(bits)? as u64,
            };
            Ok(format!("{value}\n"))
        }
        Command::Golomb { action } => match action {
            GolombAction::Encode { value, m, variant } => {
                Ok(format!("{}\n", encode_golomb_with(*value, *m, *variant)?))
            }
            GolombAction::Decode { bits, m, variant } => {
                Ok(format!("{}\n", decode_golomb_with(bits, *m, *variant)?))
            }
        },
        Command::Census { n, t, policy, out } => {
            let table = census_table(*n, *t, *policy)?;
            let csv = census_csv(&correction_census(*n, *t, *policy)?);
            match out {
                Some(path) => {
                    std::fs::write(path, csv)?;
                    Ok(table)
                }
                None => Ok(format!("{table}{csv}")),
            }
        }
        Command::Curve { n, step, out } => {
            let double_total = if *n >= 2 && *n <= CENSUS_MAX_N {
                Some(correction_census(*n, 2, TiePolicy::PaperParity)?.total as u64)
            } else {
                None
            };
            let points = capacity_curve(*n, &step_grid(*step), double_total)?;
            let csv = curve_csv(&points);
            match out {
                Some(path) => {
                    std::fs::write(path, csv)?;
                    Ok(String::new())
                }
                None => Ok(csv),
            }
        }
        Command::Simulate { n, p, trials, seed, streams, policy } => {
            let report = monte_carlo_estimate_streams(*n, *p, *trials, *seed, *policy, *streams)?;
            Ok(format!("{report}\n"))
        }
        Command::Cc4Demo { train, r, classify } => {
            let text = std::fs::read_to_string(train)?;
            let samples = text
                .lines()
                .map(str::trim)
                .filter(|line| !line.is_empty() && !line.starts_with('#'))
                .map(cc4::parse_training_line)
                .collect::<Result<Vec<_>>>()?;
            let net = cc4::train(&samples, *r)?;
            let mut out = format!(
                "trained {} hidden units on length-{} patterns (radius {})\n",
                net.hidden().len(),
                net.input_len(),
                net.radius(),
            );
            for input in classify {
                let class = net.predict(input)?;
                out.push_str(&format!("{input} -> {}\n", u8::from(class)));
            }
            Ok(out)
        }
    }
}
