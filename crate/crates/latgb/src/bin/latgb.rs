//! Command-line surface: analyze, groebner, decode, verify.
//!
//! Exit codes: 0 success, 1 verification property failure, 2 parse error,
//! 3 inconsistent lattice data, 4 dimension mismatch.

use clap::{Parser, Subcommand, ValueEnum};
use latgb::decode::Rounding;
use latgb::error::Error;
use latgb::profile::LatticeProfile;
use latgb::specfile::{candidates_to_json, table_to_json, DecodeRequest, LatticeSpecFile};
use latgb::table::build_coset_table;
use latgb::verify::{run_suite, VerifyOptions};
use latgb::{build_ecrgb, decode, TermOrder};
use serde_json::json;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "latgb",
    version,
    about = "Label-code toolkit for lattices: exact profiles, coset-leader tables, extended Groebner bases, nearest-point decoding"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Derive and print the exact profile of a lattice spec.
    Analyze {
        /// Lattice spec file (JSON).
        spec: PathBuf,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
    },
    /// Build the coset table and the extended Groebner basis files.
    Groebner {
        spec: PathBuf,
        /// Tie-break variable permutation, 1-based, e.g. "2,1,3,4".
        #[arg(long)]
        order: Option<String>,
        /// Output path for the coset-table JSON.
        #[arg(long)]
        table_out: Option<PathBuf>,
        /// Output path for the binomial text file.
        #[arg(long)]
        binomials_out: Option<PathBuf>,
    },
    /// List the nearest lattice points to a target.
    Decode {
        spec: PathBuf,
        /// Comma-separated target coordinates, e.g. "5.12,6.3,54,63".
        #[arg(long)]
        target: String,
        #[arg(long)]
        order: Option<String>,
        /// Tie rule at half-integer quantization boundaries.
        #[arg(long, value_enum, default_value_t = RoundingArg::HalfUp)]
        rounding: RoundingArg,
        /// Keep at most this many candidates after the l2 sort.
        #[arg(long)]
        max_candidates: Option<usize>,
    },
    /// Run the brute-force property suite against a spec.
    Verify {
        spec: PathBuf,
        #[arg(long)]
        order: Option<String>,
        /// Bound on the group order for the exhaustive oracles.
        #[arg(long, default_value_t = 10_000)]
        max_group_size: u128,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RoundingArg {
    HalfUp,
    HalfEven,
}

impl From<RoundingArg> for Rounding {
    fn from(r: RoundingArg) -> Self {
        match r {
            RoundingArg::HalfUp => Rounding::HalfUp,
            RoundingArg::HalfEven => Rounding::HalfEven,
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::SpecFile(_) | Error::BadPermutation(_) => 2,
        Error::DimensionMismatch { .. } | Error::NonFiniteTarget(_) => 4,
        _ => 3,
    }
}

fn parse_order(raw: &Option<String>, rank: usize) -> Result<TermOrder, Error> {
    match raw {
        None => Ok(TermOrder::deglex(rank)),
        Some(text) => {
            let mut perm = Vec::new();
            for part in text.split(',') {
                let v: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::BadPermutation(text.clone()))?;
                if v == 0 {
                    return Err(Error::BadPermutation(text.clone()));
                }
                perm.push(v - 1);
            }
            if perm.len() != rank {
                return Err(Error::BadPermutation(format!(
                    "{text} (expected {rank} entries)"
                )));
            }
            TermOrder::with_permutation(perm)
        }
    }
}

fn parse_target(raw: &str) -> Result<Vec<f64>, Error> {
    raw.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| Error::SpecFile(format!("bad target coordinate {part:?}")))
        })
        .collect()
}

fn rationals(v: &[latgb::rational::Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn analysis_text(profile: &LatticeProfile, as_json: bool) -> String {
    let r = profile.rank();
    let p_sq: Vec<_> = (0..r).map(|i| profile.p_sq(i)).collect();
    let c_sq: Vec<_> = (0..r).map(|i| profile.c_sq(i)).collect();
    if as_json {
        let out = json!({
            "rank": r,
            "g": profile.orders(),
            "p": rationals(profile.p()),
            "c": rationals(profile.c()),
            "normsq": rationals(profile.normsq()),
            "P_sq": rationals(&p_sq),
            "C_sq": rationals(&c_sq),
            "H": profile.h().iter().map(|row| rationals(row)).collect::<Vec<_>>(),
            "labels": profile.labels().iter().map(|l| l.0.clone()).collect::<Vec<_>>(),
        });
        let mut text = serde_json::to_string_pretty(&out).expect("serializable");
        text.push('\n');
        return text;
    }
    let mut out = String::new();
    let _ = writeln!(out, "rank: {r}");
    let _ = writeln!(out, "group orders g: {:?}", profile.orders());
    let _ = writeln!(out, "projection factors p: [{}]", rationals(profile.p()).join(", "));
    let _ = writeln!(out, "cross-section factors c: [{}]", rationals(profile.c()).join(", "));
    let _ = writeln!(out, "axis norms squared: [{}]", rationals(profile.normsq()).join(", "));
    let _ = writeln!(out, "projection det squared P_sq: [{}]", rationals(&p_sq).join(", "));
    let _ = writeln!(out, "cross-section det squared C_sq: [{}]", rationals(&c_sq).join(", "));
    let _ = writeln!(out, "parity check H:");
    for row in profile.h() {
        let _ = writeln!(out, "  [{}]", rationals(row).join(", "));
    }
    if !profile.labels().is_empty() {
        let _ = writeln!(out, "label generators:");
        for label in profile.labels() {
            let _ = writeln!(out, "  {:?}", label.0);
        }
    }
    out
}

fn default_out(spec: &Path, suffix: &str) -> PathBuf {
    let stem = spec
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "lattice".into());
    PathBuf::from(format!("{stem}.{suffix}"))
}

fn run(cli: Cli) -> Result<(String, u8), Error> {
    match cli.cmd {
        Cmd::Analyze { spec, json } => {
            let profile = LatticeSpecFile::load(&spec)?.to_profile()?;
            Ok((analysis_text(&profile, json), 0))
        }
        Cmd::Groebner {
            spec,
            order,
            table_out,
            binomials_out,
        } => {
            let profile = LatticeSpecFile::load(&spec)?.to_profile()?;
            let ord = parse_order(&order, profile.rank())?;
            let table = build_coset_table(&profile, ord);
            let basis = build_ecrgb(&table);
            let table_path = table_out.unwrap_or_else(|| default_out(&spec, "table.json"));
            let binomial_path =
                binomials_out.unwrap_or_else(|| default_out(&spec, "ecrgb.txt"));
            std::fs::write(&table_path, table_to_json(&table))
                .map_err(|e| Error::SpecFile(format!("{}: {e}", table_path.display())))?;
            std::fs::write(&binomial_path, basis.to_text())
                .map_err(|e| Error::SpecFile(format!("{}: {e}", binomial_path.display())))?;
            let mut out = String::new();
            let _ = writeln!(out, "cosets: {}", table.record_count());
            let _ = writeln!(out, "leaders: {}", table.leader_count());
            let _ = writeln!(out, "binomials: {}", basis.len());
            let _ = writeln!(out, "wrote {}", table_path.display());
            let _ = writeln!(out, "wrote {}", binomial_path.display());
            Ok((out, 0))
        }
        Cmd::Decode {
            spec,
            target,
            order,
            rounding,
            max_candidates,
        } => {
            let profile = LatticeSpecFile::load(&spec)?.to_profile()?;
            let ord = parse_order(&order, profile.rank())?;
            let request = DecodeRequest {
                target: parse_target(&target)?,
                rounding: rounding.into(),
                max_candidates,
            };
            let table = build_coset_table(&profile, ord);
            let candidates = decode(
                &request.target,
                &profile,
                &table,
                request.rounding,
                request.max_candidates,
            )?;
            Ok((candidates_to_json(&candidates) + "\n", 0))
        }
        Cmd::Verify {
            spec,
            order,
            max_group_size,
        } => {
            let profile = LatticeSpecFile::load(&spec)?.to_profile()?;
            let ord = parse_order(&order, profile.rank())?;
            let opts = VerifyOptions {
                max_group_size,
                ..Default::default()
            };
            let reports = run_suite(&profile, ord, &opts)?;
            let mut out = String::new();
            let mut failed = false;
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                if r.detail.is_empty() {
                    let _ = writeln!(out, "{status} {}", r.name);
                } else {
                    let _ = writeln!(out, "{status} {} ({})", r.name, r.detail);
                }
                failed |= !r.passed;
            }
            Ok((out, u8::from(failed)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            // Tolerate a closed pipe on the reading side.
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
