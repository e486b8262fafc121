//! Command-line front end: enumeration, weights, series, moments,
//! characteristic polynomials, continued fractions, counting, and the
//! identity verification harness. Exit codes: 0 success / all identities
//! pass, 1 identity failure, 2 usage or configuration error.

mod config;
mod verify;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use lukas_core::algebra::ring_element_to_json;
use lukas_core::operators::{char_polys, moment, BandedMatrixView, OperatorKind};
use lukas_core::paths::{count, weight_polynomial, Family, FamilySpec};
use lukas_core::series::series_from_family;
use lukas_core::vcf::{cf_term, eval_finite_cf, tail_vector};
use lukas_core::SeriesFamily;

use config::{CommonOpts, ConfigError, RunConfig};

#[derive(Parser)]
#[command(
    name = "lukas",
    about = "Exact arithmetic for weighted lattice paths, banded Hessenberg moments, and vector continued fractions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream the paths of one family, one per line.
    Enumerate {
        #[command(flatten)]
        common: CommonOpts,
        /// Path family: P, D, Dhat, R, S, Shat.
        #[arg(long)]
        family: Option<String>,
        /// Path length.
        #[arg(long)]
        n: Option<u32>,
        /// Terminal index in [0, p].
        #[arg(long)]
        j: Option<u8>,
        /// Vertical shift (D, Dhat, S, Shat only).
        #[arg(long)]
        q: Option<u32>,
    },
    /// Weight polynomial of one family.
    Weight {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        j: Option<u8>,
        #[arg(long)]
        q: Option<u32>,
    },
    /// Generating series of a weight-polynomial sequence.
    Series {
        #[command(flatten)]
        common: CommonOpts,
        /// Series family: W, A, B, R, S, T.
        #[arg(long = "series-family")]
        series_family: Option<String>,
        #[arg(long)]
        j: Option<u8>,
        #[arg(long)]
        q: Option<u32>,
    },
    /// Operator moment <M^n e_j, e_0>.
    Moment {
        #[command(flatten)]
        common: CommonOpts,
        /// Operator: forward, reflected, two-sided.
        #[arg(long)]
        kind: Option<String>,
        /// Row/column shift for the one-sided operators.
        #[arg(long)]
        q: Option<u32>,
        /// Power of the operator.
        #[arg(long)]
        n: Option<u32>,
        /// Basis index in [0, p].
        #[arg(long)]
        j: Option<u8>,
    },
    /// Characteristic polynomials of the leading truncation.
    Charpoly {
        #[command(flatten)]
        common: CommonOpts,
        /// Truncation size.
        #[arg(long)]
        n: Option<u32>,
        /// Also emit the dense truncated matrix.
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Continued-fraction stages and their evaluated value.
    Cf {
        #[command(flatten)]
        common: CommonOpts,
        /// Number of stages.
        #[arg(long)]
        stages: Option<u32>,
        /// Append the matching tail vector (exact value instead of the
        /// rational convergent).
        #[arg(long)]
        with_tail: bool,
    },
    /// Cardinality of one family.
    Count {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        family: Option<String>,
        /// Path length (alternative to --m).
        #[arg(long)]
        n: Option<u32>,
        /// Downstep count for the restricted families; n = m(p+1)+j.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        j: Option<u8>,
        #[arg(long)]
        q: Option<u32>,
    },
    /// Run identity verification suites.
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        /// Suite: ascending, two-sided, restricted, tail-chain, finite-cf,
        /// moment-oracle, genetic, counts, reflection,
        /// approximation-order, or all.
        #[arg(long)]
        suite: Option<String>,
        /// Perturb one coefficient: the suite must fail with a located
        /// component and exponent (negative control).
        #[arg(long)]
        tamper: bool,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, ConfigError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate {
            common,
            family,
            n,
            j,
            q,
        } => {
            let cfg = RunConfig::resolve(&common)?;
            let spec = family_spec(&cfg, family, n, j, q)?;
            for path in spec.enumerate() {
                if cfg.json_output {
                    println!("{}", path.to_json());
                } else {
                    println!("{}", path.text());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Weight {
            common,
            family,
            n,
            j,
            q,
        } => {
            let cfg = RunConfig::resolve(&common)?;
            let spec = family_spec(&cfg, family, n, j, q)?;
            let table = cfg.table(false)?;
            let w = weight_polynomial(&spec, &table).map_err(core_err)?;
            if cfg.json_output {
                println!("{}", ring_element_to_json(&w));
            } else {
                println!("{w}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Series {
            common,
            series_family,
            j,
            q,
        } => {
            let cfg = RunConfig::resolve(&common)?;
            let tag = series_family
                .or_else(|| cfg.extra_str("series-family").map(String::from))
                .ok_or_else(|| ConfigError("missing --series-family".into()))?;
            let tag = SeriesFamily::from_str(&tag).map_err(core_err)?;
            let j = j
                .or_else(|| cfg.extra_u64("j").and_then(|v| u8::try_from(v).ok()))
                .ok_or_else(|| ConfigError("missing --j".into()))?;
            let q = q
                .or_else(|| cfg.extra_u64("q").and_then(|v| u32::try_from(v).ok()))
                .unwrap_or(0);
            let restricted = matches!(tag, SeriesFamily::R | SeriesFamily::S | SeriesFamily::T);
            let table = cfg.table(restricted)?;
            let s = series_from_family(tag, j, q, cfg.trunc, &table).map_err(core_err)?;
            if cfg.json_output {
                println!("{}", s.to_json());
            } else {
                print_series_text(&s);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Moment {
            common,
            kind,
            q,
            n,
            j,
        } => {
            let cfg = RunConfig::resolve(&common)?;
            let kind_name = kind
                .or_else(|| cfg.extra_str("kind").map(String::from))
                .ok_or_else(|| ConfigError("missing --kind".into()))?;
            let q = q
                .or_else(|| cfg.extra_u64("q").and_then(|v| u32::try_from(v).ok()))
                .unwrap_or(0);
            let kind = match kind_name.as_str() {
                "forward" => OperatorKind::Forward(q),
                "reflected" => OperatorKind::Reflected(q),
                "two-sided" => OperatorKind::TwoSided,
                other => return Err(ConfigError(format!("unknown operator kind {other:?}"))),
            };
            let n = n
                .or_else(|| cfg.extra_u64("n").and_then(|v| u32::try_from(v).ok()))
                .ok_or_else(|| ConfigError("missing --n".into()))?;
            let j = j
                .or_else(|| cfg.extra_u64("j").and_then(|v| u8::try_from(v).ok()))
                .ok_or_else(|| ConfigError("missing --j".into()))?;
            let table = cfg.table(false)?;
            let m = moment(kind, n, j, &table).map_err(core_err)?;
            if cfg.json_output {
                println!("{}", ring_element_to_json(&m));
            } else {
                println!("{m}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly {
            common,
            n,
            dump_matrix,
        } => {
            let cfg = RunConfig::resolve(&common)?;
            let n = n
                .or_else(|| cfg.extra_u64("n").and_then(|v| u32::try_from(v).ok()))
                .ok_or_else(|| ConfigError("missing --n".into()))?;
            let table = cfg.table(false)?;
            let pair = char_polys(n, &table).map_err(core_err)?;
            let mut payload = json!({
                "n": n,
                "q_n": pair.q_n().to_json(),
                "q_nk": pair.trimmed().iter().map(|q| q.to_json()).collect::<Vec<_>>(),
            });
            if dump_matrix {
                let view = BandedMatrixView::new(OperatorKind::Forward(0), &table);
                let rows = view.truncation(n as usize).map_err(core_err)?;
                payload["h_matrix"] = Value::Array(
                    rows.iter()
                        .map(|row| Value::Array(row.iter().map(ring_element_to_json).collect()))
                        .collect(),
                );
            }
            if cfg.json_output {
                println!("{payload}");
            } else {
                println!("q_{n} = {}", pair.q_n());
                for (k, q) in pair.trimmed().iter().enumerate() {
                    println!("q_{{{n},{}}} = {q}", k + 1);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cf {
            common,
            stages,
            with_tail,
        } => {
            let cfg = RunConfig::resolve(&common)?;
            let stages = stages
                .or_else(|| cfg.extra_u64("stages").and_then(|v| u32::try_from(v).ok()))
                .ok_or_else(|| ConfigError("missing --stages".into()))?;
            if stages < 1 {
                return Err(ConfigError("--stages must be at least 1".into()));
            }
            let table = cfg.table(false)?;
            let terms = (1..=stages)
                .map(|k| cf_term(k, &table))
                .collect::<lukas_core::Result<Vec<_>>>()
                .map_err(core_err)?;
            let tail = if with_tail {
                Some(tail_vector(stages, cfg.trunc, &table).map_err(core_err)?)
            } else {
                None
            };
            let value = eval_finite_cf(
                &terms,
                tail.as_ref().map(|t| t.vector()),
                cfg.trunc,
                &table,
            )
            .map_err(core_err)?;
            let payload = json!({
                "stages": terms
                    .iter()
                    .map(|t| json!({
                        "stage": t.stage(),
                        "numerators": t.numerators().iter().map(ring_element_to_json).collect::<Vec<_>>(),
                        "denominators": t.denominators().iter().map(|d| d.to_json()).collect::<Vec<_>>(),
                    }))
                    .collect::<Vec<_>>(),
                "with_tail": with_tail,
                "value": value
                    .components()
                    .iter()
                    .map(|c| c.truncated(cfg.trunc).to_json())
                    .collect::<Vec<_>>(),
            });
            if cfg.json_output {
                println!("{payload}");
            } else {
                for (i, c) in value.components().iter().enumerate() {
                    println!("component {i}:");
                    print_series_text(&c.truncated(cfg.trunc));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count {
            common,
            family,
            n,
            m,
            j,
            q,
        } => {
            let cfg = RunConfig::resolve(&common)?;
            let family_name = family
                .or_else(|| cfg.extra_str("family").map(String::from))
                .ok_or_else(|| ConfigError("missing --family".into()))?;
            let fam = Family::from_str(&family_name).map_err(core_err)?;
            let j = j
                .or_else(|| cfg.extra_u64("j").and_then(|v| u8::try_from(v).ok()))
                .ok_or_else(|| ConfigError("missing --j".into()))?;
            let m = m.or_else(|| cfg.extra_u64("m").and_then(|v| u32::try_from(v).ok()));
            let n = n.or_else(|| cfg.extra_u64("n").and_then(|v| u32::try_from(v).ok()));
            let n = match (n, m) {
                (Some(n), None) => n,
                (None, Some(m)) => m * (u32::from(cfg.p) + 1) + u32::from(j),
                (Some(_), Some(_)) => {
                    return Err(ConfigError("give --n or --m, not both".into()))
                }
                (None, None) => return Err(ConfigError("missing --n or --m".into())),
            };
            let q = q
                .or_else(|| cfg.extra_u64("q").and_then(|v| u32::try_from(v).ok()))
                .unwrap_or(0);
            let spec = FamilySpec::new(fam, cfg.p, n, j, q).map_err(core_err)?;
            let c = count(&spec).map_err(core_err)?;
            if cfg.json_output {
                println!(
                    "{}",
                    json!({"family": family_name, "n": n, "j": j, "count": c.to_string()})
                );
            } else {
                println!("{c}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            common,
            suite,
            tamper,
        } => {
            let cfg = RunConfig::resolve(&common)?;
            let suite = suite
                .or_else(|| cfg.extra_str("suite").map(String::from))
                .unwrap_or_else(|| "all".to_string());
            verify::run(&cfg, &suite, tamper)
        }
    }
}

fn family_spec(
    cfg: &RunConfig,
    family: Option<String>,
    n: Option<u32>,
    j: Option<u8>,
    q: Option<u32>,
) -> Result<FamilySpec, ConfigError> {
    let family_name = family
        .or_else(|| cfg.extra_str("family").map(String::from))
        .ok_or_else(|| ConfigError("missing --family".into()))?;
    let fam = Family::from_str(&family_name).map_err(core_err)?;
    let n = n
        .or_else(|| cfg.extra_u64("n").and_then(|v| u32::try_from(v).ok()))
        .ok_or_else(|| ConfigError("missing --n".into()))?;
    let j = j
        .or_else(|| cfg.extra_u64("j").and_then(|v| u8::try_from(v).ok()))
        .ok_or_else(|| ConfigError("missing --j".into()))?;
    let q = q
        .or_else(|| cfg.extra_u64("q").and_then(|v| u32::try_from(v).ok()))
        .unwrap_or(0);
    FamilySpec::new(fam, cfg.p, n, j, q).map_err(core_err)
}

fn print_series_text(s: &lukas_core::LaurentSeries) {
    println!("valid through z^-{}", s.valid_to());
    for (e, c) in s.iter() {
        if e < 0 {
            println!("  z^{}: {c}", -e);
        } else {
            println!("  z^-{e}: {c}");
        }
    }
}

fn core_err(e: lukas_core::CoreError) -> ConfigError {
    ConfigError(e.to_string())
}
