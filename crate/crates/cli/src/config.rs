use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::Args;
use lukas_core::algebra::table_from_json;
use lukas_core::{CoeffMode, CoeffTable};
use serde_json::Value;

/// Options shared by every subcommand. Each flag has a config-file
/// equivalent under the same (long) name; explicit flags win.
#[derive(Debug, Clone, Args, Default)]
pub struct CommonOpts {
    /// Band depth p (number of subdiagonals).
    #[arg(long)]
    pub p: Option<u8>,

    /// Series truncation order N.
    #[arg(short = 'N', long)]
    pub trunc: Option<i64>,

    /// Work over symbolic coefficients a_n^(k) (the default).
    #[arg(long, conflicts_with = "numeric")]
    pub symbolic: bool,

    /// Work over exact rational coefficients.
    #[arg(long)]
    pub numeric: bool,

    /// JSON coefficient table for numeric mode.
    #[arg(long)]
    pub coeffs: Option<PathBuf>,

    /// Seed for a random numeric table (integers in [-9, 9] \ {0}).
    #[arg(long)]
    pub seed: Option<u64>,

    /// Offset window lo,hi for seeded random tables.
    #[arg(long, value_parser = parse_window)]
    pub window: Option<(i64, i64)>,

    /// Zero every diagonal except the deepest one.
    #[arg(long)]
    pub bidiagonal: bool,

    /// Output format.
    #[arg(long, value_parser = ["text", "json"])]
    pub format: Option<String>,

    /// JSON file with defaults for any of the long flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| "window must be lo,hi".to_string())?;
    let lo = lo.trim().parse().map_err(|e| format!("bad window lo: {e}"))?;
    let hi = hi.trim().parse().map_err(|e| format!("bad window hi: {e}"))?;
    Ok((lo, hi))
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub p: u8,
    pub trunc: i64,
    pub mode: CoeffMode,
    pub coeffs: Option<PathBuf>,
    pub seed: Option<u64>,
    pub window: Option<(i64, i64)>,
    pub bidiagonal: bool,
    pub json_output: bool,
    /// Remaining config-file values for subcommand-specific flags.
    pub extras: BTreeMap<String, Value>,
}

/// A usage/config problem; maps to exit code 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn cfg_err(msg: impl Into<String>) -> ConfigError {
    ConfigError(msg.into())
}

impl RunConfig {
    pub fn resolve(opts: &CommonOpts) -> Result<Self, ConfigError> {
        let mut extras: BTreeMap<String, Value> = BTreeMap::new();
        if let Some(path) = &opts.config {
            let text = fs::read_to_string(path)
                .map_err(|e| cfg_err(format!("cannot read config {}: {e}", path.display())))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| cfg_err(format!("bad config JSON: {e}")))?;
            let obj = value
                .as_object()
                .ok_or_else(|| cfg_err("config JSON must be an object"))?;
            for (k, v) in obj {
                extras.insert(k.clone(), v.clone());
            }
        }

        let from_cfg_u64 = |extras: &BTreeMap<String, Value>, key: &str| {
            extras.get(key).and_then(Value::as_u64)
        };
        let p = opts
            .p
            .or_else(|| from_cfg_u64(&extras, "p").and_then(|v| u8::try_from(v).ok()))
            .ok_or_else(|| cfg_err("missing required --p"))?;
        if p < 1 {
            return Err(cfg_err("--p must be at least 1"));
        }
        let trunc = opts
            .trunc
            .or_else(|| extras.get("trunc").and_then(Value::as_i64))
            .unwrap_or(12);
        if trunc < 1 {
            return Err(cfg_err("--trunc must be at least 1"));
        }

        let cfg_mode = extras.get("mode").and_then(Value::as_str);
        let numeric = opts.numeric || (!opts.symbolic && cfg_mode == Some("numeric"));
        let coeffs = opts.coeffs.clone().or_else(|| {
            extras
                .get("coeffs")
                .and_then(Value::as_str)
                .map(PathBuf::from)
        });
        let seed = opts
            .seed
            .or_else(|| from_cfg_u64(&extras, "seed"));
        if numeric && coeffs.is_none() && seed.is_none() {
            return Err(cfg_err("numeric mode requires --coeffs or --seed"));
        }
        let window = opts.window.or_else(|| {
            extras.get("window").and_then(|v| {
                let a = v.as_array()?;
                Some((a.first()?.as_i64()?, a.get(1)?.as_i64()?))
            })
        });
        let bidiagonal = opts.bidiagonal
            || extras.get("bidiagonal").and_then(Value::as_bool) == Some(true);
        let format = opts
            .format
            .clone()
            .or_else(|| extras.get("format").and_then(Value::as_str).map(String::from))
            .unwrap_or_else(|| "text".to_string());
        let json_output = match format.as_str() {
            "json" => true,
            "text" => false,
            other => return Err(cfg_err(format!("unknown format {other:?}"))),
        };

        Ok(RunConfig {
            p,
            trunc,
            mode: if numeric {
                CoeffMode::Numeric
            } else {
                CoeffMode::Symbolic
            },
            coeffs,
            seed,
            window,
            bidiagonal,
            json_output,
            extras,
        })
    }

    /// Integer knob from the config file (for subcommand flags).
    pub fn extra_u64(&self, key: &str) -> Option<u64> {
        self.extras.get(key).and_then(Value::as_u64)
    }

    pub fn extra_str(&self, key: &str) -> Option<&str> {
        self.extras.get(key).and_then(Value::as_str)
    }

    /// Offset window wide enough for every series/moment this run asks for.
    fn default_window(&self) -> (i64, i64) {
        let reach = self.trunc + 3 * i64::from(self.p) + 8;
        (-reach, reach)
    }

    /// Materialize the coefficient table, honoring bidiagonal requests.
    pub fn table(&self, force_bidiagonal: bool) -> Result<CoeffTable, ConfigError> {
        let bidiagonal = self.bidiagonal || force_bidiagonal;
        match self.mode {
            CoeffMode::Symbolic => Ok(if bidiagonal {
                CoeffTable::symbolic_bidiagonal(self.p)
            } else {
                CoeffTable::symbolic(self.p)
            }),
            CoeffMode::Numeric => {
                if let Some(path) = &self.coeffs {
                    let text = fs::read_to_string(path).map_err(|e| {
                        cfg_err(format!("cannot read coeffs {}: {e}", path.display()))
                    })?;
                    let value: Value = serde_json::from_str(&text)
                        .map_err(|e| cfg_err(format!("bad coeffs JSON: {e}")))?;
                    let table =
                        table_from_json(&value).map_err(|e| cfg_err(format!("bad table: {e}")))?;
                    if table.p() != self.p {
                        return Err(cfg_err(format!(
                            "table p = {} does not match --p {}",
                            table.p(),
                            self.p
                        )));
                    }
                    if bidiagonal && !table.is_bidiagonal() {
                        return Err(cfg_err("this command needs a bidiagonal table"));
                    }
                    Ok(table)
                } else {
                    let seed = self.seed.expect("validated in resolve");
                    let window = self.window.unwrap_or_else(|| self.default_window());
                    let table = if bidiagonal {
                        CoeffTable::random_bidiagonal(self.p, window, seed)
                    } else {
                        CoeffTable::random(self.p, window, seed)
                    };
                    table.map_err(|e| cfg_err(format!("cannot build random table: {e}")))
                }
            }
        }
    }
}
