#![allow(clippy::neg_cmp_op_on_partial_ord)]
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qrel_cli::input::{evaluate, evaluate_jsonl, evaluate_matrix, StateSpec};
use qrel_cli::output::{num, profile_json};
use qrel_cli::scan::{self, Family, ScanSpec};
use qrel_cli::verify::{self, Suite, VerifyConfig};
use qrel_cli::{CliError, CliResult};
use qrel_core::relations::classify_region;
use qrel_core::{
    pf_pair_profiles, rg_flow, xxz_pair_profile, y_factor, PairSelector, WParams64, XxzParams64,
};
use serde_json::{json, Value};

/// Coherence, concurrence, Bell nonlocality and purity of W-type qubit pairs.
#[derive(Parser)]
#[command(name = "qrel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Common {
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Resource profile of one state.
    Profile {
        /// State family: horodecki, w, min-coh or xxz.
        #[arg(long, conflicts_with_all = ["matrix", "spec"])]
        family: Option<String>,
        /// Density matrix file, one row per line, entries re±imj.
        #[arg(long, conflicts_with = "spec")]
        matrix: Option<PathBuf>,
        /// File of JSON state specs, one per line.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        y: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        /// Phase-flip strength applied to every qubit.
        #[arg(long)]
        p: Option<f64>,
        /// 12, 13, 23 or all.
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample or sweep a family and emit one row per pair.
    Scan {
        #[arg(long)]
        family: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// 12, 13, 23 or all.
        #[arg(long, default_value = "all")]
        pair: String,
        /// Phase-flip strength p.
        #[arg(long)]
        noise: Option<f64>,
        /// Lower end of the swept parameter (ε, a or δ).
        #[arg(long)]
        min: Option<f64>,
        #[arg(long)]
        max: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Run invariant checks; exits 1 if any fails.
    Verify {
        #[arg(value_parser = ["identities", "boundaries", "channels", "xxz", "all"], default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Pair profiles of a W-type state before and after dephasing.
    Channel {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Renormalization flow of the XXZ block with per-step pair resources.
    Xxz {
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        #[arg(long, default_value_t = 1.0)]
        j: f64,
        #[arg(long, default_value_t = 5)]
        steps: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate classifier labels on a (C, D²) grid.
    Regions {
        /// Grid points per axis.
        #[arg(long, default_value_t = 21)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn need(v: Option<f64>, name: &str) -> CliResult<f64> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required for this family")))
}

fn read(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn pair_arg(s: &str) -> CliResult<Option<PairSelector>> {
    if s == "all" {
        Ok(None)
    } else {
        Ok(Some(s.parse()?))
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Profile {
            family,
            matrix,
            spec,
            eps,
            alpha,
            beta,
            gamma,
            a,
            y,
            delta,
            p,
            pair,
            out,
        } => {
            let text = if let Some(path) = matrix {
                json_line(&evaluate_matrix(&read(&path)?)?)
            } else if let Some(path) = spec {
                evaluate_jsonl(&read(&path)?)?
                    .iter()
                    .map(json_line)
                    .collect()
            } else {
                let family = family
                    .ok_or_else(|| CliError::Usage("give --family, --matrix or --spec".into()))?;
                let state = match family.parse::<Family>()? {
                    Family::Horodecki => StateSpec::Horodecki {
                        eps: need(eps, "eps")?,
                        p,
                    },
                    Family::W | Family::WPf => StateSpec::W {
                        alpha: need(alpha, "alpha")?,
                        beta: need(beta, "beta")?,
                        gamma: need(gamma, "gamma")?,
                        pair,
                        p,
                    },
                    Family::MinCoh => {
                        let y = match (y, p) {
                            (Some(_), Some(_)) => {
                                return Err(CliError::Usage("give --y or --p, not both".into()))
                            }
                            (None, Some(p)) => Some(y_factor(p)?),
                            (y, None) => y,
                        };
                        StateSpec::MinCoh {
                            a: need(a, "a")?,
                            y,
                        }
                    }
                    Family::Xxz => StateSpec::Xxz {
                        delta: need(delta, "delta")?,
                        pair,
                    },
                };
                json_line(&evaluate(&state)?)
            };
            emit(&out, &text)
        }
        Command::Scan {
            family,
            seed,
            samples,
            pair,
            noise,
            min,
            max,
            common,
        } => {
            let spec = ScanSpec {
                family: family.parse()?,
                samples,
                seed,
                pair: pair_arg(&pair)?,
                noise,
                min,
                max,
            };
            let rows = scan::run(&spec)?;
            let text = match common.format {
                Format::Csv => scan::to_csv(&rows),
                Format::Json => json_line(&serde_json::to_value(&rows).expect("rows serialize")),
            };
            emit(&common.out, &text)
        }
        Command::Verify {
            suite,
            seed,
            samples,
            common,
        } => {
            let checks = verify::run(suite.parse::<Suite>()?, &VerifyConfig { samples, seed })?;
            let (human, summary) = verify::report(&checks);
            let text = match common.format {
                Format::Csv => format!("{human}{}", json_line(&summary)),
                Format::Json => json_line(&summary),
            };
            emit(&common.out, &text)?;
            match checks.iter().find(|c| !c.passed) {
                None => Ok(()),
                Some(c) => Err(CliError::VerifyFailed(format!(
                    "{}: {}",
                    c.name,
                    c.counterexample
                        .as_deref()
                        .unwrap_or("no counterexample recorded")
                ))),
            }
        }
        Command::Channel {
            alpha,
            beta,
            gamma,
            p,
            out,
        } => {
            let w = WParams64::new(alpha, beta, gamma)?;
            let y = y_factor(p)?;
            let before = pf_pair_profiles(&w, 0.0)?;
            let after = pf_pair_profiles(&w, p)?;
            let side = |ps: &[qrel_core::Profile64; 3]| {
                let mut m = serde_json::Map::new();
                for (pair, pr) in PairSelector::ALL.into_iter().zip(ps) {
                    m.insert(pair.label().into(), profile_json(pr));
                }
                Value::Object(m)
            };
            let v = json!({ "p": p, "y": y, "before": side(&before), "after": side(&after) });
            emit(&out, &json_line(&v))
        }
        Command::Xxz {
            delta,
            j,
            steps,
            common,
        } => {
            let trace = rg_flow(&XxzParams64::new(delta, j)?, steps)?;
            let mut rows = Vec::new();
            for (i, s) in trace.steps.iter().enumerate() {
                let p13 = xxz_pair_profile(s.delta, PairSelector::P13)?;
                let p12 = xxz_pair_profile(s.delta, PairSelector::P12)?;
                rows.push((i, s, p13, p12));
            }
            let text = match common.format {
                Format::Csv => {
                    let mut t =
                        String::from("step,J,delta,q,E0,C13,D2_13,P13,N13,C12,D2_12,P12,N12\n");
                    for (i, s, a, b) in &rows {
                        let cells = [
                            s.j,
                            s.delta,
                            s.q,
                            s.e0,
                            a.concurrence,
                            a.d2,
                            a.purity,
                            a.n,
                            b.concurrence,
                            b.d2,
                            b.purity,
                            b.n,
                        ];
                        t.push_str(&i.to_string());
                        for c in cells {
                            t.push(',');
                            t.push_str(&num(c));
                        }
                        t.push('\n');
                    }
                    t
                }
                Format::Json => {
                    let arr: Vec<Value> = rows
                        .iter()
                        .map(|(i, s, a, b)| json!({"step": i, "J": s.j, "delta": s.delta, "q": s.q, "E0": s.e0, "13": profile_json(a), "12": profile_json(b)}))
                        .collect();
                    json_line(&Value::Array(arr))
                }
            };
            emit(&common.out, &text)
        }
        Command::Regions { samples, common } => {
            if samples < 2 {
                return Err(CliError::Usage("--samples must be at least 2".into()));
            }
            let n = samples - 1;
            let mut cells = Vec::new();
            for i in 1..=n {
                for k in 0..=n {
                    let (c, d2) = (i as f64 / n as f64, k as f64 / n as f64);
                    cells.push((c, d2, classify_region(c, d2)));
                }
            }
            let text = match common.format {
                Format::Csv => {
                    let mut t = String::from("C,D2,region\n");
                    for (c, d2, r) in &cells {
                        t.push_str(&format!("{},{},{}\n", num(*c), num(*d2), r));
                    }
                    t
                }
                Format::Json => json_line(&Value::Array(
                    cells
                        .iter()
                        .map(|(c, d2, r)| json!({"C": c, "D2": d2, "region": r.name()}))
                        .collect(),
                )),
            };
            emit(&common.out, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qrel: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
