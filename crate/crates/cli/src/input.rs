//! State inputs for `profile`: family parameters, JSON state specs and
//! matrix files.

use qrel_core::matrix_text::parse_matrix;
use qrel_core::{
    apply_pf_each_qubit, horodecki_state, min_coherence_state, profile, reduce_pair, w_state,
    xxz_pair_profile, DensityMatrix, PairSelector, State64, WParams64,
};
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::output::profile_json;
use crate::{CliError, CliResult};

/// One state, as given on the command line or as a JSON object such as
/// `{"family":"w","alpha":0.6,"beta":0.48,"gamma":0.64,"pair":"13"}`.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum StateSpec {
    W {
        alpha: f64,
        beta: f64,
        gamma: f64,
        #[serde(default)]
        pair: Option<String>,
        /// Phase-flip strength applied to every qubit.
        #[serde(default)]
        p: Option<f64>,
    },
    Horodecki {
        eps: f64,
        #[serde(default)]
        p: Option<f64>,
    },
    #[serde(alias = "min_coh")]
    MinCoh {
        a: f64,
        /// Coherence attenuation; 1 when absent.
        #[serde(default)]
        y: Option<f64>,
    },
    Xxz {
        delta: f64,
        #[serde(default)]
        pair: Option<String>,
    },
}

fn pairs(sel: &Option<String>) -> CliResult<Option<PairSelector>> {
    match sel.as_deref() {
        None | Some("all") => Ok(None),
        Some(s) => Ok(Some(s.parse()?)),
    }
}

fn by_pair(
    sel: Option<PairSelector>,
    mut f: impl FnMut(PairSelector) -> CliResult<qrel_core::Profile64>,
) -> CliResult<Value> {
    match sel {
        Some(p) => Ok(profile_json(&f(p)?)),
        None => {
            let mut out = Map::new();
            for p in PairSelector::ALL {
                out.insert(p.label().to_string(), profile_json(&f(p)?));
            }
            Ok(Value::Object(out))
        }
    }
}

/// Profiles of the state: one object for a pair, or an object keyed by
/// pair label (`"12"`, `"13"`, `"23"`) for a three-qubit state.
pub fn evaluate(spec: &StateSpec) -> CliResult<Value> {
    match spec {
        StateSpec::W {
            alpha,
            beta,
            gamma,
            pair,
            p,
        } => {
            let w = WParams64::new(*alpha, *beta, *gamma)?;
            let rho = match p {
                Some(p) => apply_pf_each_qubit(&w_state(&w), *p)?,
                None => w_state(&w),
            };
            by_pair(pairs(pair)?, |sel| Ok(profile(&reduce_pair(&rho, sel)?)?))
        }
        StateSpec::Horodecki { eps, p } => {
            let rho = horodecki_state(*eps)?;
            let rho = match p {
                Some(p) => apply_pf_each_qubit(&rho, *p)?,
                None => rho,
            };
            Ok(profile_json(&profile(&rho)?))
        }
        StateSpec::MinCoh { a, y } => Ok(profile_json(&profile(&min_coherence_state(
            *a,
            y.unwrap_or(1.0),
        )?)?)),
        StateSpec::Xxz { delta, pair } => {
            by_pair(pairs(pair)?, |sel| Ok(xxz_pair_profile(*delta, sel)?))
        }
    }
}

/// Evaluate a density matrix given in the text format.
pub fn evaluate_matrix(text: &str) -> CliResult<Value> {
    let rho = State64::new(parse_matrix(text)?)?;
    evaluate_density(&rho)
}

pub fn evaluate_density(rho: &DensityMatrix<f64>) -> CliResult<Value> {
    match rho.qubits() {
        2 => Ok(profile_json(&profile(rho)?)),
        3 => by_pair(None, |sel| Ok(profile(&reduce_pair(rho, sel)?)?)),
        n => Err(CliError::InvalidState(format!(
            "profiles need a 2- or 3-qubit state, got {n} qubits"
        ))),
    }
}

/// One JSON state spec per non-empty line; one output value per spec.
pub fn evaluate_jsonl(text: &str) -> CliResult<Vec<Value>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            let spec: StateSpec = serde_json::from_str(line)
                .map_err(|e| CliError::Usage(format!("state spec line {}: {e}", i + 1)))?;
            evaluate(&spec)
        })
        .collect()
}
