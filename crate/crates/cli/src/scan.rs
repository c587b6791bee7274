//! Family scans: one row per (sample, pair), in sample order.

use std::fmt::Write as _;
use std::str::FromStr;

use qrel_core::relations::classify_region;
use qrel_core::{
    apply_pf_each_qubit, horodecki_state, min_coherence_state, profile, reduce_pair, w_state,
    xxz_pair_profile, y_factor, PairSelector, Profile64,
};
use serde::Serialize;

use crate::output::num;
use crate::sampling;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    W,
    WPf,
    Horodecki,
    MinCoh,
    Xxz,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::W => "w",
            Family::WPf => "w-pf",
            Family::Horodecki => "horodecki",
            Family::MinCoh => "min-coh",
            Family::Xxz => "xxz",
        }
    }

    /// Parameter range scanned when `--min/--max` are absent.
    fn default_range(self) -> (f64, f64) {
        match self {
            Family::W | Family::WPf => (0.0, 1.0),
            Family::Horodecki => (0.0, 1.0),
            Family::MinCoh => (0.0, 0.5),
            Family::Xxz => (0.0, 10.0),
        }
    }
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "w" => Ok(Family::W),
            "w-pf" => Ok(Family::WPf),
            "horodecki" => Ok(Family::Horodecki),
            "min-coh" => Ok(Family::MinCoh),
            "xxz" => Ok(Family::Xxz),
            _ => Err(CliError::Usage(format!("unknown family {s:?}"))),
        }
    }
}

/// What to scan. Random families (`w`, `w-pf`) draw `samples` simplex
/// points from `seed`; the others walk an evenly spaced grid of `samples`
/// points over `[min, max]`.
#[derive(Clone, Debug)]
pub struct ScanSpec {
    pub family: Family,
    pub samples: usize,
    pub seed: u64,
    /// `None` means all three pairs.
    pub pair: Option<PairSelector>,
    /// Phase-flip strength. For `w-pf` a missing value means one uniform
    /// draw per sample; for the two-qubit families it defaults to 0.
    pub noise: Option<f64>,
    pub min: Option<f64>,
    pub max: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub family: &'static str,
    pub pair: Option<String>,
    pub p1: f64,
    pub p2: Option<f64>,
    pub p3: Option<f64>,
    pub noise: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "D2")]
    pub d2: f64,
    #[serde(rename = "N")]
    pub n: f64,
    #[serde(rename = "P")]
    pub p: f64,
    pub region: &'static str,
}

pub const CSV_HEADER: &str = "family,pair,p1,p2,p3,noise,C,D2,N,P,region";

impl ScanRow {
    fn new(
        family: Family,
        pair: Option<PairSelector>,
        params: [Option<f64>; 3],
        noise: f64,
        pr: &Profile64,
    ) -> Self {
        ScanRow {
            family: family.name(),
            pair: pair.map(|p| p.label().to_string()),
            p1: params[0].expect("first parameter is always set"),
            p2: params[1],
            p3: params[2],
            noise,
            c: pr.concurrence,
            d2: pr.d2,
            n: pr.n,
            p: pr.purity,
            region: classify_region(pr.concurrence, pr.d2).name(),
        }
    }

    pub fn csv(&self) -> String {
        let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
        let mut s = String::new();
        let _ = write!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.pair.as_deref().unwrap_or(""),
            num(self.p1),
            opt(self.p2),
            opt(self.p3),
            num(self.noise),
            num(self.c),
            num(self.d2),
            num(self.n),
            num(self.p),
            self.region
        );
        s
    }
}

impl ScanSpec {
    fn validate(&self) -> CliResult<(f64, f64)> {
        if self.samples == 0 {
            return Err(CliError::Usage("--samples must be at least 1".into()));
        }
        if let Some(p) = self.noise {
            y_factor(p)?;
        }
        let (lo, hi) = self.family.default_range();
        let (min, max) = (self.min.unwrap_or(lo), self.max.unwrap_or(hi));
        if !(min <= max) {
            return Err(CliError::Usage(format!("empty range [{min}, {max}]")));
        }
        Ok((min, max))
    }

    fn pairs(&self) -> Vec<PairSelector> {
        match self.pair {
            Some(p) => vec![p],
            None => PairSelector::ALL.to_vec(),
        }
    }
}

fn grid(min: f64, max: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| {
        if n == 1 {
            min
        } else {
            min + (max - min) * i as f64 / (n - 1) as f64
        }
    })
}

/// Run a scan. Rows come out in sample-index order, pairs 12, 13, 23
/// within a sample.
pub fn run(spec: &ScanSpec) -> CliResult<Vec<ScanRow>> {
    let (min, max) = spec.validate()?;
    let pairs = spec.pairs();
    let mut rows = Vec::new();
    match spec.family {
        Family::W | Family::WPf => {
            if spec.family == Family::W && spec.noise.is_some_and(|p| p != 0.0) {
                return Err(CliError::Usage(
                    "the w family is noiseless; use w-pf for --noise".into(),
                ));
            }
            let mut rng = sampling::rng(spec.seed);
            for _ in 0..spec.samples {
                let w = sampling::w_params(&mut rng);
                let p = match (spec.family, spec.noise) {
                    (Family::W, _) => 0.0,
                    (_, Some(p)) => p,
                    (_, None) => rand::Rng::gen::<f64>(&mut rng),
                };
                let rho = if p == 0.0 {
                    w_state(&w)
                } else {
                    apply_pf_each_qubit(&w_state(&w), p)?
                };
                for &pair in &pairs {
                    let pr = profile(&reduce_pair(&rho, pair)?)?;
                    rows.push(ScanRow::new(
                        spec.family,
                        Some(pair),
                        [Some(w.alpha), Some(w.beta), Some(w.gamma)],
                        p,
                        &pr,
                    ));
                }
            }
        }
        Family::Horodecki | Family::MinCoh => {
            let p = spec.noise.unwrap_or(0.0);
            if !(min >= 0.0 && max <= spec.family.default_range().1) {
                return Err(CliError::Usage(format!(
                    "range [{min}, {max}] outside the family's domain"
                )));
            }
            for x in grid(min, max, spec.samples) {
                let rho = match spec.family {
                    Family::Horodecki => apply_pf_each_qubit(&horodecki_state(x)?, p)?,
                    _ => min_coherence_state(x, y_factor(p)?)?,
                };
                let pr = profile(&rho)?;
                rows.push(ScanRow::new(
                    spec.family,
                    None,
                    [Some(x), None, None],
                    p,
                    &pr,
                ));
            }
        }
        Family::Xxz => {
            if spec.noise.is_some_and(|p| p != 0.0) {
                return Err(CliError::Usage("the xxz family takes no --noise".into()));
            }
            if min < 0.0 {
                return Err(CliError::Usage("δ must be non-negative".into()));
            }
            for delta in grid(min, max, spec.samples) {
                for &pair in &pairs {
                    let pr = xxz_pair_profile(delta, pair)?;
                    rows.push(ScanRow::new(
                        spec.family,
                        Some(pair),
                        [Some(delta), None, None],
                        0.0,
                        &pr,
                    ));
                }
            }
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 120);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}
