//! Checkpoint evaluation, grid calibration of the `(r, t)` model, and
//! reproduction of the reference estimate tables shipped under `data/`.
//!
//! Evaluation compares a model's counting function against the true
//! prime-counting function at a list of checkpoints, generating the model
//! sequence once up to the largest checkpoint and reading every count off
//! that single run. The signed per-checkpoint errors feed a scalar loss
//! (sum of absolute errors by default), and a sweep scans a rectangular
//! `(r, t)` grid in parallel. Sweep output is deterministic: points are
//! listed in r-major, t-minor order, and ties on the loss resolve to the
//! earliest point in that order — so the smallest `r`, then the smallest
//! `t`, wins. On the default grid (r in 0..=20, t in steps of 0.01 over
//! [0, 1], checkpoints 10^2..10^5) the winner is `(5, 0.11)` at loss 1,
//! one step away from the `(6, 0.11)` point the reference tables use,
//! which ties on loss and loses only the tie-break.
//!
//! The three reference tables are embedded verbatim as CSV. Two of their
//! cells disagree with what the models actually produce (recomputation
//! yields 78576 where table 1 prints 78575 for the calibrated model at
//! 10^6, and 21 where table 3 prints 20 for r = 20 at 100); reproduction
//! reports those as mismatches rather than papering over them, and the
//! README discusses both. The baseline column of table 1 is `x / ln x`
//! truncated — not rounded — to two decimals, and comparison against it
//! allows ±0.005.

use crate::error::{Error, Result};
use crate::models::{
    pnt_baseline, ModelContext, ModelGenerator, ModelParams, ModelVariant,
};
use crate::sieve::PrimeTable;
use rayon::prelude::*;

/// Checkpoints used by the reference tables: the powers of ten from 10 to
/// one million.
pub const TABLE_CHECKPOINTS: [u64; 6] = [10, 100, 1_000, 10_000, 100_000, 1_000_000];

/// Default calibration checkpoints. The two extreme powers of ten are
/// deliberately left out: 10 is all seed values, and one million slows
/// the sweep down for no extra discrimination.
pub const SWEEP_CHECKPOINTS: [u64; 4] = [100, 1_000, 10_000, 100_000];

/// One checkpoint of a model evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateRow {
    pub x: u64,
    pub true_pi: u64,
    pub model_pi: u64,
    /// `model_pi - true_pi`.
    pub error: i64,
    /// The untruncated `x / ln x` baseline.
    pub baseline: f64,
}

/// Scalar summary of a vector of signed checkpoint errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Loss {
    /// Sum of absolute errors.
    #[default]
    SumAbs,
    /// Largest absolute error.
    MaxAbs,
    /// Absolute error at the last checkpoint only.
    FinalAbs,
}

impl Loss {
    pub fn apply(self, errors: &[i64]) -> u64 {
        match self {
            Loss::SumAbs => errors.iter().map(|e| e.unsigned_abs()).sum(),
            Loss::MaxAbs => errors.iter().map(|e| e.unsigned_abs()).max().unwrap_or(0),
            Loss::FinalAbs => errors.last().map(|e| e.unsigned_abs()).unwrap_or(0),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Loss::SumAbs => "sum-abs",
            Loss::MaxAbs => "max-abs",
            Loss::FinalAbs => "final-abs",
        }
    }
}

fn validate_checkpoints(checkpoints: &[u64]) -> Result<()> {
    if checkpoints.is_empty() {
        return Err(Error::invalid_argument(
            "at least one checkpoint is required".to_string(),
        ));
    }
    if checkpoints[0] < 2 {
        return Err(Error::invalid_argument(format!(
            "checkpoints start at 2, got {}",
            checkpoints[0]
        )));
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid_argument(
            "checkpoints must be strictly increasing".to_string(),
        ));
    }
    Ok(())
}

/// Evaluate a model against the true primes at each checkpoint. The model
/// sequence is generated once, up to the largest checkpoint; `primes`
/// must cover that checkpoint (and, for Model 2, the context tables must
/// cover the model's values there).
pub fn evaluate_params(
    params: &ModelParams,
    checkpoints: &[u64],
    primes: &PrimeTable,
    ctx: &ModelContext<'_>,
) -> Result<Vec<EstimateRow>> {
    validate_checkpoints(checkpoints)?;
    let max_x = *checkpoints.last().expect("checkpoints are non-empty");
    let seq = ModelGenerator::new(*params, *ctx)?.sequence_up_to(max_x)?;
    checkpoints
        .iter()
        .map(|&x| {
            let model_pi = seq.count_up_to(x);
            let true_pi = primes.prime_pi(x)?;
            Ok(EstimateRow {
                x,
                true_pi,
                model_pi,
                error: model_pi as i64 - true_pi as i64,
                baseline: pnt_baseline(x)?,
            })
        })
        .collect()
}

/// A rectangular `(r, t)` grid plus the evaluation setup.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub r_values: Vec<u32>,
    pub t_values: Vec<f64>,
    pub checkpoints: Vec<u64>,
    pub loss: Loss,
}

impl SweepConfig {
    /// The default calibration grid: r in 0..=20, t from 0 to 1 in exact
    /// hundredths, checkpoints 10^2..10^5, sum-of-absolute-errors loss.
    pub fn default_grid() -> Self {
        SweepConfig {
            r_values: (0..=20).collect(),
            t_values: (0..=100).map(|k| k as f64 / 100.0).collect(),
            checkpoints: SWEEP_CHECKPOINTS.to_vec(),
            loss: Loss::SumAbs,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.r_values.is_empty() || self.t_values.is_empty() {
            return Err(Error::invalid_argument(
                "the sweep grid must contain at least one r and one t".to_string(),
            ));
        }
        for &t in &self.t_values {
            if !t.is_finite() || !(0.0..=1.0).contains(&t) {
                return Err(Error::invalid_argument(format!(
                    "grid t values must lie in [0, 1], got {t}"
                )));
            }
        }
        validate_checkpoints(&self.checkpoints)
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig::default_grid()
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub r: u32,
    pub t: f64,
    pub loss: u64,
    pub errors: Vec<i64>,
}

/// A completed sweep: every point, in r-major order, plus the winner.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub checkpoints: Vec<u64>,
    pub loss: Loss,
    pub points: Vec<SweepPoint>,
    pub best_index: usize,
}

impl SweepResult {
    pub fn best(&self) -> &SweepPoint {
        &self.points[self.best_index]
    }
}

/// Evaluate the `(r, t)` model at every grid point, in parallel. The
/// returned points are in deterministic r-major, t-minor order regardless
/// of scheduling, and `best_index` is the first point attaining the
/// minimal loss in that order.
pub fn sweep(config: &SweepConfig, primes: &PrimeTable) -> Result<SweepResult> {
    config.validate()?;
    let pairs: Vec<(u32, f64)> = config
        .r_values
        .iter()
        .flat_map(|&r| config.t_values.iter().map(move |&t| (r, t)))
        .collect();
    let ctx = ModelContext::empty();
    let points: Vec<SweepPoint> = pairs
        .par_iter()
        .map(|&(r, t)| {
            let params = ModelParams::new(ModelVariant::Model3).with_r(r).with_t(t)?;
            let rows = evaluate_params(&params, &config.checkpoints, primes, &ctx)?;
            let errors: Vec<i64> = rows.iter().map(|row| row.error).collect();
            let loss = config.loss.apply(&errors);
            Ok(SweepPoint { r, t, loss, errors })
        })
        .collect::<Result<_>>()?;
    let mut best_index = 0;
    for (i, point) in points.iter().enumerate() {
        if point.loss < points[best_index].loss {
            best_index = i;
        }
    }
    Ok(SweepResult {
        checkpoints: config.checkpoints.clone(),
        loss: config.loss,
        points,
        best_index,
    })
}

/// The `(r, t)` pair winning a sweep of `config`.
pub fn best_fit(config: &SweepConfig, primes: &PrimeTable) -> Result<(u32, f64)> {
    let result = sweep(config, primes)?;
    let best = result.best();
    Ok((best.r, best.t))
}

/// Which of the three embedded reference tables to reproduce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceTable {
    /// The model comparison: counts for Models 1, 2, 2* and the
    /// calibrated (r=6, t=0.11) model next to `x / ln x`.
    One,
    /// The t-family at r = 0, for t in {0, 0.1, 0.5, 1}.
    Two,
    /// The r-family at t = 0, for r in {0, 1, 6, 10, 20}.
    Three,
}

impl ReferenceTable {
    pub fn from_number(k: u32) -> Result<Self> {
        match k {
            1 => Ok(ReferenceTable::One),
            2 => Ok(ReferenceTable::Two),
            3 => Ok(ReferenceTable::Three),
            other => Err(Error::invalid_argument(format!(
                "reference tables are numbered 1, 2 and 3, got {other}"
            ))),
        }
    }

    pub fn number(self) -> u32 {
        match self {
            ReferenceTable::One => 1,
            ReferenceTable::Two => 2,
            ReferenceTable::Three => 3,
        }
    }

    fn raw_csv(self) -> &'static str {
        match self {
            ReferenceTable::One => include_str!("../data/table1.csv"),
            ReferenceTable::Two => include_str!("../data/table2.csv"),
            ReferenceTable::Three => include_str!("../data/table3.csv"),
        }
    }

    /// The model behind each non-baseline estimate column.
    fn columns(self) -> Vec<(&'static str, ModelParams)> {
        let m3t = |t: f64| {
            ModelParams::new(ModelVariant::Model3T)
                .with_t(t)
                .expect("table t values lie in [0, 1]")
        };
        let m2star_r = |r: u32| ModelParams::new(ModelVariant::Model2StarR).with_r(r);
        match self {
            ReferenceTable::One => vec![
                ("m1", ModelParams::new(ModelVariant::Model1)),
                ("m2", ModelParams::new(ModelVariant::Model2)),
                ("m2star", ModelParams::new(ModelVariant::Model2Star)),
                (
                    "m3",
                    ModelParams::new(ModelVariant::Model3)
                        .with_r(6)
                        .with_t(0.11)
                        .expect("the calibrated t lies in [0, 1]"),
                ),
            ],
            ReferenceTable::Two => vec![
                ("t0", m3t(0.0)),
                ("t0.1", m3t(0.1)),
                ("t0.5", m3t(0.5)),
                ("t1", m3t(1.0)),
            ],
            ReferenceTable::Three => vec![
                ("r0", m2star_r(0)),
                ("r1", m2star_r(1)),
                ("r6", m2star_r(6)),
                ("r10", m2star_r(10)),
                ("r20", m2star_r(20)),
            ],
        }
    }
}

/// A cell where recomputation disagrees with the shipped reference data.
#[derive(Debug, Clone, PartialEq)]
pub struct TableMismatch {
    pub x: u64,
    pub column: String,
    pub expected: String,
    pub computed: String,
}

/// A reproduced table next to its reference, cell by cell.
#[derive(Debug, Clone)]
pub struct TableComparison {
    pub table: ReferenceTable,
    pub headers: Vec<String>,
    pub expected_rows: Vec<Vec<String>>,
    pub computed_rows: Vec<Vec<String>>,
    pub mismatches: Vec<TableMismatch>,
}

impl TableComparison {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `x / ln x` rendered the way the reference table prints it: truncated
/// (not rounded) to two decimals.
pub fn format_baseline(value: f64) -> String {
    let scaled = (value * 100.0).floor() as u64;
    format!("{}.{:02}", scaled / 100, scaled % 100)
}

fn parse_reference(raw: &str) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let mut lines = raw.lines().filter(|line| !line.trim().is_empty());
    let headers: Vec<String> = lines
        .next()
        .ok_or_else(|| Error::invalid_state("reference table data is empty".to_string()))?
        .split(',')
        .map(str::to_string)
        .collect();
    let rows: Vec<Vec<String>> = lines
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect();
    for row in &rows {
        if row.len() != headers.len() {
            return Err(Error::invalid_state(
                "reference table data is ragged".to_string(),
            ));
        }
    }
    Ok((headers, rows))
}

/// Recompute a reference table from scratch and diff it against the
/// shipped data. `ctx.primes` must cover the final checkpoint (it also
/// supplies the true counts); table 1 additionally needs the Model-2
/// context, so `ctx.semiprimes` must be present and `ctx.primes` large
/// enough to index the roughly 78000th prime.
pub fn reproduce_table(
    table: ReferenceTable,
    ctx: &ModelContext<'_>,
) -> Result<TableComparison> {
    let primes = ctx.primes.ok_or_else(|| {
        Error::invalid_state("reproducing a reference table requires a prime table".to_string())
    })?;
    let (headers, expected_rows) = parse_reference(table.raw_csv())?;
    let columns = table.columns();
    let mut wanted: Vec<&str> = vec!["n", "true_pi"];
    if table == ReferenceTable::One {
        wanted.push("baseline");
    }
    wanted.extend(columns.iter().map(|(name, _)| *name));
    if headers != wanted {
        return Err(Error::invalid_state(format!(
            "reference table {} has unexpected columns {headers:?}",
            table.number()
        )));
    }

    let xs: Vec<u64> = expected_rows
        .iter()
        .map(|row| {
            row[0].parse::<u64>().map_err(|_| {
                Error::invalid_state(format!("bad checkpoint {:?} in reference data", row[0]))
            })
        })
        .collect::<Result<_>>()?;
    let max_x = *xs.last().ok_or_else(|| {
        Error::invalid_state("reference table data has no rows".to_string())
    })?;

    let model_columns: Vec<Vec<u64>> = columns
        .par_iter()
        .map(|(_, params)| {
            let seq = ModelGenerator::new(*params, *ctx)?.sequence_up_to(max_x)?;
            Ok(xs.iter().map(|&x| seq.count_up_to(x)).collect())
        })
        .collect::<Result<_>>()?;

    let mut computed_rows = Vec::with_capacity(xs.len());
    for (i, &x) in xs.iter().enumerate() {
        let mut row = vec![x.to_string(), primes.prime_pi(x)?.to_string()];
        if table == ReferenceTable::One {
            row.push(format_baseline(pnt_baseline(x)?));
        }
        for column in &model_columns {
            row.push(column[i].to_string());
        }
        computed_rows.push(row);
    }

    let mut mismatches = Vec::new();
    for (expected, computed) in expected_rows.iter().zip(&computed_rows) {
        let x: u64 = expected[0].parse().expect("validated above");
        for (j, header) in headers.iter().enumerate() {
            let matches = if header == "baseline" {
                let e: f64 = expected[j].parse().map_err(|_| {
                    Error::invalid_state(format!("bad baseline {:?} in reference data", expected[j]))
                })?;
                let c: f64 = computed[j].parse().expect("format_baseline emits a number");
                (c - e).abs() <= 0.005 + 1e-9
            } else {
                expected[j] == computed[j]
            };
            if !matches {
                mismatches.push(TableMismatch {
                    x,
                    column: header.clone(),
                    expected: expected[j].clone(),
                    computed: computed[j].clone(),
                });
            }
        }
    }

    Ok(TableComparison {
        table,
        headers,
        expected_rows,
        computed_rows,
        mismatches,
    })
}
