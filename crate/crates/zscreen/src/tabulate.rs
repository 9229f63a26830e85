//! Monte Carlo tabulation of the null distributions: reproducible parallel
//! simulation, upper quantiles, Monte Carlo p-values, empirical calibration,
//! and a persistent quantile table.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use thiserror::Error;

use crate::stats::{
    self, DesignMatrix, StatError, StatKind,
};

/// Fewer replicates than this gives quantiles too noisy to screen against.
pub const MIN_REPS: usize = 10_000;
pub const DEFAULT_REPS: usize = 100_000;

/// Offset applied to the master seed so calibration draws never reuse the
/// tabulation streams.
const FRESH_SEED_OFFSET: u64 = 0x9E37_79B9_7F4A_7C15;

/// Cap on redraws when a simulated sample happens to be degenerate.
const MAX_REDRAWS: usize = 100;

#[derive(Debug, Error)]
pub enum TabulateError {
    #[error("need at least {MIN_REPS} replicates, got {0}")]
    TooFewReps(usize),
    #[error("alpha must be strictly between 0 and 1, got {0}")]
    InvalidAlpha(f64),
    #[error("need at least 1 fresh draw, got 0")]
    NoFreshDraws,
    #[error("replicate stream {stream} stayed degenerate after {MAX_REDRAWS} redraws")]
    DegenerateSimulations { stream: u64 },
    #[error(transparent)]
    Stat(#[from] StatError),
}

/// A null distribution to simulate: everything the statistic needs except
/// the standard normal values themselves.
#[derive(Debug, Clone)]
pub enum NullModel {
    T0 { n: usize },
    T1 { n: usize },
    T2 { n: usize },
    T3 { n: usize, d: usize },
    T4 { design: DesignMatrix },
}

impl NullModel {
    pub fn kind(&self) -> StatKind {
        match self {
            NullModel::T0 { .. } => StatKind::T0,
            NullModel::T1 { .. } => StatKind::T1,
            NullModel::T2 { .. } => StatKind::T2,
            NullModel::T3 { .. } => StatKind::T3,
            NullModel::T4 { design } => design.model.stat_kind(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            NullModel::T0 { n } | NullModel::T1 { n } | NullModel::T2 { n } | NullModel::T3 { n, .. } => *n,
            NullModel::T4 { design } => design.n,
        }
    }

    /// Point dimension (T3) or design width (T4); 0 for the univariate kinds.
    pub fn dim(&self) -> usize {
        match self {
            NullModel::T0 { .. } | NullModel::T1 { .. } | NullModel::T2 { .. } => 0,
            NullModel::T3 { d, .. } => *d,
            NullModel::T4 { design } => design.p,
        }
    }

    /// Identifies the concrete design a T4 table was simulated under; 0 for
    /// the design-free kinds.
    pub fn design_hash(&self) -> u64 {
        match self {
            NullModel::T4 { design } => design_hash(design),
            _ => 0,
        }
    }

    fn validate(&self) -> Result<(), StatError> {
        let (kind, n, min) = match self {
            NullModel::T0 { n } => (StatKind::T0, *n, 3),
            NullModel::T1 { n } => (StatKind::T1, *n, 3),
            NullModel::T2 { n } => (StatKind::T2, *n, 4),
            NullModel::T3 { n, d } => {
                if *d == 0 {
                    return Err(StatError::DimensionMismatch(
                        "zero-dimensional points".to_string(),
                    ));
                }
                (StatKind::T3, *n, *d + 2)
            }
            NullModel::T4 { design } => (design.model.stat_kind(), design.n, design.p + 2),
        };
        if n < min {
            return Err(StatError::TooShort { kind, n, min });
        }
        Ok(())
    }

    fn simulate(&self, rng: &mut ChaCha8Rng) -> Result<f64, StatError> {
        let n = self.n();
        match self {
            NullModel::T0 { .. } => {
                let values: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
                Ok(stats::t0_last(&values)?.value)
            }
            NullModel::T1 { .. } => {
                let values: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
                Ok(stats::t1_max_outlier(&values)?.value)
            }
            NullModel::T2 { .. } => {
                let values: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
                Ok(stats::t2_subsequence(&values)?.value)
            }
            NullModel::T3 { d, .. } => {
                let points: Vec<Vec<f64>> = (0..n)
                    .map(|_| (0..*d).map(|_| rng.sample(StandardNormal)).collect())
                    .collect();
                Ok(stats::t3_multivariate(&points)?.value)
            }
            NullModel::T4 { design } => {
                let values: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
                Ok(stats::t4_linear_model(&values, design)?.value)
            }
        }
    }
}

/// 64-bit FNV-1a over a canonical rendering of the design matrix.
pub fn design_hash(design: &DesignMatrix) -> u64 {
    let mut text = format!("{}x{};", design.n, design.p);
    for (i, &v) in design.data.iter().enumerate() {
        if i > 0 {
            text.push(',');
        }
        let v = if v == 0.0 { 0.0 } else { v };
        let _ = write!(text, "{v:.11e}");
    }
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for byte in text.bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// 1-based rank of the upper-alpha order statistic among `reps` sorted
/// draws: ceil((1 - alpha) * reps), computed so that decimal alphas land on
/// the intended integer.
fn quantile_rank(alpha: f64, reps: usize) -> usize {
    let product = alpha * reps as f64;
    let rounded = product.round();
    let cut = if (product - rounded).abs() < 1e-6 {
        rounded
    } else {
        product.floor()
    };
    (reps - cut as usize).clamp(1, reps)
}

/// Sorted null draws for one model, from which quantiles and Monte Carlo
/// p-values are read.
#[derive(Debug, Clone)]
pub struct NullDraws {
    pub kind: StatKind,
    pub n: usize,
    pub dim: usize,
    pub design_hash: u64,
    pub reps: usize,
    pub seed: u64,
    pub degenerate_redraws: usize,
    sorted: Vec<f64>,
}

impl NullDraws {
    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    /// Upper-alpha empirical quantile.
    pub fn quantile(&self, alpha: f64) -> Result<f64, TabulateError> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(TabulateError::InvalidAlpha(alpha));
        }
        Ok(self.sorted[quantile_rank(alpha, self.reps) - 1])
    }

    /// Monte Carlo p-value (1 + #{draws >= observed}) / (reps + 1).
    pub fn mc_p(&self, observed: f64) -> f64 {
        let below = self.sorted.partition_point(|&v| v < observed);
        (1 + self.reps - below) as f64 / (self.reps + 1) as f64
    }
}

fn replicate(model: &NullModel, seed: u64, stream: u64) -> Result<(f64, usize), TabulateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut redraws = 0;
    loop {
        match model.simulate(&mut rng) {
            Ok(v) if !v.is_nan() => return Ok((v, redraws)),
            Ok(_) | Err(StatError::Degenerate(_)) | Err(StatError::SingularCovariance { .. }) => {
                redraws += 1;
                if redraws > MAX_REDRAWS {
                    return Err(TabulateError::DegenerateSimulations { stream });
                }
            }
            Err(e) => return Err(e.into()),
        }
    }
}

/// Simulates `reps` independent replicates of the model's null statistic.
/// Replicate k draws from stream k of a counter-based generator seeded with
/// `seed`, so results are identical at any thread count.
pub fn tabulate(model: &NullModel, reps: usize, seed: u64) -> Result<NullDraws, TabulateError> {
    model.validate()?;
    if reps < MIN_REPS {
        return Err(TabulateError::TooFewReps(reps));
    }
    let drawn: Vec<(f64, usize)> = (0..reps as u64)
        .into_par_iter()
        .map(|k| replicate(model, seed, k))
        .collect::<Result<_, _>>()?;
    let degenerate_redraws = drawn.iter().map(|&(_, r)| r).sum();
    let mut sorted: Vec<f64> = drawn.into_iter().map(|(v, _)| v).collect();
    sorted.sort_by(|a, b| a.total_cmp(b));
    Ok(NullDraws {
        kind: model.kind(),
        n: model.n(),
        dim: model.dim(),
        design_hash: model.design_hash(),
        reps,
        seed,
        degenerate_redraws,
        sorted,
    })
}

/// Empirical size check of a tabulated (or exact) critical value against
/// fresh draws from the same null.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CalibrationOutcome {
    pub kind: StatKind,
    pub n: usize,
    pub dim: usize,
    pub alpha: f64,
    pub reps: usize,
    pub seed: u64,
    pub quantile: f64,
    /// True when the critical value comes from the closed-form Student null
    /// rather than simulation.
    pub exact: bool,
    pub fresh: usize,
    pub rejections: usize,
    pub rate: f64,
    pub degenerate_redraws: usize,
}

/// Rejection count of a given critical value against `fresh` new draws from
/// the model's null, simulated from an offset of `seed` so they never overlap
/// the tabulation streams. Returns the rejections and the degenerate redraws.
pub fn rejection_rate(
    model: &NullModel,
    quantile: f64,
    two_sided: bool,
    seed: u64,
    fresh: usize,
) -> Result<(usize, usize), TabulateError> {
    model.validate()?;
    if fresh == 0 {
        return Err(TabulateError::NoFreshDraws);
    }
    let fresh_seed = seed ^ FRESH_SEED_OFFSET;
    let draws: Vec<(f64, usize)> = (0..fresh as u64)
        .into_par_iter()
        .map(|k| replicate(model, fresh_seed, k))
        .collect::<Result<_, _>>()?;
    let rejections = draws
        .iter()
        .filter(|&&(v, _)| if two_sided { v.abs() > quantile } else { v > quantile })
        .count();
    Ok((rejections, draws.iter().map(|&(_, r)| r).sum()))
}

/// Tabulates the model at `seed`, then measures the rejection rate on
/// `fresh` new draws simulated from an offset seed. The last-value test uses
/// its exact Student critical value instead of simulation.
pub fn calibrate(
    model: &NullModel,
    reps: usize,
    alpha: f64,
    seed: u64,
    fresh: usize,
) -> Result<CalibrationOutcome, TabulateError> {
    model.validate()?;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(TabulateError::InvalidAlpha(alpha));
    }

    let exact = matches!(model, NullModel::T0 { .. });
    let (quantile, reps_used, redraws) = if exact {
        (stats::student_critical(alpha, model.n() - 2), 0, 0)
    } else {
        if reps < MIN_REPS {
            return Err(TabulateError::TooFewReps(reps));
        }
        let draws = tabulate(model, reps, seed)?;
        (draws.quantile(alpha)?, reps, draws.degenerate_redraws)
    };

    let (rejections, fresh_redraws) = rejection_rate(model, quantile, exact, seed, fresh)?;

    Ok(CalibrationOutcome {
        kind: model.kind(),
        n: model.n(),
        dim: model.dim(),
        alpha,
        reps: reps_used,
        seed,
        quantile,
        exact,
        fresh,
        rejections,
        rate: rejections as f64 / fresh as f64,
        degenerate_redraws: redraws + fresh_redraws,
    })
}

/// One persisted quantile: the full simulation identity plus the value.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct TableEntry {
    pub kind: StatKind,
    pub n: usize,
    pub dim: usize,
    pub design_hash: u64,
    pub alpha: f64,
    pub reps: usize,
    pub seed: u64,
    #[serde(serialize_with = "crate::stats::serialize_value")]
    pub quantile: f64,
}

impl TableEntry {
    pub fn from_draws(draws: &NullDraws, alpha: f64) -> Result<Self, TabulateError> {
        Ok(TableEntry {
            kind: draws.kind,
            n: draws.n,
            dim: draws.dim,
            design_hash: draws.design_hash,
            alpha,
            reps: draws.reps,
            seed: draws.seed,
            quantile: draws.quantile(alpha)?,
        })
    }

    fn same_key(&self, other: &TableEntry) -> bool {
        self.kind == other.kind
            && self.n == other.n
            && self.dim == other.dim
            && self.design_hash == other.design_hash
            && self.alpha.to_bits() == other.alpha.to_bits()
            && self.reps == other.reps
            && self.seed == other.seed
    }
}

const TABLE_MAGIC: &str = "zscreen-quantile-table v1";
const TABLE_COLUMNS: &str = "kind,n,d,design_hash,alpha,reps,seed,quantile";

#[derive(Debug, Error)]
pub enum TableError {
    #[error("table file: {0}")]
    Io(#[from] std::io::Error),
    #[error("not a quantile table: first line must be `{TABLE_MAGIC}`")]
    BadHeader,
    #[error("table line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

/// Renders entries in the flat text table format.
pub fn render_table(entries: &[TableEntry]) -> String {
    let mut out = String::new();
    out.push_str(TABLE_MAGIC);
    out.push('\n');
    out.push_str(TABLE_COLUMNS);
    out.push('\n');
    for e in entries {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            e.kind, e.n, e.dim, e.design_hash, e.alpha, e.reps, e.seed, e.quantile
        );
    }
    out
}

/// Parses the flat text table format. Every malformed input yields a
/// `TableError`, never a panic.
pub fn parse_table(text: &str) -> Result<Vec<TableEntry>, TableError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim_end() == TABLE_MAGIC => {}
        _ => return Err(TableError::BadHeader),
    }
    match lines.next() {
        Some((_, second)) if second.trim_end() == TABLE_COLUMNS => {}
        Some((line, _)) => {
            return Err(TableError::Malformed {
                line: line + 1,
                reason: format!("expected column header `{TABLE_COLUMNS}`"),
            })
        }
        None => {
            return Err(TableError::Malformed {
                line: 2,
                reason: format!("expected column header `{TABLE_COLUMNS}`"),
            })
        }
    }

    let mut entries = Vec::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        let row = raw.trim_end();
        if row.is_empty() {
            continue;
        }
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 8 {
            return Err(TableError::Malformed {
                line,
                reason: format!("expected 8 fields, got {}", fields.len()),
            });
        }
        let malformed = |reason: String| TableError::Malformed { line, reason };
        let kind: StatKind = fields[0].parse().map_err(&malformed)?;
        let n: usize = fields[1]
            .parse()
            .map_err(|_| malformed(format!("bad n `{}`", fields[1])))?;
        let dim: usize = fields[2]
            .parse()
            .map_err(|_| malformed(format!("bad d `{}`", fields[2])))?;
        let design_hash: u64 = fields[3]
            .parse()
            .map_err(|_| malformed(format!("bad design_hash `{}`", fields[3])))?;
        let alpha: f64 = fields[4]
            .parse()
            .map_err(|_| malformed(format!("bad alpha `{}`", fields[4])))?;
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(malformed(format!(
                "alpha must be strictly between 0 and 1, got {alpha}"
            )));
        }
        let reps: usize = fields[5]
            .parse()
            .map_err(|_| malformed(format!("bad reps `{}`", fields[5])))?;
        if reps == 0 {
            return Err(malformed("reps must be positive".to_string()));
        }
        let seed: u64 = fields[6]
            .parse()
            .map_err(|_| malformed(format!("bad seed `{}`", fields[6])))?;
        let quantile: f64 = fields[7]
            .parse()
            .map_err(|_| malformed(format!("bad quantile `{}`", fields[7])))?;
        if quantile.is_nan() {
            return Err(malformed("quantile must not be NaN".to_string()));
        }
        if n == 0 {
            return Err(malformed("n must be positive".to_string()));
        }
        entries.push(TableEntry {
            kind,
            n,
            dim,
            design_hash,
            alpha,
            reps,
            seed,
            quantile,
        });
    }
    Ok(entries)
}

/// Quantile table persisted as flat text, written atomically.
#[derive(Debug)]
pub struct TableStore {
    path: PathBuf,
    pub entries: Vec<TableEntry>,
}

impl TableStore {
    /// Opens a store; a missing file is an empty store.
    pub fn load(path: &Path) -> Result<Self, TableError> {
        let entries = match std::fs::read_to_string(path) {
            Ok(text) => parse_table(&text)?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Vec::new(),
            Err(e) => return Err(e.into()),
        };
        Ok(TableStore {
            path: path.to_path_buf(),
            entries,
        })
    }

    pub fn lookup(&self, key: &TableEntry) -> Option<f64> {
        self.entries
            .iter()
            .find(|e| e.same_key(key))
            .map(|e| e.quantile)
    }

    /// Inserts or replaces the entry with the same key.
    pub fn upsert(&mut self, entry: TableEntry) {
        match self.entries.iter_mut().find(|e| e.same_key(&entry)) {
            Some(existing) => *existing = entry,
            None => self.entries.push(entry),
        }
    }

    /// Writes the table to a sibling temp file, then renames it into place.
    pub fn save(&self) -> Result<(), TableError> {
        let tmp = self.path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, render_table(&self.entries))?;
        std::fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}
