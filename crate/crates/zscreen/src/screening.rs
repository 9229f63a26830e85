//! Cohort screening: eligibility rules per statistic, transformation of the
//! analyzed values, grouped tabulation of null quantiles, flagging, and the
//! grouped reporting, plus the within-individual correlation report.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::cohort::{build_sequences, Cohort, SeasonLabel, Sequence, TimePoint};
use crate::stats::{self, ModelKind, StatKind, StatResult};
use crate::tabulate::{self, NullDraws, NullModel, TableEntry, TabulateError};
use crate::transform::Transformation;

pub const DEFAULT_ALPHA: f64 = 0.05;
pub const DEFAULT_MIN_PAIRED: usize = 10;
pub const DEFAULT_CORRELATION_BINS: usize = 20;

/// Biomarker pairs whose within-individual correlation is reported by
/// default.
pub const DEFAULT_CORRELATION_PAIRS: [(&str, &str); 4] = [
    ("ferritin", "serum_iron"),
    ("erythrocytes", "hemoglobin"),
    ("erythrocytes", "hematocrit"),
    ("hemoglobin", "hematocrit"),
];

/// Everything a screening run depends on; embedded verbatim in the output.
#[derive(Debug, Clone, Serialize)]
pub struct ScreenConfig {
    pub kind: StatKind,
    /// One biomarker for the univariate statistics; one or more for the
    /// multivariate statistic, in point-coordinate order.
    pub biomarkers: Vec<String>,
    /// Transformation applied to each biomarker's values before screening.
    pub transformations: BTreeMap<String, Transformation>,
    pub alpha: f64,
    pub reps: usize,
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum ScreenError {
    #[error("no biomarkers given")]
    NoBiomarkers,
    #[error("biomarker `{0}` has no observations in the cohort")]
    UnknownBiomarker(String),
    #[error("no transformation specified for biomarker `{0}`")]
    MissingTransformation(String),
    #[error("{0} screens exactly one biomarker, got {1}")]
    WrongArity(StatKind, usize),
    #[error(transparent)]
    Tabulate(#[from] TabulateError),
}

/// Screening outcome for one eligible sequence.
#[derive(Debug, Clone, Serialize)]
pub struct SequenceScreen {
    pub individual_id: String,
    pub biomarker: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<StatResult>,
    /// Transformation or statistic failure; the sequence stays in the
    /// denominator but cannot be flagged.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantile: Option<f64>,
    /// Monte Carlo p-value, or the exact Student p for the last-value test.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_value: Option<f64>,
    pub flagged: bool,
}

/// A sequence excluded from screening, with the rule it failed.
#[derive(Debug, Clone, Serialize)]
pub struct IneligibleSequence {
    pub individual_id: String,
    pub biomarker: String,
    pub n: usize,
    pub reason: String,
}

/// Flagged-over-eligible count with its fixed rendering.
#[derive(Debug, Clone, Serialize)]
pub struct GroupCount {
    pub flagged: usize,
    pub eligible: usize,
    pub display: String,
}

impl GroupCount {
    pub fn new(flagged: usize, eligible: usize) -> Self {
        let display = if eligible == 0 {
            "0/0".to_string()
        } else {
            format!(
                "{}/{} ({:.2})",
                flagged,
                eligible,
                100.0 * flagged as f64 / eligible as f64
            )
        };
        GroupCount {
            flagged,
            eligible,
            display,
        }
    }
}

/// Full output of one screening run.
#[derive(Debug, Clone, Serialize)]
pub struct ScreeningReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: ScreenConfig,
    pub overall: GroupCount,
    pub by_status: BTreeMap<String, GroupCount>,
    pub by_discipline: BTreeMap<String, GroupCount>,
    pub sequences: Vec<SequenceScreen>,
    pub ineligible: Vec<IneligibleSequence>,
    /// Null quantiles tabulated for this run.
    pub tables: Vec<TableEntry>,
}

impl ScreeningReport {
    /// Tab-delimited summary for terminal output.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut lines = vec![
            format!("kind\t{}", self.config.kind),
            format!("alpha\t{}", self.config.alpha),
            format!("seed\t{}", self.config.seed),
            format!("overall\t{}", self.overall.display),
        ];
        for (status, count) in &self.by_status {
            lines.push(format!("status:{status}\t{}", count.display));
        }
        for (group, count) in &self.by_discipline {
            lines.push(format!("discipline:{group}\t{}", count.display));
        }
        let errors = self
            .sequences
            .iter()
            .filter(|s| s.error.is_some())
            .count();
        lines.push(format!("ineligible\t{}", self.ineligible.len()));
        lines.push(format!("errors\t{errors}"));
        lines
    }
}

/// One individual's same-time-point value tuples across several biomarkers.
#[derive(Debug, Clone, Serialize)]
pub struct VectorSequence {
    pub individual_id: String,
    pub times: Vec<TimePoint>,
    pub points: Vec<Vec<f64>>,
}

type TimeKey = (i32, u32, u8);
type ValuesByTime = BTreeMap<TimeKey, (f64, TimePoint)>;

fn time_key(t: &TimePoint) -> TimeKey {
    let (year, ord) = t.sort_key();
    let encoding = match t {
        TimePoint::Date(_) => 0,
        TimePoint::Season { .. } => 1,
    };
    (year, ord, encoding)
}

/// Joins the biomarkers on identical time points per individual: a tuple
/// exists where every biomarker has an observation at that time point (the
/// first of any duplicates). Individuals missing a biomarker entirely keep
/// an empty tuple list.
pub fn assemble_tuples(cohort: &Cohort, biomarkers: &[String]) -> Vec<VectorSequence> {
    let per_biomarker: Vec<BTreeMap<String, ValuesByTime>> =
        biomarkers
            .iter()
            .map(|b| {
                build_sequences(cohort, b)
                    .into_iter()
                    .map(|seq| {
                        let mut by_time = BTreeMap::new();
                        for (&v, &t) in seq.values.iter().zip(&seq.times) {
                            by_time.entry(time_key(&t)).or_insert((v, t));
                        }
                        (seq.individual_id, by_time)
                    })
                    .collect()
            })
            .collect();

    let ids: BTreeSet<&String> = per_biomarker.iter().flat_map(|m| m.keys()).collect();
    ids.into_iter()
        .map(|id| {
            let mut times = Vec::new();
            let mut points = Vec::new();
            if let Some(first) = per_biomarker[0].get(id) {
                'time: for (key, &(v0, t0)) in first {
                    let mut point = Vec::with_capacity(biomarkers.len());
                    point.push(v0);
                    for other in &per_biomarker[1..] {
                        match other.get(id).and_then(|m| m.get(key)) {
                            Some(&(v, _)) => point.push(v),
                            None => continue 'time,
                        }
                    }
                    times.push(t0);
                    points.push(point);
                }
            }
            VectorSequence {
                individual_id: id.clone(),
                times,
                points,
            }
        })
        .collect()
}

enum Prepared {
    Univariate(Vec<f64>, Vec<TimePoint>),
    Multivariate(Vec<Vec<f64>>),
}

struct Item {
    individual_id: String,
    biomarker: String,
    n: usize,
    outcome: Result<Prepared, String>,
}

fn eligibility_failure(kind: StatKind, n: usize, times: &[TimePoint]) -> Option<String> {
    let min = match kind {
        StatKind::T0 | StatKind::T1 | StatKind::T4A => 3,
        StatKind::T2 | StatKind::T4B | StatKind::T4C => 4,
        StatKind::T3 => unreachable!("multivariate eligibility is length-only"),
    };
    if n < min {
        return Some(format!("needs at least {min} observations, got {n}"));
    }
    if kind == StatKind::T4B {
        let winters = times
            .iter()
            .filter(|t| t.season() == SeasonLabel::Winter)
            .count();
        let summers = n - winters;
        if winters < 2 || summers < 2 {
            return Some(format!(
                "needs at least 2 observations per season, got {winters} winter and {summers} summer"
            ));
        }
    }
    if kind == StatKind::T4C && !times.iter().all(|t| t.date().is_some()) {
        return Some("needs calendar dates on every observation".to_string());
    }
    None
}

fn prepare_univariate(
    kind: StatKind,
    seq: &Sequence,
    transformation: Transformation,
) -> Result<Item, IneligibleSequence> {
    if let Some(reason) = eligibility_failure(kind, seq.len(), &seq.times) {
        return Err(IneligibleSequence {
            individual_id: seq.individual_id.clone(),
            biomarker: seq.biomarker.clone(),
            n: seq.len(),
            reason,
        });
    }
    let outcome = transformation
        .apply_slice(&seq.values)
        .map(|values| Prepared::Univariate(values, seq.times.clone()))
        .map_err(|e| e.to_string());
    Ok(Item {
        individual_id: seq.individual_id.clone(),
        biomarker: seq.biomarker.clone(),
        n: seq.len(),
        outcome,
    })
}

fn prepare_multivariate(
    vs: &VectorSequence,
    label: &str,
    biomarkers: &[String],
    transformations: &BTreeMap<String, Transformation>,
) -> Result<Item, IneligibleSequence> {
    let d = biomarkers.len();
    let n = vs.points.len();
    if n < d + 2 {
        return Err(IneligibleSequence {
            individual_id: vs.individual_id.clone(),
            biomarker: label.to_string(),
            n,
            reason: format!("needs at least {} complete tuples, got {n}", d + 2),
        });
    }
    let mut points = Vec::with_capacity(n);
    let mut failure = None;
    'points: for point in &vs.points {
        let mut transformed = Vec::with_capacity(d);
        for (value, biomarker) in point.iter().zip(biomarkers) {
            match transformations[biomarker].apply(*value) {
                Ok(v) => transformed.push(v),
                Err(e) => {
                    failure = Some(format!("{biomarker}: {e}"));
                    break 'points;
                }
            }
        }
        points.push(transformed);
    }
    Ok(Item {
        individual_id: vs.individual_id.clone(),
        biomarker: label.to_string(),
        n,
        outcome: match failure {
            Some(reason) => Err(reason),
            None => Ok(Prepared::Multivariate(points)),
        },
    })
}

fn compute_result(
    kind: StatKind,
    prepared: &Prepared,
    d: usize,
) -> Result<(StatResult, Option<NullModel>), String> {
    match (kind, prepared) {
        (StatKind::T0, Prepared::Univariate(values, _)) => stats::t0_last(values)
            .map(|r| (r, None))
            .map_err(|e| e.to_string()),
        (StatKind::T1, Prepared::Univariate(values, _)) => stats::t1_max_outlier(values)
            .map(|r| {
                let n = values.len();
                (r, Some(NullModel::T1 { n }))
            })
            .map_err(|e| e.to_string()),
        (StatKind::T2, Prepared::Univariate(values, _)) => stats::t2_subsequence(values)
            .map(|r| {
                let n = values.len();
                (r, Some(NullModel::T2 { n }))
            })
            .map_err(|e| e.to_string()),
        (StatKind::T3, Prepared::Multivariate(points)) => stats::t3_multivariate(points)
            .map(|r| {
                let n = points.len();
                (r, Some(NullModel::T3 { n, d }))
            })
            .map_err(|e| e.to_string()),
        (StatKind::T4A | StatKind::T4B | StatKind::T4C, Prepared::Univariate(values, times)) => {
            let model = match kind {
                StatKind::T4A => ModelKind::A,
                StatKind::T4B => ModelKind::B,
                _ => ModelKind::C,
            };
            let design = stats::build_design(model, times).map_err(|e| e.to_string())?;
            stats::t4_linear_model(values, &design)
                .map(|r| (r, Some(NullModel::T4 { design })))
                .map_err(|e| e.to_string())
        }
        _ => unreachable!("preparation matches the statistic kind"),
    }
}

/// Screens a cohort with the configured statistic: assembles and transforms
/// the eligible sequences, tabulates each distinct null once, flags values
/// above the upper-alpha quantile, and aggregates counts by competition
/// status and discipline group.
pub fn screen(cohort: &Cohort, config: &ScreenConfig) -> Result<ScreeningReport, ScreenError> {
    if config.biomarkers.is_empty() {
        return Err(ScreenError::NoBiomarkers);
    }
    if config.kind != StatKind::T3 && config.biomarkers.len() != 1 {
        return Err(ScreenError::WrongArity(
            config.kind,
            config.biomarkers.len(),
        ));
    }
    if !(config.alpha > 0.0 && config.alpha < 1.0) {
        return Err(TabulateError::InvalidAlpha(config.alpha).into());
    }
    let known = cohort.biomarkers();
    for b in &config.biomarkers {
        if !known.contains(b) {
            return Err(ScreenError::UnknownBiomarker(b.clone()));
        }
        if !config.transformations.contains_key(b) {
            return Err(ScreenError::MissingTransformation(b.clone()));
        }
    }

    let d = config.biomarkers.len();
    let mut items = Vec::new();
    let mut ineligible = Vec::new();
    if config.kind == StatKind::T3 {
        let label = config.biomarkers.join("+");
        for vs in assemble_tuples(cohort, &config.biomarkers) {
            match prepare_multivariate(&vs, &label, &config.biomarkers, &config.transformations) {
                Ok(item) => items.push(item),
                Err(excluded) => ineligible.push(excluded),
            }
        }
    } else {
        let transformation = config.transformations[&config.biomarkers[0]];
        for seq in build_sequences(cohort, &config.biomarkers[0]) {
            match prepare_univariate(config.kind, &seq, transformation) {
                Ok(item) => items.push(item),
                Err(excluded) => ineligible.push(excluded),
            }
        }
    }

    let mut draws_cache: BTreeMap<(StatKind, usize, usize, u64), NullDraws> = BTreeMap::new();
    let mut sequences = Vec::with_capacity(items.len());
    for item in items {
        let mut screen = SequenceScreen {
            individual_id: item.individual_id,
            biomarker: item.biomarker,
            n: item.n,
            result: None,
            error: None,
            quantile: None,
            p_value: None,
            flagged: false,
        };
        let computed = item
            .outcome
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|prepared| compute_result(config.kind, prepared, d));
        match computed {
            Err(reason) => screen.error = Some(reason),
            Ok((result, None)) => {
                let df = result.df.expect("the last-value test carries its df");
                let critical = stats::student_critical(config.alpha, df);
                screen.flagged = result.value.abs() > critical;
                screen.quantile = Some(critical);
                screen.p_value = Some(stats::student_two_sided_p(result.value, df));
                screen.result = Some(result);
            }
            Ok((result, Some(model))) => {
                let key = (model.kind(), model.n(), model.dim(), model.design_hash());
                let draws = match draws_cache.get(&key) {
                    Some(d) => d,
                    None => {
                        let d = tabulate::tabulate(&model, config.reps, config.seed)?;
                        draws_cache.entry(key).or_insert(d)
                    }
                };
                let quantile = draws.quantile(config.alpha)?;
                screen.flagged = result.value > quantile;
                screen.quantile = Some(quantile);
                screen.p_value = Some(draws.mc_p(result.value));
                screen.result = Some(result);
            }
        }
        sequences.push(screen);
    }

    let mut by_status: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut by_discipline: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut flagged_total = 0;
    for s in &sequences {
        let individual = &cohort.individuals[&s.individual_id];
        let discipline_group = match individual.disciplines.len() {
            0 => "none".to_string(),
            1 => individual.disciplines.iter().next().unwrap().clone(),
            _ => "multiple".to_string(),
        };
        let flagged = usize::from(s.flagged);
        flagged_total += flagged;
        let status_slot = by_status
            .entry(individual.status.as_str().to_string())
            .or_default();
        status_slot.0 += flagged;
        status_slot.1 += 1;
        let discipline_slot = by_discipline.entry(discipline_group).or_default();
        discipline_slot.0 += flagged;
        discipline_slot.1 += 1;
    }

    let tables = draws_cache
        .values()
        .map(|draws| TableEntry::from_draws(draws, config.alpha))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(ScreeningReport {
        schema_version: 1,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        overall: GroupCount::new(flagged_total, sequences.len()),
        by_status: by_status
            .into_iter()
            .map(|(k, (f, e))| (k, GroupCount::new(f, e)))
            .collect(),
        by_discipline: by_discipline
            .into_iter()
            .map(|(k, (f, e))| (k, GroupCount::new(f, e)))
            .collect(),
        sequences,
        ineligible,
        tables,
    })
}

/// Histogram of within-individual correlations for one biomarker pair.
#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub first: String,
    pub second: String,
    /// Individuals with enough paired observations to contribute.
    pub individuals: usize,
    /// Individuals skipped because one side was constant.
    pub degenerate: usize,
    /// Counts over equal-width bins spanning [-1, 1].
    pub histogram: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Within-individual correlation report across biomarker pairs.
#[derive(Debug, Clone, Serialize)]
pub struct CorrelationReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub min_paired: usize,
    pub bins: usize,
    pub pairs: Vec<PairReport>,
}

/// For each pair, computes the correlation of same-time-point observations
/// within each individual holding at least `min_paired` such pairs, and
/// histograms the coefficients over [-1, 1].
pub fn correlation_report(
    cohort: &Cohort,
    pairs: &[(String, String)],
    min_paired: usize,
    bins: usize,
) -> CorrelationReport {
    let bins = bins.max(1);
    let min_paired = min_paired.max(2);
    let reports = pairs
        .iter()
        .map(|(first, second)| {
            let mut histogram = vec![0usize; bins];
            let mut included = 0usize;
            let mut degenerate = 0usize;
            let mut r_sum = 0.0;
            let tuple_biomarkers = [first.clone(), second.clone()];
            for vs in assemble_tuples(cohort, &tuple_biomarkers) {
                if vs.points.len() < min_paired {
                    continue;
                }
                let x: Vec<f64> = vs.points.iter().map(|p| p[0]).collect();
                let y: Vec<f64> = vs.points.iter().map(|p| p[1]).collect();
                match stats::pearson_r(&x, &y) {
                    Ok(r) => {
                        let bin = (((r + 1.0) / 2.0 * bins as f64).floor() as usize)
                            .min(bins - 1);
                        histogram[bin] += 1;
                        included += 1;
                        r_sum += r;
                    }
                    Err(_) => degenerate += 1,
                }
            }
            PairReport {
                first: first.clone(),
                second: second.clone(),
                individuals: included,
                degenerate,
                histogram,
                mean_r: (included > 0).then(|| r_sum / included as f64),
                note: (included == 0).then(|| {
                    format!("no individuals with at least {min_paired} paired observations")
                }),
            }
        })
        .collect();
    CorrelationReport {
        schema_version: 1,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        min_paired,
        bins,
        pairs: reports,
    }
}
