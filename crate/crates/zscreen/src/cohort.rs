//! Domain types for longitudinal biomarker data: cohort file ingestion,
//! sequence assembly, season classification, and constant-sequence detection.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use chrono::{Datelike, NaiveDate};
use serde::Serialize;
use thiserror::Error;

/// Competition status of an individual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Amateur,
    Professional,
    Mixed,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Amateur => "amateur",
            Status::Professional => "professional",
            Status::Mixed => "mixed",
            Status::Unknown => "unknown",
        }
    }
}

/// Half-year season label, the binary covariate of the two-group model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeasonLabel {
    Summer,
    Winter,
}

impl SeasonLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            SeasonLabel::Summer => "summer",
            SeasonLabel::Winter => "winter",
        }
    }
}

/// When an observation was collected: either an exact calendar date or a
/// coarse (year, season) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum TimePoint {
    Date(NaiveDate),
    Season { year: i32, season: SeasonLabel },
}

impl TimePoint {
    /// Chronological sort key as (year, day-of-year). Season-coded points use
    /// fixed anchor ordinals (winter 60, summer 213) so that within a year
    /// winter sorts before summer; the anchors affect ordering only, never
    /// any statistic.
    pub fn sort_key(&self) -> (i32, u32) {
        match *self {
            TimePoint::Date(d) => (d.year(), d.ordinal()),
            TimePoint::Season { year, season } => match season {
                SeasonLabel::Winter => (year, 60),
                SeasonLabel::Summer => (year, 213),
            },
        }
    }

    /// Season of the time point, derived from the date when exact.
    pub fn season(&self) -> SeasonLabel {
        match *self {
            TimePoint::Date(d) => classify_season(d),
            TimePoint::Season { season, .. } => season,
        }
    }

    /// Calendar date, when the point carries one.
    pub fn date(&self) -> Option<NaiveDate> {
        match *self {
            TimePoint::Date(d) => Some(d),
            TimePoint::Season { .. } => None,
        }
    }
}

/// One monitored person.
#[derive(Debug, Clone, Serialize)]
pub struct Individual {
    pub id: String,
    pub status: Status,
    pub disciplines: BTreeSet<String>,
}

/// One (individual, biomarker, value, time) measurement.
#[derive(Debug, Clone, Serialize)]
pub struct Observation {
    pub individual_id: String,
    pub biomarker: String,
    pub value: f64,
    pub time: TimePoint,
    /// Ordinal of this observation within its (individual, biomarker) series,
    /// in input-file order; used as a stable tie-break for equal time points.
    pub collection_index: usize,
}

/// Time-ordered values of one biomarker for one individual.
#[derive(Debug, Clone, Serialize)]
pub struct Sequence {
    pub individual_id: String,
    pub biomarker: String,
    pub values: Vec<f64>,
    pub times: Vec<TimePoint>,
}

impl Sequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// True when every value is bit-identical.
    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// True when every time point carries an exact calendar date.
    pub fn has_calendar_dates(&self) -> bool {
        self.times.iter().all(|t| t.date().is_some())
    }
}

/// A parsed cohort: individuals plus their observations.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Cohort {
    pub individuals: BTreeMap<String, Individual>,
    pub observations: Vec<Observation>,
}

impl Cohort {
    /// All biomarker names present, sorted.
    pub fn biomarkers(&self) -> BTreeSet<String> {
        self.observations
            .iter()
            .map(|o| o.biomarker.clone())
            .collect()
    }
}

/// A malformed input row, kept for reporting instead of aborting the parse.
#[derive(Debug, Clone, Serialize)]
pub struct RejectedRow {
    pub line_number: u64,
    pub reason: String,
}

/// Result of parsing a cohort file: the well-formed rows plus the rejects.
#[derive(Debug, Clone, Serialize)]
pub struct ParseOutcome {
    pub cohort: Cohort,
    pub rejects: Vec<RejectedRow>,
}

/// Sequences flagged as constant, with the eligible count behind the
/// proportion.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantSequenceReport {
    /// (individual_id, biomarker) of each flagged sequence.
    pub flagged: Vec<(String, String)>,
    pub eligible: usize,
    pub proportion: f64,
}

#[derive(Debug, Error)]
pub enum CohortError {
    #[error("missing mandatory column `{0}` in header")]
    MissingColumn(&'static str),
    #[error("header must contain `date` or both `season` and `year`")]
    MissingTimeColumns,
    #[error("empty input: no header row")]
    EmptyInput,
    #[error("min_n must be at least 2, got {0}")]
    InvalidMinN(usize),
}

struct ColumnMap {
    individual_id: usize,
    biomarker: usize,
    value: usize,
    date: Option<usize>,
    season: Option<usize>,
    year: Option<usize>,
    status: Option<usize>,
    discipline: Option<usize>,
}

impl ColumnMap {
    fn from_headers(headers: &csv::StringRecord) -> Result<Self, CohortError> {
        let find = |name: &str| headers.iter().position(|h| h.trim() == name);
        let map = ColumnMap {
            individual_id: find("individual_id").ok_or(CohortError::MissingColumn("individual_id"))?,
            biomarker: find("biomarker").ok_or(CohortError::MissingColumn("biomarker"))?,
            value: find("value").ok_or(CohortError::MissingColumn("value"))?,
            date: find("date"),
            season: find("season"),
            year: find("year"),
            status: find("status"),
            discipline: find("discipline"),
        };
        if map.date.is_none() && (map.season.is_none() || map.year.is_none()) {
            return Err(CohortError::MissingTimeColumns);
        }
        Ok(map)
    }
}

fn field(record: &csv::StringRecord, idx: Option<usize>) -> Option<&str> {
    idx.and_then(|i| record.get(i))
        .map(str::trim)
        .filter(|s| !s.is_empty())
}

fn parse_time(
    record: &csv::StringRecord,
    cols: &ColumnMap,
) -> Result<TimePoint, String> {
    let date = field(record, cols.date);
    let season = field(record, cols.season);
    let year = field(record, cols.year);

    match (date, season, year) {
        (Some(d), None, None) => NaiveDate::parse_from_str(d, "%Y-%m-%d")
            .map(TimePoint::Date)
            .map_err(|_| format!("unparseable date `{d}` (expected YYYY-MM-DD)")),
        (None, Some(s), Some(y)) => {
            let season = match s {
                "summer" => SeasonLabel::Summer,
                "winter" => SeasonLabel::Winter,
                other => return Err(format!("unknown season `{other}`")),
            };
            let year: i32 = y
                .parse()
                .map_err(|_| format!("unparseable year `{y}`"))?;
            Ok(TimePoint::Season { year, season })
        }
        (Some(_), s, y) if s.is_some() || y.is_some() => {
            Err("ambiguous time: both date and season/year populated".to_string())
        }
        (None, Some(_), None) => Err("season given without year".to_string()),
        (None, None, Some(_)) => Err("year given without season".to_string()),
        (None, None, None) => Err("missing time: no date and no season/year".to_string()),
        (Some(_), _, _) => unreachable!("covered by the ambiguous-time arm"),
    }
}

fn parse_status(s: &str) -> Result<Status, String> {
    match s {
        "amateur" => Ok(Status::Amateur),
        "professional" => Ok(Status::Professional),
        "mixed" => Ok(Status::Mixed),
        "unknown" => Ok(Status::Unknown),
        other => Err(format!("unknown status `{other}`")),
    }
}

fn merge_status(current: Status, incoming: Status) -> Status {
    match (current, incoming) {
        (s, Status::Unknown) => s,
        (Status::Unknown, s) => s,
        (a, b) if a == b => a,
        _ => Status::Mixed,
    }
}

/// Parses delimited cohort text (comma separator, UTF-8, header row).
///
/// Well-formed rows become observations; malformed rows are collected into a
/// rejects list carrying their line numbers. Missing mandatory columns are a
/// hard error.
pub fn parse_cohort(text: &str) -> Result<ParseOutcome, CohortError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let headers = reader.headers().map_err(|_| CohortError::EmptyInput)?.clone();
    if headers.is_empty() || (headers.len() == 1 && headers[0].is_empty()) {
        return Err(CohortError::EmptyInput);
    }
    let cols = ColumnMap::from_headers(&headers)?;

    let mut cohort = Cohort::default();
    let mut rejects = Vec::new();
    let mut series_counters: BTreeMap<(String, String), usize> = BTreeMap::new();

    for (record_idx, result) in reader.records().enumerate() {
        let record = match result {
            Ok(r) => r,
            Err(e) => {
                let line = e
                    .position()
                    .map(csv::Position::line)
                    .unwrap_or(record_idx as u64 + 2);
                rejects.push(RejectedRow {
                    line_number: line,
                    reason: format!("malformed record: {e}"),
                });
                continue;
            }
        };
        let line = record
            .position()
            .map(csv::Position::line)
            .unwrap_or(record_idx as u64 + 2);
        let reject = |reason: String, rejects: &mut Vec<RejectedRow>| {
            rejects.push(RejectedRow {
                line_number: line,
                reason,
            });
        };

        let id = match field(&record, Some(cols.individual_id)) {
            Some(s) => s.to_string(),
            None => {
                reject("empty individual_id".to_string(), &mut rejects);
                continue;
            }
        };
        let biomarker = match field(&record, Some(cols.biomarker)) {
            Some(s) => s.to_string(),
            None => {
                reject("empty biomarker".to_string(), &mut rejects);
                continue;
            }
        };
        let value = match field(&record, Some(cols.value)) {
            Some(raw) => match raw.parse::<f64>() {
                Ok(v) if v.is_finite() => v,
                Ok(_) => {
                    reject(format!("non-finite value `{raw}`"), &mut rejects);
                    continue;
                }
                Err(_) => {
                    reject(format!("unparseable value `{raw}`"), &mut rejects);
                    continue;
                }
            },
            None => {
                reject("empty value".to_string(), &mut rejects);
                continue;
            }
        };
        let time = match parse_time(&record, &cols) {
            Ok(t) => t,
            Err(reason) => {
                reject(reason, &mut rejects);
                continue;
            }
        };
        let status = match field(&record, cols.status) {
            Some(raw) => match parse_status(raw) {
                Ok(s) => s,
                Err(reason) => {
                    reject(reason, &mut rejects);
                    continue;
                }
            },
            None => Status::Unknown,
        };
        let discipline = field(&record, cols.discipline).map(str::to_string);

        let individual = cohort
            .individuals
            .entry(id.clone())
            .or_insert_with(|| Individual {
                id: id.clone(),
                status: Status::Unknown,
                disciplines: BTreeSet::new(),
            });
        individual.status = merge_status(individual.status, status);
        if let Some(d) = discipline {
            individual.disciplines.insert(d);
        }

        let counter = series_counters
            .entry((id.clone(), biomarker.clone()))
            .or_insert(0);
        let collection_index = *counter;
        *counter += 1;

        cohort.observations.push(Observation {
            individual_id: id,
            biomarker,
            value,
            time,
            collection_index,
        });
    }

    Ok(ParseOutcome { cohort, rejects })
}

/// Builds one time-ordered sequence per individual holding at least one
/// observation of `biomarker`. Equal time points keep input-file order.
pub fn build_sequences(cohort: &Cohort, biomarker: &str) -> Vec<Sequence> {
    let mut per_individual: BTreeMap<&str, Vec<&Observation>> = BTreeMap::new();
    for obs in &cohort.observations {
        if obs.biomarker == biomarker {
            per_individual
                .entry(obs.individual_id.as_str())
                .or_default()
                .push(obs);
        }
    }

    per_individual
        .into_iter()
        .map(|(id, mut obs)| {
            obs.sort_by_key(|o| (o.time.sort_key(), o.collection_index));
            Sequence {
                individual_id: id.to_string(),
                biomarker: biomarker.to_string(),
                values: obs.iter().map(|o| o.value).collect(),
                times: obs.iter().map(|o| o.time).collect(),
            }
        })
        .collect()
}

/// Summer runs from 03-20 through 09-22, both endpoints included; the rest of
/// the year is winter.
pub fn classify_season(date: NaiveDate) -> SeasonLabel {
    let md = (date.month(), date.day());
    if ((3, 20)..=(9, 22)).contains(&md) {
        SeasonLabel::Summer
    } else {
        SeasonLabel::Winter
    }
}

/// Flags sequences of length at least `min_n` whose values are all exactly
/// equal, and reports the flagged proportion among eligible sequences.
pub fn detect_constant_sequences(
    sequences: &[Sequence],
    min_n: usize,
) -> Result<ConstantSequenceReport, CohortError> {
    if min_n < 2 {
        return Err(CohortError::InvalidMinN(min_n));
    }
    let eligible: Vec<&Sequence> = sequences.iter().filter(|s| s.len() >= min_n).collect();
    let flagged: Vec<(String, String)> = eligible
        .iter()
        .filter(|s| s.is_constant())
        .map(|s| (s.individual_id.clone(), s.biomarker.clone()))
        .collect();
    let proportion = if eligible.is_empty() {
        0.0
    } else {
        flagged.len() as f64 / eligible.len() as f64
    };
    Ok(ConstantSequenceReport {
        flagged,
        eligible: eligible.len(),
        proportion,
    })
}
