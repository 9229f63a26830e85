//! The five screening statistics: last-observation Student test, max
//! leave-one-out outlier, abnormal-subsequence scan, multivariate extension,
//! and linear-model studentized residuals, plus Pearson correlation.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, StudentsT};
use thiserror::Error;

use crate::cohort::TimePoint;
use crate::linalg;

/// Which statistic a result came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StatKind {
    T0,
    T1,
    T2,
    T3,
    T4A,
    T4B,
    T4C,
}

impl StatKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StatKind::T0 => "t0",
            StatKind::T1 => "t1",
            StatKind::T2 => "t2",
            StatKind::T3 => "t3",
            StatKind::T4A => "t4a",
            StatKind::T4B => "t4b",
            StatKind::T4C => "t4c",
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "t0" => Ok(StatKind::T0),
            "t1" => Ok(StatKind::T1),
            "t2" => Ok(StatKind::T2),
            "t3" => Ok(StatKind::T3),
            "t4a" => Ok(StatKind::T4A),
            "t4b" => Ok(StatKind::T4B),
            "t4c" => Ok(StatKind::T4C),
            other => Err(format!("unknown statistic kind `{other}`")),
        }
    }
}

/// Where the extremal deviation sits: a single 1-based index, or a 1-based
/// inclusive interval for the subsequence statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Index(usize),
    Interval { start: usize, end: usize },
}

/// Annotations attached to a statistic value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StatNote {
    /// All values bit-identical: statistic is 0 by convention.
    ConstantSequence,
    /// A denominator vanished with a nonzero deviation: statistic is +inf.
    InfiniteStatistic,
}

pub(crate) fn serialize_value<S: serde::Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else if *v > 0.0 {
        s.serialize_str("inf")
    } else {
        s.serialize_str("-inf")
    }
}

/// Value and location of one statistic on one sequence.
#[derive(Debug, Clone, Serialize)]
pub struct StatResult {
    pub kind: StatKind,
    /// Nonnegative for the max statistics; signed t for the T0 test.
    #[serde(serialize_with = "serialize_value")]
    pub value: f64,
    pub location: Location,
    pub n: usize,
    /// Student degrees of freedom (T0 only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub df: Option<usize>,
    /// Point dimension d (T3) or design column count p (T4).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<StatNote>,
}

#[derive(Debug, Error)]
pub enum StatError {
    #[error("{kind} needs at least {min} observations, got {n}")]
    TooShort {
        kind: StatKind,
        n: usize,
        min: usize,
    },
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("singular covariance when observation {index} is removed")]
    SingularCovariance { index: usize },
    #[error("design matrix is rank deficient")]
    RankDeficient,
    #[error("design matrix loses rank when observation {index} is removed")]
    RankDeficientDeleted { index: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ineligible design: {0}")]
    IneligibleDesign(String),
}

fn all_equal(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// Tests the last observation against the baseline of the first n-1: the
/// signed t statistic with n-2 degrees of freedom.
pub fn t0_last(values: &[f64]) -> Result<StatResult, StatError> {
    let n = values.len();
    if n < 3 {
        return Err(StatError::TooShort {
            kind: StatKind::T0,
            n,
            min: 3,
        });
    }
    let prior = &values[..n - 1];
    if all_equal(prior) {
        return Err(StatError::Degenerate(
            "first n-1 observations have zero variance",
        ));
    }
    let m = prior.len();
    let mean: f64 = prior.iter().sum::<f64>() / m as f64;
    let ss: f64 = prior.iter().map(|x| (x - mean) * (x - mean)).sum();
    if ss <= 0.0 {
        return Err(StatError::Degenerate(
            "first n-1 observations have zero variance",
        ));
    }
    let s2 = ss / (n - 2) as f64;
    let t = (values[n - 1] - mean) / (s2 * (1.0 + 1.0 / (n as f64 - 1.0))).sqrt();
    Ok(StatResult {
        kind: StatKind::T0,
        value: t,
        location: Location::Index(n),
        n,
        df: Some(n - 2),
        dim: None,
        notes: Vec::new(),
    })
}

/// Student t cumulative distribution function.
pub fn student_cdf(t: f64, df: usize) -> f64 {
    assert!(df >= 1, "Student CDF requires df >= 1");
    StudentsT::new(0.0, 1.0, df as f64)
        .expect("valid Student parameters")
        .cdf(t)
}

/// Two-sided p-value for an observed Student t.
pub fn student_two_sided_p(t: f64, df: usize) -> f64 {
    2.0 * (1.0 - student_cdf(t.abs(), df))
}

/// Upper quantile used as the two-sided critical value at level `alpha`.
pub fn student_critical(alpha: f64, df: usize) -> f64 {
    assert!(df >= 1, "Student quantile requires df >= 1");
    StudentsT::new(0.0, 1.0, df as f64)
        .expect("valid Student parameters")
        .inverse_cdf(1.0 - alpha / 2.0)
}

/// Max leave-one-out outlier statistic: each observation standardized
/// against the mean and standard deviation of the others.
pub fn t1_max_outlier(values: &[f64]) -> Result<StatResult, StatError> {
    let n = values.len();
    if n < 3 {
        return Err(StatError::TooShort {
            kind: StatKind::T1,
            n,
            min: 3,
        });
    }
    if all_equal(values) {
        return Ok(StatResult {
            kind: StatKind::T1,
            value: 0.0,
            location: Location::Index(1),
            n,
            df: None,
            dim: None,
            notes: vec![StatNote::ConstantSequence],
        });
    }

    let nf = n as f64;
    let scale = 1.0 + 1.0 / (nf - 1.0);
    let mut best = f64::NEG_INFINITY;
    let mut best_i = 0;
    let mut infinite = false;

    for i in 0..n {
        let mut sum = 0.0;
        for (j, &x) in values.iter().enumerate() {
            if j != i {
                sum += x;
            }
        }
        let mean = sum / (nf - 1.0);
        let mut ss = 0.0;
        let mut deleted_constant = true;
        let mut first_other = f64::NAN;
        for (j, &x) in values.iter().enumerate() {
            if j != i {
                ss += (x - mean) * (x - mean);
                if first_other.is_nan() {
                    first_other = x;
                } else if x != first_other {
                    deleted_constant = false;
                }
            }
        }
        let term = if deleted_constant || ss <= 0.0 {
            if values[i] == first_other {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            let s2 = ss / (nf - 2.0);
            (values[i] - mean).abs() / (s2 * scale).sqrt()
        };
        if term > best {
            best = term;
            best_i = i;
            if term.is_infinite() {
                infinite = true;
                break;
            }
        }
    }

    Ok(StatResult {
        kind: StatKind::T1,
        value: best,
        location: Location::Index(best_i + 1),
        n,
        df: None,
        dim: None,
        notes: if infinite {
            vec![StatNote::InfiniteStatistic]
        } else {
            Vec::new()
        },
    })
}

/// Abnormal-subsequence statistic: the two-sample mean contrast between a
/// contiguous interval and its complement, maximized over all intervals of
/// length 1 to n-1.
pub fn t2_subsequence(values: &[f64]) -> Result<StatResult, StatError> {
    let n = values.len();
    if n < 4 {
        return Err(StatError::TooShort {
            kind: StatKind::T2,
            n,
            min: 4,
        });
    }
    if all_equal(values) {
        return Ok(StatResult {
            kind: StatKind::T2,
            value: 0.0,
            location: Location::Interval { start: 1, end: 1 },
            n,
            df: None,
            dim: None,
            notes: vec![StatNote::ConstantSequence],
        });
    }

    let nf = n as f64;
    let grand_mean: f64 = values.iter().sum::<f64>() / nf;
    let centered: Vec<f64> = values.iter().map(|x| x - grand_mean).collect();

    let mut prefix = vec![0.0; n + 1];
    let mut prefix_sq = vec![0.0; n + 1];
    for (i, &c) in centered.iter().enumerate() {
        prefix[i + 1] = prefix[i] + c;
        prefix_sq[i + 1] = prefix_sq[i] + c * c;
    }
    let total = prefix[n];
    let total_sq = prefix_sq[n];

    // run_end[j]: last index of the maximal run of bit-equal values from j.
    let mut run_end = vec![0usize; n];
    run_end[n - 1] = n - 1;
    for j in (0..n - 1).rev() {
        run_end[j] = if values[j] == values[j + 1] {
            run_end[j + 1]
        } else {
            j
        };
    }
    let interval_constant = |a: usize, b: usize| run_end[a] >= b;
    let complement_constant = |a: usize, b: usize| {
        let left = a > 0;
        let right = b < n - 1;
        match (left, right) {
            (true, false) => run_end[0] >= a - 1,
            (false, true) => run_end[b + 1] == n - 1,
            (true, true) => run_end[0] >= a - 1 && run_end[b + 1] == n - 1 && values[0] == values[n - 1],
            (false, false) => unreachable!("interval length is below n"),
        }
    };

    let mut best = f64::NEG_INFINITY;
    let mut best_interval = (0usize, 0usize);
    let mut infinite = false;

    'outer: for a in 0..n {
        for b in a..n {
            let m = b - a + 1;
            if m == n {
                break;
            }
            let mf = m as f64;
            let cf = (n - m) as f64;
            let sum_i = prefix[b + 1] - prefix[a];
            let sumsq_i = prefix_sq[b + 1] - prefix_sq[a];
            let mean_i = sum_i / mf;
            let mean_c = (total - sum_i) / cf;
            let numer = (mean_i - mean_c).abs();

            if interval_constant(a, b) && complement_constant(a, b) {
                let comp_value = if a > 0 { values[0] } else { values[b + 1] };
                if values[a] != comp_value {
                    best = f64::INFINITY;
                    best_interval = (a, b);
                    infinite = true;
                    break 'outer;
                }
                continue;
            }

            let ss_i = (sumsq_i - mf * mean_i * mean_i).max(0.0);
            let ss_c = ((total_sq - sumsq_i) - cf * mean_c * mean_c).max(0.0);
            let pooled = (ss_i + ss_c) / (nf - 2.0);
            let term = if pooled <= 0.0 {
                if numer > 0.0 {
                    best = f64::INFINITY;
                    best_interval = (a, b);
                    infinite = true;
                    break 'outer;
                }
                continue;
            } else {
                numer / (pooled * (1.0 / mf + 1.0 / cf)).sqrt()
            };
            if term > best {
                best = term;
                best_interval = (a, b);
            }
        }
    }

    Ok(StatResult {
        kind: StatKind::T2,
        value: best,
        location: Location::Interval {
            start: best_interval.0 + 1,
            end: best_interval.1 + 1,
        },
        n,
        df: None,
        dim: None,
        notes: if infinite {
            vec![StatNote::InfiniteStatistic]
        } else {
            Vec::new()
        },
    })
}

/// Multivariate leave-one-out statistic: the largest Mahalanobis-type
/// deviation of a point from the others, scaled by (n-1)/(n d).
pub fn t3_multivariate(points: &[Vec<f64>]) -> Result<StatResult, StatError> {
    let n = points.len();
    if n == 0 {
        return Err(StatError::DimensionMismatch("no points".to_string()));
    }
    let d = points[0].len();
    if d == 0 {
        return Err(StatError::DimensionMismatch("zero-dimensional points".to_string()));
    }
    if let Some(bad) = points.iter().find(|p| p.len() != d) {
        return Err(StatError::DimensionMismatch(format!(
            "point of dimension {} in a d={} collection",
            bad.len(),
            d
        )));
    }
    if n < d + 2 {
        return Err(StatError::TooShort {
            kind: StatKind::T3,
            n,
            min: d + 2,
        });
    }

    let nf = n as f64;
    let mut total = vec![0.0; d];
    for p in points {
        for (t, &v) in total.iter_mut().zip(p) {
            *t += v;
        }
    }

    let divisor = (n - 1 - d) as f64;
    let mut best = f64::NEG_INFINITY;
    let mut best_i = 0;

    for (i, xi) in points.iter().enumerate() {
        let mean: Vec<f64> = total
            .iter()
            .zip(xi)
            .map(|(&t, &v)| (t - v) / (nf - 1.0))
            .collect();
        let mut cov = vec![0.0; d * d];
        for (j, xj) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let dev: Vec<f64> = xj.iter().zip(&mean).map(|(&v, &m)| v - m).collect();
            for a in 0..d {
                for b in a..d {
                    cov[a * d + b] += dev[a] * dev[b];
                }
            }
        }
        for a in 0..d {
            for b in 0..a {
                cov[a * d + b] = cov[b * d + a];
            }
        }
        for c in cov.iter_mut() {
            *c /= divisor;
        }

        let diff: Vec<f64> = xi.iter().zip(&mean).map(|(&v, &m)| v - m).collect();
        let w = linalg::solve(&cov, d, &diff)
            .map_err(|_| StatError::SingularCovariance { index: i + 1 })?;
        let q = linalg::dot(&diff, &w);
        if q > best {
            best = q;
            best_i = i;
        }
    }

    Ok(StatResult {
        kind: StatKind::T3,
        value: (nf - 1.0) / (nf * d as f64) * best,
        location: Location::Index(best_i + 1),
        n,
        df: None,
        dim: Some(d),
        notes: Vec::new(),
    })
}

/// Regression design for the linear-model statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ModelKind {
    A,
    B,
    C,
}

impl ModelKind {
    pub fn stat_kind(self) -> StatKind {
        match self {
            ModelKind::A => StatKind::T4A,
            ModelKind::B => StatKind::T4B,
            ModelKind::C => StatKind::T4C,
        }
    }
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" | "A" => Ok(ModelKind::A),
            "b" | "B" => Ok(ModelKind::B),
            "c" | "C" => Ok(ModelKind::C),
            other => Err(format!("unknown model `{other}` (expected a, b, or c)")),
        }
    }
}

/// Row-major n x p design matrix for the linear-model statistic.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignMatrix {
    pub n: usize,
    pub p: usize,
    pub data: Vec<f64>,
    pub model: ModelKind,
}

impl DesignMatrix {
    /// Builds a design from explicit rows; any full-column-rank matrix is
    /// accepted.
    pub fn from_rows(model: ModelKind, rows: Vec<Vec<f64>>) -> Result<Self, StatError> {
        let n = rows.len();
        if n == 0 {
            return Err(StatError::DimensionMismatch("empty design".to_string()));
        }
        let p = rows[0].len();
        if p == 0 || rows.iter().any(|r| r.len() != p) {
            return Err(StatError::DimensionMismatch(
                "design rows must share one positive width".to_string(),
            ));
        }
        if p >= n {
            return Err(StatError::DimensionMismatch(format!(
                "design needs p < n, got p={p}, n={n}"
            )));
        }
        let data = rows.into_iter().flatten().collect();
        Ok(DesignMatrix { n, p, data, model })
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.p..(i + 1) * self.p]
    }
}

/// Builds the Model A/B/C design for a sequence's time points: an intercept
/// column, plus the season indicator (B) or the time covariate in years
/// since the first observation (C).
pub fn build_design(model: ModelKind, times: &[TimePoint]) -> Result<DesignMatrix, StatError> {
    let n = times.len();
    if n == 0 {
        return Err(StatError::DimensionMismatch("empty design".to_string()));
    }
    let rows: Vec<Vec<f64>> = match model {
        ModelKind::A => times.iter().map(|_| vec![1.0]).collect(),
        ModelKind::B => times
            .iter()
            .map(|t| {
                let s = match t.season() {
                    crate::cohort::SeasonLabel::Summer => 1.0,
                    crate::cohort::SeasonLabel::Winter => 0.0,
                };
                vec![1.0, s]
            })
            .collect(),
        ModelKind::C => {
            let dates: Option<Vec<_>> = times.iter().map(TimePoint::date).collect();
            let dates = dates.ok_or_else(|| {
                StatError::IneligibleDesign(
                    "model C requires calendar dates; sequence is season-coded".to_string(),
                )
            })?;
            let origin = dates[0];
            dates
                .iter()
                .map(|d| vec![1.0, (*d - origin).num_days() as f64 / 365.25])
                .collect()
        }
    };
    DesignMatrix::from_rows(model, rows)
}

/// Max externally studentized residual of the linear model `y = M theta + e`,
/// computed through the leave-one-out downdating identities.
pub fn t4_linear_model(values: &[f64], design: &DesignMatrix) -> Result<StatResult, StatError> {
    let n = design.n;
    let p = design.p;
    if values.len() != n {
        return Err(StatError::DimensionMismatch(format!(
            "{} values against an n={} design",
            values.len(),
            n
        )));
    }
    if n < p + 2 {
        return Err(StatError::TooShort {
            kind: design.model.stat_kind(),
            n,
            min: p + 2,
        });
    }

    let gram = linalg::gram(&design.data, n, p);
    let rhs = linalg::mat_t_vec(&design.data, n, p, values);
    let theta = linalg::solve(&gram, p, &rhs).map_err(|_| StatError::RankDeficient)?;

    let residuals: Vec<f64> = (0..n)
        .map(|i| values[i] - linalg::dot(design.row(i), &theta))
        .collect();
    let rss: f64 = residuals.iter().map(|e| e * e).sum();
    let deleted_df = (n - 1 - p) as f64;

    let mut best = f64::NEG_INFINITY;
    let mut best_i = 0;
    let mut infinite = false;

    for (i, &e) in residuals.iter().enumerate() {
        let li = design.row(i);
        let w = linalg::solve(&gram, p, li).map_err(|_| StatError::RankDeficient)?;
        let leverage = linalg::dot(li, &w);
        let one_minus_h = 1.0 - leverage;
        if one_minus_h <= 1e-12 {
            return Err(StatError::RankDeficientDeleted { index: i + 1 });
        }
        let rss_deleted = (rss - e * e / one_minus_h).max(0.0);
        let term = if rss_deleted <= 1e-15 * rss {
            if e == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            let s2 = rss_deleted / deleted_df;
            e.abs() / (s2 * one_minus_h).sqrt()
        };
        if term > best {
            best = term;
            best_i = i;
            if term.is_infinite() {
                infinite = true;
                break;
            }
        }
    }

    let mut notes = Vec::new();
    if all_equal(values) {
        notes.push(StatNote::ConstantSequence);
    }
    if infinite {
        notes.push(StatNote::InfiniteStatistic);
    }

    Ok(StatResult {
        kind: design.model.stat_kind(),
        value: best,
        location: Location::Index(best_i + 1),
        n,
        df: None,
        dim: Some(p),
        notes,
    })
}

/// Product-moment correlation of two paired samples.
pub fn pearson_r(x: &[f64], y: &[f64]) -> Result<f64, StatError> {
    if x.len() != y.len() {
        return Err(StatError::DimensionMismatch(format!(
            "paired samples of lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    let n = x.len();
    if n < 2 {
        return Err(StatError::DimensionMismatch(
            "correlation needs at least 2 pairs".to_string(),
        ));
    }
    let mx: f64 = x.iter().sum::<f64>() / n as f64;
    let my: f64 = y.iter().sum::<f64>() / n as f64;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
        sxy += (a - mx) * (b - my);
    }
    if sxx <= 0.0 || syy <= 0.0 {
        return Err(StatError::Degenerate("constant input to correlation"));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}
