//! Deterministic pointwise transformations used to bring biomarker sequences
//! close to normality before testing.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::cohort::Sequence;

/// One member of the transformation family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Transformation {
    Identity,
    /// mth root, 2 <= m <= 10.
    MthRoot(u32),
    Square,
    Log,
    LambertW0,
    /// Power transformation (x^lambda - 1)/lambda, lambda != 0.
    BoxCox(f64),
}

/// Ordered list of candidate transformations; selection ties break by order.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformationFamily {
    pub members: Vec<Transformation>,
}

impl TransformationFamily {
    /// The full default family: identity, roots m=2..10, square, log,
    /// Lambert W0, and the three Box-Cox constants.
    pub fn full() -> Self {
        let mut members = vec![Transformation::Identity];
        members.extend((2..=10).map(Transformation::MthRoot));
        members.push(Transformation::Square);
        members.push(Transformation::Log);
        members.push(Transformation::LambertW0);
        members.push(Transformation::BoxCox(-0.0606));
        members.push(Transformation::BoxCox(0.0202));
        members.push(Transformation::BoxCox(-0.3030));
        TransformationFamily { members }
    }

    pub fn single(t: Transformation) -> Self {
        TransformationFamily { members: vec![t] }
    }

    /// Parses a comma-separated list of serialized transformation names.
    pub fn parse_list(list: &str) -> Result<Self, TransformError> {
        let members = list
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<Vec<_>, _>>()?;
        if members.is_empty() {
            return Err(TransformError::UnknownName(list.to_string()));
        }
        Ok(TransformationFamily { members })
    }
}

#[derive(Debug, Error)]
pub enum TransformError {
    #[error("{transformation}: value {value} outside domain ({requirement})")]
    Domain {
        transformation: String,
        value: f64,
        requirement: &'static str,
    },
    #[error("{transformation}: value {value} at position {index} outside domain ({requirement})")]
    DomainAt {
        transformation: String,
        value: f64,
        index: usize,
        requirement: &'static str,
    },
    #[error("lambert_w0: argument {0} below the branch point -1/e")]
    BelowBranchPoint(f64),
    #[error("unknown transformation name `{0}`")]
    UnknownName(String),
    #[error("box_cox lambda must be finite and nonzero, got `{0}`")]
    InvalidLambda(String),
    #[error("mth root index must be in 2..=10, got {0}")]
    InvalidRoot(u32),
}

impl Transformation {
    fn domain_requirement(&self) -> &'static str {
        match self {
            Transformation::Identity => "any real",
            Transformation::MthRoot(_) | Transformation::Log | Transformation::BoxCox(_) => "x > 0",
            Transformation::Square | Transformation::LambertW0 => "x >= 0",
        }
    }

    /// True when `x` lies in this transformation's domain.
    pub fn admits(&self, x: f64) -> bool {
        match self {
            Transformation::Identity => true,
            Transformation::MthRoot(_) | Transformation::Log | Transformation::BoxCox(_) => x > 0.0,
            Transformation::Square | Transformation::LambertW0 => x >= 0.0,
        }
    }

    /// Applies the transformation to a single value.
    pub fn apply(&self, x: f64) -> Result<f64, TransformError> {
        if !self.admits(x) {
            return Err(TransformError::Domain {
                transformation: self.to_string(),
                value: x,
                requirement: self.domain_requirement(),
            });
        }
        Ok(match *self {
            Transformation::Identity => x,
            Transformation::MthRoot(m) => x.powf(1.0 / f64::from(m)),
            Transformation::Square => x * x,
            Transformation::Log => x.ln(),
            Transformation::LambertW0 => lambert_w0(x)?,
            Transformation::BoxCox(lambda) => (lambda * x.ln()).exp_m1() / lambda,
        })
    }

    /// Applies the transformation to a slice, reporting the 1-based position
    /// of the first out-of-domain value.
    pub fn apply_slice(&self, values: &[f64]) -> Result<Vec<f64>, TransformError> {
        values
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                self.apply(x).map_err(|e| match e {
                    TransformError::Domain {
                        transformation,
                        value,
                        requirement,
                    } => TransformError::DomainAt {
                        transformation,
                        value,
                        index: i + 1,
                        requirement,
                    },
                    other => other,
                })
            })
            .collect()
    }
}

/// Applies `t` to every value of a sequence, keeping times unchanged.
pub fn apply_sequence(t: Transformation, seq: &Sequence) -> Result<Sequence, TransformError> {
    Ok(Sequence {
        individual_id: seq.individual_id.clone(),
        biomarker: seq.biomarker.clone(),
        values: t.apply_slice(&seq.values)?,
        times: seq.times.clone(),
    })
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Transformation::Identity => write!(f, "identity"),
            Transformation::MthRoot(m) => write!(f, "root{m}"),
            Transformation::Square => write!(f, "square"),
            Transformation::Log => write!(f, "log"),
            Transformation::LambertW0 => write!(f, "lambertw0"),
            Transformation::BoxCox(lambda) => write!(f, "boxcox({lambda})"),
        }
    }
}

impl Serialize for Transformation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Transformation {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "identity" => return Ok(Transformation::Identity),
            "square" => return Ok(Transformation::Square),
            "log" => return Ok(Transformation::Log),
            "lambertw0" => return Ok(Transformation::LambertW0),
            _ => {}
        }
        if let Some(m) = s.strip_prefix("root") {
            let m: u32 = m
                .parse()
                .map_err(|_| TransformError::UnknownName(s.to_string()))?;
            if !(2..=10).contains(&m) {
                return Err(TransformError::InvalidRoot(m));
            }
            return Ok(Transformation::MthRoot(m));
        }
        if let Some(rest) = s.strip_prefix("boxcox(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| TransformError::UnknownName(s.to_string()))?;
            let lambda: f64 = inner
                .parse()
                .map_err(|_| TransformError::InvalidLambda(inner.to_string()))?;
            if !lambda.is_finite() || lambda == 0.0 {
                return Err(TransformError::InvalidLambda(inner.to_string()));
            }
            return Ok(Transformation::BoxCox(lambda));
        }
        Err(TransformError::UnknownName(s.to_string()))
    }
}

const INV_E: f64 = 1.0 / std::f64::consts::E;

/// Principal branch of the inverse of w * e^w, for x >= -1/e.
///
/// Halley iteration from a branch-dependent initial guess; the residual
/// |w e^w - x| is driven below 1e-13 * max(1, |x|).
pub fn lambert_w0(x: f64) -> Result<f64, TransformError> {
    if !x.is_finite() || x < -INV_E {
        return Err(TransformError::BelowBranchPoint(x));
    }
    if x == 0.0 {
        return Ok(0.0);
    }

    let mut w = if x < -INV_E + 1e-2 {
        // Series around the branch point in p = sqrt(2(e x + 1)).
        let p = (2.0 * (std::f64::consts::E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 * p.powi(3) / 72.0 - 43.0 * p.powi(4) / 540.0
    } else if x > std::f64::consts::E {
        let l = x.ln();
        l - l.ln()
    } else {
        x / (1.0 + x)
    };

    let tol = 1e-13 * x.abs().max(1.0);
    for _ in 0..64 {
        let ew = w.exp();
        let f = w * ew - x;
        if f.abs() <= tol {
            return Ok(w);
        }
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if denom == 0.0 || !denom.is_finite() {
            break;
        }
        w -= f / denom;
    }

    let residual = w * w.exp() - x;
    if residual.abs() <= 1e-12 * x.abs().max(1.0) {
        Ok(w)
    } else {
        Err(TransformError::BelowBranchPoint(x))
    }
}
