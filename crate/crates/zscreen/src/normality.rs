//! Normality assessment and transformation selection: a Shapiro-Wilk W test
//! per sequence, a one-sample Kolmogorov-Smirnov aggregation of the per
//! sequence p-values, and the choice of the best transformation in a family.

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};
use thiserror::Error;

use crate::cohort::Sequence;
use crate::transform::{Transformation, TransformationFamily};

/// Sequences shorter than this are left out of transformation selection.
pub const DEFAULT_MIN_SEQUENCE_LEN: usize = 4;

#[derive(Debug, Error)]
pub enum NormalityError {
    #[error("Shapiro-Wilk needs at least 3 values, got {0}")]
    TooFewValues(usize),
    #[error("sample range is numerically zero")]
    DegenerateRange,
    #[error("input contains a non-finite value")]
    NonFiniteValue,
    #[error("no p-values to aggregate")]
    NoPValues,
    #[error("minimum sequence length must be at least 3, got {0}")]
    InvalidMinLen(usize),
    #[error("no sequence reaches the minimum length {min_len}")]
    NoEligibleSequences { min_len: usize },
    #[error("every candidate transformation is out of domain for the data")]
    NoApplicableTransformation,
    #[error("every candidate collapses all eligible sequences to degenerate samples")]
    AllSequencesDegenerate,
}

/// Result of the Shapiro-Wilk W test on one sample.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SwResult {
    pub w: f64,
    pub p_value: f64,
    pub n: usize,
}

fn poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn std_normal() -> Normal {
    Normal::new(0.0, 1.0).expect("valid standard normal")
}

/// Shapiro-Wilk W test of composite normality, in the Royston AS R94
/// formulation for full samples. The input is sorted internally.
pub fn shapiro_wilk(values: &[f64]) -> Result<SwResult, NormalityError> {
    const C1: [f64; 6] = [0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056];
    const C2: [f64; 6] = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633];
    const C3: [f64; 4] = [0.5440, -0.39978, 0.025054, -6.714e-4];
    const C4: [f64; 4] = [1.3822, -0.77857, 0.062767, -0.0020322];
    const C5: [f64; 4] = [-1.5861, -0.31082, -0.083751, 0.0038915];
    const C6: [f64; 3] = [-0.4803, -0.082676, 0.0030302];
    const G: [f64; 2] = [-2.273, 0.459];

    let n = values.len();
    if n < 3 {
        return Err(NormalityError::TooFewValues(n));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(NormalityError::NonFiniteValue);
    }

    let mut x = values.to_vec();
    x.sort_by(|a, b| a.total_cmp(b));
    let range = x[n - 1] - x[0];
    if range < 1e-19 {
        return Err(NormalityError::DegenerateRange);
    }

    let normal = std_normal();
    let an = n as f64;
    let half = n / 2;

    // Approximately optimal weights for the lower half of the order
    // statistics; the upper half follows by antisymmetry.
    let mut a = vec![0.0; half.max(1)];
    if n == 3 {
        a[0] = std::f64::consts::SQRT_2 / 2.0;
    } else {
        let an25 = an + 0.25;
        let mut summ2 = 0.0;
        for (i, slot) in a.iter_mut().enumerate() {
            let score = normal.inverse_cdf((i as f64 + 1.0 - 0.375) / an25);
            *slot = score;
            summ2 += score * score;
        }
        summ2 *= 2.0;
        let ssumm2 = summ2.sqrt();
        let rsn = 1.0 / an.sqrt();
        let a1 = poly(&C1, rsn) - a[0] / ssumm2;
        let (start, fac) = if n > 5 {
            let a2 = -a[1] / ssumm2 + poly(&C2, rsn);
            let num = summ2 - 2.0 * a[0] * a[0] - 2.0 * a[1] * a[1];
            let den = 1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2;
            a[1] = a2;
            (2, (num / den).sqrt())
        } else {
            let num = summ2 - 2.0 * a[0] * a[0];
            let den = 1.0 - 2.0 * a1 * a1;
            (1, (num / den).sqrt())
        };
        a[0] = a1;
        for slot in a.iter_mut().skip(start) {
            *slot = -*slot / fac;
        }
    }

    let signed_weight = |i: usize| -> f64 {
        let mirror = n - 1 - i;
        if i == mirror {
            0.0
        } else if i < mirror {
            -a[i]
        } else {
            a[mirror]
        }
    };

    let mut sx = 0.0;
    let mut sa = 0.0;
    for (i, &v) in x.iter().enumerate() {
        sx += v / range;
        sa += signed_weight(i);
    }
    sx /= an;
    sa /= an;

    let mut ssa = 0.0;
    let mut ssx = 0.0;
    let mut sax = 0.0;
    for (i, &v) in x.iter().enumerate() {
        let asa = signed_weight(i) - sa;
        let xsx = v / range - sx;
        ssa += asa * asa;
        ssx += xsx * xsx;
        sax += asa * xsx;
    }

    let ssassx = (ssa * ssx).sqrt();
    let w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
    let w = 1.0 - w1;

    if n == 3 {
        if w < 0.75 {
            return Ok(SwResult { w: 0.75, p_value: 0.0, n });
        }
        let p = 1.0 - (6.0 / std::f64::consts::PI) * w.sqrt().acos();
        return Ok(SwResult { w, p_value: p.clamp(0.0, 1.0), n });
    }

    let y = w1.ln();
    let p = if n <= 11 {
        let gamma = poly(&G, an);
        if y >= gamma {
            1e-19
        } else {
            let shifted = -(gamma - y).ln();
            let m = poly(&C3, an);
            let s = poly(&C4, an).exp();
            normal.cdf(-(shifted - m) / s)
        }
    } else {
        let ln_n = an.ln();
        let m = poly(&C5, ln_n);
        let s = poly(&C6, ln_n).exp();
        normal.cdf(-(y - m) / s)
    };

    Ok(SwResult {
        w,
        p_value: p.clamp(0.0, 1.0),
        n,
    })
}

/// Result of the one-sample Kolmogorov-Smirnov test against Uniform(0, 1).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct KsResult {
    pub d: f64,
    pub p_value: f64,
    pub n: usize,
}

/// Survival function of the Kolmogorov distribution at `lambda`, through the
/// alternating series 2 sum_k (-1)^{k-1} exp(-2 k^2 lambda^2).
fn kolmogorov_sf(lambda: f64) -> f64 {
    if lambda < 1e-3 {
        return 1.0;
    }
    let mut total = 0.0;
    let mut sign = 1.0;
    let mut k = 1u32;
    loop {
        let term = (-2.0 * (k as f64) * (k as f64) * lambda * lambda).exp();
        total += sign * term;
        if (k > 100 && term < 1e-12) || k >= 10_000 {
            break;
        }
        sign = -sign;
        k += 1;
    }
    (2.0 * total).clamp(0.0, 1.0)
}

/// One-sample Kolmogorov-Smirnov test of the p-values against Uniform(0, 1),
/// with the asymptotic Kolmogorov p-value.
pub fn ks_uniform(p_values: &[f64]) -> Result<KsResult, NormalityError> {
    let n = p_values.len();
    if n == 0 {
        return Err(NormalityError::NoPValues);
    }
    if p_values.iter().any(|v| !v.is_finite()) {
        return Err(NormalityError::NonFiniteValue);
    }
    let mut sorted = p_values.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let nf = n as f64;
    let mut d = 0.0f64;
    for (i, &v) in sorted.iter().enumerate() {
        let upper = (i + 1) as f64 / nf - v;
        let lower = v - i as f64 / nf;
        d = d.max(upper).max(lower);
    }
    Ok(KsResult {
        d,
        p_value: kolmogorov_sf(nf.sqrt() * d),
        n,
    })
}

/// How one candidate transformation fared across the eligible sequences.
#[derive(Debug, Clone, Serialize)]
pub struct CandidateOutcome {
    pub transformation: Transformation,
    /// Some eligible value fell outside the transformation's domain, so the
    /// candidate was discarded without testing.
    pub domain_rejected: bool,
    /// Sequences that produced a Shapiro-Wilk p-value.
    pub tested: usize,
    /// Sequences whose transformed values had numerically zero range.
    pub skipped_degenerate: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ks_d: Option<f64>,
    /// The aggregated uniformity p-value; higher means the per-sequence
    /// p-values look more like a uniform sample, i.e. better normality.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub global_p: Option<f64>,
    pub selected: bool,
}

/// Full record of a transformation selection run for one biomarker.
#[derive(Debug, Clone, Serialize)]
pub struct SelectionReport {
    pub biomarker: String,
    pub min_sequence_len: usize,
    pub eligible_sequences: usize,
    pub total_sequences: usize,
    pub selected: Transformation,
    pub candidates: Vec<CandidateOutcome>,
}

/// Chooses the family member whose transformed sequences look most normal:
/// each candidate is scored by the KS uniformity p-value of its per-sequence
/// Shapiro-Wilk p-values, and the highest score wins. Ties keep the earlier
/// family member.
pub fn select_transformation(
    sequences: &[Sequence],
    family: &TransformationFamily,
    min_len: usize,
) -> Result<SelectionReport, NormalityError> {
    if min_len < 3 {
        return Err(NormalityError::InvalidMinLen(min_len));
    }
    let eligible: Vec<&Sequence> = sequences.iter().filter(|s| s.len() >= min_len).collect();
    if eligible.is_empty() {
        return Err(NormalityError::NoEligibleSequences { min_len });
    }
    let biomarker = eligible[0].biomarker.clone();

    let mut candidates = Vec::with_capacity(family.members.len());
    for &transformation in &family.members {
        let mut outcome = CandidateOutcome {
            transformation,
            domain_rejected: false,
            tested: 0,
            skipped_degenerate: 0,
            ks_d: None,
            global_p: None,
            selected: false,
        };
        let mut p_values = Vec::with_capacity(eligible.len());
        for seq in &eligible {
            let transformed = match transformation.apply_slice(&seq.values) {
                Ok(t) => t,
                Err(_) => {
                    outcome.domain_rejected = true;
                    break;
                }
            };
            if transformed.iter().any(|v| !v.is_finite()) {
                outcome.domain_rejected = true;
                break;
            }
            match shapiro_wilk(&transformed) {
                Ok(sw) => {
                    outcome.tested += 1;
                    p_values.push(sw.p_value);
                }
                Err(NormalityError::DegenerateRange) => outcome.skipped_degenerate += 1,
                Err(e) => return Err(e),
            }
        }
        if !outcome.domain_rejected && !p_values.is_empty() {
            let ks = ks_uniform(&p_values)?;
            outcome.ks_d = Some(ks.d);
            outcome.global_p = Some(ks.p_value);
        }
        candidates.push(outcome);
    }

    if candidates.iter().all(|c| c.domain_rejected) {
        return Err(NormalityError::NoApplicableTransformation);
    }
    let mut best: Option<usize> = None;
    for (i, c) in candidates.iter().enumerate() {
        let Some(p) = c.global_p else { continue };
        match best {
            Some(b) if p <= candidates[b].global_p.unwrap() => {}
            _ => best = Some(i),
        }
    }
    let Some(best) = best else {
        return Err(NormalityError::AllSequencesDegenerate);
    };
    candidates[best].selected = true;
    let selected = candidates[best].transformation;

    Ok(SelectionReport {
        biomarker,
        min_sequence_len: min_len,
        eligible_sequences: eligible.len(),
        total_sequences: sequences.len(),
        selected,
        candidates,
    })
}
