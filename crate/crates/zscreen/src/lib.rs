//! Longitudinal screening of per-individual biomarker sequences.
//!
//! Each individual contributes a short sequence of measurements of one or
//! more biomarkers. The library flags sequences whose values are abnormal
//! relative to the individual's own history using a family of Z-score
//! statistics:
//!
//! * a last-value test comparing the newest observation against the earlier
//!   ones ([`stats::t0_last`]),
//! * a maximum leave-one-out outlier test ([`stats::t1_max_outlier`]),
//! * a maximum subsequence-shift test over contiguous intervals
//!   ([`stats::t2_subsequence`]),
//! * a multivariate leave-one-out test over simultaneous biomarker tuples
//!   ([`stats::t3_multivariate`]),
//! * and an externally studentized residual test under a linear model with
//!   optional seasonal or long-term trend terms ([`stats::t4_linear_model`]).
//!
//! The last-value test has a closed-form Student null. The others are
//! referred to simulated null distributions tabulated by [`tabulate`], which
//! also persists quantile tables and checks empirical test size.
//!
//! Because the statistics assume roughly Gaussian sequences, [`normality`]
//! selects a variance-stabilizing transformation per biomarker by testing
//! each candidate's per-sequence Shapiro-Wilk p-values for uniformity.
//!
//! [`cohort`] parses observation tables and assembles per-individual
//! sequences; [`screening`] orchestrates a full cohort run and aggregates
//! flag counts by competition status and discipline.

pub mod cohort;
pub mod linalg;
pub mod normality;
pub mod screening;
pub mod stats;
pub mod tabulate;
pub mod transform;
