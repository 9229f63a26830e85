//! Command-line front end: transformation selection, sequence screening,
//! null calibration, and correlation reporting over cohort CSV files.
//!
//! Exit codes: 0 on success, 2 for I/O, parse, or usage failures, 3 when the
//! data or parameters are statistically ineligible for the requested test.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use chrono::NaiveDate;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use serde::Serialize;

use zscreen::cohort::{build_sequences, parse_cohort, Cohort, SeasonLabel, TimePoint};
use zscreen::normality::{select_transformation, NormalityError, DEFAULT_MIN_SEQUENCE_LEN};
use zscreen::screening::{
    correlation_report, screen, ScreenConfig, ScreenError, DEFAULT_ALPHA,
    DEFAULT_CORRELATION_BINS, DEFAULT_CORRELATION_PAIRS, DEFAULT_MIN_PAIRED,
};
use zscreen::stats::{ModelKind, StatKind};
use zscreen::tabulate::{
    calibrate, rejection_rate, NullModel, TableEntry, TableStore, TabulateError, DEFAULT_REPS,
};
use zscreen::transform::{Transformation, TransformationFamily};

#[derive(Parser)]
#[command(
    name = "zscreen",
    version,
    about = "Screens longitudinal biomarker sequences for abnormal values"
)]
struct Cli {
    /// Worker threads for simulation (default: all cores). Results do not
    /// depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pick a variance-stabilizing transformation per biomarker.
    SelectTransform(SelectTransformArgs),
    /// Screen per-individual sequences and report flag counts by group.
    Screen(ScreenArgs),
    /// Measure the empirical rejection rate of a test on fresh null draws.
    Calibrate(CalibrateArgs),
    /// Histogram within-individual correlations of biomarker pairs.
    Correlate(CorrelateArgs),
}

#[derive(Args, Serialize)]
struct SelectTransformArgs {
    /// Cohort CSV file.
    #[arg(long)]
    input: PathBuf,
    /// Write the full JSON report here (reusable via `screen --selection`).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Only process these biomarkers (default: every biomarker found).
    #[arg(long = "biomarker", value_delimiter = ',')]
    biomarkers: Vec<String>,
    /// Comma-separated candidate transformations (default: the full family).
    #[arg(long)]
    family: Option<String>,
    /// Minimum sequence length admitted to the normality tests.
    #[arg(long = "min-n", default_value_t = DEFAULT_MIN_SEQUENCE_LEN)]
    min_n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum PublicKind {
    T2,
    T3,
    T4,
    T4a,
    T4b,
    T4c,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum InternalKind {
    T0,
    T1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum ModelFlag {
    A,
    B,
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum GroupBy {
    Status,
    Discipline,
    Both,
}

#[derive(Args, Serialize)]
#[command(group = ArgGroup::new("which_kind").required(true).multiple(false))]
#[command(group = ArgGroup::new("which_transform").required(true).multiple(false))]
struct ScreenArgs {
    /// Cohort CSV file.
    #[arg(long)]
    input: PathBuf,
    /// Write the full JSON report here.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Statistic to screen with. `t4` needs --model; `t4a`/`t4b`/`t4c`
    /// name the model directly.
    #[arg(long, group = "which_kind")]
    kind: Option<PublicKind>,
    /// Building-block statistics kept for cross-checks.
    #[arg(long, group = "which_kind", hide = true)]
    kind_internal: Option<InternalKind>,
    /// Linear model for `--kind t4`: a (level only), b (seasonal),
    /// c (long-term trend).
    #[arg(long)]
    model: Option<ModelFlag>,
    /// Biomarker to screen; the multivariate statistic takes a
    /// comma-separated list defining the point coordinates.
    #[arg(long = "biomarker", value_delimiter = ',', required = true)]
    biomarkers: Vec<String>,
    /// Selection report produced by `select-transform`; supplies the
    /// transformation for each screened biomarker.
    #[arg(long, group = "which_transform")]
    selection: Option<PathBuf>,
    /// Explicit transformation name(s), overriding any selection file. One
    /// name applies to every biomarker; a comma-separated list pairs up.
    #[arg(long, group = "which_transform")]
    transform: Option<String>,
    /// Test level.
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    alpha: f64,
    /// Monte Carlo replicates per tabulated null.
    #[arg(long, default_value_t = DEFAULT_REPS)]
    reps: usize,
    /// Master seed (default: generated and printed to stderr).
    #[arg(long)]
    seed: Option<u64>,
    /// Quantile table file; tabulated quantiles are recorded here.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Which grouped flag counts to report.
    #[arg(long = "group-by", value_enum, default_value_t = GroupBy::Both)]
    group_by: GroupBy,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum CalibrateKind {
    T0,
    T1,
    T2,
    T3,
    T4,
    T4a,
    T4b,
    T4c,
}

#[derive(Args, Serialize)]
struct CalibrateArgs {
    /// Statistic to calibrate.
    #[arg(long)]
    kind: CalibrateKind,
    /// Linear model for `--kind t4`.
    #[arg(long)]
    model: Option<ModelFlag>,
    /// Sequence length (ignored for t4b, which uses --n1/--n2).
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Dimension of the multivariate statistic.
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// Winter observations for the seasonal model.
    #[arg(long, default_value_t = 5)]
    n1: usize,
    /// Summer observations for the seasonal model.
    #[arg(long, default_value_t = 5)]
    n2: usize,
    /// Test level.
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    alpha: f64,
    /// Monte Carlo replicates for the tabulated quantile.
    #[arg(long, default_value_t = DEFAULT_REPS)]
    reps: usize,
    /// Fresh null draws used to measure the rejection rate.
    #[arg(long, default_value_t = 20_000)]
    fresh: usize,
    /// Master seed (default: generated and printed to stderr).
    #[arg(long)]
    seed: Option<u64>,
    /// Quantile table file; a matching entry skips tabulation, a computed
    /// quantile is recorded.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Write the JSON calibration report here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Serialize)]
struct CorrelateArgs {
    /// Cohort CSV file.
    #[arg(long)]
    input: PathBuf,
    /// Write the full JSON report here.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Biomarker pairs as `first:second`, comma-separated
    /// (default: the built-in panel).
    #[arg(long, value_delimiter = ',')]
    pairs: Vec<String>,
    /// Minimum same-time-point paired observations per individual.
    #[arg(long = "min-n", default_value_t = DEFAULT_MIN_PAIRED)]
    min_n: usize,
    /// Histogram bins over [-1, 1].
    #[arg(long, default_value_t = DEFAULT_CORRELATION_BINS)]
    bins: usize,
}

/// Failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

fn fail2(message: impl Display) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn fail3(message: impl Display) -> Failure {
    Failure {
        code: 3,
        message: message.to_string(),
    }
}

impl From<TabulateError> for Failure {
    fn from(e: TabulateError) -> Self {
        match e {
            TabulateError::TooFewReps(_) | TabulateError::InvalidAlpha(_) => fail2(e),
            _ => fail3(e),
        }
    }
}

#[derive(Serialize)]
struct Envelope<I: Serialize, R: Serialize> {
    schema_version: u32,
    tool_version: &'static str,
    command: &'static str,
    invocation: I,
    report: R,
}

fn write_report<I: Serialize, R: Serialize>(
    output: Option<&Path>,
    command: &'static str,
    invocation: &I,
    report: &R,
) -> Result<(), Failure> {
    let Some(path) = output else {
        return Ok(());
    };
    let envelope = Envelope {
        schema_version: 1,
        tool_version: env!("CARGO_PKG_VERSION"),
        command,
        invocation,
        report,
    };
    let json = serde_json::to_string_pretty(&envelope)
        .map_err(|e| fail2(format!("serializing report: {e}")))?;
    std::fs::write(path, json + "\n")
        .map_err(|e| fail2(format!("writing {}: {e}", path.display())))
}

fn read_cohort(path: &Path) -> Result<Cohort, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail2(format!("reading {}: {e}", path.display())))?;
    let outcome =
        parse_cohort(&text).map_err(|e| fail2(format!("parsing {}: {e}", path.display())))?;
    if let Some(first) = outcome.rejects.first() {
        eprintln!(
            "skipped {} malformed row(s), first at line {}: {}",
            outcome.rejects.len(),
            first.line_number,
            first.reason
        );
    }
    Ok(outcome.cohort)
}

fn resolve_seed(given: Option<u64>) -> u64 {
    match given {
        Some(s) => s,
        None => {
            let s: u64 = rand::random();
            eprintln!("generated seed: {s}");
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: configuring {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::SelectTransform(args) => run_select_transform(args),
        Command::Screen(args) => run_screen(args),
        Command::Calibrate(args) => run_calibrate(args),
        Command::Correlate(args) => run_correlate(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[derive(Serialize)]
struct SelectionOutcomes {
    selections: BTreeMap<String, zscreen::normality::SelectionReport>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    errors: BTreeMap<String, String>,
}

fn run_select_transform(args: SelectTransformArgs) -> Result<(), Failure> {
    let cohort = read_cohort(&args.input)?;
    let family = match &args.family {
        Some(list) => TransformationFamily::parse_list(list).map_err(fail2)?,
        None => TransformationFamily::full(),
    };
    let biomarkers: Vec<String> = if args.biomarkers.is_empty() {
        cohort.biomarkers().into_iter().collect()
    } else {
        args.biomarkers.clone()
    };
    if biomarkers.is_empty() {
        return Err(fail2("cohort contains no observations"));
    }

    let mut outcomes = SelectionOutcomes {
        selections: BTreeMap::new(),
        errors: BTreeMap::new(),
    };
    for biomarker in &biomarkers {
        let sequences = build_sequences(&cohort, biomarker);
        if sequences.is_empty() {
            outcomes.errors.insert(
                biomarker.clone(),
                "no observations for this biomarker".to_string(),
            );
            continue;
        }
        match select_transformation(&sequences, &family, args.min_n) {
            Ok(report) => {
                outcomes.selections.insert(biomarker.clone(), report);
            }
            Err(e @ NormalityError::InvalidMinLen(_)) => return Err(fail2(e)),
            Err(e) => {
                outcomes.errors.insert(biomarker.clone(), e.to_string());
            }
        }
    }
    if outcomes.selections.is_empty() {
        let detail = outcomes
            .errors
            .iter()
            .map(|(b, e)| format!("{b}: {e}"))
            .collect::<Vec<_>>()
            .join("; ");
        return Err(fail3(format!("no biomarker could be selected ({detail})")));
    }

    println!("biomarker\tselected\teligible\ttotal\tglobal_p");
    for (biomarker, report) in &outcomes.selections {
        let p = report
            .candidates
            .iter()
            .find(|c| c.selected)
            .and_then(|c| c.global_p)
            .map(|p| format!("{p:e}"))
            .unwrap_or_else(|| "-".to_string());
        println!(
            "{biomarker}\t{}\t{}\t{}\t{p}",
            report.selected, report.eligible_sequences, report.total_sequences
        );
    }
    for (biomarker, error) in &outcomes.errors {
        eprintln!("{biomarker}: {error}");
    }
    write_report(args.output.as_deref(), "select-transform", &args, &outcomes)
}

fn resolve_screen_kind(args: &ScreenArgs) -> Result<StatKind, Failure> {
    if let Some(internal) = args.kind_internal {
        if args.model.is_some() {
            return Err(fail2("--model only applies to --kind t4"));
        }
        return Ok(match internal {
            InternalKind::T0 => StatKind::T0,
            InternalKind::T1 => StatKind::T1,
        });
    }
    let kind = args.kind.expect("clap enforces one kind flag");
    match (kind, args.model) {
        (PublicKind::T2, None) => Ok(StatKind::T2),
        (PublicKind::T3, None) => Ok(StatKind::T3),
        (PublicKind::T4, Some(ModelFlag::A)) | (PublicKind::T4a, None) => Ok(StatKind::T4A),
        (PublicKind::T4, Some(ModelFlag::B)) | (PublicKind::T4b, None) => Ok(StatKind::T4B),
        (PublicKind::T4, Some(ModelFlag::C)) | (PublicKind::T4c, None) => Ok(StatKind::T4C),
        (PublicKind::T4, None) => Err(fail2("--kind t4 needs --model a, b, or c")),
        _ => Err(fail2("--model only applies to --kind t4")),
    }
}

fn transformations_from_selection(
    path: &Path,
    biomarkers: &[String],
) -> Result<BTreeMap<String, Transformation>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail2(format!("reading {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| fail2(format!("parsing {}: {e}", path.display())))?;
    let selections = value
        .get("report")
        .and_then(|r| r.get("selections"))
        .ok_or_else(|| {
            fail2(format!(
                "{}: not a selection report (missing report.selections)",
                path.display()
            ))
        })?;
    let mut out = BTreeMap::new();
    for biomarker in biomarkers {
        let name = selections
            .get(biomarker)
            .and_then(|r| r.get("selected"))
            .and_then(|s| s.as_str())
            .ok_or_else(|| {
                fail2(format!(
                    "{}: no selection for biomarker `{biomarker}`",
                    path.display()
                ))
            })?;
        let transformation = Transformation::from_str(name)
            .map_err(|e| fail2(format!("{}: {e}", path.display())))?;
        out.insert(biomarker.clone(), transformation);
    }
    Ok(out)
}

fn transformations_from_flag(
    list: &str,
    biomarkers: &[String],
) -> Result<BTreeMap<String, Transformation>, Failure> {
    let family = TransformationFamily::parse_list(list).map_err(fail2)?;
    let names = family.members;
    if names.len() != 1 && names.len() != biomarkers.len() {
        return Err(fail2(format!(
            "--transform lists {} name(s) for {} biomarker(s); give one for all or one each",
            names.len(),
            biomarkers.len()
        )));
    }
    Ok(biomarkers
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), if names.len() == 1 { names[0] } else { names[i] }))
        .collect())
}

fn run_screen(args: ScreenArgs) -> Result<(), Failure> {
    let kind = resolve_screen_kind(&args)?;
    let cohort = read_cohort(&args.input)?;
    let transformations = match (&args.selection, &args.transform) {
        (Some(path), None) => transformations_from_selection(path, &args.biomarkers)?,
        (None, Some(list)) => transformations_from_flag(list, &args.biomarkers)?,
        _ => unreachable!("clap enforces exactly one transformation source"),
    };
    let config = ScreenConfig {
        kind,
        biomarkers: args.biomarkers.clone(),
        transformations,
        alpha: args.alpha,
        reps: args.reps,
        seed: resolve_seed(args.seed),
    };
    let mut report = screen(&cohort, &config).map_err(|e| match e {
        ScreenError::Tabulate(t) => t.into(),
        other => fail2(other),
    })?;
    if kind == StatKind::T4C && report.overall.eligible == 0 {
        return Err(fail3(
            "the long-term-trend model needs calendar-dated sequences; none qualified",
        ));
    }
    match args.group_by {
        GroupBy::Status => report.by_discipline.clear(),
        GroupBy::Discipline => report.by_status.clear(),
        GroupBy::Both => {}
    }

    if let Some(path) = &args.table {
        let mut store =
            TableStore::load(path).map_err(|e| fail2(format!("{}: {e}", path.display())))?;
        for entry in &report.tables {
            store.upsert(entry.clone());
        }
        store
            .save()
            .map_err(|e| fail2(format!("{}: {e}", path.display())))?;
    }

    for line in report.summary_lines() {
        println!("{line}");
    }
    write_report(args.output.as_deref(), "screen", &args, &report)
}

const CALIBRATION_DATE_STREAM: u64 = u64::MAX;

fn calibration_dates(n: usize, seed: u64) -> Result<Vec<TimePoint>, Failure> {
    let window_days = 1096u32;
    if n > window_days as usize {
        return Err(fail2(format!(
            "cannot place {n} distinct dates in a {window_days}-day window"
        )));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(CALIBRATION_DATE_STREAM);
    let mut offsets = std::collections::BTreeSet::new();
    while offsets.len() < n {
        offsets.insert(rng.random_range(0..window_days));
    }
    let base = NaiveDate::from_ymd_opt(2014, 1, 1).expect("valid base date");
    Ok(offsets
        .into_iter()
        .map(|days| TimePoint::Date(base + chrono::Days::new(days as u64)))
        .collect())
}

fn calibration_model(args: &CalibrateArgs, seed: u64) -> Result<NullModel, Failure> {
    let t4_model = |flag: Option<ModelFlag>, expected: ModelKind| -> Result<ModelKind, Failure> {
        match flag {
            Some(_) => Err(fail2("--model only applies to --kind t4")),
            None => Ok(expected),
        }
    };
    let model_kind = match args.kind {
        CalibrateKind::T0 => return Ok(NullModel::T0 { n: args.n }),
        CalibrateKind::T1 => return Ok(NullModel::T1 { n: args.n }),
        CalibrateKind::T2 => return Ok(NullModel::T2 { n: args.n }),
        CalibrateKind::T3 => {
            return Ok(NullModel::T3 {
                n: args.n,
                d: args.d,
            })
        }
        CalibrateKind::T4 => match args.model {
            Some(ModelFlag::A) => ModelKind::A,
            Some(ModelFlag::B) => ModelKind::B,
            Some(ModelFlag::C) => ModelKind::C,
            None => return Err(fail2("--kind t4 needs --model a, b, or c")),
        },
        CalibrateKind::T4a => t4_model(args.model, ModelKind::A)?,
        CalibrateKind::T4b => t4_model(args.model, ModelKind::B)?,
        CalibrateKind::T4c => t4_model(args.model, ModelKind::C)?,
    };
    let times: Vec<TimePoint> = match model_kind {
        ModelKind::A => (0..args.n)
            .map(|k| TimePoint::Season {
                year: 2015 + k as i32,
                season: SeasonLabel::Winter,
            })
            .collect(),
        ModelKind::B => {
            if args.n1 < 2 || args.n2 < 2 {
                return Err(fail3(format!(
                    "the seasonal model needs at least 2 observations per season, got {} winter and {} summer",
                    args.n1, args.n2
                )));
            }
            (0..args.n1)
                .map(|k| TimePoint::Season {
                    year: 2015 + k as i32,
                    season: SeasonLabel::Winter,
                })
                .chain((0..args.n2).map(|k| TimePoint::Season {
                    year: 2015 + k as i32,
                    season: SeasonLabel::Summer,
                }))
                .collect()
        }
        ModelKind::C => calibration_dates(args.n, seed)?,
    };
    let design = zscreen::stats::build_design(model_kind, &times).map_err(fail3)?;
    Ok(NullModel::T4 { design })
}

fn run_calibrate(args: CalibrateArgs) -> Result<(), Failure> {
    let seed = resolve_seed(args.seed);
    let model = calibration_model(&args, seed)?;

    let mut store = match &args.table {
        Some(path) => {
            Some(TableStore::load(path).map_err(|e| fail2(format!("{}: {e}", path.display())))?)
        }
        None => None,
    };
    let stored_quantile = match (&store, &model) {
        (_, NullModel::T0 { .. }) | (None, _) => None,
        (Some(s), _) => s.lookup(&TableEntry {
            kind: model.kind(),
            n: model.n(),
            dim: model.dim(),
            design_hash: model.design_hash(),
            alpha: args.alpha,
            reps: args.reps,
            seed,
            quantile: f64::NAN,
        }),
    };

    let outcome = match stored_quantile {
        Some(quantile) => {
            let (rejections, degenerate_redraws) =
                rejection_rate(&model, quantile, false, seed, args.fresh)?;
            zscreen::tabulate::CalibrationOutcome {
                kind: model.kind(),
                n: model.n(),
                dim: model.dim(),
                alpha: args.alpha,
                reps: args.reps,
                seed,
                quantile,
                exact: false,
                fresh: args.fresh,
                rejections,
                rate: rejections as f64 / args.fresh as f64,
                degenerate_redraws,
            }
        }
        None => {
            if !(args.alpha > 0.0 && args.alpha < 1.0) {
                return Err(TabulateError::InvalidAlpha(args.alpha).into());
            }
            if args.fresh == 0 {
                return Err(fail2("--fresh must be positive"));
            }
            let outcome = calibrate(&model, args.reps, args.alpha, seed, args.fresh)?;
            if let (Some(store), false) = (store.as_mut(), outcome.exact) {
                store.upsert(TableEntry {
                    kind: outcome.kind,
                    n: outcome.n,
                    dim: outcome.dim,
                    design_hash: model.design_hash(),
                    alpha: outcome.alpha,
                    reps: outcome.reps,
                    seed: outcome.seed,
                    quantile: outcome.quantile,
                });
            }
            outcome
        }
    };
    if let Some(store) = &store {
        store
            .save()
            .map_err(|e| fail2(format!("saving quantile table: {e}")))?;
    }

    println!("kind\t{}", outcome.kind);
    println!("n\t{}", outcome.n);
    if outcome.dim > 1 || outcome.kind == StatKind::T3 {
        println!("d\t{}", outcome.dim);
    }
    println!("alpha\t{}", outcome.alpha);
    println!("seed\t{}", outcome.seed);
    println!(
        "quantile\t{}{}",
        outcome.quantile,
        if outcome.exact { " (exact)" } else { "" }
    );
    println!("fresh\t{}", outcome.fresh);
    println!("rejections\t{}", outcome.rejections);
    println!("rate\t{:.4}", outcome.rate);
    write_report(args.output.as_deref(), "calibrate", &args, &outcome)
}

fn run_correlate(args: CorrelateArgs) -> Result<(), Failure> {
    let cohort = read_cohort(&args.input)?;
    let pairs: Vec<(String, String)> = if args.pairs.is_empty() {
        DEFAULT_CORRELATION_PAIRS
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect()
    } else {
        args.pairs
            .iter()
            .map(|spec| {
                spec.split_once(':')
                    .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                    .filter(|(a, b)| !a.is_empty() && !b.is_empty())
                    .ok_or_else(|| fail2(format!("--pairs entry `{spec}` is not first:second")))
            })
            .collect::<Result<_, _>>()?
    };
    if args.bins == 0 {
        return Err(fail2("--bins must be positive"));
    }
    if args.min_n < 2 {
        return Err(fail2("--min-n must be at least 2"));
    }
    let report = correlation_report(&cohort, &pairs, args.min_n, args.bins);

    println!("pair\tindividuals\tdegenerate\tmean_r\thistogram");
    for pair in &report.pairs {
        let mean = pair
            .mean_r
            .map(|r| format!("{r:.4}"))
            .unwrap_or_else(|| "-".to_string());
        let histogram = pair
            .histogram
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        println!(
            "{}:{}\t{}\t{}\t{mean}\t{histogram}",
            pair.first, pair.second, pair.individuals, pair.degenerate
        );
    }
    write_report(args.output.as_deref(), "correlate", &args, &report)
}
