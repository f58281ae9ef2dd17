//! `splitmerge`: score predicted clusterings against a true clustering.

mod input;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;
use splitmerge::decomposition::decompose;
use splitmerge::measures::MeasureScore;
use splitmerge::splitmerge::SubcomponentMeasure;
use splitmerge::{
    evaluate, generate_series, s_prime, s_star, Clustering, FeatureMatrix, MeasureId,
    MeasureParams, SubcomponentRegistry,
};

use input::{read_clustering, read_features, ClusteringFile};
use output::{json_number, Format, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cannot write output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    fn in_file(self, path: &Path) -> Self {
        match self {
            CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
            other => other,
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Input(_) => 3,
            CliError::Unsupported(_) => 4,
            CliError::Output(_) => 1,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "splitmerge",
    version,
    about = "Compare clusterings with classic and split-merge measures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score every predicted clustering against the truth.
    Compute(Args),
    /// Break each measure into per-component terms and recompose it.
    Decompose(Args),
    /// Split the truth down to singletons, merge true singletons, and score every step.
    Degrade(Args),
}

#[derive(clap::Args)]
struct Args {
    /// True clustering: one label per line, or `id<TAB>label` lines.
    #[arg(long)]
    truth: PathBuf,
    /// Predicted clusterings, same formats as --truth.
    #[arg(long, num_args = 1..)]
    pred: Vec<PathBuf>,
    /// Per-point features as CSV, one row per point.
    #[arg(long)]
    features: Option<PathBuf>,
    /// Comma-separated measure ids: rand, vandongen, accuracy, nmi, v, k, sh, smse, mi, sstar, sprime.
    #[arg(long, value_delimiter = ',', required = true)]
    measures: Vec<String>,
    /// Cluster-count bound for the `k` measure.
    #[arg(long)]
    k: Option<usize>,
    /// Seed for the merge phase of `degrade`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Split-side subcomponent measure for `sstar` and `sprime` (entropy, max, mse).
    #[arg(long, default_value = "entropy")]
    split: String,
    /// Merge-side subcomponent measure for `sstar` and `sprime`.
    #[arg(long, default_value = "entropy")]
    merge: String,
}

/// Everything a row needs besides the two clusterings.
struct Context {
    measures: Vec<MeasureId>,
    k: Option<usize>,
    features: Option<FeatureMatrix>,
    registry: SubcomponentRegistry,
    split: String,
    merge: String,
}

impl Context {
    fn params(&self) -> MeasureParams<'_, f64> {
        MeasureParams {
            k: self.k,
            features: self.features.as_ref(),
        }
    }

    fn sub(&self, id: &str) -> &dyn SubcomponentMeasure<f64> {
        self.registry.get(id).expect("validated at startup")
    }

    fn score(
        &self,
        measure: MeasureId,
        left: &Clustering,
        right: &Clustering,
    ) -> splitmerge::Result<MeasureScore<f64>> {
        let (split, merge) = (self.sub(&self.split), self.sub(&self.merge));
        let features = if split.needs_features() || merge.needs_features() {
            self.features.as_ref()
        } else {
            None
        };
        match measure {
            MeasureId::SplitMergeProduct => s_star(left, right, split, merge, features),
            MeasureId::SplitMergeMean => s_prime(left, right, split, merge, features),
            _ => evaluate(measure, left, right, &self.params()),
        }
    }
}

fn is_decomposable(measure: MeasureId) -> bool {
    !matches!(
        measure,
        MeasureId::Nmi | MeasureId::SplitMergeProduct | MeasureId::SplitMergeMean
    )
}

/// Checks the configuration before any file is read.
fn validate(command: &Command, args: &Args) -> Result<(), CliError> {
    let measures = parse_measures(&args.measures)?;
    let registry = SubcomponentRegistry::with_builtins();
    for id in [&args.split, &args.merge] {
        let known = registry.get(id).ok_or_else(|| {
            CliError::Config(format!(
                "unknown subcomponent measure `{id}` (known: {})",
                registry.ids().join(", ")
            ))
        })?;
        let used = measures
            .iter()
            .any(|m| matches!(m, MeasureId::SplitMergeProduct | MeasureId::SplitMergeMean));
        if used && known.needs_features() && args.features.is_none() {
            return Err(CliError::Config(format!(
                "subcomponent measure `{id}` needs --features"
            )));
        }
    }
    if measures.contains(&MeasureId::K) && args.k.is_none() {
        return Err(CliError::Config("measure `k` needs --k".into()));
    }
    if measures.contains(&MeasureId::Smse) && args.features.is_none() {
        return Err(CliError::Config("measure `smse` needs --features".into()));
    }
    match command {
        Command::Compute(_) | Command::Decompose(_) if args.pred.is_empty() => {
            return Err(CliError::Config("at least one --pred is required".into()));
        }
        Command::Degrade(_) if !args.pred.is_empty() => {
            return Err(CliError::Config("degrade takes no --pred".into()));
        }
        _ => {}
    }
    if let Command::Decompose(_) = command {
        if let Some(m) = measures.iter().find(|m| !is_decomposable(**m)) {
            return Err(CliError::Unsupported(format!(
                "measure `{m}` has no component decomposition"
            )));
        }
    }
    Ok(())
}

fn parse_measures(ids: &[String]) -> Result<Vec<MeasureId>, CliError> {
    let mut out = Vec::new();
    for id in ids.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let m: MeasureId = id
            .parse()
            .map_err(|e: splitmerge::Error| CliError::Config(e.to_string()))?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        return Err(CliError::Config("no measures given".into()));
    }
    Ok(out)
}

fn load_context(args: &Args) -> Result<Context, CliError> {
    Ok(Context {
        measures: parse_measures(&args.measures)?,
        k: args.k,
        features: args.features.as_deref().map(read_features).transpose()?,
        registry: SubcomponentRegistry::with_builtins(),
        split: args.split.clone(),
        merge: args.merge.clone(),
    })
}

fn load_predictions(
    args: &Args,
    truth: &ClusteringFile,
) -> Result<Vec<(String, Clustering)>, CliError> {
    args.pred
        .iter()
        .map(|p| {
            let file = read_clustering(p)?
                .align_to(truth)
                .map_err(|e| e.in_file(p))?;
            Ok((p.display().to_string(), file.clustering))
        })
        .collect()
}

fn flags_value(score: &MeasureScore<f64>) -> Value {
    Value::from(
        score
            .flags
            .iter()
            .map(|f| f.as_str())
            .collect::<Vec<_>>()
            .join(","),
    )
}

fn row_error(label: &str, measure: MeasureId, err: &splitmerge::Error) -> Value {
    eprintln!("warning: {label}, {measure}: {err}");
    Value::from(format!("error:{err}"))
}

fn run_compute(args: &Args) -> Result<Table, CliError> {
    let ctx = load_context(args)?;
    let truth = read_clustering(&args.truth)?;
    let preds = load_predictions(args, &truth)?;
    let mut table =
        Table::new(&["predicted", "measure", "value", "flags", "normalized"]).tsv_width(4);
    for (name, pred) in &preds {
        for &m in &ctx.measures {
            let row = match ctx.score(m, &truth.clustering, pred) {
                Ok(s) => vec![
                    Value::from(name.as_str()),
                    Value::from(m.as_str()),
                    json_number(s.value),
                    flags_value(&s),
                    Value::from(s.normalized),
                ],
                Err(e) => vec![
                    Value::from(name.as_str()),
                    Value::from(m.as_str()),
                    Value::from("NA"),
                    row_error(name, m, &e),
                    Value::from(m.is_normalized()),
                ],
            };
            table.push(row);
        }
    }
    Ok(table)
}

fn run_decompose(args: &Args) -> Result<Table, CliError> {
    let ctx = load_context(args)?;
    let truth = read_clustering(&args.truth)?;
    let preds = load_predictions(args, &truth)?;
    let mut table = Table::new(&["predicted", "measure", "row", "size", "weight", "value"]);
    for (name, pred) in &preds {
        for &m in &ctx.measures {
            let cell = |row: &str, size: Value, weight: Value, value: Value| {
                vec![
                    Value::from(name.as_str()),
                    Value::from(m.as_str()),
                    Value::from(row),
                    size,
                    weight,
                    value,
                ]
            };
            match decompose(m, &truth.clustering, pred, &ctx.params()) {
                Ok(report) => {
                    for term in &report.components {
                        table.push(cell(
                            "component",
                            Value::from(term.join_cluster.len()),
                            json_number(term.weight),
                            json_number(term.score),
                        ));
                    }
                    for (row, value) in [
                        ("offset", report.offset),
                        ("recomposed", report.recomposed),
                        ("direct", report.direct),
                        ("residual", report.residual()),
                    ] {
                        table.push(cell(row, Value::Null, Value::Null, json_number(value)));
                    }
                }
                Err(splitmerge::Error::UnsupportedDecomposition(m)) => {
                    return Err(CliError::Unsupported(format!(
                        "measure `{m}` has no component decomposition"
                    )));
                }
                Err(e) => table.push(cell(
                    "error",
                    Value::Null,
                    Value::Null,
                    row_error(name, m, &e),
                )),
            }
        }
    }
    Ok(table)
}

fn run_degrade(args: &Args) -> Result<Table, CliError> {
    let ctx = load_context(args)?;
    let truth = read_clustering(&args.truth)?.clustering;
    let series = generate_series(&truth, args.seed);
    let ops = std::iter::once("truth").chain(series.steps.iter().map(|s| s.op.as_str()));
    let mut table = Table::new(&["step", "op", "measure", "value", "flags", "labels"]).tsv_width(4);
    for (step, (op, clustering)) in ops.zip(series.clusterings()).enumerate() {
        let labels = Value::from(clustering.labels().to_vec());
        for &m in &ctx.measures {
            let (value, flags) = match ctx.score(m, &truth, clustering) {
                Ok(s) => (json_number(s.value), flags_value(&s)),
                Err(e) => (Value::from("NA"), row_error(&format!("step {step}"), m, &e)),
            };
            table.push(vec![
                Value::from(step),
                Value::from(op),
                Value::from(m.as_str()),
                value,
                flags,
                labels.clone(),
            ]);
        }
    }
    Ok(table)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let (Command::Compute(args) | Command::Decompose(args) | Command::Degrade(args)) = &cli.command;
    validate(&cli.command, args)?;
    let table = match &cli.command {
        Command::Compute(_) => run_compute(args)?,
        Command::Decompose(_) => run_decompose(args)?,
        Command::Degrade(_) => run_degrade(args)?,
    };
    let mut out: Box<dyn Write> = match &args.out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| {
                CliError::Config(format!("{}: {e}", path.display()))
            })?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    table.write(args.format, &mut out)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
