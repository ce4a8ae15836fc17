//! `qdot`: correlation reports, parameter sweeps and figure presets for the
//! vertical quantum dot.
//!
//! Exit codes: 0 on success, 2 for invalid input, 1 when a computation or
//! file operation fails.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use qdot::channels::{evolve, evolve_xstate, ChannelKind, ChannelSpec};
use qdot::sweep::{
    emit_csv, figure_preset, format_csv, format_float, parse_csv, render_svg, run_sweep, write_svg,
    FigurePreset, PlotSpec, SweepOptions, SweepRow, SweepSpec,
};
use qdot::{
    full_report, thermal_state_closed, thermal_state_oracle, CorrelationReport, DotParams, Error,
};

#[derive(Parser)]
#[command(
    name = "qdot",
    version,
    about = "Quantum discord and LQU of a vertical quantum dot"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Correlation report for a single (k0, r, T) point.
    Report(ReportArgs),
    /// Sweep one or two parameters.
    Sweep(SweepArgs),
    /// Regenerate the data behind one of the preset figures.
    Figure(FigureArgs),
    /// Render a sweep CSV as SVG.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChannelArg {
    Dephasing,
    Amplitude,
}

impl ChannelArg {
    fn kind(self) -> ChannelKind {
        match self {
            ChannelArg::Dephasing => ChannelKind::Dephasing,
            ChannelArg::Amplitude => ChannelKind::AmplitudeDamping,
        }
    }
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    k0: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    r: f64,
    #[arg(long = "T", default_value_t = 0.4, allow_negative_numbers = true)]
    temperature: f64,
    #[arg(long, value_enum)]
    channel: Option<ChannelArg>,
    #[arg(long, default_value_t = 1.0)]
    decay_rate: f64,
    /// Evolution time under the channel.
    #[arg(long, default_value_t = 0.0)]
    time: f64,
    /// Use the brute-force and matrix-square-root routes instead of the
    /// closed forms.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Flat `key = value` file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// `name=start:stop[:steps]` or `name=v1,v2,...` with name one of
    /// k0, r, T, gamma_t. Repeat for a two-axis grid.
    #[arg(long = "axis")]
    axes: Vec<String>,
    #[arg(long, allow_negative_numbers = true)]
    k0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<f64>,
    #[arg(long = "T", allow_negative_numbers = true)]
    temperature: Option<f64>,
    #[arg(long, value_enum)]
    channel: Option<ChannelArg>,
    #[arg(long)]
    decay_rate: Option<f64>,
    /// Sweep channel time from 0 to this value.
    #[arg(long)]
    time_max: Option<f64>,
    /// Fixed channel time when channel time is not swept.
    #[arg(long)]
    time: Option<f64>,
    /// Points per axis (default 101, or 51 for two-axis grids).
    #[arg(long)]
    steps: Option<usize>,
    /// Comma-separated subset of discord, lqu, mutual_info, classical.
    #[arg(long)]
    measures: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render the result as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    /// fig1 .. fig6
    id: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// Sweep CSV to render.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    title: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Report(args) => report(args),
        Command::Sweep(args) => sweep(args),
        Command::Figure(args) => figure(args),
        Command::Plot(args) => plot(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_validation() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn io_error(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| io_error(Path::new("<stdout>"), e))
        }
    }
}

const REPORT_COLUMNS: [&str; 8] = [
    "mutual_info",
    "classical",
    "discord",
    "discord_branch",
    "gamma_disc",
    "lqu",
    "lambda1",
    "lambda2",
];

fn report_csv(r: &CorrelationReport) -> String {
    let fields = [
        format_float(r.mutual_info),
        format_float(r.classical),
        format_float(r.discord),
        r.discord_branch.to_string(),
        format_float(r.gamma_disc),
        format_float(r.lqu),
        format_float(r.lambda1),
        format_float(r.lambda2),
    ];
    format!("{}\n{}\n", REPORT_COLUMNS.join(","), fields.join(","))
}

fn report(args: ReportArgs) -> Result<(), Error> {
    let params = DotParams::new(args.k0, args.r, args.temperature)?;
    let channel = args
        .channel
        .map(|c| ChannelSpec::new(c.kind(), args.decay_rate, args.time))
        .transpose()?;
    let report = if args.oracle {
        let mut rho = thermal_state_oracle(&params)?;
        if let Some(spec) = &channel {
            rho = evolve(&rho, spec)?;
        }
        full_report(&rho)
    } else {
        let mut state = thermal_state_closed(&params)?;
        if let Some(spec) = &channel {
            state = evolve_xstate(&state, spec.kind(), spec.gamma())?;
        }
        full_report(&state)
    };
    let text = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => report_csv(&report),
    };
    write_output(args.out.as_deref(), &text)
}

fn rows_json(spec: &SweepSpec, rows: &[SweepRow]) -> String {
    let header = spec.header();
    let objects: Vec<Value> = rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            for (name, &v) in header.iter().zip(row.coords.iter().chain(&row.values)) {
                obj.insert(name.clone(), Value::from(v));
            }
            obj.insert("discord_branch".into(), Value::from(row.branch.to_string()));
            Value::Object(obj)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&objects).expect("rows serialize");
    s.push('\n');
    s
}

fn emit(
    spec: &SweepSpec,
    rows: &[SweepRow],
    format: Format,
    out: Option<&Path>,
    svg: Option<&Path>,
    title: &str,
) -> Result<(), Error> {
    match (format, out) {
        (Format::Csv, Some(path)) => emit_csv(spec, rows, path)?,
        (Format::Csv, None) => write_output(None, &format_csv(spec, rows))?,
        (Format::Json, out) => write_output(out, &rows_json(spec, rows))?,
    }
    if let Some(svg_path) = svg {
        let table = parse_csv(&format_csv(spec, rows))?;
        let plot = PlotSpec {
            title: Some(title.to_string()),
            ..PlotSpec::default()
        };
        write_svg(&render_svg(&table, &plot)?, svg_path)?;
    }
    Ok(())
}

fn parse_format(s: &str) -> Result<Format, Error> {
    match s {
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        other => Err(Error::InvalidSweep(format!(
            "unknown format `{other}` (expected csv or json)"
        ))),
    }
}

fn sweep(args: SweepArgs) -> Result<(), Error> {
    let base = match &args.config {
        Some(path) => SweepOptions::from_config(&read(path)?)?,
        None => SweepOptions::default(),
    };
    let flags = SweepOptions {
        axes: args.axes,
        k0: args.k0,
        r: args.r,
        temperature: args.temperature,
        channel: args.channel.map(|c| c.kind().as_str().to_string()),
        decay_rate: args.decay_rate,
        time_max: args.time_max,
        time: args.time,
        steps: args.steps,
        measures: args.measures,
        out: args.out.map(|p| p.to_string_lossy().into_owned()),
        format: None,
    };
    let opts = base.overlay(flags);
    let format = match (args.format, opts.format.as_deref()) {
        (Some(f), _) => f,
        (None, Some(s)) => parse_format(s)?,
        (None, None) => Format::Csv,
    };
    let spec = opts.build()?;
    let rows = run_sweep(&spec)?;
    let out = opts.out.as_deref().map(Path::new);
    emit(&spec, &rows, format, out, args.svg.as_deref(), "sweep")
}

fn figure(args: FigureArgs) -> Result<(), Error> {
    let id: FigurePreset = args.id.parse()?;
    let spec = figure_preset(id);
    let rows = run_sweep(&spec)?;
    emit(
        &spec,
        &rows,
        args.format,
        args.out.as_deref(),
        args.svg.as_deref(),
        id.as_str(),
    )
}

fn plot(args: PlotArgs) -> Result<(), Error> {
    let table = parse_csv(&read(&args.input)?)?;
    let plot = PlotSpec {
        title: args.title,
        ..PlotSpec::default()
    };
    write_svg(&render_svg(&table, &plot)?, &args.out)
}
