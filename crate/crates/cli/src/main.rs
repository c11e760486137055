// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use closeness_core::sweep::{records_to_csv, records_to_json, set_parallelism, shadow_min_degree_experiment};
use closeness_core::{
    analyze, bridge_join, coalesce_join, generate, graph_closeness, line_graph, run_sweep, shadow, FamilySpec, Graph,
    Measure, SweepGroup, SweepWindow, Transformed,
};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact `2^-d` closeness for graphs and graph families.
#[derive(Parser)]
#[command(name = "closeness", version, about)]
struct Cli {
    /// Worker threads for verification sweeps.
    #[arg(long, env = "CLOSENESS_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member, e.g. `lollipop:5,3`, as an edge list or DOT.
    Gen {
        spec: FamilySpec,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Graph closeness, optionally per vertex.
    Closeness {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        per_vertex: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Apply a structural transform and write the result plus its origin table.
    Transform {
        #[arg(value_enum)]
        op: TransformOp,
        #[command(flatten)]
        input: Input,
        /// Second graph for bridge-join and coalesce.
        #[arg(short = 'j', long)]
        join: Option<PathBuf>,
        #[arg(short, long)]
        p: Option<usize>,
        #[arg(short, long)]
        q: Option<usize>,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
        /// Origin table path; defaults to `<output>.origins.json`.
        #[arg(long)]
        origins: Option<PathBuf>,
    },
    /// Check closed forms against breadth-first closeness over a window.
    Verify {
        /// Every family plus the pendant-edge and shadow groups.
        #[arg(long, conflicts_with = "family")]
        all: bool,
        /// Family or group name (`pendant`, `shadow`); repeatable.
        #[arg(long)]
        family: Vec<SweepGroup>,
        #[arg(long, default_value = "default")]
        window: SweepWindow,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
        /// Also probe the shadow identity on disconnected graphs.
        #[arg(long)]
        shadow_experiment: bool,
    },
    /// Residual or additional closeness with all optimal witnesses.
    Vuln {
        #[arg(value_enum)]
        measure: MeasureArg,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Edge-list file, `-` for stdin.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Family spec such as `cycle:7`.
    #[arg(long)]
    family: Option<FamilySpec>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Shadow,
    Line,
    BridgeJoin,
    Coalesce,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Link,
    Vertex,
    Additional,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Measure {
        match m {
            MeasureArg::Link => Measure::LinkResidual,
            MeasureArg::Vertex => Measure::VertexResidual,
            MeasureArg::Additional => Measure::Additional,
        }
    }
}

/// Distinguishes a failed verification from every other error.
#[derive(Debug)]
struct VerificationFailed;

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for VerificationFailed {}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        io::stdout().write_all(text.as_bytes())?;
        return Ok(());
    }
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = read_text(path)?;
    Graph::parse_edge_list(&text).with_context(|| format!("invalid edge list {}", path.display()))
}

fn load(input: &Input) -> Result<Graph> {
    match (&input.input, &input.family) {
        (Some(path), None) => read_graph(path),
        (None, Some(spec)) => Ok(generate(spec)?),
        _ => bail!("give exactly one of --input and --family"),
    }
}

fn render(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edges => g.to_edge_list(),
        GraphFormat::Dot => g.to_dot(),
    }
}

fn closeness_report(g: &Graph, per_vertex: bool, format: ReportFormat) -> String {
    let report = graph_closeness(g);
    match format {
        ReportFormat::Text => {
            let mut out = String::new();
            if per_vertex {
                for (v, c) in report.per_vertex.iter().enumerate() {
                    out += &format!("{v}\t{}\t{c}\t{}\n", g.label(v), c.to_f64());
                }
            }
            out += &format!("total\t{}\t{}\n", report.total, report.total.to_f64());
            out
        }
        ReportFormat::Json => {
            let mut value = json!({ "order": g.order(), "total": report.total });
            if per_vertex {
                value["per_vertex"] = report
                    .per_vertex
                    .iter()
                    .enumerate()
                    .map(|(v, c)| json!({ "vertex": v, "label": g.label(v), "closeness": c }))
                    .collect();
            }
            serde_json::to_string_pretty(&value).expect("json") + "\n"
        }
        ReportFormat::Csv => {
            let mut out = String::from("vertex,label,closeness\n");
            if per_vertex {
                for (v, c) in report.per_vertex.iter().enumerate() {
                    out += &format!("{v},{},{c}\n", g.label(v).replace(',', ";"));
                }
            }
            out += &format!("total,,{}\n", report.total);
            out
        }
    }
}

fn default_origins_path(output: &Path) -> Option<PathBuf> {
    (output.as_os_str() != "-").then(|| {
        let mut name = output.as_os_str().to_owned();
        name.push(".origins.json");
        PathBuf::from(name)
    })
}

#[allow(clippy::too_many_arguments)]
fn transform(
    op: TransformOp,
    input: &Input,
    join: Option<&Path>,
    p: Option<usize>,
    q: Option<usize>,
    output: &Path,
    format: GraphFormat,
    origins: Option<PathBuf>,
) -> Result<()> {
    let g = load(input)?;
    let result: Transformed = match op {
        TransformOp::Shadow | TransformOp::Line => {
            if join.is_some() || p.is_some() || q.is_some() {
                bail!("-j, -p and -q only apply to bridge-join and coalesce");
            }
            if matches!(op, TransformOp::Shadow) {
                shadow(&g)
            } else {
                line_graph(&g)
            }
        }
        TransformOp::BridgeJoin | TransformOp::Coalesce => {
            let (Some(join), Some(p), Some(q)) = (join, p, q) else {
                bail!("bridge-join and coalesce need -j FILE2, -p P and -q Q");
            };
            let h = read_graph(join)?;
            if matches!(op, TransformOp::BridgeJoin) {
                bridge_join(&g, p, &h, q)?
            } else {
                coalesce_join(&g, p, &h, q)?
            }
        }
    };
    write_text(output, &render(&result.graph, format))?;
    if let Some(path) = origins.or_else(|| default_origins_path(output)) {
        write_text(&path, &(result.origins_json() + "\n"))?;
    }
    Ok(())
}

fn verify(groups: Vec<SweepGroup>, window: &SweepWindow, seed: u64, dir: &Path, experiment: bool) -> Result<()> {
    let groups = if groups.is_empty() { SweepGroup::all() } else { groups };
    let records = run_sweep(&groups, window, seed)?;
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    write_text(&dir.join("verification.csv"), &records_to_csv(&records))?;
    write_text(&dir.join("verification.json"), &(records_to_json(&records) + "\n"))?;

    if experiment {
        let findings = shadow_min_degree_experiment(window.shadow_samples, window.shadow_max_order, seed)?;
        let holding = findings.iter().filter(|f| f.holds).count();
        write_text(
            &dir.join("shadow_experiment.json"),
            &(serde_json::to_string_pretty(&findings)? + "\n"),
        )?;
        println!(
            "shadow experiment: identity held on {holding} of {} graphs",
            findings.len()
        );
    }

    let failed = records.iter().filter(|r| !r.pass).count();
    println!(
        "{} records, {} passed, {failed} failed",
        records.len(),
        records.len() - failed
    );
    if let Some(first) = records.iter().find(|r| !r.pass) {
        eprintln!("first failure: {}", first.csv_row());
        return Err(VerificationFailed.into());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    if let Some(threads) = cli.threads {
        set_parallelism(threads)?;
    }
    match cli.command {
        Command::Gen { spec, output, format } => write_text(&output, &render(&generate(&spec)?, format)),
        Command::Closeness {
            input,
            per_vertex,
            format,
        } => {
            let g = load(&input)?;
            print!("{}", closeness_report(&g, per_vertex, format));
            Ok(())
        }
        Command::Transform {
            op,
            input,
            join,
            p,
            q,
            output,
            format,
            origins,
        } => transform(op, &input, join.as_deref(), p, q, &output, format, origins),
        Command::Verify {
            all: _,
            family,
            window,
            seed,
            output,
            shadow_experiment,
        } => verify(family, &window, seed, &output, shadow_experiment),
        Command::Vuln { measure, input } => {
            let report = analyze(&load(&input)?, measure.into())?;
            println!("{}", report.to_json());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<VerificationFailed>() => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
