//! Command-line front end. [`run`] returns the process exit code.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::families::{
    bound_check, chromatic_partition, classify_bipartite_report, classify_dn2_report, classify_multipartite_report,
    construct_multipartite, edge_bound, fixture_text, BoundCheck, Class, Classification, Fixture,
};
use crate::graph::complete_multipartite;
use crate::io::{parse_graph, parse_layout, serialize_graph, serialize_layout, verdict_json, GraphDoc};
use crate::represent::{decide_itrvg, decide_trvg, extract, verify, Budget, Mapping, Screens, Verdict};
use crate::service::{parse_mapping, parse_part_list};
use crate::svg::{render_svg, RenderOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "trvg", version, about = "Transparent rectangle visibility graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Visibility graph of a layout.
    Extract {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Check that a layout represents a graph.
    Verify {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(long, default_value = "identity")]
        mapping: String,
    },
    /// Decide representability by exhaustive search.
    Decide {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long = "budget-nodes")]
        budget_nodes: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Run the edge-bound and induced K_{3,3,3} screens first (default).
        #[arg(long, overrides_with = "no_screens")]
        screens: bool,
        /// Pure search only.
        #[arg(long = "no-screens")]
        no_screens: bool,
        /// Write the certificate layout here on a Yes.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Build a layout of a complete multipartite graph.
    Construct {
        #[arg(long, value_name = "A1,A2,...")]
        multipartite: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Closed-form classification.
    Classify(ClassifyArgs),
    /// Edge bound for a k-partite graph.
    Bound {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// `auto` for a minimum coloring, else a JSON file holding a list of
        /// part indices.
        #[arg(long, default_value = "auto")]
        parts: String,
    },
    /// Print or save a named fixture.
    Fixture {
        name: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Render a layout as SVG.
    Render {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long)]
        edges: bool,
        /// Comma-separated ids of a staircase.
        #[arg(long, value_delimiter = ',')]
        strips: Vec<String>,
        #[arg(long)]
        bbox: bool,
    },
    /// Run the local HTTP service.
    Serve {
        #[arg(long)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ClassifyArgs {
    #[arg(long, value_name = "A1,A2,...")]
    multipartite: Option<String>,
    #[arg(long, value_name = "P,Q")]
    bipartite: Option<String>,
    #[arg(long, value_name = "N")]
    dn2: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Trvg,
    Itrvg,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn class_exit(c: &Classification) -> i32 {
    match c.class {
        Class::Trvg => EXIT_OK,
        Class::NonTrvg => EXIT_NO,
        Class::Open => EXIT_UNKNOWN,
    }
}

fn exec(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Extract { input, output } => {
            let g = extract(&parse_layout(&read(&input)?)?)?;
            let text = serialize_graph(&g);
            match output {
                Some(p) => write(&p, &text)?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { input, graph, mapping } => {
            let mapping = parse_mapping(&mapping)?;
            let report = verify(&parse_layout(&read(&input)?)?, &parse_graph(&read(&graph)?)?, &mapping)?;
            emit(out, &serde_json::to_string(&report).expect("plain data"))?;
            Ok(if report.ok { EXIT_OK } else { EXIT_NO })
        }
        Command::Decide { graph, mode, budget_nodes, timeout, screens: _, no_screens, output } => {
            let g = parse_graph(&read(&graph)?)?;
            let default = Budget::from_env();
            let nodes = budget_nodes.unwrap_or(default.max_nodes);
            let seconds = timeout.unwrap_or(default.max_seconds);
            if nodes == 0 || !seconds.is_finite() || seconds <= 0.0 {
                return Err(Error::InvalidArgument("budget must be positive".into()));
            }
            let budget = Budget::new(nodes, seconds);
            let d = match mode {
                ModeArg::Trvg => decide_trvg(&g, budget, if no_screens { Screens::NONE } else { Screens::ALL })?,
                ModeArg::Itrvg => decide_itrvg(&g, budget)?,
            };
            if let (Some(p), Verdict::Yes(cert)) = (&output, &d.verdict) {
                write(p, &serialize_layout(cert))?;
            }
            emit(out, &verdict_json(&g, &d).to_string())?;
            Ok(match d.verdict {
                Verdict::Yes(_) => EXIT_OK,
                Verdict::No(_) => EXIT_NO,
                Verdict::Unknown { .. } => EXIT_UNKNOWN,
            })
        }
        Command::Construct { multipartite, output, svg } => {
            let parts = parse_part_list(&multipartite)?;
            let layout = match construct_multipartite(&parts) {
                Ok(l) => l,
                Err(Error::NotRepresentable(_)) => {
                    emit(out, &serde_json::to_string(&classify_multipartite_report(&parts)).expect("plain data"))?;
                    return Ok(EXIT_NO);
                }
                Err(e) => return Err(e),
            };
            let report = verify(&layout, &complete_multipartite(&parts), &Mapping::Identity)?;
            if let Some(p) = &svg {
                write(p, &render_svg(&layout, &RenderOptions::default()))?;
            }
            match output {
                Some(p) => {
                    write(&p, &serialize_layout(&layout))?;
                    let summary = json!({"n": layout.len(), "verified": report.ok});
                    emit(out, &summary.to_string())?;
                }
                None => emit(out, &serialize_layout(&layout))?,
            }
            Ok(if report.ok { EXIT_OK } else { EXIT_NO })
        }
        Command::Classify(args) => {
            let report = if let Some(m) = args.multipartite {
                classify_multipartite_report(&parse_part_list(&m)?)
            } else if let Some(b) = args.bipartite {
                let pq = parse_part_list(&b)?;
                let [p, q] = pq.sizes()[..] else {
                    return Err(Error::InvalidArgument("bipartite expects two sizes".into()));
                };
                classify_bipartite_report(p, q)
            } else {
                classify_dn2_report(args.dn2.expect("clap enforces one option"))?
            };
            emit(out, &serde_json::to_string(&report).expect("plain data"))?;
            Ok(class_exit(&report))
        }
        Command::Bound { graph, parts } => {
            let doc = GraphDoc::parse(&read(&graph)?)?;
            let g = doc.to_graph()?;
            let parts = if parts == "auto" {
                match doc.parts {
                    Some(p) => p,
                    None => chromatic_partition(&g)?,
                }
            } else {
                crate::io::from_value::<Vec<usize>>(
                    serde_json::from_str(&read(Path::new(&parts))?)
                        .map_err(|e| Error::Schema { path: ".".into(), message: e.to_string() })?,
                )?
            };
            let check = bound_check(&g, &parts)?;
            let (result, k, n, e, code) = match check {
                BoundCheck::Within { k, n, e } => ("within", k, n, e, EXIT_OK),
                BoundCheck::Violated { k, n, e } => ("violated", k, n, e, EXIT_NO),
            };
            let line = json!({"result": result, "k": k, "n": n, "e": e, "bound": edge_bound(n, k)});
            emit(out, &line.to_string())?;
            Ok(code)
        }
        Command::Fixture { name, output } => {
            let text = fixture_text(Fixture::from_name(&name)?);
            match output {
                Some(p) => write(&p, &text)?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Render { input, output, edges, strips, bbox } => {
            let layout = parse_layout(&read(&input)?)?;
            if !strips.is_empty() {
                let ids: Vec<&str> = strips.iter().map(String::as_str).collect();
                layout.strips(&ids)?;
            }
            write(&output, &render_svg(&layout, &RenderOptions { edges, strips, bbox }))?;
            Ok(EXIT_OK)
        }
        Command::Serve { port, host } => {
            crate::service::serve(&host, port)?;
            Ok(EXIT_OK)
        }
    }
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::InvalidPartList(_) | Error::UnknownFixture(_) => EXIT_USAGE,
        _ => EXIT_DATA,
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match exec(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_for(&e)
        }
    }
}
