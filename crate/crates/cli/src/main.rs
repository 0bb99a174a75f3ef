//! `ndl`: neighborhood degree lists from the command line.
//!
//! Exit codes:
//!
//! | code | meaning                                                   |
//! |------|-----------------------------------------------------------|
//! | 0    | success; for `check` and `unique` a positive verdict      |
//! | 1    | negative verdict (`check`: not graphic, `unique`: not unique) |
//! | 2    | malformed input                                           |
//! | 3    | file could not be read                                    |
//! | 4    | input exceeds an oracle size cap                          |
//! | 5    | the two graphs have different NDLs                        |
//! | 6    | the tableau has no realization                            |

use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ndl_core::graph::Graph;
use ndl_core::graphicality::graphicality_failures;
use ndl_core::io as fmt_io;
use ndl_core::oracle::{enumerate_labeled_realizations, OracleError, MAX_REALIZATION_N};
use ndl_core::realization::{realize_ndl, switch_sequence, RealizationError};
use ndl_core::reconstruction::{
    deck_of, degree_sequence_from_deck, edge_count_from_deck, ndl_from_deck,
};
use ndl_core::tableau::{canonicalize, ndl_of, Tableau};
use ndl_core::uniqueness::{is_ndl_unique_graph, is_ndl_unique_tableau, non_uniqueness_witness};

#[derive(Parser)]
#[command(
    name = "ndl",
    version,
    about = "Neighborhood degree lists of simple graphs"
)]
struct Cli {
    /// Graph file format; by default taken from the extension
    /// (.g6, .edges, .json) or sniffed from the contents.
    #[arg(long, global = true, value_enum)]
    format: Option<GraphFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    G6,
    Edges,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the NDL of a graph as tableau JSON.
    Ndl {
        graph: PathBuf,
        /// Rows by length, then lexicographically, both descending.
        #[arg(long)]
        canonical: bool,
    },
    /// Decide whether a tableau is the NDL of some graph.
    Check { tableau: PathBuf },
    /// Build a graph with the given NDL.
    Realize { tableau: PathBuf },
    /// Decide whether a tableau (or a graph's NDL) has one realization.
    Unique {
        input: PathBuf,
        /// When not unique, print an N-switch on a realization.
        #[arg(long)]
        witness: bool,
    },
    /// N-switches turning the first graph into the second.
    SwitchPath { from: PathBuf, to: PathBuf },
    /// Print the deck of vertex-deleted subgraphs.
    Deck { graph: PathBuf },
    /// Recover edge count, degree sequence and canonical NDL from a deck.
    Reconstruct { deck: PathBuf },
    /// Count labeled realizations by brute force.
    CountRealizations {
        tableau: PathBuf,
        /// Refuse tableaux with more rows than this.
        #[arg(long, default_value_t = MAX_REALIZATION_N)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Code {
    Negative = 1,
    Malformed = 2,
    Io = 3,
    Cap = 4,
    Mismatch = 5,
    NotGraphic = 6,
}

#[derive(Debug)]
struct Failure {
    code: Code,
    msg: String,
}

impl Failure {
    fn new(code: Code, msg: impl fmt::Display) -> Self {
        Failure {
            code,
            msg: msg.to_string(),
        }
    }
}

impl From<fmt_io::FormatError> for Failure {
    fn from(e: fmt_io::FormatError) -> Self {
        Failure::new(Code::Malformed, e)
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::new(Code::Cap, e)
    }
}

impl From<RealizationError> for Failure {
    fn from(e: RealizationError) -> Self {
        let code = match e {
            RealizationError::NotGraphicNdl(_) | RealizationError::Tableau(_) => Code::NotGraphic,
            RealizationError::VertexCountMismatch(..) | RealizationError::NdlMismatch(_) => {
                Code::Mismatch
            }
            _ => Code::Malformed,
        };
        Failure::new(code, e)
    }
}

type Outcome = Result<Verdict, Failure>;

enum Verdict {
    Yes,
    No,
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let io_err = |e: io::Error| Failure::new(Code::Io, format!("{}: {e}", path.display()));
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn sniff(path: &Path, text: &str) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => return GraphFormat::G6,
        Some("edges") => return GraphFormat::Edges,
        Some("json") => return GraphFormat::Json,
        _ => {}
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with('{') {
        GraphFormat::Json
    } else if first.starts_with("n ") || first == "n" {
        GraphFormat::Edges
    } else {
        GraphFormat::G6
    }
}

fn parse_graph(path: &Path, text: &str, format: Option<GraphFormat>) -> Result<Graph, Failure> {
    let located =
        |e: fmt_io::FormatError| Failure::new(Code::Malformed, format!("{}: {e}", path.display()));
    match format.unwrap_or_else(|| sniff(path, text)) {
        GraphFormat::Json => fmt_io::graph_from_json(text).map_err(located),
        GraphFormat::Edges => fmt_io::read_edge_list(text).map_err(located),
        GraphFormat::G6 => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let line = lines.next().ok_or_else(|| {
                Failure::new(
                    Code::Malformed,
                    format!("{}: no graph6 line", path.display()),
                )
            })?;
            if lines.next().is_some() {
                return Err(Failure::new(
                    Code::Malformed,
                    format!("{}: expected one graph6 line", path.display()),
                ));
            }
            fmt_io::from_graph6(line).map_err(located)
        }
    }
}

fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph, Failure> {
    parse_graph(path, &read_input(path)?, format)
}

fn read_tableau(path: &Path) -> Result<Tableau, Failure> {
    fmt_io::tableau_from_json(&read_input(path)?)
        .map_err(|e| Failure::new(Code::Malformed, format!("{}: {e}", path.display())))
}

fn realization_text(g: &Graph) -> String {
    format!(
        "# graph6: {}\n{}",
        fmt_io::to_graph6(g),
        fmt_io::write_edge_list(g)
    )
}

fn unique(input: &Path, witness: bool, format: Option<GraphFormat>) -> Outcome {
    let text = read_input(input)?;
    // tableaux are JSON arrays; anything else is a graph
    let g = if text.trim_start().starts_with('[') {
        let t = fmt_io::tableau_from_json(&text)
            .map_err(|e| Failure::new(Code::Malformed, format!("{}: {e}", input.display())))?;
        if is_ndl_unique_tableau(&t)? {
            println!("unique");
            return Ok(Verdict::Yes);
        }
        realize_ndl(&t)?
    } else {
        let g = parse_graph(input, &text, format)?;
        if is_ndl_unique_graph(&g) {
            println!("unique");
            return Ok(Verdict::Yes);
        }
        g
    };
    println!("not unique");
    if witness {
        let m = non_uniqueness_witness(&g)
            .expect("every realization of a non-unique NDL admits an N-switch");
        let doc = serde_json::json!({ "graph6": fmt_io::to_graph6(&g), "switch": m });
        println!("{doc}");
    }
    Ok(Verdict::No)
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Ndl { graph, canonical } => {
            let t = ndl_of(&read_graph(&graph, format)?);
            let t = if canonical { canonicalize(&t) } else { t };
            println!("{}", fmt_io::tableau_to_json(&t));
        }
        Command::Check { tableau } => {
            let failures = graphicality_failures(&read_tableau(&tableau)?);
            if failures.is_empty() {
                println!("graphic");
            } else {
                println!("not graphic");
                for f in &failures {
                    println!("  {f}");
                }
                return Ok(Verdict::No);
            }
        }
        Command::Realize { tableau } => {
            let g = realize_ndl(&read_tableau(&tableau)?)?;
            print!("{}", realization_text(&g));
        }
        Command::Unique { input, witness } => return unique(&input, witness, format),
        Command::SwitchPath { from, to } => {
            let path = switch_sequence(&read_graph(&from, format)?, &read_graph(&to, format)?)?;
            println!("{}", fmt_io::switch_path_to_json(&path));
        }
        Command::Deck { graph } => {
            print!(
                "{}",
                fmt_io::write_deck(&deck_of(&read_graph(&graph, format)?))
            );
        }
        Command::Reconstruct { deck } => {
            let deck = fmt_io::read_deck(&read_input(&deck)?)?;
            let malformed = |e| Failure::new(Code::Malformed, e);
            let edges = edge_count_from_deck(&deck).map_err(malformed)?;
            let degrees = degree_sequence_from_deck(&deck).map_err(malformed)?;
            let t = ndl_from_deck(&deck).map_err(malformed)?;
            let degrees: Vec<String> = degrees.iter().map(ToString::to_string).collect();
            println!("edges {edges}");
            println!("degrees {}", degrees.join(" "));
            println!("ndl {}", fmt_io::tableau_to_json(&t));
        }
        Command::CountRealizations { tableau, max_n } => {
            let t = read_tableau(&tableau)?;
            if t.len() > max_n {
                return Err(Failure::new(
                    Code::Cap,
                    format!("tableau has {} rows, more than --max-n {max_n}", t.len()),
                ));
            }
            println!("{}", enumerate_labeled_realizations(&t)?.len());
        }
    }
    Ok(Verdict::Yes)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(Code::Negative as u8),
        Err(f) => {
            eprintln!("ndl: {}", f.msg);
            ExitCode::from(f.code as u8)
        }
    }
}
