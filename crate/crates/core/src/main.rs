//! Command-line interface to the link-invariant pipeline.
//!
//! Machine-readable JSON goes to stdout, one document per run; human
//! summaries go to stderr. Exit codes: 0 for success or a positive result,
//! 1 for a definitive negative or an inconclusive result, 2 for invalid
//! input, 3 for an exhausted search budget.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_traits::One;
use serde_json::json;

use forklink::adjacency::{
    adjacency_search, density_estimate, subgraph_search, SearchBudget, SearchOutcome,
};
use forklink::braid::band_word_from_graph;
use forklink::catalog::{build_catalog, catalog_lookup, parse_catalog};
use forklink::graph::{density_upper_bound, Side};
use forklink::invariants::signature_is_maximal;
use forklink::partition::{twisted_torus_graph, Partition};
use forklink::{fingerprint, BipartiteGraph, Error, Fingerprint, Result};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "forklink",
    version,
    about = "Link invariants of embedded bipartite graphs",
    long_about = "Translates embedded bipartite graphs to quasipositive braid words, \
computes exact link invariants through Seifert matrices, and searches the \
splitting and cutting neighborhoods of the presented links."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A link presentation given one of three ways.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Presentation {
    /// Graph JSON file: {"p":…,"q":…,"edges":[[u,l],…]}.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,

    /// Complete graph on P upper and Q lower vertices (torus link T(P,Q)).
    #[arg(long, value_name = "P,Q")]
    theta: Option<String>,

    /// Twisted-torus partition, weakly decreasing, e.g. 4,4,3,2,2.
    #[arg(long, value_name = "A1,A2,...")]
    partition: Option<String>,
}

impl Presentation {
    fn load(&self) -> Result<BipartiteGraph> {
        if let Some(path) = &self.graph {
            return read_graph(path);
        }
        if let Some(pair) = &self.theta {
            let (p, q) = parse_pair(pair)?;
            return BipartiteGraph::complete(p, q);
        }
        let text = self.partition.as_deref().expect("clap enforces one source");
        Ok(twisted_torus_graph(&Partition::from_str(text)?))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant fingerprint of a presented link.
    Invariants {
        #[command(flatten)]
        presentation: Presentation,
    },

    /// Emit the quasipositive band word of a presentation.
    Braid {
        #[command(flatten)]
        presentation: Presentation,

        /// Expand band generators into an Artin generator word.
        #[arg(long)]
        expanded: bool,
    },

    /// Compute the dual of a partition; both present the same link.
    Dual {
        /// Weakly decreasing partition, e.g. 4,4,3,2,2.
        #[arg(long, value_name = "A1,A2,...")]
        partition: String,

        /// Verify that the partition and its dual have equal fingerprints.
        #[arg(long)]
        check: bool,
    },

    /// Search for a splitting sequence from one complete graph to the link
    /// of another.
    Adjacent {
        /// Source complete graph P,Q.
        #[arg(long, value_name = "P,Q")]
        source: String,

        /// Target complete graph A,B (matched by fingerprint only).
        #[arg(long, value_name = "A,B")]
        target: String,

        /// Distinct-state budget, source included.
        #[arg(long, value_name = "N", default_value_t = 100_000)]
        max_states: usize,

        /// Wall-clock budget in seconds.
        #[arg(long, value_name = "S", default_value_t = 60)]
        max_seconds: u64,
    },

    /// Enumerate fixed-size edge subsets of a complete graph whose boundary
    /// matches a fingerprint.
    SearchSubgraph {
        /// Ambient complete graph P,Q.
        #[arg(long, value_name = "P,Q")]
        theta: String,

        /// Number of edges each subgraph keeps.
        #[arg(long, value_name = "E")]
        edges: usize,

        /// Fingerprint JSON file to match (as printed by `invariants`).
        #[arg(long = "match", value_name = "FILE")]
        match_file: PathBuf,
    },

    /// Edge density of one graph, or the best density over all small frames.
    Density {
        /// Graph JSON file: report its density and the frame bound.
        #[arg(long, value_name = "FILE", required_unless_present = "match_file")]
        graph: Option<PathBuf>,

        /// Fingerprint JSON file: search all frames up to the cap.
        #[arg(
            long = "match",
            value_name = "FILE",
            conflicts_with = "graph",
            requires = "cap"
        )]
        match_file: Option<PathBuf>,

        /// Largest frame side for the estimate (at least 2).
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
    },

    /// Build or query the complete-graph fingerprint catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Fingerprint every complete graph with 2 <= p <= q within the bounds.
    Build {
        /// Largest key, as P,Q.
        #[arg(long, value_name = "P,Q")]
        max: String,

        /// Output file (line-delimited JSON).
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },

    /// Find every catalog key matching a fingerprint.
    Lookup {
        /// Fingerprint JSON file (as printed by `invariants`).
        #[arg(long, value_name = "FILE")]
        fingerprint: PathBuf,

        /// Catalog file produced by `catalog build`.
        #[arg(long, value_name = "FILE")]
        catalog: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("forklink: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Invariants { presentation } => run_invariants(&presentation),
        Command::Braid { presentation, expanded } => run_braid(&presentation, expanded),
        Command::Dual { partition, check } => run_dual(&partition, check),
        Command::Adjacent { source, target, max_states, max_seconds } => {
            run_adjacent(&source, &target, SearchBudget { max_states, max_seconds })
        }
        Command::SearchSubgraph { theta, edges, match_file } => {
            run_search_subgraph(&theta, edges, &match_file)
        }
        Command::Density { graph, match_file, cap } => run_density(graph, match_file, cap),
        Command::Catalog { action } => match action {
            CatalogAction::Build { max, out } => run_catalog_build(&max, &out),
            CatalogAction::Lookup { fingerprint, catalog } => {
                run_catalog_lookup(&fingerprint, &catalog)
            }
        },
    }
}

fn run_invariants(presentation: &Presentation) -> Result<u8> {
    let graph = presentation.load()?;
    let fp = fingerprint(&graph);
    println!("{}", fp.to_json());
    for line in describe(&fp) {
        eprintln!("{line}");
    }
    Ok(EXIT_OK)
}

fn run_braid(presentation: &Presentation, expanded: bool) -> Result<u8> {
    let graph = presentation.load()?;
    let band = band_word_from_graph(&graph)?;
    if expanded {
        let artin = band.expand();
        println!(
            "{}",
            json!({ "strands": artin.strands(), "letters": artin.letters() })
        );
        eprintln!("Artin word: {artin}");
    } else {
        let bands: Vec<[usize; 2]> = band.letters().iter().map(|g| [g.i, g.j]).collect();
        println!("{}", json!({ "strands": band.strands(), "bands": bands }));
        eprintln!("band word on {} strands: {band}", band.strands());
    }
    Ok(EXIT_OK)
}

fn run_dual(partition: &str, check: bool) -> Result<u8> {
    let partition = Partition::from_str(partition)?;
    let dual = partition.dual();
    let mut doc = json!({ "partition": partition.parts(), "dual": dual.parts() });
    eprintln!("dual of ({partition}) is ({dual})");
    if check {
        let fp = fingerprint(&twisted_torus_graph(&partition));
        let fp_dual = fingerprint(&twisted_torus_graph(&dual));
        let ok = fp == fp_dual;
        doc["fingerprints_match"] = json!(ok);
        if !ok {
            println!("{doc}");
            eprintln!("fingerprints differ — this should never happen");
            return Ok(EXIT_NEGATIVE);
        }
        eprintln!("fingerprints agree");
    }
    println!("{doc}");
    Ok(EXIT_OK)
}

fn run_adjacent(source: &str, target: &str, budget: SearchBudget) -> Result<u8> {
    let (p, q) = parse_pair(source)?;
    let (a, b) = parse_pair(target)?;
    let target = BipartiteGraph::complete(a, b)?;
    match adjacency_search(p, q, &target, &budget)? {
        SearchOutcome::Found(cert) => {
            println!("{}", serde_json::to_string(&*cert)?);
            eprintln!(
                "witness found: {} splitting move(s) carry the complete graph on \
                 ({p},{q}) to the fingerprint of ({a},{b}); identification is \
                 fingerprint-only",
                cert.moves.len()
            );
            Ok(EXIT_OK)
        }
        SearchOutcome::Impossible { source_chi, target_chi } => {
            println!(
                "{}",
                json!({
                    "outcome": "impossible",
                    "source_chi": source_chi,
                    "target_chi": target_chi
                })
            );
            eprintln!(
                "target Euler characteristic {target_chi} lies below the source's \
                 {source_chi}; splittings only raise it — definitively impossible"
            );
            Ok(EXIT_NEGATIVE)
        }
        SearchOutcome::NotFound { complete: true, states } => {
            println!(
                "{}",
                json!({ "outcome": "not-found", "complete": true, "states": states })
            );
            eprintln!(
                "no state at the forced depth matches ({states} states examined); \
                 no splitting sequence of that length exists"
            );
            Ok(EXIT_NEGATIVE)
        }
        SearchOutcome::NotFound { complete: false, states } => {
            println!(
                "{}",
                json!({ "outcome": "budget-exhausted", "complete": false, "states": states })
            );
            eprintln!("budget exhausted after {states} states; result inconclusive");
            Ok(EXIT_BUDGET)
        }
    }
}

fn run_search_subgraph(theta: &str, edges: usize, match_file: &Path) -> Result<u8> {
    let (p, q) = parse_pair(theta)?;
    let target = read_fingerprint(match_file)?;
    let witnesses = subgraph_search(p, q, edges, &target)?;
    println!(
        "{}",
        json!({
            "frame": [p, q],
            "edges": edges,
            "witness_count": witnesses.len(),
            "witnesses": witnesses
        })
    );
    if witnesses.is_empty() {
        eprintln!("no {edges}-edge subgraph of the complete graph on ({p},{q}) matches");
        Ok(EXIT_NEGATIVE)
    } else {
        eprintln!(
            "{} subgraph class(es) match, out of the {edges}-edge subsets of ({p},{q})",
            witnesses.len()
        );
        Ok(EXIT_OK)
    }
}

fn run_density(
    graph: Option<PathBuf>,
    match_file: Option<PathBuf>,
    cap: Option<usize>,
) -> Result<u8> {
    if let Some(path) = graph {
        let g = read_graph(&path)?;
        let density = g.density()?;
        let braid_index = g.forks_of(Side::Upper).len();
        let bound = density_upper_bound(braid_index, g.euler_characteristic()?)?;
        println!(
            "{}",
            json!({ "density": density.to_string(), "bound": bound.to_string() })
        );
        eprintln!(
            "density {density} on braid index {braid_index}; frames of this index \
             and Euler characteristic cannot exceed {bound}"
        );
        return Ok(EXIT_OK);
    }
    let path = match_file.expect("clap requires --graph or --match");
    let cap = cap.expect("clap couples --cap with --match");
    let target = read_fingerprint(&path)?;
    let (density, exhausted) = density_estimate(&target, cap)?;
    println!(
        "{}",
        json!({ "density": density.to_string(), "exhausted": exhausted, "cap": cap })
    );
    if exhausted {
        eprintln!("density {density} is the maximum over all frames — larger frames are barred arithmetically");
        Ok(EXIT_OK)
    } else {
        eprintln!("best density {density} within cap {cap}; larger frames could still do better");
        Ok(EXIT_NEGATIVE)
    }
}

fn run_catalog_build(max: &str, out: &Path) -> Result<u8> {
    let (max_p, max_q) = parse_pair(max)?;
    let text = build_catalog(max_p, max_q)?;
    fs::write(out, &text)?;
    let entries = text.lines().count() - 1;
    eprintln!("wrote {entries} entries to {}", out.display());
    Ok(EXIT_OK)
}

fn run_catalog_lookup(fingerprint_file: &Path, catalog_file: &Path) -> Result<u8> {
    let target = read_fingerprint(fingerprint_file)?;
    let entries = parse_catalog(&fs::read_to_string(catalog_file)?)?;
    let matches = catalog_lookup(&entries, &target);
    println!("{}", json!({ "matches": matches }));
    match matches.len() {
        0 => {
            eprintln!("no catalog key matches this fingerprint");
            Ok(EXIT_NEGATIVE)
        }
        1 => {
            eprintln!("matched key ({},{})", matches[0].0, matches[0].1);
            Ok(EXIT_OK)
        }
        n => {
            eprintln!("warning: {n} catalog keys share this fingerprint; the invariants do not separate them");
            Ok(EXIT_OK)
        }
    }
}

/// Human-readable fingerprint summary for stderr.
fn describe(fp: &Fingerprint) -> Vec<String> {
    let mut lines = Vec::new();
    let plural = if fp.components == 1 { "component" } else { "components" };
    lines.push(format!(
        "{} {plural}, maximal Euler characteristic {}",
        fp.components, fp.chi_max
    ));
    lines.push(format!(
        "signature {}, nullity {}, determinant {}",
        fp.signature, fp.nullity, fp.determinant
    ));
    lines.push(format!("Alexander polynomial: {}", fp.alexander));
    if fp.split {
        lines.push(format!(
            "split link with {} pieces; Alexander polynomial vanishes",
            fp.per_component.len()
        ));
    }
    lines.push(format!("fibredness: {}", fibredness_note(fp)));
    if fp.is_knot() {
        let maximal = signature_is_maximal(fp).expect("is_knot checked");
        lines.push(format!(
            "signature {} maximal (sigma = 1 - chi {})",
            if maximal { "is" } else { "is not" },
            if maximal { "holds" } else { "fails" }
        ));
    }
    lines
}

/// Fibredness is only ever reported negatively: a non-monic Alexander
/// polynomial obstructs fibering, a monic one decides nothing.
fn fibredness_note(fp: &Fingerprint) -> String {
    if fp.split {
        return "not fibred (split link)".to_owned();
    }
    match fp.alexander.leading_coefficient() {
        Some(c) if c.magnitude().is_one() => {
            "inconclusive (Alexander polynomial is monic)".to_owned()
        }
        Some(_) => "not fibred (Alexander polynomial is not monic)".to_owned(),
        None => "inconclusive (Alexander polynomial vanishes)".to_owned(),
    }
}

fn read_graph(path: &Path) -> Result<BipartiteGraph> {
    BipartiteGraph::from_json(&fs::read_to_string(path)?)
}

fn read_fingerprint(path: &Path) -> Result<Fingerprint> {
    Fingerprint::from_json(&fs::read_to_string(path)?)
}

fn parse_pair(text: &str) -> Result<(usize, usize)> {
    let mut parts = text.split(',');
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(Error::Parse(format!(
            "expected two comma-separated numbers, got {text:?}"
        )));
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("invalid number {s:?} in pair {text:?}")))
    };
    Ok((parse(a)?, parse(b)?))
}
