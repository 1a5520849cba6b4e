//! `orbitkit`: orbits, transitivity numbers, products, orbit-accelerated
//! properties and the theorem harness from the command line.
//!
//! Everything written to stdout is a pure function of the arguments and the
//! input bytes. Timings and product legends go to stderr.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use orbitkit::aut::DEFAULT_NODE_BUDGET;
use orbitkit::corpus::Corpus;
use orbitkit::graph::{make_cycle, make_hypercube, parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use orbitkit::invariants::{benchmark, evaluate_fast, evaluate_naive, table_from_values, Property, PropertyTable};
use orbitkit::orbits::{orbits_with_budget, OrbitPartition};
use orbitkit::products::{product_with_limit, ProductKind, DEFAULT_PRODUCT_LIMIT};
use orbitkit::theorems::{run_theorem, HarnessConfig, TheoremId};
use orbitkit::{Error, Graph, Result};

#[derive(Parser, Debug)]
#[command(name = "orbitkit", version, about = "Graph symmetry toolkit")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    out: Option<OutputFormat>,
    /// Search-tree node budget for the automorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    node_budget: u64,
    /// Largest product, in vertices, that will be built.
    #[arg(long, global = true, default_value_t = DEFAULT_PRODUCT_LIMIT, value_parser = positive)]
    product_limit: usize,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
    Graph6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbit partition of the automorphism group.
    Orbits {
        /// Input file, or `-` for stdin.
        input: PathBuf,
    },
    /// Number of orbits.
    Tnumber { input: PathBuf },
    /// Build a product; `--out table` writes an edge list.
    Product {
        #[arg(value_parser = parse_kind)]
        kind: ProductKind,
        left: PathBuf,
        right: PathBuf,
    },
    /// Evaluate a vertex property (degree, eccentricity, total_distance,
    /// betweenness) and group it by orbit.
    Property {
        name: String,
        input: PathBuf,
        /// Evaluate once per orbit representative.
        #[arg(long)]
        fast: bool,
    },
    /// Run a theorem check over its instance family.
    Verify {
        /// path-product, path-square, product-general or product-isomorphic.
        theorem: String,
        /// Largest path order, or largest corpus factor order.
        #[arg(long)]
        max: Option<usize>,
        /// Product kinds for the product theorems; default both.
        #[arg(long, value_parser = parse_kind)]
        kind: Vec<ProductKind>,
        /// Directory holding connected{n}.g6 files instead of the built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Compare naive and per-orbit property evaluation. Without an input,
    /// runs C_1000 and Q_10.
    Bench {
        input: Option<PathBuf>,
        #[arg(long, default_value = "eccentricity")]
        property: String,
    },
}

fn parse_kind(s: &str) -> std::result::Result<ProductKind, String> {
    s.parse()
}

fn read_input(path: &PathBuf, format: InputFormat) -> Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    match format {
        InputFormat::Graph6 => parse_graph6(&text),
        InputFormat::Edgelist => parse_edge_list(&text),
    }
}

fn orbits_table(p: &OrbitPartition) -> String {
    let mut out = format!("n {}\nr {}\norbit\tsize\trep\tmembers\n", p.order(), p.count());
    for (i, (orbit, rep)) in p.orbits().iter().zip(p.representatives()).enumerate() {
        let members: Vec<String> = orbit.iter().map(ToString::to_string).collect();
        writeln!(out, "{i}\t{}\t{rep}\t{}", orbit.len(), members.join(" ")).unwrap();
    }
    out
}

fn property_table(t: &PropertyTable, orbits: &OrbitPartition) -> String {
    let mut out = format!(
        "property {}\nr {}\ndistinct_values {}\nrep\tsize\tvalue\n",
        t.property,
        t.r,
        orbitkit::invariants::distinct_value_count(t)
    );
    for ((rep, value), orbit) in t.per_orbit.iter().zip(orbits.orbits()) {
        writeln!(out, "{rep}\t{}\t{value}", orbit.len()).unwrap();
    }
    out
}

#[derive(Serialize)]
struct ProductReport {
    kind: ProductKind,
    n: usize,
    m: usize,
    graph6: String,
    legend: Vec<String>,
}

fn run(cli: Cli) -> Result<String> {
    let opts = &cli.opts;
    let out = opts.out;
    Ok(match &cli.command {
        Command::Orbits { input } => {
            let g = read_input(input, opts.format)?;
            let p = orbits_with_budget(&g, opts.node_budget)?;
            match out.unwrap_or(OutputFormat::Json) {
                OutputFormat::Table => orbits_table(p),
                _ => p.to_json() + "\n",
            }
        }
        Command::Tnumber { input } => {
            let g = read_input(input, opts.format)?;
            format!("{}\n", orbits_with_budget(&g, opts.node_budget)?.count())
        }
        Command::Product { kind, left, right } => {
            if left.as_os_str() == "-" && right.as_os_str() == "-" {
                return Err(Error::InvalidGraph("only one factor can be read from stdin".into()));
            }
            let g = read_input(left, opts.format)?;
            let h = read_input(right, opts.format)?;
            let (p, map) = product_with_limit(*kind, &g, &h, opts.product_limit)?;
            let legend = map.legend();
            match out.unwrap_or(OutputFormat::Graph6) {
                OutputFormat::Json => {
                    let report = ProductReport {
                        kind: *kind,
                        n: p.order(),
                        m: p.edge_count(),
                        graph6: to_graph6(&p),
                        legend: legend.lines().map(str::to_string).collect(),
                    };
                    serde_json::to_string(&report).expect("product report serializes") + "\n"
                }
                other => {
                    eprint!("{legend}");
                    if other == OutputFormat::Table {
                        to_edge_list(&p)
                    } else {
                        to_graph6(&p) + "\n"
                    }
                }
            }
        }
        Command::Property { name, input, fast } => {
            let property: Property = name.parse()?;
            let g = read_input(input, opts.format)?;
            let orbits = orbits_with_budget(&g, opts.node_budget)?;
            let table = if *fast {
                evaluate_fast(&g, property, orbits)?
            } else {
                table_from_values(property, orbits, evaluate_naive(&g, property)?)
            };
            match out.unwrap_or(OutputFormat::Json) {
                OutputFormat::Table => property_table(&table, orbits),
                _ => table.report_json() + "\n",
            }
        }
        Command::Verify { theorem, max, kind, corpus } => {
            let id: TheoremId = theorem.parse()?;
            let path_theorem = matches!(id, TheoremId::PathProduct | TheoremId::PathSquare);
            let max = max.unwrap_or(if path_theorem { 7 } else { 5 });
            let kinds = if kind.is_empty() { vec![ProductKind::Cartesian, ProductKind::Strong] } else { kind.clone() };
            let corpus = match (path_theorem, corpus) {
                (true, _) => Corpus::default(),
                (false, Some(dir)) => Corpus::from_dir(dir, max)?,
                (false, None) => {
                    if max > orbitkit::corpus::MAX_CORPUS_ORDER {
                        return Err(Error::InvalidSize(format!(
                            "--max {max} exceeds the built-in corpus limit of {}",
                            orbitkit::corpus::MAX_CORPUS_ORDER
                        )));
                    }
                    Corpus::embedded(max)?
                }
            };
            let cfg = HarnessConfig { node_budget: opts.node_budget, product_limit: opts.product_limit };
            let report = run_theorem(id, max, &kinds, &corpus, &cfg)?;
            match out.unwrap_or(OutputFormat::Table) {
                OutputFormat::Json => report.to_json() + "\n",
                _ => report.to_table(),
            }
        }
        Command::Bench { input, property } => {
            let property: Property = property.parse()?;
            let graphs = match input {
                Some(path) => vec![(path.display().to_string(), read_input(path, opts.format)?)],
                None => vec![("C1000".to_string(), make_cycle(1000)?), ("Q10".to_string(), make_hypercube(10)?)],
            };
            let mut text = String::from("graph\tn\tr\tproperty\tnaive_evals\tfast_evals\tidentical\n");
            for (name, g) in graphs {
                let b = benchmark(&g, property)?;
                writeln!(
                    text,
                    "{name}\t{}\t{}\t{property}\t{}\t{}\t{}",
                    b.n, b.r, b.naive_evaluations, b.fast_evaluations, b.identical
                )
                .unwrap();
                eprintln!(
                    "{name}: orbits {:?}, naive {:?}, fast {:?} ({:?} per representative), speedup {:.1}x, r/n {}/{}",
                    b.orbit_time,
                    b.naive_time,
                    b.fast_time,
                    b.time_per_representative(),
                    b.speedup(),
                    b.r,
                    b.n
                );
            }
            text
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
