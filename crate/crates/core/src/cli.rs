//! The `pathhom` command-line frontend.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::digraph::FilteredDigraph;
use crate::error::{Error, Result};
use crate::field::{Field, FieldMode};
use crate::persistence::PersistenceDiagram;
use crate::reduce::Chain1;
use crate::{generate, homology_static, minbasis, oracle, persistence, with_field};

#[derive(Parser, Debug)]
#[command(name = "pathhom", version, about = "1-dimensional path homology of directed graphs")]
pub struct Cli {
    /// Coefficient field: `zp:<prime>` or `rational`.
    #[arg(long, global = true, default_value_t = FieldMode::default())]
    pub field: FieldMode,

    /// Omit pairs with birth == death.
    #[arg(long, global = true)]
    pub drop_diagonal: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Seed for generators that take one and none is given positionally.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Ignore weights in the input and use the edge line order.
    #[arg(long, global = true)]
    pub line_order: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ranks of Z_1, B_1 and H_1.
    H1 { input: PathBuf },
    /// Persistence diagram of the edge filtration.
    Pph { input: PathBuf },
    /// A minimal homology basis.
    Minbasis { input: PathBuf },
    /// Write a generated edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time the fast algorithm against the dense oracle.
    Bench {
        /// Run the oracle only when the graph has at most this many edges.
        #[arg(long, default_value_t = 40)]
        oracle_max_edges: usize,
        #[command(subcommand)]
        source: BenchSource,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum GenKind {
    /// Each ordered pair is an edge with probability P.
    Er { n: usize, p: f64, seed: Option<u64> },
    /// Directed N-cycle.
    Cycle { n: usize },
    /// Two hubs with LS common sinks and LT common sources.
    Fan { ls: usize, lt: usize },
}

#[derive(Subcommand, Debug)]
pub enum BenchSource {
    /// Edge-list files.
    Files { inputs: Vec<PathBuf> },
    /// COUNT ER graphs with seeds `--seed`, `--seed + 1`, ...
    Er {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    Cycle { n: usize },
    Fan { ls: usize, lt: usize },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    H1 { input: PathBuf },
    Pph { input: PathBuf },
}

/// Parses `args` and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                2
            } else {
                3
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Result<()> {
    let text = render(cli)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// The full stdout of a command.
pub fn render(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::H1 { input } => {
            let g = load(input, cli.line_order)?;
            let start = Instant::now();
            let r = with_field!(cli.field, f => homology_static::h1_rank_static(&f, &g));
            eprintln!("time_seconds {:.6}", start.elapsed().as_secs_f64());
            Ok(ranks_output(cli.format, r.z1, r.b1, r.h1))
        }
        Command::Pph { input } => {
            let g = load(input, cli.line_order)?;
            with_field!(cli.field, f => {
                let p = persistence::persistence(&f, &g)?;
                eprintln!("time_seconds {:.6}", p.elapsed.as_secs_f64());
                let ranks = (p.rank_z1(), p.rank_b1(), p.rank_h1());
                Ok(diagram_output(cli, &f, &g, p.diagram, ranks))
            })
        }
        Command::Minbasis { input } => {
            let g = load(input, cli.line_order)?;
            with_field!(cli.field, f => {
                let basis = minbasis::minimal_basis(&f, &g)?;
                Ok(minbasis_output(cli.format, &f, &g, &basis))
            })
        }
        Command::Gen { kind } => Ok(generate(kind, cli.seed)?.to_edge_list()),
        Command::Oracle { what } => match what {
            OracleCommand::H1 { input } => {
                let g = load(input, cli.line_order)?;
                let start = Instant::now();
                let r = with_field!(cli.field, f => oracle::h1_rank_oracle(&f, &g));
                eprintln!("time_seconds {:.6}", start.elapsed().as_secs_f64());
                Ok(ranks_output(cli.format, r.z1, r.b1, r.h1))
            }
            OracleCommand::Pph { input } => {
                let g = load(input, cli.line_order)?;
                with_field!(cli.field, f => {
                    let start = Instant::now();
                    let d = oracle::persistence_oracle(&f, &g);
                    eprintln!("time_seconds {:.6}", start.elapsed().as_secs_f64());
                    let r = oracle::h1_rank_oracle(&f, &g);
                    Ok(diagram_output(cli, &f, &g, d, (r.z1, r.b1, r.h1)))
                })
            }
        },
        Command::Bench {
            oracle_max_edges,
            source,
        } => bench(cli, *oracle_max_edges, source),
    }
}

fn load(path: &Path, line_order: bool) -> Result<FilteredDigraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    FilteredDigraph::parse_edge_list(&text, line_order)
}

pub fn generate(kind: &GenKind, default_seed: u64) -> Result<FilteredDigraph> {
    match *kind {
        GenKind::Er { n, p, seed } => generate::er(n, p, seed.unwrap_or(default_seed)),
        GenKind::Cycle { n } => generate::cycle(n),
        GenKind::Fan { ls, lt } => Ok(generate::fan(ls, lt)),
    }
}

#[derive(Serialize)]
struct Ranks {
    rank_z1: usize,
    rank_b1: usize,
    rank_h1: usize,
}

#[derive(Serialize)]
struct JsonPair {
    birth: f64,
    death: f64,
}

#[derive(Serialize)]
struct JsonTerm {
    edge: [String; 2],
    coeff: String,
}

#[derive(Serialize)]
struct JsonEssential {
    birth: f64,
    cycle: Vec<JsonTerm>,
}

#[derive(Serialize)]
struct JsonDiagram {
    pairs: Vec<JsonPair>,
    essentials: Vec<JsonEssential>,
    ranks: Ranks,
}

#[derive(Serialize)]
struct JsonCycle {
    mu: f64,
    cycle: Vec<JsonTerm>,
}

fn ranks_output(format: Format, z1: usize, b1: usize, h1: usize) -> String {
    match format {
        Format::Csv => format!("rank_z1 {z1}\nrank_b1 {b1}\nrank_h1 {h1}\n"),
        Format::Json => {
            let r = Ranks {
                rank_z1: z1,
                rank_b1: b1,
                rank_h1: h1,
            };
            serde_json::to_string_pretty(&r).expect("serialisable") + "\n"
        }
    }
}

fn terms<F: Field>(f: &F, g: &FilteredDigraph, c: &Chain1<F::Elem>) -> Vec<JsonTerm> {
    c.iter()
        .map(|(e, x)| {
            let edge = g.edge(*e);
            JsonTerm {
                edge: [g.label(edge.src).to_string(), g.label(edge.dst).to_string()],
                coeff: f.render(x),
            }
        })
        .collect()
}

fn diagram_output<F: Field>(
    cli: &Cli,
    f: &F,
    g: &FilteredDigraph,
    mut d: PersistenceDiagram<F::Elem>,
    (z1, b1, h1): (usize, usize, usize),
) -> String {
    if cli.drop_diagonal {
        d.drop_diagonal();
    }
    match cli.format {
        Format::Csv => {
            let mut out = String::from("birth,death\n");
            for (b, dd) in d.sorted_points() {
                let _ = writeln!(out, "{b},{dd}");
            }
            out
        }
        Format::Json => {
            let mut pairs: Vec<JsonPair> = d
                .pairs
                .iter()
                .map(|p| JsonPair {
                    birth: p.birth,
                    death: p.death,
                })
                .collect();
            pairs.sort_by(|a, b| a.birth.total_cmp(&b.birth).then(a.death.total_cmp(&b.death)));
            let doc = JsonDiagram {
                pairs,
                essentials: d
                    .essentials
                    .iter()
                    .map(|e| JsonEssential {
                        birth: e.birth,
                        cycle: terms(f, g, &e.cycle),
                    })
                    .collect(),
                ranks: Ranks {
                    rank_z1: z1,
                    rank_b1: b1,
                    rank_h1: h1,
                },
            };
            serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"
        }
    }
}

fn minbasis_output<F: Field>(
    format: Format,
    f: &F,
    g: &FilteredDigraph,
    basis: &[(Chain1<F::Elem>, f64)],
) -> String {
    match format {
        Format::Csv => {
            let mut out = String::new();
            for (c, mu) in basis {
                let body: Vec<String> = terms(f, g, c)
                    .into_iter()
                    .map(|t| format!("{}->{}:{}", t.edge[0], t.edge[1], t.coeff))
                    .collect();
                let _ = writeln!(out, "mu={mu}; {}", body.join(", "));
            }
            out
        }
        Format::Json => {
            let doc: Vec<JsonCycle> = basis
                .iter()
                .map(|(c, mu)| JsonCycle {
                    mu: *mu,
                    cycle: terms(f, g, c),
                })
                .collect();
            serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"
        }
    }
}

/// Multisets of `(birth_edge, death_edge)` and essential birth edges agree.
pub fn diagrams_agree<E>(a: &PersistenceDiagram<E>, b: &PersistenceDiagram<E>) -> bool {
    let key = |d: &PersistenceDiagram<E>| {
        let mut p: Vec<_> = d.pairs.iter().map(|p| (p.birth_edge, p.death_edge)).collect();
        let mut e: Vec<_> = d.essentials.iter().map(|e| e.birth_edge).collect();
        p.sort_unstable();
        e.sort_unstable();
        (p, e)
    };
    key(a) == key(b)
}

fn bench(cli: &Cli, oracle_max_edges: usize, source: &BenchSource) -> Result<String> {
    let graphs: Vec<(String, FilteredDigraph)> = match source {
        BenchSource::Files { inputs } => inputs
            .iter()
            .map(|p| Ok((p.display().to_string(), load(p, cli.line_order)?)))
            .collect::<Result<_>>()?,
        BenchSource::Er { n, p, count } => (0..*count)
            .map(|i| {
                let seed = cli.seed + i;
                Ok((format!("er_{n}_{p}_{seed}"), generate::er(*n, *p, seed)?))
            })
            .collect::<Result<_>>()?,
        BenchSource::Cycle { n } => vec![(format!("cycle_{n}"), generate::cycle(*n)?)],
        BenchSource::Fan { ls, lt } => vec![(format!("fan_{ls}_{lt}"), generate::fan(*ls, *lt))],
    };
    let mut out = String::from("graph,n,m,rank_h1,fast_seconds,oracle_seconds,agreement\n");
    for (name, g) in graphs {
        with_field!(cli.field, f => {
            let fast = persistence::persistence(&f, &g)?;
            let fast_s = fast.elapsed.as_secs_f64();
            let (oracle_s, agreement) = if g.m() <= oracle_max_edges {
                let start = Instant::now();
                let d = oracle::persistence_oracle(&f, &g);
                let s = start.elapsed().as_secs_f64();
                let ok = diagrams_agree(&fast.diagram, &d);
                (format!("{s:.6}"), if ok { "ok" } else { "mismatch" })
            } else {
                eprintln!("{name}: oracle skipped, m = {} > {oracle_max_edges}", g.m());
                (String::from(""), "skipped")
            };
            let _ = writeln!(
                out,
                "{name},{},{},{},{fast_s:.6},{oracle_s},{agreement}",
                g.n(),
                g.m(),
                fast.rank_h1()
            );
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::generate::fixtures;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("pathhom").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn parses_global_flags() {
        let c = cli(&["pph", "x.txt", "--field", "rational", "--format", "json", "--drop-diagonal"]);
        assert_eq!(c.field, FieldMode::Rational);
        assert_eq!(c.format, Format::Json);
        assert!(c.drop_diagonal);
    }

    #[test]
    fn rejects_bad_field() {
        assert!(Cli::try_parse_from(["pathhom", "--field", "zp:4", "h1", "x"]).is_err());
    }

    #[test]
    fn gen_er_uses_global_seed() {
        let a = render(&cli(&["gen", "--seed", "3", "er", "10", "0.3"])).unwrap();
        let b = render(&cli(&["gen", "er", "10", "0.3", "3"])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn agreement_on_fixtures() {
        let f = PrimeField::DEFAULT;
        for (name, g) in fixtures::all() {
            let fast = persistence::persistence(&f, &g).unwrap();
            let slow = oracle::persistence_oracle(&f, &g);
            assert!(diagrams_agree(&fast.diagram, &slow), "{name}");
        }
    }
}
