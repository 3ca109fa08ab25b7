//! Command line front end. Every command prints one JSON document (or DOT
//! with `--dot`) on stdout; library errors go to stderr as
//! `{"error": code, "message": ..}` with exit code 3, usage errors exit 2.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use posetlab::construct::{lc_abstract_to_pv, lc_to_pv, lc_types_to_pv, pv_to_lc, AbstractAnswer};
use posetlab::hom::{self, Direction, MonoMethod};
use posetlab::io::{self, Hasse};
use posetlab::lattice::{build_folded_lattice, mobius_table, relabel};
use posetlab::poset::{build_edge_poset, build_induced_poset};
use posetlab::search::{self, CollisionReport};
use posetlab::symfun::{xg_direct, xg_from_lattice, xg_from_poset, xgt_direct, xgt_from_poset, MonomialSymFn};
use posetlab::{tree, Error, FoldedLattice, Graph, LabelMode, LabeledPoset};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "posetlab", version, about = "Subgraph posets, connected partition lattices and chromatic symmetric functions")]
struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print posets and lattices as a DOT Hasse diagram.
    #[arg(long, global = true)]
    dot: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Induced or edge subgraph poset of a graph.
    Poset {
        kind: PosetKind,
        graph: String,
        /// Erase element identities.
        #[arg(long = "abstract")]
        erase: bool,
    },
    #[command(subcommand)]
    Lattice(LatticeCmd),
    Symfun {
        kind: SymfunKind,
        graph: String,
        #[arg(long, value_enum, default_value = "direct")]
        via: Via,
        #[arg(long, value_enum, default_value = "compact")]
        format: Format,
    },
    #[command(subcommand)]
    Tree(TreeCmd),
    Convert {
        kind: ConvertKind,
        #[command(flatten)]
        input: Input,
    },
    #[command(subcommand)]
    Hunt(HuntCmd),
    #[command(subcommand)]
    Hom(HomCmd),
    /// μ(0̂, Λ) for every element of the connected partition lattice.
    Mobius { graph: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetKind {
    Induced,
    Edge,
}

#[derive(Subcommand)]
enum LatticeCmd {
    Build {
        graph: String,
        #[arg(long, value_enum, default_value = "full")]
        label: Label,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Label {
    Full,
    Partial,
    Types,
    Abstract,
}

impl From<Label> for LabelMode {
    fn from(l: Label) -> LabelMode {
        match l {
            Label::Full => LabelMode::Full,
            Label::Partial => LabelMode::Partial,
            Label::Types => LabelMode::Types,
            Label::Abstract => LabelMode::Abstract,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SymfunKind {
    Chromatic,
    Tutte,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Direct,
    Poset,
    Lattice,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// `{"(2,1)": "3"}`
    Compact,
    /// Versioned posetlab/symfun document.
    Doc,
}

/// A graph6 string, or `--from FILE` with a JSON document.
#[derive(Args)]
struct Input {
    #[arg(required_unless_present = "from", conflicts_with = "from")]
    graph: Option<String>,
    #[arg(long)]
    from: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TreeCmd {
    /// Partition deck of a tree, read back from X_T.
    Deck {
        #[command(flatten)]
        input: Input,
    },
    /// X_T from a deck document.
    FromDeck { file: PathBuf },
    /// X_T(t) from X_T.
    TutteFromXg {
        #[command(flatten)]
        input: Input,
    },
    /// Degree sequence from X_T.
    Degseq {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertKind {
    PvToLc,
    LcToPv,
    LcTypesToPv,
    LcAbstractToPv,
}

#[derive(Args)]
struct HuntOpts {
    /// Accepted for compatibility; scans run on one thread.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum HuntCmd {
    /// Graphs sharing an abstract edge subgraph poset.
    Pe {
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        /// Allow bounds past the desk cap.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        opts: HuntOpts,
    },
    /// Graphs sharing an abstract connected partition lattice.
    Lc {
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[command(flatten)]
        opts: HuntOpts,
    },
    /// Graphs sharing a chromatic symmetric function.
    Xg {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long)]
        trees_only: bool,
        #[command(flatten)]
        opts: HuntOpts,
    },
}

#[derive(Subcommand)]
enum HomCmd {
    Count { from: String, to: String },
    Mono {
        from: String,
        to: String,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
    },
    /// First small graph whose hom counts tell the two graphs apart.
    Witness {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value = "left")]
        direction: Dir,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Bijections of small graphs preserving all hom counts.
    Scan {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Direct,
    Inversion,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Left,
    Right,
}

enum Output {
    Json(Value),
    Text(String),
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// [`run`] with explicit streams.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let text = match execute(&cli) {
        Ok(Output::Json(v)) => format!("{v}\n"),
        Ok(Output::Text(t)) => t,
        Err(e) => {
            let _ = writeln!(stderr, "{}", json!({ "error": e.code(), "message": e.to_string() }));
            return 3;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string())),
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{}", json!({ "error": e.code(), "message": e.to_string() }));
            3
        }
    }
}

fn graph(s: &str) -> posetlab::Result<Graph> {
    io::parse_graph6(s)
}

fn read_json(path: &Path) -> posetlab::Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()))
}

fn ordered(x: &impl Hasse, json: Value, dot: bool) -> Output {
    if dot {
        Output::Text(io::export_hasse_dot(x))
    } else {
        Output::Json(json)
    }
}

fn poset_out(p: &LabeledPoset, kind: Option<&str>, dot: bool) -> Output {
    ordered(p, io::poset_to_json(p, kind), dot)
}

fn lattice_out(l: &FoldedLattice, dot: bool) -> Output {
    ordered(l, io::lattice_to_json(l), dot)
}

/// X_T from `--from FILE` (a symfun document) or from a graph6 tree.
fn symfun_input(input: &Input) -> posetlab::Result<MonomialSymFn> {
    match (&input.graph, &input.from) {
        (_, Some(path)) => io::symfn_from_json(&read_json(path)?),
        (Some(g), None) => xg_direct(&graph(g)?),
        (None, None) => unreachable!("clap requires one input"),
    }
}

fn lattice_input(input: &Input, mode: LabelMode) -> posetlab::Result<FoldedLattice> {
    match (&input.graph, &input.from) {
        (_, Some(path)) => io::lattice_from_json(&read_json(path)?),
        (Some(g), None) => relabel(&build_folded_lattice(&graph(g)?)?, mode),
        (None, None) => unreachable!("clap requires one input"),
    }
}

fn report(r: CollisionReport) -> Output {
    Output::Json(search::report_to_json(&r))
}

fn execute(cli: &Cli) -> posetlab::Result<Output> {
    let dot = cli.dot;
    Ok(match &cli.command {
        Command::Poset { kind, graph: g, erase } => {
            let g = graph(g)?;
            let (p, name) = match kind {
                PosetKind::Induced => (build_induced_poset(&g)?, "induced"),
                PosetKind::Edge => (build_edge_poset(&g)?, "edge"),
            };
            let p = if *erase { p.erased() } else { p };
            poset_out(&p, Some(name), dot)
        }
        Command::Lattice(LatticeCmd::Build { graph: g, label }) => {
            let l = relabel(&build_folded_lattice(&graph(g)?)?, (*label).into())?;
            lattice_out(&l, dot)
        }
        Command::Symfun { kind, graph: g, via, format } => {
            let g = graph(g)?;
            match kind {
                SymfunKind::Chromatic => {
                    let x = match via {
                        Via::Direct => xg_direct(&g)?,
                        Via::Poset => xg_from_poset(&build_induced_poset(&g)?.erased())?,
                        Via::Lattice => {
                            let l = relabel(&build_folded_lattice(&g)?, LabelMode::Types)?;
                            xg_from_lattice(&l, &mobius_table(&l)?)?
                        }
                    };
                    Output::Json(match format {
                        Format::Compact => io::symfn_compact(&x),
                        Format::Doc => io::symfn_to_json(&x),
                    })
                }
                SymfunKind::Tutte => {
                    let x = match via {
                        Via::Direct => xgt_direct(&g)?,
                        Via::Poset => xgt_from_poset(&build_induced_poset(&g)?.erased())?,
                        Via::Lattice => {
                            return Err(Error::Precondition(
                                "X_G(t) has no lattice expansion; use --via direct or --via poset".into(),
                            ))
                        }
                    };
                    Output::Json(match format {
                        Format::Compact => io::tutte_compact(&x),
                        Format::Doc => io::tutte_to_json(&x),
                    })
                }
            }
        }
        Command::Tree(cmd) => match cmd {
            TreeCmd::Deck { input } => Output::Json(io::deck_to_json(&tree::deck_from_symfun(&symfun_input(input)?)?)),
            TreeCmd::FromDeck { file } => {
                let d = io::deck_from_json(&read_json(file)?)?;
                if !tree::recognize_tree_from_deck(&d)? {
                    return Err(Error::NotATree);
                }
                Output::Json(io::symfn_to_json(&tree::symfun_from_deck(&d)?))
            }
            TreeCmd::TutteFromXg { input } => {
                Output::Json(io::tutte_to_json(&tree::xgt_from_symfun_tree(&symfun_input(input)?)?))
            }
            TreeCmd::Degseq { input } => {
                let x = symfun_input(input)?;
                let counts: Vec<Value> = tree::subtree_degree_counts(&x)?
                    .into_iter()
                    .map(|((k, d), n)| json!({ "vertices": k, "boundary": d, "count": n.to_string() }))
                    .collect();
                Output::Json(json!({
                    "schema": "posetlab/degseq",
                    "version": io::SCHEMA_VERSION,
                    "degrees": tree::degree_sequence_from_symfun(&x)?,
                    "subtrees": counts,
                }))
            }
        },
        Command::Convert { kind, input } => match kind {
            ConvertKind::PvToLc => {
                let p = match (&input.graph, &input.from) {
                    (_, Some(path)) => io::poset_from_json(&read_json(path)?)?,
                    (Some(g), None) => build_induced_poset(&graph(g)?)?.erased(),
                    (None, None) => unreachable!("clap requires one input"),
                };
                lattice_out(&pv_to_lc(&p)?, dot)
            }
            ConvertKind::LcToPv => poset_out(&lc_to_pv(&lattice_input(input, LabelMode::Partial)?)?, Some("induced"), dot),
            ConvertKind::LcTypesToPv => {
                poset_out(&lc_types_to_pv(&lattice_input(input, LabelMode::Types)?)?, Some("induced"), dot)
            }
            ConvertKind::LcAbstractToPv => match lc_abstract_to_pv(&lattice_input(input, LabelMode::Abstract)?)? {
                AbstractAnswer::Poset(p) => poset_out(&p, Some("induced"), dot),
                AbstractAnswer::Graph(g) => Output::Json(json!({
                    "schema": "posetlab/graph",
                    "version": io::SCHEMA_VERSION,
                    "graph6": io::write_graph6(&g),
                })),
            },
        },
        Command::Hunt(cmd) => {
            let dir = search::cache_dir();
            let dir = dir.as_deref();
            match cmd {
                HuntCmd::Pe { max_edges, force, .. } => {
                    let n = *max_edges;
                    if *force {
                        report(search::pe_collisions(n, true)?)
                    } else {
                        report(search::cached_report(dir, "pe", n, || search::pe_collisions(n, false))?)
                    }
                }
                HuntCmd::Lc { max_vertices, .. } => {
                    let n = *max_vertices;
                    report(search::cached_report(dir, "lc", n, || search::lc_collisions(n))?)
                }
                HuntCmd::Xg { max_vertices, trees_only, .. } => {
                    let (n, t) = (*max_vertices, *trees_only);
                    let name = if t { "xg-trees" } else { "xg" };
                    report(search::cached_report(dir, name, n, || search::xg_collisions(n, t))?)
                }
            }
        }
        Command::Hom(cmd) => Output::Json(match cmd {
            HomCmd::Count { from, to } => json!({ "hom": hom::count_hom(&graph(from)?, &graph(to)?).to_string() }),
            HomCmd::Mono { from, to, method } => {
                let m = match method {
                    Method::Direct => MonoMethod::Direct,
                    Method::Inversion => MonoMethod::Inversion,
                };
                json!({ "mono": hom::count_mono(&graph(from)?, &graph(to)?, m).to_string() })
            }
            HomCmd::Witness { first, second, direction, max_n } => {
                let d = match direction {
                    Dir::Left => Direction::Left,
                    Dir::Right => Direction::Right,
                };
                let w = hom::distinguishing_witness(&graph(first)?, &graph(second)?, d, *max_n)?;
                json!({ "witness": w.as_ref().map(io::write_graph6) })
            }
            HomCmd::Scan { n } => serde_json::to_value(hom::conjecture_scan(*n)?).map_err(|e| Error::Json(e.to_string()))?,
        }),
        Command::Mobius { graph: g } => {
            let l = build_folded_lattice(&graph(g)?)?;
            Output::Json(io::mobius_to_json(&l, &mobius_table(&l)?))
        }
    })
}
