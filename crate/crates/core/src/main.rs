use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use findex::edgelist::{parse_edge_list, write_edge_list};
use findex::formulas::{self, HierarchicalExtras, RootDegreePair};
use findex::generators::{bottleneck, make_family, FamilySpec};
use findex::ops::{self, VertexSubset};
use findex::table;
use findex::verify::{self, Identity, TrialConfig};
use findex::{f_index, first_zagreb, second_zagreb, summarize, Graph, GraphSummary, RootedGraph};

#[derive(Parser)]
#[command(name = "findex", version, about = "F-index and Zagreb indices of graph operations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of a named family.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a graph operation to edge-list files ("-" reads stdin).
    Op {
        #[arg(value_enum)]
        name: OpName,
        #[arg(required = true)]
        files: Vec<String>,
        #[arg(long)]
        root1: Option<usize>,
        #[arg(long)]
        root2: Option<usize>,
        /// Roots for `bridge`, one per file.
        #[arg(long, value_delimiter = ',')]
        roots: Vec<usize>,
        /// Vertex subset U of the second operand for `hierarchical`.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        #[arg(long)]
        thorns: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print F, M1 and M2 of an edge-list file.
    Index {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Evaluate a closed form from operand summaries.
    Formula {
        /// An identity name, or `bottleneck`, or `family`.
        identity: String,
        /// Family name and parameters when the identity is `family`.
        args: Vec<String>,
        /// Operand summary `n,m,M1,F`; repeat once per operand.
        #[arg(long = "summary", value_name = "N,M,M1,F")]
        summaries: Vec<String>,
        /// Operand edge-list file; repeat once per operand.
        #[arg(long = "graph", value_name = "FILE")]
        graphs: Vec<String>,
        #[arg(long)]
        copies: Option<u64>,
        #[arg(long)]
        thorns: Option<u64>,
        #[arg(long)]
        u_size: Option<u64>,
        #[arg(long)]
        s1: Option<u64>,
        #[arg(long)]
        s2: Option<u64>,
        /// Subset U of the second `--graph` operand (hierarchical).
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        #[arg(long)]
        root_degree: Option<u64>,
        #[arg(long)]
        d1: Option<u64>,
        #[arg(long)]
        d2: Option<u64>,
        /// Root of the first `--graph` operand (splice, link).
        #[arg(long)]
        root1: Option<usize>,
        /// Root of the second `--graph` operand (cluster, splice, link).
        #[arg(long)]
        root2: Option<usize>,
    },
    /// Check every closed form against brute force on random operands.
    Verify {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        disconnected_ok: bool,
    },
    /// Emit a golden table as CSV.
    Table {
        #[arg(value_enum)]
        which: TableName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableName {
    PaperExamples,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpName {
    Union,
    Join,
    Cartesian,
    Composition,
    Tensor,
    Strong,
    Corona,
    Thorn,
    Hierarchical,
    Cluster,
    Disjunction,
    Symdiff,
    Splice,
    Link,
    Bridge,
    Bottleneck,
}

/// Failure of a command: usage or input problems exit 2, a failed check
/// exits 1.
enum Failure {
    Usage(String),
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure
where
    E: Into<findex::Error>,
{
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    parse_edge_list(&text).map_err(|e| usage(format!("{path}: {e}")))
}

fn read_graphs(paths: &[String]) -> Result<Vec<Graph>, Failure> {
    if paths.iter().filter(|p| p.as_str() == "-").count() > 1 {
        return Err(usage("stdin (-) can be given at most once"));
    }
    paths.iter().map(|p| read_graph(p)).collect()
}

fn emit(text: &str, output: Option<&PathBuf>) -> CmdResult {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("stdout: {e}"))),
    }
}

fn exactly<const N: usize>(gs: Vec<Graph>, what: &str) -> Result<[Graph; N], Failure> {
    let count = gs.len();
    gs.try_into()
        .map_err(|_| usage(format!("`{what}` takes {N} file(s), got {count}")))
}

fn rooted(g: Graph, root: Option<usize>, flag: &str) -> Result<RootedGraph, Failure> {
    let root = root.ok_or_else(|| usage(format!("missing --{flag}")))?;
    Ok(RootedGraph::new(g, root)?)
}

#[allow(clippy::too_many_arguments)]
fn run_op(
    name: OpName,
    files: &[String],
    root1: Option<usize>,
    root2: Option<usize>,
    roots: &[usize],
    subset: &[usize],
    thorns: Option<usize>,
    output: Option<&PathBuf>,
) -> CmdResult {
    let gs = read_graphs(files)?;
    let result = match name {
        OpName::Union => ops::disjoint_union(&gs)?,
        OpName::Join => ops::join(&gs)?,
        OpName::Cartesian => ops::cartesian_product(&gs)?,
        OpName::Composition => {
            let [a, b] = exactly(gs, "composition")?;
            ops::composition(&a, &b)?
        }
        OpName::Tensor => {
            let [a, b] = exactly(gs, "tensor")?;
            ops::tensor_product(&a, &b)?
        }
        OpName::Strong => {
            let [a, b] = exactly(gs, "strong")?;
            ops::strong_product(&a, &b)?
        }
        OpName::Corona => {
            let [a, b] = exactly(gs, "corona")?;
            ops::corona(&a, &b)?
        }
        OpName::Thorn => {
            let [g] = exactly(gs, "thorn")?;
            let t = thorns.ok_or_else(|| usage("missing --thorns"))?;
            ops::t_thorn(&g, t)?
        }
        OpName::Hierarchical => {
            let [a, b] = exactly(gs, "hierarchical")?;
            let u = VertexSubset::new(subset.iter().copied(), b.order())?;
            ops::hierarchical(&a, &b, &u)?
        }
        OpName::Cluster => {
            let [a, b] = exactly(gs, "cluster")?;
            ops::cluster(&a, &rooted(b, root2, "root2")?)?
        }
        OpName::Disjunction => {
            let [a, b] = exactly(gs, "disjunction")?;
            ops::disjunction(&a, &b)?
        }
        OpName::Symdiff => {
            let [a, b] = exactly(gs, "symdiff")?;
            ops::symmetric_difference(&a, &b)?
        }
        OpName::Splice | OpName::Link => {
            let [a, b] = exactly(gs, if name == OpName::Splice { "splice" } else { "link" })?;
            let (a, b) = (rooted(a, root1, "root1")?, rooted(b, root2, "root2")?);
            if name == OpName::Splice {
                ops::splice(&a, &b)?
            } else {
                ops::link(&a, &b)?
            }
        }
        OpName::Bridge => {
            if roots.len() != gs.len() {
                return Err(usage(format!(
                    "`bridge` needs one --roots entry per file ({} files, {} roots)",
                    gs.len(),
                    roots.len()
                )));
            }
            let blocks = gs
                .into_iter()
                .zip(roots)
                .map(|(g, &r)| RootedGraph::new(g, r))
                .collect::<findex::Result<Vec<_>>>()?;
            ops::bridge(&blocks)?
        }
        OpName::Bottleneck => {
            let [g] = exactly(gs, "bottleneck")?;
            bottleneck(&g)?
        }
    };
    emit(&write_edge_list(&result), output)
}

fn parse_summary(text: &str) -> Result<GraphSummary, Failure> {
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || usage(format!("summary `{text}` is not `n,m,M1,F`"));
    if fields.len() != 4 {
        return Err(bad());
    }
    let n = fields[0].parse().map_err(|_| bad())?;
    let m = fields[1].parse().map_err(|_| bad())?;
    let m1 = fields[2].parse().map_err(|_| bad())?;
    let f = fields[3].parse().map_err(|_| bad())?;
    Ok(GraphSummary::new(n, m, m1, f))
}

struct FormulaArgs {
    identity: String,
    args: Vec<String>,
    summaries: Vec<String>,
    graphs: Vec<String>,
    copies: Option<u64>,
    thorns: Option<u64>,
    u_size: Option<u64>,
    s1: Option<u64>,
    s2: Option<u64>,
    subset: Vec<usize>,
    root_degree: Option<u64>,
    d1: Option<u64>,
    d2: Option<u64>,
    root1: Option<usize>,
    root2: Option<usize>,
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("missing --{flag}")))
}

fn run_formula(a: FormulaArgs) -> CmdResult {
    if a.identity == "family" {
        let (name, params) = a
            .args
            .split_first()
            .ok_or_else(|| usage("`formula family` needs a family name"))?;
        let params = params
            .iter()
            .map(|p| p.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| usage(format!("family parameter: {e}")))?;
        let value = formulas::f_family(&FamilySpec::parse(name, &params)?)?;
        println!("{value}");
        return Ok(());
    }
    if !a.args.is_empty() {
        return Err(usage(format!("unexpected arguments {:?}", a.args)));
    }
    if !a.summaries.is_empty() && !a.graphs.is_empty() {
        return Err(usage("give operands either as --summary or as --graph, not both"));
    }
    let graphs = read_graphs(&a.graphs)?;
    let ss: Vec<GraphSummary> = if graphs.is_empty() {
        a.summaries
            .iter()
            .map(|s| parse_summary(s))
            .collect::<Result<_, _>>()?
    } else {
        graphs.iter().map(summarize).collect::<findex::Result<_>>()?
    };
    let want = |k: usize| -> CmdResult {
        if ss.len() == k {
            Ok(())
        } else {
            Err(usage(format!(
                "`{}` takes {k} operand(s), got {}",
                a.identity,
                ss.len()
            )))
        }
    };
    let root_deg = |graph: usize, root: Option<usize>, flag: &str| -> Result<Option<u64>, Failure> {
        match (graphs.get(graph), root) {
            (Some(g), Some(r)) => Ok(Some(g.degree(r)? as u64)),
            (None, Some(_)) => Err(usage(format!("--{flag} needs --graph operands"))),
            _ => Ok(None),
        }
    };

    if a.identity == "bottleneck" {
        want(1)?;
        println!("{}", formulas::f_bottleneck(&ss[0])?);
        return Ok(());
    }
    let identity: Identity = a.identity.parse()?;
    let value = match identity {
        Identity::Union => {
            let fs: Vec<_> = ss.iter().map(|s| s.f).collect();
            formulas::f_union(&fs)?
        }
        Identity::Join => formulas::f_join(&ss)?,
        Identity::JoinCopies => {
            want(1)?;
            formulas::f_join_copies(&ss[0], need(a.copies, "copies")?)?
        }
        Identity::Suspension => {
            want(1)?;
            formulas::f_suspension(&ss[0])?
        }
        Identity::M1Cartesian => formulas::m1_cartesian(&ss)?,
        Identity::Cartesian => formulas::f_cartesian(&ss)?,
        Identity::Composition => {
            want(2)?;
            formulas::f_composition(&ss[0], &ss[1])?
        }
        Identity::Tensor => {
            want(2)?;
            formulas::f_tensor(ss[0].f, ss[1].f)?
        }
        Identity::Strong => {
            want(2)?;
            formulas::f_strong(&ss[0], &ss[1])?
        }
        Identity::Corona => {
            want(2)?;
            formulas::f_corona(&ss[0], &ss[1])?
        }
        Identity::Thorn => {
            want(1)?;
            formulas::f_thorn(&ss[0], need(a.thorns, "thorns")?)?
        }
        Identity::Hierarchical => {
            want(2)?;
            let extras = if a.subset.is_empty() {
                HierarchicalExtras::new(
                    need(a.u_size, "u-size")?,
                    need(a.s1, "s1")?,
                    need(a.s2, "s2")?,
                )?
            } else {
                let g2 = graphs
                    .get(1)
                    .ok_or_else(|| usage("--subset needs --graph operands"))?;
                let u = VertexSubset::new(a.subset.iter().copied(), g2.order())?;
                HierarchicalExtras::from_subset(g2, &u)?
            };
            formulas::f_hierarchical(&ss[0], ss[1].f, &extras)?
        }
        Identity::Cluster => {
            want(2)?;
            let d = match root_deg(1, a.root2, "root2")? {
                Some(d) => d,
                None => need(a.root_degree, "root-degree")?,
            };
            formulas::f_cluster(&ss[0], &ss[1], d)?
        }
        Identity::Disjunction => {
            want(2)?;
            formulas::f_disjunction(&ss[0], &ss[1])?
        }
        Identity::SymmetricDifference => {
            want(2)?;
            formulas::f_symmetric_difference(&ss[0], &ss[1])?
        }
        Identity::Splice | Identity::Link => {
            want(2)?;
            let d1 = match root_deg(0, a.root1, "root1")? {
                Some(d) => d,
                None => need(a.d1, "d1")?,
            };
            let d2 = match root_deg(1, a.root2, "root2")? {
                Some(d) => d,
                None => need(a.d2, "d2")?,
            };
            let roots = RootDegreePair::new(d1, d2);
            if identity == Identity::Splice {
                formulas::f_splice(ss[0].f, ss[1].f, roots)?
            } else {
                formulas::f_link(ss[0].f, ss[1].f, roots)?
            }
        }
    };
    println!("{value}");
    Ok(())
}

fn run_verify(trials: usize, max_n: usize, seed: u64, disconnected_ok: bool) -> CmdResult {
    let config = TrialConfig {
        trials_per_identity: trials,
        max_vertices: max_n,
        seed,
        connected_only: !disconnected_ok,
        ..TrialConfig::default()
    };
    let reports = verify::run_suite(&config)?;
    for report in &reports {
        println!("{report}");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!(
        "{} identities, {} failed",
        reports.len(),
        failed
    );
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Gen {
            family,
            params,
            output,
        } => {
            let g = make_family(&FamilySpec::parse(&family, &params)?)?;
            emit(&write_edge_list(&g), output.as_ref())
        }
        Command::Op {
            name,
            files,
            root1,
            root2,
            roots,
            subset,
            thorns,
            output,
        } => run_op(
            name,
            &files,
            root1,
            root2,
            &roots,
            &subset,
            thorns,
            output.as_ref(),
        ),
        Command::Index { file } => {
            let g = read_graph(&file)?;
            println!(
                "F={} M1={} M2={}",
                f_index(&g)?,
                first_zagreb(&g)?,
                second_zagreb(&g)?
            );
            Ok(())
        }
        Command::Formula {
            identity,
            args,
            summaries,
            graphs,
            copies,
            thorns,
            u_size,
            s1,
            s2,
            subset,
            root_degree,
            d1,
            d2,
            root1,
            root2,
        } => run_formula(FormulaArgs {
            identity,
            args,
            summaries,
            graphs,
            copies,
            thorns,
            u_size,
            s1,
            s2,
            subset,
            root_degree,
            d1,
            d2,
            root1,
            root2,
        }),
        Command::Verify {
            trials,
            max_n,
            seed,
            disconnected_ok,
        } => run_verify(trials, max_n, seed, disconnected_ok),
        Command::Table {
            which: TableName::PaperExamples,
        } => {
            let rows = table::paper_table()?;
            print!("{}", table::to_csv(&rows));
            if rows.iter().all(table::TableRow::matches) {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
