//! The `sqo` command line.
//!
//! Exit status: 0 on success, 1 when the mathematics says no (stuck
//! ordering, exhausted list, Lister win, failed check, oracle budget), 2 on
//! bad input or usage.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::coloring::validate::{is_proper_list_coloring, is_valid_labeling};
use crate::coloring::{
    greedy_list_color, greedy_lpq_with, lister_by_name, paint_game, span_bound, Coloring, Labeling, ListAssignment,
    LpqParams, PaintOutcome,
};
use crate::constructions::{by_name, FAMILIES};
use crate::discharging::{audit, Phase};
use crate::error::{Error, Result};
use crate::graph::{check_class, io, square, EdgeKind, Graph, PlaneGraph};
use crate::oracle::{exact_chromatic, exact_list_colorable, exact_lpq, max_clique, OracleBudget};
use crate::ordering::{good_ordering_with, verify_ordering_with, GoodOrdering, OrderingOutcome, Thresholds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sqo",
    version,
    about = "Square colorings of sparse plane graphs via good orderings"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for every randomized step.
    #[arg(long, env = "SQO_SEED", default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON document per run.
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a construction as PREFIX.graph and PREFIX.embed.
    Gen(GenArgs),
    /// Build the square of a graph.
    Square(SquareArgs),
    /// Extract a good ordering, or a stuck certificate.
    Order(OrderArgs),
    /// Greedy list coloring of the square along an ordering.
    Color(ColorArgs),
    /// Greedy L(p,q)-labeling along an ordering.
    Label(LabelArgs),
    /// Play the online list coloring game on the square.
    Paint(PaintArgs),
    /// Run the discharging rules and audit the final charges.
    Discharge(DischargeArgs),
    /// Validate class membership, orderings, colorings and labelings.
    Check(CheckArgs),
    /// Exact solvers for small graphs.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: String,
    /// Family parameter: k for gk, Δ for wegner and dvorak families, n for cycle.
    #[arg(long, visible_aliases = ["delta", "n"])]
    pub k: Option<usize>,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    #[arg(short, long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct SquareArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Defaults to max(Δ, 32).
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub tg: Option<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OrderingInput {
    /// Ordering file; a good ordering is computed when omitted.
    #[arg(long)]
    pub order: Option<PathBuf>,
    #[arg(long)]
    pub d: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub ordering: OrderingInput,
    #[arg(long, conflicts_with_all = ["k", "palette"])]
    pub lists: Option<PathBuf>,
    /// Uniform list size; lists are `0..k` unless `--palette` is larger.
    #[arg(long)]
    pub k: Option<usize>,
    /// Draw each list as a seeded random k-subset of `0..palette`.
    #[arg(long, requires = "k")]
    pub palette: Option<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LabelArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub ordering: OrderingInput,
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PaintArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub ordering: OrderingInput,
    /// Tokens per vertex.
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value = "random")]
    pub lister: String,
    #[arg(long)]
    pub script: Option<PathBuf>,
    /// Writes the listed sets, one round per line, as a replayable script.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EmbeddedInput {
    #[arg(short, long)]
    pub input: PathBuf,
    /// Defaults to the input path with extension `.embed`.
    #[arg(short, long)]
    pub embed: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DischargeArgs {
    #[command(flatten)]
    pub graph: EmbeddedInput,
    #[arg(long)]
    pub d: Option<usize>,
    /// Report the ledger after this rule.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub phase: u8,
    #[arg(long)]
    pub negatives_only: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub embed: Option<PathBuf>,
    #[arg(long)]
    pub order: Option<PathBuf>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub tg: Option<usize>,
    /// Coloring of the square; checked against `--lists` if given.
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    #[arg(long)]
    pub lists: Option<PathBuf>,
    #[arg(long)]
    pub labeling: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub q: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Task {
    Chi,
    Listcol,
    Lpq,
    Clique,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[arg(long, value_enum)]
    pub task: Task,
    /// Solve on the square of the input.
    #[arg(long)]
    pub square: bool,
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    #[arg(long)]
    pub lists: Option<PathBuf>,
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    #[arg(long)]
    pub budget_seconds: Option<f64>,
    #[arg(long, default_value_t = 24)]
    pub max_vertices: usize,
}

/// What a subcommand produced: a report and whether it counts as success.
struct Outcome {
    report: Map<String, Value>,
    ok: bool,
}

impl Outcome {
    fn ok(report: Map<String, Value>) -> Self {
        Outcome { report, ok: true }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// printing to stdout and stderr. Returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(outcome) => {
            print!("{}", render(&outcome.report, format));
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            }
        }
        Err(e) => {
            match format {
                Format::Text => eprintln!("error: {e}"),
                Format::Structured => println!("{}", json!({ "status": "error", "error": e.to_string() })),
            }
            if e.is_domain_failure() {
                EXIT_DOMAIN
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let seed = cli.seed;
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Square(a) => square_cmd(a),
        Command::Order(a) => order(a),
        Command::Color(a) => color(a, seed),
        Command::Label(a) => label(a),
        Command::Paint(a) => paint(a, seed),
        Command::Discharge(a) => discharge(a),
        Command::Check(a) => check(a),
        Command::Oracle(a) => oracle(a),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Tags parse errors with the file they came from.
fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn load_graph(path: &Path) -> Result<Graph> {
    in_file(path, io::parse_graph(&read(path)?))
}

fn embed_path(input: &Path, embed: Option<&Path>) -> PathBuf {
    embed.map_or_else(|| input.with_extension("embed"), Path::to_path_buf)
}

fn load_plane(input: &Path, embed: Option<&Path>) -> Result<PlaneGraph> {
    let g = load_graph(input)?;
    let path = embed_path(input, embed);
    in_file(&path, io::parse_embedding(g, &read(&path)?))
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn report(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn gen(a: GenArgs) -> Result<Outcome> {
    let needs_param = !matches!(a.family.as_str(), "gadget" | "tetrahedron");
    if !FAMILIES.contains(&a.family.as_str()) {
        return Err(Error::BadParams(format!(
            "unknown family {:?}; expected one of {}",
            a.family,
            FAMILIES.join(", ")
        )));
    }
    let param = match (a.k, needs_param) {
        (Some(k), _) => k,
        (None, false) => 0,
        (None, true) => return Err(Error::BadParams(format!("family {} needs --k", a.family))),
    };
    let pg = by_name(&a.family, param)?;
    let graph_path = with_extension(&a.output, "graph");
    let embed_path = with_extension(&a.output, "embed");
    write(&graph_path, &io::write_graph(pg.graph()))?;
    write(&embed_path, &io::write_embedding(&pg))?;
    let g = pg.graph();
    Ok(Outcome::ok(report([
        ("status", json!("ok")),
        ("family", json!(a.family)),
        ("vertices", json!(g.vertex_count())),
        ("edges", json!(g.edge_count())),
        ("max_degree", json!(g.max_degree())),
        ("graph", json!(graph_path.display().to_string())),
        ("embed", json!(embed_path.display().to_string())),
    ])))
}

fn square_cmd(a: SquareArgs) -> Result<Outcome> {
    let g = load_graph(&a.graph.input)?;
    let sq = square(&g);
    let far = (0..g.vertex_count())
        .map(|v| sq.kinds(v).iter().filter(|&&k| k == EdgeKind::DistanceTwo).count())
        .sum::<usize>()
        / 2;
    if let Some(out) = &a.output {
        write(out, &io::write_graph(sq.graph()))?;
    }
    Ok(Outcome::ok(report([
        ("status", json!("ok")),
        ("vertices", json!(sq.vertex_count())),
        ("edges", json!(sq.edge_count())),
        ("adjacent_edges", json!(g.edge_count())),
        ("distance_two_edges", json!(far)),
        ("max_degree", json!(sq.max_degree())),
    ])))
}

fn order(a: OrderArgs) -> Result<Outcome> {
    let g = load_graph(&a.graph.input)?;
    let thresholds = Thresholds::for_graph(&g, a.d, a.tg);
    let sq = square(&g);
    let mut r = report([("status", json!("")), ("d_param", json!(thresholds.d_param))]);
    r.insert("threshold_g".into(), json!(thresholds.graph));
    r.insert("threshold_sq".into(), json!(thresholds.square));
    match good_ordering_with(&g, &sq, thresholds) {
        OrderingOutcome::Good(o) => {
            if let Some(out) = &a.output {
                write(out, &io::write_ordering(o.order()))?;
            }
            r["status"] = json!("good");
            r.insert("max_back_g".into(), json!(o.max_back_g()));
            r.insert("max_back_sq".into(), json!(o.max_back_sq()));
            r.insert("order".into(), json!(o.order()));
            Ok(Outcome::ok(r))
        }
        OrderingOutcome::Stuck(cert) => {
            r["status"] = json!("stuck");
            r.insert("stuck_count".into(), json!(cert.remaining.len()));
            r.insert("remaining".into(), json!(cert.remaining));
            r.insert("residual_g".into(), json!(cert.residual_g));
            r.insert("residual_sq".into(), json!(cert.residual_sq));
            Ok(Outcome { report: r, ok: false })
        }
    }
}

/// The ordering to color along: read and verified against `t_g = 3`,
/// `D + 2` if given, else extracted. A stuck graph is a domain failure.
fn resolve_ordering(g: &Graph, input: &OrderingInput) -> Result<std::result::Result<GoodOrdering, Outcome>> {
    let thresholds = Thresholds::for_graph(g, input.d, None);
    if let Some(path) = &input.order {
        let order = in_file(path, io::parse_ordering(&read(path)?))?;
        return GoodOrdering::from_order(g, order, thresholds).map(Ok);
    }
    match good_ordering_with(g, &square(g), thresholds) {
        OrderingOutcome::Good(o) => Ok(Ok(o)),
        OrderingOutcome::Stuck(cert) => Ok(Err(Outcome {
            report: report([
                ("status", json!("stuck")),
                ("stuck_count", json!(cert.remaining.len())),
                ("remaining", json!(cert.remaining)),
            ]),
            ok: false,
        })),
    }
}

fn color(a: ColorArgs, seed: u64) -> Result<Outcome> {
    let g = load_graph(&a.graph.input)?;
    let n = g.vertex_count();
    let lists = match (&a.lists, a.k, a.palette) {
        (Some(path), _, _) => ListAssignment::new(in_file(path, io::parse_lists(&read(path)?, n))?),
        (None, Some(k), Some(palette)) if palette > k => random_lists(n, k, palette, seed),
        (None, Some(k), _) => ListAssignment::uniform(n, 0..k as u32),
        (None, None, _) => {
            ListAssignment::uniform(n, 0..Thresholds::for_graph(&g, a.ordering.d, None).d_param as u32 + 3)
        }
    };
    let ordering = match resolve_ordering(&g, &a.ordering)? {
        Ok(o) => o,
        Err(stuck) => return Ok(stuck),
    };
    let sq = square(&g);
    match greedy_list_color(sq.graph(), ordering.order(), &lists) {
        Ok(coloring) => {
            if let Some(out) = &a.output {
                write(out, &io::write_values(coloring.colors()))?;
            }
            Ok(Outcome::ok(report([
                ("status", json!("colored")),
                ("min_list_size", json!(lists.min_size())),
                ("distinct_colors", json!(coloring.distinct_count())),
                ("colors", json!(coloring.colors())),
            ])))
        }
        Err(Error::ListExhausted { vertex, list }) => Ok(Outcome {
            report: report([
                ("status", json!("exhausted")),
                ("vertex", json!(vertex)),
                ("list", json!(list)),
            ]),
            ok: false,
        }),
        Err(e) => Err(e),
    }
}

fn random_lists(n: usize, k: usize, palette: usize, seed: u64) -> ListAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ListAssignment::new(
        (0..n)
            .map(|_| sample(&mut rng, palette, k).into_iter().map(|c| c as u32).collect())
            .collect(),
    )
}

fn label(a: LabelArgs) -> Result<Outcome> {
    let g = load_graph(&a.graph.input)?;
    let params = LpqParams::new(a.p, a.q)?;
    let ordering = match resolve_ordering(&g, &a.ordering)? {
        Ok(o) => o,
        Err(stuck) => return Ok(stuck),
    };
    let labeling = greedy_lpq_with(&square(&g), ordering.order(), params)?;
    if let Some(out) = &a.output {
        write(out, &io::write_values(labeling.labels()))?;
    }
    let mut r = report([("status", json!("labeled")), ("p", json!(a.p)), ("q", json!(a.q))]);
    r.insert("span".into(), json!(labeling.span()));
    if let Ok(bound) = span_bound(&g, &ordering, params) {
        r.insert("span_bound".into(), json!(bound));
    }
    r.insert("labels".into(), json!(labeling.labels()));
    Ok(Outcome::ok(r))
}

fn paint(a: PaintArgs, seed: u64) -> Result<Outcome> {
    let g = load_graph(&a.graph.input)?;
    let script = match &a.script {
        Some(path) => Some(in_file(path, io::parse_script(&read(path)?))?),
        None => None,
    };
    let mut lister = lister_by_name(&a.lister, seed, script)?;
    let ordering = match resolve_ordering(&g, &a.ordering)? {
        Ok(o) => o,
        Err(stuck) => return Ok(stuck),
    };
    let transcript = paint_game(square(&g).graph(), a.k, ordering.order(), lister.as_mut())?;
    if let Some(out) = &a.output {
        let text: String = transcript
            .rounds
            .iter()
            .map(|r| r.listed.iter().map(usize::to_string).collect::<Vec<_>>().join(" ") + "\n")
            .collect();
        write(out, &text)?;
    }
    let mut r = report([("rounds", json!(transcript.rounds.len()))]);
    let ok = match transcript.outcome {
        PaintOutcome::PainterWins => {
            r.insert("winner".into(), json!("painter"));
            true
        }
        PaintOutcome::ListerWins { vertex } => {
            r.insert("winner".into(), json!("lister"));
            r.insert("vertex".into(), json!(vertex));
            false
        }
    };
    let rounds: Vec<Value> = transcript
        .rounds
        .iter()
        .map(|round| json!({ "listed": round.listed, "painted": round.painted }))
        .collect();
    r.insert("transcript".into(), Value::Array(rounds));
    Ok(Outcome { report: r, ok })
}

fn discharge(a: DischargeArgs) -> Result<Outcome> {
    let pg = load_plane(&a.graph.input, a.graph.embed.as_deref())?;
    let g = pg.graph();
    let d_param = Thresholds::for_graph(g, a.d, None).d_param;
    let audit = audit(&pg, d_param)?;
    let phase = Phase::ALL[a.phase as usize];
    let ledger = audit.discharge.at(phase);
    let mut r = report([
        ("d_param", json!(d_param)),
        ("phase", json!(phase.to_string())),
        ("conserved", json!(audit.conserved)),
        ("faces_nonnegative", json!(audit.faces_nonnegative)),
        ("high_vertices_nonnegative", json!(audit.high_vertices_nonnegative)),
    ]);
    let totals: Map<String, Value> = audit
        .totals
        .iter()
        .map(|(p, t)| (p.to_string(), json!(t.to_string())))
        .collect();
    r.insert("totals".into(), Value::Object(totals));
    let keep = |c: &crate::discharging::Charge| !a.negatives_only || num_traits::Signed::is_negative(c);
    let vertices: Map<String, Value> = ledger
        .vertex
        .iter()
        .enumerate()
        .filter(|(_, c)| keep(c))
        .map(|(v, c)| (v.to_string(), json!(c.to_string())))
        .collect();
    let faces: Map<String, Value> = ledger
        .face
        .iter()
        .enumerate()
        .filter(|(_, c)| keep(c))
        .map(|(f, c)| (f.to_string(), json!(c.to_string())))
        .collect();
    let lengths: Map<String, Value> = audit
        .discharge
        .faces
        .iter()
        .enumerate()
        .filter(|(f, _)| faces.contains_key(&f.to_string()))
        .map(|(f, face)| (f.to_string(), json!(face.len())))
        .collect();
    r.insert("vertex".into(), Value::Object(vertices));
    r.insert("face".into(), Value::Object(faces));
    r.insert("face_length".into(), Value::Object(lengths));
    Ok(Outcome::ok(r))
}

fn check(a: CheckArgs) -> Result<Outcome> {
    let g = load_graph(&a.input)?;
    let n = g.vertex_count();
    let mut r = report([("vertices", json!(n)), ("edges", json!(g.edge_count()))]);
    let mut ok = true;
    let embed = embed_path(&a.input, a.embed.as_deref());
    if a.embed.is_some() || embed.exists() {
        let pg = in_file(&embed, io::parse_embedding(g.clone(), &read(&embed)?))?;
        let class = check_class(&pg);
        ok &= class.in_class;
        r.insert(
            "class".into(),
            json!({
                "planar_embedding": class.is_planar_embedding,
                "has_4_cycle": class.has_4_cycle,
                "has_5_cycle": class.has_5_cycle,
                "girth": class.girth,
                "min_degree": class.min_degree,
                "max_degree": class.max_degree,
                "in_class": class.in_class,
            }),
        );
    }
    if let Some(path) = &a.order {
        let order = in_file(path, io::parse_ordering(&read(path)?))?;
        let v = verify_ordering_with(&g, &order, Thresholds::for_graph(&g, a.d, a.tg))?;
        ok &= v.pass;
        r.insert(
            "ordering".into(),
            json!({
                "pass": v.pass,
                "d_param": v.thresholds.d_param,
                "max_back_g": v.max_back_g,
                "argmax_g": v.argmax_g,
                "max_back_sq": v.max_back_sq,
                "argmax_sq": v.argmax_sq,
                "first_violation": v.first_violation,
            }),
        );
    }
    if let Some(path) = &a.coloring {
        let coloring = Coloring::new(in_file(path, io::parse_values(&read(path)?, n))?);
        let lists = match &a.lists {
            Some(lp) => ListAssignment::new(in_file(lp, io::parse_lists(&read(lp)?, n))?),
            None => ListAssignment::new(coloring.colors().iter().map(|&c| vec![c]).collect()),
        };
        let pass = is_proper_list_coloring(&g, &lists, &coloring);
        ok &= pass;
        r.insert(
            "coloring".into(),
            json!({ "pass": pass, "distinct_colors": coloring.distinct_count() }),
        );
    }
    if let Some(path) = &a.labeling {
        let params = LpqParams::new(a.p, a.q)?;
        let labeling = Labeling::new(in_file(path, io::parse_values(&read(path)?, n))?);
        let pass = is_valid_labeling(&g, params, &labeling);
        ok &= pass;
        r.insert("labeling".into(), json!({ "pass": pass, "span": labeling.span() }));
    }
    r.insert("pass".into(), json!(ok));
    Ok(Outcome { report: r, ok })
}

fn oracle(a: OracleArgs) -> Result<Outcome> {
    let g = load_graph(&a.graph.input)?;
    let n = g.vertex_count();
    let target = if a.square { square(&g).into_graph() } else { g.clone() };
    let time_limit = match a.budget_seconds {
        Some(s) if !(s.is_finite() && s >= 0.0) => return Err(Error::BadParams(format!("bad --budget-seconds {s}"))),
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    let budget = OracleBudget {
        max_vertices: a.max_vertices,
        max_nodes: a.budget_nodes.or(OracleBudget::default().max_nodes),
        time_limit,
    };
    let mut r = report([
        ("task", json!(format!("{:?}", a.task).to_lowercase())),
        ("square", json!(a.square)),
    ]);
    let mut ok = true;
    match a.task {
        Task::Chi => {
            r.insert("value".into(), json!(exact_chromatic(&target, &budget)?));
        }
        Task::Clique => {
            r.insert("value".into(), json!(max_clique(&target, &budget)?));
        }
        Task::Lpq => {
            if a.square {
                return Err(Error::BadParams(
                    "lpq already works on distances in the input graph".into(),
                ));
            }
            r.insert("p".into(), json!(a.p));
            r.insert("q".into(), json!(a.q));
            r.insert(
                "value".into(),
                json!(exact_lpq(&g, LpqParams::new(a.p, a.q)?, &budget)?),
            );
        }
        Task::Listcol => {
            let path = a
                .lists
                .as_ref()
                .ok_or_else(|| Error::BadParams("listcol needs --lists".into()))?;
            let lists = ListAssignment::new(in_file(path, io::parse_lists(&read(path)?, n))?);
            ok = exact_list_colorable(&target, &lists, &budget)?;
            r.insert("value".into(), json!(ok));
        }
    }
    Ok(Outcome { report: r, ok })
}

fn render(report: &Map<String, Value>, format: Format) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(&Value::Object(report.clone())).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            for (k, v) in report {
                render_text(k, v, &mut out);
            }
            out
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn render_text(key: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, inner) in m {
                render_text(&format!("{key}.{k}"), inner, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, inner) in items.iter().enumerate() {
                render_text(&format!("{key}.{i}"), inner, out);
            }
        }
        Value::Array(items) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{key}: {}\n", joined.join(" ")));
        }
        other => out.push_str(&format!("{key}: {}\n", scalar(other))),
    }
}
