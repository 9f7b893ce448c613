//! The `weave` command line: thin wrappers over the library crates plus the
//! acceptance scenarios. Indices on the command line are 1-based.

mod dot;
pub mod scenarios;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use braid::fixtures::{beta_affine_d, beta_hat_affine_d, beta_hat_tripod, beta_tripod, ngraph_word_affine_d, ngraph_word_tripod};
use braid::{apply_relation, brick_quiver, equivalent_bounded, half_twist, parse_braid, BraidWord, Equivalence, Rule};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cluster_pattern::{LaurentPoly, Seed};
use exchange_core::{cartan_counterpart, classify_cartan, ExchangeMatrix};
use exchange_graph::{explore_with_jobs, DEFAULT_NODE_CAP};
use folding::{catalog_names, catalog_triple, fold, GroupAction};
use ngraph::{
    build_initial, coxeter_padding, intersection_quiver, legendrian_coxeter_mutation, move_reduce, mutate_cycle,
    CatalogType, Cycle, CycleSet, Move, NGraph, PaddingLabel,
};
use serde::{Deserialize, Serialize};

pub use dot::{export_dot, DotObject};

#[derive(Parser)]
#[command(name = "weave", version, about = "Cluster patterns, foldings, braid words and N-graphs of affine type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mutate an exchange matrix, or a seed, along 1-based indices.
    Mutate(MutateArgs),
    /// Breadth-first exploration of the exchange graph.
    Explore(ExploreArgs),
    /// Fold a catalog triple, or a matrix under a group action.
    Fold(FoldArgs),
    /// Braid words: parse, half twists, rewriting, equivalence, brick quivers.
    Braid {
        #[command(subcommand)]
        op: BraidOp,
    },
    /// N-graphs: catalog graphs, quivers, mutation, paddings, moves.
    Ngraph {
        #[command(subcommand)]
        op: NgraphOp,
    },
    /// Run an acceptance scenario by name or number, or `all`.
    Verify { scenario: String },
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MutateArgs {
    /// Rows as [[..]] or {"rows":..,"cols":..,"entries":..}; inline or a file path.
    #[arg(long)]
    matrix: Option<String>,
    /// A seed (JSON or file), or `initial` for the initial seed of --matrix.
    #[arg(long)]
    seed: Option<String>,
    /// Mutation indices, applied left to right.
    #[arg(short = 'k', value_delimiter = ',')]
    k: Vec<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ExploreArgs {
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long, default_value_t = 4)]
    depth: usize,
    #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
    cap: usize,
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct FoldArgs {
    /// Catalog name such as E6t-Z3-G2t.
    #[arg(long)]
    triple: Option<String>,
    #[arg(long, requires = "action")]
    matrix: Option<String>,
    /// {"degree": m, "generators": [[1-based images]]}; inline or a file path.
    #[arg(long)]
    action: Option<String>,
    /// Print the catalog names.
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct WordArgs {
    /// `s2 s1^3 s2`, or a fixture: beta(D5), betahat(3,3,3), ngraph(D4), ...
    #[arg(long)]
    word: String,
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Subcommand)]
enum BraidOp {
    Parse {
        #[command(flatten)]
        word: WordArgs,
    },
    Delta {
        #[arg(long)]
        strands: usize,
    },
    /// Rules: `b<i>@<pos>`, `c<i>,<j>@<pos>`, `r<k>` with 1-based positions.
    Rewrite {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long = "rule", required = true)]
        rules: Vec<String>,
    },
    Equiv {
        /// Give exactly two.
        #[arg(long, required = true)]
        word: Vec<String>,
        #[arg(long)]
        strands: Option<usize>,
        /// Search budget in expanded words.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        #[arg(long)]
        cyclic: bool,
    },
    Brick {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Catalog type: D~n, E~6, E~7, E~8 or an arm triple a,b,c.
    #[arg(long = "type")]
    ty: Option<String>,
    /// A graph file written by `ngraph build` (or a bare graph).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum NgraphOp {
    Build {
        #[arg(long = "type")]
        ty: String,
        #[command(flatten)]
        output: Output,
    },
    Quiver {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        output: Output,
    },
    Mutate {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short = 'k', value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Legendrian Coxeter mutation by padding, `--depth` times.
    Coxeter {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        output: Output,
    },
    Padding {
        /// C(3,3,3), Cbar(..), Cinv(..), Cbarinv(..), C(D4), Cinv(D4).
        #[arg(long)]
        label: String,
        #[command(flatten)]
        output: Output,
    },
    Validate {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Greedy Move I / Move II reduction.
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Writes every catalog graph and padding as JSON into a directory.
    Fixtures {
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

fn usage(m: impl std::fmt::Display) -> Failure {
    Failure::Usage(m.to_string())
}

fn domain(m: impl std::fmt::Display) -> Failure {
    Failure::Domain(m.to_string())
}

type Res<T> = Result<T, Failure>;

/// Runs the command line; returns the exit code (0 ok, 1 domain error, 2 usage).
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "usage error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            1
        }
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Res<i32> {
    match cmd {
        Command::Mutate(a) => mutate(a, stdout),
        Command::Explore(a) => explore(a, stdout, stderr),
        Command::Fold(a) => fold_cmd(a, stdout, stderr),
        Command::Braid { op } => braid_cmd(op, stdout),
        Command::Ngraph { op } => ngraph_cmd(op, stdout, stderr),
        Command::Verify { scenario } => verify(&scenario, stdout, stderr),
    }
    .map(|()| 0)
    .or_else(|f| match f {
        Failure::Domain(m) if m.is_empty() => Ok(1),
        other => Err(other),
    })
}

fn emit(output: &Output, text: &str, stdout: &mut dyn Write) -> Res<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &output.out {
        Some(p) => std::fs::write(p, text).map_err(|e| domain(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(domain),
    }
}

/// Inline JSON, or the contents of a file when the argument names one.
fn read_arg(text: &str) -> Res<String> {
    let t = text.trim_start();
    if t.starts_with('[') || t.starts_with('{') {
        return Ok(text.to_string());
    }
    std::fs::read_to_string(text).map_err(|e| usage(format!("{text}: {e}")))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixArg {
    Rows(Vec<Vec<i64>>),
    Full(ExchangeMatrix),
}

fn parse_matrix(text: &str) -> Res<ExchangeMatrix> {
    let body = read_arg(text)?;
    let b = match serde_json::from_str::<MatrixArg>(&body) {
        Ok(MatrixArg::Full(b)) => Ok(b),
        Ok(MatrixArg::Rows(rows)) => {
            let n = rows.first().map_or(0, Vec::len);
            ExchangeMatrix::from_rows(rows, n).map_err(domain)
        }
        Err(e) => Err(usage(format!("matrix: {e}"))),
    }?;
    if b.skew_symmetrizer().is_none() {
        return Err(domain("matrix is not skew-symmetrizable"));
    }
    Ok(b)
}

fn rows_json(b: &ExchangeMatrix) -> String {
    serde_json::to_string(&b.to_rows()).expect("rows serialize")
}

/// Seed wire format with its dimensions spelled out.
#[derive(Serialize, Deserialize)]
struct SeedJson {
    n: usize,
    m: usize,
    matrix: ExchangeMatrix,
    variables: Vec<LaurentPoly>,
}

impl SeedJson {
    fn from_seed(s: &Seed) -> Self {
        SeedJson { n: s.n(), m: s.m(), matrix: s.matrix.clone(), variables: s.variables.clone() }
    }

    fn into_seed(self) -> Res<Seed> {
        if self.matrix.n() != self.n || self.matrix.m() != self.m || self.variables.len() != self.m {
            return Err(domain("seed dimensions do not match its matrix"));
        }
        Ok(Seed { variables: self.variables, matrix: self.matrix })
    }
}

fn start_seed(matrix: Option<&str>, seed: Option<&str>) -> Res<Seed> {
    match (matrix, seed) {
        (Some(m), None | Some("initial")) => Ok(Seed::initial(parse_matrix(m)?)),
        (None, Some(s)) if s != "initial" => {
            let j: SeedJson = serde_json::from_str(&read_arg(s)?).map_err(|e| usage(format!("seed: {e}")))?;
            j.into_seed()
        }
        (Some(_), Some(_)) => Err(usage("give --matrix or --seed, not both")),
        _ => Err(usage("--matrix is required")),
    }
}

fn zero_based(k: &[usize]) -> Res<Vec<usize>> {
    k.iter().map(|&x| x.checked_sub(1).ok_or_else(|| usage("indices are 1-based"))).collect()
}

fn mutate(a: MutateArgs, stdout: &mut dyn Write) -> Res<()> {
    let path = zero_based(&a.k)?;
    if a.seed.is_none() {
        let mut b = parse_matrix(a.matrix.as_deref().ok_or_else(|| usage("--matrix is required"))?)?;
        for &k in &path {
            b = b.mutate(k).map_err(domain)?;
        }
        let text = match a.output.format {
            Format::Json => rows_json(&b),
            Format::Dot => export_dot(DotObject::Quiver(&b)),
        };
        return emit(&a.output, &text, stdout);
    }
    let s = start_seed(a.matrix.as_deref(), a.seed.as_deref())?.mutate_path(&path).map_err(domain)?;
    let text = match a.output.format {
        Format::Json => serde_json::to_string_pretty(&SeedJson::from_seed(&s)).expect("seed serializes"),
        Format::Dot => export_dot(DotObject::Quiver(&s.matrix)),
    };
    emit(&a.output, &text, stdout)
}

fn explore(a: ExploreArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Res<()> {
    let s0 = start_seed(a.matrix.as_deref(), a.seed.as_deref())?;
    let g = explore_with_jobs(&s0, a.depth, a.cap, a.jobs).map_err(domain)?;
    let _ = writeln!(
        stderr,
        "{} seeds, {} edges, {}",
        g.node_count(),
        g.edge_count(),
        if g.complete { "complete" } else { "frontier open" }
    );
    let text = match a.output.format {
        Format::Json => serde_json::to_string_pretty(&exchange_graph::to_json(&g)).expect("json"),
        Format::Dot => export_dot(DotObject::Slice(&g)),
    };
    emit(&a.output, &text, stdout)
}

fn fold_cmd(a: FoldArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Res<()> {
    if a.list {
        return emit(&a.output, &catalog_names().join("\n"), stdout);
    }
    let (b, action) = match (&a.triple, &a.matrix, &a.action) {
        (Some(name), None, None) => {
            let t = catalog_triple(name).map_err(domain)?;
            (t.matrix, t.action)
        }
        (None, Some(m), Some(act)) => {
            let action: GroupAction =
                serde_json::from_str(&read_arg(act)?).map_err(|e| usage(format!("action: {e}")))?;
            (parse_matrix(m)?, action)
        }
        _ => return Err(usage("give --triple, or --matrix with --action")),
    };
    let folded = fold(&b, &action).map_err(domain)?;
    if folded.n() == folded.m() {
        if let Ok(class) = classify_cartan(&cartan_counterpart(&folded)) {
            let _ = writeln!(stderr, "type {class}");
        }
    }
    let text = match a.output.format {
        Format::Json => rows_json(&folded),
        Format::Dot => export_dot(DotObject::Quiver(&folded)),
    };
    emit(&a.output, &text, stdout)
}

fn catalog_type(text: &str) -> Res<CatalogType> {
    let t: String = text.chars().filter(|c| !c.is_whitespace() && !"()".contains(*c)).collect();
    let bad = || usage(format!("unknown type {text:?}; use D~n, E~6, E~7, E~8 or a,b,c"));
    if t.contains(',') {
        let v: Vec<usize> = t.split(',').map(|x| x.parse().map_err(|_| bad())).collect::<Res<_>>()?;
        let [a, b, c] = v[..] else { return Err(bad()) };
        return Ok(CatalogType::Tripod(a, b, c));
    }
    let (letter, rest) = t.split_at(1.min(t.len()));
    let k: usize = rest.trim_start_matches('~').parse().map_err(|_| bad())?;
    match (letter, k) {
        ("D", _) => Ok(CatalogType::AffineD(k)),
        ("E", 6) => Ok(CatalogType::Tripod(3, 3, 3)),
        ("E", 7) => Ok(CatalogType::Tripod(2, 4, 4)),
        ("E", 8) => Ok(CatalogType::Tripod(2, 3, 6)),
        _ => Err(bad()),
    }
}

/// Fixture words by name, otherwise the `s1 s2^3` grammar.
fn parse_word(w: &WordArgs) -> Res<BraidWord> {
    let t: String = w.word.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some((head, arg)) = t.strip_suffix(')').and_then(|x| x.split_once('(')) {
        let ty = catalog_type(arg)?;
        let word = match (head, ty) {
            ("beta", CatalogType::AffineD(n)) if n >= 4 => beta_affine_d(n),
            ("betahat", CatalogType::AffineD(n)) if n >= 4 => beta_hat_affine_d(n),
            ("ngraph", CatalogType::AffineD(n)) if n >= 4 => ngraph_word_affine_d(n),
            ("beta", CatalogType::Tripod(a, b, c)) => beta_tripod(a, b, c),
            ("betahat", CatalogType::Tripod(a, b, c)) => beta_hat_tripod(a, b, c),
            ("ngraph", CatalogType::Tripod(a, b, c)) => ngraph_word_tripod(a, b, c),
            _ => return Err(usage(format!("unknown fixture word {:?}", w.word))),
        };
        return Ok(word);
    }
    let strands = match w.strands {
        Some(s) => s,
        None => {
            let top = w.word.split('s').skip(1).filter_map(|x| {
                let digits: String = x.chars().take_while(char::is_ascii_digit).collect();
                digits.parse::<usize>().ok()
            });
            let top = top.max();
            top.map_or(2, |g| g + 1).max(2)
        }
    };
    parse_braid(&w.word, strands).map_err(domain)
}

fn parse_rule(text: &str) -> Res<Rule> {
    let bad = || usage(format!("rule {text:?}: use b<i>@<pos>, c<i>,<j>@<pos> or r<k>"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let pos = |s: &str| num(s)?.checked_sub(1).ok_or_else(bad);
    let (kind, rest) = text.split_at(1.min(text.len()));
    match kind {
        "r" => Ok(Rule::CyclicRotate(num(rest)?)),
        "b" => {
            let (i, p) = rest.split_once('@').ok_or_else(bad)?;
            Ok(Rule::BraidRel { i: num(i)?, pos: pos(p)? })
        }
        "c" => {
            let (ij, p) = rest.split_once('@').ok_or_else(bad)?;
            let (i, j) = ij.split_once(',').ok_or_else(bad)?;
            Ok(Rule::Comm { i: num(i)?, j: num(j)?, pos: pos(p)? })
        }
        _ => Err(bad()),
    }
}

fn rule_text(r: &Rule) -> String {
    match *r {
        Rule::CyclicRotate(k) => format!("r{k}"),
        Rule::BraidRel { i, pos } => format!("b{i}@{}", pos + 1),
        Rule::Comm { i, j, pos } => format!("c{i},{j}@{}", pos + 1),
    }
}

fn word_json(w: &BraidWord) -> String {
    serde_json::to_string(w).expect("word serializes")
}

fn braid_cmd(op: BraidOp, stdout: &mut dyn Write) -> Res<()> {
    let plain = Output { format: Format::Json, out: None };
    match op {
        BraidOp::Parse { word } => emit(&plain, &word_json(&parse_word(&word)?), stdout),
        BraidOp::Delta { strands } => emit(&plain, &word_json(&half_twist(strands).map_err(domain)?), stdout),
        BraidOp::Rewrite { word, rules } => {
            let mut w = parse_word(&word)?;
            for r in &rules {
                w = apply_relation(&w, parse_rule(r)?).map_err(|e| domain(format!("{r}: {e}")))?;
            }
            emit(&plain, &word_json(&w), stdout)
        }
        BraidOp::Equiv { word, strands, cap, cyclic } => {
            if word.len() != 2 {
                return Err(usage("equiv takes exactly two --word values"));
            }
            let parse = |s: &String| parse_word(&WordArgs { word: s.clone(), strands });
            let (a, b) = (parse(&word[0])?, parse(&word[1])?);
            let v = match equivalent_bounded(&a, &b, cap, cyclic).map_err(domain)? {
                Equivalence::Equivalent(rules) => serde_json::json!({
                    "equivalent": true,
                    "witness": rules.iter().map(rule_text).collect::<Vec<_>>(),
                }),
                Equivalence::Unknown => serde_json::json!({ "equivalent": false }),
            };
            emit(&plain, &v.to_string(), stdout)
        }
        BraidOp::Brick { word, output } => {
            let q = brick_quiver(&parse_word(&word)?).map_err(domain)?;
            let text = match output.format {
                Format::Json => rows_json(&q),
                Format::Dot => export_dot(DotObject::Quiver(&q)),
            };
            emit(&output, &text, stdout)
        }
    }
}

fn bundle_json(g: &NGraph, set: &CycleSet) -> String {
    let graph: serde_json::Value = serde_json::from_str(&g.to_json()).expect("graph json");
    serde_json::to_string_pretty(&serde_json::json!({ "graph": graph, "cycles": set.cycles })).expect("json")
}

fn load_graph(input: &GraphInput) -> Res<(NGraph, CycleSet)> {
    match (&input.ty, &input.input) {
        (Some(t), None) => build_initial(catalog_type(t)?).map_err(domain),
        (None, Some(p)) => {
            let text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            match v.get("graph") {
                Some(g) => {
                    let graph = NGraph::from_json(&g.to_string()).map_err(domain)?;
                    let cycles: Vec<Cycle> = serde_json::from_value(v.get("cycles").cloned().unwrap_or_default())
                        .map_err(|e| usage(format!("cycles: {e}")))?;
                    Ok((graph, CycleSet { cycles }))
                }
                None => Ok((NGraph::from_json(&text).map_err(domain)?, CycleSet::default())),
            }
        }
        _ => Err(usage("give --type or --input")),
    }
}

fn graph_out(g: &NGraph, set: &CycleSet, output: &Output, stdout: &mut dyn Write) -> Res<()> {
    let text = match output.format {
        Format::Json => bundle_json(g, set),
        Format::Dot => g.to_dot(),
    };
    emit(output, &text, stdout)
}

fn ngraph_cmd(op: NgraphOp, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Res<()> {
    match op {
        NgraphOp::Build { ty, output } => {
            let (g, set) = build_initial(catalog_type(&ty)?).map_err(domain)?;
            graph_out(&g, &set, &output, stdout)
        }
        NgraphOp::Quiver { input, output } => {
            let (g, set) = load_graph(&input)?;
            let q = intersection_quiver(&g, &set).map_err(domain)?;
            let text = match output.format {
                Format::Json => rows_json(&q),
                Format::Dot => export_dot(DotObject::Quiver(&q)),
            };
            emit(&output, &text, stdout)
        }
        NgraphOp::Mutate { input, k, output } => {
            let (mut g, mut set) = load_graph(&input)?;
            for i in zero_based(&k)? {
                (g, set) = mutate_cycle(&g, &set, i).map_err(domain)?;
            }
            graph_out(&g, &set, &output, stdout)
        }
        NgraphOp::Coxeter { input, depth, inverse, output } => {
            let (mut g, mut set) = load_graph(&input)?;
            for _ in 0..depth {
                (g, set) = legendrian_coxeter_mutation(&g, &set, if inverse { -1 } else { 1 }).map_err(domain)?;
            }
            let _ = writeln!(stderr, "{} vertices, {} edges", g.vertices.len(), g.edges.len());
            graph_out(&g, &set, &output, stdout)
        }
        NgraphOp::Padding { label, output } => {
            let label: PaddingLabel = label.parse().map_err(domain)?;
            let p = coxeter_padding(label).map_err(domain)?;
            let text = match output.format {
                Format::Json => p.graph.to_json(),
                Format::Dot => p.graph.to_dot(),
            };
            emit(&output, &text, stdout)
        }
        NgraphOp::Validate { input } => {
            let (g, _) = load_graph(&input)?;
            let v: Vec<String> = g.validate().iter().map(|x| format!("{x:?}")).collect();
            emit(&Output { format: Format::Json, out: None }, &serde_json::to_string(&v).expect("json"), stdout)?;
            if v.is_empty() {
                Ok(())
            } else {
                Err(domain(""))
            }
        }
        NgraphOp::Reduce { input, cap, output } => {
            let (g, set) = load_graph(&input)?;
            let r = move_reduce(&g, &[Move::MoveI, Move::MoveII], cap);
            let _ = writeln!(stderr, "{} -> {} vertices", g.vertices.len(), r.vertices.len());
            // reductions may delete cycle edges; keep only those that survive
            let kept = set.cycles.into_iter().filter(|c| c.edges.iter().all(|e| r.edges.contains_key(e))).collect();
            graph_out(&r, &CycleSet { cycles: kept }, &output, stdout)
        }
        NgraphOp::Fixtures { out } => write_fixtures(&out, stdout),
    }
}

fn write_fixtures(dir: &Path, stdout: &mut dyn Write) -> Res<()> {
    std::fs::create_dir_all(dir).map_err(|e| domain(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    let mut put = |name: String, text: String| -> Res<()> {
        let p = dir.join(name);
        std::fs::write(&p, text + "\n").map_err(|e| domain(format!("{}: {e}", p.display())))?;
        written.push(p.display().to_string());
        Ok(())
    };
    let mut types: Vec<CatalogType> = (4..=7).map(CatalogType::AffineD).collect();
    types.extend([CatalogType::Tripod(3, 3, 3), CatalogType::Tripod(2, 4, 4), CatalogType::Tripod(2, 3, 6)]);
    for t in types {
        let (g, set) = build_initial(t).map_err(domain)?;
        let name = match t {
            CatalogType::AffineD(n) => format!("G-D{n}.json"),
            CatalogType::Tripod(a, b, c) => format!("G-{a}{b}{c}.json"),
        };
        put(name, bundle_json(&g, &set))?;
    }
    let mut labels: Vec<PaddingLabel> = (4..=7).flat_map(|n| [PaddingLabel::CAffineD(n), PaddingLabel::CAffineDInv(n)]).collect();
    for (a, b, c) in [(3, 3, 3), (2, 4, 4), (2, 3, 6)] {
        labels.extend([
            PaddingLabel::C(a, b, c),
            PaddingLabel::CBar(a, b, c),
            PaddingLabel::CInv(a, b, c),
            PaddingLabel::CBarInv(a, b, c),
        ]);
    }
    for l in labels {
        let p = coxeter_padding(l).map_err(domain)?;
        let name: String = l.to_string().chars().filter(|c| c.is_alphanumeric()).collect();
        put(format!("pad-{name}.json"), p.graph.to_json())?;
    }
    emit(&Output { format: Format::Json, out: None }, &written.join("\n"), stdout)
}

fn verify(key: &str, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Res<()> {
    let chosen = if key == "all" {
        scenarios::all()
    } else {
        vec![scenarios::find(key).ok_or_else(|| {
            let names: Vec<&str> = scenarios::all().iter().map(|s| s.name).collect();
            usage(format!("unknown scenario {key:?}; one of all, {}", names.join(", ")))
        })?]
    };
    let single = chosen.len() == 1;
    let mut ok = true;
    for s in chosen {
        let o = s.run();
        ok &= o.passed;
        if single {
            let _ = writeln!(stdout, "{}", o.detail);
            let _ = writeln!(stderr, "{}", o.line());
        } else {
            let _ = writeln!(stdout, "{}", o.line());
        }
    }
    if ok {
        Ok(())
    } else {
        Err(domain(""))
    }
}
