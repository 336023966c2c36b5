//! The `mdbs` command-line tool.
//!
//! [`run`] takes the argument vector and explicit output/input streams so the
//! whole tool can be driven from tests.

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use mdbs_core::canonical::{minimal_polynomial_of_cycle, MinPolyReport};
use mdbs_core::gamma::{
    all_ones, dot_export, enumerate_hamiltonian, sequence_to_cycle, ExhaustiveGuard, GammaGraph,
    HamCycle, Vertex,
};
use mdbs_core::gf2poly::{build_f, expand_series, PolyFormat};
use mdbs_core::greedy::{distinct_greedy_cycles, greedy_path, hamiltonian_inits, psi_decompose};
use mdbs_core::joiner::{best_count, enumerate_joined_cycles, sample_cycles, JoinEdge};
use mdbs_core::seqkit::{berlekamp_massey, is_de_bruijn, is_modified_de_bruijn, BitSequence};
use mdbs_core::{Preference, VisitOrder};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Core(#[from] mdbs_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Verification(_) => EXIT_VERIFY,
            CliError::Core(
                mdbs_core::Error::GuardRefused { .. } | mdbs_core::Error::TooManyEdges { .. },
            ) => EXIT_GUARD,
            CliError::Core(
                mdbs_core::Error::InvalidOrder { .. } | mdbs_core::Error::VertexOutOfRange { .. },
            ) => EXIT_USAGE,
            _ => EXIT_OTHER,
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Jsonl,
    Csv,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Alg {
    /// Prefer the complement arc.
    Complement,
    /// Prefer the double arc.
    Double,
}

impl From<Alg> for Preference {
    fn from(a: Alg) -> Self {
        match a {
            Alg::Complement => Preference::Complement,
            Alg::Double => Preference::Double,
        }
    }
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(
    name = "mdbs",
    version,
    about = "Modified de Bruijn sequences from Hamiltonian cycles"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each command has its own default.
    #[arg(long, value_enum, global = true)]
    pub format: Option<OutputFormat>,

    /// Largest n for exhaustive work without --override-guard.
    #[arg(long, env = "MDBS_GUARD_CEILING", default_value_t = 6, global = true)]
    pub guard_ceiling: u32,

    /// Allow exhaustive work above the guard ceiling.
    #[arg(long, global = true)]
    pub override_guard: bool,
}

impl RunConfig {
    fn guard(&self) -> ExhaustiveGuard {
        ExhaustiveGuard {
            ceiling: self.guard_ceiling,
            overridden: self.override_guard,
        }
    }
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    /// Seed text for a random visit order.
    #[arg(long, conflicts_with = "order")]
    pub seed: Option<String>,

    /// Visit-order prefix, e.g. 6,4,14; remaining vertices follow in increasing order.
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<Vertex>>,
}

impl OrderArgs {
    fn visit_order(&self, n: u32) -> CliResult<VisitOrder> {
        Ok(match (&self.seed, &self.order) {
            (Some(seed), _) => VisitOrder::Seeded(seed.clone()),
            (None, Some(prefix)) => VisitOrder::from_prefix(n, prefix)?,
            (None, None) => VisitOrder::Natural,
        })
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Cycle as comma-separated vertices.
    #[arg(long, value_delimiter = ',', conflicts_with = "sequence")]
    pub cycle: Option<Vec<Vertex>>,

    /// Binary sequence, e.g. 011110010100011 or (0,1,1,...).
    #[arg(long)]
    pub sequence: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the graph (DOT by default).
    Graph {
        #[arg(long)]
        n: u32,
        /// Cycle whose arcs are drawn bold.
        #[arg(long, value_delimiter = ',')]
        highlight: Option<Vec<Vertex>>,
    },
    /// Run a greedy construction from one start vertex or list every successful start.
    Greedy {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "complement")]
        alg: Alg,
        #[arg(long)]
        v_init: Option<Vertex>,
    },
    /// Split the vertices into prefer-complement cycles.
    Decompose {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Build the join graph of a decomposition and the cycle of every spanning tree.
    Join {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Enumerate Hamiltonian cycles with their minimal polynomials.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Minimal-polynomial report for a cycle or sequence (from flags or stdin).
    Minpoly {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check a sequence or cycle (from flags or stdin).
    Verify {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Reproduce a results table.
    Tables {
        #[arg(long)]
        n: u32,
        /// 1: spans, 2: maximal-span generators, 3: greedy cycles, 4: joined cycles.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
        /// Sample size when the span table cannot be exhaustive.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value = "tables")]
        seed: String,
        /// Visit-order prefix for the joined-cycle table (default 6,4,14 at n=4, natural otherwise).
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<Vertex>>,
    },
}

/// Runs the tool and returns its exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write, input: &mut dyn BufRead) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&config, out, input) {
        Ok(()) => EXIT_OK,
        // The reader went away (e.g. `| head`); nothing left to report.
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "mdbs: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(config: &RunConfig, out: &mut dyn Write, input: &mut dyn BufRead) -> CliResult {
    let fmt = |default| config.format.unwrap_or(default);
    match &config.command {
        Command::Graph { n, highlight } => {
            cmd_graph(*n, highlight.as_deref(), fmt(OutputFormat::Dot), out)
        }
        Command::Greedy { n, alg, v_init } => {
            cmd_greedy(*n, *alg, *v_init, fmt(OutputFormat::Jsonl), out)
        }
        Command::Decompose { n, order } => {
            cmd_decompose(*n, &order.visit_order(*n)?, fmt(OutputFormat::Jsonl), out)
        }
        Command::Join { n, order } => {
            cmd_join(*n, &order.visit_order(*n)?, fmt(OutputFormat::Jsonl), out)
        }
        Command::Enumerate { n, limit } => {
            cmd_enumerate(*n, *limit, config.guard(), fmt(OutputFormat::Jsonl), out)
        }
        Command::Minpoly { n, input: args } => {
            let cycle = read_cycle(*n, args, input)?;
            let report = minimal_polynomial_of_cycle(&cycle)?;
            write_report(&report, fmt(OutputFormat::Jsonl), out)?;
            if !report.is_consistent() {
                return Err(CliError::Verification(
                    "Berlekamp-Massey disagrees with the gcd route".into(),
                ));
            }
            Ok(())
        }
        Command::Verify { n, input: args } => {
            cmd_verify(*n, args, input, fmt(OutputFormat::Jsonl), out)
        }
        Command::Tables {
            n,
            which,
            limit,
            seed,
            order,
        } => {
            let fmt = fmt(OutputFormat::Csv);
            match which {
                1 => table_spans(*n, *limit, seed, config.guard(), fmt, out),
                2 => table_max_span(*n, config.guard(), fmt, out),
                3 => table_greedy(*n, fmt, out),
                _ => {
                    let prefix = match (order, *n) {
                        (Some(p), _) => p.clone(),
                        (None, 4) => vec![6, 4, 14],
                        (None, _) => Vec::new(),
                    };
                    cmd_join(*n, &VisitOrder::from_prefix(*n, &prefix)?, fmt, out)
                }
            }
        }
    }
}

fn join_list<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn unsupported(cmd: &str, fmt: OutputFormat) -> CliError {
    CliError::Usage(format!("{cmd} does not support --format {fmt:?}").to_lowercase())
}

fn cmd_graph(
    n: u32,
    highlight: Option<&[Vertex]>,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CliResult {
    let g = GammaGraph::build(n)?;
    let highlight = highlight
        .map(|h| HamCycle::new(n, h.to_vec()))
        .transpose()?;
    match fmt {
        OutputFormat::Dot => write!(out, "{}", dot_export(&g, highlight.as_ref()))?,
        OutputFormat::Jsonl => {
            for (from, to, kind) in g.arcs() {
                writeln!(
                    out,
                    "{}",
                    json!({"from": from, "to": to, "label": kind.label()})
                )?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "from,to,label")?;
            for (from, to, kind) in g.arcs() {
                writeln!(out, "{from},{to},{}", kind.label())?;
            }
        }
        OutputFormat::Text => {
            for (from, to, kind) in g.arcs() {
                writeln!(out, "{from} -> {to} ({})", kind.label())?;
            }
        }
    }
    Ok(())
}

fn cmd_greedy(
    n: u32,
    alg: Alg,
    v_init: Option<Vertex>,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CliResult {
    let pref = Preference::from(alg);
    let starts: Vec<Vertex> = match v_init {
        Some(v) => vec![v],
        None => hamiltonian_inits(n, pref)?.into_iter().collect(),
    };
    if fmt == OutputFormat::Csv {
        writeln!(out, "v_init,hamiltonian,vertices")?;
    }
    for v in starts {
        let path = greedy_path(n, v, pref)?;
        match fmt {
            OutputFormat::Jsonl => writeln!(out, "{}", serde_json::to_string(&path)?)?,
            OutputFormat::Csv => writeln!(
                out,
                "{},{},{}",
                v,
                path.hamiltonian,
                join_list(&path.vertices, " ")
            )?,
            OutputFormat::Text => writeln!(out, "{}", join_list(&path.vertices, ","))?,
            OutputFormat::Dot => return Err(unsupported("greedy", fmt)),
        }
    }
    Ok(())
}

fn cmd_decompose(n: u32, order: &VisitOrder, fmt: OutputFormat, out: &mut dyn Write) -> CliResult {
    let dec = psi_decompose(n, order)?;
    match fmt {
        OutputFormat::Jsonl => writeln!(out, "{}", serde_json::to_string(&dec)?)?,
        OutputFormat::Text | OutputFormat::Csv => {
            for c in &dec.cycles {
                writeln!(out, "({})", join_list(c, ","))?;
            }
        }
        OutputFormat::Dot => return Err(unsupported("decompose", fmt)),
    }
    Ok(())
}

fn tree_pairs(tree: &[JoinEdge]) -> Vec<[Vertex; 2]> {
    tree.iter().map(|e| [e.r, e.s]).collect()
}

fn cmd_join(n: u32, order: &VisitOrder, fmt: OutputFormat, out: &mut dyn Write) -> CliResult {
    let dec = psi_decompose(n, order)?;
    let joined = enumerate_joined_cycles(&dec)?;
    let count = best_count(&joined.graph);
    let mut verified = true;
    match fmt {
        OutputFormat::Jsonl => {
            writeln!(
                out,
                "{}",
                json!({
                    "n": n,
                    "cycles": dec.cycles,
                    "edges": joined.graph.edges.iter().map(|e| [e.i, e.k, e.r as usize, e.s as usize]).collect::<Vec<_>>(),
                    "best_count": count.to_string(),
                    "connected": joined.graph.is_connected(),
                    "distinct": joined.distinct,
                })
            )?;
        }
        OutputFormat::Text => {
            writeln!(out, "cycles: {}", dec.cycles.len())?;
            for e in &joined.graph.edges {
                writeln!(out, "edge C{}-C{}: ({},{})", e.i + 1, e.k + 1, e.r, e.s)?;
            }
            writeln!(out, "spanning trees: {count}")?;
            writeln!(out, "distinct cycles: {}", joined.distinct)?;
        }
        OutputFormat::Csv => writeln!(out, "tree_edges,vertices,sequence,min_poly")?,
        OutputFormat::Dot => return Err(unsupported("join", fmt)),
    }
    for j in &joined.per_tree {
        let report = minimal_polynomial_of_cycle(&j.cycle)?;
        verified &= report.is_consistent();
        let pairs = tree_pairs(&j.tree);
        match fmt {
            OutputFormat::Jsonl => writeln!(
                out,
                "{}",
                json!({
                    "tree_edges": pairs,
                    "vertices": j.cycle.vertices(),
                    "sequence": report.sequence,
                    "min_poly": report.f.to_string(),
                })
            )?,
            OutputFormat::Csv | OutputFormat::Text => {
                let sep = if fmt == OutputFormat::Csv { "," } else { "  " };
                let tree = pairs
                    .iter()
                    .map(|[r, s]| format!("({r} {s})"))
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(
                    out,
                    "{tree}{sep}{}{sep}{}{sep}{}",
                    join_list(j.cycle.vertices(), " "),
                    report.sequence,
                    report.f
                )?
            }
            OutputFormat::Dot => unreachable!("rejected above"),
        }
    }
    if !joined.graph.is_connected() {
        return Err(CliError::Verification(
            "join graph is disconnected; no spanning trees".into(),
        ));
    }
    if !verified {
        return Err(CliError::Verification(
            "a joined cycle failed the oracle check".into(),
        ));
    }
    Ok(())
}

const REPORT_HEADER: &str = "vertices,sequence,c_h,d,f,f_star,span,bm_check";

fn write_report(r: &MinPolyReport, fmt: OutputFormat, out: &mut dyn Write) -> CliResult {
    match fmt {
        OutputFormat::Jsonl => writeln!(out, "{}", serde_json::to_string(r)?)?,
        OutputFormat::Csv => writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            join_list(&r.vertices, " "),
            r.sequence,
            r.c_h,
            r.d,
            r.f,
            r.f_star,
            r.span,
            r.bm_check
        )?,
        OutputFormat::Text => {
            writeln!(out, "cycle = ({})", join_list(&r.vertices, ","))?;
            writeln!(out, "sequence = {}", r.sequence)?;
            writeln!(out, "c_h = {}", r.c_h)?;
            writeln!(out, "d = {}", r.d)?;
            writeln!(out, "f = {}", r.f)?;
            writeln!(out, "f* = {}", r.f_star)?;
            writeln!(out, "span = {}", r.span)?;
            writeln!(out, "bm = {}", r.bm_check)?;
        }
        OutputFormat::Dot => return Err(unsupported("minpoly", fmt)),
    }
    Ok(())
}

fn cmd_enumerate(
    n: u32,
    limit: Option<usize>,
    guard: ExhaustiveGuard,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CliResult {
    if fmt == OutputFormat::Csv {
        writeln!(out, "{REPORT_HEADER}")?;
    }
    let mut failures = 0;
    for h in enumerate_hamiltonian(n, limit, guard)? {
        let report = minimal_polynomial_of_cycle(&h)?;
        failures += usize::from(!report.is_consistent());
        write_report(&report, fmt, out)?;
    }
    if failures > 0 {
        return Err(CliError::Verification(format!(
            "{failures} cycles failed the oracle check"
        )));
    }
    Ok(())
}

/// Input text from flags or stdin. Tokens that are all 0/1 read as a
/// sequence, anything else as a cycle.
enum Parsed {
    Cycle(Vec<Vertex>),
    Sequence(BitSequence),
}

fn read_input(args: &InputArgs, input: &mut dyn BufRead) -> CliResult<Parsed> {
    if let Some(c) = &args.cycle {
        return Ok(Parsed::Cycle(c.clone()));
    }
    if let Some(s) = &args.sequence {
        return Ok(Parsed::Sequence(s.parse()?));
    }
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let text = text.trim();
    if text.is_empty() {
        return Err(CliError::Usage(
            "give --cycle, --sequence or data on stdin".into(),
        ));
    }
    let tokens: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace() || c == '(' || c == ')')
        .filter(|t| !t.is_empty())
        .collect();
    if tokens
        .iter()
        .all(|t| t.chars().all(|c| c == '0' || c == '1'))
    {
        return Ok(Parsed::Sequence(tokens.concat().parse()?));
    }
    let cycle = tokens
        .iter()
        .map(|t| {
            t.parse::<Vertex>()
                .map_err(|_| CliError::Usage(format!("bad vertex {t:?}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Parsed::Cycle(cycle))
}

fn read_cycle(n: u32, args: &InputArgs, input: &mut dyn BufRead) -> CliResult<HamCycle> {
    match read_input(args, input)? {
        Parsed::Cycle(v) => Ok(HamCycle::new(n, v)?),
        Parsed::Sequence(s) => sequence_to_cycle(&s, n).map_err(|e| {
            CliError::Verification(format!(
                "not a modified de Bruijn sequence of order {n}: {e}"
            ))
        }),
    }
}

fn cmd_verify(
    n: u32,
    args: &InputArgs,
    input: &mut dyn BufRead,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CliResult {
    let (record, ok) = match read_input(args, input)? {
        Parsed::Sequence(s) => {
            let bm = berlekamp_massey(&s);
            let de_bruijn = is_de_bruijn(&s, n);
            let modified = is_modified_de_bruijn(&s, n);
            let record = json!({
                "kind": "sequence",
                "n": n,
                "period": s.period(),
                "de_bruijn": de_bruijn,
                "modified_de_bruijn": modified,
                "linear_complexity": bm.linear_complexity,
                "minimal_polynomial": bm.minimal_polynomial.to_string(),
            });
            (record, de_bruijn || modified)
        }
        Parsed::Cycle(v) => match HamCycle::new(n, v) {
            Ok(h) => {
                let r = minimal_polynomial_of_cycle(&h)?;
                let modified = is_modified_de_bruijn(&r.sequence.parse()?, n);
                let record = json!({
                    "kind": "cycle",
                    "n": n,
                    "hamiltonian": true,
                    "modified_de_bruijn": modified,
                    "span": r.span,
                    "oracle_agrees": r.is_consistent(),
                });
                (record, modified && r.is_consistent())
            }
            Err(e) => (
                json!({"kind": "cycle", "n": n, "hamiltonian": false, "reason": e.to_string()}),
                false,
            ),
        },
    };
    match fmt {
        OutputFormat::Jsonl => writeln!(out, "{record}")?,
        OutputFormat::Text | OutputFormat::Csv => {
            if let Some(obj) = record.as_object() {
                for (k, v) in obj {
                    writeln!(
                        out,
                        "{k} = {}",
                        v.as_str()
                            .map(str::to_string)
                            .unwrap_or_else(|| v.to_string())
                    )?;
                }
            }
        }
        OutputFormat::Dot => return Err(unsupported("verify", fmt)),
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::Verification(
            "input is not a valid order-n object".into(),
        ))
    }
}

/// Exhaustive at n <= 5 (or with the guard overridden); otherwise sampled.
fn table_spans(
    n: u32,
    limit: Option<usize>,
    seed: &str,
    guard: ExhaustiveGuard,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CliResult {
    let exhaustive = n <= 5 || (guard.overridden && limit.is_none());
    let cycles: Vec<HamCycle> = if exhaustive {
        enumerate_hamiltonian(n, None, guard)?.collect()
    } else {
        let want = limit.unwrap_or(1000);
        sample_cycles(n, want, seed, want.saturating_mul(100))?
    };
    let mut spans = std::collections::BTreeMap::new();
    for h in &cycles {
        *spans
            .entry(minimal_polynomial_of_cycle(h)?.span)
            .or_insert(0usize) += 1;
    }
    match fmt {
        OutputFormat::Csv | OutputFormat::Text => writeln!(
            out,
            "{}",
            join_list(&spans.keys().copied().collect::<Vec<_>>(), ",")
        )?,
        OutputFormat::Jsonl => writeln!(
            out,
            "{}",
            json!({
                "n": n,
                "exhaustive": exhaustive,
                "cycles": cycles.len(),
                "spans": spans.iter().map(|(s, c)| json!({"span": s, "count": c})).collect::<Vec<_>>(),
            })
        )?,
        OutputFormat::Dot => return Err(unsupported("tables", fmt)),
    }
    Ok(())
}

fn table_max_span(
    n: u32,
    guard: ExhaustiveGuard,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CliResult {
    let f = build_f(n)?;
    let len = all_ones(n) as usize;
    if fmt == OutputFormat::Csv {
        writeln!(out, "g,sequence")?;
    }
    let mut rows = Vec::new();
    for h in enumerate_hamiltonian(n, None, guard)? {
        let r = minimal_polynomial_of_cycle(&h)?;
        if r.span == len - 1 {
            let seq = expand_series(&r.c_h, &f, len)?;
            rows.push((
                r.c_h.format(PolyFormat::Binary),
                seq.to_compact_string(),
                r.c_h,
            ));
        }
    }
    rows.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    for (g, seq, poly) in rows {
        match fmt {
            OutputFormat::Csv | OutputFormat::Text => writeln!(out, "{g},{seq}")?,
            OutputFormat::Jsonl => writeln!(
                out,
                "{}",
                json!({"g": poly.to_string(), "g_binary": g, "sequence": seq})
            )?,
            OutputFormat::Dot => return Err(unsupported("tables", fmt)),
        }
    }
    Ok(())
}

fn table_greedy(n: u32, fmt: OutputFormat, out: &mut dyn Write) -> CliResult {
    if fmt == OutputFormat::Csv {
        writeln!(out, "alg,v_init,cycle")?;
    }
    for alg in [Alg::Complement, Alg::Double] {
        let pref = Preference::from(alg);
        let inits = hamiltonian_inits(n, pref)?;
        for cycle in distinct_greedy_cycles(n, pref)? {
            let starts: Vec<Vertex> = inits
                .iter()
                .copied()
                .filter(|&v| {
                    greedy_path(n, v, pref)
                        .ok()
                        .and_then(|p| p.into_cycle())
                        .as_ref()
                        == Some(&cycle)
                })
                .collect();
            let listed = cycle.rotated_to(starts[0]).unwrap_or(cycle);
            let name = format!("{alg:?}").to_lowercase();
            match fmt {
                OutputFormat::Csv => writeln!(
                    out,
                    "{name},{},{}",
                    join_list(&starts, " "),
                    join_list(listed.vertices(), " ")
                )?,
                OutputFormat::Text => writeln!(
                    out,
                    "{name} [{}] ({})",
                    join_list(&starts, ","),
                    join_list(listed.vertices(), ",")
                )?,
                OutputFormat::Jsonl => writeln!(
                    out,
                    "{}",
                    json!({"alg": name, "v_init": starts, "vertices": listed.vertices()})
                )?,
                OutputFormat::Dot => return Err(unsupported("tables", fmt)),
            }
        }
    }
    Ok(())
}
