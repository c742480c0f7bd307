//! The `zeroblock` command line: generate graphs, compute zero blocking
//! numbers, check forts, verify the hypercube and reduction results.
//!
//! Every command prints one JSON object on standard out. Exit codes are 0 on
//! success, 1 on domain errors and 2 on usage errors.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use zeroblock_core::exact;
use zeroblock_core::forcing::{classify, closure, is_fort, is_v_fort, SetClass};
use zeroblock_core::formulas::{
    b_closed_form, b_join, compute_a, recognize_closed_family, solve_auto, ClosedFamily, JoinInputs, Method,
};
use zeroblock_core::graph::{generate, random_tree};
use zeroblock_core::hypercube::{confirm_value, neighborhood_fort, verify_characterization};
use zeroblock_core::reduction::{build_reduction, verify_reduction, Manifest, ReductionReport, Variant};
use zeroblock_core::rng::SplitMix64;
use zeroblock_core::tree_dp::zbs_tree;
use zeroblock_core::{ExtendedCount, Family, Graph, VertexSet};

#[derive(Parser, Debug)]
#[command(
    name = "zeroblock",
    version,
    about = "Zero blocking numbers (minimum forts) of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Add `elapsed_ms` to the output.
    #[arg(long, global = true)]
    timing: bool,
    /// Worker threads for exhaustive searches (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph from a named family.
    Gen(GenArgs),
    /// Compute the zero blocking number.
    Solve(SolveArgs),
    /// Test whether a white set is a fort and classify its black complement.
    Check(CheckArgs),
    /// List every minimum fort.
    Enumerate(EnumerateArgs),
    /// Minimum forts of the hypercube Q_n.
    Hypercube(HypercubeArgs),
    /// Build the vertex cover gadget graph.
    Reduce(ReduceArgs),
    /// Time the tree program on paths and random trees.
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyName {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    Wheel,
    Fan,
    Cone,
    Hypercube,
    RandomTree,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Size parameter: vertices, star leaves, rim length or cube dimension.
    #[arg(long)]
    n: Option<usize>,
    /// Apex count for fans and cones.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Seed for random trees.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Edge-list file.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Also write the edge list here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SolveMethod {
    Auto,
    Brute,
    TreeDp,
    Formula,
    Join,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "auto")]
    method: SolveMethod,
    /// Root for the tree program.
    #[arg(long)]
    root: Option<usize>,
    /// Second operand `H` of the join `G + H`.
    #[arg(long)]
    join_with: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated white vertices, e.g. `1,3`.
    #[arg(long, allow_hyphen_values = true)]
    white: String,
    /// Also test whether the white set is a v-fort for this vertex.
    #[arg(long)]
    root: Option<usize>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args, Debug)]
struct HypercubeArgs {
    #[arg(long)]
    dim: usize,
    /// Verify the value by exhaustive search.
    #[arg(long)]
    verify: bool,
    /// With `--verify` and dimension 5, enumerate every minimum fort instead
    /// of refuting smaller forts.
    #[arg(long)]
    full: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum VariantArg {
    Bipartite,
    Chordal,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Bipartite => Variant::Bipartite,
            VariantArg::Chordal => Variant::Chordal,
        }
    }
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "bipartite")]
    variant: VariantArg,
    /// Write the edge list of G' here instead of embedding it in the output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write the manifest (special vertex, gadget ranges, vertex maps) here.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Check B(G') = tau(G) + 1 for both variants (n <= 6).
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Largest path is 10^max_exp vertices.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(3..=7))]
    max_exp: u32,
    /// Random trees per size.
    #[arg(long, default_value_t = 2)]
    trees: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// An error in how the command was invoked, reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

#[derive(Serialize)]
struct Output<T: Serialize> {
    n: usize,
    method: &'static str,
    value: Option<ExtendedCount>,
    witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
    #[serde(flatten)]
    extra: T,
}

#[derive(Serialize)]
struct Nothing {}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Isolated => "isolated",
        Method::Twins => "twins",
        Method::Formula => "formula",
        Method::Component => "component",
        Method::TreeDp => "tree_dp",
        Method::Cograph => "cograph",
        Method::Join => "join",
        Method::Brute => "brute",
    }
}

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return e.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok(json) => {
            let _ = writeln!(out, "{json}");
            0
        }
        Err(e) if e.downcast_ref::<Usage>().is_some() => {
            let _ = writeln!(err, "usage error: {e}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn dispatch(cli: &Cli) -> Result<String> {
    match cli.threads {
        Some(0) => usage("--threads must be positive"),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .context("starting thread pool")?
            .install(|| execute(cli)),
        None => execute(cli),
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let start = Instant::now();
    let timing = cli.timing;
    let stamp = |out: &mut Option<f64>| {
        if timing {
            *out = Some(ms(start));
        }
    };
    macro_rules! emit {
        ($o:expr) => {{
            let mut o = $o;
            stamp(&mut o.elapsed_ms);
            Ok(serde_json::to_string(&o)?)
        }};
    }
    match &cli.command {
        Command::Gen(a) => emit!(gen(a)?),
        Command::Solve(a) => match a.method {
            SolveMethod::Join => emit!(solve_join(a)?),
            _ => emit!(solve(a)?),
        },
        Command::Check(a) => emit!(check(a)?),
        Command::Enumerate(a) => emit!(enumerate(a)?),
        Command::Hypercube(a) => hypercube(a, |o| emit!(o)),
        Command::Reduce(a) => emit!(reduce(a)?),
        Command::Bench(a) => emit!(bench(a)?),
    }
}

fn family_of(args: &FamilyArgs) -> Result<Option<Family>> {
    let Some(name) = args.family else {
        return Ok(None);
    };
    let Some(n) = args.n else {
        return usage("--family needs --n");
    };
    let m = args.m;
    Ok(Some(match name {
        FamilyName::Path => Family::Path(n),
        FamilyName::Cycle => Family::Cycle(n),
        FamilyName::Complete => Family::Complete(n),
        FamilyName::Empty => Family::Empty(n),
        FamilyName::Star => Family::Star(n),
        FamilyName::Wheel => Family::Wheel(n),
        FamilyName::Fan => Family::Fan { m, n },
        FamilyName::Cone => Family::Cone { m, n },
        FamilyName::Hypercube => Family::Hypercube(n),
        FamilyName::RandomTree => Family::RandomTree { n, seed: args.seed },
    }))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load(input: &InputArgs) -> Result<Graph> {
    if let Some(path) = &input.input {
        return read_graph(path);
    }
    match family_of(&input.family)? {
        Some(f) => Ok(generate(f)?),
        None => usage("provide --input FILE or --family NAME --n N"),
    }
}

#[derive(Serialize)]
struct GenExtra {
    family: FamilyName,
    edge_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<String>,
    edges: Vec<(usize, usize)>,
}

fn gen(a: &GenArgs) -> Result<Output<GenExtra>> {
    let Some(family) = family_of(&a.family)? else {
        return usage("gen needs --family");
    };
    let g = generate(family)?;
    if let Some(path) = &a.output {
        fs::write(path, g.to_edge_list_string()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Output {
        n: g.n(),
        method: "generate",
        value: None,
        witness: None,
        elapsed_ms: None,
        extra: GenExtra {
            family: a.family.family.expect("checked above"),
            edge_count: g.edge_count(),
            output: a.output.as_ref().map(|p| p.display().to_string()),
            edges: g.edges(),
        },
    })
}

/// Closed-form family named on the command line, with its vertex count.
fn closed_family_of(args: &FamilyArgs) -> Result<Option<(ClosedFamily, usize)>> {
    let (Some(name), Some(n)) = (args.family, args.n) else {
        return Ok(None);
    };
    let (m, k) = (args.m as u64, n as u64);
    let order = |v: Option<usize>| v.ok_or_else(|| anyhow::anyhow!("vertex count overflows"));
    Ok(Some(match name {
        FamilyName::Path => (ClosedFamily::Path(k), n),
        FamilyName::Cycle => (ClosedFamily::Cycle(k), n),
        FamilyName::Wheel => (ClosedFamily::Wheel(k), order(n.checked_add(1))?),
        FamilyName::Fan => (ClosedFamily::Fan { m, n: k }, order(n.checked_add(args.m))?),
        FamilyName::Cone => (ClosedFamily::Cone { m, n: k }, order(n.checked_add(args.m))?),
        FamilyName::Hypercube => (
            ClosedFamily::Hypercube(k),
            order(u32::try_from(n).ok().and_then(|d| 1usize.checked_shl(d)))?,
        ),
        _ => return Ok(None),
    }))
}

fn solve(a: &SolveArgs) -> Result<Output<Nothing>> {
    if a.join_with.is_some() {
        return usage("--join-with needs --method join");
    }
    if a.root.is_some() && a.method != SolveMethod::TreeDp {
        return usage("--root needs --method tree-dp");
    }
    let (n, method, value, witness) = match a.method {
        SolveMethod::Formula => {
            let named = if a.input.input.is_none() {
                closed_family_of(&a.input.family)?
            } else {
                None
            };
            let (family, n) = match named {
                Some(found) => found,
                None => {
                    let g = load(&a.input)?;
                    let f = recognize_closed_family(&g)
                        .ok_or_else(|| anyhow::anyhow!("no closed form applies to this graph"))?;
                    (f, g.n())
                }
            };
            (n, Method::Formula, b_closed_form(family)?, None)
        }
        SolveMethod::TreeDp => {
            let g = load(&a.input)?;
            let sol = zbs_tree(&g, a.root)?;
            (g.n(), Method::TreeDp, sol.value, Some(sol.witness))
        }
        SolveMethod::Brute => {
            let g = load(&a.input)?;
            let r = exact::min_fort(&g, None)?;
            (g.n(), Method::Brute, r.size, r.witness)
        }
        SolveMethod::Auto => {
            let g = load(&a.input)?;
            let r = solve_auto(&g)?;
            (g.n(), r.method, r.value, r.witness)
        }
        SolveMethod::Join => unreachable!("handled by solve_join"),
    };
    Ok(Output {
        n,
        method: method_name(method),
        value: Some(value),
        witness,
        elapsed_ms: None,
        extra: Nothing {},
    })
}

#[derive(Serialize)]
struct JoinExtra {
    join: JoinInputs,
    a: u64,
}

fn solve_join(a: &SolveArgs) -> Result<Output<JoinExtra>> {
    let Some(other) = &a.join_with else {
        return usage("--method join needs --join-with FILE");
    };
    if a.root.is_some() {
        return usage("--root needs --method tree-dp");
    }
    let g = load(&a.input)?;
    let h = read_graph(other)?;
    let inputs = JoinInputs::from_graphs(&g, &h)?;
    Ok(Output {
        n: g.n() + h.n(),
        method: method_name(Method::Join),
        value: Some(b_join(&inputs)?),
        witness: None,
        elapsed_ms: None,
        extra: JoinExtra {
            a: compute_a(&inputs),
            join: inputs,
        },
    })
}

fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().or_else(|_| usage(format!("`{s}` is not a vertex index"))))
        .collect()
}

#[derive(Serialize)]
struct CheckExtra {
    is_fort: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    is_v_fort: Option<bool>,
    classification: SetClass,
    closure: VertexSet,
    forcing_steps: Vec<(usize, usize)>,
}

fn check(a: &CheckArgs) -> Result<Output<CheckExtra>> {
    let g = load(&a.input)?;
    let white = VertexSet::from_vertices(g.n(), parse_vertex_list(&a.white)?)?;
    if let Some(v) = a.root.filter(|&v| v >= g.n()) {
        anyhow::bail!("vertex {v} out of range for n = {}", g.n());
    }
    let black = white.complement();
    let (fin, trace) = closure(&g, &black);
    Ok(Output {
        n: g.n(),
        method: "check",
        value: Some(ExtendedCount::from(white.len())),
        elapsed_ms: None,
        extra: CheckExtra {
            is_fort: is_fort(&g, &white),
            is_v_fort: a.root.map(|v| is_v_fort(&g, &white, v)),
            classification: classify(&g, &black),
            closure: fin,
            forcing_steps: trace.steps,
        },
        witness: Some(white),
    })
}

#[derive(Serialize)]
struct EnumerateExtra {
    count: usize,
    forts: Vec<VertexSet>,
}

fn enumerate(a: &EnumerateArgs) -> Result<Output<EnumerateExtra>> {
    let g = load(&a.input)?;
    let forts = exact::enumerate_min_forts(&g)?;
    let value = forts
        .first()
        .map_or(ExtendedCount::Infinite, |w| ExtendedCount::from(w.len()));
    Ok(Output {
        n: g.n(),
        method: method_name(Method::Brute),
        value: Some(value),
        witness: forts.first().cloned(),
        elapsed_ms: None,
        extra: EnumerateExtra {
            count: forts.len(),
            forts,
        },
    })
}

#[derive(Serialize)]
struct Dimension {
    dimension: usize,
}

fn hypercube(a: &HypercubeArgs, emit: impl Fn(Output<serde_json::Value>) -> Result<String>) -> Result<String> {
    let d = a.dim;
    if !(2..=30).contains(&d) {
        anyhow::bail!("dimension {d} outside 2..=30");
    }
    if a.full && !a.verify {
        return usage("--full needs --verify");
    }
    let n = 1usize << d;
    let out = |method, value: usize, witness, extra: serde_json::Value| Output {
        n,
        method,
        value: Some(ExtendedCount::from(value)),
        witness: Some(witness),
        elapsed_ms: None,
        extra,
    };
    if !a.verify {
        let value = b_closed_form(ClosedFamily::Hypercube(d as u64))?
            .finite()
            .expect("finite") as usize;
        let extra = serde_json::to_value(Dimension { dimension: d })?;
        return emit(out("formula", value, neighborhood_fort(d, 0)?, extra));
    }
    if d <= 4 || a.full {
        let r = verify_characterization(d, a.full)?;
        let witness = r.min_forts.first().cloned().context("no minimum fort found")?;
        return emit(out("enumeration", r.b, witness, serde_json::to_value(&r)?));
    }
    let r = confirm_value(d)?;
    if !(r.no_smaller_fort && r.witness_is_fort) {
        anyhow::bail!("could not confirm B(Q_{d}) = {d}");
    }
    let mut extra = serde_json::to_value(&r)?;
    if let Some(map) = extra.as_object_mut() {
        map.remove("witness");
    }
    emit(out("bounded_refutation", d, r.witness, extra))
}

#[derive(Serialize)]
struct ReduceExtra {
    variant: Variant,
    original_n: usize,
    original_m: usize,
    edge_count: usize,
    s: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    manifest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<ReductionReport>,
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn reduce(a: &ReduceArgs) -> Result<Output<ReduceExtra>> {
    let g = load(&a.input)?;
    let variant = Variant::from(a.variant);
    let inst = build_reduction(&g, variant)?;
    if let Some(path) = &a.output {
        fs::write(path, inst.gprime.to_edge_list_string()).with_context(|| format!("writing {}", path.display()))?;
    }
    let manifest: Manifest = inst.manifest();
    if let Some(path) = &a.manifest {
        write_json(path, &manifest)?;
    }
    let report = if a.verify { Some(verify_reduction(&g)?) } else { None };
    let checked = report
        .as_ref()
        .and_then(|r| r.variants.iter().find(|v| v.variant == variant));
    Ok(Output {
        n: inst.gprime.n(),
        method: "reduction",
        value: checked.map(|v| v.b_gprime),
        witness: checked.map(|v| v.lifted_fort.clone()),
        elapsed_ms: None,
        extra: ReduceExtra {
            variant,
            original_n: g.n(),
            original_m: g.edge_count(),
            edge_count: inst.gprime.edge_count(),
            s: inst.s,
            output: a.output.as_ref().map(|p| p.display().to_string()),
            edges: a.output.is_none().then(|| inst.gprime.edges()),
            manifest: a.manifest.as_ref().map(|p| p.display().to_string()),
            verify: report,
        },
    })
}

#[derive(Serialize)]
struct BenchRow {
    family: &'static str,
    n: usize,
    value: ExtendedCount,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct BenchExtra {
    rows: Vec<BenchRow>,
}

fn bench(a: &BenchArgs) -> Result<Output<BenchExtra>> {
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut rng = SplitMix64::new(a.seed);
    let mut largest = 0;
    for e in 3..=a.max_exp {
        let n = 10usize.pow(e);
        largest = n;
        let path = generate(Family::Path(n))?;
        let t = Instant::now();
        let sol = zbs_tree(&path, None)?;
        rows.push(BenchRow {
            family: "path",
            n,
            value: sol.value,
            elapsed_ms: ms(t),
        });
        for _ in 0..a.trees {
            let tree = random_tree(n, rng.next_u64());
            let t = Instant::now();
            let sol = zbs_tree(&tree, None)?;
            rows.push(BenchRow {
                family: "random_tree",
                n,
                value: sol.value,
                elapsed_ms: ms(t),
            });
        }
    }
    Ok(Output {
        n: largest,
        method: method_name(Method::TreeDp),
        value: None,
        witness: None,
        elapsed_ms: Some(ms(start)),
        extra: BenchExtra { rows },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("1,3").unwrap(), vec![1, 3]);
        assert_eq!(parse_vertex_list(" 0 , 2,").unwrap(), vec![0, 2]);
        assert!(parse_vertex_list("").unwrap().is_empty());
        let e = parse_vertex_list("1,x").unwrap_err();
        assert!(e.downcast_ref::<Usage>().is_some());
    }

    #[test]
    fn closed_family_orders() {
        let args = |family, n, m| FamilyArgs {
            family: Some(family),
            n: Some(n),
            m,
            seed: 0,
        };
        assert_eq!(closed_family_of(&args(FamilyName::Wheel, 9, 1)).unwrap().unwrap().1, 10);
        assert_eq!(closed_family_of(&args(FamilyName::Cone, 5, 3)).unwrap().unwrap().1, 8);
        assert_eq!(
            closed_family_of(&args(FamilyName::Hypercube, 5, 1)).unwrap().unwrap().1,
            32
        );
        assert!(closed_family_of(&args(FamilyName::Star, 5, 1)).unwrap().is_none());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
