//! `bdom`: command-line front end for (t,r) broadcast domination on the
//! supported graph families.
//!
//! Exit codes: 0 ok, 1 usage or invalid input, 2 verification failure,
//! 3 formula/oracle mismatch.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use broadcast_domination::audit::{self, AuditOptions, ComparisonRow, Status, Suite};
use broadcast_domination::closed_forms::{self, Block3dShape, BlockDims, GammaResult, SLANT_TABLE};
use broadcast_domination::constructors::{self, LatticeKind, LatticePattern, PlacementPlan, VERSION};
use broadcast_domination::render::{self, RenderOptions};
use broadcast_domination::{
    naive_enumerate, solve, verify, Error, GraphFamily, GraphInstance, SolverConfig, TowerSet, VertexId,
};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "bdom", version, about = "(t,r) broadcast domination toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed form or bound for a graph.
    Gamma(GammaArgs),
    /// Emit the explicit tower layout as a placement plan.
    Construct(ConstructArgs),
    /// Check a tower set (plan JSON or flags) against a reception requirement.
    Verify(VerifyArgs),
    /// Run the exact solver.
    Exact(ExactArgs),
    /// Export an infinite lattice pattern and check it on a finite window.
    Lattice(LatticeArgs),
    /// Print slant upper-bound table values.
    Table(TableArgs),
    /// Draw reception values with towers marked `T`.
    Render(RenderArgs),
    /// Compare formulas against the exact solver over a parameter sweep.
    Audit(AuditArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// path, cycle, grid, grid3d, slant, king or tree
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Tree edges as JSON, e.g. '[[1,2],[2,3]]'
    #[arg(long)]
    edges: Option<String>,
    /// Full graph spec as JSON, e.g. '{"family":"grid","m":3,"n":5}'
    #[arg(long, conflicts_with = "family")]
    graph: Option<String>,
}

#[derive(Args)]
struct GammaArgs {
    #[command(flatten)]
    fam: FamilyArgs,
    #[arg(long)]
    t: u32,
    #[arg(long)]
    r: u32,
    /// 3D starting block used for the bound: 2x2, 3xN or 3x3
    #[arg(long)]
    block: Option<String>,
    /// Path decomposition for trees as JSON, e.g. '[[1,2,3],[2,4]]'
    #[arg(long)]
    decomposition: Option<String>,
    /// Also run the exact solver and report a comparison row
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    fam: FamilyArgs,
    #[arg(long)]
    t: u32,
    #[arg(long)]
    r: u32,
    /// Grid: emit only the two-tower starting block with `m` rows
    #[arg(long)]
    starting_block: bool,
    /// Grid3d: tile the box with this starting block (2x2, 3xN, 3x3);
    /// without it the box itself is treated as a block
    #[arg(long)]
    block: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Plan JSON file (as written by `construct --json`), or '-' for stdin
    #[arg(long)]
    input: Option<String>,
    #[command(flatten)]
    fam: FamilyArgs,
    /// Towers as JSON, e.g. '[[1,1],[2,3]]'
    #[arg(long)]
    towers: Option<String>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    /// Exit with status 2 unless the set dominates
    #[arg(long)]
    require_dominated: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    fam: FamilyArgs,
    #[arg(long)]
    t: u32,
    #[arg(long)]
    r: u32,
    /// Use the plain subset scan (at most 16 vertices)
    #[arg(long)]
    naive: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    max_cardinality: Option<u32>,
    /// Return the first witness found instead of the lexicographically least
    #[arg(long)]
    any_witness: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LatticeArgs {
    /// king-t1, king-t2 or triangular
    #[arg(long)]
    kind: String,
    #[arg(long)]
    t: u32,
    #[arg(long)]
    r: u32,
    /// Window halfwidth; defaults to 4t
    #[arg(long)]
    halfwidth: Option<u32>,
    /// Export towers for index pairs with |x|, |y| <= range
    #[arg(long, default_value_t = 2)]
    range: i64,
    #[arg(long)]
    require_dominated: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Only `slant` is available
    #[arg(long, default_value = "slant")]
    preset: String,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, default_value_t = 1)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Sweep p up to this value
    #[arg(long)]
    p_max: Option<u32>,
    /// Sweep q up to this value
    #[arg(long)]
    q_max: Option<u32>,
    /// Row remainder l (m = a p + l)
    #[arg(long, default_value_t = 0)]
    l: u32,
    /// Column remainder k (n = b q + k)
    #[arg(long, default_value_t = 0)]
    k: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Plan JSON file, or '-' for stdin
    #[arg(long)]
    input: Option<String>,
    #[command(flatten)]
    fam: FamilyArgs,
    #[arg(long)]
    towers: Option<String>,
    #[arg(long)]
    t: Option<u32>,
    /// First column drawn
    #[arg(long, default_value_t = 1)]
    col_start: u32,
    /// Columns drawn (at most 60)
    #[arg(long, default_value_t = render::MAX_COLUMNS)]
    width: u32,
    /// Show reception digits at towers too, instead of `T`
    #[arg(long)]
    digits: bool,
}

#[derive(Args)]
struct AuditArgs {
    /// paths, cycles, grids, grid3d, king, slant or all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    t_max: Option<u32>,
    /// Oracle vertex limit
    #[arg(long, default_value_t = 30)]
    max_vertices: usize,
    /// Run the oracle on every instance regardless of size
    #[arg(long)]
    allow_large: bool,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
}

/// Failure that maps to an exit code.
enum Fail {
    Usage(String),
    Verify(String),
    Mismatch(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Out = Result<(), Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

fn parse_json<T: for<'de> Deserialize<'de>>(what: &str, text: &str) -> Result<T, Fail> {
    serde_json::from_str(text).map_err(|e| usage(format!("bad {what} JSON: {e}")))
}

fn read_input(path: &str) -> Result<String, Fail> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn envelope<T: Serialize>(command: &str, params: serde_json::Value, result: &T) -> serde_json::Value {
    json!({ "command": command, "version": VERSION, "params": params, "result": result })
}

impl FamilyArgs {
    fn family(&self) -> Result<GraphFamily, Fail> {
        if let Some(spec) = &self.graph {
            return parse_json("graph", spec);
        }
        let name = self.family.as_deref().ok_or_else(|| usage("give --family or --graph"))?;
        let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| usage(format!("--family {name} needs --{flag}")));
        Ok(match name {
            "path" => GraphFamily::Path { n: need(self.n, "n")? },
            "cycle" => GraphFamily::Cycle { n: need(self.n, "n")? },
            "grid" => GraphFamily::Grid { m: need(self.m, "m")?, n: need(self.n, "n")? },
            "grid3d" => GraphFamily::Grid3d { m: need(self.m, "m")?, n: need(self.n, "n")?, k: need(self.k, "k")? },
            "slant" => GraphFamily::Slant { m: need(self.m, "m")?, n: need(self.n, "n")? },
            "king" => GraphFamily::King { m: need(self.m, "m")?, n: need(self.n, "n")? },
            "tree" => {
                let edges = self.edges.as_deref().ok_or_else(|| usage("--family tree needs --edges"))?;
                GraphFamily::Tree { edges: parse_json("edges", edges)? }
            }
            other => return Err(usage(format!("unknown family {other:?}"))),
        })
    }
}

fn block_shape(s: Option<&str>) -> Result<Block3dShape, Fail> {
    Ok(s.unwrap_or("2x2").parse()?)
}

fn gamma_for(args: &GammaArgs, fam: &GraphFamily) -> Result<GammaResult, Fail> {
    let (t, r) = (args.t, args.r);
    Ok(match *fam {
        GraphFamily::Path { n } => closed_forms::path_gamma(n, t, r)?,
        GraphFamily::Cycle { n } => closed_forms::cycle_upper_bound(n, t, r)?,
        GraphFamily::Grid { m, n } => closed_forms::grid_gamma(m, n, t, r)?,
        GraphFamily::Grid3d { m: 2, n: 2, k } if (t, r) == (2, 1) && args.block.is_none() => {
            closed_forms::grid3d_2_2_k_gamma(k, t, r)?
        }
        GraphFamily::Grid3d { m, n, k } => {
            let block = closed_forms::block3d_dims(block_shape(args.block.as_deref())?, t, r)?;
            closed_forms::grid3d_upper_bound(m, n, k, t, r, &block)?
        }
        GraphFamily::King { m, n } => closed_forms::king_gamma(m, n, t, r)?,
        GraphFamily::Slant { m: 2, n } => closed_forms::slant_gamma_2xn(n, t, r)?,
        GraphFamily::Slant { m, n } => closed_forms::slant_upper_bound(m, n, t, r)?,
        GraphFamily::Tree { .. } => {
            let dec = args
                .decomposition
                .as_deref()
                .ok_or_else(|| usage("trees need --decomposition"))?;
            let dec: Vec<Vec<u32>> = parse_json("decomposition", dec)?;
            let g = GraphInstance::build(fam.clone())?;
            closed_forms::tree_decomposition_bound(&g, &dec, t, r)?
        }
    })
}

fn cmd_gamma(args: GammaArgs) -> Out {
    let fam = args.fam.family()?;
    let res = gamma_for(&args, &fam)?;
    let params = json!({ "graph": fam, "t": args.t, "r": args.r });
    if !args.exact {
        if args.json {
            print_json(&envelope("gamma", params, &res));
        } else {
            println!("{} = {} ({}, {})", fam, res.value, res.kind, res.theorem_tag);
            for note in &res.notes {
                println!("  {note}");
            }
        }
        return Ok(());
    }
    let g = GraphInstance::build(fam.clone())?;
    let oracle = solve(&g, args.t, args.r, &SolverConfig::default())?;
    let mut row = ComparisonRow {
        instance: fam.clone(),
        t: args.t,
        r: args.r,
        formula: res.value,
        kind: res.kind,
        theorem_tag: res.theorem_tag.clone(),
        constructed: None,
        constructed_dominates: None,
        oracle: Some(oracle.gamma),
        status: Status::OracleSkipped,
        notes: res.notes.clone(),
    };
    row.classify();
    if args.json {
        print_json(&envelope("gamma", params, &row));
    } else {
        println!("{} = {} ({}, {})", fam, res.value, res.kind, res.theorem_tag);
        println!("oracle = {}, status {}", oracle.gamma, row.status);
    }
    if row.status == Status::Mismatch {
        return Err(Fail::Mismatch(format!("{}: formula {} but oracle {}", fam, res.value, oracle.gamma)));
    }
    Ok(())
}

fn construct_for(args: &ConstructArgs, fam: &GraphFamily) -> Result<PlacementPlan, Fail> {
    let (t, r) = (args.t, args.r);
    Ok(match *fam {
        GraphFamily::Path { n } => constructors::path_towers(n, t, r)?,
        GraphFamily::Cycle { n } => constructors::cycle_towers(n, t, r)?,
        GraphFamily::Grid { m, .. } if args.starting_block => constructors::grid_starting_block(m, t, r)?,
        GraphFamily::Grid { m, n } => constructors::grid_towers(m, n, t, r)?,
        GraphFamily::Grid3d { m, n, k } => match args.block.as_deref() {
            Some(shape) => {
                let block = closed_forms::block3d_dims(shape.parse()?, t, r)?;
                constructors::grid3d_cover(m, n, k, t, r, &block)?
            }
            None => constructors::block3d_towers(&BlockDims::new(vec![m, n, k]), t, r)?,
        },
        GraphFamily::King { m, n } => constructors::king_towers(m, n, t, r)?,
        GraphFamily::Slant { m: 2, n } => constructors::slant_towers_2xn(n, t, r)?,
        GraphFamily::Slant { m, n } => constructors::slant_tile_cover(m, n, t, r)?,
        GraphFamily::Tree { .. } => return Err(usage("no layout is defined for trees")),
    })
}

fn towers_text(towers: &[VertexId]) -> String {
    serde_json::to_string(towers).expect("serializable")
}

fn cmd_construct(args: ConstructArgs) -> Out {
    let fam = args.fam.family()?;
    let plan = construct_for(&args, &fam)?;
    if args.json {
        print_json(&plan);
    } else {
        let rep = plan.verify()?;
        println!("{} t={} r={} ({})", plan.graph, plan.t, plan.r, plan.theorem_tag);
        println!("towers: {}", towers_text(&plan.towers));
        println!(
            "count {}, dominated {}, efficient {} (claimed {})",
            plan.towers.len(),
            rep.dominated,
            rep.efficient,
            plan.claims_efficient
        );
        for note in &plan.notes {
            println!("  {note}");
        }
    }
    Ok(())
}

/// Graph, strength, requirement and towers, from a plan file or flags.
#[derive(Deserialize)]
struct VerifyInput {
    graph: GraphFamily,
    t: u32,
    #[serde(default)]
    r: Option<u32>,
    towers: Vec<VertexId>,
}

fn load_towers(
    input: Option<&str>,
    fam: &FamilyArgs,
    towers: Option<&str>,
    t: Option<u32>,
    r: Option<u32>,
) -> Result<VerifyInput, Fail> {
    let mut vi = match input {
        Some(path) => parse_json::<VerifyInput>("plan", &read_input(path)?)?,
        None => VerifyInput {
            graph: fam.family()?,
            t: t.ok_or_else(|| usage("--t is required without --input"))?,
            r,
            towers: parse_json("towers", towers.ok_or_else(|| usage("--towers is required without --input"))?)?,
        },
    };
    if input.is_some() {
        if let Some(t) = t {
            vi.t = t;
        }
        if r.is_some() {
            vi.r = r;
        }
    }
    Ok(vi)
}

fn cmd_verify(args: VerifyArgs) -> Out {
    let vi = load_towers(args.input.as_deref(), &args.fam, args.towers.as_deref(), args.t, args.r)?;
    let r = vi.r.ok_or_else(|| usage("--r is required when the input carries no r"))?;
    let g = GraphInstance::build(vi.graph.clone())?;
    let rep = verify(&g, &TowerSet::new(vi.t, vi.towers), r)?;
    if args.json {
        print_json(&envelope("verify", json!({ "graph": vi.graph, "t": vi.t, "r": r }), &rep));
    } else {
        println!("{} t={} r={}: {} towers", vi.graph, vi.t, r, rep.tower_count);
        println!(
            "dominated {}, efficient {}, min reception {}",
            rep.dominated, rep.efficient, rep.min_reception
        );
        println!(
            "overlap vertices {}, wasted signal {}, total excess {}",
            rep.overlap_vertices.len(),
            rep.wasted_signal,
            rep.total_excess
        );
        if !rep.deficient.is_empty() {
            println!("deficient: {}", towers_text(&rep.deficient));
        }
        if rep.r_exceeds_t {
            println!("warning: r > t");
        }
    }
    if args.require_dominated && !rep.dominated {
        return Err(Fail::Verify(format!("{} deficient vertices", rep.deficient.len())));
    }
    Ok(())
}

fn cmd_exact(args: ExactArgs) -> Out {
    let fam = args.fam.family()?;
    let g = GraphInstance::build(fam.clone())?;
    let res = if args.naive {
        naive_enumerate(&g, args.t, args.r)
    } else {
        let cfg = SolverConfig {
            max_cardinality: args.max_cardinality,
            canonical_witness: !args.any_witness,
            node_budget: args.budget,
            threads: args.threads,
        };
        solve(&g, args.t, args.r, &cfg)
    };
    let res = match res {
        Ok(res) => res,
        Err(Error::BudgetExhausted { budget, best }) => {
            if args.json {
                print_json(&envelope("exact", json!({ "graph": fam, "t": args.t, "r": args.r }), &best));
            } else {
                println!("budget {budget} exhausted; best found {} towers: {}", best.gamma, towers_text(&best.witness.towers));
            }
            return Err(usage(format!("node budget {budget} exhausted")));
        }
        Err(e) => return Err(e.into()),
    };
    if args.json {
        print_json(&envelope("exact", json!({ "graph": fam, "t": args.t, "r": args.r, "naive": args.naive }), &res));
    } else {
        println!("{} t={} r={}: gamma = {}", fam, args.t, args.r, res.gamma);
        println!("witness: {}", towers_text(&res.witness.towers));
        println!("explored nodes: {}, proven minimal: {}", res.explored_nodes, res.proven_minimal);
    }
    Ok(())
}

fn cmd_lattice(args: LatticeArgs) -> Out {
    let kind: LatticeKind = args.kind.parse()?;
    let pattern = match kind {
        LatticeKind::Triangular => constructors::triangular_lattice_pattern(args.t, args.r)?,
        _ => {
            let p = constructors::king_lattice_pattern(args.t, args.r)?;
            if p.kind != kind {
                return Err(usage(format!("{} needs r = {}", args.kind, if kind == LatticeKind::KingT1 { 1 } else { 2 })));
            }
            p
        }
    };
    let halfwidth = args.halfwidth.unwrap_or(4 * args.t);
    let window = constructors::verify_lattice_window(&pattern, args.t, args.r, halfwidth)?;
    let points = pattern.points(-args.range..=args.range, -args.range..=args.range);
    let ok = window.report.dominated;
    if args.json {
        let pts: Vec<_> = points.iter().map(|&(x, y, p)| json!({ "index": [x, y], "point": p })).collect();
        let result = json!({
            "pattern": pattern,
            "generators": pattern.generators(),
            "points": pts,
            "window": window,
        });
        print_json(&envelope("lattice", json!({ "t": args.t, "r": args.r, "halfwidth": halfwidth }), &result));
    } else {
        print_lattice(&pattern, &points, &window);
    }
    if args.require_dominated && !ok {
        return Err(Fail::Verify("window interior is not dominated".into()));
    }
    Ok(())
}

fn print_lattice(
    pattern: &LatticePattern,
    points: &[(i64, i64, broadcast_domination::LatticePoint)],
    window: &constructors::LatticeWindowReport,
) {
    let [g1, g2] = pattern.generators();
    println!("{:?} t={} r={}: generators {g1} {g2}", pattern.kind, pattern.t, pattern.r);
    for (x, y, p) in points {
        println!("  ({x},{y}) -> {p}");
    }
    let rep = &window.report;
    println!(
        "window halfwidth {} (interior {}), {} towers: dominated {}, efficient {}, min reception {}",
        window.halfwidth,
        window.interior_halfwidth,
        window.towers.len(),
        rep.dominated,
        rep.efficient,
        rep.min_reception
    );
}

fn cmd_table(args: TableArgs) -> Out {
    if args.preset != "slant" {
        return Err(usage(format!("unknown preset {:?}; only slant exists", args.preset)));
    }
    let rows: Vec<_> = SLANT_TABLE
        .iter()
        .filter(|row| args.t.is_none_or(|t| t == row.t) && args.r.is_none_or(|r| r == row.r))
        .collect();
    if rows.is_empty() {
        return Err(Error::UnsupportedTRPair { t: args.t.unwrap_or(0), r: args.r.unwrap_or(0) }.into());
    }
    let mut out = Vec::new();
    for row in rows {
        if args.l >= row.a || args.k >= row.b {
            return Err(usage(format!("remainders must satisfy l < {} and k < {}", row.a, row.b)));
        }
        for p in args.p..=args.p_max.unwrap_or(args.p) {
            for q in args.q..=args.q_max.unwrap_or(args.q) {
                let (m, n) = (row.a * p + args.l, row.b * q + args.k);
                let res = closed_forms::slant_upper_bound(m, n, row.t, row.r)?;
                out.push(json!({
                    "t": row.t, "r": row.r, "p": p, "q": q, "l": args.l, "k": args.k,
                    "m": m, "n": n, "bound": res.value, "theorem_tag": res.theorem_tag,
                }));
            }
        }
    }
    if args.json {
        print_json(&envelope("table", json!({ "preset": "slant" }), &out));
    } else if out.len() == 1 {
        println!("{}", out[0]["bound"]);
    } else {
        println!("{:>2} {:>2} {:>3} {:>3} {:>2} {:>2} {:>4} {:>4} {:>6}", "t", "r", "p", "q", "l", "k", "m", "n", "bound");
        for v in out {
            println!(
                "{:>2} {:>2} {:>3} {:>3} {:>2} {:>2} {:>4} {:>4} {:>6}",
                v["t"], v["r"], v["p"], v["q"], v["l"], v["k"], v["m"], v["n"], v["bound"]
            );
        }
    }
    Ok(())
}

fn cmd_render(args: RenderArgs) -> Out {
    let vi = load_towers(args.input.as_deref(), &args.fam, args.towers.as_deref(), args.t, None)?;
    let g = GraphInstance::build(vi.graph)?;
    let opts = RenderOptions { col_start: args.col_start, width: args.width, digits_only: args.digits };
    print!("{}", render::render(&g, &TowerSet::new(vi.t, vi.towers), opts)?);
    Ok(())
}

fn cmd_audit(args: AuditArgs) -> Out {
    let suite: Suite = args.suite.parse()?;
    let mut opts = AuditOptions {
        n_max: args.n_max,
        t_max: args.t_max,
        max_vertices: args.max_vertices,
        allow_large: args.allow_large,
        ..Default::default()
    };
    if args.budget.is_some() {
        opts.node_budget = args.budget;
    }
    let rows = audit::run(suite, &opts)?;
    let bad = audit::mismatches(&rows);
    if args.json {
        let params = json!({
            "suite": args.suite, "n_max": args.n_max, "t_max": args.t_max,
            "max_vertices": args.max_vertices, "allow_large": args.allow_large,
        });
        print_json(&envelope("audit", params, &rows));
    } else if args.csv {
        print!("{}", audit::to_csv(&rows)?);
    } else {
        print!("{}", audit::to_table(&rows));
        println!("{} rows, {} MISMATCH", rows.len(), bad);
    }
    if bad > 0 {
        return Err(Fail::Mismatch(format!("{bad} MISMATCH rows")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let res = match cli.cmd {
        Command::Gamma(a) => cmd_gamma(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Lattice(a) => cmd_lattice(a),
        Command::Table(a) => cmd_table(a),
        Command::Render(a) => cmd_render(a),
        Command::Audit(a) => cmd_audit(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Fail::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Fail::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}
