//! Formula-versus-oracle sweeps.
//!
//! Each row pairs one closed form (or bound) with its constructed layout and,
//! when the instance is small enough, the exact solver's value.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::closed_forms::{self, Block3dShape, BlockDims, GammaKind, GammaResult, SLANT_TABLE};
use crate::constructors::{self, PlacementPlan};
use crate::error::{Error, Result};
use crate::graph::{GraphFamily, GraphInstance};
use crate::reception::verify;
use crate::solver::{solve, SolverConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Match,
    BoundGap(u64),
    Mismatch,
    OracleSkipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Match => f.write_str("match"),
            Status::BoundGap(d) => write!(f, "bound-gap({d})"),
            Status::Mismatch => f.write_str("MISMATCH"),
            Status::OracleSkipped => f.write_str("oracle-skipped"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub instance: GraphFamily,
    pub t: u32,
    pub r: u32,
    pub formula: u64,
    pub kind: GammaKind,
    pub theorem_tag: String,
    pub constructed: Option<usize>,
    pub constructed_dominates: Option<bool>,
    pub oracle: Option<u32>,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ComparisonRow {
    /// Decide the row status from the values already filled in.
    pub fn classify(&mut self) {
        if self.constructed_dominates == Some(false) {
            self.status = Status::Mismatch;
            return;
        }
        self.status = match (self.oracle, self.kind) {
            (None, _) => Status::OracleSkipped,
            (Some(o), GammaKind::UpperBound) if self.formula >= o as u64 => {
                match self.formula - o as u64 {
                    0 => Status::Match,
                    d => Status::BoundGap(d),
                }
            }
            (Some(o), _) if self.formula == o as u64 => Status::Match,
            _ => Status::Mismatch,
        };
    }

    fn sort_key(&self) -> (GraphFamily, u32, u32, String) {
        (self.instance.clone(), self.t, self.r, self.theorem_tag.clone())
    }
}

/// Flat form used for CSV output.
#[derive(Serialize)]
struct CsvRow<'a> {
    instance: String,
    family: &'a str,
    dims: String,
    t: u32,
    r: u32,
    theorem: &'a str,
    kind: String,
    formula: u64,
    constructed: Option<usize>,
    oracle: Option<u32>,
    status: String,
}

pub fn to_csv(rows: &[ComparisonRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        let dims = row.instance.dims().iter().map(u32::to_string).collect::<Vec<_>>().join("x");
        w.serialize(CsvRow {
            instance: row.instance.to_string(),
            family: row.instance.name(),
            dims,
            t: row.t,
            r: row.r,
            theorem: &row.theorem_tag,
            kind: row.kind.to_string(),
            formula: row.formula,
            constructed: row.constructed,
            oracle: row.oracle,
            status: row.status.to_string(),
        })
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Paths,
    Cycles,
    Grids,
    Grid3d,
    King,
    Slant,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "paths" => Suite::Paths,
            "cycles" => Suite::Cycles,
            "grids" => Suite::Grids,
            "grid3d" => Suite::Grid3d,
            "king" => Suite::King,
            "slant" => Suite::Slant,
            "all" => Suite::All,
            _ => {
                return Err(Error::InvalidInput(format!(
                    "unknown suite {s:?} (paths, cycles, grids, grid3d, king, slant, all)"
                )))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditOptions {
    /// Longest side swept; each suite has its own default.
    pub n_max: Option<u32>,
    pub t_max: Option<u32>,
    /// Instances above this many vertices skip the oracle unless `allow_large`.
    pub max_vertices: usize,
    pub allow_large: bool,
    pub node_budget: Option<u64>,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            n_max: None,
            t_max: None,
            max_vertices: 30,
            allow_large: false,
            node_budget: Some(20_000_000),
        }
    }
}

#[derive(Clone, Debug)]
enum Case {
    Path(u32),
    Cycle(u32),
    Grid(u32, u32),
    Thm41(u32),
    Block(BlockDims),
    Grid3dBound([u32; 3], BlockDims),
    King(u32, u32),
    Slant2xn(u32),
    SlantTable(u32, u32),
}

#[derive(Clone, Debug)]
struct Job {
    case: Case,
    t: u32,
    r: u32,
}

fn tr_pairs(t_max: u32, strict: bool) -> impl Iterator<Item = (u32, u32)> {
    (1..=t_max).flat_map(move |t| (1..=t).filter(move |&r| !strict || r < t).map(move |r| (t, r)))
}

fn jobs(suite: Suite, opts: &AuditOptions) -> Vec<Job> {
    let job = |case, t, r| Job { case, t, r };
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            for s in [Suite::Paths, Suite::Cycles, Suite::Grids, Suite::Grid3d, Suite::King, Suite::Slant] {
                out.extend(jobs(s, opts));
            }
        }
        Suite::Paths => {
            for (t, r) in tr_pairs(opts.t_max.unwrap_or(4), false) {
                for n in 1..=opts.n_max.unwrap_or(14) {
                    out.push(job(Case::Path(n), t, r));
                }
            }
        }
        Suite::Cycles => {
            for (t, r) in tr_pairs(opts.t_max.unwrap_or(3), false) {
                for n in 3..=opts.n_max.unwrap_or(12) {
                    out.push(job(Case::Cycle(n), t, r));
                }
            }
        }
        Suite::Grids => {
            let cap = opts.max_vertices as u32;
            for (t, r) in tr_pairs(opts.t_max.unwrap_or(3), false) {
                for m in 2..=3 {
                    if 2 * t - r < m {
                        continue;
                    }
                    let n0 = closed_forms::grid_block_width(m, t, r) as u32;
                    let n_hi = opts.n_max.unwrap_or(cap / m);
                    for n in n0..=n_hi {
                        out.push(job(Case::Grid(m, n), t, r));
                    }
                }
            }
        }
        Suite::Grid3d => {
            for k in 1..=5 {
                out.push(job(Case::Thm41(k), 2, 1));
            }
            for (t, r) in tr_pairs(opts.t_max.unwrap_or(3), false) {
                let mut blocks = Vec::new();
                for shape in [Block3dShape::TwoByTwo, Block3dShape::ThreeByN, Block3dShape::ThreeByThree] {
                    if let Ok(b) = closed_forms::block3d_dims(shape, t, r) {
                        blocks.push(b);
                    }
                }
                if let Ok(family) = closed_forms::block3d_family(2 * t - r + 3, t, r) {
                    for b in family {
                        if !blocks.iter().any(|x| same_multiset(&x.dims, &b.dims)) {
                            blocks.push(b);
                        }
                    }
                }
                for b in &blocks {
                    out.push(job(Case::Block(b.clone()), t, r));
                }
                if let Ok(b) = closed_forms::block3d_dims(Block3dShape::TwoByTwo, t, r) {
                    for m in 1..=3 {
                        for n in m..=3 {
                            for k in 1..=opts.n_max.unwrap_or(5) {
                                if (m * n * k) as usize <= opts.max_vertices {
                                    out.push(job(Case::Grid3dBound([m, n, k], b.clone()), t, r));
                                }
                            }
                        }
                    }
                }
            }
        }
        Suite::King => {
            let cap = opts.max_vertices as u32;
            for (t, r) in tr_pairs(opts.t_max.unwrap_or(3), true) {
                for m in 1..=2 * (t - r) + 1 {
                    for n in 1..=opts.n_max.unwrap_or(cap / m) {
                        out.push(job(Case::King(m, n), t, r));
                    }
                }
            }
        }
        Suite::Slant => {
            for (t, r) in tr_pairs(opts.t_max.unwrap_or(3), true) {
                for n in 1..=opts.n_max.unwrap_or(14) {
                    out.push(job(Case::Slant2xn(n), t, r));
                }
            }
            for row in SLANT_TABLE {
                for p in 1..=2 {
                    for q in 1..=2 {
                        for l in 0..=1 {
                            for k in 0..=1 {
                                out.push(job(Case::SlantTable(row.a * p + l, row.b * q + k), row.t, row.r));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn same_multiset(a: &[u32], b: &[u32]) -> bool {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn evaluate(case: &Case, t: u32, r: u32) -> Result<(GammaResult, PlacementPlan)> {
    Ok(match *case {
        Case::Path(n) => (closed_forms::path_gamma(n, t, r)?, constructors::path_towers(n, t, r)?),
        Case::Cycle(n) => (closed_forms::cycle_upper_bound(n, t, r)?, constructors::cycle_towers(n, t, r)?),
        Case::Grid(m, n) => (closed_forms::grid_gamma(m, n, t, r)?, constructors::grid_towers(m, n, t, r)?),
        Case::Thm41(k) => {
            let gamma = closed_forms::grid3d_2_2_k_gamma(k, t, r)?;
            let block = closed_forms::block3d_dims(Block3dShape::TwoByTwo, t, r)?;
            (gamma, constructors::grid3d_cover(2, 2, k, t, r, &block)?)
        }
        Case::Block(ref b) => {
            let plan = constructors::block3d_towers(b, t, r)?;
            let res = GammaResult {
                value: b.towers_required as u64,
                kind: GammaKind::UpperBound,
                theorem_tag: "Thm4.4".into(),
                hypothesis_ok: true,
                notes: Vec::new(),
            };
            (res, plan)
        }
        Case::Grid3dBound([m, n, k], ref b) => (
            closed_forms::grid3d_upper_bound(m, n, k, t, r, b)?,
            constructors::grid3d_cover(m, n, k, t, r, b)?,
        ),
        Case::King(m, n) => (closed_forms::king_gamma(m, n, t, r)?, constructors::king_towers(m, n, t, r)?),
        Case::Slant2xn(n) => (closed_forms::slant_gamma_2xn(n, t, r)?, constructors::slant_towers_2xn(n, t, r)?),
        Case::SlantTable(m, n) => (
            closed_forms::slant_upper_bound(m, n, t, r)?,
            constructors::slant_tile_cover(m, n, t, r)?,
        ),
    })
}

fn run_job(job: &Job, opts: &AuditOptions) -> Result<ComparisonRow> {
    let (gamma, plan) = evaluate(&job.case, job.t, job.r)?;
    let g = GraphInstance::build(plan.graph.clone())?;
    let report = verify(&g, &plan.tower_set(), job.r)?;
    let mut row = ComparisonRow {
        instance: plan.graph.clone(),
        t: job.t,
        r: job.r,
        formula: gamma.value,
        kind: gamma.kind,
        theorem_tag: gamma.theorem_tag,
        constructed: Some(plan.towers.len()),
        constructed_dominates: Some(report.dominated),
        oracle: None,
        status: Status::OracleSkipped,
        notes: gamma.notes,
    };
    if plan.claims_efficient && !report.efficient {
        row.notes.push("layout claims efficiency but is not efficient".into());
    }
    if g.vertex_count() <= opts.max_vertices || opts.allow_large {
        let cfg = SolverConfig { node_budget: opts.node_budget, ..Default::default() };
        match solve(&g, job.t, job.r, &cfg) {
            Ok(res) => row.oracle = Some(res.gamma),
            Err(Error::BudgetExhausted { best, .. }) => {
                row.notes.push(format!("oracle budget exhausted; best found {}", best.gamma));
            }
            Err(e) => return Err(e),
        }
    }
    row.classify();
    Ok(row)
}

/// Run a suite; rows come back sorted by instance, then `(t, r)`.
pub fn run(suite: Suite, opts: &AuditOptions) -> Result<Vec<ComparisonRow>> {
    let jobs = jobs(suite, opts);
    let mut rows = jobs
        .par_iter()
        .map(|j| run_job(j, opts))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(ComparisonRow::sort_key);
    rows.dedup_by(|a, b| a.sort_key() == b.sort_key());
    Ok(rows)
}

pub fn mismatches(rows: &[ComparisonRow]) -> usize {
    rows.iter().filter(|r| r.status == Status::Mismatch).count()
}

/// Fixed-width text table.
pub fn to_table(rows: &[ComparisonRow]) -> String {
    let mut out = format!(
        "{:<16} {:>2} {:>2} {:<14} {:<13} {:>7} {:>6} {:>6}  {}\n",
        "instance", "t", "r", "theorem", "kind", "formula", "built", "oracle", "status"
    );
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    for row in rows {
        out.push_str(&format!(
            "{:<16} {:>2} {:>2} {:<14} {:<13} {:>7} {:>6} {:>6}  {}\n",
            row.instance.to_string(),
            row.t,
            row.r,
            row.theorem_tag,
            row.kind.to_string(),
            row.formula,
            opt(row.constructed.map(|c| c.to_string())),
            opt(row.oracle.map(|c| c.to_string())),
            row.status
        ));
    }
    out
}
