//! Explicit tower placements, one per closed form, plus infinite lattice
//! patterns checked on finite windows.
//!
//! All emitted coordinates are `(row, col[, layer])`, 1-indexed. Towers that a
//! layout would put past the boundary are clamped inward; the reception
//! verifier, not the layout, is the final word on domination.

use serde::{Deserialize, Serialize};

use crate::closed_forms::{
    self, best_block_orientation, grid_block_width, BlockDims, SlantTableRow,
};
use crate::error::{Error, Result};
use crate::graph::{slant_lattice_distance, GraphFamily, GraphInstance, LatticePoint, VertexId};
use crate::reception::{verify, verify_region, TowerSet, VerificationReport};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A tower layout for one graph. JSON:
/// `{"theorem":"Thm1.2","t":3,"r":1,"towers":[[1,1],[3,4]],...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementPlan {
    #[serde(rename = "theorem")]
    pub theorem_tag: String,
    pub graph: GraphFamily,
    pub t: u32,
    pub r: u32,
    pub towers: Vec<VertexId>,
    pub claims_efficient: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default)]
    pub version: String,
}

impl PlacementPlan {
    fn new(tag: impl Into<String>, graph: GraphFamily, t: u32, r: u32, towers: Vec<VertexId>) -> Self {
        PlacementPlan {
            theorem_tag: tag.into(),
            graph,
            t,
            r,
            towers,
            claims_efficient: false,
            notes: Vec::new(),
            version: VERSION.to_string(),
        }
    }

    pub fn tower_set(&self) -> TowerSet {
        TowerSet::new(self.t, self.towers.clone())
    }

    /// Build the target graph and run the verifier on this plan.
    pub fn verify(&self) -> Result<VerificationReport> {
        let g = GraphInstance::build(self.graph.clone())?;
        verify(&g, &self.tower_set(), self.r)
    }
}

fn dedup_keep_order(towers: Vec<VertexId>) -> Vec<VertexId> {
    let mut seen = std::collections::HashSet::new();
    towers.into_iter().filter(|v| seen.insert(*v)).collect()
}

/// 1-indexed positions `(t−r+1) + i(2t−r)` for `count` towers, clamped to `n`.
fn path_positions(n: u32, t: u32, r: u32, count: u64) -> Vec<u32> {
    (0..count as u32).map(|i| ((t - r + 1) + i * (2 * t - r)).min(n)).collect()
}

pub fn path_towers(n: u32, t: u32, r: u32) -> Result<PlacementPlan> {
    let gamma = closed_forms::path_gamma(n, t, r)?;
    let towers = path_positions(n, t, r, gamma.value).into_iter().map(VertexId::Index).collect();
    let mut plan = PlacementPlan::new(gamma.theorem_tag, GraphFamily::Path { n }, t, r, towers);
    plan.claims_efficient = (n + r - 1).is_multiple_of(2 * t - r);
    Ok(plan)
}

/// The path layout laid around a cycle. Extra edges only shorten distances,
/// so it still dominates.
pub fn cycle_towers(n: u32, t: u32, r: u32) -> Result<PlacementPlan> {
    let bound = closed_forms::cycle_upper_bound(n, t, r)?;
    let mut plan = path_towers(n, t, r)?;
    plan.graph = GraphFamily::Cycle { n };
    plan.theorem_tag = bound.theorem_tag;
    plan.claims_efficient = false;
    Ok(plan)
}

pub fn grid_starting_block(m: u32, t: u32, r: u32) -> Result<PlacementPlan> {
    let dims = closed_forms::grid_starting_block_dims(m, t, r)?;
    let n0 = dims.dims[1];
    let towers = vec![VertexId::Cell(1, 1), VertexId::Cell(m, n0)];
    let mut plan = PlacementPlan::new("Lemma3.2", GraphFamily::Grid { m, n: n0 }, t, r, towers);
    plan.claims_efficient = true;
    Ok(plan)
}

/// Starting block in the first `n0` columns, then one tower every `n0 − 1`
/// columns alternating row 1 and row `m`, beginning with row 1.
pub fn grid_towers(m: u32, n: u32, t: u32, r: u32) -> Result<PlacementPlan> {
    let gamma = closed_forms::grid_gamma(m, n, t, r)?;
    let n0 = grid_block_width(m, t, r) as u32;
    let mut towers = vec![VertexId::Cell(1, 1), VertexId::Cell(m, n0)];
    for j in 1..=(gamma.value - 2) as u32 {
        let row = if j % 2 == 1 { 1 } else { m };
        towers.push(VertexId::Cell(row, (n0 + j * (n0 - 1)).min(n)));
    }
    let mut plan = PlacementPlan::new(gamma.theorem_tag, GraphFamily::Grid { m, n }, t, r, towers);
    plan.claims_efficient = n == n0;
    Ok(plan)
}

fn check_block3d(dims: [u32; 3], t: u32, r: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidStrength(t));
    }
    if r == 0 || r > t {
        return Err(Error::hypothesis("Thm4.4", format!("need t >= r >= 1, got t={t}, r={r}")));
    }
    let q: u32 = dims.iter().sum();
    if q - 3 > 2 * t - r {
        return Err(Error::hypothesis(
            "Thm4.4",
            format!("{:?} has m+n+k-3 = {} > 2t-r = {}", dims, q - 3, 2 * t - r),
        ));
    }
    Ok(())
}

/// Two opposite-corner towers `(1,1,k)` and `(m,n,1)`.
pub fn block3d_towers(block: &BlockDims, t: u32, r: u32) -> Result<PlacementPlan> {
    let [m, n, k] = block.as_triple()?;
    check_block3d([m, n, k], t, r)?;
    let towers = dedup_keep_order(vec![VertexId::Voxel(1, 1, k), VertexId::Voxel(m, n, 1)]);
    let mut plan = PlacementPlan::new("Thm4.4", GraphFamily::Grid3d { m, n, k }, t, r, towers);
    plan.claims_efficient = m + n + k - 3 == 2 * t - r;
    Ok(plan)
}

/// Cover an `m × n × k` grid with translated copies of `block`, clamping each
/// copy's towers into the grid.
pub fn grid3d_cover(m: u32, n: u32, k: u32, t: u32, r: u32, block: &BlockDims) -> Result<PlacementPlan> {
    let bound = closed_forms::grid3d_upper_bound(m, n, k, t, r, block)?;
    let ([bm, bn, bk], count) = best_block_orientation(m, n, k, block)?;
    let mut towers = Vec::with_capacity(2 * count as usize);
    for i in (0..m).step_by(bm as usize) {
        for j in (0..n).step_by(bn as usize) {
            for l in (0..k).step_by(bk as usize) {
                towers.push(VertexId::Voxel(i + 1, j + 1, (l + bk).min(k)));
                towers.push(VertexId::Voxel((i + bm).min(m), (j + bn).min(n), l + 1));
            }
        }
    }
    let mut towers = dedup_keep_order(towers);
    towers.sort();
    let mut plan = PlacementPlan::new(bound.theorem_tag, GraphFamily::Grid3d { m, n, k }, t, r, towers);
    plan.notes.push(format!("{count} blocks of {bm}x{bn}x{bk}; bound {}", bound.value));
    Ok(plan)
}

/// Path layout on row `⌈m/2⌉`.
pub fn king_towers(m: u32, n: u32, t: u32, r: u32) -> Result<PlacementPlan> {
    let gamma = closed_forms::king_gamma(m, n, t, r)?;
    let row = m.div_ceil(2);
    let towers = path_positions(n, t, r, gamma.value)
        .into_iter()
        .map(|c| VertexId::Cell(row, c))
        .collect();
    let mut plan = PlacementPlan::new(gamma.theorem_tag, GraphFamily::King { m, n }, t, r, towers);
    plan.notes.push("coordinates are (row, col)".into());
    Ok(plan)
}

/// Two-row slant grid.
///
/// Row 1 is the row whose diagonals point into row 2. A row-2 tower at column
/// `c` reaches column `c + t − r − 1` in both rows at strength `r`; a row-1
/// tower reaches `c + t − r`. Towers alternate rows from `(2, t−r+1)`.
pub fn slant_towers_2xn(n: u32, t: u32, r: u32) -> Result<PlacementPlan> {
    let gamma = closed_forms::slant_gamma_2xn(n, t, r)?;
    let graph = GraphFamily::Slant { m: 2, n };
    let d = t - r;
    if n <= 2 * d {
        let towers = vec![VertexId::Cell(1, d.min(n))];
        let mut plan = PlacementPlan::new("Lemma5.5", graph, t, r, towers);
        plan.notes.push(format!("single tower, n <= 2(t-r) = {}", 2 * d));
        return Ok(plan);
    }
    let mut towers = Vec::new();
    let (mut row, mut col) = (2u32, d + 1);
    loop {
        towers.push(VertexId::Cell(row, col.min(n)));
        let reach = if row == 2 { col + d - 1 } else { col + d };
        if reach >= n {
            break;
        }
        col += if row == 2 { 2 * t - r - 1 } else { 2 * t - r };
        row = 3 - row;
    }
    let mut plan = PlacementPlan::new(gamma.theorem_tag, graph, t, r, towers);
    if plan.towers.len() as u64 != gamma.value {
        plan.notes.push(format!("layout uses {} towers, formula {}", plan.towers.len(), gamma.value));
    }
    Ok(plan)
}

/// Kind of infinite tower lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeKind {
    KingT1,
    KingT2,
    Triangular,
}

impl std::str::FromStr for LatticeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "king-t1" => Ok(LatticeKind::KingT1),
            "king-t2" => Ok(LatticeKind::KingT2),
            "triangular" | "slant" => Ok(LatticeKind::Triangular),
            _ => Err(Error::InvalidInput(format!(
                "unknown lattice {s:?} (expected king-t1, king-t2 or triangular)"
            ))),
        }
    }
}

/// Tower positions `x·g1 + y·g2` for all integer `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePattern {
    pub kind: LatticeKind,
    pub t: u32,
    pub r: u32,
}

impl LatticePattern {
    /// The two generating translations.
    pub fn generators(&self) -> [LatticePoint; 2] {
        [self.point(1, 0), self.point(0, 1)]
    }

    pub fn point(&self, x: i64, y: i64) -> LatticePoint {
        let (t, r) = (self.t as i64, self.r as i64);
        match self.kind {
            LatticeKind::KingT1 => LatticePoint::new(x * (2 * t - 1), y * (2 * t - 1)),
            LatticeKind::KingT2 => {
                let s = 2 * t - r;
                LatticePoint::new(s * x - y, x + s * y)
            }
            LatticeKind::Triangular => {
                // a·(−1, 0) + b·(1, 1)
                let a = (2 * t - r) * x + (t - r) * y;
                let b = t * x + (2 * t - r) * y;
                LatticePoint::new(b - a, b)
            }
        }
    }

    /// Index pair of `p` if it is a tower.
    pub fn index_of(&self, p: LatticePoint) -> Option<(i64, i64)> {
        let [g1, g2] = self.generators();
        let det = g1.x * g2.y - g1.y * g2.x;
        let xn = p.x * g2.y - p.y * g2.x;
        let yn = g1.x * p.y - g1.y * p.x;
        (xn % det == 0 && yn % det == 0).then(|| (xn / det, yn / det))
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.index_of(p).is_some()
    }

    /// Towers with `xmin <= x <= xmax`, `ymin <= y <= ymax`, sorted by `(y, x)`.
    pub fn towers_in_box(&self, xmin: i64, xmax: i64, ymin: i64, ymax: i64) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        for y in ymin..=ymax {
            for x in xmin..=xmax {
                let p = LatticePoint::new(x, y);
                if self.contains(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Towers for an index range, as `(x, y, point)`.
    pub fn points(&self, xs: std::ops::RangeInclusive<i64>, ys: std::ops::RangeInclusive<i64>) -> Vec<(i64, i64, LatticePoint)> {
        let mut out = Vec::new();
        for y in ys {
            for x in xs.clone() {
                out.push((x, y, self.point(x, y)));
            }
        }
        out
    }
}

/// `(x(2t−1), y(2t−1))` for r = 1, `((2t−2)x − y, x + (2t−2)y)` for r = 2.
pub fn king_lattice_pattern(t: u32, r: u32) -> Result<LatticePattern> {
    let kind = match r {
        1 => LatticeKind::KingT1,
        2 => LatticeKind::KingT2,
        _ => return Err(Error::UnsupportedR(r)),
    };
    if t <= 1 {
        return Err(Error::hypothesis("king-lattice", format!("need t > 1, got {t}")));
    }
    Ok(LatticePattern { kind, t, r })
}

pub fn triangular_lattice_pattern(t: u32, r: u32) -> Result<LatticePattern> {
    if t == 0 {
        return Err(Error::InvalidStrength(t));
    }
    if r == 0 || r > t {
        return Err(Error::hypothesis("Thm5.1", format!("need t >= r >= 1, got t={t}, r={r}")));
    }
    Ok(LatticePattern { kind: LatticeKind::Triangular, t, r })
}

/// Report for a lattice pattern restricted to a finite window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeWindowReport {
    pub pattern: LatticePattern,
    pub halfwidth: u32,
    pub interior_halfwidth: u32,
    /// Towers placed, including those just outside the window.
    pub towers: Vec<LatticePoint>,
    pub report: VerificationReport,
}

/// Reception on the square `|x|, |y| <= halfwidth − t` of the infinite
/// lattice, with every pattern tower that can reach it.
pub fn verify_lattice_window(pattern: &LatticePattern, t: u32, r: u32, halfwidth: u32) -> Result<LatticeWindowReport> {
    if t == 0 {
        return Err(Error::InvalidStrength(t));
    }
    if halfwidth < 3 * t {
        return Err(Error::WindowTooSmall { halfwidth, minimum: 3 * t });
    }
    let outer = (halfwidth + t - 1) as i64;
    let side = (2 * outer + 1) as u32;
    let family = match pattern.kind {
        LatticeKind::KingT1 | LatticeKind::KingT2 => GraphFamily::King { m: side, n: side },
        LatticeKind::Triangular => GraphFamily::Slant { m: side, n: side },
    };
    let g = GraphInstance::build(family)?;
    let to_cell = |p: LatticePoint| VertexId::Cell((p.y + outer + 1) as u32, (p.x + outer + 1) as u32);
    let lattice_towers = pattern.towers_in_box(-outer, outer, -outer, outer);
    let ts = TowerSet::new(t, lattice_towers.iter().map(|&p| to_cell(p)).collect());
    let inner = (halfwidth - t) as i64;
    let mut region = Vec::new();
    for y in -inner..=inner {
        for x in -inner..=inner {
            region.push(g.index_of(&to_cell(LatticePoint::new(x, y))).expect("inside window"));
        }
    }
    let report = verify_region(&g, &ts, r, &region)?;
    Ok(LatticeWindowReport {
        pattern: *pattern,
        halfwidth,
        interior_halfwidth: halfwidth - t,
        towers: lattice_towers,
        report,
    })
}

fn slant_distance_to_box(p: LatticePoint, x0: i64, x1: i64, y0: i64, y1: i64) -> u64 {
    let mut best = u64::MAX;
    for y in y0..=y1 {
        for x in x0..=x1 {
            best = best.min(slant_lattice_distance(p, LatticePoint::new(x, y)));
        }
    }
    best
}

/// Towers from `towers` that reach the box within `t − 1`, clamped into it.
fn clip_into_box(towers: &[LatticePoint], t: u32, x0: i64, x1: i64, y0: i64, y1: i64) -> Vec<LatticePoint> {
    let mut out: Vec<LatticePoint> = towers
        .iter()
        .filter(|&&p| slant_distance_to_box(p, x0, x1, y0, y1) < t as u64)
        .map(|p| LatticePoint::new(p.x.clamp(x0, x1), p.y.clamp(y0, y1)))
        .collect();
    out.sort_by_key(|p| (p.y, p.x));
    out.dedup();
    out
}

/// Starting tile for a table row: the triangular pattern restricted to the
/// lattice box `0 <= x < b`, `0 <= y < a`.
pub fn slant_starting_tile(t: u32, r: u32) -> Result<(SlantTableRow, Vec<LatticePoint>)> {
    let row = closed_forms::slant_table_row(t, r)?;
    let pattern = triangular_lattice_pattern(t, r)?;
    let (a, b) = (row.a as i64, row.b as i64);
    let reach = t as i64;
    let around = pattern.towers_in_box(-reach, b - 1 + reach, -reach, a - 1 + reach);
    Ok((row, clip_into_box(&around, t, 0, b - 1, 0, a - 1)))
}

/// Tile `S_{m,n}` with the row's starting tile. Horizontal neighbours share
/// their boundary column, so tiles advance by `b − 1`; vertical neighbours
/// advance by `a`. Tiles hanging over the edge keep only towers that reach
/// the visible part, clamped into it.
pub fn slant_tile_cover(m: u32, n: u32, t: u32, r: u32) -> Result<PlacementPlan> {
    let bound = closed_forms::slant_upper_bound(m, n, t, r)?;
    let (row, tile) = slant_starting_tile(t, r)?;
    let (a, b) = (row.a as i64, row.b as i64);
    let (mm, nn) = (m as i64, n as i64);

    let tile_graph = GraphInstance::build(GraphFamily::Slant { m: row.a, n: row.b })?;
    let tile_set = TowerSet::new(t, tile.iter().map(|p| VertexId::Cell((p.y + 1) as u32, (p.x + 1) as u32)).collect());
    let tile_ok = verify(&tile_graph, &tile_set, r)?.dominated;

    let mut x_offsets = vec![0i64];
    while x_offsets.last().unwrap() + b - 1 < nn - 1 {
        x_offsets.push(x_offsets.last().unwrap() + b - 1);
    }
    let mut points = Vec::new();
    for oy in (0..mm).step_by(row.a as usize) {
        for &ox in &x_offsets {
            let shifted: Vec<LatticePoint> = tile.iter().map(|p| LatticePoint::new(p.x + ox, p.y + oy)).collect();
            let x1 = (ox + b - 1).min(nn - 1);
            let y1 = (oy + a - 1).min(mm - 1);
            points.extend(clip_into_box(&shifted, t, ox, x1, oy, y1));
        }
    }
    let mut towers: Vec<VertexId> = points
        .into_iter()
        .map(|p| VertexId::Cell((p.y + 1) as u32, (p.x + 1) as u32))
        .collect();
    towers.sort();
    towers.dedup();

    let mut plan = PlacementPlan::new(bound.theorem_tag, GraphFamily::Slant { m, n }, t, r, towers);
    plan.notes.push(format!(
        "starting tile {}x{} with {} towers; bound {}",
        row.a,
        row.b,
        tile.len(),
        bound.value
    ));
    if !tile_ok {
        plan.notes.push("starting tile does not dominate its own slant grid".into());
    }
    plan.notes.extend(bound.notes);
    Ok(plan)
}
