//! Closed-form domination numbers and upper bounds.
//!
//! Every result carries a short theorem tag (`"Thm1.1"`, `"Table1-(3,2)"`, ...)
//! naming the claim it evaluates. Side conditions that fail give an error,
//! not an extrapolated value.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphFamily, GraphInstance, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaKind {
    ExactFormula,
    UpperBound,
    OracleExact,
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaKind::ExactFormula => "exact-formula",
            GammaKind::UpperBound => "upper-bound",
            GammaKind::OracleExact => "oracle-exact",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaResult {
    pub value: u64,
    pub kind: GammaKind,
    pub theorem_tag: String,
    pub hypothesis_ok: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl GammaResult {
    fn exact(value: u64, tag: impl Into<String>) -> Self {
        GammaResult {
            value,
            kind: GammaKind::ExactFormula,
            theorem_tag: tag.into(),
            hypothesis_ok: true,
            notes: Vec::new(),
        }
    }

    fn bound(value: u64, tag: impl Into<String>) -> Self {
        GammaResult {
            kind: GammaKind::UpperBound,
            ..GammaResult::exact(value, tag)
        }
    }
}

/// Dimensions of a grid that two towers dominate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDims {
    pub dims: Vec<u32>,
    pub towers_required: u32,
}

impl BlockDims {
    pub fn new(dims: Vec<u32>) -> Self {
        BlockDims { dims, towers_required: 2 }
    }

    pub fn sum(&self) -> u64 {
        self.dims.iter().map(|&d| d as u64).sum()
    }

    pub fn as_triple(&self) -> Result<[u32; 3]> {
        match *self.dims.as_slice() {
            [a, b, c] if a > 0 && b > 0 && c > 0 => Ok([a, b, c]),
            _ => Err(Error::InvalidDimensions(format!(
                "3D block needs three positive dims, got {:?}",
                self.dims
            ))),
        }
    }
}

/// Families of 3D starting blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Block3dShape {
    #[serde(rename = "2x2")]
    TwoByTwo,
    #[serde(rename = "3xN")]
    ThreeByN,
    #[serde(rename = "3x3")]
    ThreeByThree,
}

impl FromStr for Block3dShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "2x2" => Ok(Block3dShape::TwoByTwo),
            "3xn" => Ok(Block3dShape::ThreeByN),
            "3x3" => Ok(Block3dShape::ThreeByThree),
            _ => Err(Error::InvalidInput(format!("unknown block shape {s:?} (expected 2x2, 3xN or 3x3)"))),
        }
    }
}

impl fmt::Display for Block3dShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block3dShape::TwoByTwo => "2x2",
            Block3dShape::ThreeByN => "3xN",
            Block3dShape::ThreeByThree => "3x3",
        })
    }
}

fn div_ceil(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn check_tr(tag: &'static str, t: u32, r: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidStrength(t));
    }
    if r == 0 || r > t {
        return Err(Error::hypothesis(tag, format!("need t >= r >= 1, got t={t}, r={r}")));
    }
    Ok(())
}

fn check_t_gt_r(tag: &'static str, t: u32, r: u32) -> Result<()> {
    check_tr(tag, t, r)?;
    if t == r {
        return Err(Error::hypothesis(tag, format!("need t > r, got t=r={t}")));
    }
    Ok(())
}

/// ⌈(n + r − 1)/(2t − r)⌉ for paths.
pub fn path_gamma(n: u32, t: u32, r: u32) -> Result<GammaResult> {
    const TAG: &str = "Thm1.1";
    check_tr(TAG, t, r)?;
    if n == 0 {
        return Err(Error::hypothesis(TAG, "need n >= 1"));
    }
    Ok(GammaResult::exact(path_value(n, t, r), TAG))
}

fn path_value(n: u32, t: u32, r: u32) -> u64 {
    div_ceil((n + r - 1) as u64, (2 * t - r) as u64)
}

/// Width `n0 = 2t − r − (m − 2)` of the two-tower starting block with `m` rows.
pub fn grid_block_width(m: u32, t: u32, r: u32) -> i64 {
    2 * t as i64 - r as i64 - (m as i64 - 2)
}

pub fn grid_starting_block_dims(m: u32, t: u32, r: u32) -> Result<BlockDims> {
    const TAG: &str = "Lemma3.2";
    check_tr(TAG, t, r)?;
    if m < 2 {
        return Err(Error::hypothesis(TAG, format!("need m >= 2, got {m}")));
    }
    let n0 = grid_block_width(m, t, r);
    if n0 <= 0 {
        return Err(Error::hypothesis(TAG, format!("2t-r-(m-2) = {n0} is not positive")));
    }
    Ok(BlockDims::new(vec![m, n0 as u32]))
}

/// `2 + ⌈(n − n0)/(n0 − 1)⌉` for `m × n` grids with `2t − r > m − 1`.
pub fn grid_gamma(m: u32, n: u32, t: u32, r: u32) -> Result<GammaResult> {
    const TAG: &str = "Thm1.2";
    check_tr(TAG, t, r)?;
    if m < 2 {
        return Err(Error::hypothesis(TAG, format!("need m >= 2, got {m}")));
    }
    if 2 * t - r < m {
        return Err(Error::hypothesis(TAG, format!("need 2t-r > m-1, got 2t-r={}, m={m}", 2 * t - r)));
    }
    let n0 = grid_block_width(m, t, r) as u32;
    if n < n0 {
        return Err(Error::hypothesis(TAG, format!("need n >= 2t-r-(m-2) = {n0}, got {n}")));
    }
    let value = 2 + div_ceil((n - n0) as u64, (n0 - 1) as u64);
    Ok(GammaResult::exact(value, TAG))
}

pub fn block3d_dims(shape: Block3dShape, t: u32, r: u32) -> Result<BlockDims> {
    match shape {
        Block3dShape::TwoByTwo => {
            let tag = if r == 1 { "Lemma4.2" } else { "Lemma4.3" };
            check_tr(tag, t, r)?;
            let k = 2 * t - r - 1;
            if k == 0 {
                return Err(Error::hypothesis(tag, "need 2t-r-1 >= 1"));
            }
            Ok(BlockDims::new(vec![2, 2, k]))
        }
        Block3dShape::ThreeByN => {
            const TAG: &str = "Thm4.5";
            check_tr(TAG, t, r)?;
            if t <= 2 {
                return Err(Error::hypothesis(TAG, format!("need t > 2, got {t}")));
            }
            Ok(BlockDims::new(vec![3, 2 * t - r - 2, 2]))
        }
        Block3dShape::ThreeByThree => {
            let tag = if r == 1 { "Thm4.6" } else { "Thm4.7" };
            if r > 2 {
                return Err(Error::UnsupportedShapeForR(r));
            }
            check_tr(tag, t, r)?;
            if t <= 2 {
                return Err(Error::hypothesis(tag, format!("need t > 2, got {t}")));
            }
            let k = if r == 1 { 2 * t - 4 } else { 2 * t - 5 };
            Ok(BlockDims::new(vec![3, 3, k]))
        }
    }
}

/// All triples `a <= b <= c` of positive integers with `a + b + c = q`.
///
/// Two towers at `(1,1,k)` and `(m,n,1)` dominate any box with
/// `m + n + k − 3 <= 2t − r`, so `q` may not exceed `2t − r + 3`.
pub fn block3d_family(q: u32, t: u32, r: u32) -> Result<Vec<BlockDims>> {
    const TAG: &str = "Thm4.4";
    check_tr(TAG, t, r)?;
    if q < 3 {
        return Err(Error::hypothesis(TAG, format!("need q >= 3, got {q}")));
    }
    if q - 3 > 2 * t - r {
        return Err(Error::hypothesis(
            TAG,
            format!("q = {q} exceeds the block sum 2t-r+3 = {}", 2 * t - r + 3),
        ));
    }
    let mut out = Vec::new();
    for a in 1..=q / 3 {
        for b in a..=(q - a) / 2 {
            let c = q - a - b;
            if c >= b {
                out.push(BlockDims::new(vec![a, b, c]));
            }
        }
    }
    Ok(out)
}

/// The orientation of `block` that needs the fewest translated copies to
/// cover an `m × n × k` box, with that count. Ties go to the
/// lexicographically smallest orientation.
pub fn best_block_orientation(m: u32, n: u32, k: u32, block: &BlockDims) -> Result<([u32; 3], u64)> {
    let [a, b, c] = block.as_triple()?;
    let perms = [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
    let count = |d: [u32; 3]| {
        div_ceil(m as u64, d[0] as u64) * div_ceil(n as u64, d[1] as u64) * div_ceil(k as u64, d[2] as u64)
    };
    let best = perms
        .iter()
        .map(|&d| (count(d), d))
        .min()
        .expect("six orientations");
    Ok((best.1, best.0))
}

/// `2B` where `B` is the number of blocks needed to cover the box.
pub fn grid3d_upper_bound(m: u32, n: u32, k: u32, t: u32, r: u32, block: &BlockDims) -> Result<GammaResult> {
    const TAG: &str = "Thm1.3";
    check_tr(TAG, t, r)?;
    if m == 0 || n == 0 || k == 0 {
        return Err(Error::InvalidDimensions(format!("box {m}x{n}x{k}")));
    }
    let triple = block.as_triple()?;
    let sum: u32 = triple.iter().sum();
    if sum - 3 > 2 * t - r {
        return Err(Error::hypothesis(
            TAG,
            format!("block {:?} is not a ({t},{r}) starting block", block.dims),
        ));
    }
    let (orient, b) = best_block_orientation(m, n, k, block)?;
    let mut res = GammaResult::bound(2 * b, TAG);
    res.notes.push(format!("{b} blocks of {}x{}x{}", orient[0], orient[1], orient[2]));
    Ok(res)
}

/// `γ_{2,1}(G_{2,2,k}) = k`.
pub fn grid3d_2_2_k_gamma(k: u32, t: u32, r: u32) -> Result<GammaResult> {
    const TAG: &str = "Thm4.1";
    if (t, r) != (2, 1) {
        return Err(Error::hypothesis(TAG, format!("only (t,r) = (2,1), got ({t},{r})")));
    }
    if k == 0 {
        return Err(Error::hypothesis(TAG, "need k >= 1"));
    }
    Ok(GammaResult::exact(k as u64, TAG))
}

/// Path formula on `m × n` king boards with `m <= 2(t − r) + 1`.
pub fn king_gamma(m: u32, n: u32, t: u32, r: u32) -> Result<GammaResult> {
    const TAG: &str = "Thm1.4";
    check_t_gt_r(TAG, t, r)?;
    if m == 0 || n == 0 {
        return Err(Error::InvalidDimensions(format!("king board {m}x{n}")));
    }
    if m > 2 * (t - r) + 1 {
        return Err(Error::hypothesis(TAG, format!("need m <= 2(t-r)+1 = {}, got {m}", 2 * (t - r) + 1)));
    }
    Ok(GammaResult::exact(path_value(n, t, r), TAG))
}

/// `⌈2(n + r − 1)/(4t − 2r − 1)⌉` for two-row slant grids.
pub fn slant_gamma_2xn(n: u32, t: u32, r: u32) -> Result<GammaResult> {
    const TAG: &str = "Thm5.7";
    check_t_gt_r(TAG, t, r)?;
    if n == 0 {
        return Err(Error::hypothesis(TAG, "need n >= 1"));
    }
    let value = div_ceil(2 * (n + r - 1) as u64, (4 * t - 2 * r - 1) as u64);
    Ok(GammaResult::exact(value, TAG))
}

/// One row of the slant upper-bound table: tile height `a`, tile width `b`
/// and coefficient `c`. The bounds are `(cq + 1)p` without remainders and
/// `(cq + c + 1)(p + 1)` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SlantTableRow {
    pub t: u32,
    pub r: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

pub const SLANT_TABLE: [SlantTableRow; 6] = [
    SlantTableRow { t: 2, r: 1, a: 2, b: 8, c: 4 },
    SlantTableRow { t: 3, r: 1, a: 3, b: 20, c: 7 },
    SlantTableRow { t: 3, r: 2, a: 2, b: 14, c: 6 },
    SlantTableRow { t: 4, r: 2, a: 3, b: 15, c: 14 },
    SlantTableRow { t: 4, r: 3, a: 2, b: 22, c: 8 },
    SlantTableRow { t: 5, r: 4, a: 2, b: 32, c: 10 },
];

pub fn slant_table_row(t: u32, r: u32) -> Result<SlantTableRow> {
    SLANT_TABLE
        .iter()
        .find(|row| row.t == t && row.r == r)
        .copied()
        .ok_or(Error::UnsupportedTRPair { t, r })
}

/// `m = ap + ℓ`, `n = bq + k` for a table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SlantDecomposition {
    pub p: u32,
    pub l: u32,
    pub q: u32,
    pub k: u32,
}

impl SlantTableRow {
    pub fn decompose(&self, m: u32, n: u32) -> SlantDecomposition {
        SlantDecomposition { p: m / self.a, l: m % self.a, q: n / self.b, k: n % self.b }
    }

    pub fn bound(&self, d: SlantDecomposition) -> u64 {
        let (c, p, q) = (self.c as u64, d.p as u64, d.q as u64);
        if d.l == 0 && d.k == 0 {
            (c * q + 1) * p
        } else {
            (c * q + c + 1) * (p + 1)
        }
    }

    pub fn tag(&self) -> String {
        format!("Table1-({},{})", self.t, self.r)
    }
}

pub fn slant_upper_bound(m: u32, n: u32, t: u32, r: u32) -> Result<GammaResult> {
    let row = slant_table_row(t, r)?;
    if m == 0 || n == 0 {
        return Err(Error::InvalidDimensions(format!("slant grid {m}x{n}")));
    }
    let d = row.decompose(m, n);
    let mut res = GammaResult::bound(row.bound(d), row.tag());
    res.notes.push(format!("m = {}p+l, n = {}q+k with p={}, l={}, q={}, k={}", row.a, row.b, d.p, d.l, d.q, d.k));
    if (d.l == 0) != (d.k == 0) {
        res.notes
            .push("exactly one remainder is nonzero; the remainder column is applied".into());
    }
    Ok(res)
}

/// The path formula as an upper bound for cycles.
pub fn cycle_upper_bound(n: u32, t: u32, r: u32) -> Result<GammaResult> {
    const TAG: &str = "Cor6.1";
    check_tr(TAG, t, r)?;
    if n < 3 {
        return Err(Error::hypothesis(TAG, format!("need n >= 3, got {n}")));
    }
    Ok(GammaResult::bound(path_value(n, t, r), TAG))
}

/// Σ of path values over an edge-disjoint path cover of a tree's edges.
///
/// Each part lists vertex labels in walk order. A one-vertex part is only
/// accepted for the one-vertex tree.
pub fn tree_decomposition_bound(
    tree: &GraphInstance,
    decomposition: &[Vec<u32>],
    t: u32,
    r: u32,
) -> Result<GammaResult> {
    const TAG: &str = "Cor6.2";
    check_tr(TAG, t, r)?;
    let nv = tree.vertex_count();
    let is_tree_family = matches!(tree.family(), GraphFamily::Tree { .. } | GraphFamily::Path { .. });
    if !is_tree_family || tree.edge_count() + 1 != nv || !tree.is_connected() {
        return Err(Error::NotAPathDecomposition(format!("{} is not a tree", tree.family())));
    }
    let bad = |msg: String| Err(Error::NotAPathDecomposition(msg));
    let mut used = std::collections::BTreeSet::new();
    let mut value = 0u64;
    for (pi, part) in decomposition.iter().enumerate() {
        if part.is_empty() {
            return bad(format!("part {pi} is empty"));
        }
        if part.len() == 1 && nv > 1 {
            return bad(format!("part {pi} has no edge"));
        }
        let mut idx = Vec::with_capacity(part.len());
        for &label in part {
            match tree.index_of(&VertexId::Index(label)) {
                Some(i) if !idx.contains(&i) => idx.push(i),
                Some(_) => return bad(format!("part {pi} repeats vertex {label}")),
                None => return bad(format!("part {pi} names unknown vertex {label}")),
            }
        }
        for w in idx.windows(2) {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            if !tree.neighbors(a).contains(&b) {
                return bad(format!("part {pi}: {} and {} are not adjacent", a + 1, b + 1));
            }
            if !used.insert((a, b)) {
                return bad(format!("edge [{},{}] is covered twice", a + 1, b + 1));
            }
        }
        value += path_value(part.len() as u32, t, r);
    }
    if nv == 1 && decomposition.is_empty() {
        return bad("the single vertex is not covered".into());
    }
    if used.len() != tree.edge_count() {
        return bad(format!("{} of {} edges covered", used.len(), tree.edge_count()));
    }
    let mut res = GammaResult::bound(value, TAG);
    res.notes.push(format!("{} paths", decomposition.len()));
    Ok(res)
}
