//! Graph families and their distance queries.
//!
//! Vertices are addressed by 1-indexed coordinates: a single index for paths,
//! cycles and trees, `(row, col)` for the planar families and
//! `(row, col, layer)` for 3D grids. Internally every instance stores its
//! vertices in row-major (lexicographic coordinate) order and works with dense
//! indices into that order.
//!
//! The slant grid carries one diagonal per unit cell, joining `(r, c)` to
//! `(r + 1, c + 1)`. The matching infinite lattice uses `x = col - 1`,
//! `y = row - 1`, so its diagonal joins `(x, y)` to `(x + 1, y + 1)`.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite graph family with its dimensions. Serializes to the graph spec
/// JSON, e.g. `{"family":"grid","m":3,"n":5}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum GraphFamily {
    Path { n: u32 },
    Cycle { n: u32 },
    Grid { m: u32, n: u32 },
    Grid3d { m: u32, n: u32, k: u32 },
    Slant { m: u32, n: u32 },
    King { m: u32, n: u32 },
    Tree { edges: Vec<[u32; 2]> },
}

impl GraphFamily {
    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Path { .. } => "path",
            GraphFamily::Cycle { .. } => "cycle",
            GraphFamily::Grid { .. } => "grid",
            GraphFamily::Grid3d { .. } => "grid3d",
            GraphFamily::Slant { .. } => "slant",
            GraphFamily::King { .. } => "king",
            GraphFamily::Tree { .. } => "tree",
        }
    }

    /// Dimensions of the coordinate box, one entry per axis. Trees report
    /// their vertex count.
    pub fn dims(&self) -> Vec<u32> {
        match *self {
            GraphFamily::Path { n } | GraphFamily::Cycle { n } => vec![n],
            GraphFamily::Grid { m, n } | GraphFamily::Slant { m, n } | GraphFamily::King { m, n } => {
                vec![m, n]
            }
            GraphFamily::Grid3d { m, n, k } => vec![m, n, k],
            GraphFamily::Tree { ref edges } => vec![edges.len() as u32 + 1],
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Path { n } => write!(f, "P_{n}"),
            GraphFamily::Cycle { n } => write!(f, "C_{n}"),
            GraphFamily::Grid { m, n } => write!(f, "G_{{{m},{n}}}"),
            GraphFamily::Grid3d { m, n, k } => write!(f, "G_{{{m},{n},{k}}}"),
            GraphFamily::Slant { m, n } => write!(f, "S_{{{m},{n}}}"),
            GraphFamily::King { m, n } => write!(f, "K_{{{m},{n}}}"),
            GraphFamily::Tree { edges } => write!(f, "T[{}]", edges.len() + 1),
        }
    }
}

/// 1-indexed vertex coordinate.
///
/// JSON form: a bare integer for single-index families, an array for the
/// others (`[row, col]`, `[row, col, layer]`). A one-element array is also
/// accepted on input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexId {
    Index(u32),
    Cell(u32, u32),
    Voxel(u32, u32, u32),
}

impl VertexId {
    pub fn coords(&self) -> Vec<u32> {
        match *self {
            VertexId::Index(i) => vec![i],
            VertexId::Cell(r, c) => vec![r, c],
            VertexId::Voxel(r, c, l) => vec![r, c, l],
        }
    }

    pub fn from_coords(coords: &[u32]) -> Result<Self> {
        match *coords {
            [i] => Ok(VertexId::Index(i)),
            [r, c] => Ok(VertexId::Cell(r, c)),
            [r, c, l] => Ok(VertexId::Voxel(r, c, l)),
            _ => Err(Error::InvalidInput(format!(
                "vertex coordinates must have 1 to 3 entries, got {}",
                coords.len()
            ))),
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Index(i) => write!(f, "{i}"),
            VertexId::Cell(r, c) => write!(f, "({r},{c})"),
            VertexId::Voxel(r, c, l) => write!(f, "({r},{c},{l})"),
        }
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            VertexId::Index(i) => serializer.serialize_u32(i),
            _ => {
                let coords = self.coords();
                let mut seq = serializer.serialize_seq(Some(coords.len()))?;
                for c in coords {
                    seq.serialize_element(&c)?;
                }
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Arr(Vec<u32>),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(i) => Ok(VertexId::Index(i)),
            Raw::Arr(v) => VertexId::from_coords(&v).map_err(de::Error::custom),
        }
    }
}

/// Point on an infinite king or slant lattice. Signed, origin-anchored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from([x, y]: [i64; 2]) -> Self {
        LatticePoint { x, y }
    }
}

impl From<LatticePoint> for [i64; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Chebyshev distance on the infinite king's lattice.
pub fn king_distance(p: LatticePoint, q: LatticePoint) -> u64 {
    (p.x - q.x).unsigned_abs().max((p.y - q.y).unsigned_abs())
}

/// Distance on the infinite slant lattice (diagonal along `(+1, +1)`).
///
/// When both offsets share a sign the diagonal absorbs the shorter one;
/// otherwise the diagonal never helps and the walk is axis-aligned.
pub fn slant_lattice_distance(p: LatticePoint, q: LatticePoint) -> u64 {
    let dx = q.x - p.x;
    let dy = q.y - p.y;
    if (dx > 0 && dy > 0) || (dx < 0 && dy < 0) {
        dx.unsigned_abs().max(dy.unsigned_abs())
    } else {
        dx.unsigned_abs() + dy.unsigned_abs()
    }
}

/// A concrete finite graph built from a [`GraphFamily`].
///
/// Instances are immutable once built. Per-source BFS vectors are cached
/// lazily in `OnceLock` slots, one per vertex, so concurrent readers either
/// see a finished vector or compute an identical one.
pub struct GraphInstance {
    family: GraphFamily,
    vertices: Vec<VertexId>,
    adjacency: Vec<Vec<usize>>,
    bfs_cache: Vec<OnceLock<Box<[u32]>>>,
}

impl Clone for GraphInstance {
    fn clone(&self) -> Self {
        GraphInstance {
            family: self.family.clone(),
            vertices: self.vertices.clone(),
            adjacency: self.adjacency.clone(),
            bfs_cache: (0..self.vertices.len()).map(|_| OnceLock::new()).collect(),
        }
    }
}

impl fmt::Debug for GraphInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphInstance")
            .field("family", &self.family)
            .field("vertex_count", &self.vertex_count())
            .field("edge_count", &self.edge_count())
            .finish()
    }
}

/// Build a graph instance; see [`GraphInstance::build`].
pub fn build(family: &GraphFamily) -> Result<GraphInstance> {
    GraphInstance::build(family.clone())
}

fn check_positive(family: &GraphFamily) -> Result<()> {
    if let GraphFamily::Tree { .. } = family {
        return Ok(());
    }
    if family.dims().contains(&0) {
        return Err(Error::InvalidDimensions(format!(
            "{} dimensions must all be at least 1, got {:?}",
            family.name(),
            family.dims()
        )));
    }
    Ok(())
}

impl GraphInstance {
    pub fn build(family: GraphFamily) -> Result<Self> {
        check_positive(&family)?;
        let (vertices, edges) = match family {
            GraphFamily::Path { n } => {
                let vs = (1..=n).map(VertexId::Index).collect();
                let es = (0..n as usize - 1).map(|i| (i, i + 1)).collect();
                (vs, es)
            }
            GraphFamily::Cycle { n } => {
                let vs = (1..=n).map(VertexId::Index).collect();
                let mut es: Vec<(usize, usize)> = (0..n as usize - 1).map(|i| (i, i + 1)).collect();
                if n >= 3 {
                    es.push((n as usize - 1, 0));
                }
                (vs, es)
            }
            GraphFamily::Grid { m, n } => planar(m, n, &[(0, 1), (1, 0)]),
            GraphFamily::Slant { m, n } => planar(m, n, &[(0, 1), (1, 0), (1, 1)]),
            GraphFamily::King { m, n } => planar(m, n, &[(0, 1), (1, 0), (1, 1), (1, -1)]),
            GraphFamily::Grid3d { m, n, k } => {
                let mut vs = Vec::with_capacity((m * n * k) as usize);
                for r in 1..=m {
                    for c in 1..=n {
                        for l in 1..=k {
                            vs.push(VertexId::Voxel(r, c, l));
                        }
                    }
                }
                let idx = |r: u32, c: u32, l: u32| (((r - 1) * n + (c - 1)) * k + (l - 1)) as usize;
                let mut es = Vec::new();
                for r in 1..=m {
                    for c in 1..=n {
                        for l in 1..=k {
                            if r < m {
                                es.push((idx(r, c, l), idx(r + 1, c, l)));
                            }
                            if c < n {
                                es.push((idx(r, c, l), idx(r, c + 1, l)));
                            }
                            if l < k {
                                es.push((idx(r, c, l), idx(r, c, l + 1)));
                            }
                        }
                    }
                }
                (vs, es)
            }
            GraphFamily::Tree { ref edges } => tree_edges(edges)?,
        };
        let nv = vertices.len();
        let mut adjacency = vec![Vec::new(); nv];
        for (a, b) in edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(GraphInstance {
            family,
            vertices,
            adjacency,
            bfs_cache: (0..nv).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn family(&self) -> &GraphFamily {
        &self.family
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Vertices in row-major order; position in this slice is the dense index.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> VertexId {
        self.vertices[index]
    }

    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.adjacency[index]
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.index_of(v).is_some()
    }

    /// Dense index of a coordinate, or `None` if it is not a vertex.
    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        let in_range = |x: u32, hi: u32| (1..=hi).contains(&x);
        match (&self.family, *v) {
            (GraphFamily::Path { n } | GraphFamily::Cycle { n }, VertexId::Index(i)) => {
                in_range(i, *n).then(|| (i - 1) as usize)
            }
            (GraphFamily::Tree { .. }, VertexId::Index(i)) => {
                in_range(i, self.vertices.len() as u32).then(|| (i - 1) as usize)
            }
            (
                GraphFamily::Grid { m, n } | GraphFamily::Slant { m, n } | GraphFamily::King { m, n },
                VertexId::Cell(r, c),
            ) => (in_range(r, *m) && in_range(c, *n)).then(|| ((r - 1) * n + (c - 1)) as usize),
            (GraphFamily::Grid3d { m, n, k }, VertexId::Voxel(r, c, l)) => {
                (in_range(r, *m) && in_range(c, *n) && in_range(l, *k))
                    .then(|| (((r - 1) * n + (c - 1)) * k + (l - 1)) as usize)
            }
            _ => None,
        }
    }

    pub fn require_index(&self, v: &VertexId) -> Result<usize> {
        self.index_of(v).ok_or(Error::UnknownVertex(*v))
    }

    /// Shortest-path distance between two vertices.
    ///
    /// Path, cycle, grid, 3D grid and slant queries use their closed forms;
    /// king boards and trees go through the BFS cache.
    pub fn distance(&self, u: &VertexId, v: &VertexId) -> Result<u32> {
        let a = self.require_index(u)?;
        let b = self.require_index(v)?;
        Ok(self.dist(a, b))
    }

    /// Distance via BFS only, ignoring any closed form.
    pub fn bfs_distance(&self, u: &VertexId, v: &VertexId) -> Result<u32> {
        let a = self.require_index(u)?;
        let b = self.require_index(v)?;
        Ok(self.distances_from(a)[b])
    }

    /// The family's closed-form distance, when it has one. King boards report
    /// the Chebyshev distance here even though [`Self::distance`] uses BFS.
    pub fn closed_form_distance(&self, u: &VertexId, v: &VertexId) -> Option<u32> {
        let a = self.index_of(u)?;
        let b = self.index_of(v)?;
        self.closed_form(a, b)
    }

    fn closed_form(&self, a: usize, b: usize) -> Option<u32> {
        let (u, v) = (self.vertices[a], self.vertices[b]);
        let d = |x: u32, y: u32| x.abs_diff(y);
        match (&self.family, u, v) {
            (GraphFamily::Path { .. }, VertexId::Index(i), VertexId::Index(j)) => Some(d(i, j)),
            (GraphFamily::Cycle { n }, VertexId::Index(i), VertexId::Index(j)) => {
                let delta = d(i, j);
                Some(delta.min(n - delta))
            }
            (GraphFamily::Grid { .. }, VertexId::Cell(r1, c1), VertexId::Cell(r2, c2)) => {
                Some(d(r1, r2) + d(c1, c2))
            }
            (GraphFamily::Grid3d { .. }, VertexId::Voxel(r1, c1, l1), VertexId::Voxel(r2, c2, l2)) => {
                Some(d(r1, r2) + d(c1, c2) + d(l1, l2))
            }
            (GraphFamily::King { .. }, VertexId::Cell(r1, c1), VertexId::Cell(r2, c2)) => {
                Some(d(r1, r2).max(d(c1, c2)))
            }
            (GraphFamily::Slant { .. }, VertexId::Cell(r1, c1), VertexId::Cell(r2, c2)) => {
                let p = LatticePoint::new(c1 as i64 - 1, r1 as i64 - 1);
                let q = LatticePoint::new(c2 as i64 - 1, r2 as i64 - 1);
                Some(slant_lattice_distance(p, q) as u32)
            }
            _ => None,
        }
    }

    /// Index-level distance used by the hot paths.
    pub fn dist(&self, a: usize, b: usize) -> u32 {
        match self.family {
            GraphFamily::King { .. } | GraphFamily::Tree { .. } => self.distances_from(a)[b],
            _ => self
                .closed_form(a, b)
                .unwrap_or_else(|| self.distances_from(a)[b]),
        }
    }

    /// BFS distances from `source` to every vertex, cached per source.
    pub fn distances_from(&self, source: usize) -> &[u32] {
        self.bfs_cache[source].get_or_init(|| self.bfs(source))
    }

    fn bfs(&self, source: usize) -> Box<[u32]> {
        let mut dist = vec![u32::MAX; self.vertices.len()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist.into_boxed_slice()
    }

    /// Full distance matrix, `matrix[a][b] = dist(a, b)`.
    pub fn distance_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.vertices.len();
        (0..n).map(|a| (0..n).map(|b| self.dist(a, b)).collect()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || self.distances_from(0).iter().all(|&d| d != u32::MAX)
    }

    /// Undirected edges as index pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }
}

type VerticesAndEdges = (Vec<VertexId>, Vec<(usize, usize)>);

fn planar(m: u32, n: u32, steps: &[(i64, i64)]) -> VerticesAndEdges {
    let mut vs = Vec::with_capacity((m * n) as usize);
    for r in 1..=m {
        for c in 1..=n {
            vs.push(VertexId::Cell(r, c));
        }
    }
    let mut es = Vec::new();
    for r in 1..=m as i64 {
        for c in 1..=n as i64 {
            for &(dr, dc) in steps {
                let (r2, c2) = (r + dr, c + dc);
                if (1..=m as i64).contains(&r2) && (1..=n as i64).contains(&c2) {
                    let a = ((r - 1) * n as i64 + (c - 1)) as usize;
                    let b = ((r2 - 1) * n as i64 + (c2 - 1)) as usize;
                    es.push((a, b));
                }
            }
        }
    }
    (vs, es)
}

fn tree_edges(edges: &[[u32; 2]]) -> Result<VerticesAndEdges> {
    let nv = edges.len() + 1;
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut es = Vec::with_capacity(edges.len());
    for &[a, b] in edges {
        for label in [a, b] {
            if label == 0 || label as usize > nv {
                return Err(Error::DisconnectedTree(format!(
                    "label {label} outside 1..={nv} (a tree with {} edges has exactly {nv} vertices)",
                    edges.len()
                )));
            }
        }
        if a == b {
            return Err(Error::DisconnectedTree(format!("self-loop at {a}")));
        }
        let (x, y) = (a as usize - 1, b as usize - 1);
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx == ry {
            return Err(Error::DisconnectedTree(format!("edge [{a},{b}] closes a cycle")));
        }
        parent[rx] = ry;
        es.push((x, y));
    }
    // |E| = |V| - 1 with no cycle forces a single component.
    let vs = (1..=nv as u32).map(VertexId::Index).collect();
    Ok((vs, es))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(r: u32, c: u32) -> VertexId {
        VertexId::Cell(r, c)
    }

    #[test]
    fn build_counts() {
        let g = build(&GraphFamily::Grid { m: 2, n: 3 }).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
        let k = build(&GraphFamily::King { m: 2, n: 2 }).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (4, 6));
        let s = build(&GraphFamily::Slant { m: 2, n: 2 }).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (4, 5));
        let g3 = build(&GraphFamily::Grid3d { m: 2, n: 2, k: 3 }).unwrap();
        assert_eq!((g3.vertex_count(), g3.edge_count()), (12, 4 * 3 + 4 * 2));
        let c = build(&GraphFamily::Cycle { n: 5 }).unwrap();
        assert_eq!(c.edge_count(), 5);
    }

    #[test]
    fn degenerate_cycles() {
        assert_eq!(build(&GraphFamily::Cycle { n: 1 }).unwrap().edge_count(), 0);
        assert_eq!(build(&GraphFamily::Cycle { n: 2 }).unwrap().edge_count(), 1);
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(matches!(
            build(&GraphFamily::Grid { m: 0, n: 3 }),
            Err(Error::InvalidDimensions(_))
        ));
        assert!(matches!(
            build(&GraphFamily::Path { n: 0 }),
            Err(Error::InvalidDimensions(_))
        ));
    }

    #[test]
    fn bad_trees_rejected() {
        let cyc = GraphFamily::Tree { edges: vec![[1, 2], [2, 3], [3, 1]] };
        assert!(matches!(build(&cyc), Err(Error::DisconnectedTree(_))));
        let far = GraphFamily::Tree { edges: vec![[1, 2], [3, 4]] };
        assert!(matches!(build(&far), Err(Error::DisconnectedTree(_))));
        let ok = GraphFamily::Tree { edges: vec![[1, 2], [2, 3]] };
        assert_eq!(build(&ok).unwrap().vertex_count(), 3);
        let single = GraphFamily::Tree { edges: vec![] };
        assert_eq!(build(&single).unwrap().vertex_count(), 1);
    }

    #[test]
    fn distance_examples() {
        let k = build(&GraphFamily::King { m: 5, n: 5 }).unwrap();
        assert_eq!(k.distance(&cell(1, 1), &cell(4, 2)).unwrap(), 3);
        let p = build(&GraphFamily::Path { n: 7 }).unwrap();
        assert_eq!(p.distance(&VertexId::Index(2), &VertexId::Index(2)).unwrap(), 0);
        let s = build(&GraphFamily::Slant { m: 4, n: 4 }).unwrap();
        assert_eq!(s.distance(&cell(1, 1), &cell(3, 3)).unwrap(), 2);
        assert_eq!(s.bfs_distance(&cell(1, 1), &cell(3, 3)).unwrap(), 2);
        // against the diagonal
        assert_eq!(s.distance(&cell(3, 1), &cell(1, 3)).unwrap(), 4);
    }

    #[test]
    fn unknown_vertex() {
        let g = build(&GraphFamily::Grid { m: 2, n: 2 }).unwrap();
        assert!(matches!(
            g.distance(&cell(3, 1), &cell(1, 1)),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            g.distance(&VertexId::Index(1), &cell(1, 1)),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn lattice_distance_examples() {
        let o = LatticePoint::new(0, 0);
        assert_eq!(king_distance(o, LatticePoint::new(3, 1)), 3);
        assert_eq!(king_distance(o, o), 0);
        assert_eq!(king_distance(LatticePoint::new(-2, 5), LatticePoint::new(1, 5)), 3);
        assert_eq!(slant_lattice_distance(o, LatticePoint::new(3, 3)), 3);
        assert_eq!(slant_lattice_distance(o, LatticePoint::new(2, -2)), 4);
        assert_eq!(slant_lattice_distance(o, LatticePoint::new(0, 4)), 4);
    }

    #[test]
    fn vertex_json_forms() {
        let v: VertexId = serde_json::from_str("[1,2]").unwrap();
        assert_eq!(v, cell(1, 2));
        let v: VertexId = serde_json::from_str("4").unwrap();
        assert_eq!(v, VertexId::Index(4));
        let v: VertexId = serde_json::from_str("[4]").unwrap();
        assert_eq!(v, VertexId::Index(4));
        assert!(serde_json::from_str::<VertexId>("[1,2,3,4]").is_err());
        assert_eq!(serde_json::to_string(&VertexId::Voxel(1, 2, 3)).unwrap(), "[1,2,3]");
        assert_eq!(serde_json::to_string(&VertexId::Index(7)).unwrap(), "7");
    }

    #[test]
    fn family_json() {
        let f: GraphFamily = serde_json::from_str(r#"{"family":"grid","m":3,"n":5}"#).unwrap();
        assert_eq!(f, GraphFamily::Grid { m: 3, n: 5 });
        let t: GraphFamily = serde_json::from_str(r#"{"family":"tree","edges":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(t, GraphFamily::Tree { edges: vec![[1, 2], [2, 3]] });
        let g3: GraphFamily = serde_json::from_str(r#"{"family":"grid3d","m":2,"n":2,"k":5}"#).unwrap();
        assert_eq!(g3, GraphFamily::Grid3d { m: 2, n: 2, k: 5 });
    }
}
