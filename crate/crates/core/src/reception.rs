//! Signal accounting for a tower set: f(v) = Σ_w max(0, t − d(v, w)).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphInstance, VertexId};

/// Towers of a common strength `t`. JSON: `{"t":3,"towers":[[1,2],[2,5]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerSet {
    pub t: u32,
    pub towers: Vec<VertexId>,
}

impl TowerSet {
    pub fn new(t: u32, towers: Vec<VertexId>) -> Self {
        TowerSet { t, towers }
    }

    pub fn len(&self) -> usize {
        self.towers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.towers.is_empty()
    }

    /// Resolve towers to dense indices, rejecting strength 0, towers outside
    /// `g` and repeats.
    pub fn indices_in(&self, g: &GraphInstance) -> Result<Vec<usize>> {
        if self.t == 0 {
            return Err(Error::InvalidStrength(self.t));
        }
        let mut seen = vec![false; g.vertex_count()];
        let mut out = Vec::with_capacity(self.towers.len());
        for v in &self.towers {
            let i = g.index_of(v).ok_or(Error::TowerOutsideGraph(*v))?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::DuplicateTower(*v));
            }
            out.push(i);
        }
        Ok(out)
    }
}

/// Reception of every vertex, in the graph's row-major vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReceptionMap {
    pub t: u32,
    pub vertices: Vec<VertexId>,
    pub reception: Vec<u32>,
}

impl ReceptionMap {
    pub fn get(&self, v: &VertexId) -> Option<u32> {
        self.vertices.iter().position(|u| u == v).map(|i| self.reception[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.vertices.iter().copied().zip(self.reception.iter().copied())
    }

    pub fn min(&self) -> u32 {
        self.reception.iter().copied().min().unwrap_or(0)
    }
}

/// Outcome of checking a tower set against a reception requirement `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub t: u32,
    pub r: u32,
    pub tower_count: usize,
    /// Number of vertices the verdict covers (the whole graph, or a window interior).
    pub checked_vertices: usize,
    pub dominated: bool,
    pub min_reception: u32,
    pub deficient: Vec<VertexId>,
    pub overlap_vertices: Vec<VertexId>,
    pub efficient: bool,
    /// Σ max(0, f(v) − r) over overlap vertices only.
    pub wasted_signal: u64,
    /// Σ max(0, f(v) − r) over every checked vertex.
    pub total_excess: u64,
    /// Set when r > t: no single zone can satisfy a vertex on its own.
    pub r_exceeds_t: bool,
}

/// Raw reception vector for towers given as dense indices.
pub fn reception_vector(g: &GraphInstance, towers: &[usize], t: u32) -> Vec<u32> {
    let mut rec = vec![0u32; g.vertex_count()];
    for &w in towers {
        for (v, slot) in rec.iter_mut().enumerate() {
            *slot += t.saturating_sub(g.dist(w, v));
        }
    }
    rec
}

pub fn compute_reception(g: &GraphInstance, ts: &TowerSet) -> Result<ReceptionMap> {
    let idx = ts.indices_in(g)?;
    Ok(ReceptionMap {
        t: ts.t,
        vertices: g.vertices().to_vec(),
        reception: reception_vector(g, &idx, ts.t),
    })
}

pub fn verify(g: &GraphInstance, ts: &TowerSet, r: u32) -> Result<VerificationReport> {
    let region: Vec<usize> = (0..g.vertex_count()).collect();
    verify_region(g, ts, r, &region)
}

/// Like [`verify`], but the verdict only looks at the vertices in `region`.
/// Towers outside the region still contribute signal.
pub fn verify_region(
    g: &GraphInstance,
    ts: &TowerSet,
    r: u32,
    region: &[usize],
) -> Result<VerificationReport> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    let idx = ts.indices_in(g)?;
    let t = ts.t;
    let rec = reception_vector(g, &idx, t);

    let mut deficient = Vec::new();
    let mut overlap_vertices = Vec::new();
    let mut overlap_exact = true;
    let mut wasted_signal = 0u64;
    let mut total_excess = 0u64;
    let mut min_reception = u32::MAX;

    for &v in region {
        let f = rec[v];
        min_reception = min_reception.min(f);
        let excess = f.saturating_sub(r) as u64;
        total_excess += excess;
        if f < r {
            deficient.push(g.vertex(v));
        }
        // zone N_{t-1}(w) = vertices at distance <= t-1, i.e. receiving > 0
        let zones = idx.iter().filter(|&&w| g.dist(w, v) < t).take(2).count();
        if zones >= 2 {
            overlap_vertices.push(g.vertex(v));
            wasted_signal += excess;
            if f != r {
                overlap_exact = false;
            }
        }
    }
    if region.is_empty() {
        min_reception = 0;
    }
    let dominated = deficient.is_empty();
    Ok(VerificationReport {
        t,
        r,
        tower_count: idx.len(),
        checked_vertices: region.len(),
        dominated,
        min_reception,
        deficient,
        overlap_vertices,
        efficient: dominated && overlap_exact,
        wasted_signal,
        total_excess,
        r_exceeds_t: r > t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, GraphFamily};
    use proptest::prelude::*;

    fn path(n: u32) -> GraphInstance {
        build(&GraphFamily::Path { n }).unwrap()
    }

    fn ix(v: &[u32]) -> Vec<VertexId> {
        v.iter().map(|&i| VertexId::Index(i)).collect()
    }

    #[test]
    fn path3_center() {
        let m = compute_reception(&path(3), &TowerSet::new(2, ix(&[2]))).unwrap();
        assert_eq!(m.reception, vec![1, 2, 1]);
    }

    #[test]
    fn path5_ends() {
        let m = compute_reception(&path(5), &TowerSet::new(3, ix(&[1, 5]))).unwrap();
        assert_eq!(m.get(&VertexId::Index(3)), Some(2));
    }

    #[test]
    fn grid_2x3_two_corners() {
        let g = build(&GraphFamily::Grid { m: 2, n: 3 }).unwrap();
        let ts = TowerSet::new(2, vec![VertexId::Cell(1, 1), VertexId::Cell(2, 3)]);
        let m = compute_reception(&g, &ts).unwrap();
        assert!(m.reception.iter().all(|&f| f >= 1));
        assert_eq!(m.get(&VertexId::Cell(1, 1)), Some(2));
        assert_eq!(m.get(&VertexId::Cell(2, 3)), Some(2));
        let rep = verify(&g, &ts, 1).unwrap();
        assert!(rep.dominated && rep.efficient);
    }

    #[test]
    fn empty_towers() {
        let rep = verify(&path(4), &TowerSet::new(2, vec![]), 1).unwrap();
        assert!(!rep.dominated);
        assert_eq!(rep.deficient, ix(&[1, 2, 3, 4]));
        assert_eq!(rep.min_reception, 0);
    }

    #[test]
    fn path5_center_misses_ends() {
        let rep = verify(&path(5), &TowerSet::new(2, ix(&[3])), 1).unwrap();
        assert!(!rep.dominated);
        assert_eq!(rep.deficient, ix(&[1, 5]));
    }

    #[test]
    fn rejects_bad_towers() {
        let g = path(3);
        assert!(matches!(
            verify(&g, &TowerSet::new(2, ix(&[4])), 1),
            Err(Error::TowerOutsideGraph(_))
        ));
        assert!(matches!(
            verify(&g, &TowerSet::new(2, ix(&[1, 1])), 1),
            Err(Error::DuplicateTower(_))
        ));
        assert!(matches!(
            verify(&g, &TowerSet::new(0, ix(&[1])), 1),
            Err(Error::InvalidStrength(0))
        ));
    }

    #[test]
    fn r_above_t_flagged_not_rejected() {
        // two t=1 towers never overlap, so r=2 is unreachable but still reported
        let rep = verify(&path(2), &TowerSet::new(1, ix(&[1, 2])), 2).unwrap();
        assert!(rep.r_exceeds_t);
        assert!(!rep.dominated);
    }

    #[test]
    fn wasted_vs_total_excess() {
        // P_3, t=2, towers {1,3}: f = (2,2,2); vertex 2 is the only overlap
        let rep = verify(&path(3), &TowerSet::new(2, ix(&[1, 3])), 1).unwrap();
        assert_eq!(rep.overlap_vertices, ix(&[2]));
        assert_eq!(rep.wasted_signal, 1);
        assert_eq!(rep.total_excess, 3);
        assert!(!rep.efficient);
    }

    fn small_family() -> impl Strategy<Value = GraphFamily> {
        prop_oneof![
            (1u32..12).prop_map(|n| GraphFamily::Path { n }),
            (3u32..12).prop_map(|n| GraphFamily::Cycle { n }),
            (1u32..5, 1u32..5).prop_map(|(m, n)| GraphFamily::Grid { m, n }),
            (1u32..5, 1u32..5).prop_map(|(m, n)| GraphFamily::Slant { m, n }),
            (1u32..5, 1u32..5).prop_map(|(m, n)| GraphFamily::King { m, n }),
        ]
    }

    proptest! {
        #[test]
        fn additive_and_monotone(fam in small_family(), t in 1u32..5, mask in any::<u32>()) {
            let g = build(&fam).unwrap();
            let n = g.vertex_count();
            let a: Vec<usize> = (0..n).filter(|i| mask >> (i % 32) & 1 == 1 && i % 2 == 0).collect();
            let b: Vec<usize> = (0..n).filter(|i| mask >> (i % 32) & 1 == 1 && i % 2 == 1).collect();
            let ra = reception_vector(&g, &a, t);
            let rb = reception_vector(&g, &b, t);
            let both: Vec<usize> = a.iter().chain(&b).copied().collect();
            let rab = reception_vector(&g, &both, t);
            for v in 0..n {
                prop_assert_eq!(rab[v], ra[v] + rb[v]);
                prop_assert!(rab[v] >= ra[v]);
            }
        }

        #[test]
        fn far_towers_contribute_nothing(fam in small_family(), t in 1u32..5, w in any::<prop::sample::Index>()) {
            let g = build(&fam).unwrap();
            let w = w.index(g.vertex_count());
            let rec = reception_vector(&g, &[w], t);
            for v in 0..g.vertex_count() {
                if g.dist(w, v) >= t {
                    prop_assert_eq!(rec[v], 0);
                }
            }
        }

        #[test]
        fn report_consistency(fam in small_family(), t in 1u32..4, r in 1u32..4, mask in any::<u32>()) {
            let g = build(&fam).unwrap();
            let towers: Vec<VertexId> = (0..g.vertex_count())
                .filter(|i| mask >> (i % 32) & 1 == 1)
                .map(|i| g.vertex(i))
                .collect();
            let rep = verify(&g, &TowerSet::new(t, towers), r).unwrap();
            prop_assert_eq!(rep.dominated, rep.deficient.is_empty());
            prop_assert_eq!(rep.dominated, rep.min_reception >= r);
            prop_assert!(rep.wasted_signal <= rep.total_excess);
            if rep.efficient {
                prop_assert!(rep.dominated);
                prop_assert_eq!(rep.wasted_signal, 0);
            }
        }
    }
}
