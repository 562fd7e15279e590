//! Cross-checks against a second, deliberately naive implementation built
//! from coordinates with Floyd-Warshall distances and plain subset search.

use broadcast_domination::closed_forms::{self, BlockDims};
use broadcast_domination::constructors::{self, LatticeKind};
use broadcast_domination::graph::{king_distance, slant_lattice_distance};
use broadcast_domination::{build, solve, GraphFamily, LatticePoint, SolverConfig, VertexId};

const INF: u32 = u32::MAX / 4;

struct Naive {
    labels: Vec<VertexId>,
    d: Vec<Vec<u32>>,
}

impl Naive {
    fn new(labels: Vec<VertexId>, adjacent: impl Fn(&VertexId, &VertexId) -> bool) -> Self {
        let n = labels.len();
        let mut d = vec![vec![INF; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    d[i][j] = 0;
                } else if adjacent(&labels[i], &labels[j]) {
                    d[i][j] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        Naive { labels, d }
    }

    fn cells(m: u32, n: u32, adjacent: fn(i64, i64) -> bool) -> Self {
        let labels = (1..=m).flat_map(|r| (1..=n).map(move |c| VertexId::Cell(r, c))).collect();
        Naive::new(labels, |a, b| match (a, b) {
            (VertexId::Cell(r1, c1), VertexId::Cell(r2, c2)) => {
                adjacent(*r2 as i64 - *r1 as i64, *c2 as i64 - *c1 as i64)
            }
            _ => unreachable!(),
        })
    }

    fn grid(m: u32, n: u32) -> Self {
        Naive::cells(m, n, |dr, dc| dr.abs() + dc.abs() == 1)
    }

    fn king(m: u32, n: u32) -> Self {
        Naive::cells(m, n, |dr, dc| dr.abs().max(dc.abs()) == 1)
    }

    fn slant(m: u32, n: u32) -> Self {
        Naive::cells(m, n, |dr, dc| dr.abs() + dc.abs() == 1 || (dr == dc && dr.abs() == 1))
    }

    fn grid3d(m: u32, n: u32, k: u32) -> Self {
        let mut labels = Vec::new();
        for r in 1..=m {
            for c in 1..=n {
                for l in 1..=k {
                    labels.push(VertexId::Voxel(r, c, l));
                }
            }
        }
        Naive::new(labels, |a, b| match (a, b) {
            (VertexId::Voxel(a1, a2, a3), VertexId::Voxel(b1, b2, b3)) => {
                a1.abs_diff(*b1) + a2.abs_diff(*b2) + a3.abs_diff(*b3) == 1
            }
            _ => unreachable!(),
        })
    }

    fn edges(n: u32, edges: &[[u32; 2]]) -> Self {
        let labels = (1..=n).map(VertexId::Index).collect();
        Naive::new(labels, |a, b| match (a, b) {
            (VertexId::Index(x), VertexId::Index(y)) => edges.iter().any(|e| *e == [*x, *y] || *e == [*y, *x]),
            _ => unreachable!(),
        })
    }

    fn path(n: u32) -> Self {
        let e: Vec<[u32; 2]> = (1..n).map(|i| [i, i + 1]).collect();
        Naive::edges(n, &e)
    }

    fn cycle(n: u32) -> Self {
        let mut e: Vec<[u32; 2]> = (1..n).map(|i| [i, i + 1]).collect();
        e.push([n, 1]);
        Naive::edges(n, &e)
    }

    fn idx(&self, v: &VertexId) -> usize {
        self.labels.iter().position(|w| w == v).expect("label present")
    }

    fn reception(&self, towers: &[usize], t: u32) -> Vec<u32> {
        (0..self.labels.len())
            .map(|v| towers.iter().map(|&w| t.saturating_sub(self.d[v][w])).sum())
            .collect()
    }

    fn dominates(&self, towers: &[usize], t: u32, r: u32) -> bool {
        self.reception(towers, t).iter().all(|&f| f >= r)
    }

    fn dominates_labels(&self, towers: &[VertexId], t: u32, r: u32) -> bool {
        let idx: Vec<usize> = towers.iter().map(|v| self.idx(v)).collect();
        self.dominates(&idx, t, r)
    }

    /// Smallest tower count, by trying every subset of each size in turn.
    fn gamma(&self, t: u32, r: u32) -> u32 {
        fn any_of_size(g: &Naive, start: usize, left: usize, chosen: &mut Vec<usize>, t: u32, r: u32) -> bool {
            if left == 0 {
                return g.dominates(chosen, t, r);
            }
            for i in start..g.labels.len() {
                chosen.push(i);
                let hit = any_of_size(g, i + 1, left - 1, chosen, t, r);
                chosen.pop();
                if hit {
                    return true;
                }
            }
            false
        }
        (1..=self.labels.len())
            .find(|&k| any_of_size(self, 0, k, &mut Vec::new(), t, r))
            .expect("all towers always dominate") as u32
    }
}

fn sorted(mut v: Vec<VertexId>) -> Vec<VertexId> {
    v.sort();
    v
}

#[test]
fn finite_distances_agree_with_floyd_warshall() {
    let cases = [
        (GraphFamily::King { m: 5, n: 5 }, Naive::king(5, 5)),
        (GraphFamily::Slant { m: 4, n: 4 }, Naive::slant(4, 4)),
        (GraphFamily::Grid { m: 3, n: 5 }, Naive::grid(3, 5)),
        (GraphFamily::Grid3d { m: 2, n: 3, k: 2 }, Naive::grid3d(2, 3, 2)),
        (GraphFamily::Cycle { n: 9 }, Naive::cycle(9)),
    ];
    for (fam, naive) in cases {
        let g = build(&fam).unwrap();
        for a in g.vertices() {
            for b in g.vertices() {
                assert_eq!(g.distance(a, b).unwrap(), naive.d[naive.idx(a)][naive.idx(b)], "{fam} {a} {b}");
            }
        }
    }
    let king = build(&GraphFamily::King { m: 5, n: 5 }).unwrap();
    assert_eq!(king.distance(&VertexId::Cell(1, 1), &VertexId::Cell(4, 2)).unwrap(), 3);
    let slant = build(&GraphFamily::Slant { m: 4, n: 4 }).unwrap();
    assert_eq!(slant.distance(&VertexId::Cell(1, 1), &VertexId::Cell(3, 3)).unwrap(), 2);
}

/// BFS over a finite window of the infinite lattice, centred on the origin.
fn lattice_bfs(kind: LatticeKind, from: LatticePoint, to: LatticePoint) -> u64 {
    let moves: &[(i64, i64)] = match kind {
        LatticeKind::Triangular => &[(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)],
        _ => &[(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)],
    };
    let mut seen = std::collections::HashMap::from([((from.x, from.y), 0u64)]);
    let mut queue = std::collections::VecDeque::from([(from.x, from.y)]);
    while let Some((x, y)) = queue.pop_front() {
        let d = seen[&(x, y)];
        if (x, y) == (to.x, to.y) {
            return d;
        }
        for (dx, dy) in moves {
            let next = (x + dx, y + dy);
            if next.0.abs() <= 12 && next.1.abs() <= 12 && !seen.contains_key(&next) {
                seen.insert(next, d + 1);
                queue.push_back(next);
            }
        }
    }
    unreachable!("window is connected")
}

#[test]
fn lattice_distances_agree_with_window_bfs() {
    let p = |x, y| LatticePoint { x, y };
    assert_eq!(king_distance(p(0, 0), p(3, 1)), 3);
    assert_eq!(king_distance(p(-2, 5), p(1, 5)), 3);
    assert_eq!(slant_lattice_distance(p(0, 0), p(3, 3)), 3);
    assert_eq!(slant_lattice_distance(p(0, 0), p(2, -2)), 4);
    for x in -5..=5 {
        for y in -5..=5 {
            let q = p(x, y);
            let o = p(1, -1);
            assert_eq!(king_distance(o, q), lattice_bfs(LatticeKind::KingT1, o, q));
            assert_eq!(slant_lattice_distance(o, q), lattice_bfs(LatticeKind::Triangular, o, q));
        }
    }
}

#[test]
fn reception_sums() {
    let naive = Naive::path(5);
    let towers = [naive.idx(&VertexId::Index(1)), naive.idx(&VertexId::Index(5))];
    assert_eq!(naive.reception(&towers, 3)[2], 2);
    let g = build(&GraphFamily::Path { n: 5 }).unwrap();
    let ts = broadcast_domination::TowerSet::new(3, vec![VertexId::Index(1), VertexId::Index(5)]);
    let map = broadcast_domination::compute_reception(&g, &ts).unwrap();
    assert_eq!(map.get(&VertexId::Index(3)), Some(2));
    assert_eq!(map.reception, naive.reception(&towers, 3));
}

#[test]
fn path_and_cycle_values() {
    for (n, t, r, want) in [(5, 2, 1, 2), (7, 3, 2, 2)] {
        assert_eq!(closed_forms::path_gamma(n, t, r).unwrap().value, want);
        assert_eq!(Naive::path(n).gamma(t, r) as u64, want);
    }
    assert_eq!(closed_forms::cycle_upper_bound(6, 2, 1).unwrap().value, 2);
    assert_eq!(Naive::cycle(6).gamma(2, 1), 2);
    // ceil(3 / 3) = 1, and one tower does reach both other vertices
    assert_eq!(closed_forms::cycle_upper_bound(3, 2, 1).unwrap().value, 1);
    assert_eq!(Naive::cycle(3).gamma(2, 1), 1);
    assert_eq!(closed_forms::cycle_upper_bound(4, 1, 1).unwrap().value, 4);
}

#[test]
fn tree_bound_values() {
    let p7 = build(&GraphFamily::Path { n: 7 }).unwrap();
    let whole = vec![(1..=7).collect::<Vec<u32>>()];
    assert_eq!(closed_forms::tree_decomposition_bound(&p7, &whole, 2, 1).unwrap().value, 3);
    assert_eq!(Naive::path(7).gamma(2, 1), 3);

    // centre 1, legs 1-2-3, 1-4-5, 1-6-7
    let edges = vec![[1, 2], [2, 3], [1, 4], [4, 5], [1, 6], [6, 7]];
    let spider = build(&GraphFamily::Tree { edges: edges.clone() }).unwrap();
    let dec = vec![vec![3, 2, 1, 4, 5], vec![1, 6, 7]];
    let bound = closed_forms::tree_decomposition_bound(&spider, &dec, 2, 1).unwrap().value;
    assert_eq!(bound, 3);
    let exact = Naive::edges(7, &edges).gamma(2, 1);
    assert!(exact as u64 <= bound);
    assert_eq!(solve(&spider, 2, 1, &SolverConfig::default()).unwrap().gamma, exact);
}

#[test]
fn grid_values() {
    let dims = closed_forms::grid_starting_block_dims(3, 3, 1).unwrap();
    assert_eq!(dims.dims, vec![3, 4]);
    assert_eq!(Naive::grid(3, 4).gamma(3, 1), 2);
    assert_eq!(closed_forms::grid_gamma(2, 5, 2, 1).unwrap().value, 3);
    assert_eq!(Naive::grid(2, 5).gamma(2, 1), 3);
    assert_eq!(closed_forms::grid_gamma(3, 7, 3, 1).unwrap().value, 3);
    assert_eq!(Naive::grid(3, 7).gamma(3, 1), 3);
}

#[test]
fn three_d_values() {
    let fam = closed_forms::block3d_family(7, 3, 2).unwrap();
    assert!(fam.iter().any(|b| b.dims == vec![3, 3, 1] || b.dims == vec![1, 3, 3]));
    assert_eq!(Naive::grid3d(3, 3, 1).gamma(3, 2), 2);

    let bound = closed_forms::grid3d_upper_bound(2, 2, 5, 2, 1, &BlockDims::new(vec![2, 2, 2])).unwrap();
    assert_eq!(bound.value, 6);
    assert_eq!(Naive::grid3d(2, 2, 5).gamma(2, 1), 5);

    assert_eq!(closed_forms::grid3d_2_2_k_gamma(3, 2, 1).unwrap().value, 3);
    assert_eq!(Naive::grid3d(2, 2, 3).gamma(2, 1), 3);
}

#[test]
fn king_and_slant_values() {
    assert_eq!(closed_forms::king_gamma(3, 10, 2, 1).unwrap().value, 4);
    assert_eq!(Naive::king(3, 10).gamma(2, 1), 4);
    assert_eq!(closed_forms::king_gamma(1, 5, 2, 1).unwrap().value, 2);
    assert_eq!(Naive::king(1, 5).gamma(2, 1), 2);
    assert_eq!(closed_forms::slant_gamma_2xn(8, 2, 1).unwrap().value, 4);
    assert_eq!(Naive::slant(2, 8).gamma(2, 1), 4);
}

#[test]
fn path_layouts() {
    for (n, t, r, want) in [(5, 2, 1, [2, 5]), (7, 3, 2, [2, 6])] {
        let plan = constructors::path_towers(n, t, r).unwrap();
        assert_eq!(plan.towers, want.map(VertexId::Index).to_vec());
        let naive = Naive::path(n);
        assert!(naive.dominates_labels(&plan.towers, t, r));
        assert_eq!(naive.gamma(t, r) as usize, plan.towers.len());
    }
}

#[test]
fn grid_layouts() {
    let plan = constructors::grid_starting_block(2, 3, 1).unwrap();
    assert_eq!(sorted(plan.towers.clone()), vec![VertexId::Cell(1, 1), VertexId::Cell(2, 5)]);
    assert!(Naive::grid(2, 5).dominates_labels(&plan.towers, 3, 1));
    assert!(plan.verify().unwrap().efficient);

    let plan = constructors::grid_starting_block(3, 3, 2).unwrap();
    assert_eq!(sorted(plan.towers.clone()), vec![VertexId::Cell(1, 1), VertexId::Cell(3, 3)]);
    assert!(Naive::grid(3, 3).dominates_labels(&plan.towers, 3, 2));

    let plan = constructors::grid_towers(2, 5, 2, 1).unwrap();
    assert_eq!(plan.towers.len(), 3);
    assert_eq!(plan.towers.iter().filter(|v| matches!(v, VertexId::Cell(1, _))).count(), 2);
    assert!(Naive::grid(2, 5).dominates_labels(&plan.towers, 2, 1));

    let plan = constructors::grid_towers(3, 7, 3, 1).unwrap();
    assert_eq!(plan.towers.len(), 3);
    assert!(Naive::grid(3, 7).dominates_labels(&plan.towers, 3, 1));
}

#[test]
fn three_d_layouts() {
    let plan = constructors::block3d_towers(&BlockDims::new(vec![2, 2, 2]), 2, 1).unwrap();
    assert_eq!(sorted(plan.towers.clone()), sorted(vec![VertexId::Voxel(1, 1, 2), VertexId::Voxel(2, 2, 1)]));
    assert!(Naive::grid3d(2, 2, 2).dominates_labels(&plan.towers, 2, 1));

    let plan = constructors::block3d_towers(&BlockDims::new(vec![1, 1, 4]), 2, 1).unwrap();
    assert_eq!(sorted(plan.towers.clone()), vec![VertexId::Voxel(1, 1, 1), VertexId::Voxel(1, 1, 4)]);
    assert!(Naive::grid3d(1, 1, 4).dominates_labels(&plan.towers, 2, 1));

    let block = BlockDims::new(vec![2, 2, 2]);
    let plan = constructors::grid3d_cover(2, 2, 5, 2, 1, &block).unwrap();
    assert_eq!(plan.towers.len(), 6);
    assert!(Naive::grid3d(2, 2, 5).dominates_labels(&plan.towers, 2, 1));

    let plan = constructors::grid3d_cover(2, 4, 2, 2, 1, &block).unwrap();
    assert_eq!(plan.towers.len(), 4);
    assert!(Naive::grid3d(2, 4, 2).dominates_labels(&plan.towers, 2, 1));
}

#[test]
fn king_and_slant_layouts() {
    let plan = constructors::king_towers(3, 10, 2, 1).unwrap();
    assert_eq!(plan.towers.len(), 4);
    assert!(plan.towers.iter().all(|v| matches!(v, VertexId::Cell(2, _))));
    assert!(Naive::king(3, 10).dominates_labels(&plan.towers, 2, 1));

    let plan = constructors::king_towers(1, 3, 2, 1).unwrap();
    assert_eq!(plan.towers, vec![VertexId::Cell(1, 2)]);

    let plan = constructors::slant_towers_2xn(8, 2, 1).unwrap();
    assert_eq!(plan.towers.len(), 4);
    assert!(Naive::slant(2, 8).dominates_labels(&plan.towers, 2, 1));

    for (m, n, cap) in [(4, 8, 10), (2, 16, 9)] {
        let plan = constructors::slant_tile_cover(m, n, 2, 1).unwrap();
        assert!(plan.towers.len() <= cap, "S_{{{m},{n}}}: {} towers", plan.towers.len());
        assert!(Naive::slant(m, n).dominates_labels(&plan.towers, 2, 1));
    }
}

#[test]
fn lattice_windows() {
    let w = constructors::verify_lattice_window(&constructors::king_lattice_pattern(2, 1).unwrap(), 2, 1, 8).unwrap();
    assert!(w.report.dominated && w.report.efficient);
    let w = constructors::verify_lattice_window(&constructors::king_lattice_pattern(3, 2).unwrap(), 3, 2, 12).unwrap();
    assert!(w.report.dominated && w.report.efficient);
    assert!(!w.report.overlap_vertices.is_empty());
    let w =
        constructors::verify_lattice_window(&constructors::triangular_lattice_pattern(2, 1).unwrap(), 2, 1, 8).unwrap();
    assert!(w.report.dominated && w.report.efficient);
}

#[test]
fn solver_small_values() {
    let cfg = SolverConfig::default();
    let g = build(&GraphFamily::Path { n: 5 }).unwrap();
    assert_eq!(solve(&g, 2, 1, &cfg).unwrap().gamma, 2);
    let g = build(&GraphFamily::Cycle { n: 3 }).unwrap();
    assert_eq!(solve(&g, 2, 1, &cfg).unwrap().gamma, 1);
    // one tower on P_4 reaches at most 2 + 1 + 1 + 0 at r = 2, and two towers leave an end short
    let g = build(&GraphFamily::Path { n: 4 }).unwrap();
    assert_eq!(solve(&g, 2, 2, &cfg).unwrap().gamma, Naive::path(4).gamma(2, 2));
}
