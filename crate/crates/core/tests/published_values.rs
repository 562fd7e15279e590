//! Published small-case values and the slant bound table.

use broadcast_domination::closed_forms::{self, Block3dShape, BlockDims, GammaKind, SLANT_TABLE};
use broadcast_domination::constructors;
use broadcast_domination::{build, compute_reception, solve, verify, GraphFamily, SolverConfig, TowerSet, VertexId};

fn corners() -> TowerSet {
    TowerSet::new(2, vec![VertexId::Cell(1, 1), VertexId::Cell(2, 3)])
}

#[test]
fn two_by_three_grid() {
    let g = build(&GraphFamily::Grid { m: 2, n: 3 }).unwrap();
    let map = compute_reception(&g, &corners()).unwrap();
    assert!(map.min() >= 1);
    assert_eq!(map.get(&VertexId::Cell(1, 1)), Some(2));
    assert_eq!(map.get(&VertexId::Cell(2, 3)), Some(2));
    let rep = verify(&g, &corners(), 1).unwrap();
    assert!(rep.dominated && rep.efficient);

    assert_eq!(closed_forms::grid_starting_block_dims(2, 2, 1).unwrap().dims, vec![2, 3]);
    assert_eq!(closed_forms::grid_gamma(2, 3, 2, 1).unwrap().value, 2);
    let plan = constructors::grid_starting_block(2, 2, 1).unwrap();
    assert_eq!(plan.tower_set(), corners());
    assert_eq!(constructors::grid_towers(2, 3, 2, 1).unwrap().towers.len(), 2);
    assert_eq!(solve(&g, 2, 1, &SolverConfig::default()).unwrap().gamma, 2);
}

#[test]
fn block_base_cases() {
    let dims = |s, t, r| closed_forms::block3d_dims(s, t, r).unwrap().dims;
    assert_eq!(dims(Block3dShape::TwoByTwo, 2, 1), vec![2, 2, 2]);
    assert_eq!(dims(Block3dShape::TwoByTwo, 3, 2), vec![2, 2, 3]);
    assert_eq!(dims(Block3dShape::ThreeByThree, 3, 2), vec![3, 3, 1]);

    let fam: Vec<Vec<u32>> = closed_forms::block3d_family(6, 2, 1).unwrap().into_iter().map(|b| b.dims).collect();
    for want in [vec![1, 2, 3], vec![2, 2, 2], vec![1, 1, 4]] {
        assert!(fam.contains(&want), "{want:?} missing from {fam:?}");
        let [m, n, k] = [want[0], want[1], want[2]];
        let g = build(&GraphFamily::Grid3d { m, n, k }).unwrap();
        assert!(solve(&g, 2, 1, &SolverConfig::default()).unwrap().gamma <= 2);
    }

    let bound = closed_forms::grid3d_upper_bound(2, 2, 2, 2, 1, &BlockDims::new(vec![2, 2, 2])).unwrap();
    assert_eq!((bound.value, bound.kind), (2, GammaKind::UpperBound));

    let plan = constructors::block3d_towers(&BlockDims::new(vec![3, 3, 1]), 3, 2).unwrap();
    let mut towers = plan.towers.clone();
    towers.sort();
    assert_eq!(towers, vec![VertexId::Voxel(1, 1, 1), VertexId::Voxel(3, 3, 1)]);
    assert!(plan.verify().unwrap().efficient);
}

#[test]
fn two_by_two_by_five() {
    assert_eq!(closed_forms::grid3d_2_2_k_gamma(5, 2, 1).unwrap().value, 5);
    let g = build(&GraphFamily::Grid3d { m: 2, n: 2, k: 5 }).unwrap();
    assert_eq!(solve(&g, 2, 1, &SolverConfig::default()).unwrap().gamma, 5);
}

#[test]
fn king_starting_block() {
    // n = 4t - 3r + 1 = 6
    assert_eq!(closed_forms::king_gamma(3, 6, 2, 1).unwrap().value, 2);
    let plan = constructors::king_towers(3, 6, 2, 1).unwrap();
    assert_eq!(plan.towers, vec![VertexId::Cell(2, 2), VertexId::Cell(2, 5)]);
    assert!(plan.verify().unwrap().dominated);
    let g = build(&GraphFamily::King { m: 3, n: 6 }).unwrap();
    assert_eq!(solve(&g, 2, 1, &SolverConfig::default()).unwrap().gamma, 2);
}

#[test]
fn slant_two_rows() {
    assert_eq!(closed_forms::slant_gamma_2xn(5, 2, 1).unwrap().value, 2);
    let plan = constructors::slant_towers_2xn(5, 2, 1).unwrap();
    assert_eq!(plan.towers.len(), 2);
    let rep = plan.verify().unwrap();
    assert!(rep.dominated && rep.efficient);

    // n <= 2(t - r): one tower
    assert_eq!(closed_forms::slant_gamma_2xn(2, 3, 2).unwrap().value, 1);
    assert_eq!(constructors::slant_towers_2xn(2, 3, 2).unwrap().towers.len(), 1);
}

#[test]
fn slant_table_rows() {
    let rows: Vec<(u32, u32, u32, u32, u32)> = SLANT_TABLE.iter().map(|r| (r.t, r.r, r.a, r.b, r.c)).collect();
    assert_eq!(
        rows,
        vec![(2, 1, 2, 8, 4), (3, 1, 3, 20, 7), (3, 2, 2, 14, 6), (4, 2, 3, 15, 14), (4, 3, 2, 22, 8), (5, 4, 2, 32, 10)]
    );
    assert_eq!(closed_forms::slant_upper_bound(2, 8, 2, 1).unwrap().value, 5);
    assert_eq!(closed_forms::slant_upper_bound(2, 14, 3, 2).unwrap().value, 7);
    assert_eq!(closed_forms::slant_upper_bound(3, 9, 2, 1).unwrap().value, 18);

    let plan = constructors::slant_tile_cover(2, 8, 2, 1).unwrap();
    assert!(plan.towers.len() <= 5);
    assert!(plan.verify().unwrap().dominated);
}
