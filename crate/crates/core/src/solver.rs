//! Exact minimum (t,r) broadcast dominating sets for small graphs.
//!
//! [`solve`] runs iterative deepening on the tower count with a
//! branch-on-most-deficient-vertex DFS. [`naive_enumerate`] is a plain subset
//! scan kept deliberately simple so the two can be checked against each other.

use std::sync::atomic::{AtomicUsize, Ordering};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::GraphInstance;
use crate::reception::TowerSet;

/// Largest graph [`naive_enumerate`] accepts.
pub const NAIVE_VERTEX_LIMIT: usize = 16;
/// Largest graph [`solve`] accepts; the solver keeps a dense distance table.
pub const SOLVE_VERTEX_LIMIT: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub max_cardinality: Option<u32>,
    pub canonical_witness: bool,
    pub node_budget: Option<u64>,
    /// Worker threads for top-level branches. 1 runs inline; 0 uses the
    /// global rayon pool.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_cardinality: None,
            canonical_witness: true,
            node_budget: None,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub gamma: u32,
    pub witness: TowerSet,
    pub explored_nodes: u64,
    pub proven_minimal: bool,
}

struct Problem {
    n: usize,
    r: u32,
    /// zone[w] = (v, signal from w at v) for every v with positive signal.
    zone: Vec<Vec<(usize, u32)>>,
    /// cands[v] = towers whose zone holds v, row-major.
    cands: Vec<Vec<usize>>,
    s_max: u64,
}

impl Problem {
    fn new(g: &GraphInstance, t: u32, r: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidStrength(t));
        }
        if r == 0 {
            return Err(Error::InvalidInput("r must be at least 1".into()));
        }
        let n = g.vertex_count();
        let mut zone = vec![Vec::new(); n];
        let mut cands = vec![Vec::new(); n];
        for (w, list) in zone.iter_mut().enumerate() {
            for v in 0..n {
                let c = t.saturating_sub(g.dist(w, v));
                if c > 0 {
                    list.push((v, c));
                    cands[v].push(w);
                }
            }
        }
        let s_max = zone
            .iter()
            .map(|l| l.iter().map(|&(_, c)| c as u64).sum::<u64>())
            .max()
            .unwrap_or(0);
        let p = Problem { n, r, zone, cands, s_max };
        let mut all = vec![0u32; n];
        for w in 0..n {
            for &(v, c) in &p.zone[w] {
                all[v] += c;
            }
        }
        if all.iter().any(|&f| f < r) {
            return Err(Error::Infeasible { r });
        }
        Ok(p)
    }

    fn lower_bound(&self) -> u32 {
        ((self.n as u64 * self.r as u64).div_ceil(self.s_max)).max(1) as u32
    }

    fn dominates(&self, towers: &[usize]) -> bool {
        let mut rec = vec![0u32; self.n];
        for &w in towers {
            for &(v, c) in &self.zone[w] {
                rec[v] += c;
            }
        }
        rec.iter().all(|&f| f >= self.r)
    }

    fn marginal(&self, w: usize, rec: &[u32]) -> u64 {
        self.zone[w]
            .iter()
            .map(|&(v, c)| c.min(self.r.saturating_sub(rec[v])) as u64)
            .sum()
    }

    /// Highest-marginal towers first until dominated. Ties go to row-major order.
    fn greedy(&self) -> Vec<usize> {
        let mut st = State::new(self);
        while st.residual > 0 {
            let w = (0..self.n)
                .filter(|&w| !st.chosen.contains(&w))
                .max_by_key(|&w| (self.marginal(w, &st.rec), std::cmp::Reverse(w)))
                .expect("feasible instance");
            st.add(self, w);
        }
        st.chosen.sort_unstable();
        st.chosen
    }
}

#[derive(Clone)]
struct State {
    rec: Vec<u32>,
    residual: u64,
    chosen: Vec<usize>,
    excluded: Vec<bool>,
}

impl State {
    fn new(p: &Problem) -> Self {
        State {
            rec: vec![0; p.n],
            residual: p.n as u64 * p.r as u64,
            chosen: Vec::new(),
            excluded: vec![false; p.n],
        }
    }

    fn add(&mut self, p: &Problem, w: usize) {
        for &(v, c) in &p.zone[w] {
            let before = p.r.saturating_sub(self.rec[v]);
            self.rec[v] += c;
            let after = p.r.saturating_sub(self.rec[v]);
            self.residual -= (before - after) as u64;
        }
        self.chosen.push(w);
    }

    fn remove(&mut self, p: &Problem, w: usize) {
        let popped = self.chosen.pop();
        debug_assert_eq!(popped, Some(w));
        for &(v, c) in &p.zone[w] {
            let before = p.r.saturating_sub(self.rec[v]);
            self.rec[v] -= c;
            let after = p.r.saturating_sub(self.rec[v]);
            self.residual += (after - before) as u64;
        }
    }
}

enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

struct Search<'a> {
    p: &'a Problem,
    nodes: u64,
    cap: u64,
    /// Set by a sibling branch with a lower index that already succeeded.
    cancel: Option<(&'a AtomicUsize, usize)>,
}

impl Search<'_> {
    fn cancelled(&self) -> bool {
        self.cancel
            .is_some_and(|(flag, me)| flag.load(Ordering::Relaxed) < me)
    }

    /// Is there a dominating extension of `st` with at most `remaining` more towers?
    fn dfs(&mut self, st: &mut State, remaining: u32) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.cap || (self.nodes & 0x3ff == 0 && self.cancelled()) {
            return Outcome::Aborted;
        }
        if st.residual == 0 {
            return Outcome::Found(st.chosen.clone());
        }
        if remaining == 0 || (remaining as u64) * self.p.s_max < st.residual {
            return Outcome::Exhausted;
        }
        let cands = self.branch_candidates(st);
        let mut newly_excluded = Vec::with_capacity(cands.len());
        let mut out = Outcome::Exhausted;
        for w in cands {
            st.add(self.p, w);
            st.excluded[w] = true;
            let res = self.dfs(st, remaining - 1);
            st.remove(self.p, w);
            newly_excluded.push(w);
            match res {
                Outcome::Exhausted => continue,
                other => {
                    out = other;
                    break;
                }
            }
        }
        for w in newly_excluded {
            st.excluded[w] = false;
        }
        out
    }

    /// Towers that can still help the least-served vertex, best marginal first.
    fn branch_candidates(&self, st: &State) -> Vec<usize> {
        let p = self.p;
        let v = (0..p.n).min_by_key(|&v| (st.rec[v], v)).expect("nonempty graph");
        let mut cands: Vec<(u64, usize)> = p.cands[v]
            .iter()
            .filter(|&&w| !st.excluded[w])
            .map(|&w| (p.marginal(w, &st.rec), w))
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        cands.into_iter().map(|(_, w)| w).collect()
    }
}

struct LevelResult {
    found: Option<Vec<usize>>,
    nodes: u64,
    aborted: bool,
}

/// Decide whether `k` towers suffice, splitting the root's branches across
/// workers. The outcome and node count depend only on the inputs: branches are
/// accounted in index order up to the first success.
fn search_level(p: &Problem, k: u32, cap: u64, threads: usize) -> LevelResult {
    let root = State::new(p);
    let probe = Search { p, nodes: 0, cap, cancel: None };
    let cands = probe.branch_candidates(&root);

    let run_branch = |i: usize, flag: Option<&AtomicUsize>| -> (Outcome, u64) {
        let mut st = root.clone();
        for &w in &cands[..i] {
            st.excluded[w] = true;
        }
        st.add(p, cands[i]);
        st.excluded[cands[i]] = true;
        let mut s = Search { p, nodes: 0, cap, cancel: flag.map(|f| (f, i)) };
        let out = s.dfs(&mut st, k - 1);
        (out, s.nodes)
    };

    let results: Vec<(Outcome, u64)> = if threads == 1 {
        let mut out = Vec::new();
        for i in 0..cands.len() {
            let res = run_branch(i, None);
            let stop = !matches!(res.0, Outcome::Exhausted);
            out.push(res);
            if stop {
                break;
            }
        }
        out
    } else {
        let first = AtomicUsize::new(usize::MAX);
        let work = || {
            (0..cands.len())
                .into_par_iter()
                .map(|i| {
                    if first.load(Ordering::Relaxed) < i {
                        return (Outcome::Aborted, 0);
                    }
                    let res = run_branch(i, Some(&first));
                    if matches!(res.0, Outcome::Found(_)) {
                        first.fetch_min(i, Ordering::Relaxed);
                    }
                    res
                })
                .collect()
        };
        if threads == 0 {
            work()
        } else {
            match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                Ok(pool) => pool.install(work),
                Err(_) => work(),
            }
        }
    };

    let mut level = LevelResult { found: None, nodes: 1, aborted: false };
    for (out, nodes) in results {
        level.nodes += nodes;
        match out {
            Outcome::Exhausted => {}
            Outcome::Found(w) => {
                level.found = Some(w);
                break;
            }
            Outcome::Aborted => {
                level.aborted = true;
                break;
            }
        }
    }
    level
}

/// Feasibility of extending `st` by `remaining` towers, sequentially.
fn extendable(p: &Problem, st: &mut State, remaining: u32, cap: u64, nodes: &mut u64) -> Option<bool> {
    let mut s = Search { p, nodes: 0, cap, cancel: None };
    let out = s.dfs(st, remaining);
    *nodes += s.nodes;
    match out {
        Outcome::Found(_) => Some(true),
        Outcome::Exhausted => Some(false),
        Outcome::Aborted => None,
    }
}

/// Lexicographically least dominating set with exactly `k` towers, built one
/// position at a time.
fn canonical(p: &Problem, k: u32, cap: u64, nodes: &mut u64) -> Option<Vec<usize>> {
    let mut st = State::new(p);
    let mut floor = 0usize;
    for slot in 0..k {
        if st.residual == 0 {
            break;
        }
        let mut placed = None;
        for a in floor..p.n {
            st.add(p, a);
            // everything at or below `a` is off limits for later slots
            let saved: Vec<bool> = st.excluded[..=a].to_vec();
            st.excluded[..=a].iter_mut().for_each(|e| *e = true);
            let ok = extendable(p, &mut st, k - slot - 1, cap, nodes)?;
            if ok {
                placed = Some(a);
                break;
            }
            st.excluded[..=a].copy_from_slice(&saved);
            st.remove(p, a);
        }
        floor = placed? + 1;
    }
    let mut chosen = st.chosen;
    chosen.sort_unstable();
    Some(chosen)
}

fn to_result(g: &GraphInstance, t: u32, towers: &[usize], nodes: u64, proven: bool) -> OracleResult {
    OracleResult {
        gamma: towers.len() as u32,
        witness: TowerSet::new(t, towers.iter().map(|&i| g.vertex(i)).collect()),
        explored_nodes: nodes,
        proven_minimal: proven,
    }
}

/// Minimum (t,r) broadcast dominating set of `g`.
pub fn solve(g: &GraphInstance, t: u32, r: u32, cfg: &SolverConfig) -> Result<OracleResult> {
    if g.vertex_count() > SOLVE_VERTEX_LIMIT {
        return Err(Error::TooLarge { vertices: g.vertex_count(), limit: SOLVE_VERTEX_LIMIT });
    }
    if let Some(0) = cfg.max_cardinality {
        return Err(Error::InvalidInput("max_cardinality must be positive".into()));
    }
    if let Some(0) = cfg.node_budget {
        return Err(Error::InvalidInput("node_budget must be positive".into()));
    }
    let p = Problem::new(g, t, r)?;
    let budget = cfg.node_budget.unwrap_or(u64::MAX);
    let exhausted = |nodes: u64| {
        let best = to_result(g, t, &p.greedy(), nodes, false);
        Error::BudgetExhausted { budget, best: Box::new(best) }
    };

    let mut nodes = 0u64;
    let mut k = p.lower_bound();
    loop {
        if let Some(cap) = cfg.max_cardinality {
            if k > cap {
                return Err(Error::CardinalityCapExceeded { cap });
            }
        }
        let level = search_level(&p, k, budget.saturating_sub(nodes), cfg.threads);
        nodes += level.nodes;
        if level.aborted {
            return Err(exhausted(nodes));
        }
        if let Some(mut witness) = level.found {
            if cfg.canonical_witness {
                let cap = budget.saturating_sub(nodes).max(1);
                match canonical(&p, k, cap, &mut nodes) {
                    Some(w) => witness = w,
                    None => return Err(exhausted(nodes)),
                }
            }
            witness.sort_unstable();
            return Ok(to_result(g, t, &witness, nodes, true));
        }
        k += 1;
    }
}

/// Scan subsets by increasing size, each size in lexicographic order.
pub fn naive_enumerate(g: &GraphInstance, t: u32, r: u32) -> Result<OracleResult> {
    let n = g.vertex_count();
    if n > NAIVE_VERTEX_LIMIT {
        return Err(Error::TooLarge { vertices: n, limit: NAIVE_VERTEX_LIMIT });
    }
    let p = Problem::new(g, t, r)?;
    let mut checked = 0u64;
    for k in 1..=n {
        for combo in (0..n).combinations(k) {
            checked += 1;
            if p.dominates(&combo) {
                return Ok(to_result(g, t, &combo, checked, true));
            }
        }
    }
    unreachable!("Problem::new rejects infeasible instances")
}
