//! C ABI over `broadcast_domination`.
//!
//! Every entry point returns a [`BdomStatus`]; results go through out
//! pointers. On failure, [`bdom_last_error`] describes what went wrong on the
//! calling thread. Vertices are addressed by 0-based dense index, in the order
//! `bdom_graph_vertex_json` reports them.
//!
//! Strings handed out by the library must be released with
//! [`bdom_string_free`]; handles with their matching `_free` function.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use broadcast_domination::closed_forms;
use broadcast_domination::constructors::PlacementPlan;
use broadcast_domination::{
    naive_enumerate, solve, verify, Error, GraphFamily, GraphInstance, OracleResult, SolverConfig, TowerSet,
};

/// Status codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BdomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidJson = 3,
    InvalidArgument = 4,
    HypothesisViolated = 5,
    Unsupported = 6,
    BudgetExhausted = 7,
    Infeasible = 8,
    TooLarge = 9,
    Panic = 10,
}

/// Opaque graph handle.
pub struct BdomGraph(GraphInstance);

/// Opaque solver result handle.
pub struct BdomSolution(OracleResult);

/// Summary of a verification run.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct BdomReport {
    pub dominated: bool,
    pub efficient: bool,
    pub min_reception: u32,
    pub deficient_count: usize,
    pub overlap_count: usize,
    pub wasted_signal: u64,
    pub total_excess: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> BdomStatus {
    match err {
        Error::HypothesisViolated { .. } => BdomStatus::HypothesisViolated,
        Error::UnsupportedShapeForR(_) | Error::UnsupportedTRPair { .. } | Error::UnsupportedR(_) => {
            BdomStatus::Unsupported
        }
        Error::BudgetExhausted { .. } | Error::CardinalityCapExceeded { .. } => BdomStatus::BudgetExhausted,
        Error::Infeasible { .. } => BdomStatus::Infeasible,
        Error::TooLarge { .. } => BdomStatus::TooLarge,
        _ => BdomStatus::InvalidArgument,
    }
}

struct Fail(BdomStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Self {
        Fail(BdomStatus::InvalidJson, e.to_string())
    }
}

/// Runs `body`, turning errors and panics into a status plus a message.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> BdomStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BdomStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            BdomStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(BdomStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail(BdomStatus::NullPointer, format!("{what} is null")))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(BdomStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(BdomStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior nul").into_raw()
}

fn tower_set(g: &GraphInstance, t: u32, towers: *const usize, len: usize) -> Result<TowerSet, Fail> {
    if len > 0 && towers.is_null() {
        return Err(Fail(BdomStatus::NullPointer, "towers is null".into()));
    }
    let idx = if len == 0 { &[][..] } else { unsafe { std::slice::from_raw_parts(towers, len) } };
    let mut labels = Vec::with_capacity(len);
    for &i in idx {
        if i >= g.vertex_count() {
            return Err(Fail(BdomStatus::InvalidArgument, format!("tower index {i} out of range")));
        }
        labels.push(g.vertex(i));
    }
    Ok(TowerSet::new(t, labels))
}

/// Message for the last failed call on this thread, or null. Owned by the
/// library and valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn bdom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bdom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph from JSON such as `{"family":"grid","m":3,"n":5}`.
#[no_mangle]
pub unsafe extern "C" fn bdom_graph_from_json(json: *const c_char, out: *mut *mut BdomGraph) -> BdomStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let family: GraphFamily = serde_json::from_str(read_str(json, "json")?)?;
        *out = Box::into_raw(Box::new(BdomGraph(GraphInstance::build(family)?)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn bdom_graph_free(g: *mut BdomGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn bdom_graph_vertex_count(g: *const BdomGraph, out: *mut usize) -> BdomStatus {
    guard(|| {
        *out_ptr(out, "out")? = deref(g, "graph")?.0.vertex_count();
        Ok(())
    })
}

/// Vertex label as JSON: a bare integer for index-labelled families, an array otherwise.
#[no_mangle]
pub unsafe extern "C" fn bdom_graph_vertex_json(g: *const BdomGraph, index: usize, out: *mut *mut c_char) -> BdomStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let g = &deref(g, "graph")?.0;
        if index >= g.vertex_count() {
            return Err(Fail(BdomStatus::InvalidArgument, format!("vertex index {index} out of range")));
        }
        *out = to_c_string(serde_json::to_string(&g.vertex(index))?);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn bdom_graph_distance(g: *const BdomGraph, u: usize, v: usize, out: *mut u32) -> BdomStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let g = &deref(g, "graph")?.0;
        let n = g.vertex_count();
        if u >= n || v >= n {
            return Err(Fail(BdomStatus::InvalidArgument, format!("vertex pair ({u}, {v}) out of range")));
        }
        *out = g.dist(u, v);
        Ok(())
    })
}

/// Reception check for `len` towers given by dense index.
#[no_mangle]
pub unsafe extern "C" fn bdom_verify(
    g: *const BdomGraph,
    t: u32,
    r: u32,
    towers: *const usize,
    len: usize,
    out: *mut BdomReport,
) -> BdomStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let g = &deref(g, "graph")?.0;
        let rep = verify(g, &tower_set(g, t, towers, len)?, r)?;
        *out = BdomReport {
            dominated: rep.dominated,
            efficient: rep.efficient,
            min_reception: rep.min_reception,
            deficient_count: rep.deficient.len(),
            overlap_count: rep.overlap_vertices.len(),
            wasted_signal: rep.wasted_signal,
            total_excess: rep.total_excess,
        };
        Ok(())
    })
}

/// Verifies a placement plan (as printed by `bdom construct --json`) and
/// writes the full report as JSON.
#[no_mangle]
pub unsafe extern "C" fn bdom_verify_plan_json(plan: *const c_char, out: *mut *mut c_char) -> BdomStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let plan: PlacementPlan = serde_json::from_str(read_str(plan, "plan")?)?;
        *out = to_c_string(serde_json::to_string(&plan.verify()?)?);
        Ok(())
    })
}

/// Exact solver. `node_budget` of 0 means unlimited. On
/// `BudgetExhausted` the handle still holds the best set found, with
/// `proven_minimal` false.
#[no_mangle]
pub unsafe extern "C" fn bdom_solve(
    g: *const BdomGraph,
    t: u32,
    r: u32,
    node_budget: u64,
    threads: usize,
    out: *mut *mut BdomSolution,
) -> BdomStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let g = &deref(g, "graph")?.0;
        let cfg = SolverConfig {
            node_budget: (node_budget > 0).then_some(node_budget),
            threads,
            ..Default::default()
        };
        match solve(g, t, r, &cfg) {
            Ok(res) => {
                *out = Box::into_raw(Box::new(BdomSolution(res)));
                Ok(())
            }
            Err(Error::BudgetExhausted { budget, best }) => {
                *out = Box::into_raw(Box::new(BdomSolution((*best).clone())));
                Err(Error::BudgetExhausted { budget, best }.into())
            }
            Err(e) => Err(e.into()),
        }
    })
}

/// Plain subset enumeration, for graphs of at most 16 vertices.
#[no_mangle]
pub unsafe extern "C" fn bdom_solve_naive(g: *const BdomGraph, t: u32, r: u32, out: *mut *mut BdomSolution) -> BdomStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let res = naive_enumerate(&deref(g, "graph")?.0, t, r)?;
        *out = Box::into_raw(Box::new(BdomSolution(res)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn bdom_solution_free(s: *mut BdomSolution) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn bdom_solution_gamma(s: *const BdomSolution, out: *mut u32) -> BdomStatus {
    guard(|| {
        *out_ptr(out, "out")? = deref(s, "solution")?.0.gamma;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn bdom_solution_proven(s: *const BdomSolution, out: *mut bool) -> BdomStatus {
    guard(|| {
        *out_ptr(out, "out")? = deref(s, "solution")?.0.proven_minimal;
        Ok(())
    })
}

/// Copies up to `cap` witness tower indices (w.r.t. `g`) into `buf` and
/// writes the full witness size to `len`. Pass `cap` 0 to query the size.
#[no_mangle]
pub unsafe extern "C" fn bdom_solution_witness(
    s: *const BdomSolution,
    g: *const BdomGraph,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> BdomStatus {
    guard(|| {
        let len = out_ptr(len, "len")?;
        let idx = deref(s, "solution")?.0.witness.indices_in(&deref(g, "graph")?.0)?;
        *len = idx.len();
        if cap > 0 {
            if buf.is_null() {
                return Err(Fail(BdomStatus::NullPointer, "buf is null".into()));
            }
            let n = cap.min(idx.len());
            std::slice::from_raw_parts_mut(buf, n).copy_from_slice(&idx[..n]);
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn bdom_solution_json(s: *const BdomSolution, out: *mut *mut c_char) -> BdomStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = to_c_string(serde_json::to_string(&deref(s, "solution")?.0)?);
        Ok(())
    })
}

fn formula(out: *mut u64, f: impl FnOnce() -> broadcast_domination::Result<closed_forms::GammaResult>) -> BdomStatus {
    guard(|| {
        let out = unsafe { out_ptr(out, "out")? };
        *out = f()?.value;
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn bdom_path_gamma(n: u32, t: u32, r: u32, out: *mut u64) -> BdomStatus {
    formula(out, || closed_forms::path_gamma(n, t, r))
}

#[no_mangle]
pub extern "C" fn bdom_cycle_upper_bound(n: u32, t: u32, r: u32, out: *mut u64) -> BdomStatus {
    formula(out, || closed_forms::cycle_upper_bound(n, t, r))
}

#[no_mangle]
pub extern "C" fn bdom_grid_gamma(m: u32, n: u32, t: u32, r: u32, out: *mut u64) -> BdomStatus {
    formula(out, || closed_forms::grid_gamma(m, n, t, r))
}

#[no_mangle]
pub extern "C" fn bdom_grid3d_2_2_k_gamma(k: u32, t: u32, r: u32, out: *mut u64) -> BdomStatus {
    formula(out, || closed_forms::grid3d_2_2_k_gamma(k, t, r))
}

#[no_mangle]
pub extern "C" fn bdom_king_gamma(m: u32, n: u32, t: u32, r: u32, out: *mut u64) -> BdomStatus {
    formula(out, || closed_forms::king_gamma(m, n, t, r))
}

#[no_mangle]
pub extern "C" fn bdom_slant_gamma_2xn(n: u32, t: u32, r: u32, out: *mut u64) -> BdomStatus {
    formula(out, || closed_forms::slant_gamma_2xn(n, t, r))
}

#[no_mangle]
pub extern "C" fn bdom_slant_upper_bound(m: u32, n: u32, t: u32, r: u32, out: *mut u64) -> BdomStatus {
    formula(out, || closed_forms::slant_upper_bound(m, n, t, r))
}
