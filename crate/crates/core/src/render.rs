//! ASCII rendering of reception values with towers overlaid.
//!
//! One character per vertex: `T` for a tower, the reception digit otherwise,
//! `+` for anything above 9. Wide boards are cut to a column window.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{GraphFamily, GraphInstance, VertexId};
use crate::reception::{compute_reception, TowerSet};

/// Widest window drawn, in vertices.
pub const MAX_COLUMNS: u32 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    /// First column shown, 1-indexed.
    pub col_start: u32,
    /// Number of columns shown, capped at [`MAX_COLUMNS`].
    pub width: u32,
    /// Print the tower's own reception instead of `T`.
    pub digits_only: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { col_start: 1, width: MAX_COLUMNS, digits_only: false }
    }
}

fn glyph(value: u32, tower: bool) -> char {
    if tower {
        'T'
    } else if value > 9 {
        '+'
    } else {
        char::from_digit(value, 10).expect("single digit")
    }
}

pub fn render(g: &GraphInstance, ts: &TowerSet, opts: RenderOptions) -> Result<String> {
    let map = compute_reception(g, ts)?;
    let mut is_tower = vec![false; g.vertex_count()];
    for v in &ts.towers {
        is_tower[g.require_index(v)?] = true;
    }
    let cell = |v: VertexId| -> char {
        let i = g.index_of(&v).expect("vertex in graph");
        glyph(map.reception[i], is_tower[i] && !opts.digits_only)
    };

    let dims = g.family().dims();
    let ncols = if dims.len() == 1 { dims[0] } else { dims[1] };
    if opts.col_start == 0 || opts.col_start > ncols {
        return Err(Error::InvalidInput(format!(
            "column window starts at {} but the graph has columns 1..={ncols}",
            opts.col_start
        )));
    }
    let width = opts.width.clamp(1, MAX_COLUMNS);
    let lo = opts.col_start;
    let hi = (lo + width - 1).min(ncols);

    let mut out = String::new();
    writeln!(out, "{} t={}", g.family(), ts.t).unwrap();
    if lo > 1 || hi < ncols {
        writeln!(out, "columns {lo}..{hi} of {ncols}").unwrap();
    }
    let line = |out: &mut String, f: &dyn Fn(u32) -> char| {
        let s: String = (lo..=hi).map(f).collect();
        out.push_str(&s);
        out.push('\n');
    };
    match *g.family() {
        GraphFamily::Path { .. } | GraphFamily::Cycle { .. } | GraphFamily::Tree { .. } => {
            line(&mut out, &|c| cell(VertexId::Index(c)));
        }
        GraphFamily::Grid { m, .. } | GraphFamily::Slant { m, .. } | GraphFamily::King { m, .. } => {
            for r in 1..=m {
                line(&mut out, &|c| cell(VertexId::Cell(r, c)));
            }
        }
        GraphFamily::Grid3d { m, k, .. } => {
            for l in 1..=k {
                writeln!(out, "layer {l}").unwrap();
                for r in 1..=m {
                    line(&mut out, &|c| cell(VertexId::Voxel(r, c, l)));
                }
            }
        }
    }
    Ok(out)
}
