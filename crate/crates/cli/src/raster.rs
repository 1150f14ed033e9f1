//! Rasterization of the projected stability region over a rectangle of the
//! `(u, v)` plane.

use rayon::prelude::*;
use std::io::{self, Write};
use trinom::region::{self, RegionTag};
use trinom::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RasterSpec {
    pub n: u32,
    pub m: u32,
    pub umin: f64,
    pub umax: f64,
    pub vmin: f64,
    pub vmax: f64,
    pub width: u32,
    pub height: u32,
}

impl Default for RasterSpec {
    fn default() -> Self {
        Self {
            n: 4,
            m: 3,
            umin: 0.0,
            umax: 1.75,
            vmin: -1.25,
            vmax: 1.25,
            width: 400,
            height: 400,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellTag {
    Cohn,
    Gamma,
    Delta,
    Outside,
    /// The classification was decided within tolerance of a boundary.
    Marginal,
}

impl CellTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CellTag::Cohn => "cohn",
            CellTag::Gamma => "gamma",
            CellTag::Delta => "delta",
            CellTag::Outside => "outside",
            CellTag::Marginal => "marginal",
        }
    }

    fn rgb(&self) -> (u8, u8, u8) {
        match self {
            CellTag::Gamma => (0, 158, 115),
            CellTag::Delta => (0, 114, 178),
            CellTag::Cohn => (86, 180, 233),
            CellTag::Outside => (240, 240, 240),
            CellTag::Marginal => (230, 159, 0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub u: f64,
    pub v: f64,
    pub tag: CellTag,
    pub two_omega: Option<f64>,
    pub t_bound: Option<f64>,
}

/// Row-major grid of classified cell centers; the first row sits at `vmax`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionRaster {
    pub spec: RasterSpec,
    pub cells: Vec<Cell>,
}

pub fn render(spec: RasterSpec, tol: Tolerances) -> Result<RegionRaster, String> {
    if spec.m == 0 || spec.n <= spec.m {
        return Err(format!(
            "exponents must satisfy n > m >= 1, got n={} m={}",
            spec.n, spec.m
        ));
    }
    if spec.width == 0 || spec.height == 0 {
        return Err("resolution must be at least 1x1".to_string());
    }
    if spec.umax <= spec.umin || spec.vmax <= spec.vmin {
        return Err("bounds must satisfy umin < umax and vmin < vmax".to_string());
    }
    let du = (spec.umax - spec.umin) / spec.width as f64;
    let dv = (spec.vmax - spec.vmin) / spec.height as f64;
    let cells: Vec<Cell> = (0..spec.height)
        .into_par_iter()
        .flat_map_iter(|row| {
            (0..spec.width).map(move |col| {
                let u = spec.umin + (col as f64 + 0.5) * du;
                let v = spec.vmax - (row as f64 + 0.5) * dv;
                let class = region::classify_point(u, v, spec.n, spec.m, tol);
                let tag = if class.marginal {
                    CellTag::Marginal
                } else {
                    match class.tag {
                        RegionTag::Cohn => CellTag::Cohn,
                        RegionTag::Gamma => CellTag::Gamma,
                        RegionTag::Delta => CellTag::Delta,
                        RegionTag::Outside => CellTag::Outside,
                    }
                };
                Cell {
                    u,
                    v,
                    tag,
                    two_omega: class.omega.map(|w| 2.0 * w),
                    t_bound: region::t_bound(&class, spec.n),
                }
            })
        })
        .collect();
    Ok(RegionRaster { spec, cells })
}

/// Plain (P3) portable pixmap, one pixel row per line.
pub fn write_ppm<W: Write>(mut out: W, raster: &RegionRaster) -> io::Result<()> {
    write!(
        out,
        "P3\n{} {}\n255\n",
        raster.spec.width, raster.spec.height
    )?;
    for row in raster.cells.chunks(raster.spec.width as usize) {
        let mut line = String::with_capacity(row.len() * 12);
        for (i, cell) in row.iter().enumerate() {
            let (r, g, b) = cell.tag.rgb();
            if i > 0 {
                line.push(' ');
            }
            line.push_str(&format!("{r} {g} {b}"));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// `u,v,tag,two_omega,t_bound` rows; undefined fields stay empty.
pub fn write_csv<W: Write>(mut out: W, raster: &RegionRaster) -> io::Result<()> {
    writeln!(out, "u,v,tag,two_omega,t_bound")?;
    for cell in &raster.cells {
        let two_omega = cell
            .two_omega
            .map(|w| format!("{w:.12}"))
            .unwrap_or_default();
        let t_bound = cell
            .t_bound
            .map(|b| format!("{b:.12}"))
            .unwrap_or_default();
        writeln!(
            out,
            "{:.9},{:.9},{},{},{}",
            cell.u,
            cell.v,
            cell.tag.as_str(),
            two_omega,
            t_bound
        )?;
    }
    Ok(())
}
