use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::exactnum::CycNum;
use crate::model::{CanonicalCode, KPolyomino};

/// Pixels per lattice step.
pub const SCALE: f64 = 100.0;
const MARGIN: f64 = 10.0;
const RENDER_BITS: u32 = 64;

/// Cell outlines in lattice units, counter-clockwise.
pub fn cell_polygons(p: &KPolyomino) -> Vec<Vec<(f64, f64)>> {
    let k = p.k();
    // vertices come scaled by 2cos(π/k)
    let c = CycNum::two_cos_pi_over_k(k).to_float(RENDER_BITS).re.midpoint();
    p.cells()
        .iter()
        .map(|cell| {
            cell.vertices()
                .iter()
                .map(|v| {
                    let (x, y) = v.to_float(RENDER_BITS).midpoint();
                    (x / c, y / c)
                })
                .collect()
        })
        .collect()
}

pub fn render_svg(p: &KPolyomino) -> String {
    let polys = cell_polygons(p);
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in polys.iter().flatten() {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let width = (x1 - x0) * SCALE + 2.0 * MARGIN;
    let height = (y1 - y0) * SCALE + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    for poly in &polys {
        let points: Vec<String> = poly
            .iter()
            .map(|&(x, y)| format!("{:.3},{:.3}", (x - x0) * SCALE + MARGIN, (y1 - y) * SCALE + MARGIN))
            .collect();
        let _ = writeln!(
            out,
            r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            points.join(" ")
        );
    }
    out.push_str("</svg>\n");
    out
}

/// First 8 hex digits of the SHA-256 of the code.
pub fn short_hash(code: &CanonicalCode) -> String {
    let digest = Sha256::digest(code.to_bytes());
    digest.iter().take(4).map(|b| format!("{b:02x}")).collect()
}

/// Writes one SVG per polyomino; returns the paths in order.
pub fn write_all<'a>(
    dir: &Path,
    items: impl Iterator<Item = (&'a CanonicalCode, &'a KPolyomino)>,
) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut paths = Vec::new();
    for (i, (code, p)) in items.enumerate() {
        let path = dir.join(format!("{:04}-n{}-{}.svg", i + 1, p.n(), short_hash(code)));
        std::fs::write(&path, render_svg(p))?;
        paths.push(path);
    }
    Ok(paths)
}
