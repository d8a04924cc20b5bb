//! Minimal static SVG figures: a 2-D scatter of the clusters and a dendrogram.

use std::fmt::Write;

use crate::divisive::ClusteringResult;
use crate::model::{Dataset, Dendrogram};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 40.0;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

fn header(out: &mut String) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
}

/// Maps `[lo, hi]` onto `[a, b]`; a zero-width range maps to the midpoint.
fn scale(x: f64, lo: f64, hi: f64, a: f64, b: f64) -> f64 {
    if hi > lo {
        a + (x - lo) / (hi - lo) * (b - a)
    } else {
        (a + b) / 2.0
    }
}

/// Scatter plot of a 2-D dataset colored by cluster, with centers drawn as
/// crosses. Returns an empty figure for other dimensions.
pub fn scatter_svg(dataset: &Dataset, result: &ClusteringResult) -> String {
    let mut out = String::new();
    header(&mut out);
    if dataset.dimension() == 2 {
        let bounds = |axis: usize| {
            dataset.points().iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
                (lo.min(p.coords()[axis]), hi.max(p.coords()[axis]))
            })
        };
        let ((x0, x1), (y0, y1)) = (bounds(0), bounds(1));
        let px = |c: &[f64]| {
            (
                scale(c[0], x0, x1, MARGIN, WIDTH - MARGIN),
                scale(c[1], y0, y1, HEIGHT - MARGIN, MARGIN),
            )
        };
        for (i, id) in result.assignments().into_iter().enumerate() {
            let (x, y) = px(dataset.point(i).coords());
            writeln!(
                out,
                r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{}"/>"#,
                PALETTE[id % PALETTE.len()]
            )
            .unwrap();
        }
        for center in &result.centers {
            let (x, y) = px(center.coords());
            writeln!(
                out,
                r#"<path d="M{:.2} {:.2}L{:.2} {:.2}M{:.2} {:.2}L{:.2} {:.2}" stroke="black" stroke-width="2"/>"#,
                x - 6.0,
                y - 6.0,
                x + 6.0,
                y + 6.0,
                x - 6.0,
                y + 6.0,
                x + 6.0,
                y - 6.0
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Dendrogram drawn with leaves along the bottom and merge levels as height.
pub fn dendrogram_svg(dendrogram: &Dendrogram) -> String {
    let k = dendrogram.leaf_count();
    let merges = dendrogram.merges();
    let top = merges.last().map_or(0.0, |m| m.level);

    // Leaf order from a left-to-right walk so that links never cross.
    let mut order = Vec::with_capacity(k);
    let mut stack = vec![dendrogram.root().unwrap_or(0)];
    while let Some(node) = stack.pop() {
        if node < k {
            order.push(node);
        } else {
            let m = merges[node - k];
            stack.push(m.right);
            stack.push(m.left);
        }
    }
    let mut x_of = vec![0.0; k + merges.len()];
    for (slot, &leaf) in order.iter().enumerate() {
        x_of[leaf] = scale(slot as f64, 0.0, (k.max(2) - 1) as f64, MARGIN, WIDTH - MARGIN);
    }
    let y_of = |level: f64| scale(level, 0.0, top, HEIGHT - MARGIN, MARGIN);

    let mut out = String::new();
    header(&mut out);
    for m in merges {
        let (xl, xr) = (x_of[m.left], x_of[m.right]);
        let (yl, yr) = (y_of(dendrogram.node_level(m.left)), y_of(dendrogram.node_level(m.right)));
        let y = y_of(m.level);
        writeln!(
            out,
            r#"<path d="M{xl:.2} {yl:.2}V{y:.2}H{xr:.2}V{yr:.2}" fill="none" stroke="black"/>"#
        )
        .unwrap();
        x_of[m.new_node] = (xl + xr) / 2.0;
    }
    for &leaf in &order {
        writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle">C{leaf}</text>"#,
            x_of[leaf],
            HEIGHT - MARGIN + 14.0
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
