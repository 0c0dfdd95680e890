//! SVG pictures of Newton polygons.
//!
//! The horizontal axis is the exponent `beta` of `lambda`, the vertical axis the
//! exponent `alpha` of `t`. Every lattice point `(alpha, beta)` with `beta < D` and
//! `alpha <= mu + 1` gets a cell carrying `data-alpha`, `data-beta` and
//! `data-admissible`; admissible cells are shaded.

use std::fmt::Write;

use crate::type_d::NewtonPolygon;

const CELL: usize = 36;
const MARGIN: usize = 48;

pub fn newton_svg(polygon: &NewtonPolygon) -> String {
    let d = polygon.degree;
    let top = polygon.mu() + 1;
    let width = 2 * MARGIN + d * CELL;
    let height = 2 * MARGIN + top * CELL;
    let x = |beta: usize| MARGIN + beta * CELL;
    let y = |alpha: usize| height - MARGIN - alpha * CELL;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let delta: Vec<String> = polygon.delta.iter().map(|p| p.to_string()).collect();
    let _ = writeln!(
        s,
        "<title>Newton polygon, delta = ({})</title>",
        delta.join(",")
    );
    let _ = writeln!(
        s,
        r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##
    );
    let half = CELL / 2;
    for alpha in 0..=top {
        for beta in 0..d {
            let ok = polygon.allows(alpha, beta);
            let fill = if ok { "#9ecae1" } else { "#f7f7f7" };
            let _ = writeln!(
                s,
                r##"<rect class="cell" data-alpha="{alpha}" data-beta="{beta}" data-admissible="{ok}" x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#d9d9d9"/>"##,
                x(beta) - half,
                y(alpha) - half
            );
        }
    }
    for beta in 0..=d {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">{beta}</text>"#,
            x(beta),
            height - MARGIN / 4
        );
    }
    for alpha in 0..=top {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">{alpha}</text>"#,
            MARGIN / 4,
            y(alpha) + 4
        );
    }
    let vertices: Vec<String> = polygon
        .partial_sums
        .iter()
        .enumerate()
        .map(|(j, sum)| format!("{},{}", x(d - sum), y(j)))
        .collect();
    let _ = writeln!(
        s,
        r##"<polyline class="boundary" points="{}" fill="none" stroke="#08519c" stroke-width="2"/>"##,
        vertices.join(" ")
    );
    for edge in &polygon.even_edges {
        for &(alpha, beta) in &edge.pairs {
            let _ = writeln!(
                s,
                r##"<circle class="relevant" data-alpha="{alpha}" data-beta="{beta}" cx="{}" cy="{}" r="5" fill="#cb181d"/>"##,
                x(beta),
                y(alpha)
            );
        }
    }
    s.push_str("</svg>\n");
    s
}
