//! SVG drawings of hexagonal systems and DOT output for their dual graphs.

use std::fmt::Write;

use crate::hexgrid::{Color, DualVertex, EdgeSet, HexSystem};

const UNIT: f64 = 40.0;
const MARGIN: f64 = 30.0;
// Lattice x steps are half an edge apart horizontally, lattice y steps half
// an edge vertically; this maps unit hexagons to regular ones.
const X_SCALE: f64 = 0.866_025_403_784_438_6; // sqrt(3)/2
const Y_SCALE: f64 = 0.5;

fn project(x: i64, y: i64) -> (f64, f64) {
    (x as f64 * X_SCALE * UNIT, -(y as f64) * Y_SCALE * UNIT)
}

fn fmt_coord(v: f64) -> String {
    format!("{v:.2}")
}

/// Renders the system as an SVG drawing: edges as lines (those in
/// `highlight` thick and red), vertices as filled circles by color class.
pub fn svg(hs: &HexSystem, highlight: &EdgeSet) -> String {
    let (mut min_x, mut min_y) = (f64::MAX, f64::MAX);
    let (mut max_x, mut max_y) = (f64::MIN, f64::MIN);
    for v in hs.vertices() {
        let (px, py) = project(v.x, v.y);
        min_x = min_x.min(px);
        min_y = min_y.min(py);
        max_x = max_x.max(px);
        max_y = max_y.max(py);
    }
    let (ox, oy) = (min_x - MARGIN, min_y - MARGIN);
    let width = max_x - min_x + 2.0 * MARGIN;
    let height = max_y - min_y + 2.0 * MARGIN;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fmt_coord(width),
        h = fmt_coord(height),
    )
    .unwrap();
    // Plain edges first, highlighted ones on top.
    for pass in [false, true] {
        for e in hs.edges() {
            if highlight.contains(e) != pass {
                continue;
            }
            let (u, v) = e.endpoints();
            let (x1, y1) = project(u.x, u.y);
            let (x2, y2) = project(v.x, v.y);
            let style = if pass {
                r##"stroke="#c0392b" stroke-width="5""##
            } else {
                r##"stroke="#555555" stroke-width="2""##
            };
            writeln!(
                out,
                r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" {style}/>"#,
                fmt_coord(x1 - ox),
                fmt_coord(y1 - oy),
                fmt_coord(x2 - ox),
                fmt_coord(y2 - oy),
            )
            .unwrap();
        }
    }
    for v in hs.vertices() {
        let (px, py) = project(v.x, v.y);
        let fill = match v.color() {
            Color::Black => "#000000",
            Color::White => "#ffffff",
        };
        writeln!(
            out,
            r##"  <circle cx="{}" cy="{}" r="5" fill="{fill}" stroke="#000000" stroke-width="1.5"/>"##,
            fmt_coord(px - ox),
            fmt_coord(py - oy),
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn dual_node_name(v: DualVertex) -> String {
    match v {
        DualVertex::Hexagon(c) => format!("h_{}_{}", c.cx, c.cy).replace('-', "m"),
        DualVertex::Exterior => "ext".to_string(),
    }
}

/// Renders the dual graph (hexagons plus the exterior face) in DOT format.
pub fn dual_dot(hs: &HexSystem) -> String {
    let dual = hs.dual_graph();
    let mut out = String::from("graph dual {\n");
    out.push_str("  node [shape=circle];\n");
    out.push_str("  ext [shape=doublecircle];\n");
    for h in dual.hexagons() {
        writeln!(
            out,
            "  {} [label=\"{},{}\"];",
            dual_node_name(DualVertex::Hexagon(*h)),
            h.cx,
            h.cy
        )
        .unwrap();
    }
    for e in dual.edges() {
        writeln!(
            out,
            "  {} -- {};",
            dual_node_name(e.a),
            dual_node_name(e.b)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexgrid::{build_hexsystem, HexCenter};
    use std::collections::BTreeSet;

    fn hs(centers: &[(i64, i64)]) -> HexSystem {
        let set: BTreeSet<HexCenter> =
            centers.iter().map(|&(x, y)| HexCenter::new(x, y)).collect();
        build_hexsystem(&set).unwrap()
    }

    #[test]
    fn svg_contains_every_edge_and_vertex() {
        let system = hs(&[(0, 0), (2, 0)]);
        let highlight: EdgeSet = [*system.edges().first().unwrap()].into_iter().collect();
        let image = svg(&system, &highlight);
        assert!(image.starts_with("<svg "));
        assert!(image.trim_end().ends_with("</svg>"));
        assert_eq!(image.matches("<line ").count(), system.edges().len());
        assert_eq!(image.matches("<circle ").count(), system.vertices().len());
        assert_eq!(image.matches("#c0392b").count(), 1);
    }

    #[test]
    fn svg_is_deterministic() {
        let system = hs(&[(0, 0), (2, 0), (1, 3)]);
        let a = svg(&system, &EdgeSet::new());
        let b = svg(&system, &EdgeSet::new());
        assert_eq!(a, b);
    }

    #[test]
    fn dot_lists_dual_vertices_and_edges() {
        let system = hs(&[(0, 0), (2, 0)]);
        let dual = system.dual_graph();
        let dot = dual_dot(&system);
        assert!(dot.starts_with("graph dual {"));
        assert!(dot.trim_end().ends_with('}'));
        assert_eq!(dot.matches(" -- ").count(), dual.edges().len());
        assert!(dot.contains("ext"));
        assert!(dot.contains("h_0_0"));
        // Negative coordinates must stay valid DOT identifiers.
        let negative = hs(&[(0, 0), (-1, 3)]);
        assert!(dual_dot(&negative).contains("h_m1_3"));
    }
}
