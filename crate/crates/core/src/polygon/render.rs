//! Text and SVG drawings of a principal polygon.
//!
//! Cell legend for the ASCII grid: `V` vertex, `#` lattice point counted by
//! the index, `o` another point of the cloud, `.` empty.

use std::collections::HashSet;
use std::fmt::Write;

use super::NewtonPolygon;

fn side_table(poly: &NewtonPolygon, out: &mut String) {
    for (j, s) in poly.sides().iter().enumerate() {
        let _ = writeln!(
            out,
            "side {}: ({},{})->({},{}) slope {} length {} height {} degree {} e {}",
            j + 1,
            s.start.0,
            s.start.1,
            s.end.0,
            s.end.1,
            s.slope_text(),
            s.length,
            s.height,
            s.degree,
            s.slope_den
        );
    }
}

fn extent(poly: &NewtonPolygon) -> (u64, u64) {
    let vs = poly.vertices();
    let width = vs.last().map_or(0, |v| v.0);
    let height = vs.iter().map(|v| v.1).max().unwrap_or(0);
    (width, height)
}

pub fn render_ascii(poly: &NewtonPolygon, deg_phi: u64) -> String {
    let (width, height) = extent(poly);
    let vertices: HashSet<(u64, u64)> = poly.vertices().into_iter().collect();
    let counted: HashSet<(u64, u64)> = poly.lattice_points_below().into_iter().collect();
    let cloud: HashSet<(u64, u64)> = poly
        .points()
        .iter()
        .filter_map(|pt| pt.ordinate.finite().map(|y| (pt.abscissa, y)))
        .collect();
    let label_width = height.to_string().len();
    let mut out = String::new();
    for y in (0..=height).rev() {
        let _ = write!(out, "{y:>label_width$} |");
        for i in 0..=width {
            let c = if vertices.contains(&(i, y)) {
                'V'
            } else if counted.contains(&(i, y)) {
                '#'
            } else if cloud.contains(&(i, y)) {
                'o'
            } else {
                '.'
            };
            out.push(' ');
            out.push(c);
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{:>label_width$} +{}", "", "--".repeat(width as usize + 1));
    let _ = writeln!(out, "{:>label_width$}   0 .. {width}", "");
    side_table(poly, &mut out);
    let _ = writeln!(
        out,
        "lattice points: {}  ind = {}",
        counted.len(),
        deg_phi * counted.len() as u64
    );
    out
}

pub fn render_svg(poly: &NewtonPolygon, deg_phi: u64) -> String {
    let (width, height) = extent(poly);
    let unit: u64 = (640 / width.max(height).max(1)).clamp(4, 48);
    let margin = 48u64;
    let w = width * unit + 2 * margin + 160;
    let h = height * unit + 2 * margin;
    let px = |i: u64| margin + i * unit;
    let py = |y: u64| margin + (height - y.min(height)) * unit;
    let counted: HashSet<(u64, u64)> = poly.lattice_points_below().into_iter().collect();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="monospace" font-size="11">"#
    );
    let _ = writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    // lattice
    for i in 0..=width {
        for y in 0..=height {
            let (cx, cy) = (px(i), py(y));
            if counted.contains(&(i, y)) {
                let _ = writeln!(out, r#"<circle class="counted" cx="{cx}" cy="{cy}" r="3" fill="black"/>"#);
            } else if unit >= 8 {
                let _ = writeln!(out, r##"<circle cx="{cx}" cy="{cy}" r="1" fill="#bbb"/>"##);
            }
        }
    }
    // axes
    let _ = writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(0),
        py(0),
        px(width) + unit / 2,
        py(0)
    );
    let _ = writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(0),
        py(0),
        px(0),
        margin.saturating_sub(unit / 2)
    );
    // point cloud
    for pt in poly.points() {
        if let Some(y) = pt.ordinate.finite() {
            if pt.abscissa <= width && y <= height {
                let _ = writeln!(
                    out,
                    r#"<circle class="point" cx="{}" cy="{}" r="4" fill="none" stroke="gray"/>"#,
                    px(pt.abscissa),
                    py(y)
                );
            }
        }
    }
    // polygon
    let vs = poly.vertices();
    let path: Vec<String> = vs.iter().map(|&(i, y)| format!("{},{}", px(i), py(y))).collect();
    let _ = writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="blue" stroke-width="2"/>"#,
        path.join(" ")
    );
    for &(i, y) in &vs {
        let _ = writeln!(
            out,
            r#"<circle class="vertex" cx="{}" cy="{}" r="4" fill="blue"/><text x="{}" y="{}">({i},{y})</text>"#,
            px(i),
            py(y),
            px(i) + 6,
            py(y) - 6
        );
    }
    for s in poly.sides() {
        let mx = (px(s.start.0) + px(s.end.0)) / 2;
        let my = (py(s.start.1) + py(s.end.1)) / 2;
        let _ = writeln!(
            out,
            r#"<text class="side" x="{}" y="{}" fill="blue">slope {} l={} H={} d={}</text>"#,
            mx + 8,
            my + 14,
            s.slope_text(),
            s.length,
            s.height,
            s.degree
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}">ind = {}</text>"#,
        margin,
        h - 12,
        deg_phi * counted.len() as u64
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Valuation;
    use crate::polygon::PolygonPoint;

    fn sample() -> NewtonPolygon {
        let pts = [(0, 3), (1, 1), (2, 0)]
            .map(|(i, y)| PolygonPoint { abscissa: i, ordinate: Valuation::Finite(y) })
            .to_vec();
        NewtonPolygon::from_points(2, pts)
    }

    #[test]
    fn ascii_marks_vertices_and_counted_points() {
        let text = render_ascii(&sample(), 2);
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows[0], "3 | V . .");
        assert_eq!(rows[2], "1 | . V .");
        assert!(text.contains("slope -2/1 length 1 height 2 degree 1"));
        assert!(text.contains("ind = 2"));
    }

    #[test]
    fn svg_has_one_filled_point_per_counted_lattice_point() {
        let svg = render_svg(&sample(), 2);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches(r#"class="counted""#).count(), 1);
        assert_eq!(svg.matches(r#"class="vertex""#).count(), 3);
        assert!(svg.contains("(0,3)"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
