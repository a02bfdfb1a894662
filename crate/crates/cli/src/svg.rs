use std::fmt::Write;

use num_traits::ToPrimitive;

use multisplit::{PointConfiguration, Rational, Subdivision};

const SIZE: f64 = 400.0;
const MARGIN: f64 = 30.0;
const FILLS: [&str; 6] = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462"];

/// Cells as filled polygons over the labelled points; the plane is flipped so
/// `y` grows upwards.
pub fn render(pc: &PointConfiguration<Rational>, s: &Subdivision<Rational>) -> String {
    let pts: Vec<(f64, f64)> = pc
        .points()
        .iter()
        .map(|p| (p[0].to_f64().unwrap_or(0.0), p[1].to_f64().unwrap_or(0.0)))
        .collect();
    let (min_x, max_x) = bounds(pts.iter().map(|p| p.0));
    let (min_y, max_y) = bounds(pts.iter().map(|p| p.1));
    let scale = (SIZE - 2.0 * MARGIN) / (max_x - min_x).max(max_y - min_y).max(f64::EPSILON);
    let screen = |(x, y): (f64, f64)| (MARGIN + (x - min_x) * scale, SIZE - MARGIN - (y - min_y) * scale);

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    for (ci, cell) in s.cells().iter().enumerate() {
        let hull = convex_hull(cell.iter().map(|&i| pts[i]).collect());
        let coords: Vec<String> = hull
            .into_iter()
            .map(|p| {
                let (x, y) = screen(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"  <polygon points="{}" fill="{}" fill-opacity="0.7" stroke="black" stroke-width="1.5"/>"#,
            coords.join(" "),
            FILLS[ci % FILLS.len()]
        );
    }
    let covered = s.covered_points();
    for (i, &p) in pts.iter().enumerate() {
        let (x, y) = screen(p);
        let fill = if covered[i] { "black" } else { "white" };
        let _ = writeln!(out, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="4" fill="{fill}" stroke="black"/>"#);
        let _ = writeln!(out, r#"  <text x="{:.2}" y="{:.2}" font-size="12">{i}</text>"#, x + 6.0, y - 6.0);
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

/// Monotone chain, counter-clockwise, collinear points dropped.
fn convex_hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(2 * pts.len());
    for pass in [pts.clone(), pts.iter().rev().copied().collect()] {
        let start = hull.len();
        for p in pass {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let square = vec![(0.0, 0.0), (3.0, 0.0), (1.5, 0.0), (0.0, 3.0), (3.0, 3.0), (1.0, 1.0)];
        assert_eq!(convex_hull(square), vec![(0.0, 0.0), (3.0, 0.0), (3.0, 3.0), (0.0, 3.0)]);
    }
}
