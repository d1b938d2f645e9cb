//! SVG drawings of circle families and DOT Hasse diagrams of lattices.

use std::fmt::Write as _;

use circgeo_core::lattice::FiniteLattice;
use circgeo_core::rational::to_f64;
use circgeo_core::CircleFamily;

/// Pixels per unit length.
pub const SCALE: f64 = 40.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Circles drawn to scale with id labels and the x-axis. The y-axis points up.
pub fn svg(family: &CircleFamily) -> String {
    let circles: Vec<(f64, f64, f64)> = family
        .members()
        .iter()
        .map(|m| (to_f64(&m.circle.cx), to_f64(&m.circle.cy), to_f64(&m.circle.r)))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
    for &(x, y, r) in &circles {
        x0 = x0.min(x - r);
        x1 = x1.max(x + r);
        y0 = y0.min(y - r);
        y1 = y1.max(y + r);
    }
    let margin = 1.0;
    let (vx, vy) = ((x0 - margin) * SCALE, -(y1 + margin) * SCALE);
    let (w, h) = ((x1 - x0 + 2.0 * margin) * SCALE, (y1 - y0 + 2.0 * margin) * SCALE);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.3} {vy:.3} {w:.3} {h:.3}" width="{w:.0}" height="{h:.0}">"#
    );
    let _ = writeln!(
        out,
        r#"  <line class="axis" x1="{:.3}" y1="0" x2="{:.3}" y2="0" stroke="gray" stroke-width="1"/>"#,
        vx,
        vx + w
    );
    for (m, &(x, y, r)) in family.members().iter().zip(&circles) {
        let (cx, cy) = (x * SCALE, -y * SCALE);
        let _ = writeln!(
            out,
            r#"  <circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="1"/>"#,
            r * SCALE
        );
        let _ = writeln!(
            out,
            r#"  <text x="{cx:.3}" y="{:.3}" font-size="12" text-anchor="middle">{}</text>"#,
            cy - r * SCALE - 4.0,
            escape(&m.id)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Hasse diagram with edges from lower to upper covers, drawn bottom to top.
pub fn dot(l: &FiniteLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for x in 0..l.len() {
        let label = l.label(x).replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(out, "  n{x} [label=\"{label}\"];");
    }
    for (a, b) in l.cover_pairs() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use circgeo_core::geometry::FamilyKind;
    use circgeo_core::rational::int;
    use circgeo_core::CollinearCircle;

    #[test]
    fn svg_structure() {
        let fam = CircleFamily::collinear([
            ("A", CollinearCircle::new(int(0), int(1))),
            ("B", CollinearCircle::new(int(2), int(1))),
            ("C", CollinearCircle::new(int(4), int(1))),
        ])
        .unwrap();
        let s = svg(&fam);
        assert_eq!(s.matches("<circle").count(), 3);
        assert_eq!(s.matches("<line").count(), 1);
        assert_eq!(s, svg(&fam));
        let empty = CircleFamily::new(FamilyKind::Collinear, Vec::new()).unwrap();
        let s = svg(&empty);
        assert_eq!(s.matches("<circle").count(), 0);
        assert_eq!(s.matches("<line").count(), 1);
    }

    #[test]
    fn dot_structure() {
        let l = FiniteLattice::boolean(2);
        let d = dot(&l);
        assert_eq!(d.matches("[label=").count(), 4);
        assert_eq!(d.matches("->").count(), 4);
    }
}
