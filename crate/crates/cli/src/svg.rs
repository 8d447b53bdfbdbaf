//! Arc diagrams as SVG. Vertices sit on a baseline; a degree-2 vertex is
//! split into its two inflated endpoints so that the crossed motif is drawn
//! as actually crossing.

use std::fmt::Write as _;

use tanglekit::{Label, TangledDiagram};

const STEP: f64 = 60.0;
const SPLIT: f64 = 7.0;
const MARGIN: f64 = 30.0;
const LOOP_RADIUS: f64 = 9.0;

fn x_of(d: &TangledDiagram, label: Label) -> f64 {
    let centre = STEP * label.vertex as f64;
    if d.degree(label.vertex) < 2 {
        centre
    } else if label.primed {
        centre + SPLIT
    } else {
        centre - SPLIT
    }
}

pub fn render(d: &TangledDiagram) -> String {
    let inflated = d.inflate();
    let arcs: Vec<(f64, f64)> = inflated
        .arcs()
        .iter()
        .filter(|(a, b)| a.vertex != b.vertex)
        .map(|&(a, b)| (x_of(d, a), x_of(d, b)))
        .collect();
    let tallest = arcs
        .iter()
        .map(|(a, b)| (b - a) / 2.0)
        .fold(LOOP_RADIUS * 2.0, f64::max);
    let width = STEP * (d.n() as f64 + 1.0);
    let base = MARGIN + tallest;
    let height = base + MARGIN;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(s, r#"<title>{d}</title>"#);
    let _ = writeln!(
        s,
        r##"<line x1="{:.1}" y1="{base:.1}" x2="{:.1}" y2="{base:.1}" stroke="#bbbbbb" stroke-width="1"/>"##,
        STEP / 2.0,
        width - STEP / 2.0
    );
    for (a, b) in &arcs {
        let r = (b - a) / 2.0;
        let _ = writeln!(
            s,
            r##"<path d="M {a:.1} {base:.1} A {r:.1} {r:.1} 0 0 1 {b:.1} {base:.1}" fill="none" stroke="#1f4e79" stroke-width="2"/>"##
        );
    }
    for v in 1..=d.n() {
        let x = STEP * v as f64;
        if d.arcs().contains(&(v, v)) {
            let _ = writeln!(
                s,
                r##"<circle cx="{x:.1}" cy="{:.1}" r="{LOOP_RADIUS:.1}" fill="none" stroke="#1f4e79" stroke-width="2"/>"##,
                base - LOOP_RADIUS
            );
        }
        if d.is_crossed(v) {
            let _ = writeln!(
                s,
                r##"<circle class="crossed" cx="{x:.1}" cy="{base:.1}" r="6.0" fill="#c0392b" stroke="#000000" stroke-width="1"/>"##
            );
        } else {
            let _ = writeln!(s, r##"<circle cx="{x:.1}" cy="{base:.1}" r="4.0" fill="#000000"/>"##);
        }
        let _ = writeln!(
            s,
            r#"<text x="{x:.1}" y="{:.1}" font-family="sans-serif" font-size="12" text-anchor="middle">{v}</text>"#,
            base + 20.0
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn svg(literal: &str) -> String {
        render(&literal.parse().unwrap())
    }

    #[test]
    fn crossing_arcs() {
        let out = svg("n=4; arcs=(1,3)(2,4)");
        assert_eq!(out.matches("<path").count(), 2);
        assert!(out.contains("M 60.0 "));
        assert!(out.contains("M 120.0 "));
        assert_eq!(out, svg("n=4; arcs=(1,3)(2,4)"));
    }

    #[test]
    fn loops_and_isolated_points() {
        let out = svg("n=1; arcs=(1,1)");
        assert_eq!(out.matches("<path").count(), 0);
        assert_eq!(out.matches("fill=\"none\"").count(), 1);
        let empty = svg("n=3");
        assert_eq!(empty.matches("<circle").count(), 3);
        assert_eq!(empty.matches("<path").count(), 0);
    }

    #[test]
    fn crossed_vertex_is_marked_and_split() {
        let out = svg("n=3; arcs=(1,2)(2,3); crossed=2");
        assert_eq!(out.matches("class=\"crossed\"").count(), 1);
        // endpoints at 2 and 2' straddle the vertex
        assert!(out.contains(" 113.0 ") || out.contains(" 127.0 "));
    }
}
