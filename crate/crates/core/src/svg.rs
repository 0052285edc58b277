//! SVG drawings of m-diagrams, 2-webs and planar webs.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::mdiagram::{ArcKind, MDiagram};
use crate::web::{EdgeTag, PlanarWeb};
use crate::web2::Matching2;

const MARGIN: f64 = 30.0;
const FIRST: &str = "#c0392b";
const SECOND: &str = "#2e6fd8";

struct Canvas {
    body: String,
    width: f64,
    height: f64,
}

impl Canvas {
    fn new(width: f64, height: f64) -> Self {
        Canvas { body: String::new(), width, height }
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), style: &str) {
        let _ = writeln!(self.body, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#, a.0, a.1, b.0, b.1);
    }

    fn polyline(&mut self, pts: &[(f64, f64)], style: &str) {
        let pts: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let _ = writeln!(self.body, r#"<polyline points="{}" fill="none" {style}/>"#, pts.join(" "));
    }

    fn circle(&mut self, c: (f64, f64), r: f64, style: &str) {
        let _ = writeln!(self.body, r#"<circle cx="{:.2}" cy="{:.2}" r="{r}" {style}/>"#, c.0, c.1);
    }

    fn text(&mut self, at: (f64, f64), s: &str) {
        let _ = writeln!(
            self.body,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="middle" font-family="sans-serif">{s}</text>"#,
            at.0, at.1
        );
    }

    /// Upper semicircle from `a` to `b` on the baseline.
    fn semicircle(&mut self, a: (f64, f64), b: (f64, f64), style: &str) {
        let r = (b.0 - a.0).abs() / 2.0;
        let sweep = if a.0 < b.0 { 1 } else { 0 };
        let _ = writeln!(
            self.body,
            r#"<path d="M {:.2} {:.2} A {r:.2} {r:.2} 0 0 {sweep} {:.2} {:.2}" fill="none" {style}/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body,
            w = self.width,
            h = self.height
        )
    }
}

/// Semicircular arcs over the boundary line; first arcs red, second arcs
/// blue, crossings marked with a dot and arrowheads at arc heads.
pub fn render_mdiagram(d: &MDiagram) -> String {
    let xs: Vec<i64> = d.boundary().iter().map(|b| b.x).collect();
    let (lo, hi) = (xs.iter().copied().min().unwrap_or(0), xs.iter().copied().max().unwrap_or(0));
    let unit = 40.0;
    let span = (hi - lo) as f64 * unit;
    let tallest = d.arcs().iter().map(|a| (xs[a.tail] - xs[a.head]).abs()).max().unwrap_or(0) as f64 * unit / 2.0;
    let height = tallest + 2.0 * MARGIN + 20.0;
    let base = height - MARGIN - 10.0;
    let px = |x: f64| MARGIN + (x - lo as f64) * unit;
    let mut c = Canvas::new(span + 2.0 * MARGIN, height);
    c.line((MARGIN - 10.0, base), (MARGIN + span + 10.0, base), r##"stroke="#999""##);
    for arc in d.arcs() {
        let (a, b) = (xs[arc.tail] as f64, xs[arc.head] as f64);
        let colour = if arc.kind == ArcKind::First { FIRST } else { SECOND };
        let dash = if arc.crossed { r#" stroke-dasharray="6 3""# } else { "" };
        c.semicircle((px(a), base), (px(b), base), &format!(r#"stroke="{colour}" stroke-width="2"{dash}"#));
        let hx = px(b);
        let head = format!("{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}", hx, base, hx - 4.0, base - 9.0, hx + 4.0, base - 9.0);
        let _ = writeln!(c.body, r#"<polygon points="{head}" fill="{colour}"/>"#);
    }
    for (a, _, x) in d.crossings() {
        let x = *x.numer() as f64 / *x.denom() as f64;
        let (s, e) = d.span(a);
        let (centre, r) = ((s + e) as f64 / 2.0, (e - s) as f64 / 2.0);
        let y = (r * r - (x - centre) * (x - centre)).max(0.0).sqrt();
        c.circle((px(x), base - y * unit), 3.5, r#"fill="black""#);
    }
    for (b, &x) in d.boundary().iter().zip(&xs) {
        c.circle((px(x as f64), base), 3.0, r#"fill="black""#);
        c.text((px(x as f64), base + 18.0), &b.label);
    }
    c.finish()
}

/// Boundary points `1..=2n` on a line with semicircular arcs.
pub fn render_web2(m: &Matching2) -> String {
    let unit = 36.0;
    let n2 = 2 * m.n();
    let span = (n2.max(1) - 1) as f64 * unit;
    let height = span / 2.0 + 2.0 * MARGIN + 20.0;
    let base = height - MARGIN - 10.0;
    let px = |k: usize| MARGIN + (k - 1) as f64 * unit;
    let mut c = Canvas::new(span + 2.0 * MARGIN, height);
    c.line((MARGIN - 10.0, base), (MARGIN + span + 10.0, base), r##"stroke="#999""##);
    for &(a, b) in m.arcs() {
        c.semicircle((px(a), base), (px(b), base), r#"stroke="black" stroke-width="2""#);
    }
    for k in 1..=n2 {
        c.circle((px(k), base), 3.0, r#"fill="black""#);
        c.text((px(k), base + 18.0), &k.to_string());
    }
    c.finish()
}

/// Coordinates for every vertex: the web's own layout when it has one,
/// otherwise boundary vertices on a circle and internal vertices placed by
/// barycentric relaxation.
pub fn web_coordinates(w: &PlanarWeb) -> Vec<(f64, f64)> {
    if let Some(l) = w.layout() {
        if l.vertices.len() == w.num_vertices() {
            return l.vertices.clone();
        }
    }
    let n = w.n_boundary();
    let mut pos = vec![(0.0, 0.0); w.num_vertices()];
    for (b, p) in pos.iter_mut().enumerate().take(n) {
        let t = -PI / 2.0 - PI / n as f64 + 2.0 * PI * b as f64 / n as f64;
        *p = (t.cos(), t.sin());
    }
    let mut nbrs = vec![Vec::new(); w.num_vertices()];
    for e in w.edges() {
        nbrs[e.from].push(e.to);
        nbrs[e.to].push(e.from);
    }
    for _ in 0..2000 {
        for v in n..w.num_vertices() {
            let k = nbrs[v].len() as f64;
            let (sx, sy) = nbrs[v].iter().fold((0.0, 0.0), |(x, y), &u| (x + pos[u].0, y + pos[u].1));
            pos[v] = (sx / k, sy / k);
        }
    }
    pos
}

/// Draws a web; intersection edges dashed, boundary edges grey.
pub fn render_web(w: &PlanarWeb) -> String {
    let pos = web_coordinates(w);
    let paths = w.layout().map(|l| l.paths.clone()).unwrap_or_default();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in pos.iter().chain(paths.iter().flatten()) {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let scale = 420.0 / (x1 - x0).max(y1 - y0).max(1e-9);
    let map = |(x, y): (f64, f64)| (MARGIN + (x - x0) * scale, MARGIN + (y1 - y) * scale);
    let mut c = Canvas::new((x1 - x0) * scale + 2.0 * MARGIN, (y1 - y0) * scale + 2.0 * MARGIN + 10.0);
    for (i, e) in w.edges().iter().enumerate() {
        let style = match e.tag {
            EdgeTag::Boundary => r##"stroke="#bbb" stroke-width="1""##,
            EdgeTag::Arc => r#"stroke="black" stroke-width="2""#,
            EdgeTag::Intersection => r##"stroke="#555" stroke-width="2" stroke-dasharray="4 3""##,
        };
        match paths.get(i) {
            Some(p) if p.len() >= 2 => c.polyline(&p.iter().map(|&q| map(q)).collect::<Vec<_>>(), style),
            _ => c.line(map(pos[e.from]), map(pos[e.to]), style),
        }
    }
    for (v, &p) in pos.iter().enumerate() {
        let p = map(p);
        if w.is_boundary_vertex(v) {
            c.circle(p, 3.5, r#"fill="black""#);
            c.text((p.0, p.1 + 18.0), &(v + 1).to_string());
        } else {
            c.circle(p, 3.0, r#"fill="white" stroke="black""#);
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Tableau;
    use crate::web3::web_of_tableau;

    #[test]
    fn drawings_are_well_formed() {
        let t = Tableau::from_word("112323").unwrap();
        let d = MDiagram::of_tableau(&t).unwrap();
        let s = render_mdiagram(&d);
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
        assert_eq!(s.matches("<path").count(), d.arcs().len());
        let w = web_of_tableau(&t).unwrap();
        let s = render_web(&w.rotate());
        assert_eq!(s.matches("<line").count() + s.matches("<polyline").count(), w.edges().len());
        let m = Matching2::new(2, vec![(1, 4), (2, 3)]).unwrap();
        assert_eq!(render_web2(&m).matches("<path").count(), 2);
    }

    #[test]
    fn relaxation_keeps_internal_vertices_inside() {
        let w = web_of_tableau(&Tableau::from_word("112323").unwrap()).unwrap().rotate();
        for &(x, y) in &web_coordinates(&w)[w.n_boundary()..] {
            assert!(x * x + y * y < 1.0);
        }
    }
}
