//! SVG chord diagrams of flat basket codes.

use std::f64::consts::PI;
use std::fmt::Write;

use flatbasket::basket::code_to_diagram;
use flatbasket::FlatBasketCode;

const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub code: FlatBasketCode,
    pub width: u32,
    pub height: u32,
    pub show_labels: bool,
    /// Break lower chords under higher ones and mark each crossing with the
    /// colour of the band on top.
    pub shade_crossings: bool,
}

impl RenderSpec {
    pub fn new(code: FlatBasketCode, size: u32) -> Self {
        Self { code, width: size.max(1), height: size.max(1), show_labels: true, shade_crossings: true }
    }
}

fn colour(band: usize) -> &'static str {
    PALETTE[(band - 1) % PALETTE.len()]
}

fn intersection(p: (f64, f64), q: (f64, f64), r: (f64, f64), s: (f64, f64)) -> (f64, f64) {
    let d = (q.0 - p.0) * (s.1 - r.1) - (q.1 - p.1) * (s.0 - r.0);
    let t = ((r.0 - p.0) * (s.1 - r.1) - (r.1 - p.1) * (s.0 - r.0)) / d;
    (p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1))
}

pub fn render(spec: &RenderSpec) -> String {
    let (w, h) = (spec.width.max(1) as f64, spec.height.max(1) as f64);
    let (cx, cy) = (w / 2.0, h / 2.0);
    let radius = 0.4 * w.min(h);
    let diagram = code_to_diagram(&spec.code);
    let points = diagram.points();
    // counter-clockwise from the top; the y axis points down
    let at = |k: usize, r: f64| {
        let theta = PI / 2.0 + 2.0 * PI * k as f64 / points.max(1) as f64;
        (cx + r * theta.cos(), cy - r * theta.sin())
    };
    let stroke = (w.min(h) / 120.0).max(1.0);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        spec.width, spec.height, spec.width, spec.height
    );
    let _ = writeln!(out, "<title>flat basket code ({})</title>", spec.code);
    let _ = writeln!(
        out,
        r##"<circle class="disk" cx="{cx:.2}" cy="{cy:.2}" r="{radius:.2}" fill="#f4f4f4" stroke="black" stroke-width="{stroke:.2}"/>"##
    );

    for band in 1..=diagram.bands() {
        let (a, b) = diagram.chord(band);
        let (p, q) = (at(a, radius), at(b, radius));
        let _ = writeln!(out, r#"<g class="band" id="band-{band}">"#);
        if spec.shade_crossings {
            let _ = writeln!(
                out,
                r##"<line class="halo" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#f4f4f4" stroke-width="{:.2}"/>"##,
                p.0,
                p.1,
                q.0,
                q.1,
                4.0 * stroke
            );
        }
        let _ = writeln!(
            out,
            r#"<line class="chord" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}" stroke-width="{:.2}"/>"#,
            p.0,
            p.1,
            q.0,
            q.1,
            colour(band),
            1.5 * stroke
        );
        let _ = writeln!(out, "</g>");
    }

    if spec.shade_crossings {
        for (lo, hi) in diagram.interleaving_pairs() {
            let (a, b) = diagram.chord(lo);
            let (c, d) = diagram.chord(hi);
            let x = intersection(at(a, radius), at(b, radius), at(c, radius), at(d, radius));
            let _ = writeln!(
                out,
                r#"<circle class="crossing" data-over="{hi}" data-under="{lo}" cx="{:.2}" cy="{:.2}" r="{:.2}" fill="{}" fill-opacity="0.35"/>"#,
                x.0,
                x.1,
                3.0 * stroke,
                colour(hi)
            );
        }
    }

    for k in 0..points {
        let p = at(k, radius);
        let _ = writeln!(out, r#"<circle class="point" cx="{:.2}" cy="{:.2}" r="{:.2}" fill="black"/>"#, p.0, p.1, 1.5 * stroke);
        if spec.show_labels {
            let t = at(k, radius + 6.0 * stroke + 4.0);
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="{:.2}" text-anchor="middle" dominant-baseline="central">{}</text>"#,
                t.0,
                t.1,
                8.0 * stroke,
                diagram.label_at(k)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(word: &[usize]) -> RenderSpec {
        RenderSpec::new(FlatBasketCode::new(word.to_vec()).unwrap(), 300)
    }

    #[test]
    fn empty_code_draws_only_the_circle() {
        let svg = render(&spec(&[]));
        assert!(svg.contains(r#"class="disk""#));
        assert!(!svg.contains("<line"));
        assert!(!svg.contains(r#"class="point""#));
    }

    #[test]
    fn crossing_chords_shade_the_higher_band() {
        let svg = render(&spec(&[1, 2, 1, 2]));
        assert_eq!(svg.matches(r#"class="chord""#).count(), 2);
        assert!(svg.find(r#"id="band-1""#).unwrap() < svg.find(r#"id="band-2""#).unwrap());
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 1);
        assert!(svg.contains(r#"data-over="2" data-under="1""#));
    }

    #[test]
    fn figure_eight_diagram() {
        let svg = render(&spec(&[1, 2, 4, 3, 1, 2, 4, 3]));
        assert_eq!(svg.matches(r#"class="chord""#).count(), 4);
        assert_eq!(svg.matches(r#"class="point""#).count(), 8);
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 6);
        assert_eq!(svg.matches("<text").count(), 8);
    }

    #[test]
    fn options_and_determinism() {
        let mut s = spec(&[1, 2, 3, 1, 2, 3]);
        assert_eq!(render(&s), render(&s.clone()));
        s.show_labels = false;
        s.shade_crossings = false;
        let svg = render(&s);
        assert!(!svg.contains("<text") && !svg.contains("halo") && !svg.contains(r#"class="crossing""#));
    }
}
