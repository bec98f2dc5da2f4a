use super::curve::{CurveEdge, TropicalCurve};
use super::intersect::intersect;
use super::subdivision::RegularSubdivision;
use super::TropicalError;
use crate::arith::{parse_rational, rat, to_f64, Rational};
use crate::geometry::{mixed_area, Point2};
use num_traits::Zero;
use std::fmt::Write;

pub const COLORS: [&str; 6] = ["#e69f00", "#0072b2", "#d55e00", "#009e73", "#cc79a7", "#56b4e9"];

const WIDTH: f64 = 800.0;

/// Axis-parallel rendering box `[xmin, xmax] × [ymin, ymax]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub xmin: Rational,
    pub ymin: Rational,
    pub xmax: Rational,
    pub ymax: Rational,
}

impl Window {
    pub fn new(xmin: Rational, ymin: Rational, xmax: Rational, ymax: Rational) -> Result<Self, TropicalError> {
        if xmin >= xmax || ymin >= ymax {
            return Err(TropicalError::BadWindow(format!("[{xmin}, {xmax}] x [{ymin}, {ymax}] is empty")));
        }
        Ok(Self { xmin, ymin, xmax, ymax })
    }

    /// Parses `xmin,ymin,xmax,ymax`.
    pub fn parse(s: &str) -> Result<Self, TropicalError> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(TropicalError::BadWindow(format!("expected xmin,ymin,xmax,ymax, got {s:?}")));
        }
        let q = parts
            .iter()
            .map(|p| parse_rational(p).map_err(|e| TropicalError::BadWindow(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let [a, b, c, d]: [Rational; 4] = q.try_into().expect("four parts");
        Self::new(a, b, c, d)
    }

    /// A box around all vertices, line anchors and pairwise crossings, padded
    /// by 2 on each side.
    pub fn around(curves: &[TropicalCurve]) -> Self {
        let mut pts: Vec<Point2> = curves
            .iter()
            .flat_map(|c| {
                c.vertices
                    .iter()
                    .map(|v| v.point.clone())
                    .chain(c.lines.iter().map(|l| l.origin.clone()))
            })
            .collect();
        for i in 0..curves.len() {
            for j in i + 1..curves.len() {
                if let Ok(r) = intersect(&curves[i], &curves[j]) {
                    pts.extend(r.points.into_iter().map(|p| p.point));
                }
            }
        }
        let pad = rat(2);
        if pts.is_empty() {
            return Self::new(-pad.clone(), -pad.clone(), pad.clone(), pad).expect("nonempty");
        }
        let xmin = pts.iter().map(|p| &p.x).min().unwrap() - &pad;
        let xmax = pts.iter().map(|p| &p.x).max().unwrap() + &pad;
        let ymin = pts.iter().map(|p| &p.y).min().unwrap() - &pad;
        let ymax = pts.iter().map(|p| &p.y).max().unwrap() + &pad;
        Self::new(xmin, ymin, xmax, ymax).expect("padded box is nonempty")
    }

    fn scale(&self) -> f64 {
        WIDTH / to_f64(&(&self.xmax - &self.xmin))
    }

    fn height(&self) -> f64 {
        to_f64(&(&self.ymax - &self.ymin)) * self.scale()
    }

    fn px(&self, p: &Point2) -> (f64, f64) {
        let s = self.scale();
        (to_f64(&(&p.x - &self.xmin)) * s, to_f64(&(&self.ymax - &p.y)) * s)
    }

    fn contains(&self, p: &Point2) -> bool {
        p.x >= self.xmin && p.x <= self.xmax && p.y >= self.ymin && p.y <= self.ymax
    }

    /// Exact clip of an edge to the box.
    pub fn clip(&self, e: &CurveEdge) -> Option<(Point2, Point2)> {
        let (mut lo, mut hi) = e.range();
        let d = e.direction_vector();
        for (o, dc, min, max) in [
            (&e.origin.x, &d.x, &self.xmin, &self.xmax),
            (&e.origin.y, &d.y, &self.ymin, &self.ymax),
        ] {
            if dc.is_zero() {
                if o < min || o > max {
                    return None;
                }
                continue;
            }
            let (mut a, mut b) = ((min - o) / dc, (max - o) / dc);
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            lo = Some(match lo {
                Some(l) if l > a => l,
                _ => a,
            });
            hi = Some(match hi {
                Some(h) if h < b => h,
                _ => b,
            });
        }
        let (lo, hi) = (lo?, hi?);
        if lo > hi {
            return None;
        }
        Some((e.at(&lo), e.at(&hi)))
    }
}

/// What to draw.
pub enum Figure<'a> {
    /// Curves in their plane, with marked pairwise crossings.
    Arrangement(&'a [TropicalCurve]),
    /// Newton polytopes with their subdivisions, one panel each.
    Subdivisions(&'a [RegularSubdivision]),
}

fn header(out: &mut String, w: f64, h: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.3} {h:.3}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

fn arrangement(curves: &[TropicalCurve], window: &Window) -> String {
    let mut out = String::new();
    header(&mut out, WIDTH, window.height());
    for (i, c) in curves.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let _ = writeln!(out, r#"<g class="curve" data-curve="{}" stroke="{color}" stroke-width="2" fill="{color}">"#, i + 1);
        for e in c.edges() {
            if let Some((a, b)) = window.clip(e) {
                let ((x1, y1), (x2, y2)) = (window.px(&a), window.px(&b));
                let _ = writeln!(out, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
                if e.weight > 1 {
                    let _ = writeln!(
                        out,
                        r#"<text x="{:.3}" y="{:.3}" stroke="none">{}</text>"#,
                        (x1 + x2) / 2.0 + 4.0,
                        (y1 + y2) / 2.0 - 4.0,
                        e.weight
                    );
                }
            }
        }
        for v in c.vertices.iter().filter(|v| window.contains(&v.point)) {
            let (x, y) = window.px(&v.point);
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" stroke="none"/>"#);
        }
        let _ = writeln!(out, "</g>");
    }
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            match intersect(&curves[i], &curves[j]) {
                Ok(r) => {
                    let _ = writeln!(out, r#"<g class="crossings" data-pair="{}-{}" data-total="{}">"#, i + 1, j + 1, r.total);
                    for p in r.points.iter().filter(|p| window.contains(&p.point)) {
                        let (x, y) = window.px(&p.point);
                        let _ = writeln!(
                            out,
                            r#"<circle class="crossing" cx="{x:.3}" cy="{y:.3}" r="5" fill="none" stroke="black"/><text x="{:.3}" y="{:.3}">{}</text>"#,
                            x + 6.0,
                            y + 12.0,
                            p.multiplicity
                        );
                    }
                    let _ = writeln!(out, "</g>");
                }
                Err(e) => {
                    let _ = writeln!(out, "<!-- pair {}-{}: {} -->", i + 1, j + 1, e.to_string().replace("--", "-"));
                }
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn subdivisions(subs: &[RegularSubdivision], window: &Window) -> String {
    const PANEL: f64 = 240.0;
    const GAP: f64 = 40.0;
    let mut out = String::new();
    let n = subs.len();
    let legend = n * n.saturating_sub(1) / 2;
    let total_h = PANEL + 40.0 + 16.0 * legend as f64;
    header(&mut out, (PANEL + GAP) * n.max(1) as f64, total_h);
    let s = PANEL / to_f64(&(&window.xmax - &window.xmin)).max(to_f64(&(&window.ymax - &window.ymin)));
    for (i, sub) in subs.iter().enumerate() {
        let ox = GAP / 2.0 + i as f64 * (PANEL + GAP);
        let px = |p: &Point2| {
            (
                ox + to_f64(&(&p.x - &window.xmin)) * s,
                20.0 + to_f64(&(&window.ymax - &p.y)) * s,
            )
        };
        let color = COLORS[i % COLORS.len()];
        let _ = writeln!(out, r#"<g class="subdivision" data-polytope="{}" data-cells="{}">"#, i + 1, sub.cells.len());
        for cell in &sub.cells {
            let pts: Vec<String> = cell
                .polygon
                .vertices()
                .iter()
                .map(|v| {
                    let (x, y) = px(v);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            let _ = writeln!(
                out,
                r#"<polygon class="cell" points="{}" fill="{color}" fill-opacity="0.25" stroke="black" stroke-width="1.5"/>"#,
                pts.join(" ")
            );
        }
        for e in sub.lifting_used.terms().keys() {
            let (x, y) = px(&Point2::from_ints(e.0, e.1));
            let fill = if sub.inactive.contains(e) { "white" } else { "black" };
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="{fill}" stroke="black"/>"#);
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}">P{}: {} cells</text>"#,
            ox,
            PANEL + 36.0,
            i + 1,
            sub.cells.len()
        );
        let _ = writeln!(out, "</g>");
    }
    let mut row = 0;
    for i in 0..n {
        for j in i + 1..n {
            let v = mixed_area(&subs[i].lifting_used.newton_polytope(), &subs[j].lifting_used.newton_polytope()) * rat(2);
            let _ = writeln!(
                out,
                r#"<text class="pair" data-pair="{}-{}" x="{:.3}" y="{:.3}">2V(P{}, P{}) = {}</text>"#,
                i + 1,
                j + 1,
                GAP / 2.0,
                PANEL + 56.0 + 16.0 * row as f64,
                i + 1,
                j + 1,
                v
            );
            row += 1;
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Deterministic SVG text. For subdivisions the window is the shared
/// coordinate box of every panel.
pub fn render_svg(what: Figure<'_>, window: &Window) -> String {
    match what {
        Figure::Arrangement(curves) => arrangement(curves, window),
        Figure::Subdivisions(subs) => subdivisions(subs, window),
    }
}

/// The smallest box holding every Newton polytope, padded by 1/2.
pub fn subdivision_window(subs: &[RegularSubdivision]) -> Window {
    let pts: Vec<Point2> = subs
        .iter()
        .flat_map(|s| s.lifting_used.support())
        .map(|(a, b)| Point2::from_ints(a, b))
        .collect();
    let half = Rational::new(1.into(), 2.into());
    let xmin = pts.iter().map(|p| p.x.clone()).min().unwrap_or_default() - &half;
    let xmax = pts.iter().map(|p| p.x.clone()).max().unwrap_or_default() + &half;
    let ymin = pts.iter().map(|p| p.y.clone()).min().unwrap_or_default() - &half;
    let ymax = pts.iter().map(|p| p.y.clone()).max().unwrap_or_default() + &half;
    Window::new(xmin, ymin, xmax, ymax).expect("padded box is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::{lift_and_subdivide, presets, tropical_curve, TropicalPolynomial};

    #[test]
    fn bad_windows() {
        assert!(matches!(Window::parse("0,0,0,1"), Err(TropicalError::BadWindow(_))));
        assert!(matches!(Window::parse("0,2,1,1"), Err(TropicalError::BadWindow(_))));
        assert!(Window::parse("1,2,3").is_err());
        assert!(Window::parse("-1/2,-1,3,4").is_ok());
    }

    #[test]
    fn clipping_is_exact() {
        let c = tropical_curve(&TropicalPolynomial::line());
        let w = Window::parse("-2,-1,3,5").unwrap();
        let mut ends: Vec<Point2> = c.rays.iter().map(|r| w.clip(r).unwrap().1).collect();
        ends.sort();
        assert_eq!(ends, vec![Point2::from_ints(-1, -1), Point2::from_ints(0, 5), Point2::from_ints(3, 0)]);
        let far = Window::parse("10,10,11,11").unwrap();
        assert!(c.rays.iter().all(|r| far.clip(r).is_none()));
    }

    #[test]
    fn single_line_svg() {
        let c = vec![tropical_curve(&TropicalPolynomial::line())];
        let svg = render_svg(Figure::Arrangement(&c), &Window::around(&c));
        assert_eq!(svg.matches("<line ").count(), 3);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg, render_svg(Figure::Arrangement(&c), &Window::around(&c)));
    }

    #[test]
    fn arrangement_marks_every_crossing() {
        let curves: Vec<_> = presets::four_curves().iter().map(tropical_curve).collect();
        let w = Window::around(&curves);
        let svg = render_svg(Figure::Arrangement(&curves), &w);
        assert_eq!(svg.matches(r#"class="crossings""#).count(), 6);
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 27);
        assert!(!svg.contains("<!--"));
    }

    #[test]
    fn subdivision_panels() {
        let subs: Vec<_> = presets::four_curves().iter().map(lift_and_subdivide).collect();
        let svg = render_svg(Figure::Subdivisions(&subs), &subdivision_window(&subs));
        assert_eq!(svg.matches(r#"class="cell""#).count(), 1 + 7 + 2 + 11);
        for (i, k) in [1, 7, 2, 11].iter().enumerate() {
            assert!(svg.contains(&format!(r#"data-polytope="{}" data-cells="{k}""#, i + 1)));
        }
        assert!(svg.contains("2V(P2, P4) = 9"));
    }
}
