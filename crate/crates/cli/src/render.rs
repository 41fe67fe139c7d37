//! Static SVG drawings of points on a circle.
//!
//! Point `k` of `m` sits at angle `90° - 360° k / m`, so the first point is at
//! the top and the rest follow clockwise. Coordinates are printed with three
//! decimals, which makes the output byte-stable.

use std::f64::consts::PI;
use std::fmt::Write;

use kreweras_core::{kreweras, Matching, NoncrossingPartition, PlaneTree, Result};

pub const RADIUS: f64 = 100.0;
const LABEL_RADIUS: f64 = 116.0;

fn polar(k: usize, m: usize, r: f64) -> (f64, f64) {
    let theta = PI / 2.0 - 2.0 * PI * k as f64 / m as f64;
    (r * theta.cos(), -r * theta.sin())
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

struct Canvas {
    m: usize,
    body: String,
}

impl Canvas {
    fn new(m: usize) -> Self {
        let mut body = String::new();
        body.push_str(
            "<circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"100\" fill=\"none\" stroke=\"#bbbbbb\"/>\n",
        );
        Self { m, body }
    }

    fn xy(&self, k: usize) -> (String, String) {
        let (x, y) = polar(k, self.m, RADIUS);
        (num(x), num(y))
    }

    fn points_attr(&self, ks: impl IntoIterator<Item = usize>) -> String {
        ks.into_iter()
            .map(|k| {
                let (x, y) = self.xy(k);
                format!("{x},{y}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn hull(&mut self, class: &str, color: &str, ks: impl IntoIterator<Item = usize>) {
        let pts = self.points_attr(ks);
        let _ = writeln!(
            self.body,
            "<polygon class=\"{class}\" points=\"{pts}\" fill=\"{color}\" fill-opacity=\"0.35\" \
             stroke=\"{color}\" stroke-width=\"4\" stroke-linejoin=\"round\"/>"
        );
    }

    fn chord(&mut self, class: &str, color: &str, a: usize, b: usize) {
        let ((x1, y1), (x2, y2)) = (self.xy(a), self.xy(b));
        let _ = writeln!(
            self.body,
            "<line class=\"{class}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" \
             stroke=\"{color}\" stroke-width=\"2\"/>"
        );
    }

    fn point(&mut self, class: &str, k: usize, label: &str) {
        let (x, y) = self.xy(k);
        let (lx, ly) = polar(k, self.m, LABEL_RADIUS);
        let (lx, ly) = (num(lx), num(ly));
        let _ = writeln!(
            self.body,
            "<circle class=\"{class}\" cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"#222222\"/>"
        );
        let _ = writeln!(
            self.body,
            "<text x=\"{lx}\" y=\"{ly}\" font-size=\"11\" text-anchor=\"middle\" \
             dominant-baseline=\"central\">{label}</text>"
        );
    }

    fn finish(self, title: &str) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"300\" height=\"300\" \
             viewBox=\"-150 -150 300 300\">\n<title>{title}</title>\n{}</svg>\n",
            self.body
        )
    }
}

fn chords(canvas: &mut Canvas, m: &Matching, class: &str, color: &str) {
    for (a, b) in m.pairs() {
        canvas.chord(class, color, a - 1, b - 1);
    }
}

fn boundary_points(canvas: &mut Canvas) {
    for k in 0..canvas.m {
        canvas.point("point", k, &(k + 1).to_string());
    }
}

/// The tree as its noncrossing matching: `2n` points and `n` chords.
pub fn render_tree(t: &PlaneTree) -> String {
    let mut c = Canvas::new(2 * t.n());
    chords(&mut c, &t.matching(), "chord", "#2c6fbb");
    boundary_points(&mut c);
    c.finish(&t.to_dyck())
}

/// Block hulls of `p`. With `complement`, the points of `p` take the odd
/// positions of `2n` and the hulls of `κ(p)` sit on the primed points between them.
pub fn render_partition(p: &NoncrossingPartition, complement: bool) -> String {
    let n = p.n();
    let (m, pos): (usize, fn(usize) -> usize) = if complement {
        (2 * n, |i| 2 * (i - 1))
    } else {
        (n, |i| i - 1)
    };
    let mut c = Canvas::new(m);
    for b in p.blocks() {
        c.hull("block", "#2c6fbb", b.iter().map(|&i| pos(i)));
    }
    if complement {
        for b in kreweras(p).blocks() {
            c.hull("complement-block", "#c9302c", b.iter().map(|&i| 2 * i - 1));
        }
    }
    for i in 1..=n {
        c.point("point", pos(i), &i.to_string());
        if complement {
            c.point("point primed", 2 * i - 1, &format!("{i}'"));
        }
    }
    let title = if complement {
        format!("{p} | {}", kreweras(p))
    } else {
        p.to_string()
    };
    c.finish(&title)
}

/// Both matchings as chords, plus one closed polygon per loop they form.
pub fn render_meander(a: &PlaneTree, b: &PlaneTree) -> Result<String> {
    let (ma, mb) = (a.matching(), b.matching());
    let loops = ma.loops_with(&mb)?;
    let mut c = Canvas::new(2 * a.n());
    chords(&mut c, &ma, "chord upper", "#2c6fbb");
    chords(&mut c, &mb, "chord lower", "#c9302c");
    for l in &loops {
        let pts = c.points_attr(l.iter().map(|&k| k - 1));
        let _ = writeln!(
            c.body,
            "<polygon class=\"loop\" points=\"{pts}\" fill=\"none\" stroke=\"#3a3a3a\" \
             stroke-dasharray=\"4 3\"/>"
        );
    }
    boundary_points(&mut c);
    Ok(c.finish(&format!("{a} {b}")))
}
