//! SVG pictures of the disk: the Farey tessellation, the Cayley tree with
//! colored edges, snakes and rescaled roots.
//!
//! The affine plane is drawn with `Conv(Δ)` as an equilateral triangle, so
//! `∂𝔻` is its incircle. Coordinates stay exact until they are written out.

use std::fmt::Write;

use crate::biclosed::{Color, Coloring};
use crate::geometry::{rescale, AffinePoint};
use crate::linalg::{act, IVec3};
use crate::roots::{enumerate_roots, Edge};
use crate::snakes::{mirror_ends, SegmentEnd, Snake, SnakePair};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Show {
    pub tessellation: bool,
    pub cayley: bool,
    pub snakes: bool,
    pub rescaled_roots: bool,
}

impl Default for Show {
    fn default() -> Self {
        Show { tessellation: true, cayley: true, snakes: true, rescaled_roots: false }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Palette {
    pub red: String,
    pub blue: String,
    pub green: String,
    pub plain: String,
}

impl Default for Palette {
    fn default() -> Self {
        Palette { red: "#d62728".into(), blue: "#1f4fc4".into(), green: "#2ca02c".into(), plain: "#555555".into() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Deepest edge drawn.
    pub depth: u32,
    pub show: Show,
    pub palette: Palette,
    pub width: u32,
    pub height: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { depth: 6, show: Show::default(), palette: Palette::default(), width: 800, height: 800 }
    }
}

/// Fixed affine map from barycentric coordinates to the canvas: simple
/// roots at the corners of an equilateral triangle whose incircle is `∂𝔻`.
struct Embedding {
    corners: [[f64; 2]; 3],
    center: [f64; 2],
    inradius: f64,
}

impl Embedding {
    fn new(w: u32, h: u32) -> Self {
        let (w, h) = (w as f64, h as f64);
        let r = 0.28 * w.min(h);
        let center = [w / 2.0, 0.08 * h + 2.0 * r];
        let corner = |deg: f64| {
            let t = deg.to_radians();
            [center[0] + 2.0 * r * t.sin(), center[1] - 2.0 * r * t.cos()]
        };
        Embedding { corners: [corner(0.0), corner(240.0), corner(120.0)], center, inradius: r }
    }

    fn map(&self, b: [f64; 3]) -> [f64; 2] {
        let c = &self.corners;
        [
            b[0] * c[0][0] + b[1] * c[1][0] + b[2] * c[2][0],
            b[0] * c[0][1] + b[1] * c[1][1] + b[2] * c[2][1],
        ]
    }

    fn point(&self, p: &AffinePoint) -> [f64; 2] {
        self.map(p.to_f64())
    }
}

fn vertex_point(w: &Word) -> AffinePoint {
    AffinePoint::from_homogeneous(&act(w, &IVec3::from_i64(1, 1, 1))).expect("interior point")
}

fn f3(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn mid(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0]
}

fn snake_points(e: &Embedding, s: &Snake) -> Vec<[f64; 2]> {
    let mut pts = vec![e.point(&vertex_point(&Word::identity()))];
    for seg in &s.segments {
        let from = e.point(&vertex_point(&seg.from));
        let q = e.point(&seg.face.ideal_point());
        pts.push(mid(from, q));
        match &seg.to {
            SegmentEnd::Vertex(v) => pts.push(e.point(&vertex_point(v))),
            SegmentEnd::Boundary { .. } => pts.push(q),
        }
    }
    pts
}

/// Renders the picture. Output depends only on the arguments.
pub fn render_svg(opts: &RenderOptions, coloring: Option<&dyn Coloring>, snakes: Option<&SnakePair>) -> String {
    let e = Embedding::new(opts.width, opts.height);
    let pal = &opts.palette;
    let edges: Vec<Edge> = enumerate_roots(opts.depth, None).into_iter().map(|r| r.edge).collect();
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width,
        h = opts.height
    );
    let _ = writeln!(
        s,
        "<style>.disk{{fill:none;stroke:#000;stroke-width:1.5}} .triangle{{fill:none;stroke:#999;stroke-width:1}} \
         .chord{{stroke:#bbb;stroke-width:0.6}} .edge{{stroke:{};stroke-width:1.2}} .red{{stroke:{}}} .blue{{stroke:{}}} \
         .snake{{fill:none;stroke:{};stroke-width:2.5}} .root{{fill:#000}}</style>",
        pal.plain, pal.red, pal.blue, pal.green
    );
    let tri: Vec<String> = e.corners.iter().map(|c| format!("{},{}", f3(c[0]), f3(c[1]))).collect();
    let _ = writeln!(s, r#"<polygon class="triangle" points="{}"/>"#, tri.join(" "));
    let _ = writeln!(
        s,
        r#"<circle class="disk" cx="{}" cy="{}" r="{}"/>"#,
        f3(e.center[0]),
        f3(e.center[1]),
        f3(e.inradius)
    );
    if opts.show.tessellation {
        let _ = writeln!(s, r#"<g id="tessellation">"#);
        for ed in &edges {
            let [a, b] = mirror_ends(ed).map(|p| e.point(&p));
            let _ = writeln!(
                s,
                r#"<line class="chord" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                f3(a[0]),
                f3(a[1]),
                f3(b[0]),
                f3(b[1])
            );
        }
        let _ = writeln!(s, "</g>");
    }
    if opts.show.cayley {
        let _ = writeln!(s, r#"<g id="cayley">"#);
        for ed in &edges {
            let a = e.point(&vertex_point(&ed.lower));
            let b = e.point(&vertex_point(&ed.upper()));
            let class = match coloring.and_then(|c| c.color(ed)) {
                Some(Color::Red) => "edge red",
                Some(Color::Blue) => "edge blue",
                None => "edge",
            };
            let _ = writeln!(
                s,
                r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                f3(a[0]),
                f3(a[1]),
                f3(b[0]),
                f3(b[1])
            );
        }
        let _ = writeln!(s, "</g>");
    }
    if opts.show.rescaled_roots {
        let _ = writeln!(s, r#"<g id="roots">"#);
        for r in enumerate_roots(opts.depth, None) {
            let p = e.point(&rescale(&r.root));
            let _ = writeln!(s, r#"<circle class="root" cx="{}" cy="{}" r="1.5"/>"#, f3(p[0]), f3(p[1]));
        }
        let _ = writeln!(s, "</g>");
    }
    if let (true, Some(sp)) = (opts.show.snakes, snakes) {
        let _ = writeln!(s, r#"<g id="snakes">"#);
        for snake in [&sp.s1, &sp.s2] {
            let pts: Vec<String> = snake_points(&e, snake).iter().map(|p| format!("{},{}", f3(p[0]), f3(p[1]))).collect();
            let _ = writeln!(s, r#"<polyline class="snake" points="{}"/>"#, pts.join(" "));
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, "</svg>");
    s
}
