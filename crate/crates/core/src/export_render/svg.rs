use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::spiral_engine::SpiralGeometry;

/// Fill colors for the triangles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ColorScheme {
    /// One light grey for every triangle.
    Mono,
    /// Hue advanced by the golden angle (about 137.5 degrees) per triangle.
    #[default]
    Golden,
    /// Hue spread evenly over the triangles.
    Spectrum,
}

impl ColorScheme {
    pub fn name(self) -> &'static str {
        match self {
            ColorScheme::Mono => "mono",
            ColorScheme::Golden => "golden",
            ColorScheme::Spectrum => "spectrum",
        }
    }

    fn fill(self, k: usize, n: usize) -> String {
        match self {
            ColorScheme::Mono => "#e4e4e4".to_string(),
            ColorScheme::Golden => format!("hsl({:.1},70%,75%)", (k as f64 * 137.507_764) % 360.0),
            ColorScheme::Spectrum => format!("hsl({:.1},70%,75%)", 300.0 * k as f64 / n.max(1) as f64),
        }
    }
}

impl FromStr for ColorScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [ColorScheme::Mono, ColorScheme::Golden, ColorScheme::Spectrum]
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown color scheme `{s}` (expected mono, golden or spectrum)"
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Width of the larger image side in pixels.
    pub canvas_size_px: u32,
    /// Stroke width in pixels.
    pub stroke_width: f64,
    /// Print `sqrt(a)` next to each spine.
    pub label_spines: bool,
    /// Print each triangle's angle at the common vertex, in degrees.
    pub label_angles: bool,
    /// Fraction digits for coordinates and labels, `1..=12`.
    pub decimal_digits: u8,
    pub color_scheme: ColorScheme,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            canvas_size_px: 800,
            stroke_width: 1.0,
            label_spines: true,
            label_angles: false,
            decimal_digits: 4,
            color_scheme: ColorScheme::Golden,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if self.canvas_size_px == 0 {
            return Err(Error::invalid("canvas_size_px must be positive"));
        }
        if !(1..=12).contains(&self.decimal_digits) {
            return Err(Error::invalid(format!(
                "decimal_digits must be in 1..=12, got {}",
                self.decimal_digits
            )));
        }
        if !(self.stroke_width.is_finite() && self.stroke_width >= 0.0) {
            return Err(Error::invalid("stroke_width must be a non-negative number"));
        }
        Ok(())
    }
}

/// Fixed-point formatting without a negative zero.
fn num(v: f64, digits: usize) -> String {
    let s = format!("{v:.digits$}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// SVG document with one `<polygon>` per triangle.
///
/// Vertices are placed from interval midpoints; the y axis is flipped so
/// the spiral turns counterclockwise on screen, and the view box leaves a 5%
/// margin around all vertices.
pub fn render_svg(g: &SpiralGeometry, opts: &RenderOptions) -> Result<String> {
    opts.validate()?;
    if g.n_triangles < 1 || g.vertices.len() < 2 {
        return Err(Error::invalid("geometry has no triangles"));
    }
    let d = opts.decimal_digits as usize;
    // screen coordinates: (x, -y)
    let pts: Vec<(f64, f64)> = g
        .vertices
        .iter()
        .map(|v| {
            let (x, y) = v.to_f64();
            (x, -y)
        })
        .collect();
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0f64, 0f64, 0f64, 0f64);
    for &(x, y) in &pts {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let extent = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
    let margin = 0.05 * extent;
    let (vx, vy) = (min_x - margin, min_y - margin);
    let (vw, vh) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let scale = opts.canvas_size_px as f64 / vw.max(vh);
    let (px_w, px_h) = ((vw * scale).round().max(1.0), (vh * scale).round().max(1.0));
    let stroke = opts.stroke_width / scale;
    let font = 0.025 * extent;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        px_w,
        px_h,
        num(vx, d),
        num(vy, d),
        num(vw, d),
        num(vh, d)
    );
    let _ = writeln!(
        s,
        "<title>{} spiral, {} triangles</title>",
        escape(&g.spec.to_string()),
        g.n_triangles
    );
    let _ = writeln!(
        s,
        r##"<g stroke="#333333" stroke-width="{}" stroke-linejoin="round">"##,
        num(stroke, d.max(6))
    );
    let n = g.n_triangles as usize;
    for k in 1..=n {
        let (ax, ay) = pts[k - 1];
        let (bx, by) = pts[k];
        let _ = writeln!(
            s,
            r#"<polygon points="0,0 {},{} {},{}" fill="{}"/>"#,
            num(ax, d),
            num(ay, d),
            num(bx, d),
            num(by, d),
            opts.color_scheme.fill(k, n)
        );
    }
    let _ = writeln!(s, "</g>");
    if opts.label_spines || opts.label_angles {
        let _ = writeln!(
            s,
            r##"<g font-family="sans-serif" font-size="{}" fill="#111111" text-anchor="middle">"##,
            num(font, d.max(6))
        );
        if opts.label_spines {
            let first = &g.triangles[0].adjacent_radicand;
            let (x0, y0) = pts[0];
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}">√{}</text>"#,
                num(x0 / 2.0, d),
                num(y0 / 2.0 + font, d),
                first
            );
            for (k, t) in g.triangles.iter().enumerate() {
                let (x, y) = pts[k + 1];
                let _ = writeln!(
                    s,
                    r#"<text x="{}" y="{}">√{}</text>"#,
                    num(x / 2.0, d),
                    num(y / 2.0, d),
                    t.hypotenuse_radicand
                );
            }
        }
        if opts.label_angles {
            for k in 1..=n {
                let a0 = g.cumulative_angles[k - 1].to_f64();
                let a1 = g.cumulative_angles[k].to_f64();
                let mid = 0.5 * (a0 + a1);
                let r = 0.12 * extent;
                let deg = (a1 - a0).to_degrees();
                let _ = writeln!(
                    s,
                    r#"<text x="{}" y="{}">{}°</text>"#,
                    num(r * mid.cos(), d),
                    num(-r * mid.sin(), d),
                    num(deg, d.min(3))
                );
            }
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_seq::SequenceSpec;
    use crate::spiral_engine::geometry;

    #[test]
    fn one_polygon_per_triangle() {
        let g = geometry(&SequenceSpec::fibonacci(), 10, 64).unwrap();
        let svg = render_svg(&g, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 10);
        assert!(svg.contains("√2"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn first_triangle_is_isosceles() {
        let g = geometry(&SequenceSpec::fibonacci(), 1, 64).unwrap();
        let opts = RenderOptions {
            label_spines: false,
            decimal_digits: 3,
            ..RenderOptions::default()
        };
        let svg = render_svg(&g, &opts).unwrap();
        // legs of length 1: (1, 0) and (1, 1), drawn with y flipped
        assert!(svg.contains(r#"points="0,0 1.000,0.000 1.000,-1.000""#), "{svg}");
        assert!(!svg.contains("<text"));
    }

    #[test]
    fn options_are_validated() {
        let g = geometry(&SequenceSpec::fibonacci(), 2, 64).unwrap();
        for bad in [
            RenderOptions {
                canvas_size_px: 0,
                ..Default::default()
            },
            RenderOptions {
                decimal_digits: 0,
                ..Default::default()
            },
            RenderOptions {
                decimal_digits: 13,
                ..Default::default()
            },
            RenderOptions {
                stroke_width: f64::NAN,
                ..Default::default()
            },
        ] {
            assert!(render_svg(&g, &bad).is_err());
        }
        assert_eq!("spectrum".parse::<ColorScheme>().unwrap(), ColorScheme::Spectrum);
        assert!("plaid".parse::<ColorScheme>().is_err());
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(num(-0.00001, 3), "0.000");
        assert_eq!(num(-1.5, 1), "-1.5");
    }
}
