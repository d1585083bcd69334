//! Deterministic SVG rendering of figures with multiplicity shading.
//!
//! The multiplicity regions are re-derived by clipping at render time,
//! so the output is a pure function of the figure and style. Drawing
//! order: big polygon, then small polygons, then double-covered
//! regions, then triple-covered regions.

use crate::constructions::{Figure, FigureError};
use crate::geometry::{multiplicity_accounting, ConvexPolygon};

/// Visual parameters. The default palette follows the usual shading of
/// these figures — white for uncovered parts, light red for a single
/// cover, pink for double cover, a stronger pink for triple cover. The
/// exact hex values are a documented default, not a contract.
#[derive(Debug, Clone)]
pub struct RenderStyle {
    pub canvas_px: u32,
    /// Fill colors indexed by multiplicity 0..=3.
    pub palette: [String; 4],
    pub stroke: String,
    pub stroke_width: f64,
    /// Margin around the figure as a fraction of the canvas.
    pub margin: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            canvas_px: 800,
            palette: [
                "#ffffff".to_owned(),
                "#ef9a9a".to_owned(),
                "#f8bbd0".to_owned(),
                "#f06292".to_owned(),
            ],
            stroke: "#333333".to_owned(),
            stroke_width: 1.5,
            margin: 0.06,
        }
    }
}

/// Renders `fig` as a standalone SVG 1.1 document. Identical inputs
/// produce byte-identical output.
pub fn figure_to_svg(fig: &Figure, style: &RenderStyle) -> Result<String, FigureError> {
    let coverage = multiplicity_accounting(&fig.big, &fig.smalls, fig.kind.max_multiplicity())?;

    let (min_x, min_y, max_x, max_y) = fig.big.bbox();
    let (min_x, min_y) = (min_x.to_f64(), min_y.to_f64());
    let (max_x, max_y) = (max_x.to_f64(), max_y.to_f64());
    let canvas = f64::from(style.canvas_px);
    let usable = canvas * (1.0 - 2.0 * style.margin);
    let span = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
    let scale = usable / span;
    let pad_x = (canvas - (max_x - min_x) * scale) / 2.0;
    let pad_y = (canvas - (max_y - min_y) * scale) / 2.0;
    // y axis flips so the figure appears with y increasing upwards
    let tx = |x: f64| pad_x + (x - min_x) * scale;
    let ty = |y: f64| canvas - pad_y - (y - min_y) * scale;

    let polygon_tag = |poly: &ConvexPolygon, fill: &str, stroke: &str, width: f64| {
        let points: Vec<String> = poly
            .vertices()
            .iter()
            .map(|p| format!("{:.4},{:.4}", tx(p.x.to_f64()), ty(p.y.to_f64())))
            .collect();
        format!(
            "  <polygon points=\"{}\" fill=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
            points.join(" "),
            fill,
            stroke,
            width
        )
    };

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        style.canvas_px
    ));
    svg.push_str(&format!(
        "  <title>{} figure, a = {}, b = {}</title>\n",
        fig.kind.label(),
        fig.a,
        fig.b
    ));

    svg.push_str(&polygon_tag(
        &fig.big,
        &style.palette[0],
        &style.stroke,
        style.stroke_width,
    ));
    for small in &fig.smalls {
        svg.push_str(&polygon_tag(
            small,
            &style.palette[1],
            &style.stroke,
            style.stroke_width * 0.5,
        ));
    }
    for region in &coverage.double_regions {
        svg.push_str(&polygon_tag(region, &style.palette[2], "none", 0.0));
    }
    for region in &coverage.triple_regions {
        svg.push_str(&polygon_tag(region, &style.palette[3], "none", 0.0));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// The canonical output filename for a rendered figure.
pub fn default_filename(fig: &Figure) -> String {
    format!("{}_{}_{}.svg", fig.kind.label(), fig.a, fig.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_figure, FigureKind};

    fn count_polygons(svg: &str) -> usize {
        svg.matches("<polygon").count()
    }

    #[test]
    fn sqrt2_figure_has_four_polygons() {
        let fig = build_figure(FigureKind::Sqrt2, 7, 5).unwrap();
        let svg = figure_to_svg(&fig, &RenderStyle::default()).unwrap();
        // 1 big + 2 small + 1 double region
        assert_eq!(count_polygons(&svg), 4);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains("xmlns=\"http://www.w3.org/2000/svg\""));
    }

    #[test]
    fn sqrt6_figure_has_fourteen_polygons() {
        let fig = build_figure(FigureKind::Sqrt6, 5, 2).unwrap();
        let svg = figure_to_svg(&fig, &RenderStyle::default()).unwrap();
        // 1 big + 6 small + 6 double + 1 triple
        assert_eq!(count_polygons(&svg), 14);
    }

    #[test]
    fn sqrt5_figure_has_eleven_polygons() {
        let fig = build_figure(FigureKind::Sqrt5, 9, 4).unwrap();
        let svg = figure_to_svg(&fig, &RenderStyle::default()).unwrap();
        // 1 big + 5 small + 5 kites
        assert_eq!(count_polygons(&svg), 11);
    }

    #[test]
    fn output_is_deterministic() {
        let fig = build_figure(FigureKind::Sqrt3, 7, 4).unwrap();
        let style = RenderStyle::default();
        let first = figure_to_svg(&fig, &style).unwrap();
        let second = figure_to_svg(&fig, &style).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn filename_convention() {
        let fig = build_figure(FigureKind::Triangular(4), 19, 6).unwrap();
        assert_eq!(default_filename(&fig), "tri4_19_6.svg");
    }
}
