use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{DominoTiling, DominoType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RenderFormat {
    Ascii,
    Svg,
}

fn glyph(k: DominoType) -> char {
    match k {
        DominoType::PlusPlus => '-',
        DominoType::MinusMinus => '|',
        DominoType::PlusMinus => '\\',
        DominoType::MinusPlus => '.',
    }
}

fn class(k: DominoType) -> &'static str {
    match k {
        DominoType::PlusPlus => "pp",
        DominoType::MinusMinus => "mm",
        DominoType::PlusMinus => "pm",
        DominoType::MinusPlus => "mp",
    }
}

pub fn render(tiling: &DominoTiling, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => ascii(tiling),
        RenderFormat::Svg => svg(tiling),
    }
}

/// One glyph per white square, `x` decreasing down the page and `t`
/// increasing to the right.
fn ascii(tiling: &DominoTiling) -> String {
    let w = tiling.window();
    if w.is_empty() {
        return String::new();
    }
    let mut out = String::new();
    let legend: Vec<String> = DominoType::ALL
        .iter()
        .map(|&k| format!("{} {}", glyph(k), k))
        .collect();
    writeln!(out, "# {}", legend.join("  ")).unwrap();
    writeln!(
        out,
        "# t = {}..{}, x = {}..{}",
        w.t_min, w.t_max, w.x_max, w.x_min
    )
    .unwrap();
    for x in (w.x_min..=w.x_max).rev() {
        let line: String = (w.t_min..=w.t_max)
            .map(|t| glyph(tiling.get((t, x)).unwrap()))
            .collect();
        writeln!(out, "{line}").unwrap();
    }
    out
}

/// Corners of the domino in coordinates scaled by 4, counter-clockwise.
fn corners(anchor: (i64, i64), kind: DominoType) -> Vec<(i64, i64)> {
    let diamond =
        |(cx, cy): (i64, i64)| vec![(cx + 2, cy), (cx, cy + 2), (cx - 2, cy), (cx, cy - 2)];
    let (t, x) = anchor;
    let (bt, bx) = kind.black_of(anchor);
    let white = diamond((4 * t + 1, 4 * x - 1));
    let black = diamond((4 * bt - 1, 4 * bx + 1));
    let mut pts: Vec<(i64, i64)> = white
        .iter()
        .filter(|p| !black.contains(p))
        .chain(black.iter().filter(|p| !white.contains(p)))
        .copied()
        .collect();
    let (sx, sy) = pts.iter().fold((0, 0), |(a, b), p| (a + p.0, b + p.1));
    let (cx, cy) = (sx as f64 / 4.0, sy as f64 / 4.0);
    pts.sort_by(|a, b| {
        let fa = (a.1 as f64 - cy).atan2(a.0 as f64 - cx);
        let fb = (b.1 as f64 - cy).atan2(b.0 as f64 - cx);
        fa.total_cmp(&fb)
    });
    pts
}

fn svg(tiling: &DominoTiling) -> String {
    let w = tiling.window();
    let (x0, x1) = (4 * w.t_min - 4, 4 * w.t_max + 4);
    let (y0, y1) = (-4 * w.x_max - 4, -4 * w.x_min + 4);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
        x0,
        y0,
        (x1 - x0).max(0),
        (y1 - y0).max(0)
    )
    .unwrap();
    if !w.is_empty() {
        out.push_str(
            "<style>.pp{fill:#e41a1c}.mm{fill:#377eb8}.pm{fill:#4daf4a}.mp{fill:#ffffff}polygon{stroke:#000;stroke-width:0.2}</style>\n",
        );
        for d in tiling.dominoes() {
            let pts: Vec<String> = corners(d.anchor, d.kind)
                .into_iter()
                .map(|(x, y)| format!("{},{}", x, -y))
                .collect();
            writeln!(
                out,
                r#"<polygon class="{}" points="{}"/>"#,
                class(d.kind),
                pts.join(" ")
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilings::{pop_to_tiling, Window};
    use crate::PlaneOverpartition;

    #[test]
    fn domino_is_a_rectangle() {
        for k in DominoType::ALL {
            let c = corners((0, 0), k);
            assert_eq!(c.len(), 4, "{k}");
            // opposite sides are equal
            let d = |a: (i64, i64), b: (i64, i64)| (a.0 - b.0, a.1 - b.1);
            assert_eq!(d(c[1], c[0]), d(c[2], c[3]));
        }
    }

    #[test]
    fn empty_window() {
        let w = Window {
            t_min: 0,
            t_max: -1,
            x_min: 0,
            x_max: -1,
        };
        let t = DominoTiling::new(w, Vec::new()).unwrap();
        assert_eq!(render(&t, RenderFormat::Ascii), "");
        assert!(!render(&t, RenderFormat::Svg).contains("<polygon"));
    }

    #[test]
    fn ascii_single_cell() {
        let p = PlaneOverpartition::parse("1'").unwrap();
        let t = pop_to_tiling(&p, Window::fitting(&p)).unwrap();
        let text = render(&t, RenderFormat::Ascii);
        let body: Vec<&str> = text.lines().skip(2).collect();
        // t = -2..2, x = 2..-1
        assert_eq!(body, vec!["|||..", "||\\..", "||.|.", "||.|."]);
    }
}
