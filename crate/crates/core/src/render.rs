//! ASCII and SVG drawings of arc diagrams.
//!
//! Nodes sit on a horizontal line, arcs are drawn above it and fixed points
//! carrying a half-line get a vertical stroke. Without a coloring every node
//! is drawn the same and every fixed point carries a half-line; with one,
//! nodes are Black/Grey/White and Grey fixed points carry nothing.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grassmann::{Color, Coloring};
use crate::involution::{arc_diagram, HalflinePolicy, Involution};

const PITCH: usize = 4;

fn diagram_for(w: &Involution, coloring: Option<&Coloring>) -> Result<crate::involution::ArcDiagram> {
    if let Some(c) = coloring {
        if c.n() != w.n() {
            return Err(Error::SizeMismatch {
                left: w.n(),
                right: c.n(),
            });
        }
    }
    Ok(match coloring {
        Some(c) => arc_diagram(w, HalflinePolicy::ColoredOnly(c)),
        None => arc_diagram(w, HalflinePolicy::AllFixed),
    })
}

/// Text drawing. Arcs are stacked by length, longest on top; where a vertical
/// stroke meets a horizontal one the vertical wins. Node glyphs are `o`
/// without a coloring, and `B`/`G`/`W` with one.
pub fn render_ascii(w: &Involution, coloring: Option<&Coloring>) -> Result<String> {
    let d = diagram_for(w, coloring)?;
    let n = d.n;
    let width = PITCH * (n - 1) + 1;
    let mut arcs = d.arcs.clone();
    arcs.sort_by_key(|&(i, j)| (std::cmp::Reverse(j - i), i));
    let height = arcs.len() + 1;
    let mut grid = vec![vec![' '; width]; height];
    let col = |i: usize| PITCH * (i - 1);
    for (row, &(i, j)) in arcs.iter().enumerate() {
        for cell in &mut grid[row][col(i) + 1..col(j)] {
            if *cell == ' ' {
                *cell = '-';
            }
        }
        grid[row][col(i)] = '.';
        grid[row][col(j)] = '.';
        for below in grid.iter_mut().skip(row + 1) {
            below[col(i)] = '|';
            below[col(j)] = '|';
        }
    }
    for &h in &d.halflines {
        for line in grid.iter_mut() {
            line[col(h)] = '|';
        }
    }
    let mut out = String::new();
    for line in &grid {
        let s: String = line.iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    let mut base = vec!['-'; width];
    for i in 1..=n {
        base[col(i)] = match coloring.map(|c| c.color(i)) {
            None => 'o',
            Some(Color::Black) => 'B',
            Some(Color::Grey) => 'G',
            Some(Color::White) => 'W',
        };
    }
    out.extend(base);
    out.push('\n');
    let mut labels = String::new();
    for i in 1..=n {
        let target = col(i);
        while labels.len() < target {
            labels.push(' ');
        }
        let _ = write!(labels, "{i}");
    }
    out.push_str(&labels);
    out.push('\n');
    Ok(out)
}

const SVG_PITCH: usize = 40;
const SVG_MARGIN: usize = 30;
const SVG_NODE_R: usize = 6;

/// SVG 1.1 drawing with semicircular arcs and a fixed node pitch.
pub fn render_svg(w: &Involution, coloring: Option<&Coloring>) -> Result<String> {
    let d = diagram_for(w, coloring)?;
    let n = d.n;
    let max_radius = d
        .arcs
        .iter()
        .map(|&(i, j)| (j - i) * SVG_PITCH / 2)
        .max()
        .unwrap_or(0);
    let halfline_len = max_radius.max(SVG_PITCH) + SVG_PITCH / 2;
    let base_y = SVG_MARGIN + halfline_len;
    let width = 2 * SVG_MARGIN + (n - 1) * SVG_PITCH;
    let height = base_y + SVG_MARGIN + 20;
    let x = |i: usize| SVG_MARGIN + (i - 1) * SVG_PITCH;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        s,
        r#"  <line x1="{}" y1="{base_y}" x2="{}" y2="{base_y}" stroke="black" stroke-width="1"/>"#,
        SVG_MARGIN / 2,
        width - SVG_MARGIN / 2
    );
    for &(i, j) in &d.arcs {
        let r = (j - i) * SVG_PITCH / 2;
        let _ = writeln!(
            s,
            r#"  <path d="M {} {base_y} A {r} {r} 0 0 1 {} {base_y}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            x(i),
            x(j)
        );
    }
    for &h in &d.halflines {
        let _ = writeln!(
            s,
            r#"  <line x1="{0}" y1="{base_y}" x2="{0}" y2="{1}" stroke="black" stroke-width="1.5"/>"#,
            x(h),
            base_y - halfline_len
        );
    }
    for i in 1..=n {
        let fill = match coloring.map(|c| c.color(i)) {
            None | Some(Color::Black) => "black",
            Some(Color::Grey) => "#bfbfbf",
            Some(Color::White) => "white",
        };
        let _ = writeln!(
            s,
            r#"  <circle cx="{}" cy="{base_y}" r="{SVG_NODE_R}" fill="{fill}" stroke="black" stroke-width="1"/>"#,
            x(i)
        );
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{i}</text>"#,
            x(i),
            base_y + 22
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_arc_ascii() {
        let w = Involution::from_arcs(8, &[(1, 7), (2, 3), (5, 8)]).unwrap();
        let art = render_ascii(&w, None).unwrap();
        // half-lines at 4 and 6 run the full height
        let lines: Vec<&str> = art.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[4], "o---o---o---o---o---o---o---o");
        assert_eq!(lines[5], "1   2   3   4   5   6   7   8");
        assert_eq!(lines[0], ".-----------|-------|---.");
        assert_eq!(lines[1], "|           |   .---|---|---.");
        assert_eq!(lines[2], "|   .---.   |   |   |   |   |");
        assert_eq!(lines[3], "|   |   |   |   |   |   |   |");
    }

    #[test]
    fn identity_of_two() {
        let art = render_ascii(&Involution::identity(2), None).unwrap();
        assert_eq!(art, "|   |\no---o\n1   2\n");
        let svg = render_svg(&Involution::identity(2), None).unwrap();
        assert_eq!(svg.matches("<line").count(), 3);
        assert!(!svg.contains("<path"));
    }

    #[test]
    fn colored_rendering() {
        let c = Coloring::from_values(&[0, 2, 1, 1, 0, 0, 2, 1, 2]).unwrap();
        let w = Involution::from_arcs(9, &[(1, 7), (5, 9)]).unwrap();
        let art = render_ascii(&w, Some(&c)).unwrap();
        assert!(art.contains("B---W---G---G---B---B---W---G---W"));
        let svg = render_svg(&w, Some(&c)).unwrap();
        assert_eq!(svg.matches("fill=\"#bfbfbf\"").count(), 3);
        assert_eq!(svg.matches("fill=\"white\"").count(), 3);
        assert_eq!(svg.matches("<path").count(), 2);
        // half-lines at 2 and 6 only; grey fixed points carry none
        assert_eq!(svg.matches("<line").count(), 3);
        assert!(render_ascii(&Involution::identity(3), Some(&c)).is_err());
    }
}
