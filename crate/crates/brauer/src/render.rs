//! Text and SVG pictures of weight and cap diagrams.
//!
//! The ASCII form prints one character per vertex (`o`, `x`, `v`, `^`)
//! with the wall drawn as `|` on the left, and the caps as bracket art on
//! the following lines; curls reach back to the wall.  The SVG form (SVG
//! 1.1) draws the wall as the y-axis, arcs as quadratic Béziers, and
//! curls as wall-touching arcs.

use crate::cap::CapDiagram;
use crate::weight::WeightDiagram;

/// Number of tail `v` slots shown after the stored prefix.
const TAIL: usize = 3;

fn slot_chars(w: &WeightDiagram) -> Vec<char> {
    let mut out: Vec<char> = (0..w.prefix_len()).map(|k| w.label(k).ascii()).collect();
    out.extend(std::iter::repeat_n('v', TAIL));
    out
}

/// One line of vertex labels, wall first, infinite `v` tail elided.
pub fn ascii_weight(w: &WeightDiagram) -> String {
    let chars: Vec<String> = slot_chars(w).iter().map(|c| c.to_string()).collect();
    format!("| {} ...", chars.join(" "))
}

/// Column of a slot in the ASCII grid; the wall sits in column 0.
fn col(slot: i64) -> usize {
    if slot < 0 {
        0
    } else {
        2 + 2 * slot as usize
    }
}

/// Multi-line ASCII art: the label line, then the arcs by nesting depth.
pub fn ascii_cap(c: &CapDiagram) -> String {
    let chars = slot_chars(c.weight());
    let width = col(chars.len() as i64 - 1) + 1;
    let mut lines = vec![ascii_weight(c.weight())];

    // row of an arc = height of its containment subtree, so inner arcs
    // sit directly under the labels
    let arcs = c.arcs();
    let mut row = vec![0usize; arcs.len()];
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&i| arcs[i].right - arcs[i].left);
    for &i in &order {
        for &j in &order {
            if j != i && arcs[i].contains_arc(&arcs[j]) {
                row[i] = row[i].max(row[j] + 1);
            }
        }
    }
    let rows = arcs.iter().len().min(row.iter().map(|r| r + 1).max().unwrap_or(0));
    let mut grid = vec![vec![' '; width]; rows];
    for line in &mut grid {
        line[0] = '|';
    }
    for (i, a) in arcs.iter().enumerate() {
        let (l, r) = (col(a.left), col(a.right));
        let line = &mut grid[row[i]];
        line[l] = if a.left < 0 { '|' } else { '\\' };
        line[r] = '/';
        for cell in line.iter_mut().take(r).skip(l + 1) {
            if *cell == ' ' {
                *cell = '_';
            }
        }
    }
    // rays drop straight through every arc row
    let mut rays: Vec<usize> = c.ray_down().to_vec();
    rays.extend(c.ray_up());
    rays.extend(c.weight().prefix_len()..chars.len());
    for s in rays {
        for line in &mut grid {
            let cell = &mut line[col(s as i64)];
            if *cell == ' ' || *cell == '_' {
                *cell = '|';
            }
        }
    }
    for line in grid {
        lines.push(line.into_iter().collect::<String>().trim_end().to_string());
    }
    lines.join("\n")
}

fn fmt(x: f64) -> String {
    format!("{x:.1}")
}

/// SVG 1.1 picture: wall on the y-axis, labels on a baseline, caps as
/// quadratic Béziers below it, curls touching the wall, rays vertical.
pub fn svg_cap(c: &CapDiagram) -> String {
    let chars = slot_chars(c.weight());
    let step = 24.0;
    let x_of = |slot: i64| -> f64 {
        if slot < 0 {
            0.0
        } else {
            step * (slot as f64 + 1.0)
        }
    };
    let base = 30.0;
    let arcs = c.arcs();
    let max_drop = arcs
        .iter()
        .map(|a| (a.right - a.left) as f64 * step / 2.0)
        .fold(20.0_f64, f64::max);
    let width = x_of(chars.len() as i64) + step;
    let height = base + max_drop + 20.0;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{}\" height=\"{}\" viewBox=\"0 0 {0} {1}\">\n",
        fmt(width),
        fmt(height)
    ));
    out.push_str(&format!(
        "  <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"{}\" stroke=\"black\" stroke-width=\"2\"/>\n",
        fmt(height)
    ));
    for (k, ch) in chars.iter().enumerate() {
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"monospace\" \
             font-size=\"14\">{}</text>\n",
            fmt(x_of(k as i64)),
            fmt(base - 8.0),
            ch
        ));
    }
    out.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\">...</text>\n",
        fmt(x_of(chars.len() as i64)),
        fmt(base - 8.0)
    ));
    for a in arcs {
        let (x1, x2) = (x_of(a.left), x_of(a.right));
        let drop = (x2 - x1).max(step) / 2.0;
        out.push_str(&format!(
            "  <path d=\"M {} {} Q {} {} {} {}\" fill=\"none\" stroke=\"black\"/>\n",
            fmt(x1),
            fmt(base),
            fmt((x1 + x2) / 2.0),
            fmt(base + 2.0 * drop),
            fmt(x2),
            fmt(base)
        ));
    }
    let mut rays: Vec<usize> = c.ray_down().to_vec();
    rays.extend(c.ray_up());
    rays.extend(c.weight().prefix_len()..chars.len());
    rays.sort_unstable();
    for s in rays {
        let x = x_of(s as i64);
        out.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
            fmt(x),
            fmt(base),
            fmt(x),
            fmt(height)
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// SVG of the bare weight diagram (labels and wall only).
pub fn svg_weight(w: &WeightDiagram) -> String {
    svg_cap(&CapDiagram::from_weight(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::weight::weight_diagram;

    fn parts(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn empty_partition_text_line() {
        let w = weight_diagram(&Partition::empty(), 2);
        assert_eq!(ascii_weight(&w), "| o v v v ...");
    }

    #[test]
    fn cap_art_has_matching_brackets() {
        for (l, d) in [("2", 1i64), ("3,2,1", -2), ("10,10,9,9,8,5,3,3", 3)] {
            let c = CapDiagram::from_partition(&parts(l), d);
            let art = ascii_cap(&c);
            let opens = art.matches('\\').count();
            let closes = art.matches('/').count();
            assert_eq!(closes, c.arcs().len(), "{art}");
            assert_eq!(opens, c.caps().len(), "{art}");
        }
    }

    #[test]
    fn svg_is_wellformed_and_has_all_arcs() {
        let c = CapDiagram::from_partition(&parts("3,2,1"), -2);
        let svg = svg_cap(&c);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<path").count(), c.arcs().len());
        assert!(svg.contains("version=\"1.1\""));
        assert!(svg.contains("x1=\"0\" y1=\"0\""), "wall on the y-axis");
    }
}
