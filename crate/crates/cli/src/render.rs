//! Plain-text plaquette diagrams.

use parity_core::rect::RectCompilationJson;

fn centered(s: &str, width: usize) -> String {
    let pad = width.saturating_sub(s.chars().count());
    format!("{}{}{}", " ".repeat(pad / 2), s, " ".repeat(pad - pad / 2))
}

/// Draws the grid of a rectangular compilation. Each node shows its source
/// edge as `row-column` (via `name` for the endpoints); plaquette `k` is
/// marked `Ck` between its four corners.
pub fn ascii_grid(rc: &RectCompilationJson, name: impl Fn(u32) -> String) -> String {
    let cells: Vec<Vec<String>> = rc
        .grid
        .iter()
        .map(|row| {
            // The row vertex is the endpoint shared along the row.
            let first = row[0].vertices();
            let r = if row[1].contains(first[0]) { first[0] } else { first[1] };
            row.iter()
                .map(|e| {
                    let v = e.vertices();
                    let c = if v[0] == r { v[1] } else { v[0] };
                    format!("{}-{}", name(r), name(c))
                })
                .collect()
        })
        .collect();
    let w = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    let plaquettes = (rc.m - 1) * (rc.n - 1);
    let gap = (format!("C{plaquettes}").len() + 2).max(5);

    let mut out = String::new();
    for (i, row) in cells.iter().enumerate() {
        let line: Vec<String> = row.iter().map(|c| centered(c, w)).collect();
        let link = format!(" {} ", "-".repeat(gap - 2));
        out.push_str(line.join(&link).trim_end());
        out.push('\n');
        if i + 1 < rc.m {
            let mut sep = String::new();
            for j in 0..rc.n {
                sep.push_str(&centered("|", w));
                if j + 1 < rc.n {
                    sep.push_str(&centered(&format!("C{}", i * (rc.n - 1) + j + 1), gap));
                }
            }
            out.push_str(sep.trim_end());
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use parity_core::{rect_compile, Graph};

    #[test]
    fn two_by_three() {
        let rc = rect_compile(&Graph::complete_bipartite(2, 3)).unwrap().unwrap();
        let text = ascii_grid(&rc.to_json(), |v| v.to_string());
        assert_eq!(text, "1-3 --- 1-4 --- 1-5\n |  C1   |  C2   |\n2-3 --- 2-4 --- 2-5\n");
    }
}
