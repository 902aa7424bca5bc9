//! ASCII box drawing for cell diagrams.

use std::collections::HashMap;

/// One cell of a diagram. Cells sharing a `region` are drawn without a wall
/// between them.
#[derive(Clone, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub text: String,
    pub region: usize,
}

/// Draw cells as `+---+` boxes. Trailing spaces are trimmed.
pub fn boxed_grid(cells: &[Cell]) -> Vec<String> {
    if cells.is_empty() {
        return Vec::new();
    }
    let width = cells
        .iter()
        .map(|c| c.text.chars().count())
        .max()
        .unwrap_or(0)
        .max(1)
        + 2;
    let at: HashMap<(usize, usize), &Cell> = cells.iter().map(|c| ((c.row, c.col), c)).collect();
    let rows = cells.iter().map(|c| c.row).max().unwrap() + 1;
    let cols = cells.iter().map(|c| c.col).max().unwrap() + 1;
    let region = |r: isize, c: isize| -> Option<usize> {
        if r < 0 || c < 0 {
            return None;
        }
        at.get(&(r as usize, c as usize)).map(|x| x.region)
    };
    let wall = |a: Option<usize>, b: Option<usize>| a != b;
    // horizontal wall above cell (r, c)
    let h = |r: usize, c: usize| wall(region(r as isize - 1, c as isize), region(r as isize, c as isize));
    // vertical wall left of cell (r, c)
    let v = |r: usize, c: usize| wall(region(r as isize, c as isize - 1), region(r as isize, c as isize));

    let mut out = Vec::new();
    for r in 0..=rows {
        let mut line = String::new();
        for c in 0..=cols {
            let right = c < cols && h(r, c);
            let left = c > 0 && h(r, c - 1);
            let vertical = (r < rows && v(r, c)) || (r > 0 && v(r - 1, c));
            line.push(if vertical || left != right {
                '+'
            } else if left {
                '-'
            } else {
                ' '
            });
            if c < cols {
                let seg = if h(r, c) { "-" } else { " " };
                line.push_str(&seg.repeat(width));
            }
        }
        out.push(line.trim_end().to_string());
        if r == rows {
            break;
        }
        let mut line = String::new();
        for c in 0..=cols {
            line.push(if v(r, c) { '|' } else { ' ' });
            if c < cols {
                let text = at.get(&(r, c)).map_or("", |x| x.text.as_str());
                let len = text.chars().count();
                let left = (width - len) / 2;
                line.push_str(&" ".repeat(left));
                line.push_str(text);
                line.push_str(&" ".repeat(width - len - left));
            }
        }
        out.push(line.trim_end().to_string());
    }
    out
}

/// Place blocks side by side, top-aligned, separated by `sep`.
pub fn hjoin(blocks: &[Vec<String>], sep: &str) -> Vec<String> {
    let height = blocks.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = blocks
        .iter()
        .map(|b| b.iter().map(|l| l.chars().count()).max().unwrap_or(0))
        .collect();
    (0..height)
        .map(|i| {
            let mut line = String::new();
            for (k, b) in blocks.iter().enumerate() {
                if k > 0 {
                    line.push_str(sep);
                }
                let s = b.get(i).map_or("", String::as_str);
                line.push_str(s);
                line.push_str(&" ".repeat(widths[k] - s.chars().count()));
            }
            line.trim_end().to_string()
        })
        .collect()
}
