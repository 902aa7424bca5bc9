//! k-ribbon tableaux, built as chains of horizontal k-ribbon strips.
//!
//! A strip `mu/nu` is tiled by k-ribbons so that the cell directly above
//! every ribbon's head (its top-right cell) lies outside `mu/nu`. For `k = 1`
//! this is exactly a horizontal strip.

use std::collections::{BTreeSet, HashMap};

use super::partition::Partition;
use super::render::{boxed_grid, Cell};
use crate::error::{Error, Result};

/// Cells `(row, col)`, head (top-right) first, tail (bottom-left) last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ribbon {
    pub label: u32,
    pub cells: Vec<(usize, usize)>,
}

impl Ribbon {
    /// Number of rows the ribbon occupies.
    pub fn height(&self) -> usize {
        let top = self.cells.iter().map(|c| c.0).min().unwrap_or(0);
        let bottom = self.cells.iter().map(|c| c.0).max().unwrap_or(0);
        bottom - top + 1
    }

    pub fn spin(&self) -> usize {
        self.height() - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonTableau {
    pub k: usize,
    pub shape: Partition,
    /// `chain[0]` is empty, `chain[i]` is the shape filled by labels `<= i`.
    pub chain: Vec<Partition>,
    pub ribbons: Vec<Ribbon>,
    /// Sum of `height - 1` over all ribbons.
    pub spin: usize,
}

impl RibbonTableau {
    /// Weight vector: number of ribbons per label.
    pub fn weight(&self) -> Vec<u32> {
        self.chain
            .windows(2)
            .map(|w| ((w[1].size() - w[0].size()) / self.k) as u32)
            .collect()
    }

    pub fn render(&self) -> Vec<String> {
        let cells: Vec<Cell> = self
            .ribbons
            .iter()
            .enumerate()
            .flat_map(|(i, rb)| {
                rb.cells.iter().map(move |&(r, c)| Cell {
                    row: r,
                    col: c,
                    text: rb.label.to_string(),
                    region: i,
                })
            })
            .collect();
        boxed_grid(&cells)
    }
}

type Tiling = Vec<Vec<(usize, usize)>>;

/// All horizontal k-ribbon strips of `count` ribbons on top of `inner`,
/// staying inside `bound`, with their tilings.
pub fn horizontal_ribbon_strips(
    inner: &Partition,
    bound: &Partition,
    count: usize,
    k: usize,
) -> Vec<(Partition, Tiling)> {
    let mut out = Vec::new();
    if !bound.contains(inner) {
        return out;
    }
    for outer in partitions_between(inner, bound, count * k) {
        for tiling in strip_tilings(inner, &outer, k) {
            out.push((outer.clone(), tiling));
        }
    }
    out
}

/// Partitions `mu` with `inner ⊆ mu ⊆ bound` and `|mu| = |inner| + extra`.
fn partitions_between(inner: &Partition, bound: &Partition, extra: usize) -> Vec<Partition> {
    fn rec(
        r: usize,
        rem: usize,
        inner: &Partition,
        bound: &Partition,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if r == bound.len() {
            if rem == 0 {
                out.push(Partition::from_composition(cur));
            }
            return;
        }
        let lo = inner.part(r);
        let mut hi = bound.part(r).min(lo + rem as u32);
        if r > 0 {
            hi = hi.min(cur[r - 1]);
        }
        for v in lo..=hi {
            cur.push(v);
            rec(r + 1, rem - (v - lo) as usize, inner, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, extra, inner, bound, &mut Vec::new(), &mut out);
    out
}

/// Every tiling of `outer/inner` by k-ribbons whose heads touch the northern
/// border.
fn strip_tilings(inner: &Partition, outer: &Partition, k: usize) -> Vec<Tiling> {
    let cells: BTreeSet<(usize, usize)> = outer
        .cells()
        .filter(|&(r, c)| c >= inner.part(r) as usize)
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    tile(&cells, inner, k, &mut current, &mut out);
    out
}

fn tile(
    free: &BTreeSet<(usize, usize)>,
    inner: &Partition,
    k: usize,
    current: &mut Tiling,
    out: &mut Vec<Tiling>,
) {
    // topmost row first, rightmost cell within it: this cell must be a head
    let Some(&head) = free
        .iter()
        .min_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
    else {
        out.push(current.clone());
        return;
    };
    let (r, c) = head;
    if r > 0 && c >= inner.part(r - 1) as usize {
        return;
    }
    let mut path = vec![head];
    extend_ribbon(free, k, &mut path, &mut |ribbon| {
        let mut rest = free.clone();
        for cell in ribbon {
            rest.remove(cell);
        }
        current.push(ribbon.to_vec());
        tile(&rest, inner, k, current, out);
        current.pop();
    });
}

type Coord = (usize, usize);

/// Grow a left/down lattice path of `k` free cells from `path[0]`.
fn extend_ribbon(
    free: &BTreeSet<(usize, usize)>,
    k: usize,
    path: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[Coord]),
) {
    if path.len() == k {
        emit(path);
        return;
    }
    let (r, c) = *path.last().unwrap();
    let mut next = vec![(r + 1, c)];
    if c > 0 {
        next.push((r, c - 1));
    }
    for n in next {
        if free.contains(&n) {
            path.push(n);
            extend_ribbon(free, k, path, emit);
            path.pop();
        }
    }
}

/// All k-ribbon tableaux of `shape` whose label `i + 1` is carried by
/// `weight[i]` ribbons.
pub fn ribbon_tableaux(shape: &Partition, weight: &[u32], k: usize) -> Result<Vec<RibbonTableau>> {
    if k == 0 {
        return Err(Error::InvalidRule("ribbon size must be positive".into()));
    }
    let total: usize = weight.iter().map(|&w| w as usize).sum();
    if shape.size() != k * total {
        return Err(Error::SizeMismatch(format!(
            "shape {shape} has size {} but {k}-ribbon weight {weight:?} covers {}",
            shape.size(),
            k * total
        )));
    }
    let mut memo: HashMap<(Partition, usize), Vec<(Partition, Tiling)>> = HashMap::new();
    let mut out = Vec::new();
    let mut chain = vec![Partition::empty()];
    let mut ribbons = Vec::new();
    build(shape, weight, k, &mut memo, &mut chain, &mut ribbons, &mut out);
    Ok(out)
}

fn build(
    shape: &Partition,
    weight: &[u32],
    k: usize,
    memo: &mut HashMap<(Partition, usize), Vec<(Partition, Tiling)>>,
    chain: &mut Vec<Partition>,
    ribbons: &mut Vec<Ribbon>,
    out: &mut Vec<RibbonTableau>,
) {
    let step = chain.len() - 1;
    if step == weight.len() {
        if chain.last() == Some(shape) {
            let spin = ribbons.iter().map(Ribbon::spin).sum();
            out.push(RibbonTableau {
                k,
                shape: shape.clone(),
                chain: chain.clone(),
                ribbons: ribbons.clone(),
                spin,
            });
        }
        return;
    }
    let inner = chain.last().unwrap().clone();
    let count = weight[step] as usize;
    let strips = memo
        .entry((inner.clone(), count))
        .or_insert_with(|| horizontal_ribbon_strips(&inner, shape, count, k))
        .clone();
    for (outer, tiling) in strips {
        let added = tiling.len();
        for cells in tiling {
            ribbons.push(Ribbon {
                label: step as u32 + 1,
                cells,
            });
        }
        chain.push(outer);
        build(shape, weight, k, memo, chain, ribbons, out);
        chain.pop();
        ribbons.truncate(ribbons.len() - added);
    }
}
