//! Semistandard tableaux and the charge statistic.

use std::collections::HashMap;

use super::partition::Partition;
use super::render::{boxed_grid, Cell};
use crate::error::{Error, Result};
use crate::exactalg::Poly;

/// A semistandard Young tableau in English notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates the semistandard condition.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        Partition::new(shape.clone())?;
        let ok = rows.iter().all(|r| r.iter().all(|&x| x > 0) && r.windows(2).all(|w| w[0] <= w[1]))
            && rows
                .windows(2)
                .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi));
        if !ok {
            return Err(Error::InvalidRule(format!("{rows:?} is not semistandard")));
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("tableau rows form a partition")
    }

    /// `content[i]` = number of entries equal to `i + 1`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0u32; max];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }

    /// Rows read bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Lascoux-Schützenberger charge; needs partition content.
    pub fn charge(&self) -> Result<usize> {
        let content = self.content();
        if content.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonPartitionContent(content));
        }
        Ok(word_charge(&self.reading_word()))
    }

    pub fn render(&self) -> Vec<String> {
        let cells = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter().enumerate().map(move |(c, x)| Cell {
                    row: r,
                    col: c,
                    text: x.to_string(),
                    region: r * 10_000 + c,
                })
            })
            .collect::<Vec<_>>();
        boxed_grid(&cells)
    }
}

/// Charge of a word whose content is a partition: split into standard
/// subwords by cyclic right-to-left scans and sum their charges.
pub fn word_charge(word: &[u32]) -> usize {
    let n = word.len();
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut total = 0;
    while remaining > 0 {
        // the unused letters always form {1..k} for some k
        let k = word
            .iter()
            .zip(&used)
            .filter(|(_, &u)| !u)
            .map(|(&x, _)| x)
            .max()
            .unwrap_or(0);
        let mut pos = match (0..n).rev().find(|&i| !used[i] && word[i] == 1) {
            Some(p) => p,
            None => break,
        };
        used[pos] = true;
        remaining -= 1;
        let mut index = 0;
        for letter in 2..=k {
            let left = (0..pos).rev().find(|&i| !used[i] && word[i] == letter);
            let found = match left {
                Some(p) => p,
                None => {
                    index += 1;
                    (pos + 1..n)
                        .rev()
                        .find(|&i| !used[i] && word[i] == letter)
                        .expect("partition content guarantees the letter exists")
                }
            };
            total += index;
            used[found] = true;
            remaining -= 1;
            pos = found;
        }
    }
    total
}

fn check_content(shape: &Partition, content: &[u32]) -> Result<()> {
    let total: usize = content.iter().map(|&c| c as usize).sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch(format!(
            "shape {shape} has size {} but content {content:?} sums to {total}",
            shape.size()
        )));
    }
    Ok(())
}

/// All partitions `mu` with `inner ⊆ mu ⊆ bound`, `|mu/inner| = size`, and
/// `mu/inner` a horizontal strip.
pub(crate) fn horizontal_strips(inner: &Partition, bound: &Partition, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = bound.len();
    let mut cur = Vec::with_capacity(rows);
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
                let parts = cur.iter().copied().filter(|&x| x > 0).collect();
                out.push(Partition::new(parts).expect("interlacing keeps rows decreasing"));
            }
            return;
        }
        let lo = inner.part(r);
        // horizontal strip: mu_r <= inner_{r-1}
        let mut hi = bound.part(r);
        if r > 0 {
            hi = hi.min(inner.part(r - 1));
        }
        if hi < lo {
            return;
        }
        for v in lo..=hi.min(lo + rem as u32) {
            cur.push(v);
            rec(r + 1, rem - (v - lo) as usize, inner, bound, cur, out);
            cur.pop();
        }
    }
    if inner.len() > rows || !bound.contains(inner) {
        return out;
    }
    rec(0, size, inner, bound, &mut cur, &mut out);
    out
}

/// All semistandard tableaux of `shape` in which `i + 1` occurs `content[i]`
/// times. `content` may be any composition (zeros allowed).
pub fn ssyt_list(shape: &Partition, content: &[u32]) -> Result<Vec<Tableau>> {
    check_content(shape, content)?;
    let mut out = Vec::new();
    let mut chain = vec![Partition::empty()];
    fn rec(
        i: usize,
        shape: &Partition,
        content: &[u32],
        chain: &mut Vec<Partition>,
        out: &mut Vec<Tableau>,
    ) {
        if i == content.len() {
            if chain.last() == Some(shape) {
                out.push(tableau_from_chain(chain));
            }
            return;
        }
        let inner = chain.last().unwrap().clone();
        for mu in horizontal_strips(&inner, shape, content[i] as usize) {
            chain.push(mu);
            rec(i + 1, shape, content, chain, out);
            chain.pop();
        }
    }
    rec(0, shape, content, &mut chain, &mut out);
    Ok(out)
}

fn tableau_from_chain(chain: &[Partition]) -> Tableau {
    let shape = chain.last().unwrap();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    for (label, w) in chain.windows(2).enumerate() {
        for (r, row) in rows.iter_mut().enumerate() {
            for c in w[0].part(r)..w[1].part(r) {
                row[c as usize] = label as u32 + 1;
            }
        }
    }
    Tableau { rows }
}

/// Number of semistandard tableaux of `shape` with the given content.
pub fn kostka_number(shape: &Partition, content: &[u32]) -> Result<u64> {
    check_content(shape, content)?;
    let mut memo = HashMap::new();
    Ok(kostka_count(shape, content, &mut memo))
}

fn kostka_count(
    shape: &Partition,
    content: &[u32],
    memo: &mut HashMap<(Partition, usize), u64>,
) -> u64 {
    if content.is_empty() {
        return u64::from(shape.is_empty());
    }
    if let Some(&v) = memo.get(&(shape.clone(), content.len())) {
        return v;
    }
    let (last, rest) = content.split_last().unwrap();
    // remove a horizontal strip of size `last` from the bottom of `shape`
    let mut total = 0;
    let inner_size = shape.size() - *last as usize;
    for mu in super::partition::partitions(inner_size) {
        if shape.contains(&mu) && is_horizontal_strip(&mu, shape) {
            total += kostka_count(&mu, rest, memo);
        }
    }
    memo.insert((shape.clone(), content.len()), total);
    total
}

fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    (0..outer.len()).all(|r| r == 0 || outer.part(r) <= inner.part(r - 1))
}

/// Kostka-Foulkes polynomial `K_{shape, content}(t) = sum_T t^{charge(T)}`.
pub fn kostka_poly(shape: &Partition, content: &Partition) -> Result<Poly> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch(format!(
            "Kostka polynomial of {shape} and {content}"
        )));
    }
    let mut counts: Vec<i64> = Vec::new();
    for t in ssyt_list(shape, content.parts())? {
        let c = t.charge()?;
        if counts.len() <= c {
            counts.resize(c + 1, 0);
        }
        counts[c] += 1;
    }
    Ok(Poly::from_t_coeffs(&counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions;
    use crate::part;

    /// Brute-force: every filling of the shape by the multiset of entries,
    /// filtered by the semistandard condition.
    fn brute_ssyt_count(shape: &Partition, content: &[u32]) -> usize {
        let cells: Vec<(usize, usize)> = shape.cells().collect();
        let mut letters: Vec<u32> = Vec::new();
        for (i, &c) in content.iter().enumerate() {
            letters.extend(std::iter::repeat_n(i as u32 + 1, c as usize));
        }
        let mut count = 0;
        let mut fill = vec![0u32; cells.len()];
        fn rec(
            idx: usize,
            cells: &[(usize, usize)],
            avail: &mut Vec<u32>,
            fill: &mut Vec<u32>,
            count: &mut usize,
        ) {
            if idx == cells.len() {
                *count += 1;
                return;
            }
            let (r, c) = cells[idx];
            let mut seen = std::collections::BTreeSet::new();
            for k in 0..avail.len() {
                let v = avail[k];
                if !seen.insert(v) {
                    continue;
                }
                let left_ok = c == 0 || fill[idx - 1] <= v;
                let up_ok = r == 0
                    || cells
                        .iter()
                        .position(|&x| x == (r - 1, c))
                        .is_none_or(|j| fill[j] < v);
                if left_ok && up_ok {
                    fill[idx] = v;
                    avail.remove(k);
                    rec(idx + 1, cells, avail, fill, count);
                    avail.insert(k, v);
                }
            }
        }
        rec(0, &cells, &mut letters, &mut fill, &mut count);
        count
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(ssyt_list(&part![2, 1], &[1, 1, 1]).unwrap().len(), 2);
        assert!(ssyt_list(&part![1, 1], &[2, 0]).unwrap().is_empty());
        assert_eq!(ssyt_list(&part![2, 2], &[1, 1, 1, 1]).unwrap().len(), 2);
        assert!(ssyt_list(&part![2, 1], &[1, 1]).is_err());
    }

    #[test]
    fn ssyt_matches_brute_force() {
        for n in 1..=5 {
            for shape in partitions(n) {
                for mu in partitions(n) {
                    let list = ssyt_list(&shape, mu.parts()).unwrap();
                    assert_eq!(list.len(), brute_ssyt_count(&shape, mu.parts()));
                    assert_eq!(
                        kostka_number(&shape, mu.parts()).unwrap() as usize,
                        list.len()
                    );
                    for t in &list {
                        assert_eq!(t.shape(), shape);
                        assert!(Tableau::new(t.rows().to_vec()).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn charge_examples() {
        let t = Tableau::new(vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(t.charge().unwrap(), 0);
        let t = Tableau::new(vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(t.charge().unwrap(), 3);
        let t = Tableau::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(t.charge().unwrap(), 1);
        let t = Tableau::new(vec![vec![1, 2], vec![1]]);
        assert!(t.is_err());
        let t = Tableau::new(vec![vec![1, 2, 2]]).unwrap();
        assert!(matches!(t.charge(), Err(Error::NonPartitionContent(_))));
    }

    #[test]
    fn kostka_poly_examples() {
        let t = Poly::from_t_coeffs;
        assert_eq!(kostka_poly(&part![2, 1], &part![1, 1, 1]).unwrap(), t(&[0, 1, 1]));
        assert_eq!(kostka_poly(&part![3], &part![2, 1]).unwrap(), t(&[0, 1]));
        assert_eq!(kostka_poly(&part![3], &part![1, 1, 1]).unwrap(), t(&[0, 0, 0, 1]));
        for n in 0..=6 {
            for l in partitions(n) {
                assert!(kostka_poly(&l, &l).unwrap().is_one());
            }
        }
        assert!(kostka_poly(&part![2], &part![1]).is_err());
    }

    #[test]
    fn kostka_vanishes_off_dominance() {
        for n in 1..=6 {
            for l in partitions(n) {
                for m in partitions(n) {
                    let k = kostka_poly(&l, &m).unwrap();
                    if !m.dominated_by(&l).unwrap() {
                        assert!(k.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn single_row_charge_is_n_choose_2() {
        for n in 1..=7u32 {
            let t = Tableau::new(vec![(1..=n).collect()]).unwrap();
            assert_eq!(t.charge().unwrap(), (n * (n - 1) / 2) as usize);
        }
    }

    #[test]
    fn render_boxes() {
        let t = Tableau::new(vec![vec![1, 1, 2], vec![2]]).unwrap();
        assert_eq!(
            t.render(),
            vec![
                "+---+---+---+",
                "| 1 | 1 | 2 |",
                "+---+---+---+",
                "| 2 |",
                "+---+",
            ]
        );
    }
}
