//! Rigged configurations and the fermionic form of Kostka polynomials.

use std::collections::BTreeMap;

use crate::combinat::render::{boxed_grid, hjoin, Cell};
use crate::combinat::{partitions, Partition};
use crate::error::{Error, Result};
use crate::exactalg::Poly;

/// A rigged configuration for the pair `(lambda, mu)`.
///
/// `nu[a - 1]` is `nu^(a)` for `a = 1 .. l(lambda) - 1`, with
/// `|nu^(a)| = lambda_{a+1} + lambda_{a+2} + ...`. `riggings[a - 1]` maps a
/// part size to its riggings, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RiggedConfiguration {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Vec<Partition>,
    pub riggings: Vec<BTreeMap<u32, Vec<u32>>>,
}

/// `Q_i(rho) = sum_j min(i, rho_j)`.
fn q_i(i: u32, rho: &Partition) -> i64 {
    rho.parts().iter().map(|&r| i64::from(r.min(i))).sum()
}

fn nu_at<'a>(mu: &'a Partition, nu: &'a [Partition], a: usize, empty: &'a Partition) -> &'a Partition {
    if a == 0 {
        mu
    } else {
        nu.get(a - 1).unwrap_or(empty)
    }
}

/// Vacancy number `p_i^(a)` for `a >= 1`.
fn vacancy_of(mu: &Partition, nu: &[Partition], a: usize, i: u32) -> i64 {
    let empty = Partition::empty();
    q_i(i, nu_at(mu, nu, a - 1, &empty)) - 2 * q_i(i, nu_at(mu, nu, a, &empty))
        + q_i(i, nu_at(mu, nu, a + 1, &empty))
}

fn check_sizes(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "rigged configurations of {lambda} and {mu}"
        )));
    }
    Ok(())
}

impl RiggedConfiguration {
    pub fn vacancy(&self, a: usize, i: u32) -> i64 {
        vacancy_of(&self.mu, &self.nu, a, i)
    }

    /// Sizes, vacancy bounds and rigging ranges, recomputed from the stored
    /// fields.
    pub fn is_valid(&self) -> bool {
        let l = self.lambda.len().max(1);
        if self.lambda.size() != self.mu.size()
            || self.nu.len() != l - 1
            || self.riggings.len() != self.nu.len()
        {
            return false;
        }
        for (idx, (nu, rig)) in self.nu.iter().zip(&self.riggings).enumerate() {
            let a = idx + 1;
            let expected: usize = self.lambda.parts()[a..].iter().map(|&x| x as usize).sum();
            if nu.size() != expected {
                return false;
            }
            let mult = nu.multiplicities();
            if rig.len() != mult.len() {
                return false;
            }
            for (&i, &m) in &mult {
                let p = self.vacancy(a, i);
                let Some(js) = rig.get(&i) else { return false };
                if p < 0
                    || js.len() != m
                    || js.windows(2).any(|w| w[0] < w[1])
                    || js.iter().any(|&j| i64::from(j) > p)
                {
                    return false;
                }
            }
        }
        true
    }

    /// `cc(nu) + sum J`, with `cc(nu) = sum_a sum_i alpha_i^(a) (alpha_i^(a) -
    /// alpha_i^(a+1))` and `alpha_i^(a)` the number of parts of `nu^(a)` that
    /// are at least `i`.
    pub fn cocharge(&self) -> usize {
        let alpha = |a: usize, i: u32| -> i64 {
            self.nu
                .get(a)
                .map_or(0, |p| p.parts().iter().filter(|&&x| x >= i).count() as i64)
        };
        let mut cc = 0i64;
        for (a, nu) in self.nu.iter().enumerate() {
            for i in 1..=nu.part(0) {
                let x = alpha(a, i);
                cc += x * (x - alpha(a + 1, i));
            }
        }
        let riggings: i64 = self
            .riggings
            .iter()
            .flat_map(|r| r.values().flatten())
            .map(|&j| i64::from(j))
            .sum();
        (cc + riggings) as usize
    }

    /// Each `nu^(a)` as boxes with its riggings to the right of each row;
    /// configurations side by side.
    pub fn render(&self) -> Vec<String> {
        let blocks: Vec<Vec<String>> = self
            .nu
            .iter()
            .zip(&self.riggings)
            .map(|(nu, rig)| render_rigged_partition(nu, rig))
            .collect();
        if blocks.is_empty() {
            return vec!["(/)".to_string()];
        }
        hjoin(&blocks, "  ")
    }
}

fn render_rigged_partition(nu: &Partition, rig: &BTreeMap<u32, Vec<u32>>) -> Vec<String> {
    if nu.is_empty() {
        return vec!["(/)".to_string()];
    }
    let cells: Vec<Cell> = nu
        .cells()
        .map(|(r, c)| Cell {
            row: r,
            col: c,
            text: String::new(),
            region: r * 10_000 + c,
        })
        .collect();
    let mut lines = boxed_grid(&cells);
    let mut used: BTreeMap<u32, usize> = BTreeMap::new();
    for (r, &part) in nu.parts().iter().enumerate() {
        let k = used.entry(part).or_insert(0);
        let j = rig[&part][*k];
        *k += 1;
        lines[2 * r + 1].push_str(&format!(" {j}"));
    }
    lines
}

/// Weakly decreasing sequences of length `len` with entries in `0..=max`.
fn decreasing_sequences(len: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(max);
        for v in (0..=top).rev() {
            cur.push(v);
            rec(len, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max, &mut Vec::new(), &mut out);
    out
}

/// All rigged configurations for `(lambda, mu)`. Composition content is
/// sorted to a partition.
pub fn rc_list(lambda: &Partition, mu: &Partition) -> Result<Vec<RiggedConfiguration>> {
    check_sizes(lambda, mu)?;
    let levels = lambda.len().saturating_sub(1);
    let sizes: Vec<usize> = (1..=levels)
        .map(|a| lambda.parts()[a..].iter().map(|&x| x as usize).sum())
        .collect();
    let mut configs: Vec<Vec<Partition>> = vec![Vec::new()];
    for &size in &sizes {
        let mut next = Vec::new();
        for c in &configs {
            for p in partitions(size) {
                let mut c = c.clone();
                c.push(p);
                next.push(c);
            }
        }
        configs = next;
    }
    let mut out = Vec::new();
    'config: for nu in configs {
        // admissible: nonnegative vacancy at every occurring part size
        let mut choices: Vec<Vec<BTreeMap<u32, Vec<u32>>>> = Vec::new();
        for (idx, p) in nu.iter().enumerate() {
            let a = idx + 1;
            let mut level: Vec<BTreeMap<u32, Vec<u32>>> = vec![BTreeMap::new()];
            for (&i, &m) in &p.multiplicities() {
                let vac = vacancy_of(mu, &nu, a, i);
                if vac < 0 {
                    continue 'config;
                }
                let seqs = decreasing_sequences(m, vac as u32);
                level = level
                    .into_iter()
                    .flat_map(|r| {
                        seqs.iter().map(move |s| {
                            let mut r = r.clone();
                            r.insert(i, s.clone());
                            r
                        })
                    })
                    .collect();
            }
            choices.push(level);
        }
        let mut riggings: Vec<Vec<BTreeMap<u32, Vec<u32>>>> = vec![Vec::new()];
        for level in &choices {
            riggings = riggings
                .into_iter()
                .flat_map(|r| {
                    level.iter().map(move |x| {
                        let mut r = r.clone();
                        r.push(x.clone());
                        r
                    })
                })
                .collect();
        }
        for r in riggings {
            out.push(RiggedConfiguration {
                lambda: lambda.clone(),
                mu: mu.clone(),
                nu: nu.clone(),
                riggings: r,
            });
        }
    }
    Ok(out)
}

/// `sum_rc t^{cocharge(rc)}`; equals `t^{n(mu)} K_{lambda mu}(1/t)`.
pub fn rc_kostka(lambda: &Partition, mu: &Partition) -> Result<Poly> {
    let mut counts: Vec<i64> = Vec::new();
    for rc in rc_list(lambda, mu)? {
        let c = rc.cocharge();
        if counts.len() <= c {
            counts.resize(c + 1, 0);
        }
        counts[c] += 1;
    }
    Ok(Poly::from_t_coeffs(&counts))
}
