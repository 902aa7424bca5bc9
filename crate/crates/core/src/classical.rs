//! The bases m, e, h, p, s: expansions in monomials, products, omega.

use std::collections::HashMap;

use crate::combinat::{kostka_number, partitions, Partition};
use crate::error::{Error, Result};
use crate::exactalg::Coeff;
use crate::symcore::{BasisChange, BasisSpec, LinearOperator, SymElement, SymRing};

/// Number of matrices with nonnegative integer entries (or 0/1 entries when
/// `binary`) with the given row and column sums.
pub fn count_matrices(rows: &[u32], cols: &[u32], binary: bool) -> u64 {
    fn rec(
        rows: &[u32],
        caps: Vec<u32>,
        binary: bool,
        memo: &mut HashMap<(usize, Vec<u32>), u64>,
    ) -> u64 {
        let Some((&first, rest)) = rows.split_first() else {
            return u64::from(caps.iter().all(|&c| c == 0));
        };
        let mut key_caps = caps.clone();
        key_caps.sort_unstable();
        let key = (rows.len(), key_caps);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        let mut caps = caps;
        fill(0, first, &mut caps, rest, binary, memo, &mut total);
        memo.insert(key, total);
        total
    }
    fn fill(
        j: usize,
        rem: u32,
        caps: &mut Vec<u32>,
        rows: &[u32],
        binary: bool,
        memo: &mut HashMap<(usize, Vec<u32>), u64>,
        total: &mut u64,
    ) {
        if j == caps.len() {
            if rem == 0 {
                *total += rec(rows, caps.clone(), binary, memo);
            }
            return;
        }
        let max = if binary { 1 } else { u32::MAX };
        for x in 0..=caps[j].min(rem).min(max) {
            caps[j] -= x;
            fill(j + 1, rem - x, caps, rows, binary, memo, total);
            caps[j] += x;
        }
    }
    if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
        return 0;
    }
    rec(rows, cols.to_vec(), binary, &mut HashMap::new())
}

/// `m_lambda * m_mu` in the monomial basis.
pub fn monomial_product(lambda: &Partition, mu: &Partition) -> Vec<(Partition, Coeff)> {
    let width = lambda.len() + mu.len();
    let mut out = Vec::new();
    for nu in partitions(lambda.size() + mu.size()) {
        if nu.len() > width {
            continue;
        }
        // exponent vector nu; count arrangements beta of mu with nu - beta a
        // rearrangement of lambda
        let target: Vec<u32> = (0..width).map(|i| nu.part(i)).collect();
        let mut want: HashMap<u32, usize> = HashMap::new();
        for i in 0..width {
            *want.entry(lambda.part(i)).or_default() += 1;
        }
        let mut avail: HashMap<u32, usize> = HashMap::new();
        for i in 0..width {
            *avail.entry(mu.part(i)).or_default() += 1;
        }
        let count = count_splits(&target, 0, &mut avail, &mut want);
        if count > 0 {
            out.push((nu, Coeff::from_int(count as i64)));
        }
    }
    out
}

fn count_splits(
    target: &[u32],
    i: usize,
    avail: &mut HashMap<u32, usize>,
    want: &mut HashMap<u32, usize>,
) -> u64 {
    if i == target.len() {
        return 1;
    }
    let mut total = 0;
    let values: Vec<u32> = avail.iter().filter(|(_, &c)| c > 0).map(|(&v, _)| v).collect();
    for b in values {
        if b > target[i] {
            continue;
        }
        let a = target[i] - b;
        if want.get(&a).copied().unwrap_or(0) == 0 {
            continue;
        }
        *avail.get_mut(&b).unwrap() -= 1;
        *want.get_mut(&a).unwrap() -= 1;
        total += count_splits(target, i + 1, avail, want);
        *avail.get_mut(&b).unwrap() += 1;
        *want.get_mut(&a).unwrap() += 1;
    }
    total
}

/// Littlewood-Richardson coefficients: `s_lambda * s_mu = sum c s_nu`,
/// counting skew tableaux of shape `nu/lambda` and content `mu` whose
/// reverse reading word is a lattice word.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> Vec<(Partition, Coeff)> {
    let rows = lambda.len() + mu.len();
    let bound = Partition::from_composition(&vec![lambda.part(0) + mu.part(0); rows]);
    let mut counts: HashMap<Partition, i64> = HashMap::new();
    let mut chain = vec![lambda.clone()];
    lr_rec(mu, &bound, &mut chain, &mut counts);
    let mut out: Vec<(Partition, Coeff)> = counts
        .into_iter()
        .map(|(p, c)| (p, Coeff::from_int(c)))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn lr_rec(mu: &Partition, bound: &Partition, chain: &mut Vec<Partition>, counts: &mut HashMap<Partition, i64>) {
    let i = chain.len() - 1;
    if i == mu.len() {
        if is_lattice_filling(chain) {
            *counts.entry(chain.last().unwrap().clone()).or_default() += 1;
        }
        return;
    }
    let inner = chain.last().unwrap().clone();
    for next in crate::combinat::horizontal_strips(&inner, bound, mu.part(i) as usize) {
        chain.push(next);
        lr_rec(mu, bound, chain, counts);
        chain.pop();
    }
}

/// Reading rows top to bottom, each right to left, every prefix has at least
/// as many `i` as `i + 1`.
fn is_lattice_filling(chain: &[Partition]) -> bool {
    let outer = chain.last().unwrap();
    let mut seen: Vec<usize> = vec![0; chain.len()];
    for r in 0..outer.len() {
        for c in (chain[0].part(r)..outer.part(r)).rev() {
            let label = (1..chain.len())
                .find(|&k| c < chain[k].part(r))
                .expect("cell lies in some strip");
            seen[label] += 1;
            if label > 1 && seen[label] > seen[label - 1] {
                return false;
            }
        }
    }
    true
}

/// Expansion of `basis[lambda]` in monomials for `basis` one of e, h, p, s.
pub fn expand_in_monomials(basis: &str, lambda: &Partition) -> Result<SymElement> {
    let n = lambda.size();
    let terms: Vec<(Partition, Coeff)> = match basis {
        "h" | "e" => partitions(n)
            .into_iter()
            .map(|mu| {
                let c = count_matrices(lambda.parts(), mu.parts(), basis == "e");
                (mu, Coeff::from_int(c as i64))
            })
            .collect(),
        "s" => partitions(n)
            .into_iter()
            .map(|mu| {
                let c = kostka_number(lambda, mu.parts()).expect("sizes agree");
                (mu, Coeff::from_int(c as i64))
            })
            .collect(),
        "p" => {
            let mut acc = vec![(Partition::empty(), Coeff::one())];
            for &r in lambda.parts() {
                let factor = Partition::new(vec![r]).expect("single part");
                let mut next = Vec::new();
                for (p, c) in &acc {
                    for (q, d) in monomial_product(p, &factor) {
                        next.push((q, c * &d));
                    }
                }
                acc = SymElement::from_terms("m", next).into_terms().into_iter().collect();
            }
            acc
        }
        other => {
            return Err(Error::InvalidRule(format!(
                "no monomial expansion rule for basis `{other}`"
            )))
        }
    };
    Ok(SymElement::from_terms("m", terms))
}

/// Register m, e, h, p, s with their conversions, the Hall dual pairs
/// `(h, m)` and `(s, s)`, and the involution `omega` (defined on p).
pub fn register_classical(ring: &mut SymRing) -> Result<()> {
    ring.register_basis(BasisSpec::new("m", "monomial").with_product(monomial_product))?;
    ring.register_basis(BasisSpec::new("e", "elementary").multiplicative())?;
    ring.register_basis(BasisSpec::new("h", "complete").multiplicative())?;
    ring.register_basis(BasisSpec::new("p", "power sum").multiplicative())?;
    ring.register_basis(BasisSpec::new("s", "Schur").with_product(lr_product))?;
    for b in ["p", "h", "e", "s"] {
        ring.declare_basis_change(
            b,
            "m",
            BasisChange::columns(move |_, lambda| expand_in_monomials(b, lambda)),
        )?;
    }
    // h_mu = sum K_{lambda mu} s_lambda, e_mu = sum K_{lambda' mu} s_lambda
    for b in ["h", "e"] {
        ring.declare_basis_change(
            b,
            "s",
            BasisChange::columns(move |_, mu| {
                let terms = partitions(mu.size()).into_iter().map(|lambda| {
                    let shape = if b == "e" { lambda.conjugate() } else { lambda.clone() };
                    let k = kostka_number(&shape, mu.parts()).expect("sizes agree");
                    (lambda, Coeff::from_int(k as i64))
                });
                Ok(SymElement::from_terms("s", terms))
            }),
        )?;
    }
    ring.declare_dual_pair("h", "m")?;
    ring.declare_dual_pair("s", "s")?;
    ring.set_power_sum_basis("p")?;
    ring.set_product_hub("h")?;
    ring.declare_operator(LinearOperator::new("omega", "p", "p", |_, lambda| {
        let sign = if (lambda.size() - lambda.len()) % 2 == 0 { 1 } else { -1 };
        Ok(SymElement::term("p", lambda.clone(), Coeff::from_int(sign)))
    }))?;
    Ok(())
}
