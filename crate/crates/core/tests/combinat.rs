mod common;

use std::collections::BTreeMap;

use common::part;
use symfun::{
    core_quotient, from_core_quotient, kostka_number, kostka_poly, partitions, ribbon_tableaux, ssyt_list, Partition,
};

/// Distinct rearrangements of `v`.
fn rearrangements(v: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation until wrap-around
    while let Some(i) = (0..sorted.len().saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) {
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

#[test]
fn kostka_at_one_counts_tableaux() {
    for n in 0..=6 {
        for lambda in partitions(n) {
            for mu in partitions(n) {
                let k = kostka_poly(&lambda, &mu).unwrap();
                let at_one: i64 = k.t_int_coeffs().unwrap().iter().map(|c| i64::try_from(c.clone()).unwrap()).sum();
                assert_eq!(at_one as usize, ssyt_list(&lambda, mu.parts()).unwrap().len());
            }
        }
    }
}

#[test]
fn tableau_counts_symmetric_in_content() {
    for n in 1..=5 {
        for lambda in partitions(n) {
            for mu in partitions(n) {
                let k = kostka_number(&lambda, mu.parts()).unwrap();
                for alpha in rearrangements(mu.parts()) {
                    assert_eq!(ssyt_list(&lambda, &alpha).unwrap().len() as u64, k, "{lambda} {alpha:?}");
                }
            }
        }
    }
}

#[test]
fn spec_examples() {
    assert_eq!(ssyt_list(&part(&[2, 1]), &[1, 1, 1]).unwrap().len(), 2);
    assert!(ssyt_list(&part(&[1, 1]), &[2, 0]).unwrap().is_empty());
    assert_eq!(ssyt_list(&part(&[2, 2]), &[1, 1, 1, 1]).unwrap().len(), 2);
    assert!(ssyt_list(&part(&[2, 1]), &[1, 1]).is_err());
    assert_eq!(kostka_poly(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap().to_string(), "t^2 + t");
    assert_eq!(kostka_poly(&part(&[3]), &part(&[2, 1])).unwrap().to_string(), "t");
    assert!(kostka_poly(&part(&[3]), &part(&[2])).is_err());
    let lambda = part(&[4, 3, 2]);
    assert!(core_quotient(&lambda, 3).core.is_empty());
    assert_eq!(ribbon_tableaux(&lambda, &[1, 1, 1], 3).unwrap().len(), 3);
    assert!(ribbon_tableaux(&lambda, &[1, 1], 3).is_err());
}

#[test]
fn single_cell_ribbons_are_tableaux() {
    for n in 0..=6 {
        for lambda in partitions(n) {
            for mu in partitions(n) {
                let ribbons = ribbon_tableaux(&lambda, mu.parts(), 1).unwrap();
                let tableaux = ssyt_list(&lambda, mu.parts()).unwrap();
                assert_eq!(ribbons.len(), tableaux.len());
                assert!(ribbons.iter().all(|r| r.spin == 0 && r.shape == lambda && r.weight() == mu.parts()));
            }
        }
    }
}

/// Compositions of `total` into `k` nonnegative parts.
fn splits(total: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            splits(total - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Number of k-tuples of tableaux on the quotient shapes with total content
/// `weight`.
fn quotient_count(quotient: &[Partition], weight: &[u32]) -> u64 {
    // distribute each letter's multiplicity across the k tableaux
    let per_letter: Vec<Vec<Vec<u32>>> = weight.iter().map(|&w| splits(w, quotient.len())).collect();
    let mut total = 0;
    let mut choice = vec![0usize; weight.len()];
    loop {
        let mut ok = true;
        let mut prod = 1;
        for (i, shape) in quotient.iter().enumerate() {
            let content: Vec<u32> = (0..weight.len()).map(|j| per_letter[j][choice[j]][i]).collect();
            if content.iter().sum::<u32>() as usize != shape.size() {
                ok = false;
                break;
            }
            prod *= kostka_number(shape, &content).unwrap();
        }
        if ok {
            total += prod;
        }
        let mut j = 0;
        loop {
            if j == choice.len() {
                return total;
            }
            choice[j] += 1;
            if choice[j] < per_letter[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

#[test]
fn ribbon_counts_match_quotient_tableaux() {
    for k in [2usize, 3] {
        for n in 0..=9 {
            for lambda in partitions(n) {
                let cq = core_quotient(&lambda, k);
                if !cq.core.is_empty() {
                    continue;
                }
                for mu in partitions(n / k) {
                    let got = ribbon_tableaux(&lambda, mu.parts(), k).unwrap().len() as u64;
                    assert_eq!(got, quotient_count(&cq.quotient, mu.parts()), "{lambda} {mu} k={k}");
                }
            }
        }
    }
}

#[test]
fn ribbon_spins_symmetric_in_weight() {
    for k in [2usize, 3] {
        for n in (0..=9).filter(|n| n % k == 0) {
            for lambda in partitions(n) {
                if !core_quotient(&lambda, k).core.is_empty() {
                    continue;
                }
                for mu in partitions(n / k) {
                    let spins = |w: &[u32]| {
                        let mut v: Vec<usize> = ribbon_tableaux(&lambda, w, k).unwrap().iter().map(|r| r.spin).collect();
                        v.sort_unstable();
                        v
                    };
                    let base = spins(mu.parts());
                    for alpha in rearrangements(mu.parts()) {
                        assert_eq!(spins(&alpha), base, "{lambda} {alpha:?} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn core_quotient_round_trip() {
    for k in 1..=4 {
        let mut seen = BTreeMap::new();
        for n in 0..=10 {
            for lambda in partitions(n) {
                let cq = core_quotient(&lambda, k);
                let weight: usize = cq.quotient.iter().map(Partition::size).sum();
                assert_eq!(lambda.size(), cq.core.size() + k * weight);
                assert_eq!(from_core_quotient(&cq.core, &cq.quotient, k), lambda);
                assert!(seen.insert((cq.core.clone(), cq.quotient.clone()), lambda).is_none());
            }
        }
    }
}
