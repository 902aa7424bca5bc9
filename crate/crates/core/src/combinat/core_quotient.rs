//! k-cores and k-quotients on the James abacus.

use super::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    /// One partition per abacus runner, runner `0` first.
    pub quotient: Vec<Partition>,
}

/// Beta-set of `p` with `beads` beads (`beads >= p.len()`).
fn beta_set(p: &Partition, beads: usize) -> Vec<usize> {
    (0..beads)
        .map(|i| p.part(i) as usize + beads - 1 - i)
        .collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let n = beta.len();
    Partition::from_composition(
        &beta
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (n - 1 - i)) as u32)
            .collect::<Vec<_>>(),
    )
}

/// Read the partition from bead positions on one runner.
fn runner_partition(mut positions: Vec<usize>) -> Partition {
    positions.sort_unstable_by(|a, b| b.cmp(a));
    let n = positions.len();
    Partition::from_composition(
        &positions
            .iter()
            .enumerate()
            .map(|(i, &p)| (p - (n - 1 - i)) as u32)
            .collect::<Vec<_>>(),
    )
}

fn round_up(n: usize, k: usize) -> usize {
    n.div_ceil(k) * k
}

/// The `k`-core and `k`-quotient of `p`.
pub fn core_quotient(p: &Partition, k: usize) -> CoreQuotient {
    assert!(k >= 1, "k must be positive");
    // a multiple of k keeps the runner labels independent of the bead count
    let beads = round_up(p.len().max(1), k);
    let beta = beta_set(p, beads);
    let mut runners: Vec<Vec<usize>> = vec![Vec::new(); k];
    for b in beta {
        runners[b % k].push(b / k);
    }
    let quotient = runners.iter().cloned().map(runner_partition).collect();
    let core_beta = runners
        .iter()
        .enumerate()
        .flat_map(|(j, r)| (0..r.len()).map(move |pos| pos * k + j))
        .collect();
    CoreQuotient {
        core: from_beta_set(core_beta),
        quotient,
    }
}

/// Inverse of [`core_quotient`].
pub fn from_core_quotient(core: &Partition, quotient: &[Partition], k: usize) -> Partition {
    assert_eq!(quotient.len(), k, "quotient must have k components");
    let total: usize = quotient.iter().map(Partition::size).sum();
    let beads = round_up(core.len() + k * total + 1, k);
    let core_beta = beta_set(core, beads);
    let mut counts = vec![0usize; k];
    for b in core_beta {
        counts[b % k] += 1;
    }
    let mut beta = Vec::with_capacity(beads);
    for (j, q) in quotient.iter().enumerate() {
        let n = counts[j];
        for i in 0..n {
            let pos = q.part(i) as usize + n - 1 - i;
            beta.push(pos * k + j);
        }
    }
    from_beta_set(beta)
}
