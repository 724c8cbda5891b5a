//! Regularization, doubling, 4-bar cores and spin block identifiers.

use std::collections::BTreeMap;
use std::fmt;

use crate::abacus::{two_core, two_weight};
use crate::error::{Error, Result};
use crate::partitions::{Node, Partition};

/// Number of nodes on each ladder, indexed from 0.
pub fn ladder_counts(lambda: &Partition) -> Vec<usize> {
    counts_by(lambda, Node::ladder)
}

/// Number of nodes on each slope of a 2-regular partition.
pub fn slope_counts(lambda: &Partition) -> Result<Vec<usize>> {
    lambda.require_two_regular()?;
    Ok(counts_by(lambda, Node::slope))
}

fn counts_by(lambda: &Partition, index: impl Fn(Node) -> usize) -> Vec<usize> {
    let mut counts = Vec::new();
    for node in lambda.nodes() {
        let k = index(node);
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    counts
}

/// Slides every node as far up its ladder as it goes.
pub fn regularize(lambda: &Partition) -> Partition {
    let counts = ladder_counts(lambda);
    let height = counts.iter().copied().max().unwrap_or(0);
    // Row r holds ladder l at column l + 2 - r whenever that ladder has at
    // least r nodes; those columns always form an initial segment.
    let parts: Vec<usize> = (1..=height)
        .map(|r| counts.iter().filter(|&&c| c >= r).count())
        .collect();
    let result = Partition::from_sorted_unchecked(parts);
    debug_assert_eq!(ladder_counts(&result), counts);
    result
}

/// Each part `p` becomes the two parts `ceil(p/2)` and `floor(p/2)`.
pub fn double(lambda: &Partition) -> Partition {
    let parts = lambda
        .parts()
        .iter()
        .flat_map(|&p| [p.div_ceil(2), p / 2])
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// `regularize(double(lambda))`.
pub fn dblreg(lambda: &Partition) -> Partition {
    regularize(&double(lambda))
}

/// The diagonal entry of the spin decomposition matrix at `dblreg(lambda)`:
/// `2^floor(ev/2)` with `ev` the number of even parts.
pub fn spin_regularization_entry(lambda: &Partition) -> Result<(Partition, u64)> {
    lambda.require_two_regular()?;
    Ok((dblreg(lambda), 1 << (lambda.even_parts() / 2)))
}

/// A 2-regular partition with no further 4-bar removable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarCore(Partition);

impl BarCore {
    pub fn partition(&self) -> &Partition {
        &self.0
    }
}

impl fmt::Display for BarCore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Strips 4-bars until none remain: even parts go, pairs summing to a
/// multiple of 4 go, and odd parts at least 5 drop by 4 when that value is
/// free.
pub fn four_bar_core(lambda: &Partition) -> Result<BarCore> {
    lambda.require_two_regular()?;
    let mut parts: Vec<usize> = lambda
        .parts()
        .iter()
        .copied()
        .filter(|p| p % 2 == 1)
        .collect();
    loop {
        let pair = (0..parts.len()).find_map(|a| {
            (a + 1..parts.len())
                .find(|&b| (parts[a] + parts[b]).is_multiple_of(4))
                .map(|b| (a, b))
        });
        if let Some((a, b)) = pair {
            parts.remove(b);
            parts.remove(a);
            continue;
        }
        let shrink = (0..parts.len()).find(|&k| parts[k] >= 5 && !parts.contains(&(parts[k] - 4)));
        match shrink {
            Some(k) => parts[k] -= 4,
            None => break,
        }
    }
    Ok(BarCore(Partition::from_unsorted(parts)))
}

/// `(|λ| - |core|) / 2`, matching the 2-weight of `double(λ)`.
pub fn four_bar_weight(lambda: &Partition) -> Result<usize> {
    let core = four_bar_core(lambda)?;
    Ok((lambda.size() - core.partition().size()) / 2)
}

/// A 2-block: a staircase core and a weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockId {
    pub core: Partition,
    pub weight: usize,
}

impl BlockId {
    pub fn new(core: Partition, weight: usize) -> Result<Self> {
        if two_core(&core) != core {
            return Err(Error::NotAStaircase(core.to_string()));
        }
        Ok(BlockId { core, weight })
    }

    /// Length `c` of the staircase `(c, ..., 1)`.
    pub fn core_len(&self) -> usize {
        self.core.len()
    }

    /// Weight at most `c + 1`.
    pub fn is_rouquier(&self) -> bool {
        self.weight <= self.core_len() + 1
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "core={} weight={}", self.core, self.weight)
    }
}

/// The 2-block containing the 2-modular reduction of the spin character.
pub fn spin_block(lambda: &Partition) -> Result<BlockId> {
    lambda.require_two_regular()?;
    let doubled = double(lambda);
    Ok(BlockId {
        core: two_core(&doubled),
        weight: two_weight(&doubled),
    })
}

/// Whether every odd-indexed ladder has an even number of nodes.
pub fn is_s_partition(lambda: &Partition) -> bool {
    ladder_counts(lambda)
        .iter()
        .enumerate()
        .all(|(l, &c)| l % 2 == 0 || c % 2 == 0)
}

/// The bar core predicted from the residues of the odd parts mod 4.
pub fn bar_core_from_residues(lambda: &Partition) -> Partition {
    let ones = lambda.parts().iter().filter(|&&p| p % 4 == 1).count();
    let threes = lambda.parts().iter().filter(|&&p| p % 4 == 3).count();
    let parts: Vec<usize> = if ones > threes {
        (0..ones - threes).rev().map(|k| 4 * k + 1).collect()
    } else {
        (0..threes - ones).rev().map(|k| 4 * k + 3).collect()
    };
    Partition::from_sorted_unchecked(parts)
}

/// Groups partitions by a key, keeping first-seen order inside groups.
pub(crate) fn group_by<K: Ord>(
    items: impl IntoIterator<Item = Partition>,
    key: impl Fn(&Partition) -> K,
) -> BTreeMap<K, Vec<Partition>> {
    let mut groups: BTreeMap<K, Vec<Partition>> = BTreeMap::new();
    for item in items {
        groups.entry(key(&item)).or_default().push(item);
    }
    groups
}
