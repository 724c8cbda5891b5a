//! The 2-abacus: beads at `λ_r - r`, runners by parity, and the 2-core,
//! 2-quotient, 2-weight, 2-sign and 2-content derived from it.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::partitions::{Partition, Residue};

/// Bead positions `λ_r - r` for `r = 1..=depth`; every position below
/// `-depth` is implicitly occupied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbacusDisplay {
    beads: BTreeSet<i64>,
    depth: usize,
}

impl AbacusDisplay {
    /// Display with `max(len, 1)` beads.
    pub fn new(lambda: &Partition) -> Self {
        Self::with_depth(lambda, lambda.len().max(1)).expect("depth covers every part")
    }

    pub fn with_depth(lambda: &Partition, depth: usize) -> Result<Self> {
        if depth < lambda.len() {
            return Err(Error::ParameterOutOfRange(format!(
                "depth {depth} is below the length of {lambda}"
            )));
        }
        let beads = (1..=depth)
            .map(|r| lambda.row(r) as i64 - r as i64)
            .collect();
        Ok(AbacusDisplay { beads, depth })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn beads(&self) -> impl Iterator<Item = i64> + '_ {
        self.beads.iter().copied()
    }

    pub fn is_occupied(&self, pos: i64) -> bool {
        pos < -(self.depth as i64) || self.beads.contains(&pos)
    }

    /// Explicit beads on a runner, highest first.
    fn runner(&self, runner: Residue) -> Vec<i64> {
        self.beads
            .iter()
            .rev()
            .copied()
            .filter(|&b| Residue::from_parity(b) == runner)
            .collect()
    }

    /// Lowest position on `runner` that is not implicitly beaded.
    fn runner_floor(&self, runner: Residue) -> i64 {
        let low = -(self.depth as i64);
        if Residue::from_parity(low) == runner {
            low
        } else {
            low + 1
        }
    }

    fn to_partition(beads: impl Iterator<Item = i64>) -> Partition {
        let mut sorted: Vec<i64> = beads.collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let parts = sorted
            .iter()
            .enumerate()
            .map(|(k, &b)| {
                let part = b + k as i64 + 1;
                debug_assert!(part >= 0);
                part as usize
            })
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    pub fn partition(&self) -> Partition {
        Self::to_partition(self.beads())
    }
}

impl fmt::Display for AbacusDisplay {
    /// Two columns (runner 0, runner 1), highest row first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.beads.iter().next_back().copied().unwrap_or(0).max(1);
        let low = -(self.depth as i64);
        let mut row = top - top.rem_euclid(2);
        while row >= low - 1 {
            let cell = |p: i64| if self.is_occupied(p) { 'o' } else { '.' };
            writeln!(f, "{} {}", cell(row), cell(row + 1))?;
            row -= 2;
        }
        Ok(())
    }
}

/// The 2-core of `lambda`, always a staircase.
pub fn two_core(lambda: &Partition) -> Partition {
    let abacus = AbacusDisplay::new(lambda);
    let mut packed = Vec::new();
    for runner in Residue::ALL {
        let floor = abacus.runner_floor(runner);
        let count = abacus.runner(runner).len() as i64;
        packed.extend((0..count).map(|k| floor + 2 * k));
    }
    AbacusDisplay::to_partition(packed.into_iter())
}

/// `(|λ| - |core|) / 2`.
pub fn two_weight(lambda: &Partition) -> usize {
    (lambda.size() - two_core(lambda).size()) / 2
}

/// The pair of quotient partitions, indexed by runner.
///
/// Part `k` on a runner counts the empty positions of that runner strictly
/// below its `k`-th highest bead.
pub fn two_quotient(lambda: &Partition) -> (Partition, Partition) {
    let abacus = AbacusDisplay::new(lambda);
    let quotient_on = |runner: Residue| {
        let floor = abacus.runner_floor(runner);
        let beads = abacus.runner(runner);
        let total = beads.len();
        let parts = beads
            .iter()
            .enumerate()
            .map(|(k, &b)| {
                let slots = ((b - floor) / 2) as usize;
                let beads_below = total - 1 - k;
                slots - beads_below
            })
            .collect();
        Partition::from_sorted_unchecked(parts)
    };
    (quotient_on(Residue::Zero), quotient_on(Residue::One))
}

/// Inverse of the core/quotient decomposition.
pub fn from_core_and_quotient(
    core: &Partition,
    q0: &Partition,
    q1: &Partition,
) -> Result<Partition> {
    if two_core(core) != *core {
        return Err(Error::NotAStaircase(core.to_string()));
    }
    let depth = core.len() + 2 * (q0.len() + q1.len()) + 2;
    let abacus = AbacusDisplay::with_depth(core, depth)?;
    let mut beads = Vec::new();
    for (runner, q) in [(Residue::Zero, q0), (Residue::One, q1)] {
        let on_runner = abacus.runner(runner);
        debug_assert!(on_runner.len() >= q.len());
        for (k, &b) in on_runner.iter().enumerate() {
            beads.push(b + 2 * q.row(k + 1) as i64);
        }
    }
    Ok(AbacusDisplay::to_partition(beads.into_iter()))
}

/// `(-1)^(vertical 2-hooks)` over any sequence of rim 2-hook removals
/// down to the core.
pub fn two_sign(lambda: &Partition) -> i8 {
    let mut abacus = AbacusDisplay::new(lambda);
    let mut sign = 1;
    // Always slide the lowest movable bead; any order gives the same sign.
    while let Some(p) = abacus
        .beads
        .iter()
        .copied()
        .find(|&p| !abacus.is_occupied(p - 2))
    {
        sign *= slide(&mut abacus, p);
    }
    sign
}

/// [`two_sign`] with the removal order chosen at random.
pub fn two_sign_random_order<R: Rng>(lambda: &Partition, rng: &mut R) -> i8 {
    let mut abacus = AbacusDisplay::new(lambda);
    let mut sign = 1;
    loop {
        let movable: Vec<i64> = abacus
            .beads
            .iter()
            .copied()
            .filter(|&p| !abacus.is_occupied(p - 2))
            .collect();
        match movable.choose(rng) {
            Some(&p) => sign *= slide(&mut abacus, p),
            None => return sign,
        }
    }
}

fn slide(abacus: &mut AbacusDisplay, p: i64) -> i8 {
    let vertical = abacus.is_occupied(p - 1);
    abacus.beads.remove(&p);
    abacus.beads.insert(p - 2);
    if vertical {
        -1
    } else {
        1
    }
}

/// Multiset of ordinary residues of the nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TwoContent {
    pub zeros: usize,
    pub ones: usize,
}

impl TwoContent {
    pub fn count(&self, i: Residue) -> usize {
        match i {
            Residue::Zero => self.zeros,
            Residue::One => self.ones,
        }
    }
}

impl fmt::Display for TwoContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{0^{},1^{}}}", self.zeros, self.ones)
    }
}

pub fn two_content(lambda: &Partition) -> TwoContent {
    let zeros = lambda
        .nodes()
        .filter(|n| n.residue() == Residue::Zero)
        .count();
    TwoContent {
        zeros,
        ones: lambda.size() - zeros,
    }
}
