//! Symmetric functions in the Schur basis: Pieri rules, Littlewood-Richardson
//! coefficients, and the transition from complete to elementary functions.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign};
use std::sync::{OnceLock, RwLock};

use crate::abacus::{two_core, two_quotient};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// A finite integer combination of Schur functions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurPoly {
    terms: BTreeMap<Partition, i64>,
}

impl SchurPoly {
    pub fn zero() -> Self {
        SchurPoly::default()
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, 1);
        SchurPoly { terms }
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(lambda).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = SchurPoly::zero();
        for (k, v) in self.terms() {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Hall inner product; the Schur functions are orthonormal.
    pub fn inner(&self, other: &SchurPoly) -> i64 {
        self.terms().map(|(k, v)| v * other.coeff(k)).sum()
    }

    /// Product with `h_r` (horizontal strips).
    pub fn mul_h(&self, r: usize) -> Self {
        self.mul_strip(r, Strip::Horizontal)
    }

    /// Product with `e_r` (vertical strips).
    pub fn mul_e(&self, r: usize) -> Self {
        self.mul_strip(r, Strip::Vertical)
    }

    fn mul_strip(&self, r: usize, strip: Strip) -> Self {
        let mut out = SchurPoly::zero();
        for (lambda, c) in self.terms() {
            for nu in strip_extensions(lambda, r, strip) {
                out.add_term(nu, c);
            }
        }
        out
    }
}

impl Add for &SchurPoly {
    type Output = SchurPoly;

    fn add(self, rhs: &SchurPoly) -> SchurPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&SchurPoly> for SchurPoly {
    fn add_assign(&mut self, rhs: &SchurPoly) {
        for (k, v) in rhs.terms() {
            self.add_term(k.clone(), v);
        }
    }
}

#[derive(Clone, Copy)]
enum Strip {
    Horizontal,
    Vertical,
}

/// Partitions `ν ⊇ λ` with `ν/λ` a strip of `r` boxes.
fn strip_extensions(lambda: &Partition, r: usize, strip: Strip) -> Vec<Partition> {
    let rows = match strip {
        Strip::Horizontal => lambda.len() + 1,
        Strip::Vertical => lambda.len() + r,
    };
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    extend_rows(lambda, r, strip, rows, &mut current, &mut out);
    out
}

fn extend_rows(
    lambda: &Partition,
    left: usize,
    strip: Strip,
    rows: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let r = current.len() + 1;
    if r > rows {
        if left == 0 {
            out.push(Partition::from_sorted_unchecked(current.clone()));
        }
        return;
    }
    let base = lambda.row(r);
    let cap_above = if r == 1 { usize::MAX } else { current[r - 2] };
    let max_extra = match strip {
        // A horizontal strip never passes the old row above.
        Strip::Horizontal => {
            let ceiling = if r == 1 {
                usize::MAX
            } else {
                lambda.row(r - 1)
            };
            left.min(ceiling.saturating_sub(base))
        }
        Strip::Vertical => left.min(1),
    };
    for extra in 0..=max_extra {
        let len = base + extra;
        if len > cap_above {
            break;
        }
        current.push(len);
        extend_rows(lambda, left - extra, strip, rows, current, out);
        current.pop();
    }
}

/// `h_μ = h_{μ1} h_{μ2} ...` in the Schur basis.
pub fn h_to_schur(mu: &Partition) -> SchurPoly {
    mu.parts()
        .iter()
        .fold(SchurPoly::one(), |acc, &r| acc.mul_h(r))
}

/// `e_μ = e_{μ1} e_{μ2} ...` in the Schur basis.
pub fn e_to_schur(mu: &Partition) -> SchurPoly {
    mu.parts()
        .iter()
        .fold(SchurPoly::one(), |acc, &r| acc.mul_e(r))
}

/// Littlewood-Richardson coefficient `c^α_{β,γ}`, the number of skew
/// tableaux of shape `α/β` and content `γ` whose reverse reading word is a
/// lattice word.
pub fn lr_coeff(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if alpha.size() != beta.size() + gamma.size() || !alpha.contains_partition(beta) {
        return 0;
    }
    // Reading order: rows top to bottom, each row right to left.
    let cells: Vec<(usize, usize)> = (1..=alpha.len())
        .flat_map(|r| (beta.row(r) + 1..=alpha.row(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut used = vec![0usize; gamma.len()];
    count_lr(&cells, 0, beta, gamma, &mut filling, &mut used)
}

fn count_lr(
    cells: &[(usize, usize)],
    k: usize,
    beta: &Partition,
    gamma: &Partition,
    filling: &mut BTreeMap<(usize, usize), usize>,
    used: &mut Vec<usize>,
) -> u64 {
    let Some(&(r, c)) = cells.get(k) else {
        return 1;
    };
    // Rows weakly increase to the right: bounded by the cell to the right.
    let upper = filling.get(&(r, c + 1)).copied().unwrap_or(usize::MAX);
    // Columns strictly increase downwards.
    let lower = if r > 1 && c > beta.row(r - 1) {
        filling[&(r - 1, c)] + 1
    } else {
        0
    };
    let mut total = 0;
    for v in lower..gamma.len().min(upper.saturating_add(1)) {
        if used[v] >= gamma.row(v + 1) || (v > 0 && used[v] + 1 > used[v - 1]) {
            continue;
        }
        used[v] += 1;
        filling.insert((r, c), v);
        total += count_lr(cells, k + 1, beta, gamma, filling, used);
        filling.remove(&(r, c));
        used[v] -= 1;
    }
    total
}

/// `s_β s_γ` via LR coefficients.
pub fn lr_product(beta: &Partition, gamma: &Partition) -> Result<SchurPoly> {
    let mut out = SchurPoly::zero();
    for alpha in partitions_of(beta.size() + gamma.size())? {
        let c = lr_coeff(&alpha, beta, gamma);
        out.add_term(alpha, c as i64);
    }
    Ok(out)
}

/// `s_β s_γ` by expanding `s_γ` with the Jacobi-Trudi determinant and
/// multiplying by complete functions with the Pieri rule.
pub fn pieri_product(beta: &Partition, gamma: &Partition) -> SchurPoly {
    let l = gamma.len();
    let mut out = SchurPoly::zero();
    let mut perm: Vec<usize> = (0..l).collect();
    for_each_permutation(&mut perm, 0, 1, &mut |perm, sign| {
        let mut term = SchurPoly::schur(beta.clone());
        for (i, &j) in perm.iter().enumerate() {
            let degree = gamma.row(i + 1) as i64 - i as i64 + j as i64;
            if degree < 0 {
                return;
            }
            term = term.mul_h(degree as usize);
        }
        out += &term.scaled(sign);
    });
    out
}

fn for_each_permutation(
    perm: &mut Vec<usize>,
    k: usize,
    sign: i64,
    f: &mut impl FnMut(&[usize], i64),
) {
    if k == perm.len() {
        f(perm, sign);
        return;
    }
    for j in k..perm.len() {
        perm.swap(k, j);
        let s = if j == k { sign } else { -sign };
        for_each_permutation(perm, k + 1, s, f);
        perm.swap(k, j);
    }
}

/// `c^α_{μ(0),μ(1)}` for `μ` with empty 2-core and quotient `(μ(0), μ(1))`,
/// and 0 when the core is not empty.
pub fn kappa(alpha: &Partition, mu: &Partition) -> Result<u64> {
    if mu.size() != 2 * alpha.size() {
        return Err(Error::SizeMismatch(format!(
            "|{mu}| must be twice |{alpha}|"
        )));
    }
    if !two_core(mu).is_empty() {
        return Ok(0);
    }
    let (q0, q1) = two_quotient(mu);
    Ok(lr_coeff(alpha, &q0, &q1))
}

/// Coefficients of `h_λ` in the elementary basis: `h_λ = Σ_μ ♠(λ,μ) e_μ`.
pub fn spade(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    h_in_e(lambda).get(mu).copied().unwrap_or(0)
}

type EExpansion = BTreeMap<Partition, i64>;

/// Shared cache of `h_k` in the elementary basis, grown on demand.
fn h_cache() -> &'static RwLock<Vec<EExpansion>> {
    static CACHE: OnceLock<RwLock<Vec<EExpansion>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut h0 = EExpansion::new();
        h0.insert(Partition::empty(), 1);
        RwLock::new(vec![h0])
    })
}

/// `h_k = Σ_{i=1..k} (-1)^(i-1) e_i h_{k-i}`.
fn single_h(k: usize) -> EExpansion {
    if let Some(found) = h_cache().read().expect("cache lock").get(k) {
        return found.clone();
    }
    let mut cache = h_cache().write().expect("cache lock");
    while cache.len() <= k {
        let m = cache.len();
        let mut next = EExpansion::new();
        for i in 1..=m {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            for (nu, c) in &cache[m - i] {
                let key = nu.union(&Partition::from_sorted_unchecked(vec![i]));
                *next.entry(key).or_insert(0) += sign * c;
            }
        }
        next.retain(|_, v| *v != 0);
        cache.push(next);
    }
    cache[k].clone()
}

/// `h_λ` in the elementary basis; products of `e`s multiply by union.
pub fn h_in_e(lambda: &Partition) -> EExpansion {
    let mut acc = EExpansion::new();
    acc.insert(Partition::empty(), 1);
    for &part in lambda.parts() {
        let factor = single_h(part);
        let mut next = EExpansion::new();
        for (a, ca) in &acc {
            for (b, cb) in &factor {
                *next.entry(a.union(b)).or_insert(0) += ca * cb;
            }
        }
        next.retain(|_, v| *v != 0);
        acc = next;
    }
    acc
}
