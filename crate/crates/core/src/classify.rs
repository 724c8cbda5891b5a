//! Which spin characters stay irreducible modulo 2.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::abacus::{two_sign, two_sign_random_order};
use crate::degrees::spin_degree;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, strict_partitions_of, Partition, Residue};
use crate::regdouble::{dblreg, four_bar_core, group_by};

/// Largest `n` a verification suite accepts.
pub const VERIFY_BOUND: usize = 40;

fn two_adic_valuation(x: usize) -> u32 {
    x.trailing_zeros()
}

/// `2^v2(λ_r - λ_{r+1} + 1) > λ_{r+1} - λ_{r+2}` for every row `r`.
pub fn is_two_carter(lambda: &Partition) -> bool {
    (1..=lambda.len()).all(|r| {
        let gap = lambda.row(r) - lambda.row(r + 1) + 1;
        let next = lambda.row(r + 1) - lambda.row(r + 2);
        (1usize << two_adic_valuation(gap)) > next
    })
}

/// The ordinary character `[λ]` stays irreducible modulo 2.
pub fn linear_irreducible(lambda: &Partition) -> bool {
    is_two_carter(lambda) || is_two_carter(&lambda.conjugate()) || lambda.parts() == [2, 2]
}

/// `λ = τ + 4α ⊔ (2b)` for a separated partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SepForm {
    pub tau: Partition,
    pub alpha: Partition,
    pub b: usize,
}

impl SepForm {
    pub fn rebuild(&self) -> Partition {
        let body = self.tau.add(&self.alpha.scale(4, 1).expect("integral"));
        if self.b == 0 {
            body
        } else {
            body.union(&Partition::from_sorted_unchecked(vec![2 * self.b]))
        }
    }
}

impl fmt::Display for SepForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau={} alpha={} b={}", self.tau, self.alpha, self.b)
    }
}

/// Splits the odd parts as `τ + 4α` against the given bar core.
fn odd_body(odd: &[usize], tau: &Partition) -> Option<Partition> {
    if odd.len() != tau.len() {
        return None;
    }
    let alpha = odd
        .iter()
        .zip(tau.parts())
        .map(|(&o, &t)| (o >= t && (o - t) % 4 == 0).then(|| (o - t) / 4))
        .collect::<Option<Vec<_>>>()?;
    Partition::new(alpha).ok()
}

/// Recognises 1- and 3-separated partitions: at most one even part, every
/// odd part in one class mod 4, and an even part `2b` only above a full run
/// of that class.
pub fn separated(lambda: &Partition) -> Result<Option<SepForm>> {
    lambda.require_two_regular()?;
    let (even, odd): (Vec<usize>, Vec<usize>) = lambda.parts().iter().partition(|&&p| p % 2 == 0);
    if even.len() > 1 {
        return Ok(None);
    }
    let b = even.first().map_or(0, |e| e / 2);
    for class in [3usize, 1] {
        if odd.iter().any(|o| o % 4 != class) {
            continue;
        }
        let full_run = (class..2 * b).step_by(4).all(|k| odd.contains(&k));
        if !full_run {
            continue;
        }
        let tau = four_bar_core(lambda)?.partition().clone();
        let alpha = odd_body(&odd, &tau).expect("separated odd parts sit over the bar core");
        return Ok(Some(SepForm { tau, alpha, b }));
    }
    Ok(None)
}

/// The shapes of irreducible reductions, in order of precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// `(4l-1, ..., 3) + 4α`, `α` 2-Carter, `len α ≤ l`.
    X3,
    /// `(4l-3, ..., 1) + 4α`, `l ≥ 1`, `α` 2-Carter, `len α ≤ l`.
    X1,
    /// `(4l-1, ..., 3) + 4α ⊔ (2)`, `α` 2-Carter, `len α ≤ l`.
    Y3,
    /// `(4l-3, ..., 1) + 4α ⊔ (2)`, `α` 2-Carter, `len α ≤ l - 1`.
    Y1,
    /// `(2b)` or `(4b-2, 1)` with `b ≥ 2`.
    Z,
    /// `(3, 2, 1)`.
    Stair321,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::X3 => "X3",
            Case::X1 => "X1",
            Case::Y3 => "Y3",
            Case::Y1 => "Y1",
            Case::Z => "Z",
            Case::Stair321 => "(3,2,1)",
        })
    }
}

/// Outcome of [`spin_irreducible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub irreducible: bool,
    pub case: Option<Case>,
    pub witness: Option<SepForm>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.case, &self.witness) {
            (None, _) => f.write_str("reducible"),
            (Some(case), None) => write!(f, "irreducible (case: {case})"),
            (Some(case), Some(w)) => write!(f, "irreducible (case: {case}; {w})"),
        }
    }
}

/// Whether the 2-modular reduction of the spin character(s) labelled by
/// `lambda` is irreducible.
pub fn spin_irreducible(lambda: &Partition) -> Result<Verdict> {
    lambda.require_two_regular()?;
    let (even, odd): (Vec<usize>, Vec<usize>) = lambda.parts().iter().partition(|&&p| p % 2 == 0);
    let l = odd.len();
    let stair = |class: usize| -> Partition {
        Partition::from_sorted_unchecked((0..l).map(|k| 4 * (l - k) - (4 - class)).collect())
    };
    let found = |case, tau: Partition, alpha: Partition, b| Verdict {
        irreducible: true,
        case: Some(case),
        witness: Some(SepForm { tau, alpha, b }),
    };
    let body = |class: usize| {
        let tau = stair(class);
        odd_body(&odd, &tau)
            .filter(is_two_carter)
            .map(|alpha| (tau, alpha))
    };
    match even.as_slice() {
        [] => {
            if let Some((tau, alpha)) = body(3) {
                return Ok(found(Case::X3, tau, alpha, 0));
            }
            if l >= 1 {
                if let Some((tau, alpha)) = body(1) {
                    return Ok(found(Case::X1, tau, alpha, 0));
                }
            }
        }
        [2] => {
            if let Some((tau, alpha)) = body(3) {
                return Ok(found(Case::Y3, tau, alpha, 1));
            }
            if l >= 1 {
                if let Some((tau, alpha)) = body(1).filter(|(_, a)| a.len() < l) {
                    return Ok(found(Case::Y1, tau, alpha, 1));
                }
            }
        }
        _ => {}
    }
    let parts = lambda.parts();
    let z = match parts {
        [e] => e % 2 == 0 && *e >= 4,
        [e, 1] => e % 4 == 2 && *e >= 6,
        _ => false,
    };
    if z {
        return Ok(Verdict {
            irreducible: true,
            case: Some(Case::Z),
            witness: None,
        });
    }
    if parts == [3, 2, 1] {
        return Ok(Verdict {
            irreducible: true,
            case: Some(Case::Stair321),
            witness: None,
        });
    }
    Ok(Verdict {
        irreducible: false,
        case: None,
        witness: None,
    })
}

/// Exhaustive consistency checks over all 2-regular partitions up to a size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifySuite {
    /// Irreducible labels have the least degree among those with the same
    /// `dblreg`.
    MinimalDegree,
    /// The irreducible set is closed under both spin strips.
    StripClosure,
    /// On separated partitions, irreducibility means `b ≤ 1` and `α` 2-Carter.
    SeparatedConsistency,
    /// The 2-sign does not depend on the order of domino removals.
    SignOrder,
}

impl VerifySuite {
    pub const ALL: [VerifySuite; 4] = [
        VerifySuite::MinimalDegree,
        VerifySuite::StripClosure,
        VerifySuite::SeparatedConsistency,
        VerifySuite::SignOrder,
    ];
}

impl fmt::Display for VerifySuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifySuite::MinimalDegree => "minimal_degree",
            VerifySuite::StripClosure => "strip_closure",
            VerifySuite::SeparatedConsistency => "separated_consistency",
            VerifySuite::SignOrder => "sign_order",
        })
    }
}

impl FromStr for VerifySuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VerifySuite::ALL
            .into_iter()
            .find(|v| v.to_string() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown suite {s:?}")))
    }
}

/// Result of one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: VerifySuite,
    pub max_n: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} (n <= {}, {} checked",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.max_n,
            self.checked
        )?;
        if !self.passed() {
            write!(
                f,
                ", {} failures; first: {}",
                self.failures.len(),
                self.failures[0]
            )?;
        }
        write!(f, ")")
    }
}

/// Runs a suite for every `n ≤ max_n`; `seed` drives the randomized suite.
pub fn verify_suite(suite: VerifySuite, max_n: usize, seed: u64) -> Result<SuiteReport> {
    if max_n > VERIFY_BOUND {
        return Err(Error::BoundExceeded {
            what: "max_n",
            value: max_n,
            bound: VERIFY_BOUND,
        });
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(seed);
    for n in 1..=max_n {
        match suite {
            VerifySuite::MinimalDegree => {
                let groups = group_by(strict_partitions_of(n)?, dblreg);
                for members in groups.values() {
                    let degrees = members
                        .iter()
                        .map(spin_degree)
                        .collect::<Result<Vec<BigUint>>>()?;
                    let least = degrees.iter().min().expect("nonempty group");
                    for (l, d) in members.iter().zip(&degrees) {
                        if spin_irreducible(l)?.irreducible {
                            checked += 1;
                            if d != least {
                                failures.push(format!("{l}: degree {d} above {least}"));
                            }
                        }
                    }
                }
            }
            VerifySuite::StripClosure => {
                for l in strict_partitions_of(n)? {
                    if !spin_irreducible(&l)?.irreducible {
                        continue;
                    }
                    for i in Residue::ALL {
                        checked += 1;
                        let strip = l.spin_strip(i)?.result;
                        if !spin_irreducible(&strip)?.irreducible {
                            failures.push(format!("{l} strips to reducible {strip} at {i}"));
                        }
                    }
                }
            }
            VerifySuite::SeparatedConsistency => {
                for l in strict_partitions_of(n)? {
                    if let Some(form) = separated(&l)? {
                        checked += 1;
                        let predicted = form.b <= 1 && is_two_carter(&form.alpha);
                        let got = spin_irreducible(&l)?.irreducible;
                        if form.rebuild() != l || predicted != got {
                            failures.push(format!("{l}: {form}, classified {got}"));
                        }
                    }
                }
            }
            VerifySuite::SignOrder => {
                for l in partitions_of(n.min(24))? {
                    checked += 1;
                    let fixed = two_sign(&l);
                    let random = two_sign_random_order(&l, &mut rng);
                    if fixed != random {
                        failures.push(format!("{l}: sign {fixed} vs {random}"));
                    }
                }
            }
        }
    }
    Ok(SuiteReport {
        suite,
        max_n,
        checked,
        failures,
    })
}
