//! Degrees of spin characters and the families of pairs used to show that
//! a reduction cannot be irreducible.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// The bar-length formula
/// `2^floor((n-m)/2) * n! / prod(λ_i!) * prod_{i<j} (λ_i - λ_j)/(λ_i + λ_j)`.
pub fn spin_degree(lambda: &Partition) -> Result<BigUint> {
    lambda.require_two_regular()?;
    let n = lambda.size();
    let m = lambda.len();
    let mut value = BigRational::from_integer(factorial(n).into());
    for &part in lambda.parts() {
        value /= BigRational::from_integer(factorial(part).into());
    }
    let parts = lambda.parts();
    for i in 0..m {
        for j in i + 1..m {
            value *= BigRational::new(
                BigInt::from(parts[i] - parts[j]),
                BigInt::from(parts[i] + parts[j]),
            );
        }
    }
    value *= BigRational::from_integer(BigInt::one() << ((n - m) / 2));
    if !value.is_integer() {
        return Err(Error::NonIntegral(format!("degree of {lambda} is {value}")));
    }
    value
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::NonIntegral(format!("negative degree for {lambda}")))
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Families of pairs `(λ, μ)` with equal `dblreg` and `deg λ > deg μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `λ = (4m, 4m-3, ..., 5)` against `μ = (4m+1, 4m-3, ..., 9, 4)`; `m ≥ 2`.
    Dimen1,
    /// Odd parts `≡ 1 mod 4` plus an even part `4a`.
    First,
    /// Odd parts `≡ 1 mod 4` plus an even part `4a+2`.
    Second,
    /// Odd parts `≡ 3 mod 4` plus an even part `4a`.
    Third,
    /// Odd parts `≡ 3 mod 4` plus an even part `4a+2`.
    Fourth,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimen1" => Ok(FamilyKind::Dimen1),
            "first" => Ok(FamilyKind::First),
            "second" => Ok(FamilyKind::Second),
            "third" => Ok(FamilyKind::Third),
            "fourth" => Ok(FamilyKind::Fourth),
            other => Err(Error::ParameterOutOfRange(format!(
                "unknown family {other:?}"
            ))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyKind::Dimen1 => "dimen1",
            FamilyKind::First => "first",
            FamilyKind::Second => "second",
            FamilyKind::Third => "third",
            FamilyKind::Fourth => "fourth",
        };
        f.write_str(name)
    }
}

/// `{4j + offset : j in range}`.
fn arithmetic(offset: usize, range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    range.map(|j| 4 * j + offset).collect()
}

/// Builds the pair `(λ, μ)` for a family. `a` is ignored by `Dimen1`.
pub fn family(kind: FamilyKind, a: usize, m: usize) -> Result<(Partition, Partition)> {
    let out_of_range = || {
        Error::ParameterOutOfRange(format!(
            "{kind} needs {}",
            match kind {
                FamilyKind::Dimen1 => "m >= 2",
                _ => "a >= 1",
            }
        ))
    };
    let (lambda, mu) = match kind {
        FamilyKind::Dimen1 => {
            if m < 2 {
                return Err(out_of_range());
            }
            let mut lambda = vec![4 * m];
            lambda.extend(arithmetic(1, 1..=m - 1));
            let mut mu = vec![4 * m + 1];
            mu.extend(arithmetic(1, 2..=m - 1));
            mu.push(4);
            (lambda, mu)
        }
        _ if a == 0 => return Err(out_of_range()),
        FamilyKind::First => {
            let mut lambda = arithmetic(1, 0..=a + m - 1);
            lambda.push(4 * a);
            let mut mu = arithmetic(1, m + 1..=a + m);
            if m > 0 {
                mu.extend(arithmetic(1, 0..=m - 1));
            }
            (lambda, mu)
        }
        FamilyKind::Second => {
            let mut lambda = arithmetic(1, 0..=a + m);
            lambda.push(4 * a + 2);
            let mut mu = arithmetic(1, m + 2..=a + m + 1);
            mu.extend(arithmetic(1, 1..=m));
            mu.extend([2, 1]);
            (lambda, mu)
        }
        FamilyKind::Third | FamilyKind::Fourth => {
            let mut lambda = arithmetic(3, 0..=a + m - 1);
            let mut mu = arithmetic(3, m + 1..=a + m);
            if m > 0 {
                mu.extend(arithmetic(3, 0..=m - 1));
            }
            if kind == FamilyKind::Third {
                lambda.push(4 * a);
            } else {
                lambda.push(4 * a + 2);
                mu.push(2);
            }
            (lambda, mu)
        }
    };
    Ok((
        Partition::from_unsorted(lambda),
        Partition::from_unsorted(mu),
    ))
}

/// Prefixes a new first row `l` to both partitions.
pub fn row_extend(lambda: &Partition, mu: &Partition, l: usize) -> Result<(Partition, Partition)> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("{lambda} and {mu}")));
    }
    if l <= lambda.first() || l <= mu.first() {
        return Err(Error::ParameterOutOfRange(format!(
            "new row {l} must exceed {} and {}",
            lambda.first(),
            mu.first()
        )));
    }
    let prefix = |p: &Partition| {
        let mut parts = vec![l];
        parts.extend_from_slice(p.parts());
        Partition::from_sorted_unchecked(parts)
    };
    Ok((prefix(lambda), prefix(mu)))
}

/// `prod (l + p)/(l - p)` over the parts `p`; requires `l` larger than every part.
pub fn row_ratio(lambda: &Partition, l: usize) -> BigRational {
    lambda.parts().iter().fold(BigRational::one(), |acc, &p| {
        acc * BigRational::new(BigInt::from(l + p), BigInt::from(l - p))
    })
}

/// Degree as an `f64`, for display only.
pub fn approx(d: &BigUint) -> f64 {
    d.to_f64().unwrap_or(f64::INFINITY)
}
