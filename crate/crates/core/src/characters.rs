//! Formal characters with exact rational coefficients, and the restriction
//! (`e_i`) and induction (`f_i`) functors acting on them.
//!
//! Ordinary labels branch along nodes of ordinary residue `i`; spin labels
//! branch along nodes of spin residue `i`, keeping only 2-regular results.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::abacus::two_core;
use crate::degrees::factorial;
use crate::error::{Error, Result};
use crate::partitions::{Boundary, Node, NodeFilter, Partition, Residue, SignClass};

/// Which of two associate spin characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A basis element of a character group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CharLabel {
    /// Ordinary irreducible `[λ]` of the symmetric group.
    Ord(Partition),
    /// Spin irreducible `<λ>` for `λ` with an even number of even parts.
    Spin(Partition),
    /// One of the associate pair `<λ>±` for `λ` with an odd number of even parts.
    SpinSigned(Partition, Sign),
    /// 2-modular irreducible `D^λ`, `λ` 2-regular.
    Brauer(Partition),
}

/// Coarse kind of a label, for mixing checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelKind {
    Ordinary,
    Spin,
    Brauer,
}

impl LabelKind {
    fn name(self) -> &'static str {
        match self {
            LabelKind::Ordinary => "ordinary",
            LabelKind::Spin => "spin",
            LabelKind::Brauer => "Brauer",
        }
    }
}

impl CharLabel {
    pub fn ordinary(lambda: Partition) -> Self {
        CharLabel::Ord(lambda)
    }

    /// The spin label of a plus-class partition.
    pub fn spin(lambda: Partition) -> Result<Self> {
        match lambda.sign_class()? {
            SignClass::Plus => Ok(CharLabel::Spin(lambda)),
            SignClass::Minus => Err(Error::ParameterOutOfRange(format!(
                "{lambda} labels an associate pair; give a sign"
            ))),
        }
    }

    /// One of the associate spin labels of a minus-class partition.
    pub fn spin_signed(lambda: Partition, sign: Sign) -> Result<Self> {
        match lambda.sign_class()? {
            SignClass::Minus => Ok(CharLabel::SpinSigned(lambda, sign)),
            SignClass::Plus => Err(Error::ParameterOutOfRange(format!(
                "{lambda} labels a single spin character; drop the sign"
            ))),
        }
    }

    /// Every spin label attached to a 2-regular partition: one or two.
    pub fn spin_labels(lambda: &Partition) -> Result<Vec<Self>> {
        Ok(match lambda.sign_class()? {
            SignClass::Plus => vec![CharLabel::Spin(lambda.clone())],
            SignClass::Minus => vec![
                CharLabel::SpinSigned(lambda.clone(), Sign::Plus),
                CharLabel::SpinSigned(lambda.clone(), Sign::Minus),
            ],
        })
    }

    pub fn brauer(lambda: Partition) -> Result<Self> {
        lambda.require_two_regular()?;
        Ok(CharLabel::Brauer(lambda))
    }

    pub fn partition(&self) -> &Partition {
        match self {
            CharLabel::Ord(l)
            | CharLabel::Spin(l)
            | CharLabel::SpinSigned(l, _)
            | CharLabel::Brauer(l) => l,
        }
    }

    pub fn level(&self) -> usize {
        self.partition().size()
    }

    pub fn kind(&self) -> LabelKind {
        match self {
            CharLabel::Ord(_) => LabelKind::Ordinary,
            CharLabel::Spin(_) | CharLabel::SpinSigned(..) => LabelKind::Spin,
            CharLabel::Brauer(_) => LabelKind::Brauer,
        }
    }

    pub fn is_spin(&self) -> bool {
        self.kind() == LabelKind::Spin
    }

    /// The associate label; fixed for everything but signed spin labels.
    pub fn associate(&self) -> Self {
        match self {
            CharLabel::SpinSigned(l, s) => CharLabel::SpinSigned(l.clone(), s.flip()),
            other => other.clone(),
        }
    }

    fn bare(lambda: &Partition) -> String {
        let s = lambda.to_string();
        s[1..s.len() - 1].to_string()
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::Ord(l) => write!(f, "[{}]", Self::bare(l)),
            CharLabel::Spin(l) => write!(f, "<{}>", Self::bare(l)),
            CharLabel::SpinSigned(l, s) => write!(f, "<{}>{s}", Self::bare(l)),
            CharLabel::Brauer(l) => write!(f, "phi({})", Self::bare(l)),
        }
    }
}

/// Parses `[5,4,1]`, `<9,1>`, `<5,4,1>+`, `<5,4,1>-` and `phi(5,4,1)`.
/// A minus-class spin label without a sign is read as the `+` member.
impl FromStr for CharLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Malformed(format!("not a character label: {s:?}"));
        if let Some(body) = s.strip_prefix("phi(").and_then(|b| b.strip_suffix(')')) {
            return CharLabel::brauer(body.parse()?);
        }
        if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            return Ok(CharLabel::Ord(body.parse()?));
        }
        let body = s.strip_prefix('<').ok_or_else(bad)?;
        let (inner, tail) = body.split_once('>').ok_or_else(bad)?;
        let lambda: Partition = inner.parse()?;
        match tail.trim() {
            "" => match lambda.sign_class()? {
                SignClass::Plus => CharLabel::spin(lambda),
                SignClass::Minus => CharLabel::spin_signed(lambda, Sign::Plus),
            },
            "+" => CharLabel::spin_signed(lambda, Sign::Plus),
            "-" => CharLabel::spin_signed(lambda, Sign::Minus),
            _ => Err(bad()),
        }
    }
}

/// A rational combination of labels of a single level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalChar {
    level: usize,
    terms: BTreeMap<CharLabel, BigRational>,
}

impl FormalChar {
    pub fn zero(level: usize) -> Self {
        FormalChar {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_label(label: CharLabel) -> Self {
        let mut chi = FormalChar::zero(label.level());
        chi.terms.insert(label, BigRational::one());
        chi
    }

    /// Builds a character from `(label, integer coefficient)` pairs.
    pub fn from_terms(
        level: usize,
        terms: impl IntoIterator<Item = (CharLabel, i64)>,
    ) -> Result<Self> {
        let mut chi = FormalChar::zero(level);
        for (label, c) in terms {
            chi.add_term(label, BigRational::from_integer(c.into()))?;
        }
        Ok(chi)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CharLabel, &BigRational)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &CharLabel> {
        self.terms.keys()
    }

    pub fn coeff(&self, label: &CharLabel) -> BigRational {
        self.terms
            .get(label)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn has_brauer(&self) -> Option<bool> {
        self.terms
            .keys()
            .next()
            .map(|l| l.kind() == LabelKind::Brauer)
    }

    pub fn add_term(&mut self, label: CharLabel, c: BigRational) -> Result<()> {
        if label.level() != self.level {
            return Err(Error::MixedLevels(self.level, label.level()));
        }
        if let Some(brauer) = self.has_brauer() {
            if brauer != (label.kind() == LabelKind::Brauer) {
                let (a, b) = if brauer {
                    (LabelKind::Brauer, label.kind())
                } else {
                    (LabelKind::Ordinary, LabelKind::Brauer)
                };
                return Err(Error::MixedKinds(a.name(), b.name()));
            }
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self
            .terms
            .entry(label.clone())
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&label);
        }
        Ok(())
    }

    pub fn add(&self, other: &FormalChar) -> Result<FormalChar> {
        let mut out = self.clone();
        if self.is_zero() {
            out.level = other.level;
        } else if !other.is_zero() && other.level != self.level {
            return Err(Error::MixedLevels(self.level, other.level));
        }
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FormalChar) -> Result<FormalChar> {
        self.add(&other.scaled(&-BigRational::one()))
    }

    pub fn scaled(&self, c: &BigRational) -> FormalChar {
        if c.is_zero() {
            return FormalChar::zero(self.level);
        }
        FormalChar {
            level: self.level,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// Inner product with a basis label, which are orthonormal.
    pub fn inner(&self, label: &CharLabel) -> Result<BigRational> {
        if let Some(brauer) = self.has_brauer() {
            if brauer != (label.kind() == LabelKind::Brauer) {
                return Err(Error::MixedKinds(
                    if brauer { "Brauer" } else { "ordinary" },
                    label.kind().name(),
                ));
            }
        }
        Ok(self.coeff(label))
    }

    /// `(χ : <λ>+ + <λ>-)` for minus-class `λ`, `(χ : <λ>)` otherwise.
    pub fn spin_total(&self, lambda: &Partition) -> Result<BigRational> {
        Ok(CharLabel::spin_labels(lambda)?
            .iter()
            .map(|l| self.coeff(l))
            .sum())
    }

    /// The character with every signed spin label replaced by its associate.
    pub fn swap_signs(&self) -> FormalChar {
        FormalChar {
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.associate(), c.clone()))
                .collect(),
        }
    }

    pub fn is_sign_symmetric(&self) -> bool {
        self.swap_signs() == *self
    }

    /// Keeps only the terms whose label passes `keep`.
    pub fn filtered(&self, keep: impl Fn(&CharLabel) -> bool) -> FormalChar {
        FormalChar {
            level: self.level,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn has_integral_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

/// `c1*label1 + c2*label2`, with exact rational coefficients.
impl fmt::Display for FormalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (label, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{label}")?;
        }
        Ok(())
    }
}

/// Restriction (`e_i`) or induction (`f_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Restrict,
    Induce,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" | "restrict" => Ok(Direction::Restrict),
            "f" | "induce" => Ok(Direction::Induce),
            other => Err(Error::ParameterOutOfRange(format!(
                "direction must be e or f, got {other:?}"
            ))),
        }
    }
}

/// Neighbouring partitions across one node of the given residue kind.
fn neighbours(lambda: &Partition, dir: Direction, filter: NodeFilter) -> Vec<Partition> {
    let boundary = match dir {
        Direction::Restrict => Boundary::Removable,
        Direction::Induce => Boundary::Addable,
    };
    lambda
        .boundary_nodes(boundary, filter)
        .into_iter()
        .map(|node| match dir {
            Direction::Restrict => lambda.remove_node(node),
            Direction::Induce => lambda.add_node(node),
        })
        .map(|r| r.expect("boundary node"))
        .collect()
}

/// Images of one label under a single branching step, with multiplicity 1.
fn step_label(i: Residue, dir: Direction, label: &CharLabel) -> Result<Vec<CharLabel>> {
    match label {
        CharLabel::Ord(lambda) => Ok(neighbours(lambda, dir, NodeFilter::Residue(i))
            .into_iter()
            .map(CharLabel::Ord)
            .collect()),
        CharLabel::Spin(lambda) | CharLabel::SpinSigned(lambda, _) => {
            let mut out = Vec::new();
            for mu in neighbours(lambda, dir, NodeFilter::SpinResidue(i)) {
                if !mu.is_two_regular() {
                    continue;
                }
                match (label, mu.sign_class()?) {
                    (_, SignClass::Plus) => out.push(CharLabel::Spin(mu)),
                    (CharLabel::SpinSigned(_, s), SignClass::Minus) => {
                        out.push(CharLabel::SpinSigned(mu, *s))
                    }
                    (_, SignClass::Minus) => {
                        out.push(CharLabel::SpinSigned(mu.clone(), Sign::Plus));
                        out.push(CharLabel::SpinSigned(mu, Sign::Minus));
                    }
                }
            }
            Ok(out)
        }
        CharLabel::Brauer(_) => Err(Error::MixedKinds("Brauer", "branching of ordinary")),
    }
}

/// One application of `e_i` or `f_i`.
pub fn step(i: Residue, dir: Direction, chi: &FormalChar) -> Result<FormalChar> {
    let level = match dir {
        Direction::Restrict => chi.level.saturating_sub(1),
        Direction::Induce => chi.level + 1,
    };
    let mut out = FormalChar::zero(level);
    for (label, c) in chi.terms() {
        for image in step_label(i, dir, label)? {
            out.add_term(image, c.clone())?;
        }
    }
    Ok(out)
}

pub fn e_step(i: Residue, chi: &FormalChar) -> Result<FormalChar> {
    step(i, Direction::Restrict, chi)
}

pub fn f_step(i: Residue, chi: &FormalChar) -> Result<FormalChar> {
    step(i, Direction::Induce, chi)
}

/// Divided power: `r` steps, then division by `r!`.
pub fn divided(i: Residue, r: usize, dir: Direction, chi: &FormalChar) -> Result<FormalChar> {
    let mut cur = chi.clone();
    for _ in 0..r {
        cur = step(i, dir, &cur)?;
        if cur.is_zero() {
            break;
        }
    }
    let denom = BigRational::from_integer(BigInt::from(factorial(r)));
    Ok(cur.scaled(&denom.recip()))
}

/// Largest `r` with `e_i^r χ` (or `f_i^r χ`) nonzero.
pub fn max_power(i: Residue, dir: Direction, chi: &FormalChar) -> Result<usize> {
    if chi.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    let mut r = 0;
    let mut cur = step(i, dir, chi)?;
    while !cur.is_zero() {
        r += 1;
        cur = step(i, dir, &cur)?;
    }
    Ok(r)
}

/// `ε_i(χ)`.
pub fn eps(i: Residue, chi: &FormalChar) -> Result<usize> {
    max_power(i, Direction::Restrict, chi)
}

/// `φ_i(χ)`.
pub fn phi(i: Residue, chi: &FormalChar) -> Result<usize> {
    max_power(i, Direction::Induce, chi)
}

/// The top divided power `e_i^(ε)` or `f_i^(φ)`.
pub fn max_op(i: Residue, dir: Direction, chi: &FormalChar) -> Result<FormalChar> {
    let r = max_power(i, dir, chi)?;
    divided(i, r, dir, chi)
}

/// `e_0 e_1` after an even staircase, `e_1 e_0` after an odd one; the right
/// factor acts first.
pub fn e_bullet(core: &Partition, chi: &FormalChar) -> Result<FormalChar> {
    if two_core(core) != *core {
        return Err(Error::NotAStaircase(core.to_string()));
    }
    let first = if core.len().is_multiple_of(2) {
        Residue::One
    } else {
        Residue::Zero
    };
    let once = e_step(first, chi)?;
    e_step(first.flip(), &once)
}

/// `+` for an addable node, `-` for a removable one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigSymbol {
    Plus,
    Minus,
}

/// The `i`-signature of a 2-regular partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kleshchev {
    pub signature: Vec<(SigSymbol, Node)>,
    pub reduced: Vec<(SigSymbol, Node)>,
    pub normal: Vec<Node>,
    pub conormal: Vec<Node>,
}

/// Renders a signature as a string of `+` and `-`.
pub fn signature_string(sig: &[(SigSymbol, Node)]) -> String {
    sig.iter()
        .map(|(s, _)| match s {
            SigSymbol::Plus => '+',
            SigSymbol::Minus => '-',
        })
        .collect()
}

/// Reads addable (`+`) and removable (`-`) `i`-nodes from the top row down,
/// then cancels adjacent `+-` pairs. The surviving `-` nodes are normal and
/// the surviving `+` nodes conormal.
pub fn kleshchev(mu: &Partition, i: Residue) -> Result<Kleshchev> {
    mu.require_two_regular()?;
    let mut signature = Vec::new();
    for r in 1..=mu.len() + 1 {
        let end = Node::new(r, mu.row(r).max(1));
        if mu.row(r) > 0 && mu.row(r) > mu.row(r + 1) && end.residue() == i {
            signature.push((SigSymbol::Minus, end));
        }
        let add = Node::new(r, mu.row(r) + 1);
        if (r == 1 || mu.row(r) < mu.row(r - 1)) && add.residue() == i {
            signature.push((SigSymbol::Plus, add));
        }
    }
    let mut reduced: Vec<(SigSymbol, Node)> = Vec::new();
    for &entry in &signature {
        if entry.0 == SigSymbol::Minus && reduced.last().map(|e| e.0) == Some(SigSymbol::Plus) {
            reduced.pop();
        } else {
            reduced.push(entry);
        }
    }
    let pick = |want: SigSymbol| {
        reduced
            .iter()
            .filter(|(s, _)| *s == want)
            .map(|&(_, n)| n)
            .collect::<Vec<_>>()
    };
    Ok(Kleshchev {
        normal: pick(SigSymbol::Minus),
        conormal: pick(SigSymbol::Plus),
        signature,
        reduced,
    })
}

/// Removes every normal `i`-node (`e`) or adds every conormal one (`f`):
/// the label of the head of the top divided power.
pub fn brauer_max(mu: &Partition, i: Residue, dir: Direction) -> Result<Partition> {
    let k = kleshchev(mu, i)?;
    let mut parts = mu.parts().to_vec();
    match dir {
        Direction::Restrict => {
            for node in k.normal {
                parts[node.row - 1] -= 1;
            }
        }
        Direction::Induce => {
            for node in k.conormal {
                if node.row > parts.len() {
                    parts.push(1);
                } else {
                    parts[node.row - 1] += 1;
                }
            }
        }
    }
    let out = Partition::new(parts)?;
    out.require_two_regular()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::two_content;
    use crate::partitions::strict_partitions_of;
    use crate::regdouble::double;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn label(s: &str) -> CharLabel {
        s.parse().unwrap()
    }

    fn chi(terms: &[(&str, i64)]) -> FormalChar {
        let level = label(terms[0].0).level();
        FormalChar::from_terms(level, terms.iter().map(|(l, c)| (label(l), *c))).unwrap()
    }

    fn half() -> BigRational {
        BigRational::new(1.into(), 2.into())
    }

    #[test]
    fn label_round_trip() {
        for s in ["[5,4,1]", "<9,1>", "<5,4,1>+", "<5,4,1>-", "phi(3,2)"] {
            assert_eq!(label(s).to_string(), s);
        }
        assert!("<5,1>+".parse::<CharLabel>().is_err());
        assert!("phi(2,2)".parse::<CharLabel>().is_err());
    }

    #[test]
    fn restriction_golden() {
        let source = FormalChar::from_label(label("<11,9,7,5,4,1>+"));
        let got = e_step(Residue::Zero, &source).unwrap();
        let expect = chi(&[
            ("<11,9,7,5,4>+", 1),
            ("<11,9,7,5,3,1>", 1),
            ("<11,8,7,5,4,1>", 1),
        ]);
        assert_eq!(got, expect);
    }

    #[test]
    fn divided_restriction_golden() {
        let source = FormalChar::from_label(label("<11,9,7,5,4,1>+"));
        let got = divided(Residue::Zero, 2, Direction::Restrict, &source).unwrap();
        let mut expect = chi(&[
            ("<11,9,7,5,3>", 1),
            ("<11,8,7,5,4>", 1),
            ("<11,8,7,5,3,1>+", 1),
            ("<11,8,7,5,3,1>-", 1),
        ]);
        expect.add_term(label("<11,9,7,4,3,1>+"), half()).unwrap();
        expect.add_term(label("<11,9,7,4,3,1>-"), half()).unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn kleshchev_golden() {
        let mu = p("15,11,8,6,5,2");
        let k = kleshchev(&mu, Residue::Zero).unwrap();
        assert_eq!(signature_string(&k.signature), "-++---+");
        assert_eq!(signature_string(&k.reduced), "--+");
        assert_eq!(k.normal, vec![Node::new(1, 15), Node::new(6, 2)]);
        assert_eq!(k.conormal, vec![Node::new(7, 1)]);
        assert_eq!(
            brauer_max(&mu, Residue::Zero, Direction::Restrict).unwrap(),
            p("14,11,8,6,5,1")
        );
        assert_eq!(
            brauer_max(&mu, Residue::Zero, Direction::Induce).unwrap(),
            p("15,11,8,6,5,2,1")
        );
    }

    #[test]
    fn level_and_kind_guards() {
        let mut c = FormalChar::from_label(label("[2,1]"));
        assert!(matches!(
            c.add_term(label("[2]"), BigRational::one()),
            Err(Error::MixedLevels(3, 2))
        ));
        assert!(matches!(
            c.add_term(label("phi(3)"), BigRational::one()),
            Err(Error::MixedKinds(..))
        ));
        assert!(matches!(
            eps(Residue::Zero, &FormalChar::zero(3)),
            Err(Error::ZeroCharacter)
        ));
        let b = FormalChar::from_label(label("phi(2,1)"));
        assert!(e_step(Residue::Zero, &b).is_err());
        assert!(b.inner(&label("[2,1]")).is_err());
    }

    /// Restricting an ordinary character along both residues removes each
    /// removable node exactly once.
    #[test]
    fn ordinary_restriction_is_complete() {
        for n in 1..=10 {
            for l in crate::partitions::partitions_of(n).unwrap() {
                let c = FormalChar::from_label(CharLabel::Ord(l.clone()));
                let total = e_step(Residue::Zero, &c)
                    .unwrap()
                    .add(&e_step(Residue::One, &c).unwrap())
                    .unwrap();
                let expect = FormalChar::from_terms(
                    n - 1,
                    l.removable_nodes()
                        .into_iter()
                        .map(|x| (CharLabel::Ord(l.remove_node(x).unwrap()), 1)),
                )
                .unwrap();
                assert_eq!(total, expect, "{l}");
            }
        }
    }

    /// Every spin target lies in the block whose content has one fewer
    /// `i`: spin residues of `λ` match ordinary residues of its double.
    #[test]
    fn spin_targets_drop_one_from_block_content() {
        for n in 1..=16 {
            for l in strict_partitions_of(n).unwrap() {
                let before = two_content(&double(&l));
                for i in Residue::ALL {
                    for src in CharLabel::spin_labels(&l).unwrap() {
                        let out = e_step(i, &FormalChar::from_label(src)).unwrap();
                        for target in out.labels() {
                            let after = two_content(&double(target.partition()));
                            assert_eq!(after.count(i) + 1, before.count(i), "{l} -> {target}");
                            assert_eq!(after.count(i.flip()), before.count(i.flip()));
                        }
                    }
                }
            }
        }
    }

    /// `(f_i χ : ψ) = (χ : e_i ψ)` on spin labels.
    #[test]
    fn induction_is_adjoint_to_restriction() {
        for n in 1..=12 {
            for l in strict_partitions_of(n).unwrap() {
                for src in CharLabel::spin_labels(&l).unwrap() {
                    for i in Residue::ALL {
                        let up = f_step(i, &FormalChar::from_label(src.clone())).unwrap();
                        for m in strict_partitions_of(n + 1).unwrap() {
                            for tgt in CharLabel::spin_labels(&m).unwrap() {
                                let down = e_step(i, &FormalChar::from_label(tgt.clone())).unwrap();
                                assert_eq!(up.coeff(&tgt), down.coeff(&src), "{src} {tgt}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn branching_commutes_with_sign_swap() {
        for n in 1..=12 {
            for l in strict_partitions_of(n).unwrap() {
                for src in CharLabel::spin_labels(&l).unwrap() {
                    let c = FormalChar::from_label(src);
                    for i in Residue::ALL {
                        for dir in [Direction::Restrict, Direction::Induce] {
                            let a = step(i, dir, &c.swap_signs()).unwrap();
                            let b = step(i, dir, &c).unwrap().swap_signs();
                            assert_eq!(a, b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn e_bullet_order_follows_core_parity() {
        // After the staircase (1), e_0 acts first and e_1 second.
        let c = FormalChar::from_label(label("[2,1]"));
        assert!(e_bullet(&p("1"), &c).unwrap().is_zero());
        let c = FormalChar::from_label(label("[3]"));
        let got = e_bullet(&p("1"), &c).unwrap();
        assert_eq!(got, FormalChar::from_label(label("[1]")));
        let c = FormalChar::from_label(label("[1,1,1]"));
        let expect = e_step(Residue::One, &e_step(Residue::Zero, &c).unwrap()).unwrap();
        assert_eq!(e_bullet(&p("1"), &c).unwrap(), expect);
        assert!(e_bullet(&p("2"), &c).is_err());
    }

    #[test]
    fn kleshchev_crystal_counts() {
        for n in 1..=16 {
            for mu in strict_partitions_of(n).unwrap() {
                for i in Residue::ALL {
                    let k = kleshchev(&mu, i).unwrap();
                    let down = brauer_max(&mu, i, Direction::Restrict).unwrap();
                    let kd = kleshchev(&down, i).unwrap();
                    assert!(kd.normal.is_empty());
                    assert_eq!(kd.conormal.len(), k.normal.len() + k.conormal.len(), "{mu}");
                    let up = brauer_max(&mu, i, Direction::Induce).unwrap();
                    assert!(up.is_two_regular());
                    assert!(kleshchev(&up, i).unwrap().conormal.is_empty());
                }
            }
        }
    }
}
