//! Partitions, Young diagrams and the node statistics used everywhere else.
//!
//! Nodes are 1-based `(row, col)` pairs. Two residue notions are in play:
//! the ordinary residue `(col - row) mod 2` and the spin residue
//! `floor(col / 2) mod 2`, which depends on the column alone.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `n` for which [`enumerate`] will list partitions.
pub const ENUMERATION_BOUND: usize = 60;

/// A residue modulo 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Residue {
    Zero,
    One,
}

impl Residue {
    pub const ALL: [Residue; 2] = [Residue::Zero, Residue::One];

    pub fn from_parity(x: i64) -> Self {
        if x.rem_euclid(2) == 0 {
            Residue::Zero
        } else {
            Residue::One
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Residue::Zero => Residue::One,
            Residue::One => Residue::Zero,
        }
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

impl FromStr for Residue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0" => Ok(Residue::Zero),
            "1" => Ok(Residue::One),
            other => Err(Error::ParameterOutOfRange(format!(
                "residue must be 0 or 1, got {other:?}"
            ))),
        }
    }
}

/// A box of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }

    pub fn residue(self) -> Residue {
        Residue::from_parity(self.col as i64 - self.row as i64)
    }

    pub fn spin_residue(self) -> Residue {
        Residue::from_parity((self.col / 2) as i64)
    }

    /// Index of the anti-diagonal `row + col = ladder + 2`.
    pub fn ladder(self) -> usize {
        self.row + self.col - 2
    }

    /// Index of the slope `2 row + floor(col / 2) = slope + 2`.
    pub fn slope(self) -> usize {
        2 * self.row + self.col / 2 - 2
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Which residue, if any, a node query filters on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeFilter {
    Any,
    Residue(Residue),
    SpinResidue(Residue),
}

impl NodeFilter {
    pub fn accepts(self, node: Node) -> bool {
        match self {
            NodeFilter::Any => true,
            NodeFilter::Residue(i) => node.residue() == i,
            NodeFilter::SpinResidue(i) => node.spin_residue() == i,
        }
    }
}

/// Removable nodes sit at the end of a row and can be taken away;
/// addable nodes can be appended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Removable,
    Addable,
}

/// Parity of the number of even parts of a 2-regular partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignClass {
    /// An even number of even parts: one spin character.
    Plus,
    /// An odd number of even parts: an associate pair of spin characters.
    Minus,
}

/// An integer partition with no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the parts; [`enumerate`] lists in the reverse order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates that `parts` is weakly decreasing and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub(crate) fn from_sorted_unchecked(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The staircase `(c, c-1, ..., 1)`.
    pub fn staircase(c: usize) -> Self {
        Partition {
            parts: (1..=c).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `r` (1-based); zero past the end.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.row(1)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.first();
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: `self` dominates `other` when every partial sum of
    /// `self` is at least the matching partial sum of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!(
                "{self} has size {}, {other} has size {}",
                self.size(),
                other.size()
            )));
        }
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for r in 1..=rows {
            a += self.row(r);
            b += other.row(r);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every part multiplied by `num / den`.
    pub fn scale(&self, num: usize, den: usize) -> Result<Self> {
        if den == 0 {
            return Err(Error::NonIntegralScale(format!("{num}/0")));
        }
        let parts = self
            .parts
            .iter()
            .map(|&p| {
                if (p * num).is_multiple_of(den) {
                    Ok(p * num / den)
                } else {
                    Err(Error::NonIntegralScale(format!("{num}/{den}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::from_sorted_unchecked(parts))
    }

    /// Row-wise sum.
    pub fn add(&self, other: &Partition) -> Self {
        let rows = self.len().max(other.len());
        Partition {
            parts: (1..=rows).map(|r| self.row(r) + other.row(r)).collect(),
        }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// `self ⊔ self`: every part repeated twice.
    pub fn duplicate(&self) -> Self {
        self.union(self)
    }

    pub fn is_two_regular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    pub(crate) fn require_two_regular(&self) -> Result<()> {
        if self.is_two_regular() {
            Ok(())
        } else {
            Err(Error::NotTwoRegular(self.to_string()))
        }
    }

    /// Number of even parts.
    pub fn even_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    pub fn sign_class(&self) -> Result<SignClass> {
        self.require_two_regular()?;
        Ok(if self.even_parts().is_multiple_of(2) {
            SignClass::Plus
        } else {
            SignClass::Minus
        })
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && self.row(node.row) >= node.col
    }

    /// All nodes, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| Node::new(r + 1, c)))
    }

    /// Nodes whose removal leaves a partition, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        (1..=self.len())
            .filter(|&r| self.row(r) > self.row(r + 1))
            .map(|r| Node::new(r, self.row(r)))
            .collect()
    }

    /// Nodes whose addition gives a partition, top to bottom.
    pub fn addable_nodes(&self) -> Vec<Node> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.row(r) < self.row(r - 1))
            .map(|r| Node::new(r, self.row(r) + 1))
            .collect()
    }

    pub fn boundary_nodes(&self, which: Boundary, filter: NodeFilter) -> Vec<Node> {
        let nodes = match which {
            Boundary::Removable => self.removable_nodes(),
            Boundary::Addable => self.addable_nodes(),
        };
        nodes.into_iter().filter(|&n| filter.accepts(n)).collect()
    }

    /// `self` with a removable node taken away.
    pub fn remove_node(&self, node: Node) -> Result<Self> {
        if node.row == 0 || self.row(node.row) != node.col || self.row(node.row + 1) >= node.col {
            return Err(Error::ParameterOutOfRange(format!(
                "{node} is not removable from {self}"
            )));
        }
        let mut parts = self.parts.clone();
        parts[node.row - 1] -= 1;
        Ok(Partition::from_sorted_unchecked(parts))
    }

    /// `self` with an addable node appended.
    pub fn add_node(&self, node: Node) -> Result<Self> {
        let ok = node.row >= 1
            && self.row(node.row) + 1 == node.col
            && (node.row == 1 || self.row(node.row - 1) >= node.col);
        if !ok {
            return Err(Error::ParameterOutOfRange(format!(
                "{node} is not addable to {self}"
            )));
        }
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Whether the diagram of `other` lies inside the diagram of `self`.
    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|r| other.row(r) <= self.row(r))
    }

    /// Nodes of `self` not in `inner`, row by row. Requires containment.
    pub fn skew_nodes(&self, inner: &Partition) -> Vec<Node> {
        (1..=self.len())
            .flat_map(|r| (inner.row(r) + 1..=self.row(r)).map(move |c| Node::new(r, c)))
            .collect()
    }

    /// The smallest 2-regular partition reachable by deleting nodes of spin
    /// residue `i`, together with the deleted nodes.
    pub fn spin_strip(&self, i: Residue) -> Result<SpinStrip> {
        self.require_two_regular()?;
        // Bottom-up: shrinking a lower row only relaxes the rows above it,
        // so taking each row as short as allowed yields the minimum.
        let mut rows = self.parts.clone();
        let mut below = 0usize;
        for r in (0..rows.len()).rev() {
            let mut len = rows[r];
            while len > 0 {
                let end = Node::new(r + 1, len);
                let shorter = len - 1;
                if end.spin_residue() != i || shorter < below || (shorter == below && below > 0) {
                    break;
                }
                len = shorter;
            }
            rows[r] = len;
            below = len;
        }
        let result = Partition::from_sorted_unchecked(rows);
        let removed = self.skew_nodes(&result);
        Ok(SpinStrip { result, removed })
    }
}

/// Output of [`Partition::spin_strip`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinStrip {
    pub result: Partition,
    pub removed: Vec<Node>,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Accepts `9,6,4,3,1`, `(9,6,4,3,1)`, exponents like `2^3,1`, and
/// `0`, `-`, `()` or the empty string for the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        if body.is_empty() || body == "0" || body == "-" || body == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (base, times) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), parse_number(e.trim(), s)?),
                None => (token, 1),
            };
            let value = parse_number(base, s)?;
            parts.extend(std::iter::repeat_n(value, times));
        }
        Partition::new(parts)
    }
}

fn parse_number(token: &str, whole: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::Malformed(format!("bad part {token:?} in {whole:?}")))
}

/// Which partitions [`enumerate`] lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionClass {
    All,
    TwoRegular,
}

/// All partitions of `n` in the class, in descending lexicographic order.
pub fn enumerate(n: usize, class: PartitionClass) -> Result<Vec<Partition>> {
    if n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    let strict = class == PartitionClass::TwoRegular;
    fill(n, n, strict, &mut current, &mut out);
    Ok(out)
}

fn fill(rest: usize, max: usize, strict: bool, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        let next_max = if strict { p - 1 } else { p };
        fill(rest - p, next_max, strict, current, out);
        current.pop();
    }
}

/// Shorthand for `enumerate(n, PartitionClass::All)`.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    enumerate(n, PartitionClass::All)
}

/// Shorthand for `enumerate(n, PartitionClass::TwoRegular)`.
pub fn strict_partitions_of(n: usize) -> Result<Vec<Partition>> {
    enumerate(n, PartitionClass::TwoRegular)
}

/// Evaluates expressions such as `(11,7,3) + 4*(3,1,1) u (10,2)`.
///
/// Scaling (`a*` or `a/b*`) binds tightest, then `+`, then union (`u` or `⊔`).
pub fn eval_expr(expr: &str) -> Result<Partition> {
    let mut unions = Vec::new();
    for chunk in expr.split(['u', 'U', '⊔']) {
        let mut acc = Partition::empty();
        for term in chunk.split('+') {
            acc = acc.add(&eval_term(term.trim(), expr)?);
        }
        unions.push(acc);
    }
    Ok(unions
        .iter()
        .fold(Partition::empty(), |acc, p| acc.union(p)))
}

fn eval_term(term: &str, whole: &str) -> Result<Partition> {
    match term.split_once('*') {
        None => term.parse(),
        Some((factor, atom)) => {
            let factor = factor.trim();
            let (num, den) = match factor.split_once('/') {
                Some((a, b)) => (
                    parse_number(a.trim(), whole)?,
                    parse_number(b.trim(), whole)?,
                ),
                None => (parse_number(factor, whole)?, 1),
            };
            atom.trim().parse::<Partition>()?.scale(num, den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("9,6,4,3,1").parts(), &[9, 6, 4, 3, 1]);
        assert_eq!(p("(2^3,1)").parts(), &[2, 2, 2, 1]);
        assert_eq!(p("()"), Partition::empty());
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("3,2,1,0,0"), p("3,2,1"));
        assert_eq!(p("5,4,1").to_string(), "(5,4,1)");
        assert!(matches!(
            "1,2".parse::<Partition>(),
            Err(Error::NotWeaklyDecreasing(_))
        ));
        assert!(matches!(
            "1,x".parse::<Partition>(),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn combining() {
        let e = eval_expr("(11,7,3) + 4*(3,1,1) u (10,2)").unwrap();
        assert_eq!(e, p("23,11,10,7,2"));
        assert_eq!(p("6,4").scale(1, 2).unwrap(), p("3,2"));
        assert!(p("3").scale(1, 2).is_err());
    }

    #[test]
    fn conjugate_and_dominance() {
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert!(p("4,1").dominates(&p("3,2")).unwrap());
        assert!(!p("3,1,1,1").dominates(&p("2,2,2")).unwrap());
        assert!(!p("2,2,2").dominates(&p("3,1,1,1")).unwrap());
        assert!(p("2").dominates(&p("1")).is_err());
    }

    #[test]
    fn node_statistics() {
        let n = Node::new(2, 5);
        assert_eq!(n.residue(), Residue::One);
        assert_eq!(n.spin_residue(), Residue::Zero);
        assert_eq!(n.ladder(), 5);
        assert_eq!(n.slope(), 4);
        assert_eq!(Node::new(6, 2).residue(), Residue::Zero);
    }

    #[test]
    fn boundary() {
        let l = p("3,1,1");
        assert_eq!(l.removable_nodes(), vec![Node::new(1, 3), Node::new(3, 1)]);
        assert_eq!(
            l.addable_nodes(),
            vec![Node::new(1, 4), Node::new(2, 2), Node::new(4, 1)]
        );
        assert_eq!(l.remove_node(Node::new(3, 1)).unwrap(), p("3,1"));
        assert!(l.remove_node(Node::new(2, 1)).is_err());
        assert_eq!(l.add_node(Node::new(2, 2)).unwrap(), p("3,2,1"));
    }

    #[test]
    fn spin_strip_examples() {
        let l = p("9,6,4,3,1");
        assert_eq!(l.spin_strip(Residue::Zero).unwrap().result, p("7,6,4,3"));
        assert_eq!(l.spin_strip(Residue::One).unwrap().result, p("9,5,4,2,1"));
        assert!(p("2,2").spin_strip(Residue::Zero).is_err());
    }

    #[test]
    fn sign_classes() {
        assert_eq!(p("11,9,7,5,4,1").sign_class().unwrap(), SignClass::Minus);
        assert_eq!(p("5,1").sign_class().unwrap(), SignClass::Plus);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        let strict: Vec<usize> = (0..10)
            .map(|n| strict_partitions_of(n).unwrap().len())
            .collect();
        assert_eq!(strict, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8]);
        let four = partitions_of(4).unwrap();
        assert_eq!(
            four,
            ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"].map(p).to_vec()
        );
        assert!(matches!(
            partitions_of(61),
            Err(Error::BoundExceeded { .. })
        ));
    }

    /// The strip is contained in every 2-regular partition reachable by
    /// deleting spin-residue-i nodes.
    #[test]
    fn spin_strip_is_minimum_by_search() {
        for n in 1..=14 {
            for l in strict_partitions_of(n).unwrap() {
                for i in Residue::ALL {
                    let strip = l.spin_strip(i).unwrap().result;
                    let mut reachable = Vec::new();
                    for m in 0..=n {
                        for mu in strict_partitions_of(m).unwrap() {
                            if l.contains_partition(&mu)
                                && l.skew_nodes(&mu).iter().all(|x| x.spin_residue() == i)
                            {
                                reachable.push(mu);
                            }
                        }
                    }
                    assert!(reachable.contains(&strip), "{l} {i}");
                    assert!(
                        reachable.iter().all(|mu| mu.contains_partition(&strip)),
                        "{l} {i}"
                    );
                }
            }
        }
    }
}
