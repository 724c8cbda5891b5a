//! Rouquier 2-blocks: projective characters built by induction, the virtual
//! projectives dual to the ordinary labels, and the spin decomposition rows
//! assembled from a decomposition matrix and its adjustment matrix.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::abacus::{from_core_and_quotient, two_core, two_sign};
use crate::characters::{divided, CharLabel, Direction, FormalChar};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, strict_partitions_of, Partition, Residue};
use crate::regdouble::{spin_block, BlockId};
use crate::symfun::{e_to_schur, kappa, spade};

/// Row label of a [`PartMatrix`]: a partition, or a pair `(α|β)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowLabel {
    Part(Partition),
    Pair(Partition, Partition),
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Part(p) => p.fmt(f),
            RowLabel::Pair(a, b) => write!(f, "({a}|{b})"),
        }
    }
}

impl FromStr for RowLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            if let Some((a, b)) = inner.split_once('|') {
                return Ok(RowLabel::Pair(a.parse()?, b.parse()?));
            }
        }
        Ok(RowLabel::Part(s.parse()?))
    }
}

/// An integer matrix with partition-labelled columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartMatrix {
    rows: Vec<RowLabel>,
    cols: Vec<Partition>,
    entries: Vec<Vec<i64>>,
}

impl PartMatrix {
    pub fn new(rows: Vec<RowLabel>, cols: Vec<Partition>, entries: Vec<Vec<i64>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::ShapeMismatch(format!(
                "{} row labels and {} column labels for a {}-row matrix",
                rows.len(),
                cols.len(),
                entries.len()
            )));
        }
        Ok(PartMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// A square matrix whose rows carry the column labels.
    pub fn square(labels: Vec<Partition>, entries: Vec<Vec<i64>>) -> Result<Self> {
        let rows = labels.iter().cloned().map(RowLabel::Part).collect();
        PartMatrix::new(rows, labels, entries)
    }

    pub fn identity(labels: Vec<Partition>) -> Self {
        let n = labels.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        PartMatrix::square(labels, entries).expect("square by construction")
    }

    pub fn rows(&self) -> &[RowLabel] {
        &self.rows
    }

    pub fn cols(&self) -> &[Partition] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn row_index(&self, label: &RowLabel) -> Option<usize> {
        self.rows.iter().position(|r| r == label)
    }

    pub fn col_index(&self, label: &Partition) -> Option<usize> {
        self.cols.iter().position(|c| c == label)
    }

    pub fn row(&self, label: &RowLabel) -> Option<&[i64]> {
        self.row_index(label).map(|i| self.entries[i].as_slice())
    }

    pub fn entry(&self, row: &RowLabel, col: &Partition) -> Option<i64> {
        Some(self.entries[self.row_index(row)?][self.col_index(col)?])
    }

    /// Row labels as partitions; fails on pair labels.
    pub fn row_partitions(&self) -> Result<Vec<Partition>> {
        self.rows
            .iter()
            .map(|r| match r {
                RowLabel::Part(p) => Ok(p.clone()),
                RowLabel::Pair(..) => Err(Error::ShapeMismatch(format!("row {r} is a pair"))),
            })
            .collect()
    }

    /// Product; the columns of `self` must match the rows of `other`.
    pub fn mul(&self, other: &PartMatrix) -> Result<PartMatrix> {
        if other.row_partitions()? != self.cols {
            return Err(Error::ShapeMismatch(
                "inner labels of a product differ".to_string(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .map(|row| {
                (0..other.cols.len())
                    .map(|j| {
                        row.iter()
                            .enumerate()
                            .map(|(k, &a)| a * other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        PartMatrix::new(self.rows.clone(), other.cols.clone(), entries)
    }

    pub fn transpose(&self) -> Result<PartMatrix> {
        let rows = self.cols.iter().cloned().map(RowLabel::Part).collect();
        let cols = self.row_partitions()?;
        let entries = (0..self.cols.len())
            .map(|j| self.entries.iter().map(|r| r[j]).collect())
            .collect();
        PartMatrix::new(rows, cols, entries)
    }

    /// Reads the text format written by `Display`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty matrix file".to_string(),
        })?;
        let cols_text = header.strip_prefix("cols:").ok_or(Error::Parse {
            line: first,
            msg: "expected `cols:` header".to_string(),
        })?;
        let at = |line: usize| {
            move |e: Error| Error::Parse {
                line,
                msg: e.to_string(),
            }
        };
        let cols = cols_text
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<Partition>())
            .collect::<Result<Vec<_>>>()
            .map_err(at(first))?;
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for (line, body) in lines {
            let (label, values) = body.rsplit_once('|').ok_or(Error::Parse {
                line,
                msg: "expected `label | entries`".to_string(),
            })?;
            rows.push(label.parse::<RowLabel>().map_err(at(line))?);
            let row = values
                .split_whitespace()
                .map(|v| match v {
                    "." => Ok(0),
                    v => v.parse::<i64>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad entry {v:?}"),
                    }),
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != cols.len() {
                return Err(Error::Parse {
                    line,
                    msg: format!("{} entries for {} columns", row.len(), cols.len()),
                });
            }
            entries.push(row);
        }
        PartMatrix::new(rows, cols, entries)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        PartMatrix::parse(&text)
    }
}

impl fmt::Display for PartMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
        writeln!(f, "cols: {}", cols.join("; "))?;
        let width = self
            .rows
            .iter()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(0);
        for (label, row) in self.rows.iter().zip(&self.entries) {
            let values: Vec<String> = row
                .iter()
                .map(|&v| {
                    if v == 0 {
                        ".".to_string()
                    } else {
                        v.to_string()
                    }
                })
                .collect();
            writeln!(f, "{:<width$} | {}", label.to_string(), values.join(" "))?;
        }
        Ok(())
    }
}

/// Inverts a unitriangular matrix whose labels are listed compatibly with
/// dominance: no label strictly dominates one listed before it.
pub fn unitri_inverse(m: &PartMatrix) -> Result<PartMatrix> {
    let labels = m.row_partitions()?;
    if labels != m.cols {
        return Err(Error::NotUnitriangular(
            "row and column labels differ".to_string(),
        ));
    }
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            if a.size() == b.size() && b != a && b.dominates(a)? {
                return Err(Error::NotUnitriangular(format!(
                    "{b} dominates {a} but is listed after it"
                )));
            }
        }
    }
    let n = labels.len();
    let lower = (0..n).all(|i| (i + 1..n).all(|j| m.get(i, j) == 0));
    let upper = (0..n).all(|i| (0..i).all(|j| m.get(i, j) == 0));
    if !(lower || upper) || (0..n).any(|i| m.get(i, i) != 1) {
        return Err(Error::NotUnitriangular(
            "entries off one triangle or a diagonal entry other than 1".to_string(),
        ));
    }
    if !lower {
        let t = unitri_inverse(&m.transpose()?)?;
        return t.transpose();
    }
    // Forward substitution, one column of the inverse at a time.
    let mut inv = vec![vec![0i64; n]; n];
    #[allow(clippy::needless_range_loop)]
    for j in 0..n {
        inv[j][j] = 1;
        for i in j + 1..n {
            inv[i][j] = -(j..i).map(|k| m.get(i, k) * inv[k][j]).sum::<i64>();
        }
    }
    PartMatrix::square(labels, inv)
}

/// The Rouquier block with staircase core of length `c` and weight `w ≤ c + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouquierBlock {
    block: BlockId,
    tau: Partition,
}

impl RouquierBlock {
    pub fn new(core_len: usize, weight: usize) -> Result<Self> {
        let block = BlockId::new(Partition::staircase(core_len), weight)?;
        Self::from_block(block)
    }

    pub fn from_block(block: BlockId) -> Result<Self> {
        if two_core(&block.core) != block.core {
            return Err(Error::NotAStaircase(block.core.to_string()));
        }
        if !block.is_rouquier() {
            return Err(Error::NotRouquier {
                core_len: block.core_len(),
                weight: block.weight,
            });
        }
        // The strict partition whose double is the staircase.
        let c = block.core_len();
        let tau = Partition::from_sorted_unchecked(
            (0..c.div_ceil(2)).map(|k| 2 * c - 1 - 4 * k).collect(),
        );
        Ok(RouquierBlock { block, tau })
    }

    pub fn core(&self) -> &Partition {
        &self.block.core
    }

    pub fn core_len(&self) -> usize {
        self.block.core_len()
    }

    pub fn weight(&self) -> usize {
        self.block.weight
    }

    pub fn id(&self) -> &BlockId {
        &self.block
    }

    /// The 4-bar core whose double is the 2-core.
    pub fn tau(&self) -> &Partition {
        &self.tau
    }

    /// Residue of the addable nodes of the core, `c mod 2`.
    pub fn addable_residue(&self) -> Residue {
        Residue::from_parity(self.core_len() as i64)
    }

    pub fn level(&self) -> usize {
        self.block.core.size() + 2 * self.block.weight
    }

    /// `σ + 2μ`.
    pub fn ordinary_label(&self, mu: &Partition) -> Partition {
        self.block.core.add(&mu.scale(2, 1).expect("integral"))
    }

    /// `τ + 4α`.
    pub fn spin_label(&self, alpha: &Partition) -> Partition {
        self.tau.add(&alpha.scale(4, 1).expect("integral"))
    }

    /// `τ + 4α ⊔ 2β`.
    pub fn spin_pair_label(&self, alpha: &Partition, beta: &Partition) -> Partition {
        self.spin_label(alpha)
            .union(&beta.scale(2, 1).expect("integral"))
    }

    /// The spin rows assembled by [`assemble_e`]: `τ + 4α` for even weight,
    /// `τ + 4α ⊔ (2)` for odd weight.
    pub fn spin_row_label(&self, alpha: &Partition) -> Partition {
        if self.weight().is_multiple_of(2) {
            self.spin_label(alpha)
        } else {
            self.spin_pair_label(alpha, &Partition::from_sorted_unchecked(vec![1]))
        }
    }

    /// Ordinary labels of the block, by quotient.
    pub fn ordinary_labels(&self) -> Result<Vec<Partition>> {
        let w = self.weight();
        let mut out = Vec::new();
        for k in 0..=w {
            for q0 in partitions_of(k)? {
                for q1 in partitions_of(w - k)? {
                    out.push(from_core_and_quotient(self.core(), &q0, &q1)?);
                }
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// 2-regular partitions whose spin characters reduce into this block.
    pub fn spin_partitions(&self) -> Result<Vec<Partition>> {
        let mut out = Vec::new();
        for l in strict_partitions_of(self.level())? {
            if spin_block(&l)? == self.block {
                out.push(l);
            }
        }
        Ok(out)
    }

    /// `ψ^∅ = [σ] + <τ>`.
    fn psi_root(&self) -> Result<FormalChar> {
        let mut chi = FormalChar::from_label(CharLabel::Ord(self.core().clone()));
        for l in CharLabel::spin_labels(&self.tau)? {
            chi.add_term(l, BigRational::one())?;
        }
        Ok(chi)
    }

    /// One column of height `r` added: `f_{1-a}^(r) f_a^(r)`, with `a` the
    /// addable residue of the core acting first.
    fn add_column(&self, r: usize, chi: &FormalChar) -> Result<FormalChar> {
        let a = self.addable_residue();
        let once = divided(a, r, Direction::Induce, chi)?;
        divided(a.flip(), r, Direction::Induce, &once)
    }

    /// The projective character `ψ^μ`, `|μ| ≤ w`, built column by column.
    pub fn psi(&self, mu: &Partition) -> Result<FormalChar> {
        if mu.size() > self.weight() {
            return Err(Error::ParameterOutOfRange(format!(
                "|{mu}| exceeds the weight {}",
                self.weight()
            )));
        }
        // Peeling the last column of μ leaves ρ with ψ^μ = F(ψ^ρ), so the
        // columns go on from the first to the last.
        let mut chi = self.psi_root()?;
        for &r in mu.conjugate().parts() {
            chi = self.add_column(r, &chi)?;
        }
        Ok(chi)
    }

    /// `ψ^μ` for every `μ` of size `w`, in descending lexicographic order.
    pub fn psi_all(&self) -> Result<BTreeMap<Partition, FormalChar>> {
        partitions_of(self.weight())?
            .into_iter()
            .map(|mu| Ok((mu.clone(), self.psi(&mu)?)))
            .collect()
    }

    /// `υ^λ = Σ_μ ♠(λ,μ) ψ^{μ'}`.
    pub fn upsilon(&self, lambda: &Partition) -> Result<FormalChar> {
        let mut out = FormalChar::zero(self.level());
        for mu in partitions_of(lambda.size())? {
            let c = spade(lambda, &mu);
            if c != 0 {
                let term = self.psi(&mu.conjugate())?;
                out = out.add(&term.scaled(&BigRational::from_integer(c.into())))?;
            }
        }
        Ok(out)
    }

    /// `M(μ,ν) = <e_{μ'}, s_ν>`: the ordinary pairings of the `ψ`s.
    pub fn psi_gram(&self) -> Result<PartMatrix> {
        let labels = partitions_of(self.weight())?;
        let entries = labels
            .iter()
            .map(|mu| {
                let e = e_to_schur(&mu.conjugate());
                labels.iter().map(|nu| e.coeff(nu)).collect()
            })
            .collect();
        PartMatrix::square(labels, entries)
    }

    /// The virtual projectives `ω^λ` with `(ω^λ : [σ + 2ν]) = δ(λ,ν)`, and the
    /// matrix of coefficients expressing them in the `ψ`s.
    pub fn omega_all(&self) -> Result<OmegaFamily> {
        let coeffs = unitri_inverse(&self.psi_gram()?)?;
        let psis = self.psi_all()?;
        let labels = coeffs.cols().to_vec();
        let mut chars = BTreeMap::new();
        for (i, lambda) in labels.iter().enumerate() {
            let mut acc = FormalChar::zero(self.level());
            for (j, mu) in labels.iter().enumerate() {
                let a = coeffs.get(i, j);
                if a != 0 {
                    acc = acc.add(&psis[mu].scaled(&BigRational::from_integer(a.into())))?;
                }
            }
            chars.insert(lambda.clone(), acc);
        }
        Ok(OmegaFamily { coeffs, chars })
    }

    /// A single `ω^λ` with its coefficients on the `ψ^μ`.
    pub fn omega(&self, lambda: &Partition) -> Result<(FormalChar, Vec<(Partition, i64)>)> {
        let family = self.omega_all()?;
        let i = family
            .coeffs
            .row_index(&RowLabel::Part(lambda.clone()))
            .ok_or_else(|| Error::ParameterOutOfRange(format!("{lambda} has the wrong size")))?;
        let coeffs = family
            .coeffs
            .cols()
            .iter()
            .cloned()
            .zip(family.coeffs.entries()[i].iter().copied())
            .filter(|(_, a)| *a != 0)
            .collect();
        Ok((family.chars[lambda].clone(), coeffs))
    }

    /// `(ω^μ : <row>)` for the spin rows of [`Self::spin_row_label`], which
    /// is the spin decomposition row times the inverse of the decomposition
    /// matrix. Signed rows use the `+` member.
    pub fn spin_rows_via_omega(&self) -> Result<PartMatrix> {
        let family = self.omega_all()?;
        let alphas = partitions_of(self.weight() / 2)?;
        let cols = family.coeffs.cols().to_vec();
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for alpha in &alphas {
            let label = CharLabel::spin_labels(&self.spin_row_label(alpha))?.remove(0);
            rows.push(RowLabel::Part(alpha.clone()));
            entries.push(
                cols.iter()
                    .map(|mu| integral(&family.chars[mu].coeff(&label)))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        PartMatrix::new(rows, cols, entries)
    }
}

fn integral(q: &BigRational) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::NonIntegral(q.to_string()));
    }
    q.to_integer()
        .to_i64()
        .ok_or_else(|| Error::NonIntegral(format!("{q} overflows")))
}

/// Output of [`RouquierBlock::omega_all`].
#[derive(Debug, Clone)]
pub struct OmegaFamily {
    /// Row `λ`, column `μ`: coefficient of `ψ^μ` in `ω^λ`.
    pub coeffs: PartMatrix,
    pub chars: BTreeMap<Partition, FormalChar>,
}

/// Which inverse a closed-form row describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseKind {
    /// Inverse of the decomposition matrix at a root of unity.
    AdjustedFree,
    /// Inverse of the 2-modular decomposition matrix; needs the matrix one
    /// weight-half down.
    Modular,
}

/// Closed-form entry of an inverse decomposition matrix in the row `α ⊔ α`
/// (when `|μ| = 2|α|`) or `α ⊔ α ⊔ (1)` (when `|μ| = 2|α| + 1`).
pub fn steinberg_entry(
    which: InverseKind,
    alpha: &Partition,
    mu: &Partition,
    d_small: Option<&PartMatrix>,
) -> Result<i64> {
    let a = alpha.size();
    let n = mu.size();
    let terms: Vec<Partition> = if n == 2 * a {
        vec![mu.clone()]
    } else if n == 2 * a + 1 {
        mu.removable_nodes()
            .into_iter()
            .map(|x| mu.remove_node(x))
            .collect::<Result<_>>()?
    } else {
        return Err(Error::ShapeMismatch(format!(
            "|{mu}| must be 2|{alpha}| or 2|{alpha}| + 1"
        )));
    };
    let sign = if (n / 2).is_multiple_of(2) { 1 } else { -1 };
    let inner: Vec<(Partition, i64)> = match which {
        InverseKind::AdjustedFree => vec![(alpha.clone(), 1)],
        InverseKind::Modular => {
            let d = d_small.ok_or_else(|| {
                Error::ParameterOutOfRange("the modular row needs the smaller matrix".to_string())
            })?;
            let inv = unitri_inverse(d)?;
            let row = inv
                .row(&RowLabel::Part(alpha.clone()))
                .ok_or_else(|| Error::ShapeMismatch(format!("{alpha} is not a row label")))?;
            inv.cols()
                .iter()
                .cloned()
                .zip(row.iter().copied())
                .collect()
        }
    };
    let mut total = 0i64;
    for nu in &terms {
        let eps = i64::from(two_sign(nu));
        for (beta, c) in &inner {
            if *c != 0 {
                total += eps * c * kappa(beta, nu)? as i64;
            }
        }
    }
    Ok(sign * total)
}

/// The adjustment matrix, the selection matrix and their product.
#[derive(Debug, Clone)]
pub struct Assembly {
    /// `A = D̊⁻¹ D`.
    pub a: PartMatrix,
    /// `J(α, μ) = 1` iff `μ = α ⊔ α` (even weight) or `α ⊔ α ⊔ (1)` (odd).
    pub j: PartMatrix,
    /// `E = J A`: row `α` is the decomposition row of the spin character
    /// labelled by `spin_rows[α]`, over the Brauer labels `σ + 2μ`.
    pub e: PartMatrix,
    pub spin_rows: Vec<Partition>,
}

/// `J` for weight `w`.
pub fn selection_matrix(weight: usize) -> Result<PartMatrix> {
    let cols = partitions_of(weight)?;
    let alphas = partitions_of(weight / 2)?;
    let one = Partition::from_sorted_unchecked(vec![1]);
    let entries = alphas
        .iter()
        .map(|alpha| {
            let mut target = alpha.duplicate();
            if weight % 2 == 1 {
                target = target.union(&one);
            }
            cols.iter().map(|mu| i64::from(*mu == target)).collect()
        })
        .collect();
    PartMatrix::new(
        alphas.into_iter().map(RowLabel::Part).collect(),
        cols,
        entries,
    )
}

fn check_weight_matrix(m: &PartMatrix, weight: usize, name: &str) -> Result<()> {
    let labels = partitions_of(weight)?;
    if m.cols() != labels.as_slice() || m.row_partitions()? != labels {
        return Err(Error::ShapeMismatch(format!(
            "{name} must be indexed by the partitions of {weight} in descending order"
        )));
    }
    Ok(())
}

/// `A = D̊⁻¹ D`, `J`, and `E = J A` for a Rouquier block.
pub fn assemble_e(block: &RouquierBlock, d: &PartMatrix, dbar: &PartMatrix) -> Result<Assembly> {
    let w = block.weight();
    check_weight_matrix(d, w, "D")?;
    check_weight_matrix(dbar, w, "D̊")?;
    let a = unitri_inverse(dbar)?.mul(d)?;
    for (i, row) in a.entries().iter().enumerate() {
        if let Some(j) = row.iter().position(|&v| v < 0) {
            return Err(Error::NegativeAdjustment {
                row: a.rows()[i].to_string(),
                col: a.cols()[j].to_string(),
            });
        }
    }
    let j = selection_matrix(w)?;
    let e = j.mul(&a)?;
    let spin_rows = partitions_of(w / 2)?
        .iter()
        .map(|alpha| block.spin_row_label(alpha))
        .collect();
    Ok(Assembly { a, j, e, spin_rows })
}

/// Checks that `ψ^μ` pairs with `[σ + 2ν]` as `<e_{μ'}, s_ν>`.
pub fn psi_ordinary_pairings(
    block: &RouquierBlock,
    psi: &FormalChar,
    mu: &Partition,
) -> Result<bool> {
    let e = e_to_schur(&mu.conjugate());
    for nu in partitions_of(mu.size())? {
        let label = CharLabel::Ord(block.ordinary_label(&nu));
        if psi.coeff(&label) != BigRational::from_integer(e.coeff(&nu).into()) {
            return Ok(false);
        }
    }
    Ok(true)
}
