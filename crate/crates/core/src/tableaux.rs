//! ℕ-matrices with prescribed margins, semistandard tableaux as chains of
//! partitions, and the integral and binary matrix encodings of tableaux.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::shapes::{strip_check, Composition, Partition, ShapeError, SkewShape, StripKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("a tableau needs at least one partition")]
    EmptyChain,
    #[error("step {index}: {from} -> {to} is not a {kind} strip")]
    NotAStrip { index: usize, from: String, to: String, kind: &'static str },
    #[error("step {index}: partial sums {parts:?} do not form a partition")]
    NotAPartition { index: usize, parts: Vec<usize> },
    #[error("entry ({row}, {col}) = {value} in a binary matrix")]
    NotBinary { row: usize, col: usize, value: usize },
    #[error("matrix rows have different lengths")]
    Ragged,
    #[error("operation requires a {0} tableau")]
    WrongMode(&'static str),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// A finitely supported matrix with natural entries, stored densely and
/// trimmed of trailing zero rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NatMatrix {
    rows: Vec<Vec<usize>>,
    binary: bool,
}

impl NatMatrix {
    pub fn new(rows: Vec<Vec<usize>>, binary: bool) -> Result<Self, TableauError> {
        if binary {
            for (i, row) in rows.iter().enumerate() {
                if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v > 1) {
                    return Err(TableauError::NotBinary { row: i, col: j, value: v });
                }
            }
        }
        Ok(Self::trimmed(rows, binary))
    }

    pub fn zero(binary: bool) -> Self {
        NatMatrix { rows: Vec::new(), binary }
    }

    fn trimmed(mut rows: Vec<Vec<usize>>, binary: bool) -> Self {
        while rows.last().is_some_and(|r| r.iter().all(|&v| v == 0)) {
            rows.pop();
        }
        let width = rows.iter().map(|r| r.iter().rposition(|&v| v != 0).map_or(0, |p| p + 1)).max().unwrap_or(0);
        for r in &mut rows {
            r.resize(width, 0);
        }
        NatMatrix { rows, binary }
    }

    pub fn is_binary(&self) -> bool {
        self.binary
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    pub fn row(&self, i: usize) -> Composition {
        Composition::new(self.rows.get(i).cloned().unwrap_or_default())
    }

    pub fn column(&self, j: usize) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.get(j).copied().unwrap_or(0)).collect())
    }

    pub fn transpose(&self) -> NatMatrix {
        let rows = (0..self.ncols()).map(|j| self.rows.iter().map(|r| r[j]).collect()).collect();
        NatMatrix { rows, binary: self.binary }
    }

    pub fn row_sums(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.iter().sum()).collect())
    }

    pub fn col_sums(&self) -> Composition {
        Composition::new((0..self.ncols()).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect())
    }

    /// Parses `"1,0,1;0,2,0"`.
    pub fn parse(s: &str, binary: bool) -> Result<Self, TableauError> {
        let s = s.trim();
        let parse_err = |reason: String| TableauError::Parse { input: s.to_string(), reason };
        if s.is_empty() {
            return Ok(NatMatrix::zero(binary));
        }
        let rows: Vec<Vec<usize>> = s
            .split(';')
            .map(|row| {
                row.split(',').map(|v| v.trim().parse::<usize>().map_err(|e| parse_err(e.to_string()))).collect()
            })
            .collect::<Result<_, _>>()?;
        if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
            return Err(TableauError::Ragged);
        }
        NatMatrix::new(rows, binary)
    }
}

impl fmt::Display for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

pub fn row_sums(m: &NatMatrix) -> Composition {
    m.row_sums()
}

pub fn col_sums(m: &NatMatrix) -> Composition {
    m.col_sums()
}

/// Smallest row (lexicographically) with the given total under `caps`.
fn first_row(total: usize, caps: &[usize], binary: bool) -> Option<Vec<usize>> {
    let mut row = vec![0; caps.len()];
    fill_from_end(&mut row, 0, total, caps, binary).then_some(row)
}

fn fill_from_end(row: &mut [usize], from: usize, mut amount: usize, caps: &[usize], binary: bool) -> bool {
    for j in (from..row.len()).rev() {
        let cap = if binary { caps[j].min(1) } else { caps[j] };
        row[j] = amount.min(cap);
        amount -= row[j];
    }
    amount == 0
}

/// Advances `row` to its lexicographic successor with the same total.
fn next_row(row: &mut [usize], caps: &[usize], binary: bool) -> bool {
    let w = row.len();
    let mut suffix = 0;
    for p in (0..w).rev() {
        let cap = if binary { caps[p].min(1) } else { caps[p] };
        if suffix > 0 && row[p] < cap {
            row[p] += 1;
            return fill_from_end(row, p + 1, suffix - 1, caps, binary);
        }
        suffix += row[p];
    }
    false
}

/// Gale–Ryser test: can the remaining row sums be realised as a 0/1 matrix
/// with the remaining column sums?
fn binary_feasible(rows: &[usize], cols: &[usize]) -> bool {
    let mut r = rows.to_vec();
    r.sort_unstable_by(|a, b| b.cmp(a));
    let mut acc = 0;
    for (k, &rk) in r.iter().enumerate() {
        acc += rk;
        let bound: usize = cols.iter().map(|&c| c.min(k + 1)).sum();
        if acc > bound {
            return false;
        }
    }
    acc == cols.iter().sum::<usize>()
}

/// Lazily enumerates `M(α, β)` (or its binary subset) in lexicographic order
/// of the row-major entry list.
#[derive(Debug, Clone)]
pub struct MatrixIter {
    alpha: Vec<usize>,
    binary: bool,
    rows: Vec<Vec<usize>>,
    // remaining[i]: column sums still to be placed in rows i..
    remaining: Vec<Vec<usize>>,
    started: bool,
    done: bool,
}

impl MatrixIter {
    fn new(alpha: &Composition, beta: &Composition, binary: bool) -> Self {
        MatrixIter {
            alpha: alpha.parts().to_vec(),
            binary,
            rows: Vec::new(),
            remaining: vec![beta.parts().to_vec()],
            started: false,
            done: alpha.size() != beta.size(),
        }
    }

    fn feasible(&self, i: usize) -> bool {
        if !self.binary {
            return true;
        }
        let cols: Vec<usize> = self.remaining[i].iter().zip(&self.rows[i]).map(|(c, v)| c - v).collect();
        binary_feasible(&self.alpha[i + 1..], &cols)
    }

    fn search(&mut self, mut i: usize, mut advancing: bool) -> bool {
        let m = self.alpha.len();
        loop {
            if i == m {
                return true;
            }
            let caps = self.remaining[i].clone();
            let mut ok = if advancing {
                next_row(&mut self.rows[i], &caps, self.binary)
            } else {
                match first_row(self.alpha[i], &caps, self.binary) {
                    Some(r) => {
                        self.rows.truncate(i);
                        self.rows.push(r);
                        true
                    }
                    None => false,
                }
            };
            while ok && !self.feasible(i) {
                ok = next_row(&mut self.rows[i], &caps, self.binary);
            }
            if ok {
                let rest = caps.iter().zip(&self.rows[i]).map(|(c, v)| c - v).collect();
                self.remaining.truncate(i + 1);
                self.remaining.push(rest);
                i += 1;
                advancing = false;
            } else if i == 0 {
                return false;
            } else {
                self.rows.truncate(i);
                i -= 1;
                advancing = true;
            }
        }
    }
}

impl Iterator for MatrixIter {
    type Item = NatMatrix;

    fn next(&mut self) -> Option<NatMatrix> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.search(0, false)
        } else if self.alpha.is_empty() {
            false
        } else {
            self.search(self.alpha.len() - 1, true)
        };
        if found {
            Some(NatMatrix::trimmed(self.rows.clone(), self.binary))
        } else {
            self.done = true;
            None
        }
    }
}

/// Matrices with row sums `α` and column sums `β`.
pub fn enumerate_matrices(alpha: &Composition, beta: &Composition, binary: bool) -> MatrixIter {
    MatrixIter::new(alpha, beta, binary)
}

pub fn count_matrices(alpha: &Composition, beta: &Composition, binary: bool) -> usize {
    enumerate_matrices(alpha, beta, binary).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableauMode {
    /// Adjacent shapes differ by horizontal strips.
    #[serde(rename = "col")]
    ColumnStrict,
    /// Adjacent shapes differ by vertical strips.
    #[serde(rename = "row")]
    RowStrict,
}

impl TableauMode {
    fn strip(self) -> StripKind {
        match self {
            TableauMode::ColumnStrict => StripKind::Horizontal,
            TableauMode::RowStrict => StripKind::Vertical,
        }
    }

    fn flipped(self) -> Self {
        match self {
            TableauMode::ColumnStrict => TableauMode::RowStrict,
            TableauMode::RowStrict => TableauMode::ColumnStrict,
        }
    }
}

/// A chain of partitions `λ⁽⁰⁾ ⊆ λ⁽¹⁾ ⊆ …` joined by strips.
///
/// The chain is stored without its stationary tail, so the last two stored
/// shapes differ unless the chain has a single shape. Reverse tableaux are
/// not modelled; a reversed chain read back to front is an ordinary one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct SemistandardTableau {
    chain: Vec<Partition>,
    mode: TableauMode,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    chain: Vec<Partition>,
    mode: TableauMode,
}

impl TryFrom<TableauRepr> for SemistandardTableau {
    type Error = TableauError;

    fn try_from(r: TableauRepr) -> Result<Self, Self::Error> {
        tableau_from_chain(r.chain, r.mode)
    }
}

impl From<SemistandardTableau> for TableauRepr {
    fn from(t: SemistandardTableau) -> Self {
        TableauRepr { chain: t.chain, mode: t.mode }
    }
}

pub fn tableau_from_chain(mut chain: Vec<Partition>, mode: TableauMode) -> Result<SemistandardTableau, TableauError> {
    if chain.is_empty() {
        return Err(TableauError::EmptyChain);
    }
    let kind = mode.strip();
    for (index, w) in chain.windows(2).enumerate() {
        if !strip_check(&w[0], &w[1], kind) {
            return Err(TableauError::NotAStrip {
                index,
                from: w[0].to_string(),
                to: w[1].to_string(),
                kind: match kind {
                    StripKind::Horizontal => "horizontal",
                    StripKind::Vertical => "vertical",
                },
            });
        }
    }
    while chain.len() > 1 && chain[chain.len() - 1] == chain[chain.len() - 2] {
        chain.pop();
    }
    Ok(SemistandardTableau { chain, mode })
}

impl SemistandardTableau {
    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn mode(&self) -> TableauMode {
        self.mode
    }

    /// `λ⁽ⁱ⁾`, constant past the stored chain.
    pub fn shape_at(&self, i: usize) -> &Partition {
        &self.chain[i.min(self.chain.len() - 1)]
    }

    pub fn inner(&self) -> &Partition {
        &self.chain[0]
    }

    pub fn outer(&self) -> &Partition {
        &self.chain[self.chain.len() - 1]
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.outer().clone(), self.inner().clone()).expect("chain is increasing")
    }

    /// `weight_i = |λ⁽ⁱ⁺¹⁾/λ⁽ⁱ⁾|`.
    pub fn weight(&self) -> Composition {
        Composition::new(self.chain.windows(2).map(|w| w[1].size() - w[0].size()).collect())
    }

    /// Entry of the cell `(i, j)` of the skew diagram, if the cell belongs to it.
    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        if j < self.inner().get(i) || j >= self.outer().get(i) {
            return None;
        }
        (0..self.chain.len() - 1).find(|&k| j < self.chain[k + 1].get(i))
    }

    fn reading_word(&self) -> Vec<usize> {
        self.shape().cells().filter_map(|(i, j)| self.entry(i, j)).collect()
    }

    fn require_column_strict(&self) -> Result<(), TableauError> {
        match self.mode {
            TableauMode::ColumnStrict => Ok(()),
            TableauMode::RowStrict => Err(TableauError::WrongMode("column-strict")),
        }
    }

    /// `M_{i,j} = (λ⁽ʲ⁺¹⁾ − λ⁽ʲ⁾)_i`.
    pub fn integral_encoding(&self) -> Result<NatMatrix, TableauError> {
        self.require_column_strict()?;
        let rows = (0..self.outer().len())
            .map(|i| self.chain.windows(2).map(|w| w[1].get(i) - w[0].get(i)).collect())
            .collect();
        Ok(NatMatrix::trimmed(rows, false))
    }

    /// `M'_{i,j} = ((λ⁽ⁱ⁺¹⁾)ᵗ − (λ⁽ⁱ⁾)ᵗ)_j`.
    pub fn binary_encoding(&self) -> Result<NatMatrix, TableauError> {
        self.require_column_strict()?;
        let conj: Vec<Partition> = self.chain.iter().map(Partition::conjugate).collect();
        let width = self.outer().get(0);
        let rows = conj.windows(2).map(|w| (0..width).map(|j| w[1].get(j) - w[0].get(j)).collect()).collect();
        Ok(NatMatrix::trimmed(rows, true))
    }

    /// Transposes every shape of the chain; the mode flips and the weight is kept.
    pub fn transpose(&self) -> SemistandardTableau {
        SemistandardTableau { chain: self.chain.iter().map(Partition::conjugate).collect(), mode: self.mode.flipped() }
    }

    /// The filled diagram, one line per row, with `·` for cells of the inner shape.
    pub fn render(&self) -> Result<String, TableauError> {
        self.require_column_strict()?;
        let wide = self.chain.len() > 11;
        let lines: Vec<String> = (0..self.outer().len())
            .map(|i| {
                let skipped = "·".repeat(self.inner().get(i));
                let entries: Vec<String> = (self.inner().get(i)..self.outer().get(i))
                    .map(|j| self.entry(i, j).expect("cell in skew diagram").to_string())
                    .collect();
                if wide {
                    format!("{skipped}{}", entries.join(" "))
                } else {
                    format!("{skipped}{}", entries.concat())
                }
            })
            .collect();
        Ok(lines.join("\n"))
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.chain.iter().enumerate() {
            if i > 0 {
                f.write_str(match self.mode {
                    TableauMode::ColumnStrict => " <h ",
                    TableauMode::RowStrict => " <v ",
                })?;
            }
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

impl FromStr for SemistandardTableau {
    type Err = TableauError;

    /// Tableau JSON, `{"chain": [[4,1],[5,2]], "mode": "col"}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_str(s).map_err(|e| TableauError::Parse { input: s.to_string(), reason: e.to_string() })
    }
}

pub fn transpose_tableau(t: &SemistandardTableau) -> SemistandardTableau {
    t.transpose()
}

pub fn render_tableau(t: &SemistandardTableau) -> Result<String, TableauError> {
    t.render()
}

pub fn integral_encoding(t: &SemistandardTableau) -> Result<NatMatrix, TableauError> {
    t.integral_encoding()
}

pub fn binary_encoding(t: &SemistandardTableau) -> Result<NatMatrix, TableauError> {
    t.binary_encoding()
}

fn chain_step(index: usize, parts: Vec<usize>) -> Result<Partition, TableauError> {
    Partition::new(parts.clone()).map_err(|_| TableauError::NotAPartition { index, parts })
}

/// Rebuilds a column-strict tableau from its integral encoding, adding
/// column `j` of `M` to `λ⁽ʲ⁾`.
pub fn decode_integral(m: &NatMatrix, inner: &Partition) -> Result<SemistandardTableau, TableauError> {
    let mut chain = vec![inner.clone()];
    for j in 0..m.ncols() {
        let prev = &chain[j];
        let parts = (0..prev.len().max(m.nrows())).map(|i| prev.get(i) + m.get(i, j)).collect();
        chain.push(chain_step(j, parts)?);
    }
    tableau_from_chain(chain, TableauMode::ColumnStrict)
}

/// Rebuilds a column-strict tableau from its binary encoding, adding row
/// `i` of `M'` to the transpose of `λ⁽ⁱ⁾`.
pub fn decode_binary(m: &NatMatrix, inner: &Partition) -> Result<SemistandardTableau, TableauError> {
    for i in 0..m.nrows() {
        if let Some(j) = (0..m.ncols()).find(|&j| m.get(i, j) > 1) {
            return Err(TableauError::NotBinary { row: i, col: j, value: m.get(i, j) });
        }
    }
    let mut conj = vec![inner.conjugate()];
    for i in 0..m.nrows() {
        let prev = &conj[i];
        let parts = (0..prev.len().max(m.ncols())).map(|j| prev.get(j) + m.get(i, j)).collect();
        conj.push(chain_step(i, parts)?);
    }
    tableau_from_chain(conj.iter().map(Partition::conjugate).collect(), TableauMode::ColumnStrict)
}

/// Horizontal strips `ν ≤h ν'` with `ν' ⊆ outer` and `|ν'/ν| = size`.
fn horizontal_extensions(nu: &Partition, outer: &Partition, size: usize) -> Vec<Partition> {
    fn rec(nu: &Partition, outer: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("rows stay weakly decreasing"));
            }
            return;
        }
        let lo = nu.get(i);
        let hi = if i == 0 { outer.get(0) } else { outer.get(i).min(nu.get(i - 1)) };
        for v in lo..=hi.min(lo + left) {
            cur.push(v);
            rec(nu, outer, i + 1, left - (v - lo), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nu.len() <= outer.len() {
        rec(nu, outer, 0, size, &mut Vec::new(), &mut out);
    }
    out
}

/// All column-strict tableaux of the given shape and weight, ordered
/// lexicographically by their row-major entry lists.
pub fn enumerate_ssyt(shape: &SkewShape, weight: &Composition) -> std::vec::IntoIter<SemistandardTableau> {
    fn rec(outer: &Partition, weight: &Composition, chain: &mut Vec<Partition>, out: &mut Vec<SemistandardTableau>) {
        let step = chain.len() - 1;
        if step == weight.len() {
            if chain[step] == *outer {
                out.push(tableau_from_chain(chain.clone(), TableauMode::ColumnStrict).expect("strips by construction"));
            }
            return;
        }
        for next in horizontal_extensions(&chain[step], outer, weight.get(step)) {
            chain.push(next);
            rec(outer, weight, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    if shape.size() == weight.size() {
        rec(shape.outer(), weight, &mut vec![shape.inner().clone()], &mut out);
    }
    out.sort_by_cached_key(SemistandardTableau::reading_word);
    out.into_iter()
}

pub fn count_ssyt(shape: &SkewShape, weight: &Composition) -> usize {
    enumerate_ssyt(shape, weight).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn example_chain() -> Vec<Partition> {
        [
            &[4, 1][..],
            &[5, 2],
            &[5, 3, 2],
            &[6, 3, 3, 1],
            &[6, 4, 3, 2],
            &[7, 5, 4, 3],
            &[9, 5, 5, 3, 1],
            &[9, 8, 5, 5, 3],
        ]
        .iter()
        .map(|parts| p(parts))
        .collect()
    }

    const M: &str = "1,0,1,0,1,2,0;1,1,0,1,1,0,3;0,2,1,0,1,1,0;0,0,1,1,1,0,2;0,0,0,0,0,1,2";
    const M_PRIME: &str = "0,1,0,0,1,0,0,0,0;1,1,1,0,0,0,0,0,0;1,0,1,0,0,1,0,0,0;0,1,0,1,0,0,0,0,0;\
                           0,0,1,1,1,0,1,0,0;1,0,0,0,1,0,0,1,1;0,1,1,1,1,1,1,1,0";

    #[test]
    fn margins() {
        let m = NatMatrix::parse(M, false).unwrap();
        assert_eq!(row_sums(&m), c(&[5, 7, 5, 5, 3]));
        assert_eq!(col_sums(&m), c(&[2, 3, 3, 2, 4, 4, 7]));
        let z = NatMatrix::zero(false);
        assert_eq!((z.row_sums(), z.col_sums()), (c(&[]), c(&[])));
        assert_eq!(m.to_string(), M);
    }

    #[test]
    fn matrix_parsing_errors() {
        assert!(matches!(NatMatrix::parse("1,2;3", false), Err(TableauError::Ragged)));
        assert!(matches!(NatMatrix::parse("1,2", true), Err(TableauError::NotBinary { .. })));
        assert!(NatMatrix::parse("1,a", false).is_err());
        assert_eq!(NatMatrix::parse("0,0;0,0", false).unwrap(), NatMatrix::zero(false));
    }

    #[test]
    fn matrix_counts() {
        assert_eq!(count_matrices(&c(&[1, 1]), &c(&[1, 1]), true), 2);
        let only: Vec<_> = enumerate_matrices(&c(&[2]), &c(&[1, 1]), false).collect();
        assert_eq!(only, vec![NatMatrix::parse("1,1", false).unwrap()]);
        assert_eq!(count_matrices(&c(&[1]), &c(&[2]), false), 0);
        assert_eq!(count_matrices(&c(&[1]), &c(&[2]), true), 0);
        assert_eq!(count_matrices(&c(&[]), &c(&[]), false), 1);
        // 2x2 with margins (2,1),(1,2): [[0,2],[1,0]], [[1,1],[0,1]]
        assert_eq!(count_matrices(&c(&[2, 1]), &c(&[1, 2]), false), 2);
        assert_eq!(count_matrices(&c(&[2, 1]), &c(&[1, 2]), true), 1);
        // interior zero rows and columns
        assert_eq!(count_matrices(&c(&[1, 0, 1]), &c(&[0, 2]), false), 1);
    }

    #[test]
    fn matrices_come_out_in_lex_order() {
        let ms: Vec<Vec<usize>> = enumerate_matrices(&c(&[2, 2]), &c(&[2, 1, 1]), false)
            .map(|m| m.rows().iter().flat_map(|r| r.iter().copied().chain(std::iter::repeat(0)).take(3)).collect())
            .collect();
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ms.len(), 4);
    }

    #[test]
    fn example_tableau() {
        let t = tableau_from_chain(example_chain(), TableauMode::ColumnStrict).unwrap();
        assert_eq!(t.weight(), c(&[2, 3, 3, 2, 4, 4, 7]));
        assert_eq!(t.shape().to_string(), "9,8,5,5,3/4,1");
        let m = t.integral_encoding().unwrap();
        let mp = t.binary_encoding().unwrap();
        assert_eq!(m, NatMatrix::parse(M, false).unwrap());
        assert_eq!(mp, NatMatrix::parse(M_PRIME, true).unwrap());
        assert_eq!(decode_integral(&m, &p(&[4, 1])).unwrap(), t);
        assert_eq!(decode_binary(&mp, &p(&[4, 1])).unwrap(), t);
        assert_eq!(t.render().unwrap(), "····02455\n·0134666\n11245\n23466\n566");
        let tt = t.transpose();
        assert_eq!(tt.mode(), TableauMode::RowStrict);
        assert_eq!(tt.weight(), t.weight());
        assert_eq!(tt.shape(), t.shape().conjugate());
        assert_eq!(tt.transpose(), t);
        assert!(tt.integral_encoding().is_err());
    }

    #[test]
    fn chain_edge_cases() {
        let t = tableau_from_chain(vec![p(&[2, 1])], TableauMode::ColumnStrict).unwrap();
        assert_eq!(t.weight(), c(&[]));
        assert_eq!(t.shape().size(), 0);
        let err = tableau_from_chain(vec![p(&[1]), p(&[3, 2])], TableauMode::ColumnStrict).unwrap_err();
        assert!(matches!(err, TableauError::NotAStrip { index: 0, .. }));
        assert_eq!(tableau_from_chain(vec![], TableauMode::RowStrict), Err(TableauError::EmptyChain));
        let trimmed = tableau_from_chain(vec![p(&[]), p(&[1]), p(&[1])], TableauMode::ColumnStrict).unwrap();
        assert_eq!(trimmed.chain().len(), 2);
        let e = tableau_from_chain(vec![Partition::empty()], TableauMode::ColumnStrict).unwrap();
        assert_eq!(e.transpose().transpose(), e);
    }

    #[test]
    fn single_cell() {
        let t = tableau_from_chain(vec![p(&[]), p(&[1])], TableauMode::ColumnStrict).unwrap();
        assert_eq!(t.integral_encoding().unwrap().rows(), &[vec![1]]);
        assert_eq!(t.binary_encoding().unwrap().rows(), &[vec![1]]);
        assert_eq!(t.render().unwrap(), "0");
    }

    #[test]
    fn decoding_errors() {
        // column 0 adds a cell to row 1 of (1): (1,1) is fine, then (1,1)+(0,2)=(1,3) is not a partition
        let m = NatMatrix::parse("0,0;1,2", false).unwrap();
        assert!(matches!(decode_integral(&m, &p(&[1])), Err(TableauError::NotAPartition { index: 1, .. })));
        // () -> (1,1) puts two cells in one column
        let m = NatMatrix::parse("1;1", false).unwrap();
        assert!(matches!(decode_integral(&m, &p(&[])), Err(TableauError::NotAStrip { index: 0, .. })));
        let z = decode_integral(&NatMatrix::zero(false), &p(&[3, 2])).unwrap();
        assert_eq!(z.chain(), &[p(&[3, 2])]);
        assert!(matches!(
            decode_binary(&NatMatrix::parse("2", false).unwrap(), &p(&[])),
            Err(TableauError::NotBinary { .. })
        ));
    }

    #[test]
    fn ssyt_counts() {
        let s21 = SkewShape::straight(p(&[2, 1]));
        assert_eq!(count_ssyt(&s21, &c(&[1, 1, 1])), 2);
        assert_eq!(count_ssyt(&SkewShape::straight(p(&[1])), &c(&[1])), 1);
        assert_eq!(count_ssyt(&s21, &c(&[3])), 0);
        // entries 0,1,2 in shape (2,1): rows "01/2" and "02/1"
        let renders: Vec<String> = enumerate_ssyt(&s21, &c(&[1, 1, 1])).map(|t| t.render().unwrap()).collect();
        assert_eq!(renders, vec!["01\n2", "02\n1"]);
    }

    #[test]
    fn skew_render_round_trip() {
        let shape = SkewShape::new(p(&[2, 2]), p(&[1])).unwrap();
        let all: Vec<_> = enumerate_ssyt(&shape, &c(&[1, 1, 1])).collect();
        assert_eq!(all.len(), 2);
        let first = &all[0];
        assert_eq!(first.render().unwrap(), "·0\n12");
        let m = first.integral_encoding().unwrap();
        assert_eq!(decode_integral(&m, &p(&[1])).unwrap().render().unwrap(), "·0\n12");
    }

    #[test]
    fn tableau_json() {
        let t = tableau_from_chain(example_chain(), TableauMode::ColumnStrict).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with(r#"{"chain":[[4,1],[5,2],"#));
        assert!(json.ends_with(r#""mode":"col"}"#));
        assert_eq!(json.parse::<SemistandardTableau>().unwrap(), t);
        assert!(r#"{"chain":[[1],[3,2]],"mode":"col"}"#.parse::<SemistandardTableau>().is_err());
    }
}
