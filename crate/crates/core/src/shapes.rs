//! Compositions, partitions and the relations between their diagrams.
//!
//! Every sequence here is finitely supported: stored values omit trailing
//! zeros and indexing past the stored prefix yields zero.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: Partition, inner: Partition },
    #[error("dominance compares partitions of equal size, got {left} and {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("mapping {0:?} is not a bijection of its prefix")]
    NotBijective(Vec<usize>),
    #[error("window length {length} is shorter than the {stored} stored parts")]
    WindowTooShort { length: usize, stored: usize },
    #[error("window [{lo}, {hi}] does not cover the boundary range [{need_lo}, {need_hi}]")]
    WindowTooNarrow { lo: i64, hi: i64, need_lo: i64, need_hi: i64 },
    #[error("edge word has {ones} one-bits at non-negative coordinates but {zeros} zero-bits at negative ones")]
    UnbalancedEdges { ones: usize, zeros: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

fn parse_error(input: &str, reason: impl Into<String>) -> ShapeError {
    ShapeError::Parse { input: input.to_string(), reason: reason.into() }
}

fn parse_parts(s: &str) -> Result<Vec<usize>, ShapeError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse::<usize>().map_err(|e| parse_error(s, e.to_string()))).collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn strip_zeros(mut parts: Vec<usize>) -> Vec<usize> {
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// A finitely supported sequence of naturals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts: strip_zeros(parts) }
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    /// The binary partition `1^d`.
    pub fn ones(d: usize) -> Self {
        Composition { parts: vec![1; d] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i`; zero beyond the stored prefix.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of stored parts (index of the last nonzero part plus one).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_binary(&self) -> bool {
        self.parts.iter().all(|&p| p < 2)
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The first `n` parts, zero padded.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self.get(i)).collect()
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Composition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_parts(s).map(Composition::new)
    }
}

/// Compositions of `d` supported on the first `n` indices, in lexicographic
/// order of their padded part lists.
pub fn compositions(d: usize, n: usize) -> Vec<Composition> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rest);
            out.push(Composition::new(cur.clone()));
            cur.pop();
            return;
        }
        for v in 0..=rest {
            cur.push(v);
            rec(rest - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Composition::empty());
        }
    } else {
        rec(d, n, &mut Vec::new(), &mut out);
    }
    out
}

/// A weakly decreasing composition.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        let parts = strip_zeros(parts);
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Ok(Partition { parts })
        } else {
            Err(ShapeError::NotWeaklyDecreasing(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn ones(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts: strip_zeros(parts) }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
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

    pub fn as_composition(&self) -> Composition {
        Composition { parts: self.parts.clone() }
    }

    /// Transpose partition: part `j` is the length of column `j` of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.get(0);
        let parts = (0..width).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Whether the diagram of `self` contains the diagram of `inner`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// The squares `(row, col)` of the diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// All partitions of `d`, in reverse lexicographic order.
    pub fn all_of_size(d: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`, including `self` and the empty partition.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &Partition, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            let cap = if i == 0 { outer.get(0) } else { cur[i - 1].min(outer.get(i)) };
            for v in 0..=cap {
                cur.push(v);
                rec(outer, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ShapeError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl TryFrom<Composition> for Partition {
    type Error = ShapeError;

    fn try_from(c: Composition) -> Result<Self, Self::Error> {
        Partition::new(c.parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_parts(s)?)
    }
}

/// Reverse lexicographic order on partitions: `(3) < (2,1) < (1,1,1)`.
pub fn revlex(a: &Partition, b: &Partition) -> Ordering {
    b.parts.cmp(&a.parts)
}

/// The skew shape `outer/inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if outer.contains(&inner) {
            Ok(SkewShape { outer, inner })
        } else {
            Err(ShapeError::NotContained { outer, inner })
        }
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Cells of `[outer] − [inner]`, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outer.cells().filter(|&(i, j)| j >= self.inner.get(i))
    }

    /// `outer − inner` as a composition (row lengths of the skew diagram).
    pub fn row_lengths(&self) -> Composition {
        Composition::new((0..self.outer.len()).map(|i| self.outer.get(i) - self.inner.get(i)).collect())
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    /// `"9,8,5,5,3/4,1"`; a bare partition means an empty inner shape.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            Some((outer, inner)) => SkewShape::new(outer.parse()?, inner.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Parity of the permutation sorting `values` into the order given by `cmp`,
/// computed by counting inversions with a merge sort. Returns `+1` or `-1`.
pub(crate) fn sort_sign_by<T: Clone>(values: &[T], cmp: impl Fn(&T, &T) -> Ordering + Copy) -> i8 {
    fn merge_count<T: Clone>(v: &mut [T], buf: &mut Vec<T>, cmp: impl Fn(&T, &T) -> Ordering + Copy) -> usize {
        let n = v.len();
        if n < 2 {
            return 0;
        }
        let mid = n / 2;
        let mut inv = merge_count(&mut v[..mid], buf, cmp) + merge_count(&mut v[mid..], buf, cmp);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < n {
            if cmp(&v[j], &v[i]) == Ordering::Less {
                inv += mid - i;
                buf.push(v[j].clone());
                j += 1;
            } else {
                buf.push(v[i].clone());
                i += 1;
            }
        }
        buf.extend_from_slice(&v[i..mid]);
        buf.extend_from_slice(&v[j..n]);
        v.clone_from_slice(buf);
        inv
    }
    let mut v = values.to_vec();
    let inv = merge_count(&mut v, &mut Vec::with_capacity(values.len()), cmp);
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A permutation of ℕ fixing everything outside a finite prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// `map[i]` is the image of `i`; indices past the prefix are fixed.
    pub fn new(map: Vec<usize>) -> Result<Self, ShapeError> {
        let mut seen = vec![false; map.len()];
        for &m in &map {
            if m >= map.len() || seen[m] {
                return Err(ShapeError::NotBijective(map));
            }
            seen[m] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity() -> Self {
        Permutation { map: Vec::new() }
    }

    pub fn transposition(a: usize, b: usize) -> Self {
        let mut map: Vec<usize> = (0..=a.max(b)).collect();
        map.swap(a, b);
        Permutation { map }
    }

    pub fn image(&self, i: usize) -> usize {
        self.map.get(i).copied().unwrap_or(i)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &m) in self.map.iter().enumerate() {
            inv[m] = i;
        }
        Permutation { map: inv }
    }

    /// `ε(σ)`, the sign, by inversion count.
    pub fn sign(&self) -> i8 {
        sort_sign_by(&self.map, |a, b| a.cmp(b))
    }

    /// Permutes parts: result part `i` is `α_{σ⁻¹(i)}`.
    pub fn apply(&self, alpha: &Composition) -> Composition {
        let n = self.map.len().max(alpha.len());
        let mut out = vec![0; n];
        for (j, slot) in (0..n).map(|j| (j, self.image(j))) {
            out[slot] = alpha.get(j);
        }
        Composition::new(out)
    }
}

pub fn apply_permutation(sigma: &Permutation, alpha: &Composition) -> Composition {
    sigma.apply(alpha)
}

/// `α⁺` together with the sign of a stable sorting permutation of the stored prefix.
pub fn sort_to_partition(alpha: &Composition) -> (Partition, i8) {
    let sign = sort_sign_by(alpha.parts(), |a, b| b.cmp(a));
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    (Partition::from_sorted(parts), sign)
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    lambda.contains(mu)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

/// Whether `λ/μ` is a horizontal (at most one cell per column) or vertical
/// (at most one cell per row) strip.
pub fn strip_check(mu: &Partition, lambda: &Partition, kind: StripKind) -> bool {
    match kind {
        StripKind::Vertical => lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.get(i) - mu.get(i) < 2),
        StripKind::Horizontal => {
            (0..lambda.len().max(mu.len())).all(|i| lambda.get(i + 1) <= mu.get(i) && mu.get(i) <= lambda.get(i))
        }
    }
}

/// Dominance order on partitions of equal size.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool, ShapeError> {
    if mu.size() != lambda.size() {
        return Err(ShapeError::SizeMismatch { left: mu.size(), right: lambda.size() });
    }
    let (mut sm, mut sl) = (0, 0);
    for i in 0..mu.len().max(lambda.len()) {
        sm += mu.get(i);
        sl += lambda.get(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Beta numbers `α_i − 1 − i` over a finite window; the tail beyond the
/// window continues as `−1 − i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSequence {
    window: Vec<i64>,
}

impl BetaSequence {
    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn get(&self, i: usize) -> i64 {
        self.window.get(i).copied().unwrap_or(-1 - i as i64)
    }
}

pub fn beta_window(alpha: &Composition, length: usize) -> Result<BetaSequence, ShapeError> {
    if length < alpha.len() {
        return Err(ShapeError::WindowTooShort { length, stored: alpha.len() });
    }
    let window = (0..length).map(|i| alpha.get(i) as i64 - 1 - i as i64).collect();
    Ok(BetaSequence { window })
}

/// The boundary of a diagram as a 0/1 word indexed by diagonal coordinate:
/// 1 at vertical segments, 0 at horizontal ones. Coordinates below the
/// window read 1, coordinates above read 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSequence {
    offset: i64,
    bits: Vec<bool>,
}

impl EdgeSequence {
    pub fn new(offset: i64, bits: Vec<bool>) -> Self {
        EdgeSequence { offset, bits }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Last covered coordinate; `offset − 1` for an empty word.
    pub fn end(&self) -> i64 {
        self.offset + self.bits.len() as i64 - 1
    }

    pub fn bit(&self, d: i64) -> bool {
        if d < self.offset {
            true
        } else {
            self.bits.get((d - self.offset) as usize).copied().unwrap_or(false)
        }
    }

    /// Same sequence over the wider window `[lo, hi]`.
    pub fn widened(&self, lo: i64, hi: i64) -> EdgeSequence {
        let lo = lo.min(self.offset);
        let hi = hi.max(self.end());
        EdgeSequence { offset: lo, bits: (lo..=hi).map(|d| self.bit(d)).collect() }
    }
}

impl fmt::Display for EdgeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}:", self.offset)?;
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for EdgeSequence {
    type Err = ShapeError;

    /// `"@-9:1111010110001001000"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().strip_prefix('@').ok_or_else(|| parse_error(s, "missing '@'"))?;
        let (offset, word) = body.split_once(':').ok_or_else(|| parse_error(s, "missing ':'"))?;
        let offset = offset.parse::<i64>().map_err(|e| parse_error(s, e.to_string()))?;
        let bits = word
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(parse_error(s, format!("unexpected bit {c:?}"))),
            })
            .collect::<Result<_, _>>()?;
        Ok(EdgeSequence { offset, bits })
    }
}

/// Smallest window `[lo, hi]` holding every non-tail bit of `λ`'s edge sequence.
pub fn edge_window(lambda: &Partition) -> (i64, i64) {
    (-(lambda.len() as i64 + 1), lambda.get(0) as i64 + 1)
}

pub fn edge_sequence(lambda: &Partition) -> EdgeSequence {
    let (lo, hi) = edge_window(lambda);
    edge_sequence_window(lambda, lo, hi).expect("default window covers the boundary")
}

/// Edge sequence over the caller's window, which must contain [`edge_window`].
pub fn edge_sequence_window(lambda: &Partition, lo: i64, hi: i64) -> Result<EdgeSequence, ShapeError> {
    let (need_lo, need_hi) = edge_window(lambda);
    if lo > need_lo || hi < need_hi {
        return Err(ShapeError::WindowTooNarrow { lo, hi, need_lo, need_hi });
    }
    let betas: BTreeSet<i64> = beta_window(&lambda.as_composition(), lambda.len())
        .expect("window covers stored parts")
        .window
        .into_iter()
        .collect();
    let bits = (lo..=hi).map(|d| d < -(lambda.len() as i64) || betas.contains(&d)).collect();
    Ok(EdgeSequence { offset: lo, bits })
}

/// Reads the partition back from its boundary word. The word must be
/// balanced: as many 1-bits at coordinates `≥ 0` as 0-bits below `0`.
pub fn partition_from_edges(edges: &EdgeSequence) -> Result<Partition, ShapeError> {
    let lo = edges.offset.min(0);
    let hi = edges.end().max(-1);
    let ones = (0..=hi).filter(|&d| edges.bit(d)).count();
    let zeros = (lo..0).filter(|&d| !edges.bit(d)).count();
    if ones != zeros {
        return Err(ShapeError::UnbalancedEdges { ones, zeros });
    }
    // 1-bits from the top down are ⟦λ,0⟧ > ⟦λ,1⟧ > …; λ_i = ⟦λ,i⟧ + 1 + i.
    let parts =
        (lo..=hi).rev().filter(|&d| edges.bit(d)).enumerate().map(|(i, d)| (d + 1 + i as i64) as usize).collect();
    Ok(Partition::from_sorted(parts))
}

/// The beta-set window of `λ` of the given length, as a sorted set.
fn beta_set(lambda: &Partition, length: usize) -> Vec<i64> {
    (0..length).map(|i| lambda.get(i) as i64 - 1 - i as i64).collect()
}

/// If `λ/μ` is a `k`-ribbon, its height.
///
/// Uses the beta-set characterisation: the beta sets of `μ` and `λ` agree
/// except that `⟦μ,i₀⟧` is replaced by `⟦λ,i₁⟧ = ⟦μ,i₀⟧ + k`, and the
/// height is `i₀ − i₁`.
pub fn ribbon_check(mu: &Partition, lambda: &Partition, k: usize) -> Option<usize> {
    if k == 0 {
        return None;
    }
    // Past this index both sequences continue as −1 − i.
    let length = mu.len().max(lambda.len()) + 1;
    let bm = beta_set(mu, length);
    let bl = beta_set(lambda, length);
    let only_mu: Vec<usize> = (0..length).filter(|&i| !bl.contains(&bm[i])).collect();
    let only_lambda: Vec<usize> = (0..length).filter(|&i| !bm.contains(&bl[i])).collect();
    match (only_mu.as_slice(), only_lambda.as_slice()) {
        (&[i0], &[i1]) if bm[i0] + k as i64 == bl[i1] => Some(i0 - i1),
        _ => None,
    }
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

    #[test]
    fn sorting_compositions() {
        assert_eq!(sort_to_partition(&c(&[0, 5, 2, 0, 0, 1, 7, 0, 2])).0, p(&[7, 5, 2, 2, 1]));
        assert_eq!(sort_to_partition(&c(&[0])).0, Partition::empty());
        assert_eq!(sort_to_partition(&c(&[1, 1, 1])), (p(&[1, 1, 1]), 1));
        assert_eq!(sort_to_partition(&c(&[1, 2])).1, -1);
        assert_eq!(sort_to_partition(&c(&[1, 2, 3])).1, -1);
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(c(&[3, 0, 1, 0, 0]), c(&[3, 0, 1]));
        assert_eq!(c(&[3, 0, 1, 0]).len(), 3);
        assert_eq!(c(&[3, 0, 1]).get(10), 0);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn permutations_act_on_parts() {
        let swap = Permutation::transposition(0, 1);
        assert_eq!(swap.apply(&c(&[3, 1])), c(&[1, 3]));
        assert_eq!(Permutation::identity().apply(&c(&[7, 5, 2])), c(&[7, 5, 2]));
        let cycle = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(cycle.apply(&c(&[4, 0, 9])), c(&[9, 4, 0]));
        assert_eq!(cycle.sign(), 1);
        assert_eq!(swap.sign(), -1);
        assert!(matches!(Permutation::new(vec![0, 0]), Err(ShapeError::NotBijective(_))));
        assert!(Permutation::new(vec![2, 0]).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[7, 5, 2, 2, 1]).conjugate(), p(&[5, 4, 2, 2, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::ones(4).conjugate(), p(&[4]));
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[4, 1]), &p(&[9, 8, 5, 5, 3])));
        assert!(!contains(&p(&[2, 2]), &p(&[3, 1])));
        assert!(contains(&p(&[7, 5, 2, 2, 1]), &p(&[7, 5, 2, 2, 1])));
        assert!(!contains(&p(&[1, 1, 1]), &p(&[3, 1])));
    }

    #[test]
    fn strips() {
        let mu = p(&[7, 5, 2, 2, 1]);
        assert!(strip_check(&mu, &p(&[8, 6, 3, 3, 1, 1, 1]), StripKind::Vertical));
        assert!(strip_check(&mu, &p(&[11, 6, 4, 2, 1, 1]), StripKind::Horizontal));
        assert!(!strip_check(&mu, &p(&[11, 6, 4, 2, 1, 1]), StripKind::Vertical));
        assert!(!strip_check(&p(&[1]), &p(&[3, 2]), StripKind::Horizontal));
        assert!(!strip_check(&p(&[2]), &p(&[1, 1]), StripKind::Vertical));
        assert!(!strip_check(&p(&[2]), &p(&[1, 1]), StripKind::Horizontal));
    }

    #[test]
    fn dominance() {
        assert_eq!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])), Ok(true));
        assert_eq!(dominance_leq(&p(&[3, 1]), &p(&[3, 1])), Ok(true));
        assert_eq!(dominance_leq(&p(&[3, 1]), &p(&[2, 2])), Ok(false));
        assert_eq!(dominance_leq(&p(&[3]), &p(&[2, 2])), Err(ShapeError::SizeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn beta_windows() {
        let b = beta_window(&c(&[7, 5, 2, 2, 1]), 7).unwrap();
        assert_eq!(b.window(), &[6, 3, -1, -2, -4, -6, -7]);
        assert_eq!(b.get(9), -10);
        assert_eq!(beta_window(&c(&[]), 3).unwrap().window(), &[-1, -2, -3]);
        assert_eq!(beta_window(&c(&[0, 4]), 3).unwrap().window(), &[-1, 2, -3]);
        assert!(matches!(beta_window(&c(&[1, 1]), 1), Err(ShapeError::WindowTooShort { .. })));
    }

    #[test]
    fn edge_sequences() {
        let e = edge_sequence_window(&p(&[7, 5, 2, 2, 1]), -9, 9).unwrap();
        assert_eq!(e.to_string(), "@-9:1111010110001001000");
        let empty = edge_sequence_window(&Partition::empty(), -3, 2).unwrap();
        assert_eq!(empty.to_string(), "@-3:111000");
        let lambda = p(&[9, 8, 5, 5, 3]);
        assert_eq!(partition_from_edges(&edge_sequence(&lambda)).unwrap(), lambda);
        assert!(edge_sequence_window(&lambda, -3, 20).is_err());
        let parsed: EdgeSequence = "@-9:1111010110001001000".parse().unwrap();
        assert_eq!(partition_from_edges(&parsed).unwrap(), p(&[7, 5, 2, 2, 1]));
        assert!(matches!(partition_from_edges(&"@0:1".parse().unwrap()), Err(ShapeError::UnbalancedEdges { .. })));
        assert!("@x:01".parse::<EdgeSequence>().is_err());
        assert!("@0:012".parse::<EdgeSequence>().is_err());
    }

    #[test]
    fn ribbons() {
        assert_eq!(ribbon_check(&p(&[7, 5, 2, 2, 1]), &p(&[7, 6, 6, 3, 3, 2]), 10), Some(4));
        assert_eq!(ribbon_check(&Partition::empty(), &p(&[3]), 3), Some(0));
        assert_eq!(ribbon_check(&p(&[1]), &p(&[2, 2]), 3), Some(1));
        assert_eq!(ribbon_check(&p(&[1]), &p(&[2, 2]), 2), None);
        assert_eq!(ribbon_check(&Partition::empty(), &p(&[1, 1, 1]), 3), Some(2));
        assert_eq!(ribbon_check(&p(&[2]), &p(&[2]), 1), None);
        // two disconnected cells
        assert_eq!(ribbon_check(&p(&[1]), &p(&[2, 1]), 2), None);
    }

    #[test]
    fn parsing() {
        assert_eq!("7,5,2,2,1".parse::<Partition>().unwrap(), p(&[7, 5, 2, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        let s: SkewShape = "9,8,5,5,3/4,1".parse().unwrap();
        assert_eq!(s.to_string(), "9,8,5,5,3/4,1");
        assert_eq!(s.size(), 25);
        assert!("2,1/3".parse::<SkewShape>().is_err());
        assert!("2,x".parse::<Composition>().is_err());
    }

    #[test]
    fn composition_listing() {
        assert_eq!(compositions(2, 2), vec![c(&[0, 2]), c(&[1, 1]), c(&[2])]);
        assert_eq!(compositions(3, 0), vec![]);
        assert_eq!(compositions(0, 0), vec![c(&[])]);
        assert_eq!(compositions(4, 3).len(), 15);
    }

    #[test]
    fn partition_listing() {
        let sizes: Vec<usize> = (0..=8).map(|d| Partition::all_of_size(d).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all_of_size(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(p(&[2, 1]).subpartitions().len(), 5);
    }
}
