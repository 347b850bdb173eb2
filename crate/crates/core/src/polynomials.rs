//! Sparse multivariate polynomials over ℤ in `X_0, …, X_{n−1}`, with the
//! symmetric and alternating polynomials built from them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::shapes::{compositions, sort_sign_by, Composition, Partition};
use crate::tableaux::count_matrices;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("exponent {exponent} has a part at index >= {nvars}")]
    TooManyParts { exponent: Composition, nvars: usize },
    #[error("power sum p_0 is undefined")]
    PowerSumDegreeZero,
}

/// Exponent vector ordered graded-lexicographically with `X_0 > X_1 > …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Monomial {
    degree: usize,
    exps: Composition,
}

impl Monomial {
    fn new(exps: Composition) -> Self {
        Monomial { degree: exps.size(), exps }
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().max(other.exps.len());
        Monomial {
            degree: self.degree + other.degree,
            exps: Composition::new((0..n).map(|i| self.exps.get(i) + other.exps.get(i)).collect()),
        }
    }

    /// `self / other` if `other` divides `self`.
    fn divide(&self, other: &Monomial) -> Option<Monomial> {
        if other.exps.len() > self.exps.len() {
            return None;
        }
        let parts: Option<Vec<usize>> =
            (0..self.exps.len()).map(|i| self.exps.get(i).checked_sub(other.exps.get(i))).collect();
        parts.map(|p| Monomial::new(Composition::new(p)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` indeterminates with integer coefficients.
///
/// Equality compares terms only: `ℤ[X_n] ⊂ ℤ[X_{n+1}]`.
#[derive(Debug, Clone)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
    nvars: usize,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { terms: BTreeMap::new(), nvars }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(BigInt::one(), nvars)
    }

    pub fn constant(c: impl Into<BigInt>, nvars: usize) -> Self {
        Self::monomial(Composition::empty(), c, nvars)
    }

    /// `c·X^α`; `nvars` is raised to cover `α` if needed.
    pub fn monomial(exps: Composition, c: impl Into<BigInt>, nvars: usize) -> Self {
        let mut p = MultiPoly::zero(nvars.max(exps.len()));
        p.add_term(Monomial::new(exps), c.into());
        p
    }

    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::monomial(Composition::new(e), 1, nvars)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I, nvars: usize) -> Self
    where
        I: IntoIterator<Item = (Composition, C)>,
        C: Into<BigInt>,
    {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            p.nvars = p.nvars.max(e.len());
            p.add_term(Monomial::new(e), c.into());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn with_nvars(mut self, nvars: usize) -> Self {
        let needed = self.terms.keys().map(|m| m.exps.len()).max().unwrap_or(0);
        self.nvars = nvars.max(needed);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|m| m.degree)
    }

    /// Terms in decreasing graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.terms.iter().rev().map(|(m, c)| (&m.exps, c))
    }

    pub fn coeff_of(&self, exps: &Composition) -> BigInt {
        self.terms.get(&Monomial::new(exps.clone())).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(), nvars: self.nvars }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        (0..k).fold(MultiPoly::one(self.nvars), |acc, _| &acc * self)
    }

    /// Sets `X_i := 0`.
    pub fn substitute_zero(&self, i: usize) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().filter(|(m, _)| m.exps.get(i) == 0).map(|(m, c)| (m.clone(), c.clone())).collect(),
            nvars: self.nvars,
        }
    }

    /// Keeps the terms accepted by `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Composition) -> bool) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().filter(|(m, _)| keep(&m.exps)).map(|(m, c)| (m.clone(), c.clone())).collect(),
            nvars: self.nvars,
        }
    }

    fn swapped(exps: &Composition, i: usize) -> Composition {
        let mut v = exps.padded(exps.len().max(i + 2));
        v.swap(i, i + 1);
        Composition::new(v)
    }

    fn within(&self, n: usize) -> bool {
        self.terms.keys().all(|m| m.exps.len() <= n)
    }

    /// Invariance under every permutation of `X_0, …, X_{n−1}`, checked on
    /// the adjacent transpositions that generate `Sym_n`.
    pub fn is_symmetric(&self, n: usize) -> bool {
        self.within(n)
            && self
                .terms
                .iter()
                .all(|(m, c)| (0..n.saturating_sub(1)).all(|i| self.coeff_of(&Self::swapped(&m.exps, i)) == *c))
    }

    /// Each adjacent transposition acts as multiplication by `−1`; in
    /// particular no term has two equal exponents.
    pub fn is_alternating(&self, n: usize) -> bool {
        self.within(n)
            && self
                .terms
                .iter()
                .all(|(m, c)| (0..n.saturating_sub(1)).all(|i| self.coeff_of(&Self::swapped(&m.exps, i)) == -c))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(e, c)| {
                    let coeff = c.to_i128().map_or_else(|| Value::String(c.to_string()), |v| json!(v));
                    json!({ "coeff": coeff, "exp": e.padded(self.nvars.max(e.len())) })
                })
                .collect(),
        )
    }
}

impl fmt::Display for MultiPoly {
    /// `c*X0^a0*X1^a1 + …` in decreasing graded-lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, &a) in e.parts().iter().enumerate().filter(|(_, &a)| a > 0) {
                write!(f, "*X{i}^{a}")?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(), nvars: self.nvars }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars.max(rhs.nvars));
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.times(b), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

pub fn poly_add(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    p + q
}

pub fn poly_mul(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    p * q
}

pub fn substitute_zero(p: &MultiPoly, i: usize) -> MultiPoly {
    p.substitute_zero(i)
}

/// Distinct rearrangements of `parts`, in lexicographic order.
fn multiset_permutations(parts: &[usize]) -> Vec<Vec<usize>> {
    fn rec(counts: &mut BTreeMap<usize, usize>, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let keys: Vec<usize> = counts.iter().filter(|(_, &n)| n > 0).map(|(&k, _)| k).collect();
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            cur.push(k);
            rec(counts, left - 1, cur, out);
            cur.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
    let mut counts = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    rec(&mut counts, parts.len(), &mut Vec::new(), &mut out);
    out
}

/// `m_λ[X_n]`: the sum of the distinct monomials in the orbit of `X^λ`.
pub fn monomial_symmetric(lambda: &Partition, n: usize) -> MultiPoly {
    if lambda.len() > n {
        return MultiPoly::zero(n);
    }
    let padded = lambda.as_composition().padded(n);
    MultiPoly::from_terms(multiset_permutations(&padded).into_iter().map(|e| (Composition::new(e), 1)), n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// Elementary, `e_d`.
    E,
    /// Complete homogeneous, `h_d`.
    H,
    /// Power sum, `p_d`.
    P,
}

/// `e_d[X_n]`, `h_d[X_n]` or `p_d[X_n]` from their monomial sums.
pub fn generator_poly(kind: GeneratorKind, d: usize, n: usize) -> Result<MultiPoly, PolyError> {
    Ok(match kind {
        GeneratorKind::E => {
            MultiPoly::from_terms(compositions(d, n).into_iter().filter(Composition::is_binary).map(|a| (a, 1)), n)
        }
        GeneratorKind::H => MultiPoly::from_terms(compositions(d, n).into_iter().map(|a| (a, 1)), n),
        GeneratorKind::P => {
            if d == 0 {
                return Err(PolyError::PowerSumDegreeZero);
            }
            MultiPoly::from_terms(
                (0..n).map(|i| {
                    let mut e = vec![0; i + 1];
                    e[i] = d;
                    (Composition::new(e), 1)
                }),
                n,
            )
        }
    })
}

/// `e_β = ∏ e_{β_i}` or `h_β = ∏ h_{β_i}` in `n` variables.
pub fn generator_product(kind: GeneratorKind, beta: &Composition, n: usize) -> Result<MultiPoly, PolyError> {
    beta.parts()
        .iter()
        .filter(|&&d| d > 0 || kind != GeneratorKind::P)
        .try_fold(MultiPoly::one(n), |acc, &d| Ok(&acc * &generator_poly(kind, d, n)?))
}

/// Truncated power series in `T` with polynomial coefficients: index `d`
/// holds the coefficient of `T^d`.
type TSeries = Vec<MultiPoly>;

fn series_mul(a: &TSeries, b: &TSeries, max: usize, nvars: usize) -> TSeries {
    (0..=max)
        .map(|d| {
            (0..=d).fold(MultiPoly::zero(nvars), |acc, k| match (a.get(k), b.get(d - k)) {
                (Some(x), Some(y)) if !x.is_zero() && !y.is_zero() => &acc + &(x * y),
                _ => acc,
            })
        })
        .collect()
}

/// Expands the product/sum side of the generating series of `e`, `h` or
/// `p` modulo `T^{D+1}` and compares it with [`generator_poly`].
pub fn series_truncation_check(kind: GeneratorKind, n: usize, max_degree: usize) -> bool {
    let x_pow = |i: usize, k: usize| {
        let mut e = vec![0; i + 1];
        e[i] = k;
        MultiPoly::monomial(Composition::new(e), 1, n)
    };
    let series: TSeries = match kind {
        GeneratorKind::E | GeneratorKind::H => {
            let mut acc: TSeries = vec![MultiPoly::one(n)];
            for i in 0..n {
                // 1 + X_i T, or 1 + X_i T + (X_i T)^2 + …
                let factor: TSeries = (0..=max_degree)
                    .map(|k| match kind {
                        GeneratorKind::E if k > 1 => MultiPoly::zero(n),
                        _ => x_pow(i, k),
                    })
                    .collect();
                acc = series_mul(&acc, &factor, max_degree, n);
            }
            acc
        }
        GeneratorKind::P => (0..=max_degree)
            .map(|k| {
                if k == 0 {
                    MultiPoly::zero(n)
                } else {
                    (0..n).fold(MultiPoly::zero(n), |acc, i| &acc + &x_pow(i, k))
                }
            })
            .collect(),
    };
    (0..=max_degree).all(|d| {
        let direct = match (kind, d) {
            (GeneratorKind::P, 0) => MultiPoly::zero(n),
            _ => generator_poly(kind, d, n).expect("degree is valid"),
        };
        series.get(d).map_or(direct.is_zero(), |s| *s == direct)
    })
}

/// Variable index of `X_i` in the interleaved two-alphabet space.
pub fn x_var(i: usize) -> usize {
    2 * i
}

/// Variable index of `Y_j` in the interleaved two-alphabet space.
pub fn y_var(j: usize) -> usize {
    2 * j + 1
}

fn interleave(x: &Composition, y: &Composition) -> Composition {
    let n = x.len().max(y.len());
    Composition::new((0..2 * n).map(|k| if k % 2 == 0 { x.get(k / 2) } else { y.get(k / 2) }).collect())
}

fn y_degree(e: &Composition) -> usize {
    e.parts().iter().skip(1).step_by(2).sum()
}

/// The three sides of the two-alphabet Cauchy-type identities for `e`
/// (binary matrices, `∏(1 + X_i Y_j)`) or `h` (integral matrices,
/// `∏ 1/(1 − X_i Y_j)`), in `n` X-variables and `m` Y-variables,
/// truncated to Y-degree at most `max_degree`.
pub fn double_series_sides(kind: GeneratorKind, n: usize, m: usize, max_degree: usize) -> [MultiPoly; 3] {
    let nv = 2 * n.max(m);
    let binary = match kind {
        GeneratorKind::E => true,
        GeneratorKind::H => false,
        GeneratorKind::P => panic!("power sums have no matrix expansion"),
    };
    // Σ_β e_β[X] Y^β
    let mut by_products = MultiPoly::zero(nv);
    // Σ_M X^{row M} Y^{col M}
    let mut by_matrices = MultiPoly::zero(nv);
    for d in 0..=max_degree {
        for beta in compositions(d, m) {
            let poly = generator_product(kind, &beta, n).expect("e and h are defined for every degree");
            for (alpha, c) in poly.terms() {
                by_products = &by_products + &MultiPoly::monomial(interleave(alpha, &beta), c.clone(), nv);
            }
            for alpha in compositions(d, n) {
                let count = count_matrices(&alpha, &beta, binary);
                by_matrices = &by_matrices + &MultiPoly::monomial(interleave(&alpha, &beta), count, nv);
            }
        }
    }
    let mut by_factors = MultiPoly::one(nv);
    for i in 0..n {
        for j in 0..m {
            let xy = MultiPoly::monomial(interleave(&Composition::new(unit(i)), &Composition::new(unit(j))), 1, nv);
            let top = if binary { 1 } else { max_degree };
            let factor = (0..=top as u32).fold(MultiPoly::zero(nv), |acc, k| &acc + &xy.pow(k));
            by_factors = (&by_factors * &factor).filter_terms(|e| y_degree(e) <= max_degree);
        }
    }
    [by_products, by_matrices, by_factors]
}

fn unit(i: usize) -> Vec<usize> {
    let mut v = vec![0; i + 1];
    v[i] = 1;
    v
}

pub fn double_series_check(kind: GeneratorKind, n: usize, m: usize, max_degree: usize) -> bool {
    let [a, b, c] = double_series_sides(kind, n, m, max_degree);
    a == b && b == c
}

/// All permutations of `0..n` with their signs.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    fn rec(avail: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i8)>) {
        if avail.is_empty() {
            let sign = sort_sign_by(cur, |a: &usize, b: &usize| a.cmp(b));
            out.push((cur.clone(), sign));
            return;
        }
        for k in 0..avail.len() {
            let v = avail.remove(k);
            cur.push(v);
            rec(avail, cur, out);
            cur.pop();
            avail.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// The staircase `δ_n = (n−1, …, 1, 0)`.
pub fn staircase(n: usize) -> Composition {
    Composition::new((0..n).rev().collect())
}

fn check_fits(alpha: &Composition, n: usize) -> Result<(), PolyError> {
    if alpha.len() > n {
        Err(PolyError::TooManyParts { exponent: alpha.clone(), nvars: n })
    } else {
        Ok(())
    }
}

/// `a_α[X_n] = Σ_σ ε(σ) X^{σ·α}`.
pub fn alternant(alpha: &Composition, n: usize) -> Result<MultiPoly, PolyError> {
    check_fits(alpha, n)?;
    let parts = alpha.padded(n);
    let mut sorted = parts.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(MultiPoly::zero(n));
    }
    Ok(MultiPoly::from_terms(
        signed_permutations(n)
            .into_iter()
            .map(|(perm, sign)| (Composition::new(perm.iter().map(|&k| parts[k]).collect()), sign)),
        n,
    ))
}

/// `det(X_i^{α_j})` by fraction-free (Bareiss) elimination.
pub fn alternant_determinant(alpha: &Composition, n: usize) -> Result<MultiPoly, PolyError> {
    check_fits(alpha, n)?;
    let parts = alpha.padded(n);
    let mut a: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            parts
                .iter()
                .map(|&e| {
                    let mut v = vec![0; i + 1];
                    v[i] = e;
                    MultiPoly::monomial(Composition::new(v), 1, n)
                })
                .collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = MultiPoly::one(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(MultiPoly::zero(n)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact_divide(&num, &prev).expect("pivot is nonzero").expect("Bareiss minors divide exactly");
            }
        }
        prev = a[k][k].clone();
    }
    Ok(if n == 0 { MultiPoly::one(0) } else { a[n - 1][n - 1].scale(&sign) })
}

/// `Δ_n = a_{δ_n}[X_n]`.
pub fn vandermonde(n: usize) -> MultiPoly {
    alternant(&staircase(n), n).expect("staircase fits")
}

/// `∏_{i<j} (X_i − X_j)`, expanded.
pub fn vandermonde_product(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &(&MultiPoly::variable(i, n) - &MultiPoly::variable(j, n));
        }
    }
    acc
}

/// `r` with `p = q·r` when such an integer polynomial exists.
///
/// Repeatedly cancels the graded-lexicographic leading term of the
/// remainder against that of `q`; any step that leaves a non-divisible
/// leading term means `q ∤ p`.
pub fn exact_divide(p: &MultiPoly, q: &MultiPoly) -> Result<Option<MultiPoly>, PolyError> {
    let (lead_m, lead_c) = q.terms.iter().next_back().ok_or(PolyError::DivisionByZero)?;
    let nvars = p.nvars.max(q.nvars);
    let mut rem = p.clone();
    let mut quot = MultiPoly::zero(nvars);
    while let Some((m, c)) = rem.terms.iter().next_back() {
        let Some(qm) = m.divide(lead_m) else { return Ok(None) };
        if !(c % lead_c).is_zero() {
            return Ok(None);
        }
        let qc = c / lead_c;
        for (b, cb) in &q.terms {
            rem.add_term(qm.times(b), -(&qc * cb));
        }
        quot.add_term(qm, qc);
    }
    debug_assert_eq!(&quot * q, p.clone().with_nvars(nvars));
    Ok(Some(quot))
}

/// `s_α[X_n] = [α ∈ ℕⁿ] · a_{δ_n+α}[X_n] / Δ_n`.
pub fn schur_poly(alpha: &Composition, n: usize) -> MultiPoly {
    if alpha.len() > n {
        return MultiPoly::zero(n);
    }
    let shifted = Composition::new((0..n).map(|i| n - 1 - i + alpha.get(i)).collect());
    let numerator = alternant(&shifted, n).expect("shifted exponent fits");
    exact_divide(&numerator, &vandermonde(n))
        .expect("Vandermonde is nonzero")
        .expect("alternants are divisible by the Vandermonde")
}

/// Sign of the permutation sorting a strictly ordered list decreasingly,
/// or `None` if two entries coincide.
pub(crate) fn decreasing_sort_sign(values: &[i64]) -> Option<i8> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sort_sign_by(values, |a, b| b.cmp(a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[usize], i64)], n: usize) -> MultiPoly {
        MultiPoly::from_terms(terms.iter().map(|(e, k)| (c(e), *k)), n)
    }

    fn x(i: usize, n: usize) -> MultiPoly {
        MultiPoly::variable(i, n)
    }

    #[test]
    fn ring_arithmetic() {
        let lhs = &(&x(0, 2) - &x(1, 2)) * &(&x(0, 2) + &x(1, 2));
        assert_eq!(lhs, poly(&[(&[2], 1), (&[0, 2], -1)], 2));
        assert!((&lhs * &MultiPoly::zero(2)).is_zero());
        let a1 = alternant(&c(&[1]), 2).unwrap();
        assert_eq!(&a1 * &a1, a1.pow(2));
        assert_eq!(a1.pow(2), poly(&[(&[2], 1), (&[1, 1], -2), (&[0, 2], 1)], 2));
        assert_eq!(lhs.coeff_of(&c(&[1, 1])), BigInt::zero());
        assert_eq!(lhs.degree(), Some(2));
        assert_eq!(MultiPoly::zero(3).degree(), None);
    }

    #[test]
    fn display_and_json() {
        let q = poly(&[(&[2], 1), (&[0, 2], -1), (&[], 3)], 2);
        assert_eq!(q.to_string(), "1*X0^2 + -1*X1^2 + 3");
        assert_eq!(MultiPoly::zero(1).to_string(), "0");
        assert_eq!(
            q.to_json(),
            json!([{"coeff": 1, "exp": [2, 0]}, {"coeff": -1, "exp": [0, 2]}, {"coeff": 3, "exp": [0, 0]}])
        );
    }

    #[test]
    fn substitution() {
        assert!(monomial_symmetric(&p(&[2, 1, 1]), 3).substitute_zero(2).is_zero());
        assert_eq!(MultiPoly::constant(5, 2).substitute_zero(0), MultiPoly::constant(5, 2));
        let h2 = generator_poly(GeneratorKind::H, 2, 2).unwrap();
        assert_eq!(h2.substitute_zero(1), poly(&[(&[2], 1)], 2));
    }

    #[test]
    fn symmetry_tests() {
        let d2 = &x(0, 2) - &x(1, 2);
        assert!(d2.is_alternating(2) && !d2.is_symmetric(2));
        assert!(generator_poly(GeneratorKind::H, 2, 2).unwrap().is_symmetric(2));
        let m = poly(&[(&[2, 1], 1)], 2);
        assert!(!m.is_symmetric(2) && !m.is_alternating(2));
        // X_0 X_1 is symmetric but not alternating (equal exponents)
        assert!(!poly(&[(&[1, 1], 1)], 2).is_alternating(2));
        assert!(!x(2, 3).is_symmetric(2));
    }

    #[test]
    fn minimal_symmetric_polys() {
        assert_eq!(monomial_symmetric(&p(&[2, 2]), 2), poly(&[(&[2, 2], 1)], 2));
        assert_eq!(monomial_symmetric(&p(&[1]), 3), poly(&[(&[1], 1), (&[0, 1], 1), (&[0, 0, 1], 1)], 3));
        assert!(monomial_symmetric(&p(&[2, 1, 1]), 2).is_zero());
        assert_eq!(monomial_symmetric(&p(&[2, 1, 1]), 4).len(), 12);
    }

    #[test]
    fn generators() {
        assert_eq!(generator_poly(GeneratorKind::E, 2, 2).unwrap(), poly(&[(&[1, 1], 1)], 2));
        assert_eq!(generator_poly(GeneratorKind::H, 2, 2).unwrap(), poly(&[(&[2], 1), (&[1, 1], 1), (&[0, 2], 1)], 2));
        assert_eq!(generator_poly(GeneratorKind::P, 3, 2).unwrap(), poly(&[(&[3], 1), (&[0, 3], 1)], 2));
        assert!(generator_poly(GeneratorKind::E, 3, 2).unwrap().is_zero());
        assert_eq!(generator_poly(GeneratorKind::E, 0, 2).unwrap(), MultiPoly::one(2));
        assert_eq!(generator_poly(GeneratorKind::P, 0, 2), Err(PolyError::PowerSumDegreeZero));
    }

    #[test]
    fn series_truncations() {
        assert!(series_truncation_check(GeneratorKind::E, 3, 3));
        assert!(series_truncation_check(GeneratorKind::H, 2, 4));
        assert!(series_truncation_check(GeneratorKind::P, 2, 4));
        assert!(double_series_check(GeneratorKind::E, 2, 2, 3));
        assert!(double_series_check(GeneratorKind::H, 2, 2, 3));
    }

    #[test]
    fn alternants() {
        assert_eq!(alternant(&c(&[4, 1]), 2).unwrap(), poly(&[(&[4, 1], 1), (&[1, 4], -1)], 2));
        assert!(alternant(&c(&[2, 2]), 2).unwrap().is_zero());
        assert_eq!(alternant(&staircase(3), 3).unwrap(), vandermonde(3));
        assert!(matches!(alternant(&c(&[1, 0, 1]), 2), Err(PolyError::TooManyParts { .. })));
        assert_eq!(alternant_determinant(&c(&[4, 1]), 2).unwrap(), alternant(&c(&[4, 1]), 2).unwrap());
        assert!(alternant_determinant(&c(&[1, 1, 0]), 3).unwrap().is_zero());
    }

    #[test]
    fn vandermondes() {
        assert_eq!(vandermonde(2), &x(0, 2) - &x(1, 2));
        assert_eq!(vandermonde(1), MultiPoly::one(1));
        assert_eq!(vandermonde(3), vandermonde_product(3));
        assert_eq!(vandermonde(3).len(), 6);
    }

    #[test]
    fn division() {
        let q = exact_divide(&alternant(&c(&[4, 1]), 2).unwrap(), &vandermonde(2)).unwrap().unwrap();
        assert_eq!(q, poly(&[(&[3, 1], 1), (&[2, 2], 1), (&[1, 3], 1)], 2));
        let f = poly(&[(&[2, 1], 3), (&[], -1)], 2);
        assert_eq!(exact_divide(&f, &MultiPoly::one(2)).unwrap(), Some(f.clone()));
        assert_eq!(exact_divide(&x(0, 2), &x(1, 2)).unwrap(), None);
        assert_eq!(exact_divide(&f, &MultiPoly::zero(2)), Err(PolyError::DivisionByZero));
        assert_eq!(exact_divide(&MultiPoly::constant(3, 1), &MultiPoly::constant(2, 1)).unwrap(), None);
    }

    #[test]
    fn schur_polys() {
        let m = |parts: &[usize], n| monomial_symmetric(&p(parts), n);
        let s31_3 = schur_poly(&c(&[3, 1]), 3);
        assert_eq!(s31_3, &(&m(&[3, 1], 3) + &m(&[2, 2], 3)) + &m(&[2, 1, 1], 3).scale(&BigInt::from(2)));
        assert_eq!(schur_poly(&c(&[3, 1]), 2), &m(&[3, 1], 2) + &m(&[2, 2], 2));
        assert!(schur_poly(&c(&[1, 2]), 2).is_zero());
        assert_eq!(schur_poly(&c(&[0, 4]), 2), -&schur_poly(&c(&[3, 1]), 2));
        assert_eq!(s31_3.substitute_zero(2), schur_poly(&c(&[3, 1]), 2));
        assert!(schur_poly(&c(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn decreasing_sort_signs() {
        assert_eq!(decreasing_sort_sign(&[-1, 2]), Some(-1));
        assert_eq!(decreasing_sort_sign(&[2, -1]), Some(1));
        assert_eq!(decreasing_sort_sign(&[0, 0]), None);
    }
}
