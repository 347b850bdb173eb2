//! The ring Λ of symmetric functions, stored in the Schur basis.
//!
//! Conversions between Λ and the polynomial rings `ℤ[X_n]` go through the
//! bijection "multiply by `Δ_n`" from symmetric to alternating polynomials:
//! the coefficient of `s_λ` in a symmetric `p` is the coefficient of
//! `X^{δ_n+λ}` in `p·Δ_n`. Symmetric polynomials are carried internally by
//! their coefficients on the monomials `X^μ` with `μ` a partition, which
//! determine them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::polynomials::{decreasing_sort_sign, monomial_symmetric, MultiPoly};
use crate::shapes::{sort_to_partition, Composition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("polynomial is not symmetric in {0} variables")]
    NotSymmetric(usize),
    #[error("polynomial involves {needed} variables, more than {n}")]
    InsufficientVariables { n: usize, needed: usize },
    #[error("power sum index {0} has a zero part")]
    PowerSumZeroPart(Composition),
    #[error("malformed symmetric function JSON: {0}")]
    Json(String),
}

/// Coefficients `c_μ` of `Σ c_μ m_μ`: a symmetric polynomial in any number
/// of variables at least its degree.
type MonomialCoords = BTreeMap<Partition, BigInt>;

/// Sign and partition of a normalised `s_α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignedPartition {
    Zero,
    Term { sign: i8, partition: Partition },
}

impl SignedPartition {
    pub fn sign(&self) -> i8 {
        match self {
            SignedPartition::Zero => 0,
            SignedPartition::Term { sign, .. } => *sign,
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            SignedPartition::Zero => None,
            SignedPartition::Term { partition, .. } => Some(partition),
        }
    }
}

/// Rewrites `s_α` as `0` or `±s_λ`: sort the beta numbers `α_i − 1 − i`
/// decreasingly; a repeat gives zero, otherwise `λ_i = ⟦α⟧⁺_i + 1 + i` and the
/// sign is that of the sorting permutation.
pub fn normalize_s(alpha: &Composition) -> SignedPartition {
    // Beyond the stored parts the beta numbers are −1 − i, below every stored one.
    let betas: Vec<i64> = (0..alpha.len()).map(|i| alpha.get(i) as i64 - 1 - i as i64).collect();
    match decreasing_sort_sign(&betas) {
        None => SignedPartition::Zero,
        Some(sign) => {
            let mut sorted = betas;
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let parts = sorted.iter().enumerate().map(|(i, &b)| (b + 1 + i as i64) as usize).collect();
            SignedPartition::Term {
                sign,
                partition: Partition::new(parts).expect("sorted beta numbers give a partition"),
            }
        }
    }
}

/// Coefficient of `X^{δ_n+λ}` in `p·Δ_n`, where `p` is the symmetric
/// polynomial in `n` variables with coefficient `c_μ` at `X^μ` for each
/// `(μ, c_μ)` in `support` (and zero at other partitions).
///
/// Expands `Δ_n = Σ_σ ε(σ) X^{σδ_n}` lazily, keeping only the `σ` for which
/// the exponents `δ_n + λ − σδ_n` placed so far are nonnegative and still
/// rearrange into part of some supported `μ`.
fn alternant_coefficient(support: &[(&Partition, &BigInt)], lambda: &Partition, n: usize) -> BigInt {
    struct Search<'a> {
        coeffs: Vec<&'a BigInt>,
        // counts[c][v]: copies of the value v (zeros included) left in candidate c
        counts: Vec<Vec<usize>>,
        top: Vec<usize>,
        used: Vec<bool>,
        chosen: Vec<usize>,
        total: BigInt,
    }

    impl Search<'_> {
        // Positions are filled from the last one down, where the bounds are tightest.
        fn run(&mut self, pos: usize, inversions: usize, alive: &[usize]) {
            if alive.is_empty() {
                return;
            }
            let n = self.top.len();
            if pos == 0 {
                // the exponent multiset pins down a single candidate
                let c = self.coeffs[alive[0]];
                if inversions.is_multiple_of(2) {
                    self.total += c;
                } else {
                    self.total -= c;
                }
                return;
            }
            let i = pos - 1;
            for v in 0..=self.top[i].min(n - 1) {
                if self.used[v] {
                    continue;
                }
                let e = self.top[i] - v;
                let next: Vec<usize> =
                    alive.iter().copied().filter(|&c| self.counts[c].get(e).is_some_and(|&k| k > 0)).collect();
                if next.is_empty() {
                    continue;
                }
                let extra = (i + 1..n).filter(|&j| v < self.chosen[j]).count();
                for &c in &next {
                    self.counts[c][e] -= 1;
                }
                self.used[v] = true;
                self.chosen[i] = v;
                self.run(i, inversions + extra, &next);
                self.used[v] = false;
                for &c in &next {
                    self.counts[c][e] += 1;
                }
            }
        }
    }

    if lambda.len() > n {
        return BigInt::zero();
    }
    let mut coeffs = Vec::new();
    let mut counts = Vec::new();
    for &(mu, c) in support {
        if mu.len() > n || mu.size() != lambda.size() || c.is_zero() {
            continue;
        }
        let mut k = vec![0; mu.get(0) + 1];
        k[0] = n - mu.len();
        for &part in mu.parts() {
            k[part] += 1;
        }
        coeffs.push(c);
        counts.push(k);
    }
    let alive: Vec<usize> = (0..coeffs.len()).collect();
    let top = (0..n).map(|i| lambda.get(i) + n - 1 - i).collect();
    let mut s = Search { coeffs, counts, top, used: vec![false; n], chosen: vec![0; n], total: BigInt::zero() };
    s.run(n, 0, &alive);
    s.total
}

/// Schur coordinates of the symmetric function with the given monomial
/// coordinates. Solves `c_μ = Σ_{λ ⊵ μ} a_λ K_{λμ}` from the top of the
/// reverse lexicographic order down.
fn schur_from_coords(coords: &MonomialCoords) -> SymFunc {
    let mut degrees: Vec<usize> = coords.keys().map(Partition::size).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = SymFunc::zero();
    for d in degrees {
        let table = schur_to_monomial(d);
        let mut rest: MonomialCoords =
            coords.iter().filter(|(p, _)| p.size() == d).map(|(p, c)| (p.clone(), c.clone())).collect();
        while let Some((mu, c)) = rest.pop_last() {
            let mut correction = table[&mu].clone();
            correction.remove(&mu);
            add_coords(&mut rest, &correction, &-&c);
            out.add_term(mu, c);
        }
    }
    out
}

type Transition = Arc<BTreeMap<Partition, MonomialCoords>>;

/// Monomial coordinates of every `s_λ` with `|λ| = d`, obtained by
/// inverting the unitriangular matrix of Schur coordinates of the `m_μ`.
fn schur_to_monomial(d: usize) -> Transition {
    static CACHE: OnceLock<Mutex<HashMap<usize, Transition>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&d) {
        return t.clone();
    }
    // Partitions in reverse lexicographic order; m_μ only involves s_λ with λ ≤ μ.
    let parts = Partition::all_of_size(d);
    let k = parts.len();
    // a[l][m] = coefficient of s_{parts[l]} in m_{parts[m]}
    let mut a = vec![vec![BigInt::zero(); k]; k];
    for (m, mu) in parts.iter().enumerate() {
        let one = BigInt::one();
        for (l, lambda) in parts.iter().enumerate().skip(m) {
            a[l][m] = alternant_coefficient(&[(mu, &one)], lambda, d + 1);
        }
    }
    // Column ν of a⁻¹ by forward substitution gives s_ν = Σ_μ a⁻¹[μ][ν] m_μ.
    let mut table = BTreeMap::new();
    for (col, nu) in parts.iter().enumerate() {
        let mut x = vec![BigInt::zero(); k];
        x[col] = BigInt::one();
        for row in col + 1..k {
            let v: BigInt = (col..row).map(|t| &a[row][t] * &x[t]).sum();
            x[row] = -v;
        }
        let coords: MonomialCoords =
            parts.iter().zip(x).filter(|(_, c)| !c.is_zero()).map(|(mu, c)| (mu.clone(), c)).collect();
        table.insert(nu.clone(), coords);
    }
    let table = Arc::new(table);
    cache.lock().expect("cache lock").insert(d, table.clone());
    table
}

fn add_coords(into: &mut MonomialCoords, from: &MonomialCoords, scale: &BigInt) {
    for (mu, c) in from {
        let e = into.entry(mu.clone()).or_default();
        *e += c * scale;
        if e.is_zero() {
            into.remove(mu);
        }
    }
}

/// Compositions `β ≤ ν` (componentwise) with `|β| = size`.
fn sub_vectors(nu: &[usize], size: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(nu: &[usize], i: usize, left: usize, room: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == nu.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        let room = room - nu[i];
        let lo = left.saturating_sub(room);
        for v in lo..=nu[i].min(left) {
            cur.push(v);
            rec(nu, i + 1, left - v, room, cur, f);
            cur.pop();
        }
    }
    let total = nu.iter().sum();
    if size <= total {
        rec(nu, 0, size, total, &mut Vec::new(), f);
    }
}

fn sorted_partition(v: &[usize]) -> Partition {
    sort_to_partition(&Composition::new(v.to_vec())).0
}

/// Product of symmetric polynomials in monomial coordinates: the
/// coefficient of `X^ν` in `f·g` is `Σ_{β+γ=ν} f_β g_γ`.
fn multiply_coords(f: &MonomialCoords, g: &MonomialCoords) -> MonomialCoords {
    let by_degree = |c: &MonomialCoords| {
        let mut m: BTreeMap<usize, MonomialCoords> = BTreeMap::new();
        for (p, v) in c {
            m.entry(p.size()).or_default().insert(p.clone(), v.clone());
        }
        m
    };
    let (fd, gd) = (by_degree(f), by_degree(g));
    let mut out = MonomialCoords::new();
    for (&da, fa) in &fd {
        for (&db, gb) in &gd {
            for nu in Partition::all_of_size(da + db) {
                let mut total = BigInt::zero();
                sub_vectors(nu.parts(), da, &mut |beta| {
                    let Some(x) = fa.get(&sorted_partition(beta)) else { return };
                    let rest: Vec<usize> = nu.parts().iter().zip(beta).map(|(a, b)| a - b).collect();
                    if let Some(y) = gb.get(&sorted_partition(&rest)) {
                        total += x * y;
                    }
                });
                if !total.is_zero() {
                    *out.entry(nu).or_default() += total;
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// An element of Λ as a finite integer combination of Schur functions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BigInt>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(lambda, BigInt::one());
        f
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut f = SymFunc::zero();
        for (p, c) in terms {
            f.add_term(p, c.into());
        }
        f
    }

    fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `⟨f, s_λ⟩`.
    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Largest `|λ|` with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// Nonzero coordinates in reverse lexicographic order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> SymFunc {
        SymFunc::from_terms(self.terms.iter().map(|(p, v)| (p.clone(), v * c)))
    }

    fn monomial_coords(&self) -> MonomialCoords {
        let mut out = MonomialCoords::new();
        for (lambda, c) in &self.terms {
            let table = schur_to_monomial(lambda.size());
            add_coords(&mut out, &table[lambda], c);
        }
        out
    }

    /// Coefficients of `f` on the minimal symmetric functions `m_μ`.
    pub fn monomial_expansion(&self) -> BTreeMap<Partition, BigInt> {
        self.monomial_coords()
    }

    /// `f[X_n]`, the image in `ℤ[X_n]` under `X_i := 0` for `i ≥ n`.
    pub fn realize(&self, n: usize) -> MultiPoly {
        self.monomial_coords()
            .iter()
            .fold(MultiPoly::zero(n), |acc, (mu, c)| &acc + &monomial_symmetric(mu, n).scale(c))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(p, c)| {
                let coeff = c.to_i128().map_or_else(|| Value::String(c.to_string()), |v| json!(v));
                json!({ "lambda": p.parts(), "coeff": coeff })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<SymFunc, SymError> {
        let bad = |m: &str| SymError::Json(m.to_string());
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing \"terms\" array"))?;
        let mut f = SymFunc::zero();
        for t in terms {
            let lambda: Partition =
                serde_json::from_value(t.get("lambda").cloned().ok_or_else(|| bad("missing \"lambda\""))?)
                    .map_err(|e| SymError::Json(e.to_string()))?;
            let coeff = match t.get("coeff") {
                Some(Value::Number(n)) => n.to_string().parse::<BigInt>().map_err(|e| SymError::Json(e.to_string()))?,
                Some(Value::String(s)) => s.parse::<BigInt>().map_err(|e| SymError::Json(e.to_string()))?,
                _ => return Err(bad("missing integer \"coeff\"")),
            };
            f.add_term(lambda, coeff);
        }
        Ok(f)
    }
}

impl fmt::Display for SymFunc {
    /// `s[2] + -3*s[1,1]`; the zero function prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "s[{p}]")?;
            } else {
                write!(f, "{c}*s[{p}]")?;
            }
        }
        Ok(())
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc { terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;

    fn mul(self, rhs: &SymFunc) -> SymFunc {
        multiply(self, rhs)
    }
}

/// Schur coordinates of a symmetric polynomial in `n` variables: the unique
/// combination of `s_λ` with `ℓ(λ) ≤ n` whose image in `ℤ[X_n]` is `p`.
/// When `n` is at least the degree of `p` this is the only preimage in Λ of
/// that degree.
pub fn schur_expand(p: &MultiPoly, n: usize) -> Result<SymFunc, SymError> {
    let needed = p.terms().map(|(e, _)| e.len()).max().unwrap_or(0);
    if needed > n {
        return Err(SymError::InsufficientVariables { n, needed });
    }
    if !p.is_symmetric(n) {
        return Err(SymError::NotSymmetric(n));
    }
    let mut degrees: Vec<usize> = p.terms().map(|(e, _)| e.size()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let support: Vec<(Partition, BigInt)> = p
        .terms()
        .filter(|(e, _)| e.is_partition())
        .map(|(e, c)| (Partition::new(e.parts().to_vec()).expect("checked"), c.clone()))
        .collect();
    let support: Vec<(&Partition, &BigInt)> = support.iter().map(|(m, c)| (m, c)).collect();
    let mut out = SymFunc::zero();
    for d in degrees {
        for lambda in Partition::all_of_size(d) {
            let c = alternant_coefficient(&support, &lambda, n);
            out.add_term(lambda, c);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// Minimal (monomial) symmetric functions `m_λ`.
    M,
    E,
    H,
    P,
    S,
}

fn generator_coords(kind: BasisKind, d: usize) -> MonomialCoords {
    match kind {
        BasisKind::E => [(Partition::ones(d), BigInt::one())].into(),
        BasisKind::H => Partition::all_of_size(d).into_iter().map(|p| (p, BigInt::one())).collect(),
        BasisKind::P => [(Partition::new(vec![d]).expect("single part"), BigInt::one())].into(),
        BasisKind::M | BasisKind::S => unreachable!("not a multiplicative family"),
    }
}

/// `m_α`, `e_α`, `h_α`, `p_α` or `s_α` in Schur coordinates. For `m`, `e`,
/// `h` and `p` the index is sorted first (`e_α = e_{α⁺}`); `s_α` is
/// normalised.
pub fn basis_element(kind: BasisKind, index: &Composition) -> Result<SymFunc, SymError> {
    let coords = match kind {
        BasisKind::S => {
            return Ok(match normalize_s(index) {
                SignedPartition::Zero => SymFunc::zero(),
                SignedPartition::Term { sign, partition } => SymFunc::schur(partition).scale(&BigInt::from(sign)),
            })
        }
        BasisKind::M => [(sort_to_partition(index).0, BigInt::one())].into(),
        BasisKind::P if index.parts().contains(&0) => return Err(SymError::PowerSumZeroPart(index.clone())),
        BasisKind::E | BasisKind::H | BasisKind::P => {
            index.parts().iter().filter(|&&d| d > 0).fold([(Partition::empty(), BigInt::one())].into(), |acc, &d| {
                multiply_coords(&acc, &generator_coords(kind, d))
            })
        }
    };
    Ok(schur_from_coords(&coords))
}

/// Product in Λ: both factors are realised as symmetric polynomials in
/// `deg f + deg g` variables, multiplied, and expanded back.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    if f.is_zero() || g.is_zero() {
        return SymFunc::zero();
    }
    schur_from_coords(&multiply_coords(&f.monomial_coords(), &g.monomial_coords()))
}

/// `⟨f, g⟩` for the scalar product making the Schur functions orthonormal.
pub fn scalar(f: &SymFunc, g: &SymFunc) -> BigInt {
    f.terms.iter().map(|(p, c)| c * g.coeff(p)).sum()
}

/// `s_{λ/μ} = s_μ^*(s_λ)`: its `s_ν` coordinate is `⟨s_μ s_ν, s_λ⟩`.
pub fn skew_schur(lambda: &Partition, mu: &Partition) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), SymFunc>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), mu.clone());
    if let Some(f) = cache.lock().expect("cache lock").get(&key) {
        return f.clone();
    }
    let f = skew_by_adjointness(lambda, mu);
    cache.lock().expect("cache lock").insert(key, f.clone());
    f
}

fn skew_by_adjointness(lambda: &Partition, mu: &Partition) -> SymFunc {
    if mu.size() > lambda.size() {
        return SymFunc::zero();
    }
    let d = lambda.size() - mu.size();
    let mu_coords = schur_to_monomial(mu.size())[mu].clone();
    let nu_table = schur_to_monomial(d);
    let mut out = SymFunc::zero();
    for (nu, nu_coords) in nu_table.iter() {
        let product = multiply_coords(&mu_coords, nu_coords);
        let support: Vec<(&Partition, &BigInt)> = product.iter().collect();
        out.add_term(nu.clone(), alternant_coefficient(&support, lambda, lambda.size() + 1));
    }
    out
}

/// `K_{λ/μ,α} = ⟨h_α, s_{λ/μ}⟩`, or `K′_{λ/μ,α} = ⟨e_α, s_{λ/μ}⟩` when `primed`.
pub fn kostka(lambda: &Partition, mu: &Partition, alpha: &Composition, primed: bool) -> BigInt {
    let kind = if primed { BasisKind::E } else { BasisKind::H };
    let f = basis_element(kind, alpha).expect("e and h accept every composition");
    scalar(&f, &skew_schur(lambda, mu))
}

fn generator_table(kind: BasisKind, d: usize) -> BTreeMap<Partition, SymFunc> {
    Partition::all_of_size(d)
        .into_iter()
        .map(|alpha| {
            let f = basis_element(kind, &alpha.as_composition()).expect("e and h accept every composition");
            (alpha, f)
        })
        .collect()
}

/// `h_α = Σ_λ K_{λ,α} s_λ` for every partition `α` of `d`.
pub fn h_to_schur_table(d: usize) -> BTreeMap<Partition, SymFunc> {
    generator_table(BasisKind::H, d)
}

/// `e_α = Σ_λ K′_{λ,α} s_λ` for every partition `α` of `d`.
pub fn e_to_schur_table(d: usize) -> BTreeMap<Partition, SymFunc> {
    generator_table(BasisKind::E, d)
}
