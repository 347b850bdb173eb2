//! Bounded property suites cross-checking the modules against each other.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::polynomials::{double_series_check, schur_poly, series_truncation_check, GeneratorKind, MultiPoly};
use crate::shapes::{
    dominance_leq, edge_sequence, partition_from_edges, ribbon_check, strip_check, Composition, Partition, SkewShape,
    StripKind,
};
use crate::symfunc::{basis_element, kostka, multiply, normalize_s, schur_expand, BasisKind, SignedPartition, SymFunc};
use crate::tableaux::{count_ssyt, decode_binary, decode_integral, enumerate_ssyt, TableauMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Shapes,
    Tableaux,
    Series,
    Schur,
    Kostka,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "shapes" => Suite::Shapes,
            "tableaux" => Suite::Tableaux,
            "series" => Suite::Series,
            "schur" => Suite::Schur,
            "kostka" => Suite::Kostka,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest partition size (or part size, for grids of compositions).
    pub max_size: usize,
    pub max_vars: usize,
    /// Truncation degree for generating series.
    pub max_deg: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_size: 5, max_vars: 3, max_deg: 4 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    /// Number of instances examined.
    pub checked: usize,
    /// First failing instance, if any.
    pub counterexample: Option<String>,
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checked)", self.name, self.checked)?;
        if let Some(c) = &self.counterexample {
            write!(f, ": counterexample {c}")?;
        }
        Ok(())
    }
}

struct Property {
    report: PropertyReport,
}

impl Property {
    fn new(name: &str) -> Self {
        Property { report: PropertyReport { name: name.into(), passed: true, checked: 0, counterexample: None } }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.report.checked += 1;
        if !ok && self.report.passed {
            self.report.passed = false;
            self.report.counterexample = Some(describe());
        }
    }

    fn done(self) -> PropertyReport {
        self.report
    }
}

fn partitions_up_to(max: usize) -> impl Iterator<Item = Partition> {
    (0..=max).flat_map(Partition::all_of_size)
}

fn skew_shapes_up_to(max: usize) -> impl Iterator<Item = SkewShape> {
    partitions_up_to(max)
        .flat_map(|l| l.subpartitions().into_iter().map(move |m| SkewShape::new(l.clone(), m).expect("subpartition")))
}

/// Compositions of `d` with every part positive.
pub fn positive_compositions(d: usize) -> Vec<Composition> {
    if d == 0 {
        return vec![Composition::empty()];
    }
    (1..=d)
        .flat_map(|first| {
            positive_compositions(d - first).into_iter().map(move |rest| [&[first], rest.parts()].concat())
        })
        .map(Composition::new)
        .collect()
}

/// Compositions with at most `len` parts, each at most `max`, as padded vectors.
fn bounded_grid(len: usize, max: usize) -> Vec<Composition> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v: Vec<usize>| (0..=max).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().map(Composition::new).collect()
}

/// `(column − row)` of each cell; a `k`-ribbon occupies `k` consecutive
/// diagonals, one cell each. Returns its row span.
fn ribbon_by_diagonals(shape: &SkewShape, k: usize) -> Option<usize> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    if k == 0 || cells.len() != k {
        return None;
    }
    let diag = |&(i, j): &(usize, usize)| j as i64 - i as i64;
    let mut ds: Vec<i64> = cells.iter().map(diag).collect();
    ds.sort_unstable();
    if ds.windows(2).any(|w| w[1] != w[0] + 1) {
        return None;
    }
    let low = cells.iter().min_by_key(|c| diag(c))?;
    let high = cells.iter().max_by_key(|c| diag(c))?;
    Some(low.0 - high.0)
}

fn shapes_suite(b: &Bounds) -> Vec<PropertyReport> {
    let mut inv = Property::new("conjugation is an involution");
    let mut dom = Property::new("conjugation reverses dominance");
    let mut edges = Property::new("edge sequences determine partitions");
    for l in partitions_up_to(b.max_size) {
        inv.check(l.conjugate().conjugate() == l, || l.to_string());
        edges.check(partition_from_edges(&edge_sequence(&l)).as_ref() == Ok(&l), || l.to_string());
        for m in Partition::all_of_size(l.size()) {
            let forward = dominance_leq(&m, &l).expect("same size");
            let back = dominance_leq(&l.conjugate(), &m.conjugate()).expect("same size");
            dom.check(forward == back, || format!("{m} vs {l}"));
        }
    }
    let mut strips = Property::new("strip tests match column and row occupancy");
    let mut ribbons = Property::new("beta-set ribbon test matches consecutive diagonals");
    for shape in skew_shapes_up_to(b.max_size) {
        let cells: Vec<(usize, usize)> = shape.cells().collect();
        let distinct = |key: fn(&(usize, usize)) -> usize| {
            let mut v: Vec<usize> = cells.iter().map(key).collect();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        };
        let (m, l) = (shape.inner(), shape.outer());
        strips.check(
            strip_check(m, l, StripKind::Horizontal) == distinct(|c| c.1)
                && strip_check(m, l, StripKind::Vertical) == distinct(|c| c.0),
            || shape.to_string(),
        );
        for k in 1..=b.max_size.clamp(1, 8) {
            ribbons.check(ribbon_check(m, l, k) == ribbon_by_diagonals(&shape, k), || format!("{shape}, k={k}"));
        }
    }
    vec![inv.done(), dom.done(), edges.done(), strips.done(), ribbons.done()]
}

fn tableaux_suite(b: &Bounds) -> Vec<PropertyReport> {
    let mut integral = Property::new("integral encoding round trip");
    let mut binary = Property::new("binary encoding round trip");
    let mut margins = Property::new("encoding margins are shape and weight differences");
    let mut transpose = Property::new("transposition is a weight-preserving involution");
    for shape in skew_shapes_up_to(b.max_size) {
        let rows = shape.row_lengths();
        let cols = shape.conjugate().row_lengths();
        for weight in positive_compositions(shape.size()) {
            for t in enumerate_ssyt(&shape, &weight) {
                let m = t.integral_encoding().expect("column-strict");
                integral.check(decode_integral(&m, shape.inner()).as_ref() == Ok(&t), || format!("{t}"));
                let mb = t.binary_encoding().expect("column-strict");
                binary.check(decode_binary(&mb, shape.inner()).as_ref() == Ok(&t), || format!("{t}"));
                margins.check(
                    m.row_sums() == rows && m.col_sums() == weight && mb.row_sums() == weight && mb.col_sums() == cols,
                    || format!("{t}"),
                );
                let tt = t.transpose();
                transpose.check(
                    tt.mode() == TableauMode::RowStrict && tt.weight() == t.weight() && tt.transpose() == t,
                    || format!("{t}"),
                );
            }
        }
    }
    vec![integral.done(), binary.done(), margins.done(), transpose.done()]
}

fn series_suite(b: &Bounds) -> Vec<PropertyReport> {
    let kinds = [(GeneratorKind::E, "e"), (GeneratorKind::H, "h"), (GeneratorKind::P, "p")];
    let mut single = Property::new("generating series of e, h, p");
    for (kind, name) in kinds {
        for n in 1..=b.max_vars {
            single.check(series_truncation_check(kind, n, b.max_deg), || format!("{name}, n={n}"));
        }
    }
    let mut double = Property::new("double series of e_beta, h_beta");
    let side = b.max_vars.min(3);
    for (kind, name) in &kinds[..2] {
        for n in 1..=side {
            for m in 1..=side {
                double.check(double_series_check(*kind, n, m, b.max_deg), || format!("{name}, n={n}, m={m}"));
            }
        }
    }
    vec![single.done(), double.done()]
}

fn signed(sp: &SignedPartition, n: usize) -> MultiPoly {
    match sp {
        SignedPartition::Zero => MultiPoly::zero(n),
        SignedPartition::Term { sign, partition } => {
            schur_poly(&partition.as_composition(), n).scale(&BigInt::from(*sign))
        }
    }
}

fn schur_suite(b: &Bounds) -> Vec<PropertyReport> {
    let n = b.max_vars;
    let grid = bounded_grid(n, b.max_size);
    let mut norm = Property::new("normalisation agrees with alternant quotients");
    for alpha in &grid {
        let lhs = schur_poly(alpha, n);
        norm.check(lhs == signed(&normalize_s(alpha), n), || alpha.to_string());
    }
    let mut fixed = Property::new("partitions normalise to themselves");
    for l in partitions_up_to(2 * b.max_size) {
        let sp = normalize_s(&l.as_composition());
        fixed.check(sp == SignedPartition::Term { sign: 1, partition: l.clone() }, || l.to_string());
    }
    let mut stable = Property::new("stability under X_n := 0");
    for m in 0..n {
        for alpha in bounded_grid(n, b.max_size.min(4)) {
            let wide = schur_poly(&alpha, m + 1).substitute_zero(m);
            stable.check(wide == schur_poly(&alpha, m), || format!("{alpha}, n={m}"));
        }
    }
    let small = b.max_size.min(5);
    let mut realize = Property::new("basis elements are independent of the variable count");
    for l in partitions_up_to(small) {
        for kind in [BasisKind::M, BasisKind::E, BasisKind::H, BasisKind::P] {
            let f = basis_element(kind, &l.as_composition()).expect("positive parts");
            let d = l.size();
            let ok = [d + 1, d + 2].iter().all(|&k| schur_expand(&f.realize(k), k).as_ref() == Ok(&f));
            realize.check(ok, || format!("{kind:?} {l}"));
        }
    }
    let mut ring = Property::new("products are commutative and associative");
    let mut poly = Property::new("products agree with polynomial multiplication");
    let basis: Vec<SymFunc> = partitions_up_to(small.div_ceil(2)).map(SymFunc::schur).collect();
    for f in &basis {
        for g in &basis {
            let fg = multiply(f, g);
            let d = f.degree().unwrap_or(0) + g.degree().unwrap_or(0);
            let direct = schur_expand(&(&f.realize(d) * &g.realize(d)), d);
            poly.check(direct.as_ref() == Ok(&fg), || format!("{f} * {g}"));
            for h in &basis {
                if d + h.degree().unwrap_or(0) > small {
                    continue;
                }
                let ok = fg == multiply(g, f) && multiply(&fg, h) == multiply(f, &multiply(g, h));
                ring.check(ok, || format!("{f}, {g}, {h}"));
            }
        }
    }
    vec![norm.done(), fixed.done(), stable.done(), realize.done(), ring.done(), poly.done()]
}

fn kostka_suite(b: &Bounds) -> Vec<PropertyReport> {
    let mut oracle = Property::new("Kostka numbers count semistandard tableaux");
    let mut duality = Property::new("primed Kostka numbers match conjugate shapes");
    for shape in skew_shapes_up_to(b.max_size) {
        let (l, m) = (shape.outer(), shape.inner());
        let conj = shape.conjugate();
        for alpha in positive_compositions(shape.size()) {
            let k = kostka(l, m, &alpha, false);
            oracle.check(k == BigInt::from(count_ssyt(&shape, &alpha)), || format!("{shape}, {alpha}"));
            let kp = kostka(l, m, &alpha, true);
            duality.check(kp == kostka(conj.outer(), conj.inner(), &alpha, false), || format!("{shape}, {alpha}"));
        }
    }
    vec![oracle.done(), duality.done()]
}

/// Runs every property of `suite` within `bounds`.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> Vec<PropertyReport> {
    match suite {
        Suite::Shapes => shapes_suite(bounds),
        Suite::Tableaux => tableaux_suite(bounds),
        Suite::Series => series_suite(bounds),
        Suite::Schur => schur_suite(bounds),
        Suite::Kostka => kostka_suite(bounds),
        Suite::All => [Suite::Shapes, Suite::Tableaux, Suite::Series, Suite::Schur, Suite::Kostka]
            .into_iter()
            .flat_map(|s| run_suite(s, bounds))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds { max_size: 4, max_vars: 2, max_deg: 3 }
    }

    #[test]
    fn every_suite_passes_on_small_bounds() {
        for r in run_suite(Suite::All, &small()) {
            assert!(r.passed, "{r}");
            assert!(r.checked > 0, "{r}");
        }
    }

    #[test]
    fn diagram_oracle() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        let shape = SkewShape::new(p(&[7, 6, 6, 3, 3, 2]), p(&[7, 5, 2, 2, 1])).unwrap();
        assert_eq!(ribbon_by_diagonals(&shape, 10), Some(4));
        let shape = SkewShape::new(p(&[2, 2]), p(&[1])).unwrap();
        assert_eq!(ribbon_by_diagonals(&shape, 3), Some(1));
        assert_eq!(ribbon_by_diagonals(&shape, 2), None);
        let square = SkewShape::straight(p(&[2, 2]));
        assert_eq!(ribbon_by_diagonals(&square, 4), None);
    }

    #[test]
    fn grids() {
        assert_eq!(positive_compositions(3).len(), 4);
        assert_eq!(positive_compositions(0), vec![Composition::empty()]);
        assert_eq!(bounded_grid(2, 2).len(), 9);
        assert_eq!("kostka".parse::<Suite>(), Ok(Suite::Kostka));
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn report_format() {
        let mut p = Property::new("x");
        p.check(true, String::new);
        p.check(false, || "(1)".into());
        p.check(false, || "(2)".into());
        assert_eq!(p.done().to_string(), "FAIL x (3 checked): counterexample (1)");
    }
}
