//! Exhaustive checks of the ring Λ on small degrees, comparing the Schur
//! coordinate machinery against full polynomial computations.

use num_bigint::BigInt;
use schurkit::polynomials::{generator_product, schur_poly, GeneratorKind, MultiPoly};
use schurkit::shapes::{Composition, Partition};
use schurkit::symfunc::{
    basis_element, e_to_schur_table, h_to_schur_table, kostka, multiply, scalar, schur_expand, skew_schur, BasisKind,
    SymFunc,
};
use schurkit::tableaux::count_ssyt;

fn partitions_up_to(max: usize) -> impl Iterator<Item = Partition> {
    (0..=max).flat_map(Partition::all_of_size)
}

#[test]
fn basis_elements_match_polynomial_expansions() {
    for alpha in partitions_up_to(5) {
        let n = alpha.size() + 1;
        let index = alpha.as_composition();
        for (kind, gen) in
            [(BasisKind::E, GeneratorKind::E), (BasisKind::H, GeneratorKind::H), (BasisKind::P, GeneratorKind::P)]
        {
            let direct = schur_expand(&generator_product(gen, &index, n).unwrap(), n).unwrap();
            assert_eq!(basis_element(kind, &index).unwrap(), direct, "{kind:?}_{alpha}");
        }
    }
}

#[test]
fn basis_elements_do_not_depend_on_the_variable_count() {
    for alpha in partitions_up_to(5) {
        for kind in [BasisKind::M, BasisKind::E, BasisKind::H, BasisKind::P] {
            let f = basis_element(kind, &alpha.as_composition()).unwrap();
            for n in [alpha.size() + 1, alpha.size() + 2] {
                assert_eq!(schur_expand(&f.realize(n), n).unwrap(), f, "{kind:?}_{alpha} at n={n}");
            }
        }
    }
}

#[test]
fn schur_functions_realise_as_alternant_quotients() {
    for l in partitions_up_to(5) {
        for n in l.len()..=l.size().max(1) + 1 {
            assert_eq!(SymFunc::schur(l.clone()).realize(n), schur_poly(&l.as_composition(), n), "{l}, n={n}");
        }
    }
}

#[test]
fn products_match_polynomial_products() {
    let basis: Vec<Partition> = partitions_up_to(3).collect();
    for a in &basis {
        for b in &basis {
            let (f, g) = (SymFunc::schur(a.clone()), SymFunc::schur(b.clone()));
            let n = a.size() + b.size();
            let direct = schur_expand(&(&f.realize(n) * &g.realize(n)), n).unwrap();
            assert_eq!(multiply(&f, &g), direct, "{a} * {b}");
        }
    }
}

#[test]
fn products_are_associative_up_to_degree_six() {
    let basis: Vec<SymFunc> = partitions_up_to(3)
        .flat_map(|l| {
            let c = l.as_composition();
            [BasisKind::S, BasisKind::H, BasisKind::E, BasisKind::P].map(|k| basis_element(k, &c).unwrap())
        })
        .collect();
    for (i, f) in basis.iter().enumerate().step_by(3) {
        for g in basis.iter().skip(i % 5).step_by(4) {
            for h in basis.iter().skip(i % 7).step_by(5) {
                let d = [f, g, h].iter().map(|x| x.degree().unwrap_or(0)).sum::<usize>();
                if d > 6 {
                    continue;
                }
                assert_eq!(multiply(&multiply(f, g), h), multiply(f, &multiply(g, h)), "{f} | {g} | {h}");
                assert_eq!(multiply(f, g), multiply(g, f));
            }
        }
    }
}

#[test]
fn skew_schur_is_adjoint_to_multiplication() {
    for lambda in partitions_up_to(7) {
        for mu in lambda.subpartitions() {
            let d = lambda.size() - mu.size();
            if d > 5 {
                continue;
            }
            let skew = skew_schur(&lambda, &mu);
            for nu in Partition::all_of_size(d) {
                let f = SymFunc::schur(nu.clone());
                let lhs = scalar(&multiply(&SymFunc::schur(mu.clone()), &f), &SymFunc::schur(lambda.clone()));
                assert_eq!(lhs, scalar(&f, &skew), "{lambda}/{mu} against {nu}");
            }
        }
    }
}

#[test]
fn skew_by_non_contained_shape_vanishes() {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    for (l, m) in [(p(&[3, 1]), p(&[2, 2])), (p(&[2]), p(&[1, 1])), (p(&[4]), p(&[1, 1, 1]))] {
        assert!(skew_schur(&l, &m).is_zero(), "{l}/{m}");
    }
}

#[test]
fn tables_reproduce_kostka_numbers() {
    for d in 0..=5 {
        let (h, e) = (h_to_schur_table(d), e_to_schur_table(d));
        assert_eq!(h.len(), Partition::all_of_size(d).len());
        for (alpha, row) in &h {
            for lambda in Partition::all_of_size(d) {
                let weight = alpha.as_composition();
                assert_eq!(row.coeff(&lambda), kostka(&lambda, &Partition::empty(), &weight, false));
                let shape = lambda.conjugate().to_string().parse().unwrap();
                assert_eq!(e[alpha].coeff(&lambda), BigInt::from(count_ssyt(&shape, &weight)), "{alpha} {lambda}");
            }
        }
    }
}

#[test]
fn kostka_ignores_the_order_and_zeros_of_the_weight() {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let (l, m) = (p(&[4, 3, 1]), p(&[2]));
    let base = kostka(&l, &m, &Composition::new(vec![3, 2, 1]), false);
    for w in [vec![1, 2, 3], vec![0, 3, 0, 2, 1], vec![2, 0, 0, 1, 3]] {
        let w = Composition::new(w);
        assert_eq!(kostka(&l, &m, &w, false), base);
        assert_eq!(BigInt::from(count_ssyt(&"4,3,1/2".parse().unwrap(), &w)), base);
    }
}

#[test]
fn expansion_rejects_bad_input() {
    let x = MultiPoly::variable(2, 3);
    assert!(schur_expand(&x, 3).is_err());
    assert!(schur_expand(&x, 2).is_err());
    assert!(schur_expand(&MultiPoly::zero(2), 2).unwrap().is_zero());
}
