mod common;

use std::collections::HashSet;

use algcoh_core::derivations::{self, ExtensionSpaces};
use algcoh_core::field::PrimeField;
use algcoh_core::fixtures::{self, Fixture};
use algcoh_core::trivext::IdempotentSource;

use common::*;

/// Enumeration budget in entries of a map: `p^LIMIT` maps at most.
fn budget(p: u64) -> usize {
    if p == 2 {
        16
    } else {
        9
    }
}

fn count(p: u64, rows: usize, cols: usize, pred: impl Fn(&Lin) -> bool) -> u64 {
    all_maps(p, rows, cols).filter(|m| pred(m)).count() as u64
}

fn check_spaces(fx: &Fixture<PrimeField>) {
    let p = fx.ext.field().characteristic();
    let name = fx.name;
    let a = Alg::of(fx.ext.base());
    let b = Bim::of(fx.ext.module());
    let module = fx.ext.module();
    let (n, m) = (a.n, b.m);
    let lim = budget(p);

    if n * m <= lim {
        let der = derivations::derivation_space(module);
        assert_eq!(der.dim(), log_p(p, count(p, m, n, |d| leibniz(&a, &b, d))), "{name}: Der(A,M) over F{p}");
        for d in der.basis_maps() {
            assert!(leibniz(&a, &b, &Lin::of(&d)), "{name}: basis map fails Leibniz");
        }
        let e = derivations::e_space(module);
        assert_eq!(e.dim(), log_p(p, count(p, n, m, |t| in_e(&a, &b, t))), "{name}: E(M) over F{p}");
        for t in e.basis_maps() {
            assert!(in_e(&a, &b, &Lin::of(&t)), "{name}: basis map not in E");
        }
    }
    let inner = inner_derivations(&a, &b);
    assert_eq!(
        derivations::inner_derivation_space(module).dim(),
        log_p(p, inner.len() as u64),
        "{name}: Innder(A,M)"
    );
    for d in &inner {
        assert!(leibniz(&a, &b, d), "{name}: inner map fails Leibniz");
    }

    if m * m <= lim {
        let end = derivations::bimodule_end_space(module);
        let end_maps: HashSet<Lin> = all_maps(p, m, m).filter(|s| endomorphism(&b, s)).collect();
        assert_eq!(end.dim(), log_p(p, end_maps.len() as u64), "{name}: End(M)");
        let gd = module_brackets(&a, &b, false);
        assert_eq!(derivations::inn_gd(module).dim(), log_p(p, gd.len() as u64), "{name}: InnGd");
        let bi = gd.iter().filter(|s| end_maps.contains(s)).count() as u64;
        assert_eq!(derivations::inn_bi(module).dim(), log_p(p, bi), "{name}: InnBi");
        let central = module_brackets(&a, &b, true);
        assert_eq!(derivations::innbi_central(module).dim(), log_p(p, central.len() as u64), "{name}: Innbi");

        if n * n <= lim {
            let der_a: Vec<Lin> = all_maps(p, n, n).filter(|d| algebra_derivation(&a, d)).collect();
            let pairs: u64 = der_a.iter().map(|d| count(p, m, m, |s| generalized(&b, d, s))).sum();
            let gder = derivations::gder_space(module);
            assert_eq!(gder.dim(), log_p(p, pairs), "{name}: GDer pairs");
            for (d, s) in gder.basis_pairs() {
                assert!(generalized(&b, &Lin::of(&d), &Lin::of(&s)), "{name}: basis pair fails");
            }
            let spaces = ExtensionSpaces::compute(&fx.ext);
            assert_eq!(spaces.gder.dim(), gder.dim(), "{name}: der");
        }
    }

    let center = a.elements().into_iter().filter(|z| a.is_central(z)).count() as u64;
    assert_eq!(fx.ext.base().center().dim(), log_p(p, center), "{name}: Z(A)");
}

fn check_total(fx: &Fixture<PrimeField>) {
    let p = fx.ext.field().characteristic();
    let name = fx.name;
    let a = Alg::of(fx.ext.base());
    let b = Bim::of(fx.ext.module());
    let t = trivial_extension(&a, &b);
    let lib = Alg::of(fx.ext.total());
    assert_eq!(t.c, lib.c, "{name}: product table of A⋉M");
    assert_eq!(t.unit, lib.unit, "{name}: unit of A⋉M");

    let tn = t.n;
    let spaces = ExtensionSpaces::compute(&fx.ext);
    if tn * tn <= budget(p) {
        let der = count(p, tn, tn, |d| algebra_derivation(&t, d));
        assert_eq!(spaces.der_total.dim(), log_p(p, der), "{name}: Der(A⋉M) over F{p}");
    }
    let reg = Bim::regular(&t);
    let inner = inner_derivations(&t, &reg);
    assert_eq!(spaces.innder_total.dim(), log_p(p, inner.len() as u64), "{name}: Innder(A⋉M)");

    let restricted: HashSet<(Lin, Lin)> = a
        .elements()
        .into_iter()
        .map(|a0| {
            let da: Vec<V> = (0..a.n).map(|i| sub(p, &a.mul(&a0, &a.basis(i)), &a.mul(&a.basis(i), &a0))).collect();
            let s: Vec<V> = (0..b.m).map(|j| sub(p, &b.l(&a0, &b.basis(j)), &b.r(&b.basis(j), &a0))).collect();
            (from_cols(a.n, &da), from_cols(b.m, &s))
        })
        .collect();
    assert_eq!(spaces.innder_pairs.dim(), log_p(p, restricted.len() as u64), "{name}: innder");

    let center = t.elements().into_iter().filter(|z| t.is_central(z)).count() as u64;
    assert_eq!(fx.ext.center_comparison().direct.dim(), log_p(p, center), "{name}: Z(A⋉M)");
}

fn check_idempotents(fx: &Fixture<PrimeField>) {
    let name = fx.name;
    let a = Alg::of(fx.ext.base());
    let b = Bim::of(fx.ext.module());
    let lib = fx.ext.base().enumerate_idempotents(1 << 16).unwrap();
    let oracle = idempotents(&a);
    assert_eq!(lib.iter().map(|i| i.coords.clone()).collect::<Vec<_>>(), oracle, "{name}: idempotents");

    let found = fx.ext.find_triangular_representation(&IdempotentSource::Exhaustive { cap: 1 << 16 });
    let expected = triangular_idempotent(&a, &b);
    assert_eq!(found.found().map(|w| w.idempotent.clone()), expected, "{name}: first triangular idempotent");
}

#[test]
fn regular_bimodule_matches_table() {
    for p in [2, 3] {
        let f = PrimeField::new(p).unwrap();
        for fx in fixtures::all(&f) {
            let base = fx.ext.base().clone();
            let a = Alg::of(&base);
            let lib = Bim::of(&algcoh_core::bimodule::Bimodule::regular(base));
            let ours = Bim::regular(&a);
            assert_eq!((lib.left, lib.right), (ours.left, ours.right), "{}", fx.name);
        }
    }
}

#[test]
fn module_spaces_match_enumeration_f2() {
    let f = PrimeField::new(2).unwrap();
    for fx in fixtures::all(&f) {
        check_spaces(&fx);
    }
}

#[test]
fn module_spaces_match_enumeration_f3() {
    let f = PrimeField::new(3).unwrap();
    for fx in fixtures::all(&f) {
        check_spaces(&fx);
    }
}

#[test]
fn extension_spaces_match_enumeration() {
    for p in [2, 3] {
        let f = PrimeField::new(p).unwrap();
        for fx in fixtures::all(&f) {
            check_total(&fx);
        }
    }
}

#[test]
fn idempotents_and_triangular_search_match_enumeration() {
    for p in [2, 3] {
        let f = PrimeField::new(p).unwrap();
        for fx in fixtures::all(&f) {
            if fx.ext.base_dim() <= 4 {
                check_idempotents(&fx);
            }
        }
    }
}

#[test]
fn counts_are_nontrivial() {
    // guards against a vacuous oracle
    let f = PrimeField::new(2).unwrap();
    let fx = fixtures::build("tri_self", &f).unwrap();
    let a = Alg::of(fx.ext.base());
    let b = Bim::regular(&a);
    assert_eq!(count(2, 3, 3, |d| leibniz(&a, &b, d)), 4);
    assert_eq!(inner_derivations(&a, &b).len(), 4);
}
