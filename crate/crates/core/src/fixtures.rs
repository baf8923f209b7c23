//! Built-in trivial extensions, generated for any field.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::field::Field;
use crate::standard;
use crate::trivext::{IdempotentSource, TrivialExtension};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("unknown fixture `{0}` (known: {known})", known = NAMES.join(", "))]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Commutative,
    Triangular,
    TypeStar,
    Counterexample,
    Regular,
    Dual,
    Zero,
    Iterated,
}

pub const NAMES: &[&str] = &[
    "dual_numbers",
    "tri_fff",
    "m2_self",
    "example_SN",
    "dual_bimodule_tri",
    "product_regular",
    "dual_numbers_self",
    "dual_numbers_dual",
    "tri_self",
    "tri_zero",
    "sn_lifted",
];

#[derive(Debug, Clone)]
pub struct Fixture<F: Field> {
    pub name: &'static str,
    pub ext: TrivialExtension<F>,
    pub families: &'static [Family],
    /// A nontrivial idempotent of the base at which the extension is of
    /// type (⋆), for fixtures in that family.
    pub type_star_at: Option<Vec<F::Elem>>,
}

impl<F: Field> Fixture<F> {
    pub fn has(&self, family: Family) -> bool {
        self.families.contains(&family)
    }

    /// Exhaustive enumeration over finite fields; 0/1 coordinate vectors
    /// as candidates over `Q`.
    pub fn idempotent_source(&self, cap: u64) -> IdempotentSource<F> {
        let f = self.ext.field();
        if f.order().is_some() {
            IdempotentSource::Exhaustive { cap }
        } else {
            IdempotentSource::Candidates(zero_one_vectors(f, self.ext.base_dim()))
        }
    }
}

/// All vectors with entries in `{0, 1}`, first coordinate most significant.
pub fn zero_one_vectors<F: Field>(field: &F, n: usize) -> Vec<Vec<F::Elem>> {
    (0..1u64 << n)
        .map(|bits| (0..n).map(|i| if bits >> (n - 1 - i) & 1 == 1 { field.one() } else { field.zero() }).collect())
        .collect()
}

fn regular_ext<F: Field>(a: Algebra<F>) -> TrivialExtension<F> {
    let a = Arc::new(a);
    TrivialExtension::new(a.clone(), Bimodule::regular(a)).expect("regular bimodule")
}

fn dual_ext<F: Field>(a: Algebra<F>) -> TrivialExtension<F> {
    let a = Arc::new(a);
    TrivialExtension::new(a.clone(), Bimodule::dual(a)).expect("dual bimodule")
}

fn elems<F: Field>(field: &F, v: &[i64]) -> Vec<F::Elem> {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn build<F: Field>(name: &str, field: &F) -> Result<Fixture<F>, FixtureError> {
    use Family::*;
    let k = standard::field_algebra(field);
    let (name, ext, families, type_star_at): (&'static str, _, &'static [Family], _) = match name {
        "dual_numbers" => ("dual_numbers", regular_ext(k), &[Commutative, Regular], None),
        "tri_fff" => {
            let m = standard::tri_bimodule(field);
            let ext = TrivialExtension::new(m.algebra().clone(), m).expect("F over F×F");
            ("tri_fff", ext, &[Triangular, TypeStar], Some(elems(field, &[1, 0])))
        }
        "m2_self" => ("m2_self", regular_ext(standard::matrix_algebra(field, 2)), &[Regular], None),
        "example_SN" => {
            let (s, n) = standard::example_sn(field);
            (
                "example_SN",
                TrivialExtension::new(s, n).expect("N over S"),
                &[Counterexample, TypeStar],
                Some(elems(field, &[0, 0, 1])),
            )
        }
        "dual_bimodule_tri" => ("dual_bimodule_tri", dual_ext(standard::tri_fff(field)), &[Triangular, Dual], None),
        "product_regular" => {
            let p = standard::direct_product(&k, &k).expect("same field").with_name("F×F");
            ("product_regular", regular_ext(p), &[Commutative, Regular], None)
        }
        "dual_numbers_self" => ("dual_numbers_self", regular_ext(standard::dual_numbers(field)), &[Commutative, Regular], None),
        "dual_numbers_dual" => ("dual_numbers_dual", dual_ext(standard::dual_numbers(field)), &[Commutative, Dual], None),
        "tri_self" => ("tri_self", regular_ext(standard::tri_fff(field)), &[Triangular, Regular], None),
        "tri_zero" => {
            let t = Arc::new(standard::tri_fff(field));
            let ext = TrivialExtension::new(t.clone(), Bimodule::zero(t)).expect("zero bimodule");
            ("tri_zero", ext, &[Triangular, Zero], None)
        }
        "sn_lifted" => {
            let (s, n) = standard::example_sn(field);
            let inner = TrivialExtension::new(s, n.clone()).expect("N over S");
            let lifted = n.lift(&inner).expect("N lifts to S⋉N");
            let ext = TrivialExtension::new(inner.total().clone(), lifted).expect("lifted module");
            ("sn_lifted", ext, &[Counterexample, Iterated], None)
        }
        other => return Err(FixtureError::Unknown(other.to_string())),
    };
    Ok(Fixture {
        name,
        ext,
        families,
        type_star_at,
    })
}

pub fn all<F: Field>(field: &F) -> Vec<Fixture<F>> {
    NAMES.iter().map(|n| build(n, field).expect("registered fixture builds")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn every_fixture_builds_and_validates() {
        for p in [2, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for fx in all(&f) {
                assert!(fx.ext.total().validate().is_ok(), "{}", fx.name);
                assert!(fx.ext.module().validate().is_ok(), "{}", fx.name);
            }
        }
        assert_eq!(all(&Rationals).len(), NAMES.len());
    }

    #[test]
    fn type_star_markers_hold() {
        let f = PrimeField::new(3).unwrap();
        for fx in all(&f) {
            if let Some(e) = &fx.type_star_at {
                assert!(fx.ext.type_star(e).unwrap().holds, "{}", fx.name);
            }
            assert_eq!(fx.has(Family::TypeStar), fx.type_star_at.is_some());
        }
    }

    #[test]
    fn unknown_name() {
        let err = build("nope", &Rationals).unwrap_err();
        assert!(err.to_string().contains("example_SN"));
    }

    #[test]
    fn zero_one_order() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(zero_one_vectors(&f, 2), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
