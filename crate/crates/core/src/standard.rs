//! Builders for the standard algebras and bimodules.
//!
//! Basis orders are fixed: matrix algebras use `E_ij` in lexicographic
//! order, direct products concatenate bases, and triangular algebras order
//! their basis as (A-part, M-part, B-part).

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::bimodule::{Bimodule, BimoduleError};
use crate::field::Field;
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error("not an (A,B)-bimodule: {0}")]
    NotTwoSided(&'static str),
}

/// Structure-constant table filled from a product rule on basis indices.
fn table<F: Field>(field: &F, n: usize, rule: impl Fn(usize, usize) -> Vec<(usize, F::Elem)>) -> Vec<F::Elem> {
    let mut mul = vec![field.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in rule(i, j) {
                let slot = &mut mul[(i * n + j) * n + k];
                *slot = field.add(slot, &c);
            }
        }
    }
    mul
}

pub fn field_algebra<F: Field>(field: &F) -> Algebra<F> {
    Algebra::new(field, format!("F{}", field.spec()), 1, vec![field.one()], vec![field.one()]).expect("the base field is an algebra")
}

/// `F[x]/(x²)` with basis `{1, x}`.
pub fn dual_numbers<F: Field>(field: &F) -> Algebra<F> {
    let mul = table(field, 2, |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, field.one())],
        _ => vec![],
    });
    Algebra::new(field, "D", 2, vec![field.one(), field.zero()], mul).expect("dual numbers are an algebra")
}

/// `M_n(F)` with basis `E_ij` at index `i*n + j`.
pub fn matrix_algebra<F: Field>(field: &F, n: usize) -> Algebra<F> {
    let d = n * n;
    let mul = table(field, d, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            vec![(i * n + l, field.one())]
        } else {
            vec![]
        }
    });
    let mut unit = vec![field.zero(); d];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    Algebra::new(field, format!("M{n}"), d, unit, mul).expect("matrix algebras are algebras")
}

pub fn direct_product<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Result<Algebra<F>, AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let mul = table(f, na + nb, |i, j| {
        if i < na && j < na {
            a.basis_product(i, j).iter().cloned().enumerate().collect()
        } else if i >= na && j >= na {
            b.basis_product(i - na, j - na).iter().cloned().enumerate().map(|(k, c)| (na + k, c)).collect()
        } else {
            vec![]
        }
    });
    let unit = a.unit().iter().chain(b.unit()).cloned().collect();
    Algebra::new(f, format!("{}×{}", a.name(), b.name()), na + nb, unit, mul)
}

/// `Tri(A; M; B)`, where `M` is given as a bimodule over `A × B` with
/// `(a, b)·m = a·m` and `m·(a, b) = m·b`.
pub fn triangular<F: Field>(a: &Algebra<F>, b: &Algebra<F>, m: &Bimodule<F>) -> Result<Algebra<F>, BuildError> {
    let ab = direct_product(a, b)?;
    if **m.algebra() != ab {
        return Err(BimoduleError::AlgebraMismatch.into());
    }
    let f = a.field();
    let (na, nm, nb) = (a.dim(), m.dim(), b.dim());
    let b_unit: Vec<_> = std::iter::repeat_n(f.zero(), na).chain(b.unit().iter().cloned()).collect();
    let a_unit: Vec<_> = a.unit().iter().cloned().chain(std::iter::repeat_n(f.zero(), nb)).collect();
    if !m.left_action(&b_unit).is_zero() {
        return Err(BuildError::NotTwoSided("B acts nontrivially on the left"));
    }
    if !m.right_action(&a_unit).is_zero() {
        return Err(BuildError::NotTwoSided("A acts nontrivially on the right"));
    }
    let n = na + nm + nb;
    let (m0, b0) = (na, na + nm);
    let mul = table(f, n, |i, j| {
        let col = |mat: &Matrix<F>, c: usize| -> Vec<(usize, F::Elem)> { mat.column(c).into_iter().enumerate().map(|(k, x)| (m0 + k, x)).collect() };
        match (i < m0, i >= m0 && i < b0, j < m0, j >= m0 && j < b0) {
            // A·A
            (true, _, true, _) => a.basis_product(i, j).iter().cloned().enumerate().collect(),
            // A·M
            (true, _, _, true) => col(&m.left_matrices()[i], j - m0),
            // M·B
            (_, true, false, false) => col(&m.right_matrices()[na + (j - b0)], i - m0),
            // B·B
            (false, false, false, false) => b.basis_product(i - b0, j - b0).iter().cloned().enumerate().map(|(k, c)| (b0 + k, c)).collect(),
            _ => vec![],
        }
    });
    let mut unit = vec![f.zero(); n];
    for (k, x) in a.unit().iter().enumerate() {
        unit[k] = x.clone();
    }
    for (k, x) in b.unit().iter().enumerate() {
        unit[b0 + k] = x.clone();
    }
    let name = format!("Tri({},{},{})", a.name(), m.name(), b.name());
    Ok(Algebra::new(f, name, n, unit, mul)?)
}

/// `F` as an `(F, F)`-bimodule, i.e. over `F × F` with `(a, b)·m = a·m`
/// and `m·(a, b) = m·b`.
pub fn tri_bimodule<F: Field>(field: &F) -> Bimodule<F> {
    let k = field_algebra(field);
    let ff = Arc::new(direct_product(&k, &k).expect("same field").with_name("F×F"));
    let one = Matrix::identity(field, 1);
    let zero = Matrix::zeros(field, 1, 1);
    Bimodule::new(ff, "F", 1, vec![one.clone(), zero.clone()], vec![zero, one]).expect("F is an (F,F)-bimodule")
}

/// Upper triangular 2×2 matrices over the base field, basis `(E11, E12, E22)`.
pub fn tri_fff<F: Field>(field: &F) -> Algebra<F> {
    let k = field_algebra(field);
    triangular(&k, &k, &tri_bimodule(field))
        .expect("Tri(F,F,F) is an algebra")
        .with_name("Tri(F,F,F)")
}

/// `S = Tri(F, F, F)` and the `S`-bimodule `N = F` with
/// `((a, b), m)·n = b·n` and `n·((a, b), m) = n·a`.
pub fn example_sn<F: Field>(field: &F) -> (Arc<Algebra<F>>, Bimodule<F>) {
    let s = Arc::new(tri_fff(field).with_name("S"));
    let one = Matrix::identity(field, 1);
    let zero = Matrix::zeros(field, 1, 1);
    let left = vec![zero.clone(), zero.clone(), one.clone()];
    let right = vec![one, zero.clone(), zero];
    let n = Bimodule::new(s.clone(), "N", 1, left, right).expect("N is an S-bimodule");
    (s, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn matrix_algebra_shape() {
        let f = PrimeField::new(2).unwrap();
        let m2 = matrix_algebra(&f, 2);
        assert_eq!(m2.dim(), 4);
        assert_eq!(m2.unit(), &[1, 0, 0, 1]);
        assert!(m2.validate().is_ok());
        // E12·E21 = E11
        assert_eq!(m2.mul(&m2.basis_element(1), &m2.basis_element(2)), m2.basis_element(0));
    }

    #[test]
    fn direct_product_is_componentwise() {
        let f = PrimeField::new(2).unwrap();
        let k = field_algebra(&f);
        let p = direct_product(&k, &k).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.mul(&[1, 1], &[0, 1]), vec![0, 1]);
        assert_eq!(p.mul(&[1, 0], &[0, 1]), vec![0, 0]);
        assert!(direct_product(&k, &field_algebra(&PrimeField::new(3).unwrap())).is_err());
    }

    #[test]
    fn triangular_over_f3() {
        let f = PrimeField::new(3).unwrap();
        let t = tri_fff(&f);
        assert_eq!(t.dim(), 3);
        assert_eq!(t.center().dim(), 1);
        // E12·E22 = E12 and E22·E12 = 0
        assert_eq!(t.mul(&[0, 1, 0], &[0, 0, 1]), vec![0, 1, 0]);
        assert_eq!(t.mul(&[0, 0, 1], &[0, 1, 0]), vec![0, 0, 0]);
    }

    #[test]
    fn triangular_rejects_non_two_sided_module() {
        let f = PrimeField::new(2).unwrap();
        let k = field_algebra(&f);
        let ff = Arc::new(direct_product(&k, &k).unwrap());
        // regular F×F-bimodule: (0,1) acts nontrivially on the left
        let reg = Bimodule::regular(ff);
        assert!(matches!(triangular(&k, &k, &reg), Err(BuildError::NotTwoSided(_))));
    }

    #[test]
    fn larger_triangular_validates() {
        let f = PrimeField::new(3).unwrap();
        let m2 = matrix_algebra(&f, 2);
        let k = field_algebra(&f);
        let ab = Arc::new(direct_product(&m2, &k).unwrap());
        // M = F^2 column vectors: M2 acts on the left, F on the right by scalars
        let mut left = Vec::new();
        for idx in 0..4 {
            let (i, j) = (idx / 2, idx % 2);
            let mut l = Matrix::zeros(&f, 2, 2);
            l.set(i, j, 1);
            left.push(l);
        }
        left.push(Matrix::zeros(&f, 2, 2));
        let mut right = vec![Matrix::zeros(&f, 2, 2); 4];
        right.push(Matrix::identity(&f, 2));
        let m = Bimodule::new(ab, "F2", 2, left, right).unwrap();
        let t = triangular(&m2, &k, &m).unwrap();
        assert_eq!(t.dim(), 7);
        assert_eq!(t.center().dim(), 1);
    }
}
