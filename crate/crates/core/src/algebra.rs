//! Finite-dimensional unital associative algebras given by structure
//! constants.
//!
//! Basis products are `e_i · e_j = Σ_k c[i][j][k] e_k`. Elements are plain
//! coordinate vectors in that basis; [`Element`] wraps one together with
//! its algebra when mixing algebras must be rejected.

use std::fmt;

use thiserror::Error;

use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape mismatch in {what}: expected {expected} entries, found {found}")]
    Shape { what: &'static str, expected: usize, found: usize },
    #[error("not associative: (e{0}·e{1})·e{2} ≠ e{0}·(e{1}·e{2})", .triple.0, .triple.1, .triple.2)]
    NotAssociative { triple: (usize, usize, usize) },
    #[error("declared unit u is not a {side} identity: {}", unit_witness(.side, *.index))]
    UnitFails { index: usize, side: Side },
    #[error("elements belong to different algebras")]
    MixedAlgebras,
    #[error("algebras are over different fields")]
    FieldMismatch,
    #[error("idempotent enumeration needs {needed} elements but the cap is {cap}; supply candidate idempotents instead")]
    EnumerationTooLarge { needed: String, cap: u64 },
    #[error("idempotent enumeration is impossible over an infinite field; supply candidate idempotents")]
    EnumerationUnsupported,
}

fn unit_witness(side: &Side, i: usize) -> String {
    match side {
        Side::Left => format!("u·e{i} ≠ e{i}"),
        Side::Right => format!("e{i}·u ≠ e{i}"),
    }
}

/// A validated unital associative algebra. Equality compares the
/// presentation (field, structure constants, unit) and ignores the name.
#[derive(Debug, Clone)]
pub struct Algebra<F: Field> {
    field: F,
    name: String,
    dim: usize,
    mul: Vec<F::Elem>,
    unit: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.mul == other.mul && self.unit == other.unit
    }
}

impl<F: Field> Eq for Algebra<F> {}

/// Checks shapes, associativity on all basis triples, and the two-sided
/// unit, reporting the first failure in lexicographic order.
pub fn validate_table<F: Field>(field: &F, dim: usize, unit: &[F::Elem], mul: &[F::Elem]) -> Result<(), AlgebraError> {
    if mul.len() != dim * dim * dim {
        return Err(AlgebraError::Shape {
            what: "structure constants",
            expected: dim * dim * dim,
            found: mul.len(),
        });
    }
    if unit.len() != dim {
        return Err(AlgebraError::Shape {
            what: "unit",
            expected: dim,
            found: unit.len(),
        });
    }
    let raw = Algebra {
        field: field.clone(),
        name: String::new(),
        dim,
        mul: mul.to_vec(),
        unit: unit.to_vec(),
    };
    // e_i e_j as coordinate vectors, computed once
    let products: Vec<Vec<F::Elem>> = (0..dim * dim).map(|ij| mul[ij * dim..(ij + 1) * dim].to_vec()).collect();
    for i in 0..dim {
        for j in 0..dim {
            let ij = &products[i * dim + j];
            for k in 0..dim {
                let lhs = raw.mul(ij, &raw.basis_element(k));
                let rhs = raw.mul(&raw.basis_element(i), &products[j * dim + k]);
                if lhs != rhs {
                    return Err(AlgebraError::NotAssociative { triple: (i, j, k) });
                }
            }
        }
    }
    for i in 0..dim {
        let e = raw.basis_element(i);
        if raw.mul(unit, &e) != e {
            return Err(AlgebraError::UnitFails { index: i, side: Side::Left });
        }
        if raw.mul(&e, unit) != e {
            return Err(AlgebraError::UnitFails { index: i, side: Side::Right });
        }
    }
    Ok(())
}

impl<F: Field> Algebra<F> {
    /// Builds and validates an algebra; `mul` is `c[i][j][k]` flattened as
    /// `(i * dim + j) * dim + k`.
    pub fn new(field: &F, name: impl Into<String>, dim: usize, unit: Vec<F::Elem>, mul: Vec<F::Elem>) -> Result<Self, AlgebraError> {
        validate_table(field, dim, &unit, &mul)?;
        Ok(Algebra {
            field: field.clone(),
            name: name.into(),
            dim,
            mul,
            unit,
        })
    }

    /// Re-runs the axiom checks.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        validate_table(&self.field, self.dim, &self.unit, &self.mul)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.mul[(i * self.dim + j) * self.dim + k]
    }

    /// `e_i · e_j` as a coordinate slice.
    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        let n = self.dim;
        &self.mul[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn zero_element(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero_element();
        v[i] = self.field.one();
        v
    }

    /// Bilinear product on coordinate vectors.
    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_element();
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let s = f.mul(ai, bj);
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !f.is_zero(c) {
                        *o = f.mul_add(o, &s, c);
                    }
                }
            }
        }
        out
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        self.mul(a, b).iter().zip(self.mul(b, a)).map(|(x, y)| f.sub(x, &y)).collect()
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn is_zero(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul(a, &self.basis_element(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols).expect("square")
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul(&self.basis_element(j), a)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols).expect("square")
    }

    /// `Z(A)`: kernel of the stacked maps `a ↦ [a, e_i]`.
    pub fn center(&self) -> Subspace<F> {
        let n = self.dim;
        let mut m = Matrix::zeros(&self.field, n * n, n);
        for i in 0..n {
            let ei = self.basis_element(i);
            for j in 0..n {
                let c = self.commutator(&self.basis_element(j), &ei);
                for (r, x) in c.into_iter().enumerate() {
                    m.set(i * n + r, j, x);
                }
            }
        }
        m.kernel()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_idempotent(&self, x: &[F::Elem]) -> bool {
        self.mul(x, x) == x
    }

    pub fn is_trivial_idempotent(&self, x: &[F::Elem]) -> bool {
        self.is_zero(x) || x == self.unit()
    }

    /// `1 − x`.
    pub fn complement(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.sub(&self.unit, x)
    }

    /// Span of `{ x·e_i·y }` over the basis.
    pub fn sandwich_span(&self, x: &[F::Elem], y: &[F::Elem]) -> Subspace<F> {
        let vectors: Vec<_> = (0..self.dim).map(|i| self.mul(&self.mul(x, &self.basis_element(i)), y)).collect();
        Subspace::from_spanning(&self.field, self.dim, vectors)
    }

    pub fn element(&self, coords: Vec<F::Elem>) -> Result<Element<'_, F>, AlgebraError> {
        if coords.len() != self.dim {
            return Err(AlgebraError::Shape {
                what: "element",
                expected: self.dim,
                found: coords.len(),
            });
        }
        Ok(Element { algebra: self, coords })
    }

    /// Every element in lexicographic order of coordinates (first
    /// coordinate most significant), or an error when there are more than
    /// `cap` of them.
    pub fn all_elements(&self, cap: u64) -> Result<Vec<Vec<F::Elem>>, AlgebraError> {
        let Some(elems) = self.field.elements() else {
            return Err(AlgebraError::EnumerationUnsupported);
        };
        let q = elems.len() as u64;
        let total = u32::try_from(self.dim).ok().and_then(|d| q.checked_pow(d));
        match total {
            Some(t) if t <= cap => {}
            _ => {
                return Err(AlgebraError::EnumerationTooLarge {
                    needed: format!("{q}^{}", self.dim),
                    cap,
                })
            }
        }
        let mut out = vec![Vec::new()];
        for _ in 0..self.dim {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    elems.iter().map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x.clone());
                        v
                    })
                })
                .collect();
        }
        Ok(out)
    }

    /// All idempotents, by exhaustive search over a finite field.
    pub fn enumerate_idempotents(&self, cap: u64) -> Result<Vec<Idempotent<F>>, AlgebraError> {
        Ok(self.idempotents_among(self.all_elements(cap)?))
    }

    /// Filters user-supplied candidates down to the idempotents among them.
    pub fn idempotents_among<I>(&self, candidates: I) -> Vec<Idempotent<F>>
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        candidates
            .into_iter()
            .filter(|x| x.len() == self.dim && self.is_idempotent(x))
            .map(|x| Idempotent {
                trivial: self.is_trivial_idempotent(&x),
                coords: x,
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotent<F: Field> {
    pub coords: Vec<F::Elem>,
    /// `0` or `1`.
    pub trivial: bool,
}

/// An element tied to its algebra.
#[derive(Debug, Clone)]
pub struct Element<'a, F: Field> {
    algebra: &'a Algebra<F>,
    coords: Vec<F::Elem>,
}

impl<'a, F: Field> Element<'a, F> {
    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn algebra(&self) -> &'a Algebra<F> {
        self.algebra
    }

    fn same_algebra(&self, other: &Self) -> Result<(), AlgebraError> {
        if std::ptr::eq(self.algebra, other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(AlgebraError::MixedAlgebras)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        Ok(Element {
            algebra: self.algebra,
            coords: self.algebra.mul(&self.coords, &other.coords),
        })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        Ok(Element {
            algebra: self.algebra,
            coords: self.algebra.commutator(&self.coords, &other.coords),
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.algebra.is_idempotent(&self.coords)
    }
}

impl<F: Field> PartialEq for Element<'_, F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other).is_ok() && self.coords == other.coords
    }
}
