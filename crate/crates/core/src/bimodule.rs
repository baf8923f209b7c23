//! Unital bimodules over an [`Algebra`], given by action matrices.
//!
//! Module elements are column vectors. `L_i` is the matrix of `m ↦ e_i·m`
//! and `R_i` the matrix of `m ↦ m·e_i`; column `c` of either holds the
//! image of the module basis vector `m_c`.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Algebra, Side};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::trivext::TrivialExtension;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BimoduleError {
    #[error("shape mismatch in {what}: expected {expected}, found {found}")]
    Shape { what: &'static str, expected: usize, found: usize },
    #[error("unit does not act as the identity on the {0}")]
    UnitFails(Side),
    #[error("left action is not multiplicative: L(e{0}·e{1}) ≠ L(e{0})·L(e{1})", .pair.0, .pair.1)]
    LeftNotMultiplicative { pair: (usize, usize) },
    #[error("right action is not multiplicative: R(e{0}·e{1}) ≠ R(e{1})·R(e{0})", .pair.0, .pair.1)]
    RightNotMultiplicative { pair: (usize, usize) },
    #[error("actions do not commute: (e{0}·m)·e{1} ≠ e{0}·(m·e{1})", .pair.0, .pair.1)]
    ActionsDoNotCommute { pair: (usize, usize) },
    #[error("bimodule is over a different algebra than expected")]
    AlgebraMismatch,
}

/// A validated unital bimodule. Equality ignores the name.
#[derive(Debug, Clone)]
pub struct Bimodule<F: Field> {
    algebra: Arc<Algebra<F>>,
    name: String,
    dim: usize,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

impl<F: Field> PartialEq for Bimodule<F> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.dim == other.dim && self.left == other.left && self.right == other.right
    }
}

impl<F: Field> Eq for Bimodule<F> {}

/// Output of [`Bimodule::annihilators`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilators<F: Field> {
    pub left: Subspace<F>,
    pub right: Subspace<F>,
    pub both: Subspace<F>,
}

/// `Σ a_i M_i`.
fn combine_matrices<F: Field>(field: &F, dim: usize, coeffs: &[F::Elem], ms: &[Matrix<F>]) -> Matrix<F> {
    let mut out = Matrix::zeros(field, dim, dim);
    for (a, m) in coeffs.iter().zip(ms) {
        if !field.is_zero(a) {
            out = out.add(&m.scale(a));
        }
    }
    out
}

pub fn validate_actions<F: Field>(algebra: &Algebra<F>, dim: usize, left: &[Matrix<F>], right: &[Matrix<F>]) -> Result<(), BimoduleError> {
    let n = algebra.dim();
    let f = algebra.field();
    for (what, ms) in [("left actions", left), ("right actions", right)] {
        if ms.len() != n {
            return Err(BimoduleError::Shape {
                what,
                expected: n,
                found: ms.len(),
            });
        }
        if let Some(m) = ms.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(BimoduleError::Shape {
                what,
                expected: dim,
                found: if m.rows() != dim { m.rows() } else { m.cols() },
            });
        }
    }
    let id = Matrix::identity(f, dim);
    if combine_matrices(f, dim, algebra.unit(), left) != id {
        return Err(BimoduleError::UnitFails(Side::Left));
    }
    if combine_matrices(f, dim, algebra.unit(), right) != id {
        return Err(BimoduleError::UnitFails(Side::Right));
    }
    for i in 0..n {
        for j in 0..n {
            let prod = algebra.basis_product(i, j);
            if combine_matrices(f, dim, prod, left) != left[i].matmul(&left[j]) {
                return Err(BimoduleError::LeftNotMultiplicative { pair: (i, j) });
            }
            if combine_matrices(f, dim, prod, right) != right[j].matmul(&right[i]) {
                return Err(BimoduleError::RightNotMultiplicative { pair: (i, j) });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if left[i].matmul(&right[j]) != right[j].matmul(&left[i]) {
                return Err(BimoduleError::ActionsDoNotCommute { pair: (i, j) });
            }
        }
    }
    Ok(())
}

impl<F: Field> Bimodule<F> {
    pub fn new(algebra: Arc<Algebra<F>>, name: impl Into<String>, dim: usize, left: Vec<Matrix<F>>, right: Vec<Matrix<F>>) -> Result<Self, BimoduleError> {
        validate_actions(&algebra, dim, &left, &right)?;
        Ok(Bimodule {
            algebra,
            name: name.into(),
            dim,
            left,
            right,
        })
    }

    pub fn validate(&self) -> Result<(), BimoduleError> {
        validate_actions(&self.algebra, self.dim, &self.left, &self.right)
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(algebra: Arc<Algebra<F>>) -> Self {
        let n = algebra.dim();
        let left = (0..n).map(|i| algebra.left_mult_matrix(&algebra.basis_element(i))).collect();
        let right = (0..n).map(|i| algebra.right_mult_matrix(&algebra.basis_element(i))).collect();
        let name = algebra.name().to_string();
        Bimodule {
            algebra,
            name,
            dim: n,
            left,
            right,
        }
    }

    pub fn zero(algebra: Arc<Algebra<F>>) -> Self {
        let n = algebra.dim();
        let f = algebra.field().clone();
        Bimodule {
            algebra,
            name: "0".to_string(),
            dim: 0,
            left: vec![Matrix::zeros(&f, 0, 0); n],
            right: vec![Matrix::zeros(&f, 0, 0); n],
        }
    }

    /// `DA = Hom(A, F)` with `(a·φ·b)(x) = φ(b·x·a)`, in the dual basis.
    pub fn dual(algebra: Arc<Algebra<F>>) -> Self {
        let n = algebra.dim();
        let f = algebra.field().clone();
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for i in 0..n {
            let mut l = Matrix::zeros(&f, n, n);
            let mut r = Matrix::zeros(&f, n, n);
            for j in 0..n {
                for c in 0..n {
                    // (e_i·φ_c)(e_j) = φ_c(e_j·e_i),  (φ_c·e_i)(e_j) = φ_c(e_i·e_j)
                    l.set(j, c, algebra.structure_constant(j, i, c).clone());
                    r.set(j, c, algebra.structure_constant(i, j, c).clone());
                }
            }
            left.push(l);
            right.push(r);
        }
        let name = format!("D{}", algebra.name());
        Bimodule {
            algebra,
            name,
            dim: n,
            left,
            right,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
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

    pub fn left_matrices(&self) -> &[Matrix<F>] {
        &self.left
    }

    pub fn right_matrices(&self) -> &[Matrix<F>] {
        &self.right
    }

    pub fn zero_element(&self) -> Vec<F::Elem> {
        vec![self.field().zero(); self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero_element();
        v[i] = self.field().one();
        v
    }

    /// Matrix of `m ↦ a·m`.
    pub fn left_action(&self, a: &[F::Elem]) -> Matrix<F> {
        combine_matrices(self.field(), self.dim, a, &self.left)
    }

    /// Matrix of `m ↦ m·a`.
    pub fn right_action(&self, a: &[F::Elem]) -> Matrix<F> {
        combine_matrices(self.field(), self.dim, a, &self.right)
    }

    pub fn act_left(&self, a: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut out = self.zero_element();
        for (ai, l) in a.iter().zip(&self.left) {
            if f.is_zero(ai) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(l.apply(m)) {
                *o = f.mul_add(o, ai, &x);
            }
        }
        out
    }

    pub fn act_right(&self, m: &[F::Elem], a: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut out = self.zero_element();
        for (ai, r) in a.iter().zip(&self.right) {
            if f.is_zero(ai) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(r.apply(m)) {
                *o = f.mul_add(o, ai, &x);
            }
        }
        out
    }

    /// `[a, m] = a·m − m·a`.
    pub fn bracket(&self, a: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        self.act_left(a, m).iter().zip(self.act_right(m, a)).map(|(x, y)| f.sub(x, &y)).collect()
    }

    /// Matrix of `m ↦ [a, m]`.
    pub fn bracket_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        self.left_action(a).sub(&self.right_action(a))
    }

    fn annihilator(&self, actions: &[Matrix<F>]) -> Subspace<F> {
        let n = self.algebra.dim();
        let m2 = self.dim * self.dim;
        let cols: Vec<_> = actions.iter().map(Matrix::flatten_columns).collect();
        Matrix::from_columns(self.field(), m2, &cols)
            .unwrap_or_else(|_| Matrix::zeros(self.field(), m2, n))
            .kernel()
    }

    /// `l.Ann(M)`, `r.Ann(M)` and their intersection.
    pub fn annihilators(&self) -> Annihilators<F> {
        let left = self.annihilator(&self.left);
        let right = self.annihilator(&self.right);
        let both = left.intersect(&right).expect("same ambient");
        Annihilators { left, right, both }
    }

    /// True iff `z·m = m·z` for every central `z` and every `m`.
    pub fn symmetric_center_action(&self) -> bool {
        self.algebra.center().basis().all(|z| self.bracket_matrix(z).is_zero())
    }

    /// The same module viewed over `A ⋉ M` through `(a, m)·n = a·n`,
    /// `n·(a, m) = n·a`.
    pub fn lift(&self, ext: &TrivialExtension<F>) -> Result<Self, BimoduleError> {
        if **ext.base() != *self.algebra {
            return Err(BimoduleError::AlgebraMismatch);
        }
        let f = self.field();
        let extra = ext.module().dim();
        let zero = Matrix::zeros(f, self.dim, self.dim);
        let left = self.left.iter().cloned().chain(std::iter::repeat_n(zero.clone(), extra)).collect();
        let right = self.right.iter().cloned().chain(std::iter::repeat_n(zero, extra)).collect();
        Bimodule::new(ext.total().clone(), self.name.clone(), self.dim, left, right)
    }

    /// Replaces the acting algebra by an equal one (for instance a freshly
    /// parsed copy).
    pub fn over(self, algebra: Arc<Algebra<F>>) -> Result<Self, BimoduleError> {
        if *algebra != *self.algebra {
            return Err(BimoduleError::AlgebraMismatch);
        }
        Ok(Bimodule { algebra, ..self })
    }
}
