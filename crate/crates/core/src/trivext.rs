//! Trivial extensions `A ⋉ M` with product `(a, m)(b, n) = (ab, an + mb)`.
//!
//! The total algebra's basis is the basis of `A` followed by the basis of
//! `M`, so `π_A` and `π_M` are coordinate projections.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::bimodule::Bimodule;
use crate::field::Field;
use crate::linalg::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrivextError {
    #[error("bimodule is over a different algebra than the base")]
    AlgebraMismatch,
    #[error("element is not an idempotent of the base algebra")]
    NotIdempotent,
    #[error("idempotent is trivial (0 or 1)")]
    TrivialIdempotent,
    #[error("element has {found} coordinates, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialExtension<F: Field> {
    base: Arc<Algebra<F>>,
    module: Arc<Bimodule<F>>,
    total: Arc<Algebra<F>>,
}

impl<F: Field> TrivialExtension<F> {
    pub fn new(base: Arc<Algebra<F>>, module: Bimodule<F>) -> Result<Self, TrivextError> {
        if **module.algebra() != *base {
            return Err(TrivextError::AlgebraMismatch);
        }
        let f = base.field();
        let (n, m) = (base.dim(), module.dim());
        let d = n + m;
        let mut mul = vec![f.zero(); d * d * d];
        let mut put = |i: usize, j: usize, k: usize, x: &F::Elem| mul[(i * d + j) * d + k] = x.clone();
        for i in 0..n {
            for j in 0..n {
                for (k, x) in base.basis_product(i, j).iter().enumerate() {
                    put(i, j, k, x);
                }
            }
            for c in 0..m {
                // e_i · m_c and m_c · e_i
                for (k, x) in module.left_matrices()[i].column(c).iter().enumerate() {
                    put(i, n + c, n + k, x);
                }
                for (k, x) in module.right_matrices()[i].column(c).iter().enumerate() {
                    put(n + c, i, n + k, x);
                }
            }
        }
        let unit = base.unit().iter().cloned().chain(std::iter::repeat_n(f.zero(), m)).collect();
        let name = format!("{}⋉{}", base.name(), module.name());
        let total = Algebra::new(f, name, d, unit, mul)?;
        Ok(TrivialExtension {
            base,
            module: Arc::new(module),
            total: Arc::new(total),
        })
    }

    pub fn base(&self) -> &Arc<Algebra<F>> {
        &self.base
    }

    pub fn module(&self) -> &Arc<Bimodule<F>> {
        &self.module
    }

    pub fn total(&self) -> &Arc<Algebra<F>> {
        &self.total
    }

    pub fn field(&self) -> &F {
        self.base.field()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn module_dim(&self) -> usize {
        self.module.dim()
    }

    /// `(a, m)` as a coordinate vector of the total algebra.
    pub fn pair(&self, a: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().chain(m).cloned().collect()
    }

    pub fn project_base(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        x[..self.base_dim()].to_vec()
    }

    pub fn project_module(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        x[self.base_dim()..].to_vec()
    }

    /// Center of the total algebra computed two ways.
    pub fn center_comparison(&self) -> CenterComparison<F> {
        let f = self.field();
        let (n, m) = (self.base_dim(), self.module_dim());
        let direct = self.total.center();

        // a ∈ Z(A) with [a, y] = 0 for all y
        let base_center = self.base.center();
        let acting_trivially = base_center.preimage(&Subspace::zero(f, m * m), |a| self.module.bracket_matrix(a).flatten_columns());
        // m with [b, m] = 0 for all b
        let mut stacked = crate::linalg::Matrix::zeros(f, n * m, m);
        for i in 0..n {
            let br = self.module.bracket_matrix(&self.base.basis_element(i));
            for r in 0..m {
                for c in 0..m {
                    stacked.set(i * m + r, c, br.get(r, c).clone());
                }
            }
        }
        let module_part = stacked.kernel();
        let formula = Subspace::from_spanning(
            f,
            n + m,
            acting_trivially
                .basis()
                .map(|a| self.pair(a, &self.module.zero_element()))
                .chain(module_part.basis().map(|y| self.pair(&self.base.zero_element(), y)))
                .collect::<Vec<_>>(),
        );

        let proj_a = direct.map(n, |x| self.project_base(x));
        let proj_m = direct.map(m, |x| self.project_module(x));
        let product = Subspace::from_spanning(
            f,
            n + m,
            proj_a
                .basis()
                .map(|a| self.pair(a, &self.module.zero_element()))
                .chain(proj_m.basis().map(|y| self.pair(&self.base.zero_element(), y)))
                .collect::<Vec<_>>(),
        );
        let product_decomposition = product == direct && proj_a.dim() + proj_m.dim() == direct.dim();
        CenterComparison {
            agree: direct == formula,
            product_decomposition,
            direct,
            formula,
        }
    }

    /// Whether `(1−e)·A·e = 0` and `(1−e)·M·e = 0`.
    pub fn splits_at(&self, e: &[F::Elem]) -> bool {
        let fe = self.base.complement(e);
        let a_ok = (0..self.base_dim()).all(|i| self.base.is_zero(&self.base.mul(&self.base.mul(&fe, &self.base.basis_element(i)), e)));
        let m_ok = (0..self.module_dim()).all(|c| {
            let x = self.module.act_right(&self.module.act_left(&fe, &self.module.basis_element(c)), e);
            x.iter().all(|v| self.field().is_zero(v))
        });
        a_ok && m_ok
    }

    /// Looks for a nontrivial idempotent `e` of `A` with `(1−e)Ae = 0` and
    /// `(1−e)Me = 0`, returning the first in enumeration order.
    pub fn find_triangular_representation(&self, source: &IdempotentSource<F>) -> TriangularOutcome<F> {
        let (candidates, exhaustive) = match source {
            IdempotentSource::Exhaustive { cap } => match self.base.enumerate_idempotents(*cap) {
                Ok(ids) => (ids, true),
                Err(err) => return TriangularOutcome::Undecided(err.to_string()),
            },
            IdempotentSource::Candidates(c) => (self.base.idempotents_among(c.iter().cloned()), false),
        };
        for id in candidates.iter().filter(|id| !id.trivial) {
            if self.splits_at(&id.coords) {
                return TriangularOutcome::Found(self.triangular_witness(&id.coords));
            }
        }
        if exhaustive {
            TriangularOutcome::NoneExists
        } else {
            TriangularOutcome::Undecided("no supplied candidate idempotent qualifies".to_string())
        }
    }

    /// Block dimensions of the total algebra relative to `E = (e, 0)`.
    pub fn triangular_witness(&self, e: &[F::Elem]) -> TriangularWitness<F> {
        let t = &self.total;
        let big_e = self.pair(e, &self.module.zero_element());
        let big_f = t.complement(&big_e);
        TriangularWitness {
            idempotent: e.to_vec(),
            corner_dims: (
                t.sandwich_span(&big_e, &big_e).dim(),
                t.sandwich_span(&big_e, &big_f).dim(),
                t.sandwich_span(&big_f, &big_f).dim(),
            ),
            lower_corner_zero: t.sandwich_span(&big_f, &big_e).is_zero(),
        }
    }

    /// Evaluates the type-(⋆) definition at `e` together with the four
    /// equivalent conditions on `M`.
    pub fn type_star(&self, e: &[F::Elem]) -> Result<TypeStarReport, TrivextError> {
        let a = &self.base;
        let md = &self.module;
        if e.len() != a.dim() {
            return Err(TrivextError::Shape {
                expected: a.dim(),
                found: e.len(),
            });
        }
        if !a.is_idempotent(e) {
            return Err(TrivextError::NotIdempotent);
        }
        if a.is_trivial_idempotent(e) {
            return Err(TrivextError::TrivialIdempotent);
        }
        let fe = a.complement(e);
        let basis_a: Vec<_> = (0..a.dim()).map(|i| a.basis_element(i)).collect();
        let basis_m: Vec<_> = (0..md.dim()).map(|i| md.basis_element(i)).collect();
        let zero_m = md.zero_element();

        let e_a_f_zero = basis_a.iter().all(|x| a.is_zero(&a.mul(&a.mul(e, x), &fe)));
        let emf = basis_m.iter().all(|m| md.act_right(&md.act_left(e, m), &fe) == *m);
        let fm_me = basis_m.iter().all(|m| md.act_left(&fe, m) == zero_m && md.act_right(m, e) == zero_m);
        let em_mf = basis_m.iter().all(|m| md.act_left(e, m) == *m && md.act_right(m, &fe) == *m);
        let corner_actions = basis_m.iter().all(|m| {
            basis_a.iter().all(|x| {
                let eae = a.mul(&a.mul(e, x), e);
                let faf = a.mul(&a.mul(&fe, x), &fe);
                md.act_left(x, m) == md.act_left(&eae, m) && md.act_right(m, x) == md.act_right(m, &faf)
            })
        });
        let conditions = [emf, fm_me, em_mf, corner_actions];
        Ok(TypeStarReport {
            e_a_f_zero,
            conditions,
            conditions_agree: conditions.iter().all(|&c| c == emf),
            holds: e_a_f_zero && emf,
        })
    }

    /// First nontrivial idempotent (in enumeration order) at which the
    /// extension is of type (⋆).
    pub fn find_type_star(&self, source: &IdempotentSource<F>) -> Option<Vec<F::Elem>> {
        let candidates = match source {
            IdempotentSource::Exhaustive { cap } => self.base.enumerate_idempotents(*cap).ok()?,
            IdempotentSource::Candidates(c) => self.base.idempotents_among(c.iter().cloned()),
        };
        candidates
            .into_iter()
            .filter(|id| !id.trivial)
            .find(|id| self.type_star(&id.coords).map(|r| r.holds).unwrap_or(false))
            .map(|id| id.coords)
    }
}

/// Triangular-representation test for `A` alone, as the case `M = 0`.
pub fn algebra_triangular_representation<F: Field>(algebra: Arc<Algebra<F>>, source: &IdempotentSource<F>) -> TriangularOutcome<F> {
    let zero = Bimodule::zero(algebra.clone());
    TrivialExtension::new(algebra, zero)
        .expect("zero module is over the algebra")
        .find_triangular_representation(source)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterComparison<F: Field> {
    pub direct: Subspace<F>,
    pub formula: Subspace<F>,
    pub agree: bool,
    /// `Z = π_A(Z) × π_M(Z)`.
    pub product_decomposition: bool,
}

/// Where candidate idempotents come from.
#[derive(Debug, Clone)]
pub enum IdempotentSource<F: Field> {
    Exhaustive { cap: u64 },
    Candidates(Vec<Vec<F::Elem>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularWitness<F: Field> {
    pub idempotent: Vec<F::Elem>,
    /// Dimensions of `E·T·E`, `E·T·(1−E)`, `(1−E)·T·(1−E)` for `E = (e, 0)`.
    pub corner_dims: (usize, usize, usize),
    pub lower_corner_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangularOutcome<F: Field> {
    Found(TriangularWitness<F>),
    NoneExists,
    Undecided(String),
}

impl<F: Field> TriangularOutcome<F> {
    pub fn found(&self) -> Option<&TriangularWitness<F>> {
        match self {
            TriangularOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeStarReport {
    /// `e·a·f = 0` for all `a`.
    pub e_a_f_zero: bool,
    /// In order: `emf = m`; `fm = 0 = me`; `em = m = mf`;
    /// `am = eaem` and `ma = mfaf`.
    pub conditions: [bool; 4],
    pub conditions_agree: bool,
    pub holds: bool,
}
