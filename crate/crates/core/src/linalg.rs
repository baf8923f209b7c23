//! Dense exact linear algebra: reduced row echelon forms, kernels, linear
//! systems, and the lattice of subspaces of a coordinate space.
//!
//! Pivoting always takes the first nonzero entry in column order, so every
//! result here is a deterministic function of its input.

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("quotient requires the first subspace to lie inside the second")]
    NotASubspace,
}

/// A dense row-major matrix over `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows; an empty list needs `cols` to fix the shape.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Self::from_vec(field, n, cols, data)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: F::Elem) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[F::Elem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// # Panics
    /// If the inner dimensions disagree.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul: inner dimensions differ");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.mul_add(out.get(r, c), a, other.get(k, c));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// # Panics
    /// If `v.len() != self.cols()`.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "apply: vector length differs from column count");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| if f.is_zero(b) { acc } else { f.mul_add(&acc, a, b) })
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, s)).collect();
        Matrix { data, ..self.clone() }
    }

    /// Column-major flattening: the images of the source basis vectors,
    /// concatenated.
    pub fn flatten_columns(&self) -> Vec<F::Elem> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.get(r, c).clone());
            }
        }
        out
    }

    /// Inverse of [`Matrix::flatten_columns`].
    pub fn unflatten_columns(field: &F, rows: usize, cols: usize, flat: &[F::Elem]) -> Result<Self, LinalgError> {
        if flat.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: flat.len(),
            });
        }
        let mut m = Self::zeros(field, rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                m.set(r, c, flat[c * rows + r].clone());
            }
        }
        Ok(m)
    }

    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = f.inv(m.get(lead, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = f.mul(m.get(lead, c), &inv);
                m.set(lead, c, v);
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(lead, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// The null space `{ v : self * v = 0 }`.
    pub fn kernel(&self) -> Subspace<F> {
        let f = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors = (0..self.cols).filter(|&j| !is_pivot[j]).map(|free| {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(matrix.get(i, free));
            }
            v
        });
        Subspace::from_spanning(f, self.cols, vectors)
    }

    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_matrix(self)
    }

    /// Column space, as a subspace of `F^rows`.
    pub fn image(&self) -> Subspace<F> {
        Subspace::from_matrix(&self.transpose())
    }

    /// Returns some `x` with `self * x = rhs`, free variables set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[F::Elem]) -> Result<Option<Vec<F::Elem>>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let f = &self.field;
        let mut aug = Self::zeros(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// A subspace of `F^ambient_dim`, stored as the nonzero rows of its reduced
/// row echelon basis. Equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let Rref { matrix, pivots, rank } = m.rref();
        let data = matrix.data[..rank * m.cols].to_vec();
        Subspace {
            basis: Matrix::from_vec(m.field(), rank, m.cols, data).expect("rank rows"),
            pivots,
        }
    }

    /// Span of the given vectors.
    ///
    /// # Panics
    /// If a vector has the wrong length.
    pub fn from_spanning<I>(field: &F, ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let rows: Vec<Vec<F::Elem>> = vectors.into_iter().collect();
        let m = Matrix::from_rows(field, ambient_dim, rows).expect("spanning vectors must match the ambient dimension");
        Self::from_matrix(&m)
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The RREF basis as a `dim x ambient_dim` matrix.
    pub fn basis_matrix(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis(&self) -> impl Iterator<Item = &[F::Elem]> {
        self.basis.row_vectors()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F::Elem>> {
        self.basis().map(<[F::Elem]>::to_vec).collect()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is a member.
    pub fn residual(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient_dim(), "residual: vector length differs from ambient dimension");
        let f = self.field();
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, b) in r.iter_mut().zip(self.basis.row(i)) {
                *x = f.sub(x, &f.mul(&c, b));
            }
        }
        r
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = self.field();
        self.residual(v).iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::from_spanning(
            self.field(),
            self.ambient_dim(),
            self.basis().chain(other.basis()).map(<[F::Elem]>::to_vec),
        ))
    }

    /// `U ∩ W` via the kernel of the stacked relation `Σ x_i u_i − Σ y_j w_j = 0`.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let f = self.field();
        let n = self.ambient_dim();
        let (du, dw) = (self.dim(), other.dim());
        let mut rel = Matrix::zeros(f, n, du + dw);
        for (i, u) in self.basis().enumerate() {
            for (r, x) in u.iter().enumerate() {
                rel.set(r, i, x.clone());
            }
        }
        for (j, w) in other.basis().enumerate() {
            for (r, x) in w.iter().enumerate() {
                rel.set(r, du + j, f.neg(x));
            }
        }
        let kernel = rel.kernel();
        let vectors = kernel.basis().map(|coeffs| self.combine(&coeffs[..du]));
        Ok(Self::from_spanning(f, n, vectors.collect::<Vec<_>>()))
    }

    /// `Σ coeffs[i] * basis[i]`.
    pub fn combine(&self, coeffs: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(coeffs.len(), self.dim());
        let f = self.field();
        let mut out = vec![f.zero(); self.ambient_dim()];
        for (c, b) in coeffs.iter().zip(self.basis()) {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o = f.mul_add(o, c, x);
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.basis().all(|v| other.contains(v))
    }

    /// `dim W − dim U` for `U ⊆ W`.
    pub fn quotient_dim(sub: &Self, sup: &Self) -> Result<usize, LinalgError> {
        sup.check_ambient(sub)?;
        if !sub.is_subspace_of(sup) {
            return Err(LinalgError::NotASubspace);
        }
        Ok(sup.dim() - sub.dim())
    }

    /// Coset representatives for `self / sub`: the rows of this space's RREF
    /// basis that extend a basis of `sub`, taken greedily in order.
    pub fn complement_of(&self, sub: &Self) -> Result<Vec<Vec<F::Elem>>, LinalgError> {
        Self::quotient_dim(sub, self)?;
        let mut acc = sub.clone();
        let mut reps = Vec::new();
        for v in self.basis() {
            if !acc.contains(v) {
                reps.push(v.to_vec());
                acc = acc.sum(&Self::from_spanning(self.field(), self.ambient_dim(), [v.to_vec()]))?;
            }
        }
        Ok(reps)
    }

    /// Image of this subspace under a linear map given as a function on vectors.
    pub fn map<G>(&self, target_dim: usize, map: G) -> Self
    where
        G: Fn(&[F::Elem]) -> Vec<F::Elem>,
    {
        Self::from_spanning(self.field(), target_dim, self.basis().map(map).collect::<Vec<_>>())
    }

    /// `{ v ∈ self : map(v) ∈ target }`.
    pub fn preimage<G>(&self, target: &Self, map: G) -> Self
    where
        G: Fn(&[F::Elem]) -> Vec<F::Elem>,
    {
        let f = self.field();
        let images: Vec<Vec<F::Elem>> = self.basis().map(&map).collect();
        let t = target.ambient_dim();
        let (ds, dt) = (self.dim(), target.dim());
        let mut rel = Matrix::zeros(f, t, ds + dt);
        for (i, y) in images.iter().enumerate() {
            assert_eq!(y.len(), t, "preimage: map output has the wrong length");
            for (r, x) in y.iter().enumerate() {
                rel.set(r, i, x.clone());
            }
        }
        for (j, w) in target.basis().enumerate() {
            for (r, x) in w.iter().enumerate() {
                rel.set(r, ds + j, f.neg(x));
            }
        }
        let kernel = rel.kernel();
        let vectors: Vec<_> = kernel.basis().map(|c| self.combine(&c[..ds])).collect();
        Self::from_spanning(f, self.ambient_dim(), vectors)
    }
}

/// A quotient `space / sub` of subspaces of one coordinate space, with
/// canonical coset representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient<F: Field> {
    pub space: Subspace<F>,
    pub sub: Subspace<F>,
    /// Rows of `space`'s RREF basis that complete a basis of `sub`.
    pub representatives: Vec<Vec<F::Elem>>,
}

impl<F: Field> Quotient<F> {
    pub fn new(sub: Subspace<F>, space: Subspace<F>) -> Result<Self, LinalgError> {
        let representatives = space.complement_of(&sub)?;
        Ok(Quotient { space, sub, representatives })
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_zero(&self) -> bool {
        self.representatives.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn q_mat(rows: &[&[i64]]) -> Matrix<Rationals> {
        let q = Rationals;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(&q, cols, rows.iter().map(|r| r.iter().map(|&x| q.from_i64(x)).collect()).collect()).unwrap()
    }

    fn p_mat(f: &PrimeField, rows: &[&[u64]]) -> Matrix<PrimeField> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(f, cols, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rref_identity_over_f2() {
        let id = Matrix::identity(&f2(), 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_dependent_rows_over_q() {
        let r = q_mat(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.matrix, q_mat(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_scales_units() {
        let f3 = PrimeField::new(3).unwrap();
        let r = p_mat(&f3, &[&[2]]).rref();
        assert_eq!(r.matrix, p_mat(&f3, &[&[1]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        let f = f2();
        assert!(Matrix::identity(&f, 4).kernel().is_zero());
        assert_eq!(Matrix::zeros(&f, 2, 3).kernel(), Subspace::full(&f, 3));
        let k = p_mat(&f, &[&[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[1, 1]));
    }

    #[test]
    fn solve_examples() {
        let f = f2();
        let id = Matrix::identity(&f, 3);
        assert_eq!(id.solve(&[1, 0, 1]).unwrap(), Some(vec![1, 0, 1]));
        assert_eq!(Matrix::zeros(&f, 2, 2).solve(&[1, 0]).unwrap(), None);
        let m = p_mat(&f, &[&[1, 1], &[0, 0]]);
        let x = m.solve(&[1, 0]).unwrap().unwrap();
        assert_eq!(m.apply(&x), vec![1, 0]);
        assert_eq!(x, vec![1, 0]);
        assert!(matches!(m.solve(&[1]), Err(LinalgError::DimensionMismatch { .. })));
    }

    #[test]
    fn subspace_lattice_examples() {
        let f = f2();
        let u = Subspace::from_spanning(&f, 2, [vec![1, 0]]);
        let w = Subspace::from_spanning(&f, 2, [vec![0, 1]]);
        assert_eq!(u.sum(&u).unwrap(), u);
        assert!(u.intersect(&w).unwrap().is_zero());
        assert_eq!(u.sum(&w).unwrap(), Subspace::full(&f, 2));
        let zero = Subspace::zero(&f, 4);
        assert_eq!(Subspace::quotient_dim(&zero, &Subspace::full(&f, 4)), Ok(4));
        assert_eq!(Subspace::quotient_dim(&u, &w), Err(LinalgError::NotASubspace));
        assert!(u.sum(&zero).is_err());
    }

    #[test]
    fn complement_and_preimage() {
        let f = PrimeField::new(5).unwrap();
        let full = Subspace::full(&f, 3);
        let sub = Subspace::from_spanning(&f, 3, [vec![1, 1, 0]]);
        let reps = full.complement_of(&sub).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(sub.sum(&Subspace::from_spanning(&f, 3, reps)).unwrap(), full);

        // projection onto the first coordinate; preimage of zero is {x0 = 0}
        let pre = full.preimage(&Subspace::zero(&f, 1), |v| vec![v[0]]);
        assert_eq!(pre, Subspace::from_spanning(&f, 3, [vec![0, 1, 0], vec![0, 0, 1]]));
    }

    #[test]
    fn flatten_is_column_major() {
        let f = PrimeField::new(7).unwrap();
        let m = p_mat(&f, &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(m.flatten_columns(), vec![1, 4, 2, 5, 3, 6]);
        assert_eq!(Matrix::unflatten_columns(&f, 2, 3, &m.flatten_columns()).unwrap(), m);
    }
}
