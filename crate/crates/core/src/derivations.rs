//! Spaces of linear maps cut out by derivation-type identities, and the
//! decomposition of derivations on a trivial extension `A ⋉ M`.
//!
//! Every space is the kernel of a linear "defect" map: the defect of a
//! candidate map is the list of all its identity violations on basis pairs.
//! The same defect functions double as membership tests.
//!
//! Maps are matrices `target × source` and are flattened column-major, i.e.
//! as the images of the source basis vectors concatenated.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::field::Field;
use crate::linalg::{Matrix, Quotient, Subspace};
use crate::trivext::TrivialExtension;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("map has shape {found:?}, expected {expected:?}")]
    Shape { expected: (usize, usize), found: (usize, usize) },
    #[error("not a derivation: Leibniz rule fails on basis pair (e{}, e{})", .pair.0, .pair.1)]
    NotADerivation { pair: (usize, usize) },
    #[error("(d, S) is not a module generalized derivation")]
    NotGeneralized,
    #[error("d is not the inner derivation [a0, -]")]
    NotInnerAt,
    #[error("component check failed: {0}")]
    Component(&'static str),
}

/// Which object a [`LinearMapSpace`] or [`GDerSpace`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceTag {
    Der,
    Innder,
    HomToBase,
    E,
    End,
    InnGd,
    InnBi,
    Innbi,
    GDerPairs,
    GDer,
    RestrictedDer,
    RestrictedInnder,
}

impl SpaceTag {
    pub fn label(self) -> &'static str {
        match self {
            SpaceTag::Der => "Der",
            SpaceTag::Innder => "Innder",
            SpaceTag::HomToBase => "Hom(M,A)",
            SpaceTag::E => "E(M)",
            SpaceTag::End => "End(M)",
            SpaceTag::InnGd => "InnGd(M)",
            SpaceTag::InnBi => "InnBi(M)",
            SpaceTag::Innbi => "Innbi(M)",
            SpaceTag::GDerPairs => "GDer pairs",
            SpaceTag::GDer => "GDer(M)",
            SpaceTag::RestrictedDer => "der",
            SpaceTag::RestrictedInnder => "innder",
        }
    }
}

impl fmt::Display for SpaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A subspace of `Hom(F^source, F^target)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMapSpace<F: Field> {
    pub tag: SpaceTag,
    pub source_dim: usize,
    pub target_dim: usize,
    pub space: Subspace<F>,
}

impl<F: Field> LinearMapSpace<F> {
    pub fn new(tag: SpaceTag, source_dim: usize, target_dim: usize, space: Subspace<F>) -> Self {
        assert_eq!(space.ambient_dim(), source_dim * target_dim, "ambient must be the full map space");
        LinearMapSpace {
            tag,
            source_dim,
            target_dim,
            space,
        }
    }

    pub fn field(&self) -> &F {
        self.space.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn to_map(&self, v: &[F::Elem]) -> Matrix<F> {
        Matrix::unflatten_columns(self.field(), self.target_dim, self.source_dim, v).expect("vector lies in the ambient")
    }

    pub fn basis_maps(&self) -> Vec<Matrix<F>> {
        self.space.basis().map(|v| self.to_map(v)).collect()
    }

    pub fn contains(&self, map: &Matrix<F>) -> bool {
        map.rows() == self.target_dim && map.cols() == self.source_dim && self.space.contains(&map.flatten_columns())
    }

    pub fn with_space(&self, tag: SpaceTag, space: Subspace<F>) -> Self {
        Self::new(tag, self.source_dim, self.target_dim, space)
    }

    /// Text export: a header, then one flattened basis vector per line.
    pub fn export(&self) -> String {
        let f = self.field();
        let mut out = String::new();
        let _ = writeln!(out, "tag: {}", self.tag);
        let _ = writeln!(out, "source: {}", self.source_dim);
        let _ = writeln!(out, "target: {}", self.target_dim);
        let _ = writeln!(out, "field: {}", f.spec());
        let _ = writeln!(out, "dim: {}", self.dim());
        for v in self.space.basis() {
            let line: Vec<String> = v.iter().map(|x| f.format(x)).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Pairs `(d, S)` with `d: A → A` and `S: M → M`, flattened as
/// `flatten(d) ++ flatten(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GDerSpace<F: Field> {
    pub tag: SpaceTag,
    pub base_dim: usize,
    pub module_dim: usize,
    pub space: Subspace<F>,
}

impl<F: Field> GDerSpace<F> {
    fn new(tag: SpaceTag, base_dim: usize, module_dim: usize, space: Subspace<F>) -> Self {
        assert_eq!(space.ambient_dim(), base_dim * base_dim + module_dim * module_dim);
        GDerSpace {
            tag,
            base_dim,
            module_dim,
            space,
        }
    }

    pub fn field(&self) -> &F {
        self.space.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn split(&self, v: &[F::Elem]) -> (Matrix<F>, Matrix<F>) {
        let (n, m) = (self.base_dim, self.module_dim);
        let f = self.field();
        let d = Matrix::unflatten_columns(f, n, n, &v[..n * n]).expect("pair vector");
        let s = Matrix::unflatten_columns(f, m, m, &v[n * n..]).expect("pair vector");
        (d, s)
    }

    pub fn join(d: &Matrix<F>, s: &Matrix<F>) -> Vec<F::Elem> {
        let mut v = d.flatten_columns();
        v.extend(s.flatten_columns());
        v
    }

    pub fn basis_pairs(&self) -> Vec<(Matrix<F>, Matrix<F>)> {
        self.space.basis().map(|v| self.split(v)).collect()
    }

    pub fn contains(&self, d: &Matrix<F>, s: &Matrix<F>) -> bool {
        self.space.contains(&Self::join(d, s))
    }

    /// The `d`-components, as a subspace of maps `A → A`.
    pub fn project_base(&self) -> LinearMapSpace<F> {
        let nn = self.base_dim * self.base_dim;
        let space = self.space.map(nn, |v| v[..nn].to_vec());
        LinearMapSpace::new(SpaceTag::Der, self.base_dim, self.base_dim, space)
    }

    /// `{S : (0, S) ∈ self}`.
    pub fn zero_slice(&self) -> LinearMapSpace<F> {
        let f = self.field().clone();
        let (nn, mm) = (self.base_dim * self.base_dim, self.module_dim * self.module_dim);
        let zero = Subspace::zero(&f, nn);
        let with_zero_d = self.space.preimage(&zero, |v| v[..nn].to_vec());
        let space = with_zero_d.map(mm, |v| v[nn..].to_vec());
        LinearMapSpace::new(SpaceTag::End, self.module_dim, self.module_dim, space)
    }

    /// The same pairs as block-diagonal maps on `A ⋉ M`.
    pub fn embed(&self, tag: SpaceTag) -> LinearMapSpace<F> {
        let (n, m) = (self.base_dim, self.module_dim);
        let total = n + m;
        let space = self.space.map(total * total, |v| {
            let (d, s) = self.split(v);
            block_map(&d, &s).flatten_columns()
        });
        LinearMapSpace::new(tag, total, total, space)
    }
}

/// `(a, m) ↦ (d(a), S(m))`.
pub fn block_map<F: Field>(d: &Matrix<F>, s: &Matrix<F>) -> Matrix<F> {
    let (n, m) = (d.rows(), s.rows());
    let mut out = Matrix::zeros(d.field(), n + m, n + m);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, d.get(r, c).clone());
        }
    }
    for r in 0..m {
        for c in 0..m {
            out.set(n + r, n + c, s.get(r, c).clone());
        }
    }
    out
}

/// Kernel of a linear defect function on `unknowns` coordinates, built by
/// evaluating the defect on unit vectors.
fn kernel_of<F: Field>(field: &F, unknowns: usize, defect: impl Fn(&[F::Elem]) -> Vec<F::Elem>) -> Subspace<F> {
    let mut unit = vec![field.zero(); unknowns];
    let mut columns = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        unit[u] = field.one();
        columns.push(defect(&unit));
        unit[u] = field.zero();
    }
    let rows = if unknowns == 0 { defect(&unit).len() } else { columns[0].len() };
    Matrix::from_columns(field, rows, &columns).expect("defect length is fixed").kernel()
}

fn push_flat<F: Field>(out: &mut Vec<F::Elem>, m: &Matrix<F>) {
    out.extend(m.flatten_columns());
}

fn check_shape<F: Field>(map: &Matrix<F>, rows: usize, cols: usize) -> Result<(), DerivationError> {
    if (map.rows(), map.cols()) != (rows, cols) {
        return Err(DerivationError::Shape {
            expected: (rows, cols),
            found: (map.rows(), map.cols()),
        });
    }
    Ok(())
}

// ---- defect functions ----------------------------------------------------

/// `D(e_i e_j) − D(e_i) e_j − e_i D(e_j)` for all basis pairs, block `(i, j)`
/// at offset `(i n + j) m`.
pub fn leibniz_defect<F: Field>(module: &Bimodule<F>, d: &Matrix<F>) -> Vec<F::Elem> {
    let a = module.algebra();
    let (n, m) = (a.dim(), module.dim());
    let f = module.field();
    assert_eq!((d.rows(), d.cols()), (m, n), "Leibniz defect: map shape");
    let images: Vec<Vec<F::Elem>> = (0..n).map(|i| d.column(i)).collect();
    let mut out = Vec::with_capacity(n * n * m);
    for i in 0..n {
        for j in 0..n {
            let lhs = d.apply(a.basis_product(i, j));
            let r1 = module.right_matrices()[j].apply(&images[i]);
            let r2 = module.left_matrices()[i].apply(&images[j]);
            out.extend((0..m).map(|k| f.sub(&f.sub(&lhs[k], &r1[k]), &r2[k])));
        }
    }
    out
}

/// First basis pair on which the Leibniz rule fails.
pub fn leibniz_failure<F: Field>(module: &Bimodule<F>, d: &Matrix<F>) -> Option<(usize, usize)> {
    let n = module.algebra().dim();
    let m = module.dim();
    let defect = leibniz_defect(module, d);
    let f = module.field();
    (0..n * n)
        .find(|&b| defect[b * m..(b + 1) * m].iter().any(|x| !f.is_zero(x)))
        .map(|b| (b / n, b % n))
}

/// Violations of `S(am) = aS(m) + d(a)m` and `S(ma) = S(m)a + md(a)`.
pub fn gder_defect<F: Field>(module: &Bimodule<F>, d: &Matrix<F>, s: &Matrix<F>) -> Vec<F::Elem> {
    let n = module.algebra().dim();
    let mut out = Vec::new();
    for i in 0..n {
        let (l, r) = (&module.left_matrices()[i], &module.right_matrices()[i]);
        let di = d.column(i);
        push_flat(&mut out, &s.matmul(l).sub(&l.matmul(s)).sub(&module.left_action(&di)));
        push_flat(&mut out, &s.matmul(r).sub(&r.matmul(s)).sub(&module.right_action(&di)));
    }
    out
}

/// Violations of `S(am) = aS(m)` and `S(ma) = S(m)a`.
pub fn end_defect<F: Field>(module: &Bimodule<F>, s: &Matrix<F>) -> Vec<F::Elem> {
    let n = module.algebra().dim();
    let mut out = Vec::new();
    for i in 0..n {
        let (l, r) = (&module.left_matrices()[i], &module.right_matrices()[i]);
        push_flat(&mut out, &s.matmul(l).sub(&l.matmul(s)));
        push_flat(&mut out, &s.matmul(r).sub(&r.matmul(s)));
    }
    out
}

/// Violations of `f(am) = a f(m)` and `f(ma) = f(m) a` for `f: M → A`.
pub fn hom_to_base_defect<F: Field>(module: &Bimodule<F>, t: &Matrix<F>) -> Vec<F::Elem> {
    let a = module.algebra();
    let mut out = Vec::new();
    for i in 0..a.dim() {
        let e = a.basis_element(i);
        push_flat(&mut out, &t.matmul(&module.left_matrices()[i]).sub(&a.left_mult_matrix(&e).matmul(t)));
        push_flat(&mut out, &t.matmul(&module.right_matrices()[i]).sub(&a.right_mult_matrix(&e).matmul(t)));
    }
    out
}

/// Violations of `f(m)n + mf(n) = 0` on basis pairs.
pub fn alternating_defect<F: Field>(module: &Bimodule<F>, t: &Matrix<F>) -> Vec<F::Elem> {
    let m = module.dim();
    let f = module.field();
    let lefts: Vec<Matrix<F>> = (0..m).map(|c| module.left_action(&t.column(c))).collect();
    let rights: Vec<Matrix<F>> = (0..m).map(|c| module.right_action(&t.column(c))).collect();
    let mut out = Vec::with_capacity(m * m * m);
    for c in 0..m {
        for d in 0..m {
            // f(m_c)·m_d + m_c·f(m_d)
            let x = lefts[c].column(d);
            let y = rights[d].column(c);
            out.extend(x.iter().zip(&y).map(|(p, q)| f.add(p, q)));
        }
    }
    out
}

pub fn e_defect<F: Field>(module: &Bimodule<F>, t: &Matrix<F>) -> Vec<F::Elem> {
    let mut out = hom_to_base_defect(module, t);
    out.extend(alternating_defect(module, t));
    out
}

fn all_zero<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn is_derivation<F: Field>(module: &Bimodule<F>, d: &Matrix<F>) -> bool {
    all_zero(module.field(), &leibniz_defect(module, d))
}

pub fn is_generalized<F: Field>(module: &Bimodule<F>, d: &Matrix<F>, s: &Matrix<F>) -> bool {
    all_zero(module.field(), &gder_defect(module, d, s))
}

pub fn is_bimodule_endomorphism<F: Field>(module: &Bimodule<F>, s: &Matrix<F>) -> bool {
    all_zero(module.field(), &end_defect(module, s))
}

pub fn in_e<F: Field>(module: &Bimodule<F>, t: &Matrix<F>) -> bool {
    all_zero(module.field(), &e_defect(module, t))
}

// ---- elementary maps -----------------------------------------------------

/// `[m0, −]: a ↦ m0·a − a·m0`, an `m × n` matrix.
pub fn inner_map<F: Field>(module: &Bimodule<F>, m0: &[F::Elem]) -> Matrix<F> {
    let n = module.algebra().dim();
    let columns: Vec<Vec<F::Elem>> = (0..n)
        .map(|j| {
            let x = module.right_matrices()[j].apply(m0);
            let y = module.left_matrices()[j].apply(m0);
            x.iter().zip(&y).map(|(p, q)| module.field().sub(p, q)).collect()
        })
        .collect();
    Matrix::from_columns(module.field(), module.dim(), &columns).expect("column length is dim M")
}

/// `[a0, −]` on `A`: `x ↦ a0 x − x a0`.
pub fn algebra_bracket<F: Field>(algebra: &Algebra<F>, a0: &[F::Elem]) -> Matrix<F> {
    algebra.left_mult_matrix(a0).sub(&algebra.right_mult_matrix(a0))
}

fn map_space<F: Field>(tag: SpaceTag, field: &F, source: usize, target: usize, maps: impl IntoIterator<Item = Matrix<F>>) -> LinearMapSpace<F> {
    let vectors: Vec<_> = maps.into_iter().map(|m| m.flatten_columns()).collect();
    LinearMapSpace::new(tag, source, target, Subspace::from_spanning(field, source * target, vectors))
}

// ---- spaces over (A, M) --------------------------------------------------

/// `Der(A, M)`; `Der(A)` is the case of the regular bimodule.
pub fn derivation_space<F: Field>(module: &Bimodule<F>) -> LinearMapSpace<F> {
    let (n, m) = (module.algebra().dim(), module.dim());
    let f = module.field();
    let space = kernel_of(f, n * m, |v| leibniz_defect(module, &Matrix::unflatten_columns(f, m, n, v).expect("flat map")));
    LinearMapSpace::new(SpaceTag::Der, n, m, space)
}

pub fn inner_derivation_space<F: Field>(module: &Bimodule<F>) -> LinearMapSpace<F> {
    let (n, m) = (module.algebra().dim(), module.dim());
    map_space(
        SpaceTag::Innder,
        module.field(),
        n,
        m,
        (0..m).map(|c| inner_map(module, &module.basis_element(c))),
    )
}

/// Some `m0` with `[m0, −] = d`, if one exists.
pub fn inner_witness<F: Field>(module: &Bimodule<F>, d: &Matrix<F>) -> Option<Vec<F::Elem>> {
    let (n, m) = (module.algebra().dim(), module.dim());
    if (d.rows(), d.cols()) != (m, n) {
        return None;
    }
    let columns: Vec<_> = (0..m).map(|c| inner_map(module, &module.basis_element(c)).flatten_columns()).collect();
    let system = Matrix::from_columns(module.field(), n * m, &columns).expect("flattened inner maps");
    system.solve(&d.flatten_columns()).expect("rhs length matches")
}

/// `H¹(A, M) = Der / Innder` with canonical representatives.
pub fn h1<F: Field>(module: &Bimodule<F>) -> Quotient<F> {
    let der = derivation_space(module);
    let inn = inner_derivation_space(module);
    Quotient::new(inn.space, der.space).expect("inner derivations are derivations")
}

pub fn hom_to_base_space<F: Field>(module: &Bimodule<F>) -> LinearMapSpace<F> {
    let (n, m) = (module.algebra().dim(), module.dim());
    let f = module.field();
    let space = kernel_of(f, n * m, |v| {
        hom_to_base_defect(module, &Matrix::unflatten_columns(f, n, m, v).expect("flat map"))
    });
    LinearMapSpace::new(SpaceTag::HomToBase, m, n, space)
}

pub fn e_space<F: Field>(module: &Bimodule<F>) -> LinearMapSpace<F> {
    let (n, m) = (module.algebra().dim(), module.dim());
    let f = module.field();
    let space = kernel_of(f, n * m, |v| e_defect(module, &Matrix::unflatten_columns(f, n, m, v).expect("flat map")));
    LinearMapSpace::new(SpaceTag::E, m, n, space)
}

pub fn bimodule_end_space<F: Field>(module: &Bimodule<F>) -> LinearMapSpace<F> {
    let m = module.dim();
    let f = module.field();
    let space = kernel_of(f, m * m, |v| end_defect(module, &Matrix::unflatten_columns(f, m, m, v).expect("flat map")));
    LinearMapSpace::new(SpaceTag::End, m, m, space)
}

/// Pairs satisfying the two generalized-derivation identities, with no
/// condition on `d` beyond them.
pub fn gder_pairs<F: Field>(module: &Bimodule<F>) -> GDerSpace<F> {
    let (n, m) = (module.algebra().dim(), module.dim());
    let f = module.field();
    let space = kernel_of(f, n * n + m * m, |v| {
        let d = Matrix::unflatten_columns(f, n, n, &v[..n * n]).expect("flat map");
        let s = Matrix::unflatten_columns(f, m, m, &v[n * n..]).expect("flat map");
        gder_defect(module, &d, &s)
    });
    GDerSpace::new(SpaceTag::GDerPairs, n, m, space)
}

/// Pairs `(d, S)` with `d ∈ Der(A)` and `S` a module generalized
/// `d`-derivation.
pub fn gder_space<F: Field>(module: &Bimodule<F>) -> GDerSpace<F> {
    let a = module.algebra();
    let regular = Bimodule::regular(a.clone());
    let (n, m) = (a.dim(), module.dim());
    let f = module.field();
    let space = kernel_of(f, n * n + m * m, |v| {
        let d = Matrix::unflatten_columns(f, n, n, &v[..n * n]).expect("flat map");
        let s = Matrix::unflatten_columns(f, m, m, &v[n * n..]).expect("flat map");
        let mut out = gder_defect(module, &d, &s);
        out.extend(leibniz_defect(&regular, &d));
        out
    });
    GDerSpace::new(SpaceTag::GDer, n, m, space)
}

/// Indices of basis vectors of [`gder_pairs`] whose `d`-component is not a
/// derivation of `A`.
pub fn gder_leibniz_diagnostic<F: Field>(module: &Bimodule<F>) -> Vec<usize> {
    let regular = Bimodule::regular(module.algebra().clone());
    let pairs = gder_pairs(module);
    pairs
        .basis_pairs()
        .iter()
        .enumerate()
        .filter(|(_, (d, _))| !is_derivation(&regular, d))
        .map(|(i, _)| i)
        .collect()
}

/// `{ ([a0, −]_A, [a0, −]_M) : a0 ∈ A }`.
pub fn restricted_innder_pairs<F: Field>(module: &Bimodule<F>) -> GDerSpace<F> {
    let a = module.algebra();
    let (n, m) = (a.dim(), module.dim());
    let vectors: Vec<_> = (0..n)
        .map(|i| {
            let e = a.basis_element(i);
            GDerSpace::join(&algebra_bracket(a, &e), &module.bracket_matrix(&e))
        })
        .collect();
    GDerSpace::new(
        SpaceTag::RestrictedInnder,
        n,
        m,
        Subspace::from_spanning(module.field(), n * n + m * m, vectors),
    )
}

pub fn inn_gd<F: Field>(module: &Bimodule<F>) -> LinearMapSpace<F> {
    let (n, m) = (module.algebra().dim(), module.dim());
    map_space(
        SpaceTag::InnGd,
        module.field(),
        m,
        m,
        (0..n).map(|i| module.bracket_matrix(&module.algebra().basis_element(i))),
    )
}

pub fn inn_bi<F: Field>(module: &Bimodule<F>) -> LinearMapSpace<F> {
    let gd = inn_gd(module);
    let end = bimodule_end_space(module);
    let space = gd.space.intersect(&end.space).expect("same ambient");
    gd.with_space(SpaceTag::InnBi, space)
}

pub fn innbi_central<F: Field>(module: &Bimodule<F>) -> LinearMapSpace<F> {
    let m = module.dim();
    let center = module.algebra().center();
    map_space(SpaceTag::Innbi, module.field(), m, m, center.basis().map(|z| module.bracket_matrix(z)))
}

// ---- derivations of A ⋉ M ------------------------------------------------

/// The four blocks of a map on `A ⋉ M`:
/// `D(a, m) = (D_A(a) + T(m), D_M(a) + S(m))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationDecomposition<F: Field> {
    pub d_a: Matrix<F>,
    pub t: Matrix<F>,
    pub d_m: Matrix<F>,
    pub s: Matrix<F>,
}

impl<F: Field> DerivationDecomposition<F> {
    /// Reads the blocks off a map on `A ⋉ M` without any checks.
    pub fn blocks(ext: &TrivialExtension<F>, d: &Matrix<F>) -> Self {
        let (n, m) = (ext.base_dim(), ext.module_dim());
        let f = ext.field();
        let block = |r0: usize, rows: usize, c0: usize, cols: usize| {
            let mut out = Matrix::zeros(f, rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    out.set(r, c, d.get(r0 + r, c0 + c).clone());
                }
            }
            out
        };
        DerivationDecomposition {
            d_a: block(0, n, 0, n),
            t: block(0, n, n, m),
            d_m: block(n, m, 0, n),
            s: block(n, m, n, m),
        }
    }

    pub fn reassemble(&self) -> Matrix<F> {
        let (n, m) = (self.d_a.rows(), self.s.rows());
        let mut out = block_map(&self.d_a, &self.s);
        for r in 0..n {
            for c in 0..m {
                out.set(r, n + c, self.t.get(r, c).clone());
            }
        }
        for r in 0..m {
            for c in 0..n {
                out.set(n + r, c, self.d_m.get(r, c).clone());
            }
        }
        out
    }
}

/// Splits a derivation of `A ⋉ M` and re-verifies the component conditions.
pub fn decompose_derivation<F: Field>(ext: &TrivialExtension<F>, d: &Matrix<F>) -> Result<DerivationDecomposition<F>, DerivationError> {
    let total = ext.base_dim() + ext.module_dim();
    check_shape(d, total, total)?;
    let regular_total = Bimodule::regular(ext.total().clone());
    if let Some(pair) = leibniz_failure(&regular_total, d) {
        return Err(DerivationError::NotADerivation { pair });
    }
    let dec = DerivationDecomposition::blocks(ext, d);
    let module = ext.module();
    if !is_derivation(&Bimodule::regular(ext.base().clone()), &dec.d_a) {
        return Err(DerivationError::Component("D_A is not a derivation"));
    }
    if !is_derivation(module, &dec.d_m) {
        return Err(DerivationError::Component("D_M is not a derivation"));
    }
    if !in_e(module, &dec.t) {
        return Err(DerivationError::Component("T is not in E(M)"));
    }
    if !is_generalized(module, &dec.d_a, &dec.s) {
        return Err(DerivationError::Component("S is not a module generalized D_A-derivation"));
    }
    debug_assert_eq!(&dec.reassemble(), d);
    Ok(dec)
}

/// A witness `(a0, m0)` with `[(a0, m0), −] = D`, if `D` is inner.
pub fn is_inner<F: Field>(ext: &TrivialExtension<F>, d: &Matrix<F>) -> Option<(Vec<F::Elem>, Vec<F::Elem>)> {
    let regular_total = Bimodule::regular(ext.total().clone());
    inner_witness(&regular_total, d).map(|x| (ext.project_base(&x), ext.project_module(&x)))
}

/// `[(a0, m0), −]` on `A ⋉ M`.
pub fn total_inner<F: Field>(ext: &TrivialExtension<F>, a0: &[F::Elem], m0: &[F::Elem]) -> Matrix<F> {
    algebra_bracket(ext.total(), &ext.pair(a0, m0))
}

/// Every space attached to an extension, computed once.
#[derive(Debug, Clone)]
pub struct ExtensionSpaces<F: Field> {
    pub der_total: LinearMapSpace<F>,
    pub innder_total: LinearMapSpace<F>,
    pub der_a: LinearMapSpace<F>,
    pub innder_a: LinearMapSpace<F>,
    pub der_am: LinearMapSpace<F>,
    pub innder_am: LinearMapSpace<F>,
    pub e: LinearMapSpace<F>,
    pub end: LinearMapSpace<F>,
    pub inn_gd: LinearMapSpace<F>,
    pub inn_bi: LinearMapSpace<F>,
    pub innbi: LinearMapSpace<F>,
    pub gder: GDerSpace<F>,
    pub innder_pairs: GDerSpace<F>,
}

impl<F: Field> ExtensionSpaces<F> {
    pub fn compute(ext: &TrivialExtension<F>) -> Self {
        let module: &Bimodule<F> = ext.module();
        let regular_a = Bimodule::regular(ext.base().clone());
        let regular_total = Bimodule::regular(ext.total().clone());
        ExtensionSpaces {
            der_total: derivation_space(&regular_total),
            innder_total: inner_derivation_space(&regular_total),
            der_a: derivation_space(&regular_a),
            innder_a: inner_derivation_space(&regular_a),
            der_am: derivation_space(module),
            innder_am: inner_derivation_space(module),
            e: e_space(module),
            end: bimodule_end_space(module),
            inn_gd: inn_gd(module),
            inn_bi: inn_bi(module),
            innbi: innbi_central(module),
            gder: gder_space(module),
            innder_pairs: restricted_innder_pairs(module),
        }
    }

    /// The three component criteria for innerness of a decomposed derivation.
    pub fn inner_criteria(&self, dec: &DerivationDecomposition<F>) -> InnerCriteria {
        InnerCriteria {
            t_zero: dec.t.is_zero(),
            s_inner: self.inn_gd.contains(&dec.s),
            d_m_inner: self.innder_am.contains(&dec.d_m),
        }
    }

    /// Derivations with `T = 0`, `S` inner and `D_M` inner. Always contains
    /// `Innder(A ⋉ M)`; a strictly larger space exhibits derivations meeting
    /// all three criteria without being inner.
    pub fn criteria_space(&self, ext: &TrivialExtension<F>) -> LinearMapSpace<F> {
        let f = ext.field().clone();
        let target_len = ext.base_dim() * ext.module_dim() + self.inn_gd.space.ambient_dim() + self.innder_am.space.ambient_dim();
        let zero = Subspace::zero(&f, target_len);
        let space = self.der_total.space.preimage(&zero, |v| {
            let dec = DerivationDecomposition::blocks(ext, &self.der_total.to_map(v));
            let mut out = dec.t.flatten_columns();
            out.extend(self.inn_gd.space.residual(&dec.s.flatten_columns()));
            out.extend(self.innder_am.space.residual(&dec.d_m.flatten_columns()));
            out
        });
        self.der_total.with_space(SpaceTag::Der, space)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InnerCriteria {
    pub t_zero: bool,
    pub s_inner: bool,
    pub d_m_inner: bool,
}

impl InnerCriteria {
    pub fn all(&self) -> bool {
        self.t_zero && self.s_inner && self.d_m_inner
    }
}

/// Result of writing a generalized `[a0, −]`-derivation as `Φ + [a0, −]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting<F: Field> {
    pub phi: Matrix<F>,
    pub phi_is_endomorphism: bool,
    pub s_inner: bool,
    pub phi_inner: bool,
}

pub fn split_generalized<F: Field>(module: &Bimodule<F>, d: &Matrix<F>, s: &Matrix<F>, a0: &[F::Elem]) -> Result<Splitting<F>, DerivationError> {
    let a = module.algebra();
    let (n, m) = (a.dim(), module.dim());
    check_shape(d, n, n)?;
    check_shape(s, m, m)?;
    if !is_generalized(module, d, s) {
        return Err(DerivationError::NotGeneralized);
    }
    if *d != algebra_bracket(a, a0) {
        return Err(DerivationError::NotInnerAt);
    }
    let phi = s.sub(&module.bracket_matrix(a0));
    let gd = inn_gd(module);
    Ok(Splitting {
        phi_is_endomorphism: is_bimodule_endomorphism(module, &phi),
        s_inner: gd.contains(s),
        phi_inner: gd.contains(&phi),
        phi,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MEqualsAReport {
    pub checked: usize,
    /// Basis indices of `Innder(A ⋉ A)` that fail the shape `(d₁, d₀ + d₁)`.
    pub failures: Vec<usize>,
}

impl MEqualsAReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that inner derivations of `A ⋉ A` have `T = 0`, `S = D_A` inner
/// and `D_M` inner.
pub fn check_m_equals_a<F: Field>(algebra: Arc<Algebra<F>>) -> MEqualsAReport {
    let regular = Bimodule::regular(algebra.clone());
    let ext = TrivialExtension::new(algebra, regular.clone()).expect("regular bimodule over its own algebra");
    let regular_total = Bimodule::regular(ext.total().clone());
    let innder_total = inner_derivation_space(&regular_total);
    let innder_a = inner_derivation_space(&regular);
    let mut failures = Vec::new();
    let maps = innder_total.basis_maps();
    for (i, d) in maps.iter().enumerate() {
        let ok = match decompose_derivation(&ext, d) {
            Ok(dec) => dec.t.is_zero() && dec.s == dec.d_a && innder_a.contains(&dec.d_a) && innder_a.contains(&dec.d_m),
            Err(_) => false,
        };
        if !ok {
            failures.push(i);
        }
    }
    MEqualsAReport { checked: maps.len(), failures }
}
