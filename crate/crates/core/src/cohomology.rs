//! Restricted first cohomology of a trivial extension and the checks built
//! on it: dimension decompositions, the exact sequence
//! `0 → H¹_A(M) → h¹(A⋉M) → H¹(A)`, the all-inner criterion and the
//! triangularizing element `c`.
//!
//! Pairs `(d, S)` live in the joint coordinate space of [`GDerSpace`];
//! quotient maps are checked on representatives, never assumed.

use crate::bimodule::Bimodule;
use crate::derivations::{ExtensionSpaces, GDerSpace, LinearMapSpace};
use crate::field::Field;
use crate::linalg::{Matrix, Quotient, Subspace};
use crate::trivext::{IdempotentSource, TriangularOutcome, TrivialExtension};

/// Every named dimension. Keys use the generic names `A`, `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CohomologyDims {
    pub der_total: usize,
    pub innder_total: usize,
    pub h1_total: usize,
    pub der_am: usize,
    pub innder_am: usize,
    pub h1_am: usize,
    pub der: usize,
    pub innder: usize,
    pub h1: usize,
    pub e: usize,
    pub end: usize,
    pub inn_gd: usize,
    pub inn_bi: usize,
    pub innbi: usize,
    /// `End / Innbi`.
    pub h1_a_m: usize,
    /// `End / InnBi`.
    pub h1_a_m_restricted: usize,
    pub der_a: usize,
    pub innder_a: usize,
    pub h1_a: usize,
}

impl CohomologyDims {
    /// `(template, value)` in report order. Templates contain `{A}` and
    /// `{M}` placeholders for the algebra and module names.
    pub fn entries(&self) -> Vec<(&'static str, usize)> {
        vec![
            ("Der({A}⋉{M})", self.der_total),
            ("Innder({A}⋉{M})", self.innder_total),
            ("H¹({A}⋉{M})", self.h1_total),
            ("Der({A},{M})", self.der_am),
            ("Innder({A},{M})", self.innder_am),
            ("H¹({A},{M})", self.h1_am),
            ("der", self.der),
            ("innder", self.innder),
            ("h¹", self.h1),
            ("E({M})", self.e),
            ("End({M})", self.end),
            ("InnGd({M})", self.inn_gd),
            ("InnBi({M})", self.inn_bi),
            ("Innbi({M})", self.innbi),
            ("H¹_{A}({M})", self.h1_a_m),
            ("h¹_{A}({M})", self.h1_a_m_restricted),
            ("Der({A})", self.der_a),
            ("Innder({A})", self.innder_a),
            ("H¹({A})", self.h1_a),
        ]
    }
}

/// Spaces, quotients and the decomposition verdicts for one extension.
#[derive(Debug, Clone)]
pub struct CohomologyReport<F: Field> {
    pub spaces: ExtensionSpaces<F>,
    pub dims: CohomologyDims,
    pub h1_total: Quotient<F>,
    pub h1_am: Quotient<F>,
    pub h1: Quotient<F>,
    pub h1_a: Quotient<F>,
    /// `End / Innbi`.
    pub h1_a_m: Quotient<F>,
    /// `End / InnBi`.
    pub h1_a_m_restricted: Quotient<F>,
    /// `dim Der(A⋉M) = dim Der(A,M) + dim der + dim E(M)`.
    pub der_identity: bool,
    /// `dim Innder(A⋉M) = dim Innder(A,M) + dim innder`.
    pub innder_identity: bool,
    /// `dim H¹(A⋉M) = dim H¹(A,M) + dim h¹ + dim E(M)`.
    pub h1_identity: bool,
    pub annihilator_intersection_zero: bool,
}

fn quotient<F: Field>(sub: &LinearMapSpace<F>, space: &LinearMapSpace<F>) -> Quotient<F> {
    Quotient::new(sub.space.clone(), space.space.clone()).expect("inner space lies in the full space")
}

pub fn full_report<F: Field>(ext: &TrivialExtension<F>) -> CohomologyReport<F> {
    report_from_spaces(ext, ExtensionSpaces::compute(ext))
}

pub fn report_from_spaces<F: Field>(ext: &TrivialExtension<F>, spaces: ExtensionSpaces<F>) -> CohomologyReport<F> {
    let s = &spaces;
    let h1_total = quotient(&s.innder_total, &s.der_total);
    let h1_am = quotient(&s.innder_am, &s.der_am);
    let h1_a = quotient(&s.innder_a, &s.der_a);
    let h1 = Quotient::new(s.innder_pairs.space.clone(), s.gder.space.clone()).expect("innder lies in der");
    let h1_a_m = quotient(&s.innbi, &s.end);
    let h1_a_m_restricted = quotient(&s.inn_bi, &s.end);
    let dims = CohomologyDims {
        der_total: s.der_total.dim(),
        innder_total: s.innder_total.dim(),
        h1_total: h1_total.dim(),
        der_am: s.der_am.dim(),
        innder_am: s.innder_am.dim(),
        h1_am: h1_am.dim(),
        der: s.gder.dim(),
        innder: s.innder_pairs.dim(),
        h1: h1.dim(),
        e: s.e.dim(),
        end: s.end.dim(),
        inn_gd: s.inn_gd.dim(),
        inn_bi: s.inn_bi.dim(),
        innbi: s.innbi.dim(),
        h1_a_m: h1_a_m.dim(),
        h1_a_m_restricted: h1_a_m_restricted.dim(),
        der_a: s.der_a.dim(),
        innder_a: s.innder_a.dim(),
        h1_a: h1_a.dim(),
    };
    CohomologyReport {
        der_identity: dims.der_total == dims.der_am + dims.der + dims.e,
        innder_identity: dims.innder_total == dims.innder_am + dims.innder,
        h1_identity: dims.h1_total == dims.h1_am + dims.h1 + dims.e,
        annihilator_intersection_zero: ext.module().annihilators().both.is_zero(),
        spaces,
        dims,
        h1_total,
        h1_am,
        h1,
        h1_a,
        h1_a_m,
        h1_a_m_restricted,
    }
}

impl<F: Field> CohomologyReport<F> {
    pub fn decomposition_holds(&self) -> bool {
        self.der_identity && self.innder_identity && self.h1_identity
    }
}

/// Checks of `0 → End/K → h¹ → H¹(A)` where `K` is `Innbi` or `InnBi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactSequenceCheck {
    /// `Φ(End) ⊆ der`, `Φ(K) ⊆ innder`, `π_A(der) ⊆ Der(A)` and
    /// `π_A(innder) ⊆ Innder(A)`.
    pub well_defined: bool,
    pub phi_injective: bool,
    pub image_equals_kernel: bool,
    pub image_phi_dim: usize,
    pub image_pi_dim: usize,
    /// `dim im Φ̂ + dim im π̂ = dim h¹`.
    pub rank_nullity: bool,
}

impl ExactSequenceCheck {
    pub fn passed(&self) -> bool {
        self.well_defined && self.phi_injective && self.image_equals_kernel && self.rank_nullity
    }
}

fn phi_embed<F: Field>(gder: &GDerSpace<F>, s: &[F::Elem]) -> Vec<F::Elem> {
    let nn = gder.base_dim * gder.base_dim;
    let f = gder.field();
    std::iter::repeat_n(f.zero(), nn).chain(s.iter().cloned()).collect()
}

fn pi_project<F: Field>(gder: &GDerSpace<F>, v: &[F::Elem]) -> Vec<F::Elem> {
    v[..gder.base_dim * gder.base_dim].to_vec()
}

/// The sequence with `H¹_A(M) = End / Innbi`.
pub fn exact_sequence_check<F: Field>(report: &CohomologyReport<F>) -> ExactSequenceCheck {
    sequence_check(&report.spaces, &report.spaces.innbi)
}

fn sequence_check<F: Field>(s: &ExtensionSpaces<F>, inner_end: &LinearMapSpace<F>) -> ExactSequenceCheck {
    let der = &s.gder;
    let innder = &s.innder_pairs;
    let ambient = der.space.ambient_dim();
    let nn = der.base_dim * der.base_dim;

    let phi_end = s.end.space.map(ambient, |v| phi_embed(der, v));
    let phi_inner = inner_end.space.map(ambient, |v| phi_embed(der, v));
    let pi_der = der.space.map(nn, |v| pi_project(der, v));
    let pi_innder = innder.space.map(nn, |v| pi_project(der, v));
    let well_defined = phi_end.is_subspace_of(&der.space)
        && phi_inner.is_subspace_of(&innder.space)
        && innder.space.is_subspace_of(&der.space)
        && pi_der.is_subspace_of(&s.der_a.space)
        && pi_innder.is_subspace_of(&s.innder_a.space);

    // kernel of Φ̂ lifted to End: {S : (0, S) ∈ innder}
    let lifted_kernel = s.end.space.preimage(&innder.space, |v| phi_embed(der, v));
    let phi_injective = lifted_kernel == inner_end.space.intersect(&s.end.space).expect("same ambient");

    let image = phi_end.sum(&innder.space).expect("same ambient");
    let kernel = der.space.preimage(&s.innder_a.space, |v| pi_project(der, v));
    let image_equals_kernel = image == kernel;

    let image_phi_dim = image.dim() - innder.dim();
    let image_pi_dim = pi_der.sum(&s.innder_a.space).expect("same ambient").dim() - s.innder_a.dim();
    let h1_dim = der.dim() - innder.dim();
    ExactSequenceCheck {
        well_defined,
        phi_injective,
        image_equals_kernel,
        image_phi_dim,
        image_pi_dim,
        rank_nullity: image_phi_dim + image_pi_dim == h1_dim,
    }
}

/// The variant with `h¹_A(M) = End / InnBi`, which needs the annihilator
/// intersection to vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantCheck {
    OutOfHypothesis,
    Checked { inn_bi_equals_innbi: bool, sequence: ExactSequenceCheck },
}

impl VariantCheck {
    pub fn passed(&self) -> Option<bool> {
        match self {
            VariantCheck::OutOfHypothesis => None,
            VariantCheck::Checked { inn_bi_equals_innbi, sequence } => Some(*inn_bi_equals_innbi && sequence.passed()),
        }
    }
}

pub fn h1_restricted_variant_check<F: Field>(report: &CohomologyReport<F>) -> VariantCheck {
    if !report.annihilator_intersection_zero {
        return VariantCheck::OutOfHypothesis;
    }
    let s = &report.spaces;
    VariantCheck::Checked {
        inn_bi_equals_innbi: s.inn_bi.space == s.innbi.space,
        sequence: sequence_check(s, &s.inn_bi),
    }
}

/// The four conditions equivalent to every derivation of `A ⋉ M` being inner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AllInnerReport {
    /// `π_A(der) ⊆ Innder(A)`.
    pub gamma_inner: bool,
    pub h1_am_zero: bool,
    pub end_equals_innbi: bool,
    pub e_zero: bool,
    pub h1_total_zero: bool,
}

impl AllInnerReport {
    pub fn conjunction(&self) -> bool {
        self.gamma_inner && self.h1_am_zero && self.end_equals_innbi && self.e_zero
    }

    pub fn agrees(&self) -> bool {
        self.conjunction() == self.h1_total_zero
    }
}

pub fn all_inner_report<F: Field>(report: &CohomologyReport<F>) -> AllInnerReport {
    let s = &report.spaces;
    AllInnerReport {
        gamma_inner: s.gder.project_base().space.is_subspace_of(&s.innder_a.space),
        h1_am_zero: report.h1_am.is_zero(),
        end_equals_innbi: s.end.space == s.innbi.space,
        e_zero: s.e.space.is_zero(),
        h1_total_zero: report.h1_total.is_zero(),
    }
}

/// A solution of `cm − mc = m` for all `m`, and what it yields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CSolution<F: Field> {
    pub c: Vec<F::Elem>,
    /// The idempotent candidate: `c` itself in the `r.Ann` variant and
    /// `1 + c` in the `l.Ann` variant.
    pub e: Vec<F::Elem>,
    pub idempotent: bool,
    /// `(1−e)Ae = 0` and `(1−e)Me = 0`.
    pub splits: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularizingC<F: Field> {
    pub hypothesis_met: bool,
    pub right: Option<CSolution<F>>,
    pub left: Option<CSolution<F>>,
}

impl<F: Field> TriangularizingC<F> {
    pub fn found(&self) -> Option<&CSolution<F>> {
        self.right.as_ref().or(self.left.as_ref())
    }
}

/// Some `c ∈ within` with `[c, −]_M = target`, if one exists.
fn solve_bracket<F: Field>(module: &Bimodule<F>, within: &Subspace<F>, target: &Matrix<F>) -> Option<Vec<F::Elem>> {
    let m = module.dim();
    let columns: Vec<_> = within.basis().map(|b| module.bracket_matrix(b).flatten_columns()).collect();
    if columns.is_empty() {
        return if target.is_zero() { Some(within.combine(&[])) } else { None };
    }
    let system = Matrix::from_columns(module.field(), m * m, &columns).expect("flattened brackets");
    system
        .solve(&target.flatten_columns())
        .expect("rhs length")
        .map(|coeffs| within.combine(&coeffs))
}

pub fn find_triangularizing_c<F: Field>(ext: &TrivialExtension<F>) -> TriangularizingC<F> {
    let module = ext.module();
    let a = ext.base();
    let f = ext.field();
    let ann = module.annihilators();
    let id = Matrix::identity(f, module.dim());
    let finish = |c: Vec<F::Elem>, e: Vec<F::Elem>| CSolution {
        idempotent: a.is_idempotent(&e),
        splits: ext.splits_at(&e),
        c,
        e,
    };
    let right = solve_bracket(module, &ann.right, &id).map(|c| finish(c.clone(), c));
    let left = solve_bracket(module, &ann.left, &id).map(|c| {
        let e = a.add(a.unit(), &c);
        finish(c, e)
    });
    TriangularizingC {
        hypothesis_met: ann.both.is_zero(),
        right,
        left,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralMultiplierCheck<F: Field> {
    /// `End ≠ Innbi`.
    Skipped,
    Checked {
        /// Per basis element `a` of `Z(A)`: solvability of
        /// `am = l m − m l` and `ma = r m − m r` with `l, r ∈ Z(A)`.
        per_basis: Vec<(bool, bool)>,
        /// Some `c ∈ Z(A)` with `m = cm − mc`.
        c: Option<Vec<F::Elem>>,
    },
}

impl<F: Field> CentralMultiplierCheck<F> {
    pub fn passed(&self) -> Option<bool> {
        match self {
            CentralMultiplierCheck::Skipped => None,
            CentralMultiplierCheck::Checked { per_basis, .. } => Some(per_basis.iter().all(|&(l, r)| l && r)),
        }
    }
}

pub fn central_multiplier_check<F: Field>(report: &CohomologyReport<F>, ext: &TrivialExtension<F>) -> CentralMultiplierCheck<F> {
    if report.spaces.end.space != report.spaces.innbi.space {
        return CentralMultiplierCheck::Skipped;
    }
    let module = ext.module();
    let center = ext.base().center();
    let per_basis = center
        .basis()
        .map(|z| {
            let l = solve_bracket(module, &center, &module.left_action(z)).is_some();
            let r = solve_bracket(module, &center, &module.right_action(z)).is_some();
            (l, r)
        })
        .collect();
    let c = solve_bracket(module, &center, &Matrix::identity(ext.field(), module.dim()));
    CentralMultiplierCheck::Checked { per_basis, c }
}

/// Outcome of looking at `H¹(A⋉M) = 0` against triangular representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuestionScan {
    /// `H¹ ≠ 0`: the question does not apply.
    NotApplicable,
    /// `H¹ = 0` and a representation was found.
    Consistent,
    /// `H¹ = 0` but an exhaustive search found no representation.
    Finding,
    /// `H¹ = 0` and the search was inconclusive.
    Undecided,
}

pub fn triangular_question_scan<F: Field>(report: &CohomologyReport<F>, outcome: &TriangularOutcome<F>) -> QuestionScan {
    if !report.h1_total.is_zero() {
        return QuestionScan::NotApplicable;
    }
    match outcome {
        TriangularOutcome::Found(_) => QuestionScan::Consistent,
        TriangularOutcome::NoneExists => QuestionScan::Finding,
        TriangularOutcome::Undecided(_) => QuestionScan::Undecided,
    }
}

/// Convenience: triangular search plus question scan.
pub fn triangular_scan<F: Field>(
    report: &CohomologyReport<F>,
    ext: &TrivialExtension<F>,
    source: &IdempotentSource<F>,
) -> (TriangularOutcome<F>, QuestionScan) {
    let outcome = ext.find_triangular_representation(source);
    let scan = triangular_question_scan(report, &outcome);
    (outcome, scan)
}
