//! Brute-force oracle over small prime fields. Works on plain `u64`
//! coordinates and recomputes every product from the raw tables, so it
//! shares no arithmetic with the library beyond reading the inputs.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashSet;

use algcoh_core::algebra::Algebra;
use algcoh_core::bimodule::Bimodule;
use algcoh_core::field::PrimeField;
use algcoh_core::linalg::Matrix;

pub type V = Vec<u64>;

#[derive(Clone, Debug)]
pub struct Alg {
    pub p: u64,
    pub n: usize,
    /// `c[(i*n + j)*n + k]`: coefficient of `e_k` in `e_i e_j`.
    pub c: Vec<u64>,
    pub unit: V,
}

impl Alg {
    pub fn of(a: &Algebra<PrimeField>) -> Self {
        let n = a.dim();
        let mut c = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c.push(*a.structure_constant(i, j, k));
                }
            }
        }
        Alg {
            p: a.field().characteristic(),
            n,
            c,
            unit: a.unit().to_vec(),
        }
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> V {
        let n = self.n;
        let mut out = vec![0; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                let s = x[i] * y[j] % self.p;
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + s * self.c[(i * n + j) * n + k]) % self.p;
                }
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> V {
        unit(self.n, i)
    }

    pub fn elements(&self) -> Vec<V> {
        vectors(self.p, self.n)
    }

    pub fn is_central(&self, z: &[u64]) -> bool {
        (0..self.n).all(|i| self.mul(z, &self.basis(i)) == self.mul(&self.basis(i), z))
    }
}

/// A bimodule as explicit action matrices, `m × m` row-major per basis
/// element of the algebra.
#[derive(Clone, Debug)]
pub struct Bim {
    pub p: u64,
    pub n: usize,
    pub m: usize,
    pub left: Vec<V>,
    pub right: Vec<V>,
}

fn read_matrix(mat: &Matrix<PrimeField>) -> V {
    let mut out = Vec::new();
    for r in 0..mat.rows() {
        for c in 0..mat.cols() {
            out.push(*mat.get(r, c));
        }
    }
    out
}

impl Bim {
    pub fn of(b: &Bimodule<PrimeField>) -> Self {
        Bim {
            p: b.field().characteristic(),
            n: b.algebra().dim(),
            m: b.dim(),
            left: b.left_matrices().iter().map(read_matrix).collect(),
            right: b.right_matrices().iter().map(read_matrix).collect(),
        }
    }

    /// `A` over itself, built from the multiplication table.
    pub fn regular(a: &Alg) -> Self {
        let n = a.n;
        let mut left = vec![vec![0; n * n]; n];
        let mut right = vec![vec![0; n * n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    left[i][k * n + j] = a.c[(i * n + j) * n + k];
                    right[i][k * n + j] = a.c[(j * n + i) * n + k];
                }
            }
        }
        Bim { p: a.p, n, m: n, left, right }
    }

    fn act(&self, mats: &[V], a: &[u64], v: &[u64]) -> V {
        let m = self.m;
        let mut out = vec![0; m];
        for (i, ai) in a.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for r in 0..m {
                for c in 0..m {
                    out[r] = (out[r] + ai * mats[i][r * m + c] % self.p * v[c]) % self.p;
                }
            }
        }
        out
    }

    pub fn l(&self, a: &[u64], v: &[u64]) -> V {
        self.act(&self.left, a, v)
    }

    pub fn r(&self, v: &[u64], a: &[u64]) -> V {
        self.act(&self.right, a, v)
    }

    pub fn basis(&self, i: usize) -> V {
        unit(self.m, i)
    }
}

/// The trivial extension, built directly from `(a,m)(b,n) = (ab, an + mb)`.
pub fn trivial_extension(a: &Alg, b: &Bim) -> Alg {
    let (n, m) = (a.n, b.m);
    let t = n + m;
    let mut c = vec![0; t * t * t];
    for i in 0..t {
        for j in 0..t {
            let x = unit(t, i);
            let y = unit(t, j);
            let prod = ext_mul(a, b, &x, &y);
            for k in 0..t {
                c[(i * t + j) * t + k] = prod[k];
            }
        }
    }
    let mut u = a.unit.clone();
    u.extend(std::iter::repeat_n(0, m));
    Alg { p: a.p, n: t, c, unit: u }
}

fn ext_mul(a: &Alg, b: &Bim, x: &[u64], y: &[u64]) -> V {
    let n = a.n;
    let (xa, xm) = x.split_at(n);
    let (ya, ym) = y.split_at(n);
    let mut out = a.mul(xa, ya);
    out.extend(add(a.p, &b.l(xa, ym), &b.r(xm, ya)));
    out
}

pub fn unit(n: usize, i: usize) -> V {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn add(p: u64, x: &[u64], y: &[u64]) -> V {
    x.iter().zip(y).map(|(a, b)| (a + b) % p).collect()
}

pub fn sub(p: u64, x: &[u64], y: &[u64]) -> V {
    x.iter().zip(y).map(|(a, b)| (a + p - b) % p).collect()
}

/// All `p^n` vectors.
pub fn vectors(p: u64, n: usize) -> Vec<V> {
    let total = p.pow(n as u32);
    (0..total)
        .map(|mut k| {
            let mut v = vec![0; n];
            for x in v.iter_mut().rev() {
                *x = k % p;
                k /= p;
            }
            v
        })
        .collect()
}

/// A linear map `rows × cols`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lin {
    pub rows: usize,
    pub cols: usize,
    pub v: V,
}

impl Lin {
    pub fn apply(&self, p: u64, x: &[u64]) -> V {
        (0..self.rows)
            .map(|r| (0..self.cols).fold(0, |acc, c| (acc + self.v[r * self.cols + c] * x[c]) % p))
            .collect()
    }

    pub fn col(&self, c: usize) -> V {
        (0..self.rows).map(|r| self.v[r * self.cols + c]).collect()
    }

    pub fn of(mat: &Matrix<PrimeField>) -> Self {
        Lin {
            rows: mat.rows(),
            cols: mat.cols(),
            v: read_matrix(mat),
        }
    }
}

/// Every linear map `rows × cols` over `F_p`.
pub fn all_maps(p: u64, rows: usize, cols: usize) -> impl Iterator<Item = Lin> {
    let total = p.pow((rows * cols) as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![0; rows * cols];
        for x in v.iter_mut().rev() {
            *x = k % p;
            k /= p;
        }
        Lin { rows, cols, v }
    })
}

/// `log_p` of a count that must be an exact power of `p`.
pub fn log_p(p: u64, count: u64) -> usize {
    let mut k = 0;
    let mut c = count;
    while c > 1 {
        assert_eq!(c % p, 0, "{count} is not a power of {p}");
        c /= p;
        k += 1;
    }
    k
}

// ---- predicates on basis pairs -------------------------------------------

/// `D: A → M` with `D(xy) = D(x)y + xD(y)`.
pub fn leibniz(a: &Alg, b: &Bim, d: &Lin) -> bool {
    let p = a.p;
    (0..a.n).all(|i| {
        (0..a.n).all(|j| {
            let (x, y) = (a.basis(i), a.basis(j));
            let lhs = d.apply(p, &a.mul(&x, &y));
            let rhs = add(p, &b.r(&d.col(i), &y), &b.l(&x, &d.col(j)));
            lhs == rhs
        })
    })
}

/// `D: A → A` derivation of the algebra itself.
pub fn algebra_derivation(a: &Alg, d: &Lin) -> bool {
    leibniz(a, &Bim::regular(a), d)
}

/// `S: M → M` with `S(am) = aS(m)`, `S(ma) = S(m)a`.
pub fn endomorphism(b: &Bim, s: &Lin) -> bool {
    let p = b.p;
    (0..b.n).all(|i| {
        let x = unit(b.n, i);
        (0..b.m).all(|j| {
            let v = b.basis(j);
            s.apply(p, &b.l(&x, &v)) == b.l(&x, &s.col(j)) && s.apply(p, &b.r(&v, &x)) == b.r(&s.col(j), &x)
        })
    })
}

/// `(d, S)` with `S(am) = aS(m) + d(a)m` and `S(ma) = S(m)a + md(a)`.
pub fn generalized(b: &Bim, d: &Lin, s: &Lin) -> bool {
    let p = b.p;
    (0..b.n).all(|i| {
        let x = unit(b.n, i);
        let dx = d.col(i);
        (0..b.m).all(|j| {
            let v = b.basis(j);
            let sv = s.col(j);
            s.apply(p, &b.l(&x, &v)) == add(p, &b.l(&x, &sv), &b.l(&dx, &v)) && s.apply(p, &b.r(&v, &x)) == add(p, &b.r(&sv, &x), &b.r(&v, &dx))
        })
    })
}

/// `T: M → A` a bimodule map with `T(m)n + mT(n) = 0`.
pub fn in_e(a: &Alg, b: &Bim, t: &Lin) -> bool {
    let p = a.p;
    let hom = (0..a.n).all(|i| {
        let x = a.basis(i);
        (0..b.m).all(|j| {
            let v = b.basis(j);
            t.apply(p, &b.l(&x, &v)) == a.mul(&x, &t.col(j)) && t.apply(p, &b.r(&v, &x)) == a.mul(&t.col(j), &x)
        })
    });
    hom && (0..b.m).all(|j| (0..b.m).all(|k| add(p, &b.r(&b.basis(k), &t.col(j)), &b.l(&t.col(k), &b.basis(j))) == vec![0; b.m]))
}

// ---- distinct maps of inner families -------------------------------------

/// `{[m0, −] : m0 ∈ M}` as maps `A → M`.
pub fn inner_derivations(a: &Alg, b: &Bim) -> HashSet<Lin> {
    vectors(a.p, b.m)
        .into_iter()
        .map(|m0| {
            let cols: Vec<V> = (0..a.n).map(|i| sub(a.p, &b.r(&m0, &a.basis(i)), &b.l(&a.basis(i), &m0))).collect();
            from_cols(b.m, &cols)
        })
        .collect()
}

/// `{[a0, −]_M : a0 ∈ A}`, optionally restricted to central `a0`.
pub fn module_brackets(a: &Alg, b: &Bim, central_only: bool) -> HashSet<Lin> {
    a.elements()
        .into_iter()
        .filter(|a0| !central_only || a.is_central(a0))
        .map(|a0| {
            let cols: Vec<V> = (0..b.m).map(|j| sub(a.p, &b.l(&a0, &b.basis(j)), &b.r(&b.basis(j), &a0))).collect();
            from_cols(b.m, &cols)
        })
        .collect()
}

pub fn from_cols(rows: usize, cols: &[V]) -> Lin {
    let mut v = vec![0; rows * cols.len()];
    for (c, col) in cols.iter().enumerate() {
        for r in 0..rows {
            v[r * cols.len() + c] = col[r];
        }
    }
    Lin { rows, cols: cols.len(), v }
}

pub fn idempotents(a: &Alg) -> Vec<V> {
    a.elements().into_iter().filter(|x| a.mul(x, x) == *x).collect()
}

/// A nontrivial idempotent `e` with `(1−e)Ae = 0` and `(1−e)Me = 0`.
pub fn triangular_idempotent(a: &Alg, b: &Bim) -> Option<V> {
    let zero_a = vec![0; a.n];
    let zero_m = vec![0; b.m];
    idempotents(a).into_iter().find(|e| {
        if *e == zero_a || *e == a.unit {
            return false;
        }
        let f = sub(a.p, &a.unit, e);
        (0..a.n).all(|i| a.mul(&a.mul(&f, &a.basis(i)), e) == zero_a) && (0..b.m).all(|j| b.r(&b.l(&f, &b.basis(j)), e) == zero_m)
    })
}
