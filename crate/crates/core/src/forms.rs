//! Linear forms, bilinear forms and linear maps on a Hopf algebra, with
//! convolution products and exact convolution inverses.

use crate::error::{HopfError, Result};
use crate::hopf::{HopfAlgebra, Verdict};
use crate::linalg::{axpy, solve_sparse_unique, zero_vec, Matrix, SparseEquation};
use crate::scalar::{Field, Scalar};

/// `μ : A → k`, stored as its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinForm(pub Vec<Scalar>);

/// `σ : A ⊗ B → k`, entry `(i, j)` is `σ(b_i, b_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiForm(pub Matrix);

/// `f : A → B`, row `i` is `f(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap(pub Matrix);

impl LinForm {
    pub fn counit(h: &HopfAlgebra) -> LinForm {
        LinForm(h.counit().to_vec())
    }

    pub fn from_fn(h: &HopfAlgebra, f: impl FnMut(usize) -> Scalar) -> LinForm {
        LinForm((0..h.dim()).map(f).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn at(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn eval(&self, v: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero(&self.0[0].field());
        for (a, b) in v.iter().zip(&self.0) {
            s.add_mul(a, b);
        }
        s
    }

    /// `μ ∘ f`
    pub fn compose(&self, f: &LinMap) -> LinForm {
        LinForm((0..f.0.rows()).map(|i| self.eval(f.0.row(i))).collect())
    }

    /// `(μ ⊗ μ)` as a bilinear form.
    pub fn tensor_square(&self) -> BiForm {
        let n = self.dim();
        let f = self.0[0].field();
        BiForm(Matrix::from_fn(&f, n, n, |i, j| &self.0[i] * &self.0[j]))
    }

    /// `(μ ⊗ ν)(a, b) = μ(a) ν(b)`
    pub fn tensor(&self, other: &LinForm) -> BiForm {
        let f = self.0[0].field();
        BiForm(Matrix::from_fn(&f, self.dim(), other.dim(), |i, j| &self.0[i] * &other.0[j]))
    }

    /// `μ ∘ m` as a bilinear form.
    pub fn after_mult(&self, h: &HopfAlgebra) -> BiForm {
        let n = h.dim();
        BiForm(Matrix::from_fn(h.field(), n, n, |i, j| {
            let mut s = h.zero_scalar();
            for (k, c) in h.mul_basis(i, j) {
                s.add_mul(c, &self.0[*k]);
            }
            s
        }))
    }

    /// `a ↦ μ(a) 1`
    pub fn times_unit(&self, h: &HopfAlgebra) -> LinMap {
        let n = h.dim();
        LinMap(Matrix::from_fn(h.field(), n, n, |i, j| &self.0[i] * &h.unit()[j]))
    }

    pub fn is_algebra_map(&self, h: &HopfAlgebra) -> Verdict {
        let n = h.dim();
        if !self.eval(h.unit()).is_one() {
            return Verdict::FailsAt(vec![]);
        }
        Verdict::first_failure(crate::hopf::tuples(n, 2), |t| {
            let mut s = h.zero_scalar();
            for (k, c) in h.mul_basis(t[0], t[1]) {
                s.add_mul(c, &self.0[*k]);
            }
            s == &self.0[t[0]] * &self.0[t[1]]
        })
    }
}

impl BiForm {
    pub fn counit(h: &HopfAlgebra) -> BiForm {
        LinForm::counit(h).tensor_square()
    }

    pub fn from_fn(h: &HopfAlgebra, f: impl FnMut(usize, usize) -> Scalar) -> BiForm {
        BiForm(Matrix::from_fn(h.field(), h.dim(), h.dim(), f))
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        self.0.get(i, j)
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero(self.0.field());
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                s.add_mul(&(a * b), self.0.get(i, j));
            }
        }
        s
    }

    /// `σ ∘ τ`, the flipped form `(a, b) ↦ σ(b, a)`.
    pub fn flip(&self) -> BiForm {
        BiForm(self.0.transpose())
    }

    /// `σ ← α = σ ∘ (α ⊗ α)`
    pub fn pullback(&self, alpha: &LinMap) -> BiForm {
        let a = &alpha.0;
        let f = self.0.field();
        BiForm(Matrix::from_fn(f, a.rows(), a.rows(), |i, j| self.eval(a.row(i), a.row(j))))
    }
}

impl LinMap {
    pub fn identity(h: &HopfAlgebra) -> LinMap {
        LinMap(Matrix::identity(h.field(), h.dim()))
    }

    pub fn antipode(h: &HopfAlgebra) -> LinMap {
        LinMap(h.antipode().clone())
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.0.vec_mul(v).expect("dimension")
    }

    /// `g ∘ self`
    pub fn then(&self, g: &LinMap) -> LinMap {
        LinMap(self.0.mul(&g.0).expect("composable maps"))
    }

    pub fn inverse(&self) -> Result<LinMap> {
        Ok(LinMap(self.0.inverse()?))
    }
}

/// Convolution products in `Hom(A, k)`, `Hom(A ⊗ A, k)` and `Hom(A, A)`.
pub trait Convolve<Rhs = Self> {
    type Output;
    fn convolve(&self, rhs: &Rhs, h: &HopfAlgebra) -> Result<Self::Output>;
}

fn check_len(h: &HopfAlgebra, n: usize) -> Result<()> {
    if n != h.dim() {
        return Err(HopfError::ShapeMismatch(format!("form of size {n} on algebra of dimension {}", h.dim())));
    }
    Ok(())
}

fn check_square(h: &HopfAlgebra, m: &Matrix) -> Result<()> {
    if m.rows() != h.dim() || m.cols() != h.dim() {
        return Err(HopfError::ShapeMismatch(format!(
            "{}x{} matrix on algebra of dimension {}",
            m.rows(),
            m.cols(),
            h.dim()
        )));
    }
    if m.field() != h.field() {
        return Err(HopfError::FieldMismatch(format!("{} form on {} algebra", m.field(), h.field())));
    }
    Ok(())
}

impl Convolve for LinForm {
    type Output = LinForm;
    fn convolve(&self, g: &LinForm, h: &HopfAlgebra) -> Result<LinForm> {
        check_len(h, self.dim())?;
        check_len(h, g.dim())?;
        Ok(LinForm::from_fn(h, |i| {
            let mut s = h.zero_scalar();
            for (j, k, c) in h.comult_basis(i) {
                s.add_mul(c, &(&self.0[*j] * &g.0[*k]));
            }
            s
        }))
    }
}

impl Convolve for BiForm {
    type Output = BiForm;
    fn convolve(&self, t: &BiForm, h: &HopfAlgebra) -> Result<BiForm> {
        check_square(h, &self.0)?;
        check_square(h, &t.0)?;
        Ok(BiForm::from_fn(h, |a, b| {
            let mut s = h.zero_scalar();
            for (a1, a2, c) in h.comult_basis(a) {
                for (b1, b2, d) in h.comult_basis(b) {
                    let x = self.0.get(*a1, *b1);
                    if x.is_zero() {
                        continue;
                    }
                    let y = t.0.get(*a2, *b2);
                    if y.is_zero() {
                        continue;
                    }
                    s.add_mul(&(c * d), &(x * y));
                }
            }
            s
        }))
    }
}

impl Convolve<LinMap> for LinForm {
    type Output = LinMap;
    /// `(μ ∗ f)(a) = μ(a₁) f(a₂)`
    fn convolve(&self, f: &LinMap, h: &HopfAlgebra) -> Result<LinMap> {
        check_len(h, self.dim())?;
        let n = h.dim();
        let mut m = Matrix::zeros(h.field(), n, f.0.cols());
        for i in 0..n {
            let mut row = zero_vec(h.field(), f.0.cols());
            for (j, k, c) in h.comult_basis(i) {
                axpy(&mut row, &(c * &self.0[*j]), f.0.row(*k));
            }
            for (x, v) in row.into_iter().enumerate() {
                m.set(i, x, v);
            }
        }
        Ok(LinMap(m))
    }
}

impl Convolve<LinForm> for LinMap {
    type Output = LinMap;
    /// `(f ∗ μ)(a) = f(a₁) μ(a₂)`
    fn convolve(&self, mu: &LinForm, h: &HopfAlgebra) -> Result<LinMap> {
        check_len(h, mu.dim())?;
        let n = h.dim();
        let mut m = Matrix::zeros(h.field(), n, self.0.cols());
        for i in 0..n {
            let mut row = zero_vec(h.field(), self.0.cols());
            for (j, k, c) in h.comult_basis(i) {
                axpy(&mut row, &(c * &mu.0[*k]), self.0.row(*j));
            }
            for (x, v) in row.into_iter().enumerate() {
                m.set(i, x, v);
            }
        }
        Ok(LinMap(m))
    }
}

impl Convolve for LinMap {
    type Output = LinMap;
    /// `(f ∗ g)(a) = f(a₁) g(a₂)`, product taken in `A`.
    fn convolve(&self, g: &LinMap, h: &HopfAlgebra) -> Result<LinMap> {
        check_square(h, &self.0)?;
        check_square(h, &g.0)?;
        let n = h.dim();
        let mut m = Matrix::zeros(h.field(), n, n);
        for i in 0..n {
            let mut row = h.zero();
            for (j, k, c) in h.comult_basis(i) {
                let p = h.mul(self.0.row(*j), g.0.row(*k));
                axpy(&mut row, c, &p);
            }
            for (x, v) in row.into_iter().enumerate() {
                m.set(i, x, v);
            }
        }
        Ok(LinMap(m))
    }
}

/// Convolution product `f ∗ g`.
pub fn convolve<L: Convolve<R>, R>(h: &HopfAlgebra, f: &L, g: &R) -> Result<L::Output> {
    f.convolve(g, h)
}

/// Exact convolution inverse of a linear form.
pub fn conv_inverse_lin(h: &HopfAlgebra, f: &LinForm) -> Result<LinForm> {
    check_len(h, f.dim())?;
    let n = h.dim();
    let eqs = (0..n)
        .map(|i| SparseEquation {
            coeffs: h.comult_basis(i).iter().map(|(j, k, c)| (*k, c * &f.0[*j])).collect(),
            rhs: h.counit()[i].clone(),
        })
        .collect();
    let g = LinForm(solve_sparse_unique(h.field(), n, eqs).map_err(|_| not_invertible())?);
    if g.convolve(f, h)? != LinForm::counit(h) {
        return Err(not_invertible());
    }
    Ok(g)
}

/// Exact convolution inverse of a bilinear form.
pub fn conv_inverse_bi(h: &HopfAlgebra, s: &BiForm) -> Result<BiForm> {
    check_square(h, &s.0)?;
    let n = h.dim();
    let mut eqs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut coeffs = Vec::new();
            for (a1, a2, c) in h.comult_basis(a) {
                for (b1, b2, d) in h.comult_basis(b) {
                    let x = s.0.get(*a1, *b1);
                    if !x.is_zero() {
                        coeffs.push((a2 * n + b2, &(c * d) * x));
                    }
                }
            }
            eqs.push(SparseEquation { coeffs, rhs: &h.counit()[a] * &h.counit()[b] });
        }
    }
    let sol = solve_sparse_unique(h.field(), n * n, eqs).map_err(|_| not_invertible())?;
    let inv = BiForm(Matrix::from_fn(h.field(), n, n, |i, j| sol[i * n + j].clone()));
    if inv.convolve(s, h)? != BiForm::counit(h) {
        return Err(not_invertible());
    }
    Ok(inv)
}

fn not_invertible() -> HopfError {
    HopfError::NotInvertible("form has no convolution inverse".into())
}

/// Convolution inverse, dispatching on the form type.
pub trait ConvInverse: Sized {
    fn conv_inverse(&self, h: &HopfAlgebra) -> Result<Self>;
}

impl ConvInverse for LinForm {
    fn conv_inverse(&self, h: &HopfAlgebra) -> Result<LinForm> {
        conv_inverse_lin(h, self)
    }
}

impl ConvInverse for BiForm {
    fn conv_inverse(&self, h: &HopfAlgebra) -> Result<BiForm> {
        conv_inverse_bi(h, self)
    }
}

/// Exact convolution inverse of a form.
pub fn conv_inverse<F: ConvInverse>(h: &HopfAlgebra, f: &F) -> Result<F> {
    f.conv_inverse(h)
}

/// Convenience: scalar from a small fraction in the algebra's field.
pub fn frac(field: &Field, n: i64, d: i64) -> Scalar {
    Scalar::from_frac(field, n, d).expect("nonzero denominator in field")
}
