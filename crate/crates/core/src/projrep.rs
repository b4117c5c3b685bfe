//! Projective representations `(σ, V, π)`: algebra maps `π : A(σ) → End(V)`
//! for lazy cocycles `σ`, with tensor products, duals and basic morphisms.
//!
//! `π(a)` acts on column vectors; a morphism `f : V → W` is a
//! `dim W × dim V` matrix.

use crate::error::{HopfError, Result};
use crate::forms::{conv_inverse_bi, BiForm, Convolve, LinForm};
use crate::galois::{gen_antipode, is_lazy_cocycle, right_twisted_mul};
use crate::hopf::{tuples, HopfAlgebra, Verdict};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjRep {
    pub sigma: BiForm,
    pub dim: usize,
    /// One matrix per basis element of `A`.
    pub pi: Vec<Matrix>,
}

impl ProjRep {
    /// `π(v)` for a vector `v ∈ A`.
    pub fn image(&self, v: &[Scalar]) -> Matrix {
        let f = self.sigma.0.field().clone();
        let mut out = Matrix::zeros(&f, self.dim, self.dim);
        for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = out.add(&self.pi[i].scale(c)).expect("same shape");
        }
        out
    }

    /// The unit object `(ε⊗ε, k, ε)`.
    pub fn unit(h: &HopfAlgebra) -> ProjRep {
        let f = h.field();
        ProjRep {
            sigma: BiForm::counit(h),
            dim: 1,
            pi: h.counit().iter().map(|e| Matrix::from_fn(f, 1, 1, |_, _| e.clone())).collect(),
        }
    }
}

/// `π(a ·_σ b) = π(a) π(b)` on basis pairs and `π(1) = Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjRepReport {
    pub lazy_cocycle: bool,
    pub unital: bool,
    pub multiplicative: Verdict,
}

impl ProjRepReport {
    pub fn passes(&self) -> bool {
        self.lazy_cocycle && self.unital && self.multiplicative.holds()
    }
}

fn check_shapes(x: &ProjRep, h: &HopfAlgebra) -> Result<()> {
    if x.pi.len() != h.dim() || x.pi.iter().any(|m| m.rows() != x.dim || m.cols() != x.dim) {
        return Err(HopfError::ShapeMismatch("representation matrices".into()));
    }
    if x.sigma.0.rows() != h.dim() {
        return Err(HopfError::ShapeMismatch("cocycle".into()));
    }
    Ok(())
}

pub fn projrep_report(x: &ProjRep, h: &HopfAlgebra) -> Result<ProjRepReport> {
    check_shapes(x, h)?;
    let lazy_cocycle = is_lazy_cocycle(&x.sigma, h);
    let unital = x.image(h.unit()).is_identity();
    let multiplicative = Verdict::first_failure(tuples(h.dim(), 2), |t| {
        let ab = right_twisted_mul(h, &x.sigma, &h.basis_vec(t[0]), &h.basis_vec(t[1]));
        x.image(&ab) == x.pi[t[0]].mul(&x.pi[t[1]]).expect("square")
    });
    Ok(ProjRepReport { lazy_cocycle, unital, multiplicative })
}

pub fn check_projrep(x: &ProjRep, h: &HopfAlgebra) -> bool {
    projrep_report(x, h).map(|r| r.passes()).unwrap_or(false)
}

fn require_lazy(sigma: &BiForm, h: &HopfAlgebra) -> Result<()> {
    if !is_lazy_cocycle(sigma, h) {
        return Err(HopfError::NotLazy("projective representations need a lazy cocycle".into()));
    }
    Ok(())
}

/// Left multiplication of `_σA` on itself.
pub fn regular_projrep(h: &HopfAlgebra, sigma: &BiForm) -> Result<ProjRep> {
    require_lazy(sigma, h)?;
    let n = h.dim();
    let pi = (0..n)
        .map(|a| {
            let cols: Vec<Vec<Scalar>> = (0..n).map(|j| right_twisted_mul(h, sigma, &h.basis_vec(a), &h.basis_vec(j))).collect();
            Matrix::from_fn(h.field(), n, n, |i, j| cols[j][i].clone())
        })
        .collect();
    Ok(ProjRep { sigma: sigma.clone(), dim: n, pi })
}

/// `(σ∗ω, V⊗W, (π_V⊗π_W)∘Δ)`
pub fn tensor_projrep(x: &ProjRep, y: &ProjRep, h: &HopfAlgebra) -> Result<ProjRep> {
    check_shapes(x, h)?;
    check_shapes(y, h)?;
    let sigma = x.sigma.convolve(&y.sigma, h)?;
    let d = x.dim * y.dim;
    let pi = (0..h.dim())
        .map(|a| {
            let mut m = Matrix::zeros(h.field(), d, d);
            for (a1, a2, c) in h.comult_basis(a) {
                m = m.add(&x.pi[*a1].kron(&y.pi[*a2]).scale(c)).expect("same shape");
            }
            m
        })
        .collect();
    Ok(ProjRep { sigma, dim: d, pi })
}

/// `(σ⁻¹, V*, ᵗπ_V ∘ φ_{σ⁻¹})`
pub fn dual_projrep(x: &ProjRep, h: &HopfAlgebra) -> Result<ProjRep> {
    check_shapes(x, h)?;
    let inv = conv_inverse_bi(h, &x.sigma)?;
    let phi = gen_antipode(h, &inv)?;
    let pi = (0..h.dim()).map(|a| x.image(phi.0.row(a)).transpose()).collect();
    Ok(ProjRep { sigma: inv, dim: x.dim, pi })
}

/// `e : V*⊗V → k`, as a `1 × dim²` matrix.
pub fn evaluation(x: &ProjRep) -> Matrix {
    let n = x.dim;
    let f = x.sigma.0.field().clone();
    Matrix::from_fn(&f, 1, n * n, |_, k| if k / n == k % n { Scalar::one(&f) } else { Scalar::zero(&f) })
}

/// `δ : k → V⊗V*`, as a `dim² × 1` matrix.
pub fn coevaluation(x: &ProjRep) -> Matrix {
    evaluation(x).transpose()
}

/// `f ∘ π_V(a) = μ(a₁) π_W(a₂) ∘ f` on every basis element.
pub fn check_basic_morphism(f: &Matrix, x: &ProjRep, y: &ProjRep, mu: &LinForm, h: &HopfAlgebra) -> Verdict {
    Verdict::first_failure(tuples(h.dim(), 1), |t| {
        let lhs = f.mul(&x.pi[t[0]]).expect("shape");
        let mut rhs = Matrix::zeros(h.field(), y.dim, x.dim);
        for (a1, a2, c) in h.comult_basis(t[0]) {
            let k = c * mu.at(*a1);
            if !k.is_zero() {
                rhs = rhs.add(&y.pi[*a2].mul(f).expect("shape").scale(&k)).expect("shape");
            }
        }
        lhs == rhs
    })
}

pub fn is_basic_morphism(f: &Matrix, x: &ProjRep, y: &ProjRep, mu: &LinForm, h: &HopfAlgebra) -> bool {
    f.rows() == y.dim && f.cols() == x.dim && check_basic_morphism(f, x, y, mu, h).holds()
}

/// Basis of all `f` with `f ∘ π_V(a) = μ(a₁) π_W(a₂) ∘ f` at fixed `μ`.
pub fn basic_morphism_space(x: &ProjRep, y: &ProjRep, mu: &LinForm, h: &HopfAlgebra) -> Vec<Matrix> {
    let (dv, dw) = (x.dim, y.dim);
    let fld = h.field();
    // unknown f[r][c] at index r·dv + c
    let mut rows = Vec::new();
    for a in 0..h.dim() {
        let mut m = Matrix::zeros(fld, dw, dw);
        for (a1, a2, c) in h.comult_basis(a) {
            let k = c * mu.at(*a1);
            if !k.is_zero() {
                m = m.add(&y.pi[*a2].scale(&k)).expect("shape");
            }
        }
        let p = &x.pi[a];
        for r in 0..dw {
            for s in 0..dv {
                // (f p)[r][s] - (m f)[r][s]
                let mut row = vec![Scalar::zero(fld); dw * dv];
                for k in 0..dv {
                    row[r * dv + k] += p.get(k, s);
                }
                for k in 0..dw {
                    row[k * dv + s] -= m.get(r, k);
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..dw * dv).map(|i| crate::linalg::unit_vec(fld, dw * dv, i)).collect()
    } else {
        Matrix::from_rows(fld, rows).expect("rows").kernel()
    };
    basis.into_iter().map(|v| Matrix::from_fn(fld, dw, dv, |r, c| v[r * dv + c].clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{group_algebra, sigma_t, sweedler, FiniteGroup};
    use crate::forms::{conv_inverse_lin, frac, LinMap};
    use crate::lazy::coboundary;
    use crate::scalar::Field;

    #[test]
    fn regular_untwisted_is_left_regular() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let x = regular_projrep(&h, &BiForm::counit(&h)).unwrap();
        for a in 0..4 {
            assert_eq!(x.pi[a], h.algebra().left_regular(&h.basis_vec(a)));
        }
        assert!(check_projrep(&x, &h));
    }

    #[test]
    fn regular_sigma_t() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let t = frac(&f, 3, 1);
        let x = regular_projrep(&h, &sigma_t(&h, &t).unwrap()).unwrap();
        assert!(check_projrep(&x, &h));
        let xx = x.pi[2].mul(&x.pi[2]).unwrap();
        assert_eq!(xx, Matrix::identity(&f, 4).scale(&frac(&f, 3, 2)));
        let mut bad = x.clone();
        bad.pi[2].set(0, 0, frac(&f, 1, 1));
        let r = projrep_report(&bad, &h).unwrap();
        assert!(r.multiplicative.witness().is_some());
    }

    #[test]
    fn dual_and_evaluation() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let t = frac(&f, 2, 1);
        let x = regular_projrep(&h, &sigma_t(&h, &t).unwrap()).unwrap();
        let xd = dual_projrep(&x, &h).unwrap();
        assert_eq!(xd.sigma, sigma_t(&h, &-&t).unwrap());
        assert!(check_projrep(&xd, &h));
        let unit = ProjRep::unit(&h);
        let eps = LinForm::counit(&h);
        let left = tensor_projrep(&xd, &x, &h).unwrap();
        assert!(is_basic_morphism(&evaluation(&x), &left, &unit, &eps, &h));
        let right = tensor_projrep(&x, &xd, &h).unwrap();
        assert!(is_basic_morphism(&coevaluation(&x), &unit, &right, &eps, &h));
    }

    #[test]
    fn different_classes_have_no_morphisms() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let x = regular_projrep(&h, &sigma_t(&h, &frac(&f, 1, 1)).unwrap()).unwrap();
        let y = regular_projrep(&h, &sigma_t(&h, &frac(&f, 2, 1)).unwrap()).unwrap();
        let eps = LinForm::counit(&h);
        assert!(basic_morphism_space(&x, &y, &eps, &h).is_empty());
        assert_eq!(basic_morphism_space(&x, &x, &eps, &h).len(), 4);
    }

    #[test]
    fn coboundary_twist_gives_morphism() {
        let f = Field::Rational;
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        let mu = LinForm(vec![frac(&f, 1, 1), frac(&f, 3, 1)]);
        let sigma = BiForm::counit(&k);
        // σ = ∂μ ∗ ω
        let omega = coboundary(&conv_inverse_lin(&k, &mu).unwrap(), &k).unwrap().convolve(&sigma, &k).unwrap();
        let x = regular_projrep(&k, &sigma).unwrap();
        let y = regular_projrep(&k, &omega).unwrap();
        let fmap = mu.convolve(&LinMap::identity(&k), &k).unwrap().0.transpose();
        assert!(is_basic_morphism(&fmap, &x, &y, &mu, &k));
        assert!(!basic_morphism_space(&x, &y, &mu, &k).is_empty());
        assert!(basic_morphism_space(&x, &y, &LinForm::counit(&k), &k).is_empty());
    }
}
