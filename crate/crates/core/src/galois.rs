//! Comodule algebras and the Galois objects attached to 2-cocycles: Doi
//! twists, `_σA`, `A_σ`, `A(σ)`, cleft cocycle extraction, symmetry
//! morphisms, cotensor products, the generalized antipode `φ_σ` and the
//! action of lazy cocycles on universal r-forms.
//!
//! Coactions are stored as dense matrices with the row convention:
//! row `i` of a right coaction is `ρ(z_i)` in `Z ⊗ A` (index `j·dim A + k`),
//! row `i` of a left coaction is `β(z_i)` in `A ⊗ Z` (index `k·dim Z + j`).

use std::collections::{BTreeMap, HashMap};

use crate::error::{HopfError, Result};
use crate::forms::{conv_inverse_bi, BiForm, Convolve, LinForm, LinMap};
use crate::hopf::{tensor_mul, tuples, Algebra, HopfAlgebra, SparseVec, Verdict};
use crate::lazy::{check_left_cocycle, check_right_cocycle, is_hopf_automorphism, is_lazy2, is_left_cocycle};
use crate::linalg::{axpy, zero_vec, Matrix};
use crate::scalar::Scalar;

/// An algebra with a right and/or left coaction of a Hopf algebra.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    alg: Algebra,
    hopf: HopfAlgebra,
    right: Option<Matrix>,
    left: Option<Matrix>,
}

/// Which Galois object to attach to a cocycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `_σA`: product `σ(a₁,b₁)a₂b₂`, right coaction `Δ`.
    Right,
    /// `A_σ`: product `a₁b₁σ(a₂,b₂)`, left coaction `Δ`.
    Left,
    /// `A(σ)` for lazy `σ`: `_σA` with `Δ` as both coactions.
    Bi,
}

fn row_sparse(m: &Matrix, i: usize) -> Vec<(usize, Scalar)> {
    m.row(i).iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

fn clean<K: Ord>(map: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn add_to<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    match map.get_mut(&k) {
        Some(v) => *v += &c,
        None => {
            map.insert(k, c);
        }
    }
}

/// Matrix of `Δ` viewed as a coaction (row `i` = `Δ(a_i)`).
fn comult_matrix(h: &HopfAlgebra) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(h.field(), n, n * n);
    for i in 0..n {
        for (j, k, c) in h.comult_basis(i) {
            m.set(i, j * n + k, c.clone());
        }
    }
    m
}

impl ComoduleAlgebra {
    /// Build and verify the comodule-algebra axioms for the given coactions.
    pub fn new(alg: Algebra, hopf: HopfAlgebra, right: Option<Matrix>, left: Option<Matrix>) -> Result<ComoduleAlgebra> {
        let z = ComoduleAlgebra::new_unchecked(alg, hopf, right, left)?;
        for (name, v) in z.axiom_report() {
            v.into_result(&name)?;
        }
        Ok(z)
    }

    /// Shape and field validation only.
    pub fn new_unchecked(alg: Algebra, hopf: HopfAlgebra, right: Option<Matrix>, left: Option<Matrix>) -> Result<ComoduleAlgebra> {
        if alg.field() != hopf.field() {
            return Err(HopfError::FieldMismatch("comodule algebra and Hopf algebra".into()));
        }
        let (nz, na) = (alg.dim(), hopf.dim());
        for m in right.iter().chain(left.iter()) {
            if m.rows() != nz || m.cols() != nz * na {
                return Err(HopfError::ShapeMismatch("coaction matrix".into()));
            }
            if m.field() != alg.field() {
                return Err(HopfError::FieldMismatch("coaction entries".into()));
            }
        }
        Ok(ComoduleAlgebra { alg, hopf, right, left })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }
    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
    pub fn right(&self) -> Option<&Matrix> {
        self.right.as_ref()
    }
    pub fn left(&self) -> Option<&Matrix> {
        self.left.as_ref()
    }

    /// Replace the left coaction and re-verify.
    pub fn with_left(&self, left: Matrix) -> Result<ComoduleAlgebra> {
        ComoduleAlgebra::new(self.alg.clone(), self.hopf.clone(), self.right.clone(), Some(left))
    }

    /// Drop the left coaction.
    pub fn right_only(&self) -> ComoduleAlgebra {
        ComoduleAlgebra { left: None, ..self.clone() }
    }

    /// Every comodule-algebra axiom for the coactions present.
    pub fn axiom_report(&self) -> Vec<(String, Verdict)> {
        let mut out = Vec::new();
        if let Some(r) = &self.right {
            out.push(("right coaction counit".into(), self.check_counit(r, true)));
            out.push(("right coaction coassociativity".into(), self.check_coassoc(r, true)));
            out.push(("right coaction is an algebra map".into(), self.check_alg_map(r, true)));
        }
        if let Some(l) = &self.left {
            out.push(("left coaction counit".into(), self.check_counit(l, false)));
            out.push(("left coaction coassociativity".into(), self.check_coassoc(l, false)));
            out.push(("left coaction is an algebra map".into(), self.check_alg_map(l, false)));
        }
        if let (Some(r), Some(l)) = (&self.right, &self.left) {
            out.push(("bicomodule compatibility".into(), self.check_bicomodule(r, l)));
        }
        out
    }

    pub fn passes(&self) -> bool {
        self.axiom_report().iter().all(|(_, v)| v.holds())
    }

    /// Split a coaction column into `(z, a)`.
    fn split(&self, col: usize, right: bool) -> (usize, usize) {
        let (nz, na) = (self.dim(), self.hopf.dim());
        if right {
            (col / na, col % na)
        } else {
            (col % nz, col / nz)
        }
    }

    fn check_counit(&self, m: &Matrix, right: bool) -> Verdict {
        let eps = self.hopf.counit();
        Verdict::first_failure(tuples(self.dim(), 1), |t| {
            let mut v = self.alg.zero();
            for (col, c) in row_sparse(m, t[0]) {
                let (z, a) = self.split(col, right);
                v[z].add_mul(&c, &eps[a]);
            }
            v == self.alg.basis_vec(t[0])
        })
    }

    fn check_coassoc(&self, m: &Matrix, right: bool) -> Verdict {
        Verdict::first_failure(tuples(self.dim(), 1), |t| {
            // right: (ρ⊗id)ρ = (id⊗Δ)ρ as (z, a, a'); left: (id⊗β)β = (Δ⊗id)β as (a, a', z)
            let mut l = BTreeMap::new();
            let mut r = BTreeMap::new();
            for (col, c) in row_sparse(m, t[0]) {
                let (z, a) = self.split(col, right);
                for (col2, d) in row_sparse(m, z) {
                    let (z2, a2) = self.split(col2, right);
                    let key = if right { (z2, a2, a) } else { (a, a2, z2) };
                    add_to(&mut l, key, &c * &d);
                }
                for (a1, a2, d) in self.hopf.comult_basis(a) {
                    let key = if right { (z, *a1, *a2) } else { (*a1, *a2, z) };
                    add_to(&mut r, key, &c * d);
                }
            }
            clean(l) == clean(r)
        })
    }

    fn coaction_vec(&self, m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
        m.vec_mul(v).expect("shape checked")
    }

    fn check_alg_map(&self, m: &Matrix, right: bool) -> Verdict {
        let (zalg, halg) = (&self.alg, self.hopf.algebra());
        let tmul = |u: &[Scalar], v: &[Scalar]| {
            if right {
                tensor_mul(zalg, halg, u, v)
            } else {
                tensor_mul(halg, zalg, u, v)
            }
        };
        let nz = self.dim();
        let rows: Vec<Vec<Scalar>> = (0..nz).map(|i| m.row(i).to_vec()).collect();
        let one_one = {
            let (a, b) = if right { (zalg.unit(), halg.unit()) } else { (halg.unit(), zalg.unit()) };
            let mut v = Vec::with_capacity(a.len() * b.len());
            for x in a {
                for y in b {
                    v.push(x * y);
                }
            }
            v
        };
        Verdict::first_failure(std::iter::once(vec![]).chain(tuples(nz, 2)), |t| {
            if t.is_empty() {
                return self.coaction_vec(m, zalg.unit()) == one_one;
            }
            let prod = zalg.mul(&zalg.basis_vec(t[0]), &zalg.basis_vec(t[1]));
            self.coaction_vec(m, &prod) == tmul(&rows[t[0]], &rows[t[1]])
        })
    }

    fn check_bicomodule(&self, r: &Matrix, l: &Matrix) -> Verdict {
        Verdict::first_failure(tuples(self.dim(), 1), |t| {
            // (β⊗id)ρ = (id⊗ρ)β as (a, z, a')
            let mut lhs = BTreeMap::new();
            for (col, c) in row_sparse(r, t[0]) {
                let (z, a2) = self.split(col, true);
                for (col2, d) in row_sparse(l, z) {
                    let (z2, a1) = self.split(col2, false);
                    add_to(&mut lhs, (a1, z2, a2), &c * &d);
                }
            }
            let mut rhs = BTreeMap::new();
            for (col, c) in row_sparse(l, t[0]) {
                let (z, a1) = self.split(col, false);
                for (col2, d) in row_sparse(r, z) {
                    let (z2, a2) = self.split(col2, true);
                    add_to(&mut rhs, (a1, z2, a2), &c * &d);
                }
            }
            clean(lhs) == clean(rhs)
        })
    }
}

/// `σ(a₁,b₁) a₂ b₂` on basis elements.
fn right_twisted_basis(h: &HopfAlgebra, sigma: &BiForm, a: usize, b: usize) -> SparseVec {
    let mut out = Vec::new();
    for (a1, a2, c) in h.comult_basis(a) {
        for (b1, b2, d) in h.comult_basis(b) {
            let s = sigma.at(*a1, *b1);
            if s.is_zero() {
                continue;
            }
            let k = &(c * d) * s;
            out.extend(h.mul_basis(*a2, *b2).iter().map(|(x, e)| (*x, &k * e)));
        }
    }
    out
}

/// `a₁ b₁ σ(a₂,b₂)` on basis elements.
fn left_twisted_basis(h: &HopfAlgebra, sigma: &BiForm, a: usize, b: usize) -> SparseVec {
    let mut out = Vec::new();
    for (a1, a2, c) in h.comult_basis(a) {
        for (b1, b2, d) in h.comult_basis(b) {
            let s = sigma.at(*a2, *b2);
            if s.is_zero() {
                continue;
            }
            let k = &(c * d) * s;
            out.extend(h.mul_basis(*a1, *b1).iter().map(|(x, e)| (*x, &k * e)));
        }
    }
    out
}

fn bilinear_extend(n: usize, u: &[Scalar], v: &[Scalar], field: &crate::scalar::Field, f: impl Fn(usize, usize) -> SparseVec) -> Vec<Scalar> {
    let mut out = zero_vec(field, n);
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (k, c) in f(i, j) {
                out[k].add_mul(&ab, &c);
            }
        }
    }
    out
}

/// `u ·_σ v = σ(u₁,v₁) u₂ v₂`, the product of `_σA`.
pub fn right_twisted_mul(h: &HopfAlgebra, sigma: &BiForm, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    bilinear_extend(h.dim(), u, v, h.field(), |i, j| right_twisted_basis(h, sigma, i, j))
}

/// `u ·_σ v = u₁ v₁ σ(u₂,v₂)`, the product of `A_σ`.
pub fn left_twisted_mul(h: &HopfAlgebra, sigma: &BiForm, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    bilinear_extend(h.dim(), u, v, h.field(), |i, j| left_twisted_basis(h, sigma, i, j))
}

fn require_left_cocycle(sigma: &BiForm, h: &HopfAlgebra) -> Result<()> {
    if let Verdict::FailsAt(w) = check_left_cocycle(sigma, h) {
        return Err(HopfError::NotACocycle(format!("left cocycle identity fails at {w:?}")));
    }
    Ok(())
}

/// The Doi twist `_σA_{σ⁻¹}`: product `σ(a₁,b₁) a₂b₂ σ⁻¹(a₃,b₃)`, same
/// coalgebra, antipode `u ∗ S ∗ u⁻¹` with `u(a) = σ(a₁,S(a₂))`.
pub fn doi_twist(h: &HopfAlgebra, sigma: &BiForm) -> Result<HopfAlgebra> {
    let inv = conv_inverse_bi(h, sigma)?;
    require_left_cocycle(sigma, h)?;
    let n = h.dim();
    let f = h.field().clone();
    let alg = Algebra::from_fn(&f, h.basis().to_vec(), h.unit().to_vec(), |a, b| {
        let mut out = Vec::new();
        for (a1, a2, a3, c) in h.comult2_basis(a) {
            for (b1, b2, b3, d) in h.comult2_basis(b) {
                let s = sigma.at(*a1, *b1);
                let t = inv.at(*a3, *b3);
                if s.is_zero() || t.is_zero() {
                    continue;
                }
                let k = &(&(c * d) * s) * t;
                out.extend(h.mul_basis(*a2, *b2).iter().map(|(x, e)| (*x, &k * e)));
            }
        }
        out
    })?;
    let s = h.antipode();
    let u = LinForm::from_fn(h, |i| {
        let mut acc = h.zero_scalar();
        for (j, k, c) in h.comult_basis(i) {
            acc.add_mul(c, &sigma.eval(&h.basis_vec(*j), s.row(*k)));
        }
        acc
    });
    let uinv = LinForm::from_fn(h, |i| {
        let mut acc = h.zero_scalar();
        for (j, k, c) in h.comult_basis(i) {
            acc.add_mul(c, &inv.eval(s.row(*j), &h.basis_vec(*k)));
        }
        acc
    });
    let antipode = u.convolve(&LinMap::antipode(h), h)?.convolve(&uinv, h)?.0;
    let comult = (0..n).map(|i| h.comult_basis(i).to_vec()).collect();
    HopfAlgebra::new(alg, comult, h.counit().to_vec(), antipode)
}

/// `_σA`, `A_σ` or `A(σ)`.
pub fn galois_object(h: &HopfAlgebra, sigma: &BiForm, side: Side) -> Result<ComoduleAlgebra> {
    conv_inverse_bi(h, sigma)?;
    let f = h.field().clone();
    let delta = comult_matrix(h);
    let (alg, right, left) = match side {
        Side::Right | Side::Bi => {
            require_left_cocycle(sigma, h)?;
            if side == Side::Bi && !is_lazy2(sigma, h) {
                return Err(HopfError::NotLazy("A(σ) needs a lazy cocycle".into()));
            }
            let alg = Algebra::from_fn(&f, h.basis().to_vec(), h.unit().to_vec(), |a, b| right_twisted_basis(h, sigma, a, b))?;
            let left = if side == Side::Bi { Some(transpose_coaction(&delta, h.dim(), h.dim())) } else { None };
            (alg, Some(delta), left)
        }
        Side::Left => {
            if let Verdict::FailsAt(w) = check_right_cocycle(sigma, h) {
                return Err(HopfError::NotACocycle(format!("right cocycle identity fails at {w:?}")));
            }
            let alg = Algebra::from_fn(&f, h.basis().to_vec(), h.unit().to_vec(), |a, b| left_twisted_basis(h, sigma, a, b))?;
            (alg, None, Some(transpose_coaction(&delta, h.dim(), h.dim())))
        }
    };
    ComoduleAlgebra::new(alg, h.clone(), right, left)
}

/// Reindex a map `Z → A ⊗ Z` given as `Z → (first) ⊗ (second)` with the
/// first factor of size `nf` into the left-coaction column layout.
/// For `Δ` both layouts coincide (`a₁ ⊗ a₂` with `a₁ ∈ A`, `a₂ ∈ Z = A`).
fn transpose_coaction(m: &Matrix, _nf: usize, _ns: usize) -> Matrix {
    m.clone()
}

/// The canonical maps `κ_r : z ⊗ w ↦ z w₀ ⊗ w₁` and
/// `κ_l : z ⊗ w ↦ z₋₁ ⊗ z₀ w` are bijective for every coaction present.
pub fn check_galois(z: &ComoduleAlgebra) -> bool {
    let (nz, na) = (z.dim(), z.hopf().dim());
    if nz != na || (z.right().is_none() && z.left().is_none()) {
        return false;
    }
    let f = z.hopf().field().clone();
    let canonical = |m: &Matrix, right: bool| {
        let mut k = Matrix::zeros(&f, nz * nz, nz * na);
        for i in 0..nz {
            for j in 0..nz {
                let src = if right { j } else { i };
                for (col, c) in row_sparse(m, src) {
                    let (zc, a) = z.split(col, right);
                    let prod = if right { z.algebra().mul_basis(i, zc) } else { z.algebra().mul_basis(zc, j) };
                    for (x, d) in prod {
                        let target = if right { x * na + a } else { a * nz + x };
                        k.get_mut(i * nz + j, target).add_mul(&c, d);
                    }
                }
            }
        }
        k.rank() == nz * nz
    };
    z.right().map_or(true, |r| canonical(r, true)) && z.left().map_or(true, |l| canonical(l, false))
}

/// Checks of a linear map `f : Z → W` between comodule algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleMapReport {
    pub unital: bool,
    pub multiplicative: Verdict,
    pub right_colinear: Option<Verdict>,
    pub left_colinear: Option<Verdict>,
    pub bijective: bool,
}

impl ComoduleMapReport {
    pub fn is_morphism(&self) -> bool {
        self.unital
            && self.multiplicative.holds()
            && self.right_colinear.as_ref().map_or(true, Verdict::holds)
            && self.left_colinear.as_ref().map_or(true, Verdict::holds)
    }
    pub fn is_iso(&self) -> bool {
        self.is_morphism() && self.bijective
    }
}

/// `f` is an algebra map respecting whichever coactions both sides carry.
pub fn comodule_map_report(f: &Matrix, z: &ComoduleAlgebra, w: &ComoduleAlgebra) -> Result<ComoduleMapReport> {
    let (nz, nw) = (z.dim(), w.dim());
    if f.rows() != nz || f.cols() != nw {
        return Err(HopfError::ShapeMismatch("comodule map shape".into()));
    }
    if !z.hopf().same_structure(w.hopf()) {
        return Err(HopfError::ShapeMismatch("different coacting Hopf algebras".into()));
    }
    let na = z.hopf().dim();
    let img = |v: &[Scalar]| f.vec_mul(v).expect("shape");
    let unital = img(z.algebra().unit()) == w.algebra().unit();
    let multiplicative = Verdict::first_failure(tuples(nz, 2), |t| {
        let p = z.algebra().mul(&z.algebra().basis_vec(t[0]), &z.algebra().basis_vec(t[1]));
        img(&p) == w.algebra().mul(f.row(t[0]), f.row(t[1]))
    });
    let fld = z.hopf().field().clone();
    let right_colinear = match (z.right(), w.right()) {
        (Some(rz), Some(rw)) => Some(Verdict::first_failure(tuples(nz, 1), |t| {
            let lhs = rw.vec_mul(f.row(t[0])).expect("shape");
            let mut rhs = zero_vec(&fld, nw * na);
            for (col, c) in row_sparse(rz, t[0]) {
                let (zz, a) = (col / na, col % na);
                for (x, d) in f.row(zz).iter().enumerate() {
                    if !d.is_zero() {
                        rhs[x * na + a].add_mul(&c, d);
                    }
                }
            }
            lhs == rhs
        })),
        _ => None,
    };
    let left_colinear = match (z.left(), w.left()) {
        (Some(lz), Some(lw)) => Some(Verdict::first_failure(tuples(nz, 1), |t| {
            let lhs = lw.vec_mul(f.row(t[0])).expect("shape");
            let mut rhs = zero_vec(&fld, na * nw);
            for (col, c) in row_sparse(lz, t[0]) {
                let (a, zz) = (col / nz, col % nz);
                for (x, d) in f.row(zz).iter().enumerate() {
                    if !d.is_zero() {
                        rhs[a * nw + x].add_mul(&c, d);
                    }
                }
            }
            lhs == rhs
        })),
        _ => None,
    };
    let bijective = nz == nw && f.determinant_nonzero();
    Ok(ComoduleMapReport { unital, multiplicative, right_colinear, left_colinear, bijective })
}

fn check_colinear_section(z: &ComoduleAlgebra, psi: &LinMap) -> Result<()> {
    let h = z.hopf();
    let (na, nz) = (h.dim(), z.dim());
    if psi.0.rows() != na || psi.0.cols() != nz {
        return Err(HopfError::ShapeMismatch("ψ must map A to Z".into()));
    }
    let r = z.right().ok_or_else(|| HopfError::NotColinear("Z has no right coaction".into()))?;
    if psi.apply(h.unit()) != z.algebra().unit() {
        return Err(HopfError::NotColinear("ψ(1) ≠ 1".into()));
    }
    for i in 0..na {
        let lhs = r.vec_mul(psi.0.row(i)).expect("shape");
        let mut rhs = zero_vec(h.field(), nz * na);
        for (j, k, c) in h.comult_basis(i) {
            for (x, d) in psi.0.row(*j).iter().enumerate() {
                if !d.is_zero() {
                    rhs[x * na + k].add_mul(c, d);
                }
            }
        }
        if lhs != rhs {
            return Err(HopfError::NotColinear(format!("ψ is not right colinear at basis element {i}")));
        }
    }
    Ok(())
}

/// `σ(a,b) = ε(ψ⁻¹(ψ(a)ψ(b)))` for a colinear bijection `ψ : A → Z` with
/// `ψ(1) = 1`; `ψ : _σA → Z` is verified to be a comodule-algebra iso.
pub fn cocycle_from_cleft(z: &ComoduleAlgebra, psi: &LinMap) -> Result<BiForm> {
    check_colinear_section(z, psi)?;
    let h = z.hopf();
    let inv = psi.inverse()?;
    let zalg = z.algebra();
    let sigma = BiForm::from_fn(h, |a, b| {
        let p = zalg.mul(psi.0.row(a), psi.0.row(b));
        h.apply_counit(&inv.apply(&p))
    });
    require_left_cocycle(&sigma, h)?;
    let twisted = galois_object(h, &sigma, Side::Right)?;
    let rep = comodule_map_report(&psi.0, &twisted, &z.right_only())?;
    if !rep.is_iso() {
        return Err(HopfError::NotGalois("ψ does not identify _σA with Z".into()));
    }
    Ok(sigma)
}

/// `β_ψ = (ψ⁻¹ ⊗ ψ) ∘ ρ : Z → A ⊗ Z`.
pub fn symmetry_beta(z: &ComoduleAlgebra, psi: &LinMap) -> Result<LinMap> {
    check_colinear_section(z, psi)?;
    let inv = psi.inverse()?;
    let r = z.right().expect("checked");
    let (na, nz) = (z.hopf().dim(), z.dim());
    let f = z.hopf().field().clone();
    let mut m = Matrix::zeros(&f, nz, na * nz);
    for i in 0..nz {
        let mut row = zero_vec(&f, na * nz);
        for (col, c) in row_sparse(r, i) {
            let (zj, ak) = (col / na, col % na);
            for (x, d) in inv.0.row(zj).iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let cd = &c * d;
                for (y, e) in psi.0.row(ak).iter().enumerate() {
                    if !e.is_zero() {
                        row[x * nz + y].add_mul(&cd, e);
                    }
                }
            }
        }
        for (x, v) in row.into_iter().enumerate() {
            m.set(i, x, v);
        }
    }
    Ok(LinMap(m))
}

/// `Z` is lazy with symmetry morphism `ψ`: `β_ψ` is an algebra map. When it
/// is, the bicomodule structure is verified as well.
pub fn is_lazy_galois(z: &ComoduleAlgebra, psi: &LinMap) -> Result<bool> {
    Ok(lazy_bicomodule(z, psi)?.is_some())
}

/// `Z` with `β_ψ` as left coaction, if `β_ψ` is an algebra map.
pub fn lazy_bicomodule(z: &ComoduleAlgebra, psi: &LinMap) -> Result<Option<ComoduleAlgebra>> {
    let beta = symmetry_beta(z, psi)?;
    let cand = ComoduleAlgebra::new_unchecked(z.algebra().clone(), z.hopf().clone(), None, Some(beta.0.clone()))?;
    if !cand.check_alg_map(&beta.0, false).holds() {
        return Ok(None);
    }
    Ok(Some(z.with_left(beta.0)?))
}

/// `^αA(σ)`: `A(σ)` with left coaction `(α ⊗ id) ∘ Δ`.
pub fn alpha_twisted_bigalois(h: &HopfAlgebra, alpha: &LinMap, sigma: &BiForm) -> Result<ComoduleAlgebra> {
    if !is_hopf_automorphism(alpha, h) {
        return Err(HopfError::NotAHopfMap("α must be a Hopf automorphism".into()));
    }
    let a = galois_object(h, sigma, Side::Bi)?;
    let n = h.dim();
    let f = h.field().clone();
    let mut left = Matrix::zeros(&f, n, n * n);
    for i in 0..n {
        let mut row = zero_vec(&f, n * n);
        for (j, k, c) in h.comult_basis(i) {
            for (x, d) in alpha.0.row(*j).iter().enumerate() {
                if !d.is_zero() {
                    row[x * n + k].add_mul(c, d);
                }
            }
        }
        for (x, v) in row.into_iter().enumerate() {
            left.set(i, x, v);
        }
    }
    a.with_left(left)
}

/// `Z □_A W` with its inclusion into `Z ⊗ W` (rows are the basis).
#[derive(Clone, Debug)]
pub struct Cotensor {
    pub object: ComoduleAlgebra,
    pub inclusion: Matrix,
}

impl Cotensor {
    /// Coordinates of `v ∈ Z ⊗ W` in the cotensor basis, if it lies there.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.inclusion.transpose().solve(v).filter(|c| self.inclusion.vec_mul(c).ok().as_deref() == Some(v))
    }
}

/// Kernel of `ρ_Z ⊗ id − id ⊗ β_W : Z ⊗ W → Z ⊗ A ⊗ W`, with the induced
/// algebra structure (closure verified) and the outer coactions.
pub fn cotensor(z: &ComoduleAlgebra, w: &ComoduleAlgebra) -> Result<Cotensor> {
    let rz = z.right().ok_or_else(|| HopfError::ShapeMismatch("cotensor needs a right coaction on Z".into()))?;
    let lw = w.left().ok_or_else(|| HopfError::ShapeMismatch("cotensor needs a left coaction on W".into()))?;
    if !z.hopf().same_structure(w.hopf()) {
        return Err(HopfError::ShapeMismatch("different coacting Hopf algebras".into()));
    }
    let h = z.hopf().clone();
    let f = h.field().clone();
    let (nz, nw, na) = (z.dim(), w.dim(), h.dim());
    let mut m = Matrix::zeros(&f, nz * nw, nz * na * nw);
    for i in 0..nz {
        for j in 0..nw {
            let row = i * nw + j;
            for (col, c) in row_sparse(rz, i) {
                let (x, a) = (col / na, col % na);
                *m.get_mut(row, (x * na + a) * nw + j) += &c;
            }
            for (col, c) in row_sparse(lw, j) {
                let (a, y) = (col / nw, col % nw);
                *m.get_mut(row, (i * na + a) * nw + y) -= &c;
            }
        }
    }
    let kernel = m.transpose().kernel();
    if kernel.is_empty() {
        return Err(HopfError::NotGalois("empty cotensor product".into()));
    }
    let inclusion = Matrix::from_rows(&f, kernel)?;
    let dim = inclusion.rows();
    let mut probe = Cotensor {
        object: ComoduleAlgebra::new_unchecked(Algebra::from_fn(&f, vec![String::new(); 1], vec![Scalar::one(&f)], |_, _| vec![(0, Scalar::one(&f))])?, h.clone(), None, None)?,
        inclusion,
    };
    let basis: Vec<Vec<Scalar>> = (0..dim).map(|i| probe.inclusion.row(i).to_vec()).collect();
    let coords = |v: &[Scalar], what: &str| probe.coordinates(v).ok_or_else(|| HopfError::NotGalois(format!("cotensor not closed under {what}")));
    let mut unit_zw = Vec::with_capacity(nz * nw);
    for x in z.algebra().unit() {
        for y in w.algebra().unit() {
            unit_zw.push(x * y);
        }
    }
    let unit = coords(&unit_zw, "the unit")?;
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let p = tensor_mul(z.algebra(), w.algebra(), &basis[a], &basis[b]);
            mult[a][b] = coords(&p, "multiplication")?;
        }
    }
    let names = (0..dim).map(|i| format!("k{}", i + 1)).collect();
    let alg = Algebra::new(&f, names, mult, unit)?;
    // right coaction from W, left coaction from Z
    let right = match w.right() {
        None => None,
        Some(rw) => {
            let mut out = Matrix::zeros(&f, dim, dim * na);
            for (a, v) in basis.iter().enumerate() {
                // (id ⊗ ρ_W) v, sliced by the A-index
                let mut slices = vec![zero_vec(&f, nz * nw); na];
                for (idx, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (x, y) = (idx / nw, idx % nw);
                    for (col, d) in row_sparse(rw, y) {
                        let (y2, s) = (col / na, col % na);
                        slices[s][x * nw + y2].add_mul(c, &d);
                    }
                }
                for (s, sl) in slices.iter().enumerate() {
                    let cs = coords(sl, "the right coaction")?;
                    for (k, c) in cs.into_iter().enumerate() {
                        out.set(a, k * na + s, c);
                    }
                }
            }
            Some(out)
        }
    };
    let left = match z.left() {
        None => None,
        Some(lz) => {
            let mut out = Matrix::zeros(&f, dim, na * dim);
            for (a, v) in basis.iter().enumerate() {
                let mut slices = vec![zero_vec(&f, nz * nw); na];
                for (idx, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (x, y) = (idx / nw, idx % nw);
                    for (col, d) in row_sparse(lz, x) {
                        let (s, x2) = (col / nz, col % nz);
                        slices[s][x2 * nw + y].add_mul(c, &d);
                    }
                }
                for (s, sl) in slices.iter().enumerate() {
                    let cs = coords(sl, "the left coaction")?;
                    for (k, c) in cs.into_iter().enumerate() {
                        out.set(a, s * dim + k, c);
                    }
                }
            }
            Some(out)
        }
    };
    probe.object = ComoduleAlgebra::new(alg, h, right, left)?;
    Ok(probe)
}

/// `Δ : A → Z □_A W` written in the cotensor basis, for `Z = W = A` as
/// vector spaces (e.g. `A(σ) □ A(ω)`).
pub fn delta_into_cotensor(h: &HopfAlgebra, c: &Cotensor) -> Result<LinMap> {
    let n = h.dim();
    let dim = c.object.dim();
    let mut m = Matrix::zeros(h.field(), n, dim);
    for i in 0..n {
        let d = h.comult(&h.basis_vec(i));
        let co = c.coordinates(&d).ok_or_else(|| HopfError::NotGalois("Δ(a) outside the cotensor product".into()))?;
        for (k, v) in co.into_iter().enumerate() {
            m.set(i, k, v);
        }
    }
    Ok(LinMap(m))
}

/// The generalized antipode `φ_σ(a) = σ(a₁, S(a₂)) S(a₃)`.
pub fn gen_antipode(h: &HopfAlgebra, sigma: &BiForm) -> Result<LinMap> {
    require_left_cocycle(sigma, h)?;
    let n = h.dim();
    let s = h.antipode();
    let mut m = Matrix::zeros(h.field(), n, n);
    for i in 0..n {
        let mut row = h.zero();
        for (a1, a2, a3, c) in h.comult2_basis(i) {
            let v = sigma.eval(&h.basis_vec(*a1), s.row(*a2));
            if v.is_zero() {
                continue;
            }
            axpy(&mut row, &(c * &v), s.row(*a3));
        }
        for (x, v) in row.into_iter().enumerate() {
            m.set(i, x, v);
        }
    }
    Ok(LinMap(m))
}

/// Verification of the generalized antipode identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenAntipodeReport {
    /// `φ(a ·_σ b) = φ(b) · φ(a)` in `A_{σ⁻¹}`.
    pub anti_multiplicative: Verdict,
    /// `φ(a₁) · a₂ = ε(a) 1` in `A_{σ⁻¹}`.
    pub left_inverse: Verdict,
    /// `a₁ · φ(a₂) = ε(a) 1` in `A_{σ⁻¹}`.
    pub right_inverse: Verdict,
}

impl GenAntipodeReport {
    pub fn passes(&self) -> bool {
        self.anti_multiplicative.holds() && self.left_inverse.holds() && self.right_inverse.holds()
    }
}

pub fn check_gen_antipode(h: &HopfAlgebra, sigma: &BiForm, phi: &LinMap) -> Result<GenAntipodeReport> {
    let inv = conv_inverse_bi(h, sigma)?;
    let n = h.dim();
    let anti_multiplicative = Verdict::first_failure(tuples(n, 2), |t| {
        let ab = right_twisted_mul(h, sigma, &h.basis_vec(t[0]), &h.basis_vec(t[1]));
        phi.apply(&ab) == left_twisted_mul(h, &inv, phi.0.row(t[1]), phi.0.row(t[0]))
    });
    let inverse = |left: bool| {
        Verdict::first_failure(tuples(n, 1), |t| {
            let mut acc = h.zero();
            for (a1, a2, c) in h.comult_basis(t[0]) {
                let p = if left {
                    left_twisted_mul(h, &inv, phi.0.row(*a1), &h.basis_vec(*a2))
                } else {
                    left_twisted_mul(h, &inv, &h.basis_vec(*a1), phi.0.row(*a2))
                };
                axpy(&mut acc, c, &p);
            }
            let mut expect = h.zero();
            axpy(&mut expect, &h.counit()[t[0]], h.unit());
            acc == expect
        })
    };
    Ok(GenAntipodeReport { anti_multiplicative, left_inverse: inverse(true), right_inverse: inverse(false) })
}

/// A universal r-form together with its convolution inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RForm {
    pub r: BiForm,
    pub inverse: BiForm,
}

/// The coquasitriangularity axioms, each with its first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RFormReport {
    pub invertible: bool,
    /// `r(ab, c) = r(a, c₁) r(b, c₂)`
    pub left_multiplicative: Verdict,
    /// `r(a, bc) = r(a₁, c) r(a₂, b)`
    pub right_multiplicative: Verdict,
    /// `b₁a₁ r(a₂, b₂) = r(a₁, b₁) a₂b₂`
    pub commutation: Verdict,
}

impl RFormReport {
    pub fn passes(&self) -> bool {
        self.invertible && self.left_multiplicative.holds() && self.right_multiplicative.holds() && self.commutation.holds()
    }
}

fn form_on_vec_left(r: &BiForm, u: &[Scalar], b: usize) -> Scalar {
    let mut s = Scalar::zero(&u[0].field());
    for (i, c) in u.iter().enumerate() {
        if !c.is_zero() {
            s.add_mul(c, r.at(i, b));
        }
    }
    s
}

fn form_on_vec_right(r: &BiForm, a: usize, v: &[Scalar]) -> Scalar {
    let mut s = Scalar::zero(&v[0].field());
    for (j, c) in v.iter().enumerate() {
        if !c.is_zero() {
            s.add_mul(c, r.at(a, j));
        }
    }
    s
}

pub fn r_form_report(r: &BiForm, h: &HopfAlgebra) -> RFormReport {
    let n = h.dim();
    let invertible = conv_inverse_bi(h, r).is_ok();
    let left_multiplicative = Verdict::first_failure(tuples(n, 3), |t| {
        let ab = h.mul(&h.basis_vec(t[0]), &h.basis_vec(t[1]));
        let lhs = form_on_vec_left(r, &ab, t[2]);
        let mut rhs = h.zero_scalar();
        for (c1, c2, c) in h.comult_basis(t[2]) {
            rhs.add_mul(c, &(r.at(t[0], *c1) * r.at(t[1], *c2)));
        }
        lhs == rhs
    });
    let right_multiplicative = Verdict::first_failure(tuples(n, 3), |t| {
        let bc = h.mul(&h.basis_vec(t[1]), &h.basis_vec(t[2]));
        let lhs = form_on_vec_right(r, t[0], &bc);
        let mut rhs = h.zero_scalar();
        for (a1, a2, c) in h.comult_basis(t[0]) {
            rhs.add_mul(c, &(r.at(*a1, t[2]) * r.at(*a2, t[1])));
        }
        lhs == rhs
    });
    let commutation = Verdict::first_failure(tuples(n, 2), |t| {
        let mut lhs = h.zero();
        let mut rhs = h.zero();
        for (a1, a2, c) in h.comult_basis(t[0]) {
            for (b1, b2, d) in h.comult_basis(t[1]) {
                let cd = c * d;
                let x = r.at(*a2, *b2);
                if !x.is_zero() {
                    axpy(&mut lhs, &(&cd * x), &h.mul(&h.basis_vec(*b1), &h.basis_vec(*a1)));
                }
                let y = r.at(*a1, *b1);
                if !y.is_zero() {
                    axpy(&mut rhs, &(&cd * y), &h.mul(&h.basis_vec(*a2), &h.basis_vec(*b2)));
                }
            }
        }
        lhs == rhs
    });
    RFormReport { invertible, left_multiplicative, right_multiplicative, commutation }
}

pub fn is_r_form(r: &BiForm, h: &HopfAlgebra) -> bool {
    r_form_report(r, h).passes()
}

impl RForm {
    pub fn new(r: BiForm, h: &HopfAlgebra) -> Result<RForm> {
        let rep = r_form_report(&r, h);
        if !rep.passes() {
            return Err(HopfError::NotAnRForm(format!("{rep:?}")));
        }
        let inverse = conv_inverse_bi(h, &r)?;
        Ok(RForm { r, inverse })
    }
}

/// `r_σ = (σ∘τ) ∗ r ∗ σ⁻¹` for a lazy cocycle `σ`.
pub fn twist_r_form(r: &RForm, sigma: &BiForm, h: &HopfAlgebra) -> Result<RForm> {
    if !is_lazy2(sigma, h) {
        return Err(HopfError::NotLazy("twisting an r-form needs a lazy cocycle".into()));
    }
    require_left_cocycle(sigma, h)?;
    let inv = conv_inverse_bi(h, sigma)?;
    let out = sigma.flip().convolve(&r.r, h)?.convolve(&inv, h)?;
    RForm::new(out, h)
}

/// `(r∘τ) ∗ s`, a lazy 2-cocycle for r-forms `r`, `s`.
pub fn rtau_s(r: &RForm, s: &RForm, h: &HopfAlgebra) -> Result<BiForm> {
    r.r.flip().convolve(&s.r, h)
}

/// Extend values on generator pairs to a bilinear form using
/// `r(ab, c) = r(a, c₁) r(b, c₂)` and `r(a, bc) = r(a₁, c) r(a₂, b)`.
/// Requires generator data; the result is checked separately.
pub fn extend_r_form(h: &HopfAlgebra, gen_values: &Matrix) -> Result<BiForm> {
    let gens = h.generators().ok_or(HopfError::NoGeneratorData)?;
    let ng = gens.generators.len();
    if gen_values.rows() != ng || gen_values.cols() != ng {
        return Err(HopfError::ShapeMismatch("one value per pair of generators".into()));
    }
    let n = h.dim();
    let gen_pos: HashMap<usize, usize> = gens.generators.iter().enumerate().map(|(k, (g, _))| (*g, k)).collect();
    let tail_vec = |w: &[usize]| {
        w.iter().fold(h.unit().to_vec(), |acc, &k| h.mul(&acc, &h.basis_vec(gens.generators[k].0)))
    };
    let unit = h.unit_index().ok_or_else(|| HopfError::InvalidDatum("unit is not a basis element".into()))?;
    let mut memo: HashMap<(usize, usize), Scalar> = HashMap::new();
    fn go(
        a: usize,
        b: usize,
        h: &HopfAlgebra,
        unit: usize,
        words: &[Vec<usize>],
        gen_pos: &HashMap<usize, usize>,
        gen_values: &Matrix,
        gens: &[(usize, crate::hopf::GeneratorKind)],
        tail_vec: &dyn Fn(&[usize]) -> Vec<Scalar>,
        memo: &mut HashMap<(usize, usize), Scalar>,
    ) -> Scalar {
        if let Some(v) = memo.get(&(a, b)) {
            return v.clone();
        }
        let v = if a == unit {
            h.counit()[b].clone()
        } else if b == unit {
            h.counit()[a].clone()
        } else if words[a].len() >= 2 {
            let g = gens[words[a][0]].0;
            let rest = tail_vec(&words[a][1..]);
            let mut s = h.zero_scalar();
            for (b1, b2, c) in h.comult_basis(b) {
                let x = go(g, *b1, h, unit, words, gen_pos, gen_values, gens, tail_vec, memo);
                if x.is_zero() {
                    continue;
                }
                let mut y = h.zero_scalar();
                for (i, ci) in rest.iter().enumerate() {
                    if !ci.is_zero() {
                        y.add_mul(ci, &go(i, *b2, h, unit, words, gen_pos, gen_values, gens, tail_vec, memo));
                    }
                }
                s.add_mul(c, &(&x * &y));
            }
            s
        } else if words[b].len() >= 2 {
            let g = gens[words[b][0]].0;
            let rest = tail_vec(&words[b][1..]);
            let mut s = h.zero_scalar();
            for (a1, a2, c) in h.comult_basis(a) {
                let y = go(*a2, g, h, unit, words, gen_pos, gen_values, gens, tail_vec, memo);
                if y.is_zero() {
                    continue;
                }
                let mut x = h.zero_scalar();
                for (i, ci) in rest.iter().enumerate() {
                    if !ci.is_zero() {
                        x.add_mul(ci, &go(*a1, i, h, unit, words, gen_pos, gen_values, gens, tail_vec, memo));
                    }
                }
                s.add_mul(c, &(&x * &y));
            }
            s
        } else {
            gen_values.get(gen_pos[&a], gen_pos[&b]).clone()
        };
        memo.insert((a, b), v.clone());
        v
    }
    let mut m = Matrix::zeros(h.field(), n, n);
    for a in 0..n {
        for b in 0..n {
            let v = go(a, b, h, unit, &gens.words, &gen_pos, gen_values, &gens.generators, &tail_vec, &mut memo);
            m.set(a, b, v);
        }
    }
    Ok(BiForm(m))
}

/// Is `σ` a lazy left 2-cocycle (normalization and invertibility included)?
pub fn is_lazy_cocycle(sigma: &BiForm, h: &HopfAlgebra) -> bool {
    crate::lazy::is_reg2(sigma, h) && is_lazy2(sigma, h) && is_left_cocycle(sigma, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{group_algebra, sigma_t, sweedler, FiniteGroup};
    use crate::forms::frac;
    use crate::lazy::coboundary;
    use crate::scalar::Field;

    #[test]
    fn bi_object_needs_laziness() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let gamma = LinForm(vec![frac(&f, 1, 1), frac(&f, 1, 1), frac(&f, 1, 1), Scalar::zero(&f)]);
        let s = coboundary(&gamma, &h).unwrap();
        assert!(galois_object(&h, &s, Side::Right).is_ok());
        assert!(matches!(galois_object(&h, &s, Side::Bi), Err(HopfError::NotLazy(_))));
    }

    #[test]
    fn left_and_right_objects_agree_for_lazy() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let s = sigma_t(&h, &frac(&f, 5, 3)).unwrap();
        let r = galois_object(&h, &s, Side::Right).unwrap();
        let l = galois_object(&h, &s, Side::Left).unwrap();
        assert_eq!(r.algebra().dense_mult(), l.algebra().dense_mult());
        assert!(check_galois(&l));
    }

    #[test]
    fn non_colinear_section_rejected() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let z = galois_object(&h, &sigma_t(&h, &frac(&f, 1, 1)).unwrap(), Side::Right).unwrap();
        let swap = Matrix::from_fn(&f, 4, 4, |i, j| {
            let k = match i { 2 => 3, 3 => 2, x => x };
            if j == k { Scalar::one(&f) } else { Scalar::zero(&f) }
        });
        assert!(matches!(cocycle_from_cleft(&z, &LinMap(swap)), Err(HopfError::NotColinear(_))));
    }

    #[test]
    fn sign_bicharacter_is_r_form() {
        let f = Field::Rational;
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        let sign = BiForm::from_fn(&k, |i, j| Scalar::from_i64(&f, if i == 1 && j == 1 { -1 } else { 1 }));
        assert!(is_r_form(&sign, &k));
        let bad = BiForm::from_fn(&k, |i, j| Scalar::from_i64(&f, if i == 1 && j == 1 { 2 } else { 1 }));
        assert!(!is_r_form(&bad, &k));
        // ε⊗ε fails commutation on the non-commutative H₄
        let h = sweedler(&f).unwrap();
        assert!(matches!(RForm::new(BiForm::counit(&h), &h), Err(HopfError::NotAnRForm(_))));
    }
}
