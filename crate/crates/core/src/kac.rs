//! Central pairings on a matched pair `(B, A)` and the maps relating them
//! to lazy cohomology of `B ⋈ A`.
//!
//! A pairing `β : B ⊗ A → k` is stored as a `dim B × dim A` matrix.
//! Forms on `B ⋈ A` use the B-major index `i_B · dim A + i_A`.

use crate::error::{HopfError, Result};
use crate::families::MatchedPair;
use crate::forms::{conv_inverse_lin, BiForm, Convolve, LinForm, LinMap};
use crate::hopf::{dual_hopf, tensor_hopf, tuples, HopfAlgebra, Verdict};
use crate::lazy::{coboundary, hopf_morphism_report, is_lazy1, is_lazy2, is_left_cocycle, is_reg2};
use crate::linalg::{axpy, Matrix};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct CentralPairing {
    beta: Matrix,
    mp: MatchedPair,
}

impl CentralPairing {
    pub fn new(beta: Matrix, mp: &MatchedPair) -> Result<CentralPairing> {
        let report = pairing_report(&beta, mp)?;
        if !report.passes() {
            return Err(HopfError::AxiomFailure {
                axiom: format!("central pairing: {}", report.first_failure().unwrap_or("invertibility")),
                witness: report.witness().to_vec(),
            });
        }
        Ok(CentralPairing { beta, mp: mp.clone() })
    }

    /// `ε_B ⊗ ε_A`
    pub fn trivial(mp: &MatchedPair) -> CentralPairing {
        CentralPairing { beta: counit_pairing(mp), mp: mp.clone() }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.beta
    }

    pub fn matched_pair(&self) -> &MatchedPair {
        &self.mp
    }

    pub fn is_trivial(&self) -> bool {
        self.beta == counit_pairing(&self.mp)
    }
}

fn counit_pairing(mp: &MatchedPair) -> Matrix {
    Matrix::from_fn(mp.b.field(), mp.b.dim(), mp.a.dim(), |i, j| &mp.b.counit()[i] * &mp.a.counit()[j])
}

pub(crate) fn pair(beta: &Matrix, u: &[Scalar], v: &[Scalar]) -> Scalar {
    let mut s = Scalar::zero(beta.field());
    for (i, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            s.add_mul(&(x * y), beta.get(i, j));
        }
    }
    s
}

/// The conditions on a candidate pairing, each with its first failing tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    pub invertible: bool,
    /// `β(bb′,a) = β(b₁,a₁) β(b′,a₂↼b₂)`, tuples `(b, b′, a)`
    pub multiplicative_b: Verdict,
    /// `β(b,aa′) = β(b₁,a′₁) β(a′₂⇀b₂,a)`, tuples `(b, a, a′)`
    pub multiplicative_a: Verdict,
    /// `β(b₂,a₂) a₁↼b₁ = β(b₁,a₁) a₂↼b₂`, tuples `(b, a)`
    pub central_right: Verdict,
    /// `β(b₁,a₁) a₂⇀b₂ = β(b₂,a₂) a₁⇀b₁`, tuples `(b, a)`
    pub central_left: Verdict,
    /// `β(1,a) = ε(a)`
    pub unital_b: Verdict,
    /// `β(b,1) = ε(b)`
    pub unital_a: Verdict,
}

impl PairingReport {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 6] {
        [
            ("multiplicative in B", &self.multiplicative_b),
            ("multiplicative in A", &self.multiplicative_a),
            ("central for ↼", &self.central_right),
            ("central for ⇀", &self.central_left),
            ("unital in B", &self.unital_b),
            ("unital in A", &self.unital_a),
        ]
    }

    pub fn passes(&self) -> bool {
        self.invertible && self.verdicts().iter().all(|(_, v)| v.holds())
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.verdicts().iter().find(|(_, v)| !v.holds()).map(|(n, _)| *n)
    }

    pub fn witness(&self) -> &[usize] {
        self.verdicts().iter().find_map(|(_, v)| v.witness()).unwrap_or(&[])
    }
}

/// `B ⊗ A` as a coalgebra, for convolution of pairings.
fn pairing_coalgebra(mp: &MatchedPair) -> Result<HopfAlgebra> {
    tensor_hopf(&mp.b, &mp.a)
}

fn as_linform(beta: &Matrix) -> LinForm {
    LinForm(beta.entries().to_vec())
}

/// Convolution inverse of a pairing on the coalgebra `B ⊗ A`.
pub fn pairing_inverse(beta: &Matrix, mp: &MatchedPair) -> Result<Matrix> {
    let inv = conv_inverse_lin(&pairing_coalgebra(mp)?, &as_linform(beta))?;
    Ok(Matrix::from_fn(beta.field(), mp.b.dim(), mp.a.dim(), |i, j| inv.0[i * mp.a.dim() + j].clone()))
}

pub fn pairing_report(beta: &Matrix, mp: &MatchedPair) -> Result<PairingReport> {
    let (a, b) = (&mp.a, &mp.b);
    let (na, nb) = (a.dim(), b.dim());
    if beta.rows() != nb || beta.cols() != na {
        return Err(HopfError::ShapeMismatch("pairing matrix".into()));
    }
    if beta.field() != a.field() {
        return Err(HopfError::FieldMismatch("pairing".into()));
    }
    let invertible = pairing_inverse(beta, mp).is_ok();
    let multiplicative_b = Verdict::first_failure(
        tuples(nb, 2).flat_map(|t| (0..na).map(move |x| vec![t[0], t[1], x])),
        |t| multiplicative_b_at(beta, mp, t[0], t[1], t[2]),
    );
    let multiplicative_a = Verdict::first_failure(
        (0..nb).flat_map(|x| tuples(na, 2).map(move |t| vec![x, t[0], t[1]])),
        |t| multiplicative_a_at(beta, mp, t[0], t[1], t[2]),
    );
    let central_right = Verdict::first_failure(tuples2(nb, na), |t| {
        let (l, r) = central_sides(beta, mp, t[0], t[1], false);
        l == r
    });
    let central_left = Verdict::first_failure(tuples2(nb, na), |t| {
        let (l, r) = central_sides(beta, mp, t[0], t[1], true);
        l == r
    });
    let unital_b = Verdict::first_failure(tuples(na, 1), |t| pair(beta, b.unit(), &a.basis_vec(t[0])) == a.counit()[t[0]]);
    let unital_a = Verdict::first_failure(tuples(nb, 1), |t| pair(beta, &b.basis_vec(t[0]), a.unit()) == b.counit()[t[0]]);
    Ok(PairingReport { invertible, multiplicative_b, multiplicative_a, central_right, central_left, unital_b, unital_a })
}

/// `β(bb′,a) = β(b₁,a₁) β(b′,a₂↼b₂)` at basis `(b, b′, a)`.
pub(crate) fn multiplicative_b_at(beta: &Matrix, mp: &MatchedPair, bi: usize, bj: usize, ai: usize) -> bool {
    let (a, b) = (&mp.a, &mp.b);
    let lhs = pair(beta, &b.mul(&b.basis_vec(bi), &b.basis_vec(bj)), &a.basis_vec(ai));
    let mut rhs = Scalar::zero(a.field());
    for (a1, a2, c) in a.comult_basis(ai) {
        for (b1, b2, d) in b.comult_basis(bi) {
            let x = beta.get(*b1, *a1);
            if x.is_zero() {
                continue;
            }
            let y = pair(beta, &b.basis_vec(bj), &mp.right[*a2][*b2]);
            rhs.add_mul(&(c * d), &(x * &y));
        }
    }
    lhs == rhs
}

/// `β(b,aa′) = β(b₁,a′₁) β(a′₂⇀b₂,a)` at basis `(b, a, a′)`.
pub(crate) fn multiplicative_a_at(beta: &Matrix, mp: &MatchedPair, bi: usize, ai: usize, aj: usize) -> bool {
    let (a, b) = (&mp.a, &mp.b);
    let lhs = pair(beta, &b.basis_vec(bi), &a.mul(&a.basis_vec(ai), &a.basis_vec(aj)));
    let mut rhs = Scalar::zero(a.field());
    for (b1, b2, d) in b.comult_basis(bi) {
        for (a1, a2, c) in a.comult_basis(aj) {
            let x = beta.get(*b1, *a1);
            if x.is_zero() {
                continue;
            }
            let y = pair(beta, &mp.left[*a2][*b2], &a.basis_vec(ai));
            rhs.add_mul(&(c * d), &(x * &y));
        }
    }
    lhs == rhs
}

/// Both sides of a centrality condition at basis `(b, a)`: the `⇀` one in
/// `B` when `left`, the `↼` one in `A` otherwise.
pub(crate) fn central_sides(beta: &Matrix, mp: &MatchedPair, bi: usize, ai: usize, left: bool) -> (Vec<Scalar>, Vec<Scalar>) {
    let (a, b) = (&mp.a, &mp.b);
    let n = if left { b.dim() } else { a.dim() };
    let mut l = vec![Scalar::zero(a.field()); n];
    let mut r = vec![Scalar::zero(a.field()); n];
    for (b1, b2, d) in b.comult_basis(bi) {
        for (a1, a2, c) in a.comult_basis(ai) {
            let cd = c * d;
            let (p, q) = (beta.get(*b1, *a1), beta.get(*b2, *a2));
            if left {
                axpy(&mut l, &(&cd * p), &mp.left[*a2][*b2]);
                axpy(&mut r, &(&cd * q), &mp.left[*a1][*b1]);
            } else {
                axpy(&mut l, &(&cd * q), &mp.right[*a1][*b1]);
                axpy(&mut r, &(&cd * p), &mp.right[*a2][*b2]);
            }
        }
    }
    (l, r)
}

pub(crate) fn tuples2(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..m).map(move |j| vec![i, j]))
}

pub fn is_central_pairing(beta: &Matrix, mp: &MatchedPair) -> bool {
    pairing_report(beta, mp).map(|r| r.passes()).unwrap_or(false)
}

fn check_lazy_alg_map(phi: &LinForm, h: &HopfAlgebra, which: &str) -> Result<()> {
    if phi.dim() != h.dim() {
        return Err(HopfError::ShapeMismatch(format!("φ_{which}")));
    }
    if !phi.is_algebra_map(h).holds() || !is_lazy1(phi, h) {
        return Err(HopfError::NotLazyAlgebraMap(format!("φ_{which}")));
    }
    Ok(())
}

/// `Λ(φ_B,φ_A)(b,a) = φ_A⁻¹(a₁) φ_B⁻¹(b₁) φ_B(a₂⇀b₂) φ_A(a₃↼b₃)`
pub fn lambda_map(phi_b: &LinForm, phi_a: &LinForm, mp: &MatchedPair) -> Result<CentralPairing> {
    let (a, b) = (&mp.a, &mp.b);
    check_lazy_alg_map(phi_b, b, "B")?;
    check_lazy_alg_map(phi_a, a, "A")?;
    let ib = conv_inverse_lin(b, phi_b)?;
    let ia = conv_inverse_lin(a, phi_a)?;
    let beta = Matrix::from_fn(a.field(), b.dim(), a.dim(), |bi, ai| {
        let mut s = Scalar::zero(a.field());
        for (a1, a2, a3, c) in a.comult2_basis(ai) {
            let x = ia.at(*a1);
            if x.is_zero() {
                continue;
            }
            for (b1, b2, b3, d) in b.comult2_basis(bi) {
                let y = ib.at(*b1);
                if y.is_zero() {
                    continue;
                }
                let z = phi_b.eval(&mp.left[*a2][*b2]);
                let w = phi_a.eval(&mp.right[*a3][*b3]);
                s.add_mul(&(c * d), &(&(x * y) * &(&z * &w)));
            }
        }
        s
    });
    CentralPairing::new(beta, mp)
}

/// `μ(b⊗a) = φ_B⁻¹(b) φ_A⁻¹(a)`, whose coboundary on `B ⋈ A` is `Σ(Λ(φ_B,φ_A))`.
pub fn lambda_witness(phi_b: &LinForm, phi_a: &LinForm, mp: &MatchedPair) -> Result<LinForm> {
    let ib = conv_inverse_lin(&mp.b, phi_b)?;
    let ia = conv_inverse_lin(&mp.a, phi_a)?;
    Ok(LinForm(ib.tensor(&ia).0.entries().to_vec()))
}

/// `σ_β(b⊗a, b′⊗a′) = β(b′,a) ε(b) ε(a′)` on `B ⋈ A`.
pub fn sigma_from_pairing(p: &CentralPairing) -> BiForm {
    let (a, b) = (&p.mp.a, &p.mp.b);
    let na = a.dim();
    let n = na * b.dim();
    BiForm(Matrix::from_fn(a.field(), n, n, |x, y| {
        let e = &b.counit()[x / na] * &a.counit()[y % na];
        if e.is_zero() {
            e
        } else {
            &e * p.beta.get(y / na, x % na)
        }
    }))
}

fn embed(mp: &MatchedPair, bv: &[Scalar], av: &[Scalar]) -> Vec<Scalar> {
    let na = mp.a.dim();
    let mut out = vec![Scalar::zero(mp.a.field()); na * mp.b.dim()];
    for (i, x) in bv.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in av.iter().enumerate() {
            out[i * na + j] = x * y;
        }
    }
    out
}

/// `σ′ = σ ∗ ∂μ` with `μ(b⊗a) = σ(b⊗1, 1⊗a)`; returns `(σ′, μ)`.
pub fn normalize_class(sigma: &BiForm, d: &HopfAlgebra, mp: &MatchedPair) -> Result<(BiForm, LinForm)> {
    let (a, b) = (&mp.a, &mp.b);
    let na = a.dim();
    if d.dim() != na * b.dim() || sigma.0.rows() != d.dim() {
        return Err(HopfError::ShapeMismatch("form on B ⋈ A".into()));
    }
    let mu = LinForm::from_fn(d, |x| {
        sigma.eval(&embed(mp, &b.basis_vec(x / na), a.unit()), &embed(mp, b.unit(), &a.basis_vec(x % na)))
    });
    let normalized = sigma.convolve(&coboundary(&mu, d)?, d)?;
    Ok((normalized, mu))
}

/// Checks `σ(b⊗1, b′⊗a′) = σ(b⊗1,b′⊗1) ε(a′)` and
/// `σ(b⊗a, 1⊗a′) = σ(1⊗a,1⊗a′) ε(b)`.
pub fn is_normalized_class(sigma: &BiForm, mp: &MatchedPair) -> bool {
    let (a, b) = (&mp.a, &mp.b);
    let (na, nb) = (a.dim(), b.dim());
    let ev = |bv: &[Scalar], av: &[Scalar], bw: &[Scalar], aw: &[Scalar]| sigma.eval(&embed(mp, bv, av), &embed(mp, bw, aw));
    let first = tuples(nb, 2).all(|t| {
        (0..na).all(|x| {
            let l = ev(&b.basis_vec(t[0]), a.unit(), &b.basis_vec(t[1]), &a.basis_vec(x));
            let r = &ev(&b.basis_vec(t[0]), a.unit(), &b.basis_vec(t[1]), a.unit()) * &a.counit()[x];
            l == r
        })
    });
    let second = tuples(na, 2).all(|t| {
        (0..nb).all(|y| {
            let l = ev(&b.basis_vec(y), &a.basis_vec(t[0]), b.unit(), &a.basis_vec(t[1]));
            let r = &ev(b.unit(), &a.basis_vec(t[0]), b.unit(), &a.basis_vec(t[1])) * &b.counit()[y];
            l == r
        })
    });
    first && second
}

/// `(σ(b⊗1, b′⊗1), σ(1⊗a, 1⊗a′))`
pub fn restrict(sigma: &BiForm, mp: &MatchedPair) -> Result<(BiForm, BiForm)> {
    let (a, b) = (&mp.a, &mp.b);
    if sigma.0.rows() != a.dim() * b.dim() {
        return Err(HopfError::ShapeMismatch("form on B ⋈ A".into()));
    }
    let sb = BiForm::from_fn(b, |i, j| sigma.eval(&embed(mp, &b.basis_vec(i), a.unit()), &embed(mp, &b.basis_vec(j), a.unit())));
    let sa = BiForm::from_fn(a, |i, j| sigma.eval(&embed(mp, b.unit(), &a.basis_vec(i)), &embed(mp, b.unit(), &a.basis_vec(j))));
    Ok((sb, sa))
}

/// Whether both actions of the matched pair are trivial.
pub fn has_trivial_actions(mp: &MatchedPair) -> bool {
    let (a, b) = (&mp.a, &mp.b);
    (0..a.dim()).all(|i| {
        (0..b.dim()).all(|j| {
            let l: Vec<Scalar> = b.basis_vec(j).iter().map(|c| c * &a.counit()[i]).collect();
            let r: Vec<Scalar> = a.basis_vec(i).iter().map(|c| c * &b.counit()[j]).collect();
            mp.left[i][j] == l && mp.right[i][j] == r
        })
    })
}

/// `σ(b⊗a, b′⊗a′) = σ₁(b,b′) σ₂(a,a′)` on `B ⊗ A`.
pub fn yamazaki_join(s1: &BiForm, s2: &BiForm, mp: &MatchedPair) -> Result<BiForm> {
    if !has_trivial_actions(mp) {
        return Err(HopfError::NontrivialActions);
    }
    for (s, h) in [(s1, &mp.b), (s2, &mp.a)] {
        if s.0.rows() != h.dim() || s.0.cols() != h.dim() {
            return Err(HopfError::ShapeMismatch("join factor".into()));
        }
        if !is_reg2(s, h) || !is_left_cocycle(s, h) {
            return Err(HopfError::NotACocycle("join factor".into()));
        }
        if !is_lazy2(s, h) {
            return Err(HopfError::NotLazy("join factor".into()));
        }
    }
    let na = mp.a.dim();
    let n = na * mp.b.dim();
    Ok(BiForm(Matrix::from_fn(mp.a.field(), n, n, |x, y| s1.at(x / na, y / na) * s2.at(x % na, y % na))))
}

/// Condition (4.1)-style checks for `f : A → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LMorphismReport {
    pub hopf_morphism: bool,
    /// `f(a) ∈ Z(B)`, tuples `(a, b)`
    pub central_image: Verdict,
    /// `f(a₁)⊗a₂ = f(a₂)⊗a₁`, tuples `(a)`
    pub symmetric: Verdict,
}

impl LMorphismReport {
    pub fn passes(&self) -> bool {
        self.hopf_morphism && self.central_image.holds() && self.symmetric.holds()
    }
}

pub fn l_morphism_report(f: &LinMap, a: &HopfAlgebra, b: &HopfAlgebra) -> Result<LMorphismReport> {
    let m = &f.0;
    if m.rows() != a.dim() || m.cols() != b.dim() {
        return Err(HopfError::ShapeMismatch("map shape".into()));
    }
    let hopf_morphism = hopf_morphism_report(f, a, b)?.passes();
    let central_image = Verdict::first_failure(tuples2(a.dim(), b.dim()), |t| {
        let y = b.basis_vec(t[1]);
        b.mul(m.row(t[0]), &y) == b.mul(&y, m.row(t[0]))
    });
    let (na, nb) = (a.dim(), b.dim());
    let symmetric = Verdict::first_failure(tuples(na, 1), |t| {
        let mut l = vec![Scalar::zero(a.field()); nb * na];
        let mut r = l.clone();
        for (a1, a2, c) in a.comult_basis(t[0]) {
            for (k, v) in m.row(*a1).iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                l[k * na + a2].add_mul(c, v);
            }
            for (k, v) in m.row(*a2).iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                r[k * na + a1].add_mul(c, v);
            }
        }
        l == r
    });
    Ok(LMorphismReport { hopf_morphism, central_image, symmetric })
}

/// Membership in `ℒ(A, B)`; `f` must be a Hopf algebra map.
pub fn is_l_morphism(f: &LinMap, a: &HopfAlgebra, b: &HopfAlgebra) -> Result<bool> {
    let r = l_morphism_report(f, a, b)?;
    if !r.hopf_morphism {
        return Err(HopfError::NotAHopfMap("ℒ-membership".into()));
    }
    Ok(r.passes())
}

/// `f_β : B → A*`, `f_β(b)(a) = β(b,a)`, with its target Hopf algebra.
pub fn pairing_to_hopf_map(beta: &Matrix, mp: &MatchedPair) -> Result<(LinMap, HopfAlgebra)> {
    Ok((LinMap(beta.clone()), dual_hopf(&mp.a)?))
}

/// `a ↦ φ(a) 1_B` for a form `φ` on `A`.
pub fn scalar_map(phi: &LinForm, b: &HopfAlgebra) -> LinMap {
    LinMap(Matrix::from_fn(b.field(), phi.dim(), b.dim(), |i, j| phi.at(i) * &b.unit()[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{double_crossed, double_matched_pair, group_algebra, sigma_t, sweedler, FiniteGroup};
    use crate::forms::frac;
    use crate::lazy::{cocycle_report, is_hopf_morphism, verify_coboundary_witness};
    use crate::scalar::Field;

    fn sign_pairing(mp: &MatchedPair) -> Matrix {
        let f = mp.a.field().clone();
        Matrix::from_fn(&f, 2, 2, |i, j| if i == 1 && j == 1 { Scalar::from_i64(&f, -1) } else { Scalar::one(&f) })
    }

    #[test]
    fn klein_sign_pairing() {
        let f = Field::Rational;
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        let mp = MatchedPair::trivial(&k, &k).unwrap();
        let beta = sign_pairing(&mp);
        let p = CentralPairing::new(beta.clone(), &mp).unwrap();
        let d = double_crossed(&mp).unwrap();
        let s = sigma_from_pairing(&p);
        assert!(cocycle_report(&s, &d).is_lazy_cocycle());
        let (r1, r2) = restrict(&s, &mp).unwrap();
        assert_eq!(r1, BiForm::counit(&k));
        assert_eq!(r2, BiForm::counit(&k));
        let (fb, target) = pairing_to_hopf_map(&beta, &mp).unwrap();
        assert!(is_hopf_morphism(&fb, &k, &target));
        assert!(is_l_morphism(&fb, &k, &target).unwrap());
        let (norm, _) = normalize_class(&s, &d, &mp).unwrap();
        assert_eq!(norm, s);
    }

    #[test]
    fn non_pairing_rejected() {
        let f = Field::Rational;
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        let mp = MatchedPair::trivial(&k, &k).unwrap();
        let mut beta = sign_pairing(&mp);
        beta.set(1, 1, Scalar::from_i64(&f, 2));
        let r = pairing_report(&beta, &mp).unwrap();
        assert!(!r.passes());
        assert!(!r.multiplicative_b.holds());
    }

    #[test]
    fn join_and_restrict_on_sweedler_square() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let mp = MatchedPair::trivial(&h, &h).unwrap();
        let d = double_crossed(&mp).unwrap();
        let s = sigma_t(&h, &frac(&f, 1, 1)).unwrap();
        let t = sigma_t(&h, &frac(&f, -2, 1)).unwrap();
        let j = yamazaki_join(&s, &t, &mp).unwrap();
        assert!(cocycle_report(&j, &d).is_lazy_cocycle());
        assert_eq!(restrict(&j, &mp).unwrap(), (s, t));
        let (norm, _) = normalize_class(&j, &d, &mp).unwrap();
        assert_eq!(norm, j);
    }

    #[test]
    fn normalization_removes_pollution() {
        let f = Field::Rational;
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        let mp = MatchedPair::trivial(&k, &k).unwrap();
        let d = double_crossed(&mp).unwrap();
        let s = sigma_from_pairing(&CentralPairing::new(sign_pairing(&mp), &mp).unwrap());
        let nu = LinForm(vec![frac(&f, 1, 1), frac(&f, 2, 1), frac(&f, 3, 1), frac(&f, 5, 1)]);
        let polluted = s.convolve(&coboundary(&nu, &d).unwrap(), &d).unwrap();
        assert!(!is_normalized_class(&polluted, &mp));
        let (norm, mu) = normalize_class(&polluted, &d, &mp).unwrap();
        assert!(is_normalized_class(&norm, &mp));
        assert!(is_lazy1(&mu, &d));
        assert!(cocycle_report(&norm, &d).is_lazy_cocycle());
    }

    #[test]
    fn sweedler_double_lambda_and_l_condition() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let mp = double_matched_pair(&h).unwrap();
        let eps_b = LinForm::counit(&mp.b);
        let eps_a = LinForm::counit(&mp.a);
        let p = lambda_map(&eps_b, &eps_a, &mp).unwrap();
        assert!(p.is_trivial());
        let alt = LinForm(vec![frac(&f, 1, 1), frac(&f, -1, 1), Scalar::zero(&f), Scalar::zero(&f)]);
        assert!(alt.is_algebra_map(&h).holds());
        assert_eq!(lambda_map(&eps_b, &alt, &mp).unwrap_err(), HopfError::NotLazyAlgebraMap("φ_A".into()));
        let r = l_morphism_report(&scalar_map(&alt, &h), &h, &h).unwrap();
        assert!(r.central_image.holds());
        assert_eq!(r.symmetric.witness(), Some(&[h.idx("x")][..]));
        let triv = l_morphism_report(&scalar_map(&eps_a, &h), &h, &h).unwrap();
        assert!(triv.passes());
    }

    #[test]
    fn sigma_lambda_is_coboundary() {
        let f = Field::Rational;
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        let mp = MatchedPair::trivial(&k, &k).unwrap();
        let d = double_crossed(&mp).unwrap();
        let chi = LinForm(vec![frac(&f, 1, 1), frac(&f, -1, 1)]);
        let p = lambda_map(&chi, &chi, &mp).unwrap();
        assert!(p.is_trivial());
        let s = sigma_from_pairing(&p);
        let w = lambda_witness(&chi, &chi, &mp).unwrap();
        assert!(verify_coboundary_witness(&s, &w, &d));
    }
}
