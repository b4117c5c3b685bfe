//! Laziness, cocycle and coboundary predicates; the `ad` map and coinner
//! classification of Hopf automorphisms.

use crate::error::{HopfError, Result};
use crate::forms::{conv_inverse_bi, conv_inverse_lin, BiForm, Convolve, LinForm, LinMap};
use crate::hopf::{tuples, HopfAlgebra, Verdict};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub fn is_reg1(mu: &LinForm, h: &HopfAlgebra) -> bool {
    mu.dim() == h.dim() && mu.eval(h.unit()).is_one() && conv_inverse_lin(h, mu).is_ok()
}

/// `μ(a₁) a₂ = a₁ μ(a₂)`
pub fn check_lazy1(mu: &LinForm, h: &HopfAlgebra) -> Verdict {
    Verdict::first_failure(tuples(h.dim(), 1), |t| {
        let mut l = h.zero();
        let mut r = h.zero();
        for (j, k, c) in h.comult_basis(t[0]) {
            l[*k].add_mul(c, &mu.0[*j]);
            r[*j].add_mul(c, &mu.0[*k]);
        }
        l == r
    })
}

pub fn is_lazy1(mu: &LinForm, h: &HopfAlgebra) -> bool {
    check_lazy1(mu, h).holds()
}

/// Normalization `σ(a, 1) = ε(a) = σ(1, a)`.
pub fn check_normalized(sigma: &BiForm, h: &HopfAlgebra) -> Verdict {
    let one = h.unit();
    Verdict::first_failure(tuples(h.dim(), 1), |t| {
        let a = h.basis_vec(t[0]);
        let e = &h.counit()[t[0]];
        sigma.eval(&a, one) == *e && sigma.eval(one, &a) == *e
    })
}

pub fn is_reg2(sigma: &BiForm, h: &HopfAlgebra) -> bool {
    check_normalized(sigma, h).holds() && conv_inverse_bi(h, sigma).is_ok()
}

/// `σ(a₁, b₁) a₂b₂ = σ(a₂, b₂) a₁b₁`
pub fn check_lazy2(sigma: &BiForm, h: &HopfAlgebra) -> Verdict {
    Verdict::first_failure(tuples(h.dim(), 2), |t| {
        let mut l = h.zero();
        let mut r = h.zero();
        for (a1, a2, c) in h.comult_basis(t[0]) {
            for (b1, b2, d) in h.comult_basis(t[1]) {
                let cd = c * d;
                let s12 = sigma.at(*a1, *b1);
                if !s12.is_zero() {
                    for (k, m) in h.mul_basis(*a2, *b2) {
                        l[*k].add_mul(&(&cd * s12), m);
                    }
                }
                let s21 = sigma.at(*a2, *b2);
                if !s21.is_zero() {
                    for (k, m) in h.mul_basis(*a1, *b1) {
                        r[*k].add_mul(&(&cd * s21), m);
                    }
                }
            }
        }
        l == r
    })
}

pub fn is_lazy2(sigma: &BiForm, h: &HopfAlgebra) -> bool {
    check_lazy2(sigma, h).holds()
}

/// `T[(x·n + y)·n + c] = σ(b_x b_y, b_c)` and `U[(a·n + x)·n + y] = σ(b_a, b_x b_y)`.
fn product_tables(sigma: &BiForm, h: &HopfAlgebra) -> (Vec<Scalar>, Vec<Scalar>) {
    let n = h.dim();
    let mut t = vec![h.zero_scalar(); n * n * n];
    let mut u = vec![h.zero_scalar(); n * n * n];
    for x in 0..n {
        for y in 0..n {
            for (k, m) in h.mul_basis(x, y) {
                for c in 0..n {
                    t[(x * n + y) * n + c].add_mul(m, sigma.at(*k, c));
                    u[(c * n + x) * n + y].add_mul(m, sigma.at(c, *k));
                }
            }
        }
    }
    (t, u)
}

/// `σ(a₁, b₁) σ(a₂b₂, c) = σ(b₁, c₁) σ(a, b₂c₂)`
pub fn check_left_cocycle(sigma: &BiForm, h: &HopfAlgebra) -> Verdict {
    let n = h.dim();
    let (t, u) = product_tables(sigma, h);
    Verdict::first_failure(tuples(n, 3), |w| {
        let (a, b, c) = (w[0], w[1], w[2]);
        let mut l = h.zero_scalar();
        for (a1, a2, ca) in h.comult_basis(a) {
            for (b1, b2, cb) in h.comult_basis(b) {
                let s = sigma.at(*a1, *b1);
                if !s.is_zero() {
                    l.add_mul(&(ca * cb), &(s * &t[(a2 * n + b2) * n + c]));
                }
            }
        }
        let mut r = h.zero_scalar();
        for (b1, b2, cb) in h.comult_basis(b) {
            for (c1, c2, cc) in h.comult_basis(c) {
                let s = sigma.at(*b1, *c1);
                if !s.is_zero() {
                    r.add_mul(&(cb * cc), &(s * &u[(a * n + b2) * n + c2]));
                }
            }
        }
        l == r
    })
}

pub fn is_left_cocycle(sigma: &BiForm, h: &HopfAlgebra) -> bool {
    check_left_cocycle(sigma, h).holds()
}

/// `σ(a₁b₁, c) σ(a₂, b₂) = σ(a, b₁c₁) σ(b₂, c₂)`
pub fn check_right_cocycle(sigma: &BiForm, h: &HopfAlgebra) -> Verdict {
    let n = h.dim();
    let (t, u) = product_tables(sigma, h);
    Verdict::first_failure(tuples(n, 3), |w| {
        let (a, b, c) = (w[0], w[1], w[2]);
        let mut l = h.zero_scalar();
        for (a1, a2, ca) in h.comult_basis(a) {
            for (b1, b2, cb) in h.comult_basis(b) {
                let s = sigma.at(*a2, *b2);
                if !s.is_zero() {
                    l.add_mul(&(ca * cb), &(s * &t[(a1 * n + b1) * n + c]));
                }
            }
        }
        let mut r = h.zero_scalar();
        for (b1, b2, cb) in h.comult_basis(b) {
            for (c1, c2, cc) in h.comult_basis(c) {
                let s = sigma.at(*b2, *c2);
                if !s.is_zero() {
                    r.add_mul(&(cb * cc), &(s * &u[(a * n + b1) * n + c1]));
                }
            }
        }
        l == r
    })
}

pub fn is_right_cocycle(sigma: &BiForm, h: &HopfAlgebra) -> bool {
    check_right_cocycle(sigma, h).holds()
}

/// `σ(a₁, b₁) a₂ ⊗ b₂ = σ(a₂, b₂) a₁ ⊗ b₁`
pub fn check_absolutely_central(sigma: &BiForm, h: &HopfAlgebra) -> Verdict {
    let n = h.dim();
    Verdict::first_failure(tuples(n, 2), |t| {
        let mut l = vec![h.zero_scalar(); n * n];
        let mut r = vec![h.zero_scalar(); n * n];
        for (a1, a2, c) in h.comult_basis(t[0]) {
            for (b1, b2, d) in h.comult_basis(t[1]) {
                let cd = c * d;
                l[a2 * n + b2].add_mul(&cd, sigma.at(*a1, *b1));
                r[a1 * n + b1].add_mul(&cd, sigma.at(*a2, *b2));
            }
        }
        l == r
    })
}

pub fn is_absolutely_central(sigma: &BiForm, h: &HopfAlgebra) -> bool {
    check_absolutely_central(sigma, h).holds()
}

/// All cocycle-related predicates at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    pub normalized: Verdict,
    pub invertible: bool,
    pub lazy: Verdict,
    pub left_cocycle: Verdict,
    pub right_cocycle: Verdict,
    pub absolutely_central: Verdict,
}

impl CocycleReport {
    pub fn is_reg(&self) -> bool {
        self.normalized.holds() && self.invertible
    }
    /// Member of `Z²_L`.
    pub fn is_lazy_cocycle(&self) -> bool {
        self.is_reg() && self.lazy.holds() && self.left_cocycle.holds()
    }
}

pub fn cocycle_report(sigma: &BiForm, h: &HopfAlgebra) -> CocycleReport {
    CocycleReport {
        normalized: check_normalized(sigma, h),
        invertible: conv_inverse_bi(h, sigma).is_ok(),
        lazy: check_lazy2(sigma, h),
        left_cocycle: check_left_cocycle(sigma, h),
        right_cocycle: check_right_cocycle(sigma, h),
        absolutely_central: check_absolutely_central(sigma, h),
    }
}

/// `∂μ(a, b) = μ(a₁) μ(b₁) μ⁻¹(a₂b₂)`
pub fn coboundary(mu: &LinForm, h: &HopfAlgebra) -> Result<BiForm> {
    let inv = conv_inverse_lin(h, mu)?;
    mu.tensor_square().convolve(&inv.after_mult(h), h)
}

/// `ad(γ)(a) = γ⁻¹(a₁) a₂ γ(a₃)`
pub fn ad_map(gamma: &LinForm, h: &HopfAlgebra) -> Result<LinMap> {
    let inv = conv_inverse_lin(h, gamma)?;
    let left = inv.convolve(&LinMap::identity(h), h)?;
    left.convolve(gamma, h)
}

/// Hopf algebra morphism checks for `f : A → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMorphismReport {
    pub unital: bool,
    pub multiplicative: Verdict,
    pub comultiplicative: Verdict,
    pub counital: Verdict,
}

impl HopfMorphismReport {
    pub fn passes(&self) -> bool {
        self.unital && self.multiplicative.holds() && self.comultiplicative.holds() && self.counital.holds()
    }
}

pub fn hopf_morphism_report(f: &LinMap, a: &HopfAlgebra, b: &HopfAlgebra) -> Result<HopfMorphismReport> {
    let m = &f.0;
    if m.rows() != a.dim() || m.cols() != b.dim() {
        return Err(HopfError::ShapeMismatch("map shape".into()));
    }
    let nb = b.dim();
    let img = |v: &[Scalar]| m.vec_mul(v).expect("shape");
    let unital = img(a.unit()) == b.unit();
    let multiplicative = Verdict::first_failure(tuples(a.dim(), 2), |t| {
        let ab = a.mul(&a.basis_vec(t[0]), &a.basis_vec(t[1]));
        img(&ab) == b.mul(m.row(t[0]), m.row(t[1]))
    });
    let comultiplicative = Verdict::first_failure(tuples(a.dim(), 1), |t| {
        let lhs = b.comult(m.row(t[0]));
        let mut rhs = vec![b.zero_scalar(); nb * nb];
        for (j, k, c) in a.comult_basis(t[0]) {
            for (x, fx) in m.row(*j).iter().enumerate() {
                if fx.is_zero() {
                    continue;
                }
                let cf = c * fx;
                for (y, fy) in m.row(*k).iter().enumerate() {
                    rhs[x * nb + y].add_mul(&cf, fy);
                }
            }
        }
        lhs == rhs
    });
    let counital = Verdict::first_failure(tuples(a.dim(), 1), |t| b.apply_counit(m.row(t[0])) == a.counit()[t[0]]);
    Ok(HopfMorphismReport { unital, multiplicative, comultiplicative, counital })
}

pub fn is_hopf_morphism(f: &LinMap, a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    hopf_morphism_report(f, a, b).map(|r| r.passes()).unwrap_or(false)
}

pub fn is_hopf_automorphism(f: &LinMap, h: &HopfAlgebra) -> bool {
    is_hopf_morphism(f, h, h) && f.0.determinant_nonzero()
}

/// `γ ∈ Reg¹` with `∂γ` lazy; equivalently `ad(γ)` is a Hopf automorphism.
/// Both are computed and must agree.
pub fn is_almost_lazy(gamma: &LinForm, h: &HopfAlgebra) -> bool {
    if !is_reg1(gamma, h) {
        return false;
    }
    let by_coboundary = coboundary(gamma, h).map(|s| is_lazy2(&s, h)).unwrap_or(false);
    let by_ad = ad_map(gamma, h).map(|f| is_hopf_morphism(&f, h, h)).unwrap_or(false);
    assert_eq!(by_coboundary, by_ad, "almost-lazy criteria disagree");
    by_coboundary
}

/// `σ ← α = σ ∘ (α ⊗ α)` for a Hopf automorphism `α`.
pub fn pullback_action(sigma: &BiForm, alpha: &LinMap, h: &HopfAlgebra) -> Result<BiForm> {
    if !is_hopf_automorphism(alpha, h) {
        return Err(HopfError::NotAHopfMap("pullback requires a Hopf automorphism".into()));
    }
    Ok(sigma.pullback(alpha))
}

/// Checks `σ = ∂μ` with `μ` lazy.
pub fn verify_coboundary_witness(sigma: &BiForm, mu: &LinForm, h: &HopfAlgebra) -> bool {
    is_reg1(mu, h) && is_lazy1(mu, h) && coboundary(mu, h).map(|d| d == *sigma).unwrap_or(false)
}

/// A list of algebra maps `A → k`, flagged when certified to be all of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgMapSet {
    pub maps: Vec<LinForm>,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoinnerClass {
    /// `f = (φ∘S) ∗ id ∗ φ` for the given algebra map.
    CoInner { phi: LinForm },
    /// `f = ad(γ)` for the supplied almost-lazy `γ`, and no algebra map works.
    CoInternalOnly { gamma: LinForm },
    /// Neither certificate found.
    Unclassified,
}

/// `(φ∘S) ∗ id ∗ φ`
pub fn coinner_map(phi: &LinForm, h: &HopfAlgebra) -> Result<LinMap> {
    let phis = phi.compose(&LinMap::antipode(h));
    phis.convolve(&LinMap::identity(h), h)?.convolve(phi, h)
}

pub fn classify_cointernal(
    f: &LinMap,
    h: &HopfAlgebra,
    alg_maps: &AlgMapSet,
    gamma: Option<&LinForm>,
) -> Result<CoinnerClass> {
    if !alg_maps.complete {
        return Err(HopfError::IncompleteWitnessSet);
    }
    for phi in &alg_maps.maps {
        if coinner_map(phi, h)? == *f {
            return Ok(CoinnerClass::CoInner { phi: phi.clone() });
        }
    }
    if let Some(g) = gamma {
        if is_almost_lazy(g, h) && ad_map(g, h)? == *f {
            return Ok(CoinnerClass::CoInternalOnly { gamma: g.clone() });
        }
    }
    Ok(CoinnerClass::Unclassified)
}

/// Basis of the space of lazy linear forms (without normalization).
pub fn lazy_form_space(h: &HopfAlgebra) -> Vec<LinForm> {
    let n = h.dim();
    // unknown μ_j; for each basis a and output coordinate k:
    // Σ_{(j,k',c) ∈ Δa, k'=k} c μ_j - Σ_{(j',k'',c), j'=k} c μ_{k''} = 0
    let mut rows = Vec::new();
    for a in 0..n {
        let mut block = vec![vec![h.zero_scalar(); n]; n];
        for (j, k, c) in h.comult_basis(a) {
            block[*k][*j] += c;
            block[*j][*k] -= c;
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    if rows.is_empty() {
        return (0..n).map(|i| LinForm(h.basis_vec(i))).collect();
    }
    let m = Matrix::from_rows(h.field(), rows).expect("consistent rows");
    m.kernel().into_iter().map(LinForm).collect()
}

/// `μ ∗ ν` shorthand used by tests and the suite.
pub fn conv_lin(h: &HopfAlgebra, a: &LinForm, b: &LinForm) -> Result<LinForm> {
    a.convolve(b, h)
}

/// `σ ∗ τ` shorthand used by tests and the suite.
pub fn conv_bi(h: &HopfAlgebra, a: &BiForm, b: &BiForm) -> Result<BiForm> {
    a.convolve(b, h)
}

/// `(μ ⊗ μ) ∗ ∂φ ∗ (μ⁻¹ ∘ m)`
pub fn twisted_coboundary(mu: &LinForm, phi: &LinForm, h: &HopfAlgebra) -> Result<BiForm> {
    let inv = conv_inverse_lin(h, mu)?;
    mu.tensor_square().convolve(&coboundary(phi, h)?, h)?.convolve(&inv.after_mult(h), h)
}
