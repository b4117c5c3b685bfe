//! Crossed systems `(⇀, σ)` of a Hopf algebra `A` over an algebra `R`, and
//! crossed products `R #_σ A`.
//!
//! Crossed product multiplication (standard, from the cleft-extension
//! literature):
//! `(x#a)(y#b) = x (a₁⇀y) σ(a₂,b₁) # a₃b₂`, with basis `x_i # a_j` at
//! index `i · dim A + j` and right coaction `id ⊗ Δ`.

use crate::error::{HopfError, Result};
use crate::forms::BiForm;
use crate::galois::{is_lazy_cocycle, ComoduleAlgebra};
use crate::hopf::{tensor_mul, tuples, Algebra, HopfAlgebra, Verdict};
use crate::linalg::{axpy, solve_sparse_unique, unit_vec, zero_vec, Matrix, SparseEquation};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct CrossedSystem {
    pub r: Algebra,
    pub hopf: HopfAlgebra,
    /// `act[a][x] = a ⇀ x ∈ R`
    pub act: Vec<Vec<Vec<Scalar>>>,
    /// `sigma[a][b] = σ(a, b) ∈ R`
    pub sigma: Vec<Vec<Vec<Scalar>>>,
}

impl CrossedSystem {
    pub fn new(r: Algebra, hopf: HopfAlgebra, act: Vec<Vec<Vec<Scalar>>>, sigma: Vec<Vec<Vec<Scalar>>>) -> Result<CrossedSystem> {
        if r.field() != hopf.field() {
            return Err(HopfError::FieldMismatch("crossed system".into()));
        }
        let (n, m) = (hopf.dim(), r.dim());
        let ok = |t: &Vec<Vec<Vec<Scalar>>>, inner: usize| t.len() == n && t.iter().all(|row| row.len() == inner && row.iter().all(|v| v.len() == m));
        if !ok(&act, m) || !ok(&sigma, n) {
            return Err(HopfError::ShapeMismatch("crossed system tensors".into()));
        }
        Ok(CrossedSystem { r, hopf, act, sigma })
    }

    /// `R = k`, trivial measuring, scalar cocycle.
    pub fn scalar(h: &HopfAlgebra, sigma: &BiForm) -> Result<CrossedSystem> {
        let k = Algebra::from_fn(h.field(), vec!["1".into()], unit_vec(h.field(), 1, 0), |_, _| vec![(0, Scalar::one(h.field()))])?;
        let n = h.dim();
        let act = (0..n).map(|a| vec![vec![h.counit()[a].clone()]]).collect();
        let sig = (0..n).map(|a| (0..n).map(|b| vec![sigma.at(a, b).clone()]).collect()).collect();
        CrossedSystem::new(k, h.clone(), act, sig)
    }

    /// Trivial measuring `a ⇀ x = ε(a) x`.
    pub fn trivial_action(r: &Algebra, h: &HopfAlgebra) -> Vec<Vec<Vec<Scalar>>> {
        (0..h.dim())
            .map(|a| (0..r.dim()).map(|x| r.basis_vec(x).iter().map(|c| c * &h.counit()[a]).collect()).collect())
            .collect()
    }

    /// `σ(a,b) = ε(a) ε(b) 1_R`
    pub fn trivial_sigma(r: &Algebra, h: &HopfAlgebra) -> Vec<Vec<Vec<Scalar>>> {
        let n = h.dim();
        (0..n)
            .map(|a| (0..n).map(|b| r.unit().iter().map(|c| &(c * &h.counit()[a]) * &h.counit()[b]).collect()).collect())
            .collect()
    }

    /// `u ⇀ y` for vectors.
    pub fn act_vec(&self, u: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.r.zero();
        for (i, c) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, d) in y.iter().enumerate().filter(|(_, d)| !d.is_zero()) {
                axpy(&mut out, &(c * d), &self.act[i][j]);
            }
        }
        out
    }

    /// `σ(u, v)` for vectors.
    pub fn sigma_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.r.zero();
        for (i, c) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, d) in v.iter().enumerate().filter(|(_, d)| !d.is_zero()) {
                axpy(&mut out, &(c * d), &self.sigma[i][j]);
            }
        }
        out
    }
}

/// Each crossed-system axiom with its first failing tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedReport {
    pub invertible: bool,
    /// `a⇀(xy) = (a₁⇀x)(a₂⇀y)`, `a⇀1 = ε(a)1`, `1⇀x = x`
    pub measuring: Verdict,
    /// `σ(a,1) = σ(1,a) = ε(a)1`
    pub normalized: Verdict,
    /// `(a₁⇀b₁⇀x)σ(a₂,b₂) = σ(a₁,b₁)(a₂b₂⇀x)`
    pub twisted_module: Verdict,
    /// `σ(a₁,b₁)σ(a₂b₂,c) = (a₁⇀σ(b₁,c₁))σ(a₂,b₂c₂)`
    pub cocycle: Verdict,
}

impl CrossedReport {
    pub fn passes(&self) -> bool {
        self.invertible && self.measuring.holds() && self.normalized.holds() && self.twisted_module.holds() && self.cocycle.holds()
    }
}

/// Convolution inverse of `σ` in `Hom(A⊗A, R)`, by exact linear solving.
pub fn crossed_sigma_inverse(cs: &CrossedSystem) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let h = &cs.hopf;
    let (n, m) = (h.dim(), cs.r.dim());
    let f = h.field();
    // unknown τ(a,b)_k at (a·n + b)·m + k; σ(a₁,b₁)τ(a₂,b₂) = ε(a)ε(b)1
    let mut eqs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut coeffs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m];
            for (a1, a2, c) in h.comult_basis(a) {
                for (b1, b2, d) in h.comult_basis(b) {
                    let s = &cs.sigma[*a1][*b1];
                    let cd = c * d;
                    for k in 0..m {
                        let prod = cs.r.mul(s, &cs.r.basis_vec(k));
                        for (out, v) in prod.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                            coeffs[out].push(((a2 * n + b2) * m + k, &cd * v));
                        }
                    }
                }
            }
            let e = &h.counit()[a] * &h.counit()[b];
            for (out, cf) in coeffs.into_iter().enumerate() {
                eqs.push(SparseEquation { coeffs: cf, rhs: &e * &cs.r.unit()[out] });
            }
        }
    }
    let sol = solve_sparse_unique(f, n * n * m, eqs).map_err(|_| HopfError::NotInvertible("σ has no convolution inverse".into()))?;
    Ok((0..n).map(|a| (0..n).map(|b| sol[(a * n + b) * m..(a * n + b + 1) * m].to_vec()).collect()).collect())
}

pub fn crossed_report(cs: &CrossedSystem) -> CrossedReport {
    let (h, r) = (&cs.hopf, &cs.r);
    let (n, m) = (h.dim(), r.dim());
    let invertible = crossed_sigma_inverse(cs).is_ok();
    let rv = |i: usize| r.basis_vec(i);
    let av = |i: usize| h.basis_vec(i);
    let measuring = Verdict::first_failure(tuples(n, 1).chain(tuples(m, 1).map(|t| vec![n + t[0]])), |t| {
        if t[0] >= n {
            let x = t[0] - n;
            return cs.act_vec(h.unit(), &rv(x)) == rv(x);
        }
        let a = t[0];
        let unit_ok = cs.act_vec(&av(a), r.unit()) == r.unit().iter().map(|c| c * &h.counit()[a]).collect::<Vec<_>>();
        unit_ok
            && (0..m).all(|x| {
                (0..m).all(|y| {
                    let lhs = cs.act_vec(&av(a), &r.mul(&rv(x), &rv(y)));
                    let mut rhs = r.zero();
                    for (a1, a2, c) in h.comult_basis(a) {
                        axpy(&mut rhs, c, &r.mul(&cs.act[*a1][x], &cs.act[*a2][y]));
                    }
                    lhs == rhs
                })
            })
    });
    let normalized = Verdict::first_failure(tuples(n, 1), |t| {
        let e: Vec<Scalar> = r.unit().iter().map(|c| c * &h.counit()[t[0]]).collect();
        cs.sigma_vec(&av(t[0]), h.unit()) == e && cs.sigma_vec(h.unit(), &av(t[0])) == e
    });
    let twisted_module = Verdict::first_failure(tuples(n, 2).flat_map(|t| (0..m).map(move |x| vec![t[0], t[1], x])), |t| {
        let (a, b, x) = (t[0], t[1], t[2]);
        let mut lhs = r.zero();
        let mut rhs = r.zero();
        for (a1, a2, c) in h.comult_basis(a) {
            for (b1, b2, d) in h.comult_basis(b) {
                let cd = c * d;
                let inner = cs.act_vec(&av(*a1), &cs.act[*b1][x]);
                axpy(&mut lhs, &cd, &r.mul(&inner, &cs.sigma[*a2][*b2]));
                let ab = h.mul(&av(*a2), &av(*b2));
                axpy(&mut rhs, &cd, &r.mul(&cs.sigma[*a1][*b1], &cs.act_vec(&ab, &rv(x))));
            }
        }
        lhs == rhs
    });
    let cocycle = Verdict::first_failure(tuples(n, 3), |t| {
        let (a, b, c0) = (t[0], t[1], t[2]);
        let mut lhs = r.zero();
        for (a1, a2, c) in h.comult_basis(a) {
            for (b1, b2, d) in h.comult_basis(b) {
                let ab = h.mul(&av(*a2), &av(*b2));
                axpy(&mut lhs, &(c * d), &r.mul(&cs.sigma[*a1][*b1], &cs.sigma_vec(&ab, &av(c0))));
            }
        }
        let mut rhs = r.zero();
        for (a1, a2, c) in h.comult_basis(a) {
            for (b1, b2, d) in h.comult_basis(b) {
                for (c1, c2, e) in h.comult_basis(c0) {
                    let left = cs.act_vec(&av(*a1), &cs.sigma[*b1][*c1]);
                    let bc = h.mul(&av(*b2), &av(*c2));
                    axpy(&mut rhs, &(&(c * d) * e), &r.mul(&left, &cs.sigma_vec(&av(*a2), &bc)));
                }
            }
        }
        lhs == rhs
    });
    CrossedReport { invertible, measuring, normalized, twisted_module, cocycle }
}

pub fn check_crossed_system(cs: &CrossedSystem) -> bool {
    crossed_report(cs).passes()
}

/// `a₁b₁ ⊗ (a₂⇀y)σ(a₃,b₂) = a₃b₂ ⊗ (a₁⇀y)σ(a₂,b₁)` in `A ⊗ R`.
pub fn check_lazy_crossed(cs: &CrossedSystem) -> Verdict {
    let (h, r) = (&cs.hopf, &cs.r);
    let (n, m) = (h.dim(), r.dim());
    let place = |out: &mut Vec<Scalar>, coef: &Scalar, av: &[Scalar], rv: &[Scalar]| {
        for (i, x) in av.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in rv.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[i * m + j].add_mul(&(coef * x), y);
            }
        }
    };
    Verdict::first_failure(tuples(n, 2).flat_map(|t| (0..m).map(move |y| vec![t[0], t[1], y])), |t| {
        let (a, b, y) = (t[0], t[1], t[2]);
        let mut lhs = zero_vec(h.field(), n * m);
        let mut rhs = lhs.clone();
        for (a1, a2, a3, c) in h.comult2_basis(a) {
            for (b1, b2, d) in h.comult_basis(b) {
                let cd = c * d;
                let l = r.mul(&cs.act[*a2][y], &cs.sigma[*a3][*b2]);
                place(&mut lhs, &cd, &h.mul(&h.basis_vec(*a1), &h.basis_vec(*b1)), &l);
                let rr = r.mul(&cs.act[*a1][y], &cs.sigma[*a2][*b1]);
                place(&mut rhs, &cd, &h.mul(&h.basis_vec(*a3), &h.basis_vec(*b2)), &rr);
            }
        }
        lhs == rhs
    })
}

pub fn is_lazy_crossed(cs: &CrossedSystem) -> bool {
    check_lazy_crossed(cs).holds()
}

/// `(⇀, σ∗ω)` with `(σ∗ω)(a,b) = σ(a₁,b₁) ω(a₂,b₂)`.
pub fn act_on_crossed(cs: &CrossedSystem, omega: &BiForm) -> Result<CrossedSystem> {
    let h = &cs.hopf;
    if omega.0.rows() != h.dim() {
        return Err(HopfError::ShapeMismatch("ω".into()));
    }
    if !is_lazy_cocycle(omega, h) {
        return Err(HopfError::NotLazy("ω must be a lazy cocycle".into()));
    }
    let n = h.dim();
    let sigma = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let mut out = cs.r.zero();
                    for (a1, a2, c) in h.comult_basis(a) {
                        for (b1, b2, d) in h.comult_basis(b) {
                            let w = omega.at(*a2, *b2);
                            if !w.is_zero() {
                                axpy(&mut out, &(&(c * d) * w), &cs.sigma[*a1][*b1]);
                            }
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    Ok(CrossedSystem { sigma, ..cs.clone() })
}

fn crossed_algebra(cs: &CrossedSystem) -> Result<Algebra> {
    let (h, r) = (&cs.hopf, &cs.r);
    let (n, m) = (h.dim(), r.dim());
    let f = h.field().clone();
    let names = (0..m * n).map(|k| format!("{}#{}", r.basis()[k / n], h.basis()[k % n])).collect();
    let mut unit = zero_vec(&f, m * n);
    for (i, x) in r.unit().iter().enumerate() {
        for (j, y) in h.unit().iter().enumerate() {
            unit[i * n + j] = x * y;
        }
    }
    Algebra::from_fn(&f, names, unit, |u, v| {
        let (x, a) = (u / n, u % n);
        let (y, b) = (v / n, v % n);
        let mut out = zero_vec(&f, m * n);
        for (a1, a2, a3, c) in h.comult2_basis(a) {
            let acted = r.mul(&r.basis_vec(x), &cs.act[*a1][y]);
            for (b1, b2, d) in h.comult_basis(b) {
                let coeff = r.mul(&acted, &cs.sigma[*a2][*b1]);
                let prod = h.mul_basis(*a3, *b2);
                let cd = c * d;
                for (i, ri) in coeff.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    for (j, pj) in prod {
                        out[i * n + j].add_mul(&(&cd * ri), pj);
                    }
                }
            }
        }
        out.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    })
}

/// `R #_σ A` with right coaction `x#a ↦ x#a₁ ⊗ a₂`.
pub fn crossed_product(cs: &CrossedSystem) -> Result<ComoduleAlgebra> {
    let report = crossed_report(cs);
    if !report.passes() {
        return Err(HopfError::InvalidDatum("not a crossed system".into()));
    }
    let alg = crossed_algebra(cs)?;
    let (n, m) = (cs.hopf.dim(), cs.r.dim());
    let nz = n * m;
    let mut right = Matrix::zeros(cs.hopf.field(), nz, nz * n);
    for z in 0..nz {
        let (x, a) = (z / n, z % n);
        for (a1, a2, c) in cs.hopf.comult_basis(a) {
            right.set(z, (x * n + a1) * n + a2, c.clone());
        }
    }
    ComoduleAlgebra::new(alg, cs.hopf.clone(), Some(right), None)
}

/// `β(x#a) = a₁ ⊗ x#a₂` as a left-coaction matrix on `R #_σ A`.
pub fn crossed_left_coaction(cs: &CrossedSystem) -> Matrix {
    let (n, m) = (cs.hopf.dim(), cs.r.dim());
    let nz = n * m;
    let mut left = Matrix::zeros(cs.hopf.field(), nz, n * nz);
    for z in 0..nz {
        let (x, a) = (z / n, z % n);
        for (a1, a2, c) in cs.hopf.comult_basis(a) {
            left.set(z, a1 * nz + x * n + a2, c.clone());
        }
    }
    left
}

/// Is `β : R #_σ A → A ⊗ R #_σ A` multiplicative?
pub fn check_beta_algebra_map(cs: &CrossedSystem, z: &ComoduleAlgebra) -> Verdict {
    let beta = crossed_left_coaction(cs);
    let (h, alg) = (&cs.hopf, z.algebra());
    Verdict::first_failure(tuples(alg.dim(), 2), |t| {
        let uv = alg.mul(&alg.basis_vec(t[0]), &alg.basis_vec(t[1]));
        let lhs = beta.vec_mul(&uv).expect("shape");
        let rhs = tensor_mul(h.algebra(), alg, beta.row(t[0]), beta.row(t[1]));
        lhs == rhs
    })
}

/// `R = k[y]/(y²)` over `H₄` (basis `1, g, x, gx`) with `g⇀y = −y`,
/// `x⇀y = 0` and trivial cocycle.
pub fn dual_numbers_system(h: &HopfAlgebra) -> Result<CrossedSystem> {
    if h.dim() != 4 {
        return Err(HopfError::ShapeMismatch("expects H₄".into()));
    }
    let f = h.field().clone();
    let r = Algebra::from_fn(&f, vec!["1".into(), "y".into()], unit_vec(&f, 2, 0), |i, j| {
        if i + j < 2 { vec![(i + j, Scalar::one(&f))] } else { vec![] }
    })?;
    let one = Scalar::one(&f);
    let act = (0..4)
        .map(|a| {
            (0..2)
                .map(|x| match (a, x) {
                    (0, _) => unit_vec(&f, 2, x),
                    (1, 0) => unit_vec(&f, 2, 0),
                    (1, 1) => vec![Scalar::zero(&f), -&one],
                    _ => zero_vec(&f, 2),
                })
                .collect()
        })
        .collect();
    let sigma = CrossedSystem::trivial_sigma(&r, h);
    CrossedSystem::new(r, h.clone(), act, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{sigma_t, sweedler};
    use crate::forms::{frac, Convolve, LinForm};
    use crate::galois::{galois_object, Side};
    use crate::lazy::coboundary;
    use crate::scalar::Field;

    #[test]
    fn scalar_systems_reduce_to_cocycles() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let s = sigma_t(&h, &frac(&f, 1, 1)).unwrap();
        let cs = CrossedSystem::scalar(&h, &s).unwrap();
        assert!(check_crossed_system(&cs));
        assert!(is_lazy_crossed(&cs));
        let z = crossed_product(&cs).unwrap();
        let g = galois_object(&h, &s, Side::Right).unwrap();
        assert_eq!(z.algebra().dense_mult(), g.algebra().dense_mult());
        assert!(check_beta_algebra_map(&cs, &z).holds());
    }

    #[test]
    fn non_lazy_scalar_system() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let gamma = LinForm(vec![frac(&f, 1, 1), frac(&f, 1, 1), frac(&f, 1, 1), Scalar::zero(&f)]);
        let s = coboundary(&gamma, &h).unwrap();
        let cs = CrossedSystem::scalar(&h, &s).unwrap();
        assert!(check_crossed_system(&cs));
        assert!(!is_lazy_crossed(&cs));
        let z = crossed_product(&cs).unwrap();
        assert!(!check_beta_algebra_map(&cs, &z).holds());
    }

    #[test]
    fn dual_numbers_module() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let cs = dual_numbers_system(&h).unwrap();
        let rep = crossed_report(&cs);
        assert!(rep.passes(), "{rep:?}");
        let mut bad = cs.clone();
        bad.sigma[2][2] = unit_vec(&f, 2, 1);
        assert!(!check_crossed_system(&bad));
    }

    #[test]
    fn right_action_law() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let cs = dual_numbers_system(&h).unwrap();
        let w1 = sigma_t(&h, &frac(&f, 1, 1)).unwrap();
        let w2 = sigma_t(&h, &frac(&f, -3, 2)).unwrap();
        let once = act_on_crossed(&act_on_crossed(&cs, &w1).unwrap(), &w2).unwrap();
        let both = act_on_crossed(&cs, &w1.convolve(&w2, &h).unwrap()).unwrap();
        assert_eq!(once.sigma, both.sigma);
        assert!(check_crossed_system(&once));
        let same = act_on_crossed(&cs, &BiForm::counit(&h)).unwrap();
        assert_eq!(same.sigma, cs.sigma);
    }
}
