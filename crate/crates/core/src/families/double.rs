//! Matched pairs, double crossed products `B ⋈ A` and Drinfeld doubles.
//!
//! `B ⋈ A` uses the index `i_B · dim A + i_A` and the product
//! `(b⊗a)(b′⊗a′) = b(a₁⇀b′₁) ⊗ (a₂↼b′₂)a′`.

use crate::error::{HopfError, Result};
use crate::hopf::{dual_hopf, op_cop, tuples, Algebra, HopfAlgebra, Verdict};
use crate::forms::LinMap;
use crate::linalg::{axpy, zero_vec, Matrix};
use crate::scalar::Scalar;

/// `(B, A, ⇀, ↼)`; `left[a][b] = a⇀b ∈ B`, `right[a][b] = a↼b ∈ A`.
#[derive(Clone, Debug)]
pub struct MatchedPair {
    pub b: HopfAlgebra,
    pub a: HopfAlgebra,
    pub left: Vec<Vec<Vec<Scalar>>>,
    pub right: Vec<Vec<Vec<Scalar>>>,
}

impl MatchedPair {
    pub fn new(b: HopfAlgebra, a: HopfAlgebra, left: Vec<Vec<Vec<Scalar>>>, right: Vec<Vec<Vec<Scalar>>>) -> Result<MatchedPair> {
        let mp = MatchedPair::new_unchecked(b, a, left, right)?;
        for (name, v) in mp.identity_report() {
            if let Verdict::FailsAt(w) = v {
                return Err(HopfError::NotMatched(format!("{name} fails at {w:?}")));
            }
        }
        Ok(mp)
    }

    pub fn new_unchecked(b: HopfAlgebra, a: HopfAlgebra, left: Vec<Vec<Vec<Scalar>>>, right: Vec<Vec<Vec<Scalar>>>) -> Result<MatchedPair> {
        if a.field() != b.field() {
            return Err(HopfError::FieldMismatch("matched pair".into()));
        }
        let (na, nb) = (a.dim(), b.dim());
        let shape_ok = |t: &Vec<Vec<Vec<Scalar>>>, len: usize| t.len() == na && t.iter().all(|r| r.len() == nb && r.iter().all(|v| v.len() == len));
        if !shape_ok(&left, nb) || !shape_ok(&right, na) {
            return Err(HopfError::ShapeMismatch("action tensors".into()));
        }
        Ok(MatchedPair { b, a, left, right })
    }

    /// Trivial actions, giving `B ⊗ A`.
    pub fn trivial(b: &HopfAlgebra, a: &HopfAlgebra) -> Result<MatchedPair> {
        let left = (0..a.dim())
            .map(|i| (0..b.dim()).map(|j| b.basis_vec(j).iter().map(|c| c * &a.counit()[i]).collect()).collect())
            .collect();
        let right = (0..a.dim())
            .map(|i| (0..b.dim()).map(|j| a.basis_vec(i).iter().map(|c| c * &b.counit()[j]).collect()).collect())
            .collect();
        MatchedPair::new(b.clone(), a.clone(), left, right)
    }

    /// `u ⇀ v` for vectors.
    pub fn act_left(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.b.zero();
        for (i, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                axpy(&mut out, &(x * y), &self.left[i][j]);
            }
        }
        out
    }

    /// `u ↼ v` for vectors.
    pub fn act_right(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.a.zero();
        for (i, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                axpy(&mut out, &(x * y), &self.right[i][j]);
            }
        }
        out
    }

    /// Module, module-coalgebra and compatibility identities.
    pub fn identity_report(&self) -> Vec<(&'static str, Verdict)> {
        let (a, b) = (&self.a, &self.b);
        let (na, nb) = (a.dim(), b.dim());
        let av = |i: usize| a.basis_vec(i);
        let bv = |i: usize| b.basis_vec(i);
        let mut out = Vec::new();
        out.push(("1⇀b = b and (aa′)⇀b = a⇀(a′⇀b)", Verdict::first_failure(tuples(na, 2).flat_map(|t| (0..nb).map(move |j| vec![t[0], t[1], j])), |t| {
            let lhs = self.act_left(&a.mul(&av(t[0]), &av(t[1])), &bv(t[2]));
            lhs == self.act_left(&av(t[0]), &self.act_left(&av(t[1]), &bv(t[2])))
                && self.act_left(a.unit(), &bv(t[2])) == bv(t[2])
        })));
        out.push(("a↼1 = a and a↼(bb′) = (a↼b)↼b′", Verdict::first_failure((0..na).flat_map(|i| tuples(nb, 2).map(move |t| vec![i, t[0], t[1]])), |t| {
            let lhs = self.act_right(&av(t[0]), &b.mul(&bv(t[1]), &bv(t[2])));
            lhs == self.act_right(&self.act_right(&av(t[0]), &bv(t[1])), &bv(t[2]))
                && self.act_right(&av(t[0]), b.unit()) == av(t[0])
        })));
        out.push(("Δ(a⇀b) = (a₁⇀b₁)⊗(a₂⇀b₂), ε(a⇀b) = ε(a)ε(b)", Verdict::first_failure(tuples(na, 1).flat_map(|t| (0..nb).map(move |j| vec![t[0], j])), |t| {
            let lhs = b.comult(&self.left[t[0]][t[1]]);
            let mut rhs = zero_vec(b.field(), nb * nb);
            for (a1, a2, c) in a.comult_basis(t[0]) {
                for (b1, b2, d) in b.comult_basis(t[1]) {
                    let x = &self.left[*a1][*b1];
                    let y = &self.left[*a2][*b2];
                    let cd = c * d;
                    for (p, xp) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        for (q, yq) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                            rhs[p * nb + q].add_mul(&cd, &(xp * yq));
                        }
                    }
                }
            }
            lhs == rhs && b.apply_counit(&self.left[t[0]][t[1]]) == &a.counit()[t[0]] * &b.counit()[t[1]]
        })));
        out.push(("Δ(a↼b) = (a₁↼b₁)⊗(a₂↼b₂), ε(a↼b) = ε(a)ε(b)", Verdict::first_failure(tuples(na, 1).flat_map(|t| (0..nb).map(move |j| vec![t[0], j])), |t| {
            let lhs = a.comult(&self.right[t[0]][t[1]]);
            let mut rhs = zero_vec(a.field(), na * na);
            for (a1, a2, c) in a.comult_basis(t[0]) {
                for (b1, b2, d) in b.comult_basis(t[1]) {
                    let x = &self.right[*a1][*b1];
                    let y = &self.right[*a2][*b2];
                    let cd = c * d;
                    for (p, xp) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        for (q, yq) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                            rhs[p * na + q].add_mul(&cd, &(xp * yq));
                        }
                    }
                }
            }
            lhs == rhs && a.apply_counit(&self.right[t[0]][t[1]]) == &a.counit()[t[0]] * &b.counit()[t[1]]
        })));
        out.push(("a⇀1 = ε(a)1, a⇀(bb′) = (a₁⇀b₁)((a₂↼b₂)⇀b′)", Verdict::first_failure((0..na).flat_map(|i| tuples(nb, 2).map(move |t| vec![i, t[0], t[1]])), |t| {
            let unit_ok = self.act_left(&av(t[0]), b.unit()) == b.unit().iter().map(|c| c * &a.counit()[t[0]]).collect::<Vec<_>>();
            let lhs = self.act_left(&av(t[0]), &b.mul(&bv(t[1]), &bv(t[2])));
            let mut rhs = b.zero();
            for (a1, a2, c) in a.comult_basis(t[0]) {
                for (b1, b2, d) in b.comult_basis(t[1]) {
                    let x = &self.left[*a1][*b1];
                    let y = self.act_left(&self.right[*a2][*b2], &bv(t[2]));
                    axpy(&mut rhs, &(c * d), &b.mul(x, &y));
                }
            }
            unit_ok && lhs == rhs
        })));
        out.push(("1↼b = ε(b)1, (aa′)↼b = (a↼(a′₁⇀b₁))(a′₂↼b₂)", Verdict::first_failure(tuples(na, 2).flat_map(|t| (0..nb).map(move |j| vec![t[0], t[1], j])), |t| {
            let unit_ok = self.act_right(a.unit(), &bv(t[2])) == a.unit().iter().map(|c| c * &b.counit()[t[2]]).collect::<Vec<_>>();
            let lhs = self.act_right(&a.mul(&av(t[0]), &av(t[1])), &bv(t[2]));
            let mut rhs = a.zero();
            for (a1, a2, c) in a.comult_basis(t[1]) {
                for (b1, b2, d) in b.comult_basis(t[2]) {
                    let x = self.act_right(&av(t[0]), &self.left[*a1][*b1]);
                    axpy(&mut rhs, &(c * d), &a.mul(&x, &self.right[*a2][*b2]));
                }
            }
            unit_ok && lhs == rhs
        })));
        out.push(("(a₁↼b₁)⊗(a₂⇀b₂) = (a₂↼b₂)⊗(a₁⇀b₁)", Verdict::first_failure(tuples(na, 1).flat_map(|t| (0..nb).map(move |j| vec![t[0], j])), |t| {
            let mut lhs = zero_vec(a.field(), na * nb);
            let mut rhs = zero_vec(a.field(), na * nb);
            for (a1, a2, c) in a.comult_basis(t[0]) {
                for (b1, b2, d) in b.comult_basis(t[1]) {
                    let cd = c * d;
                    for (sink, (x, y)) in [(&mut lhs, (&self.right[*a1][*b1], &self.left[*a2][*b2])), (&mut rhs, (&self.right[*a2][*b2], &self.left[*a1][*b1]))] {
                        for (p, xp) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                            for (q, yq) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                                sink[p * nb + q].add_mul(&cd, &(xp * yq));
                            }
                        }
                    }
                }
            }
            lhs == rhs
        })));
        out
    }
}

/// `B ⋈ A` with the tensor coalgebra and
/// `S(b⊗a) = (1⊗S_A(a))(S_B(b)⊗1)`.
pub fn double_crossed(mp: &MatchedPair) -> Result<HopfAlgebra> {
    let (a, b) = (&mp.a, &mp.b);
    let (na, nb) = (a.dim(), b.dim());
    let f = a.field().clone();
    let n = na * nb;
    let names = (0..n)
        .map(|k| {
            let (i, j) = (k / na, k % na);
            format!("{}⊗{}", b.basis()[i], a.basis()[j])
        })
        .collect();
    let mut unit = zero_vec(&f, n);
    for (i, x) in b.unit().iter().enumerate() {
        for (j, y) in a.unit().iter().enumerate() {
            unit[i * na + j] = x * y;
        }
    }
    let alg = Algebra::from_fn(&f, names, unit.clone(), |x, y| {
        let (bi, ai) = (x / na, x % na);
        let (bj, aj) = (y / na, y % na);
        let mut out = zero_vec(&f, n);
        for (a1, a2, c) in a.comult_basis(ai) {
            for (b1, b2, d) in b.comult_basis(bj) {
                let cd = c * d;
                let left = b.mul(&b.basis_vec(bi), &mp.left[*a1][*b1]);
                let right = a.mul(&mp.right[*a2][*b2], &a.basis_vec(aj));
                for (p, lp) in left.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let k = &cd * lp;
                    for (q, rq) in right.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        out[p * na + q].add_mul(&k, rq);
                    }
                }
            }
        }
        out.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    })?;
    // tensor coalgebra: Δ(b⊗a) = (b₁⊗a₁)⊗(b₂⊗a₂)
    let comult = (0..n)
        .map(|x| {
            let (bi, ai) = (x / na, x % na);
            let mut terms = Vec::new();
            for (b1, b2, c) in b.comult_basis(bi) {
                for (a1, a2, d) in a.comult_basis(ai) {
                    terms.push((b1 * na + a1, b2 * na + a2, c * d));
                }
            }
            terms
        })
        .collect();
    let counit = (0..n).map(|x| &b.counit()[x / na] * &a.counit()[x % na]).collect();
    let embed_a = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = zero_vec(&f, n);
        for (i, x) in b.unit().iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in v.iter().enumerate() {
                out[i * na + j] = x * y;
            }
        }
        out
    };
    let embed_b = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = zero_vec(&f, n);
        for (i, x) in v.iter().enumerate() {
            for (j, y) in a.unit().iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[i * na + j] = x * y;
            }
        }
        out
    };
    let rows = (0..n)
        .map(|x| {
            let (bi, ai) = (x / na, x % na);
            alg.mul(&embed_a(a.antipode().row(ai)), &embed_b(b.antipode().row(bi)))
        })
        .collect();
    let antipode = Matrix::from_rows(&f, rows)?;
    HopfAlgebra::new(alg, comult, counit, antipode)
}

/// The inclusions `b ↦ b⊗1` and `a ↦ 1⊗a` into `B ⋈ A`.
pub fn double_inclusions(mp: &MatchedPair) -> (LinMap, LinMap) {
    let (a, b) = (&mp.a, &mp.b);
    let (na, nb) = (a.dim(), b.dim());
    let f = a.field();
    let ib = Matrix::from_fn(f, nb, na * nb, |i, k| {
        if k / na == i { a.unit()[k % na].clone() } else { Scalar::zero(f) }
    });
    let ia = Matrix::from_fn(f, na, na * nb, |j, k| {
        if k % na == j { b.unit()[k / na].clone() } else { Scalar::zero(f) }
    });
    (LinMap(ib), LinMap(ia))
}

/// The matched pair `((A*)^cop, A)` of the Drinfeld double, read off from
/// `(1⊗a)(f⊗1) = Σ f(S⁻¹(a₃) ? a₁) ⊗ a₂`:
/// `a⇀f = f(S⁻¹(a₂) ? a₁)` and `a↼f = Σ f(S⁻¹(a₃)a₁) a₂`.
pub fn double_matched_pair(h: &HopfAlgebra) -> Result<MatchedPair> {
    let sinv = h.antipode_inverse()?;
    let b = op_cop(&dual_hopf(h)?, false, true)?;
    let n = h.dim();
    let f = h.field().clone();
    // value of b_j* on S⁻¹(u) x v, for basis u, v and all x
    let sandwich = |u: usize, v: usize, j: usize| -> Vec<Scalar> {
        (0..n)
            .map(|x| {
                let p = h.mul(&h.mul(sinv.row(u), &h.basis_vec(x)), &h.basis_vec(v));
                p[j].clone()
            })
            .collect()
    };
    let mut left = vec![vec![Vec::new(); n]; n];
    let mut right = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut l = zero_vec(&f, n);
            for (a1, a2, c) in h.comult_basis(i) {
                axpy(&mut l, c, &sandwich(*a2, *a1, j));
            }
            let mut r = zero_vec(&f, n);
            for (a1, a2, a3, c) in h.comult2_basis(i) {
                let p = h.mul(sinv.row(*a3), &h.basis_vec(*a1));
                if !p[j].is_zero() {
                    axpy(&mut r, &(c * &p[j]), &h.basis_vec(*a2));
                }
            }
            left[i][j] = l;
            right[i][j] = r;
        }
    }
    MatchedPair::new(b, h.clone(), left, right)
}

/// `D(A) = (A*)^cop ⋈ A`.
pub fn drinfeld_double(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    double_crossed(&double_matched_pair(h)?)
}

/// Is the image of `incl` closed under the operations of `D` and does
/// `incl` intertwine them with those of `sub`?
pub fn is_hopf_subalgebra_inclusion(incl: &LinMap, sub: &HopfAlgebra, d: &HopfAlgebra) -> bool {
    crate::lazy::is_hopf_morphism(incl, sub, d) && incl.0.rank() == sub.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{group_algebra, sweedler, FiniteGroup};
    use crate::hopf::tensor_hopf;
    use crate::scalar::Field;

    #[test]
    fn trivial_pair_is_tensor() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        let d = double_crossed(&MatchedPair::trivial(&k, &h).unwrap()).unwrap();
        assert!(d.same_structure(&tensor_hopf(&k, &h).unwrap()));
    }

    #[test]
    fn double_of_sweedler() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let mp = double_matched_pair(&h).unwrap();
        let d = double_crossed(&mp).unwrap();
        assert_eq!(d.dim(), 16);
        let (ib, ia) = double_inclusions(&mp);
        assert!(is_hopf_subalgebra_inclusion(&ia, &h, &d));
        assert!(is_hopf_subalgebra_inclusion(&ib, &mp.b, &d));
    }

    #[test]
    fn double_of_z2_is_klein_group_algebra() {
        let f = Field::Rational;
        let c2 = FiniteGroup::cyclic(2);
        let k = group_algebra(&c2, &f).unwrap();
        let d = drinfeld_double(&k).unwrap();
        let klein = group_algebra(&FiniteGroup::product(&c2, &c2), &f).unwrap();
        // (g^i, h^j) ↦ (δ₁ + (−1)^j δ_g) ⊗ g^i
        let m = Matrix::from_fn(&f, 4, 4, |x, y| {
            let (i, j) = (x / 2, x % 2);
            let (bi, ai) = (y / 2, y % 2);
            if ai != i {
                Scalar::zero(&f)
            } else if bi == 1 && j == 1 {
                Scalar::from_i64(&f, -1)
            } else {
                Scalar::one(&f)
            }
        });
        let iso = LinMap(m);
        assert!(crate::lazy::is_hopf_morphism(&iso, &klein, &d));
        assert!(iso.0.determinant_nonzero());
    }

    #[test]
    fn perturbed_action_rejected() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let mp = double_matched_pair(&h).unwrap();
        let mut left = mp.left.clone();
        left[2][2][0] = &left[2][2][0] + &Scalar::one(&f);
        assert!(matches!(MatchedPair::new(mp.b.clone(), mp.a.clone(), left, mp.right.clone()), Err(HopfError::NotMatched(_))));
    }
}
