//! Bosonizations `A = k[G] ⋉ ΛW` of cocommutative Hopf superalgebras and
//! the lazy cocycles on `A*` coming from exponential twists `e^r`,
//! `r ∈ S²(W)^G`.
//!
//! Basis `h w_P` sits at index `mask(P)·|G| + h`, so for `G = ℤ₂` acting by
//! `-1` the layout matches `E(n)`.

use std::collections::BTreeMap;

use crate::error::{HopfError, Result};
use crate::forms::{BiForm, LinMap};
use crate::hopf::{dual_hopf, Algebra, GeneratorData, GeneratorKind, HopfAlgebra};
use crate::linalg::{unit_vec, zero_vec, Matrix};
use crate::scalar::{Field, Scalar};

use super::en::{en_self_duality, wedge};
use super::group::FiniteGroup;
use super::words::{antipode_from_words, comult_from_words, multiplicative_extension};

/// `G` acting on `W = k^n` by `h⁻¹ w_i h = Σ_j ρ(h)_ij w_j`, with a
/// distinguished `g`, `g² = 1`, `ρ(g) = −1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    pub group: FiniteGroup,
    pub rho: Vec<Matrix>,
    pub g: usize,
}

impl SuperSpace {
    pub fn new(group: FiniteGroup, rho: Vec<Matrix>, g: usize) -> Result<SuperSpace> {
        let m = group.order();
        if rho.len() != m || g >= m {
            return Err(HopfError::InvalidDatum("one matrix per group element".into()));
        }
        let n = rho[0].rows();
        let f = rho[0].field().clone();
        if n == 0 || rho.iter().any(|r| r.rows() != n || r.cols() != n || r.field() != &f) {
            return Err(HopfError::ShapeMismatch("ρ must be square of a common size".into()));
        }
        for x in 0..m {
            for y in 0..m {
                if rho[group.mul(x, y)] != rho[x].mul(&rho[y])? {
                    return Err(HopfError::InvalidDatum("ρ is not multiplicative".into()));
                }
            }
        }
        if group.mul(g, g) != group.identity() || !group.is_central(g) {
            return Err(HopfError::InvalidDatum("g must be central with g² = 1".into()));
        }
        if rho[g] != Matrix::identity(&f, n).scale(&Scalar::from_i64(&f, -1)) {
            return Err(HopfError::InvalidDatum("g must act as −1 on W".into()));
        }
        if f.characteristic() == 2 {
            return Err(HopfError::CharTwo);
        }
        Ok(SuperSpace { group, rho, g })
    }

    /// `G = ℤ₂ = ⟨g⟩` acting by `−1` on `kⁿ`.
    pub fn sign(n: usize, field: &Field) -> Result<SuperSpace> {
        let grp = FiniteGroup::cyclic_named(2, "g");
        let id = Matrix::identity(field, n);
        SuperSpace::new(grp, vec![id.clone(), id.scale(&Scalar::from_i64(field, -1))], 1)
    }

    pub fn n(&self) -> usize {
        self.rho[0].rows()
    }

    pub fn field(&self) -> &Field {
        self.rho[0].field()
    }

    pub fn dim(&self) -> usize {
        self.group.order() << self.n()
    }

    pub fn index(&self, h: usize, mask: usize) -> usize {
        mask * self.group.order() + h
    }

    /// Super degree of a basis element.
    pub fn degree(&self, i: usize) -> usize {
        (i / self.group.order()).count_ones() as usize % 2
    }
}

type Ext = BTreeMap<usize, Scalar>;

fn ext_mul(u: &Ext, v: &Ext) -> Ext {
    let mut out = Ext::new();
    for (p, a) in u {
        for (q, b) in v {
            if let Some((neg, m)) = wedge(*p, *q) {
                let c = a * b;
                let c = if neg { -&c } else { c };
                let e = out.entry(m).or_insert_with(|| Scalar::zero(&c.field()));
                *e += &c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `k⁻¹ w_P k` in `ΛW`.
fn conj_monomial(s: &SuperSpace, k: usize, p: usize) -> Ext {
    let f = s.field();
    let mut acc: Ext = [(0usize, Scalar::one(f))].into_iter().collect();
    for i in 0..s.n() {
        if p >> i & 1 == 1 {
            let lin: Ext = (0..s.n())
                .filter(|j| !s.rho[k].get(i, *j).is_zero())
                .map(|j| (1usize << j, s.rho[k].get(i, j).clone()))
                .collect();
            acc = ext_mul(&acc, &lin);
        }
    }
    acc
}

/// The algebra `k[G] ⋉ ΛW` (shared by the superalgebra and its bosonization).
pub fn smash_algebra(s: &SuperSpace) -> Result<Algebra> {
    let f = s.field().clone();
    let (m, n) = (s.group.order(), s.n());
    let dim = s.dim();
    let names = (0..dim)
        .map(|i| {
            let (h, mask) = (i % m, i / m);
            let mut out = if h == s.group.identity() && mask != 0 { String::new() } else { s.group.name(h).to_string() };
            for k in 0..n {
                if mask >> k & 1 == 1 {
                    out.push_str(&format!("w{}", k + 1));
                }
            }
            out
        })
        .collect();
    Algebra::from_fn(&f, names, unit_vec(&f, dim, s.index(s.group.identity(), 0)), |a, b| {
        let (h, p) = (a % m, a / m);
        let (k, q) = (b % m, b / m);
        let hk = s.group.mul(h, k);
        let moved = conj_monomial(s, k, p);
        let rhs: Ext = [(q, Scalar::one(&f))].into_iter().collect();
        ext_mul(&moved, &rhs).into_iter().map(|(mask, c)| (s.index(hk, mask), c)).collect()
    })
}

/// The bosonized Hopf algebra: `Δh = h⊗h`, `Δw = w⊗1 + g⊗w`,
/// `S(w) = −g w`.
pub fn bosonization(s: &SuperSpace) -> Result<HopfAlgebra> {
    let alg = smash_algebra(s)?;
    let f = s.field().clone();
    let (m, n, dim) = (s.group.order(), s.n(), s.dim());
    let (ggens, gwords) = s.group.generators_and_words();
    let gens: Vec<usize> = ggens.iter().copied().chain((0..n).map(|i| s.index(s.group.identity(), 1 << i))).collect();
    let words: Vec<Vec<usize>> = (0..dim)
        .map(|i| {
            let mut w = gwords[i % m].clone();
            let mask = i / m;
            w.extend((0..n).filter(|k| mask >> k & 1 == 1).map(|k| ggens.len() + k));
            w
        })
        .collect();
    super::words::check_words(&alg, &gens, &words)?;
    let one = Scalar::one(&f);
    let mut images = Vec::new();
    let mut s_images = Vec::new();
    for &h in &ggens {
        let mut v = zero_vec(&f, dim * dim);
        v[h * dim + h] = one.clone();
        images.push(v);
        s_images.push(unit_vec(&f, dim, s.group.inv(h)));
    }
    for k in 0..n {
        let w = s.index(s.group.identity(), 1 << k);
        let mut v = zero_vec(&f, dim * dim);
        v[w * dim + s.group.identity()] = one.clone();
        v[s.g * dim + w] = one.clone();
        images.push(v);
        let mut sw = zero_vec(&f, dim);
        sw[s.index(s.g, 1 << k)] = -&one;
        s_images.push(sw);
    }
    let comult = comult_from_words(&alg, &images, &words);
    let antipode = antipode_from_words(&alg, &s_images, &words);
    let counit = (0..dim).map(|i| if i < m { one.clone() } else { Scalar::zero(&f) }).collect();
    let mut generators: Vec<(usize, GeneratorKind)> =
        ggens.iter().map(|&h| (h, GeneratorKind::Grouplike { order: s.group.elem_order(h) as u64 })).collect();
    generators.extend((0..n).map(|k| (s.index(s.group.identity(), 1 << k), GeneratorKind::Nilpotent)));
    Ok(HopfAlgebra::new(alg, comult, counit, antipode)?.with_generators(GeneratorData { generators, words }))
}

/// Product in the super tensor square: `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd`.
fn super_tensor_mul(s: &SuperSpace, alg: &Algebra, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let n = alg.dim();
    let mut out = zero_vec(alg.field(), n * n);
    let nu: Vec<(usize, &Scalar)> = u.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let nv: Vec<(usize, &Scalar)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for &(x, cx) in &nu {
        let (a, b) = (x / n, x % n);
        for &(y, cy) in &nv {
            let (c, d) = (y / n, y % n);
            let mut coef = cx * cy;
            if s.degree(b) * s.degree(c) == 1 {
                coef = -&coef;
            }
            for (p, e) in alg.mul_basis(a, c) {
                let pe = &coef * e;
                for (q, g) in alg.mul_basis(b, d) {
                    out[p * n + q].add_mul(&pe, g);
                }
            }
        }
    }
    out
}

fn check_invariant_symmetric(s: &SuperSpace, r: &Matrix) -> Result<()> {
    let n = s.n();
    if r.rows() != n || r.cols() != n {
        return Err(HopfError::ShapeMismatch("r must be n × n".into()));
    }
    if r.field() != s.field() {
        return Err(HopfError::FieldMismatch("r".into()));
    }
    if r.transpose() != *r {
        return Err(HopfError::NotSymmetric);
    }
    for m in &s.rho {
        if m.transpose().mul(r)?.mul(m)? != *r {
            return Err(HopfError::NotInvariant);
        }
    }
    Ok(())
}

/// The Drinfeld twist `J = 𝒥₀ − (g⊗1)𝒥₁` of the bosonization for
/// `𝒥 = e^{r}`, `r = Σ r_ij w_i ⊗ w_j`, as a dense vector in `A ⊗ A`.
pub fn exp_twist(s: &SuperSpace, r: &Matrix) -> Result<Vec<Scalar>> {
    check_invariant_symmetric(s, r)?;
    let alg = smash_algebra(s)?;
    let f = s.field().clone();
    let dim = s.dim();
    let e = s.group.identity();
    let mut rv = zero_vec(&f, dim * dim);
    for i in 0..s.n() {
        for j in 0..s.n() {
            rv[s.index(e, 1 << i) * dim + s.index(e, 1 << j)] = r.get(i, j).clone();
        }
    }
    let mut term = zero_vec(&f, dim * dim);
    term[s.index(e, 0) * dim + s.index(e, 0)] = Scalar::one(&f);
    let mut total = term.clone();
    let mut k = 1i64;
    loop {
        term = super_tensor_mul(s, &alg, &term, &rv);
        if term.iter().all(Scalar::is_zero) {
            break;
        }
        let inv_k = Scalar::from_i64(&f, k).inv().map_err(|_| HopfError::InvalidField("e^r needs k! invertible".into()))?;
        term.iter_mut().for_each(|c| *c = &*c * &inv_k);
        for (t, c) in total.iter_mut().zip(&term) {
            *t += c;
        }
        k += 1;
    }
    // J = 𝒥₀ − (g⊗1)𝒥₁
    let mut j = zero_vec(&f, dim * dim);
    for (idx, c) in total.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (a, b) = (idx / dim, idx % dim);
        if s.degree(a) == 0 {
            j[idx] += c;
        } else {
            for (ga, x) in alg.mul_basis(s.g, a) {
                j[ga * dim + b].add_mul(&-c, x);
            }
        }
    }
    Ok(j)
}

/// `A*` for the bosonization `A`, in the dual basis.
pub fn bosonization_dual(s: &SuperSpace) -> Result<HopfAlgebra> {
    dual_hopf(&bosonization(s)?)
}

/// The bilinear form `(f, f') ↦ (f⊗f')(J)` on `A*` for the twist of `e^r`.
pub fn exp_twist_cocycle(s: &SuperSpace, r: &Matrix) -> Result<BiForm> {
    let j = exp_twist(s, r)?;
    let dim = s.dim();
    Ok(BiForm(Matrix::from_fn(s.field(), dim, dim, |a, b| j[a * dim + b].clone())))
}

/// Ratio `t′/t` relating `exp_twist_cocycle(sign(1), [t])`, transported to
/// `H₄` along [`en_bosonization_iso`], to `σ_{t′}`. Fixed by comparing the
/// two forms at `(x, x)`.
pub const EXP_TWIST_NORMALIZATION: (i64, i64) = (-2, 1);

/// Hopf isomorphism `E(n) → A*` for `A` the bosonization of `sign(n)`:
/// the self-duality of `E(n)` followed by the dual of `c ↦ g`, `x_i ↦ g w_i`.
pub fn en_bosonization_iso(e: &HopfAlgebra, s: &SuperSpace) -> Result<LinMap> {
    let a = bosonization(s)?;
    if a.dim() != e.dim() {
        return Err(HopfError::ShapeMismatch("E(n) and the bosonization differ in size".into()));
    }
    let gens = e.generators().ok_or(HopfError::NoGeneratorData)?;
    let f = e.field().clone();
    let images: Vec<Vec<Scalar>> = gens
        .generators
        .iter()
        .map(|(g, _)| {
            if *g == 1 {
                unit_vec(&f, a.dim(), s.g)
            } else {
                // x_i sits at 2·2^{i−1}; g w_i at 2^{i−1}·2 + 1
                unit_vec(&f, a.dim(), g + 1)
            }
        })
        .collect();
    let psi = multiplicative_extension(a.algebra(), &images, &gens.words);
    let (phi, _) = en_self_duality(e)?;
    // ψ* : A* → E(n)* has matrix ψᵀ in the row convention
    Ok(phi.then(&LinMap(psi.transpose().inverse()?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::en_algebra;
    use crate::lazy::{is_hopf_morphism, is_lazy2, is_left_cocycle};

    #[test]
    fn sign_bosonization_is_en() {
        let f = Field::Rational;
        for n in 1..=2 {
            let s = SuperSpace::sign(n, &f).unwrap();
            let a = bosonization(&s).unwrap();
            assert_eq!(a.dim(), 2 << n);
            let e = en_algebra(n, &f).unwrap();
            let iso = en_bosonization_iso(&e, &s).unwrap();
            assert!(is_hopf_morphism(&iso, &e, &bosonization_dual(&s).unwrap()));
        }
    }

    #[test]
    fn zero_twist_is_trivial() {
        let f = Field::Rational;
        let s = SuperSpace::sign(2, &f).unwrap();
        let d = bosonization_dual(&s).unwrap();
        let sig = exp_twist_cocycle(&s, &Matrix::zeros(&f, 2, 2)).unwrap();
        assert_eq!(sig, BiForm::counit(&d));
    }

    #[test]
    fn exp_twist_is_lazy_cocycle() {
        let f = Field::Rational;
        let s = SuperSpace::sign(2, &f).unwrap();
        let d = bosonization_dual(&s).unwrap();
        let r = Matrix::from_fn(&f, 2, 2, |i, j| Scalar::from_i64(&f, [[1, 3], [3, -2]][i][j]));
        let sig = exp_twist_cocycle(&s, &r).unwrap();
        assert!(is_lazy2(&sig, &d));
        assert!(is_left_cocycle(&sig, &d));
    }

    #[test]
    fn rejects_bad_r() {
        let f = Field::Rational;
        let s = SuperSpace::sign(2, &f).unwrap();
        let r = Matrix::from_fn(&f, 2, 2, |i, j| Scalar::from_i64(&f, (i + 2 * j) as i64));
        assert_eq!(exp_twist_cocycle(&s, &r).unwrap_err(), HopfError::NotSymmetric);
    }
}
