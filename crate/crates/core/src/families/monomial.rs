//! Monomial Hopf algebras `A(𝔾)` attached to a group datum, Taft algebras,
//! and the biGalois objects `A^u_{σ,a}(𝔾)`.
//!
//! Basis `h xⁱ` (`0 ≤ i < d`) sits at index `i·|G| + h`; the Galois objects
//! use the same indexing for `T_h Xⁱ`.

use crate::error::{HopfError, Result};
use crate::forms::LinMap;
use crate::galois::ComoduleAlgebra;
use crate::hopf::{tensor_mul, Algebra, GeneratorData, GeneratorKind, HopfAlgebra};
use crate::linalg::{unit_vec, zero_vec, Matrix};
use crate::scalar::{Field, Scalar};

use super::group::{is_group_cocycle, FiniteGroup, GroupCochain};
use super::words::{antipode_from_words, comult_from_words};

/// `𝔾 = (G, g, χ, μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDatum {
    pub group: FiniteGroup,
    pub g: usize,
    pub chi: Vec<Scalar>,
    pub mu: Scalar,
}

fn scalar_order(q: &Scalar, bound: usize) -> Option<usize> {
    let mut p = q.clone();
    for k in 1..=bound {
        if p.is_one() {
            return Some(k);
        }
        p = &p * q;
    }
    None
}

impl GroupDatum {
    pub fn new(group: FiniteGroup, g: usize, chi: Vec<Scalar>, mu: Scalar) -> Result<GroupDatum> {
        let n = group.order();
        if g >= n || chi.len() != n {
            return Err(HopfError::InvalidDatum("g or χ out of range".into()));
        }
        let field = mu.field();
        if chi.iter().any(|c| c.field() != field) {
            return Err(HopfError::FieldMismatch("character values".into()));
        }
        for x in 0..n {
            for y in 0..n {
                if chi[group.mul(x, y)] != &chi[x] * &chi[y] {
                    return Err(HopfError::InvalidDatum("χ is not a character".into()));
                }
            }
        }
        if !group.is_central(g) {
            return Err(HopfError::InvalidDatum("g is not central".into()));
        }
        if chi[g].is_one() {
            return Err(HopfError::InvalidDatum("χ(g) = 1".into()));
        }
        let d = scalar_order(&chi[g], n).ok_or_else(|| HopfError::InvalidDatum("χ(g) has no finite order".into()))?;
        if !mu.is_zero() {
            if group.elem_order(g) == d {
                return Err(HopfError::InvalidDatum("μ must vanish when o(g) = o(χ(g))".into()));
            }
            if chi.iter().any(|c| !c.pow(d as i64).is_one()) {
                return Err(HopfError::InvalidDatum("μ ≠ 0 needs χ^d = 1".into()));
            }
        }
        Ok(GroupDatum { group, g, chi, mu })
    }

    pub fn field(&self) -> Field {
        self.mu.field()
    }

    /// `d = o(χ(g))`.
    pub fn d(&self) -> usize {
        scalar_order(&self.chi[self.g], self.group.order()).expect("validated")
    }

    /// `μ = 0`, `d = o(g)` and `χ^d = 1`.
    pub fn is_type_one(&self) -> bool {
        let d = self.d();
        self.mu.is_zero() && self.group.elem_order(self.g) == d && self.chi.iter().all(|c| c.pow(d as i64).is_one())
    }

    pub fn index(&self, h: usize, i: usize) -> usize {
        i * self.group.order() + h
    }
}

/// `(d, n, N, α, q)` with `d | n | N`, `α | N/n`, `gcd(α, d) = 1`,
/// `o(q) = Nd/(αn)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicDatum {
    pub d: usize,
    pub n: usize,
    pub big_n: usize,
    pub alpha: usize,
    pub q: Scalar,
}

impl CyclicDatum {
    pub fn new(d: usize, n: usize, big_n: usize, alpha: usize, q: Scalar) -> Result<CyclicDatum> {
        let bad = |m: &str| Err(HopfError::InvalidDatum(m.into()));
        if d < 2 || n < 2 || big_n < 2 || alpha == 0 {
            return bad("d, n, N must exceed 1 and α must be positive");
        }
        if n % d != 0 || big_n % n != 0 {
            return bad("need d | n | N");
        }
        if (big_n / n) % alpha != 0 {
            return bad("need α | N/n");
        }
        if num_integer::gcd(alpha, d) != 1 {
            return bad("need gcd(α, d) = 1");
        }
        let want = big_n * d / (alpha * n);
        if scalar_order(&q, want) != Some(want) {
            return bad("o(q) must equal Nd/(αn)");
        }
        Ok(CyclicDatum { d, n, big_n, alpha, q })
    }

    /// `(C_N, z^{N/n}, χ_q, 0)`.
    pub fn group_datum(&self) -> Result<GroupDatum> {
        let c = FiniteGroup::cyclic_named(self.big_n, "z");
        let chi = (0..self.big_n).map(|k| self.q.pow(k as i64)).collect();
        let gd = GroupDatum::new(c, self.big_n / self.n, chi, Scalar::zero(&self.q.field()))?;
        if gd.d() != self.d {
            return Err(HopfError::InvalidDatum("o(χ(g)) ≠ d".into()));
        }
        Ok(gd)
    }
}

/// Gaussian binomial `[i choose l]_q`.
pub fn qbinom(i: usize, l: usize, q: &Scalar) -> Scalar {
    let f = q.field();
    if l > i {
        return Scalar::zero(&f);
    }
    // Pascal rule [i, l] = [i-1, l-1] + q^l [i-1, l]
    let mut row = vec![Scalar::one(&f)];
    for m in 1..=i {
        let mut next = vec![Scalar::one(&f); m + 1];
        for k in 1..m {
            next[k] = &row[k - 1] + &(&q.pow(k as i64) * &row[k]);
        }
        row = next;
    }
    row[l].clone()
}

fn monomial_names(gd: &GroupDatum, x: &str) -> Vec<String> {
    let (n, d) = (gd.group.order(), gd.d());
    (0..n * d)
        .map(|idx| {
            let (i, h) = (idx / n, idx % n);
            let hn = gd.group.name(h);
            let xs = match i {
                0 => String::new(),
                1 => x.to_string(),
                _ => format!("{x}^{i}"),
            };
            match (h == gd.group.identity(), i) {
                (true, 0) => "1".into(),
                (true, _) => xs,
                (false, 0) => hn.to_string(),
                _ => format!("{hn}{xs}"),
            }
        })
        .collect()
}

/// Product rule shared by `A(𝔾)` and `A^u_{σ,a}(𝔾)`:
/// `(h xⁱ)(k xʲ) = χ(k)ⁱ c(h,k) hk x^{i+j}` with `x^d` rewritten by `top`.
fn monomial_rule<'a>(
    gd: &'a GroupDatum,
    cocycle: impl Fn(usize, usize) -> Scalar + 'a,
    top: impl Fn(usize) -> Vec<(usize, Scalar)> + 'a,
) -> impl FnMut(usize, usize) -> Vec<(usize, Scalar)> + 'a {
    let (n, d) = (gd.group.order(), gd.d());
    move |a, b| {
        let (i, h) = (a / n, a % n);
        let (j, k) = (b / n, b % n);
        let c = &gd.chi[k].pow(i as i64) * &cocycle(h, k);
        let hk = gd.group.mul(h, k);
        if i + j < d {
            return vec![(gd.index(hk, i + j), c)];
        }
        // hk x^d x^m with x^d = Σ coeff · (group element)
        let m = i + j - d;
        top(hk).into_iter().map(|(e, v)| (gd.index(e, m), &c * &v)).collect()
    }
}

fn monomial_words(gd: &GroupDatum) -> (Vec<usize>, Vec<Vec<usize>>) {
    let (ggens, gwords) = gd.group.generators_and_words();
    let (n, d) = (gd.group.order(), gd.d());
    let xpos = ggens.len();
    let words = (0..n * d)
        .map(|idx| {
            let mut w = gwords[idx % n].clone();
            w.extend(std::iter::repeat(xpos).take(idx / n));
            w
        })
        .collect();
    (ggens, words)
}

/// `A(𝔾)`: `x h = χ(h) h x`, `x^d = μ(1 − g^d)`, `Δx = 1⊗x + x⊗g`,
/// `Δh = h⊗h`, `S(x) = −x g⁻¹`.
pub fn monomial_hopf(gd: &GroupDatum) -> Result<HopfAlgebra> {
    let f = gd.field();
    f.validate()?;
    let grp = &gd.group;
    let (n, d) = (grp.order(), gd.d());
    let dim = n * d;
    let gd_pow = grp.pow(gd.g, d);
    let mu = gd.mu.clone();
    let top = move |e: usize| {
        if mu.is_zero() {
            return vec![];
        }
        vec![(e, mu.clone()), (grp.mul(e, gd_pow), -&mu)]
    };
    let alg = Algebra::from_fn(&f, monomial_names(gd, "x"), unit_vec(&f, dim, gd.index(grp.identity(), 0)), monomial_rule(gd, |_, _| Scalar::one(&f), top))?;
    let (ggens, words) = monomial_words(gd);
    let mut gens: Vec<usize> = ggens.clone();
    gens.push(gd.index(grp.identity(), 1));
    super::words::check_words(&alg, &gens, &words)?;
    let one = Scalar::one(&f);
    let mut images = Vec::new();
    let mut s_images = Vec::new();
    for &h in &ggens {
        let mut v = zero_vec(&f, dim * dim);
        v[h * dim + h] = one.clone();
        images.push(v);
        s_images.push(unit_vec(&f, dim, grp.inv(h)));
    }
    let x = gd.index(grp.identity(), 1);
    let mut dx = zero_vec(&f, dim * dim);
    dx[grp.identity() * dim + x] = one.clone();
    dx[x * dim + gd.g] = one.clone();
    images.push(dx);
    let mut sx = zero_vec(&f, dim);
    sx[gd.index(grp.inv(gd.g), 1)] = -&gd.chi[grp.inv(gd.g)];
    s_images.push(sx);
    let comult = comult_from_words(&alg, &images, &words);
    let antipode = antipode_from_words(&alg, &s_images, &words);
    let counit = (0..dim).map(|i| if i < n { one.clone() } else { Scalar::zero(&f) }).collect();
    let mut generators: Vec<(usize, GeneratorKind)> =
        ggens.iter().map(|&h| (h, GeneratorKind::Grouplike { order: grp.elem_order(h) as u64 })).collect();
    generators.push((x, GeneratorKind::Nilpotent));
    Ok(HopfAlgebra::new(alg, comult, counit, antipode)?.with_generators(GeneratorData { generators, words }))
}

/// The Taft algebra `H_{N,q}` over `ℚ(ζ_N)` (or `ℚ` for `N = 2`), with `q = ζ_N`.
pub fn taft(big_n: usize) -> Result<HopfAlgebra> {
    monomial_hopf(&taft_datum(big_n)?)
}

pub fn taft_datum(big_n: usize) -> Result<GroupDatum> {
    let field = if big_n == 2 { Field::Rational } else { Field::Cyclotomic(big_n as u32) };
    let q = Scalar::root_of_unity(&field, big_n as u64, 1)?;
    CyclicDatum::new(big_n, big_n, big_n, 1, q)?.group_datum()
}

/// The datum on the non-abelian group of order 16 with `χ(a) = χ(b) = 1`,
/// `χ(g) = −1`, over `ℚ(i)`.
pub fn order16_datum() -> Result<GroupDatum> {
    let grp = FiniteGroup::order16_example();
    let f = Field::Cyclotomic(4);
    let g = grp.index_of("g").expect("named generator");
    // index 8α + 4β + γ
    let chi = (0..16).map(|e| Scalar::from_i64(&f, if (e % 4) % 2 == 0 { 1 } else { -1 })).collect();
    GroupDatum::new(grp, g, chi, Scalar::zero(&f))
}

/// `A^u_{σ,a}(𝔾)` with `T_{h₁}T_{h₂} = σ(h₁,h₂)T_{h₁h₂}`, `X T_h = χ(h) T_h X`,
/// `X^d = a T_{g^d}`, `ρ(X) = 1⊗x + X⊗g`, `ρ(T_h) = T_h⊗h`,
/// `β(X) = 1⊗X + x⊗T_g`, `β(T_h) = u(h)⊗T_h`.
pub fn galois_monomial(gd: &GroupDatum, sigma: &GroupCochain, u: &[usize], a: &Scalar) -> Result<ComoduleAlgebra> {
    let grp = &gd.group;
    let f = gd.field();
    let (n, d) = (grp.order(), gd.d());
    let bad = |m: String| Err(HopfError::IncompatibleTriplet(m));
    if !gd.mu.is_zero() {
        return bad("biGalois objects are built for μ = 0".into());
    }
    if !is_group_cocycle(sigma, grp) {
        return Err(HopfError::NotACocycle("σ is not a normalized group 2-cocycle".into()));
    }
    if u.len() != n || !grp.is_automorphism(u) || u[gd.g] != gd.g {
        return bad("u must be an automorphism fixing g".into());
    }
    for h in 0..n {
        let rhs = (&sigma.get(h, gd.g).clone() * &gd.chi[h]).try_div(sigma.get(gd.g, h))?;
        if gd.chi[u[h]] != rhs {
            return bad(format!("χ(u(h)) ≠ σ(g,h)⁻¹σ(h,g)χ(h) at h = {}", grp.name(h)));
        }
    }
    if !a.is_zero() && !gd.is_type_one() {
        return bad("a ≠ 0 needs a type I datum".into());
    }
    let hopf = monomial_hopf(gd)?;
    let dim = n * d;
    let gd_pow = grp.pow(gd.g, d);
    let a2 = a.clone();
    let top = move |e: usize| {
        if a2.is_zero() {
            return vec![];
        }
        vec![(grp.mul(e, gd_pow), &a2 * sigma.get(e, gd_pow))]
    };
    let names = monomial_names(gd, "X").into_iter().enumerate().map(|(i, s)| {
        let h = i % n;
        if h == grp.identity() { s } else { format!("T_{}", s) }
    });
    let alg = Algebra::from_fn(&f, names.collect(), unit_vec(&f, dim, gd.index(grp.identity(), 0)), monomial_rule(gd, |h, k| sigma.get(h, k).clone(), top))?;
    let one = Scalar::one(&f);
    let x_idx = gd.index(grp.identity(), 1);
    let e = grp.identity();
    // ρ(X) in Z ⊗ A, β(X) in A ⊗ Z (same index layout since dim Z = dim A)
    let mut rho_x = zero_vec(&f, dim * dim);
    rho_x[e * dim + x_idx] = one.clone();
    rho_x[x_idx * dim + gd.g] = one.clone();
    let mut beta_x = zero_vec(&f, dim * dim);
    beta_x[e * dim + x_idx] = one.clone();
    beta_x[x_idx * dim + gd.g] = one.clone();
    let za = hopf.algebra();
    let mut right = Matrix::zeros(&f, dim, dim * dim);
    let mut left = Matrix::zeros(&f, dim, dim * dim);
    for h in 0..n {
        let mut r = zero_vec(&f, dim * dim);
        r[h * dim + h] = one.clone();
        let mut l = zero_vec(&f, dim * dim);
        l[u[h] * dim + h] = one.clone();
        for i in 0..d {
            for (k, v) in r.iter().enumerate() {
                right.set(gd.index(h, i), k, v.clone());
            }
            for (k, v) in l.iter().enumerate() {
                left.set(gd.index(h, i), k, v.clone());
            }
            r = tensor_mul(&alg, za, &r, &rho_x);
            l = tensor_mul(za, &alg, &l, &beta_x);
        }
    }
    ComoduleAlgebra::new(alg, hopf, Some(right), Some(left))
}

/// The right-colinear section `Φ : h xⁱ ↦ T_h Xⁱ`, the identity matrix in
/// the shared indexing.
pub fn monomial_section(gd: &GroupDatum) -> LinMap {
    LinMap(Matrix::identity(&gd.field(), gd.group.order() * gd.d()))
}

/// Bicleftness of `A^u_{σ,a}(𝔾)`: `σ ∈ Z²_{L,g}(G,k·)` and `u = id`.
pub fn monomial_bicleft(gd: &GroupDatum, sigma: &GroupCochain, u: &[usize]) -> Result<bool> {
    let id = u.iter().enumerate().all(|(h, &v)| h == v);
    Ok(id && super::group::z2lg_membership(sigma, &gd.group, gd.g)?)
}

/// The coefficient `a` in `x^{·d} = a·1` for the `d`-fold power of `x` in
/// `_σA(𝔾)`. Fails if the power is not a scalar.
pub fn twisted_power_invariant(h: &HopfAlgebra, gd: &GroupDatum, sigma: &crate::forms::BiForm) -> Result<Scalar> {
    let x = h.basis_vec(gd.index(gd.group.identity(), 1));
    let mut p = x.clone();
    for _ in 1..gd.d() {
        p = crate::galois::right_twisted_mul(h, sigma, &p, &x);
    }
    let unit = gd.index(gd.group.identity(), 0);
    if p.iter().enumerate().any(|(i, c)| i != unit && !c.is_zero()) {
        return Err(HopfError::InvalidDatum("twisted power of x is not a scalar".into()));
    }
    Ok(p[unit].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{sweedler, trivial_cochain};

    #[test]
    fn z2_datum_gives_sweedler() {
        let f = Field::Rational;
        let c2 = FiniteGroup::cyclic_named(2, "g");
        let gd = GroupDatum::new(c2, 1, vec![Scalar::one(&f), Scalar::from_i64(&f, -1)], Scalar::zero(&f)).unwrap();
        assert!(gd.is_type_one());
        let a = monomial_hopf(&gd).unwrap();
        assert!(a.same_structure(&sweedler(&f).unwrap()));
    }

    #[test]
    fn qbinom_values() {
        let f = Field::Rational;
        let q = Scalar::from_i64(&f, 3);
        assert_eq!(qbinom(2, 1, &q), Scalar::from_i64(&f, 4));
        assert!(qbinom(2, 1, &Scalar::from_i64(&f, -1)).is_zero());
        assert_eq!(qbinom(4, 2, &Scalar::one(&f)), Scalar::from_i64(&f, 6));
    }

    #[test]
    fn taft_three() {
        let h = taft(3).unwrap();
        assert_eq!(h.dim(), 9);
        let gd = taft_datum(3).unwrap();
        let x2 = gd.index(0, 2);
        let q = Scalar::root_of_unity(&h.field().clone(), 3, 1).unwrap();
        // Δ(x²) ∋ qbinom(2,1,q) · x ⊗ g x
        let c = h.comult_basis(x2).iter().find(|(a, b, _)| *a == gd.index(0, 1) && *b == gd.index(1, 1)).map(|t| t.2.clone());
        assert_eq!(c, Some(qbinom(2, 1, &q)));
    }

    #[test]
    fn datum_validation() {
        let f = Field::Rational;
        let c2 = FiniteGroup::cyclic(2);
        let triv = vec![Scalar::one(&f); 2];
        assert!(GroupDatum::new(c2, 1, triv, Scalar::zero(&f)).is_err());
        let c4 = FiniteGroup::cyclic(4);
        let sign: Vec<Scalar> = (0..4).map(|k| Scalar::from_i64(&f, if k % 2 == 0 { 1 } else { -1 })).collect();
        // g = z, o(g) = 4 ≠ d = 2 and χ² = 1, so μ may be nonzero
        let gd = GroupDatum::new(c4.clone(), 1, sign.clone(), Scalar::one(&f)).unwrap();
        assert!(!gd.is_type_one());
        assert_eq!(monomial_hopf(&gd).unwrap().dim(), 8);
        // g = z², o(g) = 2 = o(χ(g))? χ(z²) = 1 is rejected
        assert!(GroupDatum::new(c4, 2, sign, Scalar::zero(&f)).is_err());
    }

    #[test]
    fn trivial_triplet_is_the_algebra() {
        let gd = taft_datum(3).unwrap();
        let f = gd.field();
        let z = galois_monomial(&gd, &trivial_cochain(&gd.group, &f), &[0, 1, 2], &Scalar::zero(&f)).unwrap();
        let a = monomial_hopf(&gd).unwrap();
        assert_eq!(z.algebra().dense_mult(), a.algebra().dense_mult());
    }

    #[test]
    fn order16_datum_shape() {
        let gd = order16_datum().unwrap();
        assert_eq!(gd.d(), 2);
        assert!(!gd.is_type_one());
        assert_eq!(monomial_hopf(&gd).unwrap().dim(), 32);
    }

    #[test]
    fn non_identity_u_is_galois_but_not_bicleft() {
        // Z2×Z2 with g = a, χ(b) = 1; the only automorphism fixing g besides id swaps b and ab
        let f = Field::Rational;
        let klein = FiniteGroup::product(&FiniteGroup::cyclic_named(2, "a"), &FiniteGroup::cyclic_named(2, "b"));
        let g = klein.index_of("a").unwrap();
        let (b, ab) = (klein.index_of("b").unwrap(), klein.index_of("ab").unwrap());
        let chi = (0..4).map(|h| Scalar::from_i64(&f, if h == g || h == ab { -1 } else { 1 })).collect();
        let gd = GroupDatum::new(klein, g, chi, Scalar::zero(&f)).unwrap();
        let mut u: Vec<usize> = (0..4).collect();
        u.swap(b, ab);
        let alt = crate::families::klein_alternating_cocycle(&f);
        let z = galois_monomial(&gd, &alt, &u, &Scalar::zero(&f)).unwrap();
        assert!(crate::galois::check_galois(&z));
        assert!(!monomial_bicleft(&gd, &alt, &u).unwrap());
        // χ∘u = χ fails for the trivial cocycle
        assert!(matches!(
            galois_monomial(&gd, &trivial_cochain(&gd.group, &f), &u, &Scalar::zero(&f)),
            Err(HopfError::IncompatibleTriplet(_))
        ));
    }
}
