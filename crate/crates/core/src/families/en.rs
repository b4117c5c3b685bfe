//! Sweedler's algebra `H₄` and the family `E(n)`.
//!
//! `E(n)` has basis `c^a x_P` at index `2·mask(P) + a`, where bit `i` of the
//! mask stands for `x_{i+1}`. For `n = 2` this is
//! `[1, c, x1, cx1, x2, cx2, x1x2, cx1x2]`.

use crate::error::{HopfError, Result};
use crate::forms::{BiForm, LinForm, LinMap};
use crate::hopf::{dual_hopf, Algebra, GeneratorData, GeneratorKind, HopfAlgebra};
use crate::lazy::coboundary;
use crate::linalg::{unit_vec, zero_vec, Matrix};
use crate::scalar::{Field, Scalar};

use super::words::{antipode_from_words, comult_from_words, multiplicative_extension};

/// Largest supported `n` (dimension `2^{n+1}`).
pub const MAX_EN: usize = 6;

pub fn en_index(a: usize, mask: usize) -> usize {
    2 * mask + a
}

/// Index of `x_i` (1-based `i`).
pub fn en_x(i: usize) -> usize {
    en_index(0, 1 << (i - 1))
}

/// Index of `x_i x_j` with `i < j` (1-based).
pub fn en_xx(i: usize, j: usize) -> usize {
    en_index(0, (1 << (i - 1)) | (1 << (j - 1)))
}

fn en_name(a: usize, mask: usize, n: usize) -> String {
    let mut s = String::new();
    if a == 1 {
        s.push('c');
    }
    for i in 0..n {
        if mask >> i & 1 == 1 {
            s.push_str(&format!("x{}", i + 1));
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// `x_P x_Q` as `(sign, mask)`, or `None` when `P ∩ Q ≠ ∅`.
pub(crate) fn wedge(p: usize, q: usize) -> Option<(bool, usize)> {
    if p & q != 0 {
        return None;
    }
    // count pairs (i ∈ P, j ∈ Q) with i > j
    let mut inversions = 0u32;
    let mut qq = q;
    while qq != 0 {
        let j = qq.trailing_zeros();
        inversions += (p >> (j + 1)).count_ones();
        qq &= qq - 1;
    }
    Some((inversions % 2 == 1, p | q))
}

fn check_char(field: &Field) -> Result<()> {
    field.validate()?;
    if field.characteristic() == 2 {
        return Err(HopfError::CharTwo);
    }
    Ok(())
}

/// `E(n)`: `c² = 1`, `c x_i = -x_i c`, `x_i x_j = -x_j x_i`, `x_i² = 0`,
/// `Δc = c⊗c`, `Δx_i = 1⊗x_i + x_i⊗c`.
pub fn en_algebra(n: usize, field: &Field) -> Result<HopfAlgebra> {
    check_char(field)?;
    if n == 0 || n > MAX_EN {
        return Err(HopfError::InvalidDatum(format!("E(n) needs 1 <= n <= {MAX_EN}")));
    }
    let dim = 2usize << n;
    let names = (0..dim).map(|i| en_name(i % 2, i / 2, n)).collect();
    let one = Scalar::one(field);
    let alg = Algebra::from_fn(field, names, unit_vec(field, dim, 0), |i, j| {
        let (a, p) = (i % 2, i / 2);
        let (b, q) = (j % 2, j / 2);
        match wedge(p, q) {
            None => vec![],
            Some((neg, m)) => {
                // moving c^b past x_P contributes (-1)^{b|P|}
                let flip = neg ^ (b == 1 && p.count_ones() % 2 == 1);
                let c = if flip { -&one } else { one.clone() };
                vec![(en_index((a + b) % 2, m), c)]
            }
        }
    })?;
    let gens: Vec<usize> = std::iter::once(1).chain((1..=n).map(en_x)).collect();
    let words: Vec<Vec<usize>> = (0..dim)
        .map(|i| {
            let mut w = Vec::new();
            if i % 2 == 1 {
                w.push(0);
            }
            for k in 0..n {
                if (i / 2) >> k & 1 == 1 {
                    w.push(k + 1);
                }
            }
            w
        })
        .collect();
    super::words::check_words(&alg, &gens, &words)?;
    let d2 = dim * dim;
    let mut images = Vec::new();
    let mut dc = zero_vec(field, d2);
    dc[dim + 1] = one.clone();
    images.push(dc);
    for i in 1..=n {
        let mut dx = zero_vec(field, d2);
        dx[en_x(i)] = one.clone();
        dx[en_x(i) * dim + 1] = one.clone();
        images.push(dx);
    }
    let comult = comult_from_words(&alg, &images, &words);
    let mut s_images = vec![unit_vec(field, dim, 1)];
    for i in 1..=n {
        s_images.push(unit_vec(field, dim, en_x(i) + 1));
    }
    let antipode = antipode_from_words(&alg, &s_images, &words);
    let counit = (0..dim).map(|i| if i < 2 { one.clone() } else { Scalar::zero(field) }).collect();
    let gen_data = GeneratorData {
        generators: gens
            .iter()
            .enumerate()
            .map(|(k, &g)| (g, if k == 0 { GeneratorKind::Grouplike { order: 2 } } else { GeneratorKind::Nilpotent }))
            .collect(),
        words,
    };
    Ok(HopfAlgebra::new(alg, comult, counit, antipode)?.with_generators(gen_data))
}

/// Sweedler's four-dimensional Hopf algebra with basis `[1, g, x, gx]`.
pub fn sweedler(field: &Field) -> Result<HopfAlgebra> {
    en_algebra(1, field)?.with_basis_names(vec!["1".into(), "g".into(), "x".into(), "gx".into()])
}

/// The lazy cocycle `σ_t` on `H₄`.
pub fn sigma_t(h4: &HopfAlgebra, t: &Scalar) -> Result<BiForm> {
    if h4.dim() != 4 {
        return Err(HopfError::ShapeMismatch("σ_t lives on H₄".into()));
    }
    let f = h4.field().clone();
    if t.field() != f {
        return Err(HopfError::FieldMismatch("parameter t".into()));
    }
    let half = t.try_div(&Scalar::from_i64(&f, 2))?;
    let (one, zero) = (Scalar::one(&f), Scalar::zero(&f));
    let eps = h4.counit().to_vec();
    Ok(BiForm::from_fn(h4, |i, j| match (i, j) {
        (0, _) => eps[j].clone(),
        (_, 0) => eps[i].clone(),
        (1, 1) => one.clone(),
        (2, 2) | (3, 2) => half.clone(),
        (2, 3) | (3, 3) => -&half,
        _ => zero.clone(),
    }))
}

/// `Φ : E(n) → E(n)*`, `c ↦ 1* - c*`, `x_i ↦ x_i* + (c x_i)*`, extended
/// multiplicatively into the dual. Returns the map and the dual algebra.
pub fn en_self_duality(h: &HopfAlgebra) -> Result<(LinMap, HopfAlgebra)> {
    let gens = h.generators().ok_or(HopfError::NoGeneratorData)?;
    let dual = dual_hopf(h)?;
    let f = h.field().clone();
    let n = h.dim();
    let mut images = Vec::new();
    for (g, _) in &gens.generators {
        let mut v = zero_vec(&f, n);
        if *g == 1 {
            v[0] = Scalar::one(&f);
            v[1] = Scalar::from_i64(&f, -1);
        } else {
            v[*g] = Scalar::one(&f);
            v[*g + 1] = Scalar::one(&f);
        }
        images.push(v);
    }
    Ok((LinMap(multiplicative_extension(dual.algebra(), &images, &gens.words)), dual))
}

/// `α_M : c ↦ c`, `x_i ↦ Σ_j m_ij x_j`.
pub fn en_automorphism(h: &HopfAlgebra, m: &Matrix) -> Result<LinMap> {
    let gens = h.generators().ok_or(HopfError::NoGeneratorData)?;
    let nx = gens.generators.len() - 1;
    if m.rows() != nx || m.cols() != nx {
        return Err(HopfError::ShapeMismatch("automorphism matrix".into()));
    }
    let f = h.field().clone();
    let mut images = vec![unit_vec(&f, h.dim(), 1)];
    for i in 0..nx {
        let mut v = zero_vec(&f, h.dim());
        for j in 0..nx {
            v[en_x(j + 1)] = m.get(i, j).clone();
        }
        images.push(v);
    }
    Ok(LinMap(multiplicative_extension(h.algebra(), &images, &gens.words)))
}

/// `α_t` on `H₄`: `g ↦ g`, `x ↦ t x`.
pub fn alpha_t(h4: &HopfAlgebra, t: &Scalar) -> Result<LinMap> {
    en_automorphism(h4, &Matrix::from_fn(h4.field(), 1, 1, |_, _| t.clone()))
}

fn en_rank(h: &HopfAlgebra) -> Result<usize> {
    let d = h.dim();
    if d < 4 || !d.is_power_of_two() {
        return Err(HopfError::ShapeMismatch("not an E(n) basis".into()));
    }
    Ok(d.trailing_zeros() as usize - 1)
}

/// `γ_θ = ε + Σ_{i<j} θ(x_i,x_j) ((x_i x_j)* + (c x_i x_j)*)`.
pub fn gamma_theta(theta: &BiForm, h: &HopfAlgebra) -> Result<LinForm> {
    let n = en_rank(h)?;
    let mut g = h.counit().to_vec();
    for i in 1..=n {
        for j in i + 1..=n {
            let l = theta.at(en_x(i), en_x(j)).clone();
            g[en_xx(i, j)] = l.clone();
            g[en_xx(i, j) + 1] = l;
        }
    }
    Ok(LinForm(g))
}

/// The invariant `Ψ(σ)`: the `n × n` matrix `(σ ∗ ∂γ_σ)(x_i, x_j)`, which is
/// lower triangular for lazy `σ`.
pub fn psi_invariant(sigma: &BiForm, h: &HopfAlgebra) -> Result<Matrix> {
    let n = en_rank(h)?;
    let g = gamma_theta(sigma, h)?;
    let corrected = crate::lazy::conv_bi(h, sigma, &coboundary(&g, h)?)?;
    Ok(Matrix::from_fn(h.field(), n, n, |i, j| corrected.at(en_x(i + 1), en_x(j + 1)).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lazy::is_hopf_morphism;

    #[test]
    fn sweedler_is_e1() {
        let f = Field::Rational;
        let h = sweedler(&f).unwrap();
        let e1 = en_algebra(1, &f).unwrap();
        assert!(h.same_structure(&e1));
        assert_eq!(h.basis(), ["1", "g", "x", "gx"]);
    }

    #[test]
    fn e2_relations() {
        let f = Field::Rational;
        let e = en_algebra(2, &f).unwrap();
        assert_eq!(e.dim(), 8);
        let x1 = e.basis_vec(en_x(1));
        let x2 = e.basis_vec(en_x(2));
        let c = e.basis_vec(1);
        let sum = |u: Vec<Scalar>, v: Vec<Scalar>| u.iter().zip(&v).map(|(a, b)| a + b).collect::<Vec<_>>();
        assert!(crate::linalg::is_zero_vec(&sum(e.mul(&x1, &x2), e.mul(&x2, &x1))));
        assert!(crate::linalg::is_zero_vec(&sum(e.mul(&c, &x1), e.mul(&x1, &c))));
        assert!(crate::linalg::is_zero_vec(&e.mul(&x2, &x2)));
    }

    #[test]
    fn char_two_rejected() {
        assert_eq!(en_algebra(1, &Field::Prime(2)).unwrap_err(), HopfError::CharTwo);
    }

    #[test]
    fn self_duality_is_hopf_iso() {
        for n in 1..=2 {
            let e = en_algebra(n, &Field::Rational).unwrap();
            let (phi, dual) = en_self_duality(&e).unwrap();
            assert!(is_hopf_morphism(&phi, &e, &dual), "n = {n}");
            assert!(phi.0.determinant_nonzero());
        }
    }
}
