//! Extending comultiplication and antipode from generators along words.

use crate::error::{HopfError, Result};
use crate::hopf::{tensor_mul, Algebra};
use crate::linalg::{unit_vec, Matrix};
use crate::scalar::Scalar;

/// `Δ(b_i)` for every basis element, as the product of the generator images
/// in `A ⊗ A` along `words[i]`. `images[k]` is a dense `n²` vector.
pub(crate) fn comult_from_words(
    alg: &Algebra,
    images: &[Vec<Scalar>],
    words: &[Vec<usize>],
) -> Vec<Vec<(usize, usize, Scalar)>> {
    let n = alg.dim();
    let f = alg.field();
    let one = alg.unit().to_vec();
    let mut unit2 = vec![Scalar::zero(f); n * n];
    for (i, a) in one.iter().enumerate() {
        for (j, b) in one.iter().enumerate() {
            unit2[i * n + j] = a * b;
        }
    }
    words
        .iter()
        .map(|w| {
            let v = w.iter().fold(unit2.clone(), |acc, &k| tensor_mul(alg, alg, &acc, &images[k]));
            v.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(x, c)| (x / n, x % n, c))
                .collect()
        })
        .collect()
}

/// The antipode as an anti-multiplicative extension: `S(b_i)` is the product
/// of the generator images along `words[i]` in reverse order.
pub(crate) fn antipode_from_words(alg: &Algebra, images: &[Vec<Scalar>], words: &[Vec<usize>]) -> Matrix {
    let rows = words
        .iter()
        .map(|w| w.iter().rev().fold(alg.unit().to_vec(), |acc, &k| alg.mul(&acc, &images[k])))
        .collect();
    Matrix::from_rows(alg.field(), rows).expect("square")
}

/// Check that every basis element equals the product along its word.
pub(crate) fn check_words(alg: &Algebra, gens: &[usize], words: &[Vec<usize>]) -> Result<()> {
    let n = alg.dim();
    for (i, w) in words.iter().enumerate() {
        let v = w.iter().fold(alg.unit().to_vec(), |acc, &k| alg.mul(&acc, &alg.basis_vec(gens[k])));
        if v != unit_vec(alg.field(), n, i) {
            return Err(HopfError::InvalidDatum(format!("word for basis element {i} does not spell it")));
        }
    }
    Ok(())
}

/// The multiplicative extension of generator images into `dst`: row `i` is
/// the product of `images` along `words[i]`.
pub(crate) fn multiplicative_extension(dst: &Algebra, images: &[Vec<Scalar>], words: &[Vec<usize>]) -> Matrix {
    let rows = words
        .iter()
        .map(|w| w.iter().fold(dst.unit().to_vec(), |acc, &k| dst.mul(&acc, &images[k])))
        .collect();
    Matrix::from_rows(dst.field(), rows).expect("rectangular")
}
