//! Exact dense and sparse linear algebra over [`Scalar`].

use std::collections::BTreeMap;

use crate::error::{HopfError, Result};
use crate::scalar::{Field, Scalar};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(HopfError::ShapeMismatch("ragged rows".into()));
            }
            for x in row {
                if x.field() != *field {
                    return Err(HopfError::FieldMismatch(format!("{} entry in {field} matrix", x.field())));
                }
                data.push(x);
            }
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data })
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| {
                let x = self.get(i, j);
                if i == j { x.is_one() } else { x.is_zero() }
            }))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(HopfError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(HopfError::ShapeMismatch("matrix sum".into()));
        }
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.rows {
            return Err(HopfError::ShapeMismatch("vector-matrix product".into()));
        }
        let mut out = vec![Scalar::zero(&self.field); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                o.add_mul(a, self.get(i, j));
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(HopfError::ShapeMismatch("matrix-vector product".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut s = Scalar::zero(&self.field);
                for (j, b) in v.iter().enumerate() {
                    s.add_mul(self.get(i, j), b);
                }
                s
            })
            .collect())
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(&self.field, self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = self.get(i / other.rows, j / other.cols);
            if a.is_zero() {
                return Scalar::zero(&self.field);
            }
            a * other.get(i % other.rows, j % other.cols)
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let prow = m.get(r, j);
                    if prow.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * prow);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn determinant_nonzero(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(HopfError::ShapeMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(&self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one(&self.field)
            } else {
                Scalar::zero(&self.field)
            }
        });
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(HopfError::NotInvertible("singular matrix".into()));
        }
        Ok(Matrix::from_fn(&self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Basis of `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(&self.field); self.cols];
                v[f] = Scalar::one(&self.field);
                for (i, &p) in piv.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    /// Some solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let n = self.cols;
        let aug = Matrix::from_fn(&self.field, self.rows, n + 1, |i, j| {
            if j < n { self.get(i, j).clone() } else { b[i].clone() }
        });
        let (r, piv) = aug.rref();
        if piv.last() == Some(&n) {
            return None;
        }
        let mut x = vec![Scalar::zero(&self.field); n];
        for (i, &p) in piv.iter().enumerate() {
            x[p] = r.get(i, n).clone();
        }
        Some(x)
    }
}

/// A sparse linear equation `sum coeffs = rhs`.
#[derive(Clone, Debug)]
pub struct SparseEquation {
    pub coeffs: Vec<(usize, Scalar)>,
    pub rhs: Scalar,
}

/// Solve a sparse square-or-overdetermined system with a unique solution.
/// Returns `NotInvertible` when the solution is not unique or does not exist.
pub fn solve_sparse_unique(field: &Field, unknowns: usize, eqs: Vec<SparseEquation>) -> Result<Vec<Scalar>> {
    // rows keyed by pivot column; the right-hand side lives in column `unknowns`
    let rhs_col = unknowns;
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
    for eq in eqs {
        let mut row: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in eq.coeffs {
            if v.is_zero() {
                continue;
            }
            let e = row.entry(c).or_insert_with(|| Scalar::zero(field));
            *e += &v;
            if e.is_zero() {
                row.remove(&c);
            }
        }
        if !eq.rhs.is_zero() {
            row.insert(rhs_col, eq.rhs);
        }
        loop {
            let lead = row.iter().find(|(c, _)| **c != rhs_col && pivots.contains_key(c)).map(|(c, v)| (*c, v.clone()));
            let Some((c, f)) = lead else { break };
            let prow = &pivots[&c];
            for (pc, pv) in prow {
                let e = row.entry(*pc).or_insert_with(|| Scalar::zero(field));
                *e -= &(&f * pv);
                if e.is_zero() {
                    row.remove(pc);
                }
            }
        }
        let Some((&lead, lv)) = row.iter().next() else { continue };
        if lead == rhs_col {
            return Err(HopfError::NotInvertible("inconsistent linear system".into()));
        }
        let inv = lv.inv()?;
        for v in row.values_mut() {
            *v = &*v * &inv;
        }
        pivots.insert(lead, row);
    }
    if pivots.len() < unknowns {
        return Err(HopfError::NotInvertible(format!(
            "linear system has rank {} < {}",
            pivots.len(),
            unknowns
        )));
    }
    // back substitution from the last pivot
    let mut sol = vec![Scalar::zero(field); unknowns];
    for (&c, row) in pivots.iter().rev() {
        let mut v = row.get(&rhs_col).cloned().unwrap_or_else(|| Scalar::zero(field));
        for (&j, a) in row.range(c + 1..rhs_col) {
            v -= &(a * &sol[j]);
        }
        sol[c] = v;
    }
    Ok(sol)
}

/// Vector helpers.
pub fn zero_vec(field: &Field, n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(field); n]
}

pub fn unit_vec(field: &Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = Scalar::one(field);
    v
}

pub fn axpy(acc: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (o, v) in acc.iter_mut().zip(x) {
        o.add_mul(a, v);
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(&Field::Rational, n)
    }

    #[test]
    fn inverse_and_kernel() {
        let f = Field::Rational;
        let m = Matrix::from_rows(&f, vec![vec![q(2), q(1)], vec![q(1), q(1)]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let s = Matrix::from_rows(&f, vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert!(s.inverse().is_err());
        let k = s.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&s.mul_vec(&k[0]).unwrap()));
    }

    #[test]
    fn sparse_solver_matches_dense() {
        let f = Field::Rational;
        let eqs = vec![
            SparseEquation { coeffs: vec![(0, q(1)), (2, q(1))], rhs: q(3) },
            SparseEquation { coeffs: vec![(1, q(2)), (2, q(-1))], rhs: q(0) },
            SparseEquation { coeffs: vec![(0, q(1)), (1, q(1))], rhs: q(2) },
        ];
        let x = solve_sparse_unique(&f, 3, eqs).unwrap();
        assert_eq!(x, vec![q(1), q(1), q(2)]);
    }
}
