//! Finite-dimensional algebras and Hopf algebras given by structure tensors.
//!
//! Multiplication is stored densely (`mult[i][j]` is the coefficient vector of
//! `b_i b_j`) together with a sparse index used by all computations.
//! Comultiplication is stored as sparse triples `(j, k, c)` meaning
//! `c * b_j ⊗ b_k`. Linear maps use the row convention: row `i` of the
//! antipode matrix is `S(b_i)`.

use std::sync::Arc;

use crate::error::{HopfError, Result};
use crate::linalg::{axpy, zero_vec, Matrix};
use crate::scalar::{Field, Scalar};

/// Sparse vector: `(basis index, coefficient)`, indices increasing, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Result of a predicate: the lexicographically first failing basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    FailsAt(Vec<usize>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Verdict::Holds => None,
            Verdict::FailsAt(w) => Some(w),
        }
    }

    /// Scan tuples in lexicographic order; stop at the first failure.
    pub fn first_failure<I>(tuples: I, mut ok: impl FnMut(&[usize]) -> bool) -> Verdict
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        for t in tuples {
            if !ok(&t) {
                return Verdict::FailsAt(t);
            }
        }
        Verdict::Holds
    }

    pub fn into_result(self, axiom: &str) -> Result<()> {
        match self {
            Verdict::Holds => Ok(()),
            Verdict::FailsAt(w) => Err(HopfError::axiom(axiom, w)),
        }
    }
}

/// All tuples in `0..n` of length `k`, lexicographic.
pub fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(k as u32).unwrap_or(0);
    (0..total).map(move |mut x| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        t
    })
}

pub(crate) fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

#[derive(Debug)]
struct AlgebraData {
    field: Field,
    basis: Vec<String>,
    mult: Vec<Vec<SparseVec>>,
    unit: Vec<Scalar>,
}

/// A finite-dimensional unital algebra. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct Algebra {
    inner: Arc<AlgebraData>,
}

impl Algebra {
    /// Build from a dense multiplication tensor `mult[i][j][k]`.
    pub fn new(field: &Field, basis: Vec<String>, mult: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Result<Algebra> {
        field.validate()?;
        let n = basis.len();
        if mult.len() != n || unit.len() != n {
            return Err(HopfError::ShapeMismatch("algebra tensor dimensions".into()));
        }
        let mut sparse = Vec::with_capacity(n);
        for row in &mult {
            if row.len() != n {
                return Err(HopfError::ShapeMismatch("multiplication row length".into()));
            }
            let mut srow = Vec::with_capacity(n);
            for v in row {
                if v.len() != n {
                    return Err(HopfError::ShapeMismatch("product vector length".into()));
                }
                check_field(field, v)?;
                srow.push(sparse_from_dense(v));
            }
            sparse.push(srow);
        }
        check_field(field, &unit)?;
        Ok(Algebra {
            inner: Arc::new(AlgebraData { field: field.clone(), basis, mult: sparse, unit }),
        })
    }

    /// Build from a rule giving `b_i b_j` as a sparse vector.
    pub fn from_fn(
        field: &Field,
        basis: Vec<String>,
        unit: Vec<Scalar>,
        mut rule: impl FnMut(usize, usize) -> SparseVec,
    ) -> Result<Algebra> {
        field.validate()?;
        let n = basis.len();
        if unit.len() != n {
            return Err(HopfError::ShapeMismatch("unit length".into()));
        }
        let mut mult = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut dense = zero_vec(field, n);
                for (k, c) in rule(i, j) {
                    if k >= n {
                        return Err(HopfError::ShapeMismatch(format!("basis index {k} out of range")));
                    }
                    dense[k] += &c;
                }
                row.push(sparse_from_dense(&dense));
            }
            mult.push(row);
        }
        Ok(Algebra {
            inner: Arc::new(AlgebraData { field: field.clone(), basis, mult, unit }),
        })
    }

    pub fn dim(&self) -> usize {
        self.inner.basis.len()
    }
    pub fn field(&self) -> &Field {
        &self.inner.field
    }
    pub fn basis(&self) -> &[String] {
        &self.inner.basis
    }
    pub fn unit(&self) -> &[Scalar] {
        &self.inner.unit
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.basis.iter().position(|b| b == name)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.inner.mult[i][j]
    }

    pub fn dense_mult(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = zero_vec(self.field(), n);
                        for (k, c) in self.mul_basis(i, j) {
                            v[*k] = c.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    pub fn zero(&self) -> Vec<Scalar> {
        zero_vec(self.field(), self.dim())
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = Scalar::one(self.field());
        v
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k].add_mul(&ab, c);
                }
            }
        }
        out
    }

    /// `b_i * v`
    pub fn mul_basis_vec(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (j, b) in v.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in self.mul_basis(i, j) {
                out[*k].add_mul(b, c);
            }
        }
        out
    }

    /// Matrix of left multiplication by `u`, column convention (`L_u v`).
    pub fn left_regular(&self, u: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for j in 0..n {
            let col = self.mul(u, &self.basis_vec(j));
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    pub fn check_associative(&self) -> Verdict {
        let n = self.dim();
        Verdict::first_failure(tuples(n, 3), |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let ab = sparse_to_dense(self.field(), n, self.mul_basis(a, b));
            let bc = sparse_to_dense(self.field(), n, self.mul_basis(b, c));
            self.mul(&ab, &self.basis_vec(c)) == self.mul(&self.basis_vec(a), &bc)
        })
    }

    pub fn check_unit(&self) -> Verdict {
        let n = self.dim();
        Verdict::first_failure(tuples(n, 1), |t| {
            let b = self.basis_vec(t[0]);
            self.mul(self.unit(), &b) == b && self.mul(&b, self.unit()) == b
        })
    }

    pub fn check_commutative(&self) -> Verdict {
        let n = self.dim();
        Verdict::first_failure(tuples(n, 2), |t| self.mul_basis(t[0], t[1]) == self.mul_basis(t[1], t[0]))
    }

    /// Opposite algebra.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let mult = (0..n).map(|i| (0..n).map(|j| self.mul_basis(j, i).clone()).collect()).collect();
        Algebra {
            inner: Arc::new(AlgebraData {
                field: self.field().clone(),
                basis: self.basis().to_vec(),
                mult,
                unit: self.unit().to_vec(),
            }),
        }
    }
}

pub(crate) fn sparse_to_dense(field: &Field, n: usize, v: &SparseVec) -> Vec<Scalar> {
    let mut out = zero_vec(field, n);
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

pub(crate) fn check_field(field: &Field, v: &[Scalar]) -> Result<()> {
    match v.iter().find(|x| x.field() != *field) {
        Some(x) => Err(HopfError::FieldMismatch(format!("{} entry in {field} structure", x.field()))),
        None => Ok(()),
    }
}

/// Multiply in `A ⊗ B` (index `i * dim B + j`).
pub fn tensor_mul(a: &Algebra, b: &Algebra, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let (na, nb) = (a.dim(), b.dim());
    let mut out = zero_vec(a.field(), na * nb);
    let vnz: Vec<(usize, &Scalar)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for (x, cx) in u.iter().enumerate() {
        if cx.is_zero() {
            continue;
        }
        let (i1, j1) = (x / nb, x % nb);
        for &(y, cy) in &vnz {
            let (i2, j2) = (y / nb, y % nb);
            let pa = a.mul_basis(i1, i2);
            let pb = b.mul_basis(j1, j2);
            if pa.is_empty() || pb.is_empty() {
                continue;
            }
            let c = cx * cy;
            for (k, ck) in pa {
                let ckc = &c * ck;
                for (l, cl) in pb {
                    out[k * nb + l].add_mul(&ckc, cl);
                }
            }
        }
    }
    out
}

/// How a generator constrains characters of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Grouplike of the given order: a character sends it to a root of unity.
    Grouplike { order: u64 },
    /// Skew-commutes with a grouplike by a scalar `q != 1`: every character vanishes.
    Nilpotent,
}

/// Generators of a family algebra and the word spelling each basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorData {
    /// `(basis index, kind)`
    pub generators: Vec<(usize, GeneratorKind)>,
    /// `words[i]` lists generator positions whose product is `b_i`.
    pub words: Vec<Vec<usize>>,
}

#[derive(Debug)]
struct HopfData {
    alg: Algebra,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    comult2: Vec<Vec<(usize, usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    gens: Option<GeneratorData>,
}

/// A finite-dimensional Hopf algebra. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    inner: Arc<HopfData>,
}

/// Axiom-by-axiom verification result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAxiomReport {
    pub checks: Vec<(String, Verdict)>,
}

impl HopfAxiomReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|(_, v)| v.holds())
    }

    pub fn first_failure(&self) -> Option<(&str, &[usize])> {
        self.checks.iter().find_map(|(n, v)| v.witness().map(|w| (n.as_str(), w)))
    }

    pub fn into_result(self) -> Result<()> {
        match self.checks.into_iter().find(|(_, v)| !v.holds()) {
            Some((name, v)) => v.into_result(&name),
            None => Ok(()),
        }
    }
}

impl HopfAlgebra {
    /// Build and verify every Hopf axiom.
    pub fn new(
        alg: Algebra,
        comult: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        let h = HopfAlgebra::new_unchecked(alg, comult, counit, antipode)?;
        h.verify_hopf_axioms().into_result()?;
        Ok(h)
    }

    /// Build after shape and field validation only. Intended for constructions
    /// that are Hopf algebras by design (duals, tensor products, op/cop).
    pub fn new_unchecked(
        alg: Algebra,
        comult: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        let n = alg.dim();
        let field = alg.field().clone();
        if comult.len() != n || counit.len() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(HopfError::ShapeMismatch("coalgebra tensor dimensions".into()));
        }
        check_field(&field, &counit)?;
        if *antipode.field() != field {
            return Err(HopfError::FieldMismatch("antipode field".into()));
        }
        let mut clean = Vec::with_capacity(n);
        for terms in comult {
            let mut dense = zero_vec(&field, n * n);
            for (j, k, c) in terms {
                if j >= n || k >= n {
                    return Err(HopfError::ShapeMismatch("comultiplication index out of range".into()));
                }
                if c.field() != field {
                    return Err(HopfError::FieldMismatch("comultiplication coefficient".into()));
                }
                dense[j * n + k] += &c;
            }
            clean.push(
                dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(x, c)| (x / n, x % n, c))
                    .collect::<Vec<_>>(),
            );
        }
        let comult2 = (0..n)
            .map(|i| {
                let mut dense = zero_vec(&field, n * n * n);
                for (j, k, c) in &clean[i] {
                    for (j1, j2, d) in &clean[*j] {
                        dense[(j1 * n + j2) * n + k].add_mul(c, d);
                    }
                }
                dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(x, c)| (x / (n * n), (x / n) % n, x % n, c))
                    .collect()
            })
            .collect();
        Ok(HopfAlgebra {
            inner: Arc::new(HopfData { alg, comult: clean, comult2, counit, antipode, gens: None }),
        })
    }

    pub fn with_generators(self, gens: GeneratorData) -> HopfAlgebra {
        let d = &self.inner;
        HopfAlgebra {
            inner: Arc::new(HopfData {
                alg: d.alg.clone(),
                comult: d.comult.clone(),
                comult2: d.comult2.clone(),
                counit: d.counit.clone(),
                antipode: d.antipode.clone(),
                gens: Some(gens),
            }),
        }
    }

    pub fn with_basis_names(&self, names: Vec<String>) -> Result<HopfAlgebra> {
        let a = &self.inner.alg;
        if names.len() != a.dim() {
            return Err(HopfError::ShapeMismatch("basis names".into()));
        }
        let alg = Algebra::new(a.field(), names, a.dense_mult(), a.unit().to_vec())?;
        let mut h = HopfAlgebra::new_unchecked(alg, self.inner.comult.clone(), self.inner.counit.clone(), self.inner.antipode.clone())?;
        if let Some(g) = &self.inner.gens {
            h = h.with_generators(g.clone());
        }
        Ok(h)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.inner.alg
    }
    pub fn dim(&self) -> usize {
        self.inner.alg.dim()
    }
    pub fn field(&self) -> &Field {
        self.inner.alg.field()
    }
    pub fn basis(&self) -> &[String] {
        self.inner.alg.basis()
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.alg.index_of(name)
    }
    /// Index of a named basis element; panics if absent (for family code).
    pub fn idx(&self, name: &str) -> usize {
        self.index_of(name).unwrap_or_else(|| panic!("no basis element `{name}`"))
    }
    pub fn unit(&self) -> &[Scalar] {
        self.inner.alg.unit()
    }
    pub fn counit(&self) -> &[Scalar] {
        &self.inner.counit
    }
    pub fn antipode(&self) -> &Matrix {
        &self.inner.antipode
    }
    pub fn generators(&self) -> Option<&GeneratorData> {
        self.inner.gens.as_ref()
    }
    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.inner.comult[i]
    }
    /// `(Δ ⊗ id) Δ (b_i)` as sparse quadruples.
    pub fn comult2_basis(&self, i: usize) -> &[(usize, usize, usize, Scalar)] {
        &self.inner.comult2[i]
    }
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.inner.alg.mul_basis(i, j)
    }
    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.inner.alg.mul(u, v)
    }
    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        self.inner.alg.basis_vec(i)
    }
    pub fn zero(&self) -> Vec<Scalar> {
        self.inner.alg.zero()
    }
    pub fn one_scalar(&self) -> Scalar {
        Scalar::one(self.field())
    }
    pub fn zero_scalar(&self) -> Scalar {
        Scalar::zero(self.field())
    }

    /// Index of the unit if it is a basis element.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit();
        let nz: Vec<usize> = (0..u.len()).filter(|&i| !u[i].is_zero()).collect();
        if nz.len() == 1 && u[nz[0]].is_one() {
            Some(nz[0])
        } else {
            None
        }
    }

    pub fn comult(&self, u: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = zero_vec(self.field(), n * n);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in self.comult_basis(i) {
                out[j * n + k].add_mul(a, c);
            }
        }
        out
    }

    pub fn apply_counit(&self, u: &[Scalar]) -> Scalar {
        let mut s = self.zero_scalar();
        for (a, e) in u.iter().zip(self.counit()) {
            s.add_mul(a, e);
        }
        s
    }

    pub fn apply_antipode(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.antipode().vec_mul(u).expect("dimension checked")
    }

    pub fn antipode_inverse(&self) -> Result<Matrix> {
        self.antipode().inverse().map_err(|_| HopfError::AntipodeNotInvertible)
    }

    pub fn verify_hopf_axioms(&self) -> HopfAxiomReport {
        let n = self.dim();
        let f = self.field().clone();
        let alg = self.algebra();
        let mut checks = vec![
            ("associativity".to_string(), alg.check_associative()),
            ("unit".to_string(), alg.check_unit()),
        ];
        checks.push((
            "coassociativity".into(),
            Verdict::first_failure(tuples(n, 1), |t| {
                let i = t[0];
                let mut right = zero_vec(&f, n * n * n);
                for (j, k, c) in self.comult_basis(i) {
                    for (k1, k2, d) in self.comult_basis(*k) {
                        right[(j * n + k1) * n + k2].add_mul(c, d);
                    }
                }
                let mut left = zero_vec(&f, n * n * n);
                for (a, b, c, d) in self.comult2_basis(i) {
                    left[(a * n + b) * n + c] = d.clone();
                }
                left == right
            }),
        ));
        checks.push((
            "counit".into(),
            Verdict::first_failure(tuples(n, 1), |t| {
                let i = t[0];
                let mut l = self.zero();
                let mut r = self.zero();
                for (j, k, c) in self.comult_basis(i) {
                    l[*k].add_mul(c, &self.counit()[*j]);
                    r[*j].add_mul(c, &self.counit()[*k]);
                }
                let b = self.basis_vec(i);
                l == b && r == b
            }),
        ));
        checks.push((
            "comultiplication is multiplicative".into(),
            Verdict::first_failure(std::iter::once(vec![]).chain(tuples(n, 2)), |t| {
                if t.is_empty() {
                    let mut one = zero_vec(&f, n * n);
                    for (i, a) in self.unit().iter().enumerate() {
                        for (j, b) in self.unit().iter().enumerate() {
                            one[i * n + j] = a * b;
                        }
                    }
                    return self.comult(self.unit()) == one;
                }
                let ab = sparse_to_dense(&f, n, self.mul_basis(t[0], t[1]));
                let lhs = self.comult(&ab);
                let da = self.comult(&self.basis_vec(t[0]));
                let db = self.comult(&self.basis_vec(t[1]));
                lhs == tensor_mul(alg, alg, &da, &db)
            }),
        ));
        checks.push((
            "counit is multiplicative".into(),
            Verdict::first_failure(std::iter::once(vec![]).chain(tuples(n, 2)), |t| {
                if t.is_empty() {
                    return self.apply_counit(self.unit()).is_one();
                }
                let ab = sparse_to_dense(&f, n, self.mul_basis(t[0], t[1]));
                self.apply_counit(&ab) == &self.counit()[t[0]] * &self.counit()[t[1]]
            }),
        ));
        checks.push((
            "antipode".into(),
            Verdict::first_failure(tuples(n, 1), |t| {
                let i = t[0];
                let mut l = self.zero();
                let mut r = self.zero();
                for (j, k, c) in self.comult_basis(i) {
                    let sj = self.antipode().row(*j).to_vec();
                    let sk = self.antipode().row(*k).to_vec();
                    let bj = self.basis_vec(*j);
                    let bk = self.basis_vec(*k);
                    axpy(&mut l, c, &self.mul(&sj, &bk));
                    axpy(&mut r, c, &self.mul(&bj, &sk));
                }
                let mut expect = self.zero();
                axpy(&mut expect, &self.counit()[i], self.unit());
                l == expect && r == expect
            }),
        ));
        HopfAxiomReport { checks }
    }

    /// Structural equality of all tensors (basis names ignored).
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        let n = self.dim();
        n == other.dim()
            && self.field() == other.field()
            && (0..n).all(|i| (0..n).all(|j| self.mul_basis(i, j) == other.mul_basis(i, j)))
            && (0..n).all(|i| self.comult_basis(i) == other.comult_basis(i))
            && self.unit() == other.unit()
            && self.counit() == other.counit()
            && self.antipode() == other.antipode()
    }
}

/// The dual Hopf algebra `H*` in the dual basis.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let n = h.dim();
    let f = h.field().clone();
    let names = h.basis().iter().map(|b| format!("{b}*")).collect();
    let alg = Algebra::from_fn(&f, names, h.counit().to_vec(), |i, j| {
        // (b_i* b_j*)(b_k) = coefficient of b_i ⊗ b_j in Δ(b_k)
        (0..n)
            .filter_map(|k| {
                h.comult_basis(k)
                    .iter()
                    .find(|(a, b, _)| *a == i && *b == j)
                    .map(|(_, _, c)| (k, c.clone()))
            })
            .collect()
    })?;
    let comult = (0..n)
        .map(|k| {
            let mut terms = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if let Some((_, c)) = h.mul_basis(i, j).iter().find(|(x, _)| *x == k) {
                        terms.push((i, j, c.clone()));
                    }
                }
            }
            terms
        })
        .collect();
    HopfAlgebra::new_unchecked(alg, comult, h.unit().to_vec(), h.antipode().transpose())
}

/// `A ⊗ B` with index `i * dim B + j`.
pub fn tensor_hopf(a: &HopfAlgebra, b: &HopfAlgebra) -> Result<HopfAlgebra> {
    if a.field() != b.field() {
        return Err(HopfError::FieldMismatch("tensor factors".into()));
    }
    let (na, nb) = (a.dim(), b.dim());
    let f = a.field().clone();
    let names = a
        .basis()
        .iter()
        .flat_map(|x| b.basis().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let mut unit = zero_vec(&f, na * nb);
    let mut counit = zero_vec(&f, na * nb);
    for i in 0..na {
        for j in 0..nb {
            unit[i * nb + j] = &a.unit()[i] * &b.unit()[j];
            counit[i * nb + j] = &a.counit()[i] * &b.counit()[j];
        }
    }
    let alg = Algebra::from_fn(&f, names, unit, |x, y| {
        let (i1, j1, i2, j2) = (x / nb, x % nb, y / nb, y % nb);
        let mut out = Vec::new();
        for (k, c) in a.mul_basis(i1, i2) {
            for (l, d) in b.mul_basis(j1, j2) {
                out.push((k * nb + l, c * d));
            }
        }
        out
    })?;
    let comult = (0..na * nb)
        .map(|x| {
            let (i, j) = (x / nb, x % nb);
            let mut out = Vec::new();
            for (i1, i2, c) in a.comult_basis(i) {
                for (j1, j2, d) in b.comult_basis(j) {
                    out.push((i1 * nb + j1, i2 * nb + j2, c * d));
                }
            }
            out
        })
        .collect();
    let antipode = a.antipode().kron(b.antipode());
    HopfAlgebra::new_unchecked(alg, comult, counit, antipode)
}

/// `H^op`, `H^cop` or `H^{op,cop}`.
pub fn op_cop(h: &HopfAlgebra, op: bool, cop: bool) -> Result<HopfAlgebra> {
    let alg = if op { h.algebra().opposite() } else { h.algebra().clone() };
    let n = h.dim();
    let comult = (0..n)
        .map(|i| {
            h.comult_basis(i)
                .iter()
                .map(|(j, k, c)| if cop { (*k, *j, c.clone()) } else { (*j, *k, c.clone()) })
                .collect()
        })
        .collect();
    let antipode = if op != cop { h.antipode_inverse()? } else { h.antipode().clone() };
    HopfAlgebra::new_unchecked(alg, comult, h.counit().to_vec(), antipode)
}
