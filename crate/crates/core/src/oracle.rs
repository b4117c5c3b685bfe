//! Exhaustive enumeration over prime fields: lazy units, lazy 2-cocycles
//! and the quotient `H²_L`, algebra maps, and central pairings.
//!
//! Linear conditions are solved first; the remaining affine space is walked
//! depth-first, checking each quadratic condition as soon as every
//! coordinate it reads is fixed. The walk is bounded by a node budget.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::thread;

use crate::error::{HopfError, Result};
use crate::families::MatchedPair;
use crate::forms::{conv_inverse_bi, conv_inverse_lin, BiForm, Convolve, LinForm, LinMap};
use crate::hopf::{HopfAlgebra, GeneratorKind};
use crate::kac::{central_sides, multiplicative_a_at, multiplicative_b_at, CentralPairing};
use crate::lazy::{coboundary, AlgMapSet};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "HOPFLAB_THREADS";

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub threads: usize,
    /// Budget of search-tree nodes before giving up.
    pub max_nodes: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { threads: threads_from_env(), max_nodes: 100_000_000 }
    }
}

pub fn threads_from_env() -> usize {
    let avail = thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    match std::env::var(THREADS_ENV).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        Some(n) if n >= 1 => n.min(avail.max(1)),
        _ => avail,
    }
}

fn prime_of(field: &Field) -> Result<u64> {
    match field {
        Field::Prime(p) => Ok(*p),
        other => Err(HopfError::FieldMismatch(format!("enumeration needs a prime field, got {other}"))),
    }
}

/// `particular + span(directions)`
#[derive(Clone, Debug)]
pub struct AffineSpace {
    pub particular: Vec<Scalar>,
    pub directions: Vec<Vec<Scalar>>,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }
}

/// Solve `residual(u) = 0` for an affine `residual`, probing it on unit
/// vectors. `None` when inconsistent.
pub fn presolve(field: &Field, unknowns: usize, residual: &dyn Fn(&[Scalar]) -> Vec<Scalar>) -> Option<AffineSpace> {
    let zero = vec![Scalar::zero(field); unknowns];
    let base = residual(&zero);
    if base.is_empty() {
        let directions = (0..unknowns).map(|i| crate::linalg::unit_vec(field, unknowns, i)).collect();
        return Some(AffineSpace { particular: zero, directions });
    }
    let cols: Vec<Vec<Scalar>> = (0..unknowns)
        .map(|i| {
            let mut e = zero.clone();
            e[i] = Scalar::one(field);
            residual(&e).iter().zip(&base).map(|(x, y)| x - y).collect()
        })
        .collect();
    let m = Matrix::from_fn(field, base.len(), unknowns, |r, c| cols[c][r].clone());
    let rhs: Vec<Scalar> = base.iter().map(|x| -x).collect();
    let particular = m.solve(&rhs)?;
    Some(AffineSpace { particular, directions: m.kernel() })
}

/// A polynomial condition reading the listed coordinates.
pub struct Constraint<'a> {
    pub reads: Vec<usize>,
    pub check: Box<dyn Fn(&[Scalar]) -> bool + Sync + 'a>,
}

/// Every point of `space` over `F_p` passing all constraints, in
/// lexicographic order of the coordinates along `space.directions`.
pub fn search(space: &AffineSpace, constraints: &[Constraint<'_>], field: &Field, cfg: &OracleConfig) -> Result<Vec<Vec<Scalar>>> {
    let p = prime_of(field)?;
    let k = space.dim();
    let sparse: Vec<Vec<(usize, Scalar)>> = space
        .directions
        .iter()
        .map(|d| d.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect())
        .collect();
    let mut by_level: Vec<Vec<&Constraint<'_>>> = vec![Vec::new(); k + 1];
    for c in constraints {
        let level = c
            .reads
            .iter()
            .map(|&e| sparse.iter().rposition(|d| d.iter().any(|(i, _)| *i == e)).map_or(0, |l| l + 1))
            .max()
            .unwrap_or(0);
        by_level[level].push(c);
    }
    let start = space.particular.clone();
    if !by_level[0].iter().all(|c| (c.check)(&start)) {
        return Ok(Vec::new());
    }
    if k == 0 {
        return Ok(vec![start]);
    }
    let values: Vec<Scalar> = (0..p).map(|v| Scalar::from_i64(field, v as i64)).collect();
    let budget = Budget { used: AtomicU64::new(0), max: cfg.max_nodes };
    if !budget.charge(p) {
        return Err(HopfError::SearchSpaceTooLarge { residual_dim: k });
    }
    let walk = |first: u64| -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        let mut cur = start.clone();
        step(&mut cur, &sparse[0], &values[first as usize]);
        if by_level[1].iter().all(|c| (c.check)(&cur)) {
            let ctx = Walk { dirs: &sparse, values: &values, by_level: &by_level, budget: &budget };
            descend(1, &mut cur, &ctx, &mut out);
        }
        out
    };
    let threads = cfg.threads.max(1).min(p as usize);
    let slices: Vec<Vec<Vec<Scalar>>> = if threads == 1 {
        (0..p).map(walk).collect()
    } else {
        let mut slots: Vec<Option<Vec<Vec<Scalar>>>> = (0..p).map(|_| None).collect();
        thread::scope(|s| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    let walk = &walk;
                    s.spawn(move || (w as u64..p).step_by(threads).map(|v| (v, walk(v))).collect::<Vec<_>>())
                })
                .collect();
            for h in handles {
                for (v, res) in h.join().expect("worker panicked") {
                    slots[v as usize] = Some(res);
                }
            }
        });
        slots.into_iter().map(|s| s.expect("every slice visited")).collect()
    };
    if budget.exhausted() {
        return Err(HopfError::SearchSpaceTooLarge { residual_dim: k });
    }
    Ok(slices.into_iter().flatten().collect())
}

struct Budget {
    used: AtomicU64,
    max: u64,
}

impl Budget {
    /// Charge `n` nodes; false once the budget is gone.
    fn charge(&self, n: u64) -> bool {
        self.used.fetch_add(n, Ordering::Relaxed) + n <= self.max
    }

    fn exhausted(&self) -> bool {
        self.used.load(Ordering::Relaxed) > self.max
    }
}

struct Walk<'w, 'c> {
    dirs: &'w [Vec<(usize, Scalar)>],
    values: &'w [Scalar],
    by_level: &'w [Vec<&'w Constraint<'c>>],
    budget: &'w Budget,
}

fn step(cur: &mut [Scalar], dir: &[(usize, Scalar)], t: &Scalar) {
    if t.is_zero() {
        return;
    }
    for (i, v) in dir {
        cur[*i].add_mul(t, v);
    }
}

fn unstep(cur: &mut [Scalar], dir: &[(usize, Scalar)], t: &Scalar) {
    if t.is_zero() {
        return;
    }
    let m = -t;
    for (i, v) in dir {
        cur[*i].add_mul(&m, v);
    }
}

fn descend(depth: usize, cur: &mut Vec<Scalar>, w: &Walk<'_, '_>, out: &mut Vec<Vec<Scalar>>) {
    if depth == w.dirs.len() {
        out.push(cur.clone());
        return;
    }
    if !w.budget.charge(w.values.len() as u64) {
        return;
    }
    for t in w.values {
        step(cur, &w.dirs[depth], t);
        if w.by_level[depth + 1].iter().all(|c| (c.check)(cur)) {
            descend(depth + 1, cur, w, out);
        }
        unstep(cur, &w.dirs[depth], t);
    }
}

/// A finite group by multiplication table on `0..order`, identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGroupTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    /// Sorted element orders, an isomorphism invariant.
    pub element_orders: Vec<usize>,
}

impl AbstractGroupTable {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<AbstractGroupTable> {
        let n = table.len();
        let bad = |m: &str| HopfError::InvalidDatum(format!("group table: {m}"));
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("shape"));
        }
        if (0..n).any(|x| table[0][x] != x || table[x][0] != x) {
            return Err(bad("0 is not the identity"));
        }
        if (0..n).any(|x| !(0..n).any(|y| table[x][y] == 0)) {
            return Err(bad("missing inverse"));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        let mut element_orders: Vec<usize> = (0..n)
            .map(|x| {
                let (mut y, mut k) = (x, 1);
                while y != 0 {
                    y = table[y][x];
                    k += 1;
                }
                k
            })
            .collect();
        element_orders.sort_unstable();
        Ok(AbstractGroupTable { order: n, table, element_orders })
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders.last() == Some(&self.order)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// `ℤ_{n₁} × ... ` style label from the order profile (exact for the
    /// small abelian groups met here).
    pub fn describe(&self) -> String {
        if self.order == 1 {
            return "trivial".into();
        }
        if self.is_cyclic() {
            return format!("Z{}", self.order);
        }
        if self.element_orders.iter().all(|&o| o <= 2) {
            let r = self.order.trailing_zeros();
            return vec!["Z2"; r as usize].join("x");
        }
        format!("order {} with element orders {:?}", self.order, self.element_orders)
    }
}

/// Exact-arithmetic key of a vector of residues.
fn key(v: &[Scalar]) -> Vec<u64> {
    v.iter().map(|x| x.as_residue().expect("prime field")).collect()
}

fn lazy1_residual(h: &HopfAlgebra, u: &[Scalar]) -> Vec<Scalar> {
    let mu = LinForm(u.to_vec());
    let id = LinMap::identity(h);
    let mut out = vec![mu.eval(h.unit()) - Scalar::one(h.field())];
    let l = mu.convolve(&id, h).expect("shape");
    let r = id.convolve(&mu, h).expect("shape");
    out.extend(l.0.entries().iter().zip(r.0.entries()).map(|(x, y)| x - y));
    out
}

/// All convolution-invertible lazy `μ` with `μ(1) = 1` (the group `Reg¹_L`).
pub fn enumerate_lazy_units(h: &HopfAlgebra, cfg: &OracleConfig) -> Result<Vec<LinForm>> {
    let f = h.field().clone();
    prime_of(&f)?;
    let n = h.dim();
    let Some(space) = presolve(&f, n, &|u| lazy1_residual(h, u)) else {
        return Ok(Vec::new());
    };
    let units: Vec<LinForm> = search(&space, &[], &f, cfg)?
        .into_iter()
        .map(LinForm)
        .filter(|m| conv_inverse_lin(h, m).is_ok())
        .collect();
    let keys: std::collections::HashSet<Vec<u64>> = units.iter().map(|m| key(&m.0)).collect();
    for a in &units {
        for b in &units {
            if !keys.contains(&key(&a.convolve(b, h)?.0)) {
                return Err(HopfError::InvalidDatum("lazy units not closed under convolution".into()));
            }
        }
    }
    Ok(units)
}

fn lazy2_normal_residual(h: &HopfAlgebra, u: &[Scalar]) -> Vec<Scalar> {
    let n = h.dim();
    let s = BiForm(Matrix::from_fn(h.field(), n, n, |i, j| u[i * n + j].clone()));
    let mut out = Vec::new();
    for a in 0..n {
        let av = h.basis_vec(a);
        out.push(s.eval(h.unit(), &av) - h.counit()[a].clone());
        out.push(s.eval(&av, h.unit()) - h.counit()[a].clone());
    }
    for a in 0..n {
        for b in 0..n {
            let mut l = h.zero();
            let mut r = h.zero();
            for (a1, a2, c) in h.comult_basis(a) {
                for (b1, b2, d) in h.comult_basis(b) {
                    let cd = c * d;
                    for (k, m) in h.mul_basis(*a2, *b2) {
                        l[*k].add_mul(&(&cd * s.at(*a1, *b1)), m);
                    }
                    for (k, m) in h.mul_basis(*a1, *b1) {
                        r[*k].add_mul(&(&cd * s.at(*a2, *b2)), m);
                    }
                }
            }
            out.extend(l.iter().zip(&r).map(|(x, y)| x - y));
        }
    }
    out
}

fn support(v: &[Scalar]) -> impl Iterator<Item = usize> + '_ {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i)
}

/// `σ(a₁,b₁)σ(a₂b₂,c) = σ(b₁,c₁)σ(a,b₂c₂)` at one basis triple, `σ` given
/// by its entries `u[i·n + j]`.
fn left_cocycle_at(h: &HopfAlgebra, u: &[Scalar], a: usize, b: usize, c: usize) -> bool {
    let n = h.dim();
    let mut l = h.zero_scalar();
    for (a1, a2, ca) in h.comult_basis(a) {
        for (b1, b2, cb) in h.comult_basis(b) {
            let s = &u[a1 * n + b1];
            if s.is_zero() {
                continue;
            }
            for (k, m) in h.mul_basis(*a2, *b2) {
                l.add_mul(&(&(ca * cb) * s), &(m * &u[k * n + c]));
            }
        }
    }
    let mut r = h.zero_scalar();
    for (b1, b2, cb) in h.comult_basis(b) {
        for (c1, c2, cc) in h.comult_basis(c) {
            let s = &u[b1 * n + c1];
            if s.is_zero() {
                continue;
            }
            for (k, m) in h.mul_basis(*b2, *c2) {
                r.add_mul(&(&(cb * cc) * s), &(m * &u[a * n + k]));
            }
        }
    }
    l == r
}

fn cocycle_reads(h: &HopfAlgebra, a: usize, b: usize, c: usize) -> Vec<usize> {
    let n = h.dim();
    let mut reads = Vec::new();
    for (a1, a2, _) in h.comult_basis(a) {
        for (b1, b2, _) in h.comult_basis(b) {
            reads.push(a1 * n + b1);
            reads.extend(h.mul_basis(*a2, *b2).iter().map(|(k, _)| k * n + c));
        }
    }
    for (b1, b2, _) in h.comult_basis(b) {
        for (c1, c2, _) in h.comult_basis(c) {
            reads.push(b1 * n + c1);
            reads.extend(h.mul_basis(*b2, *c2).iter().map(|(k, _)| a * n + k));
        }
    }
    reads.sort_unstable();
    reads.dedup();
    reads
}

/// `Z²_L`, `B²_L` and `H²_L = Z²_L / B²_L`.
#[derive(Clone, Debug)]
pub struct Z2LResult {
    pub residual_dim: usize,
    pub z2: Vec<BiForm>,
    pub b2: Vec<BiForm>,
    pub lazy_units: Vec<LinForm>,
    /// One cocycle per class, index-aligned with the quotient table.
    pub representatives: Vec<BiForm>,
    pub quotient: AbstractGroupTable,
}

pub fn enumerate_z2l(h: &HopfAlgebra, cfg: &OracleConfig) -> Result<Z2LResult> {
    let f = h.field().clone();
    prime_of(&f)?;
    let n = h.dim();
    let space = presolve(&f, n * n, &|u| lazy2_normal_residual(h, u))
        .ok_or_else(|| HopfError::InvalidDatum("normalization and laziness are inconsistent".into()))?;
    let constraints: Vec<Constraint<'_>> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .map(|(a, b, c)| Constraint { reads: cocycle_reads(h, a, b, c), check: Box::new(move |u: &[Scalar]| left_cocycle_at(h, u, a, b, c)) })
        .collect();
    let z2: Vec<BiForm> = search(&space, &constraints, &f, cfg)?
        .into_iter()
        .map(|u| BiForm(Matrix::from_fn(&f, n, n, |i, j| u[i * n + j].clone())))
        .filter(|s| conv_inverse_bi(h, s).is_ok())
        .collect();
    let lazy_units = enumerate_lazy_units(h, cfg)?;
    let mut b2: Vec<BiForm> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for mu in &lazy_units {
        let d = coboundary(mu, h)?;
        if seen.insert(key(d.0.entries())) {
            b2.push(d);
        }
    }
    let (representatives, quotient) = quotient_group(h, &z2, &b2)?;
    Ok(Z2LResult { residual_dim: space.dim(), z2, b2, lazy_units, representatives, quotient })
}

/// Coset partition of `z` by the central subgroup `b`, with the induced table.
pub fn quotient_group(h: &HopfAlgebra, z: &[BiForm], b: &[BiForm]) -> Result<(Vec<BiForm>, AbstractGroupTable)> {
    let index: HashMap<Vec<u64>, usize> = z.iter().enumerate().map(|(i, s)| (key(s.0.entries()), i)).collect();
    let unit = BiForm::counit(h);
    let mut class = vec![usize::MAX; z.len()];
    let mut reps: Vec<BiForm> = Vec::new();
    // the trivial class first
    let order: Vec<usize> = index.get(&key(unit.0.entries())).into_iter().copied().chain(0..z.len()).collect();
    for i in order {
        if class[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        for beta in b {
            let prod = z[i].convolve(beta, h)?;
            let j = *index
                .get(&key(prod.0.entries()))
                .ok_or_else(|| HopfError::InvalidDatum("Z²_L not stable under B²_L".into()))?;
            class[j] = c;
        }
        reps.push(z[i].clone());
    }
    let m = reps.len();
    let mut table = vec![vec![0; m]; m];
    for (x, rx) in reps.iter().enumerate() {
        for (y, ry) in reps.iter().enumerate() {
            let prod = rx.convolve(ry, h)?;
            let j = *index
                .get(&key(prod.0.entries()))
                .ok_or_else(|| HopfError::InvalidDatum("Z²_L not closed".into()))?;
            table[x][y] = class[j];
        }
    }
    Ok((reps, AbstractGroupTable::from_table(table)?))
}

fn algebra_map_residual(h: &HopfAlgebra, u: &[Scalar]) -> Vec<Scalar> {
    vec![LinForm(u.to_vec()).eval(h.unit()) - Scalar::one(h.field())]
}

/// All unital algebra maps `A → F_p`, by search.
pub fn enumerate_alg_maps_fp(h: &HopfAlgebra, cfg: &OracleConfig) -> Result<AlgMapSet> {
    let f = h.field().clone();
    prime_of(&f)?;
    let n = h.dim();
    let space = presolve(&f, n, &|u| algebra_map_residual(h, u)).ok_or_else(|| HopfError::InvalidDatum("unit".into()))?;
    let constraints: Vec<Constraint<'_>> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut reads: Vec<usize> = h.mul_basis(a, b).iter().map(|(k, _)| *k).collect();
            reads.extend([a, b]);
            Constraint {
                reads,
                check: Box::new(move |u: &[Scalar]| {
                    let mut s = h.zero_scalar();
                    for (k, c) in h.mul_basis(a, b) {
                        s.add_mul(c, &u[*k]);
                    }
                    s == &u[a] * &u[b]
                }),
            }
        })
        .collect();
    let maps = search(&space, &constraints, &f, cfg)?.into_iter().map(LinForm).collect();
    Ok(AlgMapSet { maps, complete: true })
}

/// Elements `x` of the field with `x^m = 1`.
pub fn roots_of_unity(field: &Field, m: u64) -> Vec<Scalar> {
    let candidates: Vec<Scalar> = match field {
        Field::Rational => vec![Scalar::one(field), Scalar::from_i64(field, -1)],
        Field::Prime(p) => (1..*p).map(|v| Scalar::from_i64(field, v as i64)).collect(),
        Field::Cyclotomic(n) => (0..*n as i64)
            .flat_map(|k| {
                let z = Scalar::zeta_power(field, k).expect("cyclotomic field");
                [z.clone(), -&z]
            })
            .collect(),
    };
    let mut out: Vec<Scalar> = Vec::new();
    for c in candidates {
        if c.pow(m as i64).is_one() && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// All unital algebra maps, solved on generators: grouplikes go to roots of
/// unity of their order, skew-primitive generators to `0`.
pub fn enumerate_alg_maps(h: &HopfAlgebra) -> Result<AlgMapSet> {
    let gens = h.generators().ok_or(HopfError::NoGeneratorData)?;
    let f = h.field().clone();
    let choices: Vec<Vec<Scalar>> = gens
        .generators
        .iter()
        .map(|(_, kind)| match kind {
            GeneratorKind::Grouplike { order } => roots_of_unity(&f, *order),
            GeneratorKind::Nilpotent => vec![Scalar::zero(&f)],
        })
        .collect();
    let mut maps = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let vals: Vec<&Scalar> = idx.iter().zip(&choices).map(|(&i, c)| &c[i]).collect();
        let phi = LinForm(
            gens.words
                .iter()
                .map(|w| w.iter().fold(Scalar::one(&f), |acc, &g| &acc * vals[g]))
                .collect(),
        );
        if phi.is_algebra_map(h).holds() {
            maps.push(phi);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(AlgMapSet { maps, complete: true });
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// All central pairings of a matched pair over `F_p`.
pub fn brute_pairings(mp: &MatchedPair, cfg: &OracleConfig) -> Result<Vec<CentralPairing>> {
    let f = mp.a.field().clone();
    prime_of(&f)?;
    let (na, nb) = (mp.a.dim(), mp.b.dim());
    let to_matrix = |u: &[Scalar]| Matrix::from_fn(&f, nb, na, |i, j| u[i * na + j].clone());
    let linear = |u: &[Scalar]| -> Vec<Scalar> {
        let beta = to_matrix(u);
        let mut out = Vec::new();
        for a in 0..na {
            out.push(crate::kac::pair(&beta, mp.b.unit(), &mp.a.basis_vec(a)) - mp.a.counit()[a].clone());
        }
        for b in 0..nb {
            out.push(crate::kac::pair(&beta, &mp.b.basis_vec(b), mp.a.unit()) - mp.b.counit()[b].clone());
        }
        for b in 0..nb {
            for a in 0..na {
                for left in [false, true] {
                    let (l, r) = central_sides(&beta, mp, b, a, left);
                    out.extend(l.iter().zip(&r).map(|(x, y)| x - y));
                }
            }
        }
        out
    };
    let space = presolve(&f, na * nb, &linear).ok_or_else(|| HopfError::InvalidDatum("unit conditions".into()))?;
    let all_a: Vec<usize> = (0..na).collect();
    let mut constraints: Vec<Constraint<'_>> = Vec::new();
    for bi in 0..nb {
        for bj in 0..nb {
            for ai in 0..na {
                // reads row b₁ for a₁, row b′ for everything, rows of supp(bb′) at a
                let mut reads: Vec<usize> = Vec::new();
                for (b1, _, _) in mp.b.comult_basis(bi) {
                    reads.extend(all_a.iter().map(|a| b1 * na + a));
                }
                reads.extend(all_a.iter().map(|a| bj * na + a));
                for k in support(&mp.b.mul(&mp.b.basis_vec(bi), &mp.b.basis_vec(bj))) {
                    reads.push(k * na + ai);
                }
                let to_m = to_matrix;
                constraints.push(Constraint { reads, check: Box::new(move |u: &[Scalar]| multiplicative_b_at(&to_m(u), mp, bi, bj, ai)) });
            }
        }
    }
    for bi in 0..nb {
        for ai in 0..na {
            for aj in 0..na {
                let mut reads: Vec<usize> = Vec::new();
                for (b1, b2, _) in mp.b.comult_basis(bi) {
                    reads.extend(all_a.iter().map(|a| b1 * na + a));
                    for a2 in 0..na {
                        for k in support(&mp.left[a2][*b2]) {
                            reads.push(k * na + ai);
                        }
                    }
                }
                for k in support(&mp.a.mul(&mp.a.basis_vec(ai), &mp.a.basis_vec(aj))) {
                    reads.push(bi * na + k);
                }
                let to_m = to_matrix;
                constraints.push(Constraint { reads, check: Box::new(move |u: &[Scalar]| multiplicative_a_at(&to_m(u), mp, bi, ai, aj)) });
            }
        }
    }
    let mut out = Vec::new();
    for u in search(&space, &constraints, &f, cfg)? {
        if let Ok(p) = CentralPairing::new(to_matrix(&u), mp) {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{en_algebra, group_algebra, sweedler, FiniteGroup};

    fn cfg() -> OracleConfig {
        OracleConfig { threads: 2, ..OracleConfig::default() }
    }

    #[test]
    fn sweedler_over_f3() {
        let f = Field::Prime(3);
        let h = sweedler(&f).unwrap();
        let r = enumerate_z2l(&h, &cfg()).unwrap();
        assert_eq!(r.lazy_units, vec![LinForm::counit(&h)]);
        assert_eq!(r.z2.len(), 3);
        assert_eq!(r.b2.len(), 1);
        assert_eq!(r.quotient.describe(), "Z3");
    }

    #[test]
    fn z2_over_f5() {
        let f = Field::Prime(5);
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        assert_eq!(enumerate_lazy_units(&k, &cfg()).unwrap().len(), 4);
        let r = enumerate_z2l(&k, &cfg()).unwrap();
        assert_eq!((r.z2.len(), r.b2.len(), r.quotient.order), (4, 2, 2));
    }

    #[test]
    fn algebra_maps() {
        let h = sweedler(&Field::Rational).unwrap();
        let m = enumerate_alg_maps(&h).unwrap();
        assert_eq!(m.maps.len(), 2);
        let e2 = en_algebra(2, &Field::Rational).unwrap();
        assert_eq!(enumerate_alg_maps(&e2).unwrap().maps.len(), 2);
        let h3 = sweedler(&Field::Prime(3)).unwrap();
        let fp = enumerate_alg_maps_fp(&h3, &cfg()).unwrap();
        assert_eq!(fp.maps.len(), 2);
    }

    #[test]
    fn klein_pairings_over_f5() {
        let f = Field::Prime(5);
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        let mp = MatchedPair::trivial(&k, &k).unwrap();
        assert_eq!(brute_pairings(&mp, &cfg()).unwrap().len(), 2);
    }

    #[test]
    fn too_large_is_reported() {
        let f = Field::Prime(5);
        let k = group_algebra(&FiniteGroup::cyclic(2), &f).unwrap();
        let small = OracleConfig { threads: 1, max_nodes: 3 };
        assert!(matches!(enumerate_lazy_units(&k, &small), Err(HopfError::SearchSpaceTooLarge { .. })));
    }
}
