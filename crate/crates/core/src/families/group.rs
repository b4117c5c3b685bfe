//! Finite groups by multiplication table, group algebras and group 2-cochains.

use std::collections::VecDeque;

use crate::error::{HopfError, Result};
use crate::hopf::{Algebra, GeneratorData, GeneratorKind, HopfAlgebra};
use crate::linalg::{unit_vec, Matrix};
use crate::scalar::{Field, Scalar};

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a multiplication table.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(HopfError::InvalidDatum("malformed group table".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| HopfError::InvalidDatum("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| HopfError::InvalidDatum(format!("element {x} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(HopfError::InvalidDatum(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, table, identity, inverse })
    }

    /// Cyclic group of order `n` with elements named `s^k` (`1` for `k = 0`).
    pub fn cyclic_named(n: usize, s: &str) -> FiniteGroup {
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => s.to_string(),
                _ => format!("{s}^{k}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(names, table).expect("cyclic table")
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic_named(n, "g")
    }

    /// Direct product, index `i * |H| + j`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (m, n) = (g.order(), h.order());
        let names = (0..m * n)
            .map(|x| {
                let (a, b) = (&g.names[x / n], &h.names[x % n]);
                match (a.as_str(), b.as_str()) {
                    ("1", "1") => "1".to_string(),
                    ("1", _) => b.clone(),
                    (_, "1") => a.clone(),
                    _ => format!("{a}{b}"),
                }
            })
            .collect();
        let table = (0..m * n)
            .map(|x| (0..m * n).map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n)).collect())
            .collect();
        FiniteGroup::from_table(names, table).expect("product of groups")
    }

    /// The group `⟨a, b, g | a² = b² = g⁴ = 1, g central, ab = bag²⟩` of order 16,
    /// elements `a^α b^β g^γ` at index `8α + 4β + γ`.
    pub fn order16_example() -> FiniteGroup {
        let idx = |al: usize, be: usize, ga: usize| 8 * al + 4 * be + ga;
        let mut names = vec![String::new(); 16];
        let mut table = vec![vec![0; 16]; 16];
        for al in 0..2 {
            for be in 0..2 {
                for ga in 0..4 {
                    let mut s = String::new();
                    if al == 1 {
                        s.push('a');
                    }
                    if be == 1 {
                        s.push('b');
                    }
                    match ga {
                        0 => {}
                        1 => s.push('g'),
                        _ => s.push_str(&format!("g^{ga}")),
                    }
                    if s.is_empty() {
                        s.push('1');
                    }
                    names[idx(al, be, ga)] = s;
                    for al2 in 0..2 {
                        for be2 in 0..2 {
                            for ga2 in 0..4 {
                                // b^β a^α' = a^α' b^β g^(2βα')
                                let g = (ga + ga2 + 2 * be * al2) % 4;
                                table[idx(al, be, ga)][idx(al2, be2, ga2)] = idx((al + al2) % 2, (be + be2) % 2, g);
                            }
                        }
                    }
                }
            }
        }
        FiniteGroup::from_table(names, table).expect("order 16 group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.elem_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| self.is_central(a))
    }

    /// Is `u` (as a permutation of indices) an automorphism?
    pub fn is_automorphism(&self, u: &[usize]) -> bool {
        let n = self.order();
        if u.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in u {
            if x >= n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        (0..n).all(|a| (0..n).all(|b| u[self.mul(a, b)] == self.mul(u[a], u[b])))
    }

    /// A generating set chosen greedily by index, and for every element a word
    /// in those generators (shortest by breadth-first search).
    pub fn generators_and_words(&self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = self.order();
        let mut gens: Vec<usize> = Vec::new();
        let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
        words[self.identity] = Some(vec![]);
        loop {
            // closure under right multiplication by current generators
            let mut queue: VecDeque<usize> = (0..n).filter(|&x| words[x].is_some()).collect();
            while let Some(x) = queue.pop_front() {
                for (gi, &g) in gens.iter().enumerate() {
                    let y = self.mul(x, g);
                    if words[y].is_none() {
                        let mut w = words[x].clone().expect("reached");
                        w.push(gi);
                        words[y] = Some(w);
                        queue.push_back(y);
                    }
                }
            }
            match (0..n).find(|&x| words[x].is_none()) {
                Some(x) => gens.push(x),
                None => break,
            }
        }
        (gens, words.into_iter().map(|w| w.expect("all reached")).collect())
    }

    /// Quotient by the central cyclic subgroup `⟨g⟩`: the quotient group and the
    /// projection as an index map.
    pub fn quotient_by_central(&self, g: usize) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_central(g) {
            return Err(HopfError::InvalidDatum("quotient element is not central".into()));
        }
        let n = self.order();
        let sub: Vec<usize> = (0..self.elem_order(g)).map(|k| self.pow(g, k)).collect();
        let mut class = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if class[x] == usize::MAX {
                let c = reps.len();
                reps.push(x);
                for &s in &sub {
                    class[self.mul(x, s)] = c;
                }
            }
        }
        let names = reps.iter().map(|&r| format!("[{}]", self.names[r])).collect();
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| class[self.mul(a, b)]).collect())
            .collect();
        Ok((FiniteGroup::from_table(names, table)?, class))
    }
}

fn group_generator_data(g: &FiniteGroup) -> GeneratorData {
    let (gens, words) = g.generators_and_words();
    GeneratorData {
        generators: gens
            .iter()
            .map(|&x| (x, GeneratorKind::Grouplike { order: g.elem_order(x) as u64 }))
            .collect(),
        words,
    }
}

/// `k[G]` with grouplike basis.
pub fn group_algebra(g: &FiniteGroup, field: &Field) -> Result<HopfAlgebra> {
    let n = g.order();
    let alg = Algebra::from_fn(field, g.names().to_vec(), unit_vec(field, n, g.identity()), |a, b| {
        vec![(g.mul(a, b), Scalar::one(field))]
    })?;
    let comult = (0..n).map(|a| vec![(a, a, Scalar::one(field))]).collect();
    let counit = vec![Scalar::one(field); n];
    let antipode = Matrix::from_fn(field, n, n, |i, j| {
        if g.inv(i) == j { Scalar::one(field) } else { Scalar::zero(field) }
    });
    Ok(HopfAlgebra::new(alg, comult, counit, antipode)?.with_generators(group_generator_data(g)))
}

/// `k^G`, the dual of `k[G]`, in the basis of point functions `δ_h`.
pub fn dual_group_algebra(g: &FiniteGroup, field: &Field) -> Result<HopfAlgebra> {
    let kg = group_algebra(g, field)?;
    let d = crate::hopf::dual_hopf(&kg)?;
    let names = g.names().iter().map(|h| format!("δ_{h}")).collect();
    let d = d.with_basis_names(names)?;
    d.verify_hopf_axioms().into_result()?;
    Ok(d)
}

/// A group 2-cochain `G × G → k`, entry `(x, y)` is `σ(x, y)`.
pub type GroupCochain = Matrix;

pub fn trivial_cochain(g: &FiniteGroup, field: &Field) -> GroupCochain {
    Matrix::from_fn(field, g.order(), g.order(), |_, _| Scalar::one(field))
}

/// Normalized, invertible, and `σ(x,y)σ(xy,z) = σ(y,z)σ(x,yz)`.
pub fn is_group_cocycle(s: &GroupCochain, g: &FiniteGroup) -> bool {
    let n = g.order();
    let e = g.identity();
    if s.rows() != n || s.cols() != n || s.entries().iter().any(Scalar::is_zero) {
        return false;
    }
    if (0..n).any(|x| !s.get(e, x).is_one() || !s.get(x, e).is_one()) {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| s.get(x, y) * s.get(g.mul(x, y), z) == s.get(y, z) * s.get(x, g.mul(y, z)))
        })
    })
}

/// Membership in `Z²_{L,g}(G, k·)`: `σ(g,h) = σ(h,g)` and there is `μ : G → k·`
/// with `μ(1) = μ(g) = 1` and `σ(g,h) = μ(h) μ(gh)⁻¹`. Returns the witness `μ`.
pub fn z2lg_witness(s: &GroupCochain, g: &FiniteGroup, gen: usize) -> Result<Option<Vec<Scalar>>> {
    if !is_group_cocycle(s, g) {
        return Err(HopfError::NotACocycle("group 2-cochain".into()));
    }
    let n = g.order();
    if (0..n).any(|h| s.get(gen, h) != s.get(h, gen)) {
        return Ok(None);
    }
    let field = s.field().clone();
    let mut mu: Vec<Option<Scalar>> = vec![None; n];
    // walk each coset h, gh, g²h, ... using μ(gh) = μ(h) σ(g,h)⁻¹
    for start in 0..n {
        if mu[start].is_some() {
            continue;
        }
        mu[start] = Some(Scalar::one(&field));
        let mut h = start;
        loop {
            let next = g.mul(gen, h);
            let val = mu[h].clone().expect("set") * s.get(gen, h).inv()?;
            if next == start {
                if !val.is_one() {
                    return Ok(None);
                }
                break;
            }
            mu[next] = Some(val);
            h = next;
        }
    }
    let mu: Vec<Scalar> = mu.into_iter().map(|x| x.expect("all cosets visited")).collect();
    debug_assert!(mu[g.identity()].is_one() && mu[gen].is_one());
    Ok(Some(mu))
}

pub fn z2lg_membership(s: &GroupCochain, g: &FiniteGroup, gen: usize) -> Result<bool> {
    Ok(z2lg_witness(s, g, gen)?.is_some())
}

/// Pull a 2-cochain on `G/⟨g⟩` back along the projection.
pub fn theta_map(s_quot: &GroupCochain, g: &FiniteGroup, gen: usize) -> Result<GroupCochain> {
    let (q, proj) = g.quotient_by_central(gen)?;
    if !is_group_cocycle(s_quot, &q) {
        return Err(HopfError::NotACocycle("quotient 2-cochain".into()));
    }
    Ok(Matrix::from_fn(s_quot.field(), g.order(), g.order(), |x, y| s_quot.get(proj[x], proj[y]).clone()))
}

/// The alternating cocycle `((a,b),(a',b')) ↦ (-1)^{b a'}` on `Z₂ × Z₂`
/// (index `2a + b`).
pub fn klein_alternating_cocycle(field: &Field) -> GroupCochain {
    Matrix::from_fn(field, 4, 4, |x, y| {
        let b = x % 2;
        let a2 = y / 2;
        Scalar::from_i64(field, if b * a2 == 1 { -1 } else { 1 })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order16_group_is_nonabelian_with_central_g() {
        let g = FiniteGroup::order16_example();
        assert_eq!(g.order(), 16);
        assert!(!g.is_abelian());
        let gg = g.index_of("g").unwrap();
        assert!(g.is_central(gg));
        assert_eq!(g.elem_order(gg), 4);
        let a = g.index_of("a").unwrap();
        let b = g.index_of("b").unwrap();
        assert_eq!(g.mul(a, b), g.mul(g.mul(b, a), g.pow(gg, 2)));
    }

    #[test]
    fn words_spell_elements() {
        let g = FiniteGroup::order16_example();
        let (gens, words) = g.generators_and_words();
        for (x, w) in words.iter().enumerate() {
            let prod = w.iter().fold(g.identity(), |acc, &i| g.mul(acc, gens[i]));
            assert_eq!(prod, x);
        }
    }

    #[test]
    fn z2lg_membership_cases() {
        let f = Field::Rational;
        let k = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic_named(2, "h"));
        let triv = trivial_cochain(&k, &f);
        assert!(z2lg_membership(&triv, &k, 2).unwrap());
        let alt = klein_alternating_cocycle(&f);
        assert!(is_group_cocycle(&alt, &k));
        // σ(g,h) ≠ σ(h,g) for g = (1,0), h = (0,1)
        assert!(!z2lg_membership(&alt, &k, 2).unwrap());
    }

    #[test]
    fn theta_pullback_is_trivial_on_g() {
        let f = Field::Rational;
        let c4 = FiniteGroup::cyclic(4);
        let (q, _) = c4.quotient_by_central(2).unwrap();
        let s = theta_map(&trivial_cochain(&q, &f), &c4, 2).unwrap();
        assert!((0..4).all(|h| s.get(2, h).is_one()));
    }
}
