//! Exact scalars: rationals, cyclotomic fields `Q(z_N)` and prime fields `F_p`.
//!
//! Every [`Scalar`] carries its field tag. The `try_*` methods report a
//! [`HopfError::FieldMismatch`] when tags differ; the operator impls panic
//! instead, which is only reachable if a validated structure is bypassed.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};

/// Largest supported cyclotomic conductor.
pub const MAX_CONDUCTOR: u32 = 1000;
/// Largest supported prime modulus (products fit in `u64`).
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// Field tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "cyclotomic")]
    Cyclotomic(u32),
    #[serde(rename = "Fp")]
    Prime(u64),
}

impl Field {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Field::Rational => Ok(()),
            Field::Cyclotomic(n) => {
                if n == 0 || n > MAX_CONDUCTOR {
                    Err(HopfError::InvalidField(format!("cyclotomic conductor {n}")))
                } else {
                    Ok(())
                }
            }
            Field::Prime(p) => {
                if p < 2 || p > MAX_PRIME || !is_prime(p) {
                    Err(HopfError::InvalidField(format!("{p} is not a supported prime")))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Prime(p) => p,
            _ => 0,
        }
    }

    /// Whether the field contains a primitive `m`-th root of unity.
    pub fn has_root_of_unity(&self, m: u64) -> bool {
        match *self {
            Field::Rational => m == 1 || m == 2,
            Field::Cyclotomic(n) => {
                let n = n as u64;
                let top = if n % 2 == 1 { 2 * n } else { n };
                top % m == 0
            }
            Field::Prime(p) => (p - 1) % m == 0,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Cyclotomic(n) => write!(f, "Q(z_{n})"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduction data for `Q(z_N)`: powers `z^k` written in the power basis
/// `1, z, ..., z^(deg-1)`.
#[derive(Debug)]
pub struct CyclotomicData {
    pub n: u32,
    pub deg: usize,
    powers: Vec<Vec<BigRational>>,
}

fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_poly(d);
            num = poly_div_exact(&num, &den);
        }
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn] / den[dn];
        q[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    q
}

impl CyclotomicData {
    fn build(n: u32) -> CyclotomicData {
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        let len = std::cmp::max(n as usize, 2 * deg);
        let mut powers: Vec<Vec<i64>> = Vec::with_capacity(len);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..len {
            powers.push(cur.clone());
            // multiply by z and reduce modulo the monic Phi_N
            let top = cur[deg - 1];
            let mut next = vec![0i64; deg];
            for i in (1..deg).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..deg {
                next[i] -= top * phi[i];
            }
            cur = next;
        }
        let powers = powers
            .into_iter()
            .map(|v| v.into_iter().map(|c| BigRational::from_integer(c.into())).collect())
            .collect();
        CyclotomicData { n, deg, powers }
    }

    /// `z^k` for any integer `k`.
    fn power(&self, k: i64) -> &Vec<BigRational> {
        let k = k.rem_euclid(self.n as i64) as usize;
        &self.powers[k]
    }
}

fn cyclotomic_data(n: u32) -> Arc<CyclotomicData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(CyclotomicData::build(n)))
        .clone()
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Cyc {
        data: Arc<CyclotomicData>,
        coeffs: Vec<BigRational>,
    },
    Fp { p: u64, v: u64 },
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Cyc { data: d1, coeffs: a }, Scalar::Cyc { data: d2, coeffs: b }) => {
                d1.n == d2.n && a == b
            }
            (Scalar::Fp { p: p1, v: a }, Scalar::Fp { p: p2, v: b }) => p1 == p2 && a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn mod_p(x: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = x.mod_floor(&m);
    r.to_u64().expect("residue fits in u64")
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Smallest generator of `F_p^*`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let m = p - 1;
    let mut factors = Vec::new();
    let mut r = m;
    let mut d = 2;
    while d * d <= r {
        if r % d == 0 {
            factors.push(d);
            while r % d == 0 {
                r /= d;
            }
        }
        d += 1;
    }
    if r > 1 {
        factors.push(r);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, m / q, p) != 1))
        .expect("prime fields have primitive roots")
}

impl Scalar {
    pub fn zero(field: &Field) -> Scalar {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: &Field) -> Scalar {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: &Field, v: i64) -> Scalar {
        Scalar::from_rational(field, &rat(v, 1)).expect("integers embed in every field")
    }

    /// `num/den`; fails in `F_p` when `p | den`.
    pub fn from_frac(field: &Field, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(HopfError::ZeroDivision);
        }
        Scalar::from_rational(field, &rat(num, den))
    }

    pub fn from_rational(field: &Field, q: &BigRational) -> Result<Scalar> {
        match *field {
            Field::Rational => Ok(Scalar::Rat(q.clone())),
            Field::Cyclotomic(n) => {
                let data = cyclotomic_data(n);
                let mut coeffs = vec![BigRational::zero(); data.deg];
                coeffs[0] = q.clone();
                Ok(Scalar::Cyc { data, coeffs })
            }
            Field::Prime(p) => {
                let num = mod_p(q.numer(), p);
                let den = mod_p(q.denom(), p);
                if den == 0 {
                    return Err(HopfError::ZeroDivision);
                }
                let inv = pow_mod(den, p - 2, p);
                Ok(Scalar::Fp { p, v: num * inv % p })
            }
        }
    }

    /// The generator `z` of `Q(z_N)` raised to `k`.
    pub fn zeta_power(field: &Field, k: i64) -> Result<Scalar> {
        match *field {
            Field::Cyclotomic(n) => {
                let data = cyclotomic_data(n);
                let coeffs = data.power(k).clone();
                Ok(Scalar::Cyc { data, coeffs })
            }
            _ => Err(HopfError::FieldMismatch(format!("{field} has no distinguished root z"))),
        }
    }

    /// A primitive `m`-th root of unity raised to `k`. In `Q(z_N)` the chosen
    /// primitive root is a power of `z` (or of `-z` for odd `N`); in `F_p` it is a
    /// power of the smallest primitive root.
    pub fn root_of_unity(field: &Field, m: u64, k: i64) -> Result<Scalar> {
        if m == 0 || !field.has_root_of_unity(m) {
            return Err(HopfError::InvalidDatum(format!("{field} has no primitive {m}-th root of unity")));
        }
        let k = k.rem_euclid(m as i64);
        match *field {
            Field::Rational => Ok(Scalar::from_i64(field, if k % 2 == 1 && m == 2 { -1 } else { 1 })),
            Field::Cyclotomic(n) => {
                let n = n as u64;
                if n % m == 0 {
                    Scalar::zeta_power(field, k * (n / m) as i64)
                } else {
                    // odd n, m | 2n: -z is a primitive 2n-th root
                    let w = Scalar::zeta_power(field, 1)?.neg();
                    let e = k * ((2 * n) / m) as i64;
                    Ok(w.pow(e))
                }
            }
            Field::Prime(p) => {
                let g = primitive_root(p);
                let base = pow_mod(g, (p - 1) / m, p);
                Ok(Scalar::Fp { p, v: pow_mod(base, k as u64, p) })
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Cyc { data, .. } => Field::Cyclotomic(data.n),
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Cyc { coeffs, .. } => coeffs.iter().all(|c| c.is_zero()),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Cyc { coeffs, .. } => coeffs[0].is_one() && coeffs[1..].iter().all(|c| c.is_zero()),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// The rational value, if the element lies in the prime subfield `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rat(q) => Some(q.clone()),
            Scalar::Cyc { coeffs, .. } => {
                if coeffs[1..].iter().all(|c| c.is_zero()) {
                    Some(coeffs[0].clone())
                } else {
                    None
                }
            }
            Scalar::Fp { .. } => None,
        }
    }

    /// Residue in `F_p`.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp { v, .. } => Some(*v),
            _ => None,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        let ok = match (self, other) {
            (Scalar::Rat(_), Scalar::Rat(_)) => true,
            (Scalar::Cyc { data: a, .. }, Scalar::Cyc { data: b, .. }) => a.n == b.n,
            (Scalar::Fp { p: a, .. }, Scalar::Fp { p: b, .. }) => a == b,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(HopfError::FieldMismatch(format!("{} vs {}", self.field(), other.field())))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Cyc { data, coeffs: a }, Scalar::Cyc { coeffs: b, .. }) => Scalar::Cyc {
                data: data.clone(),
                coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect(),
            },
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp { p: *p, v: (a + b) % p },
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Cyc { data, coeffs: a }, Scalar::Cyc { coeffs: b, .. }) => {
                let deg = data.deg;
                let mut prod = vec![BigRational::zero(); 2 * deg - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                let mut out: Vec<BigRational> = prod[..deg].to_vec();
                for (k, c) in prod.iter().enumerate().skip(deg) {
                    if c.is_zero() {
                        continue;
                    }
                    for (o, r) in out.iter_mut().zip(&data.powers[k]) {
                        if !r.is_zero() {
                            *o += c * r;
                        }
                    }
                }
                Scalar::Cyc { data: data.clone(), coeffs: out }
            }
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp { p: *p, v: a * b % p },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Cyc { data, coeffs } => Scalar::Cyc {
                data: data.clone(),
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: (p - v) % p },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(HopfError::ZeroDivision);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: pow_mod(*v, p - 2, *p) },
            Scalar::Cyc { data, coeffs } => {
                // Solve (multiplication by self) * w = 1 in the power basis.
                let deg = data.deg;
                let mut m = vec![vec![BigRational::zero(); deg + 1]; deg];
                for j in 0..deg {
                    let mut basis = vec![BigRational::zero(); deg];
                    basis[j] = BigRational::one();
                    let col = self
                        .try_mul(&Scalar::Cyc { data: data.clone(), coeffs: basis })
                        .expect("same field");
                    if let Scalar::Cyc { coeffs: c, .. } = col {
                        for i in 0..deg {
                            m[i][j] = c[i].clone();
                        }
                    }
                }
                m[0][deg] = BigRational::one();
                let sol = solve_rational(m, deg).ok_or(HopfError::ZeroDivision)?;
                let _ = coeffs;
                Scalar::Cyc { data: data.clone(), coeffs: sol }
            }
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 { self.inv().expect("nonzero base for negative power") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Scalar::one(&self.field());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// Parse a canonical scalar string in the given field.
    pub fn parse(field: &Field, s: &str) -> Result<Scalar> {
        let lit: ScalarLiteral = s.parse()?;
        lit.to_scalar(field)
    }

    /// Canonical string form.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

/// Gaussian elimination on an augmented rational matrix with a unique solution.
fn solve_rational(mut m: Vec<Vec<BigRational>>, n: usize) -> Option<Vec<BigRational>> {
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

fn fmt_rat(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{}", fmt_rat(q)),
            Scalar::Fp { p, v } => write!(f, "{v} mod {p}"),
            Scalar::Cyc { coeffs, .. } => {
                let mut out = String::new();
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let neg = c.is_negative();
                    let abs = c.abs();
                    if out.is_empty() {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push(if neg { '-' } else { '+' });
                    }
                    let mono = match k {
                        0 => String::new(),
                        1 => "z".to_string(),
                        _ => format!("z^{k}"),
                    };
                    if k == 0 {
                        out.push_str(&fmt_rat(&abs));
                    } else if abs.is_one() {
                        out.push_str(&mono);
                    } else {
                        out.push_str(&format!("{}*{}", fmt_rat(&abs), mono));
                    }
                }
                if out.is_empty() {
                    out.push('0');
                }
                write!(f, "{out}")
            }
        }
    }
}

/// Field-independent parse of a scalar string: a polynomial in `z` with
/// rational coefficients, or a residue `r mod p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarLiteral {
    /// (exponent of z, coefficient)
    pub terms: Vec<(u64, BigRational)>,
    pub modulus: Option<u64>,
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }
    fn err(&self, msg: &str) -> HopfError {
        HopfError::Parse {
            line: 1,
            column: self.pos + 1,
            message: msg.to_string(),
        }
    }
    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(txt.parse().expect("digit string"))
    }
    fn word(&mut self, w: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(w.as_bytes()) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }
}

impl std::str::FromStr for ScalarLiteral {
    type Err = HopfError;

    fn from_str(s: &str) -> Result<ScalarLiteral> {
        let mut lx = Lexer { s: s.as_bytes(), pos: 0 };
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut sign = BigInt::one();
            if lx.eat(b'-') {
                sign = -sign;
            } else if !first && !lx.eat(b'+') {
                break;
            }
            first = false;
            // coefficient and/or monomial
            let mut coeff = BigRational::one();
            let mut has_coeff = false;
            if matches!(lx.peek(), Some(c) if c.is_ascii_digit()) {
                let n = lx.int()?;
                let d = if lx.eat(b'/') { lx.int()? } else { BigInt::one() };
                if d.is_zero() {
                    return Err(lx.err("zero denominator"));
                }
                coeff = BigRational::new(n, d);
                has_coeff = true;
            }
            let mut exp = 0u64;
            let wants_mono = if has_coeff { lx.eat(b'*') } else { true };
            if wants_mono {
                if !lx.eat(b'z') {
                    return Err(lx.err("expected number or `z`"));
                }
                exp = 1;
                if lx.eat(b'^') {
                    exp = lx.int()?.to_u64().ok_or_else(|| lx.err("exponent too large"))?;
                }
            }
            terms.push((exp, coeff * BigRational::from_integer(sign)));
        }
        let mut modulus = None;
        if lx.word("mod") {
            let p = lx.int()?.to_u64().ok_or_else(|| lx.err("modulus too large"))?;
            if terms.iter().any(|(e, _)| *e != 0) {
                return Err(lx.err("`z` is not allowed with `mod`"));
            }
            modulus = Some(p);
        }
        lx.skip_ws();
        if lx.pos != lx.s.len() {
            return Err(lx.err("unexpected trailing input"));
        }
        Ok(ScalarLiteral { terms, modulus })
    }
}

impl ScalarLiteral {
    pub fn to_scalar(&self, field: &Field) -> Result<Scalar> {
        if let Some(p) = self.modulus {
            if *field != Field::Prime(p) {
                return Err(HopfError::FieldMismatch(format!("literal mod {p} in {field}")));
            }
        }
        let mut acc = Scalar::zero(field);
        for (e, c) in &self.terms {
            let c = Scalar::from_rational(field, c)?;
            let term = if *e == 0 {
                c
            } else {
                let z = Scalar::zeta_power(field, 1).map_err(|_| {
                    HopfError::FieldMismatch(format!("`z` used in {field}"))
                })?;
                &c * &z.pow(*e as i64)
            };
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a, 'b> $tr<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'b Scalar) -> Scalar {
                self.$f(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'b Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl<'b> AddAssign<&'b Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'b Scalar) {
        *self = &*self + rhs;
    }
}

impl<'b> SubAssign<&'b Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &'b Scalar) {
        *self = &*self - rhs;
    }
}

impl Scalar {
    /// `self += a * b` without an intermediate clone of `self`.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (&mut *self, a, b) {
            (Scalar::Rat(s), Scalar::Rat(x), Scalar::Rat(y)) => *s += x * y,
            (Scalar::Fp { p, v }, Scalar::Fp { v: x, .. }, Scalar::Fp { v: y, .. }) => {
                *v = (*v + x * y % *p) % *p
            }
            _ => {
                let t = a * b;
                *self += &t;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_strings() {
        let q = Field::Rational;
        assert_eq!(Scalar::parse(&q, "6/4").unwrap().to_string(), "3/2");
        assert_eq!(Scalar::parse(&q, "-2/1").unwrap().to_string(), "-2");
        assert!(matches!(Scalar::parse(&q, "3//2"), Err(HopfError::Parse { .. })));
    }

    #[test]
    fn cyclotomic_arithmetic() {
        let f = Field::Cyclotomic(3);
        let z = Scalar::zeta_power(&f, 1).unwrap();
        let z2 = &z * &z;
        assert_eq!(z2.to_string(), "-1-z");
        assert!(z.pow(3).is_one());
        let s = &(&Scalar::one(&f) + &z) + &z2;
        assert!(s.is_zero());
        assert_eq!(Scalar::parse(&f, "z^2").unwrap(), z2);
        let w = Scalar::parse(&f, "2+3/2*z").unwrap();
        assert!((&w * &w.inv().unwrap()).is_one());
    }

    #[test]
    fn cyclotomic_display_round_trip() {
        let f = Field::Cyclotomic(8);
        let w = Scalar::parse(&f, "1-z+3/2*z^3").unwrap();
        assert_eq!(w.to_string(), "1-z+3/2*z^3");
        assert_eq!(Scalar::parse(&f, &w.to_string()).unwrap(), w);
        let i = Scalar::root_of_unity(&Field::Cyclotomic(4), 4, 1).unwrap();
        assert!((&i * &i + Scalar::one(&Field::Cyclotomic(4))).is_zero());
    }

    #[test]
    fn prime_field() {
        let f = Field::Prime(5);
        let a = Scalar::parse(&f, "4 mod 5").unwrap();
        assert_eq!((&a * &a).to_string(), "1 mod 5");
        assert_eq!(Scalar::parse(&f, "1/2").unwrap().to_string(), "3 mod 5");
        assert!(Scalar::parse(&Field::Rational, "4 mod 5").is_err());
        let w = Scalar::root_of_unity(&Field::Prime(7), 3, 1).unwrap();
        assert!(w.pow(3).is_one() && !w.is_one());
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = Scalar::one(&Field::Rational);
        let b = Scalar::one(&Field::Prime(3));
        assert!(matches!(a.try_add(&b), Err(HopfError::FieldMismatch(_))));
    }
}
