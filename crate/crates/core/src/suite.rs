//! The acceptance suite: criteria A1–A11, each a self-contained check that
//! reports pass/fail with a short detail line.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::crossed::{act_on_crossed, check_crossed_system, dual_numbers_system, CrossedSystem};
use crate::error::HopfError;
use crate::families::{
    double_crossed, drinfeld_double, en_algebra, en_bosonization_iso, exp_twist_cocycle, galois_monomial, group_algebra,
    monomial_hopf, monomial_section, order16_datum, psi_invariant, sigma_t, sweedler, taft_datum, trivial_cochain,
    twisted_power_invariant, FiniteGroup, MatchedPair, SuperSpace,
};
use crate::forms::{conv_inverse_bi, conv_inverse_lin, frac, BiForm, Convolve, LinForm};
use crate::galois::{
    check_galois, check_gen_antipode, cocycle_from_cleft, comodule_map_report, cotensor, delta_into_cotensor, galois_object,
    gen_antipode, Side,
};
use crate::hopf::{tensor_hopf, HopfAlgebra};
use crate::kac::{l_morphism_report, lambda_map, lambda_witness, restrict, scalar_map, sigma_from_pairing, yamazaki_join};
use crate::lazy::{
    ad_map, classify_cointernal, coboundary, cocycle_report, is_absolutely_central, is_almost_lazy, is_lazy2, is_left_cocycle,
    is_reg2, is_right_cocycle, lazy_form_space, verify_coboundary_witness, CoinnerClass,
};
use crate::linalg::Matrix;
use crate::oracle::{brute_pairings, enumerate_alg_maps, enumerate_lazy_units, enumerate_z2l, OracleConfig};
use crate::projrep::{check_projrep, coevaluation, dual_projrep, evaluation, is_basic_morphism, regular_projrep, tensor_projrep, ProjRep};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Everything except the finite-field enumerations.
    Quick,
    Full,
}

impl std::str::FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Level, String> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level {other:?} (quick | full)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
    pub runtime_ms: u128,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(f, "{} {:<4} {} ({} ms): {}", s, self.id, self.title, self.runtime_ms, self.detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub level: Level,
    pub criteria: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["passed"] = serde_json::Value::Bool(self.passed());
        v
    }
}

/// A failed check.
#[derive(Debug)]
pub struct Fail(pub String);

impl From<HopfError> for Fail {
    fn from(e: HopfError) -> Fail {
        Fail(e.to_string())
    }
}

pub type Check = std::result::Result<String, Fail>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(Fail(format!($($msg)*)));
        }
    };
}

pub const IDS: [&str; 11] = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11"];

pub fn title(id: &str) -> &'static str {
    match id {
        "A1" => "sigma_t family on H4",
        "A2" => "coboundary operator identities",
        "A3" => "finite-field lazy cohomology",
        "A4" => "E(2) exponential twists",
        "A5" => "Galois objects and cotensor",
        "A6" => "generalized antipode",
        "A7" => "central pairings and joins",
        "A8" => "Drinfeld double of H4",
        "A9" => "Taft invariant",
        "A10" => "crossed systems and projective representations",
        "A11" => "cointernal but not coinner automorphism",
        _ => "unknown",
    }
}

pub fn run_criterion(id: &'static str, level: Level) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        "A1" => check_a1(),
        "A2" => check_a2(),
        "A3" if level == Level::Quick => Ok("skipped at quick level".into()),
        "A3" => check_a3(&OracleConfig::default()),
        "A4" => check_a4(),
        "A5" => check_a5(),
        "A6" => check_a6(),
        "A7" => check_a7(level, &OracleConfig::default()),
        "A8" => check_a8(),
        "A9" => check_a9(),
        "A10" => check_a10(),
        "A11" => check_a11(),
        other => Err(Fail(format!("no criterion {other}"))),
    };
    let skipped = id == "A3" && level == Level::Quick;
    let (status, detail) = match outcome {
        Ok(d) if skipped => (Status::Skipped, d),
        Ok(d) => (Status::Pass, d),
        Err(Fail(d)) => (Status::Fail, d),
    };
    CriterionResult { id, title: title(id), status, detail, runtime_ms: start.elapsed().as_millis() }
}

pub fn run_suite(level: Level) -> SuiteReport {
    SuiteReport { level, criteria: IDS.iter().map(|id| run_criterion(id, level)).collect() }
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<(), Fail> {
    let t = start.elapsed();
    ensure!(t <= limit, "{what} took {t:?}, limit {limit:?}");
    Ok(())
}

fn q(n: i64, d: i64) -> Scalar {
    frac(&Field::Rational, n, d)
}

const A1_PARAMS: [(i64, i64); 5] = [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2)];

pub fn check_a1() -> Check {
    check_a1_with(&sigma_t)
}

/// A1 against an arbitrary source of the `σ_t` table.
pub fn check_a1_with(table: &dyn Fn(&HopfAlgebra, &Scalar) -> crate::Result<BiForm>) -> Check {
    let start = Instant::now();
    let h = sweedler(&Field::Rational)?;
    let ts: Vec<Scalar> = A1_PARAMS.iter().map(|&(n, d)| q(n, d)).collect();
    for t in &ts {
        let s = table(&h, t)?;
        ensure!(is_reg2(&s, &h), "σ_{t} not invertible");
        ensure!(is_lazy2(&s, &h), "σ_{t} not lazy");
        ensure!(is_left_cocycle(&s, &h), "σ_{t} not a left cocycle");
        ensure!(is_right_cocycle(&s, &h), "σ_{t} not a right cocycle");
        ensure!(conv_inverse_bi(&h, &s)? == table(&h, &-t)?, "σ_{t}⁻¹ ≠ σ_(-{t})");
        if !t.is_zero() {
            ensure!(!is_absolutely_central(&s, &h), "σ_{t} absolutely central");
        }
        for u in &ts {
            ensure!(s.convolve(&table(&h, u)?, &h)? == table(&h, &(t + u))?, "σ_{t} ∗ σ_{u} ≠ σ_(t+u)");
        }
    }
    within(start, Duration::from_secs(1), "A1")?;
    Ok(format!("5 parameters, {} products", ts.len() * ts.len()))
}

fn small(rng: &mut ChaCha8Rng, f: &Field) -> Scalar {
    Scalar::from_i64(f, rng.gen_range(-3..=3))
}

fn random_unit(h: &HopfAlgebra, rng: &mut ChaCha8Rng) -> LinForm {
    loop {
        let m = LinForm((0..h.dim()).map(|_| small(rng, h.field())).collect());
        if conv_inverse_lin(h, &m).is_ok() {
            return m;
        }
    }
}

fn random_lazy_unit(h: &HopfAlgebra, basis: &[LinForm], rng: &mut ChaCha8Rng) -> LinForm {
    loop {
        let mut m = vec![Scalar::zero(h.field()); h.dim()];
        for b in basis {
            let c = small(rng, h.field());
            for (x, y) in m.iter_mut().zip(&b.0) {
                x.add_mul(&c, y);
            }
        }
        let m = LinForm(m);
        if conv_inverse_lin(h, &m).is_ok() {
            return m;
        }
    }
}

struct CoboundaryCase {
    name: &'static str,
    h: HopfAlgebra,
    lazy_sigma: Box<dyn Fn(&mut ChaCha8Rng) -> crate::Result<BiForm>>,
}

fn coboundary_cases() -> crate::Result<Vec<CoboundaryCase>> {
    let f = Field::Rational;
    let h4 = sweedler(&f)?;
    let e2 = en_algebra(2, &f)?;
    let klein = group_algebra(&FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)), &f)?;
    let s = SuperSpace::sign(2, &f)?;
    let iso = en_bosonization_iso(&e2, &s)?;
    let h4c = h4.clone();
    let kc = klein.clone();
    Ok(vec![
        CoboundaryCase {
            name: "H4",
            h: h4,
            lazy_sigma: Box::new(move |rng| sigma_t(&h4c, &frac(&Field::Rational, rng.gen_range(-4..=4), 2))),
        },
        CoboundaryCase {
            name: "E(2)",
            h: e2,
            lazy_sigma: Box::new(move |rng| {
                let f = Field::Rational;
                let (a, b, c) = (small(rng, &f), small(rng, &f), small(rng, &f));
                let r = Matrix::from_rows(&f, vec![vec![a, b.clone()], vec![b, c]])?;
                Ok(exp_twist_cocycle(&s, &r)?.pullback(&iso))
            }),
        },
        CoboundaryCase {
            name: "k[Z2xZ2]",
            h: klein,
            lazy_sigma: Box::new(move |rng| loop {
                let s = BiForm::from_fn(&kc, |_, _| small(rng, &Field::Rational));
                if conv_inverse_bi(&kc, &s).is_ok() {
                    return Ok(s);
                }
            }),
        },
    ])
}

pub const A2_SAMPLES: usize = 20;

pub fn check_a2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x13);
    let mut total = 0;
    for case in coboundary_cases()? {
        let h = &case.h;
        let name = case.name;
        let eps2 = BiForm::counit(h);
        let lazy_basis = lazy_form_space(h);
        let chars = enumerate_alg_maps(h)?.maps;
        for chi in &chars {
            ensure!(coboundary(chi, h)? == eps2, "{name}: item 1, ∂χ ≠ ε⊗ε for a character");
        }
        for _ in 0..A2_SAMPLES {
            let mu = random_unit(h, &mut rng);
            let phi = random_unit(h, &mut rng);
            let ml = random_lazy_unit(h, &lazy_basis, &mut rng);
            let ml2 = random_lazy_unit(h, &lazy_basis, &mut rng);
            let sigma = (case.lazy_sigma)(&mut rng)?;
            ensure!(is_lazy2(&sigma, h), "{name}: sampled σ not lazy");
            let d = |m: &LinForm| coboundary(m, h);
            // 1
            ensure!((d(&mu)? == eps2) == mu.is_algebra_map(h).holds(), "{name}: item 1");
            // 2
            ensure!(is_lazy2(&d(&ml)?, h), "{name}: item 2");
            // 3
            let mu_inv = conv_inverse_lin(h, &mu)?;
            let rhs = mu.tensor_square().convolve(&d(&phi)?, h)?.convolve(&mu_inv.after_mult(h), h)?;
            ensure!(d(&mu.convolve(&phi, h)?)? == rhs, "{name}: item 3");
            // 4
            ensure!(d(&ml.convolve(&phi, h)?)? == d(&phi)?.convolve(&d(&ml)?, h)?, "{name}: item 4");
            // 5
            let dml = d(&ml)?;
            ensure!(dml.convolve(&sigma, h)? == sigma.convolve(&dml, h)?, "{name}: item 5");
            // 6, with ∂φ' lazy for φ' = μ_L ∗ χ
            let chi = &chars[rng.gen_range(0..chars.len())];
            let phi2 = ml2.convolve(chi, h)?;
            ensure!(is_lazy2(&d(&phi2)?, h), "{name}: item 6 precondition");
            ensure!(d(&mu.convolve(&phi2, h)?)? == d(&mu)?.convolve(&d(&phi2)?, h)?, "{name}: item 6");
            // 7
            ensure!(is_left_cocycle(&d(&mu)?, h), "{name}: item 7");
            total += 1;
        }
    }
    Ok(format!("{total} sampled tuples over H4, E(2), k[Z2xZ2]"))
}

pub fn check_a3(cfg: &OracleConfig) -> Check {
    let start = Instant::now();
    let mut notes = Vec::new();
    for p in [3u64, 5] {
        let h = sweedler(&Field::Prime(p))?;
        let units = enumerate_lazy_units(&h, cfg)?;
        ensure!(units == vec![LinForm::counit(&h)], "Reg¹_L(H4) over F{p} has {} elements", units.len());
    }
    let h3 = sweedler(&Field::Prime(3))?;
    let r = enumerate_z2l(&h3, cfg)?;
    ensure!(r.quotient.describe() == "Z3", "H²_L(H4) over F3 is {}", r.quotient.describe());
    notes.push(format!("H4/F3: |Z|={} |B|={} residual dim {}", r.z2.len(), r.b2.len(), r.residual_dim));
    let k5 = group_algebra(&FiniteGroup::cyclic(2), &Field::Prime(5))?;
    let r = enumerate_z2l(&k5, cfg)?;
    ensure!(r.quotient.describe() == "Z2", "H²_L(k[Z2]) over F5 is {}", r.quotient.describe());
    notes.push(format!("k[Z2]/F5: |Z|={} |B|={}", r.z2.len(), r.b2.len()));
    within(start, Duration::from_secs(120), "A3")?;
    Ok(notes.join("; "))
}

fn a4_matrices() -> Vec<Matrix> {
    let f = Field::Rational;
    [(1, 0, 0), (0, 1, 0), (1, 2, 3), (-2, 1, 1), (3, -1, -1)]
        .iter()
        .map(|&(a, b, c)| Matrix::from_rows(&f, vec![vec![q(a, 1), q(b, 1)], vec![q(b, 1), q(c, 1)]]).expect("2x2"))
        .collect()
}

pub fn check_a4() -> Check {
    let f = Field::Rational;
    let e2 = en_algebra(2, &f)?;
    let s = SuperSpace::sign(2, &f)?;
    let iso = en_bosonization_iso(&e2, &s)?;
    let sig = |r: &Matrix| -> crate::Result<BiForm> { Ok(exp_twist_cocycle(&s, r)?.pullback(&iso)) };
    let rs = a4_matrices();
    let eps = LinForm::counit(&e2);
    for r in &rs {
        let x = sig(r)?;
        ensure!(cocycle_report(&x, &e2).is_lazy_cocycle(), "exp twist of {r:?} not a lazy cocycle");
        let psi = psi_invariant(&x, &e2)?;
        // the symmetric part of Ψ recovers r up to the factor −2
        ensure!(psi.add(&psi.transpose())? == r.scale(&q(-2, 1)), "Ψ does not recover r");
    }
    for (i, r1) in rs.iter().enumerate() {
        let r2 = &rs[(i + 1) % rs.len()];
        let lhs = sig(r1)?.convolve(&sig(r2)?, &e2)?;
        let sum = sig(&r1.add(r2)?)?;
        let quotient = lhs.convolve(&conv_inverse_bi(&e2, &sum)?, &e2)?;
        ensure!(verify_coboundary_witness(&quotient, &eps, &e2), "additivity fails for pair {i}");
    }
    Ok("5 symmetric r; additive with witness ε; Ψ linear and injective on S²".into())
}

pub fn check_a5() -> Check {
    let f = Field::Rational;
    let h = sweedler(&f)?;
    let pairs = [((1, 1), (2, 1)), ((-1, 2), (3, 1)), ((0, 1), (1, 1))];
    for &((a, b), (c, d)) in &pairs {
        let (t, s) = (q(a, b), q(c, d));
        let st = sigma_t(&h, &t)?;
        let right = galois_object(&h, &st, Side::Right)?;
        ensure!(check_galois(&right), "_σA not Galois for t={t}");
        let zt = galois_object(&h, &st, Side::Bi)?;
        let zs = galois_object(&h, &sigma_t(&h, &s)?, Side::Bi)?;
        let c = cotensor(&zt, &zs)?;
        ensure!(c.object.dim() == 4, "cotensor has dim {}", c.object.dim());
        let target = galois_object(&h, &sigma_t(&h, &(&t + &s))?, Side::Bi)?;
        let delta = delta_into_cotensor(&h, &c)?;
        ensure!(comodule_map_report(&delta.0, &target, &c.object)?.is_iso(), "Δ not an iso for t={t}, s={s}");
        let back = cocycle_from_cleft(&right, &crate::forms::LinMap::identity(&h))?;
        ensure!(back == st, "cleft extraction differs from σ_{t}");
    }
    Ok(format!("{} parameter pairs", pairs.len()))
}

fn taft_sigma(a: &Scalar) -> crate::Result<(HopfAlgebra, BiForm)> {
    let gd = taft_datum(3)?;
    let h = monomial_hopf(&gd)?;
    let id: Vec<usize> = (0..gd.group.order()).collect();
    let z = galois_monomial(&gd, &trivial_cochain(&gd.group, &gd.field()), &id, a)?;
    let s = cocycle_from_cleft(&z, &monomial_section(&gd))?;
    Ok((h, s))
}

pub fn check_a6() -> Check {
    let f = Field::Rational;
    let h = sweedler(&f)?;
    let mut n = 0;
    for t in [q(0, 1), q(1, 1), q(-3, 2), q(2, 1)] {
        let s = sigma_t(&h, &t)?;
        let rep = check_gen_antipode(&h, &s, &gen_antipode(&h, &s)?)?;
        ensure!(rep.passes(), "H4, t={t}: {rep:?}");
        n += 1;
    }
    let c3 = Field::Cyclotomic(3);
    for a in [Scalar::zero(&c3), Scalar::one(&c3), Scalar::zeta_power(&c3, 1)?] {
        let (taft, s) = taft_sigma(&a)?;
        let rep = check_gen_antipode(&taft, &s, &gen_antipode(&taft, &s)?)?;
        ensure!(rep.passes(), "Taft, a={a}: {rep:?}");
        n += 1;
    }
    Ok(format!("{n} cocycles, all basis pairs"))
}

pub fn check_a7(level: Level, cfg: &OracleConfig) -> Check {
    let f = Field::Rational;
    let h = sweedler(&f)?;
    let mp = MatchedPair::trivial(&h, &h)?;
    let d = double_crossed(&mp)?;
    for (s, t) in [((1, 1), (-2, 1)), ((1, 2), (3, 1)), ((0, 1), (1, 1))] {
        let (ss, st) = (sigma_t(&h, &q(s.0, s.1))?, sigma_t(&h, &q(t.0, t.1))?);
        let j = yamazaki_join(&ss, &st, &mp)?;
        ensure!(is_lazy2(&j, &d), "join not lazy");
        ensure!(restrict(&j, &mp)? == (ss, st), "res ∘ join ≠ id");
    }
    let k = group_algebra(&FiniteGroup::cyclic(2), &f)?;
    let kp = MatchedPair::trivial(&k, &k)?;
    let kd = double_crossed(&kp)?;
    let chi = LinForm(vec![q(1, 1), q(-1, 1)]);
    let lam = lambda_map(&chi, &chi, &kp)?;
    let w = lambda_witness(&chi, &chi, &kp)?;
    ensure!(verify_coboundary_witness(&sigma_from_pairing(&lam), &w, &kd), "Σ(Λ) witness fails");
    if level == Level::Quick {
        return Ok("joins and Σ∘Λ witness (enumerations at full level)".into());
    }
    let h3 = sweedler(&Field::Prime(3))?;
    let mp3 = MatchedPair::trivial(&h3, &h3)?;
    let d3 = double_crossed(&mp3)?;
    let zp = brute_pairings(&mp3, cfg)?;
    ensure!(zp.len() == 1 && zp[0].is_trivial(), "ZP(H4,H4) over F3 has {} elements", zp.len());
    for b in &zp {
        ensure!(is_lazy2(&sigma_from_pairing(b), &d3), "Σ(β) not lazy");
    }
    let f5 = Field::Prime(5);
    let k5 = group_algebra(&FiniteGroup::cyclic(2), &f5)?;
    let h1 = enumerate_z2l(&k5, cfg)?.quotient.order;
    let zp5 = brute_pairings(&MatchedPair::trivial(&k5, &k5)?, cfg)?.len();
    let total = enumerate_z2l(&tensor_hopf(&k5, &k5)?, cfg)?.quotient.order;
    ensure!(total == h1 * h1 * zp5, "|H²_L| = {total} but factors give {h1}·{h1}·{zp5}");
    Ok(format!("ZP(H4,H4)/F3 trivial; |H²_L(k[Z2]⊗k[Z2])| = {total} = {h1}·{h1}·{zp5}"))
}

pub fn check_a8() -> Check {
    let f = Field::Rational;
    let h = sweedler(&f)?;
    let d = drinfeld_double(&h)?;
    ensure!(d.dim() == 16 && d.verify_hopf_axioms().passes(), "D(H4) fails the axioms");
    let maps = enumerate_alg_maps(&h)?;
    let alt = LinForm(vec![q(1, 1), q(-1, 1), q(0, 1), q(0, 1)]);
    ensure!(maps.complete && maps.maps.len() == 2, "Alg(H4) has {} elements", maps.maps.len());
    ensure!(maps.maps.contains(&LinForm::counit(&h)) && maps.maps.contains(&alt), "Alg(H4) ≠ {{ε, 1*−g*}}");
    let rep = l_morphism_report(&scalar_map(&alt, &h), &h, &h)?;
    ensure!(rep.symmetric.witness() == Some(&[h.idx("x")][..]), "1*−g* not rejected at x: {rep:?}");
    Ok("dim 16; Alg(H4) = {ε, 1*−g*}; rejected at x".into())
}

pub fn check_a9() -> Check {
    let c3 = Field::Cyclotomic(3);
    let gd = taft_datum(3)?;
    let h = monomial_hopf(&gd)?;
    ensure!(h.dim() == 9 && h.verify_hopf_axioms().passes(), "Taft algebra fails the axioms");
    let vals = [Scalar::zero(&c3), Scalar::one(&c3), Scalar::from_i64(&c3, -1), Scalar::zeta_power(&c3, 1)?];
    let mut sig = Vec::new();
    for a in &vals {
        let (_, s) = taft_sigma(a)?;
        ensure!(cocycle_report(&s, &h).is_lazy_cocycle(), "σ_{a} not a lazy cocycle");
        ensure!(twisted_power_invariant(&h, &gd, &s)? == *a, "inv(σ_{a}) ≠ {a}");
        sig.push(s);
    }
    for (i, a) in vals.iter().enumerate() {
        for (j, b) in vals.iter().enumerate() {
            let p = sig[i].convolve(&sig[j], &h)?;
            ensure!(twisted_power_invariant(&h, &gd, &p)? == a + b, "inv(σ_{a}∗σ_{b}) ≠ a+b");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x75);
    let basis = lazy_form_space(&h);
    for _ in 0..5 {
        let mu = random_lazy_unit(&h, &basis, &mut rng);
        ensure!(twisted_power_invariant(&h, &gd, &coboundary(&mu, &h)?)?.is_zero(), "inv(∂μ) ≠ 0");
    }
    Ok("dim 9; inv additive on {0, 1, −1, ζ3}; inv(∂μ) = 0".into())
}

fn right_action_law(cs: &CrossedSystem, h: &HopfAlgebra) -> std::result::Result<(), Fail> {
    let w1 = sigma_t(h, &q(1, 1))?;
    let w2 = sigma_t(h, &q(-3, 2))?;
    ensure!(check_crossed_system(cs), "not a crossed system");
    let once = act_on_crossed(&act_on_crossed(cs, &w1)?, &w2)?;
    let both = act_on_crossed(cs, &w1.convolve(&w2, h)?)?;
    ensure!(once.sigma == both.sigma && check_crossed_system(&once), "(σ←ω)←ω′ ≠ σ←(ω∗ω′)");
    ensure!(act_on_crossed(cs, &BiForm::counit(h))?.sigma == cs.sigma, "ε does not act trivially");
    Ok(())
}

pub fn check_a10() -> Check {
    let f = Field::Rational;
    let h = sweedler(&f)?;
    let dual = dual_numbers_system(&h)?;
    let systems = vec![CrossedSystem::scalar(&h, &sigma_t(&h, &q(2, 1))?)?, act_on_crossed(&dual, &sigma_t(&h, &q(1, 2))?)?, dual];
    for cs in &systems {
        right_action_law(cs, &h)?;
    }
    let eps = LinForm::counit(&h);
    let unit = ProjRep::unit(&h);
    for t in [0, 1, 2] {
        let x = regular_projrep(&h, &sigma_t(&h, &q(t, 1))?)?;
        ensure!(check_projrep(&x, &h), "regular rep t={t}");
        let xd = dual_projrep(&x, &h)?;
        ensure!(xd.sigma == sigma_t(&h, &q(-t, 1))? && check_projrep(&xd, &h), "dual rep t={t}");
        let left = tensor_projrep(&xd, &x, &h)?;
        let right = tensor_projrep(&x, &xd, &h)?;
        ensure!(check_projrep(&left, &h) && check_projrep(&right, &h), "tensor rep t={t}");
        ensure!(left.sigma == BiForm::counit(&h), "V*⊗V cocycle t={t}");
        ensure!(is_basic_morphism(&evaluation(&x), &left, &unit, &eps, &h), "evaluation t={t}");
        ensure!(is_basic_morphism(&coevaluation(&x), &unit, &right, &eps, &h), "coevaluation t={t}");
    }
    Ok("3 crossed systems; t ∈ {0, 1, 2}".into())
}

pub fn check_a11() -> Check {
    let gd = order16_datum()?;
    let h = monomial_hopf(&gd)?;
    let f = gd.field();
    let i_unit = Scalar::zeta_power(&f, 1)?;
    // μ(xⁱ a^α b^β g^γ) = δ_{i,0} iᵞ, elements indexed 8α + 4β + γ
    let mu = LinForm((0..h.dim()).map(|k| if k < 16 { i_unit.pow((k % 4) as i64) } else { Scalar::zero(&f) }).collect());
    ensure!(is_almost_lazy(&mu, &h), "μ is not almost lazy");
    let ad = ad_map(&mu, &h)?;
    let x = gd.index(gd.group.identity(), 1);
    let ix: Vec<Scalar> = h.basis_vec(x).iter().map(|c| c * &i_unit).collect();
    ensure!(ad.apply(&h.basis_vec(x)) == ix, "ad(μ)(x) ≠ i·x");
    let maps = enumerate_alg_maps(&h)?;
    match classify_cointernal(&ad, &h, &maps, Some(&mu))? {
        CoinnerClass::CoInternalOnly { .. } => Ok(format!("dim {}; {} characters, none coinner", h.dim(), maps.maps.len())),
        other => Err(Fail(format!("classified as {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_error_in_table_fails_a1() {
        let mutated = |h: &HopfAlgebra, t: &Scalar| -> crate::Result<BiForm> {
            let mut s = sigma_t(h, t)?;
            let (x, gx) = (h.idx("x"), h.idx("gx"));
            let v = -s.at(x, gx);
            s.0.set(x, gx, v);
            Ok(s)
        };
        assert!(check_a1_with(&mutated).is_err());
        assert!(check_a1().is_ok());
    }
}
