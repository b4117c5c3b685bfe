//! Structured-text (JSON) definition files and reports.
//!
//! Scalars are strings in canonical form (`"3/2"`, `"z^2-1"`, `"4 mod 5"`);
//! a file is validated on load. `to_text(parse(f))` is a canonical form:
//! parsing it again and re-serializing gives identical bytes.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::crossed::CrossedSystem;
use crate::error::{HopfError, Result};
use crate::families::{FiniteGroup, GroupDatum, MatchedPair, SuperSpace};
use crate::forms::{BiForm, LinForm, LinMap};
use crate::hopf::{Algebra, GeneratorData, GeneratorKind, HopfAlgebra};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// 1-based line and column of the first occurrence of `needle`.
fn locate(src: &str, needle: &str) -> (usize, usize) {
    let Some(off) = src.find(needle) else { return (0, 0) };
    let before = &src[..off];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn from_text<T: DeserializeOwned>(src: &str) -> Result<T> {
    serde_json::from_str(src).map_err(|e| HopfError::Parse { line: e.line(), column: e.column(), message: e.to_string() })
}

struct Ctx<'s> {
    src: &'s str,
    field: Field,
}

impl Ctx<'_> {
    fn scalar(&self, s: &str) -> Result<Scalar> {
        Scalar::parse(&self.field, s).map_err(|e| match e {
            HopfError::FieldMismatch(_) => e,
            other => {
                let (line, column) = locate(self.src, &format!("\"{s}\""));
                HopfError::Parse { line, column, message: format!("bad scalar {s:?}: {other}") }
            }
        })
    }

    fn vec(&self, v: &[String]) -> Result<Vec<Scalar>> {
        v.iter().map(|s| self.scalar(s)).collect()
    }

    fn mat(&self, rows: &[Vec<String>]) -> Result<Matrix> {
        let rows = rows.iter().map(|r| self.vec(r)).collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Err(HopfError::ShapeMismatch("empty matrix".into()));
        }
        Matrix::from_rows(&self.field, rows)
    }

    fn tensor(&self, t: &[Vec<Vec<String>>]) -> Result<Vec<Vec<Vec<Scalar>>>> {
        t.iter().map(|row| row.iter().map(|v| self.vec(v)).collect()).collect()
    }
}

fn s_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::canonical).collect()
}

fn s_mat(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| s_vec(r)).collect()
}

fn s_tensor(t: &[Vec<Vec<Scalar>>]) -> Vec<Vec<Vec<String>>> {
    t.iter().map(|row| row.iter().map(|v| s_vec(v)).collect()).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindDef {
    Grouplike(u64),
    Nilpotent,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GeneratorsDef {
    generators: Vec<(usize, KindDef)>,
    words: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDef {
    field: Field,
    basis: Vec<String>,
    mult: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfDef {
    field: Field,
    basis: Vec<String>,
    /// `mult[i][j]` = coordinates of `b_i b_j`
    mult: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
    /// `comult[i]` = triples `(j, k, c)` with `Δ(b_i) = Σ c b_j ⊗ b_k`
    comult: Vec<Vec<(usize, usize, String)>>,
    counit: Vec<String>,
    /// row `i` = `S(b_i)`
    antipode: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<GeneratorsDef>,
}

fn algebra_from(def: &AlgebraDef, src: &str) -> Result<Algebra> {
    def.field.validate()?;
    let cx = Ctx { src, field: def.field.clone() };
    let a = Algebra::new(&def.field, def.basis.clone(), cx.tensor(&def.mult)?, cx.vec(&def.unit)?)?;
    a.check_associative().into_result("associativity")?;
    a.check_unit().into_result("unit")?;
    Ok(a)
}

fn algebra_def(a: &Algebra) -> AlgebraDef {
    AlgebraDef { field: a.field().clone(), basis: a.basis().to_vec(), mult: s_tensor(&a.dense_mult()), unit: s_vec(a.unit()) }
}

fn hopf_from(def: &HopfDef, src: &str) -> Result<HopfAlgebra> {
    def.field.validate()?;
    let cx = Ctx { src, field: def.field.clone() };
    let alg = Algebra::new(&def.field, def.basis.clone(), cx.tensor(&def.mult)?, cx.vec(&def.unit)?)?;
    let n = alg.dim();
    let mut comult = Vec::with_capacity(n);
    for row in &def.comult {
        let mut r = Vec::with_capacity(row.len());
        for (j, k, c) in row {
            if *j >= n || *k >= n {
                return Err(HopfError::ShapeMismatch(format!("comult index ({j}, {k}) out of range")));
            }
            r.push((*j, *k, cx.scalar(c)?));
        }
        comult.push(r);
    }
    let h = HopfAlgebra::new(alg, comult, cx.vec(&def.counit)?, cx.mat(&def.antipode)?)?;
    Ok(match &def.generators {
        None => h,
        Some(g) => {
            if g.words.len() != n || g.generators.iter().any(|(i, _)| *i >= n) || g.words.iter().flatten().any(|&w| w >= g.generators.len()) {
                return Err(HopfError::ShapeMismatch("generator data".into()));
            }
            let generators = g
                .generators
                .iter()
                .map(|(i, k)| {
                    let kind = match k {
                        KindDef::Grouplike(order) => GeneratorKind::Grouplike { order: *order },
                        KindDef::Nilpotent => GeneratorKind::Nilpotent,
                    };
                    (*i, kind)
                })
                .collect();
            h.with_generators(GeneratorData { generators, words: g.words.clone() })
        }
    })
}

fn hopf_def(h: &HopfAlgebra) -> HopfDef {
    let generators = h.generators().map(|g| GeneratorsDef {
        generators: g
            .generators
            .iter()
            .map(|(i, k)| {
                let k = match k {
                    GeneratorKind::Grouplike { order } => KindDef::Grouplike(*order),
                    GeneratorKind::Nilpotent => KindDef::Nilpotent,
                };
                (*i, k)
            })
            .collect(),
        words: g.words.clone(),
    });
    HopfDef {
        field: h.field().clone(),
        basis: h.basis().to_vec(),
        mult: s_tensor(&h.algebra().dense_mult()),
        unit: s_vec(h.unit()),
        comult: (0..h.dim()).map(|i| h.comult_basis(i).iter().map(|(j, k, c)| (*j, *k, c.canonical())).collect()).collect(),
        counit: s_vec(h.counit()),
        antipode: s_mat(h.antipode()),
        generators,
    }
}

pub fn parse_hopf(src: &str) -> Result<HopfAlgebra> {
    parse_hopf_over(src, None)
}

/// Like [`parse_hopf`], reading the structure constants in `field` instead of
/// the file's own field (e.g. a rational definition reduced mod p).
pub fn parse_hopf_over(src: &str, field: Option<&Field>) -> Result<HopfAlgebra> {
    let mut def: HopfDef = from_text(src)?;
    if let Some(f) = field {
        def.field = f.clone();
    }
    hopf_from(&def, src)
}

pub fn hopf_to_text(h: &HopfAlgebra) -> String {
    render(&serde_json::to_value(hopf_def(h)).expect("serializable"))
}

pub fn parse_algebra(src: &str) -> Result<Algebra> {
    algebra_from(&from_text::<AlgebraDef>(src)?, src)
}

pub fn algebra_to_text(a: &Algebra) -> String {
    render(&serde_json::to_value(algebra_def(a)).expect("serializable"))
}

/// A form read from a file; shapes are checked against an algebra at use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Form {
    Linear(LinForm),
    Bilinear(BiForm),
    Map(LinMap),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum FormDef {
    Linear { field: Field, entries: Vec<String> },
    Bilinear { field: Field, entries: Vec<Vec<String>> },
    Map { field: Field, entries: Vec<Vec<String>> },
}

pub fn parse_form(src: &str) -> Result<Form> {
    parse_form_over(src, None)
}

pub fn parse_form_over(src: &str, over: Option<&Field>) -> Result<Form> {
    let mut def: FormDef = from_text(src)?;
    if let Some(f) = over {
        match &mut def {
            FormDef::Linear { field, .. } | FormDef::Bilinear { field, .. } | FormDef::Map { field, .. } => *field = f.clone(),
        }
    }
    Ok(match &def {
        FormDef::Linear { field, entries } => {
            field.validate()?;
            Form::Linear(LinForm(Ctx { src, field: field.clone() }.vec(entries)?))
        }
        FormDef::Bilinear { field, entries } => {
            field.validate()?;
            Form::Bilinear(BiForm(Ctx { src, field: field.clone() }.mat(entries)?))
        }
        FormDef::Map { field, entries } => {
            field.validate()?;
            Form::Map(LinMap(Ctx { src, field: field.clone() }.mat(entries)?))
        }
    })
}

pub fn form_to_text(f: &Form) -> String {
    let def = match f {
        Form::Linear(l) => FormDef::Linear { field: l.0[0].field(), entries: s_vec(&l.0) },
        Form::Bilinear(b) => FormDef::Bilinear { field: b.0.field().clone(), entries: s_mat(&b.0) },
        Form::Map(m) => FormDef::Map { field: m.0.field().clone(), entries: s_mat(&m.0) },
    };
    render(&serde_json::to_value(def).expect("serializable"))
}

impl Form {
    pub fn linear(self) -> Result<LinForm> {
        match self {
            Form::Linear(l) => Ok(l),
            _ => Err(HopfError::ShapeMismatch("expected a linear form".into())),
        }
    }

    pub fn bilinear(self) -> Result<BiForm> {
        match self {
            Form::Bilinear(b) => Ok(b),
            _ => Err(HopfError::ShapeMismatch("expected a bilinear form".into())),
        }
    }

    pub fn map(self) -> Result<LinMap> {
        match self {
            Form::Map(m) => Ok(m),
            _ => Err(HopfError::ShapeMismatch("expected a linear map".into())),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDef {
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
}

fn group_def(g: &FiniteGroup) -> GroupDef {
    GroupDef { elements: g.names().to_vec(), table: g.table().to_vec() }
}

pub fn parse_group(src: &str) -> Result<FiniteGroup> {
    let d: GroupDef = from_text(src)?;
    FiniteGroup::from_table(d.elements, d.table)
}

pub fn group_to_text(g: &FiniteGroup) -> String {
    render(&serde_json::to_value(group_def(g)).expect("serializable"))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatchedPairDef {
    b: HopfDef,
    a: HopfDef,
    /// `left[a][b]` = `a ⇀ b` in `B`
    left: Vec<Vec<Vec<String>>>,
    /// `right[a][b]` = `a ↼ b` in `A`
    right: Vec<Vec<Vec<String>>>,
}

pub fn parse_matched_pair(src: &str) -> Result<MatchedPair> {
    let d: MatchedPairDef = from_text(src)?;
    let b = hopf_from(&d.b, src)?;
    let a = hopf_from(&d.a, src)?;
    if a.field() != b.field() {
        return Err(HopfError::FieldMismatch("matched pair".into()));
    }
    let cx = Ctx { src, field: a.field().clone() };
    MatchedPair::new(b, a, cx.tensor(&d.left)?, cx.tensor(&d.right)?)
}

pub fn matched_pair_to_text(mp: &MatchedPair) -> String {
    let d = MatchedPairDef { b: hopf_def(&mp.b), a: hopf_def(&mp.a), left: s_tensor(&mp.left), right: s_tensor(&mp.right) };
    render(&serde_json::to_value(d).expect("serializable"))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossedDef {
    r: AlgebraDef,
    hopf: HopfDef,
    /// `act[a][x]` = `a ⇀ x`
    act: Vec<Vec<Vec<String>>>,
    /// `sigma[a][b]` in `R`
    sigma: Vec<Vec<Vec<String>>>,
}

pub fn parse_crossed(src: &str) -> Result<CrossedSystem> {
    let d: CrossedDef = from_text(src)?;
    let r = algebra_from(&d.r, src)?;
    let h = hopf_from(&d.hopf, src)?;
    if r.field() != h.field() {
        return Err(HopfError::FieldMismatch("crossed system".into()));
    }
    let cx = Ctx { src, field: h.field().clone() };
    CrossedSystem::new(r, h, cx.tensor(&d.act)?, cx.tensor(&d.sigma)?)
}

pub fn crossed_to_text(cs: &CrossedSystem) -> String {
    let d = CrossedDef { r: algebra_def(&cs.r), hopf: hopf_def(&cs.hopf), act: s_tensor(&cs.act), sigma: s_tensor(&cs.sigma) };
    render(&serde_json::to_value(d).expect("serializable"))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDatumDef {
    field: Field,
    group: GroupDef,
    g: usize,
    chi: Vec<String>,
    mu: String,
}

pub fn parse_group_datum(src: &str) -> Result<GroupDatum> {
    let d: GroupDatumDef = from_text(src)?;
    d.field.validate()?;
    let cx = Ctx { src, field: d.field.clone() };
    let group = FiniteGroup::from_table(d.group.elements.clone(), d.group.table.clone())?;
    GroupDatum::new(group, d.g, cx.vec(&d.chi)?, cx.scalar(&d.mu)?)
}

pub fn group_datum_to_text(gd: &GroupDatum) -> String {
    let d = GroupDatumDef { field: gd.field(), group: group_def(&gd.group), g: gd.g, chi: s_vec(&gd.chi), mu: gd.mu.canonical() };
    render(&serde_json::to_value(d).expect("serializable"))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SuperSpaceDef {
    field: Field,
    group: GroupDef,
    /// one matrix per group element
    rho: Vec<Vec<Vec<String>>>,
    g: usize,
}

pub fn parse_super_space(src: &str) -> Result<SuperSpace> {
    let d: SuperSpaceDef = from_text(src)?;
    d.field.validate()?;
    let cx = Ctx { src, field: d.field.clone() };
    let group = FiniteGroup::from_table(d.group.elements.clone(), d.group.table.clone())?;
    let rho = d.rho.iter().map(|m| cx.mat(m)).collect::<Result<Vec<_>>>()?;
    SuperSpace::new(group, rho, d.g)
}

pub fn super_space_to_text(s: &SuperSpace) -> String {
    let d = SuperSpaceDef { field: s.field().clone(), group: group_def(&s.group), rho: s.rho.iter().map(s_mat).collect(), g: s.g };
    render(&serde_json::to_value(d).expect("serializable"))
}

pub fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| HopfError::Io(format!("{}: {e}", path.display())))
}

/// JSON with short arrays kept on one line.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

const INLINE_WIDTH: usize = 100;

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let flat = serde_json::to_string(v).expect("serializable");
    let is_leafy = match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_object() && !x.is_array()) || flat.len() <= INLINE_WIDTH,
        Value::Object(m) => m.is_empty(),
        _ => true,
    };
    if is_leafy || (flat.len() + indent <= INLINE_WIDTH && !v.is_object()) {
        out.push_str(&flat);
        return;
    }
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::to_string(k).expect("string"));
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{en_algebra, sweedler};

    const H4: &str = include_str!("../data/h4.json");
    const E2: &str = include_str!("../data/e2.json");

    #[test]
    fn bundled_files() {
        let h = parse_hopf(H4).unwrap();
        assert!(h.verify_hopf_axioms().passes());
        assert!(h.same_structure(&sweedler(&Field::Rational).unwrap()));
        let e = parse_hopf(E2).unwrap();
        assert!(e.same_structure(&en_algebra(2, &Field::Rational).unwrap()));
    }

    #[test]
    fn canonical_round_trip() {
        for src in [H4, E2] {
            let once = hopf_to_text(&parse_hopf(src).unwrap());
            assert_eq!(hopf_to_text(&parse_hopf(&once).unwrap()), once);
        }
        assert_eq!(hopf_to_text(&parse_hopf(H4).unwrap()), H4);
    }

    #[test]
    fn malformed_scalar_reports_position() {
        let bad = H4.replacen("\"unit\": [\"1\"", "\"unit\": [\"3//2\"", 1);
        match parse_hopf(&bad) {
            Err(HopfError::Parse { line, column, .. }) => assert!(line >= 1 && column >= 1),
            other => panic!("{other:?}"),
        }
        match parse_hopf("{\"field\": \"Q\",\n  \"basis\": [}") {
            Err(HopfError::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn broken_axiom_rejected() {
        let h = sweedler(&Field::Rational).unwrap();
        let mut v: Value = serde_json::from_str(&hopf_to_text(&h)).unwrap();
        v["counit"][3] = Value::String("1".into());
        assert!(matches!(parse_hopf(&render(&v)), Err(HopfError::AxiomFailure { .. })));
    }

    #[test]
    fn forms_round_trip() {
        let f = Field::Prime(5);
        let b = BiForm(Matrix::from_fn(&f, 2, 2, |i, j| Scalar::from_i64(&f, (i + 2 * j) as i64)));
        let t = form_to_text(&Form::Bilinear(b.clone()));
        assert_eq!(parse_form(&t).unwrap(), Form::Bilinear(b));
    }
}
