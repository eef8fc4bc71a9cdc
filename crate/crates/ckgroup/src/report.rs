use std::collections::BTreeMap;
use std::fmt::Write as _;

use ckgroup_core::classify::{iota, label_of, pattern_of, pattern_rows, render_catalog, ContractionClass};
use ckgroup_core::contraction::{ContractedGroup, Verdict};
use ckgroup_core::group::{fundamental_parameter, generating_matrix, rho, specialize_matrix, GroupSpec};
use ckgroup_core::hopf::{all_relations, AntipodeFraction, VerificationReport};
use ckgroup_core::scalars::{ExpScalar, IndexSet, ParamMonomial};
use serde::Serialize;

use crate::spec_json::SpecDto;

fn render_monomial(m: &ParamMonomial, nil: IndexSet) -> String {
    ExpScalar::params(*m).render(nil)
}

fn render_fraction(f: &AntipodeFraction, nil: IndexSet) -> String {
    let num = f.num.render(nil);
    if f.den.is_one() {
        num
    } else {
        format!("({num}) / {}", render_monomial(&f.den, nil))
    }
}

fn sigma_text(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn spec_text(spec: &GroupSpec) -> String {
    let j: Vec<&str> = spec.assignment().values().iter().map(|v| v.name()).collect();
    format!("SO(N={}; σ={}; j={})", spec.n(), sigma_text(spec.sigma()), j.join(","))
}

#[derive(Serialize)]
pub struct CheckDto {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn checks(r: &VerificationReport) -> Vec<CheckDto> {
    r.checks
        .iter()
        .map(|c| CheckDto {
            name: c.name.clone(),
            passed: c.passed,
            detail: c.detail.clone(),
        })
        .collect()
}

fn checks_text(out: &mut String, cs: &[CheckDto]) {
    for c in cs {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        match &c.detail {
            Some(d) => writeln!(out, "  {mark} {}: {d}", c.name).unwrap(),
            None => writeln!(out, "  {mark} {}", c.name).unwrap(),
        }
    }
}

#[derive(Serialize)]
pub struct DescribeReport {
    pub spec: SpecDto,
    pub rho: Vec<String>,
    #[serde(rename = "J")]
    pub j: String,
    pub matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<String>>,
}

impl DescribeReport {
    pub fn build(spec: &GroupSpec, with_relations: bool) -> Self {
        let nil = spec.nilpotent_set();
        let u = specialize_matrix(spec, &generating_matrix(spec));
        let matrix = (0..spec.n())
            .map(|r| (0..spec.n()).map(|c| u.get(r, c).render(nil)).collect())
            .collect();
        DescribeReport {
            spec: SpecDto::from_spec(spec),
            rho: rho(spec.n()).iter().map(|x| x.to_string()).collect(),
            j: render_monomial(&fundamental_parameter(spec), nil),
            matrix,
            pattern: (!nil.is_empty()).then(|| pattern_rows(&pattern_of(spec))),
            label: label_of(spec).map(String::from),
            relations: with_relations.then(|| all_relations(spec).iter().map(|r| r.to_string()).collect()),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let spec = self.spec.to_spec().expect("built from a valid spec");
        writeln!(out, "{}", spec_text(&spec)).unwrap();
        if let Some(l) = &self.label {
            writeln!(out, "label: {l}").unwrap();
        }
        writeln!(out, "ρ = ({})", self.rho.join(", ")).unwrap();
        writeln!(out, "J = {}", self.j).unwrap();
        writeln!(out, "U(j; σ):").unwrap();
        let width = self
            .matrix
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(|s| format!("{s:<width$}")).collect();
            writeln!(out, "  [ {} ]", cells.join("  ")).unwrap();
        }
        if let Some(p) = &self.pattern {
            writeln!(out, "pattern:").unwrap();
            for row in p {
                writeln!(out, "  {row}").unwrap();
            }
        }
        if let Some(rels) = &self.relations {
            writeln!(out, "relations:").unwrap();
            for r in rels {
                writeln!(out, "{r}").unwrap();
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub spec: SpecDto,
    pub checks: Vec<CheckDto>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn build(spec: &GroupSpec, report: &VerificationReport) -> Self {
        VerifyReport {
            spec: SpecDto::from_spec(spec),
            checks: checks(report),
            passed: report.passed(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let spec = self.spec.to_spec().expect("built from a valid spec");
        writeln!(out, "verify {}", spec_text(&spec)).unwrap();
        checks_text(&mut out, &self.checks);
        writeln!(out, "{}", if self.passed { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

#[derive(Serialize)]
pub struct Counts {
    pub admissible: usize,
    pub trivial: usize,
    pub inadmissible: usize,
}

#[derive(Serialize)]
pub struct ContractReport {
    pub spec: SpecDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(rename = "J")]
    pub j: String,
    pub verdicts: Counts,
    pub eliminated: BTreeMap<String, String>,
    pub surviving_relations: Vec<String>,
    pub inadmissible: Vec<String>,
    pub antipode: BTreeMap<String, String>,
    pub coproduct: BTreeMap<String, String>,
    pub hopf_checks: Vec<CheckDto>,
    pub passed: bool,
}

impl ContractReport {
    pub fn build(g: &ContractedGroup, report: &VerificationReport, seed: u64, points: usize) -> Self {
        let nil = g.nil();
        let counts = g.counts();
        let inadmissible = g
            .relations()
            .filter_map(|r| match &r.verdict {
                Verdict::Inadmissible(w) if w.is_zero() => Some(format!(
                    "{}({},{}): 0 (only squares of nilpotent parameters remain)",
                    r.tag.name(),
                    r.row,
                    r.col
                )),
                Verdict::Inadmissible(w) => Some(format!("{}({},{}): {}", r.tag.name(), r.row, r.col, w.render(nil))),
                _ => None,
            })
            .collect();
        let mut antipode = BTreeMap::new();
        let mut coproduct = BTreeMap::new();
        for x in g.surviving_generators() {
            let s = match g.reduced_antipode(x).expect("surviving") {
                Ok(f) => render_fraction(&f, nil),
                Err(e) => format!("ill-defined: entry {}", e.entry.render(nil)),
            };
            antipode.insert(x.to_string(), s);
            coproduct.insert(x.to_string(), g.reduced_coproduct(x).expect("surviving").render(nil));
        }
        let (jc, jb) = ckgroup_core::contraction::Contraction::new(&g.spec).j_substituted();
        let j = ExpScalar::params(jb).scale(&jc).render(nil);
        ContractReport {
            spec: SpecDto::from_spec(&g.spec),
            label: label_of(&g.spec).map(String::from),
            j,
            verdicts: Counts {
                admissible: counts.admissible,
                trivial: counts.trivial,
                inadmissible: counts.inadmissible,
            },
            eliminated: g
                .eliminations
                .iter()
                .map(|(k, v)| (k.to_string(), v.render(nil)))
                .collect(),
            surviving_relations: g
                .independent_relations(seed, points)
                .iter()
                .map(|r| r.render(nil))
                .collect(),
            inadmissible,
            antipode,
            coproduct,
            hopf_checks: checks(report),
            passed: report.passed(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let spec = self.spec.to_spec().expect("built from a valid spec");
        writeln!(out, "contraction of {}", spec_text(&spec)).unwrap();
        if let Some(l) = &self.label {
            writeln!(out, "label: {l}").unwrap();
        }
        writeln!(out, "J = {}", self.j).unwrap();
        let v = &self.verdicts;
        writeln!(
            out,
            "verdicts: {} admissible, {} trivial, {} inadmissible",
            v.admissible, v.trivial, v.inadmissible
        )
        .unwrap();
        if !self.eliminated.is_empty() {
            writeln!(out, "eliminated:").unwrap();
            for (k, x) in &self.eliminated {
                writeln!(out, "  {k} = {x}").unwrap();
            }
        }
        writeln!(out, "surviving relations ({}):", self.surviving_relations.len()).unwrap();
        for r in &self.surviving_relations {
            writeln!(out, "  {r} = 0").unwrap();
        }
        writeln!(out, "antipode:").unwrap();
        for (k, x) in &self.antipode {
            writeln!(out, "  S({k}) = {x}").unwrap();
        }
        writeln!(out, "coproduct:").unwrap();
        for (k, x) in &self.coproduct {
            writeln!(out, "  Δ({k}) = {x}").unwrap();
        }
        if !self.inadmissible.is_empty() {
            writeln!(out, "inadmissible ({}):", self.inadmissible.len()).unwrap();
            for r in &self.inadmissible {
                writeln!(out, "{r}").unwrap();
            }
        }
        writeln!(out, "checks:").unwrap();
        checks_text(&mut out, &self.hopf_checks);
        writeln!(out, "{}", if self.passed { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

#[derive(Serialize)]
pub struct MemberDto {
    pub sigma: Vec<usize>,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub condition5: &'static str,
}

#[derive(Serialize)]
pub struct ClassDto {
    pub key: String,
    pub pattern: Vec<String>,
    #[serde(rename = "J")]
    pub j: String,
    pub members: Vec<MemberDto>,
    pub label: String,
}

pub fn catalog_json(classes: &[ContractionClass]) -> Vec<ClassDto> {
    classes
        .iter()
        .map(|c| ClassDto {
            key: c.key.to_string(),
            pattern: pattern_rows(&c.pattern),
            j: iota(c.j),
            members: c
                .members
                .iter()
                .map(|m| MemberDto {
                    sigma: m.sigma.clone(),
                    s: m.nil.iter().collect(),
                    condition5: m.condition5.name(),
                })
                .collect(),
            label: c.label.clone(),
        })
        .collect()
}

pub fn catalog_text(n: usize, classes: &[ContractionClass]) -> String {
    let mut out = format!("N = {n}: {} classes\n", classes.len());
    out.push_str(&render_catalog(classes));
    out
}
