use std::fmt::Write as _;

use dlchi_core::combinatorics::{all_partitions, all_permutations, Partition, PermutationW};
use dlchi_core::flags::{all_specs, EigenvalueChoice, GroupElementSpec};
use dlchi_core::pipeline::{
    conjugation_check, coxeter_check, proposition_check, verify_main_theorem, CaseReport, CaseStatus,
    ConjugationCase, Pipeline, PipelineOptions, SamplingMode, Scope,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::commands::{hecke_at, hecke_fields};
use crate::output::{big, Report};
use crate::{parse_partition, CliError};

pub struct VerifyRequest {
    pub n: usize,
    pub mode: SamplingMode,
    pub budget: u64,
    pub eigenvalues: EigenvalueChoice,
    pub only: Option<String>,
    pub all_elements: bool,
}

/// Case selection from `--only`, e.g. `w=(12),lambda=(2,1,1)`.
#[derive(Default)]
struct Filter {
    w: Option<PermutationW>,
    rho: Option<Partition>,
    lambda: Option<Partition>,
    spec: Option<GroupElementSpec>,
}

/// Splits on commas outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_filter(s: &str, n: usize) -> Result<Filter, CliError> {
    let mut f = Filter::default();
    for item in split_top_level(s) {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("filter term {item:?} is not key=value")))?;
        let value = value.trim();
        match key.trim() {
            "w" => f.w = Some(PermutationW::parse_cycles(value, n)?),
            "rho" => f.rho = Some(parse_partition(value).map_err(CliError::Usage)?),
            "lambda" => f.lambda = Some(parse_partition(value).map_err(CliError::Usage)?),
            "spec" => f.spec = Some(value.parse()?),
            other => {
                return Err(CliError::Usage(format!(
                    "unknown filter key {other:?}; use w, rho, lambda or spec"
                )))
            }
        }
    }
    Ok(f)
}

fn build_scope(req: &VerifyRequest) -> Result<Scope, CliError> {
    let n = req.n;
    let filter = match &req.only {
        Some(s) => parse_filter(s, n)?,
        None => Filter::default(),
    };
    let ws: Vec<PermutationW> = match (&filter.w, &filter.rho) {
        (Some(w), _) => vec![w.clone()],
        (None, Some(rho)) => vec![PermutationW::class_representative(rho)],
        (None, None) if req.all_elements => all_permutations(n),
        (None, None) => {
            let mut ps = all_partitions(n);
            ps.sort();
            ps.iter().map(PermutationW::class_representative).collect()
        }
    };
    let specs: Vec<GroupElementSpec> = match (&filter.spec, &filter.lambda) {
        (Some(s), _) => vec![s.clone()],
        (None, Some(l)) => vec![GroupElementSpec::unipotent(l)],
        (None, None) => all_specs(n),
    };
    for w in &ws {
        if w.n() != n {
            return Err(CliError::Usage(format!("w = {w} is not in S_{n}")));
        }
    }
    for s in &specs {
        if s.n() != n {
            return Err(CliError::Usage(format!("spec {s} has size {}, not {n}", s.n())));
        }
    }
    Ok(Scope::new(
        ws.iter()
            .flat_map(|w| specs.iter().map(move |s| (w.clone(), s.clone())))
            .collect(),
    ))
}

fn poly_json(c: &CaseReport) -> Value {
    match &c.polynomial {
        Some(p) => Value::Array(
            p.coeffs()
                .iter()
                .map(|x| if x.is_integer() { big(&x.to_integer()) } else { Value::String(x.to_string()) })
                .collect(),
        ),
        None => Value::Null,
    }
}

fn case_json(check: &str, c: &CaseReport) -> Value {
    json!({
        "id": c.id,
        "check": check,
        "w": c.w.one_line(),
        "w_cycles": c.w.to_string(),
        "rho": c.rho.to_string(),
        "lambda": c.lambda.to_string(),
        "lambda_prime": c.lambda_prime.to_string(),
        "spec": c.spec.to_string(),
        "eigenvalues": c.eigenvalues.to_string(),
        "samples": c.samples,
        "poly": poly_json(c),
        "phi": c.polynomial.as_ref().map(ToString::to_string),
        "phi_at_1": c.phi_at_1.as_ref().map(big),
        "expected": big(&c.expected),
        "status": c.status.as_str(),
        "note": c.note,
    })
}

fn opt_big(v: &Option<BigInt>) -> Value {
    v.as_ref().map(big).unwrap_or(Value::Null)
}

fn conjugation_json(c: &ConjugationCase) -> Value {
    json!({
        "id": format!("conjugation:w={};s={};spec={}", c.w, c.s, c.spec),
        "w": c.w.one_line(),
        "s": c.s.one_line(),
        "sws": c.sws.one_line(),
        "spec": c.spec.to_string(),
        "chi_w": opt_big(&c.chi_w),
        "chi_sws": opt_big(&c.chi_sws),
        "counts_equal": c.counts_equal,
        "status": c.status.as_str(),
        "note": c.note,
    })
}

#[derive(Default)]
struct Tally {
    pass: usize,
    mismatch: usize,
    skipped: usize,
    resource_error: usize,
    failed: usize,
}

impl Tally {
    fn add(&mut self, s: CaseStatus) {
        match s {
            CaseStatus::Pass => self.pass += 1,
            CaseStatus::Mismatch => self.mismatch += 1,
            CaseStatus::Skipped => self.skipped += 1,
            CaseStatus::ResourceError => self.resource_error += 1,
            CaseStatus::Failed => self.failed += 1,
        }
    }

    fn json(&self) -> Value {
        json!({
            "pass": self.pass,
            "mismatch": self.mismatch,
            "skipped": self.skipped,
            "resource_error": self.resource_error,
            "failed": self.failed,
        })
    }

    fn line(&self) -> String {
        format!(
            "{} pass, {} mismatch, {} skipped, {} resource-error, {} failed",
            self.pass, self.mismatch, self.skipped, self.resource_error, self.failed
        )
    }
}

/// Every slot gets a different eigenvalue than under `first`, with the same
/// centralizer shape.
fn reversed_eigenvalues(slots: usize) -> EigenvalueChoice {
    EigenvalueChoice::Explicit((1..=slots as u32).rev().collect())
}

pub fn verify(req: &VerifyRequest) -> Result<Report, CliError> {
    if req.n == 0 {
        return Err(CliError::Usage("verify needs n >= 1".into()));
    }
    let scope = build_scope(req)?;
    let mut pipeline = Pipeline::new(PipelineOptions {
        mode: req.mode,
        budget: req.budget,
        degree_bound: None,
        eigenvalues: req.eigenvalues.clone(),
    });
    let mut text = String::new();
    let mut total = Tally::default();

    let mut main = verify_main_theorem(&mut pipeline, &scope)?;
    main.cases.sort_by(|a, b| a.id.cmp(&b.id));
    let mut tally = Tally::default();
    main.cases.iter().for_each(|c| tally.add(c.status));
    writeln!(text, "main theorem: {}", tally.line()).unwrap();
    let mut csv_cases: Vec<(&str, &CaseReport)> = main.cases.iter().map(|c| ("main-theorem", c)).collect();
    let main_json = json!({
        "summary": tally.json(),
        "cases": main.cases.iter().map(|c| case_json("main-theorem", c)).collect::<Vec<_>>(),
    });
    main.cases.iter().for_each(|c| total.add(c.status));

    let n = req.n;
    let coxeter_w = PermutationW::class_representative(&Partition::row(n));
    let coxeter_specs: Vec<GroupElementSpec> = {
        let mut specs: Vec<_> = scope
            .cases
            .iter()
            .filter(|(w, _)| w.cycle_type() == Partition::row(n))
            .map(|(_, s)| s.clone())
            .collect();
        specs.sort_by_key(ToString::to_string);
        specs.dedup();
        specs
    };
    let mut coxeter = coxeter_check(&mut pipeline, n, &coxeter_specs)?;
    coxeter.cases.sort_by(|a, b| a.id.cmp(&b.id));
    let mut tally = Tally::default();
    coxeter.cases.iter().for_each(|c| tally.add(c.status));
    writeln!(text, "coxeter (w = {coxeter_w}): {}", tally.line()).unwrap();
    csv_cases.extend(coxeter.cases.iter().map(|c| ("coxeter", c)));
    let coxeter_json = json!({
        "summary": tally.json(),
        "cases": coxeter.cases.iter().map(|c| case_json("coxeter", c)).collect::<Vec<_>>(),
    });
    coxeter.cases.iter().for_each(|c| total.add(c.status));

    let conj = conjugation_check(&mut pipeline, &scope)?;
    let mut conj_values: Vec<Value> = conj.cases.iter().map(conjugation_json).collect();
    conj_values.sort_by(|a, b| a["id"].as_str().cmp(&b["id"].as_str()));
    let mut tally = Tally::default();
    conj.cases.iter().for_each(|c| tally.add(c.status));
    let counts_differ = conj.cases.iter().filter(|c| c.counts_equal == Some(false)).count();
    writeln!(
        text,
        "conjugation: {} (raw counts differ in {counts_differ} of {} pairs)",
        tally.line(),
        conj.cases.len()
    )
    .unwrap();
    let conj_json = json!({
        "summary": tally.json(),
        "counts_differ": counts_differ,
        "cases": conj_values,
    });
    conj.cases.iter().for_each(|c| total.add(c.status));

    let mut prop_specs: Vec<GroupElementSpec> =
        scope.cases.iter().map(|(_, s)| s.clone()).filter(|s| s.num_slots() > 1).collect();
    prop_specs.sort_by_key(ToString::to_string);
    prop_specs.dedup();
    let mut tally = Tally::default();
    let mut prop_values = Vec::new();
    for spec in &prop_specs {
        let first = EigenvalueChoice::First;
        let other = reversed_eigenvalues(spec.num_slots());
        let id = format!("proposition:spec={spec};eigenvalues={first}|{other}");
        let (status, value) = match proposition_check(&mut pipeline, spec, &first, spec, &other) {
            Ok(r) => {
                let status = if r.identical() { CaseStatus::Pass } else { CaseStatus::Mismatch };
                let diffs: Vec<Value> = r
                    .differences
                    .iter()
                    .map(|(q, w, a, b)| json!({"q": q, "w": w.one_line(), "count1": a, "count2": b}))
                    .collect();
                (status, json!({
                    "id": id,
                    "spec": spec.to_string(),
                    "eigenvalues1": first.to_string(),
                    "eigenvalues2": other.to_string(),
                    "sizes": r.sizes,
                    "identical": r.identical(),
                    "differences": diffs,
                    "status": status.as_str(),
                    "note": Value::Null,
                }))
            }
            Err(e) => {
                let status = match &e {
                    dlchi_core::Error::TooFewEigenvalues { .. } | dlchi_core::Error::InvalidEigenvalues(_) => {
                        CaseStatus::Skipped
                    }
                    e if e.is_resource() => CaseStatus::ResourceError,
                    _ => CaseStatus::Failed,
                };
                (status, json!({
                    "id": id,
                    "spec": spec.to_string(),
                    "eigenvalues1": first.to_string(),
                    "eigenvalues2": other.to_string(),
                    "sizes": Value::Null,
                    "identical": Value::Null,
                    "differences": Value::Null,
                    "status": status.as_str(),
                    "note": e.to_string(),
                }))
            }
        };
        tally.add(status);
        total.add(status);
        prop_values.push(value);
    }
    writeln!(text, "proposition: {}", tally.line()).unwrap();
    let prop_json = json!({ "summary": tally.json(), "cases": prop_values });

    let mut hecke_values = Vec::new();
    for q in hecke_fields(n) {
        let (value, ok, t) = hecke_at(n, q, &scope.cases, &req.eigenvalues)?;
        total.add(if ok { CaseStatus::Pass } else { CaseStatus::Mismatch });
        text.push_str(&t);
        hecke_values.push(value);
    }
    if hecke_values.is_empty() {
        writeln!(text, "hecke: no field small enough for n = {n}").unwrap();
    }

    for (check, c) in &csv_cases {
        if c.status != CaseStatus::Pass {
            writeln!(text, "{check} {} {}: {}", c.id, c.status, c.note.clone().unwrap_or_default()).unwrap();
        }
    }
    for c in &conj.cases {
        if matches!(c.status, CaseStatus::Mismatch | CaseStatus::Failed) {
            writeln!(text, "conjugation w={} s={} spec={} {}", c.w, c.s, c.spec, c.status).unwrap();
        }
    }
    let passed = total.mismatch == 0 && total.failed == 0;
    writeln!(text, "total: {}", total.line()).unwrap();
    writeln!(text, "result: {}", if passed { "PASS" } else { "FAIL" }).unwrap();

    let mut r = Report::new("verify");
    r.set("n", n);
    r.set("mode", req.mode.to_string());
    r.set("budget", req.budget);
    r.set("eigenvalues", req.eigenvalues.to_string());
    r.set("only", req.only.clone().map(Value::from).unwrap_or(Value::Null));
    r.set("all_elements", req.all_elements);
    r.result = json!({
        "passed": passed,
        "summary": total.json(),
        "main_theorem": main_json,
        "coxeter": coxeter_json,
        "conjugation": conj_json,
        "proposition": prop_json,
        "hecke": hecke_values,
    });
    r.header = vec![
        "id", "check", "w", "rho", "lambda", "lambda_prime", "samples", "poly", "phi_at_1", "expected", "status",
    ];
    for (check, c) in &csv_cases {
        let samples: Vec<String> = c.samples.iter().map(|(q, v)| format!("{q}:{v}")).collect();
        let poly: Vec<String> = c
            .polynomial
            .as_ref()
            .map(|p| p.coeffs().iter().map(ToString::to_string).collect())
            .unwrap_or_default();
        let one_line: Vec<String> = c.w.one_line().iter().map(usize::to_string).collect();
        r.rows.push(vec![
            c.id.clone(),
            check.to_string(),
            one_line.join(" "),
            c.rho.to_string(),
            c.lambda.to_string(),
            c.lambda_prime.to_string(),
            samples.join(" "),
            poly.join(" "),
            c.phi_at_1.as_ref().map(ToString::to_string).unwrap_or_default(),
            c.expected.to_string(),
            c.status.as_str().to_string(),
        ]);
    }
    r.text = text;
    r.ok = passed;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_parsing() {
        assert_eq!(split_top_level("w=(12),lambda=(2,1,1)"), vec!["w=(12)", "lambda=(2,1,1)"]);
        let f = parse_filter("w=(12), lambda=(2,1,1)", 4).unwrap();
        assert_eq!(f.w.unwrap().one_line(), vec![2, 1, 3, 4]);
        assert_eq!(f.lambda.unwrap(), Partition::new(vec![2, 1, 1]).unwrap());
        let f = parse_filter("spec=(2)|(1),rho=(3)", 3).unwrap();
        assert_eq!(f.spec.unwrap().num_slots(), 2);
        assert!(parse_filter("x=1", 3).is_err());
        assert!(parse_filter("w", 3).is_err());
    }

    #[test]
    fn scope_from_filter() {
        let req = VerifyRequest {
            n: 4,
            mode: SamplingMode::CrossSize,
            budget: 1,
            eigenvalues: EigenvalueChoice::First,
            only: Some("w=(12),lambda=(2,1,1)".into()),
            all_elements: false,
        };
        assert_eq!(build_scope(&req).unwrap().cases.len(), 1);
        let req = VerifyRequest { only: None, ..req };
        assert_eq!(build_scope(&req).unwrap().cases.len(), 5 * 14);
        let req = VerifyRequest { only: Some("lambda=(2,1)".into()), ..req };
        assert!(build_scope(&req).is_err());
    }
}
