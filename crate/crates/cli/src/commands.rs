use std::fmt::Write as _;

use dlchi_core::characters::CharacterTable;
use dlchi_core::combinatorics::{
    all_partitions, all_permutations, induced_trivial_value, x_count, x_recursive, Partition, PermutationW,
};
use dlchi_core::field::field_of_order;
use dlchi_core::flags::{
    all_specs, build_group_element, count_y, flag_count, point_count_histogram, EigenvalueChoice, GroupElementSpec,
    HeckeModule, HECKE_MAX_FLAGS,
};
use dlchi_core::green::{green_polynomial, GreenTable, IntPolynomial};
use dlchi_core::symfunc::scalar_product_ph;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::output::{big, Report};
use crate::CliError;

pub const TABLE_MAX_N: usize = 10;
pub const CHAR_TABLE_MAX_N: usize = 14;

fn sorted_partitions(n: usize) -> Vec<Partition> {
    let mut ps = all_partitions(n);
    ps.sort();
    ps
}

fn check_size(what: &str, n: usize, max: usize) -> Result<(), CliError> {
    if n == 0 || n > max {
        return Err(CliError::Usage(format!("{what} needs 1 <= n <= {max}, got {n}")));
    }
    Ok(())
}

pub fn parse_eigenvalues(s: &str) -> Result<EigenvalueChoice, CliError> {
    if s.trim() == "first" {
        return Ok(EigenvalueChoice::First);
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map(EigenvalueChoice::Explicit)
        .map_err(|_| CliError::Usage(format!("bad eigenvalue list {s:?}; expected 'first' or codes like 1,3")))
}

pub fn chi(rho: &Partition, lambda: &Partition) -> Result<Report, CliError> {
    let values: Vec<(&str, BigInt)> = vec![
        ("enumeration", x_count(rho, lambda)?.into()),
        ("recursion", x_recursive(rho, lambda)?.into()),
        ("scalar_product", scalar_product_ph(rho, lambda)?),
        ("induced_character", induced_trivial_value(lambda, rho)?.into()),
        ("green_at_1", green_polynomial(rho, lambda)?.eval_at_one()),
    ];
    let agree = values.iter().all(|(_, v)| *v == values[0].1);
    let mut r = Report::new("chi");
    r.set("rho", rho.to_string());
    r.set("lambda", lambda.to_string());
    let methods: serde_json::Map<String, Value> = values.iter().map(|(m, v)| (m.to_string(), big(v))).collect();
    r.result = json!({
        "rho": rho.to_string(),
        "lambda": lambda.to_string(),
        "methods": methods,
        "agree": agree,
    });
    r.header = vec!["method", "value"];
    r.rows = values.iter().map(|(m, v)| vec![m.to_string(), v.to_string()]).collect();
    for (m, v) in &values {
        writeln!(r.text, "{m:<18} {v}").unwrap();
    }
    writeln!(r.text, "agree: {}", if agree { "yes" } else { "no" }).unwrap();
    r.ok = agree;
    Ok(r)
}

pub fn table(n: usize) -> Result<Report, CliError> {
    check_size("table", n, TABLE_MAX_N)?;
    let ps = sorted_partitions(n);
    let mut matrix = Vec::with_capacity(ps.len());
    for rho in &ps {
        let row = ps
            .iter()
            .map(|lambda| x_recursive(rho, lambda).map(BigInt::from))
            .collect::<dlchi_core::Result<Vec<_>>>()?;
        matrix.push(row);
    }
    let mut r = Report::new("table");
    r.set("n", n);
    let labels: Vec<String> = ps.iter().map(Partition::to_string).collect();
    r.result = json!({
        "n": n,
        "rows": "rho",
        "columns": "lambda",
        "labels": labels,
        "matrix": matrix.iter().map(|row| row.iter().map(big).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    r.header = vec!["rho", "lambda", "x"];
    for (rho, row) in labels.iter().zip(&matrix) {
        for (lambda, x) in labels.iter().zip(row) {
            r.rows.push(vec![rho.clone(), lambda.clone(), x.to_string()]);
        }
    }
    let width = labels.iter().map(String::len).max().unwrap_or(1).max(6);
    write!(r.text, "{:>width$}", "rho\\lam").unwrap();
    for l in &labels {
        write!(r.text, " {l:>width$}").unwrap();
    }
    r.text.push('\n');
    for (rho, row) in labels.iter().zip(&matrix) {
        write!(r.text, "{rho:>width$}").unwrap();
        for x in row {
            write!(r.text, " {:>width$}", x.to_string()).unwrap();
        }
        r.text.push('\n');
    }
    Ok(r)
}

fn green_entry(rho: &Partition, lambda: &Partition, q: &IntPolynomial) -> Value {
    json!({
        "rho": rho.to_string(),
        "lambda": lambda.to_string(),
        "coefficients": q.coeffs().iter().map(big).collect::<Vec<_>>(),
        "polynomial": q.display_in("q"),
        "at_1": big(&q.eval_at_one()),
    })
}

pub fn green(n: Option<usize>, pair: Option<(Partition, Partition)>) -> Result<Report, CliError> {
    let mut r = Report::new("green");
    let entries: Vec<(Partition, Partition, IntPolynomial)> = match (n, pair) {
        (_, Some((rho, lambda))) => {
            r.set("rho", rho.to_string());
            r.set("lambda", lambda.to_string());
            let q = green_polynomial(&rho, &lambda)?;
            vec![(rho, lambda, q)]
        }
        (Some(n), None) => {
            check_size("green", n, TABLE_MAX_N)?;
            r.set("n", n);
            let table = GreenTable::build(n)?;
            let ps = sorted_partitions(n);
            let mut out = Vec::new();
            for rho in &ps {
                for lambda in &ps {
                    let q = table.get(rho, lambda).cloned().unwrap_or_else(IntPolynomial::zero);
                    out.push((rho.clone(), lambda.clone(), q));
                }
            }
            out
        }
        (None, None) => return Err(CliError::Usage("green needs --n or both --rho and --lambda".into())),
    };
    let values: Vec<Value> = entries.iter().map(|(a, b, q)| green_entry(a, b, q)).collect();
    r.result = if values.len() == 1 {
        values[0].clone()
    } else {
        json!({ "entries": values })
    };
    r.header = vec!["rho", "lambda", "coefficients", "at_1"];
    for (rho, lambda, q) in &entries {
        let coeffs: Vec<String> = q.coeffs().iter().map(BigInt::to_string).collect();
        r.rows.push(vec![rho.to_string(), lambda.to_string(), coeffs.join(" "), q.eval_at_one().to_string()]);
        writeln!(r.text, "Q_{rho}^{lambda}(q) = {}", q.display_in("q")).unwrap();
    }
    Ok(r)
}

pub fn char_table(n: usize) -> Result<Report, CliError> {
    check_size("char-table", n, CHAR_TABLE_MAX_N)?;
    let table = CharacterTable::build(n);
    let ps = sorted_partitions(n);
    let labels: Vec<String> = ps.iter().map(Partition::to_string).collect();
    let matrix: Vec<Vec<i64>> = ps.iter().map(|mu| ps.iter().map(|rho| table.value(mu, rho)).collect()).collect();
    let mut r = Report::new("char-table");
    r.set("n", n);
    r.result = json!({
        "n": n,
        "rows": "mu",
        "columns": "rho",
        "labels": labels,
        "matrix": matrix,
    });
    r.header = vec!["mu", "rho", "value"];
    for (mu, row) in labels.iter().zip(&matrix) {
        for (rho, v) in labels.iter().zip(row) {
            r.rows.push(vec![mu.clone(), rho.clone(), v.to_string()]);
        }
    }
    let width = labels.iter().map(String::len).max().unwrap_or(1).max(6);
    write!(r.text, "{:>width$}", "mu\\rho").unwrap();
    for l in &labels {
        write!(r.text, " {l:>width$}").unwrap();
    }
    r.text.push('\n');
    for (mu, row) in labels.iter().zip(&matrix) {
        write!(r.text, "{mu:>width$}").unwrap();
        for v in row {
            write!(r.text, " {v:>width$}").unwrap();
        }
        r.text.push('\n');
    }
    Ok(r)
}

pub struct CountRequest {
    pub q: u64,
    pub spec: GroupElementSpec,
    pub w: Option<PermutationW>,
    pub eigenvalues: EigenvalueChoice,
    pub budget: u64,
}

pub fn count(req: &CountRequest) -> Result<Report, CliError> {
    let field = field_of_order(req.q)?;
    let g = build_group_element(&req.spec, &field, &req.eigenvalues)?;
    let counts: Vec<(PermutationW, u64)> = match &req.w {
        Some(w) => vec![(w.clone(), count_y(w, &g, req.budget)?)],
        None => {
            let h = point_count_histogram(&g, req.budget)?;
            all_permutations(req.spec.n()).into_iter().map(|w| {
                let c = h.get(&w);
                (w, c)
            }).collect()
        }
    };
    let mut r = Report::new("count");
    r.set("n", req.spec.n());
    r.set("q", req.q);
    r.set("spec", req.spec.to_string());
    r.set("eigenvalues", req.eigenvalues.to_string());
    r.set("w", req.w.as_ref().map(|w| Value::from(w.to_string())).unwrap_or(Value::Null));
    r.set("budget", req.budget);
    r.result = json!({
        "q": req.q,
        "spec": req.spec.to_string(),
        "lambda": req.spec.lambda().to_string(),
        "lambda_prime": req.spec.lambda_prime().to_string(),
        "g": g.to_rows(),
        "flags": flag_count(req.spec.n(), req.q).to_string(),
        "counts": counts.iter().map(|(w, c)| json!({
            "w": w.one_line(),
            "cycles": w.to_string(),
            "count": c,
        })).collect::<Vec<_>>(),
    });
    r.header = vec!["w", "cycles", "count"];
    for (w, c) in &counts {
        let one_line: Vec<String> = w.one_line().iter().map(usize::to_string).collect();
        r.rows.push(vec![one_line.join(" "), w.to_string(), c.to_string()]);
        writeln!(r.text, "{:<12} {c}", w.to_string()).unwrap();
    }
    Ok(r)
}

pub fn hecke_fields(n: usize) -> Vec<u64> {
    [2u64, 3].into_iter().filter(|&q| flag_count(n, q) <= HECKE_MAX_FLAGS as u128).collect()
}

/// Relations at one field order, and trace identities for every listed
/// `(w, spec)` whose group element exists there.
pub fn hecke_at(
    n: usize,
    q: u64,
    cases: &[(PermutationW, GroupElementSpec)],
    eigenvalues: &EigenvalueChoice,
) -> Result<(Value, bool, String), CliError> {
    let field = field_of_order(q)?;
    let module = HeckeModule::new(n, &field)?;
    let report = module.relations_check();
    let mut ok = report.passed();
    let mut traces = Vec::new();
    let mut text = String::new();
    for rel in &report.relations {
        writeln!(text, "Q={q} {} {}", if rel.holds { "holds" } else { "FAILS" }, rel.relation).unwrap();
    }
    let mut skipped = 0;
    for (w, spec) in cases {
        let Ok(g) = build_group_element(spec, &field, eigenvalues) else {
            skipped += 1;
            continue;
        };
        let t = module.trace_identity(w, &g)?;
        ok &= t.holds;
        if !t.holds {
            writeln!(text, "Q={q} trace FAILS at w={w}, spec={spec}: {} vs {}", t.trace, t.count).unwrap();
        }
        traces.push(json!({
            "w": w.one_line(),
            "spec": spec.to_string(),
            "trace": t.trace,
            "count": t.count,
            "holds": t.holds,
        }));
    }
    writeln!(text, "Q={q} {} trace identities checked, {skipped} specs not realizable", traces.len()).unwrap();
    let value = json!({
        "q": q,
        "flag_count": report.flag_count,
        "relations": report.relations.iter().map(|r| json!({"relation": r.relation, "holds": r.holds})).collect::<Vec<_>>(),
        "traces": traces,
        "skipped_specs": skipped,
        "passed": ok,
    });
    Ok((value, ok, text))
}

pub fn hecke_check(n: usize, q: u64) -> Result<Report, CliError> {
    let cases: Vec<_> = all_permutations(n)
        .into_iter()
        .flat_map(|w| all_specs(n).into_iter().map(move |s| (w.clone(), s)))
        .collect();
    let (value, ok, text) = hecke_at(n, q, &cases, &EigenvalueChoice::First)?;
    let mut r = Report::new("hecke-check");
    r.set("n", n);
    r.set("q", q);
    r.header = vec!["relation", "holds"];
    if let Some(rels) = value["relations"].as_array() {
        for rel in rels {
            r.rows.push(vec![
                rel["relation"].as_str().unwrap_or_default().to_string(),
                rel["holds"].to_string(),
            ]);
        }
    }
    r.result = value;
    r.text = text;
    writeln!(r.text, "result: {}", if ok { "PASS" } else { "FAIL" }).unwrap();
    r.ok = ok;
    Ok(r)
}
