use std::fmt;

use num_bigint::BigInt;

use super::{Pipeline, RatPolynomial};
use crate::combinatorics::{all_partitions, all_permutations, x_count, Partition, PermutationW};
use crate::error::{Error, Result};
use crate::flags::{all_specs, EigenvalueChoice, GroupElementSpec};

/// The `(w, spec)` pairs a check runs over.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Scope {
    pub cases: Vec<(PermutationW, GroupElementSpec)>,
}

impl Scope {
    pub fn new(cases: Vec<(PermutationW, GroupElementSpec)>) -> Self {
        Scope { cases }
    }

    /// One minimal-length representative per conjugacy class, against every
    /// spec.
    pub fn classes(n: usize) -> Self {
        let specs = all_specs(n);
        let cases = all_partitions(n)
            .iter()
            .map(PermutationW::class_representative)
            .flat_map(|w| specs.iter().map(move |s| (w.clone(), s.clone())))
            .collect();
        Scope { cases }
    }

    /// Every element of `S_n` against every spec.
    pub fn elements(n: usize) -> Self {
        let specs = all_specs(n);
        let cases = all_permutations(n)
            .into_iter()
            .flat_map(|w| specs.iter().map(move |s| (w.clone(), s.clone())))
            .collect();
        Scope { cases }
    }

    pub fn retain(&mut self, keep: impl FnMut(&(PermutationW, GroupElementSpec)) -> bool) {
        self.cases.retain(keep);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseStatus {
    Pass,
    Mismatch,
    /// The spec cannot be realized in the sampling mode.
    Skipped,
    /// The enumeration budget does not allow enough samples.
    ResourceError,
    /// Internal inconsistency, such as a fit with fractional coefficients.
    Failed,
}

impl CaseStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseStatus::Pass => "pass",
            CaseStatus::Mismatch => "mismatch",
            CaseStatus::Skipped => "skipped",
            CaseStatus::ResourceError => "resource-error",
            CaseStatus::Failed => "failed",
        }
    }

    fn from_error(e: &Error) -> Self {
        match e {
            Error::TooFewEigenvalues { .. } | Error::InvalidEigenvalues(_) => CaseStatus::Skipped,
            e if e.is_resource() => CaseStatus::ResourceError,
            _ => CaseStatus::Failed,
        }
    }
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One `φ(1)`-versus-expected comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub id: String,
    pub w: PermutationW,
    pub rho: Partition,
    pub spec: GroupElementSpec,
    pub lambda: Partition,
    pub lambda_prime: Partition,
    pub eigenvalues: EigenvalueChoice,
    pub samples: Vec<(u64, u64)>,
    pub polynomial: Option<RatPolynomial>,
    pub phi_at_1: Option<BigInt>,
    pub expected: BigInt,
    pub status: CaseStatus,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub cases: Vec<CaseReport>,
}

impl VerificationReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases
            .iter()
            .filter(|c| matches!(c.status, CaseStatus::Mismatch | CaseStatus::Failed))
    }

    pub fn count(&self, status: CaseStatus) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    /// No mismatches and no internal failures.
    pub fn passed(&self) -> bool {
        self.mismatches().next().is_none()
    }
}

fn run_case(
    pipeline: &mut Pipeline,
    check: &str,
    w: &PermutationW,
    spec: &GroupElementSpec,
    expected: BigInt,
) -> CaseReport {
    let choice = pipeline.options().eigenvalues.clone();
    let mut report = CaseReport {
        id: format!("{check}:w={w};spec={spec}"),
        w: w.clone(),
        rho: w.cycle_type(),
        spec: spec.clone(),
        lambda: spec.lambda(),
        lambda_prime: spec.lambda_prime(),
        eigenvalues: choice.clone(),
        samples: Vec::new(),
        polynomial: None,
        phi_at_1: None,
        expected,
        status: CaseStatus::Failed,
        note: None,
    };
    match pipeline.euler_characteristic_with(w, spec, &choice) {
        Ok(e) => {
            report.status = if e.value == report.expected {
                CaseStatus::Pass
            } else {
                CaseStatus::Mismatch
            };
            report.samples = e.series.samples;
            report.polynomial = Some(e.polynomial);
            report.phi_at_1 = Some(e.value);
        }
        Err(e) => {
            report.status = CaseStatus::from_error(&e);
            report.note = Some(e.to_string());
        }
    }
    report
}

/// `χ(𝒴_{w,g}) = X_ρ^λ` for every case in scope, `ρ` the cycle type of `w`
/// and `λ` the Jordan type of `g_u`.
pub fn verify_main_theorem(pipeline: &mut Pipeline, scope: &Scope) -> Result<VerificationReport> {
    let mut cases = Vec::with_capacity(scope.cases.len());
    for (w, spec) in &scope.cases {
        let expected = BigInt::from(x_count(&w.cycle_type(), &spec.lambda())?);
        cases.push(run_case(pipeline, "main-theorem", w, spec, expected));
    }
    Ok(VerificationReport {
        check: "main-theorem".into(),
        cases,
    })
}

/// For an `n`-cycle `w`: `χ(𝒴_{w,g}) = 1` if `g_u` is regular unipotent and
/// 0 otherwise.
pub fn coxeter_check(pipeline: &mut Pipeline, n: usize, specs: &[GroupElementSpec]) -> Result<VerificationReport> {
    let w = PermutationW::class_representative(&Partition::row(n));
    let mut cases = Vec::with_capacity(specs.len());
    for spec in specs {
        if spec.n() != n {
            return Err(Error::DimensionMismatch(format!("spec {spec} is not of size {n}")));
        }
        let expected = BigInt::from(u8::from(spec.lambda() == Partition::row(n)));
        cases.push(run_case(pipeline, "coxeter", &w, spec, expected));
    }
    Ok(VerificationReport {
        check: "coxeter".into(),
        cases,
    })
}

/// `χ(𝒴_{w,g})` against `χ(𝒴_{sws,g})` for one simple reflection `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationCase {
    pub w: PermutationW,
    pub s: PermutationW,
    pub sws: PermutationW,
    pub spec: GroupElementSpec,
    pub chi_w: Option<BigInt>,
    pub chi_sws: Option<BigInt>,
    /// Whether the raw count series coincide too; observed, not required.
    pub counts_equal: Option<bool>,
    pub status: CaseStatus,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationReport {
    pub cases: Vec<ConjugationCase>,
}

impl ConjugationReport {
    pub fn passed(&self) -> bool {
        self.cases
            .iter()
            .all(|c| !matches!(c.status, CaseStatus::Mismatch | CaseStatus::Failed))
    }
}

/// For every case in scope and every simple reflection `s`, compares the
/// Euler characteristics at `w` and `sws`.
pub fn conjugation_check(pipeline: &mut Pipeline, scope: &Scope) -> Result<ConjugationReport> {
    let choice = pipeline.options().eigenvalues.clone();
    let mut cases = Vec::new();
    for (w, spec) in &scope.cases {
        let n = w.n();
        for i in 1..n {
            let s = PermutationW::simple_reflection(n, i)?;
            let sws = &(&s * w) * &s;
            let mut case = ConjugationCase {
                w: w.clone(),
                s: s.clone(),
                sws: sws.clone(),
                spec: spec.clone(),
                chi_w: None,
                chi_sws: None,
                counts_equal: None,
                status: CaseStatus::Failed,
                note: None,
            };
            let a = pipeline.euler_characteristic_with(w, spec, &choice);
            let b = pipeline.euler_characteristic_with(&sws, spec, &choice);
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    case.status = if a.value == b.value {
                        CaseStatus::Pass
                    } else {
                        CaseStatus::Mismatch
                    };
                    let common = a.series.samples.len().min(b.series.samples.len());
                    case.counts_equal = Some(a.series.samples[..common] == b.series.samples[..common]);
                    case.chi_w = Some(a.value);
                    case.chi_sws = Some(b.value);
                }
                (Err(e), _) | (_, Err(e)) => {
                    case.status = CaseStatus::from_error(&e);
                    case.note = Some(e.to_string());
                }
            }
            cases.push(case);
        }
    }
    Ok(ConjugationReport { cases })
}

/// Sample-by-sample comparison of the counts for two specs with the same
/// `λ`, `λ′` and `φ_g` but different eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropositionReport {
    pub spec1: GroupElementSpec,
    pub eigenvalues1: EigenvalueChoice,
    pub spec2: GroupElementSpec,
    pub eigenvalues2: EigenvalueChoice,
    pub sizes: Vec<u64>,
    /// `(Q, w, count1, count2)` wherever the counts differ.
    pub differences: Vec<(u64, PermutationW, u64, u64)>,
}

impl PropositionReport {
    pub fn identical(&self) -> bool {
        self.differences.is_empty()
    }
}

/// Compares the counts of every `w ∈ S_n` at `n(n−1)/2 + 2` field sizes
/// admissible for both eigenvalue choices.
pub fn proposition_check(
    pipeline: &mut Pipeline,
    spec1: &GroupElementSpec,
    eigenvalues1: &EigenvalueChoice,
    spec2: &GroupElementSpec,
    eigenvalues2: &EigenvalueChoice,
) -> Result<PropositionReport> {
    if spec1.n() != spec2.n() || spec1.lambda_prime() != spec2.lambda_prime() || spec1.phi() != spec2.phi() {
        return Err(Error::InvalidEigenvalues(format!(
            "specs {spec1} and {spec2} differ in more than the eigenvalue choice"
        )));
    }
    let n = spec1.n();
    let count = pipeline.options().degree_bound.unwrap_or(n * n.saturating_sub(1) / 2) + 2;
    let sizes = pipeline.sample_orders(
        n,
        &[(spec1.num_slots(), eigenvalues1), (spec2.num_slots(), eigenvalues2)],
        count,
    )?;
    let mut differences = Vec::new();
    for &q in &sizes {
        let field = crate::field::field_of_order(q)?;
        let h1 = pipeline.histogram(spec1, eigenvalues1, &field)?;
        let h2 = pipeline.histogram(spec2, eigenvalues2, &field)?;
        for w in all_permutations(n) {
            let (a, b) = (h1.get(&w), h2.get(&w));
            if a != b {
                differences.push((q, w, a, b));
            }
        }
    }
    Ok(PropositionReport {
        spec1: spec1.clone(),
        eigenvalues1: eigenvalues1.clone(),
        spec2: spec2.clone(),
        eigenvalues2: eigenvalues2.clone(),
        sizes,
        differences,
    })
}
