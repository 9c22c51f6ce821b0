//! Point-count series of `𝒴_{w,g}` over growing finite fields, exact
//! interpolation in the field size, evaluation at 1, and the checks built
//! on top of it.
//!
//! Two sampling modes are supported. Cross-size mode counts over fields of
//! increasing order `Q = 2, 3, 4, 5, 7, 8, …`, keeping the eigenvalue
//! encodings fixed, and skips sizes with too few nonzero elements. Power-tower
//! mode counts over `GF(q^m)`, `m = 1, 2, …`, for a prime `q`, with all
//! eigenvalues in `GF(q)`.

mod checks;
mod interpolate;
mod remark;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::combinatorics::PermutationW;
use crate::error::{Error, Result};
use crate::field::{field_of_order, is_prime, is_prime_power, FiniteField, MAX_ORDER};
use crate::flags::{
    build_group_element, flag_count, point_count_histogram, EigenvalueChoice, GroupElementSpec, PointCountHistogram,
    DEFAULT_BUDGET,
};

pub use checks::{
    conjugation_check, coxeter_check, proposition_check, verify_main_theorem, CaseReport, CaseStatus,
    ConjugationCase, ConjugationReport, PropositionReport, Scope, VerificationReport,
};
pub use interpolate::RatPolynomial;
pub use remark::{dl_remark, DlRemark};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SamplingMode {
    CrossSize,
    PowerTower { q: u32 },
}

impl fmt::Display for SamplingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SamplingMode::CrossSize => write!(f, "cross-size"),
            SamplingMode::PowerTower { q } => write!(f, "power-tower(q={q})"),
        }
    }
}

impl FromStr for SamplingMode {
    type Err = Error;

    /// `cross-size`, `power-tower` (with `q = 2`) or `power-tower:Q`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "cross-size" => Ok(SamplingMode::CrossSize),
            "power-tower" => Ok(SamplingMode::PowerTower { q: 2 }),
            other => other
                .strip_prefix("power-tower:")
                .and_then(|q| q.parse().ok())
                .map(|q| SamplingMode::PowerTower { q })
                .ok_or_else(|| Error::Parse(format!("unknown sampling mode '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub mode: SamplingMode,
    /// Maximum number of flags per field.
    pub budget: u64,
    /// Initial degree bound; `n(n−1)/2` when unset.
    pub degree_bound: Option<usize>,
    pub eigenvalues: EigenvalueChoice,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            mode: SamplingMode::CrossSize,
            budget: DEFAULT_BUDGET,
            degree_bound: None,
            eigenvalues: EigenvalueChoice::First,
        }
    }
}

/// Point counts `(Q, |𝒴_{w,g}(F_Q)|)` at increasing field sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCountSeries {
    pub mode: SamplingMode,
    pub w: PermutationW,
    pub spec: GroupElementSpec,
    pub eigenvalues: EigenvalueChoice,
    pub degree_bound: usize,
    pub samples: Vec<(u64, u64)>,
}

/// `φ` with `|𝒴_{w,g}(F_Q)| = φ(Q)` at every sample, and `χ = φ(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCharacteristic {
    pub series: PointCountSeries,
    pub polynomial: RatPolynomial,
    pub value: BigInt,
}

type HistogramKey = (GroupElementSpec, EigenvalueChoice, u32);

/// Runs series, fits and checks, reusing one count histogram per
/// `(spec, eigenvalues, field)` across all `w`.
pub struct Pipeline {
    options: PipelineOptions,
    histograms: HashMap<HistogramKey, Arc<PointCountHistogram>>,
}

impl Pipeline {
    pub fn new(options: PipelineOptions) -> Self {
        Pipeline {
            options,
            histograms: HashMap::new(),
        }
    }

    pub fn options(&self) -> &PipelineOptions {
        &self.options
    }

    /// Field orders within budget for `GL_n`, in sampling order.
    fn candidate_orders(&self, n: usize) -> Box<dyn Iterator<Item = u64>> {
        let budget = self.options.budget as u128;
        let within = move |q: &u64| flag_count(n, *q) <= budget;
        match self.options.mode {
            SamplingMode::CrossSize => Box::new(
                (2..=MAX_ORDER)
                    .take_while(within)
                    .filter(|&q| is_prime_power(q)),
            ),
            SamplingMode::PowerTower { q } => Box::new(
                (1..)
                    .map_while(move |m| (q as u64).checked_pow(m).filter(|&o| o <= MAX_ORDER))
                    .take_while(within),
            ),
        }
    }

    /// Checks that power-tower mode can realize `choice` in its base field.
    fn check_mode(&self, slots: usize, choice: &EigenvalueChoice) -> Result<()> {
        let SamplingMode::PowerTower { q } = self.options.mode else {
            return Ok(());
        };
        if !is_prime(q as u64) {
            return Err(Error::InvalidField(format!("power-tower mode needs a prime base, got {q}")));
        }
        if choice.fits_prime_field(q, slots) {
            return Ok(());
        }
        Err(match choice {
            EigenvalueChoice::First => Error::TooFewEigenvalues {
                order: q as u64,
                needed: slots,
            },
            EigenvalueChoice::Explicit(v) => Error::InvalidEigenvalues(format!("{v:?} do not all lie in GF({q})")),
        })
    }

    /// The first `count` field orders at which every `(slots, choice)`
    /// requirement resolves.
    pub fn sample_orders(&self, n: usize, requirements: &[(usize, &EigenvalueChoice)], count: usize) -> Result<Vec<u64>> {
        for (slots, choice) in requirements {
            self.check_mode(*slots, choice)?;
        }
        let orders: Vec<u64> = self
            .candidate_orders(n)
            .filter(|&q| requirements.iter().all(|(slots, choice)| choice.admissible(q as u32, *slots)))
            .take(count)
            .collect();
        if orders.len() < count {
            return Err(Error::InsufficientSamples {
                feasible: orders,
                needed: count,
            });
        }
        Ok(orders)
    }

    /// The first `count` fields admissible for `spec` under the current mode.
    pub fn sample_fields(
        &self,
        spec: &GroupElementSpec,
        choice: &EigenvalueChoice,
        count: usize,
    ) -> Result<Vec<Arc<FiniteField>>> {
        self.sample_orders(spec.n(), &[(spec.num_slots(), choice)], count)?
            .into_iter()
            .map(field_of_order)
            .collect()
    }

    pub fn histogram(
        &mut self,
        spec: &GroupElementSpec,
        choice: &EigenvalueChoice,
        field: &Arc<FiniteField>,
    ) -> Result<Arc<PointCountHistogram>> {
        let key = (spec.clone(), choice.clone(), field.order());
        if let Some(h) = self.histograms.get(&key) {
            return Ok(Arc::clone(h));
        }
        let g = build_group_element(spec, field, choice)?;
        let h = Arc::new(point_count_histogram(&g, self.options.budget)?);
        self.histograms.insert(key, Arc::clone(&h));
        Ok(h)
    }

    /// Counts at `degree_bound + 2` field sizes.
    pub fn count_series_with(
        &mut self,
        w: &PermutationW,
        spec: &GroupElementSpec,
        choice: &EigenvalueChoice,
        degree_bound: usize,
    ) -> Result<PointCountSeries> {
        if w.n() != spec.n() {
            return Err(Error::DimensionMismatch(format!("w in S_{} but spec {spec} has size {}", w.n(), spec.n())));
        }
        let fields = self.sample_fields(spec, choice, degree_bound + 2)?;
        let mut samples = Vec::with_capacity(fields.len());
        for f in &fields {
            let h = self.histogram(spec, choice, f)?;
            samples.push((f.order() as u64, h.get(w)));
        }
        Ok(PointCountSeries {
            mode: self.options.mode,
            w: w.clone(),
            spec: spec.clone(),
            eigenvalues: choice.clone(),
            degree_bound,
            samples,
        })
    }

    pub fn count_series(
        &mut self,
        w: &PermutationW,
        spec: &GroupElementSpec,
        degree_bound: usize,
    ) -> Result<PointCountSeries> {
        let choice = self.options.eigenvalues.clone();
        self.count_series_with(w, spec, &choice, degree_bound)
    }

    /// `φ(1)`, raising the degree bound while a held-out sample disagrees.
    pub fn euler_characteristic_with(
        &mut self,
        w: &PermutationW,
        spec: &GroupElementSpec,
        choice: &EigenvalueChoice,
    ) -> Result<EulerCharacteristic> {
        let n = spec.n();
        let mut degree = self.options.degree_bound.unwrap_or(n * n.saturating_sub(1) / 2);
        loop {
            let series = self.count_series_with(w, spec, choice, degree)?;
            match fit_polynomial(&series) {
                Ok(polynomial) => {
                    let value = polynomial.eval(&BigRational::one()).to_integer();
                    return Ok(EulerCharacteristic {
                        series,
                        polynomial,
                        value,
                    });
                }
                Err(Error::DegreeBoundViolated { .. }) => degree = (2 * degree).max(1),
                Err(e) => return Err(e),
            }
        }
    }

    pub fn euler_characteristic(&mut self, w: &PermutationW, spec: &GroupElementSpec) -> Result<EulerCharacteristic> {
        let choice = self.options.eigenvalues.clone();
        self.euler_characteristic_with(w, spec, &choice)
    }
}

/// Counts with default options.
pub fn count_series(
    w: &PermutationW,
    spec: &GroupElementSpec,
    mode: SamplingMode,
    degree_bound: usize,
) -> Result<PointCountSeries> {
    Pipeline::new(PipelineOptions {
        mode,
        ..PipelineOptions::default()
    })
    .count_series(w, spec, degree_bound)
}

/// Exact interpolation through the first `degree_bound + 1` samples; every
/// later sample must agree and the coefficients must be integers.
pub fn fit_polynomial(series: &PointCountSeries) -> Result<RatPolynomial> {
    interpolate::fit_samples(&series.samples, series.degree_bound)
}

/// `χ(𝒴_{w,g})` with default options.
pub fn euler_characteristic(w: &PermutationW, spec: &GroupElementSpec) -> Result<BigInt> {
    Ok(Pipeline::new(PipelineOptions::default()).euler_characteristic(w, spec)?.value)
}
