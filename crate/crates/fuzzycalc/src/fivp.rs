//! Solvers and analysis for the fuzzy initial value problem
//! `dy/dt = k x y, y(0) = c` with fuzzy `k` and `c`.
//!
//! Levelwise, the problem becomes a pair of crisp ODEs whose right-hand
//! sides are the min and max of the four endpoint products `k_i * y_j`:
//!
//! ```text
//! y1' = min{k1 y1, k1 y2, k2 y1, k2 y2}
//! y2' = max{k1 y1, k1 y2, k2 y1, k2 y2}
//! ```
//!
//! Closed forms exist when the coefficient keeps one sign across all levels
//! (growth: both endpoints >= 0, decay: both < 0). A fixed-step
//! Runge-Kutta integrator of the full min/max system serves as the
//! independent numeric oracle for every case, including mixed-sign `k`.
//!
//! For the decay case two closed-form variants are shipped. The
//! `PaperVerbatim` coefficients follow the printed hyperbolic solution
//! template literally; the `Rederived` coefficients come from substituting
//! that template into the coupled system `y1' = k1 y2, y2' = k2 y1` and
//! matching the initial conditions. The two disagree (the verbatim form
//! does not satisfy the system; see [`residual_check`]), and callers choose
//! explicitly which one to evaluate.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyNumber;
use crate::grid::AlphaGrid;
use crate::seikkala::{seikkala_verdict, LevelEval, LevelFunctionField, SeikkalaReport};

/// Default tolerance used where envelope or verdict checks need slack for
/// float noise.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Guard on `|k2|` below which the decay coefficient ratio becomes singular.
pub const DECAY_EPSILON: f64 = 1e-12;

/// Sign classification of the coefficient across all alpha levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// `k1(alpha) >= 0` at every level.
    Growth,
    /// `k2(alpha) <= -eps` at every level.
    Decay,
    /// Anything else; only the numeric integrator applies.
    Mixed,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseTag::Growth => write!(f, "growth"),
            CaseTag::Decay => write!(f, "decay"),
            CaseTag::Mixed => write!(f, "mixed"),
        }
    }
}

/// Which decay closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecayVariant {
    /// Coefficients exactly as printed in the source solution template.
    PaperVerbatim,
    /// Coefficients from substituting the template into the coupled system
    /// and matching `y(0) = c`; satisfies the system wherever levels stay
    /// positive.
    Rederived,
}

/// Classify the coefficient: growth when the lower envelope never goes
/// negative, decay when the upper envelope stays below `-eps`, mixed
/// otherwise.
pub fn classify_case(k: &FuzzyNumber, eps: f64) -> CaseTag {
    if k.lower().iter().all(|&v| v >= 0.0) {
        CaseTag::Growth
    } else if k.upper().iter().all(|&v| v <= -eps) {
        CaseTag::Decay
    } else {
        CaseTag::Mixed
    }
}

/// Hyperbolic-solution coefficients for one alpha level of the decay case:
/// `y1 = a11 e^{pt} + a12 e^{-pt}`, `y2 = a21 e^{pt} - a22 e^{-pt}` with
/// `p = sqrt(k1 k2)` and `q = sqrt(k1 / k2)`. The `d*` fields are the
/// derivatives of the coefficients with respect to alpha, used for analytic
/// alpha-partials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayCoefficients {
    pub p: f64,
    pub q: f64,
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
    pub dp: f64,
    pub da11: f64,
    pub da12: f64,
    pub da21: f64,
    pub da22: f64,
}

impl DecayCoefficients {
    /// `(y1, y2)` at time `t`.
    pub fn value(&self, t: f64) -> (f64, f64) {
        let e = (self.p * t).exp();
        let f = (-self.p * t).exp();
        (
            self.a11 * e + self.a12 * f,
            self.a21 * e - self.a22 * f,
        )
    }

    /// `(y1', y2')` at time `t`.
    pub fn time_derivative(&self, t: f64) -> (f64, f64) {
        let e = (self.p * t).exp();
        let f = (-self.p * t).exp();
        (
            self.p * (self.a11 * e - self.a12 * f),
            self.p * (self.a21 * e + self.a22 * f),
        )
    }

    /// `(dy1/dalpha, dy2/dalpha)` at time `t`.
    pub fn alpha_partial(&self, t: f64) -> (f64, f64) {
        let e = (self.p * t).exp();
        let f = (-self.p * t).exp();
        (
            self.da11 * e + self.a11 * t * self.dp * e + self.da12 * f
                - self.a12 * t * self.dp * f,
            self.da21 * e + self.a21 * t * self.dp * e - self.da22 * f
                + self.a22 * t * self.dp * f,
        )
    }
}

/// Compute the decay coefficients at one alpha level.
///
/// Requires `k1(alpha), k2(alpha) < 0` (decay case, with `|k2| > eps` to
/// keep the ratio `q` finite) and `c1(alpha), c2(alpha) >= 0`.
pub fn decay_coefficients(
    k: &FuzzyNumber,
    c: &FuzzyNumber,
    alpha: f64,
    variant: DecayVariant,
) -> Result<DecayCoefficients> {
    let (k1, k2, dk1, dk2) = k.cut_with_slope(alpha)?;
    if k1 >= 0.0 || k2 >= 0.0 {
        let found = if k1 >= 0.0 && k2 >= 0.0 {
            CaseTag::Growth
        } else {
            CaseTag::Mixed
        };
        return Err(Error::WrongCase {
            expected: CaseTag::Decay,
            found,
        });
    }
    if k2 > -DECAY_EPSILON {
        return Err(Error::SingularRatio { alpha, k2 });
    }
    let (c1, c2, dc1, dc2) = c.cut_with_slope(alpha)?;
    if c1 < 0.0 {
        return Err(Error::NegativeInitial { alpha, value: c1 });
    }
    if c2 < 0.0 {
        return Err(Error::NegativeInitial { alpha, value: c2 });
    }

    let p = (k1 * k2).sqrt();
    let dp = (dk1 * k2 + k1 * dk2) / (2.0 * p);
    let q = (k1 / k2).sqrt();
    let dq = (dk1 * k2 - k1 * dk2) / (k2 * k2) / (2.0 * q);

    match variant {
        DecayVariant::PaperVerbatim => {
            let a11 = 0.5 * (c1 + q * c2);
            let a12 = 0.5 * (c1 - q * c2);
            let a21 = 0.5 * (c1 / q + c2);
            let a22 = 0.5 * (c1 / q - c2);
            let d_c1_over_q = (dc1 * q - c1 * dq) / (q * q);
            Ok(DecayCoefficients {
                p,
                q,
                a11,
                a12,
                a21,
                a22,
                dp,
                da11: 0.5 * (dc1 + dq * c2 + q * dc2),
                da12: 0.5 * (dc1 - dq * c2 - q * dc2),
                da21: 0.5 * (d_c1_over_q + dc2),
                da22: 0.5 * (d_c1_over_q - dc2),
            })
        }
        DecayVariant::Rederived => {
            // substitute y1 = b11 e^{pt} + b12 e^{-pt} into y1' = k1 y2,
            // y2' = k2 y1, match y(0) = (c1, c2):
            //   b11 - b12 = (k1 / p) c2, b11 + b12 = c1,
            //   y2 = (p / k1)(b11 e^{pt} - b12 e^{-pt})
            let r = k1 / p;
            let dr = (dk1 * p - k1 * dp) / (p * p);
            let b11 = 0.5 * (c1 + r * c2);
            let b12 = 0.5 * (c1 - r * c2);
            let db11 = 0.5 * (dc1 + dr * c2 + r * dc2);
            let db12 = 0.5 * (dc1 - dr * c2 - r * dc2);
            let s = p / k1;
            let ds = -dr / (r * r);
            Ok(DecayCoefficients {
                p,
                q,
                a11: b11,
                a12: b12,
                a21: s * b11,
                a22: s * b12,
                dp,
                da11: db11,
                da12: db12,
                da21: ds * b11 + s * db11,
                da22: ds * b12 + s * db12,
            })
        }
    }
}

struct GrowthEval {
    k: FuzzyNumber,
    c: FuzzyNumber,
}

impl LevelEval for GrowthEval {
    fn value(&self, t: f64, alpha: f64) -> (f64, f64) {
        let (k1, k2, _, _) = self.k.cut_with_slope_unchecked(alpha);
        let (c1, c2, _, _) = self.c.cut_with_slope_unchecked(alpha);
        (c1 * (k1 * t).exp(), c2 * (k2 * t).exp())
    }

    fn time_derivative(&self, t: f64, alpha: f64) -> Option<(f64, f64)> {
        let (k1, k2, _, _) = self.k.cut_with_slope_unchecked(alpha);
        let (c1, c2, _, _) = self.c.cut_with_slope_unchecked(alpha);
        Some((c1 * k1 * (k1 * t).exp(), c2 * k2 * (k2 * t).exp()))
    }

    fn alpha_partial(&self, t: f64, alpha: f64) -> Option<(f64, f64)> {
        let (k1, k2, dk1, dk2) = self.k.cut_with_slope_unchecked(alpha);
        let (c1, c2, dc1, dc2) = self.c.cut_with_slope_unchecked(alpha);
        Some((
            (dc1 + c1 * t * dk1) * (k1 * t).exp(),
            (dc2 + c2 * t * dk2) * (k2 * t).exp(),
        ))
    }
}

struct DecayEval {
    k: FuzzyNumber,
    c: FuzzyNumber,
    variant: DecayVariant,
}

impl DecayEval {
    fn coefficients(&self, alpha: f64) -> DecayCoefficients {
        // construction of the field pre-validated every grid level, so the
        // per-level preconditions hold on the whole interpolated range
        decay_coefficients(&self.k, &self.c, alpha, self.variant)
            .expect("decay coefficients validated at field construction")
    }
}

impl LevelEval for DecayEval {
    fn value(&self, t: f64, alpha: f64) -> (f64, f64) {
        self.coefficients(alpha).value(t)
    }

    fn time_derivative(&self, t: f64, alpha: f64) -> Option<(f64, f64)> {
        Some(self.coefficients(alpha).time_derivative(t))
    }

    fn alpha_partial(&self, t: f64, alpha: f64) -> Option<(f64, f64)> {
        Some(self.coefficients(alpha).alpha_partial(t))
    }
}

/// The fuzzy initial value problem: coefficient `k`, initial condition `c`
/// (sharing one alpha grid), time interval `[0, t_end]`, integrator step.
#[derive(Debug, Clone)]
pub struct FivpModel {
    k: FuzzyNumber,
    c: FuzzyNumber,
    t_end: f64,
    t_step: f64,
}

impl FivpModel {
    pub fn new(k: FuzzyNumber, c: FuzzyNumber, t_end: f64, t_step: f64) -> Result<Self> {
        if k.grid() != c.grid() {
            return Err(Error::GridMismatch);
        }
        if !(t_end > 0.0) || !t_end.is_finite() {
            return Err(Error::InvalidModel(format!(
                "t_end must be positive and finite, got {t_end}"
            )));
        }
        if !(t_step > 0.0) || t_step > t_end {
            return Err(Error::InvalidModel(format!(
                "t_step must satisfy 0 < t_step <= t_end, got {t_step}"
            )));
        }
        let report = k.validate(DEFAULT_TOL);
        if !report.valid() {
            return Err(Error::InvalidModel(format!(
                "k fails the envelope conditions (worst violation {:.3e})",
                report.worst()
            )));
        }
        let report = c.validate(DEFAULT_TOL);
        if !report.valid() {
            return Err(Error::InvalidModel(format!(
                "c fails the envelope conditions (worst violation {:.3e})",
                report.worst()
            )));
        }
        Ok(Self { k, c, t_end, t_step })
    }

    pub fn k(&self) -> &FuzzyNumber {
        &self.k
    }

    pub fn c(&self) -> &FuzzyNumber {
        &self.c
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn t_step(&self) -> f64 {
        self.t_step
    }

    pub fn grid(&self) -> &AlphaGrid {
        self.k.grid()
    }

    pub fn classify(&self) -> CaseTag {
        classify_case(&self.k, DECAY_EPSILON)
    }

    /// The integrator time nodes: uniform with step at most `t_step`,
    /// last node exactly `t_end`.
    pub fn time_points(&self) -> Vec<f64> {
        let n = (self.t_end / self.t_step - 1e-9).ceil().max(1.0) as usize;
        let h = self.t_end / n as f64;
        let mut times: Vec<f64> = (0..=n).map(|i| i as f64 * h).collect();
        times[n] = self.t_end;
        times
    }

    /// Growth closed form `y1 = c1 e^{k1 t}, y2 = c2 e^{k2 t}` with analytic
    /// time derivatives and alpha-partials.
    pub fn solve_growth_closed(&self) -> Result<LevelFunctionField> {
        let case = self.classify();
        if case != CaseTag::Growth {
            return Err(Error::WrongCase {
                expected: CaseTag::Growth,
                found: case,
            });
        }
        for (i, &c1) in self.c.lower().iter().enumerate() {
            if c1 < 0.0 {
                return Err(Error::NegativeInitial {
                    alpha: self.grid().levels()[i],
                    value: c1,
                });
            }
        }
        Ok(LevelFunctionField::closed_form(
            self.t_end,
            Arc::new(GrowthEval {
                k: self.k.clone(),
                c: self.c.clone(),
            }),
        ))
    }

    /// Decay closed form in the chosen variant, with analytic time
    /// derivatives and alpha-partials. Coefficients are validated at every
    /// grid level up front.
    pub fn solve_decay_closed(&self, variant: DecayVariant) -> Result<LevelFunctionField> {
        let case = self.classify();
        if case != CaseTag::Decay {
            return Err(Error::WrongCase {
                expected: CaseTag::Decay,
                found: case,
            });
        }
        for &a in self.grid().levels() {
            decay_coefficients(&self.k, &self.c, a, variant)?;
        }
        Ok(LevelFunctionField::closed_form(
            self.t_end,
            Arc::new(DecayEval {
                k: self.k.clone(),
                c: self.c.clone(),
                variant,
            }),
        ))
    }

    /// Classic fixed-step fourth-order Runge-Kutta integration of the crisp
    /// min/max system, independently per alpha level. The min/max right-hand
    /// side is evaluated afresh at every stage, so growth, decay, and
    /// mixed-sign coefficients (and sign changes of `y` along the way) are
    /// handled uniformly.
    pub fn integrate_parametric(&self) -> Result<LevelFunctionField> {
        let times = self.time_points();
        let grid = self.grid().clone();
        let n_levels = grid.len();
        let mut lower = Vec::with_capacity(n_levels);
        let mut upper = Vec::with_capacity(n_levels);
        for j in 0..n_levels {
            let k1 = self.k.lower()[j];
            let k2 = self.k.upper()[j];
            let mut y = (self.c.lower()[j], self.c.upper()[j]);
            let mut row_lo = Vec::with_capacity(times.len());
            let mut row_hi = Vec::with_capacity(times.len());
            row_lo.push(y.0);
            row_hi.push(y.1);
            for w in times.windows(2) {
                let h = w[1] - w[0];
                y = rk4_step(k1, k2, y, h);
                if !y.0.is_finite() || !y.1.is_finite() {
                    return Err(Error::Divergence { t: w[0] });
                }
                row_lo.push(y.0);
                row_hi.push(y.1);
            }
            lower.push(row_lo);
            upper.push(row_hi);
        }
        LevelFunctionField::sampled(times, grid, lower, upper)
    }

    /// Full analysis: classify, build every applicable closed form, run the
    /// numeric oracle, and attach residual, differentiability, and
    /// oracle-deviation reports. Closed forms whose preconditions fail are
    /// recorded as skipped rather than aborting the analysis.
    pub fn analyze(&self, tol: f64) -> Result<AnalysisReport> {
        let case = self.classify();
        let numeric = self.integrate_parametric()?;
        let times: Vec<f64> = numeric.sample_times().unwrap().to_vec();
        let positivity = positivity_report(&numeric);

        let mut analyses = Vec::new();
        let mut skipped = Vec::new();

        analyses.push(FieldAnalysis {
            label: FieldLabel::Numeric,
            seikkala: seikkala_verdict(&numeric, &times, self.grid(), tol)?,
            residual: None,
            oracle_deviation: None,
            field: numeric.clone(),
        });

        let candidates: Vec<(FieldLabel, Result<LevelFunctionField>)> = match case {
            CaseTag::Growth => vec![(FieldLabel::GrowthClosed, self.solve_growth_closed())],
            CaseTag::Decay => vec![
                (
                    FieldLabel::DecayPaper,
                    self.solve_decay_closed(DecayVariant::PaperVerbatim),
                ),
                (
                    FieldLabel::DecayRederived,
                    self.solve_decay_closed(DecayVariant::Rederived),
                ),
            ],
            CaseTag::Mixed => Vec::new(),
        };

        for (label, candidate) in candidates {
            match candidate {
                Ok(field) => {
                    let residual = residual_check(&field, &self.k, &times, self.grid())?;
                    let seikkala = seikkala_verdict(&field, &times, self.grid(), tol)?;
                    let oracle_deviation =
                        Some(oracle_deviation(&field, &numeric, &times, self.grid())?);
                    analyses.push(FieldAnalysis {
                        label,
                        seikkala,
                        residual: Some(residual),
                        oracle_deviation,
                        field,
                    });
                }
                Err(e) => skipped.push((label, e.to_string())),
            }
        }

        Ok(AnalysisReport {
            case,
            analyses,
            positivity,
            skipped,
        })
    }
}

fn minmax_rhs(k1: f64, k2: f64, y1: f64, y2: f64) -> (f64, f64) {
    let products = [k1 * y1, k1 * y2, k2 * y1, k2 * y2];
    let mut lo = products[0];
    let mut hi = products[0];
    for &p in &products[1..] {
        lo = lo.min(p);
        hi = hi.max(p);
    }
    (lo, hi)
}

fn rk4_step(k1: f64, k2: f64, y: (f64, f64), h: f64) -> (f64, f64) {
    let f = |y: (f64, f64)| minmax_rhs(k1, k2, y.0, y.1);
    let s1 = f(y);
    let s2 = f((y.0 + 0.5 * h * s1.0, y.1 + 0.5 * h * s1.1));
    let s3 = f((y.0 + 0.5 * h * s2.0, y.1 + 0.5 * h * s2.1));
    let s4 = f((y.0 + h * s3.0, y.1 + h * s3.1));
    (
        y.0 + h / 6.0 * (s1.0 + 2.0 * s2.0 + 2.0 * s3.0 + s4.0),
        y.1 + h / 6.0 * (s1.1 + 2.0 * s2.1 + 2.0 * s3.1 + s4.1),
    )
}

/// Largest absolute defect of a candidate solution against the min/max
/// system, per component, with the `(t, alpha)` where it occurs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    pub max_abs_residual_1: f64,
    pub at_1: (f64, f64),
    pub max_abs_residual_2: f64,
    pub at_2: (f64, f64),
}

/// Evaluate the defect `|y' - f(y)|` of `field` against the min/max system
/// with coefficient `k`, over `tgrid` x the levels of `grid`.
pub fn residual_check(
    field: &LevelFunctionField,
    k: &FuzzyNumber,
    tgrid: &[f64],
    grid: &AlphaGrid,
) -> Result<ResidualReport> {
    let mut report = ResidualReport {
        max_abs_residual_1: 0.0,
        at_1: (0.0, 0.0),
        max_abs_residual_2: 0.0,
        at_2: (0.0, 0.0),
    };
    for &t in tgrid {
        for &a in grid.levels() {
            let (y1, y2) = field.value(t, a)?;
            let (d1, d2) = field.time_derivative(t, a)?;
            let (k1, k2, _, _) = k.cut_with_slope(a)?;
            let (f1, f2) = minmax_rhs(k1, k2, y1, y2);
            let r1 = (d1 - f1).abs();
            if r1 > report.max_abs_residual_1 {
                report.max_abs_residual_1 = r1;
                report.at_1 = (t, a);
            }
            let r2 = (d2 - f2).abs();
            if r2 > report.max_abs_residual_2 {
                report.max_abs_residual_2 = r2;
                report.at_2 = (t, a);
            }
        }
    }
    Ok(report)
}

/// Worst relative deviation between a closed form and the numeric oracle,
/// over the oracle's sample nodes, restricted to points where the closed
/// form keeps both levels strictly positive (the region on which the
/// closed-form derivations are valid).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleDeviation {
    pub max_rel_error: f64,
    pub t: f64,
    pub alpha: f64,
    /// Number of `(t, alpha)` nodes that entered the comparison.
    pub compared: usize,
}

fn rel_err(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn oracle_deviation(
    closed: &LevelFunctionField,
    numeric: &LevelFunctionField,
    times: &[f64],
    grid: &AlphaGrid,
) -> Result<OracleDeviation> {
    let sampled = numeric
        .sample_times()
        .map(|_| numeric)
        .ok_or_else(|| Error::InvalidModel("oracle field must be sampled".into()))?;
    let mut dev = OracleDeviation {
        max_rel_error: 0.0,
        t: 0.0,
        alpha: 0.0,
        compared: 0,
    };
    for (i, &t) in times.iter().enumerate() {
        for (j, &a) in grid.levels().iter().enumerate() {
            let (c1, c2) = closed.value(t, a)?;
            if c1 <= 0.0 || c2 <= 0.0 {
                continue;
            }
            let s = sampled.as_sampled().unwrap();
            let (n1, n2) = (s.lower_at(j, i), s.upper_at(j, i));
            dev.compared += 1;
            for (cv, nv) in [(c1, n1), (c2, n2)] {
                let e = rel_err(cv, nv);
                if e > dev.max_rel_error {
                    dev.max_rel_error = e;
                    dev.t = t;
                    dev.alpha = a;
                }
            }
        }
    }
    Ok(dev)
}

/// Per-level positivity monitoring of the numeric trajectories: the first
/// time node at which `y1` or `y2` drops to zero or below, per alpha level.
#[derive(Debug, Clone)]
pub struct PositivityReport {
    /// `(alpha, first t with y1 <= 0 or y2 <= 0)`, one entry per level.
    pub first_loss: Vec<(f64, Option<f64>)>,
}

impl PositivityReport {
    pub fn all_positive(&self) -> bool {
        self.first_loss.iter().all(|(_, t)| t.is_none())
    }

    /// Earliest positivity loss over all levels.
    pub fn earliest(&self) -> Option<(f64, f64)> {
        self.first_loss
            .iter()
            .filter_map(|&(a, t)| t.map(|t| (a, t)))
            .min_by(|x, y| x.1.total_cmp(&y.1))
    }
}

fn positivity_report(numeric: &LevelFunctionField) -> PositivityReport {
    let s = numeric.as_sampled().expect("numeric field is sampled");
    let times = s.times();
    let levels = s.grid().levels();
    let first_loss = levels
        .iter()
        .enumerate()
        .map(|(j, &a)| {
            let t = (0..times.len())
                .find(|&i| s.lower_at(j, i) <= 0.0 || s.upper_at(j, i) <= 0.0)
                .map(|i| times[i]);
            (a, t)
        })
        .collect();
    PositivityReport { first_loss }
}

/// Which solution field an analysis entry refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldLabel {
    Numeric,
    GrowthClosed,
    DecayPaper,
    DecayRederived,
}

impl std::fmt::Display for FieldLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldLabel::Numeric => write!(f, "numeric"),
            FieldLabel::GrowthClosed => write!(f, "growth_closed"),
            FieldLabel::DecayPaper => write!(f, "decay_paper"),
            FieldLabel::DecayRederived => write!(f, "decay_rederived"),
        }
    }
}

/// Analysis of one solution field.
#[derive(Clone)]
pub struct FieldAnalysis {
    pub label: FieldLabel,
    pub field: LevelFunctionField,
    pub seikkala: SeikkalaReport,
    /// Defect against the min/max system; closed forms only.
    pub residual: Option<ResidualReport>,
    /// Deviation from the numeric oracle; closed forms only.
    pub oracle_deviation: Option<OracleDeviation>,
}

/// Everything `analyze` produces: the case, one entry per solution field
/// (numeric oracle first), positivity monitoring, and any closed forms that
/// were skipped because their preconditions failed.
#[derive(Clone)]
pub struct AnalysisReport {
    pub case: CaseTag,
    pub analyses: Vec<FieldAnalysis>,
    pub positivity: PositivityReport,
    pub skipped: Vec<(FieldLabel, String)>,
}

impl AnalysisReport {
    pub fn numeric(&self) -> &FieldAnalysis {
        &self.analyses[0]
    }

    pub fn by_label(&self, label: FieldLabel) -> Option<&FieldAnalysis> {
        self.analyses.iter().find(|a| a.label == label)
    }
}
