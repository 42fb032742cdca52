//! Fuzzy-valued functions of time represented by their level functions
//! `y1(t, alpha)` (lower) and `y2(t, alpha)` (upper), plus the Seikkala
//! differentiability check: the function is differentiable at `t` when the
//! intervals `[y1'(t, alpha), y2'(t, alpha)]` again form the cuts of a fuzzy
//! number.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyNumber, ValidityReport};
use crate::grid::AlphaGrid;

/// Closed-form evaluator of a pair of level functions.
///
/// `value` must be defined on `[0, t_end] x [0, 1]`. Analytic time
/// derivatives and alpha-partials are optional; when absent the field falls
/// back to finite differences where the operation allows it.
pub trait LevelEval: Send + Sync {
    /// `(y1, y2)` at `(t, alpha)`.
    fn value(&self, t: f64, alpha: f64) -> (f64, f64);

    /// Analytic `(y1', y2')` with respect to time, if available.
    fn time_derivative(&self, _t: f64, _alpha: f64) -> Option<(f64, f64)> {
        None
    }

    /// Analytic `(dy1/dalpha, dy2/dalpha)`, if available.
    fn alpha_partial(&self, _t: f64, _alpha: f64) -> Option<(f64, f64)> {
        None
    }
}

/// Level functions given by samples on a time grid x alpha grid.
/// Evaluation between nodes is bilinear; node queries are exact.
#[derive(Debug, Clone)]
pub struct SampledField {
    times: Vec<f64>,
    grid: AlphaGrid,
    /// `lower[level][time]`
    lower: Vec<Vec<f64>>,
    upper: Vec<Vec<f64>>,
}

impl SampledField {
    fn locate_time(&self, t: f64) -> (usize, f64) {
        let hi = self.times.partition_point(|&x| x <= t);
        if hi == self.times.len() {
            (self.times.len() - 2, 1.0)
        } else if hi == 0 {
            (0, 0.0)
        } else {
            let i = hi - 1;
            let w = (t - self.times[i]) / (self.times[i + 1] - self.times[i]);
            (i, w)
        }
    }

    /// Value at a node pair, bilinear in between.
    fn value(&self, t: f64, alpha: f64) -> (f64, f64) {
        let (ti, tw) = self.locate_time(t);
        let (ai, aw) = self.grid.locate(alpha);
        let pick = |rows: &Vec<Vec<f64>>| {
            let at_level = |li: usize| {
                if tw == 0.0 {
                    rows[li][ti]
                } else if tw == 1.0 {
                    rows[li][ti + 1]
                } else {
                    rows[li][ti] * (1.0 - tw) + rows[li][ti + 1] * tw
                }
            };
            if aw == 0.0 {
                at_level(ai)
            } else if aw == 1.0 {
                at_level(ai + 1)
            } else {
                at_level(ai) * (1.0 - aw) + at_level(ai + 1) * aw
            }
        };
        (pick(&self.lower), pick(&self.upper))
    }

    /// Second-order finite-difference time derivative at node `ti` for the
    /// alpha-interpolated row `row(t_index)`.
    fn node_derivative(&self, row: &dyn Fn(usize) -> f64, ti: usize) -> f64 {
        let n = self.times.len();
        if n == 2 {
            return (row(1) - row(0)) / (self.times[1] - self.times[0]);
        }
        if ti == 0 {
            let h = self.times[1] - self.times[0];
            (-3.0 * row(0) + 4.0 * row(1) - row(2)) / (2.0 * h)
        } else if ti == n - 1 {
            let h = self.times[n - 1] - self.times[n - 2];
            (3.0 * row(n - 1) - 4.0 * row(n - 2) + row(n - 3)) / (2.0 * h)
        } else {
            (row(ti + 1) - row(ti - 1)) / (self.times[ti + 1] - self.times[ti - 1])
        }
    }

    fn time_derivative(&self, t: f64, alpha: f64) -> (f64, f64) {
        let (ai, aw) = self.grid.locate(alpha);
        let (ti, tw) = self.locate_time(t);
        let deriv = |rows: &Vec<Vec<f64>>| {
            let row = |tj: usize| {
                if aw == 0.0 {
                    rows[ai][tj]
                } else if aw == 1.0 {
                    rows[ai + 1][tj]
                } else {
                    rows[ai][tj] * (1.0 - aw) + rows[ai + 1][tj] * aw
                }
            };
            if tw == 0.0 {
                self.node_derivative(&row, ti)
            } else if tw == 1.0 {
                self.node_derivative(&row, ti + 1)
            } else {
                // between nodes: blend the two node derivatives
                let d0 = self.node_derivative(&row, ti);
                let d1 = self.node_derivative(&row, ti + 1);
                d0 * (1.0 - tw) + d1 * tw
            }
        };
        (deriv(&self.lower), deriv(&self.upper))
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    /// Stored lower-envelope sample at (level index, time index).
    pub fn lower_at(&self, level: usize, time: usize) -> f64 {
        self.lower[level][time]
    }

    pub fn upper_at(&self, level: usize, time: usize) -> f64 {
        self.upper[level][time]
    }
}

enum FieldKind {
    Closed(Arc<dyn LevelEval>),
    Sampled(SampledField),
}

/// A fuzzy-valued function of time on `[0, t_end]`, represented by its level
/// functions. Either closed-form (an evaluator with optional analytic
/// derivatives) or sampled on a grid.
pub struct LevelFunctionField {
    t_end: f64,
    kind: FieldKind,
}

impl Clone for LevelFunctionField {
    fn clone(&self) -> Self {
        let kind = match &self.kind {
            FieldKind::Closed(e) => FieldKind::Closed(Arc::clone(e)),
            FieldKind::Sampled(s) => FieldKind::Sampled(s.clone()),
        };
        Self {
            t_end: self.t_end,
            kind,
        }
    }
}

impl LevelFunctionField {
    pub fn closed_form(t_end: f64, eval: Arc<dyn LevelEval>) -> Self {
        Self {
            t_end,
            kind: FieldKind::Closed(eval),
        }
    }

    /// Build a sampled field from per-level rows (`lower[level][time]`).
    pub fn sampled(
        times: Vec<f64>,
        grid: AlphaGrid,
        lower: Vec<Vec<f64>>,
        upper: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if times.len() < 2 {
            return Err(Error::ShortTimeGrid);
        }
        if lower.len() != grid.len() || upper.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                got: lower.len().min(upper.len()),
            });
        }
        for row in lower.iter().chain(upper.iter()) {
            if row.len() != times.len() {
                return Err(Error::LengthMismatch {
                    expected: times.len(),
                    got: row.len(),
                });
            }
        }
        let t_end = *times.last().unwrap();
        Ok(Self {
            t_end,
            kind: FieldKind::Sampled(SampledField {
                times,
                grid,
                lower,
                upper,
            }),
        })
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    /// The time nodes of a sampled field, `None` for closed forms.
    pub fn sample_times(&self) -> Option<&[f64]> {
        self.as_sampled().map(|s| s.times())
    }

    /// Access the raw samples of a sampled field.
    pub fn as_sampled(&self) -> Option<&SampledField> {
        match &self.kind {
            FieldKind::Sampled(s) => Some(s),
            FieldKind::Closed(_) => None,
        }
    }

    pub fn is_closed_form(&self) -> bool {
        matches!(self.kind, FieldKind::Closed(_))
    }

    fn check_time(&self, t: f64) -> Result<()> {
        // small relative slack absorbs accumulated time-grid rounding
        let slack = 1e-12 * self.t_end.max(1.0);
        if t < -slack || t > self.t_end + slack {
            return Err(Error::TimeOutOfDomain {
                t,
                t_end: self.t_end,
            });
        }
        Ok(())
    }

    fn check_alpha(alpha: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(())
    }

    /// `(y1, y2)` at `(t, alpha)`.
    pub fn value(&self, t: f64, alpha: f64) -> Result<(f64, f64)> {
        self.check_time(t)?;
        Self::check_alpha(alpha)?;
        Ok(self.value_unchecked(t, alpha))
    }

    fn value_unchecked(&self, t: f64, alpha: f64) -> (f64, f64) {
        match &self.kind {
            FieldKind::Closed(e) => e.value(t, alpha),
            FieldKind::Sampled(s) => s.value(t, alpha),
        }
    }

    /// Per-level time derivatives `(y1', y2')`. Analytic for closed forms
    /// that provide them, second-order finite differences on sampled fields.
    pub fn time_derivative(&self, t: f64, alpha: f64) -> Result<(f64, f64)> {
        self.check_time(t)?;
        Self::check_alpha(alpha)?;
        match &self.kind {
            FieldKind::Closed(e) => e
                .time_derivative(t, alpha)
                .ok_or(Error::DerivativeUnavailable { t }),
            FieldKind::Sampled(s) => Ok(s.time_derivative(t, alpha)),
        }
    }

    /// Analytic `(dy1/dalpha, dy2/dalpha)` when the field carries them.
    pub fn partial_alpha_analytic(&self, t: f64, alpha: f64) -> Result<Option<(f64, f64)>> {
        self.check_time(t)?;
        Self::check_alpha(alpha)?;
        match &self.kind {
            FieldKind::Closed(e) => Ok(e.alpha_partial(t, alpha)),
            FieldKind::Sampled(_) => Ok(None),
        }
    }

    /// Finite-difference `(dy1/dalpha, dy2/dalpha)` with step `h`: central in
    /// the interior, second-order one-sided at the alpha boundaries.
    pub fn partial_alpha(&self, t: f64, alpha: f64, h: f64) -> Result<(f64, f64)> {
        self.check_time(t)?;
        Self::check_alpha(alpha)?;
        if h <= 0.0 {
            return Err(Error::NonPositiveStep(h));
        }
        let h = h.min(0.5);
        let eps = 1e-12;
        let at = |a: f64| self.value_unchecked(t, a.clamp(0.0, 1.0));
        let (d1, d2) = if alpha - h >= -eps && alpha + h <= 1.0 + eps {
            let (p1, p2) = at(alpha + h);
            let (m1, m2) = at(alpha - h);
            ((p1 - m1) / (2.0 * h), (p2 - m2) / (2.0 * h))
        } else if alpha + 2.0 * h <= 1.0 + eps {
            let (f0a, f0b) = at(alpha);
            let (f1a, f1b) = at(alpha + h);
            let (f2a, f2b) = at(alpha + 2.0 * h);
            (
                (-3.0 * f0a + 4.0 * f1a - f2a) / (2.0 * h),
                (-3.0 * f0b + 4.0 * f1b - f2b) / (2.0 * h),
            )
        } else if alpha - 2.0 * h >= -eps {
            let (f0a, f0b) = at(alpha);
            let (f1a, f1b) = at(alpha - h);
            let (f2a, f2b) = at(alpha - 2.0 * h);
            (
                (3.0 * f0a - 4.0 * f1a + f2a) / (2.0 * h),
                (3.0 * f0b - 4.0 * f1b + f2b) / (2.0 * h),
            )
        } else {
            // step too wide for a three-point stencil: plain one-sided slope
            let a1 = (alpha + h).min(1.0);
            let a0 = if a1 > alpha { alpha } else { alpha - h };
            let (f0a, f0b) = at(a0);
            let (f1a, f1b) = at(a1);
            ((f1a - f0a) / (a1 - a0), (f1b - f0b) / (a1 - a0))
        };
        Ok((d1, d2))
    }

    /// Envelope validity of the value level sets at fixed `t`: samples
    /// `y1, y2` over the alpha grid and runs the fuzzy-number checks.
    pub fn check_level_validity(
        &self,
        t: f64,
        grid: &AlphaGrid,
        tol: f64,
    ) -> Result<ValidityReport> {
        self.check_time(t)?;
        let mut lower = Vec::with_capacity(grid.len());
        let mut upper = Vec::with_capacity(grid.len());
        for &a in grid.levels() {
            let (y1, y2) = self.value_unchecked(t, a);
            lower.push(y1);
            upper.push(y2);
        }
        Ok(FuzzyNumber::new(grid.clone(), lower, upper)?.validate(tol))
    }
}

/// Conditions checked by [`seikkala_verdict`]; the `Deriv*` ones are the
/// sufficient conditions for the derivative level sets to form fuzzy numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LevelCondition {
    /// `y1` non-decreasing in alpha.
    ValueLowerRising,
    /// `y2` non-increasing in alpha.
    ValueUpperFalling,
    /// `y1 <= y2`.
    ValueOrder,
    /// `y1'` non-decreasing in alpha.
    DerivLowerRising,
    /// `y2'` non-increasing in alpha.
    DerivUpperFalling,
    /// `y1' <= y2'`.
    DerivOrder,
}

impl LevelCondition {
    pub const ALL: [LevelCondition; 6] = [
        LevelCondition::ValueLowerRising,
        LevelCondition::ValueUpperFalling,
        LevelCondition::ValueOrder,
        LevelCondition::DerivLowerRising,
        LevelCondition::DerivUpperFalling,
        LevelCondition::DerivOrder,
    ];

    pub fn concerns_derivative(&self) -> bool {
        matches!(
            self,
            LevelCondition::DerivLowerRising
                | LevelCondition::DerivUpperFalling
                | LevelCondition::DerivOrder
        )
    }
}

impl std::fmt::Display for LevelCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LevelCondition::ValueLowerRising => "dα-y1",
            LevelCondition::ValueUpperFalling => "dα-y2",
            LevelCondition::ValueOrder => "order",
            LevelCondition::DerivLowerRising => "dα-y1'",
            LevelCondition::DerivUpperFalling => "dα-y2'",
            LevelCondition::DerivOrder => "order'",
        };
        write!(f, "{s}")
    }
}

/// One failed check. For the monotonicity conditions `magnitude` is the
/// slope `(f(alpha_hi) - f(alpha_lo)) / (alpha_hi - alpha_lo)` across the
/// offending adjacent grid levels (sign included), which makes it
/// independent of the grid resolution. For the order conditions
/// `alpha_lo == alpha_hi` and `magnitude` is the (positive) overshoot
/// `y1 - y2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub t: f64,
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    pub condition: LevelCondition,
    pub magnitude: f64,
}

impl Witness {
    /// How badly the condition failed; comparable across witnesses of the
    /// same condition.
    pub fn severity(&self) -> f64 {
        match self.condition {
            LevelCondition::ValueLowerRising | LevelCondition::DerivLowerRising => -self.magnitude,
            LevelCondition::ValueUpperFalling | LevelCondition::DerivUpperFalling => self.magnitude,
            LevelCondition::ValueOrder | LevelCondition::DerivOrder => self.magnitude,
        }
    }
}

/// Outcome of the Seikkala differentiability check over a time grid.
#[derive(Debug, Clone)]
pub struct SeikkalaReport {
    /// Value level sets form fuzzy numbers at every checked `t`.
    pub value_valid: bool,
    /// Derivative level sets form fuzzy numbers at every checked `t`.
    pub derivative_valid: bool,
    /// Both of the above.
    pub differentiable: bool,
    /// Every failed check, in `(t, alpha)` order.
    pub witnesses: Vec<Witness>,
    /// Adjacent level pairs whose difference was within tolerance of zero,
    /// per monotonicity condition. Flat segments satisfy the non-strict
    /// checks but mean the strict inequalities of the sufficient conditions
    /// did not hold; informational only.
    pub flat_pairs: BTreeMap<LevelCondition, usize>,
}

impl SeikkalaReport {
    /// Worst witness for `condition`, if that condition failed anywhere.
    pub fn worst_witness(&self, condition: LevelCondition) -> Option<&Witness> {
        self.witnesses
            .iter()
            .filter(|w| w.condition == condition)
            .max_by(|a, b| a.severity().total_cmp(&b.severity()))
    }
}

/// Decide Seikkala differentiability of `field` over `tgrid`: at every `t`
/// the value levels must form a fuzzy number and the derivative levels must
/// satisfy the monotone/ordered sufficient conditions on the alpha grid.
/// Checks are non-strict with tolerance `tol` on adjacent-level differences;
/// every failing `(t, alpha)` pair is reported, not just the first.
pub fn seikkala_verdict(
    field: &LevelFunctionField,
    tgrid: &[f64],
    grid: &AlphaGrid,
    tol: f64,
) -> Result<SeikkalaReport> {
    if tgrid.is_empty() {
        return Err(Error::EmptyTimeGrid);
    }
    let mut witnesses = Vec::new();
    let mut flat_pairs = BTreeMap::new();
    let levels = grid.levels();
    let mut value_valid = true;
    let mut derivative_valid = true;

    let mut y1 = vec![0.0; levels.len()];
    let mut y2 = vec![0.0; levels.len()];
    let mut d1 = vec![0.0; levels.len()];
    let mut d2 = vec![0.0; levels.len()];

    for &t in tgrid {
        field.check_time(t)?;
        for (i, &a) in levels.iter().enumerate() {
            let (v1, v2) = field.value_unchecked(t, a);
            y1[i] = v1;
            y2[i] = v2;
            let (w1, w2) = field.time_derivative(t, a)?;
            d1[i] = w1;
            d2[i] = w2;
        }

        let mut check_monotone = |row: &[f64], rising: bool, condition: LevelCondition| {
            let mut ok = true;
            for i in 1..levels.len() {
                let diff = row[i] - row[i - 1];
                let da = levels[i] - levels[i - 1];
                let violated = if rising { diff < -tol } else { diff > tol };
                if violated {
                    witnesses.push(Witness {
                        t,
                        alpha_lo: levels[i - 1],
                        alpha_hi: levels[i],
                        condition,
                        magnitude: diff / da,
                    });
                    ok = false;
                } else if diff.abs() <= tol {
                    *flat_pairs.entry(condition).or_insert(0) += 1;
                }
            }
            ok
        };

        let v_lo = check_monotone(&y1, true, LevelCondition::ValueLowerRising);
        let v_hi = check_monotone(&y2, false, LevelCondition::ValueUpperFalling);
        let d_lo = check_monotone(&d1, true, LevelCondition::DerivLowerRising);
        let d_hi = check_monotone(&d2, false, LevelCondition::DerivUpperFalling);

        let mut check_order = |lo: &[f64], hi: &[f64], condition: LevelCondition| {
            let mut ok = true;
            for i in 0..levels.len() {
                let over = lo[i] - hi[i];
                if over > tol {
                    witnesses.push(Witness {
                        t,
                        alpha_lo: levels[i],
                        alpha_hi: levels[i],
                        condition,
                        magnitude: over,
                    });
                    ok = false;
                }
            }
            ok
        };
        let v_ord = check_order(&y1, &y2, LevelCondition::ValueOrder);
        let d_ord = check_order(&d1, &d2, LevelCondition::DerivOrder);

        value_valid &= v_lo && v_hi && v_ord;
        derivative_valid &= d_lo && d_hi && d_ord;
    }

    Ok(SeikkalaReport {
        value_valid,
        derivative_valid,
        differentiable: value_valid && derivative_valid,
        witnesses,
        flat_pairs,
    })
}

/// Closed-form evaluator assembled from plain functions; handy for custom
/// fields and tests.
pub struct FnEval<V, D, A>
where
    V: Fn(f64, f64) -> (f64, f64) + Send + Sync,
    D: Fn(f64, f64) -> (f64, f64) + Send + Sync,
    A: Fn(f64, f64) -> (f64, f64) + Send + Sync,
{
    pub value: V,
    pub time_derivative: Option<D>,
    pub alpha_partial: Option<A>,
}

type PairFn = fn(f64, f64) -> (f64, f64);

impl<V> FnEval<V, PairFn, PairFn>
where
    V: Fn(f64, f64) -> (f64, f64) + Send + Sync,
{
    /// Evaluator with values only; derivative queries will error.
    pub fn values_only(value: V) -> Self {
        Self {
            value,
            time_derivative: None,
            alpha_partial: None,
        }
    }
}

impl<V, D, A> LevelEval for FnEval<V, D, A>
where
    V: Fn(f64, f64) -> (f64, f64) + Send + Sync,
    D: Fn(f64, f64) -> (f64, f64) + Send + Sync,
    A: Fn(f64, f64) -> (f64, f64) + Send + Sync,
{
    fn value(&self, t: f64, alpha: f64) -> (f64, f64) {
        (self.value)(t, alpha)
    }

    fn time_derivative(&self, t: f64, alpha: f64) -> Option<(f64, f64)> {
        self.time_derivative.as_ref().map(|f| f(t, alpha))
    }

    fn alpha_partial(&self, t: f64, alpha: f64) -> Option<(f64, f64)> {
        self.alpha_partial.as_ref().map(|f| f(t, alpha))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fivp::{DecayVariant, FivpModel};
    use crate::fuzzy::TriangularParams;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn paper_decay_field() -> LevelFunctionField {
        let grid = AlphaGrid::uniform(100);
        let k = FuzzyNumber::crisp(-1.0, &grid);
        let c = FuzzyNumber::from_triangular(TriangularParams::new(2.0, 4.0, 6.0).unwrap(), &grid);
        let model = FivpModel::new(k, c, 2.0, 1e-3).unwrap();
        model.solve_decay_closed(DecayVariant::PaperVerbatim).unwrap()
    }

    fn growth_field() -> LevelFunctionField {
        let grid = AlphaGrid::uniform(100);
        let k = FuzzyNumber::from_triangular(TriangularParams::new(0.5, 1.0, 1.5).unwrap(), &grid);
        let c = FuzzyNumber::from_triangular(TriangularParams::new(2.0, 4.0, 6.0).unwrap(), &grid);
        let model = FivpModel::new(k, c, 2.0, 1e-3).unwrap();
        model.solve_growth_closed().unwrap()
    }

    fn constant_field(value: f64) -> LevelFunctionField {
        LevelFunctionField::closed_form(
            2.0,
            Arc::new(FnEval {
                value: move |_t: f64, _a: f64| (value, value),
                time_derivative: Some(|_t: f64, _a: f64| (0.0, 0.0)),
                alpha_partial: Some(|_t: f64, _a: f64| (0.0, 0.0)),
            }),
        )
    }

    #[test]
    fn alpha_partial_of_paper_decay_field() {
        let field = paper_decay_field();
        let expected = 2.0 * (-1.0f64).exp();
        for alpha in [0.0, 0.25, 0.5, 1.0] {
            let (d1, d2) = field.partial_alpha(1.0, alpha, 0.01).unwrap();
            assert_abs_diff_eq!(d1, expected, epsilon = 1e-6);
            assert_abs_diff_eq!(d2, -expected, epsilon = 1e-6);
        }
        let (a1, a2) = field.partial_alpha_analytic(1.0, 0.5).unwrap().unwrap();
        assert_abs_diff_eq!(a1, expected, epsilon = 1e-12);
        assert_abs_diff_eq!(a2, -expected, epsilon = 1e-12);
    }

    #[test]
    fn alpha_partial_of_constant_field_vanishes() {
        let field = constant_field(3.0);
        let (d1, d2) = field.partial_alpha(1.0, 0.3, 0.01).unwrap();
        assert_eq!((d1, d2), (0.0, 0.0));
    }

    #[test]
    fn alpha_partial_of_growth_field() {
        // lower envelope c1(a) e^{k1(a) t} with c1 = 2 + 2a, k1 = 0.5 + 0.5a:
        // d/da at (t=1, a=0) is (c1' + c1 t k1') e^{k1 t} = 3 e^{0.5}
        let field = growth_field();
        let expected = 3.0 * 0.5f64.exp();
        let (fd, _) = field.partial_alpha(1.0, 0.0, 1e-3).unwrap();
        assert_abs_diff_eq!(fd, expected, epsilon = 1e-6);
        let (analytic, _) = field.partial_alpha_analytic(1.0, 0.0).unwrap().unwrap();
        assert_abs_diff_eq!(analytic, expected, epsilon = 1e-12);
    }

    #[test]
    fn alpha_partial_rejects_bad_arguments() {
        let field = constant_field(1.0);
        assert!(field.partial_alpha(1.0, 1.5, 0.01).is_err());
        assert!(field.partial_alpha(1.0, 0.5, 0.0).is_err());
        assert!(field.partial_alpha(5.0, 0.5, 0.01).is_err());
    }

    #[test]
    fn finite_difference_partials_converge_quadratically() {
        let field = growth_field();
        let (exact, _) = field.partial_alpha_analytic(1.0, 0.5).unwrap().unwrap();
        let err = |h: f64| {
            let (fd, _) = field.partial_alpha(1.0, 0.5, h).unwrap();
            (fd - exact).abs()
        };
        let (e1, e2, e3) = (err(0.08), err(0.04), err(0.02));
        assert!(e2 < e1 / 3.0, "e1={e1:.3e} e2={e2:.3e}");
        assert!(e3 < e2 / 3.0, "e2={e2:.3e} e3={e3:.3e}");
    }

    #[test]
    fn time_derivative_examples() {
        let field = growth_field();
        let (d1, _) = field.time_derivative(0.0, 1.0).unwrap();
        assert_relative_eq!(d1, 4.0, max_relative = 1e-12);

        let constant = constant_field(7.0);
        assert_eq!(constant.time_derivative(1.0, 0.5).unwrap(), (0.0, 0.0));

        // decay closed form at t=0, alpha=0: y1' = (A11 - A12) p = 6
        let field = paper_decay_field();
        let (d1, _) = field.time_derivative(0.0, 0.0).unwrap();
        assert_relative_eq!(d1, 6.0, max_relative = 1e-12);
    }

    #[test]
    fn time_derivative_errors_without_analytic_form() {
        let field = LevelFunctionField::closed_form(
            1.0,
            Arc::new(FnEval::values_only(|t: f64, _a: f64| (t, t + 1.0))),
        );
        assert!(matches!(
            field.time_derivative(0.5, 0.5),
            Err(Error::DerivativeUnavailable { .. })
        ));
        // but finite-difference alpha partials still work
        assert!(field.partial_alpha(0.5, 0.5, 0.01).is_ok());
    }

    #[test]
    fn sampled_field_derivatives_are_second_order() {
        // sample e^t on a coarse grid and differentiate at nodes
        let times: Vec<f64> = (0..=20).map(|i| i as f64 * 0.05).collect();
        let grid = AlphaGrid::uniform(2);
        let rows: Vec<Vec<f64>> = (0..grid.len())
            .map(|_| times.iter().map(|t| t.exp()).collect())
            .collect();
        let field = LevelFunctionField::sampled(times, grid, rows.clone(), rows).unwrap();
        for &(t, tol) in &[(0.0, 2e-3), (0.5, 1e-3), (1.0, 3e-3)] {
            let (d, _) = field.time_derivative(t, 0.5).unwrap();
            assert_abs_diff_eq!(d, t.exp(), epsilon = tol);
        }
    }

    #[test]
    fn level_validity_checks() {
        let grid = AlphaGrid::uniform(100);
        let growth = growth_field();
        assert!(growth.check_level_validity(0.0, &grid, 1e-9).unwrap().valid());

        let decay = paper_decay_field();
        for t in [0.5, 1.0, 2.0] {
            assert!(decay.check_level_validity(t, &grid, 1e-9).unwrap().valid());
        }

        let crisp = constant_field(2.0);
        assert!(crisp.check_level_validity(1.0, &grid, 1e-9).unwrap().valid());

        assert!(growth.check_level_validity(99.0, &grid, 1e-9).is_err());
    }

    #[test]
    fn growth_field_is_differentiable() {
        let grid = AlphaGrid::uniform(100);
        let tgrid: Vec<f64> = (0..=20).map(|i| i as f64 * 0.1).collect();
        let report = seikkala_verdict(&growth_field(), &tgrid, &grid, 1e-9).unwrap();
        assert!(report.value_valid);
        assert!(report.derivative_valid);
        assert!(report.differentiable);
        assert!(report.witnesses.is_empty());
    }

    #[test]
    fn paper_decay_field_fails_on_derivative_monotonicity() {
        let grid = AlphaGrid::uniform(100);
        let tgrid: Vec<f64> = (1..=20).map(|i| i as f64 * 0.1).collect();
        let report = seikkala_verdict(&paper_decay_field(), &tgrid, &grid, 1e-9).unwrap();
        assert!(report.value_valid);
        assert!(!report.derivative_valid);
        assert!(!report.differentiable);
        // the lower derivative envelope decreases in alpha at slope -2 e^{-t}
        for &t in &tgrid {
            let expected = -2.0 * (-t).exp();
            let at_t: Vec<_> = report
                .witnesses
                .iter()
                .filter(|w| w.t == t && w.condition == LevelCondition::DerivLowerRising)
                .collect();
            assert_eq!(at_t.len(), grid.len() - 1, "every adjacent pair fails");
            for w in at_t {
                assert_abs_diff_eq!(w.magnitude, expected, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn verdict_is_stable_under_grid_refinement() {
        let tgrid: Vec<f64> = (0..=10).map(|i| i as f64 * 0.2).collect();
        for n in [50, 200] {
            let grid = AlphaGrid::uniform(n);
            let g = seikkala_verdict(&growth_field(), &tgrid, &grid, 1e-9).unwrap();
            assert!(g.differentiable);
            let tgrid_pos: Vec<f64> = tgrid.iter().copied().filter(|&t| t > 0.0).collect();
            let d = seikkala_verdict(&paper_decay_field(), &tgrid_pos, &grid, 1e-9).unwrap();
            assert!(!d.differentiable);
        }
    }

    #[test]
    fn crisp_exponential_is_differentiable_with_flat_levels() {
        let field = LevelFunctionField::closed_form(
            2.0,
            Arc::new(FnEval {
                value: |t: f64, _a: f64| (4.0 * (-t).exp(), 4.0 * (-t).exp()),
                time_derivative: Some(|t: f64, _a: f64| (-4.0 * (-t).exp(), -4.0 * (-t).exp())),
                alpha_partial: Some(|_t: f64, _a: f64| (0.0, 0.0)),
            }),
        );
        let grid = AlphaGrid::uniform(50);
        let tgrid: Vec<f64> = (0..=10).map(|i| i as f64 * 0.2).collect();
        let report = seikkala_verdict(&field, &tgrid, &grid, 1e-9).unwrap();
        assert!(report.differentiable);
        assert!(report.witnesses.is_empty());
        // every adjacent pair is flat: strictness of the sufficient
        // conditions did not hold, and the report says so
        assert_eq!(
            report.flat_pairs[&LevelCondition::ValueLowerRising],
            tgrid.len() * 50
        );
    }

    #[test]
    fn differentiable_implies_ordered_derivatives() {
        let grid = AlphaGrid::uniform(40);
        let field = growth_field();
        let tgrid: Vec<f64> = (0..=8).map(|i| i as f64 * 0.25).collect();
        let report = seikkala_verdict(&field, &tgrid, &grid, 1e-9).unwrap();
        assert!(report.differentiable);
        for &t in &tgrid {
            for &a in grid.levels() {
                let (d1, d2) = field.time_derivative(t, a).unwrap();
                assert!(d1 <= d2 + 1e-9);
            }
        }
    }

    #[test]
    fn verdict_rejects_empty_time_grid() {
        let grid = AlphaGrid::uniform(10);
        assert!(matches!(
            seikkala_verdict(&constant_field(1.0), &[], &grid, 1e-9),
            Err(Error::EmptyTimeGrid)
        ));
    }

    #[test]
    fn worst_witness_picks_largest_severity() {
        let grid = AlphaGrid::uniform(100);
        let report =
            seikkala_verdict(&paper_decay_field(), &[0.5, 1.0], &grid, 1e-9).unwrap();
        let worst = report.worst_witness(LevelCondition::DerivLowerRising).unwrap();
        // magnitude -2 e^{-t} is most negative at the smallest t
        assert_abs_diff_eq!(worst.magnitude, -2.0 * (-0.5f64).exp(), epsilon = 1e-9);
        assert!(report.worst_witness(LevelCondition::ValueLowerRising).is_none());
    }
}
