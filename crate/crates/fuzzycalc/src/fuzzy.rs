//! Fuzzy numbers as alpha-level interval envelopes with extension-principle
//! arithmetic and envelope validity checking.
//!
//! A fuzzy number is stored by its lower and upper level functions sampled on
//! a shared [`AlphaGrid`]: at level `alpha` the cut is the interval
//! `[lower(alpha), upper(alpha)]`. Arithmetic acts levelwise on cut
//! endpoints, which is exact for the interval renderings of addition, scalar
//! multiplication, and multiplication (extrema of bilinear maps on boxes sit
//! at corners).

use crate::error::{Error, Result};
use crate::grid::AlphaGrid;

/// A single alpha-cut `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelInterval {
    pub lo: f64,
    pub hi: f64,
}

impl LevelInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "level interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Inclusion test used by the alpha-cut nesting property.
    pub fn contains(&self, other: &LevelInterval, tol: f64) -> bool {
        self.lo - tol <= other.lo && other.hi <= self.hi + tol
    }
}

/// Parameters `(left, peak, right)` of a triangular fuzzy number.
///
/// Degenerate flanks (`left == peak` or `peak == right`) are permitted; the
/// membership function then uses only the surviving linear piece.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularParams {
    left: f64,
    peak: f64,
    right: f64,
}

impl TriangularParams {
    pub fn new(left: f64, peak: f64, right: f64) -> Result<Self> {
        if !(left <= peak && peak <= right) || !right.is_finite() || !left.is_finite() {
            return Err(Error::TriangularOrder { left, peak, right });
        }
        Ok(Self { left, peak, right })
    }

    /// Crisp (degenerate) triangular number.
    pub fn crisp(value: f64) -> Result<Self> {
        Self::new(value, value, value)
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn peak(&self) -> f64 {
        self.peak
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    /// Piecewise-linear membership grade of `r`, in `[0, 1]`.
    pub fn membership(&self, r: f64) -> f64 {
        if r < self.left || r > self.right {
            return 0.0;
        }
        if r == self.peak {
            return 1.0;
        }
        if r < self.peak {
            // left flank; left < peak here since left <= r < peak
            (r - self.left) / (self.peak - self.left)
        } else {
            (self.right - r) / (self.right - self.peak)
        }
    }

    /// The cut `[(1 - alpha) left + alpha peak, (1 - alpha) right + alpha peak]`.
    pub fn alpha_cut(&self, alpha: f64) -> Result<LevelInterval> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(LevelInterval::new(
            lerp(self.left, self.peak, alpha),
            lerp(self.right, self.peak, alpha),
        ))
    }
}

/// Envelope conditions checked by [`FuzzyNumber::validate`], identified by the
/// usual characterization-theorem numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EnvelopeCondition {
    /// (i) lower envelope non-decreasing in alpha.
    LowerNondecreasing,
    /// (ii) upper envelope non-increasing in alpha.
    UpperNonincreasing,
    /// (iv) lower <= upper at every level.
    LowerBelowUpper,
}

impl std::fmt::Display for EnvelopeCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EnvelopeCondition::LowerNondecreasing => write!(f, "i"),
            EnvelopeCondition::UpperNonincreasing => write!(f, "ii"),
            EnvelopeCondition::LowerBelowUpper => write!(f, "iv"),
        }
    }
}

/// One envelope violation: which condition failed, at which level index, and
/// by how much (always reported positive).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub condition: EnvelopeCondition,
    pub index: usize,
    pub magnitude: f64,
}

/// Outcome of the envelope validity check.
#[derive(Debug, Clone, Default)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Largest violation magnitude, 0 when valid.
    pub fn worst(&self) -> f64 {
        self.violations.iter().map(|v| v.magnitude).fold(0.0, f64::max)
    }
}

/// A fuzzy number as discretized lower/upper level functions on an alpha grid.
///
/// Construction checks structure only (matching lengths, finite samples);
/// the envelope monotonicity and ordering conditions are checked separately by
/// [`FuzzyNumber::validate`] so that invalid envelopes can be represented and
/// diagnosed.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNumber {
    grid: AlphaGrid,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl FuzzyNumber {
    pub fn new(grid: AlphaGrid, lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                got: lower.len(),
            });
        }
        if upper.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                got: upper.len(),
            });
        }
        for (i, v) in lower.iter().chain(upper.iter()).enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteSample(i % grid.len()));
            }
        }
        Ok(Self { grid, lower, upper })
    }

    /// Sample a triangular number on `grid`.
    pub fn from_triangular(p: TriangularParams, grid: &AlphaGrid) -> Self {
        let lower = grid
            .levels()
            .iter()
            .map(|&a| lerp(p.left(), p.peak(), a))
            .collect();
        let upper = grid
            .levels()
            .iter()
            .map(|&a| lerp(p.right(), p.peak(), a))
            .collect();
        Self {
            grid: grid.clone(),
            lower,
            upper,
        }
    }

    /// Degenerate fuzzy number with all cuts equal to `[value, value]`.
    pub fn crisp(value: f64, grid: &AlphaGrid) -> Self {
        Self {
            grid: grid.clone(),
            lower: vec![value; grid.len()],
            upper: vec![value; grid.len()],
        }
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Cut at grid level index `i`.
    pub fn level(&self, i: usize) -> LevelInterval {
        LevelInterval {
            lo: self.lower[i],
            hi: self.upper[i],
        }
    }

    /// The support, i.e. the 0-level cut.
    pub fn support(&self) -> LevelInterval {
        self.level(0)
    }

    /// The core, i.e. the 1-level cut.
    pub fn core(&self) -> LevelInterval {
        self.level(self.grid.len() - 1)
    }

    /// True when every cut has zero width.
    pub fn is_crisp(&self) -> bool {
        self.lower == self.upper
    }

    /// Cut at an arbitrary level, linearly interpolating between grid levels.
    /// Exact at grid levels and exact everywhere for triangular envelopes.
    pub fn alpha_cut(&self, alpha: f64) -> Result<LevelInterval> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let (lo, hi, _, _) = self.cut_with_slope_unchecked(alpha);
        Ok(LevelInterval { lo, hi })
    }

    /// Interpolated cut endpoints together with the envelope slopes
    /// `d lower / d alpha` and `d upper / d alpha` of the enclosing grid
    /// segment. The slopes feed analytic alpha-partials of closed-form
    /// solution fields; for triangular numbers they are constant.
    pub fn cut_with_slope(&self, alpha: f64) -> Result<(f64, f64, f64, f64)> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(self.cut_with_slope_unchecked(alpha))
    }

    pub(crate) fn cut_with_slope_unchecked(&self, alpha: f64) -> (f64, f64, f64, f64) {
        let (i, w) = self.grid.locate(alpha);
        let da = self.grid.levels()[i + 1] - self.grid.levels()[i];
        let dlo = (self.lower[i + 1] - self.lower[i]) / da;
        let dhi = (self.upper[i + 1] - self.upper[i]) / da;
        if w == 0.0 {
            (self.lower[i], self.upper[i], dlo, dhi)
        } else if w == 1.0 {
            (self.lower[i + 1], self.upper[i + 1], dlo, dhi)
        } else {
            (
                lerp(self.lower[i], self.lower[i + 1], w),
                lerp(self.upper[i], self.upper[i + 1], w),
                dlo,
                dhi,
            )
        }
    }

    /// Check the envelope conditions to tolerance `tol`:
    /// (i) lower non-decreasing, (ii) upper non-increasing, (iv) lower <=
    /// upper at every level. One-sided continuity is automatic on finite
    /// grid samples and is not checked.
    pub fn validate(&self, tol: f64) -> ValidityReport {
        let mut violations = Vec::new();
        for i in 1..self.grid.len() {
            let d = self.lower[i] - self.lower[i - 1];
            if d < -tol {
                violations.push(Violation {
                    condition: EnvelopeCondition::LowerNondecreasing,
                    index: i,
                    magnitude: -d,
                });
            }
            let d = self.upper[i] - self.upper[i - 1];
            if d > tol {
                violations.push(Violation {
                    condition: EnvelopeCondition::UpperNonincreasing,
                    index: i,
                    magnitude: d,
                });
            }
        }
        for i in 0..self.grid.len() {
            let d = self.lower[i] - self.upper[i];
            if d > tol {
                violations.push(Violation {
                    condition: EnvelopeCondition::LowerBelowUpper,
                    index: i,
                    magnitude: d,
                });
            }
        }
        ValidityReport { violations }
    }

    /// Levelwise sum `[a1 + b1, a2 + b2]`.
    pub fn add(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        self.check_grid(other)?;
        let lower = zip_map(&self.lower, &other.lower, |a, b| a + b);
        let upper = zip_map(&self.upper, &other.upper, |a, b| a + b);
        Ok(FuzzyNumber {
            grid: self.grid.clone(),
            lower,
            upper,
        })
    }

    /// Levelwise product: min/max over the four endpoint products.
    pub fn multiply(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        self.check_grid(other)?;
        let n = self.grid.len();
        let mut lower = Vec::with_capacity(n);
        let mut upper = Vec::with_capacity(n);
        for i in 0..n {
            let (lo, hi) = endpoint_products(
                self.lower[i],
                self.upper[i],
                other.lower[i],
                other.upper[i],
            );
            lower.push(lo);
            upper.push(hi);
        }
        Ok(FuzzyNumber {
            grid: self.grid.clone(),
            lower,
            upper,
        })
    }

    /// Levelwise scaling; endpoints swap when `scale < 0`.
    pub fn scalar_mul(&self, scale: f64) -> FuzzyNumber {
        let (lower, upper) = if scale >= 0.0 {
            (
                self.lower.iter().map(|v| scale * v).collect(),
                self.upper.iter().map(|v| scale * v).collect(),
            )
        } else {
            (
                self.upper.iter().map(|v| scale * v).collect(),
                self.lower.iter().map(|v| scale * v).collect(),
            )
        };
        FuzzyNumber {
            grid: self.grid.clone(),
            lower,
            upper,
        }
    }

    fn check_grid(&self, other: &FuzzyNumber) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }
}

fn zip_map(a: &[f64], b: &[f64], f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

/// Convex combination `(1 - t) a + t b`, exact at `t = 0`, `t = 1`, and for
/// equal endpoints (so crisp envelopes stay bit-identical under sampling).
pub(crate) fn lerp(a: f64, b: f64, t: f64) -> f64 {
    if a == b {
        a
    } else {
        (1.0 - t) * a + t * b
    }
}

fn endpoint_products(a_lo: f64, a_hi: f64, b_lo: f64, b_hi: f64) -> (f64, f64) {
    let products = [a_lo * b_lo, a_lo * b_hi, a_hi * b_lo, a_hi * b_hi];
    let mut lo = products[0];
    let mut hi = products[0];
    for &p in &products[1..] {
        lo = lo.min(p);
        hi = hi.max(p);
    }
    (lo, hi)
}

/// Extension-principle multiplication by dense sampling: for each level the
/// cut of the product is bracketed by the min/max of `r * s` over `samples`
/// uniformly spaced `r` in the cut of `a` and `s` in the cut of `b`.
///
/// This deliberately does not use the endpoint-product shortcut and serves as
/// an independent oracle for [`FuzzyNumber::multiply`]; the two agree exactly
/// because the sampling includes the cut corners where the extrema sit.
pub fn multiply_brute_force(a: &FuzzyNumber, b: &FuzzyNumber, samples: usize) -> Result<FuzzyNumber> {
    if a.grid != b.grid {
        return Err(Error::GridMismatch);
    }
    if samples < 2 {
        return Err(Error::TooFewSamples(samples));
    }
    let n = a.grid.len();
    let mut lower = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(n);
    for i in 0..n {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for j in 0..samples {
            let u = j as f64 / (samples - 1) as f64;
            let r = lerp(a.lower[i], a.upper[i], u);
            for l in 0..samples {
                let v = l as f64 / (samples - 1) as f64;
                let s = lerp(b.lower[i], b.upper[i], v);
                let p = r * s;
                lo = lo.min(p);
                hi = hi.max(p);
            }
        }
        lower.push(lo);
        upper.push(hi);
    }
    Ok(FuzzyNumber {
        grid: a.grid.clone(),
        lower,
        upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn tri(l: f64, m: f64, r: f64) -> TriangularParams {
        TriangularParams::new(l, m, r).unwrap()
    }

    #[test]
    fn membership_matches_linear_flanks() {
        let p = tri(2.0, 4.0, 6.0);
        assert_eq!(p.membership(4.0), 1.0);
        assert_eq!(p.membership(3.0), 0.5);
        assert_eq!(p.membership(7.0), 0.0);
        assert_eq!(p.membership(1.9), 0.0);
        assert_eq!(p.membership(2.0), 0.0);
        assert_eq!(p.membership(5.0), 0.5);
    }

    #[test]
    fn membership_degenerate_flanks() {
        let crisp = tri(5.0, 5.0, 5.0);
        assert_eq!(crisp.membership(5.0), 1.0);
        assert_eq!(crisp.membership(4.999), 0.0);

        let left_collapsed = tri(2.0, 2.0, 6.0);
        assert_eq!(left_collapsed.membership(2.0), 1.0);
        assert_eq!(left_collapsed.membership(4.0), 0.5);
        assert_eq!(left_collapsed.membership(1.0), 0.0);

        let right_collapsed = tri(2.0, 6.0, 6.0);
        assert_eq!(right_collapsed.membership(6.0), 1.0);
        assert_eq!(right_collapsed.membership(4.0), 0.5);
    }

    #[test]
    fn alpha_cut_formula() {
        let p = tri(2.0, 4.0, 6.0);
        let cut = p.alpha_cut(0.0).unwrap();
        assert_eq!((cut.lo, cut.hi), (2.0, 6.0));
        let cut = p.alpha_cut(1.0).unwrap();
        assert_eq!((cut.lo, cut.hi), (4.0, 4.0));
        let cut = p.alpha_cut(0.5).unwrap();
        assert_eq!((cut.lo, cut.hi), (3.0, 5.0));
        assert!(p.alpha_cut(1.5).is_err());
        assert!(p.alpha_cut(-0.1).is_err());
    }

    #[test]
    fn from_triangular_samples_every_level() {
        let grid = AlphaGrid::uniform(2);
        let f = FuzzyNumber::from_triangular(tri(2.0, 4.0, 6.0), &grid);
        assert_eq!(f.lower(), &[2.0, 3.0, 4.0]);
        assert_eq!(f.upper(), &[6.0, 5.0, 4.0]);

        let crisp = FuzzyNumber::from_triangular(tri(5.0, 5.0, 5.0), &AlphaGrid::uniform(7));
        assert!(crisp.lower().iter().all(|&v| v == 5.0));
        assert!(crisp.upper().iter().all(|&v| v == 5.0));

        let f = FuzzyNumber::from_triangular(tri(0.0, 1.0, 2.0), &AlphaGrid::uniform(100));
        assert!(f.validate(1e-9).valid());
    }

    #[test]
    fn reconstruction_is_exact_at_grid_levels() {
        let grid = AlphaGrid::uniform(100);
        let p = tri(-1.5, 0.25, 3.0);
        let f = FuzzyNumber::from_triangular(p, &grid);
        for &a in grid.levels() {
            let from_number = f.alpha_cut(a).unwrap();
            let from_params = p.alpha_cut(a).unwrap();
            assert_eq!(from_number, from_params);
        }
    }

    #[test]
    fn validate_reports_each_condition() {
        let grid = AlphaGrid::from_levels(vec![0.0, 0.5, 1.0]).unwrap();
        let f = FuzzyNumber::new(grid, vec![0.0, 0.5, 0.3], vec![1.0, 1.0, 1.0]).unwrap();
        let report = f.validate(1e-9);
        assert!(!report.valid());
        assert_eq!(report.violations.len(), 1);
        let v = report.violations[0];
        assert_eq!(v.condition, EnvelopeCondition::LowerNondecreasing);
        assert_eq!(v.index, 2);
        assert_relative_eq!(v.magnitude, 0.2, max_relative = 1e-12);

        let grid = AlphaGrid::from_levels(vec![0.0, 1.0]).unwrap();
        let f = FuzzyNumber::new(grid, vec![0.0, 2.0], vec![3.0, 1.0]).unwrap();
        let report = f.validate(1e-9);
        let crossing: Vec<_> = report
            .violations
            .iter()
            .filter(|v| v.condition == EnvelopeCondition::LowerBelowUpper)
            .collect();
        assert_eq!(crossing.len(), 1);
        assert_eq!(crossing[0].index, 1);
        assert_eq!(crossing[0].magnitude, 1.0);
    }

    #[test]
    fn structural_errors_surface_at_construction() {
        let grid = AlphaGrid::uniform(2);
        assert!(matches!(
            FuzzyNumber::new(grid.clone(), vec![0.0, 1.0], vec![1.0, 1.0, 1.0]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            FuzzyNumber::new(grid, vec![0.0, f64::NAN, 1.0], vec![1.0, 1.0, 1.0]),
            Err(Error::NonFiniteSample(_))
        ));
    }

    #[test]
    fn addition_is_levelwise() {
        let grid = AlphaGrid::uniform(2);
        let a = FuzzyNumber::new(grid.clone(), vec![2.0, 3.0, 4.0], vec![6.0, 5.0, 4.0]).unwrap();
        let b = FuzzyNumber::new(grid.clone(), vec![1.0, 1.0, 1.0], vec![3.0, 2.0, 1.0]).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s.level(0), LevelInterval::new(3.0, 9.0));

        let zero = FuzzyNumber::crisp(0.0, &grid);
        assert_eq!(a.add(&zero).unwrap(), a);
    }

    #[test]
    fn triangular_addition_preserves_shape() {
        let grid = AlphaGrid::uniform(50);
        let a = FuzzyNumber::from_triangular(tri(2.0, 4.0, 6.0), &grid);
        let b = FuzzyNumber::from_triangular(tri(1.0, 1.0, 1.0), &grid);
        let sum = a.add(&b).unwrap();
        let expect = FuzzyNumber::from_triangular(tri(3.0, 5.0, 7.0), &grid);
        for i in 0..grid.len() {
            assert_relative_eq!(sum.lower()[i], expect.lower()[i], max_relative = 1e-14);
            assert_relative_eq!(sum.upper()[i], expect.upper()[i], max_relative = 1e-14);
        }
    }

    #[test]
    fn multiply_against_enumerated_products() {
        // independent oracle: enumerate the four endpoint products by hand
        let grid = AlphaGrid::from_levels(vec![0.0, 1.0]).unwrap();
        let a = FuzzyNumber::new(grid.clone(), vec![1.0, 1.0], vec![2.0, 2.0]).unwrap();
        let b = FuzzyNumber::new(grid.clone(), vec![3.0, 3.0], vec![4.0, 4.0]).unwrap();
        // {1*3, 1*4, 2*3, 2*4} = {3, 4, 6, 8}
        let p = a.multiply(&b).unwrap();
        assert_eq!(p.level(0), LevelInterval::new(3.0, 8.0));

        let a = FuzzyNumber::new(grid.clone(), vec![-1.0, -1.0], vec![2.0, 2.0]).unwrap();
        let b = FuzzyNumber::new(grid.clone(), vec![-3.0, -3.0], vec![4.0, 4.0]).unwrap();
        // {3, -4, -6, 8}
        let p = a.multiply(&b).unwrap();
        assert_eq!(p.level(0), LevelInterval::new(-6.0, 8.0));

        let one = FuzzyNumber::crisp(1.0, &grid);
        assert_eq!(a.multiply(&one).unwrap(), a);
    }

    #[test]
    fn grid_mismatch_is_rejected() {
        let a = FuzzyNumber::crisp(1.0, &AlphaGrid::uniform(2));
        let b = FuzzyNumber::crisp(1.0, &AlphaGrid::uniform(3));
        assert!(matches!(a.add(&b), Err(Error::GridMismatch)));
        assert!(matches!(a.multiply(&b), Err(Error::GridMismatch)));
        assert!(matches!(
            multiply_brute_force(&a, &b, 11),
            Err(Error::GridMismatch)
        ));
    }

    #[test]
    fn scalar_mul_swaps_on_negative_scale() {
        let grid = AlphaGrid::from_levels(vec![0.0, 1.0]).unwrap();
        let a = FuzzyNumber::new(grid.clone(), vec![2.0, 2.0], vec![6.0, 6.0]).unwrap();
        let doubled = a.scalar_mul(2.0);
        assert_eq!(doubled.level(0), LevelInterval::new(4.0, 12.0));
        let negated = a.scalar_mul(-1.0);
        assert_eq!(negated.level(0), LevelInterval::new(-6.0, -2.0));
        let zeroed = a.scalar_mul(0.0);
        assert_eq!(zeroed.level(0), LevelInterval::new(0.0, 0.0));
        assert!(zeroed.is_crisp());
    }

    #[test]
    fn brute_force_oracle_agrees_on_corner_extrema() {
        let grid = AlphaGrid::from_levels(vec![0.0, 1.0]).unwrap();
        let a = FuzzyNumber::new(grid.clone(), vec![1.0, 1.0], vec![2.0, 2.0]).unwrap();
        let b = FuzzyNumber::new(grid.clone(), vec![3.0, 3.0], vec![4.0, 4.0]).unwrap();
        let p = multiply_brute_force(&a, &b, 101).unwrap();
        assert_eq!(p.level(0), LevelInterval::new(3.0, 8.0));

        let a = FuzzyNumber::new(grid.clone(), vec![-1.0, -1.0], vec![2.0, 2.0]).unwrap();
        let b = FuzzyNumber::new(grid.clone(), vec![-3.0, -3.0], vec![4.0, 4.0]).unwrap();
        let p = multiply_brute_force(&a, &b, 101).unwrap();
        assert_eq!(p.level(0), LevelInterval::new(-6.0, 8.0));

        let x = FuzzyNumber::crisp(2.5, &grid);
        let y = FuzzyNumber::crisp(-1.5, &grid);
        let p = multiply_brute_force(&x, &y, 11).unwrap();
        assert_eq!(p.level(0), LevelInterval::new(2.5 * -1.5, 2.5 * -1.5));

        assert!(matches!(
            multiply_brute_force(&x, &y, 1),
            Err(Error::TooFewSamples(1))
        ));
    }

    #[test]
    fn crisp_embedding_is_exact() {
        let grid = AlphaGrid::uniform(10);
        let a = FuzzyNumber::crisp(3.25, &grid);
        let b = FuzzyNumber::crisp(-1.5, &grid);
        let sum = a.add(&b).unwrap();
        assert!(sum.lower().iter().all(|&v| v == 3.25 + -1.5));
        let prod = a.multiply(&b).unwrap();
        assert!(prod.lower().iter().all(|&v| v == 3.25 * -1.5));
        assert!(prod.upper().iter().all(|&v| v == 3.25 * -1.5));
        let scaled = b.scalar_mul(2.5);
        assert!(scaled.lower().iter().all(|&v| v == 2.5 * -1.5));
    }

    #[test]
    fn interpolated_cuts_nest() {
        let grid = AlphaGrid::uniform(100);
        let f = FuzzyNumber::from_triangular(tri(-2.0, 0.5, 7.0), &grid);
        let outer = f.alpha_cut(0.2).unwrap();
        let inner = f.alpha_cut(0.8).unwrap();
        assert!(outer.contains(&inner, 0.0));
    }
}
