//! Discretization of the membership level parameter alpha.

use crate::error::{Error, Result};

/// Ordered alpha levels in `[0, 1]`, always containing both endpoints.
///
/// All fuzzy numbers and level-function fields in this crate share a grid so
/// that levelwise arithmetic never needs resampling.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaGrid {
    levels: Vec<f64>,
}

impl AlphaGrid {
    /// Uniform grid with `n` intervals, i.e. `n + 1` levels `0, 1/n, ..., 1`.
    pub fn uniform(n: usize) -> Self {
        assert!(n >= 1, "alpha grid needs at least one interval");
        let levels = (0..=n).map(|i| i as f64 / n as f64).collect();
        Self { levels }
    }

    /// Grid from explicit levels. Must start at 0, end at 1, and rise strictly.
    pub fn from_levels(levels: Vec<f64>) -> Result<Self> {
        if levels.len() < 2 || levels[0] != 0.0 || *levels.last().unwrap() != 1.0 {
            return Err(Error::InvalidGrid);
        }
        if levels.windows(2).any(|w| !(w[0] < w[1])) || levels.iter().any(|l| !l.is_finite()) {
            return Err(Error::InvalidGrid);
        }
        Ok(Self { levels })
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    /// Number of levels (intervals + 1).
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least two levels
    }

    /// Mean level spacing; equals the uniform spacing on uniform grids.
    pub fn mean_spacing(&self) -> f64 {
        1.0 / (self.levels.len() - 1) as f64
    }

    /// Index of the segment `[levels[i], levels[i+1]]` containing `alpha`,
    /// together with the local interpolation weight in `[0, 1]`.
    ///
    /// `alpha` must already be range-checked by the caller.
    pub(crate) fn locate(&self, alpha: f64) -> (usize, f64) {
        let hi = self.levels.partition_point(|&l| l <= alpha);
        if hi == self.levels.len() {
            // alpha == 1.0 (or a float hair above); weight 1 on the last segment
            let i = self.levels.len() - 2;
            let w = (alpha - self.levels[i]) / (self.levels[i + 1] - self.levels[i]);
            (i, w.min(1.0))
        } else {
            let i = hi - 1;
            let w = (alpha - self.levels[i]) / (self.levels[i + 1] - self.levels[i]);
            (i, w)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_grid_covers_unit_interval() {
        let g = AlphaGrid::uniform(100);
        assert_eq!(g.len(), 101);
        assert_eq!(g.levels()[0], 0.0);
        assert_eq!(*g.levels().last().unwrap(), 1.0);
        assert!(g.levels().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn explicit_levels_validated() {
        assert!(AlphaGrid::from_levels(vec![0.0, 0.5, 1.0]).is_ok());
        assert!(AlphaGrid::from_levels(vec![0.1, 0.5, 1.0]).is_err());
        assert!(AlphaGrid::from_levels(vec![0.0, 0.5, 0.9]).is_err());
        assert!(AlphaGrid::from_levels(vec![0.0, 0.5, 0.5, 1.0]).is_err());
        assert!(AlphaGrid::from_levels(vec![0.0, 1.0, 0.5]).is_err());
        assert!(AlphaGrid::from_levels(vec![0.0]).is_err());
    }

    #[test]
    fn locate_hits_nodes_exactly() {
        let g = AlphaGrid::uniform(4);
        let (i, w) = g.locate(0.5);
        assert_eq!(i, 2);
        assert_eq!(w, 0.0);
        let (i, w) = g.locate(1.0);
        assert_eq!(i, 3);
        assert_eq!(w, 1.0);
        let (i, w) = g.locate(0.0);
        assert_eq!(i, 0);
        assert_eq!(w, 0.0);
    }
}
