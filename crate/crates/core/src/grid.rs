use crate::{Error, Result};

/// A uniform time grid, `count` points from `t_start` with spacing `step` (ps).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    t_start: f64,
    step: f64,
    count: usize,
}

impl TimeGrid {
    pub fn new(t_start: f64, step: f64, count: usize) -> Result<Self> {
        if !step.is_finite() || step <= 0.0 {
            return Err(Error::InvalidGrid(format!("step must be positive, got {step}")));
        }
        if count < 2 {
            return Err(Error::InvalidGrid(format!("count must be >= 2, got {count}")));
        }
        if !t_start.is_finite() {
            return Err(Error::InvalidGrid("t_start must be finite".into()));
        }
        Ok(Self { t_start, step, count })
    }

    /// Grid spanning `[t_start, t_end]` inclusive with `count` points.
    pub fn from_span(t_start: f64, t_end: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidGrid(format!("count must be >= 2, got {count}")));
        }
        if !(t_end > t_start) {
            return Err(Error::InvalidGrid(format!(
                "t_end ({t_end}) must exceed t_start ({t_start})"
            )));
        }
        Self::new(t_start, (t_end - t_start) / (count - 1) as f64, count)
    }

    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn t_end(&self) -> f64 {
        self.t_start + self.step * (self.count - 1) as f64
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn time(&self, i: usize) -> f64 {
        self.t_start + self.step * i as f64
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(|i| self.time(i))
    }

    /// Same origin and step, extended to `count` points.
    pub fn extended(&self, count: usize) -> Result<Self> {
        Self::new(self.t_start, self.step, count)
    }

    /// True when steps agree to relative precision 1e-9.
    pub fn step_matches(&self, other: &TimeGrid) -> bool {
        (self.step - other.step).abs() <= 1e-9 * self.step.max(other.step)
    }

    /// Trapezoidal weights (dt at interior points, dt/2 at the ends).
    pub fn trapezoid_weights(&self) -> Vec<f64> {
        let mut w = vec![self.step; self.count];
        w[0] = 0.5 * self.step;
        w[self.count - 1] = 0.5 * self.step;
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn span_construction() {
        let g = TimeGrid::from_span(0.0, 10.0, 11).unwrap();
        assert_relative_eq!(g.step(), 1.0);
        assert_relative_eq!(g.time(3), 3.0);
        assert_relative_eq!(g.t_end(), 10.0);
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(TimeGrid::new(0.0, 0.0, 10).is_err());
        assert!(TimeGrid::new(0.0, -1.0, 10).is_err());
        assert!(TimeGrid::new(0.0, 1.0, 1).is_err());
        assert!(TimeGrid::from_span(5.0, 5.0, 10).is_err());
    }

    #[test]
    fn trapezoid_weights_sum_to_span() {
        let g = TimeGrid::from_span(0.0, 7.0, 29).unwrap();
        let sum: f64 = g.trapezoid_weights().iter().sum();
        assert_relative_eq!(sum, 7.0, epsilon = 1e-12);
    }
}
