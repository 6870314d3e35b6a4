use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use crate::error::GraphError;

/// A non-negative edge or path weight. `Weight::INFINITY` marks an absent
/// edge or an unreachable pair; addition saturates there.
///
/// Negative values and NaN are rejected at construction, so arithmetic on
/// weights never produces either.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Weight(f64);

impl Weight {
    pub const ZERO: Weight = Weight(0.0);
    pub const INFINITY: Weight = Weight(f64::INFINITY);

    pub fn new(value: f64) -> Result<Weight, GraphError> {
        if value.is_nan() {
            return Err(GraphError::NotANumber);
        }
        if value < 0.0 {
            return Err(GraphError::NegativeWeight(value));
        }
        Ok(Weight(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    /// Absolute-tolerance equality on finite values; infinities compare exactly.
    pub fn approx_eq(self, other: Weight, eps: f64) -> bool {
        match (self.is_finite(), other.is_finite()) {
            (true, true) => (self.0 - other.0).abs() <= eps,
            (false, false) => true,
            _ => false,
        }
    }

    pub fn min(self, other: Weight) -> Weight {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        // IEEE 754 already saturates: inf + x = inf.
        Weight(self.0 + rhs.0)
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for Weight {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Weight, GraphError> {
        if s == "inf" {
            return Ok(Weight::INFINITY);
        }
        let value: f64 = s
            .parse()
            .map_err(|_| GraphError::BadWeightToken(s.to_string()))?;
        Weight::new(value).map_err(|_| GraphError::BadWeightToken(s.to_string()))
    }
}
