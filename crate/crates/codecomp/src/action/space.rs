//! Phase spaces. Three variants: an explicit finite space, the
//! convergent-sequence space `B`, and the rational circle carrying a sample
//! grid resolution for density checks.

use crate::circle::CirclePoint;
use crate::perm::BPoint;

use super::element::Point;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Space {
    /// Finite list of named points; all of them isolated.
    Finite { points: Vec<String> },
    /// `{1/n : n >= 1} ∪ {0}`; every nonzero point isolated, 0 not.
    BSpace,
    /// Rational points of the circle, sampled at multiples of
    /// `1/grid_denominator` where a finite grid is needed.
    CircleRational { grid_denominator: u64 },
}

impl Space {
    pub fn finite(points: &[&str]) -> Self {
        Space::Finite {
            points: points.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn contains(&self, x: &Point) -> bool {
        match (self, x) {
            (Space::Finite { points }, Point::Finite(i)) => *i < points.len(),
            (Space::BSpace, Point::B(_)) => true,
            (Space::CircleRational { .. }, Point::Circle(_)) => true,
            _ => false,
        }
    }

    pub fn is_isolated(&self, x: &Point) -> bool {
        match x {
            Point::B(b) => b.is_isolated(),
            Point::Finite(_) => true,
            Point::Circle(_) => false,
        }
    }

    /// All points of a finite space.
    pub fn finite_points(&self) -> Option<Vec<Point>> {
        match self {
            Space::Finite { points } => Some((0..points.len()).map(Point::Finite).collect()),
            _ => None,
        }
    }

    pub fn point_name(&self, x: &Point) -> String {
        match (self, x) {
            (Space::Finite { points }, Point::Finite(i)) if *i < points.len() => {
                points[*i].clone()
            }
            _ => x.to_string(),
        }
    }

    /// Evenly spaced circle sample grid of the given denominator.
    pub fn circle_grid(denominator: u64) -> Vec<CirclePoint> {
        (0..denominator)
            .map(|k| CirclePoint::frac(k as i64, denominator as i64))
            .collect()
    }

    /// `{0} ∪ {1/k : k <= bound}` as points; the exact sample coverage for
    /// families whose elements move nothing above `bound`.
    pub fn bspace_samples(bound: u64) -> Vec<Point> {
        let mut out = vec![Point::B(BPoint::Zero)];
        out.extend((1..=bound.max(1)).map(|k| Point::B(BPoint::Recip(k))));
        out
    }
}
