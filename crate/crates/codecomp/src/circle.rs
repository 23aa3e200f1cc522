//! Exact algebra of rational rotations and the conjugation (reflection) map
//! on the unit circle.
//!
//! Angles are rationals mod 1 (fractions of a full turn), so the half turn
//! corresponds to 1/2 and "rational multiple of 2 pi" becomes "rational in
//! [0, 1)". An element `(flip, angle)` sends `q` to `(-1)^flip * q + angle`;
//! with flip set this is the reflection `eps(angle)`, the conjugation map
//! followed by the rotation.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub type Rat = Rational64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircleError {
    #[error("cannot parse circle element: {0}")]
    Parse(String),
    #[error("cannot parse rational: {0}")]
    ParseRational(String),
}

/// Reduce a rational into `[0, 1)`.
pub fn mod_one(q: Rat) -> Rat {
    let f = q - q.floor();
    if f < Rat::zero() || f >= Rat::from_integer(1) {
        // floor already guarantees [0,1); keep as a guard
        f - f.floor()
    } else {
        f
    }
}

pub fn parse_rational(s: &str) -> Result<Rat, CircleError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = num
        .parse()
        .map_err(|_| CircleError::ParseRational(s.into()))?;
    let d: i64 = den
        .parse()
        .map_err(|_| CircleError::ParseRational(s.into()))?;
    if d == 0 {
        return Err(CircleError::ParseRational(s.into()));
    }
    Ok(Rat::new(n, d))
}

pub fn format_rational(q: Rat) -> String {
    if q.denom() == &1 {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A point `e^{2 pi i q}` of the rational circle, stored as `q` in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirclePoint {
    q: Rat,
}

impl CirclePoint {
    pub fn new(q: Rat) -> Self {
        CirclePoint { q: mod_one(q) }
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::new(Rat::new(n, d))
    }

    pub fn turn(&self) -> Rat {
        self.q
    }

    /// Arc-length metric on the circle: `min(|q - q'|, 1 - |q - q'|)`.
    pub fn arc_distance(&self, other: &CirclePoint) -> Rat {
        let d = (self.q - other.q).abs();
        let wrap = Rat::from_integer(1) - d;
        if d <= wrap {
            d
        } else {
            wrap
        }
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(self.q))
    }
}

/// An element of the group generated by rational rotations and conjugation:
/// `eta^flip` followed by the rotation through `angle` turns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    flip: bool,
    angle: Rat,
}

impl DihedralElement {
    pub fn new(flip: bool, angle: Rat) -> Self {
        DihedralElement {
            flip,
            angle: mod_one(angle),
        }
    }

    pub fn identity() -> Self {
        Self::new(false, Rat::zero())
    }

    /// The conjugation map `q -> -q`.
    pub fn eta() -> Self {
        Self::new(true, Rat::zero())
    }

    /// Rotation through `angle` turns: `phi(angle)`.
    pub fn rotation(angle: Rat) -> Self {
        Self::new(false, angle)
    }

    /// Reflection `eps(angle) = eta . phi(angle)`: `q -> angle - q`.
    pub fn reflection(angle: Rat) -> Self {
        Self::new(true, angle)
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    pub fn angle(&self) -> Rat {
        self.angle
    }

    pub fn apply(&self, x: CirclePoint) -> CirclePoint {
        let signed = if self.flip { -x.turn() } else { x.turn() };
        CirclePoint::new(signed + self.angle)
    }

    /// Right-action composition: `compose(g, h).apply(x) = h.apply(g.apply(x))`.
    ///
    /// The formula `(i, q) . (j, p) = (i xor j, (-1)^j q + p)` is derived from
    /// the reflection identity `eps(a) = eta . phi(a)` and cross-checked
    /// against the pointwise oracle in the tests rather than trusted.
    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        let q = if other.flip { -self.angle } else { self.angle };
        DihedralElement::new(self.flip ^ other.flip, q + other.angle)
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.flip {
            *self
        } else {
            DihedralElement::new(false, -self.angle)
        }
    }

    /// Reflections are involutions; a rotation's order is the denominator of
    /// its angle as a fraction of a turn.
    pub fn order(&self) -> u64 {
        if self.flip {
            2
        } else {
            *self.angle.denom() as u64
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.flip && self.angle.is_zero()
    }

    pub fn commutes_with_eta(&self) -> bool {
        let eta = Self::eta();
        self.compose(&eta) == eta.compose(self)
    }

    /// Parses `id`, `eta`, `phi(a/b)` or `eps(a/b)`.
    pub fn parse(input: &str) -> Result<Self, CircleError> {
        let s = input.trim();
        match s {
            "id" => return Ok(Self::identity()),
            "eta" => return Ok(Self::eta()),
            _ => {}
        }
        let inner = |prefix: &str| -> Option<&str> {
            s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')
        };
        if let Some(body) = inner("phi") {
            return Ok(Self::rotation(parse_rational(body)?));
        }
        if let Some(body) = inner("eps") {
            return Ok(Self::reflection(parse_rational(body)?));
        }
        Err(CircleError::Parse(input.into()))
    }
}

impl PartialOrd for DihedralElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DihedralElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.flip, self.angle).cmp(&(other.flip, other.angle))
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.flip, self.angle.is_zero()) {
            (false, true) => write!(f, "id"),
            (true, true) => write!(f, "eta"),
            (false, false) => write!(f, "phi({})", format_rational(self.angle)),
            (true, false) => write!(f, "eps({})", format_rational(self.angle)),
        }
    }
}

/// The order-2m dihedral group of rotations by multiples of `1/m` together
/// with their reflections: `{eta^i . phi(n/m) : 0 <= n < m, i = 0, 1}`.
pub fn dihedral_t(m: u64) -> Vec<DihedralElement> {
    assert!(m >= 1);
    let mut out = Vec::with_capacity(2 * m as usize);
    for flip in [false, true] {
        for n in 0..m {
            out.push(DihedralElement::new(flip, Rat::new(n as i64, m as i64)));
        }
    }
    out.sort();
    out
}

/// All elements with angle denominator at most `max_denom` (both flips),
/// sorted. This is the exhaustive test range for the algebraic lemmas.
pub fn elements_with_denominator_up_to(max_denom: i64) -> Vec<DihedralElement> {
    let mut out = Vec::new();
    for flip in [false, true] {
        for d in 1..=max_denom {
            for n in 0..d {
                let q = Rat::new(n, d);
                if q.denom() == &d {
                    out.push(DihedralElement::new(flip, q));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
