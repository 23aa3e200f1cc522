//! Uniform wrapper over the three kinds of acting elements: permutations on
//! the sequence space, dihedral elements on the circle, and elements of an
//! abstract finite semigroup given by multiplication and action tables. The
//! abstract kind keeps element identity separate from the induced map, which
//! is what non-effective actions need.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::circle::{CirclePoint, DihedralElement};
use crate::perm::{BPoint, NatPermutation, Support, EQ_PROBE_LIMIT};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("element kind {element} cannot act on point kind {point}")]
    KindMismatch { element: String, point: String },
    #[error("cannot compose {left} with {right}")]
    ComposeMismatch { left: String, right: String },
    #[error("family is not enumerable: {0}")]
    NotEnumerable(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("point {0} is outside the space")]
    PointOutsideSpace(String),
    #[error("invalid semigroup table: {0}")]
    InvalidTable(String),
    #[error("space/family mismatch: {0}")]
    SpaceMismatch(String),
}

/// A point of one of the supported phase spaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    B(BPoint),
    Circle(CirclePoint),
    /// Index into the point list of a finite space.
    Finite(usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::B(x) => write!(f, "{x}"),
            Point::Circle(x) => write!(f, "{x}"),
            Point::Finite(i) => write!(f, "#{i}"),
        }
    }
}

/// A finite semigroup presented by tables: `mul[s * n + t]` is the product
/// index, `act[s * points + x]` the image of point `x` under element `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    pub name: String,
    pub element_names: Vec<String>,
    pub point_count: usize,
    pub identity: Option<usize>,
    mul: Vec<usize>,
    act: Vec<usize>,
}

impl SemigroupTable {
    /// Validates closure, associativity and the action law
    /// `x (s t) = (x s) t` before accepting the tables.
    pub fn new(
        name: impl Into<String>,
        element_names: Vec<String>,
        mul: Vec<usize>,
        act: Vec<usize>,
        point_count: usize,
        identity: Option<usize>,
    ) -> Result<Arc<Self>, ActionError> {
        let n = element_names.len();
        if mul.len() != n * n {
            return Err(ActionError::InvalidTable("mul table has wrong size".into()));
        }
        if act.len() != n * point_count {
            return Err(ActionError::InvalidTable("act table has wrong size".into()));
        }
        if mul.iter().any(|&i| i >= n) || act.iter().any(|&x| x >= point_count) {
            return Err(ActionError::InvalidTable("index out of range".into()));
        }
        let table = SemigroupTable {
            name: name.into(),
            element_names,
            point_count,
            identity,
            mul,
            act,
        };
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    if table.mul(table.mul(s, t), u) != table.mul(s, table.mul(t, u)) {
                        return Err(ActionError::InvalidTable(format!(
                            "not associative at ({s}, {t}, {u})"
                        )));
                    }
                }
                for x in 0..point_count {
                    if table.act(table.act(x, s), t) != table.act(x, table.mul(s, t)) {
                        return Err(ActionError::InvalidTable(format!(
                            "action law broken at point {x}, elements ({s}, {t})"
                        )));
                    }
                }
            }
        }
        if let Some(e) = identity {
            for s in 0..n {
                if table.mul(e, s) != s || table.mul(s, e) != s {
                    return Err(ActionError::InvalidTable(format!("{e} is not an identity")));
                }
            }
            for x in 0..point_count {
                if table.act(x, e) != x {
                    return Err(ActionError::InvalidTable(
                        "identity does not fix every point".into(),
                    ));
                }
            }
        }
        Ok(Arc::new(table))
    }

    pub fn len(&self) -> usize {
        self.element_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.element_names.is_empty()
    }

    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.mul[s * self.len() + t]
    }

    pub fn act(&self, x: usize, s: usize) -> usize {
        self.act[s * self.point_count + x]
    }
}

/// A self-map of a finite space, given by its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMap(pub Vec<usize>);

impl FiniteMap {
    pub fn identity(n: usize) -> Self {
        FiniteMap((0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// One acting element, tagged by kind.
#[derive(Debug, Clone)]
pub enum Element {
    Perm(NatPermutation),
    Dihedral(DihedralElement),
    Map(FiniteMap),
    Abstract {
        table: Arc<SemigroupTable>,
        index: usize,
    },
}

impl Element {
    pub fn perm(p: NatPermutation) -> Self {
        Element::Perm(p)
    }

    pub fn dihedral(g: DihedralElement) -> Self {
        Element::Dihedral(g)
    }

    fn kind(&self) -> &'static str {
        match self {
            Element::Perm(_) => "permutation",
            Element::Dihedral(_) => "dihedral",
            Element::Map(_) => "finite map",
            Element::Abstract { .. } => "abstract",
        }
    }

    pub fn act(&self, x: &Point) -> Result<Point, ActionError> {
        match (self, x) {
            (Element::Perm(p), Point::B(b)) => Ok(Point::B(p.apply_bpoint(*b))),
            (Element::Dihedral(g), Point::Circle(c)) => Ok(Point::Circle(g.apply(*c))),
            (Element::Map(m), Point::Finite(i)) => {
                m.0.get(*i)
                    .map(|&j| Point::Finite(j))
                    .ok_or_else(|| ActionError::PointOutsideSpace(x.to_string()))
            }
            (Element::Abstract { table, index }, Point::Finite(i)) => {
                if *i >= table.point_count {
                    return Err(ActionError::PointOutsideSpace(x.to_string()));
                }
                Ok(Point::Finite(table.act(*i, *index)))
            }
            _ => Err(ActionError::KindMismatch {
                element: self.kind().into(),
                point: x.to_string(),
            }),
        }
    }

    /// Right-action composition: `compose(s, t)` acts as `s` then `t`.
    pub fn compose(&self, other: &Element) -> Result<Element, ActionError> {
        match (self, other) {
            (Element::Perm(p), Element::Perm(q)) => Ok(Element::Perm(p.compose(q))),
            (Element::Dihedral(g), Element::Dihedral(h)) => Ok(Element::Dihedral(g.compose(h))),
            (Element::Map(a), Element::Map(b)) => {
                if a.0.len() != b.0.len() {
                    return Err(ActionError::ComposeMismatch {
                        left: self.to_string(),
                        right: other.to_string(),
                    });
                }
                Ok(Element::Map(FiniteMap(
                    a.0.iter().map(|&i| b.0[i]).collect(),
                )))
            }
            (
                Element::Abstract { table: ta, index: a },
                Element::Abstract { table: tb, index: b },
            ) => {
                if !Arc::ptr_eq(ta, tb) && ta != tb {
                    return Err(ActionError::ComposeMismatch {
                        left: self.to_string(),
                        right: other.to_string(),
                    });
                }
                Ok(Element::Abstract {
                    table: ta.clone(),
                    index: ta.mul(*a, *b),
                })
            }
            _ => Err(ActionError::ComposeMismatch {
                left: self.kind().into(),
                right: other.kind().into(),
            }),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Perm(p) => p.is_identity(),
            Element::Dihedral(g) => g.is_identity(),
            Element::Map(m) => m.is_identity(),
            Element::Abstract { table, index } => table.identity == Some(*index),
        }
    }

    /// Largest moved index for permutation elements with bounded support.
    pub fn max_support_index(&self) -> Option<u64> {
        match self {
            Element::Perm(p) => match p.support() {
                Support::Finite(s) => Some(s.iter().next_back().copied().unwrap_or(0)),
                Support::Unbounded => None,
            },
            _ => Some(0),
        }
    }

    /// A point on which the two elements act differently, searched over the
    /// natural probe set of their kind. `None` means the induced maps agree
    /// everywhere probed.
    pub fn separating_point(&self, other: &Element, circle_grid: u64) -> Option<Point> {
        match (self, other) {
            (Element::Perm(p), Element::Perm(q)) => {
                p.separating_point(q).map(|k| Point::B(BPoint::Recip(k)))
            }
            (Element::Dihedral(g), Element::Dihedral(h)) => (0..circle_grid)
                .map(|k| CirclePoint::frac(k as i64, circle_grid as i64))
                .find(|&x| g.apply(x) != h.apply(x))
                .map(Point::Circle),
            (Element::Map(a), Element::Map(b)) => {
                (0..a.0.len().min(b.0.len())).find(|&i| a.0[i] != b.0[i]).map(Point::Finite)
            }
            (
                Element::Abstract { table, index: a },
                Element::Abstract { index: b, .. },
            ) => (0..table.point_count)
                .find(|&x| table.act(x, *a) != table.act(x, *b))
                .map(Point::Finite),
            _ => None,
        }
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Element::Perm(a), Element::Perm(b)) => a == b,
            (Element::Dihedral(a), Element::Dihedral(b)) => a == b,
            (Element::Map(a), Element::Map(b)) => a == b,
            (
                Element::Abstract { table: ta, index: a },
                Element::Abstract { table: tb, index: b },
            ) => a == b && (Arc::ptr_eq(ta, tb) || ta == tb),
            _ => false,
        }
    }
}

impl Eq for Element {}

impl std::hash::Hash for Element {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            Element::Perm(p) => {
                0u8.hash(state);
                p.hash(state);
            }
            Element::Dihedral(g) => {
                1u8.hash(state);
                g.hash(state);
            }
            Element::Map(m) => {
                2u8.hash(state);
                m.hash(state);
            }
            Element::Abstract { table, index } => {
                3u8.hash(state);
                table.name.hash(state);
                index.hash(state);
            }
        }
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        let rank = |e: &Element| match e {
            Element::Perm(_) => 0u8,
            Element::Dihedral(_) => 1,
            Element::Map(_) => 2,
            Element::Abstract { .. } => 3,
        };
        match (self, other) {
            (Element::Perm(a), Element::Perm(b)) => a.cmp(b),
            (Element::Dihedral(a), Element::Dihedral(b)) => a.cmp(b),
            (Element::Map(a), Element::Map(b)) => a.cmp(b),
            (
                Element::Abstract { table: ta, index: a },
                Element::Abstract { table: tb, index: b },
            ) => ta.name.cmp(&tb.name).then(a.cmp(b)),
            _ => rank(self).cmp(&rank(other)),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(p) => write!(f, "{p}"),
            Element::Dihedral(g) => write!(f, "{g}"),
            Element::Map(m) => {
                write!(f, "[")?;
                for (i, v) in m.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{i}->{v}")?;
                }
                write!(f, "]")
            }
            Element::Abstract { table, index } => {
                write!(f, "{}", table.element_names[*index])
            }
        }
    }
}

/// Probe prefix shared with permutation equality; re-exported for deciders
/// that need a consistent search range.
pub(crate) const PERM_PROBE_LIMIT: u64 = EQ_PROBE_LIMIT;
