//! Acting families: explicit enumerations, budgeted semigroup closures of
//! generators, and named symbolic families carrying exact metadata
//! (membership tests, enumeration prefixes and closed-form orbit facts).

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use crate::circle::{dihedral_t, DihedralElement, Rat};
use crate::perm::{enumerate_sym, NatPermutation, Support};

use super::element::{ActionError, Element};

/// Symbolic family ids. Each carries an exact membership test and an
/// enumeration prefix; the infinite ones additionally carry closed-form
/// orbit facts used by the deciders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedFamily {
    /// All permutations supported in `{1, ..., n}` acting on `B`.
    PermTn(u64),
    /// The union of all bounded-support permutation groups on `B`.
    PermT,
    /// All permutations of the positive integers acting on `B`.
    PermG,
    /// Rational rotations of the circle.
    Sigma,
    /// Rational rotations together with their reflections.
    SigmaStar,
    /// The order-2m dihedral group of `1/m`-rotations and reflections.
    DihedralT(u64),
    /// The cyclic rotation group generated by one rational angle.
    CyclicRotation(Rat),
}

impl NamedFamily {
    pub fn id(&self) -> String {
        match self {
            NamedFamily::PermTn(n) => format!("T_{n}"),
            NamedFamily::PermT => "T".into(),
            NamedFamily::PermG => "G".into(),
            NamedFamily::Sigma => "Sigma".into(),
            NamedFamily::SigmaStar => "Sigma*".into(),
            NamedFamily::DihedralT(m) => format!("dihedral_T_{m}"),
            NamedFamily::CyclicRotation(q) => {
                format!("rot_{}", crate::circle::format_rational(*q))
            }
        }
    }

    /// Exact membership test.
    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (NamedFamily::PermTn(n), Element::Perm(p)) => match p.support() {
                Support::Finite(s) => s.iter().all(|&k| k <= *n),
                Support::Unbounded => false,
            },
            (NamedFamily::PermT, Element::Perm(p)) => {
                matches!(p.support(), Support::Finite(_))
            }
            (NamedFamily::PermG, Element::Perm(_)) => true,
            (NamedFamily::Sigma, Element::Dihedral(g)) => !g.flip(),
            (NamedFamily::SigmaStar, Element::Dihedral(_)) => true,
            (NamedFamily::DihedralT(m), Element::Dihedral(g)) => {
                (g.angle() * Rat::from_integer(*m as i64)).is_integer()
            }
            (NamedFamily::CyclicRotation(q), Element::Dihedral(g)) => {
                !g.flip() && {
                    // generated subgroup is all multiples of 1/denom(q)
                    let d = *q.denom();
                    (g.angle() * Rat::from_integer(d)).is_integer()
                }
            }
            _ => false,
        }
    }

    /// Full enumeration when the family is finite and small enough.
    pub fn enumerate(&self) -> Result<Vec<Element>, ActionError> {
        match self {
            NamedFamily::PermTn(n) => enumerate_sym(*n)
                .map(|v| v.into_iter().map(Element::Perm).collect())
                .ok_or_else(|| {
                    ActionError::NotEnumerable(format!("T_{n} is too large to enumerate"))
                }),
            NamedFamily::DihedralT(m) => {
                Ok(dihedral_t(*m).into_iter().map(Element::Dihedral).collect())
            }
            NamedFamily::CyclicRotation(q) => {
                let d = *q.denom() as u64;
                let mut out = Vec::with_capacity(d as usize);
                let mut angle = Rat::zero();
                for _ in 0..d {
                    out.push(Element::Dihedral(DihedralElement::rotation(angle)));
                    angle += *q;
                }
                out.sort();
                Ok(out)
            }
            other => Err(ActionError::NotEnumerable(format!(
                "{} is infinite",
                other.id()
            ))),
        }
    }

    /// A deterministic finite prefix of an infinite family, used to
    /// cross-validate closed-form facts.
    pub fn sample_prefix(&self, size: usize) -> Vec<Element> {
        match self {
            NamedFamily::PermT | NamedFamily::PermG => {
                let mut out = vec![Element::Perm(NatPermutation::identity())];
                'outer: for n in 2..=8u64 {
                    for p in enumerate_sym(n).expect("n <= 8") {
                        let e = Element::Perm(p);
                        if !out.contains(&e) {
                            out.push(e);
                            if out.len() >= size {
                                break 'outer;
                            }
                        }
                    }
                }
                out
            }
            NamedFamily::Sigma => {
                let mut out = Vec::new();
                'sig: for d in 1..=64i64 {
                    for n in 0..d {
                        let q = Rat::new(n, d);
                        if *q.denom() == d {
                            out.push(Element::Dihedral(DihedralElement::rotation(q)));
                            if out.len() >= size {
                                break 'sig;
                            }
                        }
                    }
                }
                out
            }
            NamedFamily::SigmaStar => {
                let mut out = Vec::new();
                'star: for d in 1..=64i64 {
                    for n in 0..d {
                        let q = Rat::new(n, d);
                        if *q.denom() == d {
                            for flip in [false, true] {
                                out.push(Element::Dihedral(DihedralElement::new(flip, q)));
                                if out.len() >= size {
                                    break 'star;
                                }
                            }
                        }
                    }
                }
                out
            }
            finite => finite
                .enumerate()
                .map(|mut v| {
                    v.truncate(size);
                    v
                })
                .unwrap_or_default(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(
            self,
            NamedFamily::PermTn(_) | NamedFamily::DihedralT(_) | NamedFamily::CyclicRotation(_)
        )
    }
}

/// A set of acting elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionFamily {
    Enumerated(Vec<Element>),
    Generated {
        generators: Vec<Element>,
        budget: usize,
    },
    Named(NamedFamily),
}

/// Result of a budgeted semigroup closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureOutcome {
    /// The closure is complete; elements sorted canonically.
    Complete(Vec<Element>),
    /// Budget exhausted after reaching this many elements.
    Exhausted(usize),
}

/// Worklist closure of a generator set under composition only (semigroup
/// closure). The generators are expected to include the identity.
pub fn closure(generators: &[Element], budget: usize) -> Result<ClosureOutcome, ActionError> {
    let mut seen: HashSet<Element> = generators.iter().cloned().collect();
    let mut worklist: Vec<Element> = seen.iter().cloned().collect();
    while let Some(e) = worklist.pop() {
        for g in generators {
            for prod in [e.compose(g)?, g.compose(&e)?] {
                if !seen.contains(&prod) {
                    if seen.len() >= budget {
                        return Ok(ClosureOutcome::Exhausted(seen.len()));
                    }
                    seen.insert(prod.clone());
                    worklist.push(prod);
                }
            }
        }
    }
    let mut out: Vec<Element> = seen.into_iter().collect();
    out.sort();
    Ok(ClosureOutcome::Complete(out))
}

impl ActionFamily {
    pub fn enumerated(elements: Vec<Element>) -> Self {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        ActionFamily::Enumerated(elements)
    }

    pub fn label(&self) -> String {
        match self {
            ActionFamily::Enumerated(els) => format!("enumerated({} elements)", els.len()),
            ActionFamily::Generated { generators, .. } => {
                format!("generated({} generators)", generators.len())
            }
            ActionFamily::Named(n) => n.id(),
        }
    }

    /// All elements, sorted; `Generated` families are closed first. Errors
    /// on infinite named families; budget exhaustion is reported distinctly.
    pub fn enumerate(&self, closure_budget: usize) -> Result<Vec<Element>, EnumerationGap> {
        match self {
            ActionFamily::Enumerated(els) => {
                let mut v = els.clone();
                v.sort();
                v.dedup();
                Ok(v)
            }
            ActionFamily::Generated { generators, budget } => {
                let limit = (*budget).min(closure_budget);
                match closure(generators, limit).map_err(EnumerationGap::Error)? {
                    ClosureOutcome::Complete(v) => Ok(v),
                    ClosureOutcome::Exhausted(n) => Err(EnumerationGap::Budget {
                        family: self.label(),
                        reached: n,
                    }),
                }
            }
            ActionFamily::Named(n) => n.enumerate().map_err(EnumerationGap::Error),
        }
    }

    /// Generators for orbit search: the listed elements, the declared
    /// generators, or a named family's enumeration/prefix.
    pub fn orbit_generators(&self, prefix: usize) -> Vec<Element> {
        match self {
            ActionFamily::Enumerated(els) => els.clone(),
            ActionFamily::Generated { generators, .. } => generators.clone(),
            ActionFamily::Named(n) => {
                if n.is_finite() {
                    n.enumerate().unwrap_or_default()
                } else {
                    n.sample_prefix(prefix)
                }
            }
        }
    }

    pub fn contains(&self, e: &Element, closure_budget: usize) -> Option<bool> {
        match self {
            ActionFamily::Enumerated(els) => Some(els.contains(e)),
            ActionFamily::Generated { .. } => match self.enumerate(closure_budget) {
                Ok(els) => Some(els.contains(e)),
                Err(_) => None,
            },
            ActionFamily::Named(n) => Some(n.contains(e)),
        }
    }
}

/// Why a family could not be fully enumerated.
#[derive(Debug)]
pub enum EnumerationGap {
    Budget { family: String, reached: usize },
    Error(ActionError),
}

impl fmt::Display for EnumerationGap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationGap::Budget { family, reached } => {
                write!(f, "closure budget exhausted for {family} after {reached} elements")
            }
            EnumerationGap::Error(e) => write!(f, "{e}"),
        }
    }
}
