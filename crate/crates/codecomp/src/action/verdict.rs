//! Three-valued check outcomes with structured, re-checkable witnesses.

use std::fmt;

use crate::circle::{format_rational, CirclePoint, Rat};

use super::element::{Element, Point};

/// Outcome of a decision procedure. `Fails` always carries a witness that
/// re-evaluates to a violation through the public operations; `Undecided`
/// only arises from budget exhaustion or non-enumerable named families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    Undecided(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn undecided(&self) -> bool {
        matches!(self, Verdict::Undecided(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    /// Swaps `Holds` and `Fails`, for deciding a negated property
    /// ("non-minimal" from a minimality check). `Undecided` passes through.
    pub fn negate(self, holds_note: &str) -> Verdict {
        match self {
            Verdict::Holds => Verdict::Fails(Witness::Note(holds_note.to_string())),
            Verdict::Fails(_) => Verdict::Holds,
            v @ Verdict::Undecided(_) => v,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails(_) => "fails",
            Verdict::Undecided(_) => "undecided",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(w) => write!(f, "fails: {w}"),
            Verdict::Undecided(r) => write!(f, "undecided: {r}"),
        }
    }
}

/// Structured counterexamples. Part indices refer to the candidate's part
/// list where present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `x s t != x t s` for elements of two distinct parts.
    NonCommutation {
        point: Point,
        first: Element,
        second: Element,
        left: Point,
        right: Point,
        part_a: usize,
        part_b: usize,
    },
    /// The orbit-set products `x S_a S_b` and `x S_b S_a` differ.
    OrbitProductMismatch {
        point: Point,
        part_a: usize,
        part_b: usize,
        left: Vec<Point>,
        right: Vec<Point>,
    },
    /// The element-set products `S_a S_b` and `S_b S_a` differ.
    ProductSetMismatch {
        part_a: usize,
        part_b: usize,
        only_in_left: Vec<Element>,
        only_in_right: Vec<Element>,
    },
    /// An orbit kept growing past the stated prefix; carries the rule
    /// producing it when one is known.
    InfiniteOrbit {
        point: Point,
        prefix: Vec<Point>,
        via: Option<Element>,
    },
    /// A non-diagonal proximal pair, merged by `via`.
    ProximalPair { x: Point, y: Point, via: Element },
    /// An orbit whose closure misses the open arc of the given width.
    MissedArc {
        point: CirclePoint,
        arc_start: Rat,
        arc_width: Rat,
    },
    /// Two distinct elements no point separates.
    Unseparated { first: Element, second: Element },
    /// A base element not generated by the parts.
    UnreachableElement { element: Element },
    /// Generated closure and product set disagree.
    ClosureProductMismatch {
        part_a: usize,
        part_b: usize,
        only_in_closure: Vec<Element>,
        only_in_product: Vec<Element>,
    },
    /// Free-form reason, used by negated verdicts.
    Note(String),
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    let shown: Vec<String> = items.iter().take(8).map(|x| x.to_string()).collect();
    let suffix = if items.len() > 8 { ", ..." } else { "" };
    format!("{{{}{suffix}}}", shown.join(", "))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NonCommutation {
                point,
                first,
                second,
                left,
                right,
                part_a,
                part_b,
            } => write!(
                f,
                "at x={point}: x·{first}·{second} = {left} but x·{second}·{first} = {right} \
                 (parts {part_a}, {part_b})"
            ),
            Witness::OrbitProductMismatch {
                point,
                part_a,
                part_b,
                left,
                right,
            } => write!(
                f,
                "at x={point}: x·S{part_a}·S{part_b} = {} but x·S{part_b}·S{part_a} = {}",
                list(left),
                list(right)
            ),
            Witness::ProductSetMismatch {
                part_a,
                part_b,
                only_in_left,
                only_in_right,
            } => write!(
                f,
                "S{part_a}·S{part_b} != S{part_b}·S{part_a}: only left {}, only right {}",
                list(only_in_left),
                list(only_in_right)
            ),
            Witness::InfiniteOrbit { point, prefix, via } => {
                write!(f, "orbit of {point} is unbounded; prefix {}", list(prefix))?;
                if let Some(e) = via {
                    write!(f, " via {e}")?;
                }
                Ok(())
            }
            Witness::ProximalPair { x, y, via } => {
                write!(f, "({x}, {y}) proximal: both sent to the same point by {via}")
            }
            Witness::MissedArc {
                point,
                arc_start,
                arc_width,
            } => write!(
                f,
                "orbit of {point} misses the open arc of width {} starting at {}",
                format_rational(*arc_width),
                format_rational(*arc_start)
            ),
            Witness::Unseparated { first, second } => {
                write!(f, "no point separates {first} from {second}")
            }
            Witness::UnreachableElement { element } => {
                write!(f, "base element {element} is not generated by the parts")
            }
            Witness::ClosureProductMismatch {
                part_a,
                part_b,
                only_in_closure,
                only_in_product,
            } => write!(
                f,
                "<S{part_a} ∪ S{part_b}> != S{part_a}·S{part_b}: only closure {}, only product {}",
                list(only_in_closure),
                list(only_in_product)
            ),
            Witness::Note(s) => write!(f, "{s}"),
        }
    }
}
