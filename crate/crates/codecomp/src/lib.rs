//! Exact-arithmetic models of transformation (semi)groups on two phase spaces:
//! the convergent-sequence space `B = {1/n : n >= 1} ∪ {0}` acted on by
//! permutations of the positive integers, and the unit circle acted on by
//! rational rotations and the conjugation (reflection) map.
//!
//! On top of the algebra the crate provides witness-carrying deciders for
//! dynamical properties (distality, proximality, point transitivity,
//! minimality, effectiveness) and verifiers for multi-, pseudo-multi- and
//! strong-pseudo-decomposition structure of an acting semigroup split into
//! sub-semigroup parts. Every decision procedure returns a three-valued
//! [`action::Verdict`]: `Holds`, `Fails` with a re-checkable witness, or
//! `Undecided` when an enumeration budget runs out.
//!
//! The [`scenarios`] module is a compiled-in registry of named constructions
//! and expected outcomes; the `codecomp` binary exposes it together with a
//! JSON scenario-file checker.

pub mod action;
pub mod circle;
pub mod decomposition;
pub mod perm;
pub mod scenario_file;
pub mod scenarios;

/// Per-call enumeration budgets. Exhaustion surfaces as `Undecided`, never as
/// an error or a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Max number of elements a semigroup closure may reach.
    pub closure: usize,
    /// Max number of points an orbit enumeration may visit.
    pub orbit: usize,
    /// Max number of (element, element) or (point, point) pairs examined.
    pub pairs: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            closure: 100_000,
            orbit: 10_000,
            pairs: 1_000_000,
        }
    }
}

impl Budgets {
    /// Defaults, with the `CODECOMP_BUDGET` environment variable (a single
    /// positive integer) overriding all three limits when set.
    pub fn from_env() -> Self {
        match std::env::var("CODECOMP_BUDGET")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
        {
            Some(n) if n > 0 => Budgets {
                closure: n,
                orbit: n,
                pairs: n,
            },
            _ => Budgets::default(),
        }
    }
}
