//! Phase spaces, acting families, orbit computation and the dynamical
//! deciders (proximality, distality, point transitivity, minimality,
//! effectiveness).

mod deciders;
mod element;
mod family;
mod orbit;
mod space;
mod verdict;

pub use deciders::{
    acts_effectively, is_distal, is_minimal, is_point_transitive, proximal_pairs,
    proximal_witness_to_zero, rotation_density_denominator, WitnessSearch,
};
pub use element::{ActionError, Element, FiniteMap, Point, SemigroupTable};
pub use family::{closure, ActionFamily, ClosureOutcome, EnumerationGap, NamedFamily};
pub use orbit::{orbit, OrbitResult};
pub use space::Space;
pub use verdict::{Verdict, Witness};
