//! Witness-carrying deciders for the dynamical properties.
//!
//! The proximal relation is realized in the two shapes that are finitely
//! decidable: attained coincidence on a finite space with a finite acting
//! family (a net into a finite set has a constant subnet, so a merged pair
//! is exactly a proximal pair), and the witness-to-zero scheme on the
//! sequence space, where an element pushing `x` below a resolution
//! certifies that `(0, x)` is proximal.

use num_traits::Zero;

use crate::circle::{CirclePoint, Rat};
use crate::perm::{BPoint, NatPermutation};
use crate::Budgets;

use super::element::{ActionError, Element, Point, PERM_PROBE_LIMIT};
use super::family::{ActionFamily, NamedFamily};
use super::orbit::orbit;
use super::space::Space;
use super::verdict::{Verdict, Witness};

/// All pairs `(x, y)` merged by some element: `∃ t, x t = y t`. On a finite
/// space with a finite family this set is the full proximal relation.
/// Includes the diagonal (always proximal).
pub fn proximal_pairs(
    space: &Space,
    elements: &[Element],
) -> Result<Vec<(Point, Point)>, ActionError> {
    let points = space
        .finite_points()
        .ok_or_else(|| ActionError::SpaceMismatch("proximal_pairs needs a finite space".into()))?;
    let mut out = Vec::new();
    for (i, x) in points.iter().enumerate() {
        for y in points.iter().skip(i) {
            let merged = x == y
                || elements
                    .iter()
                    .any(|t| matches!((t.act(x), t.act(y)), (Ok(a), Ok(b)) if a == b));
            if merged {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(out)
}

fn merging_element(elements: &[Element], x: &Point, y: &Point) -> Option<Element> {
    elements
        .iter()
        .find(|t| matches!((t.act(x), t.act(y)), (Ok(a), Ok(b)) if a == b))
        .cloned()
}

/// Decides distality. On the sequence space the criterion is finiteness of
/// every orbit, which is exact for bounded-support families and closed-form
/// for the named ones; on a finite space the proximal relation is compared
/// with the diagonal.
pub fn is_distal(
    space: &Space,
    family: &ActionFamily,
    budgets: Budgets,
) -> Result<Verdict, ActionError> {
    match space {
        Space::BSpace => distal_on_b(family, budgets),
        Space::Finite { .. } => {
            let elements = match family.enumerate(budgets.closure) {
                Ok(e) => e,
                Err(gap) => return Ok(Verdict::Undecided(gap.to_string())),
            };
            let points = space.finite_points().expect("finite space");
            for (i, x) in points.iter().enumerate() {
                for y in points.iter().skip(i + 1) {
                    if let Some(t) = merging_element(&elements, x, y) {
                        return Ok(Verdict::Fails(Witness::ProximalPair {
                            x: x.clone(),
                            y: y.clone(),
                            via: t,
                        }));
                    }
                }
            }
            Ok(Verdict::Holds)
        }
        Space::CircleRational { .. } => {
            // every element is an arc-length isometry, so no two points can
            // be pushed together
            match family {
                ActionFamily::Named(
                    NamedFamily::PermTn(_) | NamedFamily::PermT | NamedFamily::PermG,
                ) => Err(ActionError::SpaceMismatch(
                    "permutation family on the circle".into(),
                )),
                _ => Ok(Verdict::Holds),
            }
        }
    }
}

fn distal_on_b(family: &ActionFamily, budgets: Budgets) -> Result<Verdict, ActionError> {
    let check_perms = |elements: &[Element]| -> Result<(), ActionError> {
        for e in elements {
            if !matches!(e, Element::Perm(_)) {
                return Err(ActionError::HypothesisViolation(format!(
                    "element {e} is not an induced permutation map, so the orbit-finiteness \
                     criterion does not apply"
                )));
            }
        }
        Ok(())
    };
    match family {
        ActionFamily::Named(NamedFamily::PermTn(_)) => Ok(Verdict::Holds),
        ActionFamily::Named(NamedFamily::PermT) => {
            let prefix = orbit(
                &Space::BSpace,
                family,
                &Point::B(BPoint::Recip(1)),
                budgets.orbit.min(16),
            )?;
            Ok(Verdict::Fails(Witness::InfiniteOrbit {
                point: Point::B(BPoint::Recip(1)),
                prefix: prefix.points,
                via: None,
            }))
        }
        ActionFamily::Named(NamedFamily::PermG) => {
            // the two-sided shift gives an explicit unbounded orbit
            let shift = crate::perm::shift_sigma();
            let mut prefix = Vec::new();
            let mut x = BPoint::Recip(1);
            for _ in 0..8 {
                prefix.push(Point::B(x));
                x = shift.apply_bpoint(x);
            }
            Ok(Verdict::Fails(Witness::InfiniteOrbit {
                point: Point::B(BPoint::Recip(1)),
                prefix,
                via: Some(Element::Perm(shift)),
            }))
        }
        ActionFamily::Named(other) => Err(ActionError::SpaceMismatch(format!(
            "{} does not act on the sequence space",
            other.id()
        ))),
        ActionFamily::Enumerated(elements) => {
            check_perms(elements)?;
            bounded_support_distal(elements, budgets)
        }
        ActionFamily::Generated { generators, .. } => {
            // orbits under the closure stay inside the generator supports,
            // so the generators alone decide finiteness
            check_perms(generators)?;
            bounded_support_distal(generators, budgets)
        }
    }
}

fn bounded_support_distal(elements: &[Element], budgets: Budgets) -> Result<Verdict, ActionError> {
    let all_bounded = elements.iter().all(|e| e.max_support_index().is_some());
    if all_bounded {
        return Ok(Verdict::Holds);
    }
    // a rule with unbounded support may still have finite orbits; probe them
    let fam = ActionFamily::Enumerated(elements.to_vec());
    for k in 1..=8u64 {
        let res = orbit(&Space::BSpace, &fam, &Point::B(BPoint::Recip(k)), budgets.orbit)?;
        if !res.complete {
            return Ok(Verdict::Undecided(format!(
                "orbit of 1/{k} exceeded the budget of {} points; the family contains an \
                 unbounded-support rule",
                budgets.orbit
            )));
        }
    }
    Ok(Verdict::Undecided(
        "unbounded-support rule present; sampled orbits are finite but the family carries no \
         closed-form orbit fact"
            .into(),
    ))
}

/// Result of a finite-resolution proximality witness search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSearch {
    /// An element sending the start point to a reciprocal below the
    /// resolution, certifying the pair with 0 proximal.
    Found(Element),
    Undecided(String),
}

/// Searches for a family element `t` with `x t = 1/m` and `1/m < epsilon`.
pub fn proximal_witness_to_zero(
    family: &ActionFamily,
    x: BPoint,
    epsilon: Rat,
    budgets: Budgets,
) -> Result<WitnessSearch, ActionError> {
    let BPoint::Recip(start) = x else {
        return Err(ActionError::HypothesisViolation(
            "witness search starts from a nonzero point".into(),
        ));
    };
    assert!(epsilon > Rat::zero());
    // least m with 1/m < epsilon
    let threshold = (Rat::from_integer(1) / epsilon).floor().to_integer() as u64 + 1;
    if start >= threshold {
        return Ok(WitnessSearch::Found(Element::Perm(NatPermutation::identity())));
    }
    match family {
        ActionFamily::Named(NamedFamily::PermT | NamedFamily::PermG) => Ok(WitnessSearch::Found(
            Element::Perm(NatPermutation::transposition(start, threshold)),
        )),
        ActionFamily::Named(NamedFamily::PermTn(n)) => {
            if threshold <= *n {
                Ok(WitnessSearch::Found(Element::Perm(
                    NatPermutation::transposition(start, threshold),
                )))
            } else {
                Ok(WitnessSearch::Undecided(format!(
                    "every orbit index stays at or below {n}, short of {threshold}"
                )))
            }
        }
        ActionFamily::Named(other) => Err(ActionError::SpaceMismatch(format!(
            "{} does not act on the sequence space",
            other.id()
        ))),
        _ => {
            // breadth-first search through images, composing the path element
            let generators = family.orbit_generators(64);
            let mut seen = std::collections::BTreeSet::new();
            seen.insert(BPoint::Recip(start));
            let mut frontier: Vec<(BPoint, Option<Element>)> = vec![(BPoint::Recip(start), None)];
            let mut visited = 0usize;
            while let Some((p, path)) = frontier.pop() {
                for g in &generators {
                    let Point::B(q) = g.act(&Point::B(p))? else {
                        unreachable!("permutation acting on B");
                    };
                    if seen.contains(&q) {
                        continue;
                    }
                    let composed = match &path {
                        Some(e) => e.compose(g)?,
                        None => g.clone(),
                    };
                    if let BPoint::Recip(m) = q {
                        if m >= threshold {
                            return Ok(WitnessSearch::Found(composed));
                        }
                    }
                    visited += 1;
                    if visited >= budgets.orbit {
                        return Ok(WitnessSearch::Undecided(format!(
                            "budget of {} orbit points exhausted",
                            budgets.orbit
                        )));
                    }
                    seen.insert(q);
                    frontier.push((q, Some(composed)));
                }
            }
            Ok(WitnessSearch::Undecided(
                "orbit closed without reaching the resolution".into(),
            ))
        }
    }
}

/// Least denominator `m` with `1/m < epsilon`; rotating by `1/m` makes every
/// orbit epsilon-dense, which is the explicit density witness for the
/// rotation families.
pub fn rotation_density_denominator(epsilon: Rat) -> u64 {
    assert!(epsilon > Rat::zero());
    (Rat::from_integer(1) / epsilon).floor().to_integer() as u64 + 1
}

fn default_circle_samples(space: &Space, elements: &[Element]) -> Vec<CirclePoint> {
    let mut denom: u64 = match space {
        Space::CircleRational { grid_denominator } => (*grid_denominator).max(1),
        _ => 1,
    };
    for e in elements {
        if let Element::Dihedral(g) = e {
            denom = num_integer::lcm(denom, *g.angle().denom() as u64);
        }
    }
    // refinement factor 4 so that orbit points land exactly on the grid;
    // capped so that fine-resolution families keep the sample count small
    Space::circle_grid((denom * 4).min(512))
}

/// Largest arc gap of a finite circle set, with the gap's start point.
fn max_gap(points: &[CirclePoint]) -> (Rat, Rat) {
    debug_assert!(!points.is_empty());
    let mut turns: Vec<Rat> = points.iter().map(|p| p.turn()).collect();
    turns.sort();
    turns.dedup();
    let mut best = (Rat::zero(), Rat::zero());
    for i in 0..turns.len() {
        let next = if i + 1 < turns.len() {
            turns[i + 1]
        } else {
            turns[0] + Rat::from_integer(1)
        };
        let gap = next - turns[i];
        if gap > best.0 {
            best = (gap, turns[i]);
        }
    }
    (best.0, best.1)
}

enum DensityQuantifier {
    Some,
    Every,
}

fn circle_density(
    space: &Space,
    family: &ActionFamily,
    epsilon: Rat,
    sample_points: Option<&[CirclePoint]>,
    budgets: Budgets,
    quantifier: DensityQuantifier,
) -> Result<Verdict, ActionError> {
    assert!(epsilon > Rat::zero());
    if let ActionFamily::Named(NamedFamily::Sigma | NamedFamily::SigmaStar) = family {
        // closed form: the rotation by 1/m for m > 1/epsilon lies in the
        // family and spreads every orbit epsilon-densely
        return Ok(Verdict::Holds);
    }
    let elements = match family.enumerate(budgets.closure) {
        Ok(e) => e,
        Err(gap) => return Ok(Verdict::Undecided(gap.to_string())),
    };
    let defaults;
    let samples: &[CirclePoint] = match sample_points {
        Some(s) => s,
        None => {
            defaults = default_circle_samples(space, &elements);
            &defaults
        }
    };
    let two_eps = epsilon * Rat::from_integer(2);
    // keep named families as-is so orbits use their closed forms
    let fam = match family {
        ActionFamily::Named(_) => family.clone(),
        _ => ActionFamily::Enumerated(elements),
    };
    let mut first_miss: Option<Witness> = None;
    for &x in samples {
        let res = orbit(space, &fam, &Point::Circle(x), budgets.orbit)?;
        if !res.complete {
            return Ok(Verdict::Undecided(format!(
                "orbit of {x} exceeded the budget of {} points",
                budgets.orbit
            )));
        }
        let turns: Vec<CirclePoint> = res
            .points
            .iter()
            .map(|p| match p {
                Point::Circle(c) => *c,
                _ => unreachable!("circle orbit"),
            })
            .collect();
        let (gap, start) = max_gap(&turns);
        // strict: a gap of exactly 2 epsilon leaves its midpoint at distance
        // epsilon, outside the open epsilon-neighbourhood of the orbit
        let dense = gap < two_eps;
        match quantifier {
            DensityQuantifier::Some => {
                if dense {
                    return Ok(Verdict::Holds);
                }
                first_miss.get_or_insert(Witness::MissedArc {
                    point: x,
                    arc_start: start,
                    arc_width: gap,
                });
            }
            DensityQuantifier::Every => {
                if !dense {
                    return Ok(Verdict::Fails(Witness::MissedArc {
                        point: x,
                        arc_start: start,
                        arc_width: gap,
                    }));
                }
            }
        }
    }
    match quantifier {
        DensityQuantifier::Some => Ok(Verdict::Fails(first_miss.unwrap_or_else(|| {
            Witness::Note("no sample point provided".into())
        }))),
        DensityQuantifier::Every => Ok(Verdict::Holds),
    }
}

/// Is some orbit epsilon-dense? Decided at the stated resolution: `Holds`
/// certifies a sample orbit whose gaps stay strictly under `2 epsilon`,
/// `Fails` exhibits a sample point together with an arc of width at least
/// `2 epsilon` that its complete orbit misses.
pub fn is_point_transitive(
    space: &Space,
    family: &ActionFamily,
    epsilon: Rat,
    sample_points: Option<&[CirclePoint]>,
    budgets: Budgets,
) -> Result<Verdict, ActionError> {
    match space {
        Space::CircleRational { .. } => circle_density(
            space,
            family,
            epsilon,
            sample_points,
            budgets,
            DensityQuantifier::Some,
        ),
        Space::Finite { .. } => finite_transitivity(space, family, budgets, DensityQuantifier::Some),
        Space::BSpace => Err(ActionError::SpaceMismatch(
            "density checks are defined on the circle and finite spaces".into(),
        )),
    }
}

/// Is every orbit epsilon-dense (at the stated resolution)?
pub fn is_minimal(
    space: &Space,
    family: &ActionFamily,
    epsilon: Rat,
    sample_points: Option<&[CirclePoint]>,
    budgets: Budgets,
) -> Result<Verdict, ActionError> {
    match space {
        Space::CircleRational { .. } => circle_density(
            space,
            family,
            epsilon,
            sample_points,
            budgets,
            DensityQuantifier::Every,
        ),
        Space::Finite { .. } => {
            finite_transitivity(space, family, budgets, DensityQuantifier::Every)
        }
        Space::BSpace => Err(ActionError::SpaceMismatch(
            "density checks are defined on the circle and finite spaces".into(),
        )),
    }
}

fn finite_transitivity(
    space: &Space,
    family: &ActionFamily,
    budgets: Budgets,
    quantifier: DensityQuantifier,
) -> Result<Verdict, ActionError> {
    let points = space.finite_points().expect("finite space");
    let mut first_miss = None;
    for x in &points {
        let res = orbit(space, family, x, budgets.orbit)?;
        if !res.complete {
            return Ok(Verdict::Undecided("orbit budget exhausted".into()));
        }
        let covers = res.points.len() == points.len();
        match quantifier {
            DensityQuantifier::Some => {
                if covers {
                    return Ok(Verdict::Holds);
                }
                first_miss.get_or_insert(Witness::Note(format!(
                    "orbit of {} covers only {} of {} points",
                    space.point_name(x),
                    res.points.len(),
                    points.len()
                )));
            }
            DensityQuantifier::Every => {
                if !covers {
                    return Ok(Verdict::Fails(Witness::Note(format!(
                        "orbit of {} covers only {} of {} points",
                        space.point_name(x),
                        res.points.len(),
                        points.len()
                    ))));
                }
            }
        }
    }
    match quantifier {
        DensityQuantifier::Some => Ok(Verdict::Fails(
            first_miss.unwrap_or_else(|| Witness::Note("empty space".into())),
        )),
        DensityQuantifier::Every => Ok(Verdict::Holds),
    }
}

/// Does every pair of distinct elements act differently at some point?
pub fn acts_effectively(
    space: &Space,
    family: &ActionFamily,
    budgets: Budgets,
) -> Result<Verdict, ActionError> {
    let elements = match family.enumerate(budgets.closure) {
        Ok(e) => e,
        Err(gap) => return Ok(Verdict::Undecided(gap.to_string())),
    };
    if elements.len() * elements.len() > budgets.pairs {
        return Ok(Verdict::Undecided(format!(
            "{} element pairs exceed the pair budget of {}",
            elements.len() * elements.len(),
            budgets.pairs
        )));
    }
    let grid = match space {
        Space::CircleRational { grid_denominator } => (*grid_denominator).max(24),
        _ => PERM_PROBE_LIMIT,
    };
    for (i, s) in elements.iter().enumerate() {
        for t in elements.iter().skip(i + 1) {
            if s.separating_point(t, grid).is_none() {
                return Ok(Verdict::Fails(Witness::Unseparated {
                    first: s.clone(),
                    second: t.clone(),
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::FiniteMap;
    use crate::perm::shift_sigma;

    fn budgets() -> Budgets {
        Budgets::default()
    }

    #[test]
    fn proximal_pairs_identity_only() {
        let space = Space::finite(&["a", "b"]);
        let fam = vec![Element::Map(FiniteMap::identity(2))];
        let pairs = proximal_pairs(&space, &fam).unwrap();
        assert_eq!(
            pairs,
            vec![
                (Point::Finite(0), Point::Finite(0)),
                (Point::Finite(1), Point::Finite(1)),
            ]
        );
    }

    #[test]
    fn collapsing_map_merges_everything() {
        let space = Space::finite(&["a", "b"]);
        let fam = vec![
            Element::Map(FiniteMap::identity(2)),
            Element::Map(FiniteMap(vec![0, 0])),
        ];
        let pairs = proximal_pairs(&space, &fam).unwrap();
        assert_eq!(pairs.len(), 3);
    }

    #[test]
    fn bijection_groups_are_distal_on_finite_spaces() {
        let space = Space::finite(&["a", "b", "c"]);
        let fam = ActionFamily::enumerated(vec![
            Element::Map(FiniteMap::identity(3)),
            Element::Map(FiniteMap(vec![1, 2, 0])),
            Element::Map(FiniteMap(vec![2, 0, 1])),
        ]);
        assert!(is_distal(&space, &fam, budgets()).unwrap().holds());
        let pairs = proximal_pairs(
            &space,
            &fam.enumerate(1000).unwrap(),
        )
        .unwrap();
        assert_eq!(pairs.len(), 3); // diagonal only
    }

    #[test]
    fn bounded_support_families_are_distal() {
        for n in 1..=6u64 {
            let fam = ActionFamily::Named(NamedFamily::PermTn(n));
            assert!(is_distal(&Space::BSpace, &fam, budgets()).unwrap().holds());
        }
        let enumerated =
            ActionFamily::enumerated(NamedFamily::PermTn(4).enumerate().unwrap());
        assert!(is_distal(&Space::BSpace, &enumerated, budgets()).unwrap().holds());
    }

    #[test]
    fn unbounded_orbit_fails_distality() {
        let v = is_distal(&Space::BSpace, &ActionFamily::Named(NamedFamily::PermT), budgets())
            .unwrap();
        let Verdict::Fails(Witness::InfiniteOrbit { point, .. }) = v else {
            panic!("expected an infinite-orbit witness, got {v}");
        };
        assert_eq!(point, Point::B(BPoint::Recip(1)));

        let v = is_distal(&Space::BSpace, &ActionFamily::Named(NamedFamily::PermG), budgets())
            .unwrap();
        let Verdict::Fails(Witness::InfiniteOrbit { prefix, via, .. }) = v else {
            panic!("expected an infinite-orbit witness");
        };
        assert_eq!(via, Some(Element::Perm(shift_sigma())));
        // the odd chain 1, 1/3, 1/5, ...
        assert_eq!(prefix[1], Point::B(BPoint::Recip(3)));
        assert_eq!(prefix[2], Point::B(BPoint::Recip(5)));
    }

    #[test]
    fn distal_rejects_non_permutation_maps() {
        let fam = ActionFamily::Enumerated(vec![Element::Map(FiniteMap(vec![0, 0]))]);
        assert!(matches!(
            is_distal(&Space::BSpace, &fam, budgets()),
            Err(ActionError::HypothesisViolation(_))
        ));
    }

    #[test]
    fn witness_to_zero_named_and_generated() {
        let eps = Rat::new(1, 10);
        // any permutation moving 1 past 10 works; the named family picks (1 11)
        let w = proximal_witness_to_zero(
            &ActionFamily::Named(NamedFamily::PermT),
            BPoint::Recip(1),
            eps,
            budgets(),
        )
        .unwrap();
        assert_eq!(
            w,
            WitnessSearch::Found(Element::Perm(NatPermutation::transposition(1, 11)))
        );
        // shift powers reach 1/11 after five steps along the odd chain
        let shifts = ActionFamily::Generated {
            generators: vec![Element::Perm(shift_sigma())],
            budget: 1000,
        };
        let WitnessSearch::Found(e) =
            proximal_witness_to_zero(&shifts, BPoint::Recip(1), eps, budgets()).unwrap()
        else {
            panic!("expected a witness");
        };
        let Point::B(img) = e.act(&Point::B(BPoint::Recip(1))).unwrap() else {
            panic!()
        };
        assert_eq!(img, BPoint::Recip(11));
    }

    #[test]
    fn witness_to_zero_bounded_family_undecided() {
        let w = proximal_witness_to_zero(
            &ActionFamily::Named(NamedFamily::PermTn(3)),
            BPoint::Recip(1),
            Rat::new(1, 4),
            budgets(),
        )
        .unwrap();
        assert!(matches!(w, WitnessSearch::Undecided(_)));
        let enumerated = ActionFamily::enumerated(NamedFamily::PermTn(3).enumerate().unwrap());
        let w = proximal_witness_to_zero(&enumerated, BPoint::Recip(1), Rat::new(1, 4), budgets())
            .unwrap();
        assert!(matches!(w, WitnessSearch::Undecided(_)));
    }

    #[test]
    fn dihedral_families_are_not_point_transitive_at_fine_resolution() {
        let space = Space::CircleRational { grid_denominator: 24 };
        for m in 1..=6u64 {
            let fam = ActionFamily::Named(NamedFamily::DihedralT(m));
            let eps = Rat::new(1, 4 * m as i64);
            let v = is_point_transitive(&space, &fam, eps, None, budgets()).unwrap();
            let Verdict::Fails(Witness::MissedArc { arc_width, .. }) = v else {
                panic!("expected a missed arc for m={m}");
            };
            // the best orbit is uniformly spaced at exactly 2 epsilon
            assert!(arc_width >= eps * Rat::from_integer(2));
        }
    }

    #[test]
    fn coarse_resolution_makes_rotations_transitive() {
        let space = Space::CircleRational { grid_denominator: 8 };
        let fam = ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, 4)));
        // orbit {0, 1/4, 1/2, 3/4}: gaps of 1/4, so dense only above eps = 1/8
        // (the boundary itself counts as a miss)
        assert!(
            is_point_transitive(&space, &fam, Rat::new(1, 7), None, budgets())
                .unwrap()
                .holds()
        );
        assert!(
            is_point_transitive(&space, &fam, Rat::new(1, 8), None, budgets())
                .unwrap()
                .fails()
        );
    }

    #[test]
    fn named_rotation_groups_are_minimal() {
        let space = Space::CircleRational { grid_denominator: 24 };
        for fam in [
            ActionFamily::Named(NamedFamily::Sigma),
            ActionFamily::Named(NamedFamily::SigmaStar),
        ] {
            for eps in [Rat::new(1, 10), Rat::new(1, 100), Rat::new(1, 1000)] {
                assert!(is_minimal(&space, &fam, eps, None, budgets()).unwrap().holds());
                // explicit witness: the rotation by 1/m is in the family and
                // its orbit grid is epsilon-dense
                let m = rotation_density_denominator(eps);
                assert!(Rat::new(1, m as i64) < eps);
                let rot = ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, m as i64)));
                let samples = [
                    CirclePoint::frac(0, 1),
                    CirclePoint::frac(1, 3),
                    CirclePoint::frac(5, 24),
                ];
                let v = is_minimal(&space, &rot, eps, Some(&samples), budgets()).unwrap();
                assert!(v.holds(), "rotation 1/{m} should be {eps}-dense: {v}");
            }
        }
    }

    #[test]
    fn one_point_space_is_minimal() {
        let space = Space::finite(&["only"]);
        let fam = ActionFamily::enumerated(vec![Element::Map(FiniteMap::identity(1))]);
        assert!(is_minimal(&space, &fam, Rat::new(1, 2), None, budgets())
            .unwrap()
            .holds());
    }

    #[test]
    fn effectiveness() {
        let space = Space::BSpace;
        let t3 = ActionFamily::Named(NamedFamily::PermTn(3));
        assert!(acts_effectively(&space, &t3, budgets()).unwrap().holds());
        let trivial = ActionFamily::enumerated(vec![Element::Perm(NatPermutation::identity())]);
        assert!(acts_effectively(&space, &trivial, budgets()).unwrap().holds());
    }

    #[test]
    fn infinite_family_effectiveness_is_undecided() {
        let v = acts_effectively(&Space::BSpace, &ActionFamily::Named(NamedFamily::PermT), budgets())
            .unwrap();
        assert!(v.undecided());
    }
}
