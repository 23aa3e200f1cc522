//! Orbit enumeration: breadth-first image search for explicit families,
//! closed forms for the named ones.

use std::collections::BTreeSet;

use crate::perm::BPoint;

use super::element::{ActionError, Element, Point};
use super::family::{ActionFamily, NamedFamily};
use super::space::Space;

/// A (possibly truncated) orbit. `complete` means the point set is closed
/// under every element of the family; otherwise the budget ran out and the
/// points are a prefix of the true orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitResult {
    pub points: Vec<Point>,
    pub complete: bool,
}

impl OrbitResult {
    fn sorted(points: BTreeSet<Point>, complete: bool) -> Self {
        OrbitResult {
            points: points.into_iter().collect(),
            complete,
        }
    }
}

/// Orbit of `x` under the family, visiting at most `budget` new points.
pub fn orbit(
    space: &Space,
    family: &ActionFamily,
    x: &Point,
    budget: usize,
) -> Result<OrbitResult, ActionError> {
    if !space.contains(x) {
        return Err(ActionError::PointOutsideSpace(x.to_string()));
    }
    if let ActionFamily::Named(named) = family {
        return named_orbit(named, x, budget);
    }
    let generators = family.orbit_generators(0);
    bfs_orbit(&generators, x, budget)
}

fn bfs_orbit(generators: &[Element], x: &Point, budget: usize) -> Result<OrbitResult, ActionError> {
    let mut seen: BTreeSet<Point> = BTreeSet::new();
    seen.insert(x.clone());
    let mut worklist = vec![x.clone()];
    let mut added = 0usize;
    while let Some(p) = worklist.pop() {
        for g in generators {
            let image = g.act(&p)?;
            if !seen.contains(&image) {
                if added >= budget {
                    return Ok(OrbitResult::sorted(seen, false));
                }
                added += 1;
                seen.insert(image.clone());
                worklist.push(image);
            }
        }
    }
    Ok(OrbitResult::sorted(seen, true))
}

fn named_orbit(named: &NamedFamily, x: &Point, budget: usize) -> Result<OrbitResult, ActionError> {
    match (named, x) {
        // the accumulation point is fixed by every permutation
        (NamedFamily::PermTn(_) | NamedFamily::PermT | NamedFamily::PermG, Point::B(BPoint::Zero)) => {
            Ok(OrbitResult {
                points: vec![Point::B(BPoint::Zero)],
                complete: true,
            })
        }
        (NamedFamily::PermTn(n), Point::B(BPoint::Recip(k))) => {
            // closed form: inside the support bound the orbit is everything
            // up to the bound, outside it the point is fixed
            let points = if *k <= *n {
                (1..=*n).map(|i| Point::B(BPoint::Recip(i))).collect()
            } else {
                vec![Point::B(BPoint::Recip(*k))]
            };
            Ok(OrbitResult {
                points,
                complete: true,
            })
        }
        (NamedFamily::PermT | NamedFamily::PermG, Point::B(BPoint::Recip(k))) => {
            // the true orbit is all of B minus 0; report a finite prefix
            let mut set: BTreeSet<Point> = (1..=budget.max(1) as u64)
                .map(|i| Point::B(BPoint::Recip(i)))
                .collect();
            set.insert(Point::B(BPoint::Recip(*k)));
            Ok(OrbitResult::sorted(set, false))
        }
        (NamedFamily::Sigma | NamedFamily::SigmaStar, Point::Circle(q)) => {
            // true orbit is dense; report an evenly spaced prefix through q
            let denom = (budget.max(2) as u64).min(720);
            let set: BTreeSet<Point> = (0..denom)
                .map(|j| {
                    Point::Circle(crate::circle::CirclePoint::new(
                        q.turn() + crate::circle::Rat::new(j as i64, denom as i64),
                    ))
                })
                .collect();
            Ok(OrbitResult::sorted(set, false))
        }
        (NamedFamily::DihedralT(m), Point::Circle(q)) => {
            // closed form: rotations give x + k/m, reflections -x + k/m
            let m = *m as i64;
            let set: BTreeSet<Point> = (0..m)
                .flat_map(|k| {
                    let step = crate::circle::Rat::new(k, m);
                    [
                        Point::Circle(crate::circle::CirclePoint::new(q.turn() + step)),
                        Point::Circle(crate::circle::CirclePoint::new(-q.turn() + step)),
                    ]
                })
                .collect();
            Ok(OrbitResult::sorted(set, true))
        }
        (NamedFamily::CyclicRotation(r), Point::Circle(q)) => {
            // the generated group is the rotations by multiples of 1/denom(r)
            let d = *r.denom();
            let set: BTreeSet<Point> = (0..d)
                .map(|k| {
                    Point::Circle(crate::circle::CirclePoint::new(
                        q.turn() + crate::circle::Rat::new(k, d),
                    ))
                })
                .collect();
            Ok(OrbitResult::sorted(set, true))
        }
        _ => Err(ActionError::KindMismatch {
            element: named.id(),
            point: x.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{CirclePoint, Rat};
    use crate::perm::{shift_sigma, NatPermutation};

    fn b(k: u64) -> Point {
        Point::B(BPoint::Recip(k))
    }

    #[test]
    fn orbit_under_t3_enumerated() {
        let fam = ActionFamily::Named(NamedFamily::PermTn(3));
        let res = orbit(&Space::BSpace, &fam, &b(1), 100).unwrap();
        assert!(res.complete);
        assert_eq!(res.points, vec![b(1), b(2), b(3)]);
        // closed form matches the brute-force orbit over all 6 elements
        let enumerated = ActionFamily::enumerated(NamedFamily::PermTn(3).enumerate().unwrap());
        let brute = orbit(&Space::BSpace, &enumerated, &b(1), 100).unwrap();
        assert_eq!(res, brute);
    }

    #[test]
    fn orbit_outside_support_is_fixed() {
        let fam = ActionFamily::Named(NamedFamily::PermTn(3));
        let res = orbit(&Space::BSpace, &fam, &b(7), 100).unwrap();
        assert!(res.complete);
        assert_eq!(res.points, vec![b(7)]);
    }

    #[test]
    fn zero_orbit_is_singleton() {
        for fam in [
            ActionFamily::Named(NamedFamily::PermT),
            ActionFamily::Named(NamedFamily::PermG),
            ActionFamily::Named(NamedFamily::PermTn(4)),
            ActionFamily::Generated {
                generators: vec![Element::Perm(shift_sigma())],
                budget: 100,
            },
        ] {
            let res = orbit(&Space::BSpace, &fam, &Point::B(BPoint::Zero), 100).unwrap();
            assert!(res.complete);
            assert_eq!(res.points, vec![Point::B(BPoint::Zero)]);
        }
    }

    #[test]
    fn shift_orbit_prefix() {
        let fam = ActionFamily::Generated {
            generators: vec![Element::Perm(shift_sigma())],
            budget: 100,
        };
        let res = orbit(&Space::BSpace, &fam, &b(1), 5).unwrap();
        assert!(!res.complete);
        assert_eq!(res.points, vec![b(1), b(3), b(5), b(7), b(9), b(11)]);
    }

    #[test]
    fn named_t_orbit_is_incomplete_prefix() {
        let fam = ActionFamily::Named(NamedFamily::PermT);
        let res = orbit(&Space::BSpace, &fam, &b(1), 10).unwrap();
        assert!(!res.complete);
        assert_eq!(res.points.len(), 10);
        assert!(res.points.contains(&b(1)));
        assert!(res.points.contains(&b(10)));
    }

    #[test]
    fn rotation_orbit() {
        let fam = ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, 4)));
        let space = Space::CircleRational {
            grid_denominator: 8,
        };
        let res = orbit(&space, &fam, &Point::Circle(CirclePoint::frac(0, 1)), 100).unwrap();
        assert!(res.complete);
        assert_eq!(
            res.points,
            (0..4)
                .map(|k| Point::Circle(CirclePoint::frac(k, 4)))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn circle_closed_forms_match_brute_force() {
        let space = Space::CircleRational {
            grid_denominator: 24,
        };
        let x = Point::Circle(CirclePoint::frac(1, 8));
        for m in 1..=6u64 {
            let named = orbit(&space, &ActionFamily::Named(NamedFamily::DihedralT(m)), &x, 100)
                .unwrap();
            let brute = orbit(
                &space,
                &ActionFamily::enumerated(NamedFamily::DihedralT(m).enumerate().unwrap()),
                &x,
                100,
            )
            .unwrap();
            assert_eq!(named, brute, "dihedral m={m}");
            let q = Rat::new(1, m as i64);
            let named = orbit(
                &space,
                &ActionFamily::Named(NamedFamily::CyclicRotation(q)),
                &x,
                100,
            )
            .unwrap();
            let brute = orbit(
                &space,
                &ActionFamily::enumerated(NamedFamily::CyclicRotation(q).enumerate().unwrap()),
                &x,
                100,
            )
            .unwrap();
            assert_eq!(named, brute, "rotation 1/{m}");
        }
    }

    #[test]
    fn monotone_under_subfamily() {
        let small = ActionFamily::enumerated(NamedFamily::PermTn(2).enumerate().unwrap());
        let large = ActionFamily::enumerated(NamedFamily::PermTn(4).enumerate().unwrap());
        let o_small = orbit(&Space::BSpace, &small, &b(1), 100).unwrap();
        let o_large = orbit(&Space::BSpace, &large, &b(1), 100).unwrap();
        assert!(o_small.points.iter().all(|p| o_large.points.contains(p)));
        assert!(o_small.points.contains(&b(1)));
    }

    #[test]
    fn rejects_point_outside_space() {
        let fam = ActionFamily::Named(NamedFamily::PermTn(2));
        let err = orbit(
            &Space::BSpace,
            &fam,
            &Point::Circle(CirclePoint::frac(0, 1)),
            10,
        );
        assert!(err.is_err());
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let fam = ActionFamily::Named(NamedFamily::Sigma);
        let err = orbit(
            &Space::CircleRational {
                grid_denominator: 8,
            },
            &fam,
            &b(1),
            10,
        );
        assert!(err.is_err());
        let p = NatPermutation::parse("(1 2)").unwrap();
        assert!(Element::Perm(p)
            .act(&Point::Circle(CirclePoint::frac(0, 1)))
            .is_err());
    }
}
