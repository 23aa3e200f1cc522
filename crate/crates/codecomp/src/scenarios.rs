//! Compiled-in scenario registry: each scenario binds one concrete
//! construction to an expected outcome and reruns it on demand.

use std::sync::Arc;

use serde::Serialize;

use crate::action::{
    acts_effectively, is_distal, is_minimal, is_point_transitive, orbit, proximal_pairs,
    proximal_witness_to_zero, rotation_density_denominator, ActionError, ActionFamily, Element,
    FiniteMap, NamedFamily, Point, SemigroupTable, Space, Verdict, WitnessSearch,
};
use crate::circle::{dihedral_t, DihedralElement, Rat};
use crate::decomposition::{
    check_effective_commutation, check_generates, check_multi, check_pseudo_multi,
    check_strong_pseudo, classify, DecompositionCandidate, DynamicalProperty,
};
use crate::perm::{enumerate_sym, shift_sigma, BPoint, NatPermutation};
use crate::Budgets;

/// Builds the full truncated permutation group as an enumerated family.
pub fn build_t_n(n: u64) -> Result<ActionFamily, ActionError> {
    enumerate_sym(n)
        .map(|v| ActionFamily::Enumerated(v.into_iter().map(Element::Perm).collect()))
        .ok_or_else(|| ActionError::NotEnumerable(format!("T_{n} has {n}! elements")))
}

/// The two-sided shift along the chain `... 6 -> 4 -> 2 -> 1 -> 3 -> 5 ...`.
pub fn build_shift_sigma() -> NatPermutation {
    shift_sigma()
}

/// The pair semigroup over a finite base semigroup: all pairs with the
/// absorbing product `(a,b)(c,d) = (a,d)`, an adjoined identity, and the
/// action through first coordinates.
pub struct MConstruction {
    pub table: Arc<SemigroupTable>,
    /// The whole family, identity included.
    pub family: ActionFamily,
    /// One part per base element `t`: pairs ending in `t`, identity adjoined.
    pub parts_with_identity: Vec<ActionFamily>,
    /// The same parts without the identity. The set-product asymmetry lives
    /// here: adjoining the identity to every part makes every product of
    /// parts symmetric (any factor can be skipped, so each product is the
    /// identity plus the pair columns of all participating parts), while
    /// the identity-free columns compose one way only.
    pub core_parts: Vec<ActionFamily>,
}

pub fn build_m_construction(base: &Arc<SemigroupTable>) -> Result<MConstruction, ActionError> {
    let n = base.len();
    if n < 2 {
        return Err(ActionError::HypothesisViolation(
            "the pair construction needs at least two base elements".into(),
        ));
    }
    let points = base.point_count;
    let size = n * n + 1;
    let pair = |a: usize, b: usize| 1 + a * n + b;
    let mut names = vec!["e".to_string()];
    for a in 0..n {
        for b in 0..n {
            names.push(format!(
                "({},{})",
                base.element_names[a], base.element_names[b]
            ));
        }
    }
    let mut mul = vec![0usize; size * size];
    let mut act = vec![0usize; size * points];
    for x in 0..size {
        mul[x] = x; // e * x
        mul[x * size] = x; // x * e
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    mul[pair(a, b) * size + pair(c, d)] = pair(a, d);
                }
            }
        }
    }
    for x in 0..points {
        act[x] = x; // under e
        for a in 0..n {
            for b in 0..n {
                act[pair(a, b) * points + x] = base.act(x, a);
            }
        }
    }
    let table = SemigroupTable::new("M", names, mul, act, points, Some(0))?;
    let element = |i: usize| Element::Abstract {
        table: table.clone(),
        index: i,
    };
    let family = ActionFamily::Enumerated((0..size).map(element).collect());
    let mut parts_with_identity = Vec::new();
    let mut core_parts = Vec::new();
    for t in 0..n {
        let column: Vec<Element> = (0..n).map(|a| element(pair(a, t))).collect();
        let mut with_id = vec![element(0)];
        with_id.extend(column.iter().cloned());
        parts_with_identity.push(ActionFamily::Enumerated(with_id));
        core_parts.push(ActionFamily::Enumerated(column));
    }
    Ok(MConstruction {
        table,
        family,
        parts_with_identity,
        core_parts,
    })
}

/// A two-element left-zero band acting faithfully on three points: each
/// element sends the free point `w` to its own fixed point. This is the
/// smallest faithful base for which the pair construction's action is
/// well-defined: the action law for pairs forces every base image to be
/// fixed by the whole base, which no faithful two-point action satisfies.
pub fn left_zero_table() -> Arc<SemigroupTable> {
    SemigroupTable::new(
        "LZ2",
        vec!["a".into(), "b".into()],
        vec![0, 0, 1, 1],
        vec![0, 1, 0, 0, 1, 1],
        3,
        None,
    )
    .expect("fixed table is valid")
}

/// Outcome of one scenario run.
#[derive(Debug, Clone, Serialize)]
pub struct ScenarioResult {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub pass: bool,
}

struct Outcome {
    expected: String,
    actual: String,
    witness: Option<String>,
}

impl Outcome {
    fn verdict(expected: &str, v: Verdict) -> Outcome {
        Outcome {
            expected: expected.into(),
            actual: v.status().into(),
            witness: match &v {
                Verdict::Fails(w) => Some(w.to_string()),
                Verdict::Undecided(r) => Some(r.clone()),
                Verdict::Holds => None,
            },
        }
    }

    fn value(expected: impl Into<String>, actual: impl Into<String>) -> Outcome {
        Outcome {
            expected: expected.into(),
            actual: actual.into(),
            witness: None,
        }
    }

    fn error(expected: &str, e: impl std::fmt::Display) -> Outcome {
        Outcome {
            expected: expected.into(),
            actual: format!("error: {e}"),
            witness: None,
        }
    }
}

pub struct Scenario {
    pub id: &'static str,
    pub description: &'static str,
    run: fn(Budgets) -> Outcome,
}

/// Small deterministic generator for the randomized scenarios.
pub(crate) struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

pub(crate) fn random_permutation(rng: &mut SplitMix64, n: u64) -> NatPermutation {
    let mut images: Vec<u64> = (1..=n).collect();
    for i in (1..images.len()).rev() {
        let j = rng.below((i + 1) as u64) as usize;
        images.swap(i, j);
    }
    NatPermutation::from_moves((1..=n).zip(images).collect()).expect("shuffle is a bijection")
}

fn truncation_candidate(n_max: u64, budgets: Budgets) -> DecompositionCandidate {
    DecompositionCandidate {
        space: Space::BSpace,
        base: ActionFamily::Named(NamedFamily::PermT),
        parts: (1..=n_max)
            .map(|n| ActionFamily::Named(NamedFamily::PermTn(n)))
            .collect(),
        budgets,
    }
}

fn dihedral_candidate(ms: &[u64], budgets: Budgets) -> DecompositionCandidate {
    DecompositionCandidate {
        space: Space::CircleRational { grid_denominator: 24 },
        base: ActionFamily::Named(NamedFamily::SigmaStar),
        parts: ms
            .iter()
            .map(|&m| ActionFamily::Named(NamedFamily::DihedralT(m)))
            .collect(),
        budgets,
    }
}

fn rotation_candidate(ms: &[i64], budgets: Budgets) -> DecompositionCandidate {
    DecompositionCandidate {
        space: Space::CircleRational { grid_denominator: 24 },
        base: ActionFamily::Named(NamedFamily::Sigma),
        parts: ms
            .iter()
            .map(|&m| ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, m))))
            .collect(),
        budgets,
    }
}

fn m_candidate(budgets: Budgets) -> Result<DecompositionCandidate, ActionError> {
    let m = build_m_construction(&left_zero_table())?;
    Ok(DecompositionCandidate {
        space: Space::finite(&["fa", "fb", "w"]),
        base: m.family,
        parts: m.core_parts,
        budgets,
    })
}

fn sc_b_swap_action(_: Budgets) -> Outcome {
    let f = NatPermutation::transposition(1, 2);
    let images: Vec<String> = [BPoint::Recip(1), BPoint::Recip(2), BPoint::Recip(3), BPoint::Zero]
        .iter()
        .map(|&x| f.apply_bpoint(x).to_string())
        .collect();
    Outcome::value("1/2, 1, 1/3, 0", images.join(", "))
}

fn sc_b_tn_membership(_: Budgets) -> Outcome {
    let t2 = NamedFamily::PermTn(2);
    let in2 = t2.contains(&Element::Perm(NatPermutation::transposition(1, 2)));
    let out2 = t2.contains(&Element::Perm(NatPermutation::transposition(1, 3)));
    let size3 = NamedFamily::PermTn(3).enumerate().map(|v| v.len()).unwrap_or(0);
    let id1 = NamedFamily::PermTn(1).contains(&Element::Perm(NatPermutation::identity()));
    Outcome::value(
        "(1 2) in T_2; (1 3) not in T_2; |T_3| = 6; id in T_1",
        format!(
            "{}; {}; |T_3| = {size3}; {}",
            if in2 { "(1 2) in T_2" } else { "(1 2) missing" },
            if out2 { "(1 3) in T_2" } else { "(1 3) not in T_2" },
            if id1 { "id in T_1" } else { "id missing" },
        ),
    )
}

fn sc_b_not_multi(budgets: Budgets) -> Outcome {
    match check_multi(&truncation_candidate(3, budgets)) {
        Ok(v) => {
            let expected_witness = v.witness().map_or(false, |w| {
                w.to_string().contains("x=1:") && w.to_string().contains("(1 2)")
            });
            if v.fails() && !expected_witness {
                return Outcome::value("fails", "fails with an unexpected witness");
            }
            Outcome::verdict("fails", v)
        }
        Err(e) => Outcome::error("fails", e),
    }
}

fn sc_b_pseudo_multi(budgets: Budgets) -> Outcome {
    match check_pseudo_multi(&truncation_candidate(4, budgets)) {
        Ok(v) => Outcome::verdict("holds", v),
        Err(e) => Outcome::error("holds", e),
    }
}

fn sc_b_product_sets(_: Budgets) -> Outcome {
    for n in 1..=4u64 {
        for m in 1..=4u64 {
            let a = NamedFamily::PermTn(n).enumerate().unwrap();
            let b = NamedFamily::PermTn(m).enumerate().unwrap();
            let mut prod: Vec<Element> = Vec::new();
            for s in &a {
                for t in &b {
                    let st = s.compose(t).unwrap();
                    if !prod.contains(&st) {
                        prod.push(st);
                    }
                }
            }
            prod.sort();
            let expected = NamedFamily::PermTn(n.max(m)).enumerate().unwrap();
            if prod != expected {
                return Outcome::value(
                    "T_n T_m = T_max(n,m) for all n, m <= 4",
                    format!("mismatch at n={n}, m={m}"),
                );
            }
        }
    }
    Outcome::value(
        "T_n T_m = T_max(n,m) for all n, m <= 4",
        "T_n T_m = T_max(n,m) for all n, m <= 4",
    )
}

fn sc_b_strong_pseudo(budgets: Budgets) -> Outcome {
    match check_strong_pseudo(&truncation_candidate(4, budgets)) {
        Ok(v) => Outcome::verdict("holds", v),
        Err(e) => Outcome::error("holds", e),
    }
}

fn sc_b_generates(budgets: Budgets) -> Outcome {
    match check_generates(&truncation_candidate(4, budgets)) {
        Ok(v) => Outcome::verdict("holds", v),
        Err(e) => Outcome::error("holds", e),
    }
}

fn sc_b_zero_orbit(budgets: Budgets) -> Outcome {
    let families = [
        ActionFamily::Named(NamedFamily::PermTn(4)),
        ActionFamily::Named(NamedFamily::PermT),
        ActionFamily::Named(NamedFamily::PermG),
        ActionFamily::Generated {
            generators: vec![Element::Perm(shift_sigma())],
            budget: budgets.closure,
        },
    ];
    for fam in &families {
        match orbit(&Space::BSpace, fam, &Point::B(BPoint::Zero), budgets.orbit) {
            Ok(res) if res.complete && res.points == vec![Point::B(BPoint::Zero)] => {}
            Ok(res) => {
                return Outcome::value(
                    "orbit of 0 is {0}, complete, under every family",
                    format!("{} gave {} points", fam.label(), res.points.len()),
                )
            }
            Err(e) => return Outcome::error("orbit of 0 is {0}, complete, under every family", e),
        }
    }
    Outcome::value(
        "orbit of 0 is {0}, complete, under every family",
        "orbit of 0 is {0}, complete, under every family",
    )
}

fn sc_b_orbit_growth(budgets: Budgets) -> Outcome {
    let mut sizes = Vec::new();
    for n in 2..=8u64 {
        let fam = ActionFamily::Named(NamedFamily::PermTn(n));
        match orbit(&Space::BSpace, &fam, &Point::B(BPoint::Recip(1)), budgets.orbit) {
            Ok(res) if res.complete => sizes.push(res.points.len()),
            Ok(_) => return Outcome::value("orbit sizes 2..8", "incomplete orbit"),
            Err(e) => return Outcome::error("orbit sizes 2..8", e),
        }
    }
    Outcome::value(
        "2, 3, 4, 5, 6, 7, 8",
        sizes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(", "),
    )
}

fn sc_b_distal_tn(budgets: Budgets) -> Outcome {
    for n in 1..=6u64 {
        match is_distal(&Space::BSpace, &ActionFamily::Named(NamedFamily::PermTn(n)), budgets) {
            Ok(v) if v.holds() => {}
            Ok(v) => return Outcome::verdict("holds", v),
            Err(e) => return Outcome::error("holds", e),
        }
    }
    Outcome::verdict("holds", Verdict::Holds)
}

fn sc_b_distal_oracle(budgets: Budgets) -> Outcome {
    let mut rng = SplitMix64(0x5eed_0001);
    let mut agree = 0usize;
    const SAMPLES: usize = 50;
    const BOUND: u64 = 6;
    for _ in 0..SAMPLES {
        let perms = [random_permutation(&mut rng, BOUND), random_permutation(&mut rng, BOUND)];
        let fam = ActionFamily::Generated {
            generators: perms.iter().cloned().map(Element::Perm).collect(),
            budget: budgets.closure,
        };
        let distal = match is_distal(&Space::BSpace, &fam, budgets) {
            Ok(v) => v.holds(),
            Err(e) => return Outcome::error("50/50 agreement", e),
        };
        // finite-space oracle: indices 0..BOUND stand for 1/1..1/BOUND and
        // one extra point for 0; proximality degenerates to the diagonal
        // exactly when the action is by bijections with finite orbits
        let names: Vec<String> = (0..=BOUND).map(|i| format!("p{i}")).collect();
        let space = Space::Finite { points: names };
        let maps: Vec<Element> = perms
            .iter()
            .map(|p| {
                let mut v: Vec<usize> = (0..BOUND).map(|i| (p.apply(i + 1) - 1) as usize).collect();
                v.push(BOUND as usize);
                Element::Map(FiniteMap(v))
            })
            .collect();
        let elements = match (ActionFamily::Generated {
            generators: maps,
            budget: budgets.closure,
        })
        .enumerate(budgets.closure)
        {
            Ok(e) => e,
            Err(gap) => return Outcome::error("50/50 agreement", gap),
        };
        let pairs = match proximal_pairs(&space, &elements) {
            Ok(p) => p,
            Err(e) => return Outcome::error("50/50 agreement", e),
        };
        let oracle_distal = pairs.len() == (BOUND + 1) as usize;
        if distal == oracle_distal {
            agree += 1;
        }
    }
    Outcome::value("50/50 agreement", format!("{agree}/{SAMPLES} agreement"))
}

fn sc_b_t_not_distal(budgets: Budgets) -> Outcome {
    match is_distal(&Space::BSpace, &ActionFamily::Named(NamedFamily::PermT), budgets) {
        Ok(v) => Outcome::verdict("fails", v),
        Err(e) => Outcome::error("fails", e),
    }
}

fn sc_b_g_not_distal(budgets: Budgets) -> Outcome {
    match is_distal(&Space::BSpace, &ActionFamily::Named(NamedFamily::PermG), budgets) {
        Ok(v) => Outcome::verdict("fails", v),
        Err(e) => Outcome::error("fails", e),
    }
}

fn sc_b_shift_orbit(budgets: Budgets) -> Outcome {
    let fam = ActionFamily::Generated {
        generators: vec![Element::Perm(build_shift_sigma())],
        budget: budgets.closure,
    };
    match orbit(&Space::BSpace, &fam, &Point::B(BPoint::Recip(1)), 9) {
        Ok(res) => {
            let expected: Vec<Point> = (0..10u64)
                .map(|k| Point::B(BPoint::Recip(2 * k + 1)))
                .collect();
            let mut got = res.points.clone();
            got.sort_by_key(|p| match p {
                Point::B(BPoint::Recip(k)) => *k,
                _ => u64::MAX,
            });
            Outcome::value(
                "first 10 points are 1/(2k+1), k = 0..9, orbit incomplete",
                if got == expected && !res.complete {
                    "first 10 points are 1/(2k+1), k = 0..9, orbit incomplete".into()
                } else {
                    format!("points {:?}, complete = {}", res.points, res.complete)
                },
            )
        }
        Err(e) => Outcome::error("first 10 points are 1/(2k+1), k = 0..9", e),
    }
}

fn sc_b_proximal_witness(budgets: Budgets) -> Outcome {
    let eps = Rat::new(1, 100);
    let expected = "both searches reach below 1/100";
    let named = match proximal_witness_to_zero(
        &ActionFamily::Named(NamedFamily::PermT),
        BPoint::Recip(1),
        eps,
        budgets,
    ) {
        Ok(w) => w,
        Err(e) => return Outcome::error(expected, e),
    };
    let shifts = ActionFamily::Generated {
        generators: vec![Element::Perm(shift_sigma())],
        budget: budgets.closure,
    };
    let generated = match proximal_witness_to_zero(&shifts, BPoint::Recip(1), eps, budgets) {
        Ok(w) => w,
        Err(e) => return Outcome::error(expected, e),
    };
    let reaches = |w: &WitnessSearch| match w {
        WitnessSearch::Found(e) => match e.act(&Point::B(BPoint::Recip(1))) {
            Ok(Point::B(BPoint::Recip(m))) => Rat::new(1, m as i64) < eps,
            _ => false,
        },
        WitnessSearch::Undecided(_) => false,
    };
    Outcome::value(
        expected,
        if reaches(&named) && reaches(&generated) {
            expected.into()
        } else {
            format!("named: {named:?}; generated: {generated:?}")
        },
    )
}

fn sc_b_effective_commutation(budgets: Budgets) -> Outcome {
    // disjoint-support parts commute; base is their (effective) closure
    let part_a: Vec<Element> = vec![
        Element::Perm(NatPermutation::identity()),
        Element::Perm(NatPermutation::transposition(1, 2)),
    ];
    let part_b: Vec<Element> = vec![
        Element::Perm(NatPermutation::identity()),
        Element::Perm(NatPermutation::transposition(3, 4)),
    ];
    let mut union = part_a.clone();
    union.extend(part_b.iter().cloned());
    let cand = DecompositionCandidate {
        space: Space::BSpace,
        base: ActionFamily::Generated {
            generators: union,
            budget: budgets.closure,
        },
        parts: vec![ActionFamily::Enumerated(part_a), ActionFamily::Enumerated(part_b)],
        budgets,
    };
    match check_effective_commutation(&cand) {
        Ok(v) => Outcome::verdict("holds", v),
        Err(e) => Outcome::error("holds", e),
    }
}

fn sc_c_reflection_identities(_: Budgets) -> Outcome {
    let eta = DihedralElement::eta();
    for d in 1..=12i64 {
        for n in 0..d {
            let alpha = Rat::new(n, d);
            let phi = DihedralElement::rotation(alpha);
            let eps = DihedralElement::reflection(alpha);
            let phi_neg = DihedralElement::rotation(-alpha);
            if eta.compose(&phi) != eps || phi_neg.compose(&eta) != eps {
                return Outcome::value(
                    "eta.phi(a) = eps(a) = phi(-a).eta for all denominators <= 12",
                    format!("identity breaks at alpha = {alpha}"),
                );
            }
        }
    }
    Outcome::value(
        "eta.phi(a) = eps(a) = phi(-a).eta for all denominators <= 12",
        "eta.phi(a) = eps(a) = phi(-a).eta for all denominators <= 12",
    )
}

fn sc_c_involutions(_: Budgets) -> Outcome {
    let mut bad = Vec::new();
    for g in crate::circle::elements_with_denominator_up_to(12) {
        let squared = g.compose(&g);
        let is_involution = squared.is_identity();
        let expected = g.flip() || g.angle() == Rat::new(0, 1) || g.angle() == Rat::new(1, 2);
        if is_involution != expected {
            bad.push(g.to_string());
        }
    }
    Outcome::value(
        "involutions are exactly the reflections plus id and phi(1/2)",
        if bad.is_empty() {
            "involutions are exactly the reflections plus id and phi(1/2)".into()
        } else {
            format!("misclassified: {}", bad.join(", "))
        },
    )
}

fn sc_c_eta_centralizer(_: Budgets) -> Outcome {
    let eta = DihedralElement::eta();
    let mut centralizer: Vec<String> = crate::circle::elements_with_denominator_up_to(12)
        .into_iter()
        .filter(|g| g.compose(&eta) == eta.compose(g))
        .map(|g| g.to_string())
        .collect();
    centralizer.sort();
    Outcome::value(
        "eps(1/2), eta, id, phi(1/2)",
        centralizer.join(", "),
    )
}

fn sc_c_finite_order(_: Budgets) -> Outcome {
    for g in crate::circle::elements_with_denominator_up_to(12) {
        let ord = g.order();
        let mut acc = DihedralElement::identity();
        for step in 1..=ord {
            acc = acc.compose(&g);
            if acc.is_identity() != (step == ord) {
                return Outcome::value(
                    "g^order(g) = id with minimality, denominators <= 12",
                    format!("order wrong for {g}"),
                );
            }
        }
    }
    Outcome::value(
        "g^order(g) = id with minimality, denominators <= 12",
        "g^order(g) = id with minimality, denominators <= 12",
    )
}

fn sc_c_dihedral_products(_: Budgets) -> Outcome {
    for s in 1..=12u64 {
        for t in 1..=12u64 {
            let a = dihedral_t(s);
            let b = dihedral_t(t);
            let mut left: Vec<DihedralElement> = Vec::new();
            for x in &a {
                for y in &b {
                    let p = x.compose(y);
                    if !left.contains(&p) {
                        left.push(p);
                    }
                }
            }
            left.sort();
            let mut right: Vec<DihedralElement> = Vec::new();
            for y in &b {
                for x in &a {
                    let p = y.compose(x);
                    if !right.contains(&p) {
                        right.push(p);
                    }
                }
            }
            right.sort();
            let expected = dihedral_t(num_integer::lcm(s, t));
            if left != expected || right != expected {
                return Outcome::value(
                    "T_s T_t = T_t T_s = T_lcm(s,t) for all s, t <= 12",
                    format!("mismatch at s={s}, t={t}"),
                );
            }
        }
    }
    Outcome::value(
        "T_s T_t = T_t T_s = T_lcm(s,t) for all s, t <= 12",
        "T_s T_t = T_t T_s = T_lcm(s,t) for all s, t <= 12",
    )
}

fn sc_c_pseudo_codecomp(budgets: Budgets) -> Outcome {
    match check_pseudo_multi(&dihedral_candidate(&[2, 3, 4, 5], budgets)) {
        Ok(v) => Outcome::verdict("holds", v),
        Err(e) => Outcome::error("holds", e),
    }
}

fn sc_c_dihedral_generates(budgets: Budgets) -> Outcome {
    match check_generates(&dihedral_candidate(&[2, 3, 4, 5], budgets)) {
        Ok(v) => Outcome::verdict("holds", v),
        Err(e) => Outcome::error("holds", e),
    }
}

fn sc_c_rotations_multi(budgets: Budgets) -> Outcome {
    match check_multi(&rotation_candidate(&[2, 3, 4], budgets)) {
        Ok(v) => Outcome::verdict("holds", v),
        Err(e) => Outcome::error("holds", e),
    }
}

fn sc_c_not_point_transitive(budgets: Budgets) -> Outcome {
    let space = Space::CircleRational { grid_denominator: 24 };
    for m in 1..=10u64 {
        let fam = ActionFamily::Named(NamedFamily::DihedralT(m));
        let eps = Rat::new(1, 4 * m as i64);
        match is_point_transitive(&space, &fam, eps, None, budgets) {
            Ok(v) if v.fails() => {}
            Ok(v) => return Outcome::verdict("fails", v),
            Err(e) => return Outcome::error("fails", e),
        }
    }
    Outcome::value("fails", "fails")
}

fn sc_c_sigma_minimal(budgets: Budgets) -> Outcome {
    let space = Space::CircleRational { grid_denominator: 24 };
    for fam in [
        ActionFamily::Named(NamedFamily::Sigma),
        ActionFamily::Named(NamedFamily::SigmaStar),
    ] {
        for eps in [Rat::new(1, 10), Rat::new(1, 100), Rat::new(1, 1000)] {
            match is_minimal(&space, &fam, eps, None, budgets) {
                Ok(v) if v.holds() => {}
                Ok(v) => return Outcome::verdict("holds", v),
                Err(e) => return Outcome::error("holds", e),
            }
            // witness: the rotation by 1/m with m > 1/eps lies in the family
            let m = rotation_density_denominator(eps);
            if Rat::new(1, m as i64) >= eps
                || !matches!(
                    fam,
                    ActionFamily::Named(NamedFamily::Sigma | NamedFamily::SigmaStar)
                )
            {
                return Outcome::value("holds", "density witness out of range");
            }
            let rot = ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, m as i64)));
            let samples = [
                crate::circle::CirclePoint::frac(0, 1),
                crate::circle::CirclePoint::frac(1, 3),
                crate::circle::CirclePoint::frac(5, 24),
            ];
            match is_minimal(&space, &rot, eps, Some(&samples), budgets) {
                Ok(v) if v.holds() => {}
                Ok(v) => return Outcome::verdict("holds", v),
                Err(e) => return Outcome::error("holds", e),
            }
        }
    }
    Outcome::value("holds", "holds")
}

fn sc_c_rotation_parts_non_minimal(budgets: Budgets) -> Outcome {
    let cand = rotation_candidate(&[2, 3, 4], budgets);
    match classify(&cand, Some(&DynamicalProperty::NonMinimal { epsilon: Rat::new(1, 10) })) {
        Ok(report) => {
            let parts_ok = report
                .property_per_part
                .iter()
                .all(|(_, _, v)| v.holds());
            Outcome::value(
                "multi holds; every part non-minimal",
                if report.multi.holds() && parts_ok {
                    "multi holds; every part non-minimal".into()
                } else {
                    format!("multi {}; parts {:?}", report.multi, report.property_per_part)
                },
            )
        }
        Err(e) => Outcome::error("multi holds; every part non-minimal", e),
    }
}

fn sc_c_sigma_generates_gap(budgets: Budgets) -> Outcome {
    match check_generates(&rotation_candidate(&[2, 3], budgets)) {
        Ok(v) => Outcome::verdict("fails", v),
        Err(e) => Outcome::error("fails", e),
    }
}

fn sc_c_effective_commutation(budgets: Budgets) -> Outcome {
    let cand = DecompositionCandidate {
        space: Space::CircleRational { grid_denominator: 24 },
        base: ActionFamily::enumerated(
            NamedFamily::CyclicRotation(Rat::new(1, 6)).enumerate().unwrap(),
        ),
        parts: vec![
            ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, 2))),
            ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, 3))),
        ],
        budgets,
    };
    match check_effective_commutation(&cand) {
        Ok(v) => Outcome::verdict("holds", v),
        Err(e) => Outcome::error("holds", e),
    }
}

fn sc_m_size(_: Budgets) -> Outcome {
    match build_m_construction(&left_zero_table()) {
        Ok(m) => Outcome::value("5", m.table.len().to_string()),
        Err(e) => Outcome::error("5", e),
    }
}

fn sc_m_operation(_: Budgets) -> Outcome {
    let expected = "(a,b)(c,d) = (a,d); x(s,t) = xs; e is the identity";
    let m = match build_m_construction(&left_zero_table()) {
        Ok(m) => m,
        Err(e) => return Outcome::error(expected, e),
    };
    let n = 2usize;
    let pair = |a: usize, b: usize| 1 + a * n + b;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if m.table.mul(pair(a, b), pair(c, d)) != pair(a, d) {
                        return Outcome::value(expected, "pair product broken");
                    }
                }
            }
        }
    }
    let base = left_zero_table();
    for x in 0..base.point_count {
        if m.table.act(x, 0) != x {
            return Outcome::value(expected, "identity moves a point");
        }
        for s in 0..n {
            for t in 0..n {
                if m.table.act(x, pair(s, t)) != base.act(x, s) {
                    return Outcome::value(expected, "action depends on the second slot");
                }
            }
        }
    }
    Outcome::value(expected, expected)
}

fn sc_m_pseudo(budgets: Budgets) -> Outcome {
    match m_candidate(budgets).and_then(|c| check_pseudo_multi(&c)) {
        Ok(v) => Outcome::verdict("holds", v),
        Err(e) => Outcome::error("holds", e),
    }
}

fn sc_m_not_strong(budgets: Budgets) -> Outcome {
    match m_candidate(budgets).and_then(|c| check_strong_pseudo(&c)) {
        Ok(v) => Outcome::verdict("fails", v),
        Err(e) => Outcome::error("fails", e),
    }
}

fn sc_m_not_effective(budgets: Budgets) -> Outcome {
    let family = match build_m_construction(&left_zero_table()) {
        Ok(m) => m.family,
        Err(e) => return Outcome::error("fails", e),
    };
    match acts_effectively(&Space::finite(&["fa", "fb", "w"]), &family, budgets) {
        Ok(v) => Outcome::verdict("fails", v),
        Err(e) => Outcome::error("fails", e),
    }
}

fn sc_m_classify(budgets: Budgets) -> Outcome {
    let expected = "pseudo_multi holds; strong_pseudo fails";
    match m_candidate(budgets).and_then(|c| classify(&c, None)) {
        Ok(report) => Outcome::value(
            expected,
            format!(
                "pseudo_multi {}; strong_pseudo {}",
                report.pseudo_multi.status(),
                report.strong_pseudo.status()
            ),
        ),
        Err(e) => Outcome::error(expected, e),
    }
}

/// Fixed registry order; ids are stable public strings.
pub fn registry() -> Vec<Scenario> {
    macro_rules! sc {
        ($id:literal, $desc:literal, $f:ident) => {
            Scenario {
                id: $id,
                description: $desc,
                run: $f,
            }
        };
    }
    vec![
        sc!("b.swap_action", "the induced map of (1 2) swaps 1 and 1/2 and fixes the rest", sc_b_swap_action),
        sc!("b.tn_membership", "truncated permutation families contain exactly the bounded-support bijections", sc_b_tn_membership),
        sc!("b.not_multi", "truncated permutation parts do not commute pointwise", sc_b_not_multi),
        sc!("b.pseudo_multi", "truncated permutation parts commute at the level of point sets", sc_b_pseudo_multi),
        sc!("b.product_sets", "products of truncations collapse to the larger truncation", sc_b_product_sets),
        sc!("b.strong_pseudo", "products of truncations commute as element sets", sc_b_strong_pseudo),
        sc!("b.generates_truncation", "the truncations cover the bounded-support family", sc_b_generates),
        sc!("b.zero_orbit", "the accumulation point is fixed by every permutation family", sc_b_zero_orbit),
        sc!("b.orbit_growth", "the orbit of 1 under T_n has exactly n points, strictly growing", sc_b_orbit_growth),
        sc!("b.distal_tn", "bounded-support families are distal", sc_b_distal_tn),
        sc!("b.distal_oracle_agreement", "distality agrees with the finite-space proximal oracle on random families", sc_b_distal_oracle),
        sc!("b.t_not_distal", "the full bounded-support family is not distal", sc_b_t_not_distal),
        sc!("b.g_not_distal", "the full permutation family is not distal, via the shift", sc_b_g_not_distal),
        sc!("b.shift_orbit", "the shift orbit of 1 walks the odd reciprocals", sc_b_shift_orbit),
        sc!("b.proximal_witness", "elements push 1 below 1/100, witnessing proximality to 0", sc_b_proximal_witness),
        sc!("b.effective_commutation", "effective pointwise commutation forces elementwise commutation", sc_b_effective_commutation),
        sc!("circle.reflection_identities", "reflection through a rotated axis factors both ways", sc_c_reflection_identities),
        sc!("circle.involutions", "involutions are the reflections plus the two rotation involutions", sc_c_involutions),
        sc!("circle.eta_centralizer", "exactly four elements commute with the base reflection", sc_c_eta_centralizer),
        sc!("circle.finite_order", "every rational dihedral element has the computed finite order", sc_c_finite_order),
        sc!("circle.dihedral_products", "dihedral group products commute and collapse to the lcm group", sc_c_dihedral_products),
        sc!("circle.pseudo_codecomp", "dihedral parts commute at the level of point sets", sc_c_pseudo_codecomp),
        sc!("circle.dihedral_generates", "the finite dihedral groups cover the rotation-reflection family", sc_c_dihedral_generates),
        sc!("circle.rotations_multi", "cyclic rotation parts commute pointwise", sc_c_rotations_multi),
        sc!("circle.not_point_transitive", "finite dihedral orbits miss an arc at resolution 1/(4m)", sc_c_not_point_transitive),
        sc!("circle.sigma_minimal", "the rational rotation families are minimal at every tested resolution", sc_c_sigma_minimal),
        sc!("circle.rotation_parts_non_minimal", "rotation parts commute yet each part is non-minimal", sc_c_rotation_parts_non_minimal),
        sc!("circle.sigma_generates_gap", "two rotations fail to generate all rational rotations", sc_c_sigma_generates_gap),
        sc!("circle.effective_commutation", "commuting rotation parts satisfy the closure-product collapse", sc_c_effective_commutation),
        sc!("m.size", "the pair construction over a 2-element base has 5 elements", sc_m_size),
        sc!("m.operation", "pair product keeps first and last coordinates; action uses the first", sc_m_operation),
        sc!("m.pseudo", "the pair columns commute at the level of point sets", sc_m_pseudo),
        sc!("m.not_strong", "the pair columns do not commute as element sets", sc_m_not_strong),
        sc!("m.not_effective", "pairs differing in the second slot act identically", sc_m_not_effective),
        sc!("m.classify", "classification separates the set-level and point-level verdicts", sc_m_classify),
    ]
}

/// Runs every scenario whose id starts with `filter`, in registry order.
pub fn reproduce(filter: &str, budgets: Budgets) -> Vec<ScenarioResult> {
    registry()
        .into_iter()
        .filter(|s| s.id.starts_with(filter))
        .map(|s| {
            let outcome = (s.run)(budgets);
            ScenarioResult {
                id: s.id.to_string(),
                description: s.description.to_string(),
                pass: outcome.expected == outcome.actual,
                expected: outcome.expected,
                actual: outcome.actual,
                witness: outcome.witness,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_matches_the_arrow_diagram() {
        let s = build_shift_sigma();
        assert_eq!(s.apply(6), 4);
        assert_eq!(s.apply(2), 1);
        assert_eq!(s.invert().apply(3), 1);
    }

    #[test]
    fn t_n_builder() {
        let ActionFamily::Enumerated(t3) = build_t_n(3).unwrap() else {
            panic!("expected an enumerated family");
        };
        assert_eq!(t3.len(), 6);
        let ActionFamily::Enumerated(t1) = build_t_n(1).unwrap() else {
            panic!();
        };
        assert_eq!(t1, vec![Element::Perm(NatPermutation::identity())]);
        let ActionFamily::Enumerated(t2) = build_t_n(2).unwrap() else {
            panic!();
        };
        assert!(t2.contains(&Element::Perm(NatPermutation::transposition(1, 2))));
        assert!(build_t_n(20).is_err());
    }

    #[test]
    fn m_construction_shape() {
        let m = build_m_construction(&left_zero_table()).unwrap();
        assert_eq!(m.table.len(), 5);
        assert_eq!(m.parts_with_identity.len(), 2);
        assert_eq!(m.core_parts.len(), 2);
        for part in &m.core_parts {
            let ActionFamily::Enumerated(els) = part else { panic!() };
            assert_eq!(els.len(), 2);
            assert!(els.iter().all(|e| !e.is_identity()));
        }
        assert!(build_m_construction(
            &SemigroupTable::new("triv", vec!["e".into()], vec![0], vec![0], 1, Some(0)).unwrap()
        )
        .is_err());
    }

    #[test]
    fn identity_adjoined_parts_commute_as_sets() {
        // with the identity in every part, any factor of a product can be
        // skipped, so products of parts are permutation-invariant; the
        // asymmetry the construction exists for needs the identity-free parts
        let m = build_m_construction(&left_zero_table()).unwrap();
        let cand = DecompositionCandidate {
            space: Space::finite(&["fa", "fb", "w"]),
            base: m.family.clone(),
            parts: m.parts_with_identity.clone(),
            budgets: Budgets::default(),
        };
        assert!(check_strong_pseudo(&cand).unwrap().holds());
        let core = DecompositionCandidate {
            parts: m.core_parts.clone(),
            ..cand
        };
        assert!(check_strong_pseudo(&core).unwrap().fails());
    }

    #[test]
    fn full_registry_passes() {
        let results = reproduce("", Budgets::default());
        assert!(results.len() >= 20);
        for r in &results {
            assert!(r.pass, "{}: expected {}, got {}", r.id, r.expected, r.actual);
        }
    }

    #[test]
    fn reproduction_is_deterministic() {
        let a = reproduce("", Budgets::default());
        let b = reproduce("", Budgets::default());
        let render = |rs: &[ScenarioResult]| {
            rs.iter()
                .map(|r| format!("{}|{}|{}|{:?}", r.id, r.expected, r.actual, r.witness))
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(render(&a), render(&b));
    }

    #[test]
    fn filter_selects_a_prefix() {
        let results = reproduce("m.", Budgets::default());
        assert_eq!(results.len(), 6);
        assert!(results.iter().all(|r| r.id.starts_with("m.")));
        assert!(reproduce("nonexistent.", Budgets::default()).is_empty());
    }

    #[test]
    fn random_permutations_are_valid_and_seeded() {
        let mut a = SplitMix64(42);
        let mut b = SplitMix64(42);
        for _ in 0..20 {
            let p = random_permutation(&mut a, 6);
            let q = random_permutation(&mut b, 6);
            assert_eq!(p, q);
            let images: std::collections::BTreeSet<u64> = (1..=6).map(|k| p.apply(k)).collect();
            assert_eq!(images.len(), 6);
        }
    }
}
