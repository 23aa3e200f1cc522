//! Verifiers for multi-, pseudo-multi-, strong-pseudo- and co-decomposition
//! structure.
//!
//! Every check reduces the n-fold permutation conditions to pairwise
//! (adjacent-transposition) checks: any permutation of a finite sequence is
//! a product of adjacent transpositions, and swapping two adjacent factors
//! is exactly the pairwise condition applied at the point (or set) reached
//! by the preceding prefix. Since the pairwise checks here quantify over
//! every reachable sample point and every part pair, the swap is justified
//! at each step, so pairwise commutation implies the full condition, with
//! repeated indices included. `brute_force_*` verify this reduction
//! directly on small candidates.

use std::collections::BTreeSet;

use num_integer::lcm;

use crate::action::{
    acts_effectively, closure, is_distal, is_minimal, is_point_transitive, ActionError,
    ActionFamily, ClosureOutcome, Element, EnumerationGap, NamedFamily, Point, Space, Verdict,
    Witness,
};
use crate::circle::Rat;
use crate::Budgets;

/// A proposed decomposition: a base family on a space, split into parts.
#[derive(Debug, Clone)]
pub struct DecompositionCandidate {
    pub space: Space,
    pub base: ActionFamily,
    pub parts: Vec<ActionFamily>,
    pub budgets: Budgets,
}

/// A dynamical property asked of each part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DynamicalProperty {
    Distal,
    NonPointTransitive { epsilon: Rat },
    NonMinimal { epsilon: Rat },
}

impl DynamicalProperty {
    pub fn name(&self) -> &'static str {
        match self {
            DynamicalProperty::Distal => "distal",
            DynamicalProperty::NonPointTransitive { .. } => "non_point_transitive",
            DynamicalProperty::NonMinimal { .. } => "non_minimal",
        }
    }
}

/// Outcome of `classify`: the four structural checks plus the per-part
/// property verdicts.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub multi: Verdict,
    pub pseudo_multi: Verdict,
    pub strong_pseudo: Verdict,
    pub generates: Verdict,
    pub property_per_part: Vec<(String, String, Verdict)>,
}

fn gap_verdict(gap: EnumerationGap) -> Result<Verdict, ActionError> {
    match gap {
        EnumerationGap::Budget { .. } => Ok(Verdict::Undecided(gap.to_string())),
        EnumerationGap::Error(ActionError::NotEnumerable(r)) => Ok(Verdict::Undecided(r)),
        EnumerationGap::Error(e) => Err(e),
    }
}

impl DecompositionCandidate {
    /// Enumerates every part and validates the candidate shape: parts
    /// pairwise distinct, elements inside the base (up to budget).
    /// `Ok(Err(verdict))` reports an enumeration gap as Undecided. Identity
    /// membership is not forced here: the abstract-semigroup parts of
    /// interest are identity-free, and only the effectiveness lemma needs
    /// the identity hypothesis.
    fn enumerated_parts(&self) -> Result<Result<Vec<Vec<Element>>, Verdict>, ActionError> {
        let mut out = Vec::with_capacity(self.parts.len());
        for part in &self.parts {
            match part.enumerate(self.budgets.closure) {
                Ok(els) => out.push(els),
                Err(gap) => return gap_verdict(gap).map(Err),
            }
        }
        for (i, els) in out.iter().enumerate() {
            for (j, other) in out.iter().enumerate().skip(i + 1) {
                if els == other {
                    return Err(ActionError::HypothesisViolation(format!(
                        "parts {i} and {j} are the same element set"
                    )));
                }
            }
            for e in els {
                if self.base.contains(e, self.budgets.closure) == Some(false) {
                    return Err(ActionError::HypothesisViolation(format!(
                        "part {i} element {e} is outside the base family"
                    )));
                }
            }
        }
        Ok(Ok(out))
    }

    /// Exact sample coverage of the space relative to the part elements. On
    /// the sequence space everything above the largest supported index is
    /// fixed by every part element, so the finite sample set is complete;
    /// on the circle the common denominator grid is closed under the parts.
    fn sample_points(&self, parts: &[Vec<Element>]) -> Result<Vec<Point>, ActionError> {
        match &self.space {
            Space::Finite { .. } => Ok(self.space.finite_points().expect("finite space")),
            Space::BSpace => {
                let mut bound = 1u64;
                for els in parts {
                    for e in els {
                        match e.max_support_index() {
                            Some(k) => bound = bound.max(k),
                            None => {
                                return Err(ActionError::HypothesisViolation(format!(
                                    "part element {e} has unbounded support; sample coverage \
                                     would not be exact"
                                )))
                            }
                        }
                    }
                }
                Ok(Space::bspace_samples(bound))
            }
            Space::CircleRational { grid_denominator } => {
                let mut denom = (*grid_denominator).max(1) as i64;
                for els in parts {
                    for e in els {
                        if let Element::Dihedral(g) = e {
                            denom = lcm(denom, *g.angle().denom());
                        }
                    }
                }
                Ok(Space::circle_grid(denom as u64)
                    .into_iter()
                    .map(Point::Circle)
                    .collect())
            }
        }
    }
}

/// Elementwise pointwise commutation across distinct parts:
/// `x s t = x t s` for all sample `x`, `s` in one part, `t` in another.
pub fn check_multi(candidate: &DecompositionCandidate) -> Result<Verdict, ActionError> {
    let parts = match candidate.enumerated_parts()? {
        Ok(p) => p,
        Err(v) => return Ok(v),
    };
    let samples = candidate.sample_points(&parts)?;
    let pair_count =
        parts.iter().map(Vec::len).sum::<usize>().pow(2) * samples.len().max(1);
    if pair_count > candidate.budgets.pairs {
        return Ok(Verdict::Undecided(format!(
            "{pair_count} element-pair evaluations exceed the pair budget of {}",
            candidate.budgets.pairs
        )));
    }
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            for x in &samples {
                for s in &parts[a] {
                    for t in &parts[b] {
                        let left = t.act(&s.act(x)?)?;
                        let right = s.act(&t.act(x)?)?;
                        if left != right {
                            return Ok(Verdict::Fails(Witness::NonCommutation {
                                point: x.clone(),
                                first: s.clone(),
                                second: t.clone(),
                                left,
                                right,
                                part_a: a,
                                part_b: b,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

fn orbit_product(x: &Point, first: &[Element], second: &[Element]) -> Result<BTreeSet<Point>, ActionError> {
    let mut mid = BTreeSet::new();
    for s in first {
        mid.insert(s.act(x)?);
    }
    let mut out = BTreeSet::new();
    for y in &mid {
        for t in second {
            out.insert(t.act(y)?);
        }
    }
    Ok(out)
}

/// Set-level pointwise commutation: `x S_a S_b = x S_b S_a` at every sample.
pub fn check_pseudo_multi(candidate: &DecompositionCandidate) -> Result<Verdict, ActionError> {
    let parts = match candidate.enumerated_parts()? {
        Ok(p) => p,
        Err(v) => return Ok(v),
    };
    let samples = candidate.sample_points(&parts)?;
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            for x in &samples {
                let left = orbit_product(x, &parts[a], &parts[b])?;
                let right = orbit_product(x, &parts[b], &parts[a])?;
                if left != right {
                    return Ok(Verdict::Fails(Witness::OrbitProductMismatch {
                        point: x.clone(),
                        part_a: a,
                        part_b: b,
                        left: left.into_iter().collect(),
                        right: right.into_iter().collect(),
                    }));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

fn element_product(first: &[Element], second: &[Element]) -> Result<BTreeSet<Element>, ActionError> {
    let mut out = BTreeSet::new();
    for s in first {
        for t in second {
            out.insert(s.compose(t)?);
        }
    }
    Ok(out)
}

/// Set-level commutation of the parts themselves: `S_a S_b = S_b S_a` as
/// element sets, compared by element equality rather than through points.
pub fn check_strong_pseudo(candidate: &DecompositionCandidate) -> Result<Verdict, ActionError> {
    let parts = match candidate.enumerated_parts()? {
        Ok(p) => p,
        Err(v) => return Ok(v),
    };
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            let left = element_product(&parts[a], &parts[b])?;
            let right = element_product(&parts[b], &parts[a])?;
            if left != right {
                return Ok(Verdict::Fails(Witness::ProductSetMismatch {
                    part_a: a,
                    part_b: b,
                    only_in_left: left.difference(&right).cloned().collect(),
                    only_in_right: right.difference(&left).cloned().collect(),
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Does the union of the parts generate the base?
///
/// Finite bases are decided by comparing the semigroup closure of the part
/// union with the base. Two named coverage rules are recognized: the
/// bounded-support permutation family as the union of its truncations, and
/// the full rotation-reflection family as the union of the finite dihedral
/// groups; these hold by the rule and are cross-validated on an enumeration
/// prefix. Any other named base is sampled against the (finite) closure of
/// the parts.
pub fn check_generates(candidate: &DecompositionCandidate) -> Result<Verdict, ActionError> {
    let parts = match candidate.enumerated_parts()? {
        Ok(p) => p,
        Err(v) => return Ok(v),
    };
    if let ActionFamily::Named(named) = &candidate.base {
        if let Some(v) = named_coverage_rule(named, candidate)? {
            return Ok(v);
        }
    }
    let union: Vec<Element> = {
        let mut set: BTreeSet<Element> = BTreeSet::new();
        for els in &parts {
            set.extend(els.iter().cloned());
        }
        set.into_iter().collect()
    };
    let generated = match closure(&union, candidate.budgets.closure)? {
        ClosureOutcome::Complete(v) => v,
        ClosureOutcome::Exhausted(n) => {
            return Ok(Verdict::Undecided(format!(
                "closure of the part union exceeded the budget after {n} elements"
            )))
        }
    };
    match candidate.base.enumerate(candidate.budgets.closure) {
        Ok(base_elements) => {
            for e in &base_elements {
                if !generated.contains(e) {
                    return Ok(Verdict::Fails(Witness::UnreachableElement {
                        element: e.clone(),
                    }));
                }
            }
            for e in &generated {
                if !base_elements.contains(e) {
                    return Err(ActionError::HypothesisViolation(format!(
                        "parts generate {e}, which is outside the base"
                    )));
                }
            }
            Ok(Verdict::Holds)
        }
        Err(EnumerationGap::Error(ActionError::NotEnumerable(_))) => {
            // infinite named base without a coverage rule: the parts close
            // into a finite set, so any sampled base element outside it is
            // a definitive failure
            let ActionFamily::Named(named) = &candidate.base else {
                unreachable!("only named families are non-enumerable");
            };
            for e in named.sample_prefix(32) {
                if !generated.contains(&e) {
                    return Ok(Verdict::Fails(Witness::UnreachableElement { element: e }));
                }
            }
            Ok(Verdict::Undecided(format!(
                "every sampled element of {} is generated, but the family is infinite and the \
                 closure is finite",
                named.id()
            )))
        }
        Err(gap) => gap_verdict(gap),
    }
}

fn named_coverage_rule(
    named: &NamedFamily,
    candidate: &DecompositionCandidate,
) -> Result<Option<Verdict>, ActionError> {
    let rule = match named {
        NamedFamily::PermT => candidate.parts.iter().all(|p| {
            matches!(p, ActionFamily::Named(NamedFamily::PermTn(_)))
        }),
        NamedFamily::SigmaStar => candidate.parts.iter().all(|p| {
            matches!(p, ActionFamily::Named(NamedFamily::DihedralT(_)))
        }),
        _ => false,
    };
    if !rule {
        return Ok(None);
    }
    // the parts are a truncation of the full union; cross-validate the rule
    // on a prefix of the base, restricted to elements the truncation covers
    for e in named.sample_prefix(32) {
        let covered = candidate
            .parts
            .iter()
            .any(|p| matches!(p, ActionFamily::Named(n) if n.contains(&e)));
        let within_truncation = match (named, &e) {
            (NamedFamily::PermT, Element::Perm(_)) => {
                let bound = candidate
                    .parts
                    .iter()
                    .filter_map(|p| match p {
                        ActionFamily::Named(NamedFamily::PermTn(n)) => Some(*n),
                        _ => None,
                    })
                    .max()
                    .unwrap_or(0);
                e.max_support_index().map_or(false, |k| k <= bound)
            }
            (NamedFamily::SigmaStar, Element::Dihedral(g)) => candidate.parts.iter().any(|p| {
                matches!(p, ActionFamily::Named(NamedFamily::DihedralT(m))
                    if (g.angle() * Rat::from_integer(*m as i64)).is_integer())
            }),
            _ => false,
        };
        if within_truncation && !covered {
            return Ok(Some(Verdict::Fails(Witness::UnreachableElement {
                element: e,
            })));
        }
    }
    Ok(Some(Verdict::Holds))
}

/// Consequences of effectiveness for a pointwise-commuting candidate: with
/// an effective base, pointwise commutation forces elementwise commutation
/// `s t = t s`, and the semigroup generated by two parts collapses to their
/// product set. A failure here is a toolkit alarm, not a modeled outcome.
pub fn check_effective_commutation(
    candidate: &DecompositionCandidate,
) -> Result<Verdict, ActionError> {
    let effective = acts_effectively(&candidate.space, &candidate.base, candidate.budgets)?;
    if !effective.holds() {
        return Ok(Verdict::Undecided(format!(
            "hypothesis unmet: the base action is not confirmed effective ({effective})"
        )));
    }
    let multi = check_multi(candidate)?;
    if !multi.holds() {
        return Ok(Verdict::Undecided(format!(
            "hypothesis unmet: pointwise commutation not confirmed ({multi})"
        )));
    }
    let parts = match candidate.enumerated_parts()? {
        Ok(p) => p,
        Err(v) => return Ok(v),
    };
    for (i, els) in parts.iter().enumerate() {
        if !els.iter().any(Element::is_identity) {
            return Ok(Verdict::Undecided(format!(
                "hypothesis unmet: part {i} does not contain the identity"
            )));
        }
    }
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            for s in &parts[a] {
                for t in &parts[b] {
                    if s.compose(t)? != t.compose(s)? {
                        return Ok(Verdict::Fails(Witness::Note(format!(
                            "{s}·{t} != {t}·{s} as elements (parts {a}, {b}) despite an \
                             effective pointwise-commuting action"
                        ))));
                    }
                }
            }
            let mut union: Vec<Element> = parts[a].clone();
            union.extend(parts[b].iter().cloned());
            union.sort();
            union.dedup();
            let generated = match closure(&union, candidate.budgets.closure)? {
                ClosureOutcome::Complete(v) => v,
                ClosureOutcome::Exhausted(n) => {
                    return Ok(Verdict::Undecided(format!(
                        "closure of parts {a} and {b} exceeded the budget after {n} elements"
                    )))
                }
            };
            let product = element_product(&parts[a], &parts[b])?;
            let generated: BTreeSet<Element> = generated.into_iter().collect();
            if generated != product {
                return Ok(Verdict::Fails(Witness::ClosureProductMismatch {
                    part_a: a,
                    part_b: b,
                    only_in_closure: generated.difference(&product).cloned().collect(),
                    only_in_product: product.difference(&generated).cloned().collect(),
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Runs all four structural checks plus the per-part property decider, and
/// asserts the implication chain (multi implies pseudo-multi, strong pseudo
/// implies pseudo-multi) on the way out.
pub fn classify(
    candidate: &DecompositionCandidate,
    target_property: Option<&DynamicalProperty>,
) -> Result<ClassificationReport, ActionError> {
    let multi = check_multi(candidate)?;
    let pseudo_multi = check_pseudo_multi(candidate)?;
    let strong_pseudo = check_strong_pseudo(candidate)?;
    let generates = check_generates(candidate)?;
    let mut property_per_part = Vec::new();
    if let Some(property) = target_property {
        for (i, part) in candidate.parts.iter().enumerate() {
            let verdict = match property {
                DynamicalProperty::Distal => {
                    is_distal(&candidate.space, part, candidate.budgets)?
                }
                DynamicalProperty::NonPointTransitive { epsilon } => is_point_transitive(
                    &candidate.space,
                    part,
                    *epsilon,
                    None,
                    candidate.budgets,
                )?
                .negate("some orbit is epsilon-dense"),
                DynamicalProperty::NonMinimal { epsilon } => {
                    is_minimal(&candidate.space, part, *epsilon, None, candidate.budgets)?
                        .negate("every orbit is epsilon-dense")
                }
            };
            property_per_part.push((
                format!("part {i} ({})", part.label()),
                property.name().to_string(),
                verdict,
            ));
        }
    }
    let report = ClassificationReport {
        multi,
        pseudo_multi,
        strong_pseudo,
        generates,
        property_per_part,
    };
    assert!(
        !(report.multi.holds() && report.pseudo_multi.fails()),
        "implication violated: pointwise commutation without set-level commutation"
    );
    assert!(
        !(report.strong_pseudo.holds() && report.pseudo_multi.fails()),
        "implication violated: element-set commutation without pointwise set commutation"
    );
    Ok(report)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

fn index_sequences(parts: usize, len: usize, distinct: bool) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for seq in &out {
            for i in 0..parts {
                if distinct && seq.contains(&i) {
                    continue;
                }
                let mut s = seq.clone();
                s.push(i);
                next.push(s);
            }
        }
        out = next;
    }
    out
}

/// Direct verification of the n-fold pointwise condition (distinct part
/// indices, every reordering) for sequence lengths up to `max_len`. Used to
/// validate the pairwise reduction on small candidates.
pub fn brute_force_multi(
    candidate: &DecompositionCandidate,
    max_len: usize,
) -> Result<Verdict, ActionError> {
    let parts = match candidate.enumerated_parts()? {
        Ok(p) => p,
        Err(v) => return Ok(v),
    };
    let samples = candidate.sample_points(&parts)?;
    for len in 2..=max_len.min(parts.len()) {
        for indices in index_sequences(parts.len(), len, true) {
            let mut choices: Vec<Vec<&Element>> = vec![vec![]];
            for &i in &indices {
                let mut next = Vec::new();
                for c in &choices {
                    for e in &parts[i] {
                        let mut c = c.clone();
                        c.push(e);
                        next.push(c);
                    }
                }
                choices = next;
            }
            for picked in &choices {
                for x in &samples {
                    let mut base_image = x.clone();
                    for e in picked {
                        base_image = e.act(&base_image)?;
                    }
                    for perm in permutations(len) {
                        let mut image = x.clone();
                        for &j in &perm {
                            image = picked[j].act(&image)?;
                        }
                        if image != base_image {
                            return Ok(Verdict::Fails(Witness::Note(format!(
                                "length-{len} reordering changes the image of {x}"
                            ))));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Direct verification of the n-fold set condition (indices with
/// repetition, every reordering) for sequence lengths up to `max_len`.
pub fn brute_force_pseudo_multi(
    candidate: &DecompositionCandidate,
    max_len: usize,
) -> Result<Verdict, ActionError> {
    let parts = match candidate.enumerated_parts()? {
        Ok(p) => p,
        Err(v) => return Ok(v),
    };
    let samples = candidate.sample_points(&parts)?;
    for len in 2..=max_len {
        for indices in index_sequences(parts.len(), len, false) {
            for x in &samples {
                let image_set = |order: &[usize]| -> Result<BTreeSet<Point>, ActionError> {
                    let mut set = BTreeSet::from([x.clone()]);
                    for &j in order {
                        let mut next = BTreeSet::new();
                        for y in &set {
                            for e in &parts[indices[j]] {
                                next.insert(e.act(y)?);
                            }
                        }
                        set = next;
                    }
                    Ok(set)
                };
                let base: Vec<usize> = (0..len).collect();
                let expected = image_set(&base)?;
                for perm in permutations(len) {
                    if image_set(&perm)? != expected {
                        return Ok(Verdict::Fails(Witness::Note(format!(
                            "length-{len} reordering changes the image set of {x}"
                        ))));
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Direct verification of the n-fold element-set condition for sequence
/// lengths up to `max_len`.
pub fn brute_force_strong_pseudo(
    candidate: &DecompositionCandidate,
    max_len: usize,
) -> Result<Verdict, ActionError> {
    let parts = match candidate.enumerated_parts()? {
        Ok(p) => p,
        Err(v) => return Ok(v),
    };
    for len in 2..=max_len {
        for indices in index_sequences(parts.len(), len, false) {
            let product = |order: &[usize]| -> Result<BTreeSet<Element>, ActionError> {
                let mut set: BTreeSet<Element> = parts[indices[order[0]]].iter().cloned().collect();
                for &j in &order[1..] {
                    let mut next = BTreeSet::new();
                    for s in &set {
                        for t in &parts[indices[j]] {
                            next.insert(s.compose(t)?);
                        }
                    }
                    set = next;
                }
                Ok(set)
            };
            let base: Vec<usize> = (0..len).collect();
            let expected = product(&base)?;
            for perm in permutations(len) {
                if product(&perm)? != expected {
                    return Ok(Verdict::Fails(Witness::Note(format!(
                        "length-{len} reordering changes the product set"
                    ))));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{BPoint, NatPermutation};

    fn tn_candidate(n_max: u64) -> DecompositionCandidate {
        DecompositionCandidate {
            space: Space::BSpace,
            base: ActionFamily::Named(NamedFamily::PermT),
            parts: (1..=n_max)
                .map(|n| ActionFamily::Named(NamedFamily::PermTn(n)))
                .collect(),
            budgets: Budgets::default(),
        }
    }

    fn dihedral_candidate(ms: &[u64]) -> DecompositionCandidate {
        DecompositionCandidate {
            space: Space::CircleRational { grid_denominator: 12 },
            base: ActionFamily::Named(NamedFamily::SigmaStar),
            parts: ms
                .iter()
                .map(|&m| ActionFamily::Named(NamedFamily::DihedralT(m)))
                .collect(),
            budgets: Budgets::default(),
        }
    }

    #[test]
    fn truncated_permutation_parts_fail_multi_with_the_least_witness() {
        let v = check_multi(&tn_candidate(3)).unwrap();
        let Verdict::Fails(Witness::NonCommutation {
            point,
            first,
            second,
            left,
            right,
            part_a,
            part_b,
        }) = v
        else {
            panic!("expected non-commutation, got {v}");
        };
        assert_eq!(point, Point::B(BPoint::Recip(1)));
        assert_eq!(first, Element::Perm(NatPermutation::transposition(1, 2)));
        assert_eq!(second, Element::Perm(NatPermutation::transposition(1, 3)));
        assert_eq!(left, Point::B(BPoint::Recip(2)));
        assert_eq!(right, Point::B(BPoint::Recip(3)));
        assert_eq!((part_a, part_b), (1, 2));
    }

    #[test]
    fn truncated_permutation_parts_are_pseudo_and_strong_pseudo() {
        let cand = tn_candidate(4);
        assert!(check_pseudo_multi(&cand).unwrap().holds());
        assert!(check_strong_pseudo(&cand).unwrap().holds());
    }

    #[test]
    fn product_of_truncations_is_the_larger_truncation() {
        // the set identity behind the pseudo verdicts
        for n in 1..=4u64 {
            for m in 1..=4u64 {
                let a = NamedFamily::PermTn(n).enumerate().unwrap();
                let b = NamedFamily::PermTn(m).enumerate().unwrap();
                let prod = element_product(&a, &b).unwrap();
                let expected: BTreeSet<Element> =
                    NamedFamily::PermTn(n.max(m)).enumerate().unwrap().into_iter().collect();
                assert_eq!(prod, expected, "T_{n}·T_{m}");
            }
        }
    }

    #[test]
    fn rotation_parts_commute() {
        let cand = DecompositionCandidate {
            space: Space::CircleRational { grid_denominator: 12 },
            base: ActionFamily::Named(NamedFamily::Sigma),
            parts: [2i64, 3, 4]
                .iter()
                .map(|&m| ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, m))))
                .collect(),
            budgets: Budgets::default(),
        };
        assert!(check_multi(&cand).unwrap().holds());
        assert!(check_pseudo_multi(&cand).unwrap().holds());
        assert!(check_strong_pseudo(&cand).unwrap().holds());
    }

    #[test]
    fn dihedral_parts_are_pseudo_but_not_multi() {
        let cand = dihedral_candidate(&[2, 3]);
        assert!(check_multi(&cand).unwrap().fails());
        assert!(check_pseudo_multi(&cand).unwrap().holds());
        assert!(check_strong_pseudo(&cand).unwrap().holds());
    }

    #[test]
    fn generates_by_coverage_rule() {
        assert!(check_generates(&tn_candidate(3)).unwrap().holds());
        assert!(check_generates(&dihedral_candidate(&[2, 3, 4])).unwrap().holds());
    }

    #[test]
    fn generates_finite_closure_case() {
        let union: Vec<Element> = {
            let mut v = NamedFamily::PermTn(2).enumerate().unwrap();
            v.extend(NamedFamily::PermTn(3).enumerate().unwrap());
            v
        };
        let ClosureOutcome::Complete(base) = closure(&union, 1000).unwrap() else {
            panic!("closure should complete");
        };
        let cand = DecompositionCandidate {
            space: Space::BSpace,
            base: ActionFamily::enumerated(base),
            parts: vec![
                ActionFamily::Named(NamedFamily::PermTn(2)),
                ActionFamily::Named(NamedFamily::PermTn(3)),
            ],
            budgets: Budgets::default(),
        };
        assert!(check_generates(&cand).unwrap().holds());
    }

    #[test]
    fn two_rotations_do_not_generate_all_rational_rotations() {
        let cand = DecompositionCandidate {
            space: Space::CircleRational { grid_denominator: 12 },
            base: ActionFamily::Named(NamedFamily::Sigma),
            parts: vec![
                ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, 2))),
                ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, 3))),
            ],
            budgets: Budgets::default(),
        };
        let v = check_generates(&cand).unwrap();
        let Verdict::Fails(Witness::UnreachableElement { element }) = v else {
            panic!("expected an unreachable element, got {v}");
        };
        // the closure only reaches denominators dividing 6
        assert_eq!(element.to_string(), "phi(1/4)");
    }

    #[test]
    fn effective_commutation_on_rotations() {
        let cand = DecompositionCandidate {
            space: Space::CircleRational { grid_denominator: 12 },
            base: ActionFamily::enumerated(
                NamedFamily::CyclicRotation(Rat::new(1, 6)).enumerate().unwrap(),
            ),
            parts: vec![
                ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, 2))),
                ActionFamily::Named(NamedFamily::CyclicRotation(Rat::new(1, 3))),
            ],
            budgets: Budgets::default(),
        };
        assert!(check_effective_commutation(&cand).unwrap().holds());
    }

    #[test]
    fn effective_commutation_needs_its_hypotheses() {
        // non-commuting parts: hypothesis unmet, not a failure
        let v = check_effective_commutation(&tn_candidate(3)).unwrap();
        assert!(v.undecided());
    }

    #[test]
    fn classify_truncated_permutation_parts_as_distal() {
        let report = classify(&tn_candidate(4), Some(&DynamicalProperty::Distal)).unwrap();
        assert!(report.multi.fails());
        assert!(report.pseudo_multi.holds());
        assert!(report.strong_pseudo.holds());
        assert!(report.generates.holds());
        assert_eq!(report.property_per_part.len(), 4);
        for (_, name, v) in &report.property_per_part {
            assert_eq!(name, "distal");
            assert!(v.holds());
        }
    }

    #[test]
    fn classify_dihedral_parts_as_non_point_transitive() {
        let report = classify(
            &dihedral_candidate(&[2, 3]),
            Some(&DynamicalProperty::NonPointTransitive { epsilon: Rat::new(1, 24) }),
        )
        .unwrap();
        assert!(report.pseudo_multi.holds());
        for (_, _, v) in &report.property_per_part {
            assert!(v.holds());
        }
    }

    #[test]
    fn pairwise_checks_agree_with_brute_force() {
        for cand in [tn_candidate(3), dihedral_candidate(&[2, 3])] {
            assert_eq!(
                check_multi(&cand).unwrap().status(),
                brute_force_multi(&cand, 3).unwrap().status()
            );
            assert_eq!(
                check_pseudo_multi(&cand).unwrap().status(),
                brute_force_pseudo_multi(&cand, 3).unwrap().status()
            );
            assert_eq!(
                check_strong_pseudo(&cand).unwrap().status(),
                brute_force_strong_pseudo(&cand, 3).unwrap().status()
            );
        }
    }

    #[test]
    fn single_part_is_vacuously_multi() {
        let cand = DecompositionCandidate {
            space: Space::BSpace,
            base: ActionFamily::Named(NamedFamily::PermT),
            parts: vec![ActionFamily::Named(NamedFamily::PermTn(3))],
            budgets: Budgets::default(),
        };
        assert!(check_multi(&cand).unwrap().holds());
        assert!(check_pseudo_multi(&cand).unwrap().holds());
    }

    #[test]
    fn duplicate_parts_are_rejected() {
        let cand = DecompositionCandidate {
            space: Space::BSpace,
            base: ActionFamily::Named(NamedFamily::PermT),
            parts: vec![
                ActionFamily::Named(NamedFamily::PermTn(2)),
                ActionFamily::enumerated(NamedFamily::PermTn(2).enumerate().unwrap()),
            ],
            budgets: Budgets::default(),
        };
        assert!(matches!(
            check_multi(&cand),
            Err(ActionError::HypothesisViolation(_))
        ));
    }
}
