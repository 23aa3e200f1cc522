//! Permutations of the positive integers and their right action on the
//! convergent-sequence space `B = {1/n : n >= 1} ∪ {0}`.
//!
//! Two representations coexist: finite-support permutations in a canonical
//! form that stores only moved points, and named total rules (the two-sided
//! shift) carrying an explicit inverse and support descriptor. Composition is
//! in diagram order, matching the right action: `x (p q) = (x p) q`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

/// Points probed when comparing a rule-defined permutation against another
/// permutation; equality of total rules is decided on the union of finite
/// supports plus this prefix of the positive integers.
pub const EQ_PROBE_LIMIT: u64 = 256;

const HASH_PROBE_LIMIT: u64 = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("moves must map positive integers: got {0}")]
    NonPositive(u64),
    #[error("moves are not a bijection of their domain: {0}")]
    NotBijective(String),
    #[error("cycles are not disjoint at {0}")]
    OverlappingCycles(u64),
    #[error("cannot parse cycle notation: {0}")]
    Parse(String),
}

/// A point of the space `B`: either 0 or the reciprocal 1/k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BPoint {
    Zero,
    Recip(u64),
}

impl BPoint {
    pub fn recip(k: u64) -> Self {
        assert!(k >= 1, "reciprocal index must be positive");
        BPoint::Recip(k)
    }

    /// Every nonzero point of `B` is isolated; 0 is the accumulation point.
    pub fn is_isolated(&self) -> bool {
        !matches!(self, BPoint::Zero)
    }
}

impl PartialOrd for BPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Ordered by reciprocal index with 0 first; gives deterministic orbit output.
impl Ord for BPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BPoint::Zero, BPoint::Zero) => Ordering::Equal,
            (BPoint::Zero, _) => Ordering::Less,
            (_, BPoint::Zero) => Ordering::Greater,
            (BPoint::Recip(a), BPoint::Recip(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for BPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BPoint::Zero => write!(f, "0"),
            BPoint::Recip(1) => write!(f, "1"),
            BPoint::Recip(k) => write!(f, "1/{k}"),
        }
    }
}

/// Support of a permutation: the points it moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Support {
    Finite(BTreeSet<u64>),
    Unbounded,
}

impl Support {
    pub fn max_index(&self) -> Option<u64> {
        match self {
            Support::Finite(s) => s.iter().next_back().copied(),
            Support::Unbounded => None,
        }
    }
}

/// Order of a permutation as an abstract group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermOrder {
    Finite(u64),
    Infinite,
    Undecided,
}

type Rule = Arc<dyn Fn(u64) -> u64 + Send + Sync>;

/// A total bijection of the positive integers given by explicit rules.
#[derive(Clone)]
pub struct NamedRule {
    id: String,
    forward: Rule,
    inverse: Rule,
    support: Support,
    order: PermOrder,
}

impl fmt::Debug for NamedRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NamedRule")
            .field("id", &self.id)
            .field("support", &self.support)
            .field("order", &self.order)
            .finish()
    }
}

/// A permutation of the positive integers.
#[derive(Debug, Clone)]
pub enum NatPermutation {
    /// Canonical form: the map stores no fixed points.
    Finitary(BTreeMap<u64, u64>),
    Named(NamedRule),
}

impl NatPermutation {
    pub fn identity() -> Self {
        NatPermutation::Finitary(BTreeMap::new())
    }

    /// Builds a finite-support permutation from an explicit move map,
    /// validating bijectivity and stripping fixed points.
    pub fn from_moves(moves: BTreeMap<u64, u64>) -> Result<Self, PermError> {
        let mut canonical = BTreeMap::new();
        let mut images = BTreeSet::new();
        for (&k, &v) in &moves {
            if k == 0 {
                return Err(PermError::NonPositive(k));
            }
            if v == 0 {
                return Err(PermError::NonPositive(v));
            }
            if !images.insert(v) {
                return Err(PermError::NotBijective(format!("{v} hit twice")));
            }
            if k != v {
                canonical.insert(k, v);
            }
        }
        // domain and image must coincide as sets
        for &v in canonical.values() {
            if !moves.contains_key(&v) {
                return Err(PermError::NotBijective(format!(
                    "{v} is an image but not in the domain"
                )));
            }
        }
        Ok(NatPermutation::Finitary(canonical))
    }

    pub fn transposition(a: u64, b: u64) -> Self {
        assert!(a >= 1 && b >= 1 && a != b);
        let mut m = BTreeMap::new();
        m.insert(a, b);
        m.insert(b, a);
        NatPermutation::Finitary(m)
    }

    pub fn from_cycles(cycles: &[Vec<u64>]) -> Result<Self, PermError> {
        let mut moves = BTreeMap::new();
        for cycle in cycles {
            for (i, &k) in cycle.iter().enumerate() {
                if k == 0 {
                    return Err(PermError::NonPositive(k));
                }
                let next = cycle[(i + 1) % cycle.len()];
                if moves.insert(k, next).is_some() {
                    return Err(PermError::OverlappingCycles(k));
                }
            }
        }
        Self::from_moves(moves)
    }

    /// Parses cycle notation, e.g. `(1 2)(3 4 5)`. `id` and `()` denote the
    /// identity; `shift_sigma` names the two-sided shift rule.
    pub fn parse(input: &str) -> Result<Self, PermError> {
        let s = input.trim();
        if s.is_empty() || s == "id" || s == "()" {
            return Ok(Self::identity());
        }
        if s == "shift_sigma" {
            return Ok(shift_sigma());
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Parse(format!("expected '(' at: {rest}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| PermError::Parse("unclosed cycle".into()))?;
            let body = &open[..close];
            let entries: Result<Vec<u64>, _> = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| PermError::Parse(format!("bad entry {t:?}")))
                })
                .collect();
            let entries = entries?;
            if entries.len() >= 2 {
                cycles.push(entries);
            }
            rest = &open[close + 1..];
        }
        Self::from_cycles(&cycles)
    }

    /// Image of a positive integer.
    pub fn apply(&self, k: u64) -> u64 {
        debug_assert!(k >= 1);
        match self {
            NatPermutation::Finitary(m) => m.get(&k).copied().unwrap_or(k),
            NatPermutation::Named(r) => (r.forward)(k),
        }
    }

    /// The induced homeomorphism of `B`: 0 is fixed, 1/k goes to 1/(k sigma).
    pub fn apply_bpoint(&self, x: BPoint) -> BPoint {
        match x {
            BPoint::Zero => BPoint::Zero,
            BPoint::Recip(k) => BPoint::Recip(self.apply(k)),
        }
    }

    /// Diagram-order composition: `apply(p.compose(q), k) = q.apply(p.apply(k))`.
    pub fn compose(&self, other: &NatPermutation) -> NatPermutation {
        match (self, other) {
            (NatPermutation::Finitary(a), NatPermutation::Finitary(b)) => {
                let mut out = BTreeMap::new();
                let keys: BTreeSet<u64> = a.keys().chain(b.keys()).copied().collect();
                for k in keys {
                    let v = other.apply(self.apply(k));
                    if v != k {
                        out.insert(k, v);
                    }
                }
                NatPermutation::Finitary(out)
            }
            _ => {
                let support = match (self.support(), other.support()) {
                    (Support::Finite(a), Support::Finite(b)) => {
                        Support::Finite(a.union(&b).copied().collect())
                    }
                    _ => Support::Unbounded,
                };
                if let Support::Finite(dom) = &support {
                    // both supports bounded: materialize the canonical form
                    let mut out = BTreeMap::new();
                    for &k in dom {
                        let v = other.apply(self.apply(k));
                        if v != k {
                            out.insert(k, v);
                        }
                    }
                    return NatPermutation::Finitary(out);
                }
                let p = self.clone();
                let q = other.clone();
                let pi = self.clone();
                let qi = other.clone();
                NatPermutation::Named(NamedRule {
                    id: format!("{self}*{other}"),
                    forward: Arc::new(move |k| q.apply(p.apply(k))),
                    inverse: Arc::new(move |k| pi.invert_apply(qi.invert_apply(k))),
                    support,
                    order: PermOrder::Undecided,
                })
            }
        }
    }

    fn invert_apply(&self, k: u64) -> u64 {
        match self {
            NatPermutation::Finitary(m) => m
                .iter()
                .find(|(_, &v)| v == k)
                .map(|(&d, _)| d)
                .unwrap_or(k),
            NatPermutation::Named(r) => (r.inverse)(k),
        }
    }

    pub fn invert(&self) -> NatPermutation {
        match self {
            NatPermutation::Finitary(m) => {
                NatPermutation::Finitary(m.iter().map(|(&k, &v)| (v, k)).collect())
            }
            NatPermutation::Named(r) => NatPermutation::Named(NamedRule {
                id: format!("inv({})", r.id),
                forward: r.inverse.clone(),
                inverse: r.forward.clone(),
                support: r.support.clone(),
                order: r.order,
            }),
        }
    }

    /// Order as a group element: lcm of cycle lengths for finite support,
    /// rule metadata otherwise.
    pub fn order(&self) -> PermOrder {
        match self {
            NatPermutation::Finitary(m) => {
                let mut ord: u64 = 1;
                for cycle in cycles_of(m) {
                    ord = num_integer::lcm(ord, cycle.len() as u64);
                }
                PermOrder::Finite(ord)
            }
            NatPermutation::Named(r) => r.order,
        }
    }

    pub fn support(&self) -> Support {
        match self {
            NatPermutation::Finitary(m) => Support::Finite(m.keys().copied().collect()),
            NatPermutation::Named(r) => r.support.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            NatPermutation::Finitary(m) => m.is_empty(),
            NatPermutation::Named(_) => *self == NatPermutation::identity(),
        }
    }

    /// Cycle decomposition (finite-support only).
    pub fn cycles(&self) -> Option<Vec<Vec<u64>>> {
        match self {
            NatPermutation::Finitary(m) => Some(cycles_of(m)),
            NatPermutation::Named(_) => None,
        }
    }

    pub fn pow(&self, n: u64) -> NatPermutation {
        let mut out = NatPermutation::identity();
        for _ in 0..n {
            out = out.compose(self);
        }
        out
    }

    /// First point at which the two permutations disagree, probing the union
    /// of finite supports plus the prefix `1..=EQ_PROBE_LIMIT`.
    pub fn separating_point(&self, other: &NatPermutation) -> Option<u64> {
        let mut probes: BTreeSet<u64> = (1..=EQ_PROBE_LIMIT).collect();
        for p in [self, other] {
            if let Support::Finite(s) = p.support() {
                probes.extend(s);
            }
        }
        probes.into_iter().find(|&k| self.apply(k) != other.apply(k))
    }
}

fn cycles_of(moves: &BTreeMap<u64, u64>) -> Vec<Vec<u64>> {
    let mut seen = BTreeSet::new();
    let mut cycles = Vec::new();
    for &start in moves.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start);
        let mut cur = moves[&start];
        while cur != start {
            cycle.push(cur);
            seen.insert(cur);
            cur = moves[&cur];
        }
        cycles.push(cycle);
    }
    cycles
}

impl PartialEq for NatPermutation {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (NatPermutation::Finitary(a), NatPermutation::Finitary(b)) => a == b,
            _ => self.separating_point(other).is_none(),
        }
    }
}

impl Eq for NatPermutation {}

impl Hash for NatPermutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // consistent with probe-based equality: hash a fixed image prefix
        for k in 1..=HASH_PROBE_LIMIT {
            self.apply(k).hash(state);
        }
    }
}

impl PartialOrd for NatPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Finitary permutations sort by (support size, support, images on support);
// this puts the identity first and transpositions in index order, which the
// verifiers rely on for deterministic first-witness selection.
impl Ord for NatPermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (NatPermutation::Finitary(a), NatPermutation::Finitary(b)) => {
                let ka = (a.len(), a.keys().collect::<Vec<_>>(), a.values().collect::<Vec<_>>());
                let kb = (b.len(), b.keys().collect::<Vec<_>>(), b.values().collect::<Vec<_>>());
                ka.cmp(&kb)
            }
            (NatPermutation::Finitary(_), NatPermutation::Named(_)) => Ordering::Less,
            (NatPermutation::Named(_), NatPermutation::Finitary(_)) => Ordering::Greater,
            (NatPermutation::Named(a), NatPermutation::Named(b)) => a.id.cmp(&b.id),
        }
    }
}

impl fmt::Display for NatPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatPermutation::Finitary(m) if m.is_empty() => write!(f, "id"),
            NatPermutation::Finitary(m) => {
                for cycle in cycles_of(m) {
                    write!(f, "(")?;
                    for (i, k) in cycle.iter().enumerate() {
                        if i > 0 {
                            write!(f, " ")?;
                        }
                        write!(f, "{k}")?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
            NatPermutation::Named(r) => write!(f, "{}", r.id),
        }
    }
}

/// The two-sided shift along `... -> 6 -> 4 -> 2 -> 1 -> 3 -> 5 -> 7 -> ...`:
/// a single infinite orbit covering every positive integer.
pub fn shift_sigma() -> NatPermutation {
    NatPermutation::Named(NamedRule {
        id: "shift_sigma".into(),
        forward: Arc::new(|k| {
            if k % 2 == 1 {
                k + 2
            } else if k == 2 {
                1
            } else {
                k - 2
            }
        }),
        inverse: Arc::new(|k| {
            if k == 1 {
                2
            } else if k % 2 == 1 {
                k - 2
            } else {
                k + 2
            }
        }),
        support: Support::Unbounded,
        order: PermOrder::Infinite,
    })
}

/// All permutations supported in `{1, ..., n}`, in canonical order with the
/// identity first. Refuses `n > 8` (enumeration would exceed any sane budget).
pub fn enumerate_sym(n: u64) -> Option<Vec<NatPermutation>> {
    if n > 8 {
        return None;
    }
    let mut out = Vec::new();
    let mut image: Vec<u64> = (1..=n).collect();
    permute_rec(&mut image, 0, &mut out);
    out.sort();
    Some(out)
}

fn permute_rec(image: &mut Vec<u64>, i: usize, out: &mut Vec<NatPermutation>) {
    if i == image.len() {
        let moves: BTreeMap<u64, u64> = image
            .iter()
            .enumerate()
            .map(|(idx, &v)| (idx as u64 + 1, v))
            .collect();
        out.push(NatPermutation::from_moves(moves).expect("image vector is a bijection"));
        return;
    }
    for j in i..image.len() {
        image.swap(i, j);
        permute_rec(image, i + 1, out);
        image.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(a: u64, b: u64) -> NatPermutation {
        NatPermutation::transposition(a, b)
    }

    #[test]
    fn apply_transposition() {
        assert_eq!(t(1, 2).apply(1), 2);
        assert_eq!(t(1, 2).apply(3), 3);
    }

    #[test]
    fn shift_arrow_diagram() {
        let s = shift_sigma();
        assert_eq!(s.apply(1), 3);
        assert_eq!(s.apply(6), 4);
        assert_eq!(s.apply(2), 1);
        assert_eq!(s.apply(5), 7);
        assert_eq!(s.invert().apply(3), 1);
    }

    #[test]
    fn bpoint_action() {
        assert_eq!(t(1, 2).apply_bpoint(BPoint::recip(1)), BPoint::recip(2));
        assert_eq!(t(1, 2).apply_bpoint(BPoint::Zero), BPoint::Zero);
        assert_eq!(shift_sigma().apply_bpoint(BPoint::Zero), BPoint::Zero);
        assert_eq!(
            shift_sigma().apply_bpoint(BPoint::recip(5)),
            BPoint::recip(7)
        );
    }

    #[test]
    fn compose_is_diagram_order() {
        // 1 under (1 2) then (1 3) is 2; the other order gives 3
        assert_eq!(t(1, 2).compose(&t(1, 3)).apply(1), 2);
        assert_eq!(t(1, 3).compose(&t(1, 2)).apply(1), 3);
    }

    #[test]
    fn inverse_laws() {
        let p = NatPermutation::from_cycles(&[vec![1, 2, 3]]).unwrap();
        assert!(p.compose(&p.invert()).is_identity());
        assert_eq!(t(1, 2).invert(), t(1, 2));
        assert_eq!(
            p.invert(),
            NatPermutation::from_cycles(&[vec![1, 3, 2]]).unwrap()
        );
        let s = shift_sigma();
        assert!(s.compose(&s.invert()).is_identity());
        assert!(s.invert().compose(&s).is_identity());
    }

    #[test]
    fn orders() {
        assert_eq!(t(1, 2).order(), PermOrder::Finite(2));
        assert_eq!(NatPermutation::identity().order(), PermOrder::Finite(1));
        assert_eq!(shift_sigma().order(), PermOrder::Infinite);
        // no power of the shift fixes 1: iterating k -> k+2 on the odds
        let mut k = 1u64;
        let s = shift_sigma();
        for _ in 0..50 {
            k = s.apply(k);
            assert_ne!(k, 1);
        }
    }

    #[test]
    fn supports() {
        assert_eq!(
            t(1, 2).support(),
            Support::Finite([1, 2].into_iter().collect())
        );
        assert_eq!(
            NatPermutation::identity().support(),
            Support::Finite(BTreeSet::new())
        );
        assert_eq!(shift_sigma().support(), Support::Unbounded);
    }

    #[test]
    fn order_matches_brute_force() {
        for p in enumerate_sym(4).unwrap() {
            let PermOrder::Finite(ord) = p.order() else {
                panic!("finitary order must be finite");
            };
            let mut q = NatPermutation::identity();
            let mut least = None;
            for m in 1..=ord {
                q = q.compose(&p);
                if q.is_identity() {
                    least = Some(m);
                    break;
                }
            }
            assert_eq!(least, Some(ord), "order mismatch for {p}");
        }
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["id", "(1 2)", "(1 2)(3 4 5)", "(2 5)(3 7)"] {
            let p = NatPermutation::parse(s).unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert_eq!(NatPermutation::parse("()").unwrap(), NatPermutation::identity());
        assert_eq!(NatPermutation::parse("shift_sigma").unwrap(), shift_sigma());
        assert!(NatPermutation::parse("(1 2").is_err());
        assert!(NatPermutation::parse("(1 1 2)").is_err());
    }

    #[test]
    fn named_vs_finitary_equality() {
        // shift moves every point, so it differs from any finite-support perm
        assert_ne!(shift_sigma(), NatPermutation::identity());
        assert_ne!(shift_sigma(), t(1, 3));
        // shift composed with its inverse materializes nothing but still
        // probes equal to the identity
        let e = shift_sigma().compose(&shift_sigma().invert());
        assert_eq!(e, NatPermutation::identity());
    }

    #[test]
    fn enumerate_sym_sizes() {
        assert_eq!(enumerate_sym(1).unwrap().len(), 1);
        assert_eq!(enumerate_sym(3).unwrap().len(), 6);
        assert_eq!(enumerate_sym(4).unwrap().len(), 24);
        assert!(enumerate_sym(9).is_none());
        let s3 = enumerate_sym(3).unwrap();
        assert!(s3[0].is_identity());
        assert!(s3.contains(&t(1, 2)));
    }

    fn arb_finitary() -> impl Strategy<Value = NatPermutation> {
        proptest::collection::vec(1u64..=10, 0..6).prop_map(|pts| {
            let distinct: Vec<u64> = pts
                .into_iter()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            if distinct.len() < 2 {
                NatPermutation::identity()
            } else {
                NatPermutation::from_cycles(&[distinct]).unwrap()
            }
        })
    }

    proptest! {
        #[test]
        fn right_action_law(p in arb_finitary(), q in arb_finitary(), k in 1u64..=30) {
            prop_assert_eq!(p.compose(&q).apply(k), q.apply(p.apply(k)));
        }

        #[test]
        fn right_action_law_with_shift(p in arb_finitary(), k in 1u64..=30) {
            let s = shift_sigma();
            prop_assert_eq!(p.compose(&s).apply(k), s.apply(p.apply(k)));
            prop_assert_eq!(s.compose(&p).apply(k), p.apply(s.apply(k)));
        }

        #[test]
        fn compose_associative(p in arb_finitary(), q in arb_finitary(), r in arb_finitary()) {
            prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
        }

        #[test]
        fn zero_always_fixed(p in arb_finitary()) {
            prop_assert_eq!(p.apply_bpoint(BPoint::Zero), BPoint::Zero);
        }

        #[test]
        fn print_parse_identity(p in arb_finitary()) {
            let back = NatPermutation::parse(&p.to_string()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
