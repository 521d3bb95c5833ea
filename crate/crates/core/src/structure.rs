//! Substructures found by explicit enumeration: subgroupoids, ideals,
//! normal subgroupoids, Smarandache witnesses, conjugacy and homomorphisms.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::identities::{first_violation, IdentityId};

/// A set of element indices of one groupoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetHandle {
    order: usize,
    words: Vec<u64>,
    len: usize,
}

impl SubsetHandle {
    pub fn empty(order: usize) -> Self {
        SubsetHandle {
            order,
            words: vec![0; order.div_ceil(64).max(1)],
            len: 0,
        }
    }

    pub fn full(order: usize) -> Self {
        Self::from_indices(order, 0..order).expect("in range")
    }

    pub fn from_indices(order: usize, idx: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(order);
        for i in idx {
            if i >= order {
                return Err(Error::shape(format!("index {i} outside a groupoid of order {order}")));
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Subset of a groupoid of order at most 64 from a bitmask.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        debug_assert!(order <= 64);
        SubsetHandle {
            order,
            words: vec![mask],
            len: mask.count_ones() as usize,
        }
    }

    /// Bitmask form, for orders up to 64.
    pub fn mask(&self) -> Option<u64> {
        (self.order <= 64).then(|| self.words[0])
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & b == 0;
        if fresh {
            self.words[w] |= b;
            self.len += 1;
        }
        fresh
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_proper(&self) -> bool {
        self.len < self.order
    }

    pub fn is_disjoint(&self, other: &SubsetHandle) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn labels(&self, g: &Groupoid) -> Vec<String> {
        self.iter().map(|i| g.label(i)).collect()
    }
}

/// Increasing cardinality, then the bitmask read as a number.
impl Ord for SubsetHandle {
    fn cmp(&self, o: &Self) -> Ordering {
        self.len
            .cmp(&o.len)
            .then_with(|| self.words.iter().rev().cmp(o.words.iter().rev()))
    }
}

impl PartialOrd for SubsetHandle {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for SubsetHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for SubsetHandle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// `x * s` for every `s`, or `s * x` when `left` is false.
fn translate(g: &Groupoid, s: &SubsetHandle, x: usize, left: bool) -> SubsetHandle {
    let mut out = SubsetHandle::empty(s.order);
    for v in s.iter() {
        out.insert(if left { g.mul(x, v) } else { g.mul(v, x) });
    }
    out
}

pub fn is_closed(g: &Groupoid, s: &SubsetHandle) -> bool {
    s.iter().all(|a| s.iter().all(|b| s.contains(g.mul(a, b))))
}

/// `x a` stays in `s` for every `x` in G and `a` in `s`.
pub fn is_left_ideal(g: &Groupoid, s: &SubsetHandle) -> bool {
    !s.is_empty() && (0..s.order).all(|x| s.iter().all(|a| s.contains(g.mul(x, a))))
}

/// `a x` stays in `s` for every `x` in G and `a` in `s`.
pub fn is_right_ideal(g: &Groupoid, s: &SubsetHandle) -> bool {
    !s.is_empty() && (0..s.order).all(|x| s.iter().all(|a| s.contains(g.mul(a, x))))
}

/// `aV = Va`, `(Vx)y = V(xy)` and `y(xV) = (yx)V` for all `a, x, y` in `V`,
/// on top of closure.
pub fn is_normal_subgroupoid(g: &Groupoid, s: &SubsetHandle) -> bool {
    if !is_closed(g, s) {
        return false;
    }
    for a in s.iter() {
        if translate(g, s, a, true) != translate(g, s, a, false) {
            return false;
        }
    }
    for x in s.iter() {
        let vx = translate(g, s, x, false);
        let xv = translate(g, s, x, true);
        for y in s.iter() {
            if translate(g, &vx, y, false) != translate(g, s, g.mul(x, y), false) {
                return false;
            }
            if translate(g, &xv, y, true) != translate(g, s, g.mul(y, x), true) {
                return false;
            }
        }
    }
    true
}

pub fn is_semigroup(g: &Groupoid, s: &SubsetHandle) -> bool {
    is_closed(g, s) && identity_holds_on(g, IdentityId::Associative, s)
}

pub fn identity_holds_on(g: &Groupoid, id: IdentityId, s: &SubsetHandle) -> bool {
    first_violation(id, &|a, b| g.mul(a, b), &s.indices()).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SubsetClassification {
    pub closed: bool,
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub ideal: bool,
    pub normal_subgroupoid: bool,
    pub semigroup: bool,
    pub pure_neutrosophic: bool,
    pub pseudo: bool,
}

pub fn classify_subset(g: &Groupoid, s: &SubsetHandle) -> SubsetClassification {
    let closed = is_closed(g, s);
    let left_ideal = is_left_ideal(g, s);
    let right_ideal = is_right_ideal(g, s);
    let neutro = g.is_neutrosophic();
    SubsetClassification {
        closed,
        left_ideal,
        right_ideal,
        ideal: left_ideal && right_ideal,
        normal_subgroupoid: closed && is_normal_subgroupoid(g, s),
        semigroup: closed && identity_holds_on(g, IdentityId::Associative, s),
        pure_neutrosophic: neutro
            && s.iter().any(|i| g.is_pure_indeterminate(i))
            && s.iter().all(|i| Some(i) == g.zero_index() || g.is_pure_indeterminate(i)),
        pseudo: neutro && closed && !s.iter().any(|i| g.has_indeterminate(i)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    PowerSet,
    GeneratedClosure,
}

/// Smallest closed set containing `seeds`.
pub fn closure(g: &Groupoid, seeds: &[usize]) -> SubsetHandle {
    let n = g.order().expect("finite groupoid");
    let mut s = SubsetHandle::empty(n);
    let mut members = Vec::new();
    let mut queue: Vec<usize> = seeds.to_vec();
    while let Some(e) = queue.pop() {
        if !s.insert(e) {
            continue;
        }
        members.push(e);
        for &m in &members {
            for p in [g.mul(e, m), g.mul(m, e)] {
                if !s.contains(p) {
                    queue.push(p);
                }
            }
        }
    }
    s
}

fn finite_order(g: &Groupoid) -> Result<usize> {
    g.order().ok_or_else(|| Error::TooLarge {
        what: "subset search".into(),
        needed: "an unbounded element space".into(),
        limit: 0,
    })
}

fn too_large(what: &str, order: usize, limit: usize) -> Error {
    Error::TooLarge {
        what: what.into(),
        needed: format!("order {order}"),
        limit: limit as u64,
    }
}

/// Calls `f` on every nonempty proper subset in canonical order until it
/// returns `Some`.
fn sweep_masks<T>(n: usize, mut f: impl FnMut(u64) -> Option<T>) -> Option<T> {
    for k in 1..n {
        let mut m: u64 = (1u64 << k) - 1;
        while m < (1u64 << n) {
            if let Some(r) = f(m) {
                return Some(r);
            }
            // next mask with the same popcount
            let c = m & m.wrapping_neg();
            let r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    None
}

/// Closed-set test on a bitmask via a flat table.
struct MaskTable {
    n: usize,
    t: Vec<u8>,
}

impl MaskTable {
    fn new(g: &Groupoid, n: usize) -> Self {
        let mut t = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                t.push(g.mul(i, j) as u8);
            }
        }
        MaskTable { n, t }
    }

    fn closed(&self, m: u64) -> bool {
        let mut a = m;
        while a != 0 {
            let i = a.trailing_zeros() as usize;
            a &= a - 1;
            let mut b = m;
            while b != 0 {
                let j = b.trailing_zeros() as usize;
                b &= b - 1;
                if m >> self.t[i * self.n + j] & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// All proper subgroupoids, or the closures of all 1- and 2-element subsets.
pub fn enumerate_subgroupoids(g: &Groupoid, strategy: Strategy, budget: &Budget) -> Result<Vec<SubsetHandle>> {
    let n = finite_order(g)?;
    match strategy {
        Strategy::PowerSet => {
            if n > budget.power_set_max.min(63) {
                return Err(too_large("power-set subgroupoid search", n, budget.power_set_max));
            }
            let table = MaskTable::new(g, n);
            let mut out = Vec::new();
            sweep_masks::<()>(n, |m| {
                if table.closed(m) {
                    out.push(SubsetHandle::from_mask(n, m));
                }
                None
            });
            Ok(out)
        }
        Strategy::GeneratedClosure => {
            if n > budget.closure_max {
                return Err(too_large("generated-closure subgroupoid search", n, budget.closure_max));
            }
            let mut seen = std::collections::BTreeSet::new();
            for a in 0..n {
                for b in a..n {
                    let c = closure(g, &[a, b]);
                    if c.is_proper() {
                        seen.insert(c);
                    }
                }
            }
            Ok(seen.into_iter().collect())
        }
    }
}

/// Power set when small enough, generated closures otherwise. The flag
/// reports whether the list is complete.
pub fn subgroupoids_auto(g: &Groupoid, budget: &Budget) -> Result<(Vec<SubsetHandle>, bool)> {
    let n = finite_order(g)?;
    if n <= budget.power_set_max.min(63) {
        Ok((enumerate_subgroupoids(g, Strategy::PowerSet, budget)?, true))
    } else {
        Ok((enumerate_subgroupoids(g, Strategy::GeneratedClosure, budget)?, false))
    }
}

/// Nonempty proper subsets, in canonical order, satisfying `pred`
/// (power-set search).
pub fn subsets_where(g: &Groupoid, budget: &Budget, pred: impl Fn(&SubsetHandle) -> bool) -> Result<Vec<SubsetHandle>> {
    let n = finite_order(g)?;
    if n > budget.power_set_max.min(63) {
        return Err(too_large("power-set search", n, budget.power_set_max));
    }
    let mut out = Vec::new();
    sweep_masks::<()>(n, |m| {
        let s = SubsetHandle::from_mask(n, m);
        if pred(&s) {
            out.push(s);
        }
        None
    });
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityVerdict {
    pub simple: bool,
    /// First nontrivial normal subgroupoid in canonical order.
    pub witness: Option<SubsetHandle>,
    /// False when only generated closures were searched.
    pub complete: bool,
}

/// Simple when no proper normal subgroupoid of size at least 2 exists.
pub fn is_simple(g: &Groupoid) -> Result<SimplicityVerdict> {
    is_simple_with(g, &Budget::default())
}

pub fn is_simple_with(g: &Groupoid, budget: &Budget) -> Result<SimplicityVerdict> {
    let (subs, complete) = subgroupoids_auto(g, budget)?;
    let witness = subs.into_iter().find(|s| s.len() >= 2 && is_normal_subgroupoid(g, s));
    Ok(SimplicityVerdict {
        simple: witness.is_none(),
        witness,
        complete,
    })
}

/// `xG = Gx`, `(Gx)y = G(xy)` and `y(xG) = (yx)G` for all `x, y`.
pub fn is_normal_groupoid(g: &Groupoid) -> Result<bool> {
    is_normal_groupoid_with(g, &Budget::default())
}

pub fn is_normal_groupoid_with(g: &Groupoid, budget: &Budget) -> Result<bool> {
    let n = finite_order(g)?;
    let cost = (n as u64).saturating_pow(3);
    if cost > budget.evaluations {
        return Err(Error::TooLarge {
            what: "normal-groupoid test".into(),
            needed: format!("{cost} evaluations"),
            limit: budget.evaluations,
        });
    }
    let all = SubsetHandle::full(n);
    Ok(is_normal_subgroupoid(g, &all))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmarandacheStatus {
    /// The identity holds on all of G, and G has a semigroup witness.
    StrongHolds(SubsetHandle),
    HoldsOnSemigroupWitness(SubsetHandle),
    SGroupoidOnly(SubsetHandle),
    NotSmarandache,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmarandacheVerdict {
    pub identity: Option<IdentityId>,
    pub status: SmarandacheStatus,
    pub complete: bool,
}

impl SmarandacheVerdict {
    pub fn witness(&self) -> Option<&SubsetHandle> {
        match &self.status {
            SmarandacheStatus::StrongHolds(s)
            | SmarandacheStatus::HoldsOnSemigroupWitness(s)
            | SmarandacheStatus::SGroupoidOnly(s) => Some(s),
            SmarandacheStatus::NotSmarandache => None,
        }
    }

    pub fn status_name(&self) -> &'static str {
        match self.status {
            SmarandacheStatus::StrongHolds(_) => "strong-holds",
            SmarandacheStatus::HoldsOnSemigroupWitness(_) => "holds-on-semigroup-witness",
            SmarandacheStatus::SGroupoidOnly(_) => "s-groupoid-only",
            SmarandacheStatus::NotSmarandache => "not-smarandache",
        }
    }

    pub fn to_json(&self, g: &Groupoid) -> serde_json::Value {
        serde_json::json!({
            "identity": self.identity,
            "status": self.status_name(),
            "witness": self.witness().map(|w| w.labels(g)),
            "complete": self.complete,
        })
    }
}

/// Candidate semigroup witnesses: proper, closed, associative. The zero
/// singleton of a star groupoid is excluded since every such groupoid has it.
fn semigroup_witnesses(g: &Groupoid, budget: &Budget) -> Result<(Vec<SubsetHandle>, bool)> {
    let (subs, complete) = subgroupoids_auto(g, budget)?;
    let zero = g.zero_index();
    let out = subs
        .into_iter()
        .filter(|s| !(s.len() == 1 && zero.is_some_and(|z| s.contains(z))))
        .filter(|s| identity_holds_on(g, IdentityId::Associative, s))
        .collect();
    Ok((out, complete))
}

/// S-groupoid detection, or the strong / witness-only form of an identity.
pub fn smarandache_identity(g: &Groupoid, id: Option<IdentityId>) -> Result<SmarandacheVerdict> {
    smarandache_identity_with(g, id, &Budget::default())
}

pub fn smarandache_identity_with(g: &Groupoid, id: Option<IdentityId>, budget: &Budget) -> Result<SmarandacheVerdict> {
    let (witnesses, complete) = semigroup_witnesses(g, budget)?;
    let verdict = |status| SmarandacheVerdict {
        identity: id,
        status,
        complete,
    };
    let Some(first) = witnesses.first().cloned() else {
        return Ok(verdict(SmarandacheStatus::NotSmarandache));
    };
    let Some(id) = id else {
        return Ok(verdict(SmarandacheStatus::SGroupoidOnly(first)));
    };
    let n = g.order().expect("finite");
    if identity_holds_on(g, id, &SubsetHandle::full(n)) {
        return Ok(verdict(SmarandacheStatus::StrongHolds(first)));
    }
    // singletons satisfy every law vacuously, so they do not witness one
    let status = match witnesses.into_iter().find(|s| s.len() >= 2 && identity_holds_on(g, id, s)) {
        Some(w) => SmarandacheStatus::HoldsOnSemigroupWitness(w),
        None => SmarandacheStatus::SGroupoidOnly(first),
    };
    Ok(verdict(status))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `H = xK`
    Left,
    /// `H = Kx`
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Conjugacy {
    Conjugate { x: usize, side: Side },
    NotConjugate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyReport {
    pub result: Conjugacy,
    /// Whether the pair meets the disjointness precondition.
    pub disjoint: bool,
    pub both_subgroupoids: bool,
}

/// Searches `x` with `xK = H` or `Kx = H`. Precondition failures are recorded.
pub fn are_conjugate(g: &Groupoid, h: &SubsetHandle, k: &SubsetHandle) -> ConjugacyReport {
    let n = h.order();
    let mut result = Conjugacy::NotConjugate;
    'search: for x in 0..n {
        for side in [Side::Left, Side::Right] {
            if &translate(g, k, x, side == Side::Left) == h {
                result = Conjugacy::Conjugate { x, side };
                break 'search;
            }
        }
    }
    ConjugacyReport {
        result,
        disjoint: h.is_disjoint(k),
        both_subgroupoids: is_closed(g, h) && is_closed(g, k) && h.is_proper() && k.is_proper(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum HomomorphismVerdict {
    Valid,
    /// `map(a * b) != map(a) o map(b)`
    StarViolation { a: usize, b: usize },
    /// A pure multiple of `I` is sent outside the pure multiples of `I`.
    IndeterminateViolation { element: usize },
}

pub fn check_homomorphism(g: &Groupoid, h: &Groupoid, map: &[usize]) -> Result<HomomorphismVerdict> {
    let n = finite_order(g)?;
    let m = finite_order(h)?;
    if map.len() != n {
        return Err(Error::PartialMap(format!("map has {} images for {n} elements", map.len())));
    }
    if let Some(bad) = map.iter().position(|&v| v >= m) {
        return Err(Error::PartialMap(format!("image of element {bad} is outside the target")));
    }
    for a in 0..n {
        for b in 0..n {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return Ok(HomomorphismVerdict::StarViolation { a, b });
            }
        }
    }
    if g.is_neutrosophic() && h.is_neutrosophic() {
        if let Some(e) = (0..n).find(|&i| g.is_pure_indeterminate(i) && !h.is_pure_indeterminate(map[i])) {
            return Ok(HomomorphismVerdict::IndeterminateViolation { element: e });
        }
    }
    Ok(HomomorphismVerdict::Valid)
}

/// Maps every element of `g` to the element of `h` with the same label.
pub fn map_by_labels(g: &Groupoid, h: &Groupoid) -> Result<Vec<usize>> {
    let labels: std::collections::HashMap<String, usize> = h.labels().into_iter().enumerate().map(|(i, l)| (l, i)).collect();
    g.labels()
        .into_iter()
        .map(|l| labels.get(&l).copied().ok_or_else(|| Error::PartialMap(format!("no image for `{l}`"))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealLists {
    pub left: Vec<Vec<String>>,
    pub right: Vec<Vec<String>>,
    pub two_sided: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureReport {
    pub groupoid: String,
    pub order: usize,
    pub complete: bool,
    pub subgroupoids: Vec<Vec<String>>,
    pub ideals: IdealLists,
    pub normal: Vec<Vec<String>>,
    pub simple: bool,
    pub normal_groupoid: Option<bool>,
    pub smarandache: serde_json::Value,
}

/// Full substructure summary for orders within `max_order` (power-set search);
/// larger groupoids fall back to generated closures.
pub fn structure_report(g: &Groupoid, max_order: usize, budget: &Budget) -> Result<StructureReport> {
    let n = finite_order(g)?;
    let local = Budget {
        power_set_max: max_order.min(budget.power_set_max.max(max_order)),
        ..*budget
    };
    let (subs, complete) = subgroupoids_auto(g, &local)?;
    let labels = |s: &SubsetHandle| s.labels(g);
    let pick = |f: &dyn Fn(&SubsetHandle) -> bool| subs.iter().filter(|s| f(s)).map(labels).collect::<Vec<_>>();
    let left = pick(&|s| is_left_ideal(g, s));
    let right = pick(&|s| is_right_ideal(g, s));
    let two_sided = pick(&|s| is_left_ideal(g, s) && is_right_ideal(g, s));
    let normal_sets: Vec<&SubsetHandle> = subs.iter().filter(|s| s.len() >= 2 && is_normal_subgroupoid(g, s)).collect();
    let smarandache = smarandache_identity_with(g, None, &local)?.to_json(g);
    Ok(StructureReport {
        groupoid: g.to_string(),
        order: n,
        complete,
        subgroupoids: subs.iter().map(labels).collect(),
        ideals: IdealLists { left, right, two_sided },
        normal: normal_sets.iter().map(|s| labels(s)).collect(),
        simple: normal_sets.is_empty(),
        normal_groupoid: is_normal_groupoid_with(g, budget).ok(),
        smarandache,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::GroupoidSpec;

    fn z(n: u64, t: u64, u: u64) -> Groupoid {
        Groupoid::build(GroupoidSpec::modular(n, t, u).unwrap()).unwrap()
    }

    fn set(n: usize, idx: &[usize]) -> SubsetHandle {
        SubsetHandle::from_indices(n, idx.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_order() {
        let a = set(8, &[0, 4]);
        let b = set(8, &[1, 2]);
        let c = set(8, &[0, 1, 2]);
        assert!(b < a && a < c);
        let big = set(130, &[129]);
        assert!(set(130, &[0, 1]) > big);
        assert!(set(130, &[128]) < big);
    }

    #[test]
    fn closure_matches_power_set() {
        let g = z(12, 1, 3);
        let all = enumerate_subgroupoids(&g, Strategy::PowerSet, &Budget::default()).unwrap();
        for s in enumerate_subgroupoids(&g, Strategy::GeneratedClosure, &Budget::default()).unwrap() {
            assert!(all.contains(&s), "{s}");
        }
        assert!(all.iter().all(|s| is_closed(&g, s) && s.is_proper()));
    }

    #[test]
    fn prime_five_has_no_nontrivial_subgroupoid() {
        let g = z(5, 3, 4);
        let subs = enumerate_subgroupoids(&g, Strategy::PowerSet, &Budget::default()).unwrap();
        assert!(subs.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn semigroup_classification() {
        let g = z(10, 1, 5);
        assert!(classify_subset(&g, &set(10, &[0, 5])).semigroup);
        let c = classify_subset(&g, &SubsetHandle::full(10));
        assert!(c.closed && c.ideal);
    }

    #[test]
    fn simplicity() {
        for (n, t, u) in [(5, 2, 3), (7, 2, 5), (7, 3, 4)] {
            assert!(is_simple(&z(n, t, u)).unwrap().simple);
        }
        let v = is_simple(&z(8, 2, 6)).unwrap();
        assert!(!v.simple && v.complete);
        assert_eq!(v.witness.unwrap().indices(), vec![0, 4]);
        assert!(is_normal_groupoid(&Groupoid::from_table(vec!["e".into()], vec![vec![0]]).unwrap()).unwrap());
    }

    #[test]
    fn smarandache() {
        let v = smarandache_identity(&z(10, 5, 6), Some(IdentityId::Moufang)).unwrap();
        assert!(matches!(v.status, SmarandacheStatus::StrongHolds(_)));
        let v = smarandache_identity(&z(4, 2, 3), Some(IdentityId::Bol)).unwrap();
        assert_eq!(v.status, SmarandacheStatus::HoldsOnSemigroupWitness(set(4, &[0, 2])));
        let v = smarandache_identity(&z(7, 3, 5), None).unwrap();
        assert_eq!(v.status, SmarandacheStatus::SGroupoidOnly(set(7, &[1])));
    }

    #[test]
    fn conjugacy_and_homomorphism() {
        let g = z(6, 2, 2);
        let r = are_conjugate(&g, &set(6, &[0]), &set(6, &[0]));
        assert!(!r.disjoint);
        let id: Vec<usize> = (0..6).collect();
        assert_eq!(check_homomorphism(&g, &g, &id).unwrap(), HomomorphismVerdict::Valid);
        assert!(matches!(check_homomorphism(&g, &g, &id[..5]), Err(Error::PartialMap(_))));
        let zero = vec![0; 6];
        assert_eq!(check_homomorphism(&g, &g, &zero).unwrap(), HomomorphismVerdict::Valid);
    }
}
