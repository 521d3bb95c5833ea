//! The eight groupoid laws, checked exhaustively, by sampling, by lifting
//! from the scalar groupoid, or by closed-form arithmetic on `(n, t, u)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::carrier::{BaseCarrier, Residue, Value};
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::shape::{Element, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    Associative,
    Commutative,
    Idempotent,
    LeftAlternative,
    RightAlternative,
    Moufang,
    Bol,
    PIdentity,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::Associative,
        IdentityId::Commutative,
        IdentityId::Idempotent,
        IdentityId::LeftAlternative,
        IdentityId::RightAlternative,
        IdentityId::Moufang,
        IdentityId::Bol,
        IdentityId::PIdentity,
    ];

    /// Number of free variables in the template.
    pub fn arity(self) -> usize {
        match self {
            IdentityId::Idempotent => 1,
            IdentityId::Commutative | IdentityId::LeftAlternative | IdentityId::RightAlternative | IdentityId::PIdentity => 2,
            IdentityId::Associative | IdentityId::Moufang | IdentityId::Bol => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Associative => "associative",
            IdentityId::Commutative => "commutative",
            IdentityId::Idempotent => "idempotent",
            IdentityId::LeftAlternative => "left-alternative",
            IdentityId::RightAlternative => "right-alternative",
            IdentityId::Moufang => "moufang",
            IdentityId::Bol => "bol",
            IdentityId::PIdentity => "p-identity",
        }
    }

    pub fn equation(self) -> &'static str {
        match self {
            IdentityId::Associative => "(xy)z = x(yz)",
            IdentityId::Commutative => "xy = yx",
            IdentityId::Idempotent => "xx = x",
            IdentityId::LeftAlternative => "(xx)y = x(xy)",
            IdentityId::RightAlternative => "(xy)y = x(yy)",
            IdentityId::Moufang => "(xy)(zx) = (x(yz))x",
            IdentityId::Bol => "((xy)z)y = x((yz)y)",
            IdentityId::PIdentity => "(xy)x = x(yx)",
        }
    }

    /// Both sides of the template at `v = (x, y, z, ..)`.
    pub fn sides<T: Clone, M: Fn(&T, &T) -> T>(self, m: M, v: &[T]) -> (T, T) {
        let x = &v[0];
        match self {
            IdentityId::Idempotent => (m(x, x), x.clone()),
            IdentityId::Commutative => (m(x, &v[1]), m(&v[1], x)),
            IdentityId::LeftAlternative => {
                let y = &v[1];
                (m(&m(x, x), y), m(x, &m(x, y)))
            }
            IdentityId::RightAlternative => {
                let y = &v[1];
                (m(&m(x, y), y), m(x, &m(y, y)))
            }
            IdentityId::PIdentity => {
                let y = &v[1];
                (m(&m(x, y), x), m(x, &m(y, x)))
            }
            IdentityId::Associative => {
                let (y, z) = (&v[1], &v[2]);
                (m(&m(x, y), z), m(x, &m(y, z)))
            }
            IdentityId::Moufang => {
                let (y, z) = (&v[1], &v[2]);
                (m(&m(x, y), &m(z, x)), m(&m(x, &m(y, z)), x))
            }
            IdentityId::Bol => {
                let (y, z) = (&v[1], &v[2]);
                (m(&m(&m(x, y), z), y), m(x, &m(&m(y, z), y)))
            }
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .or(match key.as_str() {
                "p" | "p-groupoid" => Some(IdentityId::PIdentity),
                "maufang" => Some(IdentityId::Moufang),
                _ => None,
            })
            .ok_or_else(|| Error::parse(format!("unknown identity `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { trials: u64, seed: u64 },
    Auto,
}

impl FromStr for CheckMode {
    type Err = Error;

    /// `exhaustive`, `auto`, or `sampled:N:SEED`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "exhaustive" => Ok(CheckMode::Exhaustive),
            "auto" => Ok(CheckMode::Auto),
            other => {
                let bad = || Error::parse(format!("bad mode `{other}`"));
                let rest = other.strip_prefix("sampled:").ok_or_else(bad)?;
                let (n, seed) = rest.split_once(':').ok_or_else(bad)?;
                Ok(CheckMode::Sampled {
                    trials: n.parse().map_err(|_| bad())?,
                    seed: seed.parse().map_err(|_| bad())?,
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exhaustive,
    Lifted,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    SampledNoCounterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityVerdict {
    pub identity: IdentityId,
    pub method: Method,
    pub status: Status,
    /// Element labels of the violating tuple `(x, y, z)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// Canonical indices of the witness, when the groupoid is enumerable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_indices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl IdentityVerdict {
    /// True for `Holds`; sampled verdicts never count as proofs.
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails(&self) -> bool {
        self.status == Status::Fails
    }

    fn with_witness(identity: IdentityId, method: Method, g: &Groupoid, w: Option<Vec<usize>>) -> Self {
        IdentityVerdict {
            identity,
            method,
            status: if w.is_some() { Status::Fails } else { Status::Holds },
            witness: w.as_ref().map(|w| w.iter().map(|&i| g.label(i)).collect()),
            witness_indices: w,
            trials: None,
            seed: None,
        }
    }
}

/// First violating tuple over `dom^arity`, with the first variable varying
/// fastest. Deterministic whatever the worker count.
pub fn first_violation<M>(id: IdentityId, m: &M, dom: &[usize]) -> Option<Vec<usize>>
where
    M: Fn(usize, usize) -> usize + Sync,
{
    let n = dom.len();
    let k = id.arity();
    if n == 0 {
        return None;
    }
    let mm = |a: &usize, b: &usize| m(*a, *b);
    let inner = n.pow(k as u32 - 1);
    let scan = |slow: usize| -> Option<Vec<usize>> {
        let mut v = vec![0usize; k];
        v[k - 1] = dom[slow];
        for r in 0..inner {
            let mut q = r;
            for slot in v.iter_mut().take(k - 1) {
                *slot = dom[q % n];
                q /= n;
            }
            let (l, rr) = id.sides(mm, &v);
            if l != rr {
                return Some(v);
            }
        }
        None
    };
    #[cfg(feature = "parallel")]
    if inner >= 4096 {
        use rayon::prelude::*;
        return (0..n).into_par_iter().find_map_first(scan);
    }
    (0..n).find_map(scan)
}

/// Exhaustive check on a finite groupoid, ignoring budgets.
pub fn holds_exhaustively(g: &Groupoid, id: IdentityId) -> bool {
    let n = g.order().expect("finite groupoid");
    let dom: Vec<usize> = (0..n).collect();
    first_violation(id, &|a, b| g.mul(a, b), &dom).is_none()
}

pub fn check_identity(g: &Groupoid, id: IdentityId, mode: CheckMode) -> Result<IdentityVerdict> {
    check_identity_with(g, id, mode, &Budget::default())
}

pub fn check_identity_with(g: &Groupoid, id: IdentityId, mode: CheckMode, budget: &Budget) -> Result<IdentityVerdict> {
    match mode {
        CheckMode::Exhaustive => exhaustive(g, id, budget),
        CheckMode::Sampled { trials, seed } => Ok(sampled(g, id, trials, seed)),
        CheckMode::Auto => {
            let liftable = g.spec().is_some_and(|s| s.shape != Shape::Scalar && s.shape.is_liftable());
            if liftable {
                return lifted(g, id, budget);
            }
            match exhaustive(g, id, budget) {
                Err(e) if e.is_budget() => Ok(sampled(g, id, budget.sample_trials, 0)),
                r => r,
            }
        }
    }
}

fn evaluations(order: Option<usize>, id: IdentityId) -> Option<u64> {
    order.and_then(|n| (n as u64).checked_pow(id.arity() as u32))
}

fn exhaustive(g: &Groupoid, id: IdentityId, budget: &Budget) -> Result<IdentityVerdict> {
    match evaluations(g.order(), id) {
        Some(e) if e <= budget.evaluations => {}
        e => {
            return Err(Error::TooLarge {
                what: format!("exhaustive {id} check"),
                needed: e.map_or_else(|| "an unenumerable element space".to_string(), |e| format!("{e} evaluations")),
                limit: budget.evaluations,
            })
        }
    }
    let dom: Vec<usize> = (0..g.order().unwrap_or(0)).collect();
    let w = first_violation(id, &|a, b| g.mul(a, b), &dom);
    Ok(IdentityVerdict::with_witness(id, Method::Exhaustive, g, w))
}

/// Decides the identity on the scalar groupoid; a scalar witness becomes a
/// witness of constant elements.
fn lifted(g: &Groupoid, id: IdentityId, budget: &Budget) -> Result<IdentityVerdict> {
    let spec = g.spec().expect("liftable groupoids come from a spec");
    let scalar = Groupoid::build_with(spec.with_shape(Shape::Scalar), budget)?;
    let inner = match exhaustive(&scalar, id, budget) {
        Err(e) if e.is_budget() => return Ok(sampled(g, id, budget.sample_trials, 0)),
        r => r?,
    };
    let mut v = IdentityVerdict {
        method: Method::Lifted,
        witness: None,
        witness_indices: None,
        ..inner.clone()
    };
    if let Some(w) = inner.witness_indices {
        let consts: Vec<Element> = w
            .iter()
            .map(|&i| {
                let e = scalar.element(i).expect("spec groupoid");
                Element::constant(spec.shape, e.entries()[0])
            })
            .collect();
        v.witness = Some(consts.iter().map(ToString::to_string).collect());
        if g.order().is_some() {
            v.witness_indices = consts.iter().map(|e| g.index_of(e).ok()).collect();
        }
    }
    Ok(v)
}

fn sampled(g: &Groupoid, id: IdentityId, trials: u64, seed: u64) -> IdentityVerdict {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = id.arity();
    let mut found: Option<(Vec<String>, Option<Vec<usize>>)> = None;
    if let Some(n) = g.order() {
        let mm = |a: &usize, b: &usize| g.mul(*a, *b);
        for _ in 0..trials {
            let v: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
            let (l, r) = id.sides(mm, &v);
            if l != r {
                found = Some((v.iter().map(|&i| g.label(i)).collect(), Some(v)));
                break;
            }
        }
    } else {
        let space = g.space().expect("unbounded groupoids come from a spec");
        let (base, entries) = (space.base(), space.shape().entry_count());
        let mm = |a: &Element, b: &Element| g.star_elements(a, b).expect("conforming elements");
        for _ in 0..trials {
            let v: Vec<Element> = (0..k)
                .map(|_| {
                    let d: Vec<u32> = (0..entries).map(|_| rng.gen_range(0..base) as u32).collect();
                    space.element_from_digits(&d)
                })
                .collect();
            let (l, r) = id.sides(mm, &v);
            if l != r {
                found = Some((v.iter().map(ToString::to_string).collect(), None));
                break;
            }
        }
    }
    let (status, witness, witness_indices) = match found {
        Some((w, i)) => (Status::Fails, Some(w), i),
        None => (Status::SampledNoCounterexample, None, None),
    };
    IdentityVerdict {
        identity: id,
        method: Method::Sampled,
        status,
        witness,
        witness_indices,
        trials: Some(trials),
        seed: Some(seed),
    }
}

/// Both alternative laws; the conjunction is derived from the two verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternativeVerdict {
    pub holds: bool,
    pub left: IdentityVerdict,
    pub right: IdentityVerdict,
}

pub fn check_alternative(g: &Groupoid, mode: CheckMode, budget: &Budget) -> Result<AlternativeVerdict> {
    let left = check_identity_with(g, IdentityId::LeftAlternative, mode, budget)?;
    let right = check_identity_with(g, IdentityId::RightAlternative, mode, budget)?;
    Ok(AlternativeVerdict {
        holds: left.holds() && right.holds(),
        left,
        right,
    })
}

/// Re-evaluates a witness and reports whether it really violates the law.
pub fn witness_violates(g: &Groupoid, id: IdentityId, w: &[usize]) -> bool {
    let (l, r) = id.sides(|a: &usize, b: &usize| g.mul(*a, *b), w);
    l != r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormPredicate {
    /// `t + u = 1 (mod n)` exactly when idempotent.
    IdempotentIff,
    /// `t^2 = t` and `u^2 = u` exactly when associative.
    SemigroupIff,
    /// For `t = u`: alternative exactly when `t^2 = t`.
    AlternativeIff,
    /// For one zero parameter `s`: P-identity and both alternative laws exactly when `s^2 = s`.
    TypeIiiPAltIff,
    /// `t = u` forces the P-identity.
    EqualPairP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PredicateKind {
    Iff,
    Implies,
}

impl ClosedFormPredicate {
    pub const ALL: [ClosedFormPredicate; 5] = [
        ClosedFormPredicate::IdempotentIff,
        ClosedFormPredicate::SemigroupIff,
        ClosedFormPredicate::AlternativeIff,
        ClosedFormPredicate::TypeIiiPAltIff,
        ClosedFormPredicate::EqualPairP,
    ];

    pub fn kind(self) -> PredicateKind {
        match self {
            ClosedFormPredicate::EqualPairP => PredicateKind::Implies,
            _ => PredicateKind::Iff,
        }
    }

    pub fn concerns(self, id: IdentityId) -> bool {
        use IdentityId::*;
        match self {
            ClosedFormPredicate::IdempotentIff => id == Idempotent,
            ClosedFormPredicate::SemigroupIff => id == Associative,
            ClosedFormPredicate::AlternativeIff => matches!(id, LeftAlternative | RightAlternative),
            ClosedFormPredicate::TypeIiiPAltIff => matches!(id, LeftAlternative | RightAlternative | PIdentity),
            ClosedFormPredicate::EqualPairP => id == PIdentity,
        }
    }

    /// Whether the predicate says anything about this pair.
    pub fn applies(self, t: u64, u: u64) -> bool {
        match self {
            ClosedFormPredicate::AlternativeIff | ClosedFormPredicate::EqualPairP => t == u,
            ClosedFormPredicate::TypeIiiPAltIff => (t == 0) != (u == 0),
            _ => true,
        }
    }
}

impl fmt::Display for ClosedFormPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClosedFormPredicate::IdempotentIff => "idempotent-iff",
            ClosedFormPredicate::SemigroupIff => "semigroup-iff",
            ClosedFormPredicate::AlternativeIff => "alternative-iff",
            ClosedFormPredicate::TypeIiiPAltIff => "type-iii-p-alt-iff",
            ClosedFormPredicate::EqualPairP => "equal-pair-p",
        };
        f.write_str(s)
    }
}

/// Evaluates a predicate from `(n, t, u)` alone.
pub fn closed_form(pred: ClosedFormPredicate, n: u64, t: u64, u: u64) -> bool {
    let (t, u) = (t % n, u % n);
    let sq = |x: u64| x * x % n == x;
    match pred {
        ClosedFormPredicate::IdempotentIff => (t + u) % n == 1 % n,
        ClosedFormPredicate::SemigroupIff => sq(t) && sq(u),
        ClosedFormPredicate::AlternativeIff => t == u && sq(t),
        ClosedFormPredicate::TypeIiiPAltIff => (t == 0) != (u == 0) && sq(t + u),
        ClosedFormPredicate::EqualPairP => t == u,
    }
}

/// Integer reading `(n, t, u)` of a spec whose star acts like `Z_n(t, u)` on
/// every coefficient, if there is one.
pub fn integer_parameters(g: &Groupoid) -> Option<(u64, u64, u64)> {
    let spec = g.spec()?;
    let n = spec.carrier.modulus()?;
    let mixed = matches!(spec.carrier.base(), Some(BaseCarrier::MixedNeutrosophic(_)));
    let read = |v: &Value| match v {
        Value::Scalar(Residue { a, b: 0 }) => Some(*a),
        Value::Scalar(Residue { a: 0, b }) if !mixed => Some(*b),
        _ => None,
    };
    Some((n, read(&spec.t)?, read(&spec.u)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormOutcome {
    pub predicate: ClosedFormPredicate,
    pub kind: PredicateKind,
    pub value: bool,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub identity: IdentityId,
    pub verdicts: Vec<IdentityVerdict>,
    pub closed_forms: Vec<ClosedFormOutcome>,
    pub agree: bool,
    pub disagreements: Vec<String>,
}

/// Runs exhaustive, lifted and every applicable closed-form method and
/// compares them. Disagreements are data, not errors.
pub fn cross_validate(g: &Groupoid, id: IdentityId) -> ConsistencyReport {
    cross_validate_with(g, id, &Budget::default())
}

pub fn cross_validate_with(g: &Groupoid, id: IdentityId, budget: &Budget) -> ConsistencyReport {
    let mut verdicts = Vec::new();
    let mut disagreements = Vec::new();
    match exhaustive(g, id, budget) {
        Ok(v) => verdicts.push(v),
        Err(e) => disagreements.push(format!("exhaustive check unavailable: {e}")),
    }
    if g.spec().is_some_and(|s| s.shape.is_liftable()) {
        match lifted(g, id, budget) {
            Ok(v) => verdicts.push(v),
            Err(e) => disagreements.push(format!("lifted check unavailable: {e}")),
        }
    }
    let truth = verdicts.iter().find(|v| v.method != Method::Sampled).map(IdentityVerdict::holds);
    for pair in verdicts.windows(2) {
        if pair[0].status != pair[1].status {
            disagreements.push(format!(
                "{:?} says {:?} but {:?} says {:?}",
                pair[0].method, pair[0].status, pair[1].method, pair[1].status
            ));
        }
    }
    let mut closed_forms = Vec::new();
    if let (Some((n, t, u)), Some(truth)) = (integer_parameters(g), truth) {
        for pred in ClosedFormPredicate::ALL {
            if !pred.concerns(id) || !pred.applies(t, u) {
                continue;
            }
            let value = closed_form(pred, n, t, u);
            let consistent = match pred.kind() {
                PredicateKind::Iff => value == truth,
                PredicateKind::Implies => !value || truth,
            };
            if !consistent {
                disagreements.push(format!("{pred} gives {value} at (n, t, u) = ({n}, {t}, {u}), brute force gives {truth}"));
            }
            closed_forms.push(ClosedFormOutcome {
                predicate: pred,
                kind: pred.kind(),
                value,
                consistent,
            });
        }
    }
    ConsistencyReport {
        identity: id,
        agree: disagreements.is_empty(),
        verdicts,
        closed_forms,
        disagreements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Carrier;
    use crate::groupoid::GroupoidSpec;

    fn z(n: u64, t: u64, u: u64) -> Groupoid {
        Groupoid::build(GroupoidSpec::modular(n, t, u).unwrap()).unwrap()
    }

    #[test]
    fn documented_verdicts() {
        let v = check_identity(&z(10, 5, 6), IdentityId::Moufang, CheckMode::Auto).unwrap();
        assert!(v.holds());
        let v = check_identity(&z(4, 2, 3), IdentityId::Bol, CheckMode::Exhaustive).unwrap();
        assert_eq!(v.witness_indices, Some(vec![1, 0, 0]));
        assert!(check_identity(&z(12, 4, 9), IdentityId::Associative, CheckMode::Auto).unwrap().holds());
        let spec = GroupoidSpec::new(
            Carrier::modular(8).unwrap().interval_of().unwrap(),
            Shape::Scalar,
            Value::residue(4),
            Value::residue(5),
        )
        .unwrap();
        let g = Groupoid::build(spec).unwrap();
        assert!(check_identity(&g, IdentityId::Idempotent, CheckMode::Auto).unwrap().holds());
    }

    #[test]
    fn bol_witness_sides() {
        let g = z(4, 2, 3);
        let (l, r) = IdentityId::Bol.sides(|a: &usize, b: &usize| g.mul(*a, *b), &[1, 0, 0]);
        assert_eq!((l, r), (0, 2));
    }

    #[test]
    fn predicates() {
        assert!(closed_form(ClosedFormPredicate::IdempotentIff, 8, 4, 5));
        assert!(closed_form(ClosedFormPredicate::SemigroupIff, 6, 3, 3));
        for t in 2..7 {
            for u in 2..7 {
                assert!(!closed_form(ClosedFormPredicate::SemigroupIff, 7, t, u));
            }
        }
    }

    #[test]
    fn modes_parse() {
        assert_eq!("sampled:100:7".parse::<CheckMode>().unwrap(), CheckMode::Sampled { trials: 100, seed: 7 });
        assert!("sampled:x".parse::<CheckMode>().is_err());
        assert_eq!("P-Identity".parse::<IdentityId>().unwrap(), IdentityId::PIdentity);
    }

    #[test]
    fn forced_exhaustive_respects_budget() {
        let big = GroupoidSpec::modular(12, 2, 3).unwrap().with_shape(Shape::matrix(3, 8).unwrap());
        let g = Groupoid::build(big).unwrap();
        let e = check_identity(&g, IdentityId::Associative, CheckMode::Exhaustive).unwrap_err();
        assert!(e.is_budget());
        let v = check_identity(&g, IdentityId::Associative, CheckMode::Auto).unwrap();
        assert_eq!(v.method, Method::Lifted);
        assert!(v.fails());
        let v = check_identity(&g, IdentityId::Commutative, CheckMode::Sampled { trials: 50, seed: 3 }).unwrap();
        assert!(v.fails());
        assert_eq!(v.seed, Some(3));
    }

    #[test]
    fn sampled_is_reproducible() {
        let g = z(97, 5, 11);
        let a = check_identity(&g, IdentityId::Moufang, CheckMode::Sampled { trials: 500, seed: 9 }).unwrap();
        let b = check_identity(&g, IdentityId::Moufang, CheckMode::Sampled { trials: 500, seed: 9 }).unwrap();
        assert_eq!(a, b);
        assert!(witness_violates(&g, IdentityId::Moufang, a.witness_indices.as_ref().unwrap()));
    }

    #[test]
    fn cross_validation_examples() {
        for id in [IdentityId::LeftAlternative, IdentityId::RightAlternative] {
            let r = cross_validate(&z(6, 4, 4), id);
            assert!(r.agree, "{:?}", r.disagreements);
            assert!(r.verdicts.iter().all(IdentityVerdict::holds));
            assert!(!r.closed_forms.is_empty());
            let r = cross_validate(&z(5, 3, 3), id);
            assert!(r.agree);
            assert!(r.verdicts.iter().all(IdentityVerdict::fails));
        }
        let r = cross_validate(&z(9, 1, 0), IdentityId::Associative);
        assert!(r.agree && r.verdicts.iter().all(IdentityVerdict::holds));
    }
}
