//! Executable checks for the classification and counting claims, each bound
//! to a parameter range, plus the suite runner that aggregates their verdicts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::carrier::{BaseCarrier, Carrier, Value};
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::groupoid::{is_prime, Groupoid, GroupoidSpec};
use crate::identities::{check_identity_with, closed_form, holds_exhaustively, CheckMode, ClosedFormPredicate, IdentityId, Method};
use crate::shape::{ProductKind, Shape};
use crate::structure::{
    classify_subset, enumerate_subgroupoids, is_left_ideal, is_normal_groupoid_with, is_normal_subgroupoid, is_right_ideal,
    is_semigroup, is_simple_with, smarandache_identity_with, subsets_where, SmarandacheStatus, Strategy, SubsetHandle,
};
use crate::worked;

// ---------------------------------------------------------------- counting

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// Ordered pairs of nonzero parameters.
    AllPairs,
    /// Ordered pairs of nonzero parameters with unit coprimality.
    LevelOnePairs,
    /// Ordered pairs of nonzero parameters with `t + u` equal to the unit.
    IdempotentPairs,
    /// Equal pairs `(t, t)` with `t` neither zero nor the unit.
    EqualPairs,
}

impl std::str::FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-pairs" => Ok(ClassKind::AllPairs),
            "level-one-pairs" => Ok(ClassKind::LevelOnePairs),
            "idempotent-pairs" => Ok(ClassKind::IdempotentPairs),
            "equal-pairs" => Ok(ClassKind::EqualPairs),
            _ => Err(Error::parse(format!("unknown class `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassCountQuery {
    pub carrier: Carrier,
    pub kind: ClassKind,
    /// Whether pairs with `t = u` are counted (ignored for `EqualPairs`).
    pub equal_pairs_included: bool,
}

/// Nonzero carrier-native parameter values.
fn parameter_values(c: Carrier) -> Result<Vec<Value>> {
    let base = c.base().ok_or_else(|| Error::Unenumerable(c.to_string()))?;
    Ok(Carrier::Base(base).enumerate()?.into_iter().filter(|v| !v.is_zero()).collect())
}

fn unit_of(base: BaseCarrier) -> Value {
    match base {
        BaseCarrier::PureNeutrosophic(_) => Value::indeterminate(1),
        _ => Value::residue(1),
    }
}

pub fn count_class(q: &ClassCountQuery) -> Result<u64> {
    let base = q.carrier.base().ok_or_else(|| Error::Unenumerable(q.carrier.to_string()))?;
    let plain = Carrier::Base(base);
    let params = parameter_values(q.carrier)?;
    let unit = unit_of(base);
    if q.kind == ClassKind::EqualPairs {
        return Ok(params.iter().filter(|&&t| t != unit).count() as u64);
    }
    let mut count = 0;
    for t in &params {
        for u in &params {
            if t == u && !q.equal_pairs_included {
                continue;
            }
            let keep = match q.kind {
                ClassKind::AllPairs => true,
                ClassKind::LevelOnePairs => plain.coprimality_class(t, u)?.is_unit,
                ClassKind::IdempotentPairs => plain.add(t, u)? == unit,
                ClassKind::EqualPairs => unreachable!(),
            };
            count += u64::from(keep);
        }
    }
    Ok(count)
}

// ---------------------------------------------------------------- registry

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    /// Must pass.
    Asserted,
    /// Recorded; disagreement allowed.
    ReportOnly,
}

/// Inclusive range of the modulus `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: u64,
    pub hi: u64,
}

impl NRange {
    pub const fn new(lo: u64, hi: u64) -> Self {
        NRange { lo, hi }
    }

    fn iter(self) -> impl Iterator<Item = u64> {
        self.lo.max(2)..=self.hi
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}..{}", self.lo, self.hi)
    }
}

impl std::str::FromStr for NRange {
    type Err = Error;

    /// `n=A..B`, inclusive.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("bad range `{s}`, expected n=A..B"));
        let body = s.trim().strip_prefix("n=").ok_or_else(bad)?;
        let (a, b) = body.split_once("..").ok_or_else(bad)?;
        let (lo, hi) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
        if lo < 2 || lo > hi {
            return Err(bad());
        }
        Ok(NRange { lo, hi })
    }
}

impl Serialize for NRange {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NRange {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

struct Ctx {
    range: Option<NRange>,
    budget: Budget,
    seed: u64,
}

const MAX_MESSAGES: usize = 12;

/// Running tally of one check.
#[derive(Default)]
struct Tally {
    instances: u64,
    failures: Vec<String>,
    failure_count: u64,
    disagreements: Vec<String>,
    disagreement_count: u64,
    notes: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_MESSAGES {
                self.failures.push(msg());
            }
        }
    }

    /// A recorded claim; a mismatch is a disagreement rather than a failure.
    fn report(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.disagreement_count += 1;
            if self.disagreements.len() < MAX_MESSAGES {
                self.disagreements.push(msg());
            }
        }
    }

    fn error(&mut self, e: Error) {
        self.expect(false, || format!("error: {e}"));
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn merge(&mut self, o: Tally) {
        self.instances += o.instances;
        self.failure_count += o.failure_count;
        self.disagreement_count += o.disagreement_count;
        for f in o.failures {
            if self.failures.len() < MAX_MESSAGES {
                self.failures.push(f);
            }
        }
        for d in o.disagreements {
            if self.disagreements.len() < MAX_MESSAGES {
                self.disagreements.push(d);
            }
        }
        self.notes.extend(o.notes);
    }
}

struct CheckDef {
    id: &'static str,
    title: &'static str,
    tier: Tier,
    default_range: Option<NRange>,
    run: fn(&Ctx) -> Tally,
}

macro_rules! check {
    ($id:expr, $tier:ident, $range:expr, $title:expr, $run:expr) => {
        CheckDef {
            id: $id,
            title: $title,
            tier: Tier::$tier,
            default_range: $range,
            run: $run,
        }
    };
}

static REGISTRY: &[CheckDef] = &[
    check!("T1", Asserted, Some(NRange::new(3, 30)), "idempotent exactly when t + u = 1 (mod n); over Z_n, Z_nI and o(Z_n)", t1),
    check!("T2", Asserted, Some(NRange::new(3, 16)), "associative exactly when t^2 = t and u^2 = u (mod n); over Z_n and Z_nI", t2),
    check!("T3", Asserted, Some(NRange::new(3, 16)), "equal parameters (t, t) always satisfy the P-identity", t3),
    check!("T4", Asserted, Some(NRange::new(2, 23)), "prime p, 1 < t < p: (t, t) fails both alternative laws", t4),
    check!("T5", Asserted, Some(NRange::new(3, 16)), "composite n: (t, t) is alternative exactly when t^2 = t (brute force is ground truth)", t5),
    check!("T6", Asserted, Some(NRange::new(3, 16)), "one zero parameter s: P-identity and both alternative laws exactly when s^2 = s", t6),
    check!("T7", Asserted, Some(NRange::new(3, 12)), "left ideals of (t, u) are exactly the right ideals of (u, t)", t7),
    check!("T8", Asserted, Some(NRange::new(3, 20)), "prime n = t + u with t, u prime: the groupoid is simple", t8),
    check!("T8X", ReportOnly, Some(NRange::new(4, 20)), "composite n = t + u with t, u prime: simplicity claim", t8x),
    check!("T9", ReportOnly, Some(NRange::new(4, 20)), "n even, t + u = n, gcd(t, u) = t: a unique subgroupoid of order n/t, normal, so not simple", t9),
    check!("T10", Asserted, Some(NRange::new(6, 20)), "n > 5, t + u = 1 (mod n), gcd(t, u) = 1: a Smarandache groupoid via an idempotent singleton", t10),
    check!("T11", Asserted, Some(NRange::new(3, 20)), "t + u = 1 (mod n) with t^2 = t and u^2 = u: strong Smarandache P-groupoid", t11),
    check!("T11X", ReportOnly, Some(NRange::new(3, 20)), "t + u = 1 (mod n): Smarandache P only if t^2 = t and u^2 = u", t11x),
    check!("T12", ReportOnly, Some(NRange::new(4, 20)), "Z_2m with (2, 0): {[0,0],[0,m]} is a semigroup witness", t12),
    check!("T13", Asserted, Some(NRange::new(3, 20)), "parameter-pair counts and their closed formulas", t13),
    check!("T14", Asserted, Some(NRange::new(3, 50)), "idempotent pair count (equal pairs included) has the parity of n", t14),
    check!("T15", ReportOnly, None, "Z_4I and Z_8I with m + n' prime have no proper two-sided ideals", t15),
    check!("T16", Asserted, Some(NRange::new(3, 20)), "special classes contain a semigroup: (t, 0) polynomials, and Z_n for composite n", t16),
    check!("T17", Asserted, Some(NRange::new(3, 10)), "in N(Z_n) with integer parameters, Z_n is a closed pseudo subset", t17),
    check!("T18", Asserted, Some(NRange::new(2, 13)), "Z_pI with equal parameters is a normal groupoid", t18),
    check!("T19", Asserted, Some(NRange::new(3, 16)), "{0} is never an ideal when t and u are nonzero", t19),
    check!("LIFT", Asserted, None, "2x2 matrices over Z_3: every identity agrees with the scalar verdict, exhaustively", lift),
    check!("SAMPLE", Asserted, None, "seeded sampling on unenumerable matrix groupoids never contradicts the lifted verdict", sample),
    check!("EX-1.1.1", Asserted, None, "worked example 1.1.1", ex),
    check!("EX-2.1.1", Asserted, None, "worked example 2.1.1", ex),
    check!("EX-2.1.5", Asserted, None, "worked example 2.1.5", ex),
    check!("EX-2.1.20", ReportOnly, None, "worked example 2.1.20 (reference values miscalculated)", ex),
    check!("EX-2.2.1", Asserted, None, "worked example 2.2.1", ex),
    check!("EX-2.3.8", Asserted, None, "worked example 2.3.8", ex),
    check!("EX-2.3.51", Asserted, None, "worked example 2.3.51", ex),
    check!("EX-2.5.20", Asserted, None, "worked example 2.5.20", ex),
    check!("EX-2.6.4", Asserted, None, "worked example 2.6.4", ex),
    check!("EX-2.6.5", Asserted, None, "worked example 2.6.5", ex),
    check!("EX-3.2.1", Asserted, None, "worked example 3.2.1", ex),
    check!("EX-3.2.4", Asserted, None, "worked example 3.2.4", ex),
    check!("EX-3.2.7", Asserted, None, "worked example 3.2.7", ex),
];

// A fn pointer cannot capture the example id, so worked-example checks look
// it up from a thread-local set by the runner.
thread_local! {
    static CURRENT: std::cell::Cell<&'static str> = const { std::cell::Cell::new("") };
}

fn ex(_: &Ctx) -> Tally {
    let id = CURRENT.with(|c| c.get());
    let mut tally = Tally::default();
    match worked::replay(id.trim_start_matches("EX-")) {
        Ok(r) if r.errata => {
            tally.report(r.matches, || format!("reference:\n{}recomputed:\n{}", r.golden, r.output));
            if !r.matches {
                tally.note(format!("recomputed values:\n{}", r.output));
            }
        }
        Ok(r) => tally.expect(r.matches, || format!("expected:\n{}got:\n{}", r.golden, r.output)),
        Err(e) => tally.error(e),
    }
    tally
}

/// Ids of every registered check, in registry order.
pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

fn find(id: &str) -> Result<&'static CheckDef> {
    REGISTRY
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

// ---------------------------------------------------------------- helpers

fn zn(n: u64, t: u64, u: u64) -> Result<Groupoid> {
    Groupoid::build(GroupoidSpec::modular(n, t, u)?)
}

fn zni(n: u64, t: u64, u: u64) -> Result<Groupoid> {
    Groupoid::build(GroupoidSpec::new(
        Carrier::pure_neutrosophic(n)?,
        Shape::Scalar,
        Value::indeterminate(t % n),
        Value::indeterminate(u % n),
    )?)
}

fn interval(n: u64, t: u64, u: u64) -> Result<Groupoid> {
    Groupoid::build(GroupoidSpec::new(
        Carrier::modular(n)?.interval_of()?,
        Shape::Scalar,
        Value::residue(t % n),
        Value::residue(u % n),
    )?)
}

/// All ordered pairs except `(0, 0)`.
fn pairs(n: u64) -> impl Iterator<Item = (u64, u64)> {
    (0..n).flat_map(move |t| (0..n).map(move |u| (t, u))).filter(|&p| p != (0, 0))
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

#[cfg(feature = "parallel")]
fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T) -> Tally + Sync + Send) -> Tally {
    use rayon::prelude::*;
    let parts: Vec<Tally> = items.par_iter().map(f).collect();
    parts.into_iter().fold(Tally::default(), |mut a, b| {
        a.merge(b);
        a
    })
}

#[cfg(not(feature = "parallel"))]
fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T) -> Tally + Sync + Send) -> Tally {
    items.iter().map(f).fold(Tally::default(), |mut a, b| {
        a.merge(b);
        a
    })
}

fn moduli(ctx: &Ctx) -> Vec<u64> {
    ctx.range.map(|r| r.iter().collect()).unwrap_or_default()
}

type Builder = fn(u64, u64, u64) -> Result<Groupoid>;

/// Brute force against an iff predicate for every pair and every builder.
fn iff_sweep(ctx: &Ctx, builders: &[(&'static str, Builder)], id: IdentityId, pred: ClosedFormPredicate) -> Tally {
    let ns = moduli(ctx);
    par_tally(&ns, |&n| {
        let mut t = Tally::default();
        for &(name, build) in builders {
            for (a, b) in pairs(n) {
                match build(n, a, b) {
                    Ok(g) => {
                        let brute = holds_exhaustively(&g, id);
                        let expected = closed_form(pred, n, a, b);
                        t.expect(brute == expected, || {
                            format!("{name} n={n} ({a},{b}): {id} brute force {brute}, {pred} {expected}")
                        });
                    }
                    Err(e) => t.error(e),
                }
            }
        }
        t
    })
}

// ---------------------------------------------------------------- checks

fn t1(ctx: &Ctx) -> Tally {
    iff_sweep(
        ctx,
        &[("Z_n", zn), ("Z_nI", zni), ("o(Z_n)", interval)],
        IdentityId::Idempotent,
        ClosedFormPredicate::IdempotentIff,
    )
}

fn t2(ctx: &Ctx) -> Tally {
    iff_sweep(ctx, &[("Z_n", zn), ("Z_nI", zni)], IdentityId::Associative, ClosedFormPredicate::SemigroupIff)
}

fn t3(ctx: &Ctx) -> Tally {
    let ns = moduli(ctx);
    par_tally(&ns, |&n| {
        let mut tally = Tally::default();
        for t in 1..n {
            for (name, build) in [("Z_n", zn as Builder), ("Z_nI", zni)] {
                match build(n, t, t) {
                    Ok(g) => tally.expect(holds_exhaustively(&g, IdentityId::PIdentity), || {
                        format!("{name} n={n} ({t},{t}) violates the P-identity")
                    }),
                    Err(e) => tally.error(e),
                }
            }
        }
        tally
    })
}

fn t4(ctx: &Ctx) -> Tally {
    let ns: Vec<u64> = moduli(ctx).into_iter().filter(|&n| is_prime(n)).collect();
    par_tally(&ns, |&p| {
        let mut tally = Tally::default();
        for t in 2..p {
            match zn(p, t, t) {
                Ok(g) => {
                    let l = holds_exhaustively(&g, IdentityId::LeftAlternative);
                    let r = holds_exhaustively(&g, IdentityId::RightAlternative);
                    tally.expect(!l && !r, || format!("Z_{p} ({t},{t}): left {l}, right {r}"));
                }
                Err(e) => tally.error(e),
            }
        }
        tally
    })
}

fn t5(ctx: &Ctx) -> Tally {
    let ns: Vec<u64> = moduli(ctx).into_iter().filter(|&n| !is_prime(n)).collect();
    par_tally(&ns, |&n| {
        let mut tally = Tally::default();
        for t in 1..n {
            match zn(n, t, t) {
                Ok(g) => {
                    let alt = holds_exhaustively(&g, IdentityId::LeftAlternative)
                        && holds_exhaustively(&g, IdentityId::RightAlternative);
                    let pred = closed_form(ClosedFormPredicate::AlternativeIff, n, t, t);
                    tally.expect(alt == pred, || format!("Z_{n} ({t},{t}): alternative {alt}, t^2 = t {pred}"));
                }
                Err(e) => tally.error(e),
            }
        }
        tally
    })
}

fn t6(ctx: &Ctx) -> Tally {
    let ns = moduli(ctx);
    par_tally(&ns, |&n| {
        let mut tally = Tally::default();
        for s in 1..n {
            for (a, b) in [(s, 0), (0, s)] {
                match zn(n, a, b) {
                    Ok(g) => {
                        let pred = closed_form(ClosedFormPredicate::TypeIiiPAltIff, n, a, b);
                        for id in [IdentityId::PIdentity, IdentityId::LeftAlternative, IdentityId::RightAlternative] {
                            let brute = holds_exhaustively(&g, id);
                            tally.expect(brute == pred, || format!("Z_{n} ({a},{b}) {id}: brute force {brute}, s^2 = s {pred}"));
                        }
                    }
                    Err(e) => tally.error(e),
                }
            }
        }
        tally
    })
}

fn t7(ctx: &Ctx) -> Tally {
    let items: Vec<(u64, u64, u64)> = moduli(ctx)
        .into_iter()
        .flat_map(|n| pairs(n).map(move |(t, u)| (n, t, u)))
        .collect();
    let budget = ctx.budget;
    par_tally(&items, |&(n, t, u)| {
        let mut tally = Tally::default();
        let res = (|| -> Result<bool> {
            let g = zn(n, t, u)?;
            let h = zn(n, u, t)?;
            let left = subsets_where(&g, &budget, |s| is_left_ideal(&g, s))?;
            let right = subsets_where(&h, &budget, |s| is_right_ideal(&h, s))?;
            Ok(left == right)
        })();
        match res {
            Ok(ok) => tally.expect(ok, || format!("Z_{n}: left ideals of ({t},{u}) differ from right ideals of ({u},{t})")),
            Err(e) => tally.error(e),
        }
        tally
    })
}

/// `(t, u)` with `t + u = n`, both prime.
fn prime_splits(n: u64) -> Vec<(u64, u64)> {
    (2..n).filter(|&t| is_prime(t) && is_prime(n - t)).map(|t| (t, n - t)).collect()
}

fn simplicity_sweep(ctx: &Ctx, prime_n: bool, asserted: bool) -> Tally {
    let items: Vec<(u64, u64, u64)> = moduli(ctx)
        .into_iter()
        .filter(|&n| is_prime(n) == prime_n)
        .flat_map(|n| prime_splits(n).into_iter().map(move |(t, u)| (n, t, u)))
        .collect();
    let budget = ctx.budget;
    par_tally(&items, |&(n, t, u)| {
        let mut tally = Tally::default();
        match zn(n, t, u).and_then(|g| is_simple_with(&g, &budget).map(|v| (g, v))) {
            Ok((g, v)) => {
                let msg = || {
                    let w = v.witness.as_ref().map(|w| w.labels(&g).join(",")).unwrap_or_default();
                    format!("Z_{n} ({t},{u}) has the normal subgroupoid {{{w}}}")
                };
                if asserted {
                    tally.expect(v.simple, msg);
                } else {
                    tally.report(v.simple, msg);
                }
            }
            Err(e) => tally.error(e),
        }
        tally
    })
}

fn t8(ctx: &Ctx) -> Tally {
    simplicity_sweep(ctx, true, true)
}

fn t8x(ctx: &Ctx) -> Tally {
    simplicity_sweep(ctx, false, false)
}

fn t9(ctx: &Ctx) -> Tally {
    let items: Vec<(u64, u64)> = moduli(ctx)
        .into_iter()
        .filter(|n| n % 2 == 0)
        .flat_map(|n| (2..n).filter(move |&t| gcd(t, n - t) == t).map(move |t| (n, t)))
        .collect();
    let budget = ctx.budget;
    par_tally(&items, |&(n, t)| {
        let mut tally = Tally::default();
        let u = n - t;
        let res = (|| -> Result<()> {
            let g = zn(n, t, u)?;
            let target = (n / t) as usize;
            let subs = enumerate_subgroupoids(&g, Strategy::PowerSet, &budget)?;
            let of_order: Vec<&SubsetHandle> = subs.iter().filter(|s| s.len() == target).collect();
            let show = |s: &SubsetHandle| format!("{{{}}}", s.labels(&g).join(","));
            tally.report(of_order.len() == 1, || {
                let list: Vec<String> = of_order.iter().map(|s| show(s)).collect();
                format!("Z_{n} ({t},{u}): {} subgroupoids of order {target}: {}", of_order.len(), list.join(" "))
            });
            for s in &of_order {
                tally.report(is_normal_subgroupoid(&g, s), || format!("Z_{n} ({t},{u}): {} is not normal", show(s)));
            }
            let simple = is_simple_with(&g, &budget)?;
            let witness = simple.witness.as_ref().map(show).unwrap_or_default();
            tally.report(!simple.simple, || format!("Z_{n} ({t},{u}) is simple"));
            if !simple.simple {
                tally.note(format!("Z_{n} ({t},{u}): first normal subgroupoid {witness}"));
            }
            Ok(())
        })();
        if let Err(e) = res {
            tally.error(e);
        }
        tally
    })
}

fn t10(ctx: &Ctx) -> Tally {
    let items: Vec<(u64, u64, u64)> = moduli(ctx)
        .into_iter()
        .filter(|&n| n > 5)
        .flat_map(|n| (1..n).map(move |t| (n, t, (n + 1 - t) % n)))
        .filter(|&(_, t, u)| u != 0 && gcd(t, u) == 1)
        .collect();
    let budget = ctx.budget;
    par_tally(&items, |&(n, t, u)| {
        let mut tally = Tally::default();
        match interval(n, t, u).and_then(|g| smarandache_identity_with(&g, None, &budget)) {
            Ok(v) => tally.expect(v.witness().is_some_and(|w| w.len() == 1), || {
                format!("o(Z_{n}) ({t},{u}): no singleton semigroup witness, got {}", v.status_name())
            }),
            Err(e) => tally.error(e),
        }
        tally
    })
}

fn idempotent_pairs(ctx: &Ctx) -> Vec<(u64, u64, u64)> {
    moduli(ctx)
        .into_iter()
        .flat_map(|n| (1..n).map(move |t| (n, t, (n + 1 - t) % n)))
        .filter(|&(_, _, u)| u != 0)
        .collect()
}

fn smarandache_p(n: u64, t: u64, u: u64, budget: &Budget) -> Result<SmarandacheStatus> {
    let g = interval(n, t, u)?;
    Ok(smarandache_identity_with(&g, Some(IdentityId::PIdentity), budget)?.status)
}

fn t11(ctx: &Ctx) -> Tally {
    let items: Vec<_> = idempotent_pairs(ctx)
        .into_iter()
        .filter(|&(n, t, u)| closed_form(ClosedFormPredicate::SemigroupIff, n, t, u))
        .collect();
    let budget = ctx.budget;
    par_tally(&items, |&(n, t, u)| {
        let mut tally = Tally::default();
        match smarandache_p(n, t, u, &budget) {
            Ok(s) => tally.expect(matches!(s, SmarandacheStatus::StrongHolds(_)), || {
                format!("o(Z_{n}) ({t},{u}): P-identity verdict {s:?}")
            }),
            Err(e) => tally.error(e),
        }
        tally
    })
}

fn t11x(ctx: &Ctx) -> Tally {
    let items: Vec<_> = idempotent_pairs(ctx)
        .into_iter()
        .filter(|&(n, t, u)| !closed_form(ClosedFormPredicate::SemigroupIff, n, t, u))
        .collect();
    let budget = ctx.budget;
    par_tally(&items, |&(n, t, u)| {
        let mut tally = Tally::default();
        match smarandache_p(n, t, u, &budget) {
            Ok(s) => tally.report(matches!(s, SmarandacheStatus::NotSmarandache | SmarandacheStatus::SGroupoidOnly(_)), || {
                format!("o(Z_{n}) ({t},{u}): t^2 = t and u^2 = u fail, yet the P-identity holds on all of G")
            }),
            Err(e) => tally.error(e),
        }
        tally
    })
}

fn t12(ctx: &Ctx) -> Tally {
    let ns: Vec<u64> = moduli(ctx).into_iter().filter(|n| n % 2 == 0).collect();
    let mut tally = par_tally(&ns, |&n| {
        let mut tally = Tally::default();
        let m = (n / 2) as usize;
        match interval(n, 2, 0) {
            Ok(g) => {
                let w = SubsetHandle::from_indices(n as usize, [0, m]).expect("in range");
                tally.report(is_semigroup(&g, &w) && w.is_proper(), || format!("o(Z_{n}) (2,0): {{[0,0],[0,{m}]}} is not a semigroup"));
            }
            Err(e) => tally.error(e),
        }
        tally
    });
    tally.note("checked with the witness {[0,0],[0,m]}; the three-element form with [m,m] is not an interval of the form [0,a]");
    tally
}

fn t13(ctx: &Ctx) -> Tally {
    let mut tally = Tally::default();
    let q = |carrier: Result<Carrier>, kind, eq| -> Result<u64> {
        count_class(&ClassCountQuery {
            carrier: carrier?,
            kind,
            equal_pairs_included: eq,
        })
    };
    let fixed: [(&str, Result<Carrier>, ClassKind, bool, u64); 6] = [
        ("Z_3I all pairs", Carrier::pure_neutrosophic(3), ClassKind::AllPairs, false, 2),
        ("N(Z_3) all pairs", Carrier::mixed_neutrosophic(3), ClassKind::AllPairs, false, 56),
        ("N(Z_4) all pairs", Carrier::mixed_neutrosophic(4), ClassKind::AllPairs, false, 210),
        ("Z_4 level-one pairs", Carrier::modular(4), ClassKind::LevelOnePairs, false, 6),
        ("Z_6I idempotent pairs", Carrier::pure_neutrosophic(6), ClassKind::IdempotentPairs, true, 4),
        ("Z_9I idempotent pairs", Carrier::pure_neutrosophic(9), ClassKind::IdempotentPairs, true, 7),
    ];
    for (name, carrier, kind, eq, want) in fixed {
        match q(carrier, kind, eq) {
            Ok(got) => tally.expect(got == want, || format!("{name}: {got}, expected {want}")),
            Err(e) => tally.error(e),
        }
    }
    for n in moduli(ctx) {
        let checks = [
            (Carrier::pure_neutrosophic(n), ClassKind::AllPairs, (n - 1) * (n - 2), "Z_nI all pairs"),
            (Carrier::mixed_neutrosophic(n), ClassKind::AllPairs, (n * n - 1) * (n * n - 2), "N(Z_n) all pairs"),
            (Carrier::pure_neutrosophic(n), ClassKind::EqualPairs, n - 2, "Z_nI equal pairs"),
        ];
        for (carrier, kind, want, name) in checks {
            match q(carrier, kind, false) {
                Ok(got) => tally.expect(got == want, || format!("{name} n={n}: {got}, expected {want}")),
                Err(e) => tally.error(e),
            }
        }
        if is_prime(n) {
            for t in 2..n {
                match zni(n, t, t) {
                    Ok(g) => tally.expect(!holds_exhaustively(&g, IdentityId::Associative), || {
                        format!("Z_{n}I ({t}I,{t}I) is associative")
                    }),
                    Err(e) => tally.error(e),
                }
            }
        }
    }
    tally
}

fn t14(ctx: &Ctx) -> Tally {
    let mut tally = Tally::default();
    for n in moduli(ctx) {
        let res = Carrier::pure_neutrosophic(n).and_then(|c| {
            count_class(&ClassCountQuery {
                carrier: c,
                kind: ClassKind::IdempotentPairs,
                equal_pairs_included: true,
            })
        });
        match res {
            Ok(c) => tally.expect(c % 2 == n % 2, || format!("Z_{n}I: {c} idempotent pairs")),
            Err(e) => tally.error(e),
        }
    }
    tally
}

fn t15(ctx: &Ctx) -> Tally {
    let mut tally = Tally::default();
    for n in [4u64, 8] {
        for m in 1..n {
            for k in 1..n {
                if !is_prime(m + k) {
                    continue;
                }
                let res = (|| -> Result<Vec<SubsetHandle>> {
                    let g = Groupoid::build(GroupoidSpec::new(
                        Carrier::pure_neutrosophic(n)?,
                        Shape::Scalar,
                        Value::residue(m),
                        Value::residue(k),
                    )?)?;
                    subsets_where(&g, &ctx.budget, |s| is_left_ideal(&g, s) && is_right_ideal(&g, s))
                })();
                match res {
                    Ok(ideals) => tally.report(ideals.is_empty(), || format!("Z_{n}I ({m},{k}): proper ideals {:?}", ideals.iter().map(ToString::to_string).collect::<Vec<_>>())),
                    Err(e) => tally.error(e),
                }
            }
        }
    }
    tally
}

fn t16(ctx: &Ctx) -> Tally {
    let ns = moduli(ctx);
    let budget = ctx.budget;
    par_tally(&ns, |&n| {
        let mut tally = Tally::default();
        let shape = Shape::poly(2, ProductKind::Entrywise);
        let mut semigroups = Vec::new();
        for t in 1..n {
            let res = (|| -> Result<(bool, Method)> {
                let g = Groupoid::build(GroupoidSpec::modular(n, t, 0)?.with_shape(shape))?;
                let lifted = check_identity_with(&g, IdentityId::Associative, CheckMode::Auto, &budget)?;
                if let Ok(direct) = check_identity_with(&g, IdentityId::Associative, CheckMode::Exhaustive, &budget) {
                    if direct.status != lifted.status {
                        return Err(Error::Domain(format!("lifted and direct verdicts differ for t = {t}")));
                    }
                    return Ok((direct.holds(), Method::Exhaustive));
                }
                Ok((lifted.holds(), lifted.method))
            })();
            match res {
                Ok((holds, _)) => {
                    let idem = t * t % n == t;
                    tally.expect(holds == idem, || format!("Z_{n}[x] ({t},0): associative {holds}, t^2 = t {idem}"));
                    if holds {
                        semigroups.push(t);
                    }
                }
                Err(e) => tally.error(e),
            }
        }
        tally.expect(semigroups.contains(&1), || format!("Z_{n}[x]: (1,0) is not a semigroup"));
        if !is_prime(n) {
            let found = pairs(n)
                .filter(|&(t, u)| t != 0 && u != 0 && gcd(t, u) == 1)
                .find(|&(t, u)| zn(n, t, u).is_ok_and(|g| holds_exhaustively(&g, IdentityId::Associative)));
            tally.expect(found.is_some(), || format!("Z_{n}: no coprime nonzero pair gives a semigroup"));
        }
        tally
    })
}

fn t17(ctx: &Ctx) -> Tally {
    let ns = moduli(ctx);
    par_tally(&ns, |&n| {
        let mut tally = Tally::default();
        for (t, u) in pairs(n) {
            let res = (|| -> Result<bool> {
                let c = Carrier::mixed_neutrosophic(n)?;
                let g = Groupoid::build(GroupoidSpec::new(c, Shape::Scalar, Value::residue(t), Value::residue(u))?)?;
                // mixed values are enumerated as a*n + b, so the real ones sit at multiples of n
                let reals = SubsetHandle::from_indices((n * n) as usize, (0..n).map(|a| (a * n) as usize))?;
                let c = classify_subset(&g, &reals);
                Ok(c.closed && c.pseudo)
            })();
            match res {
                Ok(ok) => tally.expect(ok, || format!("N(Z_{n}) ({t},{u}): Z_{n} is not a closed pseudo subset")),
                Err(e) => tally.error(e),
            }
        }
        tally
    })
}

fn t18(ctx: &Ctx) -> Tally {
    let ns: Vec<u64> = moduli(ctx).into_iter().filter(|&n| is_prime(n)).collect();
    let budget = ctx.budget;
    par_tally(&ns, |&p| {
        let mut tally = Tally::default();
        for t in 1..p {
            match zni(p, t, t).and_then(|g| is_normal_groupoid_with(&g, &budget)) {
                Ok(ok) => tally.expect(ok, || format!("Z_{p}I ({t}I,{t}I) is not a normal groupoid")),
                Err(e) => tally.error(e),
            }
        }
        tally
    })
}

fn t19(ctx: &Ctx) -> Tally {
    let mut tally = Tally::default();
    for n in moduli(ctx) {
        for (t, u) in pairs(n).filter(|&(t, u)| t != 0 && u != 0) {
            match zn(n, t, u) {
                Ok(g) => {
                    let zero = SubsetHandle::from_indices(n as usize, [0]).expect("in range");
                    let c = classify_subset(&g, &zero);
                    tally.expect(!c.ideal, || format!("Z_{n} ({t},{u}): {{0}} is an ideal"));
                }
                Err(e) => tally.error(e),
            }
        }
    }
    tally
}

fn lift(ctx: &Ctx) -> Tally {
    let items: Vec<(u64, u64, IdentityId)> = pairs(3)
        .flat_map(|(t, u)| IdentityId::ALL.into_iter().map(move |id| (t, u, id)))
        .collect();
    let budget = ctx.budget;
    par_tally(&items, |&(t, u, id)| {
        let mut tally = Tally::default();
        let res = (|| -> Result<(bool, bool)> {
            let spec = GroupoidSpec::modular(3, t, u)?;
            let scalar = Groupoid::build(spec.clone())?;
            let matrix = Groupoid::build(spec.with_shape(Shape::matrix(2, 2)?))?;
            let s = check_identity_with(&scalar, id, CheckMode::Exhaustive, &budget)?;
            let m = check_identity_with(&matrix, id, CheckMode::Exhaustive, &budget)?;
            Ok((s.holds(), m.holds()))
        })();
        match res {
            Ok((s, m)) => tally.expect(s == m, || format!("Z_3 ({t},{u}) {id}: scalar {s}, 2x2 {m}")),
            Err(e) => tally.error(e),
        }
        tally
    })
}

fn sample(ctx: &Ctx) -> Tally {
    let mut tally = Tally::default();
    let cases = [(10, 5, 6, 12, 5, IdentityId::Moufang), (4, 2, 3, 5, 7, IdentityId::Bol), (12, 4, 9, 3, 8, IdentityId::Associative)];
    for (i, (n, t, u, r, c, id)) in cases.into_iter().enumerate() {
        let res = (|| -> Result<(bool, bool, Option<Vec<String>>)> {
            let spec = GroupoidSpec::modular(n, t, u)?.with_shape(Shape::matrix(r, c)?);
            let g = Groupoid::build(spec)?;
            let lifted = check_identity_with(&g, id, CheckMode::Auto, &ctx.budget)?;
            let mode = CheckMode::Sampled {
                trials: ctx.budget.sample_trials.min(2000),
                seed: ctx.seed.wrapping_add(i as u64),
            };
            let sampled = check_identity_with(&g, id, mode, &ctx.budget)?;
            Ok((lifted.holds(), sampled.fails(), sampled.witness))
        })();
        match res {
            Ok((holds, found, witness)) => {
                tally.expect(!(holds && found), || format!("Z_{n} {r}x{c} ({t},{u}) {id}: sampling found a counterexample to a lifted proof"));
                if found {
                    tally.note(format!("Z_{n} {r}x{c} ({t},{u}) {id}: sampled counterexample {}", witness.unwrap_or_default().join(" ; ")));
                }
            }
            Err(e) => tally.error(e),
        }
    }
    tally
}

// ---------------------------------------------------------------- suite

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSelection {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<NRange>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub checks: Vec<CheckSelection>,
    #[serde(default)]
    pub budgets: Budget,
    #[serde(default)]
    pub seed: u64,
}

impl SuiteConfig {
    /// Every registered check at its default range.
    pub fn default_suite(seed: u64) -> Self {
        SuiteConfig {
            checks: REGISTRY
                .iter()
                .map(|c| CheckSelection {
                    id: c.id.into(),
                    range: None,
                })
                .collect(),
            budgets: Budget::default(),
            seed,
        }
    }

    /// Keeps only the listed ids (case-insensitive); unknown ids are errors.
    pub fn only(mut self, ids: &[String]) -> Result<Self> {
        for id in ids {
            find(id)?;
        }
        self.checks.retain(|c| ids.iter().any(|i| i.trim().eq_ignore_ascii_case(&c.id)));
        Ok(self)
    }

    pub fn with_range(mut self, r: NRange) -> Self {
        for c in &mut self.checks {
            c.range = Some(r);
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    ReportedDisagreement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub title: String,
    pub tier: Tier,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub range: Option<NRange>,
    pub outcome: Outcome,
    pub instances: u64,
    pub failures: u64,
    pub disagreements: u64,
    /// First counterexamples (asserted checks).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<String>,
    /// First disagreements (report-only checks).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    /// Only failures of asserted checks count against the suite.
    pub fn blocks(&self) -> bool {
        self.tier == Tier::Asserted && self.outcome == Outcome::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub reported: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
    pub success: bool,
}

pub fn verify_theorem(id: &str, range: Option<NRange>, tier_override: Option<Tier>) -> Result<CheckReport> {
    verify_with(id, range, tier_override, &Budget::default(), 0)
}

fn verify_with(id: &str, range: Option<NRange>, tier_override: Option<Tier>, budget: &Budget, seed: u64) -> Result<CheckReport> {
    let def = find(id)?;
    let range = def.default_range.map(|d| range.unwrap_or(d));
    let ctx = Ctx {
        range,
        budget: *budget,
        seed,
    };
    CURRENT.with(|c| c.set(def.id));
    let tally = (def.run)(&ctx);
    let tier = tier_override.unwrap_or(def.tier);
    let outcome = if tally.failure_count > 0 {
        Outcome::Fail
    } else if tally.disagreement_count > 0 {
        Outcome::ReportedDisagreement
    } else {
        Outcome::Pass
    };
    Ok(CheckReport {
        id: def.id.into(),
        title: def.title.into(),
        tier,
        range,
        outcome,
        instances: tally.instances,
        failures: tally.failure_count,
        disagreements: tally.disagreement_count,
        counterexamples: tally.failures,
        details: tally.disagreements,
        notes: tally.notes,
    })
}

/// Runs the configured checks; the report keeps registry-independent config
/// order and never contains timing.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    for c in &config.checks {
        find(&c.id)?;
    }
    let run = |c: &CheckSelection| verify_with(&c.id, c.range, None, &config.budgets, config.seed);
    #[cfg(feature = "parallel")]
    let checks: Vec<CheckReport> = {
        use rayon::prelude::*;
        config.checks.par_iter().map(run).collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let checks: Vec<CheckReport> = config.checks.iter().map(run).collect::<Result<_>>()?;
    let count = |o: Outcome| checks.iter().filter(|c| c.outcome == o).count();
    let summary = Summary {
        passed: count(Outcome::Pass),
        failed: count(Outcome::Fail),
        reported: count(Outcome::ReportedDisagreement),
    };
    Ok(SuiteReport {
        success: !checks.iter().any(CheckReport::blocks),
        config: config.clone(),
        checks,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(c: Carrier, kind: ClassKind, eq: bool) -> u64 {
        count_class(&ClassCountQuery {
            carrier: c,
            kind,
            equal_pairs_included: eq,
        })
        .unwrap()
    }

    #[test]
    fn documented_counts() {
        assert_eq!(count(Carrier::pure_neutrosophic(3).unwrap(), ClassKind::AllPairs, false), 2);
        assert_eq!(count(Carrier::mixed_neutrosophic(3).unwrap(), ClassKind::AllPairs, false), 56);
        assert_eq!(count(Carrier::mixed_neutrosophic(4).unwrap(), ClassKind::AllPairs, false), 210);
        assert_eq!(count(Carrier::modular(4).unwrap(), ClassKind::LevelOnePairs, false), 6);
        assert_eq!(count(Carrier::pure_neutrosophic(6).unwrap(), ClassKind::IdempotentPairs, true), 4);
        assert_eq!(count(Carrier::pure_neutrosophic(9).unwrap(), ClassKind::IdempotentPairs, true), 7);
        assert_eq!(count(Carrier::pure_neutrosophic(9).unwrap(), ClassKind::IdempotentPairs, false), 6);
        assert!(count_class(&ClassCountQuery {
            carrier: Carrier::Rational,
            kind: ClassKind::AllPairs,
            equal_pairs_included: false
        })
        .is_err());
    }

    #[test]
    fn ranges_parse() {
        assert_eq!("n=3..30".parse::<NRange>().unwrap(), NRange::new(3, 30));
        assert!("n=9..3".parse::<NRange>().is_err());
        assert!("m=3..4".parse::<NRange>().is_err());
    }

    #[test]
    fn unknown_check() {
        assert!(matches!(verify_theorem("T99", None, None), Err(Error::UnknownCheck(_))));
        assert!(SuiteConfig::default_suite(0).only(&["T99".into()]).is_err());
    }

    #[test]
    fn empty_suite() {
        let cfg = SuiteConfig {
            checks: vec![],
            budgets: Budget::default(),
            seed: 0,
        };
        let r = run_suite(&cfg).unwrap();
        assert!(r.success && r.checks.is_empty());
    }

    #[test]
    fn small_checks_pass() {
        for id in ["T1", "T3", "T13", "T14", "T19", "EX-2.2.1"] {
            let r = verify_theorem(id, Some(NRange::new(3, 8)), None).unwrap();
            assert_eq!(r.outcome, Outcome::Pass, "{r:?}");
        }
        let r = verify_theorem("EX-2.1.20", None, None).unwrap();
        assert_eq!(r.outcome, Outcome::ReportedDisagreement);
        assert!(!r.blocks());
    }
}
