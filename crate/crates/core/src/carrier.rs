//! Scalar domains: modular integers `Z_n`, pure neutrosophic `Z_nI`,
//! mixed neutrosophic `N(Z_n)`, one-endpoint intervals `[0, a]` over any of
//! those, and an exact-rational domain for spot evaluation.
//!
//! Every finite scalar is stored as a pair `a + bI` reduced mod `n`, with
//! `I * I = I`. Modular values keep `b = 0`, pure neutrosophic values keep
//! `a = 0`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Upper bound on moduli so that `a * b` never overflows a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The three finite scalar domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseCarrier {
    Modular(u64),
    PureNeutrosophic(u64),
    MixedNeutrosophic(u64),
}

impl BaseCarrier {
    pub fn modulus(self) -> u64 {
        match self {
            BaseCarrier::Modular(n)
            | BaseCarrier::PureNeutrosophic(n)
            | BaseCarrier::MixedNeutrosophic(n) => n,
        }
    }

    pub fn size(self) -> u64 {
        match self {
            BaseCarrier::Modular(n) | BaseCarrier::PureNeutrosophic(n) => n,
            BaseCarrier::MixedNeutrosophic(n) => n * n,
        }
    }

    pub fn is_neutrosophic(self) -> bool {
        !matches!(self, BaseCarrier::Modular(_))
    }

    fn contains(self, r: Residue) -> bool {
        let n = self.modulus();
        if r.a >= n || r.b >= n {
            return false;
        }
        match self {
            BaseCarrier::Modular(_) => r.b == 0,
            BaseCarrier::PureNeutrosophic(_) => r.a == 0,
            BaseCarrier::MixedNeutrosophic(_) => true,
        }
    }

    fn admits_param(self, r: Residue) -> bool {
        let n = self.modulus();
        if r.a >= n || r.b >= n {
            return false;
        }
        match self {
            BaseCarrier::Modular(_) => r.b == 0,
            // a plain residue t or a pure multiple tI
            BaseCarrier::PureNeutrosophic(_) => r.a == 0 || r.b == 0,
            BaseCarrier::MixedNeutrosophic(_) => true,
        }
    }

    fn index_of(self, r: Residue) -> u64 {
        match self {
            BaseCarrier::Modular(_) => r.a,
            BaseCarrier::PureNeutrosophic(_) => r.b,
            BaseCarrier::MixedNeutrosophic(n) => r.a * n + r.b,
        }
    }

    fn residue_at(self, idx: u64) -> Residue {
        match self {
            BaseCarrier::Modular(_) => Residue::new(idx, 0),
            BaseCarrier::PureNeutrosophic(_) => Residue::new(0, idx),
            BaseCarrier::MixedNeutrosophic(n) => Residue::new(idx / n, idx % n),
        }
    }

    fn arity(self) -> usize {
        match self {
            BaseCarrier::MixedNeutrosophic(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for BaseCarrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseCarrier::Modular(n) => write!(f, "zn:{n}"),
            BaseCarrier::PureNeutrosophic(n) => write!(f, "zni:{n}"),
            BaseCarrier::MixedNeutrosophic(n) => write!(f, "nzn:{n}"),
        }
    }
}

/// A scalar domain. Intervals nest exactly once and never wrap the
/// rational domain; both rules hold by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Carrier {
    Base(BaseCarrier),
    Interval(BaseCarrier),
    Rational,
}

fn check_modulus(n: u64) -> Result<u64> {
    if !(2..=MAX_MODULUS).contains(&n) {
        return Err(Error::Domain(format!(
            "modulus must lie in 2..={MAX_MODULUS}, got {n}"
        )));
    }
    Ok(n)
}

impl Carrier {
    pub fn modular(n: u64) -> Result<Self> {
        Ok(Carrier::Base(BaseCarrier::Modular(check_modulus(n)?)))
    }

    pub fn pure_neutrosophic(n: u64) -> Result<Self> {
        Ok(Carrier::Base(BaseCarrier::PureNeutrosophic(check_modulus(n)?)))
    }

    pub fn mixed_neutrosophic(n: u64) -> Result<Self> {
        Ok(Carrier::Base(BaseCarrier::MixedNeutrosophic(check_modulus(n)?)))
    }

    /// Wraps a finite base carrier in the interval construction `o(C)`.
    pub fn interval_of(self) -> Result<Self> {
        match self {
            Carrier::Base(b) => Ok(Carrier::Interval(b)),
            Carrier::Interval(_) => Err(Error::Domain("intervals of intervals are not supported".into())),
            Carrier::Rational => Err(Error::Domain("the rational domain has no interval form".into())),
        }
    }

    pub fn base(self) -> Option<BaseCarrier> {
        match self {
            Carrier::Base(b) | Carrier::Interval(b) => Some(b),
            Carrier::Rational => None,
        }
    }

    pub fn modulus(self) -> Option<u64> {
        self.base().map(BaseCarrier::modulus)
    }

    /// Number of values, `None` for the rational domain.
    pub fn size(self) -> Option<u64> {
        self.base().map(BaseCarrier::size)
    }

    pub fn is_interval(self) -> bool {
        matches!(self, Carrier::Interval(_))
    }

    pub fn is_neutrosophic(self) -> bool {
        self.base().is_some_and(BaseCarrier::is_neutrosophic)
    }

    /// Number of raw integer coefficients `reduce` expects.
    pub fn arity(self) -> usize {
        match self {
            Carrier::Base(b) | Carrier::Interval(b) => b.arity(),
            Carrier::Rational => 2,
        }
    }

    pub fn zero(self) -> Value {
        match self {
            Carrier::Base(_) => Value::Scalar(Residue::ZERO),
            Carrier::Interval(_) => Value::Interval(Residue::ZERO),
            Carrier::Rational => Value::Rational(Ratio::from_integer(0)),
        }
    }

    pub fn contains(self, v: &Value) -> bool {
        match (self, v) {
            (Carrier::Base(b), Value::Scalar(r)) | (Carrier::Interval(b), Value::Interval(r)) => b.contains(*r),
            (Carrier::Rational, Value::Rational(_)) => true,
            _ => false,
        }
    }

    /// Whether `v` may be used as a star parameter over this carrier.
    pub fn admits_param(self, v: &Value) -> bool {
        match (self, v) {
            (Carrier::Base(b) | Carrier::Interval(b), Value::Scalar(r)) => b.admits_param(*r),
            (Carrier::Rational, Value::Rational(_)) => true,
            _ => false,
        }
    }

    fn mismatch(self, v: &Value) -> Error {
        Error::CarrierMismatch {
            carrier: self.to_string(),
            value: v.to_string(),
        }
    }

    fn expect(self, v: &Value) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(self.mismatch(v))
        }
    }

    /// Canonicalises raw integer coefficients into a value of this carrier.
    pub fn reduce(self, raw: &[i64]) -> Result<Value> {
        if raw.len() != self.arity() {
            return Err(Error::shape(format!(
                "{self} expects {} coefficient(s), got {}",
                self.arity(),
                raw.len()
            )));
        }
        match self {
            Carrier::Base(b) => Ok(Value::Scalar(reduce_base(b, raw))),
            Carrier::Interval(b) => Ok(Value::Interval(reduce_base(b, raw))),
            Carrier::Rational => {
                if raw[1] == 0 {
                    return Err(Error::Domain("zero denominator".into()));
                }
                Ok(Value::Rational(Ratio::new(raw[0], raw[1])))
            }
        }
    }

    pub fn add(self, x: &Value, y: &Value) -> Result<Value> {
        self.expect(x)?;
        self.expect(y)?;
        self.combine(x, y, Residue::add, |p, q| p.checked_add(&q))
    }

    pub fn mul(self, x: &Value, y: &Value) -> Result<Value> {
        self.expect(x)?;
        self.expect(y)?;
        self.combine(x, y, Residue::mul, |p, q| p.checked_mul(&q))
    }

    fn combine(
        self,
        x: &Value,
        y: &Value,
        fin: fn(Residue, Residue, u64) -> Residue,
        rat: fn(Ratio<i64>, Ratio<i64>) -> Option<Ratio<i64>>,
    ) -> Result<Value> {
        match (x, y) {
            (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(fin(*p, *q, self.modulus().unwrap_or(1)))),
            (Value::Interval(p), Value::Interval(q)) => {
                Ok(Value::Interval(fin(*p, *q, self.modulus().unwrap_or(1))))
            }
            (Value::Rational(p), Value::Rational(q)) => rat(*p, *q)
                .map(Value::Rational)
                .ok_or_else(|| Error::Domain("rational overflow".into())),
            _ => Err(self.mismatch(y)),
        }
    }

    /// Scalar action `c * a` of a star parameter on a carrier value.
    pub fn scale(self, c: &Value, a: &Value) -> Result<Value> {
        if !self.admits_param(c) {
            return Err(Error::Parameter {
                carrier: self.to_string(),
                param: c.to_string(),
            });
        }
        self.expect(a)?;
        match (c, a) {
            (Value::Scalar(c), Value::Scalar(r)) => Ok(Value::Scalar(c.mul(*r, self.modulus().unwrap_or(1)))),
            (Value::Scalar(c), Value::Interval(r)) => {
                Ok(Value::Interval(c.mul(*r, self.modulus().unwrap_or(1))))
            }
            (Value::Rational(c), Value::Rational(r)) => c
                .checked_mul(r)
                .map(Value::Rational)
                .ok_or_else(|| Error::Domain("rational overflow".into())),
            _ => Err(self.mismatch(a)),
        }
    }

    /// All values in lexicographic order of their canonical coefficients.
    pub fn enumerate(self) -> Result<Vec<Value>> {
        let size = self.size().ok_or_else(|| Error::Unenumerable(self.to_string()))?;
        Ok((0..size).map(|i| self.value_at(i)).collect())
    }

    /// Position of `v` in [`Carrier::enumerate`] order.
    pub fn index_of(self, v: &Value) -> Result<u64> {
        self.expect(v)?;
        match (self, v) {
            (Carrier::Base(b), Value::Scalar(r)) | (Carrier::Interval(b), Value::Interval(r)) => Ok(b.index_of(*r)),
            _ => Err(Error::Unenumerable(self.to_string())),
        }
    }

    /// Inverse of [`Carrier::index_of`]. Panics on the rational domain.
    pub fn value_at(self, idx: u64) -> Value {
        match self {
            Carrier::Base(b) => Value::Scalar(b.residue_at(idx)),
            Carrier::Interval(b) => Value::Interval(b.residue_at(idx)),
            Carrier::Rational => panic!("the rational domain is not enumerable"),
        }
    }

    pub fn coprimality_class(self, x: &Value, y: &Value) -> Result<CoprimalityClass> {
        self.expect(x)?;
        self.expect(y)?;
        let (p, q) = match (x, y) {
            (Value::Scalar(p), Value::Scalar(q)) | (Value::Interval(p), Value::Interval(q)) => (*p, *q),
            _ => return Err(Error::Domain("coprimality needs finite values".into())),
        };
        if p.is_zero() || q.is_zero() {
            return Err(Error::Domain("coprimality of zero is undefined".into()));
        }
        let content = [p.a, p.b, q.a, q.b].into_iter().fold(0u64, |g, c| g.gcd(&c));
        let pure = self.is_neutrosophic() && p.a == 0 && q.a == 0;
        Ok(CoprimalityClass {
            gcd_content: content,
            is_unit: content == 1,
            label: if pure { UnitLabel::I } else { UnitLabel::One },
        })
    }

    /// Parses a value in canonical text form: `a`, `bI`, `a+bI`, `[0,x]`, `p/q`.
    pub fn parse_value(self, s: &str) -> Result<Value> {
        let v = parse_value_text(s)?;
        // plain residues are accepted where an interval is expected only in bracket form
        if self.contains(&v) {
            return Ok(v);
        }
        match (self, &v) {
            (Carrier::Rational, Value::Scalar(r)) if r.b == 0 => {
                Ok(Value::Rational(Ratio::from_integer(r.a as i64)))
            }
            _ => Err(self.mismatch(&v)),
        }
    }

    /// Parses a star parameter; unlike values, parameters never carry brackets.
    pub fn parse_param(self, s: &str) -> Result<Value> {
        let v = parse_value_text(s)?;
        let v = match (self, v) {
            (Carrier::Rational, Value::Scalar(r)) if r.b == 0 => Value::Rational(Ratio::from_integer(r.a as i64)),
            (_, v) => v,
        };
        let v = match (self.modulus(), v) {
            (Some(n), Value::Scalar(r)) => Value::Scalar(Residue::new(r.a % n, r.b % n)),
            (_, v) => v,
        };
        if self.admits_param(&v) {
            Ok(v)
        } else {
            Err(Error::Parameter {
                carrier: self.to_string(),
                param: s.to_string(),
            })
        }
    }
}

fn reduce_base(b: BaseCarrier, raw: &[i64]) -> Residue {
    let n = b.modulus() as i64;
    let m = |x: i64| x.rem_euclid(n) as u64;
    match b {
        BaseCarrier::Modular(_) => Residue::new(m(raw[0]), 0),
        BaseCarrier::PureNeutrosophic(_) => Residue::new(0, m(raw[0])),
        BaseCarrier::MixedNeutrosophic(_) => Residue::new(m(raw[0]), m(raw[1])),
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Base(b) => write!(f, "{b}"),
            Carrier::Interval(b) => write!(f, "o({b})"),
            Carrier::Rational => write!(f, "q"),
        }
    }
}

impl FromStr for Carrier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" {
            return Ok(Carrier::Rational);
        }
        if let Some(inner) = s.strip_prefix("o(").and_then(|r| r.strip_suffix(')')) {
            return inner.parse::<Carrier>()?.interval_of();
        }
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("bad carrier `{s}`")))?;
        let n: u64 = n
            .parse()
            .map_err(|_| Error::parse(format!("bad modulus in `{s}`")))?;
        match kind {
            "zn" => Carrier::modular(n),
            "zni" => Carrier::pure_neutrosophic(n),
            "nzn" => Carrier::mixed_neutrosophic(n),
            _ => Err(Error::parse(format!("unknown carrier kind `{kind}`"))),
        }
    }
}

impl Serialize for Carrier {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Carrier {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `a + bI` with both coefficients reduced mod the carrier modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Residue {
    pub a: u64,
    pub b: u64,
}

impl Residue {
    pub const ZERO: Residue = Residue { a: 0, b: 0 };

    pub const fn new(a: u64, b: u64) -> Self {
        Residue { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn add(self, o: Residue, n: u64) -> Residue {
        Residue::new((self.a + o.a) % n, (self.b + o.b) % n)
    }

    /// `(a + bI)(c + dI) = ac + (ad + bc + bd)I`, using `I^2 = I`.
    pub fn mul(self, o: Residue, n: u64) -> Residue {
        let ac = self.a * o.a % n;
        let ad = self.a * o.b % n;
        let bc = self.b * o.a % n;
        let bd = self.b * o.b % n;
        Residue::new(ac, (ad + bc + bd) % n)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ind = |f: &mut fmt::Formatter<'_>, b: u64| {
            if b == 1 {
                write!(f, "I")
            } else {
                write!(f, "{b}I")
            }
        };
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => ind(f, b),
            (a, b) => {
                write!(f, "{a}+")?;
                ind(f, b)
            }
        }
    }
}

/// A carrier value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Scalar(Residue),
    /// The interval `[0, r]`.
    Interval(Residue),
    Rational(Ratio<i64>),
}

impl Value {
    pub const fn residue(a: u64) -> Value {
        Value::Scalar(Residue::new(a, 0))
    }

    pub const fn indeterminate(b: u64) -> Value {
        Value::Scalar(Residue::new(0, b))
    }

    pub const fn mixed(a: u64, b: u64) -> Value {
        Value::Scalar(Residue::new(a, b))
    }

    pub const fn interval(a: u64) -> Value {
        Value::Interval(Residue::new(a, 0))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(r) | Value::Interval(r) => r.is_zero(),
            Value::Rational(q) => *q.numer() == 0,
        }
    }

    /// The finite coefficients, or the interval's upper endpoint.
    pub fn as_residue(&self) -> Option<Residue> {
        match self {
            Value::Scalar(r) | Value::Interval(r) => Some(*r),
            Value::Rational(_) => None,
        }
    }

    /// Nonzero value whose real part is zero, e.g. `3I` or `[0, 2I]`.
    pub fn is_pure_indeterminate(&self) -> bool {
        self.as_residue().is_some_and(|r| r.a == 0 && r.b != 0)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(r) => write!(f, "{r}"),
            Value::Interval(r) => write!(f, "[0,{r}]"),
            Value::Rational(q) => {
                if *q.denom() == 1 {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_uint(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(format!("expected a nonnegative integer, got `{s}`")))
}

fn parse_indet(s: &str) -> Result<u64> {
    let coeff = s.trim().strip_suffix('I').ok_or_else(|| Error::parse(format!("`{s}` lacks I")))?;
    if coeff.is_empty() {
        Ok(1)
    } else {
        parse_uint(coeff)
    }
}

fn parse_residue(s: &str) -> Result<Residue> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('+') {
        return Ok(Residue::new(parse_uint(a)?, parse_indet(b)?));
    }
    if s.ends_with('I') {
        Ok(Residue::new(0, parse_indet(s)?))
    } else {
        Ok(Residue::new(parse_uint(s)?, 0))
    }
}

fn parse_value_text(s: &str) -> Result<Value> {
    let s = s.trim();
    if let Some(body) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let (lo, hi) = body
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("bad interval `{s}`")))?;
        if lo.trim() != "0" {
            return Err(Error::parse(format!("intervals must start at 0, got `{s}`")));
        }
        return Ok(Value::Interval(parse_residue(hi)?));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| Error::parse(format!("bad numerator in `{s}`")))?;
        let q: i64 = q.trim().parse().map_err(|_| Error::parse(format!("bad denominator in `{s}`")))?;
        if q == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        return Ok(Value::Rational(Ratio::new(p, q)));
    }
    if let Some(neg) = s.strip_prefix('-') {
        let p: i64 = neg.parse().map_err(|_| Error::parse(format!("bad value `{s}`")))?;
        return Ok(Value::Rational(Ratio::from_integer(-p)));
    }
    Ok(Value::Scalar(parse_residue(s)?))
}

/// Which unit a coprime pair reduces to: `1`, or `I` for two pure
/// neutrosophic values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UnitLabel {
    #[serde(rename = "1")]
    One,
    I,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoprimalityClass {
    pub gcd_content: u64,
    pub is_unit: bool,
    pub label: UnitLabel,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Carrier {
        Carrier::modular(n).unwrap()
    }
    fn zi(n: u64) -> Carrier {
        Carrier::pure_neutrosophic(n).unwrap()
    }
    fn nz(n: u64) -> Carrier {
        Carrier::mixed_neutrosophic(n).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(z(4).reduce(&[7]).unwrap(), Value::residue(3));
        assert_eq!(nz(3).reduce(&[4, 6]).unwrap(), Value::mixed(1, 0));
        assert_eq!(z(8).interval_of().unwrap().reduce(&[9]).unwrap(), Value::interval(1));
        assert_eq!(z(5).reduce(&[-1]).unwrap(), Value::residue(4));
        assert!(matches!(nz(3).reduce(&[1]), Err(Error::Shape(_))));
        assert_eq!(
            Carrier::Rational.reduce(&[6, -4]).unwrap(),
            Value::Rational(Ratio::new(-3, 2))
        );
    }

    #[test]
    fn addition() {
        let c = zi(6);
        assert_eq!(c.add(&Value::indeterminate(2), &Value::indeterminate(5)).unwrap(), Value::indeterminate(1));
        assert!(nz(3).add(&Value::mixed(1, 1), &Value::mixed(2, 2)).unwrap().is_zero());
        let o5 = z(5).interval_of().unwrap();
        assert_eq!(o5.add(&Value::interval(1), &Value::interval(3)).unwrap(), Value::interval(4));
        assert!(matches!(
            z(5).add(&Value::residue(1), &Value::indeterminate(1)),
            Err(Error::CarrierMismatch { .. })
        ));
    }

    #[test]
    fn multiplication_uses_idempotent_indeterminate() {
        assert_eq!(zi(6).mul(&Value::indeterminate(2), &Value::indeterminate(2)).unwrap(), Value::indeterminate(4));
        assert_eq!(nz(3).mul(&Value::mixed(1, 1), &Value::mixed(1, 1)).unwrap(), Value::residue(1));
        for n in 2..9 {
            let c = zi(n);
            assert_eq!(c.mul(&Value::indeterminate(1), &Value::indeterminate(1)).unwrap(), Value::indeterminate(1));
            for x in z(n).enumerate().unwrap() {
                assert_eq!(z(n).mul(&Value::residue(1), &x).unwrap(), x);
            }
        }
    }

    #[test]
    fn scaling() {
        assert_eq!(z(12).scale(&Value::residue(2), &Value::residue(10)).unwrap(), Value::residue(8));
        assert_eq!(zi(7).scale(&Value::indeterminate(3), &Value::indeterminate(4)).unwrap(), Value::indeterminate(5));
        assert_eq!(zi(7).scale(&Value::residue(3), &Value::indeterminate(4)).unwrap(), Value::indeterminate(5));
        for c in [z(5), zi(5), nz(5), z(5).interval_of().unwrap()] {
            for x in c.enumerate().unwrap() {
                assert!(c.scale(&Value::residue(0), &x).unwrap().is_zero());
            }
        }
        assert!(matches!(
            z(5).scale(&Value::indeterminate(1), &Value::residue(1)),
            Err(Error::Parameter { .. })
        ));
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(z(3).enumerate().unwrap(), vec![Value::residue(0), Value::residue(1), Value::residue(2)]);
        let labels: Vec<String> = zi(3).enumerate().unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(labels, ["0", "I", "2I"]);
        let labels: Vec<String> = nz(2).enumerate().unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(labels, ["0", "I", "1", "1+I"]);
        assert_eq!(nz(4).size(), Some(16));
        assert!(matches!(Carrier::Rational.enumerate(), Err(Error::Unenumerable(_))));
    }

    #[test]
    fn coprimality() {
        let c = zi(25).coprimality_class(&Value::indeterminate(8), &Value::indeterminate(9)).unwrap();
        assert!(c.is_unit);
        assert_eq!(c.label, UnitLabel::I);
        let c = nz(11).coprimality_class(&Value::mixed(2, 1), &Value::indeterminate(7)).unwrap();
        assert!(c.is_unit);
        assert_eq!(c.label, UnitLabel::One);
        let c = z(8).coprimality_class(&Value::residue(2), &Value::residue(4)).unwrap();
        assert_eq!(c.gcd_content, 2);
        assert!(!c.is_unit);
        assert!(matches!(
            z(8).coprimality_class(&Value::residue(0), &Value::residue(4)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn nesting_rules() {
        let o = z(4).interval_of().unwrap();
        assert!(o.interval_of().is_err());
        assert!(Carrier::Rational.interval_of().is_err());
        assert_eq!(o.size(), Some(4));
        assert_eq!(Carrier::Rational.size(), None);
    }

    #[test]
    fn text_round_trip() {
        for s in ["zn:7", "zni:4", "nzn:3", "o(zn:12)", "o(zni:5)", "o(nzn:2)", "q"] {
            let c: Carrier = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert!("o(o(zn:3))".parse::<Carrier>().is_err());
        assert!("zn:1".parse::<Carrier>().is_err());
        assert!("zz:4".parse::<Carrier>().is_err());
        for c in [nz(4), zi(5), z(6).interval_of().unwrap(), nz(3).interval_of().unwrap()] {
            for v in c.enumerate().unwrap() {
                assert_eq!(c.parse_value(&v.to_string()).unwrap(), v);
            }
        }
        assert_eq!(Carrier::Rational.parse_value("-6/4").unwrap().to_string(), "-3/2");
        assert_eq!(zi(5).parse_param("3").unwrap(), Value::residue(3));
        assert_eq!(zi(5).parse_param("3I").unwrap(), Value::indeterminate(3));
        assert!(zi(5).parse_param("1+I").is_err());
        assert_eq!(z(5).parse_param("7").unwrap(), Value::residue(2));
    }

    #[test]
    fn rational_arithmetic() {
        let q = Carrier::Rational;
        let a = q.parse_value("5/7").unwrap();
        let b = q.parse_value("-2/3").unwrap();
        assert_eq!(q.add(&a, &b).unwrap().to_string(), "1/21");
        assert_eq!(q.mul(&a, &b).unwrap().to_string(), "-10/21");
        assert_eq!(q.scale(&Value::Rational(Ratio::from_integer(7)), &a).unwrap().to_string(), "5");
        let big = Value::Rational(Ratio::from_integer(i64::MAX / 2));
        assert!(q.mul(&big, &big).is_err());
    }
}
