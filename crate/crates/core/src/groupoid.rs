//! Groupoids from a parameter spec or an explicit table, and their Cayley tables.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::carrier::{Carrier, Residue, Value};
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::shape::{self, Element, ElementSpace, ProductKind, Shape};

/// Parameter-pair taxonomy: distinct primes, coprime, non-coprime, equal, one zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    One,
    Two,
    Three,
    Four,
    Five,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Level::One => "one",
            Level::Two => "two",
            Level::Three => "three",
            Level::Four => "four",
            Level::Five => "five",
        };
        f.write_str(s)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Integer content of a parameter: the residue `t` or the multiple `t` of `tI`.
fn integer_part(v: &Value) -> Option<u64> {
    match v {
        Value::Scalar(Residue { a, b: 0 }) | Value::Scalar(Residue { a: 0, b: a }) => Some(*a),
        Value::Rational(q) if q.is_integer() => Some(q.numer().unsigned_abs()),
        _ => None,
    }
}

fn content(v: &Value) -> Option<u64> {
    match v {
        Value::Scalar(r) | Value::Interval(r) => Some(r.a.gcd(&r.b)),
        Value::Rational(q) if q.is_integer() => Some(q.numer().unsigned_abs()),
        Value::Rational(_) => None,
    }
}

/// Derives the level of a parameter pair, `None` when it has no integer reading.
pub fn classify_pair(t: &Value, u: &Value) -> Option<Level> {
    match (t.is_zero(), u.is_zero()) {
        (true, true) => return None,
        (true, false) | (false, true) => return Some(Level::Five),
        _ => {}
    }
    if t == u {
        return Some(Level::Four);
    }
    let g = content(t)?.gcd(&content(u)?);
    if g != 1 {
        return Some(Level::Three);
    }
    let both_prime = integer_part(t).is_some_and(is_prime) && integer_part(u).is_some_and(is_prime);
    Some(if both_prime { Level::One } else { Level::Two })
}

/// Carrier, shape and parameter pair; determines the star operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupoidSpec {
    pub carrier: Carrier,
    pub shape: Shape,
    pub t: Value,
    pub u: Value,
    pub level: Option<Level>,
}

impl GroupoidSpec {
    /// Validates the parameters and records the derived level.
    pub fn new(carrier: Carrier, shape: Shape, t: Value, u: Value) -> Result<Self> {
        Self::with_level(carrier, shape, t, u, None)
    }

    /// Like [`GroupoidSpec::new`] but checks a caller-pinned level against the pair.
    pub fn with_level(carrier: Carrier, shape: Shape, t: Value, u: Value, pinned: Option<Level>) -> Result<Self> {
        for p in [&t, &u] {
            if !carrier.admits_param(p) {
                return Err(Error::Parameter {
                    carrier: carrier.to_string(),
                    param: p.to_string(),
                });
            }
        }
        if t.is_zero() && u.is_zero() {
            return Err(Error::ZeroPair);
        }
        let derived = classify_pair(&t, &u);
        if let Some(tag) = pinned {
            if derived != Some(tag) {
                return Err(Error::LevelMismatch {
                    tag: tag.to_string(),
                    t: t.to_string(),
                    u: u.to_string(),
                });
            }
        }
        Ok(GroupoidSpec {
            carrier,
            shape,
            t,
            u,
            level: derived,
        })
    }

    /// Shorthand for the scalar groupoid `Z_n(t, u)`.
    pub fn modular(n: u64, t: u64, u: u64) -> Result<Self> {
        let c = Carrier::modular(n)?;
        Self::new(c, Shape::Scalar, Value::residue(t % n), Value::residue(u % n))
    }

    /// The same carrier and parameters with a different shape.
    pub fn with_shape(&self, shape: Shape) -> GroupoidSpec {
        GroupoidSpec { shape, ..self.clone() }
    }

    /// The same shape and carrier with the parameters swapped.
    pub fn swapped(&self) -> GroupoidSpec {
        GroupoidSpec {
            t: self.u,
            u: self.t,
            level: classify_pair(&self.u, &self.t),
            ..self.clone()
        }
    }

    pub fn star(&self, x: &Element, y: &Element) -> Result<Element> {
        shape::star(self.carrier, self.shape, &self.t, &self.u, x, y)
    }
}

impl fmt::Display for GroupoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ({},{})", self.carrier, self.shape, self.t, self.u)
    }
}

/// Precomputed carrier-index arithmetic for fast star evaluation on digits.
#[derive(Debug)]
struct DigitKernel {
    size: usize,
    t_times: Vec<u32>,
    u_times: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
}

const KERNEL_MAX_CARRIER: u64 = 1024;
const MAX_ENTRIES: usize = 32;

impl DigitKernel {
    fn new(spec: &GroupoidSpec) -> Option<Self> {
        let c = spec.carrier;
        let size = c.size().filter(|&s| s <= KERNEL_MAX_CARRIER)? as usize;
        let vals = c.enumerate().ok()?;
        let idx = |v: Value| c.index_of(&v).expect("closed") as u32;
        let t_times = vals.iter().map(|v| idx(c.scale(&spec.t, v).expect("legal"))).collect();
        let u_times = vals.iter().map(|v| idx(c.scale(&spec.u, v).expect("legal"))).collect();
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for a in &vals {
            for b in &vals {
                add.push(idx(c.add(a, b).expect("closed")));
                mul.push(idx(c.mul(a, b).expect("closed")));
            }
        }
        Some(DigitKernel {
            size,
            t_times,
            u_times,
            add,
            mul,
        })
    }

    #[inline]
    fn lin(&self, a: u32, b: u32) -> u32 {
        self.add[self.t_times[a as usize] as usize * self.size + self.u_times[b as usize] as usize]
    }

    fn star(&self, shape: Shape, x: &[u32], y: &[u32], out: &mut [u32]) {
        match shape {
            Shape::Poly { max_deg, product: ProductKind::Shuffle } => {
                for i in 0..max_deg {
                    out[i] = self.mul[x[i] as usize * self.size + y[i + 1] as usize];
                }
                out[max_deg] = x[max_deg];
            }
            Shape::Poly { max_deg, product: ProductKind::Convolution } => {
                out.fill(0);
                for i in 0..=max_deg {
                    for j in 0..=(max_deg - i) {
                        let k = i + j;
                        out[k] = self.add[out[k] as usize * self.size + self.lin(x[i], y[j]) as usize];
                    }
                }
            }
            _ => {
                for i in 0..out.len() {
                    out[i] = self.lin(x[i], y[i]);
                }
            }
        }
    }
}

#[derive(Debug)]
enum Source {
    Spec {
        spec: GroupoidSpec,
        space: ElementSpace,
        kernel: Option<DigitKernel>,
    },
    Table {
        labels: Vec<String>,
    },
}

/// A finite or enumeration-capped groupoid. Elements are addressed by their
/// index in the canonical enumeration.
#[derive(Debug, Clone)]
pub struct Groupoid {
    inner: Arc<Inner>,
}

#[derive(Debug)]
struct Inner {
    source: Source,
    order: Option<usize>,
    table: Option<Vec<u32>>,
}

impl Groupoid {
    pub fn build(spec: GroupoidSpec) -> Result<Self> {
        Self::build_with(spec, &Budget::default())
    }

    pub fn build_with(spec: GroupoidSpec, budget: &Budget) -> Result<Self> {
        let spec = GroupoidSpec::with_level(spec.carrier, spec.shape, spec.t, spec.u, spec.level)?;
        if spec.carrier.size().is_none() {
            return Err(Error::Unenumerable(spec.carrier.to_string()));
        }
        let space = ElementSpace::new(spec.carrier, spec.shape, budget.element_cap)?;
        let order = space.count().map(|c| c as usize);
        let kernel = if spec.shape.entry_count() <= MAX_ENTRIES {
            DigitKernel::new(&spec)
        } else {
            None
        };
        let mut inner = Inner {
            source: Source::Spec { spec, space, kernel },
            order,
            table: None,
        };
        if let Some(n) = order.filter(|&n| n <= budget.table_cache) {
            inner.table = Some(compute_table(&inner, n));
        }
        Ok(Groupoid { inner: Arc::new(inner) })
    }

    /// Validates an explicit operation table over `labels`.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::shape("a groupoid needs at least one element"));
        }
        if table.len() != n {
            return Err(Error::shape(format!("{n} labels but {} table rows", table.len())));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::parse(format!("duplicate label `{dup}`")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, cells) in table.iter().enumerate() {
            if cells.len() != n {
                return Err(Error::shape(format!("row {row} has {} cells, expected {n}", cells.len())));
            }
            for (col, &value) in cells.iter().enumerate() {
                if value >= n {
                    return Err(Error::TableIndex {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
                flat.push(value as u32);
            }
        }
        Ok(Groupoid {
            inner: Arc::new(Inner {
                source: Source::Table { labels },
                order: Some(n),
                table: Some(flat),
            }),
        })
    }

    /// Number of elements, `None` when the element space exceeds the cap.
    pub fn order(&self) -> Option<usize> {
        self.inner.order
    }

    pub fn spec(&self) -> Option<&GroupoidSpec> {
        match &self.inner.source {
            Source::Spec { spec, .. } => Some(spec),
            Source::Table { .. } => None,
        }
    }

    pub fn space(&self) -> Option<&ElementSpace> {
        match &self.inner.source {
            Source::Spec { space, .. } => Some(space),
            Source::Table { .. } => None,
        }
    }

    /// Product of elements `i` and `j` by index. Requires a finite order.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let inner = &*self.inner;
        if let Some(t) = &inner.table {
            let n = inner.order.expect("tables are finite");
            return t[i * n + j] as usize;
        }
        inner.mul_uncached(i, j)
    }

    /// Element `i` of a spec-built groupoid.
    pub fn element(&self, i: usize) -> Option<Element> {
        self.space().map(|s| s.element_at(i as u64))
    }

    pub fn index_of(&self, e: &Element) -> Result<usize> {
        let space = self.space().ok_or_else(|| Error::shape("table groupoids have no element values"))?;
        Ok(space.index_of(e)? as usize)
    }

    /// Star on element values; works even when the order is capped.
    pub fn star_elements(&self, x: &Element, y: &Element) -> Result<Element> {
        match self.spec() {
            Some(spec) => spec.star(x, y),
            None => Err(Error::shape("table groupoids have no element values")),
        }
    }

    pub fn label(&self, i: usize) -> String {
        match &self.inner.source {
            Source::Spec { space, .. } => space.element_at(i as u64).to_string(),
            Source::Table { labels } => labels[i].clone(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order().unwrap_or(0)).map(|i| self.label(i)).collect()
    }

    /// Index of the all-zero element, which every star groupoid fixes.
    pub fn zero_index(&self) -> Option<usize> {
        self.spec().map(|_| 0)
    }

    pub fn is_neutrosophic(&self) -> bool {
        self.spec().is_some_and(|s| s.carrier.is_neutrosophic())
    }

    /// Whether every entry of element `i` is zero or a pure multiple of `I`,
    /// with at least one nonzero entry.
    pub fn is_pure_indeterminate(&self, i: usize) -> bool {
        match self.element(i) {
            Some(e) => {
                e.entries().iter().all(|v| v.is_zero() || v.is_pure_indeterminate())
                    && e.entries().iter().any(Value::is_pure_indeterminate)
            }
            None => false,
        }
    }

    /// Whether element `i` has any entry with a nonzero `I` coefficient.
    pub fn has_indeterminate(&self, i: usize) -> bool {
        self.element(i)
            .is_some_and(|e| e.entries().iter().any(|v| v.as_residue().is_some_and(|r| r.b != 0)))
    }

    /// The scalar groupoid with the same carrier and parameters.
    pub fn scalar_reduction(&self) -> Option<Result<Groupoid>> {
        self.spec().map(|s| Groupoid::build(s.with_shape(Shape::Scalar)))
    }

    pub fn cayley_table(&self, cap: usize) -> Result<CayleyTable> {
        let n = self.order().ok_or_else(|| Error::TooLarge {
            what: "Cayley table".into(),
            needed: "an unbounded order".into(),
            limit: cap as u64,
        })?;
        if n > cap {
            return Err(Error::TooLarge {
                what: "Cayley table".into(),
                needed: format!("order {n}"),
                limit: cap as u64,
            });
        }
        let table = (0..n).map(|i| (0..n).map(|j| self.mul(i, j)).collect()).collect();
        Ok(CayleyTable {
            labels: self.labels(),
            table,
        })
    }
}

impl fmt::Display for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.source {
            Source::Spec { spec, .. } => write!(f, "{spec}"),
            Source::Table { labels } => write!(f, "table groupoid of order {}", labels.len()),
        }
    }
}

impl Inner {
    fn mul_uncached(&self, i: usize, j: usize) -> usize {
        match &self.source {
            Source::Spec { spec, space, kernel } => {
                let e = spec.shape.entry_count();
                if let Some(k) = kernel {
                    let mut x = [0u32; MAX_ENTRIES];
                    let mut y = [0u32; MAX_ENTRIES];
                    let mut out = [0u32; MAX_ENTRIES];
                    space.decode(i as u64, &mut x[..e]);
                    space.decode(j as u64, &mut y[..e]);
                    k.star(spec.shape, &x[..e], &y[..e], &mut out[..e]);
                    return space.encode(&out[..e]) as usize;
                }
                let x = space.element_at(i as u64);
                let y = space.element_at(j as u64);
                let z = spec.star(&x, &y).expect("elements conform to their own spec");
                space.index_of(&z).expect("star is closed") as usize
            }
            Source::Table { .. } => unreachable!("table groupoids always carry their table"),
        }
    }
}

#[cfg(feature = "parallel")]
fn compute_table(inner: &Inner, n: usize) -> Vec<u32> {
    use rayon::prelude::*;
    let mut t = vec![0u32; n * n];
    t.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = inner.mul_uncached(i, j) as u32;
        }
    });
    t
}

#[cfg(not(feature = "parallel"))]
fn compute_table(inner: &Inner, n: usize) -> Vec<u32> {
    let mut t = vec![0u32; n * n];
    for (i, row) in t.chunks_mut(n).enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = inner.mul_uncached(i, j) as u32;
        }
    }
    t
}

/// Operation table with element labels; `table[i][j]` indexes `labels`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn to_groupoid(&self) -> Result<Groupoid> {
        Groupoid::from_table(self.labels.clone(), self.table.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables always serialise")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse(e.to_string()))
    }

    /// Header `*` followed by the labels, then one row per element: its
    /// label and the labels of its products.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push('*');
        for l in &self.labels {
            out.push('\t');
            out.push_str(l);
        }
        out.push('\n');
        for (i, row) in self.table.iter().enumerate() {
            out.push_str(&self.labels[i]);
            for &c in row {
                out.push('\t');
                out.push_str(&self.labels[c]);
            }
            out.push('\n');
        }
        out
    }

    pub fn from_tsv(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::parse("empty table"))?;
        let mut cols = header.split('\t');
        if cols.next().map(str::trim) != Some("*") {
            return Err(Error::parse("TSV header must start with `*`"));
        }
        let labels: Vec<String> = cols.map(|c| c.trim().to_string()).collect();
        let index: std::collections::HashMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut table = Vec::with_capacity(labels.len());
        for (r, line) in lines.enumerate() {
            let mut cells = line.split('\t').map(str::trim);
            let head = cells.next().unwrap_or_default();
            if labels.get(r).map(String::as_str) != Some(head) {
                return Err(Error::parse(format!("row {r} is labelled `{head}`")));
            }
            let row = cells
                .map(|c| index.get(c).copied().ok_or_else(|| Error::parse(format!("unknown label `{c}` in row {r}"))))
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        Ok(CayleyTable { labels, table })
    }
}
