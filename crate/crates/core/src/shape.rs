//! Composite elements over a carrier and the star products defined on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::carrier::{Carrier, Value};
use crate::error::{Error, Result};

/// Default cap on the number of elements an [`ElementSpace`] will enumerate.
pub const DEFAULT_ELEMENT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    /// `t p_i + u q_i` coefficient by coefficient.
    Entrywise,
    /// `(a_0 b_1, a_1 b_2, ..., a_{d-1} b_d, a_d)`, independent of `(t, u)`.
    Shuffle,
    /// `c_k = sum over i + j = k of (t a_i + u b_j)`, truncated at the max degree.
    Convolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Scalar,
    Matrix { rows: usize, cols: usize },
    Poly { max_deg: usize, product: ProductKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Projection {
    Liftable,
    NotLiftable,
}

impl Shape {
    pub fn matrix(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::shape(format!("matrix dimensions must be positive, got {rows}x{cols}")));
        }
        Ok(Shape::Matrix { rows, cols })
    }

    pub fn poly(max_deg: usize, product: ProductKind) -> Self {
        Shape::Poly { max_deg, product }
    }

    /// Number of carrier values per element.
    pub fn entry_count(self) -> usize {
        match self {
            Shape::Scalar => 1,
            Shape::Matrix { rows, cols } => rows * cols,
            Shape::Poly { max_deg, .. } => max_deg + 1,
        }
    }

    /// Whether star acts on each entry independently, so that identity
    /// verdicts transfer from the scalar groupoid.
    pub fn scalar_projection(self) -> Projection {
        match self {
            Shape::Scalar | Shape::Matrix { .. } => Projection::Liftable,
            Shape::Poly { product: ProductKind::Entrywise, .. } => Projection::Liftable,
            Shape::Poly { .. } => Projection::NotLiftable,
        }
    }

    pub fn is_liftable(self) -> bool {
        self.scalar_projection() == Projection::Liftable
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Scalar => write!(f, "scalar"),
            Shape::Matrix { rows, cols } => write!(f, "mat:{rows}x{cols}"),
            Shape::Poly { max_deg, product } => {
                let p = match product {
                    ProductKind::Entrywise => "entrywise",
                    ProductKind::Shuffle => "shuffle",
                    ProductKind::Convolution => "conv",
                };
                write!(f, "poly:{max_deg}:{p}")
            }
        }
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "scalar" {
            return Ok(Shape::Scalar);
        }
        let bad = || Error::parse(format!("bad shape `{s}`"));
        if let Some(dims) = s.strip_prefix("mat:") {
            let (r, c) = dims.split_once('x').ok_or_else(bad)?;
            return Shape::matrix(r.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?);
        }
        if let Some(rest) = s.strip_prefix("poly:") {
            let (d, kind) = rest.split_once(':').ok_or_else(bad)?;
            let product = match kind {
                "entrywise" => ProductKind::Entrywise,
                "shuffle" => ProductKind::Shuffle,
                "conv" => ProductKind::Convolution,
                _ => return Err(bad()),
            };
            return Ok(Shape::poly(d.parse().map_err(|_| bad())?, product));
        }
        Err(bad())
    }
}

impl Serialize for Shape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A value of a shaped groupoid: one carrier value per entry, matrices in
/// row-major order, polynomials from `x^0` upward.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    shape: Shape,
    entries: Vec<Value>,
}

impl Element {
    pub fn new(carrier: Carrier, shape: Shape, entries: Vec<Value>) -> Result<Self> {
        if entries.len() != shape.entry_count() {
            return Err(Error::shape(format!(
                "{shape} needs {} entries, got {}",
                shape.entry_count(),
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|v| !carrier.contains(v)) {
            return Err(Error::CarrierMismatch {
                carrier: carrier.to_string(),
                value: bad.to_string(),
            });
        }
        Ok(Element { shape, entries })
    }

    /// Builds an element from raw integer coefficients, reducing each entry.
    pub fn from_raw(carrier: Carrier, shape: Shape, raw: &[i64]) -> Result<Self> {
        let arity = carrier.arity();
        if raw.len() != shape.entry_count() * arity {
            return Err(Error::shape(format!(
                "{shape} over {carrier} needs {} coefficients, got {}",
                shape.entry_count() * arity,
                raw.len()
            )));
        }
        let entries = raw
            .chunks(arity)
            .map(|c| carrier.reduce(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Element { shape, entries })
    }

    pub fn constant(shape: Shape, v: Value) -> Self {
        Element {
            shape,
            entries: vec![v; shape.entry_count()],
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Value {
        &self.entries[i]
    }

    /// Parses the text form produced by `Display`.
    pub fn parse(carrier: Carrier, shape: Shape, s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Vec<Value> = match shape {
            Shape::Scalar => vec![carrier.parse_value(s)?],
            Shape::Poly { .. } => {
                let body = s
                    .strip_prefix("poly[")
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| Error::parse(format!("expected poly[...], got `{s}`")))?;
                split_top(body, ',')
                    .into_iter()
                    .map(|t| carrier.parse_value(t))
                    .collect::<Result<_>>()?
            }
            Shape::Matrix { rows, cols } => {
                let body = s
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| Error::parse(format!("expected [[..];[..]], got `{s}`")))?;
                let row_texts = split_top(body, ';');
                if row_texts.len() != rows {
                    return Err(Error::shape(format!("expected {rows} rows, got {}", row_texts.len())));
                }
                let mut out = Vec::with_capacity(rows * cols);
                for r in row_texts {
                    let inner = r
                        .trim()
                        .strip_prefix('[')
                        .and_then(|x| x.strip_suffix(']'))
                        .ok_or_else(|| Error::parse(format!("bad matrix row `{r}`")))?;
                    let cells = split_top(inner, ',');
                    if cells.len() != cols {
                        return Err(Error::shape(format!("expected {cols} columns, got {}", cells.len())));
                    }
                    for c in cells {
                        out.push(carrier.parse_value(c)?);
                    }
                }
                out
            }
        };
        Element::new(carrier, shape, entries)
    }
}

fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |vals: &[Value]| vals.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self.shape {
            Shape::Scalar => write!(f, "{}", self.entries[0]),
            Shape::Poly { .. } => write!(f, "poly[{}]", join(&self.entries)),
            Shape::Matrix { cols, .. } => {
                let rows: Vec<String> = self.entries.chunks(cols).map(|r| format!("[{}]", join(r))).collect();
                write!(f, "[{}]", rows.join(";"))
            }
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn linear(carrier: Carrier, t: &Value, u: &Value, a: &Value, b: &Value) -> Result<Value> {
    carrier.add(&carrier.scale(t, a)?, &carrier.scale(u, b)?)
}

/// The star product `x * y` for the given shape and parameter pair.
pub fn star(carrier: Carrier, shape: Shape, t: &Value, u: &Value, x: &Element, y: &Element) -> Result<Element> {
    for e in [x, y] {
        if e.shape != shape {
            return Err(Error::shape(format!("element of shape {} used with {shape}", e.shape)));
        }
    }
    let (a, b) = (&x.entries, &y.entries);
    let entries = match shape {
        Shape::Scalar | Shape::Matrix { .. } | Shape::Poly { product: ProductKind::Entrywise, .. } => a
            .iter()
            .zip(b)
            .map(|(p, q)| linear(carrier, t, u, p, q))
            .collect::<Result<Vec<_>>>()?,
        Shape::Poly { max_deg, product: ProductKind::Shuffle } => {
            let mut out = Vec::with_capacity(max_deg + 1);
            for i in 0..max_deg {
                out.push(carrier.mul(&a[i], &b[i + 1])?);
            }
            out.push(a[max_deg]);
            out
        }
        Shape::Poly { max_deg, product: ProductKind::Convolution } => {
            let mut out = vec![carrier.zero(); max_deg + 1];
            for (i, p) in a.iter().enumerate() {
                for (j, q) in b.iter().enumerate().take(max_deg + 1 - i) {
                    out[i + j] = carrier.add(&out[i + j], &linear(carrier, t, u, p, q)?)?;
                }
            }
            out
        }
    };
    Ok(Element { shape, entries })
}

/// Size of the element set of a shaped carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpaceSize {
    Finite(u64),
    TooLarge,
}

/// Enumerates `carrier^entries` in entry-lexicographic order (first entry
/// most significant).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementSpace {
    carrier: Carrier,
    shape: Shape,
    base: u64,
    size: SpaceSize,
}

impl ElementSpace {
    pub fn new(carrier: Carrier, shape: Shape, cap: u64) -> Result<Self> {
        let base = carrier.size().ok_or_else(|| Error::Unenumerable(carrier.to_string()))?;
        let size = u32::try_from(shape.entry_count())
            .ok()
            .and_then(|e| base.checked_pow(e))
            .filter(|&c| c <= cap)
            .map_or(SpaceSize::TooLarge, SpaceSize::Finite);
        Ok(ElementSpace { carrier, shape, base, size })
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Number of values per entry.
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn size(&self) -> SpaceSize {
        self.size
    }

    pub fn count(&self) -> Option<u64> {
        match self.size {
            SpaceSize::Finite(c) => Some(c),
            SpaceSize::TooLarge => None,
        }
    }

    /// Writes the carrier indices of element `idx` into `digits`.
    pub fn decode(&self, mut idx: u64, digits: &mut [u32]) {
        for d in digits.iter_mut().rev() {
            *d = (idx % self.base) as u32;
            idx /= self.base;
        }
    }

    pub fn encode(&self, digits: &[u32]) -> u64 {
        digits.iter().fold(0u64, |acc, &d| acc * self.base + u64::from(d))
    }

    pub fn element_at(&self, idx: u64) -> Element {
        let mut digits = vec![0u32; self.shape.entry_count()];
        self.decode(idx, &mut digits);
        self.element_from_digits(&digits)
    }

    pub fn element_from_digits(&self, digits: &[u32]) -> Element {
        Element {
            shape: self.shape,
            entries: digits.iter().map(|&d| self.carrier.value_at(u64::from(d))).collect(),
        }
    }

    pub fn digits_of(&self, e: &Element) -> Result<Vec<u32>> {
        if e.shape != self.shape {
            return Err(Error::shape(format!("element of shape {} used with {}", e.shape, self.shape)));
        }
        e.entries
            .iter()
            .map(|v| self.carrier.index_of(v).map(|i| i as u32))
            .collect()
    }

    pub fn index_of(&self, e: &Element) -> Result<u64> {
        Ok(self.encode(&self.digits_of(e)?))
    }

    /// All elements in index order; `None` when the space is too large.
    pub fn iter(&self) -> Option<impl Iterator<Item = Element> + '_> {
        let n = self.count()?;
        Some((0..n).map(move |i| self.element_at(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Carrier {
        Carrier::modular(n).unwrap()
    }

    fn el(c: Carrier, s: Shape, raw: &[i64]) -> Element {
        Element::from_raw(c, s, raw).unwrap()
    }

    #[test]
    fn row_matrix_star() {
        let s = Shape::matrix(1, 3).unwrap();
        let (t, u) = (Value::residue(2), Value::residue(3));
        let x = el(z(4), s, &[3, 2, 1]);
        let y = el(z(4), s, &[1, 0, 3]);
        assert_eq!(star(z(4), s, &t, &u, &x, &y).unwrap(), el(z(4), s, &[1, 0, 3]));
    }

    #[test]
    fn column_matrix_associator() {
        let c = z(12);
        let s = Shape::matrix(5, 1).unwrap();
        let (t, u) = (Value::residue(2), Value::residue(3));
        let a = el(c, s, &[10, 2, 0, 0, 1]);
        let b = el(c, s, &[3, 2, 11, 0, 0]);
        let cc = el(c, s, &[1, 0, 9, 2, 0]);
        let ab = star(c, s, &t, &u, &a, &b).unwrap();
        assert_eq!(star(c, s, &t, &u, &ab, &cc).unwrap(), el(c, s, &[1, 8, 9, 6, 4]));
        let bc = star(c, s, &t, &u, &b, &cc).unwrap();
        assert_eq!(star(c, s, &t, &u, &a, &bc).unwrap(), el(c, s, &[11, 4, 3, 6, 2]));
    }

    #[test]
    fn shuffle_products() {
        let c = z(5);
        let s = Shape::poly(4, ProductKind::Shuffle);
        let zero = Value::residue(0);
        let f = el(c, s, &[1, 4, 3, 0, 0]);
        let g = el(c, s, &[4, 0, 0, 1, 4]);
        let h = el(c, s, &[1, 4, 1, 2, 3]);
        let fg = star(c, s, &zero, &zero, &f, &g).unwrap();
        assert_eq!(fg, el(c, s, &[0, 0, 3, 0, 0]));
        assert_eq!(star(c, s, &zero, &zero, &g, &f).unwrap(), el(c, s, &[1, 0, 0, 0, 4]));
        assert_eq!(star(c, s, &zero, &zero, &fg, &h).unwrap(), el(c, s, &[0, 0, 1, 0, 0]));
        let gh = star(c, s, &zero, &zero, &g, &h).unwrap();
        assert_eq!(gh, el(c, s, &[1, 0, 0, 3, 4]));
        assert_eq!(star(c, s, &zero, &zero, &f, &gh).unwrap(), el(c, s, &[0, 0, 4, 0, 0]));
        // parameters play no role
        assert_eq!(star(c, s, &Value::residue(2), &Value::residue(3), &f, &g).unwrap(), fg);
    }

    #[test]
    fn interval_row_matrix() {
        let c = z(5).interval_of().unwrap();
        let s = Shape::matrix(1, 3).unwrap();
        let a = el(c, s, &[1, 3, 2]);
        let b = el(c, s, &[4, 1, 2]);
        let r = star(c, s, &Value::residue(2), &Value::residue(3), &a, &b).unwrap();
        assert_eq!(r.to_string(), "[[[0,4],[0,4],[0,0]]]");
    }

    #[test]
    fn convolution_sums_colliding_terms() {
        let c = z(7);
        let s = Shape::poly(2, ProductKind::Convolution);
        let (t, u) = (Value::residue(2), Value::residue(3));
        let x = el(c, s, &[1, 2, 3]);
        let y = el(c, s, &[4, 5, 6]);
        // brute force over all (i, j) with i + j <= 2
        let (a, b) = ([1i64, 2, 3], [4i64, 5, 6]);
        let mut want = [0i64; 3];
        for i in 0..3 {
            for j in 0..3 {
                if i + j <= 2 {
                    want[i + j] += 2 * a[i] + 3 * b[j];
                }
            }
        }
        assert_eq!(star(c, s, &t, &u, &x, &y).unwrap(), el(c, s, &want));
    }

    #[test]
    fn projection_parameters() {
        let c = Carrier::mixed_neutrosophic(3).unwrap();
        let s = Shape::matrix(2, 2).unwrap();
        let space = ElementSpace::new(c, s, 10_000).unwrap();
        let (one, zero) = (Value::residue(1), Value::residue(0));
        for i in (0..space.count().unwrap()).step_by(97) {
            let x = space.element_at(i);
            let y = space.element_at((i * 31 + 5) % space.count().unwrap());
            assert_eq!(star(c, s, &one, &zero, &x, &y).unwrap(), x);
        }
    }

    #[test]
    fn element_space_sizes() {
        assert_eq!(ElementSpace::new(z(3), Shape::matrix(2, 2).unwrap(), DEFAULT_ELEMENT_CAP).unwrap().count(), Some(81));
        let n4 = Carrier::mixed_neutrosophic(4).unwrap();
        assert_eq!(ElementSpace::new(n4, Shape::Scalar, DEFAULT_ELEMENT_CAP).unwrap().count(), Some(16));
        assert_eq!(
            ElementSpace::new(z(12), Shape::matrix(3, 8).unwrap(), DEFAULT_ELEMENT_CAP).unwrap().size(),
            SpaceSize::TooLarge
        );
        assert!(ElementSpace::new(Carrier::Rational, Shape::Scalar, 10).is_err());
    }

    #[test]
    fn element_space_order_is_entry_lexicographic() {
        let space = ElementSpace::new(z(4), Shape::matrix(1, 3).unwrap(), 100).unwrap();
        let all: Vec<Element> = space.iter().unwrap().collect();
        assert_eq!(all.len(), 64);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[6].to_string(), "[[0,1,2]]");
        for (i, e) in all.iter().enumerate() {
            assert_eq!(space.index_of(e).unwrap(), i as u64);
        }
    }

    #[test]
    fn projections() {
        assert_eq!(Shape::matrix(4, 3).unwrap().scalar_projection(), Projection::Liftable);
        assert_eq!(Shape::poly(7, ProductKind::Shuffle).scalar_projection(), Projection::NotLiftable);
        assert_eq!(Shape::poly(5, ProductKind::Entrywise).scalar_projection(), Projection::Liftable);
        assert_eq!(Shape::poly(5, ProductKind::Convolution).scalar_projection(), Projection::NotLiftable);
    }

    #[test]
    fn text_forms() {
        for s in ["scalar", "mat:2x3", "poly:4:shuffle", "poly:0:conv", "poly:2:entrywise"] {
            assert_eq!(s.parse::<Shape>().unwrap().to_string(), s);
        }
        assert!("mat:0x3".parse::<Shape>().is_err());
        assert!("poly:2:odd".parse::<Shape>().is_err());
        let c = z(7).interval_of().unwrap();
        let s = Shape::matrix(2, 2).unwrap();
        let e = el(c, s, &[1, 2, 3, 4]);
        assert_eq!(e.to_string(), "[[[0,1],[0,2]];[[0,3],[0,4]]]");
        assert_eq!(Element::parse(c, s, &e.to_string()).unwrap(), e);
        let p = Shape::poly(2, ProductKind::Shuffle);
        let n = Carrier::mixed_neutrosophic(3).unwrap();
        let e = el(n, p, &[1, 2, 0, 1, 2, 0]);
        assert_eq!(e.to_string(), "poly[1+2I,I,2]");
        assert_eq!(Element::parse(n, p, "poly[1+2I, I, 2]").unwrap(), e);
        assert!(Element::parse(n, p, "poly[1,2]").is_err());
    }
}
