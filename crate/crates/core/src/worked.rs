//! Named worked examples with their expected output. Replaying one recomputes
//! every value through the library and compares against the golden text.

use serde::Serialize;

use crate::carrier::{Carrier, Value};
use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, GroupoidSpec};
use crate::identities::{check_identity, CheckMode, IdentityId};
use crate::shape::{Element, ProductKind, Shape};
use crate::structure::{enumerate_subgroupoids, is_closed, is_simple, smarandache_identity, Strategy, SubsetHandle};
use crate::theorems::{count_class, ClassCountQuery, ClassKind};
use crate::Budget;

pub struct WorkedExample {
    pub id: &'static str,
    pub title: &'static str,
    pub golden: &'static str,
    /// The reference values are known to be miscalculated; a mismatch is
    /// reported but not treated as a failure.
    pub errata: bool,
    run: fn() -> Result<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Replay {
    pub id: String,
    pub title: String,
    pub output: String,
    pub golden: String,
    pub matches: bool,
    pub errata: bool,
}

pub static EXAMPLES: &[WorkedExample] = &[
    WorkedExample {
        id: "1.1.1",
        title: "a simple groupoid of order 7 given by its table",
        golden: "\
*  a0 a1 a2 a3 a4 a5 a6
a0 a0 a4 a1 a5 a2 a6 a3
a1 a3 a0 a4 a1 a5 a2 a6
a2 a6 a3 a0 a4 a1 a5 a2
a3 a2 a6 a3 a0 a4 a1 a5
a4 a5 a2 a6 a3 a0 a4 a1
a5 a1 a5 a2 a6 a3 a0 a4
a6 a4 a1 a5 a2 a6 a3 a0
same as Z_7 (3,4) with a_k = k: yes
simple: yes
",
        errata: false,
        run: ex_1_1_1,
    },
    WorkedExample {
        id: "2.1.1",
        title: "1x3 row matrices over Z_4 with (2,3)",
        golden: "\
(3,2,1)*(1,0,3) = (1,0,3)
((3,2,1)*(1,0,3))*(0,2,2) = (2,2,0)
(3,2,1)*((1,0,3)*(0,2,2)) = (0,2,2)
associative: no
coprime pairs of distinct nonzero parameters over Z_4: 6
",
        errata: false,
        run: ex_2_1_1,
    },
    WorkedExample {
        id: "2.1.5",
        title: "5x1 column matrices over Z_12 with (2,3)",
        golden: "\
a = (10,2,0,0,1)^t, b = (3,2,11,0,0)^t, c = (1,0,9,2,0)^t
(a*b)*c = (1,8,9,6,4)^t
a*(b*c) = (11,4,3,6,2)^t
",
        errata: false,
        run: ex_2_1_5,
    },
    WorkedExample {
        id: "2.1.20",
        title: "1x7 row matrices over Z_21 with (8,8)",
        golden: "\
z*(x*y) = (19,11,6,19,1,14,18)
(z*x)*y = (19,16,14,3,1,7,4)
",
        errata: true,
        run: ex_2_1_20,
    },
    WorkedExample {
        id: "2.2.1",
        title: "shuffle product on polynomials of degree at most 4 over Z_5",
        golden: "\
f = 1 + 4x + 3x^2, g = 4 + x^3 + 4x^4, h = 1 + 4x + x^2 + 2x^3 + 3x^4
f*g = 3x^2
g*f = 1 + 4x^4
(f*g)*h = x^2
g*h = 1 + 3x^3 + 4x^4
f*(g*h) = 4x^2
",
        errata: false,
        run: ex_2_2_1,
    },
    WorkedExample {
        id: "2.3.8",
        title: "an interval subgroupoid of order 6 over Z_12 with (3,2)",
        golden: "\
P = {[0,0],[0,2],[0,4],[0,6],[0,8],[0,10]}
closed: yes
among the enumerated subgroupoids: yes
",
        errata: false,
        run: ex_2_3_8,
    },
    WorkedExample {
        id: "2.3.51",
        title: "idempotent interval groupoid over Z_8 with (4,5)",
        golden: "\
[0,a]*[0,a] = [0,9a] = [0,a] for every a in Z_8
idempotent: holds
",
        errata: false,
        run: ex_2_3_51,
    },
    WorkedExample {
        id: "2.5.20",
        title: "1x3 interval row matrices over Z_5 with (2,3)",
        golden: "\
A*B = [[0,4],[0,4],[0,0]]
associative: no
",
        errata: false,
        run: ex_2_5_20,
    },
    WorkedExample {
        id: "2.6.4",
        title: "Bol identity on 5x7 interval matrices over Z_4 with (2,3)",
        golden: "\
bol on all of G: fails at (x,y,z) = (1,0,0)
bol on 5x7 interval matrices: fails (lifted)
semigroup witness: {0,2}
smarandache bol: holds-on-semigroup-witness
",
        errata: false,
        run: ex_2_6_4,
    },
    WorkedExample {
        id: "2.6.5",
        title: "Moufang identity on 12x5 interval matrices over Z_10 with (5,6)",
        golden: "\
moufang on all of G: holds
moufang on 12x5 interval matrices: holds (lifted)
smarandache moufang: strong-holds
",
        errata: false,
        run: ex_2_6_5,
    },
    WorkedExample {
        id: "3.2.1",
        title: "the two groupoids on Z_3I",
        golden: "\
Z_3I (I,2I)
*  0  I  2I
0  0  2I I
I  I  0  2I
2I 2I I  0
Z_3I (2I,I)
*  0  I  2I
0  0  I  2I
I  2I 0  I
2I I  2I 0
groupoids on Z_3I: 2
",
        errata: false,
        run: ex_3_2_1,
    },
    WorkedExample {
        id: "3.2.4",
        title: "idempotent groupoids on Z_6I",
        golden: "\
Z_6I (2I,5I): xx = x for x = 0 I 2I 3I 4I 5I
idempotent: holds
idempotent pairs on Z_6I: (2I,5I) (3I,4I) (4I,3I) (5I,2I)
idempotent pairs on Z_9I: 7
Z_6I (3I,4I) associative: holds
",
        errata: false,
        run: ex_3_2_4,
    },
    WorkedExample {
        id: "3.2.7",
        title: "Z_5I with equal parameters (2I,2I)",
        golden: "\
*  0  I  2I 3I 4I
0  0  2I 4I I  3I
I  2I 4I I  3I 0
2I 4I I  3I 0  2I
3I I  3I 0  2I 4I
4I 3I 0  2I 4I I
(2I*3I)*4I = 3I
2I*(3I*4I) = 2I
associative: no
commutative: holds
",
        errata: false,
        run: ex_3_2_7,
    },
];

pub fn find(id: &str) -> Result<&'static WorkedExample> {
    EXAMPLES
        .iter()
        .find(|e| e.id == id.trim())
        .ok_or_else(|| Error::UnknownExample(id.to_string()))
}

pub fn replay(id: &str) -> Result<Replay> {
    let ex = find(id)?;
    let output = (ex.run)()?;
    Ok(Replay {
        id: ex.id.into(),
        title: ex.title.into(),
        matches: output == ex.golden,
        golden: ex.golden.into(),
        output,
        errata: ex.errata,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn tuple(e: &Element) -> String {
    let parts: Vec<String> = e.entries().iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn poly_text(e: &Element) -> String {
    let terms: Vec<String> = e
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let c = c.to_string();
            let coeff = if c == "1" && k > 0 { String::new() } else { c };
            match k {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{k}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Cayley table with padded columns and custom labels.
fn grid(g: &Groupoid, label: impl Fn(usize) -> String) -> String {
    let n = g.order().expect("finite");
    let w = (0..n).map(|i| label(i).len()).max().unwrap_or(1).max(2);
    let cell = |s: String| format!("{s:<w$}");
    let mut out = String::new();
    let mut row = vec![cell("*".into())];
    row.extend((0..n).map(|j| cell(label(j))));
    out.push_str(row.join(" ").trim_end());
    out.push('\n');
    for i in 0..n {
        let mut row = vec![cell(label(i))];
        row.extend((0..n).map(|j| cell(label(g.mul(i, j)))));
        out.push_str(row.join(" ").trim_end());
        out.push('\n');
    }
    out
}

fn zn(n: u64) -> Carrier {
    Carrier::modular(n).expect("valid modulus")
}

fn zni(n: u64) -> Carrier {
    Carrier::pure_neutrosophic(n).expect("valid modulus")
}

fn ex_1_1_1() -> Result<String> {
    const PRINTED: [[usize; 7]; 7] = [
        [0, 4, 1, 5, 2, 6, 3],
        [3, 0, 4, 1, 5, 2, 6],
        [6, 3, 0, 4, 1, 5, 2],
        [2, 6, 3, 0, 4, 1, 5],
        [5, 2, 6, 3, 0, 4, 1],
        [1, 5, 2, 6, 3, 0, 4],
        [4, 1, 5, 2, 6, 3, 0],
    ];
    let labels: Vec<String> = (0..7).map(|k| format!("a{k}")).collect();
    let table = Groupoid::from_table(labels.clone(), PRINTED.iter().map(|r| r.to_vec()).collect())?;
    let generated = Groupoid::build(GroupoidSpec::modular(7, 3, 4)?)?;
    let same = (0..7).all(|i| (0..7).all(|j| table.mul(i, j) == generated.mul(i, j)));
    let mut out = grid(&table, |i| labels[i].clone());
    out.push_str(&format!("same as Z_7 (3,4) with a_k = k: {}\n", yes(same)));
    out.push_str(&format!("simple: {}\n", yes(is_simple(&table)?.simple)));
    Ok(out)
}

fn ex_2_1_1() -> Result<String> {
    let c = zn(4);
    let shape = Shape::matrix(1, 3)?;
    let spec = GroupoidSpec::new(c, shape, Value::residue(2), Value::residue(3))?;
    let e = |v: &[i64]| Element::from_raw(c, shape, v);
    let (x, y, z) = (e(&[3, 2, 1])?, e(&[1, 0, 3])?, e(&[0, 2, 2])?);
    let xy = spec.star(&x, &y)?;
    let left = spec.star(&xy, &z)?;
    let right = spec.star(&x, &spec.star(&y, &z)?)?;
    let count = count_class(&ClassCountQuery {
        carrier: c,
        kind: ClassKind::LevelOnePairs,
        equal_pairs_included: false,
    })?;
    Ok(format!(
        "{x}*{y} = {xy}\n({x}*{y})*{z} = {left}\n{x}*({y}*{z}) = {right}\nassociative: {}\ncoprime pairs of distinct nonzero parameters over Z_4: {count}\n",
        yes(left == right),
        x = tuple(&x),
        y = tuple(&y),
        z = tuple(&z),
        xy = tuple(&xy),
        left = tuple(&left),
        right = tuple(&right),
    ))
}

fn ex_2_1_5() -> Result<String> {
    let c = zn(12);
    let shape = Shape::matrix(5, 1)?;
    let spec = GroupoidSpec::new(c, shape, Value::residue(2), Value::residue(3))?;
    let e = |v: &[i64]| Element::from_raw(c, shape, v);
    let (a, b, cc) = (e(&[10, 2, 0, 0, 1])?, e(&[3, 2, 11, 0, 0])?, e(&[1, 0, 9, 2, 0])?);
    let left = spec.star(&spec.star(&a, &b)?, &cc)?;
    let right = spec.star(&a, &spec.star(&b, &cc)?)?;
    Ok(format!(
        "a = {}^t, b = {}^t, c = {}^t\n(a*b)*c = {}^t\na*(b*c) = {}^t\n",
        tuple(&a),
        tuple(&b),
        tuple(&cc),
        tuple(&left),
        tuple(&right)
    ))
}

fn ex_2_1_20() -> Result<String> {
    let c = zn(21);
    let shape = Shape::matrix(1, 7)?;
    let spec = GroupoidSpec::new(c, shape, Value::residue(8), Value::residue(8))?;
    let e = |v: &[i64]| Element::from_raw(c, shape, v);
    let z = e(&[1, 1, 3, 2, 2, 0, 1])?;
    let x = e(&[3, 2, 0, 1, 20, 18, 7])?;
    let y = e(&[1, 20, 4, 0, 7, 17, 3])?;
    let left = spec.star(&z, &spec.star(&x, &y)?)?;
    let right = spec.star(&spec.star(&z, &x)?, &y)?;
    Ok(format!("z*(x*y) = {}\n(z*x)*y = {}\n", tuple(&left), tuple(&right)))
}

fn ex_2_2_1() -> Result<String> {
    let c = zn(5);
    let shape = Shape::poly(4, ProductKind::Shuffle);
    let spec = GroupoidSpec::new(c, shape, Value::residue(1), Value::residue(1))?;
    let e = |v: &[i64]| Element::from_raw(c, shape, v);
    let (f, g, h) = (e(&[1, 4, 3, 0, 0])?, e(&[4, 0, 0, 1, 4])?, e(&[1, 4, 1, 2, 3])?);
    let fg = spec.star(&f, &g)?;
    let gf = spec.star(&g, &f)?;
    let fg_h = spec.star(&fg, &h)?;
    let gh = spec.star(&g, &h)?;
    let f_gh = spec.star(&f, &gh)?;
    Ok(format!(
        "f = {}, g = {}, h = {}\nf*g = {}\ng*f = {}\n(f*g)*h = {}\ng*h = {}\nf*(g*h) = {}\n",
        poly_text(&f),
        poly_text(&g),
        poly_text(&h),
        poly_text(&fg),
        poly_text(&gf),
        poly_text(&fg_h),
        poly_text(&gh),
        poly_text(&f_gh)
    ))
}

fn ex_2_3_8() -> Result<String> {
    let c = zn(12).interval_of()?;
    let g = Groupoid::build(GroupoidSpec::new(c, Shape::Scalar, Value::residue(3), Value::residue(2))?)?;
    let p = SubsetHandle::from_indices(12, (0..12).step_by(2))?;
    let subs = enumerate_subgroupoids(&g, Strategy::PowerSet, &Budget::default())?;
    Ok(format!(
        "P = {{{}}}\nclosed: {}\namong the enumerated subgroupoids: {}\n",
        p.labels(&g).join(","),
        yes(is_closed(&g, &p)),
        yes(subs.contains(&p))
    ))
}

fn ex_2_3_51() -> Result<String> {
    let c = zn(8).interval_of()?;
    let g = Groupoid::build(GroupoidSpec::new(c, Shape::Scalar, Value::residue(4), Value::residue(5))?)?;
    let every = (0..8).all(|i| g.mul(i, i) == i && g.mul(i, i) == (9 * i) % 8);
    let v = check_identity(&g, IdentityId::Idempotent, CheckMode::Exhaustive)?;
    let mut out = String::new();
    if every {
        out.push_str("[0,a]*[0,a] = [0,9a] = [0,a] for every a in Z_8\n");
    }
    out.push_str(&format!("idempotent: {}\n", holds(v.holds())));
    Ok(out)
}

fn ex_2_5_20() -> Result<String> {
    let c = zn(5).interval_of()?;
    let shape = Shape::matrix(1, 3)?;
    let spec = GroupoidSpec::new(c, shape, Value::residue(2), Value::residue(3))?;
    let a = Element::from_raw(c, shape, &[1, 3, 2])?;
    let b = Element::from_raw(c, shape, &[4, 1, 2])?;
    let g = Groupoid::build(spec.clone())?;
    let assoc = check_identity(&g, IdentityId::Associative, CheckMode::Exhaustive)?;
    Ok(format!(
        "A*B = [{}]\nassociative: {}\n",
        spec.star(&a, &b)?.entries().iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
        yes(assoc.holds())
    ))
}

fn lifted_line(n: u64, t: u64, u: u64, rows: usize, cols: usize, id: IdentityId) -> Result<String> {
    let c = zn(n).interval_of()?;
    let spec = GroupoidSpec::new(c, Shape::matrix(rows, cols)?, Value::residue(t), Value::residue(u))?;
    let v = check_identity(&Groupoid::build(spec)?, id, CheckMode::Auto)?;
    Ok(format!("{id} on {rows}x{cols} interval matrices: {} (lifted)\n", holds(v.holds())))
}

fn ex_2_6_4() -> Result<String> {
    let g = Groupoid::build(GroupoidSpec::modular(4, 2, 3)?)?;
    let v = check_identity(&g, IdentityId::Bol, CheckMode::Exhaustive)?;
    let mut out = match &v.witness {
        Some(w) => format!("bol on all of G: fails at (x,y,z) = ({})\n", w.join(",")),
        None => "bol on all of G: holds\n".to_string(),
    };
    out.push_str(&lifted_line(4, 2, 3, 5, 7, IdentityId::Bol)?);
    let s = smarandache_identity(&g, Some(IdentityId::Bol))?;
    if let Some(w) = s.witness() {
        out.push_str(&format!("semigroup witness: {{{}}}\n", w.labels(&g).join(",")));
    }
    out.push_str(&format!("smarandache bol: {}\n", s.status_name()));
    Ok(out)
}

fn ex_2_6_5() -> Result<String> {
    let g = Groupoid::build(GroupoidSpec::modular(10, 5, 6)?)?;
    let v = check_identity(&g, IdentityId::Moufang, CheckMode::Exhaustive)?;
    let mut out = format!("moufang on all of G: {}\n", holds(v.holds()));
    out.push_str(&lifted_line(10, 5, 6, 12, 5, IdentityId::Moufang)?);
    let s = smarandache_identity(&g, Some(IdentityId::Moufang))?;
    out.push_str(&format!("smarandache moufang: {}\n", s.status_name()));
    Ok(out)
}

fn zni_groupoid(n: u64, t: u64, u: u64) -> Result<Groupoid> {
    Groupoid::build(GroupoidSpec::new(
        zni(n),
        Shape::Scalar,
        Value::indeterminate(t),
        Value::indeterminate(u),
    )?)
}

fn ex_3_2_1() -> Result<String> {
    let mut out = String::new();
    for (t, u) in [(1, 2), (2, 1)] {
        let g = zni_groupoid(3, t, u)?;
        out.push_str(&format!("Z_3I ({},{})\n", g.spec().unwrap().t, g.spec().unwrap().u));
        out.push_str(&grid(&g, |i| g.label(i)));
    }
    let count = count_class(&ClassCountQuery {
        carrier: zni(3),
        kind: ClassKind::AllPairs,
        equal_pairs_included: false,
    })?;
    out.push_str(&format!("groupoids on Z_3I: {count}\n"));
    Ok(out)
}

fn ex_3_2_4() -> Result<String> {
    let g = zni_groupoid(6, 2, 5)?;
    let fixed: Vec<String> = (0..6).filter(|&i| g.mul(i, i) == i).map(|i| g.label(i)).collect();
    let mut out = format!("Z_6I (2I,5I): xx = x for x = {}\n", fixed.join(" "));
    let v = check_identity(&g, IdentityId::Idempotent, CheckMode::Exhaustive)?;
    out.push_str(&format!("idempotent: {}\n", holds(v.holds())));
    let pairs: Vec<String> = (1..6u64)
        .flat_map(|t| (1..6u64).map(move |u| (t, u)))
        .filter(|(t, u)| (t + u) % 6 == 1)
        .map(|(t, u)| format!("({},{})", Value::indeterminate(t), Value::indeterminate(u)))
        .collect();
    out.push_str(&format!("idempotent pairs on Z_6I: {}\n", pairs.join(" ")));
    let nine = count_class(&ClassCountQuery {
        carrier: zni(9),
        kind: ClassKind::IdempotentPairs,
        equal_pairs_included: true,
    })?;
    out.push_str(&format!("idempotent pairs on Z_9I: {nine}\n"));
    let s = zni_groupoid(6, 3, 4)?;
    let a = check_identity(&s, IdentityId::Associative, CheckMode::Exhaustive)?;
    out.push_str(&format!("Z_6I (3I,4I) associative: {}\n", holds(a.holds())));
    Ok(out)
}

fn ex_3_2_7() -> Result<String> {
    let g = zni_groupoid(5, 2, 2)?;
    let mut out = grid(&g, |i| g.label(i));
    out.push_str(&format!("(2I*3I)*4I = {}\n", g.label(g.mul(g.mul(2, 3), 4))));
    out.push_str(&format!("2I*(3I*4I) = {}\n", g.label(g.mul(2, g.mul(3, 4)))));
    let a = check_identity(&g, IdentityId::Associative, CheckMode::Exhaustive)?;
    let c = check_identity(&g, IdentityId::Commutative, CheckMode::Exhaustive)?;
    out.push_str(&format!("associative: {}\ncommutative: {}\n", yes(a.holds()), holds(c.holds())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = EXAMPLES.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), EXAMPLES.len());
        assert!(matches!(replay("9.9.9"), Err(Error::UnknownExample(_))));
    }

    #[test]
    fn every_example_replays() {
        for ex in EXAMPLES {
            let r = replay(ex.id).unwrap();
            assert_eq!(r.matches, !ex.errata, "{}:\n{}", ex.id, r.output);
        }
    }
}
