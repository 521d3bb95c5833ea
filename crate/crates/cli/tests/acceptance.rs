// End-to-end acceptance criteria. Runs without the libtest harness so every
// criterion prints exactly one PASS/FAIL line in plain `cargo test` output.

use std::process::Command;
use std::time::{Duration, Instant};

use ggl_core::identities::{check_identity_with, CheckMode, IdentityId};
use ggl_core::structure::{identity_holds_on, is_semigroup, is_simple, smarandache_identity, SmarandacheStatus};
use ggl_core::theorems::{count_class, verify_theorem, ClassCountQuery, ClassKind, NRange, Outcome};
use ggl_core::{worked, Budget, Carrier, Groupoid, GroupoidSpec, Shape};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("{what} took {took:.2?}, limit {limit:?}"))
}

fn zn(n: u64, t: u64, u: u64) -> Groupoid {
    Groupoid::build(GroupoidSpec::modular(n, t, u).unwrap()).unwrap()
}

fn must_pass(id: &str, range: Option<NRange>) -> Result<u64, String> {
    let r = verify_theorem(id, range, None).map_err(|e| e.to_string())?;
    ensure(r.outcome == Outcome::Pass, format!("{id}: {:?} {:?}", r.outcome, r.counterexamples))?;
    Ok(r.instances)
}

fn golden_examples() -> Check {
    let expect: [(&str, &[&str]); 4] = [
        ("2.1.1", &["(3,2,1)*(1,0,3) = (1,0,3)", "= (2,2,0)", "= (0,2,2)", "associative: no"]),
        ("2.1.5", &["(a*b)*c = (1,8,9,6,4)^t", "a*(b*c) = (11,4,3,6,2)^t"]),
        ("2.2.1", &["f*g = 3x^2\n", "g*f = 1 + 4x^4\n", "(f*g)*h = x^2\n", "f*(g*h) = 4x^2\n"]),
        ("2.5.20", &["A*B = [[0,4],[0,4],[0,0]]"]),
    ];
    for (id, lines) in expect {
        let start = Instant::now();
        let r = worked::replay(id).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(1), id)?;
        ensure(r.matches, format!("{id} differs from its reference"))?;
        for l in lines {
            ensure(r.output.contains(l), format!("{id} output lacks `{l}`"))?;
        }
    }
    // the first product of the row-matrix example, by hand over Z_4 with (2, 3)
    let by_hand: Vec<u64> = [3u64, 2, 1].iter().zip([1u64, 0, 3]).map(|(x, y)| (2 * x + 3 * y) % 4).collect();
    ensure(by_hand == [1, 0, 3], "hand oracle")?;
    Ok("four worked examples match exactly".into())
}

/// The 7x7 table as printed, row by row, subscripts only.
const PRINTED: [[usize; 7]; 7] = [
    [0, 4, 1, 5, 2, 6, 3],
    [3, 0, 4, 1, 5, 2, 6],
    [6, 3, 0, 4, 1, 5, 2],
    [2, 6, 3, 0, 4, 1, 5],
    [5, 2, 6, 3, 0, 4, 1],
    [1, 5, 2, 6, 3, 0, 4],
    [4, 1, 5, 2, 6, 3, 0],
];

fn printed_table() -> Groupoid {
    let labels = (0..7).map(|i| format!("a{i}")).collect();
    Groupoid::from_table(labels, PRINTED.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn order_seven_table() -> Check {
    let start = Instant::now();
    let g = zn(7, 3, 4);
    for (i, row) in PRINTED.iter().enumerate() {
        for (j, &cell) in row.iter().enumerate() {
            ensure(g.mul(i, j) == cell, format!("cell ({i},{j}) = {}, printed {cell}", g.mul(i, j)))?;
        }
    }
    let v = is_simple(&printed_table()).map_err(|e| e.to_string())?;
    ensure(v.simple && v.complete, "printed table is not simple")?;
    within(start, Duration::from_secs(1), "table and simplicity")?;
    Ok("49 cells match; simple".into())
}

fn iff_sweeps() -> Check {
    let start = Instant::now();
    let r = Some(NRange::new(3, 16));
    let a = must_pass("T2", r)?;
    let b = must_pass("T1", r)?;
    within(start, Duration::from_secs(30), "sweeps")?;
    Ok(format!("{} groupoids, zero disagreements", a + b))
}

fn equal_pair_laws() -> Check {
    let a = must_pass("T3", Some(NRange::new(3, 16)))?;
    let b = must_pass("T4", Some(NRange::new(2, 23)))?;
    Ok(format!("{a} P-identity and {b} non-alternative instances"))
}

fn ideal_duality() -> Check {
    let start = Instant::now();
    let n = must_pass("T7", Some(NRange::new(3, 12)))?;
    within(start, Duration::from_secs(120), "duality sweep")?;
    Ok(format!("{n} pairs, identical ideal sets"))
}

fn simplicity() -> Check {
    for (n, t, u) in [(5, 2, 3), (7, 2, 5), (13, 2, 11)] {
        let v = is_simple(&zn(n, t, u)).map_err(|e| e.to_string())?;
        ensure(v.simple, format!("Z_{n}({t},{u}) not simple"))?;
    }
    ensure(is_simple(&printed_table()).unwrap().simple, "table groupoid not simple")?;
    let v = is_simple(&zn(8, 2, 6)).map_err(|e| e.to_string())?;
    ensure(!v.simple, "Z_8(2,6) reported simple")?;
    let r = verify_theorem("T9", Some(NRange::new(8, 8)), None).map_err(|e| e.to_string())?;
    ensure(r.outcome != Outcome::Fail, "order-n/t check crashed")?;
    let mut msg = "three primes and the table simple; Z_8(2,6) not simple".to_string();
    if !r.details.is_empty() {
        msg += &format!(" [report-only disagreement: {}]", r.details.join("; "));
    }
    Ok(msg)
}

fn smarandache() -> Check {
    let strong = |g: &Groupoid, id| -> Result<(), String> {
        let v = smarandache_identity(g, Some(id)).map_err(|e| e.to_string())?;
        let SmarandacheStatus::StrongHolds(w) = &v.status else {
            return Err(format!("{g} {id}: {}", v.status_name()));
        };
        ensure(is_semigroup(g, w) && w.is_proper(), format!("{g}: witness {w} is not a proper semigroup"))
    };
    strong(&zn(10, 5, 6), IdentityId::Moufang)?;
    strong(&zn(6, 4, 3), IdentityId::PIdentity)?;
    let g = zn(14, 7, 8);
    strong(&g, IdentityId::LeftAlternative)?;
    strong(&g, IdentityId::RightAlternative)?;
    let g = zn(4, 2, 3);
    let v = smarandache_identity(&g, Some(IdentityId::Bol)).map_err(|e| e.to_string())?;
    let SmarandacheStatus::HoldsOnSemigroupWitness(w) = &v.status else {
        return Err(format!("Z_4(2,3) Bol: {}", v.status_name()));
    };
    ensure(w.indices() == [0, 2], format!("Z_4(2,3) witness {w}"))?;
    ensure(is_semigroup(&g, w) && identity_holds_on(&g, IdentityId::Bol, w), "witness does not re-validate")?;
    Ok("four groupoids, all witnesses re-validated".into())
}

fn counting() -> Check {
    let start = Instant::now();
    let q = |c: ggl_core::Result<Carrier>, kind, eq| {
        count_class(&ClassCountQuery {
            carrier: c.unwrap(),
            kind,
            equal_pairs_included: eq,
        })
        .unwrap()
    };
    let got = [
        q(Carrier::pure_neutrosophic(3), ClassKind::AllPairs, false),
        q(Carrier::mixed_neutrosophic(3), ClassKind::AllPairs, false),
        q(Carrier::mixed_neutrosophic(4), ClassKind::AllPairs, false),
        q(Carrier::modular(4), ClassKind::LevelOnePairs, false),
        q(Carrier::pure_neutrosophic(6), ClassKind::IdempotentPairs, true),
        q(Carrier::pure_neutrosophic(9), ClassKind::IdempotentPairs, true),
    ];
    ensure(got == [2, 56, 210, 6, 4, 7], format!("counts {got:?}"))?;
    for n in 3..=50 {
        // oracle: t + u = 1 over 1..n-1, counted on integers
        let c = (1..n).flat_map(|t| (1..n).map(move |u| (t, u))).filter(|(t, u)| (t + u) % n == 1).count() as u64;
        let lib = q(Carrier::pure_neutrosophic(n), ClassKind::IdempotentPairs, true);
        ensure(c == lib && c % 2 == n % 2, format!("n={n}: {lib} vs {c}"))?;
    }
    within(start, Duration::from_secs(5), "counting")?;
    Ok(format!("counts {got:?}; parity holds for n in 3..=50"))
}

fn lifting() -> Check {
    let start = Instant::now();
    let budget = Budget::default();
    let mut n = 0;
    for t in 0..3 {
        for u in 0..3 {
            if t == 0 && u == 0 {
                continue;
            }
            let spec = GroupoidSpec::modular(3, t, u).unwrap();
            let scalar = Groupoid::build(spec.clone()).unwrap();
            let lifted = Groupoid::build(spec.with_shape(Shape::matrix(2, 2).unwrap())).unwrap();
            ensure(lifted.order() == Some(81), "2x2 over Z_3 should have 81 elements")?;
            for id in IdentityId::ALL {
                let s = check_identity_with(&scalar, id, CheckMode::Exhaustive, &budget).map_err(|e| e.to_string())?;
                let m = check_identity_with(&lifted, id, CheckMode::Exhaustive, &budget).map_err(|e| e.to_string())?;
                ensure(s.status == m.status, format!("Z_3({t},{u}) {id}: {:?} vs {:?}", s.status, m.status))?;
                n += 1;
            }
        }
    }
    within(start, Duration::from_secs(300), "lifting sweep")?;
    Ok(format!("{n} identity/pair verdicts agree, exhaustive on 81 elements"))
}

fn determinism() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_ggl"))
            .args(["verify", "--suite", "default", "--seed", "42", "--no-timing"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    ensure(a.status.code() == Some(0), format!("exit {:?}: {}", a.status.code(), String::from_utf8_lossy(&a.stderr)))?;
    ensure(b.status.code() == Some(0), format!("exit {:?}", b.status.code()))?;
    ensure(a.stdout == b.stdout, "reports differ")?;
    Ok(format!("{} identical bytes, exit 0", a.stdout.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("golden worked examples", golden_examples),
        ("order-7 table and simplicity", order_seven_table),
        ("associativity and idempotency sweeps", iff_sweeps),
        ("equal-pair laws", equal_pair_laws),
        ("ideal duality", ideal_duality),
        ("simplicity instances", simplicity),
        ("Smarandache identities", smarandache),
        ("counting", counting),
        ("lifting soundness", lifting),
        ("suite determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(msg) => println!("criterion {:>2} PASS  {name} ({secs:.2}s): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
