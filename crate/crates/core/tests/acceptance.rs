//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//! Each criterion checks its runtime budget as well as its verdict.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use qweyl::ideals::{a_ideal_preset, listed_epsilon_images, point_probe, LaurentIdeal};
use qweyl::knotdata::{annihilation_check, preset, trefoil_oracle, Chirality, LatticeFunction};
use qweyl::qlaurent::int;
use qweyl::verify;
use qweyl::{Family, LaurentQ, RootData};

/// `[m]` straight from the definition, as a sum of monomials.
fn qint(m: i64) -> LaurentQ {
    let s = m.signum();
    LaurentQ::from_terms((0..m.abs()).map(|k| (Rational64::new(m.abs() - 1 - 2 * k, 2), int(s))))
}

/// Quantum Weyl dimension formula: `prod_{i<j} [l_i - l_j] / [j - i]`.
fn sl_dimension(l: &[i64]) -> LaurentQ {
    let mut num = LaurentQ::one();
    let mut den = LaurentQ::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num = &num * &qint(l[i] - l[j]);
            den = &den * &qint((j - i) as i64);
        }
    }
    num.div_exact(&den).expect("dimension formula divides")
}

/// Kauffman bracket of the closure of a 2-braid word `sigma^k`, `k < 0`,
/// by Temperley-Lieb state sum; returns the normalized invariant with
/// exponents in `A`.
fn kauffman_negative_power(k: usize) -> BTreeMap<i64, i64> {
    type P = BTreeMap<i64, i64>;
    fn mul(a: &P, b: &P) -> P {
        let mut r = P::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                *r.entry(ea + eb).or_default() += ca * cb;
            }
        }
        r.retain(|_, c| *c != 0);
        r
    }
    fn add(a: &P, b: &P) -> P {
        let mut r = a.clone();
        for (e, c) in b {
            *r.entry(*e).or_default() += c;
        }
        r.retain(|_, c| *c != 0);
        r
    }
    let mono = |e: i64, c: i64| P::from([(e, c)]);
    let delta = add(&mono(2, -1), &mono(-2, -1));
    // element x + y e of TL_2, with e^2 = delta e
    let (mut x, mut y) = (mono(0, 1), P::new());
    for _ in 0..k {
        // (x + y e)(A^{-1} + A e)
        let nx = mul(&x, &mono(-1, 1));
        let ny = add(&add(&mul(&x, &mono(1, 1)), &mul(&y, &mono(-1, 1))), &mul(&mul(&y, &mono(1, 1)), &delta));
        x = nx;
        y = ny;
    }
    // tr(1) = delta^2, tr(e) = delta, then divide by delta
    let bracket = add(&mul(&x, &delta), &y);
    let writhe = -(k as i64);
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    mul(&bracket, &mono(-3 * writhe, sign))
}

struct Line {
    id: &'static str,
    passed: bool,
    elapsed: Duration,
    budget: Duration,
    note: String,
}

fn timed(id: &'static str, budget_s: u64, f: impl FnOnce() -> (bool, String)) -> Line {
    let t = Instant::now();
    let (passed, note) = f();
    Line {
        id,
        passed,
        elapsed: t.elapsed(),
        budget: Duration::from_secs(budget_s),
        note,
    }
}

fn a1() -> (bool, String) {
    let rd = Arc::new(RootData::build(Family::Sl, 2).unwrap());
    let oracle = LatticeFunction::sl2("quantum integers", qint);
    let gens = preset("unknot").unwrap().generators;
    let rep = annihilation_check(&gens, &oracle, 30).unwrap();
    let j = LatticeFunction::unknot_j(&rd).unwrap();
    let agree = (-30..=30).all(|n| j.at_index(n) == qint(n));
    let v = verify::inv_rec_unknot(30).unwrap();
    (
        rep.passed() && agree && v.passed,
        format!("{} points, character formula agrees with [n]: {agree}", rep.checked),
    )
}

fn a2() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in [2usize, 3, 4] {
        let rd = Arc::new(RootData::build(Family::Sl, n).unwrap());
        let oracle = LatticeFunction::new(&rd, "dimension formula", |w| Ok(sl_dimension(w.coords())));
        let g = qweyl::knotdata::sln_unknot_generator(&rd).unwrap();
        let rep = annihilation_check(std::slice::from_ref(&g), &oracle, 6).unwrap();
        ok &= rep.passed();
        notes.push(format!("sl{n}: {}", rep.checked));
    }
    ok &= verify::rec_unknot_sln(&[2, 3, 4], 6).unwrap().passed;
    (ok, notes.join(", "))
}

fn a3() -> (bool, String) {
    let cases: Vec<(String, i64)> = verify::default_goldman_cases()
        .into_iter()
        .map(|(a, r)| (a.to_string(), r))
        .collect();
    let out = verify::goldman(&cases).unwrap();
    let checked: u64 = out.details["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["checked"].as_u64().unwrap())
        .sum();
    (out.passed, format!("{checked} bracket pairs over 7 algebras"))
}

fn a4() -> (bool, String) {
    let out = verify::iva().unwrap();
    let knots = out.details["knots"].as_array().unwrap();
    let unknot_exact = knots[0]["termwise_equal"].as_array().unwrap().iter().all(|b| b == true);
    let mut ok = out.passed && unknot_exact;
    let mut diffs = 0;
    for k in &knots[1..] {
        ok &= k["same_ideal"] == true;
        diffs += k["termwise_equal"].as_array().unwrap().iter().filter(|b| **b == false).count();
    }
    (
        ok,
        format!("unknot exact per generator; trefoil ideals equal, {diffs} term-level differences reported"),
    )
}

fn a5() -> (bool, String) {
    // independent check of the oracle: J(2)/[2] against the Kauffman bracket
    let kb = kauffman_negative_power(3);
    let expected = LaurentQ::from_terms(kb.iter().map(|(e, c)| (Rational64::new(*e, 4), int(*c))));
    let j2 = trefoil_oracle(Chirality::Left, 0).at_index(2).div_exact(&qint(2)).unwrap();
    let kauffman = j2 == expected;
    let out = verify::trefoil_annihilation(15).unwrap();
    let sols = out.details["solutions"].as_array().unwrap().len();
    (
        out.passed && kauffman,
        format!("Kauffman bracket agrees: {kauffman}; {sols} resolution(s) found, framing 0"),
    )
}

fn a6() -> (bool, String) {
    let mut ok = verify::ivacor().unwrap().passed;
    // direct restatement for the left trefoil
    let eps: Vec<_> = preset("trefoil-left").unwrap().generators.iter().map(|g| g.epsilon()).collect();
    let ideal = LaurentIdeal::new(&eps).unwrap();
    for g in a_ideal_preset("trefoil-left").unwrap() {
        ok &= ideal.member(&(&g * &g)).unwrap();
        ok &= ideal.radical_member(&g).unwrap();
    }
    let listed = LaurentIdeal::new(&listed_epsilon_images("trefoil-left").unwrap()).unwrap();
    ok &= listed.same_as(&ideal).unwrap();
    ok &= point_probe(&eps, &int(1), &int(-1)).unwrap().iter().all(|v| *v == int(0));
    (ok, "squares and radical membership hold, w(Q - Q^{-1}) is not a member".into())
}

fn a7() -> (bool, String) {
    let out = verify::property_suites(0).unwrap();
    let suites = out.details["suites"].as_array().unwrap();
    let cases: u64 = suites.iter().map(|s| s["cases"].as_u64().unwrap()).sum();
    let again = verify::property_suites(0).unwrap();
    (
        out.passed && again == out,
        format!("{} suites, {cases} cases, reproducible for seed 0", suites.len()),
    )
}

fn main() {
    let lines = [
        timed("A1", 1, a1),
        timed("A2", 10, a2),
        timed("A3", 60, a3),
        timed("A4", 60, a4),
        timed("A5", 30, a5),
        timed("A6", 60, a6),
        timed("A7", 120, a7),
    ];
    let mut failed = 0;
    for l in &lines {
        let in_budget = l.elapsed <= l.budget;
        let ok = l.passed && in_budget;
        failed += usize::from(!ok);
        println!(
            "{} {} ({:.2}s of {}s) {}{}",
            l.id,
            if ok { "PASS" } else { "FAIL" },
            l.elapsed.as_secs_f64(),
            l.budget.as_secs(),
            l.note,
            if in_budget { "" } else { " [over budget]" }
        );
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
