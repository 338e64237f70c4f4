//! Named verification routines shared by the command line and the test
//! suites. Each returns an [`Outcome`] with machine-readable details.

use std::sync::Arc;

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::charvariety::compare_brackets;
use crate::error::{Error, Result};
use crate::ideals::{
    a_ideal_preset, hand_epsilon_forms, listed_epsilon_images, point_probe, trefoil_w, unknot_x, LaurentIdeal,
};
use crate::knotdata::{
    annihilation_check, annihilation_check_at, equivariance_check, preset, resolve_trefoil, sln_unknot_generator,
    trefoil_oracle, Chirality, LatticeFunction, Reading, TrefoilReading,
};
use crate::properties;
use crate::qlaurent::{int, Exponent};
use crate::qweyl_algebra::CommPoly;
use crate::rootdata::{Family, RootData};

pub const IDS: [&str; 8] = [
    "inv-rec-unknot",
    "rec-unknot-sln",
    "goldman",
    "iva",
    "ivacor",
    "j-sym",
    "trefoil-annihilation",
    "properties",
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub passed: bool,
    pub details: Value,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub algebra: Option<String>,
    pub range: Option<i64>,
    pub radius: Option<i64>,
    pub seed: u64,
}

pub fn run(id: &str, opts: &Options) -> Result<Outcome> {
    match id {
        "inv-rec-unknot" => inv_rec_unknot(opts.radius.unwrap_or(30)),
        "rec-unknot-sln" => {
            let ns: Vec<usize> = match &opts.algebra {
                Some(a) => {
                    let rd: RootData = a.parse()?;
                    if rd.family() != Family::Sl {
                        return Err(Error::InvalidArgument(format!("{a} is not sl(n)")));
                    }
                    vec![rd.n()]
                }
                None => vec![2, 3, 4],
            };
            rec_unknot_sln(&ns, opts.radius.unwrap_or(6))
        }
        "goldman" => {
            let algebras: Vec<(String, i64)> = match &opts.algebra {
                Some(a) => vec![(a.clone(), opts.range.unwrap_or(2))],
                None => default_goldman_cases()
                    .iter()
                    .map(|(a, r)| (a.to_string(), opts.range.unwrap_or(*r)))
                    .collect(),
            };
            goldman(&algebras)
        }
        "iva" => iva(),
        "ivacor" => ivacor(),
        "j-sym" => {
            let name = opts.algebra.clone().unwrap_or_else(|| "sl2".into());
            let rd: RootData = name.parse()?;
            let radius = opts.radius.unwrap_or(if rd.rank() == 1 { 20 } else { 6 });
            j_sym(&name, radius)
        }
        "trefoil-annihilation" => trefoil_annihilation(15),
        "properties" => property_suites(opts.seed),
        _ => Err(Error::InvalidArgument(format!(
            "unknown verification `{id}`; expected one of {}",
            IDS.join(", ")
        ))),
    }
}

pub fn default_goldman_cases() -> Vec<(&'static str, i64)> {
    vec![
        ("sl2", 3),
        ("sl3", 3),
        ("sl4", 2),
        ("sp4", 2),
        ("so4", 2),
        ("so5", 2),
        ("so7", 2),
    ]
}

fn sl2() -> Arc<RootData> {
    Arc::new(RootData::build(Family::Sl, 2).expect("sl2"))
}

pub fn inv_rec_unknot(radius: i64) -> Result<Outcome> {
    let rd = sl2();
    let p = preset("unknot")?;
    let j = LatticeFunction::unknot_j(&rd)?;
    let rep = annihilation_check(&p.generators, &j, radius)?;
    Ok(Outcome {
        passed: rep.passed(),
        details: json!({
            "generators": p.generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "radius": radius,
            "checked": rep.checked,
            "failures": rep.failures,
        }),
    })
}

pub fn rec_unknot_sln(ns: &[usize], radius: i64) -> Result<Outcome> {
    let mut passed = true;
    let mut cases = Vec::new();
    for &n in ns {
        let rd = Arc::new(RootData::build(Family::Sl, n)?);
        let g = sln_unknot_generator(&rd)?;
        let rep = annihilation_check(std::slice::from_ref(&g), &LatticeFunction::unknot_j(&rd)?, radius)?;
        passed &= rep.passed();
        cases.push(json!({
            "algebra": rd.name(),
            "generator": g.to_string(),
            "radius": radius,
            "checked": rep.checked,
            "failures": rep.failures,
        }));
    }
    Ok(Outcome {
        passed,
        details: json!({ "cases": cases }),
    })
}

pub fn goldman(cases: &[(String, i64)]) -> Result<Outcome> {
    let mut passed = true;
    let mut reports = Vec::new();
    for (name, range) in cases {
        let rd = Arc::new(name.parse::<RootData>()?);
        let rep = compare_brackets(&rd, *range, None)?;
        passed &= rep.passed();
        reports.push(serde_json::to_value(&rep).map_err(|e| Error::Internal(e.to_string()))?);
    }
    Ok(Outcome {
        passed,
        details: json!({ "reports": reports }),
    })
}

fn strings(ps: &[CommPoly]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

/// `E -> E^{-1}, Q -> Q^{-1}`.
fn iota(p: &CommPoly) -> CommPoly {
    let rd = p.rd().clone();
    p.terms()
        .map(|(a, b, c)| CommPoly::monomial(&rd, &rd.neg(a), &rd.neg(b), c.clone()).unwrap())
        .fold(CommPoly::zero(&rd), |acc, m| &acc + &m)
}

/// Classical limits of the built-in recursion generators against the listed
/// generator sets.
pub fn iva() -> Result<Outcome> {
    let mut passed = true;
    let mut knots = Vec::new();
    for knot in ["unknot", "trefoil-left", "trefoil-right"] {
        let eps: Vec<CommPoly> = preset(knot)?.generators.iter().map(|g| g.epsilon()).collect();
        let listed = listed_epsilon_images(knot)?;
        let invariant = eps.iter().chain(&listed).all(|p| iota(p) == *p);
        let termwise: Vec<bool> = eps.iter().zip(&listed).map(|(a, b)| a == b).collect();
        let i_eps = LaurentIdeal::new(&eps)?;
        let i_listed = LaurentIdeal::new(&listed)?;
        let same = i_eps.same_as(&i_listed)?;
        let mut ok = invariant && same;
        let mut extra = json!({});
        if knot == "unknot" {
            ok &= termwise.iter().all(|t| *t);
            // x_k family lies in the A-ideal
            let a = LaurentIdeal::new(&a_ideal_preset(knot)?)?;
            let mut xs = Vec::new();
            for k in -3..=6 {
                let m = a.member(&unknot_x(k))?;
                ok &= m;
                xs.push(json!({ "k": k, "member": m }));
            }
            ok &= a.same_as(&i_eps)?;
            extra = json!({ "x_k": xs, "equals_a_ideal": a.same_as(&i_eps)? });
        } else {
            let hand = hand_epsilon_forms(knot)?;
            let hand_termwise: Vec<bool> = eps.iter().zip(&hand).map(|(a, b)| a == b).collect();
            let w = trefoil_w();
            let w = if knot == "trefoil-right" { crate::ideals::flip_q(&w) } else { w };
            let middle_is_w_squared = hand[1] == &w * &w;
            extra = json!({
                "hand_forms": strings(&hand),
                "termwise_equal_to_hand_forms": hand_termwise,
                "hand_middle_equals_w_squared": middle_is_w_squared,
                "hand_forms_same_ideal": LaurentIdeal::new(&hand)?.same_as(&i_listed)?,
            });
        }
        passed &= ok;
        knots.push(json!({
            "knot": knot,
            "epsilon_images": strings(&eps),
            "listed": strings(&listed),
            "termwise_equal": termwise,
            "iota_invariant": invariant,
            "same_ideal": same,
            "basis_size": i_eps.basis().len(),
            "notes": extra,
            "passed": ok,
        }));
    }
    Ok(Outcome {
        passed,
        details: json!({ "knots": knots }),
    })
}

pub fn ivacor() -> Result<Outcome> {
    let mut passed = true;
    let mut knots = Vec::new();
    for knot in ["trefoil-left", "trefoil-right"] {
        let eps: Vec<CommPoly> = preset(knot)?.generators.iter().map(|g| g.epsilon()).collect();
        let ideal = LaurentIdeal::new(&eps)?;
        let a = a_ideal_preset(knot)?;
        let mut gens = Vec::new();
        let mut ok = true;
        for g in &a {
            let sq = ideal.member(&(g * g))?;
            let m = ideal.member(g)?;
            let rad = ideal.radical_member(g)?;
            ok &= sq && rad;
            gens.push(json!({ "generator": g.to_string(), "square_member": sq, "member": m, "radical_member": rad }));
        }
        let rd = eps[0].rd().clone();
        let mut w = trefoil_w();
        let mut q_minus = CommPoly::parse("Q - Q^{-1}", &rd)?;
        let mut q1 = CommPoly::parse("Q - 1", &rd)?;
        if knot == "trefoil-right" {
            w = crate::ideals::flip_q(&w);
            q_minus = crate::ideals::flip_q(&q_minus);
            q1 = crate::ideals::flip_q(&q1);
        }
        let wq = &w * &q_minus;
        let wq_member = ideal.member(&wq)?;
        ok &= !wq_member;
        let probe = point_probe(&eps, &int(1), &int(-1))?;
        let probe_zero = probe.iter().all(Zero::is_zero);
        let q1_val = point_probe(std::slice::from_ref(&q1), &int(1), &int(-1))?[0].clone();
        ok &= probe_zero && q1_val == int(-2);
        passed &= ok;
        knots.push(json!({
            "knot": knot,
            "a_ideal": gens,
            "w_times_q_minus_q_inverse": { "poly": wq.to_string(), "member": wq_member },
            "probe_at_1_minus1": probe.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "q_minus_1_at_probe": q1_val.to_string(),
            "passed": ok,
        }));
    }
    Ok(Outcome {
        passed,
        details: json!({ "knots": knots }),
    })
}

pub fn j_sym(algebra: &str, radius: i64) -> Result<Outcome> {
    let rd = Arc::new(algebra.parse::<RootData>()?);
    let rep = equivariance_check(&LatticeFunction::unknot_j(&rd)?, radius)?;
    Ok(Outcome {
        passed: rep.passed(),
        details: json!({
            "algebra": rd.name(),
            "radius": radius,
            "checked": rep.checked,
            "failures": rep.failures,
        }),
    })
}

fn ex(e: Exponent) -> String {
    e.to_string()
}

/// Searches framing and transcription of the left-trefoil generators and
/// checks the mirror pair.
pub fn trefoil_annihilation(max_index: i64) -> Result<Outcome> {
    let h = |n| Rational64::new(n, 2);
    let framings: Vec<i64> = (-6..=6).collect();
    let slots = [h(1), h(3), h(5), h(6)];
    let indices: Vec<i64> = (1..=max_index).collect();
    let literal = resolve_trefoil(&framings, &slots, &[h(-5)], &[Reading::EFirst, Reading::QFirst], &indices);
    let found = resolve_trefoil(
        &framings,
        &slots,
        &[h(-5), h(5)],
        &[Reading::EFirst, Reading::QFirst],
        &indices,
    );
    let unique = found.len() == 1 && found[0].reading == TrefoilReading::resolved();
    let framing = found.first().map(|r| r.framing).unwrap_or(0);

    let rd = sl2();
    let points: Vec<_> = indices.iter().map(|&n| rd.scale(n, &rd.basis_weight(0))).collect();
    let left = preset("trefoil-left")?;
    let right = preset("trefoil-right")?;
    let left_rep = annihilation_check_at(&left.generators, &trefoil_oracle(Chirality::Left, framing), &points)?;
    let right_rep =
        annihilation_check_at(&right.generators, &trefoil_oracle(Chirality::Right, -framing), &points)?;
    let unknot = preset("unknot")?;
    let separation = annihilation_check_at(&unknot.generators, &trefoil_oracle(Chirality::Left, framing), &points)?;
    let passed = unique && framing == 0 && left_rep.passed() && right_rep.passed() && !separation.passed();
    let show = |rs: &[crate::knotdata::Resolution]| {
        rs.iter()
            .map(|r| {
                json!({
                    "framing": r.framing,
                    "slot": ex(r.reading.slot),
                    "partner": ex(r.reading.partner),
                    "third": format!("{:?}", r.reading.third),
                })
            })
            .collect::<Vec<_>>()
    };
    Ok(Outcome {
        passed,
        details: json!({
            "indices": [1, max_index],
            "literal_partner_solutions": show(&literal),
            "solutions": show(&found),
            "left": { "generators": left.generators.iter().map(ToString::to_string).collect::<Vec<_>>(), "checked": left_rep.checked, "failures": left_rep.failures },
            "right": { "checked": right_rep.checked, "failures": right_rep.failures },
            "unknot_generators_annihilate_trefoil": separation.passed(),
        }),
    })
}

pub fn property_suites(seed: u64) -> Result<Outcome> {
    let suites = properties::run_all(seed)?;
    Ok(Outcome {
        passed: suites.iter().all(|s| s.passed()),
        details: json!({ "seed": seed, "suites": suites }),
    })
}
