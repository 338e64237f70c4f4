//! Classical limits of the recursion ideals and membership of A-ideal
//! generators, via Groebner bases in the Laurent ring.

use qweyl::ideals::{a_ideal_preset, point_probe, trefoil_w, LaurentIdeal};
use qweyl::knotdata::preset;
use qweyl::qlaurent::int;
use qweyl::CommPoly;

fn main() -> qweyl::Result<()> {
    let eps: Vec<CommPoly> = preset("trefoil-left")?.generators.iter().map(|g| g.epsilon()).collect();
    for p in &eps {
        println!("eps: {p}");
    }
    let ideal = LaurentIdeal::new(&eps)?;
    println!("Groebner basis: {} elements", ideal.basis().len());

    let report = ideal.report(&a_ideal_preset("trefoil-left")?)?;
    for q in &report.queries {
        println!("{}: member {}, radical {}", q.poly, q.member, q.radical_member);
    }
    let w = trefoil_w();
    let wq = &w * &CommPoly::parse("Q - Q^{-1}", w.rd())?;
    println!("w (Q - Q^-1) in the ideal: {}", ideal.member(&wq)?);
    let vals: Vec<String> = point_probe(&eps, &int(1), &int(-1))?.iter().map(ToString::to_string).collect();
    println!("values at (E, Q) = (1, -1): {}", vals.join(", "));
    Ok(())
}
