//! The unknot colored Jones function and the operators annihilating it.

use std::sync::Arc;

use qweyl::knotdata::{annihilation_check, preset, sln_unknot_generator, LatticeFunction};
use qweyl::RootData;

fn main() -> qweyl::Result<()> {
    let sl2 = Arc::new("sl2".parse::<RootData>()?);
    let j = LatticeFunction::unknot_j(&sl2)?;
    for n in 0..=4 {
        println!("J({n}) = {}", j.at_index(n));
    }
    let gens = preset("unknot")?.generators;
    for g in &gens {
        println!("generator: {g}");
    }
    let rep = annihilation_check(&gens, &j, 30)?;
    println!("sl2, |lambda| <= 30: {} points, passed {}", rep.checked, rep.passed());

    for n in [3, 4] {
        let rd = Arc::new(format!("sl{n}").parse::<RootData>()?);
        let g = sln_unknot_generator(&rd)?;
        let rep = annihilation_check(std::slice::from_ref(&g), &LatticeFunction::unknot_j(&rd)?, 4)?;
        println!("sl{n}: {g} annihilates J on {} points: {}", rep.checked, rep.passed());
    }
    Ok(())
}
