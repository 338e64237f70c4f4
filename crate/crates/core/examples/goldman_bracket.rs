//! The first-order commutator of trace lifts against the Goldman bracket
//! on the torus character variety.

use std::sync::Arc;

use qweyl::charvariety::{compare_brackets, goldman_bracket, TorusTrace};
use qweyl::{AlgebraElement, RootData};

fn main() -> qweyl::Result<()> {
    let so5 = Arc::new("so5".parse::<RootData>()?);
    let (x, y) = (TorusTrace::new(2, 1), TorusTrace::new(1, 1));
    let lhs = AlgebraElement::tau_lift(&so5, x.a, x.b).poisson(&AlgebraElement::tau_lift(&so5, y.a, y.b))?;
    println!("{{tau_2,1, tau_1,1}} from A_so5: {lhs}");
    println!("Goldman:                       {}", goldman_bracket(&so5, x, y));

    for name in ["sl2", "sl3", "sp4", "so4"] {
        let rd = Arc::new(name.parse::<RootData>()?);
        let rep = compare_brackets(&rd, 2, None)?;
        println!("{name}, range 2: {} pairs, passed {}", rep.checked, rep.passed());
    }
    Ok(())
}
