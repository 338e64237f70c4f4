//! Coefficient ring: Laurent polynomials in fractional powers of q.

use qweyl::{quantum_integer, LaurentQ};

fn main() -> qweyl::Result<()> {
    let x: LaurentQ = "q^{1/2} + 2*q^{-1/3}".parse()?;
    let y: LaurentQ = "q - q^{-1}".parse()?;
    println!("x = {x}");
    println!("x * y = {}", &x * &y);
    println!("bar(x) = {}", x.bar());
    println!("x at q = 1: {}", x.eval_q1());

    // q = e^h to first order
    let j = x.h_jet();
    println!("h-jet of x: {} + ({}) h", j.c0, j.c1);

    for n in 1..=5 {
        println!("[{n}] = {}", quantum_integer(n));
    }
    let p = &quantum_integer(6) * &quantum_integer(2);
    println!("[6][2] / [3] = {}", p.div_exact(&quantum_integer(3)).expect("divisible"));
    Ok(())
}
