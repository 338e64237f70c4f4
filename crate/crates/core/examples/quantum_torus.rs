//! Products, inverses, Weyl symmetrization and the classical limit in A_g.

use std::sync::Arc;

use qweyl::{AlgebraElement, RootData};

fn main() -> qweyl::Result<()> {
    let sl2 = Arc::new("sl2".parse::<RootData>()?);
    let e = AlgebraElement::parse("E", &sl2)?;
    let q = AlgebraElement::parse("Q", &sl2)?;
    println!("E Q = {}", &e * &q);
    println!("Q E = {}", &q * &e);
    let x = AlgebraElement::parse("q^{1/4}*E*Q^{2}", &sl2)?;
    println!("({x})^-1 = {}", x.inverse().expect("monomial"));
    println!("({x})^3 = {}", x.pow(3));

    let t = AlgebraElement::parse("E + E^{-1} - q^{1/2}*(Q + Q^{-1})", &sl2)?;
    println!("eps({t}) = {}", t.epsilon());

    let sl3 = Arc::new("sl3".parse::<RootData>()?);
    let y = AlgebraElement::parse("Q[1,0,0]*E[0,1,0]", &sl3)?;
    let s = y.symmetrize()?;
    println!("symmetrized in sl3 ({} terms): {s}", s.len());
    println!("invariant: {}", s.is_invariant());
    Ok(())
}
