//! Torus curves in A_sl2 and the product-to-sum rule they satisfy.

use qweyl::ideals::curve_element;

fn main() -> qweyl::Result<()> {
    for (p, q) in [(1, 0), (0, 1), (1, 1), (2, 0), (2, 2)] {
        println!("({p},{q}): {}", curve_element(p, q)?);
    }
    // (1,0)(0,1) = q^{1/4}(1,1) + q^{-1/4}(1,-1)
    let lhs = &curve_element(1, 0)? * &curve_element(0, 1)?;
    let r = |p, q, e: &str| -> qweyl::Result<_> { Ok(curve_element(p, q)?.scale(&e.parse()?)) };
    let rhs = &r(1, 1, "q^{1/4}")? + &r(1, -1, "q^{-1/4}")?;
    println!("product-to-sum holds: {}", lhs == rhs);
    Ok(())
}
