//! Trefoil recursion generators against the colored Jones oracle, and the
//! search that pins down their normalization.

use num_rational::Rational64;
use qweyl::knotdata::{annihilation_check_at, preset, resolve_trefoil, trefoil_oracle, Chirality, Reading};
use qweyl::RootData;

fn main() -> qweyl::Result<()> {
    let j = trefoil_oracle(Chirality::Left, 0);
    for n in 1..=3 {
        println!("J({n}) = {}", j.at_index(n));
    }

    let left = preset("trefoil-left")?;
    println!("{}", left.note);
    let sl2: RootData = "sl2".parse()?;
    let points: Vec<_> = (1..=10).map(|n| sl2.scale(n, &sl2.basis_weight(0))).collect();
    let rep = annihilation_check_at(&left.generators, &j, &points)?;
    println!("left generators annihilate J(1..10): {}", rep.passed());

    let right = preset("trefoil-right")?;
    let rep = annihilation_check_at(&right.generators, &trefoil_oracle(Chirality::Right, 0), &points)?;
    println!("mirrored generators annihilate the mirrored oracle: {}", rep.passed());

    let h = |n| Rational64::new(n, 2);
    let found = resolve_trefoil(
        &(-3..=3).collect::<Vec<_>>(),
        &[h(1), h(3), h(5)],
        &[h(-5), h(5)],
        &[Reading::EFirst, Reading::QFirst],
        &(1..=8).collect::<Vec<_>>(),
    );
    for r in found {
        println!(
            "solution: framing {}, slot q^{{{}}}, partner q^{{{}}}, third generator {:?}",
            r.framing, r.reading.slot, r.reading.partner, r.reading.third
        );
    }
    Ok(())
}
