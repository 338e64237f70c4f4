//! Weight lattices, pairings, rho and Weyl group actions.

use qweyl::RootData;

fn main() -> qweyl::Result<()> {
    for name in ["sl2", "sl3", "sp4", "so5", "so6"] {
        let rd: RootData = name.parse()?;
        println!(
            "{name}: rank {}, |W| = {}, D = {}, 2rho = {}",
            rd.rank(),
            rd.weyl_order(),
            rd.d(),
            rd.two_rho()
        );
    }

    let sp4: RootData = "sp4".parse()?;
    let w = sp4.weight(&[2, 1])?;
    for g in sp4.weyl_elements()? {
        println!("  {g} (sign {:+}): {}", g.sgn(), sp4.act(&g, &w));
    }
    Ok(())
}
