// Virtualizing the crossing of 6₁ whose switch gives the figure-eight
// yields a virtual knot Z-equivalent to the figure-eight: same Khovanov
// and Lee homology, and s̄ = 0.

use std::collections::BTreeSet;

use vkh::catalog::Catalog;
use vkh::homology::{khovanov_homology, z_equivalence_check, Coeffs};
use vkh::lee::{lee_filtered_homology, rasmussen};
use vkh::smoothing::jones;

pub fn run() -> vkh::Result<()> {
    let cat = Catalog::bundled();
    let six = cat.get("six-one")?;
    let fig8 = cat.get("figure-eight")?;
    for c in six.crossing_ids() {
        let s: BTreeSet<u32> = [c].into_iter().collect();
        let to_fig8 = jones(&six.switch_crossings(&s)?)? == jones(&fig8)?;
        println!("switch {c}: figure-eight Jones {to_fig8}; Z-equivalence holds {}", z_equivalence_check(&six, c)?);
    }
    let st = cat.get("virtual-stevedore")?;
    println!("stevedore {st}");
    print!("{}", khovanov_homology(&st, Coeffs::Z)?);
    println!("Kh equal to figure-eight: {}", khovanov_homology(&st, Coeffs::Z)? == khovanov_homology(&fig8, Coeffs::Z)?);
    println!("Lee equal to figure-eight: {}", lee_filtered_homology(&st)? == lee_filtered_homology(&fig8)?);
    println!("s̄ = {}", rasmussen(&st)?.s_bar);
    Ok(())
}

fn main() {
    run().unwrap();
}
