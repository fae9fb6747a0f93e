// For positive knots, s_min read off the all-A state matches the full
// filtration, and the slice genus is (−r + n + 1)/2.

use vkh::catalog::Catalog;
use vkh::lee::{positive_s_min, positive_slice_genus, rasmussen, seifert_circles};

pub fn run() -> vkh::Result<()> {
    let cat = Catalog::bundled();
    for name in ["kink-pos", "trefoil", "torus-2-5", "virtual-trefoil", "positive-genus-2", "vsigma-3"] {
        let d = cat.get(name)?;
        let r = rasmussen(&d)?;
        println!(
            "{name:17} n {} r {}  s_min fast {} full {}  g_s {}",
            d.crossing_count(),
            seifert_circles(&d),
            positive_s_min(&d)?,
            r.s_min,
            positive_slice_genus(&d)?
        );
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
