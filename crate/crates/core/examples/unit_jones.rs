// Virtualizing one crossing of a classical knot. When switching that
// crossing unknots, the result has the Jones polynomial and Khovanov
// homology of the unknot.

use std::collections::BTreeSet;

use vkh::catalog::Catalog;
use vkh::diagram::VirtualLinkDiagram;
use vkh::homology::{khovanov_homology, Coeffs};
use vkh::smoothing::jones;

pub fn run() -> vkh::Result<()> {
    let cat = Catalog::bundled();
    let unknot = khovanov_homology(&VirtualLinkDiagram::unknot(), Coeffs::Z)?;
    for name in ["trefoil", "figure-eight", "six-one"] {
        let k = cat.get(name)?;
        for c in k.crossing_ids() {
            let s: BTreeSet<u32> = [c].into_iter().collect();
            let v = k.virtualize(&s)?;
            let kh = khovanov_homology(&v, Coeffs::Z)?;
            println!(
                "{name}: virtualize {c}: {v}  J = {}  Kh = unknot's: {}",
                jones(&v)?,
                kh == unknot
            );
        }
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
