// Every catalog entry with its Jones polynomial, total Khovanov rank and,
// for knots, s̄.

use vkh::catalog::Catalog;
use vkh::homology::{khovanov_homology, Coeffs};
use vkh::lee::rasmussen;
use vkh::smoothing::jones;

pub fn run() -> vkh::Result<()> {
    let cat = Catalog::bundled();
    for e in cat.entries() {
        let d = cat.get(&e.name)?;
        let kh = khovanov_homology(&d, Coeffs::Q)?;
        let s = if d.is_knot() { rasmussen(&d)?.s_bar.to_string() } else { "-".into() };
        println!("{:18} {:40} rank {:2} s̄ {:>2}  J = {}", e.name, e.code, kh.total_rank(), s, jones(&d)?);
        if !e.note.is_empty() {
            println!("{:18} ({})", "", e.note);
        }
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
