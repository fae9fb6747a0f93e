// Khovanov homology tables over ℤ, ℚ and ℤ/2 with the Poincaré polynomial
// and its Euler characteristic.
//
// cargo run --example homology [code-or-name]

use vkh::homology::{khovanov_homology, Coeffs};
use vkh::smoothing::jones;

pub fn run(input: &str) -> vkh::Result<()> {
    let d = vkh::cli::resolve_input(input, None)?;
    println!("{input} = {d}");
    for c in [Coeffs::Z, Coeffs::Q, Coeffs::Z2] {
        let h = khovanov_homology(&d, c)?;
        println!("-- {c:?}");
        print!("{h}");
        println!("P(t,q) = {}", h.poincare());
    }
    let q = khovanov_homology(&d, Coeffs::Q)?;
    println!("chi = {}", q.euler_q());
    println!("J   = {}", jones(&d)?);
    Ok(())
}

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "virtual-trefoil".into());
    run(&input).unwrap();
}
