// The face that breaks the naive virtual cube: Δ followed by m on a
// two-crossing diagram whose other path runs through single-cycle
// smoothings. Without bars m∘Δ(1) = 2X; with bars it vanishes.

use vkh::cube::{compose_path, Corrections, CubeOptions, CubeSkeleton};
use vkh::frobenius::{FrobeniusSpec, HtPoly};

pub fn run() -> vkh::Result<()> {
    let d = vkh::diagram::VirtualLinkDiagram::parse("O1+U2-U1+O2-")?;
    let spec = FrobeniusSpec::<i64>::khovanov();
    let counts: Vec<usize> = CubeSkeleton::new(&d, &CubeOptions::default())?
        .states
        .iter()
        .map(|r| r.cycle_count())
        .collect();
    println!("{d}: cycles per state {counts:?}");
    for (label, bars, orders) in [("plain", false, false), ("bars", true, false), ("bars+orders", true, true)] {
        let opts = CubeOptions { corrections: Corrections { bars, orders }, ..Default::default() };
        let cube = CubeSkeleton::new(&d, &opts)?;
        for e in [cube.edge(0, 0), cube.edge(1, 1), cube.edge(0, 1), cube.edge(2, 0)] {
            println!("  {label:12} {}", e.dump_line());
        }
        let (state, v) = compose_path(&cube, &spec, 0, 0, &[0, 1]);
        let shown: Vec<String> =
            v.iter().map(|(l, c)| format!("{c}*{}", if *l == 1 { "X" } else { "1" })).collect();
        println!("{label:12} m∘Δ(1) in state {state}: {}", if shown.is_empty() { "0".into() } else { shown.join(" + ") });
    }
    let (a, b) = FrobeniusSpec::<HtPoly>::f5().mul_comul_diagnostic();
    println!("m∘(−1)∘(id⊗bar)∘Δ over Z[h,t]: 1 ↦ {a:?}, X ↦ {b:?}");
    Ok(())
}

fn main() {
    run().unwrap();
}
