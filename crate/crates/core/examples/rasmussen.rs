// s_min, s_max and s̄ for the closures of vσ^{2n}, which are never slice.

use std::time::Instant;

use vkh::catalog::vsigma_closure;
use vkh::lee::rasmussen;

pub fn run(max_n: usize) -> vkh::Result<()> {
    for n in 1..=max_n {
        let d = vsigma_closure(n);
        let t = Instant::now();
        let r = rasmussen(&d)?;
        let m = rasmussen(&d.mirror())?;
        println!(
            "vσ^{}: {d}  s_min {} s_max {} s̄ {}  mirror s̄ {}  g_s ≥ {}  ({:.2?})",
            2 * n,
            r.s_min,
            r.s_max,
            r.s_bar,
            m.s_bar,
            r.genus_lower,
            t.elapsed()
        );
    }
    Ok(())
}

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    run(n).unwrap();
}
