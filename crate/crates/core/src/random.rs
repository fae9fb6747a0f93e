//! Random signed Gauss codes, for property tests and sampling.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{Pass, Role, Sign, VirtualLinkDiagram};

/// A uniformly shuffled code with `n` crossings of random sign, cut into
/// `components` pieces (some possibly empty).
pub fn random_diagram<R: Rng>(rng: &mut R, n: usize, components: usize) -> VirtualLinkDiagram {
    let components = components.max(1);
    let mut passes = Vec::with_capacity(2 * n);
    for id in 1..=n as u32 {
        let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
        passes.push(Pass::new(id, Role::Over, sign));
        passes.push(Pass::new(id, Role::Under, sign));
    }
    passes.shuffle(rng);
    let mut cuts: Vec<usize> = (0..components - 1).map(|_| rng.gen_range(0..=passes.len())).collect();
    cuts.sort_unstable();
    let mut out = vec![];
    let mut start = 0;
    for c in cuts.into_iter().chain([passes.len()]) {
        out.push(passes[start..c].to_vec());
        start = c;
    }
    VirtualLinkDiagram::new(out).expect("every crossing appears once over and once under")
}

/// A random knot code with `n` crossings.
pub fn random_knot<R: Rng>(rng: &mut R, n: usize) -> VirtualLinkDiagram {
    random_diagram(rng, n, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 0..6 {
            for comps in 1..4 {
                let d = random_diagram(&mut rng, n, comps);
                assert_eq!(d.crossing_count(), n);
                assert_eq!(d.component_count(), comps);
            }
        }
    }

    #[test]
    fn seeded() {
        let a = random_knot(&mut ChaCha8Rng::seed_from_u64(7), 5);
        let b = random_knot(&mut ChaCha8Rng::seed_from_u64(7), 5);
        assert_eq!(a, b);
    }
}
