// Source-sink patterns, cut loci, and how many cut loci each cycle of
// each state carries (always even).
//
// cargo run --example cut_loci [code-or-name]

use vkh::diagram::Skeleton;
use vkh::orientation::{canonical_source_sink, cut_loci, OrientationLayer, StarRule};
use vkh::smoothing::{Resolution, SmoothingState};

pub fn run(input: &str) -> vkh::Result<()> {
    let d = vkh::cli::resolve_input(input, None)?;
    println!("{input} = {d}");
    for (id, p) in canonical_source_sink(&d).pattern {
        println!("crossing {id}: {p:?}");
    }
    let cuts = cut_loci(&d);
    println!("cut semi-arcs: {:?}", cuts.arc_ids());
    let sk = Skeleton::new(&d);
    let layer = OrientationLayer::new(&sk);
    let n = sk.crossing_count();
    for mask in 0..1u64 << n {
        let res = Resolution::new(&sk, SmoothingState::new(mask, n)?);
        let per: Vec<usize> = layer.cuts().per_cycle(&res).iter().map(Vec::len).collect();
        println!("state {mask:0w$b}: cut loci per cycle {per:?}", w = n.max(1));
    }
    print!("{}", vkh::orientation::dump(&d, StarRule::default()));
    Ok(())
}

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "virtual-trefoil".into());
    run(&input).unwrap();
}
