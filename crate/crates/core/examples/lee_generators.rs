// Canonical Lee generators: one alternately coloured oriented resolution
// per orientation, each checked against the Lee differential.
//
// cargo run --example lee_generators [code-or-name]

use vkh::lee::{canonical_generators, lee_complex, lee_filtered_homology, red_green_properties, verify_generator_cycle};

pub fn run(input: &str) -> vkh::Result<()> {
    for (name, ok) in red_green_properties() {
        println!("r/g {name}: {ok}");
    }
    let d = vkh::cli::resolve_input(input, None)?;
    let complex = lee_complex(&d)?;
    println!("{input} = {d}");
    for g in canonical_generators(&d)? {
        println!(
            "reversed {:?} state {:b} cycles {:?} cycle: {}",
            g.reversed,
            g.state,
            g.cycle_colours,
            verify_generator_cycle(&complex, &g)
        );
    }
    let h = lee_filtered_homology(&d)?;
    println!("Lee homology dimension {}, levels {:?}", h.dimension(), h.levels);
    Ok(())
}

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "virtual-trefoil".into());
    run(&input).unwrap();
}
