// Every edge of the signed cube with its bars, order signs and transition
// sign, followed by the ∂∘∂ check under several tree and star choices.
//
// cargo run --example cube [code-or-name]

use vkh::cube::{CubeOptions, SignedCubeComplex, TreeRule};
use vkh::frobenius::FrobeniusSpec;
use vkh::orientation::StarRule;

pub fn run(input: &str) -> vkh::Result<()> {
    let d = vkh::cli::resolve_input(input, None)?;
    let spec = FrobeniusSpec::khovanov();
    let c = SignedCubeComplex::build(&d, &spec, &CubeOptions::default())?;
    println!("{input} = {d}");
    print!("{}", c.dump());
    for (tree, star) in [
        (TreeRule::LowestBit, StarRule::MinArcTail),
        (TreeRule::HighestBit, StarRule::MinArcTail),
        (TreeRule::Seeded(7), StarRule::MaxArcHead),
    ] {
        let opts = CubeOptions { tree_rule: tree, star_rule: star, ..Default::default() };
        let ok = SignedCubeComplex::build(&d, &spec, &opts)?.check_d2().ok;
        println!("{tree:?} / {star:?}: ∂∘∂ = 0 {ok}");
    }
    Ok(())
}

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "figure-eight".into());
    run(&input).unwrap();
}
