// Kauffman bracket, normalized bracket, Jones and Jones–Kauffman
// polynomials for a few named knots.
//
// cargo run --example jones [code-or-name]

use vkh::smoothing::{v_poly, StateSum};

pub fn run(inputs: &[String]) -> vkh::Result<()> {
    for input in inputs {
        let d = vkh::cli::resolve_input(input, None)?;
        let sum = StateSum::compute(&d, vkh::DEFAULT_MAX_CROSSINGS)?;
        println!("{input} = {d}");
        println!("  <K>_A  = {}", sum.bracket_a());
        println!("  <K>_q  = {}", sum.bracket_q());
        println!("  f_K    = {}", sum.f_poly());
        println!("  J_K    = {}", sum.jones());
        if d.is_knot() {
            println!("  V_K    = {}", v_poly(&d)?);
        }
    }
    Ok(())
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        ["unknot", "trefoil", "figure-eight", "virtual-trefoil", "kishino"].map(String::from).to_vec()
    } else {
        args
    };
    run(&inputs).unwrap();
}
