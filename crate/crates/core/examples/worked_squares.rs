// Two squares worked by hand with named loops: global labels propagated
// along each side, the pre/post signs at every edge, and the permutation
// needed to reconcile the two global orders.

use vkh::cube::LoopOrder;

pub fn run() -> vkh::Result<()> {
    let (a, b) = (2, 4);
    let start = || LoopOrder::new([("f1", 1), ("A", a), ("f3", 3), ("B", b), ("f5", 5)]);

    let mut upper = start();
    let (p1, q1) = upper.split("A", "A1", "A2");
    let (p2, q2) = upper.merge("B", "A2", "C")?;
    println!("square 1, a = {a}, b = {b}");
    println!("  upper: Δ pre {p1:+} post {q1:+}, m pre {p2:+} post {q2:+}, composite {:+}", p1 * q1 * p2 * q2);
    let mut lower = start();
    let (p3, q3) = lower.merge("B", "A", "D")?;
    let (p4, q4) = lower.split("D", "A1", "C");
    let tr = lower.transition_to(&upper);
    let low = p3 * q3 * p4 * q4;
    println!("  lower: m pre {p3:+} post {q3:+}, Δ pre {p4:+} post {q4:+}, composite {low:+}");
    println!("  transition {tr:+}: lower becomes {:+}", tr * low);

    let start = || LoopOrder::new([("L", 1), ("g", 2)]);
    let mut upper = start();
    let (p1, q1) = upper.split("L", "l", "mr");
    let (p2, q2) = upper.split("mr", "r", "m");
    let mut lower = start();
    let (p3, q3) = lower.split("L", "r", "lm");
    let (p4, q4) = lower.split("lm", "l", "m");
    let tr = lower.transition_to(&upper);
    println!("square 2, a = 1");
    println!("  upper composite {:+}, lower composite {:+}", p1 * q1 * p2 * q2, p3 * q3 * p4 * q4);
    println!(
        "  upper order l,m,r = {},{},{}; lower = {},{},{}; transition {tr:+}",
        upper.rank("l"),
        upper.rank("m"),
        upper.rank("r"),
        lower.rank("l"),
        lower.rank("m"),
        lower.rank("r")
    );
    Ok(())
}

fn main() {
    run().unwrap();
}
