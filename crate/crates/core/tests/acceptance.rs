//! The twelve acceptance criteria. Each prints one PASS/FAIL line; the test
//! fails if any criterion fails. All comparisons are exact; the only
//! tolerances are the wall-clock limits below.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{catalog, free_ranks, random_population, z2_oracle};
use vkh::catalog::{vsigma_closure, Catalog};
use vkh::cube::{compose_path, CubeOptions, CubeSkeleton, LoopOrder, SignedCubeComplex, Corrections};
use vkh::diagram::VirtualLinkDiagram;
use vkh::frobenius::{AlgebraElement, FrobeniusSpec, HtPoly};
use vkh::homology::{choice_independence, khovanov_homology, Coeffs};
use vkh::lee::{
    canonical_generators, filtered_homology_of, lee_complex, lee_filtered_homology, positive_s_min,
    positive_slice_genus, rasmussen, s_min_max, verify_generator_cycle,
};
use vkh::smoothing::jones;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const D2_LIMIT: Duration = Duration::from_secs(60);
const VSIGMA_LIMIT: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn population() -> Vec<VirtualLinkDiagram> {
    let mut v = catalog();
    v.extend(random_population(2024, 200, 6));
    v
}

fn differential_soundness() -> Outcome {
    let start = Instant::now();
    let pop = population();
    for d in &pop {
        let c = SignedCubeComplex::build(d, &FrobeniusSpec::khovanov(), &CubeOptions::default()).map_err(|e| e.to_string())?;
        let r = c.check_d2();
        ensure(r.ok, || format!("{d}: faces {:?}", r.faces))?;
    }
    let t = start.elapsed();
    ensure(t < D2_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{} diagrams in {:.1?}", pop.len(), t))
}

fn categorification() -> Outcome {
    let pop = population();
    for d in &pop {
        let h = khovanov_homology(d, Coeffs::Q).map_err(|e| e.to_string())?;
        let j = jones(d).map_err(|e| e.to_string())?;
        ensure(h.euler_q() == j, || format!("{d}: χ = {} but J = {j}", h.euler_q()))?;
    }
    Ok(format!("{} diagrams", pop.len()))
}

fn problem_square() -> Outcome {
    let d: VirtualLinkDiagram = "O1+U2-U1+O2-".parse().unwrap();
    let spec = FrobeniusSpec::<i64>::khovanov();
    let run = |bars: bool, orders: bool| {
        let opts = CubeOptions { corrections: Corrections { bars, orders }, ..Default::default() };
        let cube = CubeSkeleton::new(&d, &opts).unwrap();
        // Δ at the first crossing, then m at the second, starting from 1
        let kinds = (cube.edge(0, 0).kind, cube.edge(1, 1).kind);
        (kinds, compose_path(&cube, &spec, 0, 0, &[0, 1]))
    };
    let ((k1, k2), plain) = run(false, false);
    ensure(format!("{k1:?}{k2:?}") == "SplitMerge", || format!("edge kinds {k1:?} {k2:?}"))?;
    ensure(plain == (3, vec![(1, 2)]), || format!("uncorrected m∘Δ(1) = {plain:?}, expected 2X"))?;
    let (_, barred) = run(true, false);
    ensure(barred.1.is_empty(), || format!("bar-corrected m∘Δ(1) = {barred:?}"))?;
    let (_, full) = run(true, true);
    ensure(full.1.is_empty(), || format!("fully corrected m∘Δ(1) = {full:?}"))?;
    let f5 = FrobeniusSpec::<HtPoly>::f5();
    let (one, x) = f5.mul_comul_diagnostic();
    ensure(one == AlgebraElement::new(HtPoly::h(), HtPoly::default()), || format!("F5 on 1: {one:?}"))?;
    ensure(x == AlgebraElement::new(HtPoly::default(), HtPoly::h()), || format!("F5 on X: {x:?}"))?;
    let (z1, zx) = spec.mul_comul_diagnostic();
    ensure(z1.is_zero() && zx.is_zero(), || "h = 0 diagnostic is nonzero".into())?;
    Ok("2X / 0 / 0; (h, hX); (0, 0)".into())
}

fn sgn(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// First worked square: loops A = [a] < B = [b] among fillers.
fn square_one(a: usize, b: usize, total: usize) -> Result<(), String> {
    let names: Vec<String> = (1..=total).map(|r| format!("f{r}")).collect();
    let start = |ranks: &[(&str, usize)]| {
        let mut v: Vec<(&str, usize)> =
            names.iter().enumerate().filter(|(k, _)| k + 1 != a && k + 1 != b).map(|(k, n)| (n.as_str(), k + 1)).collect();
        v.extend_from_slice(ranks);
        LoopOrder::new(v)
    };
    let mut upper = start(&[("A", a), ("B", b)]);
    let (p1, q1) = upper.split("A", "A1", "A2");
    ensure(p1 * q1 == sgn(a + 1), || "∂1(s) ≠ (−1)^{a+1}Δ".into())?;
    ensure(upper.rank("B") == b + 1, || "B not relabelled b+1".into())?;
    let (p2, q2) = upper.merge("B", "A2", "C").map_err(|e| e.to_string())?;
    ensure(p2 == sgn(a + b + 2) && q2 == sgn(b + 1), || "∂2(s'') pre/post".into())?;
    let upper_sign = p1 * q1 * p2 * q2;
    ensure(upper_sign == 1, || "upper composite is not +m∘Δ".into())?;

    let mut lower = start(&[("A", a), ("B", b)]);
    let (p3, q3) = lower.merge("B", "A", "D").map_err(|e| e.to_string())?;
    ensure(p3 == sgn(a + b) && q3 == sgn(b), || "∂2(s) pre/post".into())?;
    ensure(lower.rank("D") == b - 1, || "merged loop not at b−1".into())?;
    let (p4, q4) = lower.split("D", "A1", "C");
    ensure(p4 == sgn(b) && q4 == sgn(2 * b), || "∂1(s') pre/post".into())?;
    let before = p3 * q3 * p4 * q4;
    ensure(before == sgn(a + b), || "lower composite before transition".into())?;
    let tr = lower.transition_to(&upper);
    ensure(tr == sgn(a + b + 1), || format!("transition {tr}"))?;
    ensure(tr * before == -upper_sign, || "square does not anticommute".into())
}

/// Second worked square: one loop [a] split twice.
fn square_two(a: usize, total: usize) -> Result<(), String> {
    let others: Vec<String> = (1..total).map(|r| format!("f{r}")).collect();
    let base = || {
        let mut v: Vec<(&str, usize)> =
            others.iter().enumerate().map(|(k, n)| (n.as_str(), if k + 1 < a { k + 1 } else { k + 2 })).collect();
        v.push(("L", a));
        LoopOrder::new(v)
    };
    let mut upper = base();
    let (p1, q1) = upper.split("L", "l", "mr");
    ensure(p1 == sgn(a + 1) && q1 == sgn(2 * a + 2), || "∂1(s)".into())?;
    let (p2, q2) = upper.split("mr", "r", "m");
    ensure(p2 == sgn(a + 2) && q2 == sgn(2 * a + 4), || "∂2(s'')".into())?;
    let up = p1 * q1 * p2 * q2;
    ensure(up == -1, || "upper composite".into())?;
    ensure((upper.rank("l"), upper.rank("m"), upper.rank("r")) == (a, a + 2, a + 1), || "upper order".into())?;

    let mut lower = base();
    let (p3, q3) = lower.split("L", "r", "lm");
    let (p4, q4) = lower.split("lm", "l", "m");
    ensure(p3 == sgn(a + 1) && p4 == sgn(a + 2), || "lower pre signs".into())?;
    let low = p3 * q3 * p4 * q4;
    ensure(low == -1, || "lower composite".into())?;
    ensure((lower.rank("l"), lower.rank("m"), lower.rank("r")) == (a + 1, a + 2, a), || "lower order".into())?;
    let tr = lower.transition_to(&upper);
    ensure(tr == sgn(3), || "transition is not (−1)^3".into())?;
    ensure(tr * low == -up, || "square does not anticommute".into())
}

fn worked_squares() -> Outcome {
    let mut cases = 0;
    for total in 2..8 {
        for a in 1..=total {
            for b in a + 1..=total {
                square_one(a, b, total)?;
                cases += 1;
            }
            square_two(a, total)?;
            cases += 1;
        }
    }
    Ok(format!("{cases} labelled instances"))
}

fn unit_jones() -> Outcome {
    let cat = Catalog::bundled();
    let unknot = VirtualLinkDiagram::unknot();
    let ju = jones(&unknot).unwrap();
    for name in ["trefoil", "figure-eight"] {
        let k = cat.get(name).unwrap();
        let s: BTreeSet<u32> = k
            .crossing_ids()
            .into_iter()
            .find(|&c| {
                let set = [c].into_iter().collect();
                jones(&k.switch_crossings(&set).unwrap()).unwrap() == ju
            })
            .into_iter()
            .collect();
        ensure(!s.is_empty(), || format!("{name}: no unknotting crossing"))?;
        let v = k.virtualize(&s).unwrap();
        ensure(jones(&v).unwrap() == ju, || format!("{name}: J(Virt) ≠ q+q⁻¹"))?;
        for c in [Coeffs::Z, Coeffs::Q, Coeffs::Z2] {
            ensure(khovanov_homology(&v, c).unwrap() == khovanov_homology(&unknot, c).unwrap(), || {
                format!("{name}: Kh(Virt) over {c:?} differs from the unknot")
            })?;
        }
    }
    Ok("trefoil, figure-eight".into())
}

fn lee_structure() -> Outcome {
    let cat = catalog();
    for d in &cat {
        let c = 1usize << d.component_count();
        let complex = lee_complex(d).map_err(|e| e.to_string())?;
        let dim = filtered_homology_of(&complex).dimension();
        ensure(dim == c, || format!("{d}: Lee dimension {dim}"))?;
        let gens = canonical_generators(d).map_err(|e| format!("{d}: {e}"))?;
        ensure(gens.len() == c, || format!("{d}: {} generators", gens.len()))?;
        ensure(gens.iter().all(|g| verify_generator_cycle(&complex, g)), || format!("{d}: generator not a cycle"))?;
    }
    Ok(format!("{} catalog diagrams", cat.len()))
}

fn rasmussen_values() -> Outcome {
    for n in 1..=3 {
        let start = Instant::now();
        let r = rasmussen(&vsigma_closure(n)).map_err(|e| e.to_string())?;
        let t = start.elapsed();
        ensure(r.s_bar == 2 * n as i32 && r.s_min == 2 * n as i32 - 1, || {
            format!("vσ^{}: s_min {} s̄ {}", 2 * n, r.s_min, r.s_bar)
        })?;
        ensure(t < VSIGMA_LIMIT, || format!("n = {n} took {t:?}"))?;
    }
    ensure(rasmussen(&VirtualLinkDiagram::unknot()).unwrap().s_bar == 0, || "s̄(unknot) ≠ 0".into())?;
    let mut knots = 0;
    for d in catalog().iter().filter(|d| d.is_knot()) {
        let r = rasmussen(d).map_err(|e| e.to_string())?;
        let m = rasmussen(&d.mirror()).map_err(|e| e.to_string())?;
        ensure(r.s_max == r.s_min + 2, || format!("{d}: s_max ≠ s_min + 2"))?;
        ensure(m.s_bar == -r.s_bar, || format!("{d}: s̄(mirror) = {} vs {}", m.s_bar, r.s_bar))?;
        ensure(m.s_min == -r.s_max && m.s_max == -r.s_min, || format!("{d}: mirror levels"))?;
        knots += 1;
    }
    Ok(format!("vσ^2, vσ^4, vσ^6 and {knots} catalog knots"))
}

fn positive_knots() -> Outcome {
    let cat = Catalog::bundled();
    let cases = [("trefoil", 1), ("torus-2-5", 2), ("virtual-trefoil", 1), ("positive-genus-2", 2)];
    for (name, g) in cases {
        let d = cat.get(name).unwrap();
        let fast = positive_s_min(&d).map_err(|e| e.to_string())?;
        let (s_min, _) = s_min_max(&d).unwrap();
        ensure(fast == s_min, || format!("{name}: fast s_min {fast} vs {s_min}"))?;
        let genus = positive_slice_genus(&d).unwrap();
        ensure(genus == Rational64::from(g), || format!("{name}: genus {genus}"))?;
        let r = rasmussen(&d).unwrap();
        ensure(r.genus_lower == r.genus_upper, || format!("{name}: bounds differ"))?;
    }
    // the stand-in is non-classical (even q power) and is not vσ^4
    let k = cat.get("positive-genus-2").unwrap();
    let j = jones(&k).unwrap();
    ensure(j.terms().any(|(e, _)| e % 2 == 0), || "stand-in looks classical".into())?;
    ensure(j != jones(&vsigma_closure(2)).unwrap(), || "stand-in is vσ^4".into())?;
    Ok("trefoil 1, T(2,5) 2, virtual trefoil 1, genus-2 stand-in 2".into())
}

fn oracle_equivalence() -> Outcome {
    let mut pop: Vec<_> = catalog().into_iter().filter(|d| d.crossing_count() <= 5).collect();
    pop.extend(random_population(77, 200, 5));
    for d in &pop {
        let signed = free_ranks(&khovanov_homology(d, Coeffs::Z2).unwrap());
        ensure(signed == z2_oracle(d), || format!("{d}: {signed:?} vs oracle {:?}", z2_oracle(d)))?;
    }
    Ok(format!("{} diagrams", pop.len()))
}

fn choice_independence_check() -> Outcome {
    let pop = random_population(10, 50, 5);
    for (k, d) in pop.iter().enumerate() {
        let r = choice_independence(d, Coeffs::Z, k as u64).map_err(|e| e.to_string())?;
        ensure(r.all(), || format!("{d}: {r:?}"))?;
    }
    Ok("50 diagrams".into())
}

fn stevedore() -> Outcome {
    let cat = Catalog::bundled();
    let s = cat.get("virtual-stevedore").unwrap();
    let f = cat.get("figure-eight").unwrap();
    ensure(khovanov_homology(&s, Coeffs::Z).unwrap() == khovanov_homology(&f, Coeffs::Z).unwrap(), || {
        "Khovanov tables differ".into()
    })?;
    ensure(lee_filtered_homology(&s).unwrap() == lee_filtered_homology(&f).unwrap(), || "Lee tables differ".into())?;
    let r = rasmussen(&s).unwrap();
    ensure(r.s_bar == 0, || format!("s̄ = {}", r.s_bar))?;
    Ok("Kh, Lee equal to figure-eight; s̄ = 0".into())
}

fn move_invariance() -> Outcome {
    use vkh::diagram::{Role, Sign};
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let pop = random_population(12, 60, 4);
    let mut pairs = 0;
    for d in &pop {
        let arcs = d.semi_arcs().len();
        let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
        let moved = if rng.gen_bool(0.5) {
            let role = if rng.gen_bool(0.5) { Role::Over } else { Role::Under };
            d.apply_r1(rng.gen_range(0..arcs), sign, role)
        } else {
            d.apply_r2(rng.gen_range(0..arcs), rng.gen_range(0..arcs), sign, rng.gen_bool(0.5))
        }
        .map_err(|e| e.to_string())?;
        let (a, b) = (khovanov_homology(d, Coeffs::Z).unwrap(), khovanov_homology(&moved, Coeffs::Z).unwrap());
        ensure(a == b, || format!("{d} vs {moved}"))?;
        pairs += 1;
    }
    Ok(format!("{pairs} pairs"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("differential soundness", differential_soundness),
        ("categorification identity", categorification),
        ("problem square", problem_square),
        ("worked squares", worked_squares),
        ("unit-Jones family", unit_jones),
        ("Lee structure", lee_structure),
        ("Rasmussen values", rasmussen_values),
        ("positive-knot theorem", positive_knots),
        ("oracle equivalence", oracle_equivalence),
        ("choice independence", choice_independence_check),
        ("Z-equivalence and Stevedore", stevedore),
        ("move invariance", move_invariance),
    ];
    let mut failed = vec![];
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
