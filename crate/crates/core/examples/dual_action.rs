// Characters act on a graded algebra by `chi * x = chi(g) x` on the
// component of `g`; averaging recovers homogeneous parts, and subgroups
// of characters correspond to coarsenings.

use graded_sl::cyclo::Mat;
use graded_sl::groups::{annihilator_in_dual, FinAbGroup, Subgroup};
use graded_sl::matalg::{coarsen, epsilon_grading, verify_assoc, Decomposer};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = epsilon_grading(3)?;
    let g = r.group().clone();
    let dec = Decomposer::new(&r)?;
    let x = Mat::from_ints(&[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);

    let chi = g.character(&[1, 2])?;
    let psi = g.character(&[2, 0])?;
    let both = dec.chi_action(&chi.mul(&psi)?, &x)?;
    let nested = dec.chi_action(&chi, &dec.chi_action(&psi, &x)?)?;
    assert_eq!(both, nested);
    println!("({chi} {psi}) * x = {chi} * ({psi} * x)");

    let parts = dec.decompose(&x)?;
    let b = g.elem(&[0, 1])?;
    let projected = dec.homogeneous_projection(&x, &b)?;
    assert_eq!(projected, parts[&b]);
    println!("projection onto {b}:\n{projected:?}");

    // Coarsening by the subgroup generated by a, and the characters that
    // are trivial on it.
    let h = Subgroup::generated(&g, &[g.elem(&[1, 0])?])?;
    let coarse = coarsen(&r, &h)?;
    let lambda = annihilator_in_dual(&g, h.elements())?;
    println!(
        "coarsening by a subgroup of order {}: {} components, |annihilator| = {}",
        h.order(),
        coarse.support().len(),
        lambda.order()
    );
    assert_eq!(h.order() * lambda.order(), FinAbGroup::new(&[3, 3])?.order());
    assert!(verify_assoc(&coarse).passed());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
