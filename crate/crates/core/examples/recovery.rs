// Coarsen a grading by a subgroup {e, h} and recover it from the factor
// using the dual action of a character with phi(h) = -1, written as
// `X -> -Phi^{-1} tX Phi`.

use graded_sl::groups::{quotient, FinAbGroup, GroupHom, Subgroup};
use graded_sl::liegrad::{fine_outer, OuterDatum};
use graded_sl::matalg::coarsen;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = FinAbGroup::new(&[2, 2, 2, 2])?;
    let g = t.direct_product(&FinAbGroup::cyclic(2)?);
    let emb = GroupHom::new(&t, &g, (0..4).map(|i| g.generator(i)).collect())?;
    let h = g.generator(4);
    let l = fine_outer(&[2, 4], &g, &h, &emb)?;

    let phi = g.character(&[0, 0, 0, 0, 1])?;
    let datum = OuterDatum::from_dual_action(&l, &h, &phi)?;
    println!("form of the dual action of {phi}:\n{:?}", datum.form());
    assert!(datum.check_antihomomorphism());

    let sub = Subgroup::generated(&g, std::slice::from_ref(&h))?;
    let q = quotient(&g, &sub)?;
    let factor = coarsen(&l, &sub)?;
    println!(
        "factor by <{h}>: {} components over {}",
        factor.support().len(),
        factor.group()
    );
    let back = datum.recover(&factor, &q)?;
    assert!(back.same_components(&l));
    println!("recovered all {} components", back.support().len());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
