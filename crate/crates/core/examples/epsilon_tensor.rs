// The fine epsilon-grading and its tensor product with an elementary
// grading inside one group.

use graded_sl::groups::{FinAbGroup, GroupHom};
use graded_sl::liegrad::tensor_form_grading;
use graded_sl::matalg::{epsilon_grading, tensor_grading, verify_assoc};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fine = epsilon_grading(3)?;
    println!("epsilon grading of M_3: {} components", fine.support().len());
    for g in fine.support().iter().take(4) {
        println!("  {g}: {}", fine.named_basis(g)[0].0);
    }
    assert!(verify_assoc(&fine).passed());

    // Direct product of the groups.
    let prod = tensor_grading(&epsilon_grading(2)?, &epsilon_grading(2)?)?;
    println!(
        "Gamma(2) x Gamma(2) by {}: {} components",
        prod.group(),
        prod.support().len()
    );
    assert!(verify_assoc(&prod).passed());

    // Elementary part by (e, c) in Z3, fine part by Z2 x Z2, all inside
    // Z3 x Z2 x Z2.
    let g = FinAbGroup::new(&[3, 2, 2])?;
    let z22 = FinAbGroup::new(&[2, 2])?;
    let emb = GroupHom::new(&z22, &g, vec![g.generator(1), g.generator(2)])?;
    let tuple = [g.identity(), g.generator(0)];
    let r = tensor_form_grading(&g, &tuple, &[2], &emb)?;
    for (h, d) in r.dims() {
        println!("  {h}: {d}");
    }
    assert_eq!(r.total_dim(), 16);
    assert!(verify_assoc(&r).passed());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
