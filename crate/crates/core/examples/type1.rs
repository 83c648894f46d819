// Type I gradings of sl(n): restrict an associative grading to the
// traceless matrices, here compared with the explicit tensor-form basis.

use graded_sl::groups::{FinAbGroup, GroupHom};
use graded_sl::liegrad::{tensor_form_grading, type1, type1_obstruction, type1_tensor_form, verify_lie};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = FinAbGroup::new(&[3, 2, 2])?;
    let z22 = FinAbGroup::new(&[2, 2])?;
    let emb = GroupHom::new(&z22, &g, vec![g.generator(1), g.generator(2)])?;
    let tuple = [g.identity(), g.generator(0), g.generator(0).pow(2)];

    let assoc = tensor_form_grading(&g, &tuple, &[2], &emb)?;
    let restricted = type1(&assoc)?;
    let explicit = type1_tensor_form(&g, &tuple, &[2], &emb)?;
    assert!(restricted.same_components(&explicit));
    for h in explicit.support().iter().take(3) {
        let names: Vec<String> = explicit.named_basis(h).into_iter().map(|(s, _)| s).collect();
        println!("{h}: {}", names.join(", "));
    }
    let report = verify_lie(&explicit);
    println!("sl(6): {report}");
    assert!(report.passed());

    for n in 2..=6 {
        println!("{}", type1_obstruction(n));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
