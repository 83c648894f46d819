// Involutions `X* = Phi^{-1} tX Phi` compatible with gradings: the four
// canonical 2x2 cases and the block forms of elementary gradings.

use graded_sl::cyclo::Subspace;
use graded_sl::groups::FinAbGroup;
use graded_sl::invol::{canonical_l6, elementary_involution_grading, involution_tensor, sym_skew_split, Flavor};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for case in 1..=4 {
        let d = canonical_l6(case)?;
        let sign = d.sign.as_ref().expect("canonical cases carry signs");
        let row: Vec<String> = d
            .grading
            .support()
            .iter()
            .map(|t| format!("{}:{:+}", d.grading.named_basis(t)[0].0, sign.get(t).unwrap_or(0)))
            .collect();
        println!("case {case} ({}): {}", d.involution.symkind().as_str(), row.join(" "));
        assert!(d.verify().passed());
    }

    // g_1^2 = g_2 g_3 in Z4 with one swapped pair.
    let z4 = FinAbGroup::cyclic(4)?;
    let tuple = [z4.identity(), z4.elem(&[1])?, z4.elem(&[3])?];
    let d = elementary_involution_grading(&z4, &tuple, Flavor::Transpose { pairs: 1 })?;
    let (plus, minus) = sym_skew_split(&Subspace::full(9), &d.involution)?;
    println!(
        "transpose-type form on M_3: symmetric {}, skew {}",
        plus.dim(),
        minus.dim()
    );
    assert_eq!((plus.dim(), minus.dim()), (6, 3));

    // Tensor product: form is the Kronecker product, signs multiply.
    let t = involution_tensor(&[canonical_l6(1)?, canonical_l6(3)?])?;
    println!(
        "L6(1) x L6(3): {} on M_{}",
        t.involution.symkind().as_str(),
        t.grading.n()
    );
    assert!(t.verify().passed());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
