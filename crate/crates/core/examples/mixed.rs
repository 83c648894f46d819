// Type II gradings of an elementary involution grading tensored with a
// fine one, written out basis element by basis element.

use graded_sl::groups::{FinAbGroup, GroupHom};
use graded_sl::invol::{elementary_involution_grading, Flavor};
use graded_sl::liegrad::{mixed_involution_grading, mixed_type2, type2, verify_lie};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Z2 x (Z2 x Z2) x Z2: elementary part, fine part, marker.
    let g = FinAbGroup::new(&[2, 2, 2, 2])?;
    let elem = elementary_involution_grading(&g, &[g.identity(), g.generator(0)], Flavor::Transpose { pairs: 0 })?;
    let t = FinAbGroup::new(&[2, 2])?;
    let emb = GroupHom::new(&t, &g, vec![g.generator(1), g.generator(2)])?;
    let h = g.generator(3);
    for case in 1..=4 {
        let l = mixed_type2(Some(&elem), &[case], &g, &h, &emb)?;
        let ig = mixed_involution_grading(Some(&elem), &[case], &g, &emb)?;
        let oracle = type2(&ig.grading, &ig.involution, &h)?;
        assert!(l.same_components(&oracle));
        let report = verify_lie(&l);
        println!("case {case}: {} components, {report}", l.support().len());
        assert!(report.passed());
    }
    let l = mixed_type2(Some(&elem), &[2], &g, &h, &emb)?;
    for x in l.support().iter().take(4) {
        let names: Vec<String> = l.named_basis(x).into_iter().map(|(s, _)| s).collect();
        println!("  {x}: {}", names.join(", "));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
