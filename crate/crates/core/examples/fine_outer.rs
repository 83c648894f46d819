// Fine gradings of sl(2^k) from products of the canonical 2x2 cases, with
// the marker outside or inside the fine group.

use graded_sl::groups::{FinAbGroup, GroupHom};
use graded_sl::liegrad::{fine_involution_grading, fine_outer, type2, verify_lie};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = FinAbGroup::new(&[2, 2])?;
    let g = t.direct_product(&FinAbGroup::cyclic(2)?);
    let emb = GroupHom::new(&t, &g, vec![g.generator(0), g.generator(1)])?;
    let h = g.generator(2);
    for case in 1..=4 {
        let l = fine_outer(&[case], &g, &h, &emb)?;
        let rows: Vec<String> = l
            .support()
            .iter()
            .map(|x| format!("{x}:{}", l.named_basis(x)[0].0))
            .collect();
        println!("case {case}, h outside: {}", rows.join(" "));
        let ig = fine_involution_grading(&[case], &g, &emb)?;
        assert!(l.same_components(&type2(&ig.grading, &ig.involution, &h)?));
    }

    // h = a inside the fine group of L6(1) x L6(3).
    let t2 = FinAbGroup::new(&[2, 2, 2, 2])?;
    let id = GroupHom::identity(&t2);
    let h = t2.generator(0);
    let l = fine_outer(&[1, 3], &t2, &h, &id)?;
    let ig = fine_involution_grading(&[1, 3], &t2, &id)?;
    assert!(l.same_components(&type2(&ig.grading, &ig.involution, &h)?));
    println!("sl(4), h = {h}: {} components, {}", l.support().len(), verify_lie(&l));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
