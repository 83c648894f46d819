// Type II gradings of sl(n): split each component of an involution
// grading into symmetric and skew parts and shift the symmetric part by
// the marker `h`.

use graded_sl::cyclo::Mat;
use graded_sl::groups::{FinAbGroup, GroupHom};
use graded_sl::invol::{elementary_involution_grading, make_involution, Flavor};
use graded_sl::liegrad::{type2, verify_lie};
use graded_sl::matalg::elementary_grading;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Trivial grading of M_n with the transpose, pushed into Z2.
    let z2 = FinAbGroup::cyclic(2)?;
    let one = FinAbGroup::trivial();
    let h = z2.elem(&[1])?;
    for n in 3..=5 {
        let r =
            elementary_grading(&one, n, &vec![one.identity(); n])?.push_forward(&GroupHom::new(&one, &z2, vec![])?)?;
        let l = type2(&r, &make_involution(&Mat::identity(n))?, &h)?;
        let (d0, d1) = (l.component(&z2.identity()).dim(), l.component(&h).dim());
        println!("sl({n}): dim L_0 = {d0}, dim L_1 = {d1}");
        assert_eq!((d0, d1), (n * (n - 1) / 2, n * (n + 1) / 2 - 1));
    }

    // A symplectic elementary grading by Z4 x Z2.
    let g = FinAbGroup::new(&[4, 2])?;
    let a = g.generator(0);
    let tuple = [g.identity(), a.clone(), a.pow(2), a.clone()];
    let d = elementary_involution_grading(&g, &tuple, Flavor::Symplectic)?;
    let l = type2(&d.grading, &d.involution, &g.generator(1))?;
    for (x, dim) in l.dims() {
        println!("  {x}: {dim}");
    }
    let report = verify_lie(&l);
    println!("{report}");
    assert!(report.passed());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
